//! Instance directories.
//!
//! ```text
//! graph.txt         edge list: `n m`, then one `u v` per edge
//! intervals.json    interval records, for interval families
//! track1.json       first-track interval records, for two-track
//! track2.json       second-track interval records, for two-track
//! script.txt        adversarial ranking, one label per line
//! certificate.txt   optimum independent set, one label per line
//! meta.json         family, parameter, seed and expected sizes
//! ```
//!
//! Only `graph.txt` is required when loading. A bare edge-list file is
//! also accepted in place of a directory.

use std::fs;
use std::path::{Path, PathBuf};

use greedy_mis::families::{Family, FamilyInstance, Representation};
use greedy_mis::interval::{IntervalRecord, IntervalRepresentation};
use greedy_mis::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::{to_json, CliError, SCHEMA_VERSION};

pub const GRAPH_FILE: &str = "graph.txt";
pub const INTERVALS_FILE: &str = "intervals.json";
pub const TRACK1_FILE: &str = "track1.json";
pub const TRACK2_FILE: &str = "track2.json";
pub const SCRIPT_FILE: &str = "script.txt";
pub const CERTIFICATE_FILE: &str = "certificate.txt";
pub const META_FILE: &str = "meta.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub schema_version: u32,
    pub family: Option<Family>,
    pub parameter: Option<usize>,
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub expected_greedy: Option<usize>,
    pub expected_opt: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub meta: Meta,
    pub graph: Graph,
    pub intervals: Option<IntervalRepresentation>,
    pub tracks: Option<(IntervalRepresentation, IntervalRepresentation)>,
    pub script: Option<Vec<usize>>,
    pub certificate: Option<VertexSet>,
}

impl Instance {
    /// A graph with no metadata beyond its size.
    pub fn bare(graph: Graph) -> Self {
        Self {
            meta: Meta {
                schema_version: SCHEMA_VERSION,
                family: None,
                parameter: None,
                seed: None,
                n: graph.n_labels(),
                m: graph.edge_count(),
                expected_greedy: None,
                expected_opt: None,
            },
            graph,
            intervals: None,
            tracks: None,
            script: None,
            certificate: None,
        }
    }

    pub fn from_family(f: &FamilyInstance) -> Self {
        let mut inst = Self::bare(f.graph.clone());
        inst.meta.family = Some(f.family);
        inst.meta.parameter = Some(f.parameter);
        inst.meta.seed = f.seed;
        inst.meta.expected_greedy = f.expected_greedy;
        inst.meta.expected_opt = f.expected_opt;
        match &f.representation {
            Some(Representation::Interval(rep)) => inst.intervals = Some(rep.clone()),
            Some(Representation::TwoTrack { first, second }) => inst.tracks = Some((first.clone(), second.clone())),
            None => {}
        }
        inst.script = f.adversarial_script.clone();
        inst.certificate = f.optimum_certificate.clone();
        inst
    }

    /// Writes every file this instance has; returns the paths written.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
        fs::create_dir_all(dir)?;
        let mut files = vec![(GRAPH_FILE, self.graph.to_edge_list())];
        if let Some(rep) = &self.intervals {
            files.push((INTERVALS_FILE, to_json(&rep.records())));
        }
        if let Some((first, second)) = &self.tracks {
            files.push((TRACK1_FILE, to_json(&first.records())));
            files.push((TRACK2_FILE, to_json(&second.records())));
        }
        if let Some(script) = &self.script {
            files.push((SCRIPT_FILE, label_lines(script.iter().copied())));
        }
        if let Some(cert) = &self.certificate {
            files.push((CERTIFICATE_FILE, label_lines(cert.iter())));
        }
        files.push((META_FILE, to_json(&self.meta)));
        let mut written = Vec::new();
        for (name, text) in files {
            let path = dir.join(name);
            fs::write(&path, text)?;
            written.push(path);
        }
        Ok(written)
    }

    /// Loads an instance directory or a bare edge-list file, checking that
    /// every optional file agrees with the graph.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        if path.is_file() {
            return Ok(Self::bare(Graph::parse_edge_list(&read(path)?)?));
        }
        if !path.is_dir() {
            return Err(CliError::usage(format!("{}: no such instance", path.display())));
        }
        let graph = Graph::parse_edge_list(&read(&path.join(GRAPH_FILE))?)?;
        let mut inst = Self::bare(graph);
        let meta_path = path.join(META_FILE);
        if meta_path.exists() {
            let meta: Meta = serde_json::from_str(&read(&meta_path)?)?;
            if (meta.n, meta.m) != (inst.meta.n, inst.meta.m) {
                return Err(CliError::usage(format!(
                    "{META_FILE} says n={} m={}, {GRAPH_FILE} has n={} m={}",
                    meta.n, meta.m, inst.meta.n, inst.meta.m
                )));
            }
            inst.meta = meta;
        }
        let g = &inst.graph;
        if let Some(rep) = load_intervals(&path.join(INTERVALS_FILE))? {
            if !rep.validate_representation(g) {
                return Err(CliError::usage(format!("{INTERVALS_FILE} does not represent {GRAPH_FILE}")));
            }
            inst.intervals = Some(rep);
        }
        let first = load_intervals(&path.join(TRACK1_FILE))?;
        let second = load_intervals(&path.join(TRACK2_FILE))?;
        match (first, second) {
            (Some(a), Some(b)) => {
                let union = a.graph().edges().into_iter().chain(b.graph().edges());
                if a.len() != g.n_labels() || Graph::from_edges(g.n_labels(), union)?.edges() != g.edges() {
                    return Err(CliError::usage("the two tracks do not add up to the graph"));
                }
                inst.tracks = Some((a, b));
            }
            (None, None) => {}
            _ => return Err(CliError::usage(format!("{TRACK1_FILE} and {TRACK2_FILE} come as a pair"))),
        }
        if let Some(script) = load_labels(&path.join(SCRIPT_FILE))? {
            inst.script = Some(script);
        }
        if let Some(labels) = load_labels(&path.join(CERTIFICATE_FILE))? {
            let cert: VertexSet = labels.into_iter().collect();
            if !inst.graph.is_independent_set(&cert)? {
                return Err(CliError::usage(format!("{CERTIFICATE_FILE} is not an independent set")));
            }
            inst.certificate = Some(cert);
        }
        Ok(inst)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn label_lines(labels: impl Iterator<Item = usize>) -> String {
    labels.map(|v| format!("{v}\n")).collect()
}

fn load_intervals(path: &Path) -> Result<Option<IntervalRepresentation>, CliError> {
    if !path.exists() {
        return Ok(None);
    }
    let records: Vec<IntervalRecord> = serde_json::from_str(&read(path)?)?;
    Ok(Some(IntervalRepresentation::from_records(&records)?))
}

fn load_labels(path: &Path) -> Result<Option<Vec<usize>>, CliError> {
    if !path.exists() {
        return Ok(None);
    }
    read(path)?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| CliError::usage(format!("{}: bad label {t:?}", path.display()))))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use greedy_mis::families::{generate, Family};

    #[test]
    fn every_family_round_trips_through_a_directory() {
        let dir = tempfile::tempdir().unwrap();
        for family in Family::ALL {
            let k = family.min_parameter() + 2;
            let inst = Instance::from_family(&generate(family, k, Some(3)).unwrap());
            let path = dir.path().join(family.tag());
            inst.write(&path).unwrap();
            assert_eq!(Instance::load(&path).unwrap(), inst, "{family}");
        }
    }

    #[test]
    fn bare_edge_list_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        fs::write(&path, "# a path\n3 2\n0 1\n1 2\n").unwrap();
        let inst = Instance::load(&path).unwrap();
        assert_eq!(inst.graph.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(inst.meta.family, None);
    }

    #[test]
    fn inconsistent_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let inst = Instance::from_family(&generate(Family::IntervalTight, 1, None).unwrap());
        inst.write(dir.path()).unwrap();
        fs::write(dir.path().join(CERTIFICATE_FILE), "0\n1\n").unwrap();
        assert!(Instance::load(dir.path()).is_err());
        inst.write(dir.path()).unwrap();
        fs::write(dir.path().join(INTERVALS_FILE), to_json(&inst.intervals.as_ref().unwrap().records()[..8].to_vec()))
            .unwrap();
        assert!(Instance::load(dir.path()).is_err());
        fs::remove_file(dir.path().join(INTERVALS_FILE)).unwrap();
        fs::write(dir.path().join(GRAPH_FILE), "9 1\n0 1\n").unwrap();
        assert!(Instance::load(dir.path()).is_err());
    }
}
