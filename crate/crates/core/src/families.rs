//! Instance families with known greedy and optimum values, plus seeded
//! random interval and chordal graphs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::interval::IntervalRepresentation;
use crate::{Error, Graph, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    IntervalTight,
    ChordalTight,
    Permutation,
    TwoTrack,
    RandomInterval,
    RandomChordal,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::IntervalTight,
        Family::ChordalTight,
        Family::Permutation,
        Family::TwoTrack,
        Family::RandomInterval,
        Family::RandomChordal,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::IntervalTight => "interval-tight",
            Family::ChordalTight => "chordal-tight",
            Family::Permutation => "permutation",
            Family::TwoTrack => "two-track",
            Family::RandomInterval => "random-interval",
            Family::RandomChordal => "random-chordal",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(self, Family::RandomInterval | Family::RandomChordal)
    }

    /// Smallest accepted parameter.
    pub fn min_parameter(self) -> usize {
        match self {
            Family::IntervalTight | Family::RandomInterval | Family::RandomChordal => 1,
            Family::ChordalTight => 2,
            Family::Permutation | Family::TwoTrack => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    Interval(IntervalRepresentation),
    /// One interval model per edge set; the graph is their edge union.
    TwoTrack {
        first: IntervalRepresentation,
        second: IntervalRepresentation,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    /// `k` for the structured families, `n` for the random ones.
    pub parameter: usize,
    pub seed: Option<u64>,
    pub graph: Graph,
    pub representation: Option<Representation>,
    /// A full label ranking for the scripted policy that realizes
    /// `expected_greedy`.
    pub adversarial_script: Option<Vec<usize>>,
    pub optimum_certificate: Option<VertexSet>,
    pub expected_greedy: Option<usize>,
    pub expected_opt: Option<usize>,
}

impl FamilyInstance {
    pub fn interval_representation(&self) -> Option<&IntervalRepresentation> {
        match &self.representation {
            Some(Representation::Interval(rep)) => Some(rep),
            _ => None,
        }
    }
}

fn check_parameter(family: Family, k: usize) -> Result<()> {
    if k < family.min_parameter() {
        Err(Error::InvalidParameter(format!(
            "{family} needs a parameter of at least {}, got {k}",
            family.min_parameter()
        )))
    } else {
        Ok(())
    }
}

/// `first` in the given order, then every other label ascending.
fn script_with_leaders(n: usize, first: &[usize]) -> Vec<usize> {
    let leaders: VertexSet = first.iter().copied().collect();
    first.iter().copied().chain((0..n).filter(|v| !leaders.contains(*v))).collect()
}

/// `k` three-vertex paths alternating with `k + 1` triangles, as unit
/// intervals of length 10 on an integer grid.
///
/// Triangle `i` occupies `[x, x+10]`, `[x+1, x+11]`, `[x+2, x+12]`; only its
/// first and last intervals touch the neighboring paths. A path is
/// `[p, p+10]`, `[p+10, p+20]`, `[p+20, p+30]` with the grey vertex in the
/// middle. Labels follow left endpoints: triangle `i` is `6i..6i+3`, path
/// `i + 1` is `6i+3..6i+6`.
pub fn interval_tight(k: usize) -> Result<FamilyInstance> {
    check_parameter(Family::IntervalTight, k)?;
    let mut bounds = Vec::with_capacity(6 * k + 3);
    let mut x = 0i64;
    for i in 0..=k {
        bounds.extend([(x, x + 10), (x + 1, x + 11), (x + 2, x + 12)]);
        if i < k {
            let p = x + 12;
            bounds.extend([(p, p + 10), (p + 10, p + 20), (p + 20, p + 30)]);
            x = p + 30;
        }
    }
    let rep = IntervalRepresentation::from_integers(&bounds)?;
    let greys: Vec<usize> = (0..k).map(|i| 6 * i + 4).collect();
    let certificate = std::iter::once(0)
        .chain((1..=k).map(|i| 6 * i + 1))
        .chain((0..k).flat_map(|i| [6 * i + 3, 6 * i + 5]))
        .collect();
    Ok(FamilyInstance {
        family: Family::IntervalTight,
        parameter: k,
        seed: None,
        graph: rep.graph(),
        adversarial_script: Some(script_with_leaders(6 * k + 3, &greys)),
        representation: Some(Representation::Interval(rep)),
        optimum_certificate: Some(certificate),
        expected_greedy: Some(2 * k + 1),
        expected_opt: Some(3 * k + 1),
    })
}

/// Label of `u` in [`chordal_tight`].
pub const CHORDAL_TIGHT_HUB: usize = 0;

/// Labels `(v_i, w_i)` of the removed edge in clique `i` of
/// [`chordal_tight`]`(k)`, for `i` in `0..k`.
pub fn chordal_tight_pair(k: usize, i: usize) -> (usize, usize) {
    let base = 1 + i * (k + 2);
    (base, base + 1)
}

/// `k` cliques of size `k + 2`, each missing one edge `{v_i, w_i}`, plus a
/// hub `u` adjacent to every `v_i`.
pub fn chordal_tight(k: usize) -> Result<FamilyInstance> {
    check_parameter(Family::ChordalTight, k)?;
    let n = k * (k + 2) + 1;
    let mut edges = Vec::new();
    for i in 0..k {
        let base = 1 + i * (k + 2);
        let (v, w) = chordal_tight_pair(k, i);
        for a in base..base + k + 2 {
            for b in a + 1..base + k + 2 {
                if (a, b) != (v, w) {
                    edges.push((a, b));
                }
            }
        }
        edges.push((CHORDAL_TIGHT_HUB, v));
    }
    let certificate = (0..k)
        .flat_map(|i| {
            let (v, w) = chordal_tight_pair(k, i);
            [v, w]
        })
        .collect();
    Ok(FamilyInstance {
        family: Family::ChordalTight,
        parameter: k,
        seed: None,
        graph: Graph::from_edges(n, edges)?,
        representation: None,
        adversarial_script: Some(script_with_leaders(n, &[CHORDAL_TIGHT_HUB])),
        optimum_certificate: Some(certificate),
        expected_greedy: Some(k + 1),
        expected_opt: Some(2 * k),
    })
}

/// The defining permutation of [`permutation_family`], as 0-based labels:
/// `v_{k+1}, ..., v_{2k}, v_1, v_k, v_{k-1}, ..., v_2`.
pub fn permutation_order(k: usize) -> Vec<usize> {
    (k..2 * k).chain([0]).chain((1..k).rev()).collect()
}

/// Permutation graph on `2k` vertices: labels `i < j` are adjacent iff `j`
/// comes before `i` in [`permutation_order`].
pub fn permutation_family(k: usize) -> Result<FamilyInstance> {
    check_parameter(Family::Permutation, k)?;
    let n = 2 * k;
    let mut position = vec![0; n];
    for (p, &v) in permutation_order(k).iter().enumerate() {
        position[v] = p;
    }
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges: Vec<_> = edges.filter(|&(i, j)| position[j] < position[i]).collect();
    Ok(FamilyInstance {
        family: Family::Permutation,
        parameter: k,
        seed: None,
        graph: Graph::from_edges(n, edges)?,
        representation: None,
        adversarial_script: Some(script_with_leaders(n, &[0])),
        optimum_certificate: Some((k..n).collect()),
        expected_greedy: Some(2),
        expected_opt: Some(k),
    })
}

/// Edge union of two interval graphs on `2k` vertices. Label 0 is `u_1`,
/// labels `1..=k` form the independent set and `k+1..2k` form `X`.
///
/// The first track is a long interval for `u_1` covering `k` disjoint unit
/// intervals, with `X` parked far to the right. The second track nests the
/// `X` intervals over the same unit intervals and parks `u_1`.
pub fn two_track_family(k: usize) -> Result<FamilyInstance> {
    check_parameter(Family::TwoTrack, k)?;
    let n = 2 * k;
    let ki = k as i64;
    let unit = |i: usize| {
        let lo = 2 * (i as i64 - 1);
        (lo, lo + 1)
    };
    let first: Vec<(i64, i64)> = std::iter::once((0, 2 * ki))
        .chain((1..=k).map(unit))
        .chain((1..k as i64).map(|j| (4 * ki + 2 * j, 4 * ki + 2 * j + 1)))
        .collect();
    let second: Vec<(i64, i64)> = std::iter::once((4 * ki, 4 * ki + 1))
        .chain((1..=k).map(unit))
        .chain((1..k as i64).map(|j| (-j, 2 * ki + j)))
        .collect();
    let first = IntervalRepresentation::from_integers(&first)?;
    let second = IntervalRepresentation::from_integers(&second)?;
    let edges = first.graph().edges().into_iter().chain(second.graph().edges());
    Ok(FamilyInstance {
        family: Family::TwoTrack,
        parameter: k,
        seed: None,
        graph: Graph::from_edges(n, edges)?,
        representation: Some(Representation::TwoTrack { first, second }),
        adversarial_script: Some(script_with_leaders(n, &[0])),
        optimum_certificate: Some((1..=k).collect()),
        expected_greedy: Some(2),
        expected_opt: Some(k),
    })
}

/// `n` random intervals on the integer grid `[0, 4n]`.
///
/// Each instance first draws a length cap in `1..=4n`, then each interval a
/// left endpoint and a length up to the cap, so seeds range from sparse to
/// dense. Labels follow left endpoints.
pub fn random_interval(n: usize, seed: u64) -> Result<FamilyInstance> {
    check_parameter(Family::RandomInterval, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = 4 * n as i64;
    let cap = rng.gen_range(1..=grid);
    let mut bounds: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let lo = rng.gen_range(0..=grid);
            let len = rng.gen_range(0..=cap);
            (lo, (lo + len).min(grid))
        })
        .collect();
    bounds.sort_unstable();
    let rep = IntervalRepresentation::from_integers(&bounds)?;
    Ok(FamilyInstance {
        family: Family::RandomInterval,
        parameter: n,
        seed: Some(seed),
        graph: rep.graph(),
        representation: Some(Representation::Interval(rep)),
        adversarial_script: None,
        optimum_certificate: None,
        expected_greedy: None,
        expected_opt: None,
    })
}

/// Connected random chordal graph. Vertex `v` is joined to a random
/// nonempty clique among `0..v`: a random anchor plus a random subset of
/// its earlier neighbors that stays a clique. Reversed label order is a
/// perfect elimination ordering.
pub fn random_chordal(n: usize, seed: u64) -> Result<FamilyInstance> {
    check_parameter(Family::RandomChordal, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![VertexSet::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = VertexSet::singleton(anchor);
        let mut pool = adj[anchor].to_vec();
        pool.shuffle(&mut rng);
        for c in pool {
            if rng.gen_bool(0.5) && clique.is_subset(&adj[c]) {
                clique.insert(c);
            }
        }
        for u in &clique {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
    }
    Ok(FamilyInstance {
        family: Family::RandomChordal,
        parameter: n,
        seed: Some(seed),
        graph: Graph::from_edges(n, edges)?,
        representation: None,
        adversarial_script: None,
        optimum_certificate: None,
        expected_greedy: None,
        expected_opt: None,
    })
}

/// Dispatches on `family`. `seed` is required by the random families and
/// ignored otherwise.
pub fn generate(family: Family, parameter: usize, seed: Option<u64>) -> Result<FamilyInstance> {
    match family {
        Family::IntervalTight => interval_tight(parameter),
        Family::ChordalTight => chordal_tight(parameter),
        Family::Permutation => permutation_family(parameter),
        Family::TwoTrack => two_track_family(parameter),
        Family::RandomInterval => random_interval(parameter, seed.unwrap_or(0)),
        Family::RandomChordal => random_chordal(parameter, seed.unwrap_or(0)),
    }
}
