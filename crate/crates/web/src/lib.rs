//! WebAssembly bindings for the browser demo. Each exported function takes
//! plain arguments and returns a JSON string; the `*_json` functions hold
//! the logic and run natively in tests.

use greedy_mis::chordal::is_chordal;
use greedy_mis::families::{generate, Family, FamilyInstance, Representation};
use greedy_mis::greedy::{greedy_run_with_limit, TieBreakPolicy, DEFAULT_EXHAUSTIVE_LIMIT};
use greedy_mis::interval::IntervalRepresentation;
use greedy_mis::ledger::{classify, ratio_bound_from_counts};
use greedy_mis::mis::{mis_exact, DEFAULT_EXACT_LIMIT};
use greedy_mis::{Rational, VertexSet};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest parameter the page accepts, keeping every call interactive.
const MAX_PARAMETER: usize = 40;

#[derive(Serialize)]
struct Ratio {
    num: i64,
    den: i64,
    /// For display only.
    value: f64,
}

impl From<Rational> for Ratio {
    fn from(r: Rational) -> Self {
        Self { num: *r.numer(), den: *r.denom(), value: *r.numer() as f64 / *r.denom() as f64 }
    }
}

/// Drawing coordinates `[lo, hi]` per label.
type Spans = Vec<(f64, f64)>;

#[derive(Serialize)]
struct InstanceView {
    family: Family,
    parameter: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
    intervals: Option<Spans>,
    tracks: Option<(Spans, Spans)>,
    certificate: Option<Vec<usize>>,
    expected_greedy: Option<usize>,
    expected_opt: Option<usize>,
    chordal: bool,
}

#[derive(Serialize)]
struct Step {
    vertex: usize,
    degree: usize,
    tie_set_size: usize,
    /// Members of the reference optimum still present in `N[vertex]`.
    j: usize,
    /// Labels deleted by this pick.
    removed: Vec<usize>,
    components_before: usize,
    components_after: usize,
}

#[derive(Serialize)]
struct RunView {
    policy: String,
    steps: Vec<Step>,
    solution: Vec<usize>,
    optimum: Vec<usize>,
    greedy: usize,
    opt: usize,
    ratio: Ratio,
    counts: Vec<usize>,
    bound: Ratio,
}

#[derive(Serialize)]
struct SweepPoint {
    k: usize,
    greedy: usize,
    opt: usize,
    ratio: Ratio,
}

fn draw_spans(rep: &IntervalRepresentation) -> Spans {
    let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
    rep.intervals().iter().map(|i| (f(i.lo), f(i.hi))).collect()
}

fn instance(family: &str, parameter: usize, seed: u64) -> Result<FamilyInstance, String> {
    let family: Family = family.parse().map_err(|e: greedy_mis::Error| e.to_string())?;
    if parameter > MAX_PARAMETER {
        return Err(format!("parameter {parameter} is above the demo limit of {MAX_PARAMETER}"));
    }
    generate(family, parameter, Some(seed)).map_err(|e| e.to_string())
}

fn policy(tag: &str, inst: &FamilyInstance, seed: u64) -> Result<TieBreakPolicy, String> {
    Ok(match tag {
        "first_label" => TieBreakPolicy::FirstLabel,
        "scripted" => {
            TieBreakPolicy::Scripted(inst.adversarial_script.clone().ok_or("this family has no adversarial script")?)
        }
        "seeded_random" => TieBreakPolicy::SeededRandom(seed),
        "simplicial_first" => TieBreakPolicy::SimplicialFirst,
        "adversarial" => TieBreakPolicy::AdversarialExhaustive,
        "benevolent" => TieBreakPolicy::BenevolentExhaustive,
        other => return Err(format!("unknown policy {other:?}")),
    })
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den.max(1) as i64)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("view types serialize")
}

/// Instance layout for drawing.
pub fn generate_json(family: &str, parameter: usize, seed: u64) -> Result<String, String> {
    let inst = instance(family, parameter, seed)?;
    let (intervals, tracks) = match &inst.representation {
        Some(Representation::Interval(rep)) => (Some(draw_spans(rep)), None),
        Some(Representation::TwoTrack { first, second }) => (None, Some((draw_spans(first), draw_spans(second)))),
        None => (None, None),
    };
    Ok(to_json(&InstanceView {
        family: inst.family,
        parameter: inst.parameter,
        n: inst.graph.n_labels(),
        edges: inst.graph.edges(),
        intervals,
        tracks,
        certificate: inst.optimum_certificate.as_ref().map(VertexSet::to_vec),
        expected_greedy: inst.expected_greedy,
        expected_opt: inst.expected_opt,
        chordal: is_chordal(&inst.graph),
    }))
}

/// A full greedy run with each pick classified against an optimum.
pub fn run_json(
    family: &str,
    parameter: usize,
    seed: u64,
    policy_tag: &str,
    policy_seed: u64,
) -> Result<String, String> {
    let inst = instance(family, parameter, seed)?;
    let g = &inst.graph;
    let p = policy(policy_tag, &inst, policy_seed)?;
    let trace = greedy_run_with_limit(g, &p, DEFAULT_EXHAUSTIVE_LIMIT).map_err(|e| e.to_string())?;
    let optimum = mis_exact(g, DEFAULT_EXACT_LIMIT).map_err(|e| e.to_string())?;
    let reference = match &inst.optimum_certificate {
        Some(c) if c.len() == optimum.size => c.clone(),
        _ => optimum.set,
    };
    let ledger = classify(g, &trace, &reference).map_err(|e| e.to_string())?;
    let mut rest = g.clone();
    let mut steps = Vec::with_capacity(trace.len());
    for (pick, record) in trace.picks.iter().zip(&ledger.records) {
        let removed = rest.closed_neighborhood(pick.vertex).map_err(|e| e.to_string())?;
        rest = rest.delete_closed_neighborhood(pick.vertex).map_err(|e| e.to_string())?;
        steps.push(Step {
            vertex: pick.vertex,
            degree: pick.degree,
            tie_set_size: pick.tie_set_size,
            j: record.j,
            removed: removed.to_vec(),
            components_before: pick.components_before,
            components_after: pick.components_after,
        });
    }
    Ok(to_json(&RunView {
        policy: policy_tag.to_string(),
        greedy: trace.len(),
        opt: reference.len(),
        ratio: ratio(trace.len(), reference.len()).into(),
        bound: ratio_bound_from_counts(&ledger.counts).into(),
        counts: ledger.counts,
        solution: trace.solution.to_vec(),
        optimum: reference.to_vec(),
        steps,
    }))
}

/// Scripted greedy against the optimum for each parameter in range.
pub fn sweep_json(family: &str, kmin: usize, kmax: usize) -> Result<String, String> {
    if kmin > kmax {
        return Err(format!("empty range {kmin}..={kmax}"));
    }
    let mut points = Vec::new();
    for k in kmin..=kmax {
        let inst = instance(family, k, 0)?;
        let p = match &inst.adversarial_script {
            Some(script) => TieBreakPolicy::Scripted(script.clone()),
            None => TieBreakPolicy::AdversarialExhaustive,
        };
        let greedy = greedy_run_with_limit(&inst.graph, &p, DEFAULT_EXHAUSTIVE_LIMIT).map_err(|e| e.to_string())?.len();
        let opt = mis_exact(&inst.graph, DEFAULT_EXACT_LIMIT).map_err(|e| e.to_string())?.size;
        points.push(SweepPoint { k, greedy, opt, ratio: ratio(greedy, opt).into() });
    }
    Ok(to_json(&points))
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generate_instance(family: &str, parameter: usize, seed: u64) -> Result<String, JsError> {
    js(generate_json(family, parameter, seed))
}

#[wasm_bindgen]
pub fn run_greedy(
    family: &str,
    parameter: usize,
    seed: u64,
    policy: &str,
    policy_seed: u64,
) -> Result<String, JsError> {
    js(run_json(family, parameter, seed, policy, policy_seed))
}

#[wasm_bindgen]
pub fn sweep(family: &str, kmin: usize, kmax: usize) -> Result<String, JsError> {
    js(sweep_json(family, kmin, kmax))
}
