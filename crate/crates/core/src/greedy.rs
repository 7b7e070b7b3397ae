//! The minimum-degree greedy algorithm and its tie-breaking policies.
//!
//! Each step picks a vertex of minimum degree in the remaining graph, adds
//! it to the solution and deletes its closed neighborhood. Policies differ
//! only in which minimum-degree vertex they take. The exhaustive variants
//! search over every valid execution, memoized on the remaining vertex set.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chordal::is_simplicial;
use crate::{Error, Graph, Result, VertexSet};

/// Default cap on present vertices for the exhaustive searches.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreakPolicy {
    /// Smallest label among the minimum-degree vertices.
    FirstLabel,
    /// Minimum-degree vertex ranked earliest; the list must rank every label.
    Scripted(Vec<usize>),
    /// Uniform choice from the tie set, drawn from ChaCha8 seeded with
    /// `seed_from_u64`, so runs reproduce on every platform.
    SeededRandom(u64),
    /// Smallest-label simplicial vertex of minimum degree, else smallest label.
    SimplicialFirst,
    /// An execution of minimum solution size.
    AdversarialExhaustive,
    /// An execution of maximum solution size.
    BenevolentExhaustive,
}

impl TieBreakPolicy {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, Self::AdversarialExhaustive | Self::BenevolentExhaustive)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pick {
    pub vertex: usize,
    pub degree: usize,
    pub tie_set_size: usize,
    pub components_before: usize,
    pub components_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub picks: Vec<Pick>,
    pub solution: VertexSet,
}

impl GreedyTrace {
    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.picks.iter().map(|p| p.vertex).collect()
    }
}

/// Builds the trace of a pick sequence, rejecting any pick that is absent
/// or not of minimum degree, and any sequence that leaves vertices behind.
pub fn trace_from_picks(g: &Graph, vertices: &[usize]) -> Result<GreedyTrace> {
    let mut rest = g.clone();
    let mut picks = Vec::with_capacity(vertices.len());
    for &v in vertices {
        let ties = rest.min_degree_vertices().map_err(|_| Error::InvalidVertex(v))?;
        if !ties.contains(v) {
            return Err(Error::InvalidInput(format!("vertex {v} is not of minimum degree at step {}", picks.len())));
        }
        let degree = rest.degree(v)?;
        let components_before = rest.component_count();
        rest = rest.delete_closed_neighborhood(v)?;
        picks.push(Pick {
            vertex: v,
            degree,
            tie_set_size: ties.len(),
            components_before,
            components_after: rest.component_count(),
        });
    }
    if !rest.is_empty() {
        return Err(Error::InvalidInput(format!("{} vertices remain after the last pick", rest.order())));
    }
    Ok(GreedyTrace { solution: vertices.iter().copied().collect(), picks })
}

/// Replays `t` on `g` and checks every recorded field.
pub fn validate_trace(g: &Graph, t: &GreedyTrace) -> bool {
    trace_from_picks(g, &t.vertices()).is_ok_and(|replayed| &replayed == t)
}

fn scripted_ranks(g: &Graph, preference: &[usize]) -> Result<Vec<usize>> {
    let n = g.n_labels();
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in preference.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return Err(Error::InvalidInput(format!("script entry {v} is out of range or repeated")));
        }
        rank[v] = i;
    }
    if preference.len() != n {
        return Err(Error::InvalidInput(format!("script ranks {} of {n} labels", preference.len())));
    }
    Ok(rank)
}

pub(crate) fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        Err(Error::SizeLimit { what: "present vertex count", size: g.order(), limit })
    } else {
        Ok(())
    }
}

/// Runs greedy with `policy`, using [`DEFAULT_EXHAUSTIVE_LIMIT`] for the
/// exhaustive variants.
pub fn greedy_run(g: &Graph, policy: &TieBreakPolicy) -> Result<GreedyTrace> {
    greedy_run_with_limit(g, policy, DEFAULT_EXHAUSTIVE_LIMIT)
}

/// Picks one vertex from the tie set of the current graph.
type Chooser<'a> = Box<dyn FnMut(&Graph, &VertexSet) -> usize + 'a>;

pub fn greedy_run_with_limit(g: &Graph, policy: &TieBreakPolicy, limit: usize) -> Result<GreedyTrace> {
    let mut choose: Chooser = match policy {
        TieBreakPolicy::FirstLabel => Box::new(|_, ties| ties.first().unwrap()),
        TieBreakPolicy::Scripted(preference) => {
            let rank = scripted_ranks(g, preference)?;
            Box::new(move |_, ties| ties.iter().min_by_key(|&v| rank[v]).unwrap())
        }
        TieBreakPolicy::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Box::new(move |_, ties| {
                let i = rng.gen_range(0..ties.len());
                ties.iter().nth(i).unwrap()
            })
        }
        TieBreakPolicy::SimplicialFirst => Box::new(|rest, ties| {
            ties.iter().find(|&v| is_simplicial(rest, v).unwrap_or(false)).unwrap_or_else(|| ties.first().unwrap())
        }),
        TieBreakPolicy::AdversarialExhaustive => return Ok(adversarial_value(g, limit)?.1),
        TieBreakPolicy::BenevolentExhaustive => return Ok(benevolent_value(g, limit)?.1),
    };
    let mut rest = g.clone();
    let mut vertices = Vec::new();
    while !rest.is_empty() {
        let ties = rest.min_degree_vertices()?;
        let v = choose(&rest, &ties);
        vertices.push(v);
        rest = rest.delete_closed_neighborhood(v)?;
    }
    trace_from_picks(g, &vertices)
}

/// Minimum-degree vertices of the subgraph induced by `state`.
fn min_degree_in(g: &Graph, state: &VertexSet) -> Vec<usize> {
    let mut best = usize::MAX;
    let mut ties = Vec::new();
    for v in state {
        let d = g.raw_neighbors(v).intersection_len(state);
        if d < best {
            best = d;
            ties.clear();
        }
        if d == best {
            ties.push(v);
        }
    }
    ties
}

fn after_pick(g: &Graph, state: &VertexSet, v: usize) -> VertexSet {
    let mut next = state.difference(g.raw_neighbors(v));
    next.remove(v);
    next
}

struct Exhaustive<'a> {
    g: &'a Graph,
    worst: bool,
    memo: HashMap<VertexSet, usize>,
}

impl Exhaustive<'_> {
    fn value(&mut self, state: &VertexSet) -> usize {
        if state.is_empty() {
            return 0;
        }
        if let Some(&v) = self.memo.get(state) {
            return v;
        }
        let g = self.g;
        let worst = self.worst;
        let values = min_degree_in(g, state).into_iter().map(|v| 1 + self.value(&after_pick(g, state, v)));
        let best = if worst { values.min() } else { values.max() }.expect("state is nonempty");
        self.memo.insert(state.clone(), best);
        best
    }

    /// Follows optimal choices from the root, smallest label first.
    fn witness(&mut self) -> Vec<usize> {
        let mut state = self.g.present().clone();
        let mut picks = Vec::new();
        while !state.is_empty() {
            let target = self.value(&state);
            let v = min_degree_in(self.g, &state)
                .into_iter()
                .find(|&v| 1 + self.value(&after_pick(self.g, &state, v)) == target)
                .expect("some choice attains the memoized value");
            picks.push(v);
            state = after_pick(self.g, &state, v);
        }
        picks
    }
}

fn exhaustive(g: &Graph, limit: usize, worst: bool) -> Result<(usize, GreedyTrace)> {
    check_limit(g, limit)?;
    let mut search = Exhaustive { g, worst, memo: HashMap::new() };
    let value = search.value(g.present());
    let trace = trace_from_picks(g, &search.witness())?;
    debug_assert_eq!(trace.len(), value);
    Ok((value, trace))
}

/// Smallest solution size over all greedy executions, with a witness.
pub fn adversarial_value(g: &Graph, limit: usize) -> Result<(usize, GreedyTrace)> {
    exhaustive(g, limit, true)
}

/// Largest solution size over all greedy executions, with a witness.
pub fn benevolent_value(g: &Graph, limit: usize) -> Result<(usize, GreedyTrace)> {
    exhaustive(g, limit, false)
}

/// Every remaining vertex set that some greedy execution passes through,
/// including the full present set and the empty set.
pub fn reachable_states(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    check_limit(g, limit)?;
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![g.present().clone()];
    let mut out = Vec::new();
    while let Some(state) = stack.pop() {
        if !seen.insert(state.clone()) {
            continue;
        }
        for v in min_degree_in(g, &state) {
            stack.push(after_pick(g, &state, v));
        }
        out.push(state);
    }
    Ok(out)
}

/// The minimum-degree vertices of the subgraph induced by `state`.
pub fn choices_at(g: &Graph, state: &VertexSet) -> Vec<usize> {
    min_degree_in(g, state)
}
