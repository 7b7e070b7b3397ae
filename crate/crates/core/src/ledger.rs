//! Classification of greedy picks as j-moves against a fixed independent
//! set `I`, and the accounting checks built on it.
//!
//! A pick `v` is a j-move when `N[v]` contains exactly `j` members of `I`
//! that are still present at that step. Every member of `I` is deleted in
//! exactly one step, so `sum_j j * m_j = |I|` for any independent `I`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::chordal::is_chordal;
use crate::greedy::{choices_at, reachable_states, validate_trace, GreedyTrace};
use crate::interval::IntervalRepresentation;
use crate::{Error, Graph, Rational, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub vertex: usize,
    pub j: usize,
    pub components_before: usize,
    pub components_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveLedger {
    pub reference_set: VertexSet,
    pub records: Vec<MoveRecord>,
    /// `counts[j]` is the number of j-moves.
    pub counts: Vec<usize>,
}

fn histogram(records: &[MoveRecord]) -> Vec<usize> {
    let mut counts = Vec::new();
    for r in records {
        if counts.len() <= r.j {
            counts.resize(r.j + 1, 0);
        }
        counts[r.j] += 1;
    }
    counts
}

impl MoveLedger {
    pub fn m(&self, j: usize) -> usize {
        self.counts.get(j).copied().unwrap_or(0)
    }

    /// Number of 0-moves plus 1-moves.
    pub fn m01(&self) -> usize {
        self.m(0) + self.m(1)
    }
}

/// Classifies every pick of `t` against `i`.
pub fn classify(g: &Graph, t: &GreedyTrace, i: &VertexSet) -> Result<MoveLedger> {
    if !g.is_independent_set(i)? {
        return Err(Error::InvalidInput("reference set is not independent".into()));
    }
    if !validate_trace(g, t) {
        return Err(Error::InvalidInput("trace is not a valid greedy execution".into()));
    }
    let mut rest = g.clone();
    let mut available = i.clone();
    let mut records = Vec::with_capacity(t.len());
    for pick in &t.picks {
        let closed = rest.closed_neighborhood(pick.vertex)?;
        records.push(MoveRecord {
            vertex: pick.vertex,
            j: closed.intersection_len(&available),
            components_before: pick.components_before,
            components_after: pick.components_after,
        });
        available.difference_with(&closed);
        rest = rest.delete_closed_neighborhood(pick.vertex)?;
    }
    Ok(MoveLedger { reference_set: i.clone(), counts: histogram(&records), records })
}

/// [`classify`] on an interval instance, failing if any pick is a j-move
/// with `j >= 3`. On interval graphs every clique path gives the picked
/// vertex at most two pendant sides, which caps `j` at two.
pub fn classify_interval(
    g: &Graph,
    rep: &IntervalRepresentation,
    t: &GreedyTrace,
    i: &VertexSet,
) -> Result<MoveLedger> {
    if !rep.validate_representation(g) {
        return Err(Error::InvalidInput("representation does not match graph".into()));
    }
    let ledger = classify(g, t, i)?;
    match ledger.records.iter().find(|r| r.j >= 3) {
        Some(r) => Err(Error::BoundViolation(format!("vertex {} is a {}-move on an interval graph", r.vertex, r.j))),
        None => Ok(ledger),
    }
}

/// `sum_j j * m_j == |I|`, with the histogram recomputed from the records.
pub fn check_identity(l: &MoveLedger) -> bool {
    let counts = histogram(&l.records);
    let weighted: usize = counts.iter().enumerate().map(|(j, m)| j * m).sum();
    counts == l.counts && weighted == l.reference_set.len()
}

/// Every j-move with `j >= 2` raises the component count by at least
/// `j - 1`. Component counts of an emptied graph are zero; j >= 2 always
/// leaves survivors.
pub fn check_disconnection(g: &Graph, l: &MoveLedger) -> Result<bool> {
    if !is_chordal(g) {
        return Err(Error::ClassViolation("chordal"));
    }
    Ok(l.records.iter().filter(|r| r.j >= 2).all(|r| r.components_after >= r.components_before + (r.j - 1)))
}

/// `m0 + m1` is at least the number of components of `g`.
pub fn check_component_floor(g: &Graph, l: &MoveLedger) -> bool {
    l.m01() >= g.component_count()
}

fn charging_holds(counts: &[usize]) -> bool {
    let m01 = counts.iter().take(2).sum::<usize>();
    let excess: usize = counts.iter().enumerate().skip(2).map(|(j, m)| (j - 1) * m).sum();
    m01 > excess
}

/// `m0 + m1 >= 1 + sum_{j>=2} (j - 1) m_j` on a connected graph.
pub fn check_charging_bound(g: &Graph, l: &MoveLedger) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::InvalidInput("charging bound needs a connected graph; use the componentwise check".into()));
    }
    Ok(charging_holds(&l.counts))
}

/// The charging bound applied to each component separately, using the
/// picks that fall inside it.
pub fn check_charging_bound_componentwise(g: &Graph, l: &MoveLedger) -> bool {
    g.connected_components().iter().all(|c| {
        let inside: Vec<MoveRecord> = l.records.iter().filter(|r| c.contains(r.vertex)).copied().collect();
        charging_holds(&histogram(&inside))
    })
}

/// `1 - sum_{j>=2} (j-1) m_j / (1 + sum_{j>=2} (2j-1) m_j)`.
pub fn ratio_bound_from_counts(counts: &[usize]) -> Rational {
    let (mut lost, mut total) = (0i64, 1i64);
    for (j, &m) in counts.iter().enumerate().skip(2) {
        let (j, m) = (j as i64, m as i64);
        lost += (j - 1) * m;
        total += (2 * j - 1) * m;
    }
    Rational::from_integer(1) - Rational::new(lost, total)
}

/// `1 - (l - 1) / (2l - 1)` for leafage `l >= 1`.
pub fn leafage_ratio_bound(leafage: usize) -> Result<Rational> {
    if leafage == 0 {
        return Err(Error::InvalidInput("leafage must be at least 1".into()));
    }
    let l = leafage as i64;
    Ok(Rational::from_integer(1) - Rational::new(l - 1, 2 * l - 1))
}

/// Largest `j` with `m_j > 0`, or 0 for an empty ledger.
pub fn max_j_observed(l: &MoveLedger) -> usize {
    l.counts.iter().rposition(|&m| m > 0).unwrap_or(0)
}

/// One possible pick in one reachable state of some greedy execution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveSample {
    pub vertex: usize,
    pub j: usize,
    pub components_before: usize,
    pub components_after: usize,
}

/// Every pick available in every state reachable by greedy, classified
/// against `i`. The members of `i` still available in a state are exactly
/// those still present, so this covers all executions at once.
pub fn all_moves(g: &Graph, i: &VertexSet, limit: usize) -> Result<Vec<MoveSample>> {
    if !g.is_independent_set(i)? {
        return Err(Error::InvalidInput("reference set is not independent".into()));
    }
    let mut out = Vec::new();
    for state in reachable_states(g, limit)? {
        let here = g.with_present(state.clone());
        let components_before = here.component_count();
        for v in choices_at(g, &state) {
            let closed = here.closed_neighborhood(v)?;
            out.push(MoveSample {
                vertex: v,
                j: closed.intersection_len(i),
                components_before,
                components_after: here.delete_closed_neighborhood(v)?.component_count(),
            });
        }
    }
    Ok(out)
}

/// Largest `j` over every pick of every greedy execution.
pub fn max_j_over_executions(g: &Graph, i: &VertexSet, limit: usize) -> Result<usize> {
    Ok(all_moves(g, i, limit)?.iter().map(|m| m.j).max().unwrap_or(0))
}

/// Minimum over all greedy executions of the summed per-pick weight, where
/// a pick's weight depends only on its `j` against `i`.
fn min_weight_over_executions(g: &Graph, i: &VertexSet, limit: usize, weight: fn(usize) -> i64) -> Result<i64> {
    fn go(
        g: &Graph,
        i: &VertexSet,
        state: &VertexSet,
        weight: fn(usize) -> i64,
        memo: &mut HashMap<VertexSet, i64>,
    ) -> i64 {
        if state.is_empty() {
            return 0;
        }
        if let Some(&w) = memo.get(state) {
            return w;
        }
        let best = choices_at(g, state)
            .into_iter()
            .map(|v| {
                let mut closed = g.raw_neighbors(v).intersection(state);
                closed.insert(v);
                let next = state.difference(&closed);
                weight(closed.intersection_len(i)) + go(g, i, &next, weight, memo)
            })
            .min()
            .expect("state is nonempty");
        memo.insert(state.clone(), best);
        best
    }
    if !g.is_independent_set(i)? {
        return Err(Error::InvalidInput("reference set is not independent".into()));
    }
    crate::greedy::check_limit(g, limit)?;
    Ok(go(g, i, g.present(), weight, &mut HashMap::new()))
}

/// Smallest `m0 + m1` over all greedy executions.
pub fn min_m01_over_executions(g: &Graph, i: &VertexSet, limit: usize) -> Result<usize> {
    let w = min_weight_over_executions(g, i, limit, |j| i64::from(j <= 1))?;
    Ok(w as usize)
}

/// Smallest `m0 + m1 - sum_{j>=2} (j - 1) m_j` over all greedy executions.
/// The charging bound holds for every execution iff this is at least 1.
pub fn min_charging_margin(g: &Graph, i: &VertexSet, limit: usize) -> Result<i64> {
    min_weight_over_executions(g, i, limit, |j| if j <= 1 { 1 } else { 1 - j as i64 })
}
