//! Exact maximum independent sets.
//!
//! Chordal graphs are solved by repeatedly taking the smallest-label
//! simplicial vertex. Everything else goes through a branch-and-bound over
//! bitsets, bounded by `remaining - |greedy matching|`: each matching edge
//! can contribute at most one endpoint.

use serde::{Deserialize, Serialize};

use crate::chordal::{is_chordal, is_simplicial};
use crate::{Error, Graph, Result, VertexSet};

/// Default cap on present vertices for the branch-and-bound solvers.
pub const DEFAULT_EXACT_LIMIT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MisMethod {
    Simplicial,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisResult {
    pub set: VertexSet,
    pub size: usize,
    pub method: MisMethod,
}

impl MisResult {
    fn new(set: VertexSet, method: MisMethod) -> Self {
        Self { size: set.len(), set, method }
    }
}

pub fn mis_chordal(g: &Graph) -> Result<MisResult> {
    if !is_chordal(g) {
        return Err(Error::ClassViolation("chordal"));
    }
    let mut rest = g.clone();
    let mut set = VertexSet::new();
    while !rest.is_empty() {
        let v = rest
            .present()
            .iter()
            .find(|&v| is_simplicial(&rest, v).unwrap_or(false))
            .expect("chordal graphs always have a simplicial vertex");
        set.insert(v);
        rest = rest.delete_closed_neighborhood(v)?;
    }
    Ok(MisResult::new(set, MisMethod::Simplicial))
}

/// Simplicial elimination on chordal graphs, branch-and-bound otherwise.
pub fn mis_exact(g: &Graph, limit: usize) -> Result<MisResult> {
    match mis_chordal(g) {
        Err(Error::ClassViolation(_)) => mis_bruteforce(g, limit),
        other => other,
    }
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        Err(Error::SizeLimit { what: "present vertex count", size: g.order(), limit })
    } else {
        Ok(())
    }
}

/// Upper bound on the independence number of the subgraph induced by `cand`.
fn upper_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut free = cand.clone();
    let mut matched = 0;
    while let Some(u) = free.first() {
        free.remove(u);
        if let Some(v) = g.raw_neighbors(u).intersection(&free).first() {
            free.remove(v);
            matched += 1;
        }
    }
    cand.len() - matched
}

fn closed(g: &Graph, v: usize, within: &VertexSet) -> VertexSet {
    let mut s = g.raw_neighbors(v).intersection(within);
    s.insert(v);
    s
}

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl Search<'_> {
    fn run(&mut self, mut cand: VertexSet, mut current: VertexSet) {
        // Vertices of degree at most one lie in some maximum independent set
        // of what remains.
        while let Some(v) = cand.iter().find(|&v| self.g.raw_neighbors(v).intersection_len(&cand) <= 1) {
            current.insert(v);
            cand.difference_with(&closed(self.g, v, &cand));
        }
        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return;
        }
        if current.len() + upper_bound(self.g, &cand) <= self.best.len() {
            return;
        }
        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.g.raw_neighbors(v).intersection_len(&cand), std::cmp::Reverse(v)))
            .expect("candidate set is nonempty");
        let mut with = current.clone();
        with.insert(pivot);
        self.run(cand.difference(&closed(self.g, pivot, &cand)), with);
        cand.remove(pivot);
        self.run(cand, current);
    }
}

/// Exact maximum independent set of the present subgraph by
/// branch-and-bound, for at most `limit` present vertices.
pub fn mis_bruteforce(g: &Graph, limit: usize) -> Result<MisResult> {
    check_limit(g, limit)?;
    let mut search = Search { g, best: VertexSet::new() };
    search.run(g.present().clone(), VertexSet::new());
    Ok(MisResult::new(search.best, MisMethod::BranchAndBound))
}

/// Largest independent set containing `forced`.
pub fn max_is_containing(g: &Graph, forced: &VertexSet, limit: usize) -> Result<MisResult> {
    if !g.is_independent_set(forced)? {
        return Err(Error::InvalidInput("forced set is not independent".into()));
    }
    let blocked = forced.iter().fold(VertexSet::new(), |acc, v| acc.union(&closed(g, v, g.present())));
    let rest = g.induced(&g.present().difference(&blocked));
    let best = mis_bruteforce(&rest, limit)?;
    Ok(MisResult::new(best.set.union(forced), MisMethod::BranchAndBound))
}

fn enumerate(g: &Graph, cand: VertexSet, current: &mut Vec<usize>, target: usize, out: &mut Vec<VertexSet>) {
    if current.len() == target {
        out.push(current.iter().copied().collect());
        return;
    }
    if current.len() + upper_bound(g, &cand) < target {
        return;
    }
    let v = cand.first().expect("bound keeps candidates available");
    current.push(v);
    enumerate(g, cand.difference(&closed(g, v, &cand)), current, target, out);
    current.pop();
    let mut without = cand;
    without.remove(v);
    enumerate(g, without, current, target, out);
}

/// Every maximum independent set, in lexicographic order of label lists.
pub fn maximum_independent_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let alpha = mis_bruteforce(g, limit)?.size;
    let mut out = Vec::new();
    enumerate(g, g.present().clone(), &mut Vec::new(), alpha, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path, star};

    #[test]
    fn chordal_solver_small_cases() {
        assert_eq!(mis_chordal(&complete(5)).unwrap().size, 1);
        assert_eq!(mis_chordal(&path(5)).unwrap().set, [0, 2, 4].into_iter().collect());
        assert_eq!(mis_chordal(&star(4)).unwrap().size, 4);
        assert_eq!(mis_chordal(&cycle(4)), Err(Error::ClassViolation("chordal")));
    }

    #[test]
    fn bruteforce_small_cases() {
        assert_eq!(mis_bruteforce(&Graph::empty(5), 30).unwrap().size, 5);
        assert_eq!(mis_bruteforce(&cycle(7), 30).unwrap().size, 3);
        assert_eq!(mis_bruteforce(&complete(6), 30).unwrap().size, 1);
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let r = mis_bruteforce(&petersen, 30).unwrap();
        assert_eq!(r.size, 4);
        assert!(petersen.is_independent_set(&r.set).unwrap());
        assert!(matches!(mis_bruteforce(&path(31), 30), Err(Error::SizeLimit { size: 31, .. })));
    }

    #[test]
    fn forced_members() {
        let p = path(5);
        assert_eq!(max_is_containing(&p, &VertexSet::new(), 30).unwrap().size, 3);
        let with_one = max_is_containing(&p, &VertexSet::singleton(1), 30).unwrap();
        assert_eq!(with_one.size, 2);
        assert!(with_one.set.contains(1));
        let bad: VertexSet = [0, 1].into_iter().collect();
        assert!(matches!(max_is_containing(&p, &bad, 30), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn enumerates_all_optima() {
        let sets = maximum_independent_sets(&path(4), 30).unwrap();
        let lists: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
        assert_eq!(lists, vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert_eq!(maximum_independent_sets(&cycle(5), 30).unwrap().len(), 5);
        assert_eq!(maximum_independent_sets(&Graph::empty(0), 30).unwrap(), vec![VertexSet::new()]);
    }

    #[test]
    fn solvers_respect_presence_mask() {
        let g = path(5).delete_vertex(2).unwrap();
        assert_eq!(mis_chordal(&g).unwrap().size, 2);
        assert_eq!(mis_bruteforce(&g, 30).unwrap().size, 2);
    }
}
