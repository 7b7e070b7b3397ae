//! Chordality, simplicial vertices, maximal cliques, clique trees and
//! leafage.

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result, VertexSet};

/// Default cap on the number of maximal cliques accepted by [`leafage_small`].
pub const DEFAULT_LEAFAGE_LIMIT: usize = 12;

/// A vertex order over the present vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

impl EliminationOrdering {
    pub fn new(order: Vec<usize>) -> Self {
        Self { order }
    }

    pub fn reversed(&self) -> Self {
        Self { order: self.order.iter().rev().copied().collect() }
    }
}

/// Bags plus tree (or forest) edges between bag indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Number of bags of degree one in the tree.
    pub fn leaf_count(&self) -> usize {
        let mut degree = vec![0usize; self.bags.len()];
        for &(a, b) in &self.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        degree.iter().filter(|&&d| d == 1).count()
    }
}

/// Lexicographic breadth-first search by partition refinement.
///
/// Starts from the smallest present label and keeps classes sorted, so the
/// output is deterministic. Works on disconnected graphs.
pub fn lex_bfs(g: &Graph) -> EliminationOrdering {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    if !g.is_empty() {
        classes.push(g.present().to_vec());
    }
    let mut order = Vec::with_capacity(g.order());
    while let Some(head) = classes.first_mut() {
        let v = head.remove(0);
        order.push(v);
        let row = g.raw_neighbors(v);
        let mut refined = Vec::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (adjacent, rest): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&u| row.contains(u));
            if !adjacent.is_empty() {
                refined.push(adjacent);
            }
            if !rest.is_empty() {
                refined.push(rest);
            }
        }
        classes = refined;
    }
    EliminationOrdering { order }
}

fn check_permutation(g: &Graph, o: &EliminationOrdering) -> Result<()> {
    let seen: VertexSet = o.order.iter().copied().collect();
    if seen.len() != o.order.len() {
        return Err(Error::InvalidOrdering("repeated vertex".into()));
    }
    if &seen != g.present() {
        return Err(Error::InvalidOrdering("does not list exactly the present vertices".into()));
    }
    Ok(())
}

/// True iff eliminating in order `o` always removes a vertex whose later
/// neighbors form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, o: &EliminationOrdering) -> Result<bool> {
    check_permutation(g, o)?;
    let mut position = vec![usize::MAX; g.n_labels()];
    for (i, &v) in o.order.iter().enumerate() {
        position[v] = i;
    }
    let mut later = g.present().clone();
    for &v in &o.order {
        later.remove(v);
        let follow = g.raw_neighbors(v).intersection(&later);
        // Only the earliest later neighbor needs to see the rest.
        if let Some(parent) = follow.iter().min_by_key(|&u| position[u]) {
            let mut rest = follow;
            rest.remove(parent);
            if !rest.is_subset(g.raw_neighbors(parent)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination_ordering(g, &lex_bfs(g).reversed()).expect("lex-BFS visits every present vertex once")
}

pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool> {
    let n = g.neighbors(v)?;
    g.is_clique(&n)
}

/// All present vertices whose closed neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.present().iter().filter(|&v| is_simplicial(g, v).unwrap_or(false)).collect()
}

fn require_chordal(g: &Graph) -> Result<EliminationOrdering> {
    let peo = lex_bfs(g).reversed();
    if is_perfect_elimination_ordering(g, &peo)? {
        Ok(peo)
    } else {
        Err(Error::ClassViolation("chordal"))
    }
}

/// Maximal cliques of a chordal graph, sorted by their label lists.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    let peo = require_chordal(g)?;
    let mut later = g.present().clone();
    let mut candidates = Vec::with_capacity(peo.order.len());
    for &v in &peo.order {
        later.remove(v);
        let mut bag = g.raw_neighbors(v).intersection(&later);
        bag.insert(v);
        candidates.push(bag);
    }
    Ok(keep_maximal(candidates))
}

/// Drops duplicates and sets contained in another set; sorts the rest.
pub(crate) fn keep_maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort_by_key(VertexSet::to_vec);
    kept
}

struct DisjointSets {
    parent: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), sets: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.sets -= 1;
        true
    }
}

/// Weighted edges of the clique intersection graph, heaviest first.
fn intersection_edges(bags: &[VertexSet]) -> Vec<(usize, usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..bags.len() {
        for j in i + 1..bags.len() {
            let w = bags[i].intersection_len(&bags[j]);
            if w > 0 {
                edges.push((i, j, w));
            }
        }
    }
    edges.sort_by_key(|&(i, j, w)| (std::cmp::Reverse(w), i, j));
    edges
}

/// Clique tree of a chordal graph: a maximum-weight spanning tree of the
/// clique intersection graph. Disconnected graphs yield a forest with one
/// tree per component.
pub fn clique_tree(g: &Graph) -> Result<TreeDecomposition> {
    let bags = maximal_cliques(g)?;
    let mut sets = DisjointSets::new(bags.len());
    let edges =
        intersection_edges(&bags).into_iter().filter(|&(i, j, _)| sets.union(i, j)).map(|(i, j, _)| (i, j)).collect();
    Ok(TreeDecomposition { bags, edges })
}

/// Checks the three tree-decomposition conditions, and that the edges form
/// either a single tree or a forest with one tree per connected component of
/// `g`.
pub fn validate_tree_decomposition(td: &TreeDecomposition, g: &Graph) -> bool {
    let q = td.bags.len();
    if td.bags.iter().any(|b| b.is_empty() || !b.is_subset(g.present())) {
        return false;
    }
    // tw1
    let covered = td.bags.iter().fold(VertexSet::new(), |acc, b| acc.union(b));
    if &covered != g.present() {
        return false;
    }
    // tw2
    if !g.edges().iter().all(|&(u, v)| td.bags.iter().any(|b| b.contains(u) && b.contains(v))) {
        return false;
    }
    let mut sets = DisjointSets::new(q);
    for &(a, b) in &td.edges {
        if a >= q || b >= q || !sets.union(a, b) {
            return false;
        }
    }
    if sets.sets > 1 && sets.sets != g.component_count() {
        return false;
    }
    // tw3: in a forest, a node set induces a connected subgraph iff it spans
    // exactly one fewer edge than it has nodes.
    g.present().iter().all(|v| {
        let nodes = td.bags.iter().filter(|b| b.contains(v)).count();
        let links = td.edges.iter().filter(|&&(a, b)| td.bags[a].contains(v) && td.bags[b].contains(v)).count();
        links + 1 == nodes
    })
}

struct LeafageSearch {
    edges: Vec<(usize, usize, usize)>,
    class_ends: Vec<usize>,
    class_targets: Vec<usize>,
    q: usize,
    best: usize,
}

impl LeafageSearch {
    fn run(&mut self, at: usize, class: usize, sets: &DisjointSets, degree: &mut [usize], used: usize) {
        if self.best == 2 {
            return;
        }
        if used == self.q - 1 {
            self.best = self.best.min(degree.iter().filter(|&&d| d == 1).count());
            return;
        }
        if at == self.class_ends[class] {
            if sets.sets != self.class_targets[class] || class + 1 == self.class_ends.len() {
                return;
            }
            return self.run(at, class + 1, sets, degree, used);
        }
        let (i, j, _) = self.edges[at];
        let mut with = DisjointSets { parent: sets.parent.clone(), sets: sets.sets };
        if with.union(i, j) {
            degree[i] += 1;
            degree[j] += 1;
            // Leaf count of a finished tree is 2 + sum of (degree - 2) over
            // nodes of degree > 2, and degrees only grow.
            let floor = 2 + degree.iter().map(|&d| d.saturating_sub(2)).sum::<usize>();
            if floor < self.best {
                self.run(at + 1, class, &with, degree, used + 1);
            }
            degree[i] -= 1;
            degree[j] -= 1;
        }
        self.run(at + 1, class, sets, degree, used);
    }
}

/// Minimum number of leaves over all clique trees of a connected chordal
/// graph, by exhaustive search over maximum-weight spanning trees of the
/// clique intersection graph. A single maximal clique counts as one leaf.
pub fn leafage_small(g: &Graph, limit: usize) -> Result<usize> {
    let bags = maximal_cliques(g)?;
    if !g.is_connected() {
        return Err(Error::ClassViolation("connected"));
    }
    let q = bags.len();
    if q > limit {
        return Err(Error::SizeLimit { what: "maximal clique count", size: q, limit });
    }
    if q <= 1 {
        return Ok(q);
    }
    let edges = intersection_edges(&bags);
    let mut class_ends = Vec::new();
    let mut class_targets = Vec::new();
    let mut sets = DisjointSets::new(q);
    for (at, &(i, j, w)) in edges.iter().enumerate() {
        sets.union(i, j);
        if edges.get(at + 1).is_none_or(|next| next.2 != w) {
            class_ends.push(at + 1);
            class_targets.push(sets.sets);
        }
    }
    let initial = clique_tree(g)?.leaf_count();
    let mut search = LeafageSearch { edges, class_ends, class_targets, q, best: initial };
    search.run(0, 0, &DisjointSets::new(q), &mut vec![0; q], 0);
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path, star};

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().copied().collect()
    }

    #[test]
    fn lex_bfs_small_cases() {
        assert_eq!(lex_bfs(&Graph::empty(1)).order, vec![0]);
        let k3 = complete(3);
        assert!(is_perfect_elimination_ordering(&k3, &lex_bfs(&k3)).unwrap());
        assert!(lex_bfs(&Graph::empty(0)).order.is_empty());
    }

    #[test]
    fn peo_examples() {
        let p = path(3);
        assert!(is_perfect_elimination_ordering(&p, &EliminationOrdering::new(vec![0, 2, 1])).unwrap());
        assert!(!is_perfect_elimination_ordering(&p, &EliminationOrdering::new(vec![1, 0, 2])).unwrap());
        let c4 = cycle(4);
        for order in [[0, 1, 2, 3], [1, 3, 0, 2], [3, 2, 1, 0]] {
            assert!(!is_perfect_elimination_ordering(&c4, &EliminationOrdering::new(order.to_vec())).unwrap());
        }
        assert!(matches!(
            is_perfect_elimination_ordering(&p, &EliminationOrdering::new(vec![0, 0, 1])),
            Err(Error::InvalidOrdering(_))
        ));
        assert!(matches!(
            is_perfect_elimination_ordering(&p, &EliminationOrdering::new(vec![0, 1])),
            Err(Error::InvalidOrdering(_))
        ));
    }

    #[test]
    fn chordality() {
        assert!(!is_chordal(&cycle(4)));
        assert!(!is_chordal(&cycle(6)));
        assert!(is_chordal(&cycle(3)));
        assert!(is_chordal(&star(4)));
        assert!(is_chordal(&Graph::empty(0)));
    }

    #[test]
    fn simplicial_examples() {
        let s = star(3);
        assert_eq!(simplicial_vertices(&s), set(&[1, 2, 3]));
        assert_eq!(simplicial_vertices(&path(4)), set(&[0, 3]));
        assert_eq!(simplicial_vertices(&Graph::empty(2)), set(&[0, 1]));
    }

    #[test]
    fn maximal_clique_examples() {
        assert_eq!(maximal_cliques(&complete(4)).unwrap(), vec![set(&[0, 1, 2, 3])]);
        assert_eq!(maximal_cliques(&path(3)).unwrap(), vec![set(&[0, 1]), set(&[1, 2])]);
        assert_eq!(maximal_cliques(&cycle(4)), Err(Error::ClassViolation("chordal")));
    }

    #[test]
    fn clique_tree_of_path() {
        let td = clique_tree(&path(3)).unwrap();
        assert_eq!(td.bags.len(), 2);
        assert_eq!(td.edges, vec![(0, 1)]);
        assert!(validate_tree_decomposition(&td, &path(3)));
    }

    #[test]
    fn clique_forest_for_disconnected_input() {
        let g = path(3).disjoint_union(&complete(3));
        let td = clique_tree(&g).unwrap();
        assert_eq!(td.bags.len(), 3);
        assert_eq!(td.edges.len(), 1);
        assert!(validate_tree_decomposition(&td, &g));
    }

    #[test]
    fn validation_rejects_broken_decompositions() {
        let g = path(4);
        let mut td = clique_tree(&g).unwrap();
        assert!(validate_tree_decomposition(&td, &g));
        let mut missing = td.clone();
        missing.bags.remove(2);
        missing.edges.retain(|&(a, b)| a < 2 && b < 2);
        assert!(!validate_tree_decomposition(&missing, &g));
        // {0,1} - {2,3} - {1,2}: vertex 1 is split around {2,3}.
        td.edges = vec![(0, 2), (2, 1)];
        assert!(!validate_tree_decomposition(&td, &g));
        let mut cyclic = clique_tree(&g).unwrap();
        cyclic.edges.push((0, 2));
        assert!(!validate_tree_decomposition(&cyclic, &g));
    }

    #[test]
    fn star_shaped_tree_breaks_tw3() {
        // Bags {0,1} {1,2} {2,3} {3,4} of a path, joined as a star around
        // {0,1}: vertex 2 sits in two bags that are not adjacent.
        let g = path(5);
        let mut td = clique_tree(&g).unwrap();
        td.edges = vec![(0, 1), (0, 2), (0, 3)];
        assert!(!validate_tree_decomposition(&td, &g));
    }

    #[test]
    fn leafage_examples() {
        assert_eq!(leafage_small(&path(3), 12).unwrap(), 2);
        assert_eq!(leafage_small(&complete(4), 12).unwrap(), 1);
        // Star K1,5: any spanning tree over the five edge-bags is a clique
        // tree, so a path exists.
        assert_eq!(leafage_small(&star(5), 12).unwrap(), 2);
        assert_eq!(
            leafage_small(&path(14), 12),
            Err(Error::SizeLimit { what: "maximal clique count", size: 13, limit: 12 })
        );
        assert_eq!(leafage_small(&cycle(4), 12), Err(Error::ClassViolation("chordal")));
        assert_eq!(leafage_small(&Graph::empty(2), 12), Err(Error::ClassViolation("connected")));
    }

    #[test]
    fn spider_has_three_leaves() {
        // Triangle {0,1,2} with a two-edge leg hanging off each corner.
        let g = Graph::from_edges(9, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 5), (5, 6), (2, 7), (7, 8)]).unwrap();
        assert_eq!(leafage_small(&g, 12).unwrap(), 3);
    }
}
