//! Labeled simple undirected graphs with deletion by presence mask.
//!
//! Vertices carry dense labels `0..n`. Deleting a vertex only clears its
//! presence bit, so a set chosen on the original graph can be intersected
//! with the survivors at any point of a greedy run. Adjacency is shared
//! behind an `Arc`; cloning a graph copies only the mask.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

const WORD: usize = 64;

/// A set of vertex labels stored as a bitset.
///
/// Trailing zero words are always trimmed, so derived equality and hashing
/// compare set contents.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / WORD];
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        match self.words.get_mut(w) {
            Some(word) if *word >> b & 1 == 1 => {
                *word &= !(1 << b);
                self.trim();
                true
            }
            _ => false,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / WORD).is_some_and(|w| w >> (v % WORD) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest label in the set.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Largest label in the set.
    pub fn last(&self) -> Option<usize> {
        let w = self.words.len().checked_sub(1)?;
        Some(w * WORD + (WORD - 1 - self.words[w].leading_zeros() as usize))
    }

    /// Labels in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() };
        out.trim();
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() { (self, other) } else { (other, self) };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        Self { words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        self.trim();
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len() && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<usize>::deserialize(deserializer)?.into_iter().collect())
    }
}

/// A simple undirected graph over labels `0..n_labels` with a presence mask.
///
/// Queries see only present vertices. Adjacency among absent vertices is
/// retained but invisible.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Arc<Vec<VertexSet>>,
    present: VertexSet,
}

impl Graph {
    /// `n` isolated vertices, all present.
    pub fn empty(n: usize) -> Self {
        Self { adj: Arc::new(vec![VertexSet::new(); n]), present: VertexSet::full(n) }
    }

    /// Builds a graph from an edge list. Repeated edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { adj: Arc::new(adj), present: VertexSet::full(n) })
    }

    pub fn n_labels(&self) -> usize {
        self.adj.len()
    }

    pub fn present(&self) -> &VertexSet {
        &self.present
    }

    /// Number of present vertices.
    pub fn order(&self) -> usize {
        self.present.len()
    }

    pub fn is_empty(&self) -> bool {
        self.present.is_empty()
    }

    pub fn is_present(&self, v: usize) -> bool {
        self.present.contains(v)
    }

    fn check(&self, v: usize) -> Result<()> {
        if self.present.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Full adjacency row of `v`, ignoring the presence mask.
    pub fn raw_neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// True when `u` and `v` are adjacent in the underlying graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    /// Present neighbors of a present vertex.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.adj[v].intersection(&self.present))
    }

    /// `N[v]` restricted to present vertices.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.neighbors(v)?;
        s.insert(v);
        Ok(s)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].intersection_len(&self.present))
    }

    fn degrees(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.present.iter().map(|v| (v, self.adj[v].intersection_len(&self.present)))
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.degrees().map(|(_, d)| d).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.degrees().map(|(_, d)| d).max().ok_or(Error::EmptyGraph)
    }

    /// All present vertices of minimum degree.
    pub fn min_degree_vertices(&self) -> Result<VertexSet> {
        let delta = self.min_degree()?;
        Ok(self.degrees().filter(|&(_, d)| d == delta).map(|(v, _)| v).collect())
    }

    /// Same graph with a different presence mask. Labels outside
    /// `0..n_labels` are dropped.
    pub fn with_present(&self, present: VertexSet) -> Self {
        Self { adj: Arc::clone(&self.adj), present: present.intersection(&VertexSet::full(self.n_labels())) }
    }

    /// Induced subgraph on `present ∩ keep`.
    pub fn induced(&self, keep: &VertexSet) -> Self {
        Self { adj: Arc::clone(&self.adj), present: self.present.intersection(keep) }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check(v)?;
        let mut g = self.clone();
        g.present.remove(v);
        Ok(g)
    }

    /// `G \ N[v]`: marks `v` and its present neighbors absent.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Self> {
        let closed = self.closed_neighborhood(v)?;
        Ok(Self { adj: Arc::clone(&self.adj), present: self.present.difference(&closed) })
    }

    /// Connected components of the present subgraph, ordered by smallest
    /// label.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut unseen = self.present.clone();
        let mut components = Vec::new();
        while let Some(start) = unseen.first() {
            let mut component = VertexSet::singleton(start);
            unseen.remove(start);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let fresh = self.adj[u].intersection(&unseen);
                unseen.difference_with(&fresh);
                component.union_with(&fresh);
                queue.extend(fresh.iter());
            }
            components.push(component);
        }
        components
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.difference(&self.present).first() {
            Some(v) => Err(Error::InvalidVertex(v)),
            None => Ok(()),
        }
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> Result<bool> {
        self.check_members(s)?;
        Ok(s.iter().all(|v| self.adj[v].is_disjoint(s)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_members(s)?;
        Ok(s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        }))
    }

    /// Present edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.present
            .iter()
            .flat_map(|u| {
                self.adj[u]
                    .intersection(&self.present)
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().map(|(_, d)| d).sum::<usize>() / 2
    }

    /// Disjoint union of the present parts of `self` and `other`; the labels
    /// of `other` are shifted by `self.n_labels()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n_labels();
        let edges = self.edges().into_iter().chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        let mut g = Self::from_edges(shift + other.n_labels(), edges).expect("labels of both operands are in range");
        g.present = self.present.iter().chain(other.present.iter().map(|v| v + shift)).collect();
        g
    }

    /// Renders the present subgraph in the `n m` / `u v` edge-list format.
    /// `n` is the label count, so absent vertices appear as isolated labels.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n_labels(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`
    /// with `u < v < n`. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse { line, message: format!("expected two integers, found {l:?}") });
            }
            let num = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse { line, message: format!("{s:?}: {e}") });
            Ok((num(fields[0])?, num(fields[1])?))
        };
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing `n m` header".into() })?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            if u >= v || v >= n {
                return Err(Error::Parse { line, message: format!("edge ({u}, {v}) must satisfy u < v < {n}") });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edges(n, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n_labels", &self.n_labels())
            .field("present", &self.present)
            .field("edges", &self.edges())
            .finish()
    }
}
