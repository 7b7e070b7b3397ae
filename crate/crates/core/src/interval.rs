//! Closed-interval representations with exact rational endpoints.

use serde::{Deserialize, Serialize};

use crate::chordal::{keep_maximal, TreeDecomposition};
use crate::{Error, Graph, Rational, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        Self { lo, hi }
    }

    pub fn integer(lo: i64, hi: i64) -> Self {
        Self::new(Rational::from_integer(lo), Rational::from_integer(hi))
    }

    pub fn length(&self) -> Rational {
        self.hi - self.lo
    }

    /// Closed intervals meet even when they only share an endpoint.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// One interval per vertex label, as stored in interval files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub label: usize,
    pub lo_num: i64,
    pub lo_den: i64,
    pub hi_num: i64,
    pub hi_den: i64,
}

/// Interval `i` represents vertex label `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        if let Some(label) = intervals.iter().position(|iv| iv.lo > iv.hi) {
            return Err(Error::InvalidInterval {
                label,
                reason: format!("lo {} exceeds hi {}", intervals[label].lo, intervals[label].hi),
            });
        }
        Ok(Self { intervals })
    }

    pub fn from_integers(bounds: &[(i64, i64)]) -> Result<Self> {
        Self::new(bounds.iter().map(|&(lo, hi)| Interval::integer(lo, hi)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn records(&self) -> Vec<IntervalRecord> {
        self.intervals
            .iter()
            .enumerate()
            .map(|(label, iv)| IntervalRecord {
                label,
                lo_num: *iv.lo.numer(),
                lo_den: *iv.lo.denom(),
                hi_num: *iv.hi.numer(),
                hi_den: *iv.hi.denom(),
            })
            .collect()
    }

    /// Rebuilds a representation from records. Labels must be exactly
    /// `0..records.len()` in any order.
    pub fn from_records(records: &[IntervalRecord]) -> Result<Self> {
        let mut slots: Vec<Option<Interval>> = vec![None; records.len()];
        for r in records {
            let bad = |reason: &str| Error::InvalidInterval { label: r.label, reason: reason.to_string() };
            if r.lo_den == 0 || r.hi_den == 0 {
                return Err(bad("zero denominator"));
            }
            let slot = slots.get_mut(r.label).ok_or_else(|| bad("label out of range"))?;
            if slot.is_some() {
                return Err(bad("label repeated"));
            }
            *slot = Some(Interval::new(Rational::new(r.lo_num, r.lo_den), Rational::new(r.hi_num, r.hi_den)));
        }
        Self::new(slots.into_iter().map(|s| s.expect("every label filled")).collect())
    }

    /// True iff every interval has the same length.
    pub fn is_unit(&self) -> bool {
        self.intervals.windows(2).all(|w| w[0].length() == w[1].length())
    }

    /// The interval graph: `{u, v}` is an edge iff the intervals meet.
    pub fn graph(&self) -> Graph {
        let n = self.intervals.len();
        let edges = (0..n).flat_map(|u| {
            (u + 1..n).filter(move |&v| self.intervals[u].intersects(&self.intervals[v])).map(move |v| (u, v))
        });
        Graph::from_edges(n, edges).expect("labels are in range and distinct")
    }

    /// Maximal cliques of the whole representation in left-to-right order,
    /// joined as a path.
    pub fn clique_path(&self) -> TreeDecomposition {
        self.clique_path_of(&VertexSet::full(self.len()))
    }

    /// Clique path of the subgraph induced by `present`.
    ///
    /// Endpoints are swept left to right with starts ahead of ends at equal
    /// coordinates. The active set is a maximal clique exactly when an end
    /// directly follows a start.
    pub fn clique_path_of(&self, present: &VertexSet) -> TreeDecomposition {
        let mut events: Vec<(Rational, bool, usize)> = Vec::new();
        for v in present.iter().filter(|&v| v < self.len()) {
            events.push((self.intervals[v].lo, false, v));
            events.push((self.intervals[v].hi, true, v));
        }
        events.sort();
        let mut active = VertexSet::new();
        let mut bags = Vec::new();
        let mut rising = false;
        for (_, is_end, v) in events {
            if is_end {
                if rising {
                    bags.push(active.clone());
                }
                active.remove(v);
                rising = false;
            } else {
                active.insert(v);
                rising = true;
            }
        }
        // Sweep bags are already maximal; keep_maximal would reorder them.
        debug_assert_eq!(keep_maximal(bags.clone()).len(), bags.len());
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition { bags, edges }
    }

    /// True iff this representation induces exactly the present subgraph of
    /// `g`.
    pub fn validate_representation(&self, g: &Graph) -> bool {
        if self.len() != g.n_labels() {
            return false;
        }
        let present = g.present().to_vec();
        present.iter().enumerate().all(|(i, &u)| {
            present[i + 1..].iter().all(|&v| g.adjacent(u, v) == self.intervals[u].intersects(&self.intervals[v]))
        })
    }
}

/// Interval graph of `rep`.
pub fn graph_from_intervals(rep: &IntervalRepresentation) -> Graph {
    rep.graph()
}
