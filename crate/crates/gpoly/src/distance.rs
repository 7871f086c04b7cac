//! All-pairs shortest-path distances via breadth-first search.

use crate::graph::Graph;
use std::collections::VecDeque;

/// A hop distance that is either finite or unreachable. Unreachable is a
/// distinguished value, never a large finite number, so sums and triangle
/// checks cannot silently corrupt.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// The finite value, or `None` when unreachable.
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => write!(f, "inf"),
        }
    }
}

/// The n×n matrix of hop distances of a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    /// Runs a BFS from every vertex.
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut d = vec![Distance::Unreachable; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = Distance::Finite(0);
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = match row[u] {
                    Distance::Finite(x) => x,
                    Distance::Unreachable => unreachable!(),
                };
                for v in g.neighbors(u) {
                    if row[v] == Distance::Unreachable {
                        row[v] = Distance::Finite(du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }

    /// True iff `mid` lies strictly between `u` and `v` on some geodesic:
    /// all three pairwise distances are finite and d(u,mid) + d(mid,v) =
    /// d(u,v), with `mid` distinct from both ends.
    pub fn is_between(&self, u: usize, mid: usize, v: usize) -> bool {
        if mid == u || mid == v || u == v {
            return false;
        }
        match (self.get(u, mid), self.get(mid, v), self.get(u, v)) {
            (Distance::Finite(a), Distance::Finite(b), Distance::Finite(c)) => a + b == c,
            _ => false,
        }
    }
}

/// All-pairs shortest-path distances of `g`.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}
