//! The general position engine: collinearity of vertex triples, pruned
//! depth-first enumeration of all general position sets, maximal sets, the
//! intersection census of a set family, and the inclusion-exclusion route to
//! the same polynomial.
//!
//! A set S is in general position when no triple of its vertices lies on a
//! common shortest path. Triples with a mutually unreachable pair are never
//! collinear, so disconnected graphs work throughout (their cross-component
//! triples are free).

use crate::distance::{distance_matrix, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{binomial, Polynomial};
use crate::vertex_set::VertexSet;
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

/// Default cap on the number of maximal sets accepted by
/// [`psi_inclusion_exclusion`]; the subfamily expansion is exponential.
pub const DEFAULT_MAX_MAXIMAL_SETS: usize = 25;

/// Below this many vertices the DFS runs sequentially; at or above, the
/// top-level branches are spread across rayon workers. The merged result is
/// identical either way.
const PARALLEL_THRESHOLD: usize = 16;

/// Exact collinearity classification of all vertex triples, stored two ways:
/// per pair {u,w}, the set of vertices strictly between u and w on some
/// geodesic; and per pair {u,v}, the set of vertices w making {u,v,w}
/// collinear (w between the pair, or one of the pair between w and the
/// other). The second table is what the DFS unions into its forbidden set.
#[derive(Clone, Debug)]
pub struct CollinearTriples {
    n: usize,
    between: Vec<VertexSet>,
    collinear: Vec<VertexSet>,
}

impl CollinearTriples {
    /// Classifies all C(n,3) triples of `g`. `d` must be the distance matrix
    /// of `g`.
    pub fn new(g: &Graph, d: &DistanceMatrix) -> Self {
        let n = g.vertex_count();
        debug_assert_eq!(d.n(), n);
        let mut between = vec![VertexSet::new(n); n * n];
        let mut collinear = vec![VertexSet::new(n); n * n];
        for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    let v_mid = d.is_between(u, v, w);
                    let u_mid = d.is_between(v, u, w);
                    let w_mid = d.is_between(u, w, v);
                    if v_mid {
                        between[u * n + w].insert(v);
                        between[w * n + u].insert(v);
                    }
                    if u_mid {
                        between[v * n + w].insert(u);
                        between[w * n + v].insert(u);
                    }
                    if w_mid {
                        between[u * n + v].insert(w);
                        between[v * n + u].insert(w);
                    }
                    if v_mid || u_mid || w_mid {
                        collinear[u * n + v].insert(w);
                        collinear[v * n + u].insert(w);
                        collinear[u * n + w].insert(v);
                        collinear[w * n + u].insert(v);
                        collinear[v * n + w].insert(u);
                        collinear[w * n + v].insert(u);
                    }
                }
            }
        }
        CollinearTriples {
            n,
            between,
            collinear,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices strictly between `u` and `v` on some geodesic.
    pub fn between(&self, u: usize, v: usize) -> &VertexSet {
        &self.between[u * self.n + v]
    }

    /// Vertices `w` for which the triple {u, v, w} is collinear.
    pub fn collinear_with(&self, u: usize, v: usize) -> &VertexSet {
        &self.collinear[u * self.n + v]
    }

    pub fn is_collinear(&self, u: usize, v: usize, w: usize) -> bool {
        u != v && self.collinear[u * self.n + v].contains(w)
    }
}

/// Classifies all triples of `g`; `d` must be `distance_matrix(g)`.
pub fn collinear_triples(g: &Graph, d: &DistanceMatrix) -> CollinearTriples {
    CollinearTriples::new(g, d)
}

/// Decides general position directly from distances, independent of the
/// between-set machinery: no triple of `s` may have one member lying on a
/// geodesic of the other two.
pub fn is_general_position(g: &Graph, s: &VertexSet) -> bool {
    is_general_position_with(&distance_matrix(g), s)
}

/// Same as [`is_general_position`] with a precomputed distance matrix.
pub fn is_general_position_with(d: &DistanceMatrix, s: &VertexSet) -> bool {
    let verts = s.indices();
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            for &w in verts.iter().skip(j + 1) {
                if d.is_between(u, v, w) || d.is_between(v, u, w) || d.is_between(u, w, v) {
                    return false;
                }
            }
        }
    }
    true
}

/// The census of general position sets by cardinality: `counts()[i]` is the
/// exact number of general position sets of size i. The empty set counts,
/// so `counts()[0] = 1` and the degree equals the gp number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GpCensus {
    n: usize,
    counts: Vec<BigUint>,
}

impl GpCensus {
    fn from_u128(n: usize, raw: Vec<u128>) -> Self {
        let mut counts: Vec<BigUint> = raw.into_iter().map(BigUint::from).collect();
        while counts.last().is_some_and(|c| *c == BigUint::from(0u32)) {
            counts.pop();
        }
        GpCensus { n, counts }
    }

    fn from_biguints(n: usize, mut counts: Vec<BigUint>) -> Self {
        while counts.last().is_some_and(|c| *c == BigUint::from(0u32)) {
            counts.pop();
        }
        GpCensus { n, counts }
    }

    /// Number of vertices of the underlying graph.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, size: usize) -> BigUint {
        self.counts.get(size).cloned().unwrap_or_default()
    }

    /// The gp number: the largest cardinality of a general position set.
    pub fn gp_number(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.counts.clone())
    }
}

struct Dfs<'a> {
    n: usize,
    triples: &'a CollinearTriples,
    members: Vec<usize>,
    forbidden: Vec<VertexSet>,
    counts: Vec<u128>,
    maximal: Option<Vec<VertexSet>>,
}

impl<'a> Dfs<'a> {
    fn new(n: usize, triples: &'a CollinearTriples, want_maximal: bool) -> Self {
        Dfs {
            n,
            triples,
            members: Vec::with_capacity(n),
            forbidden: vec![VertexSet::new(n); n + 1],
            counts: vec![0; n + 1],
            maximal: want_maximal.then(Vec::new),
        }
    }

    /// Visits every general position set extending `members` by vertices of
    /// larger index. `members.len() == depth` and `forbidden[depth]` holds
    /// the vertices blocked by some pair of `members`.
    fn explore(&mut self, depth: usize) {
        self.counts[depth] += 1;
        if let Some(out) = &mut self.maximal {
            // maximal iff no vertex outside the set can extend it
            if self.forbidden[depth].len() + depth == self.n {
                out.push(VertexSet::from_indices(self.n, self.members.iter().copied()));
            }
        }
        let start = self.members.last().map_or(0, |&last| last + 1);
        for w in start..self.n {
            if self.forbidden[depth].contains(w) {
                continue;
            }
            let (head, tail) = self.forbidden.split_at_mut(depth + 1);
            let next = &mut tail[0];
            next.copy_from(&head[depth]);
            for &x in &self.members {
                next.union_with(self.triples.collinear_with(x, w));
            }
            self.members.push(w);
            self.explore(depth + 1);
            self.members.pop();
        }
    }
}

fn census_impl(g: &Graph, want_maximal: bool) -> (GpCensus, Vec<VertexSet>) {
    let n = g.vertex_count();
    let d = distance_matrix(g);
    let triples = CollinearTriples::new(g, &d);
    let mut counts;
    let mut maximal = Vec::new();
    if n < PARALLEL_THRESHOLD {
        let mut dfs = Dfs::new(n, &triples, want_maximal);
        dfs.explore(0);
        counts = dfs.counts;
        if let Some(sets) = dfs.maximal {
            maximal = sets;
        }
    } else {
        // the empty set is handled at the root, branches split on the first vertex
        counts = vec![0; n + 1];
        counts[0] = 1;
        let branches: Vec<(Vec<u128>, Option<Vec<VertexSet>>)> = (0..n)
            .into_par_iter()
            .map(|v| {
                let mut dfs = Dfs::new(n, &triples, want_maximal);
                dfs.members.push(v);
                dfs.explore(1);
                (dfs.counts, dfs.maximal)
            })
            .collect();
        for (branch_counts, branch_maximal) in branches {
            for (i, c) in branch_counts.into_iter().enumerate() {
                counts[i] += c;
            }
            if let Some(sets) = branch_maximal {
                maximal.extend(sets);
            }
        }
    }
    if want_maximal && n == 0 {
        maximal.push(VertexSet::new(0));
    }
    maximal.sort_by_cached_key(|s| s.indices());
    (GpCensus::from_u128(n, counts), maximal)
}

/// Counts every general position set of `g` by cardinality, by depth-first
/// extension in increasing vertex order. Each partial set keeps an
/// incrementally maintained forbidden set, so a candidate is accepted or
/// rejected in O(1) per word. Runtime is proportional to the number of
/// general position sets, which is exponential in the worst case.
pub fn gp_polynomial(g: &Graph) -> GpCensus {
    census_impl(g, false).0
}

/// The gp number of `g`: the size of its largest general position set.
pub fn gp_number(g: &Graph) -> usize {
    gp_polynomial(g).gp_number()
}

/// All inclusion-maximal general position sets, each exactly once, sorted
/// lexicographically by their sorted member lists. A completed DFS set is
/// maximal iff its forbidden set plus itself covers the vertex set.
pub fn maximal_gp_sets(g: &Graph) -> Vec<VertexSet> {
    census_impl(g, true).1
}

/// For each subfamily size k ≥ 2 and intersection size t, the number of
/// k-element subfamilies of `sets` whose intersection has exactly t
/// vertices. The table of a single-set family is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionCensus {
    family_size: usize,
    /// counts[k][t], 0 ≤ k ≤ family_size, 0 ≤ t ≤ universe
    counts: Vec<Vec<u64>>,
}

impl IntersectionCensus {
    pub fn family_size(&self) -> usize {
        self.family_size
    }

    pub fn count(&self, k: usize, t: usize) -> u64 {
        self.counts
            .get(k)
            .and_then(|row| row.get(t))
            .copied()
            .unwrap_or(0)
    }

    /// Largest intersection size occurring for any k ≥ 2, or None if the
    /// census is empty.
    pub fn max_intersection_size(&self) -> Option<usize> {
        self.counts
            .iter()
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(_, &c)| c > 0)
                    .map(|(t, _)| t)
            })
            .max()
    }

    pub fn is_empty(&self) -> bool {
        self.family_size < 2
    }
}

/// Walks every subfamily of `sets` of size ≥ 2 (2^m of them) and tallies
/// intersection sizes. All sets must share one universe.
pub fn intersection_census(sets: &[VertexSet]) -> IntersectionCensus {
    let m = sets.len();
    let universe = sets.first().map_or(0, VertexSet::universe);
    assert!(
        sets.iter().all(|s| s.universe() == universe),
        "intersection census requires a common universe"
    );
    let mut counts = vec![vec![0u64; universe + 1]; m + 1];

    fn rec(
        sets: &[VertexSet],
        start: usize,
        depth: usize,
        inter: &VertexSet,
        counts: &mut [Vec<u64>],
    ) {
        for j in start..sets.len() {
            let ni = inter.intersection(&sets[j]);
            if depth + 1 >= 2 {
                counts[depth + 1][ni.len()] += 1;
            }
            rec(sets, j + 1, depth + 1, &ni, counts);
        }
    }

    if m > 0 {
        rec(sets, 0, 0, &VertexSet::full(universe), &mut counts);
    }
    IntersectionCensus {
        family_size: m,
        counts,
    }
}

/// ψ(G) by inclusion and exclusion over the maximal general position sets,
/// with the default cap of [`DEFAULT_MAX_MAXIMAL_SETS`] maximal sets.
pub fn psi_inclusion_exclusion(g: &Graph) -> Result<GpCensus> {
    psi_inclusion_exclusion_with_limit(g, DEFAULT_MAX_MAXIMAL_SETS)
}

/// Every general position set is a subset of some maximal one and every
/// subset of a general position set is again one, so with maximal sets
/// X_1..X_m:
///
///   ψ(G) = Σ_{∅ ≠ F ⊆ [m]} (−1)^{|F|−1} (1+x)^{|∩F|}.
///
/// Subfamilies whose intersection is empty contribute exactly their
/// constant term, and the alternating sum of all 2^m − 1 constants is 1.
/// The walk therefore adds (1+x)^{|∩F|} − 1 for subfamilies with nonempty
/// intersections only, pruning as soon as an intersection dies, and adds
/// the closing constant 1 once.
pub fn psi_inclusion_exclusion_with_limit(g: &Graph, max_sets: usize) -> Result<GpCensus> {
    let maximal = maximal_gp_sets(g);
    if maximal.len() > max_sets {
        return Err(Error::TooManyMaximalSets {
            count: maximal.len(),
            limit: max_sets,
        });
    }
    let n = g.vertex_count();
    let mut acc = vec![BigInt::from(0); n + 1];
    acc[0] = BigInt::from(1);

    fn rec(sets: &[VertexSet], start: usize, depth: usize, inter: &VertexSet, acc: &mut [BigInt]) {
        for j in start..sets.len() {
            let ni = inter.intersection(&sets[j]);
            if ni.is_empty() {
                continue;
            }
            let size = ni.len() as u64;
            let positive = depth.is_multiple_of(2);
            for i in 1..=size {
                let term = BigInt::from(binomial(size, i));
                if positive {
                    acc[i as usize] += term;
                } else {
                    acc[i as usize] -= term;
                }
            }
            rec(sets, j + 1, depth + 1, &ni, acc);
        }
    }

    rec(&maximal, 0, 0, &VertexSet::full(n), &mut acc);
    let counts = acc
        .into_iter()
        .map(|c| {
            c.to_biguint()
                .expect("inclusion-exclusion must produce non-negative counts")
        })
        .collect();
    Ok(GpCensus::from_biguints(n, counts))
}
