//! Simple undirected graphs on vertices `0..n`, plus the operations used to
//! combine them: disjoint union, join, Cartesian product, and corona.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph. Vertices are the indices `0..n`.
/// Vertex labels are optional and carried by the family constructors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph from an explicit edge list. Self-loops, out-of-range
    /// endpoints and duplicate edges are rejected, naming the offending edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::EndpointOutOfRange { u, v, n: self.n });
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    /// Neighborhood of `v` as a vertex set.
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Edges as sorted pairs (u < v), in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
    }

    /// Human-readable name of a vertex: its label if present, else its index.
    pub fn vertex_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.len() == self.n
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Disjoint union; the second graph's indices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("valid edge");
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v).expect("valid edge");
        }
        g
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v).expect("valid edge");
            }
        }
        g
    }

    /// Cartesian product; vertex (a, b) is mapped to index `a * other.n + b`.
    /// (a,b) ~ (a',b') iff a=a' and b~b', or b=b' and a~a'.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n * other.n);
        for a in 0..self.n {
            for (u, v) in other.edges() {
                g.add_edge(a * other.n + u, a * other.n + v).expect("valid edge");
            }
        }
        for b in 0..other.n {
            for (u, v) in self.edges() {
                g.add_edge(u * other.n + b, v * other.n + b).expect("valid edge");
            }
        }
        g
    }

    /// Corona with a single vertex: attaches one new pendant neighbor to
    /// every vertex. The pendant of vertex `i` gets index `n + i`.
    pub fn corona(&self) -> Graph {
        let mut g = Graph::empty(2 * self.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("valid edge");
        }
        for i in 0..self.n {
            g.add_edge(i, self.n + i).expect("valid edge");
        }
        if let Some(labels) = &self.labels {
            let mut all = labels.clone();
            all.extend(labels.iter().map(|l| format!("{l}'")));
            g.set_labels(all);
        }
        g
    }

    /// The graph with vertex `i` renamed to `perm[i]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("valid edge");
        }
        if let Some(labels) = &self.labels {
            let mut out = vec![String::new(); self.n];
            for (v, l) in labels.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            g.set_labels(out);
        }
        g
    }

    /// Subgraph induced by `verts` (deduplicated, sorted); vertex `verts[i]`
    /// becomes index `i`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut vs: Vec<usize> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut g = Graph::empty(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("valid edge");
                }
            }
        }
        g
    }

    /// Parses the edge-list text format: first line `n m`, then `m` lines
    /// `u v` with 0-based endpoints.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeListParse("missing 'n m' header line".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeListParse(format!("bad header '{header}'")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeListParse(format!("bad header '{header}'")))?;
        if it.next().is_some() {
            return Err(Error::EdgeListParse(format!("bad header '{header}'")));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeListParse(format!("bad edge line '{line}'")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeListParse(format!("bad edge line '{line}'")))?;
            if it.next().is_some() {
                return Err(Error::EdgeListParse(format!("bad edge line '{line}'")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::EdgeListParse(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Writes the edge-list text format accepted by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
