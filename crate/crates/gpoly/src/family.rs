//! Named parametric graph families and the text DSL that selects them.
//!
//! Vertex indexing of every builder is fixed and documented so that outputs
//! are reproducible bit for bit.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

/// A parsed description of a named graph family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    /// K_n, n ≥ 1.
    Complete { n: usize },
    /// P_n, n ≥ 1.
    Path { n: usize },
    /// C_n, n ≥ 3.
    Cycle { n: usize },
    /// K_{m,n}, m, n ≥ 1.
    CompleteBipartite { m: usize, n: usize },
    /// P_r □ P_s, r, s ≥ 1.
    Grid { r: usize, s: usize },
    /// Comb G_n = corona of P_n, n ≥ 1.
    Comb { n: usize },
    /// Broom B_{s,r}: a path u_0..u_s with r pendant leaves at u_0; s, r ≥ 0.
    Broom { s: usize, r: usize },
    /// Kneser graph K(n,2), n ≥ 2: 2-subsets of an n-set, adjacent iff disjoint.
    Kneser2 { n: usize },
    /// T*(r,a): complete a-partite graph with parts of size r, minus the
    /// clique on the a same-index vertices for each of the r indices.
    TStar { r: usize, a: usize },
    /// Spider tree: one leaf of P_{13k}, P_{5k}, P_{4k} identified; k ≥ 1.
    Tree1 { k: usize },
    /// Spider tree: one leaf of P_{10k}, P_{9k}, P_{3k} identified; k ≥ 1.
    Tree2 { k: usize },
    /// The Petersen graph with its standard-drawing labels.
    Petersen,
    /// Corona of another family's graph.
    Corona(Box<FamilySpec>),
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::Comb { .. } => "comb",
            FamilySpec::Broom { .. } => "broom",
            FamilySpec::Kneser2 { .. } => "kneser2",
            FamilySpec::TStar { .. } => "tstar",
            FamilySpec::Tree1 { .. } => "tree1",
            FamilySpec::Tree2 { .. } => "tree2",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Corona(_) => "corona",
        }
    }

    /// Parameter names of a family, in the DSL order.
    pub fn param_names(family: &str) -> Option<&'static [&'static str]> {
        Some(match family {
            "complete" | "path" | "cycle" | "comb" | "kneser2" => &["n"],
            "tree1" | "tree2" => &["k"],
            "complete_bipartite" => &["m", "n"],
            "grid" => &["r", "s"],
            "broom" => &["s", "r"],
            "tstar" => &["r", "a"],
            "petersen" => &[],
            _ => return None,
        })
    }

    /// Constructs a spec from a family name and positional parameters,
    /// checking arity and ranges.
    pub fn from_params(family: &str, params: &[usize]) -> Result<FamilySpec> {
        let arity = |expected: usize| -> Result<()> {
            if params.len() != expected {
                Err(Error::FamilyArity {
                    family: Self::static_name(family)?,
                    expected,
                    got: params.len(),
                })
            } else {
                Ok(())
            }
        };
        let spec = match family {
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: params[0] }
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: params[0] }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: params[0] }
            }
            "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite {
                    m: params[0],
                    n: params[1],
                }
            }
            "grid" => {
                arity(2)?;
                FamilySpec::Grid {
                    r: params[0],
                    s: params[1],
                }
            }
            "comb" => {
                arity(1)?;
                FamilySpec::Comb { n: params[0] }
            }
            "broom" => {
                arity(2)?;
                FamilySpec::Broom {
                    s: params[0],
                    r: params[1],
                }
            }
            "kneser2" => {
                arity(1)?;
                FamilySpec::Kneser2 { n: params[0] }
            }
            "tstar" => {
                arity(2)?;
                FamilySpec::TStar {
                    r: params[0],
                    a: params[1],
                }
            }
            "tree1" => {
                arity(1)?;
                FamilySpec::Tree1 { k: params[0] }
            }
            "tree2" => {
                arity(1)?;
                FamilySpec::Tree2 { k: params[0] }
            }
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn static_name(family: &str) -> Result<&'static str> {
        for name in [
            "complete",
            "path",
            "cycle",
            "complete_bipartite",
            "grid",
            "comb",
            "broom",
            "kneser2",
            "tstar",
            "tree1",
            "tree2",
            "petersen",
            "corona",
        ] {
            if name == family {
                return Ok(name);
            }
        }
        Err(Error::UnknownFamily(family.to_string()))
    }

    /// Checks parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let range = |family: &'static str, ok: bool, reason: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::FamilyRange {
                    family,
                    reason: reason.to_string(),
                })
            }
        };
        match *self {
            FamilySpec::Complete { n } => range("complete", n >= 1, "requires n >= 1"),
            FamilySpec::Path { n } => range("path", n >= 1, "requires n >= 1"),
            FamilySpec::Cycle { n } => range("cycle", n >= 3, "requires n >= 3"),
            FamilySpec::CompleteBipartite { m, n } => {
                range("complete_bipartite", m >= 1 && n >= 1, "requires m, n >= 1")
            }
            FamilySpec::Grid { r, s } => range("grid", r >= 1 && s >= 1, "requires r, s >= 1"),
            FamilySpec::Comb { n } => range("comb", n >= 1, "requires n >= 1"),
            FamilySpec::Broom { .. } => Ok(()),
            FamilySpec::Kneser2 { n } => range("kneser2", n >= 2, "requires n >= 2"),
            FamilySpec::TStar { r, a } => range("tstar", r >= 1 && a >= 1, "requires r, a >= 1"),
            FamilySpec::Tree1 { k } => range("tree1", k >= 1, "requires k >= 1"),
            FamilySpec::Tree2 { k } => range("tree2", k >= 1, "requires k >= 1"),
            FamilySpec::Petersen => Ok(()),
            FamilySpec::Corona(ref inner) => inner.validate(),
        }
    }

    /// Builds the graph this spec names.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::CompleteBipartite { m, n } => complete_bipartite(m, n),
            FamilySpec::Grid { r, s } => path(r).cartesian_product(&path(s)),
            FamilySpec::Comb { n } => path(n).corona(),
            FamilySpec::Broom { s, r } => broom(s, r),
            FamilySpec::Kneser2 { n } => kneser2(n),
            FamilySpec::TStar { r, a } => tstar(r, a),
            FamilySpec::Tree1 { k } => spider(&[13 * k - 1, 5 * k - 1, 4 * k - 1]),
            FamilySpec::Tree2 { k } => spider(&[10 * k - 1, 9 * k - 1, 3 * k - 1]),
            FamilySpec::Petersen => petersen(),
            FamilySpec::Corona(ref inner) => inner.build()?.corona(),
        })
    }
}

/// DSL strings: `complete:5`, `complete_bipartite:8,4`, `broom:17,6` (order
/// s,r), `tstar:3,2` (order r,a), `petersen`, `corona(path:5)`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("corona(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::FamilyParse(format!("unbalanced parentheses in '{s}'")))?;
            return Ok(FamilySpec::Corona(Box::new(inner.parse()?)));
        }
        let (name, params) = match s.split_once(':') {
            None => (s, Vec::new()),
            Some((name, rest)) => {
                let mut params = Vec::new();
                for tok in rest.split(',') {
                    let v: usize = tok
                        .trim()
                        .parse()
                        .map_err(|_| Error::FamilyParse(format!("bad parameter '{tok}' in '{s}'")))?;
                    params.push(v);
                }
                (name, params)
            }
        };
        FamilySpec::from_params(name.trim(), &params)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::CompleteBipartite { m, n } => write!(f, "complete_bipartite:{m},{n}"),
            FamilySpec::Grid { r, s } => write!(f, "grid:{r},{s}"),
            FamilySpec::Comb { n } => write!(f, "comb:{n}"),
            FamilySpec::Broom { s, r } => write!(f, "broom:{s},{r}"),
            FamilySpec::Kneser2 { n } => write!(f, "kneser2:{n}"),
            FamilySpec::TStar { r, a } => write!(f, "tstar:{r},{a}"),
            FamilySpec::Tree1 { k } => write!(f, "tree1:{k}"),
            FamilySpec::Tree2 { k } => write!(f, "tree2:{k}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Corona(inner) => write!(f, "corona({inner})"),
        }
    }
}

/// K_n on vertices 0..n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// P_n with edges i — i+1.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// C_n with edges i — (i+1 mod n).
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// K_{m,n} with one side 0..m and the other m..m+n.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut edges = Vec::with_capacity(m * n);
    for u in 0..m {
        for v in 0..n {
            edges.push((u, m + v));
        }
    }
    Graph::from_edge_list(m + n, &edges).expect("valid edges")
}

/// Broom B_{s,r}: handle vertices u_0..u_s at indices 0..=s, leaves v_1..v_r
/// at indices s+1..=s+r, edges u_i — u_{i+1} and u_0 — v_j.
pub fn broom(s: usize, r: usize) -> Graph {
    let n = s + r + 1;
    let mut edges = Vec::with_capacity(s + r);
    for i in 0..s {
        edges.push((i, i + 1));
    }
    for j in 1..=r {
        edges.push((0, s + j));
    }
    let mut g = Graph::from_edge_list(n, &edges).expect("valid edges");
    let mut labels: Vec<String> = (0..=s).map(|i| format!("u{i}")).collect();
    labels.extend((1..=r).map(|j| format!("v{j}")));
    g.set_labels(labels);
    g
}

/// Kneser graph K(n,2): vertices are the 2-subsets {a,b} of {1..n} in
/// lexicographic order, adjacent iff disjoint.
pub fn kneser2(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            pairs.push((a, b));
        }
    }
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::from_edge_list(pairs.len(), &edges).expect("valid edges");
    g.set_labels(pairs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect());
    g
}

/// T*(r,a): vertex (p,j) for part p in 0..a and index j in 0..r sits at
/// p·r + j; (p,j) ~ (q,l) iff p ≠ q and j ≠ l. Labeled "(p+1)_(j+1)".
pub fn tstar(r: usize, a: usize) -> Graph {
    let n = r * a;
    let mut edges = Vec::new();
    for p in 0..a {
        for q in p + 1..a {
            for j in 0..r {
                for l in 0..r {
                    if j != l {
                        let (x, y) = (p * r + j, q * r + l);
                        if x < y {
                            edges.push((x, y));
                        } else {
                            edges.push((y, x));
                        }
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let mut g = Graph::from_edge_list(n, &edges).expect("valid edges");
    let mut labels = Vec::with_capacity(n);
    for p in 0..a {
        for j in 0..r {
            labels.push(format!("{}_{}", p + 1, j + 1));
        }
    }
    g.set_labels(labels);
    g
}

/// Spider tree: a center vertex 0 with pendant paths of the given edge
/// lengths attached, numbered leg by leg.
pub fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// The Petersen graph: outer 5-cycle u_0..u_4 at indices 0..4, inner
/// pentagram v_0..v_4 at indices 5..9, spokes u_i — v_i, and v_i — v_{i+2}.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5 + i));
        let (x, y) = (5 + i, 5 + (i + 2) % 5);
        edges.push(if x < y { (x, y) } else { (y, x) });
    }
    edges.sort_unstable();
    edges.dedup();
    let mut g = Graph::from_edge_list(10, &edges).expect("valid edges");
    let mut labels: Vec<String> = (0..5).map(|i| format!("u{i}")).collect();
    labels.extend((0..5).map(|i| format!("v{i}")));
    g.set_labels(labels);
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definitional_counts() {
        assert_eq!(path(7).edge_count(), 6);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(complete(8).edge_count(), 28);
        let comb5 = path(5).corona();
        assert_eq!((comb5.vertex_count(), comb5.edge_count()), (10, 9));
        let b = broom(4, 6);
        assert_eq!((b.vertex_count(), b.edge_count()), (11, 10));
        let k = kneser2(6);
        assert_eq!(k.vertex_count(), 15);
        assert!(((0..15).all(|v| k.degree(v) == 6)));
    }

    #[test]
    fn kneser_5_is_petersen_shaped() {
        let k = kneser2(5);
        assert_eq!(k.vertex_count(), 10);
        assert_eq!(k.edge_count(), 15);
        assert!((0..10).all(|v| k.degree(v) == 3));
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn trees_have_20k_vertices_at_k1() {
        for spec in [FamilySpec::Tree1 { k: 1 }, FamilySpec::Tree2 { k: 1 }] {
            let t = spec.build().unwrap();
            assert_eq!(t.vertex_count(), 20);
            assert_eq!(t.edge_count(), 19);
            assert!(t.is_connected());
            let leaves = (0..20).filter(|&v| t.degree(v) == 1).count();
            assert_eq!(leaves, 3);
        }
    }

    #[test]
    fn tstar_small_cases() {
        // T*(2,2) is K_{2,2} minus a perfect matching, i.e. 2K_2
        let t = tstar(2, 2);
        assert_eq!((t.vertex_count(), t.edge_count()), (4, 2));
        assert_eq!(t.components().len(), 2);
        // T*(r,1) and T*(1,a) have no edges
        assert_eq!(tstar(5, 1).edge_count(), 0);
        assert_eq!(tstar(1, 5).edge_count(), 0);
        // T*(3,2) is the crown K_{3,3} minus a perfect matching: a 6-cycle
        let c = tstar(3, 2);
        assert_eq!((c.vertex_count(), c.edge_count()), (6, 6));
        assert!((0..6).all(|v| c.degree(v) == 2));
        assert!(c.is_connected());
    }

    #[test]
    fn broom_degenerate_shapes() {
        // B_{0,r} is a star
        let star = broom(0, 4);
        assert_eq!(star.degree(0), 4);
        // B_{s,0} is a path
        let p = broom(3, 0);
        assert_eq!((p.vertex_count(), p.edge_count()), (4, 3));
        assert_eq!(broom(0, 0).vertex_count(), 1);
    }

    #[test]
    fn dsl_roundtrip() {
        for s in [
            "complete:5",
            "path:7",
            "cycle:6",
            "complete_bipartite:8,4",
            "grid:3,4",
            "comb:5",
            "broom:17,6",
            "kneser2:5",
            "tstar:3,2",
            "tree1:1",
            "tree2:1",
            "petersen",
            "corona(path:5)",
            "corona(corona(complete:2))",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
    }

    #[test]
    fn dsl_errors() {
        assert!(matches!(
            "banana:3".parse::<FamilySpec>(),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            "path".parse::<FamilySpec>(),
            Err(Error::FamilyArity { .. })
        ));
        assert!(matches!(
            "grid:3".parse::<FamilySpec>(),
            Err(Error::FamilyArity { .. })
        ));
        assert!(matches!(
            "cycle:2".parse::<FamilySpec>(),
            Err(Error::FamilyRange { .. })
        ));
        assert!(matches!(
            "kneser2:1".parse::<FamilySpec>(),
            Err(Error::FamilyRange { .. })
        ));
        assert!(matches!(
            "petersen:1".parse::<FamilySpec>(),
            Err(Error::FamilyArity { .. })
        ));
        assert!(matches!(
            "corona(path:5".parse::<FamilySpec>(),
            Err(Error::FamilyParse(_))
        ));
        assert!(matches!(
            "path:x".parse::<FamilySpec>(),
            Err(Error::FamilyParse(_))
        ));
    }

    #[test]
    fn comb_equals_corona_of_path() {
        let via_dsl: FamilySpec = "comb:5".parse().unwrap();
        let comb = via_dsl.build().unwrap();
        let corona = path(5).corona();
        assert_eq!(comb.edges(), corona.edges());
    }
}
