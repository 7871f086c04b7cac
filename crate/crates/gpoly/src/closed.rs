//! Closed-form general position polynomials for the named families, the
//! clique and independent-union-of-cliques counting polynomials, the join
//! identity, and the broom non-unimodality threshold.
//!
//! Every formula here is cross-checked against the enumeration engine in the
//! test suites; the binomial convention C(a,b) = 0 for b > a keeps the
//! formulas valid at small parameters.

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::poly::{binomial, double_factorial_odd, Polynomial};
use crate::vertex_set::VertexSet;
use num_bigint::{BigInt, BigUint};

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

/// Exact division that panics on a nonzero remainder; the quotients used
/// here are counts, so a remainder means a broken formula.
fn exact_div(num: BigInt, den: u64) -> BigUint {
    let den = BigInt::from(den);
    let (q, r) = (num.clone() / &den, num % &den);
    assert!(r == BigInt::from(0), "non-exact division in a count formula");
    q.to_biguint().expect("counts are non-negative")
}

/// The closed-form ψ for a family spec. Supported families: complete, path,
/// cycle, complete_bipartite, grid (r,s ≥ 2), comb, broom, kneser2, tstar,
/// tree1, tree2. Everything else reports an unsupported-family error.
pub fn closed_form(spec: &FamilySpec) -> Result<Polynomial> {
    spec.validate()?;
    match *spec {
        FamilySpec::Complete { n } => Ok(Polynomial::binomial_power(n)),
        FamilySpec::Path { n } => Ok(psi_path(n)),
        FamilySpec::Cycle { n } => Ok(psi_cycle(n)),
        FamilySpec::CompleteBipartite { m, n } => Ok(psi_complete_bipartite(m, n)),
        FamilySpec::Grid { r, s } => psi_grid(r, s),
        FamilySpec::Comb { n } => Ok(psi_comb(n)),
        FamilySpec::Broom { s, r } => Ok(psi_broom(s, r)),
        FamilySpec::Kneser2 { n } => Ok(psi_kneser2(n)),
        FamilySpec::TStar { r, a } => Ok(psi_tstar(r, a)),
        FamilySpec::Tree1 { k } | FamilySpec::Tree2 { k } => Ok(psi_tree_pair(k)),
        FamilySpec::Petersen | FamilySpec::Corona(_) => {
            Err(Error::UnsupportedClosedForm(spec.to_string()))
        }
    }
}

/// ψ(P_n) = 1 + nx + C(n,2)x²: paths have gp number 2 (for n ≥ 2).
fn psi_path(n: usize) -> Polynomial {
    Polynomial::from_coeffs(vec![big(1), big(n), binomial(n as u64, 2)])
}

/// Cycles, split by parity. With d = ⌊n/2⌋, every pair at distance q on the
/// cycle carries q−1 collinear mids; antipodal pairs of even cycles carry
/// n−2 of them.
fn psi_cycle(n: usize) -> Polynomial {
    let nn = n as u64;
    let cubic: BigUint = if n % 2 == 1 {
        let d = nn / 2;
        let bad = big(n) * binomial(d, 2);
        binomial(nn, 3) - bad
    } else {
        let d = nn / 2;
        let bad = big(n) * binomial(d - 1, 2) + big(n) * big(n - 2) / big(2);
        binomial(nn, 3) - bad
    };
    Polynomial::from_coeffs(vec![big(1), big(n), binomial(nn, 2), cubic])
}

/// ψ(K_{m,n}): every set of size ≥ 3 in general position is an independent
/// set inside one side.
fn psi_complete_bipartite(m: usize, n: usize) -> Polynomial {
    let total = (m + n) as u64;
    let mut coeffs = vec![big(1), big(m + n), binomial(total, 2)];
    for i in 3..=m.max(n) as u64 {
        coeffs.push(binomial(m as u64, i) + binomial(n as u64, i));
    }
    Polynomial::from_coeffs(coeffs)
}

/// The number of maximum-size general position sets of the grid P_r □ P_s:
/// 6 when r = s = 2; s(s−1)(s−2)/3 when r = 2 ≤ s; and for r, s ≥ 3
///
///   r s (r−1)² (r−2) (s−1)² (s−2) / 144.
///
/// Requires r, s ≥ 2.
pub fn grid_maximum_gp_count(r: usize, s: usize) -> Result<BigUint> {
    let (r, s) = (r.min(s) as u64, r.max(s) as u64);
    if r < 2 {
        return Err(Error::FamilyRange {
            family: "grid",
            reason: "maximum-count formula requires r, s >= 2".into(),
        });
    }
    if r == 2 && s == 2 {
        return Ok(big(6));
    }
    if r == 2 {
        return Ok(exact_div(BigInt::from(s * (s - 1) * (s - 2)), 3));
    }
    let num = BigInt::from(r)
        * BigInt::from(s)
        * BigInt::from((r - 1) * (r - 1) * (r - 2))
        * BigInt::from((s - 1) * (s - 1) * (s - 2));
    Ok(exact_div(num, 144))
}

/// Grid polynomials, split on the three shape cases. For r, s ≥ 3 the cubic
/// coefficient is (r−1)r(s−1)s(r(2s−1)−s−4)/18 and the quartic one is
/// [`grid_maximum_gp_count`]. Requires r, s ≥ 2.
fn psi_grid(r: usize, s: usize) -> Result<Polynomial> {
    let (r, s) = (r.min(s), r.max(s));
    if r < 2 {
        return Err(Error::UnsupportedClosedForm(format!(
            "grid:{r},{s} (closed form needs r, s >= 2; grid:1,n is path:n)"
        )));
    }
    let n = (r * s) as u64;
    if r == 2 && s == 2 {
        return Ok(Polynomial::from_u64_coeffs(&[1, 4, 6]));
    }
    if r == 2 {
        let cubic = grid_maximum_gp_count(r, s)?;
        return Ok(Polynomial::from_coeffs(vec![
            big(1),
            big(2 * s),
            binomial(n, 2),
            cubic,
        ]));
    }
    let (ru, su) = (r as u64, s as u64);
    let cubic_num = BigInt::from(ru * (ru - 1) * su * (su - 1))
        * BigInt::from(ru * (2 * su - 1) - su - 4);
    let cubic = exact_div(cubic_num, 18);
    let quartic = grid_maximum_gp_count(r, s)?;
    Ok(Polynomial::from_coeffs(vec![
        big(1),
        big(r * s),
        binomial(n, 2),
        cubic,
        quartic,
    ]))
}

/// ψ of the comb G_n (corona of P_n). For k ≥ 3 a set holds zero, one, or
/// two path vertices:
///
///   a_k = C(n,k) + Σ_i [C(i−1,k−1) + C(n−i,k−1)] + Σ_{i<j} C(j−i−1,k−2).
fn psi_comb(n: usize) -> Polynomial {
    let nn = n as u64;
    let mut coeffs = vec![big(1), big(2 * n), binomial(2 * nn, 2)];
    for k in 3..=nn {
        let mut a = binomial(nn, k);
        for i in 1..=nn {
            a += binomial(i - 1, k - 1) + binomial(nn - i, k - 1);
        }
        for i in 1..nn {
            for j in i + 1..=nn {
                a += binomial(j - i - 1, k - 2);
            }
        }
        coeffs.push(a);
    }
    Polynomial::from_coeffs(coeffs)
}

/// ψ(B_{s,r}): beyond the generic quadratic start, a set of size k ≥ 3 takes
/// k leaves, or one handle vertex other than the center plus k−1 leaves:
/// b_k = s·C(r,k−1) + C(r,k).
fn psi_broom(s: usize, r: usize) -> Polynomial {
    let (su, ru) = (s as u64, r as u64);
    let total = su + ru + 1;
    let mut coeffs = vec![big(1), big(s + r + 1), binomial(total, 2)];
    for k in 3..=ru + 1 {
        coeffs.push(big(s) * binomial(ru, k - 1) + binomial(ru, k));
    }
    Polynomial::from_coeffs(coeffs)
}

/// ψ(K(n,2)). General position sets of size j are cliques (choose 2j points
/// and pair them up: C(n,2j)·(2j−1)!! ways) or stars {ax_1,…,ax_j}
/// (n·C(n−1,j) ways), plus for sizes 3..6 the sporadic sets living inside a
/// fixed 4-point subset (triangles at size 3 and subsets of the 3K_2 on six
/// vertices).
fn psi_kneser2(n: usize) -> Polynomial {
    let nn = n as u64;
    let deg = if n >= 7 { n - 1 } else { 6 };
    let mut coeffs = vec![BigUint::from(0u32); deg + 1];
    coeffs[0] = big(1);
    coeffs[1] = binomial(nn, 2);
    coeffs[3] += binomial(nn, 3) + big(12) * binomial(nn, 4);
    coeffs[4] += big(15) * binomial(nn, 4);
    coeffs[5] += big(6) * binomial(nn, 4);
    coeffs[6] += binomial(nn, 4);
    for j in 2..nn {
        coeffs[j as usize] +=
            binomial(nn, 2 * j) * double_factorial_odd(j) + big(n) * binomial(nn - 1, j);
    }
    Polynomial::from_coeffs(coeffs)
}

/// ψ(T*(r,a)). The graph is symmetric in r and a ((p,j) ~ (q,l) iff both
/// coordinates differ). Cases:
///
/// * min(r,a) = 1, or r = a = 2: no edges resp. 2K_2, so ψ = (1+x)^{ra};
/// * a = 2, r ≥ 3 (the crown K_{r,r} minus a perfect matching, diameter 3):
///   sets of size ≥ 3 are one-sided independent sets, 2·C(r,i) each;
/// * r, a ≥ 3 (diameter 2, general position = induced union of cliques):
///   one-part sets a·C(r,i), one-index transversals r·C(a,i), cliques
///   i!·C(r,i)·C(a,i), plus K_2 ∪ K_1 triples 2a(a−1)C(r,2) and 2K_2
///   rectangles C(a,2)C(r,2).
fn psi_tstar(r: usize, a: usize) -> Polynomial {
    let n = r * a;
    let (lo, hi) = (r.min(a) as u64, r.max(a) as u64);
    if lo == 1 || (lo == 2 && hi == 2) {
        return Polynomial::binomial_power(n);
    }
    let nn = n as u64;
    let mut coeffs = vec![BigUint::from(0u32); n + 1];
    coeffs[0] = big(1);
    coeffs[1] = big(n);
    coeffs[2] = binomial(nn, 2);
    if lo == 2 {
        for i in 3..=hi {
            coeffs[i as usize] += big(2) * binomial(hi, i);
        }
        return Polynomial::from_coeffs(coeffs);
    }
    let (ru, au) = (r as u64, a as u64);
    coeffs[3] += big(2 * a * (a - 1)) * binomial(ru, 2);
    coeffs[4] += binomial(au, 2) * binomial(ru, 2);
    let mut fact = big(2); // i! running from i = 3
    for i in 3..=nn {
        fact *= i;
        coeffs[i as usize] += big(a) * binomial(ru, i)
            + big(r) * binomial(au, i)
            + &fact * binomial(ru, i) * binomial(au, i);
    }
    Polynomial::from_coeffs(coeffs)
}

/// The shared polynomial of the two spider-tree families at scale k:
/// 1 + 20k·x + C(20k,2)·x² + 144k³·x³.
fn psi_tree_pair(k: usize) -> Polynomial {
    let ku = k as u64;
    Polynomial::from_coeffs(vec![
        big(1),
        big(20 * k),
        binomial(20 * ku, 2),
        big(144) * big(k) * big(k) * big(k),
    ])
}

/// The clique counting polynomial: coefficient i is the number of cliques
/// of order i, with c_0 = 1 for the empty clique. Counts by size via a
/// two-way pivot recursion; a candidate set that induces a complete graph
/// contributes a whole binomial row at once.
pub fn clique_polynomial(g: &Graph) -> Polynomial {
    let n = g.vertex_count();
    let mut counts = vec![BigUint::from(0u32); n + 1];
    counts[0] = big(1);
    let candidates = VertexSet::full(n);
    count_cliques(g, &candidates, 0, &mut counts);
    Polynomial::from_coeffs(counts)
}

fn induces_complete(g: &Graph, p: &VertexSet) -> bool {
    let verts = p.indices();
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn count_cliques(g: &Graph, p: &VertexSet, depth: usize, counts: &mut [BigUint]) {
    let size = p.len();
    if size == 0 {
        return;
    }
    if induces_complete(g, p) {
        for j in 1..=size as u64 {
            counts[depth + j as usize] += binomial(size as u64, j);
        }
        return;
    }
    // pivot on the candidate of largest degree inside p
    let pivot = p
        .iter()
        .max_by_key(|&v| g.neighbor_set(v).intersection(p).len())
        .expect("nonempty candidate set");
    let mut without = p.clone();
    without.remove(pivot);
    count_cliques(g, &without, depth, counts);
    counts[depth + 1] += big(1);
    let within = g.neighbor_set(pivot).intersection(&without);
    count_cliques(g, &within, depth + 1, counts);
}

/// The independent-union-of-cliques counting polynomial: coefficient i is
/// the number of i-vertex subsets whose induced subgraph is a disjoint
/// union of complete graphs (no induced path on three vertices), including
/// the empty set. Factorizes over connected components; complete components
/// contribute (1+x)^m directly, others are walked by a DFS that extends a
/// partial set only when the candidate sees exactly one whole clique
/// component or nothing.
pub fn icliques_polynomial(g: &Graph) -> Polynomial {
    let mut acc = Polynomial::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        acc = &acc * &icliques_component(&sub);
    }
    acc
}

fn icliques_component(g: &Graph) -> Polynomial {
    let n = g.vertex_count();
    let full = VertexSet::full(n);
    if induces_complete(g, &full) {
        return Polynomial::binomial_power(n);
    }
    let mut counts = vec![0u128; n + 1];
    let mut clusters: Vec<VertexSet> = Vec::new();
    icliques_dfs(g, 0, &mut clusters, 0, &mut counts);
    counts[0] = 1;
    Polynomial::from_coeffs(counts.into_iter().map(BigUint::from).collect())
}

fn icliques_dfs(
    g: &Graph,
    start: usize,
    clusters: &mut Vec<VertexSet>,
    size: usize,
    counts: &mut [u128],
) {
    let n = g.vertex_count();
    for v in start..n {
        let nbrs = g.neighbor_set(v);
        let mut touched = None;
        let mut ok = true;
        for (ci, c) in clusters.iter().enumerate() {
            let hits = c.intersection(nbrs).len();
            if hits == 0 {
                continue;
            }
            if hits == c.len() && touched.is_none() {
                touched = Some(ci);
            } else {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        match touched {
            Some(ci) => {
                clusters[ci].insert(v);
                counts[size + 1] += 1;
                icliques_dfs(g, v + 1, clusters, size + 1, counts);
                clusters[ci].remove(v);
            }
            None => {
                clusters.push(VertexSet::from_indices(n, [v]));
                counts[size + 1] += 1;
                icliques_dfs(g, v + 1, clusters, size + 1, counts);
                clusters.pop();
            }
        }
    }
}

/// ψ(G ∨ H) from the clique polynomials of the factors:
///
///   ψ(G ∨ H) = (C(G) − 1)(C(H) − 1) + C_i(G) + C_i(H) − 1.
///
/// In the join, a general position set either meets both sides (then each
/// side must induce a clique) or lies in one side (then it must induce a
/// union of cliques, since cross pairs at distance 2 see the far side).
/// Both factors must have at least one vertex: joining with the empty graph
/// adds no cross edges, and the one-sided distances the identity relies on
/// do not collapse.
pub fn psi_join(g: &Graph, h: &Graph) -> Polynomial {
    let cg = clique_polynomial(g);
    let ch = clique_polynomial(h);
    let cig = icliques_polynomial(g);
    let cih = icliques_polynomial(h);
    let deg = g.vertex_count() + h.vertex_count();
    let mut coeffs = vec![BigUint::from(0u32); deg + 1];
    for i in 1..=g.vertex_count() {
        for j in 1..=h.vertex_count() {
            coeffs[i + j] += cg.coeff(i) * ch.coeff(j);
        }
    }
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c += cig.coeff(i) + cih.coeff(i);
    }
    coeffs[0] -= big(1);
    Polynomial::from_coeffs(coeffs)
}

/// The smallest handle length s at which the broom B_{s,r} is guaranteed a
/// non-unimodal polynomial, for r ≥ 6:
///
///   s ≥ ⌈ (r²−3r−1)/2 + √(3r⁴−14r³−3r²+14r+3) / (2√3) ⌉,
///
/// evaluated with exact integer arithmetic: the smallest integer s with
/// t = 2s − (r²−3r−1) ≥ 0 and 3t² ≥ 3r⁴−14r³−3r²+14r+3.
pub fn broom_threshold(r: usize) -> Result<usize> {
    if r < 6 {
        return Err(Error::BroomThresholdDomain(r));
    }
    let r = BigUint::from(r);
    let c = &r * &r - big(3) * &r - big(1);
    let d = big(3) * r.pow(4) + big(14) * &r + big(3) - (big(14) * r.pow(3) + big(3) * &r * &r);
    let mut t = (&d / big(3)).sqrt();
    while big(3) * &t * &t < d {
        t += 1u32;
    }
    let s = (c + t + big(1)) / big(2);
    Ok(usize::try_from(&s).expect("threshold fits in usize"))
}
