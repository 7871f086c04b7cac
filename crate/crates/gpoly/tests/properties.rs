//! Property and invariant tests: random-graph corpora checked against a
//! brute-force oracle, structural invariants of the distance matrix and the
//! graph operations, and the polynomial identities of the engines.

use gpoly::{
    binomial, clique_polynomial, closed_form, complete_bipartite, distance_matrix, gp_polynomial,
    icliques_polynomial, is_general_position_with, maximal_gp_sets, psi_inclusion_exclusion,
    psi_join, Distance, FamilySpec, GpCensus, Graph, Polynomial, VertexSet,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Brute-force census over all 2^n subsets, counting with the direct
/// distance-based general position test.
fn oracle_census(g: &Graph) -> Vec<BigUint> {
    let n = g.vertex_count();
    assert!(n <= 20, "oracle is exponential");
    let d = distance_matrix(g);
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        let s = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if is_general_position_with(&d, &s) {
            counts[s.len()] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts.into_iter().map(BigUint::from).collect()
}

fn census_counts(c: &GpCensus) -> Vec<BigUint> {
    c.counts().to_vec()
}

#[test]
fn oracle_equivalence_on_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    let densities = [0.15, 0.3, 0.5, 0.7, 0.85];
    let mut tested = 0;
    while tested < 300 {
        let n = rng.gen_range(0..=7);
        let p = densities[tested % densities.len()];
        let g = random_graph(&mut rng, n, p);
        assert_eq!(
            census_counts(&gp_polynomial(&g)),
            oracle_census(&g),
            "oracle mismatch on {:?}",
            g.edges()
        );
        tested += 1;
    }
}

/// Every buildable family instance with at most 14 vertices agrees with the
/// 2^n oracle.
#[test]
fn oracle_equivalence_on_family_graphs() {
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 1..=14 {
        specs.push(FamilySpec::Complete { n });
        specs.push(FamilySpec::Path { n });
        if n >= 3 {
            specs.push(FamilySpec::Cycle { n });
        }
        if n <= 7 {
            specs.push(FamilySpec::Comb { n });
            specs.push(FamilySpec::Corona(Box::new(FamilySpec::Complete { n })));
        }
    }
    for m in 1..=13 {
        for n in 1..=13 {
            if m + n <= 14 {
                specs.push(FamilySpec::CompleteBipartite { m, n });
            }
        }
    }
    for r in 1..=7 {
        for s in r..=14 {
            if r * s <= 14 {
                specs.push(FamilySpec::Grid { r, s });
            }
        }
    }
    for s in 0..=6 {
        for r in 0..=6 {
            specs.push(FamilySpec::Broom { s, r });
        }
    }
    for n in 2..=5 {
        specs.push(FamilySpec::Kneser2 { n });
    }
    for r in 1..=7 {
        for a in 1..=7 {
            if r * a <= 14 {
                specs.push(FamilySpec::TStar { r, a });
            }
        }
    }
    specs.push(FamilySpec::Petersen);

    for spec in specs {
        let g = spec.build().unwrap();
        assert!(g.vertex_count() <= 14);
        assert_eq!(
            census_counts(&gp_polynomial(&g)),
            oracle_census(&g),
            "oracle mismatch for {spec}"
        );
    }
}

#[test]
fn first_three_coefficients_are_forced() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..80 {
        let n = rng.gen_range(0..=9);
        let g = random_graph(&mut rng, n, 0.4);
        let census = gp_polynomial(&g);
        assert_eq!(census.count(0), BigUint::from(1u32));
        assert_eq!(census.count(1), BigUint::from(n));
        assert_eq!(census.count(2), binomial(n as u64, 2));
    }
}

#[test]
fn counts_dominate_binomials_of_the_gp_number() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..60 {
        let n_g = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n_g, 0.5);
        let census = gp_polynomial(&g);
        let gp = census.gp_number() as u64;
        for i in 0..=gp {
            assert!(
                census.count(i as usize) >= binomial(gp, i),
                "subsets of a maximum set are general position sets"
            );
        }
    }
}

#[test]
fn isomorphism_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..12 {
        let n_g = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n_g, 0.45);
        let reference = gp_polynomial(&g);
        for _ in 0..20 {
            let perm = random_permutation(&mut rng, g.vertex_count());
            assert_eq!(gp_polynomial(&g.relabeled(&perm)), reference);
        }
    }
}

#[test]
fn disjoint_union_multiplies() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..40 {
        let n_g = rng.gen_range(0..=8);
        let g = random_graph(&mut rng, n_g, 0.4);
        let n_h = rng.gen_range(0..=8);
        let h = random_graph(&mut rng, n_h, 0.6);
        let product = &gp_polynomial(&g).polynomial() * &gp_polynomial(&h).polynomial();
        assert_eq!(gp_polynomial(&g.disjoint_union(&h)).polynomial(), product);
    }
}

#[test]
fn inclusion_exclusion_agrees_when_feasible() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 40 {
        let n_g = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n_g, 0.5);
        if maximal_gp_sets(&g).len() > 20 {
            continue;
        }
        assert_eq!(psi_inclusion_exclusion(&g).unwrap(), gp_polynomial(&g));
        checked += 1;
    }
}

#[test]
fn maximal_sets_are_maximal_general_position_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let n_g = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n_g, 0.45);
        let d = distance_matrix(&g);
        let sets = maximal_gp_sets(&g);
        for s in &sets {
            assert!(is_general_position_with(&d, s));
            for v in 0..g.vertex_count() {
                if !s.contains(v) {
                    let mut bigger = s.clone();
                    bigger.insert(v);
                    assert!(!is_general_position_with(&d, &bigger));
                }
            }
        }
        // emitted once each, in canonical order
        let mut sorted = sets.clone();
        sorted.sort_by_key(|s| s.indices());
        sorted.dedup();
        assert_eq!(sorted, sets);
    }
}

#[test]
fn distance_matrix_invariants_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let p = *[0.1, 0.25, 0.5, 0.8].choose(&mut rng).unwrap();
        let g = random_graph(&mut rng, n, p);
        let d = distance_matrix(&g);
        for u in 0..n {
            assert_eq!(d.get(u, u), Distance::Finite(0));
            for v in 0..n {
                assert_eq!(d.get(u, v), d.get(v, u));
                assert_eq!(d.get(u, v) == Distance::Finite(1), g.has_edge(u, v));
                for w in 0..n {
                    if let (Distance::Finite(a), Distance::Finite(b), Distance::Finite(c)) =
                        (d.get(u, v), d.get(v, w), d.get(u, w))
                    {
                        assert!(c <= a + b, "triangle inequality");
                    }
                }
            }
        }
    }
}

#[test]
fn cartesian_product_distances_add() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..25 {
        let n_g = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n_g, 0.5);
        let n_h = rng.gen_range(1..=6);
        let h = random_graph(&mut rng, n_h, 0.5);
        let prod = g.cartesian_product(&h);
        let (dg, dh, dp) = (distance_matrix(&g), distance_matrix(&h), distance_matrix(&prod));
        let hn = h.vertex_count();
        for a in 0..g.vertex_count() {
            for b in 0..hn {
                for a2 in 0..g.vertex_count() {
                    for b2 in 0..hn {
                        let expected = match (dg.get(a, a2).finite(), dh.get(b, b2).finite()) {
                            (Some(x), Some(y)) => Distance::Finite(x + y),
                            _ => Distance::Unreachable,
                        };
                        assert_eq!(dp.get(a * hn + b, a2 * hn + b2), expected);
                    }
                }
            }
        }
    }
}

#[test]
fn join_of_empties_is_complete_bipartite() {
    for m in 1..=5 {
        for n in 1..=5 {
            let j = Graph::empty(m).join(&Graph::empty(n));
            assert_eq!(j, complete_bipartite(m, n));
        }
    }
}

#[test]
fn join_formula_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let n_g = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n_g, 0.5);
        let n_h = rng.gen_range(1..=6);
        let h = random_graph(&mut rng, n_h, 0.5);
        assert_eq!(
            psi_join(&g, &h),
            gp_polynomial(&g.join(&h)).polynomial(),
            "join mismatch on {:?} vs {:?}",
            g.edges(),
            h.edges()
        );
    }
}

/// Splitting a connected non-complete graph across any bipartition with a
/// cross edge breaks the product identity.
#[test]
fn product_identity_fails_with_cross_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut checked = 0;
    while checked < 50 {
        let n = rng.gen_range(3..=8);
        let g = random_connected_graph(&mut rng, n, 0.45);
        if g.edge_count() == n * (n - 1) / 2 {
            continue; // complete graphs do satisfy the identity
        }
        let cut = rng.gen_range(1..n);
        let v1: Vec<usize> = (0..cut).collect();
        let v2: Vec<usize> = (cut..n).collect();
        let product =
            &gp_polynomial(&g.induced(&v1)).polynomial() * &gp_polynomial(&g.induced(&v2)).polynomial();
        assert_ne!(
            gp_polynomial(&g).polynomial(),
            product,
            "product identity should fail for connected non-complete {:?} cut at {cut}",
            g.edges()
        );
        checked += 1;
    }
}

#[test]
fn clique_polynomials_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let n = rng.gen_range(0..=9);
        let g = random_graph(&mut rng, n, 0.5);
        // brute force over all subsets
        let mut cliques = vec![0u64; n + 1];
        let mut iclq = vec![0u64; n + 1];
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let is_clique = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique {
                cliques[verts.len()] += 1;
            }
            let mut p3_free = true;
            'outer: for (i, &u) in verts.iter().enumerate() {
                for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                    for &w in verts.iter().skip(j + 1) {
                        let (uv, uw, vw) = (g.has_edge(u, v), g.has_edge(u, w), g.has_edge(v, w));
                        if (uv && uw && !vw) || (uv && vw && !uw) || (uw && vw && !uv) {
                            p3_free = false;
                            break 'outer;
                        }
                    }
                }
            }
            if p3_free {
                iclq[verts.len()] += 1;
            }
        }
        assert_eq!(clique_polynomial(&g), Polynomial::from_u64_coeffs(&cliques));
        assert_eq!(icliques_polynomial(&g), Polynomial::from_u64_coeffs(&iclq));
    }
}

#[test]
fn closed_form_degrees() {
    // grids: gp number 2 / 3 / 4 by shape
    assert_eq!(closed_form(&"grid:2,2".parse().unwrap()).unwrap().degree(), Some(2));
    for s in 3..=8 {
        let spec = FamilySpec::Grid { r: 2, s };
        assert_eq!(closed_form(&spec).unwrap().degree(), Some(3));
    }
    for r in 3..=6 {
        for s in 3..=6 {
            let spec = FamilySpec::Grid { r, s };
            assert_eq!(closed_form(&spec).unwrap().degree(), Some(4));
        }
    }
    // Kneser graphs: 6 up to n = 6, then n − 1
    for n in 4..=6 {
        assert_eq!(closed_form(&FamilySpec::Kneser2 { n }).unwrap().degree(), Some(6));
    }
    for n in 7..=16 {
        assert_eq!(
            closed_form(&FamilySpec::Kneser2 { n }).unwrap().degree(),
            Some(n - 1)
        );
    }
}

/// a_k − a_{k+1} = 4·n!·(2k−n+1) / ((k+1)!·(n−k)!) for combs, checked as an
/// exact integer identity.
#[test]
fn comb_difference_identity() {
    let factorial = |m: usize| -> BigInt {
        let mut acc = BigInt::from(1);
        for i in 2..=m {
            acc *= i as u64;
        }
        acc
    };
    for n in 4..=12 {
        let psi = closed_form(&FamilySpec::Comb { n }).unwrap();
        for k in 3..n {
            let lhs = BigInt::from(psi.coeff(k)) - BigInt::from(psi.coeff(k + 1));
            let num = BigInt::from(4) * factorial(n) * BigInt::from(2 * k as i64 - n as i64 + 1);
            let den = factorial(k + 1) * factorial(n - k);
            assert_eq!(&num % &den, BigInt::from(0), "n={n} k={k}");
            assert_eq!(lhs, num / den, "n={n} k={k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiply_is_commutative_and_associative(
        a in proptest::collection::vec(0u64..50, 0..6),
        b in proptest::collection::vec(0u64..50, 0..6),
        c in proptest::collection::vec(0u64..50, 0..6),
    ) {
        let (pa, pb, pc) = (
            Polynomial::from_u64_coeffs(&a),
            Polynomial::from_u64_coeffs(&b),
            Polynomial::from_u64_coeffs(&c),
        );
        prop_assert_eq!(&pa * &pb, &pb * &pa);
        prop_assert_eq!(&(&pa * &pb) * &pc, &pa * &(&pb * &pc));
        if !pa.is_zero() && !pb.is_zero() {
            prop_assert_eq!(
                (&pa * &pb).degree(),
                Some(pa.degree().unwrap() + pb.degree().unwrap())
            );
        }
    }

    #[test]
    fn real_rooted_positives_are_log_concave_and_unimodal(
        roots in proptest::collection::vec(1u64..30, 1..8),
    ) {
        // products of (1 + c x) with c > 0 are log-concave with positive
        // coefficients, so they must also pass the unimodality predicate
        let mut p = Polynomial::one();
        for c in roots {
            p = &p * &Polynomial::from_u64_coeffs(&[1, c]);
        }
        prop_assert!(p.is_log_concave());
        prop_assert!(p.is_unimodal());
    }

    #[test]
    fn text_roundtrip_with_huge_coefficients(
        raw in proptest::collection::vec(proptest::array::uniform17(any::<u8>()), 0..6),
    ) {
        // 17 bytes reach beyond 10^40
        let p = Polynomial::from_coeffs(
            raw.iter().map(|bytes| BigUint::from_bytes_le(bytes)).collect(),
        );
        let shown = p.to_string();
        prop_assert_eq!(shown.parse::<Polynomial>().unwrap(), p);
    }
}
