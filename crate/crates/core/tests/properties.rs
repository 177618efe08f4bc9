use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use shifted_core::poly::lhs_polynomial;
use shifted_core::polytope::vertices_by_orderings;
use shifted_core::shapes::build_diagram;
use shifted_core::tableaux::{diag_from_gaps, gap_vector};
use shifted_core::trees::{building_set_forests, tree_family_vertices};
use shifted_core::{
    count_by_gaps, enumerate_trees, DiagonalVector, enumerate_vertices, p_lambda, GenPermutohedron, Partition, RationalPolynomial,
    SimplexTerm, Subdivision,
};

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0u32..=3, n).prop_map(move |mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts, n).unwrap()
        })
    })
}

fn polynomial(nvars: usize) -> impl Strategy<Value = RationalPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -5i64..=5, 1i64..=4), 0..5).prop_map(
        move |terms| {
            let mut p = RationalPolynomial::zero(nvars);
            for (exp, num, den) in terms {
                p.add_term(exp, BigRational::new(BigInt::from(num), BigInt::from(den)));
            }
            p
        },
    )
}

fn interval_family() -> impl Strategy<Value = GenPermutohedron> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec((1..=n, 1..=n, 1u32..=2), 1..=4).prop_map(move |raw| {
            let terms = raw
                .into_iter()
                .map(|(a, b, w)| SimplexTerm::interval(a.min(b), a.max(b), w).unwrap())
                .collect();
            GenPermutohedron::new(n, terms).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in polynomial(3), b in polynomial(3), c in polynomial(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a * &RationalPolynomial::zero(3)).is_empty());
    }

    #[test]
    fn gap_diag_roundtrip(lambda in partition(), seed in any::<u64>()) {
        let d = build_diagram(&lambda);
        let size = d.size() as u32;
        let n = lambda.n();
        // any strictly increasing diagonal starting at 1 (the corner always holds 1)
        let mut picks: BTreeSet<u32> = BTreeSet::from([1]);
        let mut x = seed;
        while picks.len() < n {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            picks.insert(1 + (x >> 33) as u32 % size);
        }
        let diag = DiagonalVector(picks.into_iter().collect());
        let gaps = gap_vector(&diag, size as usize);
        prop_assert_eq!(gaps.0.iter().sum::<u32>() as usize + n, size as usize);
        prop_assert_eq!(diag_from_gaps(&gaps), diag);
    }

    #[test]
    fn gap_supports_are_lattice_points(lambda in partition()) {
        prop_assume!(build_diagram(&lambda).size() <= 16);
        let table = count_by_gaps(&build_diagram(&lambda));
        let points = p_lambda(&lambda).lattice_points();
        prop_assert_eq!(table.support(), points.clone());
        for a in &points {
            prop_assert_eq!(a.iter().sum::<u32>() as usize, build_diagram(&lambda).size() - lambda.n());
        }
        prop_assert_eq!(lhs_polynomial(lambda.n(), &table).support(), points);
    }

    #[test]
    fn vertices_are_ordering_maximizers(lambda in partition()) {
        let vs: BTreeSet<_> = enumerate_vertices(&lambda).into_iter().map(|v| v.t).collect();
        prop_assert_eq!(&vs, &vertices_by_orderings(&p_lambda(&lambda)));
        for v in tree_family_vertices(&lambda) {
            prop_assert!(vs.contains(&v.t));
        }
    }

    #[test]
    fn interval_building_sets(p in interval_family()) {
        // only families closed under unions of overlapping intervals qualify
        if let Ok(forests) = building_set_forests(&p) {
            let vs: BTreeSet<_> = forests.iter().map(|f| shifted_core::trees::forest_vertex(&p, f)).collect();
            prop_assert_eq!(vs, vertices_by_orderings(&p));
        }
    }

    #[test]
    fn trees_tile(n in 1usize..=6) {
        for t in enumerate_trees(n) {
            let s: Subdivision = shifted_core::trees::tree_to_subdivision(&t);
            prop_assert!(s.is_tiling());
        }
    }
}
