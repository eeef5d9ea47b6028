use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use denom_core::arc_model::{enumerate_arcs, ArcFamilyModel};
use denom_core::cluster_engine::{ExchangeMatrix, LaurentPolynomial, Seed};
use denom_core::intersection::{int_a, int_c};
use denom_core::surface_model::{admissible_triangulation, make_strong_admissible, MarkedSurface};

const N: usize = 3;

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, N), -5i64..=5), 1..5).prop_map(
        |terms| {
            LaurentPolynomial::from_terms(N, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        },
    )
}

fn skew(n: usize) -> impl Strategy<Value = ExchangeMatrix> {
    prop::collection::vec(-2i32..=2, n * (n - 1) / 2).prop_map(move |upper| {
        let mut rows = vec![vec![0; n]; n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().unwrap();
                rows[i][j] = v;
                rows[j][i] = -v;
            }
        }
        ExchangeMatrix::from_rows(&rows)
    })
}

fn square() -> &'static ArcFamilyModel {
    static M: OnceLock<ArcFamilyModel> = OnceLock::new();
    M.get_or_init(|| enumerate_arcs(&MarkedSurface::disk(4, 1).unwrap()).unwrap())
}

fn twice_punctured() -> &'static ArcFamilyModel {
    static M: OnceLock<ArcFamilyModel> = OnceLock::new();
    M.get_or_init(|| enumerate_arcs(&MarkedSurface::disk(3, 2).unwrap()).unwrap())
}

proptest! {
    #[test]
    fn product_divides_back(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn denominators_add_under_products(a in laurent(), b in laurent()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        // Extreme exponents of a product of polynomials never cancel.
        let d: Vec<i64> = a.denominator_vector().unwrap().iter()
            .zip(b.denominator_vector().unwrap())
            .map(|(x, y)| x + y)
            .collect();
        prop_assert_eq!((&a * &b).denominator_vector().unwrap(), d);
    }

    #[test]
    fn matrix_mutation_is_an_involution(b in skew(4), k in 0usize..4) {
        let m = b.mutate(k);
        prop_assert!(m.is_skew_symmetric());
        prop_assert_eq!(m.mutate(k), b);
    }

    #[test]
    fn seed_mutation_is_an_involution(b in skew(3), path in prop::collection::vec(0usize..3, 0..4), k in 0usize..3) {
        let mut s = Seed::initial(b);
        for i in path {
            s = s.mutate(i).unwrap();
        }
        let back = s.mutate(k).unwrap().mutate(k).unwrap();
        prop_assert_eq!(back.cluster, s.cluster);
        prop_assert_eq!(back.matrix, s.matrix);
    }

    #[test]
    fn crossing_numbers_are_symmetric(i in 0usize..1000, j in 0usize..1000) {
        for model in [square(), twice_punctured()] {
            let arcs = model.plain_arcs();
            let (a, b) = (&arcs[i % arcs.len()], &arcs[j % arcs.len()]);
            prop_assert_eq!(int_a(model, a, b).unwrap(), int_a(model, b, a).unwrap());
            prop_assert_eq!(int_c(a, b), int_c(b, a));
        }
    }

    #[test]
    fn compatibility_is_symmetric(i in 0usize..1000, j in 0usize..1000) {
        let model = twice_punctured();
        let n = model.arcs().len();
        prop_assert_eq!(model.compatible_ids(i % n, j % n), model.compatible_ids(j % n, i % n));
    }

    #[test]
    fn builder_output_is_strong_admissible(seed in any::<u64>(), m in 3u32..=6, p in 1u32..=2) {
        let surface = MarkedSurface::disk(m, p).unwrap();
        let t = admissible_triangulation(&surface, seed).unwrap();
        prop_assert!(t.is_admissible());
        let out = make_strong_admissible(&t).unwrap();
        prop_assert!(out.triangulation.is_strong_admissible());
        prop_assert!(out.monotone());
    }
}
