use moufang::corpus::{corpus_loop, CORPUS_NAMES};
use moufang::gfpn::{FieldElement, FiniteField};
use moufang::linalg::Subspace;
use moufang::loopalg::{lemma12_check, LoopAlgebra, PowerChain};
use moufang::loopcore::{parse_table, write_table, FiniteLoop};
use moufang::zorn::{ZornAlgebra, ZornMatrix};
use proptest::prelude::*;
use proptest::sample::select;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FIELDS: &[(u32, u32)] = &[(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 2), (13, 1)];

fn field_and_elements() -> impl Strategy<Value = (FiniteField, u32, u32, u32)> {
    select(FIELDS).prop_flat_map(|(p, n)| {
        let f = FiniteField::new(p, n).unwrap();
        let q = f.order();
        (Just(f), 0..q, 0..q, 0..q)
    })
}

fn small_loop() -> impl Strategy<Value = FiniteLoop> {
    select(CORPUS_NAMES).prop_map(|n| corpus_loop(n).unwrap())
}

/// A permutation of `0..n` fixing 0.
fn relabelling(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|rest| std::iter::once(0).chain(rest).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms((f, a, b, c) in field_and_elements()) {
        let (a, b, c) = (f.from_index(a).unwrap(), f.from_index(b).unwrap(), f.from_index(c).unwrap());
        prop_assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if a != f.zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, (f.order() - 1) as u64), f.one());
        }
        if let Some(r) = f.sqrt(a) {
            prop_assert_eq!(f.mul(r, r), a);
        }
        prop_assert_eq!(f.parse_element(&f.render(a)).unwrap(), a);
    }

    #[test]
    fn zorn_laws_over_gf9(xc in proptest::array::uniform8(0u32..9), yc in proptest::array::uniform8(0u32..9)) {
        let f = FiniteField::new(3, 2).unwrap();
        let alg = ZornAlgebra::new(f.clone());
        let x = ZornMatrix::from_components(xc.map(|i| f.from_index(i).unwrap()));
        let y = ZornMatrix::from_components(yc.map(|i| f.from_index(i).unwrap()));
        prop_assert!(alg.is_zero(&alg.associator(&x, &x, &y)));
        prop_assert!(alg.is_zero(&alg.associator(&y, &x, &x)));
        prop_assert_eq!(alg.norm(&alg.mul(&x, &y)), f.mul(alg.norm(&x), alg.norm(&y)));
        prop_assert_eq!(alg.parse(&alg.render(&x)).unwrap(), x);
        if alg.norm(&x) != f.zero() {
            let inv = alg.inv(&x).unwrap();
            prop_assert_eq!(alg.mul(&x, &inv), alg.one());
        }
    }

    #[test]
    fn table_text_round_trip(q in small_loop()) {
        prop_assert_eq!(parse_table(&write_table(&q)).unwrap(), q);
    }

    #[test]
    fn relabelling_preserves_invariants((q, perm) in select(CORPUS_NAMES).prop_flat_map(|name| {
        let q = corpus_loop(name).unwrap();
        let n = q.order();
        (Just(q), relabelling(n))
    })) {
        let r = q.relabel(&perm).unwrap();
        prop_assert_eq!(r.is_moufang(), q.is_moufang());
        prop_assert_eq!(r.is_associative(), q.is_associative());
        prop_assert_eq!(r.nilpotency_class(), q.nilpotency_class());
        prop_assert_eq!(r.center().len(), q.center().len());
    }

    #[test]
    fn normal_closure_matches_inner_map_fixpoint(q in small_loop(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let seeds = [a.index(q.order()), b.index(q.order())];
        let h = q.normal_closure(&seeds);
        prop_assert_eq!(&h, &q.normal_closure_by_inner_maps(&seeds));
        prop_assert!(q.is_normal(&h));
        prop_assert!(seeds.iter().all(|&s| h.contains(s)));
    }

    #[test]
    fn quotient_projection_is_homomorphism(q in small_loop(), a in any::<prop::sample::Index>()) {
        let h = q.normal_closure(&[a.index(q.order())]);
        let (quot, proj) = q.quotient(&h).unwrap();
        prop_assert_eq!(quot.order() * h.len(), q.order());
        prop_assert!(proj.is_homomorphism(&q, &quot));
        prop_assert_eq!(proj.kernel(), h);
    }

    #[test]
    fn upper_and_lower_series_agree(q in small_loop()) {
        let upper = q.upper_central_series();
        let lower = q.lower_central_series(moufang::loopcore::SeriesMode::General).unwrap();
        prop_assert_eq!(upper.class, lower.class);
        if lower.class.is_some() {
            prop_assert!(q.is_central_series(&lower.chain));
            prop_assert!(q.central_series_bounds_hold(&lower.chain));
        }
    }

    #[test]
    fn augmentation_and_powers(name in select(&["Z4", "Q8", "D4", "chein-Z2", "Z2xZ2", "S3"][..]), p in select(&[2u32, 3][..]), seed in any::<u64>()) {
        let q = corpus_loop(name).unwrap();
        let f = FiniteField::new(p, 1).unwrap();
        let alg = LoopAlgebra::new(q, f.clone()).unwrap();
        let full = Subspace::full(&f, alg.dim());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = alg.random_in(&full, &mut rng);
        let y = alg.random_in(&full, &mut rng);
        prop_assert_eq!(alg.augmentation(&alg.mul(&x, &y)), f.mul(alg.augmentation(&x), alg.augmentation(&y)));
        let omega = alg.omega();
        prop_assert_eq!(omega.space.rank(), alg.dim() - 1);
        let w = alg.random_in(&omega.space, &mut rng);
        prop_assert_eq!(alg.augmentation(&w), f.zero());
        let mut chain = PowerChain::new(omega.space.clone());
        chain.extend_to(&alg, 5);
        prop_assert!(chain.is_descending(&alg));
        prop_assert!(alg.is_ideal(chain.power(3)));
    }

    #[test]
    fn lemma12_random_triples(name in select(&["chein-D4", "chein-Z4", "D4", "Q8xZ2"][..]), seed in any::<u64>()) {
        let alg = LoopAlgebra::new(corpus_loop(name).unwrap(), FiniteField::new(2, 1).unwrap()).unwrap();
        let omega = alg.omega();
        let m = alg.nilpotency_index(&omega, 80).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = alg.random_in(&omega.space, &mut rng);
        let v = alg.random_in(&omega.space, &mut rng);
        let w = alg.random_in(&omega.space, &mut rng);
        prop_assert!(lemma12_check(&alg, &u, &v, &w, m).unwrap().holds());
    }

    #[test]
    fn subspace_insert_and_contains(rows in prop::collection::vec(prop::collection::vec(0u32..3, 6), 0..8)) {
        let f = FiniteField::new(3, 1).unwrap();
        let rows: Vec<Vec<FieldElement>> = rows.into_iter().map(|r| r.into_iter().map(|c| f.from_index(c).unwrap()).collect()).collect();
        let s = Subspace::span(&f, 6, rows.clone());
        prop_assert!(s.rank() <= rows.len().min(6));
        for r in &rows {
            prop_assert!(s.contains(&f, r));
        }
        let t = Subspace::span(&f, 6, s.basis().iter().rev().cloned());
        prop_assert!(s.same_span(&t));
    }
}
