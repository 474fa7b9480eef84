use std::sync::Arc;

use drinfeld_core::charpoly::{
    self, charpoly_endomorphism, charpoly_linear_system_oracle, chi_k, hensel_lift_root, verify_charpoly,
};
use drinfeld_core::linalg::{berkowitz_charpoly, eval_poly_at_matrix, leibniz_charpoly, mat_mul, product_chain, Matrix, Ring};
use drinfeld_core::random::{self, EndoShape};
use drinfeld_core::skew;
use drinfeld_core::{Algorithm, CharPolyOptions, FieldTower, Fq, FqPoly, SkewPoly, WkElem, WkRing, YPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tower_for(q: u32, n: usize, seed: u64) -> Arc<FieldTower> {
    let fq = random::field_of_order(q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ell = random::random_irreducible(&fq, n, &mut rng);
    Arc::new(FieldTower::new(fq, ell).unwrap())
}

/// Random skew polynomial of degree at most `max_deg`.
fn random_skew(t: &FieldTower, rng: &mut ChaCha8Rng, max_deg: usize) -> SkewPoly {
    let deg = rng.gen_range(0..=max_deg);
    SkewPoly::new((0..=deg).map(|_| t.random(rng)).collect())
}

fn random_ypoly(t: &FieldTower, rng: &mut ChaCha8Rng, max_deg: usize) -> YPoly {
    let deg = rng.gen_range(0..=max_deg);
    YPoly::new((0..=deg).map(|_| t.random(rng)).collect())
}

fn random_wk_matrix(wk: &WkRing<'_>, rng: &mut ChaCha8Rng, size: usize) -> Matrix<WkElem> {
    let t = wk.tower();
    Matrix::from_fn(size, size, |_, _| {
        wk.from_coeffs((0..wk.k()).map(|_| t.random(rng)).collect()).unwrap()
    })
}

fn q_choice() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7, 25])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(q in q_choice(), n in 1usize..7, seed in any::<u64>()) {
        let t = tower_for(q, n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        for _ in 0..25 {
            let (a, b, c) = (t.random(&mut rng), t.random(&mut rng), t.random(&mut rng));
            prop_assert_eq!(t.mul(&t.mul(&a, &b), &c), t.mul(&a, &t.mul(&b, &c)));
            prop_assert_eq!(t.mul(&a, &t.add(&b, &c)), t.add(&t.mul(&a, &b), &t.mul(&a, &c)));
            prop_assert_eq!(t.mul(&a, &b), t.mul(&b, &a));
            if !a.is_zero() {
                prop_assert_eq!(t.mul(&a, &t.inv(&a).unwrap()), t.one());
            }
            prop_assert_eq!(t.norm(&t.mul(&a, &b)), t.fq().mul(t.norm(&a), t.norm(&b)));
        }
    }

    #[test]
    fn frobenius_paths_agree(q in q_choice(), n in 1usize..8, seed in any::<u64>(), shift in -20i64..20) {
        let t = tower_for(q, n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        for _ in 0..6 {
            let c = t.random(&mut rng);
            let fast = t.frobenius(&c, shift);
            prop_assert_eq!(&fast, &t.frobenius_by_composition(&c, shift));
            prop_assert_eq!(&fast, &t.frobenius_naive(&c, shift));
            prop_assert_eq!(t.frobenius(&fast, -shift), c);
        }
    }

    #[test]
    fn skew_ring_laws(q in prop::sample::select(vec![2u32, 3, 4, 5]), n in 1usize..6, seed in any::<u64>()) {
        let t = tower_for(q, n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
        for _ in 0..8 {
            let f = random_skew(&t, &mut rng, 8);
            let g = random_skew(&t, &mut rng, 8);
            let h = random_skew(&t, &mut rng, 8);
            prop_assert_eq!(
                skew::mul(&t, &skew::mul(&t, &f, &g), &h),
                skew::mul(&t, &f, &skew::mul(&t, &g, &h))
            );
            prop_assert_eq!(
                skew::mul(&t, &f, &g.add(&h, &t)),
                skew::mul(&t, &f, &g).add(&skew::mul(&t, &f, &h), &t)
            );
            if !g.is_zero() {
                let (quot, rem) = skew::right_divmod(&t, &f, &g).unwrap();
                prop_assert!(rem.degree() < g.degree());
                prop_assert_eq!(skew::mul(&t, &quot, &g).add(&rem, &t), f);
            }
        }
    }

    #[test]
    fn phi_is_a_ring_homomorphism(q in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        let fq = random::field_of_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=5);
        let r = rng.gen_range(1..=3);
        let module = random::random_module(&fq, n, r, n, &mut rng).unwrap();
        let t = module.tower();
        for _ in 0..4 {
            let a = random::random_fq_poly(&fq, rng.gen_range(0..=5), &mut rng);
            let b = random::random_fq_poly(&fq, rng.gen_range(0..=5), &mut rng);
            prop_assert_eq!(
                module.phi_eval(&a.add(&b, &fq)),
                module.phi_eval(&a).add(&module.phi_eval(&b), t)
            );
            prop_assert_eq!(
                module.phi_eval(&a.mul(&b, &fq)),
                skew::mul(t, &module.phi_eval(&a), &module.phi_eval(&b))
            );
            prop_assert_eq!(module.phi_eval_recurrence(&a), module.phi_eval(&a));
        }
    }

    #[test]
    fn frobenius_shift_lemma(q in q_choice(), n in 1usize..7, seed in any::<u64>()) {
        let t = tower_for(q, n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 4);
        for _ in 0..10 {
            let gamma = t.random(&mut rng);
            let k = rng.gen_range(1..=4);
            let wk = WkRing::new(&t, &gamma, k).unwrap();
            let f = random_ypoly(&t, &mut rng, 30);
            let shift = rng.gen_range(1..=n as i64);
            prop_assert_eq!(wk.frobenius_shift_reduce(&f, shift), wk.reduce(&f.twist(shift, &t)));
        }
    }

    #[test]
    fn wk_reduction_laws(q in q_choice(), n in 1usize..6, seed in any::<u64>()) {
        let t = tower_for(q, n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 5);
        let gamma = t.random(&mut rng);
        let k = rng.gen_range(1..=4);
        let wk = WkRing::new(&t, &gamma, k).unwrap();
        for _ in 0..10 {
            let f = random_ypoly(&t, &mut rng, 12);
            let g = random_ypoly(&t, &mut rng, 6);
            let once = wk.reduce(&f);
            prop_assert_eq!(wk.reduce(&once.to_ypoly()), once.clone());
            prop_assert_eq!(wk.reduce(&f.add(&wk.mu().mul(&g, &t), &t)), once);
            let (a, b, c) = (wk.reduce(&f), wk.reduce(&g), wk.y());
            prop_assert_eq!(wk.mul(&a, &wk.add(&b, &c)), wk.add(&wk.mul(&a, &b), &wk.mul(&a, &c)));
            prop_assert_eq!(wk.mul(&wk.mul(&a, &b), &c), wk.mul(&a, &wk.mul(&b, &c)));
        }
    }

    #[test]
    fn cayley_hamilton_over_wk(q in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        let t = tower_for(q, 3, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 6);
        let gamma = t.random(&mut rng);
        let k = rng.gen_range(1..=3);
        let size = rng.gen_range(1..=4);
        let wk = WkRing::new(&t, &gamma, k).unwrap();
        let m = random_wk_matrix(&wk, &mut rng, size);
        let cp = berkowitz_charpoly(&wk, &m).unwrap();
        prop_assert_eq!(cp.len(), size + 1);
        prop_assert_eq!(&cp[size], &wk.one());
        prop_assert_eq!(eval_poly_at_matrix(&wk, &cp, &m).unwrap(), Matrix::zero(&wk, size, size));
    }

    #[test]
    fn berkowitz_matches_leibniz(q in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        let t = tower_for(q, 2, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 7);
        let gamma = t.random(&mut rng);
        let wk = WkRing::new(&t, &gamma, 2).unwrap();
        let size = rng.gen_range(1..=3);
        let m = random_wk_matrix(&wk, &mut rng, size);
        prop_assert_eq!(berkowitz_charpoly(&wk, &m).unwrap(), leibniz_charpoly(&wk, &m));
    }

    #[test]
    fn charpoly_invariant_under_basis_reversal(seed in any::<u64>()) {
        let t = tower_for(3, 2, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 8);
        let gamma = t.random(&mut rng);
        let wk = WkRing::new(&t, &gamma, 2).unwrap();
        let size = rng.gen_range(1..=4);
        let m = random_wk_matrix(&wk, &mut rng, size);
        let reversed = Matrix::from_fn(size, size, |i, j| m.get(size - 1 - i, size - 1 - j).clone());
        prop_assert_eq!(berkowitz_charpoly(&wk, &m).unwrap(), berkowitz_charpoly(&wk, &reversed).unwrap());
    }

    #[test]
    fn product_chain_matches_fold(seed in any::<u64>()) {
        let t = tower_for(2, 3, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 9);
        let gamma = t.random(&mut rng);
        let wk = WkRing::new(&t, &gamma, 2).unwrap();
        let chain: Vec<_> = (0..6).map(|_| random_wk_matrix(&wk, &mut rng, 3)).collect();
        let folded = chain[1..]
            .iter()
            .fold(chain[0].clone(), |acc, m| mat_mul(&wk, m, &acc).unwrap());
        prop_assert_eq!(product_chain(&wk, &chain).unwrap(), folded);
    }

    #[test]
    fn chi_commutes_with_embedding(q in prop::sample::select(vec![2u32, 3, 5, 25]), seed in any::<u64>()) {
        let fq = random::field_of_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, m) = *[(4usize, 2usize), (4, 4), (6, 3), (3, 1), (2, 2)]
            .get(rng.gen_range(0..5))
            .unwrap();
        let module = random::random_module(&fq, n, 2, m, &mut rng).unwrap();
        let t = module.tower();
        for k in 1..=3 {
            let wk = WkRing::new(t, module.gamma_x(), k).unwrap();
            let root = hensel_lift_root(module.p_poly(), k, &fq).unwrap();
            let modulus = (0..k).fold(FqPoly::one(), |acc, _| acc.mul(module.p_poly(), &fq));
            prop_assert!(module.p_poly().compose_mod(&root, &modulus, &fq).is_zero());
            for _ in 0..8 {
                let f = random::random_fq_poly(&fq, rng.gen_range(0..k * m), &mut rng);
                prop_assert_eq!(chi_k(&module, &wk, &wk.embed(&f), &root), f.rem(&modulus, &fq));
            }
        }
    }

    #[test]
    fn alpha_round_trip(q in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        let fq = random::field_of_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let module = random::random_module(&fq, 6, 1, *[1usize, 2, 3, 6].get(rng.gen_range(0..4)).unwrap(), &mut rng).unwrap();
        let t = module.tower();
        let d = module.decomposition();
        for _ in 0..10 {
            let c = t.random(&mut rng);
            let h = d.alpha(t, &c);
            prop_assert_eq!(d.alpha_inv(t, &h), c.clone());
            let shifted = d.alpha(t, &t.mul(module.gamma_x(), &c));
            let expect: Vec<FqPoly> = h.iter().map(|hj| hj.shift(1).rem(module.p_poly(), &fq)).collect();
            prop_assert_eq!(shifted, expect);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn charpoly_methods_agree(q in prop::sample::select(vec![2u32, 3, 5]), seed in any::<u64>()) {
        let fq = random::field_of_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=5);
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        let m = divisors[rng.gen_range(0..divisors.len())];
        let r = rng.gen_range(1..=3);
        let module = random::random_module(&fq, n, r, m, &mut rng).unwrap();
        let shape = [EndoShape::Frobenius, EndoShape::Phi(2), EndoShape::PhiTimesFrobenius(1)][rng.gen_range(0..3)];
        let u = random::random_endomorphism(&module, shape, &mut rng);
        let opts = CharPolyOptions::default();
        let base = charpoly_endomorphism(&module, &u, Algorithm::Recurrence, opts).unwrap();
        prop_assert_eq!(&charpoly_endomorphism(&module, &u, Algorithm::Euclidean, opts).unwrap(), &base);
        if module.is_frobenius(&u) {
            prop_assert_eq!(&charpoly_endomorphism(&module, &u, Algorithm::Bsgs, opts).unwrap(), &base);
        }
        prop_assert!(verify_charpoly(&module, &u, &base));
        prop_assert!(base.degree_bounds_hold(u.degree().unwrap()));
        if let Some(oracle) = charpoly_linear_system_oracle(&module, &u).unwrap() {
            prop_assert_eq!(&oracle, &base);
        }
        let plan = charpoly::PrecisionPlan::new(&module, &u).unwrap();
        let higher = CharPolyOptions { k: Some(plan.k + 1), ..opts };
        prop_assert_eq!(charpoly_endomorphism(&module, &u, Algorithm::Auto, higher).unwrap(), base);
    }
}

#[test]
fn fq_prime_and_extension_agree_on_degree_one() {
    let a = Fq::extension(7, &[3, 1]).unwrap();
    assert_eq!(a.q(), 7);
    assert!(a.is_prime_field());
}
