mod common;

use chaincp_core::algebra::AlgebraElement;
use chaincp_core::checks::{random_element, random_scalar};
use chaincp_core::scalar::{root_of_unity, Cyclotomic};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]), prop::collection::vec((-6i64..=6, 1i64..=4), 1..4)).prop_map(
        |(n, parts)| {
            parts.iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, (num, den))| {
                let q = Cyclotomic::rational(chaincp_core::scalar::rational(*num, *den));
                &acc + &(&q * &root_of_unity(n, k as i64))
            })
        },
    )
}

fn assert_eq_elements(a: &AlgebraElement, b: &AlgebraElement) -> Result<(), TestCaseError> {
    let diff = a.first_difference(b).unwrap();
    prop_assert!(diff.is_none(), "{}", diff.unwrap());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in cyclotomic(), b in cyclotomic()) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        // a·conj(a) is fixed by conjugation
        let n = &a * &a.conjugate();
        prop_assert_eq!(n.conjugate(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(seed in any::<u64>(), swap in any::<bool>()) {
        let fam = if swap { common::q8_swap_family() } else { common::s3_family() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = [0, 1];
        let a = random_element(&fam, &mut rng, &all, 2, 2).unwrap();
        let b = random_element(&fam, &mut rng, &all, 2, 2).unwrap();
        let c = random_element(&fam, &mut rng, &all, 2, 2).unwrap();
        assert_eq_elements(&a.multiply(&b).unwrap().multiply(&c).unwrap(), &a.multiply(&b.multiply(&c).unwrap()).unwrap())?;
    }

    #[test]
    fn adjoint_is_an_involutive_anti_automorphism(seed in any::<u64>()) {
        let fam = common::q8_swap_family();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&fam, &mut rng, &[0, 1], 2, 2).unwrap();
        let b = random_element(&fam, &mut rng, &[0, 1], 2, 2).unwrap();
        assert_eq_elements(&a.adjoint().adjoint(), &a)?;
        assert_eq_elements(&a.multiply(&b).unwrap().adjoint(), &b.adjoint().multiply(&a.adjoint()).unwrap())?;
    }

    #[test]
    fn grading_is_multiplicative(seed in any::<u64>()) {
        let fam = common::q8_swap_family();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&fam, &mut rng, &[0, 1], 2, 2).unwrap();
        let b = random_element(&fam, &mut rng, &[0, 1], 2, 2).unwrap();
        let z = [root_of_unity(4, 1), root_of_unity(3, 1)];
        let ab = a.multiply(&b).unwrap();
        assert_eq_elements(&ab.delta_act(&z).unwrap(), &a.delta_act(&z).unwrap().multiply(&b.delta_act(&z).unwrap()).unwrap())?;
        for (da, _) in a.components() {
            for (db, _) in b.components() {
                let prod = a.component(da).multiply(&b.component(db)).unwrap();
                let sum: Vec<i32> = da.iter().zip(db).map(|(x, y)| x + y).collect();
                prop_assert!(prod.components().keys().all(|k| *k == sum));
            }
        }
    }

    #[test]
    fn zero_degree_projection(seed in any::<u64>()) {
        let fam = common::s3_family();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&fam, &mut rng, &[0, 1], 3, 2).unwrap();
        let b = random_element(&fam, &mut rng, &[0, 1], 3, 2).unwrap();
        let c = random_scalar(&mut rng, 3);
        assert_eq_elements(&a.m0().m0(), &a.m0())?;
        let lin = a.scale(&c).add(&b).unwrap().m0();
        assert_eq_elements(&lin, &a.m0().scale(&c).add(&b.m0()).unwrap())?;
        prop_assert!(a.m0().components().keys().all(|k| k.iter().all(|x| *x == 0)));
        let rest = a.sub(&a.m0()).unwrap();
        prop_assert!(rest.m0().is_zero());
    }

    #[test]
    fn canonical_endomorphism_commutes_with_circle_action(seed in any::<u64>()) {
        let fam = common::q8_swap_family();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&fam, &mut rng, &[0, 1], 2, 1).unwrap();
        let z = [root_of_unity(4, 1), root_of_unity(4, 3)];
        for v in 0..2 {
            assert_eq_elements(&a.rho(v).unwrap().delta_act(&z).unwrap(), &a.delta_act(&z).unwrap().rho(v).unwrap())?;
            assert_eq_elements(&AlgebraElement::one(&fam).rho(v).unwrap(), &AlgebraElement::one(&fam))?;
        }
    }
}
