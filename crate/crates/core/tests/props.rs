//! Property tests: ring axioms, group laws, involutions, determinant
//! identities, and round trips, all exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use slicetor_core::cyclotomic::{Cyclotomic, RootOfUnity};
use slicetor_core::intmat::{int_det, smith_normal_form};
use slicetor_core::laurent::{dense_det, dense_mul, LaurentPoly, MatrixOverLaurent};
use slicetor_core::monomial::{MonomialMatrix, MonomialRep};
use slicetor_core::word::FreeWord;

fn arb_cyclotomic(conductor: u64) -> impl Strategy<Value = Cyclotomic> {
    let phi = slicetor_core::euler_phi(conductor) as usize;
    proptest::collection::vec(-5i64..=5, phi).prop_map(move |v| {
        Cyclotomic::from_dense(
            conductor,
            v.into_iter()
                .map(|c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    })
}

fn arb_root(max_den: u64) -> impl Strategy<Value = RootOfUnity> {
    (1..=max_den).prop_flat_map(|den| (0..den as i64, Just(den)))
        .prop_map(|(num, den)| RootOfUnity::new(num, den))
}

fn arb_monomial(size: usize, conductor: u64) -> impl Strategy<Value = MonomialMatrix> {
    // diagonal entries are powers of zeta_conductor so the dense form
    // embeds in the same conductor
    let root = (0..conductor as i64).prop_map(move |num| RootOfUnity::new(num, conductor));
    (
        Just((0..size).collect::<Vec<usize>>()).prop_shuffle(),
        proptest::collection::vec(root, size),
    )
        .prop_map(|(perm, diag)| MonomialMatrix::new(perm, diag).unwrap())
}

fn arb_laurent(nvars: usize, conductor: u64) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(
        (
            proptest::collection::vec(-2i64..=2, nvars),
            arb_cyclotomic(conductor),
        ),
        0..=3,
    )
    .prop_map(move |terms| {
        let mut p = LaurentPoly::zero(nvars, conductor);
        for (exp, c) in terms {
            p = &p + &LaurentPoly::monomial(exp, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_axioms(
        a in arb_cyclotomic(8),
        b in arb_cyclotomic(8),
        c in arb_cyclotomic(8),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Cyclotomic::one(8), a.clone());
        prop_assert_eq!(&a + &(-&a), Cyclotomic::zero(8));
    }

    #[test]
    fn cyclotomic_conj_is_involutive_hom(a in arb_cyclotomic(8), b in arb_cyclotomic(8)) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn cyclotomic_inverse(a in arb_cyclotomic(8)) {
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, Cyclotomic::one(8));
        }
    }

    #[test]
    fn root_group_laws(a in arb_root(24), b in arb_root(24)) {
        prop_assert_eq!(a.mul(&a.inv()), RootOfUnity::one());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.conj(), a.inv());
        // to_cyclotomic is multiplicative
        let n = num_integer::lcm(a.denominator(), b.denominator());
        let ca = a.to_cyclotomic(n).unwrap();
        let cb = b.to_cyclotomic(n).unwrap();
        prop_assert_eq!(a.mul(&b).to_cyclotomic(n).unwrap(), &ca * &cb);
    }

    #[test]
    fn monomial_mul_matches_dense(
        a in arb_monomial(4, 8),
        b in arb_monomial(4, 8),
        c in arb_monomial(4, 8),
    ) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(
            ab.mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        // dense multiplication oracle
        let da = a.to_dense(8).unwrap();
        let db = b.to_dense(8).unwrap();
        prop_assert_eq!(ab.to_dense(8).unwrap(), dense_mul(&da, &db, 8));
        // inverse
        prop_assert!(a.mul(&a.inv()).unwrap().is_identity());
    }

    #[test]
    fn eigenvalue_product_is_det(m in arb_monomial(5, 12)) {
        let mut prod = RootOfUnity::one();
        for z in m.eigenvalues() {
            prod = prod.mul(&z);
        }
        prop_assert_eq!(prod, m.det());
        // det of the dense form agrees with the monomial det
        let dense = m.to_dense(12).unwrap();
        prop_assert_eq!(
            dense_det(&dense, 12),
            m.det().to_cyclotomic(12).unwrap()
        );
    }

    #[test]
    fn eigenvalues_conjugate_under_inverse(m in arb_monomial(5, 8)) {
        let mut conj: Vec<RootOfUnity> = m.eigenvalues().iter().map(|z| z.conj()).collect();
        let mut inv = m.inv().eigenvalues();
        conj.sort_by_key(|z| (z.denominator(), z.numerator()));
        inv.sort_by_key(|z| (z.denominator(), z.numerator()));
        prop_assert_eq!(conj, inv);
    }

    #[test]
    fn laurent_bar_involution(p in arb_laurent(2, 8), q in arb_laurent(2, 8)) {
        prop_assert_eq!(p.bar().bar(), p.clone());
        prop_assert_eq!((&p * &q).bar(), &p.bar() * &q.bar());
        prop_assert_eq!((&p + &q).bar(), &p.bar() + &q.bar());
    }

    #[test]
    fn laurent_division_round_trip(p in arb_laurent(2, 8), q in arb_laurent(2, 8)) {
        if !q.is_zero() {
            let prod = &p * &q;
            prop_assert_eq!(prod.div_exact(&q).unwrap(), p);
        }
    }

    #[test]
    fn laurent_evaluate_is_hom(p in arb_laurent(2, 8), q in arb_laurent(2, 8)) {
        let pt = vec![
            BigRational::new(BigInt::from(3), BigInt::from(2)),
            BigRational::from(BigInt::from(5)),
        ];
        prop_assert_eq!(
            (&p * &q).evaluate(&pt),
            p.evaluate(&pt).checked_mul(&q.evaluate(&pt)).unwrap()
        );
        prop_assert_eq!(
            (&p + &q).evaluate(&pt),
            p.evaluate(&pt).checked_add(&q.evaluate(&pt)).unwrap()
        );
    }

    #[test]
    fn det_multiplicative_and_transpose(
        e1 in proptest::collection::vec(arb_laurent(1, 4), 9),
        e2 in proptest::collection::vec(arb_laurent(1, 4), 9),
    ) {
        let a = MatrixOverLaurent::new(3, 3, e1).unwrap();
        let b = MatrixOverLaurent::new(3, 3, e2).unwrap();
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn smith_divisors_chain_and_det(
        rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 3),
    ) {
        let divisors = smith_normal_form(&rows);
        for w in divisors.windows(2) {
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero(), "chain {divisors:?}");
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
        let prod: BigInt = divisors.iter().product();
        prop_assert_eq!(prod.abs(), int_det(&rows).abs());
    }

    #[test]
    fn word_inverse_evaluates_to_identity(
        letters in proptest::collection::vec((1usize..=2, prop_oneof![Just(1i8), Just(-1i8)]), 0..6),
        g1 in arb_monomial(3, 8),
        g2 in arb_monomial(3, 8),
    ) {
        let w = FreeWord::from_letters(letters).unwrap();
        let rep = MonomialRep::new(vec![g1, g2]).unwrap();
        let m = rep.evaluate_word(&w).unwrap();
        let minv = rep.evaluate_word(&w.inverse()).unwrap();
        prop_assert!(m.mul(&minv).unwrap().is_identity());
        // exponent sums are a homomorphism to Z^2
        let s = w.exponent_sums(2);
        let sinv = w.inverse().exponent_sums(2);
        prop_assert_eq!(s[0], -sinv[0]);
        prop_assert_eq!(s[1], -sinv[1]);
    }

    #[test]
    fn word_parse_round_trip(
        letters in proptest::collection::vec((1usize..=3, prop_oneof![Just(1i8), Just(-1i8)]), 0..8),
    ) {
        let w = FreeWord::from_letters(letters).unwrap();
        let printed = w.to_string();
        prop_assert_eq!(FreeWord::parse(&printed).unwrap(), w);
    }
}

#[test]
fn promotion_demotion_round_trip() {
    // zeta_4 promoted to conductor 8 and demoted back
    let z4 = Cyclotomic::root(4);
    let up = z4.promote(8).unwrap();
    assert_eq!(up, Cyclotomic::power_of_root(8, 2));
    assert_eq!(up.demote(4).unwrap(), Some(z4));
    // zeta_8 does not demote to conductor 4
    assert_eq!(Cyclotomic::root(8).demote(4).unwrap(), None);
}
