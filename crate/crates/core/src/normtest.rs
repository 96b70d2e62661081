//! Decides whether a rational number is of the form +-d * q * conj(q)
//! with q in Q(zeta_8), with exact witnesses and obstruction
//! certificates.
//!
//! A rational integer n is a hermitian square in Z[zeta_8] exactly when
//! the quadratic form a^2+b^2+c^2+d^2 represents n with vanishing
//! sqrt(2)-part a(b-d)+c(b+d). The coefficient bound |a|,|b|,|c|,|d| <=
//! sqrt(n) follows from summing q*conj(q) = n over the two pairs of
//! complex embeddings, which forces a^2+b^2+c^2+d^2 = n on the nose.
//! The prime-by-odd-multiplicity reduction relies on Z[zeta_8] being a
//! UFD and is hardwired to conductor 8.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::monomial::RealUnits;
use crate::rat::format_rational;

pub const DEFAULT_FACTOR_BUDGET: u64 = 10_000_000;

/// An integer quadruple (a, b, c, d) encoding q = a + b zeta + c zeta^2 +
/// d zeta^3 in Z[zeta_8].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HermitianWitness {
    #[serde(with = "bigint_strings")]
    pub coeffs: [BigInt; 4],
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        coeffs: &[BigInt; 4],
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        serde::Serialize::serialize(&strings, serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<[BigInt; 4], D::Error> {
        let strings: Vec<String> = Vec::deserialize(deserializer)?;
        if strings.len() != 4 {
            return Err(D::Error::custom("witness needs exactly 4 coefficients"));
        }
        let mut out = Vec::with_capacity(4);
        for s in &strings {
            out.push(s.parse().map_err(|_| D::Error::custom("bad integer"))?);
        }
        Ok(out.try_into().unwrap())
    }
}

impl HermitianWitness {
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        HermitianWitness {
            coeffs: [a.into(), b.into(), c.into(), d.into()],
        }
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(8);
        for (j, c) in self.coeffs.iter().enumerate() {
            let term = Cyclotomic::from_rational(BigRational::from_integer(c.clone()), 8);
            acc = &acc + &(&term * &Cyclotomic::power_of_root(8, j as u64));
        }
        acc
    }

    /// q * conj(q), re-verified by exact cyclotomic multiplication.
    pub fn hermitian_square(&self) -> Cyclotomic {
        let q = self.to_cyclotomic();
        &q * &q.conj()
    }

    pub fn mul(&self, other: &HermitianWitness) -> HermitianWitness {
        let prod = &self.to_cyclotomic() * &other.to_cyclotomic();
        let coeffs: Vec<BigInt> = prod
            .coeffs()
            .iter()
            .map(|c| {
                debug_assert!(c.denom().is_one());
                c.numer().clone()
            })
            .collect();
        HermitianWitness {
            coeffs: coeffs.try_into().unwrap(),
        }
    }
}

/// Outcome of a norm-class decision.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum NormVerdict {
    Member {
        witness: HermitianWitness,
        /// square scaling applied while clearing denominators
        denominator_cleared: String,
    },
    NotMember {
        /// prime dividing the target to odd multiplicity which the
        /// exhaustive quadratic-form search certifies is not a norm
        obstruction_prime: u64,
        multiplicity: u32,
        reason: String,
    },
    Undecided {
        reason: String,
    },
}

impl NormVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, NormVerdict::Member { .. })
    }
}

/// Searches integer quadruples with a^2+b^2+c^2+d^2 = n and
/// a(b-d)+c(b+d) = 0; any witness is re-verified by exact cyclotomic
/// multiplication before being returned.
pub fn represent_as_hermitian_square(n: u64) -> Option<HermitianWitness> {
    assert!(n >= 1);
    let bound = (n as f64).sqrt() as i64 + 1;
    let n_i = n as i64;
    for a in -bound..=bound {
        let a2 = a * a;
        if a2 > n_i {
            continue;
        }
        for b in -bound..=bound {
            let ab2 = a2 + b * b;
            if ab2 > n_i {
                continue;
            }
            for c in -bound..=bound {
                let abc2 = ab2 + c * c;
                if abc2 > n_i {
                    continue;
                }
                let d2 = n_i - abc2;
                let d0 = (d2 as f64).sqrt() as i64;
                for d in [d0 - 1, d0, d0 + 1] {
                    if d < 0 || d * d != d2 {
                        continue;
                    }
                    for d in [d, -d] {
                        if a * (b - d) + c * (b + d) == 0 {
                            let w = HermitianWitness::from_i64(a, b, c, d);
                            let sq = w.hermitian_square();
                            assert_eq!(
                                sq.as_rational(),
                                Some(BigRational::from_integer(BigInt::from(n))),
                                "witness failed exact re-verification"
                            );
                            return Some(w);
                        }
                        if d == 0 {
                            break;
                        }
                    }
                }
            }
        }
    }
    None
}

/// Trial-division factorization. Errors when the unfactored cofactor
/// cannot be certified prime within the budget.
fn factor(n: &BigInt, budget: u64) -> Result<Vec<(u64, u32)>> {
    let mut n = n.clone();
    assert!(n.is_positive());
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= budget {
        let pb = BigInt::from(p);
        if (&pb * &pb) > n {
            break;
        }
        let mut mult = 0u32;
        loop {
            let (q, r) = num_integer::Integer::div_rem(&n, &pb);
            if r.is_zero() {
                n = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            factors.push((p, mult));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        // any remaining cofactor below budget^2 is prime
        let bb = BigInt::from(budget);
        if n > &bb * &bb {
            return Err(Error::FactorizationBudgetExceeded(n.to_string(), budget));
        }
        let p = n.to_u64().ok_or_else(|| {
            Error::FactorizationBudgetExceeded(n.to_string(), budget)
        })?;
        factors.push((p, 1));
    }
    Ok(factors)
}

/// Decides membership of a nonzero rational in the norm class
/// +-(real units) * q * conj(q), q in Q(zeta_8).
pub fn rational_norm_class(
    x: &BigRational,
    real_units: RealUnits,
    budget: u64,
) -> Result<NormVerdict> {
    assert!(!x.is_zero());
    if x.is_negative() && real_units == RealUnits::One {
        // q * conj(q) is a positive real, and no sign is available
        return Ok(NormVerdict::NotMember {
            obstruction_prime: 0,
            multiplicity: 0,
            reason: "target is negative and the unit group contributes no sign".into(),
        });
    }
    let abs = x.abs();
    // q qbar scales by squares, so multiplying by denom^2 clears the
    // denominator without changing the class
    let target: BigInt = abs.numer() * abs.denom();
    let denominator_cleared = format!("scaled by ({})^2", abs.denom());
    if target.is_one() {
        return Ok(NormVerdict::Member {
            witness: HermitianWitness::from_i64(1, 0, 0, 0),
            denominator_cleared,
        });
    }
    let factors = factor(&target, budget)?;
    let mut witness = HermitianWitness::from_i64(1, 0, 0, 0);
    for &(p, mult) in &factors {
        if mult % 2 == 1 {
            match represent_as_hermitian_square(p) {
                Some(w) => {
                    for _ in 0..mult {
                        witness = witness.mul(&w);
                    }
                }
                None => {
                    return Ok(NormVerdict::NotMember {
                        obstruction_prime: p,
                        multiplicity: mult,
                        reason: format!(
                            "{p} divides {} to odd multiplicity and the exhaustive \
                             quadratic-form search shows {p} is not a norm in Z[zeta_8]",
                            format_rational(&abs)
                        ),
                    });
                }
            }
        } else {
            // even multiplicity: p^mult = (p^{mult/2})^2 is a square
            let half = BigInt::from(p).pow(mult / 2);
            let sq = HermitianWitness {
                coeffs: [half, BigInt::zero(), BigInt::zero(), BigInt::zero()],
            };
            witness = witness.mul(&sq);
        }
    }
    // witness soundness is asserted on every Member verdict
    let expected = BigRational::from_integer(target);
    assert_eq!(
        witness.hermitian_square().as_rational(),
        Some(expected),
        "composite witness failed exact re-verification"
    );
    Ok(NormVerdict::Member {
        witness,
        denominator_cleared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forty_seven_is_not_a_norm() {
        assert_eq!(represent_as_hermitian_square(47), None);
    }

    #[test]
    fn forty_five_is_a_norm() {
        let w = represent_as_hermitian_square(45).expect("45 = (6+3i)(6-3i)");
        assert_eq!(
            w.hermitian_square().as_rational(),
            Some(BigRational::from_integer(BigInt::from(45)))
        );
    }

    #[test]
    fn two_is_a_norm() {
        let w = represent_as_hermitian_square(2).unwrap();
        assert_eq!(
            w.hermitian_square().as_rational(),
            Some(BigRational::from_integer(BigInt::from(2)))
        );
    }

    #[test]
    fn norm_class_of_2115() {
        let x = BigRational::from_integer(BigInt::from(2115));
        let v = rational_norm_class(&x, RealUnits::PlusMinusOne, DEFAULT_FACTOR_BUDGET).unwrap();
        match v {
            NormVerdict::NotMember {
                obstruction_prime,
                multiplicity,
                ..
            } => {
                assert_eq!(obstruction_prime, 47);
                assert_eq!(multiplicity, 1);
            }
            other => panic!("expected NotMember, got {other:?}"),
        }
    }

    #[test]
    fn norm_class_members() {
        for n in [1i64, 45, 2, 9, 50] {
            let x = BigRational::from_integer(BigInt::from(n));
            let v =
                rational_norm_class(&x, RealUnits::PlusMinusOne, DEFAULT_FACTOR_BUDGET).unwrap();
            assert!(v.is_member(), "{n} should be a member, got {v:?}");
        }
    }

    #[test]
    fn sign_handling() {
        let neg = BigRational::from_integer(BigInt::from(-45));
        assert!(rational_norm_class(&neg, RealUnits::PlusMinusOne, DEFAULT_FACTOR_BUDGET)
            .unwrap()
            .is_member());
        assert!(!rational_norm_class(&neg, RealUnits::One, DEFAULT_FACTOR_BUDGET)
            .unwrap()
            .is_member());
    }

    #[test]
    fn rational_denominators_clear_by_squares() {
        // 45/4 = 45 * (1/2)^2
        let x = BigRational::new(BigInt::from(45), BigInt::from(4));
        assert!(rational_norm_class(&x, RealUnits::PlusMinusOne, DEFAULT_FACTOR_BUDGET)
            .unwrap()
            .is_member());
        // 2115/7 has 47 and 7 at odd multiplicity; 7 is checked first
        let y = BigRational::new(BigInt::from(2115), BigInt::from(7));
        assert!(!rational_norm_class(&y, RealUnits::PlusMinusOne, DEFAULT_FACTOR_BUDGET)
            .unwrap()
            .is_member());
    }

    #[test]
    fn factorization_budget() {
        // 1000003 * 1000033 exceeds a budget of 1000
        let big = BigInt::from(1000003u64) * BigInt::from(1000033u64);
        let x = BigRational::from_integer(big);
        assert!(matches!(
            rational_norm_class(&x, RealUnits::PlusMinusOne, 1000),
            Err(Error::FactorizationBudgetExceeded(..))
        ));
    }
}
