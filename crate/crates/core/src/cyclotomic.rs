//! Exact arithmetic in cyclotomic rings Z[zeta_n] and fields Q(zeta_n).
//!
//! Elements are coefficient vectors in the power basis 1, zeta, ...,
//! zeta^(phi(n)-1), always reduced modulo the n-th cyclotomic polynomial.
//! Complex embeddings are exposed for diagnostics only; every verdict in
//! this crate is reached by exact computation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::{format_rational, parse_rational};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Exact division of integer polynomials, panics unless the division is
/// exact with a monic divisor. Dense, lowest degree first.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(rem.len() >= den.len());
    let qd = rem.len() - den.len();
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for (j, dc) in den.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial Phi_n as a dense integer coefficient
/// vector, lowest degree first, computed by exact division of x^n - 1 by
/// Phi_d over the proper divisors d of n.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1);
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut cur = num;
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_polynomial(d);
                cur = int_poly_div_exact(&cur, &phi_d);
            }
        }
        cur
    };
    let arc = Arc::new(poly);
    cyclo_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// An exact root of unity e^{2 pi i k/N}, stored as the reduced turn
/// fraction k/N with 0 <= k < N.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0);
        let d = den as i64;
        let k = num.rem_euclid(d) as u64;
        let g = k.gcd(&den);
        if k == 0 {
            RootOfUnity { num: 0, den: 1 }
        } else {
            RootOfUnity {
                num: k / g,
                den: den / g,
            }
        }
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { num: 1, den: 2 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let den = self.den.lcm(&other.den);
        let num = (self.num * (den / self.den) + other.num * (den / other.den)) % den;
        RootOfUnity::new(num as i64, den)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(-(self.num as i64), self.den)
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        let k = (self.num as i128 * e as i128).rem_euclid(self.den as i128) as i64;
        RootOfUnity::new(k, self.den)
    }

    pub fn conj(&self) -> RootOfUnity {
        self.inv()
    }

    /// The ell values w with w^ell = self, as turn fractions
    /// (num + den*m)/(den*ell), m = 0..ell-1.
    pub fn nth_roots(&self, ell: u64) -> Vec<RootOfUnity> {
        assert!(ell >= 1);
        (0..ell)
            .map(|m| RootOfUnity::new((self.num + self.den * m) as i64, self.den * ell))
            .collect()
    }

    /// This root as an element of Z[zeta_conductor]; errors unless its
    /// order divides the conductor.
    pub fn to_cyclotomic(&self, conductor: u64) -> Result<Cyclotomic> {
        if conductor % self.den != 0 {
            return Err(Error::NotDivisor(self.den, conductor));
        }
        Ok(Cyclotomic::power_of_root(
            conductor,
            self.num * (conductor / self.den),
        ))
    }

    pub fn embed(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI * self.num as f64 / self.den as f64;
        (theta.cos(), theta.sin())
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2pi*{}/{})", self.num, self.den)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "1")
        } else {
            write!(f, "zeta_{}^{}", self.den, self.num)
        }
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("RootOfUnity", 2)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("den", &self.den)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: i64,
            den: u64,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.den == 0 {
            return Err(D::Error::custom("zero denominator in root of unity"));
        }
        Ok(RootOfUnity::new(raw.num, raw.den))
    }
}

/// An element of Q(zeta_n) in the power basis, reduced mod Phi_n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1);
        Cyclotomic {
            conductor,
            coeffs: vec![BigRational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(BigRational::one(), conductor)
    }

    pub fn from_rational(r: BigRational, conductor: u64) -> Self {
        let mut x = Cyclotomic::zero(conductor);
        x.coeffs[0] = r;
        x
    }

    pub fn from_integer(n: i64, conductor: u64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)), conductor)
    }

    /// zeta_n^j in conductor n.
    pub fn power_of_root(conductor: u64, j: u64) -> Self {
        let mut dense = vec![BigRational::zero(); (j % conductor) as usize + 1];
        let last = dense.len() - 1;
        dense[last] = BigRational::one();
        Self::from_dense(conductor, dense)
    }

    /// zeta_n itself.
    pub fn root(conductor: u64) -> Self {
        Self::power_of_root(conductor, 1 % conductor)
    }

    /// Builds an element from an arbitrary-degree dense coefficient vector
    /// and reduces it mod Phi_n.
    pub fn from_dense(conductor: u64, mut dense: Vec<BigRational>) -> Self {
        let phi = euler_phi(conductor) as usize;
        let modulus = cyclotomic_polynomial(conductor);
        while dense.len() > phi {
            let c = dense.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = dense.len() - phi;
            // subtract c * x^shift * (Phi_n - x^phi), i.e. fold the top
            // coefficient down through the monic modulus
            for (j, m) in modulus.iter().take(phi).enumerate() {
                dense[shift + j] -= &c * BigRational::from_integer(m.clone());
            }
        }
        dense.resize(phi, BigRational::zero());
        Cyclotomic {
            conductor,
            coeffs: dense,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when every power-basis coefficient is an integer, i.e. the
    /// element lies in Z[zeta_n].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn same_conductor(&self, other: &Cyclotomic) -> Result<()> {
        if self.conductor != other.conductor {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.same_conductor(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.same_conductor(other)?;
        Ok(self * other)
    }

    /// Complex conjugation, zeta^j -> zeta^{n-j}.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.conductor as usize;
        let mut dense = vec![BigRational::zero(); n.max(1)];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = if j == 0 { 0 } else { n - j };
                dense[idx] += c;
            }
        }
        Cyclotomic::from_dense(self.conductor, dense)
    }

    pub fn pow(&self, e: u64) -> Cyclotomic {
        let mut result = Cyclotomic::one(self.conductor);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse in Q(zeta_n) via the extended Euclidean
    /// algorithm against Phi_n.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = poly_half_ext_gcd(&self.coeffs, &modulus);
        // gcd(f, Phi_n) is a nonzero constant since f != 0 has degree < phi(n)
        assert_eq!(trim_len(&g), 1, "gcd with cyclotomic modulus not constant");
        let ginv = g[0].recip();
        let coeffs = s.into_iter().map(|c| c * &ginv).collect();
        Ok(Cyclotomic::from_dense(self.conductor, coeffs))
    }

    /// Exact division. Over Q(zeta_n) this is field division; when both
    /// operands are integral the quotient must be integral too, otherwise
    /// `NotDivisible` is returned.
    pub fn div_exact(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.same_conductor(other)?;
        let q = self * &other.inv()?;
        if self.is_integral() && other.is_integral() && !q.is_integral() {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    /// The same abstract number in conductor m, via zeta_n = zeta_m^{m/n}.
    pub fn promote(&self, m: u64) -> Result<Cyclotomic> {
        if m % self.conductor != 0 {
            return Err(Error::NotDivisor(self.conductor, m));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let mut dense = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            dense[j * step] = c.clone();
        }
        Ok(Cyclotomic::from_dense(m, dense))
    }

    /// Attempts to express the element in conductor d | n; returns None
    /// when it does not lie in the image of `promote` from conductor d.
    pub fn demote(&self, d: u64) -> Result<Option<Cyclotomic>> {
        if self.conductor % d != 0 {
            return Err(Error::NotDivisor(d, self.conductor));
        }
        if d == self.conductor {
            return Ok(Some(self.clone()));
        }
        let phi_d = euler_phi(d) as usize;
        let phi_n = self.coeffs.len();
        // columns: promoted images of the conductor-d power basis
        let mut cols = Vec::with_capacity(phi_d);
        for j in 0..phi_d {
            let b = Cyclotomic::power_of_root(d, j as u64).promote(self.conductor)?;
            cols.push(b.coeffs);
        }
        match solve_exact(phi_n, &cols, &self.coeffs) {
            Some(y) => Ok(Some(Cyclotomic::from_dense(d, y))),
            None => Ok(None),
        }
    }

    /// The rational value, when all non-constant coefficients vanish.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The root of unity this element equals, if any, found by
    /// comparison against every power of zeta_n and its negative.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let n = self.conductor;
        for j in 0..n {
            let candidate = Cyclotomic::power_of_root(n, j);
            if *self == candidate {
                return Some(RootOfUnity::new(j as i64, n));
            }
            if *self == -&candidate {
                return Some(RootOfUnity::new(j as i64, n).mul(&RootOfUnity::minus_one()));
            }
        }
        None
    }

    /// Floating-point image under the embedding zeta_n -> e^{2 pi i k/n}.
    /// Diagnostics only.
    pub fn embed(&self, k: u64) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let theta = 2.0 * std::f64::consts::PI * (j as u64 * k) as f64 / n;
                let cf = c.to_f64().unwrap_or(f64::NAN);
                re += cf * theta.cos();
                im += cf * theta.sin();
            }
        }
        (re, im)
    }
}

fn trim_len(p: &[BigRational]) -> usize {
    let mut len = p.len();
    while len > 0 && p[len - 1].is_zero() {
        len -= 1;
    }
    len
}

/// Half-extended gcd over Q[x]: returns (g, s) with s*a = g mod b.
fn poly_half_ext_gcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a[..trim_len(a)].to_vec();
    let mut r1 = b[..trim_len(b)].to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = vec![];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out.truncate(trim_len(&out));
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] = ai.clone();
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    out.truncate(trim_len(&out));
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let bl = trim_len(b);
    assert!(bl > 0, "division by zero polynomial");
    let mut rem = a[..trim_len(a)].to_vec();
    if rem.len() < bl {
        return (vec![], rem);
    }
    let lead = b[bl - 1].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - bl + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + bl - 1] / &lead;
        if !c.is_zero() {
            quot[i] = c.clone();
            for j in 0..bl {
                let t = &c * &b[j];
                rem[i + j] -= t;
            }
        }
    }
    rem.truncate(trim_len(&rem));
    (quot, rem)
}

/// Solves sum_j y_j cols[j] = target over Q by Gaussian elimination;
/// None when the system is inconsistent.
fn solve_exact(
    rows: usize,
    cols: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let ncols = cols.len();
    let mut aug: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; ncols];
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for v in aug[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=ncols {
                    let t = &f * &aug[row][c];
                    aug[r][c] -= t;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    // inconsistent when a zero row has nonzero rhs
    for r in row..rows {
        if !aug[r][ncols].is_zero() {
            return None;
        }
    }
    let mut y = vec![BigRational::zero(); ncols];
    for (col, &pr) in pivot_of_col.iter().enumerate() {
        if pr != usize::MAX {
            y[col] = aug[pr][ncols].clone();
        }
    }
    Some(y)
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, other: &Cyclotomic) -> Cyclotomic {
                assert_eq!(
                    self.conductor, other.conductor,
                    "conductor mismatch: promote first"
                );
                let coeffs = self
                    .coeffs
                    .iter()
                    .zip(&other.coeffs)
                    .map(|(a, b)| a $op b)
                    .collect();
                Cyclotomic {
                    conductor: self.conductor,
                    coeffs,
                }
            }
        }
        impl std::ops::$trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, other: Cyclotomic) -> Cyclotomic {
                (&self).$method(&other)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(
            self.conductor, other.conductor,
            "conductor mismatch: promote first"
        );
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero(self.conductor);
        }
        let mut dense = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += a * b;
                }
            }
        }
        Cyclotomic::from_dense(self.conductor, dense)
    }
}

impl std::ops::Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: Cyclotomic) -> Cyclotomic {
        &self * &other
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Promotes both elements to the lcm of their conductors.
pub fn unify(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    let m = a.conductor.lcm(&b.conductor);
    (a.promote(m).unwrap(), b.promote(m).unwrap())
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({}; ", self.conductor)?;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*z^{}", c, j)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("conductor", &self.conductor)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Full { conductor: u64, coeffs: Vec<String> },
            Rational(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Full { conductor, coeffs } => {
                if conductor == 0 {
                    return Err(D::Error::custom("zero conductor"));
                }
                let phi = euler_phi(conductor) as usize;
                if coeffs.len() != phi {
                    return Err(D::Error::custom(format!(
                        "expected {} coefficients for conductor {}, got {}",
                        phi,
                        conductor,
                        coeffs.len()
                    )));
                }
                let coeffs = coeffs
                    .iter()
                    .map(|s| parse_rational(s).map_err(D::Error::custom))
                    .collect::<std::result::Result<_, _>>()?;
                Ok(Cyclotomic {
                    conductor,
                    coeffs,
                })
            }
            Raw::Rational(s) => {
                let r = parse_rational(&s).map_err(D::Error::custom)?;
                Ok(Cyclotomic::from_rational(r, 1))
            }
        }
    }
}
