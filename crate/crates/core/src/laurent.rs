//! Multivariable Laurent polynomials over cyclotomic coefficients, their
//! fraction field, and exact determinant/rank of matrices over them.
//!
//! Rational coefficients are the conductor-1 case. Determinants clear
//! each row to an honest polynomial by a monomial factor and then run
//! fraction-free Bareiss elimination; every division in the elimination
//! is exact by construction, a failure signals an arithmetic bug.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `nvars` variables t_1, ..., t_nvars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    conductor: u64,
    terms: BTreeMap<Vec<i64>, Cyclotomic>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize, conductor: u64) -> Self {
        LaurentPoly {
            nvars,
            conductor,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Cyclotomic, nvars: usize) -> Self {
        let conductor = c.conductor();
        let mut p = LaurentPoly::zero(nvars, conductor);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize, conductor: u64) -> Self {
        Self::constant(Cyclotomic::one(conductor), nvars)
    }

    pub fn from_rational_constant(r: BigRational, nvars: usize, conductor: u64) -> Self {
        Self::constant(Cyclotomic::from_rational(r, conductor), nvars)
    }

    /// The variable t_i (1-based) as a polynomial.
    pub fn var(i: usize, nvars: usize, conductor: u64) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut exp = vec![0i64; nvars];
        exp[i - 1] = 1;
        Self::monomial(exp, Cyclotomic::one(conductor))
    }

    pub fn monomial(exp: Vec<i64>, coeff: Cyclotomic) -> Self {
        let nvars = exp.len();
        let conductor = coeff.conductor();
        let mut p = LaurentPoly::zero(nvars, conductor);
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> Cyclotomic {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    fn insert(&mut self, exp: Vec<i64>, coeff: Cyclotomic) {
        debug_assert_eq!(exp.len(), self.nvars);
        if !coeff.is_zero() {
            self.terms.insert(exp, coeff);
        }
    }

    fn add_term(&mut self, exp: &[i64], coeff: &Cyclotomic) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(exp) {
            Some(c) => {
                let sum = &*c + coeff;
                if sum.is_zero() {
                    self.terms.remove(exp);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(exp.to_vec(), coeff.clone());
            }
        }
    }

    fn compatible(&self, other: &LaurentPoly) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(
            self.conductor, other.conductor,
            "coefficient conductor mismatch: promote first"
        );
    }

    pub fn promote(&self, conductor: u64) -> Result<LaurentPoly> {
        if conductor % self.conductor != 0 {
            return Err(Error::NotDivisor(self.conductor, conductor));
        }
        let mut p = LaurentPoly::zero(self.nvars, conductor);
        for (exp, c) in &self.terms {
            p.insert(exp.clone(), c.promote(conductor)?);
        }
        Ok(p)
    }

    /// The bar involution: t^e -> t^{-e} with conjugated coefficients.
    pub fn bar(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(self.nvars, self.conductor);
        for (exp, c) in &self.terms {
            p.insert(exp.iter().map(|e| -e).collect(), c.conj());
        }
        p
    }

    pub fn scale(&self, c: &Cyclotomic) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars, self.conductor);
        }
        let mut p = LaurentPoly::zero(self.nvars, self.conductor);
        for (exp, a) in &self.terms {
            p.insert(exp.clone(), a * c);
        }
        p
    }

    /// Multiplication by the monomial t^shift.
    pub fn shift(&self, shift: &[i64]) -> LaurentPoly {
        assert_eq!(shift.len(), self.nvars);
        let mut p = LaurentPoly::zero(self.nvars, self.conductor);
        for (exp, c) in &self.terms {
            let e: Vec<i64> = exp.iter().zip(shift).map(|(a, b)| a + b).collect();
            p.insert(e, c.clone());
        }
        p
    }

    /// Componentwise minimum exponent over all terms; None for 0.
    pub fn min_exponent(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut min = it.next()?.clone();
        for exp in it {
            for (m, e) in min.iter_mut().zip(exp) {
                *m = (*m).min(*e);
            }
        }
        Some(min)
    }

    /// Lexicographically largest exponent (the leading term for division).
    fn lead(&self) -> Option<(&Vec<i64>, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `InternalDivisibilityFailure` when the quotient is
    /// not a Laurent polynomial.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.compatible(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars, self.conductor));
        }
        let (dl_exp, dl_coeff) = divisor.lead().unwrap();
        let dl_exp = dl_exp.clone();
        let dl_inv = dl_coeff.inv()?;
        // every exponent of an exact quotient is bounded below, per
        // variable, by min(self) - min(divisor); together with the strictly
        // decreasing lex lead this bounds the division loop
        let floor: Vec<i64> = self
            .min_exponent()
            .unwrap()
            .iter()
            .zip(&divisor.min_exponent().unwrap())
            .map(|(a, b)| a - b)
            .collect();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.nvars, self.conductor);
        while let Some((r_exp, r_coeff)) = rem.lead() {
            let q_exp: Vec<i64> = r_exp.iter().zip(&dl_exp).map(|(a, b)| a - b).collect();
            if q_exp.iter().zip(&floor).any(|(q, f)| q < f) {
                return Err(Error::InternalDivisibilityFailure);
            }
            let q_coeff = r_coeff * &dl_inv;
            let q_term = LaurentPoly::monomial(q_exp, q_coeff);
            rem = &rem - &(&q_term * divisor);
            quot = &quot + &q_term;
        }
        Ok(quot)
    }

    /// Exact evaluation at nonzero rational points.
    pub fn evaluate(&self, point: &[BigRational]) -> Cyclotomic {
        assert_eq!(point.len(), self.nvars);
        assert!(point.iter().all(|p| !p.is_zero()));
        let mut acc = Cyclotomic::zero(self.conductor);
        for (exp, c) in &self.terms {
            let mut scalar = BigRational::one();
            for (e, p) in exp.iter().zip(point) {
                if *e >= 0 {
                    scalar *= num_traits::pow::pow(p.clone(), *e as usize);
                } else {
                    scalar *= num_traits::pow::pow(p.recip(), (-e) as usize);
                }
            }
            acc = &acc + &(c * &Cyclotomic::from_rational(scalar, self.conductor));
        }
        acc
    }

    /// The constant value, when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero(self.conductor)),
            1 => {
                let (exp, c) = self.terms.iter().next().unwrap();
                if exp.iter().all(|&e| e == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// The single term (exp, coeff), when the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(Vec<i64>, Cyclotomic)> {
        if self.terms.len() == 1 {
            let (exp, c) = self.terms.iter().next().unwrap();
            Some((exp.clone(), c.clone()))
        } else {
            None
        }
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        self.compatible(other);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp, c);
        }
        out
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, other: &LaurentPoly) -> LaurentPoly {
        self + &-other
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars, self.conductor);
        for (exp, c) in &self.terms {
            out.insert(exp.clone(), -c);
        }
        out
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        self.compatible(other);
        let mut out = LaurentPoly::zero(self.nvars, self.conductor);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&exp, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, e) in exp.iter().enumerate() {
                if *e != 0 {
                    write!(f, "*t{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Serialized term list: [{"exp": [...], "coeff": ...}].
#[derive(Serialize, Deserialize)]
struct TermWire {
    exp: Vec<i64>,
    coeff: Cyclotomic,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermWire> = self
            .terms
            .iter()
            .map(|(exp, c)| TermWire {
                exp: exp.clone(),
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl LaurentPoly {
    /// Deserialization needs the ambient variable count and conductor so
    /// the zero polynomial round-trips.
    pub fn from_terms(
        nvars: usize,
        conductor: u64,
        terms: Vec<(Vec<i64>, Cyclotomic)>,
    ) -> Result<Self> {
        let mut p = LaurentPoly::zero(nvars, conductor);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector length {} != {}",
                    exp.len(),
                    nvars
                )));
            }
            p.add_term(&exp, &c.promote(conductor)?);
        }
        Ok(p)
    }
}

/// A fraction of Laurent polynomials; equality by cross-multiplication.
#[derive(Clone, Debug, Serialize)]
pub struct RationalFunction {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalFunction {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self> {
        numerator.compatible(&denominator);
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.nvars(), p.conductor());
        RationalFunction {
            numerator: p,
            denominator: one,
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn bar(&self) -> RationalFunction {
        RationalFunction {
            numerator: self.numerator.bar(),
            denominator: self.denominator.bar(),
        }
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction {
            numerator: &self.numerator * &other.denominator,
            denominator: &self.denominator * &other.numerator,
        })
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction {
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
        })
    }

    /// The constant value num/den, when the fraction reduces to a
    /// constant: num = c * den for a scalar c.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        let (exp, dc) = self.denominator.terms.iter().next()?;
        let candidate = match self.numerator.terms.get(exp) {
            Some(nc) => nc.div_field(dc).ok()?,
            None => Cyclotomic::zero(self.numerator.conductor()),
        };
        let check = self.denominator.scale(&candidate);
        if check == self.numerator {
            Some(candidate)
        } else {
            None
        }
    }

    /// When the fraction is exactly c * t^e for a scalar c, returns
    /// (e, c).
    pub fn as_scaled_monomial(&self) -> Option<(Vec<i64>, Cyclotomic)> {
        // num = c t^e den: match the lex-leading terms
        let (ne, nc) = self.numerator.lead()?;
        let (de, dc) = self.denominator.lead()?;
        let e: Vec<i64> = ne.iter().zip(de).map(|(a, b)| a - b).collect();
        let c = nc.div_field(dc).ok()?;
        let check = self.denominator.shift(&e).scale(&c);
        if check == self.numerator {
            Some((e, c))
        } else {
            None
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.numerator, self.denominator)
    }
}

impl Cyclotomic {
    /// Field division; unlike [`Cyclotomic::div_exact`] this never
    /// requires integrality of the quotient.
    pub fn div_field(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &other.inv()?)
    }
}

/// Rectangular matrix over Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixOverLaurent {
    rows: usize,
    cols: usize,
    nvars: usize,
    conductor: u64,
    entries: Vec<LaurentPoly>,
}

impl MatrixOverLaurent {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        let (nvars, conductor) = match entries.first() {
            Some(first) => (first.nvars(), first.conductor()),
            None => (0, 1),
        };
        for e in &entries {
            if e.nvars() != nvars || e.conductor() != conductor {
                return Err(Error::DimensionMismatch(
                    "inconsistent entry variables or conductors".into(),
                ));
            }
        }
        Ok(MatrixOverLaurent {
            rows,
            cols,
            nvars,
            conductor,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, nvars: usize, conductor: u64) -> Self {
        MatrixOverLaurent {
            rows,
            cols,
            nvars,
            conductor,
            entries: vec![LaurentPoly::zero(nvars, conductor); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize, conductor: u64) -> Self {
        let mut m = Self::zero(n, n, nvars, conductor);
        for i in 0..n {
            *m.get_mut(i, i) = LaurentPoly::one(nvars, conductor);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut LaurentPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> MatrixOverLaurent {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        MatrixOverLaurent {
            rows: self.cols,
            cols: self.rows,
            nvars: self.nvars,
            conductor: self.conductor,
            entries,
        }
    }

    pub fn mul(&self, other: &MatrixOverLaurent) -> Result<MatrixOverLaurent> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (nvars, conductor) = (self.nvars, self.conductor);
        let mut out = MatrixOverLaurent::zero(self.rows, other.cols, nvars, conductor);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = LaurentPoly::zero(nvars, conductor);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(r, k) * other.get(k, c));
                }
                *out.get_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    fn nvars_conductor(&self) -> (usize, u64) {
        (self.nvars, self.conductor)
    }

    /// Exact determinant by row monomial clearing plus fraction-free
    /// Bareiss elimination.
    pub fn det(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let (nvars, conductor) = self.nvars_conductor();
        if n == 0 {
            return Ok(LaurentPoly::one(nvars, conductor));
        }
        // clear each row to honest polynomials by a monomial factor
        let mut work: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        let mut restored_shift = vec![0i64; nvars];
        for r in 0..n {
            let row: Vec<&LaurentPoly> = (0..n).map(|c| self.get(r, c)).collect();
            let mut min: Option<Vec<i64>> = None;
            for e in row.iter().filter_map(|p| p.min_exponent()) {
                min = Some(match min {
                    None => e,
                    Some(m) => m.iter().zip(&e).map(|(a, b)| *a.min(b)).collect(),
                });
            }
            let min = min.unwrap_or_else(|| vec![0; nvars]);
            let neg: Vec<i64> = min.iter().map(|e| -e).collect();
            for (s, m) in restored_shift.iter_mut().zip(&min) {
                *s += m;
            }
            work.push(row.into_iter().map(|p| p.shift(&neg)).collect());
        }
        let (det_poly, sign) = bareiss_det(&mut work, conductor, nvars)?;
        let det = det_poly.shift(&restored_shift);
        Ok(if sign < 0 { -&det } else { det })
    }

    /// Rank over the fraction field. A full-rank witness at a fixed
    /// evaluation point short-circuits the symbolic elimination; the
    /// witness is exact, the fallback is exact.
    pub fn rank(&self) -> usize {
        let maxr = self.rows.min(self.cols);
        if maxr == 0 {
            return 0;
        }
        let (nvars, _) = self.nvars_conductor();
        let point: Vec<BigRational> = (0..nvars)
            .map(|i| {
                BigRational::from_integer(num_bigint::BigInt::from(SMALL_PRIMES[i % SMALL_PRIMES.len()]))
            })
            .collect();
        let evaluated: Vec<Vec<Cyclotomic>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).evaluate(&point)).collect())
            .collect();
        let witness = dense_rank(&evaluated);
        if witness == maxr {
            return maxr;
        }
        self.rank_symbolic()
    }

    /// Fraction-free Bareiss rank with full row/column pivot search.
    pub fn rank_symbolic(&self) -> usize {
        let (nvars, conductor) = self.nvars_conductor();
        let mut m: Vec<Vec<LaurentPoly>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        let mut prev = LaurentPoly::one(nvars, conductor);
        let maxr = self.rows.min(self.cols);
        for step in 0..maxr {
            // pivot search
            let mut pivot = None;
            'search: for r in step..self.rows {
                for c in step..self.cols {
                    if !m[r][c].is_zero() {
                        pivot = Some((r, c));
                        break 'search;
                    }
                }
            }
            let Some((pr, pc)) = pivot else {
                break;
            };
            m.swap(step, pr);
            for row in m.iter_mut() {
                row.swap(step, pc);
            }
            rank += 1;
            let pivot_val = m[step][step].clone();
            for r in step + 1..self.rows {
                for c in step + 1..self.cols {
                    let t = &(&m[r][c] * &pivot_val) - &(&m[r][step] * &m[step][c]);
                    m[r][c] = t
                        .div_exact(&prev)
                        .expect("Bareiss division is exact by construction");
                }
                m[r][step] = LaurentPoly::zero(nvars, conductor);
            }
            prev = pivot_val;
        }
        rank
    }

    /// Cofactor-expansion determinant; the independent oracle for `det`.
    pub fn det_cofactor(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("not square".into()));
        }
        let (nvars, conductor) = self.nvars_conductor();
        Ok(cofactor_rec(self, &(0..self.rows).collect::<Vec<_>>(), 0, nvars, conductor))
    }

    /// Dense exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Vec<Vec<Cyclotomic>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).evaluate(point)).collect())
            .collect()
    }
}

const SMALL_PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

fn bareiss_det(
    m: &mut [Vec<LaurentPoly>],
    conductor: u64,
    nvars: usize,
) -> Result<(LaurentPoly, i8)> {
    let n = m.len();
    let mut sign = 1i8;
    let mut prev = LaurentPoly::one(nvars, conductor);
    for step in 0..n {
        if m[step][step].is_zero() {
            let Some(r) = (step + 1..n).find(|&r| !m[r][step].is_zero()) else {
                return Ok((LaurentPoly::zero(nvars, conductor), 1));
            };
            m.swap(step, r);
            sign = -sign;
        }
        let pivot = m[step][step].clone();
        for r in step + 1..n {
            for c in step + 1..n {
                let t = &(&m[r][c] * &pivot) - &(&m[r][step] * &m[step][c]);
                m[r][c] = t.div_exact(&prev)?;
            }
            m[r][step] = LaurentPoly::zero(nvars, conductor);
        }
        prev = pivot;
    }
    Ok((m[n - 1][n - 1].clone(), sign))
}

fn cofactor_rec(
    m: &MatrixOverLaurent,
    cols: &[usize],
    row: usize,
    nvars: usize,
    conductor: u64,
) -> LaurentPoly {
    if cols.is_empty() {
        return LaurentPoly::one(nvars, conductor);
    }
    let mut acc = LaurentPoly::zero(nvars, conductor);
    for (i, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&x| x != c)
            .collect();
        let minor = cofactor_rec(m, &rest, row + 1, nvars, conductor);
        let term = &minor * entry;
        if i % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// Rank of a dense cyclotomic matrix by Gaussian elimination over the
/// field Q(zeta_n).
pub fn dense_rank(m: &[Vec<Cyclotomic>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut work: Vec<Vec<Cyclotomic>> = m.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, p);
        let inv = work[rank][col].inv().expect("nonzero pivot");
        for c in col..cols {
            work[rank][c] = &work[rank][c] * &inv;
        }
        for r in 0..rows {
            if r != rank && !work[r][col].is_zero() {
                let f = work[r][col].clone();
                for c in col..cols {
                    let t = &f * &work[rank][c];
                    work[r][c] = &work[r][c] - &t;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Determinant of a dense cyclotomic matrix by Gaussian elimination.
pub fn dense_det(m: &[Vec<Cyclotomic>], conductor: u64) -> Cyclotomic {
    let n = m.len();
    if n == 0 {
        return Cyclotomic::one(conductor);
    }
    let mut work: Vec<Vec<Cyclotomic>> = m.to_vec();
    let mut det = Cyclotomic::one(conductor);
    for step in 0..n {
        let Some(p) = (step..n).find(|&r| !work[r][step].is_zero()) else {
            return Cyclotomic::zero(conductor);
        };
        if p != step {
            work.swap(step, p);
            det = -det;
        }
        let pivot = work[step][step].clone();
        det = &det * &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        for r in step + 1..n {
            if !work[r][step].is_zero() {
                let f = &work[r][step] * &inv;
                for c in step..n {
                    let t = &f * &work[step][c];
                    work[r][c] = &work[r][c] - &t;
                }
            }
        }
    }
    det
}

/// Dense product of cyclotomic matrices.
pub fn dense_mul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>], conductor: u64) -> Vec<Vec<Cyclotomic>> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner > 0 { b[0].len() } else { 0 };
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let mut acc = Cyclotomic::zero(conductor);
                    for k in 0..inner {
                        acc = &acc + &(&a[r][k] * &b[k][c]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
