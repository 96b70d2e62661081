//! Exact integer matrix helpers: fraction-free determinant and Smith
//! normal form, used to validate Seifert matrices and psi maps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Fraction-free Bareiss determinant of a square integer matrix.
pub fn int_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut work: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for step in 0..n {
        if work[step][step].is_zero() {
            let Some(r) = (step + 1..n).find(|&r| !work[r][step].is_zero()) else {
                return BigInt::zero();
            };
            work.swap(step, r);
            sign = -sign;
        }
        let pivot = work[step][step].clone();
        for r in step + 1..n {
            for c in step + 1..n {
                let t = &work[r][c] * &pivot - &work[r][step] * &work[step][c];
                let (q, rem) = t.div_rem(&prev);
                debug_assert!(rem.is_zero());
                work[r][c] = q;
            }
            work[r][step] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = work[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Elementary divisors (diagonal of the Smith normal form), nonnegative,
/// zeros trailing.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let mut divisors = Vec::new();
    let mut top = 0;
    while top < rows && top < cols {
        // find a nonzero pivot
        let mut pivot = None;
        'search: for r in top..rows {
            for c in top..cols {
                if !a[r][c].is_zero() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else {
            break;
        };
        a.swap(top, pr);
        for row in a.iter_mut() {
            row.swap(top, pc);
        }
        loop {
            // clear column by euclidean steps
            let mut clean = true;
            for r in top + 1..rows {
                if !a[r][top].is_zero() {
                    let q = a[r][top].div_floor(&a[top][top]);
                    for c in top..cols {
                        let t = &a[top][c] * &q;
                        a[r][c] -= t;
                    }
                    if !a[r][top].is_zero() {
                        a.swap(top, r);
                        clean = false;
                    }
                }
            }
            // clear row
            for c in top + 1..cols {
                if !a[top][c].is_zero() {
                    let q = a[top][c].div_floor(&a[top][top]);
                    for r in top..rows {
                        let t = &a[r][top] * &q;
                        a[r][c] -= t;
                    }
                    if !a[top][c].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(top, c);
                        }
                        clean = false;
                    }
                }
            }
            if clean
                && a[top + 1..rows].iter().all(|row| row[top].is_zero())
                && a[top][top + 1..cols].iter().all(|e| e.is_zero())
            {
                break;
            }
        }
        divisors.push(a[top][top].abs());
        top += 1;
    }
    // enforce the divisibility chain d1 | d2 | ...
    for i in 0..divisors.len() {
        for j in i + 1..divisors.len() {
            let g = divisors[i].gcd(&divisors[j]);
            let l = &divisors[i] * &divisors[j] / &g;
            divisors[i] = g;
            divisors[j] = l;
        }
    }
    while divisors.len() < rows.min(cols) {
        divisors.push(BigInt::zero());
    }
    divisors
}

/// True when the matrix defines a surjection Z^cols -> Z^rows, i.e. every
/// elementary divisor is 1.
pub fn is_epimorphism(m: &[Vec<i64>]) -> bool {
    let rows = m.len();
    if rows == 0 {
        return true;
    }
    let divisors = smith_normal_form(m);
    divisors.len() >= rows && divisors[..rows].iter().all(|d| d.is_one())
}
