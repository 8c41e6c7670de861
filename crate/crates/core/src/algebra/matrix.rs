use num_bigint::BigInt;
use num_traits::One;

use super::{IntPoly, LaurentPoly};

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// (Bareiss) elimination.
///
/// Every row is first multiplied by `x^s`, with `s` the largest negative
/// exponent present, so elimination runs in `Z[x]` where all Bareiss
/// divisions are exact. The factor `x^(n s)` is removed at the end.
pub fn bareiss_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return LaurentPoly::one();
    }
    let lowest = m
        .iter()
        .flatten()
        .filter_map(LaurentPoly::min_exp)
        .min()
        .unwrap_or(0);
    let shift = (-lowest).max(0);

    let mut a: Vec<Vec<IntPoly>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    let (p, off) = e.shift(shift).to_poly();
                    debug_assert!(off >= 0 || p.is_zero());
                    p.shift(off.max(0) as usize)
                })
                .collect()
        })
        .collect();

    let det = bareiss_in_place(&mut a);
    LaurentPoly::from_poly(&det, -(n as i64) * shift)
}

/// Bareiss elimination over `Z[x]`; destroys the input.
fn bareiss_in_place(a: &mut [Vec<IntPoly>]) -> IntPoly {
    let n = a.len();
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return IntPoly::zero();
            };
            a.swap(k, piv);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Integer matrix determinant through the same elimination.
pub fn int_det(m: &[Vec<i64>]) -> BigInt {
    let mut a: Vec<Vec<IntPoly>> = m
        .iter()
        .map(|r| r.iter().map(|&v| IntPoly::constant(v.into())).collect())
        .collect();
    if a.is_empty() {
        return BigInt::one();
    }
    bareiss_in_place(&mut a).coeff(0)
}
