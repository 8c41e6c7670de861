use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;

/// Laurent polynomial `sum c_e x^e` with integer coefficients and possibly
/// negative exponents. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    /// `x^offset * p(x)`
    pub fn from_poly(p: &IntPoly, offset: i64) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as i64 + offset, c.clone());
        }
        out
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&e, a) in &self.terms {
            out.add_term(e, a * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitute `x -> -x^-1`.
    pub fn invert_negate(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            let c = if e.rem_euclid(2) == 1 { -c } else { c.clone() };
            out.add_term(-e, c);
        }
        out
    }

    /// Split into `(p, offset)` with `self = x^offset p(x)` and `p(0) != 0`.
    pub fn to_poly(&self) -> (IntPoly, i64) {
        let Some(lo) = self.min_exp() else {
            return (IntPoly::zero(), 0);
        };
        let hi = self.max_exp().unwrap();
        let coeffs = (lo..=hi).map(|e| self.coeff(e)).collect();
        (IntPoly::new(coeffs), lo)
    }

    /// Sum of `c_e * e (e-1) ... (e-k+1)`, i.e. the k-th derivative at 1.
    pub fn derivative_at_one(&self, k: u32) -> BigInt {
        self.terms
            .iter()
            .map(|(&e, c)| {
                let falling: BigInt = (0..k as i64).map(|i| BigInt::from(e - i)).product();
                c * falling
            })
            .sum()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if e == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match e {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{e}")),
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.display_with("x"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_terms_stored() {
        let a = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        let b = LaurentPoly::from_terms([(1, -1)]);
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::from_terms([(-1, -1)]));
        assert_eq!(s.terms().count(), 1);
    }

    #[test]
    fn square_of_x_minus_inverse() {
        let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        assert_eq!(z.pow(2), LaurentPoly::from_terms([(2, 1), (0, -2), (-2, 1)]));
    }

    #[test]
    fn poly_round_trip() {
        let a = LaurentPoly::from_terms([(-2, 3), (1, 1)]);
        let (p, off) = a.to_poly();
        assert_eq!(off, -2);
        assert_eq!(LaurentPoly::from_poly(&p, off), a);
    }

    #[test]
    fn derivatives_at_one() {
        // left trefoil -t^-4 + t^-3 + t^-1
        let v = LaurentPoly::from_terms([(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(v.eval_at_one(), BigInt::from(1));
        assert_eq!(v.derivative_at_one(2), BigInt::from(-6));
        assert_eq!(v.derivative_at_one(3), BigInt::from(54));
    }
}
