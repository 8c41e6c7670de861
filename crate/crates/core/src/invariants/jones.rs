//! Jones polynomial of `K(k)` from the Kauffman bracket of its standard
//! alternating diagram.
//!
//! Each strand is a vertical twist region, i.e. a 2-tangle. Its bracket is a
//! vector over the two crossingless tangles `0` (arcs NW-NE, SW-SE) and
//! `inf` (arcs NW-SW, NE-SE), built by stacking one crossing at a time. The
//! strands are then summed side by side and closed off. Cost is linear in the
//! number of crossings.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::LaurentPoly;
use crate::pretzel::PretzelKnot;

/// Bracket of a 2-tangle: `zero * <0> + inf * <inf>`, coefficients in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct TangleBracket {
    zero: LaurentPoly,
    inf: LaurentPoly,
}

fn loop_value() -> LaurentPoly {
    // delta = -A^2 - A^-2
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

impl TangleBracket {
    fn vertical_identity() -> Self {
        TangleBracket { zero: LaurentPoly::zero(), inf: LaurentPoly::one() }
    }

    fn horizontal_identity() -> Self {
        TangleBracket { zero: LaurentPoly::one(), inf: LaurentPoly::zero() }
    }

    /// One negative crossing between two vertical strands: the A-smoothing
    /// keeps the strands vertical, the B-smoothing caps them off.
    fn crossing() -> Self {
        TangleBracket {
            zero: LaurentPoly::from_terms([(-1, 1)]),
            inf: LaurentPoly::from_terms([(1, 1)]),
        }
    }

    /// Stack `other` below `self`. `inf` is the identity and `0 . 0 = delta 0`.
    fn stack(&self, other: &Self, delta: &LaurentPoly) -> Self {
        TangleBracket {
            inf: &self.inf * &other.inf,
            zero: &(&(&self.inf * &other.zero) + &(&self.zero * &other.inf))
                + &(delta * &(&self.zero * &other.zero)),
        }
    }

    /// Place `other` to the right of `self`. `0` is the identity and
    /// `inf + inf = delta inf`.
    fn sum(&self, other: &Self, delta: &LaurentPoly) -> Self {
        TangleBracket {
            zero: &self.zero * &other.zero,
            inf: &(&(&self.zero * &other.inf) + &(&self.inf * &other.zero))
                + &(delta * &(&self.inf * &other.inf)),
        }
    }

    /// Numerator closure: `<N(0)> = delta`, `<N(inf)> = 1`.
    fn close(&self, delta: &LaurentPoly) -> LaurentPoly {
        &(&self.zero * delta) + &self.inf
    }
}

fn twist_region(crossings: u64, delta: &LaurentPoly) -> TangleBracket {
    let x = TangleBracket::crossing();
    (0..crossings).fold(TangleBracket::vertical_identity(), |acc, _| acc.stack(&x, delta))
}

/// Kauffman bracket `<D>` of the standard diagram, in the variable `A`.
pub fn kauffman_bracket(k: &PretzelKnot) -> LaurentPoly {
    let delta = loop_value();
    k.twists()
        .iter()
        .map(|&t| twist_region(2 * t + 1, &delta))
        .fold(TangleBracket::horizontal_identity(), |acc, r| acc.sum(&r, &delta))
        .close(&delta)
}

/// Jones polynomial `V(t)` as a Laurent polynomial in `t`.
///
/// The diagram has writhe `w = -n` with `n = 2 sum k_i + 2g + 1`, so the
/// normalized bracket is `(-A^3)^n <D>`, then `t = A^-4`.
pub fn jones_polynomial(k: &PretzelKnot) -> LaurentPoly {
    let n = k.twists().iter().map(|&t| 2 * t + 1).sum::<u64>();
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let f = kauffman_bracket(k).shift(3 * n as i64).scale(&sign);
    let mut v = LaurentPoly::zero();
    for (e, c) in f.terms() {
        assert!(e % 4 == 0, "normalized bracket has exponent {e} not divisible by 4");
        v = &v + &LaurentPoly::monomial(c.clone(), -e / 4);
    }
    v
}
