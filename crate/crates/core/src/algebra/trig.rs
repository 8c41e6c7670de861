//! Rigorous rational enclosures of pi, cos and arccos.
//!
//! Series are summed in exact rational arithmetic with the running sums
//! rounded outward to dyadic rationals; the truncation error is bounded by
//! the first omitted term (Taylor remainder for cos, alternating tail for
//! arctan).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{BigRational, RationalInterval};

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Largest multiple of `2^-bits` not above `x`.
pub fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    let n = (x.numer() * &s).div_floor(x.denom());
    BigRational::new(n, s)
}

/// Smallest multiple of `2^-bits` not below `x`.
pub fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    let n = -((-(x.numer() * &s)).div_floor(x.denom()));
    BigRational::new(n, s)
}

fn eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow2(bits))
}

/// Enclosure of `arctan(1/n)` for integer `n >= 2`.
fn arctan_inv(n: u64, bits: u32) -> (BigRational, BigRational) {
    let guard = bits + 16;
    let n2 = BigInt::from(n) * BigInt::from(n);
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    let mut pow = BigInt::from(n); // n^(2k+1)
    let target = eps(guard);
    let mut k: u64 = 0;
    loop {
        let term = BigRational::new(BigInt::one(), &pow * BigInt::from(2 * k + 1));
        if term < target {
            // |tail| <= first omitted term
            return (round_down(&(lo - &term), bits), round_up(&(hi + &term), bits));
        }
        if k % 2 == 0 {
            lo = round_down(&(&lo + &term), guard);
            hi = round_up(&(&hi + &term), guard);
        } else {
            lo = round_down(&(&lo - &term), guard);
            hi = round_up(&(&hi - &term), guard);
        }
        pow *= &n2;
        k += 1;
    }
}

const PI_BITS: u32 = 1024;

fn pi_master() -> &'static RationalInterval {
    static PI: OnceLock<RationalInterval> = OnceLock::new();
    PI.get_or_init(|| {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        let (a_lo, a_hi) = arctan_inv(5, PI_BITS + 8);
        let (b_lo, b_hi) = arctan_inv(239, PI_BITS + 8);
        let sixteen = BigRational::from_integer(16.into());
        let four = BigRational::from_integer(4.into());
        let lo = &sixteen * a_lo - &four * b_hi;
        let hi = &sixteen * a_hi - &four * b_lo;
        RationalInterval::new(round_down(&lo, PI_BITS), round_up(&hi, PI_BITS))
    })
}

/// Enclosure of pi with dyadic endpoints of `bits` fractional bits
/// (`bits <= 1024`).
pub fn pi_interval(bits: u32) -> RationalInterval {
    let bits = bits.min(PI_BITS);
    let m = pi_master();
    RationalInterval::new(round_down(m.lo(), bits), round_up(m.hi(), bits))
}

/// Enclosure of `cos(x)` of width roughly `2^-bits`.
///
/// Runs the Taylor series in fixed point with `bits + 16` fractional bits,
/// carrying a lower and an upper bound for each term's magnitude so every
/// rounding is outward.
pub fn cos_interval(x: &BigRational, bits: u32) -> RationalInterval {
    let guard = bits + 16;
    let scale = pow2(guard);
    let ax = x.abs();
    let xl = (ax.numer() * &scale).div_floor(ax.denom());
    let xu = -((-(ax.numer() * &scale)).div_floor(ax.denom()));
    let (x2l, x2u) = (&xl * &xl, &xu * &xu);
    let scale2 = &scale * &scale;
    let mut tl = scale.clone();
    let mut tu = scale.clone();
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        // Lagrange remainder after the terms so far is at most |term|.
        if k > 0 && tu <= BigInt::one() {
            let lo = BigRational::new(lo - &tu, scale.clone());
            let hi = BigRational::new(hi + &tu, scale);
            let lo = round_down(&lo, bits).max(-BigRational::one());
            let hi = round_up(&hi, bits).min(BigRational::one());
            return RationalInterval::new(lo, hi);
        }
        if k % 2 == 0 {
            lo += &tl;
            hi += &tu;
        } else {
            lo -= &tu;
            hi -= &tl;
        }
        let d = BigInt::from((2 * k + 1) * (2 * k + 2)) * &scale2;
        tl = (&tl * &x2l).div_floor(&d);
        tu = -((-(&tu * &x2u)).div_floor(&d));
        k += 1;
    }
}

/// Enclosure of `arccos(c)` for `-1 <= c <= 1`, width at most `2^-bits`.
pub fn acos_interval(c: &BigRational, bits: u32) -> RationalInterval {
    let one = BigRational::one();
    assert!(c.abs() <= one, "arccos argument {c} outside [-1, 1]");
    if *c == one {
        return RationalInterval::point(BigRational::zero());
    }
    if *c == -one {
        return pi_interval(bits + 2);
    }
    let mut lo = BigRational::zero();
    let mut hi = pi_interval(bits + 8).hi().clone();
    // Bracket a floating-point estimate first; bisection then only has to
    // cover the bits beyond double precision.
    if let Some((a, b)) = float_bracket(c) {
        if a > lo && b < hi {
            lo = a;
            hi = b;
        }
    }
    let width = eps(bits);
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > width {
        let mut mid = (&lo + &hi) / &two;
        let mut prec = bits + 8;
        let mut nudge = 3;
        loop {
            let cm = cos_interval(&mid, prec);
            if cm.lo() > c {
                lo = mid;
                break;
            }
            if cm.hi() < c {
                hi = mid;
                break;
            }
            // cos is strictly decreasing on [0, pi] and arccos(c) is
            // irrational here, so more precision or a shifted probe decides.
            if prec < bits + 512 {
                prec *= 2;
            } else {
                mid = &lo + (&hi - &lo) / BigRational::from_integer(nudge.into());
                nudge += 1;
                prec = bits + 8;
            }
        }
    }
    RationalInterval::new(lo, hi)
}

fn float_bracket(c: &BigRational) -> Option<(BigRational, BigRational)> {
    let guess = c.to_f64()?.acos();
    let d = 1e-12;
    let a = BigRational::from_float(guess - d)?;
    let b = BigRational::from_float(guess + d)?;
    // cos decreasing: arccos(c) in (a, b) iff cos(a) > c > cos(b)
    let ok = cos_interval(&a, 60).lo() > c && cos_interval(&b, 60).hi() < c;
    ok.then_some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::ratio_to_f64;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pi_enclosure() {
        let p = pi_interval(200);
        assert!(p.width() <= q(1, 1) * eps(199));
        // 355/113 > pi > 333/106
        assert!(p.hi() < &q(355, 113));
        assert!(p.lo() > &q(333, 106));
        assert!((ratio_to_f64(p.lo()) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn rounding_is_outward() {
        let x = q(1, 3);
        assert!(round_down(&x, 10) <= x && x <= round_up(&x, 10));
        assert_eq!(round_up(&q(1, 4), 10), q(1, 4));
    }

    #[test]
    fn cos_matches_f64() {
        for &(n, d) in &[(0, 1), (1, 2), (1, 1), (3, 2), (3, 1), (22, 7), (7, 2)] {
            let x = q(n, d);
            let iv = cos_interval(&x, 80);
            let exact = (n as f64 / d as f64).cos();
            let (a, b) = iv.to_f64_pair();
            assert!(a <= exact + 1e-15 && exact - 1e-15 <= b, "{n}/{d}: {iv:?}");
            assert!(iv.width() < eps(70));
        }
    }

    #[test]
    fn acos_of_half_contains_pi_over_three() {
        let iv = acos_interval(&q(1, 2), 60);
        let p = pi_interval(200);
        let three = BigRational::from_integer(3.into());
        // pi/3 lies in [lo, hi]: lo <= pi_lo/3 and pi_hi/3 <= hi
        assert!(iv.lo() <= &(p.lo() / &three));
        assert!(&(p.hi() / &three) <= iv.hi());
        assert!(iv.width() <= eps(60));
    }

    #[test]
    fn acos_endpoints() {
        assert_eq!(acos_interval(&q(1, 1), 30), RationalInterval::point(q(0, 1)));
        let iv = acos_interval(&q(-1, 1), 30);
        assert!(iv.lo() < &q(314159266, 100000000) && iv.hi() > &q(314159265, 100000000));
        let iv = acos_interval(&q(-7, 9), 40);
        let exact = (-7.0f64 / 9.0).acos();
        let (a, b) = iv.to_f64_pair();
        assert!(a <= exact + 1e-12 && exact - 1e-12 <= b);
    }
}
