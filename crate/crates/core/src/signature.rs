//! Tristram-Levine signatures from certified Alexander-root angles.
//!
//! On the unit circle `z^2 = t - 2 + t^-1 = 2cos(theta) - 2`, so the roots of
//! the Alexander polynomial there are the roots of
//! `q(w) = 1 + a_2 w + ... + a_2g w^g` in `(-4, 0)`. Every knot in the family
//! has `g` such roots, all simple, and the signature function is a staircase
//! climbing by 2 at each angle `theta_1 < ... < theta_g`.
//!
//! Angles are compared against `2 pi j / n` with interval arithmetic. When
//! refinement stalls, an exact test decides whether the Alexander root is an
//! `n`-th root of unity: `2cos(2 pi j / n) - 2` are precisely the roots of
//! `h_n(w) = D_n(w + 2) - 2`, with `D_n` the Dickson polynomial.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::roots::count_roots_in;
use crate::algebra::trig::{acos_interval, cos_interval, pi_interval};
use crate::algebra::{isolate_real_roots, refine_interval, BigRational, IntPoly, RationalInterval, SturmChain};
use crate::bigjson;
use crate::error::{Error, Result};
use crate::invariants::conway_polynomial;
use crate::pretzel::PretzelKnot;

/// Precision of the cached angle enclosures and first comparison attempts.
const BASE_BITS: u32 = 48;
/// Precision at which a stalled comparison triggers the exact coincidence test.
const EXACT_TEST_BITS: u32 = 128;
/// Give up separating an interval query from a root beyond this precision.
const MAX_QUERY_BITS: u32 = 256;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// `h_n(w) = D_n(w + 2) - 2`: its roots are `2cos(2 pi j / n) - 2` for
/// `j = 0..=n/2`.
pub fn unity_root_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1);
    let y = IntPoly::from_i64s(&[2, 1]);
    let mut prev = IntPoly::from_i64s(&[2]);
    let mut cur = y.clone();
    for _ in 1..n {
        let next = &(&y * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    &cur - &IntPoly::from_i64s(&[2])
}

/// Enclosure of `2cos(2 pi j / n) - 2` for `0 < 2j < n`.
fn unity_w(j: u64, n: u64, bits: u32) -> RationalInterval {
    let pi = pi_interval(bits + 8);
    let f = BigRational::new((2 * j).into(), n.into());
    let (xlo, xhi) = (pi.lo() * &f, pi.hi() * &f);
    let two = BigRational::from_integer(2.into());
    // cos is decreasing on [0, pi]
    let lo = cos_interval(&xhi, bits + 4).lo() * &two - &two;
    let hi = cos_interval(&xlo, bits + 4).hi() * &two - &two;
    RationalInterval::new(lo, hi)
}

/// Certified Alexander-root angles of one knot.
#[derive(Clone, Debug, Serialize)]
pub struct SignatureProfile {
    genus: usize,
    #[serde(skip)]
    wpoly: IntPoly,
    /// Isolating intervals of the roots of `q` in `(-4, 0)`, ordered by
    /// increasing angle (decreasing `w`).
    #[serde(skip)]
    w_roots: Vec<RationalInterval>,
    /// `w_roots` refined to `BASE_BITS`, the precision most queries settle at.
    #[serde(skip)]
    w_base: Vec<RationalInterval>,
    theta: Vec<RationalInterval>,
}

impl SignatureProfile {
    pub fn new(k: &PretzelKnot) -> Result<Self> {
        let g = k.genus();
        if g == 0 {
            return Ok(SignatureProfile { genus: 0, wpoly: IntPoly::one(), w_roots: vec![], w_base: vec![], theta: vec![] });
        }
        let wpoly = conway_polynomial(k)?.w_form();
        Self::from_w_polynomial(g, wpoly)
    }

    /// Profile from `q(w)` directly; `g` roots are required in `(-4, 0)`.
    pub fn from_w_polynomial(genus: usize, wpoly: IntPoly) -> Result<Self> {
        let mut w_roots = isolate_real_roots(&wpoly, &RationalInterval::from_ints(-4, 0))?;
        if w_roots.len() != genus {
            return Err(Error::WrongRootCount { expected: genus, found: w_roots.len() });
        }
        w_roots.reverse();
        let w_base = w_roots.iter().map(|iv| refine_interval(&wpoly, iv, &eps(BASE_BITS))).collect();
        let mut p = SignatureProfile { genus, wpoly, w_roots, w_base, theta: vec![] };
        p.theta = (0..genus).map(|m| p.compute_theta(m, BASE_BITS)).collect();
        Ok(p)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn w_polynomial(&self) -> &IntPoly {
        &self.wpoly
    }

    /// Isolating `w`-intervals, in the same order as the angles.
    pub fn w_intervals(&self) -> &[RationalInterval] {
        &self.w_roots
    }

    /// Cached angle enclosures, increasing.
    pub fn thetas(&self) -> &[RationalInterval] {
        &self.theta
    }

    /// Enclosure of `theta_m` of width about `2^-bits`.
    pub fn theta_at(&self, m: usize, bits: u32) -> RationalInterval {
        if bits <= BASE_BITS {
            self.theta[m].clone()
        } else {
            self.compute_theta(m, bits)
        }
    }

    fn compute_theta(&self, m: usize, bits: u32) -> RationalInterval {
        // theta = arccos(1 + w/2) is steepest near w = 0, where it behaves
        // like sqrt(-w); squaring the target width covers that.
        let w = refine_interval(&self.wpoly, &self.w_roots[m], &eps(2 * bits + 4));
        let half = rat(1, 2);
        let one = BigRational::one();
        // decreasing map: the upper w end gives the lower angle
        let lo = acos_interval(&(&one + w.hi() * &half), bits);
        let hi = acos_interval(&(&one + w.lo() * &half), bits);
        RationalInterval::new(lo.lo().clone(), hi.hi().clone())
    }

    /// Enclosure of `w_m` of width at most `2^-bits`.
    fn w_at(&self, m: usize, bits: u32) -> RationalInterval {
        if bits <= BASE_BITS {
            return self.w_base[m].clone();
        }
        refine_interval(&self.wpoly, &self.w_base[m], &eps(bits))
    }

    fn theta_estimate(&self, m: usize) -> f64 {
        ratio_to_decimal(&self.theta[m].midpoint())
    }

    /// Compare `theta_m` with `2 pi j / n` at the given precision; `None` if
    /// the enclosures still overlap. Works in the `w` coordinate, where the
    /// target is `2cos(2 pi j / n) - 2` and the order is reversed.
    fn compare_at(&self, m: usize, n: u64, j: u64, bits: u32) -> Option<Ordering> {
        if j == 0 {
            return Some(Ordering::Greater);
        }
        if 2 * j >= n {
            return Some(Ordering::Less);
        }
        let target = unity_w(j, n, bits);
        self.w_at(m, bits).compare(&target).map(Ordering::reverse)
    }

    /// `Some(j)` when `theta_m = 2 pi j / n` exactly.
    pub fn unity_index(&self, m: usize, n: u64) -> Option<u64> {
        let common = self.wpoly.gcd(&unity_root_polynomial(n));
        if common.degree().unwrap_or(0) == 0 {
            return None;
        }
        // the isolating interval has non-root endpoints for q, hence for any
        // divisor of q
        let hits = count_roots_in(&SturmChain::new(&common), &self.w_roots[m])?;
        if hits == 0 {
            return None;
        }
        // w_m is one of the 2cos(2 pi j / n) - 2 with 0 < 2j < n; pin down
        // which by separating it from both neighbours
        let guess = (self.theta_estimate(m) * n as f64 / std::f64::consts::TAU).round() as u64;
        let mut k = guess.clamp(1, ((n - 1) / 2).max(1));
        let mut bits = BASE_BITS;
        loop {
            match (self.compare_at(m, n, k - 1, bits), self.compare_at(m, n, k + 1, bits)) {
                (Some(Ordering::Greater), Some(Ordering::Less)) => return Some(k),
                (Some(Ordering::Less), _) => k -= 1,
                (_, Some(Ordering::Greater)) => k += 1,
                _ => bits *= 2,
            }
        }
    }

    /// Compare `theta_m` with `2 pi j / n`.
    pub fn compare_with_unity_angle(&self, m: usize, n: u64, j: u64) -> Ordering {
        let mut bits = BASE_BITS;
        let mut tested = false;
        loop {
            if let Some(o) = self.compare_at(m, n, j, bits) {
                return o;
            }
            if !tested && bits >= EXACT_TEST_BITS {
                tested = true;
                if let Some(k) = self.unity_index(m, n) {
                    return k.cmp(&j);
                }
            }
            bits *= 2;
        }
    }

    /// `floor(theta_m * p / (2 pi))`, and whether the value is an exact integer.
    pub fn floor_scaled_theta(&self, m: usize, p: u64) -> (u64, bool) {
        let guess = (self.theta_estimate(m) * p as f64 / std::f64::consts::TAU).floor();
        let mut c = (guess.max(0.0) as u64).min((p - 1) / 2);
        let mut bits = BASE_BITS;
        let mut tested = false;
        loop {
            match (self.compare_at(m, p, c, bits), self.compare_at(m, p, c + 1, bits)) {
                (Some(Ordering::Greater), Some(Ordering::Less)) => return (c, false),
                (Some(Ordering::Less), _) => c -= 1,
                (_, Some(Ordering::Greater)) => c += 1,
                _ => {
                    if !tested && bits >= EXACT_TEST_BITS {
                        tested = true;
                        if let Some(k) = self.unity_index(m, p) {
                            return (k, true);
                        }
                    }
                    bits *= 2;
                }
            }
        }
    }

    /// `sigma_omega` at the given angle in `[0, pi]`.
    pub fn signature_at_angle(&self, angle: &Angle) -> Result<i64> {
        let mut below = 0i64;
        for m in 0..self.genus {
            let ord = match angle {
                Angle::PiMultiple(r) => {
                    assert!(!r.is_negative() && r <= &BigRational::one(), "angle {r} pi outside [0, pi]");
                    // r pi = 2 pi numer / (2 denom)
                    let n = (r.denom() * 2u32).to_u64().expect("denominator fits");
                    let j = r.numer().to_u64().expect("numerator fits");
                    self.compare_with_unity_angle(m, n, j)
                }
                Angle::Interval(iv) => self.compare_interval(m, iv)?,
            };
            match ord {
                Ordering::Less => below += 1,
                Ordering::Greater => {}
                Ordering::Equal => return Err(Error::OnRoot),
            }
        }
        Ok(2 * below)
    }

    fn compare_interval(&self, m: usize, iv: &RationalInterval) -> Result<Ordering> {
        let mut bits = BASE_BITS;
        while bits <= MAX_QUERY_BITS {
            if let Some(o) = self.theta_at(m, bits).compare(iv) {
                return Ok(o);
            }
            bits *= 2;
        }
        Err(Error::OnRoot)
    }

    /// `sigma(K, p)`, the sum of `sigma_omega` over all `p`-th roots of unity.
    /// A root of unity sitting on an Alexander root contributes the average of
    /// the two one-sided values.
    pub fn p_signature(&self, p: u64) -> PSignature {
        assert!(p >= 1);
        let mut value = 0i64;
        let mut coincidence = false;
        for m in 0..self.genus {
            let (c, exact) = self.floor_scaled_theta(m, p);
            let (p, c) = (p as i64, c as i64);
            if exact {
                coincidence = true;
                value += 2 * (p - 2 * c);
            } else {
                value += 2 * (p - 1 - 2 * c);
            }
        }
        PSignature { p, value, coincidence_flag: coincidence }
    }

    /// Certified upper bound for `L = sum_m 2(1 - theta_m / pi)`, the limit of
    /// `sigma(K, p) / p`.
    pub fn limit_upper_bound(&self) -> BigRational {
        let pi = pi_interval(BASE_BITS + 8);
        let two = BigRational::from_integer(2.into());
        self.theta
            .iter()
            .map(|th| &two * (BigRational::one() - th.lo() / pi.hi()))
            .sum()
    }

    pub fn limit_lower_bound(&self) -> BigRational {
        let pi = pi_interval(BASE_BITS + 8);
        let two = BigRational::from_integer(2.into());
        self.theta
            .iter()
            .map(|th| &two * (BigRational::one() - th.hi() / pi.lo()))
            .sum()
    }

    /// For `p` a multiple of `d`: `sigma(K, p) / p < sum_m 2(d - 2c_m) / d`
    /// with `c_m = floor(theta_m d / (2 pi))`, since the floors only grow
    /// when `d` is scaled up. Returns the `c_m` and the bound.
    pub fn multiple_bound(&self, d: u64) -> (Vec<u64>, BigRational) {
        let cs: Vec<u64> = (0..self.genus).map(|m| self.floor_scaled_theta(m, d).0).collect();
        let num: i64 = cs.iter().map(|&c| 2 * (d as i64 - 2 * c as i64)).sum();
        (cs, BigRational::new(num.into(), d.into()))
    }
}

/// A query angle for [`SignatureProfile::signature_at_angle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Angle {
    /// Any angle known to lie in this interval.
    Interval(RationalInterval),
    /// Exactly `r * pi`, `0 <= r <= 1`.
    PiMultiple(BigRational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PSignature {
    pub p: u64,
    pub value: i64,
    pub coincidence_flag: bool,
}

pub fn signature_profile(k: &PretzelKnot) -> Result<SignatureProfile> {
    SignatureProfile::new(k)
}

pub fn p_signature(k: &PretzelKnot, p: u64) -> Result<PSignature> {
    Ok(SignatureProfile::new(k)?.p_signature(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaRow {
    pub p: u64,
    pub sigma: i64,
    #[serde(serialize_with = "bigjson::ratio")]
    pub sigma_over_p: BigRational,
    pub coincidence: bool,
}

/// `sigma(K, p) / p` for `p = 1..=pmax`, computed in parallel.
pub fn sigma_ratio_table(k: &PretzelKnot, pmax: u64) -> Result<Vec<SigmaRow>> {
    let profile = SignatureProfile::new(k)?;
    Ok(profile_table(&profile, pmax))
}

pub fn profile_table(profile: &SignatureProfile, pmax: u64) -> Vec<SigmaRow> {
    (1..=pmax)
        .into_par_iter()
        .map(|p| {
            let s = profile.p_signature(p);
            SigmaRow {
                p,
                sigma: s.value,
                sigma_over_p: BigRational::new(s.value.into(), p.into()),
                coincidence: s.coincidence_flag,
            }
        })
        .collect()
}

/// Signature of `(1 - w) A + (1 - conj w) A^T` at `w = e^(i angle)`, from
/// floating-point eigenvalues of its real `2n x 2n` form. Independent of the
/// root-isolation machinery; used as a cross-check.
pub fn hermitian_signature_oracle(k: &PretzelKnot, angle: f64) -> Result<i64> {
    let a = k.seifert_matrix()?;
    let n = a.size();
    let (c, s) = (angle.cos(), angle.sin());
    let e = a.entries();
    let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let sym = (e[i][j] + e[j][i]) as f64;
            let anti = (e[j][i] - e[i][j]) as f64;
            let r = (1.0 - c) * sym;
            let im = s * anti;
            big[(i, j)] = r;
            big[(i + n, j + n)] = r;
            big[(i, j + n)] = -im;
            big[(i + n, j)] = im;
        }
    }
    let scale = big.abs().max().max(1.0);
    let eig = big.symmetric_eigen().eigenvalues;
    let tol = 1e-9 * scale;
    if eig.iter().any(|x| x.abs() < tol) {
        return Err(Error::PrecisionExhausted);
    }
    let pos = eig.iter().filter(|&&x| x > 0.0).count() as i64;
    let neg = eig.len() as i64 - pos;
    // every eigenvalue of the complex form appears twice
    Ok((pos - neg) / 2)
}

/// `sigma(K, p)` summed from the numeric oracle. At `omega = 1` the form
/// vanishes and contributes 0; at an Alexander root the two one-sided values
/// are averaged.
pub fn hermitian_p_signature_oracle(k: &PretzelKnot, p: u64) -> Result<i64> {
    let mut total2 = 0i64;
    for j in 1..p {
        let phi = 2.0 * std::f64::consts::PI * j as f64 / p as f64;
        match hermitian_signature_oracle(k, phi) {
            Ok(v) => total2 += 2 * v,
            Err(Error::PrecisionExhausted) => {
                let d = 1e-6;
                total2 += hermitian_signature_oracle(k, phi - d)? + hermitian_signature_oracle(k, phi + d)?;
            }
            Err(e) => return Err(e),
        }
    }
    debug_assert!(total2.is_even());
    Ok(total2 / 2)
}

pub fn ratio_to_decimal(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
