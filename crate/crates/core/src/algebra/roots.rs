//! Certified real-root isolation with Sturm sequences over the rationals.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{BigRational, IntPoly};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with rational endpoints, `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        RationalInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(BigRational::from_integer(lo.into()), BigRational::from_integer(hi.into()))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_subset_of(&self, other: &RationalInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// `Less` if entirely below `other`, `Greater` if entirely above,
    /// `None` when the two overlap.
    pub fn compare(&self, other: &RationalInterval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (ratio_to_f64(&self.lo), ratio_to_f64(&self.hi))
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.to_f64_pair();
        write!(f, "[{} ~ {a:.6}, {} ~ {b:.6}]", self.lo, self.hi)
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalInterval", 2)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.end()
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...` kept primitive at each step.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut polys = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmChain { polys };
        }
        polys.push(p.derivative().primitive_part());
        loop {
            let n = polys.len();
            let r = polys[n - 2].pseudo_rem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push((-r).primitive_part());
        }
        SturmChain { polys }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.polys[0]
    }

    /// Sign changes of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.polys {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval `(a, b)`;
    /// neither endpoint may be a root.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a < b);
        debug_assert!(self.poly().sign_at(a) != Ordering::Equal);
        debug_assert!(self.poly().sign_at(b) != Ordering::Equal);
        self.variations(a) - self.variations(b)
    }
}

/// Pick a split point strictly inside `(a, b)` that is not a root of `p`.
fn non_root_split(p: &IntPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let w = b - a;
    for den in 2i64.. {
        for num in 1..den {
            let x = a + &w * BigRational::new(num.into(), den.into());
            if p.sign_at(&x) != Ordering::Equal {
                return x;
            }
        }
    }
    unreachable!()
}

/// Isolate every real root of `p` in the open domain `(domain.lo, domain.hi)`.
///
/// Returned intervals are disjoint, sorted, have non-root endpoints at which
/// `p` takes opposite signs, and each contains exactly one root.
pub fn isolate_real_roots(p: &IntPoly, domain: &RationalInterval) -> Result<Vec<RationalInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for end in [domain.lo(), domain.hi()] {
        if p.sign_at(end) == Ordering::Equal {
            return Err(Error::RootOnBoundary(end.to_string()));
        }
    }
    if domain.lo() == domain.hi() {
        return Ok(Vec::new());
    }
    let g = p.gcd(&p.derivative());
    if g.degree().unwrap_or(0) > 0
        && SturmChain::new(&g).count_open(domain.lo(), domain.hi()) > 0
    {
        return Err(Error::NonSquarefree);
    }

    let chain = SturmChain::new(p);
    let mut out = Vec::new();
    let mut stack = vec![(domain.lo().clone(), domain.hi().clone())];
    while let Some((a, b)) = stack.pop() {
        match chain.count_open(&a, &b) {
            0 => {}
            1 => out.push(RationalInterval::new(a, b)),
            _ => {
                let mid = non_root_split(p, &a, &b);
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out.sort_by(|x, y| x.lo().cmp(y.lo()));
    Ok(out)
}

/// Bisect an isolating interval of a simple root of `p` until its width is at
/// most `width`. Returns a degenerate interval if a bisection point hits the
/// root exactly.
///
/// Panics if `p` does not change sign across `iv` (the interval does not
/// isolate a simple root).
pub fn refine_interval(p: &IntPoly, iv: &RationalInterval, width: &BigRational) -> RationalInterval {
    let (mut a, mut b) = (iv.lo().clone(), iv.hi().clone());
    let sa = p.sign_at(&a);
    let sb = p.sign_at(&b);
    if sa == Ordering::Equal {
        return RationalInterval::point(a);
    }
    if sb == Ordering::Equal {
        return RationalInterval::point(b);
    }
    assert!(sa != sb, "interval does not isolate a sign change of {p}");
    let two = BigRational::from_integer(2.into());
    while &(&b - &a) > width {
        let mid = (&a + &b) / &two;
        match p.sign_at(&mid) {
            Ordering::Equal => return RationalInterval::point(mid),
            s if s == sa => a = mid,
            _ => b = mid,
        }
    }
    RationalInterval::new(a, b)
}

/// Number of roots of `p` (distinct, real) strictly inside `iv`, or `None`
/// if an endpoint is a root.
pub fn count_roots_in(chain: &SturmChain, iv: &RationalInterval) -> Option<usize> {
    let p = chain.poly();
    if p.sign_at(iv.lo()) == Ordering::Equal || p.sign_at(iv.hi()) == Ordering::Equal {
        return None;
    }
    if iv.lo() == iv.hi() {
        return Some(0);
    }
    Some(chain.count_open(iv.lo(), iv.hi()))
}
