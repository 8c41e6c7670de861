//! Conway coefficients `a_2j` and the degree-3 invariant `v3`, computed along
//! independent routes that are required to agree:
//!
//! * determinant: `det(x A - x^-1 A^T)` rewritten in `z = x - x^-1`;
//! * closed forms in the elementary symmetric polynomials of the twists;
//! * skein: unwinding the twists crossing by crossing down to the unknot;
//! * Jones: `v3 = -V'''(1)/36 - V''(1)/12`.
//!
//! `v3` is normalized so that the right-handed trefoil has `v3 = 1`.

pub mod jones;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{bareiss_det, BigRational, IntPoly, LaurentPoly};
use crate::bigjson;
use crate::error::{Error, Result};
use crate::pretzel::{s_prefix, KnotSpec, PretzelKnot};

pub use jones::{jones_polynomial, kauffman_bracket};

/// `1 + a_2 z^2 + ... + a_2g z^2g`, stored as a polynomial in `z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConwayPolynomial(IntPoly);

impl ConwayPolynomial {
    pub fn new(p: IntPoly) -> Self {
        ConwayPolynomial(p)
    }

    pub fn as_poly(&self) -> &IntPoly {
        &self.0
    }

    /// Coefficient of `z^2j`, zero beyond the degree.
    pub fn a2j(&self, j: usize) -> BigInt {
        self.0.coeff(2 * j)
    }

    /// Coefficients in increasing powers of `z`.
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    /// `q(w) = 1 + a_2 w + a_4 w^2 + ...`, i.e. `nabla` with `z^2 = w`.
    pub fn w_form(&self) -> IntPoly {
        IntPoly::new(self.0.coeffs().iter().step_by(2).cloned().collect())
    }
}

impl fmt::Display for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with("z"))
    }
}

/// Rewrite a Laurent polynomial in `x` as a polynomial in `z = x - x^-1`.
pub fn rewrite_in_z(p: &LaurentPoly) -> Result<IntPoly> {
    let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let mut rest = p.clone();
    let mut coeffs: Vec<BigInt> = Vec::new();
    while let Some(d) = rest.max_exp() {
        if d < 0 {
            return Err(Error::RewriteFailure(p.display_with("x")));
        }
        let d = d as usize;
        let c = rest.coeff(d as i64);
        rest = &rest - &z.pow(d as u32).scale(&c);
        if coeffs.len() <= d {
            coeffs.resize(d + 1, BigInt::zero());
        }
        coeffs[d] = c;
    }
    Ok(IntPoly::new(coeffs))
}

/// `det(x A - x^-1 A^T)` for the Seifert matrix `A`, in `x = t^(1/2)`.
pub fn alexander_determinant(k: &PretzelKnot) -> Result<LaurentPoly> {
    let a = k.seifert_matrix()?;
    let at = a.transpose();
    let m: Vec<Vec<LaurentPoly>> = a
        .entries()
        .iter()
        .zip(&at)
        .map(|(row, trow)| {
            row.iter()
                .zip(trow)
                .map(|(&u, &v)| LaurentPoly::from_terms([(1, u), (-1, -v)]))
                .collect()
        })
        .collect();
    Ok(bareiss_det(&m))
}

/// Conway polynomial from the Seifert-matrix determinant.
pub fn conway_polynomial(k: &PretzelKnot) -> Result<ConwayPolynomial> {
    if k.genus() == 0 {
        return Ok(ConwayPolynomial(IntPoly::one()));
    }
    let det = alexander_determinant(k)?;
    Ok(ConwayPolynomial(rewrite_in_z(&det)?))
}

pub fn a2j_from_conway(c: &ConwayPolynomial, j: usize) -> BigInt {
    c.a2j(j)
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// `a_2 = g(g+1)/2 + g s_1 + s_2`.
pub fn a2_closed(k: &PretzelKnot) -> BigInt {
    a2_of_twists(k.twists())
}

fn a2_of_twists(ks: &[u64]) -> BigInt {
    let g = big((ks.len() as u64 - 1) / 2);
    let m = ks.len();
    &g * (&g + 1u32) / 2u32 + &g * s_prefix(1, ks, m) + s_prefix(2, ks, m)
}

/// `v3 = -(g(g+1)(2g+1)/3 + g(2g+1) s_1 + g s_1^2 + 2g s_2 + s_1 s_2 + s_3) / 2`.
pub fn v3_closed(k: &PretzelKnot) -> BigInt {
    let g = big(k.genus() as u64);
    let (s1, s2, s3) = (k.s(1), k.s(2), k.s(3));
    let two_g_1: BigInt = 2u32 * &g + 1u32;
    let inner = &g * (&g + 1u32) * &two_g_1 / 3u32
        + &g * &two_g_1 * &s1
        + &g * &s1 * &s1
        + 2u32 * &g * &s2
        + &s1 * &s2
        + s3;
    let (half, rem) = inner.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero(), "closed-form v3 numerator {inner} is odd");
    -half
}

fn require_genus(k: &PretzelKnot, g: usize) -> Result<()> {
    if k.genus() != g {
        return Err(Error::WrongGenus { expected: g, actual: k.genus() });
    }
    Ok(())
}

/// `a_4 = 1 + s_1 + s_2 + s_3 + s_4` for genus 2.
pub fn a4_closed_genus2(k: &PretzelKnot) -> Result<BigInt> {
    require_genus(k, 2)?;
    Ok(1u32 + (1..=4).map(|n| k.s(n)).sum::<BigInt>())
}

/// Genus-3 closed forms with every `s_n` taken over all seven twists:
/// `a_2 = 6 + 3 s_1 + s_2`, `a_4 = 5 + 4 s_1 + 3 s_2 + 2 s_3 + s_4`,
/// `a_6 = 1 + s_1 + ... + s_6`.
pub fn a2_a4_a6_closed_genus3(k: &PretzelKnot) -> Result<(BigInt, BigInt, BigInt)> {
    require_genus(k, 3)?;
    let s: Vec<BigInt> = (0..=6).map(|n| k.s(n)).collect();
    let a2 = 6u32 + 3u32 * &s[1] + &s[2];
    let a4 = 5u32 + 4u32 * &s[1] + 3u32 * &s[2] + 2u32 * &s[3] + &s[4];
    let a6 = 1u32 + s[1..=6].iter().sum::<BigInt>();
    Ok((a2, a4, a6))
}

/// Genus-3 `a_4` with the symmetric polynomials taken over the first five
/// twists only (`s_{n,5}`), an alternative reading of the genus-3 formula.
/// Kept for the discrepancy report; not used in any route.
pub fn a4_genus3_first_five(k: &PretzelKnot) -> Result<BigInt> {
    require_genus(k, 3)?;
    let s = |n| s_prefix(n, k.twists(), 5);
    Ok(5u32 + 4u32 * s(1) + 3u32 * s(2) + 2u32 * s(3) + s(4))
}

/// Genus-3 `v3 = -(28 + 21 s_1 + 3 s_1^2 + 6 s_2 + s_1 s_2 + s_3) / 2` over the
/// first five twists only. Same status as [`a4_genus3_first_five`].
pub fn v3_genus3_first_five(k: &PretzelKnot) -> Result<BigInt> {
    require_genus(k, 3)?;
    let s = |n| s_prefix(n, k.twists(), 5);
    let (s1, s2, s3) = (s(1), s(2), s(3));
    let inner = 28u32 + 21u32 * &s1 + 3u32 * &s1 * &s1 + 6u32 * &s2 + &s1 * &s2 + s3;
    Ok(-(inner / 2u32))
}

/// `v3` by unwinding the twists one crossing at a time with
/// `v3(K+) - v3(K-) = (a2(K+) + a2(K-) + lk^2) / 2` (the resolved link is a
/// pair of unknots). The last strand is emptied first, then the one before,
/// and the two remaining crossings of those strands are removed together,
/// dropping the genus by one. `a2` along the way comes from the closed form.
pub fn v3_skein(k: &PretzelKnot) -> BigInt {
    let mut ks = k.twists().to_vec();
    let mut twice = BigInt::zero();
    while ks.len() > 1 {
        let g = big((ks.len() as u64 - 1) / 2);
        let last = ks.len() - 1;
        for strand in [last, last - 1] {
            while ks[strand] > 0 {
                // |lk| = twists on every other strand plus g
                let others: u64 = ks.iter().sum::<u64>() - ks[strand];
                let lk = big(others) + &g;
                let a_minus = a2_of_twists(&ks);
                ks[strand] -= 1;
                let a_plus = a2_of_twists(&ks);
                twice -= a_plus + a_minus + &lk * &lk;
            }
        }
        let lk = big(ks.iter().sum::<u64>()) + &g;
        let a_big = a2_of_twists(&ks);
        ks.truncate(ks.len() - 2);
        let a_small = a2_of_twists(&ks);
        twice -= a_big + a_small + &lk * &lk;
    }
    let (v3, rem) = twice.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero());
    v3
}

/// `-V'''(1)/36 - V''(1)/12` for a Jones polynomial in `t`.
pub fn v3_from_jones_poly(v: &LaurentPoly) -> BigRational {
    let d2 = BigRational::from_integer(v.derivative_at_one(2));
    let d3 = BigRational::from_integer(v.derivative_at_one(3));
    -(d3 / BigRational::from_integer(36.into())) - d2 / BigRational::from_integer(12.into())
}

pub fn v3_from_jones(k: &PretzelKnot) -> Result<BigInt> {
    let v = v3_from_jones_poly(&jones_polynomial(k));
    if !v.is_integer() {
        return Err(Error::NonIntegerV3(v.to_string()));
    }
    Ok(v.to_integer())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Determinant,
    ClosedForm,
    Skein,
    Jones,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Determinant => "determinant",
            Route::ClosedForm => "closed-form",
            Route::Skein => "skein",
            Route::Jones => "jones",
        })
    }
}

/// Cross-checked invariants of one knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSet {
    #[serde(serialize_with = "display_str")]
    pub knot: PretzelKnot,
    pub mirror: bool,
    pub genus: usize,
    #[serde(serialize_with = "conway_coeffs")]
    pub conway: ConwayPolynomial,
    #[serde(serialize_with = "bigjson::int")]
    pub a2: BigInt,
    #[serde(serialize_with = "bigjson::opt_int")]
    pub a4: Option<BigInt>,
    #[serde(serialize_with = "bigjson::opt_int")]
    pub a6: Option<BigInt>,
    #[serde(serialize_with = "bigjson::int")]
    pub v3: BigInt,
    /// Routes that produced (and agreed on) each quantity.
    pub routes: BTreeMap<String, Vec<Route>>,
}

fn display_str<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn conway_coeffs<S: serde::Serializer>(c: &ConwayPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    bigjson::ints(c.as_poly().coeffs(), s)
}

impl InvariantSet {
    /// `a_2j`, zero beyond the genus.
    pub fn a2j(&self, j: usize) -> BigInt {
        self.conway.a2j(j)
    }

    /// `a_4` (zero for genus 1).
    pub fn a4_or_zero(&self) -> BigInt {
        self.conway.a2j(2)
    }

    /// Invariants of the mirror image: every `a_2j` unchanged, `v3` negated.
    pub fn mirrored(&self) -> Self {
        let mut m = self.clone();
        m.mirror = !self.mirror;
        m.v3 = -&self.v3;
        m
    }
}

struct Checker {
    routes: BTreeMap<String, Vec<Route>>,
}

impl Checker {
    fn agree(&mut self, quantity: &str, values: &[(Route, BigInt)]) -> Result<BigInt> {
        let (r0, v0) = &values[0];
        for (r, v) in &values[1..] {
            if v != v0 {
                return Err(Error::RouteMismatch {
                    quantity: quantity.to_string(),
                    route_a: r0.to_string(),
                    value_a: v0.to_string(),
                    route_b: r.to_string(),
                    value_b: v.to_string(),
                });
            }
        }
        self.routes
            .insert(quantity.to_string(), values.iter().map(|(r, _)| *r).collect());
        Ok(v0.clone())
    }
}

/// Every applicable route, cross-checked; any disagreement is an error.
pub fn full_invariants(k: &PretzelKnot) -> Result<InvariantSet> {
    let g = k.genus();
    let conway = conway_polynomial(k)?;
    let mut check = Checker { routes: BTreeMap::new() };

    let a2 = check.agree(
        "a2",
        &[(Route::Determinant, conway.a2j(1)), (Route::ClosedForm, a2_closed(k))],
    )?;

    let (mut a4, mut a6) = (None, None);
    if g >= 2 {
        let mut a4_routes = vec![(Route::Determinant, conway.a2j(2))];
        let mut a6_routes = vec![(Route::Determinant, conway.a2j(3))];
        match g {
            2 => a4_routes.push((Route::ClosedForm, a4_closed_genus2(k)?)),
            3 => {
                let (a2c, a4c, a6c) = a2_a4_a6_closed_genus3(k)?;
                check.agree("a2", &[(Route::Determinant, a2.clone()), (Route::ClosedForm, a2c)])?;
                a4_routes.push((Route::ClosedForm, a4c));
                a6_routes.push((Route::ClosedForm, a6c));
            }
            _ => {}
        }
        a4 = Some(check.agree("a4", &a4_routes)?);
        if g >= 3 {
            a6 = Some(check.agree("a6", &a6_routes)?);
        }
    }
    for j in 4..=g {
        check.agree(&format!("a{}", 2 * j), &[(Route::Determinant, conway.a2j(j))])?;
    }

    let v3 = check.agree(
        "v3",
        &[
            (Route::ClosedForm, v3_closed(k)),
            (Route::Skein, v3_skein(k)),
            (Route::Jones, v3_from_jones(k)?),
        ],
    )?;

    Ok(InvariantSet {
        knot: k.clone(),
        mirror: false,
        genus: g,
        conway,
        a2,
        a4,
        a6,
        v3,
        routes: check.routes,
    })
}

/// Invariants of a possibly mirrored family member.
pub fn invariants_of(spec: &KnotSpec) -> Result<InvariantSet> {
    let inv = full_invariants(&spec.knot)?;
    Ok(if spec.mirror { inv.mirrored() } else { inv })
}

/// `|v3|`, positive for every non-trivial member of the family.
pub fn abs_v3(inv: &InvariantSet) -> BigInt {
    inv.v3.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn knot(t: &[i64]) -> PretzelKnot {
        PretzelKnot::new(t).unwrap()
    }

    fn conway(t: &[i64]) -> IntPoly {
        conway_polynomial(&knot(t)).unwrap().as_poly().clone()
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn conway_examples() {
        assert_eq!(conway(&[1, 0, 0, 0, 0]), IntPoly::from_i64s(&[1, 0, 5, 0, 2]));
        assert_eq!(conway(&[1, 1, 0, 0, 0]), IntPoly::from_i64s(&[1, 0, 8, 0, 4]));
        assert_eq!(conway(&[2, 0, 0, 0, 0]), IntPoly::from_i64s(&[1, 0, 7, 0, 3]));
        assert_eq!(conway(&[0, 0, 0]), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(conway_polynomial(&PretzelKnot::unknot()).unwrap().as_poly(), &IntPoly::one());
    }

    #[test]
    fn rewrite_rejects_non_z_forms() {
        // x^2 + 1 is not a polynomial in x - 1/x
        let p = LaurentPoly::from_terms([(2, 1), (0, 1)]);
        assert!(matches!(rewrite_in_z(&p), Err(Error::RewriteFailure(_))));
        let p = LaurentPoly::from_terms([(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(rewrite_in_z(&p).unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
    }

    #[test]
    fn coefficient_extraction() {
        let c = ConwayPolynomial::new(IntPoly::from_i64s(&[1, 0, 5, 0, 2]));
        assert_eq!(a2j_from_conway(&c, 1), b(5));
        assert_eq!(a2j_from_conway(&c, 3), b(0));
        let c = ConwayPolynomial::new(IntPoly::from_i64s(&[1, 0, 7, 0, 3]));
        assert_eq!(a2j_from_conway(&c, 2), b(3));
        assert_eq!(c.w_form(), IntPoly::from_i64s(&[1, 7, 3]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(a2_closed(&knot(&[0, 0, 0])), b(1));
        assert_eq!(v3_closed(&knot(&[0, 0, 0])), b(-1));
        assert_eq!(a2_closed(&knot(&[1, 1, 1, 1, 0, 0, 0])), b(24));
        assert_eq!(v3_closed(&knot(&[1, 1, 1, 1, 0, 0, 0])), b(-112));
        assert_eq!(a2_closed(&knot(&[1, 0, 0, 0, 0])), b(5));
        assert_eq!(v3_closed(&knot(&[1, 0, 0, 0, 0])), b(-11));
        assert_eq!(a2_closed(&PretzelKnot::unknot()), b(0));
        assert_eq!(v3_closed(&PretzelKnot::unknot()), b(0));
    }

    #[test]
    fn genus_specific_closed_forms() {
        assert_eq!(a4_closed_genus2(&knot(&[1, 1, 0, 0, 0])).unwrap(), b(4));
        let (_, a4, _) = a2_a4_a6_closed_genus3(&knot(&[1, 1, 1, 1, 0, 0, 0])).unwrap();
        assert_eq!(a4, b(48));
        let (_, _, a6) = a2_a4_a6_closed_genus3(&knot(&[0; 7])).unwrap();
        assert_eq!(a6, b(1));
        assert_eq!(
            a4_closed_genus2(&knot(&[0, 0, 0])),
            Err(Error::WrongGenus { expected: 2, actual: 1 })
        );
        assert!(a2_a4_a6_closed_genus3(&knot(&[0; 5])).is_err());
    }

    #[test]
    fn first_five_reading_differs_when_last_strands_twist() {
        let k = knot(&[1, 1, 1, 1, 0, 0, 0]);
        assert_eq!(a4_genus3_first_five(&k).unwrap(), b(48));
        let k = knot(&[0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(a4_genus3_first_five(&k).unwrap(), b(5));
        assert_eq!(conway_polynomial(&k).unwrap().a2j(2), b(16));
    }

    #[test]
    fn skein_examples() {
        assert_eq!(v3_skein(&knot(&[0, 0, 0])), b(-1));
        assert_eq!(v3_skein(&knot(&[1, 0, 0, 0, 0])), b(-11));
        assert_eq!(v3_skein(&knot(&[2, 1, 0, 0, 0])), b(-36));
        assert_eq!(v3_skein(&PretzelKnot::unknot()), b(0));
    }

    #[test]
    fn jones_examples() {
        assert_eq!(v3_from_jones(&knot(&[0, 0, 0])).unwrap(), b(-1));
        assert_eq!(v3_from_jones(&PretzelKnot::unknot()).unwrap(), b(0));
        assert_eq!(v3_from_jones(&knot(&[1, 0, 0, 0, 0])).unwrap(), b(-11));
        // right trefoil -t^4 + t^3 + t has v3 = 1
        let right = LaurentPoly::from_terms([(4, -1), (3, 1), (1, 1)]);
        assert_eq!(v3_from_jones_poly(&right), BigRational::from_integer(b(1)));
    }

    #[test]
    fn full_invariant_examples() {
        let inv = full_invariants(&knot(&[2, 1, 0, 0, 0])).unwrap();
        assert_eq!((inv.a2.clone(), inv.a4.clone(), inv.v3.clone()), (b(11), Some(b(6)), b(-36)));
        assert_eq!(inv.routes["v3"], vec![Route::ClosedForm, Route::Skein, Route::Jones]);
        let inv = full_invariants(&knot(&[2, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(inv.a2, b(12));
        let inv = full_invariants(&PretzelKnot::unknot()).unwrap();
        assert_eq!(inv.conway.as_poly(), &IntPoly::one());
        assert_eq!(inv.v3, b(0));
    }

    #[test]
    fn mirror_rule() {
        let spec: KnotSpec = "P(3,1,1,1,1)".parse().unwrap();
        let inv = invariants_of(&spec).unwrap();
        assert!(inv.mirror);
        assert_eq!((inv.a2.clone(), inv.v3.clone()), (b(5), b(11)));
    }

    fn arb_knot(max_g: usize, max_k: u64) -> impl Strategy<Value = PretzelKnot> {
        (1..=max_g).prop_flat_map(move |g| {
            prop::collection::vec(0..=max_k, 2 * g + 1)
                .prop_map(|t| PretzelKnot::from_twists(t).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn a2_skein_increment(k in arb_knot(4, 5)) {
            // a2(K(.., k+1)) - a2(K(.., k)) = s_{1,2g} + g
            let mut bigger = k.twists().to_vec();
            *bigger.last_mut().unwrap() += 1;
            let bigger = PretzelKnot::from_twists(bigger).unwrap();
            let g = k.genus() as u64;
            let s1_head: u64 = k.twists()[..2 * k.genus()].iter().sum();
            prop_assert_eq!(a2_closed(&bigger) - a2_closed(&k), big(s1_head + g));
        }

        #[test]
        fn alexander_symmetry(k in arb_knot(4, 3)) {
            let d = alexander_determinant(&k).unwrap();
            prop_assert_eq!(d.invert_negate(), d.clone());
            prop_assert_eq!(conway_polynomial(&k).unwrap().as_poly().coeff(0), BigInt::one());
        }

        #[test]
        fn conway_degree_is_twice_genus(k in arb_knot(5, 3)) {
            let c = conway_polynomial(&k).unwrap();
            prop_assert_eq!(c.as_poly().degree(), Some(2 * k.genus()));
            prop_assert!(c.as_poly().coeffs().iter().skip(1).step_by(2).all(|x| x.is_zero()));
        }
    }
}
