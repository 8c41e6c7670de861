use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use pretzel_core::invariants::jones::jones_polynomial;
use pretzel_core::invariants::{conway_polynomial, full_invariants, v3_closed};
use pretzel_core::obstruction::{canonical_knots, decide, ratio_window_check, strong_ratio, weak_checks, Reason};
use pretzel_core::pretzel::PretzelKnot;
use pretzel_core::signature::signature_profile;

fn all_vectors(g: usize, max: u64) -> Vec<Vec<u64>> {
    let n = 2 * g + 1;
    let mut out = Vec::new();
    let mut t = vec![0u64; n];
    loop {
        out.push(t.clone());
        let mut i = 0;
        while i < n && t[i] == max {
            t[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        t[i] += 1;
    }
}

fn knot(t: Vec<u64>) -> PretzelKnot {
    PretzelKnot::from_twists(t).unwrap()
}

fn surveyed() -> Vec<PretzelKnot> {
    let mut v = canonical_knots(2, 6, None);
    v.extend(canonical_knots(3, 5, None));
    v
}

#[test]
fn invariants_ignore_strand_order() {
    let vectors: Vec<Vec<u64>> = (1..=3).flat_map(|g| all_vectors(g, 2)).collect();
    vectors.par_iter().for_each(|t| {
        let k = knot(t.clone());
        let c = k.canonical_form();
        assert_eq!(conway_polynomial(&k).unwrap(), conway_polynomial(&c).unwrap(), "{k}");
        assert_eq!(jones_polynomial(&k), jones_polynomial(&c), "{k}");
        assert_eq!(v3_closed(&k), v3_closed(&c), "{k}");
    });
}

#[test]
fn conway_coefficients_positive_and_v3_negative() {
    let vectors: Vec<Vec<u64>> = (1..=3).flat_map(|g| all_vectors(g, 2)).collect();
    vectors.par_iter().for_each(|t| {
        let k = knot(t.clone());
        let inv = full_invariants(&k).unwrap();
        for j in 1..=k.genus() {
            assert!(inv.a2j(j) > BigInt::zero(), "{k}: a{}", 2 * j);
        }
        assert!(inv.v3.is_negative(), "{k}: v3 = {}", inv.v3);
    });
}

#[test]
fn weak_checks_imply_window_failure() {
    let knots: Vec<PretzelKnot> = (2..=4).flat_map(|g| canonical_knots(g, 10, Some(4))).collect();
    for k in knots {
        if !weak_checks(&k).unwrap().iter().any(|w| w.fires) {
            continue;
        }
        let g = BigRational::from_integer((2 * k.genus()).into());
        let far = strong_ratio(&k).map(|r| r.f > g || !r.f.is_positive()).unwrap_or(true);
        let window = ratio_window_check(&k).map(|w| w.passes).unwrap_or(false);
        assert!(far || !window, "{k}: weak check fires but the ratio window passes");
    }
}

#[test]
fn eliminated_multiples_really_miss_the_ratio() {
    for k in surveyed() {
        let v = decide(&k).unwrap();
        for r in &v.reasons {
            let Reason::SignatureBound { f, step, .. } = r else { continue };
            let prof = signature_profile(&k).unwrap();
            // candidates handed on to the integrality stage are not eliminated here
            let handed_on: Vec<u64> = v
                .reasons
                .iter()
                .filter_map(|r| match r {
                    Reason::CassIntegrality { p, .. } => Some(*p),
                    _ => None,
                })
                .chain(v.survivors.iter().map(|s| s.p))
                .collect();
            let eliminated = (1..).map(|n| n * step).filter(|p| !handed_on.contains(p));
            for p in eliminated.take(10) {
                let s = prof.p_signature(p);
                assert_ne!(BigRational::new(s.value.into(), p.into()), *f, "{k}, p = {p}");
            }
        }
    }
}

#[test]
fn decide_is_repeatable() {
    for k in surveyed() {
        let a = serde_json::to_string(&decide(&k).unwrap()).unwrap();
        let b = serde_json::to_string(&decide(&k).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
