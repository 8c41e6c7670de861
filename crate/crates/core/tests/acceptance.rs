//! Acceptance gate. Runs each criterion in turn, prints one PASS/FAIL line
//! per criterion and exits non-zero if any failed.

use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use pretzel_core::invariants::{
    a2_a4_a6_closed_genus3, a2_closed, a4_closed_genus2, conway_polynomial, full_invariants, v3_closed, v3_from_jones,
    v3_skein,
};
use pretzel_core::obstruction::{
    canonical_knots, cass_slope_sum, decide, decide_all, minimal_threshold_sum, random_twists, strong_ratio, Outcome,
    Reason,
};
use pretzel_core::pretzel::PretzelKnot;
use pretzel_core::reproduce::golden_sigma_table;
use pretzel_core::signature::{hermitian_p_signature_oracle, signature_profile};

type Check = Result<String, String>;

fn knot(t: &[u64]) -> PretzelKnot {
    PretzelKnot::from_twists(t.to_vec()).unwrap()
}

fn ratio(s: &str) -> BigRational {
    BigRational::from_str(s).unwrap()
}

/// Every twist vector of length 2g+1 with entries in 0..=max, in every order.
fn all_vectors(g: usize, max: u64) -> Vec<PretzelKnot> {
    let n = 2 * g + 1;
    let mut out = Vec::new();
    let mut t = vec![0u64; n];
    loop {
        out.push(knot(&t));
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

fn canonical_up_to(g: usize, max: u64) -> Vec<PretzelKnot> {
    canonical_knots(g, max * (2 * g as u64 + 1), Some(max))
}

fn first_failure<T: Sync>(items: Vec<T>, f: impl Fn(&T) -> Option<String> + Sync + Send) -> Option<String> {
    items.par_iter().find_map_any(f)
}

fn closed_forms_match_determinant() -> Check {
    // canonical representatives for every genus, every ordering where it is cheap
    let mut knots: Vec<PretzelKnot> = (1..=3).flat_map(|g| all_vectors(g, 3)).collect();
    knots.extend((4..=5).flat_map(|g| canonical_up_to(g, 3)));
    let n = knots.len();
    let bad = first_failure(knots, |k| {
        let c = match conway_polynomial(k) {
            Ok(c) => c,
            Err(e) => return Some(format!("{k}: {e}")),
        };
        if a2_closed(k) != c.a2j(1) {
            return Some(format!("{k}: a2 closed {} vs determinant {}", a2_closed(k), c.a2j(1)));
        }
        match k.genus() {
            2 => {
                let a4 = a4_closed_genus2(k).unwrap();
                (a4 != c.a2j(2)).then(|| format!("{k}: a4 closed {a4} vs determinant {}", c.a2j(2)))
            }
            3 => {
                let closed = a2_a4_a6_closed_genus3(k).unwrap();
                let det = (c.a2j(1), c.a2j(2), c.a2j(3));
                (closed != det).then(|| format!("{k}: closed {closed:?} vs determinant {det:?}"))
            }
            _ => None,
        }
    });
    match bad {
        None => Ok(format!("{n} knots")),
        Some(e) => Err(e),
    }
}

fn v3_routes_agree() -> Check {
    let knots: Vec<PretzelKnot> = (1..=3).flat_map(|g| all_vectors(g, 2)).collect();
    let n = knots.len();
    let bad = first_failure(knots, |k| {
        let closed = v3_closed(k);
        let skein = v3_skein(k);
        let jones = match v3_from_jones(k) {
            Ok(v) => v,
            Err(e) => return Some(format!("{k}: {e}")),
        };
        (closed != skein || closed != jones).then(|| format!("{k}: closed {closed}, skein {skein}, jones {jones}"))
    });
    match bad {
        None => Ok(format!("{n} knots")),
        Some(e) => Err(e),
    }
}

fn point_values() -> Check {
    let expected: [(&[u64], i64, i64, i64); 5] = [
        (&[1, 0, 0, 0, 0], 5, 2, -11),
        (&[2, 0, 0, 0, 0], 7, 3, -19),
        (&[1, 1, 0, 0, 0], 8, 4, -22),
        (&[2, 1, 0, 0, 0], 11, 6, -36),
        (&[1, 1, 1, 1, 0, 0, 0], 24, 48, -112),
    ];
    for (t, a2, a4, v3) in expected {
        let k = knot(t);
        let inv = full_invariants(&k).map_err(|e| e.to_string())?;
        let got = (inv.a2.clone(), inv.a4_or_zero(), inv.v3.clone());
        if got != (BigInt::from(a2), BigInt::from(a4), BigInt::from(v3)) {
            return Err(format!("{k}: got {got:?}, expected ({a2},{a4},{v3})"));
        }
    }
    Ok("5 knots".into())
}

fn ratio_table() -> Check {
    let expected: [(&[u64], &str); 9] = [
        (&[2, 1, 1, 0, 0, 0, 0], "1219/205"),
        (&[1, 1, 1, 0, 0, 0, 0], "5256/985"),
        (&[3, 1, 0, 0, 0, 0, 0], "2660/461"),
        (&[2, 2, 0, 0, 0, 0, 0], "400/69"),
        (&[2, 1, 0, 0, 0, 0, 0], "578/111"),
        (&[1, 1, 0, 0, 0, 0, 0], "468/101"),
        (&[4, 0, 0, 0, 0, 0, 0], "96/17"),
        (&[3, 0, 0, 0, 0, 0, 0], "708/139"),
        (&[2, 0, 0, 0, 0, 0, 0], "1968/433"),
    ];
    for (t, f) in expected {
        let k = knot(t);
        let got = strong_ratio(&k).map_err(|e| e.to_string())?.f;
        if got != ratio(f) {
            return Err(format!("{k}: F = {got}, expected {f}"));
        }
    }
    Ok("9 fractions".into())
}

fn sigma_table() -> Check {
    let golden = golden_sigma_table().map_err(|e| e.to_string())?;
    if golden.len() != 52 {
        return Err(format!("golden table has {} rows", golden.len()));
    }
    let prof = signature_profile(&knot(&[1, 0, 0, 0, 0, 0, 0])).map_err(|e| e.to_string())?;
    for (p, want) in &golden {
        let s = prof.p_signature(*p);
        if s.coincidence_flag {
            return Err(format!("p = {p}: unexpected coincidence"));
        }
        let got = BigRational::new(s.value.into(), (*p).into());
        if got != *want {
            return Err(format!("p = {p}: sigma/p = {got}, expected {want}"));
        }
    }
    Ok("52 rows".into())
}

fn integrality_endgame() -> Check {
    let k = knot(&[1, 0, 0, 0, 0, 0, 0]);
    let s = cass_slope_sum(&k, 5).map_err(|e| e.to_string())?;
    if s != ratio("-5/9") {
        return Err(format!("q + q' = {s}, expected -5/9"));
    }
    let v = decide(&k).map_err(|e| e.to_string())?;
    let cass = v.reasons.iter().any(|r| matches!(r, Reason::CassIntegrality { p: 5, .. }));
    if v.outcome != Outcome::NoCcs || !cass || !v.recheck() {
        return Err(format!("verdict {:?} with reasons {:?}", v.outcome, v.reasons));
    }
    Ok("q + q' = -5/9, NoCCS".into())
}

fn theorem_ranges() -> Check {
    let mut knots = canonical_knots(2, 6, None);
    knots.extend(canonical_knots(3, 5, None));
    let n = knots.len();
    let verdicts = decide_all(&knots);
    for (k, v) in knots.iter().zip(verdicts) {
        let v = v.map_err(|e| format!("{k}: {e}"))?;
        let want = if k.is_all_zero() { Outcome::KnownChiral } else { Outcome::NoCcs };
        if v.outcome != want || !v.recheck() {
            return Err(format!("{k}: {:?}, expected {want:?}", v.outcome));
        }
    }
    Ok(format!("{n} knots"))
}

fn threshold_property() -> Check {
    let mut total = 0;
    for g in 1..=8usize {
        let s1 = minimal_threshold_sum(g);
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce97 + g as u64);
        for _ in 0..200 {
            let k = random_twists(&mut rng, g, s1);
            let v3 = v3_closed(&k);
            if v3 != v3_skein(&k) {
                return Err(format!("{k}: v3 routes disagree"));
            }
            let lhs = BigInt::from(4) * v3.abs();
            let rhs = BigInt::from(7 * g as i64) * a2_closed(&k);
            if lhs < rhs {
                return Err(format!("{k}: 4|v3| = {lhs} < 7g a2 = {rhs}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} samples"))
}

fn signature_oracle() -> Check {
    let mut knots: Vec<PretzelKnot> = (1..=2).flat_map(|g| all_vectors(g, 2)).collect();
    knots.extend(canonical_up_to(3, 2));
    let n = knots.len();
    let bad = first_failure(knots, |k| {
        let prof = match signature_profile(k) {
            Ok(p) => p,
            Err(e) => return Some(format!("{k}: {e}")),
        };
        (1..=40).find_map(|p| {
            let exact = prof.p_signature(p).value;
            match hermitian_p_signature_oracle(k, p) {
                Ok(o) if o == exact => None,
                Ok(o) => Some(format!("{k}, p = {p}: arc count {exact}, oracle {o}")),
                Err(e) => Some(format!("{k}, p = {p}: {e}")),
            }
        })
    });
    match bad {
        None => Ok(format!("{n} knots x 40 values of p")),
        Some(e) => Err(e),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<u64>); 9] = [
        ("closed forms match the determinant", closed_forms_match_determinant, Some(60)),
        ("v3 agrees across closed form, skein and Jones", v3_routes_agree, Some(60)),
        ("point values of a2, a4, v3", point_values, None),
        ("genus-3 ratio table", ratio_table, None),
        ("sigma/p table", sigma_table, Some(10)),
        ("integrality endgame", integrality_endgame, None),
        ("theorem ranges", theorem_ranges, Some(300)),
        ("twist-sum threshold implies the weak inequality", threshold_property, None),
        ("signature matches the Hermitian oracle", signature_oracle, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = run();
        let took = start.elapsed();
        if let (Ok(_), Some(s)) = (&result, limit) {
            if took > Duration::from_secs(s) {
                result = Err(format!("took {took:.1?}, limit {s} s"));
            }
        }
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {took:.1?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {e} ({took:.1?})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
