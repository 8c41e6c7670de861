//! Alternating odd pretzel knots `K(k_1, ..., k_{2g+1})` and their Seifert
//! matrices.
//!
//! `K(k)` has `2k_i + 1` negative half-twists on strand `i` and Seifert genus
//! `g`. `K(0,0,0)` is the left-handed trefoil. The all-negative family is
//! reached through [`KnotSpec::mirror`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawKnot", into = "RawKnot")]
pub struct PretzelKnot {
    twists: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawKnot {
    twists: Vec<i64>,
}

impl TryFrom<RawKnot> for PretzelKnot {
    type Error = Error;
    fn try_from(raw: RawKnot) -> Result<Self> {
        PretzelKnot::new(&raw.twists)
    }
}

impl From<PretzelKnot> for RawKnot {
    fn from(k: PretzelKnot) -> Self {
        RawKnot {
            twists: k.twists.iter().map(|&t| t as i64).collect(),
        }
    }
}

impl PretzelKnot {
    /// Validate a twist vector: odd length, every entry non-negative.
    pub fn new(twists: &[i64]) -> Result<Self> {
        if twists.len() % 2 == 0 {
            return Err(Error::BadLength(twists.len()));
        }
        let twists = twists
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                u64::try_from(value).map_err(|_| Error::NegativeTwist { index, value })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PretzelKnot { twists })
    }

    pub fn from_twists(twists: Vec<u64>) -> Result<Self> {
        if twists.len() % 2 == 0 {
            return Err(Error::BadLength(twists.len()));
        }
        Ok(PretzelKnot { twists })
    }

    /// The single-strand diagram `K(0)`, an unknot.
    pub fn unknot() -> Self {
        PretzelKnot { twists: vec![0] }
    }

    pub fn twists(&self) -> &[u64] {
        &self.twists
    }

    pub fn genus(&self) -> usize {
        (self.twists.len() - 1) / 2
    }

    pub fn strands(&self) -> usize {
        self.twists.len()
    }

    pub fn twist_sum(&self) -> u64 {
        self.twists.iter().sum()
    }

    pub fn is_all_zero(&self) -> bool {
        self.twists.iter().all(|&t| t == 0)
    }

    /// Twist vector sorted into non-increasing order. Every invariant computed
    /// in this crate is symmetric in the twists, so this representative is
    /// safe to use in their place.
    pub fn canonical_form(&self) -> Self {
        let mut twists = self.twists.clone();
        twists.sort_unstable_by(|a, b| b.cmp(a));
        PretzelKnot { twists }
    }

    pub fn is_canonical(&self) -> bool {
        self.twists.windows(2).all(|w| w[0] >= w[1])
    }

    /// `2 (k_1 + ... + k_{2g+1}) + 2g + 1`, zero for the unknot.
    pub fn crossing_number(&self) -> u64 {
        if self.genus() == 0 {
            return 0;
        }
        2 * self.twist_sum() + 2 * self.genus() as u64 + 1
    }

    /// Elementary symmetric polynomial `s_n` of all the twists.
    pub fn s(&self, n: usize) -> BigInt {
        elementary_symmetric(n, &self.twists)
    }

    pub fn seifert_matrix(&self) -> Result<SeifertMatrix> {
        SeifertMatrix::for_knot(self)
    }
}

impl fmt::Display for PretzelKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("K(")?;
        for (i, t) in self.twists.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PretzelKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A knot as the user named it: a member of the family, or the mirror of one.
///
/// `K(k_1, ...)` names the family member directly. `P(p_1, ...)` uses the
/// classical odd pretzel parameters: all negative `p_i = -(2k_i + 1)` is
/// `K(k)`, all positive `p_i = 2k_i + 1` is its mirror image.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct KnotSpec {
    pub knot: PretzelKnot,
    pub mirror: bool,
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirror {
            write!(f, "mirror {}", self.knot)
        } else {
            write!(f, "{}", self.knot)
        }
    }
}

fn parse_list(input: &str, body: &str) -> Result<Vec<i64>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|e| Error::Parse {
                input: input.to_string(),
                reason: format!("bad integer {:?}: {e}", t.trim()),
            })
        })
        .collect()
}

impl FromStr for KnotSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let perr = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let (head, rest) = s
            .split_once('(')
            .ok_or_else(|| perr("expected K(...) or P(...)"))?;
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| perr("missing closing parenthesis"))?;
        let values = parse_list(input, body)?;
        match head.trim() {
            "K" | "k" => {
                if values.is_empty() {
                    return Ok(KnotSpec { knot: PretzelKnot::unknot(), mirror: false });
                }
                Ok(KnotSpec { knot: PretzelKnot::new(&values)?, mirror: false })
            }
            "P" | "p" => {
                if values.is_empty() {
                    return Err(perr("P(...) needs at least one parameter"));
                }
                if values.iter().any(|v| v % 2 == 0) {
                    return Err(perr("pretzel parameters must all be odd"));
                }
                let positive = values[0] > 0;
                if values.iter().any(|&v| (v > 0) != positive) {
                    return Err(perr("pretzel parameters must all have the same sign"));
                }
                let twists: Vec<i64> = values.iter().map(|v| (v.abs() - 1) / 2).collect();
                Ok(KnotSpec { knot: PretzelKnot::new(&twists)?, mirror: positive })
            }
            other => Err(perr(&format!("unknown knot family {other:?}"))),
        }
    }
}

impl FromStr for PretzelKnot {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let spec: KnotSpec = input.parse()?;
        if spec.mirror {
            return Err(Error::Parse {
                input: input.to_string(),
                reason: "mirror image is not a member of the K(...) family".to_string(),
            });
        }
        Ok(spec.knot)
    }
}

/// Seifert form of `K(k)` on the standard genus-`g` surface: a `2g x 2g`
/// tridiagonal matrix with `A[i][i] = k_i + k_{i+1} + 1`,
/// `A[i][i+1] = k_{i+1}` and `A[i+1][i] = k_{i+1} + 1` (1-based strands).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn for_knot(k: &PretzelKnot) -> Result<Self> {
        let g = k.genus();
        if g == 0 {
            return Err(Error::UnknotHasNoSurfaceBasis);
        }
        let kk: Vec<i64> = k.twists().iter().map(|&t| t as i64).collect();
        let n = 2 * g;
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            entries[i][i] = kk[i] + kk[i + 1] + 1;
            if i + 1 < n {
                entries[i][i + 1] = kk[i + 1];
                entries[i + 1][i] = kk[i + 1] + 1;
            }
        }
        Ok(SeifertMatrix { entries })
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect()
    }
}

/// `s_n(k_1, ..., k_m)` by the recurrence `s_{n,j+1} = s_{n,j} + k_{j+1} s_{n-1,j}`,
/// with `s_0 = 1` and `s_n = 0` for `n > m`.
pub fn elementary_symmetric(n: usize, ks: &[u64]) -> BigInt {
    // row[i] holds s_{i, j} after processing j entries
    let mut row = vec![BigInt::zero(); n + 1];
    row[0] = BigInt::one();
    for (j, &k) in ks.iter().enumerate() {
        let k = BigInt::from(k);
        for i in (1..=n.min(j + 1)).rev() {
            let add = &k * &row[i - 1];
            row[i] += add;
        }
    }
    row[n].clone()
}

/// `s_{n,m}`: elementary symmetric polynomial of the first `m` twists.
pub fn s_prefix(n: usize, ks: &[u64], m: usize) -> BigInt {
    elementary_symmetric(n, &ks[..m.min(ks.len())])
}
