//! Seifert invariants of Seifert fibered homology spheres.
//!
//! A homology sphere `Σ(a₁,…,aₙ)` with pairwise coprime multiplicities is
//! described by the unnormalized Seifert invariants `{b, (a₁,b₁), …, (aₙ,bₙ)}`
//! subject to
//!
//! ```text
//! b₁·A/a₁ + … + bₙ·A/aₙ + b·A = 1,    A = a₁⋯aₙ.
//! ```
//!
//! For three fibers this is the classical condition
//! `b₁qr + b₂pr + b₃pq + bpqr = 1`; for more fibers it is the same equation
//! written over the full product. We store the unique solution with
//! `0 < bᵢ < aᵢ`, which forces `b`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertData {
    #[serde(rename = "a")]
    pub multiplicities: Vec<i64>,
    #[serde(rename = "b")]
    pub pair_weights: Vec<i64>,
    #[serde(rename = "base")]
    pub base_weight: i64,
}

impl SeifertData {
    pub fn solve(multiplicities: &[i64]) -> Result<Self> {
        solve_seifert_invariants(multiplicities)
    }

    pub fn fibers(&self) -> usize {
        self.multiplicities.len()
    }

    /// Product of all multiplicities.
    pub fn order(&self) -> BigInt {
        self.multiplicities.iter().map(|&a| BigInt::from(a)).product()
    }

    pub fn is_valid(&self) -> bool {
        verify_seifert(self)
    }

    /// `(p, q, r)` for three-fiber data.
    pub fn triple(&self) -> Result<(i64, i64, i64)> {
        match self.multiplicities[..] {
            [p, q, r] => Ok((p, q, r)),
            _ => Err(Error::NotThreeFibers(self.fibers())),
        }
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma(")?;
        for (i, a) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

fn check_multiplicities(multiplicities: &[i64]) -> Result<()> {
    if multiplicities.len() < 3 {
        return Err(Error::TooFewFibers { min: 3, got: multiplicities.len() });
    }
    if let Some(&a) = multiplicities.iter().find(|&&a| a < 2) {
        return Err(Error::MultiplicityTooSmall(a));
    }
    for (i, &a) in multiplicities.iter().enumerate() {
        for &b in &multiplicities[i + 1..] {
            if a.gcd(&b) != 1 {
                return Err(Error::NotCoprime(a, b));
            }
        }
    }
    Ok(())
}

/// Unique normalized Seifert invariants for pairwise coprime multiplicities.
pub fn solve_seifert_invariants(multiplicities: &[i64]) -> Result<SeifertData> {
    check_multiplicities(multiplicities)?;
    let total: BigInt = multiplicities.iter().map(|&a| BigInt::from(a)).product();

    let mut weights = Vec::with_capacity(multiplicities.len());
    let mut sum = BigInt::zero();
    for &a in multiplicities {
        let a_big = BigInt::from(a);
        let cofactor = &total / &a_big;
        // bᵢ is the inverse of A/aᵢ modulo aᵢ
        let ext = cofactor.mod_floor(&a_big).extended_gcd(&a_big);
        debug_assert!(ext.gcd.is_one());
        let b = ext.x.mod_floor(&a_big);
        sum += &b * &cofactor;
        weights.push(b.to_i64().expect("weight is below its multiplicity"));
    }

    let (base, rem) = (BigInt::one() - sum).div_rem(&total);
    if !rem.is_zero() {
        return Err(Error::Inconsistent("Seifert condition has no integral base weight".into()));
    }
    let base_weight = base
        .to_i64()
        .ok_or_else(|| Error::Inconsistent("base weight overflows i64".into()))?;

    Ok(SeifertData {
        multiplicities: multiplicities.to_vec(),
        pair_weights: weights,
        base_weight,
    })
}

/// Checks coprimality, normalization and the homology-sphere condition.
pub fn verify_seifert(data: &SeifertData) -> bool {
    if data.multiplicities.len() != data.pair_weights.len() {
        return false;
    }
    if check_multiplicities(&data.multiplicities).is_err() {
        return false;
    }
    if data
        .multiplicities
        .iter()
        .zip(&data.pair_weights)
        .any(|(&a, &b)| b <= 0 || b >= a)
    {
        return false;
    }
    let total = data.order();
    let lhs: BigInt = data
        .multiplicities
        .iter()
        .zip(&data.pair_weights)
        .map(|(&a, &b)| BigInt::from(b) * (&total / BigInt::from(a)))
        .sum::<BigInt>()
        + BigInt::from(data.base_weight) * &total;
    lhs.is_one()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceDecomposition {
    pub left: SeifertData,
    pub right: SeifertData,
    pub j: usize,
}

/// Splits `Σ(a₁,…,aₙ)` into `Σ(a₁,…,a_j, p)` and `Σ(q, a_{j+1},…,aₙ)` with
/// `p = a_{j+1}⋯aₙ` and `q = a₁⋯a_j`.
pub fn splice_decompose(data: &SeifertData, j: usize) -> Result<SpliceDecomposition> {
    let n = data.fibers();
    if n < 4 {
        return Err(Error::TooFewFibers { min: 4, got: n });
    }
    if j < 2 || j > n - 2 {
        return Err(Error::SpliceIndex { j, max: n - 2 });
    }
    let (head, tail) = data.multiplicities.split_at(j);
    let product = |xs: &[i64]| -> Result<i64> {
        xs.iter().try_fold(1i64, |acc, &x| {
            acc.checked_mul(x)
                .ok_or_else(|| Error::Inconsistent("splice product overflows i64".into()))
        })
    };
    let p = product(tail)?;
    let q = product(head)?;

    let mut left = head.to_vec();
    left.push(p);
    let mut right = vec![q];
    right.extend_from_slice(tail);

    Ok(SpliceDecomposition {
        left: solve_seifert_invariants(&left)?,
        right: solve_seifert_invariants(&right)?,
        j,
    })
}

/// Parses the text form `sigma(a1,a2,...)` and solves for the invariants.
impl FromStr for SeifertData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let multiplicities = parse_sigma(s)?;
        solve_seifert_invariants(&multiplicities)
    }
}

pub fn parse_sigma(text: &str) -> Result<Vec<i64>> {
    let lead = text.len() - text.trim_start().len();
    let s = text.trim();
    let err = |pos: usize, msg: &str| Error::Parse { pos: lead + pos, msg: msg.to_string() };

    let lower = s.to_ascii_lowercase();
    let body_start = if lower.starts_with("sigma(") {
        6
    } else if lower.starts_with("σ(") {
        "σ(".len()
    } else {
        return Err(err(0, "expected `sigma(`"));
    };
    if !s.ends_with(')') {
        return Err(err(s.len(), "expected closing `)`"));
    }
    let body = &s[body_start..s.len() - 1];
    let mut out = Vec::new();
    let mut offset = body_start;
    for field in body.split(',') {
        let trimmed = field.trim();
        let pad = field.len() - field.trim_start().len();
        let value: i64 = trimmed
            .parse()
            .map_err(|_| err(offset + pad, &format!("`{trimmed}` is not an integer")))?;
        if value.is_negative() {
            return Err(err(offset + pad, "multiplicities must be positive"));
        }
        out.push(value);
        offset += field.len() + 1;
    }
    Ok(out)
}
