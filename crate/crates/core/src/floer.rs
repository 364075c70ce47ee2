//! Floer ranks, ν and μ̄, and the audits that tie them to the knot side.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::diagram::{build_diagram, PdCode};
use crate::error::{Error, Result};
use crate::invariants::{determinant, gl_signature, jones, log_derivative_at_minus_one};
use crate::poly::LaurentPolynomial;
use crate::repspace::casson_lambda;
use crate::seifert::{splice_decompose, SeifertData};

/// Ranks of `I₀, I₂, I₄, I₆`; odd groups vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FloerRanks {
    pub r0: i64,
    pub r2: i64,
    pub r4: i64,
    pub r6: i64,
}

impl FloerRanks {
    pub fn total(&self) -> i64 {
        self.r0 + self.r2 + self.r4 + self.r6
    }

    /// Ranks of the mirror: `I₀` and `I₂` trade places.
    pub fn mirrored(&self) -> Self {
        Self { r0: self.r2, r2: self.r0, r4: self.r6, r6: self.r4 }
    }
}

/// `r₀ = r₄ = (8λ − σ)/16`, `r₂ = r₆ = (8λ + σ)/16`.
pub fn floer_ranks(lambda: i64, sign_k: i64) -> Result<FloerRanks> {
    let violation = |reason: &str| Error::TheoremViolation { lambda, sign: sign_k, reason: reason.into() };
    let (lo, hi) = (8 * lambda - sign_k, 8 * lambda + sign_k);
    if lo % 16 != 0 || hi % 16 != 0 {
        return Err(violation("8λ ± sign k is not divisible by 16"));
    }
    if lo < 0 || hi < 0 {
        return Err(violation("negative rank"));
    }
    Ok(FloerRanks { r0: lo / 16, r2: hi / 16, r4: lo / 16, r6: hi / 16 })
}

/// `ν = ½ Σ (−1)^{n+1} r_{2n}`
pub fn nu_invariant(ranks: &FloerRanks) -> i64 {
    (-ranks.r0 + ranks.r2 - ranks.r4 + ranks.r6) / 2
}

/// Knot-side data of `k(p,q,r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotData {
    pub pd: PdCode,
    pub jones: LaurentPolynomial,
    pub signature: i64,
    pub determinant: u64,
    pub log_derivative: BigRational,
}

pub fn knot_data(data: &SeifertData) -> Result<KnotData> {
    data.triple()?;
    knot_data_of(build_diagram(data)?)
}

pub fn knot_data_of(pd: PdCode) -> Result<KnotData> {
    let jones = jones(&pd)?;
    let log_derivative = log_derivative_at_minus_one(&jones)?;
    Ok(KnotData { signature: gl_signature(&pd)?, determinant: determinant(&pd)?, jones, log_derivative, pd })
}

/// Signature of the built diagram of `k(p,q,r)`.
pub fn knot_signature(data: &SeifertData) -> Result<i64> {
    data.triple()?;
    gl_signature(&build_diagram(data)?)
}

/// `μ̄`: `sign k/8` for three fibers, splice additivity with `j = 2` above.
pub fn mu_bar(data: &SeifertData) -> Result<i64> {
    if data.fibers() == 3 {
        return Ok(knot_signature(data)? / 8);
    }
    mu_bar_with_splice(data, 2)
}

/// Splits at `j` once, then recurses canonically.
pub fn mu_bar_with_splice(data: &SeifertData, j: usize) -> Result<i64> {
    let split = splice_decompose(data, j)?;
    Ok(mu_bar(&split.left)? + mu_bar(&split.right)?)
}

/// Outcome of comparing rank `I₀` with `−(1/12)·(ln V)′(−1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesAudit {
    /// `−(1/12)·V′(−1)/V(−1)` for the built diagram; the mirror gives `−x`.
    pub x: BigRational,
    pub x_integral: bool,
    pub strict: bool,
    pub mirror_strict: bool,
    /// `x ∈ {r₀, r₂}` and the mirror value `−x` equals the mirror's
    /// complementary rank.
    pub mirror_robust: bool,
    /// `λ = −x − sign k/8`, Mullins' formula in the conventions used here.
    pub mullins: bool,
    pub satisfied_by: Option<String>,
    pub note: Option<String>,
}

pub fn jones_floer_audit(bundle: &InvariantBundle) -> JonesAudit {
    let x = -bundle.jones_log_derivative.clone() / BigRational::from_integer(BigInt::from(12));
    let x_integral = x.is_integer();
    let as_int = x.to_integer().to_i64().filter(|_| x_integral);
    let ranks = bundle.ranks;
    let strict = as_int == Some(ranks.r0);
    // the mirror negates x and swaps r₀ with r₂
    let mirror_strict = as_int.map(|v| -v) == Some(ranks.r2);
    // the mirror has ranks (r₂, r₀) and must hit the same rank from its side
    let mirror_robust = as_int.is_some_and(|v| (v == ranks.r0 && -v == ranks.r0) || (v == ranks.r2 && -v == ranks.r2));
    let mullins = as_int.is_some_and(|v| bundle.lambda == -v - bundle.sign_k / 8);
    let satisfied_by = match (strict, mirror_strict) {
        (true, true) => Some("both".to_string()),
        (true, false) => Some("diagram".to_string()),
        (false, true) => Some("mirror".to_string()),
        (false, false) => None,
    };
    let note = match (strict, as_int) {
        (true, _) => None,
        (false, None) => Some(format!("x = {x} is not an integer")),
        (false, Some(v)) => Some(format!(
            "rank I0 = {} but x = {v}; the mirror would need x = {} against rank {}",
            ranks.r0, -v, ranks.r2
        )),
    };
    JonesAudit { x, x_integral, strict, mirror_strict, mirror_robust, mullins, satisfied_by, note }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFlags {
    pub theorem1_ok: bool,
    pub theorem3_ok: bool,
    /// The global chirality pin holds: `k(2,3,5)` is built with signature −8.
    pub mirror_calibrated: bool,
    pub cobordism_note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub seifert: SeifertData,
    pub lambda: i64,
    pub sign_k: i64,
    pub ranks: FloerRanks,
    pub nu: i64,
    pub mu_bar: i64,
    pub lambda_rho: i64,
    pub chi_rho: i64,
    pub determinant: u64,
    pub jones: LaurentPolynomial,
    pub jones_log_derivative: BigRational,
    pub crossings: usize,
    pub audit_flags: AuditFlags,
}

impl InvariantBundle {
    pub fn compute(data: &SeifertData) -> Result<Self> {
        let lambda = casson_lambda(data)?;
        let knot = knot_data(data)?;
        Self::assemble(data, lambda, knot)
    }

    /// Same Seifert data with the mirror diagram on the knot side.
    pub fn compute_mirror(data: &SeifertData) -> Result<Self> {
        let lambda = casson_lambda(data)?;
        let knot = knot_data_of(build_diagram(data)?.mirror()?)?;
        Self::assemble(data, lambda, knot)
    }

    fn assemble(data: &SeifertData, lambda: i64, knot: KnotData) -> Result<Self> {
        if knot.determinant != 1 {
            return Err(Error::Inconsistent(format!("{data}: knot determinant {} is not 1", knot.determinant)));
        }
        let sign_k = knot.signature;
        let ranks = floer_ranks(lambda, sign_k)?;
        let nu = nu_invariant(&ranks);
        let mut bundle = Self {
            seifert: data.clone(),
            lambda,
            sign_k,
            ranks,
            nu,
            mu_bar: sign_k / 8,
            lambda_rho: sign_k / 8,
            chi_rho: 2 * nu,
            determinant: knot.determinant,
            jones: knot.jones,
            jones_log_derivative: knot.log_derivative,
            crossings: knot.pd.len(),
            audit_flags: AuditFlags::default(),
        };
        bundle.audit_flags = AuditFlags {
            theorem1_ok: ranks.total() == 2 * lambda && nu == bundle.mu_bar && bundle.lambda_rho == nu,
            theorem3_ok: jones_floer_audit(&bundle).strict,
            mirror_calibrated: chirality_pin_holds(),
            cobordism_note: None,
        };
        Ok(bundle)
    }
}

/// `k(2,3,5)` must come out as the positive `T(3,5)` so that `ν(Σ(2,3,5)) = −1`.
pub fn chirality_pin_holds() -> bool {
    static PIN: OnceLock<bool> = OnceLock::new();
    *PIN.get_or_init(|| {
        SeifertData::solve(&[2, 3, 5]).ok().and_then(|d| knot_signature(&d).ok()) == Some(-8)
    })
}

/// `Σ(p,q,pqm±1)` as `(p, q, m, ±1)`.
pub fn surgery_family(data: &SeifertData) -> Option<(i64, i64, i64, i64)> {
    let (a, b, c) = data.triple().ok()?;
    let mut best = None;
    for (p, q, r) in [(a, b, c), (a, c, b), (b, c, a)] {
        let (p, q) = (p.min(q), p.max(q));
        let pq = p * q;
        for eps in [1, -1] {
            let rest = r - eps;
            if rest > 0 && rest % pq == 0 {
                best = best.or(Some((p, q, rest / pq, eps)));
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismReport {
    pub seifert: SeifertData,
    pub nu: i64,
    pub claimed_cobordant_to_zero: bool,
    /// `ν ≥ 0`, checked only under a claim.
    pub nonnegative_nu: Option<bool>,
    pub family: Option<(i64, i64, i64, i64)>,
    /// `ν = 0`, checked only under a claim for family members.
    pub family_nu_zero: Option<bool>,
    pub claim_refuted: bool,
    pub summary: String,
}

pub fn cobordism_report(data: &SeifertData, claimed_cobordant_to_zero: bool) -> Result<CobordismReport> {
    let nu = mu_bar(data)?;
    let family = surgery_family(data);
    let nonnegative_nu = claimed_cobordant_to_zero.then_some(nu >= 0);
    let family_nu_zero = (claimed_cobordant_to_zero && family.is_some()).then_some(nu == 0);
    let claim_refuted = nonnegative_nu == Some(false) || family_nu_zero == Some(false);
    let summary = if !claimed_cobordant_to_zero {
        format!("{data}: nu = {nu}")
    } else if nonnegative_nu == Some(false) {
        format!("{data}: nu = {nu} < 0, so it is not homology cobordant to zero")
    } else if family_nu_zero == Some(false) {
        let (p, q, m, e) = family.unwrap();
        let sign = if e > 0 { '+' } else { '-' };
        format!("{data} = sigma({p},{q},{p}*{q}*{m}{sign}1) has nu = {nu} != 0, so it is not homology cobordant to zero")
    } else {
        format!("{data}: nu = {nu}, no obstruction found")
    };
    Ok(CobordismReport {
        seifert: data.clone(),
        nu,
        claimed_cobordant_to_zero,
        nonnegative_nu,
        family,
        family_nu_zero,
        claim_refuted,
        summary,
    })
}
