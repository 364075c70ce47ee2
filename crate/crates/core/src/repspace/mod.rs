//! Irreducible SU(2) representations of `π₁(Σ(p,q,r))`.
//!
//! The group is presented as
//!
//! ```text
//! ⟨ x, y, z, h | h central, x^p = h^{-b₁}, y^q = h^{-b₂}, z^r = h^{-b₃}, xyz = h^{-b} ⟩
//! ```
//!
//! and an irreducible representation sends `h` to `±1`. Up to conjugacy it is
//! pinned down by the rotation numbers `πℓ₁/p`, `πℓ₂/q`, `πℓ₃/r` of the images
//! of `x`, `y` and `xy`. A triple is realized iff the parities match the sign
//! of `h` and the three angles satisfy the strict spherical triangle
//! inequalities; all comparisons below are done on integers scaled by `pqr`.

mod quaternion;

pub use quaternion::Quaternion;

use std::f64::consts::PI;

use nalgebra::{Matrix4, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seifert::SeifertData;

/// Residual bound for the defining relations.
pub const RELATION_TOL: f64 = 1e-9;
/// Bound for conjugacy identities.
pub const CONJUGACY_TOL: f64 = 1e-8;
/// Minimal commutator size accepted as irreducible.
pub const IRREDUCIBLE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RotationVector {
    /// `α(h) = ±1`
    pub h_sign: i8,
    pub ell: [i64; 3],
}

impl RotationVector {
    pub fn new(h_sign: i8, ell: [i64; 3]) -> Self {
        Self { h_sign, ell }
    }

    /// `θᵢ = πℓᵢ/aᵢ`
    pub fn angles(&self, data: &SeifertData) -> [f64; 3] {
        let a = &data.multiplicities;
        [0, 1, 2].map(|i| PI * self.ell[i] as f64 / a[i] as f64)
    }
}

/// `h^e` for `h = ±1`.
fn sign_pow(h: i8, e: i64) -> i8 {
    if h == 1 || e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(ε₁, ε₂, ε₃)` for the given sign of `α(h)`.
fn parities(data: &SeifertData, h: i8) -> [i8; 3] {
    let b = &data.pair_weights;
    let r = data.multiplicities[2];
    [
        sign_pow(h, b[0]),
        sign_pow(h, b[1]),
        sign_pow(h, b[2] - r * data.base_weight),
    ]
}

/// Strict triangle condition `|θ₁−θ₂| < θ₃ < min(θ₁+θ₂, 2π−θ₁−θ₂)`, evaluated
/// exactly on the angles scaled by `pqr/π`.
fn triangle_ok(a: [i64; 3], ell: [i64; 3]) -> bool {
    let total = a[0] as i128 * a[1] as i128 * a[2] as i128;
    let s = [0, 1, 2].map(|i| ell[i] as i128 * (total / a[i] as i128));
    (s[0] - s[1]).abs() < s[2] && s[2] < s[0] + s[1] && s[2] < 2 * total - s[0] - s[1]
}

fn check_vector(data: &SeifertData, v: &RotationVector) -> Result<()> {
    let (p, q, r) = data.triple()?;
    let a = [p, q, r];
    if v.h_sign != 1 && v.h_sign != -1 {
        return Err(Error::InvalidRotationVector(format!("h_sign {} is not ±1", v.h_sign)));
    }
    for i in 0..3 {
        if v.ell[i] <= 0 || v.ell[i] >= a[i] {
            return Err(Error::InvalidRotationVector(format!(
                "range 0 < ℓ{} < {}",
                i + 1,
                a[i]
            )));
        }
    }
    let eps = parities(data, v.h_sign);
    for i in 0..3 {
        let even = v.ell[i] % 2 == 0;
        if even != (eps[i] == 1) {
            return Err(Error::InvalidRotationVector(format!("parity of ℓ{}", i + 1)));
        }
    }
    if !triangle_ok(a, v.ell) {
        return Err(Error::InvalidRotationVector("strict triangle condition".into()));
    }
    Ok(())
}

/// One rotation vector per conjugacy class of irreducible representations,
/// sorted by `(h_sign, ℓ₁, ℓ₂, ℓ₃)`.
pub fn enumerate_rotation_vectors(data: &SeifertData) -> Result<Vec<RotationVector>> {
    let (p, q, r) = data.triple()?;
    let a = [p, q, r];
    let mut out = Vec::new();
    for h in [-1i8, 1] {
        let eps = parities(data, h);
        // smallest admissible ℓ with the parity forced by ε
        let start = eps.map(|e| if e == 1 { 2 } else { 1 });
        for l1 in (start[0]..a[0]).step_by(2) {
            for l2 in (start[1]..a[1]).step_by(2) {
                for l3 in (start[2]..a[2]).step_by(2) {
                    if triangle_ok(a, [l1, l2, l3]) {
                        out.push(RotationVector::new(h, [l1, l2, l3]));
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Casson invariant as half the number of irreducible classes; every class is
/// counted with sign `+1`.
pub fn casson_lambda(data: &SeifertData) -> Result<i64> {
    let n = enumerate_rotation_vectors(data)?.len() as i64;
    if n % 2 != 0 {
        return Err(Error::Inconsistent(format!("odd representation count {n} for {data}")));
    }
    Ok(n / 2)
}

/// Number of trace-free representations of the Montesinos knot group, two for
/// every irreducible class of the double branched cover.
pub fn trace_free_count(data: &SeifertData) -> Result<i64> {
    Ok(2 * enumerate_rotation_vectors(data)?.len() as i64)
}

/// Images of the generators under a representation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuaternionRep {
    pub h: Quaternion,
    pub x: Quaternion,
    pub y: Quaternion,
    pub z: Quaternion,
}

impl QuaternionRep {
    /// Largest violation among the four defining relations.
    pub fn relation_residual(&self, data: &SeifertData) -> f64 {
        let a = &data.multiplicities;
        let b = &data.pair_weights;
        [
            self.x.powi(a[0]).dist(self.h.powi(-b[0])),
            self.y.powi(a[1]).dist(self.h.powi(-b[1])),
            self.z.powi(a[2]).dist(self.h.powi(-b[2])),
            (self.x * self.y * self.z).dist(self.h.powi(-data.base_weight)),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    /// `|xyx⁻¹y⁻¹ − 1|`
    pub fn commutator_size(&self) -> f64 {
        (self.x * self.y * self.x.inverse() * self.y.inverse()).dist(Quaternion::ONE)
    }

    pub fn is_irreducible(&self) -> bool {
        self.commutator_size() > IRREDUCIBLE_TOL
    }

    pub fn conjugate_by(&self, g: Quaternion) -> Self {
        Self {
            h: self.h.conjugate_by(g),
            x: self.x.conjugate_by(g),
            y: self.y.conjugate_by(g),
            z: self.z.conjugate_by(g),
        }
    }

    /// Representation `α ∘ σ_*` for the complex-conjugation involution.
    pub fn involuted(&self) -> Self {
        let (x, y, z) = (self.x, self.y, self.z);
        Self {
            h: self.h.inverse(),
            x: x.inverse(),
            y: x * y.inverse() * x.inverse(),
            z: x * y * z.inverse() * y.inverse() * x.inverse(),
        }
    }

    fn generators(&self) -> [Quaternion; 4] {
        [self.h, self.x, self.y, self.z]
    }
}

/// Closed-form realization: `α(x) = e^{iθ₁}`, `α(y) = cos θ₂ + sin θ₂·u` with
/// the axis `u` chosen so that `xy` has rotation `θ₃`.
pub fn realize_representation(data: &SeifertData, v: &RotationVector) -> Result<QuaternionRep> {
    check_vector(data, v)?;
    let [t1, t2, t3] = v.angles(data);
    // cosine of the angle between the axes of x and y
    let c = (t1.cos() * t2.cos() - t3.cos()) / (t1.sin() * t2.sin());
    if !(c.abs() < 1.0) {
        return Err(Error::Numerical(format!("axis cosine {c} outside (-1, 1)")));
    }
    let h = Quaternion::real(v.h_sign as f64);
    let x = Quaternion::from_angle_axis(t1, [1.0, 0.0, 0.0]);
    let y = Quaternion::from_angle_axis(t2, [c, (1.0 - c * c).sqrt(), 0.0]);
    let z = (x * y).inverse() * h.powi(-data.base_weight);
    let rep = QuaternionRep { h, x, y, z };
    let residual = rep.relation_residual(data);
    if residual >= RELATION_TOL {
        return Err(Error::Numerical(format!("relation residual {residual:e}")));
    }
    Ok(rep)
}

/// Result of searching for the conjugating element of the involution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhoWitness {
    pub rho: Quaternion,
    /// `|ρ² + 1|`
    pub square_residual: f64,
    /// `max_t |α(σ_* t) − ρ α(t) ρ⁻¹|`
    pub conjugation_residual: f64,
}

fn left_mult(q: Quaternion) -> Matrix4<f64> {
    Matrix4::new(
        q.w, -q.x, -q.y, -q.z, //
        q.x, q.w, -q.z, q.y, //
        q.y, q.z, q.w, -q.x, //
        q.z, -q.y, q.x, q.w,
    )
}

fn right_mult(q: Quaternion) -> Matrix4<f64> {
    Matrix4::new(
        q.w, -q.x, -q.y, -q.z, //
        q.x, q.w, q.z, -q.y, //
        q.y, -q.z, q.w, q.x, //
        q.z, q.y, -q.x, q.w,
    )
}

/// Finds `ρ` with `α ∘ σ_* = ρ α ρ⁻¹` as the least-squares null vector of
/// `ρ ↦ α(σ_* t)·ρ − ρ·α(t)`, then checks `ρ² = −1`. The sign of `ρ` is
/// normalized so that its first non-negligible coordinate is positive.
pub fn verify_rho_invariance(rep: &QuaternionRep) -> Result<RhoWitness> {
    if !rep.is_irreducible() {
        return Err(Error::Reducible);
    }
    let image = rep.involuted();
    let mut gram = Matrix4::<f64>::zeros();
    for (a, b) in rep.generators().into_iter().zip(image.generators()) {
        let m = left_mult(b) - right_mult(a);
        gram += m.transpose() * m;
    }
    let eig = SymmetricEigen::new(gram);
    let (idx, _) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("four eigenvalues");
    let col = eig.eigenvectors.column(idx);
    let mut rho = Quaternion::new(col[0], col[1], col[2], col[3]).normalize();
    if let Some(first) = rho.to_array().into_iter().find(|c| c.abs() > 1e-12) {
        if first < 0.0 {
            rho = -rho;
        }
    }

    let square_residual = (rho * rho).dist(-Quaternion::ONE);
    let conjugation_residual = rep
        .generators()
        .into_iter()
        .zip(image.generators())
        .map(|(a, b)| b.dist(a.conjugate_by(rho)))
        .fold(0.0, f64::max);
    let witness = RhoWitness { rho, square_residual, conjugation_residual };
    if conjugation_residual >= CONJUGACY_TOL
        || square_residual >= RELATION_TOL
        || rho.trace().abs() >= RELATION_TOL
    {
        return Err(Error::RhoNotFound(conjugation_residual.max(square_residual)));
    }
    Ok(witness)
}
