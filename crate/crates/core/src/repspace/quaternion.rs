use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Quaternion `w + x·i + y·j + z·k`. Unit quaternions model SU(2) with the
/// complex numbers sitting inside as `w + x·i`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// `cos θ + sin θ · u` for a unit pure quaternion `u = (ux, uy, uz)`.
    pub fn from_angle_axis(theta: f64, axis: [f64; 3]) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s * axis[0], s * axis[1], s * axis[2])
    }

    /// `exp(v)` for a pure quaternion `v`.
    pub fn exp_pure(v: [f64; 3]) -> Self {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n < 1e-300 {
            return Self::ONE;
        }
        Self::from_angle_axis(n, [v[0] / n, v[1] / n, v[2] / n])
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalize(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn inverse(self) -> Self {
        self.conj().scale(1.0 / self.norm_sqr())
    }

    /// Trace of the corresponding SU(2) matrix.
    pub fn trace(self) -> f64 {
        2.0 * self.w
    }

    /// Rotation number `r(a) ∈ [0, π]` with `a = cos r + sin r · u`.
    pub fn rotation(self) -> f64 {
        self.w.clamp(-1.0, 1.0).acos()
    }

    pub fn pure_part(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn powi(self, n: i64) -> Self {
        let mut base = if n < 0 { self.inverse() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    /// `g · self · g⁻¹`
    pub fn conjugate_by(self, g: Self) -> Self {
        g * self * g.inverse()
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * i, -Quaternion::ONE);
        assert_eq!(i * j * k, -Quaternion::ONE);
    }

    #[test]
    fn powers_match_angle_multiplication() {
        let q = Quaternion::from_angle_axis(0.3, [0.0, 0.6, 0.8]);
        let q7 = q.powi(7);
        let expect = Quaternion::from_angle_axis(2.1, [0.0, 0.6, 0.8]);
        assert!(q7.dist(expect) < 1e-14);
        assert!((q.powi(-3) * q.powi(3)).dist(Quaternion::ONE) < 1e-14);
    }
}
