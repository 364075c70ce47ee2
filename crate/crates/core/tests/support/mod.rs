//! Randomized Levenberg–Marquardt search for SU(2) solutions of the
//! defining relations, independent of the rotation-vector enumeration.

use std::collections::BTreeMap;

use brieskorn::repspace::{Quaternion, QuaternionRep, RotationVector};
use brieskorn::SeifertData;
use nalgebra::{SMatrix, SVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Res = SVector<f64, 12>;

pub struct Found {
    pub rep: QuaternionRep,
    pub residual: f64,
}

fn residual(data: &SeifertData, h: Quaternion, x: Quaternion, y: Quaternion) -> Res {
    let a = &data.multiplicities;
    let b = &data.pair_weights;
    let z = (x * y).inverse() * h.powi(-data.base_weight);
    let parts = [
        x.powi(a[0]) - h.powi(-b[0]),
        y.powi(a[1]) - h.powi(-b[1]),
        z.powi(a[2]) - h.powi(-b[2]),
    ];
    Res::from_iterator(parts.iter().flat_map(|q| q.to_array()))
}

fn step(x: Quaternion, y: Quaternion, d: &[f64]) -> (Quaternion, Quaternion) {
    let x = (x * Quaternion::exp_pure([d[0], d[1], d[2]])).normalize();
    let y = (y * Quaternion::exp_pure([d[3], d[4], d[5]])).normalize();
    (x, y)
}

fn random_unit(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let q = Quaternion::from_array(v);
        let n = q.norm();
        if n > 0.1 && n <= 1.0 {
            return q.normalize();
        }
    }
}

fn solve(data: &SeifertData, h: Quaternion, mut x: Quaternion, mut y: Quaternion) -> Option<(Quaternion, Quaternion)> {
    let mut r = residual(data, h, x, y);
    let mut mu = 1e-3;
    for _ in 0..200 {
        if r.amax() < 1e-13 {
            break;
        }
        let eps = 1e-7;
        let mut jac = SMatrix::<f64, 12, 6>::zeros();
        for k in 0..6 {
            let mut d = [0.0; 6];
            d[k] = eps;
            let (xk, yk) = step(x, y, &d);
            jac.set_column(k, &((residual(data, h, xk, yk) - r) / eps));
        }
        let jt = jac.transpose();
        let g = jt * r;
        let mut improved = false;
        for _ in 0..8 {
            let a = jt * jac + SMatrix::<f64, 6, 6>::identity() * mu;
            let Some(d) = a.cholesky().map(|c| c.solve(&(-g))) else {
                mu *= 10.0;
                continue;
            };
            let (xn, yn) = step(x, y, d.as_slice());
            let rn = residual(data, h, xn, yn);
            if rn.norm() < r.norm() {
                (x, y, r) = (xn, yn, rn);
                mu = (mu / 3.0).max(1e-12);
                improved = true;
                break;
            }
            mu *= 4.0;
        }
        if !improved {
            break;
        }
    }
    (r.amax() < 1e-10).then_some((x, y))
}

fn rotation_number(q: Quaternion, a: i64) -> i64 {
    let theta = q.w.clamp(-1.0, 1.0).acos();
    (theta * a as f64 / std::f64::consts::PI).round() as i64
}

/// Irreducible solutions found from `restarts` random starts, one per
/// rotation vector.
pub fn newton_search(data: &SeifertData, restarts: usize, seed: u64) -> BTreeMap<RotationVector, Found> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = &data.multiplicities;
    let mut out = BTreeMap::new();
    for i in 0..restarts {
        let sign: i8 = if i % 2 == 0 { 1 } else { -1 };
        let h = Quaternion::real(sign as f64);
        let (x0, y0) = (random_unit(&mut rng), random_unit(&mut rng));
        let Some((x, y)) = solve(data, h, x0, y0) else { continue };
        let z = (x * y).inverse() * h.powi(-data.base_weight);
        let rep = QuaternionRep { h, x, y, z };
        if !rep.is_irreducible() {
            continue;
        }
        let ell = [rotation_number(x, a[0]), rotation_number(y, a[1]), rotation_number(x * y, a[2])];
        let vector = RotationVector::new(sign, ell);
        let residual = rep.relation_residual(data);
        out.entry(vector).or_insert(Found { rep, residual });
    }
    out
}

/// Traces of all words of length ≤ 4 in `x^{±1}, y^{±1}`.
pub fn word_traces(rep: &QuaternionRep) -> Vec<f64> {
    let letters = [rep.x, rep.y, rep.x.inverse(), rep.y.inverse()];
    let mut words = vec![Quaternion::ONE];
    let mut traces = Vec::new();
    for _ in 0..4 {
        words = words.iter().flat_map(|w| letters.iter().map(move |l| *w * *l)).collect();
        traces.extend(words.iter().map(|w| w.trace()));
    }
    traces
}
