//! Four-ended tangle diagrams and rational tangles.
//!
//! A tangle lives in a disk with ends NW, NE, SW, SE. Crossings carry four
//! slots in counterclockwise order SW, SE, NE, NW, with the two strands
//! SW–NE and SE–NW. A horizontal twist puts a crossing to the right of the
//! tangle and changes its fraction by ±1; a vertical twist puts one below and
//! changes the reciprocal of the fraction by ±1. Both twists use the same
//! crossing picture for the same sign, so a positive continued fraction gives
//! an alternating tangle.

use std::collections::HashMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::pd::PdCode;
use crate::error::{Error, Result};

const SW: usize = 0;
const SE: usize = 1;
const NE: usize = 2;
const NW: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Point {
    Cross(usize, usize),
    Arc(usize, usize),
}

/// Ends of a tangle inside a [`TangleBuilder`].
#[derive(Clone, Copy, Debug)]
pub struct Tangle {
    nw: Point,
    ne: Point,
    sw: Point,
    se: Point,
}

/// Arena of crossings and plain arcs joined into tangles.
#[derive(Debug, Default)]
pub struct TangleBuilder {
    /// `true` when the SW–NE strand is on top.
    slash_over: Vec<bool>,
    arcs: usize,
    links: HashMap<Point, Point>,
}

impl TangleBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn join(&mut self, a: Point, b: Point) {
        debug_assert!(!self.links.contains_key(&a) && !self.links.contains_key(&b));
        self.links.insert(a, b);
        self.links.insert(b, a);
    }

    fn arc(&mut self) -> (Point, Point) {
        let id = self.arcs;
        self.arcs += 1;
        (Point::Arc(id, 0), Point::Arc(id, 1))
    }

    fn crossing(&mut self, sign: i64) -> usize {
        debug_assert!(sign == 1 || sign == -1);
        self.slash_over.push(sign > 0);
        self.slash_over.len() - 1
    }

    /// Fraction 0: arcs NW–NE and SW–SE.
    pub fn zero(&mut self) -> Tangle {
        let (nw, ne) = self.arc();
        let (sw, se) = self.arc();
        Tangle { nw, ne, sw, se }
    }

    /// Fraction ∞: arcs NW–SW and NE–SE.
    pub fn infinity(&mut self) -> Tangle {
        let (nw, sw) = self.arc();
        let (ne, se) = self.arc();
        Tangle { nw, ne, sw, se }
    }

    pub fn twist_horizontal(&mut self, t: Tangle, sign: i64) -> Tangle {
        let c = self.crossing(sign);
        self.join(t.ne, Point::Cross(c, NW));
        self.join(t.se, Point::Cross(c, SW));
        Tangle { ne: Point::Cross(c, NE), se: Point::Cross(c, SE), ..t }
    }

    pub fn twist_vertical(&mut self, t: Tangle, sign: i64) -> Tangle {
        let c = self.crossing(sign);
        self.join(t.sw, Point::Cross(c, NW));
        self.join(t.se, Point::Cross(c, NE));
        Tangle { sw: Point::Cross(c, SW), se: Point::Cross(c, SE), ..t }
    }

    /// Integer tangle with `|n|` horizontal half-twists of sign `n`.
    pub fn integer(&mut self, n: i64) -> Tangle {
        let mut t = self.zero();
        for _ in 0..n.unsigned_abs() {
            t = self.twist_horizontal(t, n.signum());
        }
        t
    }

    /// Side-by-side sum; fractions add.
    pub fn sum(&mut self, left: Tangle, right: Tangle) -> Tangle {
        self.join(left.ne, right.nw);
        self.join(left.se, right.sw);
        Tangle { nw: left.nw, sw: left.sw, ne: right.ne, se: right.se }
    }

    /// Tangle whose fraction has the continued fraction `coeffs`.
    fn with_fraction(&mut self, coeffs: &[i64]) -> Tangle {
        match coeffs.split_first() {
            None => self.infinity(),
            Some((&c, rest)) => {
                let mut t = self.with_reciprocal(rest);
                for _ in 0..c {
                    t = self.twist_horizontal(t, 1);
                }
                t
            }
        }
    }

    /// Tangle whose reciprocal fraction has the continued fraction `coeffs`.
    fn with_reciprocal(&mut self, coeffs: &[i64]) -> Tangle {
        match coeffs.split_first() {
            None => self.zero(),
            Some((&c, rest)) => {
                let mut t = self.with_fraction(rest);
                for _ in 0..c {
                    t = self.twist_vertical(t, 1);
                }
                t
            }
        }
    }

    /// Rational tangle with fraction `β/α`.
    pub fn rational(&mut self, tangle: &RationalTangle) -> Tangle {
        self.with_reciprocal(&tangle.expansion)
    }

    /// Joins NW–NE and SW–SE and converts the closed diagram to PD form.
    pub fn numerator_closure(mut self, t: Tangle) -> Result<PdCode> {
        self.join(t.nw, t.ne);
        self.join(t.sw, t.se);
        self.into_pd()
    }

    /// Joins NW–SW and NE–SE.
    pub fn denominator_closure(mut self, t: Tangle) -> Result<PdCode> {
        self.join(t.nw, t.sw);
        self.join(t.ne, t.se);
        self.into_pd()
    }

    fn into_pd(self) -> Result<PdCode> {
        let n = self.slash_over.len();
        let mut used_arcs = vec![false; self.arcs];
        // follow links through plain arcs until a crossing slot is reached
        let resolve = |mut p: Point, used: &mut Vec<bool>| -> Result<usize> {
            loop {
                let q = *self
                    .links
                    .get(&p)
                    .ok_or_else(|| Error::Inconsistent(format!("dangling tangle end {p:?}")))?;
                match q {
                    Point::Cross(c, k) => return Ok(4 * c + k),
                    Point::Arc(a, side) => {
                        used[a] = true;
                        p = Point::Arc(a, 1 - side);
                    }
                }
            }
        };
        let mut partner = vec![0usize; 4 * n];
        for c in 0..n {
            for k in 0..4 {
                partner[4 * c + k] = resolve(Point::Cross(c, k), &mut used_arcs)?;
            }
        }
        // arcs not reached from a crossing close up among themselves
        let mut free_loops = 0;
        for a in 0..self.arcs {
            if used_arcs[a] {
                continue;
            }
            free_loops += 1;
            let mut p = Point::Arc(a, 1);
            while let Some(&Point::Arc(b, side)) = self.links.get(&p) {
                if used_arcs[b] {
                    break;
                }
                used_arcs[b] = true;
                p = Point::Arc(b, 1 - side);
            }
        }
        if n == 0 {
            return match free_loops {
                0 | 1 => Ok(PdCode::unknot()),
                k => Err(Error::NotAKnot(k)),
            };
        }
        if free_loops > 0 {
            return Err(Error::MalformedPd("closure has split unknotted components".into()));
        }

        // orient each component and number edges along it
        let mut label = vec![0usize; 4 * n];
        let mut entry = vec![false; 4 * n];
        let mut visited = vec![false; 4 * n];
        let mut next = 1;
        for start in 0..4 * n {
            if visited[start] {
                continue;
            }
            let mut s = start;
            loop {
                let exit = 4 * (s / 4) + (s % 4 + 2) % 4;
                visited[s] = true;
                visited[exit] = true;
                entry[s] = true;
                let arrive = partner[exit];
                label[exit] = next;
                label[arrive] = next;
                next += 1;
                s = arrive;
                if s == start {
                    break;
                }
            }
        }

        let crossings = (0..n)
            .map(|c| {
                let under = if self.slash_over[c] { [SE, NW] } else { [SW, NE] };
                let first = if entry[4 * c + under[0]] { under[0] } else { under[1] };
                [0, 1, 2, 3].map(|i| label[4 * c + (first + i) % 4])
            })
            .collect();
        PdCode::new(crossings)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalTangle {
    pub alpha: i64,
    pub beta: i64,
    /// Positive continued fraction of `α/β`.
    pub expansion: Vec<i64>,
}

impl RationalTangle {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        Ok(Self { alpha, beta, expansion: continued_fraction(alpha, beta)? })
    }

    pub fn crossing_count(&self) -> i64 {
        self.expansion.iter().sum()
    }
}

/// Positive continued fraction `[c₁, …, c_k]` with
/// `α/β = c₁ + 1/(c₂ + 1/(… + 1/c_k))`.
pub fn continued_fraction(alpha: i64, beta: i64) -> Result<Vec<i64>> {
    if !(0 < beta && beta < alpha) || alpha.gcd(&beta) != 1 {
        return Err(Error::InvalidFraction(alpha, beta));
    }
    let (mut a, mut b) = (alpha, beta);
    let mut out = Vec::new();
    while b != 0 {
        out.push(a / b);
        (a, b) = (b, a % b);
    }
    Ok(out)
}

/// Evaluates a continued fraction as a reduced `(numerator, denominator)`.
pub fn evaluate_continued_fraction(coeffs: &[i64]) -> (i64, i64) {
    let (mut num, mut den) = (1i64, 0i64);
    for &c in coeffs.iter().rev() {
        (num, den) = (c * num + den, num);
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::determinant;

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(continued_fraction(3, 1).unwrap(), vec![3]);
        assert_eq!(continued_fraction(5, 2).unwrap(), vec![2, 2]);
        assert_eq!(continued_fraction(7, 6).unwrap(), vec![1, 6]);
        assert_eq!(continued_fraction(6, 4), Err(Error::InvalidFraction(6, 4)));
        assert_eq!(continued_fraction(3, 3), Err(Error::InvalidFraction(3, 3)));
        for (a, b) in [(3, 1), (5, 2), (7, 6), (13, 5), (89, 34)] {
            assert_eq!(evaluate_continued_fraction(&continued_fraction(a, b).unwrap()), (a, b));
        }
    }

    #[test]
    fn rational_closures_have_expected_determinants() {
        for (a, b) in [(3i64, 1i64), (5, 2), (7, 3), (9, 2), (11, 4), (13, 5)] {
            let t = RationalTangle::new(a, b).unwrap();
            // fraction b/a: the denominator closure is a 2-bridge link of determinant a
            let mut builder = TangleBuilder::new();
            let tangle = builder.rational(&t);
            let pd = builder.denominator_closure(tangle).unwrap();
            assert_eq!(pd.len() as i64, t.crossing_count());
            if a % 2 == 1 {
                assert_eq!(pd.components().unwrap(), 1);
                assert_eq!(determinant(&pd).unwrap(), a as u64, "{a}/{b}");
            }
        }
    }

    #[test]
    fn integer_tangle_closure_is_torus_link() {
        let mut builder = TangleBuilder::new();
        let t = builder.integer(3);
        let pd = builder.numerator_closure(t).unwrap();
        assert_eq!(pd.len(), 3);
        assert_eq!(pd.components().unwrap(), 1);
        assert_eq!(determinant(&pd).unwrap(), 3);
        let mut builder = TangleBuilder::new();
        let t = builder.zero();
        assert_eq!(builder.denominator_closure(t).unwrap(), PdCode::unknot());
    }
}
