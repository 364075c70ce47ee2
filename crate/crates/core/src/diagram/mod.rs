//! Knot diagrams: PD codes, tangles and the Montesinos diagram of a
//! Brieskorn sphere.

mod pd;
pub mod tangle;

pub use pd::PdCode;
pub(crate) use pd::Planar;
pub use tangle::{continued_fraction, RationalTangle, Tangle, TangleBuilder};

use crate::error::{Error, Result};
use crate::seifert::SeifertData;

impl PdCode {
    /// Same diagram with every crossing switched.
    pub fn mirror(&self) -> Result<PdCode> {
        let pl = self.planar()?;
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(c, &[a, b, cc, d])| if pl.sign(c) > 0 { [d, a, b, cc] } else { [b, cc, d, a] })
            .collect();
        PdCode::new(crossings)
    }

    /// Sum of crossing signs; only defined for knots.
    pub fn writhe(&self) -> Result<i64> {
        let pl = self.planar()?;
        if pl.components != 1 {
            return Err(Error::NotAKnot(pl.components));
        }
        Ok((0..pl.n).map(|c| pl.sign(c) as i64).sum())
    }
}

/// Numerator closure of `T(b₁/a₁) + … + T(bₙ/aₙ) + [b]`.
///
/// The double branched cover of this knot is the Seifert fibered homology
/// sphere with the given unnormalized invariants.
pub fn build_diagram(data: &SeifertData) -> Result<PdCode> {
    let mut builder = TangleBuilder::new();
    let mut acc: Option<Tangle> = None;
    for (&a, &b) in data.multiplicities.iter().zip(&data.pair_weights) {
        let t = builder.rational(&RationalTangle::new(a, b)?);
        acc = Some(match acc {
            None => t,
            Some(left) => builder.sum(left, t),
        });
    }
    let tail = builder.integer(data.base_weight);
    let total = match acc {
        None => tail,
        Some(left) => builder.sum(left, tail),
    };
    builder.numerator_closure(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_flips_signs() {
        let r = PdCode::right_trefoil();
        assert_eq!(r.writhe().unwrap(), 3);
        let m = r.mirror().unwrap();
        assert_eq!(m.writhe().unwrap(), -3);
        assert_eq!(m.mirror().unwrap(), r);
        assert_eq!(PdCode::figure_eight().writhe().unwrap(), 0);
    }

    #[test]
    fn brieskorn_diagrams_are_knots() {
        for m in [[2, 3, 5], [2, 3, 7], [3, 5, 7], [2, 5, 9]] {
            let data = SeifertData::solve(&m).unwrap();
            let pd = build_diagram(&data).unwrap();
            assert_eq!(pd.components().unwrap(), 1, "{m:?}");
        }
    }
}
