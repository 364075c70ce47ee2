//! Goeritz forms and the Gordon–Litherland signature.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::linalg::{self, IntMatrix};
use crate::diagram::{PdCode, Planar};
use crate::error::{Error, Result};

/// Goeritz matrix over the unshaded faces of one checkerboard coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoeritzData {
    pub matrix: IntMatrix,
    /// Sum of the crossing indices over crossings whose shaded corners are
    /// the coherent ones.
    pub correction: i64,
}

impl GoeritzData {
    /// The form with one face deleted.
    pub fn reduced(&self) -> IntMatrix {
        linalg::minor(&self.matrix, 0)
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.reduced()).abs()
    }

    pub fn signature(&self) -> i64 {
        linalg::signature(&self.reduced()) - self.correction
    }
}

/// Colors faces so that the two faces across every edge differ.
fn face_colors(pl: &Planar) -> Result<Vec<u8>> {
    let mut adj = vec![Vec::new(); pl.faces];
    for c in 0..pl.n {
        for m in 0..4 {
            let (f, g) = (pl.corner_face(c, m), pl.corner_face(c, (m + 1) % 4));
            adj[f].push(g);
            adj[g].push(f);
        }
    }
    let mut color = vec![u8::MAX; pl.faces];
    let mut queue = VecDeque::from([0]);
    color[0] = 0;
    while let Some(f) = queue.pop_front() {
        for &g in &adj[f] {
            if color[g] == u8::MAX {
                color[g] = 1 - color[f];
                queue.push_back(g);
            } else if color[g] == color[f] {
                return Err(Error::Inconsistent("faces admit no checkerboard coloring".into()));
            }
        }
    }
    Ok(color)
}

fn goeritz_for(pl: &Planar, color: &[u8], unshaded: u8) -> GoeritzData {
    let white: Vec<usize> = (0..pl.faces).filter(|&f| color[f] == unshaded).collect();
    let index = |f: usize| white.binary_search(&f).unwrap();
    let k = white.len();
    let mut g = vec![vec![0i64; k]; k];
    let mut correction = 0;
    for c in 0..pl.n {
        let corner1_white = color[pl.corner_face(c, 1)] == unshaded;
        let eta: i64 = if corner1_white { -1 } else { 1 };
        let white_corners = if corner1_white { [1, 3] } else { [0, 2] };
        let (i, j) = (index(pl.corner_face(c, white_corners[0])), index(pl.corner_face(c, white_corners[1])));
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
        // corners where both strands point in or both point out
        let coherent = if pl.sign(c) > 0 { [1, 3] } else { [0, 2] };
        if white_corners != coherent {
            correction += eta;
        }
    }
    GoeritzData { matrix: linalg::int_matrix(&g), correction }
}

/// Goeritz data for both checkerboard colorings of a knot diagram.
pub fn goeritz_pair(pd: &PdCode) -> Result<[GoeritzData; 2]> {
    let pl = pd.planar()?;
    if pl.components != 1 {
        return Err(Error::NotAKnot(pl.components));
    }
    if pl.n == 0 {
        let trivial = GoeritzData { matrix: vec![vec![BigInt::from(0)]], correction: 0 };
        return Ok([trivial.clone(), trivial]);
    }
    let color = face_colors(&pl)?;
    Ok([goeritz_for(&pl, &color, 0), goeritz_for(&pl, &color, 1)])
}

pub fn goeritz(pd: &PdCode) -> Result<GoeritzData> {
    Ok(goeritz_pair(pd)?[0].clone())
}

/// Gordon–Litherland signature, computed from both colorings and checked
/// for agreement.
pub fn gl_signature(pd: &PdCode) -> Result<i64> {
    let [a, b] = goeritz_pair(pd)?;
    let (sa, sb) = (a.signature(), b.signature());
    if sa != sb {
        return Err(Error::Inconsistent(format!("checkerboard colorings give signatures {sa} and {sb}")));
    }
    Ok(sa)
}

pub fn goeritz_determinant(pd: &PdCode) -> Result<u64> {
    let [a, b] = goeritz_pair(pd)?;
    let (da, db) = (a.determinant(), b.determinant());
    if da != db {
        return Err(Error::Inconsistent(format!("checkerboard colorings give determinants {da} and {db}")));
    }
    u64::try_from(da).map_err(|_| Error::Inconsistent("determinant does not fit in 64 bits".into()))
}
