//! Seifert matrix of a knot diagram through a braid representative.
//!
//! Vogel moves turn the diagram into a closed braid without changing the
//! number of Seifert circles. The braid word is then read off around the
//! braid axis and the Seifert matrix of the canonical surface is written down
//! directly from the word.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::linalg::{self, IntMatrix};
use crate::diagram::PdCode;
use crate::error::{Error, Result};

const MOVE_LIMIT: usize = 10_000;

fn fail(msg: impl Into<String>) -> Error {
    Error::SeifertExtraction(msg.into())
}

/// Oriented 4-valent planar graph. Slot `4c + k` is the `k`-th slot of
/// crossing `c` counterclockwise; the over-strand always joins slots 1 and 3.
#[derive(Clone, Debug)]
struct Graph {
    partner: Vec<usize>,
    incoming: Vec<bool>,
}

impl Graph {
    fn from_pd(pd: &PdCode) -> Result<Self> {
        let pl = pd.planar()?;
        let mut partner = vec![0; 4 * pl.n];
        let mut incoming = vec![false; 4 * pl.n];
        for c in 0..pl.n {
            for k in 0..4 {
                let (d, j) = pl.other_end((c, k));
                partner[4 * c + k] = 4 * d + j;
                incoming[4 * c + k] = pl.is_incoming((c, k));
            }
        }
        Ok(Self { partner, incoming })
    }

    fn crossings(&self) -> usize {
        self.partner.len() / 4
    }

    fn sign(&self, c: usize) -> i8 {
        let under_in = if self.incoming[4 * c] { 0 } else { 2 };
        if self.incoming[4 * c + (under_in + 3) % 4] {
            1
        } else {
            -1
        }
    }

    /// Faces as lists of departure slots; the face is on the left of each.
    fn faces(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut face_of = vec![usize::MAX; self.partner.len()];
        let mut faces = Vec::new();
        for s0 in 0..self.partner.len() {
            if face_of[s0] != usize::MAX {
                continue;
            }
            let mut face = Vec::new();
            let mut s = s0;
            while face_of[s] == usize::MAX {
                face_of[s] = faces.len();
                face.push(s);
                let arrive = self.partner[s];
                s = 4 * (arrive / 4) + (arrive % 4 + 3) % 4;
            }
            faces.push(face);
        }
        (faces, face_of)
    }

    /// Outgoing slot joined to incoming slot `s` by the oriented smoothing.
    fn smoothing_exit(&self, s: usize) -> usize {
        let (c, k) = (s / 4, s % 4);
        let right = 4 * c + (k + 1) % 4;
        if self.incoming[right] {
            4 * c + (k + 3) % 4
        } else {
            right
        }
    }

    /// Seifert circle id of every slot.
    fn circles(&self) -> Vec<usize> {
        let m = self.partner.len();
        let mut id = vec![usize::MAX; m];
        let mut next = 0;
        for s0 in 0..m {
            if id[s0] != usize::MAX || !self.incoming[s0] {
                continue;
            }
            let mut s = s0;
            while id[s] == usize::MAX {
                let out = self.smoothing_exit(s);
                id[s] = next;
                id[out] = next;
                s = self.partner[out];
            }
            next += 1;
        }
        id
    }

    fn link(&mut self, a: usize, b: usize) {
        self.partner[a] = b;
        self.partner[b] = a;
    }

    /// Pushes the edge leaving `s1` across the face on its left and over the
    /// edge leaving `s2`, creating two crossings.
    fn vogel_move(&mut self, s1: usize, s2: usize) {
        let (b1, b2) = (self.partner[s1], self.partner[s2]);
        let forward1 = !self.incoming[s1];
        let forward2 = !self.incoming[s2];
        let l = self.partner.len();
        let r = l + 4;
        self.partner.extend([0; 8]);
        self.incoming.extend([false; 8]);
        self.link(s1, l + 3);
        self.link(l + 1, r + 1);
        self.link(r + 3, b1);
        self.link(s2, r);
        self.link(r + 2, l);
        self.link(l + 2, b2);
        for (slot, inc) in [(l + 3, true), (l + 1, false), (r + 1, true), (r + 3, false)] {
            self.incoming[slot] = inc == forward1;
        }
        for (slot, inc) in [(r, true), (r + 2, false), (l, true), (l + 2, false)] {
            self.incoming[slot] = inc == forward2;
        }
    }

    /// A face edge pair from different Seifert circles running the same way
    /// around the face.
    fn find_defect(&self) -> Option<(usize, usize)> {
        let (faces, _) = self.faces();
        let circle = self.circles();
        for face in &faces {
            for (i, &a) in face.iter().enumerate() {
                for &b in &face[i + 1..] {
                    if circle[a] != circle[b] && self.incoming[a] == self.incoming[b] {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    fn braid(mut self) -> Result<Vec<(usize, i8)>> {
        let mut moves = 0;
        while let Some((a, b)) = self.find_defect() {
            moves += 1;
            if moves > MOVE_LIMIT {
                return Err(fail("Vogel moves did not terminate"));
            }
            self.vogel_move(a, b);
        }
        let (faces, face_of) = self.faces();
        if faces.len() != self.crossings() + 2 {
            return Err(fail("Vogel move broke planarity"));
        }
        self.read_word(&faces, &face_of)
    }

    fn read_word(&self, faces: &[Vec<usize>], face_of: &[usize]) -> Result<Vec<(usize, i8)>> {
        let n = self.crossings();
        let circle = self.circles();
        let count = circle.iter().max().map_or(0, |m| m + 1);
        let mut adj = vec![BTreeSet::new(); count];
        for c in 0..n {
            let ids: BTreeSet<usize> = (0..4).map(|k| circle[4 * c + k]).collect();
            let ids: Vec<usize> = ids.into_iter().collect();
            if ids.len() != 2 {
                return Err(fail(format!("crossing {c} does not join two Seifert circles")));
            }
            adj[ids[0]].insert(ids[1]);
            adj[ids[1]].insert(ids[0]);
        }
        if adj.iter().any(|a| a.len() > 2) {
            return Err(fail("Seifert circles are not nested in a chain"));
        }
        let first = (0..count)
            .find(|&i| adj[i].len() < 2)
            .ok_or_else(|| fail("Seifert circles form a cycle"))?;
        let mut order = vec![first];
        while let Some(&next) = adj[*order.last().unwrap()].iter().find(|x| !order.contains(x)) {
            order.push(next);
        }
        if order.len() != count {
            return Err(fail("Seifert circle graph is disconnected"));
        }
        let mut level = vec![0; count];
        for (i, &c) in order.iter().enumerate() {
            level[c] = i;
        }

        // a path from the face inside the first circle out to the far side,
        // crossing each circle once
        let mut face = faces
            .iter()
            .position(|f| f.iter().all(|&s| circle[s] == first))
            .ok_or_else(|| fail("no face bounded by the innermost circle"))?;
        let mut cut = Vec::with_capacity(count);
        for &c in &order {
            let s = *faces[face]
                .iter()
                .find(|&&s| circle[s] == c)
                .ok_or_else(|| fail("cut path lost its way"))?;
            cut.push(s);
            face = face_of[self.partner[s]];
        }

        // crossings met by each circle, starting just past the cut
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &s in &cut {
            let tail = if self.incoming[s] { self.partner[s] } else { s };
            let mut seq = Vec::new();
            let mut h = self.partner[tail];
            loop {
                seq.push(h / 4);
                let out = self.smoothing_exit(h);
                if out == tail {
                    break;
                }
                h = self.partner[out];
            }
            for w in seq.windows(2) {
                succ[w[0]].push(w[1]);
                indeg[w[1]] += 1;
            }
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&c| indeg[c] == 0).collect();
        let mut word = Vec::with_capacity(n);
        while let Some(c) = ready.pop_first() {
            let gen = level[circle[4 * c]].min(level[circle[4 * c + 1]]).min(level[circle[4 * c + 2]]);
            word.push((gen + 1, self.sign(c)));
            for &d in &succ[c] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    ready.insert(d);
                }
            }
        }
        if word.len() != n {
            return Err(fail("crossing order around the braid axis is cyclic"));
        }
        Ok(word)
    }
}

/// Braid word `(generator, sign)` whose closure is the knot of `pd`.
pub fn braid_word(pd: &PdCode) -> Result<Vec<(usize, i8)>> {
    if pd.components()? != 1 {
        return Err(Error::NotAKnot(pd.components()?));
    }
    if pd.is_empty() {
        return Ok(Vec::new());
    }
    Graph::from_pd(pd)?.braid()
}

/// Seifert matrix of the canonical surface of a closed braid. One basis
/// cycle per pair of consecutive occurrences of a generator.
pub fn braid_seifert_matrix(word: &[(usize, i8)]) -> IntMatrix {
    let mut pos: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, &(g, _)) in word.iter().enumerate() {
        pos.entry(g).or_default().push(k);
    }
    let mut gens: Vec<usize> = pos.keys().copied().collect();
    gens.sort_unstable();
    let cycles: Vec<(usize, usize, usize)> = gens
        .iter()
        .flat_map(|g| pos[g].windows(2).map(move |w| (*g, w[0], w[1])))
        .collect();
    let m = cycles.len();
    let mut s = vec![vec![0i64; m]; m];
    let eps = |k: usize| word[k].1 as i64;
    for (i, &(g, a, b)) in cycles.iter().enumerate() {
        s[i][i] = -(eps(a) + eps(b)) / 2;
        for (j, &(h, c, d)) in cycles.iter().enumerate() {
            if g == h && b == c {
                let positive = eps(b) > 0;
                s[i][j] = if positive { 1 } else { 0 };
                s[j][i] = if positive { 0 } else { -1 };
            } else if h == g + 1 {
                if a < c && c < b && b < d {
                    s[i][j] = -1;
                    s[j][i] = 0;
                } else if c < a && a < d && d < b {
                    s[i][j] = 1;
                    s[j][i] = 0;
                }
            }
        }
    }
    linalg::int_matrix(&s)
}

pub fn seifert_matrix(pd: &PdCode) -> Result<IntMatrix> {
    let s = braid_seifert_matrix(&braid_word(pd)?);
    let n = s.len();
    let skew: IntMatrix = (0..n).map(|i| (0..n).map(|j| &s[i][j] - &s[j][i]).collect()).collect();
    if !linalg::determinant(&skew).abs().is_one() {
        return Err(fail("S - S^T is not unimodular"));
    }
    Ok(s)
}

/// Signature of `S + Sᵀ`.
pub fn seifert_matrix_signature(pd: &PdCode) -> Result<i64> {
    let s = seifert_matrix(pd)?;
    let n = s.len();
    let sym: IntMatrix = (0..n).map(|i| (0..n).map(|j| &s[i][j] + &s[j][i]).collect()).collect();
    Ok(linalg::signature(&sym))
}

/// `|det(S + Sᵀ)|`
pub fn seifert_determinant(pd: &PdCode) -> Result<BigInt> {
    let s = seifert_matrix(pd)?;
    let n = s.len();
    let sym: IntMatrix = (0..n).map(|i| (0..n).map(|j| &s[i][j] + &s[j][i]).collect()).collect();
    Ok(linalg::determinant(&sym).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stock_signatures() {
        assert_eq!(seifert_matrix_signature(&PdCode::unknot()).unwrap(), 0);
        assert_eq!(seifert_matrix_signature(&PdCode::positive_kink()).unwrap(), 0);
        assert_eq!(seifert_matrix_signature(&PdCode::right_trefoil()).unwrap(), -2);
        assert_eq!(seifert_matrix_signature(&PdCode::left_trefoil()).unwrap(), 2);
        assert_eq!(seifert_matrix_signature(&PdCode::figure_eight()).unwrap(), 0);
        assert_eq!(seifert_determinant(&PdCode::figure_eight()).unwrap(), BigInt::from(5));
    }

    #[test]
    fn trefoil_is_a_two_braid() {
        let w = braid_word(&PdCode::right_trefoil()).unwrap();
        assert_eq!(w, vec![(1, 1); 3]);
    }

    #[test]
    fn torus_word_matrix() {
        let w: Vec<(usize, i8)> = [(1, 1), (2, 1)].repeat(5);
        let s = braid_seifert_matrix(&w);
        assert_eq!(s.len(), 8);
        let sym: IntMatrix =
            (0..8).map(|i| (0..8).map(|j| &s[i][j] + &s[j][i]).collect()).collect();
        assert_eq!(linalg::signature(&sym), -8);
    }
}
