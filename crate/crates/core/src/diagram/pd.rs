use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Planar diagram code. Each crossing lists four edge labels counterclockwise,
/// starting from the incoming under-strand, so the under-strand runs from
/// slot 0 to slot 2 and the over-strand joins slots 1 and 3.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCode {
    pub crossings: Vec<[usize; 4]>,
}

/// A slot of a crossing.
pub(crate) type Slot = (usize, usize);

impl PdCode {
    pub fn new(crossings: Vec<[usize; 4]>) -> Result<Self> {
        let pd = Self { crossings };
        pd.planar()?;
        Ok(pd)
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::default()
    }

    /// Unknot with one positive curl.
    pub fn positive_kink() -> Self {
        Self { crossings: vec![[1, 1, 2, 2]] }
    }

    /// Standard 3-crossing diagram of the right-handed trefoil (all crossings
    /// positive).
    pub fn right_trefoil() -> Self {
        Self { crossings: vec![[4, 2, 5, 1], [6, 4, 1, 3], [2, 6, 3, 5]] }
    }

    pub fn left_trefoil() -> Self {
        Self { crossings: vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]] }
    }

    pub fn figure_eight() -> Self {
        Self { crossings: vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]] }
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub(crate) fn planar(&self) -> Result<Planar> {
        Planar::new(self)
    }

    pub fn components(&self) -> Result<usize> {
        Ok(self.planar()?.components)
    }

    /// Crossing signs (`+1` when the over-strand runs from slot 3 to slot 1).
    pub fn signs(&self) -> Result<Vec<i8>> {
        let pl = self.planar()?;
        Ok((0..self.len()).map(|c| pl.sign(c)).collect())
    }

    /// Gauss code: crossing numbers (1-based) along the knot, positive on
    /// over-passes and negative on under-passes.
    pub fn gauss_code(&self) -> Result<Vec<i64>> {
        let pl = self.planar()?;
        if pl.components != 1 {
            return Err(Error::NotAKnot(pl.components));
        }
        if self.is_empty() {
            return Ok(vec![]);
        }
        let mut out = Vec::with_capacity(2 * self.len());
        let start = (0usize, 0usize);
        let mut slot = start;
        loop {
            let (c, k) = slot;
            let n = c as i64 + 1;
            out.push(if k % 2 == 0 { -n } else { n });
            let exit = (c, (k + 2) % 4);
            slot = pl.other_end(exit);
            if slot == start {
                break;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "X({},{},{},{})", x[0], x[1], x[2], x[3])?;
        }
        Ok(())
    }
}

/// Accepts `X(1,4,2,5) X(3,6,4,1) …`, square brackets, commas between
/// crossings and an optional `PD[…]` wrapper.
impl FromStr for PdCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        let mut i = 0;
        let mut body = s.trim();
        let mut base = s.len() - s.trim_start().len();
        if let Some(rest) = body.strip_prefix("PD") {
            let inner = rest.trim_start();
            base += body.len() - inner.len() + 1;
            body = inner
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .or_else(|| inner.strip_prefix('(').and_then(|b| b.strip_suffix(')')))
                .ok_or(Error::Parse { pos: base, msg: "unbalanced PD wrapper".into() })?;
        }
        let chars: Vec<(usize, char)> = body.char_indices().collect();
        while i < chars.len() {
            let (pos, ch) = chars[i];
            if ch.is_whitespace() || ch == ',' {
                i += 1;
                continue;
            }
            if ch != 'X' && ch != 'x' {
                return Err(Error::Parse { pos: base + pos, msg: format!("unexpected `{ch}`") });
            }
            let open = chars.get(i + 1).map(|c| c.1);
            let close = match open {
                Some('(') => ')',
                Some('[') => ']',
                _ => return Err(Error::Parse { pos: base + pos + 1, msg: "expected `(`".into() }),
            };
            let start = i + 2;
            let end = (start..chars.len())
                .find(|&j| chars[j].1 == close)
                .ok_or(Error::Parse { pos: base + pos, msg: "unterminated crossing".into() })?;
            let inner: String = chars[start..end].iter().map(|c| c.1).collect();
            let labels: Vec<usize> = inner
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse { pos: base + chars[start.min(end)].0, msg: "bad edge label".into() })?;
            let labels: [usize; 4] = labels
                .try_into()
                .map_err(|_| Error::Parse { pos: base + pos, msg: "a crossing needs four labels".into() })?;
            crossings.push(labels);
            i = end + 1;
        }
        PdCode::new(crossings)
    }
}

/// Combinatorial view of a PD code: slot adjacency, strand orientation and
/// faces of the planar 4-valent graph.
#[derive(Clone, Debug)]
pub(crate) struct Planar {
    pub n: usize,
    /// `partner[4c + k]` is the slot at the other end of the edge leaving slot `(c, k)`.
    partner: Vec<usize>,
    /// Slot (1 or 3) where the over-strand enters.
    over_in: Vec<usize>,
    pub components: usize,
    /// Face id for each departure slot; the face lies to the left of travel.
    face_of: Vec<usize>,
    pub faces: usize,
}

impl Planar {
    fn new(pd: &PdCode) -> Result<Self> {
        let n = pd.crossings.len();
        let mut seen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (c, x) in pd.crossings.iter().enumerate() {
            for (k, &label) in x.iter().enumerate() {
                seen.entry(label).or_default().push(4 * c + k);
            }
        }
        let mut partner = vec![usize::MAX; 4 * n];
        for (label, slots) in &seen {
            if slots.len() != 2 {
                return Err(Error::MalformedPd(format!(
                    "edge {label} appears {} times",
                    slots.len()
                )));
            }
            partner[slots[0]] = slots[1];
            partner[slots[1]] = slots[0];
        }

        // orient strands: the under-strand enters at slot 0
        let mut over_in = vec![usize::MAX; n];
        let mut visited = vec![false; 4 * n];
        let mut components = 0;
        let walk = |entry: usize, visited: &mut Vec<bool>, over_in: &mut Vec<usize>| {
            let mut s = entry;
            loop {
                let (c, k) = (s / 4, s % 4);
                if visited[s] {
                    break;
                }
                visited[s] = true;
                visited[4 * c + (k + 2) % 4] = true;
                if k % 2 == 1 {
                    over_in[c] = k;
                } else if k != 0 {
                    return Err(Error::MalformedPd(format!(
                        "strand orientation conflict at crossing {}",
                        c + 1
                    )));
                }
                s = partner[4 * c + (k + 2) % 4];
            }
            Ok(())
        };
        for c in 0..n {
            if !visited[4 * c] {
                components += 1;
                walk(4 * c, &mut visited, &mut over_in)?;
            }
        }
        for c in 0..n {
            if !visited[4 * c + 1] {
                // a component that never passes under anything
                components += 1;
                walk(4 * c + 3, &mut visited, &mut over_in)?;
            }
        }
        if n == 0 {
            components = 1;
        }

        let mut face_of = vec![usize::MAX; 4 * n];
        let mut faces = 0;
        for s0 in 0..4 * n {
            if face_of[s0] != usize::MAX {
                continue;
            }
            let mut s = s0;
            while face_of[s] == usize::MAX {
                face_of[s] = faces;
                let arrive = partner[s];
                s = 4 * (arrive / 4) + (arrive % 4 + 3) % 4;
            }
            faces += 1;
        }

        let pl = Self { n, partner, over_in, components, face_of, faces };
        if n > 0 {
            pl.check_connected_planar()?;
        }
        Ok(pl)
    }

    fn check_connected_planar(&self) -> Result<()> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for k in 0..4 {
                let d = self.partner[4 * c + k] / 4;
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::MalformedPd("diagram is disconnected".into()));
        }
        // V − E + F = 2 for a connected 4-valent planar map
        if self.faces != self.n + 2 {
            return Err(Error::MalformedPd(format!(
                "not planar: {} faces for {} crossings",
                self.faces, self.n
            )));
        }
        Ok(())
    }

    pub fn other_end(&self, (c, k): Slot) -> Slot {
        let s = self.partner[4 * c + k];
        (s / 4, s % 4)
    }

    pub fn sign(&self, c: usize) -> i8 {
        if self.over_in[c] == 3 {
            1
        } else {
            -1
        }
    }

    /// Is the strand entering the crossing at this slot?
    pub fn is_incoming(&self, (c, k): Slot) -> bool {
        k == 0 || k == self.over_in[c]
    }

    /// Face containing the corner between slot `m` and slot `m + 1`.
    pub fn corner_face(&self, c: usize, m: usize) -> usize {
        // arriving at slot m+1 the walk turns left into slot m
        let arrive = 4 * c + (m + 1) % 4;
        let depart_before = self.partner[arrive];
        self.face_of[depart_before]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stock_diagrams_are_valid() {
        for pd in [PdCode::right_trefoil(), PdCode::left_trefoil(), PdCode::figure_eight(), PdCode::positive_kink()] {
            let pl = pd.planar().unwrap();
            assert_eq!(pl.components, 1);
            assert_eq!(pl.faces, pd.len() + 2);
        }
        assert_eq!(PdCode::right_trefoil().signs().unwrap(), vec![1, 1, 1]);
        assert_eq!(PdCode::left_trefoil().signs().unwrap(), vec![-1, -1, -1]);
        assert_eq!(PdCode::positive_kink().signs().unwrap(), vec![1]);
        assert_eq!(PdCode::figure_eight().signs().unwrap().iter().map(|&s| s as i64).sum::<i64>(), 0);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(PdCode::new(vec![[1, 2, 3, 4]]), Err(Error::MalformedPd(_))));
        assert!(matches!(PdCode::new(vec![[1, 2, 3, 4], [1, 2, 3, 5]]), Err(Error::MalformedPd(_))));
    }

    #[test]
    fn text_round_trip() {
        let pd = PdCode::figure_eight();
        let text = pd.to_string();
        assert_eq!(text, "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
        assert_eq!(text.parse::<PdCode>().unwrap(), pd);
        assert_eq!("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]".parse::<PdCode>().unwrap(), PdCode::left_trefoil());
        assert!(matches!("X(1,2,3)".parse::<PdCode>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn gauss_code_alternates_for_trefoil() {
        let g = PdCode::left_trefoil().gauss_code().unwrap();
        assert_eq!(g.len(), 6);
        for w in g.windows(2) {
            assert!(w[0].signum() != w[1].signum());
        }
    }
}
