//! Kauffman bracket by boundary-connectivity contraction, with a brute-force
//! state sum kept as an oracle.
//!
//! For a crossing `X(a,b,c,d)` the A-smoothing joins `a` with `b` and `c` with
//! `d`; the B-smoothing joins `a` with `d` and `b` with `c`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::diagram::PdCode;
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

pub const FAST_MAX_CROSSINGS: usize = 64;
pub const BRUTE_MAX_CROSSINGS: usize = 22;

/// `δ = −A² − A⁻²`
pub fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
}

fn smoothings([a, b, c, d]: [usize; 4]) -> [[(usize, usize); 2]; 2] {
    [[(a, b), (c, d)], [(a, d), (b, c)]]
}

/// Open arc ends: each dangling edge label maps to the label at the other
/// end of its arc.
type Boundary = BTreeMap<usize, usize>;

/// Joins edge ends `x` and `y` at the current crossing; returns whether a
/// closed loop was completed.
fn connect(m: &mut Boundary, x: usize, y: usize) -> bool {
    match (m.get(&x).copied(), m.get(&y).copied()) {
        (Some(u), Some(v)) => {
            m.remove(&x);
            m.remove(&y);
            if u == y {
                return true;
            }
            m.insert(u, v);
            m.insert(v, u);
            false
        }
        (Some(u), None) => {
            m.remove(&x);
            m.insert(u, y);
            m.insert(y, u);
            false
        }
        (None, Some(v)) => {
            m.remove(&y);
            m.insert(v, x);
            m.insert(x, v);
            false
        }
        (None, None) => {
            if x == y {
                return true;
            }
            m.insert(x, y);
            m.insert(y, x);
            false
        }
    }
}

/// Greedy order keeping the boundary small: always take the crossing that
/// shares the most edges with what has already been contracted.
fn contraction_order(pd: &PdCode) -> Vec<usize> {
    let n = pd.len();
    let mut done = vec![false; n];
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = pd.crossings[c].iter().filter(|l| seen.contains_key(l)).count();
                (shared, std::cmp::Reverse(c))
            })
            .unwrap();
        done[next] = true;
        for &l in &pd.crossings[next] {
            *seen.entry(l).or_default() += 1;
        }
        order.push(next);
    }
    order
}

/// Kauffman bracket in the variable `A`, normalized so the unknot is 1.
pub fn kauffman_bracket(pd: &PdCode) -> Result<LaurentPolynomial> {
    let n = pd.len();
    if n > FAST_MAX_CROSSINGS {
        return Err(Error::CrossingBudget { got: n, max: FAST_MAX_CROSSINGS });
    }
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let delta = loop_value();
    // key: (boundary, whether a loop has closed yet); the first closed loop
    // is the one the normalization divides out
    let mut states: HashMap<(Vec<(usize, usize)>, bool), LaurentPolynomial> = HashMap::new();
    states.insert((Vec::new(), false), LaurentPolynomial::one());
    for c in contraction_order(pd) {
        let mut next: HashMap<(Vec<(usize, usize)>, bool), LaurentPolynomial> = HashMap::new();
        for ((boundary, closed), weight) in states {
            for (i, pairs) in smoothings(pd.crossings[c]).into_iter().enumerate() {
                let mut m: Boundary = boundary.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
                let mut closed = closed;
                let mut w = weight.shift(if i == 0 { 1 } else { -1 });
                for (x, y) in pairs {
                    if connect(&mut m, x, y) {
                        if closed {
                            w = &w * &delta;
                        }
                        closed = true;
                    }
                }
                let key: Vec<(usize, usize)> = m.into_iter().filter(|(a, b)| a < b).collect();
                let slot = next.entry((key, closed)).or_insert_with(LaurentPolynomial::zero);
                *slot = &*slot + &w;
            }
        }
        states = next;
    }
    let mut total = LaurentPolynomial::zero();
    for ((boundary, closed), w) in states {
        if !boundary.is_empty() || !closed {
            return Err(Error::Inconsistent("bracket contraction left open arcs".into()));
        }
        total = &total + &w;
    }
    Ok(total)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// All `2^c` smoothings with union–find loop counting.
pub fn kauffman_bracket_brute_force(pd: &PdCode) -> Result<LaurentPolynomial> {
    let n = pd.len();
    if n > BRUTE_MAX_CROSSINGS {
        return Err(Error::CrossingBudget { got: n, max: BRUTE_MAX_CROSSINGS });
    }
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let labels = 2 * n + 1;
    // counts[a][loops]: states with `a` A-smoothings and that many loops
    let mut counts = vec![vec![0u64; 2 * n + 2]; n + 1];
    let mut parent = vec![0usize; labels];
    for state in 0u64..(1u64 << n) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut merges = 0;
        for (c, x) in pd.crossings.iter().enumerate() {
            let pick = ((state >> c) & 1) as usize;
            for (u, v) in smoothings(*x)[pick] {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    merges += 1;
                }
            }
        }
        // 2n edges, each loop is one class
        let loops = 2 * n - merges;
        let a_count = n - state.count_ones() as usize;
        counts[a_count][loops] += 1;
    }
    let delta = loop_value();
    let mut total = LaurentPolynomial::zero();
    for (a, row) in counts.iter().enumerate() {
        for (loops, &k) in row.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let term = LaurentPolynomial::monomial(BigInt::from(k), 2 * a as i64 - n as i64);
            total = &total + &(&term * &delta.pow(loops as u32 - 1));
        }
    }
    Ok(total)
}

/// `V(t) = (−A³)^{−w}⟨D⟩` with `t = A⁻⁴`.
pub fn jones_from_bracket(bracket: &LaurentPolynomial, writhe: i64) -> Result<LaurentPolynomial> {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * writhe);
    let normalized = if sign < 0 { -&normalized } else { normalized };
    normalized
        .divide_exponents(-4)
        .ok_or_else(|| Error::Inconsistent("Jones polynomial has fractional exponents".into()))
}

pub fn jones(pd: &PdCode) -> Result<LaurentPolynomial> {
    let w = pd.writhe()?;
    jones_from_bracket(&kauffman_bracket(pd)?, w)
}

pub fn jones_brute_force(pd: &PdCode) -> Result<LaurentPolynomial> {
    let w = pd.writhe()?;
    jones_from_bracket(&kauffman_bracket_brute_force(pd)?, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn kink_and_unknot() {
        assert_eq!(kauffman_bracket(&PdCode::unknot()).unwrap(), LaurentPolynomial::one());
        assert_eq!(kauffman_bracket(&PdCode::positive_kink()).unwrap(), p(&[(3, -1)]));
        assert_eq!(kauffman_bracket_brute_force(&PdCode::positive_kink()).unwrap(), p(&[(3, -1)]));
        assert_eq!(jones(&PdCode::positive_kink()).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn trefoils_and_figure_eight() {
        let right = jones(&PdCode::right_trefoil()).unwrap();
        assert_eq!(right, p(&[(1, 1), (3, 1), (4, -1)]));
        assert_eq!(jones(&PdCode::left_trefoil()).unwrap(), right.invert_variable());
        let fig8 = jones(&PdCode::figure_eight()).unwrap();
        assert_eq!(fig8, p(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]));
        for pd in [PdCode::right_trefoil(), PdCode::left_trefoil(), PdCode::figure_eight()] {
            assert_eq!(kauffman_bracket(&pd).unwrap(), kauffman_bracket_brute_force(&pd).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        use crate::diagram::TangleBuilder;
        let mut b = TangleBuilder::new();
        let t = b.integer(23);
        let pd = b.denominator_closure(t).unwrap();
        assert!(matches!(kauffman_bracket_brute_force(&pd), Err(Error::CrossingBudget { got: 23, max: 22 })));
        assert!(kauffman_bracket(&pd).is_ok());
    }
}
