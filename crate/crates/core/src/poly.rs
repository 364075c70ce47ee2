//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sparse exponent → coefficient map; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(x) ↦ p(x^k)` for nonzero `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert_ne!(k, 0);
        Self { terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    /// `p(x) ↦ p(x⁻¹)`
    pub fn invert_variable(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Divides every exponent by `k`; `None` if some exponent is not a multiple.
    pub fn divide_exponents(&self, k: i64) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e % k != 0 {
                return None;
            }
            terms.insert(e / k, c.clone());
        }
        Some(Self { terms })
    }

    /// Multiplies by `x^by`.
    pub fn shift(&self, by: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + by, c.clone())).collect() }
    }

    /// Value at an integer point; `x = 0` is only allowed without negative powers.
    pub fn eval_int(&self, x: i64) -> BigInt {
        self.eval_rational(&BigRational::from_integer(x.into())).to_integer()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let term = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += term * BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut p = Self::zero();
        for (&e, c) in &self.terms {
            p.add_term(e - 1, c * BigInt::from(e));
        }
        p
    }

    /// Sorted `[exponent, coefficient]` pairs.
    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    /// Pretty form in the given variable name, e.g. `-t^4+t^3+t`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            let unit = mag.is_one();
            if !unit || e == 0 {
                s.push_str(&mag.to_string());
            }
            if e != 0 {
                s.push_str(var);
                if e != 1 {
                    s.push('^');
                    s.push_str(&e.to_string());
                }
            }
        }
        s
    }
}

/// `V′(−1)/V(−1)` as an exact rational.
pub fn log_derivative_at_minus_one(v: &LaurentPolynomial) -> Result<BigRational> {
    let minus_one = BigRational::from_integer((-1).into());
    let value = v.eval_rational(&minus_one);
    if value.is_zero() {
        return Err(Error::VanishesAtMinusOne);
    }
    Ok(v.derivative().eval_rational(&minus_one) / value)
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = self.clone();
        for (&e, c) in &o.terms {
            p.add_term(e, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-o)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &o.terms {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, o: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// JSON coefficient: a plain integer when it fits, otherwise a decimal string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireCoeff {
    Small(i64),
    Big(String),
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, WireCoeff)> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let wire = c.to_i64().map(WireCoeff::Small).unwrap_or_else(|| WireCoeff::Big(c.to_string()));
                (e, wire)
            })
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(i64, WireCoeff)>::deserialize(d)?;
        let mut p = Self::zero();
        for (e, c) in pairs {
            let c = match c {
                WireCoeff::Small(v) => BigInt::from(v),
                WireCoeff::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn no_zero_coefficients() {
        let a = p(&[(1, 2), (3, -1)]);
        let b = p(&[(1, -2)]);
        assert_eq!(&a + &b, p(&[(3, -1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn log_derivative_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(log_derivative_at_minus_one(&LaurentPolynomial::one()).unwrap(), r(0, 1));
        let torus = p(&[(4, 1), (6, 1), (10, -1)]);
        assert_eq!(log_derivative_at_minus_one(&torus).unwrap(), r(0, 1));
        let trefoil = p(&[(4, -1), (3, 1), (1, 1)]);
        assert_eq!(log_derivative_at_minus_one(&trefoil).unwrap(), r(-8, 3));
        assert_eq!(log_derivative_at_minus_one(&p(&[(0, 1), (1, 1)])), Err(Error::VanishesAtMinusOne));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[(4, -1), (3, 1), (1, 1)]).to_string(), "-t^4+t^3+t");
        assert_eq!(p(&[(-2, 3), (0, -1)]).display_in("A"), "-1+3A^-2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn evaluation_with_negative_powers() {
        let v = p(&[(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(v.eval_int(1), BigInt::from(1));
        assert_eq!(v.eval_int(-1), BigInt::from(-3));
        assert_eq!(v.invert_variable(), p(&[(4, -1), (3, 1), (1, 1)]));
    }
}
