//! Knot invariants of PD diagrams: Kauffman bracket, Jones polynomial,
//! determinant and signature.

pub mod bracket;
pub mod goeritz;
pub mod linalg;
pub mod seifert_matrix;

pub use bracket::{jones, kauffman_bracket, kauffman_bracket_brute_force};
pub use goeritz::{gl_signature, goeritz, GoeritzData};
pub use seifert_matrix::{braid_word, seifert_matrix, seifert_matrix_signature};
pub use crate::poly::log_derivative_at_minus_one;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::diagram::PdCode;
use crate::error::{Error, Result};

/// `|V(−1)|`, checked against the Goeritz determinant.
pub fn determinant(pd: &PdCode) -> Result<u64> {
    let from_jones = jones(pd)?.eval_int(-1).abs();
    let from_goeritz = goeritz::goeritz_determinant(pd)?;
    if from_jones != BigInt::from(from_goeritz) {
        return Err(Error::Inconsistent(format!(
            "determinant routes disagree: |V(-1)| = {from_jones}, Goeritz = {from_goeritz}"
        )));
    }
    from_jones.to_u64().ok_or_else(|| Error::Inconsistent("determinant overflow".into()))
}
