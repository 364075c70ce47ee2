pub mod diagram;
pub mod error;
pub mod floer;
pub mod invariants;
pub mod poly;
pub mod repspace;
pub mod seifert;

pub use diagram::PdCode;
pub use error::{Error, Result};
pub use floer::{FloerRanks, InvariantBundle};
pub use poly::LaurentPolynomial;
pub use seifert::SeifertData;
