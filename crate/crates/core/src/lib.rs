//! The deletion order on words over an ordered alphabet and on the elements
//! of a finitely generated Coxeter group.

pub mod artinian;
pub mod bruhat;
pub mod cayley;
pub mod coxeter;
pub mod duality;
pub mod error;
pub mod normal_forms;
pub mod word;
pub mod word_order;

pub use coxeter::{CoxeterMatrix, CoxeterSystem, GroupElement};
pub use error::{Error, Result};
pub use word::{Alphabet, Letter, Word};
