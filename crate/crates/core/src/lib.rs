//! Exact invariants and obstruction certificates for doubly slice knots.

pub mod cli_io;
pub mod covers;
pub mod error;
pub mod exactalg;
pub mod families;
pub mod lambda_modules;
pub mod lt_signature;
pub mod obstruct;
pub mod parity;
pub mod seifert;

pub use error::{Error, Result};
