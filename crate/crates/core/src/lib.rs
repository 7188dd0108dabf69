pub mod error;
pub mod groups;
pub mod matrices;
pub mod scalars;

pub use error::{Error, Result};
pub mod strings;
pub mod modules;
pub mod functors;
pub mod homspaces;
pub mod vertices;
pub mod verifier;
