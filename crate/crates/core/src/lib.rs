pub mod closure;
pub mod complex;
pub mod error;
pub mod field;
pub mod homology;
pub mod instances;
pub mod io;
pub mod relations;
pub mod semiuniform;
pub mod snf;

pub use error::{Error, Result};
