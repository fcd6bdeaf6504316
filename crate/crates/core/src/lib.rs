pub mod error;

pub use error::{QcorrError, Result};
