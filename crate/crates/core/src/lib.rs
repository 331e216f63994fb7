pub mod bases;
pub mod error;
pub mod qlaurent;
pub mod repmod;
pub mod report;
pub mod sl3;
pub mod tableaux;

pub use error::{Error, Result};
