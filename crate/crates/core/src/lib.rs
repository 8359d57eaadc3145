pub mod cli;
pub mod error;
pub mod exactlin;
pub mod field;
pub mod gorenstein;
pub mod koszul;
pub mod presentation;
pub mod samples;
pub mod tensorspace;
pub mod twist;

pub use error::{Error, Result};
