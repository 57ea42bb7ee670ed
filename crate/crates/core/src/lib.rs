pub mod analysis;
pub mod braid;
pub mod cli;
pub mod gamma;
pub mod error;
pub mod group_spec;
pub mod holonomy;
pub mod intmat;
pub mod json;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
