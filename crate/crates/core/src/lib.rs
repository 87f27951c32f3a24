pub mod adams;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod ledger;
pub mod models;
pub mod qseries;
pub mod report;
pub mod wpsline;

pub use error::{Error, Result};
