pub mod error;
pub mod exactnum;
pub use error::{Error, Result};
pub mod polyfps;
pub mod report;
pub mod mlpseq;
pub mod diffident;
pub mod specanalysis;
pub mod suite;
pub mod cli;
