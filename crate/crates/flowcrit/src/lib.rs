//! Exact engine for nowhere-zero Z3 flows on bordered multigraphs,
//! flow-critical canvases and easels, and generation of the classes they
//! form.

pub mod cli;
pub mod critical;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod reduce;
pub mod verify;
pub mod z3;

pub use error::{Error, Result};
pub use z3::Z3;
