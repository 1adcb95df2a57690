//! Command-line front end: single-point reports, grid tables in CSV or JSON,
//! the torsion and isogeny classifications, and a verification sweep that
//! checks every closed form against orbit enumeration.

pub mod bounds;
pub mod commands;
pub mod document;
pub mod error;
pub mod verify;

pub use commands::{run, Cli, Command};
pub use error::Failure;
