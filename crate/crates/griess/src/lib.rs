//! File formats, embedded data, verification reports and the command-line
//! front end for the exact computations in `griess-core`.

pub mod cli;
pub mod data;
pub mod formats;
pub mod verify;

pub use griess_core as core;
