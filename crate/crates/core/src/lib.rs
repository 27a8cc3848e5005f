//! Simultaneous conjugacy classes of commuting and arbitrary tuples in small
//! finite groups: exact generating functions, closed forms for p-group
//! families, isoclinism testing and brute-force oracles.

pub mod analysis;
pub mod bench;
pub mod catalog;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod families;
pub mod genfun;
pub mod group;
pub mod isoclinism;
pub mod oracle;
pub mod spec_file;

pub use error::{Error, Result};
