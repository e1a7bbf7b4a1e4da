//! Exact combinatorics of stable decorated graphs and their boundary
//! stratifications, checked against brute-force oracles.

pub mod decorated;
pub mod error;
pub mod fs;
pub mod genus0;
pub mod graph;
pub mod halfedge;
pub mod independence;
pub mod linalg;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
