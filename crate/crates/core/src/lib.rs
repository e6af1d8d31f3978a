//! Low-index subgroups of Coxeter tetrahedron groups and tetrahedron
//! Kleinian groups, found as transitive permutation representations.

pub mod assignment;
pub mod cli;
pub mod coloring;
pub mod enumerator;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod presentation;
pub mod stabilizer;
pub mod table7;
pub mod word;

pub use error::{Error, Result};
