//! Exact computation in `R = F2<a,x : a = a^2 x>`, the Jacobson algebra
//! `F2<b,c : bc = 1>` and small explicit finite rings, with bounded-degree
//! verification suites for the structure of `R`.

pub mod cli;
pub mod dkring;
pub mod error;
pub mod finring;
pub mod gf2la;
pub mod grammar;
pub mod jacobson;
pub mod report;
pub mod rewrite;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
