//! Functional graphs of endofunctions on `{0, …, n-1}` and the functions
//! that commute with them.
//!
//! The crate decomposes a functional graph into pseudocycles (one directed
//! cycle with rooted trees hanging off it), computes canonical forms of
//! those pieces, and counts the centralizer `C(f) = {g : f∘g = g∘f}` and
//! its bijective part exactly. Every count can be reproduced by the
//! brute-force routines in [`oracle`].
//!
//! Counting code is generic over a [`Counter`] type. [`Count`] (an
//! arbitrary precision unsigned integer) is what the rest of the crate
//! and the CLI use; the fixed width [`Count64`] is handy for hot loops
//! where the values are known to be small.

pub mod canonical;
pub mod centralizer;
pub mod cli;
pub mod decompose;
mod error;
pub mod extremal;
pub mod funcgraph;
pub mod homcount;
mod num;
pub mod oracle;

pub use error::{Error, Result};
pub use funcgraph::Endofunction;
pub use num::{factorial, from_usize, Counter};

/// Exact unbounded count. Products like `(t+1)^t` leave 64 bits quickly.
pub type Count = num_bigint::BigUint;

/// Fixed width count for small instances.
pub type Count64 = u64;
