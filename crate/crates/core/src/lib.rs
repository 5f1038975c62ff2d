//! Exact computations with Mackey algebras of finite groups.
//!
//! The crate builds the Mackey algebra `μ(G)` and its `p`-local subalgebra
//! `μ¹(G)` from the span calculus on `G`-sets, and studies them with exact
//! linear algebra over finite fields and the rationals: blocks, Cartan
//! matrices, the symmetric-algebra test, `p`-permutation modules and the
//! decomposition matrix built from ordinary characters.
//!
//! Everything here is `no_std` with `alloc`; file formats, caching and the
//! command line live in the companion `mackey` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chartab;
pub mod decomp;
pub mod error;
pub mod exalg;
pub mod field;
pub mod grp;
pub mod gset;
pub mod linalg;
pub mod mackey;
pub mod modrep;

pub use error::{Error, Result};
