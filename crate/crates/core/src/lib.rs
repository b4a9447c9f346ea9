//! Exact arithmetic for chain groups of compact groups, spectral
//! bimodules over commutative algebras, and the associated graded
//! algebras built from families of unitary representations.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod bimodule;
pub mod chain;
pub mod checks;
pub mod error;
pub mod fusion;
pub mod group;
pub mod linalg;
pub mod scalar;
