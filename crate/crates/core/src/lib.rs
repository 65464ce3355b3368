//! Exact computation of generalized inverses in finite rings.
//!
//! Rings come in three backends ([`Ring`]): integers modulo `n`, matrices over
//! a prime field, and structure-constant algebras. On top of them, [`ginv`]
//! builds inner, outer and reflexive inverse sets, annihilators and principal
//! ideals, and [`lab`] turns the classical results about them into checks
//! that scan a ring and report a verdict with witnesses.

pub mod error;
pub mod example;
pub mod ginv;
pub mod lab;
pub mod matrix;
pub mod parse;
pub mod rewrite;
pub mod ring;
pub mod set;

pub use error::{Error, Result};
pub use example::build_example_ring;
pub use parse::{parse_element, render};
pub use ring::{Elem, Ring, RingKind, RingSpec};
pub use set::ElemSet;
