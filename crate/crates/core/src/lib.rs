//! Finite Moufang loops, Zorn vector matrices over finite fields, loop
//! algebras and their augmentation ideals.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod gfpn;
pub mod linalg;
pub mod loopalg;
pub mod loopcore;
pub mod paige;
pub mod report;
pub mod suite;
pub mod zorn;

pub use error::{Error, Result};
pub use gfpn::{FieldElement, FieldSpec, FiniteField};
pub use loopcore::FiniteLoop;
