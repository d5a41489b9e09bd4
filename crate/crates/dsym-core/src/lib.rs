//! Exact computation in the ring of double symmetric functions and its dual.
#![no_std]
extern crate alloc;

pub mod apoly;
pub mod basis;
pub mod cauchy;
pub mod classical;
pub mod double_schur;
pub mod flagged;
pub mod partition;
pub mod rational;
pub mod series;
pub mod ring;
pub mod spec;
pub mod transition;
pub mod tableaux;
pub mod xpoly;

pub use apoly::{AMonomial, APoly, AlgebraError};
pub use partition::{Cell, FrobeniusCoords, GrowthChain, Partition, ShapeError, SkewShape};
pub use rational::Rational;
pub use spec::{ASpec, CustomSpec};
