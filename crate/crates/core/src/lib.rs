//! Exact computations with the commutative algebras attached to simply-laced
//! root systems and with their associative subalgebras.
//!
//! Everything is over the rationals; no floating point is used anywhere.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bplus;
pub mod exactlin;
pub mod niemeier;
pub mod rational;
pub mod rootalgebra;
pub mod rootsys;

pub use algebra::{AlgebraBuilder, AlgebraError, DecompositionChecks, DecompositionReport, Element, SpanReport, StructureAlgebra};
pub use rational::{q, Rational};
pub use rootsys::{Family, Root, RootSystem, RootSystemError, SimpleType};
pub use rootalgebra::{RootAlgebra, RootAlgebraError};
pub use bplus::{BPlusAlgebra, BPlusError, PhiMap, Theorem31Report};
pub use niemeier::{F2QuadSpace, NiemeierEntry, NiemeierError};
