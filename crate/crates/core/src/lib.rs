//! Finite commutative rings, their ideal lattices, and exhaustive checks of
//! factorization properties built on "invertible ideal times radical ideals".

pub mod bitset;
pub mod classify;
pub mod commands;
pub mod construct;
pub mod error;
pub mod expr;
pub mod factor;
pub mod ideal;
pub mod integers;
pub mod iso;
pub mod lattice;
pub mod module;
pub mod ring;
pub mod theorems;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use lattice::{all_ideals, IdealLattice};
pub use ring::{FiniteRing, Ring};
