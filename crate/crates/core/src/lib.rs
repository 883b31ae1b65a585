//! Arithmetic in group algebras over the two-element field, two-sided ideal
//! closure, quotient-ring unit enumeration, and the verification commands
//! that certify which symmetric and alternating groups are unit groups of
//! rings.
//!
//! Permutations compose right to left: `(a * b)(i) = a(b(i))`. Every other
//! module (Cayley tables, conjugation, group-algebra products) uses this
//! convention.

pub mod error;
pub mod f2la;
pub mod findex;
pub mod galg;
pub mod ideal;
pub mod perm;
pub mod quotient;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
pub use f2la::{BitMatrix, BitVector, EchelonBasis};
pub use findex::{IndexedGroup, PermGroup, Simplicity};
pub use galg::AlgebraElement;
pub use ideal::Ideal;
pub use perm::{PermSet, Permutation};
pub use quotient::{F2AlgebraTable, QuotientRing, UnitGroupReport};
