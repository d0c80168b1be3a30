//! Exact-arithmetic Clifford algebras `Cl(p,q)` and `C_n`.
//!
//! The crate is organised bottom-up:
//!
//! * [`num`], [`matrix`] — exact scalars (rationals, Gaussian rationals,
//!   quaternions, surds) and dense matrices over them;
//! * [`algebra`] — blades, multivectors, the fundamental automorphisms,
//!   volume element and center;
//! * [`classify`] — ring type, periodic table, Brauer–Wall classes;
//! * [`vee`] — Salingaros finite groups of signed blades;
//! * [`spinor`] — primitive idempotents, minimal ideals, matrix
//!   representations;
//! * [`reflect`] — matrices `W`, `E`, `C` of the discrete automorphisms and
//!   the resulting groups and Pin covers;
//! * [`quotient`] — the ε-homomorphism of odd-dimensional algebras and the
//!   charge-conjugation pseudoautomorphism;
//! * [`lorentz`] — Gel'fand–Naimark operators and permutation relations with
//!   the discrete symmetries;
//! * [`field`] — Dirac–Hestenes spinors, helicity projectors and the
//!   multivector form of the electromagnetic field;
//! * [`audit`] — a consolidated self-check run.

pub mod algebra;
pub mod audit;
pub mod classify;
pub mod error;
pub mod field;
pub mod lorentz;
pub mod matrix;
pub mod num;
pub mod quotient;
pub mod reflect;
pub mod spinor;
pub mod vee;

pub use algebra::{Blade, GroundField, Multivector, Signature};
pub use error::{Error, Result};
pub use matrix::Mat;
pub use num::{Cq, Quat, Surd, Q};

/// Version tag carried by every JSON document the crate emits.
pub const SCHEMA: &str = "cliffkit/1";
