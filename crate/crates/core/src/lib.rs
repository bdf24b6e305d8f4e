//! Permutation symmetry of identical particles.
//!
//! The crate builds the real orthogonal irreducible representations of the
//! symmetric group from Young diagrams, projects product states of `N`
//! particles onto symmetry-adapted vectors with Young operators, and evaluates
//! the physical consequences on a finite one-particle basis: degenerate-state
//! density operators and their group invariance, energies through a trace and
//! through the closed exchange formula, the Slater determinant, and the
//! spin/statistics bookkeeping of composite particles.
//!
//! # Conventions
//!
//! * Permutations act on particle slots `1..=n`. [`Permutation::compose`]`(p, q)`
//!   means "apply `q`, then `p`", i.e. `(p ∘ q)(i) = p(q(i))`.
//! * Standard tableaux of a diagram are listed in last-letter order: the
//!   tableau whose largest entry sits in the lowest row comes first, ties broken
//!   the same way by the next-largest entry. Rows and columns of every
//!   representation matrix follow this order.
//! * `U(p)` moves the content of slot `s` into slot `p(s)`, so
//!   `U(p ∘ q) = U(p) U(q)`. For three particles, `U((1 2 3))` sends the
//!   product `|a⟩|b⟩|c⟩` to `|c⟩|a⟩|b⟩`.
//! * Left action transforms the first tableau index:
//!   `U(P)|[λ] r t⟩ = Σ_r' Γ_r'r(P) |[λ] r' t⟩`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod irreps;
pub mod limits;
pub mod linalg;
pub mod perm;
pub mod physics;
pub mod projection;
pub mod young;

pub use error::{Error, Result};
pub use irreps::{Irrep, IrrepMatrix, RepresentationReport};
pub use limits::Limits;
pub use linalg::Matrix;
pub use perm::{Permutation, Sign};
pub use physics::{
    CompositeParticle, DensityOperator, EnergyReport, InvarianceReport, ModelHamiltonian,
    Statistics,
};
pub use projection::{ProductState, StateVector, SymmetryAdaptedState, TensorSpace};
pub use young::{StandardTableau, YoungDiagram};

pub use num_complex::Complex64;

/// Tag naming the tableau ordering used for every matrix index.
pub const TABLEAU_ORDERING: &str = "last-letter";
