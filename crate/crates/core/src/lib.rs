//! Fuzzy-set membership functions of the Hilbert-space quantum logic.
//!
//! Every yes-no question about a finite quantum system is a projector, and the
//! probability of a yes answer, viewed as a function of the state, is a
//! membership function on the universe of density matrices. This crate builds
//! those functions in closed form for
//!
//! * a single qubit, in Bloch-ball coordinates ([`qubit`]),
//! * two qubits with factorizable observables, in Bloch-matrix coordinates ([`twoqubit`]),
//! * the qutrit nested in the symmetric subspace of two qubits, with its
//!   non-local torus action and the Cartan split of su(4) ([`qutrit`]),
//!
//! and checks every formula against an independent trace or conjugation oracle
//! from [`linalg`]. [`fuzzylogic`] provides the bold and Zadeh connectives and
//! the family-level checks; [`gates`] gives NOT, √NOT and CNOT as exact maps on
//! Bloch coordinates.

pub mod borel;
pub mod cli;
pub mod error;
pub mod fuzzylogic;
pub mod gates;
pub mod linalg;
pub mod qubit;
pub mod qutrit;
pub mod report;
pub mod sampling;
pub mod tolerance;
pub mod twoqubit;
pub mod vec3;
pub mod verify;

pub use error::{Error, Result};
pub use tolerance::Tolerances;
