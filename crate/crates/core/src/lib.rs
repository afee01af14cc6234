//! Quantum-group coproduct dynamics and operator entanglement.
//!
//! The crate builds spin-l representations of `U_q(su(2))`, composes them
//! with the deformed coproduct, evolves the resulting two-qubit Hamiltonian
//! in closed form, and measures operator entanglement and entangling power.
//! Every closed-form result has an independent brute-force counterpart so
//! the two can be compared numerically.
//!
//! Modules, bottom-up:
//!
//! - [`matrix`]: dense complex matrices, Kronecker products, partial traces,
//!   factor swaps and the Hermitian exponential.
//! - [`qsu2`]: q-numbers and spin-l irreps.
//! - [`hopf`]: coproducts and the composite Hamiltonian.
//! - [`dynamics`]: closed-form and numerical time evolution.
//! - [`entangle`]: operator entanglement, mixed invariant, entangling power.
//! - [`rng`]: counter-based sampling streams for Monte Carlo.

#![forbid(unsafe_code)]

pub mod dynamics;
pub mod entangle;
pub mod error;
pub mod hopf;
pub mod matrix;
pub mod qsu2;
pub mod rng;

pub use num_complex::Complex64;

pub use dynamics::{evolve_closed, evolve_oracle, period, EvolutionPoint};
pub use entangle::{
    e_closed, ep_formula, ep_monte_carlo, maximize_e_over_t, mixed_invariant, op_entanglement_choi,
    op_entanglement_trace, ChoiVector, EntanglementRecord, McEstimate, TimeMaximum,
};
pub use error::{Error, Result};
pub use hopf::{build_hab_compact, build_hab_via_coproduct};
pub use matrix::{BipartiteDims, ComplexMatrix};
pub use qsu2::{DeformParam, Generator, IrrepMatrices, SpinLabel};
