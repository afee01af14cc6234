//! Two-qubit time evolution `U(t) = exp(-i t H_AB(q))`.
//!
//! `H_AB` obeys `H³ = α² H` with spectrum `{0, 0, ±α}`, so the exponential
//! collapses to the quadratic polynomial
//! `U = 1 − i (s/α) H + ((c − 1)/α²) H²` with `c = cos αt`, `s = sin αt`.
//! [`evolve_closed`] evaluates that polynomial, [`evolve_explicit`] the
//! hand-expanded 4×4 matrix, and [`evolve_oracle`] a Jacobi
//! eigendecomposition; the three are compared in tests.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::Result;
use crate::hopf::{build_hab_compact, build_hab_via_coproduct};
use crate::matrix::{eigvalsh, exp_hermitian, ComplexMatrix};
use crate::qsu2::{DeformParam, IrrepMatrices};

/// One point on the closed-form trajectory.
#[derive(Debug, Clone)]
pub struct EvolutionPoint {
    pub q: DeformParam,
    pub t: f64,
    /// `cos(α t)`
    pub c: f64,
    /// `sin(α t)`
    pub s: f64,
    pub u: ComplexMatrix,
}

/// Natural period `2π/α` of the evolution.
pub fn period(q: DeformParam) -> f64 {
    TAU / q.alpha()
}

/// `‖H³ − α² H‖_F` for the compact two-qubit Hamiltonian.
pub fn cubic_defect(q: DeformParam) -> f64 {
    let h = build_hab_compact(q);
    cubic_defect_of(&h, q.alpha())
}

/// `‖H³ − α² H‖_F` for an arbitrary Hamiltonian and scale `α`.
pub fn cubic_defect_of(h: &ComplexMatrix, alpha: f64) -> f64 {
    let h3 = &(h * h) * h;
    h3.frob_dist(&h.scale_real(alpha * alpha)).expect("square")
}

/// Ascending eigenvalues of `H_AB(q)`; expected `{−α, 0, 0, α}`.
pub fn spectrum(q: DeformParam) -> Result<Vec<f64>> {
    eigvalsh(&build_hab_compact(q))
}

/// Closed-form `U(t)` from the quadratic matrix polynomial.
pub fn evolve_closed(q: DeformParam, t: f64) -> EvolutionPoint {
    let alpha = q.alpha();
    let (s, c) = (alpha * t).sin_cos();
    let h = build_hab_compact(q);
    let h2 = &h * &h;
    let lin = h.scale(Complex64::new(0.0, -s / alpha));
    let quad = h2.scale_real((c - 1.0) / (alpha * alpha));
    let u = &(&ComplexMatrix::identity(4) + &lin) + &quad;
    EvolutionPoint { q, t, c, s, u }
}

/// The same unitary written out element by element, with overall prefactor
/// `1/(q² + 1)`.
pub fn evolve_explicit(q: DeformParam, t: f64) -> ComplexMatrix {
    let qq = q.q();
    let q2 = qq * qq;
    let (s, c) = (q.alpha() * t).sin_cos();
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);
    let m = ComplexMatrix::from_complex_rows([
        [
            re(1.0 + q2 * c),
            im(-q2 * s),
            im(-qq * s),
            re(qq * (c - 1.0)),
        ],
        [
            im(-q2 * s),
            re(1.0 + q2 * c),
            re(qq * (c - 1.0)),
            im(-qq * s),
        ],
        [im(-qq * s), re(qq * (c - 1.0)), re(q2 + c), im(-s)],
        [re(qq * (c - 1.0)), im(-qq * s), im(-s), re(q2 + c)],
    ]);
    m.scale_real(1.0 / (q2 + 1.0))
}

/// Numerical `exp(−i t H_AB(q))` via Hermitian eigendecomposition.
pub fn evolve_oracle(q: DeformParam, t: f64) -> Result<ComplexMatrix> {
    exp_hermitian(&build_hab_compact(q), Complex64::new(0.0, -t))
}

/// Numerical evolution under the coproduct-built composite Hamiltonian of
/// an arbitrary spin-l irrep, on the `dim²`-dimensional two-site space.
pub fn evolve_general_l(rep: &IrrepMatrices, t: f64) -> Result<ComplexMatrix> {
    exp_hermitian(&build_hab_via_coproduct(rep), Complex64::new(0.0, -t))
}
