//! Deformed coproduct on two-site tensor products and the composite
//! Hamiltonian it induces.
//!
//! The coproduct used here is
//!
//! ```text
//! Δ(J±)          = J± ⊗ q^{J_z} + q^{-J_z} ⊗ J±
//! Δ(J_z)         = J_z ⊗ 1 + 1 ⊗ J_z
//! Δ(q^{J_z/2})   = q^{J_z/2} ⊗ q^{J_z/2}
//! ```
//!
//! and the flip `τ` is conjugation by the factor swap on `d ⊗ d`.

use num_complex::Complex64;

use crate::matrix::{eigh, kron, swap_operator, ComplexMatrix};
use crate::qsu2::{
    build_irrep, build_single_h, q_number, q_power_jz, DeformParam, IrrepMatrices, SpinLabel,
};

/// Raising or lowering ladder generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Raise,
    Lower,
}

/// `Δ(J±) = J± ⊗ q^{J_z} + q^{-J_z} ⊗ J±`.
pub fn coproduct_jpm(rep: &IrrepMatrices, which: Ladder) -> ComplexMatrix {
    let j = match which {
        Ladder::Raise => &rep.jp,
        Ladder::Lower => &rep.jm,
    };
    let k = q_power_jz(rep, 1.0);
    let k_inv = q_power_jz(rep, -1.0);
    &kron(j, &k) + &kron(&k_inv, j)
}

/// Primitive `Δ(J_z) = J_z ⊗ 1 + 1 ⊗ J_z`.
pub fn coproduct_jz(rep: &IrrepMatrices) -> ComplexMatrix {
    let id = ComplexMatrix::identity(rep.dim());
    &kron(&rep.jz, &id) + &kron(&id, &rep.jz)
}

/// Group-like `Δ(q^{J_z/2}) = q^{J_z/2} ⊗ q^{J_z/2}`.
pub fn coproduct_qjz_half(rep: &IrrepMatrices) -> ComplexMatrix {
    let k = q_power_jz(rep, 0.5);
    kron(&k, &k)
}

/// Factor swap on `d ⊗ d`; realizes the flip map `τ` by conjugation.
pub fn flip_operator(dim: usize) -> ComplexMatrix {
    swap_operator(&[dim, dim], 0, 1).expect("equal factor dimensions")
}

/// `τ ∘ X = SWAP · X · SWAP` for an operator on `d ⊗ d`.
pub fn flip(op: &ComplexMatrix, dim: usize) -> ComplexMatrix {
    let s = flip_operator(dim);
    &(&s * op) * &s
}

/// Composite Hamiltonian `Δ(H) = Δ(q^{J_z/2}) Δ(J_+ + J_-) Δ(q^{J_z/2})`.
pub fn build_hab_via_coproduct(rep: &IrrepMatrices) -> ComplexMatrix {
    let k = coproduct_qjz_half(rep);
    let x = &coproduct_jpm(rep, Ladder::Raise) + &coproduct_jpm(rep, Ladder::Lower);
    &(&k * &x) * &k
}

/// Compact two-qubit form `σ_x ⊗ 1 + q^{2J_z} ⊗ σ_x`, i.e.
///
/// ```text
/// | 0  q  1   0  |
/// | q  0  0   1  |
/// | 1  0  0  1/q |
/// | 0  1 1/q  0  |
/// ```
pub fn build_hab_compact(q: DeformParam) -> ComplexMatrix {
    let sx = ComplexMatrix::from_real_rows([[0.0, 1.0], [1.0, 0.0]]);
    let q2jz = ComplexMatrix::real_diagonal(&[q.q(), q.q().recip()]);
    &kron(&sx, &ComplexMatrix::identity(2)) + &kron(&q2jz, &sx)
}

/// Basis permutation `|01⟩ ↔ |10⟩` relating the coproduct-derived and
/// compact two-qubit Hamiltonians.
pub fn qubit_exchange_permutation() -> ComplexMatrix {
    ComplexMatrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// `‖H_compact − P · Δ(H) · P‖_F` for spin ½.
pub fn compact_equivalence_residual(q: DeformParam) -> f64 {
    let rep = build_irrep(SpinLabel::HALF, q);
    let p = qubit_exchange_permutation();
    let permuted = &(&p * &build_hab_via_coproduct(&rep)) * &p;
    build_hab_compact(q).frob_dist(&permuted).expect("4x4")
}

/// `‖Δ(J_+) − τ∘Δ(J_+)‖_F`; vanishes only in the undeformed limit.
pub fn cocommutativity_defect(rep: &IrrepMatrices) -> f64 {
    let d = coproduct_jpm(rep, Ladder::Raise);
    d.frob_dist(&flip(&d, rep.dim())).expect("same shape")
}

/// `[2X]_q` for a Hermitian operator `X`, by spectral functional calculus.
pub fn q_bracket_two(op: &ComplexMatrix, q: DeformParam) -> crate::Result<ComplexMatrix> {
    let eig = eigh(op)?;
    Ok(eig.map(|x| Complex64::new(q_number(2.0 * x, q), 0.0)))
}

/// Single-site Hamiltonian placed on both sites without deformation,
/// `H ⊗ 1 + 1 ⊗ H`; the `q = 1` reference for the composite.
pub fn local_sum(rep: &IrrepMatrices) -> ComplexMatrix {
    let h = build_single_h(rep);
    let id = ComplexMatrix::identity(rep.dim());
    &kron(&h, &id) + &kron(&id, &h)
}
