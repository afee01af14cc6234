//! Operator entanglement and entangling power.
//!
//! Two independent routes compute the linear-entropy operator entanglement
//! `E(U)`:
//!
//! - [`op_entanglement_choi`] builds the Choi state `|U⟩ = (U ⊗ 1)|Φ⁺⟩` on
//!   `(A, B, A', B')`, traces out `BB'` and returns `1 − Tr σ²_{AA'}`;
//! - [`op_entanglement_trace`] evaluates
//!   `1 − Tr(U^{⊗2} T₁₃ U^{†⊗2} T₁₃) / (d_A² d_B²)` with explicit factor swaps.
//!
//! For the coproduct unitary `U(t)` both agree with the closed form
//! [`e_closed`]. Entangling power over Haar product states is available both
//! from the two-qubit formula [`ep_formula`] and by Monte Carlo
//! ([`ep_monte_carlo`]).

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::dynamics::{evolve_closed, evolve_oracle, period};
use crate::error::{Error, Result};
use crate::matrix::{kron, partial_trace, swap_operator, BipartiteDims, ComplexMatrix};
use crate::qsu2::DeformParam;
use crate::rng::SampleStreams;

/// Inputs whose `‖U†U − 1‖_F` exceeds this are rejected.
pub const UNITARITY_TOL: f64 = 1e-8;

/// `E(S) = 1 − 1/(d_A d_B)` for two qubits.
pub const SWAP_ENTANGLEMENT: f64 = 0.75;

/// Minimum sample count accepted by [`ep_monte_carlo`].
pub const MIN_MC_SAMPLES: usize = 100;

const COARSE_GRID: usize = 512;
const GOLDEN_TOL: f64 = 1e-10;

fn check_unitary(u: &ComplexMatrix, dims: BipartiteDims) -> Result<()> {
    dims.check(u)?;
    let defect = u.unitarity_defect();
    if defect > UNITARITY_TOL {
        return Err(Error::NotUnitary(defect));
    }
    Ok(())
}

/// Normalized Choi vector of a unitary, factor order `(A, B, A', B')`.
#[derive(Debug, Clone)]
pub struct ChoiVector {
    pub dims: BipartiteDims,
    pub amplitudes: Vec<Complex64>,
}

impl ChoiVector {
    /// Factor dimensions in `(A, B, A', B')` order.
    pub fn factor_dims(&self) -> [usize; 4] {
        self.dims.doubled()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Amplitudes regrouped as a `(d_A²) × (d_B²)` matrix with row index
    /// `(a, a')` and column index `(b, b')`.
    pub fn regrouped(&self) -> ComplexMatrix {
        let (da, db) = (self.dims.d_a, self.dims.d_b);
        let mut m = ComplexMatrix::zeros(da * da, db * db);
        for a in 0..da {
            for b in 0..db {
                for a2 in 0..da {
                    for b2 in 0..db {
                        let src = ((a * db + b) * da + a2) * db + b2;
                        m[(a * da + a2, b * db + b2)] = self.amplitudes[src];
                    }
                }
            }
        }
        m
    }

    /// Reduced state `σ_{AA'} = Tr_{BB'} |U⟩⟨U|`.
    pub fn reduced_aa(&self) -> Result<ComplexMatrix> {
        let rho = ComplexMatrix::outer(&self.amplitudes, &self.amplitudes);
        partial_trace(&rho, &self.factor_dims(), &[0, 2])
    }
}

/// `|U⟩ = (U ⊗ 1)|Φ⁺⟩`, `|Φ⁺⟩ = d^{-1/2} Σ_i |i⟩|i⟩`, `d = d_A d_B`.
pub fn choi_vector(u: &ComplexMatrix, dims: BipartiteDims) -> Result<ChoiVector> {
    check_unitary(u, dims)?;
    let d = dims.total();
    let amp = 1.0 / (d as f64).sqrt();
    let mut phi = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 0..d {
        phi[i * d + i] = Complex64::new(amp, 0.0);
    }
    let lifted = kron(u, &ComplexMatrix::identity(d));
    Ok(ChoiVector {
        dims,
        amplitudes: lifted.apply(&phi)?,
    })
}

/// `E(U) = 1 − Tr σ²_{AA'}` from the Choi state.
pub fn op_entanglement_choi(u: &ComplexMatrix, dims: BipartiteDims) -> Result<f64> {
    let sigma = choi_vector(u, dims)?.reduced_aa()?;
    let purity = (&sigma * &sigma).trace()?.re;
    Ok(1.0 - purity)
}

fn doubled_swaps(dims: BipartiteDims) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let d4 = dims.doubled();
    Ok((swap_operator(&d4, 0, 2)?, swap_operator(&d4, 1, 3)?))
}

/// `Tr(U^{⊗2} · left · U^{†⊗2} · T₁₃)`.
fn swap_trace(u: &ComplexMatrix, left: &ComplexMatrix, t13: &ComplexMatrix) -> Result<Complex64> {
    let uu = kron(u, u);
    let uu_dag = uu.dagger();
    uu.matmul(left)?.matmul(&uu_dag)?.matmul(t13)?.trace()
}

/// `E(U) = 1 − Tr(U^{⊗2} T₁₃ U^{†⊗2} T₁₃) / (d_A² d_B²)`.
pub fn op_entanglement_trace(u: &ComplexMatrix, dims: BipartiteDims) -> Result<f64> {
    check_unitary(u, dims)?;
    let (t13, _) = doubled_swaps(dims)?;
    let norm = (dims.total() * dims.total()) as f64;
    Ok(1.0 - swap_trace(u, &t13, &t13)?.re / norm)
}

/// `Tr(U^{⊗2} T₂₄ U^{†⊗2} T₁₃)`; identically 4 along the coproduct flow.
pub fn mixed_trace(u: &ComplexMatrix, dims: BipartiteDims) -> Result<Complex64> {
    check_unitary(u, dims)?;
    let (t13, t24) = doubled_swaps(dims)?;
    swap_trace(u, &t24, &t13)
}

/// Mixed invariant `Ẽ(U) = 1 − Tr(U^{⊗2} T₂₄ U^{†⊗2} T₁₃)/16`, which equals
/// `E(U·S)` for the two-qubit swap `S`.
pub fn mixed_invariant(u: &ComplexMatrix) -> Result<f64> {
    Ok(1.0 - mixed_trace(u, BipartiteDims::QUBITS)?.re / 16.0)
}

/// Closed-form `E(U(t)) = 1/2 − Δ(q,t) / (2 (q²+1)⁴)` with
/// `Δ = (q²−1)⁴ c² + 8 q² (q²−1)² c + 16 q⁴`, `c = cos(α t)`.
///
/// Evaluated as `m (1 − c) (m (1 + c) + 8 q²) / (2 (q²+1)⁴)` with
/// `m = (q²−1)²`, which is the same polynomial but non-negative term by
/// term, so `q = 1` and `c = 1` give exactly zero.
pub fn e_closed(q: DeformParam, t: f64) -> f64 {
    let c = (q.alpha() * t).cos();
    let q2 = q.q() * q.q();
    let m = (q2 - 1.0) * (q2 - 1.0);
    let p2 = (q2 + 1.0) * (q2 + 1.0);
    m * (1.0 - c) * (m * (1.0 + c) + 8.0 * q2) / (2.0 * p2 * p2)
}

/// Two-qubit entangling power over Haar product states,
/// `e_p = (4/9) [E(U) + E(U·S) − 3/4]`.
pub fn ep_formula(u: &ComplexMatrix) -> Result<f64> {
    let e = op_entanglement_trace(u, BipartiteDims::QUBITS)?;
    let e_tilde = mixed_invariant(u)?;
    Ok(4.0 / 9.0 * (e + e_tilde - SWAP_ENTANGLEMENT))
}

/// Haar-random pure qubit from two independent standard complex Gaussians.
pub fn haar_qubit<R: Rng + ?Sized>(rng: &mut R) -> [Complex64; 2] {
    let mut draw = || Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let a = draw();
    let b = draw();
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    [a / n, b / n]
}

/// Independent Haar-random states for qubits A and B.
pub fn haar_product_state<R: Rng + ?Sized>(rng: &mut R) -> ([Complex64; 2], [Complex64; 2]) {
    let a = haar_qubit(rng);
    let b = haar_qubit(rng);
    (a, b)
}

/// `1 − Tr ρ_A²` of a two-qubit pure state `(ψ₀₀, ψ₀₁, ψ₁₀, ψ₁₁)`.
///
/// For a normalized state this is `2 |ψ₀₀ψ₁₁ − ψ₀₁ψ₁₀|²`; the determinant
/// form vanishes to rounding on product states instead of leaving the
/// `1 − (1 − ε)` residue of the purity route.
pub fn linear_entropy_two_qubit(psi: &[Complex64; 4]) -> f64 {
    let n2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    let det = psi[0] * psi[3] - psi[1] * psi[2];
    2.0 * det.norm_sqr() / (n2 * n2)
}

/// Monte Carlo entangling-power estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    /// Sample standard deviation over `√n`.
    pub std_error: f64,
    pub n_samples: usize,
}

impl McEstimate {
    /// `(estimate − reference) / std_error`, with the standard error floored
    /// at `1e-12` so exactly-degenerate runs do not divide by zero.
    pub fn z_score(&self, reference: f64) -> f64 {
        (self.estimate - reference) / self.std_error.max(1e-12)
    }
}

/// Average linear entropy of `U |ψ_A⟩⊗|ψ_B⟩` over Haar product inputs.
///
/// Sample `i` draws from [`SampleStreams::stream`]`(i)`, and the reduction
/// runs in index order, so the result is bit-identical for any thread count.
pub fn ep_monte_carlo(u: &ComplexMatrix, n_samples: usize, seed: u64) -> Result<McEstimate> {
    check_unitary(u, BipartiteDims::QUBITS)?;
    if n_samples < MIN_MC_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_MC_SAMPLES} samples, got {n_samples}"
        )));
    }
    let streams = SampleStreams::new(seed);
    let samples: Vec<f64> = (0..n_samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = streams.stream(i);
            let (a, b) = haar_product_state(&mut rng);
            let input = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]];
            let out = u.apply(&input).expect("4x4 unitary");
            linear_entropy_two_qubit(&[out[0], out[1], out[2], out[3]])
        })
        .collect();

    let n = n_samples as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    Ok(McEstimate {
        estimate: mean,
        std_error: (var / n).sqrt(),
        n_samples,
    })
}

/// Maximum of `E(U(t))` over one period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeMaximum {
    pub t_star: f64,
    pub e_max: f64,
    /// `E` at `t_star` recomputed from the numerically exponentiated unitary
    /// through the Choi route.
    pub e_numeric: f64,
}

fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    0.5 * (a + b)
}

/// Maximize the closed-form `E(U(t))` over `t ∈ [0, 2π/α]`: a 512-point
/// grid followed by golden-section refinement of the best cell down to a
/// bracket of `1e-10`.
pub fn maximize_e_over_t(q: DeformParam) -> Result<TimeMaximum> {
    let p = period(q);
    let step = p / (COARSE_GRID - 1) as f64;
    let f = |t: f64| e_closed(q, t);
    let best = (0..COARSE_GRID)
        .max_by(|&i, &j| f(i as f64 * step).total_cmp(&f(j as f64 * step)))
        .expect("non-empty grid");
    let lo = best.saturating_sub(1) as f64 * step;
    let hi = ((best + 1).min(COARSE_GRID - 1)) as f64 * step;
    let refined = golden_section_max(f, lo, hi, GOLDEN_TOL);
    let grid_t = best as f64 * step;
    let t_star = if f(refined) >= f(grid_t) {
        refined
    } else {
        grid_t
    };
    let u = evolve_oracle(q, t_star)?;
    Ok(TimeMaximum {
        t_star,
        e_max: f(t_star),
        e_numeric: op_entanglement_choi(&u, BipartiteDims::QUBITS)?,
    })
}

/// One sweep row: closed-form and brute-force entanglement measures of
/// `U(t)` at deformation `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementRecord {
    pub q: f64,
    pub t: f64,
    /// Closed-form `E(U(t))`.
    pub e: f64,
    /// Mixed invariant `Ẽ = E(U S)`.
    pub e_tilde: f64,
    /// `(4/9)(E + Ẽ − 3/4)`.
    pub ep: f64,
    /// `|E_choi − E_trace|` on the closed-form unitary.
    pub choi_vs_trace_dev: f64,
    /// `|E_closed − E_choi|` on the numerically exponentiated unitary.
    pub closed_vs_numeric_dev: f64,
}

impl EntanglementRecord {
    pub fn compute(q: DeformParam, t: f64) -> Result<Self> {
        let dims = BipartiteDims::QUBITS;
        let u = evolve_closed(q, t).u;
        let e = e_closed(q, t);
        let e_choi = op_entanglement_choi(&u, dims)?;
        let e_trace = op_entanglement_trace(&u, dims)?;
        let e_tilde = mixed_invariant(&u)?;
        let numeric = op_entanglement_choi(&evolve_oracle(q, t)?, dims)?;
        Ok(Self {
            q: q.q(),
            t,
            e,
            e_tilde,
            ep: 4.0 / 9.0 * (e_trace + e_tilde - SWAP_ENTANGLEMENT),
            choi_vs_trace_dev: (e_choi - e_trace).abs(),
            closed_vs_numeric_dev: (e - numeric).abs(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kron;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn dq(q: f64) -> DeformParam {
        DeformParam::new(q).unwrap()
    }

    fn swap() -> ComplexMatrix {
        swap_operator(&[2, 2], 0, 1).unwrap()
    }

    fn cnot() -> ComplexMatrix {
        ComplexMatrix::from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
        ])
    }

    const Q: BipartiteDims = BipartiteDims::QUBITS;

    #[test]
    fn choi_of_identity_is_phi_plus() {
        let v = choi_vector(&ComplexMatrix::identity(4), Q).unwrap();
        for (k, z) in v.amplitudes.iter().enumerate() {
            let expected = if k % 5 == 0 { 0.5 } else { 0.0 };
            assert_eq!(z.re, expected);
            assert_eq!(z.im, 0.0);
        }
        assert!((v.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn choi_regrouping_is_product_at_q_one() {
        let u = evolve_closed(dq(1.0), 0.9).u;
        let v = choi_vector(&u, Q).unwrap();
        let m = v.regrouped();
        // rank one ⇔ all 2×2 minors vanish
        for r in 0..4 {
            for s in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let minor = m[(r, c)] * m[(s, d)] - m[(r, d)] * m[(s, c)];
                        assert!(minor.norm() < 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn choi_rejects_non_unitary() {
        let m = ComplexMatrix::identity(4).scale_real(1.1);
        assert!(matches!(choi_vector(&m, Q), Err(Error::NotUnitary(_))));
        assert!(matches!(
            choi_vector(&ComplexMatrix::identity(3), Q),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn known_gates() {
        for route in [op_entanglement_choi, op_entanglement_trace] {
            assert!(route(&ComplexMatrix::identity(4), Q).unwrap().abs() < 1e-15);
            assert!((route(&swap(), Q).unwrap() - 0.75).abs() < 1e-15);
            assert!((route(&cnot(), Q).unwrap() - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn trace_route_at_c_zero() {
        // αt = π/2: E = 1/2 − 256/1250
        let q = dq(2.0);
        let t = PI / 2.0 / q.alpha();
        let u = evolve_closed(q, t).u;
        let expected = 0.5 - 256.0 / 1250.0;
        assert!((op_entanglement_trace(&u, Q).unwrap() - expected).abs() < 1e-12);
        assert!((op_entanglement_choi(&u, Q).unwrap() - expected).abs() < 1e-12);
        assert!((e_closed(q, t) - expected).abs() < 1e-12);
    }

    fn e_from_delta(q: f64, t: f64) -> f64 {
        let alpha = q + 1.0 / q;
        let c = (alpha * t).cos();
        let q2 = q * q;
        let delta = (q2 - 1.0).powi(4) * c * c + 8.0 * q2 * (q2 - 1.0).powi(2) * c + 16.0 * q2 * q2;
        0.5 - delta / (2.0 * (q2 + 1.0).powi(4))
    }

    #[test]
    fn factored_form_matches_delta_form() {
        for q in [0.2, 0.5, 1.0, 1.7, 2.0, 3.0, 8.0] {
            for k in 0..50 {
                let t = 0.13 * k as f64;
                assert!((e_closed(dq(q), t) - e_from_delta(q, t)).abs() < 1e-13);
                assert!(e_closed(dq(q), t) >= 0.0);
            }
        }
        // c = −1 at q = 2: Δ = (q⁴ − 6q² + 1)² = 49
        assert!((e_from_delta(2.0, PI / 2.5) - (0.5 - 49.0 / 1250.0)).abs() < 1e-15);
    }

    #[test]
    fn closed_form_checks() {
        for t in [0.0, 0.5, 2.0, 11.0] {
            assert_eq!(e_closed(dq(1.0), t), 0.0);
        }
        for q in [0.3, 2.0, 7.0] {
            assert!(e_closed(dq(q), 0.0).abs() < 1e-15);
        }
        let q = dq(2.0);
        assert!((e_closed(q, PI / q.alpha()) - 0.4608).abs() < 1e-14);
    }

    #[test]
    fn mixed_invariant_values() {
        assert!(mixed_invariant(&swap()).unwrap().abs() < 1e-15);
        assert!((mixed_invariant(&ComplexMatrix::identity(4)).unwrap() - 0.75).abs() < 1e-15);
        for q in [0.5, 2.0, 3.0] {
            for t in [0.1, 1.0, 2.2] {
                let u = evolve_closed(dq(q), t).u;
                let tr = mixed_trace(&u, Q).unwrap();
                assert!((tr.re - 4.0).abs() < 1e-12 && tr.im.abs() < 1e-12);
                let us = &u * &swap();
                let via_choi = op_entanglement_choi(&us, Q).unwrap();
                assert!((mixed_invariant(&u).unwrap() - via_choi).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn entangling_power_formula() {
        assert!(ep_formula(&swap()).unwrap().abs() < 1e-15);
        assert!((ep_formula(&cnot()).unwrap() - 2.0 / 9.0).abs() < 1e-15);
        let q = dq(2.0);
        let u = evolve_closed(q, PI / q.alpha()).u;
        assert!((ep_formula(&u).unwrap() - 0.2048).abs() < 1e-12);
    }

    #[test]
    fn haar_states_are_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let (a, b) = haar_product_state(&mut rng);
            for v in [a, b] {
                let n = v[0].norm_sqr() + v[1].norm_sqr();
                assert!((n - 1.0).abs() < 1e-12);
            }
            let prod = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]];
            assert!(linear_entropy_two_qubit(&prod) < 1e-30);
        }
    }

    #[test]
    fn haar_sigma_z_mean_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let n = 100_000;
        let mean: f64 = (0..n)
            .map(|_| {
                let s = haar_qubit(&mut rng);
                s[0].norm_sqr() - s[1].norm_sqr()
            })
            .sum::<f64>()
            / n as f64;
        assert!(mean.abs() < 4.0 / (n as f64).sqrt());
    }

    #[test]
    fn linear_entropy_of_bell_state() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let z = Complex64::new(0.0, 0.0);
        let bell = [Complex64::new(h, 0.0), z, z, Complex64::new(h, 0.0)];
        assert!((linear_entropy_two_qubit(&bell) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn monte_carlo_identity_and_errors() {
        let est = ep_monte_carlo(&ComplexMatrix::identity(4), 500, 3).unwrap();
        assert!(est.estimate < 1e-30);
        assert!(est.z_score(0.0).abs() < 1e-10);
        assert!(ep_monte_carlo(&ComplexMatrix::identity(4), 99, 3).is_err());
        assert!(ep_monte_carlo(&ComplexMatrix::identity(4).scale_real(2.0), 500, 3).is_err());
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let u = cnot();
        let a = ep_monte_carlo(&u, 2000, 99).unwrap();
        let b = ep_monte_carlo(&u, 2000, 99).unwrap();
        assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let c = pool.install(|| ep_monte_carlo(&u, 2000, 99).unwrap());
        assert_eq!(a.estimate.to_bits(), c.estimate.to_bits());
        assert_eq!(a.std_error.to_bits(), c.std_error.to_bits());
    }

    #[test]
    fn local_unitaries_leave_e_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let u = evolve_closed(dq(2.3), 0.7).u;
        let e0 = op_entanglement_choi(&u, Q).unwrap();
        let local = |rng: &mut ChaCha8Rng| {
            let a = haar_qubit(rng);
            // [[a0, −a1*], [a1, a0*]] is SU(2)
            ComplexMatrix::from_complex_rows([[a[0], -a[1].conj()], [a[1], a[0].conj()]])
        };
        for _ in 0..10 {
            let left = kron(&local(&mut rng), &local(&mut rng));
            let right = kron(&local(&mut rng), &local(&mut rng));
            let w = &(&left * &u) * &right;
            assert!((op_entanglement_choi(&w, Q).unwrap() - e0).abs() < 1e-10);
            assert!((op_entanglement_trace(&w, Q).unwrap() - e0).abs() < 1e-10);
        }
    }

    #[test]
    fn maximization() {
        let m = maximize_e_over_t(dq(1.0)).unwrap();
        assert!(m.e_max.abs() <= 1e-12);
        let m = maximize_e_over_t(dq(3.0)).unwrap();
        assert!((m.e_max - 0.5).abs() <= 1e-9);
        assert!((m.e_numeric - m.e_max).abs() < 1e-10);
        let m = maximize_e_over_t(dq(2.0)).unwrap();
        assert!((m.e_max - 0.4608).abs() <= 1e-9);
    }

    #[test]
    fn record_row() {
        let r = EntanglementRecord::compute(dq(2.0), 0.4).unwrap();
        assert!((r.e_tilde - 0.75).abs() < 1e-12);
        assert!((r.ep - 4.0 / 9.0 * r.e).abs() < 1e-12);
        assert!(r.choi_vs_trace_dev < 1e-12 && r.closed_vs_numeric_dev < 1e-10);
    }
}
