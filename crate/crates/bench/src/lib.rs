//! Shared fixtures for the criterion benchmarks.

use hopf_ent::{ComplexMatrix, DeformParam};

/// Deformation grid used across the benchmarks.
pub const Q_GRID: [f64; 6] = [0.5, 1.0, 1.5, 2.0, 3.0, 5.0];

pub fn deform(q: f64) -> DeformParam {
    DeformParam::new(q).expect("benchmark q is positive")
}

/// Closed-form unitary at half a period, `αt = π`.
pub fn half_period_unitary(q: f64) -> ComplexMatrix {
    let q = deform(q);
    hopf_ent::evolve_closed(q, std::f64::consts::PI / q.alpha()).u
}
