//! Analytic maximum of `E(U(t))` over `t`.
//!
//! `E` depends on `t` only through `c = cos(αt)`, and `Δ(c)` is a convex
//! quadratic with vertex `c* = −4q²/(q²−1)²`. When `c* ∈ [−1, 1]`
//! (i.e. `q ≥ 1 + √2` or `q ≤ √2 − 1`) the minimum of `Δ` is zero and
//! `E_max = 1/2`; otherwise the minimum sits at `c = −1` where
//! `Δ = (q⁴ − 6q² + 1)²`.

/// Exact saturation threshold `1 + √2`.
pub const SATURATION_Q: f64 = 1.0 + std::f64::consts::SQRT_2;

pub fn analytic_e_max(q: f64) -> f64 {
    let q2 = q * q;
    let m = (q2 - 1.0) * (q2 - 1.0);
    if m == 0.0 {
        return 0.0;
    }
    if -4.0 * q2 / m >= -1.0 {
        return 0.5;
    }
    let d = q2 * q2 - 6.0 * q2 + 1.0;
    0.5 - d * d / (2.0 * (q2 + 1.0).powi(4))
}
