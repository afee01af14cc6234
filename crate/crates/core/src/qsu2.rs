//! Spin-l representations of `U_q(su(2))` for real positive `q`.
//!
//! Basis vectors are ordered by descending magnetic number
//! `m = l, l-1, …, -l`, so for spin ½ index 0 is `|↑⟩`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Below this distance from 1 the deformation is treated as absent and the
/// exact `q → 1` limits are used.
pub const UNDEFORMED_TOL: f64 = 1e-12;

/// Deformation parameter `q > 0` with cached `α = q + 1/q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformParam {
    q: f64,
    alpha: f64,
}

impl DeformParam {
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q <= 0.0 {
            return Err(Error::InvalidDeformation(q));
        }
        Ok(Self {
            q,
            alpha: q + q.recip(),
        })
    }

    /// The undeformed point `q = 1`.
    pub const fn one() -> Self {
        Self { q: 1.0, alpha: 2.0 }
    }

    #[inline]
    pub fn q(&self) -> f64 {
        self.q
    }

    /// `α = q + q⁻¹ ≥ 2`, the nonzero eigenvalue magnitude of the two-qubit
    /// Hamiltonian.
    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    #[inline]
    pub fn is_undeformed(&self) -> bool {
        (self.q - 1.0).abs() <= UNDEFORMED_TOL
    }

    /// `q^x`.
    #[inline]
    pub fn pow(&self, x: f64) -> f64 {
        self.q.powf(x)
    }

    /// The parameter `1/q`.
    pub fn inverse(&self) -> Self {
        Self::new(self.q.recip()).expect("reciprocal of a positive float is positive")
    }
}

impl fmt::Display for DeformParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}", self.q)
    }
}

/// Spin label stored as `2l` so half-integers are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinLabel {
    two_l: u32,
}

impl SpinLabel {
    pub const HALF: Self = Self { two_l: 1 };
    pub const ONE: Self = Self { two_l: 2 };

    pub const fn from_twice(two_l: u32) -> Self {
        Self { two_l }
    }

    #[inline]
    pub fn two_l(&self) -> u32 {
        self.two_l
    }

    #[inline]
    pub fn l(&self) -> f64 {
        f64::from(self.two_l) / 2.0
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.two_l as usize + 1
    }

    /// Magnetic number of basis index `k` (descending order).
    #[inline]
    pub fn m(&self, k: usize) -> f64 {
        self.l() - k as f64
    }

    pub fn ms(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.dim()).map(|k| self.m(k))
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_l.is_multiple_of(2) {
            write!(f, "{}", self.two_l / 2)
        } else {
            write!(f, "{}/2", self.two_l)
        }
    }
}

/// Algebra generator tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Jz,
    Jp,
    Jm,
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Jz" | "jz" => Ok(Self::Jz),
            "Jp" | "jp" | "J+" => Ok(Self::Jp),
            "Jm" | "jm" | "J-" => Ok(Self::Jm),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// `[x]_q = (q^x - q^-x) / (q - q^-1)`, with the exact limit `x` at `q = 1`.
pub fn q_number(x: f64, q: DeformParam) -> f64 {
    if q.is_undeformed() {
        return x;
    }
    // numerator and denominator share the same pow path so that [1]_q == 1
    (q.pow(x) - q.pow(-x)) / (q.pow(1.0) - q.pow(-1.0))
}

/// The generator triple `(J_z, J_+, J_-)` of a spin-l irrep.
#[derive(Debug, Clone, PartialEq)]
pub struct IrrepMatrices {
    pub label: SpinLabel,
    pub q: DeformParam,
    pub jz: ComplexMatrix,
    pub jp: ComplexMatrix,
    pub jm: ComplexMatrix,
}

impl IrrepMatrices {
    #[inline]
    pub fn dim(&self) -> usize {
        self.label.dim()
    }

    pub fn generator(&self, gen: Generator) -> &ComplexMatrix {
        match gen {
            Generator::Jz => &self.jz,
            Generator::Jp => &self.jp,
            Generator::Jm => &self.jm,
        }
    }

    /// `[2 J_z]_q` by functional calculus on the diagonal `J_z`.
    pub fn q_bracket_two_jz(&self) -> ComplexMatrix {
        let d: Vec<f64> = self.label.ms().map(|m| q_number(2.0 * m, self.q)).collect();
        ComplexMatrix::real_diagonal(&d)
    }
}

/// Spin-l irrep with `⟨l,m+1|J_+|l,m⟩ = sqrt([l-m]_q [l+m+1]_q)` and
/// `J_- = J_+†`.
pub fn build_irrep(label: SpinLabel, q: DeformParam) -> IrrepMatrices {
    let n = label.dim();
    let l = label.l();
    let jz = ComplexMatrix::real_diagonal(&label.ms().collect::<Vec<_>>());
    let mut jp = ComplexMatrix::zeros(n, n);
    // column k holds |l,m⟩ with m = l - k; J_+ raises it to row k - 1
    for k in 1..n {
        let m = label.m(k);
        let amp = (q_number(l - m, q) * q_number(l + m + 1.0, q)).sqrt();
        jp[(k - 1, k)] = Complex64::new(amp, 0.0);
    }
    let jm = jp.dagger();
    IrrepMatrices {
        label,
        q,
        jz,
        jp,
        jm,
    }
}

/// Diagonal `q^{a·J_z}`.
pub fn q_power_jz(rep: &IrrepMatrices, a: f64) -> ComplexMatrix {
    let d: Vec<f64> = rep.label.ms().map(|m| rep.q.pow(a * m)).collect();
    ComplexMatrix::real_diagonal(&d)
}

/// Single-spin Hamiltonian `H(q) = q^{J_z/2} (J_+ + J_-) q^{J_z/2}`.
pub fn build_single_h(rep: &IrrepMatrices) -> ComplexMatrix {
    let k = q_power_jz(rep, 0.5);
    let x = &rep.jp + &rep.jm;
    &(&k * &x) * &k
}

/// Antipode on generators: `S(J_z) = -J_z`, `S(J_±) = -q^{∓1} J_±`.
pub fn antipode(gen: Generator, rep: &IrrepMatrices) -> ComplexMatrix {
    match gen {
        Generator::Jz => -&rep.jz,
        Generator::Jp => rep.jp.scale_real(-rep.q.pow(-1.0)),
        Generator::Jm => rep.jm.scale_real(-rep.q.pow(1.0)),
    }
}

/// Antipode addressed by a textual tag (`"Jz"`, `"Jp"`, `"Jm"`).
pub fn antipode_by_tag(tag: &str, rep: &IrrepMatrices) -> Result<ComplexMatrix> {
    Ok(antipode(tag.parse()?, rep))
}
