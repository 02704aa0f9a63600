//! Parameter and evaluation-site types shared by every module.
//!
//! Natural units are fixed throughout: hbar = m = 1 for the quantum problem,
//! G = c = 1 for the black-hole problem.

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Complex values: wavefunctions, amplitudes, phase factors.
pub type ComplexAmplitude = Complex64;

/// Coulomb scattering configuration.
///
/// `gamma` is the Sommerfeld parameter `m A / (hbar^2 k)`; positive values are
/// repulsive. `k` is the incident wavenumber, so the energy is `k^2 / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringParams {
    pub gamma: f64,
    pub k: f64,
}

impl ScatteringParams {
    pub fn new(gamma: f64, k: f64) -> Result<Self> {
        if !gamma.is_finite() {
            return Err(domain("ScatteringParams", "gamma must be finite"));
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(domain("ScatteringParams", format!("k must be positive, got {k}")));
        }
        Ok(Self { gamma, k })
    }

    /// Free propagation at the same wavenumber.
    pub fn free(k: f64) -> Self {
        Self { gamma: 0.0, k }
    }
}

/// A point in the scattering plane, in dimensionless radius `rho = k r` and
/// polar angle `theta` measured from the incident direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPoint {
    pub rho: f64,
    pub theta: f64,
}

impl FieldPoint {
    pub fn new(rho: f64, theta: f64) -> Result<Self> {
        if !(rho >= 0.0 && rho.is_finite()) {
            return Err(domain("FieldPoint", format!("rho must be >= 0, got {rho}")));
        }
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(domain("FieldPoint", format!("theta must lie in [0, pi], got {theta}")));
        }
        Ok(Self { rho, theta })
    }

    /// Builds a point from dimensionless Cartesian coordinates `(kx, kz)` in
    /// the `y = 0` plane.
    pub fn from_cartesian(kx: f64, kz: f64) -> Self {
        let rho = kx.hypot(kz);
        let theta = if rho == 0.0 { 0.0 } else { kx.abs().atan2(kz) };
        Self { rho, theta }
    }

    /// `s = 1 - cos(theta) = 2 sin^2(theta/2)`, computed without cancellation.
    pub fn s(&self) -> f64 {
        let h = (0.5 * self.theta).sin();
        2.0 * h * h
    }

    /// `k z = rho cos(theta)`.
    pub fn kz(&self) -> f64 {
        self.rho * self.theta.cos()
    }

    /// `rho s = k (r - z)`, the parabolic coordinate controlling the
    /// asymptotic regime.
    pub fn rho_s(&self) -> f64 {
        self.rho * self.s()
    }
}

/// Probability current `(J_r, J_theta)` in units of `k` (hbar = m = 1).
/// The azimuthal component vanishes by symmetry and is not stored.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CurrentVector {
    pub j_r: f64,
    pub j_theta: f64,
}

impl CurrentVector {
    pub fn new(j_r: f64, j_theta: f64) -> Self {
        Self { j_r, j_theta }
    }

    pub fn norm(&self) -> f64 {
        self.j_r.hypot(self.j_theta)
    }

    pub fn is_finite(&self) -> bool {
        self.j_r.is_finite() && self.j_theta.is_finite()
    }
}

impl std::ops::Add for CurrentVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.j_r + o.j_r, self.j_theta + o.j_theta)
    }
}

impl std::ops::Sub for CurrentVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.j_r - o.j_r, self.j_theta - o.j_theta)
    }
}

/// Schwarzschild black hole probed by a monochromatic massless scalar wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlackHoleParams {
    pub mass: f64,
    pub omega: f64,
}

impl BlackHoleParams {
    /// `mass = 0` is accepted and describes flat space.
    pub fn new(mass: f64, omega: f64) -> Result<Self> {
        if !(mass >= 0.0 && mass.is_finite()) {
            return Err(domain("BlackHoleParams", format!("mass must be >= 0, got {mass}")));
        }
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(domain("BlackHoleParams", format!("omega must be > 0, got {omega}")));
        }
        Ok(Self { mass, omega })
    }

    /// Schwarzschild radius `r_s = 2M`.
    pub fn schwarzschild_radius(&self) -> f64 {
        2.0 * self.mass
    }

    /// Equivalent Coulomb strength `gamma = -2 M omega` (attractive).
    pub fn gamma(&self) -> f64 {
        -2.0 * self.mass * self.omega
    }
}
