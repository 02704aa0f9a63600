//! Large-`rho s` form of the scattering state and the amplitudes read off it.
//!
//! Away from the forward paraboloid the exact state splits into a distorted
//! plane wave and a distorted outgoing spherical wave:
//!
//! ```text
//! psi_in   = e^{i kz + i gamma ln(rho s)} (1 - i gamma^2/(rho s))
//! psi_scat = -(gamma/(rho s)) Gamma(1+i gamma)/Gamma(1-i gamma) e^{i rho - i gamma ln(rho s)}
//! ```
//!
//! The bracket on `psi_in` is the back-reaction correction and is optional.
//! No such split exists on the forward axis.

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::multipole::phase_shift;
use crate::types::{FieldPoint, ScatteringParams};

type C = Complex64;

/// Default lower bound on `rho s` above which the split is flagged valid.
pub const DEFAULT_VALIDITY_THRESHOLD: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticOptions {
    pub backreaction: bool,
    pub validity_threshold: f64,
}

impl Default for AsymptoticOptions {
    fn default() -> Self {
        Self {
            backreaction: false,
            validity_threshold: DEFAULT_VALIDITY_THRESHOLD,
        }
    }
}

/// Incoming and scattered parts of the asymptotic state at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticSplit {
    pub psi_in: C,
    pub psi_scat: C,
    /// `rho s` exceeds the validity threshold.
    pub valid: bool,
}

impl AsymptoticSplit {
    pub fn total(&self) -> C {
        self.psi_in + self.psi_scat
    }
}

/// `Gamma(1 + i gamma)/Gamma(1 - i gamma) = e^{2 i delta_0}`.
pub fn coulomb_gamma_ratio(gamma: f64) -> C {
    phase_shift(0, gamma).factor
}

fn check_angle(op: &'static str, theta: f64) -> Result<()> {
    if theta > 0.0 && theta <= std::f64::consts::PI {
        Ok(())
    } else {
        Err(domain(
            op,
            format!("theta = {theta} outside (0, pi]; the amplitude is undefined in the forward direction"),
        ))
    }
}

fn sin_half_sq(theta: f64) -> f64 {
    let h = (0.5 * theta).sin();
    h * h
}

pub fn psi_asymptotic(p: &ScatteringParams, pt: &FieldPoint, backreaction: bool) -> Result<AsymptoticSplit> {
    psi_asymptotic_with(
        p,
        pt,
        &AsymptoticOptions {
            backreaction,
            ..AsymptoticOptions::default()
        },
    )
}

pub fn psi_asymptotic_with(p: &ScatteringParams, pt: &FieldPoint, opts: &AsymptoticOptions) -> Result<AsymptoticSplit> {
    let rs = pt.rho_s();
    if !(rs > 0.0) {
        return Err(domain(
            "psi_asymptotic",
            format!("rho s = {rs}: no incoming/scattered split exists on the forward axis or at the origin"),
        ));
    }
    let g = p.gamma;
    let log_rs = rs.ln();
    let mut psi_in = C::new(0.0, pt.kz() + g * log_rs).exp();
    if opts.backreaction {
        psi_in *= C::new(1.0, -g * g / rs);
    }
    let psi_scat = if g == 0.0 {
        C::new(0.0, 0.0)
    } else {
        -(g / rs) * coulomb_gamma_ratio(g) * C::new(0.0, pt.rho - g * log_rs).exp()
    };
    Ok(AsymptoticSplit {
        psi_in,
        psi_scat,
        valid: rs > opts.validity_threshold,
    })
}

/// `f_R(theta) = -gamma/(2k sin^2(theta/2)) Gamma(1+i gamma)/Gamma(1-i gamma)`.
pub fn rutherford_amplitude(p: &ScatteringParams, theta: f64) -> Result<C> {
    check_angle("rutherford_amplitude", theta)?;
    Ok(-p.gamma / (2.0 * p.k * sin_half_sq(theta)) * coulomb_gamma_ratio(p.gamma))
}

/// [`rutherford_amplitude`] times the angle-dependent Coulomb phase
/// `e^{-i gamma ln(s/2)}` that the spherical wave carries.
pub fn rutherford_amplitude_phase_separated(p: &ScatteringParams, theta: f64) -> Result<C> {
    let f = rutherford_amplitude(p, theta)?;
    Ok(f * C::new(0.0, -p.gamma * sin_half_sq(theta).ln()).exp())
}

/// `d sigma / d Omega = gamma^2/(4 k^2 sin^4(theta/2))`.
pub fn differential_cross_section(p: &ScatteringParams, theta: f64) -> Result<f64> {
    check_angle("differential_cross_section", theta)?;
    let s2 = sin_half_sq(theta);
    Ok(p.gamma * p.gamma / (4.0 * p.k * p.k * s2 * s2))
}

/// First Born amplitude for the screened potential `(A/r) e^{-mu r}`:
/// `f_B = -2 gamma k/(q^2 + mu^2)` with momentum transfer `q = 2k sin(theta/2)`.
pub fn born_amplitude_yukawa(p: &ScatteringParams, theta: f64, mu: f64) -> Result<C> {
    if !(mu >= 0.0) {
        return Err(domain("born_amplitude_yukawa", format!("mu = {mu} must be >= 0")));
    }
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(domain(
            "born_amplitude_yukawa",
            format!("theta = {theta} outside [0, pi]"),
        ));
    }
    let q2 = 4.0 * p.k * p.k * sin_half_sq(theta);
    let den = q2 + mu * mu;
    if den == 0.0 {
        return Err(Error::Singular {
            op: "born_amplitude_yukawa",
            msg: "unscreened amplitude diverges in the forward direction".into(),
        });
    }
    Ok(C::new(-2.0 * p.gamma * p.k / den, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::psi_exact;
    use std::f64::consts::PI;

    fn params(gamma: f64, k: f64) -> ScatteringParams {
        ScatteringParams::new(gamma, k).unwrap()
    }

    #[test]
    fn free_split() {
        let pt = FieldPoint::new(30.0, 0.8).unwrap();
        let a = psi_asymptotic(&params(0.0, 1.0), &pt, true).unwrap();
        assert!((a.psi_in - C::new(0.0, pt.kz()).exp()).norm() < 1e-15);
        assert_eq!(a.psi_scat, C::new(0.0, 0.0));
    }

    #[test]
    fn forward_axis_is_rejected() {
        let pt = FieldPoint::new(30.0, 0.0).unwrap();
        assert!(matches!(
            psi_asymptotic(&params(1.0, 1.0), &pt, false),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn validity_flag() {
        let p = params(1.0, 1.0);
        let inside = psi_asymptotic(&p, &FieldPoint::new(10.0, 0.5).unwrap(), false).unwrap();
        let outside = psi_asymptotic(&p, &FieldPoint::new(10.0, 2.0).unwrap(), false).unwrap();
        assert!(!inside.valid);
        assert!(outside.valid);
    }

    #[test]
    fn agrees_with_exact_far_out() {
        let p = params(0.5, 1.0);
        let pt = FieldPoint::new(1e3, PI / 2.0).unwrap();
        let e = psi_exact(&p, &pt).unwrap();
        let a = psi_asymptotic(&p, &pt, false).unwrap().total();
        assert!((a - e).norm() / e.norm() < 1e-2);
    }

    #[test]
    fn rutherford_modulus() {
        let p = params(0.7, 1.3);
        assert!((rutherford_amplitude(&p, PI).unwrap().norm() - 0.7 / 2.6).abs() < 1e-15);
        for i in 1..=50 {
            let t = PI * i as f64 / 50.0;
            let f = rutherford_amplitude(&p, t).unwrap();
            let g = rutherford_amplitude_phase_separated(&p, t).unwrap();
            let ratio = f.norm_sqr() * 4.0 * p.k * p.k * sin_half_sq(t).powi(2) / (p.gamma * p.gamma);
            assert!((ratio - 1.0).abs() < 1e-13);
            assert!((g.norm() - f.norm()).abs() < 1e-14 * f.norm());
        }
        assert_eq!(rutherford_amplitude(&params(0.0, 1.0), 1.0).unwrap().norm(), 0.0);
        assert!(rutherford_amplitude(&p, 0.0).is_err());
    }

    #[test]
    fn cross_section_values() {
        assert!((differential_cross_section(&params(1.0, 1.0), PI).unwrap() - 0.25).abs() < 1e-15);
        assert!((differential_cross_section(&params(2.0, 1.0), PI / 2.0).unwrap() - 4.0).abs() < 1e-12);
        let p = params(1.0, 1.0);
        let a = differential_cross_section(&p, 1e-3).unwrap();
        let b = differential_cross_section(&p, 2e-3).unwrap();
        assert!((a / b - 16.0).abs() < 1e-4);
        assert!(differential_cross_section(&p, 0.0).is_err());
    }

    #[test]
    fn born_yukawa() {
        let p = params(1.0, 1.0);
        assert_eq!(born_amplitude_yukawa(&p, 0.0, 1.0).unwrap(), C::new(-2.0, 0.0));
        for &t in &[0.3, 1.0, 2.5] {
            let b = born_amplitude_yukawa(&p, t, 0.0).unwrap();
            let r = rutherford_amplitude(&p, t).unwrap();
            assert!((b.norm() - r.norm()).abs() < 1e-14);
            assert!(born_amplitude_yukawa(&p, t, 1e8).unwrap().norm() < 1e-15);
        }
        assert!(matches!(
            born_amplitude_yukawa(&p, 0.0, 0.0),
            Err(Error::Singular { .. })
        ));
        assert!(born_amplitude_yukawa(&p, 1.0, -1.0).is_err());
    }
}
