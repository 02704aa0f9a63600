//! Probability currents `J = Im(psi^* grad psi)` (hbar = m = 1) in spherical
//! components, with `grad = (k d/drho, (k/rho) d/dtheta)`.

use num_complex::Complex64;

use crate::asymptotic::{psi_asymptotic, AsymptoticSplit};
use crate::error::{domain, Error, Result};
use crate::exact::{angular_step, check_step, folded, psi_exact};
use crate::multipole::phase_shift;
use crate::types::{CurrentVector, FieldPoint, ScatteringParams};

type C = Complex64;

/// Default differencing step `1e-4 max(1, rho)`.
pub fn default_step(rho: f64) -> f64 {
    1e-4 * rho.max(1.0)
}

/// Current of an arbitrary axially symmetric field by central differences.
/// The angular step is `h/max(1, rho)`; points past the poles are folded
/// back into `[0, pi]`.
pub fn current_numeric<F>(field: F, p: &ScatteringParams, pt: &FieldPoint, h: f64) -> Result<CurrentVector>
where
    F: Fn(&FieldPoint) -> Result<C>,
{
    check_step(h, pt.rho, p.gamma)?;
    let (rho, theta) = (pt.rho, pt.theta);
    let ht = angular_step(h, rho);
    let c = field(pt)?;
    let d_r = (field(&folded(rho + h, theta))? - field(&folded(rho - h, theta))?) / (2.0 * h);
    let d_t = (field(&folded(rho, theta + ht))? - field(&folded(rho, theta - ht))?) / (2.0 * ht);
    let cc = c.conj();
    Ok(CurrentVector::new(p.k * (cc * d_r).im, p.k / rho * (cc * d_t).im))
}

fn check_angle(op: &'static str, theta: f64) -> Result<()> {
    if theta > 0.0 && theta <= std::f64::consts::PI {
        Ok(())
    } else {
        Err(domain(op, format!("theta = {theta} outside (0, pi]")))
    }
}

/// Current of the distorted plane wave `e^{i kz + i gamma ln(rho s)}`:
/// `J = k [(cos t + gamma/rho) e_r - (sin t - (gamma/rho) sin t/(1 - cos t)) e_t]`.
pub fn current_in_distorted(p: &ScatteringParams, pt: &FieldPoint) -> Result<CurrentVector> {
    check_angle("current_in_distorted", pt.theta)?;
    let (sin, cos) = pt.theta.sin_cos();
    let g_rho = p.gamma / pt.rho;
    Ok(CurrentVector::new(
        p.k * (cos + g_rho),
        -p.k * (sin - g_rho * sin / pt.s()),
    ))
}

/// Leading-order current of the scattered wave, `k |f|^2 / r^2` along `e_r`
/// with `r = rho/k`: `J_r = k gamma^2 / (4 rho^2 sin^4(theta/2))`.
pub fn current_scattered_asymptotic(p: &ScatteringParams, pt: &FieldPoint) -> Result<CurrentVector> {
    check_angle("current_scattered_asymptotic", pt.theta)?;
    let h = (0.5 * pt.theta).sin();
    let s4 = h.powi(4);
    Ok(CurrentVector::new(
        p.k * p.gamma * p.gamma / (4.0 * pt.rho * pt.rho * s4),
        0.0,
    ))
}

/// Split of the current of the asymptotic state into incoming, scattered and
/// interference parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentDecomposition {
    pub total: CurrentVector,
    pub incoming: CurrentVector,
    pub scattered: CurrentVector,
    pub interference: CurrentVector,
}

/// Decomposition at `pt` without the back-reaction correction on the
/// incoming wave and with the default step.
pub fn current_decomposition_asymptotic(p: &ScatteringParams, pt: &FieldPoint) -> Result<CurrentDecomposition> {
    current_decomposition_asymptotic_with(p, pt, false, default_step(pt.rho))
}

/// Incoming and scattered currents are taken from the two halves of the
/// asymptotic state, the total from their sum; the interference is what is
/// left over.
pub fn current_decomposition_asymptotic_with(
    p: &ScatteringParams,
    pt: &FieldPoint,
    backreaction: bool,
    h: f64,
) -> Result<CurrentDecomposition> {
    check_angle("current_decomposition_asymptotic", pt.theta)?;
    let split = |q: &FieldPoint| -> Result<AsymptoticSplit> {
        if q.theta == 0.0 {
            return Err(domain(
                "current_decomposition_asymptotic",
                "difference stencil reached the forward axis",
            ));
        }
        psi_asymptotic(p, q, backreaction)
    };
    let incoming = current_numeric(|q| split(q).map(|a| a.psi_in), p, pt, h)?;
    let scattered = current_numeric(|q| split(q).map(|a| a.psi_scat), p, pt, h)?;
    let total = current_numeric(|q| split(q).map(|a| a.total()), p, pt, h)?;
    Ok(CurrentDecomposition {
        total,
        incoming,
        scattered,
        interference: total - incoming - scattered,
    })
}

/// Leading radial interference current between the distorted plane wave and
/// the scattered wave,
/// `-(gamma k/rho) cot^2(theta/2) cos(rho s - 2 gamma ln(rho s) + 2 delta_0)`.
pub fn interference_radial_leading(p: &ScatteringParams, pt: &FieldPoint) -> Result<f64> {
    check_angle("interference_radial_leading", pt.theta)?;
    let rs = pt.rho_s();
    let cot_half = 1.0 / (0.5 * pt.theta).tan();
    let d0 = phase_shift(0, p.gamma).delta;
    Ok(-(p.gamma * p.k / pt.rho) * cot_half * cot_half * (rs - 2.0 * p.gamma * rs.ln() + 2.0 * d0).cos())
}

/// Current of `psi_exact - psi_in`, the exact state with the distorted plane
/// wave removed. With `subtract_backreaction` the subtracted wave includes
/// the `1 - i gamma^2/(rho s)` correction.
pub fn current_outgoing_exact(
    p: &ScatteringParams,
    pt: &FieldPoint,
    subtract_backreaction: bool,
) -> Result<CurrentVector> {
    current_outgoing_exact_with(p, pt, subtract_backreaction, default_step(pt.rho))
}

pub fn current_outgoing_exact_with(
    p: &ScatteringParams,
    pt: &FieldPoint,
    subtract_backreaction: bool,
    h: f64,
) -> Result<CurrentVector> {
    check_angle("current_outgoing_exact", pt.theta)?;
    current_numeric(
        |q| {
            if q.theta == 0.0 {
                return Err(domain(
                    "current_outgoing_exact",
                    "difference stencil reached the forward axis",
                ));
            }
            let a = psi_asymptotic(p, q, subtract_backreaction)?;
            Ok(psi_exact(p, q)? - a.psi_in)
        },
        p,
        pt,
        h,
    )
}

/// Current of the exact state.
pub fn current_exact(p: &ScatteringParams, pt: &FieldPoint) -> Result<CurrentVector> {
    current_numeric(|q| psi_exact(p, q), p, pt, default_step(pt.rho))
}

/// Orthoradial period of the interference pattern,
/// `2 pi / (k sin theta (1 - 2 gamma/(rho s)))`, as an arc length.
pub fn oscillation_length(p: &ScatteringParams, pt: &FieldPoint) -> Result<f64> {
    if !(pt.theta > 0.0 && pt.theta < std::f64::consts::PI) {
        return Err(domain(
            "oscillation_length",
            format!("theta = {} outside (0, pi)", pt.theta),
        ));
    }
    let factor = 1.0 - 2.0 * p.gamma / pt.rho_s();
    if factor.abs() < 1e-12 {
        return Err(Error::Singular {
            op: "oscillation_length",
            msg: format!("rho s = 2 gamma = {}", 2.0 * p.gamma),
        });
    }
    Ok(2.0 * std::f64::consts::PI / (p.k * pt.theta.sin() * factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn params(g: f64) -> ScatteringParams {
        ScatteringParams::new(g, 1.0).unwrap()
    }

    #[test]
    fn plane_wave_current() {
        let p = ScatteringParams::free(1.7);
        for &t in &[0.0, 0.4, 1.5, 3.0, PI] {
            let pt = FieldPoint::new(6.0, t).unwrap();
            let j = current_numeric(|q| Ok(C::new(0.0, q.kz()).exp()), &p, &pt, default_step(6.0)).unwrap();
            assert!((j.j_r - 1.7 * t.cos()).abs() < 1e-6, "t={t}");
            assert!((j.j_theta + 1.7 * t.sin()).abs() < 1e-6, "t={t}");
        }
    }

    #[test]
    fn distorted_incoming_analytic_vs_numeric() {
        let p = params(0.4);
        let pt = FieldPoint::new(20.0, 1.0).unwrap();
        let field = |q: &FieldPoint| Ok(C::new(0.0, q.kz() + 0.4 * q.rho_s().ln()).exp());
        let n = current_numeric(field, &p, &pt, default_step(20.0)).unwrap();
        let a = current_in_distorted(&p, &pt).unwrap();
        assert!((n - a).norm() < 1e-6, "{n:?} {a:?}");
    }

    #[test]
    fn incoming_tends_to_beam() {
        let p = params(0.4);
        let pt = FieldPoint::new(1e8, 1.2).unwrap();
        let j = current_in_distorted(&p, &pt).unwrap();
        assert!((j.j_r - 1.2f64.cos()).abs() < 1e-7);
        assert!((j.j_theta + 1.2f64.sin()).abs() < 1e-7);
    }

    #[test]
    fn scattered_current() {
        let p = params(0.0);
        let pt = FieldPoint::new(10.0, 1.0).unwrap();
        assert_eq!(current_scattered_asymptotic(&p, &pt).unwrap().norm(), 0.0);
        // r^2 J_r / k equals the cross-section
        let p = ScatteringParams::new(0.8, 2.0).unwrap();
        let pt = FieldPoint::new(40.0, 0.9).unwrap();
        let j = current_scattered_asymptotic(&p, &pt).unwrap();
        let r = pt.rho / p.k;
        let sigma = crate::asymptotic::differential_cross_section(&p, 0.9).unwrap();
        assert!((r * r * j.j_r / p.k - sigma).abs() < 1e-12 * sigma);
    }

    #[test]
    fn decomposition_identity() {
        let p = params(0.4);
        for &t in &[0.3, 1.0, 2.0] {
            let pt = FieldPoint::new(10.0, t).unwrap();
            let d = current_decomposition_asymptotic(&p, &pt).unwrap();
            let r = d.total - d.incoming - d.scattered - d.interference;
            assert!(r.norm() < 1e-10);
        }
        let d = current_decomposition_asymptotic(&params(0.0), &FieldPoint::new(10.0, 1.0).unwrap()).unwrap();
        assert!(d.interference.norm() < 1e-9);
    }

    #[test]
    fn interference_matches_leading_form() {
        let p = params(0.4);
        for &t in &[1.0, 1.5, 2.0] {
            let pt = FieldPoint::new(200.0, t).unwrap();
            let d = current_decomposition_asymptotic(&p, &pt).unwrap();
            let lead = interference_radial_leading(&p, &pt).unwrap();
            let scale = 0.4 / 200.0 / (0.5 * t).tan().powi(2);
            assert!((d.interference.j_r - lead).abs() < 0.05 * scale, "t={t}");
        }
    }

    #[test]
    fn outgoing_far_field() {
        let p = params(0.4);
        let pt = FieldPoint::new(100.0, PI / 2.0).unwrap();
        let out = current_outgoing_exact(&p, &pt, true).unwrap();
        let sc = current_scattered_asymptotic(&p, &pt).unwrap();
        assert!((out.j_r - sc.j_r).abs() < 0.1 * sc.j_r);
        let free = current_outgoing_exact(&params(0.0), &pt, false).unwrap();
        assert_eq!(free.norm(), 0.0);
    }

    #[test]
    fn oscillation_length_cases() {
        let pt = FieldPoint::new(50.0, 1.0).unwrap();
        let free = oscillation_length(&params(0.0), &pt).unwrap();
        assert!((free - 2.0 * PI / 1f64.sin()).abs() < 1e-12);
        let narrow = FieldPoint::new(50.0, 0.05).unwrap();
        assert!(oscillation_length(&params(0.0), &narrow).unwrap() > 10.0 * 2.0 * PI);
        // rho s = 2 gamma
        let pt = FieldPoint::new(2.0, PI / 2.0).unwrap();
        assert!(matches!(
            oscillation_length(&params(1.0), &pt),
            Err(Error::Singular { .. })
        ));
        assert!(oscillation_length(&params(0.1), &FieldPoint::new(2.0, 0.0).unwrap()).is_err());
    }
}
