//! The exact Coulomb scattering state
//! `psi = e^{i rho (1-s)} e^{-pi gamma/2} Gamma(1 + i gamma) 1F1(-i gamma; 1; i rho s)`
//! and the tools used to check it.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::specfun::{hyp1f1, log_gamma_complex, Hyp1F1Params};
use crate::types::{FieldPoint, ScatteringParams};

type C = Complex64;

/// `e^{-pi gamma/2} Gamma(1 + i gamma)`, evaluated in log space so that large
/// `|gamma|` neither overflows nor underflows early.
pub fn forward_prefactor(gamma: f64) -> C {
    let lg = log_gamma_complex(C::new(1.0, gamma)).expect("1 + i gamma is never a pole");
    (lg - 0.5 * PI * gamma).exp()
}

/// The exact stationary scattering state at `pt`.
pub fn psi_exact(p: &ScatteringParams, pt: &FieldPoint) -> Result<C> {
    let plane = C::new(0.0, pt.kz()).exp();
    if p.gamma == 0.0 {
        return Ok(plane);
    }
    let rs = pt.rho_s();
    let f = if rs == 0.0 {
        C::new(1.0, 0.0)
    } else {
        let args = Hyp1F1Params::new(C::new(0.0, -p.gamma), C::new(1.0, 0.0), C::new(0.0, rs))?;
        hyp1f1(&args)?
    };
    Ok(plane * forward_prefactor(p.gamma) * f)
}

/// `psi` on the forward axis: `e^{i rho} e^{-pi gamma/2} Gamma(1 + i gamma)`.
/// Its modulus does not depend on `rho`.
pub fn psi_forward(p: &ScatteringParams, rho: f64) -> C {
    C::new(0.0, rho).exp() * forward_prefactor(p.gamma)
}

/// First-order expansion of [`psi_exact`] inside the paraboloid, `rho s << 1`:
/// the hypergeometric factor is replaced by `1 + gamma rho s`.
pub fn psi_small_rhos(p: &ScatteringParams, pt: &FieldPoint) -> C {
    let plane = C::new(0.0, pt.kz()).exp();
    if p.gamma == 0.0 {
        return plane;
    }
    plane * forward_prefactor(p.gamma) * (1.0 + p.gamma * pt.rho_s())
}

/// The value `s* = 1/rho` at which a sphere of radius `rho` crosses the
/// paraboloid `rho s = 1`. Points with `s < s*` lie inside.
pub fn paraboloid_s(rho: f64) -> f64 {
    1.0 / rho
}

/// Polar angle of the paraboloid on the sphere of radius `rho`; the whole
/// sphere is inside when `rho <= 1/2`.
pub fn paraboloid_theta(rho: f64) -> f64 {
    let s = paraboloid_s(rho);
    if s >= 2.0 {
        PI
    } else {
        (1.0 - s).acos()
    }
}

/// Axial coordinate `kz` at which the paraboloid sits for transverse
/// coordinate `kx`: `kz = (kx^2 - 1)/2`.
pub fn paraboloid_kz(kx: f64) -> f64 {
    0.5 * (kx * kx - 1.0)
}

pub fn inside_paraboloid(pt: &FieldPoint) -> bool {
    pt.rho_s() < 1.0
}

/// Rejects steps that cannot resolve the local wavelength.
pub(crate) fn check_step(h: f64, rho: f64, gamma: f64) -> Result<()> {
    if !(h > 0.0) || !(rho > h) || h * 1f64.max(gamma.abs() / rho) >= 0.1 {
        return Err(Error::StepSize { h, rho });
    }
    Ok(())
}

/// Angular difference step matched to the radial step `h` so that the
/// arc-length resolution stays the same at every radius.
pub(crate) fn angular_step(h: f64, rho: f64) -> f64 {
    h / rho.max(1.0)
}

/// Point at polar angle `theta` continued past the poles. Axially symmetric
/// fields depend on `cos(theta)` only, so angles outside `[0, pi]` fold back.
pub(crate) fn folded(rho: f64, theta: f64) -> FieldPoint {
    let t = if theta < 0.0 {
        -theta
    } else if theta > PI {
        2.0 * PI - theta
    } else {
        theta
    };
    FieldPoint { rho, theta: t }
}

/// Relative residual of the Schrodinger equation
/// `(d^2/drho^2 + (2/rho) d/drho + L/rho^2 + 1 - 2 gamma/rho) psi = 0`
/// with `L = d^2/dtheta^2 + cot(theta) d/dtheta`, by central differences.
pub fn schrodinger_residual(p: &ScatteringParams, pt: &FieldPoint, h: f64) -> Result<f64> {
    check_step(h, pt.rho, p.gamma)?;
    let (rho, theta) = (pt.rho, pt.theta);
    let ht = angular_step(h, rho);
    let at = |r: f64, t: f64| psi_exact(p, &folded(r, t));

    let c = at(rho, theta)?;
    let rp = at(rho + h, theta)?;
    let rm = at(rho - h, theta)?;
    let tp = at(rho, theta + ht)?;
    let tm = at(rho, theta - ht)?;

    let d_rr = (rp - 2.0 * c + rm) / (h * h);
    let d_r = (rp - rm) / (2.0 * h);
    let d_tt = (tp - 2.0 * c + tm) / (ht * ht);
    let d_t = (tp - tm) / (2.0 * ht);
    let sin = theta.sin();
    // cot(theta) d/dtheta -> d^2/dtheta^2 on the axis
    let angular = if sin.abs() < 1e-8 {
        2.0 * d_tt
    } else {
        d_tt + theta.cos() / sin * d_t
    };
    let r = d_rr + 2.0 / rho * d_r + angular / (rho * rho) + (1.0 - 2.0 * p.gamma / rho) * c;
    Ok(r.norm() / c.norm())
}

/// `psi_exact` on the Cartesian grid `kx[i], kz[j]`, row-major in `kz`
/// (all `kx` for the first `kz`, then the next). Points are evaluated in
/// parallel; the output order is fixed.
pub fn psi_exact_grid(p: &ScatteringParams, kx: &[f64], kz: &[f64]) -> Result<Vec<C>> {
    let pts: Vec<FieldPoint> = kz
        .iter()
        .flat_map(|&z| kx.iter().map(move |&x| FieldPoint::from_cartesian(x, z)))
        .collect();
    pts.par_iter().map(|pt| psi_exact(p, pt)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(gamma: f64) -> ScatteringParams {
        ScatteringParams::new(gamma, 1.0).unwrap()
    }

    #[test]
    fn free_case_is_plane_wave() {
        for &(rho, theta) in &[(0.0, 0.0), (3.0, 1.1), (40.0, 2.9), (7.0, PI)] {
            let pt = FieldPoint::new(rho, theta).unwrap();
            let want = C::new(0.0, rho * theta.cos()).exp();
            assert!((psi_exact(&params(0.0), &pt).unwrap() - want).norm() < 1e-12);
        }
    }

    #[test]
    fn forward_modulus() {
        let pt = FieldPoint::new(12.0, 0.0).unwrap();
        let v = psi_exact(&params(1.0), &pt).unwrap().norm();
        assert!((v - 0.108_422).abs() < 1e-6, "{v}");
        assert!((psi_forward(&params(1.0), 3.0).norm() - v).abs() < 1e-14);
    }

    #[test]
    fn forward_modulus_decreases_with_gamma() {
        let mut last = f64::INFINITY;
        for i in 0..40 {
            let g = 0.25 * i as f64;
            let m = psi_forward(&params(g), 1.0).norm();
            assert!(m < last);
            last = m;
        }
        assert!(last < 1e-6);
    }

    #[test]
    fn small_rhos_expansion() {
        let p = params(1.0);
        let pt = FieldPoint::new(2.0, 0.05).unwrap();
        let e = psi_exact(&p, &pt).unwrap();
        let a = psi_small_rhos(&p, &pt);
        assert!((a - e).norm() / e.norm() < 1e-2);
        let axis = FieldPoint::new(2.0, 0.0).unwrap();
        assert_eq!(psi_small_rhos(&p, &axis), psi_forward(&p, 2.0));
    }

    #[test]
    fn paraboloid_geometry() {
        assert!((paraboloid_s(10.0) - 0.1).abs() < 1e-15);
        assert!((paraboloid_theta(10.0) - 0.4510).abs() < 1e-4);
        assert!((paraboloid_theta(1.0) - PI / 2.0).abs() < 1e-15);
        assert_eq!(paraboloid_kz(10.0), 49.5);
        let on = FieldPoint::from_cartesian(10.0, 49.5);
        assert!((on.rho_s() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn residual_examples() {
        let r = schrodinger_residual(&params(0.5), &FieldPoint::new(5.0, 1.0).unwrap(), 1e-3).unwrap();
        assert!(r < 1e-5, "{r}");
        let r = schrodinger_residual(&params(0.0), &FieldPoint::new(8.0, 2.0).unwrap(), 1e-3).unwrap();
        assert!(r < 1e-5, "{r}");
    }

    #[test]
    fn residual_on_axis() {
        let r = schrodinger_residual(&params(0.7), &FieldPoint::new(6.0, 0.0).unwrap(), 1e-3).unwrap();
        assert!(r < 1e-5, "{r}");
    }

    #[test]
    fn residual_rejects_coarse_steps() {
        let pt = FieldPoint::new(5.0, 1.0).unwrap();
        assert!(matches!(
            schrodinger_residual(&params(0.5), &pt, 0.2),
            Err(Error::StepSize { .. })
        ));
        assert!(schrodinger_residual(&params(0.5), &FieldPoint::new(0.01, 1.0).unwrap(), 0.05).is_err());
    }

    #[test]
    fn grid_matches_pointwise() {
        let p = params(0.4);
        let kx = [-3.0, 0.0, 2.0];
        let kz = [-1.0, 4.0];
        let g = psi_exact_grid(&p, &kx, &kz).unwrap();
        for (j, &z) in kz.iter().enumerate() {
            for (i, &x) in kx.iter().enumerate() {
                let want = psi_exact(&p, &FieldPoint::from_cartesian(x, z)).unwrap();
                assert_eq!(g[j * kx.len() + i], want);
            }
        }
    }
}
