//! Massless scalar waves on a Schwarzschild background (G = c = 1) in the
//! long-wavelength limit, where the radial equation reduces to the Coulomb
//! wave equation with `gamma = -2 M omega` and `k = omega`.

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::multipole::{coulomb_wave_regular, phase_shift};
use crate::types::{BlackHoleParams, ScatteringParams};

type C = Complex64;

fn check_outside(op: &'static str, bh: &BlackHoleParams, r: f64) -> Result<()> {
    let rs = bh.schwarzschild_radius();
    if r > rs && r.is_finite() {
        Ok(())
    } else {
        Err(domain(op, format!("r = {r} is not outside the horizon r_s = {rs}")))
    }
}

/// `V_eff = (1/r^2)(1 - r_s/r)(r_s/r + l(l+1))`. Zero on the horizon.
pub fn effective_potential(bh: &BlackHoleParams, ell: u32, r: f64) -> Result<f64> {
    let rs = bh.schwarzschild_radius();
    if r == rs && r > 0.0 {
        return Ok(0.0);
    }
    check_outside("effective_potential", bh, r)?;
    let l = ell as f64;
    Ok((1.0 - rs / r) * (rs / r + l * (l + 1.0)) / (r * r))
}

/// `r_* = r + r_s ln(r/r_s - 1)`.
pub fn tortoise_coordinate(bh: &BlackHoleParams, r: f64) -> Result<f64> {
    check_outside("tortoise_coordinate", bh, r)?;
    let rs = bh.schwarzschild_radius();
    if rs == 0.0 {
        return Ok(r);
    }
    Ok(r + rs * ((r - rs) / rs).ln())
}

/// Inverse of [`tortoise_coordinate`] by bisection.
pub fn tortoise_inverse(bh: &BlackHoleParams, r_star: f64) -> Result<f64> {
    if !r_star.is_finite() {
        return Err(domain("tortoise_inverse", "r_* must be finite"));
    }
    let rs = bh.schwarzschild_radius();
    if rs == 0.0 {
        return Ok(r_star);
    }
    let (mut lo, mut hi) = (rs, r_star.max(rs) + 2.0 * rs);
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if tortoise_coordinate(bh, mid)? < r_star {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi <= rs {
        return Err(Error::NonConvergence {
            op: "tortoise_inverse",
            terms: 2000,
        });
    }
    Ok(hi)
}

/// The reduction holds for `l(l+1) > 12 (M omega)^2`. The s-wave is outside
/// the reduction altogether.
pub fn long_wavelength_valid(bh: &BlackHoleParams, ell: u32) -> Result<bool> {
    if ell == 0 {
        return Err(domain(
            "long_wavelength_valid",
            "l = 0 is outside the long-wavelength reduction",
        ));
    }
    let l = ell as f64;
    let mw = bh.mass * bh.omega;
    Ok(l * (l + 1.0) > 12.0 * mw * mw)
}

/// Coulomb problem equivalent to the long-wavelength radial equation.
pub fn coulomb_reduction(bh: &BlackHoleParams) -> ScatteringParams {
    ScatteringParams {
        gamma: bh.gamma(),
        k: bh.omega,
    }
}

/// Large-`omega r` radial mode `u/r`,
/// `(2l+1)/(2i omega r) [(-1)^{l+1} e^{-i omega r_c} + e^{2i delta_l} e^{i omega r_c}]`
/// with `omega r_c = rho - gamma ln(2 rho)`. Requires the long-wavelength
/// condition and `omega r > 10 (l(l+1) + gamma^2)`.
pub fn radial_mode_asymptotic(bh: &BlackHoleParams, ell: u32, r: f64) -> Result<C> {
    if !long_wavelength_valid(bh, ell)? {
        return Err(domain(
            "radial_mode_asymptotic",
            format!("l(l+1) <= 12 (M omega)^2 for l = {ell}: long-wavelength reduction invalid"),
        ));
    }
    let sp = coulomb_reduction(bh);
    let rho = bh.omega * r;
    let l = ell as f64;
    let need = 10.0 * (l * (l + 1.0) + sp.gamma * sp.gamma);
    if !(rho > need) {
        return Err(domain(
            "radial_mode_asymptotic",
            format!("omega r = {rho} not large against l(l+1) + gamma^2 (need > {need})"),
        ));
    }
    let phase = rho - sp.gamma * (2.0 * rho).ln();
    let sign = if ell % 2 == 0 { -1.0 } else { 1.0 };
    let e2d = phase_shift(ell, sp.gamma).factor;
    let bracket = sign * C::new(0.0, -phase).exp() + e2d * C::new(0.0, phase).exp();
    Ok((2.0 * l + 1.0) / C::new(0.0, 2.0 * rho) * bracket)
}

/// Settings for [`integrate_radial_mode`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialIntegratorOptions {
    /// Start radius in units of `r_s`.
    pub start_in_rs: f64,
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for RadialIntegratorOptions {
    fn default() -> Self {
        Self {
            start_in_rs: 10.0,
            rtol: 1e-10,
            atol: 1e-12,
            max_steps: 1_000_000,
        }
    }
}

/// Integrates the rescaled radial equation with the `12 M^2 omega^2 / r^2`
/// term kept,
/// `u'' = -[omega^2 + 4 M omega^2/r + 12 M^2 omega^2/r^2 - l(l+1)/r^2] u`,
/// from `r_0 = start_in_rs * r_s` to `r_end`, starting from the regular
/// Coulomb wave of the reduced problem. Returns `u(r_end)/(omega r_end)`,
/// directly comparable with `coulomb_wave_regular / rho`.
///
/// Used only to check the reduction; the choice of `r_0` and of Coulomb
/// initial data is a convention.
pub fn integrate_radial_mode(bh: &BlackHoleParams, ell: u32, r_end: f64, opts: &RadialIntegratorOptions) -> Result<C> {
    let sp = coulomb_reduction(bh);
    let w = bh.omega;
    let m = bh.mass;
    let r0 = opts.start_in_rs * bh.schwarzschild_radius();
    if !(r0 > 0.0) {
        return Err(domain("integrate_radial_mode", "start radius must be positive (M > 0)"));
    }
    if !(r_end > r0) {
        return Err(domain(
            "integrate_radial_mode",
            format!("r_end = {r_end} must exceed r_0 = {r0}"),
        ));
    }
    let rho0 = w * r0;
    let u0 = coulomb_wave_regular(ell, sp.gamma, rho0)?;
    let dh = 1e-5 * rho0.max(1.0);
    let du0 = (coulomb_wave_regular(ell, sp.gamma, rho0 + dh)? - coulomb_wave_regular(ell, sp.gamma, rho0 - dh)?)
        / (2.0 * dh)
        * w;

    let l2 = (ell as f64) * (ell as f64 + 1.0);
    let rhs = move |r: f64, y: &[f64; 4]| -> [f64; 4] {
        let q = w * w + 4.0 * m * w * w / r + 12.0 * m * m * w * w / (r * r) - l2 / (r * r);
        [y[2], y[3], -q * y[0], -q * y[1]]
    };
    let y = dormand_prince(rhs, r0, [u0.re, u0.im, du0.re, du0.im], r_end, opts)?;
    Ok(C::new(y[0], y[1]) / (w * r_end))
}

// Dormand-Prince 5(4) tableau
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn axpy<const N: usize>(y: &[f64; N], terms: &[(f64, &[f64; N])], h: f64) -> [f64; N] {
    let mut out = *y;
    for (c, k) in terms {
        for i in 0..N {
            out[i] += h * c * k[i];
        }
    }
    out
}

fn dormand_prince<F, const N: usize>(
    f: F,
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    opts: &RadialIntegratorOptions,
) -> Result<[f64; N]>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let mut t = t0;
    let mut y = y0;
    let mut h = ((t_end - t0) * 1e-3).min(0.01);
    let mut k1 = f(t, &y);
    for _ in 0..opts.max_steps {
        if t >= t_end {
            return Ok(y);
        }
        if t + h > t_end {
            h = t_end - t;
        }
        let k2 = f(t + h / 5.0, &axpy(&y, &[(A21, &k1)], h));
        let k3 = f(t + 3.0 * h / 10.0, &axpy(&y, &[(A31, &k1), (A32, &k2)], h));
        let k4 = f(t + 4.0 * h / 5.0, &axpy(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], h));
        let k5 = f(
            t + 8.0 * h / 9.0,
            &axpy(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], h),
        );
        let k6 = f(
            t + h,
            &axpy(&y, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], h),
        );
        let y_new = axpy(&y, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)], h);
        let k7 = f(t + h, &y_new);

        let mut err = 0.0f64;
        for i in 0..N {
            let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
            err = err.max((e / sc).abs());
        }
        if err <= 1.0 {
            t += h;
            y = y_new;
            k1 = k7;
        }
        let grow = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= grow;
        if h < 1e-14 * t.abs().max(1.0) {
            return Err(Error::NonConvergence {
                op: "integrate_radial_mode",
                terms: 0,
            });
        }
    }
    Err(Error::NonConvergence {
        op: "integrate_radial_mode",
        terms: opts.max_steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bh(m: f64, w: f64) -> BlackHoleParams {
        BlackHoleParams::new(m, w).unwrap()
    }

    #[test]
    fn potential_values() {
        let b = bh(1.0, 0.3);
        assert!((effective_potential(&b, 2, 10.0).unwrap() - 0.0496).abs() < 1e-15);
        assert_eq!(effective_potential(&b, 2, 2.0).unwrap(), 0.0);
        assert!(effective_potential(&b, 2, 1e9).unwrap() < 1e-17);
        assert!(effective_potential(&b, 2, 1.5).is_err());
    }

    #[test]
    fn tortoise_values() {
        let b = bh(1.0, 0.3);
        assert!((tortoise_coordinate(&b, 4.0).unwrap() - 4.0).abs() < 1e-15);
        assert!(tortoise_coordinate(&b, 2.0 + 1e-12).unwrap() < -50.0);
        assert!(tortoise_coordinate(&b, 2.0).is_err());
        let mut last = f64::NEG_INFINITY;
        for i in 1..2000 {
            let r = 2.0 + 0.01 * i as f64;
            let h = 1e-6;
            let d = (tortoise_coordinate(&b, r + h).unwrap() - tortoise_coordinate(&b, r - h).unwrap()) / (2.0 * h);
            assert!((d - 1.0 / (1.0 - 2.0 / r)).abs() < 1e-5 * d);
            let v = tortoise_coordinate(&b, r).unwrap();
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn tortoise_round_trip() {
        let b = bh(0.7, 1.0);
        let rs = b.schwarzschild_radius();
        for i in 0..200 {
            let r = rs * (1.01 * (1000.0f64 / 1.01).powf(i as f64 / 199.0));
            let back = tortoise_inverse(&b, tortoise_coordinate(&b, r).unwrap()).unwrap();
            assert!((back - r).abs() < 1e-10 * r, "r={r} back={back}");
        }
        assert_eq!(tortoise_inverse(&bh(0.0, 1.0), 3.5).unwrap(), 3.5);
    }

    #[test]
    fn long_wavelength_flag() {
        assert!(long_wavelength_valid(&bh(0.1, 1.0), 1).unwrap());
        assert!(!long_wavelength_valid(&bh(10.0, 1.0), 1).unwrap());
        assert!(long_wavelength_valid(&bh(0.999, 1.0), 3).unwrap());
        assert!(!long_wavelength_valid(&bh(1.0, 1.0), 3).unwrap());
        assert!(long_wavelength_valid(&bh(0.1, 1.0), 0).is_err());
    }

    #[test]
    fn reduction() {
        assert_eq!(coulomb_reduction(&bh(0.0, 0.5)).gamma, 0.0);
        let sp = coulomb_reduction(&bh(1.0, 0.2));
        assert!((sp.gamma + 0.4).abs() < 1e-15);
        assert_eq!(sp.k, 0.2);
    }

    #[test]
    fn dropped_term_is_subleading_when_valid() {
        for &(m, w) in &[(0.05, 1.0), (0.5, 1.0), (1.0, 1.0), (3.0, 1.0)] {
            let b = bh(m, w);
            for ell in 1..6u32 {
                let valid = long_wavelength_valid(&b, ell).unwrap();
                let l2 = (ell * (ell + 1)) as f64;
                for i in 1..20 {
                    let r = 3.0 * b.schwarzschild_radius() * i as f64;
                    let dropped = 12.0 * m * m * w * w / (r * r);
                    let kept = l2 / (r * r);
                    assert_eq!(dropped < kept, valid);
                }
            }
        }
    }

    #[test]
    fn free_mode_is_plane_wave_partial() {
        let b = bh(0.0, 1.0);
        let r = 400.0;
        let m = radial_mode_asymptotic(&b, 3, r).unwrap();
        let want = crate::multipole::plane_wave_partial(3, r).asymptotic.unwrap();
        assert!((m - want).norm() < 1e-12);
    }

    #[test]
    fn mode_matches_coulomb_wave() {
        let b = bh(0.05, 1.0);
        let m = radial_mode_asymptotic(&b, 2, 500.0).unwrap();
        let w = coulomb_wave_regular(2, -0.1, 500.0).unwrap() / 500.0;
        assert!((m - w).norm() < 1e-2 * w.norm().max(5.0 / 500.0), "{m} vs {w}");
        assert!(radial_mode_asymptotic(&b, 2, 5.0).is_err());
        assert!(radial_mode_asymptotic(&bh(10.0, 1.0), 1, 1e6).is_err());
    }

    #[test]
    fn integrator_free_oscillator() {
        // u'' = -u with u(0)=0, u'(0)=1
        let y = dormand_prince(
            |_, y: &[f64; 2]| [y[1], -y[0]],
            0.0,
            [0.0, 1.0],
            10.0,
            &RadialIntegratorOptions::default(),
        )
        .unwrap();
        assert!((y[0] - 10f64.sin()).abs() < 1e-8);
    }
}
