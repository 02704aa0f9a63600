//! Legendre expansions of a plane wave and of powers of `1 - mu`.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::specfun::{log_gamma_complex, spherical_bessel_j};

type C = Complex64;

/// Coefficient `c_l` in `(1 - mu)^{a-1} = sum_l c_l P_l(mu)`:
/// `c_l = 2^{a-1} (2l+1) Gamma(a) Gamma(l+1-a) / (Gamma(1-a) Gamma(l+1+a))`.
/// Defined for `Re a > 0` only.
pub fn legendre_power_law_coeff(a: C, ell: u32) -> Result<C> {
    if !(a.re > 0.0) {
        return Err(domain(
            "legendre_power_law_coeff",
            format!("Re a = {} must be positive for the expansion to exist", a.re),
        ));
    }
    let l = ell as f64;
    // Gamma(l+1-a)/Gamma(1-a) = (1-a)_l, which vanishes for integer a <= l.
    let a_is_int = a.im == 0.0 && a.re == a.re.round();
    let ln_poch = if a_is_int {
        if l >= a.re {
            return Ok(C::new(0.0, 0.0));
        }
        (0..ell).map(|j| (C::new(1.0 + j as f64, 0.0) - a).ln()).sum::<C>()
    } else {
        log_gamma_complex(C::new(l + 1.0, 0.0) - a)? - log_gamma_complex(C::new(1.0, 0.0) - a)?
    };
    let ln_rest = (a - 1.0) * std::f64::consts::LN_2 + (2.0 * l + 1.0).ln() + log_gamma_complex(a)?
        - log_gamma_complex(a + l + 1.0)?;
    Ok((ln_poch + ln_rest).exp())
}

/// Plane-wave partial-wave coefficient and its large-`rho` form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWavePartial {
    /// `i^l (2l+1) j_l(rho)`.
    pub exact: C,
    /// `(2l+1)/(2i rho) (e^{i rho} + (-1)^{l+1} e^{-i rho})`; `None` at `rho = 0`.
    pub asymptotic: Option<C>,
}

pub fn plane_wave_partial(ell: u32, rho: f64) -> PlaneWavePartial {
    let w = 2.0 * ell as f64 + 1.0;
    let exact = C::new(0.0, 1.0).powu(ell) * (w * spherical_bessel_j(ell, rho));
    let asymptotic = (rho != 0.0).then(|| {
        let sign = if ell % 2 == 0 { -1.0 } else { 1.0 };
        w / C::new(0.0, 2.0 * rho) * (C::new(0.0, rho).exp() + sign * C::new(0.0, -rho).exp())
    });
    PlaneWavePartial { exact, asymptotic }
}
