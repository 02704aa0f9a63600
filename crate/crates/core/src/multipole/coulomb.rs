//! Regular Coulomb waves and the partial-wave synthesis of the exact state.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::Result;
use crate::exact::forward_prefactor;
use crate::specfun::{hyp1f1, log_gamma_complex, Hyp1F1Params, LegendreSweep};
use crate::types::{FieldPoint, ScatteringParams};

type C = Complex64;

/// One coefficient of a partial-wave expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultipoleTerm {
    pub ell: u32,
    pub coefficient: C,
}

/// `ln C(l, gamma)` with
/// `C = (2l+1) (2i)^l Gamma(l+1+i gamma) e^{-gamma pi/2} / Gamma(2l+2)`.
fn ln_normalisation(ell: u32, gamma: f64) -> C {
    let l = ell as f64;
    let lg_num = log_gamma_complex(C::new(l + 1.0, gamma)).expect("no pole");
    let lg_den = log_gamma_complex(C::new(2.0 * l + 2.0, 0.0)).expect("no pole");
    C::new((2.0 * l + 1.0).ln() + l * LN_2 - 0.5 * PI * gamma, 0.5 * PI * l) + lg_num - lg_den
}

/// Regular Coulomb wave
/// `Psi_l = C rho^{l+1} e^{-i rho} 1F1(l+1-i gamma; 2l+2; 2i rho)`,
/// normalised so that `Psi_l = (2l+1) i^l rho j_l(rho)` when `gamma = 0`.
pub fn coulomb_wave_regular(ell: u32, gamma: f64, rho: f64) -> Result<C> {
    if rho == 0.0 {
        return Ok(C::new(0.0, 0.0));
    }
    let l = ell as f64;
    let ln_mag = ln_normalisation(ell, gamma) + (l + 1.0) * rho.ln();
    if ln_mag.re < -745.0 {
        return Ok(C::new(0.0, 0.0));
    }
    let args = Hyp1F1Params::new(
        C::new(l + 1.0, -gamma),
        C::new(2.0 * l + 2.0, 0.0),
        C::new(0.0, 2.0 * rho),
    )?;
    let f = hyp1f1(&args)?;
    Ok((ln_mag - C::new(0.0, rho)).exp() * f)
}

/// Partial-wave sum `sum_{l <= ell_max} (Psi_l(rho)/rho) P_l(cos theta)`,
/// which converges to `psi_exact` as `ell_max` grows.
pub fn psi_multipole_sum(p: &ScatteringParams, pt: &FieldPoint, ell_max: u32) -> Result<C> {
    if pt.rho == 0.0 {
        // only the s-wave survives, with Psi_0/rho -> e^{-pi gamma/2} Gamma(1+i gamma)
        return Ok(forward_prefactor(p.gamma));
    }
    let mut sum = C::new(0.0, 0.0);
    for (ell, pl) in LegendreSweep::new(pt.theta.cos()).take(ell_max as usize + 1) {
        let w = coulomb_wave_regular(ell, p.gamma, pt.rho)?;
        sum += w / pt.rho * pl;
    }
    Ok(sum)
}

/// Individual terms `Psi_l(rho)/rho P_l(cos theta)` of [`psi_multipole_sum`].
pub fn multipole_terms(p: &ScatteringParams, pt: &FieldPoint, ell_max: u32) -> Result<Vec<MultipoleTerm>> {
    LegendreSweep::new(pt.theta.cos())
        .take(ell_max as usize + 1)
        .map(|(ell, pl)| {
            let w = if pt.rho == 0.0 {
                if ell == 0 {
                    forward_prefactor(p.gamma)
                } else {
                    C::new(0.0, 0.0)
                }
            } else {
                coulomb_wave_regular(ell, p.gamma, pt.rho)? / pt.rho
            };
            Ok(MultipoleTerm {
                ell,
                coefficient: w * pl,
            })
        })
        .collect()
}
