//! Coulomb phase shifts `e^{2 i delta_l} = Gamma(l+1+i gamma)/Gamma(l+1-i gamma)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::specfun::log_gamma_complex;

type C = Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseShiftFactor {
    pub ell: u32,
    pub gamma: f64,
    /// `e^{2 i delta_l}`.
    pub factor: C,
    /// `delta_l = arg Gamma(l+1+i gamma)`, reduced to `(-pi, pi]`.
    pub delta: f64,
}

fn principal(x: f64) -> f64 {
    let r = x.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Phase shift of partial wave `ell` from the log-gamma difference.
pub fn phase_shift(ell: u32, gamma: f64) -> PhaseShiftFactor {
    let z = C::new(ell as f64 + 1.0, gamma);
    let im = log_gamma_complex(z).expect("Re z >= 1 is never a pole").im;
    PhaseShiftFactor {
        ell,
        gamma,
        factor: C::new(0.0, 2.0 * im).exp(),
        delta: principal(im),
    }
}

/// Phase-shift factors for `l = 0, 1, 2, ...`, one complex multiply per step:
/// `e^{2i delta_{l+1}} = e^{2i delta_l} (l+1+i gamma)/(l+1-i gamma)`.
/// Seeded from log-gamma at `l = 0`; the factor is renormalised to unit
/// modulus at every step so rounding does not accumulate in the magnitude.
#[derive(Debug, Clone)]
pub struct PhaseShiftSweep {
    gamma: f64,
    ell: u32,
    factor: C,
    delta: f64,
}

impl PhaseShiftSweep {
    pub fn new(gamma: f64) -> Self {
        let seed = phase_shift(0, gamma);
        Self {
            gamma,
            ell: 0,
            factor: seed.factor,
            delta: seed.delta,
        }
    }
}

impl Iterator for PhaseShiftSweep {
    type Item = PhaseShiftFactor;

    fn next(&mut self) -> Option<PhaseShiftFactor> {
        let out = PhaseShiftFactor {
            ell: self.ell,
            gamma: self.gamma,
            factor: self.factor,
            delta: principal(self.delta),
        };
        let step = C::new(self.ell as f64 + 1.0, self.gamma);
        self.factor *= step / step.conj();
        self.factor /= self.factor.norm();
        self.delta += step.arg();
        self.ell += 1;
        Some(out)
    }
}

/// Largest deviation of the neighbours of `ell` from the phase-shift
/// recurrences
/// `e^{2i delta_{l+1}} = e^{2i delta_l} (l+1+i gamma)/(l+1-i gamma)` and
/// `e^{2i delta_{l-1}} = e^{2i delta_l} (l-i gamma)/(l+i gamma)`,
/// all three factors taken from log-gamma. At `ell = 0` only the upward
/// relation is checked.
pub fn phase_shift_recurrence_check(ell: u32, gamma: f64) -> f64 {
    let here = phase_shift(ell, gamma).factor;
    let l = ell as f64;
    let up = phase_shift(ell + 1, gamma).factor;
    let up_step = C::new(l + 1.0, gamma) / C::new(l + 1.0, -gamma);
    let mut dev = (up - here * up_step).norm();
    if ell >= 1 {
        let down = phase_shift(ell - 1, gamma).factor;
        let down_step = C::new(l, -gamma) / C::new(l, gamma);
        dev = dev.max((down - here * down_step).norm());
    }
    dev
}
