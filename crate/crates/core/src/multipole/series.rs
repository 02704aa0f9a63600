//! The partial-wave amplitude series and its resummations.
//!
//! Written term by term, the Coulomb amplitude is
//! `f = sum_l (2l+1)/(2ik) (e^{2i delta_l} - 1) P_l(cos theta)`.
//! Its terms do not decay (the Coulomb phase shifts grow like `gamma ln l`),
//! so the ordinary partial sums oscillate with an amplitude growing like
//! `sqrt(l)`. The divergence comes from taking the large-distance form of
//! each partial wave before summing; the sum itself still has a meaning
//! through Cesaro averaging, or after the rearrangement used by
//! [`f_reduced_series`], which converges in the ordinary sense.

use num_complex::Complex64;

use super::phase::PhaseShiftSweep;
use crate::asymptotic::coulomb_gamma_ratio;
use crate::error::{domain, Result};
use crate::specfun::LegendreSweep;
use crate::types::ScatteringParams;

type C = Complex64;

fn check_angle(op: &'static str, theta: f64) -> Result<()> {
    if theta > 0.0 && theta <= std::f64::consts::PI {
        Ok(())
    } else {
        Err(domain(op, format!("theta = {theta} outside (0, pi]")))
    }
}

fn one_minus_cos(theta: f64) -> f64 {
    let h = (0.5 * theta).sin();
    2.0 * h * h
}

/// Terms `(2l+1)/(2ik) (e^{2i delta_l} - 1) P_l(cos theta)` for `l = 0, 1, ...`.
fn amplitude_terms(p: &ScatteringParams, theta: f64) -> impl Iterator<Item = C> {
    let inv = C::new(0.0, -0.5 / p.k);
    PhaseShiftSweep::new(p.gamma)
        .zip(LegendreSweep::new(theta.cos()))
        .map(move |(ps, (ell, pl))| inv * (2.0 * ell as f64 + 1.0) * (ps.factor - 1.0) * pl)
}

/// Ordinary partial sum of the amplitude series up to `ell_max`. Diverges as
/// `ell_max` grows; provided as a diagnostic.
pub fn f_series_partial_sum(p: &ScatteringParams, theta: f64, ell_max: u32) -> Result<C> {
    check_angle("f_series_partial_sum", theta)?;
    Ok(amplitude_terms(p, theta).take(ell_max as usize + 1).sum())
}

/// All partial sums `sigma_0, ..., sigma_{ell_max}` in one pass.
pub fn f_series_partial_sums(p: &ScatteringParams, theta: f64, ell_max: u32) -> Result<Vec<C>> {
    check_angle("f_series_partial_sums", theta)?;
    Ok(amplitude_terms(p, theta)
        .take(ell_max as usize + 1)
        .scan(C::new(0.0, 0.0), |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect())
}

/// Running (C,1) mean of a series fed one term at a time.
///
/// After terms `a_0 .. a_n` have been pushed, [`CesaroState::value`] is
/// `(1/(n+1)) sum_{k<=n} sigma_k` with `sigma_k = a_0 + ... + a_k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CesaroState {
    partial: C,
    partial_total: C,
    count: u64,
}

impl CesaroState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, term: C) {
        self.partial += term;
        self.partial_total += self.partial;
        self.count += 1;
    }

    /// Current ordinary partial sum `sigma_n`.
    pub fn partial_sum(&self) -> C {
        self.partial
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Cesaro mean of the partial sums so far; zero before any term.
    pub fn value(&self) -> C {
        if self.count == 0 {
            C::new(0.0, 0.0)
        } else {
            self.partial_total / self.count as f64
        }
    }
}

/// `n`-th Cesaro mean of the amplitude series (terms `l = 0 .. n`).
pub fn f_series_cesaro(p: &ScatteringParams, theta: f64, n: u32) -> Result<C> {
    check_angle("f_series_cesaro", theta)?;
    if n < 1 {
        return Err(domain("f_series_cesaro", "n must be >= 1"));
    }
    let mut st = CesaroState::new();
    for t in amplitude_terms(p, theta).take(n as usize + 1) {
        st.push(t);
    }
    Ok(st.value())
}

/// Cesaro means for several orders from a single sweep up to the largest.
/// The output is in the order of `ns`.
pub fn f_series_cesaro_many(p: &ScatteringParams, theta: f64, ns: &[u32]) -> Result<Vec<C>> {
    check_angle("f_series_cesaro", theta)?;
    if ns.iter().any(|&n| n < 1) {
        return Err(domain("f_series_cesaro", "n must be >= 1"));
    }
    let n_max = ns.iter().copied().max().unwrap_or(0);
    let mut out = vec![C::new(0.0, 0.0); ns.len()];
    let mut st = CesaroState::new();
    for (ell, t) in amplitude_terms(p, theta).take(n_max as usize + 1).enumerate() {
        st.push(t);
        for (slot, &n) in out.iter_mut().zip(ns) {
            if n as usize == ell {
                *slot = st.value();
            }
        }
    }
    Ok(out)
}

/// Convergent rearrangement of the amplitude series,
/// `f = (gamma/k)/(1-cos theta) sum_l e^{2i delta_l} (l/(l+i gamma) - (l+1)/(l+1-i gamma)) P_l(cos theta)`.
/// Terms fall off like `l^{-3/2}`.
pub fn f_reduced_series(p: &ScatteringParams, theta: f64, ell_max: u32) -> Result<C> {
    check_angle("f_reduced_series", theta)?;
    if p.gamma == 0.0 {
        return Ok(C::new(0.0, 0.0));
    }
    let sum: C = reduced_terms(p, theta).take(ell_max as usize + 1).sum();
    Ok(sum * (p.gamma / p.k) / one_minus_cos(theta))
}

/// Terms of the sum inside [`f_reduced_series`], without the prefactor.
pub fn reduced_series_terms(p: &ScatteringParams, theta: f64, ell_max: u32) -> Result<Vec<C>> {
    check_angle("reduced_series_terms", theta)?;
    Ok(reduced_terms(p, theta).take(ell_max as usize + 1).collect())
}

fn reduced_terms(p: &ScatteringParams, theta: f64) -> impl Iterator<Item = C> {
    let g = p.gamma;
    PhaseShiftSweep::new(g)
        .zip(LegendreSweep::new(theta.cos()))
        .map(move |(ps, (ell, pl))| {
            let l = ell as f64;
            let first = if ell == 0 { C::new(0.0, 0.0) } else { l / C::new(l, g) };
            let second = (l + 1.0) / C::new(l + 1.0, -g);
            ps.factor * (first - second) * pl
        })
}

/// Closed form of the resummed amplitude,
/// `f = -(gamma/(k (1-cos theta))) Gamma(1+i gamma)/Gamma(1-i gamma) e^{-i gamma ln(s/2)}`.
pub fn f_closed_form(p: &ScatteringParams, theta: f64) -> Result<C> {
    check_angle("f_closed_form", theta)?;
    let s = one_minus_cos(theta);
    Ok(-(p.gamma / (p.k * s)) * coulomb_gamma_ratio(p.gamma) * C::new(0.0, -p.gamma * (0.5 * s).ln()).exp())
}
