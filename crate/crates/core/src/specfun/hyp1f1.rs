//! Kummer's confluent hypergeometric function `1F1(a; b; z)`.
//!
//! Three evaluation routes are combined by [`hyp1f1`]:
//!
//! * the defining power series, used while its terms do not cancel badly;
//! * analytic continuation along the ray `0 -> z` by local Taylor expansion
//!   of Kummer's equation `z F'' + (b - z) F' - a F = 0`, for the band where
//!   the series loses too many digits but `|z|` is not yet asymptotic;
//! * the large-`|z|` two-sum asymptotic expansion.
//!
//! All arithmetic is `f64`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::log_gamma_complex;
use crate::error::{domain, Error, Result};

type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);

/// Arguments of `1F1(a; b; z)`. `b` may not be a non-positive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp1F1Params {
    pub a: C,
    pub b: C,
    pub z: C,
}

impl Hyp1F1Params {
    pub fn new(a: C, b: C, z: C) -> Result<Self> {
        if b.im == 0.0 && b.re <= 0.0 && b.re == b.re.round() {
            return Err(domain("hyp1f1", format!("b = {} is a non-positive integer", b.re)));
        }
        if !(a.re.is_finite() && a.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
            return Err(domain("hyp1f1", "non-finite argument"));
        }
        Ok(Self { a, b, z })
    }
}

/// Tunables of the route selection in [`hyp1f1_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp1F1Config {
    /// Relative tolerance for series truncation.
    pub tol: f64,
    /// Term budget for any single series.
    pub max_terms: usize,
    /// The asymptotic expansion is used once
    /// `|z| > asymptotic_base + asymptotic_scale * P`, with `P` the largest of
    /// `|a|^2`, `|(b-a)(1-a)|` and `|a(a-b+1)|`.
    pub asymptotic_base: f64,
    pub asymptotic_scale: f64,
    /// Largest accepted ratio between the biggest series term and the sum.
    pub cancellation_limit: f64,
}

impl Default for Hyp1F1Config {
    fn default() -> Self {
        Self {
            tol: 1e-16,
            max_terms: 20_000,
            asymptotic_base: 30.0,
            asymptotic_scale: 2.0,
            cancellation_limit: 1e2,
        }
    }
}

/// Evaluation route picked by [`hyp1f1_route`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hyp1F1Route {
    Series,
    Continuation,
    Asymptotic,
}

struct SeriesSum {
    value: C,
    derivative: C,
    max_term: f64,
}

// Number of consecutive negligible terms required before stopping.
const QUIET_TERMS: usize = 3;

fn series_sum(p: &Hyp1F1Params, tol: f64, max_terms: usize) -> Result<SeriesSum> {
    let Hyp1F1Params { a, b, z } = *p;
    let mut term = ONE;
    let mut sum = ONE;
    // n t_n accumulates z F'(z)
    let mut zdsum = ZERO;
    let mut max_term = 1.0f64;
    let mut quiet = 0;
    for n in 0..max_terms {
        let nf = n as f64;
        term *= (a + nf) * z / ((b + nf) * (nf + 1.0));
        sum += term;
        zdsum += term * (nf + 1.0);
        let mag = term.norm();
        max_term = max_term.max(mag);
        if mag <= tol * sum.norm() {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                let derivative = if z == ZERO { a / b } else { zdsum / z };
                return Ok(SeriesSum {
                    value: sum,
                    derivative,
                    max_term,
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        op: "hyp1f1_series",
        terms: max_terms,
    })
}

/// Power series `sum_n (a)_n / (b)_n z^n / n!`, stopped once three
/// consecutive terms fall below `tol * |sum|`.
pub fn hyp1f1_series(p: &Hyp1F1Params, tol: f64) -> Result<C> {
    if !(tol > 0.0) {
        return Err(domain("hyp1f1_series", "tol must be positive"));
    }
    series_sum(p, tol, Hyp1F1Config::default().max_terms).map(|s| s.value)
}

fn is_nonpositive_integer(x: C) -> bool {
    x.im == 0.0 && x.re <= 0.0 && x.re == x.re.round()
}

/// The prefactors `Γ(b)/Γ(a) e^q q^{a-b}` and `e^{±iπa} Γ(b)/Γ(b-a) q^{-a}`
/// multiplying the two asymptotic sums. The upper sign applies for
/// `Im q >= 0`.
fn asymptotic_prefactors(a: C, b: C, q: C) -> Result<(C, C)> {
    let ln_q = q.ln();
    let lg_b = log_gamma_complex(b)?;
    let first = if is_nonpositive_integer(a) {
        ZERO
    } else {
        (lg_b - log_gamma_complex(a)? + q + (a - b) * ln_q).exp()
    };
    let bma = b - a;
    let second = if is_nonpositive_integer(bma) {
        ZERO
    } else {
        let sign = if q.im >= 0.0 { 1.0 } else { -1.0 };
        let phase = C::i() * (sign * PI) * a;
        (phase + lg_b - log_gamma_complex(bma)? - a * ln_q).exp()
    };
    Ok((first, second))
}

/// Large-`|z|` expansion truncated to `n_terms` terms in each of its two
/// sums. The caller is responsible for `|z|` being large compared with
/// `|a|`, `|b - a|`.
pub fn hyp1f1_asymptotic(p: &Hyp1F1Params, n_terms: usize) -> Result<C> {
    if n_terms < 1 {
        return Err(domain("hyp1f1_asymptotic", "n_terms must be >= 1"));
    }
    if p.z == ZERO {
        return Err(domain("hyp1f1_asymptotic", "z = 0"));
    }
    let Hyp1F1Params { a, b, z: q } = *p;
    let (pre1, pre2) = asymptotic_prefactors(a, b, q)?;
    let mut s1 = ZERO;
    let mut s2 = ZERO;
    let mut t1 = ONE;
    let mut t2 = ONE;
    for k in 0..n_terms {
        s1 += t1;
        s2 += t2;
        let kf = k as f64;
        t1 *= (b - a + kf) * (1.0 - a + kf) / ((kf + 1.0) * q);
        t2 *= (a + kf) * (a - b + 1.0 + kf) / ((kf + 1.0) * (-q));
    }
    Ok(pre1 * s1 + pre2 * s2)
}

/// Sums an asymptotic series with ratio `next(k)` up to its smallest term,
/// or until the terms fall below `tol` relative to the partial sum.
fn optimally_truncated(mut ratio: impl FnMut(f64) -> C, tol: f64, cap: usize) -> C {
    let mut sum = ONE;
    let mut term = ONE;
    let mut last = 1.0f64;
    for k in 0..cap {
        let next = term * ratio(k as f64);
        let mag = next.norm();
        if mag > last {
            break;
        }
        sum += next;
        if mag <= tol * sum.norm() {
            break;
        }
        term = next;
        last = mag;
    }
    sum
}

fn hyp1f1_asymptotic_auto(p: &Hyp1F1Params, cfg: &Hyp1F1Config) -> Result<C> {
    let Hyp1F1Params { a, b, z: q } = *p;
    let (pre1, pre2) = asymptotic_prefactors(a, b, q)?;
    let s1 = if pre1 == ZERO {
        ZERO
    } else {
        optimally_truncated(
            |k| (b - a + k) * (1.0 - a + k) / ((k + 1.0) * q),
            cfg.tol,
            cfg.max_terms,
        )
    };
    let s2 = if pre2 == ZERO {
        ZERO
    } else {
        optimally_truncated(
            |k| (a + k) * (a - b + 1.0 + k) / ((k + 1.0) * (-q)),
            cfg.tol,
            cfg.max_terms,
        )
    };
    Ok(pre1 * s1 + pre2 * s2)
}

fn parameter_size(a: C, b: C) -> f64 {
    a.norm_sqr()
        .max(((b - a) * (1.0 - a)).norm())
        .max((a * (a - b + 1.0)).norm())
}

fn asymptotic_regime(p: &Hyp1F1Params, cfg: &Hyp1F1Config) -> bool {
    p.z.norm() > cfg.asymptotic_base + cfg.asymptotic_scale * parameter_size(p.a, p.b)
}

/// Continues `(F, F')` from `z0` to `z1` along the straight segment joining
/// them, using local Taylor expansions of Kummer's equation.
fn continue_along_ray(a: C, b: C, z0: C, f0: C, d0: C, z1: C, cfg: &Hyp1F1Config) -> Result<C> {
    let total = (z1 - z0).norm();
    let dir = (z1 - z0) / total;
    let start = z0.norm();
    let shape = 2f64.max(a.norm()).max(b.norm());
    let mut f = f0;
    let mut d = d0;
    let mut travelled = 0.0;
    while travelled < total {
        let zc = z0 + dir * travelled;
        let t = zc.norm().max(start);
        let step = (total - travelled).min(1.0).min(t / shape);
        let h = dir * step;
        // c_{n+2} = [-(n+1)(n+b-zc) c_{n+1} + (n+a) c_n] / (zc (n+1)(n+2))
        let mut c_prev = f;
        let mut c_cur = d;
        let mut hp = h; // h^{n+1}
        let mut value = f + d * h;
        let mut deriv = d;
        let mut quiet = 0;
        let mut n = 0usize;
        loop {
            let nf = n as f64;
            let c_next = (-(nf + 1.0) * (nf + b - zc) * c_cur + (nf + a) * c_prev) / (zc * ((nf + 1.0) * (nf + 2.0)));
            let dterm = c_next * hp * (nf + 2.0);
            hp *= h;
            let vterm = c_next * hp;
            value += vterm;
            deriv += dterm;
            if vterm.norm() <= cfg.tol * value.norm() && dterm.norm() <= cfg.tol * deriv.norm() {
                quiet += 1;
                if quiet >= QUIET_TERMS {
                    break;
                }
            } else {
                quiet = 0;
            }
            c_prev = c_cur;
            c_cur = c_next;
            n += 1;
            if n > cfg.max_terms {
                return Err(Error::NonConvergence {
                    op: "hyp1f1 continuation",
                    terms: n,
                });
            }
        }
        f = value;
        d = deriv;
        travelled += step;
    }
    Ok(f)
}

fn hyp1f1_continuation(p: &Hyp1F1Params, cfg: &Hyp1F1Config) -> Result<C> {
    let Hyp1F1Params { a, b, z } = *p;
    let dir = z / z.norm();
    let mut radius = z.norm().min(2.0);
    loop {
        let z0 = dir * radius;
        let s = series_sum(&Hyp1F1Params { a, b, z: z0 }, cfg.tol, cfg.max_terms)?;
        if s.max_term <= cfg.cancellation_limit * s.value.norm() || radius < 1.0 / 64.0 {
            if radius >= z.norm() {
                return Ok(s.value);
            }
            return continue_along_ray(a, b, z0, s.value, s.derivative, z, cfg);
        }
        radius *= 0.5;
    }
}

/// Route [`hyp1f1_with`] will take for these arguments.
pub fn hyp1f1_route(p: &Hyp1F1Params, cfg: &Hyp1F1Config) -> Result<Hyp1F1Route> {
    if asymptotic_regime(p, cfg) {
        return Ok(Hyp1F1Route::Asymptotic);
    }
    let s = series_sum(p, cfg.tol, cfg.max_terms)?;
    Ok(if s.max_term <= cfg.cancellation_limit * s.value.norm() {
        Hyp1F1Route::Series
    } else {
        Hyp1F1Route::Continuation
    })
}

/// `1F1(a; b; z)` with the default configuration.
pub fn hyp1f1(p: &Hyp1F1Params) -> Result<C> {
    hyp1f1_with(p, &Hyp1F1Config::default())
}

pub fn hyp1f1_with(p: &Hyp1F1Params, cfg: &Hyp1F1Config) -> Result<C> {
    if p.z == ZERO || p.a == ZERO {
        return Ok(ONE);
    }
    if p.a == p.b {
        return Ok(p.z.exp());
    }
    if asymptotic_regime(p, cfg) {
        return hyp1f1_asymptotic_auto(p, cfg);
    }
    let s = series_sum(p, cfg.tol, cfg.max_terms)?;
    if s.max_term <= cfg.cancellation_limit * s.value.norm() {
        return Ok(s.value);
    }
    hyp1f1_continuation(p, cfg)
}
