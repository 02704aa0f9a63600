//! Spherical Bessel functions of the first kind.

use num_complex::Complex64;

use super::gamma::log_gamma_complex;

fn ln_double_factorial_odd(ell: u32) -> f64 {
    // (2l+1)!! = (2l+1)! / (2^l l!)
    let l = ell as f64;
    let lg = |x: f64| log_gamma_complex(Complex64::new(x, 0.0)).map(|v| v.re).unwrap_or(0.0);
    lg(2.0 * l + 2.0) - l * std::f64::consts::LN_2 - lg(l + 1.0)
}

/// `j_l(x) = x^l/(2l+1)!! sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))`
fn small_argument_series(ell: u32, x: f64) -> f64 {
    let l = ell as f64;
    let y = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= y / (kf * (2.0 * l + 2.0 * kf + 1.0));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    (l * x.ln() - ln_double_factorial_odd(ell)).exp() * sum
}

fn upward(ell: u32, x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    if ell == 0 {
        return j0;
    }
    let mut prev = j0;
    let mut cur = s / (x * x) - c / x;
    for n in 1..ell {
        let next = (2.0 * n as f64 + 1.0) / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Miller's downward recurrence, normalised against `j_0` or `j_1`.
fn downward(ell: u32, x: f64) -> f64 {
    let l = ell as f64;
    let start = (l.max(x) + 30.0 + (40.0 * l).sqrt()) as u32;
    let mut above = 0.0f64;
    let mut cur = 1e-300f64;
    let mut at_ell = 0.0;
    let mut j1_hat = 0.0;
    for n in (1..=start).rev() {
        // j_{n-1} = (2n+1)/x j_n - j_{n+1}
        let below = (2.0 * n as f64 + 1.0) / x * cur - above;
        above = cur;
        cur = below;
        if n == ell {
            at_ell = above;
        }
        if n == 1 {
            j1_hat = above;
        }
        if cur.abs() > 1e200 {
            cur *= 1e-200;
            above *= 1e-200;
            at_ell *= 1e-200;
            j1_hat *= 1e-200;
        }
    }
    let j0_hat = cur;
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let j1 = s / (x * x) - c / x;
    let scale = if j0.abs() >= j1.abs() { j0 / j0_hat } else { j1 / j1_hat };
    if ell == 0 {
        j0
    } else {
        at_ell * scale
    }
}

/// `j_l(x)` for `x >= 0`; negative `x` uses the parity `j_l(-x) = (-1)^l j_l(x)`.
pub fn spherical_bessel_j(ell: u32, x: f64) -> f64 {
    if x < 0.0 {
        let v = spherical_bessel_j(ell, -x);
        return if ell % 2 == 0 { v } else { -v };
    }
    if x == 0.0 {
        return if ell == 0 { 1.0 } else { 0.0 };
    }
    if x < 1.0 {
        small_argument_series(ell, x)
    } else if x >= ell as f64 {
        upward(ell, x)
    } else {
        downward(ell, x)
    }
}
