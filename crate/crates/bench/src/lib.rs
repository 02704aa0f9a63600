//! Shared fixtures for the kernel benchmarks.

use scatter_core::{FieldPoint, ScatteringParams};

/// Parameters used throughout the figures.
pub fn params(gamma: f64) -> ScatteringParams {
    ScatteringParams::new(gamma, 1.0).expect("finite parameters")
}

/// Field points on a `rho x theta` grid, row-major in `rho`.
pub fn polar_grid(rhos: &[f64], n_theta: usize) -> Vec<FieldPoint> {
    rhos.iter()
        .flat_map(|&rho| {
            (1..=n_theta).map(move |i| {
                let theta = std::f64::consts::PI * i as f64 / n_theta as f64;
                FieldPoint::new(rho, theta).expect("valid point")
            })
        })
        .collect()
}

/// `n` evenly spaced values on `[a, b]`.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}
