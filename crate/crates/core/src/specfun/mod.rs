//! Complex special functions used throughout the crate.

mod bessel;
mod gamma;
mod hyp1f1;
mod legendre;

pub use bessel::spherical_bessel_j;
pub use gamma::{gamma_complex, log_gamma_complex, pochhammer, recip_gamma};
pub use hyp1f1::{
    hyp1f1, hyp1f1_asymptotic, hyp1f1_route, hyp1f1_series, hyp1f1_with, Hyp1F1Config, Hyp1F1Params, Hyp1F1Route,
};
pub use legendre::{legendre_p, legendre_table, LegendreSweep};
