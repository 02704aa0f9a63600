//! Coulomb scattering: exact and asymptotic wavefunctions, probability
//! currents, partial-wave series and their resummation, and the
//! long-wavelength Schwarzschild reduction.

pub mod asymptotic;
pub mod classical;
pub mod currents;
pub mod error;
pub mod exact;
pub mod multipole;
pub mod specfun;
pub mod types;

pub use error::{Error, Result};
pub use types::{BlackHoleParams, ComplexAmplitude, CurrentVector, FieldPoint, ScatteringParams};
