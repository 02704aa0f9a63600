//! Partial-wave description of Coulomb scattering.

mod coulomb;
mod identities;
mod phase;
mod series;

pub use coulomb::{coulomb_wave_regular, multipole_terms, psi_multipole_sum, MultipoleTerm};
pub use identities::{legendre_power_law_coeff, plane_wave_partial, PlaneWavePartial};
pub use phase::{phase_shift, phase_shift_recurrence_check, PhaseShiftFactor, PhaseShiftSweep};
pub use series::{
    f_closed_form, f_reduced_series, f_series_cesaro, f_series_cesaro_many, f_series_partial_sum,
    f_series_partial_sums, reduced_series_terms, CesaroState,
};
