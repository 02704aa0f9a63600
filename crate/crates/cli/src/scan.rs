//! Evaluation of a [`ScanSpec`] into a table, one row per grid point.

use num_complex::Complex64 as C;
use rayon::prelude::*;

use scatter_core::asymptotic::{
    born_amplitude_yukawa, differential_cross_section, psi_asymptotic_with, AsymptoticOptions,
};
use scatter_core::classical::{
    effective_potential, integrate_radial_mode, long_wavelength_valid, radial_mode_asymptotic, tortoise_coordinate,
    RadialIntegratorOptions,
};
use scatter_core::currents::{
    current_decomposition_asymptotic_with, current_exact, current_outgoing_exact, current_scattered_asymptotic,
    default_step, interference_radial_leading,
};
use scatter_core::exact::{inside_paraboloid, psi_exact, psi_exact_grid};
use scatter_core::multipole::{
    coulomb_wave_regular, f_closed_form, f_reduced_series, f_series_cesaro_many, f_series_partial_sums,
};
use scatter_core::{BlackHoleParams, FieldPoint, ScatteringParams};

use crate::error::CliError;
use crate::spec::{Params, Quantity, ScanSpec};
use crate::table::{Cell, Table};

type Row = Vec<Cell>;

/// Evaluates `f` on every item concurrently and keeps grid order. On failure
/// the error of the first failing item in grid order is returned.
fn par_map<T, R, F>(items: &[T], f: F) -> Result<Vec<R>, CliError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R, CliError> + Sync + Send,
{
    let out: Vec<Result<R, CliError>> = items.par_iter().map(f).collect();
    out.into_iter().collect()
}

fn point(rho: f64, theta: f64) -> Result<FieldPoint, CliError> {
    Ok(FieldPoint::new(rho, theta)?)
}

fn cross(a: &[f64], b: &[f64]) -> Vec<(f64, f64)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect()
}

fn complex(z: C) -> [Cell; 3] {
    [z.re.into(), z.im.into(), z.norm().into()]
}

pub fn run_scan(spec: &ScanSpec) -> Result<Table, CliError> {
    let p = spec.params.coulomb();
    match spec.quantity {
        Quantity::PsiExact => scan_psi_exact(&p, spec),
        Quantity::PsiAsymptotic => scan_psi_asymptotic(&p, spec),
        Quantity::Currents => scan_currents(&p, spec),
        Quantity::CrossSection => scan_cross_section(&p, spec),
        Quantity::Cesaro => scan_cesaro(&p, spec),
        Quantity::ReducedSeries => scan_reduced_series(&p, spec),
        Quantity::DivergingSum => scan_diverging_sum(&p, spec),
        Quantity::FieldMap => scan_field_map(&p, spec),
        Quantity::BhMode => match spec.params {
            Params::BlackHole(bh) => scan_bh_mode(&bh, spec),
            Params::Coulomb(_) => Err(CliError::invalid("bh_mode needs mass/omega")),
        },
    }
}

fn scan_psi_exact(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let mut t = Table::new(vec!["rho", "theta", "re_psi", "im_psi", "abs_psi"]);
    t.rows = par_map(&cross(&spec.grid.rho, &spec.grid.theta), |&(rho, theta)| {
        let v = psi_exact(p, &point(rho, theta)?)?;
        let mut row: Row = vec![rho.into(), theta.into()];
        row.extend(complex(v));
        Ok(row)
    })?;
    Ok(t)
}

fn scan_psi_asymptotic(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let opts = AsymptoticOptions {
        backreaction: spec.options.backreaction,
        ..AsymptoticOptions::default()
    };
    let mut t = Table::new(vec![
        "rho",
        "theta",
        "rho_s",
        "re_psi_in",
        "im_psi_in",
        "re_psi_scat",
        "im_psi_scat",
        "re_psi",
        "im_psi",
        "abs_psi",
        "abs_psi_exact",
        "valid",
    ]);
    t.rows = par_map(&cross(&spec.grid.rho, &spec.grid.theta), |&(rho, theta)| {
        let pt = point(rho, theta)?;
        let a = psi_asymptotic_with(p, &pt, &opts)?;
        let exact = psi_exact(p, &pt)?;
        let mut row: Row = vec![rho.into(), theta.into(), pt.rho_s().into()];
        row.extend([a.psi_in.re, a.psi_in.im, a.psi_scat.re, a.psi_scat.im].map(Cell::from));
        row.extend(complex(a.total()));
        row.push(exact.norm().into());
        row.push(a.valid.into());
        Ok(row)
    })?;
    Ok(t)
}

fn scan_currents(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let br = spec.options.backreaction;
    let mut t = Table::new(vec![
        "rho",
        "theta",
        "rho_s",
        "j_r_exact",
        "j_theta_exact",
        "j_r_total",
        "j_r_in",
        "j_r_scat",
        "j_r_interf",
        "j_r_interf_leading",
        "j_r_scat_closed",
        "j_r_out",
        "j_r_out_g2",
    ]);
    t.rows = par_map(&cross(&spec.grid.rho, &spec.grid.theta), |&(rho, theta)| {
        let pt = point(rho, theta)?;
        let exact = current_exact(p, &pt)?;
        let d = current_decomposition_asymptotic_with(p, &pt, br, default_step(rho))?;
        let leading = interference_radial_leading(p, &pt)?;
        let closed = current_scattered_asymptotic(p, &pt)?;
        let out = current_outgoing_exact(p, &pt, false)?;
        let out_g2 = current_outgoing_exact(p, &pt, true)?;
        Ok([
            rho,
            theta,
            pt.rho_s(),
            exact.j_r,
            exact.j_theta,
            d.total.j_r,
            d.incoming.j_r,
            d.scattered.j_r,
            d.interference.j_r,
            leading,
            closed.j_r,
            out.j_r,
            out_g2.j_r,
        ]
        .map(Cell::from)
        .to_vec())
    })?;
    Ok(t)
}

fn scan_cross_section(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let mut t = Table::new(vec!["mu", "theta", "dsigma_closed", "dsigma_rutherford", "dsigma_born"]);
    t.rows = par_map(&cross(&spec.options.mu, &spec.grid.theta), |&(mu, theta)| {
        let closed = f_closed_form(p, theta)?.norm_sqr();
        let ruth = differential_cross_section(p, theta)?;
        let born = born_amplitude_yukawa(p, theta, mu)?.norm_sqr();
        Ok([mu, theta, closed, ruth, born].map(Cell::from).to_vec())
    })?;
    Ok(t)
}

const SERIES_COLUMNS: [&str; 11] = [
    "theta",
    "re_f",
    "im_f",
    "abs_f",
    "re_sf",
    "im_sf",
    "abs_sf",
    "re_sf_closed",
    "im_sf_closed",
    "abs_sf_closed",
    "rel_err",
];

/// Row of a series scan: the amplitude, the amplitude times `1 - cos theta`,
/// the closed form of the latter and the relative deviation.
fn series_row(order: u32, theta: f64, f: C, closed: C) -> Row {
    let s = 1.0 - theta.cos();
    let (sf, sc) = (f * s, closed * s);
    let mut row: Row = vec![order.into(), theta.into()];
    row.extend(complex(f));
    row.extend(complex(sf));
    row.extend(complex(sc));
    row.push(((sf - sc).norm() / sc.norm()).into());
    row
}

fn series_table(order_name: &'static str) -> Table {
    let mut cols = vec![order_name];
    cols.extend(SERIES_COLUMNS);
    Table::new(cols)
}

fn scan_cesaro(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let ns = &spec.options.cesaro_n;
    let per_theta = par_map(&spec.grid.theta, |&theta| {
        let closed = f_closed_form(p, theta)?;
        let fs = f_series_cesaro_many(p, theta, ns)?;
        Ok(ns
            .iter()
            .zip(fs)
            .map(|(&n, f)| series_row(n, theta, f, closed))
            .collect::<Vec<_>>())
    })?;
    let mut t = series_table("n");
    for i in 0..ns.len() {
        t.rows.extend(per_theta.iter().map(|rows| rows[i].clone()));
    }
    Ok(t)
}

fn scan_reduced_series(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let mut t = series_table("ell_max");
    let jobs: Vec<(u32, f64)> = spec
        .options
        .ell_max
        .iter()
        .flat_map(|&l| spec.grid.theta.iter().map(move |&th| (l, th)))
        .collect();
    t.rows = par_map(&jobs, |&(l, theta)| {
        let f = f_reduced_series(p, theta, l)?;
        Ok(series_row(l, theta, f, f_closed_form(p, theta)?))
    })?;
    Ok(t)
}

fn scan_diverging_sum(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let l_max = spec.options.ell_max.iter().copied().max().unwrap_or(0);
    let per_theta = par_map(&spec.grid.theta, |&theta| {
        let closed = f_closed_form(p, theta)?.norm();
        let sums = f_series_partial_sums(p, theta, l_max)?;
        Ok(sums
            .into_iter()
            .enumerate()
            .map(|(l, s)| {
                let mut row: Row = vec![theta.into(), (l as u32).into()];
                row.extend(complex(s));
                row.push(closed.into());
                row
            })
            .collect::<Vec<_>>())
    })?;
    let mut t = Table::new(vec!["theta", "ell_max", "re_sum", "im_sum", "abs_sum", "abs_f_closed"]);
    t.rows = per_theta.into_iter().flatten().collect();
    Ok(t)
}

fn scan_field_map(p: &ScatteringParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let (kx, kz) = (&spec.grid.kx, &spec.grid.kz);
    let psi = psi_exact_grid(p, kx, kz)?;
    let mut t = Table::new(vec![
        "kx", "kz", "rho", "theta", "re_psi", "im_psi", "abs_psi", "inside",
    ]);
    let cells = kz.iter().flat_map(|&z| kx.iter().map(move |&x| (x, z)));
    for ((x, z), v) in cells.zip(psi) {
        let pt = FieldPoint::from_cartesian(x, z);
        let mut row: Row = vec![x.into(), z.into(), pt.rho.into(), pt.theta.into()];
        row.extend(complex(v));
        row.push(inside_paraboloid(&pt).into());
        t.rows.push(row);
    }
    Ok(t)
}

fn scan_bh_mode(bh: &BlackHoleParams, spec: &ScanSpec) -> Result<Table, CliError> {
    let rs = bh.schwarzschild_radius();
    let opts = RadialIntegratorOptions::default();
    if let Some(r) = spec.grid.r.iter().find(|&&r| !(r > rs)) {
        return Err(CliError::invalid(format!(
            "r = {r} is not outside the horizon r_s = {rs}"
        )));
    }
    let jobs: Vec<(u32, f64)> = spec
        .options
        .ell
        .iter()
        .flat_map(|&l| spec.grid.r.iter().map(move |&r| (l, r)))
        .collect();
    let gamma = bh.gamma();
    let mut t = Table::new(vec![
        "ell",
        "r",
        "r_star",
        "v_eff",
        "long_wavelength",
        "mode_valid",
        "re_mode",
        "im_mode",
        "re_coulomb",
        "im_coulomb",
        "re_integrated",
        "im_integrated",
    ]);
    t.rows = par_map(&jobs, |&(ell, r)| {
        let lw = long_wavelength_valid(bh, ell)?;
        // points outside the asymptotic window are reported, not fatal
        let mode = radial_mode_asymptotic(bh, ell, r).ok();
        let rho = bh.omega * r;
        let coulomb = coulomb_wave_regular(ell, gamma, rho)? / rho;
        let integrated = if r > opts.start_in_rs * rs {
            integrate_radial_mode(bh, ell, r, &opts)?
        } else {
            C::new(f64::NAN, f64::NAN)
        };
        let m = mode.unwrap_or(C::new(f64::NAN, f64::NAN));
        let mut row: Row = vec![ell.into(), r.into()];
        row.push(tortoise_coordinate(bh, r)?.into());
        row.push(effective_potential(bh, ell, r)?.into());
        row.push(lw.into());
        row.push(mode.is_some().into());
        row.extend([m.re, m.im, coulomb.re, coulomb.im, integrated.re, integrated.im].map(Cell::from));
        Ok(row)
    })?;
    Ok(t)
}
