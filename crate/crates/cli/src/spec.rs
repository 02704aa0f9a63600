//! Scan specifications: what to compute, with which parameters, on which grid.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use scatter_core::{BlackHoleParams, ScatteringParams};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    PsiExact,
    PsiAsymptotic,
    Currents,
    CrossSection,
    Cesaro,
    ReducedSeries,
    DivergingSum,
    FieldMap,
    BhMode,
}

impl Quantity {
    pub const ALL: [Quantity; 9] = [
        Quantity::PsiExact,
        Quantity::PsiAsymptotic,
        Quantity::Currents,
        Quantity::CrossSection,
        Quantity::Cesaro,
        Quantity::ReducedSeries,
        Quantity::DivergingSum,
        Quantity::FieldMap,
        Quantity::BhMode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::PsiExact => "psi_exact",
            Quantity::PsiAsymptotic => "psi_asymptotic",
            Quantity::Currents => "currents",
            Quantity::CrossSection => "cross_section",
            Quantity::Cesaro => "cesaro",
            Quantity::ReducedSeries => "reduced_series",
            Quantity::DivergingSum => "diverging_sum",
            Quantity::FieldMap => "field_map",
            Quantity::BhMode => "bh_mode",
        }
    }

    /// Quantities built on the asymptotic split or on the amplitude, which do
    /// not exist in the forward direction.
    pub fn excludes_forward(self) -> bool {
        matches!(
            self,
            Quantity::PsiAsymptotic
                | Quantity::Currents
                | Quantity::CrossSection
                | Quantity::Cesaro
                | Quantity::ReducedSeries
                | Quantity::DivergingSum
        )
    }

    fn is_series(self) -> bool {
        matches!(
            self,
            Quantity::Cesaro | Quantity::ReducedSeries | Quantity::CrossSection
        )
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn quantity_names() -> String {
    Quantity::ALL.iter().map(|q| q.name()).collect::<Vec<_>>().join(", ")
}

impl FromStr for Quantity {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Quantity::ALL
            .iter()
            .copied()
            .find(|q| q.name() == s)
            .ok_or_else(|| CliError::invalid(format!("unknown quantity '{s}'; valid names: {}", quantity_names())))
    }
}

fn parse_number(s: &str) -> Result<f64, CliError> {
    let t = s.trim();
    let v = match t {
        "pi" => PI,
        "-pi" => -PI,
        _ => t
            .parse::<f64>()
            .map_err(|_| CliError::invalid(format!("'{t}' is not a number")))?,
    };
    if !v.is_finite() {
        return Err(CliError::invalid(format!("'{t}' is not finite")));
    }
    Ok(v)
}

/// One grid axis, `start:end:n` with an optional `:log` suffix, or an
/// explicit list of values. `pi` is accepted as a number.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum AxisSpec {
    List(Vec<f64>),
    Range(String),
}

impl AxisSpec {
    pub fn values(&self, axis: &str) -> Result<Vec<f64>, CliError> {
        match self {
            AxisSpec::List(v) => {
                if v.is_empty() {
                    return Err(CliError::invalid(format!("{axis}: empty list")));
                }
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(CliError::invalid(format!("{axis}: non-finite value")));
                }
                Ok(v.clone())
            }
            AxisSpec::Range(s) => parse_range(axis, s),
        }
    }
}

impl FromStr for AxisSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s.contains(':') {
            Ok(AxisSpec::Range(s.to_string()))
        } else {
            s.split(',')
                .map(parse_number)
                .collect::<Result<Vec<_>, _>>()
                .map(AxisSpec::List)
        }
    }
}

fn parse_range(axis: &str, s: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let log = match parts.len() {
        3 => false,
        4 if parts[3].trim() == "log" => true,
        _ => {
            return Err(CliError::invalid(format!(
                "{axis}: expected A:B:N or A:B:N:log, got '{s}'"
            )))
        }
    };
    let a = parse_number(parts[0])?;
    let b = parse_number(parts[1])?;
    let n: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| CliError::invalid(format!("{axis}: sample count '{}' is not an integer", parts[2])))?;
    if n < 2 {
        return Err(CliError::invalid(format!("{axis}: sample count must be >= 2, got {n}")));
    }
    if !(a < b) {
        return Err(CliError::invalid(format!(
            "{axis}: range must be ordered, got {a} >= {b}"
        )));
    }
    if log && !(a > 0.0) {
        return Err(CliError::invalid(format!(
            "{axis}: logarithmic range needs a positive start, got {a}"
        )));
    }
    let last = (n - 1) as f64;
    Ok((0..n)
        .map(|i| {
            let t = i as f64 / last;
            if i == n - 1 {
                b
            } else if log {
                a * (b / a).powf(t)
            } else {
                a + (b - a) * t
            }
        })
        .collect())
}

/// Scan description as read from a preset file or assembled from flags.
/// Every field is optional; missing ones take per-quantity defaults.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpec {
    pub quantity: Option<String>,
    pub gamma: Option<f64>,
    pub k: Option<f64>,
    pub mass: Option<f64>,
    pub omega: Option<f64>,
    pub rho: Option<AxisSpec>,
    pub theta: Option<AxisSpec>,
    pub kx: Option<AxisSpec>,
    pub kz: Option<AxisSpec>,
    pub r: Option<AxisSpec>,
    pub ell: Option<Vec<u32>>,
    pub ell_max: Option<Vec<u32>>,
    pub cesaro_n: Option<Vec<u32>>,
    pub mu: Option<Vec<f64>>,
    pub backreaction: Option<bool>,
    pub acknowledge_classical_cross_section: Option<bool>,
}

impl RawSpec {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::invalid(format!("bad preset: {e}")))
    }

    /// Fields set in `over` replace those in `self`.
    pub fn overlay(self, over: RawSpec) -> RawSpec {
        RawSpec {
            quantity: over.quantity.or(self.quantity),
            gamma: over.gamma.or(self.gamma),
            k: over.k.or(self.k),
            mass: over.mass.or(self.mass),
            omega: over.omega.or(self.omega),
            rho: over.rho.or(self.rho),
            theta: over.theta.or(self.theta),
            kx: over.kx.or(self.kx),
            kz: over.kz.or(self.kz),
            r: over.r.or(self.r),
            ell: over.ell.or(self.ell),
            ell_max: over.ell_max.or(self.ell_max),
            cesaro_n: over.cesaro_n.or(self.cesaro_n),
            mu: over.mu.or(self.mu),
            backreaction: over.backreaction.or(self.backreaction),
            acknowledge_classical_cross_section: over
                .acknowledge_classical_cross_section
                .or(self.acknowledge_classical_cross_section),
        }
    }

    pub fn resolve(&self) -> Result<ScanSpec, CliError> {
        let quantity: Quantity = self
            .quantity
            .as_deref()
            .ok_or_else(|| CliError::invalid(format!("no quantity given; valid names: {}", quantity_names())))?
            .parse()?;

        let classical = quantity == Quantity::BhMode || self.mass.is_some() || self.omega.is_some();
        let params = if classical {
            if self.gamma.is_some() || self.k.is_some() {
                return Err(CliError::invalid(
                    "gamma/k and mass/omega are mutually exclusive; black-hole runs derive gamma = -2 M omega and k = omega",
                ));
            }
            let bh = BlackHoleParams::new(self.mass.unwrap_or(0.05), self.omega.unwrap_or(1.0))
                .map_err(|e| CliError::invalid(e.to_string()))?;
            Params::BlackHole(bh)
        } else {
            let sp = ScatteringParams::new(self.gamma.unwrap_or(0.4), self.k.unwrap_or(1.0))
                .map_err(|e| CliError::invalid(e.to_string()))?;
            Params::Coulomb(sp)
        };

        let default_theta = if quantity.is_series() {
            AxisSpec::Range("1e-3:pi:200:log".into())
        } else {
            AxisSpec::Range("0.01:pi:200".into())
        };
        let theta = self.theta.clone().unwrap_or(default_theta).values("theta")?;
        let rho = self.rho.clone().unwrap_or(AxisSpec::List(vec![10.0])).values("rho")?;
        let kx = self
            .kx
            .clone()
            .unwrap_or(AxisSpec::Range("-40:40:81".into()))
            .values("kx")?;
        let kz = self
            .kz
            .clone()
            .unwrap_or(AxisSpec::Range("-40:80:121".into()))
            .values("kz")?;
        let r = self
            .r
            .clone()
            .unwrap_or(AxisSpec::Range("100:1000:10".into()))
            .values("r")?;

        if let Some(t) = theta.iter().find(|t| !(0.0..=PI).contains(*t)) {
            return Err(CliError::invalid(format!("theta = {t} outside [0, pi]")));
        }
        if quantity.excludes_forward() && theta.contains(&0.0) {
            return Err(CliError::invalid(format!(
                "theta = 0 requested for {quantity}: this quantity does not exist in the forward direction (valid only for theta > 0)"
            )));
        }
        if let Some(x) = rho.iter().find(|x| !(**x >= 0.0)) {
            return Err(CliError::invalid(format!("rho = {x} must be >= 0")));
        }
        if matches!(quantity, Quantity::PsiAsymptotic | Quantity::Currents) && rho.contains(&0.0) {
            return Err(CliError::invalid(format!(
                "rho = 0 requested for {quantity}: needs rho > 0"
            )));
        }

        let default_ell_max = match quantity {
            Quantity::DivergingSum => vec![2000],
            _ => vec![1000],
        };
        let ell_max = self.ell_max.clone().unwrap_or(default_ell_max);
        let cesaro_n = self.cesaro_n.clone().unwrap_or_else(|| vec![1000]);
        if cesaro_n.is_empty() || cesaro_n.iter().any(|&n| n < 1) {
            return Err(CliError::invalid("cesaro_n values must be >= 1"));
        }
        if ell_max.is_empty() {
            return Err(CliError::invalid("ell_max list is empty"));
        }
        let ell = self.ell.clone().unwrap_or_else(|| vec![2]);
        if quantity == Quantity::BhMode && ell.contains(&0) {
            return Err(CliError::invalid(
                "l = 0 requested for bh_mode: the s-wave is outside the long-wavelength Coulomb mapping",
            ));
        }
        let mu = self.mu.clone().unwrap_or_else(|| vec![0.0]);
        if let Some(m) = mu.iter().find(|m| !(**m >= 0.0)) {
            return Err(CliError::invalid(format!("mu = {m} must be >= 0")));
        }
        let acknowledge = self.acknowledge_classical_cross_section.unwrap_or(false);
        if quantity == Quantity::CrossSection && matches!(params, Params::BlackHole(_)) && !acknowledge {
            return Err(CliError::invalid(
                "cross_section for a black-hole run needs --acknowledge-classical-cross-section: \
                 the resummed classical |f|^2 does not correspond to a physical observable",
            ));
        }
        if !matches!(quantity, Quantity::CrossSection | Quantity::BhMode) && matches!(params, Params::BlackHole(_)) {
            return Err(CliError::invalid(format!("{quantity} takes gamma/k, not mass/omega")));
        }

        Ok(ScanSpec {
            quantity,
            params,
            grid: Grid { rho, theta, kx, kz, r },
            options: Options {
                backreaction: self.backreaction.unwrap_or(false),
                ell_max,
                cesaro_n,
                ell,
                mu,
                acknowledge_classical_cross_section: acknowledge,
            },
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Params {
    Coulomb(ScatteringParams),
    BlackHole(BlackHoleParams),
}

impl Params {
    /// The Coulomb problem to evaluate; black-hole runs use the
    /// long-wavelength reduction.
    pub fn coulomb(&self) -> ScatteringParams {
        match self {
            Params::Coulomb(p) => *p,
            Params::BlackHole(bh) => scatter_core::classical::coulomb_reduction(bh),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub rho: Vec<f64>,
    pub theta: Vec<f64>,
    pub kx: Vec<f64>,
    pub kz: Vec<f64>,
    pub r: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub backreaction: bool,
    pub ell_max: Vec<u32>,
    pub cesaro_n: Vec<u32>,
    pub ell: Vec<u32>,
    pub mu: Vec<f64>,
    pub acknowledge_classical_cross_section: bool,
}

/// A validated scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanSpec {
    pub quantity: Quantity,
    pub params: Params,
    pub grid: Grid,
    pub options: Options,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("x", "0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        let l = parse_range("x", "1:100:3:log").unwrap();
        assert!((l[1] - 10.0).abs() < 1e-12 && l[2] == 100.0);
        assert_eq!(*parse_range("t", "0:pi:5").unwrap().last().unwrap(), PI);
        assert!(parse_range("x", "0:1:1").is_err());
        assert!(parse_range("x", "2:1:4").is_err());
        assert!(parse_range("x", "0:1:4:log").is_err());
        assert!(parse_range("x", "0:1").is_err());
    }

    #[test]
    fn axis_from_flag() {
        assert_eq!(
            "10,5,2".parse::<AxisSpec>().unwrap(),
            AxisSpec::List(vec![10.0, 5.0, 2.0])
        );
        assert!(matches!("1:2:3".parse::<AxisSpec>().unwrap(), AxisSpec::Range(_)));
    }

    #[test]
    fn forward_angle_rejected_for_asymptotic() {
        let raw = RawSpec {
            quantity: Some("psi_asymptotic".into()),
            theta: Some(AxisSpec::Range("0:1:5".into())),
            ..RawSpec::default()
        };
        let e = raw.resolve().unwrap_err();
        assert!(e.to_string().contains("theta = 0"));
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn classical_cross_section_needs_acknowledgement() {
        let mut raw = RawSpec {
            quantity: Some("cross_section".into()),
            mass: Some(0.05),
            omega: Some(1.0),
            ..RawSpec::default()
        };
        assert!(raw.resolve().is_err());
        raw.acknowledge_classical_cross_section = Some(true);
        assert!(raw.resolve().is_ok());
    }

    #[test]
    fn s_wave_black_hole_rejected() {
        let raw = RawSpec {
            quantity: Some("bh_mode".into()),
            ell: Some(vec![0, 2]),
            ..RawSpec::default()
        };
        assert!(raw.resolve().unwrap_err().to_string().contains("l = 0"));
    }

    #[test]
    fn overlay_prefers_flags() {
        let base = RawSpec {
            quantity: Some("cesaro".into()),
            gamma: Some(0.5),
            ..RawSpec::default()
        };
        let over = RawSpec {
            gamma: Some(2.0),
            ..RawSpec::default()
        };
        let m = base.overlay(over);
        assert_eq!(m.gamma, Some(2.0));
        assert_eq!(m.quantity.as_deref(), Some("cesaro"));
    }

    #[test]
    fn unknown_quantity_lists_names() {
        let e = "nope".parse::<Quantity>().unwrap_err().to_string();
        assert!(e.contains("psi_exact") && e.contains("bh_mode"));
    }
}
