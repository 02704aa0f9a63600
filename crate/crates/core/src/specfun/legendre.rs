//! Legendre polynomials by Bonnet's recurrence
//! `(l+1) P_{l+1} = (2l+1) x P_l - l P_{l-1}`.

use crate::error::{domain, Result};

/// Streams `(l, P_l(x))` for `l = 0, 1, 2, ...` without storing the table.
#[derive(Debug, Clone)]
pub struct LegendreSweep {
    x: f64,
    ell: u32,
    prev: f64,
    cur: f64,
}

impl LegendreSweep {
    pub fn new(x: f64) -> Self {
        Self {
            x,
            ell: 0,
            prev: 0.0,
            cur: 1.0,
        }
    }
}

impl Iterator for LegendreSweep {
    type Item = (u32, f64);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.ell, self.cur);
        let l = self.ell as f64;
        let next = ((2.0 * l + 1.0) * self.x * self.cur - l * self.prev) / (l + 1.0);
        self.prev = self.cur;
        self.cur = next;
        self.ell += 1;
        Some(out)
    }
}

fn check_domain(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(domain("legendre_p", format!("x = {x} outside [-1, 1]")))
    }
}

pub fn legendre_p(ell: u32, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(LegendreSweep::new(x)
        .nth(ell as usize)
        .map(|(_, p)| p)
        .unwrap_or(f64::NAN))
}

/// `[P_0(x), ..., P_{ell_max}(x)]`.
pub fn legendre_table(ell_max: u32, x: f64) -> Result<Vec<f64>> {
    check_domain(x)?;
    Ok(LegendreSweep::new(x)
        .take(ell_max as usize + 1)
        .map(|(_, p)| p)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn explicit(ell: u32, x: f64) -> f64 {
        match ell {
            0 => 1.0,
            1 => x,
            2 => 0.5 * (3.0 * x * x - 1.0),
            3 => 0.5 * (5.0 * x.powi(3) - 3.0 * x),
            4 => (35.0 * x.powi(4) - 30.0 * x * x + 3.0) / 8.0,
            5 => (63.0 * x.powi(5) - 70.0 * x.powi(3) + 15.0 * x) / 8.0,
            _ => unreachable!(),
        }
    }

    #[test]
    fn low_orders_match_explicit_polynomials() {
        for i in 0..=40 {
            let x = -1.0 + i as f64 * 0.05;
            for ell in 0..=5 {
                let got = legendre_p(ell, x).unwrap();
                assert!((got - explicit(ell, x)).abs() < 1e-13, "P_{ell}({x})");
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(legendre_p(0, 0.37).unwrap(), 1.0);
        assert_eq!(legendre_p(2, 1.0).unwrap(), 1.0);
        assert!((legendre_p(3, 0.3).unwrap() + 0.3825).abs() < 1e-15);
        assert!((legendre_p(7, -1.0).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn outside_domain_is_error() {
        assert!(legendre_p(2, 1.0001).is_err());
        assert!(legendre_table(2, -1.5).is_err());
    }

    #[test]
    fn bonnet_identity_to_high_order() {
        for &x in &[-0.93, -0.2, 0.0, 0.41, 0.999] {
            let p = legendre_table(501, x).unwrap();
            for l in 1..=500usize {
                let lf = l as f64;
                let rhs = (lf * p[l - 1] + (lf + 1.0) * p[l + 1]) / (2.0 * lf + 1.0);
                assert!((x * p[l] - rhs).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn table_and_sweep_agree() {
        let t = legendre_table(30, 0.6).unwrap();
        for (l, p) in LegendreSweep::new(0.6).take(31) {
            assert_eq!(t[l as usize], p);
        }
    }
}
