use crate::error::CliError;
use crate::spec::Quantity;

pub fn description(q: Quantity) -> &'static str {
    match q {
        Quantity::PsiExact => {
            "psi_exact: exact Coulomb scattering state\n  \
             psi = e^{i rho cos theta} e^{-pi gamma/2} Gamma(1+i gamma) 1F1(-i gamma; 1; i rho (1 - cos theta))\n  \
             valid everywhere (rho >= 0, theta in [0, pi]); forward modulus e^{-pi gamma/2} sqrt(pi gamma / sinh pi gamma)\n  \
             columns: rho, theta, re_psi, im_psi, abs_psi"
        }
        Quantity::PsiAsymptotic => {
            "psi_asymptotic: large-distance split into distorted plane wave and scattered wave\n  \
             psi_in = e^{i kz + i gamma ln rho s} [1 - i gamma^2/(rho s) with --backreaction]\n  \
             psi_scat = -(gamma/(rho s)) e^{2i delta_0} e^{i rho - i gamma ln rho s}, s = 1 - cos theta\n  \
             valid rho s >> 1 (flag 'valid' marks rho s > 10); undefined at theta = 0\n  \
             columns include abs_psi_exact for comparison"
        }
        Quantity::Currents => {
            "currents: probability current J = Im(psi* grad psi), radial components\n  \
             exact, asymptotic total/in/scat/interference (total = in + scat + interference),\n  \
             leading interference -(gamma k/rho) cot^2(theta/2) cos(rho s - 2 gamma ln rho s + 2 delta_0),\n  \
             closed scattered current k gamma^2/(4 rho^2 sin^4(theta/2)),\n  \
             out = current of psi_exact - psi_in, out_g2 with the back-reaction term subtracted\n  \
             valid rho s >> 1 for the asymptotic columns; theta > 0"
        }
        Quantity::CrossSection => {
            "cross_section: Rutherford differential cross-section |f|^2\n  \
             f = -gamma/(2k sin^2(theta/2)) e^{2i delta_0}, compared with the Born amplitude of the\n  \
             screened potential f_B = -2 gamma k/(q^2 + mu^2), q = 2k sin(theta/2)\n  \
             valid theta in (0, pi]; mu >= 0 (rows per mu)"
        }
        Quantity::Cesaro => {
            "cesaro: Cesaro means of the divergent partial-wave amplitude series\n  \
             sum_l (2l+1)/(2ik) (e^{2i delta_l} - 1) P_l(cos theta), averaged over partial sums up to l = n\n  \
             converges to the closed form away from theta = 0; the convergent range widens with n\n  \
             columns carry f and (1 - cos theta) f"
        }
        Quantity::ReducedSeries => {
            "reduced_series: convergent rearrangement of the amplitude series\n  \
             f = (gamma/k)/(1 - cos theta) sum_l e^{2i delta_l} (l/(l+i gamma) - (l+1)/(l+1-i gamma)) P_l(cos theta)\n  \
             terms decay like l^{-3/2}; valid theta in (0, pi]"
        }
        Quantity::DivergingSum => {
            "diverging_sum: ordinary partial sums of the amplitude series versus l_max\n  \
             sum_{l <= L} (2l+1)/(2ik) (e^{2i delta_l} - 1) P_l(cos theta)\n  \
             oscillates with amplitude growing like sqrt(L); theta in (0, pi]"
        }
        Quantity::FieldMap => {
            "field_map: |psi_exact| on a Cartesian (kx, kz) grid\n  \
             flat plateau e^{-pi gamma/2}|Gamma(1+i gamma)| inside the paraboloid rho s < 1,\n  \
             i.e. kz > (kx^2 - 1)/2 (column 'inside'); valid everywhere"
        }
        Quantity::BhMode => {
            "bh_mode: scalar wave on a Schwarzschild black hole in the long-wavelength limit\n  \
             maps onto the Coulomb problem with gamma = -2 M omega, k = omega\n  \
             V_eff, tortoise coordinate r*, asymptotic mode u/r, the Coulomb-reduced mode F_l/rho and an\n  \
             integrated mode keeping the 12 M^2 omega^2/r^2 term\n  \
             valid l(l+1) > 12 (M omega)^2 (l >= 1) and omega r > 10 (l(l+1) + gamma^2) for the asymptotic mode"
        }
    }
}

pub fn describe(name: &str) -> Result<String, CliError> {
    let q: Quantity = name.parse()?;
    Ok(description(q).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_quantity_documented() {
        for q in Quantity::ALL {
            assert!(description(q).starts_with(q.name()));
        }
    }

    #[test]
    fn asymptotic_mentions_validity() {
        assert!(describe("psi_asymptotic").unwrap().contains("rho s >> 1"));
        assert!(describe("bh_mode").unwrap().contains("gamma = -2 M omega"));
        assert!(describe("cesaro").unwrap().contains("Cesaro"));
    }

    #[test]
    fn unknown_name_lists_valid_ones() {
        let e = describe("rutherford").unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("reduced_series"));
    }
}
