use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use scatter_cli::{describe, presets, run_scan, AxisSpec, CliError, RawSpec};

/// Emit CSV datasets of Coulomb scattering quantities.
#[derive(Debug, Parser)]
#[command(name = "scatter", version)]
struct Args {
    /// Quantity to scan, or `describe NAME`. Optional with --preset.
    quantity: Option<String>,

    /// Quantity name when the first argument is `describe`.
    name: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
    #[arg(long)]
    omega: Option<f64>,

    /// A:B:N[:log] or a comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    rho_range: Option<AxisSpec>,
    #[arg(long, allow_hyphen_values = true)]
    theta_range: Option<AxisSpec>,
    #[arg(long, allow_hyphen_values = true)]
    kx_range: Option<AxisSpec>,
    #[arg(long, allow_hyphen_values = true)]
    kz_range: Option<AxisSpec>,
    #[arg(long, allow_hyphen_values = true)]
    r_range: Option<AxisSpec>,

    #[arg(long, value_delimiter = ',')]
    ell_max: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    cesaro_n: Option<Vec<u32>>,
    /// Multipole orders for bh_mode.
    #[arg(long, value_delimiter = ',')]
    ell: Option<Vec<u32>>,
    /// Screening masses for cross_section.
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<f64>>,

    #[arg(long)]
    backreaction: bool,
    #[arg(long)]
    acknowledge_classical_cross_section: bool,

    /// fig1 ... fig7, fig3_slices or bh_mode.
    #[arg(long)]
    preset: Option<String>,

    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Args {
    fn overrides(&self) -> RawSpec {
        RawSpec {
            quantity: self.quantity.clone(),
            gamma: self.gamma,
            k: self.k,
            mass: self.mass,
            omega: self.omega,
            rho: self.rho_range.clone(),
            theta: self.theta_range.clone(),
            kx: self.kx_range.clone(),
            kz: self.kz_range.clone(),
            r: self.r_range.clone(),
            ell: self.ell.clone(),
            ell_max: self.ell_max.clone(),
            cesaro_n: self.cesaro_n.clone(),
            mu: self.mu.clone(),
            backreaction: self.backreaction.then_some(true),
            acknowledge_classical_cross_section: self.acknowledge_classical_cross_section.then_some(true),
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("SCATTER_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::invalid(format!("SCATTER_THREADS = '{v}' is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::invalid(format!("thread pool: {e}")))
}

fn run(args: Args) -> Result<(), CliError> {
    if args.quantity.as_deref() == Some("describe") {
        let name = args
            .name
            .as_deref()
            .ok_or_else(|| CliError::invalid("describe needs a quantity name"))?;
        println!("{}", describe(name)?);
        return Ok(());
    }
    if let Some(extra) = &args.name {
        return Err(CliError::invalid(format!("unexpected argument '{extra}'")));
    }
    configure_threads()?;

    let base = match &args.preset {
        Some(name) => presets::load(name)?,
        None => RawSpec::default(),
    };
    let spec = base.overlay(args.overrides()).resolve()?;
    let table = run_scan(&spec)?;

    match &args.out {
        Some(path) => {
            let shown = path.display().to_string();
            let f = File::create(path).map_err(|e| CliError::io(&shown, e))?;
            table.write_csv(BufWriter::new(f)).map_err(|e| CliError::io(&shown, e))
        }
        None => table
            .write_csv(BufWriter::new(io::stdout().lock()))
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("scatter: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
