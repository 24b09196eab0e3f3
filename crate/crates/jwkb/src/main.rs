use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use jwkb::config::{CutoffInitName, FamilyName, RunConfig};
use jwkb::figures::{default_figure_configs, emit_figure_data};
use jwkb::output::Table;
use jwkb::reports::{centers_report, eigen_report, fit_report, mode_report};
use jwkb::tables::{default_table_configs, run_table};

/// Eigenvalues, JWKB modes and mode fits for dilated Schrödinger operators.
#[derive(Parser)]
#[command(version)]
struct Cli {
    /// TOML run configuration; tables and figures default to the published
    /// runs without one.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(flatten)]
    overrides: Overrides,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues only.
    Eigen,
    /// Roots of the center equations.
    Centers,
    /// Samples of one JWKB mode.
    Mode {
        /// Eigenvalue index.
        #[arg(long)]
        m: usize,
        /// Center number, ordered by position.
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Optimized fit of one eigenfunction.
    Fit {
        /// Eigenvalue index.
        #[arg(long)]
        m: usize,
    },
    /// One of the published tables.
    Table {
        /// Table number.
        #[arg(value_parser = clap::value_parser!(u8).range(1..=6))]
        id: u8,
    },
    /// Data behind one of the published figures.
    Figure {
        /// Figure number.
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
    },
}

/// Flags overriding config keys.
#[derive(Args, Default)]
struct Overrides {
    /// [operator] family
    #[arg(long, global = true)]
    family: Option<FamilyName>,
    /// [operator] b
    #[arg(long, global = true)]
    b: Option<f64>,
    /// [operator] alpha
    #[arg(long, global = true)]
    alpha: Option<f64>,
    /// [operator] beta
    #[arg(long, global = true)]
    beta: Option<f64>,
    /// [operator] gamma
    #[arg(long, global = true)]
    gamma: Option<f64>,
    /// [operator] c_angle
    #[arg(long, global = true)]
    c_angle: Option<f64>,
    /// [run] m_range, comma separated
    #[arg(long = "m-range", global = true, value_delimiter = ',')]
    m_range: Option<Vec<usize>>,
    /// [run] grid_points
    #[arg(long, global = true)]
    grid_points: Option<usize>,
    /// [run] truncation_radius
    #[arg(long, global = true)]
    truncation_radius: Option<f64>,
    /// [run] jwkb_h
    #[arg(long, global = true)]
    jwkb_h: Option<f64>,
    /// [run] output_dir
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,
    /// [fit] max_modes
    #[arg(long, global = true)]
    max_modes: Option<usize>,
    /// [fit] cutoff_init
    #[arg(long, global = true)]
    cutoff_init: Option<CutoffInitName>,
    /// [fit] self_fit
    #[arg(long, global = true)]
    self_fit: bool,
}

impl Overrides {
    fn apply(&self, mut c: RunConfig) -> Result<RunConfig> {
        macro_rules! set {
            ($field:ident => $($path:tt)+) => {
                if let Some(v) = self.$field.clone() {
                    c.$($path)+ = v;
                }
            };
        }
        set!(family => operator.family);
        set!(b => operator.b);
        set!(alpha => operator.alpha);
        set!(beta => operator.beta);
        set!(gamma => operator.gamma);
        set!(c_angle => operator.c_angle);
        set!(m_range => run.m_range);
        set!(grid_points => run.grid_points);
        set!(jwkb_h => run.jwkb_h);
        set!(output_dir => run.output_dir);
        set!(max_modes => fit.max_modes);
        set!(cutoff_init => fit.cutoff_init);
        if let Some(x) = self.truncation_radius {
            c.run.truncation_radius = Some(x);
        }
        if self.self_fit {
            c.fit.self_fit = true;
        }
        if self.m_range.is_some() && c.run.seeds.is_some() {
            anyhow::bail!("--m-range cannot be combined with configured seeds");
        }
        c.validate()?;
        Ok(c)
    }
}

fn configs(cli: &Cli, defaults: impl FnOnce() -> Result<Vec<RunConfig>>) -> Result<Vec<RunConfig>> {
    let base = match &cli.config {
        Some(path) => {
            vec![RunConfig::load(path).with_context(|| format!("loading {}", path.display()))?]
        }
        None if cli.overrides.family.is_some() => vec![RunConfig::default()],
        None => defaults()?,
    };
    base.into_iter().map(|c| cli.overrides.apply(c)).collect()
}

/// Writes the tables and reports their failures; true when all rows worked.
fn emit(tables: &[Table], config: &RunConfig) -> Result<bool> {
    let mut clean = true;
    for t in tables {
        let path = t
            .write(&config.run.output_dir)
            .with_context(|| format!("writing {}", t.name))?;
        println!("{}", path.display());
        for f in &t.failures {
            eprintln!("{}: {f}", t.name);
            clean = false;
        }
    }
    Ok(clean)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn execute(cli: &Cli) -> Result<bool> {
    let single = || Ok(vec![RunConfig::default()]);
    let mut clean = true;
    match &cli.command {
        Command::Table { id } => {
            for c in configs(cli, || Ok(default_table_configs(*id)?))? {
                clean &= emit(&[run_table(*id, &c)?], &c)?;
            }
        }
        Command::Figure { id } => {
            for c in configs(cli, || Ok(default_figure_configs(*id)?))? {
                clean &= emit(&emit_figure_data(*id, &c)?, &c)?;
            }
        }
        Command::Eigen => {
            for c in configs(cli, single)? {
                clean &= emit(&[eigen_report(&c)?], &c)?;
            }
        }
        Command::Centers => {
            for c in configs(cli, single)? {
                clean &= emit(&[centers_report(&c)?], &c)?;
            }
        }
        Command::Mode { m, root } => {
            for c in configs(cli, single)? {
                clean &= emit(&[mode_report(&c, *m, *root)?], &c)?;
            }
        }
        Command::Fit { m } => {
            for c in configs(cli, single)? {
                clean &= emit(&fit_report(&c, *m)?, &c)?;
            }
        }
    }
    Ok(clean)
}
