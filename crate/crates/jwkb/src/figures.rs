//! Data behind the four published figures, as plain tables.

use jwkb_core::modefit::fit_residual;
use jwkb_core::potentials::PotentialSpec;
use jwkb_core::Complex64;

use crate::config::{even_range, FamilyName, OperatorConfig, RunConfig};
use crate::output::{Cell, Table, OK};
use crate::pipeline::{run, Depth, RowError, Stage};
use crate::tables::{check_family, top_index, HarnessError};

/// Families a figure can be computed for.
pub fn figure_families(id: u8) -> Result<&'static [FamilyName], HarnessError> {
    match id {
        1..=4 => Ok(&[FamilyName::GaussianBump, FamilyName::DoubleGaussian]),
        _ => Err(HarnessError::UnknownId { kind: "figure", id }),
    }
}

/// The published runs behind a figure.
pub fn default_figure_configs(id: u8) -> Result<Vec<RunConfig>, HarnessError> {
    let with = |family| RunConfig {
        operator: OperatorConfig::of(family),
        ..RunConfig::default()
    };
    Ok(match id {
        1 | 3 | 4 => vec![with(FamilyName::GaussianBump)],
        2 => vec![
            with(FamilyName::GaussianBump),
            with(FamilyName::DoubleGaussian),
        ],
        _ => return Err(HarnessError::UnknownId { kind: "figure", id }),
    })
}

/// Computes the tables of figure `id`. Row failures are recorded in them.
pub fn emit_figure_data(id: u8, config: &RunConfig) -> Result<Vec<Table>, HarnessError> {
    check_family("figure", id, figure_families(id)?, config)?;
    match id {
        1 => potentials(config).map(|t| vec![t]),
        2 => eigenvalue_cloud(config),
        3 => eigenfunctions(config).map(|t| vec![t]),
        _ => corrections(config).map(|t| vec![t]),
    }
}

/// Half-width of the potential plot.
pub const POTENTIAL_HALF_WIDTH: f64 = 30.0;
/// Sample spacing of the potential plot.
pub const POTENTIAL_STEP: f64 = 0.05;

/// Both undilated potentials with the config's bump width and double-well
/// parameters.
fn potentials(config: &RunConfig) -> Result<Table, HarnessError> {
    let op = &config.operator;
    let one = Complex64::new(1.0, 0.0);
    let bump = PotentialSpec::gaussian_bump(op.b, one).map_err(setup_error)?;
    let wells =
        PotentialSpec::double_gaussian(op.alpha, op.beta, op.gamma, one).map_err(setup_error)?;
    let mut t = Table::new("figure1", &["x", "v", "v_tilde", "difference"]);
    let n = (POTENTIAL_HALF_WIDTH / POTENTIAL_STEP).round() as i64;
    for k in -n..=n {
        let x = POTENTIAL_STEP * k as f64;
        let (v, w) = (bump.eval(x).re, wells.eval(x).re);
        t.push(vec![
            Cell::Real(x),
            Cell::Real(v),
            Cell::Real(w),
            Cell::Real(v - w),
        ]);
    }
    Ok(t)
}

fn setup_error(e: jwkb_core::Error) -> HarnessError {
    HarnessError::Setup(RowError {
        m: 0,
        stage: Stage::Setup,
        message: e.to_string(),
    })
}

/// Number of samples on the potential curve of figure 2.
pub const CURVE_POINTS: usize = 2001;

/// The curve `x ↦ c V(√c x)` on `[0, X]` and the points `λ_m c` with their
/// number of admissible centers.
fn eigenvalue_cloud(config: &RunConfig) -> Result<Vec<Table>, HarnessError> {
    let label = config.operator.label();
    let indices = config.indices_or(&even_range(0, top_index(config)));
    let (setup, rows) = run(config, &indices, Depth::Centers)?;
    let mut curve = Table::new(format!("figure2_{label}_curve"), &["x", "re", "im"]);
    let radius = setup.radius();
    for k in 0..CURVE_POINTS {
        let x = radius * k as f64 / (CURVE_POINTS - 1) as f64;
        let w = setup.problem.potential(x);
        curve.push(vec![Cell::Real(x), Cell::Real(w.re), Cell::Real(w.im)]);
    }
    let mut points = Table::new(
        format!("figure2_{label}_points"),
        &["m", "re", "im", "centers", "status"],
    );
    for row in rows {
        match row {
            Ok(r) => points.push(vec![
                Cell::index(r.m),
                Cell::Real(r.pair.z.re),
                Cell::Real(r.pair.z.im),
                Cell::index(r.centers.len()),
                Cell::Text(OK.into()),
            ]),
            Err(e) => points.push_failure(e),
        }
    }
    Ok(vec![curve, points])
}

fn eigenfunctions(config: &RunConfig) -> Result<Table, HarnessError> {
    let indices = config.indices_or(&even_range(28, 38));
    let (_, rows) = run(config, &indices, Depth::Centers)?;
    let mut t = Table::new(
        format!("figure3_{}", config.operator.label()),
        &["m", "x", "re", "im", "abs", "status"],
    );
    for row in rows {
        match row {
            Ok(r) => {
                for (&x, f) in r.pair.grid.iter().zip(&r.pair.f) {
                    t.push(vec![
                        Cell::index(r.m),
                        Cell::Real(x),
                        Cell::Real(f.re),
                        Cell::Real(f.im),
                        Cell::Real(f.norm()),
                        Cell::Text(OK.into()),
                    ]);
                }
            }
            Err(e) => t.push_failure(e),
        }
    }
    Ok(t)
}

fn corrections(config: &RunConfig) -> Result<Table, HarnessError> {
    let indices = config.indices_or(&[28, 32]);
    let (_, rows) = run(config, &indices, Depth::Fit)?;
    let mut t = Table::new(
        format!("figure4_{}", config.operator.label()),
        &["m", "x", "abs_f", "abs_d", "status"],
    );
    for row in rows {
        let r = match row {
            Ok(r) => r,
            Err(e) => {
                t.push_failure(e);
                continue;
            }
        };
        let fit = r.fit.as_ref().expect("fit depth");
        let used = &r.modes[..fit.cutoffs.len()];
        let d = match fit_residual(&r.pair, used, &fit.cutoffs) {
            Ok((_, d)) => d,
            Err(e) => {
                t.push_failure(RowError {
                    m: r.m,
                    stage: Stage::Fit,
                    message: e.to_string(),
                });
                continue;
            }
        };
        for ((&x, f), d) in r.pair.grid.iter().zip(&r.pair.f).zip(&d) {
            t.push(vec![
                Cell::index(r.m),
                Cell::Real(x),
                Cell::Real(f.norm()),
                Cell::Real(d.norm()),
                Cell::Text(OK.into()),
            ]);
        }
    }
    Ok(t)
}
