//! Eigenvalues → centers → modes → fits, one row per index.
//!
//! Eigenvalues of one parity are found by a sequential march (each seeds the
//! next); everything after that is independent per index and runs on the
//! rayon pool. A failure is confined to its own row.

use std::fmt;

use jwkb_core::jwkb::{
    build_mode, mode_grid, solve_center_equation, solve_refined_center, CenterPair, JwkbMode,
    RefinedCenter,
};
use jwkb_core::modefit::{
    apply_cutoff, default_cutoffs, local_minimum_cutoffs, mode_as_eigenpair, optimize_fit,
    CutoffInit, FitOptions, FitResult,
};
use jwkb_core::potentials::{to_working_problem, PotentialSpec, WorkingProblem};
use jwkb_core::shooting::{
    argmax_abs, continuation_radius, march_eigenvalues, solve_from_seed, EigenPair, MarchOptions,
    Parity,
};
use jwkb_core::Complex64;
use rayon::prelude::*;

use crate::config::RunConfig;

/// Pipeline stage at which a row failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Problem construction.
    Setup,
    /// Shooting.
    Eigenvalue,
    /// Center equation.
    Centers,
    /// Mode construction.
    Modes,
    /// Cut-off optimization.
    Fit,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Setup => "setup",
            Stage::Eigenvalue => "eigenvalue",
            Stage::Centers => "centers",
            Stage::Modes => "modes",
            Stage::Fit => "fit",
        })
    }
}

/// Failure of one row.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("m = {m}: {stage} failed: {message}")]
pub struct RowError {
    /// Index.
    pub m: usize,
    /// Failing stage.
    pub stage: Stage,
    /// Diagnostic.
    pub message: String,
}

impl RowError {
    fn new(m: usize, stage: Stage, err: impl fmt::Display) -> Self {
        Self {
            m,
            stage,
            message: err.to_string(),
        }
    }
}

/// The working problem shared by all rows of a run.
#[derive(Debug, Clone)]
pub struct Setup {
    /// Potential.
    pub spec: PotentialSpec,
    /// Operator on `[0, X]`.
    pub problem: WorkingProblem,
}

impl Setup {
    /// Builds the problem for `indices`, taking `X` from the config or from
    /// the potential and the largest index.
    pub fn new(config: &RunConfig, indices: &[usize]) -> Result<Self, RowError> {
        let m_max = indices.iter().copied().max().unwrap_or(0);
        let fail = |e: jwkb_core::Error| RowError::new(m_max, Stage::Setup, e);
        let spec = config.operator.spec().map_err(fail)?;
        let radius = match config.run.truncation_radius {
            Some(x) => x,
            None => continuation_radius(&spec, m_max).map_err(fail)?,
        };
        let problem = to_working_problem(&spec, radius).map_err(fail)?;
        Ok(Self { spec, problem })
    }

    /// Truncation radius `X`.
    pub fn radius(&self) -> f64 {
        self.problem.radius()
    }
}

/// Eigenpairs for `indices` in order.
///
/// With seeds in the config each index is solved independently from its
/// seed; otherwise each parity is marched from its lowest index.
pub fn eigenpairs(
    config: &RunConfig,
    setup: &Setup,
    indices: &[usize],
) -> Vec<Result<EigenPair, RowError>> {
    let grid_points = config.run.grid_points;
    if let Some(seeds) = &config.run.seeds {
        let by_index: Vec<(usize, Complex64)> = config
            .run
            .m_range
            .iter()
            .zip(seeds)
            .map(|(&m, s)| (m, Complex64::new(s[0], s[1])))
            .collect();
        return indices
            .par_iter()
            .map(|&m| {
                let &(_, lambda) = by_index
                    .iter()
                    .find(|(k, _)| *k == m)
                    .ok_or_else(|| RowError::new(m, Stage::Eigenvalue, "no seed for this index"))?;
                let seed = setup.problem.working_eigenvalue(lambda);
                solve_from_seed(
                    &setup.problem,
                    seed,
                    Parity::of_index(m),
                    m,
                    None,
                    grid_points,
                )
                .map_err(|e| RowError::new(m, Stage::Eigenvalue, e))
            })
            .collect();
    }
    let opts = MarchOptions {
        grid_points,
        ..MarchOptions::default()
    };
    let top = |parity: Parity| {
        indices
            .iter()
            .copied()
            .filter(|&m| Parity::of_index(m) == parity)
            .max()
    };
    let march = |parity: Parity| match top(parity) {
        Some(m_max) => march_eigenvalues(&setup.problem, parity, m_max, &opts),
        None => Vec::new(),
    };
    let (mut even, mut odd) = rayon::join(|| march(Parity::Even), || march(Parity::Odd));
    indices
        .iter()
        .map(|&m| {
            let list = if m % 2 == 0 { &mut even } else { &mut odd };
            let slot = list
                .get_mut(m / 2)
                .map(|r| std::mem::replace(r, Err(jwkb_core::Error::NonFinite("taken"))));
            match slot {
                Some(r) => r.map_err(|e| RowError::new(m, Stage::Eigenvalue, e)),
                None => Err(RowError::new(m, Stage::Eigenvalue, "index was not reached")),
            }
        })
        .collect()
}

/// How far to carry each row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    /// Eigenpair and centers.
    Centers,
    /// Also build the modes.
    Modes,
    /// Also optimize the fit.
    Fit,
}

/// Everything computed for one index.
#[derive(Debug, Clone)]
pub struct RowAnalysis {
    /// Index.
    pub m: usize,
    /// Eigenvalue and eigenfunction (replaced by a mode for self-fits).
    pub pair: EigenPair,
    /// `argmax |f|`.
    pub argmax: f64,
    /// Roots of the center equation, ordered by `a`.
    pub centers: Vec<CenterPair>,
    /// Refined roots, one per center.
    pub refined: Vec<RefinedCenter>,
    /// Modes for the first `max_modes` centers.
    pub modes: Vec<JwkbMode>,
    /// Optimized fit.
    pub fit: Option<FitResult>,
}

/// Modes for the first `max_modes` centers.
pub fn build_modes(
    config: &RunConfig,
    setup: &Setup,
    centers: &[CenterPair],
) -> jwkb_core::Result<Vec<JwkbMode>> {
    centers
        .iter()
        .take(config.fit.max_modes)
        .map(|&c| {
            let grid = mode_grid(setup.radius(), c.a, config.run.grid_points);
            build_mode(&setup.problem, c, config.run.jwkb_h, &grid)
        })
        .collect()
}

fn fit_options(config: &RunConfig) -> FitOptions {
    FitOptions {
        max_evals: config.fit.max_evals,
        init: config.fit.cutoff_init.into(),
        ..FitOptions::default()
    }
}

/// Carries one eigenpair through the later stages.
pub fn analyse(
    config: &RunConfig,
    setup: &Setup,
    pair: EigenPair,
    depth: Depth,
) -> Result<RowAnalysis, RowError> {
    let m = pair.index;
    let argmax = argmax_abs(&pair);
    let centers = solve_center_equation(&setup.problem, pair.lambda);
    let refined = solve_refined_center(&setup.problem, pair.lambda);
    let mut row = RowAnalysis {
        m,
        pair,
        argmax,
        centers,
        refined,
        modes: Vec::new(),
        fit: None,
    };
    if depth == Depth::Centers {
        return Ok(row);
    }
    if row.centers.is_empty() {
        return Err(RowError::new(m, Stage::Centers, "no admissible center"));
    }
    row.modes =
        build_modes(config, setup, &row.centers).map_err(|e| RowError::new(m, Stage::Modes, e))?;
    if depth == Depth::Modes {
        return Ok(row);
    }
    let opts = fit_options(config);
    let fit = if config.fit.self_fit {
        let mode = &row.modes[0];
        let (s1, s2) = match opts.init {
            CutoffInit::LogDerivativePeak => default_cutoffs(mode),
            CutoffInit::LocalMinimum => local_minimum_cutoffs(mode),
        };
        let cut = apply_cutoff(mode, s1, s2).map_err(|e| RowError::new(m, Stage::Fit, e))?;
        let substitute = mode_as_eigenpair(&cut, &row.pair);
        let fit = optimize_fit(&substitute, &row.modes[..1], &opts);
        row.pair = substitute;
        fit
    } else {
        optimize_fit(&row.pair, &row.modes, &opts)
    };
    row.fit = Some(fit.map_err(|e| RowError::new(m, Stage::Fit, e))?);
    Ok(row)
}

/// Runs the pipeline for `indices`, returning rows in index order.
pub fn run(
    config: &RunConfig,
    indices: &[usize],
    depth: Depth,
) -> Result<(Setup, Vec<Result<RowAnalysis, RowError>>), RowError> {
    let setup = Setup::new(config, indices)?;
    let pairs = eigenpairs(config, &setup, indices);
    let rows = pairs
        .into_par_iter()
        .map(|p| p.and_then(|pair| analyse(config, &setup, pair, depth)))
        .collect();
    Ok((setup, rows))
}
