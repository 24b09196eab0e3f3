//! Single-stage reports behind the `eigen`, `centers`, `mode` and `fit`
//! commands.

use jwkb_core::modefit::fit_residual;

use crate::config::{even_range, RunConfig};
use crate::output::{Cell, Table, OK};
use crate::pipeline::{run, Depth, RowError, Stage};
use crate::tables::HarnessError;

/// Indices used when the config leaves `m_range` empty.
pub fn default_indices() -> Vec<usize> {
    even_range(0, 20)
}

/// Eigenvalues, working eigenvalues, matching points and peaks.
pub fn eigen_report(config: &RunConfig) -> Result<Table, HarnessError> {
    let indices = config.indices_or(&default_indices());
    let (setup, rows) = run(config, &indices, Depth::Centers)?;
    let mut t = Table::new(
        format!("eigen_{}", config.operator.label()),
        &[
            "m",
            "lambda_re",
            "lambda_im",
            "z_re",
            "z_im",
            "radius",
            "x_match",
            "argmax",
            "status",
        ],
    );
    for row in rows {
        match row {
            Ok(r) => t.push(vec![
                Cell::index(r.m),
                Cell::Real(r.pair.lambda.re),
                Cell::Real(r.pair.lambda.im),
                Cell::Real(r.pair.z.re),
                Cell::Real(r.pair.z.im),
                Cell::Real(setup.radius()),
                Cell::Real(r.pair.x_match),
                Cell::Real(r.argmax),
                Cell::Text(OK.into()),
            ]),
            Err(e) => t.push_failure(e),
        }
    }
    Ok(t)
}

/// Roots of the center equation and their refinements.
pub fn centers_report(config: &RunConfig) -> Result<Table, HarnessError> {
    let indices = config.indices_or(&default_indices());
    let (_, rows) = run(config, &indices, Depth::Centers)?;
    let mut t = Table::new(
        format!("centers_{}", config.operator.label()),
        &[
            "m",
            "root",
            "a",
            "eta",
            "a_refined",
            "eta_refined",
            "refined_converged",
            "status",
        ],
    );
    for row in rows {
        let r = match row {
            Ok(r) => r,
            Err(e) => {
                t.push_failure(e);
                continue;
            }
        };
        if r.centers.is_empty() {
            t.push_failure(RowError {
                m: r.m,
                stage: Stage::Centers,
                message: "no admissible center".into(),
            });
            continue;
        }
        for (k, (c, rc)) in r.centers.iter().zip(&r.refined).enumerate() {
            t.push(vec![
                Cell::index(r.m),
                Cell::index(k + 1),
                Cell::Real(c.a),
                Cell::Real(c.eta),
                Cell::Real(rc.center.a),
                Cell::Real(rc.center.eta),
                Cell::Int(rc.converged as i64),
                Cell::Text(OK.into()),
            ]);
        }
    }
    Ok(t)
}

fn single(
    config: &RunConfig,
    m: usize,
    depth: Depth,
) -> Result<crate::pipeline::RowAnalysis, HarnessError> {
    let mut c = config.clone();
    if let Some(seeds) = &config.run.seeds {
        let k = config.run.m_range.iter().position(|&i| i == m);
        c.run.seeds = k.map(|k| vec![seeds[k]]);
    }
    c.run.m_range = vec![m];
    let (_, mut rows) = run(&c, &[m], depth)?;
    Ok(rows.remove(0)?)
}

/// Samples of mode `root` (1-based, ordered by center) at index `m`.
pub fn mode_report(config: &RunConfig, m: usize, root: usize) -> Result<Table, HarnessError> {
    let r = single(config, m, Depth::Modes)?;
    let mode = r.modes.get(root.wrapping_sub(1)).ok_or_else(|| RowError {
        m,
        stage: Stage::Modes,
        message: format!("no mode {root}; {} available", r.modes.len()),
    })?;
    let mut t = Table::new(
        format!("mode_{}_m{m}_root{root}", config.operator.label()),
        &[
            "x",
            "s",
            "y_re",
            "y_im",
            "abs",
            "log_derivative_re",
            "log_derivative_im",
        ],
    );
    for ((&s, y), l) in mode.grid.iter().zip(&mode.y).zip(&mode.log_derivative) {
        t.push(vec![
            Cell::Real(mode.center.a + s),
            Cell::Real(s),
            Cell::Real(y.re),
            Cell::Real(y.im),
            Cell::Real(y.norm()),
            Cell::Real(l.re),
            Cell::Real(l.im),
        ]);
    }
    Ok(t)
}

/// Fit summary (one row per mode) and residual samples at index `m`.
pub fn fit_report(config: &RunConfig, m: usize) -> Result<[Table; 2], HarnessError> {
    let r = single(config, m, Depth::Fit)?;
    let fit = r.fit.as_ref().expect("fit depth");
    let label = config.operator.label();
    let mut summary = Table::new(
        format!("fit_{label}_m{m}"),
        &[
            "m",
            "mode",
            "a",
            "eta",
            "s1",
            "s2",
            "c_re",
            "c_im",
            "ratio",
            "delta",
            "delta_direct",
            "delta_default",
        ],
    );
    for (k, ((c, cut), mode)) in fit
        .coefficients
        .iter()
        .zip(&fit.cutoffs)
        .zip(&r.modes)
        .enumerate()
    {
        summary.push(vec![
            Cell::index(m),
            Cell::index(k + 1),
            Cell::Real(mode.center.a),
            Cell::Real(mode.center.eta),
            Cell::Real(cut.0),
            Cell::Real(cut.1),
            Cell::Real(c.re),
            Cell::Real(c.im),
            Cell::opt(fit.coefficient_ratio),
            Cell::Real(fit.delta),
            Cell::Real(fit.delta_direct),
            Cell::Real(fit.delta_default),
        ]);
    }
    let (_, d) =
        fit_residual(&r.pair, &r.modes[..fit.cutoffs.len()], &fit.cutoffs).map_err(|e| {
            RowError {
                m,
                stage: Stage::Fit,
                message: e.to_string(),
            }
        })?;
    let mut samples = Table::new(
        format!("fit_{label}_m{m}_samples"),
        &["x", "f_re", "f_im", "d_re", "d_im"],
    );
    for ((&x, f), d) in r.pair.grid.iter().zip(&r.pair.f).zip(&d) {
        samples.push(vec![
            Cell::Real(x),
            Cell::Real(f.re),
            Cell::Real(f.im),
            Cell::Real(d.re),
            Cell::Real(d.im),
        ]);
    }
    Ok([summary, samples])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{FamilyName, OperatorConfig};

    fn harmonic() -> RunConfig {
        RunConfig {
            operator: OperatorConfig::of(FamilyName::Harmonic),
            ..RunConfig::default()
        }
    }

    #[test]
    fn eigen_report_rows() {
        let mut c = harmonic();
        c.run.m_range = vec![0, 1, 2];
        let t = eigen_report(&c).unwrap();
        assert_eq!(t.rows.len(), 3);
        let rot = c.operator.c();
        for (r, m) in [0usize, 1, 2].into_iter().enumerate() {
            let exact = rot * (2 * m + 1) as f64;
            assert!((t.value(r, "lambda_re").unwrap() - exact.re).abs() < 1e-8);
            assert!((t.value(r, "lambda_im").unwrap() - exact.im).abs() < 1e-8);
        }
    }

    #[test]
    fn mode_report_centers_on_a() {
        let mut c = harmonic();
        c.run.m_range = vec![10];
        let t = mode_report(&c, 10, 1).unwrap();
        let zero = (0..t.rows.len())
            .find(|&r| t.value(r, "s") == Some(0.0))
            .unwrap();
        assert!((t.value(zero, "abs").unwrap() - 1.0).abs() < 1e-12);
        assert!(mode_report(&c, 10, 2).is_err());
    }

    #[test]
    fn fit_report_residual_matches_delta() {
        let mut c = harmonic();
        c.run.m_range = vec![20];
        let [summary, samples] = fit_report(&c, 20).unwrap();
        let delta = summary.value(0, "delta_direct").unwrap();
        let h = samples.value(1, "x").unwrap();
        let n = samples.rows.len();
        let norm2: f64 = (0..n)
            .map(|r| {
                let w = if r == 0 || r == n - 1 { 0.5 } else { 1.0 };
                w * (samples.value(r, "d_re").unwrap().powi(2)
                    + samples.value(r, "d_im").unwrap().powi(2))
            })
            .sum::<f64>()
            * h;
        // Trapezoid against the Simpson weights used by the fit.
        assert!(
            (norm2.sqrt() - delta).abs() < 1e-3 * delta.max(1e-6),
            "{} vs {delta}",
            norm2.sqrt()
        );
    }
}
