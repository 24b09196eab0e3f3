//! Derivative-free local minimization (Nelder–Mead on a box).

use alloc::vec::Vec;

/// Settings for [`nelder_mead`].
#[derive(Debug, Clone, Copy)]
pub struct NelderMeadOptions {
    /// Edge length of the initial simplex along each coordinate.
    pub initial_step: f64,
    /// Stop when the simplex function values span less than this.
    pub f_tol: f64,
    /// Stop when every vertex lies within this distance of the best one.
    pub x_tol: f64,
    /// Objective evaluation budget.
    pub max_evals: usize,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.5,
            f_tol: 1e-10,
            x_tol: 1e-4,
            max_evals: 2000,
        }
    }
}

/// Outcome of a minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    /// Best point found.
    pub x: Vec<f64>,
    /// Objective at `x`.
    pub value: f64,
    /// Number of objective evaluations.
    pub evals: usize,
}

/// Minimizes `f` over the box `[lower, upper]` starting from `x0`.
///
/// Trial points are clamped into the box. The objective may return
/// `f64::INFINITY` (or NaN) to mark infeasible points. Initial simplex edges
/// point into the box when `x0` sits on an upper bound. The best value seen
/// never increases from one iteration to the next.
pub fn nelder_mead<F>(
    mut f: F,
    x0: &[f64],
    lower: &[f64],
    upper: &[f64],
    opts: &NelderMeadOptions,
) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    let clamp = |x: &mut [f64]| {
        for i in 0..n {
            x[i] = x[i].clamp(lower[i], upper[i]);
        }
    };
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut start = x0.to_vec();
    clamp(&mut start);
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    let v0 = eval(&start, &mut evals);
    simplex.push((start.clone(), v0));
    for i in 0..n {
        let mut p = start.clone();
        let up = upper[i] - start[i];
        let down = start[i] - lower[i];
        p[i] += if up >= opts.initial_step {
            opts.initial_step
        } else if down >= opts.initial_step {
            -opts.initial_step
        } else if up >= down {
            up
        } else {
            -down
        };
        clamp(&mut p);
        let v = eval(&p, &mut evals);
        simplex.push((p, v));
    }

    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    while evals < opts.max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0].1;
        let worst = simplex[n].1;
        let spread = simplex
            .iter()
            .skip(1)
            .map(|(p, _)| {
                p.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if best.is_finite() && (worst - best).abs() <= opts.f_tol && spread <= opts.x_tol {
            break;
        }
        if spread <= 1e-3 * opts.x_tol {
            break;
        }

        let mut centroid = alloc::vec![0.0; n];
        for (p, _) in simplex.iter().take(n) {
            for i in 0..n {
                centroid[i] += p[i] / n as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> {
            let mut p: Vec<f64> = (0..n)
                .map(|i| centroid[i] + t * (simplex[n].0[i] - centroid[i]))
                .collect();
            clamp(&mut p);
            p
        };

        let xr = along(-alpha);
        let fr = eval(&xr, &mut evals);
        if fr < simplex[0].1 {
            let xe = along(-alpha * gamma);
            let fe = eval(&xe, &mut evals);
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < simplex[n].1 {
            let x = along(-alpha * rho);
            let v = eval(&x, &mut evals);
            (x, v)
        } else {
            let x = along(rho);
            let v = eval(&x, &mut evals);
            (x, v)
        };
        if fc < simplex[n].1.min(fr) {
            simplex[n] = (xc, fc);
            continue;
        }
        let best_point = simplex[0].0.clone();
        for (p, v) in simplex.iter_mut().skip(1) {
            for i in 0..n {
                p[i] = best_point[i] + sigma * (p[i] - best_point[i]);
            }
            clamp(p);
            *v = eval(p, &mut evals);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, value) = simplex.swap_remove(0);
    Minimum { x, value, evals }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_rosenbrock_minimum() {
        let rosen = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let opts = NelderMeadOptions {
            initial_step: 0.5,
            f_tol: 1e-14,
            x_tol: 1e-8,
            max_evals: 5000,
        };
        let m = nelder_mead(rosen, &[-1.2, 1.0], &[-5.0, -5.0], &[5.0, 5.0], &opts);
        assert!(
            (m.x[0] - 1.0).abs() < 1e-4 && (m.x[1] - 1.0).abs() < 1e-4,
            "{:?}",
            m
        );
    }

    #[test]
    fn respects_bounds() {
        let f = |x: &[f64]| (x[0] - 3.0).powi(2);
        let m = nelder_mead(f, &[0.0], &[-1.0], &[1.0], &NelderMeadOptions::default());
        assert!((m.x[0] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn infeasible_region_is_avoided() {
        let f = |x: &[f64]| {
            if x[0] < 0.5 {
                f64::INFINITY
            } else {
                (x[0] - 0.7).powi(2)
            }
        };
        let m = nelder_mead(f, &[2.0], &[0.0], &[3.0], &NelderMeadOptions::default());
        assert!((m.x[0] - 0.7).abs() < 1e-3);
    }
}
