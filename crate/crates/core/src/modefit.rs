//! Cut-off regularization of JWKB modes and least-squares fits of
//! eigenfunctions by combinations of modes.
//!
//! Beyond the cut-off points `s₂ < 0 < s₁` a mode is continued by the
//! exponential that keeps its log-derivative frozen, which makes it square
//! integrable. Coefficients minimizing `‖f - Σ c_k y_k‖` solve the Gram system
//! `A C = U`; the relative error `Δ` is then minimized over the cut-offs.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)] // float math for no_std builds
use num_traits::Float;

use crate::jwkb::JwkbMode;
use crate::linalg::{condition_number, Lu, Matrix};
use crate::minimize::{nelder_mead, NelderMeadOptions};
use crate::quad::{inner, norm_squared, uniform_weights};
use crate::shooting::EigenPair;
use crate::{Error, Result};

/// Largest accepted 1-norm condition number of the Gram matrix.
pub const MAX_CONDITION: f64 = 1e8;

/// Default cut-offs: the largest `|Re y'/y|` among points with `s > 0` and
/// `Re y'/y < 0` (right) and among points with `s < 0` and `Re y'/y > 0`
/// (left). A side without such points keeps its domain end.
pub fn default_cutoffs(mode: &JwkbMode) -> (f64, f64) {
    let mut s1 = *mode.grid.last().unwrap_or(&0.0);
    let mut s2 = *mode.grid.first().unwrap_or(&0.0);
    let (mut best1, mut best2) = (0.0, 0.0);
    for (&s, l) in mode.grid.iter().zip(&mode.log_derivative) {
        let re = l.re;
        if s > 0.0 && re < 0.0 && -re > best1 {
            best1 = -re;
            s1 = s;
        } else if s < 0.0 && re > 0.0 && re > best2 {
            best2 = re;
            s2 = s;
        }
    }
    (s1, s2)
}

/// Alternative cut-offs: the nearest local minimum of `|y|` on each side of
/// the center, or the domain end when `|y|` is monotone there.
pub fn local_minimum_cutoffs(mode: &JwkbMode) -> (f64, f64) {
    let zero = mode.zero_index();
    let n = mode.grid.len();
    let modulus = |i: usize| mode.y[i].norm();
    // Rounding noise on a flat modulus is not a minimum.
    let below = |i: usize, k: usize| modulus(i) < modulus(k) * (1.0 - 1e-12);
    let s1 = (zero + 1..n.saturating_sub(1))
        .find(|&i| modulus(i) <= modulus(i - 1) && below(i, i + 1))
        .map_or(mode.grid[n - 1], |i| mode.grid[i]);
    let s2 = (1..zero)
        .rev()
        .find(|&i| modulus(i) <= modulus(i + 1) && below(i, i - 1))
        .map_or(mode.grid[0], |i| mode.grid[i]);
    (s1, s2)
}

/// How [`optimize_fit`] seeds the cut-offs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutoffInit {
    /// [`default_cutoffs`].
    #[default]
    LogDerivativePeak,
    /// [`local_minimum_cutoffs`].
    LocalMinimum,
}

/// A mode with frozen log-derivatives beyond its cut-offs, unit-normalized
/// on `[0, X]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffMode<'a> {
    /// Uncut mode.
    pub base: &'a JwkbMode,
    /// Right cut-off.
    pub s1: f64,
    /// Left cut-off.
    pub s2: f64,
    /// Normalized samples on the base grid.
    pub y: Vec<Complex64>,
    /// L₂ norm on `[0, X]` before normalization.
    pub norm_factor: f64,
    right: Freeze,
    left: Freeze,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Freeze {
    s: f64,
    y: Complex64,
    log_derivative: Complex64,
    active: bool,
}

impl Freeze {
    fn value(&self, s: f64) -> Complex64 {
        self.y * (self.log_derivative * (s - self.s)).exp()
    }
}

fn domain(mode: &JwkbMode) -> (f64, f64) {
    (mode.grid[0], mode.grid[mode.grid.len() - 1])
}

/// Validates the cut-offs and computes the frozen data at each.
fn freezes(mode: &JwkbMode, s1: f64, s2: f64) -> Result<(Freeze, Freeze)> {
    let (lo, hi) = domain(mode);
    let tol = 1e-12 * (1.0 + hi - lo);
    if !(s2 < 0.0 && 0.0 < s1 && s1 <= hi + tol && s2 >= lo - tol) {
        return Err(Error::InvalidParameter(
            "cut-offs must satisfy -a <= s2 < 0 < s1 <= X - a",
        ));
    }
    let s1 = s1.min(hi);
    let s2 = s2.max(lo);
    let right_active = s1 < hi - tol;
    let left_active = s2 > lo + tol;
    let right = Freeze {
        s: s1,
        y: mode.eval(s1),
        log_derivative: mode.log_derivative_at(s1),
        active: right_active,
    };
    let left = Freeze {
        s: s2,
        y: mode.eval(s2),
        log_derivative: mode.log_derivative_at(s2),
        active: left_active,
    };
    if right.active && !(right.log_derivative.re < 0.0) {
        return Err(Error::NonDecayingCutoff {
            s: s1,
            real_part: right.log_derivative.re,
        });
    }
    if left.active && !(left.log_derivative.re > 0.0) {
        return Err(Error::NonDecayingCutoff {
            s: s2,
            real_part: left.log_derivative.re,
        });
    }
    Ok((right, left))
}

/// Samples of the cut mode (unnormalized) at given offsets, using
/// precomputed base values at those offsets.
fn cut_samples(
    offsets: &[f64],
    base_values: &[Complex64],
    right: &Freeze,
    left: &Freeze,
) -> Vec<Complex64> {
    offsets
        .iter()
        .zip(base_values)
        .map(|(&s, &v)| {
            if right.active && s > right.s {
                right.value(s)
            } else if left.active && s < left.s {
                left.value(s)
            } else {
                v
            }
        })
        .collect()
}

/// Uniform `x`-grid on `[0, X]` matching the mode grid's spacing.
fn x_grid_of(mode: &JwkbMode) -> Vec<f64> {
    let (lo, hi) = domain(mode);
    let radius = hi - lo;
    let zero = mode.zero_index();
    let h = if zero + 1 < mode.grid.len() {
        mode.grid[zero + 1]
    } else {
        -mode.grid[zero - 1]
    };
    let n = ((radius / h).round() as usize + 1).max(3);
    crate::shooting::uniform_grid(radius, n)
}

/// Applies cut-offs at `s1 > 0` and `s2 < 0` and normalizes on `[0, X]`.
///
/// A cut-off at a domain end leaves that side untouched. Interior cut-offs
/// whose frozen log-derivative does not decay away from the center are
/// rejected.
pub fn apply_cutoff(mode: &JwkbMode, s1: f64, s2: f64) -> Result<CutoffMode<'_>> {
    let (right, left) = freezes(mode, s1, s2)?;
    let xs = x_grid_of(mode);
    let a = mode.center.a;
    let offsets: Vec<f64> = xs.iter().map(|x| x - a).collect();
    let base: Vec<Complex64> = offsets.iter().map(|&s| mode.eval(s)).collect();
    let samples = cut_samples(&offsets, &base, &right, &left);
    let w = uniform_weights(xs.len(), xs[1] - xs[0]);
    let norm_factor = norm_squared(&w, &samples).sqrt();
    if !(norm_factor > 0.0 && norm_factor.is_finite()) {
        return Err(Error::NonFinite("cut-off mode norm"));
    }
    let y = cut_samples(&mode.grid, &mode.y, &right, &left)
        .into_iter()
        .map(|v| v / norm_factor)
        .collect();
    Ok(CutoffMode {
        base: mode,
        s1: right.s,
        s2: left.s,
        y,
        norm_factor,
        right,
        left,
    })
}

impl CutoffMode<'_> {
    /// Normalized cut mode at offset `s`.
    pub fn eval(&self, s: f64) -> Complex64 {
        let v = if self.right.active && s > self.right.s {
            self.right.value(s)
        } else if self.left.active && s < self.left.s {
            self.left.value(s)
        } else {
            self.base.eval(s)
        };
        v / self.norm_factor
    }

    /// `y'/y` at offset `s`.
    pub fn log_derivative_at(&self, s: f64) -> Complex64 {
        if self.right.active && s >= self.right.s {
            self.right.log_derivative
        } else if self.left.active && s <= self.left.s {
            self.left.log_derivative
        } else {
            self.base.log_derivative_at(s)
        }
    }

    /// Normalized samples at the points `xs` of the `x`-axis.
    pub fn sample(&self, xs: &[f64]) -> Vec<Complex64> {
        xs.iter()
            .map(|&x| self.eval(x - self.base.center.a))
            .collect()
    }
}

/// Gram matrix `a_jk = ∫ y_k ȳ_j` and data `u_k = ∫ f ȳ_k` on `[0, X]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramSystem {
    /// Gram matrix.
    pub a: Matrix,
    /// Projections of the eigenfunction.
    pub u: Vec<Complex64>,
    /// `‖f‖²`.
    pub f_norm_squared: f64,
}

fn check_grid(f: &EigenPair, mode: &JwkbMode) -> Result<()> {
    let (lo, hi) = domain(mode);
    let radius = f.grid[f.grid.len() - 1];
    if (mode.center.a + lo).abs() > 1e-9 * (1.0 + radius)
        || (mode.center.a + hi - radius).abs() > 1e-9 * (1.0 + radius)
    {
        return Err(Error::GridMismatch(
            "mode and eigenfunction cover different intervals",
        ));
    }
    Ok(())
}

fn weights_of(f: &EigenPair) -> Vec<f64> {
    uniform_weights(f.grid.len(), f.grid[1] - f.grid[0])
}

fn assemble(f: &EigenPair, weights: &[f64], samples: &[Vec<Complex64>]) -> GramSystem {
    let n = samples.len();
    let mut a = Matrix::zeros(n);
    for j in 0..n {
        for k in 0..n {
            a[(j, k)] = if k < j {
                a[(k, j)].conj()
            } else {
                inner(weights, &samples[k], &samples[j])
            };
        }
    }
    let u = samples.iter().map(|y| inner(weights, &f.f, y)).collect();
    GramSystem {
        a,
        u,
        f_norm_squared: norm_squared(weights, &f.f),
    }
}

/// Assembles the Gram system, resampling the modes onto the eigenfunction's
/// grid.
pub fn inner_products(f: &EigenPair, modes: &[CutoffMode<'_>]) -> Result<GramSystem> {
    let samples = modes
        .iter()
        .map(|m| {
            check_grid(f, m.base)?;
            Ok(m.sample(&f.grid))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(f, &weights_of(f), &samples))
}

/// `C = A⁻¹ U`, refusing matrices with condition number above 1e8.
pub fn gram_solve(system: &GramSystem) -> Result<Vec<Complex64>> {
    let condition = condition_number(&system.a)?;
    if !(condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned { condition });
    }
    Ok(Lu::new(&system.a)?.solve(&system.u))
}

/// `Δ² ‖f‖² = ‖f‖² - 2 Re Σ c_k ū_k + Σ a_jk c_k c̄_j`.
fn quadratic_delta(system: &GramSystem, c: &[Complex64]) -> f64 {
    let n = c.len();
    let mut d2 = system.f_norm_squared;
    for k in 0..n {
        d2 -= 2.0 * (c[k] * system.u[k].conj()).re;
        for j in 0..n {
            d2 += (system.a[(j, k)] * c[k] * c[j].conj()).re;
        }
    }
    (d2.max(0.0) / system.f_norm_squared).sqrt()
}

fn direct_delta(
    f: &EigenPair,
    weights: &[f64],
    samples: &[Vec<Complex64>],
    c: &[Complex64],
) -> f64 {
    let d: Vec<Complex64> = (0..f.f.len())
        .map(|i| {
            f.f[i]
                - samples
                    .iter()
                    .zip(c)
                    .map(|(y, ck)| ck * y[i])
                    .sum::<Complex64>()
        })
        .collect();
    (norm_squared(weights, &d) / norm_squared(weights, &f.f)).sqrt()
}

/// `Δ = ‖f - Σ c_k y_k‖ / ‖f‖` from the Gram quadratic form.
pub fn compute_delta(f: &EigenPair, modes: &[CutoffMode<'_>], c: &[Complex64]) -> Result<f64> {
    if c.len() != modes.len() {
        return Err(Error::InvalidParameter(
            "one coefficient per mode is required",
        ));
    }
    Ok(quadratic_delta(&inner_products(f, modes)?, c))
}

/// `Δ` by direct quadrature of `|f - Σ c_k y_k|²`.
pub fn compute_delta_direct(
    f: &EigenPair,
    modes: &[CutoffMode<'_>],
    c: &[Complex64],
) -> Result<f64> {
    if c.len() != modes.len() {
        return Err(Error::InvalidParameter(
            "one coefficient per mode is required",
        ));
    }
    let samples = modes.iter().map(|m| m.sample(&f.grid)).collect::<Vec<_>>();
    Ok(direct_delta(f, &weights_of(f), &samples, c))
}

/// Outcome of [`optimize_fit`].
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    /// Coefficients of the unit-normalized cut modes.
    pub coefficients: Vec<Complex64>,
    /// `|c₂/c₁|` when there are at least two modes.
    pub coefficient_ratio: Option<f64>,
    /// `Δ` from the Gram quadratic form.
    pub delta: f64,
    /// `Δ` by direct quadrature, as a cross-check.
    pub delta_direct: f64,
    /// `Δ` at the default cut-offs.
    pub delta_default: f64,
    /// `(s1, s2)` per mode at the optimum.
    pub cutoffs: Vec<(f64, f64)>,
}

/// Settings for [`optimize_fit`].
#[derive(Debug, Clone, Copy)]
pub struct FitOptions {
    /// Simplex scales applied in turn from each start.
    pub simplex_scales: [f64; 3],
    /// Per-run evaluation budget.
    pub max_evals: usize,
    /// Stop a run when the simplex values differ by less than this.
    pub f_tol: f64,
    /// Stop a run when the simplex is smaller than this.
    pub x_tol: f64,
    /// Starting cut-offs.
    pub init: CutoffInit,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            simplex_scales: [1.0, 0.3, 0.1],
            max_evals: 2000,
            f_tol: 1e-10,
            x_tol: 1e-4,
            init: CutoffInit::LogDerivativePeak,
        }
    }
}

/// Mode data resampled once onto the eigenfunction grid.
struct Prepared<'a> {
    mode: &'a JwkbMode,
    offsets: Vec<f64>,
    base: Vec<Complex64>,
}

struct Objective<'a> {
    f: &'a EigenPair,
    weights: Vec<f64>,
    modes: Vec<Prepared<'a>>,
}

struct Evaluation {
    c: Vec<Complex64>,
    delta: f64,
    samples: Vec<Vec<Complex64>>,
}

impl<'a> Objective<'a> {
    fn new(f: &'a EigenPair, modes: &'a [JwkbMode]) -> Self {
        let prepared = modes
            .iter()
            .map(|m| {
                let offsets: Vec<f64> = f.grid.iter().map(|x| x - m.center.a).collect();
                let base = offsets.iter().map(|&s| m.eval(s)).collect();
                Prepared {
                    mode: m,
                    offsets,
                    base,
                }
            })
            .collect();
        Objective {
            f,
            weights: weights_of(f),
            modes: prepared,
        }
    }

    fn evaluate(&self, p: &[f64]) -> Result<Evaluation> {
        let mut samples = Vec::with_capacity(self.modes.len());
        for (k, m) in self.modes.iter().enumerate() {
            let (right, left) = freezes(m.mode, p[2 * k], p[2 * k + 1])?;
            let mut y = cut_samples(&m.offsets, &m.base, &right, &left);
            let norm = norm_squared(&self.weights, &y).sqrt();
            if !(norm > 0.0 && norm.is_finite()) {
                return Err(Error::NonFinite("cut-off mode norm"));
            }
            y.iter_mut().for_each(|v| *v /= norm);
            samples.push(y);
        }
        let system = assemble(self.f, &self.weights, &samples);
        let c = gram_solve(&system)?;
        let delta = quadratic_delta(&system, &c);
        Ok(Evaluation { c, delta, samples })
    }
}

/// Minimizes `Δ` over the cut-offs of the given modes.
///
/// For fixed cut-offs the coefficients come from the Gram system (the exact
/// minimizer). The cut-offs are optimized by bounded Nelder–Mead runs from
/// several starts: the default cut-offs, all modes uncut, and the defaults
/// with each single mode uncut. Each start is refined with shrinking initial
/// simplices and the best result is kept. When no start yields a usable Gram
/// matrix the defaults are perturbed and retried up to three times.
pub fn optimize_fit(f: &EigenPair, modes: &[JwkbMode], opts: &FitOptions) -> Result<FitResult> {
    if modes.is_empty() {
        return Err(Error::InvalidParameter("at least one mode is required"));
    }
    if f.grid.len() < 3 {
        return Err(Error::InvalidParameter("eigenfunction grid is too small"));
    }
    for m in modes {
        check_grid(f, m)?;
    }
    let objective = Objective::new(f, modes);

    let n = modes.len();
    let step = f.grid[1] - f.grid[0];
    let mut lower = vec![0.0; 2 * n];
    let mut upper = vec![0.0; 2 * n];
    let mut ends = vec![0.0; 2 * n];
    let mut defaults = vec![0.0; 2 * n];
    for (k, m) in modes.iter().enumerate() {
        let (lo, hi) = domain(m);
        lower[2 * k] = step.min(hi);
        upper[2 * k] = hi;
        lower[2 * k + 1] = lo;
        upper[2 * k + 1] = (-step).max(lo);
        ends[2 * k] = hi;
        ends[2 * k + 1] = lo;
        let (s1, s2) = match opts.init {
            CutoffInit::LogDerivativePeak => default_cutoffs(m),
            CutoffInit::LocalMinimum => local_minimum_cutoffs(m),
        };
        defaults[2 * k] = s1;
        defaults[2 * k + 1] = s2;
    }
    let value = |p: &[f64]| {
        objective
            .evaluate(p)
            .map(|e| e.delta)
            .unwrap_or(f64::INFINITY)
    };
    let delta_default = value(&defaults);

    let mut starts = vec![defaults.clone(), ends.clone()];
    if n > 1 {
        for k in 0..n {
            let mut p = defaults.clone();
            p[2 * k] = ends[2 * k];
            p[2 * k + 1] = ends[2 * k + 1];
            starts.push(p);
        }
    }
    starts.dedup();

    let mut best: Option<(Vec<f64>, f64)> = None;
    for attempt in 0..=3 {
        if attempt > 0 {
            let shrink = 0.9f64.powi(attempt);
            starts = vec![defaults.iter().map(|s| s * shrink).collect()];
        }
        for start in &starts {
            let mut p = start.clone();
            let mut v = value(&p);
            for &scale in &opts.simplex_scales {
                let nm = NelderMeadOptions {
                    initial_step: scale,
                    f_tol: opts.f_tol,
                    x_tol: opts.x_tol,
                    max_evals: opts.max_evals,
                };
                let m = nelder_mead(value, &p, &lower, &upper, &nm);
                if m.value <= v {
                    p = m.x;
                    v = m.value;
                }
            }
            if v.is_finite() && best.as_ref().is_none_or(|(_, b)| v < *b) {
                best = Some((p, v));
            }
        }
        if best.is_some() {
            break;
        }
    }
    let Some((p, _)) = best else {
        // Surface the underlying failure at the default cut-offs.
        return Err(objective
            .evaluate(&defaults)
            .err()
            .unwrap_or(Error::IllConditioned {
                condition: f64::INFINITY,
            }));
    };
    let e = objective.evaluate(&p)?;
    let delta_direct = direct_delta(f, &objective.weights, &e.samples, &e.c);
    let coefficient_ratio = (n >= 2).then(|| e.c[1].norm() / e.c[0].norm());
    Ok(FitResult {
        coefficients: e.c,
        coefficient_ratio,
        delta: e.delta,
        delta_direct,
        delta_default,
        cutoffs: (0..n)
            .map(|k| {
                (
                    p[2 * k].min(upper[2 * k]),
                    p[2 * k + 1].max(lower[2 * k + 1]),
                )
            })
            .collect(),
    })
}

/// Residual `d = f - Σ c_k y_k` on the eigenfunction grid for the given
/// cut-offs, with the Gram-optimal coefficients (returned alongside).
pub fn fit_residual(
    f: &EigenPair,
    modes: &[JwkbMode],
    cutoffs: &[(f64, f64)],
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if modes.is_empty() || cutoffs.len() != modes.len() {
        return Err(Error::InvalidParameter(
            "one cut-off pair per mode is required",
        ));
    }
    for m in modes {
        check_grid(f, m)?;
    }
    let p: Vec<f64> = cutoffs.iter().flat_map(|&(s1, s2)| [s1, s2]).collect();
    let e = Objective::new(f, modes).evaluate(&p)?;
    let d = (0..f.f.len())
        .map(|i| {
            f.f[i]
                - e.samples
                    .iter()
                    .zip(&e.c)
                    .map(|(y, c)| c * y[i])
                    .sum::<Complex64>()
        })
        .collect();
    Ok((e.c, d))
}

/// An eigenpair whose eigenfunction is replaced by a cut mode sampled on the
/// template's grid and normalized there. Fitting it with the same mode must
/// give `Δ = 0` and `C = (1)`.
pub fn mode_as_eigenpair(mode: &CutoffMode<'_>, template: &EigenPair) -> EigenPair {
    let mut f = mode.sample(&template.grid);
    let norm = norm_squared(&weights_of(template), &f).sqrt();
    f.iter_mut().for_each(|v| *v /= norm);
    let a = mode.base.center.a;
    let log_derivative: Vec<Complex64> = template
        .grid
        .iter()
        .map(|&x| mode.log_derivative_at(x - a))
        .collect();
    let df = f.iter().zip(&log_derivative).map(|(v, l)| v * l).collect();
    EigenPair {
        f,
        df,
        log_derivative,
        ..template.clone()
    }
}
