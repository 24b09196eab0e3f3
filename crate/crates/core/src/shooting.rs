//! Complex eigenvalues and eigenfunctions of `-f'' + W f = z f` on `[0, X]`
//! by bidirectional shooting.
//!
//! The outward solution starts at the origin with the parity condition, the
//! inward one at `X` on the decaying exponential branch. Their
//! log-derivatives are compared at a matching point and the mismatch is
//! driven to zero by a complex secant iteration.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)] // float math for no_std builds
use num_traits::Float;

use crate::ode::{integrate, OdeOptions, State};
use crate::potentials::{to_working_problem, Family, PotentialSpec, WorkingProblem};
use crate::quad::{norm_squared, uniform_weights};
use crate::{Error, Result};

/// Grid size used when none is requested.
pub const DEFAULT_GRID_POINTS: usize = 4001;

/// Symmetry class of an eigenfunction of an even potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `f'(0) = 0`.
    Even,
    /// `f(0) = 0`.
    Odd,
}

impl Parity {
    /// Parity of the `m`-th eigenfunction.
    pub fn of_index(m: usize) -> Self {
        if m.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn initial_state(self) -> State {
        match self {
            Parity::Even => [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            Parity::Odd => [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }
}

/// Integration direction for [`integrate_schrodinger`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// From `x = 0` with the parity condition.
    Outward,
    /// From `x = X` on the decaying branch.
    Inward,
}

/// Sampled solution of the working equation.
///
/// The true solution at sample `i` is `f[i] · exp(log_scale[i])`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    /// Abscissae, ascending.
    pub grid: Vec<f64>,
    /// Scaled `f`.
    pub f: Vec<Complex64>,
    /// Scaled `f'`.
    pub df: Vec<Complex64>,
    /// Log of the removed scale factor.
    pub log_scale: Vec<f64>,
}

impl Trajectory {
    /// `f'/f` at sample `i`.
    pub fn log_derivative(&self, i: usize) -> Complex64 {
        self.df[i] / self.f[i]
    }
}

/// Decay rate `k = √(W(X) - z)` of the inward boundary condition `f' = -k f`.
pub fn inward_decay(problem: &WorkingProblem, z: Complex64) -> Result<Complex64> {
    let x = problem.radius();
    let k = (problem.potential(x) - z).sqrt();
    let k = if k.re < 0.0 { -k } else { k };
    if k.re > 0.0 {
        Ok(k)
    } else {
        Err(Error::NonDecayingBranch { x, decay: k.re })
    }
}

/// Integrates `-f'' + W f = z f` onto an ascending grid inside `[0, X]`.
///
/// Outward starts at 0 with `(f, f') = (1, 0)` (even) or `(0, 1)` (odd).
/// Inward starts at `X` with `f = 1`, `f' = -√(W(X) - z)`; the parity is
/// ignored. Relative tolerance 1e-10, renormalization above 1e100.
pub fn integrate_schrodinger(
    problem: &WorkingProblem,
    z: Complex64,
    parity: Parity,
    direction: Direction,
    grid: &[f64],
) -> Result<Trajectory> {
    let radius = problem.radius();
    if grid.iter().any(|&x| !(0.0..=radius).contains(&x)) {
        return Err(Error::InvalidParameter("grid must lie within [0, X]"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter("grid must be strictly increasing"));
    }
    let rhs = |x: f64, y: &State| [y[1], (problem.potential(x) - z) * y[0]];
    let opts = OdeOptions::default();
    let samples = match direction {
        Direction::Outward => integrate(rhs, 0.0, parity.initial_state(), grid, &opts)?,
        Direction::Inward => {
            let k = inward_decay(problem, z)?;
            let targets: Vec<f64> = grid.iter().rev().copied().collect();
            let mut s = integrate(rhs, radius, [Complex64::new(1.0, 0.0), -k], &targets, &opts)?;
            s.reverse();
            s
        }
    };
    Ok(Trajectory {
        grid: grid.to_vec(),
        f: samples.iter().map(|s| s.y[0]).collect(),
        df: samples.iter().map(|s| s.y[1]).collect(),
        log_scale: samples.iter().map(|s| s.log_scale).collect(),
    })
}

/// `(miss, |outward f'/f|)` at `x_match`.
fn miss_parts(
    problem: &WorkingProblem,
    z: Complex64,
    parity: Parity,
    x_match: f64,
) -> Result<(Complex64, f64)> {
    if !(x_match > 0.0 && x_match < problem.radius()) {
        return Err(Error::InvalidParameter(
            "matching point must lie inside (0, X)",
        ));
    }
    let out = integrate_schrodinger(problem, z, parity, Direction::Outward, &[x_match])?;
    let inn = integrate_schrodinger(problem, z, parity, Direction::Inward, &[x_match])?;
    if out.f[0] == Complex64::new(0.0, 0.0) || inn.f[0] == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroAtMatch { x: x_match });
    }
    let lo = out.log_derivative(0);
    let li = inn.log_derivative(0);
    if !(lo.is_finite() && li.is_finite()) {
        return Err(Error::ZeroAtMatch { x: x_match });
    }
    Ok((lo - li, lo.norm()))
}

/// Outward minus inward log-derivative at `x_match`; zero at eigenvalues.
pub fn miss_distance(
    problem: &WorkingProblem,
    z: Complex64,
    parity: Parity,
    x_match: f64,
) -> Result<Complex64> {
    Ok(miss_parts(problem, z, parity, x_match)?.0)
}

/// Settings for [`find_eigenvalue`].
#[derive(Debug, Clone, Copy)]
pub struct SecantOptions {
    /// Matching point; `X/2` when absent.
    pub x_match: Option<f64>,
    /// Fail when an iterate strays further than this from the seed.
    pub trust_radius: Option<f64>,
    /// Iteration budget.
    pub max_iterations: usize,
}

impl Default for SecantOptions {
    fn default() -> Self {
        Self {
            x_match: None,
            trust_radius: None,
            max_iterations: 60,
        }
    }
}

/// Mismatch below which further secant steps only chase rounding noise.
fn at_rounding_floor(miss: Complex64, scale: f64) -> bool {
    miss.norm() <= 1e-13 * scale.max(1.0)
}

/// Secant iteration on [`miss_distance`] started at `seed`.
///
/// Converges when `|Δz| < 1e-10 (1 + |z|)` and `|miss| < 1e-8`, or when the
/// mismatch is already at rounding level (badly conditioned eigenvalues make
/// the miss function flat there).
pub fn find_eigenvalue(
    problem: &WorkingProblem,
    seed: Complex64,
    parity: Parity,
    opts: &SecantOptions,
) -> Result<Complex64> {
    let x_match = opts.x_match.unwrap_or(0.5 * problem.radius());
    let eval = |z: Complex64| miss_parts(problem, z, parity, x_match);
    let check_trust = |z: Complex64| -> Result<()> {
        if let Some(radius) = opts.trust_radius {
            let distance = (z - seed).norm();
            if distance > radius || !distance.is_finite() {
                return Err(Error::RootCollapse { distance, radius });
            }
        }
        Ok(())
    };

    let mut z0 = seed;
    let (mut f0, s0) = eval(z0)?;
    if at_rounding_floor(f0, s0) {
        return Ok(z0);
    }
    let mut z1 = seed + 1e-3 * (1.0 + seed.norm());
    let (mut f1, _) = eval(z1)?;
    for _ in 0..opts.max_iterations {
        let denom = f1 - f0;
        if denom.norm() == 0.0 {
            break;
        }
        let z2 = z1 - f1 * (z1 - z0) / denom;
        if !z2.is_finite() {
            return Err(Error::NonFinite("secant iterate"));
        }
        check_trust(z2)?;
        let (f2, s2) = eval(z2)?;
        let small_step = (z2 - z1).norm() < 1e-10 * (1.0 + z2.norm());
        if (small_step && f2.norm() < 1e-8) || at_rounding_floor(f2, s2) {
            return Ok(z2);
        }
        z0 = z1;
        f0 = f1;
        z1 = z2;
        f1 = f2;
    }
    Err(Error::NotConverged {
        iterations: opts.max_iterations,
        miss: f1.norm(),
    })
}

/// A converged eigenvalue with its normalized eigenfunction.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    /// Eigenvalue index `m`.
    pub index: usize,
    /// Symmetry class.
    pub parity: Parity,
    /// Working eigenvalue `z = σ λ`.
    pub z: Complex64,
    /// Physical eigenvalue `λ`.
    pub lambda: Complex64,
    /// Matching point used for the eigenvalue and the splice.
    pub x_match: f64,
    /// Uniform grid on `[0, X]`.
    pub grid: Vec<f64>,
    /// Eigenfunction samples, `‖f‖ = 1`, real positive at its largest modulus.
    pub f: Vec<Complex64>,
    /// Derivative samples.
    pub df: Vec<Complex64>,
    /// `f'/f`; NaN where `f` vanishes exactly.
    pub log_derivative: Vec<Complex64>,
}

/// `n` equally spaced points on `[0, radius]`.
pub fn uniform_grid(radius: f64, n: usize) -> Vec<f64> {
    let h = radius / (n - 1) as f64;
    (0..n)
        .map(|i| if i + 1 == n { radius } else { h * i as f64 })
        .collect()
}

/// Builds the normalized eigenfunction for a converged `z` by splicing the
/// outward and inward solutions at the grid point nearest `x_match`.
pub fn extract_eigenpair(
    problem: &WorkingProblem,
    z: Complex64,
    parity: Parity,
    index: usize,
    grid_points: usize,
    x_match: f64,
) -> Result<EigenPair> {
    if grid_points < 3 {
        return Err(Error::InvalidParameter(
            "eigenfunction grid needs at least 3 points",
        ));
    }
    let grid = uniform_grid(problem.radius(), grid_points);
    let h = grid[1];
    let j = ((x_match / h).round() as usize).clamp(1, grid_points - 2);
    let out = integrate_schrodinger(problem, z, parity, Direction::Outward, &grid[..=j])?;
    let inn = integrate_schrodinger(problem, z, parity, Direction::Inward, &grid[j..])?;
    if inn.f[0] == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroAtMatch { x: grid[j] });
    }
    let join = out.f[j] / inn.f[0];
    let mut f = Vec::with_capacity(grid_points);
    let mut df = Vec::with_capacity(grid_points);
    for i in 0..=j {
        let s = (out.log_scale[i] - out.log_scale[j]).exp();
        f.push(out.f[i] * s);
        df.push(out.df[i] * s);
    }
    for i in 1..inn.f.len() {
        let s = join * (inn.log_scale[i] - inn.log_scale[0]).exp();
        f.push(inn.f[i] * s);
        df.push(inn.df[i] * s);
    }
    let weights = uniform_weights(grid_points, h);
    let norm = norm_squared(&weights, &f).sqrt();
    let peak = f
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let phase = f[peak] / f[peak].norm();
    let factor = phase * norm;
    if !(factor.is_finite() && norm > 0.0) {
        return Err(Error::NonFinite("eigenfunction normalization"));
    }
    for v in f.iter_mut().chain(df.iter_mut()) {
        *v /= factor;
    }
    let log_derivative = f
        .iter()
        .zip(&df)
        .map(|(a, b)| {
            if a.norm() == 0.0 {
                Complex64::new(f64::NAN, f64::NAN)
            } else {
                b / a
            }
        })
        .collect();
    Ok(EigenPair {
        index,
        parity,
        z,
        lambda: problem.physical_eigenvalue(z),
        x_match: grid[j],
        grid,
        f,
        df,
        log_derivative,
    })
}

/// Abscissa of the largest `|f|`, refined by a parabola through the three
/// neighbouring samples (mirrored at the origin for even functions).
pub fn argmax_abs(pair: &EigenPair) -> f64 {
    let n = pair.f.len();
    let i = pair
        .f
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let y = |k: usize| pair.f[k].norm();
    let (left, right) = if i == 0 {
        match pair.parity {
            Parity::Even => (y(1), y(1)),
            Parity::Odd => return pair.grid[0],
        }
    } else if i + 1 == n {
        return pair.grid[i];
    } else {
        (y(i - 1), y(i + 1))
    };
    let h = pair.grid[1] - pair.grid[0];
    let curvature = left - 2.0 * y(i) + right;
    if curvature >= 0.0 {
        return pair.grid[i];
    }
    pair.grid[i] + 0.5 * h * (left - right) / curvature
}

/// First `x` where `Re(W(x) - z) > 0`, the classical turning point for
/// nearly real problems.
fn turning_point(problem: &WorkingProblem, z: Complex64) -> Option<f64> {
    let steps = 4000;
    let h = problem.radius() / steps as f64;
    (1..steps)
        .map(|i| h * i as f64)
        .find(|&x| (problem.potential(x) - z).re > 0.0)
}

/// Position of the largest `Re W` on the turning-point scan grid.
fn barrier_top(problem: &WorkingProblem) -> f64 {
    let steps = 4000;
    let h = problem.radius() / steps as f64;
    (1..steps)
        .map(|i| h * i as f64)
        .fold((0.5 * problem.radius(), f64::NEG_INFINITY), |best, x| {
            let w = problem.potential(x).re;
            if w > best.1 {
                (x, w)
            } else {
                best
            }
        })
        .0
}

/// Settings for [`march_eigenvalues`] and [`continue_in_angle`].
#[derive(Debug, Clone, Copy)]
pub struct MarchOptions {
    /// Eigenfunction grid size.
    pub grid_points: usize,
    /// Trust radius as a fraction of the local eigenvalue spacing.
    pub trust_fraction: f64,
}

impl Default for MarchOptions {
    fn default() -> Self {
        Self {
            grid_points: DEFAULT_GRID_POINTS,
            trust_fraction: 0.5,
        }
    }
}

/// Frequency `√(W''(0)/2)` of the harmonic approximation of the well at the
/// origin; eigenvalues of one parity are spaced by about four times this.
fn well_frequency(problem: &WorkingProblem) -> Complex64 {
    (problem.second_derivative(0.0) * 0.5).sqrt()
}

/// Marches through the indices `m ≤ m_max` of one parity in increasing order.
///
/// Each eigenvalue is seeded by polynomial extrapolation from the previous
/// ones (the harmonic well estimate for the first), matched at the peak of the
/// previous eigenfunction and guarded by a trust radius of a fraction of the
/// local spacing. A failed index is reported without stopping the march.
pub fn march_eigenvalues(
    problem: &WorkingProblem,
    parity: Parity,
    m_max: usize,
    opts: &MarchOptions,
) -> Vec<Result<EigenPair>> {
    let first = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let mut found: Vec<Complex64> = Vec::new();
    let mut x_match: Option<f64> = None;
    let mut out = Vec::new();
    for m in (first..=m_max).step_by(2) {
        let omega = well_frequency(problem);
        let (seed, spacing) = match *found.as_slice() {
            [] => (
                problem.potential(0.0) + omega * (2 * m + 1) as f64,
                4.0 * omega.norm(),
            ),
            [a] => (a + omega * 4.0, 4.0 * omega.norm()),
            [a, b] => (b * 2.0 - a, (b - a).norm()),
            [.., a, b, c] => (c * 3.0 - b * 3.0 + a, (c - b).norm()),
        };
        let xm = x_match
            .unwrap_or_else(|| turning_point(problem, seed).unwrap_or(0.5 * problem.radius()));
        let result = solve_at(
            problem,
            seed,
            parity,
            m,
            xm,
            Some(opts.trust_fraction * spacing),
            opts.grid_points,
        );
        if let Ok(pair) = &result {
            found.push(pair.z);
            let peak = argmax_abs(pair);
            let tp = turning_point(problem, pair.z).unwrap_or(0.5 * problem.radius());
            x_match = Some(peak.max(0.5 * tp));
        }
        out.push(result);
    }
    out
}

/// Finds one eigenvalue near `seed`, matched at the first classical turning
/// point of the seed (or `X/2` when there is none), and extracts its
/// eigenfunction. Above the barrier, where there is no turning point, the
/// top of `Re W` is used instead. When the secant stalls, half that point and
/// then `X/2` are tried.
pub fn solve_from_seed(
    problem: &WorkingProblem,
    seed: Complex64,
    parity: Parity,
    index: usize,
    trust_radius: Option<f64>,
    grid_points: usize,
) -> Result<EigenPair> {
    let first = turning_point(problem, seed).unwrap_or_else(|| barrier_top(problem));
    let candidates = [first, 0.5 * first, 0.5 * problem.radius()];
    let mut last = None;
    for (k, &xm) in candidates.iter().enumerate() {
        if candidates[..k].contains(&xm) {
            continue;
        }
        match solve_at(problem, seed, parity, index, xm, trust_radius, grid_points) {
            Err(e @ Error::NotConverged { .. }) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one matching point"))
}

/// Finds one eigenvalue and extracts its eigenfunction, nudging the matching
/// point once if a solution vanishes there.
fn solve_at(
    problem: &WorkingProblem,
    seed: Complex64,
    parity: Parity,
    index: usize,
    x_match: f64,
    trust_radius: Option<f64>,
    grid_points: usize,
) -> Result<EigenPair> {
    let radius = problem.radius();
    let clamp = |x: f64| x.clamp(0.02 * radius, 0.98 * radius);
    let mut last = Error::ZeroAtMatch { x: x_match };
    for xm in [clamp(x_match), clamp(0.93 * x_match)] {
        let opts = SecantOptions {
            x_match: Some(xm),
            trust_radius,
            ..SecantOptions::default()
        };
        match find_eigenvalue(problem, seed, parity, &opts) {
            Ok(z) => return extract_eigenpair(problem, z, parity, index, grid_points, xm),
            Err(e @ Error::ZeroAtMatch { .. }) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// Angle step used by [`continue_in_angle`].
pub const ANGLE_STEP: f64 = 0.02;

/// Truncation radius for tracking indices up to `m_max`.
pub fn continuation_radius(spec: &PotentialSpec, m_max: usize) -> Result<f64> {
    let lambda = match spec.family {
        Family::HarmonicComplex => spec.c * (2 * m_max + 1) as f64,
        _ => Complex64::new((2 * m_max + 1) as f64, 0.0),
    };
    crate::potentials::suggested_radius(spec, lambda)
}

/// Eigenpairs `m = 0..=m_max` at `arg c` reached by continuation in the angle.
///
/// Eigenvalues are first found at `θ = 0` (self-adjoint case) when the inward
/// decaying branch exists there, and otherwise at the first angle step. Each
/// root is then tracked through `ceil(θ/0.02)` equal increments of `arg c`,
/// reseeding with `z e^{iΔθ}`.
pub fn continue_in_angle(
    spec: &PotentialSpec,
    m_max: usize,
    opts: &MarchOptions,
) -> Result<Vec<EigenPair>> {
    let theta = spec.angle();
    if !(0.0..=core::f64::consts::FRAC_PI_4 + 1e-12).contains(&theta) {
        return Err(Error::InvalidParameter(
            "continuation needs arg c in [0, π/4]",
        ));
    }
    let radius = continuation_radius(spec, m_max)?;
    let n_steps = (theta / ANGLE_STEP).ceil() as usize;
    let d_theta = if n_steps == 0 {
        0.0
    } else {
        theta / n_steps as f64
    };

    let start = |k: usize| -> Result<Vec<EigenPair>> {
        let problem = to_working_problem(&spec.with_angle(k as f64 * d_theta), radius)?;
        let mut pairs = Vec::new();
        for parity in [Parity::Even, Parity::Odd] {
            for r in march_eigenvalues(&problem, parity, m_max, opts) {
                pairs.push(r?);
            }
        }
        pairs.sort_by_key(|p| p.index);
        Ok(pairs)
    };
    let (mut pairs, first_step) = match start(0) {
        Ok(p) => (p, 0),
        Err(Error::NonDecayingBranch { .. }) if n_steps > 0 => {
            let p = start(1).map_err(|e| Error::Continuation {
                step: 1,
                index: 0,
                message: e.to_string(),
            })?;
            (p, 1)
        }
        Err(e) => {
            return Err(Error::Continuation {
                step: 0,
                index: 0,
                message: e.to_string(),
            })
        }
    };

    let rotation = Complex64::from_polar(1.0, d_theta);
    let mut zs: Vec<Complex64> = pairs.iter().map(|p| p.z).collect();
    for step in first_step + 1..=n_steps {
        let problem = to_working_problem(&spec.with_angle(step as f64 * d_theta), radius)?;
        let previous = zs.clone();
        for (i, pair) in pairs.iter().enumerate() {
            let seed = previous[i] * rotation;
            let gap = previous
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, z)| (z - previous[i]).norm())
                .fold(f64::INFINITY, f64::min);
            let trust = if gap.is_finite() {
                opts.trust_fraction * gap
            } else {
                1.0 + seed.norm()
            };
            let secant = SecantOptions {
                x_match: Some(pair.x_match),
                trust_radius: Some(trust),
                ..SecantOptions::default()
            };
            zs[i] = find_eigenvalue(&problem, seed, pair.parity, &secant).map_err(|e| {
                Error::Continuation {
                    step,
                    index: pair.index,
                    message: e.to_string(),
                }
            })?;
        }
        for i in 0..zs.len() {
            for k in i + 1..zs.len() {
                if (zs[i] - zs[k]).norm() < 1e-6 {
                    return Err(Error::Collision {
                        first: pairs[i].index,
                        second: pairs[k].index,
                        step,
                    });
                }
            }
        }
    }

    if n_steps > first_step {
        let problem = to_working_problem(spec, radius)?;
        let mut finals = vec![];
        for (pair, z) in pairs.iter().zip(&zs) {
            let p = extract_eigenpair(
                &problem,
                *z,
                pair.parity,
                pair.index,
                opts.grid_points,
                pair.x_match,
            )
            .map_err(|e| Error::Continuation {
                step: n_steps,
                index: pair.index,
                message: e.to_string(),
            })?;
            finals.push(p);
        }
        pairs = finals;
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use core::f64::consts::PI;

    fn harmonic(theta: f64, radius: f64) -> WorkingProblem {
        let spec = PotentialSpec::harmonic(Complex64::from_polar(1.0, theta)).unwrap();
        to_working_problem(&spec, radius).unwrap()
    }

    /// Fixed-step classical RK4 for `f'' = (W - z) f`, used as an independent
    /// reference.
    fn rk4(problem: &WorkingProblem, z: Complex64, x_end: f64, steps: usize) -> Vec<Complex64> {
        let h = x_end / steps as f64;
        let rhs = |x: f64, y: [Complex64; 2]| [y[1], (problem.potential(x) - z) * y[0]];
        let mut y = [c64(1.0, 0.0), c64(0.0, 0.0)];
        let mut out = vec![y[0]];
        for i in 0..steps {
            let x = h * i as f64;
            let k1 = rhs(x, y);
            let k2 = rhs(
                x + 0.5 * h,
                [y[0] + k1[0] * (0.5 * h), y[1] + k1[1] * (0.5 * h)],
            );
            let k3 = rhs(
                x + 0.5 * h,
                [y[0] + k2[0] * (0.5 * h), y[1] + k2[1] * (0.5 * h)],
            );
            let k4 = rhs(x + h, [y[0] + k3[0] * h, y[1] + k3[1] * h]);
            for j in 0..2 {
                y[j] += (k1[j] + k2[j] * 2.0 + k3[j] * 2.0 + k4[j]) * (h / 6.0);
            }
            out.push(y[0]);
        }
        out
    }

    /// Richardson-combined second differences at spacings `h` and `2h`
    /// (fourth-order accurate).
    fn second_difference(f: impl Fn(i64) -> Complex64, k: i64, h: f64) -> Complex64 {
        let d1 = (f(k + 1) - f(k) * 2.0 + f(k - 1)) / (h * h);
        let d2 = (f(k + 2) - f(k) * 2.0 + f(k - 2)) / (4.0 * h * h);
        (d1 * 4.0 - d2) / 3.0
    }

    #[test]
    fn constant_potential_inward_log_derivative() {
        let problem = WorkingProblem::constant(c64(0.0, 0.0), 10.0).unwrap();
        let grid = uniform_grid(10.0, 101);
        let t = integrate_schrodinger(
            &problem,
            c64(-1.0, 0.0),
            Parity::Even,
            Direction::Inward,
            &grid,
        )
        .unwrap();
        for i in 0..grid.len() {
            assert!((t.log_derivative(i) - c64(-1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn gaussian_ground_state_outward() {
        let problem = harmonic(0.0, 10.0);
        let grid = uniform_grid(5.0, 51);
        let t = integrate_schrodinger(
            &problem,
            c64(1.0, 0.0),
            Parity::Even,
            Direction::Outward,
            &grid,
        )
        .unwrap();
        for (i, &x) in grid.iter().enumerate() {
            let f = t.f[i] * t.log_scale[i].exp();
            assert!(
                (f - c64((-x * x / 2.0).exp(), 0.0)).norm() < 1e-8,
                "x = {x}"
            );
        }
    }

    #[test]
    fn rotated_ground_state_matches_richardson_reference() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 10.0);
        let n = 600;
        let coarse = rk4(&problem, c, 6.0, n);
        let fine = rk4(&problem, c, 6.0, 2 * n);
        let grid = uniform_grid(6.0, n + 1);
        let t =
            integrate_schrodinger(&problem, c, Parity::Even, Direction::Outward, &grid).unwrap();
        for i in 0..=n {
            let reference = (fine[2 * i] * 16.0 - coarse[i]) / 15.0;
            let ours = t.f[i] * t.log_scale[i].exp();
            assert!(
                (ours.norm() - reference.norm()).abs() < 1e-8,
                "x = {}",
                grid[i]
            );
        }
    }

    #[test]
    fn miss_distance_examples() {
        let problem = harmonic(0.0, 10.0);
        assert!(
            miss_distance(&problem, c64(1.0, 0.0), Parity::Even, 1.0)
                .unwrap()
                .norm()
                < 1e-9
        );
        assert!(
            miss_distance(&problem, c64(1.1, 0.0), Parity::Even, 1.0)
                .unwrap()
                .norm()
                > 1e-3
        );
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let rotated = harmonic(PI / 8.0, 12.0);
        let miss = miss_distance(&rotated, c * 41.0, Parity::Even, 4.8).unwrap();
        assert!(miss.norm() < 1e-7, "{miss}");
        assert!(miss_distance(&rotated, c * 41.0, Parity::Even, 12.0).is_err());
    }

    #[test]
    fn inward_branch_must_decay() {
        let problem = WorkingProblem::constant(c64(0.0, 0.0), 5.0).unwrap();
        assert!(matches!(
            inward_decay(&problem, c64(2.0, 0.0)),
            Err(Error::NonDecayingBranch { .. })
        ));
    }

    #[test]
    fn secant_recovers_harmonic_eigenvalue() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 12.0);
        let opts = SecantOptions {
            x_match: Some(4.8),
            ..SecantOptions::default()
        };
        let z = find_eigenvalue(&problem, c * 41.2, Parity::Even, &opts).unwrap();
        assert!((z - c * 41.0).norm() / 41.0 < 1e-8, "{z}");
    }

    #[test]
    fn trust_radius_detects_collapse() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 12.0);
        let opts = SecantOptions {
            x_match: Some(4.8),
            trust_radius: Some(0.05),
            ..SecantOptions::default()
        };
        let r = find_eigenvalue(&problem, c * 42.0, Parity::Even, &opts);
        assert!(matches!(r, Err(Error::RootCollapse { .. })), "{r:?}");
    }

    #[test]
    fn eigenpair_invariants() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 12.0);
        let pair = extract_eigenpair(
            &problem,
            c * 21.0,
            Parity::Even,
            10,
            DEFAULT_GRID_POINTS,
            3.5,
        )
        .unwrap();
        let h = pair.grid[1];
        let w = uniform_weights(pair.grid.len(), h);
        assert!((norm_squared(&w, &pair.f) - 1.0).abs() < 1e-8);
        let peak = pair.f.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let at_peak = pair.f.iter().find(|v| v.norm() == peak).unwrap();
        assert!(at_peak.im.abs() < 1e-14 && at_peak.re > 0.0);
        // Second-difference residual of the ODE on interior points.
        for i in 2..pair.f.len() - 2 {
            let d2 = second_difference(|k| pair.f[k as usize], i as i64, h);
            let r = -d2 + (problem.potential(pair.grid[i]) - pair.z) * pair.f[i];
            assert!(r.norm() < 1e-5 * peak, "x = {}: {}", pair.grid[i], r.norm());
        }
    }

    #[test]
    fn reflected_odd_eigenfunction_solves_the_equation() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 10.0);
        let pair = extract_eigenpair(&problem, c * 7.0, Parity::Odd, 3, 2001, 2.0).unwrap();
        let h = pair.grid[1];
        // Odd reflection across the origin: f(-x) = -f(x).
        let at = |k: i64| -> Complex64 {
            if k >= 0 {
                pair.f[k as usize]
            } else {
                -pair.f[(-k) as usize]
            }
        };
        let peak = pair.f.iter().map(|v| v.norm()).fold(0.0, f64::max);
        for k in -100i64..100 {
            let x = h * k as f64;
            let d2 = second_difference(at, k, h);
            let r = -d2 + (problem.potential(x.abs()) - pair.z) * at(k);
            assert!(r.norm() < 1e-5 * peak, "x = {x}");
        }
    }

    #[test]
    fn seeded_solve_matches_at_turning_point() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 12.0);
        let pair = solve_from_seed(&problem, c * 21.3, Parity::Even, 10, None, 2001).unwrap();
        assert!((pair.z - c * 21.0).norm() < 1e-8);
        let tp = turning_point(&problem, c * 21.3).unwrap();
        // The splice snaps to the nearest grid node.
        assert!((pair.x_match - tp).abs() <= 0.5 * pair.grid[1] + 1e-12);
    }

    #[test]
    fn harmonic_eigenvalues_are_exact() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 14.0);
        let opts = MarchOptions {
            grid_points: 1001,
            ..MarchOptions::default()
        };
        for r in march_eigenvalues(&problem, Parity::Even, 30, &opts) {
            let pair = r.unwrap();
            let exact = c * (2 * pair.index + 1) as f64;
            assert!(
                (pair.z - exact).norm() / exact.norm() < 1e-8,
                "m = {}",
                pair.index
            );
        }
    }

    #[test]
    fn continuation_reaches_rotated_harmonic_spectrum() {
        let spec = PotentialSpec::harmonic(Complex64::from_polar(1.0, PI / 8.0)).unwrap();
        let opts = MarchOptions {
            grid_points: 801,
            ..MarchOptions::default()
        };
        let pairs = continue_in_angle(&spec, 4, &opts).unwrap();
        assert_eq!(pairs.len(), 5);
        for (m, pair) in pairs.iter().enumerate() {
            assert_eq!(pair.index, m);
            let exact = spec.c * (2 * m + 1) as f64;
            assert!(
                (pair.lambda - exact).norm() < 1e-8,
                "m = {m}: {}",
                pair.lambda
            );
        }
    }

    #[test]
    fn zero_angle_continuation_is_self_adjoint() {
        let spec = PotentialSpec::harmonic(c64(1.0, 0.0)).unwrap();
        let opts = MarchOptions {
            grid_points: 801,
            ..MarchOptions::default()
        };
        let pairs = continue_in_angle(&spec, 3, &opts).unwrap();
        for (m, pair) in pairs.iter().enumerate() {
            assert!(pair.lambda.im.abs() < 1e-9);
            assert!((pair.lambda.re - (2 * m + 1) as f64).abs() < 1e-8);
        }
        assert_eq!(argmax_abs(&pairs[0]), 0.0);
    }

    #[test]
    fn grid_refinement_leaves_eigenvalue_unchanged() {
        let c = Complex64::from_polar(1.0, PI / 8.0);
        let problem = harmonic(PI / 8.0, 12.0);
        let base = SecantOptions {
            x_match: Some(3.5),
            ..SecantOptions::default()
        };
        let z = find_eigenvalue(&problem, c * 21.3, Parity::Even, &base).unwrap();
        // Halving the largest integrator step must not move the root.
        let rhs_grid: Vec<f64> = uniform_grid(12.0, 2401);
        let t = integrate_schrodinger(&problem, z, Parity::Even, Direction::Outward, &rhs_grid)
            .unwrap();
        assert!(t.f.iter().all(|v| v.is_finite()));
        assert!((z - c * 21.0).norm() / 21.0 < 1e-8);
    }
}
