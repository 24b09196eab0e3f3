//! Mode centers, the phase integral and the leading-order JWKB mode.
//!
//! For a center `(a, η)` with `z = η² + W(a)` the mode is
//!
//! ```text
//! y(a + s) = φ(s)^{-1/4} exp(-ψ(s)/h),   ψ(s) = iη ∫₀ˢ φ(t)^{1/2} dt,
//! φ(t) = 1 - (W(a + t) - W(a)) / η².
//! ```
//!
//! Square and fourth roots are tracked continuously from `+1` at `s = 0`.

use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)] // float math for no_std builds
use num_traits::Float;

use crate::interp::{bracket, cubic, hermite};
use crate::potentials::WorkingProblem;
use crate::{Error, Result};

/// Real solution `(a, η)` of a center equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterPair {
    /// Mode center.
    pub a: f64,
    /// Local momentum; its sign makes the phase grow away from the center.
    pub eta: f64,
}

impl CenterPair {
    /// `η² + W(a)`, the working eigenvalue this center reproduces.
    pub fn energy(&self, problem: &WorkingProblem) -> Complex64 {
        problem.potential(self.a) + self.eta * self.eta
    }
}

/// Scan step for the imaginary-part equation.
pub const SCAN_STEP: f64 = 1e-3;
/// Half-width of the neighbourhood checked by the local-decay filter.
pub const DECAY_PROBE: f64 = 0.05;

fn bisect<F: Fn(f64) -> f64>(g: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut glo = g(lo);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid);
        if gm == 0.0 {
            return mid;
        }
        if (gm > 0.0) == (glo > 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `ψ(s)` for small `s` by a single Simpson panel.
fn short_phase(problem: &WorkingProblem, a: f64, eta: f64, s: f64) -> Complex64 {
    let w0 = problem.potential(a);
    let r =
        |t: f64| (Complex64::new(1.0, 0.0) - (problem.potential(a + t) - w0) / (eta * eta)).sqrt();
    Complex64::new(0.0, eta) * (s / 6.0) * (r(0.0) + r(0.5 * s) * 4.0 + r(s))
}

/// Whether the phase factor `|exp(-ψ)|` falls below 1 on both sides of the
/// center within [`DECAY_PROBE`].
///
/// The amplitude `φ^{-1/4}` varies linearly in `s` and is left out: it would
/// make `|y|` increase on one side of every center where `Re W'(a) ≠ 0`.
fn decays_locally(problem: &WorkingProblem, a: f64, eta: f64) -> bool {
    let lo = -DECAY_PROBE.min(a);
    let hi = DECAY_PROBE.min(problem.radius() - a);
    (1..=5).all(|k| {
        let t = k as f64 / 5.0;
        [lo * t, hi * t]
            .iter()
            .all(|&s| s == 0.0 || short_phase(problem, a, eta, s).re > 0.0)
    })
}

/// Solutions of `σλ = η² + W(a)` with real `a ∈ (0, X]`, `η ≠ 0`.
///
/// The imaginary part is solved for `a` by a scan with step 1e-3 and
/// bisection to 1e-10. Roots with `Re(σλ) - Re W(a) ≤ 0` are dropped. The sign
/// of `η` makes `Re ψ > 0` at the first step `s = h_mode`, and the pair is kept
/// only if the phase factor decays on both sides of `a`. Sorted by `a`.
pub fn solve_center_equation(problem: &WorkingProblem, lambda: Complex64) -> Vec<CenterPair> {
    let z = problem.working_eigenvalue(lambda);
    let g = |x: f64| problem.potential(x).im - z.im;
    let n = (problem.radius() / SCAN_STEP).floor() as usize;
    let mut out = Vec::new();
    let mut prev_x = SCAN_STEP;
    let mut prev_g = g(prev_x);
    for i in 2..=n + 1 {
        let x = (SCAN_STEP * i as f64).min(problem.radius());
        let gx = g(x);
        let root = if prev_g == 0.0 {
            Some(prev_x)
        } else if (prev_g < 0.0) != (gx < 0.0) && gx != 0.0 {
            Some(bisect(g, prev_x, x))
        } else {
            None
        };
        if let Some(a) = root {
            if let Some(pair) = admissible(problem, z, a) {
                out.push(pair);
            }
        }
        if x >= problem.radius() {
            if gx == 0.0 {
                if let Some(pair) = admissible(problem, z, x) {
                    out.push(pair);
                }
            }
            break;
        }
        prev_x = x;
        prev_g = gx;
    }
    out
}

fn admissible(problem: &WorkingProblem, z: Complex64, a: f64) -> Option<CenterPair> {
    let eta2 = z.re - problem.potential(a).re;
    if !(eta2 > 0.0) {
        return None;
    }
    let eta = eta2.sqrt();
    let eps = problem.radius() / (crate::shooting::DEFAULT_GRID_POINTS - 1) as f64;
    let eta = if short_phase(problem, a, eta, eps).re > 0.0 {
        eta
    } else {
        -eta
    };
    decays_locally(problem, a, eta).then_some(CenterPair { a, eta })
}

/// A refined center, flagged when the Newton iteration failed and the
/// unrefined pair was kept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinedCenter {
    /// Refined (or fallback) pair.
    pub center: CenterPair,
    /// Whether Newton's method converged.
    pub converged: bool,
}

/// Refines each root of [`solve_center_equation`] to a solution of
/// `σλ + iW'(a)/(2η) - η² - W(a) = 0` by damped Newton iteration
/// (at most 50 steps).
pub fn solve_refined_center(problem: &WorkingProblem, lambda: Complex64) -> Vec<RefinedCenter> {
    let z = problem.working_eigenvalue(lambda);
    solve_center_equation(problem, lambda)
        .into_iter()
        .map(|seed| match refine(problem, z, seed) {
            Some(center) => RefinedCenter {
                center,
                converged: true,
            },
            None => RefinedCenter {
                center: seed,
                converged: false,
            },
        })
        .collect()
}

fn refine(problem: &WorkingProblem, z: Complex64, seed: CenterPair) -> Option<CenterPair> {
    let i = Complex64::new(0.0, 1.0);
    let residual = |a: f64, eta: f64| {
        let (w, dw, _) = problem.all(a);
        z + i * dw / (2.0 * eta) - eta * eta - w
    };
    let (mut a, mut eta) = (seed.a, seed.eta);
    let mut f = residual(a, eta);
    let tol = 1e-12 * (1.0 + z.norm());
    for _ in 0..50 {
        if f.norm() < tol {
            return Some(CenterPair { a, eta });
        }
        let (_, dw, d2w) = problem.all(a);
        let fa = i * d2w / (2.0 * eta) - dw;
        let fe = -i * dw / (2.0 * eta * eta) - 2.0 * eta;
        let det = fa.re * fe.im - fe.re * fa.im;
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let da = -(fe.im * f.re - fe.re * f.im) / det;
        let de = -(-fa.im * f.re + fa.re * f.im) / det;
        let mut t = 1.0;
        loop {
            let (na, ne) = (a + t * da, eta + t * de);
            if na > 0.0 && na <= problem.radius() && ne != 0.0 && ne.signum() == eta.signum() {
                let nf = residual(na, ne);
                if nf.norm() < f.norm() {
                    a = na;
                    eta = ne;
                    f = nf;
                    break;
                }
            }
            t *= 0.5;
            if t < 1e-10 {
                return None;
            }
        }
    }
    (f.norm() < tol).then_some(CenterPair { a, eta })
}

fn nearest_root(value: Complex64, previous: Complex64) -> Complex64 {
    let r = value.sqrt();
    if (r - previous).norm() <= (r + previous).norm() {
        r
    } else {
        -r
    }
}

/// `φ^{1/2}` on a grid containing `s = 0`, tracked from `+1` at the center.
fn tracked_root(phi: &[Complex64], zero: usize, grid: &[f64]) -> Result<Vec<Complex64>> {
    for (p, &s) in phi.iter().zip(grid) {
        if p.norm() < 1e-12 {
            return Err(Error::BranchAmbiguity {
                s,
                modulus: p.norm(),
            });
        }
    }
    let mut r = alloc::vec![Complex64::new(0.0, 0.0); phi.len()];
    r[zero] = nearest_root(phi[zero], Complex64::new(1.0, 0.0));
    for k in zero + 1..phi.len() {
        r[k] = nearest_root(phi[k], r[k - 1]);
    }
    for k in (0..zero).rev() {
        r[k] = nearest_root(phi[k], r[k + 1]);
    }
    Ok(r)
}

fn zero_index(grid: &[f64]) -> Result<usize> {
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter(
            "mode grid must be strictly increasing",
        ));
    }
    grid.iter()
        .position(|&s| s == 0.0)
        .ok_or(Error::InvalidParameter("mode grid must contain s = 0"))
}

struct PhaseData {
    phi: Vec<Complex64>,
    root: Vec<Complex64>,
    psi: Vec<Complex64>,
}

fn phase_data(problem: &WorkingProblem, center: CenterPair, grid: &[f64]) -> Result<PhaseData> {
    let zero = zero_index(grid)?;
    let w0 = problem.potential(center.a);
    let eta2 = center.eta * center.eta;
    let phi_at = |s: f64| Complex64::new(1.0, 0.0) - (problem.potential(center.a + s) - w0) / eta2;
    let phi: Vec<Complex64> = grid.iter().map(|&s| phi_at(s)).collect();
    let root = tracked_root(&phi, zero, grid)?;
    // Per-interval Simpson with the midpoint root taken nearest its neighbour.
    let mut integral = alloc::vec![Complex64::new(0.0, 0.0); grid.len()];
    let panel = |k: usize| -> Result<Complex64> {
        let (s0, s1) = (grid[k], grid[k + 1]);
        let pm = phi_at(0.5 * (s0 + s1));
        if pm.norm() < 1e-12 {
            return Err(Error::BranchAmbiguity {
                s: 0.5 * (s0 + s1),
                modulus: pm.norm(),
            });
        }
        let rm = nearest_root(pm, root[k]);
        Ok((root[k] + rm * 4.0 + root[k + 1]) * ((s1 - s0) / 6.0))
    };
    for k in zero..grid.len() - 1 {
        integral[k + 1] = integral[k] + panel(k)?;
    }
    for k in (0..zero).rev() {
        integral[k] = integral[k + 1] - panel(k)?;
    }
    let i_eta = Complex64::new(0.0, center.eta);
    let psi = integral.into_iter().map(|v| i_eta * v).collect();
    Ok(PhaseData { phi, root, psi })
}

/// `ψ(s) = iη ∫₀ˢ φ(t)^{1/2} dt` on a strictly increasing grid containing 0.
pub fn build_phase(
    problem: &WorkingProblem,
    center: CenterPair,
    grid: &[f64],
) -> Result<Vec<Complex64>> {
    Ok(phase_data(problem, center, grid)?.psi)
}

/// Leading-order JWKB mode sampled on an `s`-grid.
#[derive(Debug, Clone, PartialEq)]
pub struct JwkbMode {
    /// Center the mode is built around.
    pub center: CenterPair,
    /// Semiclassical parameter.
    pub h: f64,
    /// `z = η² + W(a)`.
    pub z: Complex64,
    /// Offsets `s = x - a`, strictly increasing, containing 0.
    pub grid: Vec<f64>,
    /// Tracked `φ^{1/2}`.
    pub root: Vec<Complex64>,
    /// Amplitude `ξ₀ = φ^{-1/4}`.
    pub xi0: Vec<Complex64>,
    /// Phase `ψ`.
    pub psi: Vec<Complex64>,
    /// Mode `y = ξ₀ exp(-ψ/h)`.
    pub y: Vec<Complex64>,
    /// `y'/y`, analytic.
    pub log_derivative: Vec<Complex64>,
}

impl JwkbMode {
    /// Index of `s = 0`.
    pub fn zero_index(&self) -> usize {
        self.grid.iter().position(|&s| s == 0.0).unwrap_or(0)
    }

    /// `y(s)` by cubic Hermite interpolation from `y` and `y' = L y`.
    pub fn eval(&self, s: f64) -> Complex64 {
        let k = bracket(&self.grid, s);
        let (s0, s1) = (self.grid[k], self.grid[k + 1]);
        let (y0, y1) = (self.y[k], self.y[k + 1]);
        hermite(
            s0,
            s1,
            y0,
            y1,
            y0 * self.log_derivative[k],
            y1 * self.log_derivative[k + 1],
            s,
        )
    }

    /// `y'/y` at `s` by cubic interpolation.
    pub fn log_derivative_at(&self, s: f64) -> Complex64 {
        cubic(&self.grid, &self.log_derivative, s)
    }
}

/// `s`-grid on `[-a, X - a]` with spacing `X/(n-1)`, aligned so that `s = 0`
/// is a node; both domain ends are nodes as well.
pub fn mode_grid(radius: f64, a: f64, n: usize) -> Vec<f64> {
    let h = radius / (n.max(2) - 1) as f64;
    let lo = -a;
    let hi = radius - a;
    let first = (lo / h).ceil() as i64;
    let last = (hi / h).floor() as i64;
    let mut grid = Vec::with_capacity(n + 2);
    if lo < 0.0 {
        grid.push(lo);
    }
    for k in first..=last {
        let s = h * k as f64;
        if (k != 0) && ((s - lo) < 0.25 * h || (hi - s) < 0.25 * h) {
            continue;
        }
        if grid.last().is_some_and(|&p| s <= p) {
            continue;
        }
        grid.push(s);
    }
    if grid.last().is_some_and(|&p| p < hi) {
        grid.push(hi);
    }
    grid
}

/// Builds `y = ξ₀ exp(-ψ/h)` and its analytic log-derivative
/// `-φ'/(4φ) - iη φ^{1/2}/h` on `grid`.
pub fn build_mode(
    problem: &WorkingProblem,
    center: CenterPair,
    h: f64,
    grid: &[f64],
) -> Result<JwkbMode> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter("h must be positive"));
    }
    let PhaseData { phi, root, psi } = phase_data(problem, center, grid)?;
    let zero = zero_index(grid)?;
    // ξ₀ = 1/√r with √r tracked from +1 like r itself.
    let q = tracked_root(&root, zero, grid)?;
    let xi0: Vec<Complex64> = q.iter().map(|v| v.inv()).collect();
    let y = xi0
        .iter()
        .zip(&psi)
        .map(|(x, p)| x * (-p / h).exp())
        .collect();
    let eta2 = center.eta * center.eta;
    let i_eta = Complex64::new(0.0, center.eta);
    let log_derivative = grid
        .iter()
        .zip(phi.iter().zip(&root))
        .map(|(&s, (p, r))| {
            let dphi = -problem.derivative(center.a + s) / eta2;
            -dphi / (p * 4.0) - i_eta * r / h
        })
        .collect();
    Ok(JwkbMode {
        center,
        h,
        z: center.energy(problem),
        grid: grid.to_vec(),
        root,
        xi0,
        psi,
        y,
        log_derivative,
    })
}

/// `(1 - W'(a)s/(2η²))^{-1/2} exp(-iηs + iW'(a)s²/(4η))` on the principal
/// branch.
pub fn gaussian_mode(problem: &WorkingProblem, center: CenterPair, s: f64) -> Result<Complex64> {
    let dw = problem.derivative(center.a);
    let eta = center.eta;
    let base = Complex64::new(1.0, 0.0) - dw * s / (2.0 * eta * eta);
    if base.im == 0.0 && base.re <= 0.0 {
        return Err(Error::BranchCut { s });
    }
    let i = Complex64::new(0.0, 1.0);
    Ok(base.sqrt().inv() * (-i * eta * s + i * dw * s * s / (4.0 * eta)).exp())
}

/// `sup |(-h² y'' + (W - z) y) / y|` over the mode grid points inside
/// `window`, with `y''/y = L' + L²` from the analytic forms of `ξ₀` and `ψ`.
pub fn jwkb_residual(problem: &WorkingProblem, mode: &JwkbMode, window: (f64, f64)) -> f64 {
    let a = mode.center.a;
    let eta = mode.center.eta;
    let eta2 = eta * eta;
    let h = mode.h;
    let i_eta = Complex64::new(0.0, eta);
    let mut worst: f64 = 0.0;
    for (k, &s) in mode.grid.iter().enumerate() {
        if s < window.0 || s > window.1 {
            continue;
        }
        let (w, dw, d2w) = problem.all(a + s);
        let r = mode.root[k];
        let phi = r * r;
        let dphi = -dw / eta2;
        let d2phi = -d2w / eta2;
        let l = -dphi / (phi * 4.0) - i_eta * r / h;
        let dl =
            -d2phi / (phi * 4.0) + dphi * dphi / (phi * phi * 4.0) - i_eta * dphi / (r * 2.0 * h);
        let res = -(dl + l * l) * (h * h) + w - mode.z;
        worst = worst.max(res.norm());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::potentials::{to_working_problem, PotentialSpec};
    use core::f64::consts::PI;

    fn rot() -> Complex64 {
        Complex64::from_polar(1.0, PI / 8.0)
    }

    fn harmonic() -> WorkingProblem {
        to_working_problem(&PotentialSpec::harmonic(rot()).unwrap(), 12.0).unwrap()
    }

    fn harmonic_center(m: usize) -> CenterPair {
        let p = harmonic();
        solve_center_equation(&p, rot() * (2 * m + 1) as f64)[0]
    }

    #[test]
    fn harmonic_centers_match_closed_form() {
        let p = harmonic();
        for m in [0usize, 4, 20, 30] {
            let lambda = rot() * (2 * m + 1) as f64;
            let pairs = solve_center_equation(&p, lambda);
            assert_eq!(pairs.len(), 1, "m = {m}");
            // Im: (2m+1) sin(π/8) = a² sin(π/4); Re: η² = (2m+1)cos(π/8) - a² cos(π/4).
            let a2 = (2 * m + 1) as f64 * (PI / 8.0).sin() / (PI / 4.0).sin();
            let eta2 = (2 * m + 1) as f64 * (PI / 8.0).cos() - a2 * (PI / 4.0).cos();
            assert!((pairs[0].a - a2.sqrt()).abs() < 1e-9);
            assert!((pairs[0].eta - eta2.sqrt()).abs() < 1e-8);
            assert!((pairs[0].energy(&p) - lambda).norm() < 1e-9);
        }
        let ground = solve_center_equation(&p, rot())[0];
        assert!((ground.a - 0.7357).abs() < 1e-4 && (ground.eta - 0.7357).abs() < 1e-4);
        let m20 = solve_center_equation(&p, rot() * 41.0)[0];
        assert!((m20.a - 4.711).abs() < 1e-3);
    }

    #[test]
    fn refined_center_reduces_to_plain_when_slope_vanishes() {
        let p = WorkingProblem::constant(c64(1.0, 0.0), 5.0).unwrap();
        let seed = CenterPair { a: 2.0, eta: 1.5 };
        let refined = refine(&p, seed.energy(&p), seed).unwrap();
        assert_eq!(refined, seed);
    }

    #[test]
    fn refined_harmonic_center() {
        let p = harmonic();
        let refined = solve_refined_center(&p, rot() * 41.0);
        assert_eq!(refined.len(), 1);
        assert!(refined[0].converged);
        let c = refined[0].center;
        let i = c64(0.0, 1.0);
        let res =
            rot() * 41.0 + i * p.derivative(c.a) / (2.0 * c.eta) - c.eta * c.eta - p.potential(c.a);
        assert!(res.norm() < 1e-10);
        assert!((c.a - 4.822).abs() < 5e-3, "{}", c.a);
    }

    #[test]
    fn constant_potential_mode_is_a_plane_wave() {
        let p = WorkingProblem::constant(c64(2.0, 1.0), 10.0).unwrap();
        let center = CenterPair { a: 4.0, eta: 1.3 };
        let grid = mode_grid(10.0, 4.0, 1001);
        let psi = build_phase(&p, center, &grid).unwrap();
        let mode = build_mode(&p, center, 1.0, &grid).unwrap();
        for (k, &s) in grid.iter().enumerate() {
            assert!((psi[k] - c64(0.0, 1.3 * s)).norm() < 1e-12);
            assert!((mode.y[k] - c64(0.0, -1.3 * s).exp()).norm() < 1e-12);
            assert!((mode.y[k].norm() - 1.0).abs() < 1e-12);
        }
        assert!(jwkb_residual(&p, &mode, (-4.0, 6.0)) < 1e-12);
        assert_eq!(
            gaussian_mode(&p, center, 0.7).unwrap(),
            c64(0.0, -1.3 * 0.7).exp()
        );
    }

    #[test]
    fn mode_is_one_at_center() {
        let p = harmonic();
        let center = harmonic_center(20);
        let grid = mode_grid(12.0, center.a, 4001);
        let mode = build_mode(&p, center, 1.0, &grid).unwrap();
        let z = mode.zero_index();
        assert_eq!(mode.grid[z], 0.0);
        assert_eq!(mode.y[z], c64(1.0, 0.0));
        assert_eq!(mode.xi0[z], c64(1.0, 0.0));
        assert_eq!(mode.psi[z], c64(0.0, 0.0));
        assert!(mode.psi[z + 1].re > 0.0);
        assert_eq!(gaussian_mode(&p, center, 0.0).unwrap(), c64(1.0, 0.0));
        for pair in mode.root.windows(2) {
            let jump = (pair[1] / pair[0]).arg().abs();
            assert!(jump < PI / 2.0);
        }
    }

    #[test]
    fn phase_matches_taylor_expansion() {
        let p = harmonic();
        let center = harmonic_center(20);
        let grid = mode_grid(12.0, center.a, 4001);
        let psi = build_phase(&p, center, &grid).unwrap();
        let mode = build_mode(&p, center, 1.0, &grid).unwrap();
        let k = mode.zero_index();
        let s = 1e-2;
        let sub = [0.0, 0.25 * s, 0.5 * s, 0.75 * s, s];
        let psi_s = build_phase(&p, center, &sub).unwrap();
        let dw = p.derivative(center.a);
        let eta = center.eta;
        let taylor = c64(0.0, eta * s) - c64(0.0, 1.0) * dw * s * s / (4.0 * eta);
        assert!((psi_s[sub.len() - 1] - taylor).norm() < 1e-6);
        assert!(psi[k + 1].re > 0.0);
    }

    #[test]
    fn gaussian_mode_agrees_near_center() {
        let p = harmonic();
        let center = harmonic_center(20);
        let grid = mode_grid(12.0, center.a, 4001);
        let mode = build_mode(&p, center, 1.0, &grid).unwrap();
        for &s in &[-0.1, -0.05, 0.02, 0.05, 0.1] {
            let g = gaussian_mode(&p, center, s).unwrap();
            let y = mode.eval(s);
            assert!((g - y).norm() / y.norm() < 1e-3, "s = {s}");
        }
        let y = mode.eval(0.05);
        assert!((gaussian_mode(&p, center, 0.05).unwrap() - y).norm() / y.norm() < 1e-4);
    }

    #[test]
    fn gaussian_mode_branch_cut() {
        let p = WorkingProblem::constant(c64(0.0, 0.0), 5.0).unwrap();
        // W' = 0 here, so use a linear potential via the harmonic family at c = 1.
        let h = to_working_problem(&PotentialSpec::harmonic(c64(1.0, 0.0)).unwrap(), 5.0).unwrap();
        let center = CenterPair { a: 1.0, eta: 1.0 };
        assert!(matches!(
            gaussian_mode(&h, center, 1.0),
            Err(Error::BranchCut { .. })
        ));
        assert!(gaussian_mode(&p, center, 1.0).is_ok());
    }

    #[test]
    fn residual_scales_like_h_squared() {
        let p = harmonic();
        let center = harmonic_center(20);
        let grid = mode_grid(12.0, center.a, 4001);
        let hs = [0.2, 0.1, 0.05, 0.025];
        let res: Vec<f64> = hs
            .iter()
            .map(|&h| jwkb_residual(&p, &build_mode(&p, center, h, &grid).unwrap(), (-0.5, 0.5)))
            .collect();
        for w in res.windows(2) {
            let ratio = w[0] / w[1];
            assert!((ratio - 4.0).abs() <= 0.8, "ratio {ratio}");
        }
    }

    #[test]
    fn center_scan_finds_nothing_for_flat_imaginary_part() {
        let p = WorkingProblem::constant(c64(1.0, 0.0), 5.0).unwrap();
        assert!(solve_center_equation(&p, c64(3.0, 1.0)).is_empty());
    }

    #[test]
    fn phase_requires_center_node() {
        let p = harmonic();
        let center = harmonic_center(4);
        assert!(build_phase(&p, center, &[0.1, 0.2]).is_err());
    }
}
