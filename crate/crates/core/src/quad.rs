//! Quadrature rules: composite Simpson on uniform grids and adaptive Simpson
//! for smooth real integrands.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::{Error, Result};

/// Quadrature weights for `n` equally spaced samples with spacing `h`.
///
/// Odd `n` uses composite Simpson. Even `n >= 4` uses Simpson on the first
/// `n - 3` samples and the 3/8 rule on the last four. `n == 2` falls back to
/// the trapezoid rule.
pub fn uniform_weights(n: usize, h: f64) -> Vec<f64> {
    let mut w = vec![0.0; n];
    match n {
        0 => {}
        1 => {}
        2 => {
            w[0] = 0.5 * h;
            w[1] = 0.5 * h;
        }
        3 => simpson_into(&mut w, h),
        _ if n % 2 == 1 => simpson_into(&mut w, h),
        _ => {
            let head = n - 3;
            simpson_into(&mut w[..head], h);
            let k = 3.0 * h / 8.0;
            w[head - 1] += k;
            w[head] += 3.0 * k;
            w[head + 1] += 3.0 * k;
            w[head + 2] += k;
        }
    }
    w
}

fn simpson_into(w: &mut [f64], h: f64) {
    let n = w.len();
    if n < 3 {
        if n == 2 {
            w[0] += 0.5 * h;
            w[1] += 0.5 * h;
        }
        return;
    }
    let third = h / 3.0;
    w[0] += third;
    w[n - 1] += third;
    for (i, wi) in w.iter_mut().enumerate().take(n - 1).skip(1) {
        *wi += if i % 2 == 1 { 4.0 * third } else { 2.0 * third };
    }
}

/// Integral of complex samples against precomputed weights.
pub fn weighted_sum(weights: &[f64], values: &[Complex64]) -> Complex64 {
    weights
        .iter()
        .zip(values)
        .fold(Complex64::new(0.0, 0.0), |acc, (w, v)| acc + v * *w)
}

/// `∫ |g|²` for samples on a uniform grid.
pub fn norm_squared(weights: &[f64], values: &[Complex64]) -> f64 {
    weights
        .iter()
        .zip(values)
        .map(|(w, v)| w * v.norm_sqr())
        .sum()
}

/// `∫ a · conj(b)` for samples on a uniform grid.
pub fn inner(weights: &[f64], a: &[Complex64], b: &[Complex64]) -> Complex64 {
    weights
        .iter()
        .zip(a.iter().zip(b))
        .fold(Complex64::new(0.0, 0.0), |acc, (w, (x, y))| {
            acc + x * y.conj() * *w
        })
}

/// Adaptive Simpson quadrature of a smooth real function on `[a, b]` with a
/// relative tolerance.
///
/// The global tolerance is taken relative to a coarse first estimate of
/// `∫|f|`, so integrands with cancellation still terminate.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || rel_tol <= 0.0 {
        return Err(Error::InvalidParameter(
            "adaptive_simpson needs finite limits and rel_tol > 0",
        ));
    }
    if a == b {
        return Ok(0.0);
    }
    // Split into panels first so narrow features are not missed by the
    // five-point initial estimate.
    const PANELS: usize = 64;
    let h = (b - a) / PANELS as f64;
    let mut scale = 0.0;
    let mut panels = Vec::with_capacity(PANELS);
    for i in 0..PANELS {
        let lo = a + h * i as f64;
        let hi = if i + 1 == PANELS { b } else { lo + h };
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        scale += (hi - lo) / 6.0 * (flo.abs() + 4.0 * fmid.abs() + fhi.abs());
        panels.push((lo, hi, flo, fmid, fhi, whole));
    }
    let abs_tol = rel_tol * scale.max(f64::MIN_POSITIVE);
    let mut total = 0.0;
    for (lo, hi, flo, fmid, fhi, whole) in panels {
        total += recurse(
            &f,
            lo,
            hi,
            flo,
            fmid,
            fhi,
            whole,
            abs_tol / PANELS as f64,
            48,
        )?;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    if !(a < lm && lm < m && m < rm && rm < b) {
        // Interval narrower than the floating-point resolution.
        return Err(Error::QuadratureNotConverged { a, b });
    }
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if !delta.is_finite() {
        return Err(Error::NonFinite("adaptive quadrature integrand"));
    }
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureNotConverged { a, b });
    }
    Ok(recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn simpson_is_exact_for_cubics() {
        for n in [3usize, 5, 4, 8, 101, 100] {
            let h = 2.0 / (n - 1) as f64;
            let w = uniform_weights(n, h);
            let s: f64 = (0..n)
                .map(|i| {
                    let x = -1.0 + h * i as f64;
                    w[i] * (x * x * x + 3.0 * x * x - x + 2.0)
                })
                .sum();
            assert!((s - 6.0).abs() < 1e-12, "n = {n}: {s}");
        }
    }

    #[test]
    fn adaptive_handles_oscillation() {
        let v = adaptive_simpson(|x| (10.0 * x).sin().powi(2), 0.0, PI, 1e-10).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-9);
    }

    #[test]
    fn adaptive_gaussian() {
        let v = adaptive_simpson(|x| (-x * x).exp(), -20.0, 20.0, 1e-12).unwrap();
        assert!((v - PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn adaptive_reports_nonconvergence() {
        // A jump keeps the local error proportional to the panel width, as is
        // the tolerance, so refinement never catches up.
        let step = |x: f64| if x > 0.3 { 1.0 } else { 0.0 };
        let err = adaptive_simpson(step, 0.0, 1.0, 1e-12);
        assert!(matches!(err, Err(Error::QuadratureNotConverged { .. })));
        let nan = adaptive_simpson(|x| if x > 0.5 { f64::NAN } else { x }, 0.0, 1.0, 1e-8);
        assert!(matches!(nan, Err(Error::NonFinite(_))));
    }
}
