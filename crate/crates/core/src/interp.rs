//! Cubic interpolation of complex samples.

use num_complex::Complex64;

/// Cubic Hermite interpolation on `[x0, x1]` from values and first derivatives
/// at both ends.
pub fn hermite(
    x0: f64,
    x1: f64,
    y0: Complex64,
    y1: Complex64,
    d0: Complex64,
    d1: Complex64,
    x: f64,
) -> Complex64 {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    y0 * h00 + d0 * (h10 * h) + y1 * h01 + d1 * (h11 * h)
}

/// Index `i` with `xs[i] <= x <= xs[i + 1]` for a strictly increasing grid,
/// clamped to the first/last interval.
pub fn bracket(xs: &[f64], x: f64) -> usize {
    debug_assert!(xs.len() >= 2);
    match xs.binary_search_by(|probe| probe.partial_cmp(&x).unwrap_or(core::cmp::Ordering::Less)) {
        Ok(i) => i.min(xs.len() - 2),
        Err(i) => i.saturating_sub(1).min(xs.len() - 2),
    }
}

/// Four-point Lagrange interpolation of samples on a strictly increasing
/// grid, using the two nearest samples on each side (shifted inward at the
/// ends).
pub fn cubic(xs: &[f64], ys: &[Complex64], x: f64) -> Complex64 {
    let n = xs.len();
    debug_assert_eq!(n, ys.len());
    if n < 4 {
        if n == 1 {
            return ys[0];
        }
        let i = bracket(xs, x);
        let t = (x - xs[i]) / (xs[i + 1] - xs[i]);
        return ys[i] * (1.0 - t) + ys[i + 1] * t;
    }
    let i = bracket(xs, x);
    let start = i.saturating_sub(1).min(n - 4);
    let nodes = &xs[start..start + 4];
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, &xj) in nodes.iter().enumerate() {
        let mut w = 1.0;
        for (k, &xk) in nodes.iter().enumerate() {
            if k != j {
                w *= (x - xk) / (xj - xk);
            }
        }
        acc += ys[start + j] * w;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn hermite_reproduces_cubic() {
        let p = |x: f64| Complex64::new(x * x * x - 2.0 * x, 0.5 * x * x);
        let dp = |x: f64| Complex64::new(3.0 * x * x - 2.0, x);
        let v = hermite(0.3, 1.1, p(0.3), p(1.1), dp(0.3), dp(1.1), 0.77);
        assert!((v - p(0.77)).norm() < 1e-13);
    }

    #[test]
    fn cubic_is_accurate_on_dense_grid() {
        let xs: Vec<f64> = (0..401).map(|i| i as f64 * 0.01).collect();
        let ys: Vec<Complex64> = xs
            .iter()
            .map(|&x| Complex64::new(0.0, 3.0 * x).exp())
            .collect();
        for &x in &[0.005, 1.2345, 3.999] {
            let err = (cubic(&xs, &ys, x) - Complex64::new(0.0, 3.0 * x).exp()).norm();
            assert!(err < 1e-6, "x = {x}: {err}");
        }
    }

    #[test]
    fn bracket_clamps() {
        let xs = [0.0, 1.0, 2.0];
        assert_eq!(bracket(&xs, -1.0), 0);
        assert_eq!(bracket(&xs, 2.0), 1);
        assert_eq!(bracket(&xs, 5.0), 1);
        assert_eq!(bracket(&xs, 1.0), 1);
    }
}
