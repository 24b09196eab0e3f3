//! Adaptive Dormand–Prince 5(4) integration of two-component complex systems.
//!
//! The state is renormalized whenever its first component grows past a
//! threshold; the removed factor is accumulated as a natural logarithm so the
//! true solution is `y · exp(log_scale)`.

use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)] // float math for no_std builds
use num_traits::Float;

use crate::{Error, Result};

/// Two-component complex state.
pub type State = [Complex64; 2];

/// Settings for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    /// Relative local error tolerance.
    pub rtol: f64,
    /// Rescale the state once `|y[0]|` (or `|y[1]|`) exceeds this.
    pub renormalize_above: f64,
    /// Smallest admissible step relative to `1 + |x|`.
    pub min_step: f64,
    /// Largest step allowed.
    pub max_step: f64,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            renormalize_above: 1e100,
            min_step: 1e-14,
            max_step: 0.1,
        }
    }
}

/// State at one requested abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    /// Abscissa.
    pub x: f64,
    /// Scaled state.
    pub y: State,
    /// Natural log of the factor removed by renormalization so far.
    pub log_scale: f64,
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// Fifth minus fourth order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn axpy(y: &State, terms: &[(f64, &State)], h: f64) -> State {
    let mut out = *y;
    for (c, k) in terms {
        out[0] += k[0] * (c * h);
        out[1] += k[1] * (c * h);
    }
    out
}

/// Integrates `y' = rhs(x, y)` from `(x0, y0)` and returns the state at each
/// target.
///
/// Targets must be monotone and lie on one side of `x0` (a target equal to
/// `x0` returns the initial state). The direction of integration follows the
/// targets.
pub fn integrate<F>(
    rhs: F,
    x0: f64,
    y0: State,
    targets: &[f64],
    opts: &OdeOptions,
) -> Result<Vec<Sample>>
where
    F: Fn(f64, &State) -> State,
{
    let mut out = Vec::with_capacity(targets.len());
    let Some(&last) = targets.last() else {
        return Ok(out);
    };
    let dir = if last >= x0 { 1.0 } else { -1.0 };
    let mut x = x0;
    let mut y = y0;
    let mut log_scale = 0.0;
    let mut h = opts.max_step.min(1e-3 * (1.0 + x0.abs())).max(1e-6);
    let mut k1 = rhs(x, &y);

    for &target in targets {
        if (target - x) * dir < 0.0 {
            return Err(Error::InvalidParameter(
                "integration targets must be monotone",
            ));
        }
        while (target - x) * dir > 0.0 {
            let remaining = (target - x).abs();
            let last_step = h >= remaining;
            let step = if last_step { remaining } else { h };
            let hs = step * dir;
            let k2 = rhs(x + C2 * hs, &axpy(&y, &[(A21, &k1)], hs));
            let k3 = rhs(x + C3 * hs, &axpy(&y, &[(A31, &k1), (A32, &k2)], hs));
            let k4 = rhs(
                x + C4 * hs,
                &axpy(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], hs),
            );
            let k5 = rhs(
                x + C5 * hs,
                &axpy(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], hs),
            );
            let k6 = rhs(
                x + hs,
                &axpy(
                    &y,
                    &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
                    hs,
                ),
            );
            let y_new = axpy(
                &y,
                &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)],
                hs,
            );
            let x_new = if last_step { target } else { x + hs };
            let k7 = rhs(x_new, &y_new);

            let size = y[0]
                .norm()
                .max(y[1].norm())
                .max(y_new[0].norm())
                .max(y_new[1].norm());
            let mut err: f64 = 0.0;
            for i in 0..2 {
                let e =
                    (k1[i] * E1 + k3[i] * E3 + k4[i] * E4 + k5[i] * E5 + k6[i] * E6 + k7[i] * E7)
                        * hs;
                let scale = opts.rtol * (0.5 * (y[i].norm() + y_new[i].norm()) + 1e-3 * size);
                err = err.max(e.norm() / scale.max(f64::MIN_POSITIVE));
            }
            if !err.is_finite() {
                return Err(Error::NonFinite("ode step"));
            }
            if err <= 1.0 {
                x = x_new;
                y = y_new;
                k1 = k7;
                let big = y[0].norm().max(y[1].norm());
                if big > opts.renormalize_above {
                    y[0] /= big;
                    y[1] /= big;
                    k1[0] /= big;
                    k1[1] /= big;
                    log_scale += big.ln();
                }
            }
            let factor = if err == 0.0 {
                5.0
            } else {
                (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
            };
            // A step shortened to land on a target says little about the next one.
            if !(err <= 1.0 && last_step) {
                h = (step * factor).min(opts.max_step);
            }
            if h < opts.min_step * (1.0 + x.abs()) {
                return Err(Error::StepSizeUnderflow { x });
            }
        }
        out.push(Sample {
            x: target,
            y,
            log_scale,
        });
    }
    Ok(out)
}
