//! Complex potential families and their dilated working form.
//!
//! Three even families are supported:
//!
//! * `HarmonicComplex`: `V(x) = (c x)²`, used directly (`W = V`, `σ = 1`).
//! * `GaussianBump`: `V(x) = x² exp(-x²/b²)`.
//! * `DoubleGaussian`: `V(x) = α (exp(-γ(x-β)²) + exp(-γ(x+β)²))`.
//!
//! The two Gaussian families enter through the dilated operator
//! `-c⁻¹ d²/dx² + V(√c x)`. Multiplying by `c` gives the working problem
//! `-f'' + W f = z f` with `W(x) = c V(√c x)` and `z = c λ`.

use num_complex::Complex64;
#[allow(unused_imports)] // float math for no_std builds
use num_traits::Float;

use crate::quad::adaptive_simpson;
use crate::{Error, Result};

/// Which potential family a [`PotentialSpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `(c x)²`.
    HarmonicComplex,
    /// `x² exp(-x²/b²)`.
    GaussianBump {
        /// Gaussian width.
        b: f64,
    },
    /// `α (exp(-γ(x-β)²) + exp(-γ(x+β)²))`.
    DoubleGaussian {
        /// Height.
        alpha: f64,
        /// Offset of the two bumps.
        beta: f64,
        /// Inverse squared width.
        gamma: f64,
    },
}

/// A potential family together with its complex parameter `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    /// Family and its real parameters.
    pub family: Family,
    /// Dilation (or rotation) parameter.
    pub c: Complex64,
}

impl PotentialSpec {
    /// `(c x)²`.
    pub fn harmonic(c: Complex64) -> Result<Self> {
        Self {
            family: Family::HarmonicComplex,
            c,
        }
        .validated()
    }

    /// `x² exp(-x²/b²)` dilated by `c`.
    pub fn gaussian_bump(b: f64, c: Complex64) -> Result<Self> {
        Self {
            family: Family::GaussianBump { b },
            c,
        }
        .validated()
    }

    /// `α (exp(-γ(x-β)²) + exp(-γ(x+β)²))` dilated by `c`.
    pub fn double_gaussian(alpha: f64, beta: f64, gamma: f64, c: Complex64) -> Result<Self> {
        Self {
            family: Family::DoubleGaussian { alpha, beta, gamma },
            c,
        }
        .validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// Checks the parameter invariants.
    pub fn validate(&self) -> Result<()> {
        if !(self.c.re.is_finite() && self.c.im.is_finite()) || self.c.norm() == 0.0 {
            return Err(Error::InvalidParameter("c must be finite and nonzero"));
        }
        if self.c.re <= 0.0 {
            return Err(Error::InvalidParameter("Re c must be positive"));
        }
        match self.family {
            Family::HarmonicComplex => Ok(()),
            Family::GaussianBump { b } => {
                if b > 0.0 && b.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter("b must be positive"))
                }
            }
            Family::DoubleGaussian { alpha, beta, gamma } => {
                if !(alpha.is_finite() && beta.is_finite()) {
                    Err(Error::InvalidParameter("alpha and beta must be finite"))
                } else if !(gamma > 0.0 && gamma.is_finite()) {
                    Err(Error::InvalidParameter("gamma must be positive"))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// `arg c`.
    pub fn angle(&self) -> f64 {
        self.c.arg()
    }

    /// Same family with `c` rotated to `|c| e^{iθ}`.
    pub fn with_angle(&self, theta: f64) -> Self {
        Self {
            family: self.family,
            c: Complex64::from_polar(self.c.norm(), theta),
        }
    }

    /// Undilated potential `V(x)` at a real point.
    pub fn eval(&self, x: f64) -> Complex64 {
        match self.family {
            Family::HarmonicComplex => (self.c * x).powi(2),
            _ => self.profile(Complex64::new(x, 0.0)).0,
        }
    }

    /// `V`, `V'`, `V''` of a Gaussian family at a complex argument.
    fn profile(&self, w: Complex64) -> (Complex64, Complex64, Complex64) {
        match self.family {
            Family::HarmonicComplex => {
                let c2 = self.c * self.c;
                (c2 * w * w, c2 * w * 2.0, c2 * 2.0)
            }
            Family::GaussianBump { b } => {
                let u = w * w / (b * b);
                let e = (-u).exp();
                let v = w * w * e;
                let dv = w * 2.0 * (Complex64::new(1.0, 0.0) - u) * e;
                let d2v = (Complex64::new(2.0, 0.0) - u * 10.0 + u * u * 4.0) * e;
                (v, dv, d2v)
            }
            Family::DoubleGaussian { alpha, beta, gamma } => {
                let p = w - beta;
                let q = w + beta;
                let ep = (-(p * p) * gamma).exp();
                let eq = (-(q * q) * gamma).exp();
                let v = (ep + eq) * alpha;
                let dv = (p * ep + q * eq) * (-2.0 * gamma * alpha);
                let d2v = ((p * p * (4.0 * gamma * gamma) - 2.0 * gamma) * ep
                    + (q * q * (4.0 * gamma * gamma) - 2.0 * gamma) * eq)
                    * alpha;
                (v, dv, d2v)
            }
        }
    }
}

/// Undilated `V(x)` of the named family.
pub fn eval_potential(spec: &PotentialSpec, x: f64) -> Complex64 {
    spec.eval(x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Profile {
    Family {
        spec: PotentialSpec,
        sqrt_c: Complex64,
    },
    Constant(Complex64),
}

/// The normalized half-line operator `-d²/dx² + W(x)` on `[0, X]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorkingProblem {
    profile: Profile,
    eigen_scale: Complex64,
    radius: f64,
}

impl WorkingProblem {
    /// Constant potential `W ≡ w0` with unit eigenvalue scale.
    pub fn constant(w0: Complex64, radius: f64) -> Result<Self> {
        check_radius(radius)?;
        Ok(Self {
            profile: Profile::Constant(w0),
            eigen_scale: Complex64::new(1.0, 0.0),
            radius,
        })
    }

    /// `W(x)`.
    pub fn potential(&self, x: f64) -> Complex64 {
        self.all(x).0
    }

    /// `W'(x)`, analytic.
    pub fn derivative(&self, x: f64) -> Complex64 {
        self.all(x).1
    }

    /// `W''(x)`, analytic.
    pub fn second_derivative(&self, x: f64) -> Complex64 {
        self.all(x).2
    }

    /// `(W, W', W'')` at `x`.
    pub fn all(&self, x: f64) -> (Complex64, Complex64, Complex64) {
        match self.profile {
            Profile::Constant(w) => (w, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
            Profile::Family { spec, sqrt_c } => match spec.family {
                Family::HarmonicComplex => spec.profile(Complex64::new(x, 0.0)),
                _ => {
                    let c = spec.c;
                    let (v, dv, d2v) = spec.profile(sqrt_c * x);
                    (c * v, c * sqrt_c * dv, c * c * d2v)
                }
            },
        }
    }

    /// `σ` in `z = σ λ`.
    pub fn eigen_scale(&self) -> Complex64 {
        self.eigen_scale
    }

    /// Truncation radius `X`.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Copy with a different truncation radius.
    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        check_radius(radius)?;
        Ok(Self { radius, ..*self })
    }

    /// The potential family, when the problem came from one.
    pub fn spec(&self) -> Option<&PotentialSpec> {
        match &self.profile {
            Profile::Family { spec, .. } => Some(spec),
            Profile::Constant(_) => None,
        }
    }

    /// `z = σ λ`.
    pub fn working_eigenvalue(&self, lambda: Complex64) -> Complex64 {
        self.eigen_scale * lambda
    }

    /// `λ = z / σ`.
    pub fn physical_eigenvalue(&self, z: Complex64) -> Complex64 {
        z / self.eigen_scale
    }
}

fn check_radius(radius: f64) -> Result<()> {
    if radius > 0.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(
            "truncation radius must be positive",
        ))
    }
}

/// Builds the working problem on `[0, radius]`, using the principal `√c`.
pub fn to_working_problem(spec: &PotentialSpec, radius: f64) -> Result<WorkingProblem> {
    spec.validate()?;
    check_radius(radius)?;
    let eigen_scale = match spec.family {
        Family::HarmonicComplex => Complex64::new(1.0, 0.0),
        _ => spec.c,
    };
    Ok(WorkingProblem {
        profile: Profile::Family {
            spec: *spec,
            sqrt_c: spec.c.sqrt(),
        },
        eigen_scale,
        radius,
    })
}

/// Decay exponent `∫ Re √(W - z)` beyond the center required by
/// [`suggested_radius`]; `e^{-40}` is below double precision relative to the peak.
pub const DECAY_EXPONENT: f64 = 40.0;

/// Smallest multiple of 0.5 (at most `cap`) by which a solution at `z` has
/// decayed by [`DECAY_EXPONENT`], counting from the first point where
/// `Im (W - z) ≥ 0`.
fn decay_radius(problem: &WorkingProblem, z: Complex64, cap: f64) -> f64 {
    let step = 1e-2;
    let mut exponent = 0.0;
    let mut started = false;
    let mut x = 0.0;
    while x < cap {
        let w = problem.potential(x) - z;
        started |= w.im >= 0.0;
        if started {
            exponent += w.sqrt().re.abs() * step;
            if exponent >= DECAY_EXPONENT {
                return ((x / 0.5).ceil() * 0.5).min(cap);
            }
        }
        x += step;
    }
    cap
}

/// Truncation radius large enough for eigenvalues up to `lambda_max`.
///
/// Gaussian families: the first `x ≥ 18` (step 0.5, at most 80) where
/// `|W(x)| ≤ 1e-5`, so the inward boundary condition is exact to that level.
/// Otherwise (harmonic, or a well too wide to flatten out) the point where
/// solutions at `lambda_max` have decayed by `e^{-40}` beyond the center,
/// capped at 25 for the harmonic and 80 for the Gaussian families.
pub fn suggested_radius(spec: &PotentialSpec, lambda_max: Complex64) -> Result<f64> {
    spec.validate()?;
    match spec.family {
        Family::HarmonicComplex => {
            let problem = to_working_problem(spec, 25.0)?;
            Ok(decay_radius(
                &problem,
                problem.working_eigenvalue(lambda_max),
                25.0,
            ))
        }
        _ => {
            let problem = to_working_problem(spec, 80.0)?;
            let mut x: f64 = 18.0;
            while x <= 80.0 {
                if problem.potential(x).norm() <= 1e-5 {
                    return Ok(x);
                }
                x += 0.5;
            }
            Ok(decay_radius(
                &problem,
                problem.working_eigenvalue(lambda_max),
                80.0,
            ))
        }
    }
}

/// `‖f - g‖ / ‖f‖` in L₂(-R, R) by adaptive quadrature (relative tolerance 1e-8).
pub fn l2_distance<F, G>(f: F, g: G, radius: f64) -> Result<f64>
where
    F: Fn(f64) -> Complex64,
    G: Fn(f64) -> Complex64,
{
    if !(radius > 0.0) {
        return Err(Error::InvalidParameter("domain radius must be positive"));
    }
    let diff = adaptive_simpson(|x| (f(x) - g(x)).norm_sqr(), -radius, radius, 1e-8)?;
    let base = adaptive_simpson(|x| f(x).norm_sqr(), -radius, radius, 1e-8)?;
    if base == 0.0 {
        return Err(Error::InvalidParameter("reference potential has zero norm"));
    }
    Ok((diff / base).sqrt())
}

/// `‖V_a - V_b‖ / ‖V_a‖` over `[-R, R]` for two undilated potentials.
pub fn potential_distance(a: &PotentialSpec, b: &PotentialSpec, radius: f64) -> Result<f64> {
    l2_distance(|x| a.eval(x), |x| b.eval(x), radius)
}
