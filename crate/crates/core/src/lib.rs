//! Eigenfunctions of one-dimensional non-self-adjoint Schrödinger operators
//! and their global JWKB approximations.
//!
//! The crate covers the whole numerical pipeline for even potentials on the
//! half-line `[0, X]`:
//!
//! * [`potentials`]: the complex potential families, their dilation to a
//!   working problem `-d²/dx² + W(x)` and an L₂ potential distance.
//! * [`shooting`]: eigenvalues and normalized eigenfunctions by bidirectional
//!   Runge–Kutta integration, log-derivative matching and a complex secant
//!   iteration, with seeding by index marching or continuation in `arg c`.
//! * [`jwkb`]: mode centers `(a, η)`, the phase integral with continuous
//!   branch tracking, the leading-order JWKB mode and its residual.
//! * [`modefit`]: log-derivative cut-offs, Gram systems, least-squares
//!   coefficients and the relative error `Δ`, minimized over cut-offs.
//!
//! The crate is `no_std` and only needs `alloc`; all IO lives in the `jwkb`
//! companion crate.
#![no_std]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod interp;
pub mod jwkb;
pub mod linalg;
pub mod minimize;
pub mod modefit;
pub mod ode;
pub mod potentials;
pub mod quad;
pub mod shooting;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Convenience constructor for a complex number.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
