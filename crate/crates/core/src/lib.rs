//! An involutive real-to-real Fourier transform.
//!
//! The transform takes real samples to real samples using the kernel
//! `cos(theta) - sin(theta)` with unitary normalization. Unlike the pair of
//! cosine/sine component transforms, it produces a *single* real array, and
//! it is its own inverse: applying it twice returns the input. It is also
//! orthogonal (inner-product preserving), symmetric, and commutes with the
//! modular parity operator `n -> (N - n) mod N`.
//!
//! The crate provides:
//!
//! - [`RealArray`] / [`ParityPair`]: n-D sample containers, the parity
//!   operator, even/odd decomposition, inner products and norms;
//! - [`Plan`]: precomputed transform plans with a radix-2 FFT fast path on
//!   power-of-two extents and a direct-summation path elsewhere, exposing
//!   [`Plan::rft`], [`Plan::irft`], [`Plan::components`],
//!   [`Plan::anti_components`], [`Plan::complex_dft`] and
//!   [`Plan::complex_idft`], plus the [`transform::rft_kernel_sum`]
//!   reference path;
//! - [`quad`]: trapezoid quadrature of the continuous transform on
//!   truncated grids, Hermite functions, and their eigenvalue checks;
//! - [`conv`]: circular convolution and the four-term spectral calculus
//!   relating convolution, pointwise products, and the transform;
//! - [`verify`]: a seeded, deterministic property suite with a
//!   machine-readable report.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64` via
//! `num-traits`); `*64`/`*32` aliases are exported for the common cases.
//!
//! ```
//! use rft_core::{Plan64, RealArray64};
//!
//! let plan = Plan64::new(&[4]).unwrap();
//! let x = RealArray64::from_slice(&[0.0, 1.0, 0.0, 0.0]).unwrap();
//! let g = plan.rft(&x).unwrap();
//! let expected = [0.5, -0.5, -0.5, 0.5];
//! assert!(g.data().iter().zip(&expected).all(|(a, b)| (a - b).abs() < 1e-15));
//! let back = plan.rft(&g).unwrap(); // involution: no separate inverse
//! assert!(back.data().iter().zip(x.data()).all(|(a, b)| (a - b).abs() < 1e-12));
//! ```

pub mod array;
pub mod complex;
pub mod conv;
pub mod error;
pub mod plan;
pub mod quad;
pub mod scalar;
pub mod transform;
pub mod verify;

pub use array::{Norm, ParityPair, RealArray};
pub use complex::ComplexArray;
pub use error::{Error, Result};
pub use plan::{AxisStrategy, Plan};
pub use quad::{Grid1D, SampledFunction};
pub use scalar::Scalar;

/// Double-precision aliases (the usual choice).
pub type RealArray64 = RealArray<f64>;
pub type ParityPair64 = ParityPair<f64>;
pub type ComplexArray64 = ComplexArray<f64>;
pub type Plan64 = Plan<f64>;
pub type Grid64 = Grid1D<f64>;
pub type SampledFunction64 = SampledFunction<f64>;

/// Single-precision aliases.
pub type RealArray32 = RealArray<f32>;
pub type ParityPair32 = ParityPair<f32>;
pub type ComplexArray32 = ComplexArray<f32>;
pub type Plan32 = Plan<f32>;
pub type Grid32 = Grid1D<f32>;
pub type SampledFunction32 = SampledFunction<f32>;
