//! Precomputed transform plans.
//!
//! A [`Plan`] fixes the shape, the per-axis strategy (radix-2 FFT on
//! power-of-two extents, direct summation otherwise), the twiddle tables,
//! the unitary normalization, and the summation order. Plans are immutable
//! after construction and safe to share across threads; transform calls
//! against the same plan are pure and bit-reproducible.

use crate::array::{strides_of, validate_shape};
use crate::error::Result;
use crate::scalar::Scalar;

/// How a single axis is transformed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisStrategy {
    /// Iterative radix-2 FFT with bit-reversal permutation, O(N log N).
    Fast,
    /// Direct summation, O(N^2) per axis.
    Naive,
}

#[derive(Debug, Clone)]
struct AxisTables<T> {
    len: usize,
    strategy: AxisStrategy,
    /// cos(2*pi*t/len); N/2 entries for the fast path, N for the naive path.
    cos: Vec<T>,
    /// sin(2*pi*t/len), same indexing as `cos`.
    sin: Vec<T>,
    /// Bit-reversal permutation; empty for the naive path.
    bitrev: Vec<usize>,
}

impl<T: Scalar> AxisTables<T> {
    fn new(len: usize) -> Self {
        // Angles are evaluated directly per unique angle; no recurrence
        // accumulation, so tables carry no drift.
        let angle = |t: usize| core::f64::consts::TAU * (t as f64) / (len as f64);
        if len.is_power_of_two() {
            let half = (len / 2).max(1);
            let mut cos = Vec::with_capacity(half);
            let mut sin = Vec::with_capacity(half);
            for t in 0..half {
                let (s, c) = angle(t).sin_cos();
                cos.push(T::of(c));
                sin.push(T::of(s));
            }
            let bits = len.trailing_zeros();
            let bitrev = (0..len)
                .map(|i| {
                    if bits == 0 {
                        0
                    } else {
                        i.reverse_bits() >> (usize::BITS - bits)
                    }
                })
                .collect();
            Self {
                len,
                strategy: AxisStrategy::Fast,
                cos,
                sin,
                bitrev,
            }
        } else {
            let mut cos = Vec::with_capacity(len);
            let mut sin = Vec::with_capacity(len);
            for t in 0..len {
                let (s, c) = angle(t).sin_cos();
                cos.push(T::of(c));
                sin.push(T::of(s));
            }
            Self {
                len,
                strategy: AxisStrategy::Naive,
                cos,
                sin,
                bitrev: Vec::new(),
            }
        }
    }
}

/// Immutable precomputed transform descriptor.
#[derive(Debug, Clone)]
pub struct Plan<T> {
    shape: Vec<usize>,
    total: usize,
    axes: Vec<AxisTables<T>>,
    strides: Vec<usize>,
    /// Unitary normalization, product of the per-axis factors 1/sqrt(N_j).
    norm: T,
}

impl<T: Scalar> Plan<T> {
    /// Builds a plan for the given shape.
    pub fn new(shape: &[usize]) -> Result<Self> {
        let total = validate_shape(shape)?;
        let axes = shape.iter().map(|&n| AxisTables::new(n)).collect();
        Ok(Self {
            shape: shape.to_vec(),
            total,
            axes,
            strides: strides_of(shape),
            norm: T::of_usize(total).sqrt().recip(),
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// Total element count.
    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Strategy chosen for one axis.
    pub fn axis_strategy(&self, axis: usize) -> AxisStrategy {
        self.axes[axis].strategy
    }

    /// True when every axis runs the O(N log N) path.
    pub fn is_fast(&self) -> bool {
        self.axes.iter().all(|a| a.strategy == AxisStrategy::Fast)
    }

    /// Separable complex transform over all axes, in place, including the
    /// unitary normalization. `inverse` selects the conjugate kernel.
    pub(crate) fn apply_complex(&self, re: &mut [T], im: &mut [T], inverse: bool) {
        debug_assert_eq!(re.len(), self.total);
        debug_assert_eq!(im.len(), self.total);

        let max_len = self.shape.iter().copied().max().unwrap_or(1);
        let mut line_re = vec![T::zero(); max_len];
        let mut line_im = vec![T::zero(); max_len];
        let mut out_re = vec![T::zero(); max_len];
        let mut out_im = vec![T::zero(); max_len];

        for (d, axis) in self.axes.iter().enumerate() {
            let n = axis.len;
            if n == 1 {
                continue;
            }
            let stride = self.strides[d];
            let blocks = self.total / (n * stride);
            for block in 0..blocks {
                for offset in 0..stride {
                    let base = block * n * stride + offset;
                    for t in 0..n {
                        line_re[t] = re[base + t * stride];
                        line_im[t] = im[base + t * stride];
                    }
                    match axis.strategy {
                        AxisStrategy::Fast => {
                            fft_pow2(&mut line_re[..n], &mut line_im[..n], axis, inverse);
                        }
                        AxisStrategy::Naive => {
                            dft_naive(
                                &line_re[..n],
                                &line_im[..n],
                                &mut out_re[..n],
                                &mut out_im[..n],
                                axis,
                                inverse,
                            );
                            line_re[..n].copy_from_slice(&out_re[..n]);
                            line_im[..n].copy_from_slice(&out_im[..n]);
                        }
                    }
                    for t in 0..n {
                        re[base + t * stride] = line_re[t];
                        im[base + t * stride] = line_im[t];
                    }
                }
            }
        }

        for v in re.iter_mut() {
            *v *= self.norm;
        }
        for v in im.iter_mut() {
            *v *= self.norm;
        }
    }
}

/// Iterative radix-2 decimation-in-time FFT, unnormalized.
fn fft_pow2<T: Scalar>(re: &mut [T], im: &mut [T], axis: &AxisTables<T>, inverse: bool) {
    let n = axis.len;
    for i in 0..n {
        let j = axis.bitrev[i];
        if j > i {
            re.swap(i, j);
            im.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let table_stride = n / len;
        let mut start = 0;
        while start < n {
            for j in 0..half {
                // Twiddle e^{-2*pi*i*j/len} forward, conjugate inverse.
                let idx = j * table_stride;
                let wc = axis.cos[idx];
                let ws = if inverse {
                    axis.sin[idx]
                } else {
                    -axis.sin[idx]
                };
                let a = start + j;
                let b = a + half;
                let xr = re[b];
                let xi = im[b];
                let tr = xr * wc - xi * ws;
                let ti = xr * ws + xi * wc;
                re[b] = re[a] - tr;
                im[b] = im[a] - ti;
                re[a] += tr;
                im[a] += ti;
            }
            start += len;
        }
        len <<= 1;
    }
}

/// Direct O(N^2) transform of one line, unnormalized.
fn dft_naive<T: Scalar>(
    re: &[T],
    im: &[T],
    out_re: &mut [T],
    out_im: &mut [T],
    axis: &AxisTables<T>,
    inverse: bool,
) {
    let n = axis.len;
    for k in 0..n {
        let mut acc_re = T::zero();
        let mut acc_im = T::zero();
        let mut t = 0usize; // (k*n_i) mod n, updated incrementally
        for i in 0..n {
            let wc = axis.cos[t];
            let ws = if inverse { axis.sin[t] } else { -axis.sin[t] };
            acc_re = acc_re + re[i] * wc - im[i] * ws;
            acc_im = acc_im + re[i] * ws + im[i] * wc;
            t += k;
            if t >= n {
                t -= n;
            }
        }
        out_re[k] = acc_re;
        out_im[k] = acc_im;
    }
}
