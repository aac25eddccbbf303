//! The discrete real-to-real Fourier transform and its relatives.
//!
//! The transform of `x` is
//!
//! ```text
//! G[k] = (1/sqrt(N_total)) * sum_n x[n] * (cos(theta) - sin(theta)),
//! theta = 2*pi * sum_j k_j n_j / N_j
//! ```
//!
//! with unitary normalization. Written in terms of the complex DFT `X`,
//! `G = Re X + Im X`, which is how the fast path computes it: the real
//! kernel does not factor across axes, so the n-D transform runs the
//! separable complex DFT and combines real and imaginary parts at the end.
//!
//! The transform is an involution (`rft(rft(x)) = x`), orthogonal, and
//! commutes with the modular parity operator. There is no separate inverse;
//! [`Plan::irft`] is a documented alias of [`Plan::rft`].

use crate::array::{increment_index, ParityPair, RealArray};
use crate::complex::ComplexArray;
use crate::error::{Error, Result};
use crate::plan::Plan;
use crate::scalar::Scalar;

impl<T: Scalar> Plan<T> {
    fn check_shape(&self, shape: &[usize]) -> Result<()> {
        if self.shape() != shape {
            return Err(Error::ShapeMismatch {
                expected: self.shape().to_vec(),
                found: shape.to_vec(),
            });
        }
        Ok(())
    }

    /// Unitary complex DFT: `X[k] = (1/sqrt(N)) sum_n x[n] e^{-2*pi*i*k.n}`.
    pub fn complex_dft(&self, x: &ComplexArray<T>) -> Result<ComplexArray<T>> {
        self.check_shape(x.shape())?;
        let (shape, mut re, mut im) = x.clone().into_parts();
        self.apply_complex(&mut re, &mut im, false);
        Ok(ComplexArray::from_raw(shape, re, im))
    }

    /// Unitary complex inverse DFT (conjugate kernel, same normalization).
    pub fn complex_idft(&self, x: &ComplexArray<T>) -> Result<ComplexArray<T>> {
        self.check_shape(x.shape())?;
        let (shape, mut re, mut im) = x.clone().into_parts();
        self.apply_complex(&mut re, &mut im, true);
        Ok(ComplexArray::from_raw(shape, re, im))
    }

    /// The real-to-real transform with kernel `cos - sin`.
    // TODO: a dedicated cos/sin butterfly would skip the zero imaginary
    // plane on 1-D input; the complex route keeps 1-D and n-D uniform.
    pub fn rft(&self, x: &RealArray<T>) -> Result<RealArray<T>> {
        self.check_shape(x.shape())?;
        let mut re = x.data().to_vec();
        let mut im = vec![T::zero(); x.len()];
        self.apply_complex(&mut re, &mut im, false);
        let data = re.iter().zip(im.iter()).map(|(&r, &i)| r + i).collect();
        Ok(RealArray::from_raw(x.shape().to_vec(), data))
    }

    /// Alias of [`Plan::rft`]: the transform is an involution, so transform
    /// and inverse coincide.
    pub fn irft(&self, x: &RealArray<T>) -> Result<RealArray<T>> {
        self.rft(x)
    }

    /// Component transform: the pair `(F1, F2)` of cosine and negated sine
    /// sums, i.e. the real and imaginary parts of the complex DFT.
    ///
    /// Computed as the parity decomposition of [`Plan::rft`], so the output
    /// satisfies the exact [`ParityPair`] invariants: `F1` is the even part
    /// of the transform and `F2` the odd part.
    pub fn components(&self, x: &RealArray<T>) -> Result<ParityPair<T>> {
        Ok(self.rft(x)?.decompose())
    }

    /// Component anti-transform: reassembles the signal whose component
    /// transform is `p`, via `rft(p.even + p.odd)`.
    ///
    /// Pair validity (exact even/odd symmetry) is enforced by the
    /// [`ParityPair`] constructor, and that symmetry is exactly what makes
    /// this composition equal the cosine/sine reassembly sum.
    pub fn anti_components(&self, p: &ParityPair<T>) -> Result<RealArray<T>> {
        self.check_shape(p.shape())?;
        self.rft(&p.sum())
    }
}

/// Direct evaluation of the defining kernel sum, O(N_total^2).
///
/// This is the reference path: no FFT, no separability, just the sum
/// `G[k] = (1/sqrt(N)) sum_n x[n] (cos - sin)(2*pi sum_j k_j n_j / N_j)`
/// with one table entry per unique angle. The fast path is checked against
/// it, and the benchmark harness times the two on identical inputs.
pub fn rft_kernel_sum<T: Scalar>(x: &RealArray<T>) -> RealArray<T> {
    let shape = x.shape().to_vec();
    let total = x.len();
    let norm = T::of_usize(total).sqrt().recip();
    let data = x.data();

    if shape.len() == 1 {
        let n = shape[0];
        let kernel = kernel_table::<T>(n);
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = T::zero();
            let mut t = 0usize;
            for &v in data {
                acc += v * kernel[t];
                t += k;
                if t >= n {
                    t -= n;
                }
            }
            out.push(acc * norm);
        }
        return RealArray::from_raw(shape, out);
    }

    // All angles are multiples of 2*pi/lcm(N_j); one table covers them.
    let l = shape.iter().copied().fold(1usize, lcm);
    let kernel = kernel_table::<T>(l);
    let weights: Vec<usize> = shape.iter().map(|&n| l / n).collect();
    let rank = shape.len();

    let mut out = Vec::with_capacity(total);
    let mut k_index = vec![0usize; rank];
    for _ in 0..total {
        // Per-axis phase steps for this output index.
        let steps: Vec<usize> = k_index
            .iter()
            .zip(weights.iter())
            .map(|(&k, &w)| (k * w) % l)
            .collect();
        let mut acc = T::zero();
        let mut n_index = vec![0usize; rank];
        let mut contrib = vec![0usize; rank];
        for &v in data {
            let t = contrib.iter().fold(0usize, |a, &c| {
                let s = a + c;
                if s >= l {
                    s - l
                } else {
                    s
                }
            });
            acc += v * kernel[t];
            for d in (0..rank).rev() {
                n_index[d] += 1;
                if n_index[d] < shape[d] {
                    contrib[d] += steps[d];
                    if contrib[d] >= l {
                        contrib[d] -= l;
                    }
                    break;
                }
                n_index[d] = 0;
                contrib[d] = 0;
            }
        }
        out.push(acc * norm);
        increment_index(&mut k_index, &shape);
    }
    RealArray::from_raw(shape, out)
}

/// `cos(2*pi*t/n) - sin(2*pi*t/n)` for `t = 0..n`.
pub(crate) fn kernel_table<T: Scalar>(n: usize) -> Vec<T> {
    (0..n)
        .map(|t| {
            let (s, c) = (core::f64::consts::TAU * t as f64 / n as f64).sin_cos();
            T::of(c - s)
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::Norm;

    fn arr(values: &[f64]) -> RealArray<f64> {
        RealArray::from_slice(values).unwrap()
    }

    fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b.iter())
            .fold(0.0f64, |m, (&x, &y)| m.max((x - y).abs()))
    }

    #[test]
    fn complex_dft_of_delta_and_constant() {
        let plan = Plan::<f64>::new(&[4]).unwrap();

        let delta = ComplexArray::from_real(&arr(&[1.0, 0.0, 0.0, 0.0]));
        let x = plan.complex_dft(&delta).unwrap();
        assert!(x.re().iter().all(|&v| (v - 0.5).abs() < 1e-15));
        assert!(x.im().iter().all(|&v| v.abs() < 1e-15));

        let ones = ComplexArray::from_real(&arr(&[1.0, 1.0, 1.0, 1.0]));
        let x = plan.complex_dft(&ones).unwrap();
        assert!((x.re()[0] - 2.0).abs() < 1e-15);
        assert!(max_abs_diff(&x.re()[1..], &[0.0, 0.0, 0.0]) < 1e-15);
        assert!(x.im().iter().all(|&v| v.abs() < 1e-15));
    }

    #[test]
    fn complex_dft_of_shifted_delta() {
        // Frozen against the O(N^2) sum: X = [(1/2,0),(0,-1/2),(-1/2,0),(0,1/2)].
        let plan = Plan::<f64>::new(&[4]).unwrap();
        let x = plan
            .complex_dft(&ComplexArray::from_real(&arr(&[0.0, 1.0, 0.0, 0.0])))
            .unwrap();
        assert!(max_abs_diff(x.re(), &[0.5, 0.0, -0.5, 0.0]) < 1e-15);
        assert!(max_abs_diff(x.im(), &[0.0, -0.5, 0.0, 0.5]) < 1e-15);
    }

    #[test]
    fn complex_idft_inverts_dft() {
        let plan = Plan::<f64>::new(&[4]).unwrap();
        let x = ComplexArray::from_parts(
            vec![4],
            vec![0.3, -1.2, 4.5, 0.0],
            vec![1.0, 0.25, -3.0, 2.0],
        )
        .unwrap();
        let back = plan.complex_idft(&plan.complex_dft(&x).unwrap()).unwrap();
        assert!(back.max_abs_diff(&x) < 1e-12 * x.max_abs());

        // Flat half-amplitude spectrum comes back as the delta.
        let flat = ComplexArray::from_parts(vec![4], vec![0.5; 4], vec![0.0; 4]).unwrap();
        let delta = plan.complex_idft(&flat).unwrap();
        assert!((delta.re()[0] - 1.0).abs() < 1e-15);
        assert!(max_abs_diff(&delta.re()[1..], &[0.0; 3]) < 1e-15);

        // And the frozen N=4 spectrum inverts to the shifted delta.
        let spec = ComplexArray::from_parts(
            vec![4],
            vec![0.5, 0.0, -0.5, 0.0],
            vec![0.0, -0.5, 0.0, 0.5],
        )
        .unwrap();
        let back = plan.complex_idft(&spec).unwrap();
        assert!(max_abs_diff(back.re(), &[0.0, 1.0, 0.0, 0.0]) < 1e-15);
        assert!(back.im().iter().all(|&v| v.abs() < 1e-15));
    }

    #[test]
    fn rft_of_deltas_matches_kernel_values() {
        let plan = Plan::<f64>::new(&[4]).unwrap();
        let g = plan.rft(&arr(&[1.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(max_abs_diff(g.data(), &[0.5, 0.5, 0.5, 0.5]) < 1e-15);

        let g = plan.rft(&arr(&[0.0, 1.0, 0.0, 0.0])).unwrap();
        assert!(max_abs_diff(g.data(), &[0.5, -0.5, -0.5, 0.5]) < 1e-15);
    }

    #[test]
    fn rft_is_an_involution() {
        let plan = Plan::<f64>::new(&[4]).unwrap();
        let x = arr(&[1.0, 2.0, 3.0, 4.0]);
        let twice = plan.rft(&plan.rft(&x).unwrap()).unwrap();
        assert!(max_abs_diff(twice.data(), x.data()) < 1e-12);

        let g = plan.irft(&arr(&[0.5, -0.5, -0.5, 0.5])).unwrap();
        assert!(max_abs_diff(g.data(), &[0.0, 1.0, 0.0, 0.0]) < 1e-15);
    }

    #[test]
    fn even_input_reduces_to_real_part_of_dft() {
        let plan = Plan::<f64>::new(&[8]).unwrap();
        let e = arr(&[3.0, 1.0, -0.5, 2.0, 7.0, 2.0, -0.5, 1.0]);
        assert!(e.is_parity_even());
        let g = plan.rft(&e).unwrap();
        let x = plan.complex_dft(&ComplexArray::from_real(&e)).unwrap();
        assert!(max_abs_diff(g.data(), x.re()) < 1e-13);
        assert!(x.im().iter().all(|&v| v.abs() < 1e-13));
    }

    #[test]
    fn components_split_the_transform() {
        let plan = Plan::<f64>::new(&[4]).unwrap();
        let pair = plan.components(&arr(&[0.0, 1.0, 0.0, 0.0])).unwrap();
        assert!(max_abs_diff(pair.even().data(), &[0.5, 0.0, -0.5, 0.0]) < 1e-15);
        assert!(max_abs_diff(pair.odd().data(), &[0.0, -0.5, 0.0, 0.5]) < 1e-15);

        // Even input: odd component vanishes.
        let e = arr(&[2.0, 1.0, 0.0, 1.0]);
        let pair = plan.components(&e).unwrap();
        assert!(pair.odd().norm(Norm::Inf) < 1e-15);

        // Odd input: even component vanishes.
        let o = arr(&[0.0, 1.0, 0.0, -1.0]);
        let pair = plan.components(&o).unwrap();
        assert!(pair.even().norm(Norm::Inf) < 1e-15);
    }

    #[test]
    fn anti_components_inverts_components() {
        let plan = Plan::<f64>::new(&[4]).unwrap();

        let even = arr(&[0.5, 0.0, -0.5, 0.0]);
        let odd = arr(&[0.0, -0.5, 0.0, 0.5]);
        let p = ParityPair::new(even, odd).unwrap();
        let back = plan.anti_components(&p).unwrap();
        assert!(max_abs_diff(back.data(), &[0.0, 1.0, 0.0, 0.0]) < 1e-15);

        let zero = RealArray::<f64>::zeros(vec![4]).unwrap();
        let p = ParityPair::new(zero.clone(), zero).unwrap();
        assert!(plan.anti_components(&p).unwrap().norm(Norm::Inf) == 0.0);

        let x = arr(&[0.4, -1.9, 2.5, 0.3]);
        let roundtrip = plan.anti_components(&plan.components(&x).unwrap()).unwrap();
        assert!(max_abs_diff(roundtrip.data(), x.data()) < 1e-12);

        // Transform of an even signal is even; feeding (transform, 0) back
        // recovers the signal.
        let e = arr(&[2.0, 1.0, 0.0, 1.0]);
        let te = plan.rft(&e).unwrap();
        let zero = RealArray::<f64>::zeros(vec![4]).unwrap();
        let p = ParityPair::new(te, zero).unwrap();
        let back = plan.anti_components(&p).unwrap();
        assert!(max_abs_diff(back.data(), e.data()) < 1e-12);
    }

    #[test]
    fn kernel_sum_agrees_with_plan_paths() {
        // Power of two: FFT path vs direct sum.
        let plan = Plan::<f64>::new(&[16]).unwrap();
        let x = RealArray::from_vec(
            vec![16],
            (0..16).map(|i| ((i * 7 + 3) % 5) as f64 - 2.0).collect(),
        )
        .unwrap();
        let fast = plan.rft(&x).unwrap();
        let naive = rft_kernel_sum(&x);
        assert!(max_abs_diff(fast.data(), naive.data()) < 1e-13);

        // Non power of two goes through the per-axis naive engine.
        let plan = Plan::<f64>::new(&[12]).unwrap();
        let x = RealArray::from_vec(vec![12], (0..12).map(|i| (i as f64 * 0.7).sin()).collect())
            .unwrap();
        let a = plan.rft(&x).unwrap();
        let b = rft_kernel_sum(&x);
        assert!(max_abs_diff(a.data(), b.data()) < 1e-13);

        // Mixed 2-D shape.
        let x = RealArray::from_vec(
            vec![4, 6],
            (0..24).map(|i| (i as f64 * 0.31).cos()).collect(),
        )
        .unwrap();
        let plan = Plan::<f64>::new(&[4, 6]).unwrap();
        let a = plan.rft(&x).unwrap();
        let b = rft_kernel_sum(&x);
        assert!(max_abs_diff(a.data(), b.data()) < 1e-13);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let plan = Plan::<f64>::new(&[4]).unwrap();
        assert!(matches!(
            plan.rft(&arr(&[1.0, 2.0])),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn involution_holds_for_f32() {
        let plan = Plan::<f32>::new(&[8]).unwrap();
        let x = RealArray::<f32>::from_slice(&[0.5, -1.0, 2.0, 0.0, 3.5, -0.25, 1.0, 4.0]).unwrap();
        let twice = plan.rft(&plan.rft(&x).unwrap()).unwrap();
        let err = twice
            .data()
            .iter()
            .zip(x.data())
            .fold(0.0f32, |m, (&a, &b)| m.max((a - b).abs()));
        assert!(err < 1e-5);
    }
}
