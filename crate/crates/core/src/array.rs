//! Real sample arrays, the modular parity operator, and the even/odd
//! decomposition calculus.
//!
//! [`RealArray`] is an n-dimensional, row-major array of finite real samples.
//! The discrete parity operator reflects indices modulo each extent,
//! `n -> (N - n) mod N`, which is the unique reflection that commutes with
//! the discrete transform; index 0 (and N/2 for even N) are fixed points.
//! [`ParityPair`] carries an exactly-even and an exactly-odd array of the
//! same shape.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which vector norm to take over the flattened data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    /// Sum of absolute values.
    One,
    /// Euclidean norm.
    Two,
    /// Maximum absolute value.
    Inf,
}

pub(crate) fn validate_shape(shape: &[usize]) -> Result<usize> {
    if shape.is_empty() {
        return Err(Error::InvalidShape("rank must be at least 1".into()));
    }
    let mut total = 1usize;
    for &n in shape {
        if n == 0 {
            return Err(Error::InvalidShape("zero extent".into()));
        }
        total = total
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidShape("element count overflows usize".into()))?;
    }
    Ok(total)
}

/// Row-major strides for a shape.
pub(crate) fn strides_of(shape: &[usize]) -> Vec<usize> {
    let mut strides = vec![1usize; shape.len()];
    for d in (0..shape.len().saturating_sub(1)).rev() {
        strides[d] = strides[d + 1] * shape[d + 1];
    }
    strides
}

/// Advances a row-major multi-index by one; returns false on wrap-around.
pub(crate) fn increment_index(index: &mut [usize], shape: &[usize]) -> bool {
    for d in (0..shape.len()).rev() {
        index[d] += 1;
        if index[d] < shape[d] {
            return true;
        }
        index[d] = 0;
    }
    false
}

/// n-dimensional real-valued sample array, row-major, with explicit shape.
///
/// Construction validates that every element is finite and that the data
/// length matches the shape, so a value of this type always satisfies both
/// invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct RealArray<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> RealArray<T> {
    /// Builds an array from a shape and row-major data.
    pub fn from_vec(shape: Vec<usize>, data: Vec<T>) -> Result<Self> {
        let total = validate_shape(&shape)?;
        if data.len() != total {
            return Err(Error::LengthMismatch {
                expected: total,
                found: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { shape, data })
    }

    /// Builds a 1-D array from a slice.
    pub fn from_slice(values: &[T]) -> Result<Self> {
        Self::from_vec(vec![values.len()], values.to_vec())
    }

    /// All-zero array of the given shape.
    pub fn zeros(shape: Vec<usize>) -> Result<Self> {
        let total = validate_shape(&shape)?;
        Ok(Self {
            shape,
            data: vec![T::zero(); total],
        })
    }

    /// Internal constructor for outputs whose invariants hold by construction.
    pub(crate) fn from_raw(shape: Vec<usize>, data: Vec<T>) -> Self {
        debug_assert_eq!(shape.iter().product::<usize>(), data.len());
        Self { shape, data }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    /// Total number of elements.
    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false // shapes have no zero extents
    }

    /// Row-major flattened data.
    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// Flat index of the modular reflection of the element at `flat`.
    fn reflected_flat(&self, strides: &[usize], index: &[usize]) -> usize {
        let mut out = 0;
        for (d, (&n, &i)) in self.shape.iter().zip(index).enumerate() {
            let r = if i == 0 { 0 } else { n - i };
            out += r * strides[d];
        }
        out
    }

    /// Discrete parity operator: `out[n] = x[(N - n) mod N]` per axis.
    ///
    /// An exact index permutation, hence an exact involution.
    pub fn parity_reversed(&self) -> Self {
        let strides = strides_of(&self.shape);
        let mut out = vec![T::zero(); self.data.len()];
        let mut index = vec![0usize; self.rank()];
        for i in 0..self.data.len() {
            out[self.reflected_flat(&strides, &index)] = self.data[i];
            increment_index(&mut index, &self.shape);
        }
        Self::from_raw(self.shape.clone(), out)
    }

    /// True when the array equals its parity reversal elementwise.
    ///
    /// The comparison is exact (`==`), not tolerance-based: evenness is
    /// structural for stored arrays.
    pub fn is_parity_even(&self) -> bool {
        let strides = strides_of(&self.shape);
        let mut index = vec![0usize; self.rank()];
        for i in 0..self.data.len() {
            if self.data[i] != self.data[self.reflected_flat(&strides, &index)] {
                return false;
            }
            increment_index(&mut index, &self.shape);
        }
        true
    }

    /// True when the array equals the negation of its parity reversal.
    pub fn is_parity_odd(&self) -> bool {
        let strides = strides_of(&self.shape);
        let mut index = vec![0usize; self.rank()];
        for i in 0..self.data.len() {
            if self.data[i] != -self.data[self.reflected_flat(&strides, &index)] {
                return false;
            }
            increment_index(&mut index, &self.shape);
        }
        true
    }

    /// Splits into even and odd parts: `((x + Px)/2, (x - Px)/2)`.
    ///
    /// The output satisfies the [`ParityPair`] symmetry invariants exactly:
    /// each mirrored pair of entries is produced by the same two floating
    /// point operations, so the even part equals its reflection bitwise and
    /// the odd part its negated reflection.
    pub fn decompose(&self) -> ParityPair<T> {
        let reversed = self.parity_reversed();
        let half = T::of(0.5);
        let even: Vec<T> = self
            .data
            .iter()
            .zip(reversed.data.iter())
            .map(|(&a, &b)| (a + b) * half)
            .collect();
        let odd: Vec<T> = self
            .data
            .iter()
            .zip(reversed.data.iter())
            .map(|(&a, &b)| (a - b) * half)
            .collect();
        ParityPair {
            even: Self::from_raw(self.shape.clone(), even),
            odd: Self::from_raw(self.shape.clone(), odd),
        }
    }

    /// Inner product `sum_i x[i] * y[i]` in fixed flat order.
    pub fn inner(&self, other: &Self) -> Result<T> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(other.data.iter())
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b))
    }

    /// l1 / l2 / l-infinity norm of the flattened data, in fixed flat order.
    pub fn norm(&self, which: Norm) -> T {
        match which {
            Norm::One => self.data.iter().fold(T::zero(), |acc, &v| acc + v.abs()),
            Norm::Two => self
                .data
                .iter()
                .fold(T::zero(), |acc, &v| acc + v * v)
                .sqrt(),
            Norm::Inf => self.data.iter().fold(T::zero(), |acc, &v| acc.max(v.abs())),
        }
    }

    /// Elementwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_map(other, |a, b| a + b)
    }

    /// Elementwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_map(other, |a, b| a - b)
    }

    /// Elementwise (pointwise) product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_map(other, |a, b| a * b)
    }

    /// Multiplies every element by a scalar.
    pub fn scaled(&self, factor: T) -> Self {
        Self::from_raw(
            self.shape.clone(),
            self.data.iter().map(|&v| v * factor).collect(),
        )
    }

    pub(crate) fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                expected: self.shape.clone(),
                found: other.shape.clone(),
            });
        }
        Ok(())
    }

    fn zip_map(&self, other: &Self, f: impl Fn(T, T) -> T) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self::from_raw(self.shape.clone(), data))
    }
}

/// Pair of an exactly parity-even and an exactly parity-odd array of the
/// same shape.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityPair<T> {
    even: RealArray<T>,
    odd: RealArray<T>,
}

impl<T: Scalar> ParityPair<T> {
    /// Builds a pair, checking shapes and the exact symmetry invariants.
    pub fn new(even: RealArray<T>, odd: RealArray<T>) -> Result<Self> {
        even.check_same_shape(&odd)?;
        if !even.is_parity_even() {
            return Err(Error::ParityViolation("even component is not even"));
        }
        if !odd.is_parity_odd() {
            return Err(Error::ParityViolation("odd component is not odd"));
        }
        Ok(Self { even, odd })
    }

    pub fn even(&self) -> &RealArray<T> {
        &self.even
    }

    pub fn odd(&self) -> &RealArray<T> {
        &self.odd
    }

    pub fn shape(&self) -> &[usize] {
        self.even.shape()
    }

    /// Elementwise sum of the two components.
    ///
    /// Inverse of [`RealArray::decompose`] up to one rounding per element.
    pub fn sum(&self) -> RealArray<T> {
        RealArray::from_raw(
            self.even.shape.clone(),
            self.even
                .data
                .iter()
                .zip(self.odd.data.iter())
                .map(|(&e, &o)| e + o)
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(values: &[f64]) -> RealArray<f64> {
        RealArray::from_slice(values).unwrap()
    }

    #[test]
    fn rejects_non_finite_and_bad_lengths() {
        assert!(matches!(
            RealArray::from_vec(vec![2], vec![1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1 })
        ));
        assert!(matches!(
            RealArray::from_vec(vec![3], vec![1.0, 2.0]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(RealArray::<f64>::zeros(vec![]).is_err());
        assert!(RealArray::<f64>::zeros(vec![4, 0]).is_err());
    }

    #[test]
    fn parity_reverse_fixes_index_zero() {
        let x = arr(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(x.parity_reversed().data(), &[1.0, 4.0, 3.0, 2.0]);

        let c = arr(&[7.0, 7.0, 7.0, 7.0]);
        assert_eq!(c.parity_reversed().data(), c.data());
    }

    #[test]
    fn parity_reverse_is_involutive() {
        let x = RealArray::from_vec(vec![2, 3], vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(x.parity_reversed().parity_reversed(), x);
    }

    #[test]
    fn parity_reverse_multi_axis() {
        // 2x3: reflection maps (i, j) -> ((2 - i) % 2, (3 - j) % 3).
        let x = RealArray::from_vec(vec![2, 3], vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let p = x.parity_reversed();
        assert_eq!(p.data(), &[0.0, 2.0, 1.0, 3.0, 5.0, 4.0]);
    }

    #[test]
    fn decompose_matches_hand_values() {
        let x = arr(&[1.0, 2.0, 3.0, 4.0]);
        let pair = x.decompose();
        assert_eq!(pair.even().data(), &[1.0, 3.0, 3.0, 3.0]);
        assert_eq!(pair.odd().data(), &[0.0, -1.0, 0.0, 1.0]);
        assert_eq!(pair.sum().data(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn decompose_of_even_input_has_zero_odd_part() {
        let e = arr(&[2.0, 1.0, 0.0, 1.0]);
        assert!(e.is_parity_even());
        let pair = e.decompose();
        assert_eq!(pair.even().data(), e.data());
        assert!(pair.odd().data().iter().all(|&v| v == 0.0));

        let zero = RealArray::<f64>::zeros(vec![4]).unwrap();
        let zpair = zero.decompose();
        assert!(zpair.even().data().iter().all(|&v| v == 0.0));
        assert!(zpair.odd().data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn decompose_output_is_exactly_symmetric() {
        // Irregular values; the symmetry must still hold bitwise.
        let x = arr(&[0.1, -2.7, 5.73101, 1e-9, 42.0]);
        let pair = x.decompose();
        assert!(pair.even().is_parity_even());
        assert!(pair.odd().is_parity_odd());
    }

    #[test]
    fn pair_constructor_enforces_invariants() {
        let even = arr(&[2.0, 1.0, 0.0, 1.0]);
        let odd = arr(&[0.0, -1.0, 0.0, 1.0]);
        assert!(ParityPair::new(even.clone(), odd.clone()).is_ok());

        let not_even = arr(&[1.0, 2.0, 3.0, 4.0]);
        assert!(matches!(
            ParityPair::new(not_even, odd),
            Err(Error::ParityViolation(_))
        ));
        let not_odd = arr(&[1.0, 1.0, 1.0, 1.0]);
        assert!(matches!(
            ParityPair::new(even, not_odd),
            Err(Error::ParityViolation(_))
        ));
    }

    #[test]
    fn pair_sum_identities() {
        let e = arr(&[2.0, 1.0, 5.0, 1.0]);
        let zero = RealArray::<f64>::zeros(vec![4]).unwrap();
        let pair = ParityPair::new(e.clone(), zero.clone()).unwrap();
        assert_eq!(pair.sum(), e);

        let o = arr(&[0.0, -3.0, 0.0, 3.0]);
        let pair = ParityPair::new(zero, o.clone()).unwrap();
        assert_eq!(pair.sum(), o);
    }

    #[test]
    fn inner_and_norms() {
        assert_eq!(arr(&[1.0, 0.0]).inner(&arr(&[0.0, 1.0])).unwrap(), 0.0);
        assert_eq!(arr(&[1.0, 2.0]).inner(&arr(&[3.0, 4.0])).unwrap(), 11.0);

        let x = arr(&[3.0, 4.0]);
        assert_eq!(x.norm(Norm::Two), 5.0);
        assert_eq!(x.inner(&x).unwrap(), 25.0);

        let y = arr(&[-1.0, 2.0, -3.0]);
        assert_eq!(y.norm(Norm::One), 6.0);
        assert_eq!(y.norm(Norm::Inf), 3.0);

        assert!(matches!(
            arr(&[1.0]).inner(&arr(&[1.0, 2.0])),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn works_with_f32() {
        let x = RealArray::<f32>::from_slice(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let pair = x.decompose();
        assert_eq!(pair.even().data(), &[1.0f32, 3.0, 3.0, 3.0]);
        assert_eq!(pair.sum().data(), x.data());
    }
}
