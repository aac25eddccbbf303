//! Split-storage complex array used by the fast transform path and the
//! complex-DFT comparison operations.

use crate::array::{validate_shape, RealArray};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// n-dimensional complex array stored as separate real and imaginary
/// row-major planes.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexArray<T> {
    shape: Vec<usize>,
    re: Vec<T>,
    im: Vec<T>,
}

impl<T: Scalar> ComplexArray<T> {
    /// Builds a complex array from real and imaginary planes.
    pub fn from_parts(shape: Vec<usize>, re: Vec<T>, im: Vec<T>) -> Result<Self> {
        let total = validate_shape(&shape)?;
        if re.len() != total || im.len() != total {
            return Err(Error::LengthMismatch {
                expected: total,
                found: re.len().max(im.len()),
            });
        }
        if let Some(index) = re
            .iter()
            .zip(im.iter())
            .position(|(a, b)| !a.is_finite() || !b.is_finite())
        {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { shape, re, im })
    }

    /// Embeds a real array as a complex one with zero imaginary part.
    pub fn from_real(x: &RealArray<T>) -> Self {
        Self {
            shape: x.shape().to_vec(),
            re: x.data().to_vec(),
            im: vec![T::zero(); x.len()],
        }
    }

    pub(crate) fn from_raw(shape: Vec<usize>, re: Vec<T>, im: Vec<T>) -> Self {
        debug_assert_eq!(re.len(), im.len());
        Self { shape, re, im }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn re(&self) -> &[T] {
        &self.re
    }

    pub fn im(&self) -> &[T] {
        &self.im
    }

    pub(crate) fn into_parts(self) -> (Vec<usize>, Vec<T>, Vec<T>) {
        (self.shape, self.re, self.im)
    }

    /// Real part as a [`RealArray`].
    pub fn real(&self) -> RealArray<T> {
        RealArray::from_raw(self.shape.clone(), self.re.clone())
    }

    /// Imaginary part as a [`RealArray`].
    pub fn imag(&self) -> RealArray<T> {
        RealArray::from_raw(self.shape.clone(), self.im.clone())
    }

    /// Pointwise complex product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                expected: self.shape.clone(),
                found: other.shape.clone(),
            });
        }
        let mut re = Vec::with_capacity(self.len());
        let mut im = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            re.push(self.re[i] * other.re[i] - self.im[i] * other.im[i]);
            im.push(self.re[i] * other.im[i] + self.im[i] * other.re[i]);
        }
        Ok(Self::from_raw(self.shape.clone(), re, im))
    }

    /// Multiplies every element by a real scalar.
    pub fn scaled(&self, factor: T) -> Self {
        Self::from_raw(
            self.shape.clone(),
            self.re.iter().map(|&v| v * factor).collect(),
            self.im.iter().map(|&v| v * factor).collect(),
        )
    }

    /// Largest complex-component magnitude, `max_i max(|re_i|, |im_i|)`.
    pub fn max_abs(&self) -> T {
        self.re
            .iter()
            .zip(self.im.iter())
            .fold(T::zero(), |acc, (&r, &i)| acc.max(r.abs()).max(i.abs()))
    }

    /// Largest componentwise difference against another array.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.re
            .iter()
            .zip(other.re.iter())
            .zip(self.im.iter().zip(other.im.iter()))
            .fold(T::zero(), |acc, ((&ar, &br), (&ai, &bi))| {
                acc.max((ar - br).abs()).max((ai - bi).abs())
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_real_embeds_with_zero_imaginary() {
        let x = RealArray::from_slice(&[1.0, -2.0]).unwrap();
        let z = ComplexArray::from_real(&x);
        assert_eq!(z.re(), x.data());
        assert!(z.im().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn pointwise_product() {
        let a = ComplexArray::from_parts(vec![2], vec![1.0, 0.0], vec![1.0, 2.0]).unwrap();
        let b = ComplexArray::from_parts(vec![2], vec![1.0, 3.0], vec![-1.0, 0.0]).unwrap();
        // (1+i)(1-i) = 2, (2i)(3) = 6i
        let p = a.mul(&b).unwrap();
        assert_eq!(p.re(), &[2.0, 0.0]);
        assert_eq!(p.im(), &[0.0, 6.0]);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            ComplexArray::from_parts(vec![2], vec![1.0, 2.0], vec![0.0, f64::INFINITY]),
            Err(Error::NonFinite { index: 1 })
        ));
    }
}
