//! Circular convolution and its spectral calculus.
//!
//! With the unitary transform, circular convolution and pointwise product
//! satisfy a four-term identity built from the transform and its parity
//! reversal: writing `A = rft(a)`, `B = rft(b)` and `P` for the parity
//! operator,
//!
//! ```text
//! (1/sqrt(N)) rft(a * b)  =  (A.B + A.PB + PA.B - PA.PB) / 2      (convolution)
//! rft(a . b)  =  (1/sqrt(N)) (A*B + A*PB + PA*B - PA*PB) / 2      (product)
//! ```
//!
//! where `.` is the pointwise product and `*` circular convolution. When at
//! least one operand is parity-even the cross terms cancel and the identity
//! collapses to the classical two-term form `(1/sqrt(N)) rft(a*b) = A.B`.

use crate::array::RealArray;
use crate::complex::ComplexArray;
use crate::error::{Error, Result};
use crate::plan::Plan;
use crate::scalar::Scalar;

/// Circular convolution by direct summation, `O(N_total^2)`.
///
/// `out[n] = sum_m a[(n - m) mod N] * b[m]` per axis, in fixed flat order
/// of `m`. This is the reference the spectral paths are checked against.
pub fn conv_direct<T: Scalar>(a: &RealArray<T>, b: &RealArray<T>) -> Result<RealArray<T>> {
    a.check_same_shape(b)?;
    let shape = a.shape().to_vec();
    let total = a.len();
    let ad = a.data();
    let bd = b.data();

    if shape.len() == 1 {
        let n = shape[0];
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = T::zero();
            // a-index (k - m) mod n starts at k and decrements.
            let mut i = k;
            for &bv in bd.iter() {
                acc += ad[i] * bv;
                i = if i == 0 { n - 1 } else { i - 1 };
            }
            out.push(acc);
        }
        return Ok(RealArray::from_raw(shape, out));
    }

    let rank = shape.len();
    let strides = crate::array::strides_of(&shape);
    let mut out = Vec::with_capacity(total);
    let mut n_index = vec![0usize; rank];
    for _ in 0..total {
        let mut acc = T::zero();
        let mut m_index = vec![0usize; rank];
        for &bv in bd.iter() {
            let mut flat = 0usize;
            for d in 0..rank {
                let mut i = n_index[d] + shape[d] - m_index[d];
                if i >= shape[d] {
                    i -= shape[d];
                }
                flat += i * strides[d];
            }
            acc += ad[flat] * bv;
            crate::array::increment_index(&mut m_index, &shape);
        }
        out.push(acc);
        crate::array::increment_index(&mut n_index, &shape);
    }
    Ok(RealArray::from_raw(shape, out))
}

/// Circular convolution of complex arrays by direct summation.
///
/// Used by [`complex_conv_check`] so the product identity is verified
/// against a route independent of any DFT.
pub fn conv_direct_complex<T: Scalar>(
    a: &ComplexArray<T>,
    b: &ComplexArray<T>,
) -> Result<ComplexArray<T>> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            expected: a.shape().to_vec(),
            found: b.shape().to_vec(),
        });
    }
    let shape = a.shape().to_vec();
    let rank = shape.len();
    let strides = crate::array::strides_of(&shape);
    let total = a.len();
    let mut out_re = Vec::with_capacity(total);
    let mut out_im = Vec::with_capacity(total);
    let mut n_index = vec![0usize; rank];
    for _ in 0..total {
        let mut acc_re = T::zero();
        let mut acc_im = T::zero();
        let mut m_index = vec![0usize; rank];
        for m in 0..total {
            let mut flat = 0usize;
            for d in 0..rank {
                let mut i = n_index[d] + shape[d] - m_index[d];
                if i >= shape[d] {
                    i -= shape[d];
                }
                flat += i * strides[d];
            }
            let (ar, ai) = (a.re()[flat], a.im()[flat]);
            let (br, bi) = (b.re()[m], b.im()[m]);
            acc_re = acc_re + ar * br - ai * bi;
            acc_im = acc_im + ar * bi + ai * br;
            crate::array::increment_index(&mut m_index, &shape);
        }
        out_re.push(acc_re);
        out_im.push(acc_im);
        crate::array::increment_index(&mut n_index, &shape);
    }
    Ok(ComplexArray::from_raw(shape, out_re, out_im))
}

/// Four-term combination `(A.B + A.PB + PA.B - PA.PB) / 2`.
fn four_term_pointwise<T: Scalar>(a: &RealArray<T>, b: &RealArray<T>) -> RealArray<T> {
    let pa = a.parity_reversed();
    let pb = b.parity_reversed();
    let half = T::of(0.5);
    let data = a
        .data()
        .iter()
        .zip(b.data())
        .zip(pa.data().iter().zip(pb.data()))
        .map(|((&av, &bv), (&pav, &pbv))| (av * bv + av * pbv + pav * bv - pav * pbv) * half)
        .collect();
    RealArray::from_raw(a.shape().to_vec(), data)
}

/// Circular convolution through the spectral four-term identity.
///
/// Forms `T = (A.B + A.PB + PA.B - PA.PB)/2`, scales by `sqrt(N_total)` and
/// applies the transform once more (it is an involution) to recover `a * b`.
pub fn conv_spectral<T: Scalar>(
    a: &RealArray<T>,
    b: &RealArray<T>,
    plan: &Plan<T>,
) -> Result<RealArray<T>> {
    a.check_same_shape(b)?;
    let ta = plan.rft(a)?;
    let tb = plan.rft(b)?;
    let combined = four_term_pointwise(&ta, &tb);
    let scale = T::of_usize(plan.len()).sqrt();
    plan.rft(&combined.scaled(scale))
}

/// Two-term spectral convolution, valid when at least one input is
/// parity-even (checked exactly); the four cross terms cancel and
/// `(1/sqrt(N)) rft(a*b) = rft(a).rft(b)`.
///
/// Returns [`Error::NeitherInputEven`] when the shortcut does not apply.
pub fn conv_spectral_even<T: Scalar>(
    a: &RealArray<T>,
    b: &RealArray<T>,
    plan: &Plan<T>,
) -> Result<RealArray<T>> {
    a.check_same_shape(b)?;
    if !a.is_parity_even() && !b.is_parity_even() {
        return Err(Error::NeitherInputEven);
    }
    let ta = plan.rft(a)?;
    let tb = plan.rft(b)?;
    let scale = T::of_usize(plan.len()).sqrt();
    plan.rft(&ta.mul(&tb)?.scaled(scale))
}

/// Transform of the pointwise product, `rft(a.b)`, computed through the
/// four-term convolution of spectra:
/// `(1/sqrt(N)) (A*B + A*PB + PA*B - PA*PB) / 2`.
///
/// The four spectral convolutions run through [`conv_direct`], so this is a
/// genuinely different route from transforming `a.b` directly.
pub fn product_spectrum<T: Scalar>(
    a: &RealArray<T>,
    b: &RealArray<T>,
    plan: &Plan<T>,
) -> Result<RealArray<T>> {
    a.check_same_shape(b)?;
    let ta = plan.rft(a)?;
    let tb = plan.rft(b)?;
    let pa = ta.parity_reversed();
    let pb = tb.parity_reversed();
    let c1 = conv_direct(&ta, &tb)?;
    let c2 = conv_direct(&ta, &pb)?;
    let c3 = conv_direct(&pa, &tb)?;
    let c4 = conv_direct(&pa, &pb)?;
    let half_over_sqrt_n = T::of(0.5) / T::of_usize(plan.len()).sqrt();
    let data = c1
        .data()
        .iter()
        .zip(c2.data())
        .zip(c3.data().iter().zip(c4.data()))
        .map(|((&v1, &v2), (&v3, &v4))| (v1 + v2 + v3 - v4) * half_over_sqrt_n)
        .collect();
    Ok(RealArray::from_raw(a.shape().to_vec(), data))
}

fn rel_residual<T: Scalar>(diff: T, scale: T, floor: T) -> T {
    let scale = scale.max(floor);
    if scale == T::zero() {
        diff
    } else {
        diff / scale
    }
}

/// Verifies the complex convolution/product rules and their componentwise
/// forms on the given pair, returning the largest relative residual.
///
/// Checked identities, with `X = dft(a)`, `Y = dft(b)` (real inputs embedded
/// with zero imaginary part), `F1/F2` the cosine/sine components:
///
/// 1. `(1/sqrt(N)) dft(a*b) = X.Y`
/// 2. `dft(a.b) = (1/sqrt(N)) X*Y` (spectra convolved by direct summation)
/// 3. `(1/sqrt(N)) F1[a*b] = F1[a]F1[b] - F2[a]F2[b]`, and the `F2` analog
/// 4. `F1[a.b] = (1/sqrt(N)) (F1[a]*F1[b] - F2[a]*F2[b])`, and the `F2` analog
pub fn complex_conv_check<T: Scalar>(
    a: &RealArray<T>,
    b: &RealArray<T>,
    plan: &Plan<T>,
) -> Result<T> {
    a.check_same_shape(b)?;
    let sqrt_n = T::of_usize(plan.len()).sqrt();
    let inv_sqrt_n = sqrt_n.recip();

    let xa = plan.complex_dft(&ComplexArray::from_real(a))?;
    let xb = plan.complex_dft(&ComplexArray::from_real(b))?;

    // Identities whose both sides vanish structurally (a sine component of a
    // delta, say) would otherwise compare rounding noise against rounding
    // noise; the spectra provide the problem scale.
    let floor = xa.max_abs() * xb.max_abs();
    let mut worst = T::zero();

    // Convolution rule.
    let ab_conv = conv_direct(a, b)?;
    let lhs = plan
        .complex_dft(&ComplexArray::from_real(&ab_conv))?
        .scaled(inv_sqrt_n);
    let rhs = xa.mul(&xb)?;
    worst = worst.max(rel_residual(
        lhs.max_abs_diff(&rhs),
        lhs.max_abs().max(rhs.max_abs()),
        floor,
    ));

    // Product rule, spectra convolved without any DFT.
    let ab_prod = a.mul(b)?;
    let lhs = plan.complex_dft(&ComplexArray::from_real(&ab_prod))?;
    let rhs = conv_direct_complex(&xa, &xb)?.scaled(inv_sqrt_n);
    worst = worst.max(rel_residual(
        lhs.max_abs_diff(&rhs),
        lhs.max_abs().max(rhs.max_abs()),
        floor,
    ));

    // Componentwise convolution rule.
    let (f1a, f2a) = (xa.real(), xa.imag());
    let (f1b, f2b) = (xb.real(), xb.imag());
    let pair_conv = plan.components(&ab_conv)?;
    let lhs1 = pair_conv.even().scaled(inv_sqrt_n);
    let rhs1 = f1a.mul(&f1b)?.sub(&f2a.mul(&f2b)?)?;
    let lhs2 = pair_conv.odd().scaled(inv_sqrt_n);
    let rhs2 = f1a.mul(&f2b)?.add(&f2a.mul(&f1b)?)?;
    for (lhs, rhs) in [(&lhs1, &rhs1), (&lhs2, &rhs2)] {
        let diff = lhs.sub(rhs)?.norm(crate::array::Norm::Inf);
        let scale = lhs
            .norm(crate::array::Norm::Inf)
            .max(rhs.norm(crate::array::Norm::Inf));
        worst = worst.max(rel_residual(diff, scale, floor));
    }

    // Componentwise product rule.
    let pair_prod = plan.components(&ab_prod)?;
    let rhs1 = conv_direct(&f1a, &f1b)?
        .sub(&conv_direct(&f2a, &f2b)?)?
        .scaled(inv_sqrt_n);
    let rhs2 = conv_direct(&f1a, &f2b)?
        .add(&conv_direct(&f2a, &f1b)?)?
        .scaled(inv_sqrt_n);
    for (lhs, rhs) in [(pair_prod.even(), &rhs1), (pair_prod.odd(), &rhs2)] {
        let diff = lhs.sub(rhs)?.norm(crate::array::Norm::Inf);
        let scale = lhs
            .norm(crate::array::Norm::Inf)
            .max(rhs.norm(crate::array::Norm::Inf));
        worst = worst.max(rel_residual(diff, scale, floor));
    }

    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::Norm;

    fn arr(values: &[f64]) -> RealArray<f64> {
        RealArray::from_slice(values).unwrap()
    }

    fn rel_linf(a: &RealArray<f64>, b: &RealArray<f64>) -> f64 {
        let diff = a.sub(b).unwrap().norm(Norm::Inf);
        let scale = b.norm(Norm::Inf);
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }

    fn lcg_array(shape: Vec<usize>, seed: u64) -> RealArray<f64> {
        let mut state = seed;
        let total: usize = shape.iter().product();
        let data = (0..total)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
            })
            .collect();
        RealArray::from_vec(shape, data).unwrap()
    }

    #[test]
    fn direct_hand_values() {
        let a = arr(&[1.0, 1.0, 0.0, 0.0]);
        let b = arr(&[1.0, 0.0, 1.0, 0.0]);
        let c = conv_direct(&a, &b).unwrap();
        assert_eq!(c.data(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn delta_is_the_identity() {
        let delta = arr(&[1.0, 0.0, 0.0, 0.0]);
        let b = arr(&[0.5, -2.0, 3.0, 7.0]);
        assert_eq!(conv_direct(&delta, &b).unwrap().data(), b.data());

        let plan = Plan::new(&[4]).unwrap();
        assert!(rel_linf(&conv_spectral(&delta, &b, &plan).unwrap(), &b) < 1e-12);
        assert!(rel_linf(&conv_spectral_even(&delta, &b, &plan).unwrap(), &b) < 1e-12);
    }

    #[test]
    fn direct_is_commutative() {
        let a = lcg_array(vec![31], 42);
        let b = lcg_array(vec![31], 43);
        let ab = conv_direct(&a, &b).unwrap();
        let ba = conv_direct(&b, &a).unwrap();
        assert!(rel_linf(&ab, &ba) < 1e-13);
    }

    #[test]
    fn spectral_matches_direct() {
        let plan = Plan::new(&[256]).unwrap();
        let a = lcg_array(vec![256], 42);
        let b = lcg_array(vec![256], 99);
        let direct = conv_direct(&a, &b).unwrap();
        let spectral = conv_spectral(&a, &b, &plan).unwrap();
        assert!(rel_linf(&spectral, &direct) < 1e-9);
    }

    #[test]
    fn spectral_matches_direct_2d() {
        let plan = Plan::new(&[8, 8]).unwrap();
        let a = lcg_array(vec![8, 8], 7);
        let b = lcg_array(vec![8, 8], 8);
        let direct = conv_direct(&a, &b).unwrap();
        let spectral = conv_spectral(&a, &b, &plan).unwrap();
        assert!(rel_linf(&spectral, &direct) < 1e-10);
    }

    #[test]
    fn even_shortcut_matches_direct_and_four_term() {
        let plan = Plan::new(&[4]).unwrap();
        let a = arr(&[2.0, 1.0, 0.0, 1.0]);
        assert!(a.is_parity_even());
        let b = arr(&[1.0, 2.0, 3.0, 4.0]);
        let direct = conv_direct(&a, &b).unwrap();
        let shortcut = conv_spectral_even(&a, &b, &plan).unwrap();
        assert!(rel_linf(&shortcut, &direct) < 1e-12);
        let four = conv_spectral(&a, &b, &plan).unwrap();
        assert!(rel_linf(&shortcut, &four) < 1e-10);
    }

    #[test]
    fn even_shortcut_rejects_two_odd_signals() {
        let plan = Plan::new(&[4]).unwrap();
        let a = arr(&[1.0, 2.0, 3.0, 4.0]);
        let b = arr(&[4.0, 3.0, 2.0, 1.0]);
        assert!(!a.is_parity_even() && !b.is_parity_even());
        assert!(matches!(
            conv_spectral_even(&a, &b, &plan),
            Err(Error::NeitherInputEven)
        ));
    }

    #[test]
    fn product_spectrum_matches_transform_of_product() {
        let plan = Plan::new(&[128]).unwrap();
        let a = lcg_array(vec![128], 7);
        let b = lcg_array(vec![128], 13);
        let via_convolutions = product_spectrum(&a, &b, &plan).unwrap();
        let direct = plan.rft(&a.mul(&b).unwrap()).unwrap();
        assert!(rel_linf(&via_convolutions, &direct) < 1e-9);
    }

    #[test]
    fn product_spectrum_with_constant_factor() {
        // b = c: a.b = c*a, so the result is c * rft(a).
        let plan = Plan::new(&[16]).unwrap();
        let a = lcg_array(vec![16], 3);
        let c = 2.5;
        let b = RealArray::from_vec(vec![16], vec![c; 16]).unwrap();
        let got = product_spectrum(&a, &b, &plan).unwrap();
        let want = plan.rft(&a).unwrap().scaled(c);
        assert!(rel_linf(&got, &want) < 1e-10);

        let zero = RealArray::<f64>::zeros(vec![16]).unwrap();
        let got = product_spectrum(&zero, &zero, &plan).unwrap();
        assert_eq!(got.norm(Norm::Inf), 0.0);
    }

    #[test]
    fn complex_rules_hold() {
        let plan = Plan::new(&[64]).unwrap();
        let a = lcg_array(vec![64], 1);
        let b = lcg_array(vec![64], 2);
        let residual = complex_conv_check(&a, &b, &plan).unwrap();
        assert!(residual <= 1e-10, "residual {residual}");

        let delta = {
            let mut v = vec![0.0; 64];
            v[0] = 1.0;
            arr(&v)
        };
        let residual = complex_conv_check(&delta, &b, &plan).unwrap();
        assert!(residual <= 1e-12, "residual {residual}");

        let zero = RealArray::<f64>::zeros(vec![64]).unwrap();
        assert_eq!(complex_conv_check(&zero, &zero, &plan).unwrap(), 0.0);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = arr(&[1.0, 2.0]);
        let b = arr(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            conv_direct(&a, &b),
            Err(Error::ShapeMismatch { .. })
        ));
    }
}
