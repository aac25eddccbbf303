//! Checks the planned transforms against an independent brute-force oracle.
//!
//! The oracle below computes the unitary DFT straight from its definition,
//! evaluating `e^{-i theta}` per index pair with no shared tables, bit
//! reversal, or axis factorization, so it shares no code path with the
//! implementation it checks.

use rft_core::{ComplexArray64, Plan64, RealArray64};

/// Unitary complex DFT (or inverse) by definition, O(N_total^2).
fn oracle_dft(shape: &[usize], re: &[f64], im: &[f64], inverse: bool) -> (Vec<f64>, Vec<f64>) {
    let total: usize = shape.iter().product();
    let rank = shape.len();
    let norm = (total as f64).sqrt().recip();
    let sign = if inverse { 1.0 } else { -1.0 };

    let unflatten = |mut flat: usize| {
        let mut idx = vec![0usize; rank];
        for d in (0..rank).rev() {
            idx[d] = flat % shape[d];
            flat /= shape[d];
        }
        idx
    };

    let mut out_re = vec![0.0; total];
    let mut out_im = vec![0.0; total];
    for k_flat in 0..total {
        let k = unflatten(k_flat);
        let mut acc_re = 0.0;
        let mut acc_im = 0.0;
        for n_flat in 0..total {
            let n = unflatten(n_flat);
            let mut theta = 0.0;
            for d in 0..rank {
                theta += (k[d] * n[d]) as f64 / shape[d] as f64;
            }
            let (s, c) = (sign * core::f64::consts::TAU * theta).sin_cos();
            acc_re += re[n_flat] * c - im[n_flat] * s;
            acc_im += re[n_flat] * s + im[n_flat] * c;
        }
        out_re[k_flat] = acc_re * norm;
        out_im[k_flat] = acc_im * norm;
    }
    (out_re, out_im)
}

fn pseudo_random(count: usize, seed: u64) -> Vec<f64> {
    let mut state = seed;
    (0..count)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        })
        .collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .fold(0.0f64, |m, (&x, &y)| m.max((x - y).abs()))
}

#[test]
fn complex_dft_matches_oracle_across_shapes() {
    for shape in [
        vec![4usize],
        vec![16],
        vec![12],
        vec![30],
        vec![6, 10],
        vec![8, 8],
        vec![3, 4, 5],
        vec![1, 9],
    ] {
        let total: usize = shape.iter().product();
        let re = pseudo_random(total, 11);
        let im = pseudo_random(total, 12);
        let plan = Plan64::new(&shape).unwrap();
        let input = ComplexArray64::from_parts(shape.clone(), re.clone(), im.clone()).unwrap();

        let got = plan.complex_dft(&input).unwrap();
        let (want_re, want_im) = oracle_dft(&shape, &re, &im, false);
        assert!(
            max_abs_diff(got.re(), &want_re) < 1e-12 && max_abs_diff(got.im(), &want_im) < 1e-12,
            "forward mismatch for shape {shape:?}"
        );

        let got = plan.complex_idft(&input).unwrap();
        let (want_re, want_im) = oracle_dft(&shape, &re, &im, true);
        assert!(
            max_abs_diff(got.re(), &want_re) < 1e-12 && max_abs_diff(got.im(), &want_im) < 1e-12,
            "inverse mismatch for shape {shape:?}"
        );
    }
}

#[test]
fn rft_matches_oracle_combination() {
    // The real transform is Re + Im of the complex transform of the
    // zero-imaginary embedding.
    for shape in [vec![8usize], vec![10], vec![4, 6], vec![2, 3, 4]] {
        let total: usize = shape.iter().product();
        let data = pseudo_random(total, 77);
        let x = RealArray64::from_vec(shape.clone(), data.clone()).unwrap();
        let plan = Plan64::new(&shape).unwrap();
        let got = plan.rft(&x).unwrap();
        let (re, im) = oracle_dft(&shape, &data, &vec![0.0; total], false);
        let want: Vec<f64> = re.iter().zip(&im).map(|(&r, &i)| r + i).collect();
        assert!(
            max_abs_diff(got.data(), &want) < 1e-12,
            "mismatch for shape {shape:?}"
        );
    }
}

#[test]
fn frozen_small_case() {
    // N = 4, x = [0, 1, 0, 0]: X = [(1/2, 0), (0, -1/2), (-1/2, 0), (0, 1/2)].
    let shape = vec![4usize];
    let (re, im) = oracle_dft(&shape, &[0.0, 1.0, 0.0, 0.0], &[0.0; 4], false);
    assert!(max_abs_diff(&re, &[0.5, 0.0, -0.5, 0.0]) < 1e-15);
    assert!(max_abs_diff(&im, &[0.0, -0.5, 0.0, 0.5]) < 1e-15);

    let plan = Plan64::new(&shape).unwrap();
    let x = RealArray64::from_slice(&[0.0, 1.0, 0.0, 0.0]).unwrap();
    let g = plan.rft(&x).unwrap();
    assert!(max_abs_diff(g.data(), &[0.5, -0.5, -0.5, 0.5]) < 1e-15);
}
