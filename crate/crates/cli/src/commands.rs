//! Subcommand implementations.

use std::fs;
use std::hint::black_box;
use std::path::Path;
use std::time::Instant;

use rft_core::conv::{conv_direct, conv_spectral, conv_spectral_even};
use rft_core::quad::{hermite as hermite_fn, hermite_eigencheck, Grid1D};
use rft_core::transform::rft_kernel_sum;
use rft_core::verify::{random_array, run_suite, SplitMix64, SuiteConfig};
use rft_core::{Norm, Plan64, RealArray64};

use crate::io::{read_array, write_array, Format};
use crate::{map_core, parse_sizes, CliError, Method};

pub fn transform(input: &Path, output: &Path, _inverse: bool) -> Result<(), CliError> {
    let (x, format) = read_array(input)?;
    let plan = Plan64::new(x.shape()).map_err(map_core)?;
    let transformed = plan.rft(&x).map_err(map_core)?;
    write_array(output, &transformed, format)
}

pub fn convolve(
    a_path: &Path,
    b_path: &Path,
    output: &Path,
    method: Method,
    pad: bool,
) -> Result<(), CliError> {
    let (a, format) = read_array(a_path)?;
    let (b, _) = read_array(b_path)?;

    let (a, b, trim_shape) = if pad {
        if a.rank() != b.rank() {
            return Err(CliError::Parse(format!(
                "rank mismatch: {:?} vs {:?}",
                a.shape(),
                b.shape()
            )));
        }
        let linear: Vec<usize> = a
            .shape()
            .iter()
            .zip(b.shape())
            .map(|(&na, &nb)| na + nb - 1)
            .collect();
        let padded: Vec<usize> = linear.iter().map(|&n| n.next_power_of_two()).collect();
        (zero_pad(&a, &padded), zero_pad(&b, &padded), Some(linear))
    } else {
        if a.shape() != b.shape() {
            return Err(CliError::Parse(format!(
                "shape mismatch: {:?} vs {:?} (use --pad for unequal linear convolution)",
                a.shape(),
                b.shape()
            )));
        }
        (a, b, None)
    };

    let result = match method {
        Method::Direct => conv_direct(&a, &b).map_err(map_core)?,
        Method::Spectral => {
            let plan = Plan64::new(a.shape()).map_err(map_core)?;
            conv_spectral(&a, &b, &plan).map_err(map_core)?
        }
        Method::SpectralEven => {
            let plan = Plan64::new(a.shape()).map_err(map_core)?;
            conv_spectral_even(&a, &b, &plan).map_err(map_core)?
        }
    };
    let result = match trim_shape {
        Some(shape) => trim(&result, &shape),
        None => result,
    };
    write_array(output, &result, format)
}

fn zero_pad(x: &RealArray64, target: &[usize]) -> RealArray64 {
    let mut out = RealArray64::zeros(target.to_vec()).expect("valid padded shape");
    copy_block(x, &mut out, x.shape());
    out
}

fn trim(x: &RealArray64, target: &[usize]) -> RealArray64 {
    let mut out = RealArray64::zeros(target.to_vec()).expect("valid trimmed shape");
    copy_block(x, &mut out, target);
    out
}

/// Copies the leading `block` region from `src` into `dst` (both row-major).
fn copy_block(src: &RealArray64, dst: &mut RealArray64, block: &[usize]) {
    let rank = block.len();
    let src_shape = src.shape().to_vec();
    let dst_shape = dst.shape().to_vec();
    let stride = |shape: &[usize]| {
        let mut s = vec![1usize; rank];
        for d in (0..rank.saturating_sub(1)).rev() {
            s[d] = s[d + 1] * shape[d + 1];
        }
        s
    };
    let (ss, ds) = (stride(&src_shape), stride(&dst_shape));
    let total: usize = block.iter().product();
    let mut index = vec![0usize; rank];
    let mut data = dst.data().to_vec();
    for _ in 0..total {
        let si: usize = index.iter().zip(&ss).map(|(&i, &s)| i * s).sum();
        let di: usize = index.iter().zip(&ds).map(|(&i, &s)| i * s).sum();
        data[di] = src.data()[si];
        for d in (0..rank).rev() {
            index[d] += 1;
            if index[d] < block[d] {
                break;
            }
            index[d] = 0;
        }
    }
    *dst = RealArray64::from_vec(dst_shape, data).expect("copied data stays finite");
}

pub fn hermite(
    k: usize,
    half_width: f64,
    count: usize,
    check: bool,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let grid = Grid1D::new(half_width, count).map_err(|e| CliError::Parse(e.to_string()))?;
    let psi = hermite_fn(k, &grid).map_err(|e| CliError::Parse(e.to_string()))?;

    if check {
        let result = hermite_eigencheck(k, &grid).map_err(|e| CliError::Parse(e.to_string()))?;
        println!(
            "k={k} lambda={:+} residual={:e}",
            result.lambda, result.residual
        );
    }
    if let Some(path) = output {
        let samples = RealArray64::from_vec(vec![count], psi.values().to_vec())
            .expect("hermite samples are finite");
        write_array(path, &samples, Format::Text)?;
    } else if !check {
        let samples = RealArray64::from_vec(vec![count], psi.values().to_vec())
            .expect("hermite samples are finite");
        write_array(Path::new("-"), &samples, Format::Text)?;
    }
    Ok(())
}

pub fn verify(
    seed: u64,
    sizes: Option<&str>,
    trials: usize,
    report_path: Option<&Path>,
) -> Result<(), CliError> {
    let mut config = SuiteConfig {
        seed,
        trials,
        ..SuiteConfig::default()
    };
    if let Some(spec) = sizes {
        config.sizes = parse_sizes(spec)?;
    }
    let report = run_suite(&config).map_err(|e| CliError::Parse(e.to_string()))?;

    for p in &report.properties {
        println!(
            "{} {:32} max_err={:<12.3e} tol={:<9.0e} trials={}",
            if p.pass { "PASS" } else { "FAIL" },
            p.name,
            p.max_observed_error,
            p.tolerance,
            p.trials
        );
    }
    println!(
        "overall: {}",
        if report.overall_pass { "PASS" } else { "FAIL" }
    );

    if let Some(path) = report_path {
        fs::write(path, report.to_json())
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    if !report.overall_pass {
        return Err(CliError::Failed("verification suite failed".into()));
    }
    Ok(())
}

pub fn bench(sizes: &str, seed: u64, report_path: Option<&Path>) -> Result<(), CliError> {
    let shapes = parse_sizes(sizes)?;
    let mut csv = String::from("size,naive_ns,fast_ns,speedup,warning\n");
    for shape in shapes {
        if shape.len() != 1 {
            return Err(CliError::Parse(format!(
                "bench sizes must be 1-D, got {shape:?}"
            )));
        }
        let n = shape[0];
        let mut rng = SplitMix64::new(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let x = random_array(&mut rng, &shape);

        let naive = rft_kernel_sum(&x);
        // Fewer reps for the quadratic path once it dominates run time.
        let naive_reps = if n >= 4096 { 1 } else { 3 };
        let naive_ns = best_time_ns(naive_reps, || {
            black_box(rft_kernel_sum(black_box(&x)));
        });

        if n.is_power_of_two() {
            let plan = Plan64::new(&shape).map_err(map_core)?;
            let fast = plan.rft(&x).map_err(map_core)?;
            let diff = fast.sub(&naive).map_err(map_core)?.norm(Norm::Inf);
            let scale = naive.norm(Norm::Inf).max(f64::MIN_POSITIVE);
            if diff > 1e-10 * scale {
                return Err(CliError::Failed(format!(
                    "fast/naive disagreement at N={n}: rel err {:.3e}",
                    diff / scale
                )));
            }
            let fast_ns = best_time_ns(11, || {
                black_box(plan.rft(black_box(&x)).unwrap());
            });
            let speedup = naive_ns as f64 / fast_ns as f64;
            csv.push_str(&format!("{n},{naive_ns},{fast_ns},{speedup:.2},\n"));
        } else {
            eprintln!("warning: N={n} is not a power of two; no fast path, timing naive only");
            csv.push_str(&format!("{n},{naive_ns},,,naive_only\n"));
        }
    }
    match report_path {
        Some(path) => fs::write(path, csv)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn best_time_ns(reps: usize, mut f: impl FnMut()) -> u128 {
    let mut best = u128::MAX;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        f();
        best = best.min(start.elapsed().as_nanos());
    }
    best
}
