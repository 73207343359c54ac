//! Coefficient statistics and their asymptotic normalizations.
//!
//! Prefix statistics (absolute sum, square sum, max, partial sum) are
//! accumulated exactly in `BigInt`; the square sums involved exceed 10^45
//! well before the scan lengths of interest. Division by the predicted
//! growth law happens only at ratio time, in `f64`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::family::SeriesKind;
use crate::series::CoeffSeries;
use crate::Error;

/// A coefficient statistic accumulated over the prefix `0 <= n <= N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    AbsSum,
    SquareSum,
    MaxAbs,
    PartialSum,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::AbsSum => "abs_sum",
            Statistic::SquareSum => "square_sum",
            Statistic::MaxAbs => "max_abs",
            Statistic::PartialSum => "partial_sum",
        }
    }
}

/// Exact prefix statistics at a single checkpoint `N` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixRow {
    pub n: usize,
    pub abs_sum: BigInt,
    pub square_sum: BigInt,
    pub max_abs: BigInt,
    pub partial_sum: BigInt,
}

impl PrefixRow {
    pub fn get(&self, statistic: Statistic) -> &BigInt {
        match statistic {
            Statistic::AbsSum => &self.abs_sum,
            Statistic::SquareSum => &self.square_sum,
            Statistic::MaxAbs => &self.max_abs,
            Statistic::PartialSum => &self.partial_sum,
        }
    }
}

/// Accumulates the four statistics over `n = 0 ..= max(checkpoints)` in one
/// scan and reports them at each requested checkpoint, in the order given.
pub fn prefix_stats(
    series: &CoeffSeries,
    checkpoints: &[usize],
) -> Result<Vec<PrefixRow>, Error> {
    let top = checkpoints.iter().copied().max().unwrap_or(0);
    if !checkpoints.is_empty() {
        series.check_len(top)?;
    }
    let mut abs_sum = BigInt::zero();
    let mut square_sum = BigInt::zero();
    let mut max_abs = BigInt::zero();
    let mut partial_sum = BigInt::zero();
    let mut rows: Vec<Option<PrefixRow>> = Vec::new();
    rows.resize(top + 1, None);
    let mut wanted: Vec<bool> = Vec::new();
    wanted.resize(top + 1, false);
    for &n in checkpoints {
        wanted[n] = true;
    }
    for (n, c) in series.coeffs().iter().take(top + 1).enumerate() {
        let a = c.abs();
        square_sum += &a * &a;
        if a > max_abs {
            max_abs = a.clone();
        }
        abs_sum += a;
        partial_sum += c;
        if wanted[n] {
            rows[n] = Some(PrefixRow {
                n,
                abs_sum: abs_sum.clone(),
                square_sum: square_sum.clone(),
                max_abs: max_abs.clone(),
                partial_sum: partial_sum.clone(),
            });
        }
    }
    // a complete series is implicitly zero past its stored degree
    for n in series.len()..=top {
        if wanted[n] {
            rows[n] = Some(PrefixRow {
                n,
                abs_sum: abs_sum.clone(),
                square_sum: square_sum.clone(),
                max_abs: max_abs.clone(),
                partial_sum: partial_sum.clone(),
            });
        }
    }
    Ok(checkpoints
        .iter()
        .map(|&n| rows[n].clone().expect("checkpoint visited"))
        .collect())
}

/// One statistic at one checkpoint.
pub fn stat_at(series: &CoeffSeries, statistic: Statistic, n: usize) -> Result<BigInt, Error> {
    let rows = prefix_stats(series, &[n])?;
    Ok(rows[0].get(statistic).clone())
}

/// Minimum and maximum of the running partial sums over the whole stored
/// prefix. For the first power these stay in `{-1, 0, 1}`.
pub fn partial_sum_extrema(series: &CoeffSeries) -> (BigInt, BigInt) {
    let mut sum = BigInt::zero();
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for c in series.coeffs() {
        sum += c;
        if sum < lo {
            lo = sum.clone();
        }
        if sum > hi {
            hi = sum.clone();
        }
    }
    (lo, hi)
}

/// A predicted growth law `statistic(N) ~ constant * normalizer(N)`.
///
/// `constant` is populated only where a reference value exists; open or
/// merely-empirical constants are left out and the ratio itself is the
/// estimate.
pub struct AsymptoticLaw {
    pub series: SeriesKind,
    pub statistic: Statistic,
    pub shape: &'static str,
    pub normalizer: fn(f64) -> f64,
    pub constant: Option<f64>,
}

fn l1_abs_norm(n: f64) -> f64 {
    libm::sqrt(24.0 * n) / 3.0
}

fn l2_abs_norm(n: f64) -> f64 {
    n / libm::sqrt(libm::log(n))
}

fn linear_norm(n: f64) -> f64 {
    n
}

fn l3_abs_norm(n: f64) -> f64 {
    2.0 * n
}

fn l3_square_norm(n: f64) -> f64 {
    libm::pow(8.0 * n, 1.5) / 6.0
}

fn l3_max_norm(n: f64) -> f64 {
    libm::sqrt(8.0 * n)
}

fn square_norm(n: f64) -> f64 {
    n * n
}

fn cube_norm(n: f64) -> f64 {
    n * n * n
}

fn quartic_norm(n: f64) -> f64 {
    libm::pow(n, 4.0)
}

fn sextic_norm(n: f64) -> f64 {
    libm::pow(n, 6.0)
}

fn twelfth_norm(n: f64) -> f64 {
    libm::pow(n, 12.0)
}

/// Mean-value constant of the second power's absolute sums.
pub const ABS_MEAN_L2: f64 = 3.3215840614847482;
/// Mean-square constant of the second power.
pub const SQUARE_MEAN_L2: f64 = 2.6339157938496334;
/// Mean-square constant of the `(1-q^m)(1-q^(2m))` square variant.
pub const SQUARE_MEAN_L2V1: f64 = 1.7627471740390861;
/// Mean-square constant of the 24th power.
pub const SQUARE_MEAN_L24: f64 = 0.0320070045390142;

static LAWS: [AsymptoticLaw; 14] = [
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L1),
        statistic: Statistic::AbsSum,
        shape: "(1/3)*(24N)^(1/2)",
        normalizer: l1_abs_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L2),
        statistic: Statistic::AbsSum,
        shape: "C*N/(ln N)^(1/2)",
        normalizer: l2_abs_norm,
        constant: Some(ABS_MEAN_L2),
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L2),
        statistic: Statistic::SquareSum,
        shape: "D*N",
        normalizer: linear_norm,
        constant: Some(SQUARE_MEAN_L2),
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L2V1),
        statistic: Statistic::SquareSum,
        shape: "E*N",
        normalizer: linear_norm,
        constant: Some(SQUARE_MEAN_L2V1),
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L3),
        statistic: Statistic::AbsSum,
        shape: "2*N",
        normalizer: l3_abs_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L3),
        statistic: Statistic::SquareSum,
        shape: "(1/6)*(8N)^(3/2)",
        normalizer: l3_square_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L3),
        statistic: Statistic::MaxAbs,
        shape: "(8N)^(1/2)",
        normalizer: l3_max_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L4),
        statistic: Statistic::SquareSum,
        shape: "const*N^2",
        normalizer: square_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L4V1),
        statistic: Statistic::SquareSum,
        shape: "const*N^2",
        normalizer: square_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L4V2),
        statistic: Statistic::SquareSum,
        shape: "const*N^2",
        normalizer: square_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L6),
        statistic: Statistic::SquareSum,
        shape: "const*N^3",
        normalizer: cube_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::Family(crate::family::Family::L8),
        statistic: Statistic::SquareSum,
        shape: "const*N^4",
        normalizer: quartic_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::L12,
        statistic: Statistic::SquareSum,
        shape: "A*N^6",
        normalizer: sextic_norm,
        constant: None,
    },
    AsymptoticLaw {
        series: SeriesKind::L24,
        statistic: Statistic::SquareSum,
        shape: "B*N^12",
        normalizer: twelfth_norm,
        constant: Some(SQUARE_MEAN_L24),
    },
];

pub fn laws() -> &'static [AsymptoticLaw] {
    &LAWS
}

pub fn law(series: SeriesKind, statistic: Statistic) -> Option<&'static AsymptoticLaw> {
    LAWS.iter()
        .find(|l| l.series == series && l.statistic == statistic)
}

/// `statistic(N) / normalizer(N)`. Where the law carries a constant, this
/// tends to that constant; dividing by it gives a ratio tending to 1.
pub fn normalized_ratio(
    series_kind: SeriesKind,
    statistic: Statistic,
    series: &CoeffSeries,
    n: usize,
) -> Result<f64, Error> {
    let law = law(series_kind, statistic).ok_or(Error::UnknownLaw {
        series: series_kind.name(),
        statistic: statistic.name(),
    })?;
    let value = stat_at(series, statistic, n)?
        .to_f64()
        .expect("statistic out of f64 range");
    Ok(value / (law.normalizer)(n as f64))
}

/// How to squeeze a limiting constant out of finitely many checkpoint ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitModel {
    /// Mean of the trailing half of the ratios; residual is their RMS spread.
    Plain,
    /// Least squares on `ratio(N) = a + b/ln N`; returns `a` and the RMS of
    /// the fit residuals. Picks up the leading correction term of
    /// Selberg-Delange type laws.
    LogCorrected,
}

/// Fits a limiting constant to `(N, ratio)` checkpoint pairs.
pub fn fit_constant(ratios: &[(f64, f64)], model: FitModel) -> Result<(f64, f64), Error> {
    assert!(ratios.len() >= 3, "need at least 3 checkpoints to fit");
    match model {
        FitModel::Plain => {
            let tail = &ratios[ratios.len() / 2..];
            let mean = tail.iter().map(|&(_, y)| y).sum::<f64>() / tail.len() as f64;
            let var = tail
                .iter()
                .map(|&(_, y)| (y - mean) * (y - mean))
                .sum::<f64>()
                / tail.len() as f64;
            Ok((mean, libm::sqrt(var)))
        }
        FitModel::LogCorrected => {
            if ratios.iter().any(|&(n, _)| n <= 1.0) {
                return Err(Error::DegenerateFit("checkpoint N <= 1 in log fit"));
            }
            let m = ratios.len() as f64;
            let mut sx = 0.0;
            let mut sxx = 0.0;
            let mut sy = 0.0;
            let mut sxy = 0.0;
            for &(n, y) in ratios {
                let x = 1.0 / libm::log(n);
                sx += x;
                sxx += x * x;
                sy += y;
                sxy += x * y;
            }
            let det = m * sxx - sx * sx;
            if libm::fabs(det) < 1e-14 * m * sxx {
                return Err(Error::DegenerateFit("checkpoints not distinct enough"));
            }
            let a = (sxx * sy - sx * sxy) / det;
            let b = (m * sxy - sx * sy) / det;
            let rss = ratios
                .iter()
                .map(|&(n, y)| {
                    let e = y - (a + b / libm::log(n));
                    e * e
                })
                .sum::<f64>();
            Ok((a, libm::sqrt(rss / m)))
        }
    }
}

/// First index with a vanishing coefficient, if any.
pub fn lehmer_scan(series: &CoeffSeries) -> Option<usize> {
    series.coeffs().iter().position(|c| c.is_zero())
}

/// Checks that every partial sum of the cube's series up to `n` equals the
/// closed form `(-1)^k (k+1)` where `(2k+1)^2 <= 8N+1 < (2k+3)^2`.
pub fn l3_partial_sum_check(n: usize) -> bool {
    let series = crate::series::jacobi_cube_series(1, n);
    let support = series.support().expect("cube series is sparse");
    let mut idx = 0;
    let mut partial: i64 = 0;
    let mut k: u64 = 0;
    for m in 0..=n {
        while idx < support.len() && support[idx].0 == m {
            partial += support[idx].1;
            idx += 1;
        }
        let bound = 8 * m as u64 + 1;
        while (2 * k + 3) * (2 * k + 3) <= bound {
            k += 1;
        }
        let expected = if k % 2 == 0 {
            (k + 1) as i64
        } else {
            -((k + 1) as i64)
        };
        if partial != expected {
            return false;
        }
    }
    true
}
