//! Euler products over arithmetic progressions, cusp-form L-values, and
//! empirical mean squares.
//!
//! The six product constants converge only conditionally: the split-class
//! local factors carry a quadratic-form term of size O(1/p) whose sign
//! equidistributes. They are evaluated by raw truncation in log space with
//! geometric checkpoints, then accelerated by one pass of Aitken's delta
//! squared. The three weight-3 L-values at s = 2 use an exponentially
//! smoothed approximate functional equation instead; they converge fast.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{QuadReps, RepCache};
use crate::family::SeriesKind;
use crate::moments::{normalized_ratio, Statistic};
use crate::series::{expand_eta_product, q_prefactor_exponent, CoeffSeries, EtaProduct};
use crate::Error;

/// The six limiting constants with Euler-product expressions: the mean
/// absolute value and mean square of the second power (and its first
/// variant), and the three fourth-power mean squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductConstant {
    C2,
    D2,
    E2,
    C4,
    D4,
    E4,
}

pub const PRODUCT_CONSTANTS: [ProductConstant; 6] = [
    ProductConstant::C2,
    ProductConstant::D2,
    ProductConstant::E2,
    ProductConstant::C4,
    ProductConstant::D4,
    ProductConstant::E4,
];

impl ProductConstant {
    pub fn name(self) -> &'static str {
        match self {
            ProductConstant::C2 => "C2",
            ProductConstant::D2 => "D2",
            ProductConstant::E2 => "E2",
            ProductConstant::C4 => "C4",
            ProductConstant::D4 => "D4",
            ProductConstant::E4 => "E4",
        }
    }

    pub fn parse(name: &str) -> Option<ProductConstant> {
        PRODUCT_CONSTANTS.into_iter().find(|c| c.name() == name)
    }

    pub fn description(self) -> &'static str {
        match self {
            ProductConstant::C2 => "L2 abs-sum constant C",
            ProductConstant::D2 => "L2 mean-square constant D",
            ProductConstant::E2 => "L2V1 mean-square constant E",
            ProductConstant::C4 => "L4 mean-square constant",
            ProductConstant::D4 => "L4V1 mean-square constant",
            ProductConstant::E4 => "L4V2 mean-square constant",
        }
    }

    /// Reference value, truncated from the 25-digit literature values.
    pub fn reference(self) -> f64 {
        match self {
            ProductConstant::C2 => 3.3215840614847482,
            ProductConstant::D2 => 2.6339157938496334,
            ProductConstant::E2 => 1.7627471740390861,
            ProductConstant::C4 => 4.641718300129398,
            ProductConstant::D4 => 1.9533514553987912,
            ProductConstant::E4 => 1.0526097875093499,
        }
    }

    /// Closed-form factor in front of the product over primes `p >= 5`. The
    /// local factors at `p = 2, 3` (where the residue classes reach them) are
    /// folded in here, which is what turns `4` into `36/13` and `3` into
    /// `12/7`.
    pub fn prefactor(self) -> f64 {
        match self {
            ProductConstant::C2 => 12.0 / libm::sqrt(3.0 * core::f64::consts::PI),
            ProductConstant::D2 => 4.0,
            // 4 * (1 + 1/3)^(-1)
            ProductConstant::E2 => 3.0,
            ProductConstant::C4 => 6.0,
            // 4 * (1 - 1/3)(1 - 1/27)^(-1)
            ProductConstant::D4 => 36.0 / 13.0,
            // 3 * (1 - 1/2)(1 - 1/8)^(-1)
            ProductConstant::E4 => 12.0 / 7.0,
        }
    }

    /// Whether the local factor at `p` needs quadratic-form data.
    pub fn needs_reps(self, p: u64) -> bool {
        match self {
            ProductConstant::C2 | ProductConstant::D2 | ProductConstant::E2 => false,
            ProductConstant::C4 => p % 6 == 1,
            ProductConstant::D4 => p % 4 == 1,
            ProductConstant::E4 => p % 3 == 1,
        }
    }

    /// The local factor at a prime `p >= 5`; positive and `1 + O(1/p)`.
    pub fn local_factor(self, p: u64, reps: Option<&QuadReps>) -> f64 {
        debug_assert!(p >= 5);
        let pf = p as f64;
        let split_quad = |t: f64| (1.0 + 1.0 / pf) * (1.0 + (t - 1.0) / (pf * pf - t + 1.0));
        let inert_quad = || (1.0 - 1.0 / pf) / (1.0 - 1.0 / (pf * pf * pf));
        match self {
            ProductConstant::C2 => {
                if p % 12 == 1 {
                    libm::pow(1.0 - 1.0 / pf, -1.5)
                } else {
                    1.0 / ((1.0 + 1.0 / pf) * libm::sqrt(1.0 - 1.0 / pf))
                }
            }
            ProductConstant::D2 => {
                if p % 12 == 1 {
                    (1.0 + 1.0 / pf) / ((1.0 - 1.0 / pf) * (1.0 - 1.0 / pf))
                } else {
                    1.0 / (1.0 + 1.0 / pf)
                }
            }
            ProductConstant::E2 => {
                if p % 8 == 1 {
                    (1.0 + 1.0 / pf) / ((1.0 - 1.0 / pf) * (1.0 - 1.0 / pf))
                } else {
                    1.0 / (1.0 + 1.0 / pf)
                }
            }
            ProductConstant::C4 => {
                if p % 6 == 1 {
                    let (x, y) = reps.expect("reps for split prime").xy.expect("x,y data");
                    split_quad(2.0 * ((x * x) as f64 - 3.0 * (y * y) as f64))
                } else {
                    inert_quad()
                }
            }
            ProductConstant::D4 => {
                if p % 4 == 1 {
                    let (u, v) = reps.expect("reps for split prime").uv.expect("u,v data");
                    split_quad(2.0 * ((u * u) as f64 - (v * v) as f64))
                } else {
                    inert_quad()
                }
            }
            ProductConstant::E4 => {
                if p % 3 == 1 {
                    let (z, w) = reps.expect("reps for split prime").zw.expect("z,w data");
                    split_quad(((z * z) as f64 - 27.0 * (w * w) as f64) / 2.0)
                } else {
                    inert_quad()
                }
            }
        }
    }
}

/// Truncated Euler product over primes `5 <= p <= limit`.
///
/// Returns the final value and eight checkpoints at `limit / 2^k` for
/// `k = 7 .. 0`; each checkpoint records the running value just after the
/// first prime at or past its threshold. `primes` must contain all primes up
/// to `limit` in order.
pub fn euler_product_partial(
    which: ProductConstant,
    limit: u64,
    primes: &[u64],
    cache: &mut RepCache,
) -> (f64, Vec<(u64, f64)>) {
    assert!(limit >= 10_000, "prime limit {limit} below 10^4");
    let thresholds: Vec<u64> = (0..8).rev().map(|k| limit >> k).collect();
    let prefactor = which.prefactor();
    let mut log_sum = 0.0f64;
    let mut checkpoints: Vec<(u64, f64)> = Vec::with_capacity(8);
    let mut next = 0usize;
    for &p in primes {
        if p < 5 {
            continue;
        }
        if p > limit {
            break;
        }
        let local = if which.needs_reps(p) {
            let reps = cache.get(p);
            which.local_factor(p, Some(&reps))
        } else {
            which.local_factor(p, None)
        };
        log_sum += libm::log(local);
        while next < thresholds.len() && p >= thresholds[next] {
            checkpoints.push((thresholds[next], prefactor * libm::exp(log_sum)));
            next += 1;
        }
    }
    let value = prefactor * libm::exp(log_sum);
    while next < thresholds.len() {
        checkpoints.push((thresholds[next], value));
        next += 1;
    }
    (value, checkpoints)
}

/// One pass of Aitken's delta-squared over the checkpoint values.
///
/// Returns the last accelerated value and `|estimate - last checkpoint|` as
/// an error guess. Triples with a vanishing second difference fall back to
/// the plain value; if every triple degenerates, the error guess is the last
/// first difference instead.
pub fn extrapolate(values: &[f64]) -> (f64, f64) {
    assert!(values.len() >= 4, "need at least 4 checkpoints");
    let mut accelerated = values[2];
    let mut any = false;
    for w in values.windows(3) {
        let (x0, x1, x2) = (w[0], w[1], w[2]);
        let denom = x2 - 2.0 * x1 + x0;
        let scale = libm::fabs(x0) + libm::fabs(x1) + libm::fabs(x2);
        if libm::fabs(denom) > f64::EPSILON * scale {
            let dx = x2 - x1;
            accelerated = x2 - dx * dx / denom;
            any = true;
        } else {
            accelerated = x2;
        }
    }
    let last = values[values.len() - 1];
    let error_guess = if any {
        libm::fabs(accelerated - last)
    } else {
        libm::fabs(last - values[values.len() - 2])
    };
    (accelerated, error_guess)
}

/// One of the three self-dual weight-3 newforms with eta-product
/// coefficients: levels 12, 16, and 27.
pub struct LSeriesSpec {
    pub level: u32,
    /// L(2), truncated from the 25-digit literature value.
    pub reference: f64,
    /// Eta-product summands `(scalar, factors)`; each aligns at an integer
    /// power of q and the combination starts at q^1 with coefficient 1.
    summands: &'static [(i64, &'static [(u64, u32)])],
}

static LEVEL_12: LSeriesSpec = LSeriesSpec {
    level: 12,
    reference: 0.7372929961855962,
    summands: &[(1, &[(2, 3), (6, 3)])],
};

static LEVEL_16: LSeriesSpec = LSeriesSpec {
    level: 16,
    reference: 0.8593982272525466,
    summands: &[(1, &[(4, 6)])],
};

static LEVEL_27: LSeriesSpec = LSeriesSpec {
    level: 27,
    reference: 1.0403374913367121,
    summands: &[(1, &[(3, 5), (9, 1)]), (9, &[(3, 2), (9, 1), (27, 3)])],
};

pub fn l_series_specs() -> [&'static LSeriesSpec; 3] {
    [&LEVEL_12, &LEVEL_16, &LEVEL_27]
}

impl LSeriesSpec {
    pub fn for_level(level: u32) -> Option<&'static LSeriesSpec> {
        l_series_specs().into_iter().find(|s| s.level == level)
    }
}

/// Fourier coefficients `c_0 = 0, c_1, ..., c_m` of the cusp form.
///
/// Each eta-product summand is expanded and shifted by its q-prefactor
/// exponent, which must be a whole number; the combination is normalized so
/// that `c_1 = 1` (asserted).
pub fn cusp_form_coefficients(spec: &LSeriesSpec, m: usize) -> CoeffSeries {
    assert!(m >= 1);
    let mut out = alloc::vec![BigInt::zero(); m + 1];
    for &(scalar, factors) in spec.summands {
        let eta = EtaProduct::new(factors.to_vec());
        let exponent = q_prefactor_exponent(&eta);
        assert!(
            exponent.is_integer(),
            "eta product q-exponent {exponent} is not a whole number"
        );
        let shift = *exponent.numer() as usize;
        if shift > m {
            continue;
        }
        let expansion = expand_eta_product(&eta, m - shift);
        for (i, c) in expansion.coeffs().iter().enumerate() {
            out[shift + i] += c * scalar;
        }
    }
    assert!(out[1].is_one(), "cusp form not normalized: c_1 = {}", out[1]);
    CoeffSeries::truncated(out)
}

/// The prime coefficient predicted by the quadratic-form Euler factor:
/// `2(x^2 - 3y^2)` at level 12, `2(u^2 - v^2)` at level 16,
/// `(z^2 - 27w^2)/2` at level 27 on the split classes, zero on inert ones.
pub fn predicted_prime_coefficient(spec: &LSeriesSpec, p: u64, cache: &mut RepCache) -> BigInt {
    assert!(u64::from(spec.level) % p != 0, "prime {p} divides the level");
    let split = match spec.level {
        12 => p % 6 == 1,
        16 => p % 4 == 1,
        27 => p % 3 == 1,
        _ => unreachable!(),
    };
    if !split {
        return BigInt::zero();
    }
    let reps = cache.get(p);
    let big = BigInt::from;
    match spec.level {
        12 => {
            let (x, y) = reps.xy.expect("x,y data");
            2 * (big(x * x) - 3 * big(y * y))
        }
        16 => {
            let (u, v) = reps.uv.expect("u,v data");
            2 * (big(u * u) - big(v * v))
        }
        27 => {
            let (z, w) = reps.zw.expect("z,w data");
            (big(z * z) - 27 * big(w * w)) / 2
        }
        _ => unreachable!(),
    }
}

/// True iff the expanded coefficient at a prime index matches the Euler
/// factor prediction. `coeffs` must come from [`cusp_form_coefficients`].
pub fn verify_euler_factor(
    spec: &LSeriesSpec,
    p: u64,
    coeffs: &CoeffSeries,
    cache: &mut RepCache,
) -> Result<bool, Error> {
    coeffs.check_len(p as usize)?;
    let predicted = predicted_prime_coefficient(spec, p, cache);
    Ok(coeffs.coeffs()[p as usize] == predicted)
}

/// L(2) by the smoothed approximate functional equation.
///
/// For a self-dual weight-3 form of level N with root number +1, the
/// completed function `(sqrt(N)/2pi)^s Gamma(s) L(s)` is symmetric about
/// s = 3/2, which gives
/// `L(2) = sum c_n e^(-n/Q) (1/n^2 + 2/(Qn))` with `Q = sqrt(N)/2pi`.
/// The assumed root number is cross-checked against plain Abel summation
/// `sum c_n n^(-2) e^(-n/X)` with `X = m/10`; a discrepancy above 10^-3
/// is reported as an error, never corrected silently. The Abel side carries
/// a bias of roughly `10 L(1)/m`, so `m` should be 20000 or more; the
/// smoothed side itself converges within the first hundred terms.
pub fn lvalue_at_2(spec: &LSeriesSpec, m: usize) -> Result<f64, Error> {
    let coeffs = cusp_form_coefficients(spec, m);
    let q_scale = libm::sqrt(f64::from(spec.level)) / (2.0 * core::f64::consts::PI);
    let x_scale = m as f64 / 10.0;
    let mut smoothed = 0.0f64;
    let mut abel = 0.0f64;
    for (n, c) in coeffs.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let cf = c.to_f64().expect("coefficient out of f64 range");
        let nf = n as f64;
        smoothed += cf * libm::exp(-nf / q_scale) * (1.0 / (nf * nf) + 2.0 / (q_scale * nf));
        abel += cf / (nf * nf) * libm::exp(-nf / x_scale);
    }
    if libm::fabs(smoothed - abel) > 1e-3 {
        return Err(Error::RootNumberCheck {
            level: spec.level,
            smoothed,
            abel,
        });
    }
    Ok(smoothed)
}

/// `sum_{n<=N} a_n^2 / N^k` with the exponent from the law table.
pub fn empirical_mean_square(
    kind: SeriesKind,
    series: &CoeffSeries,
    n: usize,
) -> Result<f64, Error> {
    normalized_ratio(kind, Statistic::SquareSum, series, n)
}
