//! Exact expansion of eta products.
//!
//! Two classical identities give sparse base series:
//!
//! - pentagonal: `prod_m (1 - q^m) = sum_k (-1)^k q^(k(3k+1)/2)` over all
//!   integers `k` (coefficients A010815),
//! - Jacobi cube: `prod_m (1 - q^m)^3 = sum_(k>=0) (-1)^k (2k+1) q^(k(k+1)/2)`
//!   (coefficients A010816).
//!
//! A power `(1 - q^m)^r` is expanded as `floor(r/3)` Jacobi-cube factors plus
//! `r mod 3` pentagonal factors, each with `O(sqrt(N))` support, convolved one
//! at a time into a dense accumulator. Coefficients are exact `BigInt`
//! throughout.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use crate::Error;

/// A product `prod_d prod_m (1 - q^(d*m))^(r_d)` given as `(delta, r)` factors,
/// ascending and distinct in `delta`, all `r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaProduct {
    factors: Vec<(u64, u32)>,
}

impl EtaProduct {
    pub fn new(factors: Vec<(u64, u32)>) -> Self {
        assert!(!factors.is_empty(), "empty eta product");
        for w in factors.windows(2) {
            assert!(w[0].0 < w[1].0, "factors must be ascending in delta");
        }
        for &(delta, r) in &factors {
            assert!(delta >= 1 && r >= 1, "factor ({delta}, {r}) out of range");
        }
        EtaProduct { factors }
    }

    /// The single factor `(1 - q^(delta*m))^r`.
    pub fn single(delta: u64, r: u32) -> Self {
        Self::new(vec![(delta, r)])
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }
}

/// A truncated power series with exact integer coefficients, index `0..=N`.
///
/// `complete` marks series that are whole polynomials rather than truncations;
/// only those may be zero-extended past their length. Base series built by
/// [`pentagonal_series`] and [`jacobi_cube_series`] also carry their sparse
/// `(index, value)` support so convolution can skip zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeries {
    coeffs: Vec<BigInt>,
    complete: bool,
    support: Option<Vec<(usize, i64)>>,
}

impl CoeffSeries {
    /// Wrap a finite polynomial; it may be zero-extended to any length.
    pub fn from_polynomial(coeffs: Vec<BigInt>) -> Self {
        CoeffSeries {
            coeffs,
            complete: true,
            support: None,
        }
    }

    /// Wrap coefficients that truncate an infinite series.
    pub fn truncated(coeffs: Vec<BigInt>) -> Self {
        CoeffSeries {
            coeffs,
            complete: false,
            support: None,
        }
    }

    fn sparse(len: usize, support: Vec<(usize, i64)>, complete: bool) -> Self {
        let mut coeffs = vec![BigInt::zero(); len];
        for &(i, v) in &support {
            coeffs[i] = BigInt::from(v);
        }
        CoeffSeries {
            coeffs,
            complete,
            support: Some(support),
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient at `n`, zero-extending complete series.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Sparse `(index, value)` support when the series was built from one of
    /// the base identities.
    pub fn support(&self) -> Option<&[(usize, i64)]> {
        self.support.as_deref()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<(), Error> {
        if self.len() < n + 1 && !self.complete {
            Err(Error::SeriesTooShort {
                needed: n + 1,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// `prod_m (1 - q^(delta*m))` truncated at index `n`: coefficient `(-1)^k` at
/// `delta * k(3k+1)/2` for every integer `k`, zero elsewhere.
pub fn pentagonal_series(delta: u64, n: usize) -> CoeffSeries {
    let mut support = Vec::new();
    let mut k = 0i64;
    loop {
        let mut hit = false;
        let signs = if k == 0 { &[k][..] } else { &[k, -k][..] };
        for &kk in signs {
            let idx = kk * (3 * kk + 1) / 2;
            debug_assert!(idx >= 0);
            if let Some(scaled) = (idx as u64).checked_mul(delta) {
                if scaled <= n as u64 {
                    support.push((scaled as usize, if kk.rem_euclid(2) == 0 { 1 } else { -1 }));
                    hit = true;
                }
            }
        }
        if !hit && k > 0 {
            break;
        }
        k += 1;
    }
    support.sort_unstable();
    CoeffSeries::sparse(n + 1, support, false)
}

/// `prod_m (1 - q^(delta*m))^3` truncated at index `n`: coefficient
/// `(-1)^k (2k+1)` at `delta * k(k+1)/2` for `k >= 0`, zero elsewhere.
pub fn jacobi_cube_series(delta: u64, n: usize) -> CoeffSeries {
    let mut support = Vec::new();
    let mut k = 0u64;
    loop {
        let idx = match (k * (k + 1) / 2).checked_mul(delta) {
            Some(idx) if idx <= n as u64 => idx,
            _ => break,
        };
        let v = (2 * k + 1) as i64;
        support.push((idx as usize, if k % 2 == 0 { v } else { -v }));
        k += 1;
    }
    CoeffSeries::sparse(n + 1, support, false)
}

/// Cauchy product truncated at index `n`.
///
/// Operands shorter than `n + 1` must be complete polynomials; truncated ones
/// are rejected. Sparse operands are convolved in time proportional to
/// `N * support`, and two sparse operands pairwise in `support_a * support_b`.
pub fn multiply(a: &CoeffSeries, b: &CoeffSeries, n: usize) -> Result<CoeffSeries, Error> {
    a.check_len(n)?;
    b.check_len(n)?;
    let complete = a.complete && b.complete && a.len().saturating_sub(1) + b.len().saturating_sub(1) <= n;
    let coeffs = match (&a.support, &b.support) {
        (Some(sa), Some(sb)) => {
            let mut acc = vec![0i128; n + 1];
            for &(i, va) in sa {
                if i > n {
                    continue;
                }
                for &(j, vb) in sb {
                    if i + j > n {
                        break;
                    }
                    acc[i + j] += va as i128 * vb as i128;
                }
            }
            acc.into_iter().map(BigInt::from).collect()
        }
        (Some(sa), None) => sparse_times_dense(sa, &b.coeffs, n),
        (None, Some(sb)) => sparse_times_dense(sb, &a.coeffs, n),
        (None, None) => {
            let mut out = vec![BigInt::zero(); n + 1];
            for (i, ca) in a.coeffs.iter().enumerate().take(n + 1) {
                if ca.is_zero() {
                    continue;
                }
                for (j, cb) in b.coeffs.iter().enumerate().take(n + 1 - i) {
                    if !cb.is_zero() {
                        out[i + j] += ca * cb;
                    }
                }
            }
            out
        }
    };
    Ok(CoeffSeries {
        coeffs,
        complete,
        support: None,
    })
}

fn sparse_times_dense(sparse: &[(usize, i64)], dense: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for &(i, v) in sparse {
        if i > n {
            continue;
        }
        for (j, c) in dense.iter().enumerate().take(n + 1 - i) {
            if !c.is_zero() {
                out[i + j] += c * v;
            }
        }
    }
    out
}

/// Pointwise integer linear combination `sum_i scalar_i * series_i`, truncated
/// at `n`. All series must be defined to `n` (complete ones are zero-extended).
pub fn linear_combine(terms: &[(i64, &CoeffSeries)], n: usize) -> CoeffSeries {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut complete = true;
    for &(scalar, series) in terms {
        assert!(
            series.len() >= n + 1 || series.is_complete(),
            "operand of length {} not defined to {}",
            series.len(),
            n
        );
        complete &= series.is_complete();
        for (i, c) in series.coeffs.iter().enumerate().take(n + 1) {
            if !c.is_zero() {
                coeffs[i] += c * scalar;
            }
        }
    }
    CoeffSeries {
        coeffs,
        complete,
        support: None,
    }
}

/// Exact expansion of an eta product to index `n`.
///
/// Each factor `(1 - q^(delta*m))^r` contributes `floor(r/3)` Jacobi cubes and
/// `r mod 3` pentagonal series; the sparse factors are multiplied in one at a
/// time, the first pair sparse-by-sparse.
pub fn expand_eta_product(spec: &EtaProduct, n: usize) -> CoeffSeries {
    let mut bases: Vec<CoeffSeries> = Vec::new();
    for &(delta, r) in spec.factors() {
        for _ in 0..r / 3 {
            bases.push(jacobi_cube_series(delta, n));
        }
        for _ in 0..r % 3 {
            bases.push(pentagonal_series(delta, n));
        }
    }
    let mut acc = bases.pop().expect("eta product has at least one factor");
    while let Some(base) = bases.pop() {
        acc = multiply(&base, &acc, n).expect("all factors defined to n");
    }
    acc
}

/// The power of `q` by which the eta product `prod eta(delta t)^r` leads the
/// plain product: `sum delta * r / 24`.
///
/// Fractional in general; integer exactly when the product is a classical
/// cusp-form eta quotient, in which case it aligns Fourier index and series
/// index.
pub fn q_prefactor_exponent(spec: &EtaProduct) -> Ratio<u64> {
    let total: u64 = spec.factors().iter().map(|&(delta, r)| delta * r as u64).sum();
    Ratio::new(total, 24)
}
