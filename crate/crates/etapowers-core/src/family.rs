//! Multiplicative coefficient formulas, family by family.
//!
//! For small exponents `l` the coefficients of `prod (1 - q^m)^l` (and of a few
//! companion products) are values of a multiplicative function `f` along an
//! arithmetic progression: `a_n = f(An + B) / scale`. Each family fixes the
//! eta product, the map `(A, B)`, the scale, and a rule for `f(p^r)`:
//!
//! - inert residue classes get explicit tables (zeros, pure powers of `p`,
//!   alternating signs, or the `r mod 3` pattern),
//! - split classes start from an `f(p)` built out of the quadratic-form data
//!   of `p` and continue by the degree-2 recurrence
//!   `f(p^r) = f(p) f(p^(r-1)) - p^w f(p^(r-2))`,
//! - `L14` takes values in `Z[sqrt(-3)]` and flips the recurrence sign on the
//!   class `p = 7 (mod 12)`.
//!
//! `coefficient_26` covers the 26th power at prime arguments only.

use alloc::vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorize, residue_flags, QuadReps, RepCache, ResidueFlags};
use crate::series::EtaProduct;

/// An element `a + b sqrt(-3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        QuadInt { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QuadInt::new(BigInt::from(a), BigInt::from(b))
    }

    pub fn one() -> Self {
        QuadInt::new(BigInt::one(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.a.is_zero()
    }

    /// Ring product: `(a1 + b1 s)(a2 + b2 s) = a1 a2 - 3 b1 b2 + (a1 b2 + a2 b1) s`
    /// with `s = sqrt(-3)`.
    pub fn mul(&self, other: &QuadInt) -> QuadInt {
        QuadInt::new(
            &self.a * &other.a - 3 * (&self.b * &other.b),
            &self.a * &other.b + &other.a * &self.b,
        )
    }

    pub fn scale(&self, k: &BigInt) -> QuadInt {
        QuadInt::new(&self.a * k, &self.b * k)
    }
}

/// A multiplicative value: an integer, or an element of `Z[sqrt(-3)]` for
/// the 14th power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Quad(QuadInt),
}

impl Value {
    pub fn one() -> Self {
        Value::Int(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Int(n) => n.is_zero(),
            Value::Quad(q) => q.is_zero(),
        }
    }

    pub fn mul(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Int(a), Value::Quad(q)) | (Value::Quad(q), Value::Int(a)) => {
                Value::Quad(q.scale(a))
            }
            (Value::Quad(a), Value::Quad(b)) => Value::Quad(a.mul(b)),
        }
    }

    /// The integer content, panicking on a `Z[sqrt(-3)]` value.
    pub fn into_int(self) -> BigInt {
        match self {
            Value::Int(n) => n,
            Value::Quad(q) => panic!("expected integer value, got {:?}", q),
        }
    }
}

/// The twelve series with a complete multiplicative representation.
///
/// `L<l>` is `prod (1 - q^m)^l`; the `V1`/`V2` variants replace half of the
/// factors by `(1 - q^(2m))` resp. `(1 - q^(3m))` at the same total weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    L1,
    L2,
    L2V1,
    L2V2,
    L3,
    L4,
    L4V1,
    L4V2,
    L6,
    L8,
    L10,
    L14,
}

pub const FAMILIES: [Family; 12] = [
    Family::L1,
    Family::L2,
    Family::L2V1,
    Family::L2V2,
    Family::L3,
    Family::L4,
    Family::L4V1,
    Family::L4V2,
    Family::L6,
    Family::L8,
    Family::L10,
    Family::L14,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::L1 => "L1",
            Family::L2 => "L2",
            Family::L2V1 => "L2V1",
            Family::L2V2 => "L2V2",
            Family::L3 => "L3",
            Family::L4 => "L4",
            Family::L4V1 => "L4V1",
            Family::L4V2 => "L4V2",
            Family::L6 => "L6",
            Family::L8 => "L8",
            Family::L10 => "L10",
            Family::L14 => "L14",
        }
    }

    /// The eta product whose expansion the family describes.
    pub fn eta(self) -> EtaProduct {
        match self {
            Family::L1 => EtaProduct::single(1, 1),
            Family::L2 => EtaProduct::single(1, 2),
            Family::L2V1 => EtaProduct::new(vec![(1, 1), (2, 1)]),
            Family::L2V2 => EtaProduct::new(vec![(1, 1), (3, 1)]),
            Family::L3 => EtaProduct::single(1, 3),
            Family::L4 => EtaProduct::single(1, 4),
            Family::L4V1 => EtaProduct::new(vec![(1, 2), (2, 2)]),
            Family::L4V2 => EtaProduct::new(vec![(1, 2), (3, 2)]),
            Family::L6 => EtaProduct::single(1, 6),
            Family::L8 => EtaProduct::single(1, 8),
            Family::L10 => EtaProduct::single(1, 10),
            Family::L14 => EtaProduct::single(1, 14),
        }
    }

    /// `(A, B)` in the coefficient map `a_n = f(An + B) / scale`.
    pub fn argument_map(self) -> (u64, u64) {
        match self {
            Family::L1 => (24, 1),
            Family::L2 => (12, 1),
            Family::L2V1 => (8, 1),
            Family::L2V2 => (6, 1),
            Family::L3 => (8, 1),
            Family::L4 => (6, 1),
            Family::L4V1 => (4, 1),
            Family::L4V2 => (3, 1),
            Family::L6 => (4, 1),
            Family::L8 => (3, 1),
            Family::L10 => (12, 5),
            Family::L14 => (12, 7),
        }
    }
}

// branch signs for the split-class initial values

/// +1 iff `x = 1 (mod 3)` (the 4th and 8th power sign).
fn delta_sign(x: u64) -> i64 {
    if x % 3 == 1 {
        1
    } else {
        -1
    }
}

/// `(-1)^((u + v - 1)/2)`.
fn eps_sign(u: u64, v: u64) -> i64 {
    if ((u + v - 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// -1 iff `z = 1 (mod 3)` (the sign attached to `4p = z^2 + 27w^2`).
fn delta_tilde_sign(z: u64) -> i64 {
    if z % 3 == 1 {
        -1
    } else {
        1
    }
}

/// -1 iff exactly one of `u = 1 (mod 6)`, `v = 4 (mod 6)` holds.
fn phi_sign(u: u64, v: u64) -> i64 {
    if (u % 6 == 1) != (v % 6 == 4) {
        -1
    } else {
        1
    }
}

/// +1 iff `u = 3 (mod 6)`.
fn theta_sign(u: u64) -> i64 {
    if u % 6 == 3 {
        1
    } else {
        -1
    }
}

/// -1 iff exactly one of `x = 2 (mod 6)`, `y = 1 (mod 4)` holds.
fn psi_sign(x: u64, y: u64) -> i64 {
    if (x % 6 == 2) != (y % 4 == 1) {
        -1
    } else {
        1
    }
}

/// `(-1)^(y/2)` for `x = 5, 7 (mod 12)`, the opposite sign otherwise.
fn omega_sign(x: u64, y: u64) -> i64 {
    let s = if (y / 2) % 2 == 0 { 1 } else { -1 };
    if x % 12 == 5 || x % 12 == 7 {
        s
    } else {
        -s
    }
}

/// `(-1)^(r/2) * p^(k * r/2)` for even `r`, zero for odd `r`.
fn alternating_power(p: u64, r: u32, k: u32) -> BigInt {
    if r % 2 != 0 {
        return BigInt::zero();
    }
    let mag = BigInt::from(p).pow(k * (r / 2));
    if (r / 2) % 2 == 0 {
        mag
    } else {
        -mag
    }
}

/// `p^(k * r/2)` for even `r`, zero for odd `r`.
fn plain_power(p: u64, r: u32, k: u32) -> BigInt {
    if r % 2 != 0 {
        BigInt::zero()
    } else {
        BigInt::from(p).pow(k * (r / 2))
    }
}

/// `f(p^r) = f(p) f(p^(r-1)) - norm * f(p^(r-2))` from `f(p^0) = 1`.
fn hecke(fp: &BigInt, r: u32, norm: &BigInt) -> BigInt {
    let mut prev = BigInt::one();
    if r == 0 {
        return prev;
    }
    let mut cur = fp.clone();
    for _ in 1..r {
        let next = fp * &cur - norm * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The same recurrence over `Z[sqrt(-3)]`; a negative `norm` encodes the
/// sign-flipped variant `f(p^r) = f(p) f(p^(r-1)) + |norm| f(p^(r-2))`.
fn hecke_quad(fp: &QuadInt, r: u32, norm: &BigInt) -> QuadInt {
    let mut prev = QuadInt::one();
    if r == 0 {
        return prev;
    }
    let mut cur = fp.clone();
    for _ in 1..r {
        let prod = fp.mul(&cur);
        let next = QuadInt::new(&prod.a - norm * &prev.a, &prod.b - norm * &prev.b);
        prev = cur;
        cur = next;
    }
    cur
}

fn xy_of(reps: &QuadReps) -> (u64, u64) {
    reps.xy
        .unwrap_or_else(|| panic!("missing x^2 + 3y^2 data for prime {}", reps.p))
}

fn uv_of(reps: &QuadReps) -> (u64, u64) {
    reps.uv
        .unwrap_or_else(|| panic!("missing u^2 + v^2 data for prime {}", reps.p))
}

fn zw_of(reps: &QuadReps) -> (u64, u64) {
    reps.zw
        .unwrap_or_else(|| panic!("missing z^2 + 27w^2 data for prime {}", reps.p))
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// `f(p)`: the explicit table value at `r = 1`, which on split classes is the
/// initial condition of the recurrence.
pub fn f_prime(family: Family, p: u64, reps: &QuadReps, flags: &ResidueFlags) -> Value {
    f_prime_power(family, p, 1, reps, flags)
}

/// `f(p^r)` for the given family.
///
/// Unlisted residue classes are zero. The classes carrying quadratic-form data
/// run the degree-2 recurrence; everything else is a closed table.
pub fn f_prime_power(
    family: Family,
    p: u64,
    r: u32,
    reps: &QuadReps,
    flags: &ResidueFlags,
) -> Value {
    if r == 0 {
        return Value::one();
    }
    if family == Family::L14 {
        return Value::Quad(f_prime_power_14(p, r, reps));
    }
    let int = match family {
        Family::L1 => match p % 12 {
            1 | 11 => plain_power(p, r, 0),
            5 | 7 => alternating_power(p, r, 0),
            _ => BigInt::zero(),
        },
        Family::L2 => match p % 12 {
            7 | 11 => plain_power(p, r, 0),
            5 => alternating_power(p, r, 0),
            1 => match flags.quartic.expect("quartic flag for p = 1 (mod 12)") {
                1 => big((r + 1) as u64),
                _ => {
                    let v = big((r + 1) as u64);
                    if r % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                }
            },
            _ => BigInt::zero(),
        },
        Family::L2V1 => {
            if p == 2 {
                // stated for completeness in the source table; arguments
                // 8n + 1 are odd, so never exercised through coefficients
                if r == 1 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                match p % 8 {
                    5 | 7 => plain_power(p, r, 0),
                    3 => alternating_power(p, r, 0),
                    1 => match flags.octic.expect("octic flag for p = 1 (mod 8)") {
                        1 => big((r + 1) as u64),
                        _ => {
                            let v = big((r + 1) as u64);
                            if r % 2 == 0 {
                                v
                            } else {
                                -v
                            }
                        }
                    },
                    _ => BigInt::zero(),
                }
            }
        }
        Family::L2V2 => match p % 6 {
            5 => plain_power(p, r, 0),
            1 => {
                if flags.cubic.expect("cubic flag for p = 1 (mod 6)") {
                    big((r + 1) as u64)
                } else {
                    match r % 3 {
                        0 => BigInt::one(),
                        1 => -BigInt::one(),
                        _ => BigInt::zero(),
                    }
                }
            }
            _ => BigInt::zero(),
        },
        Family::L3 => match p % 4 {
            1 => plain_power(p, r, 1),
            3 => alternating_power(p, r, 1),
            _ => BigInt::zero(),
        },
        Family::L4 => match p % 6 {
            5 => alternating_power(p, r, 1),
            1 => {
                let (x, _) = xy_of(reps);
                let fp = delta_sign(x) * 2 * x as i64;
                hecke(&BigInt::from(fp), r, &big(p))
            }
            _ => BigInt::zero(),
        },
        Family::L4V1 => match p % 4 {
            3 => alternating_power(p, r, 1),
            1 => {
                let (u, v) = uv_of(reps);
                let fp = eps_sign(u, v) * 2 * u as i64;
                hecke(&BigInt::from(fp), r, &big(p))
            }
            _ => BigInt::zero(),
        },
        Family::L4V2 => match p % 3 {
            2 => alternating_power(p, r, 1),
            1 => {
                let (z, _) = zw_of(reps);
                let fp = delta_tilde_sign(z) * z as i64;
                hecke(&BigInt::from(fp), r, &big(p))
            }
            _ => BigInt::zero(),
        },
        Family::L6 => match p % 4 {
            3 => plain_power(p, r, 2),
            1 => {
                let (u, v) = uv_of(reps);
                let fp = 2 * (big(u).pow(2) - big(v).pow(2));
                hecke(&fp, r, &big(p).pow(2))
            }
            _ => BigInt::zero(),
        },
        Family::L8 => match p % 3 {
            2 => alternating_power(p, r, 3),
            1 => {
                let (x, y) = xy_of(reps);
                let fp = delta_sign(x) * 2 * big(x) * (big(x).pow(2) - 9 * big(y).pow(2));
                hecke(&fp, r, &big(p).pow(3))
            }
            _ => BigInt::zero(),
        },
        Family::L10 => {
            if p == 2 || p == 3 {
                BigInt::zero()
            } else {
                match p % 12 {
                    7 | 11 => plain_power(p, r, 4),
                    5 => {
                        let (u, v) = uv_of(reps);
                        let fp = 8 * phi_sign(u, v)
                            * big(u)
                            * big(v)
                            * (big(u).pow(2) - big(v).pow(2));
                        hecke(&fp, r, &big(p).pow(4))
                    }
                    1 => {
                        let (u, v) = uv_of(reps);
                        let two_uv = 2 * big(u) * big(v);
                        let diff = big(u).pow(2) - big(v).pow(2);
                        let fp = 2 * theta_sign(u) * (&two_uv + &diff) * (&two_uv - &diff);
                        hecke(&fp, r, &big(p).pow(4))
                    }
                    _ => BigInt::zero(),
                }
            }
        }
        Family::L14 => unreachable!(),
    };
    Value::Int(int)
}

fn f_prime_power_14(p: u64, r: u32, reps: &QuadReps) -> QuadInt {
    if p == 2 || p == 3 {
        return QuadInt::new(BigInt::zero(), BigInt::zero());
    }
    match p % 12 {
        5 => QuadInt::new(alternating_power(p, r, 6), BigInt::zero()),
        11 => QuadInt::new(plain_power(p, r, 6), BigInt::zero()),
        7 => {
            // purely imaginary f(p); the recurrence adds p^6 f(p^(r-2))
            let (x, y) = xy_of(reps);
            let lead = if ((p - 7) / 12) % 2 == 0 { 12 } else { -12 };
            let b = lead * psi_sign(x, y)
                * big(x)
                * big(y)
                * (big(x).pow(2) - big(y).pow(2))
                * (9 * big(y).pow(2) - big(x).pow(2));
            hecke_quad(&QuadInt::new(BigInt::zero(), b), r, &-big(p).pow(6))
        }
        1 => {
            let (x, y) = xy_of(reps);
            let core = big(x).pow(2) - 3 * big(y).pow(2);
            let six_xy = 6 * big(x) * big(y);
            let a = 2 * omega_sign(x, y) * &core * (&six_xy + &core) * (&six_xy - &core);
            hecke_quad(&QuadInt::new(a, BigInt::zero()), r, &big(p).pow(6))
        }
        _ => QuadInt::new(BigInt::zero(), BigInt::zero()),
    }
}

/// `f(m)` assembled over the factorization of `m`.
pub fn f_of(family: Family, m: u64, cache: &mut RepCache) -> Value {
    let mut acc = Value::one();
    for &(p, e) in &factorize(m).pairs {
        let reps = cache.get(p);
        let flags = residue_flags(p);
        acc = acc.mul(&f_prime_power(family, p, e, &reps, &flags));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// The series coefficient `a_n = f(An + B) / scale`.
///
/// Panics if the divisibility by the scale fails, or if the 14th-power value
/// is not purely imaginary; either would mean a transcription bug in the
/// formula tables.
pub fn coefficient_via_f(family: Family, n: u64, cache: &mut RepCache) -> BigInt {
    let (a, b) = family.argument_map();
    let m = a
        .checked_mul(n)
        .and_then(|an| an.checked_add(b))
        .filter(|&m| m < 1 << 63)
        .unwrap_or_else(|| panic!("argument {a}*{n} + {b} out of range"));
    match f_of(family, m, cache) {
        Value::Int(val) => match family {
            Family::L10 => {
                let (q, rem) = num_integer::Integer::div_rem(&val, &BigInt::from(48));
                assert!(
                    rem.is_zero(),
                    "f({m}) = {val} not divisible by 48 for L10 at n = {n}"
                );
                q
            }
            _ => val,
        },
        Value::Quad(q) => {
            assert!(
                q.is_imaginary(),
                "f({m}) = {:?} not purely imaginary for L14 at n = {n}",
                q
            );
            let (quot, rem) = num_integer::Integer::div_rem(&q.b, &BigInt::from(360));
            assert!(
                rem.is_zero(),
                "f({m}) = {:?} sqrt(-3) part not divisible by 360 at n = {n}",
                q
            );
            quot
        }
    }
}

/// The 26th-power coefficient `a_((p-13)/12)` at a prime argument
/// `p = 1 (mod 12)`:
/// `(-1)^kappa / 1019304` times the product of the six factors
/// `(u^2 - x^2)`, `(v^2 - x^2)`, `((2u +- x)^2 - 9y^2)`, `((2v +- x)^2 - 9y^2)`
/// where `kappa` is whichever of `u`, `v` is divisible by 3.
pub fn coefficient_26(p: u64, cache: &mut RepCache) -> BigInt {
    assert!(p >= 13 && p % 12 == 1, "prime {p} not 1 (mod 12)");
    let reps = cache.get(p);
    let (u, v) = uv_of(&reps);
    let (x, y) = xy_of(&reps);
    assert!(
        (u % 3 == 0) != (v % 3 == 0),
        "exactly one of u, v divisible by 3 at p = {p}"
    );
    let kappa = if u % 3 == 0 { u } else { v };
    let sq = |t: BigInt| t.clone() * t;
    let nine_y2 = 9 * big(y).pow(2);
    let prod: BigInt = (big(u).pow(2) - big(x).pow(2))
        * (big(v).pow(2) - big(x).pow(2))
        * (sq(2 * big(u) + big(x)) - &nine_y2)
        * (sq(2 * big(u) - big(x)) - &nine_y2)
        * (sq(2 * big(v) + big(x)) - &nine_y2)
        * (sq(2 * big(v) - big(x)) - &nine_y2);
    let signed = if kappa % 2 == 0 { prod } else { -prod };
    let (q, rem) = num_integer::Integer::div_rem(&signed, &BigInt::from(1019304));
    assert!(
        rem.is_zero(),
        "26th power product {signed} not divisible by 1019304 at p = {p}"
    );
    q
}

/// Any series the tool can expand: the twelve multiplicative families plus the
/// 12th, 24th, and 26th pure powers, which have no (complete) multiplicative
/// formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Family(Family),
    L12,
    L24,
    L26,
}

pub const SERIES_KINDS: [SeriesKind; 15] = [
    SeriesKind::Family(Family::L1),
    SeriesKind::Family(Family::L2),
    SeriesKind::Family(Family::L2V1),
    SeriesKind::Family(Family::L2V2),
    SeriesKind::Family(Family::L3),
    SeriesKind::Family(Family::L4),
    SeriesKind::Family(Family::L4V1),
    SeriesKind::Family(Family::L4V2),
    SeriesKind::Family(Family::L6),
    SeriesKind::Family(Family::L8),
    SeriesKind::Family(Family::L10),
    SeriesKind::Family(Family::L14),
    SeriesKind::L12,
    SeriesKind::L24,
    SeriesKind::L26,
];

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Family(f) => f.name(),
            SeriesKind::L12 => "L12",
            SeriesKind::L24 => "L24",
            SeriesKind::L26 => "L26",
        }
    }

    pub fn parse(name: &str) -> Option<SeriesKind> {
        SERIES_KINDS.into_iter().find(|k| k.name() == name)
    }

    pub fn eta(self) -> EtaProduct {
        match self {
            SeriesKind::Family(f) => f.eta(),
            SeriesKind::L12 => EtaProduct::single(1, 12),
            SeriesKind::L24 => EtaProduct::single(1, 24),
            SeriesKind::L26 => EtaProduct::single(1, 26),
        }
    }

    pub fn family(self) -> Option<Family> {
        match self {
            SeriesKind::Family(f) => Some(f),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quad_reps;

    fn fpp(family: Family, p: u64, r: u32) -> Value {
        let reps = quad_reps(p);
        f_prime_power(family, p, r, &reps, &residue_flags(p))
    }

    #[test]
    fn f_prime_examples() {
        assert_eq!(fpp(Family::L10, 5, 1), Value::Int(BigInt::from(48)));
        assert_eq!(
            fpp(Family::L14, 7, 1),
            Value::Quad(QuadInt::from_ints(0, 360))
        );
        assert_eq!(fpp(Family::L4, 7, 1), Value::Int(BigInt::from(-4)));
    }

    #[test]
    fn f_prime_power_examples() {
        assert_eq!(fpp(Family::L2, 5, 2), Value::Int(BigInt::from(-1)));
        assert_eq!(fpp(Family::L2, 13, 1), Value::Int(BigInt::from(-2)));
        assert_eq!(fpp(Family::L8, 2, 2), Value::Int(BigInt::from(-8)));
        assert_eq!(fpp(Family::L2V2, 7, 1), Value::Int(BigInt::from(-1)));
    }

    #[test]
    fn f_of_examples() {
        let mut cache = RepCache::new();
        assert_eq!(f_of(Family::L1, 25, &mut cache), Value::Int(BigInt::from(-1)));
        for family in FAMILIES {
            assert_eq!(f_of(family, 1, &mut cache), Value::one());
        }
        assert_eq!(f_of(Family::L3, 49, &mut cache), Value::Int(BigInt::from(-7)));
    }

    #[test]
    fn coefficient_examples() {
        let mut cache = RepCache::new();
        assert_eq!(coefficient_via_f(Family::L10, 0, &mut cache), BigInt::one());
        assert_eq!(
            coefficient_via_f(Family::L14, 1, &mut cache),
            BigInt::from(-14)
        );
        assert_eq!(
            coefficient_via_f(Family::L6, 1, &mut cache),
            BigInt::from(-6)
        );
    }

    #[test]
    fn coefficient_26_base() {
        let mut cache = RepCache::new();
        assert_eq!(coefficient_26(13, &mut cache), BigInt::one());
    }

    #[test]
    fn series_kind_names() {
        for kind in SERIES_KINDS {
            assert_eq!(SeriesKind::parse(kind.name()), Some(kind));
        }
        assert_eq!(SeriesKind::parse("L5"), None);
    }
}
