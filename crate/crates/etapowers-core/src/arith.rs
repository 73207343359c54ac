//! Primes, factorization, and quadratic-form representations.
//!
//! Every multiplicative formula in [`crate::family`] is parameterized by data
//! attached to a prime: its residue class, the sign of a power-residue test,
//! and the representations `p = u^2 + v^2` (u odd), `p = x^2 + 3y^2`, and
//! `4p = z^2 + 27w^2`. This module computes all of it deterministically:
//! Tonelli-Shanks for square roots mod p, Cornacchia descent for the
//! representations, trial division for factorization.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_integer::Roots;

use crate::Error;

/// Documented ceiling for [`sieve`].
pub const SIEVE_LIMIT_MAX: u64 = 1_000_000_000;

/// All primes `<= limit`, ascending. Odd-only sieve of Eratosthenes.
pub fn sieve(limit: u64) -> Result<Vec<u64>, Error> {
    if !(2..=SIEVE_LIMIT_MAX).contains(&limit) {
        return Err(Error::LimitOutOfRange {
            limit,
            max: SIEVE_LIMIT_MAX,
        });
    }
    let n = limit as usize;
    // index i stands for the odd number 2i + 1
    let mut composite = vec![false; n / 2 + 1];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= n {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < composite.len() {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = vec![2u64];
    for (i, &c) in composite.iter().enumerate().skip(1) {
        if !c && 2 * i + 1 <= n {
            primes.push((2 * i + 1) as u64);
        }
    }
    Ok(primes)
}

/// Prime factorization as ascending `(p, e)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub pairs: Vec<(u64, u32)>,
}

/// Factorize by trial division over a 6k+-1 wheel. `factorize(1)` is empty.
pub fn factorize(n: u64) -> Factorization {
    assert!((1..1u64 << 63).contains(&n), "argument {n} out of range");
    let mut pairs = Vec::new();
    let mut m = n;
    for p in [2u64, 3] {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    }
    let mut d = 5u64;
    let mut step = 2u64;
    while d * d <= m {
        let mut e = 0;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        if e > 0 {
            pairs.push((d, e));
        }
        d += step;
        step = 6 - step;
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Factorization { pairs }
}

/// `b^e mod m` by binary exponentiation.
pub fn mod_pow(b: u64, e: u64, m: u64) -> u64 {
    assert!(m >= 2);
    let m = m as u128;
    let mut base = b as u128 % m;
    let mut acc = 1u128;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// A square root of `n` mod an odd prime `p` (Tonelli-Shanks), or `None` when
/// `n` is a quadratic nonresidue.
///
/// The search loops are bounded so that a composite `p` degrades to `None`
/// instead of spinning; callers passing composites get no root, never a hang.
pub fn sqrt_mod_prime(n: u64, p: u64) -> Option<u64> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(n);
    }
    if mod_pow(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(n, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while mod_pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
        if z == p {
            return None;
        }
    }
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(n, q, p);
    let mut r = mod_pow(n, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mod_pow(t2, 2, p);
            i += 1;
            if i >= m {
                return None;
            }
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = mod_pow(b, 2, p);
        t = (t as u128 * c as u128 % p as u128) as u64;
        r = (r as u128 * b as u128 % p as u128) as u64;
    }
    Some(r)
}

/// Positive integers `(x, y)` with `x^2 + d*y^2 = m`, or `None` when no such
/// pair exists.
///
/// Classical Cornacchia descent from a square root of `-d` mod `m`. Supported
/// moduli are odd primes and `4p` for odd primes `p`; these cover every
/// representation used by the coefficient formulas. Both square-root choices
/// are descended, since only one of them reaches a given solution.
pub fn cornacchia(d: u64, m: u64) -> Option<(u64, u64)> {
    if d == 0 || m <= d {
        return None;
    }
    let mut roots: Vec<u64> = Vec::with_capacity(4);
    if m % 2 == 1 {
        let s = sqrt_mod_prime((m - d % m) % m, m)?;
        roots.push(s);
        roots.push(m - s);
    } else {
        if m % 4 != 0 {
            return None;
        }
        let p = m / 4;
        // an odd root r of r^2 = -d automatically satisfies the congruence
        // mod 4 when -d = 1 (mod 4); -d = 0 (mod 4) never happens for odd d
        if p % 2 == 0 || d % 4 != 3 {
            return None;
        }
        let s = sqrt_mod_prime((p - d % p) % p, p)?;
        for s0 in [s, p - s] {
            let r = if s0 % 2 == 1 { s0 } else { s0 + p };
            roots.push(r % m);
            roots.push((m - r % m) % m);
        }
    }
    let bound = m.sqrt();
    for r0 in roots {
        if r0 == 0 || (r0 as u128 * r0 as u128 + d as u128) % m as u128 != 0 {
            continue;
        }
        let r = if r0 <= m / 2 { m - r0 } else { r0 };
        let (mut a, mut b) = (m, r);
        while b > bound {
            let t = a % b;
            a = b;
            b = t;
        }
        if b == 0 {
            continue;
        }
        let rem = m - b * b;
        if rem % d != 0 {
            continue;
        }
        let y2 = rem / d;
        let y = y2.sqrt();
        if y > 0 && y * y == y2 {
            return Some((b, y));
        }
    }
    None
}

/// The quadratic-form data of a prime.
///
/// Each field is present exactly when its residue condition holds and then
/// carries the unique normalized representation:
/// `uv` for `p = 1 (mod 4)` with `u^2 + v^2 = p`, `u` odd, `v` even;
/// `xy` for `p = 1 (mod 3)` with `x^2 + 3y^2 = p`;
/// `zw` for `p = 1 (mod 3)` with `z^2 + 27w^2 = 4p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadReps {
    pub p: u64,
    pub uv: Option<(u64, u64)>,
    pub xy: Option<(u64, u64)>,
    pub zw: Option<(u64, u64)>,
}

/// Compute the representations of a prime via [`cornacchia`].
///
/// Panics if Cornacchia fails on a prime whose residue class guarantees a
/// representation; that would be an implementation bug.
pub fn quad_reps(p: u64) -> QuadReps {
    let uv = if p % 4 == 1 {
        let (x, y) = cornacchia(1, p)
            .unwrap_or_else(|| panic!("no representation u^2 + v^2 for prime {p}"));
        let (u, v) = if x % 2 == 1 { (x, y) } else { (y, x) };
        assert!(u * u + v * v == p && u % 2 == 1 && v % 2 == 0);
        Some((u, v))
    } else {
        None
    };
    let (xy, zw) = if p % 3 == 1 {
        let (x, y) = cornacchia(3, p)
            .unwrap_or_else(|| panic!("no representation x^2 + 3y^2 for prime {p}"));
        assert!(x * x + 3 * y * y == p);
        // 4p = z^2 + 27w^2 is imprimitive exactly when 3 | y; the primitive
        // core then represents p itself, so descend on p and double
        let (z, w) = cornacchia(27, 4 * p)
            .or_else(|| cornacchia(27, p).map(|(z, w)| (2 * z, 2 * w)))
            .unwrap_or_else(|| panic!("no representation z^2 + 27w^2 for prime {p}"));
        assert!(z * z + 27 * w * w == 4 * p);
        (Some((x, y)), Some((z, w)))
    } else {
        (None, None)
    };
    QuadReps { p, uv, xy, zw }
}

/// Results of the power-residue tests that choose between formula branches.
///
/// `quartic` is the sign of `(-3)^((p-1)/4)` for `p = 1 (mod 12)`, `octic` the
/// sign of `(-4)^((p-1)/8)` for `p = 1 (mod 8)`, and `cubic` records whether
/// `2^((p-1)/3) = 1 (mod p)` for `p = 1 (mod 6)`. The first two tests always
/// land on +-1; anything else panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueFlags {
    pub quartic: Option<i8>,
    pub octic: Option<i8>,
    pub cubic: Option<bool>,
}

/// Evaluate the residue tests applicable to an odd prime.
pub fn residue_flags(p: u64) -> ResidueFlags {
    let sign = |base: u64, e: u64| -> i8 {
        let r = mod_pow(base, e, p);
        if r == 1 {
            1
        } else if r == p - 1 {
            -1
        } else {
            panic!("residue test {base}^{e} mod {p} = {r}, expected a sign");
        }
    };
    ResidueFlags {
        quartic: (p % 12 == 1).then(|| sign(p - 3, (p - 1) / 4)),
        octic: (p % 8 == 1).then(|| sign(p - 4, (p - 1) / 8)),
        cubic: (p % 6 == 1).then(|| mod_pow(2, (p - 1) / 3, p) == 1),
    }
}

/// Memoized [`quad_reps`] lookups. Every family touching a prime asks for the
/// same data, so one cache is shared per run.
#[derive(Debug, Default)]
pub struct RepCache {
    map: BTreeMap<u64, QuadReps>,
}

impl RepCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: u64) -> QuadReps {
        *self.map.entry(p).or_insert_with(|| quad_reps(p))
    }
}

/// Parse a prime cache file: first line `ETAPRIMES 1 <limit>`, then ascending
/// primes, one per line. Returns the primes `<= limit` only when the header
/// limit covers the request; any malformed content yields `None` so callers
/// fall back to sieving.
pub fn parse_prime_cache(text: &str, limit: u64) -> Option<Vec<u64>> {
    let mut lines = text.lines();
    let header = lines.next()?;
    let mut parts = header.split_ascii_whitespace();
    if parts.next()? != "ETAPRIMES" || parts.next()? != "1" {
        return None;
    }
    let file_limit: u64 = parts.next()?.parse().ok()?;
    if parts.next().is_some() || file_limit < limit {
        return None;
    }
    let mut primes = Vec::new();
    let mut last = 0u64;
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let p: u64 = line.parse().ok()?;
        if p <= last {
            return None;
        }
        last = p;
        if p <= limit {
            primes.push(p);
        }
    }
    if primes.first() != Some(&2) {
        return None;
    }
    Some(primes)
}

/// Render a prime cache file for [`parse_prime_cache`].
pub fn render_prime_cache(primes: &[u64], limit: u64) -> String {
    let mut out = String::with_capacity(primes.len() * 8 + 32);
    let _ = writeln!(out, "ETAPRIMES 1 {limit}");
    for p in primes {
        let _ = writeln!(out, "{p}");
    }
    out
}
