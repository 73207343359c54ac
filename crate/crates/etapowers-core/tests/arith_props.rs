use proptest::prelude::*;

use etapowers_core::arith::{
    cornacchia, factorize, mod_pow, parse_prime_cache, quad_reps, render_prime_cache,
    residue_flags, sieve, sqrt_mod_prime, RepCache,
};

fn is_prime_naive(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn factorize_reconstructs(n in 1u64..5_000_000) {
        let f = factorize(n);
        let mut prod = 1u64;
        let mut last = 0u64;
        for &(p, e) in &f.pairs {
            prop_assert!(p > last, "prime factors ascend");
            last = p;
            prop_assert!(is_prime_naive(p), "{p} claimed prime");
            prop_assert!(e >= 1);
            prod *= p.pow(e);
        }
        prop_assert_eq!(prod, n);
    }

    #[test]
    fn mod_pow_agrees_with_naive(b in 0u64..1000, e in 0u64..60, m in 1u64..10_000) {
        let mut naive = 1u64 % m;
        for _ in 0..e {
            naive = naive * b % m;
        }
        prop_assert_eq!(mod_pow(b, e, m), naive);
    }

    #[test]
    fn sqrt_mod_is_a_root_or_absent(a in 0u64..100_000, idx in 0usize..64) {
        let primes = sieve(1000).unwrap();
        let odd = &primes[1..];
        let p = odd[idx % odd.len()];
        let n = a % p;
        match sqrt_mod_prime(n, p) {
            Some(r) => prop_assert_eq!(r * r % p, n),
            None => {
                let exists = (0..p).any(|r| r * r % p == n);
                prop_assert!(!exists, "missed root of {n} mod {p}");
            }
        }
    }

    #[test]
    fn cornacchia_solutions_check_out(d in prop::sample::select(vec![1u64, 3, 27]), m in 2u64..5000) {
        if let Some((x, y)) = cornacchia(d, m) {
            prop_assert_eq!(x * x + d * y * y, m);
            prop_assert!(y > 0);
        }
    }
}

#[test]
fn cornacchia_never_misses_a_represented_prime() {
    for p in sieve(5000).unwrap() {
        if p % 4 == 1 {
            let (x, y) = cornacchia(1, p).expect("p = 1 mod 4 is a sum of two squares");
            assert_eq!(x * x + y * y, p);
        }
        if p % 3 == 1 {
            let (x, y) = cornacchia(3, p).expect("p = 1 mod 3 is x^2 + 3y^2");
            assert_eq!(x * x + 3 * y * y, p);
        }
    }
}

#[test]
fn quad_reps_match_exhaustive_search() {
    for p in sieve(10_000).unwrap() {
        let reps = quad_reps(p);
        if p % 4 == 1 {
            let (u, v) = reps.uv.expect("uv present");
            assert_eq!(u * u + v * v, p);
            assert!(u % 2 == 1 && v % 2 == 0, "u odd, v even for p = {p}");
            let mut found = false;
            let mut a = 1;
            while a * a <= p {
                let rest = p - a * a;
                let b = rest.isqrt();
                if b * b == rest && (a, b) == (u.min(v), u.max(v)) {
                    found = true;
                }
                a += 1;
            }
            assert!(found, "u^2 + v^2 = {p} not confirmed by search");
        } else {
            assert!(reps.uv.is_none());
        }
        if p % 3 == 1 {
            let (x, y) = reps.xy.expect("xy present");
            assert_eq!(x * x + 3 * y * y, p);
            let (z, w) = reps.zw.expect("zw present");
            assert_eq!(z * z + 27 * w * w, 4 * p);
            let mut count_xy = 0;
            let mut a = 1;
            while a * a <= p {
                let rest = p - a * a;
                if rest % 3 == 0 {
                    let b2 = rest / 3;
                    let b = b2.isqrt();
                    if b > 0 && b * b == b2 {
                        count_xy += 1;
                    }
                }
                a += 1;
            }
            assert_eq!(count_xy, 1, "x^2 + 3y^2 = {p} has a unique positive solution");
        } else {
            assert!(reps.xy.is_none() && reps.zw.is_none());
        }
    }
}

#[test]
fn residue_flags_land_on_signs() {
    for p in sieve(20_000).unwrap() {
        if p < 5 {
            continue;
        }
        let flags = residue_flags(p);
        assert_eq!(flags.quartic.is_some(), p % 12 == 1);
        assert_eq!(flags.octic.is_some(), p % 8 == 1);
        assert_eq!(flags.cubic.is_some(), p % 6 == 1);
        if let Some(s) = flags.quartic {
            assert!(s == 1 || s == -1);
        }
        if let Some(s) = flags.octic {
            assert!(s == 1 || s == -1);
        }
    }
}

#[test]
fn sieve_totals_are_right() {
    assert_eq!(sieve(1_000_000).unwrap().len(), 78_498);
    assert_eq!(sieve(100_000).unwrap().len(), 9_592);
}

#[test]
fn rep_cache_returns_same_data() {
    let mut cache = RepCache::new();
    let direct = quad_reps(97);
    assert_eq!(cache.get(97), direct);
    assert_eq!(cache.get(97), direct);
}

#[test]
fn prime_cache_text_round_trips() {
    let primes = sieve(50_000).unwrap();
    let text = render_prime_cache(&primes, 50_000);
    assert_eq!(parse_prime_cache(&text, 50_000).as_deref(), Some(&primes[..]));
    // a larger cache serves a smaller request
    let small = parse_prime_cache(&text, 1000).expect("subset parse");
    assert_eq!(small, sieve(1000).unwrap());
    // but a smaller cache refuses a larger request
    assert!(parse_prime_cache(&text, 60_000).is_none());
    // and corruption is caught
    assert!(parse_prime_cache(&text.replace("ETAPRIMES", "PRIMES"), 1000).is_none());
    let swapped = text.replace("\n5\n", "\n900001\n");
    assert!(parse_prime_cache(&swapped, 50_000).is_none(), "order violation rejected");
}
