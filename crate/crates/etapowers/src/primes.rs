use std::env;
use std::fs;

use anyhow::{anyhow, Context};
use etapowers_core::arith::{parse_prime_cache, render_prime_cache, sieve};

pub const CACHE_ENV: &str = "ETAPOWERS_PRIME_CACHE";

/// All primes up to `limit`, preferring the cache file named by
/// `ETAPOWERS_PRIME_CACHE` when it exists and covers the limit. A stale,
/// malformed, or missing cache is rebuilt by sieving; writing it back is
/// best-effort.
pub fn primes_up_to(limit: u64) -> anyhow::Result<Vec<u64>> {
    let fresh = || sieve(limit).map_err(|e| anyhow!("{e}"));
    match env::var(CACHE_ENV) {
        Ok(path) if !path.is_empty() => {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Some(primes) = parse_prime_cache(&text, limit) {
                    return Ok(primes);
                }
            }
            let primes = fresh().with_context(|| format!("sieving to {limit}"))?;
            let _ = fs::write(&path, render_prime_cache(&primes, limit));
            Ok(primes)
        }
        _ => fresh(),
    }
}
