use std::io::Write;

use anyhow::{anyhow, Result};
use serde::Serialize;

use etapowers_core::analytic::{
    euler_product_partial, extrapolate, l_series_specs, lvalue_at_2, LSeriesSpec,
    ProductConstant, PRODUCT_CONSTANTS,
};
use etapowers_core::arith::{factorize, RepCache};
use etapowers_core::family::{coefficient_26, coefficient_via_f, SeriesKind, SERIES_KINDS};
use etapowers_core::moments::{
    fit_constant, laws, lehmer_scan, normalized_ratio, partial_sum_extrema, stat_at, FitModel,
    Statistic,
};
use etapowers_core::series::{expand_eta_product, CoeffSeries};
use etapowers_core::Error;

use crate::cli::{Cli, Command, Format};
use crate::output::{csv_row, json_doc, sink};
use crate::primes::primes_up_to;
use crate::{EXIT_ASSERTION, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

pub fn dispatch(cli: &Cli) -> Result<i32> {
    let mut out = sink(cli.output.as_deref())?;
    let out = out.as_mut();
    match &cli.command {
        Command::Expand { family, terms } => cmd_expand(family, *terms as usize, cli.format, out),
        Command::Verify { family, terms } => cmd_verify(family, *terms as usize, out),
        Command::Moments {
            family,
            terms,
            checkpoints,
        } => cmd_moments(family, *terms as usize, checkpoints.as_deref(), cli.format, out),
        Command::Constants { which, prime_limit } => {
            cmd_constants(which.as_deref(), *prime_limit, cli.format, out)
        }
        Command::Lvalue { level, terms } => cmd_lvalue(*level, *terms as usize, cli.format, out),
        Command::Lehmer { family, terms } => cmd_lehmer(family, *terms as usize, out),
        Command::EstimateA { terms } => cmd_estimate_a(*terms as usize, out),
    }
}

fn parse_kind(name: &str) -> Option<SeriesKind> {
    let kind = SeriesKind::parse(name);
    if kind.is_none() {
        let known: Vec<&str> = SERIES_KINDS.iter().map(|k| k.name()).collect();
        eprintln!("unknown family `{name}`; known: {}", known.join(", "));
    }
    kind
}

fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).pairs == [(n, 1)]
}

fn format_factorization(m: u64) -> String {
    factorize(m)
        .pairs
        .iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

#[derive(Serialize)]
struct ExpandDoc {
    family: String,
    terms: u64,
    coefficients: Vec<String>,
}

fn cmd_expand(family: &str, terms: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    let Some(kind) = parse_kind(family) else {
        return Ok(EXIT_USAGE);
    };
    let series = expand_eta_product(&kind.eta(), terms);
    match format {
        Format::Csv => {
            csv_row(out, &["n".into(), "a_n".into()])?;
            for (n, c) in series.coeffs().iter().enumerate() {
                csv_row(out, &[n.to_string(), c.to_string()])?;
            }
        }
        Format::Json => {
            let doc = ExpandDoc {
                family: kind.name().to_string(),
                terms: terms as u64,
                coefficients: series.coeffs().iter().map(|c| c.to_string()).collect(),
            };
            json_doc(out, &doc)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(family: &str, terms: usize, out: &mut dyn Write) -> Result<i32> {
    let Some(kind) = parse_kind(family) else {
        return Ok(EXIT_USAGE);
    };
    if matches!(kind, SeriesKind::L12 | SeriesKind::L24) {
        eprintln!(
            "{} has no known multiplicative coefficient formula to verify against",
            kind.name()
        );
        return Ok(EXIT_USAGE);
    }
    let series = expand_eta_product(&kind.eta(), terms);
    let mut cache = RepCache::new();
    match kind {
        SeriesKind::L26 => {
            let mut checked = 0u64;
            for (n, coeff) in series.coeffs().iter().enumerate() {
                let p = 12 * n as u64 + 13;
                if !is_prime(p) {
                    continue;
                }
                let direct = coefficient_26(p, &mut cache);
                if &direct != coeff {
                    writeln!(
                        out,
                        "verify L26: MISMATCH at n = {n}: series {coeff} vs formula {direct} \
                         (prime argument {p})"
                    )?;
                    return Ok(EXIT_MISMATCH);
                }
                checked += 1;
            }
            writeln!(
                out,
                "verify L26: pass over {checked} prime arguments p = 12n + 13, n <= {terms}"
            )?;
        }
        SeriesKind::Family(f) => {
            let (a, b) = f.argument_map();
            for (n, coeff) in series.coeffs().iter().enumerate() {
                let direct = coefficient_via_f(f, n as u64, &mut cache);
                if &direct != coeff {
                    let m = a * n as u64 + b;
                    writeln!(
                        out,
                        "verify {}: MISMATCH at n = {n}: series {coeff} vs formula {direct} \
                         (argument {m} = {})",
                        f.name(),
                        format_factorization(m)
                    )?;
                    return Ok(EXIT_MISMATCH);
                }
            }
            writeln!(out, "verify {}: pass, n <= {terms} agree exactly", f.name())?;
        }
        SeriesKind::L12 | SeriesKind::L24 => unreachable!(),
    }
    Ok(EXIT_OK)
}

fn default_checkpoints(terms: usize) -> Vec<usize> {
    let mut checks = Vec::new();
    let mut n = 100usize;
    while n <= terms {
        checks.push(n);
        n = match n.checked_mul(10) {
            Some(next) => next,
            None => break,
        };
    }
    if checks.last() != Some(&terms) {
        checks.push(terms);
    }
    checks
}

#[derive(Serialize)]
struct MomentRow {
    #[serde(rename = "N")]
    n: u64,
    statistic: &'static str,
    normalizer: f64,
    ratio: f64,
}

fn cmd_moments(
    family: &str,
    terms: usize,
    checkpoints: Option<&[u64]>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let Some(kind) = parse_kind(family) else {
        return Ok(EXIT_USAGE);
    };
    let checks: Vec<usize> = match checkpoints {
        Some(list) => list.iter().map(|&n| n as usize).collect(),
        None => default_checkpoints(terms),
    };
    if let Some(&bad) = checks.iter().find(|&&n| n > terms) {
        eprintln!("checkpoint {bad} exceeds --terms {terms}");
        return Ok(EXIT_USAGE);
    }
    let series = expand_eta_product(&kind.eta(), terms);
    let mut rows = Vec::new();
    for law in laws().iter().filter(|l| l.series == kind) {
        for &n in &checks {
            let ratio =
                normalized_ratio(kind, law.statistic, &series, n).map_err(|e| anyhow!("{e}"))?;
            rows.push(MomentRow {
                n: n as u64,
                statistic: law.statistic.name(),
                normalizer: (law.normalizer)(n as f64),
                ratio,
            });
        }
    }
    match format {
        Format::Csv => {
            csv_row(
                out,
                &["N".into(), "statistic".into(), "normalizer".into(), "ratio".into()],
            )?;
            for r in &rows {
                csv_row(
                    out,
                    &[
                        r.n.to_string(),
                        r.statistic.to_string(),
                        r.normalizer.to_string(),
                        r.ratio.to_string(),
                    ],
                )?;
            }
        }
        Format::Json => json_doc(out, &rows)?,
    }
    if rows.is_empty() {
        eprintln!("no growth law on file for {}; reporting raw statistics only", kind.name());
    }
    side_reports(kind, &series, &checks)?;
    Ok(EXIT_OK)
}

/// Observations the literature states without a falsifiable finite-N law;
/// printed to stderr so the table stays clean, and never asserted.
fn side_reports(kind: SeriesKind, series: &CoeffSeries, checks: &[usize]) -> Result<()> {
    let Some(&top) = checks.last() else {
        return Ok(());
    };
    let to_f64 = |b: &num_bigint::BigInt| {
        use num_traits::ToPrimitive;
        b.to_f64().unwrap_or(f64::NAN)
    };
    if let SeriesKind::Family(f) = kind {
        match f.name() {
            "L1" => {
                let (lo, hi) = partial_sum_extrema(series);
                eprintln!("partial sums range over [{lo}, {hi}] (expected to oscillate in -1..1)");
            }
            "L2" => {
                let max = stat_at(series, Statistic::MaxAbs, top).map_err(|e| anyhow!("{e}"))?;
                let nf = top as f64;
                let shape = nf.ln() / nf.ln().ln();
                eprintln!(
                    "ln max|a_n| / (ln N / ln ln N) = {:.4} at N = {top} (slow drift toward \
                     ln 2 = 0.6931; not asserted)",
                    to_f64(&max).ln() / shape
                );
                let partial =
                    stat_at(series, Statistic::PartialSum, top).map_err(|e| anyhow!("{e}"))?;
                eprintln!("partial sum at N = {top}: {partial} (conjecturally O(N^d), d < 1)");
            }
            "L2V2" => {
                let sq = stat_at(series, Statistic::SquareSum, top).map_err(|e| anyhow!("{e}"))?;
                eprintln!(
                    "square-sum ratio sum/N = {:.6} at N = {top} (no asserted limit; the two \
                     sizes of |h(p)| make this subtler than the other square variants)",
                    to_f64(&sq) / top as f64
                );
            }
            "L3" => {
                let partial =
                    stat_at(series, Statistic::PartialSum, top).map_err(|e| anyhow!("{e}"))?;
                eprintln!(
                    "partial sum / sqrt(2N) = {:.4} at N = {top} (limsup +1, liminf -1)",
                    to_f64(&partial) / (2.0 * top as f64).sqrt()
                );
            }
            _ => {}
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ConstantsRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    which: Option<&'static str>,
    #[serde(rename = "P")]
    p: u64,
    partial: f64,
    extrapolated: f64,
    error_guess: f64,
    reference: f64,
    delta: f64,
}

fn cmd_constants(
    which: Option<&str>,
    prime_limit: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let selection: Vec<ProductConstant> = match which {
        Some(name) => match ProductConstant::parse(name) {
            Some(c) => vec![c],
            None => {
                let known: Vec<&str> = PRODUCT_CONSTANTS.iter().map(|c| c.name()).collect();
                eprintln!("unknown constant `{name}`; known: {}", known.join(", "));
                return Ok(EXIT_USAGE);
            }
        },
        None => PRODUCT_CONSTANTS.to_vec(),
    };
    if prime_limit < 10_000 {
        eprintln!("--prime-limit must be at least 10000");
        return Ok(EXIT_USAGE);
    }
    let primes = primes_up_to(prime_limit)?;
    let mut cache = RepCache::new();
    let single = selection.len() == 1;
    let mut rows = Vec::new();
    for c in selection {
        let (_, checkpoints) = euler_product_partial(c, prime_limit, &primes, &mut cache);
        let values: Vec<f64> = checkpoints.iter().map(|&(_, v)| v).collect();
        let (extrapolated, error_guess) = extrapolate(&values);
        let reference = c.reference();
        for (p, partial) in checkpoints {
            rows.push(ConstantsRow {
                which: (!single).then(|| c.name()),
                p,
                partial,
                extrapolated,
                error_guess,
                reference,
                delta: extrapolated - reference,
            });
        }
    }
    match format {
        Format::Csv => {
            let mut header: Vec<String> = Vec::new();
            if !single {
                header.push("which".into());
            }
            header.extend(
                ["P", "partial", "extrapolated", "error_guess", "reference", "delta"]
                    .map(String::from),
            );
            csv_row(out, &header)?;
            for r in &rows {
                let mut fields: Vec<String> = Vec::new();
                if let Some(w) = r.which {
                    fields.push(w.to_string());
                }
                fields.extend([
                    r.p.to_string(),
                    r.partial.to_string(),
                    r.extrapolated.to_string(),
                    r.error_guess.to_string(),
                    r.reference.to_string(),
                    r.delta.to_string(),
                ]);
                csv_row(out, &fields)?;
            }
        }
        Format::Json => json_doc(out, &rows)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct LvalueRow {
    level: u32,
    terms: u64,
    value: f64,
    reference: f64,
    delta: f64,
}

fn cmd_lvalue(
    level: Option<u32>,
    terms: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let specs: Vec<&'static LSeriesSpec> = match level {
        Some(l) => match LSeriesSpec::for_level(l) {
            Some(spec) => vec![spec],
            None => {
                eprintln!("unknown level {l}; known: 12, 16, 27");
                return Ok(EXIT_USAGE);
            }
        },
        None => l_series_specs().to_vec(),
    };
    let mut rows = Vec::new();
    for spec in specs {
        match lvalue_at_2(spec, terms) {
            Ok(value) => rows.push(LvalueRow {
                level: spec.level,
                terms: terms as u64,
                value,
                reference: spec.reference,
                delta: value - spec.reference,
            }),
            Err(Error::RootNumberCheck {
                level,
                smoothed,
                abel,
            }) => {
                eprintln!(
                    "level {level}: root-number consistency check failed: smoothed {smoothed} \
                     vs Abel-summed {abel} (|diff| > 1e-3); the assumed sign +1 could not be \
                     validated at this truncation, try more --terms"
                );
                return Ok(EXIT_ASSERTION);
            }
            Err(e) => return Err(anyhow!("{e}")),
        }
    }
    match format {
        Format::Csv => {
            csv_row(
                out,
                &["level".into(), "terms".into(), "value".into(), "reference".into(), "delta".into()],
            )?;
            for r in &rows {
                csv_row(
                    out,
                    &[
                        r.level.to_string(),
                        r.terms.to_string(),
                        r.value.to_string(),
                        r.reference.to_string(),
                        r.delta.to_string(),
                    ],
                )?;
            }
        }
        Format::Json => json_doc(out, &rows)?,
    }
    Ok(EXIT_OK)
}

fn cmd_lehmer(family: &str, terms: usize, out: &mut dyn Write) -> Result<i32> {
    let Some(kind) = parse_kind(family) else {
        return Ok(EXIT_USAGE);
    };
    let series = expand_eta_product(&kind.eta(), terms);
    match lehmer_scan(&series) {
        None => writeln!(out, "{}: no zero found, n <= {terms}", kind.name())?,
        Some(n) => writeln!(out, "{}: first zero coefficient at n = {n}", kind.name())?,
    }
    Ok(EXIT_OK)
}

fn cmd_estimate_a(terms: usize, out: &mut dyn Write) -> Result<i32> {
    let checks = default_checkpoints(terms);
    if checks.len() < 3 {
        eprintln!("need --terms of at least 10000 for a 3-checkpoint fit");
        return Ok(EXIT_USAGE);
    }
    let kind = SeriesKind::L12;
    let series = expand_eta_product(&kind.eta(), terms);
    let mut points = Vec::new();
    writeln!(out, "12th power square-sum ratios sum_to_N / N^6:")?;
    for &n in &checks {
        let ratio = normalized_ratio(kind, Statistic::SquareSum, &series, n)
            .map_err(|e| anyhow!("{e}"))?;
        writeln!(out, "  N = {n}: {ratio:.6}")?;
        points.push((n as f64, ratio));
    }
    let (estimate, residual) =
        fit_constant(&points, FitModel::LogCorrected).map_err(|e| anyhow!("{e}"))?;
    let (tail_mean, spread) =
        fit_constant(&points, FitModel::Plain).map_err(|e| anyhow!("{e}"))?;
    writeln!(out, "estimate A = {estimate:.6} (log-corrected fit, residual = {residual:.2e})")?;
    writeln!(out, "tail mean = {tail_mean:.6} (spread = {spread:.2e})")?;
    writeln!(out, "no reference value is known for this constant")?;
    Ok(EXIT_OK)
}
