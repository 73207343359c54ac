use core::fmt;

/// Failure conditions reported as values rather than panics.
///
/// Violations of internal invariants (divisibility of multiplicative values by
/// the family scale, purity of `Z[sqrt(-3)]` values, residue tests that must
/// come out as a sign) are programming errors and panic instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A convolution needed coefficients past the end of a truncated operand.
    SeriesTooShort { needed: usize, len: usize },
    /// Sieve limit outside the supported range.
    LimitOutOfRange { limit: u64, max: u64 },
    /// No asymptotic law is on file for the requested series and statistic.
    UnknownLaw {
        series: &'static str,
        statistic: &'static str,
    },
    /// Too few points, or a singular least-squares system.
    DegenerateFit(&'static str),
    /// The smoothed L-value and the Abel-summed check disagree, which would
    /// indicate a wrong root-number assumption.
    RootNumberCheck {
        level: u32,
        smoothed: f64,
        abel: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SeriesTooShort { needed, len } => {
                write!(f, "series has {len} coefficients but {needed} are needed")
            }
            Error::LimitOutOfRange { limit, max } => {
                write!(f, "sieve limit {limit} outside supported range 2..={max}")
            }
            Error::UnknownLaw { series, statistic } => {
                write!(f, "no asymptotic law for {series} {statistic}")
            }
            Error::DegenerateFit(why) => write!(f, "degenerate fit: {why}"),
            Error::RootNumberCheck {
                level,
                smoothed,
                abel,
            } => write!(
                f,
                "root number check failed at level {level}: smoothed {smoothed} vs Abel {abel}"
            ),
        }
    }
}
