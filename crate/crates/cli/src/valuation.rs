use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use toric_nash::valuation::ValuationSpec;

use crate::error::{CliError, CliResult};

fn rational(s: &str) -> CliResult<BigRational> {
    let bad = || CliError::usage(format!("invalid valuation value {s:?}"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().map_err(|_| bad())?,
            d.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (
            s.trim().parse::<BigInt>().map_err(|_| bad())?,
            BigInt::one(),
        ),
    };
    if d == BigInt::ZERO {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn integer(s: &str) -> CliResult<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| CliError::usage(format!("invalid valuation component {s:?}")))
}

/// `--nu1 A --nu2 B` is rank 1 with rational values; `--nu1 A,C --nu2 B,D`
/// is rank 2 with integer value vectors ordered lexicographically.
pub fn parse_valuation(nu1: &str, nu2: &str) -> CliResult<ValuationSpec> {
    match (nu1.split_once(','), nu2.split_once(',')) {
        (None, None) => Ok(ValuationSpec::rank1(rational(nu1)?, rational(nu2)?)?),
        (Some((a, c)), Some((b, d))) => Ok(ValuationSpec::rank2(
            (integer(a)?, integer(c)?),
            (integer(b)?, integer(d)?),
        )?),
        _ => Err(CliError::usage(
            "--nu1 and --nu2 must both be scalars or both be pairs",
        )),
    }
}
