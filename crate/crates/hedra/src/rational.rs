//! Exact rational scalars and the bit-size ("encoding length") measure.
//!
//! All arithmetic in this crate runs over arbitrary-precision fractions
//! kept in lowest terms with a positive denominator; `0` is stored as
//! `0/1`. The text syntax accepted everywhere is an optional sign, an
//! integer, and optionally `/` followed by a positive integer (`-3/7`,
//! `5`). Floating point is rejected by construction.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always reduced, denominator always positive.
pub type Rat = BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational literal: optional sign, integer, optional `/`
/// followed by a positive integer.
pub fn parse_rat(token: &str) -> Result<Rat> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("malformed rational `{token}`"),
    };
    let (numer_str, denom_str) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let numer: BigInt = numer_str.parse().map_err(|_| bad())?;
    // Reject exotic forms the BigInt parser would accept ("+ 3" is already
    // impossible since tokens are whitespace-split, but "0x.." etc. are not).
    if !numer_str
        .strip_prefix(['+', '-'])
        .unwrap_or(numer_str)
        .chars()
        .all(|c| c.is_ascii_digit())
        || numer_str.strip_prefix(['+', '-']).unwrap_or(numer_str).is_empty()
    {
        return Err(bad());
    }
    let denom: BigInt = match denom_str {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("zero denominator in `{token}`"),
                });
            }
            d
        }
    };
    Ok(Rat::new(numer, denom))
}

/// Formats a rational as `p` or `p/q` (never a decimal point).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Space-joined [`format_rat`] of the entries.
pub fn format_vec(v: &[Rat]) -> String {
    v.iter().map(format_rat).collect::<Vec<_>>().join(" ")
}

/// ⌈log2(k)⌉ for k ≥ 1, i.e. the number of bits of k − 1.
fn ceil_log2(k: &BigInt) -> u64 {
    debug_assert!(k.is_positive());
    (k - BigInt::one()).bits()
}

/// Bit size of a reduced fraction p/q:
/// `1 + ⌈log2(|p| + 1)⌉ + ⌈log2(|q| + 1)⌉`.
pub fn encoding_length(r: &Rat) -> u64 {
    let p = r.numer().abs() + BigInt::one();
    let q = r.denom().abs() + BigInt::one();
    1 + ceil_log2(&p) + ceil_log2(&q)
}

/// Bit size of a vector: `n + Σ ⟨v_j⟩`.
pub fn encoding_length_vec(v: &[Rat]) -> u64 {
    v.len() as u64 + v.iter().map(encoding_length).sum::<u64>()
}

/// Largest entry encoding length in a vector (0 for the empty vector).
pub fn max_encoding_length_vec(v: &[Rat]) -> u64 {
    v.iter().map(encoding_length).max().unwrap_or(0)
}

/// True if the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact conversion to `i64`, if the value is an integer that fits.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    let n = r.numer();
    if n.sign() == Sign::NoSign {
        return Some(0);
    }
    i64::try_from(n).ok()
}
