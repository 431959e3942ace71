//! Exact rational scalars and their text forms.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{MogError, Result};

/// The exact scalar used by all solvers.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `p/q` as a rational; panics on a zero denominator (test convenience).
pub fn ratio(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"`, plain integers and decimal strings (`"0.065"` becomes the
/// exact rational 65/1000). Used for JSON numbers-as-strings and CLI flags.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || MogError::InvalidArgument(format!("cannot parse rational: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let p = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(MogError::InvalidArgument(format!(
                "zero denominator in {s:?}"
            )));
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.starts_with('-');
        let int_digits = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int_part).map_err(|_| bad())?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let frac = BigInt::from_str(frac_part).map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut value = Rat::from_integer(int_digits);
        let frac = Rat::new(frac, scale);
        if negative {
            value -= frac;
        } else {
            value += frac;
        }
        return Ok(value);
    }
    let p = BigInt::from_str(s).map_err(|_| bad())?;
    Ok(Rat::from_integer(p))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
