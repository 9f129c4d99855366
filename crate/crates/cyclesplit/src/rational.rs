//! Exact rational values for densities and tolerances.
//!
//! Densities here are ratios of class sizes or prime counts, so they are
//! kept as exact `i64` ratios end to end; nothing in the crate ever
//! rounds through floating point.

use num::rational::Ratio;

pub type Rational = Ratio<i64>;

/// Lowest-terms rendering: `"2/3"`, or just `"1"` when integral.
pub fn rational_to_string(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `"2/3"`, `"1"`, and decimal literals such as `"0.02"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: i64 = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if d == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w: i64 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().map_err(|_| format!("bad number {s:?}"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        if frac.len() > 15 {
            return Err(format!("too many decimal digits in {s:?}"));
        }
        let f: i64 = frac.parse().map_err(|_| format!("bad decimal {s:?}"))?;
        let scale = 10i64.pow(frac.len() as u32);
        return Ok(Rational::from_integer(w) + Rational::new(sign * f, scale));
    }
    let n: i64 = s.parse().map_err(|_| format!("bad number {s:?}"))?;
    Ok(Rational::from_integer(n))
}
