//! Coordinate expressions for Cayley–Dickson elements: a sum of terms
//! `q`, `q*e<i>`, or `e<i>` with exact rational `q` (`p/q` form), e.g.
//! `1/2 + 3*e1 - e2`.  The canonical printer lists nonzero coordinates in
//! index order, elides `*1` coefficients, and writes `0` for zero.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::cayley_dickson::CDElement;
use crate::error::{Error, Result};

fn parse_rational(text: &str, column: usize) -> Result<BigRational> {
    let bad = |msg: &str| Error::parse(1, column, format!("{msg}: `{text}`"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer = BigInt::from_str(n.trim()).map_err(|_| bad("not a rational"))?;
    let denom = BigInt::from_str(d.trim()).map_err(|_| bad("not a rational"))?;
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

/// One additive term: sign already applied by the splitter.
fn parse_term(chunk: &str, column: usize) -> Result<(usize, BigRational)> {
    let chunk = chunk.trim();
    if chunk.is_empty() {
        return Err(Error::parse(1, column, "empty term"));
    }
    match chunk.find('e') {
        None => Ok((0, parse_rational(chunk, column)?)),
        Some(epos) => {
            let index: usize = chunk[epos + 1..].trim().parse().map_err(|_| {
                Error::parse(1, column, format!("bad unit index in `{chunk}`"))
            })?;
            let raw = chunk[..epos].trim();
            let coeff_text = raw.strip_suffix('*').map(str::trim).unwrap_or(raw);
            let coeff = if coeff_text.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coeff_text, column)?
            };
            Ok((index, coeff))
        }
    }
}

/// Parse an expression.  With `level = None` the smallest level containing
/// every mentioned unit is used (`e3` forces level 2, and so on).
pub fn parse(text: &str, level: Option<u8>) -> Result<CDElement> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(1, 1, "empty element expression"));
    }
    // Split into signed chunks at top-level + and -.
    let mut terms: Vec<(bool, String, usize)> = Vec::new(); // (negative, chunk, column)
    let mut current = String::new();
    let mut negative = false;
    let mut column = 1;
    for (i, c) in text.char_indices() {
        match c {
            '+' | '-' => {
                if current.trim().is_empty() && c == '-' && !negative {
                    // Leading sign of the first term.
                    negative = true;
                    current.clear();
                    column = i + 2;
                } else {
                    terms.push((negative, current.clone(), column));
                    negative = c == '-';
                    current.clear();
                    column = i + 2;
                }
            }
            _ => current.push(c),
        }
    }
    terms.push((negative, current, column));

    let mut seen: Vec<(usize, BigRational)> = Vec::new();
    let mut max_index = 0usize;
    for (neg, chunk, col) in &terms {
        let (index, coeff) = parse_term(chunk, *col)?;
        max_index = max_index.max(index);
        let signed = if *neg { -coeff } else { coeff };
        seen.push((index, signed));
    }

    let level = match level {
        Some(k) => k,
        None => {
            let mut k = 0u8;
            while (1usize << k) <= max_index {
                k += 1;
            }
            k
        }
    };
    if max_index >= (1usize << level.min(63)) {
        return Err(Error::parse(
            1,
            1,
            format!("unit e{max_index} does not exist at level {level}"),
        ));
    }
    let mut coords = vec![BigRational::zero(); 1 << level];
    for (index, coeff) in seen {
        coords[index] += coeff;
    }
    CDElement::new(level, coords)
}

/// Canonical rendering; `parse(format(x), Some(x.level())) == x`.
pub fn format(x: &CDElement) -> String {
    let mut out = String::new();
    for (i, c) in x.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        let body = if i == 0 {
            magnitude.to_string()
        } else if magnitude.is_one() {
            format!("e{i}")
        } else {
            format!("{magnitude}*e{i}")
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_the_documented_shape() {
        let x = parse("1/2 + 3*e1 - e2", Some(2)).unwrap();
        assert_eq!(x.coords()[0], rational(1, 2));
        assert_eq!(x.coords()[1], rational(3, 1));
        assert_eq!(x.coords()[2], rational(-1, 1));
        assert_eq!(x.coords()[3], rational(0, 1));
        assert_eq!(format(&x), "1/2 + 3*e1 - e2");
    }

    #[test]
    fn level_inference_uses_the_highest_unit() {
        assert_eq!(parse("e1", None).unwrap().level(), 1);
        assert_eq!(parse("e2", None).unwrap().level(), 2);
        assert_eq!(parse("e4", None).unwrap().level(), 3);
        assert_eq!(parse("7", None).unwrap().level(), 0);
        assert!(parse("e8", None).is_err()); // would need level 4
        assert!(parse("e4", Some(2)).is_err());
    }

    #[test]
    fn accepts_spacing_and_star_variants() {
        let a = parse("2*e3", Some(2)).unwrap();
        assert_eq!(parse("2 * e3", Some(2)).unwrap(), a);
        assert_eq!(parse("2e3", Some(2)).unwrap(), a);
        assert_eq!(parse("-1 + 1 + 2e3", Some(2)).unwrap(), a);
    }

    #[test]
    fn round_trips_canonical_output() {
        for text in ["0", "-e1", "1 - e1 + 5/3*e2 - 7*e3", "-3/4", "e7"] {
            let x = parse(text, Some(3)).unwrap();
            assert_eq!(parse(&format(&x), Some(3)).unwrap(), x);
        }
        assert_eq!(format(&parse("0", Some(1)).unwrap()), "0");
        assert_eq!(format(&parse("e1 - e1", Some(1)).unwrap()), "0");
    }

    #[test]
    fn rejects_malformed_terms() {
        assert!(parse("", Some(1)).is_err());
        assert!(parse("1 + + e1", Some(1)).is_err());
        assert!(parse("1/0", Some(1)).is_err());
        assert!(parse("ex", Some(1)).is_err());
        assert!(parse("2**e1", Some(1)).is_err());
    }
}
