//! Hermitian-matrix files for the Jordan-algebra tools: the level, the
//! rational diagonal, and the three upper entries in element syntax.
//!
//! ```text
//! level 2
//! diag 1/2 1/2 0
//! x 1/2*e1
//! y 0
//! z 0
//! ```
//!
//! All five lines are required; `#` starts a comment.

use std::str::FromStr;

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::jordan::HermitianMatrix;

use super::{cd_expr, content_lines};

fn parse_rational(token: &str, line_no: usize) -> Result<BigRational> {
    let bad = || Error::parse(line_no, 1, format!("`{token}` is not a rational"));
    let (n, d) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let numer = BigInt::from_str(n).map_err(|_| bad())?;
    let denom = BigInt::from_str(d).map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(Error::parse(line_no, 1, format!("`{token}` divides by zero")));
    }
    Ok(BigRational::new(numer, denom))
}

pub fn parse(text: &str) -> Result<HermitianMatrix> {
    let lines = content_lines(text);
    let mut level: Option<u8> = None;
    let mut diag: Option<[BigRational; 3]> = None;
    let mut entries: [Option<crate::cayley_dickson::CDElement>; 3] = [None, None, None];

    for &(line_no, line) in &lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).ok_or_else(|| {
            Error::parse(line_no, 1, format!("`{line}` is missing a value"))
        })?;
        match keyword {
            "level" => {
                let k: u8 = rest.trim().parse().map_err(|_| {
                    Error::parse(line_no, 1, "level must be a small integer")
                })?;
                level = Some(k);
            }
            "diag" => {
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                if tokens.len() != 3 {
                    return Err(Error::parse(
                        line_no,
                        1,
                        "diag needs exactly three rationals",
                    ));
                }
                diag = Some([
                    parse_rational(tokens[0], line_no)?,
                    parse_rational(tokens[1], line_no)?,
                    parse_rational(tokens[2], line_no)?,
                ]);
            }
            "x" | "y" | "z" => {
                let k = level.ok_or_else(|| {
                    Error::parse(line_no, 1, "`level` must come before the entries")
                })?;
                let slot = match keyword {
                    "x" => 0,
                    "y" => 1,
                    _ => 2,
                };
                let element = cd_expr::parse(rest, Some(k)).map_err(|e| match e {
                    Error::Parse {
                        column, message, ..
                    } => Error::parse(line_no, column, message),
                    other => other,
                })?;
                entries[slot] = Some(element);
            }
            other => {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("unexpected keyword `{other}`"),
                ));
            }
        }
    }

    let level = level.ok_or_else(|| Error::parse(1, 1, "missing `level` line"))?;
    let diag = diag.ok_or_else(|| Error::parse(1, 1, "missing `diag` line"))?;
    let [x, y, z] = entries;
    let x = x.ok_or_else(|| Error::parse(1, 1, "missing `x` line"))?;
    let y = y.ok_or_else(|| Error::parse(1, 1, "missing `y` line"))?;
    let z = z.ok_or_else(|| Error::parse(1, 1, "missing `z` line"))?;
    HermitianMatrix::new(level, diag, x, y, z)
}

pub fn print(m: &HermitianMatrix) -> String {
    format!(
        "level {}\ndiag {} {} {}\nx {}\ny {}\nz {}\n",
        m.level(),
        m.diag()[0],
        m.diag()[1],
        m.diag()[2],
        cd_expr::format(m.x()),
        cd_expr::format(m.y()),
        cd_expr::format(m.z()),
    )
}
