//! Steenrod expressions: GF(2) sums of `Sq`-words, e.g. `Sq3 Sq2 + Sq4 Sq1`.
//! `1` (or `Sq0`) is the unit word and `0` the zero element.

use crate::error::{Error, Result};
use crate::steenrod::{Element, Monomial};

pub fn parse(text: &str) -> Result<Element> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(1, 1, "empty Steenrod expression"));
    }
    if trimmed == "0" {
        return Ok(Element::zero());
    }
    let mut element = Element::zero();
    let mut column = 1;
    for chunk in text.split('+') {
        let term = chunk.trim();
        if term.is_empty() {
            return Err(Error::parse(1, column, "empty term between `+` signs"));
        }
        let mut exponents = Vec::new();
        for factor in term.split_whitespace() {
            if factor == "1" {
                continue; // unit factor
            }
            let k: u32 = factor
                .strip_prefix("Sq")
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| {
                    Error::parse(1, column, format!("`{factor}` is not a Sq factor"))
                })?;
            exponents.push(k);
        }
        element = element.add(&Element::from_monomial(Monomial::new(exponents)));
        column += chunk.len() + 1;
    }
    Ok(element)
}
