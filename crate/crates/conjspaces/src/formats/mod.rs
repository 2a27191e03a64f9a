//! Text formats: the `.alg` algebra-table grammar with its
//! polynomial-quotient front end, coordinate expressions for
//! Cayley–Dickson elements, Steenrod `Sq`-expressions, Hermitian-matrix
//! files, group-presentation files, and the intersection-form JSON.
//!
//! All parsers report positions through [`crate::Error::Parse`]; all
//! printers are canonical, so `print(parse(print(x))) == print(x)` byte for
//! byte.

pub mod alg;
pub mod cd_expr;
pub mod hermitian;
pub mod intersection;
pub mod presentation;
pub mod steenrod_expr;

/// Split file content into `(1-based line number, payload)` pairs with
/// `#`-comments stripped and blank lines dropped.
pub(crate) fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
        .collect()
}
