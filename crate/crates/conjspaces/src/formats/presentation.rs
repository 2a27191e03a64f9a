//! Group-presentation files: a `gens:` line followed by one `rel:` line per
//! relator, words as whitespace-separated letters with `x'` for an inverse.
//!
//! ```text
//! gens: x y
//! rel: x x
//! rel: y y
//! rel: x y x y x y x y
//! ```

use crate::constructions::{GroupPresentation, Letter, Word};
use crate::error::{Error, Result};

use super::content_lines;

pub fn parse(text: &str) -> Result<GroupPresentation> {
    let lines = content_lines(text);
    let mut generators: Option<Vec<String>> = None;
    let mut relators: Vec<Word> = Vec::new();

    for &(line_no, line) in &lines {
        if let Some(rest) = line.strip_prefix("gens:") {
            if generators.is_some() {
                return Err(Error::parse(line_no, 1, "duplicate `gens:` line"));
            }
            let gens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            for g in &gens {
                if g.contains('\'') {
                    return Err(Error::parse(
                        line_no,
                        1,
                        format!("generator `{g}` may not contain `'` (it marks inverses)"),
                    ));
                }
            }
            generators = Some(gens);
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let gens = generators.as_ref().ok_or_else(|| {
                Error::parse(line_no, 1, "`gens:` must come before any `rel:`")
            })?;
            let mut letters = Vec::new();
            for token in rest.split_whitespace() {
                let (name, inverse) = match token.strip_suffix('\'') {
                    Some(base) => (base, true),
                    None => (token, false),
                };
                let generator = gens.iter().position(|g| g == name).ok_or_else(|| {
                    Error::parse(line_no, 1, format!("`{name}` is not a declared generator"))
                })?;
                letters.push(Letter { generator, inverse });
            }
            relators.push(Word::new(letters));
        } else {
            return Err(Error::parse(
                line_no,
                1,
                "expected a `gens:` or `rel:` line",
            ));
        }
    }

    let generators = generators.ok_or_else(|| Error::parse(1, 1, "missing `gens:` line"))?;
    GroupPresentation::new(generators, relators)
}

pub fn print(p: &GroupPresentation) -> String {
    let mut out = format!("gens: {}\n", p.generators().join(" "));
    for w in p.relators() {
        let tokens: Vec<String> = w
            .letters()
            .iter()
            .map(|l| {
                let mut s = p.generators()[l.generator].clone();
                if l.inverse {
                    s.push('\'');
                }
                s
            })
            .collect();
        if tokens.is_empty() {
            out.push_str("rel:\n");
        } else {
            out.push_str(&format!("rel: {}\n", tokens.join(" ")));
        }
    }
    out
}
