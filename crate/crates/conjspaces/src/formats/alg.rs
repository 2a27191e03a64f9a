//! The `.alg` algebra-table format and its polynomial-quotient front end.
//!
//! Table form:
//!
//! ```text
//! algebra CP2
//! basis
//!   1 0
//!   x 2
//!   x2 4
//! mul
//!   x x = x2
//! sq
//!   Sq2 x = x2
//! fundamental x2
//! end
//! ```
//!
//! Omitted products default to zero (unit products are implicit and may not
//! be spelled); omitted squares default to zero except the implicit `Sq0`
//! and the auto-derived top square `Sq^deg b = b*b`.  Comments start with
//! `#`.  [`print`] emits the canonical form: unit first, table entries in
//! index order, defaults omitted — so print-parse-print is byte-stable.
//!
//! Quotient form (the front end that expands a truncated polynomial ring to
//! a monomial basis):
//!
//! ```text
//! quotient P11
//! gen c 1 2      # label, degree, truncation (c^2 = 0); 0 = untruncated
//! gen d 2 2
//! sq none        # or `sq binomial` for the tensor-of-truncated-powers action
//! fundamental auto
//! end
//! ```
//!
//! Untruncated generators need a degree cap (`parse_with_cap`).  Monomial
//! labels concatenate `<gen><exponent>` factors (`c2d` for c²d), so
//! generator names that collide with such labels are rejected when the
//! expansion meets them.

use crate::error::{Error, Result};
use crate::steenrod::binomial_mod2;
use crate::unstable::{Builder, UnstableAlgebra, UNIT_LABEL};

use super::content_lines;

const KEYWORDS: &[&str] = &[
    "algebra",
    "quotient",
    "basis",
    "mul",
    "sq",
    "gen",
    "fundamental",
    "end",
];

fn valid_label(token: &str) -> bool {
    if token.is_empty()
        || token == "0"
        || token == "+"
        || token == "="
        || KEYWORDS.contains(&token)
    {
        return false;
    }
    // `Sq<digits>` is reserved for the sq block.
    if let Some(rest) = token.strip_prefix("Sq") {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return false;
        }
    }
    true
}

fn column_of(line: &str, token_index: usize) -> usize {
    line.split_whitespace()
        .nth(token_index)
        .and_then(|tok| line.find(tok))
        .map_or(1, |p| p + 1)
}

/// Parse `= t1 + t2 + ...` or `= 0` starting at `tokens[at]`.
fn parse_rhs<'a>(
    tokens: &[&'a str],
    at: usize,
    line_no: usize,
    line: &str,
) -> Result<Vec<&'a str>> {
    if tokens.get(at) != Some(&"=") {
        return Err(Error::parse(
            line_no,
            column_of(line, at),
            "expected `=`".to_string(),
        ));
    }
    let rhs = &tokens[at + 1..];
    if rhs.is_empty() {
        return Err(Error::parse(line_no, 1, "missing right-hand side"));
    }
    if rhs == ["0"] {
        return Ok(Vec::new());
    }
    let mut labels = Vec::new();
    for (i, tok) in rhs.iter().enumerate() {
        if i % 2 == 1 {
            if *tok != "+" {
                return Err(Error::parse(
                    line_no,
                    column_of(line, at + 1 + i),
                    "expected `+` between terms",
                ));
            }
        } else if valid_label(tok) {
            labels.push(*tok);
        } else {
            return Err(Error::parse(
                line_no,
                column_of(line, at + 1 + i),
                format!("`{tok}` is not a usable label"),
            ));
        }
    }
    if rhs.len().is_multiple_of(2) {
        return Err(Error::parse(line_no, 1, "right-hand side ends with `+`"));
    }
    Ok(labels)
}

#[derive(PartialEq, Clone, Copy)]
enum Block {
    Preamble,
    Basis,
    Mul,
    Sq,
    Done,
}

fn parse_table(lines: &[(usize, &str)], name: &str) -> Result<UnstableAlgebra> {
    let mut builder = Builder::new(name);
    let mut block = Block::Preamble;
    let mut saw_basis = false;
    let mut saw_unit = false;
    let mut saw_fundamental = false;
    let mut ended = false;

    for &(line_no, line) in &lines[1..] {
        if ended {
            return Err(Error::parse(line_no, 1, "content after `end`"));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "basis" => {
                if saw_basis {
                    return Err(Error::parse(line_no, 1, "duplicate `basis` block"));
                }
                saw_basis = true;
                block = Block::Basis;
            }
            "mul" => {
                if block != Block::Basis {
                    return Err(Error::parse(line_no, 1, "`mul` must follow `basis`"));
                }
                block = Block::Mul;
            }
            "sq" => {
                if block != Block::Basis && block != Block::Mul {
                    return Err(Error::parse(line_no, 1, "`sq` must follow `basis`/`mul`"));
                }
                block = Block::Sq;
            }
            "fundamental" => {
                if !saw_basis || saw_fundamental {
                    return Err(Error::parse(
                        line_no,
                        1,
                        "one `fundamental` line, after the table blocks",
                    ));
                }
                if tokens.len() != 2 {
                    return Err(Error::parse(line_no, 1, "expected `fundamental <label>`"));
                }
                saw_fundamental = true;
                builder = builder.fundamental(tokens[1]);
                block = Block::Done;
            }
            "end" => {
                if !saw_basis {
                    return Err(Error::parse(line_no, 1, "missing `basis` block"));
                }
                ended = true;
            }
            _ => match block {
                Block::Basis => {
                    if tokens.len() != 2 {
                        return Err(Error::parse(line_no, 1, "expected `<label> <degree>`"));
                    }
                    let degree: u32 = tokens[1].parse().map_err(|_| {
                        Error::parse(line_no, column_of(line, 1), "degree must be a number")
                    })?;
                    if tokens[0] == UNIT_LABEL {
                        if degree != 0 {
                            return Err(Error::parse(
                                line_no,
                                column_of(line, 1),
                                "the unit class `1` must have degree 0",
                            ));
                        }
                        saw_unit = true;
                    } else if valid_label(tokens[0]) {
                        builder = builder.class(tokens[0], degree);
                    } else {
                        return Err(Error::parse(
                            line_no,
                            1,
                            format!("`{}` is not a usable label", tokens[0]),
                        ));
                    }
                }
                Block::Mul => {
                    if tokens.len() < 3 {
                        return Err(Error::parse(
                            line_no,
                            1,
                            "expected `<label> <label> = ...`",
                        ));
                    }
                    if tokens[0] == UNIT_LABEL || tokens[1] == UNIT_LABEL {
                        return Err(Error::parse(
                            line_no,
                            1,
                            "unit products are implicit; remove this line",
                        ));
                    }
                    let rhs = parse_rhs(&tokens, 2, line_no, line)?;
                    builder = builder.product(tokens[0], tokens[1], &rhs);
                }
                Block::Sq => {
                    let k: u32 = tokens[0]
                        .strip_prefix("Sq")
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| {
                            Error::parse(line_no, 1, "expected `Sq<k> <label> = ...`")
                        })?;
                    if k == 0 {
                        return Err(Error::parse(
                            line_no,
                            1,
                            "Sq0 is the identity and is implicit",
                        ));
                    }
                    if tokens.len() < 3 {
                        return Err(Error::parse(line_no, 1, "expected `Sq<k> <label> = ...`"));
                    }
                    let rhs = parse_rhs(&tokens, 2, line_no, line)?;
                    builder = builder.sq(k, tokens[1], &rhs);
                }
                Block::Preamble | Block::Done => {
                    return Err(Error::parse(
                        line_no,
                        1,
                        format!("unexpected `{}` outside a block", tokens[0]),
                    ));
                }
            },
        }
    }
    if !ended {
        let last = lines.last().map_or(1, |&(n, _)| n);
        return Err(Error::parse(last, 1, "missing `end`"));
    }
    if !saw_unit {
        return Err(Error::parse(
            lines[0].0,
            1,
            "the basis block must declare `1 0`",
        ));
    }
    builder.build()
}

struct QuotientGen {
    label: String,
    degree: u32,
    /// `x^truncation = 0`; `0` means untruncated.
    truncation: u32,
}

fn power_label(gen: &str, e: u32) -> String {
    match e {
        1 => gen.to_string(),
        _ => format!("{gen}{e}"),
    }
}

fn monomial_label(gens: &[QuotientGen], exps: &[u32]) -> String {
    let mut s = String::new();
    for (g, &e) in gens.iter().zip(exps) {
        if e > 0 {
            s.push_str(&power_label(&g.label, e));
        }
    }
    if s.is_empty() {
        UNIT_LABEL.to_string()
    } else {
        s
    }
}

fn monomial_degree(gens: &[QuotientGen], exps: &[u32]) -> u32 {
    gens.iter().zip(exps).map(|(g, &e)| g.degree * e).sum()
}

/// All exponent vectors within `bounds`, lexicographically ascending with
/// the first generator most significant.
fn exponent_vectors(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// Exponent vectors `j` with `sum j_i * deg_i = k` and `j <= bounds`
/// pointwise.
fn weighted_compositions(gens: &[QuotientGen], bounds: &[u32], k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; gens.len()];
    fn rec(
        gens: &[QuotientGen],
        bounds: &[u32],
        pos: usize,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == gens.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let max = (remaining / gens[pos].degree).min(bounds[pos]);
        for j in 0..=max {
            current[pos] = j;
            rec(gens, bounds, pos + 1, remaining - j * gens[pos].degree, current, out);
        }
        current[pos] = 0;
    }
    rec(gens, bounds, 0, k, &mut current, &mut out);
    out
}

fn parse_quotient(
    lines: &[(usize, &str)],
    name: &str,
    max_degree: Option<u32>,
) -> Result<UnstableAlgebra> {
    let mut gens: Vec<QuotientGen> = Vec::new();
    let mut binomial_sq = false;
    let mut fundamental: Option<String> = None;
    let mut ended = false;

    for &(line_no, line) in &lines[1..] {
        if ended {
            return Err(Error::parse(line_no, 1, "content after `end`"));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "gen" => {
                if tokens.len() != 4 {
                    return Err(Error::parse(
                        line_no,
                        1,
                        "expected `gen <label> <degree> <truncation>`",
                    ));
                }
                if !valid_label(tokens[1]) || tokens[1] == UNIT_LABEL {
                    return Err(Error::parse(
                        line_no,
                        column_of(line, 1),
                        format!("`{}` is not a usable generator label", tokens[1]),
                    ));
                }
                let degree: u32 = tokens[2].parse().map_err(|_| {
                    Error::parse(line_no, column_of(line, 2), "degree must be a number")
                })?;
                if degree == 0 {
                    return Err(Error::parse(
                        line_no,
                        column_of(line, 2),
                        "generators must have positive degree",
                    ));
                }
                let truncation: u32 = tokens[3].parse().map_err(|_| {
                    Error::parse(line_no, column_of(line, 3), "truncation must be a number")
                })?;
                if truncation == 1 {
                    return Err(Error::parse(
                        line_no,
                        column_of(line, 3),
                        "truncation 1 would kill the generator; use 0 for untruncated",
                    ));
                }
                gens.push(QuotientGen {
                    label: tokens[1].to_string(),
                    degree,
                    truncation,
                });
            }
            "sq" => {
                if tokens.len() != 2 || !matches!(tokens[1], "binomial" | "none") {
                    return Err(Error::parse(line_no, 1, "expected `sq binomial` or `sq none`"));
                }
                binomial_sq = tokens[1] == "binomial";
            }
            "fundamental" => {
                if tokens.len() != 2 {
                    return Err(Error::parse(
                        line_no,
                        1,
                        "expected `fundamental auto` or `fundamental <label>`",
                    ));
                }
                fundamental = Some(tokens[1].to_string());
            }
            "end" => ended = true,
            other => {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("unexpected `{other}` in a quotient file"),
                ));
            }
        }
    }
    if !ended {
        let last = lines.last().map_or(1, |&(n, _)| n);
        return Err(Error::parse(last, 1, "missing `end`"));
    }
    if gens.is_empty() {
        return Err(Error::parse(lines[0].0, 1, "a quotient needs at least one `gen`"));
    }

    // Exponent bounds: truncation when present, otherwise the degree cap.
    let mut bounds = Vec::with_capacity(gens.len());
    for g in &gens {
        if g.truncation > 0 {
            bounds.push(g.truncation - 1);
        } else {
            let cap = max_degree.ok_or_else(|| {
                Error::Invalid(format!(
                    "generator `{}` is untruncated; a --max-degree cap is required",
                    g.label
                ))
            })?;
            bounds.push(cap / g.degree);
        }
    }
    let natural_top: u32 = gens
        .iter()
        .zip(&bounds)
        .map(|(g, &b)| g.degree * b)
        .sum();
    let cap = max_degree.unwrap_or(natural_top).min(natural_top);

    let monomials: Vec<Vec<u32>> = exponent_vectors(&bounds)
        .into_iter()
        .filter(|e| monomial_degree(&gens, e) <= cap)
        .collect();

    let mut builder = Builder::new(name);
    for e in &monomials {
        if e.iter().all(|&x| x == 0) {
            continue;
        }
        builder = builder.class(&monomial_label(&gens, e), monomial_degree(&gens, e));
    }

    let in_bounds = |e: &[u32]| e.iter().zip(&bounds).all(|(&x, &b)| x <= b);
    for (p, e1) in monomials.iter().enumerate() {
        if e1.iter().all(|&x| x == 0) {
            continue;
        }
        for e2 in &monomials[p..] {
            if e2.iter().all(|&x| x == 0) {
                continue;
            }
            let sum: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            if in_bounds(&sum) && monomial_degree(&gens, &sum) <= cap {
                builder = builder.product(
                    &monomial_label(&gens, e1),
                    &monomial_label(&gens, e2),
                    &[&monomial_label(&gens, &sum)],
                );
            }
        }
    }

    if binomial_sq {
        // Cartan convolution of the one-variable rule
        // Sq^(j*deg)(x^e) = binom(e, j) x^(e+j).
        for e in &monomials {
            let d = monomial_degree(&gens, e);
            if d == 0 {
                continue;
            }
            for k in 1..d {
                if d + k > cap {
                    break;
                }
                let mut terms: Vec<String> = Vec::new();
                for j in weighted_compositions(&gens, &bounds, k) {
                    if !e
                        .iter()
                        .zip(&j)
                        .all(|(&ei, &ji)| binomial_mod2(ei as i64, ji as i64))
                    {
                        continue;
                    }
                    let target: Vec<u32> = e.iter().zip(&j).map(|(a, b)| a + b).collect();
                    if in_bounds(&target) && monomial_degree(&gens, &target) <= cap {
                        terms.push(monomial_label(&gens, &target));
                    }
                }
                if !terms.is_empty() {
                    let refs: Vec<&str> = terms.iter().map(String::as_str).collect();
                    builder = builder.sq(k, &monomial_label(&gens, e), &refs);
                }
            }
        }
    }

    match fundamental.as_deref() {
        Some("auto") => {
            let top: Vec<&Vec<u32>> = monomials
                .iter()
                .filter(|e| monomial_degree(&gens, e) == cap)
                .collect();
            match top.as_slice() {
                [only] => builder = builder.fundamental(&monomial_label(&gens, only)),
                _ => {
                    return Err(Error::Invalid(format!(
                        "`fundamental auto` needs a unique top class; degree {cap} has {}",
                        top.len()
                    )))
                }
            }
        }
        Some(label) => builder = builder.fundamental(label),
        None => {}
    }
    builder.build()
}

/// Parse either form of the `.alg` format.
pub fn parse(text: &str) -> Result<UnstableAlgebra> {
    parse_with_cap(text, None)
}

/// Parse with a degree cap for the quotient front end.  The cap truncates
/// the monomial expansion (an ideal quotient, so validity is preserved) and
/// is required when a generator is untruncated; table-form input ignores it.
pub fn parse_with_cap(text: &str, max_degree: Option<u32>) -> Result<UnstableAlgebra> {
    let lines = content_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(Error::parse(1, 1, "empty file"));
    };
    match first.split_whitespace().next() {
        Some("algebra") => {
            let name = first["algebra".len()..].trim();
            if name.is_empty() {
                return Err(Error::parse(first_no, 1, "expected `algebra <name>`"));
            }
            parse_table(&lines, name)
        }
        Some("quotient") => {
            let name = first["quotient".len()..].trim();
            if name.is_empty() {
                return Err(Error::parse(first_no, 1, "expected `quotient <name>`"));
            }
            parse_quotient(&lines, name, max_degree)
        }
        _ => Err(Error::parse(
            first_no,
            1,
            "file must start with `algebra <name>` or `quotient <name>`",
        )),
    }
}

/// Canonical table form: unit first, entries in index order, defaults
/// omitted, two-space indent.  Byte-stable under parse-print round trips.
pub fn print(a: &UnstableAlgebra) -> String {
    let mut out = format!("algebra {}\n", a.name());
    out.push_str("basis\n");
    for c in a.basis() {
        out.push_str(&format!("  {} {}\n", c.label, c.degree));
    }
    let products: Vec<String> = a
        .stored_products()
        .map(|(&(i, j), sum)| {
            format!("  {} {} = {}\n", a.label(i), a.label(j), a.format_sum(sum))
        })
        .collect();
    if !products.is_empty() {
        out.push_str("mul\n");
        for p in products {
            out.push_str(&p);
        }
    }
    let squares: Vec<String> = a
        .stored_squares()
        .map(|(&(k, i), sum)| format!("  Sq{k} {} = {}\n", a.label(i), a.format_sum(sum)))
        .collect();
    if !squares.is_empty() {
        out.push_str("sq\n");
        for s in squares {
            out.push_str(&s);
        }
    }
    if let Some(f) = a.fundamental() {
        out.push_str(&format!("fundamental {}\n", a.label(f)));
    }
    out.push_str("end\n");
    out
}
