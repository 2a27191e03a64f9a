//! The mod-2 Steenrod algebra in the admissible (Serre–Cartan) basis.
//!
//! Monomials are words `Sq^{i1} ... Sq^{ik}` with every exponent positive;
//! the empty word is the unit `Sq^0`.  A word is admissible when
//! `i_j >= 2 i_{j+1}` for all `j`.  Inadmissible adjacent pairs rewrite by
//! the Adem relation (for `a < 2b`):
//!
//! ```text
//! Sq^a Sq^b = sum_{c=0}^{floor(a/2)} C(b-c-1, a-2c) mod 2 * Sq^{a+b-c} Sq^c
//! ```
//!
//! with binomial parity decided by Lucas' theorem.  Rewriting is
//! leftmost-inadmissible-first; a rightmost strategy is provided so tests
//! can confirm confluence.  Pair expansions are memoized behind a mutex.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::f2::{BitVec, RowReducer};

/// `C(m, n) mod 2` via Lucas: odd exactly when the bits of `n` are a subset
/// of the bits of `m`.
pub fn binomial_mod2(m: i64, n: i64) -> bool {
    if n < 0 || m < 0 || n > m {
        return false;
    }
    m & n == n
}

/// A word of positive Steenrod squares; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// Build a word, dropping `Sq^0` factors (the identity).
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        Monomial(exponents.into_iter().filter(|&e| e > 0).collect())
    }

    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn sq(k: u32) -> Self {
        Monomial::new([k])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= 2 * w[1])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let words: Vec<String> = self.0.iter().map(|e| format!("Sq{e}")).collect();
        write!(f, "{}", words.join(" "))
    }
}

/// A GF(2) sum of monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element(BTreeSet<Monomial>);

impl Element {
    pub fn zero() -> Self {
        Element(BTreeSet::new())
    }

    pub fn unit() -> Self {
        Element::from_monomial(Monomial::unit())
    }

    pub fn sq(k: u32) -> Self {
        Element::from_monomial(Monomial::sq(k))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut s = BTreeSet::new();
        s.insert(m);
        Element(s)
    }

    pub fn from_monomials(ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut e = Element::zero();
        for m in ms {
            e.toggle(m);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// GF(2) addition: symmetric difference of term sets.
    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for m in &other.0 {
            out.toggle(m.clone());
        }
        out
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    /// Degree if homogeneous (the zero element reports `None`).
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.0.iter().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_admissible(&self) -> bool {
        self.0.iter().all(|m| m.is_admissible())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let words: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", words.join(" + "))
    }
}

/// Which inadmissible pair a rewriting step picks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
}

type PairMemo = Mutex<HashMap<(u32, u32), Vec<Vec<u32>>>>;

/// Adem expansion of the inadmissible pair `Sq^a Sq^b` (`a < 2b`) as words
/// of length <= 2, memoized.
fn adem_pair(a: u32, b: u32) -> Vec<Vec<u32>> {
    debug_assert!(a < 2 * b);
    static MEMO: OnceLock<PairMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = memo.lock().unwrap().get(&(a, b)) {
        return hit.clone();
    }
    let mut terms = Vec::new();
    for c in 0..=a / 2 {
        if binomial_mod2(i64::from(b) - i64::from(c) - 1, i64::from(a) - 2 * i64::from(c)) {
            let mut word = vec![a + b - c];
            if c > 0 {
                word.push(c);
            }
            terms.push(word);
        }
    }
    memo.lock().unwrap().insert((a, b), terms.clone());
    terms
}

fn inadmissible_index(word: &[u32], strategy: RewriteStrategy) -> Option<usize> {
    let bad = |i: &usize| word[*i] < 2 * word[*i + 1];
    match strategy {
        RewriteStrategy::LeftmostFirst => (0..word.len().saturating_sub(1)).find(bad),
        RewriteStrategy::RightmostFirst => (0..word.len().saturating_sub(1)).rev().find(bad),
    }
}

/// Rewrite an element to the admissible basis with the given strategy.
pub fn normalize_with_strategy(e: &Element, strategy: RewriteStrategy) -> Element {
    let mut acc = Element::zero();
    let mut work: Vec<Vec<u32>> = e.terms().map(|m| m.exponents().to_vec()).collect();
    while let Some(word) = work.pop() {
        match inadmissible_index(&word, strategy) {
            None => acc.toggle(Monomial(word)),
            Some(i) => {
                for replacement in adem_pair(word[i], word[i + 1]) {
                    let mut next = Vec::with_capacity(word.len() + 1);
                    next.extend_from_slice(&word[..i]);
                    next.extend_from_slice(&replacement);
                    next.extend_from_slice(&word[i + 2..]);
                    work.push(next);
                }
            }
        }
    }
    acc
}

/// Adem normalization (leftmost-inadmissible-first).
pub fn adem_normalize(e: &Element) -> Element {
    normalize_with_strategy(e, RewriteStrategy::LeftmostFirst)
}

/// Product in the Steenrod algebra: concatenate words, then normalize.
pub fn multiply(a: &Element, b: &Element) -> Element {
    let mut raw = Element::zero();
    for x in a.terms() {
        for y in b.terms() {
            let word: Vec<u32> = x
                .exponents()
                .iter()
                .chain(y.exponents())
                .copied()
                .collect();
            raw.toggle(Monomial(word));
        }
    }
    adem_normalize(&raw)
}

/// All admissible monomials of the given degree, in lexicographic order of
/// their exponent sequences.  Degree 0 yields the unit alone.
pub fn admissible_basis(degree: u32) -> Vec<Monomial> {
    fn gen(remaining: u32, max_first: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(Monomial(prefix.clone()));
            return;
        }
        for first in 1..=remaining.min(max_first) {
            prefix.push(first);
            gen(remaining - first, first / 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(degree, degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A certificate that `Sq^n` is a sum of products of lower squares:
/// `Sq^n = sum_i Sq^{a_i} Sq^{b_i}` with all `a_i, b_i > 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub pairs: Vec<(u32, u32)>,
}

impl Decomposition {
    /// Recompute the sum of the certified products.
    pub fn evaluate(&self) -> Element {
        let mut total = Element::zero();
        for &(a, b) in &self.pairs {
            total = total.add(&multiply(&Element::sq(a), &Element::sq(b)));
        }
        total
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "Sq{a} Sq{b}")?;
        }
        Ok(())
    }
}

/// Decide whether `Sq^n` is decomposable (a sum of products of positive
/// squares), returning a certificate when it is.  Classically this happens
/// exactly when `n` is not a power of two.
pub fn decompose_sq(n: u32) -> Option<Decomposition> {
    if n == 0 {
        return None;
    }
    let basis = admissible_basis(n);
    let column: HashMap<&Monomial, usize> = basis.iter().zip(0..).collect();
    let to_bits = |e: &Element| -> BitVec {
        BitVec::from_indices(basis.len(), e.terms().map(|m| column[m]))
    };

    let mut reducer = RowReducer::new(basis.len());
    let mut row_pairs = Vec::new();
    for a in 1..n {
        let b = n - a;
        let product = multiply(&Element::sq(a), &Element::sq(b));
        row_pairs.push((a, b));
        reducer.feed(to_bits(&product));
    }
    let target = to_bits(&Element::sq(n));
    let combo = reducer.express(&target)?;
    Some(Decomposition {
        pairs: combo.into_iter().map(|i| row_pairs[i]).collect(),
    })
}

pub fn is_decomposable(n: u32) -> bool {
    decompose_sq(n).is_some()
}
