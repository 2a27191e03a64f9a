//! Finite unstable algebras over GF(2), given by explicit tables: a graded
//! basis, a commutative product, and a `Sq^k` action.
//!
//! Conventions baked into the representation:
//! - the unit is always labeled `1` and sits in degree 0;
//! - products with the unit and `Sq^0` are implicit;
//! - `Sq^{deg b} b = b*b` is the default top entry, so tables only store
//!   entries that differ from the defaults (zero elsewhere);
//! - absent table entries are zero.
//!
//! `validate` checks the axioms exhaustively over the finite basis:
//! unit/degree bookkeeping, associativity, the unstable conditions
//! (`Sq^k b = 0` for `k > deg b`, top squares), the Cartan formula on all
//! basis pairs, and Adem consistency of the operator tables against the
//! normal forms computed by the `steenrod` module.
//!
//! `double` is the degree-doubling functor: degrees multiply by 2 and
//! `Sq^{2k}` acts as `Sq^k` did (odd squares vanish).  `halve` inverts it
//! exactly.  `check_double_pair` verifies that a proposed half-degree
//! correspondence is a ring isomorphism intertwining `Sq^{2k}` with `Sq^k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{self, BitVec};
use crate::steenrod::{self, Element, Monomial};

/// A GF(2) sum of basis classes, kept as a sorted index set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct ClassSum(BTreeSet<usize>);

impl ClassSum {
    pub fn zero() -> Self {
        ClassSum(BTreeSet::new())
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = BTreeSet::new();
        s.insert(i);
        ClassSum(s)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut sum = ClassSum::zero();
        for i in indices {
            sum.toggle(i);
        }
        sum
    }

    pub fn toggle(&mut self, i: usize) {
        if !self.0.remove(&i) {
            self.0.insert(i);
        }
    }

    pub fn add(&self, other: &ClassSum) -> ClassSum {
        let mut out = self.clone();
        for &i in &other.0 {
            out.toggle(i);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisClass {
    pub label: String,
    pub degree: u32,
}

/// The label every unit class must carry.
pub const UNIT_LABEL: &str = "1";

#[derive(Clone, Debug)]
pub struct UnstableAlgebra {
    name: String,
    basis: Vec<BasisClass>,
    unit: usize,
    /// Canonical product table: keys `(i, j)` with `i <= j`, neither the
    /// unit, values nonzero.
    mul: BTreeMap<(usize, usize), ClassSum>,
    /// Canonical Sq table: keys `(k, i)` with `k >= 1`, values differing
    /// from the defaults (top square / zero).
    sq: BTreeMap<(u32, usize), ClassSum>,
    fundamental: Option<usize>,
}

/// Equality of presentations: same labeled basis and tables.  The display
/// name is ignored so `halve(double(B)) == B` holds exactly.
impl PartialEq for UnstableAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.unit == other.unit
            && self.mul == other.mul
            && self.sq == other.sq
            && self.fundamental == other.fundamental
    }
}

impl Eq for UnstableAlgebra {}

impl UnstableAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn basis(&self) -> &[BasisClass] {
        &self.basis
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn fundamental(&self) -> Option<usize> {
        self.fundamental
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn top_degree(&self) -> u32 {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    pub fn classes_in_degree(&self, d: u32) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].degree == d)
            .collect()
    }

    /// Raw stored product entries (canonical form).
    pub fn stored_products(&self) -> impl Iterator<Item = (&(usize, usize), &ClassSum)> {
        self.mul.iter()
    }

    /// Raw stored Sq entries (canonical form).
    pub fn stored_squares(&self) -> impl Iterator<Item = (&(u32, usize), &ClassSum)> {
        self.sq.iter()
    }

    pub fn product_classes(&self, i: usize, j: usize) -> ClassSum {
        if i == self.unit {
            return ClassSum::singleton(j);
        }
        if j == self.unit {
            return ClassSum::singleton(i);
        }
        let key = (i.min(j), i.max(j));
        self.mul.get(&key).cloned().unwrap_or_default()
    }

    pub fn product(&self, a: &ClassSum, b: &ClassSum) -> ClassSum {
        let mut out = ClassSum::zero();
        for i in a.iter() {
            for j in b.iter() {
                out = out.add(&self.product_classes(i, j));
            }
        }
        out
    }

    /// `Sq^k` on a basis class, with implicit defaults.
    pub fn sq_class(&self, k: u32, i: usize) -> ClassSum {
        if k == 0 {
            return ClassSum::singleton(i);
        }
        if let Some(entry) = self.sq.get(&(k, i)) {
            return entry.clone();
        }
        if k == self.basis[i].degree {
            return self.product_classes(i, i);
        }
        ClassSum::zero()
    }

    pub fn sq(&self, k: u32, x: &ClassSum) -> ClassSum {
        let mut out = ClassSum::zero();
        for i in x.iter() {
            out = out.add(&self.sq_class(k, i));
        }
        out
    }

    /// Apply a composite `Sq^{w[0]} ... Sq^{w[last]}` (rightmost acts first).
    pub fn apply_word(&self, word: &[u32], x: &ClassSum) -> ClassSum {
        word.iter()
            .rev()
            .fold(x.clone(), |acc, &k| self.sq(k, &acc))
    }

    pub fn apply_monomial(&self, m: &Monomial, x: &ClassSum) -> ClassSum {
        self.apply_word(m.exponents(), x)
    }

    pub fn apply_element(&self, e: &Element, x: &ClassSum) -> ClassSum {
        let mut out = ClassSum::zero();
        for m in e.terms() {
            out = out.add(&self.apply_monomial(m, x));
        }
        out
    }

    /// Total Steenrod square of a class: `sum_k Sq^k x`.
    pub fn total_sq(&self, x: &ClassSum) -> ClassSum {
        let mut out = ClassSum::zero();
        for k in 0..=self.top_degree() {
            out = out.add(&self.sq(k, x));
        }
        out
    }

    pub fn parse_sum(&self, text: &str) -> Result<ClassSum> {
        let text = text.trim();
        if text == "0" {
            return Ok(ClassSum::zero());
        }
        let mut sum = ClassSum::zero();
        for part in text.split('+') {
            let label = part.trim();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::Invalid(format!("unknown class `{label}`")))?;
            if sum.contains(i) {
                return Err(Error::Invalid(format!("class `{label}` repeated in sum")));
            }
            sum.toggle(i);
        }
        Ok(sum)
    }

    pub fn format_sum(&self, x: &ClassSum) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.iter()
            .map(|i| self.basis[i].label.clone())
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Render a graded list (index = degree) as one inhomogeneous class.
    pub fn format_graded(&self, graded: &[ClassSum]) -> String {
        let mut terms = Vec::new();
        for sum in graded {
            for i in sum.iter() {
                terms.push(self.basis[i].label.clone());
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    fn canonicalize(&mut self) {
        self.mul.retain(|_, v| !v.is_zero());
        let defaults: Vec<((u32, usize), ClassSum)> = self
            .sq
            .iter()
            .filter(|((k, i), v)| {
                let default = if *k == self.basis[*i].degree {
                    self.product_classes(*i, *i)
                } else {
                    ClassSum::zero()
                };
                **v == default
            })
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        for (key, _) in defaults {
            self.sq.remove(&key);
        }
    }

    // ---- validation -----------------------------------------------------

    pub fn validate(&self) -> ValidationReport {
        let mut report = self.validate_ring();
        self.check_sq_bookkeeping(&mut report);
        self.check_top_squares(&mut report);
        self.check_cartan(&mut report);
        self.check_adem(&mut report);
        report
    }

    /// Ring-level axioms only (unit, grading, associativity).  Catalog
    /// entries whose Sq-action is deliberately not modeled use this subset.
    pub fn validate_ring(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check_unit(&mut report);
        self.check_degrees(&mut report);
        self.check_associativity(&mut report);
        report
    }

    fn check_unit(&self, report: &mut ValidationReport) {
        if self.basis[self.unit].degree != 0 {
            report.push(Axiom::UnitShape, "unit class is not in degree 0");
        }
        if self.basis[self.unit].label != UNIT_LABEL {
            report.push(Axiom::UnitShape, "unit class is not labeled `1`");
        }
    }

    fn check_degrees(&self, report: &mut ValidationReport) {
        for ((i, j), sum) in &self.mul {
            let want = self.basis[*i].degree + self.basis[*j].degree;
            for t in sum.iter() {
                if self.basis[t].degree != want {
                    report.push(
                        Axiom::DegreeAdditivity,
                        format!(
                            "{}*{} contains {} of degree {} (expected {})",
                            self.label(*i),
                            self.label(*j),
                            self.label(t),
                            self.basis[t].degree,
                            want
                        ),
                    );
                }
            }
        }
    }

    fn check_associativity(&self, report: &mut ValidationReport) {
        let n = self.basis.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = self.product_classes(i, j);
                    let jk = self.product_classes(j, k);
                    let left = self.product(&ij, &ClassSum::singleton(k));
                    let right = self.product(&ClassSum::singleton(i), &jk);
                    if left != right {
                        report.push(
                            Axiom::Associativity,
                            format!(
                                "({}*{})*{} = {} but {}*({}*{}) = {}",
                                self.label(i),
                                self.label(j),
                                self.label(k),
                                self.format_sum(&left),
                                self.label(i),
                                self.label(j),
                                self.label(k),
                                self.format_sum(&right)
                            ),
                        );
                    }
                }
            }
        }
    }

    fn check_sq_bookkeeping(&self, report: &mut ValidationReport) {
        for ((k, i), sum) in &self.sq {
            let deg = self.basis[*i].degree;
            if *k > deg && !sum.is_zero() {
                report.push(
                    Axiom::UnstableVanishing,
                    format!(
                        "Sq{}({}) = {} but {} exceeds degree {}",
                        k,
                        self.label(*i),
                        self.format_sum(sum),
                        k,
                        deg
                    ),
                );
            }
            for t in sum.iter() {
                if self.basis[t].degree != deg + k {
                    report.push(
                        Axiom::SqDegreeShift,
                        format!(
                            "Sq{}({}) contains {} of degree {} (expected {})",
                            k,
                            self.label(*i),
                            self.label(t),
                            self.basis[t].degree,
                            deg + k
                        ),
                    );
                }
            }
        }
    }

    fn check_top_squares(&self, report: &mut ValidationReport) {
        for i in 0..self.basis.len() {
            let deg = self.basis[i].degree;
            let top = self.sq_class(deg, i);
            let square = self.product_classes(i, i);
            if top != square {
                report.push(
                    Axiom::TopSquare,
                    format!(
                        "Sq{}({}) = {} but {}*{} = {}",
                        deg,
                        self.label(i),
                        self.format_sum(&top),
                        self.label(i),
                        self.label(i),
                        self.format_sum(&square)
                    ),
                );
            }
        }
    }

    fn check_cartan(&self, report: &mut ValidationReport) {
        let n = self.basis.len();
        for i in 0..n {
            for j in i..n {
                if i == self.unit || j == self.unit {
                    continue;
                }
                let product = self.product_classes(i, j);
                let dsum = self.basis[i].degree + self.basis[j].degree;
                for k in 1..=dsum {
                    let left = self.sq(k, &product);
                    let mut right = ClassSum::zero();
                    for p in 0..=k {
                        let a = self.sq_class(p, i);
                        let b = self.sq_class(k - p, j);
                        right = right.add(&self.product(&a, &b));
                    }
                    if left != right {
                        report.push(
                            Axiom::Cartan,
                            format!(
                                "Sq{}({}*{}) = {} but the Cartan sum is {}",
                                k,
                                self.label(i),
                                self.label(j),
                                self.format_sum(&left),
                                self.format_sum(&right)
                            ),
                        );
                    }
                }
            }
        }
    }

    fn check_adem(&self, report: &mut ValidationReport) {
        let top = self.top_degree();
        for b in 1..=top {
            for a in 1..2 * b {
                if a + b > top {
                    continue;
                }
                let normal = steenrod::adem_normalize(&Element::from_monomial(Monomial::new([
                    a, b,
                ])));
                for i in 0..self.basis.len() {
                    let x = ClassSum::singleton(i);
                    let direct = self.apply_word(&[a, b], &x);
                    let via_normal = self.apply_element(&normal, &x);
                    if direct != via_normal {
                        report.push(
                            Axiom::AdemConsistency,
                            format!(
                                "Sq{} Sq{} on {}: direct {} vs normal form ({}) giving {}",
                                a,
                                b,
                                self.label(i),
                                self.format_sum(&direct),
                                normal,
                                self.format_sum(&via_normal)
                            ),
                        );
                    }
                }
            }
        }
    }

    // ---- doubling -------------------------------------------------------

    fn doubled_tables(&self) -> UnstableAlgebra {
        let mut out = UnstableAlgebra {
            name: format!("double({})", self.name),
            basis: self
                .basis
                .iter()
                .map(|b| BasisClass {
                    label: b.label.clone(),
                    degree: 2 * b.degree,
                })
                .collect(),
            unit: self.unit,
            mul: self.mul.clone(),
            sq: self
                .sq
                .iter()
                .map(|((k, i), v)| ((2 * k, *i), v.clone()))
                .collect(),
            fundamental: self.fundamental,
        };
        out.canonicalize();
        out
    }

    /// The degree-doubling functor: degrees multiply by two, `Sq^{2k}` acts
    /// as `Sq^k` did, odd squares vanish.  Input must validate.
    pub fn double(&self) -> Result<UnstableAlgebra> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra(report));
        }
        Ok(self.doubled_tables())
    }

    /// Degree doubling for tables whose Sq-action is not modeled: only the
    /// ring axioms are required of the input.
    pub fn double_ring(&self) -> Result<UnstableAlgebra> {
        let report = self.validate_ring();
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra(report));
        }
        Ok(self.doubled_tables())
    }

    /// Exact inverse of `double`.  Rejects inputs that are not in its image:
    /// the algebra must validate, sit in even degrees, and have no nonzero
    /// odd Sq entries.
    pub fn halve(&self) -> Result<UnstableAlgebra> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra(report));
        }
        for b in &self.basis {
            if b.degree % 2 != 0 {
                return Err(Error::NotADoubleCandidate(format!(
                    "class `{}` has odd degree {}",
                    b.label, b.degree
                )));
            }
        }
        for ((k, i), v) in &self.sq {
            if k % 2 != 0 && !v.is_zero() {
                return Err(Error::NotADoubleCandidate(format!(
                    "Sq{}({}) is nonzero",
                    k,
                    self.label(*i)
                )));
            }
        }
        let mut out = UnstableAlgebra {
            name: format!("halve({})", self.name),
            basis: self
                .basis
                .iter()
                .map(|b| BasisClass {
                    label: b.label.clone(),
                    degree: b.degree / 2,
                })
                .collect(),
            unit: self.unit,
            mul: self.mul.clone(),
            sq: self
                .sq
                .iter()
                .map(|((k, i), v)| ((k / 2, *i), v.clone()))
                .collect(),
            fundamental: self.fundamental,
        };
        out.canonicalize();
        Ok(out)
    }

    /// Structural equality against `other` under an explicit label
    /// correspondence `self -> other`.  Returns the first mismatch.
    pub fn tables_equal_under(
        &self,
        other: &UnstableAlgebra,
        map: &[(String, String)],
    ) -> std::result::Result<(), String> {
        if self.basis.len() != other.basis.len() {
            return Err(format!(
                "basis sizes differ: {} vs {}",
                self.basis.len(),
                other.basis.len()
            ));
        }
        let mut image = vec![usize::MAX; self.basis.len()];
        image[self.unit] = other.unit;
        for (from, to) in map {
            let i = self
                .index_of(from)
                .ok_or_else(|| format!("unknown class `{from}`"))?;
            let j = other
                .index_of(to)
                .ok_or_else(|| format!("unknown class `{to}`"))?;
            image[i] = j;
        }
        if image.contains(&usize::MAX) {
            return Err("correspondence does not cover the basis".to_string());
        }
        let mut seen = BTreeSet::new();
        if !image.iter().all(|j| seen.insert(*j)) {
            return Err("correspondence is not injective".to_string());
        }
        let push = |x: &ClassSum| ClassSum::from_indices(x.iter().map(|i| image[i]));
        for i in 0..self.basis.len() {
            if self.basis[i].degree != other.basis[image[i]].degree {
                return Err(format!(
                    "degree of `{}` differs: {} vs {}",
                    self.label(i),
                    self.basis[i].degree,
                    other.basis[image[i]].degree
                ));
            }
            for j in i..self.basis.len() {
                let here = push(&self.product_classes(i, j));
                let there = other.product_classes(image[i], image[j]);
                if here != there {
                    return Err(format!(
                        "product {}*{} differs: {} vs {}",
                        self.label(i),
                        self.label(j),
                        other.format_sum(&here),
                        other.format_sum(&there)
                    ));
                }
            }
            for k in 1..=self.top_degree() {
                let here = push(&self.sq_class(k, i));
                let there = other.sq_class(k, image[i]);
                if here != there {
                    return Err(format!(
                        "Sq{} of `{}` differs: {} vs {}",
                        k,
                        self.label(i),
                        other.format_sum(&here),
                        other.format_sum(&there)
                    ));
                }
            }
        }
        match (self.fundamental, other.fundamental) {
            (None, None) => Ok(()),
            (Some(f), Some(g)) if image[f] == g => Ok(()),
            _ => Err("fundamental classes do not correspond".to_string()),
        }
    }

    // ---- Wu and Stiefel–Whitney classes ----------------------------------

    /// Check that the cup pairing into the fundamental degree is perfect in
    /// every degree; returns the fundamental degree.
    fn poincare_check(&self) -> Result<u32> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra(report));
        }
        let mu = self.fundamental.ok_or(Error::MissingFundamental)?;
        let n = self.basis[mu].degree;
        if self.top_degree() != n {
            return Err(Error::NotPoincareDuality(format!(
                "classes above the fundamental degree {n}"
            )));
        }
        if self.classes_in_degree(n) != vec![mu] {
            return Err(Error::NotPoincareDuality(format!(
                "degree {n} is not spanned by the fundamental class alone"
            )));
        }
        for k in 0..=n {
            let rows = self.classes_in_degree(n - k);
            let cols = self.classes_in_degree(k);
            if rows.len() != cols.len() {
                return Err(Error::NotPoincareDuality(format!(
                    "dim H^{} = {} but dim H^{} = {}",
                    k,
                    cols.len(),
                    n - k,
                    rows.len()
                )));
            }
            let matrix = self.pairing_matrix(&rows, &cols, mu);
            if !f2::is_nonsingular(&matrix) {
                return Err(Error::NotPoincareDuality(format!(
                    "cup pairing H^{} x H^{} is degenerate",
                    k,
                    n - k
                )));
            }
        }
        Ok(n)
    }

    fn pairing_matrix(&self, rows: &[usize], cols: &[usize], mu: usize) -> Vec<BitVec> {
        rows.iter()
            .map(|&r| {
                BitVec::from_indices(
                    cols.len(),
                    cols.iter().enumerate().filter_map(|(ci, &c)| {
                        self.product_classes(r, c).contains(mu).then_some(ci)
                    }),
                )
            })
            .collect()
    }

    /// Wu classes `v_k`, defined against the fundamental class by
    /// `<v_k * x> = <Sq^k x>` for all `x` in complementary degree.  Requires
    /// a perfect cup pairing; the result is indexed by degree `0..=n`.
    pub fn wu_classes(&self) -> Result<Vec<ClassSum>> {
        let n = self.poincare_check()?;
        let mu = self.fundamental.unwrap();
        let mut out = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let cols = self.classes_in_degree(k);
            let rows = self.classes_in_degree(n - k);
            if cols.is_empty() {
                out.push(ClassSum::zero());
                continue;
            }
            let matrix = self.pairing_matrix(&rows, &cols, mu);
            let rhs = BitVec::from_indices(
                rows.len(),
                rows.iter().enumerate().filter_map(|(ri, &r)| {
                    self.sq_class(k, r).contains(mu).then_some(ri)
                }),
            );
            let solution = f2::solve_square(&matrix, &rhs).ok_or_else(|| {
                Error::NotPoincareDuality(format!("pairing solve failed in degree {k}"))
            })?;
            out.push(ClassSum::from_indices(
                solution.iter_set().map(|ci| cols[ci]),
            ));
        }
        // Above half degree the defining squares vanish by unstability, so
        // the solved classes must come out zero; check it rather than
        // trusting the derivation.
        for k in (n / 2 + 1)..=n {
            if !out[k as usize].is_zero() {
                return Err(Error::Invalid(format!(
                    "Wu class v_{k} = {} is nonzero above half degree {n}",
                    self.format_sum(&out[k as usize])
                )));
            }
        }
        Ok(out)
    }

    /// Stiefel–Whitney classes via the Wu formula `w = Sq(v)`, indexed by
    /// degree `0..=n`.
    pub fn sw_classes(&self) -> Result<Vec<ClassSum>> {
        let v = self.wu_classes()?;
        let n = v.len() - 1;
        let mut w = vec![ClassSum::zero(); n + 1];
        for (j, vj) in v.iter().enumerate() {
            for i in 0..=(n - j) {
                let term = self.sq(i as u32, vj);
                w[i + j] = w[i + j].add(&term);
            }
        }
        Ok(w)
    }
}

// ---- construction ---------------------------------------------------------

/// Incremental construction of an algebra table; `build` canonicalizes and
/// rejects malformed label bookkeeping (axioms are `validate`'s job).
pub struct Builder {
    name: String,
    classes: Vec<BasisClass>,
    products: Vec<(String, String, Vec<String>)>,
    squares: Vec<(u32, String, Vec<String>)>,
    fundamental: Option<String>,
}

impl Builder {
    /// Start a new table; the unit class `1` is always present.
    pub fn new(name: impl Into<String>) -> Self {
        Builder {
            name: name.into(),
            classes: vec![BasisClass {
                label: UNIT_LABEL.to_string(),
                degree: 0,
            }],
            products: Vec::new(),
            squares: Vec::new(),
            fundamental: None,
        }
    }

    pub fn class(mut self, label: &str, degree: u32) -> Self {
        self.classes.push(BasisClass {
            label: label.to_string(),
            degree,
        });
        self
    }

    pub fn product(mut self, a: &str, b: &str, rhs: &[&str]) -> Self {
        self.products.push((
            a.to_string(),
            b.to_string(),
            rhs.iter().map(|s| s.to_string()).collect(),
        ));
        self
    }

    pub fn sq(mut self, k: u32, b: &str, rhs: &[&str]) -> Self {
        self.squares.push((
            k,
            b.to_string(),
            rhs.iter().map(|s| s.to_string()).collect(),
        ));
        self
    }

    pub fn fundamental(mut self, label: &str) -> Self {
        self.fundamental = Some(label.to_string());
        self
    }

    pub fn build(self) -> Result<UnstableAlgebra> {
        let mut seen = BTreeSet::new();
        for c in &self.classes {
            if c.label == "0" {
                return Err(Error::Invalid("`0` is reserved and cannot label a class".into()));
            }
            if !seen.insert(c.label.clone()) {
                return Err(Error::Invalid(format!("duplicate class label `{}`", c.label)));
            }
        }
        let lookup = |label: &str| -> Result<usize> {
            self.classes
                .iter()
                .position(|c| c.label == label)
                .ok_or_else(|| Error::Invalid(format!("unknown class `{label}`")))
        };
        let resolve_sum = |labels: &[String]| -> Result<ClassSum> {
            let mut sum = ClassSum::zero();
            for l in labels {
                let i = lookup(l)?;
                if sum.contains(i) {
                    return Err(Error::Invalid(format!("class `{l}` repeated in a sum")));
                }
                sum.toggle(i);
            }
            Ok(sum)
        };

        let unit = 0;
        let mut mul = BTreeMap::new();
        for (a, b, rhs) in &self.products {
            let i = lookup(a)?;
            let j = lookup(b)?;
            let sum = resolve_sum(rhs)?;
            if i == unit || j == unit {
                let expect = ClassSum::singleton(if i == unit { j } else { i });
                if sum != expect {
                    return Err(Error::Invalid(format!(
                        "products with the unit are implicit; `{a} {b}` must equal the other factor"
                    )));
                }
                continue;
            }
            let key = (i.min(j), i.max(j));
            if let Some(existing) = mul.get(&key) {
                if *existing != sum {
                    return Err(Error::Invalid(format!(
                        "conflicting product entries for {a}*{b}"
                    )));
                }
                continue;
            }
            mul.insert(key, sum);
        }

        let mut sq = BTreeMap::new();
        for (k, b, rhs) in &self.squares {
            if *k == 0 {
                return Err(Error::Invalid("Sq0 is the identity and is implicit".into()));
            }
            let i = lookup(b)?;
            let sum = resolve_sum(rhs)?;
            if let Some(existing) = sq.get(&(*k, i)) {
                if *existing != sum {
                    return Err(Error::Invalid(format!(
                        "conflicting Sq{k} entries for `{b}`"
                    )));
                }
                continue;
            }
            sq.insert((*k, i), sum);
        }

        let fundamental = match &self.fundamental {
            Some(l) => Some(lookup(l)?),
            None => None,
        };

        let mut algebra = UnstableAlgebra {
            name: self.name,
            basis: self.classes,
            unit,
            mul,
            sq,
            fundamental,
        };
        algebra.canonicalize();
        Ok(algebra)
    }
}

// ---- validation report ------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    UnitShape,
    DegreeAdditivity,
    Associativity,
    SqDegreeShift,
    UnstableVanishing,
    TopSquare,
    Cartan,
    AdemConsistency,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::UnitShape => "unit",
            Axiom::DegreeAdditivity => "degree additivity",
            Axiom::Associativity => "associativity",
            Axiom::SqDegreeShift => "Sq degree shift",
            Axiom::UnstableVanishing => "unstable vanishing",
            Axiom::TopSquare => "top square",
            Axiom::Cartan => "Cartan formula",
            Axiom::AdemConsistency => "Adem consistency",
        };
        f.write_str(name)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub failures: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, axiom: Axiom, witness: impl Into<String>) {
        self.failures.push(Violation {
            axiom,
            witness: witness.into(),
        });
    }

    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "all axioms hold");
        }
        for (i, v) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}] {}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}

// ---- double pairs -----------------------------------------------------------

/// A claimed doubling relationship: `kappa` matches each basis class of the
/// total algebra with a class of half the degree in the fixed algebra.
#[derive(Clone, Debug)]
pub struct DoublePair {
    pub total: UnstableAlgebra,
    pub fixed: UnstableAlgebra,
    /// Pairs `(total label, fixed label)`.
    pub kappa: Vec<(String, String)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompatMode {
    /// Ring isomorphism plus the `Sq^{2k} <-> Sq^k` intertwining.
    Full,
    /// Ring isomorphism only (for entries without a modeled Sq-action).
    RingOnly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompatViolation {
    pub check: String,
    pub witness: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CompatReport {
    pub violations: Vec<CompatViolation>,
}

impl CompatReport {
    pub fn is_compatible(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, check: &str, witness: impl Into<String>) {
        self.violations.push(CompatViolation {
            check: check.to_string(),
            witness: witness.into(),
        });
    }
}

impl fmt::Display for CompatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "compatible");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}] {}", v.check, v.witness)?;
        }
        Ok(())
    }
}

/// Verify that `kappa` is a degree-halving ring isomorphism from the total
/// algebra onto the fixed one and, in `Full` mode, that it intertwines
/// `Sq^{2k}` on the total side with `Sq^k` on the fixed side.
pub fn check_double_pair(pair: &DoublePair, mode: CompatMode) -> CompatReport {
    let mut report = CompatReport::default();
    let total = &pair.total;
    let fixed = &pair.fixed;

    if total.basis.len() != fixed.basis.len() {
        report.push(
            "bijection",
            format!(
                "total has {} classes, fixed has {}",
                total.basis.len(),
                fixed.basis.len()
            ),
        );
        return report;
    }
    let mut image = vec![usize::MAX; total.basis.len()];
    image[total.unit] = fixed.unit;
    for (t, x) in &pair.kappa {
        let (Some(i), Some(j)) = (total.index_of(t), fixed.index_of(x)) else {
            report.push("bijection", format!("unknown label in pair ({t}, {x})"));
            return report;
        };
        if i == total.unit && j != fixed.unit {
            report.push("unit", "kappa moves the unit");
            return report;
        }
        image[i] = j;
    }
    if image.contains(&usize::MAX) {
        report.push("bijection", "kappa does not cover the total basis");
        return report;
    }
    let mut seen = BTreeSet::new();
    if !image.iter().all(|j| seen.insert(*j)) {
        report.push("bijection", "kappa is not injective");
        return report;
    }

    for (class, &j) in total.basis.iter().zip(&image) {
        let dt = class.degree;
        if !dt.is_multiple_of(2) {
            report.push(
                "even degrees",
                format!("total class `{}` has odd degree {}", class.label, dt),
            );
        } else if fixed.basis[j].degree != dt / 2 {
            report.push(
                "degree halving",
                format!(
                    "kappa({}) = {} has degree {} (expected {})",
                    class.label,
                    fixed.label(j),
                    fixed.basis[j].degree,
                    dt / 2
                ),
            );
        }
    }
    if !report.is_compatible() {
        return report;
    }

    let push = |x: &ClassSum| ClassSum::from_indices(x.iter().map(|i| image[i]));
    for i in 0..total.basis.len() {
        for j in i..total.basis.len() {
            let here = push(&total.product_classes(i, j));
            let there = fixed.product_classes(image[i], image[j]);
            if here != there {
                report.push(
                    "ring",
                    format!(
                        "kappa({}*{}) = {} but kappa({})*kappa({}) = {}",
                        total.label(i),
                        total.label(j),
                        fixed.format_sum(&here),
                        total.label(i),
                        total.label(j),
                        fixed.format_sum(&there)
                    ),
                );
            }
        }
    }

    if mode == CompatMode::Full {
        let top_fixed = fixed.top_degree();
        for (i, &im) in image.iter().enumerate() {
            for k in 1..=top_fixed {
                let here = push(&total.sq(2 * k, &ClassSum::singleton(i)));
                let there = fixed.sq(k, &ClassSum::singleton(im));
                if here != there {
                    report.push(
                        "Sq intertwining",
                        format!(
                            "kappa(Sq{}({})) = {} but Sq{}(kappa({})) = {}",
                            2 * k,
                            total.label(i),
                            fixed.format_sum(&here),
                            k,
                            total.label(i),
                            fixed.format_sum(&there)
                        ),
                    );
                }
            }
            for k in (1..=total.top_degree()).step_by(2) {
                let odd = total.sq(k, &ClassSum::singleton(i));
                if !odd.is_zero() {
                    report.push(
                        "odd squares",
                        format!(
                            "Sq{}({}) = {} is nonzero on the total algebra",
                            k,
                            total.label(i),
                            total.format_sum(&odd)
                        ),
                    );
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    // Real projective plane: one generator in degree 1, truncated at cubes.
    fn rp2() -> UnstableAlgebra {
        Builder::new("RP2")
            .class("a", 1)
            .class("a2", 2)
            .product("a", "a", &["a2"])
            .fundamental("a2")
            .build()
            .unwrap()
    }

    // Complex projective plane: generator in degree 2.
    fn cp2() -> UnstableAlgebra {
        Builder::new("CP2")
            .class("x", 2)
            .class("x2", 4)
            .product("x", "x", &["x2"])
            .fundamental("x2")
            .build()
            .unwrap()
    }

    #[test]
    fn rp2_and_cp2_validate() {
        assert!(rp2().validate().is_valid());
        assert!(cp2().validate().is_valid());
    }

    #[test]
    fn top_squares_are_implicit() {
        let a = rp2();
        let i = a.index_of("a").unwrap();
        assert_eq!(a.sq_class(1, i), ClassSum::singleton(a.index_of("a2").unwrap()));
        // ...and not stored.
        assert_eq!(a.stored_squares().count(), 0);
    }

    #[test]
    fn double_of_rp2_is_cp2_up_to_relabeling() {
        let d = rp2().double().unwrap();
        assert!(d.validate().is_valid());
        d.tables_equal_under(
            &cp2(),
            &[("a".into(), "x".into()), ("a2".into(), "x2".into())],
        )
        .unwrap();
    }

    #[test]
    fn halve_inverts_double_exactly() {
        let b = rp2();
        assert_eq!(b.double().unwrap().halve().unwrap(), b);
        // Odd-degree input is not a double candidate.
        assert!(matches!(b.halve(), Err(Error::NotADoubleCandidate(_))));
    }

    #[test]
    fn validation_catches_a_broken_cartan_table() {
        // Degree-2 truncated polynomial algebra but with Sq1 x wrongly set
        // to the top class of degree 3 — no such class, so degree shift and
        // Cartan both complain.
        let bad = Builder::new("bad")
            .class("x", 2)
            .class("x2", 4)
            .product("x", "x", &["x2"])
            .sq(1, "x", &["x2"])
            .build()
            .unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        assert!(report
            .failures
            .iter()
            .any(|v| v.axiom == Axiom::SqDegreeShift));
    }

    #[test]
    fn validation_catches_unstable_violations() {
        let bad = Builder::new("bad")
            .class("x", 2)
            .class("y", 5)
            .sq(3, "x", &["y"])
            .build()
            .unwrap();
        let report = bad.validate();
        assert!(report
            .failures
            .iter()
            .any(|v| v.axiom == Axiom::UnstableVanishing));
    }

    #[test]
    fn klein_bottle_table_validates_and_doubles() {
        let k = Builder::new("K")
            .class("a", 1)
            .class("b", 1)
            .class("T", 2)
            .product("a", "a", &["T"])
            .product("b", "b", &["T"])
            .product("a", "b", &[])
            .fundamental("T")
            .build()
            .unwrap();
        assert!(k.validate().is_valid());
        let dk = k.double().unwrap();
        assert!(dk.validate().is_valid());
        let pair = DoublePair {
            total: dk,
            fixed: k,
            kappa: vec![
                ("a".into(), "a".into()),
                ("b".into(), "b".into()),
                ("T".into(), "T".into()),
            ],
        };
        assert!(check_double_pair(&pair, CompatMode::Full).is_compatible());
    }

    #[test]
    fn wu_and_sw_of_cp2_frozen() {
        let a = cp2();
        let v = a.wu_classes().unwrap();
        assert_eq!(a.format_graded(&v), "1 + x");
        let w = a.sw_classes().unwrap();
        assert_eq!(a.format_graded(&w), "1 + x + x2");
    }

    #[test]
    fn wu_and_sw_of_rp2_frozen() {
        let a = rp2();
        assert_eq!(a.format_graded(&a.wu_classes().unwrap()), "1 + a");
        assert_eq!(a.format_graded(&a.sw_classes().unwrap()), "1 + a + a2");
    }

    #[test]
    fn wedge_pairing_is_degenerate() {
        let wedge = Builder::new("S2vS4")
            .class("s2", 2)
            .class("s4", 4)
            .fundamental("s4")
            .build()
            .unwrap();
        assert!(matches!(
            wedge.wu_classes(),
            Err(Error::NotPoincareDuality(_))
        ));
    }

    #[test]
    fn missing_fundamental_is_reported() {
        let a = Builder::new("S2")
            .class("s", 2)
            .build()
            .unwrap();
        assert!(matches!(a.wu_classes(), Err(Error::MissingFundamental)));
    }

    #[test]
    fn kappa_compatibility_spots_ring_breakage() {
        // Total says the degree-2 class squares to the top class, fixed
        // says it does not: kappa cannot be a ring isomorphism.
        let total = Builder::new("T")
            .class("u", 2)
            .class("t", 4)
            .product("u", "u", &["t"])
            .build()
            .unwrap();
        let fixed = Builder::new("F")
            .class("u", 1)
            .class("t", 2)
            .build()
            .unwrap();
        let pair = DoublePair {
            total,
            fixed,
            kappa: vec![("u".into(), "u".into()), ("t".into(), "t".into())],
        };
        let report = check_double_pair(&pair, CompatMode::Full);
        assert!(!report.is_compatible());
        assert!(report.violations.iter().any(|v| v.check == "ring"));
    }
}
