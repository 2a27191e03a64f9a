//! Realizability analysis and the built-in catalog of worked examples.
//!
//! `check_realizable` asks whether a finite unstable algebra can be the
//! fixed-space cohomology of a conjugation space.  It runs a chain of
//! necessary conditions against the degree-doubled algebra and reports an
//! obstruction with evidence, or `Undetermined` with the list of rules that
//! found nothing.  The engine never answers `Realizable` on its own — only
//! an explicit witness (a known space) can upgrade `Undetermined`, and the
//! catalog records such witnesses for its entries.
//!
//! Rules, in order:
//! 1. double-validity: the algebra and its double satisfy every axiom;
//! 2. hopf-invariant-one: if the double is a truncated polynomial algebra
//!    of height 3, its generator degree must be 1, 2, 4 or 8 (Adams 1960;
//!    for degrees that are not powers of two the contradiction is already
//!    forced by the decomposability of `Sq^d`, and a certificate is
//!    attached);
//! 3. floyd-lemma: the four-class pattern in degrees 0, 8, 12, 20 linked by
//!    `Sq^4`, `Sq^8` and the cup product cannot occur in the cohomology of
//!    a space (E. E. Floyd, Lemma 3.4).

use crate::constructions::{
    build_presentation_complex, GroupPresentation, Letter, Word,
};
use crate::error::{Error, Result};
use crate::steenrod;
use crate::unstable::{
    check_double_pair, Builder, ClassSum, CompatMode, DoublePair, UnstableAlgebra,
};

// ---- rules ------------------------------------------------------------------

pub const RULE_DOUBLE_VALIDITY: &str = "double-validity";
pub const RULE_HOPF_INVARIANT_ONE: &str = "hopf-invariant-one";
pub const RULE_FLOYD_LEMMA: &str = "floyd-lemma";

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleInfo {
    pub name: &'static str,
    pub kind: &'static str,
    pub statement: &'static str,
    pub source: &'static str,
}

pub fn rules_table() -> Vec<RuleInfo> {
    vec![
        RuleInfo {
            name: RULE_DOUBLE_VALIDITY,
            kind: "validity",
            statement: "the candidate algebra and its degree-doubled total \
                        algebra must satisfy the unstable-algebra axioms",
            source: "internal consistency",
        },
        RuleInfo {
            name: RULE_HOPF_INVARIANT_ONE,
            kind: "obstruction",
            statement: "a truncated polynomial total algebra of height 3 on a \
                        generator of degree d requires an element of Hopf \
                        invariant one, so d must be 1, 2, 4 or 8; when d is \
                        not a power of two the decomposition of Sq^d across \
                        the degree gap already forces the square to vanish",
            source: "J. F. Adams, Ann. of Math. 72 (1960) 20-104",
        },
        RuleInfo {
            name: RULE_FLOYD_LEMMA,
            kind: "obstruction",
            statement: "no space has cohomology with classes in degrees 0, 8, \
                        12, 20 linked by Sq^4, Sq^8 and the cup product",
            source: "E. E. Floyd, Lemma 3.4",
        },
    ]
}

// ---- verdicts ---------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Realizable { witness: String },
    NonRealizable { rule: String, evidence: String },
    Undetermined { passed: Vec<String> },
}

impl Verdict {
    pub fn word(&self) -> &'static str {
        match self {
            Verdict::Realizable { .. } => "realizable",
            Verdict::NonRealizable { .. } => "non-realizable",
            Verdict::Undetermined { .. } => "undetermined",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrailStep {
    pub rule: String,
    pub outcome: String,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealizabilityReport {
    pub verdict: Verdict,
    pub trail: Vec<TrailStep>,
}

fn step(rule: &str, outcome: &str, detail: impl Into<String>) -> TrailStep {
    TrailStep {
        rule: rule.to_string(),
        outcome: outcome.to_string(),
        detail: detail.into(),
    }
}

/// Recognize `F2[X]/(X^3)`: three classes in degrees 0, d, 2d with the
/// middle one squaring to the top one.  Returns the generator degree.
fn truncated_height3(total: &UnstableAlgebra) -> Option<u32> {
    if total.basis().len() != 3 {
        return None;
    }
    let mut positive: Vec<usize> = (0..3).filter(|&i| i != total.unit()).collect();
    positive.sort_by_key(|&i| total.degree(i));
    let (g, t) = (positive[0], positive[1]);
    let d = total.degree(g);
    if d == 0 || total.degree(t) != 2 * d {
        return None;
    }
    (total.product_classes(g, g) == ClassSum::singleton(t)).then_some(d)
}

/// Recognize the four-class pattern of the Floyd rule on the total side:
/// degrees 0, 8, 12, 20 with `Sq^4 E8 = E12`, `Sq^8 E12 = E20` and
/// `E8 * E12 = E20`.
fn floyd_pattern(total: &UnstableAlgebra) -> bool {
    if total.basis().len() != 4 {
        return false;
    }
    let class_in = |d: u32| -> Option<usize> {
        let v = total.classes_in_degree(d);
        (v.len() == 1).then(|| v[0])
    };
    let (Some(e8), Some(e12), Some(e20)) = (class_in(8), class_in(12), class_in(20)) else {
        return false;
    };
    total.sq_class(4, e8) == ClassSum::singleton(e12)
        && total.sq_class(8, e12) == ClassSum::singleton(e20)
        && total.product_classes(e8, e12) == ClassSum::singleton(e20)
}

/// The constructive half of the Hopf rule.  A candidate whose double would
/// be `F2[X]/(X^3)` on a degree `d` away from the powers of two is doomed
/// for an elementary reason: `Sq^d` is decomposable, every factor of the
/// decomposition passes through the empty degrees between `d` and `2d`, and
/// yet `Sq^d X = X^2` must be nonzero.  Returns the certificate text.
fn hopf_certificate(fixed: &UnstableAlgebra) -> Option<String> {
    let d = 2 * truncated_height3(fixed)?;
    if d.is_power_of_two() {
        return None;
    }
    let cert = steenrod::decompose_sq(d)
        .expect("squares away from powers of two are decomposable");
    Some(format!(
        "the double would be F2[X]/(X^3) with deg X = {d}; Sq{d} = {cert} \
         is decomposable, every factor acts through the zero groups strictly \
         between degrees {d} and {}, and yet X^2 = Sq{d} X must be nonzero",
        2 * d
    ))
}

/// A validity failure, possibly sharpened: when the candidate matches the
/// height-3 pattern on a bad degree, the Hopf rule is the real story and the
/// decomposability certificate is attached; the generic witness stays first
/// in the trail.
fn validity_failure(
    fixed: &UnstableAlgebra,
    generic: String,
    mut trail: Vec<TrailStep>,
) -> RealizabilityReport {
    trail.push(step(RULE_DOUBLE_VALIDITY, "obstruction", generic.clone()));
    if let Some(evidence) = hopf_certificate(fixed) {
        trail.push(step(RULE_HOPF_INVARIANT_ONE, "obstruction", evidence.clone()));
        return RealizabilityReport {
            verdict: Verdict::NonRealizable {
                rule: RULE_HOPF_INVARIANT_ONE.to_string(),
                evidence,
            },
            trail,
        };
    }
    RealizabilityReport {
        verdict: Verdict::NonRealizable {
            rule: RULE_DOUBLE_VALIDITY.to_string(),
            evidence: generic,
        },
        trail,
    }
}

/// Run the obstruction rules against a candidate fixed-space algebra.
pub fn check_realizable(fixed: &UnstableAlgebra) -> RealizabilityReport {
    let mut trail = Vec::new();

    // Rule 1: the algebra and its double must validate.
    let report = fixed.validate();
    if !report.is_valid() {
        return validity_failure(
            fixed,
            format!("the algebra is not a valid unstable algebra: {report}"),
            trail,
        );
    }
    let total = match fixed.double() {
        Ok(t) => t,
        Err(e) => return validity_failure(fixed, e.to_string(), trail),
    };
    let total_report = total.validate();
    if !total_report.is_valid() {
        return validity_failure(
            fixed,
            format!("the doubled algebra fails validation: {total_report}"),
            trail,
        );
    }
    trail.push(step(
        RULE_DOUBLE_VALIDITY,
        "passed",
        "the algebra and its double satisfy every axiom",
    ));

    // Rule 2: Hopf invariant one.
    match truncated_height3(&total) {
        Some(d) if !d.is_power_of_two() => {
            let cert = steenrod::decompose_sq(d)
                .expect("squares away from powers of two are decomposable");
            let evidence = format!(
                "the total algebra is F2[X]/(X^3) with deg X = {d}; \
                 Sq{d} = {cert} is decomposable, and every factor acts \
                 through the zero groups strictly between degrees {d} and \
                 {}, so X^2 = Sq{d} X would vanish",
                2 * d
            );
            trail.push(step(RULE_HOPF_INVARIANT_ONE, "obstruction", evidence.clone()));
            return RealizabilityReport {
                verdict: Verdict::NonRealizable {
                    rule: RULE_HOPF_INVARIANT_ONE.to_string(),
                    evidence,
                },
                trail,
            };
        }
        Some(d) if d >= 16 => {
            let evidence = format!(
                "the total algebra is F2[X]/(X^3) with deg X = {d}; a space \
                 with this cohomology would give a map of Hopf invariant one \
                 in dimension {d}, which Adams (1960) excludes outside 1, 2, \
                 4, 8"
            );
            trail.push(step(RULE_HOPF_INVARIANT_ONE, "obstruction", evidence.clone()));
            return RealizabilityReport {
                verdict: Verdict::NonRealizable {
                    rule: RULE_HOPF_INVARIANT_ONE.to_string(),
                    evidence,
                },
                trail,
            };
        }
        Some(d) => {
            trail.push(step(
                RULE_HOPF_INVARIANT_ONE,
                "passed",
                format!(
                    "the total algebra is a projective plane on a degree-{d} \
                     generator, admitted by Adams"
                ),
            ));
        }
        None => {
            trail.push(step(
                RULE_HOPF_INVARIANT_ONE,
                "not applicable",
                "the total algebra is not a height-3 truncated polynomial algebra",
            ));
        }
    }

    // Rule 3: the Floyd pattern.
    if floyd_pattern(&total) {
        let evidence = "the total algebra has classes in degrees 0, 8, 12, 20 \
                        with Sq4 E8 = E12, Sq8 E12 = E20 and E8 E12 = E20; no \
                        space has this cohomology (E. E. Floyd, Lemma 3.4)"
            .to_string();
        trail.push(step(RULE_FLOYD_LEMMA, "obstruction", evidence.clone()));
        return RealizabilityReport {
            verdict: Verdict::NonRealizable {
                rule: RULE_FLOYD_LEMMA.to_string(),
                evidence,
            },
            trail,
        };
    }
    trail.push(step(
        RULE_FLOYD_LEMMA,
        "not applicable",
        "the total algebra does not show the degree 0, 8, 12, 20 pattern",
    ));

    let passed = trail
        .iter()
        .filter(|s| s.outcome == "passed")
        .map(|s| s.rule.clone())
        .collect();
    RealizabilityReport {
        verdict: Verdict::Undetermined { passed },
        trail,
    }
}

// ---- catalog ----------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExpectedVerdict {
    Realizable { witness: String },
    NonRealizable { rule: String },
    Undetermined,
}

#[derive(Clone, Debug)]
pub struct AlgebraEntry {
    pub name: String,
    pub algebra: UnstableAlgebra,
    /// Entries whose Sq-action is deliberately not modeled; only the ring
    /// axioms are checked and the obstruction engine is skipped.
    pub ring_only: bool,
    pub expected: Option<ExpectedVerdict>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct PresentationEntry {
    pub name: String,
    pub presentation: GroupPresentation,
    pub expected_fixed_betti: Vec<u32>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub enum CatalogEntry {
    Algebra(AlgebraEntry),
    Presentation(PresentationEntry),
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        match self {
            CatalogEntry::Algebra(e) => &e.name,
            CatalogEntry::Presentation(e) => &e.name,
        }
    }

    pub fn note(&self) -> &str {
        match self {
            CatalogEntry::Algebra(e) => &e.note,
            CatalogEntry::Presentation(e) => &e.note,
        }
    }
}

/// A claimed (total, fixed) pair with its class correspondence.
#[derive(Clone, Debug)]
pub struct PairEntry {
    pub name: String,
    pub total: String,
    pub fixed: String,
    pub kappa: Vec<(String, String)>,
    pub mode: CompatMode,
    /// Table compatibility is necessary, not sufficient; pairs carrying
    /// `false` here are flagged as not coming from a conjugation space.
    pub conjugation_space: bool,
    pub note: String,
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
    pairs: Vec<PairEntry>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EntryVerification {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn pairs(&self) -> &[PairEntry] {
        &self.pairs
    }

    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name() == name)
    }

    pub fn algebra_entry(&self, name: &str) -> Option<&AlgebraEntry> {
        self.entries.iter().find_map(|e| match e {
            CatalogEntry::Algebra(a) if a.name == name => Some(a),
            _ => None,
        })
    }

    pub fn algebra(&self, name: &str) -> Option<&UnstableAlgebra> {
        self.algebra_entry(name).map(|a| &a.algebra)
    }

    pub fn pair(&self, name: &str) -> Option<&PairEntry> {
        self.pairs.iter().find(|p| p.name == name)
    }

    /// Materialize a pair entry into checkable form.
    pub fn double_pair(&self, entry: &PairEntry) -> Result<DoublePair> {
        let total = self
            .algebra(&entry.total)
            .ok_or_else(|| Error::UnknownEntry(entry.total.clone()))?;
        let fixed = self
            .algebra(&entry.fixed)
            .ok_or_else(|| Error::UnknownEntry(entry.fixed.clone()))?;
        Ok(DoublePair {
            total: total.clone(),
            fixed: fixed.clone(),
            kappa: entry.kappa.clone(),
        })
    }

    /// Run the engine on an algebra entry and apply the recorded witness:
    /// an `Undetermined` engine verdict is upgraded to `Realizable` when
    /// the catalog knows a realizing space.
    pub fn adjudicate(&self, entry: &AlgebraEntry) -> Option<RealizabilityReport> {
        if entry.ring_only {
            return None;
        }
        let mut report = check_realizable(&entry.algebra);
        if let (
            Verdict::Undetermined { .. },
            Some(ExpectedVerdict::Realizable { witness }),
        ) = (&report.verdict, &entry.expected)
        {
            report.trail.push(step(
                "catalog-witness",
                "witness",
                format!("realized by {witness}"),
            ));
            report.verdict = Verdict::Realizable {
                witness: witness.clone(),
            };
        }
        Some(report)
    }

    pub fn verify_entry(&self, name: &str) -> Result<EntryVerification> {
        let entry = self
            .entry(name)
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
        Ok(match entry {
            CatalogEntry::Algebra(e) => self.verify_algebra_entry(e),
            CatalogEntry::Presentation(e) => verify_presentation_entry(e),
        })
    }

    fn verify_algebra_entry(&self, e: &AlgebraEntry) -> EntryVerification {
        if e.ring_only {
            let report = e.algebra.validate_ring();
            return EntryVerification {
                name: e.name.clone(),
                passed: report.is_valid(),
                detail: if report.is_valid() {
                    "ring axioms hold (Sq-action not modeled)".to_string()
                } else {
                    report.to_string()
                },
            };
        }
        let report = e.algebra.validate();
        if !report.is_valid() {
            return EntryVerification {
                name: e.name.clone(),
                passed: false,
                detail: report.to_string(),
            };
        }
        let engine = self.adjudicate(e).expect("not ring-only");
        let (passed, detail) = match (&e.expected, &engine.verdict) {
            (None, v) => (true, format!("verdict {}", v.word())),
            (Some(ExpectedVerdict::Realizable { witness }), Verdict::Realizable { .. }) => (
                true,
                format!("no obstruction; realized by {witness}"),
            ),
            (Some(ExpectedVerdict::NonRealizable { rule }), Verdict::NonRealizable { rule: r, .. }) => {
                if rule == r {
                    (true, format!("obstructed by {r}, as recorded"))
                } else {
                    (false, format!("obstructed by {r}, but {rule} was recorded"))
                }
            }
            (Some(ExpectedVerdict::Undetermined), Verdict::Undetermined { .. }) => {
                (true, "undetermined, as recorded".to_string())
            }
            (Some(expected), got) => (
                false,
                format!("expected {expected:?} but the engine said {}", got.word()),
            ),
        };
        EntryVerification {
            name: e.name.clone(),
            passed,
            detail,
        }
    }

    /// Verify every entry and every pair; pairs are named `pair:<name>`.
    pub fn verify_all(&self) -> Vec<EntryVerification> {
        let mut out: Vec<EntryVerification> = self
            .entries
            .iter()
            .map(|e| self.verify_entry(e.name()).expect("known entry"))
            .collect();
        for p in &self.pairs {
            out.push(self.verify_pair(p));
        }
        out
    }

    pub fn verify_pair(&self, p: &PairEntry) -> EntryVerification {
        let name = format!("pair:{}", p.name);
        match self.double_pair(p) {
            Ok(pair) => {
                let report = check_double_pair(&pair, p.mode);
                EntryVerification {
                    name,
                    passed: report.is_compatible(),
                    detail: if report.is_compatible() {
                        let mode = match p.mode {
                            CompatMode::Full => "ring and Sq tables",
                            CompatMode::RingOnly => "ring tables",
                        };
                        let flag = if p.conjugation_space {
                            ""
                        } else {
                            "; flagged: not a conjugation space"
                        };
                        format!("{mode} compatible{flag}")
                    } else {
                        report.to_string()
                    },
                }
            }
            Err(e) => EntryVerification {
                name,
                passed: false,
                detail: e.to_string(),
            },
        }
    }

    /// For a pair of algebras with fundamental classes and fully modeled
    /// Sq-actions, compare Stiefel–Whitney classes across kappa:
    /// `kappa(w_{2i}) = w_i` is asserted by callers; the analogous statement
    /// for Wu classes is computed and reported but makes no claim.
    pub fn wu_correspondence(&self, pair_name: &str) -> Result<WuCorrespondence> {
        let entry = self
            .pair(pair_name)
            .ok_or_else(|| Error::UnknownEntry(pair_name.to_string()))?;
        if entry.mode != CompatMode::Full {
            return Err(Error::Invalid(format!(
                "pair `{pair_name}` does not model the Sq-action"
            )));
        }
        let pair = self.double_pair(entry)?;
        let w_total = pair.total.sw_classes()?;
        let w_fixed = pair.fixed.sw_classes()?;
        let v_total = pair.total.wu_classes()?;
        let v_fixed = pair.fixed.wu_classes()?;

        let mut image = vec![usize::MAX; pair.total.basis().len()];
        image[pair.total.unit()] = pair.fixed.unit();
        for (t, x) in &pair.kappa {
            let i = pair
                .total
                .index_of(t)
                .ok_or_else(|| Error::Invalid(format!("unknown class `{t}`")))?;
            let j = pair
                .fixed
                .index_of(x)
                .ok_or_else(|| Error::Invalid(format!("unknown class `{x}`")))?;
            image[i] = j;
        }
        let push = |sum: &ClassSum| ClassSum::from_indices(sum.iter().map(|i| image[i]));

        let n = w_fixed.len() - 1; // fundamental degree on the fixed side
        let compare = |total_side: &[ClassSum], fixed_side: &[ClassSum]| -> bool {
            (0..=n).all(|i| {
                let up = total_side
                    .get(2 * i)
                    .cloned()
                    .unwrap_or_else(ClassSum::zero);
                push(&up) == fixed_side[i]
            })
        };
        Ok(WuCorrespondence {
            pair: pair_name.to_string(),
            sw_halves: compare(&w_total, &w_fixed),
            wu_halves: compare(&v_total, &v_fixed),
            total_sw: pair.total.format_graded(&w_total),
            fixed_sw: pair.fixed.format_graded(&w_fixed),
            total_wu: pair.total.format_graded(&v_total),
            fixed_wu: pair.fixed.format_graded(&v_fixed),
        })
    }

    /// Names of pairs eligible for `wu_correspondence`: full Sq modeling
    /// and fundamental classes with a perfect pairing on both sides.
    pub fn wu_eligible_pairs(&self) -> Vec<String> {
        self.pairs
            .iter()
            .filter(|p| p.mode == CompatMode::Full)
            .filter(|p| {
                let ok = |name: &str| {
                    self.algebra(name)
                        .map(|a| a.wu_classes().is_ok())
                        .unwrap_or(false)
                };
                ok(&p.total) && ok(&p.fixed)
            })
            .map(|p| p.name.clone())
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WuCorrespondence {
    pub pair: String,
    /// Whether `kappa(w_{2i}) = w_i` held in every degree.
    pub sw_halves: bool,
    /// Whether the same held for Wu classes (reported, not asserted).
    pub wu_halves: bool,
    pub total_sw: String,
    pub fixed_sw: String,
    pub total_wu: String,
    pub fixed_wu: String,
}

// ---- standard entries ---------------------------------------------------------

fn sphere(n: u32) -> UnstableAlgebra {
    Builder::new(format!("S{n}"))
        .class("s", n)
        .fundamental("s")
        .build()
        .expect("sphere table")
}

fn power_label(gen: &str, m: u32) -> String {
    if m == 1 {
        gen.to_string()
    } else {
        format!("{gen}{m}")
    }
}

/// `F2[x]/(x^{top+1})` on a generator of degree `deg`, with the Steenrod
/// action generated by the top square on `x`:
/// `Sq^{deg*k}(x^m) = binom(m, k) x^{m+k}`, everything else zero.
fn truncated_polynomial(name: &str, gen: &str, deg: u32, top: u32) -> UnstableAlgebra {
    let mut b = Builder::new(name);
    for m in 1..=top {
        b = b.class(&power_label(gen, m), m * deg);
    }
    for i in 1..=top {
        for j in i..=top {
            if i + j <= top {
                b = b.product(
                    &power_label(gen, i),
                    &power_label(gen, j),
                    &[&power_label(gen, i + j)],
                );
            }
        }
    }
    for m in 1..=top {
        for k in 1..=m.min(top - m) {
            if steenrod::binomial_mod2(m as i64, k as i64) {
                b = b.sq(deg * k, &power_label(gen, m), &[&power_label(gen, m + k)]);
            }
        }
    }
    b.fundamental(&power_label(gen, top))
        .build()
        .expect("truncated polynomial table")
}

fn torus() -> UnstableAlgebra {
    Builder::new("T2")
        .class("a", 1)
        .class("b", 1)
        .class("T", 2)
        .product("a", "b", &["T"])
        .fundamental("T")
        .build()
        .expect("torus table")
}

fn klein_bottle() -> UnstableAlgebra {
    Builder::new("K")
        .class("a", 1)
        .class("b", 1)
        .class("T", 2)
        .product("a", "a", &["T"])
        .product("b", "b", &["T"])
        .fundamental("T")
        .build()
        .expect("Klein bottle table")
}

fn floyd_y() -> UnstableAlgebra {
    Builder::new("FloydY")
        .class("e4", 4)
        .class("e6", 6)
        .class("e10", 10)
        .product("e4", "e6", &["e10"])
        .sq(2, "e4", &["e6"])
        .sq(4, "e6", &["e10"])
        .fundamental("e10")
        .build()
        .expect("FloydY table")
}

fn floyd_z() -> UnstableAlgebra {
    Builder::new("FloydZ")
        .class("f2", 2)
        .class("f3", 3)
        .class("f5", 5)
        .product("f2", "f3", &["f5"])
        .sq(1, "f2", &["f3"])
        .sq(2, "f3", &["f5"])
        .fundamental("f5")
        .build()
        .expect("FloydZ table")
}

/// The ring `F2[c, d]/(c^{m+1}, d^{n+1})` with `deg c = 1`, `deg d = 2`.
/// Only the ring is modeled: the honest Sq-action on these spaces is not
/// the one generated by top squares alone, so `ring_only` entries skip the
/// Sq axioms rather than record a wrong table.
fn dold_ring(name: &str, m: u32, n: u32) -> UnstableAlgebra {
    let label = |i: u32, j: u32| -> String {
        match (i, j) {
            (0, 0) => "1".to_string(),
            (i, 0) => power_label("c", i),
            (0, j) => power_label("d", j),
            (1, j) => format!("c{}", power_label("d", j)),
            (i, j) => format!("c{i}{}", power_label("d", j)),
        }
    };
    let mut b = Builder::new(name);
    for i in 0..=m {
        for j in 0..=n {
            if (i, j) != (0, 0) {
                b = b.class(&label(i, j), i + 2 * j);
            }
        }
    }
    let monomials: Vec<(u32, u32)> = (0..=m)
        .flat_map(|i| (0..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| (i, j) != (0, 0))
        .collect();
    for (pos, &(i1, j1)) in monomials.iter().enumerate() {
        for &(i2, j2) in &monomials[pos..] {
            let (i, j) = (i1 + i2, j1 + j2);
            if i <= m && j <= n {
                b = b.product(&label(i1, j1), &label(i2, j2), &[&label(i, j)]);
            } else {
                b = b.product(&label(i1, j1), &label(i2, j2), &[]);
            }
        }
    }
    b.fundamental(&label(m, n)).build().expect("Dold ring table")
}

fn unit_only(name: &str) -> UnstableAlgebra {
    Builder::new(name)
        .fundamental(UNIT_LABEL_STR)
        .build()
        .expect("unit table")
}

const UNIT_LABEL_STR: &str = crate::unstable::UNIT_LABEL;

fn wedge(name: &str, classes: &[(&str, u32)], fundamental: Option<&str>) -> UnstableAlgebra {
    let mut b = Builder::new(name);
    for (label, deg) in classes {
        b = b.class(label, *deg);
    }
    if let Some(f) = fundamental {
        b = b.fundamental(f);
    }
    b.build().expect("wedge table")
}

fn realizable(witness: &str) -> Option<ExpectedVerdict> {
    Some(ExpectedVerdict::Realizable {
        witness: witness.to_string(),
    })
}

fn non_realizable(rule: &str) -> Option<ExpectedVerdict> {
    Some(ExpectedVerdict::NonRealizable {
        rule: rule.to_string(),
    })
}

fn algebra_entry(
    name: &str,
    algebra: UnstableAlgebra,
    expected: Option<ExpectedVerdict>,
    note: &str,
) -> CatalogEntry {
    CatalogEntry::Algebra(AlgebraEntry {
        name: name.to_string(),
        algebra,
        ring_only: false,
        expected,
        note: note.to_string(),
    })
}

fn ring_only_entry(name: &str, algebra: UnstableAlgebra, note: &str) -> CatalogEntry {
    CatalogEntry::Algebra(AlgebraEntry {
        name: name.to_string(),
        algebra,
        ring_only: true,
        expected: None,
        note: note.to_string(),
    })
}

fn pair(
    name: &str,
    total: &str,
    fixed: &str,
    kappa: &[(&str, &str)],
    mode: CompatMode,
    conjugation_space: bool,
    note: &str,
) -> PairEntry {
    PairEntry {
        name: name.to_string(),
        total: total.to_string(),
        fixed: fixed.to_string(),
        kappa: kappa
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        mode,
        conjugation_space,
        note: note.to_string(),
    }
}

fn power_kappa(total_gen: &str, fixed_gen: &str, top: u32) -> Vec<(String, String)> {
    (1..=top)
        .map(|m| (power_label(total_gen, m), power_label(fixed_gen, m)))
        .collect()
}

impl Catalog {
    pub fn standard() -> Catalog {
        let mut entries: Vec<CatalogEntry> = Vec::new();

        // Spheres: fixed S^n sits inside the conjugation sphere S^{2n}.
        for n in [1u32, 2, 3, 4, 6, 8] {
            entries.push(algebra_entry(
                &format!("S{n}"),
                sphere(n),
                realizable(&format!("S{}", 2 * n)),
                "sphere; the conjugation sphere doubles the dimension",
            ));
        }

        entries.push(algebra_entry(
            "S1vS2",
            wedge("S1vS2", &[("s1", 1), ("s2", 2)], None),
            realizable("S2vS4"),
            "wedge of spheres; realized by the wedge of conjugation spheres",
        ));
        entries.push(algebra_entry(
            "S2vS4",
            wedge("S2vS4", &[("s2", 2), ("s4", 4)], None),
            realizable("S4vS8"),
            "wedge of even spheres; also the total space over S1vS2",
        ));

        entries.push(algebra_entry(
            "Point",
            unit_only("Point"),
            realizable("a point"),
            "the one-point space",
        ));
        entries.push(algebra_entry(
            "MoorePTorsion",
            unit_only("MoorePTorsion"),
            realizable("an odd Moore space with the trivial involution"),
            "Moore space on an odd cyclic group: invisible to mod-2 cohomology",
        ));
        entries.push(algebra_entry(
            "AcyclicTelescope",
            unit_only("AcyclicTelescope"),
            realizable("an acyclic telescope with the trivial involution"),
            "acyclic but not contractible; mod-2 cohomology cannot tell",
        ));

        entries.push(algebra_entry(
            "PoincareSphere",
            Builder::new("PoincareSphere")
                .class("g3", 3)
                .fundamental("g3")
                .build()
                .expect("Poincare sphere table"),
            realizable("S6 with its linear conjugation"),
            "the Poincare homology sphere has the mod-2 cohomology of S3",
        ));
        entries.push(algebra_entry(
            "Sigma3Poincare",
            Builder::new("Sigma3Poincare")
                .class("g6", 6)
                .fundamental("g6")
                .build()
                .expect("suspension table"),
            realizable("S12"),
            "triple suspension of the Poincare sphere: S6 by the double \
             suspension theorem, paired with PoincareSphere below",
        ));

        // Projective spaces.
        for n in 2u32..=6 {
            entries.push(algebra_entry(
                &format!("RP{n}"),
                truncated_polynomial(&format!("RP{n}"), "a", 1, n),
                realizable(&format!("CP{n}")),
                "real projective space; fixed locus of complex conjugation",
            ));
            entries.push(algebra_entry(
                &format!("CP{n}"),
                truncated_polynomial(&format!("CP{n}"), "x", 2, n),
                realizable(&format!("HP{n}")),
                "complex projective space; fixed locus of the quaternionic \
                 involution",
            ));
            entries.push(algebra_entry(
                &format!("HP{n}"),
                truncated_polynomial(&format!("HP{n}"), "y", 4, n),
                if n == 2 {
                    realizable("OP2")
                } else {
                    Some(ExpectedVerdict::Undetermined)
                },
                if n == 2 {
                    "quaternionic plane; fixed locus of the octonion plane"
                } else {
                    "quaternionic projective space; no octonionic space above \
                     it, and the engine finds no obstruction"
                },
            ));
        }
        entries.push(algebra_entry(
            "OP2",
            truncated_polynomial("OP2", "x", 8, 2),
            non_realizable(RULE_HOPF_INVARIANT_ONE),
            "octonion plane as a candidate fixed space: the double would be \
             a projective plane on a degree-16 class",
        ));

        // Surfaces and their doubles.
        entries.push(algebra_entry(
            "T2",
            torus(),
            realizable("S2 x S2"),
            "torus; fixed locus of the product of conjugation 2-spheres",
        ));
        entries.push(algebra_entry(
            "K",
            klein_bottle(),
            realizable("CP2 # CP2 (equivariant connected sum)"),
            "Klein bottle, with the odd mod-2 intersection form",
        ));
        let mut dt2 = torus().double().expect("torus doubles");
        dt2.set_name("DT2");
        entries.push(algebra_entry(
            "DT2",
            dt2,
            realizable("S4 x S4"),
            "double of the torus: the cohomology of S2 x S2",
        ));
        let mut dk = klein_bottle().double().expect("Klein bottle doubles");
        dk.set_name("DK");
        entries.push(algebra_entry(
            "DK",
            dk,
            realizable("HP2 # HP2 (equivariant connected sum)"),
            "double of the Klein bottle: the mod-2 cohomology of CP2 # CP2",
        ));

        // The Floyd pair.
        entries.push(algebra_entry(
            "FloydY",
            floyd_y(),
            non_realizable(RULE_FLOYD_LEMMA),
            "valid algebra whose double shows the degree 0, 8, 12, 20 pattern",
        ));
        entries.push(algebra_entry(
            "FloydZ",
            floyd_z(),
            Some(ExpectedVerdict::Undetermined),
            "half of FloydY: every rule passes, none certifies it",
        ));

        // Dold rings and their doubles (ring only).
        for (m, n) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
            let name = format!("P{m}{n}");
            let ring = dold_ring(&name, m, n);
            let mut dring = ring.double_ring().expect("Dold ring axioms hold");
            entries.push(ring_only_entry(
                &name,
                ring,
                "Dold-type ring F2[c,d]/(c^{m+1}, d^{n+1}); Sq-action not \
                 modeled here",
            ));
            let dname = format!("DP{m}{n}");
            dring.set_name(&dname);
            entries.push(ring_only_entry(
                &dname,
                dring,
                "degree-doubled Dold-type ring",
            ));
        }

        // A presentation-level entry: <x, y | x^2, y^2, (xy)^4>, every
        // relator a literal square ((xy)^4 = ((xy)^2)^2).
        entries.push(CatalogEntry::Presentation(PresentationEntry {
            name: "D8Complex".to_string(),
            presentation: GroupPresentation::new(
                vec!["x".to_string(), "y".to_string()],
                vec![
                    Word::new(vec![letter(0); 2]),
                    Word::new(vec![letter(1); 2]),
                    Word::new(
                        (0..4).flat_map(|_| [letter(0), letter(1)]).collect(),
                    ),
                ],
            )
            .expect("dihedral presentation"),
            expected_fixed_betti: vec![1, 2, 3],
            note: "presentation complex of the dihedral group of order 8; \
                   every relator is a square"
                .to_string(),
        }));

        let full = CompatMode::Full;
        let ring = CompatMode::RingOnly;
        let mut pairs = vec![
            pair("S2/S1", "S2", "S1", &[("s", "s")], full, true,
                 "conjugation 2-sphere"),
            pair("S4/S2", "S4", "S2", &[("s", "s")], full, true,
                 "conjugation 4-sphere"),
            pair("S6/S3", "S6", "S3", &[("s", "s")], full, true,
                 "conjugation 6-sphere"),
            pair("S8/S4", "S8", "S4", &[("s", "s")], full, true,
                 "conjugation 8-sphere"),
            pair(
                "S2vS4/S1vS2",
                "S2vS4",
                "S1vS2",
                &[("s2", "s1"), ("s4", "s2")],
                full,
                true,
                "wedge of conjugation spheres at fixed base points",
            ),
            pair(
                "S2vS4/S1vS2-claim",
                "S2vS4",
                "S1vS2",
                &[("s2", "s1"), ("s4", "s2")],
                full,
                false,
                "second action on the same wedge, flagged not pure: the \
                 tables are compatible, yet the involution is not a \
                 conjugation, so compatibility alone certifies nothing",
            ),
            pair(
                "Sigma3Poincare/PoincareSphere",
                "Sigma3Poincare",
                "PoincareSphere",
                &[("g6", "g3")],
                full,
                true,
                "the triple suspension is S6 by the double suspension \
                 theorem, and the Poincare sphere sits inside as the fixed \
                 set of a non-smoothable involution",
            ),
            pair(
                "AcyclicTelescope/Point",
                "AcyclicTelescope",
                "Point",
                &[],
                full,
                true,
                "trivial involution on an acyclic space",
            ),
            pair(
                "MoorePTorsion/MoorePTorsion",
                "MoorePTorsion",
                "MoorePTorsion",
                &[],
                full,
                true,
                "odd torsion is invisible mod 2 on both sides",
            ),
            pair(
                "FloydY/FloydZ",
                "FloydY",
                "FloydZ",
                &[("e4", "f2"), ("e6", "f3"), ("e10", "f5")],
                full,
                true,
                "compatible tables; realizability is obstructed for FloydY \
                 and open for FloydZ",
            ),
            pair(
                "DT2/T2",
                "DT2",
                "T2",
                &[("a", "a"), ("b", "b"), ("T", "T")],
                full,
                true,
                "S2 x S2 over the torus",
            ),
            pair(
                "DK/K",
                "DK",
                "K",
                &[("a", "a"), ("b", "b"), ("T", "T")],
                full,
                true,
                "CP2 # CP2 over the Klein bottle",
            ),
        ];
        for n in 2u32..=6 {
            pairs.push(PairEntry {
                name: format!("CP{n}/RP{n}"),
                total: format!("CP{n}"),
                fixed: format!("RP{n}"),
                kappa: power_kappa("x", "a", n),
                mode: full,
                conjugation_space: true,
                note: "complex conjugation with real locus".to_string(),
            });
            pairs.push(PairEntry {
                name: format!("HP{n}/CP{n}"),
                total: format!("HP{n}"),
                fixed: format!("CP{n}"),
                kappa: power_kappa("y", "x", n),
                mode: full,
                conjugation_space: true,
                note: "quaternionic involution with complex locus".to_string(),
            });
        }
        pairs.push(pair(
            "OP2/HP2",
            "OP2",
            "HP2",
            &[("x", "y"), ("x2", "y2")],
            full,
            true,
            "octonion plane over the quaternion plane",
        ));
        for (m, n) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
            let fixed = format!("P{m}{n}");
            let total = format!("DP{m}{n}");
            let kappa = Catalog::identity_kappa_for_dold(m, n);
            pairs.push(PairEntry {
                name: format!("{total}/{fixed}"),
                total,
                fixed,
                kappa,
                mode: ring,
                conjugation_space: true,
                note: "doubled Dold-type ring over its half; ring tables only"
                    .to_string(),
            });
        }

        Catalog { entries, pairs }
    }

    fn identity_kappa_for_dold(m: u32, n: u32) -> Vec<(String, String)> {
        let labels = dold_ring("tmp", m, n);
        labels
            .basis()
            .iter()
            .filter(|c| c.label != UNIT_LABEL_STR)
            .map(|c| (c.label.clone(), c.label.clone()))
            .collect()
    }
}

fn letter(generator: usize) -> Letter {
    Letter {
        generator,
        inverse: false,
    }
}

fn verify_presentation_entry(e: &PresentationEntry) -> EntryVerification {
    match build_presentation_complex(&e.presentation) {
        Ok(c) => {
            let passed = c.fixed_betti == e.expected_fixed_betti && c.half_dimension_invariant();
            EntryVerification {
                name: e.name.clone(),
                passed,
                detail: if passed {
                    format!("Betti numbers {:?} as recorded", c.fixed_betti)
                } else {
                    format!(
                        "Betti numbers {:?} differ from recorded {:?}",
                        c.fixed_betti, e.expected_fixed_betti
                    )
                },
            }
        }
        Err(err) => EntryVerification {
            name: e.name.clone(),
            passed: false,
            detail: err.to_string(),
        },
    }
}
