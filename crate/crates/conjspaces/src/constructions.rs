//! Cell-complex constructions that carry a conjugation structure.
//!
//! Two sources are implemented:
//! - presentation 2-complexes of group presentations all of whose relators
//!   are squares `u*u` — squaring is what lets the 2-cells be attached
//!   equivariantly, and it forces the mod-2 boundary map to vanish, so the
//!   Betti numbers are read off the presentation;
//! - simply-connected 4-complexes built from intersection-form data on a
//!   wedge of 2-spheres, which arise as fixed spaces of 8-dimensional
//!   conjugation complexes with the doubled cohomology.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{self, BitVec};
use crate::unstable::{Builder, DoublePair, UnstableAlgebra};

/// One letter of a word: a generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word in the free group, as a sequence of letters.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Freely reduce: cancel adjacent `g g'` and `g' g` pairs until none
    /// remain.
    pub fn reduced(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match stack.last() {
                Some(&top) if top.generator == l.generator && top.inverse != l.inverse => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word(stack)
    }

    /// If the reduced form is `u*u`, return `u`.  The test is literal: the
    /// first half of the reduced word must equal the second half letter by
    /// letter, with no conjugation or root extraction attempted.
    pub fn square_root(&self) -> Option<Word> {
        let r = self.reduced();
        if !r.0.len().is_multiple_of(2) {
            return None;
        }
        let half = r.0.len() / 2;
        if r.0[..half] == r.0[half..] {
            Some(Word(r.0[..half].to_vec()))
        } else {
            None
        }
    }

    pub fn is_square(&self) -> bool {
        self.square_root().is_some()
    }

    /// Exponent sum of each generator, mod 2.
    pub fn exponent_sums_mod2(&self, generator_count: usize) -> BitVec {
        let mut v = BitVec::zeros(generator_count);
        for l in &self.0 {
            v.set(l.generator, !v.get(l.generator));
        }
        v
    }

    pub fn render(&self, generators: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| {
                let mut s = generators[l.generator].clone();
                if l.inverse {
                    s.push('\'');
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(Error::Invalid(format!("duplicate generator `{g}`")));
            }
        }
        for w in &relators {
            for l in w.letters() {
                if l.generator >= generators.len() {
                    return Err(Error::Invalid(
                        "relator uses a letter outside the generator list".into(),
                    ));
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn render(&self) -> String {
        let rels = self
            .relators
            .iter()
            .map(|w| w.render(&self.generators))
            .collect::<Vec<_>>()
            .join(", ");
        format!("<{} | {}>", self.generators.join(", "), rels)
    }
}

/// A cell of the total space: a cone on `S^{n*rho - 1}` where `rho` is the
/// regular representation of the involution, so its real dimension is `2n`
/// and it meets the fixed space in an `n`-cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjugationCell {
    pub rho_multiple: usize,
    pub attaching: String,
}

/// An ordinary CW cell of the fixed space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CwCell {
    pub dimension: usize,
    pub attaching: String,
}

/// The output of the two builders: equivariant cells, the induced CW
/// structure on the fixed space, its mod-2 Betti numbers, and — where the
/// construction determines them — the two cohomology rings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjugationComplexDescription {
    pub name: String,
    pub cells: Vec<ConjugationCell>,
    pub fixed_cells: Vec<CwCell>,
    /// Mod-2 Betti numbers of the fixed space, degree 0 upward.
    pub fixed_betti: Vec<u32>,
    pub cohomology_fixed: Option<UnstableAlgebra>,
    pub cohomology_total: Option<UnstableAlgebra>,
}

impl ConjugationComplexDescription {
    /// Every equivariant cell meets the fixed space in a cell of exactly
    /// half its real dimension; the two cell lists are kept in matching
    /// order so this can be checked pairwise.
    pub fn half_dimension_invariant(&self) -> bool {
        self.cells.len() == self.fixed_cells.len()
            && self
                .cells
                .iter()
                .zip(&self.fixed_cells)
                .all(|(c, f)| c.rho_multiple == f.dimension && 2 * f.dimension == 2 * c.rho_multiple)
    }

    /// Betti numbers of the total space: cells sit in even real dimensions
    /// only, so the fixed Betti numbers reappear with degrees doubled.
    pub fn total_betti(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(2 * self.fixed_betti.len());
        for (d, &b) in self.fixed_betti.iter().enumerate() {
            if d > 0 {
                out.push(0);
            }
            out.push(b);
        }
        out
    }

    /// Package the two cohomology rings as a double pair matched by the
    /// identity on labels.  Fails when the construction only determined the
    /// Betti data.
    pub fn double_pair(&self) -> Result<DoublePair> {
        match (&self.cohomology_total, &self.cohomology_fixed) {
            (Some(total), Some(fixed)) => {
                let kappa = fixed
                    .basis()
                    .iter()
                    .map(|c| (c.label.clone(), c.label.clone()))
                    .collect();
                Ok(DoublePair {
                    total: total.clone(),
                    fixed: fixed.clone(),
                    kappa,
                })
            }
            _ => Err(Error::Invalid(format!(
                "cohomology of `{}` is not determined by the construction",
                self.name
            ))),
        }
    }
}

/// Build the presentation 2-complex of an all-square presentation, with its
/// equivariant doubling.  Betti numbers are computed from the actual boundary
/// matrix, not assumed: one vertex makes `d1 = 0`, and the rank of the mod-2
/// exponent matrix gives the rest (it is zero precisely because relators are
/// squares, but the rank is still computed honestly).
pub fn build_presentation_complex(p: &GroupPresentation) -> Result<ConjugationComplexDescription> {
    for w in p.relators() {
        if !w.is_square() {
            return Err(Error::NotAllRelatorsSquare(format!(
                "relator {} is not a square",
                w.reduced().render(p.generators())
            )));
        }
    }
    let rows = p
        .relators()
        .iter()
        .map(|w| w.exponent_sums_mod2(p.generators().len()));
    let rank = f2::rank(p.generators().len(), rows) as u32;
    let b0 = 1u32;
    let b1 = p.generators().len() as u32 - rank;
    let b2 = p.relators().len() as u32 - rank;

    let mut cells = vec![ConjugationCell {
        rho_multiple: 0,
        attaching: "base point".into(),
    }];
    let mut fixed_cells = vec![CwCell {
        dimension: 0,
        attaching: "base point".into(),
    }];
    for g in p.generators() {
        cells.push(ConjugationCell {
            rho_multiple: 1,
            attaching: format!("wedge summand S^rho for {g}"),
        });
        fixed_cells.push(CwCell {
            dimension: 1,
            attaching: format!("loop {g}"),
        });
    }
    for w in p.relators() {
        let rendered = w.reduced().render(p.generators());
        cells.push(ConjugationCell {
            rho_multiple: 2,
            attaching: format!("doubled relator {rendered}"),
        });
        fixed_cells.push(CwCell {
            dimension: 2,
            attaching: format!("relator {rendered}"),
        });
    }

    Ok(ConjugationComplexDescription {
        name: p.render(),
        cells,
        fixed_cells,
        fixed_betti: vec![b0, b1, b2],
        cohomology_fixed: None,
        cohomology_total: None,
    })
}

/// Attaching data for the top cell over a wedge of 2-spheres: an integer
/// coefficient for each Hopf component `eta_i` and each Whitehead component
/// `omega(i,j)`.  The integers are kept as given — only their mod-2 shadows
/// feed the cohomology ring — and the doubled element renames `eta_i` to
/// `nu_i` and `omega(i,j)` to `W(i,j)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AttachingElement {
    eta: BTreeMap<usize, i64>,
    omega: BTreeMap<(usize, usize), i64>,
}

impl AttachingElement {
    pub fn zero() -> Self {
        AttachingElement::default()
    }

    /// `eta_terms` lists 0-based `(i, coefficient)`; `omega_terms` lists
    /// 0-based `(i, j, coefficient)` with `i != j`.  Zero coefficients are
    /// dropped; `(j, i)` folds onto `(i, j)`.
    pub fn new(eta_terms: &[(usize, i64)], omega_terms: &[(usize, usize, i64)]) -> Result<Self> {
        let mut a = AttachingElement::zero();
        for &(i, c) in eta_terms {
            a.add_eta(i, c);
        }
        for &(i, j, c) in omega_terms {
            a.add_omega(i, j, c)?;
        }
        Ok(a)
    }

    pub fn add_eta(&mut self, i: usize, coefficient: i64) {
        let entry = self.eta.entry(i).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.eta.remove(&i);
        }
    }

    pub fn add_omega(&mut self, i: usize, j: usize, coefficient: i64) -> Result<()> {
        if i == j {
            return Err(Error::Invalid(format!(
                "omega({},{}) is not a Whitehead component; use eta_{} for the diagonal",
                i + 1,
                j + 1,
                i + 1
            )));
        }
        let key = (i.min(j), i.max(j));
        let entry = self.omega.entry(key).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.omega.remove(&key);
        }
        Ok(())
    }

    pub fn eta_coefficient(&self, i: usize) -> i64 {
        self.eta.get(&i).copied().unwrap_or(0)
    }

    pub fn omega_coefficient(&self, i: usize, j: usize) -> i64 {
        self.omega
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or(0)
    }

    pub fn eta_mod2(&self, i: usize) -> bool {
        self.eta_coefficient(i) % 2 != 0
    }

    pub fn omega_mod2(&self, i: usize, j: usize) -> bool {
        self.omega_coefficient(i, j) % 2 != 0
    }

    /// Largest 0-based sphere index mentioned, if any.
    pub fn max_index(&self) -> Option<usize> {
        let e = self.eta.keys().max().copied();
        let o = self.omega.keys().map(|&(_, j)| j).max();
        e.max(o)
    }

    pub fn is_zero(&self) -> bool {
        self.eta.is_empty() && self.omega.is_empty()
    }

    fn render_with(&self, eta_name: &str, omega_name: &str) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (&i, &c) in &self.eta {
            let name = format!("{eta_name}{}", i + 1);
            terms.push(if c == 1 {
                name
            } else {
                format!("{c}*{name}")
            });
        }
        for (&(i, j), &c) in &self.omega {
            let name = format!("{omega_name}({},{})", i + 1, j + 1);
            terms.push(if c == 1 {
                name
            } else {
                format!("{c}*{name}")
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// The element of pi_3 of the wedge, in the `eta_i` / `omega(i,j)` names.
    pub fn render(&self) -> String {
        self.render_with("eta", "omega")
    }

    /// The doubled element, in the `nu_i` / `W(i,j)` names.
    pub fn render_doubled(&self) -> String {
        self.render_with("nu", "W")
    }
}

impl fmt::Display for AttachingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Build the 4-complex on `num_spheres` 2-spheres with top cell attached
/// along `attach`, together with its 8-dimensional conjugation double: a
/// wedge of `S^{2rho}` summands plus one `4rho`-cell attached along the
/// doubled element.  Both cohomology rings are fully determined: classes
/// `x1..xn` in degree 2 and `t` in degree 4, with `xi*xj = omega(i,j) t`
/// (mod 2) and `xi^2 = eta_i t` (mod 2); every Steenrod square is then
/// forced by degree and the top-square rule.
pub fn realize_four_complex(
    num_spheres: usize,
    attach: &AttachingElement,
) -> Result<ConjugationComplexDescription> {
    if let Some(top) = attach.max_index() {
        if top >= num_spheres {
            return Err(Error::Invalid(format!(
                "attaching element mentions sphere {} but there are only {num_spheres}",
                top + 1
            )));
        }
    }

    let label = |i: usize| format!("x{}", i + 1);
    let mut b = Builder::new(format!("4-complex[{}]", attach.render()));
    for i in 0..num_spheres {
        b = b.class(&label(i), 2);
    }
    b = b.class("t", 4).fundamental("t");
    for i in 0..num_spheres {
        if attach.eta_mod2(i) {
            b = b.product(&label(i), &label(i), &["t"]);
        }
        for j in (i + 1)..num_spheres {
            if attach.omega_mod2(i, j) {
                b = b.product(&label(i), &label(j), &["t"]);
            }
        }
    }
    let fixed = b.build()?;
    let mut total = fixed.double()?;
    total.set_name(format!("8-complex[{}]", attach.render_doubled()));

    let mut cells = vec![ConjugationCell {
        rho_multiple: 0,
        attaching: "base point".into(),
    }];
    let mut fixed_cells = vec![CwCell {
        dimension: 0,
        attaching: "base point".into(),
    }];
    for i in 0..num_spheres {
        cells.push(ConjugationCell {
            rho_multiple: 2,
            attaching: format!("wedge summand S^(2rho) #{}", i + 1),
        });
        fixed_cells.push(CwCell {
            dimension: 2,
            attaching: format!("wedge summand S^2 #{}", i + 1),
        });
    }
    cells.push(ConjugationCell {
        rho_multiple: 4,
        attaching: attach.render_doubled(),
    });
    fixed_cells.push(CwCell {
        dimension: 4,
        attaching: attach.render(),
    });

    Ok(ConjugationComplexDescription {
        name: format!("4-complex[{}]", attach.render()),
        cells,
        fixed_cells,
        fixed_betti: vec![1, 0, num_spheres as u32, 0, 1],
        cohomology_fixed: Some(fixed),
        cohomology_total: Some(total),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unstable::{check_double_pair, ClassSum, CompatMode};

    fn letter(g: usize, inverse: bool) -> Letter {
        Letter {
            generator: g,
            inverse,
        }
    }

    fn word(spec: &[(usize, bool)]) -> Word {
        Word::new(spec.iter().map(|&(g, i)| letter(g, i)).collect())
    }

    #[test]
    fn free_reduction_cancels_inverse_pairs() {
        // x y y' x reduces to x x.
        let w = word(&[(0, false), (1, false), (1, true), (0, false)]);
        assert_eq!(w.reduced(), word(&[(0, false), (0, false)]));
        assert!(w.is_square());
        assert_eq!(w.square_root().unwrap(), word(&[(0, false)]));
    }

    #[test]
    fn odd_and_mismatched_words_are_not_squares() {
        assert!(!word(&[(0, false), (0, false), (0, false)]).is_square());
        // x y is even but not a square.
        assert!(!word(&[(0, false), (1, false)]).is_square());
        // x' x' is the square of x'.
        assert!(word(&[(0, true), (0, true)]).is_square());
    }

    #[test]
    fn single_square_relator_gives_rp2_betti() {
        let p = GroupPresentation::new(vec!["x".into()], vec![word(&[(0, false), (0, false)])])
            .unwrap();
        let c = build_presentation_complex(&p).unwrap();
        assert_eq!(c.fixed_betti, vec![1, 1, 1]);
        assert_eq!(c.total_betti(), vec![1, 0, 1, 0, 1]);
        assert!(c.half_dimension_invariant());
        // One 0-cell, one rho-cell, one 2rho-cell.
        let multiples: Vec<usize> = c.cells.iter().map(|cell| cell.rho_multiple).collect();
        assert_eq!(multiples, vec![0, 1, 2]);
        assert!(c.cohomology_fixed.is_none());
        assert!(c.double_pair().is_err());
    }

    #[test]
    fn dihedral_presentation_with_square_relators() {
        // <x, y | x^2, y^2, (xy)^4>: the third relator is ((xy)^2)^2.
        let x = 0;
        let y = 1;
        let xy4: Vec<(usize, bool)> = (0..4).flat_map(|_| [(x, false), (y, false)]).collect();
        let p = GroupPresentation::new(
            vec!["x".into(), "y".into()],
            vec![
                word(&[(x, false); 2]),
                word(&[(y, false); 2]),
                word(&xy4),
            ],
        )
        .unwrap();
        let c = build_presentation_complex(&p).unwrap();
        assert_eq!(c.fixed_betti, vec![1, 2, 3]);
        assert_eq!(c.total_betti(), vec![1, 0, 2, 0, 3]);
        assert!(c.half_dimension_invariant());
    }

    #[test]
    fn commutator_relator_is_rejected() {
        // <x, y | x y x' y'>: the commutator is reduced but not a square.
        let p = GroupPresentation::new(
            vec!["x".into(), "y".into()],
            vec![word(&[(0, false), (1, false), (0, true), (1, true)])],
        )
        .unwrap();
        match build_presentation_complex(&p) {
            Err(Error::NotAllRelatorsSquare(msg)) => assert!(msg.contains("x y x' y'")),
            other => panic!("expected NotAllRelatorsSquare, got {other:?}"),
        }
    }

    #[test]
    fn non_square_relator_is_rejected_with_its_name() {
        let p = GroupPresentation::new(vec!["x".into()], vec![word(&[(0, false); 3])]).unwrap();
        match build_presentation_complex(&p) {
            Err(Error::NotAllRelatorsSquare(msg)) => assert!(msg.contains("x x x")),
            other => panic!("expected NotAllRelatorsSquare, got {other:?}"),
        }
    }

    #[test]
    fn unit_hopf_attachment_is_the_complex_projective_plane() {
        let attach = AttachingElement::new(&[(0, 1)], &[]).unwrap();
        let c = realize_four_complex(1, &attach).unwrap();
        assert!(c.half_dimension_invariant());
        let pair = c.double_pair().unwrap();
        assert!(pair.fixed.validate().is_valid());
        assert!(pair.total.validate().is_valid());
        assert!(check_double_pair(&pair, CompatMode::Full).is_compatible());
        // x1^2 = t, the defining relation of the projective plane.
        let x = pair.fixed.index_of("x1").unwrap();
        let t = pair.fixed.index_of("t").unwrap();
        assert_eq!(pair.fixed.product_classes(x, x), ClassSum::singleton(t));
        // Total side sits in degrees 0, 4, 8.
        assert_eq!(pair.total.degree(pair.total.index_of("x1").unwrap()), 4);
        assert_eq!(pair.total.degree(pair.total.index_of("t").unwrap()), 8);
        // The top cell is attached along the doubled Hopf name.
        assert_eq!(c.cells.last().unwrap().attaching, "nu1");
        assert_eq!(c.fixed_cells.last().unwrap().attaching, "eta1");
    }

    #[test]
    fn even_hopf_coefficient_kills_the_square() {
        let attach = AttachingElement::new(&[(0, 2)], &[]).unwrap();
        assert_eq!(attach.eta_coefficient(0), 2);
        assert_eq!(attach.render(), "2*eta1");
        assert_eq!(attach.render_doubled(), "2*nu1");
        let c = realize_four_complex(1, &attach).unwrap();
        let a = c.cohomology_fixed.unwrap();
        let x = a.index_of("x1").unwrap();
        assert!(a.product_classes(x, x).is_zero());
    }

    #[test]
    fn whitehead_attachment_gives_s2_cross_s2_cohomology() {
        // eta = 0, omega(1,2) = 1: the 4-complex is S^2 x S^2.
        let attach = AttachingElement::new(&[], &[(0, 1, 1)]).unwrap();
        let c = realize_four_complex(2, &attach).unwrap();
        let pair = c.double_pair().unwrap();
        assert!(check_double_pair(&pair, CompatMode::Full).is_compatible());
        let a = &pair.fixed;
        let (x1, x2) = (a.index_of("x1").unwrap(), a.index_of("x2").unwrap());
        assert!(a.product_classes(x1, x1).is_zero());
        assert_eq!(
            a.product_classes(x1, x2),
            ClassSum::singleton(a.index_of("t").unwrap())
        );
        // Wu classes: even form, so v2 = 0 and v = 1.
        let v = a.wu_classes().unwrap();
        assert_eq!(a.format_graded(&v), "1");
    }

    #[test]
    fn zero_form_has_degenerate_pairing() {
        // Zero attachment on one sphere: wedge S2 v S4, no Poincare duality.
        let c = realize_four_complex(1, &AttachingElement::zero()).unwrap();
        let a = c.cohomology_fixed.unwrap();
        assert!(a.validate().is_valid());
        assert!(matches!(a.wu_classes(), Err(Error::NotPoincareDuality(_))));
    }

    #[test]
    fn attaching_element_arithmetic_and_range_checks() {
        let mut a = AttachingElement::zero();
        a.add_eta(0, 1);
        a.add_eta(0, -1);
        assert!(a.is_zero());
        assert_eq!(a.render(), "0");

        a.add_omega(1, 0, 3).unwrap();
        assert_eq!(a.omega_coefficient(0, 1), 3);
        assert!(a.omega_mod2(1, 0));
        assert_eq!(a.render(), "3*omega(1,2)");

        assert!(a.add_omega(2, 2, 1).is_err());
        // Index out of range for the sphere count.
        assert!(realize_four_complex(1, &a).is_err());
        assert!(realize_four_complex(2, &a).is_ok());
    }
}
