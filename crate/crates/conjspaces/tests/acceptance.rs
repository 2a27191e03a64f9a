//! The ten acceptance checks, one test per line of `cargo test --test
//! acceptance`.  Everything is exact arithmetic; expected values are frozen
//! literals or recomputed by an oracle written independently of the module
//! under test.

use std::path::PathBuf;
use std::process::Command;

use num::{BigRational, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use conjspaces::catalog::{check_realizable, Catalog, Verdict};
use conjspaces::cayley_dickson::{
    fixed_subalgebra_basis, fixed_subalgebra_isomorphism, hopf, CDElement, ProjectivePoint,
};
use conjspaces::constructions::{
    build_presentation_complex, realize_four_complex, AttachingElement,
};
use conjspaces::f2::{rank, BitVec};
use conjspaces::formats::{alg, hermitian, presentation};
use conjspaces::jordan::{classify_stratum, jordan_product, projector_from_vector, StratumTag};
use conjspaces::sampling::{self, DEFAULT_SEED};
use conjspaces::steenrod::{
    adem_normalize, admissible_basis, decompose_sq, is_decomposable, normalize_with_strategy,
    Element, Monomial, RewriteStrategy,
};
use conjspaces::unstable::{check_double_pair, Builder, CompatMode, UnstableAlgebra};

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .expect("workspace root")
}

// ---- 1: Cayley-Dickson identities -----------------------------------------------

#[test]
fn a01_cayley_dickson_identities() {
    // Exhaustive over basis units at every level.
    for level in 0..=3u8 {
        let n = 1usize << level;
        let one = CDElement::one(level);
        let units: Vec<CDElement> = (0..n).map(|i| CDElement::basis_unit(level, i)).collect();
        for a in &units {
            assert_eq!(one.mul(a).unwrap(), *a);
            assert_eq!(a.mul(&one).unwrap(), *a);
            assert_eq!(a.tau().tau(), *a);
            assert_eq!(a.tau().conj(), a.conj().tau());
        }
        for a in &units {
            for b in &units {
                let ab = a.mul(b).unwrap();
                assert_eq!(ab.conj(), b.conj().mul(&a.conj()).unwrap());
                assert_eq!(ab.tau(), a.tau().mul(&b.tau()).unwrap());
                assert_eq!(ab.norm(), a.norm() * b.norm());
            }
        }
        // Exhaustive triples: associative through the quaternions, and the
        // count of broken triples at the octonion level is nonzero.
        let mut broken = 0usize;
        for a in &units {
            for b in &units {
                for c in &units {
                    let left = a.mul(b).unwrap().mul(c).unwrap();
                    let right = a.mul(&b.mul(c).unwrap()).unwrap();
                    if level <= 2 {
                        assert_eq!(left, right, "associativity at level {level}");
                    } else if left != right {
                        broken += 1;
                    }
                }
            }
        }
        if level == 3 {
            assert!(broken > 0, "octonion units should break associativity");
        }
    }

    // The named witness.
    let (e1, e2, e4) = (
        CDElement::basis_unit(3, 1),
        CDElement::basis_unit(3, 2),
        CDElement::basis_unit(3, 4),
    );
    assert_ne!(
        e1.mul(&e2).unwrap().mul(&e4).unwrap(),
        e1.mul(&e2.mul(&e4).unwrap()).unwrap()
    );

    // 10^3 random rational samples, 250 per level.
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for level in 0..=3u8 {
        let one = CDElement::one(level);
        for _ in 0..250 {
            let a = sampling::cd_element(&mut rng, level);
            let b = sampling::cd_element(&mut rng, level);
            let ab = a.mul(&b).unwrap();
            assert_eq!(one.mul(&a).unwrap(), a);
            assert_eq!(a.mul(&one).unwrap(), a);
            assert_eq!(ab.conj(), b.conj().mul(&a.conj()).unwrap());
            assert_eq!(a.tau().tau(), a);
            assert_eq!(ab.tau(), a.tau().mul(&b.tau()).unwrap());
            assert_eq!(a.tau().conj(), a.conj().tau());
            assert_eq!(ab.norm(), a.norm() * b.norm());
            if level <= 2 {
                let c = sampling::cd_element(&mut rng, level);
                assert_eq!(
                    ab.mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
            }
        }
    }
}

// ---- 2: the fixed-subalgebra tower ----------------------------------------------

#[test]
fn a02_fixed_subalgebra_tower() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for level in 1..=3u8 {
        let basis = fixed_subalgebra_basis(level).unwrap();
        assert_eq!(basis.len(), 1usize << (level - 1), "dimension 2^(k-1)");
        for u in &basis {
            assert!(u.is_tau_fixed());
        }

        // Closed under multiplication: products of fixed elements are fixed,
        // on the basis and on random fixed samples.
        for a in &basis {
            for b in &basis {
                assert!(a.mul(b).unwrap().is_tau_fixed());
            }
        }
        for _ in 0..100 {
            let a = even_part(&sampling::cd_element(&mut rng, level));
            let b = even_part(&sampling::cd_element(&mut rng, level));
            assert!(a.is_tau_fixed() && b.is_tau_fixed());
            assert!(a.mul(&b).unwrap().is_tau_fixed());
        }

        // Isomorphic to the algebra one level down: the brute-force search
        // finds a signed relabeling, and applying it commutes with every
        // product of fixed elements.
        let iso = fixed_subalgebra_isomorphism(level).unwrap();
        assert_eq!(iso.images.len(), basis.len() - 1);
        let mut targets: Vec<usize> = iso.images.iter().map(|&(t, _)| t).collect();
        targets.sort_unstable();
        targets.dedup();
        assert_eq!(targets.len(), iso.images.len(), "images are distinct units");
        for a in &basis {
            for b in &basis {
                let lhs = iso.apply(&a.mul(b).unwrap()).unwrap();
                let rhs = iso.apply(a).unwrap().mul(&iso.apply(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        for _ in 0..100 {
            let a = even_part(&sampling::cd_element(&mut rng, level));
            let b = even_part(&sampling::cd_element(&mut rng, level));
            let lhs = iso.apply(&a.mul(&b).unwrap()).unwrap();
            let rhs = iso.apply(&a).unwrap().mul(&iso.apply(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

// ---- 3: the projective-line fixed criterion -------------------------------------

#[test]
fn a03_projective_line_fixed_criterion() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for level in 2..=3u8 {
        let mut fixed_seen = 0;
        let mut moved_seen = 0;
        for round in 0..1000 {
            let (mut x, mut y) = sampling::projective_pair(&mut rng, level);
            if round % 4 == 0 {
                // Force a tau-fixed pair so both sides of the equivalence
                // are exercised.
                x = even_part(&x);
                y = even_part(&y);
                if x.is_zero() && y.is_zero() {
                    continue;
                }
            }
            let p = ProjectivePoint::normalize(&x, &y).unwrap();
            let quotient_in_fixed = if x.is_zero() {
                true
            } else {
                x.inverse().unwrap().mul(&y).unwrap().is_tau_fixed()
            };
            assert_eq!(p.is_tau_fixed(), quotient_in_fixed);
            if quotient_in_fixed {
                fixed_seen += 1;
            } else {
                moved_seen += 1;
            }
            // Normalization is idempotent on its own output.
            assert_eq!(ProjectivePoint::normalize(p.x(), p.y()).unwrap(), p);
        }
        assert!(fixed_seen > 0 && moved_seen > 0, "both cases sampled");
    }

    // The quotient map is tau-equivariant: 500 samples per level.
    for level in 2..=3u8 {
        for _ in 0..500 {
            let (x, y) = sampling::projective_pair(&mut rng, level);
            assert_eq!(
                hopf(&x, &y).unwrap().tau(),
                hopf(&x.tau(), &y.tau()).unwrap()
            );
        }
    }
}

// ---- 4: Jordan planes and strata -------------------------------------------------

#[test]
fn a04_jordan_product_and_strata() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);

    // tau commutes with the symmetrized product at every level.  Exact
    // arithmetic makes each sample decisive; fewer are drawn where the
    // coordinate algebra is wide.
    for level in 0..=3u8 {
        let samples = [150, 120, 80, 30][level as usize];
        for _ in 0..samples {
            let a = sampling::hermitian(&mut rng, level);
            let b = sampling::hermitian(&mut rng, level);
            assert_eq!(
                jordan_product(&a, &b).unwrap().tau(),
                jordan_product(&a.tau(), &b.tau()).unwrap()
            );
        }
    }

    // The three diagonal witnesses land in the three strata with the
    // documented dimensions, at every level, and tau fixes each stratum.
    let q = |n: i64| BigRational::from_integer(n.into());
    for level in 0..=3u8 {
        let r = 1u32 << level;
        let cases = [
            ([0, 0, 1], StratumTag::OpenTopCell, 2 * r),
            ([0, 1, 0], StratumTag::SphereCell, r),
            ([1, 0, 0], StratumTag::ZeroCell, 0),
        ];
        for (diag, tag, dimension) in cases {
            let p = conjspaces::jordan::HermitianMatrix::diagonal(
                level,
                [q(diag[0]), q(diag[1]), q(diag[2])],
            );
            let s = classify_stratum(&p).unwrap();
            assert_eq!(s.tag, tag);
            assert_eq!(s.dimension, dimension);
            assert_eq!(classify_stratum(&p.tau()).unwrap().tag, tag);
        }
    }

    // Random rank-1 projectors (levels 0..=2, where the vector construction
    // is associative): stratum read off the diagonal, stable under tau.
    for level in 0..=2u8 {
        for round in 0..100 {
            let mut v = [
                sampling::cd_element(&mut rng, level),
                sampling::cd_element(&mut rng, level),
                sampling::cd_element(&mut rng, level),
            ];
            // Steer into all three strata.
            if round % 3 != 0 {
                v[2] = CDElement::zero(level);
            }
            if round % 3 == 2 {
                v[1] = CDElement::zero(level);
            }
            if v.iter().all(|c| c.is_zero()) {
                v[0] = CDElement::one(level);
            }
            let p = projector_from_vector(&v).unwrap();
            assert!(p.is_projector());
            assert!(p.in_projective_plane());
            let s = classify_stratum(&p).unwrap();
            let expected = if !p.diag()[2].is_zero() {
                StratumTag::OpenTopCell
            } else if !p.diag()[1].is_zero() {
                StratumTag::SphereCell
            } else {
                StratumTag::ZeroCell
            };
            assert_eq!(s.tag, expected);
            assert_eq!(classify_stratum(&p.tau()).unwrap().tag, s.tag);
        }
    }

    // The shipped witness files classify as their names promise.
    let root = workspace_root();
    let top = hermitian::parse(
        &std::fs::read_to_string(root.join("data/projector_top.herm")).unwrap(),
    )
    .unwrap();
    assert_eq!(classify_stratum(&top).unwrap().tag, StratumTag::OpenTopCell);
    let zero = hermitian::parse(
        &std::fs::read_to_string(root.join("data/projector_zero.herm")).unwrap(),
    )
    .unwrap();
    assert_eq!(classify_stratum(&zero).unwrap().tag, StratumTag::ZeroCell);
}

// ---- 5: Steenrod rewriting --------------------------------------------------------

#[test]
fn a05_steenrod_rewriting() {
    // Randomized idempotence and degree preservation up to degree 20.
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..400 {
        let word = sampling::steenrod_word(&mut rng, 20);
        let degree = word.degree();
        let nf = adem_normalize(&Element::from_monomial(word));
        assert_eq!(adem_normalize(&nf), nf, "idempotent");
        assert!(nf.is_admissible());
        for term in nf.terms() {
            assert_eq!(term.degree(), degree, "degree preserved");
        }
    }

    // Confluence: the two rewriting schedules agree, exhaustively on words
    // of length <= 3 and degree <= 16, and on 300 random longer words.
    for degree in 0..=16 {
        for word in compositions(degree) {
            if word.len() > 3 {
                continue;
            }
            let e = Element::from_monomial(Monomial::new(word));
            assert_eq!(
                normalize_with_strategy(&e, RewriteStrategy::LeftmostFirst),
                normalize_with_strategy(&e, RewriteStrategy::RightmostFirst)
            );
        }
    }
    for _ in 0..300 {
        let e = Element::from_monomial(sampling::steenrod_word(&mut rng, 16));
        assert_eq!(
            normalize_with_strategy(&e, RewriteStrategy::LeftmostFirst),
            normalize_with_strategy(&e, RewriteStrategy::RightmostFirst)
        );
    }

    // Admissible-basis counts against a brute-force oracle: enumerate every
    // composition of d and filter by the admissibility inequality directly.
    for degree in 0..=12u32 {
        let mut oracle: Vec<Vec<u32>> = compositions(degree)
            .into_iter()
            .filter(|w| w.windows(2).all(|p| p[0] >= 2 * p[1]))
            .collect();
        oracle.sort();
        let mut basis: Vec<Vec<u32>> = admissible_basis(degree)
            .into_iter()
            .map(|m| m.exponents().to_vec())
            .collect();
        basis.sort();
        assert_eq!(basis, oracle, "admissible basis in degree {degree}");
    }

    // Decomposability is exactly "not a power of two", with certificates
    // that renormalize back to the square they decompose.
    for n in 1..=32u32 {
        assert_eq!(is_decomposable(n), !n.is_power_of_two());
        match decompose_sq(n) {
            Some(cert) => {
                assert!(!n.is_power_of_two());
                assert!(cert.pairs.iter().all(|&(a, b)| a > 0 && b > 0 && a + b == n));
                assert_eq!(adem_normalize(&cert.evaluate()), Element::sq(n));
            }
            None => assert!(n.is_power_of_two()),
        }
    }
}

// ---- 6: the doubling correspondence ----------------------------------------------

#[test]
fn a06_doubling_correspondence() {
    let cat = Catalog::standard();

    // halve . double is the identity and the double validates, for every
    // catalog algebra (ring-only entries use the ring-level functor).
    for e in cat.entries() {
        let Some(entry) = cat.algebra_entry(e.name()) else { continue };
        let a = &entry.algebra;
        if entry.ring_only {
            let d = a.double_ring().unwrap();
            assert!(d.validate_ring().is_valid(), "{} ring double", e.name());
        } else {
            let d = a.double().unwrap();
            assert!(d.validate().is_valid(), "{} double validates", e.name());
            let back = d.halve().unwrap();
            expect_tables_equal(a, &back, &identity_map(a));
        }
    }

    // double(RP2) is the CP2 entry on the nose.
    let rp2 = cat.algebra("RP2").unwrap();
    let cp2 = cat.algebra("CP2").unwrap();
    expect_tables_equal(&rp2.double().unwrap(), cp2, &[("a", "x"), ("a2", "x2")]);

    // The Floyd relations transport under doubling: Sq1 f2 = f3 and
    // Sq2 f3 = f5 below, Sq2 e4 = e6 and Sq4 e6 = e10 above.
    let z = cat.algebra("FloydZ").unwrap();
    assert_eq!(sq_of(z, 1, "f2"), "f3");
    assert_eq!(sq_of(z, 2, "f3"), "f5");
    let y = cat.algebra("FloydY").unwrap();
    assert_eq!(sq_of(y, 2, "e4"), "e6");
    assert_eq!(sq_of(y, 4, "e6"), "e10");
    expect_tables_equal(
        &z.double().unwrap(),
        y,
        &[("f2", "e4"), ("f3", "e6"), ("f5", "e10")],
    );
}

// ---- 7: realizability verdicts ----------------------------------------------------

#[test]
fn a07_realizability_verdicts() {
    let cat = Catalog::standard();

    // OP2: the Hopf invariant one rule with the degree-16 witness.
    let op2 = check_realizable(cat.algebra("OP2").unwrap());
    match &op2.verdict {
        Verdict::NonRealizable { rule, evidence } => {
            assert_eq!(rule, "hopf-invariant-one");
            assert!(evidence.contains("16"), "degree-16 witness: {evidence}");
        }
        other => panic!("OP2 expected non-realizable, got {other:?}"),
    }
    // Verdicts are deterministic under re-run.
    assert_eq!(check_realizable(cat.algebra("OP2").unwrap()), op2);

    let y = check_realizable(cat.algebra("FloydY").unwrap());
    match &y.verdict {
        Verdict::NonRealizable { rule, .. } => assert_eq!(rule, "floyd-lemma"),
        other => panic!("FloydY expected non-realizable, got {other:?}"),
    }
    assert_eq!(check_realizable(cat.algebra("FloydY").unwrap()), y);

    let z = check_realizable(cat.algebra("FloydZ").unwrap());
    assert!(matches!(z.verdict, Verdict::Undetermined { .. }));

    // The passing entries: no rule records an obstruction.
    for name in ["CP2", "HP2", "RP2", "T2", "K", "DT2", "DK", "S2", "S1vS2"] {
        let report = check_realizable(cat.algebra(name).unwrap());
        assert!(
            matches!(report.verdict, Verdict::Undetermined { .. }),
            "{name} should pass the necessary checks"
        );
        for step in &report.trail {
            assert_ne!(step.outcome, "obstruction", "{name}: {}", step.rule);
        }
    }

    // Necessary, not sufficient: the flagged second action on S2 v S4 has
    // compatible tables and is still recorded as not a conjugation space.
    let claim = cat.pair("S2vS4/S1vS2-claim").unwrap();
    let pair = cat.double_pair(claim).unwrap();
    assert!(check_double_pair(&pair, claim.mode).is_compatible());
    assert!(!claim.conjugation_space);
    assert!(claim.note.contains("not pure"), "note: {}", claim.note);

    // Cross-module agreement: a validation failure reported on the doubling
    // path is confirmed by raw F2 matrix composition of the Sq tables.
    let bad = Builder::new("truncated-height-3")
        .class("u", 3)
        .class("u2", 6)
        .product("u", "u", &["u2"])
        .sq(3, "u", &["u2"])
        .fundamental("u2")
        .build()
        .unwrap();
    assert!(!bad.validate().is_valid());
    let m1 = sq_matrix(&bad, 1);
    let m2 = sq_matrix(&bad, 2);
    let m3 = sq_matrix(&bad, 3);
    assert_ne!(compose(&m1, &m2), m3, "Sq1 Sq2 = Sq3 fails on the tables");
    // ... and on a valid algebra the same matrix oracle agrees with every
    // Adem normal form in range.
    let cp2 = cat.algebra("CP2").unwrap();
    for b in 1..=cp2.top_degree() {
        for a in 1..2 * b {
            if a + b > cp2.top_degree() {
                continue;
            }
            let direct = compose(&sq_matrix(cp2, a), &sq_matrix(cp2, b));
            let normal = adem_normalize(&Element::from_monomial(Monomial::new([a, b])));
            let mut sum = vec![BitVec::zeros(cp2.basis().len()); cp2.basis().len()];
            for term in normal.terms() {
                let mut m = identity_matrix(cp2.basis().len());
                for &k in term.exponents().iter().rev() {
                    m = compose(&sq_matrix(cp2, k), &m);
                }
                for (acc, col) in sum.iter_mut().zip(m) {
                    acc.xor_assign(&col);
                }
            }
            assert_eq!(direct, sum, "Sq{a} Sq{b} on CP2");
        }
    }
}

// ---- 8: Wu and Stiefel-Whitney classes --------------------------------------------

#[test]
fn a08_wu_and_stiefel_whitney() {
    let cat = Catalog::standard();
    let graded = |a: &UnstableAlgebra, classes: &[conjspaces::unstable::ClassSum]| {
        a.format_graded(classes)
    };

    let cp2 = cat.algebra("CP2").unwrap();
    assert_eq!(graded(cp2, &cp2.wu_classes().unwrap()), "1 + x");
    assert_eq!(graded(cp2, &cp2.sw_classes().unwrap()), "1 + x + x2");

    let rp2 = cat.algebra("RP2").unwrap();
    assert_eq!(graded(rp2, &rp2.wu_classes().unwrap()), "1 + a");
    assert_eq!(graded(rp2, &rp2.sw_classes().unwrap()), "1 + a + a2");

    // Spheres have trivial total Wu class.
    for name in ["S1", "S2", "S3", "S4", "S6", "S8"] {
        let s = cat.algebra(name).unwrap();
        assert_eq!(graded(s, &s.wu_classes().unwrap()), "1", "{name}");
    }

    // kappa(w_2i) = w_i on every Poincare-duality pair in the catalog.
    let eligible = cat.wu_eligible_pairs();
    assert!(!eligible.is_empty());
    for pair in eligible {
        let c = cat.wu_correspondence(&pair).unwrap();
        assert!(c.sw_halves, "SW halving fails for {pair}");
    }
}

// ---- 9: cell constructions --------------------------------------------------------

#[test]
fn a09_constructions() {
    // <x | x^2>: the real projective plane's Betti data, against an
    // independent row-reduction of the exponent-sum matrix.
    let rp2 = presentation::parse("gens: x\nrel: x x\n").unwrap();
    let complex = build_presentation_complex(&rp2).unwrap();
    assert_eq!(complex.fixed_betti, vec![1, 1, 1]);
    assert_eq!(complex.fixed_betti, betti_oracle(&rp2));
    assert!(complex.half_dimension_invariant());

    // The dihedral presentation: all relators are squares, Betti (1, 2, 3).
    let d8 = presentation::parse(
        "gens: x y\nrel: x x\nrel: y y\nrel: x y x y x y x y\n",
    )
    .unwrap();
    let complex = build_presentation_complex(&d8).unwrap();
    assert_eq!(complex.fixed_betti, vec![1, 2, 3]);
    assert_eq!(complex.fixed_betti, betti_oracle(&d8));
    assert!(complex.half_dimension_invariant());

    // 100 random intersection forms of rank <= 4: the realized 4-complex and
    // its double always form a compatible pair with valid tables.
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..100 {
        let (n, attach) = sampling::intersection_form(&mut rng, 4);
        let complex = realize_four_complex(n, &attach).unwrap();
        let fixed = complex.cohomology_fixed.as_ref().unwrap();
        let total = complex.cohomology_total.as_ref().unwrap();
        assert!(fixed.validate().is_valid());
        assert!(total.validate().is_valid());
        assert!(complex.half_dimension_invariant());
        let pair = complex.double_pair().unwrap();
        let report = check_double_pair(&pair, CompatMode::Full);
        assert!(report.is_compatible(), "violations: {:?}", report.violations);
    }

    // attach = eta_1 reproduces the CP2 / HP2 pair.
    let mut eta1 = AttachingElement::zero();
    eta1.add_eta(0, 1);
    let complex = realize_four_complex(1, &eta1).unwrap();
    let cat = Catalog::standard();
    expect_tables_equal(
        complex.cohomology_fixed.as_ref().unwrap(),
        cat.algebra("CP2").unwrap(),
        &[("x1", "x"), ("t", "x2")],
    );
    expect_tables_equal(
        complex.cohomology_total.as_ref().unwrap(),
        cat.algebra("HP2").unwrap(),
        &[("x1", "y"), ("t", "y2")],
    );
}

// ---- 10: end to end ----------------------------------------------------------------

#[test]
fn a10_end_to_end() {
    let root = workspace_root();
    let bin = env!("CARGO_BIN_EXE_conjspaces");

    // The full catalog sweep exits 0.
    let out = Command::new(bin)
        .args(["catalog", "verify"])
        .current_dir(&root)
        .output()
        .expect("run binary");
    assert!(
        out.status.success(),
        "catalog verify failed:\n{}",
        String::from_utf8_lossy(&out.stdout)
    );

    // Every shipped .alg file round-trips byte-stably: print . parse is a
    // fixed point of the canonical form.
    let caps: &[(&str, Option<u32>)] = &[
        ("cp2.alg", None),
        ("rp2.alg", None),
        ("op2.alg", None),
        ("floyd_y.alg", None),
        ("floyd_z.alg", None),
        ("cp3.alg", None),
        ("rp_inf.alg", Some(8)),
    ];
    for (name, cap) in caps {
        let text = std::fs::read_to_string(root.join("data").join(name)).unwrap();
        let first = alg::print(&alg::parse_with_cap(&text, *cap).unwrap());
        let second = alg::print(&alg::parse(&first).unwrap());
        assert_eq!(first, second, "round-trip of {name}");
    }
    // ... and so does every catalog entry.
    let cat = Catalog::standard();
    for e in cat.entries() {
        if let Some(a) = cat.algebra(e.name()) {
            let first = alg::print(a);
            let second = alg::print(&alg::parse(&first).unwrap());
            assert_eq!(first, second, "round-trip of catalog {}", e.name());
        }
    }

    // JSON and text reports are byte-identical to the golden files.
    let golden: &[(&[&str], &str)] = &[
        (&["realizable", "data/op2.alg", "--json"], "realizable_op2.json"),
        (
            &["realizable", "data/floyd_z.alg", "--json"],
            "realizable_floyd_z.json",
        ),
        (&["wu", "data/cp2.alg", "--json"], "wu_cp2.json"),
        (&["sw", "data/rp2.alg", "--json"], "sw_rp2.json"),
        (&["adem", "Sq2 Sq2", "--json"], "adem_sq2sq2.json"),
        (&["check", "data/cp2.alg", "--json"], "check_cp2.json"),
        (&["cd", "mul", "e1", "e2", "--json"], "cd_mul_e1_e2.json"),
        (&["present", "data/d8.pres", "--json"], "present_d8.json"),
        (
            &["realize4", "data/hopf1.json", "--json"],
            "realize4_hopf1.json",
        ),
        (&["catalog", "list", "--json"], "catalog_list.json"),
        (&["double", "data/rp2.alg"], "double_rp2.alg"),
    ];
    for (args, file) in golden {
        let out = Command::new(bin)
            .args(*args)
            .current_dir(&root)
            .output()
            .expect("run binary");
        assert!(out.status.success(), "{args:?} exited nonzero");
        let expected = std::fs::read(
            PathBuf::from(env!("CARGO_MANIFEST_DIR"))
                .join("tests/golden")
                .join(file),
        )
        .unwrap();
        assert_eq!(
            out.stdout,
            expected,
            "golden mismatch for {args:?}:\n{}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

// ---- helpers -----------------------------------------------------------------------

// Zero the odd coordinates: the tau-fixed part of an element.
fn even_part(x: &CDElement) -> CDElement {
    let coords = x
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i % 2 == 0 {
                c.clone()
            } else {
                BigRational::from_integer(0.into())
            }
        })
        .collect();
    CDElement::new(x.level(), coords).unwrap()
}

fn identity_map(a: &UnstableAlgebra) -> Vec<(&str, &str)> {
    a.basis()
        .iter()
        .map(|c| (c.label.as_str(), c.label.as_str()))
        .collect()
}

fn expect_tables_equal(a: &UnstableAlgebra, b: &UnstableAlgebra, map: &[(&str, &str)]) {
    let owned: Vec<(String, String)> = map
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    if let Err(witness) = a.tables_equal_under(b, &owned) {
        panic!("{} vs {}: {witness}", a.name(), b.name());
    }
}

fn sq_of(a: &UnstableAlgebra, k: u32, label: &str) -> String {
    let i = a.index_of(label).unwrap();
    a.format_sum(&a.sq_class(k, i))
}

// All ordered compositions of `degree` into positive parts.
fn compositions(degree: u32) -> Vec<Vec<u32>> {
    if degree == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=degree {
        for mut rest in compositions(degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

// Sq^k on the basis of `a` as an F2 matrix in column form.
fn sq_matrix(a: &UnstableAlgebra, k: u32) -> Vec<BitVec> {
    (0..a.basis().len())
        .map(|i| BitVec::from_indices(a.basis().len(), a.sq_class(k, i).iter()))
        .collect()
}

fn identity_matrix(n: usize) -> Vec<BitVec> {
    (0..n).map(|i| BitVec::from_indices(n, [i])).collect()
}

fn apply_matrix(m: &[BitVec], v: &BitVec) -> BitVec {
    let mut out = BitVec::zeros(m.len());
    for j in v.iter_set() {
        out.xor_assign(&m[j]);
    }
    out
}

// Matrix product `a . b` (apply b, then a).
fn compose(a: &[BitVec], b: &[BitVec]) -> Vec<BitVec> {
    b.iter().map(|col| apply_matrix(a, col)).collect()
}

// Mod-2 Betti numbers of a presentation 2-complex, computed directly: one
// vertex, a loop per generator, a 2-cell per relator; d1 = 0 and d2 is the
// exponent-sum matrix mod 2.
fn betti_oracle(p: &conjspaces::constructions::GroupPresentation) -> Vec<u32> {
    let g = p.generators().len();
    let rows = p
        .relators()
        .iter()
        .map(|w| w.exponent_sums_mod2(g))
        .collect::<Vec<_>>();
    let r2 = rank(g, rows) as u32;
    vec![1, g as u32 - r2, p.relators().len() as u32 - r2]
}
