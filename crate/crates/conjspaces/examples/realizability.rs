//! The realizability engine: given a candidate fixed-space cohomology, can
//! any conjugation space sit above it?  Three rules run in order — validity
//! of the algebra and its double, the Hopf invariant one bound (Adams 1960),
//! and Floyd's degree-pattern obstruction (Lemma 3.4) — and every verdict
//! ships with its evidence trail.

use conjspaces::catalog::{check_realizable, Catalog, Verdict};
use conjspaces::unstable::UnstableAlgebra;
use conjspaces::Result;

fn main() -> Result<()> {
    let cat = Catalog::standard();
    let show = |a: &UnstableAlgebra| {
        let report = check_realizable(a);
        println!("{}:", a.name());
        match &report.verdict {
            Verdict::Realizable { witness } => println!("  realizable ({witness})"),
            Verdict::NonRealizable { rule, evidence } => {
                println!("  non-realizable by {rule}");
                println!("  evidence: {evidence}");
            }
            Verdict::Undetermined { passed } => {
                println!("  undetermined; passed: {}", passed.join(", "));
            }
        }
        for s in &report.trail {
            println!("    [{}] {}: {}", s.outcome, s.rule, s.detail);
        }
        println!();
    };

    // CP2 sails through: its double is HP2, a projective plane in a degree
    // Adams allows.
    show(cat.algebra("CP2").unwrap());

    // OP2 as a fixed space would force a projective plane on a degree-16
    // class — a Hopf invariant one map in dimension 16.
    show(cat.algebra("OP2").unwrap());

    // The Floyd pattern: degrees 0, 8, 12, 20 with the specific Sq-action.
    show(cat.algebra("FloydY").unwrap());

    // Its half passes every rule, and no rule certifies it: undetermined.
    show(cat.algebra("FloydZ").unwrap());

    // Catalog-wide tally.  Ring-only entries are skipped: their Sq-action is
    // deliberately not modeled, so the engine has nothing to act on.
    let (mut non, mut und) = (0, 0);
    for e in cat.entries() {
        let Some(entry) = cat.algebra_entry(e.name()) else { continue };
        if entry.ring_only {
            continue;
        }
        let a = cat.algebra(e.name()).unwrap();
        match check_realizable(a).verdict {
            Verdict::Realizable { .. } => unreachable!("no rule certifies realizability"),
            Verdict::NonRealizable { rule, .. } => {
                println!("  obstructed: {} by {rule}", e.name());
                non += 1;
            }
            Verdict::Undetermined { .. } => und += 1,
        }
    }
    println!("catalog tally: {non} obstructed, {und} undetermined");
    Ok(())
}
