//! A walk through the built-in catalog: algebras and conjugation pairs with
//! their stories, the verification sweep that recomputes every claim, and the
//! adjudicated realizability verdicts.

use conjspaces::catalog::Catalog;

fn main() {
    let cat = Catalog::standard();

    println!("{} algebra entries, {} pairs\n", cat.entries().len(), cat.pairs().len());

    // A few entries with their notes.
    for name in ["RP2", "OP2", "FloydZ", "MoorePTorsion", "D8Complex"] {
        let e = cat.entry(name).expect("catalog entry");
        println!("{name}: {}", e.note());
    }

    // Every pair records which checks apply: full Sq compatibility for
    // honest conjugation pairs, ring-only for the Dold-type entries.
    println!();
    for p in cat.pairs().iter().take(6) {
        println!("pair {}: {}", p.name, p.note);
    }
    println!("  ... and {} more\n", cat.pairs().len() - 6);

    // The sweep recomputes validity, doubling, compatibility, Wu halving,
    // and the engine verdicts for every entry.
    let results = cat.verify_all();
    let failures: Vec<_> = results.iter().filter(|r| !r.passed).collect();
    println!("verification sweep: {} checks, {} failures", results.len(), failures.len());
    for f in &failures {
        println!("  FAIL {}: {}", f.name, f.detail);
    }

    // Not everything with compatible tables is a conjugation space: the
    // flagged wedge pair passes the compatibility checks by design, and its
    // note says exactly why that certifies nothing.
    let claim = cat.pair("S2vS4/S1vS2-claim").expect("flagged pair");
    println!("\nflagged pair {}: {}", claim.name, claim.note);
}
