//! Two cell-by-cell constructions.  First: a group presentation whose
//! relators are literal squares yields a 2-complex that is the fixed space of
//! a conjugation 4-complex, cell for cell (Dold's construction).  Second: an
//! integer intersection form picks an attaching element for a 4-complex on a
//! wedge of 2-spheres, and the conjugation double realizes its degree
//! doubling.

use conjspaces::constructions::{
    build_presentation_complex, realize_four_complex, AttachingElement, GroupPresentation,
};
use conjspaces::formats::presentation;
use conjspaces::unstable::{check_double_pair, CompatMode};
use conjspaces::Result;

fn main() -> Result<()> {
    // The dihedral group of order 8: every relator a square.
    let d8 = presentation::parse(
        "gens: x y\nrel: x x\nrel: y y\nrel: x y x y x y x y\n",
    )?;
    show_presentation(&d8)?;

    // Z/2: one generator, one square relator; the complex is RP2.
    let z2 = presentation::parse("gens: a\nrel: a a\n")?;
    show_presentation(&z2)?;

    // A 4-complex from the intersection form <1>: one sphere, eta_1 = 1.
    // Its fixed cohomology is CP2's, the double's is HP2's.
    let mut attach = AttachingElement::zero();
    attach.add_eta(0, 1);
    let complex = realize_four_complex(1, &attach)?;
    println!("4-complex on one sphere, attaching element {}:", attach.render());
    let fixed = complex.cohomology_fixed.as_ref().unwrap();
    let total = complex.cohomology_total.as_ref().unwrap();
    println!("  fixed algebra {}, total algebra {}", fixed.name(), total.name());
    println!("  half-dimension cells: {}", complex.half_dimension_invariant());

    // The two rings form a compatible conjugation pair, Sq-action included.
    let pair = complex.double_pair()?;
    let report = check_double_pair(&pair, CompatMode::Full);
    println!("  double pair compatible: {}\n", report.is_compatible());

    // The hyperbolic form on two spheres: the Whitehead attachment gives
    // S2 x S2 with trivial squares.
    let mut h = AttachingElement::zero();
    h.add_omega(0, 1, 1)?;
    let complex = realize_four_complex(2, &h)?;
    println!("4-complex on two spheres, attaching element {}:", h.render());
    let fixed = complex.cohomology_fixed.as_ref().unwrap();
    println!("  fixed ring: x1 x2 = t, squares of xi vanish ({})", fixed.name());
    let pair = complex.double_pair()?;
    assert!(check_double_pair(&pair, CompatMode::Full).is_compatible());
    println!("  double pair compatible: true");
    Ok(())
}

fn show_presentation(p: &GroupPresentation) -> Result<()> {
    println!("presentation {}", p.render());
    let c = build_presentation_complex(p)?;
    println!("  fixed cells: {}", c.fixed_cells.len());
    println!("  equivariant cells (multiples of rho): {}", c.cells.len());
    println!("  fixed mod-2 betti: {:?}", c.fixed_betti);
    println!("  half-dimension invariant: {}", c.half_dimension_invariant());
    println!();
    Ok(())
}
