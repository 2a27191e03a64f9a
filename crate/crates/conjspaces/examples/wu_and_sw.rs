//! Wu and Stiefel-Whitney classes of Poincare-duality algebras: v_k is
//! defined by <v_k x, [M]> = <Sq^k x, [M]>, and w = Sq(v) by Wu's formula.
//! On a conjugation pair the halving map kappa sends w_{2i} of the total
//! algebra to w_i of the fixed one.

use conjspaces::catalog::Catalog;
use conjspaces::Result;

fn main() -> Result<()> {
    let cat = Catalog::standard();
    for name in ["CP2", "RP2", "K", "T2", "S4", "RP3"] {
        let a = cat.algebra(name).expect("catalog entry");
        let v = a.wu_classes()?;
        let w = a.sw_classes()?;
        println!("{name}:");
        println!("  v = {}", a.format_graded(&v));
        println!("  w = {}", a.format_graded(&w));
    }

    // Orientability reads off w1: the torus is orientable, the Klein bottle
    // and RP2 are not.
    let w1 = |name: &str| -> Result<bool> {
        let a = cat.algebra(name).unwrap();
        Ok(a.sw_classes()?[1].is_zero())
    };
    println!("\nw1 = 0 (orientable): T2 {}, K {}, RP2 {}",
        w1("T2")?, w1("K")?, w1("RP2")?);

    // The halving correspondence over every Poincare-duality pair in the
    // catalog: kappa(w_{2i}) = w_i, and the same pattern for the Wu classes.
    println!();
    for pair in cat.wu_eligible_pairs() {
        let c = cat.wu_correspondence(&pair)?;
        println!("{pair}:");
        println!("  total w = {}   fixed w = {}", c.total_sw, c.fixed_sw);
        println!("  total v = {}   fixed v = {}", c.total_wu, c.fixed_wu);
        assert!(c.sw_halves, "kappa(w_2i) = w_i fails for {pair}");
        let wu_note = if c.wu_halves { "halve as well" } else { "do not halve" };
        println!("  SW classes halve along kappa; Wu classes {wu_note}");
    }
    Ok(())
}
