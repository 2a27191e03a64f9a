//! The fixed subalgebra of tau at level k is the Cayley-Dickson algebra one
//! level down: R inside C, C inside H, H inside O.  This walks the tower,
//! prints the even-indexed basis at each level, and exhibits the signed
//! isomorphism onto the level below.

use conjspaces::cayley_dickson::{
    fixed_subalgebra_basis, fixed_subalgebra_isomorphism, CDElement,
};
use conjspaces::Result;

fn main() -> Result<()> {
    for level in 1..=3u8 {
        let basis = fixed_subalgebra_basis(level)?;
        let below = ["R", "C", "H"][(level - 1) as usize];
        println!("level {level}: fixed basis {{{}}}", names(&basis));
        println!("  dimension {} = dim {below}", basis.len());

        // The fixed units multiply among themselves ...
        for a in &basis {
            for b in &basis {
                assert!(a.mul(b)?.is_tau_fixed());
            }
        }

        // ... and the signed relabeling is an algebra isomorphism.
        let iso = fixed_subalgebra_isomorphism(level)?;
        for (i, &(target, negate)) in iso.images.iter().enumerate() {
            let sign = if negate { "-" } else { "" };
            println!("  e{} -> {sign}e{}", 2 * (i + 1), target + 1);
        }
        for a in &basis {
            for b in &basis {
                let lhs = iso.apply(&a.mul(b)?)?;
                let rhs = iso.apply(a)?.mul(&iso.apply(b)?)?;
                assert_eq!(lhs, rhs, "iso fails on a product at level {level}");
            }
        }
        println!("  relabeling respects all {}^2 basis products", basis.len());
        println!();
    }
    println!("fixed towers verified: R in C, C in H, H in O");
    Ok(())
}

fn names(units: &[CDElement]) -> String {
    units
        .iter()
        .map(|u| u.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
