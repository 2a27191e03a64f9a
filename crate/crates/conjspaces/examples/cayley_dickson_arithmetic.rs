//! Exact arithmetic in the Cayley-Dickson tower: rationals, complexes,
//! quaternions, octonions.  Prints the identities that survive each doubling
//! and the witness for the one that finally breaks.

use conjspaces::cayley_dickson::CDElement;
use conjspaces::sampling::{self, DEFAULT_SEED};
use conjspaces::Result;
use num::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    // Basis products at each level.  e1*e2 = -e3 fixes the sign convention.
    for level in 0..=3u8 {
        let name = ["R", "C", "H", "O"][level as usize];
        println!("level {level} ({name}), dimension {}", 1usize << level);
    }
    let e1 = CDElement::basis_unit(2, 1);
    let e2 = CDElement::basis_unit(2, 2);
    println!("\nquaternions: e1 * e2 = {}", e1.mul(&e2)?);
    println!("quaternions: e2 * e1 = {}", e2.mul(&e1)?);

    // Conjugation reverses products; tau negates the odd-indexed coordinates
    // and is an algebra involution.  Check both on random octonions.
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..200 {
        let a = sampling::cd_element(&mut rng, 3);
        let b = sampling::cd_element(&mut rng, 3);
        let ab = a.mul(&b)?;
        assert_eq!(ab.conj(), b.conj().mul(&a.conj())?);
        assert_eq!(ab.tau(), a.tau().mul(&b.tau())?);
        assert_eq!(a.tau().tau(), a);
        assert_eq!(ab.norm(), a.norm() * b.norm());
    }
    println!("\n200 random octonion pairs: conj is an anti-homomorphism,");
    println!("tau is a multiplicative involution, the norm is multiplicative");

    // Quaternions associate; octonions do not.
    for _ in 0..200 {
        let (a, b, c) = (
            sampling::cd_element(&mut rng, 2),
            sampling::cd_element(&mut rng, 2),
            sampling::cd_element(&mut rng, 2),
        );
        assert_eq!(a.mul(&b)?.mul(&c)?, a.mul(&b.mul(&c)?)?);
    }
    let (o1, o2, o4) = (
        CDElement::basis_unit(3, 1),
        CDElement::basis_unit(3, 2),
        CDElement::basis_unit(3, 4),
    );
    let left = o1.mul(&o2)?.mul(&o4)?;
    let right = o1.mul(&o2.mul(&o4)?)?;
    println!("\nquaternions associate on 200 random triples; octonions fail:");
    println!("  (e1 e2) e4 = {left}");
    println!("  e1 (e2 e4) = {right}");

    // Exact inverses: x * x^{-1} = 1 with rational coordinates, no rounding.
    let x = CDElement::from_integers(3, &[3, -1, 4, 1, -5, 9, 2, -6])?;
    let inv = x.inverse()?;
    println!("\nx = {x}");
    println!("x^-1 = {inv}");
    assert!(x.mul(&inv)?.is_one());
    let norm: BigRational = x.norm();
    println!("norm(x) = {norm}, and x * x^-1 = 1 exactly");
    Ok(())
}
