//! Projective planes as trace-1 projectors in the Jordan algebra of 3x3
//! Hermitian matrices, the tau-action on them, and the stratification of the
//! plane by which diagonal corner carries the projector.

use conjspaces::jordan::{
    classify_stratum, jordan_product, projector_from_vector, HermitianMatrix,
};
use conjspaces::cayley_dickson::CDElement;
use conjspaces::sampling::{self, DEFAULT_SEED};
use conjspaces::Result;
use num::{BigRational, One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    // The base point: the projector onto the third coordinate axis.
    let base = HermitianMatrix::base_point(2);
    println!("base point: trace {}, projector {}", base.trace(), base.is_projector());
    println!("  stratum: {:?}", classify_stratum(&base)?);

    // A projector from a vector: p = v v* / |v|^2, here over the quaternions.
    let v = [
        CDElement::from_integers(2, &[1, 1, 0, 0])?,
        CDElement::from_integers(2, &[0, 0, 1, 0])?,
        CDElement::one(2),
    ];
    let p = projector_from_vector(&v)?;
    println!("\nrank-1 projector from a quaternionic vector:");
    println!("  trace = {}, in plane: {}", p.trace(), p.in_projective_plane());
    println!("  stratum: {:?}", classify_stratum(&p)?);

    // The Jordan product a.b = (ab + ba)/2 commutes with tau entrywise.
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for level in 0..=3u8 {
        for _ in 0..100 {
            let a = sampling::hermitian(&mut rng, level);
            let b = sampling::hermitian(&mut rng, level);
            let lhs = jordan_product(&a, &b)?.tau();
            let rhs = jordan_product(&a.tau(), &b.tau())?;
            assert_eq!(lhs, rhs);
        }
    }
    println!("\njordan product commutes with tau: 100 samples at each level 0..=3");

    // Strata are tau-stable: tau moves a point within its stratum.
    let one = BigRational::one();
    let zero = BigRational::zero;
    let witnesses = [
        HermitianMatrix::diagonal(2, [zero(), zero(), one.clone()]),
        HermitianMatrix::diagonal(2, [zero(), one.clone(), zero()]),
        HermitianMatrix::diagonal(2, [one.clone(), zero(), zero()]),
    ];
    println!();
    for w in &witnesses {
        let s = classify_stratum(w)?;
        let st = classify_stratum(&w.tau())?;
        assert_eq!(s.tag, st.tag);
        println!(
            "diag({}, {}, {}) lies in {:?} (dimension {}); tau keeps it there",
            w.diag()[0], w.diag()[1], w.diag()[2], s.tag, s.dimension
        );
    }
    Ok(())
}
