//! Points of the projective line over H and O, the tau-action on them, and
//! the criterion for a point to be fixed: [x : y] is tau-fixed exactly when
//! x^{-1} y lands in the fixed subalgebra (one Cayley-Dickson level down).

use conjspaces::cayley_dickson::{hopf, CDElement, ProjectivePoint};
use conjspaces::sampling::{self, DEFAULT_SEED};
use conjspaces::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    // A hand-picked quaternionic point and its normal form (y^{-1} x : 1).
    let x = CDElement::from_integers(2, &[1, 2, 0, -1])?;
    let y = CDElement::from_integers(2, &[0, 1, 1, 0])?;
    let p = ProjectivePoint::normalize(&x, &y)?;
    println!("[{x} : {y}]");
    println!("  normal form  [{} : {}]", p.x(), p.y());
    println!("  tau image    [{} : {}]", p.tau().x(), p.tau().y());
    println!("  tau-fixed:   {}", p.is_tau_fixed());

    // A fixed point: both coordinates already tau-fixed.
    let q = ProjectivePoint::normalize(
        &CDElement::from_integers(2, &[1, 0, 3, 0])?,
        &CDElement::from_integers(2, &[2, 0, -1, 0])?,
    )?;
    println!("\nfixed example: [{} : {}] is tau-fixed: {}", q.x(), q.y(), q.is_tau_fixed());

    // The criterion, sampled: tau[x:y] = [x:y]  <=>  x^{-1} y is tau-fixed.
    // Every fourth pair is projected into the fixed subalgebra first, so both
    // sides of the equivalence actually occur.
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for level in 2..=3u8 {
        let mut fixed_count = 0;
        for round in 0..500 {
            let (mut x, mut y) = sampling::projective_pair(&mut rng, level);
            if round % 4 == 0 {
                x = fixed_part(&x);
                y = fixed_part(&y);
                if x.is_zero() && y.is_zero() {
                    continue;
                }
            }
            let point = ProjectivePoint::normalize(&x, &y)?;
            let criterion = if x.is_zero() {
                true // [0 : 1] is the origin, always fixed
            } else {
                x.inverse()?.mul(&y)?.is_tau_fixed()
            };
            assert_eq!(point.is_tau_fixed(), criterion);
            if criterion {
                fixed_count += 1;
            }
        }
        let name = ["HP1", "OP1"][(level - 2) as usize];
        println!(
            "\n{name}: 500 sampled points, criterion agrees on all ({fixed_count} fixed)"
        );
    }

    // The Hopf map [x : y] -> point of the projective line commutes with tau,
    // so it restricts to a map of fixed loci.
    let mut equivariant = 0;
    for _ in 0..500 {
        let (x, y) = sampling::projective_pair(&mut rng, 3);
        let h = hopf(&x, &y)?;
        let th = hopf(&x.tau(), &y.tau())?;
        assert_eq!(h.tau(), th);
        equivariant += 1;
    }
    println!("\nhopf map: tau-equivariant on {equivariant} sampled octonion pairs");
    Ok(())
}

// Zero the odd-indexed coordinates: the resulting element is tau-fixed.
fn fixed_part(x: &CDElement) -> CDElement {
    let coords = x
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { num::BigRational::from_integer(0.into()) })
        .collect();
    CDElement::new(x.level(), coords).expect("same level, same length")
}
