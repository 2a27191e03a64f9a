//! Seeded sample generators for the randomized property checks.  Every
//! generator takes the RNG by reference so callers fix a seed once and the
//! whole run is reproducible; nothing here is cryptographic.

use num::{BigInt, BigRational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cayley_dickson::CDElement;
use crate::constructions::AttachingElement;
use crate::jordan::HermitianMatrix;
use crate::steenrod::Monomial;

/// The seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small exact rational with numerator in `-9..=9` and denominator in
/// `1..=9`.
pub fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    let numer = rng.gen_range(-9i64..=9);
    let denom = rng.gen_range(1i64..=9);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn cd_element(rng: &mut ChaCha8Rng, level: u8) -> CDElement {
    let coords = (0..1usize << level).map(|_| rational(rng)).collect();
    CDElement::new(level, coords).expect("sampled coordinates fit the level")
}

pub fn nonzero_cd_element(rng: &mut ChaCha8Rng, level: u8) -> CDElement {
    loop {
        let x = cd_element(rng, level);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random Hermitian matrix: rational diagonal, arbitrary upper entries.
pub fn hermitian(rng: &mut ChaCha8Rng, level: u8) -> HermitianMatrix {
    HermitianMatrix::new(
        level,
        [rational(rng), rational(rng), rational(rng)],
        cd_element(rng, level),
        cd_element(rng, level),
        cd_element(rng, level),
    )
    .expect("sampled entries share the level")
}

/// Coordinates of a projective line: two elements, not both zero.
pub fn projective_pair(rng: &mut ChaCha8Rng, level: u8) -> (CDElement, CDElement) {
    loop {
        let x = cd_element(rng, level);
        let y = cd_element(rng, level);
        if !x.is_zero() || !y.is_zero() {
            return (x, y);
        }
    }
}

/// A random Sq-word of total degree at most `max_degree` (possibly the unit
/// word).
pub fn steenrod_word(rng: &mut ChaCha8Rng, max_degree: u32) -> Monomial {
    let mut exponents = Vec::new();
    let mut remaining = rng.gen_range(0..=max_degree);
    while remaining > 0 {
        let e = rng.gen_range(1..=remaining);
        exponents.push(e);
        remaining -= e;
        if rng.gen_bool(0.3) {
            break;
        }
    }
    Monomial::new(exponents)
}

/// A random intersection form: `1..=max_rank` spheres with small integer
/// coefficients.
pub fn intersection_form(rng: &mut ChaCha8Rng, max_rank: usize) -> (usize, AttachingElement) {
    let n = rng.gen_range(1..=max_rank);
    let mut attach = AttachingElement::zero();
    for i in 0..n {
        attach.add_eta(i, rng.gen_range(-2i64..=2));
        for j in (i + 1)..n {
            attach
                .add_omega(i, j, rng.gen_range(-2i64..=2))
                .expect("distinct indices");
        }
    }
    (n, attach)
}
