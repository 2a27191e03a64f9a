//! Cayley–Dickson tower over the rationals: level 0..=3 gives R, C, H, O
//! with exact `BigRational` coordinates.
//!
//! The doubling product used throughout is
//!
//! ```text
//! (a, b)(c, d) = (ac - d*conj(b), conj(a)*d + c*b)
//! ```
//!
//! which satisfies the two-sided unit law and makes every level a
//! composition algebra (the norm is multiplicative); both facts are pinned
//! by tests.  Printed sign tables for the quaternions/octonions differ
//! between references by unit relabelings, so no particular external table
//! is promised — the recursion above is the single source of truth.
//!
//! The involution `tau` is the identity on R, complex conjugation on C, and
//! extends diagonally: `tau(a, b) = (tau(a), tau(b))`.  In coordinates it
//! negates exactly the odd-indexed entries, so its fixed subspace at level
//! `k >= 1` is spanned by the even-indexed units and has dimension `2^(k-1)`.

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub const MAX_LEVEL: u8 = 3;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// An element of the level-`level` Cayley–Dickson algebra, with `2^level`
/// exact rational coordinates in the positional basis `e0 = 1, e1, ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CDElement {
    level: u8,
    coords: Vec<BigRational>,
}

impl CDElement {
    pub fn new(level: u8, coords: Vec<BigRational>) -> Result<Self> {
        if level > MAX_LEVEL {
            return Err(Error::LevelOutOfRange(level));
        }
        if coords.len() != 1 << level {
            return Err(Error::Invalid(format!(
                "level {} needs {} coordinates, got {}",
                level,
                1 << level,
                coords.len()
            )));
        }
        Ok(CDElement { level, coords })
    }

    pub fn from_integers(level: u8, coords: &[i64]) -> Result<Self> {
        CDElement::new(level, coords.iter().map(|&n| rat(n)).collect())
    }

    pub fn zero(level: u8) -> Self {
        CDElement {
            level,
            coords: vec![BigRational::zero(); 1 << level],
        }
    }

    pub fn one(level: u8) -> Self {
        Self::basis_unit(level, 0)
    }

    /// The basis unit `e_index`.
    pub fn basis_unit(level: u8, index: usize) -> Self {
        assert!(level <= MAX_LEVEL && index < 1 << level);
        let mut coords = vec![BigRational::zero(); 1 << level];
        coords[index] = BigRational::one();
        CDElement { level, coords }
    }

    pub fn from_rational(level: u8, q: BigRational) -> Self {
        let mut e = CDElement::zero(level);
        e.coords[0] = q;
        e
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(CDElement {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(CDElement {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        CDElement {
            level: self.level,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CDElement {
            level: self.level,
            coords: self.coords.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(CDElement {
            level: self.level,
            coords: mul_rec(&self.coords, &other.coords),
        })
    }

    /// Algebra conjugation: `conj(a, b) = (conj(a), -b)`, identity on R.
    pub fn conj(&self) -> Self {
        CDElement {
            level: self.level,
            coords: conj_rec(&self.coords),
        }
    }

    /// The diagonal involution: negates odd-indexed coordinates.
    pub fn tau(&self) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        CDElement {
            level: self.level,
            coords,
        }
    }

    pub fn is_tau_fixed(&self) -> bool {
        self.coords
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Sum of squared coordinates; equals `x * conj(x)` as a rational.
    pub fn norm(&self) -> BigRational {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    /// Real part, i.e. the `e0` coordinate.
    pub fn real_part(&self) -> &BigRational {
        &self.coords[0]
    }
}

fn conj_rec(x: &[BigRational]) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(x.len());
    out.push(x[0].clone());
    out.extend(x[1..].iter().map(|c| -c));
    out
}

fn add_vec(x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_vec(x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn mul_rec(x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let first = sub_vec(&mul_rec(a, c), &mul_rec(d, &conj_rec(b)));
    let second = add_vec(&mul_rec(&conj_rec(a), d), &mul_rec(c, b));
    let mut out = first;
    out.extend(second);
    out
}

/// A point of the projective line over the level-`level` algebra, stored in
/// normalized form: either `(c, 1)` or the point at infinity `(1, 0)`.
///
/// `normalize(x, y)` sends a pair with `y != 0` to `(y^{-1} x, 1)`; the
/// left quotient is the right choice here because it makes tau-fixedness of
/// the point equivalent to `x^{-1} y` (equivalently `y^{-1} x`) lying in the
/// tau-fixed subalgebra, a criterion that the right quotient breaks at the
/// non-associative levels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectivePoint {
    level: u8,
    x: CDElement,
    y: CDElement,
}

impl ProjectivePoint {
    pub fn normalize(x: &CDElement, y: &CDElement) -> Result<Self> {
        if x.level() != y.level() {
            return Err(Error::LevelMismatch {
                left: x.level(),
                right: y.level(),
            });
        }
        if y.is_zero() {
            if x.is_zero() {
                return Err(Error::BothCoordinatesZero);
            }
            return Ok(ProjectivePoint {
                level: x.level(),
                x: CDElement::one(x.level()),
                y: CDElement::zero(x.level()),
            });
        }
        let rep = y.inverse()?.mul(x)?;
        Ok(ProjectivePoint {
            level: x.level(),
            y: CDElement::one(x.level()),
            x: rep,
        })
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn x(&self) -> &CDElement {
        &self.x
    }

    pub fn y(&self) -> &CDElement {
        &self.y
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// Apply `tau` to both coordinates and renormalize.
    pub fn tau(&self) -> Self {
        ProjectivePoint::normalize(&self.x.tau(), &self.y.tau())
            .expect("tau preserves the projective domain")
    }

    pub fn is_tau_fixed(&self) -> bool {
        *self == self.tau()
    }
}

/// The Hopf-style quotient map: a pair `(x, y)` (not both zero) to its
/// projective point.  Equivariant for `tau` acting coordinate-wise.
pub fn hopf(x: &CDElement, y: &CDElement) -> Result<ProjectivePoint> {
    ProjectivePoint::normalize(x, y)
}

/// Basis of the tau-fixed subalgebra: the even-indexed units.
pub fn fixed_subalgebra_basis(level: u8) -> Result<Vec<CDElement>> {
    if level > MAX_LEVEL {
        return Err(Error::LevelOutOfRange(level));
    }
    Ok((0..1usize << level)
        .step_by(2)
        .map(|i| CDElement::basis_unit(level, i))
        .collect())
}

/// A product of two basis units in a Cayley–Dickson algebra is always a
/// signed basis unit; this names that unit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedUnit {
    pub index: usize,
    pub negative: bool,
}

fn as_signed_unit(e: &CDElement) -> Option<SignedUnit> {
    let mut found = None;
    for (i, c) in e.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if found.is_some() || !c.abs().is_one() {
            return None;
        }
        found = Some(SignedUnit {
            index: i,
            negative: c.is_negative(),
        });
    }
    found
}

/// Full multiplication table of the positional basis at `level`.
pub fn multiplication_table(level: u8) -> Result<Vec<Vec<SignedUnit>>> {
    if level > MAX_LEVEL {
        return Err(Error::LevelOutOfRange(level));
    }
    let n = 1usize << level;
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<SignedUnit> = (0..n)
            .map(|j| {
                let p = CDElement::basis_unit(level, i)
                    .mul(&CDElement::basis_unit(level, j))
                    .unwrap();
                as_signed_unit(&p).expect("basis products are signed units")
            })
            .collect();
        table.push(row);
    }
    Ok(table)
}

/// An algebra isomorphism from the tau-fixed subalgebra at `level` onto the
/// full algebra one level down, as a signed relabeling of imaginary units:
/// fixed unit `e_{2(i+1)}` maps to `±e_{images[i].0 + 1}` at `level - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedIsomorphism {
    pub level: u8,
    /// For each imaginary fixed unit, `(target imaginary index, negate)`.
    pub images: Vec<(usize, bool)>,
}

impl FixedIsomorphism {
    /// Map a tau-fixed element down one level along the signed relabeling:
    /// `e_{2(i+1)}` goes to `±e_{images[i].0 + 1}` and the real part stays.
    pub fn apply(&self, x: &CDElement) -> Result<CDElement> {
        if x.level() != self.level {
            return Err(Error::LevelMismatch {
                left: x.level(),
                right: self.level,
            });
        }
        if !x.is_tau_fixed() {
            return Err(Error::Invalid(format!("{x} is not tau-fixed")));
        }
        let mut coords = vec![BigRational::zero(); 1 << (self.level - 1)];
        coords[0] = x.coords()[0].clone();
        for (i, &(target, negate)) in self.images.iter().enumerate() {
            let c = x.coords()[2 * (i + 1)].clone();
            coords[target + 1] = if negate { -c } else { c };
        }
        CDElement::new(self.level - 1, coords)
    }
}

/// Structure constants of a list of elements that is closed under
/// multiplication up to sign: `table[i][j] = (k, negative)` with
/// `basis[i] * basis[j] = ±basis[k]`.  Returns `None` if some product is not
/// a signed element of the list.
fn signed_structure_constants(basis: &[CDElement]) -> Option<Vec<Vec<(usize, bool)>>> {
    let mut table = Vec::with_capacity(basis.len());
    for a in basis {
        let mut row = Vec::with_capacity(basis.len());
        for b in basis {
            let p = a.mul(b).ok()?;
            let mut hit = None;
            for (k, base) in basis.iter().enumerate() {
                if p == *base {
                    hit = Some((k, false));
                    break;
                }
                if p == base.neg() {
                    hit = Some((k, true));
                    break;
                }
            }
            row.push(hit?);
        }
        table.push(row);
    }
    Some(table)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Brute-force search for a signed-permutation isomorphism from the fixed
/// subalgebra at `level` (dimension `2^(level-1)`) onto the level-`(level-1)`
/// algebra, verified against both structure-constant tables.
pub fn fixed_subalgebra_isomorphism(level: u8) -> Result<FixedIsomorphism> {
    if level == 0 || level > MAX_LEVEL {
        return Err(Error::LevelOutOfRange(level));
    }
    let fixed = fixed_subalgebra_basis(level)?;
    let fixed_table = signed_structure_constants(&fixed)
        .ok_or_else(|| Error::Invalid("fixed subalgebra is not unit-closed".into()))?;
    let target: Vec<CDElement> = (0..1usize << (level - 1))
        .map(|i| CDElement::basis_unit(level - 1, i))
        .collect();
    let target_table = signed_structure_constants(&target).unwrap();

    let m = fixed.len() - 1; // number of imaginary units
    for perm in permutations(m) {
        for signs in 0..1u32 << m {
            // phi(fixed[i+1]) = ±target[perm[i]+1]; phi(1) = 1.
            let image = |i: usize| -> (usize, bool) {
                if i == 0 {
                    (0, false)
                } else {
                    (perm[i - 1] + 1, signs >> (i - 1) & 1 == 1)
                }
            };
            let ok = (0..=m).all(|i| {
                (0..=m).all(|j| {
                    let (k, s) = fixed_table[i][j];
                    let (ti, si) = image(i);
                    let (tj, sj) = image(j);
                    let (tk, sk) = image(k);
                    let (pk, sp) = target_table[ti][tj];
                    pk == tk && (s ^ sk) == (si ^ sj ^ sp)
                })
            });
            if ok {
                return Ok(FixedIsomorphism {
                    level,
                    images: (1..=m)
                        .map(|i| {
                            let (t, s) = image(i);
                            (t - 1, s)
                        })
                        .collect(),
                });
            }
        }
    }
    Err(Error::Invalid(format!(
        "no signed-permutation isomorphism found at level {level}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(level: u8, i: usize) -> CDElement {
        CDElement::basis_unit(level, i)
    }

    #[test]
    fn unit_law_holds_at_every_level() {
        for level in 0..=MAX_LEVEL {
            let one = CDElement::one(level);
            for i in 0..1usize << level {
                let e = unit(level, i);
                assert_eq!(one.mul(&e).unwrap(), e, "1*e{i} at level {level}");
                assert_eq!(e.mul(&one).unwrap(), e, "e{i}*1 at level {level}");
            }
        }
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for level in 1..=MAX_LEVEL {
            for i in 1..1usize << level {
                let e = unit(level, i);
                assert_eq!(e.mul(&e).unwrap(), CDElement::one(level).neg());
            }
        }
    }

    // Frozen hand evaluations of the recursion at level 2:
    //   e1*e2 = (i,0)(0,1) = (0, conj(i)) = -e3, and e2*e1 = (0, i) = e3.
    #[test]
    fn quaternion_products_match_hand_recursion() {
        let e1 = unit(2, 1);
        let e2 = unit(2, 2);
        let e3 = unit(2, 3);
        assert_eq!(e1.mul(&e2).unwrap(), e3.neg());
        assert_eq!(e2.mul(&e1).unwrap(), e3);
        assert_eq!(e1.mul(&e3).unwrap(), e2);
        assert_eq!(e3.mul(&e1).unwrap(), e2.neg());
        assert_eq!(e2.mul(&e3).unwrap(), e1.neg());
        assert_eq!(e3.mul(&e2).unwrap(), e1);
    }

    #[test]
    fn conjugation_negates_imaginaries() {
        let e3 = unit(2, 3);
        assert_eq!(e3.conj(), e3.neg());
        let x = CDElement::from_integers(3, &[2, -1, 0, 5, 1, 1, 0, -4]).unwrap();
        let c = x.conj();
        assert_eq!(c.coords()[0], x.coords()[0]);
        for i in 1..8 {
            assert_eq!(c.coords()[i], -&x.coords()[i]);
        }
        // conj is an anti-automorphism: conj(xy) = conj(y) conj(x).
        let y = CDElement::from_integers(3, &[0, 3, 1, 0, -2, 0, 1, 1]).unwrap();
        assert_eq!(
            x.mul(&y).unwrap().conj(),
            y.conj().mul(&x.conj()).unwrap()
        );
    }

    #[test]
    fn tau_is_complex_conjugation_at_level_one() {
        let i = unit(1, 1);
        assert_eq!(i.tau(), i.neg());
        assert_eq!(CDElement::one(1).tau(), CDElement::one(1));
    }

    #[test]
    fn tau_is_a_multiplicative_involution() {
        let x = CDElement::from_integers(3, &[1, 2, 0, -1, 3, 0, 2, -2]).unwrap();
        let y = CDElement::from_integers(3, &[0, 1, -1, 1, 0, 2, 0, 1]).unwrap();
        assert_eq!(x.tau().tau(), x);
        assert_eq!(
            x.mul(&y).unwrap().tau(),
            x.tau().mul(&y.tau()).unwrap()
        );
    }

    #[test]
    fn fixed_set_of_quaternions_is_two_dimensional_and_closed() {
        let basis = fixed_subalgebra_basis(2).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], CDElement::one(2));
        assert_eq!(basis[1], unit(2, 2));
        for a in &basis {
            for b in &basis {
                assert!(a.mul(b).unwrap().is_tau_fixed());
            }
        }
    }

    #[test]
    fn fixed_subalgebra_isomorphisms_exist_and_verify() {
        for level in 1..=MAX_LEVEL {
            let iso = fixed_subalgebra_isomorphism(level).unwrap();
            assert_eq!(iso.images.len(), (1usize << (level - 1)).saturating_sub(1));
        }
    }

    #[test]
    fn octonions_are_not_associative_but_quaternions_are() {
        let mut witness = None;
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let (a, b, c) = (unit(3, i), unit(3, j), unit(3, k));
                    let left = a.mul(&b).unwrap().mul(&c).unwrap();
                    let right = a.mul(&b.mul(&c).unwrap()).unwrap();
                    if left != right {
                        witness = Some((i, j, k));
                    }
                }
            }
        }
        assert!(witness.is_some(), "octonion associativity witness missing");
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let (a, b, c) = (unit(2, i), unit(2, j), unit(2, k));
                    assert_eq!(
                        a.mul(&b).unwrap().mul(&c).unwrap(),
                        a.mul(&b.mul(&c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn norm_is_multiplicative_on_octonions() {
        let x = CDElement::from_integers(3, &[1, -2, 3, 0, 1, 1, -1, 2]).unwrap();
        let y = CDElement::from_integers(3, &[2, 0, -1, 1, 0, 3, 1, -1]).unwrap();
        assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
    }

    #[test]
    fn inverse_is_two_sided() {
        let x = CDElement::from_integers(3, &[1, 1, 0, -2, 0, 1, 3, 0]).unwrap();
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).unwrap().is_one());
        assert!(inv.mul(&x).unwrap().is_one());
        assert!(CDElement::zero(3).inverse().is_err());
    }

    #[test]
    fn normalize_edge_cases() {
        let a = CDElement::from_integers(2, &[3, -1, 2, 0]).unwrap();
        let p = ProjectivePoint::normalize(&a, &a).unwrap();
        assert!(p.x().is_one() && p.y().is_one());

        let zero = CDElement::zero(2);
        let p = ProjectivePoint::normalize(&zero, &CDElement::one(2)).unwrap();
        assert!(p.x().is_zero() && p.y().is_one());

        let p = ProjectivePoint::normalize(&a, &zero).unwrap();
        assert!(p.is_infinity());

        assert!(matches!(
            ProjectivePoint::normalize(&zero, &zero),
            Err(Error::BothCoordinatesZero)
        ));
    }

    #[test]
    fn normalization_is_idempotent() {
        let x = CDElement::from_integers(3, &[1, 0, 2, -1, 0, 1, 1, 0]).unwrap();
        let y = CDElement::from_integers(3, &[0, 1, 1, 0, -2, 0, 0, 3]).unwrap();
        let p = ProjectivePoint::normalize(&x, &y).unwrap();
        let q = ProjectivePoint::normalize(p.x(), p.y()).unwrap();
        assert_eq!(p, q);
    }

    // The right-quotient convention would call this line fixed: with
    // x = 1 + e1 and y = -e2 - e3 one has x*y^{-1} = e2 (tau-fixed) while
    // y^{-1}*x = e3 and x^{-1}*y = -e3 are not.  The left-quotient line is
    // genuinely moved by tau, matching the subalgebra criterion.
    #[test]
    fn left_quotient_agrees_with_fixedness_criterion_on_witness() {
        let x = CDElement::from_integers(2, &[1, 1, 0, 0]).unwrap();
        let y = CDElement::from_integers(2, &[0, 0, -1, -1]).unwrap();
        let xy_inv = x.mul(&y.inverse().unwrap()).unwrap();
        assert_eq!(xy_inv, unit(2, 2));
        assert!(xy_inv.is_tau_fixed());

        let criterion = x.inverse().unwrap().mul(&y).unwrap();
        assert!(!criterion.is_tau_fixed());
        let p = ProjectivePoint::normalize(&x, &y).unwrap();
        assert!(!p.is_tau_fixed());
    }

    #[test]
    fn hopf_is_tau_equivariant_on_a_sample() {
        let x = CDElement::from_integers(3, &[1, 2, -1, 0, 0, 1, 0, 1]).unwrap();
        let y = CDElement::from_integers(3, &[2, -1, 0, 1, 1, 0, 1, 0]).unwrap();
        let p = hopf(&x, &y).unwrap();
        assert_eq!(p.tau(), hopf(&x.tau(), &y.tau()).unwrap());
    }
}
