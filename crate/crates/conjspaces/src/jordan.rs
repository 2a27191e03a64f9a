//! Hermitian 3x3 matrices over a Cayley–Dickson algebra, with the Jordan
//! product `a ∘ b = (ab + ba)/2`.  Rank-one projectors of trace 1 are the
//! points of the projective plane over the coordinate algebra; for the
//! octonions this is the only workable definition, since there is no vector
//! space of homogeneous coordinates.
//!
//! The conjugation `tau` acts entrywise and restricts to an involution of
//! the plane whose fixed points form the projective plane over the fixed
//! subalgebra — one dimension-halving step down the Cayley–Dickson tower.

use num::{BigRational, One, Zero};

use crate::cayley_dickson::CDElement;
use crate::error::{Error, Result};

/// A Hermitian matrix
/// ```text
/// [ alpha   x     z   ]
/// [ conj x  beta  y   ]
/// [ conj z  conj y gamma ]
/// ```
/// with rational diagonal and entries `x, y, z` in the coordinate algebra.
/// Only the upper triangle is stored; the lower one is implied.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianMatrix {
    level: u8,
    diag: [BigRational; 3],
    x: CDElement,
    y: CDElement,
    z: CDElement,
}

impl HermitianMatrix {
    pub fn new(
        level: u8,
        diag: [BigRational; 3],
        x: CDElement,
        y: CDElement,
        z: CDElement,
    ) -> Result<Self> {
        for e in [&x, &y, &z] {
            if e.level() != level {
                return Err(Error::LevelMismatch {
                    left: level,
                    right: e.level(),
                });
            }
        }
        Ok(HermitianMatrix { level, diag, x, y, z })
    }

    pub fn diagonal(level: u8, diag: [BigRational; 3]) -> Self {
        HermitianMatrix {
            level,
            diag,
            x: CDElement::zero(level),
            y: CDElement::zero(level),
            z: CDElement::zero(level),
        }
    }

    /// The base point `diag(1, 0, 0)`.
    pub fn base_point(level: u8) -> Self {
        Self::diagonal(
            level,
            [BigRational::one(), BigRational::zero(), BigRational::zero()],
        )
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn diag(&self) -> &[BigRational; 3] {
        &self.diag
    }

    pub fn x(&self) -> &CDElement {
        &self.x
    }

    pub fn y(&self) -> &CDElement {
        &self.y
    }

    pub fn z(&self) -> &CDElement {
        &self.z
    }

    /// The full 3x3 entry array, lower triangle filled in by conjugation.
    pub fn entries(&self) -> [[CDElement; 3]; 3] {
        let q = |i: usize| CDElement::from_rational(self.level, self.diag[i].clone());
        [
            [q(0), self.x.clone(), self.z.clone()],
            [self.x.conj(), q(1), self.y.clone()],
            [self.z.conj(), self.y.conj(), q(2)],
        ]
    }

    pub fn trace(&self) -> BigRational {
        self.diag.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(HermitianMatrix {
            level: self.level,
            diag: [
                &self.diag[0] + &other.diag[0],
                &self.diag[1] + &other.diag[1],
                &self.diag[2] + &other.diag[2],
            ],
            x: self.x.add(&other.x)?,
            y: self.y.add(&other.y)?,
            z: self.z.add(&other.z)?,
        })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        HermitianMatrix {
            level: self.level,
            diag: [
                q * &self.diag[0],
                q * &self.diag[1],
                q * &self.diag[2],
            ],
            x: self.x.scale(q),
            y: self.y.scale(q),
            z: self.z.scale(q),
        }
    }

    /// Entrywise conjugation `tau`; the rational diagonal is fixed.
    pub fn tau(&self) -> Self {
        HermitianMatrix {
            level: self.level,
            diag: self.diag.clone(),
            x: self.x.tau(),
            y: self.y.tau(),
            z: self.z.tau(),
        }
    }

    pub fn is_tau_fixed(&self) -> bool {
        self.x.is_tau_fixed() && self.y.is_tau_fixed() && self.z.is_tau_fixed()
    }

    /// `a ∘ a` equals the ordinary matrix square, so projectors can be
    /// recognized without the halving in the Jordan product.
    pub fn is_projector(&self) -> bool {
        match jordan_product(self, self) {
            Ok(p) => p == *self,
            Err(_) => false,
        }
    }

    /// Membership in the projective plane: a trace-one projector.
    pub fn in_projective_plane(&self) -> bool {
        self.trace().is_one() && self.is_projector()
    }
}

fn ordinary_product(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<[[CDElement; 3]; 3]> {
    let ae = a.entries();
    let be = b.entries();
    let level = a.level;
    let mut out: [[CDElement; 3]; 3] = std::array::from_fn(|_| {
        std::array::from_fn(|_| CDElement::zero(level))
    });
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = CDElement::zero(level);
            for (k, bk) in be.iter().enumerate() {
                acc = acc.add(&ae[i][k].mul(&bk[j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// The Jordan product `(ab + ba)/2`.  The symmetrization is Hermitian even
/// over the octonions, where the ordinary matrix product alone is not.
pub fn jordan_product(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<HermitianMatrix> {
    if a.level != b.level {
        return Err(Error::LevelMismatch {
            left: a.level,
            right: b.level,
        });
    }
    let half = BigRational::new(1.into(), 2.into());
    let ab = ordinary_product(a, b)?;
    let ba = ordinary_product(b, a)?;
    let entry = |i: usize, j: usize| -> Result<CDElement> {
        Ok(ab[i][j].add(&ba[i][j])?.scale(&half))
    };
    let diag_entry = |i: usize| -> Result<BigRational> {
        let e = entry(i, i)?;
        if !e.coords()[1..].iter().all(|c| c.is_zero()) {
            return Err(Error::Invalid(format!(
                "diagonal entry ({i},{i}) of a symmetrized product is not rational"
            )));
        }
        Ok(e.real_part().clone())
    };
    Ok(HermitianMatrix {
        level: a.level,
        diag: [diag_entry(0)?, diag_entry(1)?, diag_entry(2)?],
        x: entry(0, 1)?,
        y: entry(1, 2)?,
        z: entry(0, 2)?,
    })
}

/// The rank-one projector `v v* / |v|^2` spanned by a nonzero coordinate
/// vector.  Only meaningful while the coordinate algebra is associative, so
/// octonion-level input is rejected; octonion points must be given directly
/// as trace-one projectors.
pub fn projector_from_vector(v: &[CDElement; 3]) -> Result<HermitianMatrix> {
    let level = v[0].level();
    if v.iter().any(|e| e.level() != level) {
        return Err(Error::LevelMismatch {
            left: level,
            right: v.iter().find(|e| e.level() != level).unwrap().level(),
        });
    }
    if level > 2 {
        return Err(Error::VectorProjectorLevelTooHigh);
    }
    let norm: BigRational = v.iter().map(|e| e.norm()).sum();
    if norm.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inv = norm.recip();
    let pair = |i: usize, j: usize| -> Result<CDElement> {
        Ok(v[i].mul(&v[j].conj())?.scale(&inv))
    };
    Ok(HermitianMatrix {
        level,
        diag: [
            &v[0].norm() * &inv,
            &v[1].norm() * &inv,
            &v[2].norm() * &inv,
        ],
        x: pair(0, 1)?,
        y: pair(1, 2)?,
        z: pair(0, 2)?,
    })
}

/// The three cells of the plane, indexed by how far down the flag
/// `pt ⊂ line ⊂ plane` a point sits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StratumTag {
    /// `gamma != 0`: the open top cell.
    OpenTopCell,
    /// `gamma = 0, beta != 0`: the line at infinity minus its base point.
    SphereCell,
    /// The base point `diag(1, 0, 0)` itself.
    ZeroCell,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Stratum {
    pub tag: StratumTag,
    /// Real dimension of the cell: `2r`, `r`, or `0` for `r = dim K`.
    pub dimension: u32,
}

/// Locate a point of the plane in the three-cell decomposition.  For a
/// trace-one projector, `gamma = 0` forces `y = z = 0` and `beta = 0` on
/// top of that forces `x = 0`, so the flag membership is read off the
/// diagonal alone.
pub fn classify_stratum(p: &HermitianMatrix) -> Result<Stratum> {
    if !p.is_projector() {
        return Err(Error::NotAProjector);
    }
    if !p.trace().is_one() {
        return Err(Error::NotAProjectivePoint(format!(
            "trace is {}, not 1",
            p.trace()
        )));
    }
    let r = 1u32 << p.level;
    let tag = if !p.diag[2].is_zero() {
        StratumTag::OpenTopCell
    } else if !p.diag[1].is_zero() {
        StratumTag::SphereCell
    } else {
        StratumTag::ZeroCell
    };
    let dimension = match tag {
        StratumTag::OpenTopCell => 2 * r,
        StratumTag::SphereCell => r,
        StratumTag::ZeroCell => 0,
    };
    Ok(Stratum { tag, dimension })
}
