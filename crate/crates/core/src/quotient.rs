//! The pushforward `pi_*: L -> H^2(Y)` and the Picard and transcendental
//! lattices of Nikulin orbifolds.
//!
//! Coordinates of `H^2(Y)` are those of [`catalog::h2y`]: `U(2)^3` (0..6),
//! `E8(-1)` (6..14), `(Delta+Sigma)/2` (14) and `(Delta-Sigma)/2` (15).

use std::fmt;

use num_bigint::BigInt;

use crate::catalog::{self, NamedLattice};
use crate::discform::genus_equal;
use crate::embeddings::{self, EmbeddingVariant, Kind, DELTA, E_OFFSET, F_OFFSET, L_RANK};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, Sublattice};
use crate::linalg::IntMatrix;

/// `(u, w, v, x, y, k) -> (u, w, v, x + y, k, k)`.
pub fn pushforward(v: &[BigInt]) -> Result<Vec<BigInt>> {
    if v.len() != L_RANK {
        return Err(Error::Dimension(format!("expected {L_RANK} coordinates, got {}", v.len())));
    }
    let mut out: Vec<BigInt> = v[..6].to_vec();
    for i in 0..8 {
        out.push(&v[E_OFFSET + i] + &v[F_OFFSET + i]);
    }
    out.push(v[DELTA].clone());
    out.push(v[DELTA].clone());
    Ok(out)
}

/// The family a quotient input comes from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// General member of a projective family.
    Projective(EmbeddingVariant),
    /// `NS(X) = E8(-2) + <-2>` for a non-projective Hilbert square.
    NonProjectiveHilbert,
    /// Hilbert square of a K3 with Picard lattice `Lambda_2d` (j1) or `LambdaTilde_2d` (jtilde).
    Hilbert(EmbeddingVariant),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Projective(v) => write!(f, "{v}"),
            Family::NonProjectiveHilbert => write!(f, "W^[2], NS(W)=E8(-2)"),
            Family::Hilbert(v) => write!(f, "W^[2], {v} + delta"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuotientInput {
    /// Generators of `NS(X)` in `L`.
    pub ns_gens: IntMatrix,
    pub include_delta: bool,
}

fn delta_vec() -> Vec<BigInt> {
    let mut d = vec![BigInt::from(0); L_RANK];
    d[DELTA] = 1.into();
    d
}

impl QuotientInput {
    pub fn new(ns_gens: IntMatrix, include_delta: bool) -> Result<Self> {
        if ns_gens.ncols() != L_RANK {
            return Err(Error::Dimension(format!("generators need {L_RANK} coordinates")));
        }
        Ok(QuotientInput { ns_gens, include_delta })
    }

    pub fn for_family(f: Family) -> Result<Self> {
        match f {
            Family::Projective(v) => {
                Self::new(embeddings::realize(v)?.image.gens().clone(), false)
            }
            Family::NonProjectiveHilbert => {
                Self::new(IntMatrix::from_rows(embeddings::lambda_in_l(false), L_RANK)?, true)
            }
            Family::Hilbert(v) => {
                if !matches!(v.kind, Kind::J1 | Kind::JTilde) {
                    return Err(Error::InvalidParameter(format!("no Hilbert square family for {v}")));
                }
                Self::new(embeddings::realize(v)?.image.gens().clone(), true)
            }
        }
    }

    /// All generators, with `delta` appended when requested.
    pub fn generators(&self) -> Result<IntMatrix> {
        if self.include_delta {
            self.ns_gens.vstack(&IntMatrix::from_rows(vec![delta_vec()], L_RANK)?)
        } else {
            Ok(self.ns_gens.clone())
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbifoldPicard {
    pub ns: Sublattice,
    pub transcendental: Sublattice,
}

impl OrbifoldPicard {
    pub fn ns_lattice(&self) -> Lattice {
        self.ns.to_lattice()
    }

    pub fn t_lattice(&self) -> Lattice {
        self.transcendental.to_lattice()
    }

    pub fn ns_genus_equal(&self, other: &Lattice) -> Result<bool> {
        genus_equal(&self.ns_lattice(), other)
    }

    pub fn t_genus_equal(&self, other: &Lattice) -> Result<bool> {
        genus_equal(&self.t_lattice(), other)
    }
}

/// `NS(Y)` is the saturation of `pi_*(NS(X))` together with `Sigma`; `T_Y` is its complement.
pub fn orbifold_picard(input: &QuotientInput) -> Result<OrbifoldPicard> {
    let (sigma, _) = catalog::sigma_delta_classes();
    let mut rows = vec![sigma];
    for g in input.generators()?.rows() {
        let p = pushforward(g)?;
        if p.iter().any(|x| *x != BigInt::from(0)) {
            rows.push(p);
        }
    }
    let span = Sublattice::spanned_by(catalog::h2y(), &IntMatrix::from_rows(rows, catalog::H2Y_RANK)?)?;
    let ns = span.saturate();
    let transcendental = ns.orthogonal_complement()?;
    Ok(OrbifoldPicard { ns, transcendental })
}

fn zeros() -> Vec<BigInt> {
    vec![BigInt::from(0); catalog::H2Y_RANK]
}

fn halve(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let two = BigInt::from(2);
    if v.iter().any(|x| x % &two != BigInt::from(0)) {
        return Err(Error::NotPrimitive);
    }
    Ok(v.iter().map(|x| x / &two).collect())
}

/// Explicit basis of `NS(Y)` in which its Gram is the listed one.
pub fn ns_witness_basis(f: Family) -> Result<IntMatrix> {
    let (sigma, _) = catalog::sigma_delta_classes();
    let mut plus = zeros();
    plus[14] = 1.into();
    let mut minus = zeros();
    minus[15] = 1.into();
    let rows = match f {
        Family::NonProjectiveHilbert => vec![plus, minus],
        Family::Projective(v) | Family::Hilbert(v) => {
            let ph = pushforward(&v.h_image())?;
            let first = match v.kind {
                Kind::J1 => ph,
                Kind::JTilde => halve(&ph)?,
                Kind::J2 | Kind::J3 => {
                    let diff: Vec<BigInt> = ph.iter().zip(&sigma).map(|(a, b)| a - b).collect();
                    halve(&diff)?
                }
            };
            if matches!(f, Family::Hilbert(_)) {
                vec![first, plus, minus]
            } else {
                vec![first, sigma]
            }
        }
    };
    IntMatrix::from_rows(rows, catalog::H2Y_RANK)
}

/// The Gram of `NS(Y)` as listed.
pub fn expected_ns_gram(f: Family) -> IntMatrix {
    match f {
        Family::NonProjectiveHilbert => IntMatrix::from_i64(&[[-2, 0], [0, -2]]),
        Family::Projective(v) => {
            let d = v.d;
            match v.kind {
                Kind::J1 => IntMatrix::from_i64(&[[4 * d, 0], [0, -4]]),
                Kind::J2 | Kind::J3 => IntMatrix::from_i64(&[[d - 1, 2], [2, -4]]),
                Kind::JTilde => IntMatrix::from_i64(&[[d, 0], [0, -4]]),
            }
        }
        Family::Hilbert(v) => {
            let a = if v.kind == Kind::J1 { 4 * v.d } else { v.d };
            IntMatrix::from_i64(&[[a, 0, 0], [0, -2, 0], [0, 0, -2]])
        }
    }
}

/// Named summands of the listed `T_Y`.
pub fn expected_t_parts(f: Family) -> Vec<NamedLattice> {
    use NamedLattice::*;
    match f {
        Family::NonProjectiveHilbert => vec![UScaled(2), UScaled(2), UScaled(2), E8m1],
        Family::Projective(v) => {
            let d = v.d;
            match v.kind {
                Kind::J1 => vec![UScaled(2), UScaled(2), E8m1, Rank1(-4 * d), Rank1(-4)],
                Kind::J2 => vec![UScaled(2), UScaled(2), E7m1, K(d).scaled(2), Rank1(-2)],
                Kind::J3 => vec![UScaled(2), UScaled(2), K(d).scaled(2), E8m1],
                Kind::JTilde => vec![U, U, Rank1(-d), Nikulin, Rank1(-4)],
            }
        }
        Family::Hilbert(v) => {
            let d = v.d;
            if v.kind == Kind::J1 {
                vec![Rank1(-4 * d), UScaled(2), UScaled(2), E8m1]
            } else {
                vec![Rank1(-d), U, U, Nikulin]
            }
        }
    }
}

/// A genus representative for `T_Y` that agrees with the computation in every case.
///
/// It differs from [`expected_t_parts`] only for `j2` with `d = 3 mod 4`, where
/// `x = e1 + e3` has square `-4` and its complement in `E8(-1)` is `D7(-1)`
/// rather than `E7(-1)`.
pub fn computed_t_parts(f: Family) -> Vec<NamedLattice> {
    use NamedLattice::*;
    match f {
        Family::Projective(v) if v.kind == Kind::J2 && v.d % 4 == 3 => {
            vec![UScaled(2), UScaled(2), D8m1, K(v.d).scaled(2)]
        }
        _ => expected_t_parts(f),
    }
}

pub fn expected_t(f: Family) -> Result<Lattice> {
    catalog::make_sum(&expected_t_parts(f))
}

pub fn expected_t_name(f: Family) -> String {
    expected_t_parts(f).iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")
}

/// Transcendental lattice of `X` for the family.
pub fn transcendental_of_family(f: Family) -> Result<Lattice> {
    let input = QuotientInput::for_family(f)?;
    let s = Sublattice::spanned_by(catalog::l(), &input.generators()?)?.saturate();
    Ok(s.orthogonal_complement()?.to_lattice())
}

/// The lattice `T_Z` of the Nikulin surface attached to a Hilbert square family.
pub fn nikulin_surface_t(f: Family) -> Result<Lattice> {
    use NamedLattice::*;
    let parts = match f {
        Family::NonProjectiveHilbert => vec![U, U, U, Nikulin],
        Family::Hilbert(v) if v.kind == Kind::J1 => vec![Rank1(-4 * v.d), UScaled(2), UScaled(2), E8m1],
        Family::Hilbert(v) => vec![Rank1(-v.d), U, U, Nikulin],
        Family::Projective(v) => {
            return Err(Error::InvalidParameter(format!("no Nikulin surface attached to {v}")))
        }
    };
    catalog::make_sum(&parts)
}

/// Projective families with `d <= max_d`, ordered by `(d, kind)`.
pub fn projective_families(max_d: i64) -> Vec<Family> {
    (1..=max_d).flat_map(|d| EmbeddingVariant::all_for(d).into_iter().map(Family::Projective)).collect()
}

/// The Hilbert square families for a given `d`.
pub fn hilbert_families(d: i64) -> Vec<Family> {
    let mut out = vec![Family::Hilbert(EmbeddingVariant { kind: Kind::J1, d })];
    if d % 2 == 0 {
        out.push(Family::Hilbert(EmbeddingVariant { kind: Kind::JTilde, d }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::binary_isometric;

    #[test]
    fn pushforward_of_special_classes() {
        let y = catalog::h2y();
        let (_, delta) = catalog::sigma_delta_classes();
        assert_eq!(pushforward(&delta_vec()).unwrap(), delta);
        for b in embeddings::lambda_in_l(false) {
            assert!(pushforward(&b).unwrap().iter().all(|x| *x == BigInt::from(0)));
        }
        for (i, b) in embeddings::lambda_in_l(true).iter().enumerate() {
            let p = pushforward(b).unwrap();
            let mut want = zeros();
            want[E_OFFSET + i] = 2.into();
            assert_eq!(p, want);
        }
        for d in 1..=6 {
            let v = EmbeddingVariant::new(Kind::J1, d).unwrap();
            assert_eq!(y.norm(&pushforward(&v.h_image()).unwrap()), BigInt::from(4 * d));
        }
    }

    #[test]
    fn witness_bases() {
        for f in projective_families(5).into_iter().chain([Family::NonProjectiveHilbert]).chain(hilbert_families(2)) {
            let p = orbifold_picard(&QuotientInput::for_family(f).unwrap()).unwrap();
            let w = Sublattice::new(catalog::h2y(), ns_witness_basis(f).unwrap()).unwrap();
            assert!(w.same_span(&p.ns), "{f}");
            assert_eq!(w.gram(), expected_ns_gram(f), "{f}");
        }
    }

    #[test]
    fn j2_d1_transcendental() {
        let f = Family::Projective(EmbeddingVariant::new(Kind::J2, 1).unwrap());
        let p = orbifold_picard(&QuotientInput::for_family(f).unwrap()).unwrap();
        assert!(binary_isometric(&p.ns.gram(), &IntMatrix::from_i64(&[[0, 2], [2, -4]])).unwrap());
        assert!(p.t_genus_equal(&expected_t(f).unwrap()).unwrap());
    }

    #[test]
    fn j2_three_mod_four() {
        for d in [3, 7] {
            let f = Family::Projective(EmbeddingVariant::new(Kind::J2, d).unwrap());
            let p = orbifold_picard(&QuotientInput::for_family(f).unwrap()).unwrap();
            assert!(!p.t_genus_equal(&expected_t(f).unwrap()).unwrap());
            assert!(p.t_genus_equal(&catalog::make_sum(&computed_t_parts(f)).unwrap()).unwrap());
        }
    }
}
