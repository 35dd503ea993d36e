//! The embeddings `j1, j2, j3, jtilde` of the polarized Picard lattice into
//! `L = U^3 + E8(-1)^2 + <-2>` and their orthogonal complements.
//!
//! Coordinates in `L` are ordered `u1,u2, w1,w2, v1,v2, e1..e8, f1..f8, delta`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::catalog::{self, NamedLattice};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, Sublattice};
use crate::linalg::IntMatrix;

pub const L_RANK: usize = 23;
pub const E_OFFSET: usize = 6;
pub const F_OFFSET: usize = 14;
pub const DELTA: usize = 22;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    J1,
    J2,
    J3,
    JTilde,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::J1, Kind::J2, Kind::J3, Kind::JTilde];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::J1 => "j1",
            Kind::J2 => "j2",
            Kind::J3 => "j3",
            Kind::JTilde => "jtilde",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "j1" => Ok(Kind::J1),
            "j2" => Ok(Kind::J2),
            "j3" => Ok(Kind::J3),
            "jtilde" | "jt" => Ok(Kind::JTilde),
            _ => Err(Error::Parse(format!("unknown embedding '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct EmbeddingVariant {
    pub kind: Kind,
    pub d: i64,
}

impl EmbeddingVariant {
    pub fn new(kind: Kind, d: i64) -> Result<Self> {
        let ok = d >= 1
            && match kind {
                Kind::J1 => true,
                Kind::J2 => d % 2 == 1,
                Kind::J3 => d % 4 == 3,
                Kind::JTilde => d % 2 == 0,
            };
        if !ok {
            let need = match kind {
                Kind::J1 => "d >= 1",
                Kind::J2 => "d odd",
                Kind::J3 => "d = 3 mod 4",
                Kind::JTilde => "d even",
            };
            return Err(Error::InvalidParameter(format!("{kind} needs {need}, got d = {d}")));
        }
        Ok(EmbeddingVariant { kind, d })
    }

    /// The auxiliary integer `k` of the coordinate formulas.
    pub fn k(&self) -> i64 {
        let d = self.d;
        match self.kind {
            Kind::J1 | Kind::J3 => 0,
            Kind::J2 if d % 4 == 1 => (d - 1) / 4,
            Kind::J2 => (d + 1) / 4,
            Kind::JTilde if d % 4 == 2 => (d + 2) / 4,
            Kind::JTilde => (d + 4) / 4,
        }
    }

    /// Indices `i` (1-based) with `x = sum e_i` in the E8 part of `h`.
    fn x_support(&self) -> &'static [usize] {
        match self.kind {
            Kind::J1 | Kind::J3 => &[],
            Kind::J2 if self.d % 4 == 1 => &[1],
            Kind::JTilde if self.d % 4 == 2 => &[1],
            _ => &[1, 3],
        }
    }

    /// The embedded polarization `j(h)` in `L`.
    pub fn h_image(&self) -> Vec<BigInt> {
        let d = self.d;
        let k = self.k();
        let mut h = vec![0i64; L_RANK];
        let (a, b, delta) = match self.kind {
            Kind::J1 => (1, d, 0),
            Kind::J2 => (2, 2 * k + 2, 1),
            Kind::J3 => (2, (d + 1) / 2, 1),
            Kind::JTilde => (2, 2 * k, 0),
        };
        h[0] = a;
        h[1] = b;
        h[DELTA] = delta;
        for &i in self.x_support() {
            h[E_OFFSET + i - 1] = 1;
            h[F_OFFSET + i - 1] = 1;
        }
        h.into_iter().map(BigInt::from).collect()
    }

    /// All variants defined for a given `d`.
    pub fn all_for(d: i64) -> Vec<EmbeddingVariant> {
        Kind::ALL.iter().filter_map(|&k| EmbeddingVariant::new(k, d).ok()).collect()
    }
}

impl fmt::Display for EmbeddingVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(d={})", self.kind, self.d)
    }
}

/// `lambda_+(b_i) = e_i + f_i` or `lambda_-(b_i) = e_i - f_i` inside `E8(-1)^2`.
pub fn lambda(plus: bool) -> Sublattice {
    let ambient = catalog::e8m1().direct_sum(&catalog::e8m1());
    let s = if plus { 1 } else { -1 };
    let rows: Vec<Vec<i64>> = (0..8)
        .map(|i| {
            let mut r = vec![0; 16];
            r[i] = 1;
            r[8 + i] = s;
            r
        })
        .collect();
    ambient.sublattice_i64(&rows).expect("independent")
}

/// `lambda_pm(b_i)` as vectors of `L`.
pub fn lambda_in_l(plus: bool) -> Vec<Vec<BigInt>> {
    let s = if plus { 1 } else { -1 };
    (0..8)
        .map(|i| {
            let mut r = vec![BigInt::from(0); L_RANK];
            r[E_OFFSET + i] = 1.into();
            r[F_OFFSET + i] = s.into();
            r
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RealizedEmbedding {
    pub variant: EmbeddingVariant,
    /// Saturated image, with basis matching the catalog basis of `Lambda_2d` or `LambdaTilde_2d`.
    pub image: Sublattice,
    pub h_image: Vec<BigInt>,
    pub is_primitive_as_given: bool,
}

pub fn realize(v: EmbeddingVariant) -> Result<RealizedEmbedding> {
    let v = EmbeddingVariant::new(v.kind, v.d)?;
    let h = v.h_image();
    let lm = lambda_in_l(false);
    let mut rows = vec![h.clone()];
    rows.extend(lm.iter().cloned());
    let given = Sublattice::new(catalog::l(), IntMatrix::from_rows(rows.clone(), L_RANK)?)?;
    let is_primitive_as_given = given.is_primitive();
    let image = if v.kind == Kind::JTilde {
        let mut glue = h.clone();
        let extra: &[usize] = if v.d % 4 == 2 { &[0] } else { &[0, 2] };
        for &i in extra {
            for (g, x) in glue.iter_mut().zip(&lm[i]) {
                *g += x;
            }
        }
        if glue.iter().any(|x| x % 2 != BigInt::from(0)) {
            return Err(Error::NotPrimitive);
        }
        rows[0] = glue.into_iter().map(|x| x / 2).collect();
        Sublattice::new(catalog::l(), IntMatrix::from_rows(rows, L_RANK)?)?
    } else {
        given
    };
    Ok(RealizedEmbedding { variant: v, image, h_image: h, is_primitive_as_given })
}

impl RealizedEmbedding {
    /// The catalog lattice the image should be isometric to, in the same basis.
    pub fn expected_lattice(&self) -> Result<Lattice> {
        match self.variant.kind {
            Kind::JTilde => catalog::lambda_tilde(self.variant.d),
            _ => catalog::lambda(self.variant.d),
        }
    }
}

/// Orthogonal complement of the saturated image in `L`.
pub fn transcendental_of_x(v: EmbeddingVariant) -> Result<Lattice> {
    let r = realize(v)?;
    Ok(r.image.orthogonal_complement()?.to_lattice())
}

/// The target lattice listed for each embedding.
pub fn table1_target_parts(v: EmbeddingVariant) -> Vec<NamedLattice> {
    use NamedLattice::*;
    let d = v.d;
    let mut parts = vec![U, U];
    match v.kind {
        Kind::J1 => parts.extend([E8m2, Rank1(-2 * d), Rank1(-2)]),
        Kind::J2 | Kind::JTilde => {
            parts.extend([D4m1, Rank1(-2 * d)]);
            parts.extend(catalog::repeat(Rank1(-2), 5));
        }
        Kind::J3 => parts.extend([E8m2, K(d)]),
    }
    parts
}

pub fn table1_target(v: EmbeddingVariant) -> Result<Lattice> {
    catalog::make_sum(&table1_target_parts(v))
}

pub fn table1_target_name(v: EmbeddingVariant) -> String {
    let d = v.d;
    match v.kind {
        Kind::J1 => format!("U^2+E8(-2)+<{}>+<-2>", -2 * d),
        Kind::J2 | Kind::JTilde => format!("U^2+D4(-1)+<{}>+<-2>^5", -2 * d),
        Kind::J3 => format!("U^2+E8(-2)+K_{d}"),
    }
}

/// The explicit generators of the complement of `(j2, lambda_-)` in `L`,
/// completed by the two untouched copies of `U`.
pub fn j2_complement_generators(d: i64) -> Result<IntMatrix> {
    let v = EmbeddingVariant::new(Kind::J2, d)?;
    let k = v.k();
    let zero = || vec![BigInt::from(0); L_RANK];
    let mut rows = Vec::new();
    let mut r = zero();
    r[0] = (-1).into();
    r[1] = (k + 1).into();
    rows.push(r);
    let mut r = zero();
    r[1] = 1.into();
    r[DELTA] = 1.into();
    rows.push(r);
    for i in 2..6 {
        let mut r = zero();
        r[i] = 1.into();
        rows.push(r);
    }
    let e8 = catalog::e8m1();
    let mut x = vec![BigInt::from(0); 8];
    for &i in v.x_support() {
        x[i - 1] = 1.into();
    }
    let xperp = e8.sublattice(IntMatrix::from_rows(vec![x], 8)?)?.orthogonal_complement()?;
    for w in xperp.gens().rows() {
        let mut r = zero();
        for (i, c) in w.iter().enumerate() {
            r[E_OFFSET + i] = c.clone();
            r[F_OFFSET + i] = c.clone();
        }
        rows.push(r);
    }
    let y = if d % 4 == 1 { 2 } else { 4 };
    let mut r = zero();
    r[E_OFFSET + y - 1] = 1.into();
    r[F_OFFSET + y - 1] = 1.into();
    r[DELTA] = 1.into();
    rows.push(r);
    IntMatrix::from_rows(rows, L_RANK)
}

/// Complement of `j3(h)` inside the summand `U + <-2>`, spanned by
/// `((0,1),1)` and `((1,-(d+1)/4),0)`.
pub fn j3_local_complement(d: i64) -> Result<Lattice> {
    EmbeddingVariant::new(Kind::J3, d)?;
    let amb = catalog::u().direct_sum(&catalog::rank1(-2)?);
    let s = amb.sublattice_i64(&[[0, 1, 1], [1, -(d + 1) / 4, 0]])?;
    Ok(s.to_lattice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discform::genus_equal;
    use crate::lattice::binary_isometric;
    use crate::linalg::Signature;

    #[test]
    fn polarization_norms() {
        let l = catalog::l();
        for d in 1..=9 {
            for v in EmbeddingVariant::all_for(d) {
                assert_eq!(l.norm(&v.h_image()), BigInt::from(2 * d), "{v}");
                for b in lambda_in_l(false) {
                    assert_eq!(l.pair(&v.h_image(), &b), BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn lambda_grams() {
        let e = catalog::e8m2_gram();
        assert_eq!(lambda(true).gram(), e);
        assert_eq!(lambda(false).gram(), e);
        let amb = lambda(true).ambient().clone();
        for p in lambda(true).gens().rows() {
            for m in lambda(false).gens().rows() {
                assert_eq!(amb.pair(p, m), BigInt::from(0));
            }
        }
    }

    #[test]
    fn images_match_catalog() {
        for d in 1..=6 {
            for v in EmbeddingVariant::all_for(d) {
                let r = realize(v).unwrap();
                assert_eq!(r.image.gram(), *r.expected_lattice().unwrap().gram(), "{v}");
                assert!(r.image.is_primitive(), "{v}");
                assert_eq!(r.is_primitive_as_given, v.kind != Kind::JTilde, "{v}");
            }
        }
    }

    #[test]
    fn small_complements() {
        for (v, d) in [(Kind::J1, 1), (Kind::J3, 3), (Kind::JTilde, 2)] {
            let v = EmbeddingVariant::new(v, d).unwrap();
            let t = transcendental_of_x(v).unwrap();
            assert_eq!(t.signature(), Signature::new(2, 0, 12));
            assert!(genus_equal(&t, &table1_target(v).unwrap()).unwrap(), "{v}");
        }
        let k = j3_local_complement(7).unwrap();
        assert!(binary_isometric(k.gram(), &catalog::k_gram(7).unwrap()).unwrap());
    }

    #[test]
    fn j2_generators_span_complement() {
        for d in [1, 3, 5] {
            let v = EmbeddingVariant::new(Kind::J2, d).unwrap();
            let t = realize(v).unwrap().image.orthogonal_complement().unwrap();
            let g = Sublattice::new(catalog::l(), j2_complement_generators(d).unwrap()).unwrap();
            assert_eq!(g.rank(), 14);
            assert!(g.same_span(&t), "d = {d}");
        }
    }
}
