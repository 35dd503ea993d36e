//! Extended (Mukai) lattices `U + NS(S)` and `U(2) + NS(S)`, Mukai vectors
//! and their orthogonal complements.
//!
//! The pairing is `(r, l, s).(r', l', s') = l.l' + r s' + r' s`. Coordinates
//! of the untwisted lattice are `(s, r, l)` in the basis `(0,0,1), (1,0,0),
//! base`; in the twisted lattice they are `(s, r/2, l)` in the basis
//! `(0,0,1), (2,f1,0), base`, so that a B-field shift by `f1/2` is already
//! absorbed in the second basis vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::catalog::{self, NamedLattice};
use crate::discform::{discriminant_form, fqf_isomorphic, genus_equal, FiniteQuadraticForm};
use crate::embeddings::{EmbeddingVariant, Kind};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, Sublattice};
use crate::linalg::{gcd_all, IntMatrix};

#[derive(Clone, Debug)]
pub struct ExtendedLattice {
    pub base: Lattice,
    pub twisted: bool,
    pub lattice: Lattice,
}

impl ExtendedLattice {
    pub fn new(base: Lattice, twisted: bool) -> Result<Self> {
        let (hyp, l1, l2) = if twisted {
            (catalog::u_scaled(2)?, "(0,0,1)", "(2,f1,0)")
        } else {
            (catalog::u(), "(0,0,1)", "(1,0,0)")
        };
        let mut labels = vec![l1.to_string(), l2.to_string()];
        labels.extend(base.labels().iter().map(|l| format!("(0,{l},0)")));
        let lattice = hyp.direct_sum(&base).with_labels(labels)?;
        Ok(ExtendedLattice { base, twisted, lattice })
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MukaiVector {
    pub r: BigInt,
    pub ell: Vec<BigInt>,
    pub s: BigInt,
}

impl MukaiVector {
    pub fn new(r: i64, ell: Vec<BigInt>, s: i64) -> Self {
        MukaiVector { r: r.into(), ell, s: s.into() }
    }

    /// Coordinates in `ext`; in the twisted case these are those of `v_B` with `B = f1/2`.
    pub fn coordinates(&self, ext: &ExtendedLattice) -> Result<Vec<BigInt>> {
        if self.ell.len() != ext.base.rank() {
            return Err(Error::Dimension("Mukai vector does not match the base lattice".into()));
        }
        let second = if ext.twisted {
            if self.r.is_odd() {
                return Err(Error::InvalidParameter("twisted Mukai vectors need even rank".into()));
            }
            &self.r / 2
        } else {
            self.r.clone()
        };
        let mut c = vec![self.s.clone(), second];
        c.extend(self.ell.iter().cloned());
        Ok(c)
    }

    pub fn square(&self, ext: &ExtendedLattice) -> Result<BigInt> {
        Ok(ext.lattice.norm(&self.coordinates(ext)?))
    }
}

fn lex_search(base: &Lattice, l1: u64, idx: usize, cur: &mut Vec<i64>, out: &mut Option<Vec<i64>>) {
    if out.is_some() {
        return;
    }
    let n = cur.len();
    if idx == n - 1 {
        let rest = l1 as i64;
        for v in if rest == 0 { vec![0] } else { vec![-rest, rest] } {
            cur[idx] = v;
            if accept(base, cur) {
                *out = Some(cur.clone());
                return;
            }
        }
        cur[idx] = 0;
        return;
    }
    let rest = l1 as i64;
    for v in -rest..=rest {
        cur[idx] = v;
        lex_search(base, l1 - v.unsigned_abs(), idx + 1, cur, out);
        if out.is_some() {
            return;
        }
    }
    cur[idx] = 0;
}

fn accept(base: &Lattice, c: &[i64]) -> bool {
    match c.iter().find(|&&x| x != 0) {
        Some(&x) if x > 0 => {}
        _ => return false,
    }
    let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
    base.norm(&v) == BigInt::from(2) && gcd_all(&v) == BigInt::from(1)
}

/// A primitive vector of square 2: the first one in the order of increasing
/// `l1`-norm, then lexicographic, among vectors whose first nonzero coordinate is positive.
pub fn find_square_two_vector(base: &Lattice, max_l1: u64) -> Result<Vec<BigInt>> {
    if base.rank() == 0 {
        return Err(Error::SearchExhausted(0));
    }
    for l1 in 1..=max_l1 {
        let mut cur = vec![0i64; base.rank()];
        let mut out = None;
        lex_search(base, l1, 0, &mut cur, &mut out);
        if let Some(v) = out {
            return Ok(v.into_iter().map(BigInt::from).collect());
        }
    }
    Err(Error::SearchExhausted(max_l1))
}

/// Default search cap `8d`.
pub fn find_h_prime(base: &Lattice, d: i64) -> Result<Vec<BigInt>> {
    find_square_two_vector(base, (8 * d.max(1)) as u64)
}

/// Orthogonal complement of `v` (or `v_B`) in `ext`, saturated.
pub fn mukai_orthogonal(ext: &ExtendedLattice, v: &MukaiVector) -> Result<Sublattice> {
    let c = v.coordinates(ext)?;
    if c.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    if gcd_all(&c) != BigInt::from(1) {
        return Err(Error::NotPrimitive);
    }
    let s = ext.lattice.sublattice(IntMatrix::from_rows(vec![c], ext.rank())?)?;
    s.orthogonal_complement()
}

/// `sum n_i` in the basis `t, n1..n7` of `NS(S_d)`.
pub fn sum_n(base_rank: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(1); base_rank];
    v[0] = BigInt::zero();
    v
}

/// The vectors of the table of models, with the lattice they should cut out.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Model {
    /// `M_v(S_d, beta)`, `v = (0, H', 2)`, `d` odd.
    TwistedSOdd(i64),
    /// `M_v(S_d, beta)`, `v = (4, sum n_i, 2)`, `d` even.
    TwistedSEven(i64),
    /// `M_v(Z_d, beta)`, `v = (0, H', 2)`, `d = 3 mod 4`.
    TwistedZ(i64),
    /// `M_w(S_d)`, `w = (2, sum n_i, 4)`, `d` even.
    UntwistedS(i64),
}

impl Model {
    pub fn d(&self) -> i64 {
        match *self {
            Model::TwistedSOdd(d) | Model::TwistedSEven(d) | Model::TwistedZ(d) | Model::UntwistedS(d) => d,
        }
    }

    pub fn extended(&self) -> Result<ExtendedLattice> {
        let d = self.d();
        let ok = match self {
            Model::TwistedSOdd(_) => d % 2 == 1,
            Model::TwistedSEven(_) | Model::UntwistedS(_) => d % 2 == 0,
            Model::TwistedZ(_) => d % 4 == 3,
        };
        if !ok || d < 1 {
            return Err(Error::InvalidParameter(format!("{self:?} is not defined")));
        }
        match self {
            Model::TwistedZ(_) => ExtendedLattice::new(catalog::z_ns(d)?, true),
            Model::UntwistedS(_) => ExtendedLattice::new(catalog::s_ns(d)?, false),
            _ => ExtendedLattice::new(catalog::s_ns(d)?, true),
        }
    }

    pub fn vector(&self) -> Result<MukaiVector> {
        let ext = self.extended()?;
        Ok(match self {
            Model::TwistedSOdd(d) | Model::TwistedZ(d) => MukaiVector::new(0, find_h_prime(&ext.base, *d)?, 2),
            Model::TwistedSEven(_) => MukaiVector::new(4, sum_n(8), 2),
            Model::UntwistedS(_) => MukaiVector::new(2, sum_n(8), 4),
        })
    }

    /// `Lambda_2d` or `LambdaTilde_2d`.
    pub fn expected(&self) -> Result<Lattice> {
        match self {
            Model::UntwistedS(d) => catalog::lambda_tilde(*d),
            other => catalog::lambda(other.d()),
        }
    }

    /// The lattice `W` with `T = U + W` for the K3 surface of the model.
    pub fn w_parts(&self) -> Vec<NamedLattice> {
        use NamedLattice::*;
        let d = self.d();
        match self {
            Model::TwistedZ(_) => vec![U, Nikulin, K(d)],
            _ => {
                let mut p = vec![U, D4m1, Rank1(-2 * d)];
                p.extend(catalog::repeat(Rank1(-2), 5));
                p
            }
        }
    }

    /// Transcendental lattice of the moduli space: `U(2) + W` when twisted, `U + W` otherwise.
    pub fn moduli_transcendental(&self) -> Result<Lattice> {
        let mut parts = vec![if matches!(self, Model::UntwistedS(_)) { NamedLattice::U } else { NamedLattice::UScaled(2) }];
        parts.extend(self.w_parts());
        catalog::make_sum(&parts)
    }
}

/// The model of the general member of a family, or `None` for `S_d^[2]` (j2).
pub fn model_for(v: EmbeddingVariant) -> Option<Model> {
    match v.kind {
        Kind::J1 if v.d % 2 == 1 => Some(Model::TwistedSOdd(v.d)),
        Kind::J1 => Some(Model::TwistedSEven(v.d)),
        Kind::J2 => None,
        Kind::J3 => Some(Model::TwistedZ(v.d)),
        Kind::JTilde => Some(Model::UntwistedS(v.d)),
    }
}

/// `T(S_d) = U^2 + D4(-1) + <-2d> + <-2>^5`.
pub fn s_d_transcendental(d: i64) -> Result<Lattice> {
    let mut p = vec![NamedLattice::U];
    p.extend(Model::TwistedSOdd(d).w_parts());
    catalog::make_sum(&p)
}

/// `S_d^[2]`: `NS(S_d)` and `T(S_d)` are complementary in `L_K3`, and `T(S_d)` lies
/// in the genus of the transcendental lattice of the j2 family.
pub fn hilbert_square_matches_j2(d: i64) -> Result<bool> {
    let v = EmbeddingVariant::new(Kind::J2, d)?;
    let t_s = s_d_transcendental(d)?;
    let t_x = crate::embeddings::transcendental_of_x(v)?;
    Ok(genus_equal(&t_s, &t_x)?
        && fqf_isomorphic(&discriminant_form(&catalog::s_ns(d)?)?, &discriminant_form(&t_s)?.negate())?)
}

#[derive(Clone, Debug)]
pub struct ModelReport {
    pub model: Model,
    pub vector: MukaiVector,
    pub square: BigInt,
    pub orthogonal: Lattice,
    pub genus_matches: bool,
    /// Discriminant form of the extended lattice is minus that of the transcendental side.
    pub complementary: bool,
}

pub fn model_report(m: Model) -> Result<ModelReport> {
    let ext = m.extended()?;
    let v = m.vector()?;
    let square = v.square(&ext)?;
    let orthogonal = mukai_orthogonal(&ext, &v)?.to_lattice();
    let genus_matches = genus_equal(&orthogonal, &m.expected()?)?;
    let t_side = {
        let mut parts = vec![if ext.twisted { NamedLattice::UScaled(2) } else { NamedLattice::U }];
        parts.extend(m.w_parts());
        catalog::make_sum(&parts)?
    };
    let complementary = fqf_isomorphic(&discriminant_form(&ext.lattice)?, &discriminant_form(&t_side)?.negate())?;
    Ok(ModelReport { model: m, vector: v, square, orthogonal, genus_matches, complementary })
}

/// Generators of `v_B^perp` listed for `v = (4, sum n_i, 2)`, in twisted coordinates:
/// `(2,f1,-1)`, `(0,2n1,1)`, `(0,n_i-n_{i+1},0)`, `(0,t,0)`.
pub fn listed_vb_perp(d: i64) -> Result<Sublattice> {
    let ext = Model::TwistedSEven(d).extended()?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    rows.push(vec![-1, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
    rows.push(vec![1, 0, 0, 2, 0, 0, 0, 0, 0, 0]);
    for i in 1..7 {
        let mut r = vec![0i64; 10];
        r[2 + i] = 1;
        r[3 + i] = -1;
        rows.push(r);
    }
    let mut t = vec![0i64; 10];
    t[2] = 1;
    rows.push(t);
    ext.lattice.sublattice_i64(&rows)
}

/// The embedding `<2d> + N -> U + NS(S_d)`: `t`, `r_i -> n_i + f1`, `n -> 2 f1 - f2`,
/// with `f1 = (0,0,1)` and `f2 = (1,0,0)`.
pub fn nikulin_embedding(d: i64) -> Result<Sublattice> {
    let ext = Model::UntwistedS(d).extended()?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut t = vec![0i64; 10];
    t[2] = 1;
    rows.push(t);
    for i in 0..7 {
        let mut r = vec![0i64; 10];
        r[0] = 1;
        r[3 + i] = 1;
        rows.push(r);
    }
    rows.push(vec![2, -1, 0, 0, 0, 0, 0, 0, 0, 0]);
    ext.lattice.sublattice_i64(&rows)
}

/// Orthogonal of `H'` in `NS(S_d)` and its discriminant form.
pub fn h_prime_orthogonal(d: i64) -> Result<(Lattice, FiniteQuadraticForm)> {
    let base = catalog::s_ns(d)?;
    let h = find_h_prime(&base, d)?;
    let p = base.sublattice(IntMatrix::from_rows(vec![h], base.rank())?)?.orthogonal_complement()?.to_lattice();
    let q = discriminant_form(&p)?;
    Ok((p, q))
}

/// `(1/2d) + v(2) + (-1/2)^4`.
pub fn h_prime_orthogonal_expected(d: i64) -> Result<FiniteQuadraticForm> {
    let half = |a: i64| num_rational::BigRational::new(a.into(), 2.into());
    let mut f = FiniteQuadraticForm::cyclic(2 * d, num_rational::BigRational::new(1.into(), (2 * d).into()))?
        .direct_sum(&FiniteQuadraticForm::v2());
    for _ in 0..4 {
        f = f.direct_sum(&FiniteQuadraticForm::cyclic(2, half(-1))?);
    }
    Ok(f)
}

/// Whether every entry of a Gram matrix is even, so that it is `R(2)` for an integral `R`.
pub fn halved(g: &IntMatrix) -> Option<IntMatrix> {
    let two = BigInt::from(2);
    if g.rows().flatten().any(|x| !(x % &two).is_zero()) {
        return None;
    }
    let rows = g.rows().map(|r| r.iter().map(|x| x / &two).collect()).collect();
    IntMatrix::from_rows(rows, g.ncols()).ok()
}

pub fn abs_det(g: &IntMatrix) -> Result<BigInt> {
    Ok(g.det()?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    #[test]
    fn h_prime_choices() {
        let h = |d| find_h_prime(&catalog::s_ns(d).unwrap(), d).unwrap();
        assert_eq!(h(1), int_vec(&[1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(h(2), int_vec(&[1, -1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(h(5), int_vec(&[1, -2, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn squares() {
        for m in [Model::TwistedSOdd(3), Model::TwistedSEven(2), Model::TwistedZ(3), Model::UntwistedS(4)] {
            let v = m.vector().unwrap();
            assert_eq!(v.square(&m.extended().unwrap()).unwrap(), BigInt::from(2), "{m:?}");
        }
    }

    #[test]
    fn listed_generators() {
        for d in [2, 4] {
            let ext = Model::TwistedSEven(d).extended().unwrap();
            let v = Model::TwistedSEven(d).vector().unwrap();
            let perp = mukai_orthogonal(&ext, &v).unwrap();
            let listed = listed_vb_perp(d).unwrap();
            assert!(listed.same_span(&perp));
            let r = listed.gram();
            let sub: Vec<usize> = (0..8).collect();
            let g = r.select_rows(&sub).transpose().select_rows(&sub);
            let half = halved(&g).unwrap();
            assert_eq!(abs_det(&half).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn nikulin_in_extended() {
        for d in [2, 4] {
            let emb = nikulin_embedding(d).unwrap();
            let want = catalog::rank1(2 * d).unwrap().direct_sum(&catalog::nikulin());
            assert_eq!(emb.gram(), *want.gram());
            let w = Model::UntwistedS(d).vector().unwrap();
            let perp = mukai_orthogonal(&Model::UntwistedS(d).extended().unwrap(), &w).unwrap();
            assert!(emb.same_span(&perp));
        }
    }
}
