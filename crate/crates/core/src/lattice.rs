//! Even integral lattices given by Gram matrices, and the sublattice,
//! overlattice and isometry operations built on them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::discform::discriminant_form;
use crate::error::{Error, Result};
use crate::hasse;
use crate::linalg::{
    congruence_diagonal, gcd_all, hermite_normal_form, integer_kernel, saturate, signature, smith_normal_form,
    IntMatrix, RatMatrix, Signature,
};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    gram: IntMatrix,
    labels: Vec<String>,
}

impl Lattice {
    pub fn new(gram: IntMatrix, labels: Vec<String>) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if labels.len() != gram.nrows() {
            return Err(Error::Dimension(format!("{} labels for rank {}", labels.len(), gram.nrows())));
        }
        if let Some(index) = (0..gram.nrows()).find(|&i| gram.get(i, i).is_odd()) {
            return Err(Error::NotEven { index });
        }
        Ok(Lattice { gram, labels })
    }

    /// Lattice with default labels `e1, e2, ...`.
    pub fn from_gram(gram: IntMatrix) -> Result<Self> {
        let labels = (1..=gram.nrows()).map(|i| format!("e{i}")).collect();
        Self::new(gram, labels)
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_gram(IntMatrix::from_i64(rows))
    }

    /// The zero-dimensional lattice.
    pub fn empty() -> Self {
        Lattice { gram: IntMatrix::zeros(0, 0), labels: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.rank() {
            return Err(Error::Dimension(format!("{} labels for rank {}", labels.len(), self.rank())));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let gx = self.gram.left_mul_vec(x).expect("vector length must equal the rank");
        gx.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.pair(x, x)
    }

    pub fn pair_rat(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut s = BigRational::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                let g = self.gram.get(i, j);
                if !g.is_zero() && !b.is_zero() {
                    s += a * b * BigRational::from_integer(g.clone());
                }
            }
        }
        s
    }

    pub fn det(&self) -> BigInt {
        self.gram.det().expect("Gram matrices are square")
    }

    pub fn signature(&self) -> Signature {
        signature(&self.gram).expect("Gram matrices are symmetric")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn rescale(&self, n: i64) -> Result<Lattice> {
        if n == 0 {
            return Err(Error::InvalidParameter("rescaling factor must be nonzero".into()));
        }
        let g = self.gram.scaled(&BigInt::from(n));
        Lattice::new(g, self.labels.clone()).map_err(|_| Error::OddRescale)
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Lattice { gram: self.gram.block_diag(&other.gram), labels }
    }

    /// gcd of the pairings of `v` with the whole lattice.
    pub fn divisibility(&self, v: &[BigInt]) -> Result<BigInt> {
        if v.len() != self.rank() {
            return Err(Error::Dimension(format!("vector of length {} in rank {}", v.len(), self.rank())));
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        let g = gcd_all(&self.gram.left_mul_vec(v)?);
        if g.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(g)
    }

    pub fn sublattice(&self, gens: IntMatrix) -> Result<Sublattice> {
        Sublattice::new(self.clone(), gens)
    }

    pub fn sublattice_i64<R: AsRef<[i64]>>(&self, gens: &[R]) -> Result<Sublattice> {
        let g = if gens.is_empty() { IntMatrix::zeros(0, self.rank()) } else { IntMatrix::from_i64(gens) };
        self.sublattice(g)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gram)
    }
}

/// The lattice spanned by rational combinations `basis` of the basis of `ambient`.
pub fn from_rational_basis(ambient: &Lattice, basis: &RatMatrix, labels: Vec<String>) -> Result<Lattice> {
    if basis.ncols() != ambient.rank() {
        return Err(Error::Dimension("basis vectors of the wrong length".into()));
    }
    let g = basis.mul(&ambient.gram().to_rat())?.mul(&basis.transpose())?;
    let g = g.to_int().ok_or(Error::NonIntegralGlue { index: 0 })?;
    Lattice::new(g, labels)
}

pub fn direct_sum(a: &Lattice, b: &Lattice) -> Lattice {
    a.direct_sum(b)
}

/// Direct sum of any number of lattices.
pub fn sum_all<'a, I: IntoIterator<Item = &'a Lattice>>(parts: I) -> Lattice {
    parts.into_iter().fold(Lattice::empty(), |acc, l| acc.direct_sum(l))
}

pub fn rescale(a: &Lattice, n: i64) -> Result<Lattice> {
    a.rescale(n)
}

/// A sublattice given by independent generators in ambient coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sublattice {
    ambient: Lattice,
    gens: IntMatrix,
}

impl Sublattice {
    pub fn new(ambient: Lattice, gens: IntMatrix) -> Result<Self> {
        if gens.ncols() != ambient.rank() {
            return Err(Error::Dimension(format!(
                "generators have {} coordinates in rank {}",
                gens.ncols(),
                ambient.rank()
            )));
        }
        if gens.rank() != gens.nrows() {
            return Err(Error::DependentGenerators);
        }
        Ok(Sublattice { ambient, gens })
    }

    /// Sublattice spanned by possibly dependent generators.
    pub fn spanned_by(ambient: Lattice, gens: &IntMatrix) -> Result<Self> {
        let basis = hermite_normal_form(gens);
        Self::new(ambient, basis)
    }

    pub fn ambient(&self) -> &Lattice {
        &self.ambient
    }

    pub fn gens(&self) -> &IntMatrix {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.nrows()
    }

    pub fn gram(&self) -> IntMatrix {
        self.gens.congruence(self.ambient.gram()).expect("dimensions checked at construction")
    }

    pub fn to_lattice(&self) -> Lattice {
        Lattice::from_gram(self.gram()).expect("sublattices of even lattices are even")
    }

    pub fn saturate(&self) -> Sublattice {
        Sublattice { ambient: self.ambient.clone(), gens: saturate(&self.gens) }
    }

    /// Index of the sublattice in its saturation.
    pub fn saturation_index(&self) -> BigInt {
        smith_normal_form(&self.gens).invariant_factors().iter().product()
    }

    pub fn is_primitive(&self) -> bool {
        self.saturation_index().is_one()
    }

    pub fn orthogonal_complement(&self) -> Result<Sublattice> {
        if !self.ambient.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        if self.rank() == 0 {
            let n = self.ambient.rank();
            return Ok(Sublattice { ambient: self.ambient.clone(), gens: IntMatrix::identity(n) });
        }
        let m = self.gens.mul(self.ambient.gram())?;
        Ok(Sublattice { ambient: self.ambient.clone(), gens: integer_kernel(&m) })
    }

    /// True when both generate the same subgroup of the ambient lattice.
    pub fn same_span(&self, other: &Sublattice) -> bool {
        self.gens.ncols() == other.gens.ncols() && hermite_normal_form(&self.gens) == hermite_normal_form(&other.gens)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let row = IntMatrix::from_rows(vec![v.to_vec()], v.len()).expect("single row");
        let stacked = self.gens.vstack(&row).expect("same width");
        hermite_normal_form(&stacked) == hermite_normal_form(&self.gens)
    }

    /// Coordinates of an ambient vector with respect to the generators, if it
    /// lies in their integral span.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let r: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let x = self.gens.to_rat().solve_left(&r)?;
        if x.iter().all(|c| c.is_integer()) {
            Some(x.into_iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }
}

pub fn orthogonal_complement(s: &Sublattice) -> Result<Sublattice> {
    s.orthogonal_complement()
}

pub fn divisibility(ambient: &Lattice, v: &[BigInt]) -> Result<BigInt> {
    ambient.divisibility(v)
}

/// An even overlattice together with its basis in the coordinates of the
/// original lattice.
#[derive(Clone, Debug)]
pub struct Overlattice {
    pub lattice: Lattice,
    pub basis: RatMatrix,
    pub index: BigInt,
}

impl Overlattice {
    /// Coordinates in the overlattice basis of a vector given in the original coordinates.
    pub fn coordinates_of(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        let x = self.basis.solve_left(v)?;
        if x.iter().all(|c| c.is_integer()) {
            Some(x.into_iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }
}

pub fn overlattice(a: &Lattice, glue: &RatMatrix) -> Result<Overlattice> {
    let n = a.rank();
    if glue.ncols() != n {
        return Err(Error::Dimension(format!("glue vectors have {} coordinates in rank {}", glue.ncols(), n)));
    }
    let g = a.gram().to_rat();
    let gl = glue.mul(&g)?;
    for i in 0..glue.nrows() {
        if gl.row(i).iter().any(|x| !x.is_integer()) {
            return Err(Error::NonIntegralGlue { index: i });
        }
    }
    let pairings = gl.mul(&glue.transpose())?;
    for i in 0..glue.nrows() {
        let q = pairings.get(i, i);
        if !q.is_integer() || q.to_integer().is_odd() {
            return Err(Error::OddGlueNorm { index: i });
        }
        if (0..glue.nrows()).any(|j| !pairings.get(i, j).is_integer()) {
            return Err(Error::NonIntegralGlue { index: i });
        }
    }
    let den = glue.common_denominator();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { den.clone() } else { BigInt::zero() }).collect())
        .collect();
    for i in 0..glue.nrows() {
        rows.push(glue.row(i).iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect());
    }
    let h = hermite_normal_form(&IntMatrix::from_rows(rows, n)?);
    let scale = BigRational::from_integer(den.clone());
    let basis_rows: Vec<Vec<BigRational>> = h
        .rows()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone()) / &scale).collect())
        .collect();
    let basis = RatMatrix::from_rows(basis_rows, n)?;
    let new_gram = basis.mul(&g)?.mul(&basis.transpose())?.to_int().ok_or(Error::NonIntegralGlue { index: 0 })?;
    let hdet = h.det()?.abs();
    let index = num_traits::pow(den, n) / hdet;
    let lattice = Lattice::from_gram(new_gram)?;
    Ok(Overlattice { lattice, basis, index })
}

/// Canonical representative of the isometry class of a nondegenerate binary
/// form under GL2(Z).
pub fn reduce_binary(g: &IntMatrix) -> Result<IntMatrix> {
    if g.nrows() != 2 || g.ncols() != 2 {
        return Err(Error::Dimension("binary reduction needs a 2x2 Gram".into()));
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let a = g.get(0, 0).clone();
    let b = g.get(0, 1).clone();
    let c = g.get(1, 1).clone();
    let det = &a * &c - &b * &b;
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let (ra, rb, rc) = if det.is_positive() {
        if a.is_negative() {
            let (x, y, z) = reduce_definite(-a, -b, -c);
            (-x, -y, -z)
        } else {
            reduce_definite(a, b, c)
        }
    } else {
        let disc = -&det;
        let s = disc.sqrt();
        if &s * &s == disc {
            reduce_isotropic(&a, &b, &c, &s)
        } else {
            reduce_indefinite(a, b, c)
        }
    };
    Ok(IntMatrix::from_rows(vec![vec![ra, rb.clone()], vec![rb, rc]], 2).expect("2x2"))
}

pub fn binary_isometric(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    Ok(reduce_binary(a)? == reduce_binary(b)?)
}

/// Positive definite Gauss reduction to `0 <= 2b <= a <= c`.
fn reduce_definite(mut a: BigInt, mut b: BigInt, mut c: BigInt) -> (BigInt, BigInt, BigInt) {
    loop {
        // e2 <- e2 - t e1 with t the nearest integer to b / a
        let num: BigInt = 2 * &b + &a;
        let den: BigInt = 2 * &a;
        let t = num.div_floor(&den);
        if !t.is_zero() {
            c = &c - 2 * &t * &b + &t * &t * &a;
            b = &b - &t * &a;
        }
        if a > c {
            std::mem::swap(&mut a, &mut c);
            continue;
        }
        break;
    }
    (a, b.abs(), c)
}

/// Reduction cycle of an indefinite form with non-square discriminant. The
/// canonical form is the lexicographic minimum of the reduced forms in the
/// cycles of `f` and of its improper twin.
fn reduce_indefinite(a: BigInt, b: BigInt, c: BigInt) -> (BigInt, BigInt, BigInt) {
    let bb: BigInt = 2 * &b;
    let disc: BigInt = &bb * &bb - 4 * &a * &c;
    let s = disc.sqrt();
    let mut best: Option<(BigInt, BigInt, BigInt)> = None;
    for start in [(a.clone(), bb.clone(), c.clone()), (a, -bb, c)] {
        for f in indefinite_cycle(start, &disc, &s) {
            if best.as_ref().is_none_or(|m| f < *m) {
                best = Some(f);
            }
        }
    }
    let (x, y, z) = best.expect("cycles are nonempty");
    (x, y / 2, z)
}

fn is_reduced_indefinite(f: &(BigInt, BigInt, BigInt), disc: &BigInt, s: &BigInt) -> bool {
    let (a, b, _) = f;
    let a2 = 2 * a.abs();
    if !b.is_positive() || b > s {
        return false;
    }
    let lhs = &a2 + b;
    if &lhs * &lhs <= *disc {
        return false;
    }
    let r: BigInt = &a2 - b;
    !r.is_positive() || &r * &r < *disc
}

fn rho(f: &(BigInt, BigInt, BigInt), disc: &BigInt, s: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (_, b, c) = f;
    let m = 2 * c.abs();
    let nb = if c.abs() <= *s {
        s - (s + b).mod_floor(&m)
    } else {
        let r = (-b).mod_floor(&m);
        if r > c.abs() {
            r - &m
        } else {
            r
        }
    };
    let na = (&nb * &nb - disc) / (4 * c);
    (c.clone(), nb, na)
}

fn indefinite_cycle(start: (BigInt, BigInt, BigInt), disc: &BigInt, s: &BigInt) -> Vec<(BigInt, BigInt, BigInt)> {
    let mut f = start;
    let mut steps = 0usize;
    while !is_reduced_indefinite(&f, disc, s) {
        f = rho(&f, disc, s);
        steps += 1;
        assert!(steps < 100_000, "indefinite reduction did not terminate");
    }
    let first = f.clone();
    let mut cycle = vec![first.clone()];
    loop {
        f = rho(&f, disc, s);
        if f == first {
            return cycle;
        }
        cycle.push(f.clone());
        assert!(cycle.len() < 100_000, "reduction cycle did not close");
    }
}

/// Isotropic binary forms: for each isotropic line, extend a primitive
/// isotropic vector to a basis giving `[[0, beta], [beta, gamma]]` with
/// `beta > 0` and `0 <= gamma < 2 beta`; the canonical form takes the least gamma.
fn reduce_isotropic(a: &BigInt, b: &BigInt, c: &BigInt, s: &BigInt) -> (BigInt, BigInt, BigInt) {
    let lines: Vec<(BigInt, BigInt)> = if a.is_zero() {
        vec![(BigInt::one(), BigInt::zero()), (c.clone(), -2 * b)]
    } else {
        vec![(-b + s, a.clone()), (-b - s, a.clone())]
    };
    let mut best: Option<(BigInt, BigInt, BigInt)> = None;
    for (p, q) in lines {
        let g = p.gcd(&q);
        let (p, q) = (p / &g, q / &g);
        // p t - q r = 1
        let e = p.extended_gcd(&q);
        let (t, r) = (e.x, -e.y);
        debug_assert!((&p * &t - &q * &r).is_one());
        let pair = |x: (&BigInt, &BigInt), y: (&BigInt, &BigInt)| {
            a * x.0 * y.0 + b * (x.0 * y.1 + x.1 * y.0) + c * x.1 * y.1
        };
        let mut beta = pair((&p, &q), (&r, &t));
        let gamma = pair((&r, &t), (&r, &t));
        if beta.is_negative() {
            beta = -beta;
        }
        let gamma = gamma.mod_floor(&(2 * &beta));
        let f = (BigInt::zero(), beta, gamma);
        if best.as_ref().is_none_or(|m| f < *m) {
            best = Some(f);
        }
    }
    best.expect("two isotropic lines")
}

/// Invariants `(r, a, delta)` of a 2-elementary lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TwoElementary {
    pub rank: usize,
    pub length: usize,
    pub delta: u8,
}

pub fn two_elementary_invariants(a: &Lattice) -> Result<TwoElementary> {
    let q = discriminant_form(a)?;
    if q.orders().iter().any(|n| *n != BigInt::from(2)) {
        return Err(Error::NotTwoElementary);
    }
    let delta = if q.generator_values().iter().all(|v| v.is_integer()) { 0 } else { 1 };
    Ok(TwoElementary { rank: a.rank(), length: q.orders().len(), delta })
}

/// Equivalence of the rational quadratic spaces `A ⊗ Q` and `B ⊗ Q`.
pub fn rational_equivalence(a: &Lattice, b: &Lattice) -> Result<bool> {
    let da = a.det();
    let db = b.det();
    if da.is_zero() || db.is_zero() {
        return Err(Error::Degenerate);
    }
    if a.rank() != b.rank() || a.signature() != b.signature() {
        return Ok(false);
    }
    if !hasse::is_square(&(&da * &db)) {
        return Ok(false);
    }
    let xa = congruence_diagonal(&a.gram().to_rat())?;
    let xb = congruence_diagonal(&b.gram().to_rat())?;
    let mut primes = hasse::prime_factors(&(&da * &db * 2))?;
    primes.sort();
    primes.dedup();
    for p in primes {
        if hasse::hasse_invariant(&xa, &p) != hasse::hasse_invariant(&xb, &p) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    fn u() -> Lattice {
        Lattice::from_i64(&[[0, 1], [1, 0]]).unwrap()
    }

    #[test]
    fn construction_rejects_odd_and_asymmetric() {
        assert_eq!(Lattice::from_i64(&[[1, 0], [0, 2]]), Err(Error::NotEven { index: 0 }));
        assert_eq!(Lattice::from_i64(&[[2, 1], [0, 2]]), Err(Error::NotSymmetric));
    }

    #[test]
    fn complement_of_hyperbolic_plane() {
        let uu = u().direct_sum(&u());
        let s = uu.sublattice_i64(&[[1, 0, 0, 0], [0, 1, 0, 0]]).unwrap();
        let t = s.orthogonal_complement().unwrap();
        assert_eq!(t.gram(), IntMatrix::from_i64(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn overlattice_index_and_det() {
        let l = Lattice::from_gram(IntMatrix::diagonal(&int_vec(&[-2; 8]))).unwrap();
        let glue = RatMatrix::from_rows(vec![vec![crate::linalg::rat(1, 2); 8]], 8).unwrap();
        let o = overlattice(&l, &glue).unwrap();
        assert_eq!(o.index, BigInt::from(2));
        assert_eq!(o.lattice.det(), BigInt::from(64));
        let bad = RatMatrix::from_rows(vec![vec![crate::linalg::rat(1, 2), crate::linalg::rat(0, 1)]], 2).unwrap();
        assert!(overlattice(&u(), &bad).is_err());
    }

    #[test]
    fn binary_reduction_cases() {
        let k3 = IntMatrix::from_i64(&[[-2, 1], [1, -2]]);
        let k3b = IntMatrix::from_i64(&[[-2, -1], [-1, -2]]);
        assert!(binary_isometric(&k3, &k3b).unwrap());
        let f = IntMatrix::from_i64(&[[2, 2], [2, -4]]);
        let g = IntMatrix::from_i64(&[[-2, 0], [0, 6]]);
        assert!(!binary_isometric(&f, &g).unwrap());
        let f2 = IntMatrix::from_i64(&[[2, 4], [4, 2]]);
        assert!(binary_isometric(&f, &IntMatrix::from_i64(&[[2, 0], [0, -6]])).unwrap());
        assert!(binary_isometric(&f, &f2).unwrap());
        let iso = IntMatrix::from_i64(&[[0, 2], [2, -4]]);
        assert_eq!(reduce_binary(&iso).unwrap(), IntMatrix::from_i64(&[[0, 2], [2, 0]]));
    }

    #[test]
    fn rational_equivalence_basics() {
        let h = Lattice::from_i64(&[[2, 0], [0, -2]]).unwrap();
        assert!(rational_equivalence(&u(), &h).unwrap());
        let p = Lattice::from_i64(&[[2, 0], [0, 2]]).unwrap();
        let p6 = Lattice::from_i64(&[[2, 0], [0, 6]]).unwrap();
        assert!(!rational_equivalence(&p, &p6).unwrap());
        assert!(rational_equivalence(&p6, &p6.rescale(4).unwrap()).unwrap());
    }
}
