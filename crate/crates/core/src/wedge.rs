//! Exterior algebra of a 7-dimensional space and the pairing on
//! `3 V7 + wedge^3 V7 + 3 wedge^5 V7` with values in `wedge^6 V7`.
//!
//! Basis of `wedge^k V7`: increasing `k`-subsets of `{1..7}` in lexicographic order.
//! The pairing is
//! `b(x, y) = sum_i (l_i ^ W_i + w_i ^ L_i) + alpha ^ beta`,
//! which is antisymmetric.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;

pub const DIM: usize = 7;

fn subsets(k: usize) -> Vec<u8> {
    (0u8..(1 << DIM)).filter(|m| m.count_ones() as usize == k).collect::<Vec<_>>()
}

/// Lexicographically ordered `k`-subsets as bit masks.
pub fn basis(k: usize) -> Vec<u8> {
    let mut b = subsets(k);
    b.sort_by_key(|m| (0..DIM).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>());
    b
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiVector {
    degree: usize,
    coords: Vec<BigRational>,
}

impl MultiVector {
    pub fn zero(degree: usize) -> Result<Self> {
        if degree > DIM {
            return Err(Error::DegreeOverflow(degree));
        }
        Ok(MultiVector { degree, coords: vec![BigRational::zero(); binomial(DIM, degree)] })
    }

    pub fn new(degree: usize, coords: Vec<BigRational>) -> Result<Self> {
        if degree > DIM {
            return Err(Error::DegreeOverflow(degree));
        }
        if coords.len() != binomial(DIM, degree) {
            return Err(Error::Dimension(format!("wedge^{degree} has dimension {}", binomial(DIM, degree))));
        }
        Ok(MultiVector { degree, coords })
    }

    pub fn from_i64(degree: usize, coords: &[i64]) -> Result<Self> {
        Self::new(degree, coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `e_{i1} ^ ... ^ e_{ik}` for 1-based indices, with the sign of the sorting permutation.
    pub fn basis_blade(indices: &[usize]) -> Result<Self> {
        let mut out = Self::zero(indices.len())?;
        if indices.iter().any(|&i| i == 0 || i > DIM) {
            return Err(Error::InvalidParameter(format!("basis indices run over 1..=7, got {indices:?}")));
        }
        let mut mask = 0u8;
        for &i in indices {
            if mask >> (i - 1) & 1 == 1 {
                return Ok(out);
            }
            mask |= 1 << (i - 1);
        }
        let inversions = (0..indices.len())
            .flat_map(|a| (a + 1..indices.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| indices[a] > indices[b])
            .count();
        let pos = basis(indices.len()).iter().position(|&m| m == mask).expect("mask is a basis subset");
        out.coords[pos] = if inversions % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &MultiVector) -> Result<MultiVector> {
        if self.degree != other.degree {
            return Err(Error::Dimension("adding multivectors of different degrees".into()));
        }
        Ok(MultiVector { degree: self.degree, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, c: &BigRational) -> MultiVector {
        MultiVector { degree: self.degree, coords: self.coords.iter().map(|a| a * c).collect() }
    }
}

/// Sign of `e_A ^ e_B` relative to `e_{A u B}`: `(-1)^{#(a in A, b in B, a > b)}`.
fn merge_sign(a: u8, b: u8) -> i32 {
    let mut count = 0;
    for i in 0..DIM {
        if b >> i & 1 == 1 {
            count += (a >> (i + 1)).count_ones();
        }
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn wedge(a: &MultiVector, b: &MultiVector) -> Result<MultiVector> {
    let deg = a.degree + b.degree;
    if deg > DIM {
        return Err(Error::DegreeOverflow(deg));
    }
    let (ba, bb, bo) = (basis(a.degree), basis(b.degree), basis(deg));
    let mut out = MultiVector::zero(deg)?;
    for (i, &ma) in ba.iter().enumerate() {
        if a.coords[i].is_zero() {
            continue;
        }
        for (j, &mb) in bb.iter().enumerate() {
            if b.coords[j].is_zero() || ma & mb != 0 {
                continue;
            }
            let pos = bo.iter().position(|&m| m == ma | mb).expect("union is a basis subset");
            let term = &a.coords[i] * &b.coords[j];
            if merge_sign(ma, mb) > 0 {
                out.coords[pos] += term;
            } else {
                out.coords[pos] -= term;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TripleElement {
    pub l: [MultiVector; 3],
    pub alpha: MultiVector,
    pub w: [MultiVector; 3],
}

pub const TRIPLE_DIM: usize = 3 * 7 + 35 + 3 * 21;

impl TripleElement {
    pub fn zero() -> Self {
        let z = |k| MultiVector::zero(k).expect("degree at most 7");
        TripleElement { l: [z(1), z(1), z(1)], alpha: z(3), w: [z(5), z(5), z(5)] }
    }

    pub fn new(l: [MultiVector; 3], alpha: MultiVector, w: [MultiVector; 3]) -> Result<Self> {
        if l.iter().any(|x| x.degree != 1) || alpha.degree != 3 || w.iter().any(|x| x.degree != 5) {
            return Err(Error::Dimension("triple components must have degrees 1, 3 and 5".into()));
        }
        Ok(TripleElement { l, alpha, w })
    }

    /// Flat coordinates: `l1, l2, l3, alpha, w1, w2, w3`.
    pub fn flatten(&self) -> Vec<BigRational> {
        self.l.iter().chain(std::iter::once(&self.alpha)).chain(self.w.iter()).flat_map(|m| m.coords.iter().cloned()).collect()
    }

    pub fn from_flat(c: &[BigRational]) -> Result<Self> {
        if c.len() != TRIPLE_DIM {
            return Err(Error::Dimension(format!("expected {TRIPLE_DIM} coordinates")));
        }
        let part = |from: usize, deg: usize| MultiVector::new(deg, c[from..from + binomial(DIM, deg)].to_vec());
        Ok(TripleElement {
            l: [part(0, 1)?, part(7, 1)?, part(14, 1)?],
            alpha: part(21, 3)?,
            w: [part(56, 5)?, part(77, 5)?, part(98, 5)?],
        })
    }
}

pub fn b_pair(x: &TripleElement, y: &TripleElement) -> Result<MultiVector> {
    let mut acc = wedge(&x.alpha, &y.alpha)?;
    for i in 0..3 {
        acc = acc.add(&wedge(&x.l[i], &y.w[i])?)?;
        acc = acc.add(&wedge(&x.w[i], &y.l[i])?)?;
    }
    Ok(acc)
}

/// Whether `b` vanishes on every pair of basis vectors; the basis must be independent.
pub fn is_isotropic(basis: &[TripleElement]) -> Result<bool> {
    if basis.is_empty() {
        return Ok(true);
    }
    let m = RatMatrix::from_rows(basis.iter().map(|t| t.flatten()).collect(), TRIPLE_DIM)?;
    if m.rank() != basis.len() {
        return Err(Error::DependentBasis);
    }
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            if !b_pair(x, y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A 28-dimensional isotropic subspace: the whole `3 V7` block together with
/// seven 3-vectors `e1 ^ e_i ^ e_j` sharing the factor `e1`.
pub fn standard_isotropic_28() -> Vec<TripleElement> {
    let mut out = Vec::new();
    for slot in 0..3 {
        for i in 1..=DIM {
            let mut t = TripleElement::zero();
            t.l[slot] = MultiVector::basis_blade(&[i]).expect("valid index");
            out.push(t);
        }
    }
    let pairs = [(2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5)];
    for (i, j) in pairs {
        let mut t = TripleElement::zero();
        t.alpha = MultiVector::basis_blade(&[1, i, j]).expect("valid index");
        out.push(t);
    }
    out
}
