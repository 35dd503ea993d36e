//! Euler characteristics of Cartier and Weil divisors on Nikulin orbifolds,
//! and the dimensions of the two projective models of `Y`.
//!
//! Fixed constants on a fourfold `X` of K3^[2]-type with `q(H) = q`:
//! `H^4 = 3 q^2`, `H^2.c2(X) = 30 q`, `(H|W)^2 = 2 q`.
//! The symbol `n_noncartier` counts the singular points of `Y` where a Weil
//! divisor fails to be Cartier; it is unrelated to the Nikulin lattice `N`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::embeddings::{EmbeddingVariant, Kind};
use crate::error::{Error, Result};

/// Number of isolated singular points of `Y`.
pub const SINGULAR_POINTS: i64 = 28;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `chi(Y, D) = (q^2 + 6q + 12) / 4` for a Cartier divisor with `q(D) = q`.
pub fn chi_cartier(q: i64) -> Result<BigInt> {
    if q.is_odd() {
        return Err(Error::OddQValue(q));
    }
    let q = BigInt::from(q);
    Ok((&q * &q + 6 * &q + 12) / 4)
}

/// `chi(D) = 3/8 (m^4 qL^2 / 24 + m^2 qL + 8) - N/16` for `D = (m/2) L`, `m` odd.
pub fn chi_weil(q_l: i64, m: i64, n_noncartier: i64) -> Result<BigRational> {
    if m.is_even() {
        return Err(Error::EvenMultiple(m));
    }
    check_n(n_noncartier)?;
    let m2 = int(m * m);
    let ql = int(q_l);
    let inner = &m2 * &m2 * &ql * &ql / int(24) + &m2 * &ql + int(8);
    Ok(rat(3, 8) * inner - rat(n_noncartier, 16))
}

fn check_n(n: i64) -> Result<()> {
    if !(0..=SINGULAR_POINTS).contains(&n) {
        return Err(Error::InvalidParameter(format!("number of non-Cartier points must lie in 0..=28, got {n}")));
    }
    Ok(())
}

fn check_k(k: i64) -> Result<()> {
    if k != 0 && k != -1 {
        return Err(Error::InvalidCoefficient(k));
    }
    Ok(())
}

pub fn h4_on_x(q: i64) -> BigInt {
    BigInt::from(3) * q * q
}

pub fn h2c2_on_x(q: i64) -> BigInt {
    BigInt::from(30) * q
}

pub fn restriction_square(q: i64) -> BigInt {
    BigInt::from(2) * q
}

/// Fujiki relation on `Y`: `D^4 = 6 q(D)^2`.
pub fn h4_on_y(q: i64) -> BigInt {
    BigInt::from(6) * q * q
}

/// Orbifold Riemann-Roch for `D` with `q*beta*D = r*H + k E_W`, `q(H) = q_h`:
/// `H^4/48 + H^2.c2/48 + (1/16 - k^2/8)(H|W)^2 + 3 - N/16 + k^4/4 - 3k^2/2`.
pub fn chi_orbifold(q_h: i64, k: i64, n_noncartier: i64) -> Result<BigRational> {
    check_k(k)?;
    check_n(n_noncartier)?;
    let k2 = int(k * k);
    let h4 = BigRational::from_integer(h4_on_x(q_h));
    let h2c2 = BigRational::from_integer(h2c2_on_x(q_h));
    let hw = BigRational::from_integer(restriction_square(q_h));
    Ok(h4 / int(48) + h2c2 / int(48) + (rat(1, 16) - &k2 / int(8)) * hw + int(3) - rat(n_noncartier, 16)
        + &k2 * &k2 / int(4)
        - rat(3, 2) * &k2)
}

/// `d^2/4 + 3d/2 - |k| d/2 - N/16 - 5|k|/4 + 3`.
pub fn chi_orbifold_closed(d: i64, k: i64, n_noncartier: i64) -> Result<BigRational> {
    check_k(k)?;
    check_n(n_noncartier)?;
    let ak = k.abs();
    Ok(rat(d * d, 4) + rat(3 * d, 2) - rat(ak * d, 2) - rat(n_noncartier, 16) - rat(5 * ak, 4) + int(3))
}

pub fn to_integer(x: &BigRational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct DivisorData {
    pub n: i64,
    pub k: i64,
}

pub type Pair = (DivisorData, DivisorData);

/// Pairs `((N1, 0), (N2, -1))` with `N1 + N2 = 28` for which both `chi` are integers.
pub fn admissible_pairs(d: i64) -> Result<Vec<Pair>> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be positive, got {d}")));
    }
    let mut out = Vec::new();
    for n1 in 0..=SINGULAR_POINTS {
        let a = DivisorData { n: n1, k: 0 };
        let b = DivisorData { n: SINGULAR_POINTS - n1, k: -1 };
        if integral_pair(d, a, b)? {
            out.push((a, b));
        }
    }
    Ok(out)
}

fn integral_pair(d: i64, a: DivisorData, b: DivisorData) -> Result<bool> {
    Ok(chi_orbifold(2 * d, a.k, a.n)?.is_integer() && chi_orbifold(2 * d, b.k, b.n)?.is_integer())
}

/// Every `(N1, k1, N2, k2)` with `N1 + N2 = 28`, `k_i` in `{0, -1}` and both `chi` integral.
pub fn integral_quadruples(d: i64) -> Result<Vec<Pair>> {
    let mut out = Vec::new();
    for n1 in 0..=SINGULAR_POINTS {
        for k1 in [0, -1] {
            for k2 in [0, -1] {
                let a = DivisorData { n: n1, k: k1 };
                let b = DivisorData { n: SINGULAR_POINTS - n1, k: k2 };
                if integral_pair(d, a, b)? {
                    out.push((a, b));
                }
            }
        }
    }
    Ok(out)
}

/// `(N1, N2)` for `D1` (orthogonal to `Sigma`) and `D2` (meeting `Sigma`).
pub fn noncartier_counts(variant: EmbeddingVariant) -> (i64, i64) {
    match variant.kind {
        Kind::J1 if variant.d % 2 == 1 => (12, 16),
        Kind::J1 => (16, 12),
        Kind::J2 | Kind::J3 => (28, 0),
        Kind::JTilde => (0, 28),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectionReport {
    pub variant: EmbeddingVariant,
    pub pairs: Pair,
    pub h0: (BigInt, BigInt),
    pub dims: (BigInt, BigInt),
}

impl ProjectionReport {
    pub fn h0_sum(&self) -> BigInt {
        &self.h0.0 + &self.h0.1
    }
}

pub fn projection_report(variant: EmbeddingVariant) -> Result<ProjectionReport> {
    let variant = EmbeddingVariant::new(variant.kind, variant.d)?;
    let (n1, n2) = noncartier_counts(variant);
    let a = DivisorData { n: n1, k: 0 };
    let b = DivisorData { n: n2, k: -1 };
    let q = 2 * variant.d;
    let h = |x: DivisorData| -> Result<BigInt> {
        let c = chi_orbifold(q, x.k, x.n)?;
        to_integer(&c).filter(|v| !v.is_negative()).ok_or_else(|| {
            Error::InvalidParameter(format!("chi = {c} is not a nonnegative integer for {variant}"))
        })
    };
    let h0 = (h(a)?, h(b)?);
    let dims = (&h0.0 - BigInt::one(), &h0.1 - BigInt::one());
    Ok(ProjectionReport { variant, pairs: (a, b), h0, dims })
}

/// The listed formulas for `(m1, m2)`.
pub fn listed_dims(variant: EmbeddingVariant) -> (BigRational, BigRational) {
    let d = variant.d;
    let base1 = rat(d * d, 4) + rat(3 * d, 2);
    let base2 = rat(d * d, 4) + int(d);
    let (c1, c2) = match variant.kind {
        Kind::J1 if d % 2 == 1 => (rat(5, 4), rat(-1, 4)),
        Kind::J1 => (int(1), int(0)),
        Kind::J2 | Kind::J3 => (rat(1, 4), rat(3, 4)),
        Kind::JTilde => (int(2), int(-1)),
    };
    (base1 + c1, base2 + c2)
}

/// `h0(D1) + h0(D2) = (q + 4)(q + 6) / 8` with `q = 2d`.
pub fn eigenspace_total(d: i64) -> BigInt {
    let q = BigInt::from(2 * d);
    (&q + 4) * (&q + 6) / 8
}
