//! Named lattices with fixed labelled bases.
//!
//! The symbol `N` is used for two unrelated things in the literature: the
//! Nikulin lattice and the number of non-Cartier points of a divisor. Here
//! the lattice is [`NamedLattice::Nikulin`] and the count is called
//! `n_noncartier` in [`crate::riemann_roch`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::{from_rational_basis, Lattice};
use crate::linalg::{IntMatrix, RatMatrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum NamedLattice {
    /// Hyperbolic plane.
    U,
    /// `U(n)`.
    UScaled(i64),
    /// Rank one lattice `<n>`.
    Rank1(i64),
    E8m1,
    /// `E8(-2)` in the basis `b1..b8`.
    E8m2,
    E7m1,
    D4m1,
    D8m1,
    A2m1,
    Nikulin,
    K(i64),
    H(i64),
    Lambda(i64),
    LambdaTilde(i64),
    LK3,
    L,
    H2Y,
    /// `<2d> + <-2>^7`, basis `t, n1..n7`.
    SNs(i64),
    /// Index two overlattice of `SNs(d)` for `d = 3 mod 4`.
    ZNs(i64),
    /// Picard lattice of the K3 surface of a cubic fourfold containing a plane.
    FanoNs,
    Scaled(Box<NamedLattice>, i64),
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn lat(rows: &[Vec<i64>], labels: Vec<String>) -> Result<Lattice> {
    Lattice::new(IntMatrix::from_i64(rows), labels)
}

/// Gram of `E8(-2)` in the basis `b1..b8`: a chain `b1..b7` with `b8` attached to `b3`.
pub fn e8m2_gram() -> IntMatrix {
    let mut g = vec![vec![0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -4;
    }
    let mut link = |i: usize, j: usize| {
        g[i][j] = 2;
        g[j][i] = 2;
    };
    for i in 0..6 {
        link(i, i + 1);
    }
    link(2, 7);
    IntMatrix::from_i64(&g)
}

fn dynkin(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(i, j) in edges {
        g[i][j] = 1;
        g[j][i] = 1;
    }
    g
}

pub fn u() -> Lattice {
    lat(&[vec![0, 1], vec![1, 0]], vec!["u1".into(), "u2".into()]).expect("U")
}

pub fn u_scaled(n: i64) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::InvalidParameter("U(n) needs n != 0".into()));
    }
    lat(&[vec![0, n], vec![n, 0]], vec!["u1".into(), "u2".into()])
}

pub fn rank1(n: i64) -> Result<Lattice> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!("<{n}> is not a nonzero even lattice")));
    }
    lat(&[vec![n]], vec!["x".into()])
}

pub fn e8m2() -> Lattice {
    Lattice::new(e8m2_gram(), labels("b", 8)).expect("E8(-2)")
}

/// `E8(-1)`, the b-basis Gram of `E8(-2)` divided by two.
pub fn e8m1() -> Lattice {
    let g: Vec<Vec<i64>> = e8m2_gram()
        .rows()
        .map(|r| r.iter().map(|x| i64::try_from(x / 2).expect("small")).collect())
        .collect();
    lat(&g, labels("e", 8)).expect("E8(-1)")
}

pub fn e7m1() -> Lattice {
    lat(&dynkin(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]), labels("a", 7)).expect("E7(-1)")
}

pub fn d4m1() -> Lattice {
    lat(&dynkin(4, &[(0, 1), (1, 2), (1, 3)]), labels("a", 4)).expect("D4(-1)")
}

pub fn d8m1() -> Lattice {
    lat(&dynkin(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7)]), labels("a", 8)).expect("D8(-1)")
}

pub fn a2m1() -> Lattice {
    lat(&dynkin(2, &[(0, 1)]), labels("a", 2)).expect("A2(-1)")
}

/// The Nikulin lattice in the basis `r1..r7, n` with `n = (r1 + ... + r8)/2`.
pub fn nikulin() -> Lattice {
    let mut g = vec![vec![0i64; 8]; 8];
    for i in 0..7 {
        g[i][i] = -2;
        g[i][7] = -1;
        g[7][i] = -1;
    }
    g[7][7] = -4;
    let mut l = labels("r", 7);
    l.push("n".into());
    lat(&g, l).expect("N")
}

fn odd_d(d: i64, name: &str) -> Result<()> {
    if d < 1 || d % 2 == 0 {
        return Err(Error::InvalidParameter(format!("{name} needs d odd and positive, got d = {d}")));
    }
    Ok(())
}

/// The displayed matrix `[[-(d+1)/2, 1], [1, -2]]`; even only for `d = 3 mod 4`.
pub fn k_gram(d: i64) -> Result<IntMatrix> {
    odd_d(d, "K_d")?;
    Ok(IntMatrix::from_i64(&[[-(d + 1) / 2, 1], [1, -2]]))
}

/// The displayed matrix `[[(d-1)/2, 1], [1, -2]]`; even only for `d = 1 mod 4`.
pub fn h_gram(d: i64) -> Result<IntMatrix> {
    odd_d(d, "H_d")?;
    Ok(IntMatrix::from_i64(&[[(d - 1) / 2, 1], [1, -2]]))
}

pub fn k_d(d: i64) -> Result<Lattice> {
    let g = k_gram(d)?;
    if d % 4 != 3 {
        return Err(Error::InvalidParameter(format!("K_d is even only for d = 3 mod 4, got d = {d}")));
    }
    Lattice::new(g, vec!["k1".into(), "k2".into()])
}

pub fn h_d(d: i64) -> Result<Lattice> {
    let g = h_gram(d)?;
    if d % 4 != 1 {
        return Err(Error::InvalidParameter(format!("H_d is even only for d = 1 mod 4, got d = {d}")));
    }
    Lattice::new(g, vec!["k1".into(), "k2".into()])
}

fn positive(d: i64, name: &str) -> Result<()> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("{name} needs d >= 1, got d = {d}")));
    }
    Ok(())
}

/// `<2d> + E8(-2)` in the basis `h, b1..b8`.
pub fn lambda(d: i64) -> Result<Lattice> {
    positive(d, "Lambda_2d")?;
    let h = Lattice::new(IntMatrix::from_i64(&[[2 * d]]), vec!["h".into()])?;
    Ok(h.direct_sum(&e8m2()))
}

/// Glue vector of the index two overlattice of `Lambda_2d`, in the basis `h, b1..b8`.
pub fn lambda_tilde_glue(d: i64) -> Result<Vec<BigRational>> {
    positive(d, "LambdaTilde_2d")?;
    let half = BigRational::new(1.into(), 2.into());
    let zero = BigRational::from_integer(0.into());
    let mut g = vec![zero; 9];
    g[0] = half.clone();
    g[1] = half.clone();
    match d % 4 {
        2 => {}
        0 => g[3] = half,
        _ => return Err(Error::InvalidParameter(format!("LambdaTilde_2d needs d even, got d = {d}"))),
    }
    Ok(g)
}

/// The overlattice of `Lambda_2d` in the basis `g, b1..b8` where `g` is the glue class.
pub fn lambda_tilde(d: i64) -> Result<Lattice> {
    let glue = lambda_tilde_glue(d)?;
    let ambient = lambda(d)?;
    let mut rows = vec![glue];
    for i in 1..9 {
        rows.push(unit_rat(9, i));
    }
    let name = if d % 4 == 2 { "(h+b1)/2" } else { "(h+b1+b3)/2" };
    let mut l = vec![name.to_string()];
    l.extend(labels("b", 8));
    from_rational_basis(&ambient, &RatMatrix::from_rows(rows, 9)?, l)
}

fn unit_rat(n: usize, i: usize) -> Vec<BigRational> {
    (0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))).collect()
}

/// `U^3 + E8(-1)^2` in the basis `u1,u2,w1,w2,v1,v2,e1..e8,f1..f8`.
pub fn lk3() -> Lattice {
    let l = u().direct_sum(&u()).direct_sum(&u()).direct_sum(&e8m1()).direct_sum(&e8m1());
    let mut names: Vec<String> = ["u1", "u2", "w1", "w2", "v1", "v2"].iter().map(|s| s.to_string()).collect();
    names.extend(labels("e", 8));
    names.extend(labels("f", 8));
    l.with_labels(names).expect("labels")
}

/// `L_K3 + <-2>`, the last basis vector being `delta`.
pub fn l() -> Lattice {
    let delta = Lattice::new(IntMatrix::from_i64(&[[-2]]), vec!["delta".into()]).expect("<-2>");
    lk3().direct_sum(&delta)
}

pub const H2Y_RANK: usize = 16;

/// `U(2)^3 + E8(-1) + <-2>^2` with last basis vectors `(Delta+Sigma)/2` and `(Delta-Sigma)/2`.
pub fn h2y() -> Lattice {
    let u2 = u_scaled(2).expect("U(2)");
    let m2 = Lattice::from_i64(&[[-2, 0], [0, -2]]).expect("<-2>^2");
    let mut names: Vec<String> = ["u1", "u2", "w1", "w2", "v1", "v2"].iter().map(|s| s.to_string()).collect();
    names.extend(labels("e", 8));
    names.push("(Δ+Σ)/2".into());
    names.push("(Δ−Σ)/2".into());
    u2.direct_sum(&u2).direct_sum(&u2).direct_sum(&e8m1()).direct_sum(&m2).with_labels(names).expect("labels")
}

/// `(Sigma, Delta)` in the basis of [`h2y`].
pub fn sigma_delta_classes() -> (Vec<BigInt>, Vec<BigInt>) {
    let mut sigma = vec![BigInt::from(0); H2Y_RANK];
    let mut delta = sigma.clone();
    sigma[14] = 1.into();
    sigma[15] = (-1).into();
    delta[14] = 1.into();
    delta[15] = 1.into();
    (sigma, delta)
}

/// `<2d> + <-2>^7` in the basis `t, n1..n7`.
pub fn s_ns(d: i64) -> Result<Lattice> {
    positive(d, "NS(S_d)")?;
    let mut diag = [-2i64; 8];
    diag[0] = 2 * d;
    let g = IntMatrix::diagonal(&diag.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
    let mut names = vec!["t".to_string()];
    names.extend(labels("n", 7));
    Lattice::new(g, names)
}

/// Overlattice of [`s_ns`] by `(t + n1 + ... + n7)/2`, in the basis `(t+Σn)/2, n1..n7`.
pub fn z_ns(d: i64) -> Result<Lattice> {
    if d < 1 || d % 4 != 3 {
        return Err(Error::InvalidParameter(format!("NS(Z_d) needs d = 3 mod 4, got d = {d}")));
    }
    let ambient = s_ns(d)?;
    let mut rows = vec![vec![BigRational::new(1.into(), 2.into()); 8]];
    for i in 1..8 {
        rows.push(unit_rat(8, i));
    }
    let mut names = vec!["(t+Σn)/2".to_string()];
    names.extend(labels("n", 7));
    from_rational_basis(&ambient, &RatMatrix::from_rows(rows, 8)?, names)
}

/// Gram on `h1, h2, l1..l6` before gluing.
pub fn fano_ns_ambient() -> Lattice {
    let mut g = vec![vec![0i64; 8]; 8];
    g[0][1] = 3;
    g[1][0] = 3;
    g[1][1] = 6;
    for i in 2..8 {
        g[0][i] = 1;
        g[i][0] = 1;
        g[1][i] = 2;
        g[i][1] = 2;
        g[i][i] = -2;
    }
    let mut names = vec!["h1".to_string(), "h2".to_string()];
    names.extend(labels("l", 6));
    lat(&g, names).expect("fano ambient")
}

/// Overlattice of [`fano_ns_ambient`] by `(h2 + l1 + ... + l6)/3`, basis `h1, g, l1..l6`.
pub fn fano_ns() -> Result<Lattice> {
    let third = BigRational::new(1.into(), 3.into());
    let zero = BigRational::from_integer(0.into());
    let mut g = vec![third; 8];
    g[0] = zero;
    let mut rows = vec![unit_rat(8, 0), g];
    for i in 2..8 {
        rows.push(unit_rat(8, i));
    }
    let mut names = vec!["h1".to_string(), "(h2+Σl)/3".to_string()];
    names.extend(labels("l", 6));
    from_rational_basis(&fano_ns_ambient(), &RatMatrix::from_rows(rows, 8)?, names)
}

/// Gram matrix as displayed, without the evenness check.
pub fn displayed_gram(name: &NamedLattice) -> Result<IntMatrix> {
    match name {
        NamedLattice::K(d) => k_gram(*d),
        NamedLattice::H(d) => h_gram(*d),
        NamedLattice::Scaled(base, f) => Ok(displayed_gram(base)?.scaled(&BigInt::from(*f))),
        other => Ok(make(other)?.gram().clone()),
    }
}

pub fn make(name: &NamedLattice) -> Result<Lattice> {
    use NamedLattice::*;
    match name {
        U => Ok(u()),
        UScaled(n) => u_scaled(*n),
        Rank1(n) => rank1(*n),
        E8m1 => Ok(e8m1()),
        E8m2 => Ok(e8m2()),
        E7m1 => Ok(e7m1()),
        D4m1 => Ok(d4m1()),
        D8m1 => Ok(d8m1()),
        A2m1 => Ok(a2m1()),
        Nikulin => Ok(nikulin()),
        K(d) => k_d(*d),
        H(d) => h_d(*d),
        Lambda(d) => lambda(*d),
        LambdaTilde(d) => lambda_tilde(*d),
        LK3 => Ok(lk3()),
        L => Ok(l()),
        H2Y => Ok(h2y()),
        SNs(d) => s_ns(*d),
        ZNs(d) => z_ns(*d),
        FanoNs => fano_ns(),
        Scaled(base, f) => {
            if *f == 0 {
                return Err(Error::InvalidParameter("scaling factor 0".into()));
            }
            let g = displayed_gram(base)?.scaled(&BigInt::from(*f));
            let labels = match make(base) {
                Ok(b) => b.labels().to_vec(),
                Err(_) => (1..=g.nrows()).map(|i| format!("k{i}")).collect(),
            };
            Lattice::new(g, labels).map_err(|e| match e {
                Error::NotEven { .. } => Error::OddRescale,
                e => e,
            })
        }
    }
}

/// Direct sum of named pieces.
pub fn make_sum(parts: &[NamedLattice]) -> Result<Lattice> {
    let mut acc = Lattice::empty();
    for p in parts {
        acc = acc.direct_sum(&make(p)?);
    }
    Ok(acc)
}

/// `n` copies of a named lattice.
pub fn repeat(name: NamedLattice, n: usize) -> Vec<NamedLattice> {
    vec![name; n]
}

impl NamedLattice {
    pub fn scaled(self, f: i64) -> NamedLattice {
        NamedLattice::Scaled(Box::new(self), f)
    }
}

impl fmt::Display for NamedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedLattice::*;
        match self {
            U => write!(f, "U"),
            UScaled(n) => write!(f, "U({n})"),
            Rank1(n) => write!(f, "<{n}>"),
            E8m1 => write!(f, "E8(-1)"),
            E8m2 => write!(f, "E8(-2)"),
            E7m1 => write!(f, "E7(-1)"),
            D4m1 => write!(f, "D4(-1)"),
            D8m1 => write!(f, "D8(-1)"),
            A2m1 => write!(f, "A2(-1)"),
            Nikulin => write!(f, "N"),
            K(d) => write!(f, "K_{d}"),
            H(d) => write!(f, "H_{d}"),
            Lambda(d) => write!(f, "Lambda_{}", 2 * d),
            LambdaTilde(d) => write!(f, "LambdaTilde_{}", 2 * d),
            LK3 => write!(f, "L_K3"),
            L => write!(f, "L"),
            H2Y => write!(f, "H2Y"),
            SNs(d) => write!(f, "NS_S_{d}"),
            ZNs(d) => write!(f, "NS_Z_{d}"),
            FanoNs => write!(f, "NS_Fano"),
            Scaled(b, n) => write!(f, "{b}({n})"),
        }
    }
}

fn parse_param(s: &str, what: &str) -> Result<i64> {
    s.parse().map_err(|_| Error::Parse(format!("bad parameter '{s}' in {what}")))
}

/// Accepts the `Display` forms plus ASCII aliases such as `E8m2`, `LK3`, `K3`, `Lambda4`.
impl FromStr for NamedLattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use NamedLattice::*;
        let s = s.trim();
        let fixed = match s {
            "U" => Some(U),
            "E8(-1)" | "E8m1" => Some(E8m1),
            "E8(-2)" | "E8m2" => Some(E8m2),
            "E7(-1)" | "E7m1" => Some(E7m1),
            "D4(-1)" | "D4m1" => Some(D4m1),
            "D8(-1)" | "D8m1" => Some(D8m1),
            "A2(-1)" | "A2m1" => Some(A2m1),
            "N" | "Nikulin" => Some(Nikulin),
            "L_K3" | "LK3" => Some(LK3),
            "L" => Some(L),
            "H2Y" => Some(H2Y),
            "NS_Fano" => Some(FanoNs),
            _ => None,
        };
        if let Some(x) = fixed {
            return Ok(x);
        }
        if let Some(inner) = s.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
            return Ok(Rank1(parse_param(inner, s)?));
        }
        let even_half = |v: i64| -> Result<i64> {
            if v % 2 != 0 {
                return Err(Error::Parse(format!("{s}: index must be even")));
            }
            Ok(v / 2)
        };
        let prefixed: [(&str, fn(i64) -> NamedLattice, bool); 9] = [
            ("LambdaTilde_", LambdaTilde, true),
            ("LambdaTilde", LambdaTilde, true),
            ("Lambda_", Lambda, true),
            ("Lambda", Lambda, true),
            ("NS_S_", SNs, false),
            ("NS_Z_", ZNs, false),
            ("K_", K, false),
            ("H_", H, false),
            ("U", UScaled, false),
        ];
        if let Some(open) = s.rfind('(') {
            if s.ends_with(')') {
                let base = &s[..open];
                let arg = &s[open + 1..s.len() - 1];
                if base == "U" {
                    return Ok(UScaled(parse_param(arg, s)?));
                }
                if let Ok(b) = base.parse::<NamedLattice>() {
                    return Ok(b.scaled(parse_param(arg, s)?));
                }
            }
        }
        for (p, ctor, halve) in prefixed {
            if let Some(rest) = s.strip_prefix(p) {
                if p == "U" {
                    continue;
                }
                if let Ok(v) = rest.parse::<i64>() {
                    return Ok(ctor(if halve { even_half(v)? } else { v }));
                }
            }
        }
        if let Some(rest) = s.strip_prefix('K').or_else(|| s.strip_prefix('H')) {
            if let Ok(v) = rest.parse::<i64>() {
                return Ok(if s.starts_with('K') { K(v) } else { H(v) });
            }
        }
        Err(Error::Parse(format!("unknown lattice name '{s}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discform::{discriminant_form, fqf_isomorphic, FiniteQuadraticForm};
    use crate::linalg::{smith_normal_form, Signature};
    use num_traits::Signed;

    #[test]
    fn small_constructors() {
        assert_eq!(make(&NamedLattice::K(3)).unwrap().gram(), &IntMatrix::from_i64(&[[-2, 1], [1, -2]]));
        assert_eq!(displayed_gram(&NamedLattice::H(3)).unwrap(), IntMatrix::from_i64(&[[1, 1], [1, -2]]));
        assert!(make(&NamedLattice::H(3)).is_err());
        assert!(make(&NamedLattice::LambdaTilde(3)).is_err());
        assert!(make(&NamedLattice::ZNs(5)).is_err());
        assert_eq!(
            make(&NamedLattice::K(3).scaled(2)).unwrap().gram(),
            &IntMatrix::from_i64(&[[-4, 2], [2, -4]])
        );
    }

    #[test]
    fn root_lattice_determinants() {
        assert_eq!(e8m1().det(), BigInt::from(1));
        assert_eq!(e7m1().det(), BigInt::from(-2));
        assert_eq!(d4m1().det(), BigInt::from(4));
        assert_eq!(d8m1().det(), BigInt::from(4));
        assert_eq!(e8m2().det(), BigInt::from(256));
        assert_eq!(nikulin().det(), BigInt::from(64));
        assert_eq!(e8m1().signature(), Signature::new(0, 0, 8));
    }

    #[test]
    fn big_lattices() {
        assert!(lk3().is_unimodular());
        let y = h2y();
        assert_eq!(y.rank(), 16);
        assert_eq!(y.signature(), Signature::new(3, 0, 13));
        assert_eq!(y.det(), BigInt::from(-256));
        let (s, d) = sigma_delta_classes();
        assert_eq!(y.norm(&s), BigInt::from(-4));
        assert_eq!(y.norm(&d), BigInt::from(-4));
        assert_eq!(y.pair(&s, &d), BigInt::from(0));
        assert_eq!(y.divisibility(&s).unwrap(), BigInt::from(2));
    }

    #[test]
    fn discriminant_forms() {
        let u2 = FiniteQuadraticForm::u2();
        assert!(fqf_isomorphic(&discriminant_form(&e8m2()).unwrap(), &u2.power(4)).unwrap());
        assert!(fqf_isomorphic(&discriminant_form(&nikulin()).unwrap(), &u2.power(3)).unwrap());
        for d in [2, 4, 6] {
            let t = discriminant_form(&lambda_tilde(d).unwrap()).unwrap();
            let want = FiniteQuadraticForm::cyclic(2 * d, BigRational::new(1.into(), (2 * d).into()))
                .unwrap()
                .direct_sum(&u2.power(3));
            assert!(fqf_isomorphic(&t, &want).unwrap(), "d = {d}");
        }
        let z = z_ns(3).unwrap();
        assert_eq!(z.det().abs() * 4, s_ns(3).unwrap().det().abs());
        let f = fano_ns().unwrap();
        let inv = smith_normal_form(f.gram()).invariant_factors();
        let nontrivial: Vec<_> = inv.into_iter().filter(|x| *x != BigInt::from(1)).collect();
        assert_eq!(nontrivial, [2, 2, 2, 2, 2, 6].map(BigInt::from).to_vec());
    }

    #[test]
    fn parse_names() {
        for (s, want) in [
            ("E8m2", NamedLattice::E8m2),
            ("N", NamedLattice::Nikulin),
            ("U(2)", NamedLattice::UScaled(2)),
            ("<-2>", NamedLattice::Rank1(-2)),
            ("K_3", NamedLattice::K(3)),
            ("K_1(2)", NamedLattice::K(1).scaled(2)),
            ("Lambda_4", NamedLattice::Lambda(2)),
            ("LambdaTilde_8", NamedLattice::LambdaTilde(4)),
            ("E8(-1)(2)", NamedLattice::E8m1.scaled(2)),
        ] {
            assert_eq!(s.parse::<NamedLattice>().unwrap(), want, "{s}");
            assert_eq!(want.to_string().parse::<NamedLattice>().unwrap(), want);
        }
    }
}
