//! Finite quadratic forms `q: A -> Q/2Z` on finite abelian groups, mainly
//! discriminant forms `L*/L` of even lattices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hasse::prime_factors;
use crate::lattice::Lattice;
use crate::linalg::{smith_normal_form, IntMatrix};

/// Largest group order the isomorphism search will enumerate.
pub const MAX_GROUP_ORDER: u64 = 1 << 20;

/// A finite quadratic form stored on cyclic generators `g_i` of orders `n_i`,
/// with `A = ⊕ <g_i>`, `q(g_i)` in `[0, 2)` and `b(g_i, g_j)` in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteQuadraticForm {
    orders: Vec<BigInt>,
    q: Vec<BigRational>,
    b: Vec<Vec<BigRational>>,
}

fn mod2(x: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    x - (x / &two).floor() * two
}

fn mod1(x: &BigRational) -> BigRational {
    x - x.floor()
}

impl FiniteQuadraticForm {
    /// Validates the generator data: `n_i b(g_i, -) = 0`, `n_i^2 q(g_i) = 0`,
    /// `q(g_i) = b(g_i, g_i)` mod 1 and symmetry of `b`. Generators of order 1 are dropped.
    pub fn new(orders: Vec<BigInt>, q: Vec<BigRational>, b: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = orders.len();
        if q.len() != r || b.len() != r || b.iter().any(|row| row.len() != r) {
            return Err(Error::Dimension("generator data of inconsistent length".into()));
        }
        if orders.iter().any(|n| !n.is_positive()) {
            return Err(Error::Inadmissible("generator orders must be positive".into()));
        }
        for i in 0..r {
            let n = BigRational::from_integer(orders[i].clone());
            if !(&n * &n * &q[i] / BigRational::from_integer(BigInt::from(2))).is_integer() {
                return Err(Error::Inadmissible(format!("n^2 q(g{i}) is not in 2Z")));
            }
            if !(&q[i] - &b[i][i]).is_integer() {
                return Err(Error::Inadmissible(format!("q(g{i}) differs from b(g{i},g{i}) mod 1")));
            }
            for j in 0..r {
                if !(&n * &b[i][j]).is_integer() {
                    return Err(Error::Inadmissible(format!("n_{i} b(g{i},g{j}) is not integral")));
                }
                if !(&b[i][j] - &b[j][i]).is_integer() {
                    return Err(Error::Inadmissible("b is not symmetric".into()));
                }
            }
        }
        let keep: Vec<usize> = (0..r).filter(|&i| !orders[i].is_one()).collect();
        Ok(FiniteQuadraticForm {
            orders: keep.iter().map(|&i| orders[i].clone()).collect(),
            q: keep.iter().map(|&i| mod2(&q[i])).collect(),
            b: keep.iter().map(|&i| keep.iter().map(|&j| mod1(&b[i][j])).collect()).collect(),
        })
    }

    pub fn trivial() -> Self {
        FiniteQuadraticForm { orders: vec![], q: vec![], b: vec![] }
    }

    /// Cyclic form `Z_m(alpha)`.
    pub fn cyclic(m: i64, alpha: BigRational) -> Result<Self> {
        if m < 1 {
            return Err(Error::Inadmissible(format!("cyclic order {m}")));
        }
        let b = mod1(&alpha);
        Self::new(vec![BigInt::from(m)], vec![alpha], vec![vec![b]])
    }

    /// Discriminant form of `U(n)`.
    pub fn u(n: i64) -> Result<Self> {
        let z = BigRational::zero();
        let h = BigRational::new(BigInt::one(), BigInt::from(n));
        Self::new(vec![BigInt::from(n); 2], vec![z.clone(), z.clone()], vec![vec![z.clone(), h.clone()], vec![h, z]])
    }

    pub fn u2() -> Self {
        Self::u(2).expect("u(2) is admissible")
    }

    /// The anisotropic form on `(Z/2)^2` with all nonzero values 1.
    pub fn v2() -> Self {
        let one = BigRational::one();
        let h = BigRational::new(BigInt::one(), BigInt::from(2));
        Self::new(
            vec![BigInt::from(2); 2],
            vec![one.clone(), one],
            vec![vec![BigRational::zero(), h.clone()], vec![h, BigRational::zero()]],
        )
        .expect("v(2) is admissible")
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn generator_values(&self) -> &[BigRational] {
        &self.q
    }

    pub fn generator_pairing(&self, i: usize, j: usize) -> &BigRational {
        &self.b[i][j]
    }

    pub fn num_generators(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> BigInt {
        self.orders.iter().product()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let d = IntMatrix::diagonal(&self.orders);
        smith_normal_form(&d).invariant_factors().into_iter().filter(|x| !x.is_one()).collect()
    }

    /// Prime-power orders of the cyclic factors in a primary decomposition, sorted.
    pub fn elementary_divisors(&self) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for n in &self.orders {
            for p in prime_factors(n)? {
                let mut pk = BigInt::one();
                let mut m = n.clone();
                while (&m % &p).is_zero() {
                    m /= &p;
                    pk *= &p;
                }
                out.push(pk);
            }
        }
        out.sort();
        Ok(out)
    }

    /// `q(sum x_i g_i)` in `[0, 2)`.
    pub fn value(&self, x: &[BigInt]) -> BigRational {
        let mut s = BigRational::zero();
        for i in 0..x.len() {
            let xi = BigRational::from_integer(x[i].clone());
            s += &xi * &xi * &self.q[i];
            for j in i + 1..x.len() {
                s += BigRational::from_integer(BigInt::from(2) * &x[i] * &x[j]) * &self.b[i][j];
            }
        }
        mod2(&s)
    }

    /// `b(x, y)` in `[0, 1)`.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let mut s = BigRational::zero();
        for i in 0..x.len() {
            for j in 0..y.len() {
                s += BigRational::from_integer(&x[i] * &y[j]) * &self.b[i][j];
            }
        }
        mod1(&s)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let r = self.orders.len();
        let s = other.orders.len();
        let mut b = vec![vec![BigRational::zero(); r + s]; r + s];
        for i in 0..r {
            for j in 0..r {
                b[i][j] = self.b[i][j].clone();
            }
        }
        for i in 0..s {
            for j in 0..s {
                b[r + i][r + j] = other.b[i][j].clone();
            }
        }
        let mut orders = self.orders.clone();
        orders.extend(other.orders.iter().cloned());
        let mut q = self.q.clone();
        q.extend(other.q.iter().cloned());
        FiniteQuadraticForm { orders, q, b }
    }

    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::trivial(), |acc, _| acc.direct_sum(self))
    }

    /// The form `-q`.
    pub fn negate(&self) -> Self {
        FiniteQuadraticForm {
            orders: self.orders.clone(),
            q: self.q.iter().map(|x| mod2(&-x)).collect(),
            b: self.b.iter().map(|row| row.iter().map(|x| mod1(&-x)).collect()).collect(),
        }
    }

    /// Value counts `{q(x) : x in A}`.
    pub fn histogram(&self) -> Result<BTreeMap<BigRational, u64>> {
        let s = Scaled::new(self)?;
        let mut h: BTreeMap<i64, u64> = BTreeMap::new();
        for x in s.elements() {
            *h.entry(s.value(&x)).or_default() += 1;
        }
        let e = BigInt::from(s.e);
        Ok(h.into_iter().map(|(k, v)| (BigRational::new(BigInt::from(k), e.clone()), v)).collect())
    }

    /// True when `b` has no nonzero radical.
    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(Scaled::new(self)?.is_nondegenerate())
    }

    /// The `p`-primary part, on generators `(n_i / p^a) g_i`.
    pub fn primary_part(&self, p: &BigInt) -> Self {
        let mut orders = Vec::new();
        let mut mult = Vec::new();
        let mut idx = Vec::new();
        for (i, n) in self.orders.iter().enumerate() {
            let mut pk = BigInt::one();
            let mut m = n.clone();
            while (&m % p).is_zero() {
                m /= p;
                pk *= p;
            }
            if !pk.is_one() {
                orders.push(pk);
                mult.push(BigRational::from_integer(m));
                idx.push(i);
            }
        }
        let q = idx.iter().zip(&mult).map(|(&i, m)| mod2(&(m * m * &self.q[i]))).collect();
        let b = idx
            .iter()
            .zip(&mult)
            .map(|(&i, mi)| idx.iter().zip(&mult).map(|(&j, mj)| mod1(&(mi * mj * &self.b[i][j]))).collect())
            .collect();
        FiniteQuadraticForm { orders, q, b }
    }

    /// Name built from an orthogonal decomposition, e.g. `(1/4)+u(2)^3`;
    /// falls back to the generator data for groups too large to enumerate.
    pub fn describe(&self) -> String {
        if self.orders.is_empty() {
            return "0".into();
        }
        match self.decompose() {
            Ok(pieces) => {
                let names: Vec<String> = pieces.iter().map(|p| p.to_string()).collect();
                let mut out: Vec<String> = Vec::new();
                let mut i = 0;
                while i < names.len() {
                    let mut j = i;
                    while j < names.len() && names[j] == names[i] {
                        j += 1;
                    }
                    out.push(power_name(&names[i], j - i));
                    i = j;
                }
                out.join("+")
            }
            Err(_) => self.to_string(),
        }
    }

    /// Splits the form into an orthogonal sum of cyclic pieces and rank-2 blocks.
    ///
    /// At each step the largest order `n` present is treated: a hyperbolic pair
    /// `u(n)` is split off if possible, then a cyclic summand (smallest value
    /// first), then `v(n)` or another rank-2 block.
    pub fn decompose(&self) -> Result<Vec<Piece>> {
        let s = Scaled::new(self)?;
        let mut current: Vec<Vec<i64>> = s.elements().collect();
        let mut out = Vec::new();
        let e = s.e;
        let frac = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
        while current.len() > 1 {
            let n = current.iter().map(|x| s.element_order(x)).max().unwrap_or(1);
            let top: Vec<&Vec<i64>> = current.iter().filter(|x| s.element_order(x) == n).collect();
            let unit = e / n;
            let mut found: Option<(Vec<Vec<i64>>, Piece)> = None;
            let info: Vec<(i64, Vec<i64>)> = top.iter().map(|x| (s.value(x), s.pairing_row(x))).collect();
            let dot = |row: &[i64], y: &[i64]| -> i64 {
                row.iter().zip(y).fold(0i128, |acc, (&r, &c)| (acc + r as i128 * c as i128) % e as i128).rem_euclid(e as i128) as i64
            };
            let pair_with = |allowed: Option<i64>| -> Option<Vec<Vec<i64>>> {
                let idx: Vec<usize> = (0..top.len()).filter(|&i| allowed.is_none_or(|v| info[i].0 == v)).collect();
                for (a, &i) in idx.iter().enumerate() {
                    for &j in &idx[a + 1..] {
                        if dot(&info[i].1, top[j]) != unit.rem_euclid(e) {
                            continue;
                        }
                        let gens = vec![top[i].clone(), top[j].clone()];
                        if s.splits(&current, &gens) {
                            return Some(gens);
                        }
                    }
                }
                None
            };
            if let Some(g) = pair_with(Some(0)) {
                found = Some((g, Piece::U(n)));
            }
            if found.is_none() {
                let mut cands: Vec<usize> = (0..top.len()).filter(|&i| e / dot(&info[i].1, top[i]).gcd(&e) == n).collect();
                cands.sort_by_key(|&i| info[i].0);
                if let Some(x) = cands.into_iter().map(|i| top[i]).find(|x| s.splits(&current, &[(*x).clone()])) {
                    found = Some((vec![(*x).clone()], Piece::Cyclic { n, q: frac(s.value(x), e) }));
                }
            }
            if found.is_none() {
                let v = 2 * e / n;
                if let Some(g) = pair_with(Some(v)) {
                    found = Some((g, Piece::V(n)));
                }
            }
            if found.is_none() {
                if let Some(g) = pair_with(None) {
                    let piece = Piece::Block { n, q: [frac(s.value(&g[0]), e), frac(s.value(&g[1]), e)] };
                    found = Some((g, piece));
                }
            }
            let (gens, piece) = found.ok_or_else(|| Error::Inadmissible("form does not split into small pieces".into()))?;
            current.retain(|z| gens.iter().all(|g| s.pair(z, g) == 0));
            out.push(piece);
        }
        Ok(out)
    }
}

/// Orthogonal summands produced by [`FiniteQuadraticForm::decompose`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Piece {
    /// `Z_n(q)`.
    Cyclic { n: i64, q: BigRational },
    /// Hyperbolic `u(n)` on `(Z/n)^2`.
    U(i64),
    /// `v(n)`: both generators of value `2/n`, pairing `1/n`.
    V(i64),
    /// Rank-2 block with pairing `1/n` and the given generator values.
    Block { n: i64, q: [BigRational; 2] },
}

fn symmetric(q: &BigRational) -> BigRational {
    if *q > BigRational::one() {
        q - BigRational::from_integer(BigInt::from(2))
    } else {
        q.clone()
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Cyclic { q, .. } => write!(f, "({})", symmetric(q)),
            Piece::U(n) => write!(f, "u({n})"),
            Piece::V(n) => write!(f, "v({n})"),
            Piece::Block { n, q } => write!(f, "[{},{};1/{n}]", symmetric(&q[0]), symmetric(&q[1])),
        }
    }
}

fn power_name(base: &str, k: usize) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{k}")
    }
}

impl fmt::Display for FiniteQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.orders.iter().zip(&self.q).map(|(n, q)| format!("Z{n}({q})")).collect();
        write!(f, "{}", parts.join(" + "))?;
        let off: Vec<String> = (0..self.orders.len())
            .flat_map(|i| (i + 1..self.orders.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.b[i][j].is_zero())
            .map(|(i, j)| format!("b{}{}={}", i + 1, j + 1, self.b[i][j]))
            .collect();
        if !off.is_empty() {
            write!(f, " [{}]", off.join(", "))?;
        }
        Ok(())
    }
}

/// The standard named forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedForm {
    U2,
    V2,
    Cyclic { m: i64, alpha: BigRational },
}

pub fn named_form(name: &NamedForm) -> Result<FiniteQuadraticForm> {
    match name {
        NamedForm::U2 => Ok(FiniteQuadraticForm::u2()),
        NamedForm::V2 => Ok(FiniteQuadraticForm::v2()),
        NamedForm::Cyclic { m, alpha } => FiniteQuadraticForm::cyclic(*m, alpha.clone()),
    }
}

/// Discriminant form `A*/A` read off the Smith form of the Gram matrix.
pub fn discriminant_form(a: &Lattice) -> Result<FiniteQuadraticForm> {
    let g = a.gram();
    let s = smith_normal_form(g);
    let d = s.diagonal();
    if d.iter().any(Zero::is_zero) {
        return Err(Error::Degenerate);
    }
    let idx: Vec<usize> = (0..d.len()).filter(|&i| !d[i].is_one()).collect();
    let cols: Vec<Vec<BigInt>> = idx.iter().map(|&i| s.v.column(i)).collect();
    let gv: Vec<Vec<BigInt>> = cols.iter().map(|c| g.left_mul_vec(c).expect("square")).collect();
    let dot = |x: &[BigInt], y: &[BigInt]| -> BigInt { x.iter().zip(y).map(|(a, b)| a * b).sum() };
    let mut q = Vec::new();
    let mut b = Vec::new();
    for (a_, &i) in idx.iter().enumerate() {
        let di = &d[i];
        q.push(BigRational::new(dot(&gv[a_], &cols[a_]), di * di));
        b.push(
            idx.iter()
                .enumerate()
                .map(|(b_, &j)| BigRational::new(dot(&gv[a_], &cols[b_]), di * &d[j]))
                .collect::<Vec<_>>(),
        );
    }
    FiniteQuadraticForm::new(idx.iter().map(|&i| d[i].clone()).collect(), q, b)
}

/// Integer view of a form with exponent `e`: `q` numerators mod `2e`, `b` numerators mod `e`.
struct Scaled {
    e: i64,
    orders: Vec<i64>,
    q: Vec<i64>,
    b: Vec<Vec<i64>>,
}

impl Scaled {
    fn new(f: &FiniteQuadraticForm) -> Result<Self> {
        let total = f.order();
        if total > BigInt::from(MAX_GROUP_ORDER) {
            return Err(Error::GroupTooLarge(total.to_u128().unwrap_or(u128::MAX)));
        }
        let e = f.orders.iter().fold(BigInt::one(), |acc, n| acc.lcm(n));
        let er = BigRational::from_integer(e.clone());
        let num = |x: &BigRational| -> i64 { (x * &er).to_integer().to_i64().expect("bounded by group order") };
        Ok(Scaled {
            e: e.to_i64().expect("bounded by group order"),
            orders: f.orders.iter().map(|n| n.to_i64().expect("bounded")).collect(),
            q: f.q.iter().map(num).collect(),
            b: f.b.iter().map(|row| row.iter().map(num).collect()).collect(),
        })
    }

    fn elements(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let total: i64 = self.orders.iter().product();
        (0..total).map(move |mut t| {
            self.orders
                .iter()
                .map(|&n| {
                    let c = t % n;
                    t /= n;
                    c
                })
                .collect()
        })
    }

    fn value(&self, x: &[i64]) -> i64 {
        let m = 2 * self.e as i128;
        let mut s: i128 = 0;
        for i in 0..x.len() {
            let xi = x[i] as i128;
            s = (s + xi * xi % m * self.q[i] as i128) % m;
            for j in i + 1..x.len() {
                s = (s + 2 * (xi * x[j] as i128 % m) * self.b[i][j] as i128) % m;
            }
        }
        s.rem_euclid(m) as i64
    }

    /// `B x` reduced mod `e`: the row of pairings of `x` against the generators.
    fn pairing_row(&self, x: &[i64]) -> Vec<i64> {
        let e = self.e as i128;
        (0..self.orders.len())
            .map(|j| {
                let mut s: i128 = 0;
                for i in 0..x.len() {
                    s = (s + x[i] as i128 * self.b[i][j] as i128) % e;
                }
                s.rem_euclid(e) as i64
            })
            .collect()
    }

    /// Numerator of `b(x, y)` mod `e`.
    fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let e = self.e as i128;
        let row = self.pairing_row(x);
        let mut s: i128 = 0;
        for (r, &c) in row.iter().zip(y) {
            s = (s + *r as i128 * c as i128) % e;
        }
        s.rem_euclid(e) as i64
    }

    /// Whether `<gens>` is an orthogonal summand of the subgroup `current`.
    fn splits(&self, current: &[Vec<i64>], gens: &[Vec<i64>]) -> bool {
        let h = self.generated_set(gens);
        let perp: Vec<&Vec<i64>> = current.iter().filter(|z| gens.iter().all(|g| self.pair(z, g) == 0)).collect();
        h.len() * perp.len() == current.len() && perp.iter().filter(|z| h.contains(**z)).count() == 1
    }

    fn generated_set(&self, gens: &[Vec<i64>]) -> std::collections::HashSet<Vec<i64>> {
        let mut seen = std::collections::HashSet::new();
        let zero = vec![0; self.orders.len()];
        seen.insert(zero.clone());
        let mut stack = vec![zero];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y: Vec<i64> = x.iter().zip(g).zip(&self.orders).map(|((a, b), n)| (a + b) % n).collect();
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    fn element_order(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.orders).fold(1i64, |acc, (&c, &n)| acc.lcm(&(n / c.gcd(&n))))
    }

    fn is_nondegenerate(&self) -> bool {
        self.elements().skip(1).all(|x| self.pairing_row(&x).iter().any(|&v| v != 0))
    }

    /// Order of the subgroup generated by the given elements.
    fn generated_order(&self, gens: &[Vec<i64>]) -> usize {
        self.generated_set(gens).len()
    }
}

/// Isomorphism of finite quadratic forms: a group isomorphism preserving `q`.
pub fn fqf_isomorphic(a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.elementary_divisors()? != b.elementary_divisors()? {
        return Ok(false);
    }
    let total = a.order();
    if total > BigInt::from(MAX_GROUP_ORDER) {
        return Err(Error::GroupTooLarge(total.to_u128().unwrap_or(u128::MAX)));
    }
    for p in prime_factors(&total).unwrap_or_default() {
        if !primary_isomorphic(&a.primary_part(&p), &b.primary_part(&p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Backtracking over images of the source generators, largest order first,
/// with forward checking of the pairings against every unassigned generator.
fn primary_isomorphic(a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Result<bool> {
    let sa = Scaled::new(a)?;
    let sb = Scaled::new(b)?;
    if sa.e != sb.e {
        return Ok(false);
    }
    let mut hist_a: HashMap<(i64, i64), u64> = HashMap::new();
    for x in sa.elements() {
        *hist_a.entry((sa.element_order(&x), sa.value(&x))).or_default() += 1;
    }
    let targets: Vec<Vec<i64>> = sb.elements().collect();
    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, y) in targets.iter().enumerate() {
        buckets.entry((sb.element_order(y), sb.value(y))).or_default().push(i);
    }
    let hist_b: HashMap<(i64, i64), u64> = buckets.iter().map(|(k, v)| (*k, v.len() as u64)).collect();
    if hist_a != hist_b {
        return Ok(false);
    }
    let r = sa.orders.len();
    if r == 0 {
        return Ok(true);
    }
    let rows: Vec<Vec<i64>> = targets.iter().map(|y| sb.pairing_row(y)).collect();
    let candidates: Vec<Vec<usize>> = (0..r)
        .map(|i| buckets.get(&(sa.orders[i], sa.q[i])).cloned().unwrap_or_default())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(false);
    }
    let check_surjective = !sa.is_nondegenerate();
    let mut assigned: Vec<Option<usize>> = vec![None; r];
    let ctx = Search { sa: &sa, sb: &sb, targets: &targets, rows: &rows, check_surjective };
    Ok(ctx.search(&mut assigned, candidates))
}

struct Search<'a> {
    sa: &'a Scaled,
    sb: &'a Scaled,
    targets: &'a [Vec<i64>],
    rows: &'a [Vec<i64>],
    check_surjective: bool,
}

impl Search<'_> {
    fn search(&self, assigned: &mut Vec<Option<usize>>, lists: Vec<Vec<usize>>) -> bool {
        let open = (0..assigned.len()).filter(|&i| assigned[i].is_none()).min_by_key(|&i| {
            // fewest candidates first, larger generator order breaks ties
            (lists[i].len(), std::cmp::Reverse(self.sa.orders[i]))
        });
        let Some(level) = open else {
            if !self.check_surjective {
                return true;
            }
            let imgs: Vec<Vec<i64>> = assigned.iter().map(|c| self.targets[c.expect("complete")].clone()).collect();
            let n: i64 = self.sb.orders.iter().product();
            return self.sb.generated_order(&imgs) as i64 == n;
        };
        let e = self.sb.e as i128;
        for &c in &lists[level] {
            let y = &self.targets[c];
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(lists.len());
            let mut dead = false;
            for j in 0..lists.len() {
                if j == level || assigned[j].is_some() {
                    next.push(Vec::new());
                    continue;
                }
                let want = self.sa.b[j][level] as i128;
                let filtered: Vec<usize> = lists[j]
                    .iter()
                    .copied()
                    .filter(|&t| {
                        let row = &self.rows[t];
                        let s: i128 = row.iter().zip(y).map(|(&u, &v)| u as i128 * v as i128).sum();
                        s.rem_euclid(e) == want
                    })
                    .collect();
                if filtered.is_empty() {
                    dead = true;
                    break;
                }
                next.push(filtered);
            }
            if dead {
                continue;
            }
            assigned[level] = Some(c);
            if self.search(assigned, next) {
                return true;
            }
            assigned[level] = None;
        }
        false
    }
}

/// Same signature and isomorphic discriminant forms.
pub fn genus_equal(a: &Lattice, b: &Lattice) -> Result<bool> {
    if !a.is_nondegenerate() || !b.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    if a.rank() != b.rank() || a.signature() != b.signature() {
        return Ok(false);
    }
    fqf_isomorphic(&discriminant_form(a)?, &discriminant_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn small_histograms() {
        let h = FiniteQuadraticForm::u2().histogram().unwrap();
        assert_eq!(h.get(&rat(0, 1)), Some(&3));
        assert_eq!(h.get(&rat(1, 1)), Some(&1));
        let v = FiniteQuadraticForm::v2().histogram().unwrap();
        assert_eq!(v.get(&rat(1, 1)), Some(&3));
        let z = FiniteQuadraticForm::cyclic(2, rat(-1, 2)).unwrap().histogram().unwrap();
        assert_eq!(z.get(&rat(3, 2)), Some(&1));
    }

    #[test]
    fn u2_and_v2_differ() {
        assert!(!fqf_isomorphic(&FiniteQuadraticForm::u2(), &FiniteQuadraticForm::v2()).unwrap());
        assert!(fqf_isomorphic(&FiniteQuadraticForm::v2().power(2), &FiniteQuadraticForm::u2().power(2)).unwrap());
    }

    #[test]
    fn minus_two() {
        let l = Lattice::from_i64(&[[-2]]).unwrap();
        let f = discriminant_form(&l).unwrap();
        assert_eq!(f.generator_values(), &[rat(3, 2)]);
    }

    #[test]
    fn inadmissible_cyclic() {
        assert!(FiniteQuadraticForm::cyclic(2, rat(1, 4)).is_err());
    }
}

#[cfg(test)]
mod describe_tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn names() {
        let name = |l: &Lattice| discriminant_form(l).unwrap().describe();
        assert_eq!(name(&catalog::e8m2()), "u(2)^4");
        assert_eq!(name(&catalog::nikulin()), "u(2)^3");
        assert_eq!(name(&catalog::lambda_tilde(2).unwrap()), "(1/4)+u(2)^3");
        assert_eq!(name(&catalog::rank1(-2).unwrap()), "(-1/2)");
        assert_eq!(name(&catalog::u_scaled(2).unwrap()), "u(2)");
        assert_eq!(name(&catalog::d4m1()), "v(2)");
        assert_eq!(name(&catalog::lk3()), "0");
    }

    #[test]
    fn decomposition_is_isomorphic() {
        for l in [catalog::lambda(3).unwrap(), catalog::lambda_tilde(4).unwrap(), catalog::k_d(7).unwrap(), catalog::d8m1()] {
            let f = discriminant_form(&l).unwrap();
            let rebuilt = f.decompose().unwrap().iter().fold(FiniteQuadraticForm::trivial(), |acc, p| {
                let part = match p {
                    Piece::Cyclic { n, q } => FiniteQuadraticForm::cyclic(*n, q.clone()).unwrap(),
                    Piece::U(n) => FiniteQuadraticForm::u(*n).unwrap(),
                    Piece::V(2) => FiniteQuadraticForm::v2(),
                    other => panic!("unexpected piece {other:?}"),
                };
                acc.direct_sum(&part)
            });
            assert!(fqf_isomorphic(&f, &rebuilt).unwrap(), "{f}");
        }
    }
}
