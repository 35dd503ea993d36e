//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
//! Exits nonzero on any failure outside `KNOWN_FAILURES`, or when a known one
//! stops reproducing.
//!
//! Expected values are rebuilt here from the tables (Gram matrices, row
//! formulas, lists) rather than taken from the library's own target helpers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nikulin::catalog::{self, NamedLattice};
use nikulin::discform::{discriminant_form, fqf_isomorphic, genus_equal, FiniteQuadraticForm};
use nikulin::embeddings::{transcendental_of_x, EmbeddingVariant, Kind, L_RANK};
use nikulin::lattice::{binary_isometric, rational_equivalence, two_elementary_invariants, Lattice, Sublattice};
use nikulin::linalg::{smith_normal_form, IntMatrix};
use nikulin::mukai::{h_prime_orthogonal, model_report, Model};
use nikulin::quotient::{
    nikulin_surface_t, ns_witness_basis, orbifold_picard, pushforward, transcendental_of_family, Family,
    QuotientInput,
};
use nikulin::riemann_roch::{
    admissible_pairs, chi_cartier, chi_orbifold, chi_orbifold_closed, chi_weil, h4_on_y, projection_report,
    DivisorData,
};
use nikulin::wedge::{b_pair, MultiVector, TripleElement, TRIPLE_DIM};

/// Rows of the NS(Y)/T_Y table whose listed T_Y is not the computed genus.
const KNOWN_FAILURES: &[(u32, &str)] = &[(3, "j2 d=3: T_Y genus"), (3, "j2 d=7: T_Y genus")];

type Criterion = (u32, &'static str, fn() -> Vec<String>);

struct Outcome {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn lat(rows: &[Vec<i64>]) -> Lattice {
    Lattice::from_i64(rows).unwrap()
}

fn diag(entries: &[i64]) -> Lattice {
    let n = entries.len();
    lat(&(0..n).map(|i| (0..n).map(|j| if i == j { entries[i] } else { 0 }).collect()).collect::<Vec<_>>())
}

fn u(n: i64) -> Lattice {
    lat(&[vec![0, n], vec![n, 0]])
}

fn sum(parts: &[Lattice]) -> Lattice {
    parts.iter().fold(Lattice::empty(), |a, b| a.direct_sum(b))
}

fn named(n: NamedLattice) -> Lattice {
    catalog::make(&n).unwrap()
}

fn k_scaled(d: i64, f: i64) -> Lattice {
    lat(&[vec![-f * (d + 1) / 2, f], vec![f, -2 * f]])
}

fn cyclic(m: i64, num: i64, den: i64) -> FiniteQuadraticForm {
    FiniteQuadraticForm::cyclic(m, rat(num, den)).unwrap()
}

fn sum_forms(parts: &[FiniteQuadraticForm]) -> FiniteQuadraticForm {
    parts.iter().fold(FiniteQuadraticForm::trivial(), |a, b| a.direct_sum(b))
}

fn variants(max_d: i64) -> Vec<EmbeddingVariant> {
    (1..=max_d).flat_map(EmbeddingVariant::all_for).collect()
}

fn criterion_1() -> Vec<String> {
    let mut fails = Vec::new();
    for v in variants(8) {
        let d = v.d;
        let e8m2 = named(NamedLattice::E8m2);
        let d4 = named(NamedLattice::D4m1);
        let target = match v.kind {
            Kind::J1 => sum(&[u(1), u(1), e8m2, diag(&[-2 * d, -2])]),
            Kind::J2 | Kind::JTilde => sum(&[u(1), u(1), d4, diag(&[-2 * d, -2, -2, -2, -2, -2])]),
            Kind::J3 => sum(&[u(1), u(1), e8m2, k_scaled(d, 1)]),
        };
        let t = transcendental_of_x(v).unwrap();
        if !genus_equal(&t, &target).unwrap() {
            fails.push(format!("{v}: T_X not in the listed genus"));
        }
    }
    fails
}

fn criterion_2() -> Vec<String> {
    let mut fails = Vec::new();
    let u2 = FiniteQuadraticForm::u2();
    let v2 = FiniteQuadraticForm::v2();
    let mut check = |name: String, a: &FiniteQuadraticForm, b: &FiniteQuadraticForm| {
        if !fqf_isomorphic(a, b).unwrap() {
            fails.push(name);
        }
    };
    check("disc E8(-2)".into(), &discriminant_form(&named(NamedLattice::E8m2)).unwrap(), &u2.power(4));
    check("disc N".into(), &discriminant_form(&named(NamedLattice::Nikulin)).unwrap(), &u2.power(3));
    for d in [2, 4, 6, 8] {
        let got = discriminant_form(&named(NamedLattice::LambdaTilde(d))).unwrap();
        check(format!("disc LambdaTilde_{}", 2 * d), &got, &sum_forms(&[cyclic(2 * d, 1, 2 * d), u2.power(3)]));
    }
    let half = cyclic(2, 1, 2);
    let mhalf = cyclic(2, -1, 2);
    for d in [2, 4] {
        let left = sum_forms(&[u2.power(3), cyclic(2 * d, -1, 2 * d), mhalf.clone()]);
        let right = sum_forms(&[half.power(3), mhalf.power(4), cyclic(2 * d, -1, 2 * d)]);
        check(format!("first chain identity d={d}"), &left, &right);
        let left = sum_forms(&[half.power(3), mhalf.power(4)]);
        let right = sum_forms(&[v2.clone(), mhalf.power(5)]);
        check(format!("second chain identity d={d}"), &left, &right);
    }
    fails
}

/// Listed NS(Y) Gram and T_Y for a family, written out from the table and the Hilbert square statements.
fn table3_expected(f: Family) -> (Vec<Vec<i64>>, Lattice) {
    let e8 = named(NamedLattice::E8m1);
    let nik = named(NamedLattice::Nikulin);
    match f {
        Family::NonProjectiveHilbert => (vec![vec![-2, 0], vec![0, -2]], sum(&[u(2), u(2), u(2), e8])),
        Family::Projective(v) => {
            let d = v.d;
            match v.kind {
                Kind::J1 => (vec![vec![4 * d, 0], vec![0, -4]], sum(&[u(2), u(2), e8, diag(&[-4 * d, -4])])),
                Kind::J2 => (
                    vec![vec![d - 1, 2], vec![2, -4]],
                    sum(&[u(2), u(2), named(NamedLattice::E7m1), k_scaled(d, 2), diag(&[-2])]),
                ),
                Kind::J3 => (vec![vec![d - 1, 2], vec![2, -4]], sum(&[u(2), u(2), k_scaled(d, 2), e8])),
                Kind::JTilde => (vec![vec![d, 0], vec![0, -4]], sum(&[u(1), u(1), diag(&[-d]), nik, diag(&[-4])])),
            }
        }
        Family::Hilbert(v) => {
            let d = v.d;
            if v.kind == Kind::J1 {
                (vec![vec![4 * d, 0, 0], vec![0, -2, 0], vec![0, 0, -2]], sum(&[diag(&[-4 * d]), u(2), u(2), e8]))
            } else {
                (vec![vec![d, 0, 0], vec![0, -2, 0], vec![0, 0, -2]], sum(&[diag(&[-d]), u(1), u(1), nik]))
            }
        }
    }
}

fn table3_families() -> Vec<Family> {
    let mut out: Vec<Family> = variants(8).into_iter().map(Family::Projective).collect();
    out.push(Family::NonProjectiveHilbert);
    for d in 1..=8 {
        out.push(Family::Hilbert(EmbeddingVariant::new(Kind::J1, d).unwrap()));
        if d % 2 == 0 {
            out.push(Family::Hilbert(EmbeddingVariant::new(Kind::JTilde, d).unwrap()));
        }
    }
    out
}

fn family_label(f: Family) -> String {
    match f {
        Family::Projective(v) => format!("{} d={}", v.kind, v.d),
        other => other.to_string(),
    }
}

fn criterion_3() -> Vec<String> {
    let mut fails = Vec::new();
    let h2y = named(NamedLattice::H2Y);
    for f in table3_families() {
        let label = family_label(f);
        let op = orbifold_picard(&QuotientInput::for_family(f).unwrap()).unwrap();
        let (gram, t_expected) = table3_expected(f);
        let gram = IntMatrix::from_i64(&gram);
        let witness = Sublattice::new(h2y.clone(), ns_witness_basis(f).unwrap()).unwrap();
        let ns_ok = witness.same_span(&op.ns) && witness.gram() == gram;
        let ns_ok = ns_ok && (gram.nrows() != 2 || binary_isometric(&op.ns.gram(), &gram).unwrap());
        if !ns_ok {
            fails.push(format!("{label}: NS(Y) Gram"));
        }
        if !genus_equal(&op.t_lattice(), &t_expected).unwrap() {
            fails.push(format!("{label}: T_Y genus"));
        }
    }
    fails
}

fn criterion_4() -> Vec<String> {
    let mut fails = Vec::new();
    let mut check = |name: &str, got: BigRational, want: i64| {
        if got != int(want) {
            fails.push(format!("{name} = {got}, expected {want}"));
        }
    };
    check("chi_cartier(2)", BigRational::from_integer(chi_cartier(2).unwrap()), 7);
    check("chi_weil(4,1,28)", chi_weil(4, 1, 28).unwrap(), 3);
    check("chi_weil(12,1,28)", chi_weil(12, 1, 28).unwrap(), 8);
    check("chi_orbifold(d=3,k=-1,N=0)", chi_orbifold(6, -1, 0).unwrap(), 7);
    check("chi_orbifold(d=1,k=0,N=12)", chi_orbifold(2, 0, 12).unwrap(), 4);
    check("chi_orbifold(d=1,k=-1,N=16)", chi_orbifold(2, -1, 16).unwrap(), 2);
    fails
}

/// The five rows: `(N1, N2)` and the constant terms of `m1`, `m2` over `d^2/4 + 3d/2` and `d^2/4 + d`.
fn table4_row(v: EmbeddingVariant) -> ((i64, i64), BigRational, BigRational) {
    match v.kind {
        Kind::J1 if v.d % 2 == 1 => ((12, 16), rat(5, 4), rat(-1, 4)),
        Kind::J1 => ((16, 12), int(1), int(0)),
        Kind::J2 | Kind::J3 => ((28, 0), rat(1, 4), rat(3, 4)),
        Kind::JTilde => ((0, 28), int(2), int(-1)),
    }
}

fn criterion_5() -> Vec<String> {
    let mut fails = Vec::new();
    for v in variants(10) {
        let d = v.d;
        let ((n1, n2), c1, c2) = table4_row(v);
        let r = projection_report(v).unwrap();
        let m1 = rat(d * d, 4) + rat(3 * d, 2) + c1;
        let m2 = rat(d * d, 4) + int(d) + c2;
        let dims = (BigRational::from_integer(r.dims.0.clone()), BigRational::from_integer(r.dims.1.clone()));
        if (r.pairs.0.n, r.pairs.1.n) != (n1, n2) || dims != (m1, m2) {
            fails.push(format!("{v}: got N = ({}, {}), m = ({}, {})", r.pairs.0.n, r.pairs.1.n, r.dims.0, r.dims.1));
        }
        let total = rat(d * d, 2) + rat(5 * d, 2) + int(3);
        if BigRational::from_integer(r.h0_sum()) != total {
            fails.push(format!("{v}: h0 sum {} != {total}", r.h0_sum()));
        }
    }
    fails
}

/// `chi` from the degree-four expansion `H^4/48 + H^2 c2/48 + ...` at `q(H) = 2d`.
fn chi_oracle(d: i64, k: i64, n: i64) -> BigRational {
    let q = 2 * d;
    let k2 = int(k * k);
    int(3 * q * q) / int(48) + int(30 * q) / int(48) + (rat(1, 16) - &k2 / int(8)) * int(2 * q) + int(3)
        - rat(n, 16)
        + &k2 * &k2 / int(4)
        - rat(3, 2) * &k2
}

fn criterion_6() -> Vec<String> {
    let mut fails = Vec::new();
    let pair = |a: i64, b: i64| (DivisorData { n: a, k: 0 }, DivisorData { n: b, k: -1 });
    for d in 1..=10 {
        let listed = if d % 2 == 0 { vec![pair(0, 28), pair(16, 12)] } else { vec![pair(12, 16), pair(28, 0)] };
        let got = admissible_pairs(d).unwrap();
        if got != listed {
            fails.push(format!("d={d}: admissible_pairs {got:?}"));
        }
        let mut brute = BTreeSet::new();
        for n1 in 0..=28 {
            for k1 in [0, -1] {
                for k2 in [0, -1] {
                    let n2 = 28 - n1;
                    if chi_oracle(d, k1, n1).is_integer() && chi_oracle(d, k2, n2).is_integer() {
                        if k1 == k2 {
                            fails.push(format!("d={d}: unexpected integral pair with k1 = k2 = {k1}, N1 = {n1}"));
                        } else if k1 == 0 {
                            brute.insert(pair(n1, n2));
                        } else {
                            brute.insert(pair(n2, n1));
                        }
                    }
                }
            }
        }
        if brute != listed.iter().copied().collect() {
            fails.push(format!("d={d}: brute force {brute:?}"));
        }
        for n in 0..=28 {
            for k in [0, -1] {
                let c = chi_orbifold(2 * d, k, n).unwrap();
                if c != chi_oracle(d, k, n) || c != chi_orbifold_closed(d, k, n).unwrap() {
                    fails.push(format!("d={d}, k={k}, N={n}: chi disagrees"));
                }
            }
        }
    }
    fails
}

fn criterion_7() -> Vec<String> {
    let mut fails = Vec::new();
    let models = [
        Model::TwistedSOdd(1),
        Model::TwistedSOdd(3),
        Model::TwistedSOdd(5),
        Model::TwistedSEven(2),
        Model::TwistedSEven(4),
        Model::UntwistedS(2),
        Model::UntwistedS(4),
    ];
    for m in models {
        let d = m.d();
        let r = model_report(m).unwrap();
        let expected = match m {
            Model::UntwistedS(_) => named(NamedLattice::LambdaTilde(d)),
            _ => named(NamedLattice::Lambda(d)),
        };
        if r.square != BigInt::from(2) || !genus_equal(&r.orthogonal, &expected).unwrap() {
            fails.push(format!("{m:?}: orthogonal not in the expected genus"));
        }
    }
    for d in [1, 3, 5] {
        let (p, q) = h_prime_orthogonal(d).unwrap();
        let factors = q.invariant_factors();
        let mut want = vec![BigInt::from(2); 6];
        want.push(BigInt::from(2 * d));
        let want_form = sum_forms(&[
            cyclic(2 * d, 1, 2 * d),
            FiniteQuadraticForm::v2(),
            cyclic(2, -1, 2).power(4),
        ]);
        let negdef = p.signature().positive == 0 && p.signature().zero == 0;
        if p.rank() != 7 || !negdef || factors != want || !fqf_isomorphic(&q, &want_form).unwrap() {
            fails.push(format!("d={d}: H'^perp has factors {factors:?}"));
        }
    }
    fails
}

fn criterion_8() -> Vec<String> {
    let mut fails = Vec::new();
    let t_s1 = sum(&[u(1), u(1), named(NamedLattice::D4m1), diag(&[-2; 6])]);
    let t_y1 = sum(&[u(2), u(2), named(NamedLattice::E7m1), k_scaled(1, 2), diag(&[-2])]);
    let (a, b) = (two_elementary_invariants(&t_s1).unwrap(), two_elementary_invariants(&t_y1).unwrap());
    if a != b || (a.rank, a.length, a.delta) != (14, 8, 1) || t_s1.signature() != t_y1.signature() {
        fails.push(format!("2-elementary invariants {a:?} vs {b:?}"));
    }

    let ns = catalog::fano_ns().unwrap();
    let q = discriminant_form(&ns).unwrap();
    let mut want = vec![BigInt::from(2); 5];
    want.push(BigInt::from(6));
    if q.invariant_factors() != want {
        fails.push(format!("NS(S) discriminant group {:?}", q.invariant_factors()));
    }
    let t_s = sum(&[u(2), u(2), k_scaled(3, 2), named(NamedLattice::E8m1)]);
    let qt = discriminant_form(&t_s).unwrap();
    let ranks_ok = ns.rank() + t_s.rank() == 22 && ns.signature().positive + t_s.signature().positive == 3;
    if !ranks_ok || !fqf_isomorphic(&q, &qt.negate()).unwrap() {
        fails.push("NS(S) and U(2)^2+K_3(2)+E8(-1) are not complementary".into());
    }
    let a2m2 = named(NamedLattice::A2m1).rescale(2).unwrap();
    if !genus_equal(&sum(&[u(2), u(2), a2m2, named(NamedLattice::E8m1)]), &t_s).unwrap() {
        fails.push("A2(-2) and K_3(2) descriptions differ".into());
    }

    for f in table3_families() {
        let label = family_label(f);
        let t_y = orbifold_picard(&QuotientInput::for_family(f).unwrap()).unwrap().t_lattice();
        let partner = match f {
            Family::Projective(v) if v.kind == Kind::J2 && v.d == 1 => t_s1.clone(),
            Family::Projective(v) if v.kind == Kind::J3 && v.d == 3 => t_s.clone(),
            Family::Projective(_) => transcendental_of_family(f).unwrap().rescale(2).unwrap(),
            _ => nikulin_surface_t(f).unwrap(),
        };
        if !rational_equivalence(&t_y, &partner).unwrap() {
            fails.push(format!("{label}: T_Y and its partner are not rationally equivalent"));
        }
    }
    fails
}

fn random_even_gram(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x: i64 = if i == j { 2 * rng.gen_range(-3..=3) } else { rng.gen_range(-6..=6) };
            g.set(i, j, x.into());
            g.set(j, i, x.into());
        }
    }
    g
}

fn random_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
    IntMatrix::from_i64(&rows)
}

fn snf_invariants(m: &IntMatrix) -> Option<String> {
    let s = smith_normal_form(m);
    if s.u.mul(m).ok()?.mul(&s.v).ok()? != s.d {
        return Some("U M V != D".into());
    }
    if s.u.det().ok()?.abs() != BigInt::one() || s.v.det().ok()?.abs() != BigInt::one() {
        return Some("transforms not unimodular".into());
    }
    let f = s.invariant_factors();
    if f.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) || f.len() != m.rank() {
        return Some("invariant factors do not form a divisor chain".into());
    }
    if m.is_square() {
        let det = m.det().ok()?.abs();
        if !det.is_zero() && f.iter().product::<BigInt>() != det {
            return Some("product of invariant factors != |det|".into());
        }
    }
    None
}

fn property_lattices(rng: &mut ChaCha8Rng, count: usize) -> Vec<String> {
    let mut fails = Vec::new();
    let mut done = 0;
    while done < count {
        let n = rng.gen_range(1..=10);
        let g = random_nondegenerate_gram(rng, n);
        let Some(g) = g else { continue };
        let amb = Lattice::from_gram(g.clone()).unwrap();
        done += 1;
        if let Some(e) = snf_invariants(&g) {
            fails.push(format!("gram {n}x{n}: {e}"));
        }
        let r = rng.gen_range(1..=n);
        let gens = random_matrix(rng, r, n);
        if let Some(e) = snf_invariants(&gens) {
            fails.push(format!("gens {r}x{n}: {e}"));
        }
        if gens.rank() == 0 {
            continue;
        }
        let s = Sublattice::spanned_by(amb.clone(), &gens).unwrap();
        let sat = s.saturate();
        let index: BigInt = smith_normal_form(s.gens()).invariant_factors().iter().product();
        let sat_ok = sat.is_primitive()
            && sat.rank() == s.rank()
            && s.gens().rows().all(|row| sat.contains(row))
            && index == s.saturation_index();
        if !sat_ok {
            fails.push(format!("saturation invariants fail for {r}x{n} generators"));
        }
        let c = s.orthogonal_complement().unwrap();
        let orth = c.gens().rows().all(|x| s.gens().rows().all(|y| amb.pair(x, y).is_zero()));
        let cc = c.orthogonal_complement().unwrap();
        if c.rank() + s.rank() != n || !c.is_primitive() || !orth || !cc.same_span(&sat) {
            fails.push(format!("complement invariants fail for {r}x{n} generators"));
        }
    }
    fails
}

fn random_nondegenerate_gram(rng: &mut ChaCha8Rng, n: usize) -> Option<IntMatrix> {
    let g = random_even_gram(rng, n);
    (g.det().ok()? != BigInt::zero()).then_some(g)
}

fn random_invariant(rng: &mut ChaCha8Rng) -> Vec<BigInt> {
    let mut v: Vec<i64> = (0..L_RANK).map(|_| rng.gen_range(-6..=6)).collect();
    for i in 0..8 {
        v[14 + i] = v[6 + i];
    }
    v.into_iter().map(BigInt::from).collect()
}

fn random_multivector(rng: &mut ChaCha8Rng, k: usize) -> MultiVector {
    let len = nikulin::wedge::binomial(7, k);
    let c: Vec<i64> = (0..len).map(|_| rng.gen_range(-6..=6)).collect();
    MultiVector::from_i64(k, &c).unwrap()
}

fn criterion_9() -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e696b75);
    let mut fails = property_lattices(&mut rng, 500);

    let l = named(NamedLattice::L);
    let h2y = named(NamedLattice::H2Y);
    for _ in 0..500 {
        let a = random_invariant(&mut rng);
        let p = pushforward(&a).unwrap();
        if h2y.norm(&p) != BigInt::from(2) * l.norm(&a) {
            fails.push(format!("push-pull fails for {a:?}"));
        }
    }

    for _ in 0..200 {
        let mut make = || {
            let l = [0, 1, 2].map(|_| random_multivector(&mut rng, 1));
            let alpha = random_multivector(&mut rng, 3);
            let w = [0, 1, 2].map(|_| random_multivector(&mut rng, 5));
            TripleElement::new(l, alpha, w).unwrap()
        };
        let (x, y) = (make(), make());
        let xy = b_pair(&x, &y).unwrap();
        let yx = b_pair(&y, &x).unwrap();
        if !xy.add(&yx).unwrap().is_zero() || !b_pair(&x, &x).unwrap().is_zero() || x.flatten().len() != TRIPLE_DIM {
            fails.push("b is not antisymmetric".into());
        }
    }

    if h4_on_y(2) != BigInt::from(24) {
        fails.push(format!("H^4 = {} at q = 2", h4_on_y(2)));
    }
    fails
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "transcendental lattices of X", criterion_1),
        (2, "discriminant form identities", criterion_2),
        (3, "NS(Y) and T_Y", criterion_3),
        (4, "Riemann-Roch values", criterion_4),
        (5, "projective models of Y", criterion_5),
        (6, "admissible pairs", criterion_6),
        (7, "Mukai models", criterion_7),
        (8, "fixed surface comparisons", criterion_8),
        (9, "property suites", criterion_9),
    ];
    let mut outcomes: Vec<Outcome> =
        criteria.into_iter().map(|(id, title, f)| Outcome { id, title, failures: f() }).collect();
    outcomes.push(Outcome { id: 10, title: "out of scope", failures: Vec::new() });

    let mut unexpected = Vec::new();
    let mut seen_known = BTreeSet::new();
    for o in &outcomes {
        if o.failures.is_empty() {
            let note = if o.id == 10 {
                " (EPW quartic degrees, the deformation statement and the Groebner computation are not checked)"
            } else {
                ""
            };
            println!("criterion {:>2} {}: PASS{note}", o.id, o.title);
            continue;
        }
        println!("criterion {:>2} {}: FAIL", o.id, o.title);
        for f in &o.failures {
            let known = KNOWN_FAILURES.iter().any(|&(id, k)| id == o.id && k == f);
            println!("    {}{f}", if known { "[known] " } else { "" });
            if known {
                seen_known.insert((o.id, f.clone()));
            } else {
                unexpected.push(format!("criterion {}: {f}", o.id));
            }
        }
    }
    let missing: Vec<_> =
        KNOWN_FAILURES.iter().filter(|&&(id, k)| !seen_known.contains(&(id, k.to_string()))).collect();
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:#?}");
    }
    if !missing.is_empty() {
        eprintln!("known failures no longer reproduce: {missing:?}");
    }
    let known = seen_known.len();
    println!("{} criteria, {known} known discrepancies, {} unexpected", outcomes.len(), unexpected.len() + missing.len());
    if !unexpected.is_empty() || !missing.is_empty() {
        std::process::exit(1);
    }
}
