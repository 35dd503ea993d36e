use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use nikulin::catalog::{self, NamedLattice};
use nikulin::discform::{discriminant_form, fqf_isomorphic, genus_equal};
use nikulin::lattice::{rational_equivalence, Lattice, Sublattice};
use nikulin::linalg::{hermite_normal_form, smith_normal_form, IntMatrix};
use nikulin::quotient::pushforward;
use nikulin::riemann_roch::{chi_orbifold, chi_orbifold_closed};
use nikulin::wedge::{b_pair, wedge, MultiVector};

fn even_gram(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-6i64..=6, n * n).prop_map(move |c| {
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = if i == j { 2 * (c[i * n + j] / 2) } else { c[i * n + j] };
                g.set(i, j, x.into());
                g.set(j, i, x.into());
            }
        }
        g
    })
}

fn nondegenerate(n: usize) -> impl Strategy<Value = Lattice> {
    even_gram(n).prop_filter("nondegenerate", |g| !g.det().unwrap().is_zero()).prop_map(|g| Lattice::from_gram(g).unwrap())
}

fn multivector(k: usize) -> impl Strategy<Value = MultiVector> {
    proptest::collection::vec(-4i64..=4, nikulin::wedge::binomial(7, k))
        .prop_map(move |c| MultiVector::from_i64(k, &c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_idempotent(rows in 1usize..5, cols in 1usize..6, c in proptest::collection::vec(-6i64..=6, 30)) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| c[i * cols..(i + 1) * cols].to_vec()).collect();
        let h = hermite_normal_form(&IntMatrix::from_i64(&m));
        prop_assert_eq!(hermite_normal_form(&h), h);
    }

    #[test]
    fn discriminant_order_is_det(l in (1usize..6).prop_flat_map(nondegenerate)) {
        let q = discriminant_form(&l).unwrap();
        let det: BigInt = smith_normal_form(l.gram()).invariant_factors().iter().product();
        prop_assert_eq!(q.order(), det);
    }

    #[test]
    fn genus_and_rational_class_are_stable_under_sums(l in (1usize..4).prop_flat_map(nondegenerate)) {
        let u = catalog::make(&NamedLattice::U).unwrap();
        let a = l.direct_sum(&u);
        let b = u.direct_sum(&l);
        prop_assert!(genus_equal(&a, &b).unwrap());
        prop_assert!(rational_equivalence(&a, &b).unwrap());
        let qa = discriminant_form(&a).unwrap();
        prop_assert!(fqf_isomorphic(&qa, &discriminant_form(&l).unwrap()).unwrap());
    }

    #[test]
    fn complement_of_complement(l in (2usize..6).prop_flat_map(nondegenerate), c in proptest::collection::vec(-6i64..=6, 6)) {
        let n = l.rank();
        let gens = IntMatrix::from_i64(&[c[..n].to_vec()]);
        prop_assume!(gens.rank() == 1);
        let s = Sublattice::spanned_by(l, &gens).unwrap();
        let cc = s.orthogonal_complement().unwrap().orthogonal_complement().unwrap();
        prop_assert!(cc.same_span(&s.saturate()));
    }

    #[test]
    fn pushforward_doubles_invariant_norms(c in proptest::collection::vec(-8i64..=8, 15)) {
        let mut v = vec![BigInt::zero(); 23];
        for i in 0..6 {
            v[i] = c[i].into();
        }
        for i in 0..8 {
            v[6 + i] = c[6 + i].into();
            v[14 + i] = v[6 + i].clone();
        }
        v[22] = c[14].into();
        let l = catalog::l();
        let y = catalog::h2y();
        prop_assert_eq!(y.norm(&pushforward(&v).unwrap()), BigInt::from(2) * l.norm(&v));
    }

    #[test]
    fn orbifold_chi_closed_form(d in 1i64..40, n in 0i64..=28, k in prop_oneof![Just(0i64), Just(-1i64)]) {
        prop_assert_eq!(chi_orbifold(2 * d, k, n).unwrap(), chi_orbifold_closed(d, k, n).unwrap());
    }

    #[test]
    fn wedge_is_graded_commutative(a in multivector(2), b in multivector(3), c in multivector(1)) {
        prop_assert_eq!(wedge(&a, &b).unwrap(), wedge(&b, &a).unwrap());
        let minus = BigRational::from_integer((-1).into());
        prop_assert_eq!(wedge(&b, &c).unwrap(), wedge(&c, &b).unwrap().scale(&minus));
        let left = wedge(&wedge(&a, &b).unwrap(), &c).unwrap();
        let right = wedge(&a, &wedge(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn pairing_on_single_slots(l in multivector(1), w in multivector(5)) {
        let mut x = nikulin::wedge::TripleElement::zero();
        x.l[1] = l;
        let mut y = nikulin::wedge::TripleElement::zero();
        y.w[1] = w;
        let xy = b_pair(&x, &y).unwrap();
        let yx = b_pair(&y, &x).unwrap();
        prop_assert!(xy.add(&yx).unwrap().is_zero());
    }
}
