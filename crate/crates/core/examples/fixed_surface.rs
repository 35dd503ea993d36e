//! Comparisons between `T_Y` and the transcendental lattice of the fixed K3 surface.

use nikulin::catalog::{self, NamedLattice};
use nikulin::discform::{discriminant_form, fqf_isomorphic};
use nikulin::lattice::{rational_equivalence, two_elementary_invariants};
use nikulin::quotient::{nikulin_surface_t, orbifold_picard, transcendental_of_family, Family, QuotientInput};
use nikulin::Result;

fn main() -> Result<()> {
    use NamedLattice::*;
    let mut t_s1 = vec![U, U, D4m1];
    t_s1.extend(catalog::repeat(Rank1(-2), 6));
    let t_s1 = catalog::make_sum(&t_s1)?;
    let t_y1 = catalog::make_sum(&[UScaled(2), UScaled(2), E7m1, K(1).scaled(2), Rank1(-2)])?;
    println!("2-elementary: {:?} and {:?}", two_elementary_invariants(&t_s1)?, two_elementary_invariants(&t_y1)?);

    let ns = catalog::fano_ns()?;
    let q = discriminant_form(&ns)?;
    let t = catalog::make_sum(&[UScaled(2), UScaled(2), K(3).scaled(2), E8m1])?;
    let factors: Vec<String> = q.invariant_factors().iter().map(|x| x.to_string()).collect();
    println!("NS(S) for the cubic fourfold: factors {factors:?}");
    println!("q_NS = -q_T: {}", fqf_isomorphic(&q, &discriminant_form(&t)?.negate())?);

    for f in nikulin::quotient::projective_families(4) {
        let t_y = orbifold_picard(&QuotientInput::for_family(f)?)?.t_lattice();
        let t_x2 = transcendental_of_family(f)?.rescale(2)?;
        println!("{f}: T_Y ~ T_X(2) over Q: {}", rational_equivalence(&t_y, &t_x2)?);
    }
    let f = Family::NonProjectiveHilbert;
    let t_y = orbifold_picard(&QuotientInput::for_family(f)?)?.t_lattice();
    println!("{f}: T_Y ~ T_Z over Q: {}", rational_equivalence(&t_y, &nikulin_surface_t(f)?)?);
    Ok(())
}
