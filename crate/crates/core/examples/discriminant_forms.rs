//! Discriminant forms of the catalog lattices and isomorphism tests between them.

use nikulin::catalog::{self, NamedLattice};
use nikulin::discform::{discriminant_form, fqf_isomorphic, genus_equal, FiniteQuadraticForm};
use nikulin::linalg::rat;
use nikulin::Result;

fn main() -> Result<()> {
    let names = [
        NamedLattice::E8m2,
        NamedLattice::Nikulin,
        NamedLattice::Lambda(3),
        NamedLattice::LambdaTilde(4),
        NamedLattice::K(7),
        NamedLattice::D4m1,
    ];
    for n in &names {
        let q = discriminant_form(&catalog::make(n)?)?;
        println!("{:<16} {:<24} {}", n.to_string(), q.describe(), q.order());
    }

    // (1/2)^3 + (-1/2)^4 is v(2) + (-1/2)^5.
    let half = FiniteQuadraticForm::cyclic(2, rat(1, 2))?;
    let mhalf = FiniteQuadraticForm::cyclic(2, rat(-1, 2))?;
    let left = half.power(3).direct_sum(&mhalf.power(4));
    let right = FiniteQuadraticForm::v2().direct_sum(&mhalf.power(5));
    println!("(1/2)^3+(-1/2)^4 = v(2)+(-1/2)^5: {}", fqf_isomorphic(&left, &right)?);

    // Same genus, different presentations.
    let a = catalog::make_sum(&[NamedLattice::U, NamedLattice::E8m2])?;
    let b = catalog::make_sum(&[NamedLattice::E8m2, NamedLattice::U])?;
    println!("genus_equal: {}", genus_equal(&a, &b)?);
    Ok(())
}
