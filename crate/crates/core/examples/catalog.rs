//! Every named lattice with its rank, signature and determinant.

use nikulin::catalog::{self, NamedLattice};
use nikulin::Result;

fn main() -> Result<()> {
    let names = [
        NamedLattice::U,
        NamedLattice::UScaled(2),
        NamedLattice::E8m1,
        NamedLattice::E8m2,
        NamedLattice::E7m1,
        NamedLattice::D4m1,
        NamedLattice::Nikulin,
        NamedLattice::K(3),
        NamedLattice::H(5),
        NamedLattice::Lambda(2),
        NamedLattice::LambdaTilde(2),
        NamedLattice::SNs(3),
        NamedLattice::ZNs(3),
        NamedLattice::FanoNs,
        NamedLattice::LK3,
        NamedLattice::L,
        NamedLattice::H2Y,
    ];
    println!("{:<16} {:>4} {:>10} {:>12}", "name", "rank", "signature", "det");
    for n in &names {
        let l = catalog::make(n)?;
        println!("{:<16} {:>4} {:>10} {:>12}", n.to_string(), l.rank(), l.signature().to_string(), l.det());
    }
    let k5 = catalog::make(&NamedLattice::K(5).scaled(2))?;
    println!("K_5(2) gram: {:?}", k5.gram().to_vecs());
    Ok(())
}
