//! Smith and Hermite normal forms, saturation and orthogonal complements.
//!
//! ```text
//! cargo run --example smith_normal_form
//! ```

use nikulin::catalog::{self, NamedLattice};
use nikulin::linalg::{hermite_normal_form, smith_normal_form, IntMatrix};
use nikulin::Result;

fn main() -> Result<()> {
    let m = IntMatrix::from_i64(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let s = smith_normal_form(&m);
    println!("invariant factors: {:?}", s.invariant_factors().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("U M V == D: {}", s.u.mul(&m)?.mul(&s.v)? == s.d);
    println!("hnf: {:?}", hermite_normal_form(&m).to_vecs());

    // 2(e1 + e2) in U + U spans a non-primitive sublattice.
    let uu = catalog::make_sum(&[NamedLattice::U, NamedLattice::U])?;
    let sub = uu.sublattice_i64(&[[2, 2, 0, 0]])?;
    println!("saturation index: {}", sub.saturation_index());
    let perp = sub.orthogonal_complement()?;
    println!("complement gram: {:?}", perp.gram().to_vecs());
    Ok(())
}
