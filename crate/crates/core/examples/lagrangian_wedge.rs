//! The pairing on `3 V7 + wedge^3 V7 + 3 wedge^5 V7` and an isotropic 28-dimensional subspace.

use nikulin::wedge::{b_pair, is_isotropic, standard_isotropic_28, wedge, MultiVector, TripleElement, TRIPLE_DIM};
use nikulin::Result;

fn main() -> Result<()> {
    let a = MultiVector::basis_blade(&[1, 2, 3])?;
    let b = MultiVector::basis_blade(&[4, 5, 6])?;
    println!("e123 ^ e456 = {:?}", wedge(&a, &b)?.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let mut x = TripleElement::zero();
    x.l[0] = MultiVector::basis_blade(&[7])?;
    let mut y = TripleElement::zero();
    y.w[0] = MultiVector::basis_blade(&[1, 2, 3, 4, 5])?;
    let xy = b_pair(&x, &y)?;
    let yx = b_pair(&y, &x)?;
    println!("b(x,y) + b(y,x) = 0: {}", xy.add(&yx)?.is_zero());

    let basis = standard_isotropic_28();
    println!("ambient dimension {TRIPLE_DIM}, subspace dimension {}", basis.len());
    println!("isotropic: {}", is_isotropic(&basis)?);
    Ok(())
}
