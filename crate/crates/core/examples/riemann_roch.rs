//! Euler characteristics on `Y` and the dimensions of its two projective models.

use nikulin::embeddings::EmbeddingVariant;
use nikulin::riemann_roch::{admissible_pairs, chi_cartier, chi_orbifold, chi_weil, projection_report};
use nikulin::Result;

fn main() -> Result<()> {
    println!("chi_cartier(2) = {}", chi_cartier(2)?);
    println!("chi_weil(qL=4, m=1, N=28) = {}", chi_weil(4, 1, 28)?);
    println!("chi_orbifold(q=2, k=0, N=12) = {}", chi_orbifold(2, 0, 12)?);
    println!("chi_orbifold(q=2, k=0, N=0) = {} (not integral)", chi_orbifold(2, 0, 0)?);

    for d in 1..=4 {
        let pairs: Vec<String> =
            admissible_pairs(d)?.iter().map(|(a, b)| format!("(N1={}, N2={})", a.n, b.n)).collect();
        println!("d = {d}: {}", pairs.join(", "));
    }

    for d in 1..=6 {
        for v in EmbeddingVariant::all_for(d) {
            let r = projection_report(v)?;
            println!("{v}: |D1| -> P^{}, |D2| -> P^{}, h0 sum {}", r.dims.0, r.dims.1, r.h0_sum());
        }
    }
    Ok(())
}
