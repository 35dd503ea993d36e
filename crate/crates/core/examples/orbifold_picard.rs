//! `NS(Y)` and `T_Y` for the quotient of `X` by the symplectic involution.

use nikulin::discform::genus_equal;
use nikulin::quotient::{
    computed_t_parts, expected_ns_gram, expected_t, expected_t_name, hilbert_families, orbifold_picard,
    projective_families, Family, QuotientInput,
};
use nikulin::{catalog, Result};

fn show(f: Family) -> Result<()> {
    let op = orbifold_picard(&QuotientInput::for_family(f)?)?;
    let t = op.t_lattice();
    println!("{f}");
    println!("    NS(Y) gram {:?}, listed {:?}", op.ns.gram().to_vecs(), expected_ns_gram(f).to_vecs());
    if genus_equal(&t, &expected_t(f)?)? {
        println!("    T_Y in the genus of {}", expected_t_name(f));
    } else {
        let parts = computed_t_parts(f);
        let name: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        let ok = genus_equal(&t, &catalog::make_sum(&parts)?)?;
        println!("    T_Y not in the genus of {}; genus of {}: {ok}", expected_t_name(f), name.join("+"));
    }
    Ok(())
}

fn main() -> Result<()> {
    show(Family::NonProjectiveHilbert)?;
    for f in projective_families(4) {
        show(f)?;
    }
    for f in hilbert_families(2) {
        show(f)?;
    }
    Ok(())
}
