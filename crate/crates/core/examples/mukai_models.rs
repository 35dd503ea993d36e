//! Moduli space models: `v^perp` in the (twisted) Mukai lattice of a K3 surface.

use nikulin::discform::discriminant_form;
use nikulin::mukai::{find_h_prime, h_prime_orthogonal, model_report, Model};
use nikulin::{catalog, Result};

fn main() -> Result<()> {
    let models = [
        Model::TwistedSOdd(1),
        Model::TwistedSOdd(3),
        Model::TwistedSEven(2),
        Model::TwistedZ(3),
        Model::TwistedZ(7),
        Model::UntwistedS(4),
    ];
    for m in models {
        let r = model_report(m)?;
        let perp = r.orthogonal;
        println!("{m:?}: v^2 = {}, v^perp rank {} disc {}", r.square, perp.rank(), discriminant_form(&perp)?.describe());
        println!("    same genus as the Picard lattice: {}, complementary to T: {}", r.genus_matches, r.complementary);
    }

    let s3 = catalog::s_ns(3)?;
    let h = find_h_prime(&s3, 3)?;
    println!("H' on S_3: {:?}", h.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let (p, q) = h_prime_orthogonal(3)?;
    println!("H'^perp: rank {}, signature {}, disc {}", p.rank(), p.signature(), q.describe());
    Ok(())
}
