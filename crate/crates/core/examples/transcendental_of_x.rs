//! Embeddings of the Picard lattice of `X` into `L` and the resulting `T(X)`.
//!
//! ```text
//! cargo run --example transcendental_of_x -- 7
//! ```

use nikulin::discform::{discriminant_form, genus_equal};
use nikulin::embeddings::{realize, table1_target, table1_target_name, transcendental_of_x, EmbeddingVariant};
use nikulin::Result;

fn main() -> Result<()> {
    let d: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for v in EmbeddingVariant::all_for(d) {
        let r = realize(v)?;
        let t = transcendental_of_x(v)?;
        let ok = genus_equal(&t, &table1_target(v)?)?;
        println!("{v}: j(h) = {:?}, primitive {}", r.h_image.iter().map(|x| x.to_string()).collect::<Vec<_>>(), r.is_primitive_as_given);
        println!("    T(X) rank {} signature {} disc {}", t.rank(), t.signature(), discriminant_form(&t)?.describe());
        println!("    genus of {}: {ok}", table1_target_name(v));
    }
    Ok(())
}
