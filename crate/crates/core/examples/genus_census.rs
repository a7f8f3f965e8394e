//! Minimum genus of the built-in graphs, plus a census of connected
//! multigraphs with maximum degree 3 obtained by growing random graphs.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use roundfold::repgraph::{random_connected, EXAMPLE_NAMES};
use roundfold::*;

fn main() -> Result<()> {
    for name in EXAMPLE_NAMES {
        let g = canonical_example(name)?;
        let (gen, cert) = genus(&g.to_multigraph()?)?;
        println!("{name:>9}: genus {gen}, {} faces, b1 = {}", cert.faces, first_betti(&g)?);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut census: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for _ in 0..500 {
        let g = random_connected(&mut rng, 14);
        let b1 = first_betti(&g)?;
        let (gen, _) = genus(&g.to_multigraph()?)?;
        *census.entry((b1, gen)).or_default() += 1;
    }
    println!("\nrandom graphs by (first Betti number, genus):");
    for ((b1, gen), n) in census {
        println!("  b1 {b1:>2}  genus {gen}  x{n}");
    }
    Ok(())
}
