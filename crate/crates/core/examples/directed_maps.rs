//! Directed round maps (births and splits only) exist exactly for trees.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use roundfold::repgraph::random_connected;
use roundfold::*;

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut shown = 0;
    while shown < 6 {
        let g = random_connected(&mut rng, 9);
        match directed_descriptor(&g) {
            Ok(d) => {
                println!("tree, {} vertices: counts {:?}, directed {}", g.vertices().len(), d.region_counts()?, is_directed(&d));
                shown += 1;
            }
            Err(Error::NotATree) if shown % 2 == 1 => {
                println!("b1 = {}: no directed map", first_betti(&g)?);
                shown += 1;
            }
            Err(Error::NotATree) => {}
            Err(e) => return Err(e),
        }
    }
    if let Err(e) = directed_descriptor(&canonical_example("theta")?) {
        println!("theta: {e}");
    }
    Ok(())
}
