//! Graph -> round map -> fiber graph -> graph, for the corpus and random graphs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use roundfold::repgraph::{random_connected, EXAMPLE_NAMES};
use roundfold::*;

fn main() -> Result<()> {
    let mut graphs: Vec<(String, RepGraph)> =
        EXAMPLE_NAMES.iter().map(|n| Ok((n.to_string(), canonical_example(n)?))).collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    graphs.extend((0..20).map(|i| (format!("random{i}"), random_connected(&mut rng, 12))));

    for (name, g) in &graphs {
        let d = build_from_repgraph(g)?;
        let k = fiber_graph(&d)?;
        let back = collapse_to_repgraph(&k)?;
        let same = are_isomorphic(&back, g).is_some();
        let (g0, _) = genus(&g.to_multigraph()?)?;
        let (g1, _) = genus(&k.to_multigraph())?;
        println!(
            "{name:>10}: {:>2} vertices -> {:>2} circles -> fiber graph {:>2} vertices; isomorphic {same}, genus {g0} = {g1}",
            g.vertices().len(),
            d.l(),
            k.vertices().len()
        );
    }
    Ok(())
}
