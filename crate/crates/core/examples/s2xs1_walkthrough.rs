//! S^2 x S^1 from start to finish: graph, tier, round map, fiber graph, Reeb space.

use roundfold::format::print_rmd;
use roundfold::roundmap::FiberVertexKind;
use roundfold::*;

fn main() -> Result<()> {
    let g = canonical_example("s2xs1")?;
    let report = classify(&g)?;
    println!("tier: {}  embedding: {}", report.tier, report.embedding);

    let d = build_from_repgraph(&g)?;
    print!("{}", print_rmd(&d));
    println!("region counts outer to inner: {:?}", d.region_counts()?);

    let k = fiber_graph(&d)?;
    for kind in [FiberVertexKind::Triple, FiberVertexKind::FreeEnd, FiberVertexKind::CapEnd] {
        println!("{kind:?}: {}", k.count(kind));
    }

    let w = from_fiber_graph(&k)?;
    print!("{}", w.summary());
    println!("embeds in: {}", embedding_report(&w, &k)?);
    Ok(())
}
