//! Closed Reeb spaces glued from pieces, in both assembly styles, next to the
//! polyhedron read off the built round map.

use roundfold::polyhedron::PieceKind;
use roundfold::repgraph::EXAMPLE_NAMES;
use roundfold::*;

fn main() -> Result<()> {
    for kind in [
        PieceKind::DiskPieceMinimal,
        PieceKind::PantsPieceMinimal,
        PieceKind::DiskPieceDoubled(1),
        PieceKind::PantsPieceDoubled([1, 2, 1], [2, 2, 1]),
        PieceKind::minimal_smap(),
    ] {
        let w = piece_template(kind)?;
        println!("{kind:?}: euler {}, borders {:?}", euler_characteristic(&w), w.borders());
    }

    let disk = piece_template(PieceKind::DiskPieceMinimal)?;
    let pants = piece_template(PieceKind::PantsPieceMinimal)?;
    let capped = glue_borders(&pants, "b0", &disk, "b0")?;
    let capped = glue_borders(&capped, "b1", &disk, "b0")?;
    println!("pants with two caps: euler {}, borders {:?}\n", euler_characteristic(&capped), capped.borders());

    println!("{:>9} {:>8} {:>8} {:>11}", "graph", "minimal", "doubled", "round map");
    for name in EXAMPLE_NAMES {
        let g = canonical_example(name)?;
        let minimal = assemble_from_repgraph(&g, AssemblyStyle::Minimal)?;
        let doubled = assemble_from_repgraph(&g, AssemblyStyle::Doubled)?;
        let round = from_fiber_graph(&fiber_graph(&build_from_repgraph(&g)?)?)?;
        println!(
            "{name:>9} {:>8} {:>8} {:>11}",
            euler_characteristic(&minimal),
            euler_characteristic(&doubled),
            euler_characteristic(&round)
        );
    }
    Ok(())
}
