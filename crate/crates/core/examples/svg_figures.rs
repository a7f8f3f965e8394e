//! Writes SVG figures for a few descriptors and graphs into a directory
//! (default `target/figures`).

use std::path::PathBuf;

use roundfold::svg::{emit_svg, DiagramSpec};
use roundfold::*;

fn main() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("target/figures"));
    std::fs::create_dir_all(&out)?;

    let smap = s_map_descriptor(2, 0, 5, 1, 0)?.base;
    let theta = build_from_repgraph(&canonical_example("theta")?)?;
    let petersen = canonical_example("petersen")?;
    let k33 = canonical_example("k33")?;
    let figures = [
        ("smap-2-0-5.svg", emit_svg(&DiagramSpec::descriptor(&smap))),
        ("theta-round.svg", emit_svg(&DiagramSpec::descriptor(&theta))),
        ("petersen.svg", emit_svg(&DiagramSpec::graph(&petersen))),
        ("k33.svg", emit_svg(&DiagramSpec { scale: 25, ..DiagramSpec::graph(&k33) })),
    ];
    for (name, svg) in figures {
        let path = out.join(name);
        std::fs::write(&path, svg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
