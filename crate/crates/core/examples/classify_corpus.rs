//! Classifies every `.rgf` file in a directory (default: the bundled corpus).

use std::path::PathBuf;

use roundfold::format::parse_rgf;
use roundfold::*;

fn main() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus"));
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::result::Result<_, _>>()?;
    files.retain(|p| p.extension().is_some_and(|e| e == "rgf"));
    files.sort();

    for path in files {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let g = parse_rgf(&std::fs::read_to_string(&path)?)?;
        match classify(&g) {
            Ok(r) => println!("{name:>14}: {:<12} genus {}  {}", r.tier.to_string(), r.genus, r.embedding),
            Err(e) => println!("{name:>14}: rejected ({e})"),
        }
    }
    Ok(())
}
