use std::fmt;
use std::str::FromStr;

use super::{from_fiber_graph, glue_within, piece_template, PieceKind, SimplePolyhedron};
use crate::error::{Error, Result};
use crate::repgraph::{require_valid_connected, RepGraph, VertexKind};
use crate::roundmap::FiberGraph;
use crate::surface::{genus, EmbeddingCertificate};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum AssemblyStyle {
    /// Disk and `Y x S^1` pieces glued directly along each edge.
    #[default]
    Minimal,
    /// Doubled disk and doubled pants pieces, an S-map piece on every edge.
    Doubled,
}

impl FromStr for AssemblyStyle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "minimal" => Ok(AssemblyStyle::Minimal),
            "doubled" => Ok(AssemblyStyle::Doubled),
            _ => Err(format!("unknown style `{s}` (expected minimal or doubled)")),
        }
    }
}

impl fmt::Display for AssemblyStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AssemblyStyle::Minimal => "minimal",
            AssemblyStyle::Doubled => "doubled",
        })
    }
}

/// One piece per vertex, prefixed `<vertex>:`; the k-th incident edge of a
/// vertex uses the k-th border of its piece.
pub fn assemble_from_repgraph(g: &RepGraph, style: AssemblyStyle) -> Result<SimplePolyhedron> {
    require_valid_connected(g)?;
    let (disk, pants) = match style {
        AssemblyStyle::Minimal => (PieceKind::DiskPieceMinimal, PieceKind::PantsPieceMinimal),
        AssemblyStyle::Doubled => (PieceKind::DiskPieceDoubled(1), PieceKind::PantsPieceDoubled([1; 3], [1; 3])),
    };
    let disk = piece_template(disk)?;
    let pants = piece_template(pants)?;
    let connector = piece_template(PieceKind::minimal_smap())?;

    let mut w = SimplePolyhedron::new();
    let mut borders: Vec<Vec<String>> = Vec::new();
    for v in g.vertices() {
        let piece = match v.kind {
            VertexKind::Disk => &disk,
            VertexKind::Pants => &pants,
        };
        let piece = piece.prefixed(&format!("{}:", v.id));
        let renamed = w.absorb(&piece);
        borders.push(piece.borders().iter().map(|b| renamed[*b].clone()).collect());
    }
    let index = g.index();
    let mut used = vec![0; g.vertices().len()];
    let mut take = |v: usize| {
        let b = borders[v][used[v]].clone();
        used[v] += 1;
        b
    };
    for e in g.edges() {
        let bx = take(index[e.ends.0.as_str()]);
        let by = take(index[e.ends.1.as_str()]);
        match style {
            AssemblyStyle::Minimal => w = glue_within(&w, &bx, &by)?,
            AssemblyStyle::Doubled => {
                let piece = connector.prefixed(&format!("{}:", e.id));
                let renamed = w.absorb(&piece);
                let outer = renamed[&format!("{}:border:outer", e.id)].clone();
                let inner = renamed[&format!("{}:border:inner", e.id)].clone();
                w = glue_within(&w, &bx, &outer)?;
                w = glue_within(&w, &inner, &by)?;
            }
        }
    }
    if w.is_bordered() {
        return Err(Error::Internal(format!("assembly left borders open: {}", w.borders().join(" "))));
    }
    Ok(w)
}

/// Where a Reeb space with a fiber graph of the given genus embeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingTarget {
    pub genus: usize,
    pub certificate: Option<EmbeddingCertificate>,
}

impl EmbeddingTarget {
    pub fn new(genus: usize) -> Self {
        Self { genus, certificate: None }
    }

    pub fn description(&self) -> String {
        if self.genus == 0 {
            "3-sphere".to_string()
        } else {
            format!("union of S¹×Σ_{{{},1}} and D²×S¹ glued along boundaries", self.genus)
        }
    }
}

impl fmt::Display for EmbeddingTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description())
    }
}

/// The closed 3-manifold receiving `w = from_fiber_graph(k)`: the 3-sphere
/// when `k` is planar, otherwise the gluing of `S^1 x Σ_{g,1}` and a solid
/// torus with `g` the genus of `k`.
pub fn embedding_report(w: &SimplePolyhedron, k: &FiberGraph) -> Result<EmbeddingTarget> {
    if !k.is_closed() {
        return Err(Error::Bordered("the fiber graph has border ends; embedding is reported for closed pieces".into()));
    }
    if from_fiber_graph(k)? != *w {
        return Err(Error::PolyhedronMismatch);
    }
    let (g, cert) = genus(&k.to_multigraph())?;
    Ok(EmbeddingTarget { genus: g, certificate: Some(cert) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{euler_characteristic, validate_polyhedron};
    use crate::repgraph::canonical_example;
    use crate::roundmap::{build_from_repgraph, fiber_graph};

    #[test]
    fn minimal_assembly() {
        for (name, chi) in [("lens", 2), ("s2xs1", 3), ("theta", 0), ("k4", 0)] {
            let g = canonical_example(name).unwrap();
            let w = assemble_from_repgraph(&g, AssemblyStyle::Minimal).unwrap();
            assert!(validate_polyhedron(&w).valid(), "{name}");
            assert_eq!(euler_characteristic(&w), chi, "{name}");
        }
    }

    #[test]
    fn doubled_assembly_is_closed_and_valid() {
        let g = canonical_example("k33").unwrap();
        let w = assemble_from_repgraph(&g, AssemblyStyle::Doubled).unwrap();
        assert!(validate_polyhedron(&w).valid());
        assert!(!w.is_bordered());
        assert_eq!(euler_characteristic(&w), 9 - 6);
    }

    #[test]
    fn targets() {
        for (name, g0) in [("s2xs1", 0), ("theta", 0), ("k33", 1)] {
            let k = fiber_graph(&build_from_repgraph(&canonical_example(name).unwrap()).unwrap()).unwrap();
            let w = from_fiber_graph(&k).unwrap();
            let t = embedding_report(&w, &k).unwrap();
            assert_eq!(t.genus, g0, "{name}");
        }
        assert_eq!(EmbeddingTarget::new(0).description(), "3-sphere");
        assert_eq!(EmbeddingTarget::new(2).description(), "union of S¹×Σ_{2,1} and D²×S¹ glued along boundaries");
    }

    #[test]
    fn mismatched_polyhedron_is_rejected() {
        let k = fiber_graph(&build_from_repgraph(&canonical_example("lens").unwrap()).unwrap()).unwrap();
        let w = piece_template(PieceKind::DiskPieceDoubled(1)).unwrap();
        assert!(matches!(embedding_report(&w, &k), Err(Error::PolyhedronMismatch)));
    }
}
