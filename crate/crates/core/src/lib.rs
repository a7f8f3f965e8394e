//! Combinatorial engine for graph manifolds and their round fold maps into the plane.
//!
//! A graph manifold is described by a [`RepGraph`]: one vertex per circle bundle
//! over a disk (degree 1) or a pair of pants (degree 3), one edge per cutting torus.
//! From such a graph the crate builds descriptors of topologically quasi-trivial
//! round fold maps ([`RoundMapDescriptor`]), extracts their fiber graphs, turns
//! those into 2-dimensional simple polyhedra (the Reeb spaces), and classifies
//! the graph into the tree / planar / genus-g tiers that decide whether a round
//! map can be directed and where its Reeb space embeds.
//!
//! ```
//! use roundfold::{canonical_example, classify, Tier};
//!
//! let g = canonical_example("s2xs1").unwrap();
//! let report = classify(&g).unwrap();
//! assert_eq!(report.tier, Tier::Directed);
//! assert_eq!(report.embedding.description(), "3-sphere");
//! ```

pub mod cli;
pub mod error;
pub mod format;
pub mod invariants;
pub mod polyhedron;
pub mod repgraph;
pub mod report;
pub mod roundmap;
pub mod surface;
pub mod svg;

pub use error::{Error, Result};
pub use invariants::{classify, invariant_bounds, Certificate, GenusBounds, InvariantReport, Tier};
pub use polyhedron::{
    assemble_from_repgraph, embedding_report, euler_characteristic, from_fiber_graph, glue_borders,
    piece_template, validate_polyhedron, AssemblyStyle, CircleKind, EmbeddingTarget, PieceKind,
    SimplePolyhedron,
};
pub use repgraph::{are_isomorphic, canonical_example, first_betti, is_tree, validate, RepGraph, VertexKind};
pub use report::{ValidationReport, Violation};
pub use roundmap::{
    build_from_repgraph, collapse_to_repgraph, directed_descriptor, fiber_graph, is_directed,
    s_map_descriptor, validate_descriptor, BorderedDescriptor, CircleRecord, Event, FiberGraph,
    RoundMapDescriptor,
};
pub use surface::{genus, is_planar, trace_faces, EmbeddingCertificate, Multigraph, RotationSystem};
