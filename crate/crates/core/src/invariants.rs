//! Tree / planar / genus-g classification of representation graphs.

use std::fmt;

use crate::error::Result;
use crate::polyhedron::EmbeddingTarget;
use crate::repgraph::{is_tree, require_valid_connected, RepGraph};
use crate::roundmap::{directed_descriptor, RoundMapDescriptor};
use crate::surface::{genus, EmbeddingCertificate};

pub const CAVEAT: &str = "graph-level classification: another representation graph of the same manifold \
may be a tree or have smaller genus, so a non-directed or higher tier here does not rule out a better \
round fold map of the manifold";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tier {
    /// The graph is a tree: a directed round fold map exists.
    Directed,
    /// Planar but not a tree: the Reeb space embeds in the 3-sphere.
    PlanarRound,
    GenusG(usize),
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tier::Directed => f.write_str("Directed"),
            Tier::PlanarRound => f.write_str("PlanarRound"),
            Tier::GenusG(g) => write!(f, "GenusG({g})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Leaf-removal order (vertex ids) eliminating the whole tree.
    Tree(Vec<String>),
    Planar(EmbeddingCertificate),
    Genus(EmbeddingCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub is_tree: bool,
    pub is_planar: bool,
    pub genus: usize,
    pub tier: Tier,
    pub embedding: EmbeddingTarget,
    pub certificates: Vec<Certificate>,
    pub directed: Option<RoundMapDescriptor>,
    pub caveat: &'static str,
}

fn leaf_order(g: &RepGraph) -> Vec<String> {
    let mut alive: Vec<bool> = vec![true; g.vertices().len()];
    let index = g.index();
    let ends: Vec<(usize, usize)> =
        g.edges().iter().map(|e| (index[e.ends.0.as_str()], index[e.ends.1.as_str()])).collect();
    let mut order = Vec::new();
    while order.len() < alive.len() {
        let degree = |v: usize, alive: &[bool]| {
            ends.iter().filter(|&&(a, b)| alive[a] && alive[b] && (a == v || b == v)).count()
        };
        let Some(v) = (0..alive.len()).find(|&v| alive[v] && degree(v, &alive) <= 1) else { break };
        alive[v] = false;
        order.push(g.vertices()[v].id.clone());
    }
    order
}

pub fn classify(g: &RepGraph) -> Result<InvariantReport> {
    require_valid_connected(g)?;
    let tree = is_tree(g)?;
    let (gen, cert) = genus(&g.to_multigraph()?)?;
    let tier = if tree {
        Tier::Directed
    } else if gen == 0 {
        Tier::PlanarRound
    } else {
        Tier::GenusG(gen)
    };
    let mut certificates = Vec::new();
    if tree {
        certificates.push(Certificate::Tree(leaf_order(g)));
    }
    certificates.push(if gen == 0 { Certificate::Planar(cert.clone()) } else { Certificate::Genus(cert.clone()) });
    let directed = if tree { Some(directed_descriptor(g)?) } else { None };
    Ok(InvariantReport {
        is_tree: tree,
        is_planar: gen == 0,
        genus: gen,
        tier,
        embedding: EmbeddingTarget { genus: gen, certificate: Some(cert) },
        certificates,
        directed,
        caveat: CAVEAT,
    })
}

/// Bounds on the minimal genus over all round fold maps of the manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusBounds {
    /// Always 0: minimising over other graphs of the manifold is not attempted.
    pub lower: usize,
    pub lower_computed: bool,
    /// Genus of the given graph, realised by an explicit embedding.
    pub upper: usize,
}

impl fmt::Display for GenusBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let note = if self.lower_computed { "" } else { " (lower bound not computed)" };
        write!(f, "{} <= genus <= {}{}", self.lower, self.upper, note)
    }
}

pub fn invariant_bounds(g: &RepGraph) -> Result<GenusBounds> {
    require_valid_connected(g)?;
    let (upper, _) = genus(&g.to_multigraph()?)?;
    Ok(GenusBounds { lower: 0, lower_computed: false, upper })
}
