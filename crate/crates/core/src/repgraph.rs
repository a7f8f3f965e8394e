//! Representation graphs of graph manifolds.
//!
//! Each vertex is a trivial circle bundle over a disk (degree 1) or over a pair of
//! pants (degree 3); each edge is a cutting torus. Multi-edges are allowed, loops
//! are not.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::surface::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Disk,
    Pants,
}

impl VertexKind {
    pub fn degree(self) -> usize {
        match self {
            VertexKind::Disk => 1,
            VertexKind::Pants => 3,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            VertexKind::Disk => "disk",
            VertexKind::Pants => "pants",
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub kind: VertexKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: (String, String),
}

/// A candidate representation graph. Construction never fails; call
/// [`validate`] to check the degree and loop conditions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl RepGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, kind: VertexKind) -> &mut Self {
        self.vertices.push(Vertex { id: id.into(), kind });
        self
    }

    pub fn add_edge(&mut self, id: impl Into<String>, a: impl Into<String>, b: impl Into<String>) -> &mut Self {
        self.edges.push(Edge { id: id.into(), ends: (a.into(), b.into()) });
        self
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn count(&self, kind: VertexKind) -> usize {
        self.vertices.iter().filter(|v| v.kind == kind).count()
    }

    /// Position of each vertex id (first occurrence wins).
    pub(crate) fn index(&self) -> HashMap<&str, usize> {
        let mut map = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            map.entry(v.id.as_str()).or_insert(i);
        }
        map
    }

    pub fn degree(&self, id: &str) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.ends.0 == id) + usize::from(e.ends.1 == id))
            .sum()
    }

    /// Indices of the edges incident to vertex `v`, in edge order. A loop
    /// would appear twice.
    pub(crate) fn incident(&self, v: &str) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.ends.0 == v {
                out.push(i);
            }
            if e.ends.1 == v {
                out.push(i);
            }
        }
        out
    }

    /// Number of connected components; dangling endpoints are ignored.
    pub fn component_count(&self) -> usize {
        self.to_multigraph_lossy().component_count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    fn to_multigraph_lossy(&self) -> Multigraph {
        let index = self.index();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some((*index.get(e.ends.0.as_str())?, *index.get(e.ends.1.as_str())?)))
            .collect();
        Multigraph::new(self.vertices.len(), edges)
    }

    /// The underlying multigraph, vertices and edges in declaration order.
    pub fn to_multigraph(&self) -> Result<Multigraph> {
        let report = validate(self);
        if !report.valid() {
            return Err(Error::InvalidGraph(report));
        }
        Ok(self.to_multigraph_lossy())
    }

    /// Same graph with every id passed through `rename`.
    pub fn relabeled(&self, mut vertex: impl FnMut(&str) -> String, mut edge: impl FnMut(&str) -> String) -> RepGraph {
        let names: HashMap<&str, String> = self.vertices.iter().map(|v| (v.id.as_str(), vertex(&v.id))).collect();
        let rename = |id: &str| names.get(id).cloned().unwrap_or_else(|| id.to_string());
        RepGraph {
            vertices: self.vertices.iter().map(|v| Vertex { id: rename(&v.id), kind: v.kind }).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge { id: edge(&e.id), ends: (rename(&e.ends.0), rename(&e.ends.1)) })
                .collect(),
        }
    }

    /// Same graph with vertices and edges listed in a different order.
    pub fn permuted(&self, vertex_order: &[usize], edge_order: &[usize]) -> RepGraph {
        RepGraph {
            vertices: vertex_order.iter().map(|&i| self.vertices[i].clone()).collect(),
            edges: edge_order.iter().map(|&i| self.edges[i].clone()).collect(),
        }
    }
}

fn bad_id(id: &str) -> bool {
    id.is_empty() || id.starts_with('~') || id.chars().any(|c| c.is_whitespace() || c == '#')
}

/// Checks every representation-graph invariant and lists all violations.
pub fn validate(g: &RepGraph) -> ValidationReport {
    let mut report = ValidationReport::new();

    let mut seen = HashSet::new();
    for v in &g.vertices {
        if bad_id(&v.id) {
            report.push("bad-id", format!("vertex id `{}` is not a plain identifier", v.id), vec![v.id.clone()]);
        }
        if !seen.insert(v.id.as_str()) {
            report.push("duplicate-id", format!("vertex id `{}` declared twice", v.id), vec![v.id.clone()]);
        }
    }
    let mut seen_edges = HashSet::new();
    for e in &g.edges {
        if bad_id(&e.id) {
            report.push("bad-id", format!("edge id `{}` is not a plain identifier", e.id), vec![e.id.clone()]);
        }
        if !seen_edges.insert(e.id.as_str()) {
            report.push("duplicate-id", format!("edge id `{}` declared twice", e.id), vec![e.id.clone()]);
        }
        for end in [&e.ends.0, &e.ends.1] {
            if !seen.contains(end.as_str()) {
                report.push(
                    "dangling",
                    format!("edge `{}` references unknown vertex `{}`", e.id, end),
                    vec![e.id.clone(), end.clone()],
                );
            }
        }
        if e.ends.0 == e.ends.1 {
            report.push(
                "loop",
                format!("edge `{}` joins vertex `{}` to itself", e.id, e.ends.0),
                vec![e.id.clone(), e.ends.0.clone()],
            );
        }
    }

    let mut checked = HashSet::new();
    for v in &g.vertices {
        if !checked.insert(v.id.as_str()) {
            continue;
        }
        let d = g.degree(&v.id);
        if d != v.kind.degree() {
            report.push(
                "degree",
                format!("{} vertex `{}` has degree {}, expected {}", v.kind, v.id, d, v.kind.degree()),
                vec![v.id.clone()],
            );
        }
    }
    report
}

fn require_connected(g: &RepGraph) -> Result<()> {
    let report = validate(g);
    if !report.valid() {
        return Err(Error::InvalidGraph(report));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub(crate) fn require_valid_connected(g: &RepGraph) -> Result<()> {
    require_connected(g)
}

/// E − V + (number of components).
pub fn first_betti(g: &RepGraph) -> Result<usize> {
    require_connected(g)?;
    Ok(g.edges.len() + g.component_count() - g.vertices.len())
}

pub fn is_tree(g: &RepGraph) -> Result<bool> {
    Ok(first_betti(g)? == 0)
}

pub const EXAMPLE_NAMES: [&str; 6] = ["s2xs1", "lens", "theta", "k4", "k33", "petersen"];

/// Built-in corpus of representation graphs.
pub fn canonical_example(name: &str) -> Result<RepGraph> {
    use VertexKind::*;
    let mut g = RepGraph::new();
    match name {
        "s2xs1" => {
            g.add_vertex("p", Pants).add_vertex("a", Disk).add_vertex("b", Disk).add_vertex("c", Disk);
            g.add_edge("e1", "p", "a").add_edge("e2", "p", "b").add_edge("e3", "p", "c");
        }
        "lens" => {
            g.add_vertex("a", Disk).add_vertex("b", Disk);
            g.add_edge("e1", "a", "b");
        }
        "theta" => {
            g.add_vertex("p", Pants).add_vertex("q", Pants);
            g.add_edge("e1", "p", "q").add_edge("e2", "p", "q").add_edge("e3", "p", "q");
        }
        "k4" => {
            for i in 0..4 {
                g.add_vertex(format!("v{i}"), Pants);
            }
            let mut n = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    n += 1;
                    g.add_edge(format!("e{n}"), format!("v{i}"), format!("v{j}"));
                }
            }
        }
        "k33" => {
            for i in 0..3 {
                g.add_vertex(format!("a{i}"), Pants);
            }
            for i in 0..3 {
                g.add_vertex(format!("b{i}"), Pants);
            }
            let mut n = 0;
            for i in 0..3 {
                for j in 0..3 {
                    n += 1;
                    g.add_edge(format!("e{n}"), format!("a{i}"), format!("b{j}"));
                }
            }
        }
        "petersen" => {
            for i in 0..5 {
                g.add_vertex(format!("u{i}"), Pants);
            }
            for i in 0..5 {
                g.add_vertex(format!("w{i}"), Pants);
            }
            for i in 0..5 {
                g.add_edge(format!("o{i}"), format!("u{i}"), format!("u{}", (i + 1) % 5));
            }
            for i in 0..5 {
                g.add_edge(format!("s{i}"), format!("u{i}"), format!("w{i}"));
            }
            for i in 0..5 {
                g.add_edge(format!("i{i}"), format!("w{i}"), format!("w{}", (i + 2) % 5));
            }
        }
        _ => {
            return Err(Error::UnknownExample { name: name.to_string(), available: EXAMPLE_NAMES.to_vec() });
        }
    }
    Ok(g)
}

/// A kind-preserving multigraph isomorphism, as id pairs (left, right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: Vec<(String, String)>,
    pub edges: Vec<(String, String)>,
}

struct Shape {
    kinds: Vec<VertexKind>,
    degree: Vec<usize>,
    // multiplicity[(i, j)] with i <= j -> edge indices
    pairs: BTreeMap<(usize, usize), Vec<usize>>,
}

impl Shape {
    fn of(g: &RepGraph) -> Option<Shape> {
        let index = g.index();
        if index.len() != g.vertices.len() {
            return None;
        }
        let mut degree = vec![0; g.vertices.len()];
        let mut pairs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (k, e) in g.edges.iter().enumerate() {
            let a = *index.get(e.ends.0.as_str())?;
            let b = *index.get(e.ends.1.as_str())?;
            degree[a] += 1;
            degree[b] += 1;
            pairs.entry((a.min(b), a.max(b))).or_default().push(k);
        }
        Some(Shape { kinds: g.vertices.iter().map(|v| v.kind).collect(), degree, pairs })
    }

    fn mult(&self, a: usize, b: usize) -> usize {
        self.pairs.get(&(a.min(b), a.max(b))).map_or(0, Vec::len)
    }
}

/// Decides kind-preserving isomorphism by backtracking over vertex bijections,
/// pruned by kind and degree. Returns a witness when one exists.
pub fn are_isomorphic(g1: &RepGraph, g2: &RepGraph) -> Option<Isomorphism> {
    if g1.vertices.len() != g2.vertices.len() || g1.edges.len() != g2.edges.len() {
        return None;
    }
    let s1 = Shape::of(g1)?;
    let s2 = Shape::of(g2)?;
    let n = g1.vertices.len();

    let mut sig1: Vec<_> = (0..n).map(|i| (s1.kinds[i], s1.degree[i])).collect();
    let mut sig2: Vec<_> = (0..n).map(|i| (s2.kinds[i], s2.degree[i])).collect();
    sig1.sort();
    sig2.sort();
    if sig1 != sig2 {
        return None;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(0, &s1, &s2, &mut map, &mut used) {
        return None;
    }

    let vertices = (0..n).map(|i| (g1.vertices[i].id.clone(), g2.vertices[map[i]].id.clone())).collect();
    let mut edges = Vec::with_capacity(g1.edges.len());
    for (&(a, b), ks) in &s1.pairs {
        let (x, y) = (map[a], map[b]);
        let targets = &s2.pairs[&(x.min(y), x.max(y))];
        for (k, t) in ks.iter().zip(targets) {
            edges.push((g1.edges[*k].id.clone(), g2.edges[*t].id.clone()));
        }
    }
    edges.sort();
    Some(Isomorphism { vertices, edges })
}

fn extend(i: usize, s1: &Shape, s2: &Shape, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = map.len();
    if i == n {
        return true;
    }
    for c in 0..n {
        if used[c] || s1.kinds[i] != s2.kinds[c] || s1.degree[i] != s2.degree[c] {
            continue;
        }
        if s1.mult(i, i) != s2.mult(c, c) {
            continue;
        }
        let consistent = (0..i).all(|j| s1.mult(i, j) == s2.mult(c, map[j]));
        if !consistent {
            continue;
        }
        map[i] = c;
        used[c] = true;
        if extend(i + 1, s1, s2, map, used) {
            return true;
        }
        used[c] = false;
    }
    map[i] = usize::MAX;
    false
}

/// Breadth-first vertex order from `root`, neighbours taken in edge order.
pub(crate) fn bfs_order(g: &RepGraph, root: &str) -> Vec<usize> {
    let index = g.index();
    let mut order = Vec::with_capacity(g.vertices.len());
    let mut seen = vec![false; g.vertices.len()];
    let mut queue = VecDeque::new();
    if let Some(&r) = index.get(root) {
        seen[r] = true;
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let id = &g.vertices[v].id;
        for k in g.incident(id) {
            let e = &g.edges[k];
            let other = if &e.ends.0 == id { &e.ends.1 } else { &e.ends.0 };
            let o = index[other.as_str()];
            if !seen[o] {
                seen[o] = true;
                queue.push_back(o);
            }
        }
    }
    order
}

/// A pseudo-random valid connected representation graph with at most
/// `max_vertices` vertices (at least 2). Stubs are paired uniformly and
/// rejected until the result is loopless and connected.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> RepGraph {
    let max_vertices = max_vertices.max(2);
    loop {
        let total = rng.gen_range(2..=max_vertices);
        let pants = rng.gen_range(0..=total);
        let disks = total - pants;
        if (disks + 3 * pants) % 2 != 0 || (pants == 0 && disks != 2) {
            continue;
        }
        let mut g = RepGraph::new();
        let mut stubs = Vec::new();
        for i in 0..pants {
            g.add_vertex(format!("p{i}"), VertexKind::Pants);
            stubs.extend(std::iter::repeat_n(format!("p{i}"), 3));
        }
        for i in 0..disks {
            g.add_vertex(format!("d{i}"), VertexKind::Disk);
            stubs.push(format!("d{i}"));
        }
        for _ in 0..50 {
            stubs.shuffle(rng);
            if stubs.chunks(2).any(|c| c[0] == c[1]) {
                continue;
            }
            let mut h = g.clone();
            for (k, c) in stubs.chunks(2).enumerate() {
                h.add_edge(format!("e{k}"), c[0].clone(), c[1].clone());
            }
            if h.is_connected() {
                return h;
            }
        }
    }
}
