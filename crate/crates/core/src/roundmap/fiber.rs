use std::collections::HashMap;
use std::fmt;

use super::{is_auxiliary, BorderedDescriptor, Event, RoundMapDescriptor};
use crate::error::{Error, Result};
use crate::repgraph::{RepGraph, VertexKind};
use crate::report::ValidationReport;
use crate::surface::Multigraph;

/// Radial height in half units, so borders can sit halfway between circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Height(pub u32);

impl Height {
    pub fn of_radius(r: u32) -> Self {
        Height(2 * r)
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberVertexKind {
    Triple,
    FreeEnd,
    CapEnd,
    BorderEnd,
}

impl FiberVertexKind {
    pub fn degree(self) -> usize {
        match self {
            FiberVertexKind::Triple => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberVertex {
    pub id: String,
    pub kind: FiberVertexKind,
    pub height: Height,
}

/// One fiber component traced from the event creating it to the event, cap or
/// border ending it. `ends.0` is the outer end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberEdge {
    pub component: String,
    pub ends: (usize, usize),
}

impl FiberEdge {
    pub fn is_auxiliary(&self) -> bool {
        is_auxiliary(&self.component)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiberGraph {
    vertices: Vec<FiberVertex>,
    edges: Vec<FiberEdge>,
}

impl FiberGraph {
    /// Assembles a graph and checks degrees and the radial ordering of edges.
    pub fn new(vertices: Vec<FiberVertex>, edges: Vec<FiberEdge>) -> Result<Self> {
        let g = Self { vertices, edges };
        let report = g.validate();
        if report.valid() {
            Ok(g)
        } else {
            Err(Error::InvalidFiberGraph(report))
        }
    }

    pub fn vertices(&self) -> &[FiberVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[FiberEdge] {
        &self.edges
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn count(&self, kind: FiberVertexKind) -> usize {
        self.vertices.iter().filter(|v| v.kind == kind).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|e| usize::from(e.ends.0 == v) + usize::from(e.ends.1 == v)).sum()
    }

    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].ends.0 == v || self.edges[e].ends.1 == v).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.count(FiberVertexKind::BorderEnd) == 0
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::new(self.vertices.len(), self.edges.iter().map(|e| e.ends).collect())
    }

    pub fn is_connected(&self) -> bool {
        self.to_multigraph().is_connected()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = self.vertices.len();
        let mut ids = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if ids.insert(v.id.as_str(), i).is_some() {
                report.push("duplicate-id", format!("vertex id `{}` repeated", v.id), vec![v.id.clone()]);
            }
        }
        for e in &self.edges {
            let (a, b) = e.ends;
            if a >= n || b >= n {
                report.push("dangling", format!("edge `{}` has an endpoint out of range", e.component), vec![
                    e.component.clone(),
                ]);
                continue;
            }
            if self.vertices[a].height <= self.vertices[b].height {
                report.push(
                    "height",
                    format!(
                        "edge `{}` must run strictly inward, but goes from height {} to {}",
                        e.component, self.vertices[a].height, self.vertices[b].height
                    ),
                    vec![e.component.clone()],
                );
            }
        }
        if !report.valid() {
            return report;
        }
        for (i, v) in self.vertices.iter().enumerate() {
            let d = self.degree(i);
            if d != v.kind.degree() {
                report.push(
                    "degree",
                    format!("{:?} vertex `{}` has degree {}, expected {}", v.kind, v.id, d, v.kind.degree()),
                    vec![v.id.clone()],
                );
            }
            if v.kind == FiberVertexKind::CapEnd && v.height != Height(0) {
                report.push("height", format!("cap `{}` must sit at the centre", v.id), vec![v.id.clone()]);
            }
        }
        report
    }
}

/// Anything [`fiber_graph`] accepts.
pub trait FiberSource {
    fn bordered(&self) -> BorderedDescriptor;
}

impl FiberSource for RoundMapDescriptor {
    fn bordered(&self) -> BorderedDescriptor {
        self.clone().into()
    }
}

impl FiberSource for BorderedDescriptor {
    fn bordered(&self) -> BorderedDescriptor {
        self.clone()
    }
}

/// The Reeb graph of the radial slice: one edge per fiber component, a triple
/// point per index-1 circle, a free end per index-0 circle, a cap per
/// component reaching the centre and a border end per removal.
pub fn fiber_graph<D: FiberSource + ?Sized>(d: &D) -> Result<FiberGraph> {
    let d = d.bordered();
    let report = d.validate();
    if !report.valid() {
        return Err(Error::InvalidDescriptor(report.report));
    }
    let mut vertices = Vec::new();
    let mut start: HashMap<String, usize> = HashMap::new();
    let mut order: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    for c in &d.base.circles {
        let v = vertices.len();
        match d.removal_at(c.radius) {
            Some(rm) => {
                let born = matches!(&c.event, Event::Birth(x) if *x == rm.component);
                let height = if born { Height(2 * c.radius - 1) } else { Height(2 * c.radius + 1) };
                vertices.push(FiberVertex { id: format!("border:{}", rm.border), kind: FiberVertexKind::BorderEnd, height });
            }
            None => {
                let kind = if c.index == 1 { FiberVertexKind::Triple } else { FiberVertexKind::FreeEnd };
                vertices.push(FiberVertex { id: format!("r{}", c.radius), kind, height: Height::of_radius(c.radius) });
            }
        }
        for id in c.event.consumed() {
            let s = start.remove(id).expect("validated descriptor");
            edges.push(FiberEdge { component: id.to_string(), ends: (s, v) });
        }
        for id in c.event.produced() {
            start.insert(id.to_string(), v);
            order.push(id.to_string());
        }
    }
    for id in order {
        if let Some(s) = start.remove(&id) {
            let v = vertices.len();
            vertices.push(FiberVertex { id: format!("cap:{id}"), kind: FiberVertexKind::CapEnd, height: Height(0) });
            edges.push(FiberEdge { component: id, ends: (s, v) });
        }
    }
    FiberGraph::new(vertices, edges).map_err(|e| Error::Internal(format!("fiber graph extraction: {e}")))
}

fn merged_label(a: &str, b: &str) -> String {
    let base = |s: &str| s.rsplit_once('/').filter(|(_, k)| k.parse::<usize>().is_ok()).map(|(p, _)| p.to_string());
    match (base(a), base(b)) {
        (Some(x), Some(y)) if x == y => x,
        _ => format!("{a}+{b}"),
    }
}

/// Recovers a representation graph: prunes the pendant leaves left by radial
/// bend gadgets, smooths the resulting degree-2 junctions, and reads triple
/// points as pants and ends as disks.
pub fn collapse_to_repgraph(k: &FiberGraph) -> Result<RepGraph> {
    if let Some(v) = k.vertices.iter().find(|v| v.kind == FiberVertexKind::BorderEnd) {
        return Err(Error::Bordered(format!(
            "fiber graph has border end `{}`; only closed pieces have a representation graph",
            v.id
        )));
    }
    let n = k.vertices.len();
    let mut alive = vec![true; n];
    let mut edges: Vec<Option<(String, usize, usize)>> =
        k.edges.iter().map(|e| Some((e.component.clone(), e.ends.0, e.ends.1))).collect();
    let incident = |edges: &[Option<(String, usize, usize)>], v: usize| -> Vec<usize> {
        let mut out = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            if let Some((_, a, b)) = e {
                if *a == v {
                    out.push(i);
                }
                if *b == v {
                    out.push(i);
                }
            }
        }
        out
    };

    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let inc = incident(&edges, v);
            if inc.len() == 1 && is_auxiliary(&edges[inc[0]].as_ref().expect("live edge").0) {
                edges[inc[0]] = None;
                alive[v] = false;
                changed = true;
            }
        }
    }
    for v in 0..n {
        if !alive[v] {
            continue;
        }
        let inc = incident(&edges, v);
        if inc.len() != 2 {
            continue;
        }
        if inc[0] == inc[1] {
            return Err(Error::InvalidFiberGraph({
                let mut r = ValidationReport::new();
                r.push("cycle", "fiber graph collapses to a bare circle", vec![k.vertices[v].id.clone()]);
                r
            }));
        }
        let (la, a0, a1) = edges[inc[0]].take().expect("live edge");
        let (lb, b0, b1) = edges[inc[1]].take().expect("live edge");
        let x = if a0 == v { a1 } else { a0 };
        let y = if b0 == v { b1 } else { b0 };
        edges[inc[0]] = Some((merged_label(&la, &lb), x, y));
        alive[v] = false;
    }

    let mut g = RepGraph::new();
    for v in (0..n).filter(|&v| alive[v]) {
        let kind = match k.vertices[v].kind {
            FiberVertexKind::Triple => VertexKind::Pants,
            _ => VertexKind::Disk,
        };
        g.add_vertex(&k.vertices[v].id, kind);
    }
    for (label, a, b) in edges.into_iter().flatten() {
        g.add_edge(&label, &k.vertices[a].id, &k.vertices[b].id);
    }
    let report = crate::repgraph::validate(&g);
    if !report.valid() {
        return Err(Error::InvalidGraph(report));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repgraph::{are_isomorphic, canonical_example};
    use crate::roundmap::{s_map_descriptor, CircleRecord};

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn smap_source_is_a_tree() {
        let b = s_map_descriptor(2, 0, 5, 1, 0).unwrap();
        let k = fiber_graph(&b.base).unwrap();
        assert_eq!(k.count(FiberVertexKind::Triple), 2);
        assert_eq!(k.count(FiberVertexKind::FreeEnd), 3);
        assert_eq!(k.count(FiberVertexKind::CapEnd), 1);
        assert_eq!(k.edges().len(), 5);
        assert!(k.is_connected());
    }

    #[test]
    fn bordered_smap_has_two_border_ends() {
        let b = s_map_descriptor(0, 0, 3, 0, 0).unwrap();
        let k = fiber_graph(&b).unwrap();
        assert_eq!(k.count(FiberVertexKind::BorderEnd), 2);
        assert_eq!(k.count(FiberVertexKind::FreeEnd), 0);
        assert!(collapse_to_repgraph(&k).is_err());
        let outer = k.vertex("border:outer").unwrap();
        assert_eq!(k.vertices()[outer].height, Height(5));
    }

    #[test]
    fn sphere_times_circle() {
        let d = RoundMapDescriptor::from_events(vec![
            Event::Birth(s("a")),
            Event::Split { parent: s("a"), children: [s("b"), s("c")] },
        ]);
        let k = fiber_graph(&d).unwrap();
        assert_eq!(k.count(FiberVertexKind::Triple), 1);
        assert_eq!(k.count(FiberVertexKind::FreeEnd), 1);
        assert_eq!(k.count(FiberVertexKind::CapEnd), 2);
        let g = collapse_to_repgraph(&k).unwrap();
        assert!(are_isomorphic(&g, &canonical_example("s2xs1").unwrap()).is_some());
    }

    #[test]
    fn single_birth_is_lens() {
        let d = RoundMapDescriptor::new(vec![CircleRecord::new(1, Event::Birth(s("a")))]);
        let k = fiber_graph(&d).unwrap();
        assert_eq!(k.edges().len(), 1);
        assert_eq!(k.vertices()[0].kind, FiberVertexKind::FreeEnd);
        assert_eq!(k.vertices()[1].kind, FiberVertexKind::CapEnd);
        let g = collapse_to_repgraph(&k).unwrap();
        assert!(are_isomorphic(&g, &canonical_example("lens").unwrap()).is_some());
    }

    #[test]
    fn height_ordering_is_enforced() {
        let v = |id: &str, kind, h| FiberVertex { id: s(id), kind, height: Height(h) };
        let bad = FiberGraph::new(
            vec![v("a", FiberVertexKind::FreeEnd, 0), v("b", FiberVertexKind::CapEnd, 0)],
            vec![FiberEdge { component: s("x"), ends: (0, 1) }],
        );
        assert!(matches!(bad, Err(Error::InvalidFiberGraph(r)) if r.has("height")));
    }

    #[test]
    fn segment_labels_merge_back() {
        assert_eq!(merged_label("e1/0", "e1/2"), "e1");
        assert_eq!(merged_label("e1", "e2"), "e1+e2");
        assert_eq!(Height(5).to_string(), "5/2");
    }
}
