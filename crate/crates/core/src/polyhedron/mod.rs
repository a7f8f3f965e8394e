//! Reeb spaces as simple polyhedra without vertices.
//!
//! A polyhedron is a set of compact orientable surfaces (regions) whose
//! boundary circles are attached to singular circles: a free-edge circle takes
//! one sheet, a triple circle three, and a border circle one (it is left open
//! for gluing). Regions are recorded only by genus and by the list of circles
//! their boundary components are attached to.

mod assemble;
mod templates;

use std::collections::{HashMap, HashSet};
use std::fmt;

pub use assemble::{assemble_from_repgraph, embedding_report, AssemblyStyle, EmbeddingTarget};
pub use templates::{piece_template, PieceKind};

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::roundmap::{FiberGraph, FiberVertexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleKind {
    FreeEdge,
    Triple,
    Border,
}

impl CircleKind {
    pub fn sheets(self) -> usize {
        match self {
            CircleKind::Triple => 3,
            _ => 1,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            CircleKind::FreeEdge => "free-edge",
            CircleKind::Triple => "triple",
            CircleKind::Border => "border",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub id: String,
    pub kind: CircleKind,
}

/// A surface of the given genus with one boundary component per slot; each
/// slot names the circle that boundary component is attached to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: String,
    pub genus: usize,
    pub slots: Vec<String>,
}

impl Region {
    pub fn new(id: impl Into<String>, slots: &[&str]) -> Self {
        Self { id: id.into(), genus: 0, slots: slots.iter().map(|s| s.to_string()).collect() }
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.slots.len() as i64
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimplePolyhedron {
    pub circles: Vec<Circle>,
    pub regions: Vec<Region>,
}

impl SimplePolyhedron {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn circle(&mut self, id: impl Into<String>, kind: CircleKind) -> &mut Self {
        self.circles.push(Circle { id: id.into(), kind });
        self
    }

    pub fn region(&mut self, region: Region) -> &mut Self {
        self.regions.push(region);
        self
    }

    pub fn kind_of(&self, circle: &str) -> Option<CircleKind> {
        self.circles.iter().find(|c| c.id == circle).map(|c| c.kind)
    }

    pub fn count(&self, kind: CircleKind) -> usize {
        self.circles.iter().filter(|c| c.kind == kind).count()
    }

    /// Border circle ids in circle order.
    pub fn borders(&self) -> Vec<&str> {
        self.circles.iter().filter(|c| c.kind == CircleKind::Border).map(|c| c.id.as_str()).collect()
    }

    pub fn is_bordered(&self) -> bool {
        self.count(CircleKind::Border) > 0
    }

    /// Copy with every circle and region id prefixed.
    pub fn prefixed(&self, prefix: &str) -> Self {
        let p = |s: &str| format!("{prefix}{s}");
        Self {
            circles: self.circles.iter().map(|c| Circle { id: p(&c.id), kind: c.kind }).collect(),
            regions: self
                .regions
                .iter()
                .map(|r| Region { id: p(&r.id), genus: r.genus, slots: r.slots.iter().map(|s| p(s)).collect() })
                .collect(),
        }
    }

    /// Disjoint union; ids of `other` that collide get a `#2`, `#3`, ... suffix.
    /// Returns the renaming applied to `other`'s circle ids.
    pub fn absorb(&mut self, other: &SimplePolyhedron) -> HashMap<String, String> {
        let mut taken: HashSet<String> =
            self.circles.iter().map(|c| c.id.clone()).chain(self.regions.iter().map(|r| r.id.clone())).collect();
        let mut fresh = |id: &str| {
            let mut name = id.to_string();
            let mut k = 2;
            while taken.contains(&name) {
                name = format!("{id}#{k}");
                k += 1;
            }
            taken.insert(name.clone());
            name
        };
        let mut circles = HashMap::new();
        for c in &other.circles {
            let name = fresh(&c.id);
            circles.insert(c.id.clone(), name.clone());
            self.circles.push(Circle { id: name, kind: c.kind });
        }
        for r in &other.regions {
            let slots = r.slots.iter().map(|s| circles.get(s).cloned().unwrap_or_else(|| s.clone())).collect();
            self.regions.push(Region { id: fresh(&r.id), genus: r.genus, slots });
        }
        circles
    }

    /// Line-oriented listing: circles, regions, then Euler characteristic.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.circles {
            out.push_str(&format!("circle {} {}\n", c.id, c.kind.keyword()));
        }
        for r in &self.regions {
            out.push_str(&format!("region {} genus {} slots {}\n", r.id, r.genus, r.slots.join(" ")));
        }
        out.push_str(&format!(
            "totals: regions {}, free-edge {}, triple {}, border {}\n",
            self.regions.len(),
            self.count(CircleKind::FreeEdge),
            self.count(CircleKind::Triple),
            self.count(CircleKind::Border)
        ));
        out.push_str(&format!("euler: {}\n", euler_characteristic(self)));
        out
    }
}

impl fmt::Display for SimplePolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

pub fn validate_polyhedron(w: &SimplePolyhedron) -> ValidationReport {
    let mut report = ValidationReport::new();
    let mut kinds = HashMap::new();
    for c in &w.circles {
        if kinds.insert(c.id.as_str(), c.kind).is_some() {
            report.push("duplicate-id", format!("circle `{}` declared twice", c.id), vec![c.id.clone()]);
        }
    }
    let mut region_ids = HashSet::new();
    let mut attached: HashMap<&str, usize> = HashMap::new();
    for r in &w.regions {
        if !region_ids.insert(r.id.as_str()) {
            report.push("duplicate-id", format!("region `{}` declared twice", r.id), vec![r.id.clone()]);
        }
        if r.slots.is_empty() {
            report.note(format!("closed-region: region `{}` has no boundary", r.id));
        }
        for s in &r.slots {
            if kinds.contains_key(s.as_str()) {
                *attached.entry(s.as_str()).or_default() += 1;
            } else {
                report.push(
                    "unattached",
                    format!("region `{}` has a boundary slot on unknown circle `{}`", r.id, s),
                    vec![r.id.clone(), s.clone()],
                );
            }
        }
    }
    for c in &w.circles {
        let n = attached.get(c.id.as_str()).copied().unwrap_or(0);
        if n != c.kind.sheets() {
            report.push(
                "sheets",
                format!("{} circle `{}` has {} attached sheets, expected {}", c.kind.keyword(), c.id, n, c.kind.sheets()),
                vec![c.id.clone()],
            );
        }
    }
    let borders = w.borders();
    if !borders.is_empty() {
        report.note(format!("bordered: {}", borders.join(" ")));
    }
    report
}

/// Sum of `2 - 2 genus - slots` over the regions; circles contribute nothing.
pub fn euler_characteristic(w: &SimplePolyhedron) -> i64 {
    w.regions.iter().map(Region::euler).sum()
}

/// `S^1 x K` with disks capping the circles over cap vertices: one region per
/// fiber edge, fused with its cap when it ends at one.
pub fn from_fiber_graph(k: &FiberGraph) -> Result<SimplePolyhedron> {
    let report = k.validate();
    if !report.valid() {
        return Err(Error::InvalidFiberGraph(report));
    }
    let mut w = SimplePolyhedron::new();
    for v in k.vertices() {
        let kind = match v.kind {
            FiberVertexKind::Triple => CircleKind::Triple,
            FiberVertexKind::FreeEnd => CircleKind::FreeEdge,
            FiberVertexKind::BorderEnd => CircleKind::Border,
            FiberVertexKind::CapEnd => continue,
        };
        w.circle(&v.id, kind);
    }
    for e in k.edges() {
        let slots: Vec<String> = [e.ends.0, e.ends.1]
            .into_iter()
            .map(|v| &k.vertices()[v])
            .filter(|v| v.kind != FiberVertexKind::CapEnd)
            .map(|v| v.id.clone())
            .collect();
        w.region(Region { id: e.component.clone(), genus: 0, slots });
    }
    Ok(w)
}

fn border_slot(w: &SimplePolyhedron, b: &str) -> Result<(usize, usize)> {
    match w.kind_of(b) {
        None => return Err(Error::UnknownCircle(b.to_string())),
        Some(CircleKind::Border) => {}
        Some(_) => return Err(Error::NotABorder(b.to_string())),
    }
    for (ri, r) in w.regions.iter().enumerate() {
        if let Some(si) = r.slots.iter().position(|s| s == b) {
            return Ok((ri, si));
        }
    }
    Err(Error::InvalidPolyhedron({
        let mut r = ValidationReport::new();
        r.push("sheets", format!("border `{b}` has no attached region"), vec![b.to_string()]);
        r
    }))
}

/// Glues two borders of one polyhedron. The two boundary components are
/// identified, so their regions fuse: two regions become one with summed
/// genus, and two slots of one region add a handle.
pub fn glue_within(w: &SimplePolyhedron, b1: &str, b2: &str) -> Result<SimplePolyhedron> {
    if b1 == b2 {
        return Err(Error::NotABorder(format!("{b1} (glued to itself)")));
    }
    let (r1, s1) = border_slot(w, b1)?;
    let (r2, s2) = border_slot(w, b2)?;
    let mut out = w.clone();
    out.circles.retain(|c| c.id != b1 && c.id != b2);
    if r1 == r2 {
        let r = &mut out.regions[r1];
        let (hi, lo) = if s1 > s2 { (s1, s2) } else { (s2, s1) };
        r.slots.remove(hi);
        r.slots.remove(lo);
        r.genus += 1;
    } else {
        let mut other = out.regions[r2].clone();
        other.slots.remove(s2);
        let keep = &mut out.regions[r1];
        keep.slots.remove(s1);
        keep.genus += other.genus;
        keep.slots.extend(other.slots);
        out.regions.remove(r2);
    }
    Ok(out)
}

/// Glues border `b1` of `w1` to border `b2` of `w2`.
pub fn glue_borders(w1: &SimplePolyhedron, b1: &str, w2: &SimplePolyhedron, b2: &str) -> Result<SimplePolyhedron> {
    border_slot(w1, b1)?;
    border_slot(w2, b2)?;
    let mut out = w1.clone();
    let renamed = out.absorb(w2);
    glue_within(&out, b1, &renamed[b2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk() -> SimplePolyhedron {
        let mut w = SimplePolyhedron::new();
        w.circle("f", CircleKind::FreeEdge).region(Region::new("d", &["f"]));
        w
    }

    #[test]
    fn unit_disk() {
        let w = disk();
        assert!(validate_polyhedron(&w).valid());
        assert_eq!(euler_characteristic(&w), 1);
    }

    #[test]
    fn triple_needs_three_sheets() {
        let mut w = SimplePolyhedron::new();
        w.circle("t", CircleKind::Triple).region(Region::new("a", &["t"])).region(Region::new("b", &["t"]));
        assert!(validate_polyhedron(&w).has("sheets"));
    }

    #[test]
    fn y_times_circle() {
        let mut w = SimplePolyhedron::new();
        w.circle("t", CircleKind::Triple);
        for k in 0..3 {
            w.circle(format!("b{k}"), CircleKind::Border);
            w.region(Region::new(format!("a{k}"), &["t", &format!("b{k}")]));
        }
        let r = validate_polyhedron(&w);
        assert!(r.valid());
        assert_eq!(w.borders().len(), 3);
        assert_eq!(euler_characteristic(&w), 0);
    }

    #[test]
    fn gluing_fuses_regions() {
        let mut a = SimplePolyhedron::new();
        a.circle("b", CircleKind::Border).region(Region::new("d", &["b"]));
        let s = glue_borders(&a, "b", &a, "b").unwrap();
        assert_eq!(s.regions.len(), 1);
        assert_eq!(s.regions[0].slots.len(), 0);
        assert_eq!(euler_characteristic(&s), 2);
        let r = validate_polyhedron(&s);
        assert!(r.valid());
        assert!(r.notes.iter().any(|n| n.starts_with("closed-region")));
    }

    #[test]
    fn annulus_closed_up_is_a_torus() {
        let mut a = SimplePolyhedron::new();
        a.circle("x", CircleKind::Border).circle("y", CircleKind::Border).region(Region::new("ann", &["x", "y"]));
        let t = glue_within(&a, "x", "y").unwrap();
        assert_eq!(t.regions[0].genus, 1);
        assert_eq!(euler_characteristic(&t), 0);
    }

    #[test]
    fn only_borders_glue() {
        let w = disk();
        assert!(matches!(glue_borders(&w, "f", &w, "f"), Err(Error::NotABorder(_))));
        assert!(matches!(glue_borders(&w, "nope", &w, "f"), Err(Error::UnknownCircle(_))));
    }
}
