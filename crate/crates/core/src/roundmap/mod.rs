//! Descriptors of topologically quasi-trivial round fold maps.
//!
//! Singular value circles sit at radii `l, l-1, ..., 1` and are listed
//! outermost first. Each circle carries its fold index and the event it causes
//! on the fiber components of the radial slice when crossed inward:
//! index-0 circles create or remove a component, index-1 circles split one
//! into two or merge two into one. Component ids are tracked so the fiber
//! graph and Reeb space can be recovered from the descriptor alone.
//!
//! Component ids beginning with `~` are auxiliary: they belong to the pendant
//! gadgets inserted where a graph edge has to reverse its radial direction,
//! and [`collapse_to_repgraph`] prunes them.

mod build;
mod fiber;
mod smap;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

pub use build::{build_from_repgraph, build_with, directed_descriptor, BuildOptions};
pub use fiber::{collapse_to_repgraph, fiber_graph, FiberEdge, FiberGraph, FiberVertex, FiberVertexKind, Height};
pub use smap::{s_map_descriptor, smap_clause_counts, SMapType};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

pub const AUX_PREFIX: char = '~';

pub fn is_auxiliary(component: &str) -> bool {
    component.starts_with(AUX_PREFIX)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Event {
    Birth(String),
    Death(String),
    Split { parent: String, children: [String; 2] },
    Merge { parents: [String; 2], child: String },
}

impl Event {
    /// The fold index this event requires.
    pub fn index(&self) -> u8 {
        match self {
            Event::Birth(_) | Event::Death(_) => 0,
            Event::Split { .. } | Event::Merge { .. } => 1,
        }
    }

    /// Components that must exist just outside the circle.
    pub fn consumed(&self) -> Vec<&str> {
        match self {
            Event::Birth(_) => vec![],
            Event::Death(c) => vec![c],
            Event::Split { parent, .. } => vec![parent],
            Event::Merge { parents, .. } => vec![&parents[0], &parents[1]],
        }
    }

    /// Components that exist just inside the circle and not outside.
    pub fn produced(&self) -> Vec<&str> {
        match self {
            Event::Birth(c) => vec![c],
            Event::Death(_) => vec![],
            Event::Split { children, .. } => vec![&children[0], &children[1]],
            Event::Merge { child, .. } => vec![child],
        }
    }

    pub fn components(&self) -> Vec<&str> {
        let mut all = self.consumed();
        all.extend(self.produced());
        all
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Birth(c) => write!(f, "birth {c}"),
            Event::Death(c) => write!(f, "death {c}"),
            Event::Split { parent, children } => write!(f, "split {} {} {}", parent, children[0], children[1]),
            Event::Merge { parents, child } => write!(f, "merge {} {} {}", parents[0], parents[1], child),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRecord {
    pub radius: u32,
    pub index: u8,
    pub event: Event,
}

impl CircleRecord {
    pub fn new(radius: u32, event: Event) -> Self {
        Self { radius, index: event.index(), event }
    }
}

/// Circles ordered outermost (radius `l`) to innermost (radius 1).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundMapDescriptor {
    pub circles: Vec<CircleRecord>,
}

impl RoundMapDescriptor {
    pub fn new(circles: Vec<CircleRecord>) -> Self {
        Self { circles }
    }

    /// Builds a descriptor from events listed outermost first, assigning radii
    /// `l..1` and the matching fold indices.
    pub fn from_events(events: Vec<Event>) -> Self {
        let l = events.len() as u32;
        Self { circles: events.into_iter().enumerate().map(|(k, e)| CircleRecord::new(l - k as u32, e)).collect() }
    }

    pub fn l(&self) -> usize {
        self.circles.len()
    }

    pub fn circle(&self, radius: u32) -> Option<&CircleRecord> {
        self.circles.iter().find(|c| c.radius == radius)
    }

    /// Radii of the index-0 circles, increasing.
    pub fn definite_radii(&self) -> Vec<u32> {
        let mut r: Vec<u32> = self.circles.iter().filter(|c| c.index == 0).map(|c| c.radius).collect();
        r.sort_unstable();
        r
    }

    /// Component sets of the regions just inside each circle, outer to inner;
    /// the last entry is the central disk. Fails on the first inconsistent event.
    pub fn regions(&self) -> Result<Vec<BTreeSet<String>>> {
        let report = validate_descriptor(self);
        if !report.report.valid() {
            return Err(Error::InvalidDescriptor(report.report));
        }
        Ok(report.regions)
    }

    pub fn region_counts(&self) -> Result<Vec<usize>> {
        Ok(self.regions()?.iter().map(BTreeSet::len).collect())
    }

    pub fn central_components(&self) -> Result<BTreeSet<String>> {
        Ok(self.regions()?.pop().unwrap_or_default())
    }
}

/// A descriptor together with the replayed region data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescriptorReport {
    pub report: ValidationReport,
    /// Component sets inside each circle, outer to inner, as far as replay got.
    pub regions: Vec<BTreeSet<String>>,
}

impl DescriptorReport {
    pub fn valid(&self) -> bool {
        self.report.valid()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.regions.iter().map(BTreeSet::len).collect()
    }
}

/// Checks radii, index/event compatibility and component bookkeeping, and
/// replays the events to recover every region's component set.
pub fn validate_descriptor(d: &RoundMapDescriptor) -> DescriptorReport {
    let mut report = ValidationReport::new();
    let l = d.circles.len();
    if l == 0 {
        report.push("empty", "a round map needs at least one singular circle", vec![]);
        return DescriptorReport { report, regions: vec![] };
    }

    for (k, c) in d.circles.iter().enumerate() {
        let expected = (l - k) as u32;
        if c.radius != expected {
            report.push(
                "radius",
                format!("circle #{} has radius {}, expected {} (radii run l..1 outermost first)", k + 1, c.radius, expected),
                vec![c.radius.to_string()],
            );
        }
        if c.index > 1 {
            report.push("index", format!("circle {} has fold index {}, only 0 and 1 occur", c.radius, c.index), vec![
                c.radius.to_string(),
            ]);
        } else if c.index != c.event.index() {
            report.push(
                "index-event",
                format!("circle {} has index {} but event `{}` needs index {}", c.radius, c.index, c.event, c.event.index()),
                vec![c.radius.to_string()],
            );
        }
    }

    let first = &d.circles[0];
    if !matches!(first.event, Event::Birth(_)) || first.index != 0 {
        report.push("outermost", "the outermost circle must be an index-0 birth", vec![first.radius.to_string()]);
    }

    let mut live: BTreeSet<String> = BTreeSet::new();
    let mut used: HashSet<String> = HashSet::new();
    let mut regions = Vec::with_capacity(l);
    for c in &d.circles {
        let mut ok = true;
        for id in c.event.consumed() {
            if !live.contains(id) {
                report.push(
                    "reference",
                    format!("circle {}: component `{}` does not exist outside the circle", c.radius, id),
                    vec![id.to_string()],
                );
                ok = false;
            }
        }
        let consumed = c.event.consumed();
        if consumed.len() == 2 && consumed[0] == consumed[1] {
            report.push("reference", format!("circle {}: merge of `{}` with itself", c.radius, consumed[0]), vec![
                consumed[0].to_string(),
            ]);
            ok = false;
        }
        let produced = c.event.produced();
        if produced.len() == 2 && produced[0] == produced[1] {
            report.push("reference", format!("circle {}: split into two copies of `{}`", c.radius, produced[0]), vec![
                produced[0].to_string(),
            ]);
            ok = false;
        }
        for id in &produced {
            if id.is_empty() || id.chars().any(|ch| ch.is_whitespace() || ch == '#') {
                report.push("bad-id", format!("circle {}: component id `{}` is not an identifier", c.radius, id), vec![
                    id.to_string(),
                ]);
            }
            if used.contains(*id) || consumed.contains(id) {
                report.push(
                    "reference",
                    format!("circle {}: component `{}` is not fresh", c.radius, id),
                    vec![id.to_string()],
                );
                ok = false;
            }
        }
        if !ok {
            report.note(format!("replay stopped at circle {}", c.radius));
            return DescriptorReport { report, regions };
        }
        for id in consumed {
            live.remove(id);
        }
        for id in produced {
            used.insert(id.to_string());
            live.insert(id.to_string());
        }
        if live.is_empty() {
            let place = if c.radius == 1 { "the central disk".to_string() } else { format!("the region inside circle {}", c.radius) };
            report.push("empty-region", format!("{place} has no fiber component"), vec![c.radius.to_string()]);
        }
        regions.push(live.clone());
    }

    if report.valid() {
        let counts: Vec<usize> = regions.iter().map(BTreeSet::len).collect();
        if let Some(t) = smap::recognize(d, &counts) {
            if t.i1 == 0 {
                report.note(
                    "S-map shape with i1 = 0: the inner-band count clause (the one guarded by `i1 = 2`) is not applied; \
                     the central count follows the innermost clause",
                );
            }
        }
    }
    DescriptorReport { report, regions }
}

/// True iff every event, read from outside in, is a birth or a split.
pub fn is_directed(d: &RoundMapDescriptor) -> bool {
    d.circles.iter().all(|c| matches!(c.event, Event::Birth(_) | Event::Split { .. }))
}

/// A component removed near an index-0 circle, leaving a border.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Removal {
    pub component: String,
    pub radius: u32,
    pub border: String,
}

/// A closed descriptor with solid pieces cut out next to definite fold circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderedDescriptor {
    pub base: RoundMapDescriptor,
    pub removals: Vec<Removal>,
    pub smap: Option<SMapType>,
}

impl From<RoundMapDescriptor> for BorderedDescriptor {
    fn from(base: RoundMapDescriptor) -> Self {
        Self { base, removals: vec![], smap: None }
    }
}

impl BorderedDescriptor {
    pub fn border_count(&self) -> usize {
        self.removals.len()
    }

    pub fn validate(&self) -> DescriptorReport {
        let mut out = validate_descriptor(&self.base);
        let mut seen = HashSet::new();
        let mut borders = HashSet::new();
        for r in &self.removals {
            if !seen.insert(r.radius) {
                out.report.push("removal", format!("two removals at circle {}", r.radius), vec![r.component.clone()]);
            }
            if !borders.insert(r.border.as_str()) {
                out.report.push("removal", format!("border id `{}` used twice", r.border), vec![r.border.clone()]);
            }
            match self.base.circle(r.radius) {
                Some(c) if c.index == 0 && c.event.components().contains(&r.component.as_str()) => {}
                Some(_) => out.report.push(
                    "removal",
                    format!("component `{}` is not born or killed at the index-0 circle {}", r.component, r.radius),
                    vec![r.component.clone()],
                ),
                None => out.report.push("removal", format!("no circle at radius {}", r.radius), vec![r.component.clone()]),
            }
        }
        out
    }

    /// Per-radius removal lookup.
    pub(crate) fn removal_at(&self, radius: u32) -> Option<&Removal> {
        self.removals.iter().find(|r| r.radius == radius)
    }
}
