use super::{BorderedDescriptor, Event, RoundMapDescriptor, Removal};
use crate::error::{Error, Result};

/// Parameters `(i1, i2, l, e1, e2)` of an S-map supporting an annulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SMapType {
    pub i1: u8,
    pub i2: u8,
    pub l: u32,
    pub e1: i8,
    pub e2: i8,
}

impl SMapType {
    pub fn minimal() -> Self {
        Self { i1: 0, i2: 0, l: 3, e1: 0, e2: 0 }
    }

    pub fn check(&self) -> Result<()> {
        let bad = |clause, message: String| Err(Error::SMapParameters { clause, message });
        if self.i1 != 0 && self.i1 != 2 {
            return bad("i1 in {0, 2}", format!("i1 = {}", self.i1));
        }
        if self.i2 != 0 && self.i2 != 2 {
            return bad("i2 in {0, 2}", format!("i2 = {}", self.i2));
        }
        let min = u32::from(self.i1) + u32::from(self.i2) + 3;
        if self.l < min {
            return bad("l >= i1 + i2 + 3", format!("l = {} but i1 + i2 + 3 = {}", self.l, min));
        }
        for (i, e, clause) in [(self.i1, self.e1, "e1"), (self.i2, self.e2, "e2")] {
            match (i, e) {
                (0, 0) | (2, 1) | (2, -1) => {}
                (0, _) => return bad(clause, format!("{clause} must be 0 when the matching i is 0, got {e}")),
                _ => return bad(clause, format!("{clause} must be +1 or -1 when the matching i is 2, got {e}")),
            }
        }
        Ok(())
    }

    /// Radii of the index-0 circles.
    pub fn definite_radii(&self) -> Vec<u32> {
        let mut r = vec![1, 1 + u32::from(self.i1), self.l - u32::from(self.i2), self.l];
        r.sort_unstable();
        r.dedup();
        r
    }

    /// Radius of the inner and outer removed definite circles.
    pub fn removal_radii(&self) -> (u32, u32) {
        let inner = if self.e1 == 1 { 3 } else { 1 };
        let outer = if self.e2 == 1 { self.l - 2 } else { self.l };
        (inner, outer)
    }
}

/// Region component counts, outer to inner, read directly off the count
/// clauses rather than from an event replay.
pub fn smap_clause_counts(i1: u8, i2: u8, l: u32) -> Vec<usize> {
    let (i1, i2, l) = (i64::from(i1), i64::from(i2), i64::from(l));
    // region (r - 1, r) for r = l..1
    (1..=l)
        .rev()
        .map(|r| {
            let n = if r == 1 {
                l - i1 - i2 - 2
            } else if r == l || r == l - i2 {
                1
            } else if i2 == 2 && r == l - 1 {
                2
            } else if r < l - i2 && r > 1 + i1 {
                l - i2 - r + 1
            } else if i1 == 2 && r == 3 {
                l - i1 - i2
            } else if i1 == 2 && r == 2 {
                l - i1 - i2 - 1
            } else {
                unreachable!("every region of an S-map falls under a count clause")
            };
            n as usize
        })
        .collect()
}

fn closed(t: &SMapType) -> (RoundMapDescriptor, Vec<(u32, String)>) {
    let mut next = 0;
    let mut fresh = || {
        let id = format!("c{next}");
        next += 1;
        id
    };
    let mut events = Vec::new();
    let l = t.l;
    let top = fresh();
    events.push(Event::Birth(top.clone()));
    // (radius, component) for the four index-0 circles
    let mut definite = vec![(l, top.clone())];
    let mut spine = top;
    if t.i2 == 2 {
        let (a, b) = (fresh(), fresh());
        events.push(Event::Split { parent: spine, children: [a.clone(), b.clone()] });
        events.push(Event::Death(b.clone()));
        definite.push((l - 2, b));
        spine = a;
    }
    let lowest_split = u32::from(t.i1) + 2;
    let mut sides = Vec::new();
    let mut r = l - u32::from(t.i2) - 1;
    while r >= lowest_split {
        let (a, b) = (fresh(), fresh());
        events.push(Event::Split { parent: spine, children: [a.clone(), b.clone()] });
        sides.push(b);
        spine = a;
        r -= 1;
    }
    if t.i1 == 2 {
        let d = fresh();
        events.push(Event::Birth(d.clone()));
        definite.push((3, d.clone()));
        let e = fresh();
        events.push(Event::Merge { parents: [spine, d], child: e });
    }
    let first = sides.remove(0);
    events.push(Event::Death(first.clone()));
    definite.push((1, first));
    (RoundMapDescriptor::from_events(events), definite)
}

/// The closed source descriptor of an S-map with the two prescribed
/// definite-circle neighbourhoods removed.
pub fn s_map_descriptor(i1: u8, i2: u8, l: u32, e1: i8, e2: i8) -> Result<BorderedDescriptor> {
    let t = SMapType { i1, i2, l, e1, e2 };
    t.check()?;
    let (base, definite) = closed(&t);
    let (inner, outer) = t.removal_radii();
    let component = |radius| definite.iter().find(|(r, _)| *r == radius).map(|(_, c)| c.clone()).expect("definite circle");
    let removals = vec![
        Removal { component: component(inner), radius: inner, border: "inner".into() },
        Removal { component: component(outer), radius: outer, border: "outer".into() },
    ];
    let out = BorderedDescriptor { base, removals, smap: Some(t) };
    let check = out.validate();
    if !check.valid() {
        return Err(Error::Internal(format!("S-map construction produced an invalid descriptor: {}", check.report)));
    }
    Ok(out)
}

/// Recognises the closed S-map shape from the index pattern and counts.
pub(crate) fn recognize(d: &RoundMapDescriptor, counts: &[usize]) -> Option<SMapType> {
    let l = d.l() as u32;
    for i1 in [0u8, 2] {
        for i2 in [0u8, 2] {
            let t = SMapType { i1, i2, l, e1: i8::from(i1 == 2), e2: i8::from(i2 == 2) };
            if t.check().is_err() {
                continue;
            }
            let zeros = t.definite_radii();
            let pattern = d.circles.iter().all(|c| (c.index == 0) == zeros.contains(&c.radius));
            if pattern && smap_clause_counts(i1, i2, l) == counts {
                return Some(t);
            }
        }
    }
    None
}
