use super::{from_fiber_graph, CircleKind, Region, SimplePolyhedron};
use crate::error::{Error, Result};
use crate::roundmap::{fiber_graph, s_map_descriptor, BorderedDescriptor, Event, RoundMapDescriptor, Removal};

/// Building blocks for assembling closed Reeb spaces from a representation graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PieceKind {
    /// A disk whose boundary is a border.
    DiskPieceMinimal,
    /// `Y x S^1`: three annuli on a triple circle, each ending in a border.
    PantsPieceMinimal,
    ConnectorAnnulus,
    /// Reeb space of an S-map supporting an annulus, with its two borders.
    SMapPiece { i1: u8, i2: u8, l: u32, e1: i8, e2: i8 },
    /// Reeb space of a bordered doubled most standard map on `D^2 x S^1`.
    DiskPieceDoubled(u8),
    /// Reeb space of a map supporting a pair of pants: the fold index of each
    /// of the three clusters, then whether cluster pairs (1,2), (1,3) and
    /// (2,3) sit on the same sheet (`1`) or on different sheets (`2`).
    PantsPieceDoubled([u8; 3], [u8; 3]),
}

impl PieceKind {
    pub fn minimal_smap() -> Self {
        PieceKind::SMapPiece { i1: 0, i2: 0, l: 3, e1: 0, e2: 0 }
    }
}

/// The bordered descriptor of the doubled disk piece: three circles with
/// counts (1, 2, 1), the removed component next to the definite circle that
/// `i` selects.
pub fn doubled_disk_descriptor(i: u8) -> Result<BorderedDescriptor> {
    let s = |x: &str| x.to_string();
    let (events, removal) = match i {
        1 => (
            vec![
                Event::Birth(s("a")),
                Event::Split { parent: s("a"), children: [s("b"), s("c")] },
                Event::Death(s("c")),
            ],
            Removal { component: s("c"), radius: 1, border: s("border") },
        ),
        2 => (
            vec![
                Event::Birth(s("a")),
                Event::Birth(s("b")),
                Event::Merge { parents: [s("a"), s("b")], child: s("c") },
            ],
            Removal { component: s("b"), radius: 2, border: s("border") },
        ),
        _ => return Err(Error::TemplateParameter(format!("doubled disk piece index must be 1 or 2, got {i}"))),
    };
    Ok(BorderedDescriptor { base: RoundMapDescriptor::from_events(events), removals: vec![removal], smap: None })
}

fn doubled_disk(i: u8) -> Result<SimplePolyhedron> {
    from_fiber_graph(&fiber_graph(&doubled_disk_descriptor(i)?)?)
}

/// One sheet of the shell is cut open over each cluster and a reflected
/// doubled disk is attached there: a triple circle on the sheet, a border and
/// a free edge, with two annuli between them.
fn pants_doubled(index: [u8; 3], same: [u8; 3]) -> Result<SimplePolyhedron> {
    for i in index.into_iter().chain(same) {
        if i != 1 && i != 2 {
            return Err(Error::TemplateParameter(format!("pants piece parameters must be 1 or 2, got {i}")));
        }
    }
    let sheet_1 = 0;
    let sheet_2 = if same[0] == 1 { sheet_1 } else { 1 - sheet_1 };
    let sheet_3 = if same[1] == 1 { sheet_1 } else { 1 - sheet_1 };
    if (sheet_2 == sheet_3) != (same[2] == 1) {
        return Err(Error::InconsistentSheets(same[0], same[1], same[2]));
    }
    let sheets = [sheet_1, sheet_2, sheet_3];

    let mut w = SimplePolyhedron::new();
    w.circle("outer.free", CircleKind::FreeEdge).circle("outer.triple", CircleKind::Triple);
    let mut sheet_slots = [vec!["outer.triple".to_string()], vec!["outer.triple".to_string()]];
    let mut regions = vec![Region::new("outer", &["outer.free", "outer.triple"])];
    for k in 0..3 {
        let c = format!("k{}", k + 1);
        let (t, b, f) = (format!("{c}.triple"), format!("{c}.border"), format!("{c}.free"));
        w.circle(&t, CircleKind::Triple).circle(&b, CircleKind::Border).circle(&f, CircleKind::FreeEdge);
        sheet_slots[sheets[k]].push(t.clone());
        if index[k] == 1 {
            regions.push(Region::new(format!("{c}.x"), &[&t, &f]));
            regions.push(Region::new(format!("{c}.y"), &[&t, &b]));
        } else {
            regions.push(Region::new(format!("{c}.y"), &[&b, &t]));
            regions.push(Region::new(format!("{c}.z"), &[&t, &f]));
        }
    }
    let [s1, s2] = sheet_slots;
    w.region(Region { id: "sheet1".into(), genus: 0, slots: s1 });
    w.region(Region { id: "sheet2".into(), genus: 0, slots: s2 });
    for r in regions {
        w.region(r);
    }
    Ok(w)
}

pub fn piece_template(kind: PieceKind) -> Result<SimplePolyhedron> {
    let mut w = SimplePolyhedron::new();
    match kind {
        PieceKind::DiskPieceMinimal => {
            w.circle("b0", CircleKind::Border).region(Region::new("disk", &["b0"]));
        }
        PieceKind::PantsPieceMinimal => {
            w.circle("t", CircleKind::Triple);
            for k in 0..3 {
                let b = format!("b{k}");
                w.circle(&b, CircleKind::Border).region(Region::new(format!("a{k}"), &["t", &b]));
            }
        }
        PieceKind::ConnectorAnnulus => {
            w.circle("b0", CircleKind::Border)
                .circle("b1", CircleKind::Border)
                .region(Region::new("annulus", &["b0", "b1"]));
        }
        PieceKind::SMapPiece { i1, i2, l, e1, e2 } => {
            return from_fiber_graph(&fiber_graph(&s_map_descriptor(i1, i2, l, e1, e2)?)?);
        }
        PieceKind::DiskPieceDoubled(i) => return doubled_disk(i),
        PieceKind::PantsPieceDoubled(index, same) => return pants_doubled(index, same),
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{euler_characteristic, validate_polyhedron};

    #[test]
    fn doubled_disk_shape() {
        for i in [1, 2] {
            let w = piece_template(PieceKind::DiskPieceDoubled(i)).unwrap();
            assert!(validate_polyhedron(&w).valid());
            assert_eq!(euler_characteristic(&w), 1);
            assert_eq!(w.regions.len(), 3);
            for k in [CircleKind::FreeEdge, CircleKind::Triple, CircleKind::Border] {
                assert_eq!(w.count(k), 1, "{i} {k:?}");
            }
            let d = doubled_disk_descriptor(i).unwrap();
            assert_eq!(d.base.region_counts().unwrap(), vec![1, 2, 1]);
        }
        assert!(piece_template(PieceKind::DiskPieceDoubled(3)).is_err());
    }

    #[test]
    fn pants_pieces() {
        let w = piece_template(PieceKind::PantsPieceMinimal).unwrap();
        assert_eq!(euler_characteristic(&w), 0);
        assert_eq!(w.borders().len(), 3);
        for same in [[1, 1, 1], [2, 2, 1], [1, 2, 2], [2, 1, 2]] {
            let w = piece_template(PieceKind::PantsPieceDoubled([1, 2, 1], same)).unwrap();
            assert!(validate_polyhedron(&w).valid(), "{same:?}");
            assert_eq!(w.borders().len(), 3);
            assert_eq!(euler_characteristic(&w), -1);
        }
        for same in [[1, 1, 2], [1, 2, 1], [2, 1, 1], [2, 2, 2]] {
            assert!(matches!(
                piece_template(PieceKind::PantsPieceDoubled([1, 1, 1], same)),
                Err(Error::InconsistentSheets(..))
            ));
        }
    }

    #[test]
    fn smap_piece() {
        let w = piece_template(PieceKind::minimal_smap()).unwrap();
        assert!(validate_polyhedron(&w).valid());
        assert_eq!(w.borders(), vec!["border:outer", "border:inner"]);
        assert_eq!(euler_characteristic(&w), 1);
        let c = piece_template(PieceKind::ConnectorAnnulus).unwrap();
        assert_eq!(euler_characteristic(&c), 0);
    }
}
