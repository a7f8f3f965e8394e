use super::{validate_descriptor, CircleRecord, Event, RoundMapDescriptor, AUX_PREFIX};
use crate::error::{Error, Result};
use crate::repgraph::{bfs_order, is_tree, require_valid_connected, RepGraph, VertexKind};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Vertex placed outermost. Defaults to the smallest disk id, or the
    /// smallest pants id when there are no disks.
    pub root: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Vertex(usize),
    /// The bend gadget junction attached to a vertex.
    Gadget(usize),
    /// The auxiliary birth leaf feeding a local-maximum gadget.
    Leaf(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bend {
    None,
    Max,
    Min,
}

fn default_root(g: &RepGraph) -> String {
    let smallest = |kind| g.vertices().iter().filter(|v| v.kind == kind).map(|v| v.id.as_str()).min();
    smallest(VertexKind::Disk).or_else(|| smallest(VertexKind::Pants)).unwrap_or_default().to_string()
}

/// Descriptor of a round map whose fiber graph is a subdivision of `g` with
/// pendant leaves attached. See [`build_with`].
pub fn build_from_repgraph(g: &RepGraph) -> Result<RoundMapDescriptor> {
    build_with(g, &BuildOptions::default())
}

/// Places the vertices on distinct radii in breadth-first order from the root
/// (outermost first). A pants vertex with one edge from outside becomes a
/// split, with two a merge. The root pants of a disk-free graph has no edge
/// from outside, so a gadget above it (an auxiliary birth and a split) feeds
/// its first edge; a pants vertex with all three edges from outside gets a
/// merge below it whose output is an auxiliary cap. Non-root disks are caps.
pub fn build_with(g: &RepGraph, opts: &BuildOptions) -> Result<RoundMapDescriptor> {
    require_valid_connected(g)?;
    let index = g.index();
    let root = opts.root.clone().unwrap_or_else(|| default_root(g));
    if !index.contains_key(root.as_str()) {
        return Err(Error::Internal(format!("root `{root}` is not a vertex")));
    }
    let order = bfs_order(g, &root);
    let n = g.vertices().len();
    let mut rank = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    let ends: Vec<(usize, usize)> =
        g.edges().iter().map(|e| (index[e.ends.0.as_str()], index[e.ends.1.as_str()])).collect();
    let incident: Vec<Vec<usize>> = g.vertices().iter().map(|v| g.incident(&v.id)).collect();

    let bend: Vec<Bend> = (0..n)
        .map(|v| {
            if g.vertices()[v].kind == VertexKind::Disk {
                return Bend::None;
            }
            let higher = incident[v]
                .iter()
                .filter(|&&e| {
                    let (a, b) = ends[e];
                    rank[if a == v { b } else { a }] < rank[v]
                })
                .count();
            match higher {
                0 => Bend::Max,
                3 => Bend::Min,
                _ => Bend::None,
            }
        })
        .collect();

    // Chains of nodes along each edge, from ends.0 to ends.1.
    let chains: Vec<Vec<Node>> = (0..ends.len())
        .map(|e| {
            let (x, y) = ends[e];
            let mut c = vec![Node::Vertex(x)];
            if bend[x] != Bend::None && incident[x][0] == e {
                c.push(Node::Gadget(x));
            }
            if bend[y] != Bend::None && incident[y][0] == e {
                c.push(Node::Gadget(y));
            }
            c.push(Node::Vertex(y));
            c
        })
        .collect();

    let mut emitted: Vec<Node> = Vec::new();
    for &v in &order {
        match bend[v] {
            Bend::Max => emitted.extend([Node::Leaf(v), Node::Gadget(v), Node::Vertex(v)]),
            Bend::Min => emitted.extend([Node::Vertex(v), Node::Gadget(v)]),
            Bend::None => emitted.push(Node::Vertex(v)),
        }
    }
    let pos = |node: Node| emitted.iter().position(|&m| m == node);

    // (sort key, component id, outer node, inner node) per segment
    let mut segments: Vec<((usize, usize), String, Node, Node)> = Vec::new();
    for (e, chain) in chains.iter().enumerate() {
        let id = &g.edges()[e].id;
        for k in 0..chain.len() - 1 {
            let name = if chain.len() == 2 { id.clone() } else { format!("{id}/{k}") };
            let (a, b) = (chain[k], chain[k + 1]);
            let outer_first = match (pos(a), pos(b)) {
                (Some(pa), Some(pb)) => pa < pb,
                (_, None) => true,
                (None, _) => false,
            };
            let (o, i) = if outer_first { (a, b) } else { (b, a) };
            segments.push(((e, k), name, o, i));
        }
    }
    for v in 0..n {
        let aux = format!("{AUX_PREFIX}{}", g.vertices()[v].id);
        match bend[v] {
            Bend::Max => segments.push(((usize::MAX, v), aux, Node::Leaf(v), Node::Gadget(v))),
            // the inner end is a cap, which has no position
            Bend::Min => segments.push(((usize::MAX, v), aux, Node::Gadget(v), Node::Leaf(v))),
            Bend::None => {}
        }
    }
    segments.sort_by_key(|s| s.0);

    let mut events = Vec::new();
    for &node in &emitted {
        let consumed: Vec<String> = segments.iter().filter(|s| s.3 == node).map(|s| s.1.clone()).collect();
        let produced: Vec<String> = segments.iter().filter(|s| s.2 == node).map(|s| s.1.clone()).collect();
        let event = match (consumed.as_slice(), produced.as_slice()) {
            ([], [c]) => Event::Birth(c.clone()),
            ([p], [a, b]) => Event::Split { parent: p.clone(), children: [a.clone(), b.clone()] },
            ([a, b], [c]) => Event::Merge { parents: [a.clone(), b.clone()], child: c.clone() },
            // non-root disk: the incoming component survives to the centre
            ([_], []) => continue,
            _ => {
                return Err(Error::Internal(format!(
                    "layout produced a node with {} incoming and {} outgoing components",
                    consumed.len(),
                    produced.len()
                )))
            }
        };
        events.push(event);
    }
    let l = events.len() as u32;
    let d = RoundMapDescriptor::new(
        events.into_iter().enumerate().map(|(k, ev)| CircleRecord::new(l - k as u32, ev)).collect(),
    );
    let report = validate_descriptor(&d);
    if !report.valid() {
        return Err(Error::Internal(format!("built descriptor is invalid: {}", report.report)));
    }
    Ok(d)
}

/// A descriptor with only births and splits inward. Exists exactly for trees.
pub fn directed_descriptor(g: &RepGraph) -> Result<RoundMapDescriptor> {
    if !is_tree(g)? {
        return Err(Error::NotATree);
    }
    build_from_repgraph(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repgraph::{are_isomorphic, canonical_example, EXAMPLE_NAMES};
    use crate::roundmap::{collapse_to_repgraph, fiber_graph, is_directed, FiberVertexKind};
    use crate::surface::genus;

    #[test]
    fn sphere_times_circle_is_two_circles() {
        let g = canonical_example("s2xs1").unwrap();
        let d = build_from_repgraph(&g).unwrap();
        assert_eq!(d.l(), 2);
        assert_eq!(d.region_counts().unwrap(), vec![1, 2]);
        assert!(is_directed(&d));
        assert_eq!(d.circles[0].index, 0);
        assert_eq!(d.circles[1].index, 1);
        assert_eq!(fiber_graph(&d).unwrap().count(FiberVertexKind::CapEnd), 2);
    }

    #[test]
    fn corpus_round_trips() {
        for name in EXAMPLE_NAMES {
            let g = canonical_example(name).unwrap();
            let d = build_from_repgraph(&g).unwrap();
            let k = fiber_graph(&d).unwrap();
            let back = collapse_to_repgraph(&k).unwrap();
            assert!(are_isomorphic(&back, &g).is_some(), "{name}");
            let g0 = genus(&g.to_multigraph().unwrap()).unwrap().0;
            assert_eq!(genus(&k.to_multigraph()).unwrap().0, g0, "{name}");
        }
    }

    #[test]
    fn theta_uses_both_gadgets() {
        let g = canonical_example("theta").unwrap();
        let d = build_from_repgraph(&g).unwrap();
        assert_eq!(d.region_counts().unwrap(), vec![1, 2, 3, 2, 1]);
        assert!(!is_directed(&d));
    }

    #[test]
    fn rooting_at_a_pants_vertex() {
        let g = canonical_example("s2xs1").unwrap();
        let d = build_with(&g, &BuildOptions { root: Some("p".into()) }).unwrap();
        assert!(is_directed(&d));
        let back = collapse_to_repgraph(&fiber_graph(&d).unwrap()).unwrap();
        assert!(are_isomorphic(&back, &g).is_some());
    }

    #[test]
    fn directed_only_for_trees() {
        let d = directed_descriptor(&canonical_example("lens").unwrap()).unwrap();
        assert_eq!(d.region_counts().unwrap(), vec![1]);
        assert!(matches!(directed_descriptor(&canonical_example("theta").unwrap()), Err(Error::NotATree)));
    }
}
