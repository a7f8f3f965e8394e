//! Orientable genus of small multigraphs by rotation-system enumeration.
//!
//! Edge `e` owns darts `2e` (at its first end) and `2e + 1` (at its second end).
//! A rotation system fixes a cyclic order of darts at every vertex; faces are the
//! orbits of `d -> rot_succ(twin(d))`, and the genus follows from
//! `V - E + F = 2 - 2g`.
//!
//! [`genus`] searches exhaustively, but first strips pendant trees and
//! suppresses degree-2 vertices. Both operations preserve genus, and the
//! choices at the removed vertices never matter, so the certificate is lifted
//! back with the first cyclic order at each of them.

use crate::error::{Error, Result};

/// Search spaces above this size are refused.
pub const MAX_ROTATION_SYSTEMS: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(edges.iter().all(|&(a, b)| a < vertex_count && b < vertex_count), "edge endpoint out of range");
        Self { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// Vertex owning dart `d`.
    pub fn dart_vertex(&self, d: usize) -> usize {
        let (a, b) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    pub fn twin(d: usize) -> usize {
        d ^ 1
    }

    /// Darts at each vertex in increasing dart id.
    pub fn darts_by_vertex(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for d in 0..self.dart_count() {
            out[self.dart_vertex(d)].push(d);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut count = self.vertex_count;
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Replace edge `e` by a path through a new degree-2 vertex.
    pub fn subdivide(&self, e: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        let (a, b) = edges[e];
        let mid = self.vertex_count;
        edges[e] = (a, mid);
        edges.push((mid, b));
        Multigraph::new(self.vertex_count + 1, edges)
    }

    /// Attach a new leaf to vertex `v`.
    pub fn with_pendant(&self, v: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.push((v, self.vertex_count));
        Multigraph::new(self.vertex_count + 1, edges)
    }
}

/// Cyclic order of darts at each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub cycles: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Darts in increasing id order at every vertex.
    pub fn identity(g: &Multigraph) -> Self {
        Self { cycles: g.darts_by_vertex() }
    }

    fn successor_table(&self, g: &Multigraph) -> Result<Vec<usize>> {
        if self.cycles.len() != g.vertex_count() {
            return Err(Error::InconsistentRotation {
                dart: 0,
                reason: format!("{} vertex cycles for {} vertices", self.cycles.len(), g.vertex_count()),
            });
        }
        let n = g.dart_count();
        let mut succ = vec![usize::MAX; n];
        for (v, cycle) in self.cycles.iter().enumerate() {
            for (i, &d) in cycle.iter().enumerate() {
                if d >= n {
                    return Err(Error::InconsistentRotation { dart: d, reason: "no such dart".into() });
                }
                if g.dart_vertex(d) != v {
                    return Err(Error::InconsistentRotation {
                        dart: d,
                        reason: format!("dart belongs to vertex {}, listed at {}", g.dart_vertex(d), v),
                    });
                }
                if succ[d] != usize::MAX {
                    return Err(Error::InconsistentRotation { dart: d, reason: "listed twice".into() });
                }
                succ[d] = cycle[(i + 1) % cycle.len()];
            }
        }
        if let Some(d) = succ.iter().position(|&s| s == usize::MAX) {
            return Err(Error::InconsistentRotation { dart: d, reason: "missing from its vertex cycle".into() });
        }
        Ok(succ)
    }
}

/// An orientable embedding: the rotation system, its face count and genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    pub rotation: RotationSystem,
    pub faces: usize,
    pub genus: usize,
}

fn count_orbits(succ: &[usize]) -> usize {
    let n = succ.len();
    let mut seen = vec![false; n];
    let mut faces = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = succ[d ^ 1];
        }
    }
    faces
}

/// Number of faces of the embedding given by `r`. An edgeless single vertex
/// has one face.
pub fn trace_faces(g: &Multigraph, r: &RotationSystem) -> Result<usize> {
    let succ = r.successor_table(g)?;
    if g.edge_count() == 0 {
        return Ok(g.vertex_count().min(1));
    }
    Ok(count_orbits(&succ))
}

fn genus_from(v: usize, e: usize, f: usize) -> Result<usize> {
    let twice = 2 + e as i64 - v as i64 - f as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!("Euler relation broken: V={v} E={e} F={f}")));
    }
    Ok((twice / 2) as usize)
}

/// All cyclic orders of `darts` with the first dart fixed, the rest permuted
/// lexicographically by position.
fn cyclic_orders(darts: &[usize]) -> Vec<Vec<usize>> {
    if darts.len() <= 2 {
        return vec![darts.to_vec()];
    }
    // permute positions so the listing does not depend on the dart values
    let mut rest: Vec<usize> = (1..darts.len()).collect();
    let mut out = Vec::new();
    loop {
        let mut cycle = vec![darts[0]];
        cycle.extend(rest.iter().map(|&i| darts[i]));
        out.push(cycle);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Pendant trees removed, degree-2 chains suppressed.
struct Core {
    /// Original vertex of each core vertex.
    vertices: Vec<usize>,
    graph: Multigraph,
    /// For each core dart, the original dart leaving the core vertex.
    origin: Vec<usize>,
}

fn reduce(g: &Multigraph) -> Core {
    let n = g.vertex_count();
    let mut alive_edge = vec![true; g.edge_count()];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let darts = g.darts_by_vertex();

    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if deg[v] != 1 {
            continue;
        }
        let d = *darts[v].iter().find(|&&d| alive_edge[d / 2]).expect("degree-1 vertex has a live dart");
        alive_edge[d / 2] = false;
        deg[v] = 0;
        let w = g.dart_vertex(d ^ 1);
        deg[w] -= 1;
        if deg[w] == 1 {
            stack.push(w);
        }
    }

    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    let mut core_index = vec![usize::MAX; n];
    for (i, &v) in branch.iter().enumerate() {
        core_index[v] = i;
    }

    let mut core_dart = vec![usize::MAX; g.dart_count()];
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    for &v in &branch {
        for &d in &darts[v] {
            if !alive_edge[d / 2] || core_dart[d] != usize::MAX {
                continue;
            }
            // Walk the chain until the next branch vertex.
            let mut cur = d;
            loop {
                let w = g.dart_vertex(cur ^ 1);
                if core_index[w] != usize::MAX {
                    break;
                }
                cur = *darts[w]
                    .iter()
                    .find(|&&x| alive_edge[x / 2] && x != (cur ^ 1))
                    .expect("suppressed vertex has degree 2");
            }
            let end = cur ^ 1;
            let k = edges.len();
            edges.push((core_index[v], core_index[g.dart_vertex(end)]));
            core_dart[d] = 2 * k;
            core_dart[end] = 2 * k + 1;
            origin.push(d);
            origin.push(end);
        }
    }
    Core { vertices: branch.clone(), graph: Multigraph::new(branch.len(), edges), origin }
}

/// Minimum orientable genus and the lexicographically first rotation system
/// (vertex order, then dart order) attaining it.
pub fn genus(g: &Multigraph) -> Result<(usize, EmbeddingCertificate)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let core = reduce(g);
    let darts = g.darts_by_vertex();

    // Core darts at each core vertex, ordered by their original dart id.
    let mut core_darts: Vec<Vec<usize>> = vec![Vec::new(); core.graph.vertex_count()];
    for cd in 0..core.graph.dart_count() {
        core_darts[core.graph.dart_vertex(cd)].push(cd);
    }
    for list in &mut core_darts {
        list.sort_by_key(|&cd| core.origin[cd]);
    }
    let options: Vec<Vec<Vec<usize>>> = core_darts.iter().map(|ds| cyclic_orders(ds)).collect();
    let space: u128 = options.iter().map(|o| o.len() as u128).product();
    if space > MAX_ROTATION_SYSTEMS {
        return Err(Error::SearchTooLarge(space));
    }

    let (cv, ce) = (core.graph.vertex_count(), core.graph.edge_count());
    let mut choice = vec![0usize; cv];
    let mut best: Option<(usize, Vec<usize>)> = None;
    if ce > 0 {
        let mut succ = vec![0usize; core.graph.dart_count()];
        'search: loop {
            for (v, &c) in choice.iter().enumerate() {
                let cycle = &options[v][c];
                for (i, &d) in cycle.iter().enumerate() {
                    succ[d] = cycle[(i + 1) % cycle.len()];
                }
            }
            let f = count_orbits(&succ);
            let gen = genus_from(cv, ce, f)?;
            if best.as_ref().is_none_or(|(b, _)| gen < *b) {
                best = Some((gen, choice.clone()));
                if gen == 0 {
                    break;
                }
            }
            // Odometer, first vertex most significant.
            let mut k = cv;
            loop {
                if k == 0 {
                    break 'search;
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < options[k].len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    }

    // Lift: first cyclic order everywhere, core choices at core vertices.
    let mut cycles: Vec<Vec<usize>> = darts.iter().map(|ds| cyclic_orders(ds).swap_remove(0)).collect();
    if let Some((_, best_choice)) = &best {
        for (cvx, &c) in best_choice.iter().enumerate() {
            let v = core.vertices[cvx];
            let core_cycle = &options[cvx][c];
            let core_order: Vec<usize> = core_cycle.iter().map(|&cd| core.origin[cd]).collect();
            cycles[v] = lift_cycle(&darts[v], &core_order);
        }
    }
    let rotation = RotationSystem { cycles };
    let faces = trace_faces(g, &rotation)?;
    let gen = genus_from(g.vertex_count(), g.edge_count(), faces)?;
    if let Some((core_genus, _)) = &best {
        if *core_genus != gen {
            return Err(Error::Internal(format!("core genus {core_genus} differs from lifted genus {gen}")));
        }
    }
    Ok((gen, EmbeddingCertificate { rotation, faces, genus: gen }))
}

/// The lexicographically first cyclic order of `all` darts whose restriction to
/// the core darts is `core_order`. Non-core darts at a core vertex lead into
/// pendant trees; there are none when the vertex has degree 3 in the core, so
/// this only matters for higher degrees.
fn lift_cycle(all: &[usize], core_order: &[usize]) -> Vec<usize> {
    if core_order.len() == all.len() {
        return core_order.to_vec();
    }
    let mut extra: Vec<usize> = all.iter().copied().filter(|d| !core_order.contains(d)).collect();
    extra.sort_unstable();
    let mut cycle = core_order.to_vec();
    cycle.extend(extra);
    cycle
}

/// Genus 0, with the planar rotation system when it exists.
pub fn is_planar(g: &Multigraph) -> Result<(bool, Option<EmbeddingCertificate>)> {
    let (gen, cert) = genus(g)?;
    Ok(if gen == 0 { (true, Some(cert)) } else { (false, None) })
}
