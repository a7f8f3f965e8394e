#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;

use rand::Rng;
use roundfold::{RepGraph, VertexKind};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

/// Valid connected corpus graphs, by file stem.
pub fn corpus_graphs() -> Vec<(String, RepGraph)> {
    corpus_files()
        .into_iter()
        .filter(|p| p.extension().is_some_and(|e| e == "rgf"))
        .filter_map(|p| {
            let g = roundfold::format::parse_rgf(&std::fs::read_to_string(&p).unwrap()).unwrap();
            let ok = roundfold::validate(&g).valid() && g.is_connected();
            ok.then(|| (p.file_stem().unwrap().to_string_lossy().into_owned(), g))
        })
        .collect()
}

/// Writes straight to stdout so the line survives test output capture.
pub fn verdict(criterion: u32, pass: bool, detail: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {criterion}: {} | {detail}", if pass { "PASS" } else { "FAIL" });
}

/// Minimum genus by trying every rotation system. Darts of edge `i` are
/// `2i` (at the first end) and `2i + 1`; rotations fix the first dart at each
/// vertex and permute the rest with Heap's algorithm.
pub fn oracle_genus(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        at[a].push(2 * i);
        at[b].push(2 * i + 1);
    }
    let options: Vec<Vec<Vec<usize>>> = at.iter().map(|darts| cyclic_orders(darts)).collect();
    let darts = 2 * edges.len();
    let mut best_faces = 0;
    let mut pick = vec![0usize; n];
    loop {
        let mut next = vec![0usize; darts];
        for v in 0..n {
            let order = &options[v][pick[v]];
            for k in 0..order.len() {
                next[order[k]] = order[(k + 1) % order.len()];
            }
        }
        let mut seen = vec![false; darts];
        let mut faces = 0;
        for s in 0..darts {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                let partner = if d % 2 == 0 { d + 1 } else { d - 1 };
                d = next[partner];
            }
        }
        best_faces = best_faces.max(faces);
        let mut v = 0;
        while v < n {
            pick[v] += 1;
            if pick[v] < options[v].len() {
                break;
            }
            pick[v] = 0;
            v += 1;
        }
        if v == n {
            break;
        }
    }
    if edges.is_empty() {
        best_faces = 1;
    }
    let euler = n as i64 - edges.len() as i64 + best_faces as i64;
    ((2 - euler) / 2) as usize
}

fn cyclic_orders(darts: &[usize]) -> Vec<Vec<usize>> {
    if darts.len() <= 2 {
        return vec![darts.to_vec()];
    }
    let mut rest = darts[1..].to_vec();
    let mut out = Vec::new();
    heap(rest.len(), &mut rest, &mut |p| {
        let mut o = vec![darts[0]];
        o.extend_from_slice(p);
        out.push(o);
    });
    out
}

fn heap(k: usize, a: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        emit(a);
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, a, emit);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap(k - 1, a, emit);
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every connected loopless multigraph on `1..=max_n` labelled vertices with
/// all degrees at most 3.
pub fn all_small_multigraphs(max_n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut degree = vec![0; n];
        let mut edges = Vec::new();
        extend(0, &pairs, &mut degree, &mut edges, &mut |e| {
            if connected(n, e) {
                out.push((n, e.to_vec()));
            }
        });
    }
    out
}

fn extend(
    k: usize,
    pairs: &[(usize, usize)],
    degree: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if k == pairs.len() {
        emit(edges);
        return;
    }
    let (a, b) = pairs[k];
    let room = (3 - degree[a]).min(3 - degree[b]);
    for m in 0..=room {
        for _ in 0..m {
            edges.push((a, b));
        }
        degree[a] += m;
        degree[b] += m;
        extend(k + 1, pairs, degree, edges, emit);
        degree[a] -= m;
        degree[b] -= m;
        for _ in 0..m {
            edges.pop();
        }
    }
}

/// A uniformly grown random tree representation graph with `pants` pants vertices.
pub fn random_tree<R: Rng>(rng: &mut R, pants: usize) -> RepGraph {
    // grow by replacing a random leaf edge end with a pants vertex and two new disks
    let mut edges: Vec<(String, String)> = vec![("d0".into(), "d1".into())];
    let mut disks = 2;
    for p in 0..pants {
        let i = rng.gen_range(0..edges.len());
        let (a, b) = edges.swap_remove(i);
        let pv = format!("p{p}");
        edges.push((a, pv.clone()));
        edges.push((pv.clone(), b));
        edges.push((pv, format!("d{disks}")));
        disks += 1;
    }
    // every pants vertex now has degree 3; disks have degree 1
    let mut g = RepGraph::new();
    for d in 0..disks {
        g.add_vertex(format!("d{d}"), VertexKind::Disk);
    }
    for p in 0..pants {
        g.add_vertex(format!("p{p}"), VertexKind::Pants);
    }
    for (i, (a, b)) in edges.into_iter().enumerate() {
        g.add_edge(format!("t{i}"), a, b);
    }
    g
}

pub fn multigraph_of(g: &RepGraph) -> (usize, Vec<(usize, usize)>) {
    let m = g.to_multigraph().unwrap();
    (m.vertex_count(), m.edges().to_vec())
}
