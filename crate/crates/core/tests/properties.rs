use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roundfold::format::{parse_rgf, parse_rmd, print_rgf, print_rmd};
use roundfold::repgraph::random_connected;
use roundfold::roundmap::FiberVertexKind;
use roundfold::*;

fn graph(seed: u64, max_vertices: usize) -> RepGraph {
    random_connected(&mut ChaCha8Rng::seed_from_u64(seed), max_vertices)
}

/// A random valid descriptor grown event by event.
fn descriptor(seed: u64, len: usize) -> RoundMapDescriptor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut live: Vec<String> = vec!["c0".into()];
    let mut events = vec![Event::Birth("c0".into())];
    let mut next = 1;
    let mut fresh = || {
        next += 1;
        format!("c{}", next - 1)
    };
    for _ in 1..len {
        let pick = |rng: &mut ChaCha8Rng, live: &mut Vec<String>| live.swap_remove(rng.gen_range(0..live.len()));
        let event = match rng.gen_range(0..4) {
            2 if live.len() >= 2 => Event::Death(pick(&mut rng, &mut live)),
            3 if live.len() >= 2 => {
                let a = pick(&mut rng, &mut live);
                let b = pick(&mut rng, &mut live);
                let c = fresh();
                live.push(c.clone());
                Event::Merge { parents: [a, b], child: c }
            }
            1 => {
                let p = pick(&mut rng, &mut live);
                let (a, b) = (fresh(), fresh());
                live.extend([a.clone(), b.clone()]);
                Event::Split { parent: p, children: [a, b] }
            }
            _ => {
                let c = fresh();
                live.push(c.clone());
                Event::Birth(c)
            }
        };
        events.push(event);
    }
    RoundMapDescriptor::from_events(events)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn classification_ignores_labels_and_order(seed in any::<u64>()) {
        let g = graph(seed, 10);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(7));
        let mut vs: Vec<usize> = (0..g.vertices().len()).collect();
        let mut es: Vec<usize> = (0..g.edges().len()).collect();
        vs.shuffle(&mut rng);
        es.shuffle(&mut rng);
        let h = g.permuted(&vs, &es).relabeled(|v| format!("v_{v}"), |e| format!("e_{e}"));
        prop_assert!(are_isomorphic(&g, &h).is_some());
        let (a, b) = (classify(&g).unwrap(), classify(&h).unwrap());
        prop_assert_eq!(a.tier, b.tier);
        prop_assert_eq!(a.genus, b.genus);
        prop_assert_eq!(first_betti(&g).unwrap(), first_betti(&h).unwrap());
    }

    #[test]
    fn subdivisions_and_pendants_keep_genus(seed in any::<u64>(), e in 0usize..64, v in 0usize..64) {
        let m = graph(seed, 8).to_multigraph().unwrap();
        let g0 = genus(&m).unwrap().0;
        let sub = m.subdivide(e % m.edge_count());
        prop_assert_eq!(genus(&sub).unwrap().0, g0);
        let pend = m.with_pendant(v % m.vertex_count());
        prop_assert_eq!(genus(&pend).unwrap().0, g0);
        let (g1, cert) = genus(&pend.subdivide(0)).unwrap();
        prop_assert_eq!(g1, g0);
        prop_assert_eq!(trace_faces(&pend.subdivide(0), &cert.rotation).unwrap(), cert.faces);
    }

    #[test]
    fn counts_change_by_one_per_circle(seed in any::<u64>(), len in 1usize..14) {
        let d = descriptor(seed, len);
        let r = validate_descriptor(&d);
        prop_assert!(r.valid(), "{}", r.report);
        let mut prev = 0i64;
        for (c, n) in d.circles.iter().zip(r.counts()) {
            let delta = match c.event {
                Event::Birth(_) | Event::Split { .. } => 1,
                _ => -1,
            };
            prop_assert_eq!(n as i64 - prev, delta);
            prev = n as i64;
        }
        let k = fiber_graph(&d).unwrap();
        prop_assert_eq!(k.count(FiberVertexKind::CapEnd), *r.counts().last().unwrap());
        prop_assert_eq!(k.count(FiberVertexKind::FreeEnd), d.definite_radii().len());
        prop_assert_eq!(euler_characteristic(&from_fiber_graph(&k).unwrap()), k.count(FiberVertexKind::CapEnd) as i64);
    }

    #[test]
    fn text_formats_round_trip(seed in any::<u64>(), len in 1usize..10) {
        let g = graph(seed, 12);
        prop_assert_eq!(parse_rgf(&print_rgf(&g)).unwrap(), g);
        let d = descriptor(seed, len);
        prop_assert_eq!(parse_rmd(&print_rmd(&d)).unwrap(), d);
    }

    #[test]
    fn built_descriptors_collapse_back(seed in any::<u64>()) {
        let g = graph(seed, 10);
        let d = build_from_repgraph(&g).unwrap();
        prop_assert!(validate_descriptor(&d).valid());
        prop_assert!(d.circles.iter().all(|c| !matches!(c.event, Event::Death(_))));
        let back = collapse_to_repgraph(&fiber_graph(&d).unwrap()).unwrap();
        prop_assert!(are_isomorphic(&back, &g).is_some());
        prop_assert_eq!(is_directed(&d), is_tree(&g).unwrap());
    }
}
