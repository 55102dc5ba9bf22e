use altdimap::census::corpus_up_to;
use altdimap::dimap::{Dir, RawDigraph};
use altdimap::invariants::{alt_c, connected_plane_graphs};
use altdimap::structure::{
    blocks, c_block_graph, c_union, cutvertices, is_a_alternating, is_alt_c_image,
    is_c_alternating, is_c_simple, Attachment,
};
use altdimap::AlternatingDimap;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn planar(max: usize) -> Vec<AlternatingDimap> {
    corpus_up_to(max, true)
        .unwrap()
        .into_iter()
        .filter(|d| d.is_planar())
        .collect()
}

/// Every rotation read the other way round: clockwise and anticlockwise
/// faces trade places.
fn mirror(d: &AlternatingDimap) -> AlternatingDimap {
    let mut raw: RawDigraph = d.digraph().to_raw();
    for v in &mut raw.vertices {
        v.rot.reverse();
    }
    AlternatingDimap::validate(&raw).unwrap()
}

#[test]
fn cycle_blocks_have_one_face_of_each_kind() {
    let mut seen = 0;
    for d in planar(5) {
        for b in blocks(&d) {
            let Some(bd) = b.dimap(&d) else { continue };
            let s = bd.stats();
            // A lone loop bounds one face of each kind too.
            let cycle = b.is_directed_cycle(&d) || bd.num_edges() == 1 && bd.num_vertices() == 1;
            assert_eq!(cycle, s.af == 1 && s.cf == 1, "{bd}");
            seen += 1;
        }
    }
    assert!(seen > 100);
}

#[test]
fn mirror_swaps_c_and_a_recognition() {
    for d in planar(5) {
        let m = mirror(&d);
        assert_eq!((m.stats().af, m.stats().cf), (d.stats().cf, d.stats().af));
        assert_eq!(is_c_alternating(&d), is_a_alternating(&m), "{d}");
    }
}

#[test]
fn alt_c_images_are_dimaps_with_clockwise_digons_only() {
    for d in planar(5) {
        let digons = d.faces().clockwise.iter().all(|f| f.boundary.len() == 2);
        assert_eq!(is_alt_c_image(&d).is_some(), digons, "{d}");
        if let Some(g) = is_alt_c_image(&d) {
            assert!(alt_c(&g).is_isomorphic(&d));
        }
    }
}

#[test]
fn alt_c_round_trips_plane_graphs() {
    for m in 1..=4 {
        for g in connected_plane_graphs(m) {
            let back = is_alt_c_image(&alt_c(&g)).unwrap();
            assert!(alt_c(&back).is_isomorphic(&alt_c(&g)));
            assert_eq!(back.edges.len(), g.edges.len());
        }
    }
}

#[test]
fn c_unions_stay_c_alternating_and_c_simple() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let pieces: Vec<AlternatingDimap> = planar(3).into_iter().filter(is_c_alternating).collect();
    let simple: Vec<AlternatingDimap> = pieces.iter().filter(|d| is_c_simple(d)).cloned().collect();
    assert!(!simple.is_empty());
    for pool in [&pieces, &simple] {
        for _ in 0..40 {
            let (s1, s2) = (
                pool.choose(&mut rng).unwrap(),
                pool.choose(&mut rng).unwrap(),
            );
            let pick = |d: &AlternatingDimap, rng: &mut ChaCha8Rng| {
                let v = *d.vertex_ids().collect::<Vec<_>>().choose(rng).unwrap();
                let cs: Vec<usize> = (0..d.degree(v))
                    .filter(|&i| d.rotation(v)[i].dir == Dir::In)
                    .collect();
                (v, *cs.choose(rng).unwrap())
            };
            let ((v1, corner1), (v2, corner2)) = (pick(s1, &mut rng), pick(s2, &mut rng));
            let u = c_union(
                s1,
                s2,
                Some(Attachment {
                    v1,
                    corner1,
                    v2,
                    corner2,
                }),
            )
            .unwrap();
            assert!(is_c_alternating(&u));
            if std::ptr::eq(pool, &simple) {
                assert!(is_c_simple(&u));
            }
            assert!(!cutvertices(&u).is_empty());
        }
    }
}

#[test]
fn block_graph_of_a_connected_dimap_is_a_tree() {
    for d in planar(4).into_iter().filter(is_c_alternating) {
        assert!(c_block_graph(&d).unwrap().is_tree(), "{d}");
    }
}
