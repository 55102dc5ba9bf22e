use std::collections::BTreeSet;

use altdimap::algebra::ParamSeq16;
use altdimap::census::{corpus_up_to, enumerate_dimaps};
use altdimap::invariants::eti_well_defined;
use altdimap::minors::{excluded, has_minor, minors_up_to, reduce_to_subdimap};
use altdimap::reduce::{classify_edge, edge_flags, non_triloops, EdgeClass};
use altdimap::structure::{blocks, is_alt_c_image};
use altdimap::triality::trial;
use altdimap::{AlternatingDimap, EdgeId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn has_triloop(d: &AlternatingDimap) -> bool {
    d.edge_ids().any(|e| edge_flags(d, e).is_triloop())
}

fn has_proper_triloop(d: &AlternatingDimap) -> bool {
    d.edge_ids()
        .any(|e| classify_edge(d, e).is_ok_and(|c| c.is_triloop() && c != EdgeClass::Ultraloop))
}

/// The one-vertex torus dimap whose three loops interleave.
fn torus3() -> AlternatingDimap {
    AlternatingDimap::parse_rotations(
        &[("v", "+a -c +b -a +c -b")],
        &[("a", "v", "v"), ("b", "v", "v"), ("c", "v", "v")],
    )
    .unwrap()
}

#[test]
fn torus3_has_no_triloop() {
    let t = torus3();
    assert_eq!(t.stats().genus, vec![1]);
    assert_eq!(non_triloops(&t).len(), 3);
}

#[test]
fn small_dimaps_have_triloops() {
    for m in 1..=3 {
        for d in enumerate_dimaps(m, false).unwrap().dimaps() {
            assert!(has_triloop(&d) || d.is_isomorphic(&torus3()), "{d:?}");
        }
    }
}

#[test]
fn larger_connected_dimaps_have_a_minor_with_a_proper_triloop() {
    for m in 3..=5 {
        for d in enumerate_dimaps(m, true)
            .unwrap()
            .dimaps()
            .into_iter()
            .filter(|d| d.is_planar())
        {
            let found = minors_up_to(&d, 3)
                .unwrap()
                .values()
                .any(|x| x.dimap.num_edges() >= 3 && has_proper_triloop(&x.dimap));
            assert!(found, "{d:?}");
        }
    }
}

#[test]
fn non_triloop_edges_force_a_small_excluded_minor() {
    let targets = ["g13", "g23a", "g23c"].map(|n| excluded(n).unwrap());
    let mut misses = Vec::new();
    for d in corpus_up_to(5, true).unwrap() {
        if non_triloops(&d).is_empty() {
            continue;
        }
        let mins = minors_up_to(&d, 3).unwrap();
        if !targets
            .iter()
            .any(|h| mins.contains_key(&h.canonical_form()))
        {
            misses.push(d);
        }
    }
    assert_eq!(misses.len(), 1);
    assert!(misses[0].is_isomorphic(&torus3()));
}

#[test]
fn proper_one_semiloops_force_g13() {
    let g13 = excluded("g13").unwrap();
    let (mut seen, mut misses) = (0, 0);
    for d in corpus_up_to(5, true).unwrap() {
        let semi = d
            .edge_ids()
            .any(|e| edge_flags(&d, e).one_semiloop && !edge_flags(&d, e).is_triloop());
        if semi {
            seen += 1;
            if has_minor(&d, g13).unwrap().is_none() {
                // Only toroidal dimaps built on the three-loop torus escape.
                assert!(!d.is_planar());
                assert!(has_minor(&d, &torus3()).unwrap().is_some());
                misses += 1;
            }
        }
    }
    assert!(seen > 0);
    assert_eq!(misses, 4);
}

#[test]
fn well_definedness_passes_to_minors() {
    let p = ParamSeq16::symbolic();
    for d in corpus_up_to(4, true).unwrap() {
        if !non_triloops(&d).is_empty() {
            continue;
        }
        for m in minors_up_to(&d, 0).unwrap().values() {
            assert!(
                eti_well_defined(&m.dimap, &p).unwrap().well_defined,
                "{:?}",
                m.trace
            );
        }
    }
}

#[test]
fn triality_maps_g13_to_g23a() {
    assert!(trial(excluded("g13").unwrap()).is_isomorphic(excluded("g23a").unwrap()));
}

#[test]
fn awkward_blocks_contain_g351() {
    let g351 = excluded("g351").unwrap();
    let mut seen = 0;
    for d in corpus_up_to(5, true)
        .unwrap()
        .into_iter()
        .filter(|d| d.is_planar())
    {
        for b in blocks(&d) {
            if b.is_loop(&d) || b.is_directed_cycle(&d) {
                continue;
            }
            let Some(bd) = b.dimap(&d) else { continue };
            if is_alt_c_image(&bd).is_some() {
                continue;
            }
            seen += 1;
            assert!(has_minor(&bd, g351).unwrap().is_some(), "{bd:?}");
        }
    }
    assert!(seen > 0);
}

#[test]
fn loop_of_g13_is_reachable() {
    let g13 = excluded("g13").unwrap();
    for e in g13.edge_ids() {
        let Some(h) = g13.induced(&BTreeSet::from([e])) else {
            continue;
        };
        let (y, z) = reduce_to_subdimap(g13, &h).unwrap();
        assert_eq!(y.len() + z.len(), 2);
    }
}

fn random_subdimap(d: &AlternatingDimap, rng: &mut ChaCha8Rng) -> Option<AlternatingDimap> {
    let mut edges: Vec<EdgeId> = d.edge_ids().collect();
    edges.shuffle(rng);
    let k = rng.gen_range(0..=edges.len());
    d.induced(&edges[..k].iter().copied().collect())
}

#[test]
fn random_subdimaps_are_reachable_with_two_reductions() {
    let corpus = corpus_up_to(5, true).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 100 {
        let g = corpus.choose(&mut rng).unwrap();
        let Some(h) = random_subdimap(g, &mut rng) else {
            continue;
        };
        let (y, z) = reduce_to_subdimap(g, &h).unwrap();
        assert_eq!(y.len() + z.len(), g.num_edges() - h.num_edges());
        done += 1;
    }
}
