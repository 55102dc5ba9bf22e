use altdimap::census::corpus_up_to;
use altdimap::dimap::DimapStats;
use altdimap::reduce::{classify_edge, edge_flags, reduce, EdgeClass, ReductionKind};
use altdimap::AlternatingDimap;

fn corpus() -> Vec<AlternatingDimap> {
    corpus_up_to(5, false).unwrap()
}

#[test]
fn reductions_stay_alternating() {
    for d in corpus() {
        for e in d.edge_ids() {
            for kind in ReductionKind::ALL {
                let r = reduce(&d, e, kind).unwrap();
                assert_eq!(r.num_edges() + 1, d.num_edges());
                // Re-validating from names checks alternation and the rotations afresh.
                AlternatingDimap::validate(&r.digraph().to_raw()).unwrap();
            }
        }
    }
}

#[test]
fn triloops_reduce_the_same_way_three_times() {
    for d in corpus() {
        for e in d.edge_ids().filter(|&e| edge_flags(&d, e).is_triloop()) {
            let [a, b, c] = ReductionKind::ALL.map(|k| reduce(&d, e, k).unwrap());
            assert!(a.is_isomorphic(&b) && b.is_isomorphic(&c), "{d}");
        }
    }
}

#[test]
fn no_edge_carries_exactly_two_loop_flags() {
    for d in corpus() {
        for e in d.edge_ids() {
            let f = edge_flags(&d, e);
            let n = [f.one_loop, f.omega_loop, f.omega2_loop]
                .iter()
                .filter(|&&b| b)
                .count();
            assert_ne!(n, 2, "{d}");
        }
    }
}

fn delta(before: &DimapStats, after: &DimapStats) -> [i64; 4] {
    [
        after.k as i64 - before.k as i64,
        after.is as i64 - before.is as i64,
        after.af as i64 - before.af as i64,
        after.cf as i64 - before.cf as i64,
    ]
}

#[test]
fn one_semiloops_split_a_component_or_lower_the_genus() {
    let mut seen = 0;
    for d in corpus() {
        for e in d.edge_ids() {
            if classify_edge(&d, e) != Ok(EdgeClass::Proper1Semiloop) {
                continue;
            }
            seen += 1;
            let (s, r) = (
                d.stats(),
                reduce(&d, e, ReductionKind::One).unwrap().stats(),
            );
            assert!(r.k == s.k + 1 || r.total_genus() < s.total_genus(), "{d}");
        }
    }
    assert!(seen > 0);
}

/// Changes in `(k, is, af, cf)` for the reductions the induction relies on.
#[test]
fn statistic_changes_by_edge_class() {
    use EdgeClass::*;
    use ReductionKind::*;
    let mut checked = 0;
    for d in corpus() {
        let s = d.stats();
        for e in d.edge_ids() {
            let Ok(class) = classify_edge(&d, e) else {
                continue;
            };
            let after = |k| delta(&s, &reduce(&d, e, k).unwrap().stats());
            match class {
                Proper1Loop => assert_eq!(after(One)[1], -1, "{d}"),
                ProperEdge => {
                    assert_eq!(after(One)[1], -1, "{d}");
                    assert_eq!(after(Omega)[3], -1, "{d}");
                    assert_eq!(after(Omega2)[2], -1, "{d}");
                }
                // Off the sphere a 1-reduction may lower the genus instead.
                Proper1Semiloop if s.total_genus() == 0 => {
                    assert_eq!(after(One)[..2], [1, 1], "{d}");
                    assert_eq!(after(Omega)[3], -1, "{d}");
                    assert_eq!(after(Omega2)[2], -1, "{d}");
                }
                _ => continue,
            }
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn every_planar_edge_has_a_class() {
    for d in corpus().into_iter().filter(|d| d.is_planar()) {
        for e in d.edge_ids() {
            assert!(classify_edge(&d, e).is_ok(), "{d}");
        }
    }
}
