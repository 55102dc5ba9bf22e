use altdimap::algebra::{ParamSeq16, PARAM_NAMES};
use altdimap::census::corpus_up_to;
use altdimap::invariants::{eti_derived_with, EvalOptions};
use altdimap::perm;
use altdimap::reduce::{classify_edge, EdgeClass, FreshEdgePolicy};
use altdimap::triality::{trial, trial2, trial_class, trial_pow, TRIAL2_PARAMS, TRIAL_PARAMS};
use altdimap::{AlternatingDimap, EdgeId, Error};

#[test]
fn statistics_rotate_and_genus_is_kept() {
    for d in corpus_up_to(5, false).unwrap() {
        let (s, t) = (d.stats(), trial(&d).stats());
        assert_eq!((t.is, t.af, t.cf), (s.cf, s.is, s.af));
        assert_eq!(t.k, s.k);
        assert_eq!(t.total_genus(), s.total_genus());
    }
}

#[test]
fn trial_squared_is_two_trials() {
    for d in corpus_up_to(4, false).unwrap() {
        let tt = trial2(&d);
        assert!(tt.is_isomorphic(&trial(&trial(&d))));
        assert!(trial_pow(&d, 3).is_isomorphic(&d));
    }
}

#[test]
fn class_table_has_order_three() {
    for c in EdgeClass::ALL {
        assert_eq!(trial_class(trial_class(trial_class(c))), c);
        assert_eq!(trial_class(c).is_triloop(), c.is_triloop());
    }
    assert_eq!(
        trial_class(EdgeClass::Proper1Semiloop),
        EdgeClass::ProperOmegaSemiloop
    );
}

#[test]
fn class_table_matches_reclassification() {
    for d in corpus_up_to(5, true)
        .unwrap()
        .into_iter()
        .filter(|d| d.is_planar())
    {
        let t = trial(&d);
        for e in d.edge_ids() {
            let te = t.find_edge(d.edge_name(e)).unwrap();
            assert_eq!(
                trial_class(classify_edge(&d, e).unwrap()),
                classify_edge(&t, te).unwrap()
            );
        }
    }
}

/// `map[i]` is the index of the parameter that variable `i` of the
/// invariant of `D` becomes in the invariant of the trial.
fn renaming(order: &[&str; 16]) -> [usize; 16] {
    let idx: Vec<usize> = order
        .iter()
        .map(|n| PARAM_NAMES.iter().position(|m| m == n).unwrap())
        .collect();
    std::array::from_fn(|i| idx.iter().position(|&j| j == i).unwrap())
}

fn per_ordering(power: u8, order: &[&str; 16]) {
    let map = renaming(order);
    let sym = ParamSeq16::symbolic();
    let opts = EvalOptions {
        fresh: FreshEdgePolicy::Inherit,
        ..EvalOptions::default()
    };
    let mut checked = 0;
    for d in corpus_up_to(4, true).unwrap() {
        let t = trial_pow(&d, power);
        let es: Vec<EdgeId> = d.edge_ids().collect();
        for p in perm::all(es.len()) {
            let o: Vec<EdgeId> = p.iter().map(|&i| es[i]).collect();
            let ot: Vec<EdgeId> = o
                .iter()
                .map(|&e| t.find_edge(d.edge_name(e)).unwrap())
                .collect();
            match (
                eti_derived_with(&d, &o, &sym, opts),
                eti_derived_with(&t, &ot, &sym, opts),
            ) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(b, a.permute_vars(&map), "{d}");
                    checked += 1;
                }
                (Err(Error::MultiSemiloop(_)), Err(Error::MultiSemiloop(_))) => {}
                (a, b) => panic!("{d}: {a:?} vs {b:?}"),
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn invariant_of_the_trial_permutes_parameters() {
    per_ordering(1, &TRIAL_PARAMS);
}

#[test]
fn invariant_of_the_second_trial_permutes_parameters() {
    per_ordering(2, &TRIAL2_PARAMS);
}

#[test]
fn ultraloop_and_its_trials() {
    let u = AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap();
    assert!(trial(&u).is_isomorphic(&u));
}
