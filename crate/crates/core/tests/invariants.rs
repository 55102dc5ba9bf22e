use altdimap::algebra::{int, rat, BiPoly, ParamSeq16, Rational};
use altdimap::census::corpus_up_to;
use altdimap::invariants::{
    alt_a, alt_c, atutte_all_orderings, ctutte, eti_all_values, eti_closed_form, eti_well_defined,
    plane_gallery, tutte_match, tutte_plane, PlaneGraph,
};
use altdimap::minors::excluded;
use altdimap::structure::is_a_alternating;
use altdimap::{AlternatingDimap, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n = rng.gen_range(-5..=5);
        if n != 0 {
            return rat(n, rng.gen_range(1..=3));
        }
    }
}

fn admissible(rng: &mut ChaCha8Rng) -> [Rational; 16] {
    let wxyz = [(); 4].map(|_| nonzero(rng));
    let free = [(); 8].map(|_| nonzero(rng));
    let p = ParamSeq16::admissible(wxyz, free).unwrap();
    p.rationals().unwrap()
}

fn planar(max: usize) -> Vec<AlternatingDimap> {
    corpus_up_to(max, true)
        .unwrap()
        .into_iter()
        .filter(|d| d.is_planar())
        .collect()
}

#[test]
fn breaking_one_identity_breaks_well_definedness_somewhere() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let corpus = planar(4);
    // a, f, h, j each appear in exactly one identity.
    for (slot, _) in [(4, "a"), (9, "f"), (11, "h"), (13, "j")]
        .iter()
        .cycle()
        .take(20)
    {
        let mut v = admissible(&mut rng);
        v[*slot] += int(1);
        let p = ParamSeq16::from_rationals(&v);
        assert!(!p.check_eti_conditions().unwrap().all());
        let witness = corpus
            .iter()
            .any(|d| eti_all_values(d, &p).unwrap().len() > 1);
        assert!(
            witness,
            "no dimap separates orderings with {slot} perturbed"
        );
        assert!(matches!(
            eti_closed_form(&corpus[0], &p),
            Err(Error::ConditionsViolated(_))
        ));
    }
}

#[test]
fn symbolic_and_numeric_well_definedness_agree_on_admissible_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let p = ParamSeq16::from_rationals(&admissible(&mut rng));
    for d in planar(4) {
        assert!(eti_well_defined(&d, &p).unwrap().well_defined);
    }
}

#[test]
fn not_well_defined_sets_carry_two_witness_orderings() {
    let w = eti_well_defined(excluded("g13").unwrap(), &ParamSeq16::symbolic()).unwrap();
    let (a, b) = w.witness.unwrap();
    assert_ne!(a, b);
    assert!(!w.well_defined);
}

#[test]
fn a_tutte_well_defined_iff_a_alternating() {
    for d in planar(5) {
        assert_eq!(
            atutte_all_orderings(&d).unwrap().is_singleton(),
            is_a_alternating(&d),
            "{d}"
        );
    }
}

#[test]
fn gallery_tutte_polynomials() {
    let want = [
        ("P1", "x"),
        ("P2", "x^2"),
        ("C2", "x + y"),
        ("C3", "x^2 + x + y"),
        ("theta", "x + y + y^2"),
        ("bouquet3", "y^3"),
    ];
    let gallery = plane_gallery();
    for (name, poly) in want {
        let g = &gallery.iter().find(|(n, _)| n == name).unwrap().1;
        assert_eq!(tutte_plane(g), poly.parse::<BiPoly>().unwrap(), "{name}");
    }
}

#[test]
fn digon_constructions_are_mirror_images() {
    for (_, g) in plane_gallery() {
        let (c, a) = (alt_c(&g), alt_a(&g));
        assert_eq!(c.stats().cf, g.edges.len());
        assert_eq!(a.stats().af, g.edges.len());
        assert_eq!(c.num_edges(), 2 * g.edges.len());
    }
}

#[test]
fn matching_reports_structure_and_polynomials() {
    let tri = PlaneGraph::cycle(3);
    let m = tutte_match(&tri, &alt_c(&tri)).unwrap();
    assert!(m.matches() && m.structure.holds() && m.routes_agree());
    assert!(matches!(
        tutte_match(&tri, excluded("g23c").unwrap()),
        Err(Error::NotCAlternating)
    ));
}

/// Two triangles sharing a vertex and two separate doubled triangles have
/// the same polynomial, yet the cores are not isomorphic.
#[test]
fn matching_routes_can_disagree() {
    let g = PlaneGraph::parse(
        &[
            ("o", &["a", "b", "c", "d"]),
            ("p", &["e", "a"]),
            ("q", &["b", "e"]),
            ("r", &["f", "c"]),
            ("s", &["d", "f"]),
        ],
        &[
            ("a", "o", "p"),
            ("e", "p", "q"),
            ("b", "q", "o"),
            ("c", "o", "r"),
            ("f", "r", "s"),
            ("d", "s", "o"),
        ],
    )
    .unwrap();
    let tri = alt_c(&PlaneGraph::cycle(3));
    let d = tri.disjoint_union(&tri);
    let m = tutte_match(&g, &d).unwrap();
    assert!(m.matches());
    assert!(!m.structure.holds());
    assert!(!m.routes_agree());
    assert_eq!(
        ctutte(&d).unwrap(),
        "x^2 + x + y"
            .parse::<BiPoly>()
            .unwrap()
            .mul(&"x^2 + x + y".parse().unwrap())
    );
}
