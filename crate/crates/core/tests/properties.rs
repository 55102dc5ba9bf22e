use altdimap::algebra::{
    int, rat, BiPoly, Cyclotomic6, Field, MultiPoly16, ParamSeq16, ParamValue, Rational, Ring,
};
use altdimap::dimap::PermutationTriple;
use altdimap::formats::{emit_adm, emit_trin, parse_adm, parse_trin};
use altdimap::triality::{trial, trial_pow};
use altdimap::AlternatingDimap;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic6> {
    (rational(), rational()).prop_map(|(p, q)| Cyclotomic6::new(p, q))
}

fn multi_poly() -> impl Strategy<Value = MultiPoly16> {
    prop::collection::vec((prop::array::uniform16(0u16..3), -4i64..=4), 0..6).prop_map(|ts| {
        ts.into_iter().fold(MultiPoly16::zero(), |acc, (e, c)| {
            acc.add(&MultiPoly16::monomial(e, int(c)))
        })
    })
}

fn bi_poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u16..5, 0u16..5), rational()), 0..6).prop_map(|ts| {
        ts.into_iter().fold(BiPoly::zero(), |acc, ((a, b), c)| {
            acc.add(&BiPoly::monomial([a, b], c))
        })
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Any two permutations of the half-edge set describe a dimap.
fn dimap() -> impl Strategy<Value = AlternatingDimap> {
    (1usize..=6)
        .prop_flat_map(|m| (shuffled(m), shuffled(m)))
        .prop_map(|(s1, sw)| {
            let labels = (1..=s1.len()).map(|i| format!("e{i}")).collect();
            AlternatingDimap::from_triple(&PermutationTriple::from_pair(labels, s1, sw)).unwrap()
        })
}

proptest! {
    #[test]
    fn conjugation_is_a_field_automorphism(a in cyclotomic(), b in cyclotomic()) {
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&a.conj()), Cyclotomic6::new(a.norm(), int(0)));
    }

    #[test]
    fn nonzero_elements_invert(a in cyclotomic()) {
        prop_assume!(!a.is_zero_val());
        prop_assert_eq!(a.mul(&a.inv().unwrap()), Cyclotomic6::one());
    }

    #[test]
    fn polynomials_render_and_parse_back(p in multi_poly(), q in bi_poly()) {
        prop_assert_eq!(p.render().parse::<MultiPoly16>().unwrap(), p);
        prop_assert_eq!(q.render().parse::<BiPoly>().unwrap(), q);
    }

    /// Substituting some parameters and then the rest is the same as
    /// substituting all of them at once.
    #[test]
    fn partial_substitution_then_evaluation(
        p in multi_poly(),
        vals in prop::array::uniform16(rational()),
        keep in prop::array::uniform16(any::<bool>()),
    ) {
        let full = ParamSeq16::from_rationals(&vals);
        let mut partial = ParamSeq16::symbolic();
        for i in (0..16).filter(|&i| keep[i]) {
            partial.set(i, ParamValue::Rational(vals[i].clone()));
        }
        let rest = partial.substitute(&p).unwrap();
        prop_assert_eq!(full.evaluate(&rest).unwrap(), full.evaluate(&p).unwrap());
        prop_assert_eq!(full.substitute(&p).unwrap(), MultiPoly16::constant(p.eval(&vals)));
    }

    #[test]
    fn three_trials_restore_the_dimap(d in dimap()) {
        prop_assert!(trial_pow(&d, 3).is_isomorphic(&d));
        let (s, t) = (d.stats(), trial(&d).stats());
        prop_assert_eq!((t.is, t.af, t.cf), (s.cf, s.is, s.af));
    }

    #[test]
    fn euler_identity(d in dimap()) {
        let s = d.stats();
        prop_assert_eq!(s.is + s.af + s.cf + 2 * s.total_genus() as usize, s.edges + 2 * s.k);
    }

    #[test]
    fn text_formats_round_trip(d in dimap()) {
        let back = parse_adm(&emit_adm(&d)).unwrap();
        prop_assert_eq!(emit_adm(&back), emit_adm(&d));
        let t = d.to_triple();
        let tb = parse_trin(&emit_trin(&t)).unwrap();
        prop_assert!(AlternatingDimap::from_triple(&tb).unwrap().is_isomorphic(&d));
    }

    #[test]
    fn relabeling_keeps_the_canonical_form(d in dimap()) {
        prop_assert_eq!(d.relabeled().canonical_form(), d.canonical_form());
    }
}

#[test]
fn rational_field_inverts() {
    let r = rat(-3, 7);
    assert_eq!(Field::inv(&r).unwrap() * r, int(1));
}
