//! The trial transforms `D ↦ D^ω ↦ D^ω²`.
//!
//! On the permutation triple the trial is the cyclic shift
//! `(σ₁, σ_ω, σ_ω²) ↦ (σ_ω², σ₁, σ_ω)`: in-stars of `D^ω` are the clockwise
//! faces of `D`, its anticlockwise faces are the in-stars of `D`, and its
//! clockwise faces are the anticlockwise faces of `D`. Edge names are kept.
//!
//! ```
//! use altdimap::dimap::AlternatingDimap;
//! use altdimap::triality::trial;
//!
//! let c3 = AlternatingDimap::parse_rotations(
//!     &[("a", "-x +y"), ("b", "-y +z"), ("c", "-z +x")],
//!     &[("x", "c", "a"), ("y", "a", "b"), ("z", "b", "c")],
//! )
//! .unwrap();
//! let t = trial(&c3);
//! let (s, st) = (c3.stats(), t.stats());
//! assert_eq!((st.is, st.af, st.cf), (s.cf, s.is, s.af));
//! ```

use crate::dimap::{AlternatingDimap, PermutationTriple};
use crate::reduce::EdgeClass;

pub fn trial_triple(t: &PermutationTriple) -> PermutationTriple {
    PermutationTriple {
        labels: t.labels.clone(),
        sigma1: t.sigma_omega2.clone(),
        sigma_omega: t.sigma1.clone(),
        sigma_omega2: t.sigma_omega.clone(),
    }
}

pub fn trial(d: &AlternatingDimap) -> AlternatingDimap {
    AlternatingDimap::from_triple(&trial_triple(&d.to_triple()))
        .expect("shift keeps the product identity")
}

pub fn trial2(d: &AlternatingDimap) -> AlternatingDimap {
    trial(&trial(d))
}

/// `trial` applied `power` times (mod 3).
pub fn trial_pow(d: &AlternatingDimap, power: u8) -> AlternatingDimap {
    (0..power % 3).fold(d.clone(), |acc, _| trial(&acc))
}

pub fn trial_class(c: EdgeClass) -> EdgeClass {
    use EdgeClass::*;
    match c {
        Ultraloop => Ultraloop,
        Proper1Loop => ProperOmegaLoop,
        ProperOmegaLoop => ProperOmega2Loop,
        ProperOmega2Loop => Proper1Loop,
        Proper1Semiloop => ProperOmegaSemiloop,
        ProperOmegaSemiloop => ProperOmega2Semiloop,
        ProperOmega2Semiloop => Proper1Semiloop,
        ProperEdge => ProperEdge,
    }
}

/// Parameter order for `F(D^ω)`.
pub const TRIAL_PARAMS: [&str; 16] = [
    "w", "z", "x", "y", "h", "i", "g", "b", "c", "a", "e", "f", "d", "k", "l", "j",
];

/// Parameter order for `F(D^ω²)`.
pub const TRIAL2_PARAMS: [&str; 16] = [
    "w", "y", "z", "x", "f", "d", "e", "i", "g", "h", "c", "a", "b", "l", "j", "k",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ultraloop_is_fixed() {
        let u = AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap();
        assert!(trial(&u).is_isomorphic(&u));
    }

    #[test]
    fn class_map_has_order_three() {
        use EdgeClass::*;
        for c in [
            Ultraloop,
            Proper1Loop,
            ProperOmegaLoop,
            ProperOmega2Loop,
            Proper1Semiloop,
            ProperOmegaSemiloop,
            ProperOmega2Semiloop,
            ProperEdge,
        ] {
            assert_eq!(trial_class(trial_class(trial_class(c))), c);
        }
        assert_eq!(trial_class(Proper1Semiloop), ProperOmegaSemiloop);
    }
}
