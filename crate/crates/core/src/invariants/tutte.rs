//! The c-Tutte and a-Tutte invariants.

use crate::algebra::{zeta_pow, BiPoly, Cyclotomic6, Ring};
use crate::dimap::{AlternatingDimap, EdgeId};
use crate::error::{Error, Result};
use crate::reduce::EdgeClass;

use super::recurrence::{
    all_orderings, derived, ordering_names, DerivedSet, EvalOptions, Recurrence,
    DEFAULT_ORDER_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TutteKind {
    /// Clockwise digons play the role of graph edges.
    C,
    /// Anticlockwise digons play the role of graph edges.
    A,
}

/// Rows of the c-Tutte (or a-Tutte) recurrence in `(x, y)`.
pub fn tutte_recurrence<R: Ring>(kind: TutteKind, x: &R, y: &R) -> Recurrence<R> {
    let (o, z) = (R::one_val(), R::zero_val());
    Recurrence::from_fn(|class| match (kind, class) {
        (_, EdgeClass::Ultraloop) => [o.clone(), z.clone(), z.clone()],
        (_, EdgeClass::Proper1Loop) => [x.clone(), z.clone(), z.clone()],

        (TutteKind::C, EdgeClass::ProperOmegaLoop) => [y.clone(), z.clone(), z.clone()],
        (TutteKind::C, EdgeClass::ProperOmega2Loop) => [o.clone(), z.clone(), z.clone()],
        (TutteKind::C, EdgeClass::Proper1Semiloop) => [y.clone(), z.clone(), z.clone()],
        (TutteKind::C, EdgeClass::ProperOmegaSemiloop) => [z.clone(), z.clone(), x.clone()],
        (TutteKind::C, EdgeClass::ProperOmega2Semiloop) => [z.clone(), o.clone(), z.clone()],
        (TutteKind::C, EdgeClass::ProperEdge) => [o.clone(), z.clone(), o.clone()],

        (TutteKind::A, EdgeClass::ProperOmegaLoop) => [o.clone(), z.clone(), z.clone()],
        (TutteKind::A, EdgeClass::ProperOmega2Loop) => [y.clone(), z.clone(), z.clone()],
        (TutteKind::A, EdgeClass::Proper1Semiloop) => [y.clone(), z.clone(), z.clone()],
        (TutteKind::A, EdgeClass::ProperOmegaSemiloop) => [z.clone(), z.clone(), o.clone()],
        (TutteKind::A, EdgeClass::ProperOmega2Semiloop) => [z.clone(), x.clone(), z.clone()],
        (TutteKind::A, EdgeClass::ProperEdge) => [o.clone(), o.clone(), z.clone()],
    })
}

fn symbolic(kind: TutteKind) -> Recurrence<BiPoly> {
    tutte_recurrence(kind, &BiPoly::x(), &BiPoly::y())
}

/// `T_c(D; x, y)` along one ordering.
///
/// ```
/// use altdimap::dimap::AlternatingDimap;
/// use altdimap::invariants::ctutte_derived;
///
/// let c3 = AlternatingDimap::parse_rotations(
///     &[("a", "-x +y"), ("b", "-y +z"), ("c", "-z +x")],
///     &[("x", "c", "a"), ("y", "a", "b"), ("z", "b", "c")],
/// )
/// .unwrap();
/// let order: Vec<_> = c3.edge_ids().collect();
/// assert_eq!(ctutte_derived(&c3, &order).unwrap().to_string(), "x^2");
/// ```
pub fn ctutte_derived(d: &AlternatingDimap, order: &[EdgeId]) -> Result<BiPoly> {
    derived(d, order, &symbolic(TutteKind::C), EvalOptions::default())
}

pub fn atutte_derived(d: &AlternatingDimap, order: &[EdgeId]) -> Result<BiPoly> {
    derived(d, order, &symbolic(TutteKind::A), EvalOptions::default())
}

pub fn tutte_all_orderings(d: &AlternatingDimap, kind: TutteKind) -> Result<DerivedSet<BiPoly>> {
    all_orderings(
        d,
        &symbolic(kind),
        EvalOptions::default(),
        DEFAULT_ORDER_BOUND,
    )
}

pub fn ctutte_all_orderings(d: &AlternatingDimap) -> Result<DerivedSet<BiPoly>> {
    tutte_all_orderings(d, TutteKind::C)
}

pub fn atutte_all_orderings(d: &AlternatingDimap) -> Result<DerivedSet<BiPoly>> {
    tutte_all_orderings(d, TutteKind::A)
}

fn common_value(d: &AlternatingDimap, set: DerivedSet<BiPoly>) -> Result<BiPoly> {
    if let Some((a, b)) = set.disagreement() {
        return Err(Error::NotWellDefined {
            first: ordering_names(d, a),
            second: ordering_names(d, b),
        });
    }
    Ok(set.single().cloned().expect("at least one ordering"))
}

/// `T_c(D)` when every ordering agrees. Dimaps recognised as c-alternating
/// are evaluated along one ordering; anything else is checked over all
/// orderings.
pub fn ctutte(d: &AlternatingDimap) -> Result<BiPoly> {
    if crate::structure::is_c_alternating(d) {
        let order: Vec<EdgeId> = d.edge_ids().collect();
        return ctutte_derived(d, &order);
    }
    common_value(d, ctutte_all_orderings(d)?)
}

/// `T_c(D)` checked over every ordering regardless of recognition.
pub fn ctutte_verified(d: &AlternatingDimap) -> Result<BiPoly> {
    common_value(d, ctutte_all_orderings(d)?)
}

/// The a-Tutte counterpart of [`ctutte`].
pub fn atutte(d: &AlternatingDimap) -> Result<BiPoly> {
    if crate::structure::is_a_alternating(d) {
        let order: Vec<EdgeId> = d.edge_ids().collect();
        return atutte_derived(d, &order);
    }
    common_value(d, atutte_all_orderings(d)?)
}

pub fn atutte_verified(d: &AlternatingDimap) -> Result<BiPoly> {
    common_value(d, atutte_all_orderings(d)?)
}

/// Sign of the primitive sixth root used for `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZetaSign {
    /// `x = ζ = (1 + √3 i)/2`, `y = ζ̄`.
    Plus,
    /// `x = ζ̄`, `y = ζ`.
    Minus,
}

impl ZetaSign {
    pub fn point(self) -> (Cyclotomic6, Cyclotomic6) {
        let z = Cyclotomic6::zeta();
        match self {
            ZetaSign::Plus => (z.clone(), z.conj()),
            ZetaSign::Minus => (z.conj(), z),
        }
    }

    fn exponent(self, n: i64) -> i64 {
        match self {
            ZetaSign::Plus => n,
            ZetaSign::Minus => -n,
        }
    }
}

/// `T_c` at the sixth-root point: `x^(is − af)`.
pub fn ctutte_zeta(d: &AlternatingDimap, sign: ZetaSign) -> Cyclotomic6 {
    let s = d.stats();
    zeta_pow(sign.exponent(s.is as i64 - s.af as i64))
}

/// `T_a` at the sixth-root point: `x^(is − cf)`.
pub fn atutte_zeta(d: &AlternatingDimap, sign: ZetaSign) -> Cyclotomic6 {
    let s = d.stats();
    zeta_pow(sign.exponent(s.is as i64 - s.cf as i64))
}

/// Numeric values of `T_c` or `T_a` at the sixth-root point over all
/// orderings.
pub fn tutte_zeta_all_orderings(
    d: &AlternatingDimap,
    kind: TutteKind,
    sign: ZetaSign,
) -> Result<DerivedSet<Cyclotomic6>> {
    let (x, y) = sign.point();
    all_orderings(
        d,
        &tutte_recurrence(kind, &x, &y),
        EvalOptions::default(),
        DEFAULT_ORDER_BOUND,
    )
}
