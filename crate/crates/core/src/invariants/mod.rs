//! Polynomial invariants: extended Tutte invariants in sixteen parameters,
//! the c-Tutte and a-Tutte invariants, and the Tutte polynomial of plane
//! graphs together with the digon constructions relating the two worlds.

mod eti;
mod matching;
mod plane;
mod recurrence;
mod tutte;

pub use eti::{
    eti_all_orderings, eti_all_orderings_with, eti_all_values, eti_closed_form, eti_degenerate,
    eti_derived, eti_derived_with, eti_recurrence, eti_value, eti_value_with, eti_well_defined,
    Regime, WellDefinedness,
};
pub use matching::{structural_report, tutte_match, StructuralReport, TutteMatch};
pub use plane::{
    alt_a, alt_c, connected_plane_graphs, plane_gallery, tutte_edges, tutte_plane, EdgeEnd,
    PlaneEdge, PlaneGraph, PlaneVertex, RawPlaneEdge, RawPlaneGraph, RawPlaneVertex,
};
pub use recurrence::{
    all_orderings, check_ordering, derived, ordering_from_names, ordering_names, DerivedSet,
    EvalOptions, Evaluator, Recurrence, DEFAULT_ORDER_BOUND,
};
pub use tutte::{
    atutte, atutte_all_orderings, atutte_derived, atutte_verified, atutte_zeta, ctutte,
    ctutte_all_orderings, ctutte_derived, ctutte_verified, ctutte_zeta, tutte_all_orderings,
    tutte_recurrence, tutte_zeta_all_orderings, TutteKind, ZetaSign,
};
