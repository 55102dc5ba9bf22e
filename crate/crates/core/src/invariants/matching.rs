//! Comparing the Tutte polynomial of a plane graph with the c-Tutte
//! polynomial of a c-alternating dimap, both directly and through the
//! block structure of each side.

use std::collections::BTreeSet;

use crate::algebra::BiPoly;
use crate::dimap::{AlternatingDimap, EdgeId};
use crate::error::{Error, Result};
use crate::structure::{c_cycle_blocks, is_c_alternating, multiloops};

use super::plane::{alt_c, tutte_plane, PlaneGraph};
use super::tutte::ctutte;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub graph_bridges: usize,
    pub graph_loops: usize,
    /// `Σ (|r| − 1)` over the c-cycle blocks `r`.
    pub expected_bridges: usize,
    /// `Σ (|s| − cf(s))` over the c-multiloops `s`.
    pub expected_loops: usize,
    /// `alt_c(G′) ≅ D′`, where `G′` drops the loops and bridges of `G` and
    /// `D′` drops the c-cycle blocks and c-multiloops of `D`.
    pub cores_isomorphic: bool,
}

impl StructuralReport {
    pub fn holds(&self) -> bool {
        self.cores_isomorphic
            && self.graph_bridges == self.expected_bridges
            && self.graph_loops == self.expected_loops
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteMatch {
    pub graph_poly: BiPoly,
    pub dimap_poly: BiPoly,
    pub structure: StructuralReport,
}

impl TutteMatch {
    /// `T(G) = T_c(D)`.
    pub fn matches(&self) -> bool {
        self.graph_poly == self.dimap_poly
    }

    /// Whether the structural description gives the same answer as the
    /// polynomials. Structure implies equal polynomials; the converse can
    /// fail when distinct graphs share a Tutte polynomial.
    pub fn routes_agree(&self) -> bool {
        self.matches() == self.structure.holds()
    }
}

pub fn structural_report(g: &PlaneGraph, d: &AlternatingDimap) -> StructuralReport {
    let bridges = g.bridges();
    let loops = g.loops();
    let drop: BTreeSet<usize> = bridges.iter().chain(&loops).copied().collect();
    let core_g = g.without_edges(&drop);

    let cycles = c_cycle_blocks(d);
    // Every loop of a c-alternating dimap belongs to a c-multiloop; a
    // vertex carrying only loops may read as an a-multiloop as a whole
    // while splitting into c-multiloops, and both readings give the same
    // count.
    let mls = multiloops(d);
    let expected_bridges = cycles.iter().map(|r| r.edges.len() - 1).sum();
    let expected_loops = mls.iter().map(|s| s.size() - s.cf(d)).sum();
    let removed: BTreeSet<EdgeId> = cycles
        .iter()
        .flat_map(|r| r.edges.iter().copied())
        .chain(mls.iter().flat_map(|s| s.loops.iter().copied()))
        .collect();
    let keep: BTreeSet<EdgeId> = d.edge_ids().filter(|e| !removed.contains(e)).collect();
    let cores_isomorphic = d
        .induced(&keep)
        .is_some_and(|core_d| alt_c(&core_g).is_isomorphic(&core_d));
    StructuralReport {
        graph_bridges: bridges.len(),
        graph_loops: loops.len(),
        expected_bridges,
        expected_loops,
        cores_isomorphic,
    }
}

/// Compares `T(G)` with `T_c(D)` for a c-alternating `D`.
///
/// ```
/// use altdimap::invariants::{alt_c, tutte_match, PlaneGraph};
///
/// let tri = PlaneGraph::cycle(3);
/// let m = tutte_match(&tri, &alt_c(&tri)).unwrap();
/// assert!(m.matches() && m.routes_agree());
/// ```
pub fn tutte_match(g: &PlaneGraph, d: &AlternatingDimap) -> Result<TutteMatch> {
    if !is_c_alternating(d) {
        return Err(Error::NotCAlternating);
    }
    Ok(TutteMatch {
        graph_poly: tutte_plane(g),
        dimap_poly: ctutte(d)?,
        structure: structural_report(g, d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_against_two_loop_multiloop() {
        let d = AlternatingDimap::parse_rotations(
            &[("v", "+a -b +b -a")],
            &[("a", "v", "v"), ("b", "v", "v")],
        )
        .unwrap();
        let m = tutte_match(&PlaneGraph::bouquet(1), &d).unwrap();
        assert_eq!(m.dimap_poly.to_string(), "y");
        assert!(m.matches() && m.structure.holds());
    }

    #[test]
    fn triangle_against_doubled_two_cycle() {
        let m = tutte_match(&PlaneGraph::cycle(3), &alt_c(&PlaneGraph::cycle(2))).unwrap();
        assert!(!m.matches());
        assert!(m.routes_agree());
    }

    #[test]
    fn equal_polynomials_without_isomorphic_cores() {
        // Two triangles at a vertex against two separate doubled triangles.
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
        let t = alt_c(&PlaneGraph::cycle(3));
        let m = tutte_match(&g, &t.disjoint_union(&t)).unwrap();
        assert!(m.matches());
        assert!(!m.structure.cores_isomorphic);
        assert!(!m.routes_agree());
    }
}
