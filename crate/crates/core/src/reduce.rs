//! Edge classification and the three reduction operations.
//!
//! ```
//! use altdimap::dimap::AlternatingDimap;
//! use altdimap::reduce::{classify_edge, reduce, EdgeClass, ReductionKind};
//!
//! let digon = AlternatingDimap::parse_rotations(
//!     &[("v", "-e +f"), ("u", "-f +e")],
//!     &[("e", "u", "v"), ("f", "v", "u")],
//! )
//! .unwrap();
//! let e = digon.find_edge("e").unwrap();
//! assert_eq!(classify_edge(&digon, e).unwrap(), EdgeClass::Proper1Loop);
//! let u = reduce(&digon, e, ReductionKind::One).unwrap();
//! assert_eq!(u.num_edges(), 1);
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::dimap::{AlternatingDimap, EdgeId, EmbeddedDigraph, FaceKind, HalfEdge};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    Ultraloop,
    Proper1Loop,
    ProperOmegaLoop,
    ProperOmega2Loop,
    Proper1Semiloop,
    ProperOmegaSemiloop,
    ProperOmega2Semiloop,
    ProperEdge,
}

impl EdgeClass {
    pub const ALL: [EdgeClass; 8] = [
        EdgeClass::Ultraloop,
        EdgeClass::Proper1Loop,
        EdgeClass::ProperOmegaLoop,
        EdgeClass::ProperOmega2Loop,
        EdgeClass::Proper1Semiloop,
        EdgeClass::ProperOmegaSemiloop,
        EdgeClass::ProperOmega2Semiloop,
        EdgeClass::ProperEdge,
    ];

    pub fn is_triloop(self) -> bool {
        matches!(
            self,
            EdgeClass::Ultraloop
                | EdgeClass::Proper1Loop
                | EdgeClass::ProperOmegaLoop
                | EdgeClass::ProperOmega2Loop
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::Ultraloop => "ultraloop",
            EdgeClass::Proper1Loop => "proper 1-loop",
            EdgeClass::ProperOmegaLoop => "proper w-loop",
            EdgeClass::ProperOmega2Loop => "proper w2-loop",
            EdgeClass::Proper1Semiloop => "proper 1-semiloop",
            EdgeClass::ProperOmegaSemiloop => "proper w-semiloop",
            EdgeClass::ProperOmega2Semiloop => "proper w2-semiloop",
            EdgeClass::ProperEdge => "proper edge",
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The six independent loop and semiloop predicates of an edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EdgeFlags {
    pub one_loop: bool,
    pub omega_loop: bool,
    pub omega2_loop: bool,
    pub one_semiloop: bool,
    pub omega_semiloop: bool,
    pub omega2_semiloop: bool,
}

impl EdgeFlags {
    pub fn is_triloop(&self) -> bool {
        self.one_loop || self.omega_loop || self.omega2_loop
    }
}

/// What to do with an edge that is a proper semiloop of several types.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SemiloopPolicy {
    #[default]
    Refuse,
    /// Prefer 1, then ω, then ω².
    Precedence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionKind {
    One,
    Omega,
    Omega2,
    /// Any of the three; only meaningful for triloops.
    Star,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 3] = [
        ReductionKind::One,
        ReductionKind::Omega,
        ReductionKind::Omega2,
    ];

    /// Exponent of ω.
    pub fn power(self) -> u8 {
        match self {
            ReductionKind::One | ReductionKind::Star => 0,
            ReductionKind::Omega => 1,
            ReductionKind::Omega2 => 2,
        }
    }

    pub fn from_power(p: u8) -> Self {
        [
            ReductionKind::One,
            ReductionKind::Omega,
            ReductionKind::Omega2,
        ][(p % 3) as usize]
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ReductionKind::One => "1",
            ReductionKind::Omega => "w",
            ReductionKind::Omega2 => "w2",
            ReductionKind::Star => "*",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "1" => Some(ReductionKind::One),
            "w" | "omega" => Some(ReductionKind::Omega),
            "w2" | "omega2" => Some(ReductionKind::Omega2),
            "*" | "star" => Some(ReductionKind::Star),
            _ => None,
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Removes both slots of `e` and `f`, where `f` is the left or right
/// successor of `e`. Vertices left without slots stay as isolated vertices
/// so that the component count sees them.
pub fn delete_pair(d: &AlternatingDimap, e: EdgeId, f: EdgeId) -> Result<EmbeddedDigraph> {
    if e == f || (d.left(e) != f && d.right(e) != f) {
        return Err(Error::NotSuccessorPair(
            d.edge_name(e).into(),
            d.edge_name(f).into(),
        ));
    }
    let mut g = d.digraph().clone();
    for x in [e, f] {
        g.remove_slot(HalfEdge::out(x));
        g.remove_slot(HalfEdge::inc(x));
        g.drop_edge(x);
    }
    Ok(g)
}

fn splits(d: &AlternatingDimap, e: EdgeId, f: EdgeId) -> bool {
    let g = delete_pair(d, e, f).expect("successor pair");
    let k0 = d.components().len();
    let g0 = d.total_genus();
    g.components().len() > k0 || g.total_genus() < g0
}

pub fn edge_flags(d: &AlternatingDimap, e: EdgeId) -> EdgeFlags {
    let (l, r) = (d.left(e), d.right(e));
    EdgeFlags {
        one_loop: d.sigma1(e) == e,
        omega_loop: l == e,
        omega2_loop: r == e,
        one_semiloop: d.tail(e) == d.head(e),
        omega_semiloop: r == e || splits(d, e, r),
        omega2_semiloop: l == e || splits(d, e, l),
    }
}

pub fn classify_edge(d: &AlternatingDimap, e: EdgeId) -> Result<EdgeClass> {
    classify_edge_with(d, e, SemiloopPolicy::Refuse)
}

pub fn classify_edge_with(
    d: &AlternatingDimap,
    e: EdgeId,
    policy: SemiloopPolicy,
) -> Result<EdgeClass> {
    let (l, r, s) = (d.left(e), d.right(e), d.sigma1(e));
    let loops = [s == e, l == e, r == e];
    match loops {
        [true, true, true] => return Ok(EdgeClass::Ultraloop),
        [true, false, false] => return Ok(EdgeClass::Proper1Loop),
        [false, true, false] => return Ok(EdgeClass::ProperOmegaLoop),
        [false, false, true] => return Ok(EdgeClass::ProperOmega2Loop),
        [false, false, false] => {}
        _ => unreachable!("two loop flags force the third"),
    }
    let semi = [d.tail(e) == d.head(e), splits(d, e, r), splits(d, e, l)];
    let count = semi.iter().filter(|&&b| b).count();
    if count > 1 && policy == SemiloopPolicy::Refuse {
        return Err(Error::MultiSemiloop(d.edge_name(e).into()));
    }
    Ok(match semi {
        [true, _, _] => EdgeClass::Proper1Semiloop,
        [false, true, _] => EdgeClass::ProperOmegaSemiloop,
        [false, false, true] => EdgeClass::ProperOmega2Semiloop,
        [false, false, false] => EdgeClass::ProperEdge,
    })
}

/// Result of a reduction with enough bookkeeping to update an ordering.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub dimap: AlternatingDimap,
    /// Edges gone besides the reduced one.
    pub removed: Option<EdgeId>,
    /// The edge created by an ω- or ω²-reduction.
    pub created: Option<EdgeId>,
}

pub fn reduce(d: &AlternatingDimap, e: EdgeId, kind: ReductionKind) -> Result<AlternatingDimap> {
    Ok(reduce_tracked(d, e, kind)?.dimap)
}

pub fn reduce_tracked(d: &AlternatingDimap, e: EdgeId, kind: ReductionKind) -> Result<Reduction> {
    if !d.has_edge(e) {
        return Err(Error::UnknownEdge(e.to_string()));
    }
    let (l, r) = (d.left(e), d.right(e));
    let mut g = d.digraph().clone();
    let done = |mut g: EmbeddedDigraph, removed, created| {
        g.normalize();
        Ok(Reduction {
            dimap: AlternatingDimap::from_digraph_unchecked(g),
            removed,
            created,
        })
    };
    if l == e || r == e {
        delete_edge(&mut g, e);
        return done(g, None, None);
    }
    let kind = match kind {
        ReductionKind::Star if d.sigma1(e) == e => ReductionKind::One,
        ReductionKind::Star => return Err(Error::NotATriloop(d.edge_name(e).into())),
        k => k,
    };
    match kind {
        ReductionKind::One if d.tail(e) != d.head(e) => {
            contract(&mut g, e);
            done(g, None, None)
        }
        ReductionKind::One => {
            split(&mut g, e);
            done(g, None, None)
        }
        ReductionKind::Omega => {
            let c = replace_pair(&mut g, e, l);
            done(g, Some(l), Some(c))
        }
        ReductionKind::Omega2 => {
            let c = replace_pair(&mut g, e, r);
            done(g, Some(r), Some(c))
        }
        ReductionKind::Star => unreachable!(),
    }
}

fn delete_edge(g: &mut EmbeddedDigraph, e: EdgeId) {
    let v = g.head(e);
    let u = g.tail(e);
    g.remove_slot(HalfEdge::out(e));
    g.remove_slot(HalfEdge::inc(e));
    g.drop_edge(e);
    for x in [u, v] {
        if g.vertex_ids().any(|y| y == x) && g.rotation(x).is_empty() {
            g.drop_vertex(x);
        }
    }
}

/// Contracts the non-loop edge `e = uv` into `u`.
fn contract(g: &mut EmbeddedDigraph, e: EdgeId) {
    let (u, v) = (g.tail(e), g.head(e));
    let rv = g.rotation(v).to_vec();
    let i = g.position(HalfEdge::inc(e));
    let d = rv.len();
    let insert: Vec<HalfEdge> = (1..d).map(|k| rv[(i + k) % d]).collect();
    let j = g.position(HalfEdge::out(e));
    let ru = g.rotation_mut(u);
    ru.splice(j..=j, insert.iter().copied());
    for h in insert {
        let edge = g.edge_mut(h.edge);
        match h.dir {
            crate::dimap::Dir::Out => edge.tail = u,
            crate::dimap::Dir::In => edge.head = u,
        }
    }
    g.drop_edge(e);
    g.drop_vertex(v);
}

/// Removes the loop `e` at `v` and splits `v` along it. The slots after the
/// outgoing slot of `e` (anticlockwise, up to its incoming slot) move to a
/// new vertex; the rest stay at `v`.
fn split(g: &mut EmbeddedDigraph, e: EdgeId) {
    let v = g.head(e);
    let rot = g.rotation(v).to_vec();
    let d = rot.len();
    let o = g.position(HalfEdge::out(e));
    let i = g.position(HalfEdge::inc(e));
    let arc = |from: usize, to: usize| -> Vec<HalfEdge> {
        let mut out = Vec::new();
        let mut k = (from + 1) % d;
        while k != to {
            out.push(rot[k]);
            k = (k + 1) % d;
        }
        out
    };
    let moved = arc(o, i);
    let stay = arc(i, o);
    let name = g.fresh_vertex_name(g.vertex_name(v));
    let w = g.add_vertex(name, moved.clone());
    for h in moved {
        let edge = g.edge_mut(h.edge);
        match h.dir {
            crate::dimap::Dir::Out => edge.tail = w,
            crate::dimap::Dir::In => edge.head = w,
        }
    }
    *g.rotation_mut(v) = stay;
    g.drop_edge(e);
}

/// Deletes `e` and its successor `s` (both leave `head(e)`), and joins
/// `tail(e)` to `head(s)` by a new edge in their slots.
fn replace_pair(g: &mut EmbeddedDigraph, e: EdgeId, s: EdgeId) -> EdgeId {
    let (u, v, n) = (g.tail(e), g.head(e), g.head(s));
    let name = g.fresh_edge_name(g.edge_name(s));
    let c = g.add_edge(name, u, n);
    let oe = g.position(HalfEdge::out(e));
    g.rotation_mut(u)[oe] = HalfEdge::out(c);
    let is = g.position(HalfEdge::inc(s));
    g.rotation_mut(n)[is] = HalfEdge::inc(c);
    g.remove_slot(HalfEdge::inc(e));
    g.remove_slot(HalfEdge::out(s));
    g.drop_edge(e);
    g.drop_edge(s);
    if g.rotation(v).is_empty() {
        g.drop_vertex(v);
    }
    c
}

/// Where the edge created by an ω- or ω²-reduction goes in an ordering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FreshEdgePolicy {
    /// Appended after every surviving edge.
    #[default]
    Append,
    /// Takes the position of the successor edge it replaces.
    Inherit,
    /// Any position. Single-ordering helpers treat this as `Append`; the
    /// invariant sweeps try every position.
    Anywhere,
}

/// Reduces the first edge of `order` and returns the reduced dimap with
/// the restricted ordering.
pub fn reduce_first(
    d: &AlternatingDimap,
    order: &[EdgeId],
    kind: ReductionKind,
    policy: FreshEdgePolicy,
) -> Result<(AlternatingDimap, Vec<EdgeId>)> {
    let (&e0, rest) = order.split_first().ok_or(Error::NotFound)?;
    let red = reduce_tracked(d, e0, kind)?;
    Ok((
        red.dimap,
        restrict_order(rest, &red.removed, red.created, policy),
    ))
}

/// Like [`reduce_first`], but returns every ordering the policy allows.
pub fn reduce_first_placements(
    d: &AlternatingDimap,
    order: &[EdgeId],
    kind: ReductionKind,
    policy: FreshEdgePolicy,
) -> Result<(AlternatingDimap, Vec<Vec<EdgeId>>)> {
    let (&e0, rest) = order.split_first().ok_or(Error::NotFound)?;
    let red = reduce_tracked(d, e0, kind)?;
    let orders = match (policy, red.created) {
        (FreshEdgePolicy::Anywhere, Some(c)) => {
            let base = restrict_order(rest, &red.removed, None, policy);
            (0..=base.len())
                .map(|i| {
                    let mut o = base.clone();
                    o.insert(i, c);
                    o
                })
                .collect()
        }
        _ => vec![restrict_order(rest, &red.removed, red.created, policy)],
    };
    Ok((red.dimap, orders))
}

pub(crate) fn restrict_order(
    rest: &[EdgeId],
    removed: &Option<EdgeId>,
    created: Option<EdgeId>,
    policy: FreshEdgePolicy,
) -> Vec<EdgeId> {
    let mut out = Vec::with_capacity(rest.len());
    for &x in rest {
        if Some(x) == *removed {
            if policy == FreshEdgePolicy::Inherit {
                out.extend(created);
            }
        } else {
            out.push(x);
        }
    }
    if policy != FreshEdgePolicy::Inherit {
        out.extend(created);
    }
    out
}

/// Replaces `e = uv` by `u → w → v` through a new degree-two vertex `w`.
/// The first half keeps the identity of `e`.
pub fn subdivide(d: &AlternatingDimap, e: EdgeId) -> AlternatingDimap {
    let mut g = d.digraph().clone();
    let v = g.head(e);
    let wname = g.fresh_vertex_name(g.vertex_name(v));
    let w = g.add_vertex(wname, Vec::new());
    let ename = g.fresh_edge_name(g.edge_name(e));
    let f = g.add_edge(ename, w, v);
    let i = g.position(HalfEdge::inc(e));
    g.rotation_mut(v)[i] = HalfEdge::inc(f);
    g.edge_mut(e).head = w;
    *g.rotation_mut(w) = vec![HalfEdge::inc(e), HalfEdge::out(f)];
    g.normalize();
    AlternatingDimap::from_digraph_unchecked(g)
}

/// Contracts non-loop edges of oversized faces of the given kind until
/// every such face has size two. The face count is unchanged.
pub fn contract_faces_to_digons(d: &AlternatingDimap, kind: FaceKind) -> Result<AlternatingDimap> {
    let faces_of = |d: &AlternatingDimap| {
        let f = d.faces();
        match kind {
            FaceKind::Clockwise => f.clockwise,
            FaceKind::Anticlockwise => f.anticlockwise,
        }
    };
    if faces_of(d).iter().any(|f| f.boundary.len() < 2) {
        return Err(Error::FaceOfSizeOne);
    }
    let mut cur = d.clone();
    loop {
        let faces = faces_of(&cur);
        let Some(big) = faces.iter().find(|f| f.boundary.len() > 2) else {
            return Ok(cur);
        };
        let Some(&e) = big.boundary.iter().find(|&&e| cur.tail(e) != cur.head(e)) else {
            return Err(Error::NotFound);
        };
        cur = reduce(&cur, e, ReductionKind::One)?;
    }
}

pub fn contract_cfaces_to_digons(d: &AlternatingDimap) -> Result<AlternatingDimap> {
    contract_faces_to_digons(d, FaceKind::Clockwise)
}

pub fn contract_afaces_to_digons(d: &AlternatingDimap) -> Result<AlternatingDimap> {
    contract_faces_to_digons(d, FaceKind::Anticlockwise)
}

/// Edges of `d` whose class is not a triloop.
pub fn non_triloops(d: &AlternatingDimap) -> BTreeSet<EdgeId> {
    d.edge_ids()
        .filter(|&e| !edge_flags(d, e).is_triloop())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> AlternatingDimap {
        AlternatingDimap::parse_rotations(
            &[("a", "-x +y"), ("b", "-y +z"), ("c", "-z +x")],
            &[("x", "c", "a"), ("y", "a", "b"), ("z", "b", "c")],
        )
        .unwrap()
    }

    #[test]
    fn cycle_edges_are_proper_one_loops() {
        let d = c3();
        for e in d.edge_ids() {
            assert_eq!(classify_edge(&d, e).unwrap(), EdgeClass::Proper1Loop);
        }
    }

    #[test]
    fn omega_reduction_of_three_cycle() {
        let d = c3();
        let x = d.find_edge("x").unwrap();
        let r = reduce(&d, x, ReductionKind::Omega).unwrap();
        let s = r.stats();
        assert_eq!((s.is, s.af, s.cf, s.edges), (2, 1, 1, 2));
    }

    #[test]
    fn ultraloop_star_is_empty() {
        let u = AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap();
        let r = reduce(&u, 0, ReductionKind::Star).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn delete_pair_in_digon_disconnects() {
        let d = AlternatingDimap::parse_rotations(
            &[("v", "-e +f"), ("u", "-f +e")],
            &[("e", "u", "v"), ("f", "v", "u")],
        )
        .unwrap();
        let g = delete_pair(&d, 0, 1).unwrap();
        assert_eq!(g.components().len(), 2);
        assert!(matches!(
            delete_pair(&d, 0, 0),
            Err(Error::NotSuccessorPair(..))
        ));
    }

    #[test]
    fn subdivide_ultraloop_gives_digon() {
        let u = AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap();
        let d = subdivide(&u, 0);
        let s = d.stats();
        assert_eq!((s.is, s.af, s.cf, s.edges), (2, 1, 1, 2));
    }

    #[test]
    fn contraction_shrinks_three_cycle() {
        let d = contract_cfaces_to_digons(&c3()).unwrap();
        assert_eq!(d.num_edges(), 2);
        assert_eq!(d.faces().clockwise[0].boundary.len(), 2);
    }

    #[test]
    fn order_restriction() {
        assert_eq!(
            restrict_order(&[1, 2, 3], &Some(2), Some(9), FreshEdgePolicy::Append),
            vec![1, 3, 9]
        );
        assert_eq!(
            restrict_order(&[1, 2, 3], &Some(2), Some(9), FreshEdgePolicy::Inherit),
            vec![1, 9, 3]
        );
    }
}
