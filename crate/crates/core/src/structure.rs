//! Blocks, nesting of blocks inside faces, cycle blocks, multiloops, and
//! recognition of c-simple, c-alternating and a-alternating dimaps.
//!
//! Nesting is decided from rotation corners. Two blocks of a component
//! meet only through cutvertices, and at a cutvertex the half-edges of one
//! block sit in a single corner of the other, so the face a block lies in
//! is the face through that corner.
//!
//! ```
//! use altdimap::invariants::{alt_c, PlaneGraph};
//! use altdimap::structure::{is_c_alternating, is_c_simple};
//!
//! let tri = PlaneGraph::parse(
//!     &[("a", &["p", "r"]), ("b", &["q", "p"]), ("c", &["r", "q"])],
//!     &[("p", "a", "b"), ("q", "b", "c"), ("r", "c", "a")],
//! )
//! .unwrap();
//! let d = alt_c(&tri);
//! assert!(is_c_simple(&d) && is_c_alternating(&d));
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::dimap::{AlternatingDimap, Dir, EdgeId, Face, FaceKind, HalfEdge, VertexId};
use crate::error::{Error, Result};
use crate::invariants::{EdgeEnd, PlaneEdge, PlaneGraph, PlaneVertex};

/// A maximal connected subdimap without a cutvertex. Every loop is a block
/// of its own.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    /// Sorted vertex ids.
    pub vertices: Vec<VertexId>,
    /// The vertices this block shares with other blocks.
    pub cutvertices: Vec<VertexId>,
}

impl Block {
    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_loop(&self, d: &AlternatingDimap) -> bool {
        self.edges.len() == 1 && d.tail(self.edges[0]) == d.head(self.edges[0])
    }

    /// The block as a dimap of its own. Always present at genus zero; on
    /// other surfaces a block's slots need not alternate.
    pub fn dimap(&self, d: &AlternatingDimap) -> Option<AlternatingDimap> {
        d.induced(&self.edge_set())
    }

    /// One directed cycle through distinct vertices (at least two edges).
    pub fn is_directed_cycle(&self, d: &AlternatingDimap) -> bool {
        if self.edges.len() < 2 || self.vertices.len() != self.edges.len() {
            return false;
        }
        let tails: BTreeSet<VertexId> = self.edges.iter().map(|&e| d.tail(e)).collect();
        tails.len() == self.edges.len()
    }
}

struct Tarjan<'a> {
    adj: &'a BTreeMap<VertexId, Vec<(VertexId, EdgeId)>>,
    disc: HashMap<VertexId, usize>,
    low: HashMap<VertexId, usize>,
    stack: Vec<EdgeId>,
    out: Vec<Vec<EdgeId>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: VertexId, via: Option<EdgeId>) {
        let t = self.disc.len();
        self.disc.insert(u, t);
        self.low.insert(u, t);
        for &(w, e) in &self.adj[&u] {
            if Some(e) == via {
                continue;
            }
            match self.disc.get(&w).copied() {
                None => {
                    self.stack.push(e);
                    self.visit(w, Some(e));
                    let lw = self.low[&w];
                    let lu = self.low.get_mut(&u).unwrap();
                    *lu = (*lu).min(lw);
                    if lw >= self.disc[&u] {
                        let mut comp = Vec::new();
                        while let Some(x) = self.stack.pop() {
                            comp.push(x);
                            if x == e {
                                break;
                            }
                        }
                        self.out.push(comp);
                    }
                }
                Some(dw) if dw < self.disc[&u] => {
                    self.stack.push(e);
                    let lu = self.low.get_mut(&u).unwrap();
                    *lu = (*lu).min(dw);
                }
                Some(_) => {}
            }
        }
    }
}

/// The blocks of the underlying multigraph, ordered by least edge.
pub fn blocks(d: &AlternatingDimap) -> Vec<Block> {
    let mut adj: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> =
        d.vertex_ids().map(|v| (v, Vec::new())).collect();
    let mut groups: Vec<Vec<EdgeId>> = Vec::new();
    for e in d.edge_ids() {
        let (t, h) = (d.tail(e), d.head(e));
        if t == h {
            groups.push(vec![e]);
        } else {
            adj.get_mut(&t).unwrap().push((h, e));
            adj.get_mut(&h).unwrap().push((t, e));
        }
    }
    let mut tj = Tarjan {
        adj: &adj,
        disc: HashMap::new(),
        low: HashMap::new(),
        stack: Vec::new(),
        out: Vec::new(),
    };
    for &v in adj.keys() {
        if !tj.disc.contains_key(&v) {
            tj.visit(v, None);
        }
    }
    groups.extend(tj.out);
    let mut count: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut out: Vec<Block> = groups
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let vertices: BTreeSet<VertexId> =
                edges.iter().flat_map(|&e| [d.tail(e), d.head(e)]).collect();
            for &v in &vertices {
                *count.entry(v).or_default() += 1;
            }
            Block {
                edges,
                vertices: vertices.into_iter().collect(),
                cutvertices: Vec::new(),
            }
        })
        .collect();
    for b in &mut out {
        b.cutvertices = b
            .vertices
            .iter()
            .copied()
            .filter(|v| count[v] > 1)
            .collect();
    }
    out.sort_by_key(|b| b.edges[0]);
    out
}

pub fn cutvertices(d: &AlternatingDimap) -> BTreeSet<VertexId> {
    blocks(d).into_iter().flat_map(|b| b.cutvertices).collect()
}

/// The kind of face through the corner that follows slot `h`.
fn corner_kind(h: HalfEdge) -> FaceKind {
    match h.dir {
        Dir::In => FaceKind::Anticlockwise,
        Dir::Out => FaceKind::Clockwise,
    }
}

/// For each slot of `rot` outside `inside`, the nearest earlier slot that is
/// inside. Empty when no slot is inside.
fn enclosing_slots(rot: &[HalfEdge], inside: impl Fn(EdgeId) -> bool) -> Vec<(HalfEdge, HalfEdge)> {
    let n = rot.len();
    let Some(start) = (0..n).find(|&i| inside(rot[i].edge)) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut last = rot[start];
    for k in 1..n {
        let h = rot[(start + k) % n];
        if inside(h.edge) {
            last = h;
        } else {
            out.push((h, last));
        }
    }
    out
}

/// Every slot at `v` outside `inside` sits in a corner of kind `kind`.
fn foreign_slots_in(
    d: &AlternatingDimap,
    v: VertexId,
    inside: impl Fn(EdgeId) -> bool,
    kind: FaceKind,
) -> bool {
    enclosing_slots(d.rotation(v), inside)
        .iter()
        .all(|&(_, p)| corner_kind(p) == kind)
}

fn component_of(d: &AlternatingDimap, e: EdgeId) -> usize {
    d.components()
        .iter()
        .position(|(_, es)| es.contains(&e))
        .expect("live edge")
}

/// Whether `b1` lies within face `g` of `b2`, where `g` is a face of `b2`
/// taken as a dimap of its own.
pub fn within_face(d: &AlternatingDimap, b1: &Block, b2: &Block, g: &Face) -> Result<bool> {
    if component_of(d, b1.edges[0]) != component_of(d, b2.edges[0]) {
        return Err(Error::DifferentComponents);
    }
    if b1 == b2 {
        return Ok(false);
    }
    let all = blocks(d);
    let find = |b: &Block| {
        all.iter()
            .position(|x| x.edges[0] == b.edges[0])
            .expect("block of d")
    };
    let (i1, i2) = (find(b1), find(b2));
    // Breadth-first search in the block-cutvertex tree from b2.
    let mut prev: HashMap<usize, (usize, VertexId)> = HashMap::new();
    let mut queue = VecDeque::from([i2]);
    while let Some(i) = queue.pop_front() {
        if i == i1 {
            break;
        }
        for &v in &all[i].cutvertices {
            for (j, b) in all.iter().enumerate() {
                if j != i2 && !prev.contains_key(&j) && b.contains_vertex(v) && j != i {
                    prev.insert(j, (i, v));
                    queue.push_back(j);
                }
            }
        }
    }
    let mut j = i1;
    let mut v = prev[&j].1;
    while prev[&j].0 != i2 {
        j = prev[&j].0;
        v = prev[&j].1;
    }
    // Blocks reachable from b1 without passing through v.
    let mut branch: BTreeSet<usize> = BTreeSet::from([i1]);
    let mut queue = VecDeque::from([i1]);
    while let Some(i) = queue.pop_front() {
        for &u in all[i].cutvertices.iter().filter(|&&u| u != v) {
            for (k, b) in all.iter().enumerate() {
                if b.contains_vertex(u) && branch.insert(k) {
                    queue.push_back(k);
                }
            }
        }
    }
    let branch_edges: BTreeSet<EdgeId> = branch
        .iter()
        .flat_map(|&k| all[k].edges.iter().copied())
        .collect();
    let g_edges: BTreeSet<EdgeId> = g.boundary.iter().copied().collect();
    Ok(enclosing_slots(d.rotation(v), |e| b2.contains_edge(e))
        .iter()
        .any(|&(h, p)| {
            branch_edges.contains(&h.edge) && corner_kind(p) == g.kind && g_edges.contains(&p.edge)
        }))
}

fn cycle_blocks(d: &AlternatingDimap, kind: FaceKind) -> Vec<Block> {
    let faces = d.faces();
    let list = match kind {
        FaceKind::Clockwise => faces.clockwise,
        FaceKind::Anticlockwise => faces.anticlockwise,
    };
    let sets: BTreeSet<BTreeSet<EdgeId>> = list
        .into_iter()
        .map(|f| f.boundary.into_iter().collect())
        .collect();
    blocks(d)
        .into_iter()
        .filter(|b| b.is_directed_cycle(d) && sets.contains(&b.edge_set()))
        .collect()
}

/// Blocks that are directed cycles bounding, by themselves, a clockwise
/// face. Loops are reported as multiloops instead.
pub fn c_cycle_blocks(d: &AlternatingDimap) -> Vec<Block> {
    cycle_blocks(d, FaceKind::Clockwise)
}

pub fn a_cycle_blocks(d: &AlternatingDimap) -> Vec<Block> {
    cycle_blocks(d, FaceKind::Anticlockwise)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultiloopKind {
    /// The outermost loop closes a clockwise face with the loops inside it.
    C,
    A,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiloop {
    pub vertex: VertexId,
    /// Innermost first; the last loop encloses the others.
    pub loops: Vec<EdgeId>,
    pub kind: MultiloopKind,
    /// Sorted sizes of the faces of the multiloop taken by itself.
    pub face_sizes: Vec<usize>,
}

impl Multiloop {
    pub fn size(&self) -> usize {
        self.loops.len()
    }

    /// Clockwise faces of the multiloop taken by itself.
    pub fn cf(&self, d: &AlternatingDimap) -> usize {
        d.induced(&self.loops.iter().copied().collect())
            .map(|s| s.stats().cf)
            .unwrap_or(0)
    }
}

fn is_loop_edge(d: &AlternatingDimap, e: EdgeId) -> bool {
    d.tail(e) == d.head(e)
}

/// Loops in closing order of a slot sequence, and the kind given by its
/// first slot.
fn nest(seq: &[HalfEdge]) -> (Vec<EdgeId>, MultiloopKind) {
    let mut seen = BTreeSet::new();
    let mut loops = Vec::new();
    for h in seq {
        if !seen.insert(h.edge) {
            loops.push(h.edge);
        }
    }
    let kind = match seq[0].dir {
        Dir::Out => MultiloopKind::C,
        Dir::In => MultiloopKind::A,
    };
    (loops, kind)
}

/// A vertex carrying only loops: read the whole rotation as one nest, cut
/// just outside a loop that has every other loop on one side.
fn loop_vertex_nest(rot: &[HalfEdge]) -> (Vec<EdgeId>, MultiloopKind) {
    let n = rot.len();
    let mut candidates = Vec::new();
    for p in 0..n {
        let Some(q) = (p + 1..n).find(|&q| rot[q].edge == rot[p].edge) else {
            continue;
        };
        let inside_empty = q == p + 1;
        let outside_empty = p == 0 && q == n - 1;
        let inside_closed = (p + 1..q).all(|i| {
            let e = rot[i].edge;
            (p + 1..q).filter(|&j| rot[j].edge == e).count() == 2
        });
        if inside_empty || inside_closed {
            // Everything else is outside: enclose it from q.
            let seq: Vec<HalfEdge> = (0..n).map(|k| rot[(q + k) % n]).collect();
            candidates.push(seq);
        }
        if outside_empty || inside_closed {
            let seq: Vec<HalfEdge> = (0..n).map(|k| rot[(p + k) % n]).collect();
            candidates.push(seq);
        }
    }
    let nests: Vec<(Vec<EdgeId>, MultiloopKind)> = candidates.iter().map(|s| nest(s)).collect();
    nests
        .iter()
        .find(|(_, k)| *k == MultiloopKind::C)
        .or(nests.first())
        .cloned()
        .unwrap_or_else(|| nest(rot))
}

/// Maximal nests of loops at each vertex. Loops at a vertex that also has
/// other edges are split into the nests enclosed by one outermost loop;
/// a vertex carrying only loops gives a single nest.
pub fn multiloops(d: &AlternatingDimap) -> Vec<Multiloop> {
    let mut out = Vec::new();
    for v in d.vertex_ids() {
        let rot = d.rotation(v);
        let n = rot.len();
        let mut found: Vec<(Vec<EdgeId>, MultiloopKind)> = Vec::new();
        if rot.iter().all(|h| is_loop_edge(d, h.edge)) {
            found.push(loop_vertex_nest(rot));
        } else if rot.iter().any(|h| is_loop_edge(d, h.edge)) {
            let start = (0..n).find(|&i| !is_loop_edge(d, rot[i].edge)).unwrap();
            let mut open = BTreeSet::new();
            let mut seg: Vec<HalfEdge> = Vec::new();
            for k in 1..=n {
                let h = rot[(start + k) % n];
                if !is_loop_edge(d, h.edge) {
                    continue;
                }
                seg.push(h);
                if !open.insert(h.edge) {
                    open.remove(&h.edge);
                }
                if open.is_empty() {
                    found.push(nest(&seg));
                    seg.clear();
                }
            }
        }
        for (loops, kind) in found {
            let s = d.induced(&loops.iter().copied().collect());
            let mut face_sizes: Vec<usize> = s
                .map(|s| {
                    let f = s.faces();
                    f.clockwise
                        .iter()
                        .chain(&f.anticlockwise)
                        .map(|f| f.boundary.len())
                        .collect()
                })
                .unwrap_or_default();
            face_sizes.sort_unstable();
            out.push(Multiloop {
                vertex: v,
                loops,
                kind,
                face_sizes,
            });
        }
    }
    out
}

fn faces_of(d: &AlternatingDimap, kind: FaceKind) -> Vec<Face> {
    let f = d.faces();
    match kind {
        FaceKind::Clockwise => f.clockwise,
        FaceKind::Anticlockwise => f.anticlockwise,
    }
}

fn digon_edge_name(d: &AlternatingDimap, e: EdgeId, f: EdgeId) -> String {
    let (a, b) = (d.edge_name(e), d.edge_name(f));
    for (x, y) in [(a, b), (b, a)] {
        if let (Some(s), Some(t)) = (x.strip_suffix(".0"), y.strip_suffix(".1")) {
            if s == t {
                return s.to_string();
            }
        }
    }
    if a < b {
        format!("{a}+{b}")
    } else {
        format!("{b}+{a}")
    }
}

/// Inverse of the digon construction for faces of `kind`: one graph edge
/// per digon, vertices kept, ends ordered as the outgoing slots.
fn alt_image(d: &AlternatingDimap, kind: FaceKind) -> Option<PlaneGraph> {
    let faces = faces_of(d, kind);
    if faces.iter().any(|f| f.boundary.len() != 2) {
        return None;
    }
    let vindex: HashMap<VertexId, usize> =
        d.vertex_ids().enumerate().map(|(i, v)| (v, i)).collect();
    let mut owner: HashMap<EdgeId, (usize, u8)> = HashMap::new();
    let mut edges = Vec::new();
    for (gi, f) in faces.iter().enumerate() {
        let (e, g) = (f.boundary[0], f.boundary[1]);
        owner.insert(e, (gi, 0));
        owner.insert(g, (gi, 1));
        edges.push(PlaneEdge {
            name: digon_edge_name(d, e, g),
            ends: [vindex[&d.tail(e)], vindex[&d.tail(g)]],
        });
    }
    let mut vertices: Vec<PlaneVertex> = d
        .vertex_ids()
        .map(|v| PlaneVertex {
            name: d.vertex_name(v).to_string(),
            rot: d
                .rotation(v)
                .iter()
                .filter(|h| h.dir == Dir::Out)
                .map(|h| {
                    let (edge, end) = owner[&h.edge];
                    EdgeEnd { edge, end }
                })
                .collect(),
        })
        .collect();
    for v in &mut vertices {
        let mut first = BTreeSet::new();
        for s in &mut v.rot {
            if edges[s.edge].ends[0] == edges[s.edge].ends[1] {
                s.end = if first.insert(s.edge) { 0 } else { 1 };
            }
        }
    }
    Some(PlaneGraph { vertices, edges })
}

/// A graph `G` with `alt_c(G) ≅ D`, present exactly when every clockwise
/// face of `D` has size two.
pub fn is_alt_c_image(d: &AlternatingDimap) -> Option<PlaneGraph> {
    alt_image(d, FaceKind::Clockwise)
}

pub fn is_alt_a_image(d: &AlternatingDimap) -> Option<PlaneGraph> {
    alt_image(d, FaceKind::Anticlockwise)
}

/// `side` is the face kind whose digons play the role of graph edges.
fn is_simple(d: &AlternatingDimap, side: FaceKind) -> bool {
    if !d.stats().is_planar() || d.edge_ids().any(|e| is_loop_edge(d, e)) {
        return false;
    }
    let bs = blocks(d);
    for b in &bs {
        let Some(bd) = b.dimap(d) else { return false };
        let digons = faces_of(&bd, side).iter().all(|f| f.boundary.len() == 2);
        if !(b.is_directed_cycle(d) || digons) {
            return false;
        }
        for &v in &b.cutvertices {
            if !foreign_slots_in(d, v, |e| b.contains_edge(e), side.opposite()) {
                return false;
            }
        }
    }
    true
}

fn is_alternating_side(d: &AlternatingDimap, side: FaceKind) -> bool {
    if !d.stats().is_planar() {
        return false;
    }
    let keep: BTreeSet<EdgeId> = d.edge_ids().filter(|&e| !is_loop_edge(d, e)).collect();
    let Some(rest) = d.induced(&keep) else {
        return false;
    };
    if !is_simple(&rest, side) {
        return false;
    }
    d.vertex_ids()
        .all(|v| foreign_slots_in(d, v, |e| keep.contains(&e), side.opposite()))
}

/// Loopless, planar, every block a directed cycle or the image of
/// [`alt_c`](crate::invariants::alt_c), and no block inside a clockwise
/// face of another.
pub fn is_c_simple(d: &AlternatingDimap) -> bool {
    is_simple(d, FaceKind::Clockwise)
}

pub fn is_a_simple(d: &AlternatingDimap) -> bool {
    is_simple(d, FaceKind::Anticlockwise)
}

/// A c-simple dimap with loops added only in corners of anticlockwise
/// faces. These are exactly the dimaps whose c-Tutte polynomial does not
/// depend on the ordering.
pub fn is_c_alternating(d: &AlternatingDimap) -> bool {
    is_alternating_side(d, FaceKind::Clockwise)
}

pub fn is_a_alternating(d: &AlternatingDimap) -> bool {
    is_alternating_side(d, FaceKind::Anticlockwise)
}

/// The bipartite incidence graph between cutvertices and blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBlockGraph {
    pub cutvertices: Vec<VertexId>,
    pub blocks: Vec<Block>,
    /// `(cutvertex index, block index)` pairs.
    pub adjacency: Vec<(usize, usize)>,
}

impl CBlockGraph {
    pub fn num_nodes(&self) -> usize {
        self.cutvertices.len() + self.blocks.len()
    }

    pub fn num_components(&self) -> usize {
        let a = self.cutvertices.len();
        let mut parent: Vec<usize> = (0..self.num_nodes()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.num_nodes();
        for &(i, j) in &self.adjacency {
            let (r, s) = (find(&mut parent, i), find(&mut parent, a + j));
            if r != s {
                parent[r] = s;
                count -= 1;
            }
        }
        count
    }

    pub fn is_forest(&self) -> bool {
        self.adjacency.len() + self.num_components() == self.num_nodes()
    }

    pub fn is_tree(&self) -> bool {
        self.num_components() == 1 && self.is_forest()
    }
}

pub fn c_block_graph(d: &AlternatingDimap) -> Result<CBlockGraph> {
    if !is_c_alternating(d) {
        return Err(Error::NotCAlternating);
    }
    let bs = blocks(d);
    let cut: Vec<VertexId> = cutvertices(d).into_iter().collect();
    let mut adjacency = Vec::new();
    for (i, &v) in cut.iter().enumerate() {
        for (j, b) in bs.iter().enumerate() {
            if b.contains_vertex(v) {
                adjacency.push((i, j));
            }
        }
    }
    Ok(CBlockGraph {
        cutvertices: cut,
        blocks: bs,
        adjacency,
    })
}

/// Where two dimaps are glued: corner `i` at a vertex lies between slots
/// `i` and `i + 1` of its rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Attachment {
    pub v1: VertexId,
    pub corner1: usize,
    pub v2: VertexId,
    pub corner2: usize,
}

/// The first corner at `v` lying on an anticlockwise face.
pub fn first_anticlockwise_corner(d: &AlternatingDimap, v: VertexId) -> Option<usize> {
    d.rotation(v).iter().position(|h| h.dir == Dir::In)
}

fn checked_corner(d: &AlternatingDimap, v: VertexId, corner: usize) -> Result<Vec<HalfEdge>> {
    if d.vertex_ids().all(|u| u != v) {
        return Err(Error::FormatError(format!("no vertex #{v}")));
    }
    let rot = d.rotation(v);
    if corner >= rot.len() {
        return Err(Error::FormatError(format!(
            "vertex {} has no corner {corner}",
            d.vertex_name(v)
        )));
    }
    if rot[corner].dir != Dir::In {
        return Err(Error::ClockwiseCorner);
    }
    let mut r = rot.to_vec();
    r.rotate_left(corner + 1);
    Ok(r)
}

/// Glues `s2` into an anticlockwise corner of `s1` and vice versa, or
/// takes the disjoint union when `at` is `None`. Clashing names of `s2`
/// are primed.
pub fn c_union(
    s1: &AlternatingDimap,
    s2: &AlternatingDimap,
    at: Option<Attachment>,
) -> Result<AlternatingDimap> {
    let Some(at) = at else {
        return Ok(s1.disjoint_union(s2));
    };
    let r1 = checked_corner(s1, at.v1, at.corner1)?;
    let r2 = checked_corner(s2, at.v2, at.corner2)?;
    let (u, vmap, emap) = s1.disjoint_union_with_maps(s2);
    let w = vmap[&at.v2];
    let mut g = u.into_digraph();
    let mut merged = r1;
    merged.extend(r2.iter().map(|h| HalfEdge {
        edge: emap[&h.edge],
        dir: h.dir,
    }));
    *g.rotation_mut(at.v1) = merged;
    for e in emap.values() {
        let edge = g.edge_mut(*e);
        if edge.tail == w {
            edge.tail = at.v1;
        }
        if edge.head == w {
            edge.head = at.v1;
        }
    }
    g.drop_vertex(w);
    g.normalize();
    AlternatingDimap::from_digraph(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{alt_c, PlaneGraph};

    fn digon() -> AlternatingDimap {
        AlternatingDimap::parse_rotations(
            &[("u", "+a -b"), ("v", "+b -a")],
            &[("a", "u", "v"), ("b", "v", "u")],
        )
        .unwrap()
    }

    fn two_digons() -> AlternatingDimap {
        AlternatingDimap::parse_rotations(
            &[("u", "+a -b"), ("v", "+b -a +c -d"), ("w", "+d -c")],
            &[
                ("a", "u", "v"),
                ("b", "v", "u"),
                ("c", "v", "w"),
                ("d", "w", "v"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn digon_is_one_block() {
        let d = digon();
        let bs = blocks(&d);
        assert_eq!(bs.len(), 1);
        assert!(cutvertices(&d).is_empty());
        assert!(is_c_simple(&d) && is_a_simple(&d));
    }

    #[test]
    fn shared_vertex_is_a_cutvertex() {
        let d = two_digons();
        let bs = blocks(&d);
        assert_eq!(bs.len(), 2);
        assert_eq!(
            cutvertices(&d),
            BTreeSet::from([d.find_vertex("v").unwrap()])
        );
    }

    #[test]
    fn each_digon_lies_in_exactly_one_face_of_the_other() {
        let d = two_digons();
        let bs = blocks(&d);
        for (x, y) in [(0, 1), (1, 0)] {
            let faces = bs[y].dimap(&d).unwrap().faces();
            let hits = faces
                .clockwise
                .iter()
                .chain(&faces.anticlockwise)
                .filter(|g| within_face(&d, &bs[x], &bs[y], g).unwrap())
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn nested_loops_are_blocks() {
        let g13 = AlternatingDimap::parse_rotations(
            &[("v", "+e1 -e2 +e3 -e3 +e2 -e1")],
            &[("e1", "v", "v"), ("e2", "v", "v"), ("e3", "v", "v")],
        )
        .unwrap();
        assert_eq!(blocks(&g13).len(), 3);
        assert_eq!(cutvertices(&g13).len(), 1);
        assert_eq!(multiloops(&g13).len(), 1);
    }

    #[test]
    fn blocks_in_other_components_are_rejected() {
        let d = digon().disjoint_union(&digon());
        let bs = blocks(&d);
        let g = &bs[1].dimap(&d).unwrap().faces().clockwise[0];
        assert_eq!(
            within_face(&d, &bs[0], &bs[1], g),
            Err(Error::DifferentComponents)
        );
    }

    #[test]
    fn digon_recovers_a_single_edge() {
        let g = is_alt_c_image(&digon()).unwrap();
        assert_eq!(g.edges.len(), 1);
        assert_eq!(g.vertices.len(), 2);
        assert!(alt_c(&g).is_isomorphic(&digon()));
    }

    #[test]
    fn union_of_digons_at_a_vertex() {
        let (a, b) = (digon(), digon());
        let (v1, v2) = (a.find_vertex("u").unwrap(), b.find_vertex("u").unwrap());
        let at = Attachment {
            v1,
            corner1: first_anticlockwise_corner(&a, v1).unwrap(),
            v2,
            corner2: first_anticlockwise_corner(&b, v2).unwrap(),
        };
        let u = c_union(&a, &b, Some(at)).unwrap();
        assert_eq!(u.num_edges(), 4);
        assert_eq!(blocks(&u).len(), 2);
        assert!(is_c_alternating(&u));
        let bg = c_block_graph(&u).unwrap();
        assert!(bg.is_tree());
        let bad = Attachment {
            corner1: 1 - at.corner1,
            ..at
        };
        assert_eq!(c_union(&a, &b, Some(bad)), Err(Error::ClockwiseCorner));
    }

    #[test]
    fn single_loops_by_kind() {
        // An ω²-loop and an ω-loop hanging off a digon.
        let c = AlternatingDimap::parse_rotations(
            &[("u", "+a -b"), ("v", "+b -l +l -a")],
            &[("a", "u", "v"), ("b", "v", "u"), ("l", "v", "v")],
        )
        .unwrap();
        let m = multiloops(&c);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].kind, MultiloopKind::A);
        assert!(!is_c_alternating(&c));
        let a = AlternatingDimap::parse_rotations(
            &[("u", "+a -b"), ("v", "+b -a +l -l")],
            &[("a", "u", "v"), ("b", "v", "u"), ("l", "v", "v")],
        )
        .unwrap();
        assert_eq!(multiloops(&a)[0].kind, MultiloopKind::C);
        assert!(is_c_alternating(&a));
    }

    #[test]
    fn triangle_image_has_no_cycle_blocks() {
        let tri = PlaneGraph::parse(
            &[("a", &["p", "r"]), ("b", &["q", "p"]), ("c", &["r", "q"])],
            &[("p", "a", "b"), ("q", "b", "c"), ("r", "c", "a")],
        )
        .unwrap();
        let d = alt_c(&tri);
        assert!(c_cycle_blocks(&d).is_empty());
        assert!(is_alt_c_image(&d).is_some());
    }
}
