//! Embedded digraphs, alternating dimaps, faces, statistics and permutation
//! triples.
//!
//! Rotations are stored anticlockwise as seen from the positive side of the
//! surface. For an edge `e` whose incoming slot sits at index `i` of the
//! rotation at its head:
//!
//! * `sigma1(e)` is the incoming edge at index `i + 2`,
//! * the left successor `left(e)` is the outgoing edge at index `i + 1`,
//! * the right successor `right(e)` is the outgoing edge at index `i - 1`.
//!
//! Anticlockwise faces are the orbits of `left`, clockwise faces the orbits
//! of `right`, and in-stars the orbits of `sigma1`.
//!
//! ```
//! use altdimap::dimap::AlternatingDimap;
//!
//! let u = AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap();
//! let s = u.stats();
//! assert_eq!((s.k, s.is, s.af, s.cf), (1, 1, 1, 1));
//! assert_eq!(s.genus, vec![0]);
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::{self, Perm};

pub type EdgeId = u32;
pub type VertexId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Out,
    In,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Out => Dir::In,
            Dir::In => Dir::Out,
        }
    }

    pub fn sign(self) -> char {
        match self {
            Dir::Out => '+',
            Dir::In => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub dir: Dir,
}

impl HalfEdge {
    pub fn out(edge: EdgeId) -> Self {
        HalfEdge {
            edge,
            dir: Dir::Out,
        }
    }

    pub fn inc(edge: EdgeId) -> Self {
        HalfEdge { edge, dir: Dir::In }
    }

    pub fn opposite(self) -> Self {
        HalfEdge {
            edge: self.edge,
            dir: self.dir.flip(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub name: Arc<str>,
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub name: Arc<str>,
    pub rot: Vec<HalfEdge>,
}

/// Name-based, unchecked description of an embedded digraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDigraph {
    pub vertices: Vec<RawVertex>,
    pub edges: Vec<RawEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawVertex {
    pub id: String,
    pub rot: Vec<(String, Dir)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    pub tail: String,
    pub head: String,
}

/// An embedded digraph with stable integer identities.
///
/// Deleted edges and vertices leave holes, so identities survive
/// reductions. Every rotation is kept rotated to start at its least
/// half-edge, which makes the derived equality and hash insensitive to
/// where a cyclic sequence was cut.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EmbeddedDigraph {
    verts: Vec<Option<Vertex>>,
    edges: Vec<Option<Edge>>,
}

impl EmbeddedDigraph {
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_some())
            .map(|(i, _)| i as EdgeId)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.verts
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_some())
            .map(|(i, _)| i as VertexId)
    }

    pub fn num_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.is_some()).count()
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.num_vertices() == 0
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.get(e as usize).is_some_and(|x| x.is_some())
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        self.edges[e as usize].as_ref().expect("live edge")
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        self.verts[v as usize].as_ref().expect("live vertex")
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge(e).name
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex(v).name
    }

    pub fn find_edge(&self, name: &str) -> Option<EdgeId> {
        self.edge_ids().find(|&e| self.edge_name(e) == name)
    }

    pub fn find_vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_ids().find(|&v| self.vertex_name(v) == name)
    }

    pub fn rotation(&self, v: VertexId) -> &[HalfEdge] {
        &self.vertex(v).rot
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation(v).len()
    }

    pub fn tail(&self, e: EdgeId) -> VertexId {
        self.edge(e).tail
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.edge(e).head
    }

    /// The vertex whose rotation holds `h`.
    pub fn owner(&self, h: HalfEdge) -> VertexId {
        match h.dir {
            Dir::Out => self.tail(h.edge),
            Dir::In => self.head(h.edge),
        }
    }

    /// Index of `h` in the rotation of its owner.
    pub fn position(&self, h: HalfEdge) -> usize {
        self.rotation(self.owner(h))
            .iter()
            .position(|&x| x == h)
            .expect("half-edge present in its rotation")
    }

    /// Half-edge `offset` steps anticlockwise from `h` at the same vertex.
    pub fn step(&self, h: HalfEdge, offset: isize) -> HalfEdge {
        let rot = self.rotation(self.owner(h));
        let d = rot.len() as isize;
        let i = self.position(h) as isize;
        rot[(i + offset).rem_euclid(d) as usize]
    }

    /// Connected components as (vertices, edges), ordered by least vertex.
    pub fn components(&self) -> Vec<(Vec<VertexId>, Vec<EdgeId>)> {
        let n = self.verts.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.edge_ids() {
            let (a, b) = (self.tail(e) as usize, self.head(e) as usize);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, (Vec<VertexId>, Vec<EdgeId>)> = BTreeMap::new();
        for v in self.vertex_ids() {
            let r = find(&mut parent, v as usize);
            groups.entry(r).or_default().0.push(v);
        }
        for e in self.edge_ids() {
            let r = find(&mut parent, self.tail(e) as usize);
            groups.entry(r).or_default().1.push(e);
        }
        groups.into_values().collect()
    }

    /// Number of boundary walks of the underlying ribbon graph, counted per
    /// component. An isolated vertex contributes one face.
    fn ribbon_faces(&self, vertices: &[VertexId]) -> usize {
        let mut seen: BTreeSet<HalfEdge> = BTreeSet::new();
        let mut faces = 0;
        for &v in vertices {
            let rot = self.rotation(v);
            if rot.is_empty() {
                faces += 1;
                continue;
            }
            for &start in rot {
                if seen.contains(&start) {
                    continue;
                }
                faces += 1;
                let mut h = start;
                while seen.insert(h) {
                    h = self.step(h.opposite(), 1);
                }
            }
        }
        faces
    }

    /// Genus of each component, in the order of [`components`](Self::components).
    pub fn genus_per_component(&self) -> Result<Vec<u32>> {
        self.components()
            .iter()
            .map(|(vs, es)| {
                let chi = vs.len() as i64 - es.len() as i64 + self.ribbon_faces(vs) as i64;
                let twice = 2 - chi;
                if twice < 0 || twice % 2 != 0 {
                    Err(Error::NonIntegerGenus(chi))
                } else {
                    Ok((twice / 2) as u32)
                }
            })
            .collect()
    }

    pub fn total_genus(&self) -> u32 {
        self.genus_per_component()
            .expect("orientable embedding")
            .iter()
            .sum()
    }

    pub(crate) fn add_vertex(&mut self, name: Arc<str>, rot: Vec<HalfEdge>) -> VertexId {
        self.verts.push(Some(Vertex { name, rot }));
        (self.verts.len() - 1) as VertexId
    }

    pub(crate) fn add_edge(&mut self, name: Arc<str>, tail: VertexId, head: VertexId) -> EdgeId {
        self.edges.push(Some(Edge { name, tail, head }));
        (self.edges.len() - 1) as EdgeId
    }

    pub(crate) fn edge_mut(&mut self, e: EdgeId) -> &mut Edge {
        self.edges[e as usize].as_mut().expect("live edge")
    }

    pub(crate) fn rotation_mut(&mut self, v: VertexId) -> &mut Vec<HalfEdge> {
        &mut self.verts[v as usize].as_mut().expect("live vertex").rot
    }

    pub(crate) fn drop_edge(&mut self, e: EdgeId) {
        self.edges[e as usize] = None;
    }

    pub(crate) fn drop_vertex(&mut self, v: VertexId) {
        self.verts[v as usize] = None;
    }

    /// Removes the half-edge from its owner's rotation.
    pub(crate) fn remove_slot(&mut self, h: HalfEdge) {
        let v = self.owner(h);
        let rot = self.rotation_mut(v);
        let i = rot.iter().position(|&x| x == h).expect("slot present");
        rot.remove(i);
    }

    pub(crate) fn normalize(&mut self) {
        for v in self.verts.iter_mut().flatten() {
            if let Some((i, _)) = v.rot.iter().enumerate().min_by_key(|(_, h)| **h) {
                v.rot.rotate_left(i);
            }
        }
    }

    pub(crate) fn fresh_edge_name(&self, base: &str) -> Arc<str> {
        let mut name = format!("{base}'");
        while self.find_edge(&name).is_some() {
            name.push('\'');
        }
        name.into()
    }

    pub(crate) fn fresh_vertex_name(&self, base: &str) -> Arc<str> {
        let mut name = format!("{base}'");
        while self.find_vertex(&name).is_some() {
            name.push('\'');
        }
        name.into()
    }

    /// Keeps only the given edges, dropping vertices left without slots.
    pub fn restrict(&self, keep: &BTreeSet<EdgeId>) -> EmbeddedDigraph {
        let mut g = self.clone();
        for e in self.edge_ids() {
            if !keep.contains(&e) {
                g.drop_edge(e);
            }
        }
        for v in self.vertex_ids() {
            let rot = g.rotation_mut(v);
            rot.retain(|h| keep.contains(&h.edge));
            if rot.is_empty() {
                g.drop_vertex(v);
            }
        }
        g.normalize();
        g
    }

    /// Builds the indexed form from names, checking that every half-edge
    /// occurs exactly once at the correct endpoint. Vertices and edges get
    /// identities in sorted name order.
    pub fn from_raw(raw: &RawDigraph) -> Result<EmbeddedDigraph> {
        let mut vnames: Vec<&str> = raw.vertices.iter().map(|v| v.id.as_str()).collect();
        vnames.sort_unstable();
        if let Some(w) = vnames.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::FormatError(format!("duplicate vertex id {}", w[0])));
        }
        let mut enames: Vec<&str> = raw.edges.iter().map(|e| e.id.as_str()).collect();
        enames.sort_unstable();
        if let Some(w) = enames.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::FormatError(format!("duplicate edge id {}", w[0])));
        }
        let vid: HashMap<&str, VertexId> = vnames
            .iter()
            .enumerate()
            .map(|(i, &n)| (n, i as VertexId))
            .collect();
        let eid: HashMap<&str, EdgeId> = enames
            .iter()
            .enumerate()
            .map(|(i, &n)| (n, i as EdgeId))
            .collect();

        let mut g = EmbeddedDigraph::default();
        for &n in &vnames {
            g.add_vertex(n.into(), Vec::new());
        }
        let mut sorted_edges: Vec<&RawEdge> = raw.edges.iter().collect();
        sorted_edges.sort_by(|a, b| a.id.cmp(&b.id));
        for e in sorted_edges {
            let (Some(&t), Some(&h)) = (vid.get(e.tail.as_str()), vid.get(e.head.as_str())) else {
                return Err(Error::DanglingHalfEdge(e.id.clone()));
            };
            g.add_edge(e.id.as_str().into(), t, h);
        }
        let mut seen: BTreeSet<HalfEdge> = BTreeSet::new();
        for rv in &raw.vertices {
            let v = vid[rv.id.as_str()];
            let mut rot = Vec::with_capacity(rv.rot.len());
            for (name, dir) in &rv.rot {
                let Some(&e) = eid.get(name.as_str()) else {
                    return Err(Error::DanglingHalfEdge(name.clone()));
                };
                let h = HalfEdge { edge: e, dir: *dir };
                if !seen.insert(h) {
                    return Err(Error::DuplicateSlot(name.clone()));
                }
                if g.owner(h) != v {
                    return Err(Error::DanglingHalfEdge(name.clone()));
                }
                rot.push(h);
            }
            *g.rotation_mut(v) = rot;
        }
        for e in g.edge_ids() {
            if !seen.contains(&HalfEdge::out(e)) || !seen.contains(&HalfEdge::inc(e)) {
                return Err(Error::DanglingHalfEdge(g.edge_name(e).to_string()));
            }
        }
        g.normalize();
        Ok(g)
    }

    pub fn to_raw(&self) -> RawDigraph {
        RawDigraph {
            vertices: self
                .vertex_ids()
                .map(|v| RawVertex {
                    id: self.vertex_name(v).to_string(),
                    rot: self
                        .rotation(v)
                        .iter()
                        .map(|h| (self.edge_name(h.edge).to_string(), h.dir))
                        .collect(),
                })
                .collect(),
            edges: self
                .edge_ids()
                .map(|e| RawEdge {
                    id: self.edge_name(e).to_string(),
                    tail: self.vertex_name(self.tail(e)).to_string(),
                    head: self.vertex_name(self.head(e)).to_string(),
                })
                .collect(),
        }
    }
}

/// A validated alternating dimap.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlternatingDimap(EmbeddedDigraph);

impl Deref for AlternatingDimap {
    type Target = EmbeddedDigraph;
    fn deref(&self) -> &EmbeddedDigraph {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceKind {
    Clockwise,
    Anticlockwise,
}

impl FaceKind {
    pub fn opposite(self) -> FaceKind {
        match self {
            FaceKind::Clockwise => FaceKind::Anticlockwise,
            FaceKind::Anticlockwise => FaceKind::Clockwise,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub kind: FaceKind,
    /// Successor orbit, starting at its least edge.
    pub boundary: Vec<EdgeId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Faces {
    pub clockwise: Vec<Face>,
    pub anticlockwise: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimapStats {
    pub k: usize,
    pub is: usize,
    pub af: usize,
    pub cf: usize,
    pub edges: usize,
    /// Genus of each component, in the order of `components()`.
    pub genus: Vec<u32>,
}

impl DimapStats {
    pub fn total_genus(&self) -> u32 {
        self.genus.iter().sum()
    }

    pub fn is_planar(&self) -> bool {
        self.genus.iter().all(|&g| g == 0)
    }
}

impl AlternatingDimap {
    pub fn empty() -> Self {
        AlternatingDimap(EmbeddedDigraph::default())
    }

    pub fn validate(raw: &RawDigraph) -> Result<Self> {
        Self::from_digraph(EmbeddedDigraph::from_raw(raw)?)
    }

    /// Checks the alternation invariants on an indexed digraph.
    pub fn from_digraph(g: EmbeddedDigraph) -> Result<Self> {
        for v in g.vertex_ids() {
            let rot = g.rotation(v);
            let name = || g.vertex_name(v).to_string();
            if rot.is_empty() {
                return Err(Error::IsolatedVertex(name()));
            }
            if rot.len() % 2 == 1 {
                return Err(Error::OddDegree(name()));
            }
            for i in 0..rot.len() {
                if rot[i].dir == rot[(i + 1) % rot.len()].dir {
                    return Err(Error::AlternationViolation(name()));
                }
            }
        }
        Ok(AlternatingDimap(g))
    }

    pub(crate) fn from_digraph_unchecked(g: EmbeddedDigraph) -> Self {
        debug_assert!(Self::from_digraph(g.clone()).is_ok());
        AlternatingDimap(g)
    }

    /// Shorthand constructor: each vertex is given with a whitespace
    /// separated rotation such as `"+e -f"`.
    pub fn parse_rotations(
        vertices: &[(&str, &str)],
        edges: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let raw = RawDigraph {
            vertices: vertices
                .iter()
                .map(|(id, rot)| {
                    let rot = rot
                        .split_whitespace()
                        .map(parse_slot)
                        .collect::<Result<Vec<_>>>()?;
                    Ok(RawVertex {
                        id: id.to_string(),
                        rot,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            edges: edges
                .iter()
                .map(|(id, t, h)| RawEdge {
                    id: id.to_string(),
                    tail: t.to_string(),
                    head: h.to_string(),
                })
                .collect(),
        };
        Self::validate(&raw)
    }

    pub fn digraph(&self) -> &EmbeddedDigraph {
        &self.0
    }

    pub fn into_digraph(self) -> EmbeddedDigraph {
        self.0
    }

    /// Next incoming edge at `head(e)` in the stored rotation direction.
    pub fn sigma1(&self, e: EdgeId) -> EdgeId {
        self.step(HalfEdge::inc(e), 2).edge
    }

    /// Next edge around the anticlockwise face containing `e`.
    pub fn left(&self, e: EdgeId) -> EdgeId {
        self.step(HalfEdge::inc(e), 1).edge
    }

    /// Next edge around the clockwise face containing `e`.
    pub fn right(&self, e: EdgeId) -> EdgeId {
        self.step(HalfEdge::inc(e), -1).edge
    }

    fn orbits(&self, f: impl Fn(EdgeId) -> EdgeId) -> Vec<Vec<EdgeId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.edge_ids() {
            if seen.contains(&s) {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while seen.insert(x) {
                c.push(x);
                x = f(x);
            }
            out.push(c);
        }
        out
    }

    pub fn faces(&self) -> Faces {
        let wrap = |kind, cs: Vec<Vec<EdgeId>>| {
            cs.into_iter()
                .map(|boundary| Face { kind, boundary })
                .collect()
        };
        Faces {
            clockwise: wrap(FaceKind::Clockwise, self.orbits(|e| self.right(e))),
            anticlockwise: wrap(FaceKind::Anticlockwise, self.orbits(|e| self.left(e))),
        }
    }

    pub fn in_stars(&self) -> Vec<Vec<EdgeId>> {
        self.orbits(|e| self.sigma1(e))
    }

    /// Every component has genus zero.
    pub fn is_planar(&self) -> bool {
        self.genus_per_component()
            .is_ok_and(|gs| gs.iter().all(|&g| g == 0))
    }

    pub fn stats(&self) -> DimapStats {
        let faces = self.faces();
        let genus = self
            .genus_per_component()
            .expect("validated dimaps have integer genus");
        let s = DimapStats {
            k: self.components().len(),
            is: self.num_vertices(),
            af: faces.anticlockwise.len(),
            cf: faces.clockwise.len(),
            edges: self.num_edges(),
            genus,
        };
        debug_assert_eq!(
            (s.is + s.af + s.cf) as i64 - s.edges as i64,
            2 * s.k as i64 - 2 * s.total_genus() as i64
        );
        s
    }

    /// The triple in dense edge order (the i-th live edge id is label i).
    pub fn to_triple(&self) -> PermutationTriple {
        let ids: Vec<EdgeId> = self.edge_ids().collect();
        let idx: HashMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let map =
            |f: &dyn Fn(EdgeId) -> EdgeId| -> Perm { ids.iter().map(|&e| idx[&f(e)]).collect() };
        let left = map(&|e| self.left(e));
        PermutationTriple {
            labels: ids.iter().map(|&e| self.edge_name(e).to_string()).collect(),
            sigma1: map(&|e| self.sigma1(e)),
            sigma_omega: perm::inverse(&left),
            sigma_omega2: map(&|e| self.right(e)),
        }
    }

    pub fn from_triple(t: &PermutationTriple) -> Result<Self> {
        t.check()?;
        let left = perm::inverse(&t.sigma_omega);
        let stars = perm::cycles(&t.sigma1);
        let vname = |i: usize| format!("v{}", i + 1);
        let mut head = vec![0; t.len()];
        for (i, c) in stars.iter().enumerate() {
            for &e in c {
                head[e] = i;
            }
        }
        let raw = RawDigraph {
            vertices: stars
                .iter()
                .enumerate()
                .map(|(i, c)| RawVertex {
                    id: vname(i),
                    rot: c
                        .iter()
                        .flat_map(|&e| {
                            [
                                (t.labels[e].clone(), Dir::In),
                                (t.labels[left[e]].clone(), Dir::Out),
                            ]
                        })
                        .collect(),
                })
                .collect(),
            edges: (0..t.len())
                .map(|e| RawEdge {
                    id: t.labels[e].clone(),
                    tail: vname(head[t.sigma_omega[e]]),
                    head: vname(head[e]),
                })
                .collect(),
        };
        Self::validate(&raw)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.to_triple().canonical_form()
    }

    pub fn is_isomorphic(&self, other: &AlternatingDimap) -> bool {
        self.num_edges() == other.num_edges()
            && self.num_vertices() == other.num_vertices()
            && self.canonical_form() == other.canonical_form()
    }

    /// Disjoint union; names of `other` are suffixed when they clash.
    pub fn disjoint_union(&self, other: &AlternatingDimap) -> AlternatingDimap {
        self.disjoint_union_with_maps(other).0
    }

    /// Disjoint union, with the new identities of `other`'s vertices and
    /// edges.
    pub(crate) fn disjoint_union_with_maps(
        &self,
        other: &AlternatingDimap,
    ) -> (
        AlternatingDimap,
        HashMap<VertexId, VertexId>,
        HashMap<EdgeId, EdgeId>,
    ) {
        let mut g = self.0.clone();
        let mut vmap = HashMap::new();
        for v in other.vertex_ids() {
            let mut name: Arc<str> = other.vertex_name(v).into();
            if g.find_vertex(&name).is_some() {
                name = g.fresh_vertex_name(&name);
            }
            vmap.insert(v, g.add_vertex(name, Vec::new()));
        }
        let mut emap = HashMap::new();
        for e in other.edge_ids() {
            let mut name: Arc<str> = other.edge_name(e).into();
            if g.find_edge(&name).is_some() {
                name = g.fresh_edge_name(&name);
            }
            emap.insert(
                e,
                g.add_edge(name, vmap[&other.tail(e)], vmap[&other.head(e)]),
            );
        }
        for v in other.vertex_ids() {
            let rot = other
                .rotation(v)
                .iter()
                .map(|h| HalfEdge {
                    edge: emap[&h.edge],
                    dir: h.dir,
                })
                .collect();
            *g.rotation_mut(vmap[&v]) = rot;
        }
        g.normalize();
        (AlternatingDimap::from_digraph_unchecked(g), vmap, emap)
    }

    /// The subdimap on the given edges, if the induced rotations alternate.
    pub fn induced(&self, keep: &BTreeSet<EdgeId>) -> Option<AlternatingDimap> {
        AlternatingDimap::from_digraph(self.restrict(keep)).ok()
    }

    /// Returns a copy with fresh, sorted-order names `e1..em` and `v1..vn`.
    pub fn relabeled(&self) -> AlternatingDimap {
        let mut g = self.0.clone();
        for (i, e) in self.edge_ids().enumerate() {
            g.edge_mut(e).name = format!("e{}", i + 1).into();
        }
        for (i, v) in self.vertex_ids().enumerate() {
            g.verts[v as usize].as_mut().unwrap().name = format!("v{}", i + 1).into();
        }
        AlternatingDimap(g)
    }
}

pub fn parse_slot(s: &str) -> Result<(String, Dir)> {
    let (dir, rest) = if let Some(r) = s.strip_prefix('+') {
        (Dir::Out, r)
    } else if let Some(r) = s.strip_prefix('-').or_else(|| s.strip_prefix('\u{2212}')) {
        (Dir::In, r)
    } else {
        return Err(Error::FormatError(format!(
            "slot {s:?} must start with + or -"
        )));
    };
    if rest.is_empty() {
        return Err(Error::FormatError(format!("slot {s:?} names no edge")));
    }
    Ok((rest.to_string(), dir))
}

impl fmt::Display for AlternatingDimap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.vertex_ids() {
            let rot: Vec<String> = self
                .rotation(v)
                .iter()
                .map(|h| format!("{}{}", h.dir.sign(), self.edge_name(h.edge)))
                .collect();
            writeln!(f, "{}: [{}]", self.vertex_name(v), rot.join(" "))?;
        }
        Ok(())
    }
}

/// `H` is a subdimap of `D` when its vertices and edges are vertices and
/// edges of `D` (matched by name, with the same endpoints) and each of its
/// rotations is the rotation of `D` with the other edges deleted.
pub fn is_subdimap(h: &AlternatingDimap, d: &AlternatingDimap) -> bool {
    let mut keep = BTreeSet::new();
    for e in h.edge_ids() {
        let Some(de) = d.find_edge(h.edge_name(e)) else {
            return false;
        };
        let same_ends = d.vertex_name(d.tail(de)) == h.vertex_name(h.tail(e))
            && d.vertex_name(d.head(de)) == h.vertex_name(h.head(e));
        if !same_ends {
            return false;
        }
        keep.insert(de);
    }
    if h.vertex_ids()
        .any(|v| d.find_vertex(h.vertex_name(v)).is_none())
    {
        return false;
    }
    let r = d.restrict(&keep);
    let named = |g: &EmbeddedDigraph| -> BTreeMap<String, Vec<(String, Dir)>> {
        g.vertex_ids()
            .map(|v| {
                let mut rot: Vec<(String, Dir)> = g
                    .rotation(v)
                    .iter()
                    .map(|x| (g.edge_name(x.edge).to_string(), x.dir))
                    .collect();
                let i = (0..rot.len()).min_by_key(|&i| rot[i].clone()).unwrap_or(0);
                rot.rotate_left(i);
                (g.vertex_name(v).to_string(), rot)
            })
            .collect()
    };
    named(&r) == named(h)
}

/// Three permutations of a labelled edge set.
///
/// `sigma1` walks in-stars, `sigma_omega2` walks clockwise faces forwards
/// (right successor) and `sigma_omega` walks anticlockwise faces backwards
/// (inverse of the left successor). With these orientations
/// `sigma1 ∘ sigma_omega ∘ sigma_omega2` is the identity, and the trial is
/// the cyclic shift `(s1, sw, sw2) ↦ (sw2, s1, sw)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationTriple {
    pub labels: Vec<String>,
    pub sigma1: Perm,
    pub sigma_omega: Perm,
    pub sigma_omega2: Perm,
}

impl PermutationTriple {
    /// Completes a triple from `sigma1` and `sigma_omega`.
    pub fn from_pair(labels: Vec<String>, sigma1: Perm, sigma_omega: Perm) -> Self {
        let sigma_omega2 = perm::inverse(&perm::compose(&sigma1, &sigma_omega));
        PermutationTriple {
            labels,
            sigma1,
            sigma_omega,
            sigma_omega2,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn check(&self) -> Result<()> {
        let n = self.len();
        let ok = [&self.sigma1, &self.sigma_omega, &self.sigma_omega2]
            .iter()
            .all(|p| p.len() == n && perm::is_permutation(p));
        if !ok {
            return Err(Error::ProductNotIdentity);
        }
        let product = perm::compose(
            &self.sigma1,
            &perm::compose(&self.sigma_omega, &self.sigma_omega2),
        );
        if product != perm::identity(n) {
            return Err(Error::ProductNotIdentity);
        }
        Ok(())
    }

    /// Cycle counts (in-stars, anticlockwise faces, clockwise faces).
    pub fn cycle_counts(&self) -> (usize, usize, usize) {
        (
            perm::cycle_count(&self.sigma1),
            perm::cycle_count(&self.sigma_omega),
            perm::cycle_count(&self.sigma_omega2),
        )
    }

    /// Orbits of the group generated by the triple, by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for y in [self.sigma1[x], self.sigma_omega[x]] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn genus_per_component(&self) -> Result<Vec<u32>> {
        self.components()
            .iter()
            .map(|c| {
                let set: BTreeSet<usize> = c.iter().copied().collect();
                let count = |p: &Perm| {
                    perm::cycles(p)
                        .iter()
                        .filter(|cy| set.contains(&cy[0]))
                        .count() as i64
                };
                let euler =
                    count(&self.sigma1) + count(&self.sigma_omega) + count(&self.sigma_omega2)
                        - c.len() as i64;
                let twice = 2 - euler;
                if twice < 0 || twice % 2 != 0 {
                    Err(Error::NonIntegerGenus(euler))
                } else {
                    Ok((twice / 2) as u32)
                }
            })
            .collect()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let mut codes: Vec<Vec<u32>> = self
            .components()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&s| bfs_code(&self.sigma1, &self.sigma_omega, s))
                    .min()
                    .expect("nonempty component")
            })
            .collect();
        codes.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let n = self.len();
        let mut s1 = Vec::with_capacity(n);
        let mut sw = Vec::with_capacity(n);
        let mut offset = 0;
        for code in &codes {
            let m = code.len() / 2;
            for i in 0..m {
                s1.push(offset + code[2 * i] as usize);
                sw.push(offset + code[2 * i + 1] as usize);
            }
            offset += m;
        }
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        CanonicalForm {
            triple: PermutationTriple::from_pair(labels, s1, sw),
            components: codes,
        }
    }
}

/// Labels edges in breadth-first order from `start` using the generators
/// `(s1, sw)` and records the relabelled images, two entries per edge.
fn bfs_code(s1: &[usize], sw: &[usize], start: usize) -> Vec<u32> {
    let mut label: HashMap<usize, u32> = HashMap::new();
    let mut order = vec![start];
    label.insert(start, 0);
    let mut code = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for y in [s1[x], sw[x]] {
            let next = label.len() as u32;
            let l = *label.entry(y).or_insert_with(|| {
                order.push(y);
                next
            });
            code.push(l);
        }
        i += 1;
    }
    code
}

/// Isomorphism-invariant form: the relabelled triple plus one code per
/// component, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub triple: PermutationTriple,
    pub components: Vec<Vec<u32>>,
}

impl CanonicalForm {
    pub fn num_edges(&self) -> usize {
        self.triple.len()
    }

    pub fn to_dimap(&self) -> AlternatingDimap {
        AlternatingDimap::from_triple(&self.triple).expect("canonical triples are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ultraloop() -> AlternatingDimap {
        AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap()
    }

    fn digon() -> AlternatingDimap {
        AlternatingDimap::parse_rotations(
            &[("v", "-e +f"), ("u", "-f +e")],
            &[("e", "u", "v"), ("f", "v", "u")],
        )
        .unwrap()
    }

    #[test]
    fn rejects_malformed_rotations() {
        let dup = AlternatingDimap::parse_rotations(&[("v", "+e +e")], &[("e", "v", "v")]);
        assert!(matches!(dup, Err(Error::DuplicateSlot(_))));
        let missing = AlternatingDimap::parse_rotations(&[("v", "+e")], &[("e", "v", "v")]);
        assert!(matches!(missing, Err(Error::DanglingHalfEdge(_))));
        let iso =
            AlternatingDimap::parse_rotations(&[("v", "+e -e"), ("w", "")], &[("e", "v", "v")]);
        assert!(matches!(iso, Err(Error::IsolatedVertex(_))));
        let alt = AlternatingDimap::parse_rotations(
            &[("v", "+e +f -e -f")],
            &[("e", "v", "v"), ("f", "v", "v")],
        );
        assert!(matches!(alt, Err(Error::AlternationViolation(_))));
    }

    #[test]
    fn ultraloop_faces_and_triple() {
        let u = ultraloop();
        let f = u.faces();
        assert_eq!(f.clockwise.len(), 1);
        assert_eq!(f.anticlockwise.len(), 1);
        let t = u.to_triple();
        assert_eq!(t.sigma1, vec![0]);
        assert_eq!(t.sigma_omega, vec![0]);
        assert_eq!(t.sigma_omega2, vec![0]);
    }

    #[test]
    fn digon_triple() {
        let t = digon().to_triple();
        assert_eq!(t.sigma1, vec![0, 1]);
        assert_eq!(t.sigma_omega, vec![1, 0]);
        assert_eq!(t.sigma_omega2, vec![1, 0]);
        t.check().unwrap();
    }

    #[test]
    fn three_cycle_faces() {
        let c3 = AlternatingDimap::parse_rotations(
            &[("a", "-x +y"), ("b", "-y +z"), ("c", "-z +x")],
            &[("x", "c", "a"), ("y", "a", "b"), ("z", "b", "c")],
        )
        .unwrap();
        let f = c3.faces();
        assert_eq!(f.clockwise.len(), 1);
        assert_eq!(f.clockwise[0].boundary.len(), 3);
        assert_eq!(f.anticlockwise[0].boundary.len(), 3);
    }

    #[test]
    fn genus_one_triple() {
        let t = PermutationTriple::from_pair(
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec![1, 2, 0],
            vec![1, 2, 0],
        );
        let d = AlternatingDimap::from_triple(&t).unwrap();
        let s = d.stats();
        assert_eq!((s.k, s.is, s.af, s.cf), (1, 1, 1, 1));
        assert_eq!(s.genus, vec![1]);
    }

    #[test]
    fn triple_round_trip_is_identical_on_labels() {
        let d = digon();
        let back = AlternatingDimap::from_triple(&d.to_triple()).unwrap();
        assert_eq!(back.to_triple(), d.to_triple());
    }

    #[test]
    fn subdimap_by_names() {
        let u = ultraloop();
        assert!(is_subdimap(&u, &u));
        assert!(is_subdimap(&AlternatingDimap::empty(), &digon()));
        assert!(!is_subdimap(&u, &digon()));
    }
}
