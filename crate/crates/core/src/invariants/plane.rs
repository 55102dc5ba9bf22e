//! Embedded undirected graphs, their Tutte polynomial, and the two digon
//! constructions that turn them into alternating dimaps.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::BiPoly;
use crate::dimap::{AlternatingDimap, EmbeddedDigraph, HalfEdge};
use crate::error::{Error, Result};
use crate::perm;

/// One end of an edge; for a loop, end 0 is the one met first in the
/// rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneVertex {
    pub name: String,
    /// Edge ends in anticlockwise order.
    pub rot: Vec<EdgeEnd>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneEdge {
    pub name: String,
    pub ends: [usize; 2],
}

/// A graph with a rotation system. Isolated vertices are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    pub vertices: Vec<PlaneVertex>,
    pub edges: Vec<PlaneEdge>,
}

/// The `pg-v1` document shape. Each vertex lists the names of its incident
/// edges anticlockwise; a loop is listed twice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawPlaneGraph {
    pub vertices: Vec<RawPlaneVertex>,
    pub edges: Vec<RawPlaneEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawPlaneVertex {
    pub id: String,
    pub rot: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawPlaneEdge {
    pub id: String,
    pub ends: [String; 2],
}

impl PlaneGraph {
    pub fn from_raw(raw: &RawPlaneGraph) -> Result<PlaneGraph> {
        let bad = |m: String| Error::FormatError(m);
        let vidx: BTreeMap<&str, usize> = raw
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let eidx: BTreeMap<&str, usize> = raw
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.as_str(), i))
            .collect();
        if vidx.len() != raw.vertices.len() {
            return Err(bad("duplicate vertex id".into()));
        }
        if eidx.len() != raw.edges.len() {
            return Err(bad("duplicate edge id".into()));
        }
        let mut edges = Vec::new();
        for e in &raw.edges {
            let end = |n: &String| {
                vidx.get(n.as_str())
                    .copied()
                    .ok_or_else(|| bad(format!("edge {}: unknown vertex {n}", e.id)))
            };
            edges.push(PlaneEdge {
                name: e.id.clone(),
                ends: [end(&e.ends[0])?, end(&e.ends[1])?],
            });
        }
        let mut seen = vec![0u8; edges.len()];
        let mut vertices = Vec::new();
        for (vi, v) in raw.vertices.iter().enumerate() {
            let mut rot = Vec::new();
            for n in &v.rot {
                let ei = *eidx
                    .get(n.as_str())
                    .ok_or_else(|| bad(format!("vertex {}: unknown edge {n}", v.id)))?;
                let PlaneEdge { ends, .. } = &edges[ei];
                let end = if ends[0] == ends[1] {
                    seen[ei]
                } else if ends[0] == vi && seen[ei] & 1 == 0 {
                    0
                } else if ends[1] == vi && seen[ei] & 2 == 0 {
                    1
                } else {
                    return Err(bad(format!(
                        "vertex {}: edge {n} listed at the wrong vertex or twice",
                        v.id
                    )));
                };
                if end > 1 {
                    return Err(bad(format!("loop {n} listed more than twice")));
                }
                seen[ei] = if ends[0] == ends[1] {
                    seen[ei] + 1
                } else {
                    seen[ei] | (1 << end)
                };
                rot.push(EdgeEnd { edge: ei, end });
            }
            vertices.push(PlaneVertex {
                name: v.id.clone(),
                rot,
            });
        }
        for (ei, e) in edges.iter().enumerate() {
            let full = if e.ends[0] == e.ends[1] { 2 } else { 3 };
            if seen[ei] != full {
                return Err(bad(format!("edge {} is missing from a rotation", e.name)));
            }
        }
        Ok(PlaneGraph { vertices, edges })
    }

    pub fn to_raw(&self) -> RawPlaneGraph {
        RawPlaneGraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| RawPlaneVertex {
                    id: v.name.clone(),
                    rot: v
                        .rot
                        .iter()
                        .map(|s| self.edges[s.edge].name.clone())
                        .collect(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| RawPlaneEdge {
                    id: e.name.clone(),
                    ends: e.ends.map(|v| self.vertices[v].name.clone()),
                })
                .collect(),
        }
    }

    /// Builds a graph from edge endpoints and anticlockwise rotations of
    /// edge names.
    pub fn parse(
        rotations: &[(&str, &[&str])],
        edges: &[(&str, &str, &str)],
    ) -> Result<PlaneGraph> {
        PlaneGraph::from_raw(&RawPlaneGraph {
            vertices: rotations
                .iter()
                .map(|(v, r)| RawPlaneVertex {
                    id: v.to_string(),
                    rot: r.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
            edges: edges
                .iter()
                .map(|(e, a, b)| RawPlaneEdge {
                    id: e.to_string(),
                    ends: [a.to_string(), b.to_string()],
                })
                .collect(),
        })
    }

    /// Darts `2e + end`; the vertex rotation as a permutation of darts.
    fn dart_rotation(&self) -> perm::Perm {
        let mut sigma = vec![0; 2 * self.edges.len()];
        for v in &self.vertices {
            let darts: Vec<usize> = v.rot.iter().map(|s| 2 * s.edge + s.end as usize).collect();
            for (i, &d) in darts.iter().enumerate() {
                sigma[d] = darts[(i + 1) % darts.len()];
            }
        }
        sigma
    }

    /// Builds a graph from a rotation of the darts `0..2m`, where darts
    /// `2e` and `2e + 1` are the two ends of edge `e`.
    pub fn from_dart_rotation(sigma: &[usize]) -> PlaneGraph {
        let m = sigma.len() / 2;
        let mut owner = vec![0; sigma.len()];
        let mut vertices = Vec::new();
        for (vi, cyc) in perm::cycles(sigma).into_iter().enumerate() {
            for &d in &cyc {
                owner[d] = vi;
            }
            vertices.push(PlaneVertex {
                name: format!("v{}", vi + 1),
                rot: cyc
                    .iter()
                    .map(|&d| EdgeEnd {
                        edge: d / 2,
                        end: (d % 2) as u8,
                    })
                    .collect(),
            });
        }
        let edges: Vec<PlaneEdge> = (0..m)
            .map(|e| PlaneEdge {
                name: format!("e{}", e + 1),
                ends: [owner[2 * e], owner[2 * e + 1]],
            })
            .collect();
        // A loop's end 0 must be the one met first in the rotation.
        for v in &mut vertices {
            let mut first = BTreeSet::new();
            for s in &mut v.rot {
                if edges[s.edge].ends[0] == edges[s.edge].ends[1] {
                    s.end = if first.insert(s.edge) { 0 } else { 1 };
                }
            }
        }
        PlaneGraph { vertices, edges }
    }

    pub fn num_components(&self) -> usize {
        let mut uf: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            uf[x] = r;
            r
        }
        let mut count = self.vertices.len();
        for e in &self.edges {
            let (a, b) = (find(&mut uf, e.ends[0]), find(&mut uf, e.ends[1]));
            if a != b {
                uf[a] = b;
                count -= 1;
            }
        }
        count
    }

    /// Number of faces of the embedding; an isolated vertex has one face.
    pub fn num_faces(&self) -> usize {
        let sigma = self.dart_rotation();
        // Face step: cross the edge, then turn to the next end anticlockwise.
        let phi: perm::Perm = (0..sigma.len()).map(|d| sigma[d ^ 1]).collect();
        let isolated = self.vertices.iter().filter(|v| v.rot.is_empty()).count();
        perm::cycle_count(&phi) + isolated
    }

    /// Every component embeds in the sphere.
    pub fn is_plane(&self) -> bool {
        let (v, e, f, k) = (
            self.vertices.len(),
            self.edges.len(),
            self.num_faces(),
            self.num_components(),
        );
        v + f == e + 2 * k
    }

    /// The path with `n` edges.
    pub fn path(n: usize) -> PlaneGraph {
        let vertices = (0..=n)
            .map(|i| PlaneVertex {
                name: format!("v{i}"),
                rot: [i.checked_sub(1), (i < n).then_some(i)]
                    .into_iter()
                    .flatten()
                    .map(|e| EdgeEnd {
                        edge: e,
                        end: if e == i { 0 } else { 1 },
                    })
                    .collect(),
            })
            .collect();
        let edges = (0..n)
            .map(|i| PlaneEdge {
                name: format!("e{i}"),
                ends: [i, i + 1],
            })
            .collect();
        PlaneGraph { vertices, edges }
    }

    /// The cycle with `n ≥ 1` edges; `n = 1` is a single loop.
    pub fn cycle(n: usize) -> PlaneGraph {
        assert!(n >= 1, "a cycle needs an edge");
        if n == 1 {
            return PlaneGraph::bouquet(1);
        }
        let vertices = (0..n)
            .map(|i| PlaneVertex {
                name: format!("v{i}"),
                rot: vec![
                    EdgeEnd { edge: i, end: 0 },
                    EdgeEnd {
                        edge: (i + n - 1) % n,
                        end: 1,
                    },
                ],
            })
            .collect();
        let edges = (0..n)
            .map(|i| PlaneEdge {
                name: format!("e{i}"),
                ends: [i, (i + 1) % n],
            })
            .collect();
        PlaneGraph { vertices, edges }
    }

    /// One vertex with `k` loops side by side.
    pub fn bouquet(k: usize) -> PlaneGraph {
        PlaneGraph {
            vertices: vec![PlaneVertex {
                name: "v0".into(),
                rot: (0..k)
                    .flat_map(|e| [EdgeEnd { edge: e, end: 0 }, EdgeEnd { edge: e, end: 1 }])
                    .collect(),
            }],
            edges: (0..k)
                .map(|e| PlaneEdge {
                    name: format!("l{e}"),
                    ends: [0, 0],
                })
                .collect(),
        }
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].ends[0] == self.edges[e].ends[1])
            .collect()
    }

    /// Non-loop edges whose removal separates their ends.
    pub fn bridges(&self) -> Vec<usize> {
        let ends = self.endpoint_list();
        (0..ends.len())
            .filter(|&e| {
                let (u, v) = ends[e];
                let mut rest = ends.clone();
                rest.remove(e);
                u != v && !connected_without(self.vertices.len(), &rest, u, v)
            })
            .collect()
    }

    /// Drops the given edges, keeping every vertex.
    pub fn without_edges(&self, drop: &BTreeSet<usize>) -> PlaneGraph {
        let kept: Vec<usize> = (0..self.edges.len())
            .filter(|e| !drop.contains(e))
            .collect();
        let new_id: BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        PlaneGraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| PlaneVertex {
                    name: v.name.clone(),
                    rot: v
                        .rot
                        .iter()
                        .filter_map(|s| {
                            new_id
                                .get(&s.edge)
                                .map(|&edge| EdgeEnd { edge, end: s.end })
                        })
                        .collect(),
                })
                .collect(),
            edges: kept.iter().map(|&e| self.edges[e].clone()).collect(),
        }
    }

    fn endpoint_list(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.ends[0], e.ends[1])).collect()
    }
}

/// Tutte polynomial by deletion and contraction, pivoting on the first
/// edge.
///
/// ```
/// use altdimap::invariants::{tutte_plane, PlaneGraph};
///
/// let tri = PlaneGraph::parse(
///     &[("a", &["p", "r"]), ("b", &["q", "p"]), ("c", &["r", "q"])],
///     &[("p", "a", "b"), ("q", "b", "c"), ("r", "c", "a")],
/// )
/// .unwrap();
/// assert_eq!(tutte_plane(&tri).to_string(), "x^2 + x + y");
/// ```
pub fn tutte_plane(g: &PlaneGraph) -> BiPoly {
    tutte_edges(g.vertices.len(), &g.endpoint_list(), false)
}

/// Deletion and contraction on a multigraph given by endpoint pairs,
/// pivoting on the first or the last edge.
pub fn tutte_edges(n: usize, edges: &[(usize, usize)], pivot_last: bool) -> BiPoly {
    let Some(i) = (if pivot_last {
        edges.len().checked_sub(1)
    } else {
        (!edges.is_empty()).then_some(0)
    }) else {
        return BiPoly::one();
    };
    let (u, v) = edges[i];
    let mut rest = edges.to_vec();
    rest.remove(i);
    if u == v {
        return BiPoly::y().mul(&tutte_edges(n, &rest, pivot_last));
    }
    let contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(a, b)| (if a == v { u } else { a }, if b == v { u } else { b }))
        .collect();
    if !connected_without(n, &rest, u, v) {
        return BiPoly::x().mul(&tutte_edges(n, &contracted, pivot_last));
    }
    tutte_edges(n, &rest, pivot_last).add(&tutte_edges(n, &contracted, pivot_last))
}

fn connected_without(n: usize, edges: &[(usize, usize)], u: usize, v: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(a) = stack.pop() {
        for &(p, q) in edges {
            for (s, t) in [(p, q), (q, p)] {
                if s == a && !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    seen[v]
}

fn alt(g: &PlaneGraph, clockwise: bool) -> AlternatingDimap {
    let mut d = EmbeddedDigraph::default();
    let mut vid = Vec::new();
    for v in &g.vertices {
        vid.push((!v.rot.is_empty()).then(|| d.add_vertex(Arc::from(v.name.as_str()), Vec::new())));
    }
    let mut pair = Vec::new();
    for e in &g.edges {
        let (a, b) = (vid[e.ends[0]].unwrap(), vid[e.ends[1]].unwrap());
        let fwd = d.add_edge(Arc::from(format!("{}.0", e.name)), a, b);
        let back = d.add_edge(Arc::from(format!("{}.1", e.name)), b, a);
        pair.push((fwd, back));
    }
    for (vi, v) in g.vertices.iter().enumerate() {
        let Some(id) = vid[vi] else { continue };
        let mut rot = Vec::new();
        for s in &v.rot {
            let (fwd, back) = pair[s.edge];
            let (out, inc) = if s.end == 0 { (fwd, back) } else { (back, fwd) };
            if clockwise {
                rot.extend([HalfEdge::out(out), HalfEdge::inc(inc)]);
            } else {
                rot.extend([HalfEdge::inc(inc), HalfEdge::out(out)]);
            }
        }
        *d.rotation_mut(id) = rot;
    }
    d.normalize();
    AlternatingDimap::from_digraph(d).expect("doubling every edge keeps rotations alternating")
}

/// Replaces every edge `e` by edges `e.0` and `e.1` bounding a clockwise
/// digon. Isolated vertices are dropped.
pub fn alt_c(g: &PlaneGraph) -> AlternatingDimap {
    alt(g, true)
}

/// As [`alt_c`], with anticlockwise digons.
pub fn alt_a(g: &PlaneGraph) -> AlternatingDimap {
    alt(g, false)
}

/// Connected plane graphs with `m` edges, one per isomorphism class of
/// embedding.
pub fn connected_plane_graphs(m: usize) -> Vec<PlaneGraph> {
    if m == 0 {
        return vec![PlaneGraph {
            vertices: vec![PlaneVertex {
                name: "v1".into(),
                rot: Vec::new(),
            }],
            edges: Vec::new(),
        }];
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for sigma in perm::all(2 * m) {
        let g = PlaneGraph::from_dart_rotation(&sigma);
        if g.num_components() != 1 || !g.is_plane() {
            continue;
        }
        if seen.insert(alt_c(&g).canonical_form()) {
            out.push(g);
        }
    }
    out
}

/// The gallery of named plane graphs: paths, cycles, a theta, a bouquet
/// of loops and `K4`.
pub fn plane_gallery() -> Vec<(String, PlaneGraph)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("P{n}"), PlaneGraph::path(n)));
    }
    for n in 2..=5 {
        out.push((format!("C{n}"), PlaneGraph::cycle(n)));
    }
    let g = |r: &[(&str, &[&str])], e: &[(&str, &str, &str)]| {
        PlaneGraph::parse(r, e).expect("gallery graph")
    };
    out.push((
        "theta".into(),
        g(
            &[("a", &["p", "q", "r"]), ("b", &["r", "q", "p"])],
            &[("p", "a", "b"), ("q", "a", "b"), ("r", "a", "b")],
        ),
    ));
    out.push(("bouquet3".into(), PlaneGraph::bouquet(3)));
    out.push((
        "K4".into(),
        g(
            &[
                ("o", &["p", "q", "r"]),
                ("a", &["p", "u", "s"]),
                ("b", &["q", "s", "t"]),
                ("c", &["r", "t", "u"]),
            ],
            &[
                ("p", "o", "a"),
                ("q", "o", "b"),
                ("r", "o", "c"),
                ("s", "a", "b"),
                ("t", "b", "c"),
                ("u", "c", "a"),
            ],
        ),
    ));
    out
}
