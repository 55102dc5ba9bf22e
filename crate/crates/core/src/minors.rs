//! Minors: closure under the three reductions, containment tests with
//! replayable witnesses, the small excluded minors, and reducing a dimap
//! onto one of its subdimaps with ω- and ω²-reductions only.
//!
//! ```
//! use altdimap::minors::{excluded, has_minor};
//!
//! let g13 = excluded("g13").unwrap();
//! assert!(has_minor(g13, g13).unwrap().is_some());
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{MultiPoly16, ParamSeq16};
use crate::census::enumerate_dimaps;
use crate::dimap::{is_subdimap, AlternatingDimap, CanonicalForm, EdgeId};
use crate::error::{Error, Result};
use crate::invariants::{
    alt_c, eti_all_orderings_with, EvalOptions, PlaneGraph, DEFAULT_ORDER_BOUND,
};
use crate::reduce::{reduce, reduce_tracked, subdivide, FreshEdgePolicy, ReductionKind};

/// Largest dimap whose minors are enumerated unless told otherwise.
pub const DEFAULT_MINOR_BOUND: usize = 8;

/// Reductions applied in order, each naming its edge in the dimap it acts
/// on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReductionTrace {
    pub steps: Vec<(String, ReductionKind)>,
}

#[derive(Serialize, Deserialize)]
struct RawStep(String, String);

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn then(&self, edge: &str, kind: ReductionKind) -> ReductionTrace {
        let mut steps = self.steps.clone();
        steps.push((edge.to_string(), kind));
        ReductionTrace { steps }
    }

    pub fn replay(&self, d: &AlternatingDimap) -> Result<AlternatingDimap> {
        let mut cur = d.clone();
        for (name, kind) in &self.steps {
            let e = cur
                .find_edge(name)
                .ok_or_else(|| Error::UnknownEdge(name.clone()))?;
            cur = reduce(&cur, e, *kind)?;
        }
        Ok(cur)
    }

    /// A JSON list of `[edge, kind]` pairs, kinds written `1`, `w`, `w2`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(
            self.steps
                .iter()
                .map(|(e, k)| RawStep(e.clone(), k.symbol().into()))
                .collect::<Vec<_>>(),
        )
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ReductionTrace> {
        let raw: Vec<RawStep> =
            serde_json::from_value(v.clone()).map_err(|e| Error::FormatError(e.to_string()))?;
        let steps = raw
            .into_iter()
            .map(|RawStep(e, k)| {
                ReductionKind::parse(&k)
                    .map(|k| (e, k))
                    .ok_or_else(|| Error::FormatError(format!("unknown reduction {k:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(ReductionTrace { steps })
    }
}

#[derive(Clone, Debug)]
pub struct Minor {
    pub dimap: AlternatingDimap,
    pub trace: ReductionTrace,
}

fn check_bound(d: &AlternatingDimap, bound: usize) -> Result<()> {
    if d.num_edges() > bound {
        return Err(Error::SizeBoundExceeded {
            size: d.num_edges(),
            bound,
        });
    }
    Ok(())
}

/// Every minor of `d` with at least `target` edges, `d` included, one per
/// isomorphism class, each with a trace reaching it from `d`.
pub fn minors_up_to(d: &AlternatingDimap, target: usize) -> Result<BTreeMap<CanonicalForm, Minor>> {
    minors_up_to_bounded(d, target, DEFAULT_MINOR_BOUND)
}

pub fn minors_up_to_bounded(
    d: &AlternatingDimap,
    target: usize,
    bound: usize,
) -> Result<BTreeMap<CanonicalForm, Minor>> {
    check_bound(d, bound)?;
    let mut out = BTreeMap::new();
    out.insert(
        d.canonical_form(),
        Minor {
            dimap: d.clone(),
            trace: ReductionTrace::default(),
        },
    );
    let mut frontier = vec![Minor {
        dimap: d.clone(),
        trace: ReductionTrace::default(),
    }];
    while !frontier.is_empty() {
        let children: Vec<Vec<(CanonicalForm, Minor)>> = frontier
            .par_iter()
            .filter(|m| m.dimap.num_edges() > target)
            .map(|m| {
                let mut local = Vec::new();
                for e in m.dimap.edge_ids() {
                    for kind in ReductionKind::ALL {
                        let r = reduce(&m.dimap, e, kind).expect("live edge");
                        let trace = m.trace.then(m.dimap.edge_name(e), kind);
                        local.push((r.canonical_form(), Minor { dimap: r, trace }));
                    }
                }
                local
            })
            .collect();
        let mut next = Vec::new();
        for (cf, m) in children.into_iter().flatten() {
            if let std::collections::btree_map::Entry::Vacant(slot) = out.entry(cf) {
                slot.insert(m.clone());
                next.push(m);
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// A trace reducing `d` to a dimap isomorphic to `h`, if there is one.
pub fn has_minor(d: &AlternatingDimap, h: &AlternatingDimap) -> Result<Option<ReductionTrace>> {
    check_bound(d, DEFAULT_MINOR_BOUND)?;
    if h.num_edges() > d.num_edges() {
        return Ok(None);
    }
    let target = h.canonical_form();
    Ok(minors_up_to(d, h.num_edges())?
        .remove(&target)
        .map(|m| m.trace))
}

#[derive(Clone, Debug)]
pub struct ExcludedMinor {
    pub name: &'static str,
    pub dimap: AlternatingDimap,
}

fn pinned(polys: &[&str]) -> BTreeSet<String> {
    polys
        .iter()
        .map(|p| {
            p.parse::<MultiPoly16>()
                .expect("pinned polynomial")
                .to_string()
        })
        .collect()
}

fn derived_set(d: &AlternatingDimap, fresh: FreshEdgePolicy) -> BTreeSet<String> {
    let opts = EvalOptions {
        fresh,
        ..Default::default()
    };
    eti_all_orderings_with(d, &ParamSeq16::symbolic(), opts, DEFAULT_ORDER_BOUND)
        .map(|s| s.values().map(|v| v.to_string()).collect())
        .unwrap_or_default()
}

/// The unique connected class with `m` edges whose derived polynomials
/// are exactly `polys`.
fn find_by_derived(m: usize, polys: &[&str], fresh: FreshEdgePolicy) -> AlternatingDimap {
    let want = pinned(polys);
    let hits: Vec<AlternatingDimap> = enumerate_dimaps(m, true)
        .expect("within census bound")
        .dimaps()
        .into_iter()
        .filter(|d| derived_set(d, fresh) == want)
        .collect();
    assert_eq!(
        hits.len(),
        1,
        "pinned derived set must single out one class"
    );
    hits.into_iter().next().unwrap()
}

/// The twelve derived polynomials of `G₂,₄` when created edges may take
/// any position.
pub fn g24_derived_polynomials() -> Vec<String> {
    let mut out = Vec::new();
    for j in ["j*w*y*z", "a*j*w^2 + b*j*w*y + c*j*w*z"] {
        for k in ["k*w*x*y", "g*k*w*y + h*k*w^2 + i*k*w*x"] {
            for l in ["l*w*x*z", "d*l*w*z + e*l*w*x + f*l*w^2"] {
                out.push(format!("{j} + {k} + {l}"));
            }
        }
    }
    out.extend(
        [
            "w*x*y*z",
            "a*w^2*x + b*w*x*y + c*w*x*z",
            "d*w*y*z + e*w*x*y + f*w^2*y",
            "g*w*y*z + h*w^2*z + i*w*x*z",
        ]
        .map(String::from),
    );
    out
}

fn build_library() -> Vec<ExcludedMinor> {
    let append = FreshEdgePolicy::Append;
    let g13 = find_by_derived(3, &["w*y*z", "a*w^2 + b*w*y + c*w*z"], append);
    let g23a = find_by_derived(3, &["w*x*z", "d*w*z + e*w*x + f*w^2"], append);
    let g23c = find_by_derived(3, &["w*x*y", "g*w*y + h*w^2 + i*w*x"], append);
    let g24_polys = g24_derived_polynomials();
    let g24_refs: Vec<&str> = g24_polys.iter().map(String::as_str).collect();
    let g24 = find_by_derived(4, &g24_refs, FreshEdgePolicy::Anywhere);
    let two = alt_c(&PlaneGraph::cycle(2));
    let first = two.edge_ids().next().expect("four edges");
    let g351 = subdivide(&two, first);
    vec![
        ExcludedMinor {
            name: "g13",
            dimap: g13,
        },
        ExcludedMinor {
            name: "g23a",
            dimap: g23a,
        },
        ExcludedMinor {
            name: "g23c",
            dimap: g23c,
        },
        ExcludedMinor {
            name: "g24",
            dimap: g24,
        },
        ExcludedMinor {
            name: "g351",
            dimap: g351,
        },
    ]
}

/// `G₁,₃`, `Gᵃ₂,₃`, `Gᶜ₂,₃`, `G₂,₄` and `G₃,₅,₁`. The first four are the
/// census classes singled out by their derived polynomials.
pub fn excluded_library() -> &'static [ExcludedMinor] {
    static LIB: OnceLock<Vec<ExcludedMinor>> = OnceLock::new();
    LIB.get_or_init(build_library)
}

pub fn excluded(name: &str) -> Option<&'static AlternatingDimap> {
    let key = name.to_ascii_lowercase();
    excluded_library()
        .iter()
        .find(|m| m.name == key)
        .map(|m| &m.dimap)
}

/// Edges of `g` to ω-reduce, then edges to ω²-reduce, in order, so that
/// the result is isomorphic to the subdimap `h`. Edges named in the lists
/// are edges of `g`; an edge replaced by a reduction is reduced through its
/// replacement.
pub fn reduce_to_subdimap(
    g: &AlternatingDimap,
    h: &AlternatingDimap,
) -> Result<(Vec<String>, Vec<String>)> {
    check_bound(g, DEFAULT_MINOR_BOUND)?;
    if !is_subdimap(h, g) {
        return Err(Error::FormatError("not a subdimap".into()));
    }
    let keep: BTreeSet<&str> = h.edge_ids().map(|e| h.edge_name(e)).collect();
    let extra: Vec<String> = g
        .edge_ids()
        .map(|e| g.edge_name(e).to_string())
        .filter(|n| !keep.contains(n.as_str()))
        .collect();
    let alias: HashMap<String, EdgeId> = g
        .edge_ids()
        .map(|e| (g.edge_name(e).to_string(), e))
        .collect();
    let mut search = SubdimapSearch {
        target: h.canonical_form(),
        seen: BTreeSet::new(),
    };
    let mut seq = Vec::new();
    if search.go(g, &alias, &extra, ReductionKind::Omega, &mut seq) {
        let split = seq
            .iter()
            .position(|(_, k)| *k == ReductionKind::Omega2)
            .unwrap_or(seq.len());
        let names: Vec<String> = seq.into_iter().map(|(n, _)| n).collect();
        return Ok((names[..split].to_vec(), names[split..].to_vec()));
    }
    Err(Error::NotFound)
}

struct SubdimapSearch {
    target: CanonicalForm,
    seen: BTreeSet<(CanonicalForm, Vec<String>, ReductionKind)>,
}

impl SubdimapSearch {
    fn go(
        &mut self,
        d: &AlternatingDimap,
        alias: &HashMap<String, EdgeId>,
        rest: &[String],
        phase: ReductionKind,
        seq: &mut Vec<(String, ReductionKind)>,
    ) -> bool {
        if rest.is_empty() {
            return d.canonical_form() == self.target;
        }
        if !self.seen.insert((d.canonical_form(), rest.to_vec(), phase)) {
            return false;
        }
        let phases: &[ReductionKind] = if phase == ReductionKind::Omega {
            &[ReductionKind::Omega, ReductionKind::Omega2]
        } else {
            &[ReductionKind::Omega2]
        };
        for &kind in phases {
            for (i, name) in rest.iter().enumerate() {
                let red = reduce_tracked(d, alias[name], kind).expect("live edge");
                let mut next_alias = alias.clone();
                next_alias.remove(name);
                if let (Some(gone), Some(new)) = (red.removed, red.created) {
                    for v in next_alias.values_mut() {
                        if *v == gone {
                            *v = new;
                        }
                    }
                }
                let mut next_rest = rest.to_vec();
                next_rest.remove(i);
                seq.push((name.clone(), kind));
                if self.go(&red.dimap, &next_alias, &next_rest, kind, seq) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ultraloop() -> AlternatingDimap {
        AlternatingDimap::parse_rotations(&[("v", "+e -e")], &[("e", "v", "v")]).unwrap()
    }

    #[test]
    fn minors_of_the_ultraloop() {
        let m = minors_up_to(&ultraloop(), 0).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.contains_key(&AlternatingDimap::empty().canonical_form()));
    }

    #[test]
    fn traces_replay() {
        let g24 = excluded("g24").unwrap();
        for m in minors_up_to(g24, 0).unwrap().values() {
            assert!(m.trace.replay(g24).unwrap().is_isomorphic(&m.dimap));
            let back = ReductionTrace::from_json(&m.trace.to_json()).unwrap();
            assert_eq!(back, m.trace);
        }
    }

    #[test]
    fn library_stats() {
        let s = excluded("g13").unwrap().stats();
        assert_eq!((s.is, s.edges, s.af, s.cf), (1, 3, 2, 2));
        let a = excluded("g23a").unwrap();
        assert_eq!(a.num_vertices(), 2);
        assert!(a
            .faces()
            .anticlockwise
            .iter()
            .any(|f| f.boundary.len() == 3));
        let c = excluded("g23c").unwrap();
        assert!(c.faces().clockwise.iter().any(|f| f.boundary.len() == 3));
        let g351 = excluded("g351").unwrap().stats();
        assert_eq!((g351.is, g351.af, g351.cf, g351.edges), (3, 2, 2, 5));
        assert_eq!(excluded("g24").unwrap().num_edges(), 4);
    }

    #[test]
    fn bigger_targets_are_not_minors() {
        assert_eq!(
            has_minor(&ultraloop(), excluded("g13").unwrap()).unwrap(),
            None
        );
    }

    #[test]
    fn whole_dimap_needs_no_reductions() {
        let g13 = excluded("g13").unwrap();
        assert_eq!(reduce_to_subdimap(g13, g13).unwrap(), (vec![], vec![]));
    }
}
