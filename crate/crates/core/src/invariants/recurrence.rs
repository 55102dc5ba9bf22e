use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::Ring;
use crate::dimap::{AlternatingDimap, EdgeId};
use crate::error::{Error, Result};
use crate::perm;
use crate::reduce::{
    classify_edge_with, reduce_first_placements, EdgeClass, FreshEdgePolicy, ReductionKind,
    SemiloopPolicy,
};

/// Largest edge count swept over all orderings unless told otherwise.
pub const DEFAULT_ORDER_BOUND: usize = 7;

/// A linear reduction recurrence: for each edge class, the coefficients of
/// `F(D[1]e)`, `F(D[ω]e)` and `F(D[ω²]e)`. Triloops reduce the same way
/// under all three operations, so their rows only use the first entry.
#[derive(Clone, Debug)]
pub struct Recurrence<R> {
    rows: Vec<[R; 3]>,
}

impl<R: Ring> Recurrence<R> {
    pub fn from_fn(f: impl Fn(EdgeClass) -> [R; 3]) -> Self {
        Recurrence {
            rows: EdgeClass::ALL.iter().map(|&c| f(c)).collect(),
        }
    }

    pub fn row(&self, c: EdgeClass) -> &[R; 3] {
        &self.rows[c as usize]
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalOptions {
    /// How edges that are proper semiloops of several types are treated.
    pub semiloop: SemiloopPolicy,
    /// Where edges created by ω- and ω²-reductions join the ordering.
    pub fresh: FreshEdgePolicy,
}

/// Evaluates a recurrence along orderings, caching on the exact labelled
/// state (dimap, remaining ordering).
pub struct Evaluator<'a, R> {
    rec: &'a Recurrence<R>,
    opts: EvalOptions,
    memo: HashMap<(AlternatingDimap, Vec<EdgeId>), Vec<R>>,
}

fn push_new<R: PartialEq>(v: &mut Vec<R>, x: R) {
    if !v.contains(&x) {
        v.push(x);
    }
}

impl<'a, R: Ring> Evaluator<'a, R> {
    pub fn new(rec: &'a Recurrence<R>, opts: EvalOptions) -> Self {
        Evaluator {
            rec,
            opts,
            memo: HashMap::new(),
        }
    }

    /// The value along `order`. Under [`FreshEdgePolicy::Anywhere`] this is
    /// the first of the possible values.
    pub fn eval(&mut self, d: &AlternatingDimap, order: &[EdgeId]) -> Result<R> {
        Ok(self.eval_set(d, order)?.swap_remove(0))
    }

    /// Every value `order` can produce. A singleton unless fresh edges may
    /// be placed anywhere, in which case each branch picks its placements
    /// independently.
    pub fn eval_set(&mut self, d: &AlternatingDimap, order: &[EdgeId]) -> Result<Vec<R>> {
        let Some(&e) = order.first() else {
            return Ok(vec![R::one_val()]);
        };
        let key = (d.clone(), order.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let class = classify_edge_with(d, e, self.opts.semiloop)?;
        let row = self.rec.row(class);
        let kinds: &[ReductionKind] = if class.is_triloop() {
            &[ReductionKind::Star]
        } else {
            &ReductionKind::ALL
        };
        let mut acc = vec![R::zero_val()];
        for (coeff, &kind) in row.iter().zip(kinds) {
            if coeff.is_zero_val() {
                continue;
            }
            let (d2, orders) = reduce_first_placements(d, order, kind, self.opts.fresh)?;
            let mut branch = Vec::new();
            for o2 in orders {
                for v in self.eval_set(&d2, &o2)? {
                    push_new(&mut branch, coeff.mul(&v));
                }
            }
            let mut next = Vec::new();
            for a in &acc {
                for b in &branch {
                    push_new(&mut next, a.add(b));
                }
            }
            acc = next;
        }
        self.memo.insert(key, acc.clone());
        Ok(acc)
    }
}

/// Checks that `order` lists every edge of `d` exactly once.
pub fn check_ordering(d: &AlternatingDimap, order: &[EdgeId]) -> Result<()> {
    for &e in order {
        if !d.has_edge(e) {
            return Err(Error::UnknownEdge(format!("#{e}")));
        }
    }
    let mut seen: Vec<EdgeId> = order.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != order.len() || seen.len() != d.num_edges() {
        return Err(Error::FormatError(
            "ordering must list every edge exactly once".into(),
        ));
    }
    Ok(())
}

/// Resolves edge names to ids.
pub fn ordering_from_names<S: AsRef<str>>(
    d: &AlternatingDimap,
    names: &[S],
) -> Result<Vec<EdgeId>> {
    let order = names
        .iter()
        .map(|n| {
            d.find_edge(n.as_ref())
                .ok_or_else(|| Error::UnknownEdge(n.as_ref().to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    check_ordering(d, &order)?;
    Ok(order)
}

pub fn ordering_names(d: &AlternatingDimap, order: &[EdgeId]) -> Vec<String> {
    order.iter().map(|&e| d.edge_name(e).to_string()).collect()
}

pub fn derived<R: Ring>(
    d: &AlternatingDimap,
    order: &[EdgeId],
    rec: &Recurrence<R>,
    opts: EvalOptions,
) -> Result<R> {
    check_ordering(d, order)?;
    Evaluator::new(rec, opts).eval(d, order)
}

/// The distinct values a recurrence takes over all orderings, each with
/// the lexicographically first ordering that produces it.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedSet<V> {
    entries: Vec<(V, Vec<EdgeId>)>,
}

impl<V: PartialEq> DerivedSet<V> {
    fn insert(&mut self, v: V, witness: Vec<EdgeId>) {
        if !self.contains(&v) {
            self.entries.push((v, witness));
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.entries.len() == 1
    }

    pub fn contains(&self, v: &V) -> bool {
        self.entries.iter().any(|(x, _)| x == v)
    }

    pub fn values(&self) -> impl Iterator<Item = &V> {
        self.entries.iter().map(|(v, _)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, &[EdgeId])> {
        self.entries.iter().map(|(v, w)| (v, w.as_slice()))
    }

    pub fn witness(&self, v: &V) -> Option<&[EdgeId]> {
        self.entries
            .iter()
            .find(|(x, _)| x == v)
            .map(|(_, w)| w.as_slice())
    }

    /// Two orderings with different values, if there are any.
    pub fn disagreement(&self) -> Option<(&[EdgeId], &[EdgeId])> {
        match self.entries.as_slice() {
            [(_, a), (_, b), ..] => Some((a, b)),
            _ => None,
        }
    }

    /// The common value when every ordering agrees.
    pub fn single(&self) -> Option<&V> {
        match self.entries.as_slice() {
            [(v, _)] => Some(v),
            _ => None,
        }
    }

    pub fn map<W: PartialEq>(&self, f: impl Fn(&V) -> W) -> DerivedSet<W> {
        let mut out = DerivedSet {
            entries: Vec::new(),
        };
        for (v, w) in &self.entries {
            out.insert(f(v), w.clone());
        }
        out
    }
}

/// A value with the ordering that produced it.
type Witnessed<R> = (R, Vec<EdgeId>);

pub fn all_orderings<R: Ring>(
    d: &AlternatingDimap,
    rec: &Recurrence<R>,
    opts: EvalOptions,
    bound: usize,
) -> Result<DerivedSet<R>> {
    let edges: Vec<EdgeId> = d.edge_ids().collect();
    let m = edges.len();
    if m > bound {
        return Err(Error::SizeBoundExceeded { size: m, bound });
    }
    let mut out = DerivedSet {
        entries: Vec::new(),
    };
    if m == 0 {
        out.insert(R::one_val(), Vec::new());
        return Ok(out);
    }
    let tails = perm::all(m - 1);
    let per_first: Vec<Result<Vec<Witnessed<R>>>> = (0..m)
        .into_par_iter()
        .map(|i| {
            let rest: Vec<EdgeId> = edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e)
                .collect();
            let mut ev = Evaluator::new(rec, opts);
            let mut found: Vec<(R, Vec<EdgeId>)> = Vec::new();
            for t in &tails {
                let order: Vec<EdgeId> = std::iter::once(edges[i])
                    .chain(t.iter().map(|&j| rest[j]))
                    .collect();
                for v in ev.eval_set(d, &order)? {
                    if !found.iter().any(|(x, _)| *x == v) {
                        found.push((v, order.clone()));
                    }
                }
            }
            Ok(found)
        })
        .collect();
    for chunk in per_first {
        for (v, w) in chunk? {
            out.insert(v, w);
        }
    }
    Ok(out)
}
