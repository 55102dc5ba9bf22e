//! Exhaustive enumeration of alternating dimaps up to isomorphism.
//!
//! A dimap with `m` labelled edges is the same thing as a pair
//! `(σ₁, σ_ω)` of permutations of the edges, the third permutation being
//! forced by the product identity. Isomorphism is simultaneous conjugation,
//! so `σ₁` can be fixed to one representative per cycle type.
//!
//! ```
//! use altdimap::census::enumerate_dimaps;
//!
//! assert_eq!(enumerate_dimaps(1, false).unwrap().len(), 1);
//! assert_eq!(enumerate_dimaps(2, true).unwrap().len(), 3);
//! ```

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimap::{AlternatingDimap, CanonicalForm, PermutationTriple};
use crate::error::{Error, Result};
use crate::perm;

pub const DEFAULT_MAX_EDGES: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub m: usize,
    pub connected_only: bool,
    /// Canonical triples, sorted by canonical form.
    pub entries: Vec<PermutationTriple>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dimaps(&self) -> Vec<AlternatingDimap> {
        self.entries
            .iter()
            .map(|t| AlternatingDimap::from_triple(t).expect("corpus triples are valid"))
            .collect()
    }

    /// Only entries whose components all have genus zero.
    pub fn planar(&self) -> Corpus {
        Corpus {
            entries: self
                .entries
                .iter()
                .filter(|t| t.genus_per_component().unwrap().iter().all(|&g| g == 0))
                .cloned()
                .collect(),
            ..self.clone()
        }
    }
}

/// Partitions of `m` into positive parts, largest part first.
fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// The permutation with consecutive cycles of the given lengths.
fn cycle_type_rep(parts: &[usize]) -> perm::Perm {
    let mut p = Vec::new();
    let mut start = 0;
    for &len in parts {
        for i in 0..len {
            p.push(start + (i + 1) % len);
        }
        start += len;
    }
    p
}

pub fn enumerate_dimaps(m: usize, connected_only: bool) -> Result<Corpus> {
    enumerate_dimaps_bounded(m, connected_only, DEFAULT_MAX_EDGES)
}

pub fn enumerate_dimaps_bounded(m: usize, connected_only: bool, bound: usize) -> Result<Corpus> {
    if m > bound {
        return Err(Error::SizeBoundExceeded { size: m, bound });
    }
    let labels: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
    let omegas = perm::all(m);
    let forms: BTreeSet<CanonicalForm> = partitions(m)
        .par_iter()
        .flat_map_iter(|parts| {
            let s1 = cycle_type_rep(parts);
            let labels = &labels;
            omegas.iter().filter_map(move |sw| {
                let t = PermutationTriple::from_pair(labels.clone(), s1.clone(), sw.clone());
                (!connected_only || t.components().len() <= 1).then(|| t.canonical_form())
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(Corpus {
        m,
        connected_only,
        entries: forms.into_iter().map(|f| f.triple).collect(),
    })
}

/// All classes with `1..=max_m` edges, in increasing size.
pub fn corpus_up_to(max_m: usize, connected_only: bool) -> Result<Vec<AlternatingDimap>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        out.extend(enumerate_dimaps(m, connected_only)?.dimaps());
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct CorpusLine {
    m: usize,
    sigma1: Vec<Vec<String>>,
    sigmaw: Vec<Vec<String>>,
}

fn named_cycles(p: &[usize]) -> Vec<Vec<String>> {
    perm::cycles(p)
        .into_iter()
        .map(|c| c.into_iter().map(|x| format!("e{}", x + 1)).collect())
        .collect()
}

fn parse_cycles(m: usize, cycles: &[Vec<String>]) -> Option<perm::Perm> {
    let idx = |s: &String| -> Option<usize> {
        let n: usize = s.strip_prefix('e')?.parse().ok()?;
        (1..=m).contains(&n).then_some(n - 1)
    };
    let cs: Option<Vec<Vec<usize>>> = cycles.iter().map(|c| c.iter().map(idx).collect()).collect();
    perm::from_cycles(m, &cs?)
}

/// One `corpus-v1` line.
pub fn triple_to_line(t: &PermutationTriple) -> String {
    serde_json::to_string(&CorpusLine {
        m: t.len(),
        sigma1: named_cycles(&t.sigma1),
        sigmaw: named_cycles(&t.sigma_omega),
    })
    .expect("serializable")
}

pub fn triple_from_line(line: &str) -> std::result::Result<PermutationTriple, String> {
    let l: CorpusLine = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let s1 = parse_cycles(l.m, &l.sigma1).ok_or("bad sigma1 cycles")?;
    let sw = parse_cycles(l.m, &l.sigmaw).ok_or("bad sigmaw cycles")?;
    let labels = (1..=l.m).map(|i| format!("e{i}")).collect();
    Ok(PermutationTriple::from_pair(labels, s1, sw))
}

pub fn save_corpus(c: &Corpus, path: &Path) -> Result<()> {
    let mut f = fs::File::create(path).map_err(|e| Error::IoError(e.to_string()))?;
    for t in &c.entries {
        writeln!(f, "{}", triple_to_line(t)).map_err(|e| Error::IoError(e.to_string()))?;
    }
    Ok(())
}

/// Reads a `corpus-v1` file. Every entry must have the same edge count.
pub fn load_corpus(path: &Path) -> Result<Corpus> {
    let f = fs::File::open(path).map_err(|e| Error::IoError(e.to_string()))?;
    let mut entries = Vec::new();
    let mut m = None;
    for (i, line) in BufReader::new(f).lines().enumerate() {
        let line = line.map_err(|e| Error::IoError(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |why: String| Error::FormatError(format!("line {}: {}", i + 1, why));
        let t = triple_from_line(&line).map_err(bad)?;
        if *m.get_or_insert(t.len()) != t.len() {
            return Err(bad("edge count differs from earlier lines".into()));
        }
        entries.push(t);
    }
    let connected_only = entries.iter().all(|t| t.components().len() <= 1);
    Ok(Corpus {
        m: m.unwrap_or(0),
        connected_only,
        entries,
    })
}
