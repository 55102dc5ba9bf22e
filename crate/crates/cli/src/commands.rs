use std::fmt::Display;
use std::fs;
use std::path::Path;

use altdimap::algebra::ParamSeq16;
use altdimap::census::{enumerate_dimaps, save_corpus};
use altdimap::dimap::{AlternatingDimap, EdgeId, Face};
use altdimap::formats::{emit_adm, parse_adm, parse_params, parse_pg};
use altdimap::invariants::{
    alt_a, alt_c, atutte_zeta, ctutte_zeta, eti_all_orderings_with, eti_derived_with,
    ordering_from_names, ordering_names, tutte_all_orderings, tutte_plane,
    tutte_zeta_all_orderings, DerivedSet, EvalOptions, PlaneGraph, TutteKind, ZetaSign,
    DEFAULT_ORDER_BOUND,
};
use altdimap::minors::{excluded, has_minor};
use altdimap::reduce::{
    classify_edge, reduce as reduce_edge, FreshEdgePolicy, ReductionKind, SemiloopPolicy,
};
use altdimap::structure::{
    is_a_alternating, is_a_simple, is_alt_a_image, is_alt_c_image, is_c_alternating, is_c_simple,
};
use altdimap::triality::{trial as trial_once, trial2};
use altdimap::{Error, Result};
use serde_json::{json, Value};

use crate::outcome::{Outcome, EXIT_NOT_WELL_DEFINED, EXIT_SELF_CHECK};
use crate::{Fresh, Op, Semiloop, Sign};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::IoError(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AlternatingDimap> {
    parse_adm(&read(path)?)
}

fn load_pg(path: &Path) -> Result<PlaneGraph> {
    parse_pg(&read(path)?)
}

fn dimap_outcome(d: &AlternatingDimap) -> Outcome {
    let text = emit_adm(d);
    let json: Value = serde_json::from_str(&text).expect("emitted JSON parses");
    Outcome::ok(text, json)
}

fn names(d: &AlternatingDimap, es: &[EdgeId]) -> Vec<String> {
    ordering_names(d, es)
}

pub fn validate(file: &Path) -> Result<Outcome> {
    let d = load(file)?;
    let text = format!(
        "valid: {} vertices, {} edges\n",
        d.num_vertices(),
        d.num_edges()
    );
    Ok(Outcome::ok(
        text,
        json!({"valid": true, "vertices": d.num_vertices(), "edges": d.num_edges()}),
    ))
}

pub fn stats(file: &Path) -> Result<Outcome> {
    let s = load(file)?.stats();
    let genus: Vec<String> = s.genus.iter().map(u32::to_string).collect();
    let text = format!(
        "k {}\nis {}\naf {}\ncf {}\nedges {}\ngenus {}\n",
        s.k,
        s.is,
        s.af,
        s.cf,
        s.edges,
        genus.join(" ")
    );
    let json =
        json!({"k": s.k, "is": s.is, "af": s.af, "cf": s.cf, "edges": s.edges, "genus": s.genus});
    Ok(Outcome::ok(text, json))
}

pub fn classify(file: &Path) -> Result<Outcome> {
    let d = load(file)?;
    let mut rows = Vec::new();
    for e in d.edge_ids() {
        let class = match classify_edge(&d, e) {
            Ok(c) => c.name().to_string(),
            Err(Error::MultiSemiloop(_)) => "proper semiloop of several types".to_string(),
            Err(err) => return Err(err),
        };
        rows.push((d.edge_name(e).to_string(), class));
    }
    rows.sort();
    let text: String = rows.iter().map(|(e, c)| format!("{e}: {c}\n")).collect();
    let json = Value::Object(
        rows.into_iter()
            .map(|(e, c)| (e, Value::String(c)))
            .collect(),
    );
    Ok(Outcome::ok(text, json))
}

pub fn faces(file: &Path) -> Result<Outcome> {
    let d = load(file)?;
    let f = d.faces();
    let list =
        |fs: &[Face]| -> Vec<Vec<String>> { fs.iter().map(|f| names(&d, &f.boundary)).collect() };
    let (cw, acw) = (list(&f.clockwise), list(&f.anticlockwise));
    let mut text = String::new();
    for (label, fs) in [("clockwise", &cw), ("anticlockwise", &acw)] {
        for b in fs.iter() {
            text.push_str(&format!("{label} ({}): {}\n", b.len(), b.join(" ")));
        }
    }
    Ok(Outcome::ok(
        text,
        json!({"clockwise": cw, "anticlockwise": acw}),
    ))
}

pub fn reduce(file: &Path, edge: &str, op: Op) -> Result<Outcome> {
    let d = load(file)?;
    let e = d
        .find_edge(edge)
        .ok_or_else(|| Error::UnknownEdge(edge.to_string()))?;
    let kind = match op {
        Op::One => ReductionKind::One,
        Op::Omega => ReductionKind::Omega,
        Op::Omega2 => ReductionKind::Omega2,
    };
    Ok(dimap_outcome(&reduce_edge(&d, e, kind)?))
}

pub fn trial(file: &Path, square: bool) -> Result<Outcome> {
    let d = load(file)?;
    Ok(dimap_outcome(&if square {
        trial2(&d)
    } else {
        trial_once(&d)
    }))
}

/// Distinct values with the first ordering producing each; exit 2 when
/// there is more than one.
fn value_set<V: Display + PartialEq>(
    d: &AlternatingDimap,
    set: &DerivedSet<V>,
    distinct: bool,
) -> Outcome {
    let rows: Vec<(String, Vec<String>)> = set
        .iter()
        .map(|(v, w)| (v.to_string(), names(d, w)))
        .collect();
    let text: String = if distinct {
        rows.iter().map(|(v, _)| format!("{v}\n")).collect()
    } else {
        rows.iter()
            .map(|(v, w)| format!("{v}\t[{}]\n", w.join(",")))
            .collect()
    };
    let json = json!({
        "well_defined": rows.len() == 1,
        "values": rows.iter().map(|(v, w)| json!({"value": v, "ordering": w})).collect::<Vec<_>>(),
    });
    let out = Outcome::ok(text, json);
    if rows.len() > 1 {
        out.with_code(EXIT_NOT_WELL_DEFINED)
    } else {
        out
    }
}

pub fn eti(
    file: &Path,
    order: Option<Vec<String>>,
    params: Option<&Path>,
    distinct: bool,
    fresh: Fresh,
    semiloop: Semiloop,
) -> Result<Outcome> {
    let d = load(file)?;
    let p = match params {
        Some(path) => parse_params(&read(path)?)?,
        None => ParamSeq16::symbolic(),
    };
    let opts = EvalOptions {
        fresh: match fresh {
            Fresh::Append => FreshEdgePolicy::Append,
            Fresh::Inherit => FreshEdgePolicy::Inherit,
            Fresh::Anywhere => FreshEdgePolicy::Anywhere,
        },
        semiloop: match semiloop {
            Semiloop::Refuse => SemiloopPolicy::Refuse,
            Semiloop::Precedence => SemiloopPolicy::Precedence,
        },
    };
    if let Some(names) = order {
        let o = ordering_from_names(&d, &names)?;
        let v = eti_derived_with(&d, &o, &p, opts)?;
        return Ok(Outcome::ok(
            format!("{v}\n"),
            json!({"value": v.to_string(), "ordering": names}),
        ));
    }
    let set = eti_all_orderings_with(&d, &p, opts, DEFAULT_ORDER_BOUND)?;
    Ok(value_set(&d, &set, distinct))
}

fn zeta_sign(s: Sign) -> ZetaSign {
    match s {
        Sign::Plus => ZetaSign::Plus,
        Sign::Minus => ZetaSign::Minus,
    }
}

/// Without `--all-orders` the distinct values are still computed, but only
/// a single common value is printed.
pub fn tutte_invariant(
    file: &Path,
    clockwise: bool,
    all_orders: bool,
    zeta: Option<Sign>,
) -> Result<Outcome> {
    let d = load(file)?;
    let kind = if clockwise {
        TutteKind::C
    } else {
        TutteKind::A
    };
    if let Some(s) = zeta {
        let sign = zeta_sign(s);
        let closed = if clockwise {
            ctutte_zeta(&d, sign)
        } else {
            atutte_zeta(&d, sign)
        };
        let set = tutte_zeta_all_orderings(&d, kind, sign)?;
        let agrees = set.single() == Some(&closed);
        let text = format!("{closed}\n");
        let json = json!({"value": closed.to_string(), "orderings_agree": agrees});
        let out = Outcome::ok(text, json);
        return Ok(if agrees {
            out
        } else {
            out.with_code(EXIT_SELF_CHECK)
        });
    }
    let set = tutte_all_orderings(&d, kind)?;
    if all_orders || !set.is_singleton() {
        return Ok(value_set(&d, &set, false));
    }
    let v = set.single().expect("singleton");
    Ok(Outcome::ok(
        format!("{v}\n"),
        json!({"value": v.to_string()}),
    ))
}

pub fn tutte(file: &Path) -> Result<Outcome> {
    let t = tutte_plane(&load_pg(file)?);
    Ok(Outcome::ok(
        format!("{t}\n"),
        json!({"value": t.to_string()}),
    ))
}

pub fn alt(file: &Path, clockwise: bool) -> Result<Outcome> {
    let g = load_pg(file)?;
    Ok(dimap_outcome(&if clockwise {
        alt_c(&g)
    } else {
        alt_a(&g)
    }))
}

pub fn tutte_match(graph: &Path, dimap: &Path) -> Result<Outcome> {
    let g = load_pg(graph)?;
    let d = load(dimap)?;
    let m = altdimap::invariants::tutte_match(&g, &d)?;
    let s = &m.structure;
    let text = format!(
        "T(G) {}\nT_c(D) {}\npolynomials equal {}\nbridges {} expected {}\nloops {} expected {}\ncores isomorphic {}\nroutes agree {}\n",
        m.graph_poly,
        m.dimap_poly,
        m.matches(),
        s.graph_bridges,
        s.expected_bridges,
        s.graph_loops,
        s.expected_loops,
        s.cores_isomorphic,
        m.routes_agree()
    );
    let json = json!({
        "graph_poly": m.graph_poly.to_string(),
        "dimap_poly": m.dimap_poly.to_string(),
        "matches": m.matches(),
        "structure_holds": s.holds(),
        "routes_agree": m.routes_agree(),
    });
    let out = Outcome::ok(text, json);
    Ok(if m.routes_agree() {
        out
    } else {
        out.with_code(EXIT_SELF_CHECK)
    })
}

pub fn recognize(file: &Path) -> Result<Outcome> {
    let d = load(file)?;
    let rows = [
        ("c-simple", is_c_simple(&d)),
        ("a-simple", is_a_simple(&d)),
        ("c-alternating", is_c_alternating(&d)),
        ("a-alternating", is_a_alternating(&d)),
        ("alt_c image", is_alt_c_image(&d).is_some()),
        ("alt_a image", is_alt_a_image(&d).is_some()),
    ];
    let text: String = rows
        .iter()
        .map(|(n, b)| format!("{n}: {}\n", if *b { "yes" } else { "no" }))
        .collect();
    let json = Value::Object(
        rows.iter()
            .map(|(n, b)| (n.to_string(), Value::Bool(*b)))
            .collect(),
    );
    Ok(Outcome::ok(text, json))
}

pub fn minor(file: &Path, target: &str) -> Result<Outcome> {
    let d = load(file)?;
    let h = match excluded(target) {
        Some(h) => h.clone(),
        None => load(Path::new(target))?,
    };
    Ok(match has_minor(&d, &h)? {
        Some(trace) => {
            let steps = trace.to_json();
            Outcome::ok(
                format!("minor found\ntrace {steps}\n"),
                json!({"minor": true, "trace": steps}),
            )
        }
        None => Outcome::ok("no minor\n", json!({"minor": false})),
    })
}

pub fn enumerate(edges: usize, connected: bool, planar: bool, out: &Path) -> Result<Outcome> {
    let mut corpus = enumerate_dimaps(edges, connected)?;
    if planar {
        corpus = corpus.planar();
    }
    save_corpus(&corpus, out)?;
    let n = corpus.len();
    Ok(Outcome::ok(
        format!("{n} classes written to {}\n", out.display()),
        json!({"classes": n, "edges": edges}),
    ))
}
