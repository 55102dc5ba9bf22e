//! JSON documents: `adm-v1` dimaps, `trin-v1` permutation triples, `pg-v1`
//! plane graphs and `params-v1` parameter assignments.
//!
//! `adm-v1` rotations are anticlockwise as seen from the positive side of
//! the surface; `+e` is the outgoing slot of `e` and `-e` its incoming slot.
//! Emission is canonical: vertices and edges sorted by id, each rotation
//! started at its least slot.
//!
//! ```
//! use altdimap::formats::{emit_adm, parse_adm};
//!
//! let src = r#"{"format":"adm-v1","vertices":[{"id":"v","rot":["+e","-e"]}],"edges":[{"id":"e","tail":"v","head":"v"}]}"#;
//! let u = parse_adm(src).unwrap();
//! assert_eq!(u.num_edges(), 1);
//! assert_eq!(parse_adm(&emit_adm(&u)).unwrap(), u);
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{parse_rational, render_rational, ParamSeq16, ParamValue, PARAM_NAMES};
use crate::dimap::{
    parse_slot, AlternatingDimap, Dir, PermutationTriple, RawDigraph, RawEdge, RawVertex,
};
use crate::error::{Error, Result};
use crate::invariants::{PlaneGraph, RawPlaneEdge, RawPlaneGraph, RawPlaneVertex};
use crate::perm;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdmDoc {
    format: String,
    vertices: Vec<AdmVertex>,
    edges: Vec<AdmEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdmVertex {
    id: String,
    rot: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdmEdge {
    id: String,
    tail: String,
    head: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TrinDoc {
    format: String,
    edges: Vec<String>,
    sigma1: Vec<Vec<String>>,
    sigmaw: Vec<Vec<String>>,
    sigmaw2: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PgDoc {
    format: String,
    vertices: Vec<RawPlaneVertex>,
    edges: Vec<RawPlaneEdge>,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::FormatError(format!("line {} column {}: {e}", e.line(), e.column()))
}

fn check_format(found: &str, want: &str) -> Result<()> {
    if found != want {
        return Err(Error::FormatError(format!(
            "field format: expected {want:?}, found {found:?}"
        )));
    }
    Ok(())
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

fn slot(name: &str, dir: Dir) -> String {
    match dir {
        Dir::Out => format!("+{name}"),
        Dir::In => format!("-{name}"),
    }
}

pub fn parse_adm(src: &str) -> Result<AlternatingDimap> {
    let doc: AdmDoc = serde_json::from_str(src).map_err(json_err)?;
    check_format(&doc.format, "adm-v1")?;
    let raw = RawDigraph {
        vertices: doc
            .vertices
            .into_iter()
            .map(|v| {
                let rot = v
                    .rot
                    .iter()
                    .map(|s| parse_slot(s))
                    .collect::<Result<_>>()
                    .map_err(|e| Error::FormatError(format!("vertex {}: {e}", v.id)))?;
                Ok(RawVertex { id: v.id, rot })
            })
            .collect::<Result<_>>()?,
        edges: doc
            .edges
            .into_iter()
            .map(|e| RawEdge {
                id: e.id,
                tail: e.tail,
                head: e.head,
            })
            .collect(),
    };
    AlternatingDimap::validate(&raw)
}

/// Canonical `adm-v1` text.
pub fn emit_adm(d: &AlternatingDimap) -> String {
    let raw = d.to_raw();
    let mut vertices: Vec<AdmVertex> = raw
        .vertices
        .into_iter()
        .map(|v| {
            let mut rot = v.rot;
            if let Some(start) = (0..rot.len()).min_by(|&i, &j| rot[i].cmp(&rot[j])) {
                rot.rotate_left(start);
            }
            AdmVertex {
                id: v.id,
                rot: rot.iter().map(|(n, d)| slot(n, *d)).collect(),
            }
        })
        .collect();
    vertices.sort_by(|a, b| a.id.cmp(&b.id));
    let mut edges: Vec<AdmEdge> = raw
        .edges
        .into_iter()
        .map(|e| AdmEdge {
            id: e.id,
            tail: e.tail,
            head: e.head,
        })
        .collect();
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    pretty(&AdmDoc {
        format: "adm-v1".into(),
        vertices,
        edges,
    })
}

fn named_cycles(labels: &[String], p: &[usize]) -> Vec<Vec<String>> {
    perm::cycles(p)
        .into_iter()
        .map(|c| c.into_iter().map(|i| labels[i].clone()).collect())
        .collect()
}

fn cycles_to_perm(field: &str, labels: &[String], cycles: &[Vec<String>]) -> Result<perm::Perm> {
    let index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let cs = cycles
        .iter()
        .map(|c| {
            c.iter()
                .map(|l| {
                    index.get(l.as_str()).copied().ok_or_else(|| {
                        Error::FormatError(format!("field {field}: unknown edge {l:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    perm::from_cycles(labels.len(), &cs).ok_or_else(|| {
        Error::FormatError(format!("field {field}: cycles do not form a permutation"))
    })
}

pub fn parse_trin(src: &str) -> Result<PermutationTriple> {
    let doc: TrinDoc = serde_json::from_str(src).map_err(json_err)?;
    check_format(&doc.format, "trin-v1")?;
    let t = PermutationTriple {
        sigma1: cycles_to_perm("sigma1", &doc.edges, &doc.sigma1)?,
        sigma_omega: cycles_to_perm("sigmaw", &doc.edges, &doc.sigmaw)?,
        sigma_omega2: cycles_to_perm("sigmaw2", &doc.edges, &doc.sigmaw2)?,
        labels: doc.edges,
    };
    t.check()?;
    Ok(t)
}

pub fn emit_trin(t: &PermutationTriple) -> String {
    pretty(&TrinDoc {
        format: "trin-v1".into(),
        edges: t.labels.clone(),
        sigma1: named_cycles(&t.labels, &t.sigma1),
        sigmaw: named_cycles(&t.labels, &t.sigma_omega),
        sigmaw2: named_cycles(&t.labels, &t.sigma_omega2),
    })
}

pub fn parse_pg(src: &str) -> Result<PlaneGraph> {
    let doc: PgDoc = serde_json::from_str(src).map_err(json_err)?;
    check_format(&doc.format, "pg-v1")?;
    PlaneGraph::from_raw(&RawPlaneGraph {
        vertices: doc.vertices,
        edges: doc.edges,
    })
}

pub fn emit_pg(g: &PlaneGraph) -> String {
    let raw = g.to_raw();
    pretty(&PgDoc {
        format: "pg-v1".into(),
        vertices: raw.vertices,
        edges: raw.edges,
    })
}

/// Reads `params-v1`: an object from parameter names to integers, rational
/// strings such as `"1/2"`, or the parameter's own name for a free symbol.
/// Missing parameters stay free.
pub fn parse_params(src: &str) -> Result<ParamSeq16> {
    let v: Value = serde_json::from_str(src).map_err(json_err)?;
    let Value::Object(map) = v else {
        return Err(Error::FormatError("params-v1 must be a JSON object".into()));
    };
    let mut p = ParamSeq16::symbolic();
    for (name, val) in map {
        if name == "format" {
            check_format(val.as_str().unwrap_or_default(), "params-v1")?;
            continue;
        }
        let bad = || {
            Error::FormatError(format!(
                "field {name}: expected a number, a rational string or {name:?}"
            ))
        };
        let pv = match &val {
            Value::Number(n) => {
                let r = n
                    .as_i64()
                    .map(crate::algebra::int)
                    .or_else(|| n.to_string().parse::<f64>().ok().and_then(exact_decimal));
                ParamValue::Rational(r.ok_or_else(bad)?)
            }
            Value::String(s) if *s == name => ParamValue::Symbol,
            Value::String(s) => ParamValue::Rational(parse_rational(s).ok_or_else(bad)?),
            _ => return Err(bad()),
        };
        p.set_named(&name, pv)?;
    }
    Ok(p)
}

/// Decimal literals like `0.5`, read exactly.
fn exact_decimal(x: f64) -> Option<crate::algebra::Rational> {
    let s = format!("{x}");
    let (int, frac) = s.split_once('.').unwrap_or((&s, ""));
    parse_rational(&format!("{int}{frac}/1{}", "0".repeat(frac.len())))
}

pub fn emit_params(p: &ParamSeq16) -> String {
    let mut map = serde_json::Map::new();
    map.insert("format".into(), Value::String("params-v1".into()));
    for (i, name) in PARAM_NAMES.iter().enumerate() {
        let v = match p.get(i) {
            ParamValue::Symbol => Value::String(name.to_string()),
            ParamValue::Rational(r) if r.is_integer() => {
                serde_json::json!(r.to_integer().to_string().parse::<i64>().ok())
            }
            ParamValue::Rational(r) => Value::String(render_rational(r)),
            ParamValue::Cyclotomic(c) => Value::String(c.to_string()),
        };
        map.insert(name.to_string(), v);
    }
    pretty(&Value::Object(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn digon_round_trip_is_canonical() {
        let src = r#"{"format":"adm-v1","vertices":[{"id":"v","rot":["+f","-e"]},{"id":"u","rot":["-f","+e"]}],
            "edges":[{"id":"f","tail":"v","head":"u"},{"id":"e","tail":"u","head":"v"}]}"#;
        let d = parse_adm(src).unwrap();
        let out = emit_adm(&d);
        assert_eq!(emit_adm(&parse_adm(&out).unwrap()), out);
        assert!(out.find("\"u\"").unwrap() < out.find("\"v\"").unwrap());
    }

    #[test]
    fn malformed_slots_name_their_vertex() {
        let src = r#"{"format":"adm-v1","vertices":[{"id":"v","rot":["e","-e"]}],"edges":[{"id":"e","tail":"v","head":"v"}]}"#;
        let err = parse_adm(src).unwrap_err().to_string();
        assert!(err.contains("vertex v"), "{err}");
        let bad_json = "{\"format\":\"adm-v1\",\n\"vertices\":[}";
        assert!(parse_adm(bad_json)
            .unwrap_err()
            .to_string()
            .contains("line 2"));
    }

    #[test]
    fn wrong_format_tag() {
        let src = r#"{"format":"pg-v1","vertices":[],"edges":[]}"#;
        assert!(parse_adm(src).is_err());
    }

    #[test]
    fn triple_round_trip() {
        let t = PermutationTriple::from_pair(
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec![1, 2, 0],
            vec![1, 2, 0],
        );
        let back = parse_trin(&emit_trin(&t)).unwrap();
        assert_eq!(back, t);
        let d = AlternatingDimap::from_triple(&back).unwrap();
        assert_eq!(d.stats().genus, vec![1]);
    }

    #[test]
    fn params_mix_numbers_and_symbols() {
        let p = parse_params(r#"{"w":1,"x":0,"y":"y","z":"z","a":"1/2","b":0.25}"#).unwrap();
        assert_eq!(p.get_named("w"), Some(&ParamValue::Rational(rat(1, 1))));
        assert_eq!(p.get_named("y"), Some(&ParamValue::Symbol));
        assert_eq!(p.get_named("a"), Some(&ParamValue::Rational(rat(1, 2))));
        assert_eq!(p.get_named("b"), Some(&ParamValue::Rational(rat(1, 4))));
        assert_eq!(p.get_named("l"), Some(&ParamValue::Symbol));
        assert!(parse_params(r#"{"y":"x"}"#).is_err());
        assert!(parse_params(r#"{"q":1}"#).is_err());
        assert_eq!(parse_params(&emit_params(&p)).unwrap(), p);
    }

    #[test]
    fn plane_graph_round_trip() {
        let g = PlaneGraph::cycle(3);
        let out = emit_pg(&g);
        assert_eq!(emit_pg(&parse_pg(&out).unwrap()), out);
    }
}
