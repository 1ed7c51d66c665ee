//! JSON documents for curves, functions and divisors. Every number is a
//! rational string such as `"3"` or `"-7/2"`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use tropweil::{Breakpoint, CurveError, CurvePoint, Divisor, EdgeId, EdgeSpec, FunctionError, PLFunction, Rat, TropicalCurve};

#[derive(Debug, Error)]
pub enum DocError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid curve: {0}")]
    Curve(#[from] CurveError),
    #[error("invalid function: {0}")]
    Function(#[from] FunctionError),
    #[error("function document has no value for vertex {0:?}")]
    MissingValue(String),
    #[error("function document names unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid point {text:?}: {msg}")]
    Point { text: String, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub ends: [String; 2],
    pub length: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeProfileDoc {
    /// `[offset, value]` pairs in increasing offset.
    pub breakpoints: Vec<[Rat; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDoc {
    pub vertex_values: BTreeMap<String, Rat>,
    /// Edges without breakpoints may be omitted.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edges: BTreeMap<String, EdgeProfileDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointDoc {
    Vertex(String),
    Edge { edge: String, offset: Rat },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorEntryDoc {
    pub at: PointDoc,
    pub coeff: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorDoc {
    pub points: Vec<DivisorEntryDoc>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn curve_from_doc(doc: &CurveDoc) -> Result<TropicalCurve, DocError> {
    let edges: Vec<EdgeSpec> = doc
        .edges
        .iter()
        .map(|e| EdgeSpec::new(&e.id, &e.ends[0], &e.ends[1], e.length.clone()))
        .collect();
    Ok(TropicalCurve::new(&doc.vertices, &edges)?)
}

pub fn curve_to_doc(curve: &TropicalCurve) -> CurveDoc {
    CurveDoc {
        vertices: curve.vertex_names().to_vec(),
        edges: curve
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: e.name.clone(),
                ends: [curve.vertex_name(e.tail).to_string(), curve.vertex_name(e.head).to_string()],
                length: e.length.clone(),
            })
            .collect(),
    }
}

pub fn parse_curve(text: &str) -> Result<TropicalCurve, DocError> {
    curve_from_doc(&serde_json::from_str(text)?)
}

pub fn function_from_doc(curve: &Arc<TropicalCurve>, doc: &FunctionDoc) -> Result<PLFunction, DocError> {
    for name in doc.vertex_values.keys() {
        if curve.vertex(name).is_err() {
            return Err(DocError::UnknownVertex(name.clone()));
        }
    }
    for name in doc.edges.keys() {
        curve.edge_id(name)?;
    }
    let values = curve
        .vertex_names()
        .iter()
        .map(|n| doc.vertex_values.get(n).cloned().ok_or_else(|| DocError::MissingValue(n.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let profiles = curve
        .edges()
        .iter()
        .map(|e| {
            doc.edges.get(&e.name).map_or_else(Vec::new, |p| {
                p.breakpoints
                    .iter()
                    .map(|[t, v]| Breakpoint::new(t.clone(), v.clone()))
                    .collect()
            })
        })
        .collect();
    Ok(PLFunction::new(Arc::clone(curve), values, profiles)?)
}

pub fn function_to_doc(f: &PLFunction) -> FunctionDoc {
    let curve = f.curve();
    let vertex_values = curve
        .vertex_ids()
        .map(|v| (curve.vertex_name(v).to_string(), f.vertex_values()[v.0].clone()))
        .collect();
    let edges = curve
        .edge_ids()
        .filter(|e| !f.breakpoints(*e).is_empty())
        .map(|e| {
            let breakpoints = f
                .breakpoints(e)
                .iter()
                .map(|b| [b.offset.clone(), b.value.clone()])
                .collect();
            (curve.edge(e).name.clone(), EdgeProfileDoc { breakpoints })
        })
        .collect();
    FunctionDoc { vertex_values, edges }
}

pub fn parse_function(curve: &Arc<TropicalCurve>, text: &str) -> Result<PLFunction, DocError> {
    function_from_doc(curve, &serde_json::from_str(text)?)
}

pub fn point_from_doc(curve: &TropicalCurve, doc: &PointDoc) -> Result<CurvePoint, DocError> {
    Ok(match doc {
        PointDoc::Vertex(name) => curve.vertex_point(name)?,
        PointDoc::Edge { edge, offset } => curve.edge_point(edge, offset.clone())?,
    })
}

pub fn point_to_doc(curve: &TropicalCurve, p: &CurvePoint) -> PointDoc {
    match p {
        CurvePoint::Vertex(v) => PointDoc::Vertex(curve.vertex_name(*v).to_string()),
        CurvePoint::Interior { edge, offset } => PointDoc::Edge {
            edge: curve.edge(*edge).name.clone(),
            offset: offset.clone(),
        },
    }
}

pub fn divisor_from_doc(curve: &Arc<TropicalCurve>, doc: &DivisorDoc) -> Result<Divisor, DocError> {
    let entries = doc
        .points
        .iter()
        .map(|e| Ok((point_from_doc(curve, &e.at)?, e.coeff.clone())))
        .collect::<Result<Vec<_>, DocError>>()?;
    Ok(Divisor::from_entries(Arc::clone(curve), entries)?)
}

pub fn divisor_to_doc(d: &Divisor) -> DivisorDoc {
    DivisorDoc {
        points: d
            .iter()
            .map(|(p, c)| DivisorEntryDoc {
                at: point_to_doc(d.curve(), p),
                coeff: c.clone(),
            })
            .collect(),
    }
}

pub fn parse_divisor(curve: &Arc<TropicalCurve>, text: &str) -> Result<Divisor, DocError> {
    divisor_from_doc(curve, &serde_json::from_str(text)?)
}

/// A point given on the command line: a vertex name, `edge:offset`, or a
/// bare offset on a single-edge curve.
pub fn parse_point_literal(curve: &TropicalCurve, text: &str) -> Result<CurvePoint, DocError> {
    let bad = |msg: String| DocError::Point {
        text: text.to_string(),
        msg,
    };
    if let Ok(v) = curve.vertex(text) {
        return Ok(CurvePoint::Vertex(v));
    }
    let (edge, offset) = match text.rsplit_once(':') {
        Some((edge, off)) => (curve.edge_id(edge).map_err(|e| bad(e.to_string()))?, off),
        None if curve.num_edges() == 1 => (EdgeId(0), text),
        None => return Err(bad("not a vertex name; use edge:offset".into())),
    };
    let offset: Rat = offset.trim().parse().map_err(|e: tropweil::NumError| bad(e.to_string()))?;
    curve.canonicalize(edge, offset).map_err(|e| bad(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const BIGON: &str = r#"{"vertices":["u","v"],"edges":[
        {"id":"e1","ends":["u","v"],"length":"1"},
        {"id":"e2","ends":["u","v"],"length":"1"}]}"#;

    #[test]
    fn curve_document_round_trip() {
        let c = parse_curve(BIGON).unwrap();
        assert_eq!(c.num_edges(), 2);
        let again = parse_curve(&to_json(&curve_to_doc(&c))).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(parse_curve("{"), Err(DocError::Json(_))));
        assert!(matches!(
            parse_curve(r#"{"vertices":["u"],"edges":[{"id":"e","ends":["u","u"],"length":1}]}"#),
            Err(DocError::Json(_))
        ));
        assert!(matches!(
            parse_curve(r#"{"vertices":["u"],"edges":[{"id":"e","ends":["u","w"],"length":"1"}]}"#),
            Err(DocError::Curve(_))
        ));
        let c = Arc::new(parse_curve(BIGON).unwrap());
        assert!(matches!(
            parse_function(&c, r#"{"vertex_values":{"u":"0"}}"#),
            Err(DocError::MissingValue(_))
        ));
        assert!(matches!(
            parse_function(&c, r#"{"vertex_values":{"u":"0","v":"1","w":"2"}}"#),
            Err(DocError::UnknownVertex(_))
        ));
    }

    #[test]
    fn point_literals() {
        let seg = TropicalCurve::segment(Rat::from(7)).unwrap();
        assert_eq!(parse_point_literal(&seg, "a").unwrap(), seg.vertex_point("a").unwrap());
        assert_eq!(parse_point_literal(&seg, "7").unwrap(), seg.vertex_point("b").unwrap());
        assert_eq!(
            parse_point_literal(&seg, "e1:5/2").unwrap(),
            seg.edge_point("e1", Rat::frac(5, 2)).unwrap()
        );
        assert!(parse_point_literal(&seg, "8").is_err());
        let bigon = parse_curve(BIGON).unwrap();
        assert!(parse_point_literal(&bigon, "1/2").is_err());
        assert!(parse_point_literal(&bigon, "e3:1/2").is_err());
    }

    #[test]
    fn divisor_document_accepts_both_point_forms() {
        let c = Arc::new(parse_curve(BIGON).unwrap());
        let d = parse_divisor(
            &c,
            r#"{"points":[{"at":"u","coeff":"1"},{"at":{"edge":"e2","offset":"1/2"},"coeff":"-1"}]}"#,
        )
        .unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(parse_divisor(&c, &to_json(&divisor_to_doc(&d))).unwrap(), d);
    }
}
