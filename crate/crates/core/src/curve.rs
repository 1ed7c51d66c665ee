//! Tropical curves: connected metric multigraphs with rational edge lengths.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactnum::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("a curve needs at least one vertex")]
    NoVertices,
    #[error("edge {edge:?} has non-positive length {length}")]
    NonPositiveLength { edge: String, length: Rat },
    #[error("edge {edge:?} refers to unknown vertex {vertex:?}")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate edge id {0:?}")]
    DuplicateEdge(String),
    #[error("curve is disconnected: {0:?} is unreachable from the first vertex")]
    Disconnected(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("offset {offset} is outside [0, {length}] on edge {edge:?}")]
    OffsetOutOfRange {
        edge: String,
        offset: Rat,
        length: Rat,
    },
    #[error("point does not lie on this curve")]
    ForeignPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub tail: VertexId,
    pub head: VertexId,
    pub length: Rat,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Which way along an edge a direction points: `Forward` is increasing offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Heading {
    Forward,
    Backward,
}

impl Heading {
    pub fn flip(self) -> Self {
        match self {
            Heading::Forward => Heading::Backward,
            Heading::Backward => Heading::Forward,
        }
    }
}

/// A tangent direction emanating from a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    pub edge: EdgeId,
    pub heading: Heading,
}

/// A point of a curve, in canonical form: offsets of exactly `0` or the
/// edge length are always stored as the endpoint vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Vertex(VertexId),
    Interior { edge: EdgeId, offset: Rat },
}

#[derive(Debug, Clone)]
pub struct TropicalCurve {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
    incidence: Vec<Vec<Direction>>,
}

impl PartialEq for TropicalCurve {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for TropicalCurve {}

/// Edge as given by the caller: `(id, first endpoint, second endpoint, length)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpec {
    pub id: String,
    pub ends: (String, String),
    pub length: Rat,
}

impl EdgeSpec {
    pub fn new(id: &str, a: &str, b: &str, length: Rat) -> Self {
        EdgeSpec {
            id: id.to_string(),
            ends: (a.to_string(), b.to_string()),
            length,
        }
    }
}

impl TropicalCurve {
    /// Validates and builds a curve. Loops and parallel edges are allowed.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[EdgeSpec]) -> Result<Self, CurveError> {
        if vertices.is_empty() {
            return Err(CurveError::NoVertices);
        }
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            let v = v.as_ref();
            if vertex_index.insert(v.to_string(), VertexId(i)).is_some() {
                return Err(CurveError::DuplicateVertex(v.to_string()));
            }
        }
        let mut edge_index = HashMap::new();
        let mut built = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if !e.length.is_positive() {
                return Err(CurveError::NonPositiveLength {
                    edge: e.id.clone(),
                    length: e.length.clone(),
                });
            }
            let lookup = |name: &String| {
                vertex_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| CurveError::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: name.clone(),
                    })
            };
            let tail = lookup(&e.ends.0)?;
            let head = lookup(&e.ends.1)?;
            if edge_index.insert(e.id.clone(), EdgeId(i)).is_some() {
                return Err(CurveError::DuplicateEdge(e.id.clone()));
            }
            built.push(Edge {
                name: e.id.clone(),
                tail,
                head,
                length: e.length.clone(),
            });
        }
        let curve = Self::assemble(
            vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            built,
            vertex_index,
            edge_index,
        );
        curve.check_connected()?;
        Ok(curve)
    }

    fn assemble(
        vertices: Vec<String>,
        edges: Vec<Edge>,
        vertex_index: HashMap<String, VertexId>,
        edge_index: HashMap<String, EdgeId>,
    ) -> Self {
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            incidence[e.tail.0].push(Direction {
                edge: EdgeId(i),
                heading: Heading::Forward,
            });
            incidence[e.head.0].push(Direction {
                edge: EdgeId(i),
                heading: Heading::Backward,
            });
        }
        TropicalCurve {
            vertices,
            edges,
            vertex_index,
            edge_index,
            incidence,
        }
    }

    fn check_connected(&self) -> Result<(), CurveError> {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for d in &self.incidence[v] {
                let w = self.far_end(*d).0;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(i) => Err(CurveError::Disconnected(self.vertices[i].clone())),
            None => Ok(()),
        }
    }

    /// The endpoint reached by travelling along `d` to the end of its edge.
    fn far_end(&self, d: Direction) -> VertexId {
        let e = &self.edges[d.edge.0];
        match d.heading {
            Heading::Forward => e.head,
            Heading::Backward => e.tail,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.check_connected().is_ok()
    }

    /// The segment `[0, length]` as a single edge `e1` from `a` to `b`.
    pub fn segment(length: Rat) -> Result<Self, CurveError> {
        Self::new(&["a", "b"], &[EdgeSpec::new("e1", "a", "b", length)])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, CurveError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| CurveError::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, CurveError> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| CurveError::UnknownEdge(name.to_string()))
    }

    pub fn total_length(&self) -> Rat {
        self.edges.iter().map(|e| &e.length).sum()
    }

    /// Edge-ends at `v`; a loop at `v` contributes both of its ends.
    pub fn incident(&self, v: VertexId) -> &[Direction] {
        &self.incidence[v.0]
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.incidence[v.0].len()
    }

    /// Turns `(edge, offset)` into a canonical point.
    pub fn canonicalize(&self, edge: EdgeId, offset: Rat) -> Result<CurvePoint, CurveError> {
        let e = self
            .edges
            .get(edge.0)
            .ok_or_else(|| CurveError::UnknownEdge(format!("#{}", edge.0)))?;
        if offset.is_negative() || offset > e.length {
            return Err(CurveError::OffsetOutOfRange {
                edge: e.name.clone(),
                offset,
                length: e.length.clone(),
            });
        }
        Ok(if offset.is_zero() {
            CurvePoint::Vertex(e.tail)
        } else if offset == e.length {
            CurvePoint::Vertex(e.head)
        } else {
            CurvePoint::Interior { edge, offset }
        })
    }

    /// Re-canonicalizes an arbitrary point, checking it belongs to this curve.
    pub fn canonical(&self, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        match p {
            CurvePoint::Vertex(v) if v.0 < self.vertices.len() => Ok(p.clone()),
            CurvePoint::Vertex(_) => Err(CurveError::ForeignPoint),
            CurvePoint::Interior { edge, offset } => self.canonicalize(*edge, offset.clone()),
        }
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        matches!(self.canonical(p), Ok(q) if q == *p)
    }

    /// All directions emanating from a (canonical) point.
    pub fn directions(&self, p: &CurvePoint) -> Vec<Direction> {
        match p {
            CurvePoint::Vertex(v) => self.incidence[v.0].clone(),
            CurvePoint::Interior { edge, .. } => vec![
                Direction {
                    edge: *edge,
                    heading: Heading::Backward,
                },
                Direction {
                    edge: *edge,
                    heading: Heading::Forward,
                },
            ],
        }
    }

    pub fn vertex_point(&self, name: &str) -> Result<CurvePoint, CurveError> {
        self.vertex(name).map(CurvePoint::Vertex)
    }

    pub fn edge_point(&self, edge: &str, offset: Rat) -> Result<CurvePoint, CurveError> {
        self.canonicalize(self.edge_id(edge)?, offset)
    }

    pub fn describe(&self, p: &CurvePoint) -> String {
        match p {
            CurvePoint::Vertex(v) => self.vertices[v.0].clone(),
            CurvePoint::Interior { edge, offset } => {
                format!("{}@{}", self.edges[edge.0].name, offset)
            }
        }
    }

    /// A copy with the coordinate direction of the listed edges reversed.
    /// Vertex and edge ids are unchanged.
    pub fn with_reversed_edges(&self, which: &[EdgeId]) -> TropicalCurve {
        let flip: HashSet<EdgeId> = which.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if flip.contains(&EdgeId(i)) {
                    Edge {
                        name: e.name.clone(),
                        tail: e.head,
                        head: e.tail,
                        length: e.length.clone(),
                    }
                } else {
                    e.clone()
                }
            })
            .collect();
        Self::assemble(
            self.vertices.clone(),
            edges,
            self.vertex_index.clone(),
            self.edge_index.clone(),
        )
    }

    /// Where `p` lands on the curve returned by `with_reversed_edges(which)`.
    pub fn reversed_point(&self, p: &CurvePoint, which: &[EdgeId]) -> CurvePoint {
        match p {
            CurvePoint::Interior { edge, offset } if which.contains(edge) => CurvePoint::Interior {
                edge: *edge,
                offset: &self.edges[edge.0].length - offset,
            },
            _ => p.clone(),
        }
    }
}

impl fmt::Display for TropicalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "curve with {} vertices:", self.vertices.len())?;
        for e in &self.edges {
            write!(
                f,
                " {}({}-{}, {})",
                e.name, self.vertices[e.tail.0], self.vertices[e.head.0], e.length
            )?;
        }
        Ok(())
    }
}

/// Piece `[start, end]` of a parent edge covered by a child edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpan {
    pub parent: EdgeId,
    pub start: Rat,
    pub end: Rat,
}

/// Result of inserting vertices at interior points of a curve.
///
/// Original vertices keep their ids; new vertices are appended. Child edges
/// keep their parent's orientation.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub original: Arc<TropicalCurve>,
    pub curve: Arc<TropicalCurve>,
    /// Every requested point, mapped to its vertex on the new curve.
    pub point_map: BTreeMap<CurvePoint, VertexId>,
    /// Indexed by new edge id.
    pub provenance: Vec<EdgeSpan>,
    /// For each parent edge, its children in order of increasing offset.
    pub children: Vec<Vec<EdgeId>>,
}

impl Subdivision {
    /// The point on the subdivided curve corresponding to `p` on the original.
    pub fn lift_point(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Vertex(v) => CurvePoint::Vertex(*v),
            CurvePoint::Interior { edge, offset } => {
                if let Some(v) = self.point_map.get(p) {
                    return CurvePoint::Vertex(*v);
                }
                let child = self.children[edge.0]
                    .iter()
                    .find(|c| {
                        let span = &self.provenance[c.0];
                        span.start < *offset && *offset < span.end
                    })
                    .copied()
                    .expect("offset lies strictly inside one child span");
                CurvePoint::Interior {
                    edge: child,
                    offset: offset - &self.provenance[child.0].start,
                }
            }
        }
    }

    /// The original point corresponding to a point of the subdivided curve.
    pub fn project_point(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Vertex(v) if v.0 < self.original.num_vertices() => p.clone(),
            CurvePoint::Vertex(v) => self
                .point_map
                .iter()
                .find(|(_, w)| *w == v)
                .map(|(q, _)| q.clone())
                .expect("every new vertex comes from a requested point"),
            CurvePoint::Interior { edge, offset } => {
                let span = &self.provenance[edge.0];
                CurvePoint::Interior {
                    edge: span.parent,
                    offset: &span.start + offset,
                }
            }
        }
    }
}

/// Inserts a vertex at every interior point in `points`. Vertex points are
/// accepted and map to themselves.
pub fn subdivide(
    curve: &Arc<TropicalCurve>,
    points: &BTreeSet<CurvePoint>,
) -> Result<Subdivision, CurveError> {
    let mut cuts: BTreeMap<EdgeId, BTreeSet<Rat>> = BTreeMap::new();
    let mut point_map = BTreeMap::new();
    for p in points {
        match curve.canonical(p)? {
            CurvePoint::Vertex(v) => {
                point_map.insert(CurvePoint::Vertex(v), v);
            }
            CurvePoint::Interior { edge, offset } => {
                cuts.entry(edge).or_default().insert(offset);
            }
        }
    }

    let mut vertices = curve.vertices.clone();
    let mut used: HashSet<String> = vertices.iter().cloned().collect();
    used.extend(curve.edges.iter().map(|e| e.name.clone()));
    let mut counter = 0usize;
    let mut fresh = |used: &mut HashSet<String>, stem: &str| loop {
        counter += 1;
        let name = format!("{stem}{counter}");
        if used.insert(name.clone()) {
            return name;
        }
    };

    let mut edges = Vec::new();
    let mut provenance = Vec::new();
    let mut children = vec![Vec::new(); curve.num_edges()];
    for (i, parent) in curve.edges.iter().enumerate() {
        let eid = EdgeId(i);
        let offsets: Vec<Rat> = cuts.get(&eid).map_or_else(Vec::new, |s| s.iter().cloned().collect());
        if offsets.is_empty() {
            children[i].push(EdgeId(edges.len()));
            provenance.push(EdgeSpan {
                parent: eid,
                start: Rat::zero(),
                end: parent.length.clone(),
            });
            edges.push(parent.clone());
            continue;
        }
        let mut prev_vertex = parent.tail;
        let mut prev_offset = Rat::zero();
        for (k, t) in offsets.iter().chain(std::iter::once(&parent.length)).enumerate() {
            let next_vertex = if k < offsets.len() {
                let v = VertexId(vertices.len());
                vertices.push(fresh(&mut used, "n"));
                point_map.insert(
                    CurvePoint::Interior {
                        edge: eid,
                        offset: t.clone(),
                    },
                    v,
                );
                v
            } else {
                parent.head
            };
            children[i].push(EdgeId(edges.len()));
            provenance.push(EdgeSpan {
                parent: eid,
                start: prev_offset.clone(),
                end: t.clone(),
            });
            edges.push(Edge {
                name: fresh(&mut used, &format!("{}.", parent.name)),
                tail: prev_vertex,
                head: next_vertex,
                length: t - &prev_offset,
            });
            prev_vertex = next_vertex;
            prev_offset = t.clone();
        }
    }

    let vertex_index = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), VertexId(i)))
        .collect();
    let edge_index = edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.name.clone(), EdgeId(i)))
        .collect();
    let new_curve = TropicalCurve::assemble(vertices, edges, vertex_index, edge_index);
    Ok(Subdivision {
        original: Arc::clone(curve),
        curve: Arc::new(new_curve),
        point_map,
        provenance,
        children,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(len: i64) -> Arc<TropicalCurve> {
        Arc::new(TropicalCurve::segment(Rat::from(len)).unwrap())
    }

    #[test]
    fn construction_examples() {
        let one = TropicalCurve::new(&["a"], &[]).unwrap();
        assert_eq!(one.num_vertices(), 1);
        assert_eq!(one.total_length(), Rat::zero());

        let s = seg(7);
        assert_eq!(s.total_length(), Rat::from(7));
        assert_eq!(s.valence(VertexId(0)), 1);

        let loops = TropicalCurve::new(
            &["a"],
            &[
                EdgeSpec::new("e1", "a", "a", Rat::one()),
                EdgeSpec::new("e2", "a", "a", Rat::one()),
            ],
        )
        .unwrap();
        assert_eq!(loops.valence(VertexId(0)), 4);
    }

    #[test]
    fn construction_errors_are_distinct() {
        let empty: [&str; 0] = [];
        assert_eq!(TropicalCurve::new(&empty, &[]), Err(CurveError::NoVertices));
        assert!(matches!(
            TropicalCurve::new(&["a", "b"], &[EdgeSpec::new("e", "a", "b", Rat::zero())]),
            Err(CurveError::NonPositiveLength { .. })
        ));
        assert!(matches!(
            TropicalCurve::new(&["a", "b"], &[EdgeSpec::new("e", "a", "b", Rat::from(-1))]),
            Err(CurveError::NonPositiveLength { .. })
        ));
        assert!(matches!(
            TropicalCurve::new(&["a"], &[EdgeSpec::new("e", "a", "z", Rat::one())]),
            Err(CurveError::DanglingEndpoint { .. })
        ));
        assert_eq!(
            TropicalCurve::new(&["a", "a"], &[]),
            Err(CurveError::DuplicateVertex("a".into()))
        );
        assert_eq!(
            TropicalCurve::new(
                &["a", "b"],
                &[
                    EdgeSpec::new("e", "a", "b", Rat::one()),
                    EdgeSpec::new("e", "a", "b", Rat::one())
                ]
            ),
            Err(CurveError::DuplicateEdge("e".into()))
        );
        assert_eq!(
            TropicalCurve::new(&["a", "b", "c"], &[EdgeSpec::new("e", "a", "b", Rat::one())]),
            Err(CurveError::Disconnected("c".into()))
        );
    }

    #[test]
    fn canonicalize_examples() {
        let s = seg(7);
        let e1 = EdgeId(0);
        assert_eq!(s.canonicalize(e1, Rat::zero()).unwrap(), CurvePoint::Vertex(VertexId(0)));
        assert_eq!(s.canonicalize(e1, Rat::from(7)).unwrap(), CurvePoint::Vertex(VertexId(1)));
        assert_eq!(
            s.canonicalize(e1, Rat::frac(7, 2)).unwrap(),
            CurvePoint::Interior {
                edge: e1,
                offset: Rat::frac(7, 2)
            }
        );
        assert!(matches!(
            s.canonicalize(e1, Rat::from(8)),
            Err(CurveError::OffsetOutOfRange { .. })
        ));
        assert!(s.canonicalize(e1, Rat::from(-1)).is_err());
        let p = s.canonicalize(e1, Rat::from(7)).unwrap();
        assert_eq!(s.canonical(&p).unwrap(), p);
    }

    #[test]
    fn directions_at_points() {
        let c = TropicalCurve::new(&["a"], &[EdgeSpec::new("l", "a", "a", Rat::one())]).unwrap();
        let dirs = c.directions(&CurvePoint::Vertex(VertexId(0)));
        assert_eq!(dirs.len(), 2);
        assert_ne!(dirs[0], dirs[1]);
        let inner = c.canonicalize(EdgeId(0), Rat::frac(1, 3)).unwrap();
        assert_eq!(c.directions(&inner).len(), 2);
    }

    #[test]
    fn subdivide_segment() {
        let s = seg(7);
        let p = s.canonicalize(EdgeId(0), Rat::from(2)).unwrap();
        let sub = subdivide(&s, &BTreeSet::from([p.clone()])).unwrap();
        assert_eq!(sub.curve.num_vertices(), 3);
        let lengths: Vec<Rat> = sub.curve.edges().iter().map(|e| e.length.clone()).collect();
        assert_eq!(lengths, vec![Rat::from(2), Rat::from(5)]);
        assert_eq!(sub.point_map[&p], VertexId(2));
        assert_eq!(sub.curve.vertex_name(VertexId(2)), "n1");
        assert_eq!(sub.project_point(&CurvePoint::Vertex(VertexId(2))), p);

        let q = s.canonicalize(EdgeId(0), Rat::from(4)).unwrap();
        let lifted = sub.lift_point(&q);
        assert_eq!(
            lifted,
            CurvePoint::Interior {
                edge: EdgeId(1),
                offset: Rat::from(2)
            }
        );
        assert_eq!(sub.project_point(&lifted), q);
    }

    #[test]
    fn empty_subdivision_is_identity() {
        let s = seg(7);
        let sub = subdivide(&s, &BTreeSet::new()).unwrap();
        assert_eq!(*sub.curve, *s);
    }

    #[test]
    fn loop_splits_into_bigon() {
        let c = Arc::new(
            TropicalCurve::new(&["a"], &[EdgeSpec::new("e1", "a", "a", Rat::one())]).unwrap(),
        );
        let p = c.canonicalize(EdgeId(0), Rat::frac(1, 2)).unwrap();
        let sub = subdivide(&c, &BTreeSet::from([p])).unwrap();
        let nc = &sub.curve;
        assert_eq!(nc.num_vertices(), 2);
        assert_eq!(nc.num_edges(), 2);
        for e in nc.edges() {
            assert!(!e.is_loop());
            assert_eq!(e.length, Rat::frac(1, 2));
        }
        assert_eq!(nc.total_length(), Rat::one());
        assert!(nc.check_connected().is_ok());
        assert_eq!(nc.valence(VertexId(0)), 2);
        assert_eq!(nc.valence(VertexId(1)), 2);
    }

    #[test]
    fn reversal_round_trips() {
        let s = seg(7);
        let p = s.canonicalize(EdgeId(0), Rat::from(2)).unwrap();
        let r = s.with_reversed_edges(&[EdgeId(0)]);
        let rp = s.reversed_point(&p, &[EdgeId(0)]);
        assert_eq!(rp, r.canonicalize(EdgeId(0), Rat::from(5)).unwrap());
        assert_eq!(r.with_reversed_edges(&[EdgeId(0)]), *s);
    }
}
