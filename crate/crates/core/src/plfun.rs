//! Continuous piecewise-linear functions on a tropical curve, their orders
//! and divisors.
//!
//! A function is stored by its values: one value per vertex, plus for every
//! edge the interior breakpoints `(offset, value)` in increasing offset
//! order. Slopes are derived. Breakpoints where the two adjacent slopes agree
//! are pruned on construction, so two functions are equal iff their stored
//! data are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::curve::{CurveError, CurvePoint, Direction, EdgeId, Heading, Subdivision, TropicalCurve};
use crate::exactnum::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionError {
    #[error("operands live on different curves")]
    CurveMismatch,
    #[error("expected {expected} {what}, got {got}")]
    Arity {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("breakpoint offset {offset} on edge {edge:?} must lie strictly inside (0, {length}) and increase")]
    BadBreakpoint {
        edge: String,
        offset: Rat,
        length: Rat,
    },
    #[error("direction is not incident to the point")]
    NotIncident,
    #[error("function values disagree at a shared point of the subdivision")]
    Discontinuous,
    #[error(transparent)]
    Curve(#[from] CurveError),
}

pub(crate) fn same_curve(a: &Arc<TropicalCurve>, b: &Arc<TropicalCurve>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Breakpoint {
    pub offset: Rat,
    pub value: Rat,
}

impl Breakpoint {
    pub fn new(offset: Rat, value: Rat) -> Self {
        Breakpoint { offset, value }
    }
}

#[derive(Clone)]
pub struct PLFunction {
    curve: Arc<TropicalCurve>,
    vertex_values: Vec<Rat>,
    profiles: Vec<Vec<Breakpoint>>,
}

impl PartialEq for PLFunction {
    fn eq(&self, other: &Self) -> bool {
        same_curve(&self.curve, &other.curve)
            && self.vertex_values == other.vertex_values
            && self.profiles == other.profiles
    }
}

impl Eq for PLFunction {}

impl fmt::Debug for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for v in self.curve.vertex_ids() {
            m.entry(&self.curve.vertex_name(v), &self.vertex_values[v.0]);
        }
        for e in self.curve.edge_ids() {
            if !self.profiles[e.0].is_empty() {
                let pts: Vec<(&Rat, &Rat)> = self.profiles[e.0]
                    .iter()
                    .map(|b| (&b.offset, &b.value))
                    .collect();
                m.entry(&self.curve.edge(e).name, &pts);
            }
        }
        m.finish()
    }
}

fn slope(a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

/// Drops interior knots whose two neighbouring slopes coincide.
fn prune(knots: Vec<(Rat, Rat)>) -> Vec<(Rat, Rat)> {
    let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(knots.len());
    for k in knots {
        while out.len() >= 2 {
            let n = out.len();
            if slope(&out[n - 2], &out[n - 1]) == slope(&out[n - 1], &k) {
                out.pop();
            } else {
                break;
            }
        }
        out.push(k);
    }
    out
}

impl PLFunction {
    /// Builds a function from vertex values (indexed by vertex id) and
    /// per-edge interior breakpoints (indexed by edge id).
    pub fn new(
        curve: Arc<TropicalCurve>,
        vertex_values: Vec<Rat>,
        profiles: Vec<Vec<Breakpoint>>,
    ) -> Result<Self, FunctionError> {
        if vertex_values.len() != curve.num_vertices() {
            return Err(FunctionError::Arity {
                what: "vertex values",
                expected: curve.num_vertices(),
                got: vertex_values.len(),
            });
        }
        if profiles.len() != curve.num_edges() {
            return Err(FunctionError::Arity {
                what: "edge profiles",
                expected: curve.num_edges(),
                got: profiles.len(),
            });
        }
        for (e, profile) in curve.edges().iter().zip(&profiles) {
            let mut last = Rat::zero();
            for b in profile {
                if b.offset <= last || b.offset >= e.length {
                    return Err(FunctionError::BadBreakpoint {
                        edge: e.name.clone(),
                        offset: b.offset.clone(),
                        length: e.length.clone(),
                    });
                }
                last = b.offset.clone();
            }
        }
        let mut f = PLFunction {
            curve,
            vertex_values,
            profiles,
        };
        for e in 0..f.profiles.len() {
            let knots = prune(f.knots(EdgeId(e)));
            f.profiles[e] = knots[1..knots.len() - 1]
                .iter()
                .map(|(t, v)| Breakpoint::new(t.clone(), v.clone()))
                .collect();
        }
        Ok(f)
    }

    pub fn constant(curve: Arc<TropicalCurve>, value: Rat) -> Self {
        let n = curve.num_vertices();
        let m = curve.num_edges();
        PLFunction {
            curve,
            vertex_values: vec![value; n],
            profiles: vec![Vec::new(); m],
        }
    }

    /// The function that is affine on every edge with the given vertex values.
    pub fn from_vertex_values(curve: Arc<TropicalCurve>, values: Vec<Rat>) -> Result<Self, FunctionError> {
        let m = curve.num_edges();
        Self::new(curve, values, vec![Vec::new(); m])
    }

    pub fn curve(&self) -> &Arc<TropicalCurve> {
        &self.curve
    }

    pub fn vertex_values(&self) -> &[Rat] {
        &self.vertex_values
    }

    pub fn breakpoints(&self, e: EdgeId) -> &[Breakpoint] {
        &self.profiles[e.0]
    }

    /// `(offset, value)` pairs along `e`, endpoints included.
    pub fn knots(&self, e: EdgeId) -> Vec<(Rat, Rat)> {
        let edge = self.curve.edge(e);
        let mut out = Vec::with_capacity(self.profiles[e.0].len() + 2);
        out.push((Rat::zero(), self.vertex_values[edge.tail.0].clone()));
        out.extend(
            self.profiles[e.0]
                .iter()
                .map(|b| (b.offset.clone(), b.value.clone())),
        );
        out.push((edge.length.clone(), self.vertex_values[edge.head.0].clone()));
        out
    }

    /// Slopes of the affine pieces of `e`, in the edge's forward direction.
    pub fn slopes(&self, e: EdgeId) -> Vec<Rat> {
        self.knots(e).windows(2).map(|w| slope(&w[0], &w[1])).collect()
    }

    /// True iff every slope is an integer (a meromorphic function, as
    /// opposed to a quasi-meromorphic one).
    pub fn is_meromorphic(&self) -> bool {
        self.curve
            .edge_ids()
            .all(|e| self.slopes(e).iter().all(Rat::is_integer))
    }

    fn check_point(&self, p: &CurvePoint) -> Result<CurvePoint, FunctionError> {
        Ok(self.curve.canonical(p)?)
    }

    fn value_on_edge(&self, e: EdgeId, t: &Rat) -> Rat {
        let knots = self.knots(e);
        let i = knots.partition_point(|k| k.0 <= *t).clamp(1, knots.len() - 1);
        let (a, b) = (&knots[i - 1], &knots[i]);
        &a.1 + slope(a, b) * (t - &a.0)
    }

    pub fn evaluate(&self, p: &CurvePoint) -> Result<Rat, FunctionError> {
        Ok(match self.check_point(p)? {
            CurvePoint::Vertex(v) => self.vertex_values[v.0].clone(),
            CurvePoint::Interior { edge, offset } => self.value_on_edge(edge, &offset),
        })
    }

    /// One-sided derivative of the function at `p` in direction `dir`.
    pub fn outgoing_slope(&self, p: &CurvePoint, dir: Direction) -> Result<Rat, FunctionError> {
        let p = self.check_point(p)?;
        if !self.curve.directions(&p).contains(&dir) {
            return Err(FunctionError::NotIncident);
        }
        let slopes = self.slopes(dir.edge);
        let piece = match &p {
            CurvePoint::Vertex(_) => match dir.heading {
                Heading::Forward => 0,
                Heading::Backward => slopes.len() - 1,
            },
            CurvePoint::Interior { offset, .. } => {
                let knots = self.knots(dir.edge);
                match dir.heading {
                    Heading::Forward => knots.partition_point(|k| k.0 <= *offset) - 1,
                    Heading::Backward => knots.partition_point(|k| k.0 < *offset) - 1,
                }
            }
        };
        Ok(match dir.heading {
            Heading::Forward => slopes[piece].clone(),
            Heading::Backward => -&slopes[piece],
        })
    }

    /// Sum of the outgoing slopes over every direction at `p`.
    pub fn order(&self, p: &CurvePoint) -> Result<Rat, FunctionError> {
        let p = self.check_point(p)?;
        self.curve
            .directions(&p)
            .into_iter()
            .map(|d| self.outgoing_slope(&p, d))
            .sum()
    }

    /// The formal sum of points weighted by their orders. Only vertices and
    /// breakpoints can carry a nonzero order.
    pub fn divisor(&self) -> Divisor {
        let mut entries = BTreeMap::new();
        for v in self.curve.vertex_ids() {
            let p = CurvePoint::Vertex(v);
            let ord = self.order(&p).expect("vertex is on the curve");
            if !ord.is_zero() {
                entries.insert(p, ord);
            }
        }
        for e in self.curve.edge_ids() {
            let slopes = self.slopes(e);
            for (i, b) in self.profiles[e.0].iter().enumerate() {
                let ord = &slopes[i + 1] - &slopes[i];
                if !ord.is_zero() {
                    entries.insert(
                        CurvePoint::Interior {
                            edge: e,
                            offset: b.offset.clone(),
                        },
                        ord,
                    );
                }
            }
        }
        Divisor {
            curve: Arc::clone(&self.curve),
            entries,
        }
    }

    /// Pointwise `cf·f + cg·g`.
    pub fn combine(f: &PLFunction, g: &PLFunction, cf: &Rat, cg: &Rat) -> Result<PLFunction, FunctionError> {
        if !same_curve(&f.curve, &g.curve) {
            return Err(FunctionError::CurveMismatch);
        }
        let vertex_values = f
            .vertex_values
            .iter()
            .zip(&g.vertex_values)
            .map(|(a, b)| cf * a + cg * b)
            .collect();
        let profiles = f
            .curve
            .edge_ids()
            .map(|e| {
                let mut offsets: Vec<Rat> = f.profiles[e.0]
                    .iter()
                    .chain(&g.profiles[e.0])
                    .map(|b| b.offset.clone())
                    .collect();
                offsets.sort();
                offsets.dedup();
                offsets
                    .into_iter()
                    .map(|t| {
                        let v = cf * f.value_on_edge(e, &t) + cg * g.value_on_edge(e, &t);
                        Breakpoint::new(t, v)
                    })
                    .collect()
            })
            .collect();
        PLFunction::new(Arc::clone(&f.curve), vertex_values, profiles)
    }

    pub fn add(&self, other: &PLFunction) -> Result<PLFunction, FunctionError> {
        Self::combine(self, other, &Rat::one(), &Rat::one())
    }

    pub fn sub(&self, other: &PLFunction) -> Result<PLFunction, FunctionError> {
        Self::combine(self, other, &Rat::one(), &Rat::from(-1))
    }

    pub fn scale(&self, c: &Rat) -> PLFunction {
        Self::combine(self, self, c, &Rat::zero()).expect("same curve")
    }

    pub fn shift(&self, c: &Rat) -> PLFunction {
        let k = PLFunction::constant(Arc::clone(&self.curve), c.clone());
        self.add(&k).expect("same curve")
    }

    /// `Some(c)` when the function is constant with value `c`.
    pub fn constant_value(&self) -> Option<Rat> {
        let first = self.vertex_values.first()?.clone();
        let flat = self.vertex_values.iter().all(|v| *v == first)
            && self.profiles.iter().all(Vec::is_empty);
        flat.then_some(first)
    }

    /// Pull back to a subdivision of this function's curve.
    pub fn lift(&self, sub: &Subdivision) -> Result<PLFunction, FunctionError> {
        if !same_curve(&self.curve, &sub.original) {
            return Err(FunctionError::CurveMismatch);
        }
        let vertex_values = sub
            .curve
            .vertex_ids()
            .map(|v| self.evaluate(&sub.project_point(&CurvePoint::Vertex(v))))
            .collect::<Result<Vec<_>, _>>()?;
        let profiles = sub
            .provenance
            .iter()
            .map(|span| {
                self.profiles[span.parent.0]
                    .iter()
                    .filter(|b| span.start < b.offset && b.offset < span.end)
                    .map(|b| Breakpoint::new(&b.offset - &span.start, b.value.clone()))
                    .collect()
            })
            .collect();
        PLFunction::new(Arc::clone(&sub.curve), vertex_values, profiles)
    }

    /// Push a function on the subdivided curve down to the original curve;
    /// subdivision vertices become breakpoints.
    pub fn push_down(sub: &Subdivision, g: &PLFunction) -> Result<PLFunction, FunctionError> {
        if !same_curve(&g.curve, &sub.curve) {
            return Err(FunctionError::CurveMismatch);
        }
        let original = &sub.original;
        let vertex_values = g.vertex_values[..original.num_vertices()].to_vec();
        let mut profiles = Vec::with_capacity(original.num_edges());
        for children in &sub.children {
            let mut profile = Vec::new();
            for (k, child) in children.iter().enumerate() {
                let span = &sub.provenance[child.0];
                if k > 0 {
                    let v = g.curve.edge(*child).tail;
                    profile.push(Breakpoint::new(span.start.clone(), g.vertex_values[v.0].clone()));
                }
                profile.extend(
                    g.profiles[child.0]
                        .iter()
                        .map(|b| Breakpoint::new(&b.offset + &span.start, b.value.clone())),
                );
            }
            profiles.push(profile);
        }
        PLFunction::new(Arc::clone(original), vertex_values, profiles)
    }

    /// The same function expressed on `curve.with_reversed_edges(which)`.
    pub fn reverse_edges(&self, which: &[EdgeId]) -> PLFunction {
        let curve = Arc::new(self.curve.with_reversed_edges(which));
        let profiles = self
            .curve
            .edge_ids()
            .map(|e| {
                let bs = &self.profiles[e.0];
                if which.contains(&e) {
                    let len = &self.curve.edge(e).length;
                    bs.iter()
                        .rev()
                        .map(|b| Breakpoint::new(len - &b.offset, b.value.clone()))
                        .collect()
                } else {
                    bs.clone()
                }
            })
            .collect();
        PLFunction::new(curve, self.vertex_values.clone(), profiles).expect("reversal preserves validity")
    }
}

/// Finite formal sum of curve points with rational coefficients.
#[derive(Clone)]
pub struct Divisor {
    curve: Arc<TropicalCurve>,
    entries: BTreeMap<CurvePoint, Rat>,
}

impl PartialEq for Divisor {
    fn eq(&self, other: &Self) -> bool {
        same_curve(&self.curve, &other.curve) && self.entries == other.entries
    }
}

impl Eq for Divisor {}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.entries.iter().enumerate() {
            let name = self.curve.describe(p);
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{c}({name})")?,
                (0, true) => write!(f, "-{}({name})", c.abs())?,
                (_, false) => write!(f, " + {c}({name})")?,
                (_, true) => write!(f, " - {}({name})", c.abs())?,
            }
        }
        Ok(())
    }
}

impl Divisor {
    pub fn zero(curve: Arc<TropicalCurve>) -> Self {
        Divisor {
            curve,
            entries: BTreeMap::new(),
        }
    }

    /// Canonicalizes each point and accumulates repeated points.
    pub fn from_entries<I>(curve: Arc<TropicalCurve>, entries: I) -> Result<Self, FunctionError>
    where
        I: IntoIterator<Item = (CurvePoint, Rat)>,
    {
        let mut d = Divisor::zero(curve);
        for (p, c) in entries {
            let p = d.curve.canonical(&p)?;
            let slot = d.entries.entry(p).or_insert_with(Rat::zero);
            *slot += c;
        }
        d.entries.retain(|_, c| !c.is_zero());
        Ok(d)
    }

    /// `(p) − (q)`.
    pub fn point_difference(curve: Arc<TropicalCurve>, p: &CurvePoint, q: &CurvePoint) -> Result<Self, FunctionError> {
        Self::from_entries(curve, [(p.clone(), Rat::one()), (q.clone(), Rat::from(-1))])
    }

    pub fn curve(&self) -> &Arc<TropicalCurve> {
        &self.curve
    }

    pub fn coefficient(&self, p: &CurvePoint) -> Rat {
        self.entries.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CurvePoint, &Rat)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &CurvePoint> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> Rat {
        self.entries.values().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(Rat::is_integer)
    }

    /// Coefficientwise `c1·d1 + c2·d2`.
    pub fn combine(d1: &Divisor, d2: &Divisor, c1: &Rat, c2: &Rat) -> Result<Divisor, FunctionError> {
        if !same_curve(&d1.curve, &d2.curve) {
            return Err(FunctionError::CurveMismatch);
        }
        let terms = d1
            .entries
            .iter()
            .map(|(p, c)| (p.clone(), c1 * c))
            .chain(d2.entries.iter().map(|(p, c)| (p.clone(), c2 * c)));
        Divisor::from_entries(Arc::clone(&d1.curve), terms)
    }

    pub fn scale(&self, c: &Rat) -> Divisor {
        Divisor::combine(self, self, c, &Rat::zero()).expect("same curve")
    }

    /// The same divisor on `curve.with_reversed_edges(which)`.
    pub fn reverse_edges(&self, which: &[EdgeId]) -> Divisor {
        let curve = Arc::new(self.curve.with_reversed_edges(which));
        let entries = self
            .entries
            .iter()
            .map(|(p, c)| (self.curve.reversed_point(p, which), c.clone()))
            .collect();
        Divisor { curve, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{EdgeSpec, VertexId};

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    /// max(x,3) + max(x,2) − max(x,1) on [0,7].
    fn example() -> PLFunction {
        let c = Arc::new(TropicalCurve::segment(r("7")).unwrap());
        PLFunction::new(
            c,
            vec![r("4"), r("7")],
            vec![vec![
                Breakpoint::new(r("1"), r("4")),
                Breakpoint::new(r("2"), r("3")),
                Breakpoint::new(r("3"), r("3")),
            ]],
        )
        .unwrap()
    }

    fn at(f: &PLFunction, x: &str) -> CurvePoint {
        f.curve().canonicalize(EdgeId(0), r(x)).unwrap()
    }

    fn identity(len: &str) -> PLFunction {
        let c = Arc::new(TropicalCurve::segment(r(len)).unwrap());
        PLFunction::from_vertex_values(c, vec![r("0"), r(len)]).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let f = example();
        assert_eq!(f.evaluate(&at(&f, "0")).unwrap(), r("4"));
        assert_eq!(f.evaluate(&at(&f, "5")).unwrap(), r("5"));
        assert_eq!(f.evaluate(&at(&f, "3/2")).unwrap(), r("7/2"));
        let k = PLFunction::constant(Arc::clone(f.curve()), r("-2/3"));
        assert_eq!(k.evaluate(&at(&f, "13/4")).unwrap(), r("-2/3"));
    }

    #[test]
    fn outgoing_slope_examples() {
        let f = example();
        let p = at(&f, "2");
        let left = Direction {
            edge: EdgeId(0),
            heading: Heading::Backward,
        };
        let right = Direction {
            edge: EdgeId(0),
            heading: Heading::Forward,
        };
        assert_eq!(f.outgoing_slope(&p, left).unwrap(), r("1"));
        assert_eq!(f.outgoing_slope(&p, right).unwrap(), r("0"));

        let id = identity("7");
        let zero = CurvePoint::Vertex(VertexId(0));
        assert_eq!(id.outgoing_slope(&zero, right).unwrap(), r("1"));
        assert_eq!(id.outgoing_slope(&zero, left), Err(FunctionError::NotIncident));
    }

    #[test]
    fn order_examples() {
        let f = example();
        assert_eq!(f.order(&at(&f, "2")).unwrap(), r("1"));
        assert_eq!(f.order(&at(&f, "3")).unwrap(), r("1"));
        assert_eq!(f.order(&at(&f, "1")).unwrap(), r("-1"));
        assert_eq!(f.order(&at(&f, "7")).unwrap(), r("-1"));
        assert_eq!(f.order(&at(&f, "0")).unwrap(), r("0"));
        assert_eq!(f.order(&at(&f, "9/2")).unwrap(), r("0"));
    }

    #[test]
    fn divisor_examples() {
        let f = example();
        let d = f.divisor();
        let expected = Divisor::from_entries(
            Arc::clone(f.curve()),
            [
                (at(&f, "2"), r("1")),
                (at(&f, "3"), r("1")),
                (at(&f, "1"), r("-1")),
                (at(&f, "7"), r("-1")),
            ],
        )
        .unwrap();
        assert_eq!(d, expected);
        assert_eq!(d.degree(), Rat::zero());

        let k = PLFunction::constant(Arc::clone(f.curve()), r("5"));
        assert!(k.divisor().is_empty());

        let id = identity("1");
        let d = id.divisor();
        assert_eq!(d.coefficient(&CurvePoint::Vertex(VertexId(0))), r("1"));
        assert_eq!(d.coefficient(&CurvePoint::Vertex(VertexId(1))), r("-1"));
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn combine_examples() {
        let f = example();
        let z = PLFunction::combine(&f, &f, &r("1"), &r("-1")).unwrap();
        assert_eq!(z.constant_value(), Some(Rat::zero()));

        let doubled = f.scale(&r("2"));
        assert_eq!(doubled.divisor(), f.divisor().scale(&r("2")));

        let c = Arc::clone(f.curve());
        let max3 = PLFunction::new(Arc::clone(&c), vec![r("3"), r("7")], vec![vec![Breakpoint::new(r("3"), r("3"))]])
            .unwrap();
        let max2 = PLFunction::new(Arc::clone(&c), vec![r("2"), r("7")], vec![vec![Breakpoint::new(r("2"), r("2"))]])
            .unwrap();
        let s = PLFunction::combine(&max3, &max2, &r("1"), &r("1")).unwrap();
        let offsets: Vec<Rat> = s.breakpoints(EdgeId(0)).iter().map(|b| b.offset.clone()).collect();
        assert_eq!(offsets, vec![r("2"), r("3")]);
        assert_eq!(s.slopes(EdgeId(0)), vec![r("0"), r("1"), r("2")]);
    }

    #[test]
    fn collinear_breakpoints_are_pruned() {
        let c = Arc::new(TropicalCurve::segment(r("4")).unwrap());
        let f = PLFunction::new(
            c,
            vec![r("0"), r("4")],
            vec![vec![Breakpoint::new(r("1"), r("1")), Breakpoint::new(r("3"), r("3"))]],
        )
        .unwrap();
        assert!(f.breakpoints(EdgeId(0)).is_empty());
    }

    #[test]
    fn rejects_bad_breakpoints() {
        let c = Arc::new(TropicalCurve::segment(r("4")).unwrap());
        for bad in [vec!["0"], vec!["4"], vec!["2", "1"], vec!["2", "2"], vec!["5"]] {
            let prof = bad.iter().map(|t| Breakpoint::new(r(t), r("0"))).collect();
            assert!(matches!(
                PLFunction::new(Arc::clone(&c), vec![r("0"), r("0")], vec![prof]),
                Err(FunctionError::BadBreakpoint { .. })
            ));
        }
        assert!(matches!(
            PLFunction::new(Arc::clone(&c), vec![r("0")], vec![vec![]]),
            Err(FunctionError::Arity { .. })
        ));
    }

    #[test]
    fn meromorphic_flag() {
        assert!(example().is_meromorphic());
        let c = Arc::new(TropicalCurve::segment(r("2")).unwrap());
        let q = PLFunction::from_vertex_values(c, vec![r("0"), r("1")]).unwrap();
        assert!(!q.is_meromorphic());
    }

    #[test]
    fn loop_vertex_order_counts_both_ends() {
        let c = Arc::new(
            TropicalCurve::new(&["a"], &[EdgeSpec::new("l", "a", "a", r("2"))]).unwrap(),
        );
        // tent on the loop: rises with slope 1 from both ends to the midpoint
        let f = PLFunction::new(Arc::clone(&c), vec![r("0")], vec![vec![Breakpoint::new(r("1"), r("1"))]]).unwrap();
        let a = CurvePoint::Vertex(VertexId(0));
        let dirs = c.directions(&a);
        let total: Rat = dirs.iter().map(|d| f.outgoing_slope(&a, *d).unwrap()).sum();
        assert_eq!(total, r("2"));
        assert_eq!(f.order(&a).unwrap(), r("2"));
        let mid = c.canonicalize(EdgeId(0), r("1")).unwrap();
        assert_eq!(f.order(&mid).unwrap(), r("-2"));
        assert_eq!(f.divisor().degree(), Rat::zero());
    }

    #[test]
    fn divisor_arith_examples() {
        let f = example();
        let d = f.divisor();
        assert!(Divisor::combine(&d, &d, &r("1"), &r("-1")).unwrap().is_empty());
        assert_eq!(d.degree(), Rat::zero());
        let c = Arc::clone(f.curve());
        let half = Divisor::from_entries(
            Arc::clone(&c),
            [
                (CurvePoint::Vertex(VertexId(0)), r("1/2")),
                (CurvePoint::Vertex(VertexId(1)), r("-1/2")),
            ],
        )
        .unwrap();
        assert!(!half.is_integral());
        assert!(d.is_integral());

        let other = Arc::new(TropicalCurve::segment(r("3")).unwrap());
        let foreign = Divisor::zero(other);
        assert_eq!(Divisor::combine(&d, &foreign, &r("1"), &r("1")), Err(FunctionError::CurveMismatch));
    }

    #[test]
    fn divisor_entries_accumulate() {
        let c = Arc::new(TropicalCurve::segment(r("7")).unwrap());
        let a = CurvePoint::Vertex(VertexId(0));
        let d = Divisor::from_entries(
            Arc::clone(&c),
            [
                (a.clone(), r("1")),
                (CurvePoint::Interior { edge: EdgeId(0), offset: r("0") }, r("2")),
                (CurvePoint::Vertex(VertexId(1)), r("-3")),
            ],
        )
        .unwrap();
        assert_eq!(d.coefficient(&a), r("3"));
        assert_eq!(d.to_string(), "3(a) - 3(b)");
    }

    #[test]
    fn lift_and_push_down() {
        use crate::curve::subdivide;
        use std::collections::BTreeSet;
        let f = example();
        let pts = BTreeSet::from([at(&f, "5/2"), at(&f, "2")]);
        let sub = subdivide(f.curve(), &pts).unwrap();
        let lifted = f.lift(&sub).unwrap();
        assert_eq!(sub.curve.num_edges(), 3);
        for x in ["1/3", "2", "5/2", "6"] {
            let p = at(&f, x);
            assert_eq!(lifted.evaluate(&sub.lift_point(&p)).unwrap(), f.evaluate(&p).unwrap());
        }
        assert_eq!(PLFunction::push_down(&sub, &lifted).unwrap(), f);
    }
}
