//! Functions with a prescribed divisor, via Kirchhoff's laws.
//!
//! Treat the curve as a resistor network whose resistances are the edge
//! lengths and place charge `D(p)` at every point `p`. Up to sign, the
//! resulting potential is a piecewise-linear function whose outgoing slopes
//! at each node sum to the charge there (current conservation). The sign is
//! fixed so that the order at `p` equals `+D(p)`, which makes the positively
//! charged nodes local minima. Any degree-zero divisor has such a function,
//! unique up to an additive constant.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::curve::{subdivide, CurveError, CurvePoint, TropicalCurve, VertexId};
use crate::exactnum::{solve_linear, NumError, Rat, RatMatrix};
use crate::plfun::{FunctionError, PLFunction};
use crate::Divisor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PotentialError {
    #[error("divisor has degree {0}, expected 0")]
    NonzeroDegree(Rat),
    #[error("divisor is not integral")]
    NotIntegral,
    #[error("basepoint {0:?} is not a vertex of the curve")]
    BadBasepoint(VertexId),
    #[error("solved potential has divisor {got}, expected {expected}")]
    Inconsistent { expected: String, got: String },
    #[error(transparent)]
    Linear(#[from] NumError),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Weighted Laplacian system of a curve whose charged points are all vertices.
#[derive(Debug, Clone)]
pub struct CircuitSystem {
    /// Node `i` of the system is vertex `VertexId(i)`.
    pub nodes: Vec<VertexId>,
    /// Conductance Laplacian, before pinning.
    pub laplacian: RatMatrix,
    pub charges: Vec<Rat>,
    pub pinned: VertexId,
}

impl CircuitSystem {
    /// Builds the system; every edge has conductance `1/length` and loops
    /// contribute nothing.
    pub fn assemble(curve: &TropicalCurve, charges: Vec<Rat>, pinned: VertexId) -> Self {
        let n = curve.num_vertices();
        assert_eq!(charges.len(), n, "one charge per vertex");
        let mut laplacian = RatMatrix::zeros(n, n);
        for e in curve.edges().iter().filter(|e| !e.is_loop()) {
            let c = e.length.recip().expect("edge lengths are positive");
            let (u, v) = (e.tail.0, e.head.0);
            laplacian.add_to(u, u, &c);
            laplacian.add_to(v, v, &c);
            laplacian.add_to(u, v, &-&c);
            laplacian.add_to(v, u, &-&c);
        }
        CircuitSystem {
            nodes: curve.vertex_ids().collect(),
            laplacian,
            charges,
            pinned,
        }
    }

    /// Node potentials with the pinned node at zero.
    ///
    /// The order of the potential `f` at node `u` is `Σ (f(v) − f(u)) / len`,
    /// which is `−(L·f)_u`; so the system solved is `L·f = −q` with the pinned
    /// row replaced by `f(pinned) = 0`.
    pub fn solve(&self) -> Result<Vec<Rat>, NumError> {
        let n = self.nodes.len();
        let mut a = self.laplacian.clone();
        let mut b: Vec<Rat> = self.charges.iter().map(|q| -q).collect();
        let k = self.pinned.0;
        for j in 0..n {
            a.set(k, j, if j == k { Rat::one() } else { Rat::zero() });
        }
        b[k] = Rat::zero();
        solve_linear(&a, &b)
    }
}

/// The unique function with divisor `d` that vanishes at `basepoint`
/// (default: the first vertex).
pub fn solve_divisor(d: &Divisor, basepoint: Option<VertexId>) -> Result<PLFunction, PotentialError> {
    let curve = d.curve();
    let degree = d.degree();
    if !degree.is_zero() {
        return Err(PotentialError::NonzeroDegree(degree));
    }
    let base = basepoint.unwrap_or(VertexId(0));
    if base.0 >= curve.num_vertices() {
        return Err(PotentialError::BadBasepoint(base));
    }

    let sites: BTreeSet<CurvePoint> = d.support().cloned().collect();
    let sub = subdivide(curve, &sites)?;
    let mut charges = vec![Rat::zero(); sub.curve.num_vertices()];
    for (p, q) in d.iter() {
        charges[sub.point_map[p].0] += q;
    }
    let system = CircuitSystem::assemble(&sub.curve, charges, base);
    let potentials = system.solve()?;
    let on_sub = PLFunction::from_vertex_values(Arc::clone(&sub.curve), potentials)?;
    let f = PLFunction::push_down(&sub, &on_sub)?;

    let got = f.divisor();
    if got != *d {
        return Err(PotentialError::Inconsistent {
            expected: d.to_string(),
            got: got.to_string(),
        });
    }
    Ok(f)
}

/// Whether `d` is the divisor of an integer-slope function.
pub fn is_principal(d: &Divisor) -> Result<bool, PotentialError> {
    if !d.is_integral() {
        return Err(PotentialError::NotIntegral);
    }
    Ok(solve_divisor(d, None)?.is_meromorphic())
}
