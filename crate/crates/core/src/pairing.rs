//! The tropical Weil pairing of two degree-zero divisors.

use std::sync::Arc;

use thiserror::Error;

use crate::curve::{CurvePoint, TropicalCurve, VertexId};
use crate::exactnum::Rat;
use crate::plfun::{same_curve, Divisor, FunctionError, PLFunction};
use crate::potential::{solve_divisor, PotentialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error(transparent)]
    Potential(#[from] PotentialError),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error("the two defining sums disagree: {first} vs {second}")]
    Inconsistent { first: Rat, second: Rat },
    #[error("effective resistance needs two distinct points")]
    SamePoint,
}

/// Both witnesses and the common value of the pairing.
#[derive(Debug, Clone)]
pub struct Pairing {
    pub value: Rat,
    pub first: PLFunction,
    pub second: PLFunction,
}

/// `Σ_p D(p)·f(p)`.
fn weigh(d: &Divisor, f: &PLFunction) -> Result<Rat, FunctionError> {
    d.iter().map(|(p, c)| Ok(c * f.evaluate(p)?)).sum()
}

/// `TW(D1, D2) = Σ a_i f2(p_i) = Σ b_j f1(q_j)` where `(f_k) = D_k`.
///
/// Both sums are computed; a disagreement is reported as
/// [`PairingError::Inconsistent`].
pub fn tw_pairing_with_witnesses(
    d1: &Divisor,
    d2: &Divisor,
    basepoint: Option<VertexId>,
) -> Result<Pairing, PairingError> {
    if !same_curve(d1.curve(), d2.curve()) {
        return Err(FunctionError::CurveMismatch.into());
    }
    let f1 = solve_divisor(d1, basepoint)?;
    let f2 = solve_divisor(d2, basepoint)?;
    let first = weigh(d1, &f2)?;
    let second = weigh(d2, &f1)?;
    if first != second {
        return Err(PairingError::Inconsistent { first, second });
    }
    Ok(Pairing {
        value: first,
        first: f1,
        second: f2,
    })
}

pub fn tw_pairing(d1: &Divisor, d2: &Divisor) -> Result<Rat, PairingError> {
    tw_pairing_with_witnesses(d1, d2, None).map(|p| p.value)
}

/// Resistance between `p` and `q` in the network whose resistances are the
/// edge lengths.
///
/// Equals `−TW((p)−(q), (p)−(q))`: the pairing of a divisor with itself is
/// `Σ f·ord f = −Σ slope²·length`, the negated energy of the flow.
pub fn effective_resistance(
    curve: &Arc<TropicalCurve>,
    p: &CurvePoint,
    q: &CurvePoint,
) -> Result<Rat, PairingError> {
    let p = curve.canonical(p).map_err(FunctionError::from)?;
    let q = curve.canonical(q).map_err(FunctionError::from)?;
    if p == q {
        return Err(PairingError::SamePoint);
    }
    let d = Divisor::point_difference(Arc::clone(curve), &p, &q)?;
    Ok(-tw_pairing(&d, &d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{EdgeId, EdgeSpec};

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn parallel(k: usize) -> Arc<TropicalCurve> {
        let edges: Vec<EdgeSpec> = (0..k)
            .map(|i| EdgeSpec::new(&format!("e{i}"), "u", "v", Rat::one()))
            .collect();
        Arc::new(TropicalCurve::new(&["u", "v"], &edges).unwrap())
    }

    fn uv(c: &Arc<TropicalCurve>) -> Divisor {
        Divisor::point_difference(
            Arc::clone(c),
            &CurvePoint::Vertex(VertexId(0)),
            &CurvePoint::Vertex(VertexId(1)),
        )
        .unwrap()
    }

    #[test]
    fn pairing_with_zero_divisor() {
        let c = parallel(2);
        assert_eq!(tw_pairing(&uv(&c), &Divisor::zero(Arc::clone(&c))).unwrap(), Rat::zero());
    }

    #[test]
    fn self_pairing_is_negated_resistance() {
        let seg = Arc::new(TropicalCurve::segment(r("1")).unwrap());
        assert_eq!(tw_pairing(&uv(&seg), &uv(&seg)).unwrap(), r("-1"));
        let bigon = parallel(2);
        assert_eq!(tw_pairing(&uv(&bigon), &uv(&bigon)).unwrap(), r("-1/2"));
    }

    #[test]
    fn resistance_examples() {
        let seg = Arc::new(TropicalCurve::segment(r("7")).unwrap());
        let (a, b) = (CurvePoint::Vertex(VertexId(0)), CurvePoint::Vertex(VertexId(1)));
        assert_eq!(effective_resistance(&seg, &a, &b).unwrap(), r("7"));
        let mid = seg.canonicalize(EdgeId(0), r("5/2")).unwrap();
        assert_eq!(effective_resistance(&seg, &a, &mid).unwrap(), r("5/2"));
        assert_eq!(effective_resistance(&parallel(2), &a, &b).unwrap(), r("1/2"));
        assert_eq!(effective_resistance(&parallel(3), &a, &b).unwrap(), r("1/3"));
        assert_eq!(effective_resistance(&seg, &a, &a), Err(PairingError::SamePoint));
    }

    #[test]
    fn nonzero_degree_is_rejected() {
        let c = parallel(2);
        let d = Divisor::from_entries(Arc::clone(&c), [(CurvePoint::Vertex(VertexId(0)), r("1"))]).unwrap();
        assert!(matches!(
            tw_pairing(&d, &uv(&c)),
            Err(PairingError::Potential(PotentialError::NonzeroDegree(_)))
        ));
        assert!(matches!(
            tw_pairing(&uv(&c), &d),
            Err(PairingError::Potential(PotentialError::NonzeroDegree(_)))
        ));
    }

    #[test]
    fn witnesses_have_the_right_divisors() {
        let c = parallel(3);
        let mid = c.canonicalize(EdgeId(1), r("1/3")).unwrap();
        let d2 = Divisor::point_difference(Arc::clone(&c), &mid, &CurvePoint::Vertex(VertexId(1))).unwrap();
        let p = tw_pairing_with_witnesses(&uv(&c), &d2, None).unwrap();
        assert_eq!(p.first.divisor(), uv(&c));
        assert_eq!(p.second.divisor(), d2);
    }
}
