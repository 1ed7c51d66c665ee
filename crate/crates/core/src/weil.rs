//! Tropical Weil symbols and the two sides of the reciprocity law.
//!
//! Every sum over the curve is taken over the union of the two divisor
//! supports; at any other point both orders vanish and so does the summand.

use std::collections::BTreeSet;

use crate::curve::CurvePoint;
use crate::exactnum::Rat;
use crate::plfun::{same_curve, FunctionError, PLFunction};

fn check(f: &PLFunction, g: &PLFunction) -> Result<(), FunctionError> {
    if same_curve(f.curve(), g.curve()) {
        Ok(())
    } else {
        Err(FunctionError::CurveMismatch)
    }
}

/// `[f, g]_p = ord_p(g)·f(p) − ord_p(f)·g(p)`.
pub fn weil_symbol(f: &PLFunction, g: &PLFunction, p: &CurvePoint) -> Result<Rat, FunctionError> {
    check(f, g)?;
    Ok(g.order(p)? * f.evaluate(p)? - f.order(p)? * g.evaluate(p)?)
}

/// `(Σ f(x)·ord_x g, Σ g(x)·ord_x f)`.
pub fn reciprocity_sides(f: &PLFunction, g: &PLFunction) -> Result<(Rat, Rat), FunctionError> {
    check(f, g)?;
    let pair = |h: &PLFunction, k: &PLFunction| -> Result<Rat, FunctionError> {
        k.divisor()
            .iter()
            .map(|(p, ord)| Ok(h.evaluate(p)? * ord))
            .sum()
    };
    Ok((pair(f, g)?, pair(g, f)?))
}

/// `Σ_x [f, g]_x`, which vanishes for every pair of functions.
pub fn symbol_sum(f: &PLFunction, g: &PLFunction) -> Result<Rat, FunctionError> {
    check(f, g)?;
    let support: BTreeSet<CurvePoint> = f
        .divisor()
        .support()
        .chain(g.divisor().support())
        .cloned()
        .collect();
    support.iter().map(|p| weil_symbol(f, g, p)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{EdgeId, TropicalCurve};
    use crate::plfun::Breakpoint;
    use std::sync::Arc;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn pair() -> (PLFunction, PLFunction) {
        let c = Arc::new(TropicalCurve::segment(r("7")).unwrap());
        let f = PLFunction::new(
            Arc::clone(&c),
            vec![r("4"), r("7")],
            vec![vec![
                Breakpoint::new(r("1"), r("4")),
                Breakpoint::new(r("2"), r("3")),
                Breakpoint::new(r("3"), r("3")),
            ]],
        )
        .unwrap();
        let g = PLFunction::from_vertex_values(c, vec![r("0"), r("7")]).unwrap();
        (f, g)
    }

    fn at(f: &PLFunction, x: &str) -> CurvePoint {
        f.curve().canonicalize(EdgeId(0), r(x)).unwrap()
    }

    #[test]
    fn symbol_examples() {
        let (f, g) = pair();
        for x in ["0", "1", "2", "5/2", "7"] {
            assert_eq!(weil_symbol(&f, &f, &at(&f, x)).unwrap(), Rat::zero());
        }
        assert_eq!(weil_symbol(&f, &g, &at(&f, "2")).unwrap(), r("-2"));
        assert_eq!(weil_symbol(&f, &g, &at(&f, "5")).unwrap(), Rat::zero());
    }

    #[test]
    fn reciprocity_examples() {
        let (f, g) = pair();
        assert_eq!(reciprocity_sides(&f, &g).unwrap(), (r("-3"), r("-3")));
        let k = PLFunction::constant(Arc::clone(f.curve()), r("5"));
        assert_eq!(reciprocity_sides(&k, &g).unwrap(), (Rat::zero(), Rat::zero()));
        let (l, rr) = reciprocity_sides(&f, &f).unwrap();
        assert_eq!(l, rr);
    }

    #[test]
    fn symbol_sum_examples() {
        let (f, g) = pair();
        assert_eq!(symbol_sum(&f, &g).unwrap(), Rat::zero());
        assert_eq!(symbol_sum(&f, &f).unwrap(), Rat::zero());
        let k = PLFunction::constant(Arc::clone(f.curve()), r("-9/4"));
        assert_eq!(symbol_sum(&k, &f).unwrap(), Rat::zero());
    }

    #[test]
    fn mismatched_curves_are_rejected() {
        let (f, _) = pair();
        let other = Arc::new(TropicalCurve::segment(r("3")).unwrap());
        let h = PLFunction::constant(other, r("1"));
        assert_eq!(symbol_sum(&f, &h), Err(FunctionError::CurveMismatch));
        assert_eq!(reciprocity_sides(&f, &h), Err(FunctionError::CurveMismatch));
        assert_eq!(
            weil_symbol(&f, &h, &at(&f, "1")),
            Err(FunctionError::CurveMismatch)
        );
    }
}
