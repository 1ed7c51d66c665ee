//! A small max-plus expression language in one variable `x`.
//!
//! ```text
//! expr := term (('+' | '-') term)*
//! term := ['-'] [rat '*'] atom
//! atom := rat | 'x' | 'max' '(' expr ',' expr ')' | '(' expr ')'
//! ```

use std::fmt;
use std::sync::Arc;

use thiserror::Error;
use tropweil::{Breakpoint, FunctionError, PLFunction, Rat, TropicalCurve};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Rat),
    X,
    Max(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Scale(Rat, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier {name:?} at {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("segment length must be positive, got {0}")]
    BadLength(Rat),
    #[error(transparent)]
    Function(#[from] FunctionError),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: impl Into<String>) -> ExprError {
        let msg = msg.into();
        if self.pos >= self.src.len() {
            ExprError::Syntax {
                pos: self.src.len(),
                msg: format!("{msg} at end of input"),
            }
        } else {
            ExprError::Syntax { pos: self.pos, msg }
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    /// Unsigned `digits ['/' digits]`.
    fn rat(&mut self) -> Result<Rat, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos > s
        };
        if !digits(self) {
            return Err(self.error("expected a number"));
        }
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            if !digits(self) {
                return Err(self.error("expected a denominator"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| ExprError::Syntax {
            pos: start,
            msg: format!("invalid number {text:?}"),
        })
    }

    fn ident(&mut self) -> (usize, String) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        (start, String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let body = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let r = self.rat()?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                Expr::Scale(r, Box::new(self.atom()?))
            } else {
                Expr::Const(r)
            }
        } else {
            self.atom()?
        };
        Ok(if negate { Expr::Neg(Box::new(body)) } else { body })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Const(self.rat()?)),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let (pos, name) = self.ident();
                match name.as_str() {
                    "x" => Ok(Expr::X),
                    "max" => {
                        self.expect(b'(')?;
                        let a = self.expr()?;
                        self.expect(b',')?;
                        let b = self.expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Max(Box::new(a), Box::new(b)))
                    }
                    _ => Err(ExprError::UnknownIdentifier { pos, name }),
                }
            }
            _ => Err(self.error("expected a number, 'x', 'max' or '('")),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(r) if r.is_negative() => write!(f, "(-{})", r.abs()),
            Expr::Const(r) => write!(f, "{r}"),
            Expr::X => write!(f, "x"),
            Expr::Max(a, b) => write!(f, "max({a}, {b})"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "{a} + ({b})"),
            Expr::Sub(a, b) => write!(f, "{a} - ({b})"),
            Expr::Scale(r, a) if r.is_negative() => write!(f, "-({}*({a}))", r.abs()),
            Expr::Scale(r, a) => write!(f, "{r}*({a})"),
        }
    }
}

impl Expr {
    pub fn depends_on_x(&self) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::X => true,
            Expr::Neg(a) | Expr::Scale(_, a) => a.depends_on_x(),
            Expr::Max(a, b) | Expr::Add(a, b) | Expr::Sub(a, b) => a.depends_on_x() || b.depends_on_x(),
        }
    }

    /// Every scalar multiplier applied to an `x`-dependent subterm is an
    /// integer. Sufficient, not necessary, for integer slopes.
    pub fn has_integer_slopes(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::X => true,
            Expr::Neg(a) => a.has_integer_slopes(),
            Expr::Scale(r, a) => (r.is_integer() || !a.depends_on_x()) && a.has_integer_slopes(),
            Expr::Max(a, b) | Expr::Add(a, b) | Expr::Sub(a, b) => a.has_integer_slopes() && b.has_integer_slopes(),
        }
    }

    pub fn evaluate(&self, x: &Rat) -> Rat {
        match self {
            Expr::Const(r) => r.clone(),
            Expr::X => x.clone(),
            Expr::Max(a, b) => a.evaluate(x).max(b.evaluate(x)),
            Expr::Neg(a) => -a.evaluate(x),
            Expr::Add(a, b) => a.evaluate(x) + b.evaluate(x),
            Expr::Sub(a, b) => a.evaluate(x) - b.evaluate(x),
            Expr::Scale(r, a) => r * &a.evaluate(x),
        }
    }

    /// Knots `(x, value)` of the expression on `[0, len]`, endpoints
    /// included, with the expression linear between consecutive knots.
    fn knots(&self, len: &Rat) -> Vec<(Rat, Rat)> {
        match self {
            Expr::Const(_) | Expr::X => vec![
                (Rat::zero(), self.evaluate(&Rat::zero())),
                (len.clone(), self.evaluate(len)),
            ],
            Expr::Neg(a) | Expr::Scale(_, a) => a
                .knots(len)
                .into_iter()
                .map(|(t, _)| {
                    let v = self.evaluate(&t);
                    (t, v)
                })
                .collect(),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let xs = merge(&a.knots(len), &b.knots(len));
                xs.into_iter().map(|t| (t.clone(), self.evaluate(&t))).collect()
            }
            Expr::Max(a, b) => {
                let (ka, kb) = (a.knots(len), b.knots(len));
                let xs = merge(&ka, &kb);
                let mut out: Vec<Rat> = Vec::with_capacity(xs.len() * 2);
                for w in xs.windows(2) {
                    out.push(w[0].clone());
                    // both sides are linear on [w0, w1]; add the crossing if strict
                    let d0 = a.evaluate(&w[0]) - b.evaluate(&w[0]);
                    let d1 = a.evaluate(&w[1]) - b.evaluate(&w[1]);
                    if (d0.is_positive() && d1.is_negative()) || (d0.is_negative() && d1.is_positive()) {
                        out.push(&w[0] + &(&d0 * &(&w[1] - &w[0]) / (&d0 - &d1)));
                    }
                }
                out.extend(xs.last().cloned());
                out.into_iter().map(|t| (t.clone(), self.evaluate(&t))).collect()
            }
        }
    }
}

fn merge(a: &[(Rat, Rat)], b: &[(Rat, Rat)]) -> Vec<Rat> {
    let mut xs: Vec<Rat> = a.iter().chain(b).map(|(t, _)| t.clone()).collect();
    xs.sort();
    xs.dedup();
    xs
}

/// The expression as a function on the segment `a`–`b` (edge `e1`) of the given
/// length, with `x` the offset from `a`.
pub fn compile_on_segment(e: &Expr, length: &Rat) -> Result<PLFunction, ExprError> {
    if !length.is_positive() {
        return Err(ExprError::BadLength(length.clone()));
    }
    let curve = Arc::new(TropicalCurve::segment(length.clone()).map_err(FunctionError::from)?);
    compile_on(e, &curve)
}

/// Same as [`compile_on_segment`] on an existing segment curve, so that
/// several expressions share one curve.
pub fn compile_on(e: &Expr, segment: &Arc<TropicalCurve>) -> Result<PLFunction, ExprError> {
    let length = segment.edges()[0].length.clone();
    let knots = e.knots(&length);
    let interior: Vec<Breakpoint> = knots[1..knots.len() - 1]
        .iter()
        .map(|(t, v)| Breakpoint::new(t.clone(), v.clone()))
        .collect();
    let values = vec![knots[0].1.clone(), knots[knots.len() - 1].1.clone()];
    Ok(PLFunction::new(Arc::clone(segment), values, vec![interior])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropweil::EdgeId;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    const MAX_PLUS: &str = "max(x,3)+max(x,2)-max(x,1)";

    #[test]
    fn parses_the_max_plus_example() {
        let e = parse_expression(MAX_PLUS).unwrap();
        let max = |c: i64| Expr::Max(Box::new(Expr::X), Box::new(Expr::Const(Rat::from(c))));
        let expected = Expr::Sub(
            Box::new(Expr::Add(Box::new(max(3)), Box::new(max(2)))),
            Box::new(max(1)),
        );
        assert_eq!(e, expected);
        assert_eq!(parse_expression("x").unwrap(), Expr::X);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_expression("max(x"),
            Err(ExprError::Syntax {
                pos: 5,
                msg: "expected ',' at end of input".into()
            })
        );
        assert!(matches!(parse_expression("x + "), Err(ExprError::Syntax { pos: 4, .. })));
        assert!(matches!(parse_expression("x x"), Err(ExprError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expression("1/0*x"), Err(ExprError::Syntax { pos: 0, .. })));
        assert_eq!(
            parse_expression("min(x, 1)"),
            Err(ExprError::UnknownIdentifier {
                pos: 0,
                name: "min".into()
            })
        );
    }

    #[test]
    fn display_reparses_to_the_same_function() {
        for text in [MAX_PLUS, "-2*x + 1/3", "-(x - max(1, -3*x))", "2 - -x", "1/2*max(x, 3/2)"] {
            let e = parse_expression(text).unwrap();
            let again = parse_expression(&e.to_string()).unwrap();
            for k in 0..20 {
                let x = Rat::frac(k, 4);
                assert_eq!(e.evaluate(&x), again.evaluate(&x), "{text}");
            }
        }
    }

    #[test]
    fn compiles_the_max_plus_example() {
        let f = compile_on_segment(&parse_expression(MAX_PLUS).unwrap(), &r("7")).unwrap();
        assert_eq!(f.vertex_values(), &[r("4"), r("7")]);
        let bps: Vec<(Rat, Rat)> = f
            .breakpoints(EdgeId(0))
            .iter()
            .map(|b| (b.offset.clone(), b.value.clone()))
            .collect();
        assert_eq!(bps, vec![(r("1"), r("4")), (r("2"), r("3")), (r("3"), r("3"))]);
        assert!(f.is_meromorphic());
    }

    #[test]
    fn compiles_small_examples() {
        let f = compile_on_segment(&Expr::X, &r("1")).unwrap();
        assert!(f.breakpoints(EdgeId(0)).is_empty());
        assert_eq!(f.vertex_values(), &[r("0"), r("1")]);

        let g = compile_on_segment(&parse_expression("max(x,1/2)-x").unwrap(), &r("1")).unwrap();
        let offsets: Vec<Rat> = g.breakpoints(EdgeId(0)).iter().map(|b| b.offset.clone()).collect();
        assert_eq!(offsets, vec![r("1/2")]);

        // crossing of two non-constant pieces
        let h = compile_on_segment(&parse_expression("max(2*x, 3 - x)").unwrap(), &r("4")).unwrap();
        assert_eq!(h.breakpoints(EdgeId(0))[0], Breakpoint::new(r("1"), r("2")));
    }

    #[test]
    fn rejects_nonpositive_length() {
        assert!(matches!(
            compile_on_segment(&Expr::X, &r("0")),
            Err(ExprError::BadLength(_))
        ));
    }

    #[test]
    fn integer_slope_flag() {
        assert!(parse_expression(MAX_PLUS).unwrap().has_integer_slopes());
        assert!(parse_expression("1/2 + 3*x").unwrap().has_integer_slopes());
        assert!(parse_expression("x + 1/2*(3)").unwrap().has_integer_slopes());
        assert!(!parse_expression("1/2*x").unwrap().has_integer_slopes());
        assert!(!parse_expression("2*max(1/3*x, 0)").unwrap().has_integer_slopes());
    }
}
