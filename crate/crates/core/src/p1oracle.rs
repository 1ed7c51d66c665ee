//! Classical Weil reciprocity on the projective line over the rationals.
//!
//! Functions are kept in split form `c · Π (z − r)^{m_r}` with every root
//! rational, so orders, leading local coefficients and symbols are exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactnum::{NumError, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum P1Error {
    #[error("leading scalar must be nonzero")]
    ZeroScale,
    #[error("cannot parse rational function at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Point {
    Finite(Rat),
    Infinity,
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Finite(x) => write!(f, "{x}"),
            P1Point::Infinity => write!(f, "inf"),
        }
    }
}

/// `scale · Π (z − r)^{m_r}`; positive `m_r` are zeros, negative are poles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRationalFunction {
    scale: Rat,
    roots: BTreeMap<Rat, i64>,
}

impl SplitRationalFunction {
    /// Common zeros and poles cancel.
    pub fn new(scale: Rat, zeros: &[Rat], poles: &[Rat]) -> Result<Self, P1Error> {
        let mut f = Self::constant(scale)?;
        for z in zeros {
            f.bump(z.clone(), 1);
        }
        for p in poles {
            f.bump(p.clone(), -1);
        }
        Ok(f)
    }

    pub fn constant(scale: Rat) -> Result<Self, P1Error> {
        if scale.is_zero() {
            return Err(P1Error::ZeroScale);
        }
        Ok(SplitRationalFunction {
            scale,
            roots: BTreeMap::new(),
        })
    }

    /// The coordinate function `z`.
    pub fn z() -> Self {
        Self::new(Rat::one(), &[Rat::zero()], &[]).expect("nonzero scale")
    }

    fn bump(&mut self, root: Rat, by: i64) {
        let m = self.roots.entry(root.clone()).or_insert(0);
        *m += by;
        if *m == 0 {
            self.roots.remove(&root);
        }
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    /// Finite roots with signed multiplicities.
    pub fn roots(&self) -> &BTreeMap<Rat, i64> {
        &self.roots
    }

    pub fn zeros(&self) -> Vec<Rat> {
        self.expand(|m| m > 0)
    }

    pub fn poles(&self) -> Vec<Rat> {
        self.expand(|m| m < 0)
    }

    fn expand(&self, keep: impl Fn(i64) -> bool) -> Vec<Rat> {
        self.roots
            .iter()
            .filter(|(_, m)| keep(**m))
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), m.unsigned_abs() as usize))
            .collect()
    }

    /// Number of finite zeros minus number of finite poles.
    fn finite_degree(&self) -> i64 {
        self.roots.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.scale = &self.scale * &other.scale;
        for (r, m) in &other.roots {
            out.bump(r.clone(), *m);
        }
        out
    }

    pub fn evaluate(&self, z: &Rat) -> Option<Rat> {
        let mut acc = self.scale.clone();
        for (r, m) in &self.roots {
            acc = acc * (z - r).pow(*m).ok()?;
        }
        Some(acc)
    }

    /// Zeros, poles and the point at infinity.
    pub fn support(&self) -> BTreeSet<P1Point> {
        let mut s: BTreeSet<P1Point> = self.roots.keys().cloned().map(P1Point::Finite).collect();
        if self.finite_degree() != 0 {
            s.insert(P1Point::Infinity);
        }
        s
    }
}

impl fmt::Display for SplitRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |r: &Rat, m: i64| {
            let base = if r.is_zero() {
                "z".to_string()
            } else if r.is_negative() {
                format!("(z+{})", r.abs())
            } else {
                format!("(z-{r})")
            };
            if m == 1 {
                base
            } else {
                format!("{base}^{m}")
            }
        };
        let num: Vec<String> = self
            .roots
            .iter()
            .filter(|(_, m)| **m > 0)
            .map(|(r, m)| factor(r, *m))
            .collect();
        let den: Vec<String> = self
            .roots
            .iter()
            .filter(|(_, m)| **m < 0)
            .map(|(r, m)| factor(r, -m))
            .collect();
        if num.is_empty() {
            write!(f, "{}", self.scale)?;
        } else if self.scale == Rat::one() {
            write!(f, "{}", num.join("*"))?;
        } else {
            write!(f, "{}*{}", self.scale, num.join("*"))?;
        }
        if !den.is_empty() {
            write!(f, "/{}", den.join("*"))?;
        }
        Ok(())
    }
}

/// `ord_p f`; at infinity this is (number of poles) − (number of zeros).
pub fn ord_at(f: &SplitRationalFunction, p: &P1Point) -> i64 {
    match p {
        P1Point::Finite(x) => f.roots.get(x).copied().unwrap_or(0),
        P1Point::Infinity => -f.finite_degree(),
    }
}

/// First nonzero coefficient of `f` in the local parameter `z − p`
/// (`1/z` at infinity).
pub fn leading_coeff(f: &SplitRationalFunction, p: &P1Point) -> Rat {
    leading_coeff_scaled(f, p, &Rat::one())
}

/// As [`leading_coeff`], with the local parameter `t = λ·(z − p)`, or
/// `t = λ/z` at infinity. The coefficient is that of `t^{ord_p f}`.
pub fn leading_coeff_scaled(f: &SplitRationalFunction, p: &P1Point, lambda: &Rat) -> Rat {
    let n = ord_at(f, p);
    match p {
        P1Point::Finite(x) => {
            // z − x = t/λ, so the t^n coefficient carries λ^{-n}
            let rest: Rat = f
                .roots
                .iter()
                .filter(|(r, _)| *r != x)
                .map(|(r, m)| (x - r).pow(*m).expect("distinct roots"))
                .fold(f.scale.clone(), |acc, v| acc * v);
            rest * lambda.pow(-n).expect("nonzero parameter scale")
        }
        P1Point::Infinity => {
            // z − r = (λ/t)(1 − r t/λ), so f = scale · λ^{deg} · t^{−deg} · (1 + O(t))
            &f.scale * lambda.pow(f.finite_degree()).expect("nonzero parameter scale")
        }
    }
}

/// `[f, g]_p = (−1)^{nm} · a^m / b^n` with `n = ord_p f`, `m = ord_p g` and
/// `a`, `b` the leading local coefficients.
pub fn weil_symbol_p1(f: &SplitRationalFunction, g: &SplitRationalFunction, p: &P1Point) -> Rat {
    weil_symbol_scaled(f, g, p, &Rat::one())
}

pub fn weil_symbol_scaled(
    f: &SplitRationalFunction,
    g: &SplitRationalFunction,
    p: &P1Point,
    lambda: &Rat,
) -> Rat {
    let n = ord_at(f, p);
    let m = ord_at(g, p);
    let a = leading_coeff_scaled(f, p, lambda);
    let b = leading_coeff_scaled(g, p, lambda);
    let sign = if (n * m) % 2 == 0 { Rat::one() } else { Rat::from(-1) };
    sign * a.pow(m).expect("leading coefficient is nonzero") / b.pow(n).expect("leading coefficient is nonzero")
}

/// Per-point symbols over the joint support and infinity, in point order.
pub fn weil_symbols(f: &SplitRationalFunction, g: &SplitRationalFunction) -> Vec<(P1Point, Rat)> {
    let mut pts = f.support();
    pts.extend(g.support());
    pts.insert(P1Point::Infinity);
    pts.into_iter()
        .map(|p| {
            let s = weil_symbol_p1(f, g, &p);
            (p, s)
        })
        .collect()
}

/// `Π_p [f, g]_p`, which is 1 for every pair.
pub fn weil_product(f: &SplitRationalFunction, g: &SplitRationalFunction) -> Rat {
    weil_symbols(f, g).into_iter().map(|(_, s)| s).fold(Rat::one(), |a, s| a * s)
}

/// `Π_{p finite} f(p)^{ord_p g}`. Fails when `f` has a pole at a zero of `g`
/// or a zero at a pole of `g`.
pub fn finite_value_product(f: &SplitRationalFunction, g: &SplitRationalFunction) -> Result<Rat, NumError> {
    g.roots.iter().try_fold(Rat::one(), |acc, (r, m)| {
        let v = f.evaluate(r).ok_or(NumError::DivisionByZero)?;
        Ok(acc * v.pow(*m)?)
    })
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> P1Error {
        P1Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    /// Unsigned rational `p` or `p/q`; a `/` is only consumed when digits follow.
    fn rat(&mut self) -> Result<Option<Rat>, P1Error> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let save = self.pos;
        if self.eat('/') {
            if let Some(den) = self.digits() {
                return Ok(Some(format!("{num}/{den}").parse()?));
            }
            self.pos = save;
        }
        Ok(Some(num.parse()?))
    }

    fn exponent(&mut self) -> Result<i64, P1Error> {
        if !self.eat('^') {
            return Ok(1);
        }
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        d.parse().map_err(|_| self.err("exponent too large"))
    }

    /// `z`, `(z ± r)`, each with an optional `^k`. Returns the root and power.
    fn factor(&mut self) -> Result<Option<(Rat, i64)>, P1Error> {
        let root = match self.peek() {
            Some('z') => {
                self.pos += 1;
                Rat::zero()
            }
            Some('(') => {
                self.pos += 1;
                if !self.eat('z') {
                    return Err(self.err("expected 'z' inside factor"));
                }
                let root = if self.eat('-') {
                    self.rat()?.ok_or_else(|| self.err("expected rational after '-'"))?
                } else if self.eat('+') {
                    -self.rat()?.ok_or_else(|| self.err("expected rational after '+'"))?
                } else {
                    Rat::zero()
                };
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                root
            }
            _ => return Ok(None),
        };
        Ok(Some((root, self.exponent()?)))
    }

    /// `[rat ['*']] factor ('*'? factor)*`, or a bare rational.
    fn product(&mut self, out: &mut SplitRationalFunction, sign: i64) -> Result<(), P1Error> {
        let mut any = false;
        if let Some(c) = self.rat()? {
            if c.is_zero() {
                return Err(self.err("zero scalar"));
            }
            out.scale = if sign > 0 { &out.scale * &c } else { &out.scale / &c };
            any = true;
            if self.eat('*') && !matches!(self.peek(), Some('z') | Some('(')) {
                return Err(self.err("expected a factor after '*'"));
            }
        }
        while let Some((r, k)) = self.factor()? {
            out.bump(r, sign * k);
            any = true;
            let save = self.pos;
            if self.eat('*') && !matches!(self.peek(), Some('z') | Some('(')) {
                self.pos = save;
                break;
            }
        }
        if any {
            Ok(())
        } else {
            Err(self.err("expected a scalar or a factor"))
        }
    }
}

impl FromStr for SplitRationalFunction {
    type Err = P1Error;

    /// Literals such as `3*(z-1)(z-2)/(z-5)^2`, `-z^2/(z+1/2)` or `2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s, pos: 0 };
        let mut f = SplitRationalFunction::constant(Rat::one())?;
        if cur.eat('-') {
            f.scale = -f.scale;
        }
        cur.product(&mut f, 1)?;
        if cur.eat('/') {
            cur.product(&mut f, -1)?;
        }
        if cur.peek().is_some() {
            return Err(cur.err("unexpected trailing input"));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn srf(s: &str) -> SplitRationalFunction {
        s.parse().unwrap()
    }

    fn fin(s: &str) -> P1Point {
        P1Point::Finite(r(s))
    }

    #[test]
    fn order_examples() {
        let z = SplitRationalFunction::z();
        assert_eq!(ord_at(&z, &fin("0")), 1);
        assert_eq!(ord_at(&z, &P1Point::Infinity), -1);
        assert_eq!(ord_at(&srf("(z-1)^2/(z-3)"), &P1Point::Infinity), -1);
        assert_eq!(ord_at(&srf("(z-1)^2/(z-3)"), &fin("3")), -1);
        assert_eq!(ord_at(&srf("(z-1)^2/(z-3)"), &fin("5")), 0);
    }

    #[test]
    fn leading_coeff_examples() {
        let f = srf("3*(z-1)(z-2)");
        assert_eq!(ord_at(&f, &fin("1")), 1);
        assert_eq!(leading_coeff(&f, &fin("1")), r("-3"));
        assert_eq!(leading_coeff(&SplitRationalFunction::z(), &fin("5")), r("5"));
        let sq = srf("z^2");
        assert_eq!(ord_at(&sq, &P1Point::Infinity), -2);
        assert_eq!(leading_coeff(&sq, &P1Point::Infinity), r("1"));
    }

    #[test]
    fn symbol_examples() {
        let z = SplitRationalFunction::z();
        assert_eq!(weil_symbol_p1(&z, &z, &fin("0")), r("-1"));
        assert_eq!(weil_symbol_p1(&z, &z, &P1Point::Infinity), r("-1"));
        // disjoint supports: the symbol at a zero of g is f(p)^{ord_p g}
        let g = srf("(z-3)^2");
        assert_eq!(weil_symbol_p1(&z, &g, &fin("3")), r("9"));
    }

    #[test]
    fn product_examples() {
        let f = srf("z/(z-2)");
        let g = srf("(z-1)/(z-3)");
        assert_eq!(finite_value_product(&f, &g).unwrap(), r("-1/3"));
        assert_eq!(finite_value_product(&g, &f).unwrap(), r("-1/3"));
        assert_eq!(weil_product(&f, &g), Rat::one());
        assert_eq!(weil_product(&f, &f), Rat::one());
        let h = srf("-7/2*(z+1)^3(z-4)/z^2");
        assert_eq!(weil_product(&h, &h), Rat::one());
        assert_eq!(weil_product(&h, &f), Rat::one());
    }

    #[test]
    fn vieta_example() {
        let z = SplitRationalFunction::z();
        let g = srf("(z-1)(z-2)");
        // g = z² − 3z + 2, a₀/a₂ = 2
        assert_eq!(finite_value_product(&z, &g).unwrap(), r("2"));
    }

    #[test]
    fn parameter_scaling_leaves_symbol_unchanged() {
        let f = srf("5*(z-1)^2/(z+2)");
        let g = srf("(z-1)/z^3");
        for p in [fin("1"), fin("0"), fin("-2"), P1Point::Infinity] {
            assert_eq!(weil_symbol_scaled(&f, &g, &p, &r("2")), weil_symbol_p1(&f, &g, &p));
        }
        assert_ne!(leading_coeff_scaled(&f, &P1Point::Infinity, &r("2")), leading_coeff(&f, &P1Point::Infinity));
    }

    #[test]
    fn construction_cancels_common_factors() {
        let f = SplitRationalFunction::new(r("2"), &[r("1"), r("1"), r("3")], &[r("1")]).unwrap();
        assert_eq!(f.zeros(), vec![r("1"), r("3")]);
        assert!(f.poles().is_empty());
        assert_eq!(SplitRationalFunction::constant(Rat::zero()), Err(P1Error::ZeroScale));
    }

    #[test]
    fn literal_parsing() {
        let f = srf("3*(z-1)(z-2)/(z-5)^2");
        assert_eq!(f.scale(), &r("3"));
        assert_eq!(f.zeros(), vec![r("1"), r("2")]);
        assert_eq!(f.poles(), vec![r("5"), r("5")]);
        let g = srf("-1/2 * z^2 * (z+3/4) / (z - 1)");
        assert_eq!(g.scale(), &r("-1/2"));
        assert_eq!(g.zeros(), vec![r("-3/4"), r("0"), r("0")]);
        assert_eq!(srf("4/3").scale(), &r("4/3"));
        assert_eq!(srf("2/z").poles(), vec![r("0")]);
        assert_eq!(srf("2/3*(z-1)").scale(), &r("2/3"));
        assert_eq!(srf("2/(z-1)").scale(), &r("2"));
        for bad in ["", "(z-1", "3*", "(x-1)", "z^", "0*z", "z)"] {
            assert!(bad.parse::<SplitRationalFunction>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn literal_round_trip() {
        for s in ["3*(z-1)(z-2)/(z-5)^2", "-z^2/(z+1/2)", "7/9", "(z-1)"] {
            let f = srf(s);
            assert_eq!(srf(&f.to_string()), f, "{s} -> {f}");
        }
    }
}
