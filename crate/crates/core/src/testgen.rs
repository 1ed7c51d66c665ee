//! Random instances for property tests: curves, functions, divisors and
//! split rational functions.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::curve::{CurvePoint, EdgeId, EdgeSpec, TropicalCurve, VertexId};
use crate::exactnum::Rat;
use crate::p1oracle::{P1Point, SplitRationalFunction};
use crate::plfun::{Breakpoint, Divisor, PLFunction};

#[derive(Debug, Clone)]
pub struct CurveParams {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_den: i64,
    pub loop_chance: f64,
    pub parallel_chance: f64,
}

impl Default for CurveParams {
    fn default() -> Self {
        CurveParams {
            max_vertices: 8,
            max_edges: 12,
            max_den: 10,
            loop_chance: 0.2,
            parallel_chance: 0.25,
        }
    }
}

/// `k/d` with `lo ≤ k/d ≤ hi`-ish integer numerator range and `1 ≤ d ≤ max_den`.
pub fn rat_in<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rat {
    let d = rng.gen_range(1..=max_den);
    let k = rng.gen_range(lo * d..=hi * d);
    Rat::frac(k, d)
}

/// A uniformly chosen fraction `k/d` of `x` with `0 < k < d ≤ max_den`.
pub fn fraction_of<R: Rng>(rng: &mut R, x: &Rat, max_den: i64) -> Rat {
    let d = rng.gen_range(2..=max_den.max(2));
    let k = rng.gen_range(1..d);
    x * Rat::frac(k, d)
}

pub fn random_length<R: Rng>(rng: &mut R, max_den: i64) -> Rat {
    let d = rng.gen_range(1..=max_den);
    let k = rng.gen_range(1..=4 * d);
    Rat::frac(k, d)
}

/// Connected curve: a random spanning tree plus extra edges, some of them
/// loops or parallel to existing edges.
pub fn random_curve<R: Rng>(rng: &mut R, params: &CurveParams) -> TropicalCurve {
    let n = rng.gen_range(1..=params.max_vertices);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<EdgeSpec> = Vec::new();
    let push = |a: usize, b: usize, rng: &mut R, edges: &mut Vec<EdgeSpec>| {
        let id = format!("e{}", edges.len());
        edges.push(EdgeSpec::new(&id, &names[a], &names[b], random_length(rng, params.max_den)));
    };
    for i in 1..n {
        let j = rng.gen_range(0..i);
        if rng.gen_bool(0.5) {
            push(i, j, rng, &mut edges);
        } else {
            push(j, i, rng, &mut edges);
        }
    }
    let target = rng.gen_range(edges.len()..=params.max_edges.max(edges.len()));
    while edges.len() < target {
        let roll: f64 = rng.gen();
        if roll < params.loop_chance || n == 1 {
            let v = rng.gen_range(0..n);
            push(v, v, rng, &mut edges);
        } else if roll < params.loop_chance + params.parallel_chance && !edges.is_empty() {
            let e = edges.choose(rng).expect("nonempty").clone();
            let a = names.iter().position(|x| *x == e.ends.0).expect("known");
            let b = names.iter().position(|x| *x == e.ends.1).expect("known");
            push(a, b, rng, &mut edges);
        } else {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            push(a, b, rng, &mut edges);
        }
    }
    TropicalCurve::new(&names, &edges).expect("generated curve is valid")
}

/// Pieces `(slope, length)` with slopes drawn from `{lo, hi}` covering `len`
/// with total rise `delta`.
fn zigzag<R: Rng>(rng: &mut R, lo: &Rat, hi: &Rat, len: &Rat, delta: &Rat) -> Vec<(Rat, Rat)> {
    if lo == hi {
        return vec![(lo.clone(), len.clone())];
    }
    let b = (delta - lo * len) / (hi - lo);
    let a = len - &b;
    let split = |rng: &mut R, x: &Rat| {
        if x.is_zero() || rng.gen_bool(0.4) {
            (x.clone(), Rat::zero())
        } else {
            let first = fraction_of(rng, x, 10);
            let rest = x - &first;
            (first, rest)
        }
    };
    let (a1, a2) = split(rng, &a);
    let (b1, b2) = split(rng, &b);
    let mut pieces = vec![(lo.clone(), a1), (hi.clone(), b1), (lo.clone(), a2), (hi.clone(), b2)];
    if rng.gen_bool(0.5) {
        pieces.rotate_left(1);
    }
    pieces.retain(|(_, l)| !l.is_zero());
    pieces
}

/// Continuous piecewise-linear function with slopes in `[-5, 5]` and at
/// most three breakpoints per edge. With `integer_slopes` every slope is an
/// integer; otherwise slopes are arbitrary rationals.
pub fn random_function<R: Rng>(rng: &mut R, curve: &Arc<TropicalCurve>, integer_slopes: bool) -> PLFunction {
    let min_len = curve
        .edges()
        .iter()
        .map(|e| e.length.clone())
        .min()
        .unwrap_or_else(Rat::one);
    let offset = Rat::from(rng.gen_range(-10..=10));
    // |f(u) − f(v)| ≤ 2·min_len keeps every average slope within [-2, 2]
    let values: Vec<Rat> = curve
        .vertex_ids()
        .map(|_| &offset + &min_len * rat_in(rng, -1, 1, 10))
        .collect();
    let profiles = curve
        .edge_ids()
        .map(|e| {
            let edge = curve.edge(e);
            let delta = &values[edge.head.0] - &values[edge.tail.0];
            let avg = &delta / &edge.length;
            let (lo, hi) = if integer_slopes {
                let fl = avg.floor().to_i64().expect("small");
                let cl = avg.ceil().to_i64().expect("small");
                let mut lo = rng.gen_range(-5..=fl);
                let mut hi = rng.gen_range(cl..=5);
                if lo == hi && rng.gen_bool(0.5) {
                    if lo > -5 {
                        lo -= 1;
                    } else {
                        hi += 1;
                    }
                }
                (Rat::from(lo), Rat::from(hi))
            } else {
                let five = Rat::from(5);
                let lo = &avg - (&five + &avg) * rat_in(rng, 0, 1, 10);
                let hi = &avg + (&five - &avg) * rat_in(rng, 0, 1, 10);
                (lo, hi)
            };
            let mut t = Rat::zero();
            let mut v = values[edge.tail.0].clone();
            let pieces = zigzag(rng, &lo, &hi, &edge.length, &delta);
            let mut out = Vec::new();
            for (s, l) in &pieces[..pieces.len() - 1] {
                t += l;
                v += &(s * l);
                out.push(Breakpoint::new(t.clone(), v.clone()));
            }
            out
        })
        .collect();
    PLFunction::new(Arc::clone(curve), values, profiles).expect("generated function is valid")
}

pub fn random_point<R: Rng>(rng: &mut R, curve: &TropicalCurve) -> CurvePoint {
    if curve.num_edges() == 0 || rng.gen_bool(0.4) {
        CurvePoint::Vertex(VertexId(rng.gen_range(0..curve.num_vertices())))
    } else {
        let e = EdgeId(rng.gen_range(0..curve.num_edges()));
        let t = fraction_of(rng, &curve.edge(e).length, 10);
        curve.canonicalize(e, t).expect("interior offset")
    }
}

/// Degree-zero divisor on up to `max_points` random points.
pub fn random_divisor<R: Rng>(rng: &mut R, curve: &Arc<TropicalCurve>, max_points: usize, integral: bool) -> Divisor {
    let k = rng.gen_range(0..=max_points);
    let pts: BTreeSet<CurvePoint> = (0..k).map(|_| random_point(rng, curve)).collect();
    let pts: Vec<CurvePoint> = pts.into_iter().collect();
    let mut entries = Vec::new();
    let mut total = Rat::zero();
    for p in pts.iter().skip(1) {
        let c = if integral {
            Rat::from(rng.gen_range(-4..=4))
        } else {
            rat_in(rng, -3, 3, 6)
        };
        total += &c;
        entries.push((p.clone(), c));
    }
    if let Some(first) = pts.first() {
        entries.push((first.clone(), -total));
    }
    Divisor::from_entries(Arc::clone(curve), entries).expect("points are on the curve")
}

fn random_root<R: Rng>(rng: &mut R) -> Rat {
    rat_in(rng, -4, 4, 3)
}

fn random_scale<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let c = rat_in(rng, -5, 5, 4);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Split rational function with at most `max_degree` zeros and poles each.
pub fn random_split<R: Rng>(rng: &mut R, max_degree: usize) -> SplitRationalFunction {
    let zeros: Vec<Rat> = (0..rng.gen_range(0..=max_degree)).map(|_| random_root(rng)).collect();
    let poles: Vec<Rat> = (0..rng.gen_range(0..=max_degree)).map(|_| random_root(rng)).collect();
    SplitRationalFunction::new(random_scale(rng), &zeros, &poles).expect("nonzero scale")
}

/// A pair with disjoint divisors on the projective line (infinity included).
pub fn random_disjoint_split_pair<R: Rng>(rng: &mut R, max_degree: usize) -> (SplitRationalFunction, SplitRationalFunction) {
    let f = random_split(rng, max_degree);
    let taken: BTreeSet<Rat> = f.roots().keys().cloned().collect();
    let fresh = |rng: &mut R| loop {
        let r = random_root(rng);
        if !taken.contains(&r) {
            return r;
        }
    };
    let k = rng.gen_range(0..=max_degree);
    let zeros: Vec<Rat> = (0..k).map(|_| fresh(rng)).collect();
    // when f has a zero or pole at infinity, g must be regular and nonzero there
    let pole_count = if f.support().contains(&P1Point::Infinity) {
        k
    } else {
        rng.gen_range(0..=max_degree)
    };
    let poles: Vec<Rat> = (0..pole_count).map(|_| fresh(rng)).collect();
    let g = SplitRationalFunction::new(random_scale(rng), &zeros, &poles).expect("nonzero scale");
    (f, g)
}

/// A pair sharing at least one finite zero or pole.
pub fn random_overlapping_split_pair<R: Rng>(
    rng: &mut R,
    max_degree: usize,
) -> (SplitRationalFunction, SplitRationalFunction) {
    let lower = max_degree.saturating_sub(1).max(1);
    let f = loop {
        let f = random_split(rng, lower);
        if !f.roots().is_empty() {
            break f;
        }
    };
    let g = random_split(rng, lower);
    let keys: Vec<&Rat> = f.roots().keys().collect();
    let r = (*keys.choose(rng).expect("nonempty")).clone();
    let one = Rat::one();
    let factor = match g.roots().get(&r) {
        Some(-1) => SplitRationalFunction::new(one, &[], &[r]),
        _ => SplitRationalFunction::new(one, &[r], &[]),
    }
    .expect("unit scale");
    (f, g.mul(&factor))
}

/// Monic polynomial with `1..=max_degree` rational roots.
pub fn random_monic_split_polynomial<R: Rng>(rng: &mut R, max_degree: usize) -> SplitRationalFunction {
    let n = rng.gen_range(1..=max_degree);
    let roots: Vec<Rat> = (0..n).map(|_| random_root(rng)).collect();
    SplitRationalFunction::new(Rat::one(), &roots, &[]).expect("unit scale")
}
