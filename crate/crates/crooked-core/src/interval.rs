//! Exact representations of simplicial maps on finite linear graphs and of
//! piecewise-linear self-maps of the unit interval.
//!
//! A [`SimplicialMap`] is the discrete avatar of an interval surjection: a
//! sequence of integer vertex values `v_0..v_m` into the linear graph `I_n`
//! (vertices `0..=n`) with the adjacent step bound `|v_{i+1} - v_i| <= 1`.
//! A [`PLMap`] is an exact-rational piecewise-linear map of `[0,1]` into
//! itself, the substrate for composition and sup-metric computations.
//!
//! All arithmetic is exact rational: arbitrary-precision numerators and
//! denominators, no floating point anywhere. Piecewise-linear maps are kept
//! in a canonical form (collinear interior breakpoints merged on
//! construction), so equality of canonical forms is exact map equality and
//! round-trip tests can demand zero tolerance.
//!
//! All values are immutable after construction and safe to share across
//! concurrent workers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Builds the exact rational `num/den`.
///
/// # Panics
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as the canonical `"num/den"` string (never decimal).
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a rational from `"num/den"` or a bare integer string.
pub fn rat_from_str(s: &str) -> Result<Rat, IntervalError> {
    let bad = || IntervalError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Errors raised while building or combining interval maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    /// Two consecutive vertex values differ by more than one.
    #[error("step violation at index {index}: |{to} - {from}| > 1")]
    StepViolation {
        /// Index `i` of the first vertex of the offending step.
        index: usize,
        /// Value `v_i`.
        from: i64,
        /// Value `v_{i+1}`.
        to: i64,
    },
    /// A vertex value lies outside the codomain `0..=n`.
    #[error("range violation at index {index}: value {value} not in [0, {codomain_size}]")]
    RangeViolation {
        /// Index of the offending vertex.
        index: usize,
        /// The out-of-range value.
        value: i64,
        /// The codomain size `n`.
        codomain_size: usize,
    },
    /// The vertex value sequence is empty.
    #[error("a simplicial map needs at least one vertex value")]
    EmptyValues,
    /// Concatenation requires the shared endpoint values to agree.
    #[error("concat mismatch: left ends at {left_end}, right starts at {right_start}")]
    ConcatMismatch {
        /// Final value of the left map.
        left_end: i64,
        /// Initial value of the right map.
        right_start: i64,
    },
    /// Concatenation requires equal codomain sizes.
    #[error("concat mismatch: codomain sizes {left} and {right} differ")]
    ConcatCodomainMismatch {
        /// Codomain size of the left map.
        left: usize,
        /// Codomain size of the right map.
        right: usize,
    },
    /// The inclusion `e^n_{m,k}` requires `m + k <= n`.
    #[error("inclusion e^{n}_{{{m},{k}}} out of range: {m} + {k} > {n}")]
    IncludeOutOfRange {
        /// Domain size of the inclusion.
        m: usize,
        /// Offset of the inclusion.
        k: usize,
        /// Codomain size.
        n: usize,
    },
    /// Composition requires the inner codomain to equal the outer domain.
    #[error("domain mismatch: outer domain size {expected}, inner codomain size {found}")]
    DomainMismatch {
        /// Outer map domain size.
        expected: usize,
        /// Inner map codomain size.
        found: usize,
    },
    /// A piecewise-linear map was given invalid breakpoints.
    #[error("bad breakpoints: {0}")]
    BadBreakpoints(String),
    /// A rational string failed to parse.
    #[error("bad rational literal: {0:?}")]
    BadRational(String),
    /// A serialized map failed to parse.
    #[error("bad serialized map: {0}")]
    BadSerialization(String),
}

/// Serde adapter that serializes a [`Rat`] as the canonical `"num/den"`
/// string (never decimal). Use with `#[serde(with = "rat_serde")]`.
pub mod rat_serde {
    use super::{rat_from_str, rat_to_string, Rat};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    /// Serializes a rational as `"num/den"`.
    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        rat_to_string(r).serialize(s)
    }

    /// Deserializes a rational from `"num/den"` or a bare integer string.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        rat_from_str(&s).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Simplicial maps
// ---------------------------------------------------------------------------

/// A simplicial map `s: I_m -> I_n` between finite linear graphs, stored as
/// its vertex value sequence `v_0..v_m`.
///
/// Invariants enforced at construction:
/// - every value lies in `0..=n`;
/// - adjacent values differ by at most one.
///
/// The break-point set (indices `i` where the step direction changes,
/// together with both endpoints `0` and `m`) and the surjectivity flag are
/// computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    codomain_size: usize,
    values: Vec<usize>,
    surjective: bool,
    break_points: Vec<usize>,
}

impl SimplicialMap {
    /// Validates and builds a simplicial map into `I_{codomain_size}`.
    pub fn build(codomain_size: usize, values: &[i64]) -> Result<Self, IntervalError> {
        if values.is_empty() {
            return Err(IntervalError::EmptyValues);
        }
        for (i, &v) in values.iter().enumerate() {
            if v < 0 || v > codomain_size as i64 {
                return Err(IntervalError::RangeViolation {
                    index: i,
                    value: v,
                    codomain_size,
                });
            }
        }
        for i in 0..values.len() - 1 {
            if (values[i + 1] - values[i]).abs() > 1 {
                return Err(IntervalError::StepViolation {
                    index: i,
                    from: values[i],
                    to: values[i + 1],
                });
            }
        }
        let values: Vec<usize> = values.iter().map(|&v| v as usize).collect();
        Ok(Self::from_checked(codomain_size, values))
    }

    /// Builds from values already known to satisfy the invariants.
    ///
    /// Used internally by combinators whose outputs are valid by
    /// construction; still recomputes the derived data.
    pub(crate) fn from_checked(codomain_size: usize, values: Vec<usize>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.iter().all(|&v| v <= codomain_size));
        debug_assert!((0..values.len() - 1)
            .all(|i| values[i].abs_diff(values[i + 1]) <= 1));
        let min = *values.iter().min().expect("non-empty");
        let max = *values.iter().max().expect("non-empty");
        // Step bound <= 1 makes the value set an integer interval, so
        // surjectivity reduces to hitting both endpoints.
        let surjective = min == 0 && max == codomain_size;
        let m = values.len() - 1;
        let mut break_points = vec![0];
        for i in 1..m {
            let before = values[i] as i64 - values[i - 1] as i64;
            let after = values[i + 1] as i64 - values[i] as i64;
            if after != before {
                break_points.push(i);
            }
        }
        if m > 0 {
            break_points.push(m);
        }
        Self {
            codomain_size,
            values,
            surjective,
            break_points,
        }
    }

    /// The identity map on `I_n`.
    pub fn identity(n: usize) -> Self {
        Self::from_checked(n, (0..=n).collect())
    }

    /// The reversal `r_m: I_m -> I_m`, `i -> m - i`.
    pub fn reversal(m: usize) -> Self {
        Self::from_checked(m, (0..=m).rev().collect())
    }

    /// The simplicial inclusion `e^n_{m,k}: I_m -> I_n`, `i -> i + k`.
    pub fn inclusion(n: usize, m: usize, k: usize) -> Result<Self, IntervalError> {
        if m + k > n {
            return Err(IntervalError::IncludeOutOfRange { m, k, n });
        }
        Ok(Self::from_checked(n, (k..=k + m).collect()))
    }

    /// The constant map `I_m -> I_n` with value `v`.
    pub fn constant(n: usize, m: usize, v: usize) -> Result<Self, IntervalError> {
        if v > n {
            return Err(IntervalError::RangeViolation {
                index: 0,
                value: v as i64,
                codomain_size: n,
            });
        }
        Ok(Self::from_checked(n, vec![v; m + 1]))
    }

    /// Codomain size `n` (the codomain is `I_n`).
    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    /// Domain size `m` (the domain is `I_m`; there are `m + 1` values).
    pub fn domain_size(&self) -> usize {
        self.values.len() - 1
    }

    /// The vertex value sequence `v_0..v_m`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Value at vertex `i`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i]
    }

    /// Whether the value set is all of `0..=n`.
    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    /// Break-point indices: both endpoints plus every vertex where the step
    /// direction changes.
    pub fn break_points(&self) -> &[usize] {
        &self.break_points
    }

    /// Concatenation `self ⌢ other`: the two maps share their adjacent
    /// endpoint vertex, which is not repeated.
    pub fn concat(&self, other: &Self) -> Result<Self, IntervalError> {
        if self.codomain_size != other.codomain_size {
            return Err(IntervalError::ConcatCodomainMismatch {
                left: self.codomain_size,
                right: other.codomain_size,
            });
        }
        let left_end = *self.values.last().expect("non-empty");
        let right_start = other.values[0];
        if left_end != right_start {
            return Err(IntervalError::ConcatMismatch {
                left_end: left_end as i64,
                right_start: right_start as i64,
            });
        }
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values[1..]);
        Ok(Self::from_checked(self.codomain_size, values))
    }

    /// Composition `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &Self) -> Result<Self, IntervalError> {
        if inner.codomain_size != self.domain_size() {
            return Err(IntervalError::DomainMismatch {
                expected: self.domain_size(),
                found: inner.codomain_size,
            });
        }
        let values: Vec<usize> = inner.values.iter().map(|&i| self.values[i]).collect();
        Ok(Self::from_checked(self.codomain_size, values))
    }

    /// The reversed map `self ∘ r_m` (vertex values read backwards).
    pub fn reversed(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self::from_checked(self.codomain_size, values)
    }

    /// Geometric realization: the piecewise-linear map determined by the
    /// break-points `i/m -> v_i/n`.
    ///
    /// Degenerate graphs realize as constants: a single-vertex domain gives
    /// the constant map at `v_0/n`, and the codomain `I_0` realizes to the
    /// constant-0 map on `[0,1]`.
    pub fn realize(&self) -> PLMap {
        let n = self.codomain_size;
        let m = self.domain_size();
        if n == 0 || m == 0 {
            let y = if n == 0 {
                Rat::zero()
            } else {
                Rat::new(BigInt::from(self.values[0]), BigInt::from(n))
            };
            return PLMap::constant(y).expect("constant in range");
        }
        let points: Vec<(Rat, Rat)> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (
                    Rat::new(BigInt::from(i), BigInt::from(m)),
                    Rat::new(BigInt::from(v), BigInt::from(n)),
                )
            })
            .collect();
        PLMap::new(points).expect("realization breakpoints are valid")
    }

    /// Serializes to the JSON object `{"codomain_size": n, "values": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "codomain_size": self.codomain_size,
            "values": self.values,
        })
    }

    /// Parses and validates from the JSON produced by [`Self::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Result<Self, IntervalError> {
        #[derive(Deserialize)]
        struct Repr {
            codomain_size: usize,
            values: Vec<i64>,
        }
        let repr: Repr = serde_json::from_value(v.clone())
            .map_err(|e| IntervalError::BadSerialization(e.to_string()))?;
        Self::build(repr.codomain_size, &repr.values)
    }

    /// Renders the vertex polyline as an SVG document in grid coordinates
    /// (vertex `i` at x = `i`, value `v_i` at y = `v_i`, y axis up).
    pub fn to_svg(&self) -> String {
        let m = self.domain_size();
        let n = self.codomain_size;
        let points: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| format!("{i},{v}"))
            .collect();
        format!(
            concat!(
                "<svg xmlns=\"http://www.w3.org/2000/svg\" ",
                "viewBox=\"-1 -1 {w} {h}\">\n",
                "  <g transform=\"translate(0,{n}) scale(1,-1)\">\n",
                "    <polyline fill=\"none\" stroke=\"black\" ",
                "stroke-width=\"0.1\" points=\"{pts}\"/>\n",
                "  </g>\n</svg>\n"
            ),
            w = m + 2,
            h = n + 2,
            n = n,
            pts = points.join(" ")
        )
    }
}

impl fmt::Display for SimplicialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I_{} -> I_{}: {:?}",
            self.domain_size(),
            self.codomain_size,
            self.values
        )
    }
}

// ---------------------------------------------------------------------------
// Shared piecewise-linear machinery (also used by circle lifts)
// ---------------------------------------------------------------------------

/// Merges collinear interior points; assumes `x` strictly increasing.
pub(crate) fn pl_canonicalize(points: &mut Vec<(Rat, Rat)>) {
    if points.len() < 3 {
        return;
    }
    let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(points.len());
    for p in points.drain(..) {
        while out.len() >= 2 {
            let a = &out[out.len() - 2];
            let b = &out[out.len() - 1];
            // b is redundant iff (a, b, p) are collinear:
            // (b.y - a.y) * (p.x - b.x) == (p.y - b.y) * (b.x - a.x)
            let lhs = (&b.1 - &a.1) * (&p.0 - &b.0);
            let rhs = (&p.1 - &b.1) * (&b.0 - &a.0);
            if lhs == rhs {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    *points = out;
}

/// Evaluates the piecewise-linear interpolant through `points` at `x`.
/// Assumes `points` non-empty with strictly increasing `x` covering `x`.
pub(crate) fn pl_eval(points: &[(Rat, Rat)], x: &Rat) -> Rat {
    debug_assert!(!points.is_empty());
    if *x <= points[0].0 {
        return points[0].1.clone();
    }
    if *x >= points[points.len() - 1].0 {
        return points[points.len() - 1].1.clone();
    }
    // Largest index with points[i].x <= x.
    let mut lo = 0usize;
    let mut hi = points.len() - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if points[mid].0 <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (x0, y0) = &points[lo];
    let (x1, y1) = &points[lo + 1];
    if x == x0 {
        return y0.clone();
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

/// Composes piecewise-linear interpolants: returns canonical points of
/// `outer ∘ inner`. Exact breakpoints are placed at the union of the inner
/// breakpoints and the inner-preimages of the outer breakpoints.
pub(crate) fn pl_compose(outer: &[(Rat, Rat)], inner: &[(Rat, Rat)]) -> Vec<(Rat, Rat)> {
    let mut xs: Vec<Rat> = inner.iter().map(|(x, _)| x.clone()).collect();
    for seg in inner.windows(2) {
        let (x0, y0) = &seg[0];
        let (x1, y1) = &seg[1];
        if y0 == y1 {
            continue;
        }
        let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
        for (by, _) in outer {
            if by > lo && by < hi {
                let x = x0 + (x1 - x0) * (by - y0) / (y1 - y0);
                xs.push(x);
            }
        }
    }
    xs.sort();
    xs.dedup();
    let mut points: Vec<(Rat, Rat)> = xs
        .into_iter()
        .map(|x| {
            let y = pl_eval(outer, &pl_eval(inner, &x));
            (x, y)
        })
        .collect();
    pl_canonicalize(&mut points);
    points
}

/// Exact supremum of `|f - g|` over the shared domain; attained at a
/// breakpoint of the merged breakpoint set since `f - g` is piecewise linear.
pub(crate) fn pl_sup_diff(f: &[(Rat, Rat)], g: &[(Rat, Rat)]) -> Rat {
    let mut xs: Vec<&Rat> = f.iter().chain(g.iter()).map(|(x, _)| x).collect();
    xs.sort();
    xs.dedup();
    xs.into_iter()
        .map(|x| (pl_eval(f, x) - pl_eval(g, x)).abs())
        .max()
        .unwrap_or_else(Rat::zero)
}

/// Maximum absolute segment slope (exact Lipschitz constant).
pub(crate) fn pl_lipschitz(points: &[(Rat, Rat)]) -> Rat {
    points
        .windows(2)
        .map(|seg| ((&seg[1].1 - &seg[0].1) / (&seg[1].0 - &seg[0].0)).abs())
        .max()
        .unwrap_or_else(Rat::zero)
}

// ---------------------------------------------------------------------------
// Piecewise-linear self-maps of [0,1]
// ---------------------------------------------------------------------------

/// An exact-rational piecewise-linear map `[0,1] -> [0,1]`, stored in
/// canonical form: breakpoints with strictly increasing `x`, first `x = 0`,
/// last `x = 1`, all values in `[0,1]`, and no collinear interior
/// breakpoints. Equality of `PLMap`s is equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLMap {
    points: Vec<(Rat, Rat)>,
}

impl PLMap {
    /// Validates, canonicalizes, and builds a piecewise-linear map.
    pub fn new(mut points: Vec<(Rat, Rat)>) -> Result<Self, IntervalError> {
        let bad = |msg: &str| IntervalError::BadBreakpoints(msg.to_string());
        if points.len() < 2 {
            return Err(bad("need at least two breakpoints"));
        }
        if !points[0].0.is_zero() {
            return Err(bad("first x must be 0"));
        }
        if !points[points.len() - 1].0.is_one() {
            return Err(bad("last x must be 1"));
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(bad("x coordinates must be strictly increasing"));
            }
        }
        for (_, y) in &points {
            if y.is_negative() || *y > Rat::one() {
                return Err(bad("values must lie in [0,1]"));
            }
        }
        pl_canonicalize(&mut points);
        Ok(Self { points })
    }

    /// Wraps points already in canonical form (internal fast path).
    pub(crate) fn from_canonical(points: Vec<(Rat, Rat)>) -> Self {
        debug_assert!(points.len() >= 2);
        Self { points }
    }

    /// The identity map on `[0,1]`.
    pub fn identity() -> Self {
        Self::from_canonical(vec![
            (Rat::zero(), Rat::zero()),
            (Rat::one(), Rat::one()),
        ])
    }

    /// The constant map with value `y`.
    pub fn constant(y: Rat) -> Result<Self, IntervalError> {
        Self::new(vec![(Rat::zero(), y.clone()), (Rat::one(), y)])
    }

    /// The tent map `x -> 1 - |2x - 1|`.
    pub fn tent() -> Self {
        Self::from_canonical(vec![
            (Rat::zero(), Rat::zero()),
            (rat(1, 2), Rat::one()),
            (Rat::one(), Rat::zero()),
        ])
    }

    /// The canonical breakpoints.
    pub fn points(&self) -> &[(Rat, Rat)] {
        &self.points
    }

    /// Evaluates the map at `x` (clamped to `[0,1]`).
    pub fn eval(&self, x: &Rat) -> Rat {
        pl_eval(&self.points, x)
    }

    /// Composition `self ∘ inner` (apply `inner` first); exact breakpoints.
    pub fn compose(&self, inner: &Self) -> Self {
        Self::from_canonical(pl_compose(&self.points, &inner.points))
    }

    /// Exact sup-metric distance: `sup_x |f(x) - g(x)|`.
    pub fn sup_dist(&self, other: &Self) -> Rat {
        pl_sup_diff(&self.points, &other.points)
    }

    /// Exact modulus of continuity via the Lipschitz constant.
    pub fn modulus(&self) -> Modulus {
        Modulus::from_lipschitz(pl_lipschitz(&self.points))
    }

    /// Whether the value set is all of `[0,1]` (continuity makes this
    /// equivalent to attaining both `0` and `1`).
    pub fn is_surjective(&self) -> bool {
        let min = self.points.iter().map(|(_, y)| y).min().expect("non-empty");
        let max = self.points.iter().map(|(_, y)| y).max().expect("non-empty");
        min.is_zero() && max.is_one()
    }

    /// Serializes as CSV rows `x_num/x_den,y_num/y_den`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (x, y) in &self.points {
            out.push_str(&rat_to_string(x));
            out.push(',');
            out.push_str(&rat_to_string(y));
            out.push('\n');
        }
        out
    }

    /// Parses the CSV form produced by [`Self::to_csv`].
    pub fn from_csv(s: &str) -> Result<Self, IntervalError> {
        let mut points = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (x, y) = line
                .split_once(',')
                .ok_or_else(|| IntervalError::BadSerialization(format!("bad CSV row {line:?}")))?;
            points.push((rat_from_str(x)?, rat_from_str(y)?));
        }
        Self::new(points)
    }

    /// Renders the graph as an SVG polyline scaled to a `scale x scale`
    /// viewport (y axis up). Coordinates are emitted as exact rationals via
    /// SVG's user units, using numerator/denominator division only when the
    /// breakpoint is not on the integer grid.
    pub fn to_svg(&self, scale: u32) -> String {
        let s = Rat::from_integer(BigInt::from(scale));
        let coord = |r: &Rat| -> String {
            let v = r * &s;
            if v.is_integer() {
                v.numer().to_string()
            } else {
                // Exact decimal is impossible in general; emit a high-precision
                // fixed-point value (12 digits) for rendering purposes only.
                let scaled = (&v * Rat::from_integer(BigInt::from(10u64.pow(12))))
                    .to_integer();
                let sgn = if scaled.is_negative() { "-" } else { "" };
                let abs = scaled.abs().to_string();
                let abs = format!("{:0>13}", abs);
                let (int, frac) = abs.split_at(abs.len() - 12);
                format!("{sgn}{int}.{frac}")
            }
        };
        let points: Vec<String> = self
            .points
            .iter()
            .map(|(x, y)| format!("{},{}", coord(x), coord(y)))
            .collect();
        format!(
            concat!(
                "<svg xmlns=\"http://www.w3.org/2000/svg\" ",
                "viewBox=\"0 0 {s} {s}\">\n",
                "  <g transform=\"translate(0,{s}) scale(1,-1)\">\n",
                "    <polyline fill=\"none\" stroke=\"black\" ",
                "stroke-width=\"1\" points=\"{pts}\"/>\n",
                "  </g>\n</svg>\n"
            ),
            s = scale,
            pts = points.join(" ")
        )
    }
}

// ---------------------------------------------------------------------------
// Moduli of continuity
// ---------------------------------------------------------------------------

/// An exact modulus of continuity for a piecewise-linear map, recorded as
/// its exact Lipschitz constant.
///
/// The guarantee: for every `eps > 0`, `|x - y| < delta(eps)` implies
/// `|f(x) - f(y)| < eps`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modulus {
    lipschitz: String,
}

impl Modulus {
    /// Builds the modulus from an exact Lipschitz constant.
    pub fn from_lipschitz(l: Rat) -> Self {
        debug_assert!(!l.is_negative());
        Self {
            lipschitz: rat_to_string(&l),
        }
    }

    /// The exact Lipschitz constant.
    pub fn lipschitz(&self) -> Rat {
        rat_from_str(&self.lipschitz).expect("stored canonically")
    }

    /// The witness `delta(eps)`: `eps / lipschitz`, capped at `1`; constant
    /// maps (Lipschitz 0) get the full cap.
    pub fn delta(&self, eps: &Rat) -> Rat {
        let l = self.lipschitz();
        if l.is_zero() {
            return Rat::one();
        }
        let d = eps / l;
        if d > Rat::one() {
            Rat::one()
        } else {
            d
        }
    }
}
