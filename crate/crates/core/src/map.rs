//! Map specifications: the individual contractions an IFS is built from.
//!
//! Each map carries an evaluator, an optional derivative oracle, a
//! contraction descriptor, and a write-once cached fixed point. Affine,
//! Möbius, piecewise-linear and planar-similarity maps get closed-form
//! fixed points and derivatives; custom maps fall back to iteration and
//! sampled difference quotients.

use std::fmt;
use std::sync::Arc;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::point::Point;

/// Iteration budget for fixed points of custom maps.
const FIXED_POINT_BUDGET: usize = 1_000_000;

/// Slack when comparing sampled Lipschitz quotients against a declared hint.
const LIPSCHITZ_SLACK: f64 = 1e-9;

/// A derivative of modulus within this band of 1 at a fixed point is treated
/// as parabolic: the map still contracts weakly but only polynomially fast.
const PARABOLIC_BAND: f64 = 1e-9;

pub type EvalFn = Arc<dyn Fn(Point) -> Point + Send + Sync>;
pub type DerivFn = Arc<dyn Fn(Point) -> f64 + Send + Sync>;

/// Concrete form of one map.
#[derive(Clone)]
pub enum MapForm {
    /// `x ↦ slope·x + offset` on an interval.
    Affine { slope: f64, offset: f64 },
    /// `x ↦ (a·x + b)/(c·x + d)` on an interval.
    Moebius { a: f64, b: f64, c: f64, d: f64 },
    /// Increasing piecewise-linear interpolant through `knots`
    /// (strictly increasing x, increasing y).
    PiecewiseLinear { knots: Vec<(f64, f64)> },
    /// Planar similarity `x ↦ ratio·x + offset`; derivative oracle returns
    /// the ratio (all operator norms of a similitude coincide).
    Similarity2 { ratio: f64, offset: [f64; 2] },
    /// Componentwise product of two 1-D maps; drives product-system
    /// attractors for solution graphs.
    Product(Box<MapSpec>, Box<MapSpec>),
    /// Opaque evaluator with optional derivative oracle.
    Custom {
        eval: EvalFn,
        derivative: Option<DerivFn>,
    },
}

impl fmt::Debug for MapForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapForm::Affine { slope, offset } => {
                write!(f, "Affine({slope}*x + {offset})")
            }
            MapForm::Moebius { a, b, c, d } => {
                write!(f, "Moebius(({a}x+{b})/({c}x+{d}))")
            }
            MapForm::PiecewiseLinear { knots } => {
                write!(f, "PiecewiseLinear({} knots)", knots.len())
            }
            MapForm::Similarity2 { ratio, offset } => {
                write!(f, "Similarity2({ratio}, {offset:?})")
            }
            MapForm::Product(a, b) => write!(f, "Product({:?}, {:?})", a.form, b.form),
            MapForm::Custom { .. } => write!(f, "Custom"),
        }
    }
}

/// One map of an IFS: form, contraction descriptor, cached fixed point.
#[derive(Clone, Debug)]
pub struct MapSpec {
    pub form: MapForm,
    /// Declared Lipschitz bound in (0,1], if known. When absent the
    /// contractivity check samples difference quotients (`ψ(t) < t` style),
    /// which admits parabolic maps.
    pub lipschitz_hint: Option<f64>,
    fixed_point: Arc<OnceLock<Point>>,
}

impl MapSpec {
    pub fn new(form: MapForm) -> Self {
        MapSpec {
            form,
            lipschitz_hint: None,
            fixed_point: Arc::new(OnceLock::new()),
        }
    }

    pub fn affine(slope: f64, offset: f64) -> Self {
        Self::new(MapForm::Affine { slope, offset })
    }

    pub fn moebius(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::new(MapForm::Moebius { a, b, c, d })
    }

    pub fn piecewise_linear(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::InvalidParameter(
                "piecewise-linear map needs at least two knots".into(),
            ));
        }
        for w in knots.windows(2) {
            if w[1].0 <= w[0].0 || w[1].1 < w[0].1 {
                return Err(Error::InvalidParameter(
                    "piecewise-linear knots must be increasing".into(),
                ));
            }
        }
        Ok(Self::new(MapForm::PiecewiseLinear { knots }))
    }

    pub fn similarity2(ratio: f64, offset: [f64; 2]) -> Self {
        Self::new(MapForm::Similarity2 { ratio, offset })
    }

    pub fn product(x: MapSpec, y: MapSpec) -> Self {
        Self::new(MapForm::Product(Box::new(x), Box::new(y)))
    }

    pub fn custom(eval: EvalFn, derivative: Option<DerivFn>) -> Self {
        Self::new(MapForm::Custom { eval, derivative })
    }

    pub fn with_lipschitz_hint(mut self, hint: f64) -> Self {
        self.lipschitz_hint = Some(hint);
        self
    }

    pub fn eval(&self, p: Point) -> Point {
        match &self.form {
            MapForm::Affine { slope, offset } => Point::scalar(slope * p.as_scalar() + offset),
            MapForm::Moebius { a, b, c, d } => {
                let x = p.as_scalar();
                Point::scalar((a * x + b) / (c * x + d))
            }
            MapForm::PiecewiseLinear { knots } => Point::scalar(pwl_eval(knots, p.as_scalar())),
            MapForm::Similarity2 { ratio, offset } => {
                let c = p.coords();
                Point::xy(ratio * c[0] + offset[0], ratio * c[1] + offset[1])
            }
            MapForm::Product(fx, fy) => {
                let c = p.coords();
                assert_eq!(c.len(), 2, "product map expects a 2-D point");
                Point::product(
                    fx.eval(Point::scalar(c[0])),
                    fy.eval(Point::scalar(c[1])),
                )
            }
            MapForm::Custom { eval, .. } => eval(p),
        }
    }

    /// Evaluate a 1-D map on a raw coordinate.
    pub fn eval1(&self, x: f64) -> f64 {
        self.eval(Point::scalar(x)).as_scalar()
    }

    /// Signed derivative for 1-D maps; contraction ratio for planar
    /// similarities. `None` when no oracle is available.
    pub fn derivative(&self, p: Point) -> Option<f64> {
        match &self.form {
            MapForm::Affine { slope, .. } => Some(*slope),
            MapForm::Moebius { a, b, c, d } => {
                let x = p.as_scalar();
                let den = c * x + d;
                Some((a * d - b * c) / (den * den))
            }
            MapForm::PiecewiseLinear { knots } => Some(pwl_slope(knots, p.as_scalar())),
            MapForm::Similarity2 { ratio, .. } => Some(*ratio),
            MapForm::Product(_, _) => None,
            MapForm::Custom { derivative, .. } => derivative.as_ref().map(|d| d(p)),
        }
    }

    /// Contraction ratio when the map is a similitude (affine 1-D or planar
    /// similarity); `None` otherwise. Dimension formulas need this.
    pub fn similitude_ratio(&self) -> Option<f64> {
        match &self.form {
            MapForm::Affine { slope, .. } => Some(slope.abs()),
            MapForm::Similarity2 { ratio, .. } => Some(ratio.abs()),
            _ => None,
        }
    }

    /// The map as a 2×2 Möbius matrix, when it is one (affine maps embed
    /// with c=0, d=1). Lets compositions of such maps collapse to a single
    /// matrix product, which keeps long-word evaluation O(1) per letter.
    pub fn moebius_matrix(&self) -> Option<[f64; 4]> {
        match &self.form {
            MapForm::Affine { slope, offset } => Some([*slope, *offset, 0.0, 1.0]),
            MapForm::Moebius { a, b, c, d } => Some([*a, *b, *c, *d]),
            _ => None,
        }
    }

    /// Unique fixed point, computed in closed form where the form allows and
    /// by iteration (budget 10⁶) otherwise. Cached write-once.
    ///
    /// `domain` brackets root selection for Möbius maps and seeds the
    /// iteration for custom maps.
    pub fn fixed_point(&self, domain_lo: Point, domain_hi: Point, tol: f64) -> Result<Point> {
        if let Some(p) = self.fixed_point.get() {
            return Ok(*p);
        }
        let p = self.compute_fixed_point(domain_lo, domain_hi, tol)?;
        let _ = self.fixed_point.set(p);
        Ok(*self.fixed_point.get().expect("fixed point just set"))
    }

    fn compute_fixed_point(&self, lo: Point, hi: Point, tol: f64) -> Result<Point> {
        match &self.form {
            MapForm::Affine { slope, offset } => {
                if (1.0 - slope).abs() < 1e-15 {
                    return Err(Error::NoConvergence(
                        "affine map with slope 1 has no unique fixed point".into(),
                    ));
                }
                Ok(Point::scalar(offset / (1.0 - slope)))
            }
            MapForm::Moebius { a, b, c, d } => {
                moebius_fixed_point(*a, *b, *c, *d, lo.as_scalar(), hi.as_scalar())
            }
            MapForm::PiecewiseLinear { knots } => pwl_fixed_point(knots),
            MapForm::Similarity2 { ratio, offset } => {
                if (1.0 - ratio).abs() < 1e-15 {
                    return Err(Error::NoConvergence(
                        "similarity with ratio 1 has no unique fixed point".into(),
                    ));
                }
                Ok(Point::xy(
                    offset[0] / (1.0 - ratio),
                    offset[1] / (1.0 - ratio),
                ))
            }
            MapForm::Product(fx, fy) => {
                let px = fx.compute_fixed_point(
                    Point::scalar(lo.coords()[0]),
                    Point::scalar(hi.coords()[0]),
                    tol,
                )?;
                let py = fy.compute_fixed_point(
                    Point::scalar(lo.coords()[1]),
                    Point::scalar(hi.coords()[1]),
                    tol,
                )?;
                Ok(Point::product(px, py))
            }
            MapForm::Custom { eval, .. } => {
                // Picard iteration from the domain midpoint; a weak
                // contraction converges, possibly slowly near a parabolic
                // fixed point, hence the large budget.
                let mut x = midpoint(lo, hi);
                for _ in 0..FIXED_POINT_BUDGET {
                    let fx = eval(x);
                    if fx.dist(&x) <= tol {
                        return Ok(fx);
                    }
                    x = fx;
                }
                Err(Error::NoConvergence(format!(
                    "fixed-point iteration exhausted budget {FIXED_POINT_BUDGET}"
                )))
            }
        }
    }

    /// Exact supremum of |derivative| over `[lo, hi]` for closed forms;
    /// `None` for custom maps (callers fall back to sampling).
    pub fn lipschitz_on_interval(&self, lo: f64, hi: f64) -> Option<f64> {
        match &self.form {
            MapForm::Affine { slope, .. } => Some(slope.abs()),
            MapForm::Moebius { a, b, c, d } => {
                // |Φ'| = |ad-bc|/(cx+d)² is monotone on any pole-free
                // interval, so the sup sits at an endpoint.
                let det = (a * d - b * c).abs();
                let de_lo = c * lo + d;
                let de_hi = c * hi + d;
                if de_lo == 0.0 || de_hi == 0.0 || (de_lo < 0.0) != (de_hi < 0.0) {
                    return None; // pole inside the interval
                }
                Some((det / (de_lo * de_lo)).max(det / (de_hi * de_hi)))
            }
            MapForm::PiecewiseLinear { knots } => knots
                .windows(2)
                .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
                .fold(None, |acc, s| Some(acc.map_or(s, |a: f64| a.max(s)))),
            MapForm::Similarity2 { ratio, .. } => Some(ratio.abs()),
            _ => None,
        }
    }

    /// Weak-contractivity check on `[lo, hi]` (or a planar box for 2-D
    /// maps). Uses the exact Lipschitz constant where available: strict
    /// contraction passes, and a Möbius map with |Φ'| = 1 at one endpoint
    /// only (parabolic) passes as well. Custom maps are checked by sampled
    /// difference quotients on ~10³ pairs.
    pub fn is_weakly_contractive(&self, lo: Point, hi: Point) -> bool {
        if let Some(hint) = self.lipschitz_hint {
            if hint < 1.0 {
                return self.sampled_quotients_below(lo, hi, hint + LIPSCHITZ_SLACK);
            }
        }
        match &self.form {
            MapForm::Affine { slope, .. } => slope.abs() < 1.0,
            MapForm::Moebius { a, b, c, d } => {
                let (l, h) = (lo.as_scalar(), hi.as_scalar());
                let det = (a * d - b * c).abs();
                let d_at = |x: f64| {
                    let den = c * x + d;
                    det / (den * den)
                };
                let (s_lo, s_hi) = (d_at(l), d_at(h));
                let sup = s_lo.max(s_hi);
                let inf = s_lo.min(s_hi);
                // strict contraction, or derivative exactly 1 at a single
                // endpoint with genuine contraction elsewhere
                sup < 1.0 || (sup <= 1.0 + PARABOLIC_BAND && inf < 1.0 - PARABOLIC_BAND)
            }
            MapForm::PiecewiseLinear { knots } => knots
                .windows(2)
                .all(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0) < 1.0),
            MapForm::Similarity2 { ratio, .. } => ratio.abs() < 1.0,
            MapForm::Product(fx, fy) => {
                let (lc, hc) = (lo.coords(), hi.coords());
                fx.is_weakly_contractive(Point::scalar(lc[0]), Point::scalar(hc[0]))
                    && fy.is_weakly_contractive(Point::scalar(lc[1]), Point::scalar(hc[1]))
            }
            MapForm::Custom { .. } => self.sampled_quotients_below(lo, hi, 1.0 + LIPSCHITZ_SLACK),
        }
    }

    /// Check `d(f(x), f(y)) ≤ bound · d(x, y)` over a deterministic grid of
    /// point pairs (~10³).
    fn sampled_quotients_below(&self, lo: Point, hi: Point, bound: f64) -> bool {
        let grid = self.sample_grid(lo, hi, 33);
        for (i, &p) in grid.iter().enumerate() {
            for &q in &grid[i + 1..] {
                let dxy = p.dist(&q);
                if dxy == 0.0 {
                    continue;
                }
                let dfxy = self.eval(p).dist(&self.eval(q));
                if dfxy > bound * dxy {
                    return false;
                }
            }
        }
        true
    }

    fn sample_grid(&self, lo: Point, hi: Point, n: usize) -> Vec<Point> {
        match lo.dim() {
            1 => {
                let (l, h) = (lo.as_scalar(), hi.as_scalar());
                (0..n)
                    .map(|k| Point::scalar(l + (h - l) * k as f64 / (n - 1) as f64))
                    .collect()
            }
            2 => {
                let (lc, hc) = (lo.coords().to_vec(), hi.coords().to_vec());
                let side = 7;
                let mut pts = Vec::with_capacity(side * side);
                for i in 0..side {
                    for j in 0..side {
                        pts.push(Point::xy(
                            lc[0] + (hc[0] - lc[0]) * i as f64 / (side - 1) as f64,
                            lc[1] + (hc[1] - lc[1]) * j as f64 / (side - 1) as f64,
                        ));
                    }
                }
                pts
            }
            d => panic!("sample grid for dimension {d}"),
        }
    }

    /// Whether the derivative modulus is within `PARABOLIC_BAND` of 1 at the
    /// map's own fixed point; such maps contract word images only
    /// polynomially and need raised burn-in / depth budgets.
    pub fn is_parabolic(&self, lo: Point, hi: Point) -> bool {
        let Ok(fix) = self.fixed_point(lo, hi, 1e-12) else {
            return false;
        };
        match self.derivative(fix) {
            Some(d) => (d.abs() - 1.0).abs() <= PARABOLIC_BAND,
            None => false,
        }
    }

    /// Leftmost preimage of `y` on `[lo, hi]` for an increasing 1-D map.
    /// Closed form for affine/Möbius/piecewise-linear; bisection at `tol`
    /// otherwise (the map need not be injective; the infimum solution is
    /// returned).
    pub fn preimage_increasing(&self, y: f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
        match &self.form {
            MapForm::Affine { slope, offset } => {
                if *slope == 0.0 {
                    return Err(Error::DomainError("constant map has no preimage".into()));
                }
                Ok((y - offset) / slope)
            }
            MapForm::Moebius { a, b, c, d } => {
                // y = (ax+b)/(cx+d)  ⇒  x = (d·y - b)/(a - c·y)
                let den = a - c * y;
                if den == 0.0 {
                    return Err(Error::DomainError("Möbius preimage at pole".into()));
                }
                Ok((d * y - b) / den)
            }
            MapForm::PiecewiseLinear { knots } => pwl_preimage(knots, y),
            _ => {
                // leftmost x with f(x) >= y, then verify f(x) = y
                let mut a = lo;
                let mut c = hi;
                if self.eval1(a) >= y {
                    return Ok(a);
                }
                if self.eval1(c) < y {
                    return Err(Error::DomainError(format!(
                        "preimage of {y} outside map range"
                    )));
                }
                for _ in 0..200 {
                    if c - a <= tol * 0.25 {
                        break;
                    }
                    let m = 0.5 * (a + c);
                    if self.eval1(m) >= y {
                        c = m;
                    } else {
                        a = m;
                    }
                }
                if c - a > tol * 0.25 {
                    return Err(Error::NoConvergence(
                        "bisection for map preimage stalled".into(),
                    ));
                }
                Ok(c)
            }
        }
    }
}

fn midpoint(lo: Point, hi: Point) -> Point {
    match lo.dim() {
        1 => Point::scalar(0.5 * (lo.as_scalar() + hi.as_scalar())),
        2 => Point::xy(
            0.5 * (lo.coords()[0] + hi.coords()[0]),
            0.5 * (lo.coords()[1] + hi.coords()[1]),
        ),
        d => panic!("midpoint for dimension {d}"),
    }
}

fn pwl_eval(knots: &[(f64, f64)], x: f64) -> f64 {
    let first = knots[0];
    let last = knots[knots.len() - 1];
    if x <= first.0 {
        return first.1 + pwl_slope(knots, first.0) * (x - first.0);
    }
    if x >= last.0 {
        return last.1 + pwl_slope(knots, last.0) * (x - last.0);
    }
    for w in knots.windows(2) {
        if x <= w[1].0 {
            let t = (x - w[0].0) / (w[1].0 - w[0].0);
            return w[0].1 + t * (w[1].1 - w[0].1);
        }
    }
    last.1
}

fn pwl_slope(knots: &[(f64, f64)], x: f64) -> f64 {
    let seg = knots
        .windows(2)
        .find(|w| x < w[1].0)
        .unwrap_or(&knots[knots.len() - 2..]);
    (seg[1].1 - seg[0].1) / (seg[1].0 - seg[0].0)
}

fn pwl_preimage(knots: &[(f64, f64)], y: f64) -> Result<f64> {
    if y < knots[0].1 || y > knots[knots.len() - 1].1 {
        return Err(Error::DomainError(format!(
            "preimage of {y} outside piecewise-linear range"
        )));
    }
    for w in knots.windows(2) {
        if y <= w[1].1 {
            let dy = w[1].1 - w[0].1;
            if dy == 0.0 {
                return Ok(w[0].0); // flat segment: leftmost preimage
            }
            return Ok(w[0].0 + (y - w[0].1) / dy * (w[1].0 - w[0].0));
        }
    }
    Ok(knots[knots.len() - 1].0)
}

fn pwl_fixed_point(knots: &[(f64, f64)]) -> Result<Point> {
    // scan segments for a crossing of the identity line
    for w in knots.windows(2) {
        let m = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
        if (1.0 - m).abs() < 1e-15 {
            continue;
        }
        let x = (w[0].1 - m * w[0].0) / (1.0 - m);
        if x >= w[0].0 - 1e-12 && x <= w[1].0 + 1e-12 {
            return Ok(Point::scalar(x));
        }
    }
    // extrapolated ends
    let m0 = (knots[1].1 - knots[0].1) / (knots[1].0 - knots[0].0);
    let x0 = (knots[0].1 - m0 * knots[0].0) / (1.0 - m0);
    if x0 <= knots[0].0 {
        return Ok(Point::scalar(x0));
    }
    let k = knots.len() - 1;
    let m1 = (knots[k].1 - knots[k - 1].1) / (knots[k].0 - knots[k - 1].0);
    let x1 = (knots[k].1 - m1 * knots[k].0) / (1.0 - m1);
    if x1 >= knots[k].0 {
        return Ok(Point::scalar(x1));
    }
    Err(Error::NoConvergence(
        "piecewise-linear map has no identity crossing".into(),
    ))
}

/// Fixed point of a Möbius map on `[lo, hi]`: the root of
/// `c·x² + (d-a)·x - b = 0` inside the interval. With two admissible roots
/// the attracting one (|Φ'| ≤ 1) wins; a double root covers the parabolic
/// case exactly.
fn moebius_fixed_point(a: f64, b: f64, c: f64, d: f64, lo: f64, hi: f64) -> Result<Point> {
    let tol_in = 1e-9 * (1.0 + hi.abs().max(lo.abs()));
    if c.abs() < 1e-300 {
        // affine: x = b/(d-a) after dividing through by d
        if (d - a).abs() < 1e-300 {
            return Err(Error::NoConvergence("Möbius map is the identity".into()));
        }
        return Ok(Point::scalar(b / (d - a)));
    }
    let disc = (d - a) * (d - a) + 4.0 * c * b;
    if disc < 0.0 {
        return Err(Error::NoConvergence(
            "Möbius map has no real fixed point".into(),
        ));
    }
    let sq = disc.sqrt();
    let r1 = ((a - d) + sq) / (2.0 * c);
    let r2 = ((a - d) - sq) / (2.0 * c);
    let deriv = |x: f64| {
        let den = c * x + d;
        ((a * d - b * c) / (den * den)).abs()
    };
    let inside = |x: f64| x >= lo - tol_in && x <= hi + tol_in;
    let clamp = |x: f64| x.clamp(lo, hi);
    match (inside(r1), inside(r2)) {
        (true, false) => Ok(Point::scalar(clamp(r1))),
        (false, true) => Ok(Point::scalar(clamp(r2))),
        (true, true) => {
            if (r1 - r2).abs() <= tol_in {
                return Ok(Point::scalar(clamp(0.5 * (r1 + r2))));
            }
            let (d1, d2) = (deriv(r1), deriv(r2));
            if d1 <= d2 {
                Ok(Point::scalar(clamp(r1)))
            } else {
                Ok(Point::scalar(clamp(r2)))
            }
        }
        (false, false) => Err(Error::NoConvergence(format!(
            "Möbius fixed points {r1}, {r2} outside [{lo}, {hi}]"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> (Point, Point) {
        (Point::scalar(0.0), Point::scalar(1.0))
    }

    #[test]
    fn affine_fixed_point_at_origin() {
        let f = MapSpec::affine(0.5, 0.0);
        let (lo, hi) = unit();
        assert_eq!(f.fixed_point(lo, hi, 1e-12).unwrap().as_scalar(), 0.0);
    }

    #[test]
    fn moebius_double_root_fixed_point() {
        // g(y) = 1/(2-y): double root at 1, parabolic
        let g = MapSpec::moebius(0.0, 1.0, -1.0, 2.0);
        let (lo, hi) = unit();
        let fix = g.fixed_point(lo, hi, 1e-12).unwrap().as_scalar();
        assert!((fix - 1.0).abs() <= 1e-12);
        assert!(g.is_parabolic(lo, hi));
        assert!(g.is_weakly_contractive(lo, hi));
    }

    #[test]
    fn moebius_zero_fixed_point() {
        // g(y) = y/(y+1): fixed point 0, parabolic there
        let g = MapSpec::moebius(1.0, 0.0, 1.0, 1.0);
        let (lo, hi) = unit();
        assert_eq!(g.fixed_point(lo, hi, 1e-12).unwrap().as_scalar(), 0.0);
        assert!(g.is_parabolic(lo, hi));
    }

    #[test]
    fn custom_fixed_point_by_iteration() {
        let f = MapSpec::custom(
            Arc::new(|p: Point| Point::scalar(0.5 * p.as_scalar() + 0.25)),
            None,
        );
        let (lo, hi) = unit();
        let fix = f.fixed_point(lo, hi, 1e-12).unwrap().as_scalar();
        assert!((fix - 0.5).abs() <= 1e-10);
    }

    #[test]
    fn fixed_point_cache_is_warm_start_invariant() {
        // same closed form regardless of bracket used later
        let f = MapSpec::affine(0.25, 0.75);
        let (lo, hi) = unit();
        let p1 = f.fixed_point(lo, hi, 1e-12).unwrap();
        let p2 = f
            .fixed_point(Point::scalar(0.9), Point::scalar(1.0), 1e-3)
            .unwrap();
        assert_eq!(p1, p2);
        assert_eq!(p1.as_scalar(), 1.0);
    }

    #[test]
    fn similarity_fixed_point_is_corner() {
        let f = MapSpec::similarity2(0.5, [0.0, 0.0]);
        let fix = f
            .fixed_point(Point::xy(0.0, 0.0), Point::xy(1.0, 1.0), 1e-12)
            .unwrap();
        assert_eq!(fix, Point::xy(0.0, 0.0));
    }

    #[test]
    fn expanding_map_fails_contractivity() {
        let f = MapSpec::affine(1.2, 0.0);
        let (lo, hi) = unit();
        assert!(!f.is_weakly_contractive(lo, hi));
    }

    #[test]
    fn pwl_eval_preimage_roundtrip() {
        let g = MapSpec::piecewise_linear(vec![(0.0, 0.0), (0.5, 0.2), (1.0, 0.7)]).unwrap();
        for &x in &[0.1, 0.5, 0.8] {
            let y = g.eval1(x);
            let back = g.preimage_increasing(y, 0.0, 1.0, 1e-12).unwrap();
            assert!((back - x).abs() < 1e-12);
        }
    }

    #[test]
    fn moebius_preimage_closed_form() {
        // f(x) = x/(x+1), preimage of 1/3 is 1/2
        let f = MapSpec::moebius(1.0, 0.0, 1.0, 1.0);
        let x = f.preimage_increasing(1.0 / 3.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((x - 0.5).abs() < 1e-12);
    }
}
