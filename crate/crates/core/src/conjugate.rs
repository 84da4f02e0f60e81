//! Conjugate systems: a pair of IFS families linked by the equation
//! `φ(f_i(x)) = g_i(φ(x))`, with compatibility validation, address coding
//! of points, and certified-error evaluation of the solution.
//!
//! Evaluation follows the constructive uniqueness argument: the coding of
//! `x` is extended until the corresponding g-word image of the solution
//! carrier has diameter below the tolerance; its midpoint is returned with
//! half the diameter as a two-sided error bound. Word endpoints terminate
//! at a declared boundary corner and are evaluated exactly.

use crate::error::{Error, Result};
use crate::ifs::{barycentric, Domain, IfSystem, ENUMERATION_CAP};
use crate::map::MapForm;
use crate::point::{dedup_points, Point};
use crate::word::Word;

/// Depth cap before `DepthExceeded`. Möbius g-maps with parabolic fixed
/// points shrink word images only polynomially, so the cap is large but
/// bounded.
pub const DEPTH_CAP: usize = 10_000;

/// Slack for cell-containment tests during coding: wide enough to absorb
/// rounding in the computed cell boundaries, narrow enough that points a
/// coding step genuinely distinguishes are never merged. Corner hits are
/// matched exactly — an absolute snap would silently move inputs across
/// regions where parabolic solutions have only logarithmic modulus of
/// continuity.
const CELL_SLACK: f64 = 1e-14;

/// After the enclosure meets the tolerance, coding continues this many
/// steps hunting for a boundary corner or exact floating-point
/// convergence. Word endpoints then evaluate exactly, which is what keeps
/// compositions like the question-mark inversion sharp: near a dyadic
/// rational the inverse function's modulus of continuity is only
/// logarithmic, so no polynomial tolerance on the forward value would do.
const CORNER_LOOKAHEAD: usize = 256;

/// Propagation depth for overlap contradiction search.
pub const VALIDATE_PROPAGATION_DEPTH: usize = 12;

/// Samples drawn per overlap region during validation.
const OVERLAP_SAMPLES: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// Increasing maps on an interval; endpoints are the contact set when
    /// the cells chain.
    MonotoneInterval,
    /// Planar gasket carrier on the X side, interval on the Y side.
    Gasket,
    Generic,
}

/// Required solution value at a boundary corner (a fixed point of the
/// X-side map with the matching index).
#[derive(Clone, Debug)]
pub struct BoundaryValue {
    pub corner: usize,
    pub x: Point,
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct ConjugateSystem {
    name: String,
    kind: SystemKind,
    x_side: IfSystem,
    y_side: IfSystem,
    boundary: Vec<BoundaryValue>,
    parabolic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatStatus {
    Compatible,
    Incompatible,
    Undecided,
}

/// A located contradiction: two forced solution values at the same point.
#[derive(Clone, Debug)]
pub struct Witness {
    pub location: Point,
    pub left: f64,
    pub right: f64,
    pub discrepancy: f64,
}

#[derive(Clone, Debug)]
pub struct CompatibilityReport {
    pub status: CompatStatus,
    pub witnesses: Vec<Witness>,
    pub checks_run: Vec<String>,
}

/// Result of coding a point: the word descended through, the residual
/// point, and the boundary corner hit (if any).
#[derive(Clone, Debug)]
pub struct CodedPoint {
    pub word: Word,
    pub residual: Point,
    pub corner: Option<usize>,
}

/// One row of an evaluation grid.
#[derive(Clone, Debug)]
pub struct GridRow {
    pub x: Point,
    pub y: f64,
    pub err_bound: f64,
}

enum Step {
    Corner(usize),
    Descend(usize, Point),
}

impl ConjugateSystem {
    /// Build a system; boundary values default to `φ₀(fix f_i) = fix g_i`
    /// at the kind's corner indices (interval: first and last map, gasket:
    /// all three).
    pub fn new(
        name: impl Into<String>,
        kind: SystemKind,
        x_side: IfSystem,
        y_side: IfSystem,
    ) -> Result<Self> {
        if x_side.len() != y_side.len() {
            return Err(Error::InvalidParameter(format!(
                "side map counts differ: {} vs {}",
                x_side.len(),
                y_side.len()
            )));
        }
        let n = x_side.len();
        let corner_indices: Vec<usize> = match kind {
            SystemKind::MonotoneInterval => vec![0, n - 1],
            SystemKind::Gasket | SystemKind::Generic => (0..n).collect(),
        };
        let mut boundary = Vec::new();
        for i in corner_indices {
            let x = x_side.fixed_point(i)?;
            let value = y_side.fixed_point(i)?.as_scalar();
            boundary.push(BoundaryValue { corner: i, x, value });
        }
        let parabolic = x_side.has_parabolic_map() || y_side.has_parabolic_map();
        Ok(ConjugateSystem {
            name: name.into(),
            kind,
            x_side,
            y_side,
            boundary,
            parabolic,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn x_side(&self) -> &IfSystem {
        &self.x_side
    }

    pub fn y_side(&self) -> &IfSystem {
        &self.y_side
    }

    pub fn boundary(&self) -> &[BoundaryValue] {
        &self.boundary
    }

    /// Whether any map has a parabolic fixed point; callers should raise
    /// chaos-game burn-in for such systems.
    pub fn is_parabolic(&self) -> bool {
        self.parabolic
    }

    /// Chaos-game burn-in appropriate for this system: parabolic maps mix
    /// only polynomially near their fixed points.
    pub fn recommended_burn_in(&self) -> usize {
        if self.parabolic {
            1000
        } else {
            100
        }
    }

    fn boundary_value(&self, corner: usize) -> Result<&BoundaryValue> {
        self.boundary
            .iter()
            .find(|b| b.corner == corner)
            .ok_or(Error::MissingBoundary(corner))
    }

    fn cell_slack(&self) -> f64 {
        let (lo, hi) = self.x_side.domain().bounds();
        CELL_SLACK * (1.0 + lo.dist(&hi))
    }

    /// Carrier of the solution values: the Y-side domain interval.
    fn y_carrier(&self) -> Result<(f64, f64)> {
        self.y_side
            .domain()
            .interval_bounds()
            .ok_or_else(|| Error::DomainError("Y side must be an interval".into()))
    }

    // ------------------------------------------------------------------
    // coding
    // ------------------------------------------------------------------

    fn code_step(&self, x: &Point, prefer_high: bool, tol: f64) -> Result<Step> {
        for b in &self.boundary {
            if x.dist(&b.x) == 0.0 {
                return Ok(Step::Corner(b.corner));
            }
        }
        let slack = self.cell_slack();
        match self.kind {
            SystemKind::MonotoneInterval | SystemKind::Generic => {
                let (lo, hi) = self
                    .x_side
                    .domain()
                    .interval_bounds()
                    .ok_or_else(|| Error::DomainError("coding needs an interval domain".into()))?;
                let xv = x.as_scalar();
                let n = self.x_side.len();
                let pick = |range: Box<dyn Iterator<Item = usize>>| -> Option<usize> {
                    let mut it = range;
                    it.find(|&i| {
                        let a = self.x_side.map(i).eval1(lo);
                        let b = self.x_side.map(i).eval1(hi);
                        xv >= a - slack && xv <= b + slack
                    })
                };
                let i = if prefer_high {
                    pick(Box::new((0..n).rev()))
                } else {
                    pick(Box::new(0..n))
                }
                .ok_or_else(|| {
                    Error::DomainError(format!("point {xv} not covered by any cell"))
                })?;
                let residual = self
                    .x_side
                    .map(i)
                    .preimage_increasing(xv, lo, hi, tol)?
                    .clamp(lo, hi);
                Ok(Step::Descend(i, Point::scalar(residual)))
            }
            SystemKind::Gasket => {
                let corners = match self.x_side.domain() {
                    Domain::Gasket { corners } => corners,
                    _ => {
                        return Err(Error::DomainError(
                            "gasket coding needs a gasket domain".into(),
                        ))
                    }
                };
                let lam = barycentric(corners, x);
                // nearest subtriangle: the corner with barycentric weight
                // >= 1/2; lowest index wins on edges
                let mut best: Option<usize> = None;
                for i in 0..3 {
                    if lam[i] >= 0.5 - slack {
                        best = Some(i);
                        break;
                    }
                }
                let i = best.ok_or_else(|| {
                    Error::DomainError("point lies in the gasket's central hole".into())
                })?;
                let residual = match &self.x_side.map(i).form {
                    MapForm::Similarity2 { ratio, offset } => Point::xy(
                        (x.coords()[0] - offset[0]) / ratio,
                        (x.coords()[1] - offset[1]) / ratio,
                    ),
                    _ => {
                        return Err(Error::DomainError(
                            "gasket maps must be planar similarities".into(),
                        ))
                    }
                };
                Ok(Step::Descend(i, residual))
            }
        }
    }

    /// Address a point: descend through subcells until `depth` letters are
    /// fixed or a boundary corner is hit. Ties at contact points take the
    /// lowest index.
    pub fn code_point(&self, x: Point, depth: usize, tol: f64) -> Result<CodedPoint> {
        if !self.x_side.domain().contains(&x, self.cell_slack()) {
            return Err(Error::DomainError(format!("{x:?} outside the domain")));
        }
        let mut word = Word::empty();
        let mut p = x;
        for _ in 0..depth {
            match self.code_step(&p, false, tol)? {
                Step::Corner(c) => {
                    return Ok(CodedPoint {
                        word,
                        residual: self.boundary_value(c)?.x,
                        corner: Some(c),
                    })
                }
                Step::Descend(i, r) => {
                    word.push(i);
                    p = r;
                }
            }
        }
        let corner = self
            .boundary
            .iter()
            .find(|b| p.dist(&b.x) == 0.0)
            .map(|b| b.corner);
        Ok(CodedPoint {
            word,
            residual: p,
            corner,
        })
    }

    // ------------------------------------------------------------------
    // evaluation
    // ------------------------------------------------------------------

    /// Exact solution value at the X-point `f_w(fix f_corner)`: the g-word
    /// applied to the declared boundary value, with no tolerance loss.
    pub fn evaluate_word(&self, w: &Word, corner: usize) -> Result<f64> {
        let v = self.boundary_value(corner)?.value;
        Ok(self.y_side.apply_word(w, Point::scalar(v)).as_scalar())
    }

    /// Evaluate the solution at `x` with a certified two-sided error bound:
    /// returns `(y, err_bound)` with `err_bound ≤ tol` on success.
    pub fn evaluate(&self, x: Point, tol: f64) -> Result<(f64, f64)> {
        if !self.x_side.domain().contains(&x, self.cell_slack()) {
            return Err(Error::DomainError(format!("{x:?} outside the domain")));
        }
        let (ylo, yhi) = self.y_carrier()?;
        // fast path: compose affine/Möbius g-maps as one 2x2 matrix
        let all_moebius = self
            .y_side
            .maps()
            .iter()
            .all(|m| m.moebius_matrix().is_some());
        let mut matrix = [1.0, 0.0, 0.0, 1.0];
        let mut letters: Vec<usize> = Vec::new();
        let mut p = x;
        let mut best = {
            let d = 0.5 * (yhi - ylo);
            (0.5 * (ylo + yhi), d)
        };
        let mut check_at = 32usize;
        let mut steps_past_tol = 0usize;
        for step in 1..=DEPTH_CAP {
            match self.code_step(&p, false, tol)? {
                Step::Corner(c) => {
                    let v = self.boundary_value(c)?.value;
                    let y = if all_moebius {
                        moebius_apply(&matrix, v)
                    } else {
                        fold_word(&self.y_side, &letters, v)
                    };
                    return Ok((y, 0.0));
                }
                Step::Descend(i, r) => {
                    p = r;
                    if all_moebius {
                        let m = self.y_side.map(i).moebius_matrix().expect("möbius form");
                        matrix = moebius_compose(&matrix, &m);
                    } else {
                        letters.push(i);
                    }
                }
            }
            let enclosure = if all_moebius {
                let e0 = moebius_apply(&matrix, ylo);
                let e1 = moebius_apply(&matrix, yhi);
                Some((e0.min(e1), e0.max(e1)))
            } else if step >= check_at || step == DEPTH_CAP {
                check_at = check_at.saturating_mul(2);
                let e0 = fold_word(&self.y_side, &letters, ylo);
                let e1 = fold_word(&self.y_side, &letters, yhi);
                Some((e0.min(e1), e0.max(e1)))
            } else {
                None
            };
            if let Some((lo, hi)) = enclosure {
                let mid = 0.5 * (lo + hi);
                let half = 0.5 * (hi - lo);
                if half < best.1 {
                    best = (mid, half);
                }
                // the enclosure collapsed to a point in f64: done
                if half == 0.0 {
                    return Ok(best);
                }
            }
            if best.1 <= tol {
                steps_past_tol += 1;
                if steps_past_tol >= CORNER_LOOKAHEAD {
                    return Ok(best);
                }
            }
        }
        if best.1 <= tol {
            return Ok(best);
        }
        Err(Error::DepthExceeded {
            value: best.0,
            err_bound: best.1,
            depth: DEPTH_CAP,
        })
    }

    /// Solution values at every depth-`depth` word endpoint, exact via
    /// [`evaluate_word`]. Rows are sorted by `x` and deduplicated; shared
    /// endpoints of adjacent cells agree by compatibility.
    pub fn evaluate_grid(&self, depth: usize, _tol: f64) -> Result<Vec<GridRow>> {
        let n = self.x_side.len() as u128;
        let needed = n.saturating_pow(depth as u32) * self.boundary.len() as u128;
        if needed > ENUMERATION_CAP {
            return Err(Error::BudgetExceeded {
                what: "grid enumeration",
                needed,
                cap: ENUMERATION_CAP,
            });
        }
        let mut rows: Vec<GridRow> = Vec::new();
        let mut word = vec![0usize; depth];
        loop {
            let w = Word::from(word.clone());
            for b in &self.boundary {
                let x = self.x_side.apply_word(&w, b.x);
                let y = self.evaluate_word(&w, b.corner)?;
                rows.push(GridRow {
                    x,
                    y,
                    err_bound: 0.0,
                });
            }
            // odometer over words
            let mut k = depth;
            loop {
                if k == 0 {
                    let mut pts: Vec<(Point, f64)> = rows.iter().map(|r| (r.x, r.y)).collect();
                    pts.sort_by(|a, b| {
                        a.0.coords()
                            .partial_cmp(b.0.coords())
                            .expect("finite grid points")
                    });
                    let mut dedup: Vec<GridRow> = Vec::with_capacity(pts.len());
                    for (x, y) in pts {
                        if dedup
                            .last()
                            .map_or(true, |r: &GridRow| r.x.dist(&x) > 1e-12)
                        {
                            dedup.push(GridRow {
                                x,
                                y,
                                err_bound: 0.0,
                            });
                        }
                    }
                    return Ok(dedup);
                }
                k -= 1;
                word[k] += 1;
                if word[k] < self.x_side.len() {
                    break;
                }
                word[k] = 0;
            }
        }
    }

    /// Product IFS `h_i(x, y) = (f_i(x), g_i(y))` on the X×Y box; the
    /// solution graph is its attractor.
    pub fn product_system(&self) -> Result<IfSystem> {
        let (xlo, xhi) = self
            .x_side
            .domain()
            .interval_bounds()
            .ok_or_else(|| Error::DomainError("product system needs a 1-D X side".into()))?;
        let (ylo, yhi) = self.y_carrier()?;
        let maps = self
            .x_side
            .maps()
            .iter()
            .zip(self.y_side.maps())
            .map(|(f, g)| crate::map::MapSpec::product(f.clone(), g.clone()))
            .collect();
        IfSystem::new(
            format!("{}-product", self.name),
            Domain::Box2 {
                lo: [xlo, ylo],
                hi: [xhi, yhi],
            },
            maps,
        )
    }

    // ------------------------------------------------------------------
    // validation
    // ------------------------------------------------------------------

    /// Run the kind-appropriate compatibility checks; see
    /// [`validate_with_depth`] for the overlap propagation depth.
    pub fn validate(&self, tol: f64) -> CompatibilityReport {
        self.validate_with_depth(tol, VALIDATE_PROPAGATION_DEPTH)
    }

    pub fn validate_with_depth(&self, tol: f64, depth: usize) -> CompatibilityReport {
        let mut checks = Vec::new();
        let mut witnesses = Vec::new();

        checks.push("g-side weak contractivity".to_string());
        if let Some(i) = self.y_side.check_contractive() {
            checks.push(format!("g_{i} is not weakly contractive; existence undecided"));
            return CompatibilityReport {
                status: CompatStatus::Undecided,
                witnesses,
                checks_run: checks,
            };
        }

        checks.push("boundary values vs g fixed points".to_string());
        for b in &self.boundary {
            if let Ok(fix) = self.y_side.fixed_point(b.corner) {
                let f = fix.as_scalar();
                if (f - b.value).abs() > tol {
                    witnesses.push(Witness {
                        location: b.x,
                        left: b.value,
                        right: f,
                        discrepancy: (f - b.value).abs(),
                    });
                }
            }
        }

        match self.kind {
            SystemKind::MonotoneInterval | SystemKind::Generic => {
                if let Err(label) = self.validate_interval(tol, depth, &mut checks, &mut witnesses)
                {
                    checks.push(label);
                    return CompatibilityReport {
                        status: CompatStatus::Undecided,
                        witnesses,
                        checks_run: checks,
                    };
                }
            }
            SystemKind::Gasket => self.validate_gasket(tol, &mut checks, &mut witnesses),
        }

        let status = if witnesses.iter().any(|w| w.discrepancy > tol) {
            CompatStatus::Incompatible
        } else {
            CompatStatus::Compatible
        };
        CompatibilityReport {
            status,
            witnesses,
            checks_run: checks,
        }
    }

    /// Interval checks. Returns `Err(label)` when a structural precondition
    /// fails (outcome undecided rather than incompatible).
    fn validate_interval(
        &self,
        tol: f64,
        depth: usize,
        checks: &mut Vec<String>,
        witnesses: &mut Vec<Witness>,
    ) -> std::result::Result<(), String> {
        let (lo, hi) = self
            .x_side
            .domain()
            .interval_bounds()
            .ok_or_else(|| "X side is not an interval".to_string())?;
        let n = self.x_side.len();
        let cells: Vec<(f64, f64)> = (0..n)
            .map(|i| (self.x_side.map(i).eval1(lo), self.x_side.map(i).eval1(hi)))
            .collect();

        checks.push("f-side endpoint and covering structure".to_string());
        let scale = (hi - lo).abs().max(1.0);
        if (cells[0].0 - lo).abs() > tol * scale || (cells[n - 1].1 - hi).abs() > tol * scale {
            return Err("f-side does not pin the domain endpoints".to_string());
        }
        for i in 0..n - 1 {
            if cells[i + 1].0 > cells[i].1 + tol * scale {
                return Err(format!("covering gap between cells {i} and {}", i + 1));
            }
        }

        let phi0_lo = match self.boundary_value(0) {
            Ok(b) => b.value,
            Err(_) => return Err("no boundary value at the left corner".to_string()),
        };
        let phi0_hi = match self.boundary_value(n - 1) {
            Ok(b) => b.value,
            Err(_) => return Err("no boundary value at the right corner".to_string()),
        };

        checks.push("contact-point matching at cell junctions".to_string());
        for i in 1..n {
            let chained = (cells[i - 1].1 - cells[i].0).abs() <= tol * scale;
            if chained {
                // φ(f_{i-1}(hi)) = φ(f_i(lo)) forces g_{i-1}(φ₀(hi)) = g_i(φ₀(lo))
                let left = self.y_side.map(i - 1).eval1(phi0_hi);
                let right = self.y_side.map(i).eval1(phi0_lo);
                if (left - right).abs() > tol {
                    witnesses.push(Witness {
                        location: Point::scalar(cells[i].0),
                        left,
                        right,
                        discrepancy: (left - right).abs(),
                    });
                }
            }
        }

        // overlapping cells: propagate value enclosures along both extreme
        // codings of sampled contact points and look for a contradiction
        let mut overlap_found = false;
        for i in 0..n {
            for j in i + 1..n {
                let a = cells[i].0.max(cells[j].0);
                let b = cells[i].1.min(cells[j].1);
                if b - a <= tol * scale {
                    continue;
                }
                overlap_found = true;
                for k in 0..OVERLAP_SAMPLES {
                    let x = a + (b - a) * (k as f64 + 0.5) / OVERLAP_SAMPLES as f64;
                    let e_low = self.greedy_enclosure(Point::scalar(x), false, depth, tol);
                    let e_high = self.greedy_enclosure(Point::scalar(x), true, depth, tol);
                    if let (Ok(el), Ok(eh)) = (e_low, e_high) {
                        let gap = el.0.max(eh.0) - el.1.min(eh.1);
                        if gap > tol {
                            witnesses.push(Witness {
                                location: Point::scalar(x),
                                left: 0.5 * (el.0 + el.1),
                                right: 0.5 * (eh.0 + eh.1),
                                discrepancy: gap,
                            });
                        }
                    }
                }
            }
        }
        if overlap_found {
            checks.push(format!(
                "overlap constraint propagation to depth {depth}"
            ));
        }
        Ok(())
    }

    fn validate_gasket(&self, tol: f64, checks: &mut Vec<String>, witnesses: &mut Vec<Witness>) {
        checks.push("pairwise corner matching g_i(fix g_j) = g_j(fix g_i)".to_string());
        let n = self.x_side.len();
        for i in 0..n {
            for j in i + 1..n {
                let (Ok(fj), Ok(fi)) = (self.y_side.fixed_point(j), self.y_side.fixed_point(i))
                else {
                    continue;
                };
                let left = self.y_side.map(i).eval1(fj.as_scalar());
                let right = self.y_side.map(j).eval1(fi.as_scalar());
                if (left - right).abs() > tol {
                    // the mismatch lives at the edge midpoint f_i(q_j)
                    let loc = match self.x_side.fixed_point(j) {
                        Ok(qj) => self.x_side.map(i).eval(qj),
                        Err(_) => Point::xy(f64::NAN, f64::NAN),
                    };
                    witnesses.push(Witness {
                        location: loc,
                        left,
                        right,
                        discrepancy: (left - right).abs(),
                    });
                }
            }
        }
    }

    /// Enclosure of all solution values consistent with one extreme coding
    /// of `x`: descend `depth` letters preferring the lowest (or highest)
    /// admissible index, then bound by the g-word image of the carrier.
    fn greedy_enclosure(
        &self,
        x: Point,
        prefer_high: bool,
        depth: usize,
        tol: f64,
    ) -> Result<(f64, f64)> {
        let (ylo, yhi) = self.y_carrier()?;
        let mut letters = Vec::with_capacity(depth);
        let mut p = x;
        for _ in 0..depth {
            match self.code_step(&p, prefer_high, tol)? {
                Step::Corner(c) => {
                    let v = fold_word(&self.y_side, &letters, self.boundary_value(c)?.value);
                    return Ok((v, v));
                }
                Step::Descend(i, r) => {
                    letters.push(i);
                    p = r;
                }
            }
        }
        let e0 = fold_word(&self.y_side, &letters, ylo);
        let e1 = fold_word(&self.y_side, &letters, yhi);
        Ok((e0.min(e1), e0.max(e1)))
    }
}

/// Apply `g_{w1} ∘ … ∘ g_{wn}` to a scalar.
fn fold_word(ifs: &IfSystem, letters: &[usize], v: f64) -> f64 {
    let mut y = v;
    for &i in letters.iter().rev() {
        y = ifs.map(i).eval1(y);
    }
    y
}

fn moebius_apply(m: &[f64; 4], x: f64) -> f64 {
    (m[0] * x + m[1]) / (m[2] * x + m[3])
}

/// Matrix product, renormalized so entries stay O(1) over long words.
fn moebius_compose(m: &[f64; 4], n: &[f64; 4]) -> [f64; 4] {
    let mut r = [
        m[0] * n[0] + m[1] * n[2],
        m[0] * n[1] + m[1] * n[3],
        m[2] * n[0] + m[3] * n[2],
        m[2] * n[1] + m[3] * n[3],
    ];
    let scale = r.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
    if scale > 0.0 {
        for v in &mut r {
            *v /= scale;
        }
    }
    r
}

/// Deduplicated x-coordinates of an evaluation grid (test support for
/// interval systems).
pub fn grid_xs(rows: &[GridRow]) -> Vec<f64> {
    let mut xs: Vec<Point> = rows.iter().map(|r| r.x).collect();
    dedup_points(&mut xs, 1e-12);
    xs.iter().map(Point::as_scalar).collect()
}
