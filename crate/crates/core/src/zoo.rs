//! Named builders for the concrete systems the toolkit ships with:
//! Lebesgue singular functions, the Minkowski question-mark function and
//! its inverse (the Conway box function), overlapping affine families with
//! no solution, a parametric Möbius family, a fractal function on the
//! Sierpiński gasket, a singular function with vanishing derivative at
//! every dyadic rational, and a Möbius pair with a computable measure
//! dimension.

use crate::conjugate::{CompatStatus, ConjugateSystem, SystemKind};
use crate::error::{Error, Result};
use crate::ifs::{Domain, IfSystem};
use crate::map::MapSpec;

fn dyadic_ifs(name: &str) -> Result<IfSystem> {
    IfSystem::new(
        name,
        Domain::UnitInterval,
        vec![MapSpec::affine(0.5, 0.0), MapSpec::affine(0.5, 0.5)],
    )
}

/// Lebesgue's singular function: `f` dyadic, `g_0(y) = a·y`,
/// `g_1(y) = (1-a)·y + a`. The solution is the identity at `a = 1/2` and
/// strictly singular otherwise.
pub fn lebesgue(a: f64) -> Result<ConjugateSystem> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::DomainError(format!(
            "lebesgue parameter must lie in (0,1), got {a}"
        )));
    }
    let g = IfSystem::new(
        "lebesgue-g",
        Domain::UnitInterval,
        vec![MapSpec::affine(a, 0.0), MapSpec::affine(1.0 - a, a)],
    )?;
    ConjugateSystem::new(
        format!("lebesgue({a})"),
        SystemKind::MonotoneInterval,
        dyadic_ifs("dyadic")?,
        g,
    )
}

fn moebius_pair_yp1() -> (MapSpec, MapSpec) {
    // y/(y+1) and 1/(2-y): weak contractions with parabolic fixed points
    // at 0 and 1
    (
        MapSpec::moebius(1.0, 0.0, 1.0, 1.0),
        MapSpec::moebius(0.0, 1.0, -1.0, 2.0),
    )
}

/// The Minkowski question-mark function: `f_0(x) = x/(x+1)`,
/// `f_1(x) = 1/(2-x)` on the X side, dyadic maps on the Y side. Rational
/// points code to finite words (their continued fractions), so evaluation
/// there is exact.
pub fn question_mark() -> Result<ConjugateSystem> {
    let (f0, f1) = moebius_pair_yp1();
    let f = IfSystem::new("farey", Domain::UnitInterval, vec![f0, f1])?;
    ConjugateSystem::new(
        "question_mark",
        SystemKind::MonotoneInterval,
        f,
        dyadic_ifs("dyadic")?,
    )
}

/// The Conway box function (the inverse of the question-mark function):
/// the sides of [`question_mark`] swapped.
pub fn conway_box() -> Result<ConjugateSystem> {
    let (g0, g1) = moebius_pair_yp1();
    let g = IfSystem::new("farey", Domain::UnitInterval, vec![g0, g1])?;
    ConjugateSystem::new(
        "conway_box",
        SystemKind::MonotoneInterval,
        dyadic_ifs("dyadic")?,
        g,
    )
}

/// Two overlapping affine families: `f_0 = a·x`, `f_1 = a·x + 1-a` against
/// the same shape with parameter `b`. For `a, b ∈ [1/2, 1)` the cells
/// overlap (or touch) and, away from `a = b = 1/2`, the compatibility
/// constraints contradict each other.
pub fn overlap(a: f64, b: f64) -> Result<ConjugateSystem> {
    for (label, v) in [("a", a), ("b", b)] {
        if !(0.5..1.0).contains(&v) {
            return Err(Error::DomainError(format!(
                "overlap parameter {label} must lie in [1/2, 1), got {v}"
            )));
        }
    }
    let f = IfSystem::new(
        format!("overlap-f({a})"),
        Domain::UnitInterval,
        vec![MapSpec::affine(a, 0.0), MapSpec::affine(a, 1.0 - a)],
    )?;
    let g = IfSystem::new(
        format!("overlap-g({b})"),
        Domain::UnitInterval,
        vec![MapSpec::affine(b, 0.0), MapSpec::affine(b, 1.0 - b)],
    )?;
    ConjugateSystem::new(
        format!("overlap({a},{b})"),
        SystemKind::MonotoneInterval,
        f,
        g,
    )
}

/// The Möbius coefficient `x_u = 2/(1+√(1+8u²))`, chosen so that 1 is a
/// fixed point of `g_1`.
pub fn moebius_parametric_xu(u: f64) -> f64 {
    2.0 / (1.0 + (1.0 + 8.0 * u * u).sqrt())
}

/// Parametric Möbius family on the Y side over the dyadic X side:
/// `g_0(y) = x_u·y / (1 - u²x_u²·y)`,
/// `g_1(y) = x_u / (1 - u²x_u²·(1+y) + ...)` per the coefficient matrices
/// `[[x_u, 0], [-u²x_u², 1]]` and `[[0, x_u], [-u²x_u², 1-u²x_u²]]`.
/// For `u > √3` the map `g_1` has Lipschitz constant above 1, so the
/// contractivity check fails and validation reports undecided.
pub fn moebius_parametric(u: f64) -> Result<ConjugateSystem> {
    if !(u > 0.0) {
        return Err(Error::DomainError(format!(
            "moebius parameter must be positive, got {u}"
        )));
    }
    let xu = moebius_parametric_xu(u);
    let s = u * u * xu * xu;
    let g = IfSystem::new(
        format!("moebius-g({u})"),
        Domain::UnitInterval,
        vec![
            MapSpec::moebius(xu, 0.0, -s, 1.0),
            MapSpec::moebius(0.0, xu, -s, 1.0 - s),
        ],
    )?;
    ConjugateSystem::new(
        format!("moebius_parametric({u})"),
        SystemKind::MonotoneInterval,
        dyadic_ifs("dyadic")?,
        g,
    )
}

/// Corners of the unit-side gasket carrier.
pub fn gasket_corners() -> [[f64; 2]; 3] {
    [[0.0, 0.0], [1.0, 0.0], [0.5, 3f64.sqrt() / 2.0]]
}

/// A fractal function on the two-dimensional Sierpiński gasket:
/// `f_i(x) = (x + q_i)/2` on the gasket, and on `[0, 1]`
/// `g_0(y) = 1/(2-y) - 1/2`, `g_1(y) = (2/3)y + 1/6`,
/// `g_2(y) = y/(y+1) + 1/2`, giving corner values 0, 1/2, 1.
pub fn gasket() -> Result<ConjugateSystem> {
    let q = gasket_corners();
    let f = IfSystem::new(
        "gasket-f",
        Domain::Gasket { corners: q },
        q.iter()
            .map(|c| MapSpec::similarity2(0.5, [c[0] / 2.0, c[1] / 2.0]))
            .collect(),
    )?;
    let g = IfSystem::new(
        "gasket-g",
        Domain::UnitInterval,
        vec![
            // 1/(2-y) - 1/2 = y / (4 - 2y)
            MapSpec::moebius(1.0, 0.0, -2.0, 4.0),
            MapSpec::affine(2.0 / 3.0, 1.0 / 6.0),
            // y/(y+1) + 1/2 = (3y + 1) / (2y + 2)
            MapSpec::moebius(3.0, 1.0, 2.0, 2.0),
        ],
    )?;
    ConjugateSystem::new("gasket", SystemKind::Gasket, f, g)
}

/// Knots of the piecewise-linear `g_0` used by [`derivative_zero`], and the
/// tolerance its slope profile keeps to the reference profile
/// (1/2 on [0,1/2], 1 on [1/2,1] for `g_0`; 1/4 for `g_1`).
pub const DERIVATIVE_ZERO_KNOTS: [(f64, f64); 4] =
    [(0.0, 0.0), (0.25, 0.12), (0.5, 0.245), (1.0, 0.73)];
pub const DERIVATIVE_ZERO_EPSILON: f64 = 0.05;

/// A singular function whose derivative vanishes at every dyadic rational:
/// `f` dyadic, `g_0` the piecewise-linear interpolant through
/// [`DERIVATIVE_ZERO_KNOTS`], `g_1` affine through `(0, g_0(1))` and
/// `(1, 1)`. Both g-slopes at the extreme fixed points stay below 1/2, so
/// dyadic word tails contract strictly faster on the value side than the
/// dyadic mesh does.
pub fn derivative_zero() -> Result<ConjugateSystem> {
    let knots = DERIVATIVE_ZERO_KNOTS.to_vec();
    let g0 = MapSpec::piecewise_linear(knots)?;
    let top = DERIVATIVE_ZERO_KNOTS[3].1;
    let g1 = MapSpec::affine(1.0 - top, top);
    let g = IfSystem::new("derivative-zero-g", Domain::UnitInterval, vec![g0, g1])?;
    ConjugateSystem::new(
        "derivative_zero",
        SystemKind::MonotoneInterval,
        dyadic_ifs("dyadic")?,
        g,
    )
}

/// Möbius pair with a computable distribution-function dimension:
/// `g_0(y) = 5y/(10-2y)`, `g_1(y) = (y+5)/(8-2y)` over the dyadic X side.
pub fn mobius_dimension_pair() -> Result<ConjugateSystem> {
    let g = IfSystem::new(
        "mobius-dim-g",
        Domain::UnitInterval,
        vec![
            MapSpec::moebius(5.0, 0.0, -2.0, 10.0),
            MapSpec::moebius(1.0, 5.0, -2.0, 8.0),
        ],
    )?;
    ConjugateSystem::new(
        "mobius_dimension_pair",
        SystemKind::MonotoneInterval,
        dyadic_ifs("dyadic")?,
        g,
    )
}

/// A catalog row: builder reference, parameters, and the validation
/// outcome the builder guarantees.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: Vec<f64>,
    pub expected_validation: CompatStatus,
    pub notes: &'static str,
}

impl CatalogEntry {
    pub fn reference(&self) -> String {
        if self.params.is_empty() {
            self.name.to_string()
        } else {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            format!("{}:{}", self.name, ps.join(","))
        }
    }

    pub fn build(&self) -> Result<ConjugateSystem> {
        build_reference(self.name, &self.params)
    }
}

/// Every shipped system instance with its expected validation outcome.
pub fn catalog() -> Vec<CatalogEntry> {
    use CompatStatus::*;
    vec![
        CatalogEntry {
            name: "lebesgue",
            params: vec![0.5],
            expected_validation: Compatible,
            notes: "identity solution",
        },
        CatalogEntry {
            name: "lebesgue",
            params: vec![1.0 / 3.0],
            expected_validation: Compatible,
            notes: "Lebesgue singular function",
        },
        CatalogEntry {
            name: "lebesgue",
            params: vec![0.25],
            expected_validation: Compatible,
            notes: "Lebesgue singular function",
        },
        CatalogEntry {
            name: "question_mark",
            params: vec![],
            expected_validation: Compatible,
            notes: "Minkowski question-mark function",
        },
        CatalogEntry {
            name: "conway_box",
            params: vec![],
            expected_validation: Compatible,
            notes: "Conway box function (inverse of the question mark)",
        },
        CatalogEntry {
            name: "overlap",
            params: vec![0.75, 0.5],
            expected_validation: Incompatible,
            notes: "overlapping cells force contradictory values",
        },
        CatalogEntry {
            name: "overlap",
            params: vec![0.5, 0.75],
            expected_validation: Incompatible,
            notes: "endpoint contact mismatch",
        },
        CatalogEntry {
            name: "overlap",
            params: vec![2.0 / 3.0, 0.75],
            expected_validation: Incompatible,
            notes: "two candidate values at the overlap midpoint",
        },
        CatalogEntry {
            name: "moebius_parametric",
            params: vec![1.0],
            expected_validation: Compatible,
            notes: "contractive Möbius family",
        },
        CatalogEntry {
            name: "moebius_parametric",
            params: vec![2.0],
            expected_validation: Undecided,
            notes: "g_1 expands beyond u = √3",
        },
        CatalogEntry {
            name: "gasket",
            params: vec![],
            expected_validation: Compatible,
            notes: "fractal function on the Sierpiński gasket",
        },
        CatalogEntry {
            name: "derivative_zero",
            params: vec![],
            expected_validation: Compatible,
            notes: "derivative zero at every dyadic rational",
        },
        CatalogEntry {
            name: "mobius_dimension_pair",
            params: vec![],
            expected_validation: Compatible,
            notes: "Möbius pair with computable measure dimension",
        },
    ]
}

/// Build a system from a `name[:param,...]` reference.
pub fn build_reference(name: &str, params: &[f64]) -> Result<ConjugateSystem> {
    let want = |n: usize| -> Result<()> {
        if params.len() != n {
            return Err(Error::InvalidParameter(format!(
                "{name} takes {n} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    match name {
        "lebesgue" => {
            want(1)?;
            lebesgue(params[0])
        }
        "question_mark" => {
            want(0)?;
            question_mark()
        }
        "conway_box" => {
            want(0)?;
            conway_box()
        }
        "overlap" => {
            want(2)?;
            overlap(params[0], params[1])
        }
        "moebius_parametric" => {
            want(1)?;
            moebius_parametric(params[0])
        }
        "gasket" => {
            want(0)?;
            gasket()
        }
        "derivative_zero" => {
            want(0)?;
            derivative_zero()
        }
        "mobius_dimension_pair" => {
            want(0)?;
            mobius_dimension_pair()
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown system '{other}'"
        ))),
    }
}

/// Parse a `name[:p1,p2,...]` system reference.
pub fn parse_reference(reference: &str) -> Result<ConjugateSystem> {
    let (name, params) = match reference.split_once(':') {
        None => (reference, Vec::new()),
        Some((n, ps)) => {
            let parsed: std::result::Result<Vec<f64>, _> =
                ps.split(',').map(str::trim).map(str::parse).collect();
            (
                n,
                parsed.map_err(|e| {
                    Error::InvalidParameter(format!("bad parameter list '{ps}': {e}"))
                })?,
            )
        }
    };
    build_reference(name.trim(), &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use crate::word::Word;

    #[test]
    fn catalog_validation_matches_expectations() {
        for entry in catalog() {
            let sys = entry.build().unwrap();
            let report = sys.validate(1e-9);
            assert_eq!(
                report.status,
                entry.expected_validation,
                "{}: {:?}",
                entry.reference(),
                report.checks_run
            );
            if report.status == CompatStatus::Incompatible {
                assert!(
                    report.witnesses.iter().any(|w| w.discrepancy > 1e-9),
                    "{} needs an explicit witness",
                    entry.reference()
                );
            }
        }
    }

    #[test]
    fn lebesgue_rejects_bad_parameter() {
        assert!(lebesgue(0.0).is_err());
        assert!(lebesgue(1.0).is_err());
        assert!(overlap(0.4, 0.6).is_err());
        assert!(moebius_parametric(-1.0).is_err());
    }

    #[test]
    fn lebesgue_golden_values() {
        // φ(1/2) = a, φ(1/4) = a²
        let a = 0.25;
        let sys = lebesgue(a).unwrap();
        let (y, _) = sys.evaluate(Point::scalar(0.25), 1e-12).unwrap();
        assert!((y - a * a).abs() < 1e-15);
    }

    #[test]
    fn question_mark_golden_values() {
        let q = question_mark().unwrap();
        // ?(1/3) = 1/4, ?(1/2) = 1/2
        let (y, err) = q.evaluate(Point::scalar(1.0 / 3.0), 1e-9).unwrap();
        assert_eq!(err, 0.0);
        assert!((y - 0.25).abs() < 1e-12, "?(1/3) = {y}");
        let (y, _) = q.evaluate(Point::scalar(0.5), 1e-9).unwrap();
        assert!((y - 0.5).abs() < 1e-12, "?(1/2) = {y}");
    }

    #[test]
    fn conway_inverts_question_mark_on_a_grid() {
        let q = question_mark().unwrap();
        let c = conway_box().unwrap();
        for k in 0..=16u32 {
            let x = k as f64 / 16.0;
            let (qx, _) = q.evaluate(Point::scalar(x), 1e-8).unwrap();
            let (back, _) = c.evaluate(Point::scalar(qx), 1e-8).unwrap();
            assert!((back - x).abs() < 1e-7, "x={x} back={back}");
        }
    }

    #[test]
    fn moebius_parametric_structure() {
        assert!((moebius_parametric_xu(1.0) - 0.5).abs() < 1e-15);
        let sys = moebius_parametric(1.0).unwrap();
        // 1 is a fixed point of g_1 by the choice of x_u
        let fix = sys.y_side().fixed_point(1).unwrap().as_scalar();
        assert!((fix - 1.0).abs() < 1e-12);
        // beyond √3 the second map expands
        let wild = moebius_parametric(2.0).unwrap();
        assert_eq!(wild.y_side().check_contractive(), Some(1));
    }

    #[test]
    fn gasket_corner_and_edge_values() {
        let sys = gasket().unwrap();
        let expect = [0.0, 0.5, 1.0];
        for (i, e) in expect.iter().enumerate() {
            let v = sys.evaluate_word(&Word::empty(), i).unwrap();
            assert!((v - e).abs() < 1e-12, "corner {i}");
        }
        // edge midpoints: g_0(1/2) = 1/6, g_1(1) = 5/6, g_0(1) = 1/2
        let mid01 = sys.evaluate_word(&Word::from(vec![0]), 1).unwrap();
        assert!((mid01 - 1.0 / 6.0).abs() < 1e-12);
        let mid12 = sys.evaluate_word(&Word::from(vec![1]), 2).unwrap();
        assert!((mid12 - 5.0 / 6.0).abs() < 1e-12);
        let mid02 = sys.evaluate_word(&Word::from(vec![0]), 2).unwrap();
        assert!((mid02 - 0.5).abs() < 1e-12);
        // each edge value is consistent across the two words meeting there
        let other01 = sys.evaluate_word(&Word::from(vec![1]), 0).unwrap();
        assert!((mid01 - other01).abs() < 1e-12);
        let other12 = sys.evaluate_word(&Word::from(vec![2]), 1).unwrap();
        assert!((mid12 - other12).abs() < 1e-12);
        let other02 = sys.evaluate_word(&Word::from(vec![2]), 0).unwrap();
        assert!((mid02 - other02).abs() < 1e-12);
    }

    #[test]
    fn derivative_zero_constraints() {
        let sys = derivative_zero().unwrap();
        let g0 = sys.y_side().map(0);
        let g1 = sys.y_side().map(1);
        // chain: g_0(0) = 0, g_0(1) = g_1(0), g_1(1) = 1
        assert_eq!(g0.eval1(0.0), 0.0);
        assert!((g0.eval1(1.0) - g1.eval1(0.0)).abs() < 1e-15);
        assert!((g1.eval1(1.0) - 1.0).abs() < 1e-15);
        assert!(g0.eval1(1.0) > 0.5 && g0.eval1(1.0) < 1.0);
        // slope below 1/2 on (0, 1/4)
        let s = g0.derivative(Point::scalar(0.1)).unwrap();
        assert!(s > 0.0 && s < 0.5, "slope {s}");
        // slope profile within epsilon of the reference profile
        let reference = |y: f64| if y < 0.5 { 0.5 } else { 1.0 };
        for k in 0..100 {
            let y = (k as f64 + 0.5) / 100.0;
            let slope = g0.derivative(Point::scalar(y)).unwrap();
            assert!(
                (slope - reference(y)).abs() <= DERIVATIVE_ZERO_EPSILON + 1e-12,
                "g_0 slope {slope} at {y}"
            );
            assert!(slope < 1.0, "weak contraction needs slope < 1");
        }
        let s1 = g1.derivative(Point::scalar(0.5)).unwrap();
        assert!((s1 - 0.25).abs() <= DERIVATIVE_ZERO_EPSILON);
        // contracting tails at both extreme fixed points beat the dyadic
        // mesh, which is what kills the derivative at dyadic rationals
        assert!(g0.derivative(Point::scalar(0.0)).unwrap() < 0.5);
        assert!(g1.derivative(Point::scalar(1.0)).unwrap() < 0.5);
    }

    #[test]
    fn mobius_dimension_pair_structure() {
        let sys = mobius_dimension_pair().unwrap();
        let g0 = sys.y_side().map(0);
        let g1 = sys.y_side().map(1);
        assert_eq!(g0.eval1(0.0), 0.0);
        assert!((g1.eval1(1.0) - 1.0).abs() < 1e-15);
        assert!((g0.eval1(1.0) - 0.625).abs() < 1e-15);
        assert!((g1.eval1(0.0) - 0.625).abs() < 1e-15);
        // g_0'(0) = 50/100 = 1/2
        assert!((g0.derivative(Point::scalar(0.0)).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn parse_reference_grammar() {
        assert!(parse_reference("lebesgue:0.5").is_ok());
        assert!(parse_reference("question_mark").is_ok());
        assert!(parse_reference("overlap:0.75,0.5").is_ok());
        assert!(parse_reference("lebesgue").is_err());
        assert!(parse_reference("nope:1").is_err());
        assert!(parse_reference("lebesgue:x").is_err());
    }
}
