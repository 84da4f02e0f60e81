//! Stability experiments: Hausdorff distance between point clouds, solution
//! graph clouds, discrete attractor approximation, and the deformation
//! family that rescales a de Rham system onto slightly larger/smaller
//! intervals and watches the solution graphs converge.
//!
//! Gromov–Hausdorff distances are computed as plain Hausdorff distances
//! after explicit isometric placement into a common space; the cases here
//! all supply the embeddings.

use rayon::prelude::*;

use crate::conjugate::{ConjugateSystem, SystemKind};
use crate::error::{Error, Result};
use crate::ifs::{Domain, IfSystem};
use crate::map::MapSpec;
use crate::point::Point;

/// Cap on pairwise distance evaluations in the brute-force Hausdorff
/// distance.
pub const PAIRWISE_CAP: u128 = 10_000_000;

/// Finite sample of a metric space (interval, plane, or product space with
/// the root-sum-square metric).
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    points: Vec<Point>,
}

impl PointCloud {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyCloud);
        }
        let dim = points[0].dim();
        if points.iter().any(|p| p.dim() != dim || !p.is_finite()) {
            return Err(Error::InvalidParameter(
                "cloud points must share a dimension and be finite".into(),
            ));
        }
        Ok(PointCloud { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty clouds
    }
}

/// Brute-force Hausdorff distance: the larger of the two directed sup-min
/// distances. O(|a|·|b|), parallel over the outer cloud.
pub fn hausdorff_distance(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    if a.points[0].dim() != b.points[0].dim() {
        return Err(Error::DomainError(
            "clouds live in different metric spaces".into(),
        ));
    }
    let pairs = a.len() as u128 * b.len() as u128;
    if pairs > PAIRWISE_CAP {
        return Err(Error::BudgetExceeded {
            what: "pairwise distance evaluations",
            needed: pairs,
            cap: PAIRWISE_CAP,
        });
    }
    Ok(directed(a, b).max(directed(b, a)))
}

fn directed(a: &PointCloud, b: &PointCloud) -> f64 {
    a.points
        .par_iter()
        .map(|p| {
            b.points
                .iter()
                .map(|q| p.dist(q))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| 0.0, f64::max)
}

/// Points `(x, φ(x))` at every depth-`depth` word endpoint, i.e. the
/// depth-`depth` approximation of the solution graph inside the product
/// space. Endpoint values are exact, so the cloud lies on the graph.
pub fn graph_cloud(system: &ConjugateSystem, depth: usize, tol: f64) -> Result<PointCloud> {
    let rows = system.evaluate_grid(depth, tol)?;
    PointCloud::new(
        rows.iter()
            .map(|r| Point::product(r.x, Point::scalar(r.y)))
            .collect(),
    )
}

/// Successive Hausdorff distances `d(K^(d_k), K^(d_{k+1}))` of the discrete
/// attractor approximations at the given depths.
pub fn discrete_approximation_experiment(
    ifs: &IfSystem,
    depths: &[usize],
) -> Result<Vec<(usize, f64)>> {
    if depths.len() < 2 || depths.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter(
            "depths must be strictly increasing with at least two entries".into(),
        ));
    }
    let clouds: Vec<PointCloud> = depths
        .iter()
        .map(|&d| Ok(PointCloud::new(ifs.attractor_points(d)?)?))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(depths.len() - 1);
    for k in 0..clouds.len() - 1 {
        out.push((depths[k], hausdorff_distance(&clouds[k], &clouds[k + 1])?));
    }
    Ok(out)
}

/// Affine rescaler sending `[lo, hi]` onto `[0, 1]`.
#[derive(Clone, Copy, Debug)]
pub struct Rescaler {
    pub lo: f64,
    pub hi: f64,
}

impl Rescaler {
    pub fn forward(&self, x: f64) -> f64 {
        (x - self.lo) / (self.hi - self.lo)
    }

    pub fn inverse(&self, u: f64) -> f64 {
        self.lo + u * (self.hi - self.lo)
    }
}

/// One member of the deformation family: the limit system conjugated onto
/// `X⁽ⁿ⁾ = [-1/n, (n+1)/n]` and `Y⁽ⁿ⁾ = [1/(n+2), (n+1)/(n+2)]` by affine
/// rescalers, so both interval margins shrink like 1/n.
#[derive(Debug)]
pub struct DeformationFamily {
    pub n: usize,
    pub e_x: Rescaler,
    pub e_y: Rescaler,
    pub system: ConjugateSystem,
}

/// The limit system of the deformation family: `f` the dyadic pair,
/// `g_0(y) = y/3`, `g_1(y) = (2y+1)/3`.
pub fn deformation_limit_system() -> Result<ConjugateSystem> {
    let f = IfSystem::new(
        "deform-x",
        Domain::UnitInterval,
        vec![MapSpec::affine(0.5, 0.0), MapSpec::affine(0.5, 0.5)],
    )?;
    let g = IfSystem::new(
        "deform-y",
        Domain::UnitInterval,
        vec![
            MapSpec::affine(1.0 / 3.0, 0.0),
            MapSpec::affine(2.0 / 3.0, 1.0 / 3.0),
        ],
    )?;
    ConjugateSystem::new("deform-limit", SystemKind::MonotoneInterval, f, g)
}

/// Conjugate an affine map by a rescaler: `e⁻¹ ∘ m ∘ e`, again affine.
fn conjugate_affine(m: &MapSpec, e: &Rescaler) -> Result<MapSpec> {
    match &m.form {
        crate::map::MapForm::Affine { slope, offset } => {
            // e(x) = (x-lo)/w, e⁻¹(u) = lo + u·w with w = hi-lo:
            // (e⁻¹∘m∘e)(x) = slope·x + lo(1-slope) + offset·w
            let w = e.hi - e.lo;
            Ok(MapSpec::affine(*slope, e.lo * (1.0 - slope) + offset * w))
        }
        _ => Err(Error::DomainError(
            "deformation family conjugates affine maps only".into(),
        )),
    }
}

impl DeformationFamily {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(
                "deformation index must be at least 2".into(),
            ));
        }
        let nf = n as f64;
        let e_x = Rescaler {
            lo: -1.0 / nf,
            hi: (nf + 1.0) / nf,
        };
        let e_y = Rescaler {
            lo: 1.0 / (nf + 2.0),
            hi: (nf + 1.0) / (nf + 2.0),
        };
        let limit = deformation_limit_system()?;
        let fx: Vec<MapSpec> = limit
            .x_side()
            .maps()
            .iter()
            .map(|m| conjugate_affine(m, &e_x))
            .collect::<Result<_>>()?;
        let gy: Vec<MapSpec> = limit
            .y_side()
            .maps()
            .iter()
            .map(|m| conjugate_affine(m, &e_y))
            .collect::<Result<_>>()?;
        let system = ConjugateSystem::new(
            format!("deform-{n}"),
            SystemKind::MonotoneInterval,
            IfSystem::new(
                format!("deform-x-{n}"),
                Domain::Interval { lo: e_x.lo, hi: e_x.hi },
                fx,
            )?,
            IfSystem::new(
                format!("deform-y-{n}"),
                Domain::Interval { lo: e_y.lo, hi: e_y.hi },
                gy,
            )?,
        )?;
        Ok(DeformationFamily { n, e_x, e_y, system })
    }
}

/// Hausdorff distances between each deformed solution graph and the limit
/// graph, both placed in the plane by the identity (the isometric
/// placement; the deformed graph lives on its own rectangle, which
/// converges to the unit square). Distances shrink like 1/n.
pub fn deformation_experiment(
    n_list: &[usize],
    depth: usize,
    tol: f64,
) -> Result<Vec<(usize, f64)>> {
    let limit = deformation_limit_system()?;
    let limit_cloud = graph_cloud(&limit, depth, tol)?;
    let mut out = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let fam = DeformationFamily::new(n)?;
        let cloud = graph_cloud(&fam.system, depth, tol)?;
        out.push((n, hausdorff_distance(&cloud, &limit_cloud)?));
    }
    Ok(out)
}

/// Rescaled placement of a deformation member's graph: mapping the graph
/// through `(e_X, e_Y)` undoes the conjugation exactly, so this cloud
/// coincides with the limit graph up to rounding. Exposed as the sanity
/// check on the construction.
pub fn deformation_rescaled_cloud(
    fam: &DeformationFamily,
    depth: usize,
    tol: f64,
) -> Result<PointCloud> {
    let cloud = graph_cloud(&fam.system, depth, tol)?;
    PointCloud::new(
        cloud
            .points()
            .iter()
            .map(|p| {
                let c = p.coords();
                Point::xy(fam.e_x.forward(c[0]), fam.e_y.forward(c[1]))
            })
            .collect(),
    )
}

/// Sup-norm grid difference of two solutions on the shared depth grid,
/// together with the Hausdorff distance of their graph clouds. The
/// Hausdorff distance never exceeds the sup difference, and the two vanish
/// together.
pub fn uniform_vs_hausdorff_check(
    a: &ConjugateSystem,
    b: &ConjugateSystem,
    depth: usize,
) -> Result<(f64, f64)> {
    let ga = a.evaluate_grid(depth, 1e-12)?;
    let gb = b.evaluate_grid(depth, 1e-12)?;
    if ga.len() != gb.len() {
        return Err(Error::DomainError(
            "systems do not share a depth grid".into(),
        ));
    }
    let mut sup = 0.0f64;
    for (ra, rb) in ga.iter().zip(&gb) {
        if ra.x.dist(&rb.x) > 1e-9 {
            return Err(Error::DomainError(
                "systems do not share a depth grid".into(),
            ));
        }
        sup = sup.max((ra.y - rb.y).abs());
    }
    let haus = hausdorff_distance(
        &graph_cloud(a, depth, 1e-12)?,
        &graph_cloud(b, depth, 1e-12)?,
    )?;
    Ok((sup, haus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn cloud1(xs: &[f64]) -> PointCloud {
        PointCloud::new(xs.iter().map(|&x| Point::scalar(x)).collect()).unwrap()
    }

    #[test]
    fn hausdorff_basics() {
        let a = cloud1(&[0.0, 1.0]);
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
        let b = cloud1(&[1.0]);
        assert_eq!(hausdorff_distance(&cloud1(&[0.0]), &b).unwrap(), 1.0);
        // {0,1} vs {1/2}: both directed distances are 1/2
        assert_eq!(hausdorff_distance(&a, &cloud1(&[0.5])).unwrap(), 0.5);
    }

    #[test]
    fn empty_cloud_rejected() {
        assert!(matches!(PointCloud::new(vec![]), Err(Error::EmptyCloud)));
    }

    #[test]
    fn graph_cloud_lebesgue_depth_two() {
        let sys = zoo::lebesgue(1.0 / 3.0).unwrap();
        let cloud = graph_cloud(&sys, 2, 1e-9).unwrap();
        let expect = [
            (0.0, 0.0),
            (0.25, 1.0 / 9.0),
            (0.5, 1.0 / 3.0),
            (0.75, 5.0 / 9.0),
            (1.0, 1.0),
        ];
        assert_eq!(cloud.len(), expect.len());
        for (p, (x, y)) in cloud.points().iter().zip(expect) {
            assert!(p.dist(&Point::xy(x, y)) < 1e-12);
        }
    }

    #[test]
    fn identity_graph_on_diagonal() {
        let sys = zoo::lebesgue(0.5).unwrap();
        let cloud = graph_cloud(&sys, 3, 1e-9).unwrap();
        for p in cloud.points() {
            let c = p.coords();
            assert!((c[0] - c[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn graph_cloud_equals_product_attractor() {
        let sys = zoo::lebesgue(1.0 / 3.0).unwrap();
        let depth = 5;
        let graph = graph_cloud(&sys, depth, 1e-9).unwrap();
        let product = sys.product_system().unwrap();
        let attractor = PointCloud::new(product.attractor_points(depth + 1).unwrap()).unwrap();
        // same construction, enumerated two ways
        assert!(hausdorff_distance(&graph, &attractor).unwrap() <= 1e-12);
    }

    #[test]
    fn dyadic_refinement_distances_halve() {
        let ifs = zoo::lebesgue(0.5).unwrap().x_side().clone();
        let rows = discrete_approximation_experiment(&ifs, &[1, 2, 3, 4, 5, 6]).unwrap();
        for (k, (_, d)) in rows.iter().enumerate() {
            let expect = 0.5f64.powi(k as i32 + 1);
            assert!((d - expect).abs() < 1e-12, "pair {k}: {d} vs {expect}");
        }
    }

    #[test]
    fn gasket_refinement_ratio_about_half() {
        let ifs = zoo::gasket().unwrap().x_side().clone();
        let rows = discrete_approximation_experiment(&ifs, &[1, 2, 3, 4, 5]).unwrap();
        for w in rows.windows(2) {
            let ratio = w[1].1 / w[0].1;
            assert!((ratio - 0.5).abs() < 0.1, "ratio {ratio}");
        }
        assert!(rows.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-15));
    }

    #[test]
    fn deformation_rescaling_undoes_conjugation() {
        let fam = DeformationFamily::new(5).unwrap();
        let rescaled = deformation_rescaled_cloud(&fam, 6, 1e-9).unwrap();
        let limit = graph_cloud(&deformation_limit_system().unwrap(), 6, 1e-9).unwrap();
        assert!(hausdorff_distance(&rescaled, &limit).unwrap() < 1e-12);
    }

    #[test]
    fn deformation_distances_shrink() {
        let rows = deformation_experiment(&[2, 4, 8, 16, 32], 8, 1e-9).unwrap();
        assert!(rows.windows(2).all(|w| w[1].1 < w[0].1), "{rows:?}");
        assert!(rows[4].1 < rows[0].1 / 4.0, "{rows:?}");
    }

    #[test]
    fn uniform_dominates_hausdorff() {
        let a = zoo::lebesgue(1.0 / 3.0).unwrap();
        let b = zoo::lebesgue(0.34).unwrap();
        let (sup, haus) = uniform_vs_hausdorff_check(&a, &b, 7).unwrap();
        assert!(haus <= sup + 1e-12);
        assert!(sup < 0.02, "nearby parameters stay uniformly close: {sup}");
        let (s0, h0) = uniform_vs_hausdorff_check(&a, &a, 7).unwrap();
        assert_eq!((s0, h0), (0.0, 0.0));
    }

    #[test]
    fn separated_parameters_stay_separated() {
        let a = zoo::lebesgue(1.0 / 3.0).unwrap();
        let b = zoo::lebesgue(2.0 / 3.0).unwrap();
        let (sup, haus) = uniform_vs_hausdorff_check(&a, &b, 7).unwrap();
        // the midpoint values differ by exactly 1/3; the graph distance is
        // smaller (diagonal shortcuts) but stays macroscopic
        assert!(sup >= 1.0 / 3.0 - 1e-12);
        assert!(haus <= sup + 1e-12);
        assert!(haus >= 0.25, "haus {haus}");
    }
}
