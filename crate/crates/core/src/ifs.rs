//! IFS containers: a named family of maps on a declared domain, word
//! application, word-image intervals, and discrete attractor approximation.

use crate::error::{Error, Result};
use crate::map::MapSpec;
use crate::point::{dedup_points, Point};
use crate::word::Word;

/// Attractor points are merged when closer than this; well below any
/// geometric feature at the depths the toolkit runs at.
pub const DEDUP_TOL: f64 = 1e-12;

/// Cap on `N^depth` for word enumerations.
pub const ENUMERATION_CAP: u128 = 10_000_000;

/// Default iteration budget reported by [`fixed_point`].
const DEFAULT_FIX_TOL: f64 = 1e-12;

/// Domain descriptor for an IFS.
#[derive(Clone, Debug, PartialEq)]
pub enum Domain {
    /// `[0, 1]`.
    UnitInterval,
    /// A general interval `[lo, hi]`.
    Interval { lo: f64, hi: f64 },
    /// The triangle region spanned by three corners (gasket carrier).
    Gasket { corners: [[f64; 2]; 3] },
    /// A planar box (product-space carrier).
    Box2 { lo: [f64; 2], hi: [f64; 2] },
}

impl Domain {
    pub fn dim(&self) -> usize {
        match self {
            Domain::UnitInterval | Domain::Interval { .. } => 1,
            Domain::Gasket { .. } | Domain::Box2 { .. } => 2,
        }
    }

    pub fn is_interval(&self) -> bool {
        self.dim() == 1
    }

    /// Interval endpoints for 1-D domains.
    pub fn interval_bounds(&self) -> Option<(f64, f64)> {
        match self {
            Domain::UnitInterval => Some((0.0, 1.0)),
            Domain::Interval { lo, hi } => Some((*lo, *hi)),
            _ => None,
        }
    }

    /// Bounding corner points used to bracket fixed points and sample grids.
    pub fn bounds(&self) -> (Point, Point) {
        match self {
            Domain::UnitInterval => (Point::scalar(0.0), Point::scalar(1.0)),
            Domain::Interval { lo, hi } => (Point::scalar(*lo), Point::scalar(*hi)),
            Domain::Gasket { corners } => {
                let lo = [
                    corners.iter().map(|c| c[0]).fold(f64::INFINITY, f64::min),
                    corners.iter().map(|c| c[1]).fold(f64::INFINITY, f64::min),
                ];
                let hi = [
                    corners.iter().map(|c| c[0]).fold(f64::NEG_INFINITY, f64::max),
                    corners.iter().map(|c| c[1]).fold(f64::NEG_INFINITY, f64::max),
                ];
                (Point::xy(lo[0], lo[1]), Point::xy(hi[0], hi[1]))
            }
            Domain::Box2 { lo, hi } => (Point::xy(lo[0], lo[1]), Point::xy(hi[0], hi[1])),
        }
    }

    pub fn contains(&self, p: &Point, tol: f64) -> bool {
        match self {
            Domain::UnitInterval | Domain::Interval { .. } => {
                let (lo, hi) = self.interval_bounds().expect("interval domain");
                p.dim() == 1 && p.as_scalar() >= lo - tol && p.as_scalar() <= hi + tol
            }
            Domain::Gasket { corners } => {
                p.dim() == 2 && barycentric(corners, p).iter().all(|&l| l >= -tol)
            }
            Domain::Box2 { lo, hi } => {
                p.dim() == 2
                    && p.coords()[0] >= lo[0] - tol
                    && p.coords()[0] <= hi[0] + tol
                    && p.coords()[1] >= lo[1] - tol
                    && p.coords()[1] <= hi[1] + tol
            }
        }
    }
}

/// Barycentric coordinates of `p` with respect to triangle `corners`.
pub fn barycentric(corners: &[[f64; 2]; 3], p: &Point) -> [f64; 3] {
    let [a, b, c] = corners;
    let (px, py) = (p.coords()[0], p.coords()[1]);
    let det = (b[1] - c[1]) * (a[0] - c[0]) + (c[0] - b[0]) * (a[1] - c[1]);
    let l0 = ((b[1] - c[1]) * (px - c[0]) + (c[0] - b[0]) * (py - c[1])) / det;
    let l1 = ((c[1] - a[1]) * (px - c[0]) + (a[0] - c[0]) * (py - c[1])) / det;
    [l0, l1, 1.0 - l0 - l1]
}

/// An iterated function system: `N ≥ 2` maps on a common domain.
#[derive(Clone, Debug)]
pub struct IfSystem {
    name: String,
    domain: Domain,
    maps: Vec<MapSpec>,
}

impl IfSystem {
    pub fn new(name: impl Into<String>, domain: Domain, maps: Vec<MapSpec>) -> Result<Self> {
        if maps.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "an IFS needs at least two maps, got {}",
                maps.len()
            )));
        }
        Ok(IfSystem {
            name: name.into(),
            domain,
            maps,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction enforces N >= 2
    }

    pub fn map(&self, i: usize) -> &MapSpec {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[MapSpec] {
        &self.maps
    }

    /// Fixed point of map `i`, bracketed by the domain.
    pub fn fixed_point(&self, i: usize) -> Result<Point> {
        let (lo, hi) = self.domain.bounds();
        self.maps[i].fixed_point(lo, hi, DEFAULT_FIX_TOL)
    }

    /// Left-to-right composition `f_{w1} ∘ … ∘ f_{wn} (x)`; the empty word
    /// is the identity.
    pub fn apply_word(&self, w: &Word, x: Point) -> Point {
        let mut p = x;
        for &i in w.indices().iter().rev() {
            p = self.maps[i].eval(p);
        }
        p
    }

    /// Image `(f_w(lo), f_w(hi))` of the domain interval under a word of
    /// increasing maps.
    pub fn word_image_interval(&self, w: &Word) -> Result<(f64, f64)> {
        let (lo, hi) = self
            .domain
            .interval_bounds()
            .ok_or_else(|| Error::DomainError("word image interval needs a 1-D system".into()))?;
        let a = self.apply_word(w, Point::scalar(lo)).as_scalar();
        let b = self.apply_word(w, Point::scalar(hi)).as_scalar();
        if b < a {
            return Err(Error::DomainError(
                "word image reversed; maps are not increasing".into(),
            ));
        }
        Ok((a, b))
    }

    /// Discrete attractor approximation: every `f_{i1} ∘ … ∘ f_{ik-1}(fix f_{ik})`
    /// for words of length ≤ `depth`, deduplicated at 1e-12.
    ///
    /// For the dyadic interval IFS this is exactly the mesh
    /// `{k/2^j : j ≤ depth-1} ∪ {1}`.
    pub fn attractor_points(&self, depth: usize) -> Result<Vec<Point>> {
        if depth == 0 {
            return Err(Error::InvalidParameter("attractor depth must be ≥ 1".into()));
        }
        let needed = (self.len() as u128).saturating_pow(depth as u32);
        if needed > ENUMERATION_CAP {
            return Err(Error::BudgetExceeded {
                what: "attractor enumeration",
                needed,
                cap: ENUMERATION_CAP,
            });
        }
        let fixes: Vec<Point> = (0..self.len())
            .map(|i| self.fixed_point(i))
            .collect::<Result<_>>()?;
        let mut pts = fixes.clone();
        dedup_points(&mut pts, DEDUP_TOL);
        for _ in 1..depth {
            let mut next = fixes.clone();
            for m in &self.maps {
                next.extend(pts.iter().map(|&p| m.eval(p)));
            }
            dedup_points(&mut next, DEDUP_TOL);
            pts = next;
        }
        Ok(pts)
    }

    /// Verify `∪_i f_i(X) = X` approximately: every point of a domain grid
    /// must lie within `tol` of some point of some image `f_i(grid)`.
    pub fn check_covering(&self, grid_size: usize, tol: f64) -> bool {
        let grid = self.domain_grid(grid_size);
        let images: Vec<Vec<Point>> = self
            .maps
            .iter()
            .map(|m| grid.iter().map(|&p| m.eval(p)).collect())
            .collect();
        grid.iter().all(|p| {
            images
                .iter()
                .flat_map(|im| im.iter())
                .any(|q| p.dist(q) <= tol)
        })
    }

    /// All maps weakly contractive on the domain.
    pub fn check_contractive(&self) -> Option<usize> {
        let (lo, hi) = self.domain.bounds();
        self.maps
            .iter()
            .position(|m| !m.is_weakly_contractive(lo, hi))
    }

    /// Any map parabolic (derivative of modulus 1 at its fixed point)?
    pub fn has_parabolic_map(&self) -> bool {
        let (lo, hi) = self.domain.bounds();
        self.maps.iter().any(|m| m.is_parabolic(lo, hi))
    }

    fn domain_grid(&self, n: usize) -> Vec<Point> {
        match &self.domain {
            Domain::UnitInterval | Domain::Interval { .. } => {
                let (lo, hi) = self.domain.interval_bounds().expect("interval");
                (0..n)
                    .map(|k| Point::scalar(lo + (hi - lo) * k as f64 / (n - 1) as f64))
                    .collect()
            }
            // a coarse attractor stands in for the grid on 2-D carriers
            Domain::Gasket { .. } | Domain::Box2 { .. } => {
                self.attractor_points(5).unwrap_or_default()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn dyadic() -> IfSystem {
        IfSystem::new(
            "dyadic",
            Domain::UnitInterval,
            vec![MapSpec::affine(0.5, 0.0), MapSpec::affine(0.5, 0.5)],
        )
        .unwrap()
    }

    #[test]
    fn apply_word_composes_left_to_right() {
        let ifs = dyadic();
        // f_0(f_1(0)) = f_0(1/2) = 1/4
        let w = Word::from(vec![0, 1]);
        assert_eq!(ifs.apply_word(&w, Point::scalar(0.0)).as_scalar(), 0.25);
        // empty word is the identity
        assert_eq!(
            ifs.apply_word(&Word::empty(), Point::scalar(0.7)).as_scalar(),
            0.7
        );
    }

    #[test]
    fn moebius_word_by_hand() {
        // f_0(x) = x/(x+1): 1 → 1/2 → 1/3
        let ifs = IfSystem::new(
            "moebius-f",
            Domain::UnitInterval,
            vec![
                MapSpec::moebius(1.0, 0.0, 1.0, 1.0),
                MapSpec::moebius(0.0, 1.0, -1.0, 2.0),
            ],
        )
        .unwrap();
        let w = Word::from(vec![0, 0]);
        let y = ifs.apply_word(&w, Point::scalar(1.0)).as_scalar();
        assert!((y - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn word_image_nesting() {
        let ifs = dyadic();
        // f_1(f_0([0,1])) = [1/2, 3/4]
        let (lo, hi) = ifs.word_image_interval(&Word::from(vec![1, 0])).unwrap();
        assert_eq!((lo, hi), (0.5, 0.75));
        // prefix image contains the full image
        let (plo, phi) = ifs.word_image_interval(&Word::from(vec![1])).unwrap();
        assert!(plo <= lo && hi <= phi);
        // empty word gives the domain
        assert_eq!(ifs.word_image_interval(&Word::empty()).unwrap(), (0.0, 1.0));
    }

    #[test]
    fn attractor_points_dyadic_mesh() {
        let ifs = dyadic();
        assert_eq!(
            ifs.attractor_points(1)
                .unwrap()
                .iter()
                .map(Point::as_scalar)
                .collect::<Vec<_>>(),
            vec![0.0, 1.0]
        );
        // depth n = the mesh {k/2^(n-1)}
        for depth in 2..=5usize {
            let pts = ifs.attractor_points(depth).unwrap();
            let step = 1.0 / (1u64 << (depth - 1)) as f64;
            let expect: Vec<f64> = (0..=(1u64 << (depth - 1))).map(|k| k as f64 * step).collect();
            let got: Vec<f64> = pts.iter().map(Point::as_scalar).collect();
            assert_eq!(got, expect, "depth {depth}");
        }
    }

    #[test]
    fn attractor_budget() {
        let ifs = dyadic();
        assert!(matches!(
            ifs.attractor_points(40),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn gasket_corners_at_depth_one() {
        let q = [[0.0, 0.0], [1.0, 0.0], [0.5, 3f64.sqrt() / 2.0]];
        let maps = q
            .iter()
            .map(|c| MapSpec::similarity2(0.5, [c[0] / 2.0, c[1] / 2.0]))
            .collect();
        let ifs = IfSystem::new("gasket", Domain::Gasket { corners: q }, maps).unwrap();
        let pts = ifs.attractor_points(1).unwrap();
        assert_eq!(pts.len(), 3);
        for c in &q {
            assert!(pts.iter().any(|p| p.dist(&Point::xy(c[0], c[1])) < 1e-12));
        }
    }

    #[test]
    fn covering_holds_for_dyadic() {
        assert!(dyadic().check_covering(101, 1e-6));
    }

    #[test]
    fn covering_fails_with_gap() {
        let ifs = IfSystem::new(
            "gappy",
            Domain::UnitInterval,
            vec![MapSpec::affine(0.4, 0.0), MapSpec::affine(0.4, 0.6)],
        )
        .unwrap();
        assert!(!ifs.check_covering(101, 1e-3));
    }
}
