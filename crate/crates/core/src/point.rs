//! Points in the spaces the toolkit works with: the line, the plane, and
//! product spaces of those (solution graphs live in a product).
//!
//! A `Point` stores up to three coordinates with an explicit dimension. The
//! product metric is the root-sum-square of the component metrics, which is
//! exactly the Euclidean metric on the concatenated coordinates, so one
//! distance function covers every case.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    dim: u8,
    coords: [f64; 3],
}

impl Point {
    pub fn scalar(x: f64) -> Self {
        Point {
            dim: 1,
            coords: [x, 0.0, 0.0],
        }
    }

    pub fn xy(x: f64, y: f64) -> Self {
        Point {
            dim: 2,
            coords: [x, y, 0.0],
        }
    }

    pub fn xyz(x: f64, y: f64, z: f64) -> Self {
        Point {
            dim: 3,
            coords: [x, y, z],
        }
    }

    /// Concatenate two points into a product-space point.
    pub fn product(a: Point, b: Point) -> Self {
        let mut coords = [0.0; 3];
        let dim = a.dim + b.dim;
        assert!(dim <= 3, "product dimension {dim} > 3");
        coords[..a.dim as usize].copy_from_slice(&a.coords[..a.dim as usize]);
        for k in 0..b.dim as usize {
            coords[a.dim as usize + k] = b.coords[k];
        }
        Point { dim, coords }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords[..self.dim as usize]
    }

    /// The sole coordinate of a 1-D point.
    ///
    /// Panics if the point is not 1-D; interval-only code paths rely on this.
    pub fn as_scalar(&self) -> f64 {
        assert_eq!(self.dim, 1, "expected a 1-D point, got dim {}", self.dim);
        self.coords[0]
    }

    pub fn dist(&self, other: &Point) -> f64 {
        assert_eq!(
            self.dim, other.dim,
            "distance between points of different dimension"
        );
        let mut s = 0.0;
        for k in 0..self.dim as usize {
            let d = self.coords[k] - other.coords[k];
            s += d * d;
        }
        s.sqrt()
    }

    pub fn approx_eq(&self, other: &Point, tol: f64) -> bool {
        self.dim == other.dim && self.dist(other) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|c| c.is_finite())
    }
}

impl From<f64> for Point {
    fn from(x: f64) -> Self {
        Point::scalar(x)
    }
}

/// Sort points lexicographically and merge any that coincide within `tol`
/// (coordinate-wise). Used for attractor point sets and grid outputs.
pub fn dedup_points(points: &mut Vec<Point>, tol: f64) {
    points.sort_by(|a, b| {
        a.coords()
            .partial_cmp(b.coords())
            .expect("non-finite point in dedup")
    });
    points.dedup_by(|a, b| {
        a.dim() == b.dim()
            && a.coords()
                .iter()
                .zip(b.coords())
                .all(|(x, y)| (x - y).abs() <= tol)
    });
}
