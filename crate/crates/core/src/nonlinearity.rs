//! Center of mass and the non-linearity form of a point group.
//!
//! For a unit direction `a` the mean squared distance to the best line with
//! that direction is the quadratic form `Q(a, a) = aᵀ M a`, where
//!
//! ```text
//! M = (1/n) Σ (|sᵢ|² I − sᵢ sᵢᵀ),   sᵢ = rᵢ − r_cm.
//! ```
//!
//! `M` is the inertia tensor of unit masses placed at the centered points.

use crate::error::Error;
use crate::geometry::{LineMoment, Vec3};

/// A non-empty, ordered group of points with finite coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec3>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec3>) -> Result<Self, Error> {
        if points.is_empty() {
            return Err(Error::EmptyCloud);
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec3> {
        self.points.iter()
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounds(&self) -> (Vec3, Vec3) {
        let first = self.points[0];
        self.points
            .iter()
            .skip(1)
            .fold((first, first), |(lo, hi), p| {
                (
                    Vec3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z)),
                    Vec3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z)),
                )
            })
    }
}

impl TryFrom<Vec<Vec3>> for PointCloud {
    type Error = Error;

    fn try_from(points: Vec<Vec3>) -> Result<Self, Error> {
        PointCloud::new(points)
    }
}

impl<'a> IntoIterator for &'a PointCloud {
    type Item = &'a Vec3;
    type IntoIter = std::slice::Iter<'a, Vec3>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Symmetric 3×3 matrix, upper triangle stored.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SymMat3 {
    pub m11: f64,
    pub m12: f64,
    pub m13: f64,
    pub m22: f64,
    pub m23: f64,
    pub m33: f64,
}

impl SymMat3 {
    pub const ZERO: SymMat3 = SymMat3::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);

    pub const fn new(m11: f64, m12: f64, m13: f64, m22: f64, m23: f64, m33: f64) -> Self {
        Self {
            m11,
            m12,
            m13,
            m22,
            m23,
            m33,
        }
    }

    pub const fn diag(d1: f64, d2: f64, d3: f64) -> Self {
        Self::new(d1, 0.0, 0.0, d2, 0.0, d3)
    }

    pub const fn identity() -> Self {
        Self::diag(1.0, 1.0, 1.0)
    }

    /// Builds from full rows, reading only the upper triangle.
    pub fn from_upper(rows: [[f64; 3]; 3]) -> Self {
        Self::new(
            rows[0][0], rows[0][1], rows[0][2], rows[1][1], rows[1][2], rows[2][2],
        )
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        match (i, j) {
            (0, 0) => self.m11,
            (0, 1) => self.m12,
            (0, 2) => self.m13,
            (1, 1) => self.m22,
            (1, 2) => self.m23,
            (2, 2) => self.m33,
            _ => panic!("SymMat3 index out of range: ({i}, {j})"),
        }
    }

    pub fn to_rows(&self) -> [[f64; 3]; 3] {
        [
            [self.m11, self.m12, self.m13],
            [self.m12, self.m22, self.m23],
            [self.m13, self.m23, self.m33],
        ]
    }

    pub fn is_finite(&self) -> bool {
        [self.m11, self.m12, self.m13, self.m22, self.m23, self.m33]
            .iter()
            .all(|v| v.is_finite())
    }

    pub fn mul_vec(&self, v: Vec3) -> Vec3 {
        Vec3::new(
            self.m11 * v.x + self.m12 * v.y + self.m13 * v.z,
            self.m12 * v.x + self.m22 * v.y + self.m23 * v.z,
            self.m13 * v.x + self.m23 * v.y + self.m33 * v.z,
        )
    }

    /// `aᵀ M a`.
    pub fn quadratic_form(&self, a: Vec3) -> f64 {
        a.dot(self.mul_vec(a))
    }

    pub fn trace(&self) -> f64 {
        self.m11 + self.m22 + self.m33
    }

    pub fn determinant(&self) -> f64 {
        self.m11 * (self.m22 * self.m33 - self.m23 * self.m23)
            - self.m12 * (self.m12 * self.m33 - self.m23 * self.m13)
            + self.m13 * (self.m12 * self.m23 - self.m22 * self.m13)
    }

    pub fn frobenius_norm(&self) -> f64 {
        let diag = self.m11 * self.m11 + self.m22 * self.m22 + self.m33 * self.m33;
        let off = self.m12 * self.m12 + self.m13 * self.m13 + self.m23 * self.m23;
        (diag + 2.0 * off).sqrt()
    }

    /// Largest absolute entry difference.
    pub fn max_abs_diff(&self, other: &SymMat3) -> f64 {
        let a = self.to_rows();
        let b = other.to_rows();
        (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| (a[i][j] - b[i][j]).abs())
            .fold(0.0, f64::max)
    }
}

/// Center of mass with unit masses, `(1/n) Σ rᵢ`.
pub fn centroid(cloud: &PointCloud) -> Vec3 {
    let sum = cloud.iter().fold(Vec3::ZERO, |acc, &p| acc + p);
    sum / cloud.len() as f64
}

/// Matrix of the non-linearity form, assembled from centered points.
pub fn nonlinearity_matrix(cloud: &PointCloud) -> SymMat3 {
    let center = centroid(cloud);
    // Second moments of the centered points; |s|² I − s sᵀ follows from them.
    let (mut sxx, mut syy, mut szz) = (0.0, 0.0, 0.0);
    let (mut sxy, mut sxz, mut syz) = (0.0, 0.0, 0.0);
    for &p in cloud {
        let s = p - center;
        sxx += s.x * s.x;
        syy += s.y * s.y;
        szz += s.z * s.z;
        sxy += s.x * s.y;
        sxz += s.x * s.z;
        syz += s.y * s.z;
    }
    let n = cloud.len() as f64;
    SymMat3::new(
        (syy + szz) / n,
        -sxy / n,
        -sxz / n,
        (sxx + szz) / n,
        -syz / n,
        (sxx + syy) / n,
    )
}

pub fn quadratic_form_value(m: &SymMat3, a: Vec3) -> f64 {
    m.quadratic_form(a)
}

/// Best moment for a given unit direction: `(1/n) Σ rᵢ × a`.
///
/// Equal to `centroid × a`. The caller supplies `|a| = 1`.
pub fn optimal_moment(cloud: &PointCloud, a: Vec3) -> Vec3 {
    let sum = cloud.iter().fold(Vec3::ZERO, |acc, &p| acc + p.cross(a));
    sum / cloud.len() as f64
}

/// Mean of squared distances `(1/n) Σ |rᵢ × a − b|²`.
pub fn mean_square_distance(cloud: &PointCloud, line: &LineMoment) -> f64 {
    let a = line.direction();
    let b = line.moment();
    let sum: f64 = cloud.iter().map(|&p| (p.cross(a) - b).norm_squared()).sum();
    sum / cloud.len() as f64
}
