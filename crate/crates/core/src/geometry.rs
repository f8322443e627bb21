//! Vector algebra in 3D and the two line representations used by the fitter.
//!
//! A line is either given parametrically, `r = r0 + a t`, or by its direction
//! and moment vector, `r × a = b` with `b ⊥ a`. The moment `b = r0 × a` does
//! not depend on which point `r0` of the line is chosen.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Tolerance on `|direction| = 1` for constructed lines.
pub const UNIT_TOL: f64 = 1e-12;

/// Orthogonality violations of the moment below this are projected away;
/// larger ones are rejected.
pub const MOMENT_REPROJECT_TOL: f64 = 1e-8;

/// A point or free vector in 3D Euclidean space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Checked constructor for coordinates coming from outside the crate.
    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        let v = Self::new(x, y, z);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Returns `None` for the zero vector (or one whose norm is not finite).
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self / n)
        } else {
            None
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> Self {
        v.to_array()
    }
}

impl Index<usize> for Vec3 {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3 index out of range: {i}"),
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    #[inline]
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    #[inline]
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    #[inline]
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    #[inline]
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[inline]
pub fn cross(u: Vec3, v: Vec3) -> Vec3 {
    u.cross(v)
}

#[inline]
pub fn dot(u: Vec3, v: Vec3) -> f64 {
    u.dot(v)
}

#[inline]
pub fn norm(u: Vec3) -> f64 {
    u.norm()
}

/// Line in parametric form `r = point + direction * t`, with a unit direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineParametric {
    point: Vec3,
    direction: Vec3,
}

impl LineParametric {
    /// Normalizes `direction`; rejects a zero or non-finite direction.
    pub fn new(point: Vec3, direction: Vec3) -> Result<Self, Error> {
        if !point.is_finite() {
            return Err(Error::NonFinite);
        }
        let direction = direction.normalized().ok_or(Error::ZeroDirection)?;
        Ok(Self { point, direction })
    }

    pub fn point(&self) -> Vec3 {
        self.point
    }

    pub fn direction(&self) -> Vec3 {
        self.direction
    }

    /// The point `r0 + a t`.
    pub fn evaluate(&self, t: f64) -> Vec3 {
        self.point + self.direction * t
    }

    /// Converts to `(a, b)` with `b = r0 × a`.
    pub fn to_moment_form(&self) -> LineMoment {
        LineMoment {
            direction: self.direction,
            moment: self.point.cross(self.direction),
        }
    }

    /// Orthogonal distance `|(p − r0) × a| / |a|`.
    pub fn distance(&self, p: Vec3) -> f64 {
        (p - self.point).cross(self.direction).norm() / self.direction.norm()
    }

    /// Foot of the perpendicular from `p`.
    pub fn closest_point(&self, p: Vec3) -> Vec3 {
        self.point + self.direction * (p - self.point).dot(self.direction)
    }
}

/// Line in non-parametric form `r × a = b`, `|a| = 1`, `b ⊥ a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineMoment {
    direction: Vec3,
    moment: Vec3,
}

impl LineMoment {
    /// Normalizes `direction` and rescales `moment` with it, then projects
    /// out any small component of the moment along the direction.
    pub fn new(direction: Vec3, moment: Vec3) -> Result<Self, Error> {
        if !direction.is_finite() || !moment.is_finite() {
            return Err(Error::NonFinite);
        }
        let len = direction.norm();
        let a = direction.normalized().ok_or(Error::ZeroDirection)?;
        // r × (λa) = λb, so the moment scales with the direction.
        let b = moment / len;
        let along = a.dot(b);
        let limit = MOMENT_REPROJECT_TOL * b.norm().max(1.0);
        if along.abs() > limit {
            return Err(Error::InconsistentMoment { along });
        }
        Ok(Self {
            direction: a,
            moment: b - a * along,
        })
    }

    pub(crate) fn from_parts_unchecked(direction: Vec3, moment: Vec3) -> Self {
        Self { direction, moment }
    }

    pub fn direction(&self) -> Vec3 {
        self.direction
    }

    pub fn moment(&self) -> Vec3 {
        self.moment
    }

    /// Distance `|p × a − b|` from `p` to the line.
    pub fn residual(&self, p: Vec3) -> f64 {
        (p.cross(self.direction) - self.moment).norm()
    }

    /// The point of the line nearest the origin, `a × b`.
    pub fn nearest_to_origin(&self) -> Vec3 {
        self.direction.cross(self.moment)
    }

    pub fn to_parametric(&self) -> LineParametric {
        LineParametric {
            point: self.nearest_to_origin(),
            direction: self.direction,
        }
    }
}

pub fn evaluate(line: &LineParametric, t: f64) -> Vec3 {
    line.evaluate(t)
}

pub fn to_moment_form(line: &LineParametric) -> LineMoment {
    line.to_moment_form()
}

pub fn point_line_distance(p: Vec3, line: &LineParametric) -> f64 {
    line.distance(p)
}

pub fn moment_residual(p: Vec3, line: &LineMoment) -> f64 {
    line.residual(p)
}

pub fn closest_point(p: Vec3, line: &LineParametric) -> Vec3 {
    line.closest_point(p)
}
