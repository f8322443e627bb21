//! Brute-force reference evaluators shared by the integration tests.
//!
//! Nothing here goes through the centered matrix or the eigensolver: the
//! non-linearity form is evaluated as the literal double sum, distances come
//! from the parametric formula, and the best direction is found by exhaustive
//! search over a Fibonacci sphere.

#![allow(dead_code)]

use fit3d::{PointCloud, SymMat3, Vec3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_vec(rng: &mut impl Rng, lo: f64, hi: f64) -> Vec3 {
    Vec3::new(
        rng.gen_range(lo..hi),
        rng.gen_range(lo..hi),
        rng.gen_range(lo..hi),
    )
}

pub fn unit_vec(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = uniform_vec(rng, -1.0, 1.0);
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n;
        }
    }
}

/// `n` points with coordinates uniform in `[-1, 1]`.
pub fn random_cloud(rng: &mut impl Rng, n: usize) -> PointCloud {
    PointCloud::new((0..n).map(|_| uniform_vec(rng, -1.0, 1.0)).collect()).unwrap()
}

pub fn cloud_of(pts: &[[f64; 3]]) -> PointCloud {
    PointCloud::new(pts.iter().map(|&p| Vec3::from(p)).collect()).unwrap()
}

pub fn planar_square() -> PointCloud {
    cloud_of(&[[1., 1., 0.], [1., -1., 0.], [-1., 1., 0.], [-1., -1., 0.]])
}

pub fn cube() -> PointCloud {
    let mut pts = Vec::new();
    for x in [-1., 1.] {
        for y in [-1., 1.] {
            for z in [-1., 1.] {
                pts.push([x, y, z]);
            }
        }
    }
    cloud_of(&pts)
}

pub fn collinear_triple() -> PointCloud {
    cloud_of(&[[0., 0., 0.], [1., 0., 0.], [2., 0., 0.]])
}

/// Rotation matrix, rows first.
#[derive(Clone, Copy, Debug)]
pub struct Rotation(pub [[f64; 3]; 3]);

impl Rotation {
    /// Uniformly random rotation from a normalized quaternion.
    pub fn random(rng: &mut impl Rng) -> Self {
        let (w, x, y, z) = loop {
            let q: [f64; 4] = [
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ];
            let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
            if n > 1e-3 && n <= 1.0 {
                break (q[0] / n, q[1] / n, q[2] / n, q[3] / n);
            }
        };
        Rotation([
            [
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - w * z),
                2.0 * (x * z + w * y),
            ],
            [
                2.0 * (x * y + w * z),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - w * x),
            ],
            [
                2.0 * (x * z - w * y),
                2.0 * (y * z + w * x),
                1.0 - 2.0 * (x * x + y * y),
            ],
        ])
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        let r = &self.0;
        Vec3::new(
            r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
            r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
            r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z,
        )
    }

    /// `R M Rᵀ`.
    pub fn conjugate(&self, m: &SymMat3) -> SymMat3 {
        let a = m.to_rows();
        let r = &self.0;
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0.0;
                for k in 0..3 {
                    for l in 0..3 {
                        acc += r[i][k] * a[k][l] * r[j][l];
                    }
                }
                out[i][j] = acc;
            }
        }
        SymMat3::from_upper(out)
    }
}

pub fn transform_cloud(cloud: &PointCloud, rot: &Rotation, shift: Vec3) -> PointCloud {
    PointCloud::new(cloud.iter().map(|&p| rot.apply(p) + shift).collect()).unwrap()
}

/// The non-linearity form evaluated term by term, double sum included:
/// `(1/n) Σ |rᵢ × a|² − (1/n²) Σᵢ Σⱼ (rᵢ × a)·(rⱼ × a)`.
pub fn literal_q(cloud: &PointCloud, a: Vec3) -> f64 {
    let pts = cloud.points();
    let n = pts.len() as f64;
    let single: f64 = pts.iter().map(|&r| r.cross(a).norm_squared()).sum::<f64>() / n;
    let mut double = 0.0;
    for &ri in pts {
        for &rj in pts {
            double += ri.cross(a).dot(rj.cross(a));
        }
    }
    single - double / (n * n)
}

/// Mean of squared distances to the line through `point` along `direction`,
/// with each distance `|(rᵢ − r0) × a| / |a|`.
pub fn literal_mean_square(cloud: &PointCloud, point: Vec3, direction: Vec3) -> f64 {
    let len = direction.norm();
    let sum: f64 = cloud
        .iter()
        .map(|&r| {
            let d = (r - point).cross(direction).norm() / len;
            d * d
        })
        .sum();
    sum / cloud.len() as f64
}

/// Objective for direction `a` with the moment chosen as `(1/n) Σ rᵢ × a`,
/// written out without going through the library.
pub fn objective_with_best_moment(cloud: &PointCloud, a: Vec3) -> f64 {
    let pts = cloud.points();
    let n = pts.len() as f64;
    let b = pts.iter().fold(Vec3::ZERO, |acc, &r| acc + r.cross(a)) / n;
    pts.iter()
        .map(|&r| (r.cross(a) - b).norm_squared())
        .sum::<f64>()
        / n
}

/// `K` quasi-uniform unit directions on the Fibonacci sphere.
pub struct SphereGrid {
    directions: Vec<Vec3>,
}

impl SphereGrid {
    pub fn fibonacci(k: usize) -> Self {
        let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
        let directions = (0..k)
            .map(|i| {
                let z = 1.0 - (2 * i + 1) as f64 / k as f64;
                let r = (1.0 - z * z).max(0.0).sqrt();
                let phi = golden * i as f64;
                Vec3::new(r * phi.cos(), r * phi.sin(), z)
            })
            .collect();
        Self { directions }
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn directions(&self) -> &[Vec3] {
        &self.directions
    }
}

/// Grid direction with the smallest objective; ties go to the lowest index.
pub fn sphere_search(cloud: &PointCloud, grid: &SphereGrid) -> (Vec3, f64) {
    assert!(
        grid.len() >= 1000,
        "sphere search needs at least 1000 directions"
    );
    let mut best = (grid.directions[0], f64::INFINITY);
    for &a in &grid.directions {
        let value = objective_with_best_moment(cloud, a);
        if value < best.1 {
            best = (a, value);
        }
    }
    best
}

/// Angle between two lines (direction sign ignored), in radians.
pub fn line_angle(a: Vec3, b: Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b).abs())
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
