//! Eigendecomposition of symmetric 3×3 matrices by cyclic Jacobi rotations,
//! and classification of the resulting spectrum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geometry::Vec3;
use crate::nonlinearity::SymMat3;

/// Sweeps stop once the off-diagonal Frobenius norm drops to this fraction
/// of the full Frobenius norm.
pub const CONVERGENCE_TOL: f64 = 1e-14;
pub const MAX_SWEEPS: usize = 50;

/// Default relative tolerance for spotting repeated eigenvalues.
pub const DEFAULT_REL_TOL: f64 = 1e-6;

const SCALE_FLOOR: f64 = 1e-300;

/// Ascending eigenvalues with matching orthonormal eigenvectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenDecomposition {
    pub values: [f64; 3],
    pub vectors: [Vec3; 3],
}

impl EigenDecomposition {
    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    pub fn max_value(&self) -> f64 {
        self.values[2]
    }

    /// Eigenvector paired with the smallest eigenvalue.
    pub fn min_vector(&self) -> Vec3 {
        self.vectors[0]
    }

    /// `Σ λₖ vₖ vₖᵀ`.
    pub fn reconstruct(&self) -> SymMat3 {
        let mut rows = [[0.0; 3]; 3];
        for (lambda, v) in self.values.iter().zip(&self.vectors) {
            for (i, row) in rows.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += lambda * v[i] * v[j];
                }
            }
        }
        SymMat3::from_upper(rows)
    }
}

/// Shape of a point group as read off the non-linearity spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumClass {
    /// `λ₁ < λ₂`: a single best direction.
    Unique,
    /// `λ₁ = λ₂ < λ₃`: every direction in a plane is equally good.
    DiscDegenerate,
    /// `λ₁ = λ₂ = λ₃`: every direction is equally good.
    BallDegenerate,
}

impl SpectrumClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumClass::Unique => "unique",
            SpectrumClass::DiscDegenerate => "disc_degenerate",
            SpectrumClass::BallDegenerate => "ball_degenerate",
        }
    }

    pub fn is_degenerate(self) -> bool {
        self != SpectrumClass::Unique
    }

    /// 0 for unique, 1 for disc, 2 for ball.
    pub fn degeneracy_rank(self) -> u8 {
        match self {
            SpectrumClass::Unique => 0,
            SpectrumClass::DiscDegenerate => 1,
            SpectrumClass::BallDegenerate => 2,
        }
    }
}

impl fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn off_diagonal_norm(a: &[[f64; 3]; 3]) -> f64 {
    (2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2])).sqrt()
}

/// Diagonalizes `m` with cyclic Jacobi sweeps over the pairs (0,1), (0,2), (1,2).
///
/// Eigenvalues come back ascending (stable with respect to the order Jacobi
/// leaves them in). Each eigenvector is flipped so that its largest-magnitude
/// component is positive, the lowest index winning ties.
pub fn eigen_sym3(m: &SymMat3) -> Result<EigenDecomposition, Error> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut a = m.to_rows();
    // Columns of `v` accumulate the rotations.
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let threshold = CONVERGENCE_TOL * m.frobenius_norm();

    let mut converged = off_diagonal_norm(&a) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for &(p, q) in &[(0usize, 1usize), (0, 2), (1, 2)] {
            rotate(&mut a, &mut v, p, q);
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence);
    }

    let column = |k: usize| Vec3::new(v[0][k], v[1][k], v[2][k]);
    let mut pairs = [
        (a[0][0], column(0)),
        (a[1][1], column(1)),
        (a[2][2], column(2)),
    ];
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    Ok(EigenDecomposition {
        values: [pairs[0].0, pairs[1].0, pairs[2].0],
        vectors: [
            canonical_sign(pairs[0].1),
            canonical_sign(pairs[1].1),
            canonical_sign(pairs[2].1),
        ],
    })
}

/// One Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut [[f64; 3]; 3], v: &mut [[f64; 3]; 3], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let app = a[p][p];
    let aqq = a[q][q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t² + 2θt − 1 = 0, i.e. rotation angle ≤ π/4.
    let t = if theta.is_finite() {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    } else {
        // |θ| overflowed: the rotation is negligible but still well defined.
        1.0 / (2.0 * theta)
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p][p] = app - t * apq;
    a[q][q] = aqq + t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;

    let r = 3 - p - q;
    let arp = a[r][p];
    let arq = a[r][q];
    a[r][p] = arp - s * (arq + tau * arp);
    a[p][r] = a[r][p];
    a[r][q] = arq + s * (arp - tau * arq);
    a[q][r] = a[r][q];

    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = vp - s * (vq + tau * vp);
        row[q] = vq + s * (vp - tau * vq);
    }
}

fn canonical_sign(v: Vec3) -> Vec3 {
    let mut lead = 0;
    for i in 1..3 {
        if v[i].abs() > v[lead].abs() {
            lead = i;
        }
    }
    if v[lead] < 0.0 {
        -v
    } else {
        v
    }
}

/// Labels the spectrum as unique, disc- or ball-degenerate.
///
/// Eigenvalue gaps are compared against `rel_tol * max(λ₃, 1e-300)`.
pub fn classify_spectrum(e: &EigenDecomposition, rel_tol: f64) -> SpectrumClass {
    let [l1, l2, l3] = e.values;
    let scale = l3.max(SCALE_FLOOR);
    if l3 - l1 <= rel_tol * scale {
        SpectrumClass::BallDegenerate
    } else if l2 - l1 <= rel_tol * scale {
        SpectrumClass::DiscDegenerate
    } else {
        SpectrumClass::Unique
    }
}
