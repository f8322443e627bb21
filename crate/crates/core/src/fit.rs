//! Optimal root-mean-square line for a point group.
//!
//! The line minimizing the mean squared orthogonal distance passes through
//! the center of mass and points along the eigenvector of the smallest
//! eigenvalue of the non-linearity form. That eigenvalue is the minimal mean
//! squared distance itself; the reported value is summed from the residuals
//! of the fitted line, which stays accurate when it is close to zero.

use crate::eigen::{self, EigenDecomposition, SpectrumClass, DEFAULT_REL_TOL};
use crate::error::Error;
use crate::geometry::{LineMoment, LineParametric, Vec3};
use crate::nonlinearity::{centroid, mean_square_distance, nonlinearity_matrix, PointCloud};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitConfig {
    /// Relative eigenvalue gap below which two eigenvalues count as equal.
    pub degeneracy_rel_tol: f64,
    /// Fail with [`Error::Degenerate`] instead of returning a non-unique line.
    pub strict_degenerate: bool,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            degeneracy_rel_tol: DEFAULT_REL_TOL,
            strict_degenerate: false,
        }
    }
}

impl FitConfig {
    pub fn with_tolerance(mut self, rel_tol: f64) -> Self {
        self.degeneracy_rel_tol = rel_tol;
        self
    }

    pub fn strict(mut self, strict: bool) -> Self {
        self.strict_degenerate = strict;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitResult {
    pub centroid: Vec3,
    /// Unit direction; eigenvector of the smallest eigenvalue.
    pub direction: Vec3,
    /// `centroid × direction`.
    pub moment: Vec3,
    pub eigenvalues: [f64; 3],
    /// Mean of the squared point-to-line distances.
    pub mean_square_distance: f64,
    pub rms_distance: f64,
    pub classification: SpectrumClass,
    pub n_points: usize,
}

impl FitResult {
    pub fn line(&self) -> LineMoment {
        LineMoment::from_parts_unchecked(self.direction, self.moment)
    }

    /// The fitted line anchored at the centroid.
    pub fn parametric(&self) -> LineParametric {
        LineParametric::new(self.centroid, self.direction)
            .expect("fitted direction is a unit vector")
    }
}

/// Fits the optimal root-mean-square line to `cloud`.
pub fn fit_line(cloud: &PointCloud, config: &FitConfig) -> Result<FitResult, Error> {
    let center = centroid(cloud);
    let m = nonlinearity_matrix(cloud);
    let eig: EigenDecomposition = eigen::eigen_sym3(&m)?;
    let classification = eigen::classify_spectrum(&eig, config.degeneracy_rel_tol);
    if config.strict_degenerate && classification.is_degenerate() {
        return Err(Error::Degenerate {
            class: classification,
            eigenvalues: eig.values,
        });
    }

    let direction = eig.min_vector();
    let moment = center.cross(direction);
    // Equals λ₁ at the optimum, but λ₁ carries roundoff of order ε·λ₃, which
    // swamps the true value for (nearly) collinear points.
    let msd = mean_square_distance(cloud, &LineMoment::from_parts_unchecked(direction, moment));
    Ok(FitResult {
        centroid: center,
        direction,
        moment,
        eigenvalues: eig.values,
        mean_square_distance: msd,
        rms_distance: msd.sqrt(),
        classification,
        n_points: cloud.len(),
    })
}

/// Per-point distances to the fitted line, in input order.
pub fn residual_report(cloud: &PointCloud, result: &FitResult) -> Result<Vec<f64>, Error> {
    if cloud.len() != result.n_points {
        return Err(Error::LengthMismatch {
            expected: result.n_points,
            found: cloud.len(),
        });
    }
    let line = result.line();
    Ok(cloud.iter().map(|&p| line.residual(p)).collect())
}
