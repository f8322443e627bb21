//! Orthogonal-distance regression of a straight line in 3D.
//!
//! The line minimizing the mean squared perpendicular distance to a group of
//! points passes through their center of mass. Its direction is the
//! eigenvector of the smallest eigenvalue of the non-linearity form
//!
//! ```text
//! Q(a, a) = (1/n) Σ |rᵢ × a|² − (1/n²) Σᵢ Σⱼ (rᵢ × a) · (rⱼ × a),
//! ```
//!
//! and that eigenvalue is the attained mean squared distance. When the two
//! smallest eigenvalues coincide the points form a disc and any in-plane
//! direction is optimal; when all three coincide there is no preferred
//! direction at all. [`fit_line`] reports which case applies.
//!
//! ```
//! use fit3d::{fit_line, FitConfig, PointCloud, SpectrumClass, Vec3};
//!
//! let cloud = PointCloud::new(vec![
//!     Vec3::new(0.0, 0.0, 0.0),
//!     Vec3::new(1.0, 1.0, 1.0),
//!     Vec3::new(2.0, 2.0, 2.0),
//! ])?;
//! let fit = fit_line(&cloud, &FitConfig::default())?;
//! assert_eq!(fit.classification, SpectrumClass::Unique);
//! assert!((fit.direction.x - 1.0 / 3f64.sqrt()).abs() < 1e-12);
//! # Ok::<(), fit3d::Error>(())
//! ```

pub mod eigen;
pub mod error;
pub mod fit;
pub mod geometry;
pub mod io;
pub mod nonlinearity;

pub use eigen::{
    classify_spectrum, eigen_sym3, EigenDecomposition, SpectrumClass, DEFAULT_REL_TOL,
};
pub use error::Error;
pub use fit::{fit_line, residual_report, FitConfig, FitResult};
pub use geometry::{
    closest_point, cross, dot, evaluate, moment_residual, norm, point_line_distance,
    to_moment_form, LineMoment, LineParametric, Vec3,
};
pub use nonlinearity::{
    centroid, mean_square_distance, nonlinearity_matrix, optimal_moment, quadratic_form_value,
    PointCloud, SymMat3,
};
