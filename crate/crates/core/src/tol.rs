//! Default relative tolerances for the floating-point pipelines.
//!
//! Exact-rational runs never consult these. Each value is scaled by a norm
//! of the tensor it gates, so the thresholds are dimensionless.

/// Nondegeneracy band for `|R~|`, relative to the Frobenius norm cubed of
/// the pair matrix. Inside the band the verdict is inconclusive.
pub const ND: f64 = 1e-8;

/// Rivertz vector norm, relative to `|R|^2 |S|`.
pub const RIVERTZ: f64 = 1e-7;

/// Residual of the quadratic curvature relation after inverting it,
/// relative to the max-norm of `R`.
pub const GAUSS: f64 = 1e-9;

/// Last-index symmetry defect of the reconstructed derivative tensor,
/// relative to its max-norm.
pub const CODAZZI: f64 = 1e-6;

/// Cyclic-sum residual accepted by strict tensor construction, relative to
/// the max-norm of the tensor.
pub const BIANCHI: f64 = 1e-8;

/// Curvature max-norm below which a point is reported flat, relative to
/// the squared metric scale.
pub const FLAT: f64 = 1e-9;

/// Gross disagreement factor between the obstruction test and the symmetry
/// residual before the verdict aborts as internally inconsistent.
pub const INCONSISTENCY_FACTOR: f64 = 100.0;
