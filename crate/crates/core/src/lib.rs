//! Pointwise machinery for the local isometric embedding problem of
//! 3-dimensional Riemannian metrics into 4-space.
//!
//! Everything in this crate works on the value level at a single point: the
//! curvature tensor `R`, its covariant derivative `S`, candidate second
//! fundamental forms `α` and their derivatives `β`, the determinant
//! obstruction `|R~|`, the six degree-(2,1) obstruction polynomials
//! `r1..r6`, and the decision procedure that combines them.
//!
//! All types are generic over the scalar kind: exact rationals for oracle
//! suites and identity-grade checks, `f64` for the numeric geometry
//! pipelines. Values are immutable after construction and all operations are
//! pure functions, so everything here is safe to share across threads.

pub mod embed;
pub mod frame;
pub mod oracle;
pub mod rivertz;
pub mod scalar;
pub mod tensor;
pub mod tol;

pub use embed::{
    beta0, codazzi_residual, gauss_solvability, h0_coeffs, invert_gauss,
    solve_linear_gauss_system, verdict, verdict_with_flat, EmbedError, GaussSolvability, H0Coeffs,
    InconclusiveReason, NotReason, Tolerances, Verdict, VerdictStatus,
};
pub use rivertz::{rivertz, rivertz_raw, rivertz_via_determinants};
pub use scalar::{Rat, Scalar};
pub use tensor::{
    derived_gauss_s, derived_gauss_s_raw, det_a, det_r_tilde, gauss_r, shift_constant_curvature,
    BianchiMode, CovCurvature, Curvature, PartialSym3, SymForm2, SymForm3, TensorError,
};
