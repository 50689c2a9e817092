//! Frame changes between coordinate bases and orthonormal frames.
//!
//! The constant-curvature shift and the inverse formula are stated for
//! orthonormal frames. Coordinate-basis pipelines therefore convert their
//! tensors through the Gram factor of `g` before deciding anything; the sign
//! of `|R~|` and the zero set of the obstruction vector are basis
//! independent, so verdict statuses do not depend on this step.

/// Cholesky factor `L` (lower triangular) of a symmetric positive-definite
/// 3x3 matrix, or `None` when the matrix is not positive definite.
pub fn cholesky3(g: &[[f64; 3]; 3]) -> Option<[[f64; 3]; 3]> {
    let mut l = [[0.0_f64; 3]; 3];
    for i in 0..3 {
        for j in 0..=i {
            let mut sum = g[i][j];
            for k in 0..j {
                sum -= l[i][k] * l[j][k];
            }
            if i == j {
                if sum <= 0.0 {
                    return None;
                }
                l[i][j] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    Some(l)
}

/// Basis matrix `B` (columns are the orthonormal frame vectors in the
/// coordinate basis) with `B^T g B = I`; computed as `L^{-T}` from the
/// Cholesky factor.
pub fn orthonormal_frame(g: &[[f64; 3]; 3]) -> Option<[[f64; 3]; 3]> {
    let l = cholesky3(g)?;
    // invert the lower-triangular factor, then transpose
    let mut inv = [[0.0_f64; 3]; 3];
    for i in 0..3 {
        inv[i][i] = 1.0 / l[i][i];
        for j in 0..i {
            let mut sum = 0.0;
            for k in j..i {
                sum += l[i][k] * inv[k][j];
            }
            inv[i][j] = -sum / l[i][i];
        }
    }
    let mut b = [[0.0_f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            b[i][j] = inv[j][i];
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_normalizes_metric() {
        let g = [[4.0, 1.0, 0.5], [1.0, 3.0, -0.25], [0.5, -0.25, 2.0]];
        let b = orthonormal_frame(&g).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0.0;
                for p in 0..3 {
                    for q in 0..3 {
                        acc += b[p][i] * g[p][q] * b[q][j];
                    }
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((acc - expect).abs() < 1e-12, "({i},{j}) -> {acc}");
            }
        }
    }

    #[test]
    fn rejects_indefinite() {
        let g = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        assert!(orthonormal_frame(&g).is_none());
    }
}
