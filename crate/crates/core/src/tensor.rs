//! Value types for the pointwise tensors: symmetric 2- and 3-tensors,
//! curvature-like tensors and their covariant derivatives.
//!
//! Only independent components are stored; accessors materialize the index
//! symmetries (and the signs of the antisymmetric pairs), so the symmetry
//! invariants are structural rather than checked.
//!
//! Index conventions throughout: tensor indices run 1..=3. A curvature-like
//! tensor `R` satisfies `R_{ijkl} = -R_{jikl} = -R_{ijlk} = R_{klij}` and is
//! stored on the six slots `1212, 1213, 1223, 1313, 1323, 2323`. A
//! derivative tensor `S` carries the same pair symmetries in its first four
//! indices plus a free fifth index, 18 raw slots, and the cyclic identity
//! `S_{ijklm} + S_{ijlmk} + S_{ijmkl} = 0` cuts those to 15 free parameters.

use crate::scalar::{max_abs, Scalar};
use crate::tol;
use thiserror::Error;

/// Index pairs in canonical order: `(1,2), (1,3), (2,3)`.
pub const PAIRS: [(u8, u8); 3] = [(1, 2), (1, 3), (2, 3)];

/// The six curvature slots as `(i,j,k,l)`.
pub const R_SLOTS: [(u8, u8, u8, u8); 6] = [
    (1, 2, 1, 2),
    (1, 2, 1, 3),
    (1, 2, 2, 3),
    (1, 3, 1, 3),
    (1, 3, 2, 3),
    (2, 3, 2, 3),
];

/// The 18 derivative slots as `(i,j,k,l,m)`, pair-major then `m`.
pub const S_SLOTS: [(u8, u8, u8, u8, u8); 18] = [
    (1, 2, 1, 2, 1),
    (1, 2, 1, 2, 2),
    (1, 2, 1, 2, 3),
    (1, 2, 1, 3, 1),
    (1, 2, 1, 3, 2),
    (1, 2, 1, 3, 3),
    (1, 2, 2, 3, 1),
    (1, 2, 2, 3, 2),
    (1, 2, 2, 3, 3),
    (1, 3, 1, 3, 1),
    (1, 3, 1, 3, 2),
    (1, 3, 1, 3, 3),
    (1, 3, 2, 3, 1),
    (1, 3, 2, 3, 2),
    (1, 3, 2, 3, 3),
    (2, 3, 2, 3, 1),
    (2, 3, 2, 3, 2),
    (2, 3, 2, 3, 3),
];

/// Canonical name of an `S` slot, e.g. `"S12131"`.
pub fn s_slot_name(idx: usize) -> String {
    let (i, j, k, l, m) = S_SLOTS[idx];
    format!("S{i}{j}{k}{l}{m}")
}

/// Canonical name of an `R` slot, e.g. `"R1223"`.
pub fn r_slot_name(idx: usize) -> String {
    let (i, j, k, l) = R_SLOTS[idx];
    format!("R{i}{j}{k}{l}")
}

/// Pair index of `(i,j)` with `i < j`.
fn pair_index(i: u8, j: u8) -> usize {
    match (i, j) {
        (1, 2) => 0,
        (1, 3) => 1,
        (2, 3) => 2,
        _ => unreachable!("not a canonical pair"),
    }
}

/// Canonicalize an index pair: `None` when `i == j`, otherwise the pair
/// index and the sign picked up by sorting.
fn pair_canon(i: u8, j: u8) -> Option<(usize, bool)> {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => None,
        Less => Some((pair_index(i, j), false)),
        Greater => Some((pair_index(j, i), true)),
    }
}

/// Slot of the pair-pair `(a,b)` (unordered) in the 6-slot curvature layout.
fn r_slot(a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 0) => 0,
        (0, 1) => 1,
        (0, 2) => 2,
        (1, 1) => 3,
        (1, 2) => 4,
        (2, 2) => 5,
        _ => unreachable!(),
    }
}

fn s_slot(a: usize, b: usize, m: u8) -> usize {
    r_slot(a, b) * 3 + (m as usize - 1)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TensorError {
    #[error("second Bianchi identity violated on pair ({0},{1}): residual {2}")]
    BianchiViolation(u8, u8, f64),
}

/// How a derivative tensor constructor treats the cyclic identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BianchiMode {
    /// Reject raw data whose cyclic sums do not vanish (exactly, or within
    /// the relative tolerance for floats).
    Strict,
    /// Subtract one third of each cyclic sum from its three slots so the
    /// identity holds exactly afterwards.
    Project,
}

/// Symmetric 2-tensor on a 3-dimensional space; 6 stored components.
#[derive(Debug, Clone, PartialEq)]
pub struct SymForm2<S: Scalar>(pub [S; 6]);

fn sym2_slot(i: u8, j: u8) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    match (i, j) {
        (1, 1) => 0,
        (1, 2) => 1,
        (1, 3) => 2,
        (2, 2) => 3,
        (2, 3) => 4,
        (3, 3) => 5,
        _ => unreachable!(),
    }
}

impl<S: Scalar> SymForm2<S> {
    pub fn zero() -> Self {
        SymForm2(std::array::from_fn(|_| S::zero()))
    }

    pub fn identity() -> Self {
        Self::diag(S::one(), S::one(), S::one())
    }

    pub fn diag(a: S, b: S, c: S) -> Self {
        let z = S::zero;
        SymForm2([a, z(), z(), b, z(), c])
    }

    pub fn from_fn(mut f: impl FnMut(u8, u8) -> S) -> Self {
        SymForm2([f(1, 1), f(1, 2), f(1, 3), f(2, 2), f(2, 3), f(3, 3)])
    }

    /// `α(i,j) = α(j,i)`.
    pub fn get(&self, i: u8, j: u8) -> S {
        self.0[sym2_slot(i, j)].clone()
    }

    pub fn neg(&self) -> Self {
        SymForm2(std::array::from_fn(|k| -self.0[k].clone()))
    }

    pub fn max_norm(&self) -> S {
        max_abs(&self.0)
    }

    /// Congruence transform `P^T α P`.
    pub fn transform(&self, p: &[[S; 3]; 3]) -> Self {
        SymForm2::from_fn(|i, j| {
            let mut acc = S::zero();
            for a in 1..=3u8 {
                for b in 1..=3u8 {
                    acc = acc
                        + self.get(a, b)
                            * p[a as usize - 1][i as usize - 1].clone()
                            * p[b as usize - 1][j as usize - 1].clone();
                }
            }
            acc
        })
    }
}

/// Fully symmetric 3-tensor; 10 stored components over index multisets.
#[derive(Debug, Clone, PartialEq)]
pub struct SymForm3<S: Scalar>(pub [S; 10]);

fn sym3_slot(i: u8, j: u8, k: u8) -> usize {
    let mut v = [i, j, k];
    v.sort_unstable();
    match (v[0], v[1], v[2]) {
        (1, 1, 1) => 0,
        (1, 1, 2) => 1,
        (1, 1, 3) => 2,
        (1, 2, 2) => 3,
        (1, 2, 3) => 4,
        (1, 3, 3) => 5,
        (2, 2, 2) => 6,
        (2, 2, 3) => 7,
        (2, 3, 3) => 8,
        (3, 3, 3) => 9,
        _ => unreachable!(),
    }
}

impl<S: Scalar> SymForm3<S> {
    pub fn zero() -> Self {
        SymForm3(std::array::from_fn(|_| S::zero()))
    }

    pub fn from_fn(mut f: impl FnMut(u8, u8, u8) -> S) -> Self {
        let mut out = Self::zero();
        for i in 1..=3u8 {
            for j in i..=3u8 {
                for k in j..=3u8 {
                    out.0[sym3_slot(i, j, k)] = f(i, j, k);
                }
            }
        }
        out
    }

    /// `β(i,j,k)`, invariant under all six index permutations.
    pub fn get(&self, i: u8, j: u8, k: u8) -> S {
        self.0[sym3_slot(i, j, k)].clone()
    }

    pub fn max_norm(&self) -> S {
        max_abs(&self.0)
    }
}

/// 3-tensor symmetric in its first two indices only (18 components).
///
/// This is the shape of a reconstructed `∇α` before the last-index symmetry
/// has been established: that symmetry is exactly the property under test.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSym3<S: Scalar>(pub [S; 18]);

impl<S: Scalar> PartialSym3<S> {
    pub fn zero() -> Self {
        PartialSym3(std::array::from_fn(|_| S::zero()))
    }

    pub fn from_fn(mut f: impl FnMut(u8, u8, u8) -> S) -> Self {
        let mut out = Self::zero();
        for i in 1..=3u8 {
            for j in i..=3u8 {
                for m in 1..=3u8 {
                    out.0[sym2_slot(i, j) * 3 + m as usize - 1] = f(i, j, m);
                }
            }
        }
        out
    }

    pub fn get(&self, i: u8, j: u8, m: u8) -> S {
        self.0[sym2_slot(i, j) * 3 + m as usize - 1].clone()
    }

    pub fn from_symmetric(b: &SymForm3<S>) -> Self {
        Self::from_fn(|i, j, m| b.get(i, j, m))
    }

    /// True when the last index is fully interchangeable with the first two.
    pub fn is_symmetric(&self) -> bool {
        for i in 1..=3u8 {
            for p in 1..=3u8 {
                for q in 1..=3u8 {
                    if self.get(i, p, q) != self.get(i, q, p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Average over the last-index exchange, producing a fully symmetric
    /// tensor. Only meaningful once the symmetry defect is negligible.
    pub fn symmetrize(&self) -> SymForm3<S> {
        let half = S::one() / S::from_int(2);
        SymForm3::from_fn(|i, j, k| (self.get(i, j, k) + self.get(i, k, j)) * half.clone())
    }

    pub fn max_norm(&self) -> S {
        max_abs(&self.0)
    }
}

/// Curvature-like tensor: 6 independent components with the pair
/// (anti)symmetries materialized by the accessor.
#[derive(Debug, Clone, PartialEq)]
pub struct Curvature<S: Scalar>(pub [S; 6]);

impl<S: Scalar> Curvature<S> {
    pub fn zero() -> Self {
        Curvature(std::array::from_fn(|_| S::zero()))
    }

    /// Components in slot order `1212, 1213, 1223, 1313, 1323, 2323`.
    pub fn new(slots: [S; 6]) -> Self {
        Curvature(slots)
    }

    pub fn from_fn(mut f: impl FnMut(u8, u8, u8, u8) -> S) -> Self {
        Curvature(std::array::from_fn(|k| {
            let (i, j, kk, l) = R_SLOTS[k];
            f(i, j, kk, l)
        }))
    }

    /// `R(i,j,k,l)` with `R_{ijkl} = -R_{jikl} = -R_{ijlk} = R_{klij}`;
    /// zero whenever `i == j` or `k == l`.
    pub fn get(&self, i: u8, j: u8, k: u8, l: u8) -> S {
        let (pa, na) = match pair_canon(i, j) {
            None => return S::zero(),
            Some(x) => x,
        };
        let (pb, nb) = match pair_canon(k, l) {
            None => return S::zero(),
            Some(x) => x,
        };
        let v = self.0[r_slot(pa, pb)].clone();
        if na ^ nb {
            -v
        } else {
            v
        }
    }

    pub fn max_norm(&self) -> S {
        max_abs(&self.0)
    }

    /// Frobenius norm of the 3x3 pair matrix, as `f64`.
    pub fn pair_frobenius(&self) -> f64 {
        let m = self.pair_matrix();
        let mut acc = 0.0;
        for row in &m {
            for v in row {
                let x = v.to_f64();
                acc += x * x;
            }
        }
        acc.sqrt()
    }

    /// The symmetric pair matrix over the index pairs `12, 13, 23`.
    pub fn pair_matrix(&self) -> [[S; 3]; 3] {
        let r = |a: usize, b: usize| self.0[r_slot(a, b)].clone();
        [
            [r(0, 0), r(0, 1), r(0, 2)],
            [r(0, 1), r(1, 1), r(1, 2)],
            [r(0, 2), r(1, 2), r(2, 2)],
        ]
    }

    /// The matrix `M` with `M = adj(A)` whenever the quadratic curvature
    /// relation `R = Gauss(α)` holds (row/column order 1,2,3).
    pub fn adjugate_matrix(&self) -> [[S; 3]; 3] {
        let g = |i, j, k, l| self.get(i, j, k, l);
        [
            [g(2, 3, 2, 3), -g(1, 3, 2, 3), g(1, 2, 2, 3)],
            [-g(1, 3, 2, 3), g(1, 3, 1, 3), -g(1, 2, 1, 3)],
            [g(1, 2, 2, 3), -g(1, 2, 1, 3), g(1, 2, 1, 2)],
        ]
    }

    /// Tensorial change of basis: `R'_{ijkl} = R_{pqrs} P_pi P_qj P_rk P_sl`.
    pub fn transform(&self, p: &[[S; 3]; 3]) -> Self {
        // contract one index at a time to keep the work at O(3^5)
        let mut dense = vec![S::zero(); 81];
        let at = |i: usize, j: usize, k: usize, l: usize| i * 27 + j * 9 + k * 3 + l;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        dense[at(i, j, k, l)] =
                            self.get(i as u8 + 1, j as u8 + 1, k as u8 + 1, l as u8 + 1);
                    }
                }
            }
        }
        for axis in 0..4 {
            let mut next = vec![S::zero(); 81];
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        for l in 0..3 {
                            let idx = [i, j, k, l];
                            let mut acc = S::zero();
                            for a in 0..3 {
                                let mut src = idx;
                                src[axis] = a;
                                acc = acc
                                    + dense[at(src[0], src[1], src[2], src[3])].clone()
                                        * p[a][idx[axis]].clone();
                            }
                            next[at(i, j, k, l)] = acc;
                        }
                    }
                }
            }
            dense = next;
        }
        Curvature::from_fn(|i, j, k, l| {
            dense[at(
                i as usize - 1,
                j as usize - 1,
                k as usize - 1,
                l as usize - 1,
            )]
            .clone()
        })
    }
}

/// Covariant-derivative-like tensor: pair symmetries in the first four
/// indices, free fifth index; the cyclic identity is enforced at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CovCurvature<S: Scalar>(pub [S; 18]);

impl<S: Scalar> CovCurvature<S> {
    pub fn zero() -> Self {
        CovCurvature(std::array::from_fn(|_| S::zero()))
    }

    /// Build from 18 raw slot values (canonical slot order, see [`S_SLOTS`]).
    pub fn new(raw: [S; 18], mode: BianchiMode) -> Result<Self, TensorError> {
        let sums = bianchi_sums(&raw);
        match mode {
            BianchiMode::Strict => {
                let norm = max_abs(&raw);
                for (idx, b) in sums.iter().enumerate() {
                    if !b.approx_zero(&norm, tol::BIANCHI) {
                        let (i, j) = PAIRS[idx];
                        return Err(TensorError::BianchiViolation(i, j, b.to_f64()));
                    }
                }
                Ok(CovCurvature(raw))
            }
            BianchiMode::Project => {
                let mut s = raw;
                let third = S::one() / S::from_int(3);
                for (idx, b) in sums.into_iter().enumerate() {
                    let corr = b * third.clone();
                    let [(p, sg0), (q, sg1), (r, sg2)] = BIANCHI_SLOTS[idx];
                    s[p] = s[p].clone() - S::from_int(sg0) * corr.clone();
                    s[q] = s[q].clone() - S::from_int(sg1) * corr.clone();
                    s[r] = s[r].clone() - S::from_int(sg2) * corr;
                }
                Ok(CovCurvature(s))
            }
        }
    }

    /// Raw slot values without Bianchi enforcement, for diagnostic paths
    /// that deliberately carry a violating tensor.
    pub fn from_raw_unchecked(raw: [S; 18]) -> Self {
        CovCurvature(raw)
    }

    /// `S(i,j,k,l,m)` with the pair symmetries of the first four indices.
    pub fn get(&self, i: u8, j: u8, k: u8, l: u8, m: u8) -> S {
        let (pa, na) = match pair_canon(i, j) {
            None => return S::zero(),
            Some(x) => x,
        };
        let (pb, nb) = match pair_canon(k, l) {
            None => return S::zero(),
            Some(x) => x,
        };
        let v = self.0[s_slot(pa, pb, m)].clone();
        if na ^ nb {
            -v
        } else {
            v
        }
    }

    pub fn from_fn(mut f: impl FnMut(u8, u8, u8, u8, u8) -> S, mode: BianchiMode) -> Result<Self, TensorError> {
        let raw: [S; 18] = std::array::from_fn(|k| {
            let (i, j, kk, l, m) = S_SLOTS[k];
            f(i, j, kk, l, m)
        });
        Self::new(raw, mode)
    }

    pub fn max_norm(&self) -> S {
        max_abs(&self.0)
    }

    /// Max-norm of the three cyclic sums.
    pub fn bianchi_residual(&self) -> S {
        max_abs(&bianchi_sums(&self.0))
    }

    /// Tensorial change of basis with five factors of `P`.
    pub fn transform(&self, p: &[[S; 3]; 3]) -> Self {
        let at = |idx: [usize; 5]| idx[0] * 81 + idx[1] * 27 + idx[2] * 9 + idx[3] * 3 + idx[4];
        let mut dense = vec![S::zero(); 243];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        for m in 0..3 {
                            dense[at([i, j, k, l, m])] = self.get(
                                i as u8 + 1,
                                j as u8 + 1,
                                k as u8 + 1,
                                l as u8 + 1,
                                m as u8 + 1,
                            );
                        }
                    }
                }
            }
        }
        for axis in 0..5 {
            let mut next = vec![S::zero(); 243];
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        for l in 0..3 {
                            for m in 0..3 {
                                let idx = [i, j, k, l, m];
                                let mut acc = S::zero();
                                for a in 0..3 {
                                    let mut src = idx;
                                    src[axis] = a;
                                    acc = acc + dense[at(src)].clone() * p[a][idx[axis]].clone();
                                }
                                next[at(idx)] = acc;
                            }
                        }
                    }
                }
            }
            dense = next;
        }
        let raw: [S; 18] = std::array::from_fn(|k| {
            let (i, j, kk, l, m) = S_SLOTS[k];
            dense[at([
                i as usize - 1,
                j as usize - 1,
                kk as usize - 1,
                l as usize - 1,
                m as usize - 1,
            ])]
            .clone()
        });
        CovCurvature(raw)
    }
}

/// Slots touched by each cyclic relation, with their signs inside the sum.
/// Relation order matches [`PAIRS`].
const BIANCHI_SLOTS: [[(usize, i64); 3]; 3] = [
    // pair (1,2): S12123 + S12231 - S12132 = 0
    [(2, 1), (6, 1), (4, -1)],
    // pair (1,3): S12133 + S13231 - S13132 = 0
    [(5, 1), (12, 1), (10, -1)],
    // pair (2,3): S12233 + S23231 - S13232 = 0
    [(8, 1), (15, 1), (13, -1)],
];

fn bianchi_sums<S: Scalar>(raw: &[S; 18]) -> [S; 3] {
    std::array::from_fn(|r| {
        let mut acc = S::zero();
        for (slot, sign) in BIANCHI_SLOTS[r] {
            acc = acc + S::from_int(sign) * raw[slot].clone();
        }
        acc
    })
}

/// Quadratic curvature constructor: `R_{ijkl} = α_{ik}α_{jl} - α_{il}α_{jk}`.
pub fn gauss_r<S: Scalar>(alpha: &SymForm2<S>) -> Curvature<S> {
    Curvature::from_fn(|i, j, k, l| {
        alpha.get(i, k) * alpha.get(j, l) - alpha.get(i, l) * alpha.get(j, k)
    })
}

fn derived_slot<S: Scalar>(
    alpha: &SymForm2<S>,
    beta: &dyn Fn(u8, u8, u8) -> S,
    i: u8,
    j: u8,
    k: u8,
    l: u8,
    m: u8,
) -> S {
    beta(i, k, m) * alpha.get(j, l) + alpha.get(i, k) * beta(j, l, m)
        - beta(i, l, m) * alpha.get(j, k)
        - alpha.get(i, l) * beta(j, k, m)
}

/// Derivative of the quadratic relation:
/// `S_{ijklm} = β_{ikm}α_{jl} + α_{ik}β_{jlm} - β_{ilm}α_{jk} - α_{il}β_{jkm}`.
///
/// The cyclic identity is automatic for fully symmetric `β`; the tensor is
/// built in strict mode and a violation aborts, since it can only mean a
/// broken implementation.
pub fn derived_gauss_s<S: Scalar>(alpha: &SymForm2<S>, beta: &SymForm3<S>) -> CovCurvature<S> {
    let b = |i, j, k| beta.get(i, j, k);
    CovCurvature::from_fn(
        |i, j, k, l, m| derived_slot(alpha, &b, i, j, k, l, m),
        BianchiMode::Strict,
    )
    .expect("cyclic identity must hold for symmetric derivative input")
}

/// Same construction with a non-symmetric `β`; the result generally violates
/// the cyclic identity, so the raw 18 slots are returned instead of a
/// validated tensor.
pub fn derived_gauss_s_raw<S: Scalar>(alpha: &SymForm2<S>, beta: &PartialSym3<S>) -> [S; 18] {
    let b = |i, j, k| beta.get(i, j, k);
    std::array::from_fn(|idx| {
        let (i, j, k, l, m) = S_SLOTS[idx];
        derived_slot(alpha, &b, i, j, k, l, m)
    })
}

/// Determinant of a symmetric 3x3 `[[S;3];3]`.
pub fn det3<S: Scalar>(m: &[[S; 3]; 3]) -> S {
    m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
}

/// `|A|`, the determinant of the symmetric matrix of a 2-form.
pub fn det_a<S: Scalar>(alpha: &SymForm2<S>) -> S {
    let a = |i, j| alpha.get(i, j);
    det3(&[
        [a(1, 1), a(1, 2), a(1, 3)],
        [a(1, 2), a(2, 2), a(2, 3)],
        [a(1, 3), a(2, 3), a(3, 3)],
    ])
}

/// `|R~|`, the determinant of the pair matrix of a curvature tensor.
pub fn det_r_tilde<S: Scalar>(r: &Curvature<S>) -> S {
    det3(&r.pair_matrix())
}

/// Subtract the constant-curvature model tensor: in an orthonormal frame
/// `R¯_{ijkl} = R_{ijkl} - c(δ_{ik}δ_{jl} - δ_{il}δ_{jk})`, which touches
/// only the `1212`, `1313`, `2323` slots.
pub fn shift_constant_curvature<S: Scalar>(r: &Curvature<S>, c: &S) -> Curvature<S> {
    let mut out = r.clone();
    out.0[0] = out.0[0].clone() - c.clone();
    out.0[3] = out.0[3].clone() - c.clone();
    out.0[5] = out.0[5].clone() - c.clone();
    out
}
