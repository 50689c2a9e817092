//! Randomized exact suites: property checks over seeded rational samples.
//!
//! Everything here runs over exact rationals, so the assertions are literal
//! equalities, not tolerance checks. A failing trial dumps its inputs for
//! deterministic replay.

use crate::embed::{beta0, codazzi_residual, invert_gauss, Tolerances};
use crate::rivertz::{rivertz, rivertz_raw, rivertz_via_determinants};
use crate::scalar::{Rat, Scalar};
use crate::tensor::{
    derived_gauss_s, derived_gauss_s_raw, det_a, det_r_tilde, gauss_r, BianchiMode, CovCurvature,
    Curvature, PartialSym3, SymForm2, SymForm3,
};
use rand::Rng;

/// Random rational with numerator in `[-3, 3]` and denominator in `[1, 8]`.
pub fn rand_rat<R: Rng>(rng: &mut R) -> Rat {
    let p = rng.gen_range(-3i64..=3);
    let q = rng.gen_range(1i64..=8);
    Rat::from_ratio(p, q)
}

/// Random symmetric 2-form with `|A| != 0`, normalized to `|A| > 0`.
pub fn rand_sym2<R: Rng>(rng: &mut R) -> SymForm2<Rat> {
    loop {
        let a = SymForm2(std::array::from_fn(|_| rand_rat(rng)));
        let d = det_a(&a);
        if d.is_zero() {
            continue;
        }
        return if d < Rat::zero() { a.neg() } else { a };
    }
}

/// Random fully symmetric 3-form.
pub fn rand_sym3<R: Rng>(rng: &mut R) -> SymForm3<Rat> {
    SymForm3(std::array::from_fn(|_| rand_rat(rng)))
}

/// Random first-pair-symmetric 3-tensor that genuinely violates the
/// last-index symmetry.
pub fn rand_partial3<R: Rng>(rng: &mut R) -> PartialSym3<Rat> {
    loop {
        let b = PartialSym3(std::array::from_fn(|_| rand_rat(rng)));
        if !b.is_symmetric() {
            return b;
        }
    }
}

/// Random curvature-like tensor.
pub fn rand_curvature<R: Rng>(rng: &mut R) -> Curvature<Rat> {
    Curvature::new(std::array::from_fn(|_| rand_rat(rng)))
}

/// Random derivative-like tensor satisfying the cyclic identity exactly
/// (raw samples projected onto the identity).
pub fn rand_cov_curvature<R: Rng>(rng: &mut R) -> CovCurvature<Rat> {
    let raw: [Rat; 18] = std::array::from_fn(|_| rand_rat(rng));
    CovCurvature::new(raw, BianchiMode::Project).expect("projection cannot fail")
}

/// Outcome of a suite run.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub trials: u64,
    pub failures: u64,
    /// Human-readable dump of the first failing trial, for replay.
    pub first_failure: Option<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn dump_inputs(alpha: &SymForm2<Rat>, beta_desc: &str) -> String {
    format!("alpha = {:?}; {beta_desc}", alpha.0)
}

/// Round-trip suite: for random `(α, β)` with `|A| > 0`,
/// the constructed `(R, S)` must satisfy all six obstruction equalities
/// exactly, `|R~| = |A|^2` exactly, and inversion plus derivative
/// reconstruction must recover `(α, β)` exactly with zero symmetry defect.
pub fn run_roundtrip_suite<R: Rng>(rng: &mut R, trials: u64) -> OracleReport {
    let tols = Tolerances::default();
    let mut failures = 0;
    let mut first = None;
    for _ in 0..trials {
        let alpha = rand_sym2(rng);
        let beta = rand_sym3(rng);
        let r = gauss_r(&alpha);
        let s = derived_gauss_s(&alpha, &beta);

        let ok = (|| {
            if det_r_tilde(&r) != det_a(&alpha).clone() * det_a(&alpha) {
                return Some("det mismatch".to_string());
            }
            if rivertz(&r, &s).iter().any(|v| !v.is_zero()) {
                return Some("obstruction vector nonzero".to_string());
            }
            if rivertz_via_determinants(&r, &s)
                .iter()
                .any(|v| !v.is_zero())
            {
                return Some("determinantal evaluator nonzero".to_string());
            }
            let rec = match invert_gauss(&r, &tols) {
                Ok(a) => a,
                Err(e) => return Some(format!("inversion failed: {e}")),
            };
            if rec != alpha {
                return Some("alpha round trip mismatch".to_string());
            }
            let b = match beta0(&alpha, &s) {
                Ok(b) => b,
                Err(e) => return Some(format!("beta reconstruction failed: {e}")),
            };
            if !codazzi_residual(&b).is_zero() {
                return Some("codazzi residual nonzero".to_string());
            }
            if b.symmetrize() != beta {
                return Some("beta round trip mismatch".to_string());
            }
            None
        })();

        if let Some(msg) = ok {
            failures += 1;
            if first.is_none() {
                first = Some(format!("{msg}; {}", dump_inputs(&alpha, &format!("beta = {:?}", beta.0))));
            }
        }
    }
    OracleReport {
        trials,
        failures,
        first_failure: first,
    }
}

/// Negative control: with the last-index symmetry of `β` broken, the
/// obstruction vector must be nonzero. Reports how many trials came out
/// nonzero; the caller gates on a fraction (zero sets of the polynomials
/// have measure zero but small-denominator rationals can land on them).
pub fn run_negative_control<R: Rng>(rng: &mut R, trials: u64) -> (u64, OracleReport) {
    let mut nonzero = 0;
    let mut failures = 0;
    let mut first = None;
    for _ in 0..trials {
        let alpha = rand_sym2(rng);
        let beta = rand_partial3(rng);
        let r = gauss_r(&alpha);
        let s_raw = derived_gauss_s_raw(&alpha, &beta);
        let rv = rivertz_raw(&r, &s_raw);
        if rv.iter().any(|v| !v.is_zero()) {
            nonzero += 1;
        } else {
            failures += 1;
            if first.is_none() {
                first = Some(dump_inputs(&alpha, &format!("beta_raw = {:?}", beta.0)));
            }
        }
    }
    (
        nonzero,
        OracleReport {
            trials,
            failures,
            first_failure: first,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn roundtrip_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let rep = run_roundtrip_suite(&mut rng, 50);
        assert!(rep.passed(), "{:?}", rep.first_failure);
    }

    #[test]
    fn negative_control_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let (nonzero, rep) = run_negative_control(&mut rng, 100);
        assert!(nonzero >= 99, "only {nonzero}/100 nonzero: {:?}", rep.first_failure);
    }

    #[test]
    fn determinism() {
        let run = || {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let a = rand_sym2(&mut rng);
            let b = rand_sym3(&mut rng);
            (a, b)
        };
        assert_eq!(run(), run());
    }
}
