//! Certification of the Wakamatsu-tilting conditions to a finite depth.

use super::{TiltingModule, WTiltError};
use crate::exactla::Matrix;
use crate::homalg::ext_dims;
use crate::rmod::{HomSpace, ModHom, Module};

/// One step `C_k → T_k → C_{k+1}` of the add(T)-coresolution of `R`, with `C_0 = R`.
#[derive(Clone, Debug)]
pub struct CoresolutionStep {
    /// `C_k`.
    pub source: Module,
    /// `T_k`, the target of the minimal left add(T)-approximation of `C_k`.
    pub term: Module,
    pub approximation: ModHom,
    /// True when the approximation is injective.
    pub mono: bool,
    /// True when `0 → Hom(C_{k+1}, T) → Hom(T_k, T) → Hom(C_k, T) → 0` is exact.
    pub hom_exact: bool,
}

/// Evidence for the Wakamatsu-tilting conditions up to `depth`.
#[derive(Clone, Debug)]
pub struct WTiltReport {
    pub module: Module,
    pub depth: usize,
    /// `dim Ext^i_R(T, T)` at index `i − 1`.
    pub ext_r: Vec<usize>,
    /// `dim Ext^i_{S^op}(T, T)` at index `i − 1`.
    pub ext_s: Vec<usize>,
    /// The right action of `R` is faithful and fills `End_S(T)`.
    pub end_r: bool,
    /// The left action of `S` is faithful and fills `End_R(T)`.
    pub end_s: bool,
    /// Steps `0..=depth`.
    pub coresolution: Vec<CoresolutionStep>,
    /// First violated condition as `(stage, clause)`.
    pub failure: Option<(usize, String)>,
}

impl WTiltReport {
    pub fn certified(&self) -> bool {
        self.failure.is_none()
    }

    /// "certified to depth N" or "fails at stage k: …".
    pub fn verdict_line(&self) -> String {
        match &self.failure {
            None => format!("certified to depth {}", self.depth),
            Some((k, c)) => format!("fails at stage {k}: {c}"),
        }
    }

    /// The report, or the first failure as an error.
    pub fn into_result(self) -> Result<WTiltReport, WTiltError> {
        match &self.failure {
            None => Ok(self),
            Some((stage, clause)) => Err(WTiltError::FailsAtStage { stage: *stage, clause: clause.clone() }),
        }
    }
}

/// True when the right action of each algebra basis element gives independent maps that
/// span the endomorphisms commuting with the other action.
fn action_fills_end(actions: &[Matrix], commutant_dim: usize, n: usize) -> bool {
    if actions.len() != commutant_dim {
        return false;
    }
    if actions.is_empty() {
        return true;
    }
    let field = actions[0].field();
    let rows = actions.iter().map(|a| a.entries().to_vec()).collect();
    Matrix::from_rows(field, n * n, rows).rank() == actions.len()
}

/// Checks `Ext^i_R(T, T) = 0` and `Ext^i_{S^op}(T, T) = 0` for `1 ≤ i ≤ depth`, both
/// endomorphism conditions, and builds `0 → R → T_0 → … → T_depth` by minimal left
/// add(T)-approximations, testing each step for injectivity and `Hom(−, T)`-exactness.
///
/// Stage `0` covers the endomorphism conditions and the first coresolution step; stage
/// `k ≥ 1` covers `Ext^k` on both sides and coresolution step `k`.
pub fn check_wakamatsu(t: &TiltingModule, depth: usize) -> Result<WTiltReport, WTiltError> {
    if depth == 0 {
        return Err(WTiltError::InvalidData("depth must be at least 1".into()));
    }
    let tm = t.module().clone();
    let tl = t.bimodule().as_left_module();
    let n = tm.dim();
    let ext_r = ext_dims(&tm, &tm, depth);
    let ext_s = ext_dims(&tl, &tl, depth);

    let r = t.r_algebra();
    let s = t.s_algebra();
    let racts: Vec<Matrix> = (0..r.dim()).map(|b| tm.act_basis(b)).collect();
    let end_r = action_fills_end(&racts, HomSpace::new(&tl, &tl).dim(), n);
    let lacts: Vec<Matrix> = (0..s.dim()).map(|c| t.bimodule().lact_basis(c)).collect();
    let end_s = action_fills_end(&lacts, HomSpace::new(&tm, &tm).dim(), n);

    let hom_t = |m: &Module| HomSpace::new(m, &tm).dim();
    let mut coresolution = Vec::with_capacity(depth + 1);
    let mut cur = Module::regular(r.clone());
    for _ in 0..=depth {
        let (term, approximation) = t.left_approximation(&cur);
        let mono = approximation.is_mono();
        let (next, _) = approximation.cokernel();
        let hom_exact = hom_t(&term) == hom_t(&next) + hom_t(&cur);
        coresolution.push(CoresolutionStep { source: cur, term, approximation, mono, hom_exact });
        cur = next;
    }

    let mut failure = None;
    let mut fail = |stage: usize, clause: String| {
        if failure.is_none() {
            failure = Some((stage, clause));
        }
    };
    if !end_r {
        fail(0, "the right action of R does not give End_S(T) ≅ R".into());
    }
    if !end_s {
        fail(0, "the left action of S does not give End_R(T) ≅ S".into());
    }
    for (k, step) in coresolution.iter().enumerate() {
        if k >= 1 {
            if ext_r[k - 1] != 0 {
                fail(k, format!("dim Ext^{k}_R(T, T) = {}", ext_r[k - 1]));
            }
            if ext_s[k - 1] != 0 {
                fail(k, format!("dim Ext^{k}_S(T, T) = {}", ext_s[k - 1]));
            }
        }
        if !step.mono {
            fail(k, format!("the add(T)-approximation at coresolution degree {k} is not injective"));
        }
        if !step.hom_exact {
            fail(k, format!("the coresolution is not Hom(-, T)-exact at degree {k}"));
        }
    }
    Ok(WTiltReport { module: tm, depth, ext_r, ext_s, end_r, end_s, coresolution, failure })
}
