//! Membership in the co-Auslander class `_T𝒳` and the Auslander class `𝒳_T`.

use super::{TiltingModule, WTiltError};
use crate::homalg::{counit_eps, ext_dims, tor, unit_eta, HomModule, Tensor};
use crate::rmod::Module;

/// A membership answer; a negative answer names the failed clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub failed_clause: Option<String>,
}

impl Membership {
    fn yes() -> Membership {
        Membership { member: true, failed_clause: None }
    }

    fn no(clause: String) -> Membership {
        Membership { member: false, failed_clause: Some(clause) }
    }
}

/// `M ∈ _T𝒳` up to `depth`: `Ext^i_R(T, M) = 0`, `Tor^S_i(Hom_R(T, M), T) = 0` and the
/// counit `Hom_R(T, M) ⊗_S T → M` is an isomorphism.
pub fn in_co_auslander(m: &Module, t: &TiltingModule, depth: usize) -> Result<Membership, WTiltError> {
    for (i, d) in ext_dims(t.module(), m, depth).into_iter().enumerate() {
        if d != 0 {
            return Ok(Membership::no(format!("dim Ext^{}_R(T, M) = {d}", i + 1)));
        }
    }
    let hm = HomModule::new(t.bimodule(), m);
    for i in 1..=depth {
        let d = tor(hm.module(), t.bimodule(), i);
        if d != 0 {
            return Ok(Membership::no(format!("dim Tor^S_{i}(Hom_R(T, M), T) = {d}")));
        }
    }
    let tensor = Tensor::new(hm.module(), t.bimodule());
    if !counit_eps(&tensor, &hm).is_iso() {
        return Ok(Membership::no("the counit Hom_R(T, M) ⊗_S T → M is not an isomorphism".into()));
    }
    Ok(Membership::yes())
}

/// `M ∈ 𝒳_T` up to `depth`: `Ext^i_R(M, T) = 0`, `Ext^i_S(Hom_R(M, T), T) = 0` and the
/// evaluation `M → Hom_S(Hom_R(M, T), T)` is an isomorphism.
///
/// Through `Hom_R(M, T) ≅ D(M ⊗_R DT)` the second clause is `Ext^i_S(DT, M ⊗_R DT) = 0` and
/// the evaluation map is the unit `M → Hom_S(DT, M ⊗_R DT)`.
pub fn in_auslander(m: &Module, t: &TiltingModule, depth: usize) -> Result<Membership, WTiltError> {
    for (i, d) in ext_dims(m, t.module(), depth).into_iter().enumerate() {
        if d != 0 {
            return Ok(Membership::no(format!("dim Ext^{}_R(M, T) = {d}", i + 1)));
        }
    }
    let tensor = Tensor::new(m, t.dual());
    for (i, d) in ext_dims(t.dual().module(), tensor.module(), depth).into_iter().enumerate() {
        if d != 0 {
            return Ok(Membership::no(format!("dim Ext^{}_S(Hom_R(M, T), T) = {d}", i + 1)));
        }
    }
    let hm = HomModule::new(t.dual(), tensor.module());
    if !unit_eta(&tensor, &hm).is_iso() {
        return Ok(Membership::no("the evaluation M → Hom_S(Hom_R(M, T), T) is not an isomorphism".into()));
    }
    Ok(Membership::yes())
}
