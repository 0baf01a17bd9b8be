//! The canonical bimodule maps `α: T ⊗_R DT → DS` and `β: DT ⊗_S T → DR`.

use super::{tensor_bimodules, Bimodule, HomalgError, Tensor};
use crate::exactla::Matrix;

/// A bimodule map out of a tensor product, with both bimodules.
#[derive(Clone, Debug)]
pub struct CanonicalMap {
    pub tensor: Tensor,
    pub source: Bimodule,
    pub target: Bimodule,
    /// Row-vector matrix `dim source × dim target`.
    pub map: Matrix,
}

impl CanonicalMap {
    /// True when the map intertwines both actions.
    pub fn is_bimodule_map(&self) -> bool {
        let src = self.source.module();
        let tgt = self.target.module();
        let right = src.acts().iter().zip(tgt.acts()).all(|(a, b)| a.mul(&self.map) == self.map.mul(b));
        let left = self.source.lacts().iter().zip(self.target.lacts()).all(|(a, b)| a.mul(&self.map) == self.map.mul(b));
        right && left
    }

    pub fn is_iso(&self) -> bool {
        self.map.is_invertible()
    }

    /// Inverse matrix, when the map is bijective.
    pub fn inverse(&self) -> Option<Matrix> {
        self.map.inverse()
    }
}

fn checked(c: CanonicalMap, what: &str) -> Result<CanonicalMap, HomalgError> {
    if !c.is_bimodule_map() {
        return Err(HomalgError::NotIso(format!("{what} is not a bimodule map")));
    }
    if !c.is_iso() {
        return Err(HomalgError::NotIso(format!(
            "{what} has rank {} between dimensions {} and {}",
            c.map.rank(),
            c.source.dim(),
            c.target.dim()
        )));
    }
    Ok(c)
}

/// `α: T ⊗_R DT → DS`, `t ⊗ φ ↦ (s ↦ φ(s·t))`, for an `S`-`R`-bimodule `T`.
pub fn alpha(t: &Bimodule) -> Result<CanonicalMap, HomalgError> {
    let dt = t.dual();
    let (tensor, source) = tensor_bimodules(t, &dt);
    let target = Bimodule::regular(t.left_algebra()).dual();
    let ls: Vec<Matrix> = (0..t.left_algebra().dim()).map(|m| t.lact_basis(m)).collect();
    let map = tensor.map_from_pairs(target.dim(), |k, l| ls.iter().map(|f| f[(k, l)].clone()).collect());
    checked(CanonicalMap { tensor, source, target, map }, "α")
}

/// `β: DT ⊗_S T → DR`, `φ ⊗ t ↦ (r ↦ φ(t·r))`, for an `S`-`R`-bimodule `T`.
pub fn beta(t: &Bimodule) -> Result<CanonicalMap, HomalgError> {
    let dt = t.dual();
    let (tensor, source) = tensor_bimodules(&dt, t);
    let target = Bimodule::regular(t.right_algebra()).dual();
    let rs: Vec<Matrix> = (0..t.right_algebra().dim()).map(|m| t.module().act_basis(m)).collect();
    let map = tensor.map_from_pairs(target.dim(), |l, k| rs.iter().map(|f| f[(k, l)].clone()).collect());
    checked(CanonicalMap { tensor, source, target, map }, "β")
}
