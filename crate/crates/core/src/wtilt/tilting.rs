//! The bimodule `_S T_R` with its summands and minimal add-approximations.

use std::sync::Arc;

use super::WTiltError;
use crate::exactla::{Matrix, Scalar};
use crate::homalg::{end_algebra, Bimodule};
use crate::qalg::Algebra;
use crate::rmod::{HomSpace, ModHom, Module};

/// An `S`-`R`-bimodule `T` considered as a candidate Wakamatsu-tilting `R`-module.
///
/// The summand `e_v·T` for a vertex `v` of `S` is the `v`-th summand of `T_R`. The left
/// action of the radical basis elements of `S` spans the radical maps between summands.
#[derive(Clone, Debug)]
pub struct TiltingModule {
    bimodule: Bimodule,
    dual: Bimodule,
    summands: Vec<(Vec<usize>, Module)>,
    radical: Vec<Matrix>,
}

impl TiltingModule {
    /// `T = T_1 ⊕ … ⊕ T_n` with `S = End_R(T)` computed from pairwise non-isomorphic
    /// indecomposable summands.
    pub fn from_summands(summands: &[Module], name: &str) -> Result<TiltingModule, WTiltError> {
        let e = end_algebra(summands, name)?;
        Ok(TiltingModule::from_bimodule(e.bimodule))
    }

    /// Uses a given bimodule; its left algebra must be basic with one vertex per summand.
    pub fn from_bimodule(b: Bimodule) -> TiltingModule {
        let s = b.left_algebra().clone();
        let summands = (0..s.nverts()).map(|v| b.left_summand(v)).collect();
        let radical = (0..s.dim()).filter(|&c| !s.is_idempotent(c)).map(|c| b.lact_basis(c)).collect();
        let dual = b.dual();
        TiltingModule { bimodule: b, dual, summands, radical }
    }

    /// `T = R` with `S = R` acting by left multiplication.
    pub fn regular(alg: &Arc<Algebra>) -> TiltingModule {
        TiltingModule::from_bimodule(Bimodule::regular(alg))
    }

    /// `DT` regarded as an `S`-module with `R` acting on the left.
    pub fn dual_module(&self) -> TiltingModule {
        TiltingModule::from_bimodule(self.dual.clone())
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    /// `DT` as an `R`-`S`-bimodule.
    pub fn dual(&self) -> &Bimodule {
        &self.dual
    }

    /// `T` as a right `R`-module.
    pub fn module(&self) -> &Module {
        self.bimodule.module()
    }

    /// The algebra `R` acting on the right.
    pub fn r_algebra(&self) -> &Arc<Algebra> {
        self.bimodule.right_algebra()
    }

    /// The algebra `S` acting on the left.
    pub fn s_algebra(&self) -> &Arc<Algebra> {
        self.bimodule.left_algebra()
    }

    /// The indecomposable summands `e_v·T`.
    pub fn summands(&self) -> Vec<Module> {
        self.summands.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Minimal left add(T)-approximation `C → T'`.
    ///
    /// The chosen maps into single summands are independent modulo those factoring through
    /// a radical map of `T`.
    pub fn left_approximation(&self, c: &Module) -> (Module, ModHom) {
        let t = self.module();
        let field = t.field();
        let mut all: Vec<(usize, Matrix, Vec<Scalar>)> = Vec::new();
        for (v, (rows, sub)) in self.summands.iter().enumerate() {
            for g in HomSpace::new(c, sub).basis() {
                let mut full = Matrix::zeros(field, c.dim(), t.dim());
                for (j, &r) in rows.iter().enumerate() {
                    for i in 0..c.dim() {
                        full[(i, r)] = g[(i, j)].clone();
                    }
                }
                all.push((v, g.clone(), full.entries().to_vec()));
            }
        }
        let mut span: Vec<Vec<Scalar>> = Vec::new();
        for (_, _, full) in &all {
            let fm = Matrix::from_flat(field, c.dim(), t.dim(), full.clone());
            for l in &self.radical {
                span.push(fm.mul(l).entries().to_vec());
            }
        }
        let chosen = choose_independent(&all, span, c.dim() * t.dim(), field);
        let parts: Vec<&Module> = chosen.iter().map(|&(v, _)| &self.summands[v].1).collect();
        let target = sum_or_zero(t.algebra(), &parts);
        let mats: Vec<&Matrix> = chosen.iter().map(|(_, g)| g).collect();
        let mat = if mats.is_empty() { Matrix::zeros(field, c.dim(), 0) } else { Matrix::hstack(&mats) };
        let h = ModHom::new(c.clone(), target.clone(), mat).expect("sum of homomorphisms");
        (target, h)
    }

    /// Minimal right add(T)-approximation `T' → A`.
    pub fn right_approximation(&self, a: &Module) -> (Module, ModHom) {
        let t = self.module();
        let field = t.field();
        let mut all: Vec<(usize, Matrix, Vec<Scalar>)> = Vec::new();
        for (v, (rows, sub)) in self.summands.iter().enumerate() {
            for g in HomSpace::new(sub, a).basis() {
                let mut full = Matrix::zeros(field, t.dim(), a.dim());
                for (j, &r) in rows.iter().enumerate() {
                    for i in 0..a.dim() {
                        full[(r, i)] = g[(j, i)].clone();
                    }
                }
                all.push((v, g.clone(), full.entries().to_vec()));
            }
        }
        let mut span: Vec<Vec<Scalar>> = Vec::new();
        for (_, _, full) in &all {
            let fm = Matrix::from_flat(field, t.dim(), a.dim(), full.clone());
            for l in &self.radical {
                span.push(l.mul(&fm).entries().to_vec());
            }
        }
        let chosen = choose_independent(&all, span, t.dim() * a.dim(), field);
        let parts: Vec<&Module> = chosen.iter().map(|&(v, _)| &self.summands[v].1).collect();
        let source = sum_or_zero(t.algebra(), &parts);
        let mats: Vec<&Matrix> = chosen.iter().map(|(_, g)| g).collect();
        let mat = if mats.is_empty() { Matrix::zeros(field, 0, a.dim()) } else { Matrix::vstack(&mats) };
        let h = ModHom::new(source.clone(), a.clone(), mat).expect("sum of homomorphisms");
        (source, h)
    }
}

/// Direct sum of the given modules, or the zero module.
pub(crate) fn sum_or_zero(alg: &Arc<Algebra>, parts: &[&Module]) -> Module {
    if parts.is_empty() {
        Module::zero(alg.clone())
    } else {
        Module::direct_sum(alg, parts)
    }
}

/// Greedily keeps candidates independent of `span` and of each other.
fn choose_independent(
    all: &[(usize, Matrix, Vec<Scalar>)],
    mut span: Vec<Vec<Scalar>>,
    len: usize,
    field: crate::exactla::Field,
) -> Vec<(usize, Matrix)> {
    let mut rank = Matrix::from_rows(field, len, span.clone()).rank();
    let mut chosen = Vec::new();
    for (v, g, full) in all {
        span.push(full.clone());
        let r = Matrix::from_rows(field, len, span.clone()).rank();
        if r > rank {
            rank = r;
            chosen.push((*v, g.clone()));
        } else {
            span.pop();
        }
    }
    chosen
}
