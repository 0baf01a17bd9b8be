//! Bimodules `_C B_A`: a right `A`-module with a commuting left action of `C`.

use std::sync::Arc;

use super::HomalgError;
use crate::exactla::{Field, Matrix, Scalar};
use crate::qalg::Algebra;
use crate::rmod::{opposite_shared, Module};

/// A `C`-`A`-bimodule.
///
/// The left action of a `C`-generator `g` is the row-vector matrix `lacts[g]`:
/// `g·b = b·lacts[g]`. For a word `g₁⋯g_k` the matrix is `lacts[g_k]⋯lacts[g₁]`.
/// Basis vector `k` lies in `e_{lvert[k]}·B·e_{vert[k]}`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Module,
    lvert: Arc<Vec<usize>>,
    lacts: Arc<Vec<Matrix>>,
}

impl Bimodule {
    /// Builds and validates a bimodule.
    pub fn new(left: Arc<Algebra>, right: Module, lvert: Vec<usize>, lacts: Vec<Matrix>) -> Result<Bimodule, HomalgError> {
        let b = Bimodule { left, right, lvert: Arc::new(lvert), lacts: Arc::new(lacts) };
        b.validate()?;
        Ok(b)
    }

    pub(crate) fn raw(left: Arc<Algebra>, right: Module, lvert: Vec<usize>, lacts: Vec<Matrix>) -> Bimodule {
        let b = Bimodule { left, right, lvert: Arc::new(lvert), lacts: Arc::new(lacts) };
        debug_assert!(b.validate().is_ok(), "constructed bimodule is invalid: {:?}", b.validate());
        b
    }

    /// Checks the left structure (as a right module over `C^op`) and that both actions commute.
    pub fn validate(&self) -> Result<(), HomalgError> {
        if self.lvert.len() != self.right.dim() {
            return Err(HomalgError::Bimodule("left vertex labels have wrong length".into()));
        }
        self.as_left_module_checked()?;
        let n = self.dim();
        let vert = self.right.verts();
        for l in self.lacts.iter() {
            if (0..n).any(|k| (0..n).any(|j| !l[(k, j)].is_zero() && vert[k] != vert[j])) {
                return Err(HomalgError::Bimodule("left action mixes right vertices".into()));
            }
        }
        for r in self.right.acts() {
            if (0..n).any(|k| (0..n).any(|j| !r[(k, j)].is_zero() && self.lvert[k] != self.lvert[j])) {
                return Err(HomalgError::Bimodule("right action mixes left vertices".into()));
            }
        }
        for (g, l) in self.lacts.iter().enumerate() {
            for (h, r) in self.right.acts().iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(HomalgError::Bimodule(format!(
                        "left generator {} and right generator {} do not commute",
                        self.left.label(self.left.gens()[g]),
                        self.right.algebra().label(self.right.algebra().gens()[h])
                    )));
                }
            }
        }
        Ok(())
    }

    fn as_left_module_checked(&self) -> Result<Module, HomalgError> {
        Module::new(opposite_shared(&self.left), self.lvert.to_vec(), self.lacts.to_vec())
            .map_err(|e| HomalgError::Bimodule(format!("left action: {e}")))
    }

    /// The regular bimodule `_A A_A` with the algebra basis as basis.
    pub fn regular(alg: &Arc<Algebra>) -> Bimodule {
        let n = alg.dim();
        let f = alg.field();
        let mut racts = Vec::new();
        let mut lacts = Vec::new();
        for &g in alg.gens() {
            let mut r = Matrix::zeros(f, n, n);
            let mut l = Matrix::zeros(f, n, n);
            for b in 0..n {
                for (k, c) in alg.mult_basis(b, g) {
                    r[(b, *k)] = c.clone();
                }
                for (k, c) in alg.mult_basis(g, b) {
                    l[(b, *k)] = c.clone();
                }
            }
            racts.push(r);
            lacts.push(l);
        }
        let right = Module::new(alg.clone(), (0..n).map(|b| alg.tgt(b)).collect(), racts)
            .expect("regular module is valid");
        Bimodule::raw(alg.clone(), right, (0..n).map(|b| alg.src(b)).collect(), lacts)
    }

    /// The algebra `C` acting on the left.
    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        self.right.algebra()
    }

    /// The underlying right module.
    pub fn module(&self) -> &Module {
        &self.right
    }

    pub fn field(&self) -> Field {
        self.right.field()
    }

    pub fn dim(&self) -> usize {
        self.right.dim()
    }

    pub fn lvert(&self, k: usize) -> usize {
        self.lvert[k]
    }

    pub fn lverts(&self) -> &[usize] {
        &self.lvert
    }

    /// Left action matrix of the `C`-generator at position `g`.
    pub fn lact(&self, g: usize) -> &Matrix {
        &self.lacts[g]
    }

    pub fn lacts(&self) -> &[Matrix] {
        &self.lacts
    }

    /// Basis vectors in `e_v·B`.
    pub fn left_basis_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.lvert[k] == v).collect()
    }

    /// Left action matrix of an arbitrary `C`-basis element.
    pub fn lact_basis(&self, c: usize) -> Matrix {
        let f = self.field();
        if self.left.is_idempotent(c) {
            let v = self.left.src(c);
            let mut m = Matrix::zeros(f, self.dim(), self.dim());
            for k in 0..self.dim() {
                if self.lvert[k] == v {
                    m[(k, k)] = f.one();
                }
            }
            return m;
        }
        let w = self.left.word(c);
        let mut m = self.lacts[w[0]].clone();
        for &g in &w[1..] {
            m = self.lacts[g].mul(&m);
        }
        m
    }

    /// `c·x` for a row vector `x` and `C`-basis element `c`.
    pub fn lact_vec(&self, c: usize, x: &[Scalar]) -> Vec<Scalar> {
        Matrix::vec_mul(x, &self.lact_basis(c))
    }

    /// The left structure as a right module over `C^op`.
    pub fn as_left_module(&self) -> Module {
        self.as_left_module_checked().expect("validated bimodule")
    }

    /// `D(B) = Hom_k(B, k)` as an `A`-`C`-bimodule on the dual basis.
    pub fn dual(&self) -> Bimodule {
        let racts: Vec<Matrix> = self.lacts.iter().map(Matrix::transpose).collect();
        let right = Module::new(self.left.clone(), self.lvert.to_vec(), racts).expect("dual of a valid bimodule");
        let lacts = self.right.acts().iter().map(Matrix::transpose).collect();
        Bimodule::raw(self.right.algebra().clone(), right, self.right.verts().to_vec(), lacts)
    }

    /// The same bimodule with the sides swapped: a `A^op`-`C^op`-bimodule.
    pub fn swap_sides(&self) -> Bimodule {
        let right = self.as_left_module();
        Bimodule::raw(opposite_shared(self.right.algebra()), right, self.right.verts().to_vec(), self.right.acts().to_vec())
    }

    /// Restricts the left action to the summand `e_v·B`, as a right module.
    pub fn left_summand(&self, v: usize) -> (Vec<usize>, Module) {
        let rows = self.left_basis_at(v);
        let acts = self.right.acts().iter().map(|a| a.submatrix(&rows, &rows)).collect();
        let vert = rows.iter().map(|&k| self.right.vert(k)).collect();
        (rows, Module::raw(self.right.algebra().clone(), vert, acts))
    }
}
