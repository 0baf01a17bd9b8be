//! Tensor products `X ⊗_C B` as coequalizers on Kronecker bases.

use super::Bimodule;
use crate::exactla::{Matrix, Scalar};
use crate::rmod::{ModHom, Module};

/// `X ⊗_C B` for a right `C`-module `X` and a `C`-`A`-bimodule `B`.
///
/// Spanning pairs `(x, b)` with `vert(x) = lvert(b)` are indexed in Kronecker order.
/// `q` sends each pair to its class; `sec[j]` is a pair whose class is basis vector `j`.
#[derive(Clone, Debug)]
pub struct Tensor {
    x: Module,
    b: Bimodule,
    module: Module,
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
    q: Matrix,
    sec: Vec<usize>,
}

impl Tensor {
    /// Builds the coequalizer of `x·g ⊗ b` and `x ⊗ g·b` over the generators `g` of `C`.
    pub fn new(x: &Module, b: &Bimodule) -> Tensor {
        assert!(**x.algebra() == **b.left_algebra(), "tensor over mismatched algebras");
        let f = x.field();
        let (dx, db) = (x.dim(), b.dim());
        let mut pairs = Vec::new();
        let mut index = vec![None; dx * db];
        for i in 0..dx {
            for j in 0..db {
                if x.vert(i) == b.lvert(j) {
                    index[i * db + j] = Some(pairs.len());
                    pairs.push((i, j));
                }
            }
        }
        let w = pairs.len();
        let calg = x.algebra();
        let mut rels: Vec<Vec<Scalar>> = Vec::new();
        for (gp, &g) in calg.gens().iter().enumerate() {
            let (s, t) = (calg.src(g), calg.tgt(g));
            let ax = x.act(gp);
            let lb = b.lact(gp);
            for i in x.basis_at(s) {
                for j in b.left_basis_at(t) {
                    let mut row = vec![f.zero(); w];
                    let mut any = false;
                    for i2 in x.basis_at(t) {
                        let c = &ax[(i, i2)];
                        if !c.is_zero() {
                            let p = index[i2 * db + j].expect("vertex-compatible pair");
                            row[p] = row[p].add(c);
                            any = true;
                        }
                    }
                    for j2 in b.left_basis_at(s) {
                        let c = &lb[(j, j2)];
                        if !c.is_zero() {
                            let p = index[i * db + j2].expect("vertex-compatible pair");
                            row[p] = row[p].sub(c);
                            any = true;
                        }
                    }
                    if any {
                        rels.push(row);
                    }
                }
            }
        }
        let bm = b.module();
        let vert: Vec<usize> = pairs.iter().map(|&(_, j)| bm.vert(j)).collect();
        let acts: Vec<Matrix> = bm
            .acts()
            .iter()
            .map(|a| {
                let mut m = Matrix::zeros(f, w, w);
                for (p, &(i, j)) in pairs.iter().enumerate() {
                    for j2 in 0..db {
                        let c = &a[(j, j2)];
                        if !c.is_zero() {
                            let p2 = index[i * db + j2].expect("right action keeps left vertices");
                            m[(p, p2)] = c.clone();
                        }
                    }
                }
                m
            })
            .collect();
        let free = Module::raw(bm.algebra().clone(), vert, acts);
        let (module, proj) = free.quotient(&Matrix::from_rows(f, w, rels));
        let q = proj.matrix().clone();
        let sec = (0..module.dim())
            .map(|k| {
                (0..w)
                    .find(|&p| (0..module.dim()).all(|l| if l == k { q[(p, l)].is_one() } else { q[(p, l)].is_zero() }))
                    .expect("free pair for every class")
            })
            .collect();
        Tensor { x: x.clone(), b: b.clone(), module, pairs, index, q, sec }
    }

    /// The tensor product as a right module.
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn left(&self) -> &Module {
        &self.x
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Class of `x_i ⊗ b_j` as a row vector (zero for vertex-incompatible pairs).
    pub fn class_of_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        match self.index[i * self.b.dim() + j] {
            Some(p) => self.q.row_vec(p),
            None => vec![self.module.field().zero(); self.dim()],
        }
    }

    /// Class of `x ⊗ b` for arbitrary vectors.
    pub fn class_of(&self, x: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.module.field();
        let mut acc = vec![f.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                if let Some(p) = self.index[i * self.b.dim() + j] {
                    let c = xi.mul(bj);
                    for (k, v) in self.q.row(p).iter().enumerate() {
                        if !v.is_zero() {
                            acc[k] = acc[k].add(&c.mul(v));
                        }
                    }
                }
            }
        }
        acc
    }

    /// The representative pair `(x, b)` of basis class `k`.
    pub fn section(&self, k: usize) -> (usize, usize) {
        self.pairs[self.sec[k]]
    }

    /// Matrix of a linear map out of the tensor product given on representative pairs.
    ///
    /// The caller guarantees that `value` is balanced, so the result is well defined.
    pub fn map_from_pairs(&self, cols: usize, mut value: impl FnMut(usize, usize) -> Vec<Scalar>) -> Matrix {
        let f = self.module.field();
        let rows = (0..self.dim())
            .map(|k| {
                let (i, j) = self.section(k);
                let v = value(i, j);
                debug_assert_eq!(v.len(), cols);
                v
            })
            .collect();
        Matrix::from_rows(f, cols, rows)
    }

    /// `g ⊗ B : X ⊗ B → X' ⊗ B` for a linear map `g: X → X'` commuting with the `C`-action.
    pub fn map_left(&self, g: &Matrix, target: &Tensor) -> Matrix {
        let db = self.b.dim();
        self.map_from_pairs(target.dim(), |i, j| {
            let mut e = vec![self.module.field().zero(); db];
            e[j] = self.module.field().one();
            target.class_of(g.row(i), &e)
        })
    }

    /// `X ⊗ h : X ⊗ B → X ⊗ B'` for a bimodule map `h: B → B'`.
    pub fn map_right(&self, h: &Matrix, target: &Tensor) -> Matrix {
        let dx = self.x.dim();
        self.map_from_pairs(target.dim(), |i, j| {
            let mut e = vec![self.module.field().zero(); dx];
            e[i] = self.module.field().one();
            target.class_of(&e, h.row(j))
        })
    }

    /// `g ⊗ B` as a module homomorphism.
    pub fn hom_left(&self, g: &ModHom, target: &Tensor) -> ModHom {
        ModHom::new(self.module.clone(), target.module.clone(), self.map_left(g.matrix(), target))
            .expect("tensor of a homomorphism")
    }
}

/// `X ⊗_C B` where `X` is itself a `D`-`C`-bimodule; the result is a `D`-`A`-bimodule.
pub fn tensor_bimodules(x: &Bimodule, b: &Bimodule) -> (Tensor, Bimodule) {
    let t = Tensor::new(x.module(), b);
    let lacts = x.lacts().iter().map(|l| t.map_left(l, &t)).collect();
    let lvert = (0..t.dim()).map(|k| x.lvert(t.section(k).0)).collect();
    let bim = Bimodule::raw(x.left_algebra().clone(), t.module().clone(), lvert, lacts);
    (t, bim)
}
