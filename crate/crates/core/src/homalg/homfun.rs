//! `Hom_A(B, M)` as a right `C`-module for a `C`-`A`-bimodule `B`, and the adjunction
//! `Γ: Hom_A(X ⊗_C B, Y) ≅ Hom_C(X, Hom_A(B, Y))` with its unit and counit.

use super::{Bimodule, Tensor};
use crate::exactla::{Matrix, Scalar};
use crate::rmod::{HomSpace, ModHom, Module};

#[derive(Clone, Debug)]
struct Block {
    rows: Vec<usize>,
    space: HomSpace,
    offset: usize,
}

/// `Hom_A(B, M)` with `(f·c)(b) = f(c·b)`; the summand at `C`-vertex `v` is `Hom_A(e_v·B, M)`.
///
/// Elements are `dim B × dim M` matrices supported on the rows of one left vertex.
#[derive(Clone, Debug)]
pub struct HomModule {
    b: Bimodule,
    tgt: Module,
    module: Module,
    blocks: Vec<Block>,
    owner: Vec<(usize, usize)>,
}

impl HomModule {
    pub fn new(b: &Bimodule, m: &Module) -> HomModule {
        assert!(**b.right_algebra() == **m.algebra(), "Hom over mismatched algebras");
        let f = m.field();
        let calg = b.left_algebra();
        let mut blocks = Vec::new();
        let mut owner = Vec::new();
        let mut vert = Vec::new();
        let mut offset = 0;
        for v in 0..calg.nverts() {
            let (rows, sub) = b.left_summand(v);
            let space = HomSpace::new(&sub, m);
            for k in 0..space.dim() {
                owner.push((v, k));
                vert.push(v);
            }
            let d = space.dim();
            blocks.push(Block { rows, space, offset });
            offset += d;
        }
        let n = offset;
        let mut hm = HomModule { b: b.clone(), tgt: m.clone(), module: Module::zero(calg.clone()), blocks, owner };
        let mut acts = Vec::new();
        for (gp, &g) in calg.gens().iter().enumerate() {
            let (s, t) = (calg.src(g), calg.tgt(g));
            let mut a = Matrix::zeros(f, n, n);
            let l = b.lact(gp);
            for k in 0..hm.blocks[s].space.dim() {
                let fm = hm.element(hm.blocks[s].offset + k);
                let img = l.mul(&fm);
                let blk = &hm.blocks[t];
                let sub = img.select_rows(&blk.rows);
                for (c, x) in blk.space.coords(&sub).into_iter().enumerate() {
                    a[(hm.blocks[s].offset + k, blk.offset + c)] = x;
                }
            }
            acts.push(a);
        }
        hm.module = Module::raw(calg.clone(), vert, acts);
        hm
    }

    /// The Hom space as a right `C`-module.
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.b
    }

    pub fn target(&self) -> &Module {
        &self.tgt
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Basis element `k` as a `dim B × dim M` matrix.
    pub fn element(&self, k: usize) -> Matrix {
        let (v, i) = self.owner[k];
        let blk = &self.blocks[v];
        let mut full = Matrix::zeros(self.tgt.field(), self.b.dim(), self.tgt.dim());
        let small = &blk.space.basis()[i];
        for (r, &row) in blk.rows.iter().enumerate() {
            for c in 0..self.tgt.dim() {
                let x = &small[(r, c)];
                if !x.is_zero() {
                    full[(row, c)] = x.clone();
                }
            }
        }
        full
    }

    /// The matrix of the element with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Matrix {
        let mut full = Matrix::zeros(self.tgt.field(), self.b.dim(), self.tgt.dim());
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                full.add_scaled(c, &self.element(k));
            }
        }
        full
    }

    /// Coordinates of an `A`-linear map `B → M`.
    pub fn coords(&self, fm: &Matrix) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.dim());
        for blk in &self.blocks {
            out.extend(blk.space.coords(&fm.select_rows(&blk.rows)));
        }
        out
    }

    /// Coordinates, checking that the map is `A`-linear.
    pub fn coords_checked(&self, fm: &Matrix) -> Option<Vec<Scalar>> {
        let c = self.coords(fm);
        (self.combine(&c) == *fm).then_some(c)
    }

    /// `Hom(B, g): Hom(B, M) → Hom(B, M')` for `g: M → M'`.
    pub fn map_target(&self, g: &Matrix, target: &HomModule) -> Matrix {
        let rows = (0..self.dim()).map(|k| target.coords(&self.element(k).mul(g))).collect();
        Matrix::from_rows(self.tgt.field(), target.dim(), rows)
    }

    /// `Hom(B, g)` as a module homomorphism.
    pub fn hom_target(&self, g: &ModHom, target: &HomModule) -> ModHom {
        ModHom::new(self.module.clone(), target.module.clone(), self.map_target(g.matrix(), target))
            .expect("Hom of a homomorphism")
    }

    /// `Hom(h, M): Hom(B', M) → Hom(B, M)` for a bimodule map `h: B → B'` (from `source`).
    pub fn map_source(source: &HomModule, h: &Matrix, target: &HomModule) -> Matrix {
        let rows = (0..source.dim()).map(|k| target.coords(&h.mul(&source.element(k)))).collect();
        Matrix::from_rows(source.tgt.field(), target.dim(), rows)
    }
}

/// `Γ(f)`: for `f: X ⊗ B → Y`, the map `X → Hom(B, Y)`, `x ↦ (b ↦ f(x ⊗ b))`.
pub fn gamma(t: &Tensor, hm: &HomModule, f: &Matrix) -> Matrix {
    let x = t.left();
    let db = t.bimodule().dim();
    let field = x.field();
    let rows = (0..x.dim())
        .map(|i| {
            let mut fi = Matrix::zeros(field, db, f.cols());
            for j in 0..db {
                let cls = t.class_of_basis(i, j);
                let img = Matrix::vec_mul(&cls, f);
                for (c, v) in img.into_iter().enumerate() {
                    fi[(j, c)] = v;
                }
            }
            hm.coords(&fi)
        })
        .collect();
    Matrix::from_rows(field, hm.dim(), rows)
}

/// `Γ⁻¹(g)`: for `g: X → Hom(B, Y)`, the map `x ⊗ b ↦ g(x)(b)`.
pub fn gamma_inv(t: &Tensor, hm: &HomModule, g: &Matrix) -> Matrix {
    t.map_from_pairs(hm.target().dim(), |i, j| hm.combine(g.row(i)).row_vec(j))
}

/// The unit `η_X: X → Hom(B, X ⊗ B)`, equal to `Γ(1)`.
pub fn unit_eta(t: &Tensor, hm: &HomModule) -> ModHom {
    let id = Matrix::identity(t.module().field(), t.dim());
    ModHom::new(t.left().clone(), hm.module().clone(), gamma(t, hm, &id)).expect("unit is a homomorphism")
}

/// The counit `ε_Y: Hom(B, Y) ⊗ B → Y`, equal to `Γ⁻¹(1)`.
pub fn counit_eps(t: &Tensor, hm: &HomModule) -> ModHom {
    let id = Matrix::identity(hm.module().field(), hm.dim());
    ModHom::new(t.module().clone(), hm.target().clone(), gamma_inv(t, hm, &id)).expect("counit is a homomorphism")
}
