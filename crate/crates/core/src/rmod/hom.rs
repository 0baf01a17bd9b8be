//! Module homomorphisms and homomorphism spaces.

use super::{Module, ModuleError};
use crate::exactla::{Field, Matrix, Scalar};

/// A homomorphism of right modules acting on row vectors: `x ↦ x·mat`.
#[derive(Clone, Debug)]
pub struct ModHom {
    src: Module,
    tgt: Module,
    mat: Matrix,
}

impl ModHom {
    /// Wraps a matrix after checking that it intertwines the actions.
    pub fn new(src: Module, tgt: Module, mat: Matrix) -> Result<ModHom, ModuleError> {
        let h = ModHom { src, tgt, mat };
        h.check()?;
        Ok(h)
    }

    pub(crate) fn raw(src: Module, tgt: Module, mat: Matrix) -> ModHom {
        let h = ModHom { src, tgt, mat };
        debug_assert!(h.check().is_ok(), "constructed map is not a homomorphism");
        h
    }

    /// Checks shapes and `ρ_src(g)·f = f·ρ_tgt(g)` for every generator.
    pub fn check(&self) -> Result<(), ModuleError> {
        if *self.src.algebra() != *self.tgt.algebra() {
            return Err(ModuleError::AlgebraMismatch);
        }
        if self.mat.rows() != self.src.dim() || self.mat.cols() != self.tgt.dim() {
            return Err(ModuleError::Shape("homomorphism matrix has wrong size".into()));
        }
        for k in 0..self.src.dim() {
            for l in 0..self.tgt.dim() {
                if !self.mat[(k, l)].is_zero() && self.src.vert(k) != self.tgt.vert(l) {
                    return Err(ModuleError::NotHom("does not respect vertices".into()));
                }
            }
        }
        for g in 0..self.src.acts().len() {
            if self.src.act(g).mul(&self.mat) != self.mat.mul(self.tgt.act(g)) {
                return Err(ModuleError::NotHom(format!(
                    "fails to intertwine `{}`",
                    self.src.algebra().label(self.src.algebra().gens()[g])
                )));
            }
        }
        Ok(())
    }

    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn tgt(&self) -> &Module {
        &self.tgt
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn identity(m: &Module) -> ModHom {
        ModHom { src: m.clone(), tgt: m.clone(), mat: Matrix::identity(m.field(), m.dim()) }
    }

    pub fn zero(src: &Module, tgt: &Module) -> ModHom {
        ModHom { src: src.clone(), tgt: tgt.clone(), mat: Matrix::zeros(src.field(), src.dim(), tgt.dim()) }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModHom) -> ModHom {
        assert_eq!(self.tgt.dim(), next.src.dim(), "composition shape mismatch");
        ModHom { src: self.src.clone(), tgt: next.tgt.clone(), mat: self.mat.mul(&next.mat) }
    }

    pub fn add(&self, o: &ModHom) -> ModHom {
        ModHom { src: self.src.clone(), tgt: self.tgt.clone(), mat: self.mat.add(&o.mat) }
    }

    pub fn scale(&self, c: &Scalar) -> ModHom {
        ModHom { src: self.src.clone(), tgt: self.tgt.clone(), mat: self.mat.scale(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.src.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.tgt.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.src.dim() == self.tgt.dim() && self.is_mono()
    }

    pub fn inverse(&self) -> Option<ModHom> {
        let inv = self.mat.inverse()?;
        Some(ModHom { src: self.tgt.clone(), tgt: self.src.clone(), mat: inv })
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Module, ModHom) {
        let rows = self.src.split_by_vertex(&self.mat.left_kernel());
        self.src.submodule(&rows).expect("kernel is a submodule")
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Module, ModHom) {
        self.tgt.quotient(&self.mat)
    }

    /// Image with the epi `src → Im` and mono `Im → tgt`.
    pub fn image(&self) -> (Module, ModHom, ModHom) {
        let rows = self.tgt.split_by_vertex(&self.mat);
        let (im, mono) = self.tgt.submodule(&rows).expect("image is a submodule");
        let coords = crate::exactla::Coordinates::new(&rows).expect("independent rows");
        let epi_mat = coords.coords_rows(&self.mat).expect("rows lie in the image");
        let epi = ModHom::raw(self.src.clone(), im.clone(), epi_mat);
        (im, epi, mono)
    }
}

/// A basis of `Hom(M, N)` with coordinate extraction.
///
/// Each basis element has a 1 at its own free position and 0 at the others', so the
/// coordinates of any element of the span are its entries at the free positions.
#[derive(Clone, Debug)]
pub struct HomSpace {
    src: Module,
    tgt: Module,
    basis: Vec<Matrix>,
    free: Vec<(usize, usize)>,
}

impl HomSpace {
    /// Solves the intertwining equations, with unknowns only between equal vertices.
    pub fn new(m: &Module, n: &Module) -> HomSpace {
        assert!(*m.algebra() == *n.algebra(), "hom between modules over different algebras");
        let field = m.field();
        let alg = m.algebra();
        let nv = alg.nverts();
        let mv: Vec<Vec<usize>> = (0..nv).map(|v| m.basis_at(v)).collect();
        let nvv: Vec<Vec<usize>> = (0..nv).map(|v| n.basis_at(v)).collect();
        let mut pos_m = vec![0usize; m.dim()];
        for list in &mv {
            for (i, &k) in list.iter().enumerate() {
                pos_m[k] = i;
            }
        }
        let mut pos_n = vec![0usize; n.dim()];
        for list in &nvv {
            for (i, &k) in list.iter().enumerate() {
                pos_n[k] = i;
            }
        }
        let mut off = vec![0usize; nv + 1];
        for v in 0..nv {
            off[v + 1] = off[v] + mv[v].len() * nvv[v].len();
        }
        let nu = off[nv];
        let unk = |k: usize, l: usize| -> usize {
            let v = m.vert(k);
            off[v] + pos_m[k] * nvv[v].len() + pos_n[l]
        };
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (gp, &g) in alg.gens().iter().enumerate() {
            let (s, t) = (alg.src(g), alg.tgt(g));
            let am = m.act(gp);
            let an = n.act(gp);
            for &k in &mv[s] {
                for &lp in &nvv[t] {
                    let mut row = vec![field.zero(); nu];
                    let mut any = false;
                    for &j in &mv[t] {
                        let c = &am[(k, j)];
                        if !c.is_zero() {
                            let u = unk(j, lp);
                            row[u] = row[u].add(c);
                            any = true;
                        }
                    }
                    for &l in &nvv[s] {
                        let c = &an[(l, lp)];
                        if !c.is_zero() {
                            let u = unk(k, l);
                            row[u] = row[u].sub(c);
                            any = true;
                        }
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        let eq = Matrix::from_rows(field, nu, rows);
        let (ker, free_cols) = eq.right_kernel_free();
        let mut unk_pair = vec![(0usize, 0usize); nu];
        for v in 0..nv {
            for &k in &mv[v] {
                for &l in &nvv[v] {
                    unk_pair[unk(k, l)] = (k, l);
                }
            }
        }
        let mut basis = Vec::with_capacity(ker.rows());
        let mut free = Vec::with_capacity(ker.rows());
        for (i, &fc) in free_cols.iter().enumerate() {
            let mut f = Matrix::zeros(field, m.dim(), n.dim());
            for u in 0..nu {
                let x = &ker[(i, u)];
                if !x.is_zero() {
                    let (k, l) = unk_pair[u];
                    f[(k, l)] = x.clone();
                }
            }
            basis.push(f);
            free.push(unk_pair[fc]);
        }
        HomSpace { src: m.clone(), tgt: n.clone(), basis, free }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn tgt(&self) -> &Module {
        &self.tgt
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.src.field()
    }

    pub fn hom(&self, i: usize) -> ModHom {
        ModHom::raw(self.src.clone(), self.tgt.clone(), self.basis[i].clone())
    }

    pub fn homs(&self) -> Vec<ModHom> {
        (0..self.dim()).map(|i| self.hom(i)).collect()
    }

    /// Coordinates of a matrix known to lie in the space.
    pub fn coords(&self, f: &Matrix) -> Vec<Scalar> {
        self.free.iter().map(|&(k, l)| f[(k, l)].clone()).collect()
    }

    /// Coordinates, verifying membership.
    pub fn coords_checked(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        let c = self.coords(f);
        (self.combine(&c) == *f).then_some(c)
    }

    /// The element with the given coordinates.
    pub fn combine(&self, c: &[Scalar]) -> Matrix {
        let mut f = Matrix::zeros(self.field(), self.src.dim(), self.tgt.dim());
        for (x, b) in c.iter().zip(&self.basis) {
            f.add_scaled(x, b);
        }
        f
    }
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<ModHom> {
    HomSpace::new(m, n).homs()
}

/// `dim Hom(M, N)`.
pub fn hom_dim(m: &Module, n: &Module) -> usize {
    HomSpace::new(m, n).dim()
}
