//! Repe-complexes and their morphisms, stored as modules over window algebras.

use std::ops::Range;
use std::sync::{Arc, OnceLock};

use super::{RepcatError, Repetitive};
use crate::exactla::{Matrix, Scalar};
use crate::homalg::{gamma, gamma_inv, HomModule, Tensor};
use crate::qalg::Algebra;
use crate::rmod::{HomSpace, ModHom, Module};

/// A finitely supported repe-complex `{X_i, δ_i: X_i ⊗_R DR → X_{i−1}}` over `R`.
///
/// The canonical store is a module over the window algebra of `[lo, hi]` whose basis lists
/// the components in increasing degree, each in its own basis order.
#[derive(Clone, Debug)]
pub struct RepeComplex {
    rep: Arc<Repetitive>,
    lo: i32,
    hi: i32,
    comps: Vec<Module>,
    offsets: Vec<usize>,
    module: Module,
    tensors: OnceLock<Vec<Tensor>>,
    deltas: OnceLock<Vec<Matrix>>,
}

fn offsets_of(comps: &[Module]) -> Vec<usize> {
    let mut off = vec![0];
    for c in comps {
        off.push(off.last().copied().unwrap_or(0) + c.dim());
    }
    off
}

impl RepeComplex {
    /// The zero complex over `R`, with window `[0, 0]`.
    pub fn zero(rep: &Arc<Repetitive>) -> RepeComplex {
        let z = Module::zero(rep.algebra().clone());
        RepeComplex::assemble(rep, 0, vec![z], &[]).expect("zero complex")
    }

    /// Validated complex from components in degrees `lo, lo+1, …` and structure maps
    /// `δ_i` for `i = lo+1, …, hi`, each a matrix on the basis of `X_i ⊗_R DR`.
    pub fn new(rep: &Arc<Repetitive>, lo: i32, comps: Vec<Module>, deltas: Vec<Matrix>) -> Result<RepeComplex, RepcatError> {
        if comps.is_empty() {
            return Ok(RepeComplex::zero(rep).shift(lo));
        }
        if deltas.len() + 1 != comps.len() {
            return Err(RepcatError::Shape(format!("{} components need {} structure maps", comps.len(), comps.len() - 1)));
        }
        let comps: Vec<Module> = comps
            .into_iter()
            .map(|c| if **c.algebra() == **rep.algebra() { Ok(c.over(rep.algebra())) } else { Err(RepcatError::AlgebraMismatch) })
            .collect::<Result<_, _>>()?;
        let tensors: Vec<Tensor> = comps.iter().map(|c| Tensor::new(c, rep.dual())).collect();
        for (j, d) in deltas.iter().enumerate() {
            let i = lo + 1 + j as i32;
            let (t, target) = (&tensors[j + 1], &comps[j]);
            if d.rows() != t.dim() || d.cols() != target.dim() {
                return Err(RepcatError::BadDelta(
                    i,
                    format!("expected a {}x{} matrix, got {}x{}", t.dim(), target.dim(), d.rows(), d.cols()),
                ));
            }
            ModHom::new(t.module().clone(), target.clone(), d.clone()).map_err(|e| RepcatError::BadDelta(i, e.to_string()))?;
        }
        let x = RepeComplex::assemble_with(rep, lo, comps, &deltas, tensors)?;
        Ok(x)
    }

    /// Complex whose structure maps are given on spanning pairs `(x, d)` of `X_i ⊗_R DR`,
    /// `value(i, x, d)` being `δ_i(x ⊗ d) ∈ X_{i−1}`. The values must be balanced.
    pub fn from_pairs(
        rep: &Arc<Repetitive>,
        lo: i32,
        comps: Vec<Module>,
        mut value: impl FnMut(i32, usize, usize) -> Vec<Scalar>,
    ) -> Result<RepeComplex, RepcatError> {
        if comps.is_empty() {
            return Ok(RepeComplex::zero(rep).shift(lo));
        }
        let tensors: Vec<Tensor> = comps.iter().map(|c| Tensor::new(c, rep.dual())).collect();
        let deltas: Vec<Matrix> = (1..comps.len())
            .map(|j| {
                let i = lo + j as i32;
                tensors[j].map_from_pairs(comps[j - 1].dim(), |x, d| value(i, x, d))
            })
            .collect();
        RepeComplex::new(rep, lo, comps, deltas)
    }

    /// The trivial complex (all structure maps zero) with components in degrees `lo, lo+1, …`.
    pub fn trivial(rep: &Arc<Repetitive>, lo: i32, comps: Vec<Module>) -> Result<RepeComplex, RepcatError> {
        let field = rep.algebra().field();
        RepeComplex::from_pairs(rep, lo, comps.clone(), |i, _, _| vec![field.zero(); comps[(i - 1 - lo) as usize].dim()])
    }

    /// The complex concentrated in degree `k`.
    pub fn stalk(rep: &Arc<Repetitive>, m: &Module, k: i32) -> RepeComplex {
        RepeComplex::new(rep, k, vec![m.clone()], Vec::new()).expect("stalk complexes are valid")
    }

    fn assemble(rep: &Arc<Repetitive>, lo: i32, comps: Vec<Module>, deltas: &[Matrix]) -> Result<RepeComplex, RepcatError> {
        let tensors = comps.iter().map(|c| Tensor::new(c, rep.dual())).collect();
        RepeComplex::assemble_with(rep, lo, comps, deltas, tensors)
    }

    fn assemble_with(
        rep: &Arc<Repetitive>,
        lo: i32,
        comps: Vec<Module>,
        deltas: &[Matrix],
        tensors: Vec<Tensor>,
    ) -> Result<RepeComplex, RepcatError> {
        let hi = lo + comps.len() as i32 - 1;
        let alg = rep.window(lo, hi)?;
        let field = alg.field();
        let offsets = offsets_of(&comps);
        let n = offsets[comps.len()];
        let mut vert = Vec::with_capacity(n);
        for (j, c) in comps.iter().enumerate() {
            vert.extend(c.verts().iter().map(|&v| rep.vertex(lo, v, lo + j as i32)));
        }
        let r = rep.algebra();
        let dr = rep.dual();
        let mut acts = vec![Matrix::zeros(field, n, n); alg.gens().len()];
        for (j, c) in comps.iter().enumerate() {
            let i = lo + j as i32;
            for p in 0..r.gens().len() {
                acts[rep.arrow_gen(lo, p, i)].set_block(offsets[j], offsets[j], c.act(p));
            }
            if j == 0 {
                continue;
            }
            let (t, delta) = (&tensors[j], &deltas[j - 1]);
            for d in 0..dr.dim() {
                let a = &mut acts[rep.dual_gen(lo, hi, d, i)];
                for x in 0..c.dim() {
                    if c.vert(x) != dr.lvert(d) {
                        continue;
                    }
                    let img = Matrix::vec_mul(&t.class_of_basis(x, d), delta);
                    for (y, v) in img.into_iter().enumerate() {
                        if !v.is_zero() {
                            a[(offsets[j] + x, offsets[j - 1] + y)] = v;
                        }
                    }
                }
            }
        }
        for j in 2..comps.len() {
            let i = lo + j as i32;
            let rows: Vec<usize> = (offsets[j]..offsets[j + 1]).collect();
            let mid: Vec<usize> = (offsets[j - 1]..offsets[j]).collect();
            let cols: Vec<usize> = (offsets[j - 2]..offsets[j - 1]).collect();
            for d in 0..dr.dim() {
                let first = acts[rep.dual_gen(lo, hi, d, i)].submatrix(&rows, &mid);
                if first.is_zero() {
                    continue;
                }
                for d2 in 0..dr.dim() {
                    let second = acts[rep.dual_gen(lo, hi, d2, i - 1)].submatrix(&mid, &cols);
                    if !first.mul(&second).is_zero() {
                        return Err(RepcatError::SquareZero(i));
                    }
                }
            }
        }
        let module = Module::new(alg, vert, acts)?;
        let tensors_cell = OnceLock::new();
        let _ = tensors_cell.set(tensors);
        let deltas_cell = OnceLock::new();
        let _ = deltas_cell.set(deltas.to_vec());
        Ok(RepeComplex { rep: rep.clone(), lo, hi, comps, offsets, module, tensors: tensors_cell, deltas: deltas_cell })
    }

    /// Reads a module over the window algebra of `[lo, hi]` as a complex.
    ///
    /// Returns the complex and the permutation `order`: basis vector `j` of the complex is
    /// basis vector `order[j]` of `m`.
    pub fn from_module(rep: &Arc<Repetitive>, lo: i32, hi: i32, m: &Module) -> Result<(RepeComplex, Vec<usize>), RepcatError> {
        let alg = rep.window(lo, hi)?;
        if **m.algebra() != *alg {
            return Err(RepcatError::AlgebraMismatch);
        }
        let m = m.over(&alg);
        let degree = |k: usize| rep.split_vertex(lo, m.vert(k)).1;
        let mut order: Vec<usize> = (0..m.dim()).collect();
        order.sort_by_key(|&k| degree(k));
        let r = rep.algebra();
        let mut comps = Vec::new();
        for i in lo..=hi {
            let rows: Vec<usize> = order.iter().copied().filter(|&k| degree(k) == i).collect();
            let vert = rows.iter().map(|&k| rep.split_vertex(lo, m.vert(k)).0).collect();
            let acts = (0..r.gens().len()).map(|p| m.act(rep.arrow_gen(lo, p, i)).submatrix(&rows, &rows)).collect();
            comps.push(Module::new(r.clone(), vert, acts)?);
        }
        let acts = m.acts().iter().map(|a| a.submatrix(&order, &order)).collect();
        let vert = order.iter().map(|&k| m.vert(k)).collect();
        let module = Module::new(alg, vert, acts)?;
        let offsets = offsets_of(&comps);
        let x = RepeComplex { rep: rep.clone(), lo, hi, comps, offsets, module, tensors: OnceLock::new(), deltas: OnceLock::new() };
        Ok((x, order))
    }

    pub fn rep(&self) -> &Arc<Repetitive> {
        &self.rep
    }

    /// The algebra `R`.
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.rep.algebra()
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.hi
    }

    /// The window algebra of `[lo, hi]`.
    pub fn window_algebra(&self) -> &Arc<Algebra> {
        self.module.algebra()
    }

    /// The complex as a module over its window algebra.
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// `X_i`, the zero module outside the window.
    pub fn component(&self, i: i32) -> Module {
        if i < self.lo || i > self.hi {
            return Module::zero(self.algebra().clone());
        }
        self.comps[(i - self.lo) as usize].clone()
    }

    /// Components in degrees `lo..=hi`.
    pub fn components(&self) -> &[Module] {
        &self.comps
    }

    /// Basis positions of `X_i` inside the module.
    pub fn range(&self, i: i32) -> Range<usize> {
        if i < self.lo || i > self.hi {
            let end = if i < self.lo { 0 } else { self.dim() };
            return end..end;
        }
        let j = (i - self.lo) as usize;
        self.offsets[j]..self.offsets[j + 1]
    }

    fn tensors(&self) -> &Vec<Tensor> {
        self.tensors.get_or_init(|| self.comps.iter().map(|c| Tensor::new(c, self.rep.dual())).collect())
    }

    /// `X_i ⊗_R DR` (requires `lo ≤ i ≤ hi`).
    pub fn tensor(&self, i: i32) -> &Tensor {
        &self.tensors()[(i - self.lo) as usize]
    }

    /// `δ_i` as a matrix from the basis of `X_i ⊗_R DR` to `X_{i−1}`.
    pub fn delta(&self, i: i32) -> Matrix {
        let field = self.module.field();
        if i <= self.lo || i > self.hi {
            let rows = if i == self.lo { self.tensor(i).dim() } else { 0 };
            return Matrix::zeros(field, rows, self.component(i - 1).dim());
        }
        self.deltas()[(i - self.lo - 1) as usize].clone()
    }

    fn deltas(&self) -> &Vec<Matrix> {
        self.deltas.get_or_init(|| {
            (self.lo + 1..=self.hi)
                .map(|i| {
                    let (src, tgt) = (self.range(i), self.range(i - 1));
                    self.tensor(i).map_from_pairs(tgt.len(), |x, d| {
                        let a = self.module.act(self.rep.dual_gen(self.lo, self.hi, d, i));
                        (tgt.clone()).map(|c| a[(src.start + x, c)].clone()).collect()
                    })
                })
                .collect()
        })
    }

    /// `x·(d, i) = δ_i(x ⊗ d)` for `x ∈ X_i` and `d ∈ DR`, both as coordinate vectors.
    pub fn act_dual(&self, i: i32, x: &[Scalar], d: &[Scalar]) -> Vec<Scalar> {
        if i <= self.lo || i > self.hi {
            return vec![self.module.field().zero(); self.component(i - 1).dim()];
        }
        Matrix::vec_mul(&self.tensor(i).class_of(x, d), &self.deltas()[(i - self.lo - 1) as usize])
    }

    /// True when every structure map vanishes.
    pub fn is_trivial(&self) -> bool {
        (self.lo + 1..=self.hi).all(|i| self.delta(i).is_zero())
    }

    /// Smallest window containing the nonzero components.
    pub fn support(&self) -> Option<(i32, i32)> {
        let nz: Vec<i32> = (self.lo..=self.hi).filter(|&i| !self.component(i).is_zero()).collect();
        Some((*nz.first()?, *nz.last()?))
    }

    /// `(degree, dimension vector)` for each nonzero component.
    pub fn dims(&self) -> Vec<(i32, Vec<usize>)> {
        (self.lo..=self.hi)
            .filter(|&i| !self.component(i).is_zero())
            .map(|i| (i, self.component(i).dim_vector()))
            .collect()
    }

    /// The same complex over the window `[lo, hi]`, which must contain the support.
    pub fn rewindow(&self, lo: i32, hi: i32) -> Result<RepeComplex, RepcatError> {
        if lo == self.lo && hi == self.hi {
            return Ok(self.clone());
        }
        if let Some((a, b)) = self.support() {
            if a < lo || b > hi {
                return Err(RepcatError::Shape(format!("support [{a}, {b}] does not fit in [{lo}, {hi}]")));
            }
        }
        let alg = self.rep.window(lo, hi)?;
        let field = alg.field();
        let n = self.dim();
        let r = self.rep.algebra();
        let mut acts = vec![Matrix::zeros(field, n, n); alg.gens().len()];
        let comps: Vec<Module> = (lo..=hi).map(|i| self.component(i)).collect();
        for i in lo.max(self.lo)..=hi.min(self.hi) {
            for p in 0..r.gens().len() {
                acts[self.rep.arrow_gen(lo, p, i)] = self.module.act(self.rep.arrow_gen(self.lo, p, i)).clone();
            }
            if i > lo && i > self.lo {
                for d in 0..self.rep.dual().dim() {
                    acts[self.rep.dual_gen(lo, hi, d, i)] = self.module.act(self.rep.dual_gen(self.lo, self.hi, d, i)).clone();
                }
            }
        }
        let vert = self
            .module
            .verts()
            .iter()
            .map(|&w| {
                let (v, i) = self.rep.split_vertex(self.lo, w);
                self.rep.vertex(lo, v, i)
            })
            .collect();
        let module = Module::new(alg, vert, acts)?;
        let offsets = offsets_of(&comps);
        Ok(RepeComplex { rep: self.rep.clone(), lo, hi, comps, offsets, module, tensors: OnceLock::new(), deltas: OnceLock::new() })
    }

    /// The complex on the window spanned by its support (the zero complex if empty).
    pub fn trim(&self) -> RepeComplex {
        match self.support() {
            Some((a, b)) => self.rewindow(a, b).expect("support fits"),
            None => RepeComplex::zero(&self.rep),
        }
    }

    /// `X[n]` with `(X[n])_i = X_{i−n}` and the same structure maps.
    pub fn shift(&self, n: i32) -> RepeComplex {
        let alg = self.rep.window(self.lo + n, self.hi + n).expect("shifted window within bounds");
        let module = Module::new(alg, self.module.verts().to_vec(), self.module.acts().to_vec()).expect("relabelled module");
        RepeComplex {
            rep: self.rep.clone(),
            lo: self.lo + n,
            hi: self.hi + n,
            comps: self.comps.clone(),
            offsets: self.offsets.clone(),
            module,
            tensors: self.tensors.clone(),
            deltas: self.deltas.clone(),
        }
    }

    /// Checked shift, reporting windows beyond the bound.
    pub fn try_shift(&self, n: i32) -> Result<RepeComplex, RepcatError> {
        Repetitive::check_window(self.lo + n, self.hi + n)?;
        Ok(self.shift(n))
    }

    /// Direct sum over the union of the windows, componentwise in the given order.
    pub fn direct_sum(parts: &[&RepeComplex]) -> Result<RepeComplex, RepcatError> {
        let first = parts.first().ok_or_else(|| RepcatError::Shape("empty direct sum".into()))?;
        let lo = parts.iter().map(|p| p.lo).min().unwrap_or(0);
        let hi = parts.iter().map(|p| p.hi).max().unwrap_or(0);
        let wide: Vec<RepeComplex> = parts.iter().map(|p| p.rewindow(lo, hi)).collect::<Result<_, _>>()?;
        let alg = first.rep.window(lo, hi)?;
        let sum = Module::direct_sum(&alg, &wide.iter().map(|p| &p.module).collect::<Vec<_>>());
        Ok(RepeComplex::from_module(&first.rep, lo, hi, &sum)?.0)
    }

    /// `δ^H_i: X_i → Hom_R(DR, X_{i−1})`, the image of `δ_i` under the adjunction.
    pub fn hom_form(&self, i: i32) -> (HomModule, Matrix) {
        let hm = HomModule::new(self.rep.dual(), &self.component(i - 1));
        let t = if i >= self.lo && i <= self.hi { self.tensor(i).clone() } else { Tensor::new(&self.component(i), self.rep.dual()) };
        let g = gamma(&t, &hm, &self.delta(i));
        (hm, g)
    }

    /// Complex from Hom-form structure maps `X_i → Hom_R(DR, X_{i−1})` for `i = lo+1, …, hi`,
    /// each given in the coordinates of [`HomModule::new`]`(DR, X_{i−1})`.
    pub fn from_hom_form(rep: &Arc<Repetitive>, lo: i32, comps: Vec<Module>, maps: Vec<Matrix>) -> Result<RepeComplex, RepcatError> {
        if maps.len() + 1 != comps.len().max(1) {
            return Err(RepcatError::Shape("one Hom-form map per degree above lo required".into()));
        }
        let deltas = maps
            .iter()
            .enumerate()
            .map(|(j, g)| {
                let t = Tensor::new(&comps[j + 1], rep.dual());
                let hm = HomModule::new(rep.dual(), &comps[j]);
                gamma_inv(&t, &hm, g)
            })
            .collect();
        RepeComplex::new(rep, lo, comps, deltas)
    }

    /// True when both complexes are isomorphic (compared over a common window).
    pub fn is_isomorphic(&self, other: &RepeComplex) -> Result<bool, RepcatError> {
        if self.dim() != other.dim() {
            return Ok(false);
        }
        let (a, b) = common_window(self, other)?;
        Ok(crate::rmod::is_isomorphic(a.module(), b.module())?.is_some())
    }
}

/// Both complexes over the union of their windows.
pub fn common_window(x: &RepeComplex, y: &RepeComplex) -> Result<(RepeComplex, RepeComplex), RepcatError> {
    if **x.algebra() != **y.algebra() {
        return Err(RepcatError::AlgebraMismatch);
    }
    let (lo, hi) = (x.lo.min(y.lo), x.hi.max(y.hi));
    Ok((x.rewindow(lo, hi)?, y.rewindow(lo, hi)?))
}

/// Validates components and structure maps; see [`RepeComplex::new`].
pub fn make_repe(rep: &Arc<Repetitive>, lo: i32, comps: Vec<Module>, deltas: Vec<Matrix>) -> Result<RepeComplex, RepcatError> {
    RepeComplex::new(rep, lo, comps, deltas)
}

/// A morphism of repe-complexes over a common window.
#[derive(Clone, Debug)]
pub struct RepeHom {
    src: RepeComplex,
    tgt: RepeComplex,
    hom: ModHom,
}

impl RepeHom {
    /// Morphism from per-degree matrices `f_i: X_i → Y_i`, `i = lo..=hi`, checking that each
    /// is `R`-linear and commutes with the structure maps.
    pub fn new(src: &RepeComplex, tgt: &RepeComplex, maps: &[Matrix]) -> Result<RepeHom, RepcatError> {
        if src.lo != tgt.lo || src.hi != tgt.hi || **src.algebra() != **tgt.algebra() {
            return Err(RepcatError::Shape("morphism between complexes over different windows".into()));
        }
        if maps.len() != src.comps.len() {
            return Err(RepcatError::Shape("one matrix per degree required".into()));
        }
        let field = src.module.field();
        let mut mat = Matrix::zeros(field, src.dim(), tgt.dim());
        for (j, m) in maps.iter().enumerate() {
            let i = src.lo + j as i32;
            if m.rows() != src.range(i).len() || m.cols() != tgt.range(i).len() {
                return Err(RepcatError::Shape(format!("map at degree {i} has the wrong size")));
            }
            mat.set_block(src.range(i).start, tgt.range(i).start, m);
        }
        RepeHom::from_matrix(src, tgt, mat)
    }

    /// Morphism from a full matrix between the window modules.
    pub fn from_matrix(src: &RepeComplex, tgt: &RepeComplex, mat: Matrix) -> Result<RepeHom, RepcatError> {
        let (a, b) = (src.module(), tgt.module());
        if mat.rows() != a.dim() || mat.cols() != b.dim() {
            return Err(RepcatError::Shape("morphism matrix has the wrong size".into()));
        }
        let alg = src.window_algebra();
        for (g, &gb) in alg.gens().iter().enumerate() {
            if a.act(g).mul(&mat) != mat.mul(b.act(g)) {
                let (_, i) = src.rep.split_vertex(src.lo, alg.src(gb));
                return Err(RepcatError::NotMorphism(i));
            }
        }
        let hom = ModHom::new(a.clone(), b.clone(), mat).map_err(|_| RepcatError::NotMorphism(src.lo))?;
        Ok(RepeHom { src: src.clone(), tgt: tgt.clone(), hom })
    }

    pub(crate) fn from_hom(src: &RepeComplex, tgt: &RepeComplex, hom: ModHom) -> RepeHom {
        RepeHom { src: src.clone(), tgt: tgt.clone(), hom }
    }

    pub fn identity(x: &RepeComplex) -> RepeHom {
        RepeHom { src: x.clone(), tgt: x.clone(), hom: ModHom::identity(x.module()) }
    }

    pub fn zero(x: &RepeComplex, y: &RepeComplex) -> RepeHom {
        RepeHom { src: x.clone(), tgt: y.clone(), hom: ModHom::zero(x.module(), y.module()) }
    }

    pub fn src(&self) -> &RepeComplex {
        &self.src
    }

    pub fn tgt(&self) -> &RepeComplex {
        &self.tgt
    }

    pub fn hom(&self) -> &ModHom {
        &self.hom
    }

    pub fn matrix(&self) -> &Matrix {
        self.hom.matrix()
    }

    /// `f_i: X_i → Y_i`.
    pub fn map(&self, i: i32) -> Matrix {
        let (r, c) = (self.src.range(i), self.tgt.range(i));
        self.hom.matrix().submatrix(&r.collect::<Vec<_>>(), &c.collect::<Vec<_>>())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RepeHom) -> RepeHom {
        RepeHom { src: self.src.clone(), tgt: next.tgt.clone(), hom: self.hom.then(&next.hom) }
    }

    pub fn add(&self, o: &RepeHom) -> RepeHom {
        RepeHom { src: self.src.clone(), tgt: self.tgt.clone(), hom: self.hom.add(&o.hom) }
    }

    pub fn scale(&self, c: &Scalar) -> RepeHom {
        RepeHom { src: self.src.clone(), tgt: self.tgt.clone(), hom: self.hom.scale(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.hom.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.hom.is_iso()
    }

    /// Kernel with its inclusion.
    pub fn kernel(&self) -> Result<(RepeComplex, RepeHom), RepcatError> {
        let (k, inc) = self.hom.kernel();
        let (kx, order) = RepeComplex::from_module(&self.src.rep, self.src.lo, self.src.hi, &k)?;
        let mat = inc.matrix().select_rows(&order);
        Ok((kx.clone(), RepeHom::from_hom(&kx, &self.src, ModHom::new(kx.module().clone(), self.src.module().clone(), mat)?)))
    }

    /// Cokernel with the projection.
    pub fn cokernel(&self) -> Result<(RepeComplex, RepeHom), RepcatError> {
        let (c, proj) = self.hom.cokernel();
        let (cx, order) = RepeComplex::from_module(&self.src.rep, self.src.lo, self.src.hi, &c)?;
        let mat = proj.matrix().select_cols(&order);
        Ok((cx.clone(), RepeHom::from_hom(&self.tgt, &cx, ModHom::new(self.tgt.module().clone(), cx.module().clone(), mat)?)))
    }

    /// The same morphism over a wider window.
    pub fn rewindow(&self, lo: i32, hi: i32) -> Result<RepeHom, RepcatError> {
        let (s, t) = (self.src.rewindow(lo, hi)?, self.tgt.rewindow(lo, hi)?);
        Ok(RepeHom { hom: ModHom::new(s.module().clone(), t.module().clone(), self.matrix().clone())?, src: s, tgt: t })
    }
}

/// A basis of the morphisms `X → Y`, over the union of the windows.
pub fn repe_hom_basis(x: &RepeComplex, y: &RepeComplex) -> Result<Vec<RepeHom>, RepcatError> {
    let (a, b) = common_window(x, y)?;
    let hs = HomSpace::new(a.module(), b.module());
    Ok(hs.homs().into_iter().map(|h| RepeHom::from_hom(&a, &b, h)).collect())
}

/// The indecomposable projective-injective `e_{(v,k)}·R̂`: `P(v)` in degree `k` over
/// `e_v·DR ≅ I(v)` in degree `k − 1`, with the canonical isomorphism as structure map.
pub fn proj_object(rep: &Arc<Repetitive>, v: usize, k: i32) -> Result<RepeComplex, RepcatError> {
    Ok(proj_object_with_top(rep, v, k)?.0)
}

/// [`proj_object`] together with the basis position of its top generator `e_{(v,k)}`.
pub(crate) fn proj_object_with_top(rep: &Arc<Repetitive>, v: usize, k: i32) -> Result<(RepeComplex, usize), RepcatError> {
    let alg = rep.window(k - 1, k)?;
    let w = rep.vertex(k - 1, v, k);
    let p = Module::projective(alg.clone(), w);
    let basis: Vec<usize> = (0..alg.dim()).filter(|&b| alg.src(b) == w).collect();
    let top = basis.iter().position(|&b| b == alg.idempotent(w)).expect("idempotent lies in its projective");
    let (x, order) = RepeComplex::from_module(rep, k - 1, k, &p)?;
    let pos = order.iter().position(|&o| o == top).expect("permutation");
    Ok((x, pos))
}

/// A seeded pseudo-random complex over the window `[lo, hi]` whose components have
/// dimension at most `max_dim` at every vertex, drawn as a random window module.
pub fn random_complex<G: rand::Rng>(rep: &Arc<Repetitive>, lo: i32, hi: i32, rng: &mut G, max_dim: usize) -> Result<RepeComplex, RepcatError> {
    let alg = rep.window(lo, hi)?;
    loop {
        let m = crate::rmod::random_module(&alg, rng, 3);
        if m.dim_vector().iter().all(|&d| d <= max_dim) {
            return Ok(RepeComplex::from_module(rep, lo, hi, &m)?.0);
        }
    }
}

/// A seeded pseudo-random morphism `X → Y` over the union of the windows.
pub fn random_repe_hom<G: rand::Rng>(x: &RepeComplex, y: &RepeComplex, rng: &mut G) -> Result<RepeHom, RepcatError> {
    let (a, b) = common_window(x, y)?;
    let h = crate::rmod::random_hom(a.module(), b.module(), rng);
    Ok(RepeHom::from_hom(&a, &b, h))
}
