//! Right modules given by one action matrix per algebra generator.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{ModHom, ModuleError};
use crate::exactla::{Coordinates, Field, Matrix, Scalar};
use crate::qalg::Algebra;

/// A finite-dimensional right module.
///
/// Basis vector `k` lies in `M·e_{vert[k]}`; generator `g` acts by the row-vector
/// matrix `acts[g]`, whose entry `(k, l)` vanishes unless `vert[k] = src(g)` and
/// `vert[l] = tgt(g)`. Clones share storage.
#[derive(Clone, Debug)]
pub struct Module {
    alg: Arc<Algebra>,
    vert: Arc<Vec<usize>>,
    acts: Arc<Vec<Matrix>>,
}

/// The opposite algebra, cached so that `op(op(A))` returns `A` itself.
pub fn opposite_shared(a: &Arc<Algebra>) -> Arc<Algebra> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<(Arc<Algebra>, Arc<Algebra>)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().expect("opposite cache poisoned");
        if let Some(list) = guard.get(&a.fingerprint()) {
            for (x, y) in list {
                if **x == **a {
                    return y.clone();
                }
            }
        }
    }
    let op = Arc::new(a.opposite());
    let mut guard = cache.lock().expect("opposite cache poisoned");
    guard.entry(a.fingerprint()).or_default().push((a.clone(), op.clone()));
    guard.entry(op.fingerprint()).or_default().push((op.clone(), a.clone()));
    op
}

impl Module {
    /// Builds and validates a module from generator actions.
    pub fn new(alg: Arc<Algebra>, vert: Vec<usize>, acts: Vec<Matrix>) -> Result<Module, ModuleError> {
        let m = Module { alg, vert: Arc::new(vert), acts: Arc::new(acts) };
        m.validate()?;
        Ok(m)
    }

    /// Builds a module whose validity is guaranteed by construction.
    pub(crate) fn raw(alg: Arc<Algebra>, vert: Vec<usize>, acts: Vec<Matrix>) -> Module {
        let m = Module { alg, vert: Arc::new(vert), acts: Arc::new(acts) };
        debug_assert!(m.validate().is_ok(), "constructed module is invalid: {:?}", m.validate());
        m
    }

    /// A quiver representation: `dims[v]` per vertex and one matrix `M_u → M_v` per arrow
    /// (generator), with the basis ordered vertex by vertex.
    pub fn from_representation(
        alg: Arc<Algebra>,
        dims: &[usize],
        arrow_mats: &[Matrix],
    ) -> Result<Module, ModuleError> {
        if dims.len() != alg.nverts() {
            return Err(ModuleError::Shape(format!(
                "dimension vector has {} entries, algebra has {} vertices",
                dims.len(),
                alg.nverts()
            )));
        }
        if arrow_mats.len() != alg.gens().len() {
            return Err(ModuleError::Shape("one matrix per generator required".into()));
        }
        let mut off = vec![0usize; dims.len() + 1];
        for v in 0..dims.len() {
            off[v + 1] = off[v] + dims[v];
        }
        let n = off[dims.len()];
        let vert: Vec<usize> = (0..dims.len()).flat_map(|v| std::iter::repeat_n(v, dims[v])).collect();
        let mut acts = Vec::new();
        for (gp, &g) in alg.gens().iter().enumerate() {
            let (s, t) = (alg.src(g), alg.tgt(g));
            let a = &arrow_mats[gp];
            if a.rows() != dims[s] || a.cols() != dims[t] {
                return Err(ModuleError::Shape(format!(
                    "matrix for `{}` must be {}x{}, got {}x{}",
                    alg.label(g),
                    dims[s],
                    dims[t],
                    a.rows(),
                    a.cols()
                )));
            }
            let mut full = Matrix::zeros(alg.field(), n, n);
            full.set_block(off[s], off[t], a);
            acts.push(full);
        }
        Module::new(alg, vert, acts)
    }

    /// Checks shapes, vertex compatibility and the defining relations.
    pub fn validate(&self) -> Result<(), ModuleError> {
        let n = self.dim();
        if self.acts.len() != self.alg.gens().len() {
            return Err(ModuleError::Shape("one action matrix per generator required".into()));
        }
        if self.vert.iter().any(|&v| v >= self.alg.nverts()) {
            return Err(ModuleError::Shape("vertex label out of range".into()));
        }
        for (gp, &g) in self.alg.gens().iter().enumerate() {
            let a = &self.acts[gp];
            if a.rows() != n || a.cols() != n {
                return Err(ModuleError::Shape(format!("action of `{}` has wrong size", self.alg.label(g))));
            }
            let (s, t) = (self.alg.src(g), self.alg.tgt(g));
            for k in 0..n {
                for l in 0..n {
                    if !a[(k, l)].is_zero() && (self.vert[k] != s || self.vert[l] != t) {
                        return Err(ModuleError::BadAction(format!(
                            "`{}` does not respect vertices",
                            self.alg.label(g)
                        )));
                    }
                }
            }
        }
        for (ri, rel) in self.alg.presentation().iter().enumerate() {
            let mut acc = Matrix::zeros(self.field(), n, n);
            for t in rel {
                let mut m = self.idem_proj(t.start);
                for &g in &t.word {
                    m = m.mul(&self.acts[g]);
                }
                acc.add_scaled(&t.coef, &m);
            }
            if !acc.is_zero() {
                return Err(ModuleError::BadAction(format!("relation {ri} of `{}` fails", self.alg.name())));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.vert.len()
    }

    pub fn vert(&self, k: usize) -> usize {
        self.vert[k]
    }

    pub fn verts(&self) -> &[usize] {
        &self.vert
    }

    /// Action matrix of generator position `g`.
    pub fn act(&self, g: usize) -> &Matrix {
        &self.acts[g]
    }

    pub fn acts(&self) -> &[Matrix] {
        &self.acts
    }

    /// Basis indices lying at vertex `v`.
    pub fn basis_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.vert[k] == v).collect()
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        let mut d = vec![0; self.alg.nverts()];
        for &v in self.vert.iter() {
            d[v] += 1;
        }
        d
    }

    fn idem_proj(&self, v: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        for k in 0..self.dim() {
            if self.vert[k] == v {
                m[(k, k)] = self.field().one();
            }
        }
        m
    }

    /// Action matrix of an arbitrary algebra basis element.
    pub fn act_basis(&self, b: usize) -> Matrix {
        if self.alg.is_idempotent(b) {
            return self.idem_proj(self.alg.src(b));
        }
        let w = self.alg.word(b);
        let mut m = self.acts[w[0]].clone();
        for &g in &w[1..] {
            m = m.mul(&self.acts[g]);
        }
        m
    }

    /// `x · b` for a row vector `x` and basis element `b`.
    pub fn act_vec(&self, x: &[Scalar], b: usize) -> Vec<Scalar> {
        if self.alg.is_idempotent(b) {
            let v = self.alg.src(b);
            return x
                .iter()
                .enumerate()
                .map(|(k, c)| if self.vert[k] == v { c.clone() } else { self.field().zero() })
                .collect();
        }
        let mut y = x.to_vec();
        for &g in self.alg.word(b) {
            y = Matrix::vec_mul(&y, &self.acts[g]);
        }
        y
    }

    pub fn zero(alg: Arc<Algebra>) -> Module {
        let acts = vec![Matrix::zeros(alg.field(), 0, 0); alg.gens().len()];
        Module { alg, vert: Arc::new(Vec::new()), acts: Arc::new(acts) }
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The simple module at vertex `v`.
    pub fn simple(alg: Arc<Algebra>, v: usize) -> Module {
        let acts = vec![Matrix::zeros(alg.field(), 1, 1); alg.gens().len()];
        Module::raw(alg, vec![v], acts)
    }

    /// The indecomposable projective `e_v·A` with basis the algebra basis elements starting at `v`.
    pub fn projective(alg: Arc<Algebra>, v: usize) -> Module {
        let basis: Vec<usize> = (0..alg.dim()).filter(|&b| alg.src(b) == v).collect();
        let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let n = basis.len();
        let vert = basis.iter().map(|&b| alg.tgt(b)).collect();
        let mut acts = Vec::new();
        for &g in alg.gens() {
            let mut m = Matrix::zeros(alg.field(), n, n);
            for (i, &b) in basis.iter().enumerate() {
                for (k, c) in alg.mult_basis(b, g) {
                    m[(i, pos[k])] = c.clone();
                }
            }
            acts.push(m);
        }
        Module::raw(alg, vert, acts)
    }

    /// The indecomposable injective `D(A·e_v)`.
    pub fn injective(alg: Arc<Algebra>, v: usize) -> Module {
        let op = opposite_shared(&alg);
        Module::projective(op, v).dual()
    }

    /// The regular module `A_A`, a sum of the projectives.
    pub fn regular(alg: Arc<Algebra>) -> Module {
        let parts: Vec<Module> = (0..alg.nverts()).map(|v| Module::projective(alg.clone(), v)).collect();
        Module::direct_sum(&alg, &parts.iter().collect::<Vec<_>>())
    }

    /// The dual `D(M)` over the opposite algebra: same vertex labels, transposed actions.
    pub fn dual(&self) -> Module {
        let op = opposite_shared(&self.alg);
        let acts = self.acts.iter().map(Matrix::transpose).collect();
        Module::raw(op, self.vert.to_vec(), acts)
    }

    /// The same module regarded over an equal algebra handle.
    pub fn over(&self, alg: &Arc<Algebra>) -> Module {
        assert!(**alg == *self.alg, "algebras differ");
        Module { alg: alg.clone(), vert: self.vert.clone(), acts: self.acts.clone() }
    }

    /// Direct sum with block-diagonal actions, in the order given.
    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[&Module]) -> Module {
        let mut vert = Vec::new();
        for p in parts {
            assert!(*p.alg == **alg, "direct sum over different algebras");
            vert.extend(p.vert.iter().copied());
        }
        let acts = (0..alg.gens().len())
            .map(|g| Matrix::block_diag(alg.field(), &parts.iter().map(|p| &p.acts[g]).collect::<Vec<_>>()))
            .collect();
        Module { alg: alg.clone(), vert: Arc::new(vert), acts: Arc::new(acts) }
    }

    /// `n` copies of the module.
    pub fn power(&self, n: usize) -> Module {
        Module::direct_sum(&self.alg, &vec![self; n])
    }

    /// Transports the structure along an invertible change of basis `c`
    /// (row `k` of `c` is the new `k`-th basis vector); `c` must be vertex-homogeneous.
    pub fn rebase(&self, c: &Matrix, vert: Vec<usize>) -> Result<Module, ModuleError> {
        let inv = c.inverse().ok_or_else(|| ModuleError::Shape("change of basis is singular".into()))?;
        let acts = self.acts.iter().map(|a| c.mul(a).mul(&inv)).collect();
        Module::new(self.alg.clone(), vert, acts)
    }

    /// Submodule spanned by `rows` (vectors in `M`), each supported at one vertex.
    ///
    /// Returns the submodule and its inclusion.
    pub fn submodule(&self, rows: &Matrix) -> Result<(Module, ModHom), ModuleError> {
        let mut vert = Vec::with_capacity(rows.rows());
        for i in 0..rows.rows() {
            let vs: Vec<usize> = (0..self.dim()).filter(|&k| !rows[(i, k)].is_zero()).map(|k| self.vert[k]).collect();
            match vs.first() {
                None => return Err(ModuleError::NotSubmodule("zero spanning vector".into())),
                Some(&v) if vs.iter().all(|&w| w == v) => vert.push(v),
                _ => return Err(ModuleError::NotSubmodule("spanning vector is not vertex-homogeneous".into())),
            }
        }
        let coords = Coordinates::new(rows).map_err(|_| ModuleError::NotSubmodule("dependent spanning set".into()))?;
        let mut acts = Vec::new();
        for a in self.acts.iter() {
            let img = rows.mul(a);
            let c = coords
                .coords_rows(&img)
                .ok_or_else(|| ModuleError::NotSubmodule("span is not closed under the action".into()))?;
            acts.push(c);
        }
        let sub = Module::raw(self.alg.clone(), vert, acts);
        let inc = ModHom::raw(sub.clone(), self.clone(), rows.clone());
        Ok((sub, inc))
    }

    /// Submodule generated by arbitrary vectors, closed under the action.
    pub fn generated_submodule(&self, gens: &Matrix) -> (Module, ModHom) {
        let mut span = self.split_by_vertex(gens);
        loop {
            let mut more = vec![&span];
            let imgs: Vec<Matrix> = self.acts.iter().map(|a| span.mul(a)).collect();
            more.extend(imgs.iter());
            let next = self.split_by_vertex(&Matrix::vstack(&more));
            if next.rows() == span.rows() {
                break;
            }
            span = next;
        }
        self.submodule(&span).expect("generated span is a submodule")
    }

    /// Vertex-homogeneous basis of the span of the vertex components of `rows`.
    pub fn split_by_vertex(&self, rows: &Matrix) -> Matrix {
        let mut parts: Vec<Matrix> = Vec::new();
        for v in 0..self.alg.nverts() {
            let idx = self.basis_at(v);
            if idx.is_empty() {
                continue;
            }
            let all: Vec<usize> = (0..rows.rows()).collect();
            let block = rows.submatrix(&all, &idx).row_space();
            let mut full = Matrix::zeros(self.field(), block.rows(), self.dim());
            for i in 0..block.rows() {
                for (j, &k) in idx.iter().enumerate() {
                    full[(i, k)] = block[(i, j)].clone();
                }
            }
            parts.push(full);
        }
        if parts.is_empty() {
            return Matrix::zeros(self.field(), 0, self.dim());
        }
        Matrix::vstack(&parts.iter().collect::<Vec<_>>())
    }

    /// Quotient by the submodule spanned by `rows`; returns the quotient and the projection.
    pub fn quotient(&self, rows: &Matrix) -> (Module, ModHom) {
        let n = self.dim();
        let f = self.field();
        let mut q_cols: Vec<(usize, Vec<Scalar>)> = Vec::new();
        let mut s_rows: Vec<Vec<Scalar>> = Vec::new();
        let mut vert = Vec::new();
        for v in 0..self.alg.nverts() {
            let idx = self.basis_at(v);
            if idx.is_empty() {
                continue;
            }
            let all: Vec<usize> = (0..rows.rows()).collect();
            let block = rows.submatrix(&all, &idx);
            let (q, _, free) = Matrix::cokernel_map(&block);
            for (j, &fc) in free.iter().enumerate() {
                let mut col = vec![f.zero(); n];
                for (i, &k) in idx.iter().enumerate() {
                    col[k] = q[(i, j)].clone();
                }
                q_cols.push((v, col));
                let mut srow = vec![f.zero(); n];
                srow[idx[fc]] = f.one();
                s_rows.push(srow);
                vert.push(v);
            }
        }
        let d = vert.len();
        let mut q = Matrix::zeros(f, n, d);
        for (j, (_, col)) in q_cols.iter().enumerate() {
            for (k, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    q[(k, j)] = x.clone();
                }
            }
        }
        let s = Matrix::from_rows(f, n, s_rows);
        let acts = self.acts.iter().map(|a| s.mul(a).mul(&q)).collect();
        let quo = Module::raw(self.alg.clone(), vert, acts);
        let proj = ModHom::raw(self.clone(), quo.clone(), q);
        (quo, proj)
    }

    /// `M·rad A` with its inclusion.
    pub fn radical(&self) -> (Module, ModHom) {
        let parts: Vec<&Matrix> = self.acts.iter().collect();
        let img = if parts.is_empty() { Matrix::zeros(self.field(), 0, self.dim()) } else { Matrix::vstack(&parts) };
        let rows = self.split_by_vertex(&img);
        self.submodule(&rows).expect("radical is a submodule")
    }

    /// `M / M·rad A` with the projection.
    pub fn top(&self) -> (Module, ModHom) {
        let (_, inc) = self.radical();
        self.quotient(inc.matrix())
    }

    /// The annihilator of the radical, with its inclusion.
    pub fn socle(&self) -> (Module, ModHom) {
        let rows = if self.acts.is_empty() {
            Matrix::identity(self.field(), self.dim())
        } else {
            Matrix::hstack(&self.acts.iter().collect::<Vec<_>>()).left_kernel()
        };
        let rows = self.split_by_vertex(&rows);
        self.submodule(&rows).expect("socle is a submodule")
    }

    /// True when every generator acts by zero.
    pub fn is_semisimple(&self) -> bool {
        self.acts.iter().all(Matrix::is_zero)
    }

    /// Representation data: per-vertex dimensions and per-generator blocks, for a
    /// module whose basis is already ordered vertex by vertex.
    pub fn representation_blocks(&self) -> Option<(Vec<usize>, Vec<Matrix>)> {
        if self.vert.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        let dims = self.dim_vector();
        let blocks = self
            .alg
            .gens()
            .iter()
            .enumerate()
            .map(|(gp, &g)| {
                let r = self.basis_at(self.alg.src(g));
                let c = self.basis_at(self.alg.tgt(g));
                self.acts[gp].submatrix(&r, &c)
            })
            .collect();
        Some((dims, blocks))
    }
}
