//! Finite-dimensional basic algebras presented by a Peirce-adapted basis with
//! structure constants, bounded quiver algebras, and opposite algebras.
//!
//! Products are read left to right: for a path `p: u→v` and `q: v→w` the product
//! `p·q` is defined.

mod quiver;

pub use quiver::{path_basis, validate_admissible, Arrow, PathRelation, Quiver, DEFAULT_CAP};

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::exactla::{Field, Scalar};

/// Errors raised while building algebras.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("relation {0} is not admissible: {1}")]
    NotAdmissible(usize, String),
    #[error("relation {0} mixes path lengths; only homogeneous relations are supported")]
    NotHomogeneous(usize),
    #[error("not finite-dimensional within cap {cap}: nonzero path {witness}")]
    NotFiniteWithinCap { cap: usize, witness: String },
    #[error("structure constants fail: {0}")]
    BadStructure(String),
}

/// One term `coef · e_start·g_1·…·g_k` of a relation among generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coef: Scalar,
    pub start: usize,
    /// Generator positions; an empty word denotes the idempotent `e_start`.
    pub word: Vec<usize>,
}

/// Sparse vector over an algebra basis.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A basic finite-dimensional algebra with a Peirce-adapted basis.
///
/// Each basis element `b` lies in `e_{src(b)}·A·e_{tgt(b)}`; the first elements of the
/// basis include one idempotent per vertex and every other basis element lies in the
/// radical. The radical is generated, as an ideal, by the generators `gens`, and each
/// basis element is a product of generators recorded in `words`.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    field: Field,
    nverts: usize,
    labels: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    idem: Vec<usize>,
    gens: Vec<usize>,
    gen_pos: Vec<Option<usize>>,
    words: Vec<Vec<usize>>,
    presentation: Vec<Vec<Term>>,
    mult: Vec<Vec<SparseVec>>,
    fingerprint: u64,
}

/// Raw data for [`Algebra::new`].
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub name: String,
    pub field: Field,
    pub nverts: usize,
    pub labels: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub idem: Vec<usize>,
    pub gens: Vec<usize>,
    pub words: Vec<Vec<usize>>,
    pub presentation: Vec<Vec<Term>>,
    pub mult: Vec<Vec<SparseVec>>,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Algebra) -> bool {
        self.fingerprint == o.fingerprint
            && self.src == o.src
            && self.tgt == o.tgt
            && self.mult == o.mult
            && self.gens == o.gens
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Validates and wraps raw structure data.
    ///
    /// Checks the Peirce grading, idempotents, words, unit laws and associativity.
    pub fn new(d: AlgebraData) -> Result<Algebra, AlgebraError> {
        let n = d.labels.len();
        let bad = |m: String| AlgebraError::BadStructure(m);
        if d.src.len() != n || d.tgt.len() != n || d.words.len() != n || d.mult.len() != n {
            return Err(bad("length mismatch".into()));
        }
        if d.idem.len() != d.nverts {
            return Err(bad("one idempotent per vertex required".into()));
        }
        let mut gen_pos = vec![None; n];
        for (k, &g) in d.gens.iter().enumerate() {
            gen_pos[g] = Some(k);
        }
        let fp = {
            let mut h = DefaultHasher::new();
            d.field.hash(&mut h);
            d.nverts.hash(&mut h);
            d.src.hash(&mut h);
            d.tgt.hash(&mut h);
            d.mult.hash(&mut h);
            d.gens.hash(&mut h);
            h.finish()
        };
        let a = Algebra {
            name: d.name,
            field: d.field,
            nverts: d.nverts,
            labels: d.labels,
            src: d.src,
            tgt: d.tgt,
            idem: d.idem,
            gens: d.gens,
            gen_pos,
            words: d.words,
            presentation: d.presentation,
            mult: d.mult,
            fingerprint: fp,
        };
        a.check().map_err(bad)?;
        Ok(a)
    }

    fn check(&self) -> Result<(), String> {
        let n = self.dim();
        for i in 0..n {
            if self.mult[i].len() != n {
                return Err("multiplication table is not square".into());
            }
            for j in 0..n {
                for (k, c) in &self.mult[i][j] {
                    if c.is_zero() {
                        return Err(format!("stored zero coefficient at ({i},{j})"));
                    }
                    if self.tgt[i] != self.src[j] || self.src[*k] != self.src[i] || self.tgt[*k] != self.tgt[j] {
                        return Err(format!("product {}·{} leaves its Peirce block", self.labels[i], self.labels[j]));
                    }
                }
            }
        }
        for (v, &e) in self.idem.iter().enumerate() {
            if self.src[e] != v || self.tgt[e] != v {
                return Err(format!("idempotent {} is not at vertex {v}", self.labels[e]));
            }
        }
        for b in 0..n {
            let l = self.multiply_basis_vec(self.idem[self.src[b]], &[(b, self.field.one())]);
            let r = self.multiply_vec_basis(&[(b, self.field.one())], self.idem[self.tgt[b]]);
            let unit = vec![(b, self.field.one())];
            if l != unit || r != unit {
                return Err(format!("unit law fails at {}", self.labels[b]));
            }
        }
        for b in 0..n {
            if self.idem.contains(&b) {
                continue;
            }
            let w = &self.words[b];
            if w.is_empty() {
                return Err(format!("radical element {} has an empty word", self.labels[b]));
            }
            let mut acc: SparseVec = vec![(self.gens[w[0]], self.field.one())];
            for &g in &w[1..] {
                acc = self.multiply_vec_basis(&acc, self.gens[g]);
            }
            if acc != vec![(b, self.field.one())] {
                return Err(format!("word of {} does not multiply out to it", self.labels[b]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.mult[i][j].is_empty() {
                    continue;
                }
                for k in 0..n {
                    if self.tgt[j] != self.src[k] {
                        continue;
                    }
                    let left = self.multiply_vec_basis(&self.mult[i][j], k);
                    let right = self.multiply_basis_vec(i, &self.mult[j][k]);
                    if left != right {
                        return Err(format!(
                            "associativity fails at ({},{},{})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn src(&self, b: usize) -> usize {
        self.src[b]
    }

    pub fn tgt(&self, b: usize) -> usize {
        self.tgt[b]
    }

    /// Basis index of the idempotent at vertex `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.idem[v]
    }

    pub fn is_idempotent(&self, b: usize) -> bool {
        self.idem[self.src[b]] == b
    }

    /// Basis indices of the generators.
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    /// Position of basis element `b` among the generators.
    pub fn gen_position(&self, b: usize) -> Option<usize> {
        self.gen_pos[b]
    }

    /// Generator positions whose product is basis element `b` (empty for idempotents).
    pub fn word(&self, b: usize) -> &[usize] {
        &self.words[b]
    }

    /// Defining relations among generators.
    pub fn presentation(&self) -> &[Vec<Term>] {
        &self.presentation
    }

    /// Structural identity, invariant under relabelling.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Product of two basis elements.
    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    /// Basis elements of the Peirce block `e_u·A·e_v`.
    pub fn peirce(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.src[b] == u && self.tgt[b] == v).collect()
    }

    /// The unit as a coefficient vector.
    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = vec![self.field.zero(); self.dim()];
        for &e in &self.idem {
            u[e] = self.field.one();
        }
        u
    }

    fn multiply_vec_basis(&self, x: &[(usize, Scalar)], b: usize) -> SparseVec {
        let mut acc = vec![self.field.zero(); self.dim()];
        for (i, c) in x {
            for (k, d) in &self.mult[*i][b] {
                acc[*k] = acc[*k].add(&c.mul(d));
            }
        }
        to_sparse(acc)
    }

    fn multiply_basis_vec(&self, b: usize, y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = vec![self.field.zero(); self.dim()];
        for (j, c) in y {
            for (k, d) in &self.mult[b][*j] {
                acc[*k] = acc[*k].add(&c.mul(d));
            }
        }
        to_sparse(acc)
    }

    /// Bilinear product of two coefficient vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert!(x.len() == self.dim() && y.len() == self.dim(), "coefficient vector length");
        let mut acc = vec![self.field.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.mult[i][j] {
                    acc[*k] = acc[*k].add(&ab.mul(c));
                }
            }
        }
        acc
    }

    /// The opposite algebra: same basis, reversed products, swapped Peirce indices.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.mult[j][i].clone();
            }
        }
        let words = self.words.iter().map(|w| w.iter().rev().copied().collect()).collect();
        let presentation = self
            .presentation
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|t| {
                        let end = match t.word.last() {
                            Some(&g) => self.tgt[self.gens[g]],
                            None => t.start,
                        };
                        Term { coef: t.coef.clone(), start: end, word: t.word.iter().rev().copied().collect() }
                    })
                    .collect()
            })
            .collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        Algebra::new(AlgebraData {
            name,
            field: self.field,
            nverts: self.nverts,
            labels: self.labels.clone(),
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            idem: self.idem.clone(),
            gens: self.gens.clone(),
            words,
            presentation,
            mult,
        })
        .expect("opposite of a valid algebra is valid")
    }

    /// Wraps in an `Arc`.
    pub fn shared(self) -> Arc<Algebra> {
        Arc::new(self)
    }
}

/// Drops zero coefficients.
pub fn to_sparse(v: Vec<Scalar>) -> SparseVec {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// Expands a sparse vector to length `n`.
pub fn to_dense(field: Field, n: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (i, c) in v {
        out[*i] = out[*i].add(c);
    }
    out
}
