//! Window algebras: the full subalgebra of the repetitive algebra `R̂` on the vertices of
//! the degrees `lo..=hi`.
//!
//! A right module over the window `[lo, hi]` is a repe-complex supported there: its
//! restriction to the degree-`i` vertices is `X_i`, and the basis element `(d, i)` for
//! `d ∈ DR` acts by `x ↦ δ_i(x ⊗ d)`, sending `X_i` to `X_{i−1}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::RepcatError;
use crate::exactla::{Matrix, Scalar};
use crate::homalg::Bimodule;
use crate::qalg::{Algebra, AlgebraData, SparseVec, Term};

/// Largest absolute degree a window may reach.
pub const WINDOW_BOUND: i32 = 8;

/// The repetitive algebra of `R`, realized through cached window algebras.
#[derive(Debug)]
pub struct Repetitive {
    algebra: Arc<Algebra>,
    dual: Bimodule,
    dual_left: Vec<Matrix>,
    dual_right: Vec<Matrix>,
    windows: Mutex<HashMap<(i32, i32), Arc<Algebra>>>,
}

impl Repetitive {
    /// The shared instance for `alg`; equal algebras share one instance.
    pub fn of(alg: &Arc<Algebra>) -> Arc<Repetitive> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Vec<Arc<Repetitive>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("repetitive cache poisoned");
        let list = guard.entry(alg.fingerprint()).or_default();
        if let Some(r) = list.iter().find(|r| *r.algebra == **alg) {
            return r.clone();
        }
        let dual = Bimodule::regular(alg).dual();
        let dual_left = (0..alg.dim()).map(|b| dual.lact_basis(b)).collect();
        let dual_right = (0..alg.dim()).map(|b| dual.module().act_basis(b)).collect();
        let r = Arc::new(Repetitive {
            algebra: alg.clone(),
            dual,
            dual_left,
            dual_right,
            windows: Mutex::new(HashMap::new()),
        });
        list.push(r.clone());
        r
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// `DR = D(_R R_R)` on the dual basis.
    pub fn dual(&self) -> &Bimodule {
        &self.dual
    }

    pub fn nverts(&self) -> usize {
        self.algebra.nverts()
    }

    /// Rejects windows outside `[−WINDOW_BOUND, WINDOW_BOUND]`.
    pub fn check_window(lo: i32, hi: i32) -> Result<(), RepcatError> {
        if lo < -WINDOW_BOUND || hi > WINDOW_BOUND {
            return Err(RepcatError::WindowExceeded { lo, hi, bound: WINDOW_BOUND });
        }
        Ok(())
    }

    /// The window algebra on degrees `lo..=hi` (requires `lo ≤ hi`).
    pub fn window(&self, lo: i32, hi: i32) -> Result<Arc<Algebra>, RepcatError> {
        assert!(lo <= hi, "empty window");
        Repetitive::check_window(lo, hi)?;
        if let Some(w) = self.windows.lock().expect("window cache poisoned").get(&(lo, hi)) {
            return Ok(w.clone());
        }
        let w = Arc::new(self.build_window(lo, hi));
        let mut guard = self.windows.lock().expect("window cache poisoned");
        Ok(guard.entry((lo, hi)).or_insert(w).clone())
    }

    /// Index of the vertex `(v, i)` in the window starting at `lo`.
    pub fn vertex(&self, lo: i32, v: usize, i: i32) -> usize {
        (i - lo) as usize * self.nverts() + v
    }

    /// Splits a window vertex into `(v, i)`.
    pub fn split_vertex(&self, lo: i32, w: usize) -> (usize, i32) {
        (w % self.nverts(), lo + (w / self.nverts()) as i32)
    }

    /// Generator position of the `R`-generator at position `p` in degree `i`.
    pub fn arrow_gen(&self, lo: i32, p: usize, i: i32) -> usize {
        (i - lo) as usize * self.algebra.gens().len() + p
    }

    /// Generator position of `(d, i)` for a `DR` basis element `d`, `lo < i ≤ hi`.
    pub fn dual_gen(&self, lo: i32, hi: i32, d: usize, i: i32) -> usize {
        let w = (hi - lo + 1) as usize;
        w * self.algebra.gens().len() + (i - lo - 1) as usize * self.dual.dim() + d
    }

    fn build_window(&self, lo: i32, hi: i32) -> Algebra {
        let r = &self.algebra;
        let f = r.field();
        let n = r.nverts();
        let w = (hi - lo + 1) as usize;
        let dd = self.dual.dim();
        let nonidem: Vec<usize> = (0..r.dim()).filter(|&b| !r.is_idempotent(b)).collect();
        let mut rpos = vec![0usize; r.dim()];
        for (j, &b) in nonidem.iter().enumerate() {
            rpos[b] = j;
        }
        let nr = nonidem.len();
        let deg = |i: i32| (i - lo) as usize;
        let idx_r = |b: usize, i: i32| -> usize {
            if r.is_idempotent(b) {
                deg(i) * n + r.src(b)
            } else {
                w * n + deg(i) * nr + rpos[b]
            }
        };
        let idx_d = |d: usize, i: i32| -> usize { w * (n + nr) + (i - lo - 1) as usize * dd + d };
        let total = w * (n + nr) + (w - 1) * dd;

        let mut labels = vec![String::new(); total];
        let mut src = vec![0usize; total];
        let mut tgt = vec![0usize; total];
        let mut words = vec![Vec::new(); total];
        for i in lo..=hi {
            for b in 0..r.dim() {
                let k = idx_r(b, i);
                labels[k] = format!("{}@{i}", r.label(b));
                src[k] = self.vertex(lo, r.src(b), i);
                tgt[k] = self.vertex(lo, r.tgt(b), i);
                words[k] = r.word(b).iter().map(|&p| self.arrow_gen(lo, p, i)).collect();
            }
        }
        for i in lo + 1..=hi {
            for d in 0..dd {
                let k = idx_d(d, i);
                labels[k] = format!("D{}@{i}", r.label(d));
                src[k] = self.vertex(lo, self.dual.lvert(d), i);
                tgt[k] = self.vertex(lo, self.dual.module().vert(d), i - 1);
                words[k] = vec![self.dual_gen(lo, hi, d, i)];
            }
        }
        let idem: Vec<usize> = (0..w * n).collect();
        let mut gens = Vec::new();
        for i in lo..=hi {
            for &g in r.gens() {
                gens.push(idx_r(g, i));
            }
        }
        for i in lo + 1..=hi {
            for d in 0..dd {
                gens.push(idx_d(d, i));
            }
        }

        let row_terms = |m: &Matrix, row: usize, to: &dyn Fn(usize) -> usize| -> SparseVec {
            (0..m.cols()).filter(|&c| !m[(row, c)].is_zero()).map(|c| (to(c), m[(row, c)].clone())).collect()
        };
        let mut mult = vec![vec![Vec::new(); total]; total];
        for i in lo..=hi {
            for b in 0..r.dim() {
                for b2 in 0..r.dim() {
                    mult[idx_r(b, i)][idx_r(b2, i)] = r.mult_basis(b, b2).iter().map(|(k, c)| (idx_r(*k, i), c.clone())).collect();
                }
            }
        }
        for i in lo + 1..=hi {
            for d in 0..dd {
                for b in 0..r.dim() {
                    // b·d lives in degree i, d·b with b in degree i − 1.
                    mult[idx_r(b, i)][idx_d(d, i)] = row_terms(&self.dual_left[b], d, &|c| idx_d(c, i));
                    mult[idx_d(d, i)][idx_r(b, i - 1)] = row_terms(&self.dual_right[b], d, &|c| idx_d(c, i));
                }
            }
        }

        let mut presentation: Vec<Vec<Term>> = Vec::new();
        for i in lo..=hi {
            for rel in r.presentation() {
                presentation.push(
                    rel.iter()
                        .map(|t| Term {
                            coef: t.coef.clone(),
                            start: self.vertex(lo, t.start, i),
                            word: t.word.iter().map(|&p| self.arrow_gen(lo, p, i)).collect(),
                        })
                        .collect(),
                );
            }
        }
        let one = f.one();
        let single = |coef: Scalar, start: usize, word: Vec<usize>| Term { coef, start, word };
        for i in lo + 1..=hi {
            for (p, &g) in r.gens().iter().enumerate() {
                for d in 0..dd {
                    if self.dual.lvert(d) == r.tgt(g) {
                        let start = self.vertex(lo, r.src(g), i);
                        let mut rel = vec![single(one.clone(), start, vec![self.arrow_gen(lo, p, i), self.dual_gen(lo, hi, d, i)])];
                        for c in 0..dd {
                            let x = &self.dual_left[g][(d, c)];
                            if !x.is_zero() {
                                rel.push(single(x.neg(), start, vec![self.dual_gen(lo, hi, c, i)]));
                            }
                        }
                        presentation.push(rel);
                    }
                    if self.dual.module().vert(d) == r.src(g) {
                        let start = self.vertex(lo, self.dual.lvert(d), i);
                        let mut rel = vec![single(one.clone(), start, vec![self.dual_gen(lo, hi, d, i), self.arrow_gen(lo, p, i - 1)])];
                        for c in 0..dd {
                            let x = &self.dual_right[g][(d, c)];
                            if !x.is_zero() {
                                rel.push(single(x.neg(), start, vec![self.dual_gen(lo, hi, c, i)]));
                            }
                        }
                        presentation.push(rel);
                    }
                }
            }
        }
        for i in lo + 2..=hi {
            for d in 0..dd {
                for d2 in 0..dd {
                    if self.dual.module().vert(d) == self.dual.lvert(d2) {
                        let start = self.vertex(lo, self.dual.lvert(d), i);
                        presentation.push(vec![single(
                            one.clone(),
                            start,
                            vec![self.dual_gen(lo, hi, d, i), self.dual_gen(lo, hi, d2, i - 1)],
                        )]);
                    }
                }
            }
        }

        Algebra::new(AlgebraData {
            name: format!("{}^[{lo},{hi}]", r.name()),
            field: f,
            nverts: w * n,
            labels,
            src,
            tgt,
            idem,
            gens,
            words,
            presentation,
            mult,
        })
        .expect("window of a repetitive algebra is a valid algebra")
    }
}
