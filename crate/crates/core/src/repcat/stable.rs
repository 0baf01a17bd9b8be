//! Projective-injective summands and the stable category of repe-complexes.

use super::complex::proj_object_with_top;
use super::{common_window, proj_object, RepcatError, RepeComplex, RepeHom};
use crate::exactla::{Matrix, Scalar};
use crate::homalg::injective_envelope;
use crate::rmod::{HomSpace, ModHom};

/// A repe-complex split as `core ⊕ projective part`.
#[derive(Clone, Debug)]
pub struct Stripped {
    /// The complement of the projective-injective summands found.
    pub core: RepeComplex,
    /// `(v, k)` for every split-off summand `proj_object(v, k)`, in order of detection.
    pub summands: Vec<(usize, i32)>,
    /// The direct sum of the split-off summands, over the window of the input.
    pub projective: RepeComplex,
}

/// Splits off every summand isomorphic to some `proj_object(v, k)`.
///
/// A summand `E` exists iff the pairing `Hom(E, X) × Hom(X, E) → End(E)/rad ≅ k` is nonzero;
/// for `a·b` inducing a unit `u`, `b·u⁻¹·a` is an idempotent of `X` with image `≅ E`.
pub fn strip_projectives(x: &RepeComplex) -> Result<Stripped, RepcatError> {
    let rep = x.rep().clone();
    let (lo, hi) = (x.lo(), x.hi());
    let mut core = x.clone();
    let mut summands = Vec::new();
    'search: loop {
        if core.is_zero() {
            break;
        }
        for k in lo + 1..=hi {
            for v in 0..rep.nverts() {
                let (e, top) = proj_object_with_top(&rep, v, k)?;
                let e = e.rewindow(lo, hi)?;
                let into = HomSpace::new(e.module(), core.module());
                if into.dim() == 0 {
                    continue;
                }
                let back = HomSpace::new(core.module(), e.module());
                for a in into.basis() {
                    for b in back.basis() {
                        let c = (0..core.dim()).fold(core.module().field().zero(), |s, l| {
                            s.add(&a[(top, l)].mul(&b[(l, top)]))
                        });
                        if c.is_zero() {
                            continue;
                        }
                        let u = a.mul(b);
                        let uinv = u.inverse().expect("a unit of a local endomorphism ring");
                        let idem = b.mul(&uinv).mul(a);
                        let f = ModHom::new(core.module().clone(), core.module().clone(), idem)?;
                        let (ker, inc) = f.kernel();
                        let (next, order) = RepeComplex::from_module(&rep, lo, hi, &ker)?;
                        debug_assert_eq!(inc.matrix().rows(), order.len());
                        core = next;
                        summands.push((v, k));
                        continue 'search;
                    }
                }
            }
        }
        break;
    }
    let parts: Vec<RepeComplex> = summands
        .iter()
        .map(|&(v, k)| proj_object_with_top(&rep, v, k).and_then(|(e, _)| e.rewindow(lo, hi)))
        .collect::<Result<_, _>>()?;
    let projective = if parts.is_empty() {
        RepeComplex::zero(&rep).rewindow(lo, hi)?
    } else {
        RepeComplex::direct_sum(&parts.iter().collect::<Vec<_>>())?
    };
    Ok(Stripped { core, summands, projective })
}

/// True when `x` is a projective(-injective) object, that is, its stripped core is zero.
pub fn is_projective_object(x: &RepeComplex) -> Result<bool, RepcatError> {
    Ok(strip_projectives(x)?.core.is_zero())
}

/// `Hom(X, Y)` modulo the morphisms factoring through a projective-injective object.
///
/// Morphisms live over the window `[lo, hi + 1]` spanned by both complexes and the
/// injective envelope `ι: X → I` there; `f` is stably zero iff `f = ι·h` for some `h`.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    src: RepeComplex,
    tgt: RepeComplex,
    homs: HomSpace,
    /// Reduced row echelon form of the factoring subspace, in hom-space coordinates.
    factoring: Matrix,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

/// The stable hom space `Hom(X, Y)` modulo projective-injectives, via the injective hull.
pub fn stable_hom(x: &RepeComplex, y: &RepeComplex) -> Result<StableHomSpace, RepcatError> {
    let (a, b) = common_window(x, y)?;
    let (lo, hi) = (a.lo(), a.hi() + 1);
    let (a, b) = (a.rewindow(lo, hi)?, b.rewindow(lo, hi)?);
    let homs = HomSpace::new(a.module(), b.module());
    let (inj, iota) = injective_envelope(a.module());
    let through = HomSpace::new(&inj, b.module());
    let rows: Vec<Vec<Scalar>> = through.basis().iter().map(|h| homs.coords(&iota.matrix().mul(h))).collect();
    StableHomSpace::from_factoring(a, b, homs, rows)
}

/// The stable hom space computed from all composites `X → E → Y` with `E = proj_object(v, k)`
/// ranging over the degrees that can meet both complexes.
pub fn stable_hom_brute_force(x: &RepeComplex, y: &RepeComplex) -> Result<StableHomSpace, RepcatError> {
    let (a, b) = common_window(x, y)?;
    let rep = a.rep().clone();
    let (lo, hi) = (a.lo() - 1, a.hi() + 1);
    let (a, b) = (a.rewindow(lo, hi)?, b.rewindow(lo, hi)?);
    let homs = HomSpace::new(a.module(), b.module());
    let mut rows = Vec::new();
    for k in lo + 1..=hi {
        for v in 0..rep.nverts() {
            let e = proj_object(&rep, v, k)?.rewindow(lo, hi)?;
            let into = HomSpace::new(a.module(), e.module());
            let out = HomSpace::new(e.module(), b.module());
            for f in into.basis() {
                for g in out.basis() {
                    rows.push(homs.coords(&f.mul(g)));
                }
            }
        }
    }
    StableHomSpace::from_factoring(a, b, homs, rows)
}

impl StableHomSpace {
    fn from_factoring(
        src: RepeComplex,
        tgt: RepeComplex,
        homs: HomSpace,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<StableHomSpace, RepcatError> {
        let n = homs.dim();
        let m = Matrix::from_rows(homs.field(), n, rows);
        let (r, pivots) = m.rref();
        let factoring = r.row_range(0, pivots.len());
        let free = (0..n).filter(|c| !pivots.contains(c)).collect();
        Ok(StableHomSpace { src, tgt, homs, factoring, pivots, free })
    }

    /// Source, over the working window.
    pub fn src(&self) -> &RepeComplex {
        &self.src
    }

    /// Target, over the working window.
    pub fn tgt(&self) -> &RepeComplex {
        &self.tgt
    }

    /// `dim Hom(X, Y)`.
    pub fn hom_dim(&self) -> usize {
        self.homs.dim()
    }

    /// Dimension of the subspace factoring through projective-injectives.
    pub fn factoring_dim(&self) -> usize {
        self.pivots.len()
    }

    /// Dimension of the stable hom space.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// A basis of `Hom(X, Y)` over the working window.
    pub fn hom_basis(&self) -> Vec<RepeHom> {
        self.homs.homs().into_iter().map(|h| RepeHom::from_hom(&self.src, &self.tgt, h)).collect()
    }

    /// Morphisms whose classes form a basis of the stable hom space.
    pub fn quotient_basis(&self) -> Vec<RepeHom> {
        self.free.iter().map(|&j| RepeHom::from_hom(&self.src, &self.tgt, self.homs.hom(j))).collect()
    }

    fn reduce(&self, mut c: Vec<Scalar>) -> Vec<Scalar> {
        for (k, &p) in self.pivots.iter().enumerate() {
            let x = c[p].clone();
            if !x.is_zero() {
                for (j, v) in c.iter_mut().enumerate() {
                    *v = v.sub(&x.mul(&self.factoring[(k, j)]));
                }
            }
        }
        c
    }

    fn rewindowed(&self, f: &RepeHom) -> Result<Matrix, RepcatError> {
        if f.src().dim() != self.src.dim() || f.tgt().dim() != self.tgt.dim() {
            return Err(RepcatError::Shape("morphism does not match the stable hom space".into()));
        }
        Ok(f.rewindow(self.src.lo(), self.src.hi())?.matrix().clone())
    }

    /// Coordinates of the stable class of `f` in [`StableHomSpace::quotient_basis`].
    pub fn class_of(&self, f: &RepeHom) -> Result<Vec<Scalar>, RepcatError> {
        let m = self.rewindowed(f)?;
        let c = self.homs.coords_checked(&m).ok_or_else(|| RepcatError::Shape("not a morphism".into()))?;
        let c = self.reduce(c);
        Ok(self.free.iter().map(|&j| c[j].clone()).collect())
    }

    /// True when `f` factors through a projective-injective object.
    pub fn is_stably_zero(&self, f: &RepeHom) -> Result<bool, RepcatError> {
        Ok(self.class_of(f)?.iter().all(Scalar::is_zero))
    }

    /// The representative of a class in the span of the quotient basis.
    pub fn representative(&self, class: &[Scalar]) -> RepeHom {
        let mut full = vec![self.homs.field().zero(); self.homs.dim()];
        for (&j, c) in self.free.iter().zip(class) {
            full[j] = c.clone();
        }
        let m = self.homs.combine(&full);
        RepeHom::from_hom(&self.src, &self.tgt, ModHom::new(self.src.module().clone(), self.tgt.module().clone(), m).expect("a combination of homomorphisms"))
    }
}

/// True when `x` and `y` are isomorphic in the stable category, compared through their
/// stripped cores.
pub fn stably_isomorphic(x: &RepeComplex, y: &RepeComplex) -> Result<bool, RepcatError> {
    let (a, b) = (strip_projectives(x)?.core.trim(), strip_projectives(y)?.core.trim());
    if a.dim() != b.dim() {
        return Ok(false);
    }
    if a.is_zero() {
        return Ok(true);
    }
    a.is_isomorphic(&b)
}
