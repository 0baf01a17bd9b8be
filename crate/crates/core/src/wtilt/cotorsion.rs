//! Cotorsion-pair data given by finite generator lists, and special approximations built
//! by iterated universal extensions.

use std::sync::{Arc, OnceLock};

use super::{Verdict, WTiltError};
use crate::exactla::Matrix;
use crate::homalg::{ext1_classes, ext_dims, Ext1};
use crate::qalg::Algebra;
use crate::rmod::{decompose, is_isomorphic, opposite_shared, ModHom, Module};

/// The additive closure of a finite list of modules, by indecomposable representatives.
#[derive(Clone, Debug)]
pub struct AddClosure {
    reps: Vec<Module>,
}

impl AddClosure {
    /// Decomposes the generators and keeps one representative per isomorphism class.
    pub fn new(gens: &[Module]) -> Result<AddClosure, WTiltError> {
        let mut reps: Vec<Module> = Vec::new();
        for g in gens {
            for s in decompose(g)? {
                if !contains_iso(&reps, &s.module)? {
                    reps.push(s.module);
                }
            }
        }
        Ok(AddClosure { reps })
    }

    /// Indecomposable representatives, in order of first appearance.
    pub fn representatives(&self) -> &[Module] {
        &self.reps
    }

    /// True when every indecomposable summand of `m` is isomorphic to a representative.
    pub fn contains(&self, m: &Module) -> Result<bool, WTiltError> {
        for s in decompose(m)? {
            if !self.contains_indecomposable(&s.module)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership test for an indecomposable module.
    pub fn contains_indecomposable(&self, m: &Module) -> Result<bool, WTiltError> {
        contains_iso(&self.reps, m)
    }
}

fn contains_iso(list: &[Module], m: &Module) -> Result<bool, WTiltError> {
    for r in list {
        if r.dim_vector() == m.dim_vector() && is_isomorphic(r, m)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A claimed complete hereditary cotorsion pair `(ℬ, 𝒜)` given by generator lists.
///
/// `b_gens` generate the left class (`ℬ` over `R`, `𝒢` over `S`) and `a_gens` the right
/// class (`𝒜` over `R`, `𝒦` over `S`), so that `Ext^k(B_i, A_j) = 0` for `k ≥ 1`.
#[derive(Clone, Debug)]
pub struct CotorsionData {
    pub algebra: Arc<Algebra>,
    pub b_gens: Vec<Module>,
    pub a_gens: Vec<Module>,
    pub depth: usize,
    /// Maximal number of extension rounds in an approximation.
    pub cap: usize,
    a_add: OnceLock<AddClosure>,
    b_add: OnceLock<AddClosure>,
}

impl CotorsionData {
    pub const DEFAULT_CAP: usize = 32;

    /// Data for the pair `(add b_gens, add a_gens)` with the default iteration cap.
    pub fn new(algebra: Arc<Algebra>, b_gens: Vec<Module>, a_gens: Vec<Module>, depth: usize) -> CotorsionData {
        let b_gens = b_gens.into_iter().map(|m| m.over(&algebra)).collect();
        let a_gens = a_gens.into_iter().map(|m| m.over(&algebra)).collect();
        CotorsionData {
            algebra,
            b_gens,
            a_gens,
            depth,
            cap: Self::DEFAULT_CAP,
            a_add: OnceLock::new(),
            b_add: OnceLock::new(),
        }
    }

    pub fn with_cap(mut self, cap: usize) -> CotorsionData {
        self.cap = cap;
        self
    }

    /// The additive closure of the right-class generators.
    pub fn a_closure(&self) -> Result<&AddClosure, WTiltError> {
        closure(&self.a_add, &self.a_gens)
    }

    /// The additive closure of the left-class generators.
    pub fn b_closure(&self) -> Result<&AddClosure, WTiltError> {
        closure(&self.b_add, &self.b_gens)
    }

    /// The dual pair `(D𝒜, Dℬ)` over the opposite algebra.
    pub fn dual(&self) -> CotorsionData {
        let op = opposite_shared(&self.algebra);
        let b = self.a_gens.iter().map(Module::dual).collect();
        let a = self.b_gens.iter().map(Module::dual).collect();
        CotorsionData::new(op, b, a, self.depth).with_cap(self.cap)
    }

    /// Checks hereditary orthogonality on all generator pairs up to `depth`, that every
    /// indecomposable injective lies in add(a_gens) and every projective in add(b_gens).
    pub fn validate(&self) -> Result<Verdict, WTiltError> {
        let mut v = Verdict::new("cotorsion data", true);
        for (i, b) in self.b_gens.iter().enumerate() {
            for (j, a) in self.a_gens.iter().enumerate() {
                let dims = ext_dims(b, a, self.depth);
                let bad = dims.iter().position(|&d| d != 0);
                let detail = match bad {
                    Some(k) => format!("dim Ext^{} = {}", k + 1, dims[k]),
                    None => format!("Ext^1..{} vanish", self.depth),
                };
                v.push(format!("orthogonal(B{}, A{})", i + 1, j + 1), bad.is_none(), detail);
            }
        }
        let a = self.a_closure()?;
        let b = self.b_closure()?;
        for w in 0..self.algebra.nverts() {
            let inj = Module::injective(self.algebra.clone(), w).over(&self.algebra);
            let ok = a.contains_indecomposable(&inj)?;
            v.push(format!("injective I{} in add(A)", w + 1), ok, "");
            let proj = Module::projective(self.algebra.clone(), w);
            let ok = b.contains_indecomposable(&proj)?;
            v.push(format!("projective P{} in add(B)", w + 1), ok, "");
        }
        Ok(v)
    }
}

fn closure<'a>(cell: &'a OnceLock<AddClosure>, gens: &[Module]) -> Result<&'a AddClosure, WTiltError> {
    if let Some(c) = cell.get() {
        return Ok(c);
    }
    let c = AddClosure::new(gens)?;
    Ok(cell.get_or_init(|| c))
}

/// Which approximation an [`ApproxSequence`] realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxKind {
    /// `0 → X → A → B → 0` with `A` in the right class and `B` in the left class.
    Preenvelope,
    /// `0 → K → G → Y → 0` with `G` in the left class and `K` in the right class.
    Precover,
}

/// A short exact sequence `0 → x → a → b → 0` with maps `u: x → a` and `pi: a → b`.
///
/// For a precover the fields read `0 → K → G → Y → 0`.
#[derive(Clone, Debug)]
pub struct ApproxSequence {
    pub kind: ApproxKind,
    pub x: Module,
    pub a: Module,
    pub b: Module,
    pub u: ModHom,
    pub pi: ModHom,
    /// Number of universal extensions performed.
    pub extensions: usize,
}

impl ApproxSequence {
    /// Exactness by rank arithmetic.
    pub fn is_exact(&self) -> bool {
        self.u.is_mono()
            && self.pi.is_epi()
            && self.u.then(&self.pi).is_zero()
            && self.x.dim() + self.b.dim() == self.a.dim()
    }

    /// True when the approximation is an isomorphism: `u` for a preenvelope, `pi` for a
    /// precover.
    pub fn is_trivial(&self) -> bool {
        match self.kind {
            ApproxKind::Preenvelope => self.u.is_iso(),
            ApproxKind::Precover => self.pi.is_iso(),
        }
    }

    /// Re-verifies exactness and `Ext¹`-orthogonality against the generators.
    pub fn verify(&self, data: &CotorsionData) -> Result<(), WTiltError> {
        if !self.is_exact() {
            return Err(WTiltError::BadSequence("the sequence is not exact".into()));
        }
        let (left, right) = match self.kind {
            ApproxKind::Preenvelope => (&self.b, &self.a),
            ApproxKind::Precover => (&self.a, &self.x),
        };
        for (j, a) in data.a_gens.iter().enumerate() {
            let d = ext_dims(left, a, 1)[0];
            if d != 0 {
                return Err(WTiltError::BadSequence(format!("left term has dim Ext^1(-, A{}) = {d}", j + 1)));
            }
        }
        for (i, b) in data.b_gens.iter().enumerate() {
            let d = ext_dims(b, right, 1)[0];
            if d != 0 {
                return Err(WTiltError::BadSequence(format!("right term has dim Ext^1(B{}, -) = {d}", i + 1)));
            }
        }
        Ok(())
    }

    /// True when the term required in the right class lies in add(a_gens).
    pub fn right_term_in_add(&self, data: &CotorsionData) -> Result<bool, WTiltError> {
        let right = if self.kind == ApproxKind::Preenvelope { &self.a } else { &self.x };
        data.a_closure()?.contains(right)
    }
}

/// The extension `0 → X → E → B^m → 0` realizing a basis of `Ext¹(B, X)` at once, as the
/// pushout of the cocycles `(ΩB)^m → X` along `(ΩB)^m → P^m`.
pub(crate) fn universal_extension(x: &Module, e: &Ext1) -> ModHom {
    let m = e.classes.len();
    let om = e.omega.power(m);
    let p = e.cover.projective.power(m);
    let alg = x.algebra();
    let cocycles: Vec<&Matrix> = e.classes.iter().map(|c| c.matrix()).collect();
    let c = Matrix::vstack(&cocycles);
    let incs = vec![e.inclusion.matrix(); m];
    let iota = Matrix::block_diag(x.field(), &incs);
    let sum = Module::direct_sum(alg, &[x, &p]);
    let rel = ModHom::new(om, sum, Matrix::hstack(&[&c, &iota.neg()])).expect("pushout relation");
    let (ext, proj) = rel.cokernel();
    ModHom::new(x.clone(), ext, proj.matrix().row_range(0, x.dim())).expect("pushout leg")
}

/// A special preenvelope `0 → X → A_X → B_X → 0`.
///
/// Each round visits the left-class generators in order and, whenever `Ext¹(B_i, X_k) ≠ 0`,
/// replaces `X_k` by its universal extension by `B_i`; it stops after a round without change.
pub fn special_preenvelope(x: &Module, data: &CotorsionData) -> Result<ApproxSequence, WTiltError> {
    let x = x.over(&data.algebra);
    let mut u = ModHom::identity(&x);
    let mut extensions = 0;
    for _ in 0..data.cap {
        let mut changed = false;
        for b in &data.b_gens {
            let e = ext1_classes(b, u.tgt());
            if e.classes.is_empty() {
                continue;
            }
            let step = universal_extension(u.tgt(), &e);
            u = u.then(&step);
            extensions += 1;
            changed = true;
        }
        if !changed {
            let (b, pi) = u.cokernel();
            let seq = ApproxSequence { kind: ApproxKind::Preenvelope, x, a: u.tgt().clone(), b, u, pi, extensions };
            seq.verify(data)?;
            return Ok(seq);
        }
    }
    Err(WTiltError::IterationCap { cap: data.cap })
}

/// A special precover `0 → K_Y → G_Y → Y → 0`, the dual of the special preenvelope of `DY`
/// for the dual pair over the opposite algebra.
pub fn special_precover(y: &Module, data: &CotorsionData) -> Result<ApproxSequence, WTiltError> {
    let y = y.over(&data.algebra);
    let dual = data.dual();
    let s = special_preenvelope(&y.dual(), &dual)?;
    let alg = &data.algebra;
    let k = s.b.dual().over(alg);
    let g = s.a.dual().over(alg);
    let u = ModHom::new(k.clone(), g.clone(), s.pi.matrix().transpose())?;
    let pi = ModHom::new(g.clone(), y.clone(), s.u.matrix().transpose())?;
    let seq = ApproxSequence { kind: ApproxKind::Precover, x: k, a: g, b: y, u, pi, extensions: s.extensions };
    seq.verify(data)?;
    Ok(seq)
}
