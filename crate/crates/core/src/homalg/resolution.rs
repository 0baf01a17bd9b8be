//! Projective covers, injective envelopes, minimal resolutions, Ext and Tor.

use super::{Bimodule, Tensor};
use crate::exactla::{Matrix, Scalar};
use crate::rmod::{HomSpace, ModHom, Module};

/// A projective cover `π: P → M` with `P = ⊕ P(v_j)` and `π(e_{v_j}) = m_j`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Module,
    pub epi: ModHom,
    /// Vertex and generator `m_j ∈ M·e_{v_j}` of each indecomposable summand.
    pub tops: Vec<(usize, Vec<Scalar>)>,
}

/// Vertex-homogeneous lifts of a basis of the top of `M`.
pub fn top_generators(m: &Module) -> Vec<(usize, Vec<Scalar>)> {
    let (_, proj) = m.top();
    let q = proj.matrix();
    let f = m.field();
    (0..q.cols())
        .map(|j| {
            let k = (0..m.dim())
                .find(|&k| (0..q.cols()).all(|l| if l == j { q[(k, l)].is_one() } else { q[(k, l)].is_zero() }))
                .expect("free column for each top vector");
            let mut v = vec![f.zero(); m.dim()];
            v[k] = f.one();
            (m.vert(k), v)
        })
        .collect()
}

/// The map `⊕ P(v_j) → M` sending `e_{v_j}` to `m_j`.
pub fn map_from_projectives(m: &Module, gens: &[(usize, Vec<Scalar>)]) -> (Module, ModHom) {
    let alg = m.algebra();
    let parts: Vec<Module> = gens.iter().map(|(v, _)| Module::projective(alg.clone(), *v)).collect();
    let p = Module::direct_sum(alg, &parts.iter().collect::<Vec<_>>());
    let mut rows = Vec::with_capacity(p.dim());
    for (v, x) in gens {
        for b in (0..alg.dim()).filter(|&b| alg.src(b) == *v) {
            rows.push(m.act_vec(x, b));
        }
    }
    let mat = Matrix::from_rows(m.field(), m.dim(), rows);
    let h = ModHom::new(p.clone(), m.clone(), mat).expect("map from projectives");
    (p, h)
}

/// Minimal projective cover.
pub fn projective_cover(m: &Module) -> Cover {
    let tops = top_generators(m);
    let (projective, epi) = map_from_projectives(m, &tops);
    Cover { projective, epi, tops }
}

/// Injective envelope `ι: M → I`, dual to the projective cover of `D M`.
pub fn injective_envelope(m: &Module) -> (Module, ModHom) {
    let c = projective_cover(&m.dual());
    let inj = c.projective.dual();
    let base = m.algebra();
    let inj = inj.over(base);
    let mono = ModHom::new(m.clone(), inj.clone(), c.epi.matrix().transpose()).expect("dual of an epi");
    (inj, mono)
}

/// `Ω M` with its inclusion into the projective cover, and the cover.
pub fn syzygy(m: &Module) -> (Module, ModHom, Cover) {
    let c = projective_cover(m);
    let (k, inc) = c.epi.kernel();
    (k, inc, c)
}

/// `Ω⁻¹ M` with the projection from the injective envelope, and the envelope.
pub fn cosyzygy(m: &Module) -> (Module, ModHom, (Module, ModHom)) {
    let (i, mono) = injective_envelope(m);
    let (c, p) = mono.cokernel();
    (c, p, (i, mono))
}

/// A minimal projective resolution `P_n → … → P_0 → M`, truncated at length `n`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `P_0, …, P_n`.
    pub terms: Vec<Module>,
    /// `d_i: P_i → P_{i−1}` for `i = 1..=n`, stored at index `i − 1`.
    pub differentials: Vec<ModHom>,
    pub augmentation: ModHom,
    /// `Ω^i M ⊆ P_{i−1}` for `i = 1..=n+1`, stored at index `i − 1`.
    pub syzygies: Vec<(Module, ModHom)>,
}

impl Resolution {
    /// Checks `d_{i}·d_{i+1} = 0` and exactness by rank arithmetic.
    pub fn is_exact(&self) -> bool {
        let mut prev_rank = self.augmentation.rank();
        if prev_rank != self.augmentation.tgt().dim() {
            return false;
        }
        let mut prev = &self.augmentation;
        for d in &self.differentials {
            if !d.then(prev).is_zero() {
                return false;
            }
            let r = d.rank();
            if r + prev_rank != d.tgt().dim() {
                return false;
            }
            prev_rank = r;
            prev = d;
        }
        true
    }

    /// Length of the resolution when it terminates within the computed range.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.syzygies.iter().position(|(m, _)| m.dim() == 0)
    }
}

/// Minimal projective resolution of length `n`.
pub fn proj_resolution(m: &Module, n: usize) -> Resolution {
    let c0 = projective_cover(m);
    let mut terms = vec![c0.projective.clone()];
    let augmentation = c0.epi.clone();
    let mut differentials = Vec::new();
    let mut syzygies = vec![augmentation.kernel()];
    for _ in 0..n {
        let (om, inc) = syzygies.last().cloned().expect("nonempty");
        let c = projective_cover(&om);
        let d = c.epi.then(&inc);
        terms.push(c.projective.clone());
        differentials.push(d);
        syzygies.push(c.epi.kernel());
    }
    Resolution { terms, differentials, augmentation, syzygies }
}

/// A minimal injective coresolution `N → I^0 → … → I^n`.
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub terms: Vec<Module>,
    /// `d^i: I^{i} → I^{i+1}`.
    pub differentials: Vec<ModHom>,
    pub coaugmentation: ModHom,
    /// `Ω^{−i} N` with the projection `I^{i−1} → Ω^{−i} N`, for `i = 1..=n+1`.
    pub cosyzygies: Vec<(Module, ModHom)>,
}

/// Minimal injective coresolution of length `n`.
pub fn inj_coresolution(m: &Module, n: usize) -> Coresolution {
    let (i0, mono) = injective_envelope(m);
    let mut terms = vec![i0];
    let mut differentials = Vec::new();
    let mut cosyzygies = vec![mono.cokernel()];
    for _ in 0..n {
        let (c, p) = cosyzygies.last().cloned().expect("nonempty");
        let (i, e) = injective_envelope(&c);
        differentials.push(p.then(&e));
        terms.push(i);
        cosyzygies.push(e.cokernel());
    }
    Coresolution { terms, differentials, coaugmentation: mono, cosyzygies }
}

/// Rank of `Hom(P, N) → Hom(Ω, N)` given by precomposition with `inc: Ω → P`.
fn restriction_rank(inc: &ModHom, n: &Module) -> (usize, usize) {
    let target = HomSpace::new(inc.src(), n);
    let source = HomSpace::new(inc.tgt(), n);
    if source.dim() == 0 || target.dim() == 0 {
        return (target.dim(), 0);
    }
    let rows = source.basis().iter().map(|f| target.coords(&inc.matrix().mul(f))).collect();
    (target.dim(), Matrix::from_rows(n.field(), target.dim(), rows).rank())
}

/// Rank of `Hom(M, I) → Hom(M, C)` given by postcomposition with `p: I → C`.
fn corestriction_rank(m: &Module, p: &ModHom) -> (usize, usize) {
    let target = HomSpace::new(m, p.tgt());
    let source = HomSpace::new(m, p.src());
    if source.dim() == 0 || target.dim() == 0 {
        return (target.dim(), 0);
    }
    let rows = source.basis().iter().map(|f| target.coords(&f.mul(p.matrix()))).collect();
    (target.dim(), Matrix::from_rows(m.field(), target.dim(), rows).rank())
}

/// `dim Ext^i(M, N)` from a projective resolution of `M`.
pub fn ext_proj(m: &Module, n: &Module, i: usize) -> usize {
    if i == 0 {
        return HomSpace::new(m, n).dim();
    }
    let mut cur = m.clone();
    let mut inc = None;
    for _ in 0..i {
        let (om, k, _) = syzygy(&cur);
        cur = om;
        inc = Some(k);
    }
    let (d, r) = restriction_rank(&inc.expect("i ≥ 1"), n);
    d - r
}

/// `dim Ext^i(M, N)` for `i = 1..=max`, stored at index `i − 1`, sharing one resolution.
pub fn ext_dims(m: &Module, n: &Module, max: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(max);
    let mut cur = m.clone();
    for _ in 0..max {
        let (om, inc, _) = syzygy(&cur);
        let (d, r) = restriction_rank(&inc, n);
        out.push(d - r);
        cur = om;
    }
    out
}

/// `dim Ext^i(M, N)` from an injective coresolution of `N`.
pub fn ext_inj(m: &Module, n: &Module, i: usize) -> usize {
    if i == 0 {
        return HomSpace::new(m, n).dim();
    }
    let mut cur = n.clone();
    let mut proj = None;
    for _ in 0..i {
        let (c, p, _) = cosyzygy(&cur);
        cur = c;
        proj = Some(p);
    }
    let (d, r) = corestriction_rank(m, &proj.expect("i ≥ 1"));
    d - r
}

/// `dim Ext^i(M, N)` as `dim Ext^i(D N, D M)` over the opposite algebra.
pub fn ext_dual(m: &Module, n: &Module, i: usize) -> usize {
    ext_proj(&n.dual(), &m.dual(), i)
}

/// `dim Ext^i(M, N)`.
pub fn ext(m: &Module, n: &Module, i: usize) -> usize {
    ext_proj(m, n, i)
}

/// Representatives of a basis of `Ext¹(M, N)` as maps `Ω M → N`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub omega: Module,
    /// `Ω M → P`.
    pub inclusion: ModHom,
    pub cover: Cover,
    /// Maps `Ω M → N` whose classes form a basis of `Ext¹(M, N)`.
    pub classes: Vec<ModHom>,
}

/// `Ext¹(M, N)` with explicit cocycles.
pub fn ext1_classes(m: &Module, n: &Module) -> Ext1 {
    let (omega, inclusion, cover) = syzygy(m);
    let target = HomSpace::new(&omega, n);
    let source = HomSpace::new(&cover.projective, n);
    let f = m.field();
    let mut span: Vec<Vec<Scalar>> =
        source.basis().iter().map(|g| target.coords(&inclusion.matrix().mul(g))).collect();
    let mut rank = Matrix::from_rows(f, target.dim(), span.clone()).rank();
    let mut classes = Vec::new();
    for (k, b) in target.basis().iter().enumerate() {
        let mut e = vec![f.zero(); target.dim()];
        e[k] = f.one();
        span.push(e);
        let r = Matrix::from_rows(f, target.dim(), span.clone()).rank();
        if r > rank {
            rank = r;
            classes.push(ModHom::new(omega.clone(), n.clone(), b.clone()).expect("basis hom"));
        } else {
            span.pop();
        }
    }
    Ext1 { omega, inclusion, cover, classes }
}

/// `dim Tor_i(X, B)` for a right `C`-module `X` and a `C`-`A`-bimodule `B`.
pub fn tor(x: &Module, b: &Bimodule, i: usize) -> usize {
    if i == 0 {
        return Tensor::new(x, b).dim();
    }
    let mut cur = x.clone();
    for _ in 1..i {
        cur = syzygy(&cur).0;
    }
    let (om, _, c) = syzygy(&cur);
    let d_om = Tensor::new(&om, b).dim();
    let d_p = Tensor::new(&c.projective, b).dim();
    let d_k = Tensor::new(&cur, b).dim();
    d_om + d_k - d_p
}
