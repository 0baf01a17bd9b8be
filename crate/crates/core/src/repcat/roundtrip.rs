//! The explicit comparison `φ: X ⊕ L_R(P⁺) → Q_DT S_T(X)` and its dual check
//! `S_T Q_DT(Y) ≅ Y ⊕ R_DS(I⁻)`.

use super::functors::{q_functor, q_functor_with, r_functor, s_functor, s_functor_with, QApplication, SApplication, TiltPair};
use super::stable::is_projective_object;
use super::{RepcatError, RepeComplex, RepeHom};
use crate::exactla::{Matrix, Scalar};
use crate::homalg::{counit_eps, injective_envelope, projective_cover, HomModule, Tensor};
use crate::rmod::{ModHom, Module};
use crate::wtilt::{ApproxKind, ApproxSequence, CotorsionData, Verdict};

fn unit(field: crate::exactla::Field, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

/// The data of the comparison map for one complex `X` over `R`.
#[derive(Clone, Debug)]
pub struct PhiConstruction {
    /// The application of `S_T` whose choices are reused.
    pub s: SApplication,
    /// Projective covers `p_i: P_i → A_i`.
    pub covers: Vec<ModHom>,
    /// `L_R(P⁺)` with `L_R(P⁺)_i = P_i ⊕ P_{i+1} ⊗_R DR`.
    pub lr_plus: RepeComplex,
    /// `X ⊕ L_R(P⁺)` over the window `[lo − 1, hi + 1]`.
    pub source: RepeComplex,
    /// `Q_DT S_T(X)` computed from the precovers `s^P`.
    pub q: QApplication,
    /// `ξ: X ⊕ L_R(P⁺) → R_DT(L^P)`.
    pub xi: RepeHom,
    /// The factorization of `ξ` through `Q_DT S_T(X)`.
    pub phi: RepeHom,
}

/// `L_R(P⁺)` for projectives `P_i` in degrees `lo..=hi`: components `P_i ⊕ P_{i+1} ⊗_R DR`
/// over `[lo − 1, hi]`, with `z ⊗ d ↦ z ⊗ d` from `P_i` in degree `i` to degree `i − 1`.
pub fn l_regular_plus(pair: &TiltPair, lo: i32, projectives: &[Module]) -> Result<RepeComplex, RepcatError> {
    let rep = &pair.rep_r;
    let r = rep.algebra();
    let field = r.field();
    let p = |i: i32| -> Module {
        if i < lo || i >= lo + projectives.len() as i32 {
            Module::zero(r.clone())
        } else {
            projectives[(i - lo) as usize].clone()
        }
    };
    let hi = lo + projectives.len() as i32 - 1;
    let wlo = lo - 1;
    let tensors: Vec<Tensor> = (wlo..=hi).map(|i| Tensor::new(&p(i + 1), rep.dual())).collect();
    let comps: Vec<Module> = (wlo..=hi).map(|i| Module::direct_sum(r, &[&p(i), tensors[(i - wlo) as usize].module()])).collect();
    RepeComplex::from_pairs(rep, wlo, comps.clone(), |i, z, d| {
        let j = (i - wlo) as usize;
        let mut out = vec![field.zero(); comps[j - 1].dim()];
        let np = p(i).dim();
        if z < np {
            let off = p(i - 1).dim();
            for (k, v) in tensors[j - 1].class_of_basis(z, d).into_iter().enumerate() {
                out[off + k] = v;
            }
        }
        out
    })
}

/// Builds `ξ` blockwise and its factorization `φ` through `Q_DT S_T(X)`, reusing the
/// preenvelopes `u_i: X_i → A_i` of `s` and the projective covers `p_i: P_i → A_i`.
///
/// `Q_DT` is computed from the precovers `s^P_i: Hom_R(T, A_{i−1}) ⊕ P_i ⊗_R DT → S_T(X)_i`.
/// The blocks of `ξ_i` are `Γ(θ_i)` and `ε⁻¹∘u_i` on `X_i`, the unit `η` and `−ε⁻¹∘p_i` on
/// `P_i`, and the rearrangement `P_{i+1} ⊗ DR ≅ P_{i+1} ⊗ DT ⊗ T` on the last summand.
pub fn construct_phi(pair: &TiltPair, s: &SApplication) -> Result<PhiConstruction, RepcatError> {
    let x = &s.x;
    let (lo, hi) = (x.lo(), x.hi());
    let sf = pair.rep_s.algebra().clone();
    let field = sf.field();
    let n = pair.t.bimodule().dim();

    let covers: Vec<ModHom> = (lo..=hi).map(|i| projective_cover(&s.a.component(i)).epi).collect();
    let cover_at = |i: i32| -> Option<&ModHom> { (i >= lo && i <= hi).then(|| &covers[(i - lo) as usize]) };
    let proj_at = |i: i32| -> Module { cover_at(i).map(|c| c.src().clone()).unwrap_or_else(|| Module::zero(pair.rep_r.algebra().clone())) };

    // L^P_i = Hom(T, A_{i−1}) ⊕ P_i ⊗ DT over [lo, hi + 1].
    let (llo, lhi) = (lo, hi + 1);
    let tp: Vec<Tensor> = (llo..=lhi).map(|i| Tensor::new(&proj_at(i), pair.t.dual())).collect();
    let tp_at = |i: i32| -> &Tensor { &tp[(i - llo) as usize] };
    let mut precovers = Vec::new();
    for i in llo..=lhi {
        let hm = s.l.hom(i);
        let lp = Module::direct_sum(&sf, &[hm.module(), tp_at(i).module()]);
        let proj = s.projection.map(i);
        let s1 = proj.row_range(0, hm.dim());
        let s2 = proj.row_range(hm.dim(), proj.rows());
        let pdt = match cover_at(i) {
            Some(c) => tp_at(i).map_left(c.matrix(), s.l.tensor(i)),
            None => Matrix::zeros(field, 0, s.l.tensor(i).dim()),
        };
        let sp = Matrix::vstack(&[&s1, &pdt.mul(&s2)]);
        let target = s.result.component(i);
        let pi = ModHom::new(lp.clone(), target.clone(), sp)?;
        if !pi.is_epi() {
            return Err(RepcatError::NoLift(format!("s^P is not onto at degree {i}")));
        }
        let (k, u) = pi.kernel();
        precovers.push(ApproxSequence { kind: ApproxKind::Precover, x: k, a: lp, b: target, u, pi, extensions: 0 });
    }
    let q = q_functor_with(pair, &s.result, precovers)?;

    let projectives: Vec<Module> = (lo..=hi).map(proj_at).collect();
    let lr_plus = l_regular_plus(pair, lo, &projectives)?;
    let (wlo, whi) = (lo - 1, hi + 1);
    let source = RepeComplex::direct_sum(&[&x.rewindow(wlo, whi)?, &lr_plus.rewindow(wlo, whi)?])?;
    let rb = &q.r;

    let mut xis = Vec::new();
    for i in wlo..=whi {
        let (hr, tr) = (rb.hom(i), rb.tensor(i));
        let cols = hr.dim() + tr.dim();
        let lpi = if i >= llo { q.g.component(i) } else { Module::zero(sf.clone()) };
        let hm_dim = if i >= llo { s.l.hom(i).dim() } else { 0 };
        let hm_next_owned;
        let hm_next = if i + 1 <= lhi {
            s.l.hom(i + 1)
        } else {
            hm_next_owned = HomModule::new(pair.t.bimodule(), &Module::zero(pair.rep_r.algebra().clone()));
            &hm_next_owned
        };
        let mut rows: Vec<Vec<Scalar>> = Vec::new();

        // ε⁻¹: A_i → Hom(T, A_i) ⊗_S T, followed by the inclusion into L^P_{i+1} ⊗ T.
        let a_i = s.a.component(i);
        let eps_tensor = Tensor::new(hm_next.module(), pair.t.bimodule());
        let eps_inv = if a_i.dim() > 0 {
            counit_eps(&eps_tensor, hm_next)
                .inverse()
                .ok_or_else(|| RepcatError::NoLift(format!("counit not invertible on A_{i}")))?
                .matrix()
                .clone()
        } else {
            Matrix::zeros(field, 0, eps_tensor.dim())
        };
        let lp_next = q.g.component(i + 1);
        let mut j1 = Matrix::zeros(field, hm_next.dim(), lp_next.dim());
        for k in 0..hm_next.dim() {
            j1[(k, k)] = field.one();
        }
        let j1t = eps_tensor.map_left(&j1, tr);
        let to_b = eps_inv.mul(&j1t);

        // X_i block.
        if i >= lo && i <= hi {
            let j = (i - lo) as usize;
            let hat_t = &s.hat_tensors[j];
            let lm = s.lmap.map(i);
            let theta = lm.col_range(0, hm_dim);
            let u = s.u(i);
            for xb in 0..x.component(i).dim() {
                let mut m = Matrix::zeros(field, n, lpi.dim());
                let e = unit(field, x.component(i).dim(), xb);
                for phi in 0..n {
                    let cls = hat_t.class_of(&e, &unit(field, n, phi));
                    let th = Matrix::vec_mul(&cls, &theta);
                    for (c, v) in th.into_iter().enumerate() {
                        m[(phi, c)] = v;
                    }
                }
                let mut row = hr.coords(&m);
                row.extend(Matrix::vec_mul(u.row(xb), &to_b));
                rows.push(row);
            }
        }
        // P_i block.
        if let Some(c) = cover_at(i) {
            let tpi = tp_at(i);
            for pb in 0..c.src().dim() {
                let mut m = Matrix::zeros(field, n, lpi.dim());
                for phi in 0..n {
                    for (k, v) in tpi.class_of_basis(pb, phi).into_iter().enumerate() {
                        m[(phi, hm_dim + k)] = v;
                    }
                }
                let mut row = hr.coords(&m);
                let b: Vec<Scalar> = Matrix::vec_mul(c.matrix().row(pb), &to_b).iter().map(Scalar::neg).collect();
                row.extend(b);
                rows.push(row);
            }
        }
        // P_{i+1} ⊗ DR block.
        if let Some(c) = cover_at(i + 1) {
            let pdr = Tensor::new(c.src(), pair.rep_r.dual());
            let tpn = tp_at(i + 1);
            let off = hm_next.dim();
            for k in 0..pdr.dim() {
                let (pb, d) = pdr.section(k);
                let mut row = vec![field.zero(); cols];
                for (cf, phi, t) in pair.beta_inv_of(d) {
                    let mut lv = vec![field.zero(); lp_next.dim()];
                    for (kk, v) in tpn.class_of_basis(pb, *phi).into_iter().enumerate() {
                        lv[off + kk] = v;
                    }
                    let cls = tr.class_of(&lv, &unit(field, n, *t));
                    for (kk, v) in cls.into_iter().enumerate() {
                        if !v.is_zero() {
                            row[hr.dim() + kk] = row[hr.dim() + kk].add(&cf.mul(&v));
                        }
                    }
                }
                rows.push(row);
            }
        }
        let xi_i = Matrix::from_rows(field, cols, rows);
        debug_assert_eq!(xi_i.rows(), source.component(i).dim());
        if !xi_i.mul(&q.rmap.map(i)).is_zero() {
            return Err(RepcatError::XiNotAnnihilating(i));
        }
        xis.push(xi_i);
    }
    let xi = RepeHom::new(&source, &rb.complex, &xis)?;
    let mut phis = Vec::new();
    for (j, i) in (wlo..=whi).enumerate() {
        let k = q.inclusion.map(i);
        let f = Matrix::solve_left(&k, &xis[j]).map_err(|_| RepcatError::NoLift(format!("xi leaves the kernel at degree {i}")))?;
        phis.push(f);
    }
    let phi = RepeHom::new(&source, &q.result, &phis)?;
    Ok(PhiConstruction { s: s.clone(), covers, lr_plus, source, q, xi, phi })
}

/// Outcome of a round-trip verification.
#[derive(Clone, Debug)]
pub struct RoundtripReport {
    pub verdict: Verdict,
    /// `(degree, rows, cols)` of each `φ_i`, or of the compared components for the dual check.
    pub dims: Vec<(i32, usize, usize)>,
}

/// Verifies `X ⊕ L_R(P⁺) ≅ Q_DT S_T(X)` through `φ`: each `φ_i` must be square and
/// invertible, and `L_R(P⁺)` a projective object.
pub fn verify_roundtrip_r(pair: &TiltPair, x: &RepeComplex, data_r: &CotorsionData) -> Result<RoundtripReport, RepcatError> {
    let s = s_functor(pair, x, data_r)?;
    let c = construct_phi(pair, &s)?;
    let mut v = Verdict::new("Q_DT S_T(X) = X + L_R(P+)", true);
    v.push("xi annihilates r(s^P)", true, "");
    let mut dims = Vec::new();
    for i in c.source.lo()..=c.source.hi() {
        let m = c.phi.map(i);
        dims.push((i, m.rows(), m.cols()));
        let ok = m.is_invertible();
        v.push(format!("phi invertible at degree {i}"), ok, format!("{}x{}", m.rows(), m.cols()));
    }
    v.push("L_R(P+) is projective", is_projective_object(&c.lr_plus)?, "");
    Ok(RoundtripReport { verdict: v, dims })
}

/// Verifies `S_T Q_DT(Y) ≅ Y ⊕ R_DS(I⁻)` with `I⁻_i = I_{i−1}` the injective envelopes of the
/// precover terms `G_{i−1}`, using the preenvelopes `Q_i → Hom_S(DT, I_i) ⊕ G_{i+1} ⊗_S T`.
pub fn verify_roundtrip_s(
    pair: &TiltPair,
    y: &RepeComplex,
    data_r: &CotorsionData,
    data_s: &CotorsionData,
) -> Result<RoundtripReport, RepcatError> {
    let q = q_functor(pair, y, data_s)?;
    let qx = &q.result;
    let (lo, hi) = (y.lo(), y.hi());
    let r = pair.rep_r.algebra().clone();
    let sf = pair.rep_s.algebra().clone();
    let envelopes: Vec<(Module, ModHom)> = (lo..=hi).map(|i| injective_envelope(&q.g.component(i))).collect();
    let env_at = |i: i32| -> Option<&(Module, ModHom)> { (i >= lo && i <= hi).then(|| &envelopes[(i - lo) as usize]) };
    let mut v = Verdict::new("S_T Q_DT(Y) = Y + R_DS(I-)", true);
    let mut approximations = Vec::new();
    for i in qx.lo()..=qx.hi() {
        let (hr, tr) = (q.r.hom(i), q.r.tensor(i));
        let (inj, hj) = match env_at(i) {
            Some((m, j)) => {
                let hi_ = HomModule::new(pair.t.dual(), m);
                let mj = hr.map_target(j.matrix(), &hi_);
                (hi_, mj)
            }
            None => {
                let z = Module::zero(sf.clone());
                let hi_ = HomModule::new(pair.t.dual(), &z);
                (hi_, Matrix::zeros(r.field(), hr.dim(), 0))
            }
        };
        let a = Module::direct_sum(&r, &[inj.module(), tr.module()]);
        let id = Matrix::identity(r.field(), tr.dim());
        let blocks = Matrix::block_diag(r.field(), &[&hj, &id]);
        let u = ModHom::new(qx.component(i), a.clone(), q.inclusion.map(i).mul(&blocks))?;
        let (b, pi) = u.cokernel();
        let seq = ApproxSequence { kind: ApproxKind::Preenvelope, x: qx.component(i), a, b, u, pi, extensions: 0 };
        let ok = seq.verify(data_r).is_ok();
        v.push(format!("preenvelope special at degree {i}"), ok, "");
        approximations.push(seq);
    }
    let st = s_functor_with(pair, qx, approximations)?;
    let pair_s = TiltPair::regular(&sf)?;
    let iminus: Vec<Module> = (lo + 1..=hi + 1).map(|i| env_at(i - 1).map(|e| e.0.clone()).expect("degree in range")).collect();
    let itriv = RepeComplex::trivial(&pair_s.rep_r, lo + 1, iminus)?;
    let rds = r_functor(&pair_s, &itriv)?.complex;
    v.push("R_DS(I-) is projective", is_projective_object(&rds)?, "");
    let (wlo, whi) = (st.result.lo().min(y.lo()), st.result.hi().max(rds.hi()));
    let expected = RepeComplex::direct_sum(&[&y.rewindow(wlo, whi)?, &rds.rewindow(wlo, whi)?])?;
    let got = st.result.rewindow(wlo, whi)?;
    let dims = (wlo..=whi).map(|i| (i, got.component(i).dim(), expected.component(i).dim())).collect();
    v.push("S_T Q_DT(Y) isomorphic to Y + R_DS(I-)", got.is_isomorphic(&expected)?, "");
    Ok(RoundtripReport { verdict: v, dims })
}
