mod common;

use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use repequiv::exactla::Matrix;
use repequiv::homalg::{HomModule, Tensor};
use repequiv::qalg::Algebra;
use repequiv::repcat::*;
use repequiv::rmod::{hom_dim, is_isomorphic, Module};
use repequiv::wtilt::CotorsionData;

fn inj(alg: &Arc<Algebra>, v: usize) -> Module {
    Module::injective(alg.clone(), v).over(alg)
}

fn random_x(rep: &Arc<Repetitive>, seed: u64) -> RepeComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_complex(rep, -2, 2, &mut rng, 3).unwrap()
}

fn regular_data(alg: &Arc<Algebra>) -> (TiltPair, CotorsionData, CotorsionData) {
    let all = if alg.nverts() == 2 { a2_indecomposables(alg) } else { a3_indecomposables(alg) };
    let (t, dr, ds) = regular_setup(alg, all);
    (TiltPair::new(&t).unwrap(), dr, ds)
}

fn a3t_pair() -> (TiltPair, CotorsionData, CotorsionData) {
    let (t, dr, ds) = a3t_setup();
    (TiltPair::new(&t).unwrap(), dr, ds)
}

#[test]
fn trivial_and_stalk_complexes_are_valid() {
    let alg = a2();
    let rep = Repetitive::of(&alg);
    let comps = vec![Module::simple(alg.clone(), 0), Module::projective(alg.clone(), 0), Module::simple(alg.clone(), 1)];
    let x = RepeComplex::trivial(&rep, -1, comps).unwrap();
    assert!(x.is_trivial());
    assert_eq!((x.lo(), x.hi()), (-1, 1));
    let s = RepeComplex::stalk(&rep, &Module::projective(alg.clone(), 0), 3);
    assert_eq!(s.dims(), vec![(3, vec![1, 1])]);
}

#[test]
fn square_zero_violation_is_rejected() {
    let k = linear(1);
    let rep = Repetitive::of(&k);
    let one = Module::simple(k.clone(), 0);
    let id = ints(&[&[1]]);
    let err = make_repe(&rep, 0, vec![one.clone(), one.clone(), one.clone()], vec![id.clone(), id.clone()]).unwrap_err();
    assert_eq!(err, RepcatError::SquareZero(2));
    assert_eq!(err.to_string(), "square-zero violated at degree 2");
    assert!(make_repe(&rep, 0, vec![one.clone(), one.clone()], vec![id]).is_ok());
}

#[test]
fn non_linear_structure_map_is_rejected() {
    let alg = a2();
    let rep = Repetitive::of(&alg);
    let p1 = Module::projective(alg.clone(), 0);
    let t = Tensor::new(&p1, rep.dual());
    // Any nonzero map hitting the wrong vertex is not R-linear.
    let mut bad = Matrix::zeros(Q, t.dim(), p1.dim());
    bad[(0, 0)] = Q.one();
    for r in 0..t.dim() {
        for c in 0..p1.dim() {
            bad[(r, c)] = Q.one();
        }
    }
    let err = make_repe(&rep, 0, vec![p1.clone(), p1.clone()], vec![bad]).unwrap_err();
    assert!(matches!(err, RepcatError::BadDelta(1, _)), "{err}");
}

#[test]
fn window_bound_is_enforced() {
    let rep = Repetitive::of(&a2());
    assert!(matches!(rep.window(-9, 0), Err(RepcatError::WindowExceeded { .. })));
    let x = RepeComplex::stalk(&rep, &Module::simple(rep.algebra().clone(), 0), 8);
    assert!(matches!(x.try_shift(1), Err(RepcatError::WindowExceeded { .. })));
}

#[test]
fn proj_object_shape() {
    for alg in [a2(), a3()] {
        let rep = Repetitive::of(&alg);
        let mut total = 0;
        for v in 0..alg.nverts() {
            let e = proj_object(&rep, v, 1).unwrap();
            assert_eq!(e.component(1).dim_vector(), Module::projective(alg.clone(), v).dim_vector());
            assert_eq!(e.component(0).dim_vector(), inj(&alg, v).dim_vector());
            assert!(is_isomorphic(&e.component(1), &Module::projective(alg.clone(), v)).unwrap().is_some());
            assert!(is_isomorphic(&e.component(0), &inj(&alg, v)).unwrap().is_some());
            let t = Tensor::new(&e.component(1), rep.dual());
            let d = e.delta(1);
            assert!(d.is_invertible(), "structure map of a projective object is an isomorphism");
            assert_eq!(d.rows(), t.dim());
            total += e.dim();
        }
        assert_eq!(total, 2 * alg.dim());
    }
}

#[test]
fn hom_form_round_trip() {
    let rep = Repetitive::of(&a3());
    for seed in 0..4 {
        let x = random_x(&rep, seed);
        let comps = x.components().to_vec();
        let maps: Vec<Matrix> = (x.lo() + 1..=x.hi()).map(|i| x.hom_form(i).1).collect();
        let y = RepeComplex::from_hom_form(&rep, x.lo(), comps, maps).unwrap();
        for i in x.lo() + 1..=x.hi() {
            assert_eq!(y.delta(i), x.delta(i));
        }
    }
    let e = proj_object(&rep, 0, 0).unwrap();
    let (hm, g) = e.hom_form(0);
    assert_eq!(hm.dim(), e.component(0).dim());
    assert!(g.is_invertible());
    let t = RepeComplex::trivial(&rep, 0, vec![Module::simple(rep.algebra().clone(), 0); 2]).unwrap();
    assert!(t.hom_form(1).1.is_zero());
}

#[test]
fn shift_examples() {
    let rep = Repetitive::of(&a2());
    let x = random_x(&rep, 7);
    let y = x.shift(3);
    assert_eq!((y.lo(), y.hi()), (x.lo() + 3, x.hi() + 3));
    for i in x.lo()..=x.hi() {
        assert_eq!(y.component(i + 3).dim_vector(), x.component(i).dim_vector());
        if i > x.lo() {
            assert_eq!(y.delta(i + 3), x.delta(i));
        }
    }
    assert_eq!(x.shift(0).module().acts(), x.module().acts());
    assert_eq!(x.shift(1).shift(-1).module().acts(), x.module().acts());
}

#[test]
fn repe_hom_basis_examples() {
    let alg = a2();
    let rep = Repetitive::of(&alg);
    let x = random_x(&rep, 1);
    let basis = repe_hom_basis(&x, &x).unwrap();
    let id = RepeHom::identity(&x);
    let space = repequiv::rmod::HomSpace::new(x.module(), x.module());
    assert_eq!(basis.len(), space.dim());
    assert!(space.coords_checked(id.matrix()).is_some());

    let s1 = Module::simple(alg.clone(), 0);
    let far = RepeComplex::stalk(&rep, &s1, 4);
    let near = RepeComplex::stalk(&rep, &s1, 0);
    assert_eq!(repe_hom_basis(&near, &far).unwrap().len(), 0);
    let b = repe_hom_basis(&near, &near).unwrap();
    assert_eq!(b.len(), hom_dim(&s1, &s1));
    assert!(!b.is_empty());
}

#[test]
fn morphism_check_reports_degree() {
    let alg = a2();
    let rep = Repetitive::of(&alg);
    let e = proj_object(&rep, 0, 1).unwrap();
    // The identity on the lower component alone does not commute with δ.
    let maps = vec![Matrix::identity(Q, e.component(0).dim()), Matrix::zeros(Q, e.component(1).dim(), e.component(1).dim())];
    let err = RepeHom::new(&e, &e, &maps).unwrap_err();
    assert!(matches!(err, RepcatError::NotMorphism(_)), "{err}");
}

#[test]
fn strip_examples() {
    for alg in [a2(), a3()] {
        let rep = Repetitive::of(&alg);
        for v in 0..alg.nverts() {
            for k in -1..=1 {
                let e = proj_object(&rep, v, k).unwrap();
                let s = strip_projectives(&e).unwrap();
                assert!(s.core.is_zero());
                assert_eq!(s.summands, vec![(v, k)]);
            }
        }
        for v in 0..alg.nverts() {
            let s = Module::simple(alg.clone(), v);
            if is_isomorphic(&s, &Module::projective(alg.clone(), v)).unwrap().is_some() && is_isomorphic(&s, &inj(&alg, v)).unwrap().is_some() {
                continue;
            }
            let x = RepeComplex::stalk(&rep, &s, 0);
            let st = strip_projectives(&x).unwrap();
            assert_eq!(st.core.dim(), x.dim());
            assert!(st.summands.is_empty());
        }
    }
    let alg = a3();
    let rep = Repetitive::of(&alg);
    let x = RepeComplex::stalk(&rep, &Module::simple(alg.clone(), 1), 0).rewindow(-1, 1).unwrap();
    let e = proj_object(&rep, 2, 1).unwrap().rewindow(-1, 1).unwrap();
    let sum = RepeComplex::direct_sum(&[&x, &e]).unwrap();
    let st = strip_projectives(&sum).unwrap();
    assert!(st.core.is_isomorphic(&x).unwrap());
    assert_eq!(st.summands, vec![(2, 1)]);
}

#[test]
fn stable_hom_examples() {
    let alg = a2();
    let rep = Repetitive::of(&alg);
    let s1 = RepeComplex::stalk(&rep, &Module::simple(alg.clone(), 0), 0);
    for v in 0..2 {
        for k in -1..=1 {
            let e = proj_object(&rep, v, k).unwrap();
            assert_eq!(stable_hom(&e, &s1).unwrap().dim(), 0);
            assert_eq!(stable_hom(&s1, &e).unwrap().dim(), 0);
        }
    }
    let hull = stable_hom(&s1, &s1).unwrap();
    let brute = stable_hom_brute_force(&s1, &s1).unwrap();
    assert_eq!(hull.dim(), brute.dim());
    assert_eq!(hull.dim(), hull.hom_dim() - hull.factoring_dim());
    let id = RepeHom::identity(&s1);
    assert!(!hull.is_stably_zero(&id).unwrap());
}

#[test]
fn l_functor_examples() {
    let (pair, _, _) = a3t_pair();
    let summands = pair.t.summands();
    let a = RepeComplex::trivial(&pair.rep_r, 0, vec![summands[0].clone(), summands[2].clone()]).unwrap();
    let l = l_functor(&pair, &a).unwrap();
    assert!(is_projective_object(&l.complex).unwrap());
    let z = RepeComplex::zero(&pair.rep_r);
    assert!(l_functor(&pair, &z).unwrap().complex.is_zero());

    let alg = a3();
    let (reg, _, _) = regular_data(&alg);
    let m = Module::simple(alg.clone(), 1);
    let a = RepeComplex::trivial(&reg.rep_r, 0, vec![m.clone(), m.clone()]).unwrap();
    let l = l_functor(&reg, &a).unwrap();
    let dr = Tensor::new(&m, reg.rep_r.dual()).module().clone();
    for i in 0..=2 {
        let expect_hom = if i >= 1 { m.dim() } else { 0 };
        let expect_ten = if i <= 1 { dr.dim() } else { 0 };
        assert_eq!(l.complex.component(i).dim(), expect_hom + expect_ten);
    }
}

#[test]
fn hat_tensor_examples() {
    let alg = a3();
    let (reg, _, _) = regular_data(&alg);
    for seed in 0..3 {
        let x = random_x(&reg.rep_r, seed);
        let (h, _) = hat_tensor(&reg, &x).unwrap();
        for i in x.lo()..=x.hi() {
            let tw = Tensor::new(&x.component(i), reg.rep_r.dual());
            assert_eq!(h.component(i).dim(), tw.dim());
        }
        if x.is_trivial() {
            assert!(h.is_trivial());
        }
    }
    let (pair, _, _) = a3t_pair();
    let t = RepeComplex::trivial(&pair.rep_r, 0, vec![Module::simple(alg.clone(), 0), Module::simple(alg.clone(), 2)]).unwrap();
    assert!(hat_tensor(&pair, &t.clone().rewindow(0, 1).unwrap()).unwrap().0.is_trivial());
    for v in 0..3 {
        let e = proj_object(&pair.rep_r, v, 0).unwrap();
        let h = hat_tensor(&pair, &e).unwrap().0;
        for i in -1..=0 {
            assert_eq!(h.component(i).dim(), Tensor::new(&e.component(i), pair.t.dual()).dim());
        }
    }
}

#[test]
fn l_map_examples() {
    let (pair, _, _) = a3t_pair();
    let summands = pair.t.summands();
    let x = RepeComplex::trivial(&pair.rep_r, 0, vec![summands[0].clone(), summands[1].clone()]).unwrap();
    let id: Vec<Matrix> = x.components().iter().map(|c| Matrix::identity(Q, c.dim())).collect();
    let l = l_functor(&pair, &x).unwrap();
    let (hat, ht) = hat_tensor(&pair, &x).unwrap();
    let f = l_map(&pair, &x, &hat, &ht, &l, &id).unwrap();
    for i in 0..=1 {
        let m = f.map(i);
        let hm = l.hom(i).dim();
        assert!(m.col_range(0, hm).is_zero());
        assert!(m.col_range(hm, m.cols()).is_invertible());
    }

    let alg = a2();
    let (reg, dr, _) = regular_data(&alg);
    let x = random_x(&reg.rep_r, 9);
    let s = s_functor(&reg, &x, &dr).unwrap();
    assert!(s.approximations.iter().all(|a| a.is_trivial()));
    assert!(s.result.is_isomorphic(&x.shift(1)).unwrap());
}

#[test]
fn s_functor_examples() {
    let (pair, dr, _) = a3t_pair();
    for v in 0..3 {
        for k in -2..=2 {
            let e = proj_object(&pair.rep_r, v, k).unwrap();
            let s = s_functor(&pair, &e, &dr).unwrap();
            assert!(is_projective_object(&s.result).unwrap(), "S_T(P({v},{k}))");
            let hom_t = HomModule::new(pair.t.bimodule(), &s.a.component(k));
            assert_eq!(s.l.hom(k + 1).dim(), hom_t.dim());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let x = random_complex(&pair.rep_r, -1, 1, &mut rng, 2).unwrap();
    let sx = s_functor(&pair, &x, &dr).unwrap();
    let zero = RepeHom::zero(&x, &x);
    let sz = s_map(&pair, &sx, &sx, &zero).unwrap();
    assert!(stable_hom(&sx.result, &sx.result).unwrap().is_stably_zero(&sz).unwrap());
    let sid = s_map(&pair, &sx, &sx, &RepeHom::identity(&x)).unwrap();
    assert!(sid.is_iso());
}

#[test]
fn s_map_is_stably_functorial() {
    let (pair, dr, _) = a3t_pair();
    for seed in 0..3 {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let x = random_complex(&pair.rep_r, -1, 1, &mut rng, 2).unwrap();
        let y = random_complex(&pair.rep_r, -1, 1, &mut rng, 2).unwrap();
        let z = random_complex(&pair.rep_r, -1, 1, &mut rng, 2).unwrap();
        let g = random_repe_hom(&x, &y, &mut rng).unwrap();
        let h = random_repe_hom(&y, &z, &mut rng).unwrap();
        let (sx, sy, sz) = (s_functor(&pair, &x, &dr).unwrap(), s_functor(&pair, &y, &dr).unwrap(), s_functor(&pair, &z, &dr).unwrap());
        let whole = s_map(&pair, &sx, &sz, &g.then(&h)).unwrap();
        let parts = s_map(&pair, &sx, &sy, &g).unwrap().then(&s_map(&pair, &sy, &sz, &h).unwrap());
        let st = stable_hom(&sx.result, &sz.result).unwrap();
        assert_eq!(st.class_of(&whole).unwrap(), st.class_of(&parts).unwrap());
    }
}

#[test]
fn q_functor_examples() {
    let (pair, _, ds) = a3t_pair();
    for v in 0..pair.rep_s.nverts() {
        for k in -2..=2 {
            let e = proj_object(&pair.rep_s, v, k).unwrap();
            let q = q_functor(&pair, &e, &ds).unwrap();
            assert!(is_projective_object(&q.result).unwrap(), "Q_DT(P({v},{k}))");
        }
    }
    for alg in [a2(), a3()] {
        let (reg, _, ds) = regular_data(&alg);
        for seed in 0..3 {
            let y = random_x(&reg.rep_s, 50 + seed);
            let q = q_functor(&reg, &y, &ds).unwrap();
            assert!(q.result.is_isomorphic(&y.shift(-1)).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let y = random_complex(&pair.rep_s, -1, 1, &mut rng, 2).unwrap();
    let qy = q_functor(&pair, &y, &ds).unwrap();
    let qz = q_map(&pair, &qy, &qy, &RepeHom::zero(&y, &y)).unwrap();
    assert!(stable_hom(&qy.result, &qy.result).unwrap().is_stably_zero(&qz).unwrap());
    assert!(q_map(&pair, &qy, &qy, &RepeHom::identity(&y)).unwrap().is_iso());
}

#[test]
fn construct_phi_examples() {
    let alg = a3();
    let (reg, dr, _) = regular_data(&alg);
    let x = random_x(&reg.rep_r, 77);
    let s = s_functor(&reg, &x, &dr).unwrap();
    let c = construct_phi(&reg, &s).unwrap();
    assert!(c.phi.is_iso());

    let (pair, dr, _) = a3t_pair();
    for v in 0..3 {
        let x = RepeComplex::stalk(&pair.rep_r, &Module::simple(alg.clone(), v), 0);
        let s = s_functor(&pair, &x, &dr).unwrap();
        let c = construct_phi(&pair, &s).unwrap();
        assert!(c.xi.then(&c.q.rmap).is_zero());
        assert!(c.phi.is_iso());
    }
}

#[test]
fn roundtrip_examples() {
    let (pair, dr, ds) = a3t_pair();
    let zero = RepeComplex::zero(&pair.rep_r);
    assert!(verify_roundtrip_r(&pair, &zero, &dr).unwrap().verdict.passed());
    for seed in 0..3 {
        let x = random_x(&pair.rep_r, 200 + seed);
        let r = verify_roundtrip_r(&pair, &x, &dr).unwrap();
        assert!(r.verdict.passed(), "{:?}", r.verdict.failures().collect::<Vec<_>>());
        let y = random_x(&pair.rep_s, 300 + seed);
        let r = verify_roundtrip_s(&pair, &y, &dr, &ds).unwrap();
        assert!(r.verdict.passed(), "{:?}", r.verdict.failures().collect::<Vec<_>>());
    }
    let alg = a2();
    let (reg, dr, ds) = regular_data(&alg);
    let x = random_x(&reg.rep_r, 3);
    assert!(verify_roundtrip_r(&reg, &x, &dr).unwrap().verdict.passed());
    assert!(verify_roundtrip_s(&reg, &x, &dr, &ds).unwrap().verdict.passed());
}

#[test]
fn restriction_examples() {
    let (pair, dr, _) = a3t_pair();
    let v = restriction_check(&pair, &dr, &dr.a_gens).unwrap();
    assert!(v.passed(), "{:?}", v.failures().collect::<Vec<_>>());
    let f = f_functor(&pair, &RepeComplex::stalk(&pair.rep_r, pair.t.module(), 0), &dr).unwrap();
    let s = RepeComplex::stalk(&pair.rep_s, &Module::regular(pair.rep_s.algebra().clone()), 0);
    assert!(stably_isomorphic(&f, &s).unwrap());
    let alg = a3();
    let dual_r = Module::direct_sum(&alg, &[&inj(&alg, 0), &inj(&alg, 1), &inj(&alg, 2)]);
    let f = f_functor(&pair, &RepeComplex::stalk(&pair.rep_r, &dual_r, 0), &dr).unwrap();
    let dt = RepeComplex::stalk(&pair.rep_s, &pair.t.dual().module().clone(), 0);
    assert!(stably_isomorphic(&f, &dt).unwrap());

    let (reg, dr, ds) = regular_data(&alg);
    for m in a3_indecomposables(&alg) {
        let x = RepeComplex::stalk(&reg.rep_r, &m, 0);
        assert!(f_functor(&reg, &x, &dr).unwrap().is_isomorphic(&x).unwrap());
        assert!(g_functor(&reg, &x, &ds).unwrap().is_isomorphic(&x).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn strip_is_idempotent_and_splits(seed in any::<u64>()) {
        let rep = Repetitive::of(&a3());
        let x = random_x(&rep, seed);
        let s = strip_projectives(&x).unwrap();
        let again = strip_projectives(&s.core).unwrap();
        prop_assert!(again.summands.is_empty());
        prop_assert_eq!(again.core.dim(), s.core.dim());
        let sum = RepeComplex::direct_sum(&[&s.core, &s.projective]).unwrap();
        prop_assert!(sum.is_isomorphic(&x).unwrap());
    }

    #[test]
    fn functor_outputs_are_complexes(seed in any::<u64>()) {
        let (pair, dr, ds) = a3t_pair();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&pair.rep_r, -1, 1, &mut rng, 2).unwrap();
        let s = s_functor(&pair, &x, &dr).unwrap();
        prop_assert!(RepeHom::new(s.lmap.src(), s.lmap.tgt(), &(s.lmap.src().lo()..=s.lmap.src().hi()).map(|i| s.lmap.map(i)).collect::<Vec<_>>()).is_ok());
        let y = random_complex(&pair.rep_s, -1, 1, &mut rng, 2).unwrap();
        let q = q_functor(&pair, &y, &ds).unwrap();
        prop_assert!(RepeHom::new(q.rmap.src(), q.rmap.tgt(), &(q.rmap.src().lo()..=q.rmap.src().hi()).map(|i| q.rmap.map(i)).collect::<Vec<_>>()).is_ok());
    }

    #[test]
    fn stable_routes_agree(seed in any::<u64>()) {
        let rep = Repetitive::of(&a2());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&rep, -1, 1, &mut rng, 2).unwrap();
        let y = random_complex(&rep, -1, 1, &mut rng, 2).unwrap();
        prop_assert_eq!(stable_hom(&x, &y).unwrap().dim(), stable_hom_brute_force(&x, &y).unwrap().dim());
    }
}
