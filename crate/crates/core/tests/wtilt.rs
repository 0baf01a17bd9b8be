mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use repequiv::homalg::ext;
use repequiv::rmod::{is_isomorphic, random_module, Module};
use repequiv::wtilt::*;

#[test]
fn regular_module_is_certified() {
    for alg in [a2(), a3(), seven_vertex()] {
        let t = TiltingModule::regular(&alg);
        let r = check_wakamatsu(&t, 3).unwrap();
        assert!(r.certified(), "{}", r.verdict_line());
        assert_eq!(r.verdict_line(), "certified to depth 3");
        assert_eq!(r.coresolution[0].term.dim(), alg.dim());
        assert!(r.coresolution[1].source.is_zero());
    }
}

#[test]
fn dual_of_regular_is_certified() {
    for alg in [a2(), a3()] {
        let t = TiltingModule::regular(&alg).dual_module();
        let r = check_wakamatsu(&t, 4).unwrap();
        assert!(r.certified(), "{}", r.verdict_line());
    }
}

#[test]
fn tilting_module_over_a3_is_certified() {
    let (t, _, _) = a3t_setup();
    let r = check_wakamatsu(&t, 4).unwrap();
    assert!(r.certified(), "{}", r.verdict_line());
    assert_eq!(t.s_algebra().dim(), 5);
}

#[test]
fn seven_vertex_module_is_certified_at_small_depth() {
    let alg = seven_vertex();
    let t = TiltingModule::from_summands(&seven_vertex_t(&alg), "S").unwrap();
    let r = check_wakamatsu(&t, 3).unwrap();
    assert!(r.certified(), "{}", r.verdict_line());
}

#[test]
fn a_simple_is_not_wakamatsu_tilting() {
    let alg = a3();
    let t = TiltingModule::from_summands(&[Module::simple(alg.clone(), 2)], "S").unwrap();
    let r = check_wakamatsu(&t, 2).unwrap();
    assert!(!r.certified());
    assert!(r.verdict_line().starts_with("fails at stage 0"), "{}", r.verdict_line());
    assert!(matches!(r.into_result(), Err(WTiltError::FailsAtStage { stage: 0, .. })));
}

#[test]
fn co_auslander_examples() {
    let alg = a3();
    let (t, _, _) = a3t_setup();
    for v in 0..3 {
        let inj = Module::injective(alg.clone(), v).over(&alg);
        assert!(in_co_auslander(&inj, &t, 4).unwrap().member);
    }
    for s in t.summands() {
        assert!(in_co_auslander(&s, &t, 4).unwrap().member);
        assert!(in_auslander(&s, &t, 4).unwrap().member);
    }
    let s3 = Module::simple(alg.clone(), 2);
    let m = in_co_auslander(&s3, &t, 4).unwrap();
    assert!(!m.member);
    assert!(m.failed_clause.unwrap().contains("Ext^1"));
}

#[test]
fn auslander_examples() {
    let alg = a3();
    let (t, _, _) = a3t_setup();
    for v in 0..3 {
        assert!(in_auslander(&Module::projective(alg.clone(), v), &t, 4).unwrap().member);
    }
    let a = a2();
    let dr = TiltingModule::regular(&a).dual_module();
    for m in a2_named(&a) {
        assert!(in_auslander(&m, &dr, 4).unwrap().member);
    }
}

#[test]
fn brute_force_classes_for_the_a3_tilting_module() {
    let alg = a3();
    let (_, data_r, data_s) = a3t_setup();
    let ind = a3_indecomposables(&alg);
    // 𝒜: all but S3; ℬ: P1, P2, P3 = S3, S2.
    let expect_a = [&ind[0], &ind[1], &ind[3], &ind[4], &ind[5]];
    let expect_b = [&ind[1], &ind[2], &ind[3], &ind[5]];
    assert_eq!(data_r.a_gens.len(), expect_a.len());
    assert_eq!(data_r.b_gens.len(), expect_b.len());
    for (x, y) in data_r.a_gens.iter().zip(expect_a) {
        assert!(is_isomorphic(x, y).unwrap().is_some());
    }
    for (x, y) in data_r.b_gens.iter().zip(expect_b) {
        assert!(is_isomorphic(x, y).unwrap().is_some());
    }
    assert!(data_r.validate().unwrap().passed());
    assert!(data_s.validate().unwrap().passed());
}

#[test]
fn preenvelope_examples() {
    let alg = a3();
    let (_, data_r, _) = a3t_setup();
    for a in &data_r.a_gens {
        let s = special_preenvelope(a, &data_r).unwrap();
        assert!(s.is_trivial() && s.b.is_zero() && s.extensions == 0);
    }
    let s3 = Module::simple(alg.clone(), 2);
    let s = special_preenvelope(&s3, &data_r).unwrap();
    assert!(is_isomorphic(&s.a, &Module::projective(alg.clone(), 1)).unwrap().is_some());
    assert!(is_isomorphic(&s.b, &Module::simple(alg.clone(), 1)).unwrap().is_some());
    assert!(s.right_term_in_add(&data_r).unwrap());
    for b in &data_r.b_gens {
        assert_eq!(ext(&s.b, &data_r.a_gens[0], 1), 0);
        assert_eq!(ext(b, &s.a, 1), 0);
    }

    let (_, proj_all, _) = regular_setup(&alg, a3_indecomposables(&alg));
    for x in a3_indecomposables(&alg) {
        let s = special_preenvelope(&x, &proj_all).unwrap();
        assert!(s.is_trivial());
    }
}

#[test]
fn precover_examples() {
    let alg = a3();
    let (_, _, all_inj) = regular_setup(&alg, a3_indecomposables(&alg));
    for y in a3_indecomposables(&alg) {
        let s = special_precover(&y, &all_inj).unwrap();
        assert!(s.is_trivial() && s.x.is_zero());
    }
    let (t, _, data_s) = a3t_setup();
    for g in &data_s.b_gens {
        let s = special_precover(g, &data_s).unwrap();
        assert!(s.is_trivial());
    }
    let salg = t.s_algebra().clone();
    for v in 0..salg.nverts() {
        let y = Module::simple(salg.clone(), v);
        let s = special_precover(&y, &data_s).unwrap();
        assert!(s.is_exact());
        s.verify(&data_s).unwrap();
        assert!(s.right_term_in_add(&data_s).unwrap());
    }
}

#[test]
fn injective_cogenerator_data_forces_injective_envelopes() {
    let alg = a2();
    let all = a2_indecomposables(&alg);
    let inj: Vec<Module> = (0..2).map(|v| Module::injective(alg.clone(), v).over(&alg)).collect();
    let data = CotorsionData::new(alg.clone(), all, inj, 3);
    let s2 = Module::simple(alg.clone(), 1);
    let s = special_preenvelope(&s2, &data).unwrap();
    assert!(is_isomorphic(&s.a, &Module::projective(alg.clone(), 0)).unwrap().is_some());
    assert!(is_isomorphic(&s.b, &Module::simple(alg.clone(), 0)).unwrap().is_some());
}

#[test]
fn iteration_cap_is_reported() {
    let alg = a2();
    let all = a2_indecomposables(&alg);
    let inj: Vec<Module> = (0..2).map(|v| Module::injective(alg.clone(), v).over(&alg)).collect();
    let data = CotorsionData::new(alg.clone(), all, inj, 3).with_cap(0);
    let err = special_preenvelope(&Module::simple(alg.clone(), 1), &data).unwrap_err();
    assert_eq!(err, WTiltError::IterationCap { cap: 0 });
}

#[test]
fn good_examples() {
    for (alg, all) in [(a2(), a2_indecomposables(&a2())), (a3(), a3_indecomposables(&a3()))] {
        let (t, dr, ds) = regular_setup(&alg, all);
        let v = check_good(&t, &dr, &ds, 3).unwrap();
        assert!(v.passed(), "{:?}", v.failures().collect::<Vec<_>>());
        assert!(v.relative);
    }
    let (t, dr, ds) = a3t_setup();
    let v = check_good(&t, &dr, &ds, 4).unwrap();
    assert!(v.passed(), "{:?}", v.failures().collect::<Vec<_>>());
    let swapped = check_good(&t.dual_module(), &ds, &dr, 4).unwrap();
    assert!(swapped.passed(), "{:?}", swapped.failures().collect::<Vec<_>>());
}

#[test]
fn bad_data_is_not_good() {
    let alg = a3();
    let (t, dr, _) = a3t_setup();
    // Swapping the classes breaks orthogonality and the counit conditions.
    let wrong = CotorsionData::new(alg, dr.a_gens.clone(), dr.b_gens.clone(), 2);
    let ds = derive_s_data(&t, &wrong);
    let v = check_good(&t, &wrong, &ds, 2).unwrap();
    assert!(!v.passed());
}

#[test]
fn ext_projective_generator_examples() {
    let alg = a3();
    let t = TiltingModule::regular(&alg);
    assert!(check_ext_projective_generator(&t, &a3_indecomposables(&alg), 3).unwrap().passed());
    let (t, dr, _) = a3t_setup();
    assert!(check_ext_projective_generator(&t, &dr.a_gens, 3).unwrap().passed());
    let a = a2();
    let inj: Vec<Module> = (0..2).map(|v| Module::injective(a.clone(), v).over(&a)).collect();
    let v = check_ext_projective_generator(&TiltingModule::regular(&a), &inj, 3).unwrap();
    assert!(!v.passed());
}

#[test]
fn finite_type_examples() {
    let alg = a3();
    let proj: Vec<Module> = (0..3).map(|v| Module::projective(alg.clone(), v)).collect();
    let v = finite_type_check(&TiltingModule::regular(&alg), &proj, 3).unwrap();
    assert!(v.passed() && v.relative);
    let dr = TiltingModule::regular(&alg).dual_module();
    let v = finite_type_check(&dr, &a3_indecomposables(&alg), 3).unwrap();
    assert!(v.passed(), "{:?}", v.failures().collect::<Vec<_>>());
    // Simples alone are not closed under extensions.
    let simples: Vec<Module> = (0..3).map(|v| Module::simple(alg.clone(), v)).collect();
    let v = finite_type_check(&dr, &simples, 3).unwrap();
    assert!(!v.passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn preenvelopes_are_special(seed in any::<u64>()) {
        let alg = a3();
        let (_, data_r, _) = a3t_setup();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(&alg, &mut rng, 3);
        let s = special_preenvelope(&x, &data_r).unwrap();
        prop_assert!(s.is_exact());
        for a in &data_r.a_gens {
            prop_assert_eq!(ext(&s.b, a, 1), 0);
        }
        prop_assert!(s.right_term_in_add(&data_r).unwrap());
    }

    #[test]
    fn precovers_are_special(seed in any::<u64>()) {
        let (t, _, data_s) = a3t_setup();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_module(t.s_algebra(), &mut rng, 3);
        let s = special_precover(&y, &data_s).unwrap();
        prop_assert!(s.is_exact());
        for b in &data_s.b_gens {
            prop_assert_eq!(ext(b, &s.x, 1), 0);
        }
    }
}
