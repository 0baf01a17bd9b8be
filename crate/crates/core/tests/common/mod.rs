#![allow(dead_code)]

use std::sync::Arc;

use repequiv::exactla::{Field, Matrix};
use repequiv::qalg::{path_basis, Algebra, Arrow, PathRelation, Quiver, DEFAULT_CAP};
use repequiv::rmod::Module;

pub const Q: Field = Field::Rational;

/// Builds a quiver from 1-based `(name, src, tgt)` triples.
pub fn quiver(n: usize, arrows: &[(&str, usize, usize)]) -> Quiver {
    Quiver::new(n, arrows.iter().map(|&(a, s, t)| Arrow { name: a.into(), src: s - 1, tgt: t - 1 }).collect())
        .unwrap()
}

/// Linear quiver `1 → 2 → … → n` without relations.
pub fn linear(n: usize) -> Arc<Algebra> {
    let names: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
    let arrows: Vec<(&str, usize, usize)> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i + 1, i + 2)).collect();
    Arc::new(path_basis(&quiver(n, &arrows), &[], Q, DEFAULT_CAP).unwrap())
}

pub fn a2() -> Arc<Algebra> {
    linear(2)
}

pub fn a3() -> Arc<Algebra> {
    linear(3)
}

/// The seven-vertex quiver with `rad² = 0`.
pub fn seven_vertex() -> Arc<Algebra> {
    let q = quiver(
        7,
        &[
            ("alpha", 2, 1),
            ("beta", 1, 2),
            ("gamma", 3, 2),
            ("delta", 4, 3),
            ("eps", 5, 4),
            ("eps2", 4, 5),
            ("zeta", 6, 5),
            ("eta", 7, 6),
            ("theta", 7, 6),
        ],
    );
    let rels: Vec<PathRelation> = q.rad2_relations(Q);
    Arc::new(path_basis(&q, &rels, Q, DEFAULT_CAP).unwrap())
}

pub fn ints(rows: &[&[i64]]) -> Matrix {
    Matrix::from_ints(Q, rows)
}

/// A representation from per-vertex dims and per-arrow integer blocks.
pub fn rep(alg: &Arc<Algebra>, dims: &[usize], blocks: &[&[&[i64]]]) -> Module {
    let mats: Vec<Matrix> = blocks
        .iter()
        .enumerate()
        .map(|(g, b)| {
            let gen = alg.gens()[g];
            let (s, t) = (alg.src(gen), alg.tgt(gen));
            if b.is_empty() {
                Matrix::zeros(Q, dims[s], dims[t])
            } else {
                Matrix::from_ints(Q, b)
            }
        })
        .collect();
    Module::from_representation(alg.clone(), dims, &mats).unwrap()
}

/// Summands `P1, P2, S2` of the tilting module over `1 → 2 → 3`.
pub fn a3t_summands(alg: &Arc<Algebra>) -> Vec<Module> {
    vec![Module::projective(alg.clone(), 0), Module::projective(alg.clone(), 1), Module::simple(alg.clone(), 1)]
}

/// The six indecomposables over `1 → 2 → 3`: `S1, S2, S3, P2 (=23), I2 (=12), P1 (=123)`.
pub fn a3_indecomposables(alg: &Arc<Algebra>) -> Vec<Module> {
    vec![
        Module::simple(alg.clone(), 0),
        Module::simple(alg.clone(), 1),
        Module::simple(alg.clone(), 2),
        Module::projective(alg.clone(), 1),
        Module::injective(alg.clone(), 1),
        Module::projective(alg.clone(), 0),
    ]
}

/// The four named modules over `1 → 2`: `S1, S2, P1` and a second presentation of `I2 ≅ P1`.
pub fn a2_named(alg: &Arc<Algebra>) -> Vec<Module> {
    vec![
        Module::simple(alg.clone(), 0),
        Module::simple(alg.clone(), 1),
        Module::projective(alg.clone(), 0),
        rep(alg, &[1, 1], &[&[&[2]]]),
    ]
}

/// Summands of the seven-vertex tilting module: `P2, M(13/2), S3, P4, P5, P6, P7`.
pub fn seven_vertex_t(alg: &Arc<Algebra>) -> Vec<Module> {
    let m = rep(alg, &[1, 1, 1, 0, 0, 0, 0], &[&[&[0]], &[&[1]], &[&[1]], &[], &[], &[], &[], &[], &[]]);
    vec![
        Module::projective(alg.clone(), 1),
        m,
        Module::simple(alg.clone(), 2),
        Module::projective(alg.clone(), 3),
        Module::projective(alg.clone(), 4),
        Module::projective(alg.clone(), 5),
        Module::projective(alg.clone(), 6),
    ]
}

use repequiv::homalg::ext;
use repequiv::wtilt::{derive_s_data, in_co_auslander, CotorsionData, TiltingModule};

/// The tilting module over `1 → 2 → 3` with generator lists derived by brute force:
/// `𝒜` = indecomposables in the co-Auslander class, `ℬ` = those `Ext`-orthogonal to `𝒜`.
pub fn a3t_setup() -> (TiltingModule, CotorsionData, CotorsionData) {
    let alg = a3();
    let t = TiltingModule::from_summands(&a3t_summands(&alg), "S").unwrap();
    let ind = a3_indecomposables(&alg);
    let a: Vec<Module> = ind.iter().filter(|m| in_co_auslander(m, &t, 4).unwrap().member).cloned().collect();
    let b: Vec<Module> =
        ind.iter().filter(|m| a.iter().all(|x| (1..=4).all(|i| ext(m, x, i) == 0))).cloned().collect();
    let data_r = CotorsionData::new(alg, b, a, 4);
    let data_s = derive_s_data(&t, &data_r);
    (t, data_r, data_s)
}

/// `(proj, all)` and `(all, inj)` for `T = R`, with `all` the listed indecomposables.
pub fn regular_setup(alg: &Arc<Algebra>, all: Vec<Module>) -> (TiltingModule, CotorsionData, CotorsionData) {
    let t = TiltingModule::regular(alg);
    let proj: Vec<Module> = (0..alg.nverts()).map(|v| Module::projective(alg.clone(), v)).collect();
    let inj: Vec<Module> = (0..alg.nverts()).map(|v| Module::injective(alg.clone(), v).over(alg)).collect();
    let data_r = CotorsionData::new(alg.clone(), proj, all.clone(), 4);
    let data_s = CotorsionData::new(alg.clone(), all, inj, 4);
    (t, data_r, data_s)
}

/// The indecomposables over `1 → 2`: `S1, S2, P1`.
pub fn a2_indecomposables(alg: &Arc<Algebra>) -> Vec<Module> {
    vec![Module::simple(alg.clone(), 0), Module::simple(alg.clone(), 1), Module::projective(alg.clone(), 0)]
}
