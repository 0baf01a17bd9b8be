//! Seeded pseudo-random modules and homomorphisms for property checks.

use std::sync::Arc;

use rand::Rng;

use super::{HomSpace, ModHom, Module};
use crate::exactla::Matrix;
use crate::qalg::Algebra;

/// A random quotient of a sum of at most `max_tops` indecomposable projectives by the
/// submodule generated by up to `max_tops` random vertex-homogeneous vectors.
pub fn random_module<R: Rng>(alg: &Arc<Algebra>, rng: &mut R, max_tops: usize) -> Module {
    let f = alg.field();
    let k = rng.gen_range(1..=max_tops.max(1));
    let parts: Vec<Module> = (0..k).map(|_| Module::projective(alg.clone(), rng.gen_range(0..alg.nverts()))).collect();
    let p = Module::direct_sum(alg, &parts.iter().collect::<Vec<_>>());
    let r = rng.gen_range(0..=max_tops);
    let mut rows = Vec::new();
    for _ in 0..r {
        let w = rng.gen_range(0..alg.nverts());
        let idx = p.basis_at(w);
        if idx.is_empty() {
            continue;
        }
        let mut v = vec![f.zero(); p.dim()];
        for &i in &idx {
            v[i] = f.int(rng.gen_range(-2..=2));
        }
        rows.push(v);
    }
    if rows.is_empty() {
        return p;
    }
    let (_, inc) = p.generated_submodule(&Matrix::from_rows(f, p.dim(), rows));
    p.quotient(inc.matrix()).0
}

/// A random element of `Hom(M, N)` with small integer coordinates.
pub fn random_hom<R: Rng>(m: &Module, n: &Module, rng: &mut R) -> ModHom {
    let space = HomSpace::new(m, n);
    let f = m.field();
    let mut x = Matrix::zeros(f, m.dim(), n.dim());
    for b in space.basis() {
        x.add_scaled(&f.int(rng.gen_range(-3..=3)), b);
    }
    ModHom::raw(m.clone(), n.clone(), x)
}
