//! Krull–Schmidt decomposition by Fitting splitting, and isomorphism testing.
//!
//! The radical of `End(M)` is the kernel of the trace form `(x, y) ↦ tr(x·y)`, valid in
//! characteristic 0. A module is certified indecomposable when `End(M)/rad` is
//! one-dimensional; otherwise an endomorphism that is neither nilpotent nor invertible
//! splits `M = Im φⁿ ⊕ Ker φⁿ`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{HomSpace, ModHom, Module, ModuleError};
use crate::exactla::poly::{minimal_polynomial, rational_roots, square_free};
use crate::exactla::{Field, Matrix, Scalar};

/// An indecomposable summand with its split inclusion and projection.
///
/// `incl` is `dim N × dim M`, `proj` is `dim M × dim N`, and `incl·proj = id_N`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub incl: Matrix,
    pub proj: Matrix,
}

const RANDOM_TRIES: usize = 24;
const SEED: u64 = 0x5eed_dec0;

fn require_char0(m: &Module) -> Result<(), ModuleError> {
    match m.field() {
        Field::Rational => Ok(()),
        Field::Prime(_) => Err(ModuleError::UnsupportedCharacteristic),
    }
}

/// Rank of the trace form on `End(M)`, i.e. `dim End(M)/rad End(M)`.
fn semisimple_rank(basis: &[Matrix], field: Field) -> usize {
    let n = basis.len();
    let flats: Vec<Vec<Scalar>> = basis.iter().map(|b| b.entries().to_vec()).collect();
    let trans: Vec<Vec<Scalar>> = basis.iter().map(|b| b.transpose().entries().to_vec()).collect();
    let mut gram = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let mut acc = field.zero();
            for (a, b) in flats[i].iter().zip(&trans[j]) {
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            gram[(i, j)] = acc.clone();
            gram[(j, i)] = acc;
        }
    }
    gram.rank()
}

/// True when `End(M)` is local (and `M ≠ 0`).
pub fn is_indecomposable(m: &Module) -> Result<bool, ModuleError> {
    require_char0(m)?;
    if m.dim() == 0 {
        return Ok(false);
    }
    let end = HomSpace::new(m, m);
    Ok(semisimple_rank(end.basis(), m.field()) == 1)
}

/// Splits along `φ` when its Fitting decomposition is proper.
///
/// The stable image and stable kernel are computed by reduced subspace iteration, which
/// keeps entries small where powers of `φ` would not.
fn fitting_split(m: &Module, phi: &Matrix) -> Option<[(Module, Matrix); 2]> {
    let n = m.dim();
    let mut im = phi.row_space();
    if im.rows() == 0 || im.rows() == n {
        return None;
    }
    loop {
        let next = im.mul(phi).row_space();
        if next.rows() == im.rows() {
            break;
        }
        im = next;
    }
    if im.rows() == 0 {
        return None;
    }
    let mut ker = phi.left_kernel();
    while ker.rows() + im.rows() < n {
        let perp = ker.right_kernel().transpose();
        ker = phi.mul(&perp).left_kernel();
    }
    let im_rows = m.split_by_vertex(&im);
    let ker_rows = m.split_by_vertex(&ker);
    let (a, _) = m.submodule(&im_rows).ok()?;
    let (b, _) = m.submodule(&ker_rows).ok()?;
    Some([(a, im_rows), (b, ker_rows)])
}

/// Endomorphisms tried in order: basis elements, their shifts by rational eigenvalues,
/// pairwise sums and products, then seeded random combinations with shifts.
fn find_split(m: &Module, basis: &[Matrix]) -> Option<[(Module, Matrix); 2]> {
    let f = m.field();
    let n = m.dim();
    let id = Matrix::identity(f, n);
    let with_shifts = |x: &Matrix| -> Option<[(Module, Matrix); 2]> {
        if let Some(s) = fitting_split(m, x) {
            return Some(s);
        }
        let mp = minimal_polynomial(x);
        for lam in rational_roots(&square_free(&mp)) {
            let y = x.sub(&id.scale(&Scalar::Q(lam)));
            if let Some(s) = fitting_split(m, &y) {
                return Some(s);
            }
        }
        None
    };
    for b in basis {
        if let Some(s) = fitting_split(m, b) {
            return Some(s);
        }
    }
    for b in basis {
        if let Some(s) = with_shifts(b) {
            return Some(s);
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = with_shifts(&basis[i].add(&basis[j])) {
                return Some(s);
            }
            if let Some(s) = with_shifts(&basis[i].mul(&basis[j])) {
                return Some(s);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIES {
        let mut x = Matrix::zeros(f, n, n);
        for b in basis {
            x.add_scaled(&f.int(rng.gen_range(-3..=3)), b);
        }
        if let Some(s) = with_shifts(&x) {
            return Some(s);
        }
    }
    None
}

fn split_rec(m: &Module, incl: Matrix, proj: Matrix, out: &mut Vec<Summand>) -> Result<(), ModuleError> {
    if m.dim() == 0 {
        return Ok(());
    }
    let end = HomSpace::new(m, m);
    let rank = semisimple_rank(end.basis(), m.field());
    if rank == 1 {
        out.push(Summand { module: m.clone(), incl, proj });
        return Ok(());
    }
    let [(a, a_rows), (b, b_rows)] = find_split(m, end.basis()).ok_or_else(|| {
        ModuleError::Unsplit(format!("dim {} with End/rad of dimension {rank}", m.dim()))
    })?;
    let c = Matrix::vstack(&[&a_rows, &b_rows]);
    let cinv = c.inverse().expect("Fitting summands are complementary");
    let pa = cinv.col_range(0, a.dim());
    let pb = cinv.col_range(a.dim(), m.dim());
    split_rec(&a, a_rows.mul(&incl), proj.mul(&pa), out)?;
    split_rec(&b, b_rows.mul(&incl), proj.mul(&pb), out)
}

/// Indecomposable summands of `M` with split inclusions and projections into `M`.
pub fn decompose(m: &Module) -> Result<Vec<Summand>, ModuleError> {
    require_char0(m)?;
    let id = Matrix::identity(m.field(), m.dim());
    let mut out = Vec::new();
    split_rec(m, id.clone(), id, &mut out)?;
    Ok(out)
}

/// An isomorphism between indecomposables, found among basis homs `f` with `f·g`
/// invertible for some basis hom `g` back.
fn indecomposable_iso(x: &Module, y: &Module) -> Option<Matrix> {
    if x.dim_vector() != y.dim_vector() {
        return None;
    }
    let fs = HomSpace::new(x, y);
    let gs = HomSpace::new(y, x);
    for f in fs.basis() {
        for g in gs.basis() {
            if f.mul(g).is_invertible() {
                return Some(f.clone());
            }
        }
    }
    None
}

/// Indecomposable summands grouped into isomorphism classes with multiplicities.
pub fn decompose_grouped(m: &Module) -> Result<Vec<(Module, usize)>, ModuleError> {
    let mut groups: Vec<(Module, usize)> = Vec::new();
    for s in decompose(m)? {
        match groups.iter_mut().find(|(rep, _)| indecomposable_iso(rep, &s.module).is_some()) {
            Some(g) => g.1 += 1,
            None => groups.push((s.module, 1)),
        }
    }
    Ok(groups)
}

/// Decides `M ≅ N`, returning an isomorphism when one exists.
///
/// Seeded random elements of `Hom(M, N)` are tried first; a negative answer is certified
/// by matching indecomposable summands.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<Option<ModHom>, ModuleError> {
    if *m.algebra() != *n.algebra() {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.dim_vector() != n.dim_vector() {
        return Ok(None);
    }
    let f = m.field();
    let space = HomSpace::new(m, n);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for attempt in 0..4 {
        let mut x = Matrix::zeros(f, m.dim(), n.dim());
        for b in space.basis() {
            let c = if attempt == 0 { 1 } else { rng.gen_range(-20..=20) };
            x.add_scaled(&f.int(c), b);
        }
        if x.is_invertible() || m.dim() == 0 {
            return Ok(Some(ModHom::raw(m.clone(), n.clone(), x)));
        }
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.len()];
    let mut witness = Matrix::zeros(f, m.dim(), n.dim());
    for s in &dm {
        let hit = (0..dn.len()).find_map(|j| {
            if used[j] {
                return None;
            }
            indecomposable_iso(&s.module, &dn[j].module).map(|a| (j, a))
        });
        match hit {
            Some((j, a)) => {
                used[j] = true;
                witness = witness.add(&s.proj.mul(&a).mul(&dn[j].incl));
            }
            None => return Ok(None),
        }
    }
    Ok(Some(ModHom::raw(m.clone(), n.clone(), witness)))
}
