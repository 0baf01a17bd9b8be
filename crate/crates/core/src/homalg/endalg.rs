//! Endomorphism algebras of basic modules as [`Algebra`] values.

use std::sync::Arc;

use super::{Bimodule, HomalgError};
use crate::exactla::{Coordinates, Field, Matrix, Scalar};
use crate::qalg::{to_sparse, Algebra, AlgebraData, SparseVec, Term};
use crate::rmod::{is_indecomposable, is_isomorphic, HomSpace, Module};

/// `S = End_A(T)` for `T = T_1 ⊕ … ⊕ T_n` with pairwise non-isomorphic indecomposable
/// summands, together with `T` as an `S`-`A`-bimodule.
///
/// Vertex `i` of `S` is the summand `T_i` and `e_i·S·e_j = Hom_A(T_j, T_i)`. An element
/// `s` acts on `T` by its matrix `F_s` (`s·t = t·F_s`), so `s·s'` has matrix `F_{s'}·F_s`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Arc<Algebra>,
    pub bimodule: Bimodule,
    /// `F_s` for every basis element of `S`.
    pub matrices: Vec<Matrix>,
    /// Basis offsets of the summands inside `T`.
    pub offsets: Vec<usize>,
}

fn embed(field: Field, n: usize, rows_at: usize, cols_at: usize, small: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set_block(rows_at, cols_at, small);
    m
}

fn block_of(m: &Matrix, offs: &[usize], dims: &[usize], j: usize, i: usize) -> Vec<Scalar> {
    let rows: Vec<usize> = (offs[j]..offs[j] + dims[j]).collect();
    let cols: Vec<usize> = (offs[i]..offs[i] + dims[i]).collect();
    m.submatrix(&rows, &cols).entries().to_vec()
}

fn independent_of(span: &[Vec<Scalar>], v: &[Scalar], field: Field, len: usize) -> bool {
    let mut rows = span.to_vec();
    let before = Matrix::from_rows(field, len, rows.clone()).rank();
    rows.push(v.to_vec());
    Matrix::from_rows(field, len, rows).rank() > before
}

/// Builds `End_A(T)` from the summands of `T`, in order.
pub fn end_algebra(summands: &[Module], name: &str) -> Result<EndAlgebra, HomalgError> {
    let Some(first) = summands.first() else {
        return Err(HomalgError::NotBasic("no summands".into()));
    };
    let alg = first.algebra().clone();
    let field = alg.field();
    for (i, t) in summands.iter().enumerate() {
        if !is_indecomposable(t)? {
            return Err(HomalgError::NotBasic(format!("summand {} is not indecomposable", i + 1)));
        }
        for (j, u) in summands[..i].iter().enumerate() {
            if is_isomorphic(t, u)?.is_some() {
                return Err(HomalgError::NotBasic(format!("summands {} and {} are isomorphic", j + 1, i + 1)));
            }
        }
    }
    let n = summands.len();
    let dims: Vec<usize> = summands.iter().map(Module::dim).collect();
    let mut offs = vec![0; n + 1];
    for i in 0..n {
        offs[i + 1] = offs[i] + dims[i];
    }
    let total = offs[n];
    let t = Module::direct_sum(&alg, &summands.iter().collect::<Vec<_>>());

    // Radical bases per Peirce block (i, j): maps T_j → T_i.
    let mut rad: Vec<Vec<Vec<Matrix>>> = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let space = HomSpace::new(&summands[j], &summands[i]);
            let full: Vec<Matrix> = space.basis().iter().map(|b| embed(field, total, offs[j], offs[i], b)).collect();
            if i != j {
                rad[i][j] = full;
                continue;
            }
            let tr = |m: &Matrix| (0..total).fold(field.zero(), |acc, k| acc.add(&m[(k, k)]));
            let traces: Vec<Scalar> = full.iter().map(tr).collect();
            let k0 = traces.iter().position(|x| !x.is_zero()).expect("identity lies in End");
            for (k, m) in full.iter().enumerate() {
                if k != k0 {
                    let c = traces[k].div(&traces[k0]);
                    let mut r = m.clone();
                    r.add_scaled(&c.neg(), &full[k0]);
                    rad[i][j].push(r);
                }
            }
        }
    }

    // Generators: radical elements independent modulo rad² within each block.
    let flat = |m: &Matrix, i: usize, j: usize| block_of(m, &offs, &dims, j, i);
    let mut gens: Vec<(usize, usize, Matrix)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let len = dims[j] * dims[i];
            let mut span: Vec<Vec<Scalar>> = Vec::new();
            for k in 0..n {
                for a in &rad[i][k] {
                    for b in &rad[k][j] {
                        // Element a ∈ e_i S e_k times b ∈ e_k S e_j has matrix F_b·F_a.
                        span.push(flat(&b.mul(a), i, j));
                    }
                }
            }
            for r in &rad[i][j] {
                let v = flat(r, i, j);
                if independent_of(&span, &v, field, len) {
                    span.push(v);
                    gens.push((i, j, r.clone()));
                }
            }
        }
    }

    // Monomial basis of the radical, built by length.
    struct Mono {
        src: usize,
        tgt: usize,
        word: Vec<usize>,
        mat: Matrix,
    }
    let mut accepted: Vec<Vec<Vec<Vec<Scalar>>>> = vec![vec![Vec::new(); n]; n];
    let mut monos: Vec<Mono> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    for (gi, (i, j, m)) in gens.iter().enumerate() {
        accepted[*i][*j].push(flat(m, *i, *j));
        frontier.push(monos.len());
        monos.push(Mono { src: *i, tgt: *j, word: vec![gi], mat: m.clone() });
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &w in &frontier {
            for (gi, (i, j, g)) in gens.iter().enumerate() {
                if monos[w].tgt != *i {
                    continue;
                }
                let (s, t) = (monos[w].src, *j);
                let mat = g.mul(&monos[w].mat);
                let v = flat(&mat, s, t);
                let len = dims[t] * dims[s];
                if independent_of(&accepted[s][t], &v, field, len) {
                    accepted[s][t].push(v);
                    let mut word = monos[w].word.clone();
                    word.push(gi);
                    next.push(monos.len());
                    monos.push(Mono { src: s, tgt: t, word, mat });
                }
            }
        }
        frontier = next;
    }
    for i in 0..n {
        for j in 0..n {
            if accepted[i][j].len() != rad[i][j].len() {
                return Err(HomalgError::NotBasic(format!(
                    "radical block ({}, {}) is not generated by the chosen generators",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    // Basis: idempotents, then monomials.
    let dim = n + monos.len();
    let mut labels: Vec<String> = (0..n).map(|i| format!("e{}", i + 1)).collect();
    let mut src: Vec<usize> = (0..n).collect();
    let mut tgt: Vec<usize> = (0..n).collect();
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut mats: Vec<Matrix> = (0..n)
        .map(|i| embed(field, total, offs[i], offs[i], &Matrix::identity(field, dims[i])))
        .collect();
    for m in &monos {
        labels.push(m.word.iter().map(|g| format!("s{}", g + 1)).collect::<Vec<_>>().join("*"));
        src.push(m.src);
        tgt.push(m.tgt);
        words.push(m.word.clone());
        mats.push(m.mat.clone());
    }
    let gen_idx: Vec<usize> = (0..gens.len()).map(|g| n + g).collect();

    // Coordinates per Peirce block.
    let mut block_basis: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    for b in 0..dim {
        block_basis[src[b]][tgt[b]].push(b);
    }
    let coords: Vec<Vec<Option<Coordinates>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let list = &block_basis[i][j];
                    if list.is_empty() {
                        return None;
                    }
                    let rows = list.iter().map(|&b| flat(&mats[b], i, j)).collect();
                    Some(Coordinates::new(&Matrix::from_rows(field, dims[j] * dims[i], rows)).expect("basis"))
                })
                .collect()
        })
        .collect();
    let express = |m: &Matrix, i: usize, j: usize| -> SparseVec {
        let v = flat(m, i, j);
        if v.iter().all(Scalar::is_zero) {
            return Vec::new();
        }
        let c = coords[i][j].as_ref().expect("nonzero product in an empty block").coords(&v).expect("closed under products");
        to_sparse(c).into_iter().map(|(k, x)| (block_basis[i][j][k], x)).collect()
    };
    let mut mult: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            if tgt[a] == src[b] {
                mult[a][b] = express(&mats[b].mul(&mats[a]), src[a], tgt[b]);
            }
        }
    }
    let mut presentation = Vec::new();
    for a in n..dim {
        for (gp, &g) in gen_idx.iter().enumerate() {
            if tgt[a] != src[g] {
                continue;
            }
            let mut w = words[a].clone();
            w.push(gp);
            let prod = &mult[a][g];
            if prod.len() == 1 && prod[0].1.is_one() && words[prod[0].0] == w {
                continue;
            }
            let mut rel = vec![Term { coef: field.one(), start: src[a], word: w }];
            for (b, c) in prod {
                rel.push(Term { coef: c.neg(), start: src[*b], word: words[*b].clone() });
            }
            presentation.push(rel);
        }
    }
    let algebra = Arc::new(
        Algebra::new(AlgebraData {
            name: name.to_string(),
            field,
            nverts: n,
            labels,
            src,
            tgt,
            idem: (0..n).collect(),
            gens: gen_idx.clone(),
            words,
            presentation,
            mult,
        })
        .map_err(|e| HomalgError::NotBasic(format!("endomorphism algebra: {e}")))?,
    );
    let lvert = (0..n).flat_map(|i| std::iter::repeat(i).take(dims[i])).collect();
    let lacts = gen_idx.iter().map(|&g| mats[g].clone()).collect();
    let bimodule = Bimodule::new(algebra.clone(), t, lvert, lacts)?;
    Ok(EndAlgebra { algebra, bimodule, matrices: mats, offsets: offs })
}
