//! Quivers with homogeneous relations and their path algebras.

use std::collections::HashMap;

use super::{Algebra, AlgebraData, AlgebraError, SparseVec, Term};
use crate::exactla::{Field, Matrix, Scalar};

/// Default bound on surviving path length.
pub const DEFAULT_CAP: usize = 64;

/// A named arrow between 0-based vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub nverts: usize,
    pub arrows: Vec<Arrow>,
}

/// A linear combination of parallel paths, each a list of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRelation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Quiver {
    /// Builds a quiver, checking vertex ranges and unique arrow names.
    pub fn new(nverts: usize, arrows: Vec<Arrow>) -> Result<Quiver, AlgebraError> {
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= nverts {
                return Err(AlgebraError::BadVertex(a.src));
            }
            if a.tgt >= nverts {
                return Err(AlgebraError::BadVertex(a.tgt));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(AlgebraError::DuplicateArrow(a.name.clone()));
            }
        }
        Ok(Quiver { nverts, arrows })
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Every composable pair `a·b` as a monomial relation.
    pub fn rad2_relations(&self, field: Field) -> Vec<PathRelation> {
        let mut rels = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            for (j, b) in self.arrows.iter().enumerate() {
                if a.tgt == b.src {
                    rels.push(PathRelation { terms: vec![(field.one(), vec![i, j])] });
                }
            }
        }
        rels
    }

    fn path_label(&self, p: &[usize]) -> String {
        p.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    fn path_src(&self, p: &[usize]) -> usize {
        self.arrows[p[0]].src
    }

    fn path_tgt(&self, p: &[usize]) -> usize {
        self.arrows[*p.last().unwrap()].tgt
    }

    /// Paths of length `len` in lexicographic order of arrow indices.
    fn paths_of_length(&self, prev: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for p in prev {
            let end = self.path_tgt(p);
            for (a, arr) in self.arrows.iter().enumerate() {
                if arr.src == end {
                    let mut q = p.clone();
                    q.push(a);
                    out.push(q);
                }
            }
        }
        out
    }
}

fn check_relations(q: &Quiver, rels: &[PathRelation]) -> Result<(), AlgebraError> {
    for (i, r) in rels.iter().enumerate() {
        let Some((_, first)) = r.terms.first() else {
            return Err(AlgebraError::NotAdmissible(i, "empty relation".into()));
        };
        for (_, p) in &r.terms {
            if p.len() < 2 {
                return Err(AlgebraError::NotAdmissible(i, format!("path `{}` has length < 2", q.path_label(p))));
            }
            if p.iter().any(|&a| a >= q.arrows.len()) {
                return Err(AlgebraError::NotAdmissible(i, "unknown arrow".into()));
            }
            if p.windows(2).any(|w| q.arrows[w[0]].tgt != q.arrows[w[1]].src) {
                return Err(AlgebraError::NotAdmissible(i, format!("`{}` is not a path", q.path_label(p))));
            }
            if q.path_src(p) != q.path_src(first) || q.path_tgt(p) != q.path_tgt(first) {
                return Err(AlgebraError::NotAdmissible(i, "paths are not parallel".into()));
            }
            if p.len() != first.len() {
                return Err(AlgebraError::NotHomogeneous(i));
            }
        }
    }
    Ok(())
}

/// Checks that relations lie in the square of the arrow ideal and that the arrow
/// ideal is nilpotent modulo them (within `cap`).
pub fn validate_admissible(q: &Quiver, rels: &[PathRelation], cap: usize) -> Result<(), AlgebraError> {
    path_basis(q, rels, Field::Rational, cap).map(|_| ())
}

/// The bounded path algebra `kQ/I` with its canonical basis.
///
/// Basis order: idempotents by vertex, then normal paths by length and lexicographic
/// arrow order. Within each length the surviving paths are the lexicographically
/// smallest ones spanning the quotient.
pub fn path_basis(q: &Quiver, rels: &[PathRelation], field: Field, cap: usize) -> Result<Algebra, AlgebraError> {
    check_relations(q, rels)?;
    let nv = q.nverts;
    let mut labels: Vec<String> = (0..nv).map(|v| format!("e{}", v + 1)).collect();
    let mut src: Vec<usize> = (0..nv).collect();
    let mut tgt: Vec<usize> = (0..nv).collect();
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); nv];
    // Reduction of every path of each length onto basis indices.
    let mut reduce: HashMap<Vec<usize>, SparseVec> = HashMap::new();
    let mut all_paths: Vec<Vec<usize>> = Vec::new();
    let mut by_len: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    let mut len = 0usize;
    loop {
        len += 1;
        let paths: Vec<Vec<usize>> = if len == 1 {
            (0..q.arrows.len()).map(|a| vec![a]).collect()
        } else {
            q.paths_of_length(&by_len[len - 1])
        };
        if paths.is_empty() {
            break;
        }
        if paths.len() > 200_000 {
            return Err(AlgebraError::NotFiniteWithinCap { cap, witness: q.path_label(&paths[0]) });
        }
        let index: HashMap<&Vec<usize>, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let np = paths.len();
        // Rows spanning I ∩ kQ_len, columns reversed so that large paths become pivots.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for r in rels {
            let l = r.terms[0].1.len();
            if l > len {
                continue;
            }
            let rs = q.path_src(&r.terms[0].1);
            let rt = q.path_tgt(&r.terms[0].1);
            for a in 0..=(len - l) {
                let b = len - l - a;
                let lefts: Vec<&Vec<usize>> = by_len[a].iter().filter(|p| a == 0 || q.path_tgt(p) == rs).collect();
                let rights: Vec<&Vec<usize>> = by_len[b].iter().filter(|p| b == 0 || q.path_src(p) == rt).collect();
                for lp in &lefts {
                    for rp in &rights {
                        let mut row = vec![field.zero(); np];
                        for (c, p) in &r.terms {
                            let mut full = (*lp).clone();
                            full.extend(p);
                            full.extend(rp.iter());
                            let i = index[&full];
                            row[np - 1 - i] = row[np - 1 - i].add(c);
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let rel = Matrix::from_rows(field, np, rows);
        let (qmap, _, free_rev) = Matrix::cokernel_map(&rel);
        let mut free: Vec<usize> = free_rev.iter().map(|&c| np - 1 - c).collect();
        free.sort_unstable();
        if free.is_empty() {
            break;
        }
        if len > cap {
            return Err(AlgebraError::NotFiniteWithinCap { cap, witness: q.path_label(&paths[free[0]]) });
        }
        let base = labels.len();
        let pos_of_free: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, base + k)).collect();
        for &c in &free {
            let p = &paths[c];
            labels.push(q.path_label(p));
            src.push(q.path_src(p));
            tgt.push(q.path_tgt(p));
            words.push(p.clone());
        }
        // Column j of qmap corresponds to the j-th free column in reversed order.
        for (i, p) in paths.iter().enumerate() {
            let r = np - 1 - i;
            let mut v: SparseVec = Vec::new();
            for (j, &fc) in free_rev.iter().enumerate() {
                let x = &qmap[(r, j)];
                if !x.is_zero() {
                    v.push((pos_of_free[&(np - 1 - fc)], x.clone()));
                }
            }
            v.sort_by_key(|t| t.0);
            reduce.insert(p.clone(), v);
        }
        all_paths.extend(paths.iter().cloned());
        by_len.push(paths);
    }
    let n = labels.len();
    let one = field.one();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for v in 0..nv {
        mult[v][v] = vec![(v, one.clone())];
    }
    for b in nv..n {
        mult[src[b]][b] = vec![(b, one.clone())];
        mult[b][tgt[b]] = vec![(b, one.clone())];
    }
    for i in nv..n {
        for j in nv..n {
            if tgt[i] != src[j] {
                continue;
            }
            let mut p = words[i].clone();
            p.extend(&words[j]);
            if let Some(v) = reduce.get(&p) {
                mult[i][j] = v.clone();
            }
        }
    }
    let gens: Vec<usize> = (nv..nv + q.arrows.len()).collect();
    let presentation = rels
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(c, p)| Term { coef: c.clone(), start: q.path_src(p), word: p.clone() })
                .collect()
        })
        .collect();
    Algebra::new(AlgebraData {
        name: "R".into(),
        field,
        nverts: nv,
        labels,
        src,
        tgt,
        idem: (0..nv).collect(),
        gens,
        words,
        presentation,
        mult,
    })
}
