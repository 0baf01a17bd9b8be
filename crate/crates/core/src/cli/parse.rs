//! The workspace file format.
//!
//! A workspace is a single text file of named declarations, one per line or as a block
//! closed by `end`. `#` starts a comment. Vertices are numbered from 1.
//!
//! ```text
//! field Q                          # or a prime, e.g. `field 7`; before any algebra
//! algebra A3
//!   vertices 3
//!   arrow a 1 2
//!   arrow b 2 3
//!   relation a*b                   # linear combinations: `a*b - 2*c*d`; `rad2` adds all
//! end
//! module S2 = simple A3 2          # also `projective`, `injective`
//! module N = sum S2 P1
//! module M over A3
//!   dims 1 1 0
//!   arrow a [[1]]                  # omitted arrows act by zero
//! end
//! tilting T = P1 P2 S2             # registers the algebra `End(T)`; or `= regular A3`
//! cotorsion D1 over A3
//!   b P1 P2
//!   a P1 P2 S2
//!   depth 4
//! end
//! cotorsion D2 = derived T D1
//! cotorsion D3 = classify T depth 4 among S1 S2 S3
//! complex X over A3
//!   component 0 P1
//!   component 1 S2
//!   delta 1 [[0, 0, 0]]            # δ_1 on the basis of X_1 ⊗ DR, omitted = 0
//! end
//! complex Y = stalk S2 0
//! complex E = proj A3 1 0
//! complex Z = random A3 seed 7 window -2 2 maxdim 3
//! ```

use std::collections::HashSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::CliError;
use crate::exactla::{parse_matrix, Field, Matrix};
use crate::homalg::{ext, Tensor};
use crate::qalg::{path_basis, Algebra, Arrow, PathRelation, Quiver, DEFAULT_CAP};
use crate::repcat::{proj_object, random_complex, RepeComplex, Repetitive};
use crate::rmod::Module;
use crate::wtilt::{derive_s_data, in_co_auslander, CotorsionData, TiltingModule};

/// Default depth of cotorsion data declared without `depth`.
pub const DEFAULT_DEPTH: usize = 4;

/// A fully validated workspace. Names are unique across all kinds and entries keep their
/// declaration order.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: Field,
    pub algebras: Vec<(String, Arc<Algebra>)>,
    pub modules: Vec<(String, Module)>,
    pub tiltings: Vec<(String, TiltingModule)>,
    pub cotorsion: Vec<(String, CotorsionData)>,
    pub complexes: Vec<(String, RepeComplex)>,
    /// `(name, tilting, source data)` of data declared with `derived`.
    derived: Vec<(String, String, String)>,
    names: HashSet<String>,
}

fn find<'a, T>(list: &'a [(String, T)], name: &str) -> Option<&'a T> {
    list.iter().find(|(n, _)| n == name).map(|(_, v)| v)
}

impl Workspace {
    /// The empty workspace over ℚ.
    pub fn empty() -> Workspace {
        Workspace {
            field: Field::Rational,
            algebras: Vec::new(),
            modules: Vec::new(),
            tiltings: Vec::new(),
            cotorsion: Vec::new(),
            complexes: Vec::new(),
            derived: Vec::new(),
            names: HashSet::new(),
        }
    }

    pub fn algebra(&self, name: &str) -> Option<&Arc<Algebra>> {
        find(&self.algebras, name)
    }

    pub fn module(&self, name: &str) -> Option<&Module> {
        find(&self.modules, name)
    }

    pub fn tilting(&self, name: &str) -> Option<&TiltingModule> {
        find(&self.tiltings, name)
    }

    pub fn data(&self, name: &str) -> Option<&CotorsionData> {
        find(&self.cotorsion, name)
    }

    pub fn complex(&self, name: &str) -> Option<&RepeComplex> {
        find(&self.complexes, name)
    }

    /// True for data declared with `derived`.
    pub fn is_derived(&self, name: &str) -> bool {
        self.derived.iter().any(|(n, _, _)| n == name)
    }

    /// The data declared as `derived T D`, if any.
    pub fn derived_for(&self, tilt: &str, data: &str) -> Option<&str> {
        self.derived.iter().find(|(_, t, d)| t == tilt && d == data).map(|(n, _, _)| n.as_str())
    }

    /// The declared name of an algebra, matched by structure.
    pub fn algebra_name(&self, alg: &Algebra) -> Option<&str> {
        self.algebras.iter().find(|(_, a)| **a == *alg).map(|(n, _)| n.as_str())
    }

    fn claim(&mut self, line: usize, name: &str) -> Result<(), CliError> {
        let valid = !name.is_empty() && !name.starts_with(|c: char| c.is_ascii_digit() || c == '-');
        if !valid {
            return Err(CliError::Syntax { line, msg: format!("invalid name `{name}`") });
        }
        if !self.names.insert(name.to_string()) {
            return Err(CliError::Invariant { line, msg: format!("duplicate name `{name}`") });
        }
        Ok(())
    }
}

/// Reads and parses a workspace file.
pub fn parse_workspace(path: &std::path::Path) -> Result<Workspace, CliError> {
    let src = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_str(&src)
}

struct Line<'a> {
    no: usize,
    words: Vec<&'a str>,
    /// The text from the first `[` on, if any.
    matrix: Option<&'a str>,
}

fn lines(src: &str) -> Vec<Line<'_>> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                return None;
            }
            let (head, matrix) = match text.find('[') {
                Some(p) => (&text[..p], Some(&text[p..])),
                None => (text, None),
            };
            Some(Line { no: i + 1, words: head.split_whitespace().collect(), matrix })
        })
        .collect()
}

fn syntax(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Syntax { line, msg: msg.into() }
}

fn reference(line: usize, kind: &str, name: &str) -> CliError {
    CliError::Reference { line, msg: format!("unknown {kind} `{name}`") }
}

fn invariant(line: usize, e: impl std::fmt::Display) -> CliError {
    CliError::Invariant { line, msg: e.to_string() }
}

fn num<T: std::str::FromStr>(line: usize, w: Option<&&str>, what: &str) -> Result<T, CliError> {
    let w = w.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    w.parse().map_err(|_| syntax(line, format!("bad {what} `{w}`")))
}

fn vertex(line: usize, w: Option<&&str>, n: usize) -> Result<usize, CliError> {
    let v: usize = num(line, w, "vertex")?;
    if v == 0 || v > n {
        return Err(invariant(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn expect_len(l: &Line, n: usize) -> Result<(), CliError> {
    if l.words.len() != n {
        return Err(syntax(l.no, format!("expected {n} words, got {}", l.words.len())));
    }
    Ok(())
}

/// Parses workspace text.
pub fn parse_str(src: &str) -> Result<Workspace, CliError> {
    let ls = lines(src);
    let mut ws = Workspace::empty();
    let mut k = 0;
    while k < ls.len() {
        let l = &ls[k];
        let block_end = |from: usize| -> Result<usize, CliError> {
            (from + 1..ls.len())
                .find(|&j| ls[j].words.first() == Some(&"end") && ls[j].matrix.is_none())
                .ok_or_else(|| syntax(ls[from].no, "block without `end`"))
        };
        match l.words.first().copied() {
            Some("field") => {
                expect_len(l, 2)?;
                if !ws.algebras.is_empty() {
                    return Err(syntax(l.no, "`field` must precede all algebras"));
                }
                ws.field = match l.words[1] {
                    "Q" => Field::Rational,
                    p => Field::with_characteristic(num(l.no, Some(&p), "characteristic")?).map_err(|e| invariant(l.no, e))?,
                };
            }
            Some("algebra") => {
                expect_len(l, 2)?;
                let end = block_end(k)?;
                let alg = parse_algebra(ws.field, &ls[k + 1..end])?;
                ws.claim(l.no, l.words[1])?;
                ws.algebras.push((l.words[1].to_string(), Arc::new(alg)));
                k = end;
            }
            Some("module") if l.words.get(2) == Some(&"over") => {
                expect_len(l, 4)?;
                let alg = ws.algebra(l.words[3]).ok_or_else(|| reference(l.no, "algebra", l.words[3]))?.clone();
                let end = block_end(k)?;
                let m = parse_representation(&alg, &ls[k + 1..end], l.no)?;
                ws.claim(l.no, l.words[1])?;
                ws.modules.push((l.words[1].to_string(), m));
                k = end;
            }
            Some("module") => {
                let m = parse_module_expr(&ws, l)?;
                ws.claim(l.no, l.words[1])?;
                ws.modules.push((l.words[1].to_string(), m));
            }
            Some("tilting") => {
                let t = parse_tilting(&ws, l)?;
                let name = l.words[1].to_string();
                ws.claim(l.no, &name)?;
                let s_name = format!("End({name})");
                ws.claim(l.no, &s_name)?;
                ws.algebras.push((s_name, t.s_algebra().clone()));
                ws.tiltings.push((name, t));
            }
            Some("cotorsion") if l.words.get(2) == Some(&"over") => {
                expect_len(l, 4)?;
                let alg = ws.algebra(l.words[3]).ok_or_else(|| reference(l.no, "algebra", l.words[3]))?.clone();
                let end = block_end(k)?;
                let d = parse_cotorsion_block(&ws, &alg, &ls[k + 1..end])?;
                ws.claim(l.no, l.words[1])?;
                ws.cotorsion.push((l.words[1].to_string(), d));
                k = end;
            }
            Some("cotorsion") => {
                let d = parse_cotorsion_expr(&ws, l)?;
                ws.claim(l.no, l.words[1])?;
                if l.words[3] == "derived" {
                    ws.derived.push((l.words[1].to_string(), l.words[4].to_string(), l.words[5].to_string()));
                }
                ws.cotorsion.push((l.words[1].to_string(), d));
            }
            Some("complex") if l.words.get(2) == Some(&"over") => {
                expect_len(l, 4)?;
                let alg = ws.algebra(l.words[3]).ok_or_else(|| reference(l.no, "algebra", l.words[3]))?.clone();
                let end = block_end(k)?;
                let x = parse_complex_block(&ws, &alg, &ls[k + 1..end], l.no)?;
                ws.claim(l.no, l.words[1])?;
                ws.complexes.push((l.words[1].to_string(), x));
                k = end;
            }
            Some("complex") => {
                let x = parse_complex_expr(&ws, l)?;
                ws.claim(l.no, l.words[1])?;
                ws.complexes.push((l.words[1].to_string(), x));
            }
            Some(w) => return Err(syntax(l.no, format!("unknown declaration `{w}`"))),
            None => return Err(syntax(l.no, "stray matrix literal")),
        }
        k += 1;
    }
    Ok(ws)
}

fn parse_algebra(field: Field, body: &[Line]) -> Result<Algebra, CliError> {
    let mut nverts = None;
    let mut arrows = Vec::new();
    let mut rel_lines: Vec<(usize, String)> = Vec::new();
    let mut rad2 = false;
    let mut cap = DEFAULT_CAP;
    let first = body.first().map_or(0, |l| l.no);
    for l in body {
        match l.words.first().copied() {
            Some("vertices") => {
                expect_len(l, 2)?;
                nverts = Some(num::<usize>(l.no, l.words.get(1), "vertex count")?);
            }
            Some("arrow") => {
                expect_len(l, 4)?;
                let n = nverts.ok_or_else(|| syntax(l.no, "`vertices` must precede arrows"))?;
                let (s, t) = (vertex(l.no, l.words.get(2), n)?, vertex(l.no, l.words.get(3), n)?);
                arrows.push(Arrow { name: l.words[1].to_string(), src: s, tgt: t });
            }
            Some("relation") => rel_lines.push((l.no, l.words[1..].join(" "))),
            Some("rad2") => rad2 = true,
            Some("cap") => cap = num(l.no, l.words.get(1), "cap")?,
            _ => return Err(syntax(l.no, "expected `vertices`, `arrow`, `relation`, `rad2` or `cap`")),
        }
    }
    let n = nverts.ok_or_else(|| syntax(first, "algebra without `vertices`"))?;
    let q = Quiver::new(n, arrows).map_err(|e| invariant(first, e))?;
    let mut rels = if rad2 { q.rad2_relations(field) } else { Vec::new() };
    for (no, text) in rel_lines {
        rels.push(parse_relation(&q, field, no, &text)?);
    }
    path_basis(&q, &rels, field, cap).map_err(|e| invariant(first, e))
}

/// `c1*p1 + c2*p2 - …` where each path is `*`-joined arrow names and a leading numeric
/// factor is the coefficient.
fn parse_relation(q: &Quiver, field: Field, line: usize, text: &str) -> Result<PathRelation, CliError> {
    let spaced = text.replace('+', " + ").replace('-', " - ");
    let mut terms = Vec::new();
    let mut sign = field.one();
    let mut expect_term = true;
    for tok in spaced.split_whitespace() {
        match tok {
            "+" | "-" => {
                if tok == "-" {
                    sign = sign.neg();
                }
                expect_term = true;
            }
            _ if expect_term => {
                let mut coeff = sign.clone();
                let mut path = Vec::new();
                for f in tok.split('*') {
                    match q.arrow_index(f) {
                        Some(a) => path.push(a),
                        None if path.is_empty() => {
                            let c = field.parse(f).map_err(|_| syntax(line, format!("unknown arrow `{f}`")))?;
                            coeff = coeff.mul(&c);
                        }
                        None => return Err(syntax(line, format!("unknown arrow `{f}`"))),
                    }
                }
                if path.is_empty() {
                    return Err(syntax(line, "relation term without a path"));
                }
                terms.push((coeff, path));
                sign = field.one();
                expect_term = false;
            }
            _ => return Err(syntax(line, format!("expected `+` or `-` before `{tok}`"))),
        }
    }
    if terms.is_empty() {
        return Err(syntax(line, "empty relation"));
    }
    Ok(PathRelation { terms })
}

fn parse_representation(alg: &Arc<Algebra>, body: &[Line], head: usize) -> Result<Module, CliError> {
    let field = alg.field();
    let mut dims: Option<Vec<usize>> = None;
    let mut mats: Vec<Option<Matrix>> = vec![None; alg.gens().len()];
    for l in body {
        match l.words.first().copied() {
            Some("dims") => {
                let d = l.words[1..].iter().map(|w| num(l.no, Some(w), "dimension")).collect::<Result<Vec<usize>, _>>()?;
                if d.len() != alg.nverts() {
                    return Err(invariant(l.no, format!("{} dimensions for {} vertices", d.len(), alg.nverts())));
                }
                dims = Some(d);
            }
            Some("arrow") => {
                expect_len(l, 2)?;
                let d = dims.as_ref().ok_or_else(|| syntax(l.no, "`dims` must precede arrows"))?;
                let gp = (0..alg.gens().len())
                    .find(|&gp| alg.label(alg.gens()[gp]) == l.words[1])
                    .ok_or_else(|| reference(l.no, "arrow", l.words[1]))?;
                let g = alg.gens()[gp];
                let text = l.matrix.ok_or_else(|| syntax(l.no, "missing matrix"))?;
                let m = parse_matrix(text, field, Some(d[alg.tgt(g)])).map_err(|e| syntax(l.no, e.to_string()))?;
                mats[gp] = Some(m);
            }
            _ => return Err(syntax(l.no, "expected `dims` or `arrow`")),
        }
    }
    let dims = dims.ok_or_else(|| syntax(head, "module without `dims`"))?;
    let mats: Vec<Matrix> = mats
        .into_iter()
        .enumerate()
        .map(|(gp, m)| {
            let g = alg.gens()[gp];
            m.unwrap_or_else(|| Matrix::zeros(field, dims[alg.src(g)], dims[alg.tgt(g)]))
        })
        .collect();
    Module::from_representation(alg.clone(), &dims, &mats).map_err(|e| invariant(head, e))
}

fn module_list(ws: &Workspace, line: usize, names: &[&str]) -> Result<Vec<Module>, CliError> {
    names.iter().map(|n| ws.module(n).cloned().ok_or_else(|| reference(line, "module", n))).collect()
}

fn parse_module_expr(ws: &Workspace, l: &Line) -> Result<Module, CliError> {
    if l.words.len() < 4 || l.words[2] != "=" {
        return Err(syntax(l.no, "expected `module NAME = KIND …` or `module NAME over ALG`"));
    }
    match l.words[3] {
        kind @ ("simple" | "projective" | "injective") => {
            expect_len(l, 6)?;
            let alg = ws.algebra(l.words[4]).ok_or_else(|| reference(l.no, "algebra", l.words[4]))?;
            let v = vertex(l.no, l.words.get(5), alg.nverts())?;
            Ok(match kind {
                "simple" => Module::simple(alg.clone(), v),
                "projective" => Module::projective(alg.clone(), v),
                _ => Module::injective(alg.clone(), v).over(alg),
            })
        }
        "sum" => {
            let parts = module_list(ws, l.no, &l.words[4..])?;
            let Some(first) = parts.first() else {
                return Err(syntax(l.no, "empty sum"));
            };
            let alg = first.algebra().clone();
            if parts.iter().any(|p| **p.algebra() != *alg) {
                return Err(invariant(l.no, "summands over different algebras"));
            }
            let refs: Vec<&Module> = parts.iter().collect();
            Ok(Module::direct_sum(&alg, &refs))
        }
        w => Err(syntax(l.no, format!("unknown module constructor `{w}`"))),
    }
}

fn parse_tilting(ws: &Workspace, l: &Line) -> Result<TiltingModule, CliError> {
    if l.words.len() < 4 || l.words[2] != "=" {
        return Err(syntax(l.no, "expected `tilting NAME = M1 M2 …` or `tilting NAME = regular ALG`"));
    }
    if l.words[3] == "regular" {
        expect_len(l, 5)?;
        let alg = ws.algebra(l.words[4]).ok_or_else(|| reference(l.no, "algebra", l.words[4]))?;
        return Ok(TiltingModule::regular(alg));
    }
    let parts = module_list(ws, l.no, &l.words[3..])?;
    let alg = parts[0].algebra().clone();
    if parts.iter().any(|p| **p.algebra() != *alg) {
        return Err(invariant(l.no, "summands over different algebras"));
    }
    TiltingModule::from_summands(&parts, &format!("End({})", l.words[1])).map_err(|e| invariant(l.no, e))
}

fn check_over(line: usize, alg: &Arc<Algebra>, ms: &[Module]) -> Result<Vec<Module>, CliError> {
    if ms.iter().any(|m| **m.algebra() != **alg) {
        return Err(invariant(line, "generator over a different algebra"));
    }
    Ok(ms.iter().map(|m| m.over(alg)).collect())
}

fn parse_cotorsion_block(ws: &Workspace, alg: &Arc<Algebra>, body: &[Line]) -> Result<CotorsionData, CliError> {
    let (mut b, mut a, mut depth, mut cap) = (Vec::new(), Vec::new(), DEFAULT_DEPTH, None);
    for l in body {
        match l.words.first().copied() {
            Some("b") => b.extend(check_over(l.no, alg, &module_list(ws, l.no, &l.words[1..])?)?),
            Some("a") => a.extend(check_over(l.no, alg, &module_list(ws, l.no, &l.words[1..])?)?),
            Some("depth") => depth = num(l.no, l.words.get(1), "depth")?,
            Some("cap") => cap = Some(num(l.no, l.words.get(1), "cap")?),
            _ => return Err(syntax(l.no, "expected `a`, `b`, `depth` or `cap`")),
        }
    }
    let d = CotorsionData::new(alg.clone(), b, a, depth);
    Ok(match cap {
        Some(c) => d.with_cap(c),
        None => d,
    })
}

fn parse_cotorsion_expr(ws: &Workspace, l: &Line) -> Result<CotorsionData, CliError> {
    if l.words.len() < 4 || l.words[2] != "=" {
        return Err(syntax(l.no, "expected `cotorsion NAME = derived|classify …` or a block"));
    }
    let tilt = |w: Option<&&str>| -> Result<&TiltingModule, CliError> {
        let n = w.ok_or_else(|| syntax(l.no, "missing tilting module"))?;
        ws.tilting(n).ok_or_else(|| reference(l.no, "tilting module", n))
    };
    match l.words[3] {
        "derived" => {
            expect_len(l, 6)?;
            let t = tilt(l.words.get(4))?;
            let d = ws.data(l.words[5]).ok_or_else(|| reference(l.no, "cotorsion data", l.words[5]))?;
            if *d.algebra != **t.r_algebra() {
                return Err(invariant(l.no, "cotorsion data and tilting module live over different algebras"));
            }
            Ok(derive_s_data(t, d))
        }
        "classify" => {
            if l.words.len() < 8 || l.words[5] != "depth" || l.words[7] != "among" {
                return Err(syntax(l.no, "expected `classify T depth N among M1 M2 …`"));
            }
            let t = tilt(l.words.get(4))?;
            let depth: usize = num(l.no, l.words.get(6), "depth")?;
            let alg = t.r_algebra().clone();
            let cands = check_over(l.no, &alg, &module_list(ws, l.no, &l.words[8..])?)?;
            let mut a = Vec::new();
            for m in &cands {
                if in_co_auslander(m, t, depth).map_err(|e| invariant(l.no, e))?.member {
                    a.push(m.clone());
                }
            }
            let b: Vec<Module> =
                cands.iter().filter(|m| a.iter().all(|x| (1..=depth).all(|i| ext(m, x, i) == 0))).cloned().collect();
            Ok(CotorsionData::new(alg, b, a, depth))
        }
        w => Err(syntax(l.no, format!("unknown cotorsion constructor `{w}`"))),
    }
}

fn parse_complex_block(ws: &Workspace, alg: &Arc<Algebra>, body: &[Line], head: usize) -> Result<RepeComplex, CliError> {
    let rep = Repetitive::of(alg);
    let mut comps: Vec<(i32, Module)> = Vec::new();
    let mut deltas: Vec<(i32, &str, usize)> = Vec::new();
    for l in body {
        match l.words.first().copied() {
            Some("component") => {
                expect_len(l, 3)?;
                let i: i32 = num(l.no, l.words.get(1), "degree")?;
                let m = ws.module(l.words[2]).ok_or_else(|| reference(l.no, "module", l.words[2]))?;
                if **m.algebra() != **alg {
                    return Err(invariant(l.no, "component over a different algebra"));
                }
                if comps.iter().any(|c| c.0 == i) {
                    return Err(invariant(l.no, format!("degree {i} given twice")));
                }
                comps.push((i, m.over(alg)));
            }
            Some("delta") => {
                expect_len(l, 2)?;
                let i: i32 = num(l.no, l.words.get(1), "degree")?;
                deltas.push((i, l.matrix.ok_or_else(|| syntax(l.no, "missing matrix"))?, l.no));
            }
            _ => return Err(syntax(l.no, "expected `component` or `delta`")),
        }
    }
    if comps.is_empty() {
        return Ok(RepeComplex::zero(&rep));
    }
    let lo = comps.iter().map(|c| c.0).min().unwrap_or(0);
    let hi = comps.iter().map(|c| c.0).max().unwrap_or(0);
    let at = |i: i32| comps.iter().find(|c| c.0 == i).map_or_else(|| Module::zero(alg.clone()), |c| c.1.clone());
    let modules: Vec<Module> = (lo..=hi).map(at).collect();
    let mut mats = Vec::new();
    for i in lo + 1..=hi {
        let (x, below) = (at(i), at(i - 1));
        let rows = Tensor::new(&x, rep.dual()).dim();
        let m = match deltas.iter().find(|d| d.0 == i) {
            Some(&(_, text, no)) => {
                let m = parse_matrix(text, alg.field(), Some(below.dim())).map_err(|e| syntax(no, e.to_string()))?;
                if m.rows() != rows || m.cols() != below.dim() {
                    return Err(invariant(no, format!("delta {i} must be {rows}x{}, got {}x{}", below.dim(), m.rows(), m.cols())));
                }
                m
            }
            None => Matrix::zeros(alg.field(), rows, below.dim()),
        };
        mats.push(m);
    }
    if let Some(d) = deltas.iter().find(|d| d.0 <= lo || d.0 > hi) {
        return Err(invariant(d.2, format!("delta {} outside the components", d.0)));
    }
    RepeComplex::new(&rep, lo, modules, mats).map_err(|e| invariant(head, e))
}

fn parse_complex_expr(ws: &Workspace, l: &Line) -> Result<RepeComplex, CliError> {
    if l.words.len() < 4 || l.words[2] != "=" {
        return Err(syntax(l.no, "expected `complex NAME = stalk|proj|random …` or a block"));
    }
    let alg_at = |i: usize| -> Result<&Arc<Algebra>, CliError> {
        let n = l.words.get(i).ok_or_else(|| syntax(l.no, "missing algebra"))?;
        ws.algebra(n).ok_or_else(|| reference(l.no, "algebra", n))
    };
    match l.words[3] {
        "stalk" => {
            expect_len(l, 6)?;
            let m = ws.module(l.words[4]).ok_or_else(|| reference(l.no, "module", l.words[4]))?;
            let k: i32 = num(l.no, l.words.get(5), "degree")?;
            let rep = Repetitive::of(m.algebra());
            RepeComplex::stalk(&rep, m, 0).try_shift(k).map_err(|e| invariant(l.no, e))
        }
        "proj" => {
            expect_len(l, 7)?;
            let alg = alg_at(4)?;
            let v = vertex(l.no, l.words.get(5), alg.nverts())?;
            let k: i32 = num(l.no, l.words.get(6), "degree")?;
            proj_object(&Repetitive::of(alg), v, k).map_err(|e| invariant(l.no, e))
        }
        "random" => {
            expect_len(l, 12)?;
            if l.words[5] != "seed" || l.words[7] != "window" || l.words[10] != "maxdim" {
                return Err(syntax(l.no, "expected `random ALG seed S window LO HI maxdim D`"));
            }
            let alg = alg_at(4)?;
            let seed: u64 = num(l.no, l.words.get(6), "seed")?;
            let lo: i32 = num(l.no, l.words.get(8), "window start")?;
            let hi: i32 = num(l.no, l.words.get(9), "window end")?;
            let max_dim: usize = num(l.no, l.words.get(11), "maxdim")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_complex(&Repetitive::of(alg), lo, hi, &mut rng, max_dim).map_err(|e| invariant(l.no, e))
        }
        w => Err(syntax(l.no, format!("unknown complex constructor `{w}`"))),
    }
}
