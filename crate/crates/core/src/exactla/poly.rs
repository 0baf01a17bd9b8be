//! Univariate rational polynomials: minimal polynomials and rational roots.
//!
//! Coefficient vectors are stored lowest degree first.

use super::matrix::Matrix;
use super::scalar::{Field, Rat, Scalar};

fn trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
}

/// Evaluates `p` at `x` exactly.
pub fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::int(0);
    for c in p.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

fn derivative(p: &[Rat]) -> Vec<Rat> {
    let mut d: Vec<Rat> = p.iter().enumerate().skip(1).map(|(i, c)| c.mul(&Rat::int(i as i64))).collect();
    trim(&mut d);
    d
}

/// Quotient and remainder of polynomial division; `b` must be nonzero.
pub fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let lead_inv = b.last().unwrap().inv().unwrap();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rat::int(0); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().mul(&lead_inv);
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].add(&c.mul(bc).neg());
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        let li = l.inv().unwrap();
        for c in &mut x {
            *c = c.mul(&li);
        }
    }
    x
}

/// Square-free part `p / gcd(p, p')`.
pub fn square_free(p: &[Rat]) -> Vec<Rat> {
    let d = derivative(p);
    if d.is_empty() {
        return p.to_vec();
    }
    let g = gcd(p, &d);
    divrem(p, &g).0
}

/// Monic minimal polynomial of a square rational matrix.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Rat> {
    assert!(m.is_square() && m.field() == Field::Rational);
    let n = m.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(Field::Rational, n).entries().to_vec()];
    let mut cur = Matrix::identity(Field::Rational, n);
    loop {
        cur = cur.mul(m);
        powers.push(cur.entries().to_vec());
        let stack = Matrix::from_rows(Field::Rational, n * n, powers.clone());
        let k = stack.left_kernel();
        if k.rows() > 0 {
            let row = k.row(0);
            let lead = row[row.len() - 1].clone();
            return row
                .iter()
                .map(|c| c.div(&lead).as_rat().cloned().expect("rational"))
                .collect();
        }
    }
}

fn rationalize(x: f64, max_den: i64) -> Option<Rat> {
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a as f64;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(Rat::frac(h1, k1))
}

/// Rational roots of `p`, located numerically and then verified exactly.
pub fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let mut p = p.to_vec();
    trim(&mut p);
    let mut found: Vec<Rat> = Vec::new();
    if p.len() <= 1 {
        return found;
    }
    let push = |r: Rat, found: &mut Vec<Rat>| {
        if !found.contains(&r) && eval(&p, &r).is_zero() {
            found.push(r);
        }
    };
    for r in [Rat::int(0), Rat::int(1), Rat::int(-1), Rat::int(2), Rat::int(-2), Rat::frac(1, 2)] {
        push(r, &mut found);
    }
    let deg = p.len() - 1;
    let lead = p[deg].to_f64();
    let coeffs: Vec<f64> = p.iter().map(|c| c.to_f64() / lead).collect();
    if coeffs.iter().all(|c| c.is_finite()) {
        for z in durand_kerner(&coeffs) {
            if z.1.abs() < 1e-6 * (1.0 + z.0.abs()) {
                if let Some(r) = rationalize(z.0, 1_000_000) {
                    push(r, &mut found);
                }
            }
        }
    }
    found
}

fn durand_kerner(monic: &[f64]) -> Vec<(f64, f64)> {
    let n = monic.len() - 1;
    let cmul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let cdiv = |a: (f64, f64), b: (f64, f64)| {
        let d = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    };
    let eval = |z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for c in monic.iter().rev() {
            acc = cmul(acc, z);
            acc.0 += c;
        }
        acc
    };
    let bound = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut roots: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (bound * 0.5 * t.cos(), bound * 0.5 * t.sin())
        })
        .collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den = cmul(den, (roots[i].0 - roots[j].0, roots[i].1 - roots[j].1));
                }
            }
            if den.0 == 0.0 && den.1 == 0.0 {
                den = (1e-12, 0.0);
            }
            let step = cdiv(eval(roots[i]), den);
            roots[i] = (roots[i].0 - step.0, roots[i].1 - step.1);
            delta = delta.max(step.0.abs() + step.1.abs());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}
