use proptest::prelude::*;
use repequiv::exactla::{parse_matrix, poly, Field, Matrix, Rat, Scalar};

const Q: Field = Field::Rational;

fn m(rows: &[&[i64]]) -> Matrix {
    Matrix::from_ints(Q, rows)
}

#[test]
fn rref_of_identity_has_all_pivots() {
    let (r, piv) = Matrix::identity(Q, 2).rref();
    assert!(r.is_identity());
    assert_eq!(piv, vec![0, 1]);
}

#[test]
fn dependent_rows_have_rank_one() {
    let (_, piv) = m(&[&[1, 2], &[2, 4]]).rref();
    assert_eq!(piv, vec![0]);
}

#[test]
fn rank_mod_two() {
    let f2 = Field::with_characteristic(2).unwrap();
    assert_eq!(Matrix::from_ints(f2, &[&[1, 1], &[1, 0]]).rank(), 2);
}

#[test]
fn solve_identity_and_zero() {
    let b = m(&[&[3], &[-5]]);
    let s = Matrix::solve(&Matrix::identity(Q, 2), &b).unwrap();
    assert_eq!(s.particular, b);
    assert_eq!(s.kernel.cols(), 0);
    let s = Matrix::solve(&Matrix::zeros(Q, 2, 2), &Matrix::zeros(Q, 2, 1)).unwrap();
    assert_eq!(s.kernel.cols(), 2);
}

#[test]
fn solve_underdetermined() {
    let s = Matrix::solve(&m(&[&[1, 1]]), &m(&[&[2]])).unwrap();
    assert_eq!(s.particular, m(&[&[2], &[0]]));
    assert_eq!(s.kernel.cols(), 1);
}

#[test]
fn solve_inconsistent() {
    assert!(Matrix::solve(&m(&[&[1, 1], &[1, 1]]), &m(&[&[1], &[2]])).is_err());
}

#[test]
fn kronecker_examples() {
    assert_eq!(m(&[&[0, 1], &[0, 0]]).kronecker(&m(&[&[2]])), m(&[&[0, 2], &[0, 0]]));
    assert!(Matrix::identity(Q, 2).kronecker(&Matrix::identity(Q, 3)).is_identity());
    let x = m(&[&[1, 2], &[3, 4]]);
    assert_eq!(m(&[&[5]]).kronecker(&x), x.scale(&Q.int(5)));
}

#[test]
fn pushout_examples() {
    let (d, ia, ib) = Matrix::pushout(&m(&[&[1, 0]]), &m(&[&[1]]));
    assert_eq!(d, 2);
    assert_eq!(m(&[&[1, 0]]).mul(&ia), m(&[&[1]]).mul(&ib));
    let id = Matrix::identity(Q, 2);
    assert_eq!(Matrix::pushout(&id, &id).0, 2);
    assert_eq!(Matrix::pushout(&Matrix::zeros(Q, 1, 2), &Matrix::zeros(Q, 1, 3)).0, 5);
}

#[test]
fn pullback_examples() {
    let one = m(&[&[1]]);
    let (d, pa, pb) = Matrix::pullback(&one, &one);
    assert_eq!(d, 1);
    assert_eq!(pa, pb);
    assert_eq!(Matrix::pullback(&m(&[&[1, 2], &[0, 1]]), &Matrix::identity(Q, 2)).0, 2);
    assert_eq!(Matrix::pullback(&Matrix::zeros(Q, 2, 1), &Matrix::zeros(Q, 3, 1)).0, 5);
}

#[test]
fn matrix_literals() {
    let x = parse_matrix("[[1/2, -3],[0, 4]]", Q, None).unwrap();
    assert_eq!(x[(0, 0)], Scalar::Q(Rat::frac(1, 2)));
    let f5 = Field::with_characteristic(5).unwrap();
    let y = parse_matrix("[[1/2]] % 5", f5, None).unwrap();
    assert_eq!(y[(0, 0)], f5.int(3));
    assert!(parse_matrix("[[1]] % 7", f5, None).is_err());
    assert!(parse_matrix("[[1],[2,3]]", Q, None).is_err());
    assert_eq!(parse_matrix("[]", Q, Some(3)).unwrap().cols(), 3);
}

#[test]
fn big_rationals_stay_exact() {
    let big = Rat::int(i64::MAX);
    let sq = big.mul(&big);
    assert_eq!(sq.mul(&big.inv().unwrap()), big);
}

#[test]
fn minimal_polynomial_and_roots() {
    let x = m(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, -3]]);
    let mp = poly::minimal_polynomial(&x);
    assert_eq!(mp.len(), 3);
    let mut roots = poly::rational_roots(&mp);
    roots.sort_by(|a, b| a.to_f64().partial_cmp(&b.to_f64()).unwrap());
    assert_eq!(roots, vec![Rat::int(-3), Rat::int(2)]);
    assert!(poly::rational_roots(&[Rat::int(-2), Rat::int(0), Rat::int(1)]).is_empty());
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::from_flat(Q, r, c, v.into_iter().map(|x| Q.int(x)).collect()))
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(a in small_matrix(5)) {
        let r = a.rref().0;
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn kronecker_rank_is_multiplicative(a in small_matrix(4), b in small_matrix(3)) {
        prop_assert_eq!(a.kronecker(&b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn solve_residual_vanishes(a in small_matrix(5), seed in proptest::collection::vec(-3i64..=3, 5)) {
        let x: Vec<Scalar> = (0..a.cols()).map(|i| Q.int(seed[i % seed.len()])).collect();
        let xcol = Matrix::from_flat(Q, a.cols(), 1, x);
        let b = a.mul(&xcol);
        let s = Matrix::solve(&a, &b).unwrap();
        prop_assert!(a.mul(&s.particular).sub(&b).is_zero());
        prop_assert!(a.mul(&s.kernel).is_zero());
        prop_assert_eq!(s.kernel.cols(), a.cols() - a.rank());
    }

    #[test]
    fn pushout_dimension_formula(f in small_matrix(6), gc in 1usize..6, seed in any::<u64>()) {
        let g = Matrix::from_flat(Q, f.rows(), gc,
            (0..f.rows() * gc).map(|i| Q.int(((seed >> (i % 60)) & 3) as i64 - 1)).collect());
        let (d, ia, ib) = Matrix::pushout(&f, &g);
        let rank = Matrix::hstack(&[&f, &g.neg()]).rank();
        prop_assert_eq!(d, f.cols() + g.cols() - rank);
        prop_assert_eq!(f.mul(&ia), g.mul(&ib));
    }

    #[test]
    fn pullback_dimension_formula(f in small_matrix(6), gr in 1usize..6, seed in any::<u64>()) {
        let g = Matrix::from_flat(Q, gr, f.cols(),
            (0..gr * f.cols()).map(|i| Q.int(((seed >> (i % 60)) & 3) as i64 - 1)).collect());
        let (d, pa, pb) = Matrix::pullback(&f, &g);
        let rank = Matrix::vstack(&[&f, &g.neg()]).rank();
        prop_assert_eq!(d, f.rows() + g.rows() - rank);
        prop_assert_eq!(pa.mul(&f), pb.mul(&g));
    }

    #[test]
    fn inverse_roundtrip(a in small_matrix(4)) {
        if let Some(inv) = a.inverse() {
            prop_assert!(a.mul(&inv).is_identity());
        } else {
            prop_assert!(!a.is_invertible());
        }
    }
}
