mod common;

use common::*;
use proptest::prelude::*;
use repequiv::qalg::{path_basis, validate_admissible, AlgebraError, PathRelation, DEFAULT_CAP};
use repequiv::Scalar;

fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { Q.one() } else { Q.zero() }).collect()
}

#[test]
fn a2_basis() {
    let a = a2();
    assert_eq!(a.dim(), 3);
    assert_eq!(a.labels(), &["e1".to_string(), "e2".into(), "a1".into()]);
}

#[test]
fn a2_multiplication_reads_left_to_right() {
    let a = a2();
    let (e1, e2, arrow) = (unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2));
    assert_eq!(a.multiply(&e1, &arrow), arrow);
    assert_eq!(a.multiply(&arrow, &e1), vec![Q.zero(); 3]);
    assert_eq!(a.multiply(&arrow, &e2), arrow);
    assert_eq!(a.multiply(&e1, &e2), vec![Q.zero(); 3]);
    assert_eq!(a.multiply(&a.unit(), &arrow), arrow);
}

#[test]
fn loop_with_square_zero() {
    let q = quiver(1, &[("x", 1, 1)]);
    let rel = PathRelation { terms: vec![(Q.one(), vec![0, 0])] };
    assert_eq!(path_basis(&q, &[rel], Q, DEFAULT_CAP).unwrap().dim(), 2);
}

#[test]
fn seven_vertex_dimension() {
    assert_eq!(seven_vertex().dim(), 16);
}

#[test]
fn opposite_is_an_involution() {
    for alg in [a2(), a3(), seven_vertex()] {
        let op = alg.opposite();
        assert_ne!(op.name(), alg.name());
        assert!(op.opposite() == *alg);
    }
}

#[test]
fn opposite_reverses_arrows() {
    let op = a2().opposite();
    let (e1, arrow) = (unit_vec(3, 0), unit_vec(3, 2));
    assert_eq!(op.multiply(&arrow, &e1), arrow);
    assert_eq!(op.multiply(&e1, &arrow), vec![Q.zero(); 3]);
}

#[test]
fn admissibility() {
    let q7 = quiver(2, &[("a", 1, 2), ("b", 2, 1)]);
    assert!(validate_admissible(&q7, &q7.rad2_relations(Q), DEFAULT_CAP).is_ok());
    let bad = PathRelation { terms: vec![(Q.one(), vec![0])] };
    assert!(matches!(validate_admissible(&q7, &[bad], DEFAULT_CAP), Err(AlgebraError::NotAdmissible(..))));
    let cyc = quiver(1, &[("x", 1, 1)]);
    assert!(matches!(
        validate_admissible(&cyc, &[], 8),
        Err(AlgebraError::NotFiniteWithinCap { .. })
    ));
    assert!(validate_admissible(&quiver(3, &[("a", 1, 2), ("b", 2, 3)]), &[], DEFAULT_CAP).is_ok());
}

#[test]
fn duplicate_arrow_names_are_rejected() {
    let r = repequiv::qalg::Quiver::new(
        2,
        vec![
            repequiv::qalg::Arrow { name: "a".into(), src: 0, tgt: 1 },
            repequiv::qalg::Arrow { name: "a".into(), src: 0, tgt: 1 },
        ],
    );
    assert!(r.is_err());
}

#[test]
fn commutativity_relation() {
    // Commutative square: two length-2 paths identified.
    let q = quiver(4, &[("a", 1, 2), ("b", 1, 3), ("c", 2, 4), ("d", 3, 4)]);
    let rel = PathRelation { terms: vec![(Q.one(), vec![0, 2]), (Q.int(-1), vec![1, 3])] };
    let alg = path_basis(&q, &[rel], Q, DEFAULT_CAP).unwrap();
    assert_eq!(alg.dim(), 4 + 4 + 1);
}

/// Counts paths of a DAG given as 0-based arrows (`u < v`).
fn count_paths(n: usize, arrows: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0usize; n]; n];
    for u in (0..n).rev() {
        c[u][u] = 1;
        for &(s, t) in arrows {
            if s == u {
                for w in 0..n {
                    c[u][w] += c[t][w];
                }
            }
        }
    }
    c
}

proptest! {
    #[test]
    fn acyclic_dimension_counts_paths(n in 2usize..5, picks in proptest::collection::vec((0usize..4, 0usize..4), 0..6)) {
        let arrows: Vec<(usize, usize)> = picks.into_iter()
            .filter(|&(a, b)| a < b && b < n)
            .collect();
        let names: Vec<String> = (0..arrows.len()).map(|i| format!("x{i}")).collect();
        let triples: Vec<(&str, usize, usize)> =
            arrows.iter().zip(&names).map(|(&(s, t), nm)| (nm.as_str(), s + 1, t + 1)).collect();
        let alg = path_basis(&quiver(n, &triples), &[], Q, DEFAULT_CAP).unwrap();
        let counts = count_paths(n, &arrows);
        let total: usize = counts.iter().flatten().sum();
        prop_assert_eq!(alg.dim(), total);
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(alg.peirce(u, v).len(), counts[u][v]);
            }
        }
    }
}
