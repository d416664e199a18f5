mod support;

use proptest::prelude::*;
use symdet::matgen::{build_matrix, combinations, diagonal_product};
use symdet::polycore::{leading_term, MatrixKind, MonomialOrder, Rationals};

use support::fp;

fn index_set(n: usize, k: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(move |v| v[..k].to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn swapping_rows_negates_minor(
        kind in prop::sample::select(vec![MatrixKind::Symmetric, MatrixKind::Generic]),
        rows in index_set(4, 3),
        cols in index_set(4, 3),
        swap in (0usize..3, 0usize..3),
    ) {
        prop_assume!(swap.0 != swap.1);
        let m = build_matrix(fp(7), kind, 4).unwrap();
        let d = m.minor(&rows, &cols).unwrap();
        let mut swapped = rows.clone();
        swapped.swap(swap.0, swap.1);
        prop_assert_eq!(m.minor(&swapped, &cols).unwrap(), d.neg());
        let mut repeated = rows.clone();
        repeated[swap.0] = repeated[swap.1];
        prop_assert!(m.minor(&repeated, &cols).is_err());
    }

    #[test]
    fn symmetric_minors_are_transpose_invariant(k in 1usize..=4, rows in index_set(5, 4), cols in index_set(5, 4)) {
        let m = build_matrix(Rationals, MatrixKind::Symmetric, 5).unwrap();
        let (r, c) = (&rows[..k], &cols[..k]);
        prop_assert_eq!(m.minor(r, c).unwrap(), m.minor(c, r).unwrap());
    }
}

#[test]
fn pfaffian_squares_to_determinant() {
    for n in [2usize, 4, 6] {
        let m = build_matrix(fp(101), MatrixKind::Skew, n).unwrap();
        let all: Vec<usize> = (1..=n).collect();
        let pf = m.pfaffian(&all).unwrap();
        assert_eq!(pf.mul(&pf), m.minor(&all, &all).unwrap(), "n = {n}");
    }
}

#[test]
fn initial_term_of_diagonal_product_is_squarefree() {
    for n in 1..=6usize {
        let m = build_matrix(fp(2), MatrixKind::Symmetric, n).unwrap();
        let diag = MonomialOrder::diagonal(m.ring().nvars());
        let dp = diagonal_product(&m).unwrap();
        let lm = dp
            .factors
            .iter()
            .map(|d| leading_term(d, &diag).unwrap().0)
            .reduce(|a, b| a.mul(&b))
            .unwrap();
        assert!(lm.is_squarefree(), "n = {n}");
        assert_eq!(lm.degree() as usize, n * (n + 1) / 2);
        if n <= 4 {
            assert_eq!(leading_term(&dp.product, &diag).unwrap().0, lm);
        }
    }
}

#[test]
fn minor_counts() {
    for (n, k, count) in [(4, 2, 6), (5, 3, 10), (6, 1, 6)] {
        assert_eq!(combinations(n, k).len(), count);
    }
}
