use kline::intlinalg::{cokernel, smith_normal_form, two_primary, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn matrix_of(r: usize, c: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-30i64..=30, c), r).prop_map(move |rows| {
        IntMatrix::from_rows_with_cols(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(), c)
            .unwrap()
    })
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix_of(r, c))
}

/// Two matrices with the same number of columns.
fn matrix_pair() -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    (1usize..=5, 1usize..=5, 1usize..=5).prop_flat_map(|(r1, r2, c)| (matrix_of(r1, c), matrix_of(r2, c)))
}

/// Adds `k` times row `src` to row `dst`.
fn row_op(m: &IntMatrix, src: usize, dst: usize, k: i64) -> IntMatrix {
    let mut rows = m.row_vecs();
    let add: Vec<BigInt> = rows[src].iter().map(|x| x * k).collect();
    for (a, b) in rows[dst].iter_mut().zip(add) {
        *a += b;
    }
    IntMatrix::from_rows_with_cols(rows, m.cols()).unwrap()
}

proptest! {
    #[test]
    fn cokernel_is_invariant_under_unimodular_row_ops(
        m in (2usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix_of(r, c)),
        k in -5i64..=5,
        i in 0usize..5,
        d in 1usize..5,
    ) {
        let (i, j) = (i % m.rows(), (i + d) % m.rows());
        prop_assume!(i != j);
        prop_assert_eq!(cokernel(&m), cokernel(&row_op(&m, i, j, k)));
    }

    #[test]
    fn smith_diagonal_is_a_divisibility_chain(m in matrix()) {
        let snf = smith_normal_form(&m);
        for w in snf.diagonal.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(snf.rank <= m.rows().min(m.cols()));
    }

    #[test]
    fn stacking_relations_only_shrinks((m, extra) in matrix_pair()) {
        let both = IntMatrix::vstack(&[&m, &extra]).unwrap();
        let big = cokernel(&m);
        let small = cokernel(&both);
        prop_assert!(small.free_rank() <= big.free_rank());
        if big.is_finite() {
            let (b, s) = (two_primary(&big).unwrap(), two_primary(&small).unwrap());
            prop_assert!(s.log_order() <= b.log_order());
        }
    }
}
