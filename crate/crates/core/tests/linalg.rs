use liecohom::linalg::{bareiss_det, bareiss_rank, canonical_span, q, qi, Matrix, Rational, RowEchelon};
use num_bigint::BigInt;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = i64> {
    // mostly zeros so that rank deficiency shows up
    prop_oneof![2 => Just(0i64), 3 => -5i64..=5]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(entry(), rows * cols)
        .prop_map(move |v| Matrix::new(rows, cols, v.into_iter().map(Rational::from).collect()).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square() -> impl Strategy<Value = Matrix> {
    (1usize..6).prop_flat_map(|n| matrix(n, n))
}

fn square_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..5).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

fn big_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.numer().clone()).collect())
        .collect()
}

proptest! {
    #[test]
    fn rank_of_transpose(m in any_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn bareiss_agrees_with_elimination(m in any_matrix()) {
        prop_assert_eq!(bareiss_rank(big_rows(&m), m.cols()), m.rank());
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in square_pair()) {
        let ab = &a * &b;
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn bareiss_determinant(m in square()) {
        prop_assert_eq!(Rational::from(bareiss_det(big_rows(&m))), m.determinant().unwrap());
    }

    #[test]
    fn inverse_exists_iff_nonsingular(m in square()) {
        let n = m.rows();
        match m.inverse() {
            Some(inv) => {
                prop_assert!(!m.determinant().unwrap().is_zero());
                prop_assert_eq!(&m * &inv, Matrix::identity(n));
            }
            None => prop_assert!(m.determinant().unwrap().is_zero()),
        }
    }

    #[test]
    fn minimal_polynomial_annihilates(m in square()) {
        let f = m.minimal_polynomial();
        prop_assert!(f.eval_matrix(&m).is_zero());
        prop_assert!(f.leading().is_one());
        prop_assert!(f.degree().unwrap() <= m.rows());
    }

    #[test]
    fn echelon_contains_combinations(m in any_matrix(), c in prop::collection::vec(-3i64..=3, 7)) {
        let mut e = RowEchelon::new(m.cols());
        for i in 0..m.rows() {
            e.insert_dense(m.row(i));
        }
        prop_assert_eq!(e.rank(), m.rank());
        let mut v = vec![Rational::zero(); m.cols()];
        for i in 0..m.rows() {
            for (j, x) in m.row(i).iter().enumerate() {
                v[j] += x * &Rational::from(c[i]);
            }
        }
        prop_assert!(e.contains_dense(&v));
    }

    #[test]
    fn canonical_span_is_basis_independent(m in any_matrix()) {
        let rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let mut reversed = rows.clone();
        reversed.reverse();
        prop_assert_eq!(canonical_span(&rows, m.cols()), canonical_span(&reversed, m.cols()));
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let x = q(n, d);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn rational_field_laws(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let x = q(a, b);
        let y = q(c, d);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        prop_assert_eq!(&x * &(&y + &qi(1)), &(&x * &y) + &x);
    }
}

// det of the n x n Hilbert matrix is c_n^4 / c_{2n} with c_n = prod_{i<n} i!
fn hilbert_det_oracle(n: usize) -> Rational {
    let c = |m: usize| -> BigInt {
        let mut out = BigInt::from(1);
        let mut fact = BigInt::from(1);
        for i in 1..m {
            fact *= i;
            out *= &fact;
        }
        out
    };
    let cn = c(n);
    Rational::new(&cn * &cn * &cn * &cn, c(2 * n)).unwrap()
}

#[test]
fn hilbert_determinants() {
    for n in 1..=9 {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| q(1, (i + j + 1) as i64)).collect())
            .collect();
        let h = Matrix::from_rows(&rows, n);
        assert_eq!(h.determinant().unwrap(), hilbert_det_oracle(n), "n = {n}");
        assert_eq!(h.rank(), n);
        assert_eq!(&h * &h.inverse().unwrap(), Matrix::identity(n));
    }
}

#[test]
fn large_integer_entries() {
    // products of entries near 2^100 overflow i128 during elimination
    let big = Rational::from(BigInt::from(1u128 << 100));
    let one = qi(1);
    let m = Matrix::from_rows(
        &[
            vec![big.clone(), one.clone(), qi(3)],
            vec![one.clone(), big.clone(), qi(-7)],
            vec![&big + &one, &big + &one, qi(-4)],
        ],
        3,
    );
    assert_eq!(m.rank(), 2);
    assert_eq!(m.determinant().unwrap(), qi(0));
    assert_eq!(m.kernel_basis().len(), 1);
}

#[test]
fn rejects_bad_shapes() {
    assert!(Matrix::new(2, 2, vec![qi(1); 3]).is_none());
    assert!(Matrix::zeros(2, 3).determinant().is_none());
    assert!(Matrix::zeros(2, 3).inverse().is_none());
}
