use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use wgrass_core::linalg::{
    elementary_divisors, hnf, hnf_basis, is_column_equivalent, lattice_intersect, snf, solve_integral, IntMatrix,
    LatticeBasis, RatMatrix,
};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, cols), rows).prop_map(|r| IntMatrix::from_rows(&r))
}

fn shaped() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn hermite_shape_example() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let h = hnf_basis(&m);
    for c in 0..h.cols() {
        let pivot = (0..h.rows()).find(|&r| !h.get(r, c).is_zero()).unwrap();
        assert!(h.get(pivot, c).is_positive());
        for left in 0..c {
            let x = h.get(pivot, left);
            assert!(!x.is_negative() && x < h.get(pivot, c));
        }
    }
    let divisors = elementary_divisors(&m);
    let det: BigInt = divisors.iter().product();
    assert_eq!(det, m.determinant().unwrap().abs());
}

#[test]
fn intersection_with_the_integers() {
    // ℤ(1/2, 1/2) + ℤ(0, 1) meets ℤ^2 in ℤ(1, 1) + ℤ(0, 1)
    let gens = RatMatrix::from_columns(2, &[vec![q(1, 2), q(1, 2)], vec![q(0, 1), q(1, 1)]]);
    let l = lattice_intersect(&gens, 2).unwrap();
    let expected = LatticeBasis::from_generators(&IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]));
    assert!(l.same_lattice(&expected));
    // ℤ(1/3, 2/3) alone meets ℤ^2 in ℤ(1, 2)
    let gens = RatMatrix::from_columns(2, &[vec![q(1, 3), q(2, 3)]]);
    let l = lattice_intersect(&gens, 2).unwrap();
    assert_eq!(l.rank(), 1);
    assert!(l.contains(&[BigInt::from(1), BigInt::from(2)]).unwrap());
    assert!(!l.contains(&[BigInt::from(1), BigInt::from(1)]).unwrap());
}

#[test]
fn integral_solving() {
    let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
    let x = solve_integral(&a, &[BigInt::from(4), BigInt::from(9)]).unwrap();
    assert_eq!(x, Some(vec![BigInt::from(2), BigInt::from(3)]));
    assert_eq!(solve_integral(&a, &[BigInt::from(1), BigInt::from(0)]).unwrap(), None);
    assert!(solve_integral(&a, &[BigInt::one()]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_transform_is_unimodular(m in shaped()) {
        let (h, u) = hnf(&m);
        prop_assert_eq!(m.mul(&u).unwrap(), h.clone());
        prop_assert!(u.determinant().unwrap().abs().is_one());
        prop_assert_eq!(hnf_basis(&h), hnf_basis(&m));
    }

    #[test]
    fn hermite_form_is_a_column_invariant(m in matrix(3, 3), ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..6)) {
        let mut cols = m.columns();
        for (i, j, c) in ops {
            if i != j {
                let add: Vec<BigInt> = cols[j].iter().map(|x| x * c).collect();
                for (x, y) in cols[i].iter_mut().zip(add) {
                    *x += y;
                }
            }
        }
        cols.swap(0, 2);
        let moved = IntMatrix::from_columns(3, &cols);
        prop_assert!(is_column_equivalent(&m, &moved).unwrap());
        prop_assert_eq!(hnf_basis(&m), hnf_basis(&moved));
    }

    #[test]
    fn smith_form_diagonalises(m in shaped()) {
        let (s, u, v) = snf(&m);
        prop_assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), s.clone());
        prop_assert!(u.determinant().unwrap().abs().is_one());
        prop_assert!(v.determinant().unwrap().abs().is_one());
        let d = elementary_divisors(&m);
        for w in d.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(d.iter().all(|x| x.is_positive()));
    }

    #[test]
    fn solutions_solve(m in matrix(3, 3), x in prop::collection::vec(-5i64..=5, 3)) {
        let x: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = solve_integral(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn intersection_is_integral_and_inside(m in matrix(3, 2), d in 1i64..=6) {
        let gens = RatMatrix::from_columns(3, &m.columns().iter()
            .map(|c| c.iter().map(|x| BigRational::new(x.clone(), BigInt::from(d))).collect())
            .collect::<Vec<_>>());
        let l = lattice_intersect(&gens, 3).unwrap();
        // d times each generator is integral
        for c in &m.columns() {
            prop_assert!(l.contains(c).unwrap());
        }
        // every basis vector lies in the rational span
        for c in l.basis().columns() {
            let target: Vec<BigRational> = c.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            let coords = gens.solve(&target).unwrap();
            prop_assert!(coords.is_some());
        }
    }
}
