//! Hermite and Smith normal forms, integral solving and column equivalence.
//!
//! The Hermite form is column-style: `h = m·u` with `u` unimodular, `h` lower
//! triangular in echelon shape, every pivot positive and every entry to the
//! left of a pivot (in the pivot row) reduced into `[0, pivot)`. Zero columns
//! trail. With this convention two matrices span the same column lattice iff
//! their Hermite forms agree after dropping zero columns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, LinalgError};

/// Column Hermite normal form of `m` with its unimodular transform.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u, _) = hnf_with_rank(m);
    (h, u)
}

/// As [`hnf`], also reporting the number of nonzero columns and their pivot rows.
pub(crate) fn hnf_with_rank(m: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<usize>) {
    let rows = m.rows();
    let cols = m.cols();
    if cols == 0 {
        return (m.clone(), IntMatrix::zeros(1, 0), Vec::new());
    }
    let mut h = m.columns();
    let mut u = IntMatrix::identity(cols).columns();
    let mut pivot_rows = Vec::new();
    let mut piv = 0;
    for r in 0..rows {
        if piv == cols {
            break;
        }
        let Some(first) = (piv..cols).find(|&c| !h[c][r].is_zero()) else {
            continue;
        };
        h.swap(piv, first);
        u.swap(piv, first);
        for c in piv + 1..cols {
            if h[c][r].is_zero() {
                continue;
            }
            let a = h[piv][r].clone();
            let b = h[c][r].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = if eg.gcd.is_negative() {
                (-eg.gcd, -eg.x, -eg.y)
            } else {
                (eg.gcd, eg.x, eg.y)
            };
            let pa = &a / &g;
            let pb = &b / &g;
            combine(&mut h, piv, c, &x, &y, &pb, &pa);
            combine(&mut u, piv, c, &x, &y, &pb, &pa);
        }
        if h[piv][r].is_negative() {
            negate(&mut h[piv]);
            negate(&mut u[piv]);
        }
        let p = h[piv][r].clone();
        for j in 0..piv {
            let q = h[j][r].div_floor(&p);
            if !q.is_zero() {
                axpy(&mut h, j, piv, &q);
                axpy(&mut u, j, piv, &q);
            }
        }
        pivot_rows.push(r);
        piv += 1;
    }
    (
        IntMatrix::from_columns(rows, &h),
        IntMatrix::from_columns(cols, &u),
        pivot_rows,
    )
}

/// `(col_p, col_c) <- (x·col_p + y·col_c, -b'·col_p + a'·col_c)`; determinant one.
fn combine(
    cols: &mut [Vec<BigInt>],
    p: usize,
    c: usize,
    x: &BigInt,
    y: &BigInt,
    pb: &BigInt,
    pa: &BigInt,
) {
    let n = cols[p].len();
    for i in 0..n {
        let vp = cols[p][i].clone();
        let vc = cols[c][i].clone();
        cols[p][i] = x * &vp + y * &vc;
        cols[c][i] = pa * &vc - pb * &vp;
    }
}

/// `col_j -= q · col_p`
fn axpy(cols: &mut [Vec<BigInt>], j: usize, p: usize, q: &BigInt) {
    let n = cols[j].len();
    for i in 0..n {
        let d = q * &cols[p][i];
        cols[j][i] -= d;
    }
}

fn negate(v: &mut [BigInt]) {
    for x in v.iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Hermite form with the trailing zero columns removed: a canonical basis of the column lattice.
pub fn hnf_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _, pivots) = hnf_with_rank(m);
    let keep: Vec<usize> = (0..pivots.len()).collect();
    h.select_columns(&keep)
}

/// Smith normal form: `s = u·m·v` diagonal with `d_1 | d_2 | …`, `u` and `v` unimodular.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut s: Vec<Vec<BigInt>> = (0..rows).map(|r| m.row(r)).collect();
    let mut u: Vec<Vec<BigInt>> = (0..rows).map(|r| IntMatrix::identity(rows).row(r)).collect();
    // v is kept as a list of columns so column operations stay contiguous.
    let mut v: Vec<Vec<BigInt>> = if cols == 0 {
        Vec::new()
    } else {
        IntMatrix::identity(cols).columns()
    };

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if s[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if s[bi][bj].abs() <= s[i][j].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_snf(rows, cols, s, u, v);
            };
            s.swap(t, bi);
            u.swap(t, bi);
            for row in s.iter_mut() {
                row.swap(t, bj);
            }
            v.swap(t, bj);

            let mut clean = true;
            for i in t + 1..rows {
                if s[i][t].is_zero() {
                    continue;
                }
                let q = s[i][t].div_floor(&s[t][t]);
                row_sub(&mut s, i, t, &q);
                row_sub(&mut u, i, t, &q);
                if !s[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if s[t][j].is_zero() {
                    continue;
                }
                let q = s[t][j].div_floor(&s[t][t]);
                for row in s.iter_mut() {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                axpy(&mut v, j, t, &q);
                if !s[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !s[i][j].is_multiple_of(&s[t][t]))
            });
            match offender {
                Some(i) => {
                    // row_t += row_i, then eliminate again
                    let minus_one = -BigInt::one();
                    row_sub(&mut s, t, i, &minus_one);
                    row_sub(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            negate(&mut s[t]);
            negate(&mut u[t]);
        }
    }
    finish_snf(rows, cols, s, u, v)
}

fn row_sub(m: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    let n = m[target].len();
    for j in 0..n {
        let d = q * &m[src][j];
        m[target][j] -= d;
    }
}

fn finish_snf(
    rows: usize,
    cols: usize,
    s: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = IntMatrix::new(rows, cols, s.into_iter().flatten().collect()).expect("shape");
    let u = IntMatrix::new(rows, rows, u.into_iter().flatten().collect()).expect("shape");
    let v = if cols == 0 {
        IntMatrix::zeros(1, 0)
    } else {
        IntMatrix::from_columns(cols, &v)
    };
    (s, u, v)
}

/// The nonzero diagonal of the Smith form (the elementary divisors).
pub fn elementary_divisors(m: &IntMatrix) -> Vec<BigInt> {
    let (s, _, _) = snf(m);
    (0..s.rows().min(s.cols()))
        .map(|i| s.get(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// An integral solution of `a·x = b`, or `None` if there is none.
pub fn solve_integral(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch {
            left: (a.rows(), a.cols()),
            right: (b.len(), 1),
        });
    }
    if a.cols() == 0 {
        return Ok(b.iter().all(|x| x.is_zero()).then(Vec::new));
    }
    let (h, u, pivots) = hnf_with_rank(a);
    // forward substitution through the echelon pivots of h
    let mut y = vec![BigInt::zero(); a.cols()];
    for (j, &r) in pivots.iter().enumerate() {
        let mut rhs = b[r].clone();
        for (jj, yj) in y.iter().enumerate().take(j) {
            rhs -= h.get(r, jj) * yj;
        }
        let p = h.get(r, j);
        let (q, rem) = rhs.div_rem(p);
        if !rem.is_zero() {
            return Ok(None);
        }
        y[j] = q;
    }
    if h.mul_vec(&y)? != b {
        return Ok(None);
    }
    Ok(Some(u.mul_vec(&y)?))
}

/// True iff the columns of `m1` and `m2` generate the same sublattice.
pub fn is_column_equivalent(m1: &IntMatrix, m2: &IntMatrix) -> Result<bool, LinalgError> {
    if m1.rows() != m2.rows() {
        return Err(LinalgError::DimensionMismatch {
            left: (m1.rows(), m1.cols()),
            right: (m2.rows(), m2.cols()),
        });
    }
    Ok(hnf_basis(m1) == hnf_basis(m2))
}
