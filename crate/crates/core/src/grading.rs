//! Integral gradings of Plücker coordinates on `Λ^k ℂ^{n+1}`.
//!
//! A grading is a tuple `a = (a_0, …, a_n)` of coefficients over the integral
//! basis `γ_0^∨, …, γ_n^∨` of the coweight lattice. In ambient coordinates
//! `γ_i^∨` has entry `[i ∈ I] − [i ≤ k−2]` at `T_I`, so
//!
//! ```text
//! deg T_I = Σ_{i∈I} a_i − Σ_{l≤k−2} a_l.
//! ```
//!
//! Sums over `l ≤ k−2` are empty for `k = 1`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{solve_integral, IntMatrix};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("need 1 <= k <= n, got n = {n}, k = {k}")]
    BadRange { n: usize, k: usize },
    #[error("expected {expected} values, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("coordinate T{0} has non-positive degree")]
    NonPositiveDegree(Subset),
    #[error("not a permutation of 0..={n}: {perm:?}")]
    InvalidPermutation { n: usize, perm: Vec<usize> },
}

pub(crate) fn check_range(n: usize, k: usize) -> Result<(), GradingError> {
    if k == 0 || k > n {
        Err(GradingError::BadRange { n, k })
    } else {
        Ok(())
    }
}

/// `(n, k, a_0..a_n)`; positivity is a separate predicate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GradingParams {
    n: usize,
    k: usize,
    a: Vec<i64>,
}

impl GradingParams {
    pub fn new(n: usize, k: usize, a: Vec<i64>) -> Result<Self, GradingError> {
        check_range(n, k)?;
        if a.len() != n + 1 {
            return Err(GradingError::WrongLength {
                expected: n + 1,
                found: a.len(),
            });
        }
        Ok(Self { n, k, a })
    }

    /// The standard grading `a = (1, …, 1)` of the classical Grassmannian.
    pub fn standard(n: usize, k: usize) -> Result<Self, GradingError> {
        Self::new(n, k, vec![1; n + 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// `Σ_{l≤k−2} a_l`.
    pub fn head_sum(&self) -> i64 {
        self.a[..self.k - 1].iter().sum()
    }

    pub fn total(&self) -> i64 {
        self.a.iter().sum()
    }
}

/// Degrees of all Plücker coordinates, keyed in lexicographic label order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeTable {
    n: usize,
    k: usize,
    degrees: BTreeMap<Subset, i64>,
}

impl DegreeTable {
    pub fn from_map(n: usize, k: usize, degrees: BTreeMap<Subset, i64>) -> Self {
        Self { n, k, degrees }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, s: &Subset) -> Option<i64> {
        self.degrees.get(s).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Subset, i64)> {
        self.degrees.iter().map(|(s, &d)| (s, d))
    }

    pub fn values(&self) -> Vec<i64> {
        self.degrees.values().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Sorted multiset of degrees.
    pub fn multiset(&self) -> Vec<i64> {
        let mut v = self.values();
        v.sort_unstable();
        v
    }

    pub fn as_map(&self) -> &BTreeMap<Subset, i64> {
        &self.degrees
    }
}

pub fn degree_of(p: &GradingParams, s: &Subset) -> i64 {
    s.indices().iter().map(|&i| p.a[i]).sum::<i64>() - p.head_sum()
}

pub fn degrees(p: &GradingParams) -> DegreeTable {
    let degrees = Subset::all(p.n, p.k)
        .into_iter()
        .map(|s| {
            let d = degree_of(p, &s);
            (s, d)
        })
        .collect();
    DegreeTable::from_map(p.n, p.k, degrees)
}

/// Whether every Plücker coordinate has strictly positive degree. The
/// tightest subset takes the `k` smallest entries of `a`.
pub fn is_positive(p: &GradingParams) -> bool {
    let mut sorted = p.a.clone();
    sorted.sort_unstable();
    sorted[..p.k].iter().sum::<i64>() > p.head_sum()
}

/// Removing any single degree leaves a list with gcd 1.
pub fn is_well_formed(table: &DegreeTable) -> Result<bool, GradingError> {
    if let Some((s, _)) = table.iter().find(|&(_, d)| d <= 0) {
        return Err(GradingError::NonPositiveDegree(s.clone()));
    }
    let d = table.values();
    let m = d.len();
    if m < 2 {
        return Ok(false);
    }
    let mut prefix = vec![0i64; m + 1];
    let mut suffix = vec![0i64; m + 1];
    for i in 0..m {
        prefix[i + 1] = prefix[i].gcd(&d[i]);
        suffix[m - 1 - i] = suffix[m - i].gcd(&d[m - 1 - i]);
    }
    Ok((0..m).all(|i| prefix[i].gcd(&suffix[i + 1]) == 1))
}

/// Degrees of the dualising sheaves of the weighted Grassmannian `Y` and of
/// its ambient weighted projective space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualisingDegrees {
    pub omega_y: i64,
    pub omega_wp: i64,
    pub fano: bool,
    /// The formulas presuppose well-formedness; `false` flags a caveat.
    pub well_formed: bool,
}

pub fn dualising_degrees(p: &GradingParams) -> DualisingDegrees {
    let (n, k) = (p.n as i64, p.k as i64);
    let total = p.total();
    let head = p.head_sum();
    let omega_y = -k * total + (n + 1) * head;
    let b_n = binomial(p.n, p.k - 1) as i64;
    let b_n1 = binomial(p.n + 1, p.k) as i64;
    let omega_wp = -b_n * total + b_n1 * head;
    let well_formed = is_positive(p) && is_well_formed(&degrees(p)).unwrap_or(false);
    DualisingDegrees {
        omega_y,
        omega_wp,
        fano: omega_y < 0,
        well_formed,
    }
}

/// Parameters of a grading induced from `GL(n+1) × G_m`:
/// `deg T_I = Σ_{i∈I} w_i + u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GLParams {
    pub w: Vec<i64>,
    pub u: i64,
}

pub fn to_gl(p: &GradingParams) -> GLParams {
    GLParams {
        w: p.a.clone(),
        u: -p.head_sum(),
    }
}

/// `a_i = Σ_{l≤k−2} w_l + u + w_i`.
pub fn from_gl(n: usize, k: usize, g: &GLParams) -> Result<GradingParams, GradingError> {
    check_range(n, k)?;
    if g.w.len() != n + 1 {
        return Err(GradingError::WrongLength {
            expected: n + 1,
            found: g.w.len(),
        });
    }
    let shift: i64 = g.w[..k - 1].iter().sum::<i64>() + g.u;
    GradingParams::new(n, k, g.w.iter().map(|w| w + shift).collect())
}

pub fn gl_degrees(n: usize, k: usize, g: &GLParams) -> Result<DegreeTable, GradingError> {
    check_range(n, k)?;
    if g.w.len() != n + 1 {
        return Err(GradingError::WrongLength {
            expected: n + 1,
            found: g.w.len(),
        });
    }
    let degrees = Subset::all(n, k)
        .into_iter()
        .map(|s| {
            let d = s.indices().iter().map(|&i| g.w[i]).sum::<i64>() + g.u;
            (s, d)
        })
        .collect();
    Ok(DegreeTable::from_map(n, k, degrees))
}

/// `α_k = (k/(n+1) − 1)·binom(n+1,k) = binom(n,k−1) − binom(n+1,k)`.
pub fn alpha(n: usize, k: usize) -> i64 {
    binomial(n, k - 1) as i64 - binomial(n + 1, k) as i64
}

/// `β_k = binom(n, k−1)`.
pub fn beta(n: usize, k: usize) -> i64 {
    binomial(n, k - 1) as i64
}

/// Coordinates of `γ_0^∨, …, γ_n^∨` (columns) over
/// `(ω_1^∨, …, ω_n^∨, τ^∨ / binom(n+1,k))`.
pub fn gamma_basis(n: usize, k: usize) -> Result<IntMatrix, GradingError> {
    check_range(n, k)?;
    let mut m = IntMatrix::zeros(n + 1, n + 1);
    for r in 0..n {
        m.set(r, r, BigInt::from(1));
        m.set(r, r + 1, BigInt::from(-1));
    }
    for c in 0..=n {
        let v = if c + 1 < k { alpha(n, k) } else { beta(n, k) };
        m.set(n, c, BigInt::from(v));
    }
    Ok(m)
}

/// `γ_i^∨` in ambient coordinates: `dim W × (n+1)`, entry `[i∈I] − [i≤k−2]`.
pub fn gamma_ambient(n: usize, k: usize) -> Result<IntMatrix, GradingError> {
    check_range(n, k)?;
    let subsets = Subset::all(n, k);
    let mut m = IntMatrix::zeros(subsets.len(), n + 1);
    for (r, s) in subsets.iter().enumerate() {
        for i in 0..=n {
            let v = i64::from(s.contains(i)) - i64::from(i + 1 < k);
            m.set(r, i, BigInt::from(v));
        }
    }
    Ok(m)
}

/// Checks a one-line permutation of `0..=n`.
pub fn validate_permutation(n: usize, perm: &[usize]) -> Result<(), GradingError> {
    let mut seen = vec![false; n + 1];
    let ok = perm.len() == n + 1
        && perm.iter().all(|&p| p <= n && !std::mem::replace(&mut seen[p], true));
    if ok {
        Ok(())
    } else {
        Err(GradingError::InvalidPermutation {
            n,
            perm: perm.to_vec(),
        })
    }
}

/// `(outer ∘ inner)(i) = outer[inner[i]]`.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}

pub fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// The grading `a'` with `deg_{a'}(T_{σ(I)}) = deg_a(T_I)` for every `I`.
///
/// Composition: `weyl_act(weyl_act(p, σ), σ') = weyl_act(p, σ' ∘ σ)`.
pub fn weyl_act(p: &GradingParams, sigma: &[usize]) -> Result<GradingParams, GradingError> {
    validate_permutation(p.n, sigma)?;
    let table = degrees(p);
    let subsets = Subset::all(p.n, p.k);
    let index: BTreeMap<&Subset, usize> = subsets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut target = vec![BigInt::from(0); subsets.len()];
    for (s, d) in table.iter() {
        target[index[&s.permuted(sigma)]] = BigInt::from(d);
    }
    let gamma = gamma_ambient(p.n, p.k)?;
    let a = solve_integral(&gamma, &target)
        .expect("shapes agree")
        .expect("the coweight lattice is Weyl-stable");
    let a = a
        .iter()
        .map(|x| x.to_i64().expect("transported grading fits in i64"))
        .collect();
    GradingParams::new(p.n, p.k, a)
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// For each prime `p` dividing some degree, the coordinates whose degree `p` divides.
/// Zero degrees are skipped.
pub fn singular_strata(table: &DegreeTable) -> BTreeMap<u64, BTreeSet<Subset>> {
    let mut out: BTreeMap<u64, BTreeSet<Subset>> = BTreeMap::new();
    for (s, d) in table.iter() {
        for p in prime_factors(d.unsigned_abs()) {
            out.entry(p).or_default().insert(s.clone());
        }
    }
    out
}

/// A second integral basis of the `k`-side coweight lattice, paired with the
/// complement map `I ↦ I°` onto `(n+1−k)`-subsets.
///
/// `alt_basis` is written over the same `(ω^∨, τ^∨/dim W)` coordinates as
/// [`gamma_basis`]: rows `r < n` carry `−1` at column `r` and `+1` at `r+1`,
/// and the last row is `α_{k̃}` repeated `k̃−1` times followed by `β_{k̃}`
/// repeated `k+1` times. Under this basis, `a` grades `T_I` exactly as the
/// standard basis for `k̃` grades `T_{I°}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementSetup {
    pub k_tilde: usize,
    pub alt_basis: IntMatrix,
    pub bijection: BTreeMap<Subset, Subset>,
}

pub fn complement_setup(n: usize, k: usize) -> Result<ComplementSetup, GradingError> {
    check_range(n, k)?;
    let kt = n + 1 - k;
    let mut m = IntMatrix::zeros(n + 1, n + 1);
    for r in 0..n {
        m.set(r, r, BigInt::from(-1));
        m.set(r, r + 1, BigInt::from(1));
    }
    for c in 0..=n {
        let v = if c + 1 < kt { alpha(n, kt) } else { beta(n, kt) };
        m.set(n, c, BigInt::from(v));
    }
    let bijection = Subset::all(n, k)
        .into_iter()
        .map(|s| {
            let c = s.complement(n);
            (s, c)
        })
        .collect();
    Ok(ComplementSetup {
        k_tilde: kt,
        alt_basis: m,
        bijection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{elementary_divisors, is_column_equivalent};
    use crate::roots::{build_lpsi, coweight_lattice, degrees_from_coweight, CoordinateLabel, CoweightVector, RepSpec};
    use itertools::Itertools;
    use num_traits::One;
    use proptest::prelude::*;

    fn gp(n: usize, k: usize, a: &[i64]) -> GradingParams {
        GradingParams::new(n, k, a.to_vec()).unwrap()
    }

    fn sub(ix: &[usize]) -> Subset {
        Subset::new(ix.to_vec()).unwrap()
    }

    #[test]
    fn gamma_basis_examples() {
        assert_eq!((alpha(4, 2), beta(4, 2)), (-6, 4));
        let m = gamma_basis(4, 2).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(10));
        for n in 1..=7 {
            for k in 1..=n {
                let b = binomial(n + 1, k) as i64;
                assert_eq!((n - k + 2) as i64 * beta(n, k) + (k - 1) as i64 * alpha(n, k), b);
                let prod = elementary_divisors(&gamma_basis(n, k).unwrap())
                    .into_iter()
                    .fold(BigInt::one(), |acc, d| acc * d);
                assert_eq!(prod, BigInt::from(b));
            }
        }
        assert!(matches!(gamma_basis(3, 0), Err(GradingError::BadRange { .. })));
    }

    #[test]
    fn gamma_ambient_is_lpsi_times_m() {
        for n in 1..=5 {
            for k in 1..=n {
                let lpsi = build_lpsi(&RepSpec::type_a(n, k).unwrap()).unwrap();
                let prod = lpsi.mul(&gamma_basis(n, k).unwrap().to_rat()).unwrap();
                assert_eq!(prod, gamma_ambient(n, k).unwrap().to_rat(), "n={n} k={k}");
                let lattice = coweight_lattice(&RepSpec::type_a(n, k).unwrap()).unwrap();
                assert!(is_column_equivalent(lattice.basis(), &gamma_ambient(n, k).unwrap()).unwrap());
            }
        }
    }

    /// For `k = n` the generator matrix of `L(ψ)` is square with integral inverse.
    #[test]
    fn top_exterior_power_basis() {
        for n in 1..=5 {
            let mut rows = Vec::new();
            for r in 0..n {
                let mut row = vec![0i64; n + 1];
                row[r] = -1;
                row[r + 1] = 1;
                rows.push(row);
            }
            rows.push(vec![1; n + 1]);
            let displayed = IntMatrix::from_rows(&rows);
            assert!(is_column_equivalent(&displayed, &gamma_basis(n, n).unwrap()).unwrap());
            let lpsi = build_lpsi(&RepSpec::type_a(n, n).unwrap()).unwrap();
            let inv = lpsi.inverse().unwrap().to_int().expect("integral inverse");
            assert!(is_column_equivalent(&inv, &displayed).unwrap());
        }
    }

    #[test]
    fn degree_examples() {
        assert!(degrees(&gp(4, 2, &[1; 5])).values().iter().all(|&d| d == 1));
        let t = degrees(&gp(2, 2, &[1, 2, 3]));
        assert_eq!(t.values(), vec![2, 3, 4]);
        let t = degrees(&gp(3, 2, &[1, 1, 1, 2]));
        assert_eq!(t.values(), vec![1, 1, 2, 1, 2, 2]);
        // deg T_{0..k−2, l} = a_l
        let p = gp(5, 3, &[3, -1, 4, 1, 5, 9]);
        let t = degrees(&p);
        for l in 2..=5 {
            assert_eq!(t.get(&sub(&[0, 1, l])), Some(p.a()[l]));
        }
    }

    #[test]
    fn positivity_examples() {
        assert!(is_positive(&gp(4, 2, &[1; 5])));
        let p = gp(4, 2, &[-1, 3, 3, 3, 3]);
        assert!(is_positive(&p));
        assert_eq!(degrees(&p).multiset().into_iter().dedup().collect::<Vec<_>>(), vec![3, 7]);
        assert!(!is_positive(&gp(2, 1, &[0, 1, 2])));
    }

    #[test]
    fn well_formedness_examples() {
        assert!(is_well_formed(&degrees(&gp(3, 2, &[1; 4]))).unwrap());
        assert!(!is_well_formed(&degrees(&gp(3, 2, &[2; 4]))).unwrap());
        assert!(is_well_formed(&degrees(&gp(3, 2, &[1, 1, 1, 2]))).unwrap());
        assert!(matches!(
            is_well_formed(&degrees(&gp(2, 1, &[0, 1, 2]))),
            Err(GradingError::NonPositiveDegree(_))
        ));
        // P(1,2,3) is well formed, P(1,2,2) is not
        assert!(is_well_formed(&degrees(&gp(2, 1, &[1, 2, 3]))).unwrap());
        assert!(!is_well_formed(&degrees(&gp(2, 1, &[1, 2, 2]))).unwrap());
    }

    #[test]
    fn dualising_examples() {
        let d = dualising_degrees(&gp(3, 2, &[1; 4]));
        assert_eq!((d.omega_y, d.omega_wp, d.fano, d.well_formed), (-4, -6, true, true));
        assert_eq!(dualising_degrees(&gp(4, 2, &[1; 5])).omega_y, -5);
        let d = dualising_degrees(&gp(2, 1, &[1, 2, 3]));
        assert_eq!((d.omega_y, d.omega_wp), (-6, -6));
        assert!(!dualising_degrees(&gp(3, 2, &[2; 4])).well_formed);
    }

    #[test]
    fn gl_examples() {
        let g = GLParams { w: vec![1, 0, 0, 0, 0], u: 0 };
        assert_eq!(from_gl(4, 2, &g).unwrap().a(), &[2, 1, 1, 1, 1]);
        let g = GLParams { w: vec![1, 0, 0, 0, 0], u: -1 };
        assert_eq!(from_gl(4, 2, &g).unwrap().a(), &[1, 0, 0, 0, 0]);
    }

    #[test]
    fn weyl_examples() {
        let p = gp(2, 2, &[1, 2, 3]);
        assert_eq!(weyl_act(&p, &[0, 1, 2]).unwrap(), p);
        assert_eq!(weyl_act(&p, &[1, 0, 2]).unwrap().a(), &[3, 2, 4]);
        // permutations preserving {0..k−2} permute a
        let p = gp(4, 3, &[1, 2, 3, 4, 5]);
        assert_eq!(weyl_act(&p, &[1, 0, 3, 4, 2]).unwrap().a(), &[2, 1, 5, 3, 4]);
        assert!(weyl_act(&p, &[0, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn strata_examples() {
        assert!(singular_strata(&degrees(&gp(3, 2, &[1; 4]))).is_empty());
        let s = singular_strata(&degrees(&gp(3, 2, &[1, 1, 1, 2])));
        let expected: BTreeSet<Subset> = [sub(&[0, 3]), sub(&[1, 3]), sub(&[2, 3])].into();
        assert_eq!(s, BTreeMap::from([(2, expected)]));
        let s = singular_strata(&degrees(&gp(3, 2, &[2; 4])));
        assert_eq!(s[&2].len(), 6);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }

    #[test]
    fn complement_examples() {
        for n in 1..=6 {
            for k in 1..=n {
                let c = complement_setup(n, k).unwrap();
                let kt = c.k_tilde;
                assert_eq!(alpha(n, kt) + beta(n, k), 0);
                assert_eq!(alpha(n, k) + beta(n, kt), 0);
                let back = complement_setup(n, kt).unwrap();
                for (s, t) in &c.bijection {
                    assert_eq!(&back.bijection[t], s);
                }
            }
        }
    }

    #[test]
    fn complement_duality_of_gradings() {
        for n in 1..=6 {
            for k in 1..=n {
                let c = complement_setup(n, k).unwrap();
                assert!(is_column_equivalent(&c.alt_basis, &gamma_basis(n, k).unwrap()).unwrap());
                let lpsi = build_lpsi(&RepSpec::type_a(n, k).unwrap()).unwrap();
                let ambient = lpsi.mul(&c.alt_basis.to_rat()).unwrap().to_int().unwrap();
                let a: Vec<i64> = (0..=n as i64).map(|i| 3 * i * i - 2 * i + 1).collect();
                let alt_deg = ambient
                    .mul_vec(&a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
                    .unwrap();
                let dual = degrees(&gp(n, c.k_tilde, &a));
                for (row, s) in Subset::all(n, k).iter().enumerate() {
                    let d = dual.get(&c.bijection[s]).unwrap();
                    assert_eq!(alt_deg[row], BigInt::from(d), "n={n} k={k} {s}");
                }
            }
        }
    }

    #[test]
    fn pipeline_matches_fast_path() {
        for n in 1..=5 {
            for k in 1..=n {
                let spec = RepSpec::type_a(n, k).unwrap();
                let gamma = gamma_ambient(n, k).unwrap();
                let a: Vec<i64> = (0..=n as i64).map(|i| 2 * i * i - 3 * i + 1).collect();
                let amb = gamma.mul_vec(&a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).unwrap();
                let c = CoweightVector::from_integral_ambient(&spec, &amb).unwrap();
                let pipeline = degrees_from_coweight(&spec, &c).unwrap();
                let fast = degrees(&gp(n, k, &a));
                for (label, d) in pipeline {
                    let CoordinateLabel::Subset(s) = label else { unreachable!() };
                    assert_eq!(BigInt::from(fast.get(&s).unwrap()), d);
                }
            }
        }
    }

    fn params() -> impl Strategy<Value = GradingParams> {
        (1usize..=6)
            .prop_flat_map(|n| (Just(n), 1..=n, proptest::collection::vec(-4i64..=8, n + 1)))
            .prop_map(|(n, k, a)| GradingParams::new(n, k, a).unwrap())
    }

    fn params_with_perm() -> impl Strategy<Value = (GradingParams, Vec<usize>, Vec<usize>)> {
        params().prop_flat_map(|p| {
            let ids: Vec<usize> = (0..=p.n()).collect();
            (Just(p), Just(ids.clone()).prop_shuffle(), Just(ids).prop_shuffle())
        })
    }

    proptest! {
        #[test]
        fn positivity_matches_brute_force(p in params()) {
            prop_assert_eq!(is_positive(&p), degrees(&p).values().iter().all(|&d| d > 0));
        }

        #[test]
        fn gl_round_trip(p in params(), t in -5i64..=5) {
            let g = to_gl(&p);
            prop_assert_eq!(&from_gl(p.n(), p.k(), &g).unwrap(), &p);
            prop_assert_eq!(gl_degrees(p.n(), p.k(), &g).unwrap(), degrees(&p));
            let shifted = GLParams {
                w: g.w.iter().map(|w| w - t).collect(),
                u: g.u + p.k() as i64 * t,
            };
            prop_assert_eq!(gl_degrees(p.n(), p.k(), &shifted).unwrap(), degrees(&p));
        }

        #[test]
        fn weyl_transport((p, s1, s2) in params_with_perm()) {
            let q = weyl_act(&p, &s1).unwrap();
            let (dp, dq) = (degrees(&p), degrees(&q));
            prop_assert_eq!(dp.multiset(), dq.multiset());
            for (s, d) in dp.iter() {
                prop_assert_eq!(dq.get(&s.permuted(&s1)), Some(d));
            }
            prop_assert_eq!(weyl_act(&q, &s2).unwrap(), weyl_act(&p, &compose(&s2, &s1)).unwrap());
            prop_assert_eq!(weyl_act(&q, &invert(&s1)).unwrap(), p);
        }

        #[test]
        fn dualising_sum_rule(p in params()) {
            // Σ_I deg T_I = −deg ω_wP
            let d = dualising_degrees(&p);
            prop_assert_eq!(degrees(&p).values().iter().sum::<i64>(), -d.omega_wp);
            if p.k() == 1 {
                prop_assert_eq!(d.omega_y, -p.total());
            }
        }
    }
}
