//! Root data for types A, B and D, weight systems of the supported
//! representations, and the coweight pipeline `L(ψ) ∩ ℤ^{dim W}`.
//!
//! Conventions:
//!
//! * Cartan matrix entries are `C_ij = ⟨α_i, α_j^∨⟩`, indices 1-based in prose
//!   and 0-based in code.
//! * Fundamental coweights are `ω_j^∨ = Σ_l (C⁻¹)_{lj} α_l^∨`, so that
//!   `⟨α_i, ω_j^∨⟩ = δ_ij`.
//! * Type A acts on `Λ^k ℂ^{n+1}`; weights are written in the basis
//!   `e_0..e_n` and coroots `α_i^∨ = e_{i−1}^* − e_i^*`.
//! * Types B and D act on the standard module with labels `X_0, X_1, …`;
//!   `X_i` and `X_{r+i}` carry `ε_{i+1}` and `−ε_{i+1}`, and for B the last
//!   label `X_{2r}` carries the zero weight.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{lattice_intersect, IntMatrix, LatticeBasis, LinalgError, RatMatrix};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unsupported group type `{0}` (supported: A, B, D)")]
    UnsupportedType(String),
    #[error("rank {rank} is out of range for type {group_type}")]
    RankOutOfRange { group_type: GroupType, rank: usize },
    #[error("exterior power {k} is out of range for rank {rank}")]
    ExteriorPowerOutOfRange { k: usize, rank: usize },
    #[error("type {0} only supports the standard representation")]
    UnsupportedRepresentation(GroupType),
    #[error("coweight is not integral at coordinate {0}")]
    NonIntegralCoweight(CoordinateLabel),
    #[error("expected {expected} coordinates, found {found}")]
    CoordinateCount { expected: usize, found: usize },
    #[error("vector is not in the span of the coweight generators")]
    NotInSpan,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupType {
    A,
    B,
    D,
}

impl GroupType {
    /// Smallest rank accepted for this type.
    pub fn min_rank(self) -> usize {
        match self {
            GroupType::A => 1,
            GroupType::B => 2,
            GroupType::D => 3,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupType::A => "A",
            GroupType::B => "B",
            GroupType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(GroupType::A),
            "B" | "b" => Ok(GroupType::B),
            "D" | "d" => Ok(GroupType::D),
            other => Err(RootError::UnsupportedType(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Representation {
    /// `Λ^k` of the standard module (type A only).
    Exterior(usize),
    /// The standard module (types B and D).
    Standard,
}

/// Label of a coordinate of `W`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CoordinateLabel {
    /// Plücker coordinate `T_I`.
    Subset(Subset),
    /// Coordinate `X_i` of a standard orthogonal module.
    X(usize),
}

impl fmt::Display for CoordinateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinateLabel::Subset(s) => write!(f, "T{s}"),
            CoordinateLabel::X(i) => write!(f, "X{i}"),
        }
    }
}

/// A supported pair (group, representation) with its ordered coordinate labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpec {
    group_type: GroupType,
    rank: usize,
    rep: Representation,
    labels: Vec<CoordinateLabel>,
}

impl RepSpec {
    pub fn new(group_type: GroupType, rank: usize, rep: Representation) -> Result<Self, RootError> {
        if rank < group_type.min_rank() {
            return Err(RootError::RankOutOfRange { group_type, rank });
        }
        let labels = match (group_type, rep) {
            (GroupType::A, Representation::Exterior(k)) => {
                if k == 0 || k > rank {
                    return Err(RootError::ExteriorPowerOutOfRange { k, rank });
                }
                Subset::all(rank, k).into_iter().map(CoordinateLabel::Subset).collect()
            }
            (GroupType::A, Representation::Standard) => {
                return Self::new(group_type, rank, Representation::Exterior(1));
            }
            (GroupType::B, Representation::Standard) => (0..=2 * rank).map(CoordinateLabel::X).collect(),
            (GroupType::D, Representation::Standard) => (0..2 * rank).map(CoordinateLabel::X).collect(),
            (t, Representation::Exterior(_)) => return Err(RootError::UnsupportedRepresentation(t)),
        };
        Ok(Self {
            group_type,
            rank,
            rep,
            labels,
        })
    }

    /// `Λ^k ℂ^{n+1}` for `SL(n+1)`.
    pub fn type_a(n: usize, k: usize) -> Result<Self, RootError> {
        Self::new(GroupType::A, n, Representation::Exterior(k))
    }

    /// Standard module of `SO(2r+1)`.
    pub fn type_b(r: usize) -> Result<Self, RootError> {
        Self::new(GroupType::B, r, Representation::Standard)
    }

    /// Standard module of `SO(2r)`.
    pub fn type_d(r: usize) -> Result<Self, RootError> {
        Self::new(GroupType::D, r, Representation::Standard)
    }

    pub fn group_type(&self) -> GroupType {
        self.group_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn representation(&self) -> Representation {
        self.rep
    }

    pub fn labels(&self) -> &[CoordinateLabel] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Weight of each coordinate as an integer vector: `e`-coordinates
    /// (length `n+1`) for type A, `ε`-coordinates (length `r`) for B and D.
    fn weight_vectors(&self) -> Vec<Vec<i64>> {
        match self.group_type {
            GroupType::A => self
                .labels
                .iter()
                .map(|l| match l {
                    CoordinateLabel::Subset(s) => {
                        (0..=self.rank).map(|i| i64::from(s.contains(i))).collect()
                    }
                    CoordinateLabel::X(_) => unreachable!("type A uses subset labels"),
                })
                .collect(),
            GroupType::B | GroupType::D => {
                let r = self.rank;
                (0..self.dim())
                    .map(|i| {
                        let mut w = vec![0i64; r];
                        if i < r {
                            w[i] = 1;
                        } else if i < 2 * r {
                            w[i - r] = -1;
                        }
                        w
                    })
                    .collect()
            }
        }
    }

    /// Simple coroots in the dual of the weight basis.
    fn simple_coroots(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        match self.group_type {
            GroupType::A => (1..=r)
                .map(|i| {
                    let mut c = vec![0i64; r + 1];
                    c[i - 1] = 1;
                    c[i] = -1;
                    c
                })
                .collect(),
            GroupType::B | GroupType::D => (0..r)
                .map(|i| {
                    let mut c = vec![0i64; r];
                    if i + 1 < r {
                        c[i] = 1;
                        c[i + 1] = -1;
                    } else if self.group_type == GroupType::B {
                        c[r - 1] = 2;
                    } else {
                        c[r - 2] = 1;
                        c[r - 1] = 1;
                    }
                    c
                })
                .collect(),
        }
    }

    /// Simple roots in the weight basis.
    fn simple_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        match self.group_type {
            GroupType::A => self.simple_coroots(),
            GroupType::B | GroupType::D => (0..r)
                .map(|i| {
                    let mut a = vec![0i64; r];
                    if i + 1 < r {
                        a[i] = 1;
                        a[i + 1] = -1;
                    } else if self.group_type == GroupType::B {
                        a[r - 1] = 1;
                    } else {
                        a[r - 2] = 1;
                        a[r - 1] = 1;
                    }
                    a
                })
                .collect(),
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cartan matrix and the flags of the group realised by the representation
/// (`SL(n+1)`, `SO(2r+1)`, `SO(2r)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub cartan: IntMatrix,
    pub cartan_inv: RatMatrix,
    pub is_adjoint: bool,
    pub is_simply_connected: bool,
}

impl RootSystemData {
    pub fn new(group_type: GroupType, rank: usize) -> Result<Self, RootError> {
        Ok(Self {
            cartan: cartan_matrix(group_type, rank)?,
            cartan_inv: cartan_inverse(group_type, rank)?,
            is_adjoint: group_type == GroupType::B,
            is_simply_connected: group_type == GroupType::A,
        })
    }
}

fn check_rank(group_type: GroupType, rank: usize) -> Result<(), RootError> {
    if rank < group_type.min_rank() {
        Err(RootError::RankOutOfRange { group_type, rank })
    } else {
        Ok(())
    }
}

/// Cartan matrix in the standard numbering.
pub fn cartan_matrix(group_type: GroupType, rank: usize) -> Result<IntMatrix, RootError> {
    check_rank(group_type, rank)?;
    let r = rank;
    let mut c = IntMatrix::zeros(r, r);
    for i in 0..r {
        c.set(i, i, BigInt::from(2));
    }
    let chain = if group_type == GroupType::D { r - 1 } else { r };
    for i in 0..chain.saturating_sub(1) {
        c.set(i, i + 1, BigInt::from(-1));
        c.set(i + 1, i, BigInt::from(-1));
    }
    match group_type {
        GroupType::A => {}
        GroupType::B => c.set(r - 2, r - 1, BigInt::from(-2)),
        GroupType::D => {
            c.set(r - 3, r - 1, BigInt::from(-1));
            c.set(r - 1, r - 3, BigInt::from(-1));
        }
    }
    Ok(c)
}

/// Exact inverse of the Cartan matrix; type A uses `min(i,j) − ij/(n+1)`.
pub fn cartan_inverse(group_type: GroupType, rank: usize) -> Result<RatMatrix, RootError> {
    check_rank(group_type, rank)?;
    if group_type == GroupType::A {
        let n = rank as i64;
        let mut inv = RatMatrix::zeros(rank, rank);
        for i in 1..=n {
            for j in 1..=n {
                let v = BigRational::from_integer(BigInt::from(i.min(j)))
                    - BigRational::new(BigInt::from(i * j), BigInt::from(n + 1));
                inv.set(i as usize - 1, j as usize - 1, v);
            }
        }
        return Ok(inv);
    }
    Ok(cartan_matrix(group_type, rank)?.to_rat().inverse()?)
}

/// Column `i` is `ψ(α_i^∨)` as a diagonal coweight on the coordinates.
pub fn coroot_images(spec: &RepSpec) -> IntMatrix {
    let weights = spec.weight_vectors();
    let coroots = spec.simple_coroots();
    let mut m = IntMatrix::zeros(spec.dim(), spec.rank());
    for (b, w) in weights.iter().enumerate() {
        for (i, c) in coroots.iter().enumerate() {
            m.set(b, i, BigInt::from(dot(w, c)));
        }
    }
    m
}

/// Generators of `L(ψ)`: `ψ(ω_1^∨), …, ψ(ω_rank^∨)` then `τ_W^∨ / dim W`.
pub fn build_lpsi(spec: &RepSpec) -> Result<RatMatrix, RootError> {
    let images = coroot_images(spec).to_rat();
    let inv = cartan_inverse(spec.group_type(), spec.rank())?;
    let omegas = images.mul(&inv)?;
    let dim = spec.dim();
    let mut cols = omegas.columns();
    cols.push(vec![BigRational::new(BigInt::one(), BigInt::from(dim)); dim]);
    Ok(RatMatrix::from_columns(dim, &cols))
}

/// The cocharacter lattice `L(ψ) ∩ ℤ^{dim W}` in canonical Hermite form.
pub fn coweight_lattice(spec: &RepSpec) -> Result<LatticeBasis, RootError> {
    Ok(lattice_intersect(&build_lpsi(spec)?, spec.dim())?)
}

/// A coweight in both the `(ω^∨, τ/dim W)` basis and ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightVector {
    omega_tau: Vec<BigRational>,
    ambient: Vec<BigRational>,
}

impl CoweightVector {
    pub fn from_omega_tau(spec: &RepSpec, coords: Vec<BigRational>) -> Result<Self, RootError> {
        let lpsi = build_lpsi(spec)?;
        if coords.len() != lpsi.cols() {
            return Err(RootError::CoordinateCount {
                expected: lpsi.cols(),
                found: coords.len(),
            });
        }
        let ambient = lpsi.mul_vec(&coords)?;
        Ok(Self {
            omega_tau: coords,
            ambient,
        })
    }

    pub fn from_ambient(spec: &RepSpec, ambient: Vec<BigRational>) -> Result<Self, RootError> {
        let lpsi = build_lpsi(spec)?;
        if ambient.len() != lpsi.rows() {
            return Err(RootError::CoordinateCount {
                expected: lpsi.rows(),
                found: ambient.len(),
            });
        }
        let coords = lpsi.solve(&ambient)?.ok_or(RootError::NotInSpan)?;
        Ok(Self {
            omega_tau: coords,
            ambient,
        })
    }

    /// Integral ambient vector, e.g. a lattice basis column.
    pub fn from_integral_ambient(spec: &RepSpec, ambient: &[BigInt]) -> Result<Self, RootError> {
        Self::from_ambient(
            spec,
            ambient.iter().cloned().map(BigRational::from_integer).collect(),
        )
    }

    pub fn omega_tau(&self) -> &[BigRational] {
        &self.omega_tau
    }

    pub fn ambient(&self) -> &[BigRational] {
        &self.ambient
    }
}

/// Degree of each coordinate under the grading defined by `c`.
pub fn degrees_from_coweight(
    spec: &RepSpec,
    c: &CoweightVector,
) -> Result<BTreeMap<CoordinateLabel, BigInt>, RootError> {
    if c.ambient.len() != spec.dim() {
        return Err(RootError::CoordinateCount {
            expected: spec.dim(),
            found: c.ambient.len(),
        });
    }
    spec.labels
        .iter()
        .zip(&c.ambient)
        .map(|(l, v)| {
            if v.is_integer() {
                Ok((l.clone(), v.to_integer()))
            } else {
                Err(RootError::NonIntegralCoweight(l.clone()))
            }
        })
        .collect()
}

/// Torus weight of a coordinate, as an integer vector in `e` or `ε` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Weight {
    pub basis: WeightBasis,
    pub coords: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WeightBasis {
    /// `e_0, …, e_n` (indices start at 0).
    E,
    /// `ε_1, …, ε_r` (indices start at 1).
    Epsilon,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sym, offset) = match self.basis {
            WeightBasis::E => ("e", 0),
            WeightBasis::Epsilon => ("ε", 1),
        };
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}{sym}{}", i + offset)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `λ_I = Σ_{j∈I} e_j` for type A, `±ε_i` (and `0`) for B and D.
pub fn rep_weights(spec: &RepSpec) -> Vec<(CoordinateLabel, Weight)> {
    let basis = match spec.group_type {
        GroupType::A => WeightBasis::E,
        _ => WeightBasis::Epsilon,
    };
    spec.labels
        .iter()
        .cloned()
        .zip(spec.weight_vectors())
        .map(|(l, coords)| (l, Weight { basis, coords }))
        .collect()
}

/// `binom(n+1, k)`, the dimension of `Λ^k ℂ^{n+1}`.
pub fn exterior_dim(n: usize, k: usize) -> usize {
    binomial(n + 1, k)
}

/// Whether `⟨α_i, α_j^∨⟩` computed from the explicit root and coroot vectors
/// reproduces the hardcoded Cartan matrix.
pub fn cartan_matches_pairing(spec: &RepSpec) -> Result<bool, RootError> {
    let c = cartan_matrix(spec.group_type, spec.rank)?;
    let roots = spec.simple_roots();
    let coroots = spec.simple_coroots();
    Ok((0..spec.rank).all(|i| {
        (0..spec.rank).all(|j| *c.get(i, j) == BigInt::from(dot(&roots[i], &coroots[j])))
    }))
}

/// Closed-form generators of the coweight lattice of a standard module.
///
/// Type B: the images of `ω_j^∨ = ε_1 + ⋯ + ε_j` and `τ`. Type D: `X_i − X_{r+i}`
/// for `i < r` and the vector that is `1` on `X_r, …, X_{2r−1}`. Other
/// specifications return `None`.
pub fn reference_generators(spec: &RepSpec) -> Option<IntMatrix> {
    let (r, dim) = (spec.rank(), spec.dim());
    let mut cols = Vec::new();
    match (spec.group_type(), spec.representation()) {
        (GroupType::B, Representation::Standard) => {
            for j in 1..=r {
                let mut c = vec![BigInt::zero(); dim];
                for i in 0..j {
                    c[i] = BigInt::one();
                    c[r + i] = BigInt::from(-1);
                }
                cols.push(c);
            }
            cols.push(vec![BigInt::one(); dim]);
        }
        (GroupType::D, Representation::Standard) => {
            for i in 0..r {
                let mut c = vec![BigInt::zero(); dim];
                c[i] = BigInt::one();
                c[r + i] = BigInt::from(-1);
                cols.push(c);
            }
            let mut c = vec![BigInt::zero(); dim];
            for x in c.iter_mut().skip(r) {
                *x = BigInt::one();
            }
            cols.push(c);
        }
        _ => return None,
    }
    Some(IntMatrix::from_columns(dim, &cols))
}

/// Sum of ambient coordinates of each coroot image, which vanishes for every
/// supported representation.
pub fn coroot_traces(spec: &RepSpec) -> Vec<BigInt> {
    coroot_images(spec)
        .columns()
        .into_iter()
        .map(|c| c.into_iter().fold(BigInt::zero(), |a, x| a + x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hnf_basis;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(cartan_matrix(GroupType::A, 1).unwrap(), IntMatrix::from_rows(&[vec![2i64]]));
        assert_eq!(
            cartan_matrix(GroupType::A, 2).unwrap(),
            IntMatrix::from_rows(&[vec![2i64, -1], vec![-1, 2]])
        );
        let d5 = cartan_matrix(GroupType::D, 5).unwrap();
        for i in [3usize, 4] {
            assert_eq!(*d5.get(2, i), BigInt::from(-1));
            assert_eq!(*d5.get(i, 2), BigInt::from(-1));
        }
        assert_eq!(*d5.get(3, 4), BigInt::zero());
        assert!(matches!(
            cartan_matrix(GroupType::D, 2),
            Err(RootError::RankOutOfRange { .. })
        ));
        assert!(matches!("E".parse::<GroupType>(), Err(RootError::UnsupportedType(_))));
    }

    #[test]
    fn cartan_inverse_values() {
        let a2 = cartan_inverse(GroupType::A, 2).unwrap();
        assert_eq!(a2.row(0), vec![q(2, 3), q(1, 3)]);
        assert_eq!(a2.row(1), vec![q(1, 3), q(2, 3)]);
        assert_eq!(cartan_inverse(GroupType::A, 1).unwrap().row(0), vec![q(1, 2)]);
        for t in [GroupType::A, GroupType::B, GroupType::D] {
            for r in t.min_rank()..=8 {
                let c = cartan_matrix(t, r).unwrap().to_rat();
                let inv = cartan_inverse(t, r).unwrap();
                assert_eq!(c.mul(&inv).unwrap(), RatMatrix::identity(r), "{t}{r}");
                if t == GroupType::A {
                    assert_eq!(inv, c.inverse().unwrap());
                }
            }
        }
    }

    #[test]
    fn cartan_agrees_with_explicit_roots() {
        for r in 2..=6 {
            assert!(cartan_matches_pairing(&RepSpec::type_b(r).unwrap()).unwrap());
            assert!(cartan_matches_pairing(&RepSpec::type_a(r, 1).unwrap()).unwrap());
        }
        for r in 3..=6 {
            assert!(cartan_matches_pairing(&RepSpec::type_d(r).unwrap()).unwrap());
        }
    }

    #[test]
    fn coroot_image_examples() {
        let a = coroot_images(&RepSpec::type_a(2, 1).unwrap());
        assert_eq!(a, IntMatrix::from_rows(&[vec![1i64, 0], vec![-1, 1], vec![0, -1]]));
        let a = coroot_images(&RepSpec::type_a(2, 2).unwrap());
        assert_eq!(a.column(0), vec![BigInt::zero(), BigInt::one(), BigInt::from(-1)]);
        let d = coroot_images(&RepSpec::type_d(5).unwrap());
        let expected: Vec<BigInt> = [0, 0, 0, 1, 1, 0, 0, 0, -1, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(d.column(4), expected);
    }

    #[test]
    fn coroot_traces_vanish() {
        let mut specs = Vec::new();
        for n in 1..=5 {
            for k in 1..=n {
                specs.push(RepSpec::type_a(n, k).unwrap());
            }
        }
        specs.extend((2..=5).map(|r| RepSpec::type_b(r).unwrap()));
        specs.extend((3..=5).map(|r| RepSpec::type_d(r).unwrap()));
        for s in specs {
            assert!(coroot_traces(&s).iter().all(|t| t.is_zero()));
        }
    }

    #[test]
    fn lpsi_examples() {
        let l = build_lpsi(&RepSpec::type_a(1, 1).unwrap()).unwrap();
        assert_eq!(l.column(0), vec![q(1, 2), q(-1, 2)]);
        assert_eq!(l.column(1), vec![q(1, 2), q(1, 2)]);
        let spec = RepSpec::type_a(4, 2).unwrap();
        let l = build_lpsi(&spec).unwrap();
        assert_eq!(*l.get(0, 0), q(3, 5));
        assert!(l.column(4).iter().all(|x| *x == q(1, 10)));
    }

    #[test]
    fn lpsi_pairing_formula() {
        for n in 1..=5i64 {
            for k in 1..=n {
                let spec = RepSpec::type_a(n as usize, k as usize).unwrap();
                let l = build_lpsi(&spec).unwrap();
                for (row, label) in spec.labels().iter().enumerate() {
                    let CoordinateLabel::Subset(s) = label else { unreachable!() };
                    for j in 1..=n {
                        let below = s.indices().iter().filter(|&&t| (t as i64) < j).count() as i64;
                        let expected = q(-k * j, n + 1) + q(below, 1);
                        assert_eq!(*l.get(row, j as usize - 1), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn projective_space_lattice_is_standard() {
        for n in 1..=6 {
            let l = coweight_lattice(&RepSpec::type_a(n, 1).unwrap()).unwrap();
            assert_eq!(l.basis(), &IntMatrix::identity(n + 1));
        }
    }

    #[test]
    fn type_b_lattice_from_integral_coweights() {
        for r in 2..=5 {
            let spec = RepSpec::type_b(r).unwrap();
            let expected = hnf_basis(&reference_generators(&spec).unwrap());
            assert_eq!(coweight_lattice(&spec).unwrap().basis(), &expected);
        }
    }

    #[test]
    fn type_d_lattice_from_generators() {
        for r in 3..=6 {
            let spec = RepSpec::type_d(r).unwrap();
            let expected = LatticeBasis::from_generators(&reference_generators(&spec).unwrap());
            assert!(coweight_lattice(&spec).unwrap().same_lattice(&expected), "D{r}");
        }
        assert_eq!(reference_generators(&RepSpec::type_a(3, 2).unwrap()), None);
    }

    #[test]
    fn so10_degrees_from_generators() {
        let spec = RepSpec::type_d(5).unwrap();
        let lattice = coweight_lattice(&spec).unwrap();
        let gens = so10_generators();
        assert!(lattice.same_lattice(&LatticeBasis::from_generators(&gens)));
        let a: Vec<i64> = vec![3, -1, 4, 1, 5, 9];
        let amb: Vec<BigInt> = gens
            .mul_vec(&a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
            .unwrap();
        let c = CoweightVector::from_integral_ambient(&spec, &amb).unwrap();
        let deg = degrees_from_coweight(&spec, &c).unwrap();
        for i in 0..5 {
            assert_eq!(deg[&CoordinateLabel::X(i)], BigInt::from(a[i]));
            assert_eq!(deg[&CoordinateLabel::X(5 + i)], BigInt::from(a[5] - a[i]));
        }
    }

    /// Six generators `g_0..g_5` of the SO(10) lattice: `g_i` has `+1` at `X_i`
    /// and `−1` at `X_{5+i}` for `i < 5`; `g_5` is `1` on `X_5..X_9`.
    fn so10_generators() -> IntMatrix {
        reference_generators(&RepSpec::type_d(5).unwrap()).unwrap()
    }

    #[test]
    fn coweight_round_trip_and_errors() {
        let spec = RepSpec::type_a(3, 2).unwrap();
        let coords = vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)];
        let c = CoweightVector::from_omega_tau(&spec, coords.clone()).unwrap();
        let back = CoweightVector::from_ambient(&spec, c.ambient().to_vec()).unwrap();
        assert_eq!(back.omega_tau(), coords.as_slice());
        assert!(matches!(
            degrees_from_coweight(&spec, &c),
            Err(RootError::NonIntegralCoweight(_))
        ));
        let tau = CoweightVector::from_integral_ambient(&spec, &vec![BigInt::one(); 6]).unwrap();
        assert!(degrees_from_coweight(&spec, &tau).unwrap().values().all(|d| d.is_one()));
    }

    #[test]
    fn weights() {
        let spec = RepSpec::type_a(4, 2).unwrap();
        let w = rep_weights(&spec);
        assert_eq!(w[0].1.to_string(), "e0+e1");
        assert_eq!(w.len(), exterior_dim(4, 2));
        let b: Vec<String> = rep_weights(&RepSpec::type_b(2).unwrap())
            .iter()
            .map(|(_, w)| w.to_string())
            .collect();
        assert_eq!(b, ["ε1", "ε2", "-ε1", "-ε2", "0"]);
        assert!(matches!(
            RepSpec::new(GroupType::B, 3, Representation::Exterior(2)),
            Err(RootError::UnsupportedRepresentation(GroupType::B))
        ));
    }
}
