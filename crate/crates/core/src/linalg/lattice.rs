//! Sublattices of `ℤ^m` and intersection of a rational lattice with `ℤ^m`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::normal_form::{hnf_basis, hnf_with_rank, solve_integral};
use super::{IntMatrix, LinalgError, RatMatrix};

/// A sublattice of `ℤ^ambient_dim`, given by linearly independent basis columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient_dim: usize,
    basis: IntMatrix,
    canonical: bool,
}

impl LatticeBasis {
    /// The lattice spanned by the columns of `gens`, in canonical Hermite form.
    pub fn from_generators(gens: &IntMatrix) -> Self {
        Self {
            ambient_dim: gens.rows(),
            basis: hnf_basis(gens),
            canonical: true,
        }
    }

    /// Wraps columns already known to be independent, without normalising.
    pub fn from_independent_columns(basis: IntMatrix) -> Self {
        Self {
            ambient_dim: basis.rows(),
            basis,
            canonical: false,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn canonicalize(&self) -> Self {
        if self.canonical {
            self.clone()
        } else {
            Self::from_generators(&self.basis)
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool, LinalgError> {
        Ok(solve_integral(&self.basis, v)?.is_some())
    }

    /// Equality of lattices (not of the chosen bases).
    pub fn same_lattice(&self, other: &LatticeBasis) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.canonicalize().basis == other.canonicalize().basis
    }
}

/// `(ℤ-span of the columns of gens) ∩ ℤ^ambient_dim`, as a canonical basis.
///
/// Method: with `D` the common denominator and `B = D·gens`, an integral
/// combination `gens·x` is integral iff `B·x ≡ 0 (mod D)`. Those `x` are the
/// projection of the kernel of `[B | D·I]`, read off from the unimodular
/// transform of its Hermite form. The images `B·x / D` generate the
/// intersection; a final Hermite reduction gives the canonical basis.
pub fn lattice_intersect(gens: &RatMatrix, ambient_dim: usize) -> Result<LatticeBasis, LinalgError> {
    if gens.cols() == 0 {
        return Err(LinalgError::EmptyGenerators);
    }
    if gens.rows() != ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            left: (ambient_dim, 0),
            right: (gens.rows(), gens.cols()),
        });
    }
    let d = gens.common_denominator();
    let b = gens.scaled_to_int(&d).expect("common denominator clears all entries");
    let r = b.cols();
    let m = b.rows();

    let generators = if d == BigInt::from(1) {
        b
    } else {
        let mut scaled_id = IntMatrix::zeros(m, m);
        for i in 0..m {
            scaled_id.set(i, i, d.clone());
        }
        let stacked = b.hstack(&scaled_id)?;
        let (_, u, pivots) = hnf_with_rank(&stacked);
        let kernel_cols: Vec<Vec<BigInt>> = (pivots.len()..stacked.cols())
            .map(|c| u.column(c)[..r].to_vec())
            .collect();
        let images: Vec<Vec<BigInt>> = kernel_cols
            .iter()
            .map(|x| {
                b.mul_vec(x)
                    .expect("shape")
                    .into_iter()
                    .map(|v| {
                        let (q, rem) = v.div_rem(&d);
                        debug_assert!(rem.is_zero());
                        q
                    })
                    .collect()
            })
            .collect();
        if images.is_empty() {
            IntMatrix::zeros(m, 0)
        } else {
            IntMatrix::from_columns(m, &images)
        }
    };
    Ok(LatticeBasis::from_generators(&generators))
}
