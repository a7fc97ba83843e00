use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::laurent::{BiExp, BiLaurent};
use super::perm::permutation_sign;
use super::series::{assemble, limit_z1};
use super::{check_budget, finish, tie_breaker, HilbertError, HilbertResult, DEFAULT_BUDGET};
use crate::grading::{gamma_basis, invert, GradingParams};
use crate::roots::{build_lpsi, RepSpec};

/// `⟨e_j, μ^∨⟩` for `j = 0..=n` and the central part `d`, read off from
/// `Σ a_i γ_i^∨ = μ^∨ + d·τ^∨`.
fn pairings(p: &GradingParams) -> (Vec<BigRational>, BigRational) {
    let (n, k) = (p.n(), p.k());
    let a: Vec<BigInt> = p.a().iter().map(|&x| BigInt::from(x)).collect();
    let coords = gamma_basis(n, k)
        .expect("valid range")
        .mul_vec(&a)
        .expect("square basis");
    let d = BigRational::new(coords[n].clone(), BigInt::from(binomial(n + 1, k)));
    let spec = RepSpec::type_a(n, 1).expect("type A rank n");
    let lpsi = build_lpsi(&spec).expect("type A data");
    let pe = (0..=n)
        .map(|j| {
            (0..n).fold(BigRational::zero(), |acc, r| {
                acc + lpsi.get(j, r) * BigRational::from_integer(coords[r].clone())
            })
        })
        .collect();
    (pe, d)
}

fn integral(q: &BigRational, what: &str) -> Result<i64, HilbertError> {
    if !q.is_integer() {
        return Err(HilbertError::NonIntegralExponent(format!("{what} = {q}")));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| HilbertError::NonIntegralExponent(format!("{what} out of range")))
}

/// `(⟨σρ − ρ, μ⟩, ⟨σλ, μ⟩ + d)` with `ρ = Σ (n − j) e_j`, `λ = e_0 + … + e_{k−1}`.
fn exponents(sigma: &[usize], k: usize, pe: &[BigRational], d: &BigRational) -> Result<(i64, i64), HilbertError> {
    let inv = invert(sigma);
    let rho = pe
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (j, x)| {
            acc + x * BigRational::from_integer(BigInt::from(j as i64 - inv[j] as i64))
        });
    let lambda = sigma[..k].iter().fold(d.clone(), |acc, &l| acc + &pe[l]);
    Ok((integral(&rho, "<σρ-ρ,μ>")?, integral(&lambda, "<σλ,μ>+d")?))
}

fn diff(pe: &[BigRational], i: usize, j: usize) -> Result<i64, HilbertError> {
    integral(&(&pe[j] - &pe[i]), "<-α,μ>")
}

/// Both sides of `Σ_σ (−1)^σ x^{σρ−ρ} = Π_{α>0} (1 − x^{−α})`, paired with
/// `μ^∨` of `p` and of the tie-breaker.
pub fn weyl_denominator_sides(p: &GradingParams) -> Result<(BiLaurent, BiLaurent), HilbertError> {
    let n = p.n();
    let (pe, d) = pairings(p);
    let (pe_t, d_t) = pairings(&tie_breaker(p));
    let mut sum = BiLaurent::zero();
    for sigma in (0..=n).permutations(n + 1) {
        let (r, _) = exponents(&sigma, p.k(), &pe, &d)?;
        let (r_t, _) = exponents(&sigma, p.k(), &pe_t, &d_t)?;
        sum.add_term(BiExp(r, r_t), BigInt::from(permutation_sign(&sigma)));
    }
    let mut prod = BiLaurent::one();
    for (i, j) in (0..=n).tuple_combinations() {
        prod = &prod * &BiLaurent::one_minus(BiExp(diff(&pe, i, j)?, diff(&pe_t, i, j)?));
    }
    Ok((sum, prod))
}

pub fn weyl_series(p: &GradingParams, order: usize) -> Result<HilbertResult, HilbertError> {
    weyl_series_with_budget(p, order, DEFAULT_BUDGET)
}

/// `P̃ / Q̃` with `P̃ = Σ_{σ∈W} (−1)^σ t^{⟨σρ−ρ,μ⟩} / (1 − t^{⟨σλ,μ⟩+d})` and
/// `Q̃ = Σ_{σ∈W} (−1)^σ t^{⟨σρ−ρ,μ⟩}`, summed over all of `S_{n+1}`.
pub fn weyl_series_with_budget(
    p: &GradingParams,
    order: usize,
    budget: u64,
) -> Result<HilbertResult, HilbertError> {
    check_budget(p, budget)?;
    let (n, k) = (p.n(), p.k());
    let (pe, d) = pairings(p);
    let (pe_t, d_t) = pairings(&tie_breaker(p));
    let mut groups: BTreeMap<BiExp, BiLaurent> = BTreeMap::new();
    let mut q = BiLaurent::zero();
    for sigma in (0..=n).permutations(n + 1) {
        let sign = BigInt::from(permutation_sign(&sigma));
        let (r, l) = exponents(&sigma, k, &pe, &d)?;
        let (r_t, l_t) = exponents(&sigma, k, &pe_t, &d_t)?;
        groups
            .entry(BiExp(l, l_t))
            .or_default()
            .add_term(BiExp(r, r_t), sign.clone());
        q.add_term(BiExp(r, r_t), sign);
    }
    groups.retain(|_, f| !f.is_zero());
    let (num, den) = assemble(&groups, &q);
    let (n1, d1) = limit_z1(&num, &den)?;
    finish(p, &n1, &d1, order)
}
