use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;

use super::laurent::{BiExp, BiLaurent};
use super::perm::SignedPermTerm;
use super::series::{assemble, limit_z1};
use super::{check_budget, finish, tie_breaker, HilbertError, HilbertResult, DEFAULT_BUDGET};
use crate::grading::{compose, degree_of, GradingParams};
use crate::subset::Subset;

/// `S_I = {σ : σ({0, …, k−1}) = I}` as `σ_I ∘ Stab({0, …, k−1})`, where `σ_I`
/// sends `0..k` onto `I` and `k..=n` onto its complement, both in order.
pub fn signed_coset(n: usize, subset: &Subset) -> Vec<Vec<usize>> {
    let k = subset.len();
    let sigma_i: Vec<usize> = subset
        .indices()
        .iter()
        .copied()
        .chain(subset.complement(n).indices().iter().copied())
        .collect();
    let heads = (0..k).permutations(k);
    let tails: Vec<Vec<usize>> = (k..=n).permutations(n + 1 - k).collect();
    heads
        .cartesian_product(tails.iter())
        .map(|(h, t)| {
            let stab: Vec<usize> = h.into_iter().chain(t.iter().copied()).collect();
            compose(&sigma_i, &stab)
        })
        .collect()
}

pub fn closed_series(p: &GradingParams, order: usize) -> Result<HilbertResult, HilbertError> {
    closed_series_with_budget(p, order, DEFAULT_BUDGET)
}

/// `P(Y)/Q(Y)` with `P = Σ_I F(I)/(1 − t^{a(I)})`, `F(I) = Σ_{σ∈S_I} (−1)^σ t^{f(σ)}`
/// and `Q = Π_{i<j} (1 − t^{a_j − a_i})`.
pub fn closed_series_with_budget(
    p: &GradingParams,
    order: usize,
    budget: u64,
) -> Result<HilbertResult, HilbertError> {
    check_budget(p, budget)?;
    let (n, k, a) = (p.n(), p.k(), p.a());
    let delta = tie_breaker(p);
    let mut groups: BTreeMap<BiExp, BiLaurent> = BTreeMap::new();
    for subset in Subset::all(n, k) {
        let e = BiExp(degree_of(p, &subset), degree_of(&delta, &subset));
        let f = groups.entry(e).or_default();
        for sigma in signed_coset(n, &subset) {
            let term = SignedPermTerm::new(sigma, a);
            f.add_term(BiExp(term.f_value, term.f_tie), BigInt::from(term.sign));
        }
    }
    groups.retain(|_, f| !f.is_zero());
    let q = (0..=n)
        .tuple_combinations()
        .fold(BiLaurent::one(), |acc, (i, j)| {
            &acc * &BiLaurent::one_minus(BiExp(a[j] - a[i], (j - i) as i64))
        });
    let (num, den) = assemble(&groups, &q);
    let (n1, d1) = limit_z1(&num, &den)?;
    finish(p, &n1, &d1, order)
}
