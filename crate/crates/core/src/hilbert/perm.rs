use crate::grading::invert;

/// `(−1)^σ` via the cycle decomposition.
pub fn permutation_sign(sigma: &[usize]) -> i8 {
    let mut seen = vec![false; sigma.len()];
    let mut even_cycles = 0usize;
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = sigma[i];
            len += 1;
        }
        if len.is_multiple_of(2) {
            even_cycles += 1;
        }
    }
    if even_cycles.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `f(σ) = Σ_i (i − σ^{-1}(i))·a_i`.
pub fn f_sigma(sigma: &[usize], a: &[i64]) -> i64 {
    let inv = invert(sigma);
    a.iter()
        .enumerate()
        .map(|(i, &ai)| (i as i64 - inv[i] as i64) * ai)
        .sum()
}

/// A permutation with its sign and `f`-values at `a` and at the tie-breaker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermTerm {
    pub sigma: Vec<usize>,
    pub sign: i8,
    pub f_value: i64,
    pub f_tie: i64,
}

impl SignedPermTerm {
    pub fn new(sigma: Vec<usize>, a: &[i64]) -> Self {
        let delta: Vec<i64> = (0..sigma.len() as i64).collect();
        Self {
            sign: permutation_sign(&sigma),
            f_value: f_sigma(&sigma, a),
            f_tie: f_sigma(&sigma, &delta),
            sigma,
        }
    }
}
