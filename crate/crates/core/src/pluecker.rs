//! Quadratic Plücker relations and two independent counts of the graded
//! pieces of the homogeneous coordinate ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::grading::{check_range, degrees, is_positive, DegreeTable, GradingError, GradingParams};
use crate::subset::Subset;

/// Plücker coordinate labels are strictly increasing index tuples.
pub type SubsetIndex = Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlueckerError {
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("degree table has no entry for T{0}")]
    MissingIndex(Subset),
    #[error("grading is not positive")]
    NotPositive,
    #[error("degree {degree} has {monomials} monomials, above the cutoff {cutoff}")]
    TooLarge {
        degree: u64,
        monomials: usize,
        cutoff: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RelationTerm {
    pub coefficient: i64,
    pub left: Subset,
    pub right: Subset,
}

/// `Σ c · T_left · T_right = 0`, canonicalised: `left ≤ right` in each term,
/// terms sorted, coefficients coprime, the first coefficient positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PlueckerRelation {
    terms: Vec<RelationTerm>,
}

impl PlueckerRelation {
    /// Canonical form of `Σ c·T_x·T_y`; `None` if everything cancels.
    pub fn canonical(raw: impl IntoIterator<Item = (i64, Subset, Subset)>) -> Option<Self> {
        let mut merged: BTreeMap<(Subset, Subset), i64> = BTreeMap::new();
        for (c, x, y) in raw {
            let key = if x <= y { (x, y) } else { (y, x) };
            *merged.entry(key).or_insert(0) += c;
        }
        merged.retain(|_, c| *c != 0);
        let content = merged.values().fold(0i64, |g, c| g.gcd(c));
        if content == 0 {
            return None;
        }
        let first = *merged.values().next().expect("nonempty");
        let scale = if first < 0 { -content } else { content };
        let terms = merged
            .into_iter()
            .map(|((left, right), c)| RelationTerm {
                coefficient: c / scale,
                left,
                right,
            })
            .collect();
        Some(Self { terms })
    }

    pub fn terms(&self) -> &[RelationTerm] {
        &self.terms
    }

    /// Combined index multiset `left ⊎ right`, sorted.
    pub fn index_multiset(term: &RelationTerm) -> Vec<usize> {
        term.left
            .indices()
            .iter()
            .chain(term.right.indices())
            .copied()
            .sorted()
            .collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.terms
            .iter()
            .map(Self::index_multiset)
            .all_equal()
    }
}

impl fmt::Display for PlueckerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let sign = if t.coefficient < 0 { "-" } else if i > 0 { "+" } else { "" };
            let pad = if i > 0 { " " } else { "" };
            let mag = t.coefficient.abs();
            let coeff = if mag == 1 { String::new() } else { mag.to_string() };
            write!(f, "{pad}{sign}{pad}{coeff}T{}*T{}", t.left, t.right)?;
        }
        Ok(())
    }
}

/// Canonicalised quadratic shuffle relations
/// `Σ_l (−1)^l T_{A ∪ b_l} T_{B ∖ b_l}` over `(k−1)`-subsets `A` and
/// `(k+1)`-subsets `B`, deduplicated and sorted.
pub fn relations(n: usize, k: usize) -> Result<Vec<PlueckerRelation>, PlueckerError> {
    check_range(n, k)?;
    let mut out = std::collections::BTreeSet::new();
    for a in Subset::all(n, k - 1) {
        for b in Subset::all(n, k + 1) {
            let raw = b.indices().iter().enumerate().filter_map(|(l, &bl)| {
                if a.contains(bl) {
                    return None;
                }
                let above = a.indices().iter().filter(|&&x| x > bl).count();
                let sign = if (l + above) % 2 == 0 { 1 } else { -1 };
                let mut left = a.indices().to_vec();
                left.push(bl);
                let left = Subset::from_unsorted(left).expect("bl not in A");
                let right = Subset::new(b.indices().iter().copied().filter(|&x| x != bl).collect())
                    .expect("subsequence of a sorted tuple");
                Some((sign, left, right))
            });
            if let Some(rel) = PlueckerRelation::canonical(raw.collect::<Vec<_>>()) {
                out.insert(rel);
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationDegree {
    pub degree: i64,
    pub quasi_homogeneous: bool,
}

/// Degree of each relation (of its first term) and whether all terms agree.
pub fn relation_degrees(
    rels: &[PlueckerRelation],
    table: &DegreeTable,
) -> Result<Vec<RelationDegree>, PlueckerError> {
    let deg = |s: &Subset| table.get(s).ok_or_else(|| PlueckerError::MissingIndex(s.clone()));
    rels.iter()
        .map(|r| {
            let ds: Vec<i64> = r
                .terms()
                .iter()
                .map(|t| Ok(deg(&t.left)? + deg(&t.right)?))
                .collect::<Result<_, PlueckerError>>()?;
            Ok(RelationDegree {
                degree: ds[0],
                quasi_homogeneous: ds.iter().all_equal(),
            })
        })
        .collect()
}

/// Relation degrees as linear forms in `a`: entry `[r][i]` is the coefficient
/// of `a_i` in the degree of relation `r`.
pub fn symbolic_relation_degrees(n: usize, k: usize) -> Result<Vec<Vec<i64>>, PlueckerError> {
    let rels = relations(n, k)?;
    let mut forms = vec![vec![0i64; n + 1]; rels.len()];
    for i in 0..=n {
        let mut a = vec![0i64; n + 1];
        a[i] = 1;
        let table = degrees(&GradingParams::new(n, k, a)?);
        for (r, d) in relation_degrees(&rels, &table)?.into_iter().enumerate() {
            forms[r][i] = d.degree;
        }
    }
    Ok(forms)
}

/// `d_0, …, d_{m_max}` where `d_m` counts multichains `I_1 ≤ ⋯ ≤ I_r` in the
/// componentwise order with `Σ deg T_{I_j} = m` (standard monomials).
///
/// `cnt(J, m)` counts chains starting at `J`:
/// `cnt(J, m) = [m = d_J] + Σ_{J' ≥ J} cnt(J', m − d_J)`.
pub fn standard_monomial_count(p: &GradingParams, m_max: usize) -> Result<Vec<BigInt>, PlueckerError> {
    if !is_positive(p) {
        return Err(PlueckerError::NotPositive);
    }
    let table = degrees(p);
    let subsets: Vec<&Subset> = table.as_map().keys().collect();
    let deg: Vec<usize> = table.values().iter().map(|&d| d as usize).collect();
    let above: Vec<Vec<usize>> = subsets
        .iter()
        .map(|j| {
            (0..subsets.len())
                .filter(|&i| j.le_componentwise(subsets[i]))
                .collect()
        })
        .collect();
    let s = subsets.len();
    let mut cnt = vec![vec![BigInt::zero(); s]; m_max + 1];
    let mut out = vec![BigInt::zero(); m_max + 1];
    out[0] = BigInt::one();
    for m in 1..=m_max {
        for j in 0..s {
            let dj = deg[j];
            if dj > m {
                continue;
            }
            let mut c = if dj == m { BigInt::one() } else { BigInt::zero() };
            if dj < m {
                for &i in &above[j] {
                    c += &cnt[m - dj][i];
                }
            }
            cnt[m][j] = c;
        }
        out[m] = cnt[m].iter().sum();
    }
    Ok(out)
}

/// Default cutoff on the number of degree-`m` monomials for
/// [`ideal_dimension_oracle`].
pub const IDEAL_ORACLE_CUTOFF: usize = 5000;

/// Multisets of variable indices (sorted) with the given weighted degree.
fn monomials_of_degree(weights: &[u64], m: u64, limit: usize) -> Option<Vec<Vec<usize>>> {
    fn rec(
        weights: &[u64],
        start: usize,
        left: u64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        if left == 0 {
            out.push(cur.clone());
            return out.len() <= limit;
        }
        for v in start..weights.len() {
            if weights[v] <= left {
                cur.push(v);
                let ok = rec(weights, v, left - weights[v], cur, out, limit);
                cur.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut out = Vec::new();
    rec(weights, 0, m, &mut Vec::new(), &mut out, limit).then_some(out)
}

/// `dim (ℚ[T_I] / (relations))_m` by exact rank of the degree-`m` span of
/// `monomial · relation`; refuses more than `cutoff` monomials.
pub fn ideal_dimension_oracle(p: &GradingParams, m: u64, cutoff: usize) -> Result<BigInt, PlueckerError> {
    if !is_positive(p) {
        return Err(PlueckerError::NotPositive);
    }
    let table = degrees(p);
    let subsets: Vec<Subset> = table.as_map().keys().cloned().collect();
    let index: HashMap<&Subset, usize> = subsets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let weights: Vec<u64> = table.values().iter().map(|&d| d as u64).collect();
    let too_large = |count| PlueckerError::TooLarge {
        degree: m,
        monomials: count,
        cutoff,
    };
    let monos = monomials_of_degree(&weights, m, cutoff).ok_or_else(|| too_large(cutoff + 1))?;
    let mono_index: HashMap<&Vec<usize>, usize> = monos.iter().enumerate().map(|(i, v)| (v, i)).collect();

    let rels = relations(p.n(), p.k())?;
    let rel_data: Vec<(u64, Vec<(i64, usize, usize)>)> = relation_degrees(&rels, &table)?
        .into_iter()
        .zip(&rels)
        .map(|(d, r)| {
            let terms = r
                .terms()
                .iter()
                .map(|t| (t.coefficient, index[&t.left], index[&t.right]))
                .collect();
            (d.degree as u64, terms)
        })
        .collect();

    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for (rd, terms) in &rel_data {
        if *rd > m {
            continue;
        }
        let cofactors = monomials_of_degree(&weights, m - rd, cutoff).ok_or_else(|| too_large(cutoff + 1))?;
        for cof in cofactors {
            let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
            for &(c, x, y) in terms {
                let mut mono = cof.clone();
                mono.push(x);
                mono.push(y);
                mono.sort_unstable();
                let col = mono_index[&mono];
                *row.entry(col).or_insert_with(BigRational::zero) += BigRational::from_integer(BigInt::from(c));
            }
            row.retain(|_, v| !v.is_zero());
            insert_reduced(&mut pivots, row);
        }
    }
    Ok(BigInt::from(monos.len() - pivots.len()))
}

/// Reduces `row` against the echelon rows keyed by pivot column and stores
/// the remainder, normalised to pivot 1, if it is nonzero.
fn insert_reduced(
    pivots: &mut BTreeMap<usize, BTreeMap<usize, BigRational>>,
    mut row: BTreeMap<usize, BigRational>,
) {
    loop {
        let Some((&col, lead)) = row.iter().next() else {
            return;
        };
        let lead = lead.clone();
        match pivots.get(&col) {
            Some(prow) => {
                for (c, v) in prow {
                    let e = row.entry(*c).or_insert_with(BigRational::zero);
                    *e -= &lead * v;
                }
                row.retain(|_, v| !v.is_zero());
            }
            None => {
                let inv = lead.recip();
                for v in row.values_mut() {
                    *v *= &inv;
                }
                pivots.insert(col, row);
                return;
            }
        }
    }
}
