use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent monoid of a Laurent polynomial ring.
pub trait Exponent: Copy + Ord + fmt::Debug + Add<Output = Self> {
    fn zero() -> Self;
}

impl Exponent for i64 {
    fn zero() -> Self {
        0
    }
}

/// `(t-exponent, z-exponent)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiExp(pub i64, pub i64);

impl Add for BiExp {
    type Output = BiExp;

    fn add(self, rhs: BiExp) -> BiExp {
        BiExp(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl Exponent for BiExp {
    fn zero() -> Self {
        BiExp(0, 0)
    }
}

/// Laurent polynomial with arbitrary-precision integer coefficients; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

/// Univariate Laurent polynomial in `t`.
pub type LaurentPoly = Laurent<i64>;
/// Laurent polynomial in `t` and `z`.
pub type BiLaurent = Laurent<BiExp>;

impl<E: Exponent> Default for Laurent<E> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Exponent> Laurent<E> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), E::zero())
    }

    pub fn monomial(c: BigInt, e: E) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `1 − x^e`.
    pub fn one_minus(e: E) -> Self {
        let mut p = Self::one();
        p.add_term(e, BigInt::from(-1));
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (E, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: E, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: E) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn shift(&self, by: E) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e + by, x.clone())).collect(),
        }
    }

    /// Gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self − c·x^e·other`, in place.
    fn sub_scaled_shifted(&mut self, other: &Self, c: &BigInt, e: E) {
        for (oe, oc) in &other.terms {
            self.add_term(*oe + e, -(oc * c));
        }
    }
}

impl<E: Exponent> Add for &Laurent<E> {
    type Output = Laurent<E>;

    fn add(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<E: Exponent> Sub for &Laurent<E> {
    type Output = Laurent<E>;

    fn sub(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<E: Exponent> Neg for &Laurent<E> {
    type Output = Laurent<E>;

    fn neg(self) -> Laurent<E> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<E: Exponent> Mul for &Laurent<E> {
    type Output = Laurent<E>;

    fn mul(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut acc: BTreeMap<E, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(*e1 + *e2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Laurent { terms: acc }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<E: Exponent> $tr for Laurent<E> {
            type Output = Laurent<E>;
            fn $m(self, rhs: Laurent<E>) -> Laurent<E> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl LaurentPoly {
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficients of `t^0 .. t^{len−1}`.
    pub fn dense(&self, len: usize) -> Vec<BigInt> {
        (0..len as i64).map(|i| self.coeff(i)).collect()
    }

    pub fn from_dense(coeffs: &[BigInt]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The quotient `self / d` if it is a Laurent polynomial with integer
    /// coefficients.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (d.min_degree()?, d.max_degree()?);
        let dlead = d.coeff(dhi);
        let floor = self.min_degree().unwrap_or(0) - dlo;
        let mut rem = self.clone();
        let mut q = LaurentPoly::zero();
        while let Some(rhi) = rem.max_degree() {
            if rhi - dhi < floor {
                return None;
            }
            let (c, r) = rem.coeff(rhi).div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let e = rhi - dhi;
            rem.sub_scaled_shifted(d, &c, e);
            q.add_term(e, c);
        }
        Some(q)
    }
}

impl BiLaurent {
    /// Specialisation `z = 1`.
    pub fn at_z1(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (e.0, c.clone())))
    }

    /// Specialisation `t = 1`, reindexed so that exponents are `z`-exponents.
    pub fn at_t1(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (e.1, c.clone())))
    }

    /// `self / (z − 1)` if exact.
    pub fn div_z_minus_one(&self) -> Option<BiLaurent> {
        let mut slices: BTreeMap<i64, Vec<(i64, &BigInt)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            slices.entry(e.0).or_default().push((e.1, c));
        }
        let mut out = BiLaurent::zero();
        for (t, zs) in slices {
            let lo = zs[0].0;
            let hi = zs[zs.len() - 1].0;
            let coeffs: BTreeMap<i64, &BigInt> = zs.into_iter().collect();
            // c_j = q_{j−1} − q_j, so q_{j−1} = c_j + q_j from the top down
            let mut q = BigInt::zero();
            for j in (lo..=hi).rev() {
                if let Some(c) = coeffs.get(&j) {
                    q += *c;
                }
                if !q.is_zero() {
                    out.add_term(BiExp(t, j - 1), q.clone());
                }
            }
            if !q.is_zero() {
                return None;
            }
        }
        Some(out)
    }
}

fn fmt_terms<E: Exponent>(
    p: &Laurent<E>,
    f: &mut fmt::Formatter<'_>,
    mono: impl Fn(&E) -> String,
) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, (e, c)) in p.terms.iter().enumerate() {
        let m = mono(e);
        let neg = c.is_negative();
        let mag = c.abs();
        let body = match (m.is_empty(), mag.is_one()) {
            (true, _) => mag.to_string(),
            (false, true) => m,
            (false, false) => format!("{mag}*{m}"),
        };
        match (i, neg) {
            (0, false) => write!(f, "{body}")?,
            (0, true) => write!(f, "-{body}")?,
            (_, false) => write!(f, " + {body}")?,
            (_, true) => write!(f, " - {body}")?,
        }
    }
    Ok(())
}

fn power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self, f, |&e| power("t", e))
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self, f, |e| {
            let (t, z) = (power("t", e.0), power("z", e.1));
            match (t.is_empty(), z.is_empty()) {
                (false, false) => format!("{t}*{z}"),
                _ => format!("{t}{z}"),
            }
        })
    }
}

impl<E: Exponent> fmt::Debug for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
