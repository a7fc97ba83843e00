//! Rational-function plumbing shared by both formula paths: assembly over a
//! common denominator, the `z → 1` limit, expansion and numerator recovery.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{BiExp, BiLaurent, LaurentPoly};
use super::HilbertError;

/// Safety margin required beyond `Σ deg T_I` by [`recover_numerator`].
pub const RECOVERY_MARGIN: usize = 5;

/// `Σ_g F_g / (1 − x^{e_g})` divided by `q`, as one fraction `N / D` with
/// `N = Σ_g F_g Π_{h≠g} (1 − x^{e_h})` and `D = q · Π_g (1 − x^{e_g})`.
pub(crate) fn assemble(groups: &BTreeMap<BiExp, BiLaurent>, q: &BiLaurent) -> (BiLaurent, BiLaurent) {
    let mut num = BiLaurent::zero();
    let mut prod = BiLaurent::one();
    for (e, f) in groups {
        let factor = BiLaurent::one_minus(*e);
        num = &(&num * &factor) + &(f * &prod);
        prod = &prod * &factor;
    }
    (num, q * &prod)
}

/// Cancels powers of `(z − 1)` while `den(·, 1)` vanishes, then sets `z = 1`.
pub fn limit_z1(num: &BiLaurent, den: &BiLaurent) -> Result<(LaurentPoly, LaurentPoly), HilbertError> {
    if den.is_zero() {
        return Err(HilbertError::ZeroDenominator);
    }
    let (mut num, mut den) = (num.clone(), den.clone());
    while den.at_z1().is_zero() {
        den = den.div_z_minus_one().expect("vanishing at z = 1 implies divisibility");
        num = num.div_z_minus_one().ok_or(HilbertError::LimitDoesNotExist)?;
    }
    Ok((num.at_z1(), den.at_z1()))
}

/// `d_0, …, d_order` of `num / den`, after shifting `den` to start at `t^0`.
pub fn expand(num: &LaurentPoly, den: &LaurentPoly, order: usize) -> Result<Vec<BigInt>, HilbertError> {
    let lo = den.min_degree().ok_or(HilbertError::ZeroDenominator)?;
    let (num, den) = (num.shift(-lo), den.shift(-lo));
    let c0 = den.coeff(0);
    if !c0.abs().is_one() {
        return Err(HilbertError::NonInvertibleDenominator(c0));
    }
    let (num, den) = (num.scale(&c0), den.scale(&c0));
    if let Some(m) = num.min_degree().filter(|&m| m < 0) {
        return Err(HilbertError::NegativeDegree(m));
    }
    let dtop = den.max_degree().unwrap_or(0) as usize;
    let den_dense = den.dense(dtop + 1);
    let mut d: Vec<BigInt> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut v = num.coeff(m as i64);
        for j in 1..=dtop.min(m) {
            if !den_dense[j].is_zero() {
                v -= &den_dense[j] * &d[m - j];
            }
        }
        d.push(v);
    }
    Ok(d)
}

/// `Π_I (1 − t^{d_I})`.
pub fn hilbert_serre_denominator(degrees: &[i64]) -> LaurentPoly {
    degrees
        .iter()
        .fold(LaurentPoly::one(), |acc, &d| &acc * &LaurentPoly::one_minus(d))
}

/// Convolves `series` with `Π_I (1 − t^{d_I})` and checks that the result
/// terminates at degree `Σ d_I` inside the window.
pub fn recover_numerator(series: &[BigInt], degrees: &[i64]) -> Result<LaurentPoly, HilbertError> {
    if let Some(&d) = degrees.iter().find(|&&d| d <= 0) {
        return Err(HilbertError::NonPositiveDegree(d));
    }
    let top: usize = degrees.iter().map(|&d| d as usize).sum();
    if series.len() <= top + RECOVERY_MARGIN {
        return Err(HilbertError::WindowTooShort {
            needed: top + RECOVERY_MARGIN + 1,
            available: series.len(),
        });
    }
    let den = hilbert_serre_denominator(degrees);
    let len = series.len();
    let mut conv = vec![BigInt::zero(); len];
    for (e, c) in den.terms() {
        let e = *e as usize;
        for i in 0..len.saturating_sub(e) {
            conv[i + e] += c * &series[i];
        }
    }
    if let Some(j) = (top + 1..len).find(|&j| !conv[j].is_zero()) {
        return Err(HilbertError::NonPolynomialTail { degree: j });
    }
    conv.truncate(top + 1);
    Ok(LaurentPoly::from_dense(&conv))
}

/// `Φ_m` for `m ≥ 2` and `1 − t` for `m = 1`; every factor has constant term 1.
fn cyclotomic(m: usize, cache: &mut BTreeMap<usize, LaurentPoly>) -> LaurentPoly {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    let p = if m == 1 {
        LaurentPoly::one_minus(1)
    } else {
        let mut p = LaurentPoly::one_minus(m as i64);
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            p = p.div_exact(&cyclotomic(d, cache)).expect("cyclotomic factor");
        }
        p
    };
    cache.insert(m, p.clone());
    p
}

/// Cancels common factors `Φ_m` (with `Φ_1 = 1 − t`) from `num / den`,
/// where `den` is a product of such factors up to sign.
pub fn lowest_terms(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let mut cache = BTreeMap::new();
    let (mut num, mut den) = (num.clone(), den.clone());
    let top = den.max_degree().unwrap_or(0).max(0) as usize;
    for m in 1..=top {
        let phi = cyclotomic(m, &mut cache);
        while den.max_degree().unwrap_or(0) > 0 && !num.is_zero() {
            match (num.div_exact(&phi), den.div_exact(&phi)) {
                (Some(q), Some(r)) => {
                    num = q;
                    den = r;
                }
                _ => break,
            }
        }
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn bi(terms: &[(i64, i64, i64)]) -> BiLaurent {
        BiLaurent::from_terms(terms.iter().map(|&(t, z, c)| (BiExp(t, z), BigInt::from(c))))
    }

    #[test]
    fn expansion_examples() {
        let one = LaurentPoly::one();
        assert_eq!(expand(&one, &uni(&[(0, 1), (1, -1)]), 4).unwrap(), ints(&[1; 5]));
        let den = hilbert_serre_denominator(&[1; 6]);
        let num = uni(&[(0, 1), (2, -1)]);
        assert_eq!(expand(&num, &den, 3).unwrap(), ints(&[1, 6, 20, 50]));
        let den = hilbert_serre_denominator(&[1, 2, 3]);
        assert_eq!(expand(&one, &den, 6).unwrap(), ints(&[1, 1, 2, 3, 4, 5, 7]));
        // a shifted, negated denominator is normalised first
        let den = uni(&[(2, -1), (3, 1)]);
        assert_eq!(expand(&uni(&[(2, -1)]), &den, 2).unwrap(), ints(&[1, 1, 1]));
        assert!(matches!(
            expand(&one, &uni(&[(0, 2), (1, 1)]), 2),
            Err(HilbertError::NonInvertibleDenominator(_))
        ));
        assert!(matches!(
            expand(&uni(&[(-1, 1)]), &one, 2),
            Err(HilbertError::NegativeDegree(-1))
        ));
    }

    #[test]
    fn expansion_round_trip() {
        let den = hilbert_serre_denominator(&[1, 2, 2, 5]);
        let num = uni(&[(0, 1), (3, 2), (4, -1)]);
        let s = expand(&num, &den, 30).unwrap();
        let back = (&LaurentPoly::from_dense(&s) * &den).dense(31);
        assert_eq!(back, num.dense(31));
    }

    #[test]
    fn limits() {
        let (n, d) = limit_z1(&bi(&[(0, 0, 1), (0, 1, -1)]), &bi(&[(0, 0, 1), (0, 1, -1)])).unwrap();
        assert_eq!((n, d), (uni(&[(0, -1)]), uni(&[(0, -1)])));
        // (1 − tz)(1 − z) / (1 − z)^2 has a pole at z = 1
        let num = bi(&[(0, 0, 1), (0, 1, -1), (1, 1, -1), (1, 2, 1)]);
        let den = bi(&[(0, 0, 1), (0, 1, -2), (0, 2, 1)]);
        assert!(matches!(limit_z1(&num, &den), Err(HilbertError::LimitDoesNotExist)));
        // (1 − tz)(1 − z)^2 / (1 − z)^2
        let num = &num * &bi(&[(0, 0, 1), (0, 1, -1)]);
        let (n, d) = limit_z1(&num, &den).unwrap();
        assert_eq!((n, d), (uni(&[(0, 1), (1, -1)]), uni(&[(0, 1)])));
        assert!(matches!(
            limit_z1(&bi(&[(0, 0, 1)]), &bi(&[(0, 0, 1), (0, 1, -1)])),
            Err(HilbertError::LimitDoesNotExist)
        ));
    }

    #[test]
    fn recovery() {
        let den = hilbert_serre_denominator(&[1; 6]);
        let num = uni(&[(0, 1), (2, -1)]);
        let s = expand(&num, &den, 20).unwrap();
        assert_eq!(recover_numerator(&s, &[1; 6]).unwrap(), num);
        assert!(matches!(
            recover_numerator(&s[..8], &[1; 6]),
            Err(HilbertError::WindowTooShort { .. })
        ));
        // pretend the quadric is a complete intersection of two quadrics
        let wrong = expand(&LaurentPoly::one(), &den, 20).unwrap();
        assert!(matches!(
            recover_numerator(&wrong, &[1; 5]),
            Err(HilbertError::NonPolynomialTail { .. })
        ));
    }

    #[test]
    fn reduction_to_lowest_terms() {
        // (1 − t^2) / (1 − t)^6 = (1 + t) / (1 − t)^5
        let (n, d) = lowest_terms(&uni(&[(0, 1), (2, -1)]), &hilbert_serre_denominator(&[1; 6]));
        assert_eq!(n, uni(&[(0, 1), (1, 1)]));
        assert_eq!(d, hilbert_serre_denominator(&[1; 5]));
        let (n, d) = lowest_terms(&uni(&[(0, 1)]), &hilbert_serre_denominator(&[2, 3]));
        assert_eq!(n, LaurentPoly::one());
        assert_eq!(d, hilbert_serre_denominator(&[2, 3]));
    }
}
