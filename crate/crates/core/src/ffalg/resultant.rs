//! Fraction-free determinants and Sylvester resultants over any [`Ring`].

use super::multipoly::MultiPoly;
use super::ring::{Coeff, Ring};
use crate::error::{Error, Result};

/// Determinant by Bareiss elimination. Every division is exact; panics if the
/// ring breaks that (which would mean the entries are not in a domain).
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>, one: &R) -> R {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    let mut sign_neg = false;
    let mut prev = one.clone();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign_neg = !sign_neg;
                }
                None => return one.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = num.try_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_neg {
        d.neg_ref()
    } else {
        d
    }
}

fn trim<R: Ring>(a: &[R]) -> &[R] {
    let mut n = a.len();
    while n > 0 && a[n - 1].is_zero() {
        n -= 1;
    }
    &a[..n]
}

/// Sylvester matrix of coefficient lists given lowest degree first.
pub fn sylvester<R: Ring>(a: &[R], b: &[R]) -> Vec<Vec<R>> {
    let a = trim(a);
    let b = trim(b);
    let m = a.len().saturating_sub(1);
    let n = b.len().saturating_sub(1);
    let size = m + n;
    let zero = a.first().or(b.first()).map(|x| x.zero_like());
    let Some(zero) = zero else {
        return Vec::new();
    };
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of two univariate polynomials with coefficients in `R`, given
/// lowest degree first. Equals `lc(a)^deg(b) * prod b(alpha)` over the roots
/// `alpha` of `a`.
pub fn resultant<R: Ring>(a: &[R], b: &[R]) -> Result<R> {
    let a = trim(a);
    let b = trim(b);
    if a.is_empty() || b.is_empty() {
        return Err(Error::ZeroResultantInput);
    }
    let one = a[0].one_like();
    if a.len() == 1 {
        return Ok(a[0].pow_u((b.len() - 1) as u32));
    }
    if b.len() == 1 {
        return Ok(b[0].pow_u((a.len() - 1) as u32));
    }
    Ok(bareiss_det(sylvester(a, b), &one))
}

/// Resultant with respect to variable `var`; the result is free of `var`.
pub fn resultant_in<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>, var: usize) -> Result<MultiPoly<C>> {
    resultant(&a.coeffs_in(var), &b.coeffs_in(var))
}

#[cfg(test)]
mod tests {
    use super::super::{var_list, FieldElem, PrimeField, UniPoly};
    use super::*;

    #[test]
    fn small_resultants() {
        let f = PrimeField::new(5).unwrap();
        let e = |v| f.elem(v);
        // res(x - 1, x - 2) = b(1) = -1
        assert_eq!(resultant(&[e(-1), e(1)], &[e(-2), e(1)]).unwrap(), e(-1));
        // shared root
        assert_eq!(resultant(&[e(-1), e(1)], &[e(-1), e(0), e(1)]).unwrap(), e(0));
        assert!(resultant::<FieldElem>(&[], &[e(1)]).is_err());
        // res_x(t x - 1, x) over F_5[t] = +-1
        let a = [UniPoly::from_i64(f, &[-1]), UniPoly::t(f)];
        let b = [UniPoly::zero(f), UniPoly::one(f)];
        let r = resultant(&a, &b).unwrap();
        assert!(r == UniPoly::one(f) || r == UniPoly::from_i64(f, &[-1]));
    }

    #[test]
    fn multivariate_elimination() {
        let f = PrimeField::new(7).unwrap();
        let v = var_list(&["x", "y"]);
        let x = MultiPoly::<FieldElem>::var(f, v.clone(), 0);
        let y = MultiPoly::<FieldElem>::var(f, v.clone(), 1);
        let one = MultiPoly::one(f, v.clone());
        // eliminate y from y - x^2, y - 1: result is +-(x^2 - 1)
        let r = resultant_in(&y.sub(&x.pow(2)), &y.sub(&one), 1).unwrap();
        assert!(!r.uses_var(1));
        assert_eq!(r.normalize(), x.pow(2).sub(&one));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let f = PrimeField::new(11).unwrap();
        let m: Vec<Vec<FieldElem>> = [[2, 3, 1], [4, 0, 5], [7, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&v| f.elem(v)).collect())
            .collect();
        // 2(0-5) - 3(4-35) + 1(4-0) = -10 + 93 + 4 = 87 = 10 mod 11
        assert_eq!(bareiss_det(m, &f.one()).value(), 87 % 11);
    }
}
