//! Truncated Laurent series in `1/t` and square roots at infinity.

use std::fmt;

use crate::error::{Error, Result};
use crate::ffalg::{PrimeField, UniPoly};

/// `sum_{i < len} c_i t^{top - i}`: the coefficients of all exponents above
/// `top - len` are known, lower ones are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    field: PrimeField,
    top: i64,
    coeffs: Vec<u64>,
}

impl LaurentSeries {
    pub fn new(field: PrimeField, top: i64, coeffs: Vec<u64>) -> Self {
        let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(coeffs.len());
        LaurentSeries {
            field,
            top: top - lead as i64,
            coeffs: coeffs[lead..].to_vec(),
        }
    }

    /// A polynomial as a series with `precision` known terms.
    pub fn from_poly(p: &UniPoly, precision: usize) -> Self {
        let f = p.field();
        let Some(d) = p.degree() else {
            return LaurentSeries {
                field: f,
                top: 0,
                coeffs: Vec::new(),
            };
        };
        let coeffs = (0..precision)
            .map(|i| if i <= d { p.coeff(d - i) } else { 0 })
            .collect();
        LaurentSeries::new(f, d as i64, coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Exponent of the leading term (meaningless for an empty series).
    pub fn top(&self) -> i64 {
        self.top
    }

    /// Number of known terms.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Every exponent above this one is known.
    pub fn known_above(&self) -> i64 {
        self.top - self.coeffs.len() as i64
    }

    /// Coefficient of `t^k`; `None` when `k` is beyond the precision.
    pub fn coeff(&self, k: i64) -> Option<u64> {
        if k > self.top {
            return Some(0);
        }
        if k <= self.known_above() {
            return None;
        }
        Some(self.coeffs[(self.top - k) as usize])
    }

    /// Product; the relative precision is the smaller of the two.
    pub fn mul(&self, o: &Self) -> Self {
        let f = self.field;
        let len = self.coeffs.len().min(o.coeffs.len());
        let mut c = vec![0u64; len];
        for (i, &a) in self.coeffs.iter().enumerate().take(len) {
            for (j, &b) in o.coeffs.iter().enumerate().take(len - i) {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        LaurentSeries::new(f, self.top + o.top, c)
    }

    /// The terms with nonnegative exponent.
    pub fn polynomial_part(&self) -> UniPoly {
        if self.top < 0 {
            return UniPoly::zero(self.field);
        }
        let top = self.top as usize;
        let mut c = vec![0u64; top + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(top + 1) {
            c[top - i] = a;
        }
        UniPoly::from_raw(self.field, c)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let k = self.top - i as i64;
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            match k {
                0 => write!(out, "{c}")?,
                1 if c == 1 => write!(out, "t")?,
                1 => write!(out, "{c}*t")?,
                _ if c == 1 => write!(out, "t^{k}")?,
                _ => write!(out, "{c}*t^{k}")?,
            }
        }
        if first {
            write!(out, "0")?;
        }
        write!(out, " + O(t^{})", self.known_above())
    }
}

/// `sqrt(beta)` in F_p((1/t)) to `precision` terms. Needs odd `p`, even
/// degree and a square leading coefficient.
pub fn sqrt_series(beta: &UniPoly, precision: usize) -> Result<LaurentSeries> {
    let f = beta.field();
    if f.p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let Some(d) = beta.degree() else {
        return Err(Error::NoSqrtAtInfinity);
    };
    if d % 2 == 1 {
        return Err(Error::NoSqrtAtInfinity);
    }
    let s0 = f.sqrt(beta.leading_coeff()).ok_or(Error::NoSqrtAtInfinity)?;
    let inv2s0 = f.inv(f.add(s0, s0)).expect("odd characteristic");
    let mut s = vec![s0];
    for k in 1..precision {
        // coefficient of t^{d-k} in s^2 equals that of beta
        let target = if k <= d { beta.coeff(d - k) } else { 0 };
        let mut acc = target;
        for i in 1..k {
            acc = f.sub(acc, f.mul(s[i], s[k - i]));
        }
        s.push(f.mul(acc, inv2s0));
    }
    Ok(LaurentSeries::new(f, (d / 2) as i64, s))
}

/// The square root of `beta` in F_p[t] if there is one.
pub fn poly_sqrt(beta: &UniPoly) -> Option<UniPoly> {
    if beta.is_zero() {
        return Some(beta.clone());
    }
    let d = beta.degree()?;
    if d % 2 == 1 {
        return None;
    }
    let s = sqrt_series(beta, d / 2 + 1).ok()?.polynomial_part();
    (&s * &s == *beta).then_some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_series() {
        let f = PrimeField::new(7).unwrap();
        let beta = UniPoly::from_i64(f, &[-1, 0, 1]);
        let s = sqrt_series(&beta, 5).unwrap();
        // t - (1/2) t^-1 - (1/8) t^-3
        assert_eq!(s.coeff(1), Some(1));
        assert_eq!(s.coeff(0), Some(0));
        assert_eq!(s.coeff(-1), Some(f.neg(f.inv(2).unwrap())));
        assert_eq!(s.coeff(-3), Some(f.neg(f.inv(8).unwrap())));
        assert_eq!(s.coeff(-4), None);
        assert!(sqrt_series(&UniPoly::from_i64(f, &[0, 0, 0, 1]), 4).is_err());
        let sq = UniPoly::from_i64(f, &[1, 2, 1]);
        assert_eq!(poly_sqrt(&sq), Some(UniPoly::from_i64(f, &[1, 1])));
        assert_eq!(poly_sqrt(&beta), None);
    }
}
