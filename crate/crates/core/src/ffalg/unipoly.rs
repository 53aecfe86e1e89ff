use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FieldElem, PrimeField};
use super::ring::{Coeff, Ring, RingTag};
use crate::error::{Error, Result};

/// A polynomial in `t` over F_p, dense, lowest degree first. The coefficient
/// vector never has a trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl UniPoly {
    pub fn zero(field: PrimeField) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_raw(c.field(), vec![c.value()])
    }

    /// The polynomial `t`.
    pub fn t(field: PrimeField) -> Self {
        Self::from_raw(field, vec![0, 1])
    }

    /// `c * t^k`.
    pub fn monomial(c: FieldElem, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c.value();
        Self::from_raw(c.field(), v)
    }

    /// `t - lambda`.
    pub fn linear(field: PrimeField, lambda: u64) -> Self {
        Self::from_raw(field, vec![field.neg(lambda % field.p()), 1])
    }

    /// Builds from residues in `0..p`, trimming trailing zeros.
    pub fn from_raw(field: PrimeField, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.p()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| field.reduce_i64(c)).collect())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0, as used by heights.
    pub fn height(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        Self::from_raw(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading_coeff()) {
            Some(i) => self.scale(i),
            None => self.clone(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        UniPoly {
            field: self.field,
            coeffs: v,
        }
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, i as u64 % f.p()))
            .collect();
        Self::from_raw(f, v)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let f = self.field;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = f.inv(d.leading_coeff()).ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut q = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            q[i - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                r[k] = f.sub(r[k], f.mul(c, dc));
            }
        }
        Ok((Self::from_raw(f, q), Self::from_raw(f, r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, a: &UniPoly) -> bool {
        !self.is_zero() && a.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd; errors when both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        Ok(self.gcd_or_zero(other))
    }

    /// Like [`UniPoly::gcd`] but with `gcd(0, 0) = 0`.
    pub fn gcd_or_zero(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, u)` with `s*self + u*other = g`, `g` monic.
    pub fn xgcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut u0, mut u1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let u = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, u);
        }
        let inv = f.inv(r0.leading_coeff()).expect("nonzero");
        Ok((r0.scale(inv), s0.scale(inv), u0.scale(inv)))
    }

    pub fn lcm(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let g = self.gcd_or_zero(other);
        (self * other).exact_div(&g).expect("gcd divides").monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &UniPoly) -> Result<UniPoly> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one(self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Ben-Or irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let q = self.field.p() as u128;
        let m = self.monic();
        let t = Self::t(self.field);
        let mut power = t.clone();
        for _ in 1..=n / 2 {
            power = match power.pow_mod(q, &m) {
                Ok(p) => p,
                Err(_) => return false,
            };
            let g = (&power - &t).gcd_or_zero(&m);
            if !g.is_constant() {
                return false;
            }
        }
        true
    }

    /// Largest `e` with `p^e | self`, for irreducible `p`.
    pub fn valuation_at(&self, p: &UniPoly) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::InfiniteValuation);
        }
        if !p.is_irreducible() {
            return Err(Error::NotIrreducible(p.to_string()));
        }
        let mut e = 0;
        let mut a = self.clone();
        while let Some(q) = a.exact_div(p) {
            a = q;
            e += 1;
        }
        Ok(e)
    }

    /// Substitutes `t -> t + lambda`, so the result is the Taylor expansion at `lambda`.
    pub fn taylor_shift(&self, lambda: u64) -> Self {
        let f = self.field;
        let mut c = self.coeffs.clone();
        let n = c.len();
        // repeated synthetic division
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                c[j] = f.add(c[j], f.mul(lambda, c[j + 1]));
            }
        }
        Self::from_raw(f, c)
    }

    /// Composition `self(g(t))`.
    pub fn compose(&self, g: &UniPoly) -> Self {
        let f = self.field;
        self.coeffs.iter().rev().fold(Self::zero(f), |acc, &c| {
            &(&acc * g) + &Self::constant(FieldElem::new(c, f))
        })
    }

    fn zip_with(&self, o: &UniPoly, op: impl Fn(u64, u64) -> u64) -> UniPoly {
        debug_assert_eq!(self.field, o.field);
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| op(self.coeff(i), o.coeff(i))).collect();
        Self::from_raw(self.field, v)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let f = self.field;
        self.zip_with(o, |a, b| f.add(a, b))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let f = self.field;
        self.zip_with(o, |a, b| f.sub(a, b))
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        debug_assert_eq!(self.field, o.field);
        let f = self.field;
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(f);
        }
        let p = f.p();
        let mut acc = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                acc[i + j] += (a * b) as u128;
            }
        }
        UniPoly::from_raw(f, acc.into_iter().map(|x| (x % p as u128) as u64).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        let f = self.field;
        UniPoly::from_raw(f, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({})", self.field.p(), self)
    }
}

impl Ring for UniPoly {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.field)
    }
    fn one_like(&self) -> Self {
        Self::one(self.field)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        self.exact_div(d)
    }
    fn scale(&self, c: FieldElem) -> Self {
        UniPoly::scale(self, c.value())
    }
}

impl Coeff for UniPoly {
    fn zero_in(f: PrimeField) -> Self {
        Self::zero(f)
    }
    fn one_in(f: PrimeField) -> Self {
        Self::one(f)
    }
    fn from_elem(c: FieldElem) -> Self {
        Self::constant(c)
    }
    fn tag() -> RingTag {
        RingTag::PolyRing
    }
    fn gcd(&self, o: &Self) -> Self {
        self.gcd_or_zero(o)
    }
    fn normal_unit(&self) -> FieldElem {
        let lc = self.leading_coeff();
        FieldElem::new(if lc == 0 { 1 } else { lc }, self.field)
    }
    fn render(&self) -> (String, bool) {
        let atomic = self.coeffs.iter().filter(|&&c| c != 0).count() <= 1;
        (self.to_string(), atomic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(f5(), c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(t^2 - 1, t - 1) = t - 1
        assert_eq!(up(&[-1, 0, 1]).gcd(&up(&[-1, 1])).unwrap(), up(&[-1, 1]));
        // gcd(t, t + 1) = 1
        assert_eq!(up(&[0, 1]).gcd(&up(&[1, 1])).unwrap(), up(&[1]));
        // gcd(0, 3 t^3) = t^3
        assert_eq!(
            UniPoly::zero(f5()).gcd(&up(&[0, 0, 0, 3])).unwrap(),
            up(&[0, 0, 0, 1])
        );
        assert_eq!(
            UniPoly::zero(f5()).gcd(&UniPoly::zero(f5())),
            Err(Error::GcdUndefined)
        );
    }

    #[test]
    fn valuation_examples() {
        let t = UniPoly::t(f5());
        assert_eq!(up(&[0, 0, 1, 1]).valuation_at(&t).unwrap(), 2);
        assert_eq!(up(&[-1, 0, 1]).valuation_at(&up(&[-1, 1])).unwrap(), 1);
        assert_eq!(up(&[1]).valuation_at(&t).unwrap(), 0);
        assert_eq!(
            UniPoly::zero(f5()).valuation_at(&t),
            Err(Error::InfiniteValuation)
        );
        // t^2 - 1 is reducible
        assert!(matches!(
            up(&[3]).valuation_at(&up(&[-1, 0, 1])),
            Err(Error::NotIrreducible(_))
        ));
    }

    #[test]
    fn irreducibility() {
        assert!(up(&[2, 0, 1]).is_irreducible()); // t^2 + 2: -2 = 3 is a non-residue mod 5
        assert!(!up(&[1, 0, 1]).is_irreducible()); // t^2 + 1 = (t-2)(t+2)
        assert!(up(&[1, 1]).is_irreducible());
    }

    #[test]
    fn division_and_xgcd() {
        let a = up(&[1, 2, 3, 4]);
        let b = up(&[2, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        let (g, s, u) = a.xgcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&u * &b), g);
    }

    #[test]
    fn taylor_shift_matches_compose() {
        let a = up(&[3, 1, 4, 1, 2]);
        let shifted = a.taylor_shift(2);
        assert_eq!(shifted, a.compose(&up(&[2, 1])));
    }
}
