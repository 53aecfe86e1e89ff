use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field F_p. Moduli are limited to `p < 2^32` so that products of
/// two residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u64,
}

impl TryFrom<u64> for PrimeField {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p
    }

    pub fn elem(self, v: i64) -> FieldElem {
        FieldElem {
            value: self.reduce_i64(v),
            field: self,
        }
    }

    pub fn zero(self) -> FieldElem {
        FieldElem { value: 0, field: self }
    }

    pub fn one(self) -> FieldElem {
        FieldElem { value: 1 % self.p, field: self }
    }

    #[inline]
    pub fn reduce_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        // extended Euclid on signed values
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(self.reduce_i64(s0))
    }

    pub fn is_square(self, a: u64) -> bool {
        let a = a % self.p;
        a == 0 || self.p == 2 || self.pow(a, (self.p - 1) / 2) == 1
    }

    /// Tonelli–Shanks square root; `None` for non-residues.
    pub fn sqrt(self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        if a == 0 || p == 2 {
            return Some(a);
        }
        if !self.is_square(a) {
            return None;
        }
        let (mut q, mut s) = (p - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.is_square(z) {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r.min(p - r))
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElem> {
        (0..self.p).map(move |v| FieldElem { value: v, field: self })
    }

    /// Table of inverses for small fields; index 0 holds 0.
    pub fn inverse_table(self) -> Vec<u64> {
        (0..self.p).map(|a| self.inv(a).unwrap_or(0)).collect()
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// An element of F_p carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u64,
    field: PrimeField,
}

impl FieldElem {
    pub fn new(value: u64, field: PrimeField) -> Self {
        FieldElem {
            value: value % field.p,
            field,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FieldElem> {
        self.field.inv(self.value).map(|v| FieldElem {
            value: v,
            field: self.field,
        })
    }

    pub fn pow(self, e: u64) -> FieldElem {
        FieldElem {
            value: self.field.pow(self.value, e),
            field: self.field,
        }
    }

    /// Representative in `(-p/2, p/2]`, handy for printing.
    pub fn signed(self) -> i64 {
        let p = self.field.p;
        if self.value > p / 2 {
            self.value as i64 - p as i64
        } else {
            self.value as i64
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.field, o.field);
        FieldElem {
            value: self.field.add(self.value, o.value),
            field: self.field,
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.field, o.field);
        FieldElem {
            value: self.field.sub(self.value, o.value),
            field: self.field,
        }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.field, o.field);
        FieldElem {
            value: self.field.mul(self.value, o.value),
            field: self.field,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

/// Panics on division by zero, like integer division.
impl Div for FieldElem {
    type Output = FieldElem;
    fn div(self, o: FieldElem) -> FieldElem {
        self * o.inv().expect("division by zero in F_p")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_large() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4_294_967_311).is_err());
        assert!(PrimeField::new(4_294_967_291).is_ok());
    }

    #[test]
    fn inverses_and_roots() {
        let f = PrimeField::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        for a in 0..13 {
            match f.sqrt(a) {
                Some(r) => assert_eq!(f.mul(r, r), a),
                None => assert!(!f.is_square(a)),
            }
        }
        let big = PrimeField::new(1_000_000_007).unwrap();
        let r = big.sqrt(2).unwrap();
        assert_eq!(big.mul(r, r), 2);
    }

    #[test]
    fn elem_ops() {
        let f = PrimeField::new(5).unwrap();
        let a = f.elem(3);
        let b = f.elem(-1);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 2);
        assert_eq!((a / a).value(), 1);
        assert_eq!((-a).value(), 2);
        assert_eq!(f.elem(4).signed(), -1);
    }
}
