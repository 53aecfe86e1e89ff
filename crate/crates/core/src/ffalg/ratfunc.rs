use std::fmt;

use super::field::{FieldElem, PrimeField};
use super::ring::{Coeff, Ring, RingTag};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// An element of K = F_p(t) in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = num.field();
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: UniPoly::one(f),
            });
        }
        let g = num.gcd_or_zero(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = f.inv(den.leading_coeff()).expect("nonzero");
        Ok(RatFunc {
            num: num.scale(lc),
            den: den.scale(lc),
        })
    }

    pub fn from_poly(num: UniPoly) -> Self {
        let f = num.field();
        RatFunc {
            num,
            den: UniPoly::one(f),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Degree valuation at infinity reversed: `deg num - deg den`, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.num
            .degree()
            .map(|d| d as i64 - self.den.degree().unwrap_or(0) as i64)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Ring for RatFunc {
    fn field(&self) -> PrimeField {
        self.num.field()
    }
    fn zero_like(&self) -> Self {
        RatFunc::from_poly(UniPoly::zero(self.field()))
    }
    fn one_like(&self) -> Self {
        RatFunc::from_poly(UniPoly::one(self.field()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("nonzero den")
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }
    fn neg_ref(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        Some(RatFunc::new(&self.num * &d.den, &self.den * &d.num).expect("nonzero den"))
    }
    fn scale(&self, c: FieldElem) -> Self {
        RatFunc::new(self.num.scale(c.value()), self.den.clone()).expect("nonzero den")
    }
}

impl Coeff for RatFunc {
    fn zero_in(f: PrimeField) -> Self {
        RatFunc::from_poly(UniPoly::zero(f))
    }
    fn one_in(f: PrimeField) -> Self {
        RatFunc::from_poly(UniPoly::one(f))
    }
    fn from_elem(c: FieldElem) -> Self {
        RatFunc::from_poly(UniPoly::constant(c))
    }
    fn tag() -> RingTag {
        RingTag::FunctionField
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() && o.is_zero() {
            self.zero_like()
        } else {
            self.one_like()
        }
    }
    fn normal_unit(&self) -> FieldElem {
        let f = self.field();
        if self.is_zero() {
            return f.one();
        }
        // dividing by the element itself is not a scalar; normalize the
        // numerator's leading coefficient instead
        FieldElem::new(self.num.leading_coeff(), f)
    }
    fn render(&self) -> (String, bool) {
        let atomic = self.den.is_constant() && self.num.coeffs().iter().filter(|&&c| c != 0).count() <= 1;
        (self.to_string(), atomic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let f = PrimeField::new(7).unwrap();
        // (2t^2 - 2) / (2t - 2) = t + 1
        let r = RatFunc::new(UniPoly::from_i64(f, &[-2, 0, 2]), UniPoly::from_i64(f, &[-2, 2])).unwrap();
        assert_eq!(r.num(), &UniPoly::from_i64(f, &[1, 1]));
        assert!(r.den().is_monic() && r.den().is_constant());
        let s = RatFunc::new(UniPoly::one(f), UniPoly::from_i64(f, &[0, 3])).unwrap();
        assert!(s.den().is_monic());
        let prod = r.mul_ref(&s).mul_ref(&s.inv().unwrap());
        assert_eq!(prod, r);
        assert!(RatFunc::new(UniPoly::one(f), UniPoly::zero(f)).is_err());
    }
}
