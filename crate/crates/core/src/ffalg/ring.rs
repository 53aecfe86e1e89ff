use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{FieldElem, PrimeField};

/// Which coefficient ring a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingTag {
    /// The base field F_p.
    Field,
    /// O_K = F_p[t].
    PolyRing,
    /// K = F_p(t).
    FunctionField,
    /// Polynomials over one of the above.
    Multivariate,
}

/// Commutative ring operations shared by every coefficient type. Constructors
/// take `&self` so that rings whose zero depends on context (multivariate
/// polynomials carry their variable list) fit the same interface.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn field(&self) -> PrimeField;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact division; `None` when `d` does not divide `self` (or `d = 0`).
    fn try_div(&self, d: &Self) -> Option<Self>;
    fn scale(&self, c: FieldElem) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Base coefficient rings for [`MultiPoly`](super::MultiPoly): F_p, F_p[t], F_p(t).
pub trait Coeff: Ring + Eq + std::hash::Hash {
    fn zero_in(f: PrimeField) -> Self;
    fn one_in(f: PrimeField) -> Self;
    fn from_elem(c: FieldElem) -> Self;
    fn tag() -> RingTag;
    /// Normalized gcd (monic where that makes sense); `gcd(0, 0) = 0`.
    fn gcd(&self, o: &Self) -> Self;
    /// The unit by which to divide to get the normalized associate.
    fn normal_unit(&self) -> FieldElem;
    /// Text for a coefficient; `atomic` tells the printer whether it needs
    /// parentheses when followed by a monomial.
    fn render(&self) -> (String, bool);
}

impl Ring for FieldElem {
    fn field(&self) -> PrimeField {
        FieldElem::field(*self)
    }
    fn zero_like(&self) -> Self {
        FieldElem::field(*self).zero()
    }
    fn one_like(&self) -> Self {
        FieldElem::field(*self).one()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(*self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        *self + *o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        *self - *o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        *self * *o
    }
    fn neg_ref(&self) -> Self {
        -*self
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| *self * i)
    }
    fn scale(&self, c: FieldElem) -> Self {
        *self * c
    }
}

impl Coeff for FieldElem {
    fn zero_in(f: PrimeField) -> Self {
        f.zero()
    }
    fn one_in(f: PrimeField) -> Self {
        f.one()
    }
    fn from_elem(c: FieldElem) -> Self {
        c
    }
    fn tag() -> RingTag {
        RingTag::Field
    }
    fn gcd(&self, o: &Self) -> Self {
        if FieldElem::is_zero(*self) && FieldElem::is_zero(*o) {
            self.zero_like()
        } else {
            self.one_like()
        }
    }
    fn normal_unit(&self) -> FieldElem {
        if FieldElem::is_zero(*self) {
            self.one_like()
        } else {
            *self
        }
    }
    fn render(&self) -> (String, bool) {
        (self.value().to_string(), true)
    }
}
