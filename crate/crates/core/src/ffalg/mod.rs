//! Exact arithmetic over F_p, F_p[t], F_p(t) and sparse multivariate
//! polynomials over any of them.

mod field;
mod gcd;
mod multipoly;
mod ratfunc;
mod resultant;
mod ring;
mod unipoly;

pub use field::{is_prime, FieldElem, PrimeField};
pub use multipoly::{var_list, Exponents, MultiPoly, VarList};
pub use ratfunc::RatFunc;
pub use resultant::{bareiss_det, resultant, resultant_in, sylvester};
pub use ring::{Coeff, Ring, RingTag};
pub use unipoly::UniPoly;

use crate::error::{Error, Result};

/// Monic gcd of two polynomials in F_p[t].
pub fn uni_gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    a.gcd(b)
}

/// Largest `e` with `p^e | a`.
pub fn valuation_at(a: &UniPoly, p: &UniPoly) -> Result<u32> {
    a.valuation_at(p)
}

pub fn homogeneous_part<C: Coeff>(f: &MultiPoly<C>, i: u32) -> MultiPoly<C> {
    f.homogeneous_part(i)
}

/// Reduction modulo a degree-one prime `p = t - lambda`.
pub fn reduce_mod(f: &MultiPoly<UniPoly>, p: &UniPoly) -> Result<MultiPoly<FieldElem>> {
    Ok(f.eval_t(root_of_linear(p)?))
}

/// The root `lambda` of a degree-one prime `p = c(t - lambda)`.
pub fn root_of_linear(p: &UniPoly) -> Result<u64> {
    match p.degree() {
        Some(1) => {
            let f = p.field();
            let c = f.inv(p.leading_coeff()).expect("nonzero");
            Ok(f.neg(f.mul(p.coeff(0), c)))
        }
        d => Err(Error::UnsupportedPrimeDegree(d.unwrap_or(0))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_mod_examples() {
        let f = PrimeField::new(5).unwrap();
        let v = var_list(&["x", "y", "z"]);
        let x = MultiPoly::<UniPoly>::var(f, v.clone(), 0);
        let y = MultiPoly::<UniPoly>::var(f, v.clone(), 1);
        let z = MultiPoly::<UniPoly>::var(f, v.clone(), 2);
        let t = MultiPoly::constant(UniPoly::t(f), v.clone());
        let g = t.mul(&x.pow(2)).sub(&y.mul(&z));
        let red = reduce_mod(&g, &UniPoly::linear(f, 1)).unwrap();
        let xf = MultiPoly::<FieldElem>::var(f, v.clone(), 0);
        let yf = MultiPoly::<FieldElem>::var(f, v.clone(), 1);
        let zf = MultiPoly::<FieldElem>::var(f, v.clone(), 2);
        assert_eq!(red, xf.pow(2).sub(&yf.mul(&zf)));
        let h = MultiPoly::constant(UniPoly::from_i64(f, &[1, 1, 1]), v.clone()).mul(&x);
        assert_eq!(reduce_mod(&h, &UniPoly::t(f)).unwrap(), xf);
        assert!(matches!(
            reduce_mod(&h, &UniPoly::from_i64(f, &[2, 0, 1])),
            Err(Error::UnsupportedPrimeDegree(2))
        ));
    }
}
