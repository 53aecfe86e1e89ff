//! Constant shears making the coefficient of `x_last^d` carry the full height.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffalg::{FieldElem, MultiPoly, UniPoly};

/// Candidate shears tried before giving up.
const MAX_CANDIDATES: u64 = 1 << 20;

/// `x_i -> x_i + shifts[i] * x_target` for `i != target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shear {
    pub target: usize,
    pub shifts: Vec<u64>,
}

impl Shear {
    pub fn identity(nvars: usize) -> Self {
        Shear {
            target: nvars.saturating_sub(1),
            shifts: vec![0; nvars],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.shifts.iter().all(|&a| a == 0)
    }

    /// `f(A x)`.
    pub fn apply_to_poly(&self, f: &MultiPoly<UniPoly>) -> MultiPoly<UniPoly> {
        let field = f.field();
        let vars = f.vars().clone();
        let xt = MultiPoly::var(field, vars.clone(), self.target);
        let images: Vec<MultiPoly<UniPoly>> = (0..f.nvars())
            .map(|i| {
                let xi = MultiPoly::var(field, vars.clone(), i);
                if i == self.target || self.shifts[i] == 0 {
                    xi
                } else {
                    xi.add(&xt.scale_by(&UniPoly::constant(FieldElem::new(self.shifts[i], field))))
                }
            })
            .collect();
        f.substitute(&images)
    }

    /// `A^{-1} x`: sends a zero of `f` to a zero of `f o A`.
    pub fn pull_back_point(&self, x: &[UniPoly]) -> Vec<UniPoly> {
        self.map(x, true)
    }

    /// `A x`: inverse of [`Shear::pull_back_point`].
    pub fn push_forward_point(&self, y: &[UniPoly]) -> Vec<UniPoly> {
        self.map(y, false)
    }

    fn map(&self, x: &[UniPoly], inverse: bool) -> Vec<UniPoly> {
        let xt = &x[self.target];
        x.iter()
            .enumerate()
            .map(|(i, xi)| {
                if i == self.target || self.shifts[i] == 0 {
                    return xi.clone();
                }
                let s = xt.scale(self.shifts[i]);
                if inverse {
                    xi - &s
                } else {
                    xi + &s
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub g: MultiPoly<UniPoly>,
    pub shear: Shear,
    /// `h(f) = h(g) = deg c_g`.
    pub height: usize,
}

/// Finds a constant shear `A` with `deg g(0, ..., 0, 1) = h(f)` for
/// `g = f o A`; the identity is tried first.
pub fn coordinate_normalize(f: &MultiPoly<UniPoly>) -> Result<Normalized> {
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Error::Invalid("coordinate normalization needs a nonzero form".into()));
    }
    if !f.content().is_constant() {
        return Err(Error::Invalid("coordinate normalization needs a primitive form".into()));
    }
    let field = f.field();
    let q = field.p();
    let n = f.nvars();
    let target = n - 1;
    let h = f.coeff_height();
    let free = n - 1;
    let total = (q as u128).saturating_pow(free as u32);
    let limit = total.min(MAX_CANDIDATES as u128) as u64;
    for code in 0..limit {
        let mut shifts = vec![0u64; n];
        let mut c = code;
        for s in shifts.iter_mut().take(free) {
            *s = c % q;
            c /= q;
        }
        let point: Vec<UniPoly> = (0..n)
            .map(|i| {
                if i == target {
                    UniPoly::one(field)
                } else {
                    UniPoly::constant(FieldElem::new(shifts[i], field))
                }
            })
            .collect();
        if f.eval(&point).degree() == Some(h) {
            let shear = Shear { target, shifts };
            let g = shear.apply_to_poly(f);
            return Ok(Normalized { g, shear, height: h });
        }
    }
    Err(Error::NoNormalizingPoint(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffalg::{var_list, PrimeField};

    #[test]
    fn monomial_needs_shear() {
        let f = PrimeField::new(5).unwrap();
        let vars = var_list(&["x0", "x1"]);
        // x0^2 + t x0 x1 has no x1^2 term
        let g = MultiPoly::monomial(UniPoly::one(f), vec![2, 0], vars.clone())
            .add(&MultiPoly::monomial(UniPoly::t(f), vec![1, 1], vars));
        let r = coordinate_normalize(&g).unwrap();
        assert!(!r.shear.is_identity());
        assert_eq!(r.height, 1);
        assert_eq!(r.g.coeff(&[0, 2]).degree(), Some(1));
    }
}
