//! Multivariate gcd by recursive primitive polynomial remainder sequences.

use super::multipoly::MultiPoly;
use super::ring::Coeff;

impl<C: Coeff> MultiPoly<C> {
    /// Normalized gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        gcd_rec(self, o)
    }

    /// Leading coefficient with respect to `var` (free of `var`).
    pub fn lc_in(&self, var: usize) -> Self {
        self.coeffs_in(var)
            .pop()
            .unwrap_or_else(|| Self::zero(self.field(), self.vars().clone()))
    }

    /// Gcd of the coefficients of `self` viewed as a polynomial in `var`.
    pub fn content_in(&self, var: usize) -> Self {
        let mut g = Self::zero(self.field(), self.vars().clone());
        for c in self.coeffs_in(var) {
            if c.is_zero() {
                continue;
            }
            g = gcd_rec(&g, &c);
            if g.is_constant() && !matches!(C::tag(), super::RingTag::PolyRing) {
                break;
            }
        }
        g
    }

    /// Sparse pseudo-remainder of `self` by `d` in `var`.
    pub fn prem(&self, d: &Self, var: usize) -> Self {
        let dd = d.degree_in(var);
        let ld = d.lc_in(var);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= dd {
            let k = r.degree_in(var) - dd;
            let lr = r.lc_in(var);
            let mut e = vec![0; self.nvars()];
            e[var] = k;
            let mut shifted = d.mul(&lr);
            shifted = shifted.mul_term(&e, &C::one_in(self.field()));
            r = r.mul(&ld).sub(&shifted);
        }
        r
    }

    /// Squarefree-ness is not needed; `true` if `self` and `o` share no
    /// factor of positive degree in the variables.
    pub fn coprime_to(&self, o: &Self) -> bool {
        self.gcd(o).is_constant()
    }
}

fn main_var<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>) -> Option<usize> {
    (0..a.nvars()).rev().find(|&v| a.uses_var(v) || b.uses_var(v))
}

fn gcd_rec<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>) -> MultiPoly<C> {
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    let Some(v) = main_var(a, b) else {
        let g = a.constant_term().gcd(&b.constant_term());
        return MultiPoly::constant(g, a.vars().clone()).normalize();
    };
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd_rec(&ca, &cb);
    let mut p = a.try_div_poly(&ca).expect("content divides");
    let mut q = b.try_div_poly(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.degree_in(v) == 0 {
            return c.normalize();
        }
        let r = p.prem(&q, v);
        if r.is_zero() {
            break;
        }
        p = q;
        let cr = r.content_in(v);
        q = r.try_div_poly(&cr).expect("content divides");
    }
    c.mul(&q).normalize()
}
