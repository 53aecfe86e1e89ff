//! Sparse multivariate polynomials over F_p, F_p[t] or F_p(t).
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors; the map order is the
//! lexicographic monomial order with the first variable most significant, so
//! the last entry is the lex-leading term. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::{FieldElem, PrimeField};
use super::ring::{Coeff, Ring, RingTag};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

/// Shared, immutable variable list.
pub type VarList = Arc<[String]>;

pub fn var_list<S: AsRef<str>>(names: &[S]) -> VarList {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C: Coeff> {
    field: PrimeField,
    vars: VarList,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(field: PrimeField, vars: VarList) -> Self {
        MultiPoly {
            field,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, vars: VarList) -> Self {
        let mut p = Self::zero(c.field(), vars);
        let n = p.nvars();
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(field: PrimeField, vars: VarList) -> Self {
        Self::constant(C::one_in(field), vars)
    }

    /// The variable `vars[i]`.
    pub fn var(field: PrimeField, vars: VarList, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(C::one_in(field), e, vars)
    }

    pub fn monomial(c: C, exps: Exponents, vars: VarList) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent length must match variables");
        let mut p = Self::zero(c.field(), vars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, C)>>(
        field: PrimeField,
        vars: VarList,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(field, vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, e: Exponents, c: C) {
        debug_assert_eq!(e.len(), self.nvars());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ring_tag(&self) -> RingTag {
        C::tag()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &C)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| C::zero_in(self.field))
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Sum of the terms of total degree exactly `i`.
    pub fn homogeneous_part(&self, i: u32) -> Self {
        Self::from_terms(
            self.field,
            self.vars.clone(),
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == i)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Exponents, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_compat(o);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_compat(o);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.neg_ref());
        }
        r
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            field: self.field,
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_compat(o);
        let mut r = Self::zero(self.field, self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul_ref(c2));
            }
        }
        r
    }

    /// Multiplies by `c * x^e`.
    pub fn mul_term(&self, e: &[u32], c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, self.vars.clone());
        }
        MultiPoly {
            field: self.field,
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e1, c1)| {
                    let ne: Exponents = e1.iter().zip(e).map(|(a, b)| a + b).collect();
                    (ne, c1.mul_ref(c))
                })
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn scale_by(&self, c: &C) -> Self {
        self.mul_term(&vec![0; self.nvars()], c)
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_u(e)
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars(), "point length must match variables");
        let mut acc = C::zero_in(self.field);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = term.mul_ref(&x.pow_u(k));
                }
            }
            acc = acc.add_ref(&term);
        }
        acc
    }

    /// Composition: replaces variable `i` by `images[i]`. The result uses the
    /// variable list of the images.
    pub fn substitute(&self, images: &[MultiPoly<C>]) -> MultiPoly<C> {
        assert_eq!(images.len(), self.nvars());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut cache: Vec<Vec<MultiPoly<C>>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(self.field, target.clone()), p.clone()])
            .collect();
        let mut acc = MultiPoly::zero(self.field, target.clone());
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone(), target.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                term = term.mul(&cache[i][k as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Replaces `x_i` by `x_i + shift[i]`.
    pub fn shift(&self, shift: &[C]) -> Self {
        let images: Vec<_> = (0..self.nvars())
            .map(|i| {
                MultiPoly::var(self.field, self.vars.clone(), i)
                    .add(&MultiPoly::constant(shift[i].clone(), self.vars.clone()))
            })
            .collect();
        self.substitute(&images)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut r = MultiPoly::zero(self.field, self.vars.clone());
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }

    /// Same terms, renamed variables (same count).
    pub fn with_vars(&self, vars: VarList) -> Self {
        assert_eq!(vars.len(), self.nvars());
        MultiPoly {
            field: self.field,
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Re-embeds into a larger or permuted variable list: variable `i` goes to
    /// slot `map[i]` of `vars`.
    pub fn embed(&self, vars: VarList, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars());
        let n = vars.len();
        let mut r = Self::zero(self.field, vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; n];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            r.add_term(ne, c.clone());
        }
        r
    }

    /// Drops variable `var`, which must not occur.
    pub fn remove_var(&self, var: usize) -> Result<Self> {
        if self.uses_var(var) {
            return Err(Error::Invalid(format!(
                "variable {} still occurs",
                self.vars[var]
            )));
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != var)
            .map(|(_, v)| v.clone())
            .collect();
        let mut r = Self::zero(self.field, vars.into());
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.remove(var);
            r.add_term(ne, c.clone());
        }
        Ok(r)
    }

    /// View as a univariate polynomial in `var`: entry `k` is the coefficient
    /// of `var^k` (free of `var`, same variable list).
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly<C>> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.field, self.vars.clone()); if self.is_zero() { 0 } else { d + 1 }];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut ne = e.clone();
            ne[var] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(var: usize, coeffs: &[MultiPoly<C>], field: PrimeField, vars: VarList) -> Self {
        let mut r = Self::zero(field, vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, cc) in &c.terms {
                let mut ne = e.clone();
                ne[var] += k as u32;
                r.add_term(ne, cc.clone());
            }
        }
        r
    }

    /// Gcd of all coefficients in the base ring.
    pub fn content(&self) -> C {
        self.terms
            .values()
            .fold(C::zero_in(self.field), |g, c| g.gcd(c))
    }

    /// Divides out the base-ring content (and normalizes the unit).
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        let mut r = MultiPoly {
            field: self.field,
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.try_div(&c).expect("content divides")))
                .collect(),
        };
        r.normalize_in_place();
        r
    }

    /// Scales so the leading coefficient is normalized: monic over a field,
    /// monic leading `UniPoly` over F_p[t].
    pub fn normalize(&self) -> Self {
        let mut r = self.clone();
        r.normalize_in_place();
        r
    }

    fn normalize_in_place(&mut self) {
        let Some((_, lc)) = self.leading_term() else {
            return;
        };
        if matches!(C::tag(), RingTag::FunctionField) {
            let lc = lc.clone();
            for c in self.terms.values_mut() {
                *c = c.try_div(&lc).expect("nonzero");
            }
            return;
        }
        let u = lc.normal_unit().inv().expect("unit");
        if u.value() != 1 {
            for c in self.terms.values_mut() {
                *c = c.scale(u);
            }
        }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn try_div_poly(&self, d: &Self) -> Option<Self> {
        self.check_compat(d);
        let (de, dc) = d.leading_term()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(self.field, self.vars.clone());
        while let Some((re, rc)) = r.leading_term() {
            if !re.iter().zip(&de).all(|(a, b)| a >= b) {
                return None;
            }
            let qc = rc.try_div(&dc)?;
            let qe: Exponents = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            r = r.sub(&d.mul_term(&qe, &qc));
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Multivariate division with remainder by a single divisor, lex order.
    /// Meaningful over fields (F_p, F_p(t)); terms whose coefficients cannot
    /// be divided are moved to the remainder.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_compat(d);
        let (de, dc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut p = self.clone();
        let mut q = Self::zero(self.field, self.vars.clone());
        let mut rem = Self::zero(self.field, self.vars.clone());
        while let Some((pe, pc)) = p.leading_term() {
            let (pe, pc) = (pe.clone(), pc.clone());
            let divisible = pe.iter().zip(&de).all(|(a, b)| a >= b);
            match (divisible, pc.try_div(&dc)) {
                (true, Some(qc)) => {
                    let qe: Exponents = pe.iter().zip(&de).map(|(a, b)| a - b).collect();
                    p = p.sub(&d.mul_term(&qe, &qc));
                    q.add_term(qe, qc);
                }
                _ => {
                    p.terms.remove(&pe);
                    rem.add_term(pe, pc);
                }
            }
        }
        Ok((q, rem))
    }

    fn check_compat(&self, o: &Self) {
        debug_assert_eq!(self.field, o.field, "field mismatch");
        debug_assert_eq!(self.vars.len(), o.vars.len(), "variable count mismatch");
    }
}

impl MultiPoly<UniPoly> {
    /// Evaluates every coefficient at `t = lambda`.
    pub fn eval_t(&self, lambda: u64) -> MultiPoly<FieldElem> {
        let f = self.field;
        self.map_coeffs(|c| FieldElem::new(c.eval(lambda), f))
    }

    /// Largest t-degree among the coefficients.
    pub fn coeff_height(&self) -> usize {
        self.terms().map(|(_, c)| c.height()).max().unwrap_or(0)
    }

    pub fn to_function_field(&self) -> MultiPoly<super::RatFunc> {
        self.map_coeffs(|c| super::RatFunc::from_poly(c.clone()))
    }
}

impl MultiPoly<FieldElem> {
    pub fn to_poly_ring(&self) -> MultiPoly<UniPoly> {
        self.map_coeffs(|c| UniPoly::constant(*c))
    }

    /// Evaluation at a point of raw residues.
    pub fn eval_raw(&self, point: &[u64]) -> u64 {
        let f = self.field;
        let mut acc = 0;
        for (e, c) in &self.terms {
            let mut term = c.value();
            for (&x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = f.mul(term, f.pow(x, k as u64));
                }
            }
            acc = f.add(acc, term);
        }
        acc
    }
}

impl<C: Coeff> Ring for MultiPoly<C> {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.field, self.vars.clone())
    }
    fn one_like(&self) -> Self {
        Self::one(self.field, self.vars.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        self.try_div_poly(d)
    }
    fn scale(&self, c: FieldElem) -> Self {
        self.scale_by(&C::from_elem(c))
    }
}

fn write_monomial(out: &mut String, vars: &[String], e: &[u32]) {
    let mut first = true;
    for (v, &k) in vars.iter().zip(e) {
        if k == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(v);
        if k > 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.iter().rev() {
            let mut s = String::new();
            let is_const = e.iter().all(|&k| k == 0);
            let (cs, atomic) = c.render();
            if is_const {
                s.push_str(&cs);
            } else {
                if !c.is_one() {
                    if atomic {
                        s.push_str(&cs);
                    } else {
                        s.push('(');
                        s.push_str(&cs);
                        s.push(')');
                    }
                    s.push('*');
                }
                write_monomial(&mut s, &self.vars, e);
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}; {}]({})", self.field.p(), self.vars.join(","), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (PrimeField, VarList) {
        (PrimeField::new(5).unwrap(), var_list(&["x", "y"]))
    }

    #[test]
    fn homogeneous_parts() {
        let (f, v) = setup();
        let x = MultiPoly::<UniPoly>::var(f, v.clone(), 0);
        let y = MultiPoly::<UniPoly>::var(f, v.clone(), 1);
        let t = MultiPoly::constant(UniPoly::t(f), v.clone());
        // x^2 + t x y + y
        let p = x.mul(&x).add(&t.mul(&x).mul(&y)).add(&y);
        assert_eq!(p.homogeneous_part(2), x.mul(&x).add(&t.mul(&x).mul(&y)));
        assert!(p.homogeneous_part(3).is_zero());
        let sum = (0..=2).fold(MultiPoly::zero(f, v.clone()), |acc, i| acc.add(&p.homogeneous_part(i)));
        assert_eq!(sum, p);
        // f = y - x^3, f_3 = -x^3
        let g = y.sub(&x.pow(3));
        assert_eq!(g.homogeneous_part(3), x.pow(3).neg());
    }

    #[test]
    fn division() {
        let (f, v) = setup();
        let x = MultiPoly::<FieldElem>::var(f, v.clone(), 0);
        let y = MultiPoly::<FieldElem>::var(f, v.clone(), 1);
        let a = x.add(&y);
        let b = x.sub(&y.scale_by(&f.elem(2)));
        let prod = a.mul(&b);
        assert_eq!(prod.try_div_poly(&a), Some(b.clone()));
        assert_eq!(prod.add(&x).try_div_poly(&a), None);
        let (q, r) = prod.add(&y).div_rem(&a).unwrap();
        assert_eq!(q.mul(&a).add(&r), prod.add(&y));
    }

    #[test]
    fn substitution_and_shift() {
        let (f, v) = setup();
        let x = MultiPoly::<FieldElem>::var(f, v.clone(), 0);
        let y = MultiPoly::<FieldElem>::var(f, v.clone(), 1);
        let p = x.mul(&x).sub(&y);
        let shifted = p.shift(&[f.elem(1), f.elem(2)]);
        // (x+1)^2 - (y+2) = x^2 + 2x - y - 1
        let expect = x.mul(&x).add(&x.scale_by(&f.elem(2))).sub(&y).sub(&MultiPoly::one(f, v.clone()));
        assert_eq!(shifted, expect);
        assert_eq!(p.eval(&[f.elem(3), f.elem(4)]).value(), 0);
    }

    #[test]
    fn display() {
        let (f, v) = setup();
        let x = MultiPoly::<UniPoly>::var(f, v.clone(), 0);
        let y = MultiPoly::<UniPoly>::var(f, v.clone(), 1);
        let t1 = MultiPoly::constant(UniPoly::from_i64(f, &[1, 1]), v.clone());
        let p = t1.mul(&x.pow(2)).sub(&y);
        assert_eq!(p.to_string(), "(t + 1)*x^2 + 4*y");
    }
}
