//! Buchberger's algorithm over F_p in graded reverse lexicographic order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::ffalg::{FieldElem, MultiPoly, PrimeField, VarList};

/// Exponent vector ordered by grevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn lcm(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(&a, &b)| a.max(b)).collect())
    }

    fn quotient(&self, d: &Mono) -> Mono {
        Mono(self.0.iter().zip(&d.0).map(|(a, b)| a - b).collect())
    }

    fn times(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn coprime(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            // the smaller exponent in the last differing variable wins
            for (a, b) in self.0.iter().zip(&o.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse polynomial keyed by grevlex monomials; the last entry leads.
pub type Poly = BTreeMap<Mono, u64>;

pub fn to_poly(f: &MultiPoly<FieldElem>) -> Poly {
    f.terms().map(|(e, c)| (Mono(e.clone()), c.value())).collect()
}

pub fn from_poly(p: &Poly, field: PrimeField, vars: VarList) -> MultiPoly<FieldElem> {
    MultiPoly::from_terms(
        field,
        vars,
        p.iter().map(|(m, &c)| (m.0.clone(), FieldElem::new(c, field))),
    )
}

fn lead(p: &Poly) -> Option<(&Mono, u64)> {
    p.last_key_value().map(|(m, &c)| (m, c))
}

fn make_monic(p: &mut Poly, f: PrimeField) {
    if let Some((_, c)) = lead(p) {
        let inv = f.inv(c).expect("nonzero lead");
        for v in p.values_mut() {
            *v = f.mul(*v, inv);
        }
    }
}

/// `p -= c * m * g`, skipping the first `skip_lead` leading terms of `g`.
fn sub_scaled(p: &mut Poly, g: &Poly, c: u64, m: &Mono, f: PrimeField, skip_lead: usize) {
    for (gm, &gc) in g.iter().rev().skip(skip_lead) {
        let key = gm.times(m);
        let v = f.mul(c, gc);
        match p.get_mut(&key) {
            Some(x) => {
                *x = f.sub(*x, v);
                if *x == 0 {
                    p.remove(&key);
                }
            }
            None => {
                p.insert(key, f.neg(v));
            }
        }
    }
}

/// Full reduction of `p` by monic `basis`.
pub fn reduce(mut p: Poly, basis: &[Poly], f: PrimeField) -> Poly {
    let mut out = Poly::new();
    while let Some((m, c)) = p.pop_last() {
        match basis.iter().find(|g| lead(g).is_some_and(|(lm, _)| lm.divides(&m))) {
            Some(g) => {
                let (lm, _) = lead(g).expect("nonzero");
                let q = m.quotient(lm);
                sub_scaled(&mut p, g, c, &q, f, 1);
            }
            None => {
                out.insert(m, c);
            }
        }
    }
    out
}

fn s_poly(a: &Poly, b: &Poly, f: PrimeField) -> Poly {
    let (la, _) = lead(a).expect("nonzero");
    let (lb, _) = lead(b).expect("nonzero");
    let l = la.lcm(lb);
    let mut p = Poly::new();
    let qa = l.quotient(la);
    let qb = l.quotient(lb);
    for (m, &c) in a {
        p.insert(m.times(&qa), c);
    }
    sub_scaled(&mut p, b, 1, &qb, f, 0);
    p
}

#[derive(Clone, Copy, Debug)]
pub struct GroebnerOptions {
    pub max_vars: usize,
    pub max_basis: usize,
    /// S-polynomial reductions before giving up.
    pub max_reductions: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            max_vars: 12,
            max_basis: 5000,
            max_reductions: 200_000,
        }
    }
}

/// Reduced, monic Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: Vec<Poly>, nvars: usize, f: PrimeField, opts: &GroebnerOptions) -> Result<Vec<Poly>> {
    if nvars > opts.max_vars {
        return Err(Error::GroebnerBudget(format!(
            "{nvars} variables exceed the limit of {}",
            opts.max_vars
        )));
    }
    let mut basis: Vec<Poly> = Vec::new();
    // queue ordered by lcm (normal strategy) plus a membership mirror
    let mut queue: BTreeSet<(Mono, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let add = |mut p: Poly,
               basis: &mut Vec<Poly>,
               queue: &mut BTreeSet<(Mono, usize, usize)>,
               pending: &mut HashSet<(usize, usize)>|
     -> Result<()> {
        make_monic(&mut p, f);
        basis.push(p);
        if basis.len() > opts.max_basis {
            return Err(Error::GroebnerBudget(format!(
                "basis grew past {} elements",
                opts.max_basis
            )));
        }
        let k = basis.len() - 1;
        for i in 0..k {
            queue.insert((pair_lcm(basis, (i, k)), i, k));
            pending.insert((i, k));
        }
        Ok(())
    };
    for g in gens {
        let r = reduce(g, &basis, f);
        if !r.is_empty() {
            add(r, &mut basis, &mut queue, &mut pending)?;
        }
    }
    let mut reductions = 0usize;
    while let Some((l, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, _) = lead(&basis[i]).expect("nonzero");
        let (lj, _) = lead(&basis[j]).expect("nonzero");
        if li.coprime(lj) {
            continue;
        }
        // chain criterion: some k whose lead divides the lcm strictly with
        // both pairs already handled
        let handled = |a: usize, b: usize| !pending.contains(&(a.min(b), a.max(b)));
        if (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).is_some_and(|(lk, _)| lk.divides(&l) && lk.lcm(li) != l && lk.lcm(lj) != l)
                && handled(i, k)
                && handled(j, k)
        }) {
            continue;
        }
        reductions += 1;
        if reductions > opts.max_reductions {
            return Err(Error::GroebnerBudget(format!(
                "more than {} S-polynomial reductions",
                opts.max_reductions
            )));
        }
        let r = reduce(s_poly(&basis[i], &basis[j], f), &basis, f);
        if !r.is_empty() {
            add(r, &mut basis, &mut queue, &mut pending)?;
        }
    }
    Ok(interreduce(basis, f))
}

fn pair_lcm(basis: &[Poly], (i, j): (usize, usize)) -> Mono {
    let (a, _) = lead(&basis[i]).expect("nonzero");
    let (b, _) = lead(&basis[j]).expect("nonzero");
    a.lcm(b)
}

fn interreduce(basis: Vec<Poly>, f: PrimeField) -> Vec<Poly> {
    let leads: Vec<Mono> = basis.iter().map(|g| lead(g).expect("nonzero").0.clone()).collect();
    let mut keep: Vec<Poly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(i, l)| {
            i != k && l.divides(&leads[k]) && (l != &leads[k] || i < k)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let mut g = keep[k].clone();
        let (lm, lc) = g.pop_last().expect("nonzero");
        let others: Vec<Poly> = keep
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let mut r = reduce(g, &others, f);
        r.insert(lm, lc);
        make_monic(&mut r, f);
        out.push(r);
    }
    out.sort_by(|a, b| lead(a).expect("nonzero").0.cmp(lead(b).expect("nonzero").0));
    out
}

/// Every S-polynomial reduces to zero.
pub fn buchberger_criterion(basis: &[Poly], f: PrimeField) -> bool {
    (0..basis.len()).all(|i| (i + 1..basis.len()).all(|j| reduce(s_poly(&basis[i], &basis[j], f), basis, f).is_empty()))
}

pub fn leading_monomial(p: &Poly) -> Option<&Mono> {
    lead(p).map(|(m, _)| m)
}
