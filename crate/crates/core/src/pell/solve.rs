//! Bounded-height solution sets by exhaustive census, checked against unit
//! orbits, and the `2^n` family for `y^2 - (t^2+t+1) x^2 = (t-1)...(t-n)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::cf::{continued_fraction_unit, norm_one_unit, quad_mul, PellInstance, Unit, UnitJson};
use crate::census::{self, CensusOptions};
use crate::error::{Error, Result};
use crate::ffalg::{is_prime, var_list, MultiPoly, PrimeField, UniPoly};
use crate::heightspace::{expand, Ambient, VarietySpec};

pub type Pair = (UniPoly, UniPoly);

type Key = (Vec<u64>, Vec<u64>);

fn key(p: &Pair) -> Key {
    (p.0.coeffs().to_vec(), p.1.coeffs().to_vec())
}

fn pair_height(p: &Pair) -> usize {
    p.0.height().max(p.1.height())
}

fn pair_strings(p: &Pair) -> [String; 2] {
    [p.0.to_string(), p.1.to_string()]
}

#[derive(Clone, Debug)]
pub struct PellSolutionSet {
    pub instance: PellInstance,
    pub b: usize,
    pub unit: Unit,
    /// Norm-one unit used for the orbits.
    pub eta: Pair,
    /// All `(x, y)` with `x^2 - beta y^2 = gamma` and height `<= b`, sorted.
    pub solutions: Vec<Pair>,
    /// Minimal-height member of each orbit (under `eta` and `-1`).
    pub representatives: Vec<Pair>,
    /// Orbits of solutions stay inside the list up to height `b` and the
    /// representatives regenerate it.
    pub orbit_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellSolutionJson {
    pub beta: String,
    pub gamma: String,
    pub b: usize,
    pub unit: UnitJson,
    pub count: usize,
    pub solutions: Vec<[String; 2]>,
    pub representatives: Vec<[String; 2]>,
    pub orbit_consistent: bool,
}

impl PellSolutionSet {
    pub fn to_json(&self) -> PellSolutionJson {
        PellSolutionJson {
            beta: self.instance.beta().to_string(),
            gamma: self.instance.gamma().to_string(),
            b: self.b,
            unit: self.unit.to_json(),
            count: self.solutions.len(),
            solutions: self.solutions.iter().map(pair_strings).collect(),
            representatives: self.representatives.iter().map(pair_strings).collect(),
            orbit_consistent: self.orbit_consistent,
        }
    }
}

/// The variety `x^2 - beta y^2 = gamma` in A^2.
pub fn pell_variety(inst: &PellInstance) -> Result<VarietySpec> {
    let f = inst.field();
    let vars = var_list(&["x", "y"]);
    let x = MultiPoly::var(f, vars.clone(), 0);
    let y = MultiPoly::var(f, vars.clone(), 1);
    let c = |p: &UniPoly| MultiPoly::constant(p.clone(), vars.clone());
    let eq = x.mul(&x).sub(&c(inst.beta()).mul(&y.mul(&y))).sub(&c(inst.gamma()));
    VarietySpec::new(f, Ambient::Affine(2), vars.clone(), vec![eq], Vec::new())
}

/// All solutions of height `<= b`.
pub fn pell_solutions(inst: &PellInstance, b: usize, opts: &CensusOptions) -> Result<PellSolutionSet> {
    let unit = continued_fraction_unit(inst.beta())?;
    let eta = norm_one_unit(inst.beta(), &unit);
    let sys = expand(&pell_variety(inst)?, b + 1)?;
    let raw = census::points(&sys, opts, usize::MAX)?;
    let mut solutions: Vec<Pair> = raw
        .iter()
        .map(|p| {
            let c = sys.coords_of(p);
            (c[0].clone(), c[1].clone())
        })
        .collect();
    solutions.sort_by_key(key);
    if let Some(bad) = solutions.iter().find(|(x, y)| !inst.residual(x, y).is_zero()) {
        return Err(Error::Invalid(format!("census returned a non-solution ({}, {})", bad.0, bad.1)));
    }
    let (representatives, orbit_consistent) = orbit_check(inst.beta(), &eta, &solutions, b);
    Ok(PellSolutionSet {
        instance: inst.clone(),
        b,
        unit,
        eta,
        solutions,
        representatives,
        orbit_consistent,
    })
}

/// Orbit members of `s` of height `<= b`, walking both directions until the
/// height exceeds `b` (heights along an orbit are convex).
fn orbit(beta: &UniPoly, eta: &Pair, s: &Pair, b: usize) -> Vec<Pair> {
    let conj = (eta.0.clone(), -&eta.1);
    let mut out = vec![s.clone(), (-&s.0, -&s.1)];
    for dir in [eta, &conj] {
        let mut cur = s.clone();
        for _ in 0..4 * b + 8 {
            cur = quad_mul(beta, (&cur.0, &cur.1), (&dir.0, &dir.1));
            if pair_height(&cur) > b {
                break;
            }
            out.push(cur.clone());
            out.push((-&cur.0, -&cur.1));
        }
    }
    out
}

fn orbit_check(beta: &UniPoly, eta: &Pair, sols: &[Pair], b: usize) -> (Vec<Pair>, bool) {
    let set: BTreeSet<Key> = sols.iter().map(key).collect();
    let mut ok = true;
    // component label by smallest (height, key) reachable
    let mut rep_of: BTreeMap<Key, Key> = BTreeMap::new();
    let mut reps: Vec<Pair> = Vec::new();
    for s in sols {
        if rep_of.contains_key(&key(s)) {
            continue;
        }
        let members = orbit(beta, eta, s, b);
        if members.iter().any(|m| !set.contains(&key(m))) {
            ok = false;
        }
        let best = members
            .iter()
            .min_by_key(|m| (pair_height(m), key(m)))
            .expect("orbit contains s")
            .clone();
        for m in &members {
            rep_of.insert(key(m), key(&best));
        }
        reps.push(best);
    }
    reps.sort_by_key(key);
    reps.dedup_by_key(|p| key(p));
    let regenerated: BTreeSet<Key> = reps
        .iter()
        .flat_map(|r| orbit(beta, eta, r, b))
        .map(|p| key(&p))
        .collect();
    (reps, ok && regenerated == set)
}

/// `y^2 - (t^2+t+1) x^2 = (t-1)(t-2)...(t-n)` with its `2^n` product solutions.
#[derive(Clone, Debug)]
pub struct PellFamily {
    pub n: usize,
    pub q: u64,
    pub beta: UniPoly,
    pub gamma: UniPoly,
    /// `(x_i, y_i)` with `y_i^2 - beta x_i^2 = t - i`.
    pub base: Vec<Pair>,
    /// `(x, y)` pairs, one per sign pattern.
    pub solutions: Vec<Pair>,
    pub distinct: bool,
    /// Every partial product had the expected norm.
    pub norms_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellFamilyJson {
    pub n: usize,
    pub q: u64,
    pub beta: String,
    pub gamma: String,
    pub base: Vec<[String; 2]>,
    pub count: usize,
    pub max_height: usize,
    pub distinct: bool,
    pub norms_ok: bool,
    pub solutions: Vec<[String; 2]>,
}

impl PellFamily {
    pub fn max_height(&self) -> usize {
        self.solutions.iter().map(pair_height).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> PellFamilyJson {
        PellFamilyJson {
            n: self.n,
            q: self.q,
            beta: self.beta.to_string(),
            gamma: self.gamma.to_string(),
            base: self.base.iter().map(pair_strings).collect(),
            count: self.solutions.len(),
            max_height: self.max_height(),
            distinct: self.distinct,
            norms_ok: self.norms_ok,
            solutions: self.solutions.iter().map(pair_strings).collect(),
        }
    }
}

pub fn family_beta(f: PrimeField) -> UniPoly {
    UniPoly::from_i64(f, &[1, 1, 1])
}

/// `x = c`, `y = c t + e` with `y^2 - (t^2+t+1) x^2 = t - i`, i.e.
/// `2ce = 1 + c^2` and `e^2 = c^2 - i`; the first `c` that works.
pub fn base_solution(f: PrimeField, i: u64) -> Option<Pair> {
    let ii = i % f.p();
    (1..f.p()).find_map(|c| {
        let e = f.mul(f.add(1, f.mul(c, c)), f.inv(f.add(c, c))?);
        (f.mul(e, e) == f.sub(f.mul(c, c), ii)).then(|| (UniPoly::from_raw(f, vec![c]), UniPoly::from_raw(f, vec![e, c])))
    })
}

pub fn pell_family(n: usize, q: u64) -> Result<PellFamily> {
    if q == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let f = PrimeField::new(q)?;
    if n as u64 >= q {
        return Err(Error::Invalid(format!("need q > n, got q = {q}, n = {n}")));
    }
    let beta = family_beta(f);
    let base = (1..=n as u64)
        .map(|i| base_solution(f, i).ok_or(Error::NoBaseSolution { i, q }))
        .collect::<Result<Vec<_>>>()?;
    let mut gamma = UniPoly::one(f);
    let mut norms_ok = true;
    let mut solutions = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        // (x, y) stands for y + x sqrt(beta)
        let mut acc: Pair = (UniPoly::zero(f), UniPoly::one(f));
        let mut norm = UniPoly::one(f);
        for (i, (x, y)) in base.iter().enumerate() {
            let x = if mask >> i & 1 == 1 { -x } else { x.clone() };
            let (ny, nx) = quad_mul(&beta, (&acc.1, &acc.0), (y, &x));
            acc = (nx, ny);
            norm = &norm * &UniPoly::linear(f, (i + 1) as u64);
            let lhs = &(&acc.1 * &acc.1) - &(&beta * &(&acc.0 * &acc.0));
            norms_ok &= lhs == norm;
        }
        gamma = norm;
        solutions.push(acc);
    }
    let keys: BTreeSet<Key> = solutions.iter().map(key).collect();
    let distinct = keys.len() == solutions.len();
    Ok(PellFamily {
        n,
        q,
        beta,
        gamma,
        base,
        solutions,
        distinct,
        norms_ok,
    })
}

/// Smallest odd prime `q >= start`, `q > n`, over which every factor `t - i`
/// has a base solution.
pub fn find_family_prime(n: usize, start: u64) -> Result<u64> {
    let lo = start.max(n as u64 + 1).max(3);
    (lo..lo + 10_000)
        .filter(|&q| is_prime(q))
        .find(|&q| {
            let f = PrimeField::new(q).expect("prime");
            (1..=n as u64).all(|i| base_solution(f, i).is_some())
        })
        .ok_or_else(|| Error::Invalid(format!("no prime in [{lo}, {}) carries the family", lo + 10_000)))
}
