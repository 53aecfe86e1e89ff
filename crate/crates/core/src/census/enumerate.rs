//! Depth-first census of X(b)(F_q) with pruning and prefix-block parallelism.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::plan::{EnumerationPlan, Step};
use crate::error::{Error, Result};
use crate::ffalg::{PrimeField, UniPoly};
use crate::heightspace::{is_primitive, ExpandedSystem};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Maximum number of search nodes visited per enumeration.
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Projective systems: count points of X(b) (orbits under F_q^x scaling)
    /// rather than primitive coefficient tuples.
    pub normalize_projective: bool,
    /// Target number of prefix blocks handed to workers.
    pub blocks: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: DEFAULT_BUDGET,
            jobs: None,
            normalize_projective: true,
            blocks: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountResult {
    pub q: u64,
    pub count: u128,
    pub visited: u64,
    pub search_space: f64,
}

struct Budget {
    limit: u64,
    used: AtomicU64,
    exceeded: AtomicBool,
}

impl Budget {
    fn charge(&self, n: u64) -> bool {
        let total = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.limit {
            self.exceeded.store(true, Ordering::Relaxed);
        }
        !self.exceeded.load(Ordering::Relaxed)
    }
}

const FLUSH: u64 = 1 << 14;

trait Sink {
    /// Weight of a solution (0 rejects it).
    fn solution(&mut self, vals: &[u64]) -> u64;
}

struct Searcher<'a, S: Sink> {
    plan: &'a EnumerationPlan,
    inv: &'a [u64],
    budget: &'a Budget,
    local: u64,
    aborted: bool,
    normalize: bool,
    sink: S,
}

impl<S: Sink> Searcher<'_, S> {
    #[inline]
    fn inverse(&self, a: u64) -> u64 {
        if self.inv.is_empty() {
            self.plan.field.inv(a).expect("nonzero")
        } else {
            self.inv[a as usize]
        }
    }

    #[inline]
    fn passes(&self, depth: usize, vals: &[u64]) -> bool {
        let f = self.plan.field;
        self.plan.checks[depth].iter().all(|g| g.eval(vals, f) == 0)
            && self.plan.ineq_checks[depth]
                .iter()
                .all(|grp| grp.iter().any(|g| g.eval(vals, f) != 0))
    }

    /// Values to try at `depth`; `None` for "all values".
    #[inline]
    fn candidates(&self, depth: usize, vals: &[u64]) -> Option<Option<u64>> {
        match &self.plan.steps[depth] {
            Step::Free => Some(None),
            Step::Solve { a, b } => {
                let f = self.plan.field;
                let av = a.eval(vals, f);
                let bv = b.eval(vals, f);
                if av != 0 {
                    Some(Some(f.mul(f.neg(bv), self.inverse(av))))
                } else if bv == 0 {
                    Some(None)
                } else {
                    None
                }
            }
        }
    }

    fn tick(&mut self) {
        self.local += 1;
        if self.local == FLUSH {
            if !self.budget.charge(self.local) {
                self.aborted = true;
            }
            self.local = 0;
        }
    }

    fn dfs(&mut self, depth: usize, vals: &mut [u64], zero_prefix: bool) -> u128 {
        if self.aborted {
            return 0;
        }
        if depth == vals.len() {
            return self.sink.solution(vals) as u128;
        }
        self.tick();
        let q = self.plan.field.p();
        let top = if zero_prefix { 2 } else { q };
        let mut total = 0u128;
        match self.candidates(depth, vals) {
            None => {}
            Some(Some(v)) => {
                if v < top {
                    vals[depth] = v;
                    if self.passes(depth, vals) {
                        total += self.dfs(depth + 1, vals, zero_prefix && v == 0);
                    }
                }
            }
            Some(None) => {
                for v in 0..top {
                    vals[depth] = v;
                    if self.passes(depth, vals) {
                        total += self.dfs(depth + 1, vals, zero_prefix && v == 0);
                    }
                }
            }
        }
        vals[depth] = 0;
        total
    }

    /// Expands all valid prefixes of length `depth` (breadth-first).
    fn frontier(&mut self, target: usize) -> Vec<(Vec<u64>, bool, usize)> {
        let n = self.plan.depth();
        let mut cur = vec![(vec![0u64; n], self.normalize, 0usize)];
        loop {
            if cur.len() >= target || cur.iter().all(|(_, _, d)| *d == n) {
                return cur;
            }
            let q = self.plan.field.p();
            let mut next = Vec::new();
            for (vals, zp, d) in cur {
                if d == n {
                    next.push((vals, zp, d));
                    continue;
                }
                self.tick();
                let top = if zp { 2 } else { q };
                let try_value = |v: u64, next: &mut Vec<_>| {
                    let mut w = vals.clone();
                    w[d] = v;
                    if self.passes(d, &w) {
                        next.push((w, zp && v == 0, d + 1));
                    }
                };
                match self.candidates(d, &vals) {
                    None => {}
                    Some(Some(v)) => {
                        if v < top {
                            try_value(v, &mut next);
                        }
                    }
                    Some(None) => {
                        for v in 0..top {
                            try_value(v, &mut next);
                        }
                    }
                }
            }
            cur = next;
            if cur.is_empty() {
                return cur;
            }
        }
    }
}

struct CountSink<'a> {
    plan: &'a EnumerationPlan,
    coords: Vec<u64>,
}

impl CountSink<'_> {
    fn new(plan: &EnumerationPlan) -> CountSink<'_> {
        CountSink {
            plan,
            coords: vec![0; plan.order.len() + plan.multiplied],
        }
    }
}

/// Scatter depth values back to system variable order.
fn scatter(plan: &EnumerationPlan, vals: &[u64], out: &mut [u64]) {
    for (k, &v) in plan.order.iter().enumerate() {
        out[v] = vals[k];
    }
}

fn primitive(field: PrimeField, b: usize, coeffs: &[u64]) -> bool {
    // fast path: a coordinate with nonzero constant term and degree 0
    let chunks: Vec<&[u64]> = coeffs.chunks(b).collect();
    if chunks.iter().any(|c| c[0] != 0 && c[1..].iter().all(|&x| x == 0)) {
        return true;
    }
    let polys: Vec<UniPoly> = chunks.iter().map(|c| UniPoly::from_raw(field, c.to_vec())).collect();
    is_primitive(&polys)
}

impl Sink for CountSink<'_> {
    #[inline]
    fn solution(&mut self, vals: &[u64]) -> u64 {
        if !self.plan.projective {
            return 1;
        }
        scatter(self.plan, vals, &mut self.coords);
        primitive(self.plan.field, self.plan.b, &self.coords) as u64
    }
}

struct PointSink<'a> {
    plan: &'a EnumerationPlan,
    points: Vec<Vec<u64>>,
    limit: usize,
}

impl Sink for PointSink<'_> {
    fn solution(&mut self, vals: &[u64]) -> u64 {
        let mut pt = vec![0; self.plan.order.len()];
        scatter(self.plan, vals, &mut pt);
        if self.plan.projective && !primitive(self.plan.field, self.plan.b, &pt) {
            return 0;
        }
        if self.points.len() < self.limit {
            self.points.push(pt);
        }
        1
    }
}

fn inverse_table(f: PrimeField) -> Vec<u64> {
    if f.p() <= 1 << 16 {
        f.inverse_table()
    } else {
        Vec::new()
    }
}

fn run_in_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    }
}

/// Exact number of F_q-points of the system, `q` being the system's field.
/// Projective systems count points of X(b) unless normalization is disabled,
/// in which case primitive coefficient tuples are counted.
pub fn count(sys: &ExpandedSystem, opts: &CensusOptions) -> Result<CountResult> {
    let plan = EnumerationPlan::new(sys, true);
    count_with_plan(&plan, opts)
}

pub fn count_with_plan(plan: &EnumerationPlan, opts: &CensusOptions) -> Result<CountResult> {
    let f = plan.field;
    let q = f.p();
    let estimate = plan.search_space_estimate();
    if plan.infeasible {
        return Ok(CountResult {
            q,
            count: 0,
            visited: 0,
            search_space: estimate,
        });
    }
    let inv = inverse_table(f);
    let budget = Budget {
        limit: opts.budget,
        used: AtomicU64::new(0),
        exceeded: AtomicBool::new(false),
    };
    let normalize = plan.projective && opts.normalize_projective;
    let mut root = Searcher {
        plan,
        inv: &inv,
        budget: &budget,
        local: 0,
        aborted: false,
        normalize,
        sink: CountSink::new(plan),
    };
    let blocks = root.frontier(opts.blocks.max(1));
    budget.charge(root.local);
    let total: u128 = run_in_pool(opts.jobs, || {
        blocks
            .into_par_iter()
            .map(|(mut vals, zp, d)| {
                let mut s = Searcher {
                    plan,
                    inv: &inv,
                    budget: &budget,
                    local: 0,
                    aborted: false,
                    normalize,
                    sink: CountSink::new(plan),
                };
                let c = if d == vals.len() {
                    s.sink.solution(&vals) as u128
                } else {
                    s.dfs(d, &mut vals, zp)
                };
                budget.charge(s.local);
                c
            })
            .sum()
    });
    let visited = budget.used.load(Ordering::Relaxed);
    if budget.exceeded.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded { visited, estimate });
    }
    let mut count = total;
    for _ in 0..plan.multiplied {
        count *= q as u128;
    }
    if plan.projective && !opts.normalize_projective {
        debug_assert_eq!(count % (q as u128 - 1), 0);
    }
    Ok(CountResult {
        q,
        count,
        visited,
        search_space: estimate,
    })
}

/// All F_q-points as coefficient vectors in system variable order, sorted.
/// Projective points are the normalized orbit representatives unless
/// normalization is disabled. At most `limit` points are returned.
pub fn points(sys: &ExpandedSystem, opts: &CensusOptions, limit: usize) -> Result<Vec<Vec<u64>>> {
    let plan = EnumerationPlan::new(sys, false);
    if plan.infeasible {
        return Ok(Vec::new());
    }
    let inv = inverse_table(plan.field);
    let budget = Budget {
        limit: opts.budget,
        used: AtomicU64::new(0),
        exceeded: AtomicBool::new(false),
    };
    let mut s = Searcher {
        plan: &plan,
        inv: &inv,
        budget: &budget,
        local: 0,
        aborted: false,
        normalize: plan.projective && opts.normalize_projective,
        sink: PointSink {
            plan: &plan,
            points: Vec::new(),
            limit,
        },
    };
    let mut vals = vec![0; plan.depth()];
    let zp = s.normalize;
    if plan.depth() == 0 {
        s.sink.solution(&vals);
    } else {
        s.dfs(0, &mut vals, zp);
    }
    budget.charge(s.local);
    if budget.exceeded.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            visited: budget.used.load(Ordering::Relaxed),
            estimate: plan.search_space_estimate(),
        });
    }
    let mut pts = s.sink.points;
    pts.sort();
    Ok(pts)
}
