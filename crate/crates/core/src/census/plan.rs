//! Variable ordering and compiled equations for the census search.

use std::collections::BTreeSet;

use crate::ffalg::{FieldElem, MultiPoly, PrimeField};
use crate::heightspace::ExpandedSystem;

/// A polynomial over F_p in depth positions, flattened for fast evaluation.
#[derive(Clone, Debug, Default)]
pub(crate) struct FlatPoly {
    coefs: Vec<u64>,
    starts: Vec<u32>,
    factors: Vec<(u32, u32)>,
}

impl FlatPoly {
    fn from_terms(terms: Vec<(u64, Vec<(u32, u32)>)>) -> Self {
        let mut out = FlatPoly::default();
        for (c, fs) in terms {
            out.coefs.push(c);
            out.starts.push(out.factors.len() as u32);
            out.factors.extend(fs);
        }
        out.starts.push(out.factors.len() as u32);
        out
    }

    #[inline]
    pub(crate) fn eval(&self, vals: &[u64], f: PrimeField) -> u64 {
        let p = f.p();
        let mut acc = 0u64;
        for (i, &c) in self.coefs.iter().enumerate() {
            let mut term = c;
            let (s, e) = (self.starts[i] as usize, self.starts[i + 1] as usize);
            for &(pos, exp) in &self.factors[s..e] {
                let x = vals[pos as usize];
                if x == 0 {
                    term = 0;
                    break;
                }
                let mut k = exp;
                while k > 0 {
                    term = term * x % p;
                    k -= 1;
                }
            }
            acc += term;
            if acc >= p {
                acc -= p;
            }
        }
        acc
    }
}

/// How the value at one depth is produced.
#[derive(Clone, Debug)]
pub(crate) enum Step {
    /// Try every value.
    Free,
    /// The equation `a * v + b = 0` with `a, b` in earlier positions.
    Solve { a: FlatPoly, b: FlatPoly },
}

/// Search plan: variable order, per-depth steps and the checks that become
/// decidable at each depth.
#[derive(Clone, Debug)]
pub struct EnumerationPlan {
    /// `order[k]` is the system variable assigned at depth `k`.
    pub order: Vec<usize>,
    /// Number of variables that occur in no condition and are counted by a
    /// factor `q` each instead of enumerated (affine counting only).
    pub multiplied: usize,
    /// Depth positions that are solved rather than branched on.
    pub solved: Vec<usize>,
    pub(crate) steps: Vec<Step>,
    pub(crate) checks: Vec<Vec<FlatPoly>>,
    pub(crate) ineq_checks: Vec<Vec<Vec<FlatPoly>>>,
    /// A constant condition fails: the system has no points.
    pub(crate) infeasible: bool,
    pub(crate) field: PrimeField,
    pub(crate) projective: bool,
    pub(crate) b: usize,
}

struct EqInfo {
    vars: BTreeSet<usize>,
    /// `(var, degree)` pairs.
    degs: Vec<(usize, u32)>,
}

fn info(g: &MultiPoly<FieldElem>) -> EqInfo {
    let mut degs = Vec::new();
    for v in 0..g.nvars() {
        let d = g.degree_in(v);
        if d > 0 {
            degs.push((v, d));
        }
    }
    EqInfo {
        vars: degs.iter().map(|&(v, _)| v).collect(),
        degs,
    }
}

impl EqInfo {
    fn deg(&self, v: usize) -> u32 {
        self.degs.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, d)| d)
    }
}

impl EnumerationPlan {
    /// Builds a plan. With `multiply_free`, affine variables that occur in no
    /// condition are left out of the search and counted by a factor.
    pub fn new(sys: &ExpandedSystem, multiply_free: bool) -> Self {
        let n = sys.nvars();
        let eqs = sys.equations();
        let infos: Vec<EqInfo> = eqs.iter().map(info).collect();
        let mut involved = vec![false; n];
        for i in &infos {
            for &v in &i.vars {
                involved[v] = true;
            }
        }
        for grp in sys.inequations() {
            for g in grp {
                for v in info(g).vars {
                    involved[v] = true;
                }
            }
        }
        let skip_free = multiply_free && !sys.is_projective();

        let mut assigned = vec![false; n];
        let mut used = vec![false; eqs.len()];
        let mut order = Vec::new();
        let mut solve_eq: Vec<Option<usize>> = Vec::new();
        let to_place: usize = (0..n).filter(|&v| involved[v] || !skip_free).count();
        while order.len() < to_place {
            let unassigned = |i: &EqInfo| -> Vec<usize> { i.vars.iter().copied().filter(|&v| !assigned[v]).collect() };
            // a variable fixed by an equation linear in it
            let mut pick: Option<(usize, Option<usize>)> = None;
            for (k, i) in infos.iter().enumerate() {
                if used[k] {
                    continue;
                }
                let u = unassigned(i);
                if u.len() == 1 && i.deg(u[0]) == 1 {
                    let better = match pick {
                        Some((v, _)) => u[0] < v,
                        None => true,
                    };
                    if better {
                        pick = Some((u[0], Some(k)));
                    }
                }
            }
            if pick.is_none() {
                let mut best: Option<((usize, usize, u64), usize)> = None;
                for v in 0..n {
                    if assigned[v] || !(involved[v] || !skip_free) {
                        continue;
                    }
                    let (mut complete, mut near, mut touch) = (0usize, 0usize, 0u64);
                    for (k, i) in infos.iter().enumerate() {
                        if used[k] || !i.vars.contains(&v) {
                            continue;
                        }
                        let rest: Vec<usize> = unassigned(i).into_iter().filter(|&w| w != v).collect();
                        match rest.len() {
                            0 => complete += 1,
                            1 if i.deg(rest[0]) == 1 => near += 1,
                            _ => {}
                        }
                        touch += 720_720 / (rest.len() as u64 + 1);
                    }
                    let score = (complete, near, touch);
                    if best.as_ref().is_none_or(|(s, _)| score > *s) {
                        best = Some((score, v));
                    }
                }
                pick = best.map(|(_, v)| (v, None));
            }
            let (v, eq) = pick.expect("an unassigned variable remains");
            if let Some(k) = eq {
                used[k] = true;
            }
            assigned[v] = true;
            order.push(v);
            solve_eq.push(eq);
        }

        let depth = order.len();
        let mut pos_of = vec![usize::MAX; n];
        for (k, &v) in order.iter().enumerate() {
            pos_of[v] = k;
        }
        let field = sys.field();
        let flatten = |g: &MultiPoly<FieldElem>, drop_var: Option<usize>| -> FlatPoly {
            FlatPoly::from_terms(
                g.terms()
                    .map(|(e, c)| {
                        let fs = e
                            .iter()
                            .enumerate()
                            .filter(|&(v, &k)| k > 0 && Some(v) != drop_var)
                            .map(|(v, &k)| (pos_of[v] as u32, k))
                            .collect();
                        (c.value(), fs)
                    })
                    .collect(),
            )
        };
        let max_pos = |g: &MultiPoly<FieldElem>| -> Option<usize> {
            (0..n).filter(|&v| g.uses_var(v)).map(|v| pos_of[v]).max()
        };

        let mut infeasible = false;
        let mut steps = Vec::with_capacity(depth);
        let mut solved = Vec::new();
        for (k, &v) in order.iter().enumerate() {
            match solve_eq[k] {
                Some(e) => {
                    let g = &eqs[e];
                    let parts = g.coeffs_in(v);
                    let b = flatten(&parts[0], Some(v));
                    let a = flatten(&parts[1], Some(v));
                    steps.push(Step::Solve { a, b });
                    solved.push(k);
                }
                None => steps.push(Step::Free),
            }
        }
        let mut checks = vec![Vec::new(); depth];
        for (k, g) in eqs.iter().enumerate() {
            if used[k] {
                continue;
            }
            match max_pos(g) {
                Some(d) => checks[d].push(flatten(g, None)),
                None => infeasible |= !g.is_zero(),
            }
        }
        let mut ineq_checks = vec![Vec::new(); depth];
        for grp in sys.inequations() {
            let d = grp.iter().filter_map(max_pos).max();
            match d {
                Some(d) => ineq_checks[d].push(grp.iter().map(|g| flatten(g, None)).collect()),
                None => infeasible |= grp.iter().all(|g| g.is_zero()),
            }
        }
        EnumerationPlan {
            order,
            multiplied: n - depth,
            solved,
            steps,
            checks,
            ineq_checks,
            infeasible,
            field,
            projective: sys.is_projective(),
            b: sys.b(),
        }
    }

    pub fn depth(&self) -> usize {
        self.order.len()
    }

    /// `log_q` of the unpruned search space: branching depths plus
    /// multiplied variables.
    pub fn free_depths(&self) -> usize {
        self.depth() - self.solved.len()
    }

    pub fn search_space_estimate(&self) -> f64 {
        (self.field.p() as f64).powi(self.free_depths() as i32)
    }
}
