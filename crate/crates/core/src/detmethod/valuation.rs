//! Multiplicities of residue points and t-adic divisibility of evaluation
//! determinants.

use serde::{Deserialize, Serialize};

use super::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::ffalg::{FieldElem, MultiPoly, PrimeField, UniPoly};
use crate::polylattice::PolyMatrix;

/// Multiplicity of `f` at `p`: the least total degree of a term of `f`
/// recentred at `p`. For a form `f` and a nonzero `p` this equals the
/// multiplicity of the projective point.
pub fn mult_at(f: &MultiPoly<FieldElem>, p: &[u64]) -> Result<u32> {
    if p.len() != f.nvars() {
        return Err(Error::LengthMismatch {
            expected: f.nvars(),
            got: p.len(),
        });
    }
    if f.is_zero() {
        return Err(Error::Invalid("the zero polynomial has no multiplicity".into()));
    }
    if f.eval_raw(p) != 0 {
        return Err(Error::PointNotOnVariety);
    }
    let field = f.field();
    let shift: Vec<FieldElem> = p.iter().map(|&v| FieldElem::new(v, field)).collect();
    let g = f.shift(&shift);
    Ok(g.terms().map(|(e, _)| e.iter().sum::<u32>()).min().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    /// Number of points (rows).
    pub s: usize,
    /// Dimension of the hypersurface.
    pub n: usize,
    pub mu: u32,
    /// `v_p` of the gcd of the `s x s` minors; `None` when all vanish.
    pub exponent: Option<usize>,
    /// `(n!/mu)^{1/n} n/(n+1) s^{1+1/n}`.
    pub main_term: f64,
    /// `s(s-1)/2`, certified for curves at smooth points.
    pub classical_bound: Option<usize>,
}

impl DivisibilityReport {
    /// `true` if the classical bound applies and is met (or the exponent is
    /// infinite); `None` if no classical bound applies.
    pub fn meets_classical_bound(&self) -> Option<bool> {
        let bound = self.classical_bound?;
        Some(self.exponent.is_none_or(|e| e >= bound))
    }
}

/// Main term of the divisibility lower bound.
pub fn divisibility_main_term(n: usize, mu: u32, s: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    let n_f = n as f64;
    (fact / mu as f64).powf(1.0 / n_f) * n_f / (n_f + 1.0) * (s as f64).powf(1.0 + 1.0 / n_f)
}

/// Checks that `x` reduces to `p` modulo `t - lambda` (up to scaling when
/// `projective`).
pub fn reduces_to(x: &[UniPoly], lambda: u64, p: &[u64], projective: bool, field: PrimeField) -> bool {
    if x.len() != p.len() {
        return false;
    }
    let r: Vec<u64> = x.iter().map(|c| c.eval(lambda)).collect();
    if !projective {
        return r == p;
    }
    if r.iter().all(|&v| v == 0) || p.iter().all(|&v| v == 0) {
        return false;
    }
    (0..r.len()).all(|i| (i + 1..r.len()).all(|k| field.mul(r[i], p[k]) == field.mul(r[k], p[i])))
}

/// Divisibility exponent of the evaluation matrix of `points` on `basis` at
/// the prime `t - lambda`. `residue` is the common reduction `P`, `mu` its
/// multiplicity and `n` the dimension of the hypersurface.
pub fn divisibility_exponent(
    field: PrimeField,
    points: &[Vec<UniPoly>],
    basis: &MonomialBasis,
    lambda: u64,
    residue: &[u64],
    mu: u32,
    n: usize,
) -> Result<DivisibilityReport> {
    let s = points.len();
    if s > basis.len() {
        return Err(Error::Invalid(format!(
            "{s} points exceed the basis size {}",
            basis.len()
        )));
    }
    let projective = basis.is_homogeneous();
    if let Some(x) = points
        .iter()
        .find(|x| !reduces_to(x, lambda, residue, projective, field))
    {
        return Err(Error::Invalid(format!(
            "point ({}) does not reduce to the residue point",
            x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    let a = basis.eval_matrix(field, points)?;
    Ok(DivisibilityReport {
        s,
        n,
        mu,
        exponent: local_exponent(&a, lambda),
        main_term: divisibility_main_term(n, mu, s),
        classical_bound: (n == 1 && mu == 1).then(|| s * s.saturating_sub(1) / 2),
    })
}

/// `v_{t-lambda}` of the gcd of the maximal minors of a matrix with no more
/// rows than columns, by Smith elimination over `F_p[u]/(u^N)`, `u = t - lambda`.
/// Every nonzero minor has degree at most `rows * maxdeg`, so `N` one larger
/// separates a full-rank matrix from a deficient one. `None` for rank-deficient
/// input.
pub fn local_exponent(a: &PolyMatrix, lambda: u64) -> Option<usize> {
    let f = a.field();
    let s = a.nrows();
    if s == 0 {
        return Some(0);
    }
    let prec = s * a.degree() + 1;
    let mut m: Vec<Vec<Vec<u64>>> = a
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    let mut v = c.taylor_shift(lambda).coeffs().to_vec();
                    v.resize(prec, 0);
                    v
                })
                .collect()
        })
        .collect();
    let val = |v: &[u64]| v.iter().position(|&c| c != 0).unwrap_or(usize::MAX);
    let mut rows: Vec<usize> = (0..s).collect();
    let mut cols: Vec<usize> = (0..a.ncols()).collect();
    let mut total = 0usize;
    for _ in 0..s {
        // known precision shrinks by the pivot valuation at each step
        let known = prec - total;
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, &i) in rows.iter().enumerate() {
            for (ci, &j) in cols.iter().enumerate() {
                let v = val(&m[i][j][..known]);
                if v < known && best.is_none_or(|b| v < b.2) {
                    best = Some((ri, ci, v));
                }
            }
        }
        let (ri, ci, v) = best?;
        let (pi, pj) = (rows[ri], cols[ci]);
        total += v;
        let w: Vec<u64> = m[pi][pj][v..].to_vec();
        let prow = m[pi].clone();
        rows.swap_remove(ri);
        cols.swap_remove(ci);
        for &i in &rows {
            let a_shift: Vec<u64> = m[i][pj][v..].to_vec();
            if a_shift.iter().all(|&c| c == 0) {
                continue;
            }
            for &j in &cols {
                let x = series_mul(f, &w, &m[i][j], prec);
                let y = series_mul(f, &a_shift, &prow[j], prec);
                m[i][j] = x.iter().zip(&y).map(|(&x, &y)| f.sub(x, y)).collect();
            }
        }
    }
    Some(total)
}

fn series_mul(f: PrimeField, a: &[u64], b: &[u64], prec: usize) -> Vec<u64> {
    let mut out = vec![0u64; prec];
    for (i, &x) in a.iter().enumerate().take(prec) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(prec - i) {
            if y != 0 {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    out
}
