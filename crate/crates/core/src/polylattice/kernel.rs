//! Column Hermite reduction: integral kernels, saturation and Plücker heights.

use super::matrix::PolyMatrix;
use super::reduce::{reduce_basis, vector_height, ReducedBasis};
use crate::error::{Error, Result};
use crate::ffalg::UniPoly;

/// `M U = [H | 0]` with `U` unimodular; also returns `U^{-1}`.
pub struct ColumnEchelon {
    pub h: PolyMatrix,
    pub u: PolyMatrix,
    pub u_inv: PolyMatrix,
}

/// Euclid on the rows of a full-row-rank matrix by unimodular column
/// operations, tracking the transform and its inverse.
pub fn column_echelon(m: &PolyMatrix) -> Result<ColumnEchelon> {
    let f = m.field();
    let (nr, nc) = (m.nrows(), m.ncols());
    if nr > nc {
        return Err(Error::RankDeficient);
    }
    let mut a: Vec<Vec<UniPoly>> = m.rows().to_vec();
    let mut u = PolyMatrix::identity(f, nc).into_rows();
    let mut ui = PolyMatrix::identity(f, nc).into_rows();
    for i in 0..nr {
        loop {
            // smallest-degree nonzero entry of row i among columns i..
            let best = (i..nc)
                .filter(|&j| !a[i][j].is_zero())
                .min_by_key(|&j| (a[i][j].height(), j));
            let Some(k) = best else {
                return Err(Error::RankDeficient);
            };
            if k != i {
                for r in a.iter_mut().chain(u.iter_mut()) {
                    r.swap(i, k);
                }
                ui.swap(i, k);
            }
            let mut done = true;
            for j in i + 1..nc {
                if a[i][j].is_zero() {
                    continue;
                }
                let (q, _) = a[i][j].div_rem(&a[i][i])?;
                // column j -= q * column i; inverse: row i of U^{-1} += q * row j
                for r in a.iter_mut().chain(u.iter_mut()) {
                    let s = &r[i] * &q;
                    r[j] = &r[j] - &s;
                }
                let add: Vec<UniPoly> = ui[j].iter().map(|x| x * &q).collect();
                for (x, s) in ui[i].iter_mut().zip(add) {
                    *x = &*x + &s;
                }
                if !a[i][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
    }
    Ok(ColumnEchelon {
        h: PolyMatrix::new(f, a)?,
        u: PolyMatrix::new(f, u)?,
        u_inv: PolyMatrix::new(f, ui)?,
    })
}

/// Basis of `(K * rowspace(M)) ∩ O_K^n`.
pub fn saturate(m: &PolyMatrix) -> Result<PolyMatrix> {
    let e = column_echelon(m)?;
    PolyMatrix::new(m.field(), e.u_inv.rows()[..m.nrows()].to_vec())
}

/// Reduced basis of the saturated O_K-kernel `{x : A x = 0}`.
pub fn kernel_lattice(a: &PolyMatrix) -> Result<ReducedBasis> {
    if a.nrows() >= a.ncols() {
        return Err(Error::Shape(format!(
            "kernel needs fewer rows than columns, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let e = column_echelon(a)?;
    let ut = e.u.transpose();
    let rows = ut.rows()[a.nrows()..].to_vec();
    reduce_basis(&PolyMatrix::new(a.field(), rows)?)
}

/// A nonzero kernel vector of height at most `lattice_height(A) / (n - m)`:
/// the first vector of a reduced kernel basis.
pub fn short_kernel_vector(a: &PolyMatrix) -> Result<Vec<UniPoly>> {
    let k = kernel_lattice(a)?;
    let mut v = k.vectors.row(0).to_vec();
    // sign convention: last nonzero entry monic
    if let Some(c) = v.iter().rev().find(|c| !c.is_zero()) {
        let s = a.field().inv(c.leading_coeff()).expect("nonzero");
        for x in &mut v {
            *x = x.scale(s);
        }
    }
    debug_assert!(vector_height(&v) <= k.height() / (a.ncols() - a.nrows()));
    Ok(v)
}

/// Plücker height of the K-row space: largest maximal-minor degree minus the
/// degree of the gcd of the maximal minors.
pub fn lattice_height(m: &PolyMatrix) -> Result<usize> {
    if m.nrows() == 0 || m.nrows() > m.ncols() {
        return Err(Error::RankDeficient);
    }
    let minors = m.maximal_minors();
    let g = minors.iter().fold(UniPoly::zero(m.field()), |g, c| g.gcd_or_zero(c));
    if g.is_zero() {
        return Err(Error::RankDeficient);
    }
    let top = minors.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    Ok(top - g.height())
}
