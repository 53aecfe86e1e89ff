//! Weak Popov reduction of row bases over F_p[t].

use serde::{Deserialize, Serialize};

use super::matrix::PolyMatrix;
use crate::error::{Error, Result};
use crate::ffalg::{FieldElem, UniPoly};

/// A basis whose row degrees are the successive minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    pub vectors: PolyMatrix,
    /// `s_1 <= ... <= s_m`, the heights of the rows.
    pub minima: Vec<usize>,
}

/// JSON form: rows as polynomial strings plus minima and height.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedBasisJson {
    pub vectors: Vec<Vec<String>>,
    pub minima: Vec<usize>,
    pub height: usize,
}

impl ReducedBasis {
    /// `s_1 + ... + s_m`.
    pub fn height(&self) -> usize {
        self.minima.iter().sum()
    }

    pub fn to_json(&self) -> ReducedBasisJson {
        ReducedBasisJson {
            vectors: self.vectors.to_strings(),
            minima: self.minima.clone(),
            height: self.height(),
        }
    }
}

/// Height of a vector: largest entry degree (`deg 0 = 0`).
pub fn vector_height(v: &[UniPoly]) -> usize {
    v.iter().map(|c| c.height()).max().unwrap_or(0)
}

/// Pivot of a nonzero row: the rightmost entry of maximal degree.
fn pivot(row: &[UniPoly]) -> Option<(usize, usize)> {
    let d = row.iter().filter_map(|c| c.degree()).max()?;
    let j = row.iter().rposition(|c| c.degree() == Some(d))?;
    Some((j, d))
}

/// Brings the rows into weak Popov form by simple transformations (cancel
/// the leading term of one row against another row with the same pivot
/// position), then sorts by degree. The O_K-row module is unchanged.
pub fn reduce_basis(m: &PolyMatrix) -> Result<ReducedBasis> {
    let f = m.field();
    let mut rows: Vec<Vec<UniPoly>> = m.rows().to_vec();
    if rows.is_empty() {
        return Err(Error::NotABasis);
    }
    loop {
        let mut pivots = Vec::with_capacity(rows.len());
        for r in &rows {
            pivots.push(pivot(r).ok_or(Error::NotABasis)?);
        }
        let mut clash = None;
        'outer: for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                if pivots[a].0 == pivots[b].0 {
                    clash = Some(if pivots[a].1 >= pivots[b].1 { (a, b) } else { (b, a) });
                    break 'outer;
                }
            }
        }
        let Some((hi, lo)) = clash else { break };
        let (j, dh) = pivots[hi];
        let dl = pivots[lo].1;
        let c = f.mul(rows[hi][j].leading_coeff(), f.inv(rows[lo][j].leading_coeff()).expect("nonzero"));
        let mult = UniPoly::monomial(FieldElem::new(c, f), dh - dl);
        let sub: Vec<UniPoly> = rows[lo].iter().map(|x| x * &mult).collect();
        for (x, s) in rows[hi].iter_mut().zip(sub) {
            *x = &*x - &s;
        }
    }
    rows.sort_by_key(|r| vector_height(r));
    let minima = rows.iter().map(|r| vector_height(r)).collect();
    Ok(ReducedBasis {
        vectors: PolyMatrix::new(f, rows)?,
        minima,
    })
}

/// `sum_i max(b - s_i, 0)`: the F_p-dimension of the vectors of height `< b`
/// in the row module.
pub fn linear_space_count(m: &PolyMatrix, b: usize) -> Result<usize> {
    let r = reduce_basis(m)?;
    Ok(r.minima.iter().map(|&s| b.saturating_sub(s)).sum())
}
