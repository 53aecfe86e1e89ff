use std::fmt;

use crate::cli::parse::parse_poly;
use crate::error::{Error, Result};
use crate::ffalg::{bareiss_det, var_list, PrimeField, UniPoly};

/// A dense matrix over F_p[t].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    field: PrimeField,
    rows: Vec<Vec<UniPoly>>,
    ncols: usize,
}

impl PolyMatrix {
    pub fn new(field: PrimeField, rows: Vec<Vec<UniPoly>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Shape(format!("ragged rows: {} vs {ncols} entries", r.len())));
        }
        Ok(PolyMatrix { field, rows, ncols })
    }

    pub fn zero(field: PrimeField, nrows: usize, ncols: usize) -> Self {
        PolyMatrix {
            field,
            rows: vec![vec![UniPoly::zero(field); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.rows[i][i] = UniPoly::one(field);
        }
        m
    }

    /// From integer coefficient lists (lowest degree first).
    pub fn from_i64(field: PrimeField, rows: &[Vec<Vec<i64>>]) -> Result<Self> {
        Self::new(
            field,
            rows.iter()
                .map(|r| r.iter().map(|c| UniPoly::from_i64(field, c)).collect())
                .collect(),
        )
    }

    /// Entries written as polynomials in `t`.
    pub fn from_strings(field: PrimeField, rows: &[Vec<String>]) -> Result<Self> {
        let none = var_list::<&str>(&[]);
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Ok(parse_poly(s, field, &none)?.constant_term()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, rows)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<UniPoly>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[UniPoly] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &UniPoly {
        &self.rows[i][j]
    }

    pub fn into_rows(self) -> Vec<Vec<UniPoly>> {
        self.rows
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        PolyMatrix {
            field: self.field,
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ncols != o.nrows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols,
                o.nrows(),
                o.ncols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..o.ncols)
                    .map(|j| {
                        r.iter()
                            .zip(&o.rows)
                            .fold(UniPoly::zero(self.field), |acc, (a, orow)| &acc + &(a * &orow[j]))
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::new(self.field, rows)
    }

    /// `v * self` for a row vector `v`.
    pub fn combine_rows(&self, v: &[UniPoly]) -> Vec<UniPoly> {
        (0..self.ncols)
            .map(|j| {
                v.iter()
                    .zip(&self.rows)
                    .fold(UniPoly::zero(self.field), |acc, (a, r)| &acc + &(a * &r[j]))
            })
            .collect()
    }

    /// `self * x` for a column vector `x`.
    pub fn apply(&self, x: &[UniPoly]) -> Vec<UniPoly> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .fold(UniPoly::zero(self.field), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Rank over K by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let (a, b) = (m[rank][col].clone(), m[i][col].clone());
                for j in col..self.ncols {
                    let v = &(&m[i][j] * &a) - &(&m[rank][j] * &b);
                    m[i][j] = v;
                }
                // divide out content to keep degrees small
                let g = m[i].iter().fold(UniPoly::zero(self.field), |g, c| g.gcd_or_zero(c));
                if !g.is_zero() && !g.is_constant() {
                    for c in &mut m[i] {
                        *c = c.exact_div(&g).expect("content divides");
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Determinant of a square submatrix given by column indices.
    pub fn minor(&self, cols: &[usize]) -> UniPoly {
        let sub: Vec<Vec<UniPoly>> = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
            .collect();
        bareiss_det(sub, &UniPoly::one(self.field))
    }

    /// All maximal minors (`nrows x nrows`), columns in lexicographic order.
    pub fn maximal_minors(&self) -> Vec<UniPoly> {
        combinations(self.ncols, self.nrows())
            .iter()
            .map(|c| self.minor(c))
            .collect()
    }

    /// Largest entry degree.
    pub fn degree(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter().map(|c| c.height()))
            .max()
            .unwrap_or(0)
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let e: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", e.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix{self}")
    }
}
