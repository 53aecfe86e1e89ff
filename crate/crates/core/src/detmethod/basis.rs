//! Monomial bases and evaluation matrices.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffalg::{Exponents, MultiPoly, PrimeField, UniPoly, VarList};
use crate::polylattice::PolyMatrix;

/// The monomials of degree `M` (or of degree `<= M`) in a fixed number of
/// variables, in descending lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    degree: u32,
    nvars: usize,
    homogeneous: bool,
    monomials: Vec<Exponents>,
}

fn push_monomials(nvars: usize, degree: u32, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
    if prefix.len() + 1 == nvars {
        prefix.push(degree);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for e in (0..=degree).rev() {
        prefix.push(e);
        push_monomials(nvars, degree - e, prefix, out);
        prefix.pop();
    }
}

impl MonomialBasis {
    /// All monomials of total degree exactly `degree`.
    pub fn homogeneous(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                monomials.push(Vec::new());
            }
        } else {
            push_monomials(nvars, degree, &mut Vec::new(), &mut monomials);
        }
        MonomialBasis {
            degree,
            nvars,
            homogeneous: true,
            monomials,
        }
    }

    /// All monomials of total degree at most `degree`.
    pub fn up_to(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        for d in (0..=degree).rev() {
            monomials.extend(Self::homogeneous(nvars, d).monomials);
        }
        MonomialBasis {
            degree,
            nvars,
            homogeneous: false,
            monomials,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.monomials.iter().position(|m| m.as_slice() == e)
    }

    /// The row `(m(a))_m` of monomial values at a point.
    pub fn eval_row(&self, point: &[UniPoly]) -> Result<Vec<UniPoly>> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let Some(first) = point.first() else {
            return Ok(Vec::new());
        };
        let f = first.field();
        let powers: Vec<Vec<UniPoly>> = point
            .iter()
            .map(|x| {
                let mut p = vec![UniPoly::one(f)];
                for k in 1..=self.degree as usize {
                    let next = &p[k - 1] * x;
                    p.push(next);
                }
                p
            })
            .collect();
        Ok(self
            .monomials
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .fold(UniPoly::one(f), |acc, (i, &k)| &acc * &powers[i][k as usize])
            })
            .collect())
    }

    /// Evaluation matrix: one row per point, one column per monomial.
    pub fn eval_matrix(&self, field: PrimeField, points: &[Vec<UniPoly>]) -> Result<PolyMatrix> {
        let rows = points
            .par_iter()
            .map(|p| self.eval_row(p))
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok(PolyMatrix::zero(field, 0, self.len()));
        }
        PolyMatrix::new(field, rows)
    }

    /// `sum_j c_j m_j` as a polynomial in `vars`.
    pub fn combine(&self, field: PrimeField, coeffs: &[UniPoly], vars: VarList) -> MultiPoly<UniPoly> {
        MultiPoly::from_terms(
            field,
            vars,
            self.monomials
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// `|B[M]|` for forms in `nvars` variables.
pub fn basis_size(nvars: usize, m: u32) -> u128 {
    if nvars == 0 {
        return u128::from(m == 0);
    }
    binomial(m as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

/// `s = |B[M]| - |B[M-d]|` for a hypersurface of degree `d` in P^{n+1}: the
/// number of degree-`M` forms independent modulo multiples of the equation.
pub fn residual_size(n: usize, d: u32, m: u32) -> u128 {
    let all = basis_size(n + 2, m);
    if m < d {
        all
    } else {
        all - basis_size(n + 2, m - d)
    }
}

/// Main term `d M^n / n!` of [`residual_size`].
pub fn residual_main_term(n: usize, d: u32, m: u32) -> f64 {
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    d as f64 * (m as f64).powi(n as i32) / fact
}
