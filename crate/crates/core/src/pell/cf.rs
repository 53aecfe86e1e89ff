//! Pell instances and fundamental units by continued fractions of `sqrt(beta)`.

use serde::{Deserialize, Serialize};

use super::series::{poly_sqrt, sqrt_series};
use crate::error::{Error, Result};
use crate::ffalg::{PrimeField, UniPoly};

/// Default cap on continued-fraction steps.
pub const MAX_CF_STEPS: usize = 100_000;

/// `x^2 - beta y^2 = gamma` over F_p[t].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellInstance {
    beta: UniPoly,
    gamma: UniPoly,
}

impl PellInstance {
    pub fn new(beta: UniPoly, gamma: UniPoly) -> Result<Self> {
        check_beta(&beta)?;
        if gamma.is_zero() {
            return Err(Error::ZeroGamma);
        }
        if gamma.field() != beta.field() {
            return Err(Error::FieldMismatch(gamma.field().p(), beta.field().p()));
        }
        Ok(PellInstance { beta, gamma })
    }

    pub fn beta(&self) -> &UniPoly {
        &self.beta
    }

    pub fn gamma(&self) -> &UniPoly {
        &self.gamma
    }

    pub fn field(&self) -> PrimeField {
        self.beta.field()
    }

    /// `x^2 - beta y^2 - gamma`.
    pub fn residual(&self, x: &UniPoly, y: &UniPoly) -> UniPoly {
        &(&(x * x) - &(&self.beta * &(y * y))) - &self.gamma
    }
}

fn check_beta(beta: &UniPoly) -> Result<()> {
    if beta.field().p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    sqrt_series(beta, 1)?;
    if poly_sqrt(beta).is_some() {
        return Err(Error::SquareBeta);
    }
    Ok(())
}

/// `u + v sqrt(beta)` with `u^2 - beta v^2 = norm` a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    pub u: UniPoly,
    pub v: UniPoly,
    pub norm: u64,
    /// Continued-fraction steps until the unit appeared.
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitJson {
    pub u: String,
    pub v: String,
    pub norm: u64,
    pub steps: usize,
}

impl Unit {
    pub fn to_json(&self) -> UnitJson {
        UnitJson {
            u: self.u.to_string(),
            v: self.v.to_string(),
            norm: self.norm,
            steps: self.steps,
        }
    }
}

/// Expands `sqrt(beta) = [a_0; a_1, ...]` with complete quotients
/// `(P_i + sqrt(beta)) / Q_i` and stops at the first convergent `p_i / q_i`
/// whose norm `p_i^2 - beta q_i^2 = (-1)^{i+1} Q_{i+1}` is constant.
pub fn continued_fraction_unit(beta: &UniPoly) -> Result<Unit> {
    continued_fraction_unit_bounded(beta, MAX_CF_STEPS)
}

pub fn continued_fraction_unit_bounded(beta: &UniPoly, max_steps: usize) -> Result<Unit> {
    check_beta(beta)?;
    let f = beta.field();
    let d = beta.degree().unwrap_or(0);
    let a0 = sqrt_series(beta, d / 2 + 1)?.polynomial_part();
    let (mut p_prev, mut p_cur) = (UniPoly::one(f), a0.clone());
    let (mut q_prev, mut q_cur) = (UniPoly::zero(f), UniPoly::one(f));
    let mut big_p = UniPoly::zero(f);
    let mut big_q = UniPoly::one(f);
    let mut a = a0.clone();
    for i in 0..max_steps {
        // advance the complete quotient to index i + 1
        big_p = &(&a * &big_q) - &big_p;
        big_q = (beta - &(&big_p * &big_p))
            .exact_div(&big_q)
            .ok_or_else(|| Error::Invalid("continued fraction lost exactness".into()))?;
        if big_q.is_constant() {
            let norm = if i % 2 == 0 { f.neg(big_q.coeff(0)) } else { big_q.coeff(0) };
            return Ok(Unit {
                u: p_cur,
                v: q_cur,
                norm,
                steps: i + 1,
            });
        }
        a = (&big_p + &a0).div_rem(&big_q)?.0;
        let p_next = &(&a * &p_cur) + &p_prev;
        let q_next = &(&a * &q_cur) + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
    }
    Err(Error::NoPeriod(max_steps))
}

/// `(x + y sqrt(beta)) (u + v sqrt(beta))`.
pub fn quad_mul(beta: &UniPoly, a: (&UniPoly, &UniPoly), b: (&UniPoly, &UniPoly)) -> (UniPoly, UniPoly) {
    let (x, y) = a;
    let (u, v) = b;
    (&(x * u) + &(beta * &(y * v)), &(x * v) + &(y * u))
}

/// A unit of norm 1: the fundamental unit scaled by `1/sqrt(norm)` when the
/// norm is a square, its square divided by the norm otherwise.
pub fn norm_one_unit(beta: &UniPoly, unit: &Unit) -> (UniPoly, UniPoly) {
    let f = beta.field();
    if let Some(r) = f.sqrt(unit.norm) {
        let k = f.inv(r).expect("nonzero norm");
        return (unit.u.scale(k), unit.v.scale(k));
    }
    let (u2, v2) = quad_mul(beta, (&unit.u, &unit.v), (&unit.u, &unit.v));
    let k = f.inv(unit.norm).expect("nonzero norm");
    (u2.scale(k), v2.scale(k))
}
