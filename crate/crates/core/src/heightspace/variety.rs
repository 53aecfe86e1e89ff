use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::HeightPoint;
use crate::error::{Error, Result};
use crate::ffalg::{MultiPoly, PrimeField, UniPoly, VarList};

/// Ambient space of a variety over K: `A^n` or `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum Ambient {
    Affine(usize),
    Projective(usize),
}

impl Ambient {
    /// Number of coordinates: `n` for `A^n`, `n + 1` for `P^n`.
    pub fn ncoords(self) -> usize {
        match self {
            Ambient::Affine(n) => n,
            Ambient::Projective(n) => n + 1,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Ambient::Affine(n) | Ambient::Projective(n) => n,
        }
    }

    pub fn is_projective(self) -> bool {
        matches!(self, Ambient::Projective(_))
    }

    /// Default coordinate names: `x1..xn` affine, `x0..xn` projective.
    pub fn default_vars(self) -> Vec<String> {
        match self {
            Ambient::Affine(n) => (1..=n).map(|i| format!("x{i}")).collect(),
            Ambient::Projective(n) => (0..=n).map(|i| format!("x{i}")).collect(),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Affine(n) => write!(f, "A^{n}"),
            Ambient::Projective(n) => write!(f, "P^{n}"),
        }
    }
}

/// A variety over K = F_p(t) cut out by equations over F_p[t], optionally
/// intersected with open conditions `g != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietySpec {
    field: PrimeField,
    ambient: Ambient,
    vars: VarList,
    equations: Vec<MultiPoly<UniPoly>>,
    inequations: Vec<MultiPoly<UniPoly>>,
}

impl VarietySpec {
    pub fn new(
        field: PrimeField,
        ambient: Ambient,
        vars: VarList,
        equations: Vec<MultiPoly<UniPoly>>,
        inequations: Vec<MultiPoly<UniPoly>>,
    ) -> Result<Self> {
        if vars.len() != ambient.ncoords() {
            return Err(Error::LengthMismatch {
                expected: ambient.ncoords(),
                got: vars.len(),
            });
        }
        for g in equations.iter().chain(&inequations) {
            if g.vars() != &vars {
                return Err(Error::Invalid(format!(
                    "polynomial over ({}) in a space with coordinates ({})",
                    g.vars().join(","),
                    vars.join(",")
                )));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(g.field().p(), field.p()));
            }
        }
        if ambient.is_projective() {
            if let Some(g) = equations.iter().chain(&inequations).find(|g| !g.is_homogeneous()) {
                return Err(Error::Invalid(format!("projective equation {g} is not homogeneous")));
            }
        }
        Ok(VarietySpec {
            field,
            ambient,
            vars,
            equations,
            inequations,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn equations(&self) -> &[MultiPoly<UniPoly>] {
        &self.equations
    }

    pub fn inequations(&self) -> &[MultiPoly<UniPoly>] {
        &self.inequations
    }

    /// Largest total degree among the equations.
    pub fn degree(&self) -> u32 {
        self.equations
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(1)
    }

    /// Evaluates at a point of O_K^n: on X and off every inequation.
    pub fn contains_point(&self, x: &HeightPoint) -> Result<bool> {
        if x.coords().len() != self.ambient.ncoords() {
            return Err(Error::LengthMismatch {
                expected: self.ambient.ncoords(),
                got: x.coords().len(),
            });
        }
        let on = self.equations.iter().all(|g| g.eval(x.coords()).is_zero());
        let open = self.inequations.iter().all(|g| !g.eval(x.coords()).is_zero());
        Ok(on && open)
    }
}
