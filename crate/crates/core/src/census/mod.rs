//! Exhaustive enumeration of X(b)(F_q), dimension fits across primes, and the
//! regression fixtures.

mod enumerate;
mod fit;
mod plan;
mod suite;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use enumerate::{count, count_with_plan, points, CensusOptions, CountResult, DEFAULT_BUDGET};
pub use fit::{fit_dimension, least_squares, DimensionFit};
pub use plan::EnumerationPlan;
pub use suite::{example_suite, run_example_suite, run_fixture, Expectation, Fixture, SuiteRow};

use crate::cli::parse::{collect_vars, parse_poly};
use crate::error::{Error, Result};
use crate::ffalg::{var_list, PrimeField};
use crate::heightspace::{expand, Ambient, VarietySpec};

/// A variety given by equation strings, instantiable over any F_p.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VarietyTemplate {
    pub ambient: Ambient,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    pub equations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inequations: Vec<String>,
}

impl VarietyTemplate {
    pub fn new(ambient: Ambient, variables: &[&str], equations: &[&str]) -> Self {
        VarietyTemplate {
            ambient,
            variables: Some(variables.iter().map(|s| s.to_string()).collect()),
            equations: equations.iter().map(|s| s.to_string()).collect(),
            inequations: Vec::new(),
        }
    }

    pub fn with_inequations(mut self, ineqs: &[&str]) -> Self {
        self.inequations = ineqs.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Coordinate names: explicit, else discovered from the text when they
    /// fill the ambient space, else the default `x0..`/`x1..` names.
    pub fn vars(&self) -> Result<Vec<String>> {
        if let Some(v) = &self.variables {
            return Ok(v.clone());
        }
        let texts: Vec<&str> = self.equations.iter().chain(&self.inequations).map(|s| s.as_str()).collect();
        let found = collect_vars(&texts)?;
        if found.len() == self.ambient.ncoords() {
            return Ok(found);
        }
        let defaults = self.ambient.default_vars();
        match found.iter().find(|v| !defaults.contains(v)) {
            None => Ok(defaults),
            Some(v) => Err(Error::Invalid(format!(
                "cannot place variable '{v}' in {}; list the variables explicitly",
                self.ambient
            ))),
        }
    }

    pub fn instantiate(&self, field: PrimeField) -> Result<VarietySpec> {
        let vars = var_list(&self.vars()?);
        let parse_all = |texts: &[String]| -> Result<Vec<_>> {
            texts.iter().map(|s| parse_poly(s, field, &vars)).collect()
        };
        VarietySpec::new(
            field,
            self.ambient,
            vars.clone(),
            parse_all(&self.equations)?,
            parse_all(&self.inequations)?,
        )
    }

    /// Largest total degree of the equations over F_p for a probe prime.
    pub fn degree(&self) -> Result<u32> {
        Ok(self.instantiate(PrimeField::new(101)?)?.degree())
    }
}

/// Invariants asserted by the caller: dimension `m`, degree `d`, and whether
/// the variety is irreducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Declared {
    pub m: usize,
    pub d: u32,
    #[serde(default)]
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub bound: i64,
    pub violated: bool,
}

/// The dimension bound that applies to an instance with declared invariants.
pub fn applicable_bound(ambient: Ambient, decl: &Declared, b: usize) -> (String, i64) {
    let (m, d, b) = (decl.m as i64, decl.d as i64, b as i64);
    match ambient {
        Ambient::Affine(_) if m == 1 && decl.irreducible && d >= 1 => ("affine curve ceil(b/d)".into(), (b + d - 1) / d),
        Ambient::Affine(_) => ("affine m*b".into(), m * b),
        Ambient::Projective(_) if m == 1 && decl.irreducible && d >= 1 => {
            ("projective curve floor(2(b-1)/d)+1".into(), 2 * (b - 1) / d + 1)
        }
        Ambient::Projective(_) if decl.irreducible && d >= 2 => ("projective m*b".into(), m * b),
        Ambient::Projective(_) => ("projective (m+1)*b-1".into(), (m + 1) * b - 1),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub instance: String,
    pub ambient: Ambient,
    pub b: usize,
    pub qs: Vec<u64>,
    pub counts: Vec<u128>,
    pub visited: Vec<u64>,
    pub search_space: Vec<f64>,
    pub fit: DimensionFit,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub declared: Option<Declared>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundCheck>,
    pub elapsed_ms: u128,
}

impl CensusReport {
    /// The fitted dimension exceeds the declared bound.
    pub fn violates_bound(&self) -> bool {
        self.bound.as_ref().is_some_and(|b| b.violated)
    }
}

/// Counts `X(b)(F_q)` for one prime.
pub fn enumerate(template: &VarietyTemplate, b: usize, q: u64, opts: &CensusOptions) -> Result<CountResult> {
    let x = template.instantiate(PrimeField::new(q)?)?;
    count(&expand(&x, b)?, opts)
}

/// Counts over several primes and fits the dimension.
pub fn dim_estimate(
    instance: &str,
    template: &VarietyTemplate,
    b: usize,
    qs: &[u64],
    declared: Option<Declared>,
    opts: &CensusOptions,
) -> Result<CensusReport> {
    if qs.len() < 3 {
        return Err(Error::Invalid("dimension estimates need at least three primes".into()));
    }
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut visited = Vec::new();
    let mut search_space = Vec::new();
    for &q in qs {
        let r = enumerate(template, b, q, opts)?;
        counts.push(r.count);
        visited.push(r.visited);
        search_space.push(r.search_space);
    }
    let fit = fit_dimension(qs, &counts);
    let bound = declared.map(|d| {
        let (name, bound) = applicable_bound(template.ambient, &d, b);
        BoundCheck {
            name,
            bound,
            violated: fit.dim.is_some_and(|dim| dim > bound),
        }
    });
    Ok(CensusReport {
        instance: instance.to_string(),
        ambient: template.ambient,
        b,
        qs: qs.to_vec(),
        counts,
        visited,
        search_space,
        fit,
        declared,
        bound,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Fiber statistics of the projection of an affine X(b) to one coordinate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberStats {
    pub q: u64,
    pub total: u128,
    pub nonempty_fibers: u128,
    pub max_fiber: u128,
    /// Largest fiber over a nonzero value of the coordinate.
    pub max_fiber_off_zero: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SzReport {
    pub coordinate: usize,
    pub b: usize,
    pub m: usize,
    pub per_q: Vec<FiberStats>,
    pub image_fit: DimensionFit,
    pub max_fiber_fit: DimensionFit,
    /// `(m - 1) * b`, the fiber dimension allowed by the induction step.
    pub fiber_bound: i64,
    pub consistent: bool,
}

/// Reproduces the fibering step of the Schwartz–Zippel induction: the image
/// of the coordinate projection has dimension at most `b` and every fiber
/// dimension at most `(m - 1) b`.
pub fn sz_recursion_check(
    template: &VarietyTemplate,
    m: usize,
    b: usize,
    coordinate: usize,
    qs: &[u64],
    opts: &CensusOptions,
) -> Result<SzReport> {
    if template.ambient.is_projective() {
        return Err(Error::Invalid("fiber check needs an affine variety".into()));
    }
    if coordinate >= template.ambient.ncoords() {
        return Err(Error::Invalid(format!("no coordinate {coordinate}")));
    }
    let mut per_q = Vec::new();
    for &q in qs {
        let x = template.instantiate(PrimeField::new(q)?)?;
        let sys = expand(&x, b)?;
        let pts = points(&sys, opts, usize::MAX)?;
        let mut fibers: BTreeMap<Vec<u64>, u128> = BTreeMap::new();
        for p in &pts {
            *fibers.entry(p[coordinate * b..(coordinate + 1) * b].to_vec()).or_default() += 1;
        }
        per_q.push(FiberStats {
            q,
            total: pts.len() as u128,
            nonempty_fibers: fibers.len() as u128,
            max_fiber: fibers.values().copied().max().unwrap_or(0),
            max_fiber_off_zero: fibers
                .iter()
                .filter(|(k, _)| k.iter().any(|&c| c != 0))
                .map(|(_, &v)| v)
                .max()
                .unwrap_or(0),
        });
    }
    let image_fit = fit_dimension(qs, &per_q.iter().map(|s| s.nonempty_fibers).collect::<Vec<_>>());
    let max_fiber_fit = fit_dimension(qs, &per_q.iter().map(|s| s.max_fiber).collect::<Vec<_>>());
    let fiber_bound = (m as i64 - 1) * b as i64;
    let consistent = image_fit.dim.is_none_or(|d| d <= b as i64)
        && max_fiber_fit.dim.is_none_or(|d| d <= fiber_bound);
    Ok(SzReport {
        coordinate,
        b,
        m,
        per_q,
        image_fit,
        max_fiber_fit,
        fiber_bound,
        consistent,
    })
}
