//! Worked examples as regression fixtures.

use serde::{Deserialize, Serialize};

use super::{dim_estimate, enumerate, CensusOptions, Declared, VarietyTemplate};
use crate::heightspace::Ambient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Expectation {
    /// `N(q) = q^k` exactly for every prime.
    ExactPower(i64),
    /// Fitted dimension equals the value.
    Dim(i64),
    /// Fitted dimension at most the value (an empty X(b) passes).
    AtMost(i64),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: &'static str,
    pub template: VarietyTemplate,
    pub bs: Vec<usize>,
    pub declared: Declared,
    pub expect: fn(usize) -> Expectation,
    /// Primes to use instead of the suite's, for instances whose points
    /// only exist over some fields.
    pub primes: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub id: String,
    pub b: usize,
    pub qs: Vec<u64>,
    pub counts: Vec<u128>,
    pub fitted_dim: Option<i64>,
    pub stable: bool,
    pub leading_constants: Vec<f64>,
    pub expected: Expectation,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn ceil_div(a: usize, b: usize) -> i64 {
    a.div_ceil(b) as i64
}

pub fn example_suite() -> Vec<Fixture> {
    let a2 = Ambient::Affine(2);
    let p2 = Ambient::Projective(2);
    vec![
        Fixture {
            id: "affine y=x^2",
            template: VarietyTemplate::new(a2, &["x", "y"], &["y - x^2"]),
            bs: (1..=6).collect(),
            declared: Declared { m: 1, d: 2, irreducible: true },
            expect: |b| Expectation::ExactPower(ceil_div(b, 2)),
            primes: None,
        },
        Fixture {
            id: "affine curve y=x^3",
            template: VarietyTemplate::new(a2, &["x", "y"], &["y - x^3"]),
            bs: (1..=7).collect(),
            declared: Declared { m: 1, d: 3, irreducible: true },
            expect: |b| Expectation::ExactPower(ceil_div(b, 3)),
            primes: None,
        },
        Fixture {
            id: "projective yz=x^2",
            template: VarietyTemplate::new(p2, &["x", "y", "z"], &["y*z - x^2"]),
            bs: (1..=3).collect(),
            declared: Declared { m: 1, d: 2, irreducible: true },
            expect: |b| Expectation::Dim(2 * ceil_div(b, 2) - 1),
            primes: None,
        },
        Fixture {
            id: "projective yz^2=x^3",
            template: VarietyTemplate::new(p2, &["x", "y", "z"], &["y*z^2 - x^3"]),
            bs: (1..=3).collect(),
            declared: Declared { m: 1, d: 3, irreducible: true },
            expect: |b| Expectation::Dim(2 * ceil_div(b, 3) - 1),
            primes: None,
        },
        Fixture {
            id: "projective tx^2=yz",
            template: VarietyTemplate::new(p2, &["x", "y", "z"], &["t*x^2 - y*z"]),
            bs: (1..=3).collect(),
            declared: Declared { m: 1, d: 2, irreducible: true },
            expect: |b| Expectation::AtMost(2 * (b as i64 - 1) / 2 + 1),
            primes: None,
        },
        Fixture {
            id: "affine xy=z",
            template: VarietyTemplate::new(Ambient::Affine(3), &["x", "y", "z"], &["x*y - z"]),
            bs: vec![2, 3],
            declared: Declared { m: 2, d: 2, irreducible: true },
            expect: |b| Expectation::Dim(b as i64 + 1),
            primes: None,
        },
        Fixture {
            id: "Pell y^2-(t^2+t+1)x^2=t-1",
            template: VarietyTemplate::new(a2, &["x", "y"], &["y^2 - (t^2 + t + 1)*x^2 - (t - 1)"]),
            bs: vec![2, 3],
            declared: Declared { m: 1, d: 2, irreducible: true },
            expect: |_| Expectation::Dim(0),
            primes: Some(vec![11, 23, 47, 59]),
        },
        Fixture {
            id: "projective sextic surface",
            template: VarietyTemplate::new(
                Ambient::Projective(3),
                &["x0", "x1", "x2", "x3"],
                &["x0^6 + x1^5*x2 + x2^5*x3 + t*x3^6 + x0*x1*x2*x3^3"],
            ),
            bs: vec![1, 2],
            declared: Declared { m: 2, d: 6, irreducible: true },
            expect: |b| Expectation::AtMost(2 * b as i64),
            primes: None,
        },
    ]
}

/// Runs every fixture at each of its bounds (restricted to `b_range` when
/// given) over the primes `qs`.
pub fn run_example_suite(qs: &[u64], b_range: Option<(usize, usize)>, opts: &CensusOptions) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    for fx in example_suite() {
        for &b in &fx.bs {
            if let Some((lo, hi)) = b_range {
                if b < lo || b > hi {
                    continue;
                }
            }
            let qs = fx.primes.as_deref().unwrap_or(qs);
            rows.push(run_fixture(&fx, b, qs, opts));
        }
    }
    rows
}

pub fn run_fixture(fx: &Fixture, b: usize, qs: &[u64], opts: &CensusOptions) -> SuiteRow {
    let expected = (fx.expect)(b);
    let mut row = SuiteRow {
        id: fx.id.to_string(),
        b,
        qs: qs.to_vec(),
        counts: Vec::new(),
        fitted_dim: None,
        stable: false,
        leading_constants: Vec::new(),
        expected,
        pass: false,
        error: None,
    };
    if let Expectation::ExactPower(k) = expected {
        let mut ok = true;
        for &q in qs {
            match enumerate(&fx.template, b, q, opts) {
                Ok(r) => {
                    ok &= r.count == (q as u128).pow(k as u32);
                    row.counts.push(r.count);
                }
                Err(e) => {
                    row.error = Some(e.to_string());
                    return row;
                }
            }
        }
        row.fitted_dim = Some(k);
        row.stable = true;
        row.pass = ok;
        return row;
    }
    match dim_estimate(fx.id, &fx.template, b, qs, Some(fx.declared), opts) {
        Ok(rep) => {
            row.counts = rep.counts;
            row.fitted_dim = rep.fit.dim;
            row.stable = rep.fit.stable;
            row.leading_constants = rep.fit.leading_constants;
            row.pass = match expected {
                Expectation::Dim(k) => rep.fit.dim == Some(k) && rep.fit.stable,
                Expectation::AtMost(k) => rep.fit.dim.is_none_or(|d| d <= k),
                Expectation::ExactPower(_) => unreachable!(),
            } && !rep.bound.is_some_and(|b| b.violated);
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}
