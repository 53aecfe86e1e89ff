//! Auxiliary polynomials vanishing on a congruence class of X(b).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::basis::{residual_size, MonomialBasis};
use super::valuation::mult_at;
use crate::census::{self, CensusOptions};
use crate::error::{Error, Result};
use crate::ffalg::{var_list, FieldElem, MultiPoly, PrimeField, UniPoly};
use crate::heightspace::{expand, Ambient, VarietySpec};
use crate::polylattice::kernel_lattice;

/// A prime `t - lambda` and a residue point `P` on the reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceDatum {
    pub lambda: u64,
    pub point: Vec<u64>,
    /// Checked against the computed multiplicity when given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct AuxOptions {
    pub census: CensusOptions,
    /// Cap on enumerated class points.
    pub max_points: usize,
    /// Overrides the default degree budget `50 (d^2 b + d^3 l)`.
    pub m_max: Option<u32>,
    pub seed: u64,
}

impl Default for AuxOptions {
    fn default() -> Self {
        AuxOptions {
            census: CensusOptions::default(),
            max_points: 100_000,
            m_max: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuxPolyResult {
    pub g: MultiPoly<UniPoly>,
    /// Degree of the auxiliary form found.
    pub m: u32,
    pub m_budget: u32,
    /// Enumerated points of the class (original coordinates).
    pub certificate: Vec<Vec<UniPoly>>,
    /// Rows of the final evaluation system.
    pub rank: usize,
    /// `|B[M]| - |B[M-d]|` at the accepted degree.
    pub s: u128,
    /// Empty class: `g` is a monomial.
    pub vacuous: bool,
    /// Multivariate division confirmed `f` does not divide `g`.
    pub coprime: bool,
    pub mus: Vec<u32>,
    pub kappa: f64,
    pub kappa_bound: f64,
}

impl AuxPolyResult {
    pub fn kappa_satisfied(&self) -> bool {
        self.kappa >= self.kappa_bound
    }

    pub fn to_json(&self) -> AuxPolyJson {
        AuxPolyJson {
            g: self.g.to_string(),
            m: self.m,
            m_budget: self.m_budget,
            g_height: self.g.coeff_height(),
            class_size: self.certificate.len(),
            rank: self.rank,
            s: self.s,
            vacuous: self.vacuous,
            coprime: self.coprime,
            mus: self.mus.clone(),
            kappa: self.kappa,
            kappa_bound: self.kappa_bound,
            kappa_satisfied: self.kappa_satisfied(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuxPolyJson {
    pub g: String,
    pub m: u32,
    pub m_budget: u32,
    pub g_height: usize,
    pub class_size: usize,
    pub rank: usize,
    pub s: u128,
    pub vacuous: bool,
    pub coprime: bool,
    pub mus: Vec<u32>,
    pub kappa: f64,
    pub kappa_bound: f64,
    pub kappa_satisfied: bool,
}

/// Regression budget for the degree search.
pub fn degree_budget(d: u32, b: usize, ell: usize) -> u32 {
    let (d, b, l) = (d as u64, b as u64, ell as u64);
    (50 * (d * d * b + d * d * d * l)).min(u32::MAX as u64) as u32
}

/// `sum 1/mu^{1/n}`.
pub fn kappa(mus: &[u32], n: usize) -> f64 {
    mus.iter().map(|&m| (m as f64).powf(-1.0 / n as f64)).sum()
}

/// Right-hand side of the class-size hypothesis for a form of height `h` in
/// P^{n+1}.
pub fn kappa_bound_projective(n: usize, d: u32, b: usize, h: usize) -> f64 {
    let (n, d) = (n as f64, d as f64);
    (n + 1.0) * (b as f64 - 1.0) / (n * d.powf(1.0 / n)) - (h as f64 - 1.0) / (n * d.powf(1.0 + 1.0 / n))
}

/// Affine version, with `h = h(f_d)`.
pub fn kappa_bound_affine(n: usize, d: u32, b: usize, h: usize) -> f64 {
    let (n, d) = (n as f64, d as f64);
    (b as f64 - 1.0) / d.powf(1.0 / n) - (h as f64 - 1.0) / (n * d.powf(1.0 + 1.0 / n))
}

/// Points of X(b) (for X cut out by `f`) reducing to every datum.
pub fn class_points(
    f: &MultiPoly<UniPoly>,
    ambient: Ambient,
    b: usize,
    data: &[CongruenceDatum],
    opts: &AuxOptions,
) -> Result<Vec<Vec<UniPoly>>> {
    let field = f.field();
    let spec = VarietySpec::new(field, ambient, f.vars().clone(), vec![f.clone()], Vec::new())?;
    let sys = expand(&spec, b)?;
    let nc = ambient.ncoords();
    let mut extra = Vec::new();
    for dat in data {
        if dat.point.len() != nc {
            return Err(Error::LengthMismatch {
                expected: nc,
                got: dat.point.len(),
            });
        }
        // x_i(lambda) as a linear form in the coefficient variables
        let at: Vec<MultiPoly<FieldElem>> = (0..nc)
            .map(|i| {
                let mut p = MultiPoly::zero(field, sys.vars().clone());
                let mut pw = 1u64;
                for j in 0..b {
                    let mut e = vec![0; sys.nvars()];
                    e[i * b + j] = 1;
                    p.add_term(e, FieldElem::new(pw, field));
                    pw = field.mul(pw, dat.lambda % field.p());
                }
                p
            })
            .collect();
        let c = |v: u64| MultiPoly::constant(FieldElem::new(v, field), sys.vars().clone());
        if ambient.is_projective() {
            for i in 0..nc {
                for k in i + 1..nc {
                    extra.push(at[i].mul(&c(dat.point[k])).sub(&at[k].mul(&c(dat.point[i]))));
                }
            }
        } else {
            for i in 0..nc {
                extra.push(at[i].sub(&c(dat.point[i])));
            }
        }
    }
    let sys = sys.with_equations(extra);
    let pts = census::points(&sys, &opts.census, opts.max_points)?;
    Ok(pts.iter().map(|p| sys.coords_of(p)).collect())
}

/// Validates the data against `f` and returns the multiplicities.
fn multiplicities(f: &MultiPoly<UniPoly>, projective: bool, data: &[CongruenceDatum]) -> Result<Vec<u32>> {
    let q = f.field().p();
    data.iter()
        .map(|dat| {
            if dat.lambda >= q {
                return Err(Error::Invalid(format!("lambda = {} is not reduced mod {q}", dat.lambda)));
            }
            if projective && dat.point.iter().all(|&v| v == 0) {
                return Err(Error::ZeroProjectivePoint);
            }
            let mu = mult_at(&f.eval_t(dat.lambda), &dat.point)?;
            if let Some(claimed) = dat.mu {
                if claimed != mu {
                    return Err(Error::Invalid(format!(
                        "declared multiplicity {claimed} but the point has multiplicity {mu}"
                    )));
                }
            }
            Ok(mu)
        })
        .collect()
}

/// Auxiliary form for a projective hypersurface `f = 0` in P^{n+1}.
pub fn auxiliary_poly_projective(
    f: &MultiPoly<UniPoly>,
    b: usize,
    data: &[CongruenceDatum],
    opts: &AuxOptions,
) -> Result<AuxPolyResult> {
    let nv = f.nvars();
    if nv < 3 {
        return Err(Error::Invalid("need a hypersurface of positive dimension".into()));
    }
    if f.is_zero() || !f.is_homogeneous() || f.is_constant() {
        return Err(Error::Invalid("expected a nonconstant form".into()));
    }
    if !f.content().is_constant() {
        return Err(Error::Invalid(format!("{f} is not primitive")));
    }
    let n = nv - 2;
    let d = f.total_degree().unwrap_or(0);
    let mus = multiplicities(f, true, data)?;
    let pts = class_points(f, Ambient::Projective(nv - 1), b, data, opts)?;
    let budget = opts.m_max.unwrap_or_else(|| degree_budget(d, b, data.len()));
    let finish = |g: &MultiPoly<UniPoly>| {
        let g = g.primitive_part();
        g.try_div_poly(f).is_none().then_some(g)
    };
    let core = search(f, n, d, &pts, budget, &finish, opts.seed)?;
    Ok(AuxPolyResult {
        g: core.g,
        m: core.m,
        m_budget: budget,
        certificate: pts,
        rank: core.rank,
        s: core.s,
        vacuous: core.vacuous,
        coprime: true,
        kappa: kappa(&mus, n),
        kappa_bound: kappa_bound_projective(n, d, b, f.coeff_height()),
        mus,
    })
}

/// Auxiliary polynomial for an affine hypersurface `f = 0` in A^{n+1}: shift
/// so that `f(0) != 0`, homogenize with `H = (t - lambda)^{b-1}`, solve the
/// projective problem on the points `(H : x)` and set `x_0 = H`.
pub fn auxiliary_poly_affine(
    f: &MultiPoly<UniPoly>,
    b: usize,
    data: &[CongruenceDatum],
    opts: &AuxOptions,
) -> Result<AuxPolyResult> {
    let nv = f.nvars();
    if nv < 2 {
        return Err(Error::Invalid("need a hypersurface of positive dimension".into()));
    }
    if f.is_zero() || f.is_constant() {
        return Err(Error::Invalid("expected a nonconstant polynomial".into()));
    }
    if !f.content().is_constant() {
        return Err(Error::Invalid(format!("{f} is not primitive")));
    }
    let field = f.field();
    let n = nv - 1;
    let d = f.total_degree().unwrap_or(0);
    let mus = multiplicities(f, false, data)?;
    let pts = class_points(f, Ambient::Affine(nv), b, data, opts)?;
    let budget = opts.m_max.unwrap_or_else(|| degree_budget(d, b, data.len()));

    let shift = off_variety_point(f)?;
    let shift_c: Vec<UniPoly> = shift.iter().map(|&v| UniPoly::constant(FieldElem::new(v, field))).collect();
    let fs = f.shift(&shift_c);
    let f0 = fs.constant_term();
    let lambda = (0..field.p())
        .find(|&l| f0.eval(l) != 0)
        .ok_or(Error::NoNormalizingPoint(field.p()))?;
    let h = UniPoly::linear(field, lambda).pow(b as u32 - 1);
    let big_f = homogenize(&fs, &h);

    let proj_pts: Vec<Vec<UniPoly>> = pts
        .iter()
        .map(|x| {
            std::iter::once(h.clone())
                .chain(x.iter().zip(&shift_c).map(|(xi, c)| xi - c))
                .collect()
        })
        .collect();
    let neg_shift: Vec<UniPoly> = shift_c.iter().map(|c| -c).collect();
    let images: Vec<MultiPoly<UniPoly>> = std::iter::once(MultiPoly::constant(h.clone(), f.vars().clone()))
        .chain((0..nv).map(|i| MultiPoly::var(field, f.vars().clone(), i)))
        .collect();
    let finish = |g: &MultiPoly<UniPoly>| {
        let g = g.substitute(&images).shift(&neg_shift);
        if g.is_zero() {
            return None;
        }
        let g = g.primitive_part();
        g.try_div_poly(f).is_none().then_some(g)
    };
    let core = search(&big_f, n, d, &proj_pts, budget, &finish, opts.seed)?;
    if let Some(x) = pts.iter().find(|x| !core.g.eval(x).is_zero()) {
        return Err(Error::Invalid(format!(
            "dehomogenized auxiliary polynomial misses ({})",
            x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(AuxPolyResult {
        g: core.g,
        m: core.m,
        m_budget: budget,
        certificate: pts,
        rank: core.rank,
        s: core.s,
        vacuous: core.vacuous,
        coprime: true,
        kappa: kappa(&mus, n),
        kappa_bound: kappa_bound_affine(n, d, b, f.homogeneous_part(d).coeff_height()),
        mus,
    })
}

/// First constant point (in base-q counting order) with `f != 0` there; the
/// origin when `f(0) != 0`.
fn off_variety_point(f: &MultiPoly<UniPoly>) -> Result<Vec<u64>> {
    let field = f.field();
    let q = field.p();
    let nv = f.nvars();
    let total = (q as u128).saturating_pow(nv as u32).min(1 << 20) as u64;
    for code in 0..total {
        let mut c = code;
        let pt: Vec<u64> = (0..nv)
            .map(|_| {
                let v = c % q;
                c /= q;
                v
            })
            .collect();
        let at: Vec<UniPoly> = pt.iter().map(|&v| UniPoly::constant(FieldElem::new(v, field))).collect();
        if !f.eval(&at).is_zero() {
            return Ok(pt);
        }
    }
    Err(Error::NoNormalizingPoint(q))
}

/// `F(x_0, x) = sum_i H^i f_i(x) x_0^{d-i}` in a new leading variable.
pub fn homogenize(f: &MultiPoly<UniPoly>, h: &UniPoly) -> MultiPoly<UniPoly> {
    let d = f.total_degree().unwrap_or(0);
    let mut name = String::from("w");
    while f.vars().contains(&name) {
        name.push('_');
    }
    let names: Vec<String> = std::iter::once(name).chain(f.vars().iter().cloned()).collect();
    let vars = var_list(&names);
    let mut out = MultiPoly::zero(f.field(), vars);
    for (e, c) in f.terms() {
        let i: u32 = e.iter().sum();
        let mut ne = vec![d - i];
        ne.extend(e.iter().copied());
        out.add_term(ne, c * &h.pow(i));
    }
    out
}

struct CoreResult {
    g: MultiPoly<UniPoly>,
    m: u32,
    rank: usize,
    s: u128,
    vacuous: bool,
}

/// Degree search shared by both cases. `form` is homogeneous in `n + 2`
/// variables and every point lies on it; `finish` maps a kernel form to the
/// final polynomial, or rejects it when it is a multiple of the equation.
fn search(
    form: &MultiPoly<UniPoly>,
    n: usize,
    d: u32,
    points: &[Vec<UniPoly>],
    budget: u32,
    finish: &dyn Fn(&MultiPoly<UniPoly>) -> Option<MultiPoly<UniPoly>>,
    seed: u64,
) -> Result<CoreResult> {
    let field = form.field();
    let nv = form.nvars();
    let vars = form.vars().clone();
    if points.is_empty() {
        for m in d..=budget.max(d) {
            let basis = MonomialBasis::homogeneous(nv, m);
            for e in basis.monomials() {
                let mono = MultiPoly::monomial(UniPoly::one(field), e.clone(), vars.clone());
                if let Some(g) = finish(&mono) {
                    return Ok(CoreResult {
                        g,
                        m,
                        rank: 0,
                        s: residual_size(n, d, m),
                        vacuous: true,
                    });
                }
            }
        }
        return Err(Error::DegreeBudgetExhausted(budget as usize));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ext = Extension::new(field, &mut rng);
    let at_tau: Vec<Vec<UniPoly>> = points
        .iter()
        .map(|x| x.iter().map(|c| ext.eval(c)).collect())
        .collect();
    for m in d..=budget {
        let s = residual_size(n, d, m);
        let basis = MonomialBasis::homogeneous(nv, m);
        let mut ech = Echelon::new(&ext);
        let mut xi: Vec<usize> = Vec::new();
        for (k, x) in at_tau.iter().enumerate() {
            if xi.len() as u128 >= s {
                break;
            }
            if ech.try_add(ext.eval_row(&basis, x)) {
                xi.push(k);
            }
        }
        'grow: while (xi.len() as u128) < s {
            let rows: Vec<Vec<UniPoly>> = xi.iter().map(|&k| points[k].clone()).collect();
            let a = basis.eval_matrix(field, &rows)?;
            let ker = kernel_lattice(&a)?;
            for v in ker.vectors.rows() {
                let g_form = basis.combine(field, v, vars.clone());
                let Some(g) = finish(&g_form) else {
                    continue;
                };
                match points.iter().position(|x| !g_form.eval(x).is_zero()) {
                    None => {
                        return Ok(CoreResult {
                            g,
                            m,
                            rank: xi.len(),
                            s,
                            vacuous: false,
                        })
                    }
                    Some(k) => {
                        // the sampled evaluation missed a dependency
                        xi.push(k);
                        continue 'grow;
                    }
                }
            }
            break;
        }
    }
    Err(Error::DegreeBudgetExhausted(budget as usize))
}

/// `F_p[t]/(m)` with `m` irreducible of large degree, and the image `tau` of
/// `t` chosen at random: ranks over F_p(t) are read off after `t -> tau`
/// except with negligible probability.
struct Extension {
    modulus: UniPoly,
    tau: UniPoly,
}

impl Extension {
    fn new(field: PrimeField, rng: &mut ChaCha8Rng) -> Self {
        let bits = (field.p() as f64).log2();
        let k = ((60.0 / bits).ceil() as usize).max(2);
        let modulus = loop {
            let mut c: Vec<u64> = (0..k).map(|_| rng.gen_range(0..field.p())).collect();
            c.push(1);
            let m = UniPoly::from_raw(field, c);
            if m.is_irreducible() {
                break m;
            }
        };
        let tau = UniPoly::from_raw(field, (0..k).map(|_| rng.gen_range(0..field.p())).collect());
        Extension { modulus, tau }
    }

    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        (a * b).rem(&self.modulus).expect("nonzero modulus")
    }

    fn inv(&self, a: &UniPoly) -> UniPoly {
        let (_, s, _) = a.xgcd(&self.modulus).expect("nonzero");
        s.rem(&self.modulus).expect("nonzero modulus")
    }

    fn eval(&self, c: &UniPoly) -> UniPoly {
        let f = c.field();
        c.coeffs().iter().rev().fold(UniPoly::zero(f), |acc, &a| {
            &self.mul(&acc, &self.tau) + &UniPoly::constant(FieldElem::new(a, f))
        })
    }

    fn eval_row(&self, basis: &MonomialBasis, x: &[UniPoly]) -> Vec<UniPoly> {
        let f = self.modulus.field();
        let deg = basis.degree() as usize;
        let powers: Vec<Vec<UniPoly>> = x
            .iter()
            .map(|xi| {
                let mut p = vec![UniPoly::one(f)];
                for k in 1..=deg {
                    let next = self.mul(&p[k - 1], xi);
                    p.push(next);
                }
                p
            })
            .collect();
        basis
            .monomials()
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .fold(UniPoly::one(f), |acc, (i, &k)| self.mul(&acc, &powers[i][k as usize]))
            })
            .collect()
    }
}

/// Incremental row echelon form over an [`Extension`].
struct Echelon<'a> {
    ext: &'a Extension,
    rows: Vec<(usize, Vec<UniPoly>)>,
}

impl<'a> Echelon<'a> {
    fn new(ext: &'a Extension) -> Self {
        Echelon { ext, rows: Vec::new() }
    }

    /// Adds `v` if it is independent of the rows so far.
    fn try_add(&mut self, mut v: Vec<UniPoly>) -> bool {
        for (pc, r) in &self.rows {
            let c = v[*pc].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x = &*x - &self.ext.mul(&c, y);
                }
            }
        }
        let Some(pc) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = self.ext.inv(&v[pc]);
        let v = v.iter().map(|c| self.ext.mul(c, &inv)).collect();
        self.rows.push((pc, v));
        true
    }
}
