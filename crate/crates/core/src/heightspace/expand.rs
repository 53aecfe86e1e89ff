use serde::{Deserialize, Serialize};

use super::point::HeightPoint;
use super::variety::{Ambient, VarietySpec};
use crate::error::{Error, Result};
use crate::ffalg::{var_list, FieldElem, MultiPoly, PrimeField, UniPoly, VarList};

/// X(b) as a variety over F_p: each coordinate `x_i = sum_j a_ij t^j` with
/// `j < b`; the equations are the t-coefficients of the base equations.
#[derive(Clone, Debug)]
pub struct ExpandedSystem {
    base: VarietySpec,
    b: usize,
    vars: VarList,
    equations: Vec<MultiPoly<FieldElem>>,
    /// For every base inequation, the list of its t-coefficients; a point
    /// satisfies the condition when at least one of them is nonzero.
    inequations: Vec<Vec<MultiPoly<FieldElem>>>,
}

/// Serialized form of an [`ExpandedSystem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandedJson {
    pub ambient: Ambient,
    pub n: usize,
    pub b: usize,
    pub p: u64,
    pub variables: Vec<String>,
    pub equations: Vec<String>,
    pub inequations: Vec<Vec<String>>,
}

/// Name of the variable holding the `t^j` coefficient of coordinate `name`.
pub fn coefficient_var(name: &str, j: usize) -> String {
    format!("{name}_{j}")
}

/// Splits a polynomial over F_p[t] into its t-coefficients.
pub fn t_coefficients(g: &MultiPoly<UniPoly>) -> Vec<MultiPoly<FieldElem>> {
    let f = g.field();
    let top = g.terms().map(|(_, c)| c.height()).max().unwrap_or(0);
    let mut out: Vec<MultiPoly<FieldElem>> = vec![MultiPoly::zero(f, g.vars().clone()); top + 1];
    for (e, c) in g.terms() {
        for (k, &v) in c.coeffs().iter().enumerate() {
            out[k].add_term(e.clone(), FieldElem::new(v, f));
        }
    }
    out
}

pub fn expand(x: &VarietySpec, b: usize) -> Result<ExpandedSystem> {
    if b == 0 {
        return Err(Error::Invalid("height bound b must be positive".into()));
    }
    let f = x.field();
    let names: Vec<String> = x
        .vars()
        .iter()
        .flat_map(|v| (0..b).map(move |j| coefficient_var(v, j)))
        .collect();
    let vars = var_list(&names);
    let images = coordinate_images(f, &vars, x.vars().len(), b);
    let collect = |g: &MultiPoly<UniPoly>| {
        t_coefficients(&g.substitute(&images))
            .into_iter()
            .filter(|e| !e.is_zero())
            .collect::<Vec<_>>()
    };
    let equations = x.equations().iter().flat_map(collect).collect();
    let inequations = x.inequations().iter().map(collect).collect();
    Ok(ExpandedSystem {
        base: x.clone(),
        b,
        vars,
        equations,
        inequations,
    })
}

/// `x_i -> sum_j t^j a_ij` as polynomials over F_p[t] in the `a` variables.
fn coordinate_images(f: PrimeField, vars: &VarList, ncoords: usize, b: usize) -> Vec<MultiPoly<UniPoly>> {
    (0..ncoords)
        .map(|i| {
            let mut p = MultiPoly::zero(f, vars.clone());
            for j in 0..b {
                let mut e = vec![0; vars.len()];
                e[i * b + j] = 1;
                p.add_term(e, UniPoly::monomial(f.one(), j));
            }
            p
        })
        .collect()
}

impl ExpandedSystem {
    pub fn base(&self) -> &VarietySpec {
        &self.base
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn field(&self) -> PrimeField {
        self.base.field()
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ncoords(&self) -> usize {
        self.base.ambient().ncoords()
    }

    pub fn is_projective(&self) -> bool {
        self.base.ambient().is_projective()
    }

    pub fn equations(&self) -> &[MultiPoly<FieldElem>] {
        &self.equations
    }

    /// Adds equations in the coefficient variables, e.g. congruence conditions.
    pub fn with_equations(mut self, extra: Vec<MultiPoly<FieldElem>>) -> Self {
        self.equations.extend(extra.into_iter().filter(|e| !e.is_zero()));
        self
    }

    pub fn inequations(&self) -> &[Vec<MultiPoly<FieldElem>>] {
        &self.inequations
    }

    /// Reassembles coordinate polynomials from a coefficient vector.
    pub fn coords_of(&self, pt: &[u64]) -> Vec<UniPoly> {
        let f = self.field();
        pt.chunks(self.b)
            .map(|c| UniPoly::from_raw(f, c.iter().map(|&v| v % f.p()).collect()))
            .collect()
    }

    /// Coefficient vector of a point whose coordinates have degree `< b`.
    pub fn coefficients_of(&self, x: &HeightPoint) -> Result<Vec<u64>> {
        if x.coords().len() != self.ncoords() {
            return Err(Error::LengthMismatch {
                expected: self.ncoords(),
                got: x.coords().len(),
            });
        }
        if x.coords().iter().any(|c| c.degree().is_some_and(|d| d >= self.b)) {
            return Err(Error::Invalid(format!("point {x} has height >= {}", self.b)));
        }
        Ok(x.coords()
            .iter()
            .flat_map(|c| (0..self.b).map(move |j| c.coeff(j)))
            .collect())
    }

    pub fn contains(&self, pt: &[FieldElem]) -> Result<bool> {
        let raw: Vec<u64> = pt.iter().map(|e| e.value()).collect();
        self.contains_raw(&raw)
    }

    /// Membership of a coefficient vector: equations vanish, every open
    /// condition holds, and projective points are nonzero and primitive.
    pub fn contains_raw(&self, pt: &[u64]) -> Result<bool> {
        if pt.len() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                got: pt.len(),
            });
        }
        if self.equations.iter().any(|g| g.eval_raw(pt) != 0) {
            return Ok(false);
        }
        if !self
            .inequations
            .iter()
            .all(|grp| grp.iter().any(|g| g.eval_raw(pt) != 0))
        {
            return Ok(false);
        }
        if self.is_projective() {
            return Ok(is_primitive(&self.coords_of(pt)));
        }
        Ok(true)
    }

    pub fn to_json(&self) -> ExpandedJson {
        ExpandedJson {
            ambient: self.base.ambient(),
            n: self.base.ambient().dim(),
            b: self.b,
            p: self.field().p(),
            variables: self.vars.to_vec(),
            equations: self.equations.iter().map(|g| g.to_string()).collect(),
            inequations: self
                .inequations
                .iter()
                .map(|grp| grp.iter().map(|g| g.to_string()).collect())
                .collect(),
        }
    }
}

/// Coordinates not all zero with gcd 1.
pub fn is_primitive(coords: &[UniPoly]) -> bool {
    let Some(first) = coords.first() else {
        return false;
    };
    let mut g = UniPoly::zero(first.field());
    for c in coords {
        if c.is_zero() {
            continue;
        }
        g = g.gcd_or_zero(c);
        if g.is_constant() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parabola(f: PrimeField) -> VarietySpec {
        let v = var_list(&["x", "y"]);
        let x = MultiPoly::<UniPoly>::var(f, v.clone(), 0);
        let y = MultiPoly::<UniPoly>::var(f, v.clone(), 1);
        VarietySpec::new(f, Ambient::Affine(2), v, vec![y.sub(&x.pow(2))], vec![]).unwrap()
    }

    #[test]
    fn parabola_b2() {
        let f = PrimeField::new(5).unwrap();
        let s = expand(&parabola(f), 2).unwrap();
        let names: Vec<&str> = s.vars().iter().map(|s| s.as_str()).collect();
        assert_eq!(names, ["x_0", "x_1", "y_0", "y_1"]);
        let eqs: Vec<String> = s.equations().iter().map(|g| g.to_string()).collect();
        assert_eq!(eqs, ["4*x_0^2 + y_0", "3*x_0*x_1 + y_1", "4*x_1^2"]);
        assert!(s.contains_raw(&[2, 0, 4, 0]).unwrap());
        assert!(!s.contains_raw(&[0, 1, 0, 0]).unwrap());
        assert!(s.contains_raw(&[0, 1]).is_err());
    }

    #[test]
    fn empty_system_is_affine_space() {
        let f = PrimeField::new(5).unwrap();
        let v = var_list(&["x"]);
        let a1 = VarietySpec::new(f, Ambient::Affine(1), v, vec![], vec![]).unwrap();
        let s = expand(&a1, 3).unwrap();
        assert_eq!(s.nvars(), 3);
        assert!(s.equations().is_empty());
        assert!(s.contains_raw(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn projective_primitivity() {
        let f = PrimeField::new(3).unwrap();
        let v = var_list(&["x", "y", "z"]);
        let x = MultiPoly::<UniPoly>::var(f, v.clone(), 0);
        let y = MultiPoly::<UniPoly>::var(f, v.clone(), 1);
        let z = MultiPoly::<UniPoly>::var(f, v.clone(), 2);
        let t = MultiPoly::constant(UniPoly::t(f), v.clone());
        let g = t.mul(&x.pow(2)).sub(&y.mul(&z));
        let x = VarietySpec::new(f, Ambient::Projective(2), v, vec![g], vec![]).unwrap();
        let s = expand(&x, 1).unwrap();
        let eqs: Vec<String> = s.equations().iter().map(|g| g.to_string()).collect();
        assert_eq!(eqs, ["2*y_0*z_0", "x_0^2"]);
        // (0 : 1 : 0) is primitive and on X
        assert!(s.contains_raw(&[0, 1, 0]).unwrap());
        assert!(!s.contains_raw(&[0, 0, 0]).unwrap());
        let s2 = expand(&x, 2).unwrap();
        // (0 : t : 0) is not primitive
        assert!(!s2.contains_raw(&[0, 0, 0, 1, 0, 0]).unwrap());
    }
}
