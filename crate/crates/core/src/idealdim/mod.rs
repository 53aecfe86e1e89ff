//! Exact dimension and membership for small ideals over F_p via reduced
//! Gröbner bases in grevlex order.

mod groebner;

use serde::{Deserialize, Serialize};

pub use groebner::{buchberger, buchberger_criterion, GroebnerOptions, Mono, Poly};

use crate::error::{Error, Result};
use crate::ffalg::{FieldElem, MultiPoly, PrimeField, VarList};
use crate::heightspace::ExpandedSystem;

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    vars: VarList,
    polys: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Generators as polynomials, sorted by leading monomial.
    pub fn generators(&self) -> Vec<MultiPoly<FieldElem>> {
        self.polys
            .iter()
            .map(|p| groebner::from_poly(p, self.field, self.vars.clone()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.polys
            .iter()
            .filter_map(|p| groebner::leading_monomial(p).map(|m| m.0.clone()))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys
            .iter()
            .any(|p| groebner::leading_monomial(p).is_some_and(|m| m.degree() == 0))
    }

    /// Post-hoc check that all S-polynomials reduce to zero.
    pub fn verify(&self) -> bool {
        buchberger_criterion(&self.polys, self.field)
    }

    pub fn normal_form(&self, f: &MultiPoly<FieldElem>) -> Result<MultiPoly<FieldElem>> {
        self.check(f)?;
        let r = groebner::reduce(groebner::to_poly(f), &self.polys, self.field);
        Ok(groebner::from_poly(&r, self.field, self.vars.clone()))
    }

    fn check(&self, f: &MultiPoly<FieldElem>) -> Result<()> {
        if f.field() != self.field {
            return Err(Error::FieldMismatch(f.field().p(), self.field.p()));
        }
        if f.vars() != &self.vars {
            return Err(Error::Invalid(format!(
                "polynomial over ({}) against an ideal in ({})",
                f.vars().join(","),
                self.vars.join(",")
            )));
        }
        Ok(())
    }
}

pub fn groebner(field: PrimeField, vars: VarList, gens: &[MultiPoly<FieldElem>], opts: &GroebnerOptions) -> Result<GroebnerBasis> {
    if let Some(g) = gens.iter().find(|g| g.vars() != &vars || g.field() != field) {
        return Err(Error::Invalid(format!("generator {g} is not in the ambient ring")));
    }
    let polys = buchberger(gens.iter().map(groebner::to_poly).collect(), vars.len(), field, opts)?;
    Ok(GroebnerBasis { field, vars, polys })
}

/// Basis of the ideal of the equations of an expanded system (open
/// conditions are ignored).
pub fn groebner_of_system(sys: &ExpandedSystem, opts: &GroebnerOptions) -> Result<GroebnerBasis> {
    groebner(sys.field(), sys.vars().clone(), sys.equations(), opts)
}

/// Size of a largest set of variables containing the support of no leading
/// monomial: the dimension of the ideal.
pub fn krull_dimension(g: &GroebnerBasis) -> Result<usize> {
    if g.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = g.vars.len();
    let supports: Vec<u32> = g
        .leading_monomials()
        .iter()
        .map(|m| {
            m.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let best = (0u32..(1u32 << n))
        .filter(|&s| supports.iter().all(|&sup| sup & !s != 0))
        .map(|s| s.count_ones())
        .max()
        .unwrap_or(0);
    Ok(best as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub member: bool,
    /// Normal form modulo the basis; zero iff `member`.
    pub normal_form: String,
}

pub fn ideal_member(f: &MultiPoly<FieldElem>, g: &GroebnerBasis) -> Result<Membership> {
    let nf = g.normal_form(f)?;
    Ok(Membership {
        member: nf.is_zero(),
        normal_form: nf.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffalg::var_list;

    #[test]
    fn small_bases() {
        let f = PrimeField::new(7).unwrap();
        let vars = var_list(&["x", "y"]);
        let x = MultiPoly::<FieldElem>::var(f, vars.clone(), 0);
        let y = MultiPoly::<FieldElem>::var(f, vars.clone(), 1);
        let g = groebner(f, vars.clone(), &[y.sub(&x.pow(2))], &GroebnerOptions::default()).unwrap();
        assert_eq!(g.generators(), [x.pow(2).sub(&y)]);
        assert_eq!(krull_dimension(&g).unwrap(), 1);
        let g = groebner(f, vars.clone(), &[x.pow(2), x.mul(&y)], &GroebnerOptions::default()).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.verify());
        assert_eq!(krull_dimension(&g).unwrap(), 1);
        let empty = groebner(f, vars.clone(), &[], &GroebnerOptions::default()).unwrap();
        assert_eq!(krull_dimension(&empty).unwrap(), 2);
        let pt = groebner(f, vars.clone(), &[x.clone(), y.clone()], &GroebnerOptions::default()).unwrap();
        assert_eq!(krull_dimension(&pt).unwrap(), 0);
        let one = MultiPoly::one(f, vars.clone());
        let unit = groebner(f, vars.clone(), &[x.clone(), x.add(&one)], &GroebnerOptions::default()).unwrap();
        assert!(matches!(krull_dimension(&unit), Err(Error::UnitIdeal)));
        assert!(ideal_member(&MultiPoly::zero(f, vars), &pt).unwrap().member);
    }
}
