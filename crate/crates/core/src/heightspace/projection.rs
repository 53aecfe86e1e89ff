use rand::Rng;

use super::point::HeightPoint;
use super::variety::{Ambient, VarietySpec};
use crate::error::{Error, Result};
use crate::ffalg::{resultant_in, FieldElem, MultiPoly, UniPoly, VarList};

/// Image of a projection from a constant point, with the linear point map.
#[derive(Clone, Debug)]
pub struct Projection {
    pub image: VarietySpec,
    pub center: Vec<FieldElem>,
    pub drop: usize,
}

impl Projection {
    /// `x -> (x_i - (p_i / p_drop) x_drop)_{i != drop}`, made primitive.
    pub fn apply(&self, x: &HeightPoint) -> Result<HeightPoint> {
        let pd = self.center[self.drop].inv().expect("nonzero at drop");
        let xd = &x.coords()[self.drop];
        let coords = x
            .coords()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != self.drop)
            .map(|(i, c)| c - &xd.scale((self.center[i] * pd).value()))
            .collect();
        HeightPoint::projective(coords)
    }
}

/// Whether the constant point `p` lies on X (all equations vanish at it).
pub fn center_on_variety(x: &VarietySpec, p: &[FieldElem]) -> bool {
    let coords: Vec<UniPoly> = p.iter().map(|&c| UniPoly::constant(c)).collect();
    x.equations().iter().all(|g| g.eval(&coords).is_zero())
}

/// Projects a projective variety from the constant point `p` onto the
/// hyperplane of the remaining coordinates. Image equations are obtained by
/// eliminating the line parameter with pairwise resultants; when these share
/// a nonconstant factor the gcd is returned as a single equation.
pub fn project_from_point(x: &VarietySpec, p: &[FieldElem], drop: usize) -> Result<Projection> {
    let Ambient::Projective(n) = x.ambient() else {
        return Err(Error::Invalid("projection needs a projective variety".into()));
    };
    if p.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            got: p.len(),
        });
    }
    if drop > n || p[drop].is_zero() {
        return Err(Error::InvalidCenter(format!("coordinate {drop} of the center is zero")));
    }
    if center_on_variety(x, p) {
        return Err(Error::CenterOnVariety);
    }
    let f = x.field();
    // variables: the image coordinates followed by the line parameter s
    let mut names: Vec<String> = x
        .vars()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop)
        .map(|(_, v)| v.clone())
        .collect();
    let image_vars: VarList = names.clone().into();
    names.push("s".into());
    let work: VarList = names.into();
    let s_idx = n;
    let images: Vec<MultiPoly<UniPoly>> = (0..=n)
        .map(|i| {
            let s_term = MultiPoly::var(f, work.clone(), s_idx).scale_by(&UniPoly::constant(p[i]));
            if i == drop {
                s_term
            } else {
                let j = if i < drop { i } else { i - 1 };
                MultiPoly::var(f, work.clone(), j).add(&s_term)
            }
        })
        .collect();
    let lifted: Vec<MultiPoly<UniPoly>> = x
        .equations()
        .iter()
        .map(|g| g.substitute(&images))
        .filter(|g| !g.is_zero())
        .collect();
    let mut eliminated = Vec::new();
    for (a, g) in lifted.iter().enumerate() {
        if !g.uses_var(s_idx) {
            eliminated.push(g.clone());
        }
        for h in &lifted[a + 1..] {
            let r = resultant_in(g, h, s_idx)?;
            if !r.is_zero() {
                eliminated.push(r);
            }
        }
    }
    let eliminated: Vec<MultiPoly<UniPoly>> = eliminated
        .into_iter()
        .map(|g| g.remove_var(s_idx).expect("s eliminated").primitive_part())
        .collect();
    let common = eliminated
        .iter()
        .fold(MultiPoly::zero(f, image_vars.clone()), |acc, g| acc.gcd(g));
    let equations = if !common.is_zero() && !common.is_constant() {
        vec![common]
    } else {
        let mut uniq: Vec<MultiPoly<UniPoly>> = Vec::new();
        for g in eliminated {
            if !uniq.contains(&g) {
                uniq.push(g);
            }
        }
        uniq
    };
    let image = VarietySpec::new(f, Ambient::Projective(n - 1), image_vars, equations, vec![])?;
    Ok(Projection {
        image,
        center: p.to_vec(),
        drop,
    })
}

/// Samples constant centers until one lies off X and, when `expected_degree`
/// is given, yields a single image equation of that degree.
pub fn find_projection_center<R: Rng>(
    x: &VarietySpec,
    drop: usize,
    expected_degree: Option<u32>,
    attempts: usize,
    rng: &mut R,
) -> Result<Projection> {
    let f = x.field();
    let k = x.ambient().ncoords();
    for _ in 0..attempts {
        let mut p: Vec<FieldElem> = (0..k).map(|_| FieldElem::new(rng.gen_range(0..f.p()), f)).collect();
        if p[drop].is_zero() {
            p[drop] = f.one();
        }
        if center_on_variety(x, &p) {
            continue;
        }
        let proj = project_from_point(x, &p, drop)?;
        match expected_degree {
            None => return Ok(proj),
            Some(d) => {
                let eqs = proj.image.equations();
                if eqs.len() == 1 && eqs[0].total_degree() == Some(d) {
                    return Ok(proj);
                }
            }
        }
    }
    Err(Error::InvalidCenter(format!("no valid center found in {attempts} attempts")))
}
