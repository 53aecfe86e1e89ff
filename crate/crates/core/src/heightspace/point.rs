use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffalg::UniPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Affine,
    Projective,
}

/// A point with coordinates in F_p[t]. Projective points are stored primitive:
/// coprime coordinates, not all zero, first nonzero coordinate with monic
/// leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeightPoint {
    coords: Vec<UniPoly>,
    kind: PointKind,
}

impl HeightPoint {
    pub fn affine(coords: Vec<UniPoly>) -> Self {
        HeightPoint {
            coords,
            kind: PointKind::Affine,
        }
    }

    /// Divides out the gcd of the coordinates and fixes the scalar.
    pub fn projective(coords: Vec<UniPoly>) -> Result<Self> {
        let first = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroProjectivePoint)?;
        let f = first.field();
        let g = coords
            .iter()
            .fold(UniPoly::zero(f), |g, c| g.gcd_or_zero(c));
        let mut out: Vec<UniPoly> = coords
            .iter()
            .map(|c| c.exact_div(&g).expect("gcd divides"))
            .collect();
        let lead = out.iter().find(|c| !c.is_zero()).unwrap().leading_coeff();
        let s = f.inv(lead).expect("nonzero");
        for c in &mut out {
            *c = c.scale(s);
        }
        Ok(HeightPoint {
            coords: out,
            kind: PointKind::Projective,
        })
    }

    pub fn coords(&self) -> &[UniPoly] {
        &self.coords
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    /// `max_i deg x_i`; the zero affine point has height 0.
    pub fn height(&self) -> usize {
        height(&self.coords)
    }
}

/// Maximum coordinate degree, with `deg 0 = 0`.
pub fn height(coords: &[UniPoly]) -> usize {
    coords.iter().map(|c| c.height()).max().unwrap_or(0)
}

impl fmt::Display for HeightPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = match self.kind {
            PointKind::Affine => ", ",
            PointKind::Projective => " : ",
        };
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(sep))
    }
}

impl fmt::Debug for HeightPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffalg::PrimeField;

    #[test]
    fn heights() {
        let f = PrimeField::new(5).unwrap();
        let p = |c: &[i64]| UniPoly::from_i64(f, c);
        assert_eq!(HeightPoint::affine(vec![p(&[1, 0, 1]), p(&[0, 1])]).height(), 2);
        let x = HeightPoint::projective(vec![p(&[0, 1]), p(&[0, 0, 1]), p(&[0, 1, 1])]).unwrap();
        assert_eq!(x.coords(), &[p(&[1]), p(&[0, 1]), p(&[1, 1])]);
        assert_eq!(x.height(), 1);
        assert_eq!(HeightPoint::affine(vec![p(&[]); 3]).height(), 0);
        assert!(HeightPoint::projective(vec![p(&[]); 2]).is_err());
    }
}
