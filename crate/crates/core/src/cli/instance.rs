//! JSON instance files.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::census::{Declared, Expectation, VarietyTemplate};
use crate::error::{Error, Result};
use crate::heightspace::Ambient;

/// One prime or a list of primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Primes {
    One(u64),
    Many(Vec<u64>),
}

impl Primes {
    pub fn to_vec(&self) -> Vec<u64> {
        match self {
            Primes::One(q) => vec![*q],
            Primes::Many(v) => v.clone(),
        }
    }
}

/// A variety with its declared invariants and expected results.
///
/// ```json
/// {"name": "parabola", "ambient": {"kind": "affine", "n": 2},
///  "variables": ["x", "y"], "q": [3, 5, 7], "equations": ["y - x^2"],
///  "declared": {"m": 1, "d": 2, "irreducible": true},
///  "bs": [1, 2, 3], "expected": {"3": {"kind": "exact_power", "value": 2}}}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default)]
    pub name: Option<String>,
    pub ambient: Ambient,
    #[serde(default)]
    pub variables: Option<Vec<String>>,
    #[serde(default)]
    pub q: Option<Primes>,
    pub equations: Vec<String>,
    #[serde(default)]
    pub inequations: Vec<String>,
    #[serde(default)]
    pub declared: Option<Declared>,
    /// Height bounds used by `census suite`.
    #[serde(default)]
    pub bs: Option<Vec<usize>>,
    /// Expected outcome per height bound.
    #[serde(default)]
    pub expected: BTreeMap<usize, Expectation>,
    #[serde(default)]
    pub notes: Option<String>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let inst: InstanceFile =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("instance file: {e}")))?;
        inst.validate()?;
        Ok(inst)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn template(&self) -> VarietyTemplate {
        VarietyTemplate {
            ambient: self.ambient,
            variables: self.variables.clone(),
            equations: self.equations.clone(),
            inequations: self.inequations.clone(),
        }
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.equations.join(", "))
    }

    /// Parses every equation and checks the declared degree of a single
    /// hypersurface.
    pub fn validate(&self) -> Result<()> {
        let tpl = self.template();
        let degree = tpl.degree()?;
        if let (Some(decl), [_]) = (&self.declared, self.equations.as_slice()) {
            if decl.d != degree {
                return Err(Error::Invalid(format!(
                    "declared degree {} but the equation has degree {degree}",
                    decl.d
                )));
            }
        }
        if let Some(q) = &self.q {
            for p in q.to_vec() {
                crate::ffalg::PrimeField::new(p)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let text = r#"{"name": "parabola", "ambient": {"kind": "affine", "n": 2},
            "variables": ["x", "y"], "q": [3, 5, 7], "equations": ["y - x^2"],
            "declared": {"m": 1, "d": 2, "irreducible": true},
            "expected": {"3": {"kind": "exact_power", "value": 2}}}"#;
        let inst = InstanceFile::from_json(text).unwrap();
        assert_eq!(inst.q, Some(Primes::Many(vec![3, 5, 7])));
        assert_eq!(inst.expected[&3], Expectation::ExactPower(2));
        let bad = text.replace("\"d\": 2", "\"d\": 3");
        assert!(matches!(InstanceFile::from_json(&bad), Err(Error::Invalid(_))));
        let single = r#"{"ambient": {"kind": "projective", "n": 2}, "q": 5, "equations": ["x1*x2 - x0^2"]}"#;
        let inst = InstanceFile::from_json(single).unwrap();
        assert_eq!(inst.template().vars().unwrap(), ["x0", "x1", "x2"]);
        assert!(InstanceFile::from_json(r#"{"ambient": {"kind": "affine", "n": 2}, "equations": ["y -"]}"#).is_err());
    }
}
