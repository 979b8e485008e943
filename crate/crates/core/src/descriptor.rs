//! JSON descriptors for matroids and point configurations.

use serde::{Deserialize, Serialize};

use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::latpath::{lpm_unvalidated, LatticePath};
use crate::matroid::Matroid;
use crate::set::FiniteSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidDescriptor {
    Bases {
        groundset: Vec<u32>,
        bases: Vec<Vec<u32>>,
    },
    Uniform {
        n: i64,
        r: i64,
    },
    Transversal {
        groundset: Vec<u32>,
        sets: Vec<Vec<u32>>,
    },
    LatticePath {
        #[serde(rename = "U")]
        upper: String,
        #[serde(rename = "L")]
        lower: String,
    },
}

impl MatroidDescriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Descriptor(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    /// Boundary paths, for lattice path descriptors.
    pub fn boundaries(&self) -> Result<Option<(LatticePath, LatticePath)>> {
        match self {
            MatroidDescriptor::LatticePath { upper, lower } => Ok(Some((
                LatticePath::parse(upper)?,
                LatticePath::parse(lower)?,
            ))),
            _ => Ok(None),
        }
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidDescriptor::Bases { groundset, bases } => {
                let bases = bases
                    .iter()
                    .map(|b| FiniteSet::new(b.clone()))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_bases(FiniteSet::new(groundset.clone())?, bases)
            }
            MatroidDescriptor::Uniform { n, r } => Matroid::uniform(*n, *r, 1),
            MatroidDescriptor::Transversal { groundset, sets } => {
                let sets = sets
                    .iter()
                    .map(|s| FiniteSet::new(s.clone()))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::transversal(FiniteSet::new(groundset.clone())?, &sets)
            }
            // Lattice path families always satisfy the exchange axiom; only
            // the boundary order is checked.
            MatroidDescriptor::LatticePath { .. } => {
                let (u, l) = self.boundaries()?.expect("lattice path descriptor");
                lpm_unvalidated(&u, &l)
            }
        }
    }

    /// Bases descriptor listing every basis of `m`.
    pub fn of_matroid(m: &Matroid) -> Self {
        MatroidDescriptor::Bases {
            groundset: m.groundset().as_slice().to_vec(),
            bases: m.bases().iter().map(|b| b.as_slice().to_vec()).collect(),
        }
    }
}

/// `{"coords":[...],"points":[[0,1,...],...]}`.
pub fn config_from_json(text: &str) -> Result<PointConfig> {
    serde_json::from_str(text).map_err(|e| {
        // Validation errors raised inside TryFrom surface as serde messages.
        Error::Descriptor(e.to_string())
    })
}

pub fn config_to_json(config: &PointConfig) -> String {
    serde_json::to_string(config).expect("configuration serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fset;

    #[test]
    fn parses_each_kind() {
        let u = MatroidDescriptor::from_json(r#"{"type":"uniform","n":4,"r":2}"#).unwrap();
        assert_eq!(u.build().unwrap().num_bases(), 6);

        let b = MatroidDescriptor::from_json(
            r#"{"type":"bases","groundset":[1,2,3],"bases":[[1,2],[1,3]]}"#,
        )
        .unwrap();
        let m = b.build().unwrap();
        assert!(m.is_coloop(1).unwrap());

        let t = MatroidDescriptor::from_json(
            r#"{"type":"transversal","groundset":[1,2,3],"sets":[[1,2],[2,3]]}"#,
        )
        .unwrap();
        assert_eq!(
            t.build().unwrap().bases(),
            &[fset![1, 2], fset![1, 3], fset![2, 3]]
        );

        let l = MatroidDescriptor::from_json(r#"{"type":"lattice_path","U":"enen","L":"eenn"}"#)
            .unwrap();
        assert_eq!(l.build().unwrap().bases(), &[fset![1, 2], fset![1, 3]]);
        assert_eq!(MatroidDescriptor::from_json(&l.to_json()).unwrap(), l);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            MatroidDescriptor::from_json("{not json"),
            Err(Error::Descriptor(_))
        ));
        assert!(MatroidDescriptor::from_json(r#"{"type":"cube"}"#).is_err());
        let bad = MatroidDescriptor::from_json(
            r#"{"type":"bases","groundset":[1,2,3,4],"bases":[[1,2],[3,4]]}"#,
        )
        .unwrap();
        assert!(matches!(bad.build(), Err(Error::ExchangeViolation { .. })));
        let wrong = MatroidDescriptor::LatticePath {
            upper: "eenn".into(),
            lower: "enen".into(),
        };
        assert!(wrong.build().is_err());
    }

    #[test]
    fn config_round_trip() {
        let c = config_from_json(r#"{"coords":[1,2],"points":[[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(config_from_json(&config_to_json(&c)).unwrap(), c);
        assert!(config_from_json(r#"{"coords":[1,2],"points":[[0,2]]}"#).is_err());
    }
}
