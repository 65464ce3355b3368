use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Backend, Ring, TableSpec};

/// Ring spec file contents.
///
/// ```json
/// {"kind":"zmod","n":6}
/// {"kind":"matrix","k":2,"q":2}
/// {"kind":"table","p":2,"basis":["1","z"],"unity":[1,0],"constants":[[0,0,0,1],[0,1,1,1],[1,0,1,1]]}
/// ```
///
/// Any kind may carry an optional `"budget"` overriding the enumeration cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingSpec {
    Zmod {
        n: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        budget: Option<u64>,
    },
    Matrix {
        k: usize,
        q: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        budget: Option<u64>,
    },
    Table {
        p: u64,
        basis: Vec<String>,
        unity: Vec<u64>,
        #[serde(default)]
        constants: Vec<[u64; 4]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        budget: Option<u64>,
    },
}

impl RingSpec {
    pub fn from_json(text: &str) -> Result<RingSpec> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring specs always serialize")
    }

    pub fn build(&self) -> Result<Ring> {
        let (ring, budget) = match self {
            RingSpec::Zmod { n, budget } => (Ring::zmod(*n)?, budget),
            RingSpec::Matrix { k, q, budget } => (Ring::matrix(*k, *q)?, budget),
            RingSpec::Table { p, basis, unity, constants, budget } => {
                let constants = constants
                    .iter()
                    .map(|&[i, j, k, c]| {
                        let idx = |v: u64| usize::try_from(v).map_err(|_| Error::BadTensorShape(format!("index {v}")));
                        Ok((idx(i)?, idx(j)?, idx(k)?, c))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let spec = TableSpec { p: *p, basis: basis.clone(), unity: unity.clone(), constants };
                (Ring::table(&spec)?, budget)
            }
        };
        Ok(match budget {
            Some(b) => ring.with_budget(*b),
            None => ring,
        })
    }
}

impl Ring {
    /// A spec that rebuilds an isomorphic ring (with a fresh identity).
    pub fn to_spec(&self) -> RingSpec {
        match self.backend() {
            Backend::Modular { n } => RingSpec::Zmod { n: *n, budget: None },
            Backend::Matrix { k, q } => RingSpec::Matrix { k: *k, q: *q, budget: None },
            Backend::Table(t) => RingSpec::Table {
                p: t.p(),
                basis: t.labels().to_vec(),
                unity: t.unity().to_vec(),
                constants: t
                    .constants()
                    .into_iter()
                    .map(|(i, j, k, c)| [i as u64, j as u64, k as u64, c])
                    .collect(),
                budget: None,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingKind;

    #[test]
    fn parses_each_kind() {
        let z = RingSpec::from_json(r#"{"kind":"zmod","n":6}"#).unwrap().build().unwrap();
        assert_eq!((z.kind(), z.size()), (RingKind::Modular, 6));
        let m = RingSpec::from_json(r#"{"kind":"matrix","k":2,"q":3}"#).unwrap().build().unwrap();
        assert_eq!((m.kind(), m.size()), (RingKind::Matrix, 81));
        let t = RingSpec::from_json(
            r#"{"kind":"table","p":2,"basis":["1","z"],"unity":[1,0],"constants":[[0,0,0,1],[0,1,1,1],[1,0,1,1]],"budget":3}"#,
        )
        .unwrap()
        .build()
        .unwrap();
        assert_eq!((t.kind(), t.size(), t.budget()), (RingKind::Table, 4, 3));
    }

    #[test]
    fn malformed_specs_are_rejected() {
        for bad in [r#"{"kind":"zmod"}"#, r#"{"kind":"ring","n":3}"#, r#"{"kind":"zmod","n":6,"extra":1}"#, "not json"] {
            assert!(matches!(RingSpec::from_json(bad), Err(Error::InvalidSpec(_))), "{bad}");
        }
        assert_eq!(RingSpec::from_json(r#"{"kind":"zmod","n":1}"#).unwrap().build().unwrap_err(), Error::InvalidModulus(1));
    }

    #[test]
    fn spec_round_trips_through_json() {
        let t = RingSpec::Table {
            p: 3,
            basis: vec!["1".into(), "z".into()],
            unity: vec![1, 0],
            constants: vec![[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]],
            budget: None,
        };
        assert_eq!(RingSpec::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(t.build().unwrap().to_spec(), t);
    }
}
