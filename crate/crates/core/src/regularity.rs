//! Regularity of the underlying matroid.
//!
//! An oriented matroid is regular exactly when its underlying matroid is
//! binary, and a matroid is binary exactly when every circuit meets every
//! cocircuit in an even number of elements.

use serde::{Deserialize, Serialize};

use crate::om::OrientedMatroid;
use crate::signed::elements;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddIntersection {
    pub circuit: Vec<usize>,
    pub cocircuit: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityVerdict {
    pub regular: bool,
    /// First circuit/cocircuit pair, in storage order, with odd intersection.
    pub witness: Option<OddIntersection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Regular,
    NonRegular,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Regular => "regular",
            Classification::NonRegular => "non-regular",
        })
    }
}

pub fn is_binary(m: &OrientedMatroid) -> RegularityVerdict {
    for c in m.circuits() {
        for d in m.cocircuits() {
            if (c.support() & d.support()).count_ones() % 2 == 1 {
                return RegularityVerdict {
                    regular: false,
                    witness: Some(OddIntersection {
                        circuit: elements(c.support()).collect(),
                        cocircuit: elements(d.support()).collect(),
                    }),
                };
            }
        }
    }
    RegularityVerdict { regular: true, witness: None }
}

pub fn classify(m: &OrientedMatroid) -> Classification {
    if is_binary(m).regular {
        Classification::Regular
    } else {
        Classification::NonRegular
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_regular() {
        let tri = OrientedMatroid::from_matrix("tri", &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(is_binary(&tri), RegularityVerdict { regular: true, witness: None });
    }

    #[test]
    fn u24_witness() {
        let u = OrientedMatroid::uniform(2, 4).unwrap();
        let v = is_binary(&u);
        assert!(!v.regular);
        let w = v.witness.unwrap();
        assert_eq!(w.circuit, vec![0, 1, 2]);
        assert_eq!(w.cocircuit, vec![0, 1, 2]);
        let json = serde_json::to_value(is_binary(&u)).unwrap();
        assert_eq!(json["witness"]["circuit"], serde_json::json!([0, 1, 2]));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&OrientedMatroid::uniform(2, 5).unwrap()), Classification::NonRegular);
        let k4 = OrientedMatroid::from_graph("k4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(classify(&k4), Classification::Regular);
        assert_eq!(classify(&OrientedMatroid::uniform(3, 3).unwrap()), Classification::Regular);
        let json = serde_json::to_value(RegularityVerdict { regular: true, witness: None }).unwrap();
        assert_eq!(json, serde_json::json!({"regular": true, "witness": null}));
    }
}
