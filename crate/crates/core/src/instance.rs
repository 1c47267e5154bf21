//! JSON instance files.
//!
//! ```json
//! {"name": "tri", "source": {"graph": {"vertices": 3, "edges": [[0,1],[1,2],[0,2]]}}}
//! ```
//!
//! `source` is one of `matrix`, `graph`, `uniform` or `signed`.

use serde::{Deserialize, Serialize};

use crate::error::{OmError, Result};
use crate::om::OrientedMatroid;
use crate::signed::SignedSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Matrix(Vec<Vec<i64>>),
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        r: usize,
        n: usize,
    },
    Signed {
        /// Ground set size; defaults to one past the largest element used.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        circuits: Vec<SignedSet>,
        cocircuits: Vec<SignedSet>,
    },
}

impl Source {
    pub fn build(&self, name: &str) -> Result<OrientedMatroid> {
        match self {
            Source::Matrix(rows) => OrientedMatroid::from_matrix(name, rows),
            Source::Graph { vertices, edges } => OrientedMatroid::from_graph(name, *vertices, edges),
            Source::Uniform { r, n } => Ok(OrientedMatroid::uniform(*r, *n)?.with_name(name)),
            Source::Signed { n, circuits, cocircuits } => {
                let used = circuits
                    .iter()
                    .chain(cocircuits)
                    .filter_map(|s| s.max_element())
                    .max()
                    .map_or(0, |e| e + 1);
                let n = n.unwrap_or(used);
                if used > n {
                    return Err(OmError::ElementOutOfRange { element: used - 1, n });
                }
                OrientedMatroid::from_signed_sets(name, n, circuits.clone(), cocircuits.clone())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub name: String,
    pub source: Source,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| OmError::Instance(e.to_string()))
    }

    pub fn build(&self) -> Result<OrientedMatroid> {
        self.source.build(&self.name)
    }
}
