//! Built-in named instances with recorded expected values.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::instance::Source;
use crate::om::OrientedMatroid;
use crate::regularity::classify;
use crate::regularity::Classification;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    Regular,
    NonRegular,
    HasLoop,
    HasColoop,
    LooplessColoopless,
}

impl Tag {
    /// Tags implied by the structure of a built instance.
    pub fn derive(m: &OrientedMatroid) -> Vec<Tag> {
        let mut tags = vec![match classify(m) {
            Classification::Regular => Tag::Regular,
            Classification::NonRegular => Tag::NonRegular,
        }];
        if m.loops() != 0 {
            tags.push(Tag::HasLoop);
        }
        if m.coloops() != 0 {
            tags.push(Tag::HasColoop);
        }
        if m.loops() == 0 && m.coloops() == 0 {
            tags.push(Tag::LooplessColoopless);
        }
        tags
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Value quoted from a published source.
    Published,
    /// Value produced by an exhaustive oracle and frozen as a regression baseline.
    DerivedOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recorded<T> {
    pub value: T,
    pub provenance: Provenance,
}

const fn oracle<T>(value: T) -> Recorded<T> {
    Recorded { value, provenance: Provenance::DerivedOracle }
}

const fn published<T>(value: T) -> Recorded<T> {
    Recorded { value, provenance: Provenance::Published }
}

/// Expected values, in the order `(1,1), (1,2), (2,1), (1,0), (0,1)` for the
/// evaluations and the matching reversal settings for the class counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub evaluations: Recorded<[u64; 5]>,
    pub class_counts: Recorded<[u64; 5]>,
    pub regular: Recorded<bool>,
    /// Number of acyclic cocircuit reversal classes when a published value exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acyclic_cocircuit_classes: Option<Recorded<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub source: Source,
    pub tags: Vec<Tag>,
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<OrientedMatroid> {
        self.source.build(&self.name)
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn is_regular(&self) -> bool {
        self.has_tag(Tag::Regular)
    }
}

fn graph(vertices: usize, edges: &[(usize, usize)]) -> Source {
    Source::Graph { vertices, edges: edges.to_vec() }
}

fn cycle(k: usize) -> Source {
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    graph(k, &edges)
}

fn entry(name: &str, description: &str, source: Source, tags: &[Tag], expected: Option<Expected>) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        description: description.into(),
        source,
        tags: tags.to_vec(),
        expected,
    }
}

/// Regular entries: class counts equal the evaluations.
fn regular(evaluations: [u64; 5]) -> Option<Expected> {
    Some(Expected {
        evaluations: oracle(evaluations),
        class_counts: oracle(evaluations),
        regular: oracle(true),
        acyclic_cocircuit_classes: None,
    })
}

fn non_regular(evaluations: [u64; 5], class_counts: [u64; 5], acyclic_published: Option<u64>) -> Option<Expected> {
    Some(Expected {
        evaluations: oracle(evaluations),
        class_counts: oracle(class_counts),
        regular: oracle(false),
        acyclic_cocircuit_classes: acyclic_published.map(published),
    })
}

/// U_{2,4} with one extra row and column making the new element a coloop.
fn u24_with_coloop() -> Source {
    Source::Matrix(vec![vec![1, 0, 1, 1, 0], vec![0, 1, 1, 2, 0], vec![0, 0, 0, 0, 1]])
}

pub fn catalog_instances() -> Vec<CatalogEntry> {
    use Tag::*;
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    vec![
        entry("tri", "triangle graph, U_{2,3}", cycle(3), &[Regular, LooplessColoopless], regular([3, 4, 7, 2, 1])),
        entry("c4", "4-cycle graph", cycle(4), &[Regular, LooplessColoopless], regular([4, 5, 15, 3, 1])),
        entry("c5", "5-cycle graph", cycle(5), &[Regular, LooplessColoopless], regular([5, 6, 31, 4, 1])),
        entry("k4", "complete graph K4", graph(4, &k4), &[Regular, LooplessColoopless], regular([16, 38, 38, 6, 6])),
        entry("path2", "path with two edges (two coloops)", graph(3, &[(0, 1), (1, 2)]), &[Regular, HasColoop], regular([1, 1, 4, 1, 0])),
        entry("loop1", "a single loop", graph(1, &[(0, 0)]), &[Regular, HasLoop], regular([1, 2, 1, 0, 1])),
        entry(
            "loop_tri",
            "triangle plus a loop (element 0)",
            graph(3, &[(0, 0), (0, 1), (1, 2), (0, 2)]),
            &[Regular, HasLoop],
            regular([3, 8, 7, 0, 1]),
        ),
        entry(
            "coloop_tri",
            "triangle plus a pendant edge (element 3)",
            graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
            &[Regular, HasColoop],
            regular([3, 4, 14, 2, 0]),
        ),
        entry(
            "u24",
            "uniform U_{2,4}",
            Source::Uniform { r: 2, n: 4 },
            &[NonRegular, LooplessColoopless],
            non_regular([6, 11, 11, 3, 3], [2, 9, 9, 1, 1], Some(1)),
        ),
        entry(
            "u25",
            "uniform U_{2,5}",
            Source::Uniform { r: 2, n: 5 },
            &[NonRegular, LooplessColoopless],
            non_regular([10, 26, 16, 4, 6], [3, 24, 11, 2, 1], Some(2)),
        ),
        entry(
            "u26",
            "uniform U_{2,6}",
            Source::Uniform { r: 2, n: 6 },
            &[NonRegular, LooplessColoopless],
            non_regular([15, 57, 22, 5, 10], [2, 53, 13, 1, 1], Some(1)),
        ),
        entry(
            "u27",
            "uniform U_{2,7}",
            Source::Uniform { r: 2, n: 7 },
            &[NonRegular, LooplessColoopless],
            non_regular([21, 120, 29, 6, 15], [3, 116, 15, 2, 1], Some(2)),
        ),
        entry(
            "u35",
            "uniform U_{3,5}",
            Source::Uniform { r: 3, n: 5 },
            &[NonRegular, LooplessColoopless],
            non_regular([10, 16, 26, 6, 4], [3, 11, 24, 1, 2], None),
        ),
        entry(
            "u36",
            "uniform U_{3,6}",
            Source::Uniform { r: 3, n: 6 },
            &[NonRegular, LooplessColoopless],
            non_regular([20, 42, 42, 10, 10], [6, 35, 35, 3, 3], None),
        ),
        entry(
            "u24_loop",
            "U_{2,4} plus a loop (element 4)",
            Source::Matrix(vec![vec![1, 0, 1, 1, 0], vec![0, 1, 1, 2, 0]]),
            &[NonRegular, HasLoop],
            non_regular([6, 22, 11, 0, 3], [2, 18, 9, 0, 1], None),
        ),
        entry(
            "u24_coloop",
            "U_{2,4} plus a coloop (element 4)",
            u24_with_coloop(),
            &[NonRegular, HasColoop],
            non_regular([6, 11, 22, 3, 0], [2, 9, 18, 1, 0], None),
        ),
    ]
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog_instances().into_iter().find(|e| e.name == name)
}
