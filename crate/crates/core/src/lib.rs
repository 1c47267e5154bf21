//! Exact small oriented matroids and their reversal systems.
//!
//! Oriented matroids on ground sets of at most 20 elements are stored by
//! their full signed circuit and cocircuit lists. On top of that the crate
//! enumerates circuit/cocircuit reversal classes, orientation activities and
//! activity classes over all `2^n` reorientations, and computes the Tutte
//! polynomial both by corank–nullity expansion and from orientation activities.
//!
//! ```
//! use omrev::{reversal_counts, tutte_polynomial, OrientedMatroid};
//!
//! let tri = OrientedMatroid::from_graph("tri", 3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
//! let t = tutte_polynomial(&tri);
//! assert_eq!(t.standard_evaluations(), [3, 4, 7, 2, 1]);
//! assert_eq!(reversal_counts(&tri).unwrap(), [3, 4, 7, 2, 1]);
//! ```

pub mod activity;
pub mod catalog;
pub mod error;
pub mod instance;
mod linalg;
pub mod om;
pub mod regularity;
pub mod reversal;
pub mod signed;
pub mod tutte;
pub mod union_find;

pub use activity::{
    active_partition, activities, activity_classes, activity_records, greedy_minimalize, is_minimal,
    minimal_counts, tutte_via_activities, ActivePartition, ActivityClasses, ActivityData, ActivityRecord,
    GroundOrder, Minimalized, Part, Side,
};
pub use catalog::{catalog_instances, CatalogEntry, Expected, Provenance, Tag};
pub use error::{OmError, Result, MAX_ELEMENTS};
pub use instance::{InstanceFile, Source};
pub use om::{OrientedMatroid, PartDecomposition, SetKind, ValidationReport};
pub use regularity::{classify, is_binary, Classification, RegularityVerdict};
pub use reversal::{
    find_minimal_pair_in_class, reversal_classes, reversal_counts, same_class, Mode, PartitionExport,
    Restriction, ReversalPartition, COUNT_SETTINGS,
};
pub use signed::{Reorientation, SignedSet};
pub use tutte::{rank, tutte_polynomial, TuttePolynomial};
