//! Exact substructure counting and extremal constructions for 4-uniform
//! hypergraphs.
//!
//! The crate provides:
//!
//! * a canonical hypergraph representation with subset-degree queries
//!   ([`hypergraph`], [`io`]);
//! * exact copy counting for small pattern 4-graphs, with a generic
//!   backtracking oracle and specialized counters for the built-in patterns
//!   `P2`, `P3`, `P4` and `C3` ([`pattern`], [`count`]);
//! * generators for the extremal families `t4`, `d4`, `b4` and their
//!   added-edge variants, plus closed-form edge-count and minimum-copy
//!   formulas ([`constructions`]);
//! * the minimum copy count over a single added edge ([`cmin`]);
//! * partition decompositions and partition search, local and exact
//!   ([`partition`]);
//! * branch-and-bound maximum sizes of pattern-free hosts at tiny `n`
//!   ([`turan`]);
//! * a deterministic verification suite ([`verify`]) and serializable report
//!   types ([`report`]).
//!
//! Counting is read-only and safe under concurrent readers; mutation requires
//! exclusive access. All copy counts use checked 64-bit arithmetic.

pub mod cmin;
pub mod constructions;
pub mod count;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod partition;
pub mod pattern;
pub mod random;
pub mod report;
pub mod turan;
pub mod util;
pub mod verify;

pub use cmin::{min_added_edge_copies, MinAddedEdgeResult};
pub use count::{
    count_builtin, count_copies, count_copies_generic, count_through_edge,
    exists_copy_through_edge, CountMethod,
};
pub use error::{Error, Result};
pub use hypergraph::{Edge4, Hypergraph4, SubsetDegreeIndex, VertexId};
pub use partition::{
    decompose, exact_partition, missing_tuples, optimize_partition, Decomposition, Partition,
    PartitionMode, StabilityReport,
};
pub use pattern::{automorphism_count, BuiltinPattern, Pattern};
pub use turan::{exact_ex, SearchBudget, SearchStatus, TuranResult};
pub use verify::{VerifyOptions, DEFAULT_SEED};
