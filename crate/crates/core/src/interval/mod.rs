//! Interval graph algorithms: independent sets, maximal cliques, the
//! consecutive ones property, unit recognition and the normalized model
//! algebra.

mod c1p;
mod cliques;
mod mwis;
mod ordering;
mod unit;

pub use c1p::{c1p_test, BinaryMatrix, C1pResult};
pub(crate) use c1p::consecutive_ordering;
pub use cliques::{maximal_cliques, maximal_cliques_abstract, CliqueMatrix, CliqueRow, NotIntervalGraph};
pub use mwis::{mwis_interval, MwisResult};
pub(crate) use ordering::normalized_lefts;
pub use ordering::{intersect_models, normalize_graph, normalize_to_ordering, union_models, REOrdering};
pub use unit::{recognize_unit_interval, umbrella_ordering, UnitFailure};
