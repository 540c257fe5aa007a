//! Temporal Δ independent sets on temporal interval graphs.
//!
//! A temporal interval graph is a sequence of layers over one vertex set,
//! each layer an interval graph. A set is Δ-independent when every pair of
//! its vertices is non-adjacent in at least one layer of every window of
//! consecutive layers. The crate builds conflict graphs, recognizes
//! order-preserving instances, computes deletion sets to order
//! preservation and solves the problem exactly, greedily, or with a
//! deletion set as parameter.

pub mod bench;
pub mod cli;
pub mod conflict;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod interval;
pub mod opvd;
pub mod order_preservation;
pub mod rational;
pub mod solvers;

pub use conflict::{conflict_graph, delta_independence_check, WindowSemantics};
pub use error::{Error, Result};
pub use format::{parse_instance, serialize_instance};
pub use graph::StaticGraph;
pub use instance::{Interval, IntervalModel, Layer, Mode, TemporalIntervalInstance, Vertex};
pub use interval::REOrdering;
pub use rational::Rational;
pub use solvers::{Algorithm, Solution};
