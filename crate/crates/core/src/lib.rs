//! Matching extendability, factor-criticality and related structure for
//! small simple graphs, with a harness that checks known results against
//! exhaustive or random graph streams.
//!
//! Graphs are stored as bitmask adjacency rows, so orders are limited to
//! [`graph::MAX_ORDER`] vertices. The exponential checkers are practical
//! up to about 16 vertices.

pub mod codec;
pub mod constructions;
pub mod enumerate;
pub mod gallai_edmonds;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod properties;
pub mod recognizers;

pub use codec::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, CodecError};
pub use graph::{Graph, GraphError, StructureMetrics, VertexSet, MAX_ORDER};
pub use matching::{maximum_matching, matching_number, Matching, MatchingError};
pub use properties::{Checker, Property, PropertyError, PropertyProfile};
