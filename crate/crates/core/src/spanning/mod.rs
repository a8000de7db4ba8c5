//! Spanning trees and tours over small point sets.

mod held_karp;
mod kruskal;
mod tour;
mod union_find;

pub use held_karp::{held_karp_tsp, MAX_HELD_KARP_NODES};
pub use kruskal::{kruskal_mst, mst_edges, mst_weight, sorted_edges, KruskalTrace, MstScratch, WeightedEdge};
pub use tour::{double_and_shortcut, nearest_neighbor_two_opt, tour_weight};
pub use union_find::DisjointSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpanningError {
    #[error("need at least {required} node(s), got {got}")]
    TooFewNodes { required: usize, got: usize },
    #[error("exact tour limited to {limit} nodes, got {got}")]
    TooManyNodes { limit: usize, got: usize },
    #[error("node index {index} out of range for {len} nodes")]
    NodeOutOfRange { index: usize, len: usize },
    #[error("edge list is not connected: reached {reached} of {total} nodes")]
    Disconnected { reached: usize, total: usize },
}
