//! Solvers for min-max balanced two-center covering in the plane.
//!
//! Given `2n` points and two sites `c1`, `c2`, split the points into two
//! halves of size `n`, one per site, minimizing the larger of the two
//! per-side costs. The cost is a star (Two-Squirrel), a minimum spanning tree
//! (Two-MST) or a tour (Two-TSP) over the side's points plus its site.

pub mod approx;
pub mod axis;
pub mod bench;
pub mod cli;
pub mod geometry;
pub mod hardness;
pub mod instance;
pub mod oracle;
pub mod render;
pub mod spanning;

pub use geometry::{distance, Metric, Point, EPS};
pub use instance::{Assignment, Instance, Objective, Side, Solution, Structure};
