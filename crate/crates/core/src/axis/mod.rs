//! Exact 2-MST solvers for points on a line or on the two coordinate axes.
//!
//! On the axes, optimal trees occupy few contiguous runs of each half-axis,
//! so enumerating cut positions per half-axis and scoring every balanced
//! labelling finds an optimum in polynomial time.

mod cuts;
mod fast;
mod line;

pub use cuts::{solve_axis_l1, solve_axis_l2, AxisCuts, CutPattern};
pub use fast::axis_mst_weight_fast;
pub use line::solve_line;

use std::fmt;

use thiserror::Error;

use crate::geometry::{Metric, Point, EPS};
use crate::instance::{Assignment, Instance, Side};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AxisError {
    #[error("{what} at ({x}, {y}) is not on a coordinate axis")]
    OffAxis { what: String, x: f64, y: f64 },
    #[error("{what} at ({x}, {y}) is not on the x-axis")]
    OffLine { what: String, x: f64, y: f64 },
    #[error("solver needs the {expected} metric, instance uses {got}")]
    WrongMetric { expected: Metric, got: Metric },
    #[error("selection on {axis} is not a list of disjoint increasing runs")]
    NonContiguousSelection { axis: HalfAxis },
}

/// The four open half-axes; the origin belongs to `PosX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HalfAxis {
    PosX,
    NegX,
    PosY,
    NegY,
}

impl HalfAxis {
    pub const ALL: [HalfAxis; 4] = [HalfAxis::PosX, HalfAxis::NegX, HalfAxis::PosY, HalfAxis::NegY];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            HalfAxis::PosX => "+X",
            HalfAxis::NegX => "-X",
            HalfAxis::PosY => "+Y",
            HalfAxis::NegY => "-Y",
        }
    }

    /// Half-axis of `p` and its distance from the origin, if `p` is on an axis.
    pub fn locate(p: Point) -> Option<(HalfAxis, f64)> {
        if p.y.abs() <= EPS {
            Some(if p.x >= -EPS { (HalfAxis::PosX, p.x.max(0.0)) } else { (HalfAxis::NegX, -p.x) })
        } else if p.x.abs() <= EPS {
            Some(if p.y > 0.0 { (HalfAxis::PosY, p.y) } else { (HalfAxis::NegY, -p.y) })
        } else {
            None
        }
    }

    /// The point at distance `r` from the origin along this half-axis.
    pub fn at(self, r: f64) -> Point {
        match self {
            HalfAxis::PosX => Point::new(r, 0.0),
            HalfAxis::NegX => Point::new(-r, 0.0),
            HalfAxis::PosY => Point::new(0.0, r),
            HalfAxis::NegY => Point::new(0.0, -r),
        }
    }
}

impl fmt::Display for HalfAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Points grouped by half-axis, each list ordered outward from the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfAxisView {
    /// Point indices per half-axis, sorted by (distance, index).
    pub lists: [Vec<usize>; 4],
    /// Distance from the origin of every point, by point index.
    pub radius: Vec<f64>,
    /// Sites lying on each half-axis, with their distance from the origin.
    pub sites: [Vec<(Side, f64)>; 4],
}

impl HalfAxisView {
    pub fn new(instance: &Instance) -> Result<Self, AxisError> {
        let off = |what: String, p: Point| AxisError::OffAxis { what, x: p.x, y: p.y };
        let mut lists: [Vec<usize>; 4] = Default::default();
        let mut radius = Vec::with_capacity(instance.len());
        for (i, &p) in instance.points().iter().enumerate() {
            let (axis, r) = HalfAxis::locate(p).ok_or_else(|| off(format!("point {i}"), p))?;
            lists[axis.index()].push(i);
            radius.push(r);
        }
        for list in &mut lists {
            list.sort_by(|&a, &b| radius[a].total_cmp(&radius[b]).then(a.cmp(&b)));
        }
        let mut sites: [Vec<(Side, f64)>; 4] = Default::default();
        for side in [Side::One, Side::Two] {
            let p = instance.site(side);
            let (axis, r) = HalfAxis::locate(p).ok_or_else(|| off(format!("site c{}", side.label()), p))?;
            sites[axis.index()].push((side, r));
        }
        Ok(HalfAxisView { lists, radius, sites })
    }

    pub fn list(&self, axis: HalfAxis) -> &[usize] {
        &self.lists[axis.index()]
    }

    /// Run pattern of an assignment along each half-axis, e.g. `"ABA"`, with
    /// A for side 1 and B for side 2.
    pub fn run_pattern(&self, assignment: &Assignment) -> [String; 4] {
        self.lists.clone().map(|list| {
            let mut s = String::new();
            let mut last = None;
            for i in list {
                let side = assignment.side(i);
                if last != Some(side) {
                    s.push(if side == Side::One { 'A' } else { 'B' });
                    last = Some(side);
                }
            }
            s
        })
    }
}

fn require_metric(instance: &Instance, expected: Metric) -> Result<(), AxisError> {
    if instance.metric() == expected {
        Ok(())
    } else {
        Err(AxisError::WrongMetric {
            expected,
            got: instance.metric(),
        })
    }
}
