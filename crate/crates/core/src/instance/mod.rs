//! Problem instances, balanced assignments and solutions.

mod evaluate;
mod generate;
mod io;

pub use evaluate::{evaluate, structure_weight, TourMethod, EXACT_TOUR_MAX_NODES};
pub use generate::{random_instance, random_pairing, InstanceKind};
pub use io::{
    instance_document, instance_to_json, parse_instance, parse_instance_document, parse_solution,
    solution_to_json, SolutionDocument,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Metric, Point};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InstanceError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Malformed { line: usize, column: usize, message: String },
    #[error("odd point count at $.points: {count} points (need an even count >= 2)")]
    OddPointCount { count: usize },
    #[error("too few points at $.points: need at least 2, got {count}")]
    TooFewPoints { count: usize },
    #[error("non-finite coordinate at {location}")]
    NonFinite { location: String },
    #[error("pair index out of range at $.pairs[{pair}]: {index} >= {len}")]
    PairIndexOutOfRange { pair: usize, index: usize, len: usize },
    #[error("overlapping pairs at $.pairs[{pair}]: index {index} already paired")]
    OverlappingPairs { pair: usize, index: usize },
    #[error("pairs must cover all {len} points, found {got} pairs")]
    IncompletePairs { len: usize, got: usize },
    #[error("assignment length {got} does not match {expected} points")]
    AssignmentLength { expected: usize, got: usize },
    #[error("unbalanced assignment: {side1} points on side 1, {side2} on side 2")]
    Unbalanced { side1: usize, side2: usize },
    #[error("assignment puts both points of pair {pair} on the same side")]
    PairNotSplit { pair: usize },
    #[error("invalid assignment label {label} at position {index} (expected 1 or 2)")]
    BadLabel { index: usize, label: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn label(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// A Two-Squirrel / Two-MST / Two-TSP instance: 2n points, two sites, a
/// metric and an optional pairing of the points.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    points: Vec<Point>,
    c1: Point,
    c2: Point,
    metric: Metric,
    pairs: Option<Vec<(usize, usize)>>,
}

impl Instance {
    pub fn new(points: Vec<Point>, c1: Point, c2: Point, metric: Metric) -> Result<Self, InstanceError> {
        if points.len() < 2 {
            return Err(InstanceError::TooFewPoints { count: points.len() });
        }
        if !points.len().is_multiple_of(2) {
            return Err(InstanceError::OddPointCount { count: points.len() });
        }
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(InstanceError::NonFinite {
                    location: format!("$.points[{i}]"),
                });
            }
        }
        for (name, c) in [("$.c1", c1), ("$.c2", c2)] {
            if !c.is_finite() {
                return Err(InstanceError::NonFinite { location: name.into() });
            }
        }
        Ok(Instance {
            points,
            c1,
            c2,
            metric,
            pairs: None,
        })
    }

    /// Attaches a dichotomy pairing; the pairs must partition all indices.
    pub fn with_pairs(mut self, pairs: Vec<(usize, usize)>) -> Result<Self, InstanceError> {
        let len = self.points.len();
        let mut used = vec![false; len];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            for idx in [i, j] {
                if idx >= len {
                    return Err(InstanceError::PairIndexOutOfRange { pair: k, index: idx, len });
                }
                if used[idx] {
                    return Err(InstanceError::OverlappingPairs { pair: k, index: idx });
                }
                used[idx] = true;
            }
        }
        if pairs.len() * 2 != len {
            return Err(InstanceError::IncompletePairs { len, got: pairs.len() });
        }
        self.pairs = Some(pairs);
        Ok(self)
    }

    pub fn without_pairs(mut self) -> Self {
        self.pairs = None;
        self
    }

    /// Half the number of points.
    pub fn n(&self) -> usize {
        self.points.len() / 2
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn c1(&self) -> Point {
        self.c1
    }

    pub fn c2(&self) -> Point {
        self.c2
    }

    pub fn site(&self, side: Side) -> Point {
        match side {
            Side::One => self.c1,
            Side::Two => self.c2,
        }
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn pairs(&self) -> Option<&[(usize, usize)]> {
        self.pairs.as_deref()
    }

    pub fn distance(&self, a: Point, b: Point) -> f64 {
        self.metric.distance(a, b)
    }

    /// Same instance with c1 and c2 exchanged.
    pub fn swapped_sites(&self) -> Instance {
        Instance {
            c1: self.c2,
            c2: self.c1,
            ..self.clone()
        }
    }

    /// Every coordinate multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Instance {
        Instance {
            points: self.points.iter().map(|p| p.scaled(factor)).collect(),
            c1: self.c1.scaled(factor),
            c2: self.c2.scaled(factor),
            ..self.clone()
        }
    }

    /// Points followed by c1 then c2: the node set P ∪ {c1, c2}.
    pub fn all_nodes(&self) -> Vec<Point> {
        let mut nodes = self.points.clone();
        nodes.push(self.c1);
        nodes.push(self.c2);
        nodes
    }

    /// The site followed by the points of `side` (in index order), plus the
    /// point indices in the same order.
    pub fn side_nodes(&self, assignment: &Assignment, side: Side) -> (Vec<Point>, Vec<usize>) {
        let idx = assignment.indices(side);
        let mut nodes = Vec::with_capacity(idx.len() + 1);
        nodes.push(self.site(side));
        nodes.extend(idx.iter().map(|&i| self.points[i]));
        (nodes, idx)
    }
}

/// A 2-labelling of the points, one label per point index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    sides: Vec<Side>,
}

impl Assignment {
    pub fn new(sides: Vec<Side>) -> Self {
        Assignment { sides }
    }

    /// Side 1 gets exactly the listed indices.
    pub fn from_side1(len: usize, side1: &[usize]) -> Self {
        let mut sides = vec![Side::Two; len];
        for &i in side1 {
            sides[i] = Side::One;
        }
        Assignment { sides }
    }

    pub fn from_labels(labels: &[i64]) -> Result<Self, InstanceError> {
        labels
            .iter()
            .enumerate()
            .map(|(index, &label)| match label {
                1 => Ok(Side::One),
                2 => Ok(Side::Two),
                _ => Err(InstanceError::BadLabel { index, label }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Assignment::new)
    }

    pub fn labels(&self) -> Vec<u8> {
        self.sides.iter().map(|s| s.label()).collect()
    }

    pub fn side(&self, i: usize) -> Side {
        self.sides[i]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn indices(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&i| self.sides[i] == side).collect()
    }

    pub fn count(&self, side: Side) -> usize {
        self.sides.iter().filter(|&&s| s == side).count()
    }

    /// Labels exchanged.
    pub fn mirrored(&self) -> Assignment {
        Assignment::new(self.sides.iter().map(|s| s.other()).collect())
    }

    /// Checks balance and, when the instance carries pairs, that each pair is split.
    pub fn validate(&self, instance: &Instance) -> Result<(), InstanceError> {
        if self.sides.len() != instance.len() {
            return Err(InstanceError::AssignmentLength {
                expected: instance.len(),
                got: self.sides.len(),
            });
        }
        let (side1, side2) = (self.count(Side::One), self.count(Side::Two));
        if side1 != side2 {
            return Err(InstanceError::Unbalanced { side1, side2 });
        }
        if let Some(pairs) = instance.pairs() {
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if self.sides[i] == self.sides[j] {
                    return Err(InstanceError::PairNotSplit { pair: k });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Star,
    Mst,
    Tsp,
}

impl Objective {
    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Star => "star",
            Objective::Mst => "mst",
            Objective::Tsp => "tsp",
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "star" => Ok(Objective::Star),
            "mst" => Ok(Objective::Mst),
            "tsp" => Ok(Objective::Tsp),
            other => Err(format!("unknown problem '{other}' (expected star, mst or tsp)")),
        }
    }
}

/// Node reference inside a structure: `-1` is the side's own site.
pub const SITE: i64 = -1;

/// Per-side structure: an edge list (stars, trees) or a closed tour.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Edges(Vec<(i64, i64)>),
    /// Visiting order; the closing edge back to the first node is implicit.
    Tour(Vec<i64>),
}

impl Structure {
    /// Edge list view; a tour becomes its consecutive edges including the closing one.
    pub fn edge_list(&self) -> Vec<(i64, i64)> {
        match self {
            Structure::Edges(e) => e.clone(),
            Structure::Tour(t) => match t.len() {
                0 | 1 => Vec::new(),
                len => (0..len).map(|i| (t[i], t[(i + 1) % len])).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub assignment: Assignment,
    pub structure1: Structure,
    pub structure2: Structure,
    pub weight1: f64,
    pub weight2: f64,
    pub objective: f64,
    pub algorithm: String,
    pub meta: serde_json::Map<String, serde_json::Value>,
}

impl Solution {
    /// Builds a solution whose weights are recomputed from the structures.
    pub fn from_structures(
        instance: &Instance,
        assignment: Assignment,
        structure1: Structure,
        structure2: Structure,
        algorithm: impl Into<String>,
    ) -> Solution {
        let weight1 = structure_weight(instance, Side::One, &structure1);
        let weight2 = structure_weight(instance, Side::Two, &structure2);
        Solution {
            assignment,
            structure1,
            structure2,
            weight1,
            weight2,
            objective: weight1.max(weight2),
            algorithm: algorithm.into(),
            meta: serde_json::Map::new(),
        }
    }

    pub fn weight(&self, side: Side) -> f64 {
        match side {
            Side::One => self.weight1,
            Side::Two => self.weight2,
        }
    }

    pub fn structure(&self, side: Side) -> &Structure {
        match side {
            Side::One => &self.structure1,
            Side::Two => &self.structure2,
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }
}
