//! Planar points and the two distance regimes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Absolute tolerance used whenever two candidate weights are compared.
pub const EPS: f64 = 1e-9;

/// A point in the plane. Coordinates are always finite.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn scaled(&self, factor: f64) -> Point {
        Point::new(self.x * factor, self.y * factor)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// Manhattan distance.
    L1,
    /// Euclidean distance.
    L2,
}

impl Metric {
    #[inline]
    pub fn distance(self, a: Point, b: Point) -> f64 {
        distance(a, b, self)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Metric::L1 => "l1",
            Metric::L2 => "l2",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "l1" | "manhattan" => Ok(Metric::L1),
            "l2" | "euclidean" => Ok(Metric::L2),
            other => Err(format!("unknown metric '{other}' (expected l1 or l2)")),
        }
    }
}

#[inline]
pub fn distance(a: Point, b: Point, metric: Metric) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    match metric {
        Metric::L1 => dx.abs() + dy.abs(),
        Metric::L2 => dx.hypot(dy),
    }
}

/// `a <= b` up to [`EPS`].
#[inline]
pub fn approx_le(a: f64, b: f64) -> bool {
    a <= b + EPS
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn three_four_five() {
        let (a, b) = (Point::new(0.0, 0.0), Point::new(3.0, 4.0));
        assert_eq!(distance(a, b, Metric::L2), 5.0);
        assert_eq!(distance(a, b, Metric::L1), 7.0);
    }

    #[test]
    fn identical_points_are_at_distance_zero() {
        let a = Point::new(-2.5, 7.25);
        assert_eq!(distance(a, a, Metric::L1), 0.0);
        assert_eq!(distance(a, a, Metric::L2), 0.0);
    }

    #[test]
    fn metric_parses_case_insensitively() {
        assert_eq!("L1".parse::<Metric>().unwrap(), Metric::L1);
        assert_eq!("l2".parse::<Metric>().unwrap(), Metric::L2);
        assert!("l3".parse::<Metric>().is_err());
    }

    fn coord() -> impl Strategy<Value = f64> {
        -100.0..100.0f64
    }

    fn point() -> impl Strategy<Value = Point> {
        (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        #[test]
        fn triangle_inequality(a in point(), b in point(), c in point()) {
            for m in [Metric::L1, Metric::L2] {
                prop_assert!(distance(a, c, m) <= distance(a, b, m) + distance(b, c, m) + 1e-12);
            }
        }

        #[test]
        fn symmetric_and_l1_dominates_l2(a in point(), b in point()) {
            for m in [Metric::L1, Metric::L2] {
                prop_assert_eq!(distance(a, b, m), distance(b, a, m));
                prop_assert!(distance(a, b, m) >= 0.0);
            }
            prop_assert!(distance(a, b, Metric::L1) >= distance(a, b, Metric::L2));
        }
    }
}
