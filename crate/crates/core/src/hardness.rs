//! Two-MST instances encoding equal-size set partition.
//!
//! Each value `a_i` becomes a `24a_i x 10a_i` rectangle with its center,
//! so every corner is `13a_i` from the center;
//! consecutive rectangles are joined by trapezoid legs of length `2t`, and
//! an equilateral tail of side `4nt` closes the chain. The trees of a good
//! solution run along the top and bottom edges and pick up the centers,
//! which costs `2a_i` per center, so a balanced cheap solution decodes to a
//! partition of the values into equal halves.
//!
//! Coordinates involve square roots and are floating point; the values, `t`
//! and the thresholds are exact rationals.
//!
//! Some inputs make the offset formulas take square roots of negative
//! numbers (always the tail when there are two values, whose `4nt` leg is
//! shorter than the `5a` half height). Such offsets are clamped to zero and
//! the gadget is marked not well posed.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::geometry::{Metric, Point};
use crate::instance::{Instance, Side, Solution};
use crate::oracle::{exact_two_mst_with, Budget, OracleError};

/// Comparison slack between an oracle optimum and a threshold.
pub const GADGET_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GadgetError {
    #[error("need an even, nonzero number of values, got {0}")]
    OddCount(usize),
    #[error("value {index} is not positive: {value}")]
    NonPositive { index: usize, value: String },
    #[error("value {index} = {value} is at least 2t = {two_t}; the trapezoid legs are undefined")]
    TooLarge { index: usize, value: String, two_t: String },
    #[error("cannot parse '{0}' as a rational number")]
    Parse(String),
}

/// Parses `"1, 3/2, 0.25"` into exact rationals.
pub fn parse_multiset(text: &str) -> Result<Vec<BigRational>, GadgetError> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(parse_rational).collect()
}

pub fn parse_rational(s: &str) -> Result<BigRational, GadgetError> {
    let err = || GadgetError::Parse(s.to_string());
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let num = BigInt::from_str(&digits).map_err(|_| err())?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        Ok(BigRational::new(num, den))
    } else {
        BigRational::from_str(s).map_err(|_| err())
    }
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// The constructed instance plus its exact bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct GadgetSpec {
    /// The values, sorted ascending.
    pub values: Vec<BigRational>,
    /// Half the total.
    pub t: BigRational,
    /// 10n + 4 points: per value the corners `b_{i,1..4}` then the center
    /// `p_i`; then the two coincident tail points, `q` and `r`.
    pub points: Vec<Point>,
    pub c1: Point,
    pub c2: Point,
    /// The yes threshold `(12n + 2) t` as stated for the reduction.
    pub target: BigRational,
    /// `(12n + 50) t`: the weight of each tree in the yes construction, which
    /// also pays `24 a_i` along every rectangle edge.
    pub canonical_target: BigRational,
    /// No offset needed clamping.
    pub well_posed: bool,
    /// Names of clamped offsets, e.g. `"leg 1"` or `"tail"`.
    pub clamped: Vec<String>,
}

impl GadgetSpec {
    /// Half the number of values.
    pub fn n(&self) -> usize {
        self.values.len() / 2
    }

    /// Index of corner `k` (1..=4) of rectangle `i` (0-based).
    pub fn corner(&self, i: usize, k: usize) -> usize {
        5 * i + k - 1
    }

    /// Index of the center `p_i` (0-based).
    pub fn center(&self, i: usize) -> usize {
        5 * i + 4
    }

    /// Indices of `b_{2n+1}`, `b_{2n+2}`, `q`, `r`.
    pub fn tail(&self) -> [usize; 4] {
        let base = 5 * self.values.len();
        [base, base + 1, base + 2, base + 3]
    }

    pub fn instance(&self) -> Instance {
        Instance::new(self.points.clone(), self.c1, self.c2, Metric::L2).expect("gadget is a valid instance")
    }

    pub fn target_f64(&self) -> f64 {
        to_f64(&self.target)
    }

    pub fn canonical_target_f64(&self) -> f64 {
        to_f64(&self.canonical_target)
    }

    /// Meta block for the instance document.
    pub fn meta(&self) -> Value {
        json!({
            "E": self.values.iter().map(to_f64).collect::<Vec<_>>(),
            "E_exact": self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "t": to_f64(&self.t),
            "target": self.target_f64(),
            "canonical_target": self.canonical_target_f64(),
            "well_posed": self.well_posed,
            "clamped": self.clamped,
        })
    }
}

/// Builds the gadget for the multiset `values` (sorted ascending first).
pub fn build_gadget(values: &[BigRational]) -> Result<GadgetSpec, GadgetError> {
    if values.is_empty() || values.len() % 2 == 1 {
        return Err(GadgetError::OddCount(values.len()));
    }
    if let Some((index, v)) = values.iter().enumerate().find(|(_, v)| !v.is_positive()) {
        return Err(GadgetError::NonPositive {
            index,
            value: v.to_string(),
        });
    }
    let mut values = values.to_vec();
    values.sort();
    let total: BigRational = values.iter().sum();
    let two = BigRational::from_integer(2.into());
    let t = &total / &two;
    if let Some((index, v)) = values.iter().enumerate().find(|(_, v)| **v >= total) {
        return Err(GadgetError::TooLarge {
            index,
            value: v.to_string(),
            two_t: total.to_string(),
        });
    }
    let n = values.len() / 2;
    let nf = n as f64;
    let a: Vec<f64> = values.iter().map(to_f64).collect();
    let tf = to_f64(&t);

    let mut clamped = Vec::new();
    let mut offset = |name: String, hyp: f64, leg: f64| {
        let rad = hyp * hyp - leg * leg;
        if rad < 0.0 {
            clamped.push(name);
            0.0
        } else {
            rad.sqrt()
        }
    };

    let mut points = Vec::with_capacity(10 * n + 4);
    let mut x = 0.0;
    for (i, &ai) in a.iter().enumerate() {
        let left = if i == 0 {
            2.0 * tf
        } else {
            x + offset(format!("leg {i}"), 2.0 * tf, 5.0 * (ai - a[i - 1]))
        };
        let right = left + 24.0 * ai;
        points.push(Point::new(left, 5.0 * ai));
        points.push(Point::new(right, 5.0 * ai));
        points.push(Point::new(left, -5.0 * ai));
        points.push(Point::new(right, -5.0 * ai));
        points.push(Point::new(left + 12.0 * ai, 0.0));
        x = right;
    }
    let side = 4.0 * nf * tf;
    let bx = x + offset("tail".into(), side, 5.0 * a[a.len() - 1]);
    let qx = bx + 2.0 * 3f64.sqrt() * nf * tf;
    points.push(Point::new(bx, 0.0));
    points.push(Point::new(bx, 0.0));
    points.push(Point::new(qx, 2.0 * nf * tf));
    points.push(Point::new(qx, -2.0 * nf * tf));

    let scale = |k: usize| BigRational::from_integer(BigInt::from(k)) * &t;
    Ok(GadgetSpec {
        c1: Point::new(0.0, 5.0 * a[0]),
        c2: Point::new(0.0, -5.0 * a[0]),
        target: scale(12 * n + 2),
        canonical_target: scale(12 * n + 50),
        well_posed: clamped.is_empty(),
        clamped,
        values,
        t,
        points,
    })
}

/// Oracle verdict on a gadget.
#[derive(Clone, Debug, PartialEq)]
pub struct GadgetReport {
    pub opt: f64,
    /// `opt - target`.
    pub gap: f64,
    /// `opt <= target + GADGET_TOLERANCE`.
    pub is_yes: bool,
    /// `opt <= canonical_target + GADGET_TOLERANCE`.
    pub meets_canonical: bool,
    /// Values split by the side their center landed on (side 1 first).
    pub witness: (Vec<BigRational>, Vec<BigRational>),
    /// The witness halves have equal size and equal sums.
    pub witness_balanced: bool,
    /// `q` and `r` ended on different sides.
    pub splits_tail: bool,
    pub solution: Solution,
}

impl GadgetReport {
    /// The witness when the verdict is yes.
    pub fn yes_witness(&self) -> Option<&(Vec<BigRational>, Vec<BigRational>)> {
        self.is_yes.then_some(&self.witness)
    }
}

/// Solves the gadget exactly and decodes the optimal assignment.
pub fn verify_gadget(spec: &GadgetSpec, budget: Budget) -> Result<GadgetReport, OracleError> {
    let result = exact_two_mst_with(&spec.instance(), budget)?;
    let solution = result.best;
    let opt = result.optimum;
    let mut e1 = Vec::new();
    let mut e2 = Vec::new();
    for (i, v) in spec.values.iter().enumerate() {
        match solution.assignment.side(spec.center(i)) {
            Side::One => e1.push(v.clone()),
            Side::Two => e2.push(v.clone()),
        }
    }
    let sum = |s: &[BigRational]| s.iter().fold(BigRational::zero(), |acc, v| acc + v);
    let witness_balanced = e1.len() == e2.len() && sum(&e1) == sum(&e2);
    let [_, _, q, r] = spec.tail();
    Ok(GadgetReport {
        opt,
        gap: opt - spec.target_f64(),
        is_yes: opt <= spec.target_f64() + GADGET_TOLERANCE,
        meets_canonical: opt <= spec.canonical_target_f64() + GADGET_TOLERANCE,
        splits_tail: solution.assignment.side(q) != solution.assignment.side(r),
        witness: (e1, e2),
        witness_balanced,
        solution,
    })
}

/// Whether `values` split into two halves of equal size and equal sum.
pub fn has_equal_partition(values: &[BigRational]) -> bool {
    let m = values.len();
    if m % 2 == 1 {
        return false;
    }
    let total: BigRational = values.iter().sum();
    let half = total / BigRational::from_integer(2.into());
    (0u64..1 << m).any(|mask| {
        mask.count_ones() as usize == m / 2
            && values
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(BigRational::zero(), |acc, (_, v)| acc + v)
                == half
    })
}

/// A positive rational with the given numerator and denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::distance;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&k| ratio(k, 1)).collect()
    }

    #[test]
    fn first_block_coordinates() {
        let g = build_gadget(&ints(&[1, 1])).unwrap();
        assert_eq!(g.t, ratio(1, 1));
        assert_eq!(g.points.len(), 14);
        assert_eq!((g.c1, g.c2), (Point::new(0.0, 5.0), Point::new(0.0, -5.0)));
        assert_eq!(g.points[g.corner(0, 1)], Point::new(2.0, 5.0));
        assert_eq!(g.points[g.corner(0, 2)], Point::new(26.0, 5.0));
        assert_eq!(g.points[g.center(0)], Point::new(14.0, 0.0));
        assert_eq!(g.target, ratio(14, 1));
        assert_eq!(g.canonical_target, ratio(62, 1));
        assert!(!g.well_posed);
        assert_eq!(g.clamped, vec!["tail".to_string()]);
    }

    #[test]
    fn input_order_does_not_matter() {
        assert_eq!(build_gadget(&ints(&[3, 1, 2, 2])), build_gadget(&ints(&[1, 2, 2, 3])));
    }

    #[test]
    fn invalid_multisets() {
        assert_eq!(build_gadget(&ints(&[1])), Err(GadgetError::OddCount(1)));
        assert_eq!(build_gadget(&[]), Err(GadgetError::OddCount(0)));
        assert!(matches!(build_gadget(&ints(&[1, 0])), Err(GadgetError::NonPositive { index: 1, .. })));
        assert!(matches!(build_gadget(&[ratio(-1, 2), ratio(1, 1)]), Err(GadgetError::NonPositive { .. })));
    }

    #[test]
    fn rational_parsing() {
        let v = parse_multiset("1, 3/2,0.25").unwrap();
        assert_eq!(v, vec![ratio(1, 1), ratio(3, 2), ratio(1, 4)]);
        assert!(parse_multiset("1,x").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn well_posed_structure() {
        let g = build_gadget(&ints(&[1, 2, 2, 3])).unwrap();
        assert!(g.well_posed);
        let d = |i: usize, j: usize| distance(g.points[i], g.points[j], Metric::L2);
        let t = to_f64(&g.t);
        for (i, a) in g.values.iter().map(to_f64).enumerate() {
            for k in 1..=4 {
                assert!((d(g.center(i), g.corner(i, k)) - 13.0 * a).abs() < 1e-9);
            }
        }
        for i in 0..3 {
            assert!((d(g.corner(i, 2), g.corner(i + 1, 1)) - 2.0 * t).abs() < 1e-9);
            assert!((d(g.corner(i, 4), g.corner(i + 1, 3)) - 2.0 * t).abs() < 1e-9);
        }
        let [b1, b2, q, r] = g.tail();
        assert_eq!(g.points[b1], g.points[b2]);
        for (x, y) in [(b1, q), (b1, r), (q, r)] {
            assert!((d(x, y) - 8.0 * t).abs() < 1e-9);
        }
        for i in [g.corner(3, 2), g.corner(3, 4)] {
            assert!((d(i, b1) - 8.0 * t).abs() < 1e-9);
        }
    }

    #[test]
    fn partition_brute_force() {
        assert!(has_equal_partition(&ints(&[1, 1])));
        assert!(!has_equal_partition(&ints(&[1, 3])));
        assert!(has_equal_partition(&ints(&[1, 2, 2, 3])));
        assert!(!has_equal_partition(&ints(&[1, 1, 1, 3])));
        assert!(!has_equal_partition(&ints(&[1, 2, 3])));
    }
}
