use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Instance;
use crate::geometry::{Metric, Point};

/// Side length of the square every family is drawn from.
const SPAN: f64 = 100.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InstanceKind {
    UniformSquare,
    TwoClusters,
    AxisOnly,
    LineOnly,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 4] = [
        InstanceKind::UniformSquare,
        InstanceKind::TwoClusters,
        InstanceKind::AxisOnly,
        InstanceKind::LineOnly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::UniformSquare => "uniform-square",
            InstanceKind::TwoClusters => "two-clusters",
            InstanceKind::AxisOnly => "axis-only",
            InstanceKind::LineOnly => "line-only",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InstanceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InstanceKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown instance kind '{s}'"))
    }
}

/// Rounds to a 1e-6 grid so documents stay short; ties remain rare.
fn grid(v: f64) -> f64 {
    (v * 1e6).round() / 1e6
}

fn uniform_point(rng: &mut ChaCha8Rng) -> Point {
    Point::new(grid(rng.random_range(0.0..SPAN)), grid(rng.random_range(0.0..SPAN)))
}

fn disk_point(rng: &mut ChaCha8Rng, center: Point, radius: f64) -> Point {
    let r = radius * rng.random::<f64>().sqrt();
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    Point::new(grid(center.x + r * theta.cos()), grid(center.y + r * theta.sin()))
}

fn axis_point(rng: &mut ChaCha8Rng) -> Point {
    let d = grid(rng.random_range(0.5..SPAN / 2.0));
    match rng.random_range(0..4u8) {
        0 => Point::new(d, 0.0),
        1 => Point::new(-d, 0.0),
        2 => Point::new(0.0, d),
        _ => Point::new(0.0, -d),
    }
}

fn line_point(rng: &mut ChaCha8Rng) -> Point {
    Point::new(grid(rng.random_range(0.0..SPAN)), 0.0)
}

/// Deterministic random instance with `2n` points.
///
/// # Panics
/// If `n == 0`.
pub fn random_instance(n: usize, kind: InstanceKind, seed: u64, metric: Metric) -> Instance {
    assert!(n >= 1, "instances need n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (c1, c2, points) = match kind {
        InstanceKind::UniformSquare => {
            let c1 = uniform_point(&mut rng);
            let c2 = uniform_point(&mut rng);
            (c1, c2, (0..2 * n).map(|_| uniform_point(&mut rng)).collect())
        }
        InstanceKind::TwoClusters => {
            let a = Point::new(0.25 * SPAN, 0.5 * SPAN);
            let b = Point::new(0.75 * SPAN, 0.5 * SPAN);
            let radius = 0.12 * SPAN;
            let c1 = disk_point(&mut rng, a, radius);
            let c2 = disk_point(&mut rng, b, radius);
            let points = (0..2 * n)
                .map(|_| {
                    let center = if rng.random::<bool>() { a } else { b };
                    disk_point(&mut rng, center, radius)
                })
                .collect();
            (c1, c2, points)
        }
        InstanceKind::AxisOnly => {
            let c1 = axis_point(&mut rng);
            let c2 = axis_point(&mut rng);
            (c1, c2, (0..2 * n).map(|_| axis_point(&mut rng)).collect())
        }
        InstanceKind::LineOnly => {
            let c1 = line_point(&mut rng);
            let c2 = line_point(&mut rng);
            (c1, c2, (0..2 * n).map(|_| line_point(&mut rng)).collect())
        }
    };
    Instance::new(points, c1, c2, metric).expect("generated instances are valid")
}

/// The same instance with a uniformly random perfect pairing attached.
pub fn random_pairing(instance: &Instance, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut idx: Vec<usize> = (0..instance.len()).collect();
    idx.shuffle(&mut rng);
    let pairs = idx.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
    instance.clone().with_pairs(pairs).expect("shuffled indices form a perfect pairing")
}
