use super::AxisError;
use crate::geometry::{Point, EPS};
use crate::instance::{Assignment, Instance, Side, Solution, Structure, SITE};

/// Exact 2-MST when every node lies on the x-axis.
///
/// The site further left takes the n leftmost points; each tree is the chain
/// through its side and site, so its weight is their span.
pub fn solve_line(instance: &Instance) -> Result<Solution, AxisError> {
    let check = |what: String, p: Point| {
        if p.y.abs() <= EPS {
            Ok(())
        } else {
            Err(AxisError::OffLine { what, x: p.x, y: p.y })
        }
    };
    for (i, &p) in instance.points().iter().enumerate() {
        check(format!("point {i}"), p)?;
    }
    check("site c1".into(), instance.c1())?;
    check("site c2".into(), instance.c2())?;

    let instance = instance.clone().without_pairs();
    let n = instance.n();
    let mut order: Vec<usize> = (0..instance.len()).collect();
    order.sort_by(|&a, &b| instance.point(a).x.total_cmp(&instance.point(b).x).then(a.cmp(&b)));
    let (left, right) = order.split_at(n);
    let (side1, side2) = if instance.c1().x <= instance.c2().x { (left, right) } else { (right, left) };

    let chain = |side: Side, members: &[usize]| {
        let mut nodes: Vec<(f64, i64)> = members.iter().map(|&i| (instance.point(i).x, i as i64)).collect();
        nodes.push((instance.site(side).x, SITE));
        nodes.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        Structure::Edges(nodes.windows(2).map(|w| (w[0].1, w[1].1)).collect())
    };
    let s1 = chain(Side::One, side1);
    let s2 = chain(Side::Two, side2);
    Ok(Solution::from_structures(
        &instance,
        Assignment::from_side1(instance.len(), side1),
        s1,
        s2,
        "line",
    ))
}
