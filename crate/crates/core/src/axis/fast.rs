use std::ops::Range;

use super::{AxisError, HalfAxis, HalfAxisView};
use crate::geometry::{Metric, Point};
use crate::spanning::MstScratch;

/// MST weight of the selected points plus `site`, from run extremes only.
///
/// `runs` are ranges of positions in the view's half-axis lists, increasing
/// and disjoint per half-axis. Points on one half-axis form a chain, so the
/// tree is every chain's span plus an MST over the innermost node of each
/// occupied half-axis. The site must lie on an axis.
pub fn axis_mst_weight_fast(
    view: &HalfAxisView,
    runs: &[(HalfAxis, Range<usize>)],
    site: Point,
    metric: Metric,
) -> Result<f64, AxisError> {
    let (site_axis, site_r) = HalfAxis::locate(site).ok_or(AxisError::OffAxis {
        what: "site".into(),
        x: site.x,
        y: site.y,
    })?;
    let mut total = 0.0;
    let mut inner = Vec::with_capacity(4);
    for axis in HalfAxis::ALL {
        let list = view.list(axis);
        let mut extent: Option<(f64, f64)> = None;
        let mut end = 0;
        for (_, run) in runs.iter().filter(|(a, _)| *a == axis) {
            if run.start >= run.end || run.end > list.len() || (extent.is_some() && run.start < end) {
                return Err(AxisError::NonContiguousSelection { axis });
            }
            end = run.end;
            let lo = view.radius[list[run.start]];
            let hi = view.radius[list[run.end - 1]];
            extent = Some(extent.map_or((lo, hi), |(a, b)| (a.min(lo), b.max(hi))));
        }
        if axis == site_axis {
            extent = Some(extent.map_or((site_r, site_r), |(a, b)| (a.min(site_r), b.max(site_r))));
        }
        if let Some((lo, hi)) = extent {
            total += hi - lo;
            inner.push(axis.at(lo));
        }
    }
    Ok(total + MstScratch::default().weight(&inner, metric))
}
