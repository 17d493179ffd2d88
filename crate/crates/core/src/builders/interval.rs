use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The intersection graph of closed intervals and its vertices sorted by
/// left endpoint, ties broken by right endpoint and then by index.
pub fn interval_linear_order(intervals: &[(f64, f64)]) -> Result<(Graph, Vec<usize>)> {
    for (i, &(l, r)) in intervals.iter().enumerate() {
        if l.is_nan() || r.is_nan() || l > r {
            return Err(Error::InvalidArgument(format!(
                "interval {i} is [{l}, {r}]; need left <= right"
            )));
        }
    }
    let n = intervals.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (la, ra) = intervals[a];
        let (lb, rb) = intervals[b];
        la.total_cmp(&lb).then(ra.total_cmp(&rb)).then(a.cmp(&b))
    });
    let mut g = Graph::new(n);
    for (k, &a) in order.iter().enumerate() {
        for &b in &order[k + 1..] {
            if intervals[b].0 > intervals[a].1 {
                break;
            }
            g.add_edge(a, b)?;
        }
    }
    Ok((g, order))
}

/// `n` intervals with left endpoints uniform in `[0, n)` and lengths
/// uniform in `[0, len)`, rounded to two decimals.
pub fn random_intervals<R: Rng>(n: usize, len: f64, rng: &mut R) -> Vec<(f64, f64)> {
    let round = |x: f64| (x * 100.0).round() / 100.0;
    (0..n)
        .map(|_| {
            let l = round(rng.gen_range(0.0..n.max(1) as f64));
            (l, round(l + rng.gen_range(0.0..len)))
        })
        .collect()
}
