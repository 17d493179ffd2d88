use std::collections::BTreeMap;

use super::table::{IndexKey, NodeTable, Objective};
use crate::bitset::VertexSet;
use crate::forest::ComponentPartition;
use crate::graph::{Adjacency, Graph};

/// The table of the leaf holding `v`. Its crossing graph is the star from
/// `v` to `N(v)`:
///
/// - `(∅, N(v), ∅)`: `v` in or out of the forest;
/// - `(∅, {v}, ∅)`: `v` out;
/// - `({v}, ∅, {{v}})`: `v` in, its neighbours left as potential leaves;
/// - `({w}, N(v) \ {w}, {{w}})` for `w ∈ N(v)`: `v` in, hanging off `w`.
///
/// An isolated vertex has the single index `(∅, ∅, ∅)` with sizes 0 and 1.
pub(crate) fn leaf_table<O: Objective>(g: &Graph, obj: &O, v: usize, rbound: usize) -> NodeTable<O::Val> {
    let n = g.n();
    let nv = g.neighbors(v).clone();
    let empty = VertexSet::new(n);
    let mut rows: BTreeMap<IndexKey, Vec<usize>> = BTreeMap::new();
    let key = |r: VertexSet, m: VertexSet| {
        let p = ComponentPartition::discrete(usize::from(!r.is_empty()));
        IndexKey { r, m, p }
    };
    if nv.is_empty() {
        rows.insert(key(empty.clone(), empty), vec![0, 1]);
    } else {
        rows.insert(key(empty.clone(), nv.clone()), vec![0, 1]);
        rows.insert(key(empty.clone(), VertexSet::singleton(n, v)), vec![0]);
        if rbound >= 1 {
            rows.insert(key(VertexSet::singleton(n, v), empty.clone()), vec![1]);
            for w in &nv {
                let mut m = nv.clone();
                m.remove(w);
                rows.insert(key(VertexSet::singleton(n, w), m), vec![1]);
            }
        }
    }
    let (keys, vals) = rows
        .into_iter()
        .map(|(k, sizes)| {
            let val = obj.leaf(v, &sizes);
            (k, val)
        })
        .unzip();
    NodeTable { keys, vals }
}
