//! Minimal vertex covers of bipartite crossing graphs.
//!
//! Every minimal vertex cover of a bipartite graph `H` with sides `A`, `B`
//! has the form `N(R) ∪ {a ∈ A : N(a) ⊄ N(R)}` for some `R ⊆ A` with
//! `|R| <= mim(H)`, which bounds their number by `|V(H)|^mim(H)`.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::branchdec::max_induced_matching;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, CrossingGraph};

/// Which side the generating sets are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
    /// The side with fewer vertices, `A` on ties.
    Smaller,
}

/// Above this many vertices the completeness cross-check is skipped.
const CHECK_LIMIT: usize = 40;

/// All minimal vertex covers of `h`, generated from sets of size at most
/// `w`. Fails with [`Error::ParameterTooSmall`] when `w < mim(h)` is
/// detected, since the result could then be incomplete.
pub fn enumerate_minimal_vertex_covers(h: &CrossingGraph, w: usize) -> Result<Vec<VertexSet>> {
    if h.vertex_count() <= CHECK_LIMIT {
        let m = max_induced_matching(h);
        if w < m {
            return Err(Error::ParameterTooSmall(format!(
                "w = {w} but the crossing graph has an induced matching of size {m}"
            )));
        }
    }
    Ok(minimal_vertex_covers(h, w, Side::Smaller))
}

/// The generating enumeration without the parameter check.
pub fn minimal_vertex_covers(h: &CrossingGraph, w: usize, side: Side) -> Vec<VertexSet> {
    let (a, b) = match side {
        Side::A => (h.side_a(), h.side_b()),
        Side::B => (h.side_b(), h.side_a()),
        Side::Smaller if h.side_b().len() < h.side_a().len() => (h.side_b(), h.side_a()),
        Side::Smaller => (h.side_a(), h.side_b()),
    };
    let a_list: Vec<usize> = a.to_vec();
    let mut out = BTreeSet::new();
    let empty = VertexSet::new(h.universe());
    extend(h, &a_list, b, 0, w, &empty, &mut out);
    out.into_iter().collect()
}

fn extend(
    h: &CrossingGraph,
    a_list: &[usize],
    b: &VertexSet,
    start: usize,
    budget: usize,
    nr: &VertexSet,
    out: &mut BTreeSet<VertexSet>,
) {
    let mut cover = nr.clone();
    for &x in a_list {
        if !h.neighbors(x).is_subset(nr) {
            cover.insert(x);
        }
    }
    debug_assert!(cover.intersection(b).is_subset(nr));
    out.insert(cover);
    if budget == 0 {
        return;
    }
    for i in start..a_list.len() {
        let x = a_list[i];
        let nx = h.neighbors(x);
        // adding x gives a new cover only if it contributes new B-vertices
        if nx.is_subset(nr) {
            continue;
        }
        let next = nr.union(nx);
        extend(h, a_list, b, i + 1, budget - 1, &next, out);
    }
}

/// Whether `m` covers every edge of `h` and no vertex of `m` can be dropped.
pub fn is_minimal_vertex_cover(h: &CrossingGraph, m: &VertexSet) -> bool {
    let verts = h.vertices();
    if !m.is_subset(&verts) {
        return false;
    }
    for (u, v) in h.edges() {
        if !m.contains(u) && !m.contains(v) {
            return false;
        }
    }
    m.iter().all(|x| !h.neighbors(x).is_subset(m))
}
