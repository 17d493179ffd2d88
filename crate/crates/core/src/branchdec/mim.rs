use std::collections::HashMap;

use super::BranchDecomposition;
use crate::bitset::VertexSet;
use crate::graph::{crossing_graph, Adjacency, CrossingGraph, Graph};
use crate::par;

/// Size of a maximum induced matching of a crossing graph.
pub fn max_induced_matching(h: &CrossingGraph) -> usize {
    max_induced_matching_in(h, &h.vertices())
}

/// Size of a maximum induced matching of the subgraph induced by `domain`.
///
/// Branches on a vertex of maximum degree (unmatched, or matched to one of
/// its neighbours) with memoisation on the remaining vertex set.
pub fn max_induced_matching_in<A: Adjacency>(adj: &A, domain: &VertexSet) -> usize {
    let mut memo = HashMap::new();
    solve(adj, strip_isolated(adj, domain.clone()), &mut memo)
}

fn strip_isolated<A: Adjacency>(adj: &A, mut s: VertexSet) -> VertexSet {
    let isolated: Vec<usize> = s
        .iter()
        .filter(|&v| adj.neighbors(v).is_disjoint(&s))
        .collect();
    for v in isolated {
        s.remove(v);
    }
    s
}

fn solve<A: Adjacency>(adj: &A, avail: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
    if avail.is_empty() {
        return 0;
    }
    if let Some(&x) = memo.get(&avail) {
        return x;
    }
    let u = avail
        .iter()
        .max_by_key(|&v| (adj.neighbors(v).intersection_len(&avail), std::cmp::Reverse(v)))
        .expect("non-empty");
    let mut rest = avail.clone();
    rest.remove(u);
    let mut best = solve(adj, strip_isolated(adj, rest), memo);
    let nu = adj.neighbors(u).intersection(&avail);
    for v in &nu {
        let mut r = avail.difference(&nu);
        r.difference_with(adj.neighbors(v));
        r.remove(u);
        r.remove(v);
        best = best.max(1 + solve(adj, strip_isolated(adj, r), memo));
    }
    memo.insert(avail, best);
    best
}

/// mim of the cut at node `t`.
pub fn cut_mim(g: &Graph, d: &BranchDecomposition, t: usize) -> usize {
    max_induced_matching(&crossing_graph(g, d.below(t)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct MimReport {
    /// mim of the cut at each node.
    pub per_node: Vec<usize>,
    pub width: usize,
    /// A node attaining the width, if any node has a non-empty cut.
    pub argmax: Option<usize>,
}

/// mim-width of a decomposition: the maximum over all node cuts.
pub fn mim_width(g: &Graph, d: &BranchDecomposition, parallel: bool) -> MimReport {
    let per_node = par::map_range(d.num_nodes(), parallel, |t| cut_mim(g, d, t));
    let argmax = (0..per_node.len())
        .filter(|&t| per_node[t] > 0)
        .max_by_key(|&t| (per_node[t], std::cmp::Reverse(t)));
    let width = argmax.map_or(0, |t| per_node[t]);
    MimReport {
        per_node,
        width,
        argmax,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cut(g: &Graph, a: &[usize]) -> CrossingGraph {
        crossing_graph(g, &VertexSet::from_vertices(g.n(), a.iter().copied()))
    }

    #[test]
    fn perfect_matching_cut() {
        // 3 disjoint edges across the cut
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(max_induced_matching(&cut(&g, &[0, 1, 2])), 3);
    }

    #[test]
    fn complete_bipartite_is_one() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let g = Graph::from_edges(6, &e).unwrap();
        assert_eq!(max_induced_matching(&cut(&g, &[0, 1, 2])), 1);
    }

    #[test]
    fn induced_matching_in_path() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(max_induced_matching_in(&g, &g.vertex_set()), 2);
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        assert_eq!(max_induced_matching_in(&g, &g.vertex_set()), 3);
    }

    #[test]
    fn path_linear_order_width_one() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = BranchDecomposition::from_linear_order(&[0, 1, 2, 3, 4]).unwrap();
        let r = mim_width(&g, &d, false);
        assert_eq!(r.width, 1);
        assert_eq!(r.per_node[d.root()], 0);
        assert_eq!(mim_width(&g, &d, true), r);
    }

    #[test]
    fn edgeless_width_zero() {
        let g = Graph::new(3);
        let d = BranchDecomposition::from_linear_order(&[0, 1, 2]).unwrap();
        let r = mim_width(&g, &d, false);
        assert_eq!((r.width, r.argmax), (0, None));
    }
}
