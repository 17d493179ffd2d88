use crate::bitset::VertexSet;
use crate::branchdec::BranchDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::nice_td::{branchdec_from_nice_td, tree_nice_td, NiceTreeDecomposition};

/// The `k`-th power of `g` with the decomposition converted from `td`.
pub fn power_instance(g: &Graph, td: &NiceTreeDecomposition, k: usize) -> Result<(Graph, BranchDecomposition)> {
    let conv = branchdec_from_nice_td(g, td)?;
    Ok((g.power(k), conv.decomposition))
}

fn check_tree(t: &Graph) -> Result<()> {
    if t.n() == 0 || t.m() + 1 != t.n() || !t.is_forest(&t.vertex_set()) {
        return Err(Error::InvalidArgument("input is not a tree".into()));
    }
    Ok(())
}

/// The `k`-th power of a tree with a decomposition from a nice tree
/// decomposition whose join bags hold one vertex.
pub fn tree_power_instance(tree: &Graph, k: usize) -> Result<(Graph, BranchDecomposition)> {
    check_tree(tree)?;
    power_instance(tree, &tree_nice_td(tree)?, k)
}

/// A leaf power of a tree: the `k`-th power restricted to the leaves.
#[derive(Clone, Debug)]
pub struct LeafPower {
    pub graph: Graph,
    pub decomposition: BranchDecomposition,
    /// Tree vertex of each graph vertex.
    pub leaves: Vec<usize>,
}

/// The tree power decomposition with the inner vertices dropped. A
/// single-vertex tree counts as one leaf.
pub fn leaf_power_instance(tree: &Graph, k: usize) -> Result<LeafPower> {
    let (h, d) = tree_power_instance(tree, k)?;
    let leaves = VertexSet::from_vertices(tree.n(), (0..tree.n()).filter(|&v| tree.degree(v) <= 1));
    let (decomposition, map) = d.restrict(&leaves)?;
    let (graph, _) = h.induced_subgraph(&leaves);
    Ok(LeafPower {
        graph,
        decomposition,
        leaves: map,
    })
}

/// `path<N>`, `star<N>` (the star with `N` leaves) or `caterpillar<N>`
/// (a spine of `N` vertices, each with one pendant leaf).
pub fn named_tree(name: &str) -> Result<Graph> {
    let bad = || Error::InvalidArgument(format!("unknown tree {name:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let edges: Vec<(usize, usize)>;
    let n;
    if let Some(s) = name.strip_prefix("path") {
        n = num(s)?;
        edges = (1..n).map(|i| (i - 1, i)).collect();
    } else if let Some(s) = name.strip_prefix("star") {
        n = num(s)? + 1;
        edges = (1..n).map(|i| (0, i)).collect();
    } else if let Some(s) = name.strip_prefix("caterpillar") {
        let k = num(s)?;
        n = 2 * k;
        edges = (1..k).map(|i| (i - 1, i)).chain((0..k).map(|i| (i, k + i))).collect();
    } else {
        return Err(bad());
    }
    if n == 0 {
        return Err(bad());
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branchdec::mim_width;

    #[test]
    fn caterpillar_leaf_cube() {
        let t = named_tree("caterpillar5").unwrap();
        let lp = leaf_power_instance(&t, 3).unwrap();
        assert_eq!(lp.leaves, vec![5, 6, 7, 8, 9]);
        assert_eq!(lp.graph.n(), 5);
        assert!(mim_width(&lp.graph, &lp.decomposition, false).width <= 1);
    }

    #[test]
    fn star_leaves_form_a_clique() {
        let lp = leaf_power_instance(&named_tree("star4").unwrap(), 2).unwrap();
        assert_eq!(lp.graph.m(), 6);
        assert_eq!(mim_width(&lp.graph, &lp.decomposition, false).width, 1);
    }

    #[test]
    fn rejects_non_trees() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(leaf_power_instance(&c3, 2), Err(Error::InvalidArgument(_))));
        let forest = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(tree_power_instance(&forest, 2).is_err());
        assert!(named_tree("cycle5").is_err());
        assert!(named_tree("path0").is_err());
    }

    #[test]
    fn path_power_round_trip() {
        let (h, d) = tree_power_instance(&named_tree("path6").unwrap(), 3).unwrap();
        assert_eq!(h.m(), 12);
        assert_eq!(mim_width(&h, &d, false).width, 1);
    }
}
