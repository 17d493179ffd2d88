//! Rooted branch decompositions and their cuts.

mod io;
mod mim;
mod raw;

pub use io::{read_decomposition, write_decomposition};
pub use mim::{cut_mim, max_induced_matching, max_induced_matching_in, mim_width, MimReport};
pub use raw::RawTree;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A rooted binary tree whose leaves are in bijection with the vertices of
/// a graph. `V_t` is the set of vertices mapped to leaves below node `t`.
///
/// For graphs with at most one vertex the tree is a single node.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchDecomposition {
    n: usize,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    leaf_vertex: Vec<Option<usize>>,
    leaf_of: Vec<usize>,
    below: Vec<VertexSet>,
}

impl BranchDecomposition {
    /// Builds and validates a rooted decomposition from parent/child edges.
    pub fn from_rooted(
        n: usize,
        num_nodes: usize,
        edges: &[(usize, usize)],
        root: usize,
        leaves: &[(usize, usize)],
    ) -> Result<Self> {
        let raw = RawTree::from_parts(num_nodes, edges, leaves)?;
        raw.into_decomposition(n, root)
    }

    /// Roots an unrooted subcubic tree: unmapped leaves are pruned, nodes
    /// of degree two are smoothed, and the root subdivides the edge at the
    /// leaf of the smallest vertex.
    pub fn from_unrooted(
        n: usize,
        num_nodes: usize,
        edges: &[(usize, usize)],
        leaves: &[(usize, usize)],
    ) -> Result<Self> {
        let mut raw = RawTree::from_parts(num_nodes, edges, leaves)?;
        if raw.max_degree() > 3 {
            return Err(Error::InvalidDecomposition(
                "unrooted decomposition has a node of degree > 3".into(),
            ));
        }
        raw.prune_and_smooth(None);
        let root = raw.subdivide_at_smallest_leaf()?;
        raw.into_decomposition(n, root)
    }

    /// The caterpillar of a linear order: cuts are exactly the prefixes
    /// and the single vertices.
    pub fn from_linear_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidArgument(format!(
                    "linear order is not a permutation of 0..{n}"
                )));
            }
        }
        if n <= 1 {
            return Self::single(n);
        }
        // nodes 0..n are leaves in order; n..2n-1 are spine nodes
        let mut edges = Vec::with_capacity(2 * n);
        let leaves: Vec<(usize, usize)> = order.iter().enumerate().map(|(i, &v)| (i, v)).collect();
        let mut prev = 0;
        for i in 1..n {
            let s = n + i - 1;
            edges.push((s, prev));
            edges.push((s, i));
            prev = s;
        }
        Self::from_rooted(n, 2 * n - 1, &edges, prev, &leaves)
    }

    /// The one-node decomposition of a graph with `n <= 1` vertices.
    pub fn single(n: usize) -> Result<Self> {
        if n > 1 {
            return Err(Error::InvalidArgument(
                "single-node decomposition needs at most one vertex".into(),
            ));
        }
        let leaves: Vec<(usize, usize)> = (0..n).map(|v| (0, v)).collect();
        Self::from_rooted(n, 1, &[], 0, &leaves)
    }

    pub(crate) fn assemble(
        n: usize,
        root: usize,
        parent: Vec<Option<usize>>,
        children: Vec<Vec<usize>>,
        leaf_vertex: Vec<Option<usize>>,
    ) -> Result<Self> {
        let k = parent.len();
        let mut leaf_of = vec![usize::MAX; n];
        for (t, lv) in leaf_vertex.iter().enumerate() {
            if let Some(v) = *lv {
                if v >= n {
                    return Err(Error::InvalidDecomposition(format!(
                        "leaf {t} maps to vertex {v} outside the graph"
                    )));
                }
                if leaf_of[v] != usize::MAX {
                    return Err(Error::InvalidDecomposition(format!(
                        "vertex {v} is mapped to two leaves"
                    )));
                }
                leaf_of[v] = t;
            }
        }
        if let Some(v) = leaf_of.iter().position(|&t| t == usize::MAX) {
            return Err(Error::InvalidDecomposition(format!(
                "vertex {v} has no leaf"
            )));
        }
        for t in 0..k {
            let c = children[t].len();
            match (leaf_vertex[t], c) {
                (Some(_), 0) | (None, 2) => {}
                (None, 0) if n == 0 && k == 1 => {}
                (Some(_), _) => {
                    return Err(Error::InvalidDecomposition(format!(
                        "node {t} carries a vertex but is not a leaf"
                    )))
                }
                (None, _) => {
                    return Err(Error::InvalidDecomposition(format!(
                        "internal node {t} has {c} children, expected 2"
                    )))
                }
            }
        }
        let mut dec = BranchDecomposition {
            n,
            root,
            parent,
            children,
            leaf_vertex,
            leaf_of,
            below: Vec::new(),
        };
        let order = dec.postorder();
        if order.len() != k {
            return Err(Error::InvalidDecomposition(
                "decomposition tree is not connected".into(),
            ));
        }
        let mut below = vec![VertexSet::new(n); k];
        for &t in &order {
            if let Some(v) = dec.leaf_vertex[t] {
                below[t].insert(v);
            }
            for &c in &dec.children[t] {
                let s = below[c].clone();
                below[t].union_with(&s);
            }
        }
        dec.below = below;
        Ok(dec)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn num_nodes(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn is_leaf(&self, t: usize) -> bool {
        self.children[t].is_empty()
    }

    pub fn leaf_vertex(&self, t: usize) -> Option<usize> {
        self.leaf_vertex[t]
    }

    pub fn leaf_of(&self, v: usize) -> usize {
        self.leaf_of[v]
    }

    /// `V_t`.
    pub fn below(&self, t: usize) -> &VertexSet {
        &self.below[t]
    }

    /// `V \ V_t`.
    pub fn above(&self, t: usize) -> VertexSet {
        VertexSet::full(self.n).difference(&self.below[t])
    }

    /// Nodes with every child before its parent.
    pub fn postorder(&self) -> Vec<usize> {
        let k = self.parent.len();
        let mut out = Vec::with_capacity(k);
        let mut visited = vec![false; k];
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                out.push(t);
                continue;
            }
            if std::mem::replace(&mut visited[t], true) {
                continue;
            }
            stack.push((t, true));
            for &c in self.children[t].iter().rev() {
                stack.push((c, false));
            }
        }
        out
    }

    /// Tree edges as `(parent, child)`.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, cs) in self.children.iter().enumerate() {
            for &c in cs {
                out.push((t, c));
            }
        }
        out
    }

    /// The decomposition of the subgraph induced by `keep`: other leaves
    /// are dropped and the tree is smoothed. Vertices are renumbered in
    /// increasing order; the second value maps new ids to old ones.
    pub fn restrict(&self, keep: &VertexSet) -> Result<(Self, Vec<usize>)> {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_id = vec![None; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = Some(i);
        }
        let mut raw = RawTree::new();
        for t in 0..self.num_nodes() {
            raw.add_node(self.leaf_vertex[t].and_then(|v| new_id[v]));
        }
        for (p, c) in self.tree_edges() {
            raw.add_edge(p, c);
        }
        let root = raw.settle_root(self.root);
        Ok((raw.into_decomposition(old.len(), root)?, old))
    }

    /// Graphviz rendering of the tree with leaf labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph decomposition {\n");
        for t in 0..self.num_nodes() {
            match self.leaf_vertex[t] {
                Some(v) => s.push_str(&format!("  n{t} [label=\"{v}\", shape=box];\n")),
                None if t == self.root => {
                    s.push_str(&format!("  n{t} [label=\"root\"];\n"))
                }
                None => s.push_str(&format!("  n{t} [label=\"\", shape=point];\n")),
            }
        }
        for (p, c) in self.tree_edges() {
            s.push_str(&format!("  n{p} -- n{c};\n"));
        }
        s.push_str("}\n");
        s
    }
}
