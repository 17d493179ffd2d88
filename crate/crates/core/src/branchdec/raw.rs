use super::BranchDecomposition;
use crate::error::{Error, Result};
use crate::graph::UnionFind;

/// A mutable unrooted tree with optional vertex labels on nodes, used to
/// assemble decompositions before they are rooted and frozen.
#[derive(Clone, Debug, Default)]
pub struct RawTree {
    adj: Vec<Vec<usize>>,
    label: Vec<Option<usize>>,
    alive: Vec<bool>,
}

impl RawTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts(
        num_nodes: usize,
        edges: &[(usize, usize)],
        leaves: &[(usize, usize)],
    ) -> Result<Self> {
        let mut t = RawTree::new();
        for _ in 0..num_nodes {
            t.add_node(None);
        }
        let mut uf = UnionFind::new(num_nodes);
        for &(a, b) in edges {
            if a >= num_nodes || b >= num_nodes {
                return Err(Error::InvalidDecomposition(format!(
                    "tree edge ({a},{b}) references a missing node"
                )));
            }
            if !uf.union(a, b) {
                return Err(Error::InvalidDecomposition(format!(
                    "tree edge ({a},{b}) closes a cycle"
                )));
            }
            t.add_edge(a, b);
        }
        for &(node, v) in leaves {
            if node >= num_nodes {
                return Err(Error::InvalidDecomposition(format!(
                    "leaf record names missing node {node}"
                )));
            }
            if t.label[node].replace(v).is_some() {
                return Err(Error::InvalidDecomposition(format!(
                    "node {node} carries two vertices"
                )));
            }
        }
        Ok(t)
    }

    pub fn add_node(&mut self, label: Option<usize>) -> usize {
        self.adj.push(Vec::new());
        self.label.push(label);
        self.alive.push(true);
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    pub fn set_label(&mut self, node: usize, v: usize) {
        self.label[node] = Some(v);
    }

    pub fn degree(&self, t: usize) -> usize {
        self.adj[t].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.adj.len())
            .filter(|&t| self.alive[t])
            .map(|t| self.degree(t))
            .max()
            .unwrap_or(0)
    }

    fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a].retain(|&x| x != b);
        self.adj[b].retain(|&x| x != a);
    }

    /// Deletes unlabelled nodes of degree at most one and suppresses
    /// unlabelled nodes of degree two, smallest id first, until neither
    /// applies. `keep` is never touched.
    pub fn prune_and_smooth(&mut self, keep: Option<usize>) {
        loop {
            let pick = (0..self.adj.len()).find(|&t| {
                self.alive[t]
                    && Some(t) != keep
                    && self.label[t].is_none()
                    && self.degree(t) <= 2
            });
            let Some(t) = pick else { break };
            let nbrs = std::mem::take(&mut self.adj[t]);
            for &x in &nbrs {
                self.adj[x].retain(|&y| y != t);
            }
            if let [a, b] = nbrs[..] {
                self.add_edge(a, b);
            }
            self.alive[t] = false;
        }
    }

    /// Deletes a node together with its incident edges.
    pub fn remove_node(&mut self, t: usize) {
        for x in std::mem::take(&mut self.adj[t]) {
            self.adj[x].retain(|&y| y != t);
        }
        self.alive[t] = false;
    }

    /// Ids of the nodes still in the tree, increasing. This is the order
    /// [`RawTree::into_decomposition`] numbers them in.
    pub fn live_nodes(&self) -> Vec<usize> {
        (0..self.adj.len()).filter(|&t| self.alive[t]).collect()
    }

    /// Prunes and smooths around `root`, then moves the root down while it
    /// is an unlabelled node with a single neighbour. Returns the final root.
    pub fn settle_root(&mut self, mut root: usize) -> usize {
        self.prune_and_smooth(Some(root));
        while self.label[root].is_none() && self.degree(root) == 1 {
            let next = self.adj[root][0];
            self.remove_node(root);
            root = next;
            self.prune_and_smooth(Some(root));
        }
        root
    }

    /// Inserts a new node on the edge at the leaf labelled with the
    /// smallest vertex and returns it. A single-node tree is returned as is.
    pub fn subdivide_at_smallest_leaf(&mut self) -> Result<usize> {
        let leaf = (0..self.adj.len())
            .filter(|&t| self.alive[t] && self.label[t].is_some())
            .min_by_key(|&t| self.label[t])
            .ok_or_else(|| Error::InvalidDecomposition("no labelled leaves".into()))?;
        match self.adj[leaf][..] {
            [] => Ok(leaf),
            [p] => {
                self.remove_edge(leaf, p);
                let r = self.add_node(None);
                self.add_edge(r, p);
                self.add_edge(r, leaf);
                Ok(r)
            }
            _ => Err(Error::InvalidDecomposition(format!(
                "node {leaf} carries a vertex but is not a leaf"
            ))),
        }
    }

    /// Roots the live part of the tree at `root`, renumbering nodes in
    /// increasing old id, and validates it as a branch decomposition.
    pub fn into_decomposition(self, n: usize, root: usize) -> Result<BranchDecomposition> {
        if root >= self.adj.len() || !self.alive[root] {
            return Err(Error::InvalidDecomposition(format!(
                "root {root} is not a node"
            )));
        }
        let live: Vec<usize> = (0..self.adj.len()).filter(|&t| self.alive[t]).collect();
        let mut new_id = vec![usize::MAX; self.adj.len()];
        for (i, &t) in live.iter().enumerate() {
            new_id[t] = i;
        }
        let k = live.len();
        let mut parent = vec![None; k];
        let mut children = vec![Vec::new(); k];
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(t) = stack.pop() {
            let mut nbrs = self.adj[t].clone();
            nbrs.sort_unstable();
            for x in nbrs {
                if !seen[x] {
                    seen[x] = true;
                    parent[new_id[x]] = Some(new_id[t]);
                    children[new_id[t]].push(new_id[x]);
                    stack.push(x);
                }
            }
        }
        if live.iter().any(|&t| !seen[t]) {
            return Err(Error::InvalidDecomposition(
                "decomposition tree is not connected".into(),
            ));
        }
        let labels = live.iter().map(|&t| self.label[t]).collect();
        BranchDecomposition::assemble(n, new_id[root], parent, children, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoothing_removes_chains_and_dead_ends() {
        // 0(v0) - 1 - 2 - 3(v1), with dead branch 2 - 4 - 5
        let mut t = RawTree::from_parts(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)], &[(0, 0), (3, 1)]).unwrap();
        t.prune_and_smooth(None);
        let live: Vec<usize> = (0..6).filter(|&x| t.alive[x]).collect();
        assert_eq!(live, vec![0, 3]);
        assert_eq!(t.adj[0], vec![3]);
        let r = t.subdivide_at_smallest_leaf().unwrap();
        let d = t.into_decomposition(2, r).unwrap();
        assert_eq!(d.num_nodes(), 3);
    }

    #[test]
    fn cycle_rejected() {
        assert!(RawTree::from_parts(3, &[(0, 1), (1, 2), (2, 0)], &[]).is_err());
    }
}
