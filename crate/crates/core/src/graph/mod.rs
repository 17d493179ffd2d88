//! Simple undirected graphs on `0..n`, optional vertex weights, and the
//! bipartite crossing graph of a vertex cut.

mod crossing;
mod io;

pub use crossing::{boundary, crossing_graph, CrossingGraph};
pub use io::{read_graph, write_graph};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Anything that can answer "who are the neighbours of `v`".
pub trait Adjacency {
    fn universe(&self) -> usize;
    fn neighbors(&self, v: usize) -> &VertexSet;
}

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
    weights: Option<Vec<f64>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            m: 0,
            weights: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Adds `uv`; parallel edges are ignored, loops and out-of-range
    /// endpoints are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u},{v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at {u}")));
        }
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weight(&self, v: usize) -> f64 {
        self.weights.as_ref().map_or(1.0, |w| w[v])
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    pub fn set_weights(&mut self, w: Vec<f64>) -> Result<()> {
        if w.len() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} vertices",
                w.len(),
                self.n()
            )));
        }
        if let Some(bad) = w.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "weight of vertex {bad} is not finite"
            )));
        }
        self.weights = Some(w);
        Ok(())
    }

    pub fn set_weight(&mut self, v: usize, w: f64) -> Result<()> {
        if !w.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "weight of vertex {v} is not finite"
            )));
        }
        let n = self.n();
        self.weights.get_or_insert_with(|| vec![1.0; n])[v] = w;
        Ok(())
    }

    pub fn set_weight_total(&self, s: &VertexSet) -> f64 {
        s.iter().map(|v| self.weight(v)).sum()
    }

    /// Open neighbourhood of a set: vertices outside `s` adjacent to it.
    pub fn set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Whether `G[s]` is acyclic.
    pub fn is_forest(&self, s: &VertexSet) -> bool {
        let mut uf = UnionFind::new(self.n());
        for u in s {
            for v in self.adj[u].iter().filter(|&v| v > u && s.contains(v)) {
                if !uf.union(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Induced subgraph on `s`, renumbered in increasing vertex order.
    /// Returns the subgraph and the new-to-old vertex map.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = s.to_vec();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut h = Graph::new(old.len());
        for (i, &u) in old.iter().enumerate() {
            for v in self.adj[u].iter() {
                let j = new_of[v];
                if j != usize::MAX && j > i {
                    h.add_edge(i, j).expect("valid induced edge");
                }
            }
        }
        if let Some(w) = &self.weights {
            h.weights = Some(old.iter().map(|&v| w[v]).collect());
        }
        (h, old)
    }

    /// The k-th power: `uv` is an edge when `1 <= dist(u, v) <= k`.
    pub fn power(&self, k: usize) -> Graph {
        let n = self.n();
        let mut h = Graph::new(n);
        for s in 0..n {
            let mut seen = VertexSet::singleton(n, s);
            let mut frontier = seen.clone();
            for _ in 0..k {
                let mut next = self.empty_set();
                for u in &frontier {
                    next.union_with(&self.adj[u]);
                }
                next.difference_with(&seen);
                if next.is_empty() {
                    break;
                }
                seen.union_with(&next);
                frontier = next;
            }
            for v in seen.iter().filter(|&v| v > s) {
                h.add_edge(s, v).expect("valid power edge");
            }
        }
        h.weights = self.weights.clone();
        h
    }
}

impl Adjacency for Graph {
    fn universe(&self) -> usize {
        self.n()
    }

    fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }
}

/// Plain union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false when they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn edges_and_degrees() {
        let g = cycle(5);
        assert_eq!(g.m(), 5);
        assert_eq!(g.edges()[4], (3, 4));
        assert!(g.has_edge(4, 0));
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert_eq!(g.add_edge(0, 1), Ok(true));
        assert_eq!(g.add_edge(1, 0), Ok(false));
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn forest_check() {
        let g = cycle(4);
        assert!(!g.is_forest(&g.vertex_set()));
        assert!(g.is_forest(&VertexSet::from_vertices(4, [0, 1, 2])));
    }

    #[test]
    fn path_power() {
        let p = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let p3 = p.power(3);
        assert!(p3.has_edge(0, 3));
        assert!(!p3.has_edge(0, 4));
        assert_eq!(p3.m(), 5 + 4 + 3);
    }

    #[test]
    fn induced_renumbers() {
        let g = cycle(5);
        let (h, map) = g.induced_subgraph(&VertexSet::from_vertices(5, [1, 2, 4]));
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1)]);
    }

    #[test]
    fn neighborhood_of_set() {
        let g = cycle(6);
        let s = VertexSet::from_vertices(6, [0, 1]);
        assert_eq!(g.set_neighborhood(&s).to_vec(), vec![2, 5]);
    }
}
