use super::{Adjacency, Graph, UnionFind};
use crate::bitset::VertexSet;

/// Vertices of `a` with at least one neighbour outside `a`.
pub fn boundary(g: &Graph, a: &VertexSet) -> VertexSet {
    let mut out = g.empty_set();
    for v in a {
        if !g.neighbors(v).is_subset(a) {
            out.insert(v);
        }
    }
    out
}

/// The bipartite graph of `G` between `bd(A)` and `bd(B)` for the cut
/// `(A, V \ A)`, keeping only edges that cross the cut.
///
/// Vertices keep their host ids; `adj[v]` is empty for vertices that are
/// not part of the crossing graph.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossingGraph {
    side_a: VertexSet,
    side_b: VertexSet,
    adj: Vec<VertexSet>,
}

pub fn crossing_graph(g: &Graph, a: &VertexSet) -> CrossingGraph {
    let b = g.vertex_set().difference(a);
    let side_a = boundary(g, a);
    let side_b = boundary(g, &b);
    let mut adj = vec![g.empty_set(); g.n()];
    for v in &side_a {
        adj[v] = g.neighbors(v).intersection(&b);
    }
    for v in &side_b {
        adj[v] = g.neighbors(v).intersection(a);
    }
    CrossingGraph {
        side_a,
        side_b,
        adj,
    }
}

impl CrossingGraph {
    pub fn side_a(&self) -> &VertexSet {
        &self.side_a
    }

    pub fn side_b(&self) -> &VertexSet {
        &self.side_b
    }

    pub fn vertices(&self) -> VertexSet {
        self.side_a.union(&self.side_b)
    }

    pub fn vertex_count(&self) -> usize {
        self.side_a.len() + self.side_b.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.side_a.contains(v) || self.side_b.contains(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in &self.side_a {
            for b in &self.adj[a] {
                out.push((a.min(b), a.max(b)));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.side_a.iter().map(|a| self.adj[a].len()).sum()
    }

    /// The same crossing graph with the two sides exchanged.
    pub fn swapped(&self) -> CrossingGraph {
        CrossingGraph {
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
            adj: self.adj.clone(),
        }
    }

    /// `H - s`, dropping vertices left without neighbours.
    pub fn remove(&self, s: &VertexSet) -> CrossingGraph {
        let mut adj = self.adj.clone();
        let mut side_a = self.side_a.difference(s);
        let mut side_b = self.side_b.difference(s);
        for v in s {
            if v < adj.len() {
                adj[v].clear();
            }
        }
        for v in side_a.union(&side_b).iter() {
            adj[v].difference_with(s);
            if adj[v].is_empty() {
                side_a.remove(v);
                side_b.remove(v);
            }
        }
        CrossingGraph {
            side_a,
            side_b,
            adj,
        }
    }

    /// Whether `H[s]` is acyclic.
    pub fn is_forest(&self, s: &VertexSet) -> bool {
        let mut uf = UnionFind::new(self.adj.len());
        for a in self.side_a.intersection(s).iter() {
            for b in self.adj[a].intersection(s).iter() {
                if !uf.union(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

impl Adjacency for CrossingGraph {
    fn universe(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_cut() {
        // 0-1-2-3 with A = {0,1}
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let a = VertexSet::from_vertices(4, [0, 1]);
        let h = crossing_graph(&g, &a);
        assert_eq!(h.side_a().to_vec(), vec![1]);
        assert_eq!(h.side_b().to_vec(), vec![2]);
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert!(h.neighbors(0).is_empty());
    }

    #[test]
    fn internal_edges_dropped() {
        // triangle 0,1,2 with A = {0,1}: edge 01 is not a crossing edge
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = crossing_graph(&g, &VertexSet::from_vertices(3, [0, 1]));
        assert_eq!(h.edges(), vec![(0, 2), (1, 2)]);
        assert!(h.is_forest(&h.vertices()));
    }

    #[test]
    fn removal_drops_isolated() {
        let g = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let h = crossing_graph(&g, &VertexSet::from_vertices(4, [0, 1]));
        let r = h.remove(&VertexSet::from_vertices(4, [0]));
        assert_eq!(r.vertices().to_vec(), vec![1, 3]);
    }
}
