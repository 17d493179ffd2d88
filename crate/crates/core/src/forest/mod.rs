//! Reduced forests, potential leaves, and the restriction and compatibility
//! predicates between a cut and the two cuts below it.

mod partition;

pub use partition::{bell_numbers, AllPartitions, ComponentPartition};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{crossing_graph, Adjacency, CrossingGraph, Graph, UnionFind};

/// Which endpoint of a two-vertex component survives reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingleEdgeRule {
    SmallerId,
    LargerId,
    /// Keep the endpoint in the given set; smaller id if both or neither are.
    Prefer(VertexSet),
}

impl SingleEdgeRule {
    fn pick(&self, u: usize, v: usize) -> usize {
        let (lo, hi) = (u.min(v), u.max(v));
        match self {
            SingleEdgeRule::SmallerId => lo,
            SingleEdgeRule::LargerId => hi,
            SingleEdgeRule::Prefer(s) => match (s.contains(lo), s.contains(hi)) {
                (false, true) => hi,
                _ => lo,
            },
        }
    }
}

/// An induced forest of a host graph together with its components, which
/// are ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedForest {
    vertices: VertexSet,
    components: Vec<VertexSet>,
}

impl ReducedForest {
    /// Wraps `vertices`, checking that they induce a forest in `host`.
    pub fn new<A: Adjacency>(host: &A, vertices: VertexSet) -> Result<Self> {
        let components = components_of(host, &vertices);
        let edges: usize = vertices
            .iter()
            .map(|v| host.neighbors(v).intersection_len(&vertices))
            .sum::<usize>()
            / 2;
        if edges + components.len() != vertices.len() {
            return Err(Error::InvalidArgument(
                "vertex set does not induce a forest".into(),
            ));
        }
        Ok(ReducedForest {
            vertices,
            components,
        })
    }

    pub fn empty(n: usize) -> Self {
        ReducedForest {
            vertices: VertexSet::new(n),
            components: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Connected components of `host[s]`, ordered by smallest vertex.
pub fn components_of<A: Adjacency>(host: &A, s: &VertexSet) -> Vec<VertexSet> {
    let mut left = s.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(host.universe(), start);
        let mut stack = vec![start];
        left.remove(start);
        while let Some(u) = stack.pop() {
            for v in host.neighbors(u).intersection(&left).iter() {
                left.remove(v);
                comp.insert(v);
                stack.push(v);
            }
        }
        out.push(comp);
    }
    out
}

/// The reduced forest of `f`: isolated vertices go, one endpoint of every
/// two-vertex component goes, and larger components lose their leaves.
pub fn reduce<A: Adjacency>(host: &A, f: &VertexSet, rule: &SingleEdgeRule) -> Result<ReducedForest> {
    let comps = components_of(host, f);
    let mut keep = VertexSet::new(host.universe());
    for c in &comps {
        match c.len() {
            1 => {}
            2 => {
                let v: Vec<usize> = c.to_vec();
                keep.insert(rule.pick(v[0], v[1]));
            }
            _ => {
                for v in c {
                    if host.neighbors(v).intersection_len(c) >= 2 {
                        keep.insert(v);
                    }
                }
            }
        }
    }
    ReducedForest::new(host, f.clone())?;
    ReducedForest::new(host, keep)
}

/// Depth-first enumeration of all vertex subsets of a crossing graph of
/// size at most `bound` that induce a forest, each exactly once.
pub struct CandidateForests<'a> {
    host: &'a CrossingGraph,
    order: Vec<usize>,
    bound: usize,
    stack: Vec<(VertexSet, usize)>,
}

pub fn enumerate_candidate_forests(h: &CrossingGraph, bound: usize) -> CandidateForests<'_> {
    let n = h.universe();
    CandidateForests {
        host: h,
        order: h.vertices().to_vec(),
        bound,
        stack: vec![(VertexSet::new(n), 0)],
    }
}

impl Iterator for CandidateForests<'_> {
    type Item = ReducedForest;

    fn next(&mut self) -> Option<ReducedForest> {
        let (set, from) = self.stack.pop()?;
        if set.len() < self.bound {
            for i in (from..self.order.len()).rev() {
                let mut next = set.clone();
                next.insert(self.order[i]);
                if self.host.is_forest(&next) {
                    self.stack.push((next, i + 1));
                }
            }
        }
        Some(ReducedForest::new(self.host, set).expect("enumerated sets are forests"))
    }
}

/// `N_H(x) \ N_H(V(R) \ {x}) \ (M ∪ V(R))`.
pub fn potential_leaves<A: Adjacency>(
    h: &A,
    r: &VertexSet,
    m: &VertexSet,
    x: usize,
) -> Result<VertexSet> {
    if !r.contains(x) {
        return Err(Error::InvalidArgument(format!("{x} is not in the forest")));
    }
    Ok(potential_leaves_unchecked(h, r, m, x))
}

pub(crate) fn potential_leaves_unchecked<A: Adjacency>(
    h: &A,
    r: &VertexSet,
    m: &VertexSet,
    x: usize,
) -> VertexSet {
    let mut out = h.neighbors(x).difference(m);
    out.difference_with(r);
    for y in r.iter().filter(|&y| y != x) {
        out.difference_with(h.neighbors(y));
    }
    out
}

/// Every vertex of degree at most one in `H[R]` has a potential leaf, and
/// `R` and `M` are disjoint.
pub fn is_valid_index<A: Adjacency>(h: &A, r: &VertexSet, m: &VertexSet) -> bool {
    r.is_disjoint(m)
        && r.iter().all(|x| {
            h.neighbors(x).intersection_len(r) >= 2
                || !potential_leaves_unchecked(h, r, m, x).is_empty()
        })
}

/// A vertex partition `(A1, A2, B)` of a graph.
#[derive(Clone, Debug)]
pub struct ThreeParts {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub b: VertexSet,
}

impl ThreeParts {
    pub fn new(g: &Graph, a1: VertexSet, a2: VertexSet) -> Result<Self> {
        if a1.intersects(&a2) {
            return Err(Error::InvalidArgument("A1 and A2 overlap".into()));
        }
        if a1.iter().chain(a2.iter()).any(|v| v >= g.n()) {
            return Err(Error::InvalidArgument("part outside the vertex set".into()));
        }
        let b = g.vertex_set().difference(&a1.union(&a2));
        Ok(ThreeParts { a1, a2, b })
    }

    /// Checks that the three sets partition `V(G)`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let all = self.a1.union(&self.a2).union(&self.b);
        let total = self.a1.len() + self.a2.len() + self.b.len();
        if all != g.vertex_set() || total != g.n() {
            return Err(Error::InvalidArgument("not a partition of V(G)".into()));
        }
        Ok(())
    }
}

/// The five conditions making `(R1, M1)` a restriction of `(R, M)`, where
/// `R, M` live on the cut `(A1 ∪ A2, B)` and `R1, M1` on `(A1, A2 ∪ B)`.
///
/// Note that these conditions alone do not make the child-to-parent merge
/// sound; the DP uses its own junction check instead.
pub fn is_restriction(
    g: &Graph,
    parts: &ThreeParts,
    r1: &VertexSet,
    m1: &VertexSet,
    r: &VertexSet,
    m: &VertexSet,
) -> Result<bool> {
    parts.validate(g)?;
    let (a1, b) = (&parts.a1, &parts.b);
    let r_a1 = r.intersection(a1);
    // (1)
    if !r_a1.is_subset(r1) {
        return Ok(false);
    }
    for v in r.intersection(b).iter() {
        if g.neighbors(v).intersection_len(&r_a1) >= 2 && !r1.contains(v) {
            return Ok(false);
        }
    }
    // (2)
    let new_in_r1 = r1.difference(r);
    if new_in_r1.intersects(b) || r1.intersects(m) {
        return Ok(false);
    }
    // (3)
    let r_b = r.intersection(b);
    for x in new_in_r1.intersection(a1).iter() {
        if g.neighbors(x).intersection_len(&r_b) > 1 {
            return Ok(false);
        }
    }
    // (4)
    if r.intersects(m1) || !m.intersection(a1).is_subset(m1) {
        return Ok(false);
    }
    // (5): edges vw of G_{A1,B} - V(R) with v in M ∩ B, w outside R1 and M
    for v in m.intersection(b).iter() {
        if r.contains(v) {
            continue;
        }
        for w in g.neighbors(v).intersection(a1).iter() {
            if r.contains(w) || r1.contains(w) || m.contains(w) {
                continue;
            }
            if !m1.contains(v) && !m1.contains(w) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds the auxiliary graph on `C(R) ∪ C(R1) ∪ C(R2)`: components from
/// different lists are adjacent when they share a vertex, components of
/// `R_i` in the same block of `P_i` are pairwise adjacent, and `C(R)` is
/// independent. Returns whether it is acyclic and, if so, the partition of
/// `C(R)` by connected components.
pub fn compatibility(
    r: &ReducedForest,
    r1: &ReducedForest,
    r2: &ReducedForest,
    p1: &ComponentPartition,
    p2: &ComponentPartition,
) -> (bool, Option<ComponentPartition>) {
    let (k, k1, k2) = (r.components.len(), r1.components.len(), r2.components.len());
    let nodes = k + k1 + k2;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let lists = [(&r.components, 0), (&r1.components, k), (&r2.components, k + k1)];
    for (i, (li, oi)) in lists.iter().enumerate() {
        for (lj, oj) in lists.iter().skip(i + 1) {
            for (x, cx) in li.iter().enumerate() {
                for (y, cy) in lj.iter().enumerate() {
                    if cx.intersects(cy) {
                        edges.push((oi + x, oj + y));
                    }
                }
            }
        }
    }
    for (p, off, kk) in [(p1, k, k1), (p2, k + k1, k2)] {
        for x in 0..kk {
            for y in x + 1..kk {
                if p.same_block(x, y) {
                    edges.push((off + x, off + y));
                }
            }
        }
    }
    let mut uf = UnionFind::new(nodes);
    for (x, y) in edges {
        if !uf.union(x, y) {
            return (false, None);
        }
    }
    let roots: Vec<usize> = (0..k).map(|c| uf.find(c)).collect();
    (true, Some(ComponentPartition::from_labels(&roots)))
}

/// Reduced forest of a vertex set on the cut `(a, V \ a)` of `g`.
pub fn forest_on_cut(g: &Graph, a: &VertexSet, vertices: VertexSet) -> Result<ReducedForest> {
    ReducedForest::new(&crossing_graph(g, a), vertices)
}
