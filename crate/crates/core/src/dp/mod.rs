//! Maximum (weight) induced forest by dynamic programming over a branch
//! decomposition. A minimum feedback vertex set is the complement.
//!
//! Each node `t` keeps, for every index `(R, M, P)`, the sizes `i` (or the
//! best weight) of vertex sets `X ⊆ V_t` such that, with `O = R \ V_t`:
//! `R ∩ V_t ⊆ X` and `X ∩ M = ∅`; `G[X ∪ O]` without the edges inside `O`
//! is a forest whose connectivity on the components of `R` is `P`; every
//! boundary vertex of `X \ R` sees at most one vertex of `O`; every vertex
//! of `O` sees two vertices of `X`, or exactly one that is not in `R`; and
//! every vertex of degree at most one in `R` keeps a potential leaf.

mod junction;
mod leaf;
mod table;

pub use table::IndexKey;

use crate::bitset::VertexSet;
use crate::branchdec::{mim_width, BranchDecomposition};
use crate::error::{Error, Result};
use crate::forest::bell_numbers;
use crate::graph::Graph;
use junction::MergeCtx;
use table::{Cardinality, MaxWeight, NodeTable, Objective};

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Use `w` for every cut instead of the cut's own mim value: forests
    /// of up to `6w` vertices, covers generated from `w` vertices.
    pub param: Option<usize>,
    pub parallel: bool,
    /// Fail when a node's table exceeds the explicit size bound.
    pub check_table_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            param: None,
            parallel: crate::par::available(),
            check_table_bound: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NodeStats {
    pub node: usize,
    pub keys: usize,
    /// Parameter used at this node.
    pub param: usize,
    /// `2 * n^(6w) * n^w * B_(6w)`.
    pub bound: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DpStats {
    pub nodes: Vec<NodeStats>,
    pub width: usize,
}

impl DpStats {
    pub fn max_keys(&self) -> usize {
        self.nodes.iter().map(|s| s.keys).max().unwrap_or(0)
    }

    pub fn total_keys(&self) -> usize {
        self.nodes.iter().map(|s| s.keys).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub forest: VertexSet,
    pub fvs: VertexSet,
    pub forest_weight: f64,
    pub fvs_weight: f64,
    pub stats: DpStats,
}

impl Solution {
    pub fn forest_size(&self) -> usize {
        self.forest.len()
    }

    pub fn fvs_size(&self) -> usize {
        self.fvs.len()
    }
}

/// Upper bound on the number of indices at a node with parameter `w` in an
/// `n`-vertex graph.
pub fn table_bound(n: usize, w: usize) -> f64 {
    let bell = bell_numbers(6 * w)[6 * w] as f64;
    2.0 * (n as f64).powi(7 * w as i32) * bell
}

/// Maximum induced forest; the complement is a minimum feedback vertex set.
pub fn solve_mif(g: &Graph, d: &BranchDecomposition, opts: &SolveOptions) -> Result<Solution> {
    let (tables, stats) = run(g, d, opts, &Cardinality)?;
    let root = d.root();
    let e = tables[root]
        .find(&IndexKey::empty(g.n()))
        .expect("the empty forest is always feasible");
    let size = tables[root].vals[e].max().expect("root entry has a size");
    let mut forest = g.empty_set();
    let mut stack = vec![(root, e, size)];
    while let Some((t, e, i)) = stack.pop() {
        let back = tables[t].vals[e].back[i];
        if back.is_leaf() {
            if back.ia == 1 {
                forest.insert(d.leaf_vertex(t).expect("leaf node"));
            }
            continue;
        }
        let c = d.children(t);
        let ia = back.ia as usize;
        stack.push((c[0], back.a as usize, ia));
        stack.push((c[1], back.b as usize, i - ia));
    }
    Ok(finish(g, forest, stats))
}

/// Maximum-weight induced forest; the complement is a minimum-weight
/// feedback vertex set. Unweighted graphs use unit weights.
pub fn solve_weighted_mif(g: &Graph, d: &BranchDecomposition, opts: &SolveOptions) -> Result<Solution> {
    let weights: Vec<f64> = (0..g.n()).map(|v| g.weight(v)).collect();
    let obj = MaxWeight { weights: &weights };
    let (tables, stats) = run(g, d, opts, &obj)?;
    let root = d.root();
    let e = tables[root]
        .find(&IndexKey::empty(g.n()))
        .expect("the empty forest is always feasible");
    let mut forest = g.empty_set();
    let mut stack = vec![(root, e)];
    while let Some((t, e)) = stack.pop() {
        let back = tables[t].vals[e].back;
        if back.is_leaf() {
            if back.ia == 1 {
                forest.insert(d.leaf_vertex(t).expect("leaf node"));
            }
            continue;
        }
        let c = d.children(t);
        stack.push((c[0], back.a as usize));
        stack.push((c[1], back.b as usize));
    }
    Ok(finish(g, forest, stats))
}

fn finish(g: &Graph, forest: VertexSet, stats: DpStats) -> Solution {
    debug_assert!(g.is_forest(&forest));
    let fvs = g.vertex_set().difference(&forest);
    Solution {
        forest_weight: g.set_weight_total(&forest),
        fvs_weight: g.set_weight_total(&fvs),
        forest,
        fvs,
        stats,
    }
}

/// A node's table as `(index, achievable sizes)`, indices sorted.
pub type SizeTable = Vec<(IndexKey, Vec<usize>)>;

/// Every node's table.
pub fn size_tables(g: &Graph, d: &BranchDecomposition, opts: &SolveOptions) -> Result<Vec<SizeTable>> {
    let (tables, _) = run(g, d, opts, &Cardinality)?;
    Ok(tables
        .into_iter()
        .map(|t| t.keys.into_iter().zip(t.vals.iter().map(|v| v.sizes())).collect())
        .collect())
}

/// Table statistics without reconstructing a solution.
pub fn table_stats(g: &Graph, d: &BranchDecomposition, opts: &SolveOptions) -> Result<DpStats> {
    Ok(run(g, d, opts, &Cardinality)?.1)
}

fn run<O: Objective>(
    g: &Graph,
    d: &BranchDecomposition,
    opts: &SolveOptions,
    obj: &O,
) -> Result<(Vec<NodeTable<O::Val>>, DpStats)> {
    let n = g.n();
    if d.vertex_count() != n {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition covers {} vertices, graph has {n}",
            d.vertex_count()
        )));
    }
    let report = mim_width(g, d, opts.parallel);
    let k = d.num_nodes();
    let mut tables: Vec<Option<NodeTable<O::Val>>> = (0..k).map(|_| None).collect();
    let mut stats = DpStats {
        nodes: Vec::with_capacity(k),
        width: report.width,
    };
    for t in d.postorder() {
        let w = opts.param.unwrap_or(report.per_node[t]);
        let rbound = 6 * w;
        let table = match d.leaf_vertex(t) {
            Some(v) => leaf::leaf_table(g, obj, v, rbound),
            None if d.is_leaf(t) => NodeTable {
                keys: vec![IndexKey::empty(n)],
                vals: vec![obj.leaf(0, &[0])],
            },
            None => {
                let c = d.children(t);
                let ctx = MergeCtx::new(g, d.below(c[0]), d.below(c[1]), rbound, w);
                let ta = tables[c[0]].as_ref().expect("children first");
                let tb = tables[c[1]].as_ref().expect("children first");
                ctx.merge(obj, ta, tb, opts.parallel)
            }
        };
        let bound = table_bound(n, w);
        let keys = table.keys.len();
        if opts.check_table_bound && keys as f64 > bound {
            return Err(Error::TableBound { node: t, keys, bound });
        }
        stats.nodes.push(NodeStats {
            node: t,
            keys,
            param: w,
            bound,
        });
        tables[t] = Some(table);
    }
    stats.nodes.sort_by_key(|s| s.node);
    Ok((tables.into_iter().map(|t| t.expect("all nodes")).collect(), stats))
}
