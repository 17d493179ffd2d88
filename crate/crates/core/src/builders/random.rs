use rand::Rng;

use crate::error::Result;
use crate::graph::Graph;

use super::nice_td::TreeDecomposition;

/// A uniformly random labelled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        g.add_edge(leaf, x).expect("valid edge");
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(last[0], last[1]).expect("valid edge");
    g
}

/// A random partial 2-tree on `n` vertices and a tree decomposition of
/// width at most 2. Each new vertex is attached to both ends of a random
/// edge of the 2-tree, then every edge is kept with probability `keep`.
pub fn random_tw2<R: Rng>(n: usize, keep: f64, rng: &mut R) -> Result<(Graph, TreeDecomposition)> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut tree = Vec::new();
    // edges of the 2-tree with a bag holding each
    let mut slots: Vec<(usize, usize, usize)> = Vec::new();
    match n {
        0 => {}
        1 => bags.push(vec![0]),
        _ => {
            bags.push(vec![0, 1]);
            edges.push((0, 1));
            slots.push((0, 1, 0));
        }
    }
    for v in 2..n {
        let (a, b, bag) = slots[rng.gen_range(0..slots.len())];
        bags.push(vec![a, b, v]);
        let t = bags.len() - 1;
        tree.push((bag, t));
        edges.push((a, v));
        edges.push((b, v));
        slots.push((a, v, t));
        slots.push((b, v, t));
    }
    let kept: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    Ok((Graph::from_edges(n, &kept)?, TreeDecomposition::new(bags, tree)?))
}
