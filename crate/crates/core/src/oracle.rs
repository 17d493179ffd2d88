//! Brute-force reference solvers. They read a graph only through its edge
//! list and weights and share no logic with the solver.

use crate::graph::Graph;

/// Largest graph the exhaustive searches accept.
pub const MAX_VERTICES: usize = 26;

fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= MAX_VERTICES, "oracle limited to {MAX_VERTICES} vertices");
    let mut adj = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// `G[s]` is acyclic iff every component with `k` vertices has `k - 1` edges.
fn acyclic(adj: &[u32], s: u32) -> bool {
    let mut seen = 0u32;
    let mut rest = s;
    while rest != 0 {
        let start = rest.trailing_zeros();
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & s & !comp;
            comp |= new;
            frontier |= new;
        }
        let verts = comp.count_ones();
        let mut deg_sum = 0;
        let mut c = comp;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            deg_sum += (adj[v] & comp).count_ones();
        }
        if deg_sum / 2 != verts - 1 {
            return false;
        }
        seen |= comp;
        rest &= !comp;
    }
    seen == s
}

fn to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Whether the given vertices induce a forest.
pub fn is_induced_forest(g: &Graph, vertices: &[usize]) -> bool {
    let adj = masks(g);
    acyclic(&adj, vertices.iter().fold(0, |m, &v| m | 1 << v))
}

/// Size of a maximum induced forest and one such forest.
pub fn max_induced_forest(g: &Graph) -> (usize, Vec<usize>) {
    let adj = masks(g);
    let n = g.n();
    let mut best = (0usize, 0u32);
    for s in 0u64..(1u64 << n) {
        let s = s as u32;
        let k = s.count_ones() as usize;
        if k > best.0 && acyclic(&adj, s) {
            best = (k, s);
        }
    }
    (best.0, to_vec(best.1))
}

/// Minimum feedback vertex set size (unweighted).
pub fn min_fvs(g: &Graph) -> usize {
    g.n() - max_induced_forest(g).0
}

/// Minimum feedback vertex set weight and one such set.
pub fn min_weight_fvs(g: &Graph) -> (f64, Vec<usize>) {
    let adj = masks(g);
    let n = g.n();
    let w: Vec<f64> = (0..n).map(|v| g.weight(v)).collect();
    let total: f64 = w.iter().sum();
    let mut best = (f64::NEG_INFINITY, 0u32);
    for s in 0u64..(1u64 << n) {
        let s = s as u32;
        let ws: f64 = to_vec(s).iter().map(|&v| w[v]).sum();
        if ws > best.0 && acyclic(&adj, s) {
            best = (ws, s);
        }
    }
    let fvs: Vec<usize> = (0..n).filter(|&v| best.1 >> v & 1 == 0).collect();
    (total - best.0, fvs)
}

/// Size of a maximum induced matching of the bipartite graph given by
/// `edges`, by search over edge subsets.
pub fn max_induced_matching(edges: &[(usize, usize)]) -> usize {
    fn touches(e: (usize, usize), f: (usize, usize), edges: &[(usize, usize)]) -> bool {
        let (a, b) = e;
        let (c, d) = f;
        if a == c || a == d || b == c || b == d {
            return true;
        }
        edges.iter().any(|&(x, y)| {
            let hit = |p: usize, q: usize| (x == p && y == q) || (x == q && y == p);
            hit(a, c) || hit(a, d) || hit(b, c) || hit(b, d)
        })
    }
    fn go(i: usize, chosen: &mut Vec<(usize, usize)>, edges: &[(usize, usize)], best: &mut usize) {
        if chosen.len() + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = chosen.len();
            return;
        }
        let e = edges[i];
        if chosen.iter().all(|&f| !touches(e, f, edges)) {
            chosen.push(e);
            go(i + 1, chosen, edges, best);
            chosen.pop();
        }
        go(i + 1, chosen, edges, best);
    }
    let mut best = 0;
    go(0, &mut Vec::new(), edges, &mut best);
    best
}

/// All minimal vertex covers of the graph on `vertices` with `edges`, as
/// sorted vertex lists in lexicographic order.
pub fn minimal_vertex_covers(vertices: &[usize], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let k = vertices.len();
    assert!(k <= MAX_VERTICES);
    let pos = |v: usize| vertices.iter().position(|&x| x == v).expect("edge endpoint listed");
    let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
    let covers = |s: u32| e.iter().all(|&(a, b)| s >> a & 1 == 1 || s >> b & 1 == 1);
    let mut out = Vec::new();
    for s in 0u64..(1u64 << k) {
        let s = s as u32;
        if covers(s) && (0..k).all(|i| s >> i & 1 == 0 || !covers(s & !(1 << i))) {
            let mut c: Vec<usize> = (0..k).filter(|&i| s >> i & 1 == 1).map(|i| vertices[i]).collect();
            c.sort_unstable();
            out.push(c);
        }
    }
    out.sort();
    out
}
