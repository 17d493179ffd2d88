use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph};

/// The graph `H` built from a bipartite graph `G` with sides
/// `v_1..v_m` and `w_1..w_m`, with a linear order of linear mim-width 1.
///
/// `H` has vertices `X_i`, `Y_j`, `Z_j` (when `w_j` has degree 3) and
/// `A_{i,j}` for each edge `v_i w_j`. The sets `{X_i} ∪ {A_{i',j} : i' <= i}`,
/// `{Y_j} ∪ A_j` and `{Z_j} ∪ A_j` are cliques.
#[derive(Clone, Debug)]
pub struct HamCycInstance {
    pub source: Graph,
    /// `v_1..v_m` as source vertices.
    pub left: Vec<usize>,
    /// `w_1..w_m` as source vertices.
    pub right: Vec<usize>,
    pub graph: Graph,
    /// `U_1 L_1 ... U_m L_m X_m ... X_1`.
    pub order: Vec<usize>,
    /// Names such as `X1`, `Z2` or `A1_3`, indexed by vertex of `H`.
    pub names: Vec<String>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<Option<usize>>,
    /// `(i, j, vertex)` for each `A_{i,j}`, 0-based, sorted.
    pub a: Vec<(usize, usize, usize)>,
}

/// Splits a bipartite graph into two sides, each component's smallest
/// vertex on the left. Sides are sorted.
fn bipartition(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].expect("visited");
            for v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        stack.push(v);
                    }
                    Some(sv) if sv == su => {
                        return Err(Error::InvalidArgument(format!(
                            "graph is not bipartite: edge ({u},{v}) joins one side"
                        )));
                    }
                    _ => {}
                }
            }
        }
    }
    let left = (0..n).filter(|&v| side[v] == Some(false)).collect();
    let right = (0..n).filter(|&v| side[v] == Some(true)).collect();
    Ok((left, right))
}

pub fn hamcyc_construct(g: &Graph) -> Result<HamCycInstance> {
    for v in 0..g.n() {
        let d = g.degree(v);
        if d > 3 {
            return Err(Error::InvalidArgument(format!("vertex {v} has degree {d} > 3")));
        }
        if d < 2 {
            return Err(Error::InvalidArgument(format!("vertex {v} has degree {d} < 2")));
        }
    }
    let (left, right) = bipartition(g)?;
    if left.len() != right.len() {
        return Err(Error::InvalidArgument(format!(
            "sides have {} and {} vertices; they must be equal",
            left.len(),
            right.len()
        )));
    }
    let m = left.len();
    let mut pos_right = vec![usize::MAX; g.n()];
    for (j, &w) in right.iter().enumerate() {
        pos_right[w] = j;
    }
    let mut names = Vec::new();
    let fresh = |name: String, names: &mut Vec<String>| {
        names.push(name);
        names.len() - 1
    };
    let x: Vec<usize> = (0..m).map(|i| fresh(format!("X{}", i + 1), &mut names)).collect();
    let y: Vec<usize> = (0..m).map(|j| fresh(format!("Y{}", j + 1), &mut names)).collect();
    let z: Vec<Option<usize>> = (0..m)
        .map(|j| (g.degree(right[j]) == 3).then(|| fresh(format!("Z{}", j + 1), &mut names)))
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, &v) in left.iter().enumerate() {
        for w in g.neighbors(v) {
            pairs.push((i, pos_right[w]));
        }
    }
    pairs.sort_unstable();
    let a: Vec<(usize, usize, usize)> = pairs
        .iter()
        .map(|&(i, j)| (i, j, fresh(format!("A{}_{}", i + 1, j + 1), &mut names)))
        .collect();
    let mut h = Graph::new(names.len());
    let mut clique = |vs: &[usize]| {
        for (k, &p) in vs.iter().enumerate() {
            for &q in &vs[k + 1..] {
                h.add_edge(p, q).expect("distinct vertices");
            }
        }
    };
    for (i, &xi) in x.iter().enumerate() {
        let mut c = vec![xi];
        c.extend(a.iter().filter(|e| e.0 <= i).map(|e| e.2));
        clique(&c);
    }
    for j in 0..m {
        let aj: Vec<usize> = a.iter().filter(|e| e.1 == j).map(|e| e.2).collect();
        for u in std::iter::once(y[j]).chain(z[j]) {
            let mut c = vec![u];
            c.extend_from_slice(&aj);
            clique(&c);
        }
    }
    let mut order = Vec::with_capacity(names.len());
    for j in 0..m {
        order.push(y[j]);
        order.extend(z[j]);
        order.extend(a.iter().filter(|e| e.1 == j).map(|e| e.2));
    }
    order.extend(x.iter().rev());
    Ok(HamCycInstance {
        source: g.clone(),
        left,
        right,
        graph: h,
        order,
        names,
        x,
        y,
        z,
        a,
    })
}

impl HamCycInstance {
    /// The five structural properties, each checked by a direct scan:
    ///
    /// 1. `X ∪ Y ∪ Z` is independent;
    /// 2. `A` is a clique;
    /// 3. `N(Y_j) = N(Z_j) = A_j`;
    /// 4. `N(X_i)` grows with `i`, and `N(A_{i,.}) ∩ X` shrinks with `i`
    ///    (so both families are chains);
    /// 5. no vertex of `A_j` sees `Y_{j'}` or `Z_{j'}` for `j' > j`.
    pub fn properties(&self) -> [bool; 5] {
        let h = &self.graph;
        let n = h.n();
        let m = self.x.len();
        let xs = VertexSet::from_vertices(n, self.x.iter().copied());
        let yz: Vec<usize> = self.y.iter().copied().chain(self.z.iter().flatten().copied()).collect();
        let avs: Vec<usize> = self.a.iter().map(|e| e.2).collect();
        let indep: Vec<usize> = self.x.iter().copied().chain(yz.iter().copied()).collect();
        let h1 = indep.iter().all(|&u| indep.iter().all(|&v| !h.has_edge(u, v)));
        let h2 = avs.iter().all(|&u| avs.iter().all(|&v| u == v || h.has_edge(u, v)));
        let a_of = |j: usize| VertexSet::from_vertices(n, self.a.iter().filter(|e| e.1 == j).map(|e| e.2));
        let h3 = (0..m).all(|j| {
            let aj = a_of(j);
            std::iter::once(self.y[j]).chain(self.z[j]).all(|u| *h.neighbors(u) == aj)
        });
        let xchain = (1..m).all(|i| h.neighbors(self.x[i - 1]).is_subset(h.neighbors(self.x[i])));
        let achain = self.a.iter().all(|p| {
            self.a.iter().filter(|q| p.0 <= q.0).all(|q| {
                h.neighbors(q.2).intersection(&xs).is_subset(&h.neighbors(p.2).intersection(&xs))
            })
        });
        let h5 = self.a.iter().all(|&(_, j, av)| {
            (j + 1..m).all(|j2| {
                !h.has_edge(av, self.y[j2]) && self.z[j2].is_none_or(|zv| !h.has_edge(av, zv))
            })
        });
        [h1, h2, h3, xchain && achain, h5]
    }
}

/// `C4`, `C6` or `K33`.
pub fn named_source(name: &str) -> Option<Graph> {
    let cycle = |n: usize| {
        let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).expect("valid cycle")
    };
    match name {
        "C4" => Some(cycle(4)),
        "C6" => Some(cycle(6)),
        "K33" => {
            let e: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
            Some(Graph::from_edges(6, &e).expect("valid K33"))
        }
        _ => None,
    }
}

/// A bipartite source on sides `0..m` and `m..2m`: a random Hamiltonian
/// cycle plus random extra edges between vertices of degree 2, so every
/// degree is 2 or 3. Needs `m >= 2`.
pub fn random_source<R: Rng>(m: usize, rng: &mut R) -> Graph {
    assert!(m >= 2);
    let mut vs: Vec<usize> = (0..m).collect();
    let mut ws: Vec<usize> = (m..2 * m).collect();
    vs.shuffle(rng);
    ws.shuffle(rng);
    let mut g = Graph::new(2 * m);
    for i in 0..m {
        g.add_edge(vs[i], ws[i]).expect("valid");
        g.add_edge(ws[i], vs[(i + 1) % m]).expect("valid");
    }
    for _ in 0..2 * m {
        let v = rng.gen_range(0..m);
        let w = rng.gen_range(m..2 * m);
        if g.degree(v) == 2 && g.degree(w) == 2 && !g.has_edge(v, w) && rng.gen_bool(0.6) {
            g.add_edge(v, w).expect("valid");
        }
    }
    g
}
