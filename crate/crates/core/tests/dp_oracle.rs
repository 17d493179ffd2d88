use mimfvs::dp::{solve_mif, solve_weighted_mif, SolveOptions};
use mimfvs::{oracle, BranchDecomposition, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn c4_optimum_is_three() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let d = BranchDecomposition::from_rooted(4, 7, &[(6, 4), (6, 5), (4, 0), (4, 2), (5, 1), (5, 3)], 6, &[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
    let s = solve_mif(&g, &d, &SolveOptions::default()).unwrap();
    assert_eq!(s.forest_size(), 3);
}

#[test]
fn random_linear_orders_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for round in 0..300 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let d = BranchDecomposition::from_linear_order(&order).unwrap();
        let s = solve_mif(&g, &d, &SolveOptions::default()).unwrap();
        let (best, _) = oracle::max_induced_forest(&g);
        assert_eq!(s.forest_size(), best, "round {round}: {:?} order {order:?}", g.edges());
        assert!(g.is_forest(&s.forest));
    }
}

#[test]
fn weighted_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let mut g = random_graph(&mut rng, n, 0.5);
        let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..10.0)).collect();
        g.set_weights(w).unwrap();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let d = BranchDecomposition::from_linear_order(&order).unwrap();
        let s = solve_weighted_mif(&g, &d, &SolveOptions::default()).unwrap();
        let (fw, _) = oracle::min_weight_fvs(&g);
        assert!((s.fvs_weight - fw).abs() < 1e-9, "{} vs {fw}", s.fvs_weight);
    }
}

/// Random rooted binary tree over a shuffled vertex list.
fn random_decomposition(rng: &mut ChaCha8Rng, n: usize) -> BranchDecomposition {
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let mut edges = Vec::new();
    let mut leaves = Vec::new();
    let mut next = 0;
    fn build(vs: &[usize], rng: &mut ChaCha8Rng, next: &mut usize, edges: &mut Vec<(usize, usize)>, leaves: &mut Vec<(usize, usize)>) -> usize {
        let id = *next;
        *next += 1;
        if vs.len() == 1 {
            leaves.push((id, vs[0]));
            return id;
        }
        let cut = rng.gen_range(1..vs.len());
        let a = build(&vs[..cut], rng, next, edges, leaves);
        let b = build(&vs[cut..], rng, next, edges, leaves);
        edges.push((id, a));
        edges.push((id, b));
        id
    }
    let root = build(&verts, rng, &mut next, &mut edges, &mut leaves);
    BranchDecomposition::from_rooted(n, next, &edges, root, &leaves).unwrap()
}

#[test]
fn random_trees_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for round in 0..300 {
        let n = rng.gen_range(2..=11);
        let p = rng.gen_range(0.15..0.7);
        let g = random_graph(&mut rng, n, p);
        let d = random_decomposition(&mut rng, n);
        let s = solve_mif(&g, &d, &SolveOptions::default()).unwrap();
        let (best, _) = oracle::max_induced_forest(&g);
        assert_eq!(s.forest_size(), best, "round {round}: {:?}", g.edges());
    }
}
