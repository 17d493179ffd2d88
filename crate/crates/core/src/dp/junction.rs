//! Combining the tables of two children into the table of their parent.
//!
//! With `A1 = V_a`, `A2 = V_b` and `B` the rest, a pair of child entries
//! `(R_a, M_a, P_a)`, `(R_b, M_b, P_b)` yields parent entries `(R, M, P)`
//! when
//!
//! - each child forest agrees with its sibling on the sibling's side
//!   (`R_a ∩ A2 ⊆ R_b` and vice versa) and both lie inside `R` on `B`;
//! - neither child cover meets a forest vertex of the sibling or of `R`;
//! - no edge joins the two children's unconstrained boundary vertices;
//! - `R` keeps only child forest vertices inside `V_t`, adds `B`-vertices
//!   whose forest neighbours are all known, and every known forest vertex
//!   left out of `R` has at most one neighbour in `R ∩ B`;
//! - `M ∩ A_i ⊆ M_i` and `M` avoids the known forest vertices;
//! - the union of the crossing edges among known forest vertices and one
//!   star per block of `P_a` and `P_b` is acyclic; `P` is its connectivity
//!   restricted to the components of `R`.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::{Arc, Mutex};

use super::table::{IndexKey, NodeTable, Objective};
use crate::bitset::VertexSet;
use crate::forest::{components_of, is_valid_index, ComponentPartition};
use crate::graph::{crossing_graph, Adjacency, CrossingGraph, Graph, UnionFind};
use crate::mvc::{minimal_vertex_covers, Side};

pub(crate) struct MergeCtx<'g> {
    g: &'g Graph,
    n: usize,
    a1: VertexSet,
    a2: VertexSet,
    b: VertexSet,
    ga: CrossingGraph,
    gb: CrossingGraph,
    ht: CrossingGraph,
    rbound: usize,
    mvc_param: usize,
    cache: Mutex<HashMap<VertexSet, Arc<Vec<VertexSet>>>>,
}

/// Child entries sharing `(R, M)`.
struct Group {
    r: VertexSet,
    m: VertexSet,
    own: VertexSet,
    sibling: VertexSet,
    outside: VertexSet,
    free: VertexSet,
    free_nbrs: VertexSet,
    reps: Vec<usize>,
    entries: Range<usize>,
}

/// A parent forest reachable from a pair of groups, with the covers that
/// go with it and the crossing edges among known forest vertices.
struct Choice {
    r: VertexSet,
    reps: Vec<usize>,
    ms: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl<'g> MergeCtx<'g> {
    pub fn new(
        g: &'g Graph,
        a1: &VertexSet,
        a2: &VertexSet,
        rbound: usize,
        mvc_param: usize,
    ) -> Self {
        let n = g.n();
        let vt = a1.union(a2);
        let b = g.vertex_set().difference(&vt);
        MergeCtx {
            g,
            n,
            a1: a1.clone(),
            a2: a2.clone(),
            b,
            ga: crossing_graph(g, a1),
            gb: crossing_graph(g, a2),
            ht: crossing_graph(g, &vt),
            rbound,
            mvc_param,
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn groups<V>(&self, t: &NodeTable<V>, own: &VertexSet, sibling: &VertexSet, h: &CrossingGraph) -> Vec<Group> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < t.keys.len() {
            let k = &t.keys[i];
            let mut j = i + 1;
            while j < t.keys.len() && t.keys[j].r == k.r && t.keys[j].m == k.m {
                j += 1;
            }
            let free = h.side_a().difference(&k.r.union(&k.m));
            let mut free_nbrs = VertexSet::new(self.n);
            for x in &free {
                free_nbrs.union_with(self.g.neighbors(x));
            }
            free_nbrs.intersect_with(sibling);
            out.push(Group {
                r: k.r.clone(),
                m: k.m.clone(),
                own: k.r.intersection(own),
                sibling: k.r.intersection(sibling),
                outside: k.r.intersection(&self.b),
                free,
                free_nbrs,
                reps: components_of(h, &k.r).iter().map(|c| c.first().unwrap()).collect(),
                entries: i..j,
            });
            i = j;
        }
        out
    }

    fn covers(&self, r: &VertexSet) -> Arc<Vec<VertexSet>> {
        if let Some(c) = self.cache.lock().unwrap().get(r) {
            return c.clone();
        }
        let h = self.ht.remove(r);
        let c = Arc::new(minimal_vertex_covers(&h, self.mvc_param, Side::Smaller));
        self.cache.lock().unwrap().insert(r.clone(), c.clone());
        c
    }

    /// All parent forests (with their admissible covers) for a pair of
    /// child groups.
    fn choices(&self, ga: &Group, gb: &Group) -> Vec<Choice> {
        if !ga.sibling.is_subset(&gb.r) || !gb.sibling.is_subset(&ga.r) {
            return Vec::new();
        }
        if ga.m.intersects(&gb.r) || gb.m.intersects(&ga.r) {
            return Vec::new();
        }
        let forced = ga.outside.union(&gb.outside);
        if forced.intersects(&ga.m) || forced.intersects(&gb.m) {
            return Vec::new();
        }
        if ga.free_nbrs.intersects(&gb.free) {
            return Vec::new();
        }
        let known = ga.own.union(&gb.own);
        let g = self.g;

        let mut edges = Vec::new();
        let mut uf = UnionFind::new(self.n);
        let targets_a = gb.own.union(&forced);
        for x in &ga.own {
            for y in g.neighbors(x).intersection(&targets_a).iter() {
                edges.push((x, y));
            }
        }
        for x in &gb.own {
            for y in g.neighbors(x).intersection(&forced).iter() {
                edges.push((x, y));
            }
        }
        for &(x, y) in &edges {
            if !uf.union(x, y) {
                return Vec::new();
            }
        }
        let mut ocount = vec![0u8; self.n];
        for x in &known {
            ocount[x] = g.neighbors(x).intersection_len(&forced).min(2) as u8;
        }

        let mut excluded = forced.union(&ga.m);
        excluded.union_with(&gb.m);
        let mut cand_set = VertexSet::new(self.n);
        for x in &known {
            cand_set.union_with(g.neighbors(x));
        }
        cand_set.intersect_with(&self.b);
        cand_set.difference_with(&excluded);
        let cands: Vec<(usize, Vec<usize>)> = cand_set
            .iter()
            .map(|v| (v, g.neighbors(v).intersection(&known).to_vec()))
            .collect();

        let mut out = Vec::new();
        let mut state = ExtraState {
            o: forced,
            uf,
            ocount,
            forbidden: VertexSet::new(self.n),
            edges,
        };
        self.extras(&cands, 0, &mut state, &known, ga, gb, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extras(
        &self,
        cands: &[(usize, Vec<usize>)],
        i: usize,
        st: &mut ExtraState,
        known: &VertexSet,
        ga: &Group,
        gb: &Group,
        out: &mut Vec<Choice>,
    ) {
        if i == cands.len() {
            self.inside(st, known, ga, gb, out);
            return;
        }
        self.extras(cands, i + 1, st, known, ga, gb, out);
        let (v, kn) = &cands[i];
        if st.o.len() >= self.rbound {
            return;
        }
        let mut next = ExtraState {
            o: st.o.clone(),
            uf: st.uf.clone(),
            ocount: st.ocount.clone(),
            forbidden: st.forbidden.clone(),
            edges: st.edges.clone(),
        };
        if kn.len() == 1 {
            let x = kn[0];
            if next.ocount[x] >= 1 {
                // x would need to be in R, but a lone neighbour cannot be
                return;
            }
            next.forbidden.insert(x);
        }
        for &y in kn {
            next.ocount[y] = (next.ocount[y] + 1).min(2);
            if next.ocount[y] >= 2 && next.forbidden.contains(y) {
                return;
            }
            if !next.uf.union(*v, y) {
                return;
            }
            next.edges.push((y, *v));
        }
        next.o.insert(*v);
        self.extras(cands, i + 1, &mut next, known, ga, gb, out);
    }

    fn inside(&self, st: &ExtraState, known: &VertexSet, ga: &Group, gb: &Group, out: &mut Vec<Choice>) {
        let mut base = st.o.clone();
        for x in known {
            if st.ocount[x] >= 2 {
                base.insert(x);
            }
        }
        if base.len() > self.rbound {
            return;
        }
        let mut free: Vec<usize> = known
            .intersection(self.ht.side_a())
            .difference(&base)
            .difference(&st.forbidden)
            .to_vec();
        free.sort_unstable();
        let budget = self.rbound - base.len();
        let mut pick = Vec::new();
        self.subsets(&free, 0, budget, &mut pick, &base, st, known, ga, gb, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn subsets(
        &self,
        free: &[usize],
        i: usize,
        budget: usize,
        pick: &mut Vec<usize>,
        base: &VertexSet,
        st: &ExtraState,
        known: &VertexSet,
        ga: &Group,
        gb: &Group,
        out: &mut Vec<Choice>,
    ) {
        if i == free.len() {
            let mut r = base.clone();
            for &x in pick.iter() {
                r.insert(x);
            }
            self.finish(r, st, known, ga, gb, out);
            return;
        }
        self.subsets(free, i + 1, budget, pick, base, st, known, ga, gb, out);
        if budget > 0 {
            pick.push(free[i]);
            self.subsets(free, i + 1, budget - 1, pick, base, st, known, ga, gb, out);
            pick.pop();
        }
    }

    fn finish(&self, r: VertexSet, st: &ExtraState, known: &VertexSet, ga: &Group, gb: &Group, out: &mut Vec<Choice>) {
        let h = &self.ht;
        // a low-degree forest vertex needs a neighbour no other forest
        // vertex sees, whatever the cover
        for x in &r {
            if h.neighbors(x).intersection_len(&r) <= 1 {
                let mut pl = h.neighbors(x).difference(&r);
                for y in r.iter().filter(|&y| y != x) {
                    pl.difference_with(h.neighbors(y));
                }
                if pl.is_empty() {
                    return;
                }
            }
        }
        let all = self.covers(&r);
        let ms: Vec<VertexSet> = all
            .iter()
            .filter(|m| {
                m.intersection(&self.a1).is_subset(&ga.m)
                    && m.intersection(&self.a2).is_subset(&gb.m)
                    && m.is_disjoint(known)
                    && is_valid_index(h, &r, m)
            })
            .cloned()
            .collect();
        if ms.is_empty() {
            return;
        }
        let reps = components_of(h, &r).iter().map(|c| c.first().unwrap()).collect();
        out.push(Choice {
            r,
            reps,
            ms,
            edges: st.edges.clone(),
        });
    }

    /// Contributions of one group of the left child against every group of
    /// the right child, aggregated locally.
    fn merge_group<O: Objective>(
        &self,
        obj: &O,
        ga: &Group,
        groups_b: &[Group],
        ta: &NodeTable<O::Val>,
        tb: &NodeTable<O::Val>,
    ) -> Vec<(IndexKey, O::Val)> {
        let mut index: HashMap<IndexKey, usize> = HashMap::new();
        let mut keys: Vec<IndexKey> = Vec::new();
        let mut vals: Vec<Option<O::Val>> = Vec::new();
        for gb in groups_b {
            let choices = self.choices(ga, gb);
            if choices.is_empty() {
                continue;
            }
            for ai in ga.entries.clone() {
                let pa = &ta.keys[ai].p;
                for bi in gb.entries.clone() {
                    let pb = &tb.keys[bi].p;
                    let mut pair = None;
                    for ch in &choices {
                        let Some(p) = self.partition(ch, ga, pa, gb, pb) else {
                            continue;
                        };
                        let pair = pair.get_or_insert_with(|| obj.pair(&ta.vals[ai], &tb.vals[bi]));
                        for m in &ch.ms {
                            let key = IndexKey {
                                r: ch.r.clone(),
                                m: m.clone(),
                                p: p.clone(),
                            };
                            let slot = *index.entry(key).or_insert_with_key(|k| {
                                keys.push(k.clone());
                                vals.push(None);
                                keys.len() - 1
                            });
                            obj.add(&mut vals[slot], pair, &ta.vals[ai], ai as u32, &tb.vals[bi], bi as u32);
                        }
                    }
                }
            }
        }
        keys.into_iter()
            .zip(vals)
            .map(|(k, v)| (k, v.expect("every key receives a value")))
            .collect()
    }

    /// Acyclicity of the glued structure and the resulting partition of
    /// the components of `R`.
    fn partition(
        &self,
        ch: &Choice,
        ga: &Group,
        pa: &ComponentPartition,
        gb: &Group,
        pb: &ComponentPartition,
    ) -> Option<ComponentPartition> {
        let nba = pa.num_blocks();
        let mut uf = UnionFind::new(self.n + nba + pb.num_blocks());
        for &(x, y) in &ch.edges {
            if !uf.union(x, y) {
                return None;
            }
        }
        for (c, &rep) in ga.reps.iter().enumerate() {
            if !uf.union(self.n + pa.block_of(c), rep) {
                return None;
            }
        }
        for (c, &rep) in gb.reps.iter().enumerate() {
            if !uf.union(self.n + nba + pb.block_of(c), rep) {
                return None;
            }
        }
        let roots: Vec<usize> = ch.reps.iter().map(|&v| uf.find(v)).collect();
        Some(ComponentPartition::from_labels(&roots))
    }

    /// The parent table.
    pub fn merge<O: Objective>(
        &self,
        obj: &O,
        ta: &NodeTable<O::Val>,
        tb: &NodeTable<O::Val>,
        parallel: bool,
    ) -> NodeTable<O::Val> {
        let groups_a = self.groups(ta, &self.a1, &self.a2, &self.ga);
        let groups_b = self.groups(tb, &self.a2, &self.a1, &self.gb);
        let parts = crate::par::map(&groups_a, parallel, |ga| {
            self.merge_group(obj, ga, &groups_b, ta, tb)
        });
        let mut all: HashMap<IndexKey, O::Val> = HashMap::new();
        for part in parts {
            for (k, v) in part {
                match all.get_mut(&k) {
                    Some(t) => obj.absorb(t, v),
                    None => {
                        all.insert(k, v);
                    }
                }
            }
        }
        let mut items: Vec<(IndexKey, O::Val)> = all.into_iter().collect();
        items.sort_by(|x, y| x.0.cmp(&y.0));
        let (keys, vals) = items.into_iter().unzip();
        NodeTable { keys, vals }
    }
}

struct ExtraState {
    o: VertexSet,
    uf: UnionFind,
    ocount: Vec<u8>,
    forbidden: VertexSet,
    edges: Vec<(usize, usize)>,
}
