use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::branchdec::{BranchDecomposition, RawTree};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// A rooted nice tree decomposition. `width` is a declared upper bound:
/// every bag has at most `width + 1` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct NiceTreeDecomposition {
    width: usize,
    root: usize,
    kind: Vec<NiceKind>,
    bag: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidDecomposition(msg)
}

impl NiceTreeDecomposition {
    /// Orients `edges` away from `root` and checks that every node matches
    /// its kind. Bags are sorted and deduplicated.
    pub fn new(
        width: usize,
        kind: Vec<NiceKind>,
        bags: Vec<Vec<usize>>,
        edges: &[(usize, usize)],
        root: usize,
    ) -> Result<Self> {
        let k = kind.len();
        if bags.len() != k {
            return Err(bad(format!("{} kinds but {} bags", k, bags.len())));
        }
        if root >= k {
            return Err(bad(format!("root {root} is not a node")));
        }
        let mut adj = vec![Vec::new(); k];
        let mut uf = UnionFind::new(k);
        for &(a, b) in edges {
            if a >= k || b >= k {
                return Err(bad(format!("tree edge ({a},{b}) references a missing node")));
            }
            if !uf.union(a, b) {
                return Err(bad(format!("tree edge ({a},{b}) closes a cycle")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        if edges.len() + 1 != k {
            return Err(bad("tree decomposition is not connected".into()));
        }
        let mut children = vec![Vec::new(); k];
        let mut seen = vec![false; k];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(t) = stack.pop() {
            let mut nb = adj[t].clone();
            nb.sort_unstable();
            for x in nb {
                if !std::mem::replace(&mut seen[x], true) {
                    children[t].push(x);
                    stack.push(x);
                }
            }
        }
        let bag = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        let td = NiceTreeDecomposition {
            width,
            root,
            kind,
            bag,
            children,
        };
        td.check_shape()?;
        Ok(td)
    }

    fn check_shape(&self) -> Result<()> {
        for t in 0..self.kind.len() {
            let b = &self.bag[t];
            let c = &self.children[t];
            if b.len() > self.width + 1 {
                return Err(bad(format!(
                    "bag of node {t} has {} vertices, more than width {} allows",
                    b.len(),
                    self.width
                )));
            }
            let ok = match self.kind[t] {
                NiceKind::Leaf => c.is_empty() && b.is_empty(),
                NiceKind::Introduce(v) => {
                    c.len() == 1 && !self.bag[c[0]].contains(&v) && with(&self.bag[c[0]], v) == *b
                }
                NiceKind::Forget(v) => {
                    c.len() == 1 && self.bag[c[0]].contains(&v) && with(b, v) == self.bag[c[0]]
                }
                NiceKind::Join => c.len() == 2 && self.bag[c[0]] == *b && self.bag[c[1]] == *b,
            };
            if !ok {
                return Err(bad(format!(
                    "node {t} is not a valid {:?} node",
                    self.kind[t]
                )));
            }
        }
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn num_nodes(&self) -> usize {
        self.kind.len()
    }

    pub fn kind(&self, t: usize) -> NiceKind {
        self.kind[t]
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bag[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    /// Largest bag of a join node, 0 without joins.
    pub fn max_join_bag(&self) -> usize {
        (0..self.num_nodes())
            .filter(|&t| self.kind[t] == NiceKind::Join)
            .map(|t| self.bag[t].len())
            .max()
            .unwrap_or(0)
    }

    /// Checks the tree decomposition axioms against `g`. Every vertex is
    /// forgotten exactly once or lies in the root bag.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut tops = vec![0usize; n];
        let mut cover: Vec<VertexSet> = Vec::new();
        for t in 0..self.num_nodes() {
            let mut s = VertexSet::new(n);
            for &v in &self.bag[t] {
                if v >= n {
                    return Err(bad(format!("bag of node {t} names vertex {v} outside 0..{n}")));
                }
                s.insert(v);
            }
            cover.push(s);
        }
        // the nodes holding v form a subtree iff exactly one of them has a
        // parent without v
        let mut parent = vec![None; self.num_nodes()];
        for t in 0..self.num_nodes() {
            for &c in &self.children[t] {
                parent[c] = Some(t);
            }
        }
        for t in 0..self.num_nodes() {
            for v in &cover[t] {
                if parent[t].is_none_or(|p| !cover[p].contains(v)) {
                    tops[v] += 1;
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| tops[v] != 1) {
            return Err(bad(if tops[v] == 0 {
                format!("vertex {v} is in no bag")
            } else {
                format!("bags holding vertex {v} are not connected")
            }));
        }
        for (u, v) in g.edges() {
            if !cover.iter().any(|s| s.contains(u) && s.contains(v)) {
                return Err(bad(format!("edge ({u},{v}) is in no bag")));
            }
        }
        Ok(())
    }

    /// The same decomposition with a chain of forget nodes above the root
    /// so that the root bag is empty.
    pub fn with_empty_root(&self) -> Self {
        let mut td = self.clone();
        let mut top = td.root;
        for &v in self.bag[self.root].iter().rev() {
            let b: Vec<usize> = td.bag[top].iter().copied().filter(|&x| x != v).collect();
            td.kind.push(NiceKind::Forget(v));
            td.bag.push(b);
            td.children.push(vec![top]);
            top = td.kind.len() - 1;
        }
        td.root = top;
        td
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = (0..self.num_nodes())
            .flat_map(|t| self.children[t].iter().map(move |&c| (t.min(c), t.max(c))))
            .collect();
        e.sort_unstable();
        e
    }
}

fn with(b: &[usize], v: usize) -> Vec<usize> {
    let mut out = b.to_vec();
    out.push(v);
    out.sort_unstable();
    out
}

/// Builds a nice decomposition bottom-up.
#[derive(Default)]
struct Builder {
    kind: Vec<NiceKind>,
    bag: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
}

impl Builder {
    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.kind.push(kind);
        self.bag.push(bag);
        self.children.push(children);
        self.kind.len() - 1
    }

    fn leaf(&mut self) -> usize {
        self.push(NiceKind::Leaf, Vec::new(), Vec::new())
    }

    fn introduce(&mut self, below: usize, v: usize) -> usize {
        let b = with(&self.bag[below], v);
        self.push(NiceKind::Introduce(v), b, vec![below])
    }

    fn forget(&mut self, below: usize, v: usize) -> usize {
        let b = self.bag[below].iter().copied().filter(|&x| x != v).collect();
        self.push(NiceKind::Forget(v), b, vec![below])
    }

    /// Left-deep joins of `tops`, which must share one bag.
    fn join_all(&mut self, tops: &[usize]) -> usize {
        let mut acc = tops[0];
        for &t in &tops[1..] {
            let b = self.bag[acc].clone();
            acc = self.push(NiceKind::Join, b, vec![acc, t]);
        }
        acc
    }

    fn finish(mut self, width: usize, root: usize) -> Result<NiceTreeDecomposition> {
        for c in &mut self.children {
            c.sort_unstable();
        }
        let td = NiceTreeDecomposition {
            width,
            root,
            kind: self.kind,
            bag: self.bag,
            children: self.children,
        };
        td.check_shape()?;
        Ok(td)
    }
}

/// A tree decomposition in arbitrary form: bags and the edges of a tree on
/// them.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let k = bags.len();
        let mut uf = UnionFind::new(k);
        for &(a, b) in &edges {
            if a >= k || b >= k || !uf.union(a, b) {
                return Err(bad(format!("tree edge ({a},{b}) is invalid")));
            }
        }
        if k > 0 && edges.len() + 1 != k {
            return Err(bad("tree decomposition is not connected".into()));
        }
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(TreeDecomposition { bags, edges })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// The standard normalisation, rooted at bag 0. On every tree edge the
    /// vertices leaving are forgotten before new ones are introduced, a
    /// node with several children becomes a chain of joins, and the root
    /// bag is forgotten at the top. The declared width is the larger of
    /// the tree-width and the largest join bag, so it can be one more than
    /// [`TreeDecomposition::width`].
    pub fn make_nice(&self, g: &Graph) -> Result<NiceTreeDecomposition> {
        let k = self.bags.len();
        let width = self.width();
        let mut b = Builder::default();
        if k == 0 {
            if g.n() > 0 {
                return Err(bad("tree decomposition has no bags".into()));
            }
            let r = b.leaf();
            return b.finish(width, r);
        }
        let mut adj = vec![Vec::new(); k];
        for &(x, y) in &self.edges {
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut order = Vec::with_capacity(k);
        let mut parent = vec![usize::MAX; k];
        let mut stack = vec![0];
        parent[0] = 0;
        while let Some(t) = stack.pop() {
            order.push(t);
            for &x in &adj[t] {
                if parent[x] == usize::MAX {
                    parent[x] = t;
                    stack.push(x);
                }
            }
        }
        let mut top = vec![usize::MAX; k];
        for &t in order.iter().rev() {
            let bt = &self.bags[t];
            let mut kids: Vec<usize> = adj[t].iter().copied().filter(|&x| parent[x] == t && x != t).collect();
            kids.sort_unstable();
            let mut branches = Vec::new();
            for c in kids {
                let mut cur = top[c];
                for &v in &self.bags[c] {
                    if !bt.contains(&v) {
                        cur = b.forget(cur, v);
                    }
                }
                for &v in bt {
                    if !self.bags[c].contains(&v) {
                        cur = b.introduce(cur, v);
                    }
                }
                branches.push(cur);
            }
            if branches.is_empty() {
                let mut cur = b.leaf();
                for &v in bt {
                    cur = b.introduce(cur, v);
                }
                branches.push(cur);
            }
            top[t] = b.join_all(&branches);
        }
        let mut root = top[0];
        for &v in &self.bags[0] {
            root = b.forget(root, v);
        }
        let joins = (0..b.kind.len())
            .filter(|&t| b.kind[t] == NiceKind::Join)
            .map(|t| b.bag[t].len())
            .max()
            .unwrap_or(0);
        let td = b.finish(width.max(joins), root)?;
        td.validate(g)?;
        Ok(td)
    }
}

/// A nice tree decomposition of a forest of width 1 whose join bags hold
/// one vertex. For a vertex `v` with children `c_1, ..., c_d` the part
/// below `v` ends in bag `{v}`: each child's part is extended by
/// introducing `v` and forgetting `c_i`, and these branches are joined at
/// `{v}`. Component roots are forgotten and joined at the empty bag.
pub fn tree_nice_td(g: &Graph) -> Result<NiceTreeDecomposition> {
    let n = g.n();
    if !g.is_forest(&g.vertex_set()) {
        return Err(Error::InvalidArgument("graph is not a forest".into()));
    }
    let mut b = Builder::default();
    if n == 0 {
        let r = b.leaf();
        return b.finish(1, r);
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut comp_roots = Vec::new();
    for s in 0..n {
        if parent[s] != usize::MAX {
            continue;
        }
        comp_roots.push(s);
        parent[s] = s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            order.push(v);
            for u in g.neighbors(v).iter() {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
    }
    let mut top = vec![usize::MAX; n];
    let mut kids = vec![Vec::new(); n];
    for &v in &order {
        if parent[v] != v {
            kids[parent[v]].push(v);
        }
    }
    for &v in order.iter().rev() {
        kids[v].sort_unstable();
        let branches: Vec<usize> = if kids[v].is_empty() {
            let l = b.leaf();
            vec![b.introduce(l, v)]
        } else {
            kids[v]
                .iter()
                .map(|&c| {
                    let i = b.introduce(top[c], v);
                    b.forget(i, c)
                })
                .collect()
        };
        top[v] = b.join_all(&branches);
    }
    let ends: Vec<usize> = comp_roots.iter().map(|&r| b.forget(top[r], r)).collect();
    let root = b.join_all(&ends);
    let td = b.finish(1, root)?;
    td.validate(g)?;
    Ok(td)
}

/// A branch decomposition built from a nice tree decomposition, with the
/// tree decomposition node behind every internal node.
#[derive(Clone, Debug)]
pub struct TdConversion {
    pub decomposition: BranchDecomposition,
    /// For each branch decomposition node, the node of `td` it came from;
    /// `None` for leaves.
    pub origin: Vec<Option<usize>>,
    /// The input with an empty root bag.
    pub td: NiceTreeDecomposition,
}

/// Hangs a leaf for `v` off the node forgetting `v`, then smooths. Join
/// bags larger than the declared width are rejected.
pub fn branchdec_from_nice_td(g: &Graph, td: &NiceTreeDecomposition) -> Result<TdConversion> {
    td.validate(g)?;
    let w = td.width();
    if let Some(t) = (0..td.num_nodes()).find(|&t| td.kind(t) == NiceKind::Join && td.bag(t).len() > w) {
        return Err(Error::InvalidArgument(format!(
            "join node {t} has a bag of {} vertices, more than width {w}",
            td.bag(t).len()
        )));
    }
    let td = td.with_empty_root();
    let k = td.num_nodes();
    let mut raw = RawTree::new();
    for _ in 0..k {
        raw.add_node(None);
    }
    for t in 0..k {
        for &c in td.children(t) {
            raw.add_edge(t, c);
        }
    }
    for t in 0..k {
        if let NiceKind::Forget(v) = td.kind(t) {
            let l = raw.add_node(Some(v));
            raw.add_edge(t, l);
        }
    }
    let root = raw.settle_root(td.root());
    let origin = raw.live_nodes().into_iter().map(|t| (t < k).then_some(t)).collect();
    let decomposition = raw.into_decomposition(g.n(), root)?;
    Ok(TdConversion {
        decomposition,
        origin,
        td,
    })
}

/// Checks directly that every internal cut `V_t` of a converted
/// decomposition has `N(V_t) \ V_t` inside the bag of its origin node and
/// of size at most the width. Returns the largest such separator.
pub fn separator_witness(g: &Graph, conv: &TdConversion) -> Result<usize> {
    let d = &conv.decomposition;
    let w = conv.td.width();
    let mut largest = 0;
    for t in 0..d.num_nodes() {
        if d.is_leaf(t) {
            continue;
        }
        let o = conv.origin[t]
            .ok_or_else(|| bad(format!("internal node {t} has no origin")))?;
        let vt = d.below(t);
        let s = g.set_neighborhood(vt).difference(vt);
        if s.iter().any(|v| !conv.td.bag(o).contains(&v)) || s.len() > w {
            return Err(bad(format!(
                "cut at node {t} has separator {s:?} outside bag {:?} or larger than {w}",
                conv.td.bag(o)
            )));
        }
        largest = largest.max(s.len());
    }
    Ok(largest)
}

/// Reads the nice tree decomposition format.
pub fn read_nice_td(text: &str) -> Result<NiceTreeDecomposition> {
    let mut header: Option<(usize, usize)> = None;
    let mut kinds: Vec<Option<NiceKind>> = Vec::new();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    let mut root = None;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| perr(ln, format!("expected a non-negative integer, got {s:?}")))
        };
        match toks.first().copied() {
            None | Some("c") => continue,
            Some("td") => {
                if header.is_some() {
                    return Err(perr(ln, "second header"));
                }
                if toks.len() != 3 {
                    return Err(perr(ln, "header is `td <num_nodes> <width>`"));
                }
                let k = num(toks[1])?;
                header = Some((k, num(toks[2])?));
                kinds = vec![None; k];
                bags = vec![Vec::new(); k];
            }
            Some(_) if header.is_none() => return Err(perr(ln, "missing `td` header")),
            Some("b") => {
                let colon = toks
                    .iter()
                    .position(|&t| t == ":")
                    .ok_or_else(|| perr(ln, "bag line needs ` : `"))?;
                if colon < 3 {
                    return Err(perr(ln, "bag line is `b <id> <kind> [<v>] : <bag>`"));
                }
                let id = num(toks[1])?;
                if id >= kinds.len() {
                    return Err(perr(ln, format!("node {id} out of range")));
                }
                let arg = &toks[3..colon];
                let kind = match (toks[2], arg) {
                    ("leaf", []) => NiceKind::Leaf,
                    ("join", []) => NiceKind::Join,
                    ("introduce", [v]) => NiceKind::Introduce(num(v)?),
                    ("forget", [v]) => NiceKind::Forget(num(v)?),
                    (k, _) => return Err(perr(ln, format!("bad node kind {k:?} or argument count"))),
                };
                if kinds[id].replace(kind).is_some() {
                    return Err(perr(ln, format!("node {id} defined twice")));
                }
                bags[id] = toks[colon + 1..].iter().map(|s| num(s)).collect::<Result<_>>()?;
            }
            Some("e") => {
                if toks.len() != 3 {
                    return Err(perr(ln, "edge line is `e <i> <j>`"));
                }
                edges.push((num(toks[1])?, num(toks[2])?));
            }
            Some("r") => {
                if toks.len() != 2 || root.is_some() {
                    return Err(perr(ln, "root line is `r <id>`, given once"));
                }
                root = Some(num(toks[1])?);
            }
            Some(t) => return Err(perr(ln, format!("unknown line type {t:?}"))),
        }
    }
    let (_, width) = header.ok_or_else(|| perr(0, "missing `td` header"))?;
    let kinds = kinds
        .into_iter()
        .enumerate()
        .map(|(t, k)| k.ok_or_else(|| perr(0, format!("node {t} has no `b` line"))))
        .collect::<Result<Vec<_>>>()?;
    let root = root.ok_or_else(|| perr(0, "missing `r` line"))?;
    NiceTreeDecomposition::new(width, kinds, bags, &edges, root)
}

/// Writes the nice tree decomposition format: header, nodes by id, sorted
/// edges, root.
pub fn write_nice_td(td: &NiceTreeDecomposition) -> String {
    let mut s = format!("td {} {}\n", td.num_nodes(), td.width());
    for t in 0..td.num_nodes() {
        let head = match td.kind(t) {
            NiceKind::Leaf => "leaf".to_string(),
            NiceKind::Join => "join".to_string(),
            NiceKind::Introduce(v) => format!("introduce {v}"),
            NiceKind::Forget(v) => format!("forget {v}"),
        };
        let _ = write!(s, "b {t} {head} :");
        for v in td.bag(t) {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    for (a, b) in td.edges() {
        let _ = writeln!(s, "e {a} {b}");
    }
    let _ = writeln!(s, "r {}", td.root());
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branchdec::mim_width;

    fn path(n: usize) -> Graph {
        let e: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn path_power_has_width_one() {
        let g = path(6);
        let td = tree_nice_td(&g).unwrap();
        assert!(td.max_join_bag() <= 1);
        let conv = branchdec_from_nice_td(&g, &td).unwrap();
        assert!(separator_witness(&g, &conv).unwrap() <= 1);
        let d = &conv.decomposition;
        assert_eq!(d.children(d.root()).len(), 2);
        assert_eq!(mim_width(&g.power(3), d, false).width, 1);
    }

    #[test]
    fn star_square_is_a_clique() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let conv = branchdec_from_nice_td(&g, &tree_nice_td(&g).unwrap()).unwrap();
        let h = g.power(2);
        assert_eq!(h.m(), 10);
        assert_eq!(mim_width(&h, &conv.decomposition, false).width, 1);
    }

    #[test]
    fn forest_and_tiny_inputs() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let conv = branchdec_from_nice_td(&g, &tree_nice_td(&g).unwrap()).unwrap();
        assert_eq!(conv.decomposition.vertex_count(), 5);
        for n in 0..3 {
            let g = path(n);
            let conv = branchdec_from_nice_td(&g, &tree_nice_td(&g).unwrap()).unwrap();
            assert_eq!(conv.decomposition.vertex_count(), n);
        }
    }

    #[test]
    fn rejects_wide_join_bags() {
        // K_3 with a join at bag {0,1}: width 1 is too small for it
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![0, 1, 2], vec![0, 1]], vec![(0, 1), (0, 2)]).unwrap();
        let nice = td.make_nice(&g).unwrap();
        assert_eq!(nice.width(), 2);
        assert_eq!(nice.max_join_bag(), 2);
        let mut narrow = nice.clone();
        narrow.width = 1;
        assert!(matches!(branchdec_from_nice_td(&g, &narrow), Err(Error::InvalidArgument(_))));
        branchdec_from_nice_td(&g, &nice).unwrap();
    }

    #[test]
    fn full_join_bags_raise_the_declared_width() {
        // a star of three triangles around the edge {0,1}
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]], vec![(0, 1), (0, 2)]).unwrap();
        assert_eq!(td.width(), 2);
        let nice = td.make_nice(&g).unwrap();
        assert_eq!(nice.max_join_bag(), 3);
        assert_eq!(nice.width(), 3);
        branchdec_from_nice_td(&g, &nice).unwrap();
    }

    #[test]
    fn validate_catches_missing_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]).unwrap();
        assert!(td.make_nice(&g).is_err());
        assert!(tree_nice_td(&g).is_err());
    }

    #[test]
    fn format_round_trip() {
        let g = path(4);
        let td = tree_nice_td(&g).unwrap();
        let text = write_nice_td(&td);
        let back = read_nice_td(&text).unwrap();
        assert_eq!(back, td);
        assert_eq!(write_nice_td(&back), text);
        assert!(read_nice_td("td 1 1\nb 0 join : \nr 0\n").is_err());
        assert!(matches!(read_nice_td("td 1 1\nb 0 leaf\nr 0\n"), Err(Error::Parse { line: 2, .. })));
    }
}
