use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::bitset::VertexSet;
use crate::branchdec::{BranchDecomposition, RawTree};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph};

/// One operation of a clique-width expression. Children are node ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwdNode {
    /// `v(label,name)`: a new vertex with the given label.
    Create { label: usize, vertex: usize },
    /// `u(a,b)`: disjoint union.
    Union(usize, usize),
    /// `j(i,j,e)`: all edges between labels `i` and `j`.
    Join(usize, usize, usize),
    /// `r(i,j,e)`: label `i` becomes `j`.
    Rename(usize, usize, usize),
}

/// A parsed expression. Vertices are numbered in order of appearance.
#[derive(Clone, Debug, PartialEq)]
pub struct CliqueWidthExpression {
    nodes: Vec<CwdNode>,
    root: usize,
    names: Vec<String>,
}

impl CliqueWidthExpression {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn nodes(&self) -> &[CwdNode] {
        &self.nodes
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The largest label used.
    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| match *n {
                CwdNode::Create { label, .. } => label,
                CwdNode::Union(..) => 0,
                CwdNode::Join(i, j, _) | CwdNode::Rename(i, j, _) => i.max(j),
            })
            .max()
            .unwrap_or(0)
    }

    fn children(&self, t: usize) -> Vec<usize> {
        match self.nodes[t] {
            CwdNode::Create { .. } => vec![],
            CwdNode::Union(a, b) => vec![a, b],
            CwdNode::Join(_, _, c) | CwdNode::Rename(_, _, c) => vec![c],
        }
    }

    fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, done)) = stack.pop() {
            if done {
                out.push(t);
            } else {
                stack.push((t, true));
                for c in self.children(t).into_iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Vertex labels of every subexpression: `labels[t]` lists
    /// `(vertex, label)` for the vertices created below `t`.
    fn labelled(&self) -> Vec<Vec<(usize, usize)>> {
        let mut labels: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.nodes.len()];
        for t in self.postorder() {
            labels[t] = match self.nodes[t] {
                CwdNode::Create { label, vertex } => vec![(vertex, label)],
                CwdNode::Union(a, b) => {
                    let mut l = labels[a].clone();
                    l.extend_from_slice(&labels[b]);
                    l
                }
                CwdNode::Join(_, _, c) => labels[c].clone(),
                CwdNode::Rename(i, j, c) => labels[c]
                    .iter()
                    .map(|&(v, l)| (v, if l == i { j } else { l }))
                    .collect(),
            };
        }
        labels
    }

    /// The graph the expression defines.
    pub fn evaluate(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        let labels = self.labelled();
        for node in &self.nodes {
            if let CwdNode::Join(i, j, c) = *node {
                for &(u, lu) in &labels[c] {
                    for &(v, lv) in &labels[c] {
                        if lu == i && lv == j {
                            g.add_edge(u, v).expect("labels are distinct");
                        }
                    }
                }
            }
        }
        g
    }

    /// Checks that at every node, vertices sharing a label have the same
    /// neighbours in `g` outside the node's vertex set. Returns the largest
    /// number of label classes seen.
    pub fn check_label_classes(&self, g: &Graph) -> Result<usize> {
        let mut most = 0;
        for (t, lab) in self.labelled().iter().enumerate() {
            let inside = VertexSet::from_vertices(g.n(), lab.iter().map(|&(v, _)| v));
            let mut class: HashMap<usize, VertexSet> = HashMap::new();
            for &(v, l) in lab {
                let out = g.neighbors(v).difference(&inside);
                if let Some(prev) = class.get(&l) {
                    if *prev != out {
                        return Err(Error::InvalidArgument(format!(
                            "at expression node {t}, label {l} vertices differ outside"
                        )));
                    }
                } else {
                    class.insert(l, out);
                }
            }
            most = most.max(class.len());
        }
        Ok(most)
    }
}

/// The syntactic tree as a branch decomposition: creations become leaves,
/// the unary operations above the first union are dropped, that union is
/// the root and unary nodes below it are smoothed.
pub fn branchdec_from_cwd(expr: &CliqueWidthExpression) -> Result<(Graph, BranchDecomposition)> {
    let g = expr.evaluate();
    let mut top = expr.root;
    while let CwdNode::Join(_, _, c) | CwdNode::Rename(_, _, c) = expr.nodes[top] {
        top = c;
    }
    let mut raw = RawTree::new();
    for node in &expr.nodes {
        match *node {
            CwdNode::Create { vertex, .. } => raw.add_node(Some(vertex)),
            _ => raw.add_node(None),
        };
    }
    let mut stack = vec![top];
    while let Some(t) = stack.pop() {
        for c in expr.children(t) {
            raw.add_edge(t, c);
            stack.push(c);
        }
    }
    // nodes above `top` have no edges left and are pruned
    let root = raw.settle_root(top);
    let d = raw.into_decomposition(g.n(), root)?;
    Ok((g, d))
}

impl fmt::Display for CliqueWidthExpression {
    /// Compact form without whitespace.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Step {
            Open(usize),
            Text(&'static str),
        }
        let mut stack = vec![Step::Open(self.root)];
        while let Some(s) = stack.pop() {
            match s {
                Step::Text(x) => f.write_str(x)?,
                Step::Open(t) => match self.nodes[t] {
                    CwdNode::Create { label, vertex } => {
                        write!(f, "v({label},{})", self.names[vertex])?
                    }
                    CwdNode::Union(a, b) => {
                        f.write_str("u(")?;
                        stack.extend([Step::Text(")"), Step::Open(b), Step::Text(","), Step::Open(a)]);
                    }
                    CwdNode::Join(i, j, c) => {
                        write!(f, "j({i},{j},")?;
                        stack.extend([Step::Text(")"), Step::Open(c)]);
                    }
                    CwdNode::Rename(i, j, c) => {
                        write!(f, "r({i},{j},")?;
                        stack.extend([Step::Text(")"), Step::Open(c)]);
                    }
                },
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nodes: Vec<CwdNode>,
    names: Vec<String>,
    seen: HashMap<String, usize>,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::ExprParse {
        pos,
        msg: msg.into(),
    })
}

impl Parser<'_> {
    fn skip(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            err(self.pos, format!("expected `{}`", c as char))
        }
    }

    fn word(&mut self) -> (usize, &str) {
        self.skip();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        (start, std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn label(&mut self) -> Result<usize> {
        let (start, w) = self.word();
        match w.parse::<usize>() {
            Ok(l) if l >= 1 => Ok(l),
            _ => err(start, format!("expected a label >= 1, got {w:?}")),
        }
    }

    fn push(&mut self, n: CwdNode) -> usize {
        self.nodes.push(n);
        self.nodes.len() - 1
    }

    fn expr(&mut self, depth: usize) -> Result<usize> {
        if depth > 100_000 {
            return err(self.pos, "expression nested too deeply");
        }
        let (start, op) = self.word();
        let op = op.to_string();
        self.expect(b'(')?;
        let node = match op.as_str() {
            "v" => {
                let label = self.label()?;
                self.expect(b',')?;
                let (at, name) = self.word();
                if name.is_empty() {
                    return err(at, "expected a vertex name");
                }
                let name = name.to_string();
                if self.seen.contains_key(&name) {
                    return err(at, format!("vertex {name:?} created twice"));
                }
                let vertex = self.names.len();
                self.seen.insert(name.clone(), vertex);
                self.names.push(name);
                CwdNode::Create { label, vertex }
            }
            "u" => {
                let a = self.expr(depth + 1)?;
                self.expect(b',')?;
                let b = self.expr(depth + 1)?;
                CwdNode::Union(a, b)
            }
            "j" | "r" => {
                let i = self.label()?;
                self.expect(b',')?;
                let at = self.pos;
                let j = self.label()?;
                if op == "j" && i == j {
                    return err(at, "join needs two different labels");
                }
                self.expect(b',')?;
                let c = self.expr(depth + 1)?;
                if op == "j" {
                    CwdNode::Join(i, j, c)
                } else {
                    CwdNode::Rename(i, j, c)
                }
            }
            _ => return err(start, format!("unknown operation {op:?}")),
        };
        self.expect(b')')?;
        Ok(self.push(node))
    }
}

impl FromStr for CliqueWidthExpression {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser {
            s: text.as_bytes(),
            pos: 0,
            nodes: Vec::new(),
            names: Vec::new(),
            seen: HashMap::new(),
        };
        let root = p.expr(0)?;
        p.skip();
        if p.pos != p.s.len() {
            return err(p.pos, "trailing input after expression");
        }
        Ok(CliqueWidthExpression {
            nodes: p.nodes,
            root,
            names: p.names,
        })
    }
}

/// A random expression on `n >= 1` vertices named `v0, v1, ...` using
/// labels `1..=w`. Unions split at a random point; each union is followed
/// by a few random joins and renames.
pub fn random_expression<R: Rng>(n: usize, w: usize, rng: &mut R) -> CliqueWidthExpression {
    assert!(n >= 1 && w >= 1);
    fn go<R: Rng>(lo: usize, cnt: usize, w: usize, rng: &mut R, e: &mut CliqueWidthExpression) -> usize {
        if cnt == 1 {
            e.names.push(format!("v{lo}"));
            e.nodes.push(CwdNode::Create {
                label: rng.gen_range(1..=w),
                vertex: lo,
            });
            return e.nodes.len() - 1;
        }
        let k = rng.gen_range(1..cnt);
        let a = go(lo, k, w, rng, e);
        let b = go(lo + k, cnt - k, w, rng, e);
        e.nodes.push(CwdNode::Union(a, b));
        let mut top = e.nodes.len() - 1;
        if w >= 2 {
            for _ in 0..rng.gen_range(0..=2) {
                let i = rng.gen_range(1..=w);
                let mut j = rng.gen_range(1..w);
                if j >= i {
                    j += 1;
                }
                e.nodes.push(if rng.gen_bool(0.7) {
                    CwdNode::Join(i, j, top)
                } else {
                    CwdNode::Rename(i, j, top)
                });
                top = e.nodes.len() - 1;
            }
        }
        top
    }
    let mut e = CliqueWidthExpression {
        nodes: Vec::new(),
        root: 0,
        names: Vec::new(),
    };
    e.root = go(0, n, w, rng, &mut e);
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branchdec::mim_width;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    // v1 - v2 - v3 - v4 - v5, the last vertex always carries label 2
    const P5: &str = "r(3,2,r(2,1,j(2,3,u(r(3,2,r(2,1,j(2,3,u(r(3,2,r(2,1,j(2,3,u(r(3,2,r(2,1,\
        j(2,3,u(v(2,a),v(3,b))))),v(3,c))))),v(3,d))))),v(3,e)))))";

    #[test]
    fn single_edge() {
        let e: CliqueWidthExpression = " j ( 1 , 2 , u( v(1,a), v(2, b) ) ) ".parse().unwrap();
        let (g, d) = branchdec_from_cwd(&e).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(d.num_nodes(), 3);
        assert_eq!(mim_width(&g, &d, false).width, 1);
        assert_eq!(e.to_string(), "j(1,2,u(v(1,a),v(2,b)))");
    }

    #[test]
    fn path_on_five_vertices() {
        let e: CliqueWidthExpression = P5.parse().unwrap();
        assert_eq!(e.width(), 3);
        let (g, d) = branchdec_from_cwd(&e).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(e.check_label_classes(&g).unwrap() <= 3);
        assert!(mim_width(&g.power(2), &d, false).width <= 3);
    }

    #[test]
    fn cograph_two_expression() {
        // complete bipartite K_{2,2} plus a universal vertex
        let e: CliqueWidthExpression =
            "j(1,2,u(v(1,x),r(1,2,j(1,2,u(u(v(1,a),v(1,b)),u(v(2,c),v(2,d)))))))".parse().unwrap();
        let (g, d) = branchdec_from_cwd(&e).unwrap();
        assert_eq!(g.m(), 8);
        assert!(mim_width(&g, &d, false).width <= 2);
    }

    #[test]
    fn parse_errors_have_positions() {
        let cases = [
            ("u(v(1,a),v(1,a))", 13),
            ("j(1,1,v(1,a))", 4),
            ("v(0,a)", 2),
            ("x(1,a)", 0),
            ("v(1,a) v(1,b)", 7),
            ("u(v(1,a)", 8),
        ];
        for (text, pos) in cases {
            match text.parse::<CliqueWidthExpression>() {
                Err(Error::ExprParse { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn random_expressions_round_trip_and_keep_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(1..12);
            let w = rng.gen_range(1..4);
            let e = random_expression(n, w, &mut rng);
            let back: CliqueWidthExpression = e.to_string().parse().unwrap();
            assert_eq!(back.evaluate(), e.evaluate());
            let (g, d) = branchdec_from_cwd(&e).unwrap();
            assert!(e.check_label_classes(&g).unwrap() <= w);
            assert_eq!(d.vertex_count(), n);
        }
    }
}
