use crate::bitset::VertexSet;
use crate::forest::ComponentPartition;

/// `(R, M, P)`: vertices of a reduced forest on the node's crossing graph,
/// a minimal vertex cover of the crossing graph minus `R`, and a partition
/// of the components of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexKey {
    pub r: VertexSet,
    pub m: VertexSet,
    pub p: ComponentPartition,
}

impl IndexKey {
    pub fn empty(n: usize) -> Self {
        IndexKey {
            r: VertexSet::new(n),
            m: VertexSet::new(n),
            p: ComponentPartition::default(),
        }
    }
}

/// Where a value came from: two child entries (and the left child's share
/// of the size), or a leaf whose vertex is in the forest iff `ia == 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Back {
    pub a: u32,
    pub b: u32,
    pub ia: u32,
}

pub(crate) const LEAF: u32 = u32::MAX;

impl Back {
    pub fn leaf(in_forest: bool) -> Self {
        Back {
            a: LEAF,
            b: LEAF,
            ia: in_forest as u32,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.a == LEAF
    }
}

/// The table of one node, keys in increasing order.
#[derive(Clone, Debug)]
pub(crate) struct NodeTable<V> {
    pub keys: Vec<IndexKey>,
    pub vals: Vec<V>,
}

impl<V> NodeTable<V> {
    pub fn find(&self, k: &IndexKey) -> Option<usize> {
        self.keys.binary_search(k).ok()
    }
}

/// How table values are built and combined.
pub(crate) trait Objective: Sync {
    type Val: Clone + Send + Sync;
    type Pair;

    /// Value of a leaf entry whose achievable sizes are `sizes` (a subset
    /// of `{0, 1}`).
    fn leaf(&self, v: usize, sizes: &[usize]) -> Self::Val;
    fn pair(&self, a: &Self::Val, b: &Self::Val) -> Self::Pair;
    fn add(&self, target: &mut Option<Self::Val>, pair: &Self::Pair, a: &Self::Val, ai: u32, b: &Self::Val, bi: u32);
    /// Merges `other` into `target`, keeping `target`'s witnesses on ties.
    fn absorb(&self, target: &mut Self::Val, other: Self::Val);
}

/// Achievable forest sizes with one witness per size.
#[derive(Clone, Debug)]
pub(crate) struct Sizes {
    pub bits: Vec<u64>,
    pub back: Vec<Back>,
}

fn get(bits: &[u64], i: usize) -> bool {
    bits.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
}

fn set(bits: &mut Vec<u64>, i: usize) {
    if bits.len() <= i / 64 {
        bits.resize(i / 64 + 1, 0);
    }
    bits[i / 64] |= 1 << (i % 64);
}

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &x)| {
        (0..64).filter(move |b| x >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

impl Sizes {
    pub fn contains(&self, i: usize) -> bool {
        get(&self.bits, i)
    }

    pub fn sizes(&self) -> Vec<usize> {
        ones(&self.bits).collect()
    }

    pub fn max(&self) -> Option<usize> {
        self.sizes().last().copied()
    }

    fn insert(&mut self, i: usize, back: Back) -> bool {
        if self.contains(i) {
            return false;
        }
        set(&mut self.bits, i);
        if self.back.len() <= i {
            self.back.resize(i + 1, Back::leaf(false));
        }
        self.back[i] = back;
        true
    }
}

pub(crate) struct Cardinality;

impl Objective for Cardinality {
    type Val = Sizes;
    type Pair = Vec<u64>;

    fn leaf(&self, _v: usize, sizes: &[usize]) -> Sizes {
        let mut s = Sizes {
            bits: Vec::new(),
            back: Vec::new(),
        };
        for &i in sizes {
            s.insert(i, Back::leaf(i == 1));
        }
        s
    }

    fn pair(&self, a: &Sizes, b: &Sizes) -> Vec<u64> {
        let mut out = Vec::new();
        for ia in ones(&a.bits) {
            for ib in ones(&b.bits) {
                set(&mut out, ia + ib);
            }
        }
        out
    }

    fn add(&self, target: &mut Option<Sizes>, pair: &Vec<u64>, a: &Sizes, ai: u32, b: &Sizes, bi: u32) {
        let t = target.get_or_insert_with(|| Sizes {
            bits: Vec::new(),
            back: Vec::new(),
        });
        for s in ones(pair) {
            if t.contains(s) {
                continue;
            }
            let ia = ones(&a.bits)
                .find(|&ia| ia <= s && b.contains(s - ia))
                .expect("sum is achievable");
            t.insert(s, Back { a: ai, b: bi, ia: ia as u32 });
        }
    }

    fn absorb(&self, target: &mut Sizes, other: Sizes) {
        for s in ones(&other.bits) {
            target.insert(s, other.back[s]);
        }
    }
}

/// Best forest weight with its witness.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Best {
    pub w: f64,
    pub back: Back,
}

pub(crate) struct MaxWeight<'a> {
    pub weights: &'a [f64],
}

impl Objective for MaxWeight<'_> {
    type Val = Best;
    type Pair = f64;

    fn leaf(&self, v: usize, sizes: &[usize]) -> Best {
        let wv = self.weights.get(v).copied().unwrap_or(0.0);
        let can_in = sizes.contains(&1);
        let can_out = sizes.contains(&0);
        if can_in && (wv > 0.0 || !can_out) {
            Best { w: wv, back: Back::leaf(true) }
        } else {
            Best { w: 0.0, back: Back::leaf(false) }
        }
    }

    fn pair(&self, a: &Best, b: &Best) -> f64 {
        a.w + b.w
    }

    fn add(&self, target: &mut Option<Best>, pair: &f64, _a: &Best, ai: u32, _b: &Best, bi: u32) {
        if target.as_ref().is_none_or(|t| *pair > t.w) {
            *target = Some(Best {
                w: *pair,
                back: Back { a: ai, b: bi, ia: 0 },
            });
        }
    }

    fn absorb(&self, target: &mut Best, other: Best) {
        if other.w > target.w {
            *target = other;
        }
    }
}
