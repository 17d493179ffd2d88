/// A partition of the components `0..k` of a reduced forest, stored as a
/// restricted growth string: component `i` lies in block `rgs[i]`, block
/// ids appear in order of their first component. Components themselves
/// are ordered by smallest vertex id, so the representation is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ComponentPartition {
    rgs: Vec<u8>,
}

impl ComponentPartition {
    /// Every component in its own block.
    pub fn discrete(k: usize) -> Self {
        ComponentPartition {
            rgs: (0..k).map(|i| i as u8).collect(),
        }
    }

    /// Canonicalises an arbitrary block labelling.
    pub fn from_labels<T: PartialEq + Copy>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i as u8,
                None => {
                    seen.push(*l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        ComponentPartition { rgs }
    }

    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut label = vec![usize::MAX; k];
        for (b, block) in blocks.iter().enumerate() {
            for &c in block {
                if c >= k || label[c] != usize::MAX {
                    return None;
                }
                label[c] = b;
            }
        }
        if label.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_labels(&label))
    }

    pub fn num_components(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    pub fn block_of(&self, component: usize) -> usize {
        self.rgs[component] as usize
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.rgs[a] == self.rgs[b]
    }

    /// Blocks as sorted component lists, ordered by smallest component.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (c, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(c);
        }
        out
    }

    /// All partitions of `k` components in lexicographic RGS order.
    pub fn all(k: usize) -> AllPartitions {
        AllPartitions {
            cur: if k == 0 { Some(Vec::new()) } else { Some(vec![0; k]) },
        }
    }
}

pub struct AllPartitions {
    cur: Option<Vec<u8>>,
}

impl Iterator for AllPartitions {
    type Item = ComponentPartition;

    fn next(&mut self) -> Option<ComponentPartition> {
        let cur = self.cur.take()?;
        let out = ComponentPartition { rgs: cur.clone() };
        // advance: rightmost position that can grow beyond its prefix max
        let mut next = cur;
        let k = next.len();
        let mut prefix_max = vec![0u8; k];
        for i in 1..k {
            prefix_max[i] = prefix_max[i - 1].max(next[i - 1]);
        }
        let mut i = k;
        while i > 1 {
            i -= 1;
            if next[i] <= prefix_max[i] {
                next[i] += 1;
                for x in next.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Bell numbers `B_0..=B_k` as exact integers.
pub fn bell_numbers(k: usize) -> Vec<u128> {
    let mut row = vec![1u128];
    let mut out = vec![1u128];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for x in &row {
            let y = *next.last().unwrap() + x;
            next.push(y);
        }
        out.push(next[0]);
        row = next;
    }
    out.truncate(k + 1);
    out
}
