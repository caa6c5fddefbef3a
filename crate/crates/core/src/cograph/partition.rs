//! Canonical partitions of vertex subsets into disjoint blocks, with the
//! two combination operators of the cotree dynamic program.
//!
//! A partition stores pairwise-disjoint blocks; a block may be the empty
//! set (a component with no attachment to the tracked vertex set). Blocks
//! live in canonical order: nonempty blocks ascending by minimum element,
//! the empty block last. Set semantics apply, so duplicate empty blocks
//! collapse into one.

/// Partition of a subset of tracked vertices into disjoint blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BlockPartition {
    blocks: Vec<Vec<u32>>,
}

impl BlockPartition {
    /// The partition with no blocks at all.
    pub fn empty() -> Self {
        BlockPartition { blocks: Vec::new() }
    }

    /// Partition consisting of a single block (which may be empty).
    pub fn singleton(block: impl IntoIterator<Item = u32>) -> Self {
        Self::from_blocks([block.into_iter().collect()])
    }

    pub fn from_blocks(blocks: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut out: Vec<Vec<u32>> = Vec::new();
        let mut have_empty = false;
        for mut b in blocks {
            b.sort_unstable();
            b.dedup();
            if b.is_empty() {
                have_empty = true;
            } else {
                out.push(b);
            }
        }
        out.sort_unstable_by_key(|b| b[0]);
        debug_assert!(
            {
                let mut all: Vec<u32> = out.iter().flatten().copied().collect();
                let len = all.len();
                all.sort_unstable();
                all.dedup();
                all.len() == len
            },
            "blocks must be pairwise disjoint"
        );
        if have_empty {
            out.push(Vec::new());
        }
        BlockPartition { blocks: out }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// True for the partition with no blocks (distinct from {∅}).
    pub fn has_no_blocks(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Union-style combination: blocks sharing an element unite, the rest
    /// pass through. Models merging the connected components of two
    /// subgraphs over the same tracked set.
    pub fn pmerge(&self, other: &BlockPartition) -> BlockPartition {
        let all: Vec<&Vec<u32>> = self.blocks.iter().chain(other.blocks.iter()).collect();
        let mut parent: Vec<usize> = (0..all.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut home: std::collections::BTreeMap<u32, usize> = std::collections::BTreeMap::new();
        for (i, block) in all.iter().enumerate() {
            for &x in block.iter() {
                match home.get(&x) {
                    Some(&j) => {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        if ri != rj {
                            parent[ri] = rj;
                        }
                    }
                    None => {
                        home.insert(x, i);
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<u32>> =
            std::collections::BTreeMap::new();
        for (i, block) in all.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().extend(block.iter().copied());
        }
        Self::from_blocks(groups.into_values())
    }

    /// Join-style combination: identity when one side has no blocks,
    /// otherwise everything collapses into a single block.
    pub fn pjoin(&self, other: &BlockPartition) -> BlockPartition {
        if other.has_no_blocks() {
            return self.clone();
        }
        if self.has_no_blocks() {
            return other.clone();
        }
        let union: Vec<u32> = self
            .blocks
            .iter()
            .chain(other.blocks.iter())
            .flatten()
            .copied()
            .collect();
        Self::from_blocks([union])
    }

    /// Adds `elem` as a fresh block united with every block containing one
    /// of `links`. Used when a newly colored vertex connects to already
    /// tracked vertices.
    pub fn insert_linked(&self, elem: u32, links: &[u32]) -> BlockPartition {
        let mut bridge = vec![elem];
        bridge.extend_from_slice(links);
        self.pmerge(&BlockPartition::from_blocks([bridge]))
    }

    /// Removes `elem` from its block. Returns the new partition and whether
    /// the block vanished; a vanished block means its component lost its
    /// last tracked vertex. The emptied block is dropped, not kept as ∅.
    pub fn remove_elem(&self, elem: u32) -> (BlockPartition, bool) {
        let mut blocks = self.blocks.clone();
        let mut emptied = false;
        for b in &mut blocks {
            if let Ok(pos) = b.binary_search(&elem) {
                b.remove(pos);
                emptied = b.is_empty();
                break;
            }
        }
        blocks.retain(|b| !b.is_empty());
        (BlockPartition { blocks }, emptied)
    }

    pub fn contains(&self, elem: u32) -> bool {
        self.blocks.iter().any(|b| b.binary_search(&elem).is_ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bp(blocks: &[&[u32]]) -> BlockPartition {
        BlockPartition::from_blocks(blocks.iter().map(|b| b.to_vec()))
    }

    #[test]
    fn pmerge_unites_overlapping_blocks() {
        let a = bp(&[&[1], &[2]]);
        let b = bp(&[&[1, 3]]);
        assert_eq!(a.pmerge(&b), bp(&[&[1, 3], &[2]]));
    }

    #[test]
    fn pmerge_identity_and_empty_blocks() {
        let a = bp(&[&[1], &[2]]);
        assert_eq!(a.pmerge(&BlockPartition::empty()), a);
        let e = bp(&[&[]]);
        assert_eq!(e.pmerge(&e), e, "duplicate empty blocks collapse");
        assert_eq!(e.blocks().len(), 1);
    }

    #[test]
    fn pjoin_cases() {
        let a = bp(&[&[1]]);
        assert_eq!(a.pjoin(&BlockPartition::empty()), a);
        assert_eq!(BlockPartition::empty().pjoin(&a), a);
        assert_eq!(bp(&[&[1]]).pjoin(&bp(&[&[2]])), bp(&[&[1, 2]]));
        assert_eq!(bp(&[&[1], &[2]]).pjoin(&bp(&[&[]])), bp(&[&[1, 2]]));
    }

    #[test]
    fn insert_and_remove() {
        let a = bp(&[&[1, 2], &[4]]);
        let b = a.insert_linked(3, &[4]);
        assert_eq!(b, bp(&[&[1, 2], &[3, 4]]));
        let (c, emptied) = b.remove_elem(3);
        assert!(!emptied);
        assert_eq!(c, bp(&[&[1, 2], &[4]]));
        let (d, emptied) = bp(&[&[5]]).remove_elem(5);
        assert!(emptied);
        assert!(d.has_no_blocks());
    }

    // Random disjoint block partitions over elements 0..6.
    fn arbitrary_partition() -> impl Strategy<Value = BlockPartition> {
        proptest::collection::vec(0u8..4, 6).prop_map(|assignment| {
            // group id 0 means "not present"; ids 1..=3 are blocks
            let mut blocks: std::collections::BTreeMap<u8, Vec<u32>> =
                std::collections::BTreeMap::new();
            for (elem, &g) in assignment.iter().enumerate() {
                if g > 0 {
                    blocks.entry(g).or_default().push(elem as u32);
                }
            }
            BlockPartition::from_blocks(blocks.into_values())
        })
    }

    proptest! {
        #[test]
        fn pmerge_commutative(a in arbitrary_partition(), b in arbitrary_partition()) {
            prop_assert_eq!(a.pmerge(&b), b.pmerge(&a));
        }

        #[test]
        fn pmerge_associative(
            a in arbitrary_partition(),
            b in arbitrary_partition(),
            c in arbitrary_partition(),
        ) {
            prop_assert_eq!(a.pmerge(&b).pmerge(&c), a.pmerge(&b.pmerge(&c)));
        }

        #[test]
        fn pjoin_commutative(a in arbitrary_partition(), b in arbitrary_partition()) {
            prop_assert_eq!(a.pjoin(&b), b.pjoin(&a));
        }

        #[test]
        fn pjoin_nonempty_orders_agree(
            a in arbitrary_partition(),
            b in arbitrary_partition(),
            c in arbitrary_partition(),
        ) {
            // Over nonempty partitions, any association collapses to the
            // single all-union block.
            prop_assume!(!a.has_no_blocks() && !b.has_no_blocks() && !c.has_no_blocks());
            prop_assert_eq!(a.pjoin(&b).pjoin(&c), a.pjoin(&b.pjoin(&c)));
            let all: Vec<u32> = a
                .blocks()
                .iter()
                .chain(b.blocks())
                .chain(c.blocks())
                .flatten()
                .copied()
                .collect();
            prop_assert_eq!(a.pjoin(&b).pjoin(&c), BlockPartition::from_blocks([all]));
        }
    }
}
