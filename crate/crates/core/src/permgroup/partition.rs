use crate::error::{Error, Result};

use super::Permutation;

/// A partition of `{0, .., n-1}` into nonempty blocks. Blocks are kept sorted
/// internally and ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::InvalidPartition(format!("point {x} out of range")));
                }
                if block_of[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("point {x} in two blocks")));
                }
                block_of[x] = i;
            }
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("point {x} not covered")));
        }
        Ok(Self { blocks, block_of })
    }

    pub fn singletons(n: usize) -> Self {
        Self { blocks: (0..n).map(|x| vec![x]).collect(), block_of: (0..n).collect() }
    }

    pub fn whole(n: usize) -> Self {
        if n == 0 {
            return Self { blocks: vec![], block_of: vec![] };
        }
        Self { blocks: vec![(0..n).collect()], block_of: vec![0; n] }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.block_of[point]
    }

    /// Whether `g` maps every block onto a block.
    pub fn is_invariant_under(&self, g: &Permutation) -> bool {
        self.induced(g).is_ok()
    }

    /// The permutation `g^Σ` induced on the blocks.
    pub fn induced(&self, g: &Permutation) -> Result<Permutation> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: g.degree(), right: self.degree() });
        }
        let mut images = Vec::with_capacity(self.blocks.len());
        for block in &self.blocks {
            let target = self.block_of[g.apply(block[0])];
            if self.blocks[target].len() != block.len() || block.iter().any(|&x| self.block_of[g.apply(x)] != target) {
                return Err(Error::NotInvariant);
            }
            images.push(target);
        }
        Permutation::from_images(images).map_err(|_| Error::NotInvariant)
    }
}
