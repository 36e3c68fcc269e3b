use super::InstanceError;
use crate::graph::Graph;

/// Partitioned Subgraph Isomorphism instance.
///
/// The host vertex set is partitioned into blocks `V_x`, one per pattern
/// vertex, all of size `n`. Host edges only join blocks whose pattern
/// vertices are adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PsiInstance {
    pattern: Graph,
    host: Graph,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl PsiInstance {
    pub fn new(pattern: Graph, host: Graph, blocks: Vec<Vec<usize>>) -> Result<Self, InstanceError> {
        if pattern.vertex_count() == 0 {
            return Err(InstanceError::NoVertices);
        }
        if blocks.len() != pattern.vertex_count() {
            return Err(InstanceError::BadBlockIndex(blocks.len().min(pattern.vertex_count())));
        }
        let n = blocks[0].len();
        if n == 0 {
            return Err(InstanceError::EmptyBlocks);
        }
        let mut block_of = vec![usize::MAX; host.vertex_count()];
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for (x, mut block) in blocks.into_iter().enumerate() {
            if block.len() != n {
                return Err(InstanceError::BlockSize { x, got: block.len(), expected: n });
            }
            block.sort_unstable();
            for &v in &block {
                if v >= host.vertex_count() || block_of[v] != usize::MAX {
                    return Err(InstanceError::BlockCover(v));
                }
                block_of[v] = x;
            }
            sorted_blocks.push(block);
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(InstanceError::BlockCover(v));
        }
        for &(u, v) in host.edges() {
            let (x, y) = (block_of[u], block_of[v]);
            if x == y || !pattern.has_edge(x, y) {
                return Err(InstanceError::StrayHostEdge(u, v));
            }
        }
        Ok(Self { pattern, host, blocks: sorted_blocks, block_of })
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Block `V_x` in ascending vertex order.
    pub fn block(&self, x: usize) -> &[usize] {
        &self.blocks[x]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The pattern vertex whose block contains host vertex `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    /// Common block size `n`.
    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    /// Checks a selection of one host vertex per pattern vertex.
    pub fn is_witness(&self, selection: &[usize]) -> bool {
        selection.len() == self.blocks.len()
            && selection.iter().enumerate().all(|(x, &v)| v < self.block_of.len() && self.block_of[v] == x)
            && self
                .pattern
                .edges()
                .iter()
                .all(|&(x, y)| self.host.has_edge(selection[x], selection[y]))
    }
}
