//! Shared inputs for the benchmarks.

use treesym::{LabeledTree, TreeShape};

/// Every standard labeled tree on `n` nodes.
pub fn standard_trees(n: usize) -> Vec<LabeledTree> {
    TreeShape::all(n).iter().flat_map(LabeledTree::all_standard).collect()
}
