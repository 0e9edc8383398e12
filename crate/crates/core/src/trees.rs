//! Plane binary trees, labeled trees and their statistics.
//!
//! Nodes are indexed by inorder position. Preorder visits the root, then the
//! right subtree, then the left subtree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{standardize, Composition, Permutation};
use crate::error::{Error, Result};
use crate::weightpoly::{Monomial, WeightPoly};

/// Canopy letter: `D` at a node with a right child, `U` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

pub fn word_to_string(w: &[Step]) -> String {
    w.iter().map(|s| if *s == Step::U { 'U' } else { 'D' }).collect()
}

pub fn parse_word(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .map(|c| match c {
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            _ => Err(Error::Parse(format!("canopy letter {c:?}"))),
        })
        .collect()
}

/// Every word of length `n` over {U, D}, U first.
pub fn all_words(n: usize) -> Vec<Vec<Step>> {
    (0u32..1 << n)
        .map(|mask| (0..n).map(|i| if mask >> (n - 1 - i) & 1 == 1 { Step::D } else { Step::U }).collect())
        .collect()
}

/// A nonempty plane binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeShape {
    root: usize,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl TreeShape {
    pub fn leaf() -> Self {
        TreeShape { root: 0, left: vec![None], right: vec![None] }
    }

    /// Join two optional subtrees under a new root.
    pub fn join(left: Option<&TreeShape>, right: Option<&TreeShape>) -> Self {
        let ln = left.map_or(0, |t| t.len());
        let rn = right.map_or(0, |t| t.len());
        let n = ln + 1 + rn;
        let mut l = vec![None; n];
        let mut r = vec![None; n];
        if let Some(t) = left {
            l[..ln].copy_from_slice(&t.left);
            r[..ln].copy_from_slice(&t.right);
            l[ln] = Some(t.root);
        }
        if let Some(t) = right {
            let off = ln + 1;
            for i in 0..rn {
                l[off + i] = t.left[i].map(|c| c + off);
                r[off + i] = t.right[i].map(|c| c + off);
            }
            r[ln] = Some(t.root + off);
        }
        TreeShape { root: ln, left: l, right: r }
    }

    /// Build from child arrays indexed by inorder position; checks the inorder.
    pub fn from_children(root: usize, left: Vec<Option<usize>>, right: Vec<Option<usize>>) -> Result<Self> {
        let t = TreeShape { root, left, right };
        let n = t.left.len();
        if n == 0 || t.right.len() != n || root >= n {
            return Err(Error::InvalidInput("malformed child arrays".into()));
        }
        let mut order = Vec::with_capacity(n);
        let mut stack = Vec::new();
        let mut cur = Some(root);
        while cur.is_some() || !stack.is_empty() {
            while let Some(c) = cur {
                if c >= n || stack.len() > n {
                    return Err(Error::InvalidInput("child index out of range or cycle".into()));
                }
                stack.push(c);
                cur = t.left[c];
            }
            let c = stack.pop().unwrap();
            order.push(c);
            if order.len() > n {
                return Err(Error::InvalidInput("cycle in child arrays".into()));
            }
            cur = t.right[c];
        }
        if order != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("child arrays are not indexed by inorder".into()));
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        self.left[v]
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        self.right[v]
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.len()];
        for v in 0..self.len() {
            if let Some(c) = self.left[v] {
                p[c] = Some(v);
            }
            if let Some(c) = self.right[v] {
                p[c] = Some(v);
            }
        }
        p
    }

    pub fn is_left_child(&self, v: usize, parents: &[Option<usize>]) -> bool {
        parents[v].is_some_and(|p| self.left[p] == Some(v))
    }

    /// Preorder: root, right subtree, left subtree.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            if let Some(l) = self.left[v] {
                stack.push(l);
            }
            if let Some(r) = self.right[v] {
                stack.push(r);
            }
        }
        out
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        self.left[v].is_none() && self.right[v].is_none()
    }

    pub fn canopy(&self) -> Vec<Step> {
        (0..self.len() - 1)
            .map(|v| if self.right[v].is_some() { Step::D } else { Step::U })
            .collect()
    }

    /// Composition recording terminal-node positions along the preorder.
    pub fn typ(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 0;
        for v in self.preorder() {
            run += 1;
            if self.is_terminal(v) {
                parts.push(run);
                run = 0;
            }
        }
        Composition::new(parts).expect("positive parts")
    }

    pub fn left_edges(&self) -> usize {
        self.left.iter().filter(|c| c.is_some()).count()
    }

    pub fn right_edges(&self) -> usize {
        self.right.iter().filter(|c| c.is_some()).count()
    }

    /// Every node with a right child also has a left child.
    pub fn is_left_leaning(&self) -> bool {
        (0..self.len()).all(|v| self.right[v].is_none() || self.left[v].is_some())
    }

    pub fn bivalent_nodes(&self) -> usize {
        (0..self.len()).filter(|&v| self.left[v].is_some() && self.right[v].is_some()).count()
    }

    /// Edges as `(earlier, later, is_left)` in inorder positions.
    pub fn edges(&self) -> Vec<(usize, usize, bool)> {
        let mut out = Vec::with_capacity(self.len() - 1);
        for v in 0..self.len() {
            if let Some(c) = self.left[v] {
                out.push((c, v, true));
            }
            if let Some(c) = self.right[v] {
                out.push((v, c, false));
            }
        }
        out
    }

    /// Inorder interval `[lo, hi]` spanned by the subtree at `v`.
    pub fn subtree_range(&self, v: usize) -> (usize, usize) {
        let mut lo = v;
        while let Some(c) = self.left[lo] {
            lo = c;
        }
        let mut hi = v;
        while let Some(c) = self.right[hi] {
            hi = c;
        }
        (lo, hi)
    }

    pub fn subtree(&self, v: usize) -> TreeShape {
        let (lo, hi) = self.subtree_range(v);
        let shift = |c: Option<usize>| c.map(|x| x - lo);
        TreeShape {
            root: v - lo,
            left: (lo..=hi).map(|i| shift(self.left[i])).collect(),
            right: (lo..=hi).map(|i| shift(self.right[i])).collect(),
        }
    }

    /// Nodes reachable from the root using only left edges or only right edges.
    pub fn roof(&self) -> Vec<bool> {
        let mut on = vec![false; self.len()];
        on[self.root] = true;
        let mut v = self.root;
        while let Some(c) = self.left[v] {
            on[c] = true;
            v = c;
        }
        v = self.root;
        while let Some(c) = self.right[v] {
            on[c] = true;
            v = c;
        }
        on
    }

    /// All shapes on `n` nodes, by left-subtree size and then recursively.
    pub fn all(n: usize) -> Vec<TreeShape> {
        if n == 0 {
            return Vec::new();
        }
        let mut by_size: Vec<Vec<TreeShape>> = vec![Vec::new(); n + 1];
        for k in 1..=n {
            let mut list = Vec::new();
            for ls in 0..k {
                let rs = k - 1 - ls;
                let lefts: Vec<Option<&TreeShape>> =
                    if ls == 0 { vec![None] } else { by_size[ls].iter().map(Some).collect() };
                let rights: Vec<Option<&TreeShape>> =
                    if rs == 0 { vec![None] } else { by_size[rs].iter().map(Some).collect() };
                for l in &lefts {
                    for r in &rights {
                        list.push(TreeShape::join(*l, *r));
                    }
                }
            }
            by_size[k] = list;
        }
        std::mem::take(&mut by_size[n])
    }

    /// Shapes on `n` nodes with the given canopy, in the same order as [`TreeShape::all`].
    pub fn with_canopy(n: usize, canopy: &[Step]) -> Result<Vec<TreeShape>> {
        if n == 0 || canopy.len() != n - 1 {
            return Err(Error::InvalidInput(format!("canopy length {} for n = {n}", canopy.len())));
        }
        Ok(shapes_with_canopy(canopy))
    }

    /// Balanced-parenthesis encoding: `(left)right` recursively, empty for no tree.
    pub fn to_parens(&self) -> String {
        fn rec(t: &TreeShape, v: Option<usize>, out: &mut String) {
            if let Some(v) = v {
                out.push('(');
                rec(t, t.left[v], out);
                out.push(')');
                rec(t, t.right[v], out);
            }
        }
        let mut s = String::with_capacity(2 * self.len());
        rec(self, Some(self.root), &mut s);
        s
    }

    pub fn from_parens(s: &str) -> Result<TreeShape> {
        fn parse(chars: &[u8], pos: &mut usize) -> Result<Option<TreeShape>> {
            if *pos >= chars.len() || chars[*pos] != b'(' {
                return Ok(None);
            }
            *pos += 1;
            let left = parse(chars, pos)?;
            if *pos >= chars.len() || chars[*pos] != b')' {
                return Err(Error::Parse("unbalanced tree string".into()));
            }
            *pos += 1;
            let right = parse(chars, pos)?;
            Ok(Some(TreeShape::join(left.as_ref(), right.as_ref())))
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let t = parse(bytes, &mut pos)?.ok_or_else(|| Error::Parse("empty tree string".into()))?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing characters in {s:?}")));
        }
        Ok(t)
    }

    /// Noncrossing partition: preorder positions `i ~ j` when `v_j` is the left child of `v_i`.
    pub fn edelman(&self) -> Vec<Vec<usize>> {
        let pre = self.preorder();
        let mut pos = vec![0; self.len()];
        for (i, &v) in pre.iter().enumerate() {
            pos[v] = i + 1;
        }
        let mut blocks = Vec::new();
        for &v in &pre {
            let parents = self.parents();
            if self.is_left_child(v, &parents) {
                continue;
            }
            let mut block = vec![pos[v]];
            let mut c = v;
            while let Some(l) = self.left[c] {
                block.push(pos[l]);
                c = l;
            }
            blocks.push(block);
        }
        blocks.sort();
        blocks
    }

    /// Inverse of [`TreeShape::edelman`]; rejects crossing partitions.
    pub fn from_edelman(n: usize, blocks: &[Vec<usize>]) -> Result<TreeShape> {
        let mut block_of = vec![usize::MAX; n + 1];
        for (b, block) in blocks.iter().enumerate() {
            for &i in block {
                if i == 0 || i > n || block_of[i] != usize::MAX {
                    return Err(Error::InvalidInput("not a set partition of [n]".into()));
                }
                block_of[i] = b;
            }
        }
        if block_of[1..].contains(&usize::MAX) {
            return Err(Error::InvalidInput("not a set partition of [n]".into()));
        }
        // Preorder-indexed children: non-minimal elements hang as left children of their
        // block predecessor, minimal ones as right children of the preceding node.
        let mut left = vec![None; n + 1];
        let mut right = vec![None; n + 1];
        for j in 2..=n {
            let block = &blocks[block_of[j]];
            let pred = block.iter().copied().filter(|&i| i < j).max();
            match pred {
                Some(i) => {
                    if left[i].is_some() {
                        return Err(Error::InvalidInput("partition is crossing".into()));
                    }
                    left[i] = Some(j);
                }
                None => right[j - 1] = Some(j),
            }
        }
        if blocks.iter().any(|b| b.contains(&1) && b.iter().any(|&x| x < 1)) {
            return Err(Error::InvalidInput("partition is crossing".into()));
        }
        // Recover inorder indices.
        let mut order = Vec::with_capacity(n);
        fn walk(v: Option<usize>, l: &[Option<usize>], r: &[Option<usize>], out: &mut Vec<usize>) {
            if let Some(v) = v {
                walk(l[v], l, r, out);
                out.push(v);
                walk(r[v], l, r, out);
            }
        }
        walk(Some(1), &left, &right, &mut order);
        if order.len() != n {
            return Err(Error::InvalidInput("partition is crossing".into()));
        }
        let mut idx = vec![0; n + 1];
        for (k, &v) in order.iter().enumerate() {
            idx[v] = k;
        }
        let conv = |c: Option<usize>| c.map(|x| idx[x]);
        let mut l2 = vec![None; n];
        let mut r2 = vec![None; n];
        for v in 1..=n {
            l2[idx[v]] = conv(left[v]);
            r2[idx[v]] = conv(right[v]);
        }
        let t = TreeShape::from_children(idx[1], l2, r2)?;
        let mut sorted: Vec<Vec<usize>> = blocks.iter().map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        }).collect();
        sorted.sort();
        if t.edelman() != sorted {
            return Err(Error::InvalidInput("partition is crossing".into()));
        }
        Ok(t)
    }

    pub fn stats(&self) -> ShapeStats {
        ShapeStats {
            canopy: self.canopy(),
            typ: self.typ(),
            left_edges: self.left_edges(),
            right_edges: self.right_edges(),
            left_leaves: self.len() - self.left_edges(),
            right_leaves: self.len() - self.right_edges(),
        }
    }
}

fn shapes_with_canopy(canopy: &[Step]) -> Vec<TreeShape> {
    let n = canopy.len() + 1;
    if n == 1 {
        return vec![TreeShape::leaf()];
    }
    let mut out = Vec::new();
    for ls in 0..n {
        let rs = n - 1 - ls;
        // Left block: can(L) followed by U for its last node, then the root letter.
        if ls > 0 && canopy[ls - 1] != Step::U {
            continue;
        }
        if rs > 0 && canopy[ls] != Step::D {
            continue;
        }
        if rs == 0 && ls == n - 1 {
            // root is the last node, contributes no letter
        }
        let lefts: Vec<Option<TreeShape>> =
            if ls == 0 { vec![None] } else { shapes_with_canopy(&canopy[..ls - 1]).into_iter().map(Some).collect() };
        let rights: Vec<Option<TreeShape>> =
            if rs == 0 { vec![None] } else { shapes_with_canopy(&canopy[ls + 1..]).into_iter().map(Some).collect() };
        for l in &lefts {
            for r in &rights {
                out.push(TreeShape::join(l.as_ref(), r.as_ref()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeStats {
    pub canopy: Vec<Step>,
    pub typ: Composition,
    pub left_edges: usize,
    pub right_edges: usize,
    /// Leaves hanging on the left in the completion.
    pub left_leaves: usize,
    pub right_leaves: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStats {
    pub shape: ShapeStats,
    pub lasc: usize,
    pub ldes: usize,
    pub rasc: usize,
    pub rdes: usize,
    pub weight: WeightPoly,
}

/// A tree with positive labels indexed by inorder position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    shape: TreeShape,
    labels: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct TreeClass {
    pub increasing: bool,
    pub lbs: bool,
    pub bernardi: bool,
    pub left_leaning: bool,
}

impl LabeledTree {
    pub fn new(shape: TreeShape, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != shape.len() || labels.contains(&0) {
            return Err(Error::InvalidInput("labels must be positive, one per node".into()));
        }
        Ok(LabeledTree { shape, labels })
    }

    pub fn shape(&self) -> &TreeShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn inorder_word(&self) -> &[u32] {
        &self.labels
    }

    pub fn preorder_word(&self) -> Vec<u32> {
        self.shape.preorder().into_iter().map(|v| self.labels[v]).collect()
    }

    pub fn is_standard(&self) -> bool {
        let mut sorted = self.labels.clone();
        sorted.sort_unstable();
        sorted.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
    }

    /// Exponents `[lasc, ldes, rasc, rdes]`.
    pub fn weight_exponents(&self) -> [u16; 4] {
        let mut e = [0u16; 4];
        for (a, b, is_left) in self.shape.edges() {
            let asc = self.labels[a] <= self.labels[b];
            let slot = match (is_left, asc) {
                (true, true) => 0,
                (true, false) => 1,
                (false, true) => 2,
                (false, false) => 3,
            };
            e[slot] += 1;
        }
        e
    }

    pub fn weight(&self) -> WeightPoly {
        let [a, b, c, d] = self.weight_exponents();
        WeightPoly::monomial(Monomial::weight(a, b, c, d), 1.into())
    }

    pub fn stats(&self) -> TreeStats {
        let [lasc, ldes, rasc, rdes] = self.weight_exponents();
        TreeStats {
            shape: self.shape.stats(),
            lasc: lasc as usize,
            ldes: ldes as usize,
            rasc: rasc as usize,
            rdes: rdes as usize,
            weight: self.weight(),
        }
    }

    /// Replace the inorder word by its standardization.
    pub fn standardize(&self) -> LabeledTree {
        let labels = standardize(&self.labels).into_iter().map(|x| x as u32).collect();
        LabeledTree { shape: self.shape.clone(), labels }
    }

    pub fn classify(&self) -> TreeClass {
        let [lasc, ldes, _, rdes] = self.weight_exponents();
        TreeClass {
            increasing: lasc == 0 && rdes == 0,
            lbs: ldes == 0 && rdes == 0,
            bernardi: self.is_bernardi(),
            left_leaning: self.shape.is_left_leaning(),
        }
    }

    /// Standard, and every internal node beats its right child, or its left child when it has no right one.
    pub fn is_bernardi(&self) -> bool {
        self.is_standard()
            && (0..self.len()).all(|v| match (self.shape.right[v], self.shape.left[v]) {
                (Some(c), _) | (None, Some(c)) => self.labels[v] > self.labels[c],
                (None, None) => true,
            })
    }

    /// Rebuild a tree of the given shape from its preorder word.
    pub fn from_preorder(shape: TreeShape, pre: &[u32]) -> Result<LabeledTree> {
        let order = shape.preorder();
        if pre.len() != order.len() {
            return Err(Error::InvalidInput("preorder word length differs from shape".into()));
        }
        let mut labels = vec![0; order.len()];
        for (&v, &l) in order.iter().zip(pre) {
            labels[v] = l;
        }
        LabeledTree::new(shape, labels)
    }

    /// Action of `σ` on Bernardi trees: relabel each terminal-delimited preorder block and re-sort it decreasingly.
    pub fn bernardi_action(&self, sigma: &Permutation) -> Result<LabeledTree> {
        if !self.is_bernardi() {
            return Err(Error::InvalidInput("tree is not a Bernardi tree".into()));
        }
        if sigma.len() != self.len() {
            return Err(Error::InvalidInput("permutation size differs from tree size".into()));
        }
        let order = self.shape.preorder();
        let mut pre: Vec<u32> = Vec::with_capacity(order.len());
        let mut block: Vec<u32> = Vec::new();
        for &v in &order {
            block.push(sigma.apply(self.labels[v] as usize) as u32);
            if self.shape.is_terminal(v) {
                block.sort_unstable_by(|a, b| b.cmp(a));
                pre.append(&mut block);
            }
        }
        LabeledTree::from_preorder(self.shape.clone(), &pre)
    }

    /// All labelings of `shape` by permutations of `[n]`.
    pub fn all_standard(shape: &TreeShape) -> Vec<LabeledTree> {
        Permutation::all(shape.len())
            .into_iter()
            .map(|p| LabeledTree {
                shape: shape.clone(),
                labels: p.word().iter().map(|&x| x as u32).collect(),
            })
            .collect()
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{} [{}]", self.shape.to_parens(), labels.join(","))
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (shape, rest) = s
            .trim()
            .split_once(' ')
            .ok_or_else(|| Error::Parse(format!("labeled tree {s:?}")))?;
        let inner = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("label list in {s:?}")))?;
        let labels = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("label {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        LabeledTree::new(TreeShape::from_parens(shape)?, labels)
    }
}

/// Count labeled trees by class flags over all standard trees on `n` nodes.
pub fn count_standard<F: Fn(&LabeledTree) -> bool + Sync>(n: usize, pred: F) -> usize {
    use rayon::prelude::*;
    TreeShape::all(n)
        .par_iter()
        .map(|s| LabeledTree::all_standard(s).iter().filter(|t| pred(t)).count())
        .sum()
}

/// Tally standard trees on `n` nodes by a key.
pub fn tally_standard<K: Ord + Send, F: Fn(&LabeledTree) -> Option<K> + Sync>(n: usize, key: F) -> BTreeMap<K, usize> {
    let mut out = BTreeMap::new();
    for s in TreeShape::all(n) {
        for t in LabeledTree::all_standard(&s) {
            if let Some(k) = key(&t) {
                *out.entry(k).or_insert(0) += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Vec<Step> {
        parse_word(s).unwrap()
    }

    /// Root with two children; right child terminal, left child terminal.
    fn cherry() -> TreeShape {
        TreeShape::join(Some(&TreeShape::leaf()), Some(&TreeShape::leaf()))
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(TreeShape::all(3).len(), 5);
        assert_eq!(TreeShape::with_canopy(3, &word("DU")).unwrap().len(), 2);
        let one = TreeShape::all(1);
        assert_eq!(one.len(), 1);
        assert!(one[0].canopy().is_empty());
        assert!(TreeShape::with_canopy(3, &word("D")).is_err());
    }

    #[test]
    fn canopy_filter_matches_canopy() {
        for n in 1..=8 {
            let mut total = 0;
            for w in all_words(n - 1) {
                let shapes = TreeShape::with_canopy(n, &w).unwrap();
                assert!(shapes.iter().all(|s| s.canopy() == w));
                total += shapes.len();
            }
            assert_eq!(num_bigint::BigInt::from(total), crate::combinatorics::catalan(n));
        }
    }

    #[test]
    fn traversals_of_a_cherry() {
        let t = cherry();
        assert_eq!(t.root(), 1);
        assert_eq!(t.preorder(), vec![1, 2, 0]);
        assert_eq!(t.typ().parts(), &[2, 1]);
        assert_eq!(word_to_string(&t.canopy()), "UD");
    }

    #[test]
    fn paren_round_trip() {
        for n in 1..=6 {
            for t in TreeShape::all(n) {
                assert_eq!(TreeShape::from_parens(&t.to_parens()).unwrap(), t);
            }
        }
        assert!(TreeShape::from_parens("(()").is_err());
        let lt: LabeledTree = "(())() [2,1,3]".parse().unwrap();
        assert_eq!(lt.to_string(), "(())() [2,1,3]");
    }

    #[test]
    fn weight_counts_edges() {
        for n in 1..=5 {
            for s in TreeShape::all(n) {
                for t in LabeledTree::all_standard(&s) {
                    let st = t.stats();
                    assert_eq!(st.lasc + st.ldes + st.rasc + st.rdes, n - 1);
                    assert_eq!(st.shape.left_leaves, n - st.lasc - st.ldes);
                }
            }
        }
    }

    #[test]
    fn standardization_preserves_weight() {
        let shapes = TreeShape::all(4);
        let mut labels = vec![1u32; 4];
        loop {
            for s in &shapes {
                let t = LabeledTree::new(s.clone(), labels.clone()).unwrap();
                assert_eq!(t.standardize().weight(), t.weight());
            }
            let mut i = 0;
            while i < 4 && labels[i] == 4 {
                labels[i] = 1;
                i += 1;
            }
            if i == 4 {
                break;
            }
            labels[i] += 1;
        }
    }

    #[test]
    fn single_node_flags() {
        let t = LabeledTree::new(TreeShape::leaf(), vec![1]).unwrap();
        assert_eq!(
            t.classify(),
            TreeClass { increasing: true, lbs: true, bernardi: true, left_leaning: true }
        );
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(count_standard(3, |t| t.is_bernardi()), 7);
        assert_eq!(count_standard(3, |t| t.classify().lbs), 7);
        assert_eq!(count_standard(3, |t| t.classify().increasing), 6);
    }

    #[test]
    fn edelman_small_cases() {
        assert_eq!(TreeShape::leaf().edelman(), vec![vec![1]]);
        let chain = TreeShape::join(Some(&TreeShape::join(Some(&TreeShape::leaf()), None)), None);
        assert_eq!(chain.edelman(), vec![vec![1, 2, 3]]);
        for n in 1..=6 {
            for t in TreeShape::all(n) {
                let p = t.edelman();
                assert_eq!(TreeShape::from_edelman(n, &p).unwrap(), t);
            }
        }
        assert!(TreeShape::from_edelman(4, &[vec![1, 3], vec![2, 4]]).is_err());
    }

    #[test]
    fn bernardi_identity_action() {
        for s in TreeShape::all(4) {
            for t in LabeledTree::all_standard(&s).into_iter().filter(|t| t.is_bernardi()) {
                assert_eq!(t.bernardi_action(&Permutation::identity(4)).unwrap(), t);
            }
        }
        let bad = LabeledTree::new(cherry(), vec![1, 2, 3]).unwrap();
        assert!(bad.bernardi_action(&Permutation::identity(3)).is_err());
    }
}
