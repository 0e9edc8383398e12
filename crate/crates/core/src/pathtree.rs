//! Path-tree sequences, the attic-node classification of a labeled tree, the
//! bijection `phi_forward` with its push-glide inverse `psi_inverse`, and the
//! map `theta_map` onto augmented nested partitions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{next_permutation, standardize};
use crate::error::{Error, Result};
use crate::nested::NestedPartition;
use crate::trees::{parse_word, word_to_string, LabeledTree, Step, TreeShape};
use crate::weightpoly::{Monomial, WeightPoly};

/// Exponent slots `[lb, l, rb, r]`.
type Exps = [u16; 4];

fn step_slot(step: Step, a: u32, b: u32) -> usize {
    match (step, a <= b) {
        (Step::U, true) => 0,
        (Step::U, false) => 1,
        (Step::D, true) => 2,
        (Step::D, false) => 3,
    }
}

fn exps_poly(e: Exps) -> WeightPoly {
    WeightPoly::monomial(Monomial::weight(e[0], e[1], e[2], e[3]), 1.into())
}

/// A lattice path on `{U, D}` whose nodes carry positive labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledLatticePath {
    steps: Vec<Step>,
    labels: Vec<u32>,
}

impl LabeledLatticePath {
    pub fn new(steps: Vec<Step>, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != steps.len() + 1 || labels.contains(&0) {
            return Err(Error::InvalidInput("a path needs one positive label more than it has steps".into()));
        }
        Ok(LabeledLatticePath { steps, labels })
    }

    pub fn single(label: u32) -> Result<Self> {
        Self::new(Vec::new(), vec![label])
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start(&self) -> u32 {
        self.labels[0]
    }

    pub fn end(&self) -> u32 {
        *self.labels.last().unwrap()
    }

    pub fn weight_exponents(&self) -> Exps {
        let mut e = [0; 4];
        for (p, &s) in self.steps.iter().enumerate() {
            e[step_slot(s, self.labels[p], self.labels[p + 1])] += 1;
        }
        e
    }

    pub fn weight(&self) -> WeightPoly {
        exps_poly(self.weight_exponents())
    }
}

impl fmt::Display for LabeledLatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}:{}]", word_to_string(&self.steps), labels.join(","))
    }
}

impl FromStr for LabeledLatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("path {s:?}")))?;
        let (steps, labels) = inner.split_once(':').ok_or_else(|| Error::Parse(format!("path {s:?}")))?;
        let labels = labels
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("label {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parse_word(steps.trim())?, labels)
    }
}

/// An alternation `(ν⁰, T₁, ν¹, …, T_m, ν^m)` of labeled paths and trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathTreeSequence {
    paths: Vec<LabeledLatticePath>,
    trees: Vec<LabeledTree>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtsAttributes {
    pub weight: WeightPoly,
    pub exponents: Exps,
    pub inorder: Vec<u32>,
    pub canopy: Vec<Step>,
}

impl PathTreeSequence {
    pub fn new(paths: Vec<LabeledLatticePath>, trees: Vec<LabeledTree>) -> Result<Self> {
        if paths.len() != trees.len() + 1 {
            return Err(Error::InvalidInput("a path-tree sequence must alternate and start and end with a path".into()));
        }
        Ok(PathTreeSequence { paths, trees })
    }

    pub fn paths(&self) -> &[LabeledLatticePath] {
        &self.paths
    }

    pub fn trees(&self) -> &[LabeledTree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.paths.iter().map(|p| p.len()).sum::<usize>() + self.trees.iter().map(|t| t.len()).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `λ̄ρ̄` when the path before tree `h` ends weakly below where the next starts, else `λρ`.
    fn junction(&self, h: usize) -> Exps {
        if self.paths[h].end() <= self.paths[h + 1].start() {
            [1, 0, 1, 0]
        } else {
            [0, 1, 0, 1]
        }
    }

    pub fn weight_exponents(&self) -> Exps {
        let mut e = self.paths[0].weight_exponents();
        let mut add = |x: Exps| (0..4).for_each(|s| e[s] += x[s]);
        for (h, t) in self.trees.iter().enumerate() {
            add(self.junction(h));
            add(t.weight_exponents());
            add(self.paths[h + 1].weight_exponents());
        }
        e
    }

    pub fn inorder_word(&self) -> Vec<u32> {
        let mut w = self.paths[0].labels.clone();
        for (t, p) in self.trees.iter().zip(&self.paths[1..]) {
            w.extend_from_slice(t.inorder_word());
            w.extend_from_slice(&p.labels);
        }
        w
    }

    pub fn canopy(&self) -> Vec<Step> {
        let mut c = self.paths[0].steps.clone();
        for (t, p) in self.trees.iter().zip(&self.paths[1..]) {
            c.push(Step::D);
            c.extend(t.shape().canopy());
            c.push(Step::U);
            c.extend_from_slice(&p.steps);
        }
        c
    }

    pub fn attributes(&self) -> PtsAttributes {
        let exponents = self.weight_exponents();
        PtsAttributes { weight: exps_poly(exponents), exponents, inorder: self.inorder_word(), canopy: self.canopy() }
    }

    /// Same structure with the inorder word replaced.
    pub fn relabel(&self, word: &[u32]) -> Result<Self> {
        if word.len() != self.len() {
            return Err(Error::InvalidInput("relabeling word has the wrong length".into()));
        }
        let mut pos = 0;
        let mut take = |k: usize| {
            let out = word[pos..pos + k].to_vec();
            pos += k;
            out
        };
        let mut paths = Vec::with_capacity(self.paths.len());
        let mut trees = Vec::with_capacity(self.trees.len());
        for (h, p) in self.paths.iter().enumerate() {
            if h > 0 {
                let t = &self.trees[h - 1];
                trees.push(LabeledTree::new(t.shape().clone(), take(t.len()))?);
            }
            paths.push(LabeledLatticePath::new(p.steps.clone(), take(p.len()))?);
        }
        Self::new(paths, trees)
    }
}

/// Weight, inorder word and canopy of `s`.
pub fn pts_attributes(s: &PathTreeSequence) -> PtsAttributes {
    s.attributes()
}

impl fmt::Display for PathTreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.paths[0])?;
        for (t, p) in self.trees.iter().zip(&self.paths[1..]) {
            write!(f, " {{{t}}} {p}")?;
        }
        Ok(())
    }
}

impl FromStr for PathTreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut paths = Vec::new();
        let mut trees = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let want_path = paths.len() == trees.len();
            let (open, close) = if want_path { ('[', ']') } else { ('{', '}') };
            if !rest.starts_with(open) {
                return Err(Error::Parse(format!("expected {open:?} in path-tree sequence {s:?}")));
            }
            let end = rest.find(close).ok_or_else(|| Error::Parse(format!("unclosed {open:?} in {s:?}")))?;
            if want_path {
                paths.push(rest[..=end].parse()?);
            } else {
                trees.push(rest[1..end].parse()?);
            }
            rest = rest[end + 1..].trim_start();
        }
        Self::new(paths, trees).map_err(|_| Error::Parse(format!("malformed alternation in {s:?}")))
    }
}

/// Classification of an attic node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtticNode {
    /// Inorder positions `(i, j, k)` with `i < j < k`.
    pub triple: (usize, usize, usize),
    pub ancestor: usize,
    pub is_left_child: bool,
    pub life_sustaining: bool,
}

impl AtticNode {
    pub fn prunable(&self) -> bool {
        !self.life_sustaining
    }
}

const DESCENDING_END: [[usize; 3]; 3] = [[1, 3, 2], [3, 1, 2], [3, 2, 1]];

fn ends_high_low(a: u32, b: u32, c: u32) -> bool {
    let s = standardize(&[a, b, c]);
    DESCENDING_END.iter().any(|p| p[..] == s[..])
}

fn classify_with(tree: &LabeledTree, parents: &[Option<usize>], roof: &[bool], j: usize) -> Result<AtticNode> {
    if roof[j] {
        return Err(Error::NotApplicable(format!("node {j} is on the roof")));
    }
    let shape = tree.shape();
    let p = parents[j].expect("attic nodes have parents");
    let is_left_child = shape.left(p) == Some(j);
    let ancestors = std::iter::successors(parents[j], |&a| parents[a]);
    let (i, k) = if is_left_child {
        (ancestors.filter(|&a| a < j).max().expect("attic left child has a smaller ancestor"), p)
    } else {
        (p, ancestors.filter(|&a| a > j).min().expect("attic right child has a larger ancestor"))
    };
    let high_low = ends_high_low(tree.label(i), tree.label(j), tree.label(k));
    Ok(AtticNode {
        triple: (i, j, k),
        ancestor: if is_left_child { i } else { k },
        is_left_child,
        life_sustaining: high_low == is_left_child,
    })
}

/// Distinguished triple and life-sustaining status of the attic node `v`.
pub fn classify_attic_node(tree: &LabeledTree, v: usize) -> Result<AtticNode> {
    if v >= tree.len() {
        return Err(Error::InvalidInput(format!("node {v} out of range")));
    }
    classify_with(tree, &tree.shape().parents(), &tree.shape().roof(), v)
}

/// Prunable nodes with no prunable proper ancestor, in inorder.
pub fn maximal_prunable(tree: &LabeledTree) -> Vec<AtticNode> {
    let parents = tree.shape().parents();
    let roof = tree.shape().roof();
    let info: Vec<Option<AtticNode>> = (0..tree.len()).map(|v| classify_with(tree, &parents, &roof, v).ok()).collect();
    let prunable = |v: usize| info[v].is_some_and(|a| a.prunable());
    (0..tree.len())
        .filter(|&v| prunable(v) && !std::iter::successors(parents[v], |&a| parents[a]).any(prunable))
        .map(|v| info[v].unwrap())
        .collect()
}

fn labeled_subtree(tree: &LabeledTree, v: usize) -> LabeledTree {
    let (lo, hi) = tree.shape().subtree_range(v);
    LabeledTree::new(tree.shape().subtree(v), tree.inorder_word()[lo..=hi].to_vec()).expect("subtree of a valid tree")
}

/// Cut `tree` at its maximal prunable nodes.
pub fn phi_forward(tree: &LabeledTree) -> PathTreeSequence {
    let n = tree.len();
    let canopy = tree.shape().canopy();
    let word = tree.inorder_word();
    let cut = maximal_prunable(tree);
    let mut paths = Vec::with_capacity(cut.len() + 1);
    let mut trees = Vec::with_capacity(cut.len());
    let mut start = 0;
    for a in &cut {
        let (i, j, k) = a.triple;
        paths.push(LabeledLatticePath::new(canopy[start..i].to_vec(), word[start..=i].to_vec()).expect("valid path"));
        trees.push(labeled_subtree(tree, j));
        start = k;
    }
    paths.push(LabeledLatticePath::new(canopy[start..n - 1].to_vec(), word[start..].to_vec()).expect("valid path"));
    PathTreeSequence { paths, trees }
}

/// Which rule resolved a valley of an [`OmegaTree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// The middle node becomes the right child of the node before it.
    Glide,
    /// The middle node becomes the left child of the node after it.
    Push,
}

/// A labeled lattice path whose nodes may carry binary trees.
///
/// Nodes are identified by inorder position. Only the path and the child
/// pointers matter; the planar drawing is implicit in the step word.
#[derive(Clone, Debug)]
pub struct OmegaTree {
    labels: Vec<u32>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    path: Vec<usize>,
    steps: Vec<Step>,
    attached: Vec<bool>,
}

impl OmegaTree {
    /// The path `ν̂` with each tree hung at its root.
    pub fn from_sequence(s: &PathTreeSequence) -> Self {
        let n = s.len();
        let mut o = OmegaTree {
            labels: s.inorder_word(),
            left: vec![None; n],
            right: vec![None; n],
            path: Vec::new(),
            steps: Vec::new(),
            attached: vec![false; n],
        };
        let mut off = 0;
        for (h, p) in s.paths.iter().enumerate() {
            if h > 0 {
                let t = &s.trees[h - 1];
                let sh = t.shape();
                for v in 0..t.len() {
                    o.left[off + v] = sh.left(v).map(|c| c + off);
                    o.right[off + v] = sh.right(v).map(|c| c + off);
                }
                let root = off + sh.root();
                o.attached[root] = true;
                o.path.push(root);
                o.steps.extend([Step::D, Step::U]);
                off += t.len();
            }
            o.path.extend(off..off + p.len());
            o.steps.extend_from_slice(&p.steps);
            off += p.len();
        }
        o
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Index in the step word of the lowest valley, i.e. the corner under the
    /// Eastern-most point of the bottom row of `R_T`.
    pub fn frontier(&self) -> Option<usize> {
        // Heights never decrease along the path, so the first D that is
        // followed by a U sits on the lowest row.
        self.steps.windows(2).position(|w| w == [Step::D, Step::U])
    }

    /// Resolve one valley; `None` once the region above the path is empty.
    pub fn advance(&mut self) -> Option<Move> {
        let t = self.frontier()?;
        let (a, b, c) = (self.path[t], self.path[t + 1], self.path[t + 2]);
        let high_low = ends_high_low(self.labels[a], self.labels[b], self.labels[c]);
        let mv = if self.attached[b] == high_low { Move::Glide } else { Move::Push };
        match mv {
            Move::Glide => {
                self.right[a] = Some(b);
                self.steps[t] = Step::U;
            }
            Move::Push => self.left[c] = Some(b),
        }
        self.path.remove(t + 1);
        self.steps.remove(t + 1);
        Some(mv)
    }

    /// Run to completion and read off the binary tree rooted at the corner.
    pub fn into_tree(mut self) -> Result<LabeledTree> {
        while self.advance().is_some() {}
        let corner = self.steps.iter().position(|&s| s == Step::D).unwrap_or(self.steps.len());
        for t in 0..self.steps.len() {
            if t < corner {
                self.left[self.path[t + 1]] = Some(self.path[t]);
            } else {
                self.right[self.path[t]] = Some(self.path[t + 1]);
            }
        }
        let shape = TreeShape::from_children(self.path[corner], self.left, self.right)?;
        LabeledTree::new(shape, self.labels)
    }
}

/// Inverse of [`phi_forward`] by push-glide on the Ω-tree of `s`.
pub fn psi_inverse(s: &PathTreeSequence) -> LabeledTree {
    OmegaTree::from_sequence(s).into_tree().expect("push-glide preserves the inorder")
}

/// Augmented nested partition of `s`, recursing through `phi_forward` of each tree.
pub fn theta_map(s: &PathTreeSequence) -> NestedPartition {
    let n = s.len();
    let mut blocks = Vec::new();
    let mut marks = Vec::new();
    let mut labels = BTreeMap::new();
    theta_into(s, 0, &mut blocks, &mut marks, &mut labels);
    NestedPartition::new(n, blocks, marks, Some(labels)).expect("theta produces a valid augmented partition")
}

fn theta_into(
    s: &PathTreeSequence,
    offset: usize,
    blocks: &mut Vec<Vec<usize>>,
    marks: &mut Vec<usize>,
    labels: &mut BTreeMap<usize, Step>,
) {
    let mut outer = Vec::new();
    let mut pos = offset + 1;
    for (h, p) in s.paths.iter().enumerate() {
        if h > 0 {
            if s.paths[h - 1].end() > p.start() {
                marks.push(*outer.last().unwrap());
            }
            let t = &s.trees[h - 1];
            theta_into(&phi_forward(t), pos - 1, blocks, marks, labels);
            pos += t.len();
        }
        for (q, &step) in p.steps.iter().enumerate() {
            labels.insert(pos + q, step);
            if p.labels[q] > p.labels[q + 1] {
                marks.push(pos + q);
            }
        }
        outer.extend(pos..pos + p.len());
        pos += p.len();
    }
    blocks.push(outer);
}

/// Underlying (unlabeled) structures of sequences with canopy `nu`, each
/// labeled by the identity word.
pub fn pts_structures(nu: &[Step]) -> Vec<PathTreeSequence> {
    let mut out = Vec::new();
    let mut acc = (Vec::new(), Vec::new());
    structures_from(nu, 0, Vec::new(), &mut acc, &mut out);
    out
}

type Parts = (Vec<Vec<Step>>, Vec<TreeShape>);

fn structures_from(nu: &[Step], at: usize, cur: Vec<Step>, acc: &mut Parts, out: &mut Vec<PathTreeSequence>) {
    if at == nu.len() {
        acc.0.push(cur);
        out.push(assemble(acc));
        acc.0.pop();
        return;
    }
    let mut extended = cur.clone();
    extended.push(nu[at]);
    structures_from(nu, at + 1, extended, acc, out);
    if nu[at] != Step::D {
        return;
    }
    for end in at + 1..nu.len() {
        if nu[end] != Step::U {
            continue;
        }
        let inner = &nu[at + 1..end];
        for shape in TreeShape::with_canopy(inner.len() + 1, inner).expect("lengths agree") {
            acc.0.push(cur.clone());
            acc.1.push(shape);
            structures_from(nu, end + 1, Vec::new(), acc, out);
            acc.0.pop();
            acc.1.pop();
        }
    }
}

fn assemble((paths, trees): &Parts) -> PathTreeSequence {
    let mut next = 1u32;
    let mut fresh = |k: usize| {
        let v: Vec<u32> = (next..next + k as u32).collect();
        next += k as u32;
        v
    };
    let mut ps = Vec::with_capacity(paths.len());
    let mut ts = Vec::with_capacity(trees.len());
    for (h, steps) in paths.iter().enumerate() {
        if h > 0 {
            let sh = &trees[h - 1];
            ts.push(LabeledTree::new(sh.clone(), fresh(sh.len())).unwrap());
        }
        ps.push(LabeledLatticePath::new(steps.clone(), fresh(steps.len() + 1)).unwrap());
    }
    PathTreeSequence { paths: ps, trees: ts }
}

/// All sequences with canopy `nu` whose inorder word is a permutation of `[n]`.
pub fn enumerate_pts(n: usize, nu: &[Step]) -> Result<Vec<PathTreeSequence>> {
    if n == 0 || nu.len() + 1 != n {
        return Err(Error::InvalidInput(format!("canopy of length {} does not fit {n} nodes", nu.len())));
    }
    let structures = pts_structures(nu);
    let mut out = Vec::new();
    let mut word: Vec<u32> = (1..=n as u32).collect();
    loop {
        for s in &structures {
            out.push(s.relabel(&word)?);
        }
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(out)
}

fn words(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (1..=k).map(move |x| [w.clone(), vec![x]].concat())).collect();
    }
    out
}

fn content(w: &[u32], n: usize) -> Vec<u8> {
    let mut c = vec![0u8; n];
    w.iter().for_each(|&x| c[x as usize - 1] += 1);
    c
}

/// Compare, for every augmented nested partition on `n` nodes, the content
/// distribution of its Θ-fiber over words in `n` letters with the product of
/// its block ribbons. Returns the first partition where they differ.
pub fn theta_fiber_mismatch(n: usize) -> Option<String> {
    use crate::combinatorics::descent_set;
    use crate::nested::augmented_nested_partitions;
    use crate::trees::all_words;
    let all_words_n = words(n, n as u32);
    let mut fibers: BTreeMap<NestedPartition, BTreeMap<Vec<u8>, u64>> = BTreeMap::new();
    for nu in all_words(n - 1) {
        for st in pts_structures(&nu) {
            for word in &all_words_n {
                let s = st.relabel(word).expect("word length matches");
                *fibers.entry(theta_map(&s)).or_default().entry(content(word, n)).or_insert(0) += 1;
            }
        }
    }
    let targets = augmented_nested_partitions(n);
    if fibers.len() != targets.len() {
        return Some(format!("{} fibers for {} partitions", fibers.len(), targets.len()));
    }
    for p in targets {
        let mut expected: BTreeMap<Vec<u8>, u64> = BTreeMap::from([(vec![0; n], 1)]);
        for (_, alpha) in p.block_compositions() {
            let set: Vec<usize> = alpha.to_set();
            let mut next = BTreeMap::new();
            for w in words(alpha.size(), n as u32) {
                if descent_set(&w) != set {
                    continue;
                }
                let c = content(&w, n);
                for (base, k) in &expected {
                    let sum: Vec<u8> = base.iter().zip(&c).map(|(a, b)| a + b).collect();
                    *next.entry(sum).or_insert(0) += k;
                }
            }
            expected = next;
        }
        if fibers.get(&p) != Some(&expected) {
            return Some(p.to_string());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nested::augmented_with_canopy;
    use crate::trees::{all_words, LabeledTree};

    fn w(s: &str) -> Vec<Step> {
        parse_word(s).unwrap()
    }

    fn tree(root: usize, kids: &[(usize, Option<usize>, Option<usize>)], labels: Vec<u32>) -> LabeledTree {
        let n = labels.len();
        let (mut l, mut r) = (vec![None; n], vec![None; n]);
        for &(v, a, b) in kids {
            l[v] = a;
            r[v] = b;
        }
        LabeledTree::new(TreeShape::from_children(root, l, r).unwrap(), labels).unwrap()
    }

    fn long_sequence() -> PathTreeSequence {
        "[DD:3,1,4] {()(()) [2,7,5]} [U:4,3] {(())() [4,2,2]} [:2]".parse().unwrap()
    }

    fn sixteen_node_sequence() -> PathTreeSequence {
        "[:3] {() [2]} [:3] {() [5]} [UUDUU:4,6,1,7,6,5] {(())(()) [7,6,8,1]} [D:3,1]".parse().unwrap()
    }

    #[test]
    fn long_sequence_attributes() {
        let s = long_sequence();
        let a = pts_attributes(&s);
        let word: String = a.inorder.iter().map(|x| x.to_string()).collect();
        assert_eq!(word, "314275434222");
        assert_eq!(a.exponents, [1, 4, 4, 2]);
        assert_eq!(word_to_string(&a.canopy), "DDDDUUUDUDU");
    }

    #[test]
    fn trivial_sequence() {
        let s: PathTreeSequence = "[:5]".parse().unwrap();
        let a = s.attributes();
        assert_eq!(a.weight, WeightPoly::one());
        assert!(a.canopy.is_empty());
        assert_eq!(phi_forward(&psi_inverse(&s)), s);
        assert_eq!(enumerate_pts(1, &[]).unwrap().len(), 1);
    }

    #[test]
    fn text_round_trip() {
        for s in [long_sequence(), sixteen_node_sequence()] {
            assert_eq!(s.to_string().parse::<PathTreeSequence>().unwrap(), s);
        }
        assert!("[D:1,2] [U:1,2]".parse::<PathTreeSequence>().is_err());
        assert!("[D:1,2] {() [1]}".parse::<PathTreeSequence>().is_err());
    }

    #[test]
    fn distinguished_triples_table() {
        // 1-based v1..v16 shifted to 0-based.
        let v = |x: usize| x - 1;
        let s = |x: usize| Some(x - 1);
        let t = tree(
            v(9),
            &[
                (v(9), s(3), s(10)),
                (v(3), s(2), s(8)),
                (v(2), s(1), None),
                (v(8), s(7), None),
                (v(7), s(5), None),
                (v(5), s(4), s(6)),
                (v(10), None, s(15)),
                (v(15), s(14), s(16)),
                (v(14), s(11), None),
                (v(11), None, s(12)),
                (v(12), None, s(13)),
            ],
            (1..=16).collect(),
        );
        assert_eq!(word_to_string(&t.shape().canopy()), "UUDUDUUUDDDDUUD");
        let table = [
            (4, (3, 5), 3),
            (5, (3, 7), 3),
            (6, (5, 7), 7),
            (7, (3, 8), 3),
            (8, (3, 9), 9),
            (11, (10, 14), 10),
            (12, (11, 14), 14),
            (13, (12, 14), 14),
            (14, (10, 15), 10),
        ];
        let mut attic = Vec::new();
        for j in 0..16 {
            match classify_attic_node(&t, j) {
                Ok(a) => attic.push((j + 1, (a.triple.0 + 1, a.triple.2 + 1), a.ancestor + 1)),
                Err(Error::NotApplicable(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert_eq!(attic, table.to_vec());
    }

    #[test]
    fn life_sustaining_cases() {
        // v2 is the left child of v3, which is the right child of v1.
        let shape = [(0, None, Some(2)), (2, Some(1), None)];
        let ls = |labels: Vec<u32>| classify_attic_node(&tree(0, &shape, labels), 1).unwrap();
        assert!(ls(vec![1, 3, 2]).life_sustaining);
        assert!(ls(vec![3, 1, 2]).life_sustaining);
        assert!(ls(vec![2, 1, 3]).prunable());
        assert!(ls(vec![1, 2, 3]).prunable());
        // Ties increase left to right: 2,2,1 standardizes to 231.
        assert!(ls(vec![2, 2, 1]).prunable());
        assert_eq!(ls(vec![2, 1, 3]).triple, (0, 1, 2));
        assert!(matches!(classify_attic_node(&tree(0, &shape, vec![1, 2, 3]), 0), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn left_chain_is_one_path() {
        let t = tree(2, &[(2, Some(1), None), (1, Some(0), None)], vec![2, 3, 1]);
        let s = phi_forward(&t);
        assert!(s.trees().is_empty());
        assert_eq!(s.paths()[0].steps(), &w("UU")[..]);
        assert_eq!(s.paths()[0].labels(), &[2, 3, 1]);
    }

    #[test]
    fn sixteen_node_round_trip() {
        let s = sixteen_node_sequence();
        let a = s.attributes();
        assert_eq!(word_to_string(&a.canopy), "DUDUUUDUUDUDUUD");
        let t = psi_inverse(&s);
        let word: String = t.inorder_word().iter().map(|x| x.to_string()).collect();
        assert_eq!(word, "3235461765768131");
        assert_eq!(t.weight_exponents(), [3, 6, 3, 3]);
        assert_eq!(word_to_string(&t.shape().canopy()), "DUDUUUDUUDUDUUD");
        let cut: Vec<usize> = maximal_prunable(&t).iter().map(|a| a.triple.1 + 1).collect();
        assert_eq!(cut, vec![2, 4, 12]);
        assert_eq!(phi_forward(&t), s);
    }

    #[test]
    fn sixteen_node_theta() {
        let s = sixteen_node_sequence();
        let p = theta_map(&s);
        assert_eq!(p.augmented_weight().unwrap(), exps_poly([3, 6, 3, 3]));
        assert_eq!(p.canopy_word().unwrap(), s.canopy());
    }

    #[test]
    fn phi_psi_mutually_inverse() {
        for n in 1..=5 {
            for shape in TreeShape::all(n) {
                for t in LabeledTree::all_standard(&shape) {
                    let s = phi_forward(&t);
                    let a = s.attributes();
                    assert_eq!(a.exponents, t.weight_exponents(), "{t}");
                    assert_eq!(a.inorder, t.inorder_word());
                    assert_eq!(a.canopy, shape.canopy());
                    assert_eq!(psi_inverse(&s), t, "{t} -> {s}");
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_pts(3, &w("DU")).unwrap().len(), 12);
        for n in 1..=5usize {
            let fact: usize = (1..=n).product();
            for nu in all_words(n - 1) {
                let shapes = TreeShape::with_canopy(n, &nu).unwrap().len();
                let all = enumerate_pts(n, &nu).unwrap();
                assert_eq!(all.len(), shapes * fact);
                for s in all.iter().step_by(7) {
                    assert_eq!(phi_forward(&psi_inverse(s)), *s);
                }
            }
        }
    }

    #[test]
    fn theta_preserves_weight_and_canopy() {
        for n in 1..=5usize {
            for nu in all_words(n - 1) {
                let fiber = augmented_with_canopy(n, &nu).unwrap();
                for s in enumerate_pts(n, &nu).unwrap() {
                    let p = theta_map(&s);
                    assert_eq!(p.augmented_weight().unwrap(), s.attributes().weight);
                    assert_eq!(p.canopy_word().unwrap(), nu);
                    assert!(fiber.contains(&p));
                }
            }
        }
    }
    #[test]
    fn sequence_sum_matches_ribbon_recursion() {
        use crate::combinatorics::IntPartition;
        use crate::genfun::{g_series, ribbon_recursion_rhs};
        let rhs = ribbon_recursion_rhs(&g_series(4, 4).unwrap()).unwrap();
        for n in 1..=4usize {
            let structures: Vec<PathTreeSequence> = all_words(n - 1).iter().flat_map(|nu| pts_structures(nu)).collect();
            for lambda in IntPartition::all(n) {
                let mut word: Vec<u32> = lambda.parts().iter().enumerate().flat_map(|(i, &m)| vec![i as u32 + 1; m]).collect();
                let mut total = WeightPoly::zero();
                loop {
                    for s in &structures {
                        total = total + s.relabel(&word).unwrap().attributes().weight;
                    }
                    if !next_permutation(&mut word) {
                        break;
                    }
                }
                assert_eq!(total, rhs.component(n).coeff(&lambda), "n={n} {lambda}");
            }
        }
    }

    #[test]
    fn theta_fibers_are_ribbon_products() {
        for n in 1..=4 {
            assert_eq!(theta_fiber_mismatch(n), None);
        }
    }

    #[test]
    fn junction_edges_pair_up() {
        let mut checked = 0;
        for n in 3..=5usize {
            for shape in TreeShape::all(n) {
                let parents = shape.parents();
                for word in words(n, 3) {
                    let t = LabeledTree::new(shape.clone(), word).unwrap();
                    for j in 0..n {
                        let Ok(a) = classify_attic_node(&t, j) else { continue };
                        let path_ok = std::iter::successors(parents[j], |&x| parents[x])
                            .take_while(|&x| x != parents[a.ancestor].unwrap_or(usize::MAX))
                            .all(|x| classify_attic_node(&t, x).map_or(true, |c| c.life_sustaining));
                        if a.life_sustaining || !path_ok {
                            continue;
                        }
                        let (i, _, k) = a.triple;
                        let e = shape.right(i).unwrap();
                        let f = shape.left(k).unwrap();
                        let got = (t.label(i) <= t.label(e), t.label(f) <= t.label(k));
                        let want = t.label(i) <= t.label(k);
                        assert_eq!(got, (want, want), "{t} at {j}");
                        checked += 1;
                    }
                }
            }
        }
            assert!(checked > 1000, "{checked}");
    }
}
