//! Nested noncrossing partitions, their marked and augmented decorations,
//! and the ribbon expansions built from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::symfunc::{RibbonSum, SymFunc};
use crate::trees::{word_to_string, Step};
use crate::weightpoly::{Gen, Monomial, WeightPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Plain,
    Marked,
    Augmented,
}

/// A nested partition of `[n]` with optional marks and short-arc labels.
///
/// Blocks hold 1-based elements, sorted, and are ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NestedPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    marks: BTreeSet<usize>,
    /// Keyed by the stepper `i` of the short arc `(i, i+1)`.
    arc_labels: Option<BTreeMap<usize, Step>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NestedStats {
    pub unmarked_steppers: usize,
    pub marked_steppers: usize,
    pub unmarked_jumpers: usize,
    pub marked_jumpers: usize,
    /// Steppers split by arc label, present only for augmented partitions.
    pub unmarked_up: usize,
    pub marked_up: usize,
    pub unmarked_down: usize,
    pub marked_down: usize,
}

fn normalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

impl NestedPartition {
    pub fn new(
        n: usize,
        blocks: Vec<Vec<usize>>,
        marks: impl IntoIterator<Item = usize>,
        arc_labels: Option<BTreeMap<usize, Step>>,
    ) -> Result<Self> {
        let blocks = normalize(blocks);
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidInput("blocks do not partition [n]".into()));
            }
            seen[x] = true;
        }
        if n == 0 || seen[1..].iter().any(|s| !s) || blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::InvalidInput("blocks do not partition [n]".into()));
        }
        let p = NestedPartition { n, blocks, marks: marks.into_iter().collect(), arc_labels };
        if !p.is_noncrossing() {
            return Err(Error::InvalidInput("partition is crossing".into()));
        }
        if !p.is_nested() {
            return Err(Error::InvalidInput("a block maximum is followed by a block minimum".into()));
        }
        let maxima: BTreeSet<usize> = p.blocks.iter().map(|b| *b.last().unwrap()).collect();
        if p.marks.iter().any(|m| *m == 0 || *m > n || maxima.contains(m)) {
            return Err(Error::InvalidInput("marks must avoid block maxima".into()));
        }
        if let Some(labels) = &p.arc_labels {
            let steppers: BTreeSet<usize> = p.steppers().into_iter().collect();
            let keys: BTreeSet<usize> = labels.keys().copied().collect();
            if keys != steppers {
                return Err(Error::InvalidInput("every short arc needs exactly one label".into()));
            }
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn arc_labels(&self) -> Option<&BTreeMap<usize, Step>> {
        self.arc_labels.as_ref()
    }

    pub fn flavor(&self) -> Flavor {
        match (&self.arc_labels, self.marks.is_empty()) {
            (Some(_), _) => Flavor::Augmented,
            (None, false) => Flavor::Marked,
            (None, true) => Flavor::Plain,
        }
    }

    fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n + 1];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                idx[x] = b;
            }
        }
        idx
    }

    pub fn is_noncrossing(&self) -> bool {
        let arcs = self.arcs();
        !arcs.iter().any(|&(a, c)| arcs.iter().any(|&(b, d)| a < b && b < c && c < d))
    }

    pub fn is_nested(&self) -> bool {
        let maxima: BTreeSet<usize> = self.blocks.iter().map(|b| *b.last().unwrap()).collect();
        let minima: BTreeSet<usize> = self.blocks.iter().map(|b| b[0]).collect();
        maxima.iter().all(|i| !minima.contains(&(i + 1)))
    }

    /// Arcs between consecutive elements of each block.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.blocks.iter().flat_map(|b| b.windows(2).map(|w| (w[0], w[1]))).collect()
    }

    pub fn steppers(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.arcs().into_iter().filter(|(i, j)| *j == i + 1).map(|(i, _)| i).collect();
        v.sort_unstable();
        v
    }

    pub fn jumpers(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.arcs().into_iter().filter(|(i, j)| *j > i + 1).map(|(i, _)| i).collect();
        v.sort_unstable();
        v
    }

    pub fn stats(&self) -> NestedStats {
        let mut s = NestedStats::default();
        for i in self.steppers() {
            let marked = self.marks.contains(&i);
            if marked {
                s.marked_steppers += 1;
            } else {
                s.unmarked_steppers += 1;
            }
            if let Some(labels) = &self.arc_labels {
                match (labels[&i], marked) {
                    (Step::U, false) => s.unmarked_up += 1,
                    (Step::U, true) => s.marked_up += 1,
                    (Step::D, false) => s.unmarked_down += 1,
                    (Step::D, true) => s.marked_down += 1,
                }
            }
        }
        for i in self.jumpers() {
            if self.marks.contains(&i) {
                s.marked_jumpers += 1;
            } else {
                s.unmarked_jumpers += 1;
            }
        }
        s
    }

    /// `(lb+rb)^sa (l+r)^sd (lb rb)^ja (l r)^jd`.
    pub fn marked_weight(&self) -> WeightPoly {
        let s = self.stats();
        let g = WeightPoly::gen;
        let beta = g(Gen::Lb) + g(Gen::Rb);
        let delta = g(Gen::L) + g(Gen::R);
        let jumps = WeightPoly::monomial(
            Monomial::weight(
                s.unmarked_jumpers as u16,
                s.marked_jumpers as u16,
                s.unmarked_jumpers as u16,
                s.marked_jumpers as u16,
            ),
            1.into(),
        );
        beta.pow(s.unmarked_steppers as u32).mul_ref(&delta.pow(s.marked_steppers as u32)).mul_ref(&jumps)
    }

    /// Six-statistic weight of an augmented partition.
    pub fn augmented_weight(&self) -> Result<WeightPoly> {
        if self.arc_labels.is_none() {
            return Err(Error::InvalidInput("augmented weight needs arc labels".into()));
        }
        let s = self.stats();
        let (ja, jd) = (s.unmarked_jumpers as u16, s.marked_jumpers as u16);
        let m = Monomial::weight(s.unmarked_up as u16 + ja, s.marked_up as u16 + jd, s.unmarked_down as u16 + ja, s.marked_down as u16 + jd);
        Ok(WeightPoly::monomial(m, 1.into()))
    }

    /// Weight of the appropriate flavor.
    pub fn weight(&self) -> WeightPoly {
        self.augmented_weight().unwrap_or_else(|_| self.marked_weight())
    }

    /// Each block cut after its marked nodes.
    pub fn block_compositions(&self) -> Vec<(Vec<usize>, Composition)> {
        self.blocks
            .iter()
            .map(|b| {
                let mut parts = Vec::new();
                let mut run = 0;
                for x in b {
                    run += 1;
                    if self.marks.contains(x) {
                        parts.push(run);
                        run = 0;
                    }
                }
                if run > 0 {
                    parts.push(run);
                }
                (b.clone(), Composition::new(parts).expect("positive parts"))
            })
            .collect()
    }

    /// `r_{c(B_1)} ⋯ r_{c(B_k)}` multiplied out formally.
    pub fn ribbon_product(&self) -> RibbonSum {
        let mut acc = RibbonSum::scalar(WeightPoly::one());
        for (_, c) in self.block_compositions() {
            acc = acc.mul(&RibbonSum::single(c, WeightPoly::one()));
        }
        acc
    }

    /// Canopy word of an augmented partition.
    pub fn canopy_word(&self) -> Result<Vec<Step>> {
        let labels = self
            .arc_labels
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("canopy word needs arc labels".into()))?;
        let idx = self.block_index();
        Ok(self.word_on(1, self.n, &idx, labels))
    }

    fn word_on(&self, lo: usize, hi: usize, idx: &[usize], labels: &BTreeMap<usize, Step>) -> Vec<Step> {
        // The outer block of the interval contains lo and hi.
        let outer: Vec<usize> = self.blocks[idx[lo]].iter().copied().filter(|&x| x >= lo && x <= hi).collect();
        let mut out = Vec::with_capacity(hi - lo);
        for (k, &x) in outer.iter().enumerate() {
            if k + 1 == outer.len() {
                break;
            }
            let y = outer[k + 1];
            if y == x + 1 {
                out.push(labels[&x]);
            } else {
                out.push(Step::D);
                out.extend(self.word_on(x + 1, y - 1, idx, labels));
                out.push(Step::U);
            }
        }
        out
    }

    /// Drop arc labels, keeping marks.
    pub fn forget_labels(&self) -> NestedPartition {
        NestedPartition { arc_labels: None, ..self.clone() }
    }
}

impl fmt::Display for NestedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &mut dyn Iterator<Item = String>, sep: &str| v.collect::<Vec<_>>().join(sep);
        let blocks = join(&mut self.blocks.iter().map(|b| join(&mut b.iter().map(|x| x.to_string()), ",")), "/");
        let marks = join(&mut self.marks.iter().map(|x| x.to_string()), ",");
        write!(f, "blocks={blocks}; marks={marks}")?;
        if let Some(labels) = &self.arc_labels {
            let arcs = join(&mut labels.iter().map(|(i, s)| format!("{i}{}", word_to_string(&[*s]))), ",");
            write!(f, "; arcs={arcs}")?;
        }
        Ok(())
    }
}

impl FromStr for NestedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("nested partition {s:?}"));
        let mut blocks = None;
        let mut marks = Vec::new();
        let mut arcs = None;
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        for field in s.split(';') {
            let (key, value) = field.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            match key.trim() {
                "blocks" => {
                    blocks = Some(
                        value.split('/').map(|b| b.split(',').map(num).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?,
                    )
                }
                "marks" if !value.is_empty() => marks = value.split(',').map(num).collect::<Result<Vec<_>>>()?,
                "marks" => {}
                "arcs" => {
                    let mut map = BTreeMap::new();
                    for item in value.split(',').filter(|x| !x.trim().is_empty()) {
                        let item = item.trim();
                        let (i, step) = item.split_at(item.len() - 1);
                        let step = crate::trees::parse_word(step)?[0];
                        map.insert(num(i)?, step);
                    }
                    arcs = Some(map);
                }
                _ => return Err(bad()),
            }
        }
        let blocks: Vec<Vec<usize>> = blocks.ok_or_else(bad)?;
        let n = blocks.iter().map(|b| b.len()).sum();
        NestedPartition::new(n, blocks, marks, arcs)
    }
}

/// Cartesian product of gap fillings appended to a fixed prefix.
fn combine<T: Clone>(prefix: Vec<T>, gaps: &[Vec<Vec<T>>]) -> Vec<Vec<T>> {
    let mut combos = vec![prefix];
    for gap in gaps {
        let mut next = Vec::with_capacity(combos.len() * gap.len());
        for c in &combos {
            for g in gap {
                let mut v = c.clone();
                v.extend(g.iter().cloned());
                next.push(v);
            }
        }
        combos = next;
    }
    combos
}

/// Nested partitions of the interval `[lo, lo+m)`, as block lists. The outer
/// block is a sequence of runs of consecutive integers separated by nonempty
/// gaps, each gap holding a smaller nested partition.
fn nested_on(lo: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(pos: usize, end: usize, outer: &mut Vec<usize>, gaps: &mut Vec<Vec<Vec<Vec<usize>>>>, out: &mut Vec<Vec<Vec<usize>>>) {
        for run_end in pos + 1..=end {
            outer.extend(pos..run_end);
            if run_end == end {
                out.extend(combine(vec![outer.clone()], gaps));
            } else {
                for next in run_end + 1..end {
                    gaps.push(nested_on(run_end, next - run_end));
                    rec(next, end, outer, gaps, out);
                    gaps.pop();
                }
            }
            outer.truncate(outer.len() - (run_end - pos));
        }
    }
    let mut out = Vec::new();
    rec(lo, lo + m, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Plain nested partitions of `[n]`.
pub fn nested_partitions(n: usize) -> Vec<NestedPartition> {
    let mut out: Vec<NestedPartition> = nested_on(1, n)
        .into_iter()
        .map(|blocks| NestedPartition::new(n, blocks, [], None).expect("generated partitions are nested"))
        .collect();
    out.sort();
    out
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect())
        .collect()
}

fn markable(p: &NestedPartition) -> Vec<usize> {
    p.blocks.iter().flat_map(|b| b[..b.len() - 1].iter().copied()).collect()
}

pub fn marked_nested_partitions(n: usize) -> Vec<NestedPartition> {
    let mut out = Vec::new();
    for p in nested_partitions(n) {
        for marks in subsets(&markable(&p)) {
            out.push(NestedPartition { marks: marks.into_iter().collect(), ..p.clone() });
        }
    }
    out
}

pub fn augmented_nested_partitions(n: usize) -> Vec<NestedPartition> {
    let mut out = Vec::new();
    for p in marked_nested_partitions(n) {
        let steppers = p.steppers();
        for mask in 0u64..1 << steppers.len() {
            let labels = steppers
                .iter()
                .enumerate()
                .map(|(i, &s)| (s, if mask >> i & 1 == 1 { Step::D } else { Step::U }))
                .collect();
            out.push(NestedPartition { arc_labels: Some(labels), ..p.clone() });
        }
    }
    out
}

pub fn enumerate(n: usize, flavor: Flavor) -> Vec<NestedPartition> {
    match flavor {
        Flavor::Plain => nested_partitions(n),
        Flavor::Marked => marked_nested_partitions(n),
        Flavor::Augmented => augmented_nested_partitions(n),
    }
}

/// Unmarked augmented structures on `[lo, lo+m)` with canopy word `nu`:
/// block lists plus short-arc labels.
type Skeleton = (Vec<Vec<usize>>, BTreeMap<usize, Step>);

fn skeletons(lo: usize, m: usize, nu: &[Step]) -> Vec<Skeleton> {
    debug_assert_eq!(nu.len() + 1, m);
    let mut out = Vec::new();
    let end = lo + m;
    // Walk the word: a run of the outer block consumes run-1 letters as arc labels;
    // a gap of size g consumes D, g-1 inner letters, U.
    fn walk(
        pos: usize,
        at: usize,
        end: usize,
        nu: &[Step],
        outer: &mut Vec<usize>,
        labels: &mut BTreeMap<usize, Step>,
        gaps: &mut Vec<Vec<Skeleton>>,
        out: &mut Vec<Skeleton>,
    ) {
        // Extend the current run from `pos` node by node.
        outer.push(pos);
        let node_letter = at; // letter index following node `pos`
        if pos + 1 == end {
            let mut combos: Vec<Skeleton> = vec![(vec![outer.clone()], labels.clone())];
            for gap in gaps.iter() {
                let mut next = Vec::new();
                for (bs, ls) in &combos {
                    for (gb, gl) in gap {
                        let mut b = bs.clone();
                        b.extend(gb.iter().cloned());
                        let mut l = ls.clone();
                        l.extend(gl.iter().map(|(k, v)| (*k, *v)));
                        next.push((b, l));
                    }
                }
                combos = next;
            }
            out.extend(combos);
            outer.pop();
            return;
        }
        // Option 1: short arc to pos+1 with label nu[node_letter].
        labels.insert(pos, nu[node_letter]);
        walk(pos + 1, node_letter + 1, end, nu, outer, labels, gaps, out);
        labels.remove(&pos);
        // Option 2: a gap of size g starting at pos+1, needs D ... U.
        if nu[node_letter] == Step::D {
            for g in 1..end - pos - 1 {
                let close = node_letter + g;
                if close >= nu.len() || nu[close] != Step::U {
                    continue;
                }
                let inner = skeletons(pos + 1, g, &nu[node_letter + 1..close]);
                if inner.is_empty() {
                    continue;
                }
                gaps.push(inner);
                walk(pos + g + 1, close + 1, end, nu, outer, labels, gaps, out);
                gaps.pop();
            }
        }
        outer.pop();
    }
    if m == 1 {
        return vec![(vec![vec![lo]], BTreeMap::new())];
    }
    walk(lo, 0, end, nu, &mut Vec::new(), &mut BTreeMap::new(), &mut Vec::new(), &mut out);
    out
}

/// Augmented nested partitions whose canopy word is `nu`, generated directly.
pub fn augmented_with_canopy(n: usize, nu: &[Step]) -> Result<Vec<NestedPartition>> {
    if n == 0 || nu.len() + 1 != n {
        return Err(Error::InvalidInput(format!("canopy length {} for n = {n}", nu.len())));
    }
    let mut out = Vec::new();
    for (blocks, labels) in skeletons(1, n, nu) {
        let base = NestedPartition::new(n, blocks, [], Some(labels)).expect("generated partitions are nested");
        for marks in subsets(&markable(&base)) {
            out.push(NestedPartition { marks: marks.into_iter().collect(), ..base.clone() });
        }
    }
    out.sort();
    Ok(out)
}

/// `Σ_π wt(π) r_{c(B_1)} ⋯ r_{c(B_k)}` over marked nested partitions, formally.
pub fn ribbon_expansion_formal(n: usize) -> RibbonSum {
    let mut total = RibbonSum::zero(n);
    for p in marked_nested_partitions(n) {
        total = total.add(&p.ribbon_product().scale(&p.marked_weight()));
    }
    total
}

pub fn ribbon_expansion_g(n: usize) -> SymFunc {
    ribbon_expansion_formal(n).to_sym()
}

/// Fixed-canopy analogue of [`ribbon_expansion_formal`].
pub fn ribbon_expansion_canopy_formal(n: usize, nu: &[Step]) -> Result<RibbonSum> {
    let mut total = RibbonSum::zero(n);
    for p in augmented_with_canopy(n, nu)? {
        total = total.add(&p.ribbon_product().scale(&p.augmented_weight()?));
    }
    Ok(total)
}

pub fn ribbon_expansion_g_canopy(n: usize, nu: &[Step]) -> Result<SymFunc> {
    Ok(ribbon_expansion_canopy_formal(n, nu)?.to_sym())
}

/// Number of marked nested partitions: `Σ_k C(m,2k) Cat_k 2^{m-k}` with `m = n-1`.
pub fn marked_count(n: usize) -> num_bigint::BigInt {
    use crate::combinatorics::{binomial, catalan};
    let m = n - 1;
    (0..=m / 2)
        .map(|k| binomial(m, 2 * k) * catalan(k) * num_bigint::BigInt::from(2u32).pow((m - k) as u32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::motzkin;
    use crate::trees::{all_words, parse_word};

    fn sample_partition() -> NestedPartition {
        NestedPartition::new(11, vec![vec![1, 2, 3, 7, 8, 11], vec![4, 6], vec![5], vec![9, 10]], [2, 4, 8], None).unwrap()
    }

    #[test]
    fn counts() {
        for n in 1..=7 {
            assert_eq!(num_bigint::BigInt::from(nested_partitions(n).len()), motzkin(n), "n = {n}");
            assert_eq!(num_bigint::BigInt::from(marked_nested_partitions(n).len()), marked_count(n));
        }
        assert_eq!(nested_partitions(4).len(), 4);
        assert_eq!(marked_nested_partitions(3).len(), 6);
    }

    #[test]
    fn validation() {
        assert!(NestedPartition::new(4, vec![vec![1, 3], vec![2, 4]], [], None).is_err());
        assert!(NestedPartition::new(2, vec![vec![1], vec![2]], [], None).is_err());
        assert!(NestedPartition::new(3, vec![vec![1, 3], vec![2]], [3], None).is_err());
        assert!(NestedPartition::new(3, vec![vec![1, 3], vec![2]], [], Some(BTreeMap::new())).is_ok());
    }

    #[test]
    fn figure_five_data() {
        let p = sample_partition();
        assert_eq!(p.steppers(), vec![1, 2, 7, 9]);
        assert_eq!(p.jumpers(), vec![3, 4, 8]);
        let comps: Vec<Vec<usize>> = p.block_compositions().into_iter().map(|(_, c)| c.parts().to_vec()).collect();
        assert_eq!(comps, vec![vec![2, 3, 1], vec![1, 1], vec![1], vec![2]]);
        let beta = WeightPoly::gen(Gen::Lb) + WeightPoly::gen(Gen::Rb);
        let delta = WeightPoly::gen(Gen::L) + WeightPoly::gen(Gen::R);
        let alpha = WeightPoly::gen(Gen::Lb) * WeightPoly::gen(Gen::Rb);
        let gamma = WeightPoly::gen(Gen::L) * WeightPoly::gen(Gen::R);
        assert_eq!(p.marked_weight(), beta.pow(3) * delta * alpha * gamma.pow(2));
        assert_eq!(p.to_string().parse::<NestedPartition>().unwrap(), p);
    }

    #[test]
    fn single_block_words() {
        let labels: BTreeMap<usize, Step> = [(1, Step::D), (2, Step::U)].into_iter().collect();
        let p = NestedPartition::new(3, vec![vec![1, 2, 3]], [], Some(labels)).unwrap();
        assert_eq!(word_to_string(&p.canopy_word().unwrap()), "DU");
        let one = NestedPartition::new(1, vec![vec![1]], [], Some(BTreeMap::new())).unwrap();
        assert!(one.canopy_word().unwrap().is_empty());
        assert_eq!(one.marked_weight(), WeightPoly::one());
        let gap = NestedPartition::new(3, vec![vec![1, 3], vec![2]], [], Some(BTreeMap::new())).unwrap();
        assert_eq!(word_to_string(&gap.canopy_word().unwrap()), "DU");
    }

    #[test]
    fn canopy_fibers_are_exact() {
        for n in 1..=6 {
            let all = augmented_nested_partitions(n);
            let mut total = 0;
            for nu in all_words(n - 1) {
                let fiber = augmented_with_canopy(n, &nu).unwrap();
                assert!(fiber.iter().all(|p| p.canopy_word().unwrap() == nu));
                let by_filter = all.iter().filter(|p| p.canopy_word().unwrap() == nu).count();
                assert_eq!(fiber.len(), by_filter, "n = {n}, nu = {}", word_to_string(&nu));
                total += fiber.len();
            }
            assert_eq!(total, all.len());
        }
    }

    #[test]
    fn augmented_weight_has_degree_n_minus_one() {
        // Steppers add one letter and one weight factor, jumpers add two of each.
        let nu = parse_word("DUDDUUDDUU").unwrap();
        let fiber = augmented_with_canopy(11, &nu).unwrap();
        assert!(!fiber.is_empty());
        assert!(fiber.iter().all(|p| p.augmented_weight().unwrap().total_degree() == Some(10)));
        let stated: WeightPoly = "lb^2*l^2*rb^3*r".parse().unwrap();
        assert_eq!(stated.total_degree(), Some(8));
    }

    #[test]
    fn labels_marginalize_to_marked_weight() {
        for p in marked_nested_partitions(5) {
            let mut sum = WeightPoly::zero();
            for q in augmented_nested_partitions(5).into_iter().filter(|q| q.forget_labels() == p) {
                sum.add_assign_ref(&q.augmented_weight().unwrap());
            }
            assert_eq!(sum, p.marked_weight());
        }
    }

    #[test]
    fn small_expansions() {
        assert_eq!(ribbon_expansion_formal(1).to_string(), "r_1");
        let u = ribbon_expansion_canopy_formal(2, &parse_word("U").unwrap()).unwrap();
        assert_eq!(u.to_string(), "l*r_11 + lb*r_2");
    }
}
