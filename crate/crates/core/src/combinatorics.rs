//! Compositions, partitions, permutations, Dyck paths and counting sequences.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weightpoly::{Gen, Monomial, WeightPoly};

/// An ordered list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("composition with a zero part: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    /// The empty composition of 0.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums except the last: `set(α) ⊆ [n−1]`.
    pub fn to_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::to_set`].
    pub fn from_set(set: &[usize], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("composition size must be at least 1".into()));
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::InvalidInput(format!("set element {bad} outside [1, {}]", n - 1)));
        }
        let mut parts = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for s in sorted {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Merge the last part of `self` with the first part of `other`.
    pub fn near_concat(&self, other: &Self) -> Self {
        match (self.0.split_last(), other.0.split_first()) {
            (Some((last, init)), Some((first, tail))) => {
                let mut parts = init.to_vec();
                parts.push(last + first);
                parts.extend_from_slice(tail);
                Composition(parts)
            }
            _ => self.concat(other),
        }
    }

    /// `self ≼ other`: `self` refines `other`.
    pub fn refines(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mine = self.to_set();
        other.to_set().iter().all(|s| mine.binary_search(s).is_ok())
    }

    /// All `γ` with `lo ≼ γ ≼ hi`, in lexicographic order of parts.
    pub fn interval(lo: &Self, hi: &Self) -> Result<Vec<Self>> {
        if !lo.refines(hi) {
            return Err(Error::Precondition(format!("{lo} does not refine {hi}")));
        }
        let n = lo.size();
        let fixed = hi.to_set();
        let free: Vec<usize> = lo.to_set().into_iter().filter(|s| !fixed.contains(s)).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1u64 << free.len()) {
            let mut set = fixed.clone();
            for (i, &s) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    set.push(s);
                }
            }
            out.push(Self::from_set(&set, n)?);
        }
        out.sort();
        Ok(out)
    }

    /// Every composition of `n` in lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for first in 1..=rest {
                cur.push(first);
                rec(rest - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Compositions of `n` with exactly `k` parts.
    pub fn with_length(n: usize, k: usize) -> Vec<Self> {
        Self::all(n).into_iter().filter(|c| c.len() == k).collect()
    }

    /// Sorted parts as a partition.
    pub fn sorted(&self) -> IntPartition {
        IntPartition::from_unsorted(self.0.clone())
    }

    /// Short subscript form, e.g. `121` or `1,10` when some part exceeds 9.
    pub fn subscript(&self) -> String {
        join_parts(&self.0)
    }
}

fn join_parts(parts: &[usize]) -> String {
    if parts.iter().all(|&p| p < 10) {
        parts.iter().map(|p| p.to_string()).collect()
    } else {
        parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntPartition(Vec<usize>);

impl IntPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("not a partition: {parts:?}")));
        }
        Ok(IntPartition(parts))
    }

    /// Sort and drop zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition(parts)
    }

    pub fn empty() -> Self {
        IntPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partitions of `n` in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
            if rest == 0 {
                out.push(IntPartition(cur.clone()));
                return;
            }
            for first in (1..=rest.min(max)).rev() {
                cur.push(first);
                rec(rest - first, first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Part multiplicities, keyed by part.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| num_traits::pow(BigInt::from(i), m) * factorial(m))
            .product()
    }

    pub fn conjugate(&self) -> Self {
        let w = self.0.first().copied().unwrap_or(0);
        IntPartition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Dominance order `self ⊵ other`.
    pub fn dominates(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn subscript(&self) -> String {
        join_parts(&self.0)
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// A permutation of `[n]` in one-line notation, values 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidInput(format!("not a permutation: {word:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Build from disjoint cycles, e.g. `&[&[3, 8]]` for the transposition (3 8).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut w: Vec<usize> = (1..=n).collect();
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidInput(format!("cycle entry outside [1, {n}]")));
                }
                w[a - 1] = b;
            }
        }
        Self::new(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn cycle_type(&self) -> IntPartition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] - 1;
                len += 1;
            }
            lens.push(len);
        }
        IntPartition::from_unsorted(lens)
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }

    pub fn descent_set(&self) -> Vec<usize> {
        descent_set(&self.0)
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.0)
    }
}

/// Advance to the next permutation in lexicographic order; false at the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Positions `i` (1-based) with `w_i > w_{i+1}`.
pub fn descent_set<T: Ord>(w: &[T]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn inversions<T: Ord>(w: &[T]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Standardization: equal letters are ranked left to right.
pub fn standardize<T: Ord>(w: &[T]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by(|&a, &b| w[a].cmp(&w[b]).then(a.cmp(&b)));
    let mut out = vec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DyckStep {
    N,
    E,
}

/// A lattice path from (0,0) to (n,n) with N and E steps staying weakly above the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckPath(Vec<DyckStep>);

impl DyckPath {
    pub fn new(steps: Vec<DyckStep>) -> Result<Self> {
        let mut height: i64 = 0;
        for s in &steps {
            height += if *s == DyckStep::N { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidInput("path dips below the diagonal".into()));
            }
        }
        if height != 0 {
            return Err(Error::InvalidInput("path does not end on the diagonal".into()));
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// Number of `NE` factors.
    pub fn peaks(&self) -> usize {
        self.0
            .windows(2)
            .filter(|w| w[0] == DyckStep::N && w[1] == DyckStep::E)
            .count()
    }

    /// Sorted lengths of maximal runs of N steps.
    pub fn vertical_runs(&self) -> IntPartition {
        let mut runs = Vec::new();
        let mut cur = 0;
        for s in &self.0 {
            if *s == DyckStep::N {
                cur += 1;
            } else if cur > 0 {
                runs.push(cur);
                cur = 0;
            }
        }
        IntPartition::from_unsorted(runs)
    }

    /// All Dyck paths of semilength `n`, lexicographic with `N < E`.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(n: usize, up: usize, down: usize, cur: &mut Vec<DyckStep>, out: &mut Vec<DyckPath>) {
            if cur.len() == 2 * n {
                out.push(DyckPath(cur.clone()));
                return;
            }
            if up < n {
                cur.push(DyckStep::N);
                rec(n, up + 1, down, cur, out);
                cur.pop();
            }
            if down < up {
                cur.push(DyckStep::E);
                rec(n, up, down + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 0, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == DyckStep::N { "N" } else { "E" })?;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Catalan numbers, `catalan(0) = 1`.
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Coefficients of `M = x(1 + M + M²)`: 1, 1, 2, 4, 9, … from `n = 1`; `motzkin(0) = 0`.
pub fn motzkin(n: usize) -> BigInt {
    motzkin_table(n)[n].clone()
}

/// `motzkin(0..=n)`.
pub fn motzkin_table(n: usize) -> Vec<BigInt> {
    let mut m = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        let mut v = if k == 1 { BigInt::one() } else { m[k - 1].clone() };
        for i in 1..k.saturating_sub(1) {
            v += &m[i] * &m[k - 1 - i];
        }
        m[k] = v;
    }
    m
}

/// `C((p+1)n, n) / (pn + 1)`; equals 1 at `n = 0`.
pub fn fuss_catalan(n: usize, p: usize) -> BigInt {
    binomial((p + 1) * n, n) / BigInt::from(p * n + 1)
}

/// `Σ_{k=0}^{n−1} (1/n) C(n,k) C(n,k+1) q^k t^{n−1−k}`.
pub fn narayana_poly(n: usize) -> WeightPoly {
    let mut out = WeightPoly::zero();
    if n == 0 {
        return out;
    }
    for k in 0..n {
        let c = binomial(n, k) * binomial(n, k + 1) / BigInt::from(n);
        let mut m = Monomial::one();
        m.0[Gen::Q.index()] = k as u16;
        m.0[Gen::T.index()] = (n - 1 - k) as u16;
        out.add_term(m, c);
    }
    out
}

/// Permutations of `[m]` with `k` cycles; `c(0,0) = 1`.
pub fn stirling_first_unsigned(m: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 1..=m {
        let mut next = vec![BigInt::zero(); i + 1];
        for j in 0..=i {
            let mut v = BigInt::zero();
            if j >= 1 {
                v += &row[j - 1];
            }
            if j < i {
                v += &row[j] * BigInt::from(i - 1);
            }
            next[j] = v;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BigInt::zero)
}

/// Set partitions of `[m]` into `k` blocks.
pub fn stirling_second(m: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 1..=m {
        let mut next = vec![BigInt::zero(); i + 1];
        for j in 1..=i {
            let mut v = row[j - 1].clone();
            if j < i {
                v += &row[j] * BigInt::from(j);
            }
            next[j] = v;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BigInt::zero)
}

/// Permutations of `[n]` with `k` descents; `A(0,0) = 1`.
pub fn eulerian(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); i];
        for j in 0..i {
            let mut v = BigInt::zero();
            if j < row.len() {
                v += &row[j] * BigInt::from(j + 1);
            }
            if j >= 1 && j - 1 < row.len() {
                v += &row[j - 1] * BigInt::from(i - j);
            }
            next[j] = v;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BigInt::zero)
}

/// Exact rational-free division, panicking if not exact. Used for closed forms.
pub(crate) fn exact_div(a: BigInt, b: BigInt) -> BigInt {
    let (q, r) = a.div_rem(&b);
    assert!(r.is_zero(), "inexact division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn set_encoding() {
        assert_eq!(comp(&[1, 2, 4, 2, 3, 2, 1]).to_set(), vec![1, 3, 7, 9, 12, 14]);
        assert_eq!(Composition::from_set(&[], 4).unwrap(), comp(&[4]));
        assert_eq!(Composition::from_set(&[3, 7, 14], 15).unwrap(), comp(&[3, 4, 7, 1]));
        assert!(Composition::from_set(&[4], 4).is_err());
    }

    #[test]
    fn concatenations_and_refinement() {
        assert_eq!(comp(&[2, 1, 3]).near_concat(&comp(&[4, 1])), comp(&[2, 1, 7, 1]));
        assert_eq!(comp(&[2, 1, 3]).concat(&comp(&[4, 1])), comp(&[2, 1, 3, 4, 1]));
        assert!(comp(&[1, 2, 4, 2, 3, 2, 1]).refines(&comp(&[3, 4, 7, 1])));
        assert!(!comp(&[3, 4, 7, 1]).refines(&comp(&[1, 2, 4, 2, 3, 2, 1])));
        assert_eq!(
            Composition::interval(&comp(&[1, 1]), &comp(&[2])).unwrap(),
            vec![comp(&[1, 1]), comp(&[2])]
        );
        assert!(Composition::interval(&comp(&[2]), &comp(&[1, 1])).is_err());
    }

    #[test]
    fn enumeration_orders() {
        let c3: Vec<String> = Composition::all(3).iter().map(|c| c.subscript()).collect();
        assert_eq!(c3, ["111", "12", "21", "3"]);
        let p4: Vec<String> = IntPartition::all(4).iter().map(|p| p.subscript()).collect();
        assert_eq!(p4, ["4", "31", "22", "211", "1111"]);
    }

    #[test]
    fn partition_statistics() {
        let p = IntPartition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(p.z(), BigInt::from(8));
        assert_eq!(p.conjugate(), IntPartition::new(vec![3, 2]).unwrap());
        assert!(IntPartition::new(vec![3, 1]).unwrap().dominates(&IntPartition::new(vec![2, 2]).unwrap()));
        assert!(IntPartition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn permutations() {
        let s = Permutation::from_cycles(9, &[&[3, 8]]).unwrap();
        assert_eq!(s.apply(3), 8);
        assert_eq!(s.apply(8), 3);
        assert_eq!(s.cycle_type().parts(), &[2, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(Permutation::all(4).len(), 24);
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(standardize(&[1, 1, 2, 1, 2, 3]), vec![1, 2, 4, 3, 5, 6]);
        assert_eq!(descent_set(&[1, 3, 2]), vec![2]);
    }

    #[test]
    fn standardization_of_sample_word() {
        let w = [1, 1, 2, 1, 2, 3];
        let s: String = standardize(&w).iter().map(|d| d.to_string()).collect();
        assert_eq!(s, "124356");
    }

    #[test]
    fn dyck_paths() {
        let d1 = DyckPath::all(1);
        assert_eq!(d1.len(), 1);
        assert_eq!((d1[0].peaks(), d1[0].vertical_runs().parts().to_vec()), (1, vec![1]));
        let d2: Vec<(String, usize, Vec<usize>)> = DyckPath::all(2)
            .iter()
            .map(|d| (d.to_string(), d.peaks(), d.vertical_runs().parts().to_vec()))
            .collect();
        assert_eq!(d2, vec![("NNEE".into(), 1, vec![2]), ("NENE".into(), 2, vec![1, 1])]);
        assert_eq!(DyckPath::all(3).len(), 5);
        for n in 1..=12 {
            assert_eq!(BigInt::from(DyckPath::all(n).len()), catalan(n));
        }
    }

    #[test]
    fn named_sequences() {
        assert_eq!(catalan(3), BigInt::from(5));
        let m: Vec<BigInt> = motzkin_table(6).into_iter().skip(1).collect();
        assert_eq!(m, [1, 1, 2, 4, 9, 21].map(BigInt::from).to_vec());
        assert_eq!(motzkin(4), BigInt::from(4));
        assert_eq!(fuss_catalan(2, 2), BigInt::from(3));
        assert_eq!(fuss_catalan(3, 1), catalan(3));
        assert_eq!(narayana_poly(3).to_string(), "q^2 + 3*q*t + t^2");
        assert_eq!(stirling_first_unsigned(3, 1), BigInt::from(2));
        assert_eq!(stirling_first_unsigned(4, 2), BigInt::from(11));
        assert_eq!(stirling_second(4, 2), BigInt::from(7));
        assert_eq!(stirling_second(5, 3), BigInt::from(25));
        assert_eq!(stirling_second(0, 0), BigInt::one());
        assert_eq!(eulerian(3, 1), BigInt::from(4));
        assert_eq!((0..4).map(|k| eulerian(4, k)).collect::<Vec<_>>(), [1, 11, 11, 1].map(BigInt::from));
    }

    #[test]
    fn narayana_sums_to_catalan() {
        for n in 1..=10 {
            let at_one = narayana_poly(n)
                .eval(&crate::weightpoly::assignment([(Gen::Q, 1), (Gen::T, 1)]))
                .unwrap();
            assert_eq!(at_one, catalan(n));
        }
    }
}
