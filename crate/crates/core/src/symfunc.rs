//! Homogeneous symmetric functions over [`WeightPoly`], stored in the monomial basis.
//!
//! Products are computed by reading coefficients of partition-shaped
//! exponent vectors: the coefficient of `x^λ` in `f·g` is the sum over
//! splittings `λ = u + v` of `[x^u]f · [x^v]g`, and `[x^u]f` is the
//! coefficient of `m_{sort(u)}`. This is polynomial multiplication in
//! `deg f + deg g` variables restricted to the monomials that matter.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, IntPartition};
use crate::error::{Error, Result};
use crate::weightpoly::{Coeff, Gen, Monomial, Poly, RatPoly, WeightPoly};

/// Degree-homogeneous symmetric function in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    coeffs: BTreeMap<IntPartition, WeightPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    H,
    E,
    P,
    S,
    /// Ribbons span but are not a basis; only accepted where an index is given.
    R,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
            Basis::S => "s",
            Basis::R => "r",
        }
    }

    pub fn from_letter(s: &str) -> Option<Basis> {
        [Basis::M, Basis::H, Basis::E, Basis::P, Basis::S, Basis::R]
            .into_iter()
            .find(|b| b.letter() == s)
    }
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    /// Degree-0 element.
    pub fn scalar(c: WeightPoly) -> Self {
        let mut f = Self::zero(0);
        f.add_term(IntPartition::empty(), c);
        f
    }

    pub fn monomial(lambda: IntPartition, c: WeightPoly) -> Self {
        let mut f = Self::zero(lambda.size());
        f.add_term(lambda, c);
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &IntPartition) -> WeightPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in ascending lexicographic order of partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&IntPartition, &WeightPoly)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, lambda: IntPartition, c: WeightPoly) {
        assert_eq!(lambda.size(), self.degree, "partition size must match degree");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        entry.add_assign_ref(&c);
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &WeightPoly::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &WeightPoly::int(-1))
    }

    /// `self + k·other`.
    pub fn add_scaled(&self, other: &Self, k: &WeightPoly) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.mul_ref(k));
        }
        out
    }

    pub fn scale(&self, k: &WeightPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), c.mul_ref(k));
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&WeightPoly::int(k))
    }

    pub fn map_coeffs(&self, f: impl Fn(&WeightPoly) -> WeightPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// Substitute integers for some generators in every coefficient.
    pub fn specialize(&self, assignment: &BTreeMap<Gen, BigInt>) -> Self {
        self.map_coeffs(|c| c.specialize(assignment))
    }

    pub fn permute_gens(&self, map: impl Fn(Gen) -> Gen + Copy) -> Self {
        self.map_coeffs(|c| c.permute_gens(map))
    }

    /// Coefficient of the monomial `x^u` for an arbitrary exponent vector.
    pub fn coeff_of_exponents(&self, u: &[usize]) -> WeightPoly {
        self.coeff(&IntPartition::from_unsorted(u.to_vec()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.degree == 0 {
            return other.scale(&self.coeff(&IntPartition::empty()));
        }
        if other.degree == 0 {
            return self.scale(&other.coeff(&IntPartition::empty()));
        }
        let n = self.degree + other.degree;
        let mut out = Self::zero(n);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for lambda in IntPartition::all(n) {
            let parts = lambda.parts();
            let mut acc = WeightPoly::zero();
            let mut u = vec![0usize; parts.len()];
            splittings(parts, 0, self.degree, &mut u, &mut |u| {
                let a = IntPartition::from_unsorted(u.to_vec());
                let Some(fa) = self.coeffs.get(&a) else { return };
                let v: Vec<usize> = parts.iter().zip(u).map(|(p, x)| p - x).collect();
                let b = IntPartition::from_unsorted(v);
                if let Some(gb) = other.coeffs.get(&b) {
                    acc.add_assign_ref(&fa.mul_ref(gb));
                }
            });
            out.add_term(lambda, acc);
        }
        out
    }

    /// Coefficient of `xⁿ/n!` under the exponential specialization.
    pub fn exponential_specialization(&self) -> WeightPoly {
        self.coeff(&IntPartition::from_unsorted(vec![1; self.degree]))
    }

    /// Coefficients in the h, e or s basis, or in p when the expansion is integral.
    pub fn to_basis(&self, basis: Basis) -> Result<BTreeMap<IntPartition, WeightPoly>> {
        match basis {
            Basis::M => Ok(self.coeffs.clone()),
            Basis::R => Err(Error::InvalidInput("ribbon expansions are not unique".into())),
            Basis::S => Ok(self.to_schur()),
            Basis::H => Ok(self.to_h()),
            Basis::E => Ok(self.omega().to_h()),
            Basis::P => {
                let p = self.to_power_sums();
                let mut out = BTreeMap::new();
                for (l, c) in p.terms() {
                    match c.to_integral() {
                        Some(ci) => {
                            out.insert(l.clone(), ci);
                        }
                        None => return Err(Error::NonIntegral(p.to_string())),
                    }
                }
                Ok(out)
            }
        }
    }

    fn to_schur(&self) -> BTreeMap<IntPartition, WeightPoly> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        // Descending lex is a linear extension of dominance.
        for lambda in IntPartition::all(self.degree) {
            let b = rest.coeff(&lambda);
            if b.is_zero() {
                continue;
            }
            rest = rest.sub(&schur(&lambda).scale(&b));
            out.insert(lambda, b);
        }
        debug_assert!(rest.is_zero());
        out
    }

    fn to_h(&self) -> BTreeMap<IntPartition, WeightPoly> {
        let b = self.to_schur();
        let mut c: BTreeMap<IntPartition, WeightPoly> = BTreeMap::new();
        let mut order = IntPartition::all(self.degree);
        order.reverse();
        for lambda in &order {
            let mut v = b.get(lambda).cloned().unwrap_or_default();
            for (mu, cm) in &c {
                let k = kostka(lambda, mu);
                if !k.is_zero() {
                    v.sub_assign_ref(&cm.scale(&k));
                }
            }
            if !v.is_zero() {
                c.insert(lambda.clone(), v);
            }
        }
        c
    }

    /// Exact power-sum expansion with rational coefficients.
    pub fn to_power_sums(&self) -> PCombination {
        let mut rest: BTreeMap<IntPartition, RatPoly> =
            self.coeffs.iter().map(|(l, c)| (l.clone(), c.to_rational())).collect();
        let mut out = PCombination::zero(self.degree);
        let mut order = IntPartition::all(self.degree);
        order.reverse();
        for lambda in order {
            let Some(r) = rest.get(&lambda).cloned() else { continue };
            let p = power_sum(&lambda);
            let diag = BigRational::from_integer(p.coeff(&lambda).constant_term());
            let c = r.scale(&(BigRational::one() / diag));
            for (mu, pc) in p.terms() {
                let delta = c.scale(&BigRational::from_integer(pc.constant_term()));
                let entry = rest.entry(mu.clone()).or_default();
                entry.sub_assign_ref(&delta);
                if entry.is_zero() {
                    rest.remove(mu);
                }
            }
            out.add_term(lambda, c);
        }
        out
    }

    /// The involution sending `h_n` to `e_n`.
    pub fn omega(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, c) in self.to_h() {
            out = out.add_scaled(&elementary(&lambda), &c);
        }
        out
    }

    /// Schur positivity, with the first negative (partition, monomial) as witness.
    pub fn schur_positivity(&self) -> SchurPositivity {
        for (lambda, c) in self.to_schur() {
            if let Some((m, k)) = c.terms().find(|(_, k)| k.is_negative()) {
                return SchurPositivity {
                    positive: false,
                    witness: Some((lambda, *m, k.clone())),
                };
            }
        }
        SchurPositivity { positive: true, witness: None }
    }

    pub fn is_schur_positive(&self) -> bool {
        self.schur_positivity().positive
    }

    /// Render in a basis as e.g. `h_3 + 2h_21 + (lb + rb)h_111`.
    pub fn render_in(&self, basis: Basis) -> Result<String> {
        let terms = self.to_basis(basis)?;
        let entries = terms.iter().rev().map(|(l, c)| (format!("{}_{}", basis.letter(), l.subscript()), c));
        Ok(render_terms(entries))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<SymTermJson> = self
            .coeffs
            .iter()
            .rev()
            .map(|(l, c)| SymTermJson { partition: l.parts().to_vec(), coeff: c.to_string() })
            .collect();
        serde_json::to_value(SymFuncJson { degree: self.degree, basis: "m".into(), terms })
            .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let parsed: SymFuncJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if parsed.basis != "m" {
            return Err(Error::Parse(format!("unsupported basis {}", parsed.basis)));
        }
        let mut f = Self::zero(parsed.degree);
        for t in parsed.terms {
            let lambda = IntPartition::new(t.partition)?;
            if lambda.size() != parsed.degree {
                return Err(Error::Parse("partition size differs from degree".into()));
            }
            f.add_term(lambda, t.coeff.parse()?);
        }
        Ok(f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "{}", self.coeff(&IntPartition::empty()));
        }
        let entries = self.coeffs.iter().rev().map(|(l, c)| (format!("m_{}", l.subscript()), c));
        f.write_str(&render_terms(entries))
    }
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    basis: String,
    terms: Vec<SymTermJson>,
}

#[derive(Serialize, Deserialize)]
struct SymTermJson {
    partition: Vec<usize>,
    coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurPositivity {
    pub positive: bool,
    pub witness: Option<(IntPartition, Monomial, BigInt)>,
}

/// Join `(basis element, coefficient)` pairs as `c·b + …`.
pub fn render_terms<'a, C: Coeff + 'a>(entries: impl Iterator<Item = (String, &'a Poly<C>)>) -> String {
    let mut out = String::new();
    for (name, c) in entries {
        if c.is_zero() {
            continue;
        }
        let is_const = c.len() == 1 && c.terms().next().map(|(m, _)| *m == Monomial::one()).unwrap_or(false);
        let (neg, body) = if is_const {
            let k = c.constant_term();
            let abs = k.abs();
            let body = if abs.is_one() {
                name.clone()
            } else if abs.to_string().contains('/') {
                format!("{abs}*{name}")
            } else {
                format!("{abs}{name}")
            };
            (k.is_negative(), body)
        } else if c.len() == 1 {
            let (m, k) = c.terms().next().unwrap();
            let abs = k.abs();
            let body = if abs.is_one() { format!("{m}*{name}") } else { format!("{abs}*{m}*{name}") };
            (k.is_negative(), body)
        } else {
            (false, format!("({c})*{name}"))
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Visit every `u` with `0 ≤ u_i ≤ parts_i` and `Σu = target`.
fn splittings(parts: &[usize], i: usize, target: usize, u: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if i == parts.len() {
        if target == 0 {
            visit(u);
        }
        return;
    }
    let remaining: usize = parts[i + 1..].iter().sum();
    let lo = target.saturating_sub(remaining);
    for x in lo..=parts[i].min(target) {
        u[i] = x;
        splittings(parts, i + 1, target - x, u, visit);
    }
    u[i] = 0;
}

fn cache<K: Clone + Eq + std::hash::Hash, V: Clone>(
    cell: &'static OnceLock<Mutex<HashMap<K, V>>>,
    key: &K,
    compute: impl FnOnce() -> V,
) -> V {
    let map = cell.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().unwrap().get(key) {
        return v.clone();
    }
    let v = compute();
    map.lock().unwrap().insert(key.clone(), v.clone());
    v
}

/// `m_λ` with coefficient 1.
pub fn monomial_basis(lambda: &IntPartition) -> SymFunc {
    SymFunc::monomial(lambda.clone(), WeightPoly::one())
}

/// Number of words with the given letter content whose descent set is exactly `des`.
fn count_words_with_descents(content: &[usize], des: &[bool]) -> BigInt {
    fn rec(
        counts: &mut Vec<usize>,
        last: usize,
        pos: usize,
        des: &[bool],
        memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
    ) -> BigInt {
        if counts.iter().all(|&c| c == 0) {
            return BigInt::one();
        }
        let key = (counts.clone(), last);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for x in 0..counts.len() {
            if counts[x] == 0 {
                continue;
            }
            if pos > 0 {
                let is_descent = last > x;
                if is_descent != des[pos - 1] {
                    continue;
                }
            }
            counts[x] -= 1;
            total += rec(counts, x, pos + 1, des, memo);
            counts[x] += 1;
        }
        memo.insert(key, total.clone());
        total
    }
    let mut counts = content.to_vec();
    rec(&mut counts, 0, 0, des, &mut HashMap::new())
}

/// Ribbon Schur function `r_α` in the monomial basis.
pub fn ribbon(alpha: &Composition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<Composition, SymFunc>>> = OnceLock::new();
    cache(&CACHE, alpha, || {
        let n = alpha.size();
        let mut des = vec![false; n.saturating_sub(1)];
        for s in alpha.to_set() {
            des[s - 1] = true;
        }
        let mut f = SymFunc::zero(n);
        for mu in IntPartition::all(n) {
            let c = count_words_with_descents(mu.parts(), &des);
            f.add_term(mu, WeightPoly::constant(c));
        }
        f
    })
}

/// Kostka number: semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &IntPartition, mu: &IntPartition) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<(IntPartition, IntPartition), BigInt>>> = OnceLock::new();
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    let key = (lambda.clone(), mu.clone());
    cache(&CACHE, &key, || kostka_rec(lambda.parts(), mu.parts()))
}

fn kostka_rec(shape: &[usize], content: &[usize]) -> BigInt {
    let Some((&last, rest)) = content.split_last() else {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    if shape.len() > content.len() {
        return BigInt::zero();
    }
    // Remove a horizontal strip of size `last` holding the largest letter.
    let mut total = BigInt::zero();
    let mut inner = shape.to_vec();
    fn strips(shape: &[usize], i: usize, left: usize, inner: &mut Vec<usize>, rest: &[usize], total: &mut BigInt) {
        if i == shape.len() {
            if left == 0 {
                let trimmed: Vec<usize> = inner.iter().copied().filter(|&p| p > 0).collect();
                *total += kostka_rec(&trimmed, rest);
            }
            return;
        }
        let floor = shape.get(i + 1).copied().unwrap_or(0);
        for keep in floor..=shape[i] {
            let removed = shape[i] - keep;
            if removed > left {
                continue;
            }
            inner[i] = keep;
            strips(shape, i + 1, left - removed, inner, rest, total);
        }
        inner[i] = shape[i];
    }
    strips(shape, 0, last, &mut inner, rest, &mut total);
    total
}

pub fn schur(lambda: &IntPartition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<IntPartition, SymFunc>>> = OnceLock::new();
    cache(&CACHE, lambda, || {
        let mut f = SymFunc::zero(lambda.size());
        for mu in IntPartition::all(lambda.size()) {
            f.add_term(mu.clone(), WeightPoly::constant(kostka(lambda, &mu)));
        }
        f
    })
}

fn product_of(parts: &[usize], single: impl Fn(usize) -> SymFunc) -> SymFunc {
    let mut acc = SymFunc::scalar(WeightPoly::one());
    for &k in parts {
        acc = acc.mul(&single(k));
    }
    acc
}

pub fn complete(lambda: &IntPartition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<IntPartition, SymFunc>>> = OnceLock::new();
    cache(&CACHE, lambda, || {
        product_of(lambda.parts(), |k| {
            let mut f = SymFunc::zero(k);
            for mu in IntPartition::all(k) {
                f.add_term(mu, WeightPoly::one());
            }
            f
        })
    })
}

pub fn complete_n(n: usize) -> SymFunc {
    if n == 0 {
        return SymFunc::scalar(WeightPoly::one());
    }
    complete(&IntPartition::from_unsorted(vec![n]))
}

pub fn elementary(lambda: &IntPartition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<IntPartition, SymFunc>>> = OnceLock::new();
    cache(&CACHE, lambda, || {
        product_of(lambda.parts(), |k| monomial_basis(&IntPartition::from_unsorted(vec![1; k])))
    })
}

pub fn power_sum(lambda: &IntPartition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<IntPartition, SymFunc>>> = OnceLock::new();
    cache(&CACHE, lambda, || {
        product_of(lambda.parts(), |k| monomial_basis(&IntPartition::from_unsorted(vec![k])))
    })
}

/// m-expansion of a basis element; ribbons are indexed by compositions.
pub fn basis_to_monomial(basis: Basis, index: &[usize]) -> Result<SymFunc> {
    if basis == Basis::R {
        return Ok(ribbon(&Composition::new(index.to_vec())?));
    }
    let lambda = IntPartition::new(index.to_vec())?;
    Ok(match basis {
        Basis::M => monomial_basis(&lambda),
        Basis::H => complete(&lambda),
        Basis::E => elementary(&lambda),
        Basis::P => power_sum(&lambda),
        Basis::S => schur(&lambda),
        Basis::R => unreachable!(),
    })
}

/// Foulkes element `F_{n,k}`: sum of `r_α` over compositions of `n` with `k+1` parts.
pub fn foulkes(n: usize, k: usize) -> Result<SymFunc> {
    if n == 0 || k >= n {
        return Err(Error::InvalidInput(format!("F_{{{n},{k}}} needs 0 ≤ k ≤ n−1")));
    }
    Ok(RibbonSum::foulkes(n, k).to_sym())
}

/// Exact expansion `f = Σ_k a_k F_{n,k}`, or `None` when `f` is not in their span.
pub fn foulkes_expansion(f: &SymFunc) -> Result<Option<Vec<RatPoly>>> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    let parts = IntPartition::all(n);
    let cols: Vec<SymFunc> = (0..n).map(|k| foulkes(n, k)).collect::<Result<_>>()?;
    let mut rows: Vec<(Vec<BigRational>, RatPoly)> = parts
        .iter()
        .map(|l| {
            let row = cols.iter().map(|c| BigRational::from_integer(c.coeff(l).constant_term())).collect();
            (row, f.coeff(l).to_rational())
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else { continue };
        rows.swap(pivot_row, r);
        let inv = BigRational::one() / rows[pivot_row].0[col].clone();
        let (prow, prhs) = {
            let (row, rhs) = &rows[pivot_row];
            (row.iter().map(|x| x * &inv).collect::<Vec<_>>(), rhs.scale(&inv))
        };
        rows[pivot_row] = (prow.clone(), prhs.clone());
        for r in 0..rows.len() {
            if r == pivot_row || rows[r].0[col].is_zero() {
                continue;
            }
            let factor = rows[r].0[col].clone();
            for c in 0..n {
                rows[r].0[c] = &rows[r].0[c] - &factor * &prow[c];
            }
            rows[r].1.sub_assign_ref(&prhs.scale(&factor));
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|(_, rhs)| !rhs.is_zero()) {
        return Ok(None);
    }
    let mut out = vec![RatPoly::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        out[col] = rows[r].1.clone();
    }
    Ok(Some(out))
}

/// Formal linear combination of ribbons, multiplied by `r_α r_β = r_{α·β} + r_{α⊙β}`.
///
/// Ribbons are not linearly independent, so the coefficients depend on how
/// the combination was produced; [`RibbonSum::to_sym`] gives the actual function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonSum {
    degree: usize,
    terms: BTreeMap<Composition, WeightPoly>,
}

impl RibbonSum {
    pub fn zero(degree: usize) -> Self {
        RibbonSum { degree, terms: BTreeMap::new() }
    }

    pub fn scalar(c: WeightPoly) -> Self {
        let mut s = Self::zero(0);
        s.add_term(Composition::empty(), c);
        s
    }

    pub fn single(alpha: Composition, c: WeightPoly) -> Self {
        let mut s = Self::zero(alpha.size());
        s.add_term(alpha, c);
        s
    }

    pub fn foulkes(n: usize, k: usize) -> Self {
        let mut s = Self::zero(n);
        for alpha in Composition::with_length(n, k + 1) {
            s.add_term(alpha, WeightPoly::one());
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition) -> WeightPoly {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of compositions.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &WeightPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, alpha: Composition, c: WeightPoly) {
        assert_eq!(alpha.size(), self.degree, "composition size must match degree");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha.clone()).or_default();
        entry.add_assign_ref(&c);
        if entry.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &WeightPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.mul_ref(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.degree == 0 {
            return other.scale(&self.coeff(&Composition::empty()));
        }
        if other.degree == 0 {
            return self.scale(&other.coeff(&Composition::empty()));
        }
        let mut out = Self::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca.mul_ref(cb);
                out.add_term(a.concat(b), c.clone());
                out.add_term(a.near_concat(b), c);
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&WeightPoly) -> WeightPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), f(c));
        }
        out
    }

    pub fn to_sym(&self) -> SymFunc {
        if self.degree == 0 {
            return SymFunc::scalar(self.coeff(&Composition::empty()));
        }
        let mut out = SymFunc::zero(self.degree);
        for (a, c) in &self.terms {
            out = out.add_scaled(&ribbon(a), c);
        }
        out
    }
}

impl fmt::Display for RibbonSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.terms.iter().map(|(a, c)| (format!("r_{}", a.subscript()), c));
        f.write_str(&render_terms(entries))
    }
}

/// Rational combination of power sums `p_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PCombination {
    degree: usize,
    terms: BTreeMap<IntPartition, RatPoly>,
}

impl PCombination {
    pub fn zero(degree: usize) -> Self {
        PCombination { degree, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        let mut p = Self::zero(0);
        p.add_term(IntPartition::empty(), RatPoly::one());
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, &RatPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &IntPartition) -> RatPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: IntPartition, c: RatPoly) {
        assert_eq!(lambda.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        entry.add_assign_ref(&c);
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &RatPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.mul_ref(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(IntPartition::from_unsorted(parts), ca.mul_ref(cb));
            }
        }
        out
    }

    /// Monomial expansion; fails when a coefficient ends up non-integral.
    pub fn to_sym(&self) -> Result<SymFunc> {
        let mut acc: BTreeMap<IntPartition, RatPoly> = BTreeMap::new();
        for (l, c) in &self.terms {
            for (mu, k) in power_sum(l).terms() {
                let entry = acc.entry(mu.clone()).or_default();
                entry.add_assign_ref(&c.scale(&BigRational::from_integer(k.constant_term())));
            }
        }
        let mut out = SymFunc::zero(self.degree);
        for (mu, c) in acc {
            let ci = c.to_integral().ok_or_else(|| Error::NonIntegral(self.to_string()))?;
            out.add_term(mu, ci);
        }
        Ok(out)
    }
}

impl fmt::Display for PCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.terms.iter().rev().map(|(l, c)| (format!("p_{}", l.subscript()), c));
        f.write_str(&render_terms(entries))
    }
}

/// `g_m = Σ_{λ⊢m} p_λ / (2^{ℓ(λ)} z_λ)`.
pub fn g_element(m: usize) -> PCombination {
    let mut out = PCombination::zero(m);
    for lambda in IntPartition::all(m) {
        let denom = num_traits::pow(BigInt::from(2), lambda.len()) * lambda.z();
        out.add_term(lambda, RatPoly::constant(BigRational::new(BigInt::one(), denom)));
    }
    out
}

/// Series `Σ_{d=0}^{N} f_d` truncated above degree `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    comps: Vec<SymFunc>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { comps: (0..=order).map(SymFunc::zero).collect() }
    }

    pub fn scalar(order: usize, c: WeightPoly) -> Self {
        let mut s = Self::zero(order);
        s.comps[0] = SymFunc::scalar(c);
        s
    }

    pub fn one(order: usize) -> Self {
        Self::scalar(order, WeightPoly::one())
    }

    /// Components in degree order; missing ones are zero, extra ones are dropped.
    pub fn from_components(order: usize, comps: impl IntoIterator<Item = SymFunc>) -> Self {
        let mut s = Self::zero(order);
        for f in comps {
            if f.degree() <= order {
                s.comps[f.degree()] = s.comps[f.degree()].add(&f);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn component(&self, d: usize) -> &SymFunc {
        &self.comps[d]
    }

    pub fn components(&self) -> &[SymFunc] {
        &self.comps
    }

    pub fn add(&self, other: &Self) -> Self {
        TruncatedSeries { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TruncatedSeries { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, k: &WeightPoly) -> Self {
        TruncatedSeries { comps: self.comps.iter().map(|a| a.scale(k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.comps[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.comps[j].is_zero() {
                    continue;
                }
                out.comps[i + j] = out.comps[i + j].add(&self.comps[i].mul(&other.comps[j]));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `H(X) = Σ_k h_k X^k` truncated.
    pub fn complete_of(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for k in 0..=n {
            let hk = Self::from_components(n, [complete_n(k)]);
            out = out.add(&hk.mul(&power));
            power = power.mul(self);
        }
        out
    }

    /// First degree where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, SymFunc)> {
        self.comps
            .iter()
            .zip(&other.comps)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(d, (a, b))| (d, a.sub(b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> IntPartition {
        IntPartition::new(p.to_vec()).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn m(p: &[usize]) -> SymFunc {
        monomial_basis(&part(p))
    }

    #[test]
    fn ribbons_in_monomials() {
        assert_eq!(ribbon(&comp(&[2])), m(&[2]).add(&m(&[1, 1])));
        assert_eq!(ribbon(&comp(&[1, 1])), m(&[1, 1]));
        assert_eq!(schur(&part(&[2, 1])), m(&[2, 1]).add(&m(&[1, 1, 1]).scale_int(2)));
    }

    #[test]
    fn products() {
        let lhs = ribbon(&comp(&[2])).mul(&ribbon(&comp(&[1])));
        assert_eq!(lhs, ribbon(&comp(&[2, 1])).add(&ribbon(&comp(&[3]))));
        let h1 = complete(&part(&[1]));
        assert_eq!(h1.mul(&h1), m(&[2]).add(&m(&[1, 1]).scale_int(2)));
        let s1 = schur(&part(&[1]));
        assert_eq!(s1.mul(&s1), schur(&part(&[2])).add(&schur(&part(&[1, 1]))));
    }

    #[test]
    fn basis_changes() {
        let h11 = complete(&part(&[1, 1]));
        assert_eq!(h11, ribbon(&comp(&[2])).add(&ribbon(&comp(&[1, 1]))));
        let s = ribbon(&comp(&[2, 1])).to_basis(Basis::S).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[&part(&[2, 1])], WeightPoly::one());
        let p = complete(&part(&[2])).to_power_sums();
        assert_eq!(p.to_string(), "1/2*p_2 + 1/2*p_11");
        assert!(complete(&part(&[2])).to_basis(Basis::P).is_err());
        let e = complete(&part(&[2])).to_basis(Basis::E).unwrap();
        assert_eq!(e[&part(&[1, 1])], WeightPoly::one());
        assert_eq!(e[&part(&[2])], WeightPoly::int(-1));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(complete(&part(&[2])).omega(), m(&[1, 1]));
        let f = schur(&part(&[3, 1])).add(&complete(&part(&[2, 1, 1])).scale_int(3));
        assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn exponential_specialization_examples() {
        for n in 1..=5 {
            assert_eq!(complete_n(n).exponential_specialization(), WeightPoly::one());
        }
        assert_eq!(ribbon(&comp(&[2, 1])).exponential_specialization(), WeightPoly::int(2));
        assert_eq!(foulkes(3, 1).unwrap().exponential_specialization(), WeightPoly::int(4));
    }

    #[test]
    fn schur_positivity_witness() {
        let f = complete_n(2).sub(&elementary(&part(&[2])));
        let verdict = f.schur_positivity();
        assert!(!verdict.positive);
        let (lambda, _, c) = verdict.witness.unwrap();
        assert_eq!(lambda, part(&[1, 1]));
        assert_eq!(c, BigInt::from(-1));
        for alpha in Composition::all(4) {
            assert!(ribbon(&alpha).is_schur_positive());
        }
    }

    #[test]
    fn foulkes_elements() {
        assert_eq!(foulkes(3, 1).unwrap(), ribbon(&comp(&[2, 1])).add(&ribbon(&comp(&[1, 2]))));
        for n in 1..=5 {
            assert_eq!(foulkes(n, 0).unwrap(), complete_n(n));
        }
        assert!(foulkes(3, 3).is_err());
        let f = foulkes(4, 2).unwrap().scale_int(3).add(&foulkes(4, 0).unwrap());
        let coeffs = foulkes_expansion(&f).unwrap().unwrap();
        assert_eq!(coeffs[2].to_string(), "3");
        assert_eq!(coeffs[0].to_string(), "1");
        assert!(coeffs[1].is_zero());
    }

    #[test]
    fn g_elements() {
        assert_eq!(g_element(1).to_string(), "1/2*p_1");
        assert_eq!(g_element(2).to_string(), "1/4*p_2 + 1/8*p_11");
        let four = RatPoly::constant(BigRational::from_integer(4.into()));
        let two = RatPoly::constant(BigRational::from_integer(2.into()));
        let combo = g_element(2).scale(&four).add(&g_element(1).mul(&g_element(1)).scale(&two));
        assert_eq!(combo.to_string(), "p_2 + p_11");
        assert_eq!(combo.to_sym().unwrap(), complete_n(2).scale_int(2));
    }

    #[test]
    fn json_round_trip() {
        let f = schur(&part(&[2, 1])).scale(&"lb + 2*q".parse().unwrap());
        let v = f.to_json();
        assert_eq!(v["terms"][0]["partition"], serde_json::json!([2, 1]));
        assert_eq!(SymFunc::from_json(&v).unwrap(), f);
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&part(&[2, 1]), &part(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(kostka(&part(&[3, 2]), &part(&[2, 2, 1])), BigInt::from(2));
        assert_eq!(kostka(&part(&[2, 2]), &part(&[3, 1])), BigInt::zero());
    }
}
