//! Brute-force generating functions of labeled trees and symbolic checks of
//! the functional equations they satisfy.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::{factorial, next_permutation, Composition, IntPartition};
use crate::error::{Error, Result};
use crate::symfunc::{complete_n, foulkes, ribbon, RibbonSum, SymFunc, TruncatedSeries};
use crate::trees::{Step, TreeShape};
use crate::weightpoly::{AbgdExpr, Gen, Monomial, RatPoly, WeightPoly};

/// Largest degree computed without an explicit override.
pub const DEFAULT_MAX_DEGREE: usize = 6;

pub fn check_bound(n: usize, max_degree: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    if n > max_degree {
        return Err(Error::BoundExceeded { n, bound: max_degree });
    }
    Ok(())
}

type EdgeList = Vec<(usize, usize, bool)>;

fn exponents(edges: &EdgeList, word: &[u8]) -> [u16; 4] {
    let mut e = [0u16; 4];
    for &(a, b, is_left) in edges {
        let asc = word[a] <= word[b];
        e[match (is_left, asc) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        }] += 1;
    }
    e
}

fn counts_to_poly(counts: HashMap<[u16; 4], u64>) -> WeightPoly {
    WeightPoly::from_counts(counts.into_iter().map(|([a, b, c, d], k)| (Monomial::weight(a, b, c, d), k)))
}

/// Weight sum over the given shapes with every rearrangement of `content` as inorder word.
fn content_sum(edge_lists: &[EdgeList], content: &[u8]) -> WeightPoly {
    let mut word = content.to_vec();
    word.sort_unstable();
    let mut counts: HashMap<[u16; 4], u64> = HashMap::new();
    loop {
        for edges in edge_lists {
            *counts.entry(exponents(edges, &word)).or_insert(0) += 1;
        }
        if !next_permutation(&mut word) {
            break;
        }
    }
    counts_to_poly(counts)
}

fn content_of(mu: &IntPartition) -> Vec<u8> {
    mu.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i as u8 + 1, k))
        .collect()
}

fn sym_from_shapes(n: usize, shapes: &[TreeShape]) -> SymFunc {
    let edge_lists: Vec<EdgeList> = shapes.iter().map(|s| s.edges()).collect();
    let parts = IntPartition::all(n);
    let coeffs: Vec<(IntPartition, WeightPoly)> = parts
        .into_par_iter()
        .map(|mu| {
            let c = content_sum(&edge_lists, &content_of(&mu));
            (mu, c)
        })
        .collect();
    let mut f = SymFunc::zero(n);
    for (mu, c) in coeffs {
        f.add_term(mu, c);
    }
    f
}

/// Degree-`n` part of the tree generating function, in the monomial basis.
pub fn compute_g(n: usize, max_degree: usize) -> Result<SymFunc> {
    check_bound(n, max_degree)?;
    Ok(sym_from_shapes(n, &TreeShape::all(n)))
}

/// Restriction of [`compute_g`] to trees with the given canopy.
pub fn compute_g_canopy(n: usize, canopy: &[Step], max_degree: usize) -> Result<SymFunc> {
    check_bound(n, max_degree)?;
    let shapes = TreeShape::with_canopy(n, canopy)?;
    Ok(sym_from_shapes(n, &shapes))
}

/// Weight sum over standard labeled trees on `n` nodes.
pub fn compute_b(n: usize, max_degree: usize) -> Result<WeightPoly> {
    check_bound(n, max_degree)?;
    let edge_lists: Vec<EdgeList> = TreeShape::all(n).iter().map(|s| s.edges()).collect();
    let content: Vec<u8> = (1..=n as u8).collect();
    Ok(content_sum(&edge_lists, &content))
}

pub fn compute_b_abgd(n: usize, max_degree: usize) -> Result<AbgdExpr> {
    AbgdExpr::collect(&compute_b(n, max_degree)?)
}

/// Labeling sums over all of `[n]^n`, keyed by exponent vector `(e_1, …, e_n)`.
pub fn raw_exponent_sums(n: usize) -> BTreeMap<Vec<usize>, WeightPoly> {
    let edge_lists: Vec<EdgeList> = TreeShape::all(n).iter().map(|s| s.edges()).collect();
    let mut out = BTreeMap::new();
    let total = n.pow(n as u32);
    for code in 0..total {
        let mut word = vec![0u8; n];
        let mut c = code;
        for slot in word.iter_mut() {
            *slot = (c % n) as u8 + 1;
            c /= n;
        }
        let mut key = vec![0usize; n];
        for &x in &word {
            key[x as usize - 1] += 1;
        }
        let mut counts = HashMap::new();
        for edges in &edge_lists {
            *counts.entry(exponents(edges, &word)).or_insert(0) += 1;
        }
        out.entry(key).or_insert_with(WeightPoly::zero).add_assign_ref(&counts_to_poly(counts));
    }
    out
}

/// True when the `[n]^n` labeling sums are constant on permutation orbits of exponent vectors.
pub fn raw_sums_are_symmetric(n: usize) -> bool {
    let sums = raw_exponent_sums(n);
    let mut by_orbit: BTreeMap<Vec<usize>, &WeightPoly> = BTreeMap::new();
    for (key, v) in &sums {
        let mut sorted = key.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(prev) = by_orbit.insert(sorted, v) {
            if prev != v {
                return false;
            }
        }
    }
    true
}

/// `G` truncated at degree `n`, with the zero constant term.
pub fn g_series(order: usize, max_degree: usize) -> Result<TruncatedSeries> {
    let comps = (1..=order).map(|n| compute_g(n, max_degree)).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::from_components(order, comps))
}

/// Outcome of a degree-by-degree identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub degrees_checked: usize,
    /// First failing degree and the nonzero difference there.
    pub counterexample: Option<(usize, String)>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    fn compare(name: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        IdentityReport {
            name: name.into(),
            degrees_checked: lhs.order(),
            counterexample: lhs.first_difference(rhs).map(|(d, diff)| {
                let first = diff.terms().next().map(|(mu, c)| format!("m_{}: {c}", mu.subscript()));
                (d, first.unwrap_or_default())
            }),
        }
    }
}

fn gen(g: Gen) -> WeightPoly {
    WeightPoly::gen(g)
}

fn one_plus(series: &TruncatedSeries, k: &WeightPoly) -> TruncatedSeries {
    TruncatedSeries::one(series.order()).add(&series.scale(k))
}

/// Numerator, `H(X)` and denominator of the product functional equation.
pub fn functional_equation_parts(g: &TruncatedSeries) -> [TruncatedSeries; 3] {
    let n = g.order();
    let (lb, l, rb, r) = (gen(Gen::Lb), gen(Gen::L), gen(Gen::Rb), gen(Gen::R));
    let numer = one_plus(g, &lb).mul(&one_plus(g, &rb));
    let slope = lb.mul_ref(&rb) - l.mul_ref(&r);
    let shift = lb.clone() + rb.clone() - l.clone() - r.clone();
    let x = g.scale(&slope).add(&TruncatedSeries::scalar(n, shift));
    let denom = one_plus(g, &l).mul(&one_plus(g, &r));
    [numer, x.complete_of(), denom]
}

pub fn verify_g_functional_equation(order: usize, max_degree: usize) -> Result<Vec<IdentityReport>> {
    let g = g_series(order, max_degree)?;
    let [numer, hx, denom] = functional_equation_parts(&g);
    let rhs = hx.mul(&denom);
    let main = IdentityReport::compare("product functional equation", &numer, &rhs);
    // With lb = l and rb = r the argument of H vanishes and both sides collapse.
    let collapse = |s: &TruncatedSeries| {
        let comps: Vec<SymFunc> = s
            .components()
            .iter()
            .map(|f| f.map_coeffs(|c| c.substitute(Gen::Lb, &gen(Gen::L)).substitute(Gen::Rb, &gen(Gen::R))))
            .collect();
        TruncatedSeries::from_components(s.order(), comps)
    };
    let degenerate = IdentityReport::compare("degenerate functional equation", &collapse(&numer), &collapse(&rhs));
    let h_trivial = IdentityReport::compare("degenerate H argument vanishes", &collapse(&hx), &TruncatedSeries::one(order));
    Ok(vec![main, degenerate, h_trivial])
}

/// EGF coefficients `B_n / n!` checked against the exponential functional equation.
pub fn verify_b_functional_equation(order: usize, max_degree: usize) -> Result<IdentityReport> {
    let mut b = vec![RatPoly::zero()];
    for n in 1..=order {
        let bn = compute_b(n, max_degree)?.to_rational();
        b.push(bn.scale(&BigRational::new(BigInt::one(), factorial(n))));
    }
    let mul = |a: &[RatPoly], c: &[RatPoly]| -> Vec<RatPoly> {
        let mut out = vec![RatPoly::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                out[i + j].add_assign_ref(&a[i].mul_ref(&c[j]));
            }
        }
        out
    };
    let rat = |g: Gen| WeightPoly::gen(g).to_rational();
    let one_plus = |k: &RatPoly| -> Vec<RatPoly> {
        let mut v: Vec<RatPoly> = b.iter().map(|c| c.mul_ref(k)).collect();
        v[0] = RatPoly::one();
        v
    };
    let (lb, l, rb, r) = (rat(Gen::Lb), rat(Gen::L), rat(Gen::Rb), rat(Gen::R));
    let lhs = mul(&one_plus(&lb), &one_plus(&rb));
    // exp(X x) with X = slope·B + shift, as a series in x.
    let slope = lb.mul_ref(&rb) - l.mul_ref(&r);
    let shift = lb.clone() + rb.clone() - l.clone() - r.clone();
    let mut xx = vec![RatPoly::zero(); order + 1];
    for i in 0..order {
        // x·X: degree i+1 gets X_i.
        xx[i + 1] = if i == 0 { shift.clone() } else { b[i].mul_ref(&slope) };
    }
    let mut exp = vec![RatPoly::zero(); order + 1];
    exp[0] = RatPoly::one();
    let mut power = exp.clone();
    for k in 1..=order {
        power = mul(&power, &xx);
        let inv = BigRational::new(BigInt::one(), factorial(k));
        for d in 0..=order {
            exp[d].add_assign_ref(&power[d].scale(&inv));
        }
    }
    let rhs = mul(&mul(&exp, &one_plus(&l)), &one_plus(&r));
    let counterexample = (0..=order).find(|&d| lhs[d] != rhs[d]).map(|d| (d, (lhs[d].clone() - rhs[d].clone()).to_string()));
    Ok(IdentityReport { name: "exponential functional equation".into(), degrees_checked: order, counterexample })
}

fn ribbon_parameters(g: &TruncatedSeries) -> (TruncatedSeries, TruncatedSeries) {
    let n = g.order();
    let (lb, l, rb, r) = (gen(Gen::Lb), gen(Gen::L), gen(Gen::Rb), gen(Gen::R));
    let s = g.scale(&lb.mul_ref(&rb)).add(&TruncatedSeries::scalar(n, lb + rb));
    let t = g.scale(&l.mul_ref(&r)).add(&TruncatedSeries::scalar(n, l + r));
    (s, t)
}

/// `Σ_α s^{|α|-ℓ(α)} t^{ℓ(α)-1} r_α` truncated, grouping compositions by length.
pub fn ribbon_recursion_rhs(g: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = g.order();
    let (s, t) = ribbon_parameters(g);
    let mut s_pow = vec![TruncatedSeries::one(n)];
    let mut t_pow = vec![TruncatedSeries::one(n)];
    for k in 1..n {
        s_pow.push(s_pow[k - 1].mul(&s));
        t_pow.push(t_pow[k - 1].mul(&t));
    }
    let mut rhs = TruncatedSeries::zero(n);
    for m in 1..=n {
        for len in 1..=m {
            let f = TruncatedSeries::from_components(n, [foulkes(m, len - 1)?]);
            rhs = rhs.add(&s_pow[m - len].mul(&t_pow[len - 1]).mul(&f));
        }
    }
    Ok(rhs)
}

pub fn verify_ribbon_functional_equation(order: usize, max_degree: usize) -> Result<IdentityReport> {
    let g = g_series(order, max_degree)?;
    let rhs = ribbon_recursion_rhs(&g)?;
    Ok(IdentityReport::compare("ribbon functional equation", &g, &rhs))
}

/// Truncated series of formal ribbon combinations, degree 0 holding a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonSeries {
    comps: Vec<RibbonSum>,
}

impl RibbonSeries {
    pub fn zero(order: usize) -> Self {
        RibbonSeries { comps: (0..=order).map(RibbonSum::zero).collect() }
    }

    pub fn scalar(order: usize, c: WeightPoly) -> Self {
        let mut s = Self::zero(order);
        s.comps[0] = RibbonSum::scalar(c);
        s
    }

    pub fn order(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn component(&self, d: usize) -> &RibbonSum {
        &self.comps[d]
    }

    pub fn set_component(&mut self, d: usize, f: RibbonSum) {
        assert_eq!(f.degree(), d);
        self.comps[d] = f;
    }

    pub fn add(&self, other: &Self) -> Self {
        RibbonSeries { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, k: &WeightPoly) -> Self {
        RibbonSeries { comps: self.comps.iter().map(|a| a.scale(k)).collect() }
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
}

/// Formal ribbon expansion of `G` obtained by iterating the ribbon recursion
/// and multiplying ribbons by concatenation and near-concatenation.
pub fn ribbon_recursion_formal(order: usize) -> RibbonSeries {
    let (lb, l, rb, r) = (gen(Gen::Lb), gen(Gen::L), gen(Gen::Rb), gen(Gen::R));
    let mut g = RibbonSeries::zero(order);
    for n in 1..=order {
        let s = g.scale(&lb.mul_ref(&rb)).add(&RibbonSeries::scalar(order, lb.clone() + rb.clone()));
        let t = g.scale(&l.mul_ref(&r)).add(&RibbonSeries::scalar(order, l.clone() + r.clone()));
        let mut total = RibbonSum::zero(n);
        for alpha in (1..=n).flat_map(Composition::all) {
            let (m, len) = (alpha.size(), alpha.len());
            let factor = pow_series(&s, m - len).mul(&pow_series(&t, len - 1));
            let piece = factor.component(n - m).mul(&RibbonSum::single(alpha, WeightPoly::one()));
            total = total.add(&piece);
        }
        g.set_component(n, total);
    }
    g
}

fn pow_series(s: &RibbonSeries, k: usize) -> RibbonSeries {
    let mut acc = RibbonSeries::scalar(s.order(), WeightPoly::one());
    for _ in 0..k {
        acc = acc.mul(s);
    }
    acc
}

/// Formal ribbon sum with coefficients collected into α/β/γ/δ form.
pub fn collect_ribbons(f: &RibbonSum) -> Result<BTreeMap<Composition, AbgdExpr>> {
    f.terms().map(|(a, c)| Ok((a.clone(), AbgdExpr::collect(c)?))).collect()
}

/// Render as `δ r_11 + β r_2`, parenthesizing multi-term coefficients.
pub fn render_abgd_ribbons(terms: &BTreeMap<Composition, AbgdExpr>) -> String {
    let mut parts = Vec::new();
    for (alpha, c) in terms {
        if c.is_zero() {
            continue;
        }
        let name = format!("r_{}", alpha.subscript());
        let body = c.to_string();
        let n_terms = c.terms().count();
        parts.push(if body == "1" {
            name
        } else if n_terms == 1 {
            format!("{body} {name}")
        } else {
            format!("({body}) {name}")
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Parse the rendering of [`render_abgd_ribbons`]; whitespace is optional.
pub fn parse_abgd_ribbons(s: &str) -> Result<BTreeMap<Composition, AbgdExpr>> {
    let bad = || Error::Parse(format!("ribbon expression {s:?}"));
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == '+' && depth == 0 {
            terms.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    terms.push(cur);
    let mut out: BTreeMap<Composition, AbgdExpr> = BTreeMap::new();
    for term in terms {
        let term = term.trim();
        let idx = term.rfind("r_").ok_or_else(bad)?;
        let (coef, name) = term.split_at(idx);
        let sub = &name[2..];
        let parts: Vec<usize> = if sub.contains(',') {
            sub.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            sub.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        let alpha = Composition::new(parts)?;
        let coef = coef.trim().trim_end_matches('*').trim();
        let coef = coef.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coef);
        let expr: AbgdExpr = if coef.is_empty() { "1".parse()? } else { coef.parse()? };
        let entry = out.entry(alpha).or_default();
        for (m, c) in expr.terms() {
            entry.add_term(*m, c.clone());
        }
    }
    Ok(out)
}

/// Expand collected ribbon coefficients back into a formal ribbon sum.
pub fn expand_abgd_ribbons(n: usize, terms: &BTreeMap<Composition, AbgdExpr>) -> RibbonSum {
    let mut out = RibbonSum::zero(n);
    for (a, c) in terms {
        out.add_term(a.clone(), c.expand());
    }
    out
}

/// `A_n(s, t) = Σ_{α ⊨ n} s^{n-ℓ(α)} t^{ℓ(α)-1} r_α` as a formal ribbon sum.
pub fn eulerian_series(n: usize) -> RibbonSum {
    let (s, t) = (gen(Gen::S), gen(Gen::T));
    let mut out = RibbonSum::zero(n);
    for alpha in Composition::all(n) {
        let c = s.pow((n - alpha.len()) as u32).mul_ref(&t.pow(alpha.len() as u32 - 1));
        out.add_term(alpha, c);
    }
    out
}

/// `H(s - t)(1 + tA) = 1 + sA` through the given degree.
pub fn verify_macmahon(order: usize) -> IdentityReport {
    let (s, t) = (gen(Gen::S), gen(Gen::T));
    let a = TruncatedSeries::from_components(order, (1..=order).map(|n| eulerian_series(n).to_sym()));
    let z = s.clone() - t.clone();
    let mut h = TruncatedSeries::zero(order);
    for k in 0..=order {
        h = h.add(&TruncatedSeries::from_components(order, [complete_n(k).scale(&z.pow(k as u32))]));
    }
    let lhs = h.mul(&one_plus(&a, &t));
    let rhs = one_plus(&a, &s);
    IdentityReport::compare("eulerian functional equation", &lhs, &rhs)
}

/// Weight sums of trees keyed by their inorder word, one map per degree.
#[derive(Clone, Debug, Default)]
pub struct NoncommSeries {
    by_word: HashMap<Vec<u8>, WeightPoly>,
    max_len: usize,
}

impl NoncommSeries {
    /// Every word of length up to `order` over the alphabet `[order]`.
    pub fn brute_force(order: usize) -> Self {
        let mut by_word = HashMap::new();
        for n in 1..=order {
            let edge_lists: Vec<EdgeList> = TreeShape::all(n).iter().map(|s| s.edges()).collect();
            for word in words(n, order) {
                let mut counts = HashMap::new();
                for edges in &edge_lists {
                    *counts.entry(exponents(edges, &word)).or_insert(0) += 1;
                }
                by_word.insert(word, counts_to_poly(counts));
            }
        }
        NoncommSeries { by_word, max_len: order }
    }

    pub fn coeff(&self, word: &[u8]) -> WeightPoly {
        self.by_word.get(word).cloned().unwrap_or_default()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Coefficient of `x_w` in `Σ_u x_u(s, t)` with `s, t` built from this series.
    pub fn substituted_coeff(&self, w: &[u8]) -> WeightPoly {
        let (lb, l, rb, r) = (gen(Gen::Lb), gen(Gen::L), gen(Gen::Rb), gen(Gen::R));
        let s0 = lb.clone() + rb.clone();
        let t0 = l.clone() + r.clone();
        let s1 = lb.mul_ref(&rb);
        let t1 = l.mul_ref(&r);
        let n = w.len();
        // best[i]: sum over factorizations whose last chosen letter is at position i.
        let mut acc = vec![WeightPoly::zero(); n];
        acc[0] = WeightPoly::one();
        for j in 1..n {
            let mut total = WeightPoly::zero();
            for i in 0..j {
                if acc[i].is_zero() {
                    continue;
                }
                let asc = w[i] <= w[j];
                let link = if j == i + 1 {
                    if asc { s0.clone() } else { t0.clone() }
                } else {
                    let gap = self.coeff(&w[i + 1..j]);
                    if gap.is_zero() {
                        continue;
                    }
                    gap.mul_ref(if asc { &s1 } else { &t1 })
                };
                total.add_assign_ref(&acc[i].mul_ref(&link));
            }
            acc[j] = total;
        }
        acc[n - 1].clone()
    }

    /// First word where the noncommutative identity fails.
    pub fn verify(&self) -> Option<Vec<u8>> {
        let mut keys: Vec<&Vec<u8>> = self.by_word.keys().collect();
        keys.sort();
        keys.into_iter().find(|w| self.substituted_coeff(w) != self.by_word[*w]).cloned()
    }

    /// Forget word order: bucket words of length `n` by content.
    pub fn abelianize(&self, n: usize) -> SymFunc {
        let mut f = SymFunc::zero(n);
        for (w, c) in &self.by_word {
            if w.len() != n {
                continue;
            }
            let mut content = vec![0usize; self.max_len];
            for &x in w {
                content[x as usize - 1] += 1;
            }
            let sorted = IntPartition::from_unsorted(content.clone());
            // Each m_μ coefficient equals the coefficient of x^μ in sorted position.
            let mut desc = content.clone();
            desc.sort_unstable_by(|a, b| b.cmp(a));
            if content == desc {
                f.add_term(sorted, c.clone());
            }
        }
        f
    }
}

fn words(n: usize, alphabet: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(alphabet.pow(n as u32));
    let mut w = vec![1u8; n];
    loop {
        out.push(w.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (w[i] as usize) < alphabet {
                w[i] += 1;
                for x in w.iter_mut().skip(i + 1) {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// The three parameter symmetries and the ω identity at degree `n`.
pub fn symmetry_checks(g: &SymFunc) -> Vec<(String, bool)> {
    let swap_bars = |x: Gen| match x {
        Gen::Lb => Gen::Rb,
        Gen::Rb => Gen::Lb,
        other => other,
    };
    let swap_plain = |x: Gen| match x {
        Gen::L => Gen::R,
        Gen::R => Gen::L,
        other => other,
    };
    let swap_bar_plain = |x: Gen| match x {
        Gen::Lb => Gen::L,
        Gen::L => Gen::Lb,
        Gen::Rb => Gen::R,
        Gen::R => Gen::Rb,
        other => other,
    };
    vec![
        ("swap lb and rb".into(), g.permute_gens(swap_bars) == *g),
        ("swap l and r".into(), g.permute_gens(swap_plain) == *g),
        ("omega swaps barred and plain".into(), g.omega() == g.permute_gens(swap_bar_plain)),
    ]
}

/// Specialize and check that the result has the given value at each listed parameter tuple.
pub fn b_specialization(n: usize, point: [i64; 4], max_degree: usize) -> Result<BigInt> {
    compute_b(n, max_degree)?.eval(&crate::weightpoly::weight_point(point[0], point[1], point[2], point[3]))
}

/// The degree-`n` ribbon coefficient sum at all parameters 1, per composition.
pub fn all_ones(f: &RibbonSum) -> BTreeMap<Composition, BigInt> {
    let ones = crate::weightpoly::weight_point(1, 1, 1, 1);
    f.terms().map(|(a, c)| (a.clone(), c.eval(&ones).unwrap_or_else(|_| BigInt::zero()))).collect()
}

/// m-level function of a formal sum.
pub fn ribbon_sum_to_sym(f: &RibbonSum) -> SymFunc {
    f.to_sym()
}

/// Single ribbon helper used in checks.
pub fn single_ribbon(parts: &[usize]) -> Result<SymFunc> {
    Ok(ribbon(&Composition::new(parts.to_vec())?))
}
