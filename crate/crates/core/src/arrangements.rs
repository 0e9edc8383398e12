//! Region counts of Catalan-type deformations of the braid arrangement and
//! the symmetric functions describing the symmetric-group actions on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{
    binomial, catalan, factorial, fuss_catalan, motzkin_table, stirling_second, Composition, DyckPath, IntPartition,
    Permutation,
};
use crate::error::{Error, Result};
use crate::genfun::{compute_b_abgd, compute_g};
use crate::symfunc::{complete, foulkes, foulkes_expansion, g_element, PCombination, RibbonSum, SymFunc};
use crate::trees::{LabeledTree, TreeShape};
use crate::weightpoly::{weight_point, AbgdExpr, Gen, RatPoly, WeightPoly, SEMIORDER_POINT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrangementKind {
    Braid,
    Catalan,
    Shi,
    Linial,
    Semiorder,
    PSemiorder(usize),
    PCatalan(usize),
}

impl ArrangementKind {
    /// Point `(λ̄, λ, ρ̄, ρ)` at which `B_n` counts the regions, when one exists
    /// with integer coordinates.
    pub fn weight_point(self) -> Option<[i64; 4]> {
        match self {
            ArrangementKind::Braid => Some([1, 1, 0, 0]),
            ArrangementKind::Catalan => Some([1, 1, 1, 1]),
            ArrangementKind::Shi => Some([1, 0, 1, 1]),
            ArrangementKind::Linial => Some([1, 0, 1, 0]),
            _ => None,
        }
    }

    fn check(self) -> Result<Self> {
        match self {
            ArrangementKind::PSemiorder(0) | ArrangementKind::PCatalan(0) => {
                Err(Error::InvalidInput("the parameter p must be at least 1".into()))
            }
            k => Ok(k),
        }
    }
}

impl fmt::Display for ArrangementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementKind::Braid => write!(f, "braid"),
            ArrangementKind::Catalan => write!(f, "catalan"),
            ArrangementKind::Shi => write!(f, "shi"),
            ArrangementKind::Linial => write!(f, "linial"),
            ArrangementKind::Semiorder => write!(f, "semiorder"),
            ArrangementKind::PSemiorder(p) => write!(f, "p_semiorder({p})"),
            ArrangementKind::PCatalan(p) => write!(f, "p_catalan({p})"),
        }
    }
}

impl FromStr for ArrangementKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let param = |prefix: &str| -> Option<Result<usize>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.trim().parse().map_err(|_| Error::Parse(format!("parameter in {s:?}"))))
        };
        let kind = match s.as_str() {
            "braid" => ArrangementKind::Braid,
            "catalan" => ArrangementKind::Catalan,
            "shi" => ArrangementKind::Shi,
            "linial" => ArrangementKind::Linial,
            "semiorder" => ArrangementKind::Semiorder,
            _ => {
                if let Some(p) = param("p_semiorder") {
                    ArrangementKind::PSemiorder(p?)
                } else if let Some(p) = param("p_catalan") {
                    ArrangementKind::PCatalan(p?)
                } else {
                    return Err(Error::Parse(format!("unknown arrangement {s:?}")));
                }
            }
        };
        kind.check()
    }
}

/// `Σ_k C(n,k) (k+1)^{n−1} / 2^n`.
pub fn linial_regions(n: usize) -> BigInt {
    let sum: BigInt = (0..=n).map(|k| binomial(n, k) * BigInt::from(k + 1).pow(n as u32 - 1)).sum();
    crate::combinatorics::exact_div(sum, BigInt::from(2).pow(n as u32))
}

/// Regions of the `p`-semiorder arrangement from `Σ r_m x^m/m! = C_p(1 − e^{−x})`.
pub fn p_semiorder_regions(n: usize, p: usize) -> BigInt {
    (1..=n)
        .map(|k| {
            let term = fuss_catalan(k, p) * factorial(k) * stirling_second(n, k);
            if (n - k).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Number of regions, using `B_n` at the semiorder point for the semiorder
/// arrangement (hence bounded by `max_degree`) and closed forms otherwise.
pub fn region_count_bounded(kind: ArrangementKind, n: usize, max_degree: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    Ok(match kind.check()? {
        ArrangementKind::Braid => factorial(n),
        ArrangementKind::Catalan => factorial(n) * catalan(n),
        ArrangementKind::Shi => BigInt::from(n + 1).pow(n as u32 - 1),
        ArrangementKind::Linial => linial_regions(n),
        ArrangementKind::Semiorder => compute_b_abgd(n, max_degree)?.eval(SEMIORDER_POINT),
        ArrangementKind::PSemiorder(p) => p_semiorder_regions(n, p),
        ArrangementKind::PCatalan(p) => factorial(n) * fuss_catalan(n, p),
    })
}

pub fn region_count(kind: ArrangementKind, n: usize) -> Result<BigInt> {
    region_count_bounded(kind, n, crate::genfun::DEFAULT_MAX_DEGREE)
}

/// `G_n` at an integer point `(λ̄, λ, ρ̄, ρ)`.
pub fn g_at(n: usize, point: [i64; 4], max_degree: usize) -> Result<SymFunc> {
    Ok(compute_g(n, max_degree)?.specialize(&weight_point(point[0], point[1], point[2], point[3])))
}

/// `G_n` at `α = γ = δ = 1, β = 2`.
pub fn g_at_semiorder(n: usize, max_degree: usize) -> Result<SymFunc> {
    let g = compute_g(n, max_degree)?;
    let mut out = SymFunc::zero(n);
    for (lambda, c) in g.terms() {
        out.add_term(lambda.clone(), WeightPoly::constant(AbgdExpr::collect(c)?.eval(SEMIORDER_POINT)));
    }
    Ok(out)
}

fn int(k: &BigInt) -> WeightPoly {
    WeightPoly::constant(k.clone())
}

/// `M_{m,p}` for `m ≤ n` from `Σ_m M_{m,p} C(n−1, m−1) = C_{n,p}`; index 0 is unused.
pub fn p_motzkin_table(n: usize, p: usize) -> Vec<BigInt> {
    let mut m = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        let lower: BigInt = (1..k).map(|j| &m[j] * binomial(k - 1, j - 1)).sum();
        m[k] = fuss_catalan(k, p) - lower;
    }
    m
}

/// `M_{m,p}` by counting `(p+1)`-ary trees directly: every node with a last
/// child has another child too.
pub fn p_motzkin_by_trees(n: usize, p: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        // (1 + F)^{p+1} at degree k−1, with F known below degree k.
        let mut power = vec![BigInt::zero(); k];
        power[0] = BigInt::one();
        for _ in 0..=p {
            let mut next = power.clone();
            for (i, pi) in power.iter().enumerate() {
                for j in 1..k - i {
                    next[i + j] += pi * &f[j];
                }
            }
            power = next;
        }
        f[k] = power[k - 1].clone() - if k >= 2 { f[k - 1].clone() } else { BigInt::zero() };
    }
    f
}

/// `Σ_{α ⊨ n} coeff(ℓ(α)) h_α`.
fn h_by_length(n: usize, coeff: &[BigInt]) -> SymFunc {
    let mut out = SymFunc::zero(n);
    for alpha in Composition::all(n) {
        out = out.add_scaled(&complete(&alpha.sorted()), &int(&coeff[alpha.len()]));
    }
    out
}

/// Frobenius characteristic of the semiorder action in three forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiorderFrobenius {
    pub n: usize,
    pub h_form: SymFunc,
    /// Coefficient of `r_β` depends only on `ℓ(β)`.
    pub ribbon_form: RibbonSum,
    /// `a_j` multiplies `F_{n, j−1}`, for `j = 1..=n`.
    pub foulkes_coeffs: Vec<BigInt>,
}

impl SemiorderFrobenius {
    pub fn foulkes_form(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.n);
        for (j, a) in self.foulkes_coeffs.iter().enumerate() {
            out = out.add_scaled(&foulkes(self.n, j)?, &int(a));
        }
        Ok(out)
    }
}

fn frobenius_from_table(n: usize, mot: &[BigInt]) -> SemiorderFrobenius {
    let by_length = |len: usize| -> BigInt { (0..=n - len).map(|k| binomial(n - len, k) * &mot[n - k]).sum() };
    let mut ribbon_form = RibbonSum::zero(n);
    for beta in Composition::all(n) {
        let c = by_length(beta.len());
        ribbon_form.add_term(beta, int(&c));
    }
    SemiorderFrobenius { n, h_form: h_by_length(n, mot), ribbon_form, foulkes_coeffs: (1..=n).map(by_length).collect() }
}

pub fn semiorder_frobenius(n: usize) -> Result<SemiorderFrobenius> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    Ok(frobenius_from_table(n, &motzkin_table(n)))
}

/// Degree-`n` part of `M_p(H − 1)`.
pub fn p_semiorder_frobenius(n: usize, p: usize) -> Result<SemiorderFrobenius> {
    if n == 0 || p == 0 {
        return Err(Error::InvalidInput("n and p must be at least 1".into()));
    }
    Ok(frobenius_from_table(n, &p_motzkin_table(n, p)))
}

/// `Σ_T q^{right edges} h_{typ(T)}` over shapes on `n` nodes.
pub fn linial_h_expansion(n: usize) -> SymFunc {
    let q = WeightPoly::gen(Gen::Q);
    let mut out = SymFunc::zero(n);
    for t in TreeShape::all(n) {
        out = out.add_scaled(&complete(&t.typ().sorted()), &q.pow(t.right_edges() as u32));
    }
    out
}

/// `G_n(1, 0, q, 0)`.
pub fn g_linial_q(n: usize, max_degree: usize) -> Result<SymFunc> {
    let g = compute_g(n, max_degree)?;
    let q = WeightPoly::gen(Gen::Q);
    let point = crate::weightpoly::assignment([(Gen::Lb, 1), (Gen::L, 0), (Gen::R, 0)]);
    Ok(g.map_coeffs(|c| c.substitute(Gen::Rb, &q).specialize(&point)))
}

/// `2^{−ℓ(λ)} Σ_{m=1}^{n+1} m^{ℓ(λ)−1} C(n, m−1)`.
pub fn linial_character_value(n: usize, lambda: &IntPartition) -> Result<BigInt> {
    if lambda.size() != n || n == 0 {
        return Err(Error::InvalidInput(format!("{lambda} is not a partition of {n}")));
    }
    let l = lambda.len() as u32;
    let sum: BigInt = (1..=n + 1).map(|m| BigInt::from(m).pow(l - 1) * binomial(n, m - 1)).sum();
    let (q, r) = sum.div_rem(&BigInt::from(2).pow(l));
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("character value at {lambda} is {sum}/2^{l}")));
    }
    Ok(q)
}

/// Bernardi trees of one shape: each terminal-delimited preorder block is
/// filled with a decreasing run.
pub fn bernardi_of_shape(shape: &TreeShape) -> Vec<LabeledTree> {
    let n = shape.len();
    let blocks = shape.typ().parts().to_vec();
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut pre = Vec::with_capacity(n);
    fill_blocks(shape, &blocks, 0, 1, &mut used, &mut pre, &mut out);
    out
}

fn fill_blocks(
    shape: &TreeShape,
    blocks: &[usize],
    b: usize,
    min: usize,
    used: &mut [bool],
    pre: &mut Vec<u32>,
    out: &mut Vec<LabeledTree>,
) {
    let n = used.len() - 1;
    if b == blocks.len() {
        // Blocks were chosen as increasing sets; reverse each into a decreasing run.
        let mut word = Vec::with_capacity(n);
        let mut at = 0;
        for &size in blocks {
            word.extend(pre[at..at + size].iter().rev());
            at += size;
        }
        out.push(LabeledTree::from_preorder(shape.clone(), &word).expect("word fits shape"));
        return;
    }
    let filled: usize = blocks[..b].iter().sum();
    if pre.len() - filled == blocks[b] {
        fill_blocks(shape, blocks, b + 1, 1, used, pre, out);
        return;
    }
    for x in min..=n {
        if !used[x] {
            used[x] = true;
            pre.push(x as u32);
            fill_blocks(shape, blocks, b, x + 1, used, pre, out);
            pre.pop();
            used[x] = false;
        }
    }
}

/// All Bernardi trees on `n` nodes.
pub fn bernardi_trees(n: usize) -> Vec<LabeledTree> {
    TreeShape::all(n).par_iter().flat_map_iter(bernardi_of_shape).collect()
}

/// Bernardi trees fixed by `sigma`.
pub fn linial_fixed_points(n: usize, sigma: &Permutation) -> Result<BigInt> {
    if sigma.len() != n {
        return Err(Error::InvalidInput("permutation size differs from n".into()));
    }
    let count = bernardi_trees(n)
        .par_iter()
        .map(|t| t.bernardi_action(sigma).map(|s| usize::from(s == *t)))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(BigInt::from(count))
}

/// `Σ_D 2^{n+1−peak(D)} g_{λ(D)}` over Dyck paths of semilength `n`.
pub fn linial_zonal_expansion(n: usize) -> PCombination {
    let mut out = PCombination::zero(n);
    for d in DyckPath::all(n) {
        let mut g = PCombination::one();
        for &part in d.vertical_runs().parts() {
            g = g.mul(&g_element(part));
        }
        let scale = BigRational::from_integer(BigInt::from(2).pow((n + 1 - d.peaks()) as u32));
        out = out.add(&g.scale(&RatPoly::constant(scale)));
    }
    out
}

/// `Σ_D q^{n−peak(D)} h_{λ(D)}`.
pub fn shi_parking_expansion(n: usize) -> SymFunc {
    let q = WeightPoly::gen(Gen::Q);
    let mut out = SymFunc::zero(n);
    for d in DyckPath::all(n) {
        out = out.add_scaled(&complete(&d.vertical_runs()), &q.pow((n - d.peaks()) as u32));
    }
    out
}

/// `G_n(1, 1, q, 0)`.
pub fn g_shi_q(n: usize, max_degree: usize) -> Result<SymFunc> {
    let g = compute_g(n, max_degree)?;
    let q = WeightPoly::gen(Gen::Q);
    let point = crate::weightpoly::assignment([(Gen::Lb, 1), (Gen::L, 1), (Gen::R, 0)]);
    Ok(g.map_coeffs(|c| c.substitute(Gen::Rb, &q).specialize(&point)))
}

/// Checks `1 + P = Σ_i h_i (1 + P)^i` through degree `order`, where
/// `P = Σ_n shi_parking_expansion(n)` at `q = 1`.
pub fn verify_parking_equation(order: usize) -> bool {
    use crate::symfunc::TruncatedSeries;
    let one_q = crate::weightpoly::assignment([(Gen::Q, 1)]);
    let comps = (1..=order).map(|n| shi_parking_expansion(n).specialize(&one_q));
    let p = TruncatedSeries::from_components(order, comps);
    let lhs = TruncatedSeries::one(order).add(&p);
    let mut rhs = TruncatedSeries::zero(order);
    let mut power = TruncatedSeries::one(order);
    for i in 0..=order {
        let h = if i == 0 { TruncatedSeries::one(order) } else { TruncatedSeries::from_components(order, [crate::symfunc::complete_n(i)]) };
        rhs = rhs.add(&h.mul(&power));
        power = power.mul(&lhs);
    }
    lhs == rhs
}

/// Outcome of the Foulkes-positivity question for `G_3(1, 0, 1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeControl {
    /// Coefficients of `F_{3,0}, F_{3,1}, F_{3,2}`.
    pub coefficients: Vec<BigRational>,
    pub has_negative: bool,
    pub all_integral: bool,
}

impl NegativeControl {
    /// Whether the expansion is a nonnegative integer combination.
    pub fn is_nonnegative_integral(&self) -> bool {
        !self.has_negative && self.all_integral
    }
}

pub fn linial_foulkes_control(n: usize, max_degree: usize) -> Result<NegativeControl> {
    let g = g_at(n, [1, 0, 1, 0], max_degree)?;
    let coeffs = foulkes_expansion(&g)?.ok_or_else(|| Error::NotApplicable("not in the span of Foulkes elements".into()))?;
    let coefficients: Vec<BigRational> = coeffs.iter().map(|c| c.constant_term()).collect();
    Ok(NegativeControl {
        has_negative: coefficients.iter().any(|c| c.is_negative()),
        all_integral: coefficients.iter().all(|c| c.is_integer()),
        coefficients,
    })
}

fn named(checks: &[(&str, bool)]) -> Value {
    Value::Array(checks.iter().map(|(k, v)| json!({ "name": k, "pass": v })).collect())
}

/// Per-arrangement report `{ kind, n, region_count, frobenius, checks }`.
pub fn arrangement_report(kind: ArrangementKind, n: usize, max_degree: usize) -> Result<Value> {
    let regions = region_count_bounded(kind, n, max_degree)?;
    let (frob, checks): (Option<SymFunc>, Vec<(&str, bool)>) = match kind {
        ArrangementKind::Semiorder => {
            let s = semiorder_frobenius(n)?;
            let g = g_at_semiorder(n, max_degree)?;
            let ex = s.h_form.exponential_specialization().constant_term() == regions;
            let checks = vec![
                ("h_form_equals_specialized_G", s.h_form == g),
                ("foulkes_form_equals_specialized_G", s.foulkes_form()? == g),
                ("ribbon_form_equals_specialized_G", s.ribbon_form.to_sym() == g),
                ("ex_equals_region_count", ex),
                ("region_count_matches_closed_form", regions == p_semiorder_regions(n, 1)),
            ];
            (Some(s.h_form), checks)
        }
        ArrangementKind::PSemiorder(p) => {
            let s = p_semiorder_frobenius(n, p)?;
            let ex = s.h_form.exponential_specialization().constant_term() == regions;
            let checks = vec![
                ("foulkes_form_equals_h_form", s.foulkes_form()? == s.h_form),
                ("foulkes_positive", s.foulkes_coeffs.iter().all(|c| !c.is_negative())),
                ("ex_equals_region_count", ex),
            ];
            (Some(s.h_form), checks)
        }
        ArrangementKind::Linial => {
            let h = linial_h_expansion(n);
            let g = g_linial_q(n, max_degree)?;
            let ones = crate::weightpoly::assignment([(Gen::Q, 1)]);
            let at_one = h.specialize(&ones);
            let zonal = linial_zonal_expansion(n).to_sym()?;
            let ex = at_one.exponential_specialization().constant_term() == regions;
            let checks = vec![
                ("h_expansion_equals_G(1,0,q,0)", h == g),
                ("zonal_expansion_equals_G(1,0,1,0)", zonal == at_one),
                ("ex_equals_region_count", ex),
                ("bernardi_count_equals_region_count", BigInt::from(bernardi_trees(n).len()) == regions),
            ];
            (Some(h), checks)
        }
        ArrangementKind::Shi => {
            let h = shi_parking_expansion(n);
            let g = g_shi_q(n, max_degree)?;
            let ones = crate::weightpoly::assignment([(Gen::Q, 1)]);
            let ex = h.specialize(&ones).exponential_specialization().constant_term() == regions;
            let checks = vec![
                ("parking_expansion_equals_G(1,1,q,0)", h == g),
                ("ex_equals_region_count", ex),
                ("parking_functional_equation", verify_parking_equation(n)),
            ];
            (Some(h), checks)
        }
        ArrangementKind::Braid | ArrangementKind::Catalan => {
            let g = g_at(n, kind.weight_point().unwrap(), max_degree)?;
            let ex = g.exponential_specialization().constant_term() == regions;
            (Some(g), vec![("ex_equals_region_count", ex)])
        }
        ArrangementKind::PCatalan(_) => (None, Vec::new()),
    };
    Ok(json!({
        "kind": kind.to_string(),
        "n": n,
        "region_count": regions.to_string(),
        "frobenius": frob.map(|f| f.to_json()),
        "checks": named(&checks),
    }))
}
