//! Named, machine-readable checks grouped into suites.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangements::{self as arr, ArrangementKind};
use crate::combinatorics::{IntPartition, Permutation};
use crate::error::{Error, Result};
use crate::gamma;
use crate::genfun::{self, NoncommSeries};
use crate::nested;
use crate::pathtree::{enumerate_pts, phi_forward, psi_inverse, theta_fiber_mismatch, theta_map};
use crate::symfunc::Basis;
use crate::trees::{all_words, word_to_string, LabeledTree, TreeShape};
use crate::weightpoly::{Gen, SEMIORDER_POINT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Functional,
    Ribbon,
    Bijection,
    Theta,
    Specialization,
    Arrangements,
    Positivity,
    Gamma,
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Functional,
        Suite::Ribbon,
        Suite::Bijection,
        Suite::Theta,
        Suite::Specialization,
        Suite::Arrangements,
        Suite::Positivity,
        Suite::Gamma,
        Suite::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Functional => "functional",
            Suite::Ribbon => "ribbon",
            Suite::Bijection => "bijection",
            Suite::Theta => "theta",
            Suite::Specialization => "specialization",
            Suite::Arrangements => "arrangements",
            Suite::Positivity => "positivity",
            Suite::Gamma => "gamma",
            Suite::Symmetry => "symmetry",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: Suite,
    pub name: String,
    pub n: usize,
    pub pass: bool,
    /// Counterexample on failure, or supporting data such as a listing.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckRecord {
    fn new(suite: Suite, name: impl Into<String>, n: usize, pass: bool) -> Self {
        CheckRecord { suite, name: name.into(), n, pass, detail: None }
    }

    fn with(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn from_option(suite: Suite, name: impl Into<String>, n: usize, failure: Option<String>) -> Self {
        let r = Self::new(suite, name, n, failure.is_none());
        match failure {
            Some(d) => r.with(d),
            None => r,
        }
    }
}

/// Runs one suite for sizes `1..=n_max`.
pub fn run_suite(suite: Suite, n_max: usize, max_degree: usize) -> Result<Vec<CheckRecord>> {
    if n_max == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    match suite {
        Suite::Functional => functional(n_max, max_degree),
        Suite::Ribbon => ribbon(n_max, max_degree),
        Suite::Bijection => Ok(bijection(n_max)),
        Suite::Theta => Ok(theta(n_max, n_max)),
        Suite::Specialization => specialization(n_max, max_degree),
        Suite::Arrangements => arrangements(n_max, max_degree),
        Suite::Positivity => positivity(n_max, max_degree),
        Suite::Gamma => gamma_suite(n_max),
        Suite::Symmetry => symmetry(n_max, max_degree, n_max.min(4)),
    }
}

/// Runs several suites in parallel; the output order follows `suites`.
pub fn run_suites(suites: &[Suite], n_max: usize, max_degree: usize) -> Result<Vec<CheckRecord>> {
    let parts: Vec<Result<Vec<CheckRecord>>> = suites.par_iter().map(|&s| run_suite(s, n_max, max_degree)).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

pub fn functional(order: usize, max_degree: usize) -> Result<Vec<CheckRecord>> {
    let s = Suite::Functional;
    let mut reports = genfun::verify_g_functional_equation(order, max_degree)?;
    reports.push(genfun::verify_b_functional_equation(order, max_degree)?);
    reports.push(genfun::verify_ribbon_functional_equation(order, max_degree)?);
    reports.push(genfun::verify_macmahon(order));
    Ok(reports
        .into_iter()
        .map(|r| {
            let failure = r.counterexample.as_ref().map(|(d, diff)| format!("degree {d}: {diff}"));
            CheckRecord::from_option(s, r.name, r.degrees_checked, failure)
        })
        .collect())
}

pub fn ribbon(n_max: usize, max_degree: usize) -> Result<Vec<CheckRecord>> {
    let s = Suite::Ribbon;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let g = genfun::compute_g(n, max_degree)?;
        out.push(CheckRecord::new(s, "nested_partition_expansion", n, nested::ribbon_expansion_g(n) == g));
        let mut bad = None;
        for nu in all_words(n - 1) {
            if nested::ribbon_expansion_g_canopy(n, &nu)? != genfun::compute_g_canopy(n, &nu, max_degree)? {
                bad = Some(word_to_string(&nu));
                break;
            }
        }
        out.push(CheckRecord::from_option(s, "canopy_expansion", n, bad.map(|w| format!("canopy {w}"))));
    }
    Ok(out)
}

fn tree_round_trip(t: &LabeledTree) -> Option<String> {
    let s = phi_forward(t);
    let a = s.attributes();
    let ok = a.exponents == t.weight_exponents()
        && a.inorder == t.inorder_word()
        && a.canopy == t.shape().canopy()
        && psi_inverse(&s) == *t;
    (!ok).then(|| format!("tree {t}"))
}

/// Exhaustive Φ/Ψ round trips on standard trees and standard sequences of size `n`.
pub fn bijection_mismatch(n: usize) -> (Option<String>, Option<String>) {
    let trees = TreeShape::all(n)
        .par_iter()
        .find_map_any(|shape| LabeledTree::all_standard(shape).iter().find_map(tree_round_trip));
    let seqs = all_words(n - 1).par_iter().find_map_any(|nu| {
        enumerate_pts(n, nu).expect("canopy length is n - 1").into_iter().find_map(|s| {
            let t = psi_inverse(&s);
            let a = s.attributes();
            let ok = a.exponents == t.weight_exponents()
                && a.inorder == t.inorder_word()
                && a.canopy == t.shape().canopy()
                && phi_forward(&t) == s;
            (!ok).then(|| format!("sequence {s}"))
        })
    });
    (trees, seqs)
}

pub fn bijection(n_max: usize) -> Vec<CheckRecord> {
    let s = Suite::Bijection;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let (trees, seqs) = bijection_mismatch(n);
        out.push(CheckRecord::from_option(s, "psi_after_phi_is_identity", n, trees));
        out.push(CheckRecord::from_option(s, "phi_after_psi_is_identity", n, seqs));
    }
    out
}

/// Weight and canopy preservation for `n ≤ n_max`, fiber sums for `n ≤ fiber_max`.
pub fn theta(n_max: usize, fiber_max: usize) -> Vec<CheckRecord> {
    let s = Suite::Theta;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let bad = all_words(n - 1).par_iter().find_map_any(|nu| {
            enumerate_pts(n, nu).expect("canopy length is n - 1").into_iter().find_map(|seq| {
                let p = theta_map(&seq);
                let ok = p.augmented_weight().ok() == Some(seq.attributes().weight) && p.canopy_word().ok().as_ref() == Some(nu);
                (!ok).then(|| format!("sequence {seq} maps to {p}"))
            })
        });
        out.push(CheckRecord::from_option(s, "weight_and_canopy_preserved", n, bad));
    }
    for n in 1..=fiber_max {
        out.push(CheckRecord::from_option(s, "fiber_sums_are_ribbon_products", n, theta_fiber_mismatch(n)));
    }
    out
}

pub fn specialization(n_max: usize, max_degree: usize) -> Result<Vec<CheckRecord>> {
    let s = Suite::Specialization;
    let mut out = Vec::new();
    for n in 1..=n_max {
        for kind in [ArrangementKind::Catalan, ArrangementKind::Shi, ArrangementKind::Braid, ArrangementKind::Linial] {
            let point = kind.weight_point().expect("integer point");
            let got = genfun::b_specialization(n, point, max_degree)?;
            let want = arr::region_count(kind, n)?;
            out.push(CheckRecord::new(s, format!("{kind}_regions"), n, got == want).with(got.to_string()));
        }
        let got = genfun::compute_b_abgd(n, max_degree)?.eval(SEMIORDER_POINT);
        let want = arr::p_semiorder_regions(n, 1);
        out.push(CheckRecord::new(s, "semiorder_regions", n, got == want).with(got.to_string()));
    }
    Ok(out)
}

/// Fixed points of one permutation of each cycle type against the character formula.
pub fn linial_character_mismatch(n: usize) -> Result<Option<String>> {
    for lambda in IntPartition::all(n) {
        let mut cycles = Vec::new();
        let mut next = 1;
        for &p in lambda.parts() {
            cycles.push((next..next + p).collect::<Vec<usize>>());
            next += p;
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        let sigma = Permutation::from_cycles(n, &refs)?;
        let fixed = arr::linial_fixed_points(n, &sigma)?;
        let formula = arr::linial_character_value(n, &lambda)?;
        if fixed != formula {
            return Ok(Some(format!("cycle type {lambda}: {fixed} fixed trees, formula {formula}")));
        }
    }
    Ok(None)
}

pub fn arrangements(n_max: usize, max_degree: usize) -> Result<Vec<CheckRecord>> {
    let s = Suite::Arrangements;
    let mut out = Vec::new();
    for n in 1..=n_max {
        for kind in [ArrangementKind::Semiorder, ArrangementKind::Linial, ArrangementKind::Shi] {
            let report = arr::arrangement_report(kind, n, max_degree)?;
            for c in report["checks"].as_array().into_iter().flatten() {
                let name = format!("{kind}_{}", c["name"].as_str().unwrap_or_default());
                out.push(CheckRecord::new(s, name, n, c["pass"] == true));
            }
        }
        for p in 2..=3 {
            let f = arr::p_semiorder_frobenius(n, p)?;
            let ok = f.foulkes_form()? == f.h_form && f.foulkes_coeffs.iter().all(|c| !c.is_negative());
            out.push(CheckRecord::new(s, format!("p_semiorder({p})_foulkes_positive"), n, ok));
        }
        out.push(CheckRecord::from_option(s, "linial_character_formula", n, linial_character_mismatch(n)?));
    }
    Ok(out)
}

pub fn positivity(n_max: usize, max_degree: usize) -> Result<Vec<CheckRecord>> {
    let s = Suite::Positivity;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let g = genfun::compute_g(n, max_degree)?;
        let sp = g.schur_positivity();
        let detail = match &sp.witness {
            Some((lambda, m, k)) => format!("s_{}: coefficient {k} at {m}", lambda.subscript()),
            None => g.render_in(Basis::S)?,
        };
        out.push(CheckRecord::new(s, "schur_positive", n, sp.positive).with(detail));
        let collected = genfun::collect_ribbons(&nested::ribbon_expansion_formal(n))?;
        let bad = collected
            .iter()
            .find(|(_, c)| c.terms().any(|(_, k)| k.is_negative()))
            .map(|(a, c)| format!("r_{}: {c}", a.subscript()));
        out.push(CheckRecord::from_option(s, "ribbon_coefficients_in_abgd_semiring", n, bad));
    }
    if n_max >= 3 {
        let c = arr::linial_foulkes_control(3, max_degree)?;
        let listing = c.coefficients.iter().enumerate().map(|(k, x)| format!("F_3{k}: {x}")).collect::<Vec<_>>().join(", ");
        out.push(CheckRecord::new(s, "linial_not_nonnegative_integral_in_foulkes", 3, !c.is_nonnegative_integral()).with(listing));
    }
    Ok(out)
}

pub fn gamma_suite(n_max: usize) -> Result<Vec<CheckRecord>> {
    let s = Suite::Gamma;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let report = gamma::gamma_report(n)?;
        for c in report["checks"].as_array().into_iter().flatten() {
            out.push(CheckRecord::new(s, c["name"].as_str().unwrap_or_default(), n, c["pass"] == true));
        }
    }
    Ok(out)
}

pub fn symmetry(n_max: usize, max_degree: usize, noncomm_order: usize) -> Result<Vec<CheckRecord>> {
    let s = Suite::Symmetry;
    let mut out = Vec::new();
    for n in 1..=n_max {
        for (name, ok) in genfun::symmetry_checks(&genfun::compute_g(n, max_degree)?) {
            out.push(CheckRecord::new(s, name.replace(' ', "_"), n, ok));
        }
    }
    let series = NoncommSeries::brute_force(noncomm_order);
    let bad = series.verify().map(|w| format!("word {w:?}"));
    out.push(CheckRecord::from_option(s, "noncommutative_identity", noncomm_order, bad));
    Ok(out)
}

/// `B_n(1, 0, t, 0)` coefficients, as a cross-check for the LBS distribution.
pub fn b_linial_t(n: usize, max_degree: usize) -> Result<Vec<BigInt>> {
    let b = genfun::compute_b(n, max_degree)?;
    let point = crate::weightpoly::assignment([(Gen::Lb, 1), (Gen::L, 0), (Gen::R, 0)]);
    let mut out = vec![BigInt::from(0); n];
    for (m, c) in b.specialize(&point).terms() {
        out[m.exp(Gen::Rb) as usize] += c;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c == &BigInt::from(0)) {
        out.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        for suite in Suite::ALL {
            for r in run_suite(suite, 3, 6).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn schur_listing_is_attached() {
        let rs = positivity(2, 6).unwrap();
        assert!(rs.iter().filter(|r| r.name == "schur_positive").all(|r| r.detail.as_deref().is_some_and(|d| d.contains("s_"))));
    }

    #[test]
    fn b_linial_matches_lbs() {
        for n in 1..=5 {
            assert_eq!(b_linial_t(n, 6).unwrap(), gamma::lbs_distribution(n).unwrap());
        }
    }
}
