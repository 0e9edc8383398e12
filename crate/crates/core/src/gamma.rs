//! Right-edge distribution of local binary search trees, its γ-vector and
//! the matching count of intransitive trees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arrangements::bernardi_of_shape;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::trees::TreeShape;

/// Largest `n` accepted by the tree enumerations here.
pub const GAMMA_BOUND: usize = 9;
/// Largest vertex count for the Prüfer enumeration.
pub const PRUFER_BOUND: usize = 8;

/// Grid half-width for [`sign_change_diagnostic`].
pub const DIAGNOSTIC_RANGE: i32 = 160;

/// Polynomial in `t`, coefficients from degree 0 upward.
pub type TPoly = Vec<BigInt>;

fn check(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

fn trim(mut p: TPoly) -> TPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn add_at(p: &mut TPoly, k: usize, c: BigInt) {
    if p.len() <= k {
        p.resize(k + 1, BigInt::zero());
    }
    p[k] += c;
}

/// Labelings of `shape` by `[n]` with left child < parent < right child.
fn lbs_labelings(shape: &TreeShape) -> u64 {
    let order = shape.preorder();
    let parents = shape.parents();
    let n = shape.len();
    let mut labels = vec![0u32; n];
    fn go(
        i: usize,
        used: u32,
        order: &[usize],
        parents: &[Option<usize>],
        shape: &TreeShape,
        labels: &mut [u32],
    ) -> u64 {
        let n = order.len();
        if i == n {
            return 1;
        }
        let v = order[i];
        let (lo, hi) = match parents[v] {
            None => (1, n as u32),
            Some(p) if shape.left(p) == Some(v) => (1, labels[p] - 1),
            Some(p) => (labels[p] + 1, n as u32),
        };
        let mut total = 0;
        for x in lo..=hi {
            if used & (1 << x) == 0 {
                labels[v] = x;
                total += go(i + 1, used | (1 << x), order, parents, shape, labels);
            }
        }
        total
    }
    go(0, 0, &order, &parents, shape, &mut labels)
}

/// `Σ t^{right edges}` over standard LBS trees on `n` nodes.
pub fn lbs_distribution(n: usize) -> Result<TPoly> {
    check(n, GAMMA_BOUND)?;
    let per_shape: Vec<(usize, u64)> =
        TreeShape::all(n).par_iter().map(|t| (t.right_edges(), lbs_labelings(t))).collect();
    let mut out = vec![BigInt::zero(); n];
    for (k, c) in per_shape {
        out[k] += BigInt::from(c);
    }
    Ok(trim(out))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub n: usize,
    /// `γ_{n,j}` for `0 ≤ j ≤ ⌊(n−1)/2⌋`.
    pub coefficients: Vec<BigInt>,
}

impl GammaVector {
    /// `Σ_j γ_j t^j (1+t)^{n−1−2j}`.
    pub fn expand(&self) -> TPoly {
        let d = self.n - 1;
        let mut out = vec![BigInt::zero(); d + 1];
        for (j, g) in self.coefficients.iter().enumerate() {
            for i in 0..=d - 2 * j {
                out[i + j] += g * binomial(d - 2 * j, i);
            }
        }
        trim(out)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.iter().all(|g| !g.is_negative())
    }
}

/// Left-leaning Bernardi trees on `n` nodes, counted by nodes with two children.
pub fn gamma_vector(n: usize) -> Result<GammaVector> {
    check(n, GAMMA_BOUND)?;
    let counts: Vec<(usize, usize)> = TreeShape::all(n)
        .into_par_iter()
        .filter(TreeShape::is_left_leaning)
        .map(|t| (t.bivalent_nodes(), bernardi_of_shape(&t).len()))
        .collect();
    let mut coefficients = vec![BigInt::zero(); (n - 1) / 2 + 1];
    for (j, c) in counts {
        coefficients[j] += BigInt::from(c);
    }
    Ok(GammaVector { n, coefficients })
}

/// Decode a Prüfer sequence on `[m]` into its edge list.
fn prufer_edges(seq: &[usize], m: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; m + 1];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &x in seq {
        let leaf = (1..=m).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (1..=m).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Number of right vertices when every vertex is a strict local max or min.
fn intransitive_right_vertices(edges: &[(usize, usize)], m: usize) -> Option<usize> {
    // +1 once a vertex has a smaller neighbour, +2 once it has a larger one.
    let mut seen = vec![0u8; m + 1];
    for &(a, b) in edges {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        seen[hi] |= 1;
        seen[lo] |= 2;
    }
    let mut right = 0;
    for s in &seen[1..] {
        match s {
            1 => right += 1,
            2 => {}
            _ => return None,
        }
    }
    Some(right)
}

/// Intransitive trees on `[n+1]` by number of right vertices.
pub fn intransitive_distribution(n: usize) -> Result<TPoly> {
    check(n + 1, PRUFER_BOUND)?;
    let m = n + 1;
    if m == 2 {
        return Ok(vec![BigInt::zero(), BigInt::one()]);
    }
    let len = m - 2;
    let total = m.pow(len as u32);
    let counts: Vec<usize> = (0..total)
        .into_par_iter()
        .fold(
            || vec![0usize; m + 1],
            |mut acc, code| {
                let mut c = code;
                let seq: Vec<usize> = (0..len)
                    .map(|_| {
                        let x = c % m + 1;
                        c /= m;
                        x
                    })
                    .collect();
                if let Some(k) = intransitive_right_vertices(&prufer_edges(&seq, m), m) {
                    acc[k] += 1;
                }
                acc
            },
        )
        .reduce(|| vec![0usize; m + 1], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    let mut out = TPoly::new();
    for (k, c) in counts.into_iter().enumerate() {
        add_at(&mut out, k, BigInt::from(c));
    }
    Ok(trim(out))
}

fn eval(p: &TPoly, t: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
}

/// Sign changes of `p` on the geometric grid `t = −(9/8)^k`, `|k| ≤ k_max`,
/// together with the degree. Every root of a real-rooted `f_n` is negative,
/// so a fine enough grid sees `degree` changes when the roots are simple.
pub fn sign_change_diagnostic(p: &TPoly, k_max: i32) -> (usize, usize) {
    let ratio = BigRational::new(BigInt::from(9), BigInt::from(8));
    let mut t = -num_traits::pow::Pow::pow(&ratio, -k_max);
    let mut last = 0i8;
    let mut changes = 0;
    for _ in -k_max..=k_max {
        let v = eval(p, &t);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        t *= &ratio;
    }
    (changes, p.len().saturating_sub(1))
}

fn strings(p: &[BigInt]) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}

/// `{ n, distribution, gamma, checks, diagnostics }`.
pub fn gamma_report(n: usize) -> Result<Value> {
    let dist = lbs_distribution(n)?;
    let gamma = gamma_vector(n)?;
    let linial = crate::arrangements::linial_regions(n);
    let mut checks = vec![
        json!({ "name": "gamma_identity", "pass": gamma.expand() == dist }),
        json!({ "name": "gamma_nonnegative", "pass": gamma.is_nonnegative() }),
        json!({ "name": "palindromic", "pass": dist.iter().eq(dist.iter().rev()) }),
        json!({ "name": "total_equals_linial_regions", "pass": dist.iter().sum::<BigInt>() == linial }),
    ];
    if n < PRUFER_BOUND {
        let intr = intransitive_distribution(n)?;
        let shifted: Vec<BigInt> = std::iter::once(BigInt::zero()).chain(dist.iter().cloned()).collect();
        checks.push(json!({ "name": "intransitive_shift", "pass": intr == shifted }));
    }
    let (changes, degree) = sign_change_diagnostic(&dist, DIAGNOSTIC_RANGE);
    Ok(json!({
        "n": n,
        "distribution": strings(&dist),
        "gamma": strings(&gamma.coefficients),
        "checks": checks,
        "diagnostics": { "sign_changes_on_grid": changes, "degree": degree },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightpoly::{weight_point, Gen};

    fn ints(v: &[i64]) -> TPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn three_nodes() {
        assert_eq!(lbs_distribution(3).unwrap(), ints(&[1, 5, 1]));
        assert_eq!(gamma_vector(3).unwrap().coefficients, ints(&[1, 3]));
        assert_eq!(intransitive_distribution(3).unwrap(), ints(&[0, 1, 5, 1]));
    }

    #[test]
    fn trivial() {
        assert_eq!(lbs_distribution(1).unwrap(), ints(&[1]));
        assert_eq!(gamma_vector(1).unwrap().coefficients, ints(&[1]));
        assert_eq!(intransitive_distribution(1).unwrap(), ints(&[0, 1]));
        assert!(intransitive_distribution(8).is_err());
        assert!(lbs_distribution(0).is_err());
    }

    #[test]
    fn agrees_with_generating_function() {
        for n in 1..=5 {
            let b = crate::genfun::compute_b(n, 6).unwrap();
            let at_point = b.specialize(&{
                let mut m = weight_point(1, 0, 1, 0);
                m.remove(&Gen::Rb);
                m
            });
            let mut want = TPoly::new();
            for (mono, c) in at_point.terms() {
                add_at(&mut want, mono.exp(Gen::Rb) as usize, c.clone());
            }
            assert_eq!(lbs_distribution(n).unwrap(), trim(want), "n={n}");
        }
    }

    #[test]
    fn identity_and_shift() {
        for n in 1..=7 {
            let d = lbs_distribution(n).unwrap();
            let g = gamma_vector(n).unwrap();
            assert_eq!(g.expand(), d);
            assert!(g.is_nonnegative());
            assert_eq!(d.iter().sum::<BigInt>(), crate::arrangements::linial_regions(n));
        }
        for n in 1..=5 {
            let mut shifted = ints(&[0]);
            shifted.extend(lbs_distribution(n).unwrap());
            assert_eq!(intransitive_distribution(n).unwrap(), shifted);
        }
    }

    #[test]
    fn prufer_round_trip_is_a_tree() {
        let e = prufer_edges(&[4, 4], 4);
        assert_eq!(e.len(), 3);
        assert!(e.iter().all(|&(a, b)| a == 4 || b == 4));
    }

    #[test]
    fn diagnostic_runs() {
        let (c, d) = sign_change_diagnostic(&ints(&[1, 5, 1]), DIAGNOSTIC_RANGE);
        assert_eq!((c, d), (2, 2));
        let r = gamma_report(4).unwrap();
        assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    }
}
