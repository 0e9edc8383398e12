//! Sparse polynomials in the weight parameters `lb, l, rb, r, q, s, t`.
//!
//! [`WeightPoly`] has big-integer coefficients and is the coefficient ring of
//! every symmetric function in the crate. [`RatPoly`] carries rational
//! coefficients and only shows up in power-sum expansions. [`AbgdExpr`] is the
//! aggregated view in the four symbols `α = lb·rb`, `β = lb + rb`,
//! `γ = l·r`, `δ = l + r`.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Number of named generators.
pub const NGENS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    /// Weak left edge, written λ̄.
    Lb,
    /// Strict left edge, written λ.
    L,
    /// Weak right edge, written ρ̄.
    Rb,
    /// Strict right edge, written ρ.
    R,
    Q,
    S,
    T,
}

impl Gen {
    pub const ALL: [Gen; NGENS] = [Gen::Lb, Gen::L, Gen::Rb, Gen::R, Gen::Q, Gen::S, Gen::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Lb => "lb",
            Gen::L => "l",
            Gen::Rb => "rb",
            Gen::R => "r",
            Gen::Q => "q",
            Gen::S => "s",
            Gen::T => "t",
        }
    }

    pub fn from_name(name: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == name)
    }
}

/// Exponent vector over the generators, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NGENS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NGENS])
    }

    pub fn gen(g: Gen) -> Self {
        let mut e = [0; NGENS];
        e[g.index()] = 1;
        Monomial(e)
    }

    /// Monomial `lb^a l^b rb^c r^d`.
    pub fn weight(a: u16, b: u16, c: u16, d: u16) -> Self {
        Monomial([a, b, c, d, 0, 0, 0])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, g: Gen) -> u16 {
        self.0[g.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x += *y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in Gen::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(g.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Coefficient rings usable in [`Poly`].
pub trait Coeff:
    Clone + PartialEq + Zero + One + Signed + fmt::Display + fmt::Debug + FromStr + Send + Sync
{
}

impl Coeff for BigInt {}
impl Coeff for BigRational {}

/// Sparse polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

pub type WeightPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::monomial(Monomial::gen(g), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(*m, -c.clone());
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, other: &Self, k: &C) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone() * k.clone());
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.clone() * k.clone())).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Gens that appear with nonzero exponent.
    pub fn support(&self) -> Vec<Gen> {
        Gen::ALL
            .into_iter()
            .filter(|g| self.terms.keys().any(|m| m.exp(*g) > 0))
            .collect()
    }

    /// Full evaluation; every generator in the support must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<Gen, C>) -> Result<C> {
        for g in self.support() {
            if !assignment.contains_key(&g) {
                return Err(Error::IncompleteAssignment(g.name().to_string()));
            }
        }
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for g in Gen::ALL {
                let e = m.exp(g);
                if e > 0 {
                    v = v * num_traits::pow(assignment[&g].clone(), e as usize);
                }
            }
            total = total + v;
        }
        Ok(total)
    }

    /// Replace the listed generators by constants, keeping the rest symbolic.
    pub fn specialize(&self, assignment: &BTreeMap<Gen, C>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            let mut rest = *m;
            for (g, val) in assignment {
                let e = m.exp(*g);
                if e > 0 {
                    v = v * num_traits::pow(val.clone(), e as usize);
                }
                rest.0[g.index()] = 0;
            }
            out.add_term(rest, v);
        }
        out
    }

    /// Substitute a polynomial for one generator.
    pub fn substitute(&self, g: Gen, value: &Self) -> Self {
        let mut out = Self::zero();
        let mut powers: Vec<Self> = vec![Self::one()];
        for (m, c) in &self.terms {
            let e = m.exp(g) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul_ref(value);
                powers.push(next);
            }
            let mut rest = *m;
            rest.0[g.index()] = 0;
            let base = Self::monomial(rest, c.clone());
            out.add_assign_ref(&base.mul_ref(&powers[e]));
        }
        out
    }

    /// Rename generators through a permutation map.
    pub fn permute_gens(&self, map: impl Fn(Gen) -> Gen) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = [0u16; NGENS];
            for g in Gen::ALL {
                e[map(g).index()] += m.exp(g);
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl WeightPoly {
    pub fn int(k: i64) -> Self {
        Self::constant(BigInt::from(k))
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn from_counts<I: IntoIterator<Item = (Monomial, u64)>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    }
}

impl RatPoly {
    /// Integer polynomial if every coefficient is integral.
    pub fn to_integral(&self) -> Option<WeightPoly> {
        let mut out = WeightPoly::zero();
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(*m, c.to_integer());
        }
        Some(out)
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Self) -> Self {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Self {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> FromStr for Poly<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("polynomial: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Self::zero();
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && i == 0 {
                neg = true;
            } else if ch == '+' && i == 0 {
            } else {
                cur.push(ch);
            }
        }
        pieces.push((neg, cur));
        for (neg, body) in pieces {
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = C::one();
            let mut mono = Monomial::one();
            for factor in body.split('*') {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u16>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                if let Some(g) = Gen::from_name(name) {
                    mono.0[g.index()] += exp;
                } else {
                    let k: C = name.parse().map_err(|_| bad())?;
                    coeff = coeff * num_traits::pow(k, exp as usize);
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

impl serde::Serialize for WeightPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for WeightPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Build an assignment map from `(generator, integer)` pairs.
pub fn assignment<I: IntoIterator<Item = (Gen, i64)>>(pairs: I) -> BTreeMap<Gen, BigInt> {
    pairs.into_iter().map(|(g, v)| (g, BigInt::from(v))).collect()
}

/// Assignment of `(lb, l, rb, r)`.
pub fn weight_point(lb: i64, l: i64, rb: i64, r: i64) -> BTreeMap<Gen, BigInt> {
    assignment([(Gen::Lb, lb), (Gen::L, l), (Gen::Rb, rb), (Gen::R, r)])
}

/// Exponents of `α^a β^b γ^c δ^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AbgdMono(pub [u16; 4]);

impl AbgdMono {
    fn sort_key(&self) -> (Reverse<u32>, u32, u16, Reverse<u16>, u16) {
        let [a, b, c, d] = self.0;
        let wdeg = 2 * (a as u32 + c as u32) + b as u32 + d as u32;
        (Reverse(wdeg), a as u32 + c as u32, d, Reverse(a), b)
    }
}

/// Terms with no α/γ factor come first, then fewer δ's, then more α's.
impl Ord for AbgdMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AbgdMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in α, β, γ, δ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbgdExpr {
    terms: BTreeMap<AbgdMono, BigInt>,
}

const ABGD_SYMBOLS: [char; 4] = ['α', 'β', 'γ', 'δ'];

fn superscript(n: u16) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl AbgdExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, m: AbgdMono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AbgdMono, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// All coefficients nonnegative, i.e. the expression lies in ℕ[α,β,γ,δ].
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut e = m1.0;
                for i in 0..4 {
                    e[i] += m2.0[i];
                }
                out.add_term(AbgdMono(e), c1 * c2);
            }
        }
        out
    }

    /// Substitute α ↦ lb·rb, β ↦ lb+rb, γ ↦ l·r, δ ↦ l+r.
    pub fn expand(&self) -> WeightPoly {
        let images = abgd_images();
        let mut out = WeightPoly::zero();
        for (m, c) in &self.terms {
            let mut p = WeightPoly::constant(c.clone());
            for i in 0..4 {
                if m.0[i] > 0 {
                    p = p.mul_ref(&images[i].pow(m.0[i] as u32));
                }
            }
            out.add_assign_ref(&p);
        }
        out
    }

    /// Evaluate at integer values of (α, β, γ, δ).
    pub fn eval(&self, values: [i64; 4]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..4 {
                v *= num_traits::pow(BigInt::from(values[i]), m.0[i] as usize);
            }
            total += v;
        }
        total
    }

    /// Collect a polynomial in `lb, l, rb, r` that is symmetric under
    /// `lb ↔ rb` and under `l ↔ r` into α/β/γ/δ form.
    pub fn collect(p: &WeightPoly) -> Result<Self> {
        if p.support().iter().any(|g| g.index() >= 4) {
            return Err(Error::NotCollectable(p.to_string()));
        }
        // Leading monomial in lex order lb > rb > l > r.
        let key = |m: &Monomial| [m.exp(Gen::Lb), m.exp(Gen::Rb), m.exp(Gen::L), m.exp(Gen::R)];
        let images = abgd_images();
        let mut rest = p.clone();
        let mut out = Self::zero();
        while let Some((m, c)) = rest.terms().max_by_key(|(m, _)| key(m)) {
            let [a, b, c2, d] = key(m);
            if a < b || c2 < d {
                return Err(Error::NotCollectable(p.to_string()));
            }
            let coef = c.clone();
            let mono = AbgdMono([b, a - b, d, c2 - d]);
            let mut img = WeightPoly::constant(coef.clone());
            for i in 0..4 {
                img = img.mul_ref(&images[i].pow(mono.0[i] as u32));
            }
            rest.sub_assign_ref(&img);
            out.add_term(mono, coef);
        }
        Ok(out)
    }
}

fn abgd_images() -> [WeightPoly; 4] {
    let g = WeightPoly::gen;
    [
        g(Gen::Lb) * g(Gen::Rb),
        g(Gen::Lb) + g(Gen::Rb),
        g(Gen::L) * g(Gen::R),
        g(Gen::L) + g(Gen::R),
    ]
}

/// The semiorder point α = γ = δ = 1, β = 2.
pub const SEMIORDER_POINT: [i64; 4] = [1, 2, 1, 1];

impl fmt::Display for AbgdExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let is_const = m.0 == [0; 4];
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
            }
            for (sym, &e) in ABGD_SYMBOLS.iter().zip(m.0.iter()) {
                if e > 0 {
                    write!(f, "{sym}")?;
                    if e > 1 {
                        f.write_str(&superscript(e))?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for AbgdExpr {
    type Err = Error;

    /// Parses the rendered form, e.g. `β² + 4βδ + 3α`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("abgd expression: {s:?}"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad());
        }
        let sup = |c: char| "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c);
        let mut out = Self::zero();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigInt::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let mut digits = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                digits.push(chars[i]);
                i += 1;
            }
            let mut coef: BigInt = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let mut e = [0u16; 4];
            let mut saw_symbol = false;
            while i < chars.len() {
                let Some(k) = ABGD_SYMBOLS.iter().position(|&c| c == chars[i]) else { break };
                saw_symbol = true;
                i += 1;
                let mut exp = 0u16;
                let mut any = false;
                while i < chars.len() {
                    match sup(chars[i]) {
                        Some(d) => {
                            exp = exp * 10 + d as u16;
                            any = true;
                            i += 1;
                        }
                        None => break,
                    }
                }
                e[k] += if any { exp } else { 1 };
            }
            if digits.is_empty() && !saw_symbol {
                return Err(bad());
            }
            coef *= sign;
            out.add_term(AbgdMono(e), coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: Gen) -> WeightPoly {
        WeightPoly::gen(x)
    }

    #[test]
    fn binomial_square() {
        let p = (g(Gen::Lb) + g(Gen::Rb)).pow(2);
        assert_eq!(p.to_string(), "lb^2 + 2*lb*rb + rb^2");
    }

    #[test]
    fn additive_identity_and_product() {
        let p = g(Gen::L) + g(Gen::R);
        assert_eq!(p.clone() + WeightPoly::zero(), p);
        let prod = p * (g(Gen::L) * g(Gen::R));
        assert_eq!(prod.to_string(), "l^2*r + l*r^2");
    }

    #[test]
    fn text_round_trip() {
        let p: WeightPoly = "-3*lb^2*q + l - 7 + 2*r*s*t^3".parse().unwrap();
        let again: WeightPoly = p.to_string().parse().unwrap();
        assert_eq!(p, again);
        assert_eq!("0".parse::<WeightPoly>().unwrap(), WeightPoly::zero());
        assert!("lb^".parse::<WeightPoly>().is_err());
        let half: RatPoly = "1/2*q + 3".parse().unwrap();
        assert_eq!(half.to_string(), "1/2*q + 3");
    }

    #[test]
    fn abgd_substitution() {
        let e: AbgdExpr = "β² + α".parse().unwrap();
        assert_eq!(e.expand().to_string(), "lb^2 + 3*lb*rb + rb^2");
        let d: AbgdExpr = "δ".parse().unwrap();
        assert_eq!(d.expand(), g(Gen::L) + g(Gen::R));
    }

    #[test]
    fn abgd_render_and_collect() {
        let e: AbgdExpr = "δ² + 4βδ + β² + 3α + 3γ".parse().unwrap();
        assert_eq!(e.to_string(), "β² + 4βδ + δ² + 3α + 3γ");
        assert_eq!(AbgdExpr::collect(&e.expand()).unwrap(), e);
        assert_eq!(e.eval(SEMIORDER_POINT), BigInt::from(19));
        let lopsided = g(Gen::Lb);
        assert!(AbgdExpr::collect(&lopsided).is_err());
    }

    #[test]
    fn evaluation_needs_every_generator() {
        let p = g(Gen::Lb) * g(Gen::Q);
        assert!(p.eval(&assignment([(Gen::Lb, 2)])).is_err());
        assert_eq!(p.eval(&assignment([(Gen::Lb, 2), (Gen::Q, 5)])).unwrap(), BigInt::from(10));
    }

    #[test]
    fn substitution_and_specialization() {
        let p = g(Gen::Lb).pow(2) + g(Gen::L);
        let q = p.substitute(Gen::Lb, &(g(Gen::L) + WeightPoly::one()));
        assert_eq!(q.to_string(), "l^2 + 3*l + 1");
        let s = p.specialize(&assignment([(Gen::Lb, 3)]));
        assert_eq!(s.to_string(), "l + 9");
    }
}
