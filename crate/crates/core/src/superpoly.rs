//! Polynomials tensored with an exterior algebra on odd generators.
//!
//! An [`ExtPolynomial`] is `Σ_α f_α ω_α` where `ω_α` is the ascending wedge of
//! the generators whose bits are set in `α`. The symmetric group acts by
//! `s_i(ω_i) = ω_i + (x_i - x_{i+1}) ω_{i+1}`, fixing the other `ω_j`; this is
//! not the index-permuting action (see [`crate::solomon`] for that one).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{check_index, AlgebraError, Result};
use crate::perm::Perm;
use crate::poly::{fmt_monomial, fmt_signed_terms, Polynomial};
use crate::scalar::Scalar;

/// Sign of `ω_a ∧ ω_b` relative to the ascending wedge of `a | b`, or `None`
/// when the two masks overlap.
pub fn merge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let low = rest.trailing_zeros();
        swaps += (a >> (low + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

/// Generator indices (1-based, ascending) of a mask.
pub fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

pub fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub(crate) fn wedge_name(mask: u32, letter: &str) -> String {
    mask_indices(mask).iter().map(|i| format!("{}{}", letter, i)).collect::<Vec<_>>().join("*")
}

/// Orders masks by exterior degree, then lexicographically by indices.
pub fn mask_order_key(mask: u32) -> (u32, Vec<usize>) {
    (mask.count_ones(), mask_indices(mask))
}

/// An element of `Pol_n ⊗ Λ(ω_1..ω_n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtPolynomial<S: Scalar> {
    nvars: usize,
    comps: BTreeMap<u32, Polynomial<S>>,
}

impl<S: Scalar> ExtPolynomial<S> {
    pub fn zero(nvars: usize) -> Self {
        ExtPolynomial { nvars, comps: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Polynomial::one(nvars))
    }

    pub fn from_poly(p: Polynomial<S>) -> Self {
        Self::term(p, 0)
    }

    /// `f ω_α`.
    pub fn term(f: Polynomial<S>, mask: u32) -> Self {
        let mut v = Self::zero(f.nvars());
        v.add_component(mask, f);
        v
    }

    pub fn omega(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "w{} outside 1..={}", i, nvars);
        Self::term(Polynomial::one(nvars), 1 << (i - 1))
    }

    pub fn wedge(nvars: usize, mask: u32) -> Self {
        Self::term(Polynomial::one(nvars), mask)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, mask: u32) -> Polynomial<S> {
        self.comps.get(&mask).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    pub fn components(&self) -> impl Iterator<Item = (&u32, &Polynomial<S>)> {
        self.comps.iter()
    }

    pub fn add_component(&mut self, mask: u32, f: Polynomial<S>) {
        assert_eq!(f.nvars(), self.nvars);
        if f.is_zero() {
            return;
        }
        let merged = match self.comps.remove(&mask) {
            Some(g) => &g + &f,
            None => f,
        };
        if !merged.is_zero() {
            self.comps.insert(mask, merged);
        }
    }

    pub fn map_components<F: Fn(&Polynomial<S>) -> Polynomial<S>>(&self, f: F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (&m, p) in &self.comps {
            out.add_component(m, f(p));
        }
        out
    }

    pub fn try_map_components<F: Fn(&Polynomial<S>) -> Result<Polynomial<S>>>(&self, f: F) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (&m, p) in &self.comps {
            out.add_component(m, f(p)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_components(|p| p.scale(c))
    }

    /// Multiplication by an even polynomial.
    pub fn mul_poly(&self, f: &Polynomial<S>) -> Self {
        self.map_components(|p| p * f)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::NvarsMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&m, p) in &other.comps {
            out.add_component(m, p.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&m, p) in &other.comps {
            out.add_component(m, -p);
        }
        Ok(out)
    }

    /// Product with Koszul signs; overlapping wedges vanish.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (&a, f) in &self.comps {
            for (&b, g) in &other.comps {
                if let Some(neg) = merge_sign(a, b) {
                    let p = f * g;
                    out.add_component(a | b, if neg { -p } else { p });
                }
            }
        }
        Ok(out)
    }

    /// `s_i` acting as a ring automorphism.
    pub fn act_si(&self, i: usize) -> Result<Self> {
        check_index(i, self.nvars.saturating_sub(1))?;
        let bi = 1u32 << (i - 1);
        let bj = 1u32 << i;
        let diff = &Polynomial::var(self.nvars, i) - &Polynomial::var(self.nvars, i + 1);
        let mut out = Self::zero(self.nvars);
        for (&m, f) in &self.comps {
            let g = f.swap(i);
            if m & bi != 0 && m & bj == 0 {
                out.add_component(m & !bi | bj, &g * &diff);
            }
            out.add_component(m, g);
        }
        Ok(out)
    }

    /// `w(v)` for `w = s_{i1} ... s_{im}`, applying `s_{im}` first.
    pub fn act_perm(&self, w: &Perm) -> Result<Self> {
        if w.n() != self.nvars {
            return Err(AlgebraError::NvarsMismatch { left: w.n(), right: self.nvars });
        }
        let mut v = self.clone();
        for &i in w.reduced_word().iter().rev() {
            v = v.act_si(i)?;
        }
        Ok(v)
    }

    /// `(v - s_i v) / (x_i - x_{i+1})`.
    pub fn ext_dd(&self, i: usize) -> Result<Self> {
        let diff = self.try_sub(&self.act_si(i)?)?;
        Ok(diff.map_components(|p| {
            p.div_by_difference(i, i + 1)
                .expect("v - s_i v is divisible by x_i - x_{i+1}")
        }))
    }

    /// `∂_{i1} ... ∂_{im} v`.
    pub fn ext_dd_word(&self, word: &[usize]) -> Result<Self> {
        let mut v = self.clone();
        for &i in word.iter().rev() {
            if v.is_zero() {
                break;
            }
            v = v.ext_dd(i)?;
        }
        Ok(v)
    }

    pub fn ext_dd_perm(&self, w: &Perm) -> Result<Self> {
        self.ext_dd_word(&w.reduced_word())
    }

    /// Occupied `(polynomial degree, exterior degree)` pairs.
    pub fn bidegree(&self) -> BTreeSet<(u32, u32)> {
        let mut out = BTreeSet::new();
        for (&m, f) in &self.comps {
            for (mono, _) in f.terms() {
                out.insert((mono.degree(), m.count_ones()));
            }
        }
        out
    }

    /// Part of exterior degree `k`.
    pub fn exterior_part(&self, k: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (&m, f) in &self.comps {
            if m.count_ones() == k {
                out.add_component(m, f.clone());
            }
        }
        out
    }

    /// Part of bidegree `(d, k)`.
    pub fn bihomogeneous_part(&self, d: u32, k: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (&m, f) in &self.comps {
            if m.count_ones() == k {
                out.add_component(m, f.homogeneous_part(d));
            }
        }
        out
    }

    /// Common parity of the exterior degrees, if there is one.
    pub fn parity(&self) -> Option<u32> {
        let mut ps = self.comps.keys().map(|m| m.count_ones() % 2);
        let first = ps.next().unwrap_or(0);
        if ps.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Reinterprets with a different variable count.
    pub fn with_nvars(&self, nvars: usize) -> Option<Self> {
        let mut out = Self::zero(nvars);
        for (&m, f) in &self.comps {
            if m >> nvars != 0 {
                return None;
            }
            out.add_component(m, f.with_nvars(nvars)?);
        }
        Some(out)
    }
}

/// Checks both forms of the twisted Leibniz rule for `∂_i`.
pub fn leibniz_check<S: Scalar>(i: usize, f: &ExtPolynomial<S>, g: &ExtPolynomial<S>) -> Result<bool> {
    let n = f.nvars();
    let fg = f.try_mul(g)?;
    let lhs = fg.ext_dd(i)?;
    let df = f.ext_dd(i)?;
    let dg = g.ext_dd(i)?;
    let diff = &Polynomial::var(n, i) - &Polynomial::var(n, i + 1);
    let first = &(&(&df * g) + &(f * &dg)) - &(&df * &dg).mul_poly(&diff);
    let second = &(&df * g) + &(&f.act_si(i)? * &dg);
    Ok(lhs == first && lhs == second)
}

macro_rules! binop {
    ($tr:ident, $f:ident, $imp:ident) => {
        impl<S: Scalar> $tr<&ExtPolynomial<S>> for &ExtPolynomial<S> {
            type Output = ExtPolynomial<S>;
            fn $f(self, rhs: &ExtPolynomial<S>) -> ExtPolynomial<S> {
                self.$imp(rhs).expect("operands with different variable counts")
            }
        }
        impl<S: Scalar> $tr for ExtPolynomial<S> {
            type Output = ExtPolynomial<S>;
            fn $f(self, rhs: ExtPolynomial<S>) -> ExtPolynomial<S> {
                (&self).$f(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<S: Scalar> Neg for &ExtPolynomial<S> {
    type Output = ExtPolynomial<S>;
    fn neg(self) -> ExtPolynomial<S> {
        self.map_components(|p| -p)
    }
}

impl<S: Scalar> Neg for ExtPolynomial<S> {
    type Output = ExtPolynomial<S>;
    fn neg(self) -> ExtPolynomial<S> {
        -&self
    }
}

impl<S: Scalar> From<Polynomial<S>> for ExtPolynomial<S> {
    fn from(p: Polynomial<S>) -> Self {
        Self::from_poly(p)
    }
}

/// Text form shared by the exterior types: each wedge gets its coefficient as
/// a prefix, parenthesised when it has several terms.
pub(crate) fn fmt_graded<S: Scalar>(comps: &BTreeMap<u32, Polynomial<S>>, letter: &str) -> String {
    let mut masks: Vec<u32> = comps.keys().copied().collect();
    masks.sort_by_key(|&m| mask_order_key(m));
    let mut terms: Vec<(S, String)> = Vec::new();
    for m in masks {
        let f = &comps[&m];
        let wedge = wedge_name(m, letter);
        if m == 0 {
            for (mono, c) in f.terms().rev() {
                terms.push((c.clone(), fmt_monomial(mono, "x")));
            }
        } else if f.len() == 1 {
            let (mono, c) = f.terms().next().expect("one term");
            let body = fmt_monomial(mono, "x");
            let body = if body.is_empty() { wedge } else { format!("{}*{}", body, wedge) };
            terms.push((c.clone(), body));
        } else {
            let lead_neg = f.leading().map(|(_, c)| c.is_negative_value()).unwrap_or(false);
            let shown = if lead_neg { -f } else { f.clone() };
            let c = if lead_neg { -S::one() } else { S::one() };
            terms.push((c, format!("({})*{}", shown, wedge)));
        }
    }
    fmt_signed_terms(&terms)
}

impl<S: Scalar> fmt::Display for ExtPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_graded(&self.comps, "w"))
    }
}

impl<S: Scalar> ExtPolynomial<S> {
    pub(crate) fn comps_map(&self) -> &BTreeMap<u32, Polynomial<S>> {
        &self.comps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    type P = Polynomial<Rat>;
    type V = ExtPolynomial<Rat>;

    fn brute_sign(a: u32, b: u32) -> Option<bool> {
        if a & b != 0 {
            return None;
        }
        let mut seq: Vec<usize> = mask_indices(a);
        seq.extend(mask_indices(b));
        let mut inv = 0;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] > seq[j] {
                    inv += 1;
                }
            }
        }
        Some(inv % 2 == 1)
    }

    #[test]
    fn merge_sign_exhaustive_8_bits() {
        for a in 0..256u32 {
            for b in 0..256u32 {
                assert_eq!(merge_sign(a, b), brute_sign(a, b), "{:b} {:b}", a, b);
            }
        }
    }

    #[test]
    fn wedge_products() {
        let w = |i| V::omega(3, i);
        assert_eq!((&w(1) * &w(2)).to_string(), "w1*w2");
        assert_eq!((&w(2) * &w(1)).to_string(), "-w1*w2");
        assert!((&w(1) * &w(1)).is_zero());
    }

    #[test]
    fn action_and_differences() {
        let w = |i| V::omega(3, i);
        let x = |i| V::from_poly(P::var(3, i));
        assert_eq!(w(1).act_si(1).unwrap().to_string(), "w1 + (x1 - x2)*w2");
        assert_eq!(w(3).act_si(1).unwrap(), w(3));
        let w12 = &w(1) * &w(2);
        assert_eq!(w12.act_si(1).unwrap(), w12);
        assert_eq!(w(1).ext_dd(1).unwrap(), -w(2));
        assert_eq!((&x(1) * &w(1)).ext_dd(1).unwrap(), &w(1) - &(&x(2) * &w(2)));
        assert!(w(3).ext_dd(1).unwrap().is_zero());
        let b: Vec<_> = (&x(1) * &w(1)).bidegree().into_iter().collect();
        assert_eq!(b, vec![(1, 1)]);
    }

    #[test]
    fn leibniz_examples() {
        let f = V::from_poly(P::var(2, 1));
        let g = V::omega(2, 1);
        assert!(leibniz_check(1, &f, &g).unwrap());
        assert!(leibniz_check(1, &V::one(2), &V::one(2)).unwrap());
    }
}
