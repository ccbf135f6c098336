//! Sparse multivariate polynomials in `x1..xn`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{check_index, AlgebraError, Result};
use crate::perm::Perm;
use crate::scalar::{sign, Scalar};

/// An exponent vector. Ordered degree-lexicographically with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every exponent allows it.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
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

/// A polynomial with coefficients in `S`, stored as a sorted monomial map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<S: Scalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::term(nvars, Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, S::from_int(c))
    }

    /// `x_i`, 1-based. Panics when `i` is out of range.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable x{} outside 1..={}", i, nvars);
        Self::term(nvars, Monomial::var(nvars, i), S::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: S) -> Self {
        assert_eq!(m.0.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(nvars: usize, exps: &[u32]) -> Self {
        Self::term(nvars, Monomial(exps.to_vec()), S::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, S)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.0.len(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(m, c)| m.degree() == 0 && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> S {
        self.coeff(&Monomial(exps.to_vec()))
    }

    /// Constant term.
    pub fn constant_term(&self) -> S {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 if self.degree() == Some(0) => Some(self.constant_term()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i - 1]).max().unwrap_or(0)
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
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Applies `f` to every exponent vector; colliding images are summed.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// `w(f)` with `x_j -> x_{w(j)}`.
    pub fn act_perm(&self, w: &Perm) -> Result<Self> {
        if w.n() != self.nvars {
            return Err(AlgebraError::NvarsMismatch { left: w.n(), right: self.nvars });
        }
        Ok(self.map_monomials(|m| {
            let mut e = vec![0; self.nvars];
            for j in 0..self.nvars {
                e[w.apply(j + 1) - 1] = m.0[j];
            }
            Monomial(e)
        }))
    }

    /// The simple transposition `s_i`, swapping `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: usize) -> Self {
        self.swap_vars(i, i + 1)
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        self.map_monomials(|m| {
            let mut e = m.0.clone();
            e.swap(i - 1, j - 1);
            Monomial(e)
        })
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let a = m.0[i - 1];
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i - 1] -= 1;
            out.add_term(Monomial(e), c.clone() * S::from_int(a as i64));
        }
        Ok(out)
    }

    /// Exact quotient by `x_i - x_j`, or `None` if it does not divide.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Option<Self> {
        let (i0, j0) = (i - 1, j - 1);
        // group by the exponent of x_i; each group is a coefficient free of x_i
        let mut groups: BTreeMap<u32, Vec<(Monomial, S)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let a = e[i0];
            e[i0] = 0;
            groups.entry(a).or_default().push((Monomial(e), c.clone()));
        }
        let top = match groups.keys().next_back() {
            Some(&t) => t,
            None => return Some(Self::zero(self.nvars)),
        };
        // synthetic division by (x_i - a), a = x_j
        let mut quotient = Self::zero(self.nvars);
        let mut carry: Vec<(Monomial, S)> = Vec::new();
        for k in (0..=top).rev() {
            let mut cur = Self::from_terms(self.nvars, carry.drain(..));
            if let Some(g) = groups.remove(&k) {
                for (m, c) in g {
                    cur.add_term(m, c);
                }
            }
            if k == 0 {
                return if cur.is_zero() { Some(quotient) } else { None };
            }
            for (m, c) in &cur.terms {
                let mut e = m.0.clone();
                e[i0] = k - 1;
                quotient.add_term(Monomial(e), c.clone());
                let mut shifted = m.0.clone();
                shifted[j0] += 1;
                carry.push((Monomial(shifted), c.clone()));
            }
        }
        unreachable!()
    }

    /// `f(x_1, .., x_n)` at a point.
    pub fn eval(&self, point: &[S]) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes polynomials for the variables.
    pub fn compose(&self, images: &[Polynomial<S>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let tgt = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Polynomial::zero(tgt);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(tgt, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                t = &t * &img.pow(e);
            }
            out = &out + &t;
        }
        out
    }

    /// Reinterprets the polynomial with `nvars` variables (padding or
    /// dropping unused trailing ones).
    pub fn with_nvars(&self, nvars: usize) -> Option<Self> {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            if m.0.iter().skip(nvars).any(|&e| e != 0) {
                return None;
            }
            let mut e = m.0.clone();
            e.resize(nvars, 0);
            out.add_term(Monomial(e), c.clone());
        }
        Some(out)
    }

    /// Invariant under every transposition inside `lo..=hi`.
    pub fn is_symmetric_in(&self, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|i| &self.swap(i) == self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in(1, self.nvars)
    }

    /// `e_k` in the variables `lo..=hi`; an empty window gives `e_0 = 1`.
    pub fn elementary(nvars: usize, k: usize, lo: usize, hi: usize) -> Self {
        let vars: Vec<usize> = window(lo, hi);
        if k > vars.len() {
            return Self::zero(nvars);
        }
        let mut out = Self::zero(nvars);
        for_each_subset(&vars, k, &mut |sub| {
            let mut e = vec![0; nvars];
            for &v in sub {
                e[v - 1] = 1;
            }
            out.add_term(Monomial(e), S::one());
        });
        out
    }

    /// `h_k` in the variables `lo..=hi`.
    pub fn complete(nvars: usize, k: usize, lo: usize, hi: usize) -> Self {
        let vars: Vec<usize> = window(lo, hi);
        if k == 0 {
            return Self::one(nvars);
        }
        if vars.is_empty() {
            return Self::zero(nvars);
        }
        let mut out = Self::zero(nvars);
        let mut e = vec![0u32; nvars];
        fill_compositions(&vars, 0, k as u32, &mut e, &mut |e| {
            out.add_term(Monomial(e.to_vec()), S::one());
        });
        out
    }

    /// `p_k` in the variables `lo..=hi`; `p_0` is the window size.
    pub fn power_sum(nvars: usize, k: usize, lo: usize, hi: usize) -> Self {
        let vars = window(lo, hi);
        let mut out = Self::zero(nvars);
        for v in vars {
            let mut e = vec![0; nvars];
            e[v - 1] = k as u32;
            out.add_term(Monomial(e), S::one());
        }
        out
    }

    /// Monomial symmetric polynomial `m_μ`; zero when `μ` has more than
    /// `nvars` parts.
    pub fn monomial_symmetric(nvars: usize, mu: &crate::perm::Partition) -> Self {
        if mu.parts().len() > nvars {
            return Self::zero(nvars);
        }
        let mut e = mu.padded(nvars);
        e.sort_unstable();
        let mut out = Self::zero(nvars);
        loop {
            out.add_term(Monomial(e.clone()), S::one());
            if !next_permutation(&mut e) {
                break;
            }
        }
        out
    }

    /// Coordinates of a symmetric polynomial in the `m_μ` basis, read off the
    /// dominant monomials `x^μ`.
    pub fn symmetric_coords(&self) -> BTreeMap<crate::perm::Partition, S> {
        self.terms
            .iter()
            .filter(|(m, _)| m.0.windows(2).all(|w| w[0] >= w[1]))
            .map(|(m, c)| (crate::perm::Partition::new(m.0.iter().map(|&e| e as usize).collect()), c.clone()))
            .collect()
    }

    /// Schur polynomial via the dual Jacobi-Trudi determinant
    /// `det(e_{λ'_i + j - i})` in the variables `lo..=hi`.
    pub fn schur(nvars: usize, lambda: &crate::perm::Partition, lo: usize, hi: usize) -> Self {
        let conj = lambda.conjugate();
        let m = conj.parts().len();
        let entries: Vec<Vec<Self>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let k = conj.parts()[i] as i64 + j as i64 - i as i64;
                        if k < 0 {
                            Self::zero(nvars)
                        } else {
                            Self::elementary(nvars, k as usize, lo, hi)
                        }
                    })
                    .collect()
            })
            .collect();
        determinant(nvars, &entries)
    }
}

fn next_permutation(e: &mut [u32]) -> bool {
    let n = e.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && e[i - 1] >= e[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while e[j] <= e[i - 1] {
        j -= 1;
    }
    e.swap(i - 1, j);
    e[i..].reverse();
    true
}

fn window(lo: usize, hi: usize) -> Vec<usize> {
    if lo == 0 || lo > hi {
        Vec::new()
    } else {
        (lo..=hi).collect()
    }
}

fn for_each_subset<F: FnMut(&[usize])>(vars: &[usize], k: usize, f: &mut F) {
    fn rec<F: FnMut(&[usize])>(vars: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut F) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..vars.len() {
            if vars.len() - i < k - cur.len() {
                break;
            }
            cur.push(vars[i]);
            rec(vars, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(vars, k, 0, &mut Vec::new(), f);
}

fn fill_compositions<F: FnMut(&[u32])>(vars: &[usize], idx: usize, left: u32, e: &mut Vec<u32>, f: &mut F) {
    let v = vars[idx] - 1;
    if idx + 1 == vars.len() {
        e[v] = left;
        f(e);
        e[v] = 0;
        return;
    }
    for a in (0..=left).rev() {
        e[v] = a;
        fill_compositions(vars, idx + 1, left - a, e, f);
    }
    e[v] = 0;
}

/// Determinant of a square polynomial matrix by cofactor expansion along
/// the first row, memoised over the remaining column sets.
pub fn determinant<S: Scalar>(nvars: usize, m: &[Vec<Polynomial<S>>]) -> Polynomial<S> {
    let size = m.len();
    if size == 0 {
        return Polynomial::one(nvars);
    }
    let mut memo: BTreeMap<u64, Polynomial<S>> = BTreeMap::new();
    fn minor<S: Scalar>(
        m: &[Vec<Polynomial<S>>],
        row: usize,
        cols: u64,
        nvars: usize,
        memo: &mut BTreeMap<u64, Polynomial<S>>,
    ) -> Polynomial<S> {
        if row == m.len() {
            return Polynomial::one(nvars);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut out = Polynomial::zero(nvars);
        let mut pos = 0;
        for c in 0..m.len() {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let rest = minor(m, row + 1, cols & !(1 << c), nvars, memo);
                let t = &m[row][c] * &rest;
                out = if pos % 2 == 0 { &out + &t } else { &out - &t };
            }
            pos += 1;
        }
        memo.insert(cols, out.clone());
        out
    }
    minor(m, 0, (1u64 << size) - 1, nvars, &mut memo)
}

/// `e_m(x_1..x_n) = e_m(x_1..x_{n-1}) + x_n e_{m-1}(x_1..x_{n-1})`.
pub fn recursion_check_e(m: usize, n: usize) -> bool {
    type P = Polynomial<crate::scalar::Rat>;
    if n == 0 {
        return true;
    }
    let lhs = P::elementary(n, m, 1, n);
    let tail = if m == 0 { P::zero(n) } else { &P::var(n, n) * &P::elementary(n, m - 1, 1, n - 1) };
    lhs == &P::elementary(n, m, 1, n - 1) + &tail
}

/// `Σ_k (-1)^k e_k h_{m-k} = 0` for `m >= 1`.
pub fn eh_duality_check(n: usize, m: usize) -> bool {
    type P = Polynomial<crate::scalar::Rat>;
    let mut acc = P::zero(n);
    for k in 0..=m {
        let t = &P::elementary(n, k, 1, n) * &P::complete(n, m - k, 1, n);
        acc = &acc + &t.scale(&sign(k));
    }
    acc.is_zero()
}

macro_rules! binop {
    ($tr:ident, $f:ident, $imp:ident) => {
        impl<S: Scalar> $tr<&Polynomial<S>> for &Polynomial<S> {
            type Output = Polynomial<S>;
            fn $f(self, rhs: &Polynomial<S>) -> Polynomial<S> {
                self.$imp(rhs).expect("polynomial operands with different variable counts")
            }
        }
        impl<S: Scalar> $tr for Polynomial<S> {
            type Output = Polynomial<S>;
            fn $f(self, rhs: Polynomial<S>) -> Polynomial<S> {
                (&self).$f(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        -&self
    }
}

pub(crate) fn fmt_monomial(m: &Monomial, letter: &str) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{}{}", letter, i + 1)),
            _ => parts.push(format!("{}{}^{}", letter, i + 1, e)),
        }
    }
    parts.join("*")
}

/// Joins `(coefficient, factor)` pairs into `a*m + b*m' - ...`; an empty
/// factor means a bare constant.
pub(crate) fn fmt_signed_terms<S: Scalar>(terms: &[(S, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, body)) in terms.iter().enumerate() {
        let neg = c.is_negative_value();
        let abs = if neg { -c.clone() } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(body);
        } else {
            out.push_str(&format!("{}*{}", abs, body));
        }
    }
    out
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(S, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (c.clone(), fmt_monomial(m, "x")))
            .collect();
        f.write_str(&fmt_signed_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    type P = Polynomial<Rat>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn monomial_order_is_degree_lex() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![0, 3]);
        assert!(a > b && c > a);
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(2, 1) + &x(2, 2)) * &(&x(2, 1) - &x(2, 2));
        assert_eq!(p, &x(2, 1).pow(2) - &x(2, 2).pow(2));
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn printing() {
        let half = Rat::new(1.into(), 2.into());
        let p = &(&x(3, 1).pow(2) * &x(3, 2)) - &x(3, 3).scale(&half);
        assert_eq!(p.to_string(), "x1^2*x2 - 1/2*x3");
        assert_eq!(P::zero(2).to_string(), "0");
        assert_eq!((-&P::one(1)).to_string(), "-1");
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(P::one(2).try_add(&P::one(3)).is_err());
    }

    #[test]
    fn symmetric_constructors() {
        assert_eq!(P::elementary(2, 2, 1, 2), &x(2, 1) * &x(2, 2));
        assert_eq!(P::elementary(2, 3, 1, 2), P::zero(2));
        assert_eq!(
            P::complete(2, 2, 1, 2),
            &(&x(2, 1).pow(2) + &(&x(2, 1) * &x(2, 2))) + &x(2, 2).pow(2)
        );
        assert_eq!(P::elementary(3, 0, 2, 1), P::one(3));
        assert_eq!(P::complete(3, 1, 2, 1), P::zero(3));
        assert_eq!(P::power_sum(2, 3, 1, 2), &x(2, 1).pow(3) + &x(2, 2).pow(3));
    }

    #[test]
    fn derivative() {
        assert_eq!(x(2, 1).pow(2).partial_derivative(1).unwrap(), x(2, 1).scale(&Rat::from_int(2)));
        assert!(x(2, 1).partial_derivative(2).unwrap().is_zero());
        assert!(x(2, 1).partial_derivative(3).is_err());
    }

    #[test]
    fn exact_division() {
        let f = &x(3, 1).pow(3) - &x(3, 3).pow(3);
        let q = f.div_by_difference(1, 3).unwrap();
        assert_eq!(&q * &(&x(3, 1) - &x(3, 3)), f);
        assert!(x(3, 1).div_by_difference(1, 2).is_none());
    }

    #[test]
    fn schur_small() {
        use crate::perm::Partition;
        assert_eq!(P::schur(2, &Partition::new(vec![2]), 1, 1), x(2, 1).pow(2));
        assert_eq!(P::schur(2, &Partition::new(vec![]), 1, 2), P::one(2));
        assert_eq!(P::schur(2, &Partition::new(vec![1, 1]), 1, 2), &x(2, 1) * &x(2, 2));
    }

    #[test]
    fn monomial_symmetric_functions() {
        use crate::perm::Partition;
        let m21 = P::monomial_symmetric(3, &Partition::new(vec![2, 1]));
        assert_eq!(m21.len(), 6);
        assert!(m21.is_symmetric());
        let c = m21.symmetric_coords();
        assert_eq!(c.len(), 1);
        assert_eq!(P::monomial_symmetric(2, &Partition::new(vec![1, 1, 1])), P::zero(2));
        assert_eq!(P::monomial_symmetric(2, &Partition::new(vec![])), P::one(2));
    }

    #[test]
    fn recursion_and_duality() {
        assert!(recursion_check_e(1, 2));
        assert!(recursion_check_e(2, 3));
        assert!(recursion_check_e(0, 3));
        for n in 1..=3 {
            for m in 1..=2 * n {
                assert!(eh_duality_check(n, m));
            }
        }
    }
}
