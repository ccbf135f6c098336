//! The extended nilHecke algebra `NH^ω_n` in PBW normal form.
//!
//! Elements are stored as `Σ_w F_w ∂_w` with `F_w ∈ Pol_n ⊗ Λ(ω)`, which is
//! the basis `x^a ω_α ∂_w` grouped by `w`. Multiplication pushes a single
//! `∂_i` leftward through the generator word `x^a ω_α` of each coefficient
//! monomial, one letter at a time, using
//!
//! ```text
//! ∂_i x_i = x_{i+1} ∂_i + 1      ∂_i x_{i+1} = x_i ∂_i - 1
//! ∂_i ω_i = (ω_i + (x_i - x_{i+1}) ω_{i+1}) ∂_i - ω_{i+1}
//! ```
//!
//! and commuting past every other letter. Each step strictly shortens the
//! word to the right of `∂_i`, so the rewriting terminates; `∂_w` with longer
//! words is built one simple reflection at a time.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{check_index, AlgebraError, Result};
use crate::graded::GradedDims;
use crate::perm::Perm;
use crate::poly::{fmt_monomial, fmt_signed_terms, Monomial, Polynomial};
use crate::scalar::{sign, Scalar};
use crate::superpoly::{mask_indices, mask_order_key, wedge_name, ExtPolynomial};

/// An element `Σ_w F_w ∂_w` of `NH^ω_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NhElement<S: Scalar> {
    n: usize,
    terms: BTreeMap<Perm, ExtPolynomial<S>>,
}

/// One PBW basis coordinate: `coeff * x^exps * ω_mask * ∂_perm`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PbwTerm<S: Scalar> {
    pub exps: Vec<u32>,
    pub mask: u32,
    pub perm: Perm,
    pub coeff: S,
}

impl<S: Scalar> NhElement<S> {
    pub fn zero(n: usize) -> Self {
        NhElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_ext(ExtPolynomial::one(n))
    }

    /// `v ∂_id`.
    pub fn from_ext(v: ExtPolynomial<S>) -> Self {
        let n = v.nvars();
        let mut e = Self::zero(n);
        e.add_term(Perm::identity(n), v);
        e
    }

    pub fn from_poly(f: Polynomial<S>) -> Self {
        Self::from_ext(ExtPolynomial::from_poly(f))
    }

    /// `v ∂_w`.
    pub fn term(v: ExtPolynomial<S>, w: Perm) -> Result<Self> {
        if v.nvars() != w.n() {
            return Err(AlgebraError::NvarsMismatch { left: v.nvars(), right: w.n() });
        }
        let mut e = Self::zero(w.n());
        e.add_term(w, v);
        Ok(e)
    }

    pub fn x(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        Ok(Self::from_poly(Polynomial::var(n, i)))
    }

    pub fn omega(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        Ok(Self::from_ext(ExtPolynomial::omega(n, i)))
    }

    pub fn d(n: usize, i: usize) -> Result<Self> {
        check_index(i, n.saturating_sub(1))?;
        Ok(Self::d_perm(&Perm::s(n, i)))
    }

    pub fn d_perm(w: &Perm) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(w.clone(), ExtPolynomial::one(w.n()));
        e
    }

    /// `∂_{i1} ... ∂_{im}`; zero when the word is not reduced.
    pub fn d_word(n: usize, word: &[usize]) -> Result<Self> {
        let w = Perm::from_word(n, word)?;
        Ok(if w.length() == word.len() { Self::d_perm(&w) } else { Self::zero(n) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &ExtPolynomial<S>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Perm) -> ExtPolynomial<S> {
        self.terms.get(w).cloned().unwrap_or_else(|| ExtPolynomial::zero(self.n))
    }

    pub fn add_term(&mut self, w: Perm, v: ExtPolynomial<S>) {
        if v.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&w) {
            Some(old) => &old + &v,
            None => v,
        };
        if !merged.is_zero() {
            self.terms.insert(w, merged);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(AlgebraError::NvarsMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, v) in &other.terms {
            out.add_term(w.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.n);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.scale(c));
        }
        out
    }

    /// `v · self`.
    pub fn left_mul_ext(&self, v: &ExtPolynomial<S>) -> Self {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.terms {
            out.add_term(w.clone(), v * f);
        }
        out
    }

    /// `∂_i · self`.
    pub fn left_mul_d(&self, i: usize) -> Result<Self> {
        check_index(i, self.n.saturating_sub(1))?;
        Ok(self.left_mul_d_cached(i, &mut PushCache::new()))
    }

    fn left_mul_d_cached(&self, i: usize, cache: &mut PushCache<S>) -> Self {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.terms {
            let (p, q) = push_d(i, f, cache);
            out.add_term(w.clone(), p);
            if !q.is_zero() {
                let sw = w.left_mul_s(i);
                if sw.length() > w.length() {
                    out.add_term(sw, q);
                }
            }
        }
        out
    }

    /// PBW normal form of `self · other`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut cache = PushCache::new();
        let mut d_times: HashMap<Perm, Self> = HashMap::new();
        d_times.insert(Perm::identity(self.n), other.clone());
        let mut out = Self::zero(self.n);
        for (u, f) in &self.terms {
            let du = d_times_apply(u, &mut d_times, &mut cache);
            for (w, g) in &du.terms {
                out.add_term(w.clone(), f * g);
            }
        }
        Ok(out)
    }

    /// The action on `Pol_n ⊗ Λ(ω)`: coefficients multiply, `∂_i` acts by the
    /// extended divided difference.
    pub fn act(&self, v: &ExtPolynomial<S>) -> Result<ExtPolynomial<S>> {
        if v.nvars() != self.n {
            return Err(AlgebraError::NvarsMismatch { left: self.n, right: v.nvars() });
        }
        let mut out = ExtPolynomial::zero(self.n);
        for (w, f) in &self.terms {
            out = &out + &(f * &v.ext_dd_perm(w)?);
        }
        Ok(out)
    }

    /// All PBW coordinates, ordered by `∂_w` (length, then reduced word), then
    /// wedge, then descending monomial.
    pub fn pbw_terms(&self) -> Vec<PbwTerm<S>> {
        let mut perms: Vec<&Perm> = self.terms.keys().collect();
        perms.sort_by_key(|w| (w.length(), w.reduced_word()));
        let mut out = Vec::new();
        for w in perms {
            let v = &self.terms[w];
            let mut masks: Vec<u32> = v.components().map(|(&m, _)| m).collect();
            masks.sort_by_key(|&m| mask_order_key(m));
            for m in masks {
                for (mono, c) in v.component(m).terms().rev() {
                    out.push(PbwTerm { exps: mono.0.clone(), mask: m, perm: w.clone(), coeff: c.clone() });
                }
            }
        }
        out
    }

    pub fn from_pbw_terms(n: usize, terms: &[PbwTerm<S>]) -> Result<Self> {
        let mut out = Self::zero(n);
        for t in terms {
            if t.exps.len() != n || t.perm.n() != n {
                return Err(AlgebraError::NvarsMismatch { left: n, right: t.exps.len().max(t.perm.n()) });
            }
            if t.mask >> n != 0 {
                return Err(AlgebraError::Malformed(format!("wedge mask {:b} outside {} generators", t.mask, n)));
            }
            let f = Polynomial::term(n, Monomial(t.exps.clone()), t.coeff.clone());
            out.add_term(t.perm.clone(), ExtPolynomial::term(f, t.mask));
        }
        Ok(out)
    }

    /// Degrees of the basis terms with `deg x = 2`, `deg ∂ = -2`,
    /// `deg ω_k = -2k - 2`.
    pub fn degrees(&self) -> BTreeSet<i64> {
        self.pbw_terms()
            .iter()
            .map(|t| {
                let x: i64 = t.exps.iter().map(|&e| 2 * e as i64).sum();
                let w: i64 = mask_indices(t.mask).iter().map(|&k| -2 * k as i64 - 2).sum();
                x + w - 2 * t.perm.length() as i64
            })
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1 && self.parity().is_some()
    }

    /// Number of odd generators mod 2, if all terms agree.
    pub fn parity(&self) -> Option<u32> {
        let ps: BTreeSet<u32> = self.terms.values().filter_map(|v| v.parity()).collect();
        let mixed = self.terms.values().any(|v| v.parity().is_none());
        match (mixed, ps.len()) {
            (true, _) => None,
            (false, 0) => Some(0),
            (false, 1) => ps.into_iter().next(),
            _ => None,
        }
    }
}

type PushCache<S> = HashMap<(usize, Vec<u32>, u32), (ExtPolynomial<S>, ExtPolynomial<S>)>;

fn d_times_apply<S: Scalar>(
    u: &Perm,
    memo: &mut HashMap<Perm, NhElement<S>>,
    cache: &mut PushCache<S>,
) -> NhElement<S> {
    if let Some(e) = memo.get(u) {
        return e.clone();
    }
    let i = u.left_descents()[0];
    let rest = u.left_mul_s(i);
    let inner = d_times_apply(&rest, memo, cache);
    let e = inner.left_mul_d_cached(i, cache);
    memo.insert(u.clone(), e.clone());
    e
}

/// `∂_i f = P + Q ∂_i` for a coefficient `f`.
fn push_d<S: Scalar>(
    i: usize,
    f: &ExtPolynomial<S>,
    cache: &mut PushCache<S>,
) -> (ExtPolynomial<S>, ExtPolynomial<S>) {
    let n = f.nvars();
    let mut p = ExtPolynomial::zero(n);
    let mut q = ExtPolynomial::zero(n);
    for (&mask, poly) in f.components() {
        for (mono, c) in poly.terms() {
            let key = (i, mono.0.clone(), mask);
            if !cache.contains_key(&key) {
                let v = push_monomial(n, i, &mono.0, mask);
                cache.insert(key.clone(), v);
            }
            let (a, b) = &cache[&key];
            p = &p + &a.scale(c);
            q = &q + &b.scale(c);
        }
    }
    (p, q)
}

#[derive(Clone, Copy)]
enum Letter {
    X(usize),
    W(usize),
}

fn push_monomial<S: Scalar>(n: usize, i: usize, exps: &[u32], mask: u32) -> (ExtPolynomial<S>, ExtPolynomial<S>) {
    let mut letters = Vec::new();
    for (j, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            letters.push(Letter::X(j + 1));
        }
    }
    letters.extend(mask_indices(mask).into_iter().map(Letter::W));
    let xv = |j| ExtPolynomial::from_poly(Polynomial::var(n, j));
    let mut p = ExtPolynomial::zero(n);
    let mut q = ExtPolynomial::one(n);
    let mut suffix = ExtPolynomial::one(n);
    for &l in letters.iter().rev() {
        let (g, a, b) = match l {
            Letter::X(j) if j == i => (xv(j), xv(i + 1), ExtPolynomial::one(n)),
            Letter::X(j) if j == i + 1 => (xv(j), xv(i), -ExtPolynomial::one(n)),
            Letter::X(j) => (xv(j), xv(j), ExtPolynomial::zero(n)),
            Letter::W(j) if j == i => {
                let wi = ExtPolynomial::omega(n, i);
                let wi1 = ExtPolynomial::omega(n, i + 1);
                let a = &wi + &(&wi1 * &(&xv(i) - &xv(i + 1)));
                (wi, a, -wi1)
            }
            Letter::W(j) => {
                let w = ExtPolynomial::omega(n, j);
                (w.clone(), w, ExtPolynomial::zero(n))
            }
        };
        p = &(&a * &p) + &(&b * &suffix);
        q = &a * &q;
        suffix = &g * &suffix;
    }
    (p, q)
}

macro_rules! binop {
    ($tr:ident, $f:ident, $imp:ident) => {
        impl<S: Scalar> $tr<&NhElement<S>> for &NhElement<S> {
            type Output = NhElement<S>;
            fn $f(self, rhs: &NhElement<S>) -> NhElement<S> {
                self.$imp(rhs).expect("operands with different n")
            }
        }
        impl<S: Scalar> $tr for NhElement<S> {
            type Output = NhElement<S>;
            fn $f(self, rhs: NhElement<S>) -> NhElement<S> {
                (&self).$f(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<S: Scalar> Neg for &NhElement<S> {
    type Output = NhElement<S>;
    fn neg(self) -> NhElement<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Neg for NhElement<S> {
    type Output = NhElement<S>;
    fn neg(self) -> NhElement<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for NhElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(S, String)> = self
            .pbw_terms()
            .into_iter()
            .map(|t| {
                let mut parts = Vec::new();
                let x = fmt_monomial(&Monomial(t.exps), "x");
                if !x.is_empty() {
                    parts.push(x);
                }
                if t.mask != 0 {
                    parts.push(wedge_name(t.mask, "w"));
                }
                if !t.perm.is_identity() {
                    let word: Vec<String> = t.perm.reduced_word().iter().map(|i| i.to_string()).collect();
                    parts.push(format!("d[{}]", word.join(" ")));
                }
                (t.coeff, parts.join("*"))
            })
            .collect();
        f.write_str(&fmt_signed_terms(&terms))
    }
}

/// `x^δ = x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
fn x_delta_exps(n: usize) -> Vec<u32> {
    (0..n).map(|i| (n - 1 - i) as u32).collect()
}

/// The index set `Sq(n) = {(l_1..l_{n-1}) : 0 <= l_v <= v}`.
pub fn sq(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for v in 1..n {
        out = out
            .into_iter()
            .flat_map(|l: Vec<usize>| {
                (0..=v).map(move |k| {
                    let mut m = l.clone();
                    m.push(k);
                    m
                })
            })
            .collect();
    }
    out
}

/// `(0, 1 - l_1, ..., n - 1 - l_{n-1})`.
pub fn ell_hat(ell: &[usize]) -> Vec<u32> {
    std::iter::once(0).chain(ell.iter().enumerate().map(|(v, &l)| (v + 1 - l) as u32)).collect()
}

/// `Π_v e_{l_v}(x_1..x_v)`.
pub fn e_ell<S: Scalar>(n: usize, ell: &[usize]) -> Polynomial<S> {
    ell.iter()
        .enumerate()
        .fold(Polynomial::one(n), |acc, (v, &l)| &acc * &Polynomial::elementary(n, l, 1, v + 1))
}

/// `e_l ∂_{w0}`.
pub fn sigma_ell<S: Scalar>(n: usize, ell: &[usize]) -> NhElement<S> {
    NhElement::term(ExtPolynomial::from_poly(e_ell(n, ell)), Perm::longest(n)).expect("same n")
}

/// `(-1)^{|l̂|} x^δ ∂_{w0} x^{l̂}`.
pub fn lambda_ell<S: Scalar>(n: usize, ell: &[usize]) -> NhElement<S> {
    let hat = ell_hat(ell);
    let size: u32 = hat.iter().sum();
    let left = NhElement::term(
        ExtPolynomial::from_poly(Polynomial::monomial(n, &x_delta_exps(n)).scale(&sign(size as usize))),
        Perm::longest(n),
    )
    .expect("same n");
    &left * &NhElement::from_poly(Polynomial::monomial(n, &hat))
}

/// The idempotents `σ_l λ_l`, indexed by `Sq(n)`. Refuses `n > bound`.
pub fn idempotents<S: Scalar>(n: usize, bound: usize) -> Result<Vec<(Vec<usize>, NhElement<S>)>> {
    if n > bound {
        return Err(AlgebraError::CapExceeded { what: "idempotent rank n".into(), value: n, cap: bound });
    }
    if n == 0 {
        return Err(AlgebraError::Precondition("n >= 1".into()));
    }
    Ok(sq(n)
        .into_iter()
        .map(|l| {
            let e = &sigma_ell::<S>(n, &l) * &lambda_ell(n, &l);
            (l, e)
        })
        .collect())
}

/// Degrees `2|l̂|` of the matrix columns.
pub fn column_shifts(n: usize) -> GradedDims {
    GradedDims::from_degrees(sq(n).iter().map(|l| 2 * ell_hat(l).iter().sum::<u32>() as i64))
}

pub type ExtMatrix<S> = Vec<Vec<ExtPolynomial<S>>>;

/// Divides every term of `f` by the monomial `m`.
fn div_monomial<S: Scalar>(f: &Polynomial<S>, m: &Monomial) -> Option<Polynomial<S>> {
    let mut out = Polynomial::zero(f.nvars());
    for (mono, c) in f.terms() {
        out.add_term(mono.div(m)?, c.clone());
    }
    Some(out)
}

/// The matrix of `e` over extended symmetric polynomials: entry `(l, l')` is
/// the `z` with `λ_l e σ_{l'} = z x^δ ∂_{w0}`.
pub fn matrix_iso<S: Scalar>(e: &NhElement<S>) -> Result<ExtMatrix<S>> {
    let n = e.n();
    let idx = sq(n);
    let w0 = Perm::longest(n);
    let xd = Monomial(x_delta_exps(n));
    let sigmas: Vec<NhElement<S>> = idx.iter().map(|l| sigma_ell(n, l)).collect();
    let mut rows = Vec::with_capacity(idx.len());
    for l in &idx {
        let le = &lambda_ell::<S>(n, l) * e;
        let mut row = Vec::with_capacity(idx.len());
        for s in &sigmas {
            let prod = &le * s;
            if prod.terms().any(|(w, _)| *w != w0) {
                return Err(AlgebraError::Malformed("matrix entry outside the ∂_{w0} line".into()));
            }
            let z = prod.coeff(&w0).try_map_components(|p| {
                div_monomial(p, &xd).ok_or_else(|| AlgebraError::Malformed("entry not divisible by x^δ".into()))
            })?;
            row.push(z);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `Σ σ_l M_{l l'} λ_{l'}`.
pub fn matrix_iso_inv<S: Scalar>(n: usize, m: &ExtMatrix<S>) -> Result<NhElement<S>> {
    let idx = sq(n);
    if m.len() != idx.len() || m.iter().any(|r| r.len() != idx.len()) {
        return Err(AlgebraError::Malformed(format!("expected a {0}x{0} matrix", idx.len())));
    }
    let lambdas: Vec<NhElement<S>> = idx.iter().map(|l| lambda_ell(n, l)).collect();
    let mut out = NhElement::zero(n);
    for (l, row) in idx.iter().zip(m) {
        let s = sigma_ell::<S>(n, l);
        for (z, lam) in row.iter().zip(&lambdas) {
            if z.is_zero() {
                continue;
            }
            let left = &s * &NhElement::from_ext(z.clone());
            out = &out + &(&left * lam);
        }
    }
    Ok(out)
}

/// Matrix product with the left factor kept on the left in every entry.
pub fn ext_mat_mul<S: Scalar>(a: &ExtMatrix<S>, b: &ExtMatrix<S>) -> ExtMatrix<S> {
    let cols = b.first().map(Vec::len).unwrap_or(0);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let nv = row.first().map(|v| v.nvars()).unwrap_or(0);
                    row.iter().zip(b).fold(ExtPolynomial::zero(nv), |acc, (x, brow)| &acc + &(x * &brow[j]))
                })
                .collect()
        })
        .collect()
}

pub fn ext_identity<S: Scalar>(n: usize, size: usize) -> ExtMatrix<S> {
    (0..size)
        .map(|i| (0..size).map(|j| if i == j { ExtPolynomial::one(n) } else { ExtPolynomial::zero(n) }).collect())
        .collect()
}

/// Generators `x_i`, `∂_i`, `ω_i` with their names.
pub fn generators<S: Scalar>(n: usize) -> Vec<(String, NhElement<S>)> {
    let mut g = Vec::new();
    for i in 1..=n {
        g.push((format!("x{}", i), NhElement::x(n, i).expect("in range")));
    }
    for i in 1..n {
        g.push((format!("d{}", i), NhElement::d(n, i).expect("in range")));
    }
    for i in 1..=n {
        g.push((format!("w{}", i), NhElement::omega(n, i).expect("in range")));
    }
    g
}

/// Whether `z` supercommutes with every generator, odd generators being the
/// `ω_i` and the sign `(-1)^{p(z) p(g)}` taken from parities.
pub fn center_check<S: Scalar>(z: &NhElement<S>) -> Result<bool> {
    if !z.is_homogeneous() {
        return Err(AlgebraError::Precondition("center_check needs a homogeneous element".into()));
    }
    let pz = z.parity().unwrap_or(0);
    for (name, g) in generators::<S>(z.n()) {
        let pg = u32::from(name.starts_with('w'));
        let zg = z * &g;
        let gz = &g * z;
        let rhs = if pz * pg % 2 == 1 { -gz } else { gz };
        if zg != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A named identity and whether it normalises to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

/// Every defining relation of `NH^ω_n`, the dot-slide identities up to
/// `max_a`, and associativity over all generator triples.
pub fn relation_suite<S: Scalar>(n: usize, max_a: usize) -> Vec<RelationCheck> {
    let x = |i| NhElement::<S>::x(n, i).expect("in range");
    let d = |i| NhElement::<S>::d(n, i).expect("in range");
    let w = |i| NhElement::<S>::omega(n, i).expect("in range");
    let one = NhElement::<S>::one(n);
    let mut out = Vec::new();
    let mut push = |name: String, e: NhElement<S>| out.push(RelationCheck { name, holds: e.is_zero() });
    for i in 1..=n {
        for j in 1..=n {
            push(format!("x{i} x{j} = x{j} x{i}"), &(&x(i) * &x(j)) - &(&x(j) * &x(i)));
            push(format!("x{i} w{j} = w{j} x{i}"), &(&x(i) * &w(j)) - &(&w(j) * &x(i)));
            push(format!("w{i} w{j} = -w{j} w{i}"), &(&w(i) * &w(j)) + &(&w(j) * &w(i)));
        }
    }
    for i in 1..n {
        push(format!("d{i}^2 = 0"), &d(i) * &d(i));
        push(format!("x{i} d{i} - d{i} x{} = 1", i + 1), &(&(&x(i) * &d(i)) - &(&d(i) * &x(i + 1))) - &one);
        push(format!("d{i} x{i} - x{} d{i} = 1", i + 1), &(&(&d(i) * &x(i)) - &(&x(i + 1) * &d(i))) - &one);
        for j in 1..=n {
            if j != i && j != i + 1 {
                push(format!("d{i} x{j} = x{j} d{i}"), &(&d(i) * &x(j)) - &(&x(j) * &d(i)));
            }
            let mut rhs = &w(j) * &d(i);
            if i == j {
                let inner = &(&x(i + 1) * &d(i)) - &(&d(i) * &x(i + 1));
                rhs = &rhs - &(&w(i + 1) * &inner);
            }
            push(format!("d{i} w{j} rule"), &(&d(i) * &w(j)) - &rhs);
        }
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                push(format!("d{i} d{j} = d{j} d{i}"), &(&d(i) * &d(j)) - &(&d(j) * &d(i)));
            }
        }
        if i + 1 < n {
            let l = &(&d(i) * &d(i + 1)) * &d(i);
            let r = &(&d(i + 1) * &d(i)) * &d(i + 1);
            push(format!("braid d{i} d{}", i + 1), &l - &r);
        }
        for a in 0..=max_a {
            let p = a as u32 + 1;
            let xi = NhElement::from_poly(Polynomial::var(n, i).pow(p));
            let xj = NhElement::from_poly(Polynomial::var(n, i + 1).pow(p));
            let h = NhElement::from_poly(Polynomial::complete(n, a, i, i + 1));
            push(format!("dot-slide left a={a} i={i}"), &(&(&d(i) * &xi) - &(&xj * &d(i))) - &h);
            push(format!("dot-slide right a={a} i={i}"), &(&(&xi * &d(i)) - &(&d(i) * &xj)) - &h);
        }
    }
    let gens = generators::<S>(n);
    let mut assoc = true;
    for (_, a) in &gens {
        for (_, b) in &gens {
            let ab = a * b;
            for (_, c) in &gens {
                assoc &= &ab * c == a * &(b * c);
            }
        }
    }
    push("associativity on generator triples".into(), if assoc { NhElement::zero(n) } else { one.clone() });
    out
}
