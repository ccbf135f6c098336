//! Odd differentials on `NH^ω_n` and on extended symmetric polynomials,
//! Koszul cohomology of the restricted complex, deformed quotients, and
//! bounded membership in the deformed cyclotomic ideal.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::divdiff::monomials_of_degree;
use crate::error::{AlgebraError, Result};
use crate::extsym::hw;
use crate::graded::GradedDims;
use crate::linalg::{generalized_eigenspace_dim, rank_sparse, SparseEchelon, SparseVec};
use crate::nilhecke::NhElement;
use crate::perm::{Partition, Perm};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::{sign, Scalar};
use crate::superpoly::{mask_indices, ExtPolynomial};

/// The coefficients `κ_1..κ_N` of `P(x) = x^N + Σ κ_j x^{N-j}`, optionally
/// with the roots they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiset<S: Scalar> {
    kappas: Vec<S>,
    roots: Option<Vec<(S, usize)>>,
}

impl<S: Scalar> RootMultiset<S> {
    pub fn from_kappas(kappas: Vec<S>) -> Result<Self> {
        if kappas.is_empty() {
            return Err(AlgebraError::Precondition("N >= 1".into()));
        }
        Ok(RootMultiset { kappas, roots: None })
    }

    /// `κ = 0`, i.e. `P(x) = x^N`.
    pub fn undeformed(big_n: usize) -> Result<Self> {
        Self::from_kappas(vec![S::zero(); big_n])
    }

    /// Expands `Π (x - λ_j)^{N_j}`. Roots must be pairwise distinct.
    pub fn from_roots(roots: &[(S, usize)]) -> Result<Self> {
        for (a, (r, m)) in roots.iter().enumerate() {
            if *m == 0 {
                return Err(AlgebraError::Precondition(format!("root {} has multiplicity 0", r)));
            }
            if roots[..a].iter().any(|(s, _)| s == r) {
                return Err(AlgebraError::Precondition(format!("repeated root {}", r)));
            }
        }
        let mut coeffs = vec![S::one()];
        for (r, m) in roots {
            for _ in 0..*m {
                let mut next = coeffs.clone();
                next.push(S::zero());
                for (k, c) in coeffs.iter().enumerate() {
                    next[k + 1] = next[k + 1].clone() - r.clone() * c.clone();
                }
                coeffs = next;
            }
        }
        let mut rm = Self::from_kappas(coeffs[1..].to_vec())?;
        rm.roots = Some(roots.to_vec());
        Ok(rm)
    }

    pub fn big_n(&self) -> usize {
        self.kappas.len()
    }

    /// `κ_j` with `κ_0 = 1`.
    pub fn kappa(&self, j: usize) -> S {
        match j {
            0 => S::one(),
            _ => self.kappas.get(j - 1).cloned().unwrap_or_else(S::zero),
        }
    }

    pub fn kappas(&self) -> &[S] {
        &self.kappas
    }

    pub fn is_undeformed(&self) -> bool {
        self.kappas.iter().all(Zero::is_zero)
    }

    /// `P(x_var)` in `nvars` variables.
    pub fn poly(&self, nvars: usize, var: usize) -> Polynomial<S> {
        let x = Polynomial::var(nvars, var);
        (0..=self.big_n()).fold(Polynomial::zero(nvars), |acc, j| {
            &acc + &x.pow((self.big_n() - j) as u32).scale(&self.kappa(j))
        })
    }

    /// Roots with multiplicities, either as supplied or found among the
    /// rational candidates. `None` if `P` does not split over the rationals.
    pub fn roots(&self) -> Option<Vec<(S, usize)>> {
        if let Some(r) = &self.roots {
            return Some(r.clone());
        }
        rational_roots(&(0..=self.big_n()).map(|j| self.kappa(j)).collect::<Vec<_>>())
    }
}

fn small_divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let v = v.abs().to_u64()?;
    if v > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots of a monic polynomial given by descending coefficients.
fn rational_roots<S: Scalar>(coeffs: &[S]) -> Option<Vec<(S, usize)>> {
    let mut c: Vec<S> = coeffs.to_vec();
    let mut found: Vec<(S, usize)> = Vec::new();
    let bump = |found: &mut Vec<(S, usize)>, r: S| match found.iter_mut().find(|(s, _)| *s == r) {
        Some(e) => e.1 += 1,
        None => found.push((r, 1)),
    };
    while c.len() > 1 && c.last().map(Zero::is_zero).unwrap_or(false) {
        c.pop();
        bump(&mut found, S::zero());
    }
    while c.len() > 1 {
        let fr: Vec<(BigInt, BigInt)> = c.iter().map(Scalar::to_fraction).collect();
        let l = fr.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
        let ints: Vec<BigInt> = fr.into_iter().map(|(n, d)| n * (&l / d)).collect();
        let ps = small_divisors(ints.last().expect("nonempty"))?;
        let qs = small_divisors(&ints[0])?;
        let eval = |x: &S| c.iter().fold(S::zero(), |acc, a| acc * x.clone() + a.clone());
        let mut root = None;
        'outer: for p in &ps {
            for q in &qs {
                for sgn in [1, -1] {
                    let cand = S::from_fraction(&(p * BigInt::from(sgn)), q)?;
                    if eval(&cand).is_zero() {
                        root = Some(cand);
                        break 'outer;
                    }
                }
            }
        }
        let r = root?;
        let mut q = Vec::with_capacity(c.len() - 1);
        let mut acc = S::zero();
        for a in &c[..c.len() - 1] {
            acc = acc * r.clone() + a.clone();
            q.push(acc.clone());
        }
        c = q;
        bump(&mut found, r);
    }
    Some(found)
}

/// Sign convention for the deformed differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SigmaSign {
    /// `d^Σ(ω_i) = (-1)^{i+1} Σ_j κ_j h_{N-i+1-j}(x_1..x_i)`.
    #[default]
    AsPrinted,
    /// The opposite sign, so that `κ = 0` gives back `d_N`.
    MatchUndeformed,
}

/// An odd derivation killing `x_i` and `∂_i`, given by the images `d(ω_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential<S: Scalar> {
    images: Vec<Polynomial<S>>,
}

fn complete_or_zero<S: Scalar>(n: usize, k: i64, lo: usize, hi: usize) -> Polynomial<S> {
    if k < 0 {
        Polynomial::zero(n)
    } else {
        Polynomial::complete(n, k as usize, lo, hi)
    }
}

impl<S: Scalar> Differential<S> {
    /// `d_N(ω_i) = (-1)^i h_{N-i+1}(x_1..x_i)`.
    pub fn undeformed(n: usize, big_n: usize) -> Result<Self> {
        if big_n == 0 {
            return Err(AlgebraError::Precondition("N >= 1".into()));
        }
        let images = (1..=n)
            .map(|i| complete_or_zero(n, big_n as i64 - i as i64 + 1, 1, i).scale(&sign(i)))
            .collect();
        Ok(Differential { images })
    }

    pub fn deformed(n: usize, sigma: &RootMultiset<S>, convention: SigmaSign) -> Self {
        let big_n = sigma.big_n() as i64;
        let images = (1..=n)
            .map(|i| {
                let top = big_n - i as i64 + 1;
                let mut f = Polynomial::zero(n);
                for j in 0..=top.max(-1) {
                    f = &f + &complete_or_zero(n, top - j, 1, i).scale(&sigma.kappa(j as usize));
                }
                let s = match convention {
                    SigmaSign::AsPrinted => i + 1,
                    SigmaSign::MatchUndeformed => i,
                };
                f.scale(&sign(s))
            })
            .collect();
        Differential { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `d(ω_i)`.
    pub fn image(&self, i: usize) -> &Polynomial<S> {
        &self.images[i - 1]
    }

    pub fn apply_ext(&self, v: &ExtPolynomial<S>) -> Result<ExtPolynomial<S>> {
        let n = self.n();
        if v.nvars() != n {
            return Err(AlgebraError::NvarsMismatch { left: n, right: v.nvars() });
        }
        let mut out = ExtPolynomial::zero(n);
        for (&mask, f) in v.components() {
            for (t, &i) in mask_indices(mask).iter().enumerate() {
                let g = self.image(i);
                if g.is_zero() {
                    continue;
                }
                out.add_component(mask & !(1 << (i - 1)), (f * g).scale(&sign(t)));
            }
        }
        Ok(out)
    }

    pub fn apply_nh(&self, e: &NhElement<S>) -> Result<NhElement<S>> {
        if e.n() != self.n() {
            return Err(AlgebraError::NvarsMismatch { left: self.n(), right: e.n() });
        }
        let mut out = NhElement::zero(e.n());
        for (w, f) in e.terms() {
            out.add_term(w.clone(), self.apply_ext(f)?);
        }
        Ok(out)
    }
}

/// Checks that `d^Σ` respects the two relations involving `d^Σ(ω_{i+1})`:
/// it commutes with `∂_i`, and the image of the `∂_i ω_i` rule holds.
pub fn relations_killed_check<S: Scalar>(sigma: &RootMultiset<S>, n: usize) -> bool {
    let d = Differential::deformed(n, sigma, SigmaSign::AsPrinted);
    let img = |i: usize| NhElement::from_poly(d.image(i).clone());
    (1..n).all(|i| {
        let di = NhElement::<S>::d(n, i).expect("in range");
        let x = NhElement::<S>::x(n, i + 1).expect("in range");
        let (a, b) = (img(i), img(i + 1));
        let commute = &di * &b == &b * &di;
        let lhs = &(&di * &a) + &(&(&b * &x) * &di);
        let rhs = &(&a * &di) + &(&(&di * &x) * &b);
        commute && lhs == rhs
    })
}

/// `ω̂_i`, reindexed so that `d_N(ω̂_i) = (-1)^i h_{N-i+1}(x_1..x_n)`.
pub fn omega_hat<S: Scalar>(n: usize, i: usize) -> ExtPolynomial<S> {
    hw(n, n + 1 - i)
}

/// `d_N(ω̂_i) = (-1)^i h_{N-i+1}(x_1..x_n)` for every `i`.
pub fn restrict_check(n: usize, big_n: usize) -> Result<bool> {
    type R = crate::scalar::Rat;
    if big_n + 1 < n {
        return Err(AlgebraError::Precondition(format!("N >= n - 1 (n={}, N={})", n, big_n)));
    }
    let d = Differential::<R>::undeformed(n, big_n)?;
    for i in 1..=n {
        let lhs = d.apply_ext(&omega_hat(n, i))?;
        let rhs = complete_or_zero::<R>(n, big_n as i64 - i as i64 + 1, 1, n).scale(&sign(i));
        if lhs != ExtPolynomial::from_poly(rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `h_{N-i+1}(x_1..x_n) = Σ_j h_{N-i-j+1}(x_1..x_{i+j}) h_j(x_{i+j}..x_n)`.
pub fn sym_ident_check(n: usize, big_n: usize, i: usize) -> Result<bool> {
    type P = Polynomial<crate::scalar::Rat>;
    crate::error::check_index(i, n)?;
    let top = big_n as i64 - i as i64 + 1;
    let lhs: P = complete_or_zero(n, top, 1, n);
    let rhs = (0..=n - i).fold(P::zero(n), |acc, j| {
        let a: P = complete_or_zero(n, top - j as i64, 1, i + j);
        &acc + &(&a * &P::complete(n, j, i + j, n))
    });
    Ok(lhs == rhs)
}

/// The sequence `g_i = d(ω̂_i)` in `Λ_n`, computed through the differential
/// on `Pol_n ⊗ Λ(ω)`.
pub fn koszul_sequence<S: Scalar>(d: &Differential<S>) -> Result<Vec<Polynomial<S>>> {
    let n = d.n();
    (1..=n)
        .map(|i| {
            let v = d.apply_ext(&omega_hat(n, i))?;
            let g = v.component(0);
            if v != ExtPolynomial::from_poly(g.clone()) || !g.is_symmetric() {
                return Err(AlgebraError::NotInvariant(format!("d(ω̂_{}) = {}", i, v)));
            }
            Ok(g)
        })
        .collect()
}

/// Cohomology dimensions of the restricted complex.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub n: usize,
    pub big_n: usize,
    pub cap: usize,
    pub deformed: bool,
    /// `(internal degree, exterior degree) -> dim`, nonzero entries only.
    /// Deformed runs report the whole window under internal degree `-1`.
    #[serde(serialize_with = "bigraded_entries")]
    pub dims: BTreeMap<(i64, usize), usize>,
    /// Chain dimensions, same keys.
    #[serde(serialize_with = "bigraded_entries")]
    pub chains: BTreeMap<(i64, usize), usize>,
    /// Exterior degree zero, in the `q^2` convention.
    pub poincare: GradedDims,
    /// `[N choose n]_{q^2}`.
    pub reference: GradedDims,
    pub positive_exterior_vanishes: bool,
    pub euler_ok: bool,
}

fn bigraded_entries<Ser: serde::Serializer>(m: &BTreeMap<(i64, usize), usize>, ser: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    #[derive(Serialize)]
    struct Entry {
        degree: i64,
        ext: usize,
        dim: usize,
    }
    ser.collect_seq(m.iter().map(|(&(degree, ext), &dim)| Entry { degree, ext, dim }))
}

impl CohomologyReport {
    pub fn matches_reference(&self) -> bool {
        if self.deformed {
            self.poincare.total() == self.reference.total()
        } else {
            self.poincare == self.reference
        }
    }

    pub fn total(&self, ext: usize) -> usize {
        self.dims.iter().filter(|((_, k), _)| *k == ext).map(|(_, v)| v).sum()
    }
}

type ChainLabel = (Partition, u32);

struct Koszul<S: Scalar> {
    n: usize,
    weights: Vec<usize>,
    gens: Vec<Polynomial<S>>,
}

impl<S: Scalar> Koszul<S> {
    fn basis(&self, lo: usize, hi: usize, k: usize) -> Vec<ChainLabel> {
        let mut out = Vec::new();
        for mask in 0u32..1 << self.n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let w: usize = mask_indices(mask).iter().map(|&i| self.weights[i - 1]).sum();
            for d in lo.max(w)..=hi {
                for mu in Partition::of_size(d - w, self.n) {
                    out.push((mu, mask));
                }
            }
        }
        out
    }

    /// Rows of the differential `C_k -> C_{k-1}` over the given bases.
    fn rows(&self, src: &[ChainLabel], dst: &[ChainLabel]) -> Vec<SparseVec<S>> {
        let index: HashMap<&ChainLabel, usize> = dst.iter().enumerate().map(|(a, l)| (l, a)).collect();
        src.iter()
            .map(|(mu, mask)| {
                let m = Polynomial::monomial_symmetric(self.n, mu);
                let mut row = SparseVec::new();
                for (t, &i) in mask_indices(*mask).iter().enumerate() {
                    let f = (&m * &self.gens[i - 1]).scale(&sign(t));
                    let rest = mask & !(1 << (i - 1));
                    for (nu, c) in f.symmetric_coords() {
                        let col = index[&(nu, rest)];
                        let e = row.entry(col).or_insert_with(S::zero);
                        *e = e.clone() + c;
                    }
                }
                row.retain(|_, c| !c.is_zero());
                row
            })
            .collect()
    }

    /// Cohomology `(chain dims, cohomology dims)` per exterior degree over
    /// internal degrees `lo..=hi`.
    fn window(&self, lo: usize, hi: usize) -> (Vec<usize>, Vec<usize>) {
        let bases: Vec<Vec<ChainLabel>> = (0..=self.n).map(|k| self.basis(lo, hi, k)).collect();
        let mut ranks = vec![0usize; self.n + 2];
        for k in 1..=self.n {
            let dst = self.basis(0, hi, k - 1);
            ranks[k] = rank_sparse(&self.rows(&bases[k], &dst));
        }
        let chains: Vec<usize> = bases.iter().map(Vec::len).collect();
        let homology = (0..=self.n).map(|k| chains[k] - ranks[k] - ranks[k + 1]).collect();
        (chains, homology)
    }
}

/// Cohomology of `(Λ^ω_n, d)` for the undeformed differential (graded, per
/// internal degree) or a deformed one (filtered window `[0, cap]`). The
/// default cap is `n(N-n) + N`; caps below `n(N-n)` are refused.
pub fn cohomology_dims(
    n: usize,
    big_n: usize,
    sigma: Option<&RootMultiset<crate::scalar::Rat>>,
    cap: Option<usize>,
) -> Result<CohomologyReport> {
    type R = crate::scalar::Rat;
    if n == 0 {
        return Err(AlgebraError::Precondition("n >= 1".into()));
    }
    let required = n * big_n.saturating_sub(n);
    let cap = cap.unwrap_or(required + big_n);
    if cap < required {
        return Err(AlgebraError::CapTooSmall { what: "internal degree".into(), cap, required });
    }
    let d = match sigma {
        Some(s) => {
            if s.big_n() != big_n {
                return Err(AlgebraError::Precondition(format!("{} kappas for N={}", s.big_n(), big_n)));
            }
            Differential::<R>::deformed(n, s, SigmaSign::AsPrinted)
        }
        None => Differential::<R>::undeformed(n, big_n)?,
    };
    let deformed = sigma.map(|s| !s.is_undeformed()).unwrap_or(false);
    let kz = Koszul { n, weights: (1..=n).map(|i| (big_n + 1).saturating_sub(i)).collect(), gens: koszul_sequence(&d)? };
    let mut dims = BTreeMap::new();
    let mut chains = BTreeMap::new();
    let mut euler_ok = true;
    let mut record = |deg: i64, c: &[usize], h: &[usize]| {
        let mut chi = 0i64;
        for k in 0..=n {
            if c[k] > 0 {
                chains.insert((deg, k), c[k]);
            }
            if h[k] > 0 {
                dims.insert((deg, k), h[k]);
            }
            chi += if k % 2 == 0 { 1 } else { -1 } * (c[k] as i64 - h[k] as i64);
        }
        euler_ok &= chi == 0;
    };
    if deformed {
        let (c, h) = kz.window(0, cap);
        record(-1, &c, &h);
    } else {
        for deg in 0..=cap {
            let (c, h) = kz.window(deg, deg);
            record(deg as i64, &c, &h);
        }
    }
    let mut poincare = GradedDims::new();
    for (&(deg, k), &v) in &dims {
        if k == 0 {
            poincare.add(2 * deg.max(0), v);
        }
    }
    let positive_exterior_vanishes = dims.keys().all(|&(_, k)| k == 0);
    Ok(CohomologyReport {
        n,
        big_n,
        cap,
        deformed,
        dims,
        chains,
        poincare,
        reference: GradedDims::q_binomial(big_n, n, 2),
        positive_exterior_vanishes,
        euler_ok,
    })
}

/// Dimension data for a deformed quotient `Λ_n / (g^Σ_1..g^Σ_n)`.
#[derive(Clone, Debug, Serialize)]
pub struct DeformedReport {
    pub total: usize,
    pub expected_total: usize,
    /// `(n_1..n_l, computed dim, Π C(N_j, n_j))`.
    pub blocks: Vec<(Vec<usize>, usize, usize)>,
}

impl DeformedReport {
    pub fn consistent(&self) -> bool {
        self.total == self.expected_total
            && self.blocks.iter().all(|(_, a, b)| a == b)
            && self.blocks.iter().map(|(_, a, _)| a).sum::<usize>() == self.total
    }
}

fn compositions(n: usize, caps: &[usize]) -> Vec<Vec<usize>> {
    match caps.split_first() {
        None => {
            if n == 0 {
                vec![vec![]]
            } else {
                vec![]
            }
        }
        Some((&c, rest)) => (0..=c.min(n))
            .flat_map(|k| {
                compositions(n - k, rest).into_iter().map(move |mut t| {
                    t.insert(0, k);
                    t
                })
            })
            .collect(),
    }
}

/// Total dimension of the deformed quotient and its generalised eigenspace
/// decomposition under multiplication by a generic linear combination of
/// the `e_k`, one block per composition `Σ n_j = n` with `n_j <= N_j`.
pub fn deformed_total_dim(n: usize, sigma: &RootMultiset<crate::scalar::Rat>) -> Result<DeformedReport> {
    type R = crate::scalar::Rat;
    let roots = sigma
        .roots()
        .ok_or_else(|| AlgebraError::Precondition("polynomial does not split over the rationals".into()))?;
    let big_n = sigma.big_n();
    let d = Differential::<R>::deformed(n, sigma, SigmaSign::AsPrinted);
    let gens = koszul_sequence(&d)?;
    let top = n * big_n.saturating_sub(n);
    let cap = top + big_n;
    let weights: Vec<usize> = (1..=n).map(|i| (big_n + 1).saturating_sub(i)).collect();

    // Columns: partitions ordered by decreasing degree, so pivots are leading
    // (highest degree) terms and the free columns span the quotient.
    let mut labels: Vec<Partition> = Vec::new();
    for deg in (0..=cap + 1).rev() {
        labels.extend(Partition::of_size(deg, n));
    }
    let index: HashMap<Partition, usize> = labels.iter().enumerate().map(|(a, p)| (p.clone(), a)).collect();
    let to_vec = |f: &Polynomial<R>| -> SparseVec<R> {
        f.symmetric_coords().into_iter().map(|(p, c)| (index[&p], c)).collect()
    };
    let mut ech = SparseEchelon::<R>::new();
    for (g, &w) in gens.iter().zip(&weights) {
        for deg in 0..=(cap + 1).saturating_sub(w) {
            for mu in Partition::of_size(deg, n) {
                ech.insert(to_vec(&(&Polynomial::monomial_symmetric(n, &mu) * g)));
            }
        }
    }
    let free: Vec<usize> = (0..labels.len()).filter(|c| !ech.is_pivot(*c)).collect();
    if free.iter().any(|&c| labels[c].size() > top) {
        return Err(AlgebraError::CapTooSmall { what: "deformed window".into(), cap, required: top + 1 });
    }
    let total = free.len();
    let pos: HashMap<usize, usize> = free.iter().enumerate().map(|(a, &c)| (c, a)).collect();

    let mut expected_blocks = Vec::new();
    let mults: Vec<usize> = roots.iter().map(|(_, m)| *m).collect();
    for comp in compositions(n, &mults) {
        let dim = comp.iter().zip(&mults).map(|(&k, &m)| binomial(m, k)).product::<usize>();
        let mut point = Vec::new();
        for ((r, _), &k) in roots.iter().zip(&comp) {
            point.extend(std::iter::repeat_n(r.clone(), k));
        }
        expected_blocks.push((comp, dim, point));
    }

    let mut blocks = Vec::new();
    'attempt: for attempt in 0..8i64 {
        let coeffs: Vec<R> = (1..=n as i64).map(|k| R::from_int(k * k + 3 * attempt * k + 1)).collect();
        let f = coeffs
            .iter()
            .enumerate()
            .fold(Polynomial::<R>::zero(n), |acc, (k, c)| &acc + &Polynomial::elementary(n, k + 1, 1, n).scale(c));
        let mut eigen: Vec<R> = Vec::new();
        for (_, _, point) in &expected_blocks {
            let mu = f.eval(point);
            if eigen.contains(&mu) {
                continue 'attempt;
            }
            eigen.push(mu);
        }
        let mut m = vec![vec![R::zero(); total]; total];
        for (a, &c) in free.iter().enumerate() {
            let prod = &Polynomial::monomial_symmetric(n, &labels[c]) * &f;
            for (col, v) in ech.reduce(to_vec(&prod)) {
                m[pos[&col]][a] = v;
            }
        }
        for ((comp, dim, _), mu) in expected_blocks.iter().zip(&eigen) {
            blocks.push((comp.clone(), generalized_eigenspace_dim(&m, mu), *dim));
        }
        break;
    }
    Ok(DeformedReport { total, expected_total: binomial(big_n, n), blocks })
}

/// Outcome of a bounded membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Member,
    /// Not found within the cap; says nothing about larger caps.
    Indeterminate,
}

/// Decides whether `e ∈ NH_n` lies in the two-sided ideal generated by
/// `P(x_1)`, searching the span of `x^a ∂_u P(x_1) ∂_v` with `|a| <= cap`.
pub fn ideal_membership<S: Scalar>(e: &NhElement<S>, sigma: &RootMultiset<S>, cap: u32) -> Result<Membership> {
    let n = e.n();
    if e.terms().any(|(_, f)| f.components().any(|(&m, _)| m != 0)) {
        return Err(AlgebraError::Precondition("ideal membership is for elements without ω".into()));
    }
    // Columns sort by decreasing grade, so pivots sit on leading terms.
    let mut columns: HashMap<(Perm, Monomial), usize> = HashMap::new();
    let mut to_vec = |x: &NhElement<S>| -> SparseVec<S> {
        let mut v = SparseVec::new();
        for (w, f) in x.terms() {
            for (mono, c) in f.component(0).terms() {
                let next = columns.len();
                let idx = *columns.entry((w.clone(), mono.clone())).or_insert(next);
                let grade = 2 * i64::from(mono.degree()) - 2 * w.length() as i64;
                let col = (((1i64 << 24) - grade) as usize) << 32 | idx;
                v.insert(col, c.clone());
            }
        }
        v
    };
    let p = NhElement::from_poly(sigma.poly(n, 1));
    let perms = Perm::all(n);
    let mut cores = Vec::new();
    for u in &perms {
        let left = &NhElement::d_perm(u) * &p;
        for v in &perms {
            cores.push(&left * &NhElement::d_perm(v));
        }
    }
    let mut ech = SparseEchelon::<S>::new();
    let target = to_vec(e);
    for deg in 0..=cap {
        for a in monomials_of_degree(n, deg) {
            let x = ExtPolynomial::from_poly(Polynomial::monomial(n, &a));
            for core in &cores {
                ech.insert(to_vec(&core.left_mul_ext(&x)));
            }
        }
        if ech.contains(target.clone()) {
            return Ok(Membership::Member);
        }
    }
    Ok(Membership::Indeterminate)
}

/// Which identities of the deformed cyclotomic quotient were certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    /// `Σ κ_j x_{i+1}^{y+N-j} ∂_i = Σ κ_j ∂_i x_{i+1}^{y+N-j}`.
    pub slide: bool,
    /// `Σ κ_j x_{i+1}^{y+N-j} ∂_i = 0`.
    pub vanish: bool,
    /// `Σ κ_j x_i^{N-j} = 0` for every `i`.
    pub powers: bool,
    /// `Σ κ_j h_{N-m+1-j}(x_1..x_m) = 0` for `m <= min(n, N)`.
    pub complete: bool,
}

impl IdealReport {
    pub fn all(&self) -> bool {
        self.slide && self.vanish && self.powers && self.complete
    }
}

/// Certifies the identities of [`IdealReport`] in the quotient by
/// `P(x_1)`, for `y <= max_y`, each with the smallest sufficient cap.
pub fn deformed_ideal_check<S: Scalar>(n: usize, sigma: &RootMultiset<S>, max_y: u32) -> Result<IdealReport> {
    let big_n = sigma.big_n();
    let member = |e: &NhElement<S>, cap: u32| -> Result<bool> { Ok(ideal_membership(e, sigma, cap)? == Membership::Member) };
    let kappa_power = |var: usize, y: u32| {
        (0..=big_n).fold(Polynomial::zero(n), |acc, j| {
            &acc + &Polynomial::var(n, var).pow(y + (big_n - j) as u32).scale(&sigma.kappa(j))
        })
    };
    let mut report = IdealReport { slide: true, vanish: true, powers: true, complete: true };
    for i in 1..=n {
        report.powers &= member(&NhElement::from_poly(kappa_power(i, 0)), 2 * (i as u32 - 1))?;
    }
    for m in 1..=n.min(big_n) {
        let h = (0..=big_n + 1 - m).fold(Polynomial::zero(n), |acc, j| {
            &acc + &Polynomial::complete(n, big_n + 1 - m - j, 1, m).scale(&sigma.kappa(j))
        });
        report.complete &= member(&NhElement::from_poly(h), m as u32 - 1)?;
    }
    for i in 1..n {
        let d = NhElement::d(n, i)?;
        for y in 0..=max_y {
            let xp = NhElement::from_poly(kappa_power(i + 1, y));
            let left = &xp * &d;
            let right = &d * &xp;
            let cap = y + 2 * i as u32;
            report.slide &= member(&(&left - &right), cap - 2)?;
            report.vanish &= member(&left, cap - 1)?;
        }
    }
    Ok(report)
}
