//! Permutations of `{1..n}`, binary sequences and partitions.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// A permutation in one-line notation. Composition is `(uv)(i) = u(v(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(AlgebraError::InvalidPermutation(format!("{:?}", images)));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    /// The simple transposition `s_i`.
    pub fn s(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s{} outside S_{}", i, n);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Perm { images }
    }

    /// `s_{i1} s_{i2} ... s_{im}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Perm::identity(n);
        for &i in word.iter().rev() {
            if i == 0 || i >= n {
                return Err(AlgebraError::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
            }
            w = Perm::s(n, i).compose(&w);
        }
        Ok(w)
    }

    /// The longest element `w0`.
    pub fn longest(n: usize) -> Self {
        Perm { images: (1..=n).rev().collect() }
    }

    /// `c[j,k] = s_j s_{j+1} ... s_{k-1}`.
    pub fn coxeter(n: usize, j: usize, k: usize) -> Result<Self> {
        if j == 0 || k > n || j > k {
            return Err(AlgebraError::Precondition(format!("c[{},{}] needs 1 <= j <= k <= {}", j, k, n)));
        }
        let word: Vec<usize> = (j..k).collect();
        Perm::from_word(n, &word)
    }

    /// `c[j] = c[j,n]`.
    pub fn coxeter_tail(n: usize, j: usize) -> Self {
        Perm::coxeter(n, j, n).expect("c[j] with 1 <= j <= n")
    }

    /// `c^(k) = c[k, n] ... c[2, n-k+2] c[1, n-k+1]`.
    pub fn coxeter_k(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(AlgebraError::Precondition(format!("c^({}) needs k <= {}", k, n)));
        }
        let mut w = Perm::identity(n);
        for t in (1..=k).rev() {
            w = w.compose(&Perm::coxeter(n, t, n - k + t)?);
        }
        Ok(w)
    }

    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn compose(&self, v: &Perm) -> Perm {
        assert_eq!(self.n(), v.n());
        Perm { images: v.images.iter().map(|&i| self.images[i - 1]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Right descents `{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    /// Left descents `{i : l(s_i w) < l(w)}`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().descents()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() == 1
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(&i) = w.left_descents().first() {
            word.push(i);
            w = Perm::s(w.n(), i).compose(&w);
        }
        word
    }

    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.images[j] < self.images[i]).count())
            .collect()
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.lehmer_code())
    }

    /// `s_i w`.
    pub fn left_mul_s(&self, i: usize) -> Perm {
        Perm::s(self.n(), i).compose(self)
    }

    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "id".to_string()
        } else {
            w.iter().map(|i| format!("s{}", i)).collect::<Vec<_>>().join(" ")
        }
    }

    /// Whether some reduced subword of `word` multiplies to `self`.
    pub fn is_subword_of(&self, word: &[usize]) -> bool {
        let mut found = false;
        subwords_reduced(word, self.n(), self.length(), &mut Vec::new(), 0, &mut |p| {
            found |= p == self;
        });
        found
    }
}

fn subwords_reduced<F: FnMut(&Perm)>(
    word: &[usize],
    n: usize,
    len: usize,
    cur: &mut Vec<usize>,
    start: usize,
    f: &mut F,
) {
    if cur.len() == len {
        let p = Perm::from_word(n, cur).expect("letters in range");
        if p.length() == len {
            f(&p);
        }
        return;
    }
    for i in start..word.len() {
        cur.push(word[i]);
        subwords_reduced(word, n, len, cur, i + 1, f);
        cur.pop();
    }
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm { images: cur.clone() });
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// A binary sequence `α ∈ Z_2^n`; bit `i-1` of the mask is `α_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct BinSeq {
    n: usize,
    mask: u32,
}

impl BinSeq {
    pub fn new(n: usize, mask: u32) -> Self {
        assert!(n <= 31 && mask >> n == 0);
        BinSeq { n, mask }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut mask = 0;
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                mask |= 1 << i;
            }
        }
        BinSeq::new(bits.len(), mask)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bits: Option<Vec<u8>> = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect();
        bits.map(|b| BinSeq::from_bits(&b))
            .ok_or_else(|| AlgebraError::Malformed(format!("binary sequence {:?}", s)))
    }

    /// `τ^(k) = (0,..,0,1,..,1)`, the top element of weight `k`.
    pub fn tau(n: usize, k: usize) -> Self {
        BinSeq::new(n, ((1u32 << k) - 1) << (n - k))
    }

    /// `λ^(k) = (1,..,1,0,..,0)`, the bottom element of weight `k`.
    pub fn lambda(n: usize, k: usize) -> Self {
        BinSeq::new(n, (1u32 << k) - 1)
    }

    /// The unit vector with a single one at position `j`.
    pub fn unit(n: usize, j: usize) -> Self {
        BinSeq::new(n, 1 << (j - 1))
    }

    pub fn all(n: usize) -> Vec<BinSeq> {
        (0..1u32 << n).map(|m| BinSeq::new(n, m)).collect()
    }

    pub fn of_weight(n: usize, k: usize) -> Vec<BinSeq> {
        Self::all(n).into_iter().filter(|a| a.weight() == k).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn bit(&self, i: usize) -> bool {
        self.mask >> (i - 1) & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Positions of ones `u_1 < .. < u_k`.
    pub fn ones(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.bit(i)).collect()
    }

    /// Positions of zeros `v_1 < .. < v_{n-k}`.
    pub fn zeros(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| !self.bit(i)).collect()
    }

    pub fn in_i(&self, k: usize) -> bool {
        self.bit(k) && !self.bit(k + 1)
    }

    pub fn in_j(&self, k: usize) -> bool {
        !self.bit(k) && self.bit(k + 1)
    }

    /// `D_α = {k : α_k = 0, α_{k+1} = 1}`.
    pub fn d_set(&self) -> Vec<usize> {
        (1..self.n).filter(|&k| self.in_j(k)).collect()
    }

    /// Swaps positions `i` and `i+1`.
    pub fn swap(&self, i: usize) -> Self {
        let a = self.bit(i);
        let b = self.bit(i + 1);
        let mut m = self.mask & !(1 << (i - 1)) & !(1 << i);
        if a {
            m |= 1 << i;
        }
        if b {
            m |= 1 << (i - 1);
        }
        BinSeq::new(self.n, m)
    }

    /// `α ≺ β`: `β` is reached from `α` by moves `(1,0) -> (0,1)`.
    pub fn prec(&self, other: &BinSeq) -> Result<bool> {
        if self.weight() != other.weight() || self.n != other.n {
            return Err(AlgebraError::WeightMismatch(self.weight(), other.weight()));
        }
        if self == other {
            return Ok(false);
        }
        Ok(self.ones().iter().zip(other.ones()).all(|(a, b)| *a <= b))
    }

    /// Elements one move above `α`.
    pub fn covers(&self) -> Vec<BinSeq> {
        (1..self.n).filter(|&k| self.in_i(k)).map(|k| self.swap(k)).collect()
    }

    /// Everything strictly above `α`, found by breadth-first search.
    pub fn above_bfs(&self) -> BTreeSet<BinSeq> {
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<BinSeq> = self.covers().into();
        while let Some(b) = queue.pop_front() {
            if seen.insert(b) {
                queue.extend(b.covers());
            }
        }
        seen
    }

    /// `σ_α`, the minimal permutation sending `τ^(k)` to `α`.
    pub fn sigma(&self) -> Perm {
        let mut images = self.zeros();
        images.extend(self.ones());
        Perm { images }
    }

    /// `λ_α`, the partition of `σ_α`.
    pub fn lambda_of(&self) -> Partition {
        self.sigma().partition()
    }

    /// Applies a permutation to positions: `(wα)_{w(i)} = α_i`.
    pub fn permute(&self, w: &Perm) -> BinSeq {
        let mut m = 0;
        for i in 1..=self.n {
            if self.bit(i) {
                m |= 1 << (w.apply(i) - 1);
            }
        }
        BinSeq::new(self.n, m)
    }
}

impl fmt::Display for BinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts decreasingly and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.parts.first().copied().unwrap_or(0);
        Partition::new((1..=m).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// All partitions of `d` with at most `len` parts, in decreasing lex order.
    pub fn of_size(d: usize, len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(left: usize, max: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == len {
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, len, cur, out);
                cur.pop();
            }
        }
        rec(d, d, len, &mut Vec::new(), &mut out);
        out
    }

    /// Exponent vector of length `n`, padded with zeros.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut e: Vec<u32> = self.parts.iter().map(|&p| p as u32).collect();
        e.resize(n, 0);
        e
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_invariants() {
        let w0 = Perm::longest(3);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.descents(), vec![1, 2]);
        assert!(!w0.is_grassmannian());
        assert_eq!(w0.reduced_word(), vec![1, 2, 1]);
        assert_eq!(w0.lehmer_code(), vec![2, 1, 0]);
        let s1 = Perm::s(3, 1);
        assert_eq!((s1.length(), s1.descents()), (1, vec![1]));
        let c = Perm::from_word(3, &[1, 2]).unwrap();
        assert_eq!(c.images(), &[2, 3, 1]);
        assert_eq!(c.descents(), vec![2]);
        assert_eq!(c.partition(), Partition::new(vec![1, 1]));
        assert_eq!(Perm::coxeter(3, 1, 3).unwrap(), c);
        assert_eq!(Perm::coxeter_k(3, 1).unwrap(), c);
        assert_eq!(Perm::identity(3).reduced_word(), Vec::<usize>::new());
        assert_eq!(Perm::s(3, 2).reduced_word(), vec![2]);
    }

    #[test]
    fn words_round_trip() {
        for n in 1..=5 {
            for w in Perm::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Perm::from_word(n, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let a = BinSeq::parse("101").unwrap();
        assert_eq!(a.sigma(), Perm::s(3, 1));
        assert_eq!(a.lambda_of(), Partition::new(vec![1]));
        for n in 1..=5 {
            for k in 0..=n {
                assert!(BinSeq::tau(n, k).sigma().is_identity());
                assert_eq!(BinSeq::lambda(n, k).sigma(), Perm::coxeter_k(n, k).unwrap());
            }
        }
        assert_eq!(BinSeq::parse("011").unwrap().d_set(), vec![1]);
        assert!(BinSeq::parse("10").unwrap().prec(&BinSeq::parse("01").unwrap()).unwrap());
    }

    #[test]
    fn prec_matches_search() {
        for n in 1..=5 {
            for a in BinSeq::all(n) {
                let above = a.above_bfs();
                for b in BinSeq::of_weight(n, a.weight()) {
                    assert_eq!(a.prec(&b).unwrap(), above.contains(&b), "{} {}", a, b);
                }
            }
        }
    }

    #[test]
    fn conjugate_and_listing() {
        assert_eq!(Partition::new(vec![3, 1]).conjugate(), Partition::new(vec![2, 1, 1]));
        assert_eq!(Partition::of_size(4, 2).len(), 3);
    }
}
