//! Divided differences, Schubert and dual Schubert polynomials.

use crate::error::{check_index, AlgebraError, Result};
use crate::perm::{BinSeq, Perm};
use crate::poly::{determinant, Polynomial};
use crate::scalar::{sign, Scalar};

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
pub fn dd<S: Scalar>(i: usize, f: &Polynomial<S>) -> Result<Polynomial<S>> {
    let n = f.nvars();
    if n < 2 {
        return Err(AlgebraError::IndexOutOfRange { index: i, max: 0 });
    }
    check_index(i, n - 1)?;
    let num = f - &f.swap(i);
    Ok(num
        .div_by_difference(i, i + 1)
        .expect("f - s_i f is divisible by x_i - x_{i+1}"))
}

/// `∂_{i1} ... ∂_{im} f`, rightmost letter applied first.
pub fn dd_word<S: Scalar>(word: &[usize], f: &Polynomial<S>) -> Result<Polynomial<S>> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = dd(i, &g)?;
    }
    Ok(g)
}

/// `∂_w` along the canonical reduced word of `w`.
pub fn dd_perm<S: Scalar>(w: &Perm, f: &Polynomial<S>) -> Result<Polynomial<S>> {
    if w.n() != f.nvars() {
        return Err(AlgebraError::NvarsMismatch { left: w.n(), right: f.nvars() });
    }
    dd_word(&w.reduced_word(), f)
}

/// `x^δ = x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
pub fn x_delta<S: Scalar>(n: usize) -> Polynomial<S> {
    let e: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    Polynomial::monomial(n, &e)
}

/// `S_w = ∂_{w^{-1} w0} x^δ`.
pub fn schubert<S: Scalar>(w: &Perm) -> Polynomial<S> {
    let n = w.n();
    let u = w.inverse().compose(&Perm::longest(n));
    dd_perm(&u, &x_delta(n)).expect("sizes agree")
}

/// `Ŝ_w = (-1)^{l(w w0)} w0(S_{w w0})`.
pub fn dual_schubert<S: Scalar>(w: &Perm) -> Polynomial<S> {
    let n = w.n();
    let w0 = Perm::longest(n);
    let ww0 = w.compose(&w0);
    schubert::<S>(&ww0)
        .act_perm(&w0)
        .expect("sizes agree")
        .scale(&sign(ww0.length()))
}

/// Checks `∂_i x_i^{a+1} - x_{i+1}^{a+1} ∂_i = h_a(x_i, x_{i+1})` as operators
/// on every monomial in `n` variables of degree at most `cap`.
pub fn dotslide_check(n: usize, i: usize, a: usize, cap: u32) -> Result<bool> {
    type P = Polynomial<crate::scalar::Rat>;
    check_index(i, n.saturating_sub(1))?;
    let xi = P::var(n, i).pow(a as u32 + 1);
    let xj = P::var(n, i + 1).pow(a as u32 + 1);
    let h = P::complete(n, a, i, i + 1);
    for m in monomials_up_to(n, cap) {
        let f = P::monomial(n, &m);
        let lhs = &dd(i, &(&xi * &f))? - &(&xj * &dd(i, &f)?);
        if lhs != &h * &f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every exponent vector of length `n` with total degree `<= cap`.
pub fn monomials_up_to(n: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=cap {
        out.extend(monomials_of_degree(n, d));
    }
    out
}

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// `det(e_{n-k+i-u_j}(x_1..x_{n-k+i-1}))_{i,j=1..k}` for `α` of weight `k`.
pub fn schur_det_mixed<S: Scalar>(alpha: &BinSeq) -> Polynomial<S> {
    let n = alpha.n();
    let u = alpha.ones();
    let k = u.len();
    let m: Vec<Vec<Polynomial<S>>> = (1..=k)
        .map(|i| {
            u.iter()
                .map(|&uj| {
                    let idx = (n - k + i) as i64 - uj as i64;
                    if idx < 0 {
                        Polynomial::zero(n)
                    } else {
                        Polynomial::elementary(n, idx as usize, 1, n - k + i - 1)
                    }
                })
                .collect()
        })
        .collect();
    determinant(n, &m)
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
    fn basic_divided_differences() {
        assert_eq!(dd(1, &x(2, 1)).unwrap(), P::one(2));
        assert_eq!(dd(1, &x(2, 1).pow(2)).unwrap(), &x(2, 1) + &x(2, 2));
        assert!(dd(1, &(&x(2, 1) * &x(2, 2))).unwrap().is_zero());
        assert!(dd(2, &x(2, 1)).is_err());
    }

    #[test]
    fn dd_perm_of_delta_is_one() {
        for n in 2..=4 {
            assert!(dd_perm(&Perm::longest(n), &x_delta::<Rat>(n)).unwrap().is_one());
        }
    }

    #[test]
    fn composite_example() {
        // ∂_1 ∂_2 (x1^2 x2) = ∂_1(x1^2) = x1 + x2
        let w = Perm::from_word(3, &[1, 2]).unwrap();
        let f = &x(3, 1).pow(2) * &x(3, 2);
        assert_eq!(dd_perm(&w, &f).unwrap(), &x(3, 1) + &x(3, 2));
        assert_eq!(dd_word(&[1, 2], &f).unwrap(), dd(1, &dd(2, &f).unwrap()).unwrap());
    }

    #[test]
    fn s3_tables() {
        let s = |w: &[usize]| schubert::<Rat>(&Perm::from_word(3, w).unwrap()).to_string();
        assert_eq!(s(&[]), "1");
        assert_eq!(s(&[1]), "x1");
        assert_eq!(s(&[2]), "x1 + x2");
        assert_eq!(s(&[1, 2]), "x1*x2");
        assert_eq!(s(&[2, 1]), "x1^2");
        assert_eq!(s(&[1, 2, 1]), "x1^2*x2");
        let w0 = Perm::longest(3);
        let d = |w: &[usize]| dual_schubert::<Rat>(&w0.compose(&Perm::from_word(3, w).unwrap())).to_string();
        assert_eq!(d(&[]), "1");
        assert_eq!(d(&[1]), "-x2 - x3");
    }

    #[test]
    fn dotslide() {
        for a in 0..=3 {
            assert!(dotslide_check(3, 1, a, 3).unwrap());
        }
    }

    #[test]
    fn mixed_determinant_example() {
        let a = BinSeq::parse("110").unwrap();
        assert_eq!(schur_det_mixed::<Rat>(&a), x(3, 1).pow(2));
        assert_eq!(schur_det_mixed::<Rat>(&BinSeq::parse("101").unwrap()), x(3, 1));
        assert!(schur_det_mixed::<Rat>(&BinSeq::tau(3, 2)).is_one());
    }
}
