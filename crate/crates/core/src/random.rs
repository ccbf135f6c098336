//! Random inputs for property checks. Coefficients are small integers so
//! that exact arithmetic stays cheap.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;

use crate::divdiff::monomials_up_to;
use crate::extsym::{reconstruct, wedge_monomial};
use crate::nilhecke::{NhElement, PbwTerm};
use crate::perm::{Partition, Perm};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;
use crate::superpoly::ExtPolynomial;

fn small<S: Scalar, R: Rng>(rng: &mut R, bound: i64) -> S {
    let v = rng.gen_range(-bound..=bound);
    S::from_fraction(&BigInt::from(v), &BigInt::from(1)).expect("unit denominator")
}

/// A rational with numerator and denominator in `-bound..=bound`.
pub fn rational<S: Scalar, R: Rng>(rng: &mut R, bound: i64) -> S {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound.max(1));
    S::from_fraction(&BigInt::from(num), &BigInt::from(den)).expect("nonzero denominator")
}

/// Random polynomial of degree at most `deg`.
pub fn polynomial<S: Scalar, R: Rng>(rng: &mut R, n: usize, deg: u32, terms: usize) -> Polynomial<S> {
    let monos = monomials_up_to(n, deg);
    let mut f = Polynomial::zero(n);
    for _ in 0..terms {
        let m = &monos[rng.gen_range(0..monos.len())];
        f.add_term(Monomial(m.clone()), small(rng, 3));
    }
    f
}

/// Random symmetric polynomial: a combination of products of elementary
/// symmetric polynomials of total degree at most `deg`.
pub fn symmetric<S: Scalar, R: Rng>(rng: &mut R, n: usize, deg: u32) -> Polynomial<S> {
    let mut f = Polynomial::zero(n);
    for d in 0..=deg as usize {
        for lambda in Partition::of_size(d, usize::MAX) {
            if lambda.parts().iter().any(|&p| p > n) || rng.gen_bool(0.5) {
                continue;
            }
            let prod = lambda
                .parts()
                .iter()
                .fold(Polynomial::one(n), |acc, &k| &acc * &Polynomial::elementary(n, k, 1, n));
            f = &f + &prod.scale(&small(rng, 3));
        }
    }
    f
}

/// Random `Λ_n`-combination of the wedge monomials of `gens`.
pub fn invariant<S: Scalar, R: Rng>(rng: &mut R, gens: &[ExtPolynomial<S>], deg: u32) -> ExtPolynomial<S> {
    let n = gens.len();
    let mut coords = BTreeMap::new();
    for m in 0..1u32 << n {
        if rng.gen_bool(0.6) {
            let c = symmetric(rng, n, deg);
            if !c.is_zero() {
                coords.insert(m, c);
            }
        }
    }
    reconstruct(&coords, gens)
}

/// Random exterior polynomial.
pub fn superpoly<S: Scalar, R: Rng>(rng: &mut R, n: usize, deg: u32, terms: usize) -> ExtPolynomial<S> {
    let mut v = ExtPolynomial::zero(n);
    for _ in 0..terms {
        let mask = rng.gen_range(0..1u32 << n);
        v.add_component(mask, polynomial(rng, n, deg, 1));
    }
    v
}

/// Random product of wedge monomials from `gens` with a random polynomial.
pub fn wedge_term<S: Scalar, R: Rng>(rng: &mut R, gens: &[ExtPolynomial<S>], deg: u32) -> ExtPolynomial<S> {
    let n = gens.len();
    wedge_monomial(gens, rng.gen_range(0..1u32 << n)).mul_poly(&polynomial(rng, n, deg, 2))
}

/// Random nilHecke element with `terms` PBW terms of polynomial degree at
/// most `deg`.
pub fn nh_element<S: Scalar, R: Rng>(rng: &mut R, n: usize, deg: u32, terms: usize) -> NhElement<S> {
    let perms = Perm::all(n);
    let monos = monomials_up_to(n, deg);
    let pbw: Vec<PbwTerm<S>> = (0..terms)
        .map(|_| PbwTerm {
            exps: monos[rng.gen_range(0..monos.len())].clone(),
            mask: rng.gen_range(0..1u32 << n),
            perm: perms[rng.gen_range(0..perms.len())].clone(),
            coeff: small(rng, 3),
        })
        .collect();
    NhElement::from_pbw_terms(n, &pbw).expect("valid terms")
}
