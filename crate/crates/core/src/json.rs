//! JSON forms. Coefficients are exact decimal strings `num`/`den`.
//!
//! ```text
//! Poly      {"nvars": 2, "terms": [{"exponents": [1, 0], "num": "1", "den": "2"}]}
//! SuperPoly {"nvars": 2, "terms": [{"exponents": [0, 0], "wedge": [1, 2], ...}]}
//! NHElem    {"nvars": 2, "terms": [{"exponents": ..., "wedge": ..., "word": [1], ...}]}
//! ```

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::nilhecke::{NhElement, PbwTerm};
use crate::perm::Perm;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;
use crate::superpoly::{mask_indices, mask_of, mask_order_key, ExtPolynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedge: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

fn coeff_strings<S: Scalar>(c: &S) -> (String, String) {
    let (n, d) = c.to_fraction();
    (n.to_string(), d.to_string())
}

fn coeff_from<S: Scalar>(t: &TermJson) -> Result<S> {
    let num: BigInt = t.num.parse().map_err(|_| AlgebraError::Malformed(format!("numerator {:?}", t.num)))?;
    let den: BigInt = t.den.parse().map_err(|_| AlgebraError::Malformed(format!("denominator {:?}", t.den)))?;
    S::from_fraction(&num, &den).ok_or_else(|| AlgebraError::Malformed("zero denominator".into()))
}

fn check_exponents(t: &TermJson, n: usize) -> Result<Monomial> {
    if t.exponents.len() != n {
        return Err(AlgebraError::NvarsMismatch { left: n, right: t.exponents.len() });
    }
    Ok(Monomial(t.exponents.clone()))
}

fn wedge_mask(t: &TermJson, n: usize) -> Result<u32> {
    let w = t.wedge.clone().unwrap_or_default();
    let ascending = w.windows(2).all(|p| p[0] < p[1]);
    if !ascending || w.iter().any(|&i| i == 0 || i > n) {
        return Err(AlgebraError::Malformed(format!("wedge {:?} must be ascending in 1..={}", w, n)));
    }
    Ok(mask_of(&w))
}

pub fn poly_to_json<S: Scalar>(f: &Polynomial<S>) -> ElementJson {
    let terms = f
        .terms()
        .rev()
        .map(|(m, c)| {
            let (num, den) = coeff_strings(c);
            TermJson { exponents: m.0.clone(), wedge: None, word: None, num, den }
        })
        .collect();
    ElementJson { nvars: f.nvars(), terms }
}

pub fn poly_from_json<S: Scalar>(j: &ElementJson) -> Result<Polynomial<S>> {
    let mut f = Polynomial::zero(j.nvars);
    for t in &j.terms {
        if t.wedge.as_ref().is_some_and(|w| !w.is_empty()) || t.word.as_ref().is_some_and(|w| !w.is_empty()) {
            return Err(AlgebraError::Malformed("polynomial term with wedge or word".into()));
        }
        f.add_term(check_exponents(t, j.nvars)?, coeff_from(t)?);
    }
    Ok(f)
}

pub fn superpoly_to_json<S: Scalar>(v: &ExtPolynomial<S>) -> ElementJson {
    let mut masks: Vec<u32> = v.components().map(|(&m, _)| m).collect();
    masks.sort_by_key(|&m| mask_order_key(m));
    let mut terms = Vec::new();
    for m in masks {
        for (mono, c) in v.component(m).terms().rev() {
            let (num, den) = coeff_strings(c);
            terms.push(TermJson { exponents: mono.0.clone(), wedge: Some(mask_indices(m)), word: None, num, den });
        }
    }
    ElementJson { nvars: v.nvars(), terms }
}

pub fn superpoly_from_json<S: Scalar>(j: &ElementJson) -> Result<ExtPolynomial<S>> {
    let mut v = ExtPolynomial::zero(j.nvars);
    for t in &j.terms {
        if t.word.as_ref().is_some_and(|w| !w.is_empty()) {
            return Err(AlgebraError::Malformed("exterior term with a word".into()));
        }
        let f = Polynomial::term(j.nvars, check_exponents(t, j.nvars)?, coeff_from(t)?);
        v.add_component(wedge_mask(t, j.nvars)?, f);
    }
    Ok(v)
}

pub fn nh_to_json<S: Scalar>(e: &NhElement<S>) -> ElementJson {
    let terms = e
        .pbw_terms()
        .into_iter()
        .map(|t| {
            let (num, den) = coeff_strings(&t.coeff);
            TermJson {
                exponents: t.exps,
                wedge: Some(mask_indices(t.mask)),
                word: Some(t.perm.reduced_word()),
                num,
                den,
            }
        })
        .collect();
    ElementJson { nvars: e.n(), terms }
}

/// Words must be reduced; a non-reduced word is rejected rather than read as 0.
pub fn nh_from_json<S: Scalar>(j: &ElementJson) -> Result<NhElement<S>> {
    let n = j.nvars;
    let mut terms = Vec::new();
    for t in &j.terms {
        let word = t.word.clone().unwrap_or_default();
        let perm = Perm::from_word(n, &word)?;
        if perm.length() != word.len() {
            return Err(AlgebraError::Malformed(format!("word {:?} is not reduced", word)));
        }
        terms.push(PbwTerm { exps: check_exponents(t, n)?.0, mask: wedge_mask(t, n)?, perm, coeff: coeff_from(t)? });
    }
    NhElement::from_pbw_terms(n, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_nh, parse_poly, parse_superpoly};
    use crate::scalar::Rat;

    #[test]
    fn round_trips() {
        let f = parse_poly::<Rat>("x1^2*x2 - 1/2*x3 + 7", 3).unwrap();
        let s = serde_json::to_string(&poly_to_json(&f)).unwrap();
        assert!(s.starts_with(r#"{"nvars":3,"terms":[{"exponents":[2,1,0],"num":"1","den":"1"}"#));
        let back: ElementJson = serde_json::from_str(&s).unwrap();
        assert_eq!(poly_from_json::<Rat>(&back).unwrap(), f);

        let v = parse_superpoly::<Rat>("w1 - (x2 + x3)*w2 + x3^2*w1*w3", 3).unwrap();
        assert_eq!(superpoly_from_json::<Rat>(&superpoly_to_json(&v)).unwrap(), v);

        let e = parse_nh::<Rat>("d1*w1 + 3/5*x2*d[2 1]", 3).unwrap();
        assert_eq!(nh_from_json::<Rat>(&nh_to_json(&e)).unwrap(), e);
    }

    #[test]
    fn rejects_malformed() {
        let bad = ElementJson {
            nvars: 2,
            terms: vec![TermJson { exponents: vec![0, 0], wedge: None, word: Some(vec![1, 1]), num: "1".into(), den: "1".into() }],
        };
        assert!(nh_from_json::<Rat>(&bad).is_err());
        let bad = ElementJson {
            nvars: 2,
            terms: vec![TermJson { exponents: vec![0], wedge: None, word: None, num: "1".into(), den: "0".into() }],
        };
        assert!(poly_from_json::<Rat>(&bad).is_err());
    }
}
