//! Text input for polynomials, exterior polynomials and nilHecke elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ('+' | '-')* factor ('*' factor)*
//! factor := atom ('^' int)?
//! atom   := int ('/' int)? | 'x' int | 'w' int | 'd' int | 'd[' int* ']' | '(' expr ')'
//! ```
//!
//! `x_i` are even, `w_i` odd, `d_i` is the divided difference `∂_i` and
//! `d[i j k]` is `∂_i ∂_j ∂_k`. The only `/` allowed is inside a rational
//! constant such as `3/4`. Whitespace is ignored except inside `d[...]`,
//! where it separates indices.

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::nilhecke::NhElement;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::superpoly::ExtPolynomial;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(AlgebraError::Parse { pos, msg: msg.into() })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected a number");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small(&mut self, max: usize, what: &str) -> Result<usize> {
        let at = self.pos;
        let v = self.digits()?;
        match usize::try_from(v) {
            Ok(i) if i >= 1 && i <= max => Ok(i),
            _ => err(at, format!("{} index out of range 1..={}", what, max)),
        }
    }

    fn expr<S: Scalar>(&mut self) -> Result<NhElement<S>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<NhElement<S>> {
        let mut negative = false;
        loop {
            if self.eat(b'-') {
                negative = !negative;
            } else if !self.eat(b'+') {
                break;
            }
        }
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(if negative { -acc } else { acc })
    }

    fn factor<S: Scalar>(&mut self) -> Result<NhElement<S>> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = u32::try_from(self.digits()?).or_else(|_| err(at, "exponent too large"))?;
        let mut acc = NhElement::one(self.n);
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom<S: Scalar>(&mut self) -> Result<NhElement<S>> {
        let n = self.n;
        let at = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.eat(b'/') { self.digits()? } else { BigInt::from(1) };
                let c = S::from_fraction(&num, &den).map_or_else(|| err(at, "invalid rational constant"), Ok)?;
                Ok(NhElement::from_poly(Polynomial::constant(n, c)))
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.small(n, "x")?;
                NhElement::x(n, i)
            }
            Some(b'w') => {
                self.pos += 1;
                let i = self.small(n, "w")?;
                NhElement::omega(n, i)
            }
            Some(b'd') => {
                self.pos += 1;
                let max = n.saturating_sub(1);
                if self.eat(b'[') {
                    let mut word = Vec::new();
                    while !self.eat(b']') {
                        if self.peek().is_none() {
                            return err(self.pos, "unterminated d[...]");
                        }
                        word.push(self.small(max, "d")?);
                        self.eat(b',');
                    }
                    NhElement::d_word(n, &word)
                } else {
                    let i = self.small(max, "d")?;
                    NhElement::d(n, i)
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return err(self.pos, "expected ')'");
                }
                Ok(e)
            }
            Some(c) => err(at, format!("unexpected '{}'", c as char)),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parses a nilHecke element in `n` variables.
pub fn parse_nh<S: Scalar>(src: &str, n: usize) -> Result<NhElement<S>> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos, "trailing input");
    }
    Ok(e)
}

/// Parses an exterior polynomial; `d` is rejected.
pub fn parse_superpoly<S: Scalar>(src: &str, n: usize) -> Result<ExtPolynomial<S>> {
    let e = parse_nh::<S>(src, n)?;
    if e.terms().any(|(w, _)| !w.is_identity()) {
        return Err(AlgebraError::Parse { pos: 0, msg: "divided differences are not allowed here".into() });
    }
    Ok(e.coeff(&crate::perm::Perm::identity(n)))
}

/// Parses a polynomial; `w` and `d` are rejected.
pub fn parse_poly<S: Scalar>(src: &str, n: usize) -> Result<Polynomial<S>> {
    let v = parse_superpoly::<S>(src, n)?;
    if v.components().any(|(&m, _)| m != 0) {
        return Err(AlgebraError::Parse { pos: 0, msg: "odd variables are not allowed here".into() });
    }
    Ok(v.component(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn polynomials() {
        let f = parse_poly::<Rat>("x1^2*x2 - 1/2*x3", 3).unwrap();
        assert_eq!(f.to_string(), "x1^2*x2 - 1/2*x3");
        let g = parse_poly::<Rat>("-(x1 + x2)^2 + 2*x1*x2", 2).unwrap();
        assert_eq!(g.to_string(), "-x1^2 - x2^2");
        assert_eq!(parse_poly::<Rat>("0", 2).unwrap().to_string(), "0");
    }

    #[test]
    fn exterior_and_nh() {
        let v = parse_superpoly::<Rat>("w2*w1 + x1*w1^2", 2).unwrap();
        assert_eq!(v.to_string(), "-w1*w2");
        let e = parse_nh::<Rat>("x1*d1 - d1*x2", 2).unwrap();
        assert_eq!(e.to_string(), "1");
        let e = parse_nh::<Rat>("d[1 2 1] - d[2 1 2] + d[1,1]", 3).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly::<Rat>("x4", 3), Err(AlgebraError::Parse { pos: 1, .. })));
        assert!(matches!(parse_poly::<Rat>("x1 +", 3), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_poly::<Rat>("x1 / x2", 3), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_poly::<Rat>("w1", 3), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_superpoly::<Rat>("d1", 3), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_poly::<Rat>("1/0", 1), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_poly::<Rat>("(x1", 1), Err(AlgebraError::Parse { .. })));
    }
}
