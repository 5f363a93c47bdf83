//! The expression grammar used by the file formats:
//!
//! ```text
//! expr := rational | "sqrt" "(" expr ")" | "cospi" "(" integer ")"
//!       | expr ("+"|"-"|"*"|"/") expr | "(" expr ")"
//! ```
//!
//! `cospi(m)` denotes `cos(pi/m)`. Whitespace-insensitive. Expressions
//! evaluate to exact `AlgebraicReal`s, and the crate's writers only emit
//! expressions that re-parse to the same value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclotomic::CycReal;
use super::poly::IntPoly;
use super::rational::Rat;
use super::real::{AlgebraError, AlgebraicReal};
use super::tower::Tw;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    CosPi(u64),
    Sqrt(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expression error at column {}: {}",
            self.pos + 1,
            self.msg
        )
    }
}

impl std::error::Error for ExprError {}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Int(BigInt::from(n))
    }

    pub fn rat(r: &Rat) -> Expr {
        if r.denom().is_one() {
            Expr::Int(r.numer().clone())
        } else {
            Expr::Div(
                Box::new(Expr::Int(r.numer().clone())),
                Box::new(Expr::Int(r.denom().clone())),
            )
        }
    }

    pub fn parse(input: &str) -> Result<Expr, ExprError> {
        let mut p = Parser {
            chars: input.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        let e = p.parse_expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(ExprError {
                pos: p.pos,
                msg: format!("unexpected character '{}'", p.chars[p.pos] as char),
            });
        }
        Ok(e)
    }

    pub fn eval(&self) -> Result<AlgebraicReal, AlgebraError> {
        match self {
            Expr::Int(n) => Ok(AlgebraicReal::from_rational(Rat::from(n.clone()))),
            Expr::CosPi(m) => AlgebraicReal::cos_pi_over(*m),
            Expr::Sqrt(e) => e.eval()?.sqrt_nonneg(),
            Expr::Neg(e) => Ok(e.eval()?.neg()),
            Expr::Add(a, b) => Ok(a.eval()?.add(&b.eval()?)),
            Expr::Sub(a, b) => Ok(a.eval()?.sub(&b.eval()?)),
            Expr::Mul(a, b) => Ok(a.eval()?.mul(&b.eval()?)),
            Expr::Div(a, b) => a.eval()?.div(&b.eval()?),
        }
    }

    /// Evaluate into the quadratic-tower representation. Total on the
    /// grammar: every construct stays inside iterated real quadratic
    /// extensions of cyclotomic fields.
    pub fn eval_tower(&self) -> Result<Tw, AlgebraError> {
        match self {
            Expr::Int(n) => Ok(Tw::from_rat(Rat::from(n.clone()))),
            Expr::CosPi(m) => {
                if *m < 2 {
                    return Err(AlgebraError::DomainError("cospi(m) needs m >= 2".into()));
                }
                Ok(Tw::from_cyc(CycReal::cos_pi_over(*m)))
            }
            Expr::Sqrt(e) => {
                let v = e.eval_tower()?;
                match v.sign() {
                    -1 => Err(AlgebraError::SqrtOfNegative),
                    0 => Ok(Tw::zero()),
                    _ => Ok(v.sqrt_new_level()),
                }
            }
            Expr::Neg(e) => Ok(e.eval_tower()?.neg()),
            Expr::Add(a, b) => Ok(a.eval_tower()?.add(&b.eval_tower()?)),
            Expr::Sub(a, b) => Ok(a.eval_tower()?.sub(&b.eval_tower()?)),
            Expr::Mul(a, b) => Ok(a.eval_tower()?.mul(&b.eval_tower()?)),
            Expr::Div(a, b) => {
                let d = b.eval_tower()?;
                if d.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(a.eval_tower()?.div(&d))
            }
        }
    }

    /// Render a cyclotomic value: rational part plus Chebyshev expansions
    /// `cos(k pi/n) = T_k(cospi(n))`.
    pub fn from_cyc(c: &CycReal) -> Expr {
        let mut acc: Option<Expr> = None;
        let rp = c.rational_part();
        if !rp.is_zero() {
            acc = Some(Expr::rat(rp));
        }
        for (angle, coeff) in c.cosine_terms() {
            let cheb = chebyshev_in_cospi(angle.num, angle.den);
            let term = mul_expr(Expr::rat(coeff), cheb);
            acc = Some(match acc {
                None => term,
                Some(a) => Expr::Add(Box::new(a), Box::new(term)),
            });
        }
        acc.unwrap_or_else(|| Expr::int(0))
    }

    pub fn from_tower(t: &Tw) -> Expr {
        match t {
            Tw::Base(f) => {
                let num = Expr::from_cyc(&f.num);
                if f.den.is_rational().map_or(false, |r| r.is_one()) {
                    num
                } else {
                    Expr::Div(Box::new(num), Box::new(Expr::from_cyc(&f.den)))
                }
            }
            Tw::Ext(a, b, d) => {
                let root = Expr::Sqrt(Box::new(Expr::from_tower(&d.val)));
                let term = mul_expr(Expr::from_tower(b), root);
                if a.is_zero() {
                    term
                } else {
                    Expr::Add(Box::new(Expr::from_tower(a)), Box::new(term))
                }
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        let me = self.precedence();
        let need = me < parent;
        if need {
            write!(f, "(")?;
        }
        match self {
            Expr::Int(n) => write!(f, "{}", n)?,
            Expr::CosPi(m) => write!(f, "cospi({})", m)?,
            Expr::Sqrt(e) => {
                write!(f, "sqrt(")?;
                e.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 4)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
        }
        if need {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

fn mul_expr(a: Expr, b: Expr) -> Expr {
    if a == Expr::int(1) {
        b
    } else if b == Expr::int(1) {
        a
    } else {
        Expr::Mul(Box::new(a), Box::new(b))
    }
}

/// `T_k(cospi(n))` expanded as an integer polynomial in `cospi(n)`.
fn chebyshev_in_cospi(k: u64, n: u64) -> Expr {
    let mut t_prev = IntPoly::one();
    let mut t_cur = IntPoly::x();
    for _ in 1..k {
        let next = IntPoly::from_i64(&[0, 2]).mul(&t_cur).sub(&t_prev);
        t_prev = std::mem::replace(&mut t_cur, next);
    }
    let poly = if k == 0 { t_prev } else { t_cur };
    let x = Expr::CosPi(n);
    let mut acc: Option<Expr> = None;
    for (i, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if i == 0 {
            Expr::Int(c.clone())
        } else {
            let mut pow = x.clone();
            for _ in 1..i {
                pow = Expr::Mul(Box::new(pow), Box::new(x.clone()));
            }
            mul_expr(Expr::Int(c.clone()), pow)
        };
        acc = Some(match acc {
            None => term,
            Some(a) => Expr::Add(Box::new(a), Box::new(term)),
        });
    }
    acc.unwrap_or_else(|| Expr::int(0))
}

struct Parser<'a> {
    chars: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.chars.get(self.pos).copied()
    }

    fn parse_expr(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.parse_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.parse_factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    acc = Expr::Div(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        match self.peek() {
            None => Err(ExprError {
                pos: self.pos,
                msg: "unexpected end of expression".into(),
            }),
            Some(b'-') => {
                self.pos += 1;
                let inner = self.parse_factor()?;
                Ok(Expr::Neg(Box::new(inner)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.parse_expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.parse_int(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let word = self.parse_word();
                match word.as_str() {
                    "sqrt" => {
                        self.expect(b'(')?;
                        let e = self.parse_expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Sqrt(Box::new(e)))
                    }
                    "cospi" => {
                        self.expect(b'(')?;
                        self.skip_ws();
                        let n = self.parse_int()?;
                        self.expect(b')')?;
                        match n {
                            Expr::Int(v) => {
                                use num_traits::ToPrimitive;
                                let m = v.to_u64().ok_or_else(|| ExprError {
                                    pos: start,
                                    msg: "cospi argument out of range".into(),
                                })?;
                                if m < 2 {
                                    return Err(ExprError {
                                        pos: start,
                                        msg: "cospi(m) needs m >= 2".into(),
                                    });
                                }
                                Ok(Expr::CosPi(m))
                            }
                            _ => unreachable!(),
                        }
                    }
                    other => Err(ExprError {
                        pos: start,
                        msg: format!("unknown function '{}'", other),
                    }),
                }
            }
            Some(c) => Err(ExprError {
                pos: self.pos,
                msg: format!("unexpected character '{}'", c as char),
            }),
        }
    }

    fn parse_word(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.chars[start..self.pos]).into_owned()
    }

    fn parse_int(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ExprError {
                pos: self.pos,
                msg: "expected an integer".into(),
            });
        }
        let s = std::str::from_utf8(&self.chars[start..self.pos]).unwrap();
        Ok(Expr::Int(s.parse().unwrap()))
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ExprError {
                pos: self.pos,
                msg: format!("expected '{}'", c as char),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::RatExt;

    #[test]
    fn parse_and_eval() {
        let e = Expr::parse("sqrt(5) + 2").unwrap();
        let v = e.eval().unwrap();
        assert_eq!(*v.minpoly(), IntPoly::from_i64(&[-1, -4, 1]));
        let e = Expr::parse(" sqrt( 2 ) * ( sqrt(5)+1 ) / 4 ").unwrap();
        assert_eq!(e.eval().unwrap().sign(), 1);
        let e = Expr::parse("cospi(5)").unwrap();
        assert!(e
            .eval()
            .unwrap()
            .equals(&AlgebraicReal::cos_pi_over(5).unwrap()));
        let e = Expr::parse("-3/4").unwrap();
        assert_eq!(
            e.eval().unwrap().as_rational().unwrap(),
            &Rat::from_pair(-3, 4)
        );
        assert!(Expr::parse("sqrt(").is_err());
        assert!(Expr::parse("cospi(1)").is_err());
        assert!(Expr::parse("2 + ").is_err());
        assert!(Expr::parse("bogus(3)").is_err());
        assert!(Expr::parse("sqrt(0 - 2)").unwrap().eval().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "sqrt(5) + 2",
            "sqrt(2)*(sqrt(5) + 1)/4",
            "1 + sqrt(2)",
            "sqrt(2)*cospi(8)",
            "(1 + sqrt(5))/2",
            "0 - 1/2 + cospi(7)",
            "-(2 - sqrt(2))",
            "1 - (2 - 3)",
        ] {
            let e = Expr::parse(s).unwrap();
            let printed = e.to_string();
            let e2 = Expr::parse(&printed).unwrap();
            assert!(
                e.eval().unwrap().equals(&e2.eval().unwrap()),
                "{} vs {}",
                s,
                printed
            );
        }
    }

    #[test]
    fn from_cyc_roundtrip() {
        let c = CycReal::cos_pi_over(5)
            .mul_rat(&Rat::from_int(4))
            .add(&CycReal::one());
        let e = Expr::from_cyc(&c);
        let v = e.eval().unwrap();
        assert!(v.equals(&AlgebraicReal::from_cyc(&c)));
        let c = CycReal::cos_fraction(3, 7).mul_rat(&Rat::from_pair(2, 3));
        let e = Expr::from_cyc(&c);
        assert!(e.eval().unwrap().equals(&AlgebraicReal::from_cyc(&c)));
    }

    #[test]
    fn from_tower_roundtrip() {
        let s5 = Tw::from_rat(Rat::from_int(5)).sqrt_new_level();
        let w = s5.add(&Tw::from_rat(Rat::from_int(2)));
        let e = Expr::from_tower(&w);
        assert!(e.eval().unwrap().equals(&w.to_algebraic()));
    }
}
