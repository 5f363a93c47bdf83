//! Towers of real quadratic extensions over the cyclotomic layer.
//!
//! Dotted-edge weights come out of `det = 0` quadratics, so they live in
//! fields of the shape `F(sqrt(d1))(sqrt(d2))...` where `F` is a real
//! cyclotomic field. A `Tw` is such an element, self-contained: every
//! extension carries its discriminant, and discriminants are identified by
//! a creation id so that values from different solving steps can be merged
//! into a common tower deterministically.

use std::sync::Arc;
use std::sync::atomic::{AtomicU64, Ordering};

use super::cyclotomic::{CycReal, FracCyc};
use super::interval::Iv;
use super::rational::Rat;
use super::real::AlgebraicReal;
use super::scalar::ExactScalar;

static NEXT_DISC_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug)]
pub struct Disc {
    pub id: u64,
    pub val: Tw,
}

#[derive(Clone, Debug)]
pub enum Tw {
    Base(FracCyc),
    /// `a + b * sqrt(disc)`, with `a`, `b` over the same lower tower.
    Ext(Box<Tw>, Box<Tw>, Arc<Disc>),
}

impl Tw {
    pub fn from_frac(f: FracCyc) -> Self {
        Tw::Base(f)
    }

    pub fn from_cyc(c: CycReal) -> Self {
        Tw::Base(FracCyc::from_cyc(c))
    }

    pub fn from_rat(r: Rat) -> Self {
        Tw::Base(FracCyc::from_rat(r))
    }

    pub fn zero() -> Self {
        Tw::Base(FracCyc::zero())
    }

    pub fn one() -> Self {
        Tw::Base(FracCyc::one())
    }

    /// Sorted ids of the discriminants along the spine.
    fn chain(&self) -> Vec<Arc<Disc>> {
        match self {
            Tw::Base(_) => vec![],
            Tw::Ext(a, _, d) => {
                let mut c = a.chain();
                c.push(d.clone());
                c
            }
        }
    }

    fn zero_with_chain(chain: &[Arc<Disc>]) -> Tw {
        match chain.split_last() {
            None => Tw::zero(),
            Some((d, rest)) => Tw::Ext(
                Box::new(Tw::zero_with_chain(rest)),
                Box::new(Tw::zero_with_chain(rest)),
                d.clone(),
            ),
        }
    }

    fn lift(&self, chain: &[Arc<Disc>]) -> Tw {
        match chain.split_last() {
            None => match self {
                Tw::Base(_) => self.clone(),
                Tw::Ext(..) => unreachable!("lift target chain too short"),
            },
            Some((d, rest)) => match self {
                Tw::Ext(a, b, d2) if Arc::ptr_eq(d, d2) => Tw::Ext(
                    Box::new(a.lift(rest)),
                    Box::new(b.lift(rest)),
                    d.clone(),
                ),
                _ => Tw::Ext(
                    Box::new(self.lift(rest)),
                    Box::new(Tw::zero_with_chain(rest)),
                    d.clone(),
                ),
            },
        }
    }

    fn merged_chain(&self, other: &Tw) -> Vec<Arc<Disc>> {
        let mut a = self.chain();
        let b = other.chain();
        for d in b {
            if !a.iter().any(|x| Arc::ptr_eq(x, &d)) {
                a.push(d);
            }
        }
        a.sort_by_key(|d| d.id);
        a
    }

    fn binop<F: Fn(&Tw, &Tw) -> Tw + Copy>(&self, other: &Tw, base: F) -> Tw {
        let chain = self.merged_chain(other);
        let x = self.lift(&chain);
        let y = other.lift(&chain);
        base(&x, &y)
    }

    pub fn add(&self, other: &Tw) -> Tw {
        self.binop(other, |x, y| match (x, y) {
            (Tw::Base(a), Tw::Base(b)) => Tw::Base(a.add(b)),
            (Tw::Ext(a1, b1, d), Tw::Ext(a2, b2, _)) => {
                Tw::Ext(Box::new(a1.add(a2)), Box::new(b1.add(b2)), d.clone())
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Tw) -> Tw {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tw {
        match self {
            Tw::Base(f) => Tw::Base(f.neg()),
            Tw::Ext(a, b, d) => Tw::Ext(Box::new(a.neg()), Box::new(b.neg()), d.clone()),
        }
    }

    pub fn mul(&self, other: &Tw) -> Tw {
        self.binop(other, mul_aligned)
    }

    pub fn div(&self, other: &Tw) -> Tw {
        assert!(!other.is_zero(), "tower division by zero");
        self.mul(&other.inverse())
    }

    fn inverse(&self) -> Tw {
        match self {
            Tw::Base(f) => Tw::Base(FracCyc::one().div(f)),
            Tw::Ext(a, b, d) => {
                if b.is_zero() {
                    return Tw::Ext(
                        Box::new(a.inverse()),
                        Box::new(zero_like(a)),
                        d.clone(),
                    );
                }
                // (a + b s)^-1 = (a - b s) / (a^2 - b^2 D) unless the norm
                // vanishes, which means s = a/b lies below and the value is 2a.
                let norm = a.mul(a).sub(&b.mul(b).mul(&d.val));
                if norm.is_zero() {
                    let inv2a = a.mul(&Tw::from_rat(Rat::new(2.into(), 1.into()))).inverse();
                    return Tw::Ext(Box::new(inv2a), Box::new(zero_like(a)), d.clone());
                }
                let ninv = norm.inverse();
                Tw::Ext(
                    Box::new(a.mul(&ninv)),
                    Box::new(b.neg().mul(&ninv)),
                    d.clone(),
                )
            }
        }
    }

    /// Square root as a fresh extension. Caller must ensure the value is
    /// nonnegative. If the value is a perfect square at hand (zero), stays put.
    pub fn sqrt_new_level(&self) -> Tw {
        if self.is_zero() {
            return Tw::zero();
        }
        let d = Arc::new(Disc {
            id: NEXT_DISC_ID.fetch_add(1, Ordering::Relaxed),
            val: self.clone(),
        });
        let chain = self.chain();
        Tw::Ext(
            Box::new(Tw::zero_with_chain(&chain)),
            Box::new(Tw::one().lift(&chain)),
            d,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    /// Certified sign. Sound even when a discriminant happens to be a
    /// square lower down (no canonicity assumed).
    pub fn sign(&self) -> i32 {
        match self {
            Tw::Base(f) => f.sign(),
            Tw::Ext(a, b, d) => {
                let sb = b.sign();
                if sb == 0 {
                    return a.sign();
                }
                let sa = a.sign();
                if sa == 0 {
                    return sb; // sqrt(D) > 0 since D != 0 when b != 0 matters
                }
                if sa == sb {
                    return sa;
                }
                // opposite signs: compare a^2 with b^2 D
                let t = a.mul(a).sub(&b.mul(b).mul(&d.val));
                sa * t.sign()
            }
        }
    }

    pub fn equals(&self, other: &Tw) -> bool {
        self.sub(other).is_zero()
    }

    pub fn eval_iv(&self, prec: u32) -> Option<Iv> {
        match self {
            Tw::Base(f) => f.eval_iv(prec),
            Tw::Ext(a, b, d) => {
                let ia = a.eval_iv(prec)?;
                let ib = b.eval_iv(prec)?;
                let id = d.val.eval_iv(prec)?;
                let s = id.sqrt(prec);
                Some(ia.add(&ib.mul(&s)).round_out(prec))
            }
        }
    }

    pub fn to_f64_approx(&self) -> f64 {
        self.eval_iv(64)
            .map(|iv| iv.to_f64_approx())
            .unwrap_or(f64::NAN)
    }

    /// Exact conversion into an `AlgebraicReal`. Intended for the small
    /// final fields of catalog weights.
    pub fn to_algebraic(&self) -> AlgebraicReal {
        match self {
            Tw::Base(f) => {
                let num = AlgebraicReal::from_cyc(&f.num);
                let den = AlgebraicReal::from_cyc(&f.den);
                num.div(&den).expect("tower denominator is nonzero")
            }
            Tw::Ext(a, b, d) => {
                let av = a.to_algebraic();
                let bv = b.to_algebraic();
                let dv = d.val.to_algebraic();
                let s = dv.sqrt_nonneg().expect("discriminant is nonnegative");
                av.add(&bv.mul(&s))
            }
        }
    }
}

fn zero_like(t: &Tw) -> Tw {
    Tw::zero_with_chain(&t.chain())
}

fn mul_aligned(x: &Tw, y: &Tw) -> Tw {
    match (x, y) {
        (Tw::Base(a), Tw::Base(b)) => Tw::Base(a.mul(b)),
        (Tw::Ext(a1, b1, d), Tw::Ext(a2, b2, _)) => {
            let dv = &d.val;
            let a = mul_aligned(a1, a2).add(&mul_aligned(&mul_aligned(b1, b2), &dv.lift(
                &a1.chain(),
            )));
            let b = mul_aligned(a1, b2).add(&mul_aligned(b1, a2));
            Tw::Ext(Box::new(a), Box::new(b), d.clone())
        }
        _ => unreachable!(),
    }
}

impl ExactScalar for Tw {
    fn zero() -> Self {
        Tw::zero()
    }
    fn one() -> Self {
        Tw::one()
    }
    fn from_rat(r: Rat) -> Self {
        Tw::from_rat(r)
    }
    fn add(&self, o: &Self) -> Self {
        Tw::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Tw::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Tw::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        Tw::div(self, o)
    }
    fn neg(&self) -> Self {
        Tw::neg(self)
    }
    fn sign(&self) -> i32 {
        Tw::sign(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::RatExt;

    fn rat(n: i64, d: i64) -> Tw {
        Tw::from_rat(Rat::from_pair(n, d))
    }

    #[test]
    fn sqrt_arithmetic() {
        let five = rat(5, 1);
        let s5 = five.sqrt_new_level();
        assert_eq!(s5.sign(), 1);
        assert!(s5.mul(&s5).equals(&five));
        // (sqrt5 + 2)(sqrt5 - 2) = 1
        let v = s5.add(&rat(2, 1)).mul(&s5.sub(&rat(2, 1)));
        assert!(v.equals(&Tw::one()));
        // division
        let q = Tw::one().div(&s5.add(&rat(2, 1)));
        assert!(q.equals(&s5.sub(&rat(2, 1))));
    }

    #[test]
    fn two_independent_sqrts() {
        let s2 = rat(2, 1).sqrt_new_level();
        let s3 = rat(3, 1).sqrt_new_level();
        let s6 = rat(6, 1).sqrt_new_level();
        // sqrt2 * sqrt3 = sqrt6 across different levels
        assert!(s2.mul(&s3).equals(&s6));
        assert_eq!(s2.add(&s3).sub(&s6).sign(), 1); // sqrt2+sqrt3 > sqrt6
        assert_eq!(s2.sub(&s3).sign(), -1);
    }

    #[test]
    fn square_disc_degenerate_norm() {
        // sqrt(4) as a formal extension: norm a^2 - b^2*4 can vanish
        let s4 = rat(4, 1).sqrt_new_level(); // formally sqrt(4) = 2
        let v = s4.sub(&rat(2, 1));
        assert!(v.is_zero());
        let w = s4.add(&rat(2, 1)); // = 4, but with vanishing norm
        assert_eq!(w.sign(), 1);
        let inv = Tw::one().div(&w);
        assert!(inv.mul(&w).equals(&Tw::one()));
    }

    #[test]
    fn cyclotomic_base() {
        // sqrt(2)*cos(pi/8) stays exact: (sqrt2 cos(pi/8))^2 = 2cos^2 = 1 + cos(pi/4) = 1 + sqrt2/2
        let c8 = Tw::from_cyc(CycReal::cos_pi_over(8));
        let s2 = Tw::from_cyc(CycReal::cos_pi_over(4).mul_rat(&Rat::from_int(2)));
        let v = s2.mul(&c8);
        let sq = v.mul(&v);
        let expect = Tw::from_cyc(
            CycReal::one().add(&CycReal::cos_pi_over(4)),
        );
        assert!(sq.equals(&expect));
        assert_eq!(v.sign(), 1);
        // and v > 1 (it is a valid dotted weight)
        assert_eq!(v.sub(&Tw::one()).sign(), 1);
    }

    #[test]
    fn to_algebraic_roundtrip() {
        let s5 = rat(5, 1).sqrt_new_level();
        let w = s5.add(&rat(2, 1));
        let alg = w.to_algebraic();
        assert_eq!(
            *alg.minpoly(),
            crate::algebra::poly::IntPoly::from_i64(&[-1, -4, 1])
        );
    }
}
