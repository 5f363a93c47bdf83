//! Exact real algebraic numbers: a squarefree primitive integer minimal
//! polynomial together with an isolating rational interval.
//!
//! Zero is detected exactly (never by tolerance): a value is zero iff its
//! polynomial vanishes at 0 and the isolating interval pins that root.
//! Arithmetic composes resultants, takes the squarefree part and refines
//! operand intervals until the result is isolated again.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycReal;
use super::interval::{decimal_digits, cos_qpi_interval, Iv};
use super::poly::{minpoly_cos_fraction, resultant_y, IntPoly, PolyOverPoly, Sturm};
use super::rational::{Rat, RatExt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    DivisionByZero,
    SqrtOfNegative,
    DomainError(String),
    IdenticallyZero,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
            AlgebraError::SqrtOfNegative => write!(f, "square root of a negative number"),
            AlgebraError::DomainError(s) => write!(f, "domain error: {}", s),
            AlgebraError::IdenticallyZero => write!(f, "polynomial is identically zero"),
        }
    }
}

impl std::error::Error for AlgebraError {}

/// Exact real algebraic number.
#[derive(Clone)]
pub struct AlgebraicReal {
    /// Primitive, squarefree, positive leading coefficient.
    minpoly: IntPoly,
    /// `lo == hi` exactly for rational values; otherwise an open isolating
    /// interval whose endpoints are not roots of `minpoly`.
    lo: Rat,
    hi: Rat,
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "AlgebraicReal({})", r)
        } else {
            write!(
                f,
                "AlgebraicReal(root of {} in ({}, {}))",
                self.minpoly, self.lo, self.hi
            )
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{}", r)
        } else {
            write!(f, "{} (root of {})", self.to_decimal(12), self.minpoly)
        }
    }
}

impl AlgebraicReal {
    // -- constructors -------------------------------------------------------

    pub fn from_rational(q: Rat) -> Self {
        AlgebraicReal {
            minpoly: IntPoly::linear_with_root(&q),
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        AlgebraicReal::from_rational(Rat::from_int(n))
    }

    pub fn zero() -> Self {
        AlgebraicReal::from_int(0)
    }

    pub fn one() -> Self {
        AlgebraicReal::from_int(1)
    }

    /// `cos(pi/m)` for `m >= 2`, with its true minimal polynomial.
    pub fn cos_pi_over(m: u64) -> Result<Self, AlgebraError> {
        if m < 2 {
            return Err(AlgebraError::DomainError(format!(
                "cos(pi/m) needs m >= 2, got {}",
                m
            )));
        }
        Ok(Self::cos_fraction(1, m))
    }

    /// `cos(k*pi/n)` for a fraction in `[0, 1]`.
    pub fn cos_fraction(k: u64, n: u64) -> Self {
        static CACHE: OnceLock<Mutex<HashMap<(u64, u64), AlgebraicReal>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = cache.lock().unwrap().get(&(k, n)) {
            return v.clone();
        }
        let poly = minpoly_cos_fraction(k, n);
        let value = if poly.deg() == 1 {
            // rational cosine
            let r = Rat::new(-poly.coeff(0), poly.coeff(1));
            AlgebraicReal::from_rational(r)
        } else {
            Self::isolate_cos_by_conjugates(k, n, poly)
        };
        cache.lock().unwrap().insert((k, n), value.clone());
        value
    }

    /// The conjugates of `cos(k pi/n) = cos(2 pi j/mp)` are exactly
    /// `cos(2 pi t/mp)` for `t` in `[1, mp/2]` coprime to `mp`, strictly
    /// decreasing in `t`. An interval strictly between the neighboring
    /// conjugates therefore isolates the root with no Sturm work.
    fn isolate_cos_by_conjugates(k: u64, n: u64, poly: IntPoly) -> Self {
        use super::poly::gcd_u64;
        let g = gcd_u64(k, 2 * n);
        let mp = 2 * n / g;
        let j = k / g;
        debug_assert!(gcd_u64(j, mp) == 1 && 2 * j <= mp);
        let prev = (1..j).rev().find(|&t| gcd_u64(t, mp) == 1);
        let next = (j + 1..=mp / 2).find(|&t| gcd_u64(t, mp) == 1);
        let enclose = |t: u64, prec: u32| {
            let q = Rat::new(BigInt::from(2 * t), BigInt::from(mp));
            cos_qpi_interval(&q, prec)
        };
        let mut prec = 32 + 2 * (64 - (mp.leading_zeros() as u32).min(63));
        loop {
            let me = enclose(j, prec);
            let hi = match prev {
                None => Rat::from_int(2),
                Some(t) => {
                    let e = enclose(t, prec);
                    let gap_lo = e.lo.to_rat();
                    let my_hi = me.hi.to_rat();
                    if gap_lo <= my_hi {
                        prec *= 2;
                        continue;
                    }
                    (gap_lo + my_hi) / Rat::from_int(2)
                }
            };
            let lo = match next {
                None => Rat::from_int(-2),
                Some(t) => {
                    let e = enclose(t, prec);
                    let gap_hi = e.hi.to_rat();
                    let my_lo = me.lo.to_rat();
                    if gap_hi >= my_lo {
                        prec *= 2;
                        continue;
                    }
                    (gap_hi + my_lo) / Rat::from_int(2)
                }
            };
            debug_assert!(poly.sign_at(&lo) != 0 && poly.sign_at(&hi) != 0);
            return AlgebraicReal {
                minpoly: poly,
                lo,
                hi,
            };
        }
    }

    /// Build from a squarefree polynomial and a shrinking true enclosure of
    /// one of its roots.
    fn isolate_from_enclosure<F: FnMut(u32) -> (Rat, Rat)>(
        sf_poly: IntPoly,
        mut enclose: F,
    ) -> Self {
        debug_assert!(!sf_poly.is_zero() && sf_poly.deg() >= 1);
        let sturm = Sturm::new(&sf_poly);
        let mut rounds = 0u32;
        loop {
            let prec = 32u32.saturating_add(rounds.saturating_mul(8));
            let (mut lo, mut hi) = enclose(prec);
            // Nudge root endpoints outward; outward keeps the enclosure true.
            let mut pad = if hi > lo {
                (&hi - &lo) / Rat::from_int(64)
            } else {
                Rat::new(BigInt::one(), BigInt::one() << prec.min(256) as u64)
            };
            let mut guard = 0;
            while sf_poly.sign_at(&lo) == 0 {
                lo -= &pad;
                pad /= Rat::from_int(2);
                guard += 1;
                assert!(guard < 200, "could not move endpoint off a root");
            }
            let mut guard = 0;
            while sf_poly.sign_at(&hi) == 0 {
                hi += &pad;
                pad /= Rat::from_int(2);
                guard += 1;
                assert!(guard < 200, "could not move endpoint off a root");
            }
            if sturm.count_roots_half_open(&lo, &hi) == 1 {
                return AlgebraicReal {
                    minpoly: sf_poly,
                    lo,
                    hi,
                };
            }
            rounds += 1;
            assert!(rounds <= 10_000, "root isolation failed to converge");
        }
    }

    // -- accessors ----------------------------------------------------------

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_point() {
            Some(&self.lo)
        } else {
            None
        }
    }

    /// Shrink the isolating interval; collapses to a point when the value
    /// turns out to be the rational midpoint.
    pub fn refine(&mut self) {
        if self.is_point() {
            return;
        }
        let mid = (&self.lo + &self.hi) / Rat::from_int(2);
        let sm = self.minpoly.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        let sl = self.minpoly.sign_at(&self.lo);
        if sl != sm {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to_width(&mut self, eps: &Rat) {
        while !self.is_point() && (&self.hi - &self.lo) >= *eps {
            self.refine();
        }
    }

    pub fn sign(&self) -> i32 {
        if let Some(r) = self.as_rational() {
            return r.sign_i32();
        }
        let mut v = self.clone();
        loop {
            if v.lo.is_positive() {
                return 1;
            }
            if v.hi.is_negative() {
                return -1;
            }
            // 0 inside the isolating interval: the value is zero iff the
            // unique root there is 0, i.e. iff the polynomial vanishes at 0.
            if v.minpoly.sign_at(&Rat::zero()) == 0 {
                return 0;
            }
            v.refine();
            if let Some(r) = v.as_rational() {
                return r.sign_i32();
            }
        }
    }

    pub fn is_zero_val(&self) -> bool {
        self.sign() == 0
    }

    pub fn equals(&self, other: &Self) -> bool {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            (Some(r), None) => other.equals_rational(r),
            (None, Some(r)) => self.equals_rational(r),
            (None, None) => {
                // Distinct values usually separate after a few bisections;
                // only near-equal pairs pay for a gcd.
                let mut a = self.clone();
                let mut b = other.clone();
                for _ in 0..48 {
                    if a.lo >= b.hi || b.lo >= a.hi {
                        return false;
                    }
                    a.refine();
                    b.refine();
                    if let Some(r) = a.as_rational() {
                        return b.equals_rational(r);
                    }
                    if let Some(r) = b.as_rational() {
                        return a.equals_rational(r);
                    }
                }
                let g = a.minpoly.gcd(&b.minpoly);
                if g.degree().map_or(true, |d| d == 0) {
                    return false;
                }
                // The intersection J of the isolating intervals sits inside
                // a's interval, so it holds at most one root of g, and holds
                // one exactly when the values are equal. Its endpoints are
                // operand endpoints, never minpoly roots, so a sign change
                // of g across J decides.
                let lo = if a.lo > b.lo { a.lo } else { b.lo };
                let hi = if a.hi < b.hi { a.hi } else { b.hi };
                if lo >= hi {
                    return false;
                }
                let sl = g.sign_at(&lo);
                let sh = g.sign_at(&hi);
                debug_assert!(sl != 0 && sh != 0);
                sl != sh
            }
        }
    }

    fn equals_rational(&self, r: &Rat) -> bool {
        if let Some(q) = self.as_rational() {
            return q == r;
        }
        self.minpoly.sign_at(r) == 0 && self.lo < *r && *r < self.hi
    }

    pub fn compare(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if self.equals(other) {
            return Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi <= b.lo {
                return Less;
            }
            if b.hi <= a.lo {
                return Greater;
            }
            a.refine();
            b.refine();
        }
    }

    // -- arithmetic ---------------------------------------------------------

    pub fn neg(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return AlgebraicReal::from_rational(-r.clone());
        }
        let p = self.minpoly.compose(&IntPoly::from_i64(&[0, -1])).primitive();
        AlgebraicReal {
            minpoly: p,
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if let Some(r) = self.as_rational() {
            return other.add_rational(r);
        }
        if let Some(r) = other.as_rational() {
            return self.add_rational(r);
        }
        // Res_y(p_a(y), p_b(x - y)) vanishes at a + b.
        let res = resultant_y(&self.minpoly, &shift_in_y(&other.minpoly));
        let sf = res.squarefree();
        let mut a = self.clone();
        let mut b = other.clone();
        AlgebraicReal::isolate_from_enclosure(sf, move |_prec| {
            for _ in 0..4 {
                a.refine();
                b.refine();
            }
            (&a.lo + &b.lo, &a.hi + &b.hi)
        })
    }

    pub fn add_rational(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return self.clone();
        }
        if let Some(q) = self.as_rational() {
            return AlgebraicReal::from_rational(q + r);
        }
        // p(x - r) has roots shifted up by r
        let p = self.minpoly.compose_shift(&-r.clone());
        AlgebraicReal {
            minpoly: p,
            lo: &self.lo + r,
            hi: &self.hi + r,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some(r) = self.as_rational() {
            return other.mul_rational(r);
        }
        if let Some(r) = other.as_rational() {
            return self.mul_rational(r);
        }
        // Res_y(p_a(y), y^m p_b(x/y)) vanishes at a*b; strip x factors since
        // neither operand is zero (irrational).
        let pa = self.minpoly.strip_x_factor();
        let pb = other.minpoly.strip_x_factor();
        let res = resultant_y(&pa, &homogenize(&pb));
        let sf = res.squarefree();
        let mut a = self.clone();
        let mut b = other.clone();
        AlgebraicReal::isolate_from_enclosure(sf, move |_prec| {
            for _ in 0..4 {
                a.refine();
                b.refine();
            }
            let cands = [
                &a.lo * &b.lo,
                &a.lo * &b.hi,
                &a.hi * &b.lo,
                &a.hi * &b.hi,
            ];
            let lo = cands.iter().min().unwrap().clone();
            let hi = cands.iter().max().unwrap().clone();
            (lo, hi)
        })
    }

    pub fn mul_rational(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return AlgebraicReal::zero();
        }
        if let Some(q) = self.as_rational() {
            return AlgebraicReal::from_rational(q * r);
        }
        // poly with roots r * beta: sum c_i x^i u^(n-i) v^i for r = u/v
        let n = self.minpoly.deg();
        let u = r.numer();
        let v = r.denom();
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut upow = vec![BigInt::one()];
        let mut vpow = vec![BigInt::one()];
        for i in 1..=n {
            upow.push(&upow[i - 1] * u);
            vpow.push(&vpow[i - 1] * v);
        }
        for i in 0..=n {
            coeffs.push(self.minpoly.coeff(i) * &upow[n - i] * &vpow[i]);
        }
        let p = IntPoly::from_coeffs(coeffs).primitive();
        let (mut lo, mut hi) = (&self.lo * r, &self.hi * r);
        if lo > hi {
            std::mem::swap(&mut lo, &mut hi);
        }
        AlgebraicReal {
            minpoly: p,
            lo,
            hi,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.sign() == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.mul(&other.inverse_unchecked()))
    }

    fn inverse_unchecked(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return AlgebraicReal::from_rational(Rat::one() / r);
        }
        let p = self.minpoly.strip_x_factor().reversed().primitive();
        let mut v = self.clone();
        // refine until the interval excludes zero
        while !(v.lo.is_positive() || v.hi.is_negative()) {
            v.refine();
        }
        let (lo, hi) = (Rat::one() / &v.hi, Rat::one() / &v.lo);
        AlgebraicReal {
            minpoly: p,
            lo,
            hi,
        }
    }

    pub fn sqrt_nonneg(&self) -> Result<Self, AlgebraError> {
        match self.sign() {
            -1 => Err(AlgebraError::SqrtOfNegative),
            0 => Ok(AlgebraicReal::zero()),
            _ => {
                if let Some(r) = self.as_rational() {
                    // exact rational square root when num*den is a square
                    let nd = r.numer() * r.denom();
                    let s = nd.sqrt();
                    if &s * &s == nd {
                        return Ok(AlgebraicReal::from_rational(Rat::new(
                            s,
                            r.denom().clone(),
                        )));
                    }
                }
                let p = self
                    .minpoly
                    .compose(&IntPoly::from_i64(&[0, 0, 1]))
                    .squarefree();
                let mut a = self.clone();
                while !a.lo.is_positive() {
                    a.refine();
                }
                Ok(AlgebraicReal::isolate_from_enclosure(p, move |prec| {
                    for _ in 0..4 {
                        a.refine();
                    }
                    rat_sqrt_bounds(&a.lo, &a.hi, prec)
                }))
            }
        }
    }

    pub fn square(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return AlgebraicReal::from_rational(r * r);
        }
        let sf = self.minpoly.poly_of_square().squarefree();
        let mut a = self.clone();
        AlgebraicReal::isolate_from_enclosure(sf, move |_prec| {
            for _ in 0..4 {
                a.refine();
            }
            let c1 = &a.lo * &a.lo;
            let c2 = &a.hi * &a.hi;
            if a.lo.is_negative() && a.hi.is_positive() {
                (Rat::zero(), c1.max(c2))
            } else {
                (c1.clone().min(c2.clone()), c1.max(c2))
            }
        })
    }

    // -- conversions --------------------------------------------------------

    /// Exact conversion from the cyclotomic layer. Intended for small values
    /// (catalog weights, CLI output); cost grows quickly with term count.
    pub fn from_cyc(c: &CycReal) -> Self {
        let mut acc = AlgebraicReal::from_rational(c.rational_part().clone());
        for (a, coeff) in c.cosine_terms() {
            let t = AlgebraicReal::cos_fraction(a.num, a.den).mul_rational(coeff);
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval_iv(&self, prec: u32) -> Iv {
        let mut v = self.clone();
        let eps = Rat::new(BigInt::one(), BigInt::one() << prec.min(8192) as u64);
        v.refine_to_width(&eps);
        Iv::from_rat_pair(&v.lo, &v.hi, prec + 8)
    }

    pub fn to_decimal(&self, digits: u32) -> String {
        let v = self.clone();
        decimal_digits(move |prec| v.eval_iv(prec), digits)
    }

    pub fn to_f64_approx(&self) -> f64 {
        self.eval_iv(64).to_f64_approx()
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}
impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.compare(other))
    }
}
impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.compare(other)
    }
}

/// `p_b(x - y)` as a polynomial in `y` over `Z[x]`.
fn shift_in_y(pb: &IntPoly) -> PolyOverPoly {
    // (x - y)^i expanded: sum_j binom(i,j) x^(i-j) (-y)^j
    let n = pb.deg();
    let mut coeffs = vec![IntPoly::zero(); n + 1];
    let mut binom_row: Vec<BigInt> = vec![BigInt::one()];
    for i in 0..=n {
        let ci = pb.coeff(i);
        if !ci.is_zero() {
            for (j, b) in binom_row.iter().enumerate() {
                // term: ci * binom(i,j) * x^(i-j) * (-1)^j y^j
                let mut mono = vec![BigInt::zero(); i - j + 1];
                let mut c = &ci * b;
                if j % 2 == 1 {
                    c = -c;
                }
                mono[i - j] = c;
                coeffs[j] = coeffs[j].add(&IntPoly::from_coeffs(mono));
            }
        }
        // next binomial row
        let mut next = vec![BigInt::one()];
        for j in 1..=i + 1 {
            let a = if j <= i {
                binom_row[j].clone()
            } else {
                BigInt::zero()
            };
            let b = binom_row[j - 1].clone();
            next.push(a + b);
        }
        binom_row = next;
    }
    PolyOverPoly::from_coeffs(coeffs)
}

/// `y^m p_b(x/y)` as a polynomial in `y` over `Z[x]`: coefficient of `y^i`
/// is `pb_(m-i) x^(m-i)`.
fn homogenize(pb: &IntPoly) -> PolyOverPoly {
    let m = pb.deg();
    let mut coeffs = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let c = pb.coeff(m - i);
        if c.is_zero() {
            coeffs.push(IntPoly::zero());
        } else {
            let mut mono = vec![BigInt::zero(); m - i + 1];
            mono[m - i] = c;
            coeffs.push(IntPoly::from_coeffs(mono));
        }
    }
    PolyOverPoly::from_coeffs(coeffs)
}

/// Rational bounds on `[sqrt(lo), sqrt(hi)]` good to about `prec` bits,
/// for `0 < lo <= hi`.
fn rat_sqrt_bounds(lo: &Rat, hi: &Rat, prec: u32) -> (Rat, Rat) {
    let sl = rat_sqrt_floor(lo, prec);
    let sh = rat_sqrt_ceil(hi, prec);
    (sl, sh)
}

fn rat_sqrt_floor(r: &Rat, prec: u32) -> Rat {
    // sqrt(n/d) >= isqrt(n*d*4^k) / (d*2^k)
    let k = prec as u64;
    let scaled = (r.numer() * r.denom()) << (2 * k);
    let s = scaled.sqrt();
    Rat::new(s, r.denom() << k)
}

fn rat_sqrt_ceil(r: &Rat, prec: u32) -> Rat {
    let k = prec as u64;
    let scaled = (r.numer() * r.denom()) << (2 * k);
    let s = scaled.sqrt() + BigInt::one();
    Rat::new(s, r.denom() << k)
}

// ---------------------------------------------------------------------------
// Quadratic solving and cosine recognition
// ---------------------------------------------------------------------------

/// Exact real roots of `a x^2 + b x + c`, ascending, with multiplicity.
pub fn solve_quadratic(
    a: &AlgebraicReal,
    b: &AlgebraicReal,
    c: &AlgebraicReal,
) -> Result<Vec<AlgebraicReal>, AlgebraError> {
    if a.sign() == 0 {
        if b.sign() == 0 {
            if c.sign() == 0 {
                return Err(AlgebraError::IdenticallyZero);
            }
            return Ok(vec![]);
        }
        return Ok(vec![c.neg().div(b)?]);
    }
    let disc = b.square().sub(&a.mul(c).mul_rational(&Rat::from_int(4)));
    match disc.sign() {
        -1 => Ok(vec![]),
        0 => {
            let r = b.neg().div(&a.mul_rational(&Rat::from_int(2)))?;
            Ok(vec![r.clone(), r])
        }
        _ => {
            let s = disc.sqrt_nonneg()?;
            let two_a = a.mul_rational(&Rat::from_int(2));
            let r1 = b.neg().sub(&s).div(&two_a)?;
            let r2 = b.neg().add(&s).div(&two_a)?;
            let mut roots = vec![r1, r2];
            roots.sort();
            Ok(roots)
        }
    }
}

/// The unique `m` in `[2, m_max]` with `x = cos(pi/m)`, if any.
pub fn recognize_cos_pi(x: &AlgebraicReal, m_max: u64) -> Option<u64> {
    recognize_cos_pi_impl(x, Some(m_max))
}

/// As above but unbounded: sound because `cos(pi/m)` is strictly increasing
/// in `m` with limit 1, so `x < 1` leaves finitely many candidates.
pub fn recognize_cos_pi_any(x: &AlgebraicReal) -> Option<u64> {
    recognize_cos_pi_impl(x, None)
}

fn recognize_cos_pi_impl(x: &AlgebraicReal, m_max: Option<u64>) -> Option<u64> {
    // quick range rejection: need -1 < x < 1, actually x in [0, 1) for m>=2
    if x.sub(&AlgebraicReal::one()).sign() >= 0 {
        return None;
    }
    if x.add(&AlgebraicReal::one()).sign() <= 0 {
        return None;
    }
    // find an upper bracket: smallest power-of-two m with cos(pi/m) > x
    let mut hi_m: u64 = 2;
    loop {
        let c = AlgebraicReal::cos_fraction(1, hi_m);
        if c.compare(x) == std::cmp::Ordering::Greater {
            break;
        }
        if c.equals(x) {
            return filter_max(hi_m, m_max);
        }
        hi_m = hi_m.checked_mul(2)?;
        if let Some(mm) = m_max {
            if hi_m > 2 * mm.max(2) {
                break;
            }
        }
    }
    // binary search the monotone family
    let mut lo_m: u64 = 2;
    let mut hi = hi_m;
    while lo_m + 1 < hi {
        let mid = lo_m + (hi - lo_m) / 2;
        let c = AlgebraicReal::cos_fraction(1, mid);
        match c.compare(x) {
            std::cmp::Ordering::Equal => return filter_max(mid, m_max),
            std::cmp::Ordering::Less => lo_m = mid,
            std::cmp::Ordering::Greater => hi = mid,
        }
    }
    let c = AlgebraicReal::cos_fraction(1, lo_m);
    if c.equals(x) {
        return filter_max(lo_m, m_max);
    }
    None
}

fn filter_max(m: u64, m_max: Option<u64>) -> Option<u64> {
    match m_max {
        Some(mm) if m > mm => None,
        _ => Some(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt_int(n: i64) -> AlgebraicReal {
        AlgebraicReal::from_int(n).sqrt_nonneg().unwrap()
    }

    #[test]
    fn from_rational_minpolys() {
        assert_eq!(*AlgebraicReal::zero().minpoly(), IntPoly::from_i64(&[0, 1]));
        assert_eq!(
            *AlgebraicReal::from_rational(Rat::from_pair(1, 2)).minpoly(),
            IntPoly::from_i64(&[-1, 2])
        );
        assert_eq!(
            *AlgebraicReal::from_int(-3).minpoly(),
            IntPoly::from_i64(&[3, 1])
        );
    }

    #[test]
    fn cos_values() {
        assert!(AlgebraicReal::cos_pi_over(2).unwrap().is_zero_val());
        assert_eq!(
            AlgebraicReal::cos_pi_over(3).unwrap().as_rational().unwrap(),
            &Rat::from_pair(1, 2)
        );
        let c5 = AlgebraicReal::cos_pi_over(5).unwrap();
        assert_eq!(*c5.minpoly(), IntPoly::from_i64(&[-1, -2, 4]));
        // c5 = (1 + sqrt5)/4
        let v = AlgebraicReal::one()
            .add(&sqrt_int(5))
            .mul_rational(&Rat::from_pair(1, 4));
        assert!(c5.equals(&v));
        assert!(AlgebraicReal::cos_pi_over(1).is_err());
    }

    #[test]
    fn ring_ops() {
        let s2 = sqrt_int(2);
        assert_eq!(*s2.minpoly(), IntPoly::from_i64(&[-2, 0, 1]));
        // sqrt5 + 2 has minpoly x^2 - 4x - 1
        let v = sqrt_int(5).add(&AlgebraicReal::from_int(2));
        assert_eq!(*v.minpoly(), IntPoly::from_i64(&[-1, -4, 1]));
        // cos(pi/5)*4 - 1 = sqrt5
        let c5 = AlgebraicReal::cos_pi_over(5).unwrap();
        let v2 = c5.mul_rational(&Rat::from_int(4)).sub(&AlgebraicReal::one());
        assert!(v2.equals(&sqrt_int(5)));
        // a + (-a) = 0 for a = cos(pi/7)
        let c7 = AlgebraicReal::cos_pi_over(7).unwrap();
        assert!(c7.add(&c7.neg()).is_zero_val());
        // sqrt2 * sqrt2 = 2
        assert!(s2.square().equals(&AlgebraicReal::from_int(2)));
        // division round trip
        let q = sqrt_int(5).div(&s2).unwrap();
        assert!(q.mul(&s2).equals(&sqrt_int(5)));
    }

    #[test]
    fn signs_and_compare() {
        assert_eq!(AlgebraicReal::zero().sign(), 0);
        let c7 = AlgebraicReal::cos_pi_over(7).unwrap();
        let c8 = AlgebraicReal::cos_pi_over(8).unwrap();
        assert_eq!(c7.sub(&c8).sign(), -1);
        let v = AlgebraicReal::from_rational(Rat::from_pair(3, 4)).sub(&c7.square());
        assert_eq!(v.sign(), -1);
        assert_eq!(c7.compare(&c8), std::cmp::Ordering::Less);
        // equality through different constructions
        let a = sqrt_int(2).add(&sqrt_int(8)); // 3 sqrt2
        let b = sqrt_int(18);
        assert!(a.equals(&b));
    }

    #[test]
    fn quadratics() {
        // x^2 - 2
        let roots = solve_quadratic(
            &AlgebraicReal::one(),
            &AlgebraicReal::zero(),
            &AlgebraicReal::from_int(-2),
        )
        .unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].equals(&sqrt_int(2).neg()));
        assert!(roots[1].equals(&sqrt_int(2)));
        // x^2 + 1: no real roots
        assert!(solve_quadratic(
            &AlgebraicReal::one(),
            &AlgebraicReal::zero(),
            &AlgebraicReal::one()
        )
        .unwrap()
        .is_empty());
        // ((sqrt5-2)/32)(x - (sqrt5+2))^2: double root sqrt5 + 2
        let s5 = sqrt_int(5);
        let a = s5
            .sub(&AlgebraicReal::from_int(2))
            .mul_rational(&Rat::from_pair(1, 32));
        let b = AlgebraicReal::from_rational(Rat::from_pair(-1, 16));
        let c = s5
            .add(&AlgebraicReal::from_int(2))
            .mul_rational(&Rat::from_pair(1, 32));
        let roots = solve_quadratic(&a, &b, &c).unwrap();
        assert_eq!(roots.len(), 2);
        let expect = s5.add(&AlgebraicReal::from_int(2));
        assert!(roots[0].equals(&expect));
        assert!(roots[1].equals(&expect));
        // degenerate: all zero
        assert!(matches!(
            solve_quadratic(
                &AlgebraicReal::zero(),
                &AlgebraicReal::zero(),
                &AlgebraicReal::zero()
            ),
            Err(AlgebraError::IdenticallyZero)
        ));
    }

    #[test]
    fn recognition() {
        let half = AlgebraicReal::from_rational(Rat::from_pair(1, 2));
        assert_eq!(recognize_cos_pi(&half, 10), Some(3));
        let c5 = AlgebraicReal::one()
            .add(&sqrt_int(5))
            .mul_rational(&Rat::from_pair(1, 4));
        assert_eq!(recognize_cos_pi(&c5, 10), Some(5));
        assert_eq!(recognize_cos_pi_any(&c5), Some(5));
        let threefifth = AlgebraicReal::from_rational(Rat::from_pair(3, 5));
        assert_eq!(recognize_cos_pi(&threefifth, 500), None);
        assert_eq!(recognize_cos_pi_any(&threefifth), None);
        // out of range values
        assert_eq!(recognize_cos_pi_any(&AlgebraicReal::from_int(2)), None);
        assert_eq!(recognize_cos_pi_any(&AlgebraicReal::from_int(-1)), None);
        // bounded cap rejects
        assert_eq!(recognize_cos_pi(&AlgebraicReal::cos_fraction(1, 12), 10), None);
    }

    #[test]
    fn cyc_conversion() {
        // sqrt5 + 2 = 4 cos(pi/5) + 1
        let c = CycReal::cos_pi_over(5)
            .mul_rat(&Rat::from_int(4))
            .add(&CycReal::one());
        let v = AlgebraicReal::from_cyc(&c);
        assert_eq!(*v.minpoly(), IntPoly::from_i64(&[-1, -4, 1]));
        assert_eq!(v.sign(), 1);
    }

    #[test]
    fn decimal_output() {
        let s2 = sqrt_int(2);
        let s = s2.to_decimal(12);
        assert!(s.starts_with("1.41421356237"), "{}", s);
    }
}
