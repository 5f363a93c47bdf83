//! Certified interval arithmetic over dyadic rationals.
//!
//! Every enclosure here is exact-outward: the true value always lies inside
//! the returned interval. Precision is a bit count; raising it tightens the
//! enclosure. Used for sign refinement of exact quantities and for decimal
//! display, never as a substitute for the exact zero tests.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rat;

/// Dyadic number `mant * 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic {
            mant: BigInt::from(n),
            exp: 0,
        }
    }

    pub fn to_rat(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from(&self.mant * (BigInt::one() << self.exp as u64))
        } else {
            Rat::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        if a.exp <= b.exp {
            let shift = (b.exp - a.exp) as u64;
            (a.mant.clone(), &b.mant << shift, a.exp)
        } else {
            let shift = (a.exp - b.exp) as u64;
            (&a.mant << shift, b.mant.clone(), b.exp)
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (x, y, e) = Dyadic::align(self, other);
        Dyadic { mant: x + y, exp: e }
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let (x, y, e) = Dyadic::align(self, other);
        Dyadic { mant: x - y, exp: e }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    fn cmp_val(&self, other: &Dyadic) -> std::cmp::Ordering {
        let (x, y, _) = Dyadic::align(self, other);
        x.cmp(&y)
    }

    /// Round down to `prec` fractional bits.
    pub fn floor_prec(&self, prec: u32) -> Dyadic {
        let target = -(prec as i64);
        if self.exp >= target {
            return self.clone();
        }
        // num-bigint's shr floors (rounds toward negative infinity).
        let shift = (target - self.exp) as u64;
        Dyadic {
            mant: &self.mant >> shift,
            exp: target,
        }
    }

    /// Round up to `prec` fractional bits.
    pub fn ceil_prec(&self, prec: u32) -> Dyadic {
        self.neg().floor_prec(prec).neg()
    }

    pub fn to_f64_approx(&self) -> f64 {
        let m = self.mant.to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(self.exp.clamp(-10_000, 10_000) as i32)
    }
}

pub fn dyadic_from_rat_floor(r: &Rat, prec: u32) -> Dyadic {
    // floor(r * 2^prec) / 2^prec
    let scaled = (r.numer() << prec as u64).div_floor(r.denom());
    Dyadic {
        mant: scaled,
        exp: -(prec as i64),
    }
}

pub fn dyadic_from_rat_ceil(r: &Rat, prec: u32) -> Dyadic {
    dyadic_from_rat_floor(&-r, prec).neg()
}

trait DivFloor {
    fn div_floor(&self, d: &BigInt) -> BigInt;
}

impl DivFloor for BigInt {
    fn div_floor(&self, d: &BigInt) -> BigInt {
        num_integer::Integer::div_floor(self, d)
    }
}

/// Closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug)]
pub struct Iv {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Iv {
    pub fn point(d: Dyadic) -> Iv {
        Iv {
            lo: d.clone(),
            hi: d,
        }
    }

    pub fn new(lo: Dyadic, hi: Dyadic) -> Iv {
        debug_assert!(lo.cmp_val(&hi) != std::cmp::Ordering::Greater);
        Iv { lo, hi }
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Iv {
        Iv {
            lo: dyadic_from_rat_floor(r, prec),
            hi: dyadic_from_rat_ceil(r, prec),
        }
    }

    pub fn from_rat_pair(lo: &Rat, hi: &Rat, prec: u32) -> Iv {
        Iv {
            lo: dyadic_from_rat_floor(lo, prec),
            hi: dyadic_from_rat_ceil(hi, prec),
        }
    }

    pub fn zero() -> Iv {
        Iv::point(Dyadic::zero())
    }

    pub fn add(&self, other: &Iv) -> Iv {
        Iv {
            lo: self.lo.add(&other.lo),
            hi: self.hi.add(&other.hi),
        }
    }

    pub fn sub(&self, other: &Iv) -> Iv {
        Iv {
            lo: self.lo.sub(&other.hi),
            hi: self.hi.sub(&other.lo),
        }
    }

    pub fn neg(&self) -> Iv {
        Iv {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn mul(&self, other: &Iv) -> Iv {
        let cands = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c.cmp_val(&lo) == std::cmp::Ordering::Less {
                lo = c.clone();
            }
            if c.cmp_val(&hi) == std::cmp::Ordering::Greater {
                hi = c.clone();
            }
        }
        Iv { lo, hi }
    }

    pub fn scale_rat(&self, r: &Rat, prec: u32) -> Iv {
        let rv = Iv::from_rat(r, prec);
        self.mul(&rv)
    }

    /// Outward rounding to `prec` fractional bits, keeping mantissas small.
    pub fn round_out(&self, prec: u32) -> Iv {
        Iv {
            lo: self.lo.floor_prec(prec),
            hi: self.hi.ceil_prec(prec),
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign: Some(+1/-1) when the interval excludes zero,
    /// Some(0) when it is exactly the point zero, None when undecided.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.mant.is_zero() && self.hi.mant.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    /// Enclosure of the square root, clamping a slightly negative lower
    /// bound to zero (valid when the true value is known nonnegative).
    pub fn sqrt(&self, prec: u32) -> Iv {
        let lo_r = self.lo.to_rat();
        let hi_r = self.hi.to_rat();
        let lo = if lo_r.is_negative() {
            Rat::zero()
        } else {
            rat_sqrt_lower(&lo_r, prec)
        };
        let hi = if hi_r.is_negative() {
            Rat::zero()
        } else {
            rat_sqrt_upper(&hi_r, prec)
        };
        Iv::from_rat_pair(&lo, &hi, prec)
    }

    pub fn mid_rat(&self) -> Rat {
        (self.lo.to_rat() + self.hi.to_rat()) / Rat::from(BigInt::from(2))
    }

    pub fn to_f64_approx(&self) -> f64 {
        0.5 * (self.lo.to_f64_approx() + self.hi.to_f64_approx())
    }
}

fn rat_sqrt_lower(r: &Rat, prec: u32) -> Rat {
    let k = prec as u64;
    let scaled = (r.numer() * r.denom()) << (2 * k);
    Rat::new(scaled.sqrt(), r.denom() << k)
}

fn rat_sqrt_upper(r: &Rat, prec: u32) -> Rat {
    let k = prec as u64;
    let scaled = (r.numer() * r.denom()) << (2 * k);
    Rat::new(scaled.sqrt() + BigInt::one(), r.denom() << k)
}

/// Enclosure of pi at `prec` bits, from Machin's formula
/// `pi = 16 atan(1/5) - 4 atan(1/239)` with alternating-series tail bounds.
pub fn pi_interval(prec: u32) -> Iv {
    static CACHE: OnceLock<Mutex<Option<(u32, Iv)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(None));
    {
        let guard = cache.lock().unwrap();
        if let Some((p, iv)) = guard.as_ref() {
            if *p >= prec {
                return iv.round_out(prec);
            }
        }
    }
    let work = prec + 16;
    let a5 = atan_inv_interval(5, work);
    let a239 = atan_inv_interval(239, work);
    let sixteen = Iv::point(Dyadic::from_int(16));
    let four = Iv::point(Dyadic::from_int(4));
    let pi = sixteen.mul(&a5).sub(&four.mul(&a239)).round_out(work);
    *cache.lock().unwrap() = Some((prec, pi.clone()));
    pi.round_out(prec)
}

/// Enclosure of `atan(1/x)` for integer `x >= 2`.
fn atan_inv_interval(x: i64, prec: u32) -> Iv {
    // Alternating series: sum_{k>=0} (-1)^k / ((2k+1) x^(2k+1)).
    // Partial sums bracket the limit; stop when a term < 2^-(prec+2).
    let mut acc = Rat::zero();
    let xr = Rat::from(BigInt::from(x));
    let x2 = &xr * &xr;
    let mut pow = xr.clone(); // x^(2k+1)
    let mut k: u64 = 0;
    let eps = Rat::new(BigInt::one(), BigInt::one() << (prec + 2) as u64);
    loop {
        let term = Rat::new(BigInt::one(), BigInt::from(2 * k + 1)) / &pow;
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        if term < eps {
            // alternating series: limit lies within one term of acc
            let lo = &acc - &term;
            let hi = &acc + &term;
            return Iv::from_rat_pair(&lo, &hi, prec);
        }
        pow *= &x2;
        k += 1;
    }
}

/// Enclosure of `cos(q * pi)` for rational `q` at `prec` bits.
pub fn cos_qpi_interval(q: &Rat, prec: u32) -> Iv {
    let work = prec + 16;
    // Normalize q into [0, 2): cos has period 2 in these units.
    let two = Rat::from(BigInt::from(2));
    let mut qn = q.clone();
    let f = (&qn / &two).floor();
    qn -= f * &two;
    // cos((2 - t) pi) = cos(t pi), fold into [0, 1]
    if qn > Rat::one() {
        qn = &two - &qn;
    }
    let pi = pi_interval(work);
    let x = pi.scale_rat(&qn, work);
    cos_interval(&x, work).round_out(prec)
}

/// Enclosure of `cos(x)` for `x` in roughly `[0, pi]` (any bounded input).
fn cos_interval(x: &Iv, prec: u32) -> Iv {
    // Taylor with explicit remainder: cos t = sum_{k<K} (-1)^k t^(2k)/(2k)!
    // + R, |R| <= t^(2K)/(2K)!. Interval-evaluate in t^2.
    let t2 = x.mul(x).round_out(prec);
    let mut sum = Iv::point(Dyadic::from_int(1));
    let mut term = Iv::point(Dyadic::from_int(1));
    let mut k: u64 = 1;
    loop {
        // term *= t2 / ((2k-1)(2k))
        term = term
            .mul(&t2)
            .scale_rat(
                &Rat::new(BigInt::one(), BigInt::from((2 * k - 1) * (2 * k))),
                prec,
            )
            .round_out(prec);
        // |term| upper bound as remainder once it is small and t2 < (2k)^2
        let tw = term_abs_hi(&term);
        if k % 2 == 1 {
            sum = sum.sub(&term).round_out(prec);
        } else {
            sum = sum.add(&term).round_out(prec);
        }
        // Stop when the next term is provably below 2^-(prec): next term
        // magnitude <= |term| * hi(t2) / ((2k+1)(2k+2)).
        let t2hi = term_abs_hi(&t2);
        let next_bound =
            tw.mul(&t2hi)
                .to_rat()
                * Rat::new(BigInt::one(), BigInt::from((2 * k + 1) * (2 * k + 2)));
        if next_bound < Rat::new(BigInt::one(), BigInt::one() << prec as u64) && k >= 4 {
            let pad = Iv::from_rat_pair(&-&next_bound, &next_bound, prec);
            return sum.add(&pad);
        }
        k += 1;
    }
}

fn term_abs_hi(iv: &Iv) -> Dyadic {
    let a = if iv.lo.is_negative() {
        iv.lo.neg()
    } else {
        iv.lo.clone()
    };
    let b = if iv.hi.is_negative() {
        iv.hi.neg()
    } else {
        iv.hi.clone()
    };
    if a.cmp_val(&b) == std::cmp::Ordering::Greater {
        a
    } else {
        b
    }
}

/// Interval determinant by subset expansion (certified enclosure).
pub fn det_interval(a: &[Vec<Iv>]) -> Iv {
    let n = a.len();
    if n == 0 {
        return Iv::point(Dyadic::from_int(1));
    }
    let full = 1usize << n;
    let mut f: Vec<Option<Iv>> = vec![None; full];
    f[0] = Some(Iv::point(Dyadic::from_int(1)));
    for mask in 1..full {
        let r = (mask as u32).count_ones() as usize - 1;
        let mut acc = Iv::zero();
        let mut cols: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        cols.reverse();
        for (idx, j) in cols.iter().enumerate() {
            let sub = f[mask & !(1 << j)].as_ref().unwrap();
            let term = a[r][*j].mul(sub);
            let pos = (cols.len() - 1 - idx) + r;
            if pos % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        f[mask] = Some(acc.round_out(96));
    }
    f[full - 1].take().unwrap()
}

/// Decimal rendering with `digits` significant digits from an enclosure
/// refiner. `refine(prec)` must return tighter and tighter enclosures.
pub fn decimal_digits<F: FnMut(u32) -> Iv>(mut refine: F, digits: u32) -> String {
    let mut prec = 64;
    loop {
        let iv = refine(prec);
        let w = iv.width().to_rat();
        // Need width < 10^-(digits+2) * max(1, |value|); use plain 10^-(digits+2)
        let target = Rat::new(BigInt::one(), BigInt::from(10u32).pow(digits + 2));
        if w < target || prec > 4096 {
            let mid = iv.mid_rat();
            return format_rat_decimal(&mid, digits);
        }
        prec *= 2;
    }
}

fn format_rat_decimal(r: &Rat, digits: u32) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // scale to `digits` significant digits
    let mut mag = 0i32;
    let ten = Rat::from(BigInt::from(10));
    let mut v = a.clone();
    while v >= ten {
        v /= &ten;
        mag += 1;
    }
    while v < Rat::one() {
        v *= &ten;
        mag -= 1;
    }
    let scale = BigInt::from(10u32).pow(digits - 1);
    let scaled = (v * Rat::from(scale)).round();
    let s = scaled.numer().to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    // place decimal point after first digit, exponent mag
    if mag >= 0 && (mag as u32) < digits {
        let point = mag as usize + 1;
        out.push_str(&s[..point]);
        let frac = s[point..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else if mag < 0 && mag >= -4 {
        out.push_str("0.");
        for _ in 0..(-mag - 1) {
            out.push('0');
        }
        out.push_str(s.trim_end_matches('0'));
    } else {
        out.push_str(&s[..1]);
        let frac = s[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push('e');
        out.push_str(&mag.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::RatExt;

    #[test]
    fn dyadic_rounding() {
        let d = Dyadic {
            mant: BigInt::from(5),
            exp: -3,
        }; // 0.625
        let f = d.floor_prec(1); // -> 0.5
        assert_eq!(f.to_rat(), Rat::from_pair(1, 2));
        let c = d.ceil_prec(1); // -> 1.0... wait 0.625 ceil at half-steps -> 1.0? No: 2 * 0.625 = 1.25, ceil = 2 -> 1.0
        assert_eq!(c.to_rat(), Rat::from_int(1));
        let n = Dyadic {
            mant: BigInt::from(-5),
            exp: -3,
        };
        assert_eq!(n.floor_prec(1).to_rat(), Rat::from_int(-1));
        assert_eq!(n.ceil_prec(1).to_rat(), Rat::from_pair(-1, 2));
    }

    #[test]
    fn pi_enclosure() {
        let pi = pi_interval(128);
        let lo = pi.lo.to_rat();
        let hi = pi.hi.to_rat();
        assert!(lo < hi);
        assert!(lo > Rat::from_pair(314159, 100000));
        assert!(hi < Rat::from_pair(314160, 100000));
        let w = pi.width().to_rat();
        assert!(w < Rat::new(BigInt::one(), BigInt::one() << 100u64));
    }

    #[test]
    fn cos_enclosures() {
        // cos(pi/3) = 1/2
        let c = cos_qpi_interval(&Rat::from_pair(1, 3), 96);
        let half = Rat::from_pair(1, 2);
        assert!(c.lo.to_rat() <= half && half <= c.hi.to_rat());
        assert!(c.width().to_rat() < Rat::new(BigInt::one(), BigInt::one() << 80u64));
        // cos(pi/2) = 0
        let c = cos_qpi_interval(&Rat::from_pair(1, 2), 96);
        assert!(c.contains_zero());
        // cos(pi) = -1
        let c = cos_qpi_interval(&Rat::from_int(1), 96);
        let m1 = Rat::from_int(-1);
        assert!(c.lo.to_rat() <= m1 && m1 <= c.hi.to_rat());
        // cos(7pi/5) = cos(3pi/5) folding
        let c1 = cos_qpi_interval(&Rat::from_pair(7, 5), 80);
        let c2 = cos_qpi_interval(&Rat::from_pair(3, 5), 80);
        assert!(c1.lo.to_rat() <= c2.hi.to_rat() && c2.lo.to_rat() <= c1.hi.to_rat());
    }

    #[test]
    fn decimal_rendering() {
        let s = decimal_digits(|p| Iv::from_rat(&Rat::from_pair(1, 3), p), 6);
        assert_eq!(s, "0.333333");
        let s = decimal_digits(|p| Iv::from_rat(&Rat::from_pair(-5, 4), p), 6);
        assert_eq!(s, "-1.25");
    }
}
