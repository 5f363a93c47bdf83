//! Exact rationals. `num_rational::BigRational` already maintains the
//! lowest-terms / positive-denominator invariants the rest of the crate
//! relies on, so this is a thin layer of constructors and conversions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

pub trait RatExt {
    fn from_int(n: i64) -> Rat;
    fn from_pair(num: i64, den: i64) -> Rat;
    fn sign_i32(&self) -> i32;
}

impl RatExt for Rat {
    fn from_int(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    fn from_pair(num: i64, den: i64) -> Rat {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn sign_i32(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = Rat::from_pair(6, -4);
        assert_eq!(q, Rat::from_pair(-3, 2));
        assert!(q.denom().is_positive());
        assert_eq!(q.sign_i32(), -1);
    }
}
