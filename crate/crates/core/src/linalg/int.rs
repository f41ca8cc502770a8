//! Integer backends for fraction-free elimination.
//!
//! Elimination runs on `i128` first and is replayed on `BigInt` when any
//! intermediate overflows, so results never depend on the backend.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait ExactInt: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    /// Non-negative gcd.
    fn gcd(&self, o: &Self) -> Option<Self>;
    fn is_one(&self) -> bool;
}

impl ExactInt for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        // Keep headroom so a single product of two entries cannot wrap silently
        // inside checked ops on the neighbouring operand.
        b.to_i128().filter(|v| *v != i128::MIN)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert!(self.checked_rem(*o) == Some(0), "inexact division {self} / {o}");
        self.checked_div(*o)
    }
    fn gcd(&self, o: &Self) -> Option<Self> {
        let mut a = self.unsigned_abs();
        let mut b = o.unsigned_abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        i128::try_from(a).ok()
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl ExactInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert!(Zero::is_zero(&(self % o)), "inexact division");
        Some(self / o)
    }
    fn gcd(&self, o: &Self) -> Option<Self> {
        Some(Integer::gcd(self, o))
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i128_overflow_is_reported() {
        let big = i128::MAX / 2 + 1;
        assert_eq!(ExactInt::mul(&big, &2), None);
        assert_eq!(ExactInt::gcd(&-12i128, &18), Some(6));
        assert_eq!(<i128 as ExactInt>::from_big(&BigInt::from(i128::MIN)), None);
    }
}
