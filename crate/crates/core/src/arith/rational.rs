use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{Abs, Reciprocal};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;

/// Exact rational coefficient. Always stored reduced with a positive denominator.
pub type Rational = malachite_q::Rational;

/// The handful of numeric helpers the polynomial code relies on.
pub trait QExt: Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn recip(&self) -> Self;
    fn magnitude(&self) -> Self;
}

impl QExt for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }

    fn one() -> Self {
        Rational::ONE
    }

    fn is_zero(&self) -> bool {
        *self == Rational::ZERO
    }

    fn is_one(&self) -> bool {
        *self == Rational::ONE
    }

    fn is_negative(&self) -> bool {
        *self < Rational::ZERO
    }

    fn is_positive(&self) -> bool {
        *self > Rational::ZERO
    }

    fn recip(&self) -> Self {
        self.clone().reciprocal()
    }

    fn magnitude(&self) -> Self {
        self.clone().abs()
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from(n)
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::from_signeds(n, d)
}

/// Integer value of `q` if its denominator is one.
pub fn as_integer(q: &Rational) -> Option<Integer> {
    Integer::try_from(q).ok()
}

pub fn as_i64(q: &Rational) -> Option<i64> {
    i64::try_from(q).ok()
}

pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn is_unit(q: &Rational) -> bool {
    q.magnitude().is_one()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a = Integer::from_str(a.trim()).ok()?;
            let b = Integer::from_str(b.trim()).ok()?;
            if b == 0 {
                return None;
            }
            Some(Rational::from(a) / Rational::from(b))
        }
        None => Integer::from_str(s).ok().map(Rational::from),
    }
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::from(1), |acc, i| acc * Integer::from(i))
}
