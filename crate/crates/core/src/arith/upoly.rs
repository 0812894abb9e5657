//! Dense univariate polynomials in `z` over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::QExt;

use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Coefficients in increasing degree; the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> UPoly {
        UPoly::new(vec![c])
    }

    pub fn z() -> UPoly {
        UPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c * z^e`.
    pub fn monomial(c: Rational, e: usize) -> UPoly {
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = c;
        UPoly::new(v)
    }

    /// `z^e - 1`.
    pub fn z_pow_minus_one(e: usize) -> UPoly {
        UPoly::monomial(Rational::one(), e).sub_poly(&UPoly::one())
    }

    pub fn from_ints(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&a| rat(a)).collect())
    }

    pub fn new(mut coeffs: Vec<Rational>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides out `z^valuation`.
    pub fn strip_z_power(&self) -> (usize, UPoly) {
        match self.valuation() {
            None => (0, self.clone()),
            Some(v) => (v, UPoly::new(self.coeffs[v..].to_vec())),
        }
    }

    pub fn add_poly(&self, o: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..len).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub_poly(&self, o: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..len).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul_poly(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::new(v)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| acc.mul_poly(self))
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or_else(|| Error::Inexact("division by zero polynomial".into()))?;
        let mut r = self.coeffs.clone();
        let inv = d.lead().recip();
        if r.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * b;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    /// Exact division; errors when a remainder is left.
    pub fn div_exact(&self, d: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Inexact(format!("{self} is not divisible by {d}")));
        }
        Ok(q)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &UPoly, b: &UPoly) -> Result<(UPoly, UPoly, UPoly)> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = s0.sub_poly(&q.mul_poly(&s1));
            let t2 = t0.sub_poly(&q.mul_poly(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = r0.lead().recip();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.magnitude();
            let mono = match e {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{e}"),
            };
            if e == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        self.add_poly(o)
    }
}

impl Sub<&UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        self.sub_poly(o)
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        self.mul_poly(o)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        self.scale(&rat(-1))
    }
}
