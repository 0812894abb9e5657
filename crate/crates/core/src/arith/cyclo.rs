//! Arithmetic in the cyclotomic field Q[z]/Phi_r.

use std::fmt;

use super::rational::QExt;

use super::rational::{rat, Rational};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// The r-th cyclotomic polynomial, by dividing `z^r - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic(r: usize) -> UPoly {
    assert!(r >= 1, "cyclotomic order must be positive");
    let mut f = UPoly::z_pow_minus_one(r);
    for d in 1..r {
        if r % d == 0 {
            f = f.div_exact(&cyclotomic(d)).expect("cyclotomic divisor");
        }
    }
    f
}

/// Element of Q[z]/Phi_r, i.e. a polynomial expression in a primitive r-th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElt {
    r: usize,
    residue: UPoly,
}

impl CycloElt {
    pub fn from_upoly(f: &UPoly, r: usize) -> CycloElt {
        let phi = cyclotomic(r);
        let (_, rem) = f.div_rem(&phi).expect("nonzero modulus");
        CycloElt { r, residue: rem }
    }

    pub fn from_rational(c: Rational, r: usize) -> CycloElt {
        CycloElt::from_upoly(&UPoly::constant(c), r)
    }

    pub fn zero(r: usize) -> CycloElt {
        CycloElt { r, residue: UPoly::zero() }
    }

    pub fn one(r: usize) -> CycloElt {
        CycloElt::from_rational(Rational::one(), r)
    }

    /// zeta^e for any integer e.
    pub fn zeta_pow(e: i64, r: usize) -> CycloElt {
        let e = e.rem_euclid(r as i64) as usize;
        CycloElt::from_upoly(&UPoly::monomial(Rational::one(), e), r)
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn residue(&self) -> &UPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.residue.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            _ => None,
        }
    }

    pub fn add(&self, o: &CycloElt) -> CycloElt {
        assert_eq!(self.r, o.r);
        CycloElt { r: self.r, residue: self.residue.add_poly(&o.residue) }
    }

    pub fn sub(&self, o: &CycloElt) -> CycloElt {
        assert_eq!(self.r, o.r);
        CycloElt { r: self.r, residue: self.residue.sub_poly(&o.residue) }
    }

    pub fn mul(&self, o: &CycloElt) -> CycloElt {
        assert_eq!(self.r, o.r);
        CycloElt::from_upoly(&self.residue.mul_poly(&o.residue), self.r)
    }

    pub fn scale(&self, c: &Rational) -> CycloElt {
        CycloElt { r: self.r, residue: self.residue.scale(c) }
    }

    /// Inverse via extended Euclid against Phi_r.
    pub fn inverse(&self) -> Result<CycloElt> {
        if self.is_zero() {
            return Err(Error::Inexact("inverse of zero in cyclotomic field".into()));
        }
        let phi = cyclotomic(self.r);
        let (g, s, _) = UPoly::ext_gcd(&self.residue, &phi)?;
        if g != UPoly::one() {
            return Err(Error::Invariant(format!("{} not invertible modulo {phi}", self.residue)));
        }
        Ok(CycloElt::from_upoly(&s, self.r))
    }
}

impl fmt::Display for CycloElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.residue.to_string().replace('z', "ζ");
        write!(f, "{s}")
    }
}

impl fmt::Debug for CycloElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElt[r={}]({})", self.r, self)
    }
}

/// Multiplicity of Phi_r in `f` together with the value of `f / Phi_r^order` at a primitive root.
pub fn vanishing_order(f: &UPoly, r: usize) -> Result<(usize, CycloElt)> {
    if f.is_zero() {
        return Err(Error::ZeroOrder);
    }
    let phi = cyclotomic(r);
    let mut g = f.clone();
    let mut order = 0;
    loop {
        let (q, rem) = g.div_rem(&phi)?;
        if !rem.is_zero() {
            return Ok((order, CycloElt { r, residue: rem }));
        }
        g = q;
        order += 1;
    }
}

/// Exact limit of `num / den` as z tends to a primitive r-th root of unity.
pub fn limit_ratio_at_root(num: &UPoly, den: &UPoly, r: usize) -> Result<CycloElt> {
    let (od, ud) = vanishing_order(den, r)?;
    if num.is_zero() {
        return Ok(CycloElt::zero(r));
    }
    let (on, un) = vanishing_order(num, r)?;
    if on < od {
        return Err(Error::Pole { num: on, den: od });
    }
    if on > od {
        return Ok(CycloElt::zero(r));
    }
    Ok(un.mul(&ud.inverse()?))
}

/// Convenience: rational integer `n` in the field.
pub fn cyclo_int(n: i64, r: usize) -> CycloElt {
    CycloElt::from_rational(rat(n), r)
}
