//! Sparse multivariate polynomials over exact rationals.
//!
//! The variable universe for a given rank `n` is `x1..xn, t1..tn, q, z`,
//! stored at slots `0..n`, `n..2n`, `2n`, `2n+1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::rational::QExt;
use rustc_hash::FxHashMap;

use super::rational::{parse_rational, rat, Rational};
use crate::error::{Error, Result};

/// Largest supported number of variable slots; rank `n` may go up to 11.
pub const MAX_VARS: usize = 24;
pub const MAX_RANK: usize = (MAX_VARS - 2) / 2;

/// Exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub [u8; MAX_VARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAX_VARS]);

    pub fn var(i: usize) -> Mono {
        let mut m = Mono::ONE;
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        r
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

/// Named variable of the rank-`n` universe (indices are 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X(usize),
    T(usize),
    Q,
    Z,
}

impl Var {
    pub fn slot(self, n: usize) -> usize {
        match self {
            Var::X(i) => {
                assert!(i >= 1 && i <= n, "x{i} outside rank {n}");
                i - 1
            }
            Var::T(i) => {
                assert!(i >= 1 && i <= n, "t{i} outside rank {n}");
                n + i - 1
            }
            Var::Q => 2 * n,
            Var::Z => 2 * n + 1,
        }
    }

    pub fn from_slot(slot: usize, n: usize) -> Var {
        if slot < n {
            Var::X(slot + 1)
        } else if slot < 2 * n {
            Var::T(slot - n + 1)
        } else if slot == 2 * n {
            Var::Q
        } else {
            Var::Z
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::T(i) => write!(f, "t{i}"),
            Var::Q => write!(f, "q"),
            Var::Z => write!(f, "z"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial; terms are kept sorted by exponent vector with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    n: usize,
    terms: Vec<(Mono, Rational)>,
}

impl MPoly {
    pub fn zero(n: usize) -> MPoly {
        assert!(n <= MAX_RANK, "rank {n} exceeds supported maximum {MAX_RANK}");
        MPoly { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: Rational) -> MPoly {
        let mut p = MPoly::zero(n);
        if !c.is_zero() {
            p.terms.push((Mono::ONE, c));
        }
        p
    }

    pub fn int(n: usize, c: i64) -> MPoly {
        MPoly::constant(n, rat(c))
    }

    pub fn one(n: usize) -> MPoly {
        MPoly::int(n, 1)
    }

    pub fn var(n: usize, v: Var) -> MPoly {
        let mut p = MPoly::zero(n);
        p.terms.push((Mono::var(v.slot(n)), Rational::one()));
        p
    }

    pub fn x(n: usize, i: usize) -> MPoly {
        MPoly::var(n, Var::X(i))
    }

    pub fn t(n: usize, i: usize) -> MPoly {
        MPoly::var(n, Var::T(i))
    }

    pub fn monomial(n: usize, m: Mono, c: Rational) -> MPoly {
        let mut p = MPoly::zero(n);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Rational)>>(n: usize, it: I) -> MPoly {
        let mut acc: FxHashMap<Mono, Rational> = FxHashMap::default();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(e) => *e += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        MPoly::from_map(n, acc)
    }

    fn from_map(n: usize, acc: FxHashMap<Mono, Rational>) -> MPoly {
        let mut terms: Vec<(Mono, Rational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly { n, terms }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n + 2
    }

    pub fn terms(&self) -> &[(Mono, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coeff(&self, m: &Mono) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// Homogeneous component of total degree `d`.
    pub fn component(&self, d: u32) -> MPoly {
        MPoly {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
        }
    }

    /// Lowest-degree homogeneous component.
    pub fn lowest_component(&self) -> MPoly {
        match self.min_degree() {
            Some(d) => self.component(d),
            None => self.clone(),
        }
    }

    /// Whether only variables in the given slots occur.
    pub fn only_slots(&self, allowed: impl Fn(usize) -> bool) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.0.iter().enumerate().all(|(i, &e)| e == 0 || allowed(i)))
    }

    /// True when no x, q or z variable occurs.
    pub fn is_t_only(&self) -> bool {
        let n = self.n;
        self.only_slots(|i| i >= n && i < 2 * n)
    }

    pub fn x_free(&self) -> bool {
        let n = self.n;
        self.only_slots(|i| i >= n)
    }

    fn check_rank(&self, o: &MPoly) {
        assert_eq!(self.n, o.n, "polynomials from different universes");
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.n);
        }
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MPoly {
        self.scale(&rat(c))
    }

    fn merge(&self, o: &MPoly, negate: bool) -> MPoly {
        self.check_rank(o);
        let mut terms = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    terms.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        terms.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MPoly { n: self.n, terms }
    }

    pub fn add_poly(&self, o: &MPoly) -> MPoly {
        self.merge(o, false)
    }

    pub fn sub_poly(&self, o: &MPoly) -> MPoly {
        self.merge(o, true)
    }

    pub fn mul_poly(&self, o: &MPoly) -> MPoly {
        self.check_rank(o);
        if self.is_zero() || o.is_zero() {
            return MPoly::zero(self.n);
        }
        if o.terms.len() == 1 && o.terms[0].0.is_one() {
            return self.scale(&o.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            return o.scale(&self.terms[0].1);
        }
        let mut acc: FxHashMap<Mono, Rational> = FxHashMap::default();
        acc.reserve(self.terms.len() * o.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MPoly::from_map(self.n, acc)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut r = MPoly::one(self.n);
        for _ in 0..e {
            r = r.mul_poly(self);
        }
        r
    }

    /// Fallible arithmetic entry point: mismatched universes are a usage error.
    pub fn arith(a: &MPoly, b: &MPoly, op: ArithOp) -> Result<MPoly> {
        if a.n != b.n {
            return Err(Error::Usage(format!(
                "mismatched variable universes: {} vs {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(match op {
            ArithOp::Add => a.add_poly(b),
            ArithOp::Sub => a.sub_poly(b),
            ArithOp::Mul => a.mul_poly(b),
        })
    }

    /// Ring homomorphism sending slot `i` to `assign[i]` (or to itself when `None`).
    pub fn substitute(&self, assign: &[Option<MPoly>]) -> MPoly {
        let n = self.n;
        let nv = self.nvars();
        assert!(assign.len() <= nv, "assignment longer than variable universe");
        let mut powers: Vec<Vec<MPoly>> = vec![Vec::new(); nv];
        let mut acc = MPoly::zero(n);
        let mut pending: Vec<(Mono, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            let mut keep = Mono::ONE;
            let mut factor: Option<MPoly> = None;
            for i in 0..nv {
                let e = m.0[i] as usize;
                if e == 0 {
                    continue;
                }
                match assign.get(i).and_then(|a| a.as_ref()) {
                    None => keep.0[i] = e as u8,
                    Some(img) => {
                        assert_eq!(img.n, n, "substitution image from another universe");
                        let pw = &mut powers[i];
                        if pw.is_empty() {
                            pw.push(MPoly::one(n));
                        }
                        while pw.len() <= e {
                            let next = pw.last().unwrap().mul_poly(img);
                            pw.push(next);
                        }
                        factor = Some(match factor {
                            None => pw[e].clone(),
                            Some(f) => f.mul_poly(&pw[e]),
                        });
                    }
                }
            }
            match factor {
                None => pending.push((keep, c.clone())),
                Some(f) => {
                    let shifted =
                        MPoly::from_terms(n, f.terms.iter().map(|(fm, fc)| (fm.mul(&keep), fc * c)));
                    acc = acc.add_poly(&shifted);
                }
            }
        }
        acc.add_poly(&MPoly::from_terms(n, pending))
    }

    /// Monomial substitution: slot `i` goes to slot `map[i]` (exponents add when slots merge).
    pub fn rename_slots(&self, map: &[usize]) -> MPoly {
        let nv = self.nvars();
        MPoly::from_terms(
            self.n,
            self.terms.iter().map(|(m, c)| {
                let mut r = Mono::ONE;
                for i in 0..nv {
                    if m.0[i] > 0 {
                        let j = map[i];
                        r.0[j] = r.0[j].checked_add(m.0[i]).expect("exponent overflow");
                    }
                }
                (r, c.clone())
            }),
        )
    }

    /// Exchanges two variable slots.
    pub fn swap_slots(&self, a: usize, b: usize) -> MPoly {
        let mut terms: Vec<(Mono, Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut r = *m;
                r.0.swap(a, b);
                (r, c.clone())
            })
            .collect();
        terms.sort_unstable_by(|p, q| p.0.cmp(&q.0));
        MPoly { n: self.n, terms }
    }

    /// Sets every slot accepted by `kill` to zero.
    pub fn kill_slots(&self, kill: impl Fn(usize) -> bool) -> MPoly {
        let nv = self.nvars();
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (0..nv).all(|i| m.0[i] == 0 || !kill(i)))
                .cloned()
                .collect(),
        }
    }

    /// Specialization t = 0.
    pub fn t_to_zero(&self) -> MPoly {
        let n = self.n;
        self.kill_slots(|i| i >= n && i < 2 * n)
    }

    /// Specialization x = 0.
    pub fn x_to_zero(&self) -> MPoly {
        let n = self.n;
        self.kill_slots(|i| i < n)
    }

    /// The divided difference (f - f|_{a<->b}) / (v_a - v_b) on two slots, computed termwise.
    pub fn divided_difference(&self, a: usize, b: usize) -> MPoly {
        assert_ne!(a, b);
        let mut acc: FxHashMap<Mono, Rational> = FxHashMap::default();
        for (m, c) in &self.terms {
            let (ea, eb) = (m.0[a], m.0[b]);
            if ea == eb {
                continue;
            }
            let (lo, hi, neg) = if ea > eb { (eb, ea, false) } else { (ea, eb, true) };
            let mut base = *m;
            base.0[a] = lo;
            base.0[b] = lo;
            let span = hi - lo;
            for j in 0..span {
                let mut r = base;
                r.0[a] += j;
                r.0[b] += span - 1 - j;
                let v = if neg { -c.clone() } else { c.clone() };
                match acc.get_mut(&r) {
                    Some(e) => *e += v,
                    None => {
                        acc.insert(r, v);
                    }
                }
            }
        }
        MPoly::from_map(self.n, acc)
    }

    /// Exact quotient by a form `c0 + c1*v1 + c2*v2` of degree at most one in at most two variables.
    /// Exact quotient by (v_a - v_b) for variable slots a != b, computed termwise from
    /// y^e = (y - z) * sum_{i<e} y^i z^(e-1-i) + z^e.
    pub fn divide_by_difference(&self, a: usize, b: usize) -> Result<MPoly> {
        assert_ne!(a, b);
        let mut quot: FxHashMap<Mono, Rational> = FxHashMap::default();
        let mut rem: FxHashMap<Mono, Rational> = FxHashMap::default();
        for (m, c) in &self.terms {
            let e = m.0[a];
            let mut base = *m;
            base.0[a] = 0;
            let mut r = base;
            r.0[b] += e;
            *rem.entry(r).or_insert_with(Rational::zero) += c;
            for i in 0..e {
                let mut q = base;
                q.0[a] = i;
                q.0[b] += e - 1 - i;
                *quot.entry(q).or_insert_with(Rational::zero) += c;
            }
        }
        if rem.values().any(|c| !c.is_zero()) {
            let form = MPoly::monomial(self.n, Mono::var(a), rat(1)) - MPoly::monomial(self.n, Mono::var(b), rat(1));
            return Err(Error::Inexact(format!("{self} is not divisible by {form}")));
        }
        Ok(MPoly::from_map(self.n, quot))
    }

    pub fn divide_exact_linear(&self, form: &MPoly) -> Result<MPoly> {
        self.check_rank(form);
        let n = self.n;
        let mut c0 = Rational::zero();
        let mut lin: Vec<(usize, Rational)> = Vec::new();
        for (m, c) in &form.terms {
            match m.degree() {
                0 => c0 = c.clone(),
                1 => lin.push((m.0.iter().position(|&e| e == 1).unwrap(), c.clone())),
                _ => return Err(Error::Usage(format!("divisor {form} is not linear"))),
            }
        }
        if lin.len() > 2 {
            return Err(Error::Usage(format!("divisor {form} has more than two variables")));
        }
        if lin.is_empty() {
            if c0.is_zero() {
                return Err(Error::Inexact("division by zero".into()));
            }
            return Ok(self.scale(&c0.recip()));
        }
        if c0.is_zero() && lin.len() == 2 && lin[0].1 == -&lin[1].1 {
            let q = self.divide_by_difference(lin[0].0, lin[1].0)?;
            return Ok(if lin[0].1.is_one() { q } else { q.scale(&lin[0].1.recip()) });
        }
        let (v, c1) = lin[0].clone();
        let rest = form.sub_poly(&MPoly::monomial(n, Mono::var(v), c1.clone()));
        let inv = c1.recip();
        // Group by exponent of v.
        let mut buckets: Vec<Vec<(Mono, Rational)>> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            if buckets.len() <= e {
                buckets.resize(e + 1, Vec::new());
            }
            let mut r = *m;
            r.0[v] = 0;
            buckets[e].push((r, c.clone()));
        }
        if buckets.is_empty() {
            return Ok(MPoly::zero(n));
        }
        let parts: Vec<MPoly> = buckets.into_iter().map(|b| MPoly::from_terms(n, b)).collect();
        let d = parts.len() - 1;
        if d == 0 {
            return Err(Error::Inexact(format!("{self} is not divisible by {form}")));
        }
        let mut q: Vec<MPoly> = vec![MPoly::zero(n); d];
        q[d - 1] = parts[d].scale(&inv);
        for j in (1..d).rev() {
            q[j - 1] = parts[j].sub_poly(&rest.mul_poly(&q[j])).scale(&inv);
        }
        if parts[0] != rest.mul_poly(&q[0]) {
            return Err(Error::Inexact(format!("{self} is not divisible by {form}")));
        }
        let mut out = Vec::new();
        for (j, qj) in q.into_iter().enumerate() {
            for (m, c) in qj.terms {
                let mut r = m;
                r.0[v] += j as u8;
                out.push((r, c));
            }
        }
        Ok(MPoly::from_terms(n, out))
    }

    /// Terms in canonical print order: higher total degree first, then
    /// lexicographically larger exponents on earlier variables first.
    pub fn canonical_terms(&self) -> Vec<&(Mono, Rational)> {
        let mut v: Vec<&(Mono, Rational)> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(&a.0)));
        v
    }

    fn mono_string(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate().take(self.nvars()) {
            if e == 0 {
                continue;
            }
            let v = Var::from_slot(i, self.n);
            if e == 1 {
                parts.push(v.to_string());
            } else {
                parts.push(format!("{v}^{e}"));
            }
        }
        parts.join("*")
    }

    /// Parses the canonical string format (e.g. `t2^2 + t2*t3 - 3/2*x1`).
    pub fn parse(n: usize, s: &str) -> Result<MPoly> {
        let bad = |why: &str| Error::Usage(format!("cannot parse polynomial {s:?}: {why}"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms: Vec<(Mono, Rational)> = Vec::new();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in s.chars() {
            if ch == '+' || ch == '-' {
                if !cur.trim().is_empty() {
                    chunks.push((neg, cur.trim().to_string()));
                } else if !chunks.is_empty() {
                    return Err(bad("dangling sign"));
                }
                cur.clear();
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.trim().is_empty() {
            return Err(bad("dangling sign"));
        }
        chunks.push((neg, cur.trim().to_string()));
        for (neg, chunk) in chunks {
            let mut coef = Rational::one();
            let mut mono = Mono::ONE;
            for f in chunk.split('*') {
                let f = f.trim();
                if f.is_empty() {
                    return Err(bad("empty factor"));
                }
                if f.chars().next().unwrap().is_ascii_digit() {
                    coef *= parse_rational(f).ok_or_else(|| bad("bad coefficient"))?;
                    continue;
                }
                let (name, exp) = match f.split_once('^') {
                    Some((a, b)) => (a, b.parse::<u8>().map_err(|_| bad("bad exponent"))?),
                    None => (f, 1),
                };
                let var = match name.chars().next().unwrap() {
                    'q' if name.len() == 1 => Var::Q,
                    'z' if name.len() == 1 => Var::Z,
                    c @ ('x' | 't') => {
                        let i: usize = name[1..].parse().map_err(|_| bad("bad index"))?;
                        if i == 0 || i > n {
                            return Err(bad("variable index outside rank"));
                        }
                        if c == 'x' {
                            Var::X(i)
                        } else {
                            Var::T(i)
                        }
                    }
                    _ => return Err(bad("unknown variable")),
                };
                let slot = var.slot(n);
                mono.0[slot] += exp;
            }
            if neg {
                coef = -coef;
            }
            terms.push((mono, coef));
        }
        Ok(MPoly::from_terms(n, terms))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.canonical_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.magnitude();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", self.mono_string(m))?;
            } else {
                write!(f, "{a}*{}", self.mono_string(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[n={}]({})", self.n, self)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $impl:ident) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                self.$impl(o)
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                self.$impl(&o)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                self.$impl(o)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                self.$impl(&o)
            }
        }
    };
}

binop!(Add, add, add_poly);
binop!(Sub, sub, sub_poly);
binop!(Mul, mul, mul_poly);

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, o: &MPoly) {
        *self = self.add_poly(o);
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, o: &MPoly) {
        *self = self.sub_poly(o);
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            n: self.n,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        MPoly::parse(3, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p("x1 + t1");
        let b = p("x1 - t1");
        assert_eq!((&a * &b).to_string(), "x1^2 - t1^2");
    }

    #[test]
    fn additive_identity() {
        let a = p("x1*t2 - 3");
        assert_eq!(&a + &MPoly::zero(3), a);
    }

    #[test]
    fn product_of_three_forms_has_eight_terms() {
        let f = p("1 + t1 - t2") * p("1 + t1 - t3") * p("1 + t2 - t3");
        let expected = p(
            "1 + 2*t1 - 2*t3 + t1^2 + t1*t2 - 3*t1*t3 - t2^2 + t2*t3 + t3^2 \
             + t1^2*t2 - t1^2*t3 - t1*t2^2 + t1*t3^2 + t2^2*t3 - t2*t3^2",
        );
        assert_eq!(f, expected);
        assert_eq!(f.len(), 15);
    }

    #[test]
    fn print_order_is_graded_then_lex() {
        let f = MPoly::parse(5, "t3*t5 + t3^2 + t2*t3").unwrap();
        assert_eq!(f.to_string(), "t2*t3 + t3^2 + t3*t5");
        let g = MPoly::parse(2, "1 - x2 + t1").unwrap();
        assert_eq!(g.to_string(), "-x2 + t1 + 1");
        assert_eq!(MPoly::parse(2, "3/2*x1^2*t2").unwrap().to_string(), "3/2*x1^2*t2");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-1", "x1^3*t2 - 2*q*z + 5/7", "-t1 - t2"] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f);
        }
        assert!(MPoly::parse(2, "x3").is_err());
        assert!(MPoly::parse(2, "x1 +").is_err());
    }

    #[test]
    fn substitute_localization() {
        let n = 2;
        let f = MPoly::parse(n, "x1 - t1").unwrap();
        let mut assign = vec![None; 2 * n + 2];
        assign[0] = Some(MPoly::t(n, 2));
        assign[1] = Some(MPoly::t(n, 1));
        assert_eq!(f.substitute(&assign).to_string(), "-t1 + t2");
    }

    #[test]
    fn substitute_w0_point_class_n3() {
        let n = 3;
        let f = MPoly::parse(n, "x1 - t1").unwrap()
            * MPoly::parse(n, "x1 - t2").unwrap()
            * MPoly::parse(n, "x2 - t1").unwrap();
        let mut assign = vec![None; 2 * n + 2];
        for i in 1..=3 {
            assign[i - 1] = Some(MPoly::t(n, 4 - i));
        }
        let expected = MPoly::parse(n, "t3 - t1").unwrap()
            * MPoly::parse(n, "t3 - t2").unwrap()
            * MPoly::parse(n, "t2 - t1").unwrap();
        assert_eq!(f.substitute(&assign), expected);
    }

    #[test]
    fn divide_linear_examples() {
        let f = p("t1^2 - t2^2");
        assert_eq!(f.divide_exact_linear(&p("t1 - t2")).unwrap(), p("t1 + t2"));
        let g = p("1 + t1 - t2") * p("t3");
        assert_eq!(g.divide_exact_linear(&p("1 + t1 - t2")).unwrap(), p("t3"));
        assert!(p("t1 + 1").divide_exact_linear(&p("t1 - t2")).is_err());
        assert!(p("t3").divide_exact_linear(&p("1 + t1 - t2")).is_err());
        assert!(p("t3").divide_exact_linear(&p("t1*t2")).is_err());
    }

    #[test]
    fn divided_difference_basics() {
        assert_eq!(p("x1").divided_difference(0, 1), p("1"));
        assert!(p("x1*x2").divided_difference(0, 1).is_zero());
        assert_eq!(p("x1^3").divided_difference(0, 1), p("x1^2 + x1*x2 + x2^2"));
        assert_eq!(p("x2^2*t1").divided_difference(0, 1), p("-x1*t1 - x2*t1"));
    }

    #[test]
    fn mismatched_universe_is_usage_error() {
        let a = MPoly::x(2, 1);
        let b = MPoly::x(3, 1);
        assert!(matches!(MPoly::arith(&a, &b, ArithOp::Add), Err(Error::Usage(_))));
    }
}
