//! Symmetric polynomials on variable subsets and the truncated Q/Z/E series.

use crate::arith::rational::QExt;

use crate::arith::{MPoly, Mono, Rational, Var};
use crate::perm::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    X,
    T,
}

/// A set of x- or t-variables, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSubset {
    pub kind: VarKind,
    indices: Vec<usize>,
}

impl VarSubset {
    pub fn new(kind: VarKind, indices: impl IntoIterator<Item = usize>) -> VarSubset {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VarSubset { kind, indices: v }
    }

    pub fn x(indices: impl IntoIterator<Item = usize>) -> VarSubset {
        VarSubset::new(VarKind::X, indices)
    }

    pub fn t(indices: impl IntoIterator<Item = usize>) -> VarSubset {
        VarSubset::new(VarKind::T, indices)
    }

    /// x_1..x_k.
    pub fn x_first(k: usize) -> VarSubset {
        VarSubset::x(1..=k)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn var(&self, n: usize, i: usize) -> MPoly {
        match self.kind {
            VarKind::X => MPoly::var(n, Var::X(i)),
            VarKind::T => MPoly::var(n, Var::T(i)),
        }
    }

    fn vars(&self, n: usize) -> Vec<MPoly> {
        self.indices.iter().map(|&i| self.var(n, i)).collect()
    }
}

/// e_0..e_max of the given polynomials.
fn elem_table(n: usize, vals: &[MPoly], max: usize) -> Vec<MPoly> {
    let mut e = vec![MPoly::zero(n); max + 1];
    e[0] = MPoly::one(n);
    for v in vals {
        for j in (1..=max).rev() {
            let add = &e[j - 1] * v;
            e[j] += &add;
        }
    }
    e
}

/// h_0..h_max of the given polynomials.
fn complete_table(n: usize, vals: &[MPoly], max: usize) -> Vec<MPoly> {
    let mut h = vec![MPoly::zero(n); max + 1];
    h[0] = MPoly::one(n);
    for v in vals {
        for j in 1..=max {
            let add = &h[j - 1] * v;
            h[j] += &add;
        }
    }
    h
}

/// e_r evaluated at arbitrary polynomial arguments.
pub fn elem_sym_of(n: usize, r: i64, vals: &[MPoly]) -> MPoly {
    if r < 0 || r as usize > vals.len() {
        return MPoly::zero(n);
    }
    elem_table(n, vals, r as usize).pop().unwrap()
}

/// h_r evaluated at arbitrary polynomial arguments.
pub fn complete_sym_of(n: usize, r: i64, vals: &[MPoly]) -> MPoly {
    if r < 0 {
        return MPoly::zero(n);
    }
    if r > 0 && vals.is_empty() {
        return MPoly::zero(n);
    }
    complete_table(n, vals, r as usize).pop().unwrap()
}

pub fn elem_sym(n: usize, r: i64, vars: &VarSubset) -> MPoly {
    elem_sym_of(n, r, &vars.vars(n))
}

pub fn complete_sym(n: usize, r: i64, vars: &VarSubset) -> MPoly {
    complete_sym_of(n, r, &vars.vars(n))
}

/// e_r(-v) = (-1)^r e_r(v).
pub fn elem_sym_neg(n: usize, r: i64, vars: &VarSubset) -> MPoly {
    signed(elem_sym(n, r, vars), r)
}

/// h_r(-v) = (-1)^r h_r(v).
pub fn complete_sym_neg(n: usize, r: i64, vars: &VarSubset) -> MPoly {
    signed(complete_sym(n, r, vars), r)
}

fn signed(p: MPoly, r: i64) -> MPoly {
    if r.rem_euclid(2) == 1 {
        -p
    } else {
        p
    }
}

pub fn power_sum(n: usize, r: u32, vars: &VarSubset) -> MPoly {
    power_sum_of(n, r, &vars.vars(n))
}

pub fn power_sum_of(n: usize, r: u32, vals: &[MPoly]) -> MPoly {
    vals.iter().fold(MPoly::zero(n), |acc, v| acc + v.pow(r))
}

/// s_(1+alpha, 1^beta) = sum_j (-1)^j h_{alpha+1+j} e_{beta-j}.
pub fn schur_hook_of(n: usize, alpha: usize, beta: usize, vals: &[MPoly]) -> MPoly {
    if beta + 1 > vals.len() {
        return MPoly::zero(n);
    }
    let h = complete_table(n, vals, alpha + beta + 1);
    let e = elem_table(n, vals, beta);
    let mut acc = MPoly::zero(n);
    for j in 0..=beta {
        let term = &h[alpha + 1 + j] * &e[beta - j];
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

pub fn schur_hook(n: usize, alpha: usize, beta: usize, vars: &VarSubset) -> MPoly {
    schur_hook_of(n, alpha, beta, &vars.vars(n))
}

/// Visits every semistandard filling of `lambda` with entries in 1..=max as rows of entries.
pub fn for_each_ssyt(lambda: &Partition, max: usize, mut f: impl FnMut(&[Vec<usize>])) {
    let shape = lambda.parts().to_vec();
    let mut t: Vec<Vec<usize>> = shape.iter().map(|&p| vec![0; p]).collect();
    let cells = lambda.cells();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        t: &mut Vec<Vec<usize>>,
        max: usize,
        f: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if idx == cells.len() {
            f(t);
            return;
        }
        let (i, j) = (cells[idx].0 - 1, cells[idx].1 - 1);
        let lo_row = if j > 0 { t[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=max {
            t[i][j] = v;
            rec(idx + 1, cells, t, max, f);
        }
        t[i][j] = 0;
    }
    if lambda.len() > max {
        return;
    }
    rec(0, &cells, &mut t, max, &mut f);
}

/// Schur polynomial by summing tableau monomials.
pub fn schur_general(n: usize, lambda: &Partition, vars: &VarSubset) -> MPoly {
    let vals = vars.vars(n);
    let mut terms: Vec<(Mono, Rational)> = Vec::new();
    for_each_ssyt(lambda, vals.len(), |t| {
        let mut m = Mono::ONE;
        for row in t {
            for &v in row {
                let p = &vals[v - 1];
                m = m.mul(&p.terms()[0].0);
            }
        }
        terms.push((m, Rational::one()));
    });
    MPoly::from_terms(n, terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Q,
    ZInv,
    E,
}

/// Drops every term whose combined q,z degree exceeds `trunc`.
pub fn truncate_qz(p: &MPoly, trunc: u32) -> MPoly {
    let n = p.rank();
    let (sq, sz) = (Var::Q.slot(n), Var::Z.slot(n));
    MPoly::from_terms(
        n,
        p.terms().iter().filter(|(m, _)| (m.0[sq] as u32 + m.0[sz] as u32) <= trunc).cloned(),
    )
}

/// Q = prod(1 + q x_a), 1/Z = sum z^r h_r, E = sum z^alpha q^beta s_(1+alpha,1^beta); all truncated.
pub fn qz_series(n: usize, kind: SeriesKind, vars: &VarSubset, trunc: u32) -> MPoly {
    let q = MPoly::var(n, Var::Q);
    let z = MPoly::var(n, Var::Z);
    match kind {
        SeriesKind::Q => {
            let mut acc = MPoly::zero(n);
            for r in 0..=trunc {
                acc += &(q.pow(r) * elem_sym(n, r as i64, vars));
            }
            acc
        }
        SeriesKind::ZInv => {
            let mut acc = MPoly::zero(n);
            for r in 0..=trunc {
                acc += &(z.pow(r) * complete_sym(n, r as i64, vars));
            }
            acc
        }
        SeriesKind::E => {
            let mut acc = MPoly::zero(n);
            for s in 0..=trunc {
                for beta in 0..=s {
                    let alpha = s - beta;
                    let c = schur_hook(n, alpha as usize, beta as usize, vars);
                    acc += &(z.pow(alpha) * q.pow(beta) * c);
                }
            }
            acc
        }
    }
}
