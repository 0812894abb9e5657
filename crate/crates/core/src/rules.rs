//! Closed-form Pieri and Murnaghan-Nakayama rules for CSM and Schubert classes,
//! and the rigidity lifts from nonequivariant constants.

use std::collections::BTreeMap;

use crate::arith::MPoly;
use crate::bruhat::{enumerate_paths, sigma_delta, PathShape};
use crate::csm::oracle_product;
use crate::error::{Error, Result};
use crate::perm::{cycles_through, HookShape, Perm};
use crate::schubert::{double_schubert, hook_permutation, localize, molev_class, Basis, CohClass, MolevKind};
use crate::symfun::{complete_sym, complete_sym_neg, elem_sym, elem_sym_neg, power_sum, power_sum_of, schur_hook, schur_hook_of, VarSubset};

fn check_k(u: &Perm, k: usize) -> Result<()> {
    if k == 0 || k >= u.n() {
        return Err(Error::Domain(format!("k={k} outside 1..{}", u.n())));
    }
    Ok(())
}

fn t_vals(n: usize, set: &[usize]) -> Vec<MPoly> {
    set.iter().map(|&i| MPoly::t(n, i)).collect()
}

fn first(k: usize) -> Vec<usize> {
    (1..=k).collect()
}

/// c_SM(Y(u)°) * s_Gamma(x_1..x_k) via peakless paths in the extended k-Bruhat order.
pub fn pieri_hook_csm(u: &Perm, k: usize, hook: HookShape, equivariant: bool) -> Result<CohClass> {
    hook_rule(u, k, hook, equivariant, false)
}

/// [Y(u)] * s_Gamma(x_1..x_k) via peakless paths in the ordinary k-Bruhat order.
pub fn pieri_hook_schubert(u: &Perm, k: usize, hook: HookShape, equivariant: bool) -> Result<CohClass> {
    hook_rule(u, k, hook, equivariant, true)
}

fn hook_rule(u: &Perm, k: usize, hook: HookShape, equivariant: bool, cover_only: bool) -> Result<CohClass> {
    check_k(u, k)?;
    let n = u.n();
    let (alpha, beta) = (hook.alpha, hook.beta);
    let basis = if cover_only { Basis::Schubert } else { Basis::Csm };
    let mut out = CohClass::new(basis, equivariant, n);
    if !equivariant {
        let paths = enumerate_paths(u, k, PathShape::Peakless { alpha, beta }, cover_only);
        for (w, ps) in &paths {
            out.add(w, &MPoly::int(n, ps.len() as i64));
        }
        return Ok(out);
    }
    out.add(u, &schur_hook_of(n, alpha, beta, &t_vals(n, &u.image(&first(k)))));
    let paths = enumerate_paths(u, k, PathShape::PeaklessUpTo(alpha + beta + 1), cover_only);
    for (w, ps) in &paths {
        let sd = sigma_delta(u, w, &first(k));
        let (sig, del) = (VarSubset::t(sd.sigma), VarSubset::t(sd.delta));
        for p in ps.iter().filter(|p| p.in_count <= alpha && p.de_count <= beta) {
            let c = complete_sym(n, (alpha - p.in_count) as i64, &sig) * elem_sym(n, (beta - p.de_count) as i64, &del);
            out.add(w, &c);
        }
    }
    Ok(out)
}

/// c^T_SM(Y(u)°) * [Y(w_Gamma)]_T: diagonal [Y(w_Gamma)]_T|_u, off-diagonal terms over peakless
/// paths with the splittings alpha1 + alpha2 and beta1 + beta2.
pub fn pieri_schubertclass_csm(u: &Perm, k: usize, hook: HookShape) -> Result<CohClass> {
    check_k(u, k)?;
    let n = u.n();
    let (alpha, beta) = (hook.alpha, hook.beta);
    let w_gamma = hook_permutation(hook, k, n)?;
    let mut out = CohClass::new(Basis::Csm, true, n);
    out.add(u, &localize(&double_schubert(&w_gamma), u));
    let upper = VarSubset::t(1..=k + alpha);
    let lower = VarSubset::t(1..=k - beta);
    let paths = enumerate_paths(u, k, PathShape::PeaklessUpTo(alpha + beta + 1), false);
    for (w, ps) in &paths {
        let sd = sigma_delta(u, w, &first(k));
        let (sig, del) = (VarSubset::t(sd.sigma), VarSubset::t(sd.delta));
        for p in ps.iter().filter(|p| p.in_count <= alpha && p.de_count <= beta) {
            let (da, db) = (alpha - p.in_count, beta - p.de_count);
            for a1 in 0..=da {
                for b1 in 0..=db {
                    let c = complete_sym(n, a1 as i64, &sig)
                        * elem_sym(n, b1 as i64, &del)
                        * elem_sym_neg(n, (da - a1) as i64, &upper)
                        * complete_sym_neg(n, (db - b1) as i64, &lower);
                    out.add(w, &c);
                }
            }
        }
    }
    Ok(out)
}

/// A permutation sending 1..m onto the sorted `target`, the remaining positions onto the
/// complement in increasing order (or decreasing, when `reverse_rest`).
pub fn set_mover(n: usize, target: &[usize], reverse_rest: bool) -> Perm {
    let mut head: Vec<usize> = target.to_vec();
    head.sort_unstable();
    let mut rest: Vec<usize> = (1..=n).filter(|v| !head.contains(v)).collect();
    if reverse_rest {
        rest.reverse();
    }
    head.extend(rest);
    Perm::new(head).expect("target is a subset of [n]")
}

/// c^T_SM(Y(u)°) * [Y(c[k,r])]_T (column) or [Y(c'[k,r])]_T (row), with coefficients read off as
/// localizations of smaller one-column or one-row classes.
pub fn pieri_eh_localized(u: &Perm, k: usize, r: usize, kind: MolevKind) -> Result<CohClass> {
    eh_localized_with(u, k, r, kind, false)
}

pub fn eh_localized_with(u: &Perm, k: usize, r: usize, kind: MolevKind, reverse_rest: bool) -> Result<CohClass> {
    check_k(u, k)?;
    let n = u.n();
    let fits = match kind {
        MolevKind::Column => r <= k,
        MolevKind::Row => k + r <= n,
    };
    if !fits {
        return Err(Error::Domain(format!("{kind:?} class with k={k}, r={r} does not exist in S_{n}")));
    }
    let mut out = CohClass::new(Basis::Csm, true, n);
    let mut seen: BTreeMap<Perm, usize> = BTreeMap::new();
    for rp in 0..=r {
        let shape = match kind {
            MolevKind::Column => PathShape::Decreasing(rp),
            MolevKind::Row => PathShape::Increasing(rp),
        };
        for w in enumerate_paths(u, k, shape, false).keys() {
            if let Some(prev) = seen.insert(w.clone(), rp) {
                return Err(Error::Invariant(format!("{w} reached by monotone paths of lengths {prev} and {rp}")));
            }
            let sd = sigma_delta(u, w, &first(k));
            let c = if rp == r {
                MPoly::one(n)
            } else {
                let (class, target) = match kind {
                    MolevKind::Column => (molev_class(kind, k - rp, r - rp, n)?, sd.delta),
                    MolevKind::Row => (molev_class(kind, k + rp, r - rp, n)?, sd.sigma),
                };
                localize(&class, &set_mover(n, &target, reverse_rest))
            };
            out.add(w, &c);
        }
    }
    Ok(out)
}

/// Remark-style product formula for the column case:
/// sum over i_1 < ... < i_{r-r'} <= k-r' of prod (t_{delta_{i_j}} - t_{i_j-j+1}).
pub fn column_coefficient_explicit(n: usize, delta: &[usize], r_minus: usize) -> MPoly {
    let mut acc = MPoly::zero(n);
    crate::schubert::for_each_increasing(delta.len(), r_minus, true, &mut |idx| {
        let mut p = MPoly::one(n);
        for (j, &i) in idx.iter().enumerate() {
            p = p * (MPoly::t(n, delta[i - 1]) - MPoly::t(n, i - j));
        }
        acc += &p;
    });
    acc
}

/// c_SM(Y(u)°) * p_r(x_1..x_k) over cycles eta with u <=_k u*eta.
pub fn mn_csm(u: &Perm, k: usize, r: usize, equivariant: bool) -> Result<CohClass> {
    mn_rule(u, k, r, equivariant, false)
}

/// [Y(u)] * p_r(x_1..x_k), keeping only cycles with l(u*eta) = l(u) + r'.
pub fn mn_schubert(u: &Perm, k: usize, r: usize, equivariant: bool) -> Result<CohClass> {
    mn_rule(u, k, r, equivariant, true)
}

fn mn_rule(u: &Perm, k: usize, r: usize, equivariant: bool, schubert: bool) -> Result<CohClass> {
    check_k(u, k)?;
    if r == 0 {
        return Err(Error::Domain("power sum degree must be at least 1".into()));
    }
    let n = u.n();
    let basis = if schubert { Basis::Schubert } else { Basis::Csm };
    let mut out = CohClass::new(basis, equivariant, n);
    if equivariant {
        out.add(u, &power_sum_of(n, r as u32, &t_vals(n, &u.image(&first(k)))));
    }
    for eta in cycles_through(u, k, r) {
        let moved = eta.nonfixed_set();
        let rp = moved.len() - 1;
        if !equivariant && rp != r {
            continue;
        }
        let w = u.mul(&eta);
        if schubert && w.length() != u.length() + rp {
            continue;
        }
        let sign = if eta.k_height(k) % 2 == 0 { 1 } else { -1 };
        let h = complete_sym(n, (r - rp) as i64, &VarSubset::t(u.image(&moved)));
        out.add(&w, &h.scale_int(sign));
    }
    Ok(out)
}

/// Nonequivariant MN constants as signed counts of unimodal paths of length r, sign (-1)^de.
pub fn mn_signed_paths(u: &Perm, k: usize, r: usize) -> Result<CohClass> {
    check_k(u, k)?;
    let n = u.n();
    let mut out = CohClass::new(Basis::Csm, false, n);
    for (w, ps) in enumerate_paths(u, k, PathShape::SignedUnimodal(r), false) {
        let s: i64 = ps.iter().map(|p| if p.de_count % 2 == 0 { 1 } else { -1 }).sum();
        out.add(&w, &MPoly::int(n, s));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    Hook(HookShape),
    PowerSum(usize),
}

/// Nonequivariant CSM constants for s_Gamma(x_A) or p_r(x_A): path rules when A = [k],
/// raw expansion otherwise.
fn noneq_constants(kind: LiftKind, u: &Perm, a: &[usize]) -> Result<CohClass> {
    let n = u.n();
    let k = a.len();
    if k > 0 && k < n && a == first(k).as_slice() {
        return match kind {
            LiftKind::Hook(h) => pieri_hook_csm(u, k, h, false),
            LiftKind::PowerSum(r) => mn_csm(u, k, r, false),
        };
    }
    let xa = VarSubset::x(a.iter().copied());
    let g = match kind {
        LiftKind::Hook(h) => schur_hook(n, h.alpha, h.beta, &xa),
        LiftKind::PowerSum(r) => power_sum(n, r as u32, &xa),
    };
    oracle_product(u, &g, Basis::Csm, false)
}

/// Equivariant CSM constants for s_Gamma(x_A) or p_r(x_A) assembled from nonequivariant ones.
pub fn rigidity_lift(kind: LiftKind, u: &Perm, a: &[usize]) -> Result<CohClass> {
    let n = u.n();
    let mut a: Vec<usize> = a.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::Domain(format!("subset {a:?} not inside [{n}]")));
    }
    let ua = t_vals(n, &u.image(&a));
    let mut out = CohClass::new(Basis::Csm, true, n);
    match kind {
        LiftKind::Hook(h) => {
            out.add(u, &schur_hook_of(n, h.alpha, h.beta, &ua));
            for a1 in 0..=h.alpha {
                for b1 in 0..=h.beta {
                    let lower = noneq_constants(LiftKind::Hook(HookShape::new(a1, b1)), u, &a)?;
                    for (w, c) in lower.terms() {
                        if w == u {
                            continue;
                        }
                        let sd = sigma_delta(u, w, &a);
                        let f = complete_sym(n, (h.alpha - a1) as i64, &VarSubset::t(sd.sigma))
                            * elem_sym(n, (h.beta - b1) as i64, &VarSubset::t(sd.delta));
                        out.add(w, &(c * f));
                    }
                }
            }
        }
        LiftKind::PowerSum(r) => {
            if r == 0 {
                return Err(Error::Domain("power sum degree must be at least 1".into()));
            }
            out.add(u, &power_sum_of(n, r as u32, &ua));
            for rp in 1..=r {
                let lower = noneq_constants(LiftKind::PowerSum(rp), u, &a)?;
                for (w, c) in lower.terms() {
                    if w == u {
                        continue;
                    }
                    let moved: Vec<usize> = (1..=n).filter(|&i| u.at(i) != w.at(i)).map(|i| u.at(i)).collect();
                    out.add(w, &(c * complete_sym(n, (r - rp) as i64, &VarSubset::t(moved))));
                }
            }
        }
    }
    Ok(out)
}
