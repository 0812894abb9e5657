//! Demazure-Lusztig operators, CSM class representatives and CSM-basis expansion.

use std::sync::{Arc, Mutex, OnceLock, RwLock};

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::arith::MPoly;
use crate::error::{Error, Result};
use crate::perm::{Perm, SymGroup};
use crate::schubert::{ascent_chain, demazure_i, double_schubert, expand_in_schubert, localize, point_class, Basis, CohClass};

/// T_i = -s_i + d_i.
pub fn dl_operator(f: &MPoly, i: usize) -> MPoly {
    demazure_i(f, i) - f.swap_slots(i - 1, i)
}

fn csm_cache() -> &'static RwLock<FxHashMap<Perm, MPoly>> {
    static C: OnceLock<RwLock<FxHashMap<Perm, MPoly>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Representative of the equivariant CSM class of the cell Y(w)°.
pub fn csm_class(w: &Perm) -> MPoly {
    if let Some(p) = csm_cache().read().unwrap().get(w) {
        return p.clone();
    }
    let p = match (1..w.n()).find(|&i| w.at(i) < w.at(i + 1)) {
        None => point_class(w.n()),
        Some(i) => dl_operator(&csm_class(&w.times_simple(i)), i),
    };
    csm_cache().write().unwrap().insert(w.clone(), p.clone());
    p
}

/// Uncached representative built along the leftmost or rightmost ascent chain.
pub fn csm_class_along(w: &Perm, rightmost: bool) -> MPoly {
    ascent_chain(w, rightmost).iter().rev().fold(point_class(w.n()), |p, &i| dl_operator(&p, i))
}

/// Nonequivariant representative.
pub fn csm_class_noneq(w: &Perm) -> MPoly {
    csm_class(w).t_to_zero()
}

/// prod_{i<j} (1 + t_i - t_j) as its list of factors.
pub fn identity_factors(n: usize) -> Vec<MPoly> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            v.push(MPoly::one(n) + MPoly::t(n, i) - MPoly::t(n, j));
        }
    }
    v
}

/// One step of T_i on a vector of fixed-point localizations:
/// (T_i F)|_v = -F|_{v s_i} + (F|_v - F|_{v s_i}) / (t_{v(i)} - t_{v(i+1)}).
fn dl_localized(group: &SymGroup, f: &[MPoly], i: usize) -> Result<Vec<MPoly>> {
    let n = group.n;
    // v and v s_i share the quotient, so each pair is divided once.
    let quotients: Vec<(usize, MPoly)> = (0..group.perms.len())
        .into_par_iter()
        .filter(|&vi| vi < group.right_simple[vi][i - 1])
        .map(|vi| {
            let v = &group.perms[vi];
            let vs = group.right_simple[vi][i - 1];
            let (a, b) = (MPoly::t(n, v.at(i)), MPoly::t(n, v.at(i + 1)));
            Ok((vi, (&f[vi] - &f[vs]).divide_exact_linear(&(a - b))?))
        })
        .collect::<Result<_>>()?;
    let mut out = vec![MPoly::zero(n); f.len()];
    for (vi, q) in quotients {
        let vs = group.right_simple[vi][i - 1];
        out[vi] = &q - &f[vs];
        out[vs] = &q - &f[vi];
    }
    Ok(out)
}

/// Factors of csm(v)|_v: t_{v(i)} - t_{v(j)} on inversions, 1 + t_{v(i)} - t_{v(j)} otherwise.
pub fn csm_diagonal_factors(v: &Perm) -> Vec<MPoly> {
    let n = v.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let d = MPoly::t(n, v.at(i)) - MPoly::t(n, v.at(j));
            out.push(if v.at(i) > v.at(j) { d } else { MPoly::one(n) + d });
        }
    }
    out
}

struct CsmLocTable {
    group: Arc<SymGroup>,
    /// below[v] = (w, csm(w)|_v) for w != v with nonzero localization.
    below: Vec<Vec<(usize, MPoly)>>,
    diag: Vec<Vec<MPoly>>,
}

/// csm(w)|_v for all w, v, propagated from the point class with csm(w) = T_i csm(w s_i).
fn csm_loc_table(n: usize) -> Result<Arc<CsmLocTable>> {
    static CACHE: OnceLock<Mutex<FxHashMap<usize, Arc<CsmLocTable>>>> = OnceLock::new();
    let m = CACHE.get_or_init(Default::default);
    if let Some(t) = m.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let group = SymGroup::get(n);
    let perms = &group.perms;
    let size = perms.len();
    let top = size - 1;
    let point = point_class(n);
    let mut vectors: Vec<Option<Vec<MPoly>>> = vec![None; size];
    vectors[top] = Some(perms.iter().map(|v| localize(&point, v)).collect());
    for wi in (0..top).rev() {
        let w = &perms[wi];
        let i = (1..n).find(|&i| w.at(i) < w.at(i + 1)).expect("non-longest element has an ascent");
        let parent = group.right_simple[wi][i - 1];
        let pv = vectors[parent].as_ref().expect("longer elements are processed first");
        vectors[wi] = Some(dl_localized(&group, pv, i)?);
    }
    let mut below = vec![Vec::new(); size];
    let mut diag = Vec::with_capacity(size);
    for (vi, v) in perms.iter().enumerate() {
        let factors = csm_diagonal_factors(v);
        let prod = factors.iter().fold(MPoly::one(n), |a, b| a * b);
        if vectors[vi].as_ref().unwrap()[vi] != prod {
            return Err(Error::Invariant(format!("csm({v})|_{v} is not the expected product")));
        }
        diag.push(factors);
    }
    for (wi, vec) in vectors.into_iter().enumerate() {
        for (vi, val) in vec.unwrap().into_iter().enumerate() {
            if vi != wi && !val.is_zero() {
                if wi > vi {
                    return Err(Error::Invariant(format!("csm({})|_{} is nonzero", perms[wi], perms[vi])));
                }
                below[vi].push((wi, val));
            }
        }
    }
    let t = Arc::new(CsmLocTable { group, below, diag });
    Ok(m.lock().unwrap().entry(n).or_insert(t).clone())
}

/// Coefficients of f in the CSM basis.
///
/// Equivariant mode solves f|_v = sum_{w <= v} c^w csm(w)|_v over fixed points in length order.
/// See `expand_in_csm_operator` for the T_w(f)|_id route.
pub fn expand_in_csm(f: &MPoly, equivariant: bool) -> Result<CohClass> {
    if !equivariant {
        return expand_in_csm_noneq(f);
    }
    let n = f.rank();
    let table = csm_loc_table(n)?;
    let perms = &table.group.perms;
    let locs: Vec<MPoly> = perms.par_iter().map(|v| localize(f, v)).collect();
    let mut c: Vec<MPoly> = vec![MPoly::zero(n); perms.len()];
    for vi in 0..perms.len() {
        let mut r = locs[vi].clone();
        for (wi, val) in &table.below[vi] {
            if !c[*wi].is_zero() {
                r -= &(&c[*wi] * val);
            }
        }
        if r.is_zero() {
            continue;
        }
        for fct in &table.diag[vi] {
            r = r.divide_exact_linear(fct)?;
        }
        c[vi] = r;
    }
    let mut out = CohClass::new(Basis::Csm, true, n);
    for (vi, p) in c.iter().enumerate() {
        out.add(&perms[vi], p);
    }
    Ok(out)
}

/// Equivariant coefficients c^w = T_w(f)|_id / prod_{i<j}(1 + t_i - t_j), where T_w follows a
/// reduced word of w.
///
/// T_w(f) is propagated on fixed-point localizations along the tree w = s_i * (s_i w),
/// i the first left descent of w.
pub fn expand_in_csm_operator(f: &MPoly) -> Result<CohClass> {
    let equivariant = true;
    let n = f.rank();
    let group = SymGroup::get(n);
    let perms = &group.perms;
    let base: Vec<MPoly> = perms.par_iter().map(|v| localize(&f, v)).collect();
    let id = 0;
    debug_assert!(perms[id].is_identity());
    let mut vectors: Vec<Option<Vec<MPoly>>> = vec![None; perms.len()];
    vectors[id] = Some(base);
    let factors = identity_factors(n);
    let mut out = CohClass::new(Basis::Csm, equivariant, n);
    for (wi, w) in perms.iter().enumerate() {
        if wi != id {
            let winv = w.inverse();
            let i = (1..n).find(|&i| winv.at(i) > winv.at(i + 1)).expect("non-identity has a left descent");
            let parent = group.index_of(&w.simple_times(i));
            let pv = vectors[parent].as_ref().expect("parent processed first");
            vectors[wi] = Some(dl_localized(&group, pv, i)?);
        }
        let mut c = vectors[wi].as_ref().unwrap()[id].clone();
        for fct in &factors {
            c = c.divide_exact_linear(fct)?;
        }
        out.add(w, &c);
    }
    Ok(out)
}

fn noneq_table(n: usize) -> Result<Arc<Vec<CohClass>>> {
    static T: OnceLock<Mutex<FxHashMap<usize, Arc<Vec<CohClass>>>>> = OnceLock::new();
    let m = T.get_or_init(Default::default);
    if let Some(t) = m.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let group = SymGroup::get(n);
    let rows: Result<Vec<CohClass>> = group.perms.par_iter().map(|w| expand_in_schubert(&csm_class_noneq(w), false)).collect();
    let rows = Arc::new(rows?);
    Ok(m.lock().unwrap().entry(n).or_insert(rows).clone())
}

/// Nonequivariant coefficients: expand in Schubert classes at t = 0, then invert the
/// unitriangular Schubert expansions of the nonequivariant CSM classes.
///
/// Setting t = 0 before an equivariant expansion would not work: the CSM classes only span
/// after inverting prod (1 + t_i - t_j), so a t = 0 representative has non-polynomial
/// equivariant coefficients in general.
fn expand_in_csm_noneq(f: &MPoly) -> Result<CohClass> {
    let n = f.rank();
    let group = SymGroup::get(n);
    let table = noneq_table(n)?;
    let mut residual = expand_in_schubert(&f.t_to_zero(), false)?;
    let mut out = CohClass::new(Basis::Csm, false, n);
    for (vi, v) in group.perms.iter().enumerate() {
        let c = residual.get(v);
        if c.is_zero() {
            continue;
        }
        for (w, a) in table[vi].terms() {
            residual.add(w, &-(&c * a));
        }
        out.add(v, &c);
    }
    debug_assert!(residual.is_empty());
    Ok(out)
}

/// Reference implementation of T_w(f)|_id with polynomial-level operators.
pub fn dl_word_at_identity(f: &MPoly, w: &Perm) -> MPoly {
    let word = w.reduced_word();
    let g = word.iter().rev().fold(f.clone(), |acc, &i| dl_operator(&acc, i));
    localize(&g, &Perm::identity(w.n()))
}

/// Sum of c^w * csm(w).
pub fn csm_representative(c: &CohClass) -> MPoly {
    c.terms().iter().fold(MPoly::zero(c.n), |acc, (w, p)| {
        let r = if c.equivariant { csm_class(w) } else { csm_class_noneq(w) };
        acc + p * r
    })
}

/// Product of the class of `u` with `g` as raw polynomials, expanded in the requested basis.
pub fn oracle_product(u: &Perm, g: &MPoly, basis: Basis, equivariant: bool) -> Result<CohClass> {
    let rep = match basis {
        Basis::Csm => csm_class(u),
        Basis::Schubert => double_schubert(u),
    };
    let (rep, g) = if equivariant { (rep, g.clone()) } else { (rep.t_to_zero(), g.t_to_zero()) };
    let prod = rep * g;
    match basis {
        Basis::Csm => expand_in_csm(&prod, equivariant),
        Basis::Schubert => expand_in_schubert(&prod, equivariant),
    }
}
