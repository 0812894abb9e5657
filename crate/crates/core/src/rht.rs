//! Standard rim hook tableaux and the counting methods tied to localizations of
//! Grassmannian Schubert classes under the specialization t_i = z^i.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::cyclo::{limit_ratio_at_root, CycloElt};
use crate::arith::rational::{as_i64, factorial, rat};
use crate::arith::{Rational, UPoly};
use crate::error::{Error, Result};
use crate::grassmann::rim_hook_additions;
use crate::perm::{grassmannian_from_partition, Partition};
use crate::symfun::for_each_ssyt;

/// A chain inner = chain[0] < ... < chain[d] = outer of r-rim hook additions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RimHookTableau {
    pub chain: Vec<Partition>,
    pub r: usize,
    pub total_height: usize,
}

/// A standard filling of a skew shape; `cells[i]` holds the (row, col) of entry i + 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    pub cells: Vec<(usize, usize)>,
    pub maj: usize,
}

fn check_skew(outer: &Partition, inner: &Partition) -> Result<usize> {
    if !outer.contains(inner) {
        return Err(Error::Usage(format!("{inner} is not contained in {outer}")));
    }
    Ok(outer.size() - inner.size())
}

fn check_r(size: usize, r: usize) -> Result<usize> {
    if r == 0 || size % r != 0 {
        return Err(Error::Usage(format!("skew size {size} is not a multiple of r={r}")));
    }
    Ok(size / r)
}

/// The smallest rectangle holding `outer`, with at least one row and one column.
pub fn minimal_rectangle(outer: &Partition) -> (usize, usize) {
    let k = outer.len().max(1);
    (k, k + outer.part(1).max(1))
}

/// Every standard r-rim hook tableau of shape outer / inner.
pub fn enumerate_rht(outer: &Partition, inner: &Partition, r: usize) -> Result<Vec<RimHookTableau>> {
    let size = check_skew(outer, inner)?;
    check_r(size, r)?;
    let (k, n) = minimal_rectangle(outer);
    fn rec(
        cur: &mut Vec<Partition>,
        height: usize,
        outer: &Partition,
        r: usize,
        k: usize,
        n: usize,
        out: &mut Vec<RimHookTableau>,
    ) -> Result<()> {
        let last = cur.last().expect("chain starts at inner");
        if last == outer {
            out.push(RimHookTableau { chain: cur.clone(), r, total_height: height });
            return Ok(());
        }
        for h in rim_hook_additions(last, k, n, r..=r)? {
            if outer.contains(&h.outer) {
                cur.push(h.outer);
                rec(cur, height + h.height, outer, r, k, n, out)?;
                cur.pop();
            }
        }
        Ok(())
    }
    if inner == outer {
        return Ok(vec![RimHookTableau { chain: vec![inner.clone()], r, total_height: 0 }]);
    }
    let firsts: Vec<_> =
        rim_hook_additions(inner, k, n, r..=r)?.into_iter().filter(|h| outer.contains(&h.outer)).collect();
    let parts: Vec<Result<Vec<RimHookTableau>>> = firsts
        .into_par_iter()
        .map(|h| {
            let mut out = Vec::new();
            let mut cur = vec![inner.clone(), h.outer];
            rec(&mut cur, h.height, outer, r, k, n, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// Common sign (-1)^ht(T) of all r-rim hook tableaux, 0 when there are none.
pub fn rht_sign(outer: &Partition, inner: &Partition, r: usize) -> Result<i64> {
    let all = enumerate_rht(outer, inner, r)?;
    let Some(first) = all.first() else { return Ok(0) };
    let parity = first.total_height % 2;
    if let Some(bad) = all.iter().find(|t| t.total_height % 2 != parity) {
        return Err(Error::Invariant(format!(
            "height parities {} and {} on {outer}/{inner}",
            first.total_height, bad.total_height
        )));
    }
    Ok(if parity == 0 { 1 } else { -1 })
}

/// Every standard Young tableau of shape outer / inner with its major index.
pub fn enumerate_syt(outer: &Partition, inner: &Partition) -> Result<Vec<StandardTableau>> {
    check_skew(outer, inner)?;
    let rows = outer.len();
    let mut cur: Vec<usize> = (1..=rows).map(|i| inner.part(i)).collect();
    let target: Vec<usize> = (1..=rows).map(|i| outer.part(i)).collect();
    let mut cells = Vec::new();
    let mut out = Vec::new();
    fn rec(
        cur: &mut Vec<usize>,
        target: &[usize],
        cells: &mut Vec<(usize, usize)>,
        maj: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if cur[..] == target[..] {
            out.push(StandardTableau { cells: cells.clone(), maj });
            return;
        }
        for i in 0..cur.len() {
            let addable = cur[i] < target[i] && (i == 0 || cur[i - 1] > cur[i]);
            if !addable {
                continue;
            }
            cur[i] += 1;
            let cell = (i + 1, cur[i]);
            let descent = cells.last().is_some_and(|&(row, _): &(usize, usize)| cell.0 > row);
            let m = if descent { maj + cells.len() } else { maj };
            cells.push(cell);
            rec(cur, target, cells, m, out);
            cells.pop();
            cur[i] -= 1;
        }
    }
    rec(&mut cur, &target, &mut cells, 0, &mut out);
    Ok(out)
}

/// [Y(lambda)]_T localized at w_Lambda, with t_i = z^i, as a factorial Schur tableau sum.
pub fn y_poly(lambda: &Partition, big: &Partition, k: usize, n: usize) -> Result<UPoly> {
    let w = grassmannian_from_partition(big, k, n)?;
    grassmannian_from_partition(lambda, k, n)?;
    let zp = |e: usize| UPoly::monomial(rat(1), e);
    let mut acc = UPoly::zero();
    for_each_ssyt(lambda, k, |t| {
        let mut p = UPoly::one();
        for (i, row) in t.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                p = p.mul_poly(&zp(w.at(v)).sub_poly(&zp(v + j - i)));
                if p.is_zero() {
                    return;
                }
            }
        }
        acc = acc.add_poly(&p);
    });
    Ok(acc)
}

fn integral(q: &Rational, what: &str) -> Result<i64> {
    as_i64(q).ok_or_else(|| Error::Invariant(format!("{what} produced the non-integer {q}")))
}

fn as_rational(c: &CycloElt, what: &str) -> Result<Rational> {
    c.as_rational().ok_or_else(|| Error::Invariant(format!("{what} left the irrational residue {c}")))
}

/// sgn * #RHT from the leading Laurent coefficient of Y_{lambda,Lambda} / Y_{Lambda,Lambda} at a
/// primitive r-th root of unity, in the rectangle (k, n).
pub fn rht_signed_limit_in(outer: &Partition, inner: &Partition, r: usize, k: usize, n: usize) -> Result<i64> {
    let size = check_skew(outer, inner)?;
    let d = check_r(size, r)?;
    let num = y_poly(inner, outer, k, n)?.mul_poly(&UPoly::z_pow_minus_one(r).pow(d));
    let den = y_poly(outer, outer, k, n)?;
    let lim = as_rational(&limit_ratio_at_root(&num, &den, r)?, "limit")?;
    let scale = Rational::from(factorial(d as u64)) * (0..d).fold(rat(1), |a, _| a * rat(r as i64));
    integral(&(lim * scale), "limit")
}

/// #RHT by the localization limit, in the minimal rectangle around `outer`.
pub fn rht_count_limit(outer: &Partition, inner: &Partition, r: usize) -> Result<u64> {
    let (k, n) = minimal_rectangle(outer);
    Ok(rht_signed_limit_in(outer, inner, r, k, n)?.unsigned_abs())
}

/// sgn * #RHT as the sum of zeta^maj(T) over standard Young tableaux, evaluated in Q[z]/Phi_r.
pub fn rht_signed_maj(outer: &Partition, inner: &Partition, r: usize) -> Result<i64> {
    let size = check_skew(outer, inner)?;
    check_r(size, r)?;
    let mut by_residue = vec![0i64; r];
    for t in enumerate_syt(outer, inner)? {
        by_residue[t.maj % r] += 1;
    }
    let coeffs: Vec<Rational> = by_residue.iter().map(|&c| rat(c)).collect();
    let s = CycloElt::from_upoly(&UPoly::new(coeffs), r);
    integral(&as_rational(&s, "maj sum")?, "maj sum")
}

pub fn rht_count_maj(outer: &Partition, inner: &Partition, r: usize) -> Result<u64> {
    Ok(rht_signed_maj(outer, inner, r)?.unsigned_abs())
}

/// Hook lengths of a straight shape, row by row.
pub fn hook_lengths(shape: &Partition) -> Vec<usize> {
    let conj = shape.conjugate();
    shape.cells().into_iter().map(|(i, j)| shape.part(i) - j + conj.part(j) - i + 1).collect()
}

/// #RHT of a straight shape: zero unless exactly d hook lengths are divisible by r, otherwise
/// r^d d! over the product of those hook lengths.
pub fn rht_count_hook(shape: &Partition, r: usize) -> Result<u64> {
    let d = check_r(shape.size(), r)?;
    let divisible: Vec<usize> = hook_lengths(shape).into_iter().filter(|h| h % r == 0).collect();
    if divisible.len() != d {
        return Ok(0);
    }
    let top = Rational::from(factorial(d as u64)) * (0..d).fold(rat(1), |a, _| a * rat(r as i64));
    let bottom = divisible.iter().fold(rat(1), |a, &h| a * rat(h as i64));
    Ok(integral(&(top / bottom), "hook formula")?.unsigned_abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhtMethod {
    Enumerate,
    Limit,
    Maj,
    Hook,
}

pub fn rht_count(outer: &Partition, inner: &Partition, r: usize, method: RhtMethod) -> Result<u64> {
    match method {
        RhtMethod::Enumerate => Ok(enumerate_rht(outer, inner, r)?.len() as u64),
        RhtMethod::Limit => rht_count_limit(outer, inner, r),
        RhtMethod::Maj => rht_count_maj(outer, inner, r),
        RhtMethod::Hook => {
            if !inner.is_empty() {
                return Err(Error::Usage("the hook method needs an empty inner shape".into()));
            }
            rht_count_hook(outer, r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::MPoly;
    use crate::schubert::{double_schubert, localize};

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn principal(p: &MPoly, n: usize) -> UPoly {
        let mut acc = UPoly::zero();
        for (m, c) in p.terms() {
            assert!(m.0[..n].iter().all(|&e| e == 0), "x left in {p}");
            let e: usize = (0..n).map(|i| (i + 1) * m.0[n + i] as usize).sum();
            acc = acc.add_poly(&UPoly::monomial(c.clone(), e));
        }
        acc
    }

    #[test]
    fn domino_example() {
        let (big, small) = (part("4,4,1"), part("1"));
        let all = enumerate_rht(&big, &small, 2).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|t| t.total_height % 2 == 0));
        assert_eq!(rht_sign(&big, &small, 2).unwrap(), 1);
        assert_eq!(rht_count_limit(&big, &small, 2).unwrap(), 4);
        assert_eq!(rht_count_maj(&big, &small, 2).unwrap(), 4);
        for (k, n) in [(3, 7), (4, 9), (5, 10)] {
            assert_eq!(rht_signed_limit_in(&big, &small, 2, k, n).unwrap(), 4);
        }
    }

    #[test]
    fn trivial_shapes() {
        let l = part("2,1");
        assert_eq!(enumerate_rht(&l, &l, 3).unwrap().len(), 1);
        assert_eq!(rht_sign(&l, &l, 3).unwrap(), 1);
        assert_eq!(rht_count_limit(&l, &l, 2).unwrap(), 1);
        assert_eq!(enumerate_rht(&part("3,1"), &Partition::empty(), 2).unwrap().len(), 1);
        assert!(matches!(enumerate_rht(&part("3,1"), &Partition::empty(), 3), Err(Error::Usage(_))));
    }

    #[test]
    fn y_poly_examples() {
        assert_eq!(y_poly(&Partition::empty(), &part("2,1"), 2, 5).unwrap(), UPoly::one());
        assert_eq!(y_poly(&part("1"), &part("1"), 1, 2).unwrap(), UPoly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn y_poly_is_the_double_schubert_localization() {
        for (k, n) in [(2, 5), (3, 6)] {
            for small in Partition::in_rectangle(k, n - k) {
                let ws = grassmannian_from_partition(&small, k, n).unwrap();
                let s = double_schubert(&ws);
                for big in Partition::in_rectangle(k, n - k) {
                    let wb = grassmannian_from_partition(&big, k, n).unwrap();
                    let direct = principal(&localize(&s, &wb), n);
                    assert_eq!(y_poly(&small, &big, k, n).unwrap(), direct, "{small} at {big}");
                }
            }
        }
    }

    #[test]
    fn diagonal_is_hook_product() {
        for big in Partition::in_rectangle(3, 3) {
            let y = y_poly(&big, &big, 3, 6).unwrap();
            let hooks = hook_lengths(&big).into_iter().fold(UPoly::one(), |a, h| a.mul_poly(&UPoly::z_pow_minus_one(h)));
            let (_, core) = y.strip_z_power();
            assert!(core == hooks || core == hooks.scale(&rat(-1)), "{big}: {y} vs {hooks}");
        }
    }

    #[test]
    fn hook_formula_examples() {
        assert_eq!(rht_count_hook(&part("2,2"), 2).unwrap(), 2);
        assert_eq!(rht_count_hook(&part("3,1"), 2).unwrap(), 1);
        assert_eq!(hook_lengths(&part("3,1")), vec![4, 2, 1, 1]);
        for m in 1..=8 {
            for shape in Partition::of_size(m) {
                let syt = enumerate_syt(&shape, &Partition::empty()).unwrap().len() as u64;
                assert_eq!(rht_count_hook(&shape, 1).unwrap(), syt, "{shape}");
                assert_eq!(enumerate_rht(&shape, &Partition::empty(), 1).unwrap().len() as u64, syt);
            }
        }
    }

    #[test]
    fn maj_statistic() {
        let t = enumerate_syt(&part("2,1"), &Partition::empty()).unwrap();
        let mut majs: Vec<usize> = t.iter().map(|t| t.maj).collect();
        majs.sort_unstable();
        assert_eq!(majs, vec![1, 2]);
    }

    #[test]
    fn three_way_in_3x3_with_signs() {
        for big in Partition::in_rectangle(3, 3) {
            for small in Partition::in_rectangle(3, 3) {
                if !big.contains(&small) || (big.size() - small.size()) % 2 != 0 {
                    continue;
                }
                let count = enumerate_rht(&big, &small, 2).unwrap().len() as i64;
                let signed = rht_sign(&big, &small, 2).unwrap() * count;
                assert_eq!(rht_signed_limit_in(&big, &small, 2, 3, 6).unwrap(), signed, "{big}/{small}");
                assert_eq!(rht_signed_maj(&big, &small, 2).unwrap(), signed, "{big}/{small}");
            }
        }
    }

    fn equal_up_to_signed_monomial(a: &UPoly, b: &UPoly) -> bool {
        let (_, a) = a.strip_z_power();
        let (_, b) = b.strip_z_power();
        a == b || a == b.scale(&rat(-1))
    }

    #[test]
    fn principal_specialization_up_to_monomial() {
        let (k, n) = (2, 5);
        for big in Partition::in_rectangle(k, n - k) {
            for small in Partition::in_rectangle(k, n - k) {
                if !big.contains(&small) {
                    continue;
                }
                let m = big.size() - small.size();
                let lhs = (1..=m).fold(y_poly(&small, &big, k, n).unwrap(), |a, i| {
                    a.mul_poly(&UPoly::one().sub_poly(&UPoly::monomial(rat(1), i)))
                });
                let maj = enumerate_syt(&big, &small)
                    .unwrap()
                    .iter()
                    .fold(UPoly::zero(), |a, t| a.add_poly(&UPoly::monomial(rat(1), t.maj)));
                let rhs = y_poly(&big, &big, k, n).unwrap().mul_poly(&maj);
                assert!(equal_up_to_signed_monomial(&lhs, &rhs), "{big}/{small}");
            }
        }
    }

    #[test]
    fn no_pole_beyond_the_expected_order() {
        let (k, n) = (3, 6);
        for r in [2, 3] {
            for big in Partition::in_rectangle(k, n - k) {
                for small in Partition::in_rectangle(k, n - k) {
                    if !big.contains(&small) {
                        continue;
                    }
                    let m = (big.size() - small.size()) / r;
                    let num = y_poly(&small, &big, k, n).unwrap().mul_poly(&UPoly::z_pow_minus_one(r).pow(m + 1));
                    let den = y_poly(&big, &big, k, n).unwrap();
                    let lim = limit_ratio_at_root(&num, &den, r).unwrap();
                    assert!(lim.is_zero(), "{big}/{small} r={r}");
                }
            }
        }
    }

    fn h_at_root(i: usize, exps: &[usize], r: usize) -> CycloElt {
        let mut dp = vec![CycloElt::zero(r); i + 1];
        dp[0] = CycloElt::one(r);
        for &a in exps {
            let x = CycloElt::zeta_pow(a as i64, r);
            for deg in 1..=i {
                dp[deg] = dp[deg].add(&dp[deg - 1].mul(&x));
            }
        }
        dp[i].clone()
    }

    #[test]
    fn complete_sums_vanish_at_roots() {
        fn subsets(r: usize, l: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if cur.len() == l {
                f(cur);
                return;
            }
            for a in start..r {
                cur.push(a);
                subsets(r, l, a + 1, cur, f);
                cur.pop();
            }
        }
        for r in 2..=8 {
            for l in 1..=r {
                subsets(r, l, 0, &mut Vec::new(), &mut |s| {
                    for i in r - l + 1..r {
                        assert!(h_at_root(i, s, r).is_zero(), "r={r} {s:?} i={i}");
                    }
                });
            }
        }
    }
}
