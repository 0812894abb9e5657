//! Partitions in the k x (n-k) rectangle: rim hooks read off the boundary word, the labeled
//! k-Bruhat graph on partitions, pushforward from the flag variety, and the parabolic Pieri
//! and Murnaghan-Nakayama rules.
//!
//! The southeast boundary of lambda is walked from the bottom-left corner to the top-right
//! corner with steps numbered 1..n. Up steps sit exactly at w_lambda(1..k). Adding a rim hook
//! swaps an up step p with a later right step q; the hook has size q - p, boundary labels
//! p..=q and label tau = p.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::arith::MPoly;
use crate::bruhat::{k_edges_from, LabeledPath};
use crate::error::{Error, Result};
use crate::perm::{gr, grassmannian_from_partition, HookShape, Partition, Perm};
use crate::schubert::{Basis, CohClass};
use crate::symfun::{complete_sym_of, power_sum_of};

/// mu / lambda for a rim hook mu over lambda.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RimHook {
    pub inner: Partition,
    pub outer: Partition,
    /// (row, col), 1-based, row by row.
    pub cells: Vec<(usize, usize)>,
    /// Leftmost cell of the bottom row.
    pub tail: (usize, usize),
    /// Number of rows minus one.
    pub height: usize,
    /// Boundary labels of the hook, increasing.
    pub labels: Vec<usize>,
    pub tau: usize,
}

impl RimHook {
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn sign(&self) -> i64 {
        if self.height % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn check_rect(lambda: &Partition, k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::Domain(format!("k={k} outside 1..{n}")));
    }
    if !lambda.fits(k, n - k) {
        return Err(Error::Domain(format!("partition {lambda} does not fit in {k}x{}", n - k)));
    }
    Ok(())
}

/// Step numbers of the up steps on the boundary of lambda, increasing.
pub fn boundary_up_steps(lambda: &Partition, k: usize) -> Vec<usize> {
    let mut ups = Vec::with_capacity(k);
    let (mut col, mut step) = (0, 1);
    for row in (1..=k).rev() {
        while col < lambda.part(row) {
            col += 1;
            step += 1;
        }
        ups.push(step);
        step += 1;
    }
    ups
}

/// Inverse of [`boundary_up_steps`].
pub fn partition_from_up_steps(ups: &[usize]) -> Partition {
    let k = ups.len();
    Partition::new((1..=k).map(|r| ups[k - r] - (k - r + 1)).collect())
}

/// w_lambda built from the boundary walk; agrees with [`grassmannian_from_partition`].
pub fn grassmannian_by_boundary(lambda: &Partition, k: usize, n: usize) -> Result<Perm> {
    check_rect(lambda, k, n)?;
    let mut ol = boundary_up_steps(lambda, k);
    let rest: Vec<usize> = (1..=n).filter(|s| !ol.contains(s)).collect();
    ol.extend(rest);
    Perm::new(ol)
}

fn hook_from_swap(lambda: &Partition, ups: &[usize], p: usize, q: usize) -> RimHook {
    let mut new_ups: Vec<usize> = ups.iter().copied().filter(|&s| s != p).collect();
    new_ups.push(q);
    new_ups.sort_unstable();
    let outer = partition_from_up_steps(&new_ups);
    let cells: Vec<(usize, usize)> = outer.cells().into_iter().filter(|&(r, c)| c > lambda.part(r)).collect();
    let bottom = cells.iter().map(|c| c.0).max().expect("rim hook is nonempty");
    let top = cells.iter().map(|c| c.0).min().expect("rim hook is nonempty");
    let tail_col = cells.iter().filter(|c| c.0 == bottom).map(|c| c.1).min().expect("bottom row is nonempty");
    RimHook {
        inner: lambda.clone(),
        outer,
        cells,
        tail: (bottom, tail_col),
        height: bottom - top,
        labels: (p..=q).collect(),
        tau: p,
    }
}

/// All mu in the rectangle with mu / lambda a rim hook whose size lies in `sizes`, ordered by
/// (tau, size).
pub fn rim_hook_additions(lambda: &Partition, k: usize, n: usize, sizes: RangeInclusive<usize>) -> Result<Vec<RimHook>> {
    check_rect(lambda, k, n)?;
    let ups = boundary_up_steps(lambda, k);
    let mut out = Vec::new();
    for &p in &ups {
        for q in p + 1..=n {
            if ups.contains(&q) || !sizes.contains(&(q - p)) {
                continue;
            }
            out.push(hook_from_swap(lambda, &ups, p, q));
        }
    }
    Ok(out)
}

/// The rim hook mu / lambda, if it is one.
pub fn rim_hook_between(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<Option<RimHook>> {
    check_rect(mu, k, n)?;
    let size = mu.size().checked_sub(lambda.size()).filter(|&s| s > 0);
    let Some(size) = size else { return Ok(None) };
    Ok(rim_hook_additions(lambda, k, n, size..=size)?.into_iter().find(|h| &h.outer == mu))
}

/// DOT rendering of the labeled k-Bruhat graph on partitions in the k x (n-k) rectangle,
/// with non-cover edges dashed.
pub fn export_partition_dot(k: usize, n: usize) -> Result<String> {
    check_rect(&Partition::empty(), k, n)?;
    let mut parts = Partition::in_rectangle(k, n - k);
    parts.sort_by_key(|p| (p.size(), p.clone()));
    let name = |p: &Partition| if p.is_empty() { "0".to_string() } else { p.display_padded(k) };
    let mut s = String::new();
    writeln!(s, "digraph \"partitions_k{k}_n{n}\" {{").unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    for p in &parts {
        writeln!(s, "  \"{}\";", name(p)).unwrap();
    }
    for p in &parts {
        let mut hooks = rim_hook_additions(p, k, n, 1..=n)?;
        hooks.sort_by(|a, b| a.outer.cmp(&b.outer));
        for h in hooks {
            let style = if h.size() > 1 { ", style=dashed" } else { "" };
            writeln!(s, "  \"{}\" -> \"{}\" [label=\"{}\"{style}];", name(p), name(&h.outer), h.tau).unwrap();
        }
    }
    s.push_str("}\n");
    Ok(s)
}

/// Lifts a path of partitions to the k-Bruhat graph on S_n starting at `u`.
pub fn lift_path(path: &[Partition], u: &Perm, k: usize) -> Result<LabeledPath> {
    let n = u.n();
    let Some(start) = path.first() else {
        return Ok(LabeledPath::empty(u));
    };
    if gr(u, k) != *start {
        return Err(Error::Domain(format!("Gr({u}) = {} is not {start}", gr(u, k))));
    }
    let mut out = LabeledPath::empty(u);
    for pair in path.windows(2) {
        let hook = rim_hook_between(&pair[0], &pair[1], k, n)?
            .ok_or_else(|| Error::Domain(format!("{} / {} is not a rim hook", pair[1], pair[0])))?;
        let cur = out.end().clone();
        let mut found: Vec<_> = k_edges_from(&cur, k).into_iter().filter(|e| gr(&e.target, k) == pair[1]).collect();
        if found.len() != 1 {
            return Err(Error::Invariant(format!("{} lifts of {} -> {} at {cur}", found.len(), pair[0], pair[1])));
        }
        let e = found.pop().unwrap();
        if e.tau != hook.tau {
            return Err(Error::Invariant(format!("lifted label {} differs from {}", e.tau, hook.tau)));
        }
        if let Some(last) = out.edges.last() {
            if e.tau > last.tau {
                out.in_count += 1;
            } else {
                out.de_count += 1;
            }
        }
        out.edges.push(e);
    }
    Ok(out)
}

/// Sum of flag coefficients over the fibers of w -> Gr(w) for CSM expansions. For Schubert
/// expansions only Grassmannian permutations survive, each at its own partition.
pub fn pushforward(expansion: &CohClass, k: usize) -> BTreeMap<Partition, MPoly> {
    let mut out: BTreeMap<Partition, MPoly> = BTreeMap::new();
    for (w, c) in expansion.terms() {
        if expansion.basis == Basis::Schubert && !w.is_grassmannian(k) {
            continue;
        }
        let e = out.entry(gr(w, k)).or_insert_with(|| MPoly::zero(expansion.n));
        *e += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Nonequivariant CSM Pieri coefficients of c_SM(Y(lambda)°) * s_Gamma(x_1..x_k) on Gr(k, n),
/// counted as chains of alpha + beta + 1 rim hooks whose tails first move strictly down
/// (beta times) and then strictly right (alpha times).
pub fn parabolic_pieri(lambda: &Partition, k: usize, n: usize, hook: HookShape) -> Result<BTreeMap<Partition, u64>> {
    check_rect(lambda, k, n)?;
    let len = hook.alpha + hook.beta + 1;
    let mut out = BTreeMap::new();
    let mut stack: Vec<(Partition, usize, (usize, usize))> = Vec::new();
    for h in rim_hook_additions(lambda, k, n, 1..=n)? {
        stack.push((h.outer, 1, h.tail));
    }
    while let Some((mu, steps, tail)) = stack.pop() {
        if steps == len {
            *out.entry(mu).or_insert(0) += 1;
            continue;
        }
        let descending = steps <= hook.beta;
        for h in rim_hook_additions(&mu, k, n, 1..=n)? {
            let ok = if descending { h.tail.0 > tail.0 } else { h.tail.1 > tail.1 };
            if ok {
                stack.push((h.outer, steps + 1, h.tail));
            }
        }
    }
    Ok(out)
}

/// [Y(lambda)]_T * p_r(x_1..x_k) on Gr(k, n), diagonal term included.
pub fn parabolic_mn(lambda: &Partition, k: usize, n: usize, r: usize) -> Result<BTreeMap<Partition, MPoly>> {
    check_rect(lambda, k, n)?;
    if r == 0 {
        return Err(Error::Domain("power sum degree must be positive".into()));
    }
    let t = |set: &[usize]| set.iter().map(|&i| MPoly::t(n, i)).collect::<Vec<_>>();
    let mut out = BTreeMap::new();
    out.insert(lambda.clone(), power_sum_of(n, r as u32, &t(&boundary_up_steps(lambda, k))));
    for h in rim_hook_additions(lambda, k, n, 1..=r)? {
        let c = complete_sym_of(n, (r - h.size()) as i64, &t(&h.labels)).scale_int(h.sign());
        out.insert(h.outer.clone(), c);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// The CSM pushforward route for [`parabolic_pieri`]: path counts from w_lambda on the flag
/// variety, summed over fibers.
pub fn pieri_by_pushforward(lambda: &Partition, k: usize, n: usize, hook: HookShape) -> Result<BTreeMap<Partition, u64>> {
    let w = grassmannian_from_partition(lambda, k, n)?;
    let flag = crate::rules::pieri_hook_csm(&w, k, hook, false)?;
    let mut out = BTreeMap::new();
    for (mu, c) in pushforward(&flag, k) {
        let v = crate::arith::rational::as_i64(&c.constant_term())
            .filter(|v| *v > 0)
            .ok_or_else(|| Error::Invariant(format!("coefficient {c} at {mu} is not a positive integer")))?;
        out.insert(mu, v as u64);
    }
    Ok(out)
}
