//! Labeled k-Bruhat graphs, the extended k-Bruhat order, and label-monotone path enumeration.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Edge u -> u*t_ab with a <= k < b and u(a) < u(b), labeled tau = u(a).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledEdge {
    pub source: Perm,
    pub target: Perm,
    pub a: usize,
    pub b: usize,
    pub tau: usize,
    pub is_cover: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledPath {
    pub start: Perm,
    pub edges: Vec<LabeledEdge>,
    pub in_count: usize,
    pub de_count: usize,
}

impl LabeledPath {
    pub fn empty(u: &Perm) -> LabeledPath {
        LabeledPath { start: u.clone(), edges: Vec::new(), in_count: 0, de_count: 0 }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn end(&self) -> &Perm {
        self.edges.last().map(|e| &e.target).unwrap_or(&self.start)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.tau).collect()
    }
}

/// Label pattern requested from [`enumerate_paths`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathShape {
    Decreasing(usize),
    Increasing(usize),
    /// tau_1 > ... > tau_{beta+1} < ... < tau_{alpha+beta+1}.
    Peakless { alpha: usize, beta: usize },
    /// tau_1 < ... < tau_{alpha+1} > ... > tau_{alpha+beta+1}.
    Unimodal { alpha: usize, beta: usize },
    /// Every nonempty peakless path of length at most the bound.
    PeaklessUpTo(usize),
    /// Every nonempty unimodal path of length at most the bound.
    UnimodalUpTo(usize),
    /// Unimodal paths of exactly this length; callers weight them by (-1)^de.
    SignedUnimodal(usize),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Peakless,
    Unimodal,
}

pub type PathsByEnd = BTreeMap<Perm, Vec<LabeledPath>>;

pub fn k_edges_from(u: &Perm, k: usize) -> Vec<LabeledEdge> {
    let n = u.n();
    let mut out = Vec::new();
    for a in 1..=k.min(n) {
        for b in k + 1..=n {
            let (ua, ub) = (u.at(a), u.at(b));
            if ua < ub {
                let is_cover = (a + 1..b).all(|c| {
                    let uc = u.at(c);
                    uc < ua || uc > ub
                });
                out.push(LabeledEdge {
                    source: u.clone(),
                    target: u.times_transposition(a, b),
                    a,
                    b,
                    tau: ua,
                    is_cover,
                });
            }
        }
    }
    out
}

/// Extended k-Bruhat order by the pointwise criterion.
pub fn leq_k(u: &Perm, w: &Perm, k: usize) -> bool {
    let n = u.n();
    assert_eq!(n, w.n(), "permutation size mismatch");
    (1..=k.min(n)).all(|a| u.at(a) <= w.at(a)) && (k + 1..=n).all(|b| u.at(b) >= w.at(b))
}

/// Reachability along k-edges; a search-based reference for [`leq_k`].
pub fn leq_k_search(u: &Perm, w: &Perm, k: usize, cover_only: bool) -> bool {
    let mut stack = vec![u.clone()];
    let mut seen = std::collections::HashSet::new();
    while let Some(v) = stack.pop() {
        if &v == w {
            return true;
        }
        if !seen.insert(v.clone()) {
            continue;
        }
        for e in k_edges_from(&v, k) {
            if !cover_only || e.is_cover {
                stack.push(e.target);
            }
        }
    }
    false
}

/// Bruhat order v <= u via rank matrices.
pub fn bruhat_leq(v: &Perm, u: &Perm) -> bool {
    let n = v.n();
    for i in 1..=n {
        for j in 1..=n {
            let cv = (1..=i).filter(|&a| v.at(a) >= j).count();
            let cu = (1..=i).filter(|&a| u.at(a) >= j).count();
            if cv > cu {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaDelta {
    pub sigma: Vec<usize>,
    pub delta: Vec<usize>,
}

/// Sigma_A(u,w) = uA + uM(u^-1 w) and Delta_A(u,w) = uA - uM(u^-1 w).
pub fn sigma_delta(u: &Perm, w: &Perm, a: &[usize]) -> SigmaDelta {
    let moved: Vec<usize> = (1..=u.n()).filter(|&i| u.at(i) != w.at(i)).map(|i| u.at(i)).collect();
    let ua = u.image(a);
    let delta: Vec<usize> = ua.iter().copied().filter(|v| !moved.contains(v)).collect();
    let mut sigma = ua;
    sigma.extend(moved);
    sigma.sort_unstable();
    sigma.dedup();
    SigmaDelta { sigma, delta }
}

struct Search {
    k: usize,
    cover_only: bool,
    mode: Mode,
    max_len: usize,
    accept: Box<dyn Fn(usize, usize, usize) -> bool>,
    prune: Box<dyn Fn(usize, usize, bool) -> bool>,
}

impl Search {
    fn run(&self, u: &Perm) -> PathsByEnd {
        let mut out = PathsByEnd::new();
        let mut path = LabeledPath::empty(u);
        self.extend(&mut path, false, &mut out);
        out
    }

    /// `turned`: the path has passed its minimum (peakless) or maximum (unimodal).
    fn extend(&self, path: &mut LabeledPath, turned: bool, out: &mut PathsByEnd) {
        let len = path.len();
        if len > 0 && (self.accept)(len, path.in_count, path.de_count) {
            out.entry(path.end().clone()).or_default().push(path.clone());
        }
        if len == self.max_len {
            return;
        }
        let cur = path.end().clone();
        for e in k_edges_from(&cur, self.k) {
            if self.cover_only && !e.is_cover {
                continue;
            }
            let (in0, de0) = (path.in_count, path.de_count);
            let (next_turned, in1, de1) = match path.edges.last() {
                None => (false, 0, 0),
                Some(last) => {
                    let up = e.tau > last.tau;
                    if e.tau == last.tau {
                        continue;
                    }
                    match (self.mode, turned, up) {
                        (Mode::Peakless, false, false) => (false, in0, de0 + 1),
                        (Mode::Peakless, _, true) => (true, in0 + 1, de0),
                        (Mode::Peakless, true, false) => continue,
                        (Mode::Unimodal, false, true) => (false, in0 + 1, de0),
                        (Mode::Unimodal, _, false) => (true, in0, de0 + 1),
                        (Mode::Unimodal, true, true) => continue,
                    }
                }
            };
            if (self.prune)(in1, de1, next_turned) {
                continue;
            }
            path.edges.push(e);
            path.in_count = in1;
            path.de_count = de1;
            self.extend(path, next_turned, out);
            path.edges.pop();
            path.in_count = in0;
            path.de_count = de0;
        }
    }
}

/// Paths from `u` with the requested label pattern, grouped by endpoint.
///
/// Nonempty paths only, except that `Decreasing(0)` and `Increasing(0)` return the empty path.
pub fn enumerate_paths(u: &Perm, k: usize, shape: PathShape, cover_only: bool) -> PathsByEnd {
    let none = |_: usize, _: usize, _: bool| false;
    let s = match shape {
        PathShape::Decreasing(0) | PathShape::Increasing(0) => {
            let mut m = PathsByEnd::new();
            m.insert(u.clone(), vec![LabeledPath::empty(u)]);
            return m;
        }
        PathShape::Decreasing(r) => Search {
            k,
            cover_only,
            mode: Mode::Peakless,
            max_len: r,
            accept: Box::new(move |len, _, _| len == r),
            prune: Box::new(|i, _, _| i > 0),
        },
        PathShape::Increasing(r) => Search {
            k,
            cover_only,
            mode: Mode::Peakless,
            max_len: r,
            accept: Box::new(move |len, _, _| len == r),
            prune: Box::new(|_, d, _| d > 0),
        },
        PathShape::Peakless { alpha, beta } => Search {
            k,
            cover_only,
            mode: Mode::Peakless,
            max_len: alpha + beta + 1,
            accept: Box::new(move |_, i, d| i == alpha && d == beta),
            prune: Box::new(move |i, d, _| i > alpha || d > beta),
        },
        PathShape::Unimodal { alpha, beta } => Search {
            k,
            cover_only,
            mode: Mode::Unimodal,
            max_len: alpha + beta + 1,
            accept: Box::new(move |_, i, d| i == alpha && d == beta),
            prune: Box::new(move |i, d, _| i > alpha || d > beta),
        },
        PathShape::PeaklessUpTo(m) => Search {
            k,
            cover_only,
            mode: Mode::Peakless,
            max_len: m,
            accept: Box::new(|_, _, _| true),
            prune: Box::new(none),
        },
        PathShape::UnimodalUpTo(m) => Search {
            k,
            cover_only,
            mode: Mode::Unimodal,
            max_len: m,
            accept: Box::new(|_, _, _| true),
            prune: Box::new(none),
        },
        PathShape::SignedUnimodal(r) => Search {
            k,
            cover_only,
            mode: Mode::Unimodal,
            max_len: r,
            accept: Box::new(move |len, _, _| len == r),
            prune: Box::new(none),
        },
    };
    s.run(u)
}

/// The unique unimodal path from u to u*eta for an (m+1)-cycle eta.
pub fn unique_unimodal_path(u: &Perm, eta: &Perm, k: usize) -> Result<LabeledPath> {
    let cycles = eta.cycles();
    if cycles.len() != 1 {
        return Err(Error::Usage(format!("{eta} is not a cycle")));
    }
    let w = u.mul(eta);
    if !leq_k(u, &w, k) {
        return Err(Error::Domain(format!("{u} is not below {w} in the extended {k}-Bruhat order")));
    }
    let m = cycles[0].len() - 1;
    let paths = enumerate_paths(u, k, PathShape::SignedUnimodal(m), false);
    let mut found = paths.get(&w).cloned().unwrap_or_default();
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Invariant(format!("no unimodal path from {u} to {w}"))),
        c => Err(Error::Invariant(format!("{c} unimodal paths from {u} to {w}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverStyle {
    /// Non-cover edges drawn dashed.
    Dashed,
    /// Only cover edges are emitted.
    CoversOnly,
}

/// DOT rendering of the labeled k-Bruhat graph on S_n.
pub fn export_dot(n: usize, k: usize, style: CoverStyle) -> String {
    let mut s = String::new();
    writeln!(s, "digraph \"bruhat_n{n}_k{k}\" {{").unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    let perms = Perm::all_by_length(n);
    for p in &perms {
        writeln!(s, "  \"{p}\";").unwrap();
    }
    for p in &perms {
        let mut edges = k_edges_from(p, k);
        edges.sort_by(|x, y| x.target.cmp(&y.target));
        for e in edges {
            match (e.is_cover, style) {
                (true, _) => writeln!(s, "  \"{}\" -> \"{}\" [label=\"{}\"];", e.source, e.target, e.tau).unwrap(),
                (false, CoverStyle::Dashed) => writeln!(
                    s,
                    "  \"{}\" -> \"{}\" [label=\"{}\", style=dashed];",
                    e.source, e.target, e.tau
                )
                .unwrap(),
                (false, CoverStyle::CoversOnly) => {}
            }
        }
    }
    s.push_str("}\n");
    s
}
