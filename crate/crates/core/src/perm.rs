//! Permutations in one-line notation, partitions, and the statistics the product rules consume.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bruhat;
use crate::error::{Error, Result};

/// Element of S_n in one-line notation, values 1..=n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn new(oneline: Vec<usize>) -> Result<Perm> {
        let n = oneline.len();
        if n == 0 {
            return Err(Error::Usage("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Usage(format!("{oneline:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Perm(oneline.into_iter().map(|v| v as u8).collect()))
    }

    fn raw(v: Vec<u8>) -> Perm {
        Perm(v)
    }

    pub fn identity(n: usize) -> Perm {
        Perm((1..=n as u8).collect())
    }

    pub fn longest(n: usize) -> Perm {
        Perm((1..=n as u8).rev().collect())
    }

    /// Simple transposition s_i (swaps i and i+1).
    pub fn simple(n: usize, i: usize) -> Perm {
        Perm::transposition(n, i, i + 1)
    }

    /// Transposition t_ab.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    /// Cycle c0 -> c1 -> ... -> c_last -> c0.
    pub fn cycle(n: usize, elems: &[usize]) -> Result<Perm> {
        let mut v: Vec<usize> = (1..=n).collect();
        let m = elems.len();
        for j in 0..m {
            v[elems[j] - 1] = elems[(j + 1) % m];
        }
        Perm::new(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// w(i), 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn oneline(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub fn length(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.n()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w as usize - 1] = (i + 1) as u8;
        }
        Perm(v)
    }

    /// (self * o)(i) = self(o(i)).
    pub fn compose(&self, o: &Perm) -> Result<Perm> {
        if self.n() != o.n() {
            return Err(Error::Usage(format!("size mismatch: S_{} vs S_{}", self.n(), o.n())));
        }
        Ok(self.mul(o))
    }

    /// Composition, panicking on size mismatch.
    pub fn mul(&self, o: &Perm) -> Perm {
        assert_eq!(self.n(), o.n(), "permutation size mismatch");
        Perm(o.0.iter().map(|&j| self.0[j as usize - 1]).collect())
    }

    /// w * s_i: swaps positions i and i+1.
    pub fn times_simple(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// s_i * w: swaps values i and i+1.
    pub fn simple_times(&self, i: usize) -> Perm {
        Perm(
            self.0
                .iter()
                .map(|&v| {
                    if v as usize == i {
                        v + 1
                    } else if v as usize == i + 1 {
                        v - 1
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// w * t_ab: swaps positions a and b.
    pub fn times_transposition(&self, a: usize, b: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(a - 1, b - 1);
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Right descents i with w(i) > w(i+1).
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// Reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}, found by bubble sort
    /// removing the leftmost descent first.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.clone();
        let mut stripped = Vec::new();
        while let Some(&i) = v.descents().first() {
            v = v.times_simple(i);
            stripped.push(i);
        }
        stripped.reverse();
        stripped
    }

    /// Reduced word built by removing the rightmost descent first.
    pub fn reduced_word_rightmost(&self) -> Vec<usize> {
        let mut v = self.clone();
        let mut stripped = Vec::new();
        while let Some(&i) = v.descents().last() {
            v = v.times_simple(i);
            stripped.push(i);
        }
        stripped.reverse();
        stripped
    }

    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(n), |w, &i| w.times_simple(i))
    }

    /// M(w): points not fixed by w.
    pub fn nonfixed_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.at(i) != i).collect()
    }

    /// ht_k(w) = #{i <= k : w(i) != i} - 1.
    pub fn k_height(&self, k: usize) -> i64 {
        (1..=k.min(self.n())).filter(|&i| self.at(i) != i).count() as i64 - 1
    }

    /// Image of a set of positions.
    pub fn image(&self, set: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = set.iter().map(|&i| self.at(i)).collect();
        v.sort_unstable();
        v
    }

    /// Disjoint cycles of length at least two, each rotated to start at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] || self.at(s) == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.at(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.at(j);
            }
            out.push(c);
        }
        out
    }

    /// Whether the permutation is a single cycle of length at least two.
    pub fn is_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Descent at most at position k.
    pub fn is_grassmannian(&self, k: usize) -> bool {
        self.descents().iter().all(|&d| d == k)
    }

    /// All of S_n in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm::raw(cur.clone()));
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// S_n sorted by (length, one-line lex): a linear extension of Bruhat order.
    pub fn all_by_length(n: usize) -> Vec<Perm> {
        let mut v = Perm::all(n);
        v.sort_by_key(|w| w.length());
        v
    }

    /// Parses digit strings ("23154", n <= 9) or comma lists ("2,3,1,5,4").
    pub fn parse(s: &str) -> Result<Perm> {
        let s = s.trim();
        let vals: std::result::Result<Vec<usize>, _> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse::<usize>()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(()))
                .collect::<std::result::Result<Vec<_>, ()>>()
                .map_err(|_| "x".parse::<usize>().unwrap_err())
        };
        match vals {
            Ok(v) => Perm::new(v),
            Err(_) => Err(Error::Usage(format!("cannot parse permutation {s:?}"))),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Perm> {
        Perm::parse(s)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Perm, D::Error> {
        let s = String::deserialize(d)?;
        Perm::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Hook shape (1 + alpha, 1^beta).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookShape {
    pub alpha: usize,
    pub beta: usize,
}

impl HookShape {
    pub fn new(alpha: usize, beta: usize) -> HookShape {
        HookShape { alpha, beta }
    }

    pub fn size(&self) -> usize {
        self.alpha + self.beta + 1
    }

    pub fn partition(&self) -> Partition {
        let mut v = vec![1 + self.alpha];
        v.extend(std::iter::repeat_n(1, self.beta));
        Partition::new(v)
    }

    /// All hooks with alpha + beta <= m.
    pub fn up_to(m: usize) -> Vec<HookShape> {
        let mut v = Vec::new();
        for s in 0..=m {
            for b in 0..=s {
                v.push(HookShape::new(s - b, b));
            }
        }
        v
    }
}

/// Integer partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Partition {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition(parts)
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Usage(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition::new(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// i-th part, 1-based, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, k: usize, width: usize) -> bool {
        self.len() <= k && self.part(1) <= width
    }

    pub fn contains(&self, o: &Partition) -> bool {
        (1..=o.len()).all(|i| self.part(i) >= o.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        Partition::new((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Cells (row, col), 1-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 1..=p {
                v.push((i + 1, j));
            }
        }
        v
    }

    pub fn padded(&self, k: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(k.max(v.len()), 0);
        v
    }

    pub fn display_padded(&self, k: usize) -> String {
        let v: Vec<String> = self.padded(k).iter().map(|p| p.to_string()).collect();
        v.join(",")
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "()" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<usize>, _> =
            s.trim_matches(|c| c == '(' || c == ')').split(',').map(|p| p.trim().parse::<usize>()).collect();
        match parts {
            Ok(v) => Partition::try_new(v),
            Err(_) => Err(Error::Usage(format!("cannot parse partition {s:?}"))),
        }
    }

    /// All partitions inside the k x width rectangle, sorted lex.
    pub fn in_rectangle(k: usize, width: usize) -> Vec<Partition> {
        fn rec(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if cur.len() == k {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(k, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, width, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions of m.
    pub fn of_size(m: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", v.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Partition, D::Error> {
        let s = String::deserialize(d)?;
        Partition::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// The Grassmannian permutation w_lambda with descent at k: lambda_i = w(k-i+1) - (k-i+1).
pub fn grassmannian_from_partition(lambda: &Partition, k: usize, n: usize) -> Result<Perm> {
    if k > n || !lambda.fits(k, n - k) {
        return Err(Error::Domain(format!("partition {lambda} does not fit in {k}x{}", n.saturating_sub(k))));
    }
    let mut first: Vec<usize> = (1..=k).map(|j| lambda.part(k - j + 1) + j).collect();
    first.sort_unstable();
    let mut rest: Vec<usize> = (1..=n).filter(|v| !first.contains(v)).collect();
    first.append(&mut rest);
    Perm::new(first)
}

/// Partition of a Grassmannian permutation (descent at most at k).
pub fn partition_of_grassmannian(w: &Perm, k: usize) -> Partition {
    Partition::new((1..=k).map(|i| w.at(k - i + 1) - (k - i + 1)).collect())
}

/// w = w_lambda * v with v in S_k x S_{n-k}.
pub fn coset_decompose(w: &Perm, k: usize) -> (Partition, Perm) {
    let n = w.n();
    let ol = w.oneline();
    let mut first = ol[..k].to_vec();
    let mut last = ol[k..].to_vec();
    first.sort_unstable();
    last.sort_unstable();
    first.extend(last);
    let wl = Perm::new(first).expect("sorted blocks form a permutation");
    let lambda = partition_of_grassmannian(&wl, k);
    let v = wl.inverse().mul(w);
    debug_assert_eq!(v.n(), n);
    (lambda, v)
}

/// Gr(w).
pub fn gr(w: &Perm, k: usize) -> Partition {
    coset_decompose(w, k).0
}

/// All cycles of length 2..=max_len+1 with u <=_k u*eta and u*eta != u, in canonical form.
pub fn cycles_through(u: &Perm, k: usize, max_len: usize) -> Vec<Perm> {
    let n = u.n();
    let mut out = Vec::new();
    for m in 2..=(max_len + 1).min(n) {
        for c in canonical_cycles(n, m) {
            let eta = Perm::cycle(n, &c).expect("valid cycle");
            if bruhat::leq_k(u, &u.mul(&eta), k) {
                out.push(eta);
            }
        }
    }
    out
}

/// Every m-cycle on [n] as an element list starting at its minimum.
pub fn canonical_cycles(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn subsets(n: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            subsets(n, m, i + 1, cur, out);
            cur.pop();
        }
    }
    fn perms_of(rest: &[usize]) -> Vec<Vec<usize>> {
        if rest.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..rest.len() {
            let mut r = rest.to_vec();
            let x = r.remove(i);
            for mut p in perms_of(&r) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    let mut sets = Vec::new();
    subsets(n, m, 1, &mut Vec::new(), &mut sets);
    let mut out = Vec::new();
    for s in sets {
        for tail in perms_of(&s[1..]) {
            let mut c = vec![s[0]];
            c.extend(tail);
            out.push(c);
        }
    }
    out
}

/// S_n in (length, lex) order with index lookups and right multiplication by simple reflections.
pub struct SymGroup {
    pub n: usize,
    pub perms: Vec<Perm>,
    index: rustc_hash::FxHashMap<Perm, usize>,
    /// right_simple[v][i-1] = index of v*s_i.
    pub right_simple: Vec<Vec<usize>>,
}

impl SymGroup {
    fn build(n: usize) -> SymGroup {
        let perms = Perm::all_by_length(n);
        let index: rustc_hash::FxHashMap<Perm, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let right_simple = perms
            .iter()
            .map(|p| (1..n).map(|i| index[&p.times_simple(i)]).collect())
            .collect();
        SymGroup { n, perms, index, right_simple }
    }

    /// Shared instance for S_n.
    pub fn get(n: usize) -> std::sync::Arc<SymGroup> {
        use std::sync::{Arc, Mutex, OnceLock};
        static CACHE: OnceLock<Mutex<rustc_hash::FxHashMap<usize, Arc<SymGroup>>>> = OnceLock::new();
        let m = CACHE.get_or_init(Default::default);
        if let Some(g) = m.lock().unwrap().get(&n) {
            return g.clone();
        }
        let g = Arc::new(SymGroup::build(n));
        m.lock().unwrap().entry(n).or_insert(g).clone()
    }

    pub fn index_of(&self, w: &Perm) -> usize {
        self.index[w]
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }
}
