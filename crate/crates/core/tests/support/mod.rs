//! Checks shared by the path property tests and the acceptance run.

use std::collections::BTreeMap;

use flagcsm::bruhat::{enumerate_paths, leq_k, unique_unimodal_path, LabeledPath, PathShape};
use flagcsm::perm::{cycles_through, Perm};

/// (in, de) of a label sequence read as peakless: a strict descent then a strict ascent.
pub fn peakless_shape(labels: &[usize]) -> Option<(usize, usize)> {
    let mut i = 0;
    while i + 1 < labels.len() && labels[i] > labels[i + 1] {
        i += 1;
    }
    let de = i;
    while i + 1 < labels.len() && labels[i] < labels[i + 1] {
        i += 1;
    }
    (i + 1 == labels.len()).then(|| (labels.len() - 1 - de, de))
}

/// (in, de) of a label sequence read as unimodal: a strict ascent then a strict descent.
pub fn unimodal_shape(labels: &[usize]) -> Option<(usize, usize)> {
    let mut i = 0;
    while i + 1 < labels.len() && labels[i] < labels[i + 1] {
        i += 1;
    }
    let inc = i;
    while i + 1 < labels.len() && labels[i] > labels[i + 1] {
        i += 1;
    }
    (i + 1 == labels.len()).then(|| (inc, labels.len() - 1 - inc))
}

type Census = BTreeMap<(Perm, usize, usize), usize>;

fn census(paths: &BTreeMap<Perm, Vec<LabeledPath>>, shape: fn(&[usize]) -> Option<(usize, usize)>) -> Census {
    let mut out = Census::new();
    for (w, ps) in paths {
        for p in ps {
            assert_eq!(p.end(), w);
            let (i, d) = shape(&p.labels()).expect("label pattern");
            assert_eq!((i, d), (p.in_count, p.de_count));
            *out.entry((w.clone(), i, d)).or_default() += 1;
        }
    }
    out
}

fn max_len(n: usize) -> usize {
    2 * n - 1
}

pub fn check_monotone_uniqueness(u: &Perm, k: usize) {
    let n = u.n();
    for r in 0..=n {
        for (shape, decreasing) in [(PathShape::Decreasing(r), true), (PathShape::Increasing(r), false)] {
            for (w, ps) in enumerate_paths(u, k, shape, false) {
                assert_eq!(ps.len(), 1, "u={u} w={w} k={k} r={r}");
                let moved = u.inverse().mul(&w).nonfixed_set();
                let expect = moved.iter().filter(|&&i| (i <= k) == decreasing).count();
                assert_eq!(ps[0].len(), expect, "u={u} w={w} k={k}");
                let l = ps[0].labels();
                assert!(l.windows(2).all(|p| (p[0] > p[1]) == decreasing));
            }
        }
    }
}

/// Returns the number of cycles checked.
pub fn check_unimodal_cycles(u: &Perm, k: usize) -> usize {
    let n = u.n();
    let all = enumerate_paths(u, k, PathShape::UnimodalUpTo(max_len(n)), false);
    let cycles = cycles_through(u, k, n - 1);
    for eta in &cycles {
        let w = u.mul(eta);
        assert!(leq_k(u, &w, k));
        let hits = all.get(&w).map(Vec::len).unwrap_or(0);
        assert_eq!(hits, 1, "u={u} eta={eta} k={k}");
        let p = unique_unimodal_path(u, eta, k).unwrap();
        assert_eq!(p, all[&w][0]);
        assert_eq!(p.len(), eta.nonfixed_set().len() - 1);
        let (_, de) = unimodal_shape(&p.labels()).unwrap();
        assert_eq!(de as i64, eta.k_height(k), "u={u} eta={eta} k={k}");
    }
    cycles.len()
}

pub fn check_equidistribution(u: &Perm, k: usize) {
    let n = u.n();
    let peakless = census(&enumerate_paths(u, k, PathShape::PeaklessUpTo(max_len(n)), false), peakless_shape);
    let unimodal = census(&enumerate_paths(u, k, PathShape::UnimodalUpTo(max_len(n)), false), unimodal_shape);
    assert_eq!(peakless, unimodal, "u={u} k={k}");
}
