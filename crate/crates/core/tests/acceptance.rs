//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

mod support;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::Parser;
use flagcsm::arith::MPoly;
use flagcsm::cli::{run, scan_positivity, Cli, ScanMode};
use flagcsm::csm::{csm_class, csm_class_noneq, oracle_product};
use flagcsm::grassmann::{parabolic_mn, parabolic_pieri, pieri_by_pushforward, pushforward};
use flagcsm::perm::{grassmannian_from_partition, HookShape, Partition, Perm};
use flagcsm::rht::{rht_count, RhtMethod};
use flagcsm::rules::{mn_csm, mn_schubert, pieri_hook_csm, pieri_hook_schubert, rigidity_lift, LiftKind};
use flagcsm::schubert::{expand_in_schubert, localize, Basis};
use flagcsm::symfun::{power_sum, power_sum_of, schur_hook, schur_hook_of, VarSubset};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

fn cli(args: &str) -> String {
    let cli = Cli::try_parse_from(std::iter::once("flagcsm").chain(args.split_whitespace())).unwrap();
    run(&cli).unwrap()
}

struct Expansion {
    diagonal: (String, MPoly),
    terms: BTreeMap<String, MPoly>,
}

fn parse_table(n: usize, out: &str) -> Expansion {
    let mut lines = out.lines();
    let (d, dc) = lines.next().unwrap().split_once('\t').unwrap();
    let diagonal = (d.trim_end_matches('*').to_string(), MPoly::parse(n, dc).unwrap());
    let terms = lines
        .map(|l| {
            let (w, c) = l.split_once('\t').unwrap();
            (w.to_string(), MPoly::parse(n, c).unwrap())
        })
        .collect();
    Expansion { diagonal, terms }
}

fn expected(n: usize, rows: &[(&str, &str)]) -> BTreeMap<String, MPoly> {
    rows.iter().map(|(w, c)| (w.to_string(), MPoly::parse(n, c).unwrap())).collect()
}

fn t(n: usize, i: usize) -> MPoly {
    MPoly::t(n, i)
}

const CSM_HOOK: &[(&str, &str)] = &[
    ("53124", "t2*t3 + t3^2 + t3*t5"),
    ("43152", "t2*t3 + t3^2 + t3*t4"),
    ("25134", "t2^2 + t2*t3 + t2*t5"),
    ("24153", "t2^2 + t2*t3 + t2*t4"),
    ("53142", "t3"),
    ("35124", "t2 + t3 + t5"),
    ("45132", "t2 + t3 + t4 + t5"),
    ("54123", "t2 + t3 + t4 + t5"),
    ("34152", "t2 + t3 + t4"),
    ("25143", "t2"),
    ("45123", "1"),
    ("54132", "1"),
    ("35142", "1"),
];

const SCHUBERT_HOOK: &[&str] = &["25134", "24153", "35124", "34152", "25143", "45123", "35142"];

const CSM_POWER: &[(&str, &str)] = &[
    ("53124", "t2^2 + t2*t5 + t5^2"),
    ("43152", "t2^2 + t2*t4 + t4^2"),
    ("25134", "t3^2 + t3*t5 + t5^2"),
    ("24153", "t3^2 + t3*t4 + t4^2"),
    ("53142", "t2 + t4 + t5"),
    ("35124", "-t2 - t3 - t5"),
    ("34152", "-t2 - t3 - t4"),
    ("25143", "t3 + t4 + t5"),
    ("54132", "-1"),
    ("35142", "-1"),
    ("45123", "-1"),
];

const SCHUBERT_POWER: &[&str] = &["25134", "24153", "35124", "34152", "25143", "35142", "45123"];

fn restrict(all: &BTreeMap<String, MPoly>, keep: &[&str]) -> BTreeMap<String, MPoly> {
    keep.iter().map(|w| (w.to_string(), all[*w].clone())).collect()
}

fn hook_pieri_23154() {
    let e = parse_table(5, &cli("pieri --n 5 --k 2 --u 23154 --alpha 1 --beta 1 --basis csm --equivariant on"));
    assert_eq!(e.diagonal, ("23154".to_string(), schur_hook_of(5, 1, 1, &[t(5, 2), t(5, 3)])));
    assert_eq!(e.terms.len(), 13);
    assert_eq!(e.terms, expected(5, CSM_HOOK));
}

fn schubert_hook_pieri_23154() {
    let e = parse_table(5, &cli("pieri --n 5 --k 2 --u 23154 --alpha 1 --beta 1 --basis schubert --equivariant on"));
    assert_eq!(e.terms.len() + 1, 8);
    assert_eq!(e.diagonal.1, schur_hook_of(5, 1, 1, &[t(5, 2), t(5, 3)]));
    assert_eq!(e.terms, restrict(&expected(5, CSM_HOOK), SCHUBERT_HOOK));
}

fn power_sum_23154() {
    let p3 = power_sum_of(5, 3, &[t(5, 2), t(5, 3)]);
    let e = parse_table(5, &cli("mn --n 5 --k 2 --u 23154 --r 3 --basis csm"));
    assert_eq!(e.diagonal.1, p3);
    assert_eq!(e.terms.len() + 1, 12);
    assert_eq!(e.terms, expected(5, CSM_POWER));
    let s = parse_table(5, &cli("mn --n 5 --k 2 --u 23154 --r 3 --basis schubert"));
    assert_eq!(s.diagonal.1, p3);
    assert_eq!(s.terms.len() + 1, 8);
    assert_eq!(s.terms, restrict(&e.terms, SCHUBERT_POWER));
}

fn dot_edges(dot: &str) -> BTreeMap<(String, String), (usize, bool)> {
    let mut out = BTreeMap::new();
    for line in dot.lines().filter(|l| l.contains("->")) {
        let q: Vec<&str> = line.split('"').collect();
        let label = q[5].parse().unwrap();
        out.insert((q[1].to_string(), q[3].to_string()), (label, line.contains("dashed")));
    }
    out
}

fn edge_set(rows: &[(&str, &str, usize, bool)]) -> BTreeMap<(String, String), (usize, bool)> {
    rows.iter().map(|&(a, b, l, d)| ((a.to_string(), b.to_string()), (l, d))).collect()
}

fn bruhat_graphs_s3() {
    let k1 = edge_set(&[
        ("123", "213", 1, false),
        ("213", "312", 2, false),
        ("132", "231", 1, false),
        ("132", "312", 1, false),
        ("231", "321", 2, false),
        ("123", "321", 1, true),
    ]);
    let k2 = edge_set(&[
        ("123", "132", 2, false),
        ("213", "312", 2, false),
        ("132", "231", 1, false),
        ("213", "231", 1, false),
        ("312", "321", 1, false),
        ("123", "321", 1, true),
    ]);
    assert_eq!(dot_edges(&cli("graph --n 3 --k 1")), k1);
    assert_eq!(dot_edges(&cli("graph --n 3 --k 2")), k2);
}

fn check_against_oracle(u: &Perm, k: usize, hook: HookShape, r: usize, eq: bool) {
    let n = u.n();
    let g = schur_hook(n, hook.alpha, hook.beta, &VarSubset::x_first(k));
    let p = power_sum(n, r as u32, &VarSubset::x_first(k));
    let ctx = format!("u={u} k={k} {hook:?} r={r} eq={eq}");
    assert_eq!(pieri_hook_csm(u, k, hook, eq).unwrap(), oracle_product(u, &g, Basis::Csm, eq).unwrap(), "{ctx}");
    assert_eq!(pieri_hook_schubert(u, k, hook, eq).unwrap(), oracle_product(u, &g, Basis::Schubert, eq).unwrap(), "{ctx}");
    assert_eq!(mn_csm(u, k, r, eq).unwrap(), oracle_product(u, &p, Basis::Csm, eq).unwrap(), "{ctx}");
    assert_eq!(mn_schubert(u, k, r, eq).unwrap(), oracle_product(u, &p, Basis::Schubert, eq).unwrap(), "{ctx}");
}

fn oracle_equivalence() {
    let hooks = HookShape::up_to(2);
    for u in Perm::all(4) {
        for k in 1..4 {
            for eq in [true, false] {
                for &h in &hooks {
                    let g = schur_hook(4, h.alpha, h.beta, &VarSubset::x_first(k));
                    assert_eq!(pieri_hook_csm(&u, k, h, eq).unwrap(), oracle_product(&u, &g, Basis::Csm, eq).unwrap());
                    assert_eq!(pieri_hook_schubert(&u, k, h, eq).unwrap(), oracle_product(&u, &g, Basis::Schubert, eq).unwrap());
                }
                for r in 1..=3 {
                    let p = power_sum(4, r as u32, &VarSubset::x_first(k));
                    assert_eq!(mn_csm(&u, k, r, eq).unwrap(), oracle_product(&u, &p, Basis::Csm, eq).unwrap());
                    assert_eq!(mn_schubert(&u, k, r, eq).unwrap(), oracle_product(&u, &p, Basis::Schubert, eq).unwrap());
                }
            }
        }
    }
    let s5 = Perm::all(5);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let u = &s5[rng.random_range(0..s5.len())];
        let k = rng.random_range(1..5);
        let hook = hooks[rng.random_range(0..hooks.len())];
        let r = rng.random_range(1..=3);
        check_against_oracle(u, k, hook, r, true);
    }
}

fn rigidity() {
    for u in Perm::all(4) {
        for k in 1..4 {
            let a: Vec<usize> = (1..=k).collect();
            for h in HookShape::up_to(2) {
                let eq = pieri_hook_csm(&u, k, h, true).unwrap();
                assert_eq!(rigidity_lift(LiftKind::Hook(h), &u, &a).unwrap(), eq);
                assert_eq!(eq.specialize(), pieri_hook_csm(&u, k, h, false).unwrap());
                let s = pieri_hook_schubert(&u, k, h, true).unwrap();
                assert_eq!(s.specialize(), pieri_hook_schubert(&u, k, h, false).unwrap());
            }
            for r in 1..=3 {
                let eq = mn_csm(&u, k, r, true).unwrap();
                assert_eq!(rigidity_lift(LiftKind::PowerSum(r), &u, &a).unwrap(), eq);
                assert_eq!(eq.specialize(), mn_csm(&u, k, r, false).unwrap());
                let s = mn_schubert(&u, k, r, true).unwrap();
                assert_eq!(s.specialize(), mn_schubert(&u, k, r, false).unwrap());
            }
        }
    }
}

fn path_theorems() {
    for u in Perm::all(4) {
        for k in 1..4 {
            support::check_monotone_uniqueness(&u, k);
            support::check_equidistribution(&u, k);
        }
    }
    let mut cycles = 0;
    for u in Perm::all(5) {
        for k in 1..5 {
            cycles += support::check_unimodal_cycles(&u, k);
        }
    }
    assert!(cycles > 1000, "only {cycles} cycles");
}

fn part(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

fn grassmannian_examples() {
    let lam = part("3,2,0");
    let at = |a, b| parabolic_pieri(&lam, 3, 7, HookShape::new(a, b)).unwrap()[&part("4,4,4")];
    assert_eq!((at(0, 2), at(2, 0), at(1, 1)), (2, 4, 8));
    let s21 = parabolic_pieri(&lam, 3, 7, HookShape::new(1, 1)).unwrap();
    assert_eq!(s21.len(), 11);
    assert_eq!(s21.values().sum::<u64>(), 31);

    let n = 9;
    let mn = parabolic_mn(&part("4,2,2,0"), 4, n, 3).unwrap();
    let want: BTreeMap<Partition, MPoly> = [
        ("4,2,2,0", power_sum_of(n, 3, &[t(n, 1), t(n, 4), t(n, 5), t(n, 8)])),
        ("5,2,2,0", t(n, 8) * t(n, 8) + t(n, 8) * t(n, 9) + t(n, 9) * t(n, 9)),
        ("4,3,2,0", t(n, 5) * t(n, 5) + t(n, 5) * t(n, 6) + t(n, 6) * t(n, 6)),
        ("4,2,2,1", t(n, 1) * t(n, 1) + t(n, 1) * t(n, 2) + t(n, 2) * t(n, 2)),
        ("4,4,2,0", t(n, 5) + t(n, 6) + t(n, 7)),
        ("4,3,3,0", -(t(n, 4) + t(n, 5) + t(n, 6))),
        ("4,2,2,2", t(n, 1) + t(n, 2) + t(n, 3)),
        ("4,4,3,0", MPoly::int(n, -1)),
    ]
    .into_iter()
    .map(|(p, c)| (part(p), c))
    .collect();
    assert_eq!(mn, want);

    let (k, n) = (2, 5);
    for lam in Partition::in_rectangle(k, n - k) {
        for h in HookShape::up_to(2) {
            assert_eq!(pieri_by_pushforward(&lam, k, n, h).unwrap(), parabolic_pieri(&lam, k, n, h).unwrap(), "{lam} {h:?}");
        }
        let w = grassmannian_from_partition(&lam, k, n).unwrap();
        for r in 1..=3 {
            let flag = mn_schubert(&w, k, r, true).unwrap();
            assert_eq!(pushforward(&flag, k), parabolic_mn(&lam, k, n, r).unwrap(), "{lam} r={r}");
        }
    }
}

fn rim_hook_counts() {
    let (outer, inner) = (part("4,4,1"), part("1"));
    for m in [RhtMethod::Enumerate, RhtMethod::Limit, RhtMethod::Maj] {
        assert_eq!(rht_count(&outer, &inner, 2, m).unwrap(), 4, "{m:?}");
    }
    let mut nonzero = 0;
    for outer in Partition::in_rectangle(3, 4) {
        for inner in Partition::in_rectangle(3, 4).into_iter().filter(|i| outer.contains(i)) {
            for r in [2, 3] {
                let d = outer.size() - inner.size();
                if d == 0 || d % r != 0 {
                    continue;
                }
                let e = rht_count(&outer, &inner, r, RhtMethod::Enumerate).unwrap();
                assert_eq!(rht_count(&outer, &inner, r, RhtMethod::Limit).unwrap(), e, "{outer}/{inner} r={r}");
                assert_eq!(rht_count(&outer, &inner, r, RhtMethod::Maj).unwrap(), e, "{outer}/{inner} r={r}");
                nonzero += usize::from(e > 0);
            }
        }
    }
    assert!(nonzero > 0);
    let mut zeros = 0;
    for m in 1..=12 {
        for big in Partition::of_size(m) {
            for r in [2, 3] {
                if m % r != 0 {
                    continue;
                }
                let e = rht_count(&big, &Partition::empty(), r, RhtMethod::Enumerate).unwrap();
                assert_eq!(rht_count(&big, &Partition::empty(), r, RhtMethod::Hook).unwrap(), e, "{big} r={r}");
                zeros += usize::from(e == 0);
            }
        }
    }
    assert!(zeros > 0);
}

fn localization_certificates() {
    let n = 4;
    let id = Perm::identity(n);
    for w in Perm::all(n) {
        let at_id = localize(&csm_class(&w), &id);
        if w.is_identity() {
            let mut want = MPoly::one(n);
            for i in 1..=n {
                for j in i + 1..=n {
                    want = want * (MPoly::one(n) + t(n, i) - t(n, j));
                }
            }
            assert_eq!(at_id, want);
        } else {
            assert!(at_id.is_zero(), "{w}");
        }
        let low = expand_in_schubert(&csm_class_noneq(&w).lowest_component(), false).unwrap();
        assert_eq!(low.len(), 1, "{w}");
        assert_eq!(low.get(&w), MPoly::one(n), "{w}");
    }
}

fn positivity_scans() {
    for (n, mode, checked) in [(3, ScanMode::Product, 36), (4, ScanMode::Product, 576), (4, ScanMode::SchubertExpansion, 24)] {
        let report = scan_positivity(n, mode).unwrap();
        assert_eq!(report.checked, checked);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
    }
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

fn main() {
    let criteria: [(&str, Option<u64>, fn()); 11] = [
        ("equivariant CSM hook Pieri from 23154", Some(5), hook_pieri_23154),
        ("equivariant Schubert hook Pieri from 23154", Some(5), schubert_hook_pieri_23154),
        ("CSM and Schubert power sum rule from 23154", Some(5), power_sum_23154),
        ("labeled 1- and 2-Bruhat graphs on S3", None, bruhat_graphs_s3),
        ("rules equal the oracle on S4 and 50 random S5 cases", Some(600), oracle_equivalence),
        ("rigidity lifts and t=0 specialization on S4", None, rigidity),
        ("path uniqueness and equidistribution", None, path_theorems),
        ("Grassmannian Pieri, power sum rule and pushforward", None, grassmannian_examples),
        ("rim hook tableau counts", Some(120), rim_hook_counts),
        ("localization at the identity and lowest degree", None, localization_certificates),
        ("positivity scans on S3 and S4", None, positivity_scans),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f));
        let took = start.elapsed();
        let verdict = match (result, budget) {
            (Err(e), _) => Err(panic_message(e)),
            (Ok(()), Some(s)) if took > Duration::from_secs(s) => Err(format!("over the {s} s budget")),
            (Ok(()), _) => Ok(()),
        };
        match verdict {
            Ok(()) => println!("criterion {:>2}  PASS  {:>8.2}s  {name}", i + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}  FAIL  {:>8.2}s  {name}: {msg}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
