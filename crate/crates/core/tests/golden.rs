use clap::Parser;
use flagcsm::cli::{run, Cli};

fn check(args: &str, golden: &str) {
    let cli = Cli::try_parse_from(std::iter::once("flagcsm").chain(args.split_whitespace())).unwrap();
    let out = run(&cli).unwrap();
    assert_eq!(out.trim_end(), golden.trim_end(), "flagcsm {args}");
}

#[test]
fn csm_hook_pieri_23154() {
    check(
        "pieri --n 5 --k 2 --u 23154 --alpha 1 --beta 1 --basis csm",
        include_str!("golden/pieri_csm_23154_s21.txt"),
    );
}

#[test]
fn schubert_hook_pieri_23154() {
    check(
        "pieri --n 5 --k 2 --u 23154 --alpha 1 --beta 1 --basis schubert",
        include_str!("golden/pieri_schubert_23154_s21.txt"),
    );
}

#[test]
fn csm_power_sum_23154() {
    check("mn --n 5 --k 2 --u 23154 --r 3 --basis csm", include_str!("golden/mn_csm_23154_p3.txt"));
}

#[test]
fn schubert_power_sum_23154() {
    check("mn --n 5 --k 2 --u 23154 --r 3 --basis schubert", include_str!("golden/mn_schubert_23154_p3.txt"));
}

#[test]
fn bruhat_graphs_s3() {
    check("graph --n 3 --k 1", include_str!("golden/bruhat_s3_k1.dot"));
    check("graph --n 3 --k 2", include_str!("golden/bruhat_s3_k2.dot"));
}

#[test]
fn grassmannian_hook_pieri_320() {
    check("grassmann --n 7 --k 3 --lambda 3,2 --alpha 0 --beta 2", include_str!("golden/gr_pieri_320_e3.txt"));
    check("grassmann --n 7 --k 3 --lambda 3,2 --alpha 2 --beta 0", include_str!("golden/gr_pieri_320_h3.txt"));
    check("grassmann --n 7 --k 3 --lambda 3,2 --alpha 1 --beta 1", include_str!("golden/gr_pieri_320_s21.txt"));
}

#[test]
fn grassmannian_power_sum_4220() {
    check("grassmann --n 9 --k 4 --lambda 4,2,2 --r 3", include_str!("golden/gr_mn_4220_p3.txt"));
}
