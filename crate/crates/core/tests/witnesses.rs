//! The brute-force checkers rediscover incompatibility on their own, at the
//! sizes where the printed counterexamples live.

use cshuffle_core::compat::{
    check_csc, check_csc_shapes, check_sc, replay_linear_witness, replay_witness, verify_counterexample,
};
use cshuffle_core::{CycStatId, StatId, Verdict};

fn cstat(s: &str) -> CycStatId {
    s.parse().unwrap()
}

#[test]
fn small_witnesses_by_full_search() {
    for name in ["ind:Ddes", "ind:ddes", "ind:br", "ind:(Pk,Val)", "ind:(pk,val)"] {
        let st = cstat(name);
        let r = check_csc(&st, 6);
        assert_eq!(r.verdict, Verdict::Incompatible, "{name}");
        let w = r.witness.expect("incompatible reports carry a witness");
        assert!(replay_witness(&st, &w).unwrap(), "{name}");
    }
}

#[test]
fn ddes_witness_matches_catalog_shape() {
    let r = check_csc(&cstat("ind:Ddes"), 5);
    assert_eq!(r.verdict, Verdict::Incompatible);
    assert!(verify_counterexample("Ddes").unwrap().confirmed);
}

#[test]
fn witnesses_at_catalog_sizes() {
    let cases: &[(&str, (usize, usize))] = &[
        ("ind:cmaj", (1, 9)),
        ("ind:(cdesL,cmajL)", (1, 10)),
        ("ind:(br,des)", (1, 8)),
        ("ind:lpk", (1, 8)),
        ("ind:udr", (1, 8)),
        ("ind:(lpk,des)", (1, 8)),
        ("ind:(udr,des)", (1, 8)),
    ];
    for (name, shape) in cases {
        let st = cstat(name);
        let r = check_csc_shapes(&st, &[*shape]);
        assert_eq!(r.verdict, Verdict::Incompatible, "{name} at {shape:?}");
        assert!(replay_witness(&st, r.witness.as_ref().unwrap()).unwrap());
    }
}

#[test]
fn compatible_below_catalog_size() {
    for name in ["ind:cmaj", "ind:lpk", "ind:Lpk", "ind:Epk"] {
        assert!(check_csc(&cstat(name), 6).is_compatible(), "{name}");
    }
}

#[test]
fn linear_incompatibility() {
    for st in [StatId::Ddes, StatId::DdesSet, StatId::Br] {
        let r = check_sc(&st, 5);
        assert_eq!(r.verdict, Verdict::Incompatible, "{st:?}");
        assert!(replay_linear_witness(&st, r.witness.as_ref().unwrap()).unwrap());
    }
}
