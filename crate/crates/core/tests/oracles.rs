use majorana_codes::constructions::{extend_by_pair, hamming_majorana, strip_weight2_pairs};
use majorana_codes::distance::{
    brute_force_distance, lightest_logical, passes_d4_check, passes_d6_check, DistanceResult,
    RevolvingDoor,
};
use majorana_codes::f2::weight_masks;
use majorana_codes::search::{init_walk, run_campaign, run_walk, CampaignOptions, WalkParams};
use majorana_codes::tables::{five_qubit_majorana, load_fixture, FIXTURES};

#[test]
fn revolving_door_visits_every_subset_once() {
    for n in 0..=12 {
        for t in 0..=n {
            let mut door: Vec<u64> = RevolvingDoor::new(n, t).collect();
            for w in door.windows(2) {
                assert_eq!((w[0] ^ w[1]).count_ones(), 2, "n={n} t={t}");
            }
            let mut lex = weight_masks(n, t);
            door.sort_unstable();
            lex.sort_unstable();
            assert_eq!(door, lex, "n={n} t={t}");
        }
    }
}

#[test]
fn fixtures_pass_their_fast_checks() {
    for f in FIXTURES {
        let c = load_fixture(f.name).unwrap();
        let logicals = c.logical_basis().operators();
        assert!(passes_d4_check(c.stored()) || f.d == 6, "{}", f.name);
        assert_eq!(
            passes_d6_check(c.stored(), &logicals),
            f.d == 6,
            "{}",
            f.name
        );
        let op = lightest_logical(&c, f.d, u128::MAX).unwrap().unwrap();
        assert_eq!(op.weight(), f.d);
        assert!(c.syndrome(&op).unwrap().is_trivial());
        assert!(!c.is_stabilizer(&op));
    }
}

#[test]
fn d6_fixture_at_28_fails_the_d4_check_through_degeneracy() {
    let c = load_fixture("d6/nmaj28").unwrap();
    assert_eq!(c.min_stabilizer_weight().unwrap(), 4);
    assert!(c.is_degenerate(6).unwrap());
    let c = load_fixture("d6/nmaj30").unwrap();
    assert!(!c.is_degenerate(6).unwrap());
}

#[test]
fn mapped_five_qubit_code_passes_d6_check() {
    let c = five_qubit_majorana().unwrap();
    assert!(passes_d6_check(c.stored(), &c.logical_basis().operators()));
    assert_eq!(
        brute_force_distance(&c, 8).unwrap(),
        DistanceResult::Exact(6)
    );
}

#[test]
fn hamming_codes_pass_d4_check_and_extend_keeps_it() {
    assert!(passes_d4_check(hamming_majorana(6).unwrap().stored()));
    assert!(extend_by_pair(&hamming_majorana(6).unwrap()).is_err());
    for m in 3..=5 {
        let h = hamming_majorana(m).unwrap();
        assert!(passes_d4_check(h.stored()), "m={m}");
        let e = extend_by_pair(&h).unwrap();
        assert!(!passes_d4_check(e.stored()));
        assert_eq!(e.num_logical_qubits(), h.num_logical_qubits());
        assert_eq!(strip_weight2_pairs(&e).unwrap(), h);
    }
    let h = hamming_majorana(4).unwrap();
    let e = extend_by_pair(&h).unwrap();
    assert_eq!((e.nmaj(), e.num_logical_qubits()), (18, 3));
    assert_eq!(
        brute_force_distance(&e, 8).unwrap(),
        DistanceResult::Exact(4)
    );
}

#[test]
fn walk_reaches_distance_four_from_distance_two() {
    let p = WalkParams::new(16, 5, 4, 10_000_000, 3);
    let start = init_walk(&p).unwrap().code();
    assert_eq!(
        brute_force_distance(&start, 8).unwrap(),
        DistanceResult::Exact(2)
    );
    let out = run_walk(&p).unwrap();
    let found = out
        .found_code
        .expect("(16,5) is found well within 10^7 steps");
    assert_eq!(
        brute_force_distance(&found, 8).unwrap(),
        DistanceResult::Exact(4)
    );
    assert!(!found.is_degenerate(4).unwrap());
    assert_eq!(found.num_logical_qubits(), 3);
}

#[test]
fn distance_six_walk_finds_codes_that_enumerate_to_six() {
    let p = WalkParams::new(20, 9, 6, 2_000_000, 0);
    let rep = run_campaign(&p, 4, 11, CampaignOptions::default()).unwrap();
    assert!(rep.successes >= 1);
    for (run, c) in &rep.found_codes {
        let d = brute_force_distance(c, 6).unwrap();
        assert_eq!(d, DistanceResult::Exact(6), "run {run}");
    }
}

#[test]
fn tiny_campaigns_never_succeed() {
    for (n, s) in [(8, 3), (10, 4), (12, 5)] {
        let p = WalkParams::new(n, s, 4, 20_000, 0);
        let rep = run_campaign(&p, 8, 5, CampaignOptions::default()).unwrap();
        assert_eq!(rep.successes, 0, "({n},{s})");
    }
}
