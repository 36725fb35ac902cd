mod common;

use majorana_codes::code::MajoranaCode;
use majorana_codes::constructions::{
    extend_by_pair, map_qubit_code, strip_weight2_pairs, Pauli, QubitPauliOperator,
};
use majorana_codes::distance::{
    brute_force_distance, columns_distinct, passes_d4_check, passes_d6_check, D4MaskCheck,
    D6ColumnCheck, D6MaskCheck, DistanceResult,
};
use majorana_codes::f2::{
    anticommutes, f2_rank, low_ones, overlap_bit, replace_bits, EchelonBasis, MajoranaOperator,
    ReplacementMask,
};
use majorana_codes::mcode::{read_mcode, write_mcode};
use majorana_codes::search::{init_walk, WalkParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn op(nmaj: usize, bits: u64) -> MajoranaOperator {
    MajoranaOperator::from_bits(nmaj, bits & low_ones(nmaj)).unwrap()
}

fn mask_strategy(nmaj: usize) -> impl Strategy<Value = u64> {
    proptest::sample::subsequence((0..nmaj).collect::<Vec<_>>(), 4)
        .prop_map(|m| m.iter().fold(0u64, |acc, &a| acc | 1 << a))
}

prop_compose! {
    fn vectors_and_mask()(nmaj in 5usize..=64)
        (nmaj in Just(nmaj), m in mask_strategy(nmaj), xs in prop::collection::vec(any::<u64>(), 1..8))
        -> (usize, u64, Vec<u64>)
    {
        (nmaj, m, xs.into_iter().map(|x| x & low_ones(nmaj)).collect())
    }
}

prop_compose! {
    fn small_code(max_half: usize)(half in 3usize..=max_half)
        (half in Just(half), frac in 0.0f64..1.0, seed in any::<u64>()) -> MajoranaCode
    {
        let nmaj = 2 * half;
        let nstab = 1 + ((frac * half as f64) as usize).min(half - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_code(nmaj, nstab, &mut rng)
    }
}

fn normalizer_has_weight2(c: &MajoranaCode) -> bool {
    let n = c.nmaj();
    let gens = c.stored_bits();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            let v = (1u64 << a) | (1u64 << b);
            v != low_ones(n) && gens.iter().all(|&g| !overlap_bit(v, g))
        })
    })
}

proptest! {
    #[test]
    fn replacement_is_linear_involutive_and_form_preserving((nmaj, m, xs) in vectors_and_mask()) {
        let parity = low_ones(nmaj);
        prop_assert_eq!(replace_bits(parity, m), parity);
        for &x in &xs {
            prop_assert_eq!(replace_bits(replace_bits(x, m), m), x);
            prop_assert_eq!(replace_bits(x, m).count_ones() % 2, x.count_ones() % 2);
            for &y in &xs {
                prop_assert_eq!(replace_bits(x ^ y, m), replace_bits(x, m) ^ replace_bits(y, m));
                prop_assert_eq!(overlap_bit(replace_bits(x, m), replace_bits(y, m)), overlap_bit(x, y));
            }
        }
        let mask = ReplacementMask::from_bits(nmaj, m).unwrap();
        let ops: Vec<_> = xs.iter().map(|&x| op(nmaj, x)).collect();
        let moved: Vec<_> = ops
            .iter()
            .map(|o| majorana_codes::f2::apply_replacement(o, &mask).unwrap())
            .collect();
        prop_assert_eq!(f2_rank(&ops), f2_rank(&moved));
    }

    #[test]
    fn anticommutation_is_symmetric_and_additive(
        nmaj in 2usize..=64,
        a in any::<u64>(), b in any::<u64>(), c in any::<u64>(),
    ) {
        let (a, b, c) = (op(nmaj, a), op(nmaj, b), op(nmaj, c));
        prop_assert_eq!(anticommutes(&a, &b).unwrap(), anticommutes(&b, &a).unwrap());
        let expected = (a.weight() * b.weight() + (a.bits() & b.bits()).count_ones()) % 2 == 1;
        prop_assert_eq!(anticommutes(&a, &b).unwrap(), expected);
        if a.weight() % 2 == 0 {
            let bc = b.mul(&c).unwrap();
            prop_assert_eq!(
                anticommutes(&a, &bc).unwrap(),
                anticommutes(&a, &b).unwrap() ^ anticommutes(&a, &c).unwrap()
            );
        }
    }

    #[test]
    fn syndromes_add(c in small_code(16), e1 in any::<u64>(), e2 in any::<u64>()) {
        let n = c.nmaj();
        let (e1, e2) = (op(n, e1), op(n, e2));
        let s = c.syndrome(&e1.mul(&e2).unwrap()).unwrap();
        prop_assert_eq!(s, c.syndrome(&e1).unwrap() ^ c.syndrome(&e2).unwrap());
        for (t, g) in c.generators().iter().enumerate() {
            prop_assert_eq!(s.get(t), anticommutes(&e1.mul(&e2).unwrap(), g).unwrap());
        }
    }

    #[test]
    fn random_codes_are_valid_with_paired_logicals(c in small_code(32)) {
        prop_assert!(c.is_valid());
        let basis = c.logical_basis();
        prop_assert_eq!(basis.len(), c.num_logical_qubits());
        prop_assert!(basis.check(&c).is_empty(), "{:?}", basis.check(&c));
        let canon = c.canonicalized();
        prop_assert!(canon.same_group(&c));
        prop_assert_eq!(read_mcode(&write_mcode(&c)).unwrap(), c);
    }

    #[test]
    fn d4_checks_agree_with_enumeration(c in small_code(8)) {
        let n = c.nmaj();
        let stored = c.stored_bits();
        let column = passes_d4_check(c.stored());
        prop_assert_eq!(column, columns_distinct(n, &stored));
        prop_assert_eq!(column, D4MaskCheck::new(n).passes(&stored));
        prop_assert_eq!(column, !normalizer_has_weight2(&c));
        let d = brute_force_distance(&c, n as u32).unwrap();
        let msw = c.min_stabilizer_weight().unwrap();
        prop_assert_eq!(column, d != DistanceResult::Exact(2) && msw > 2, "d={} msw={}", d, msw);
    }

    #[test]
    fn d6_checks_agree_with_enumeration(c in small_code(9)) {
        let n = c.nmaj();
        let stored = c.stored_bits();
        let logicals = c.logical_basis().bits();
        let column = D6ColumnCheck::new().passes(n, &stored, &logicals);
        prop_assert_eq!(column, D6MaskCheck::new(n).passes(&stored, &logicals));
        prop_assert_eq!(column, passes_d6_check(c.stored(), &c.logical_basis().operators()));
        let d = brute_force_distance(&c, 4).unwrap();
        let light = matches!(d, DistanceResult::Exact(w) if w < 6);
        prop_assert_eq!(column, !light, "d={}", d);
    }

    #[test]
    fn walk_states_stay_valid_and_checks_match(
        half in 5usize..=9,
        frac in 0.0f64..1.0,
        seed in any::<u64>(),
        steps in 0usize..400,
        six in any::<bool>(),
    ) {
        let nmaj = 2 * half;
        let nstab = 2 + ((frac * (half - 1) as f64) as usize).min(half - 3);
        let d = if six { 6 } else { 4 };
        let mut s = init_walk(&WalkParams::new(nmaj, nstab, d, 1, seed)).unwrap();
        for _ in 0..steps {
            s.step();
        }
        let c = s.code();
        prop_assert!(c.is_valid());
        let wmax = if six { 4 } else { 2 };
        let dist = brute_force_distance(&c, wmax).unwrap();
        if six {
            let x = s.logical_operators();
            let k = c.num_logical_qubits();
            let basis = majorana_codes::LogicalBasis {
                x_ops: x[..k].to_vec(),
                z_ops: x[k..].to_vec(),
            };
            prop_assert!(basis.check(&c).is_empty());
            prop_assert_eq!(s.passes(), !matches!(dist, DistanceResult::Exact(w) if w < 6));
        } else {
            let msw = c.min_stabilizer_weight().unwrap();
            prop_assert_eq!(s.passes(), dist != DistanceResult::Exact(2) && msw > 2);
        }
    }

    #[test]
    fn extend_and_strip_keep_k_and_distance(c in small_code(7)) {
        let n = c.nmaj();
        let d = brute_force_distance(&c, n as u32).unwrap();
        let e = extend_by_pair(&c).unwrap();
        prop_assert_eq!(e.num_logical_qubits(), c.num_logical_qubits());
        prop_assert_eq!(brute_force_distance(&e, n as u32 + 2).unwrap(), d);
        let s = strip_weight2_pairs(&e).unwrap();
        prop_assert_eq!(s.num_logical_qubits(), c.num_logical_qubits());
        prop_assert_eq!(brute_force_distance(&s, n as u32).unwrap(), d);
        let sc = strip_weight2_pairs(&c).unwrap();
        prop_assert_eq!(sc.num_logical_qubits(), c.num_logical_qubits());
        if c.min_stabilizer_weight().unwrap() > 2 {
            prop_assert!(s.same_group(&c));
        }
    }
}

// Qubit-side oracle: Paulis as (x | z << n) bit vectors.

fn pauli_bits(p: &QubitPauliOperator) -> u64 {
    let n = p.nqub();
    p.letters().iter().enumerate().fold(0, |acc, (i, l)| {
        let (x, z) = match l {
            Pauli::I => (0, 0),
            Pauli::X => (1, 0),
            Pauli::Z => (0, 1),
            Pauli::Y => (1, 1),
        };
        acc | (x << i) | (z << (i + n))
    })
}

fn symplectic(a: u64, b: u64, n: usize) -> bool {
    let lo = low_ones(n);
    (((a & lo) & (b >> n)) ^ ((a >> n) & (b & lo))).count_ones() % 2 == 1
}

fn qubit_distance(n: usize, stabs: &[u64]) -> Option<u32> {
    let span: EchelonBasis = stabs.iter().copied().collect();
    (1u64..1 << (2 * n))
        .filter(|&p| stabs.iter().all(|&s| !symplectic(p, s, n)) && !span.contains(p))
        .map(|p| ((p | (p >> n)) & low_ones(n)).count_ones())
        .min()
}

fn letters(n: usize, bits: u64) -> QubitPauliOperator {
    let s: String = (0..n)
        .map(|i| match ((bits >> i) & 1, (bits >> (i + n)) & 1) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (0, 1) => 'Z',
            _ => 'Y',
        })
        .collect();
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mapping_doubles_qubit_distance(n in 1usize..=4, draws in prop::collection::vec(any::<u64>(), 0..6)) {
        let mut stabs: Vec<u64> = Vec::new();
        for d in draws {
            let p = d & low_ones(2 * n);
            if p != 0 && stabs.iter().all(|&s| !symplectic(p, s, n)) {
                stabs.push(p);
            }
        }
        let paulis: Vec<_> = stabs.iter().map(|&b| letters(n, b)).collect();
        for (p, &b) in paulis.iter().zip(&stabs) {
            prop_assert_eq!(pauli_bits(p), b);
        }
        let c = map_qubit_code(n, &paulis).unwrap();
        let rank = f2_rank(
            &stabs.iter().map(|&b| op(2 * n, b)).collect::<Vec<_>>()
        );
        prop_assert_eq!(c.num_logical_qubits(), n - rank);
        let d = brute_force_distance(&c, 4 * n as u32).unwrap();
        match qubit_distance(n, &stabs) {
            Some(q) => prop_assert_eq!(d, DistanceResult::Exact(2 * q)),
            None => prop_assert_eq!(d, DistanceResult::NoLogicals),
        }
    }
}
