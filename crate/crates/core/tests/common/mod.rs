#![allow(dead_code)]

use majorana_codes::f2::{low_ones, orthogonal_complement, EchelonBasis};
use majorana_codes::MajoranaCode;
use rand::Rng;

/// Random valid code built generator by generator: each new generator is a
/// random combination of the orthogonal complement of the current group,
/// rejected if it falls back into the group. Independent of the walk.
pub fn random_code<R: Rng>(nmaj: usize, nstab: usize, rng: &mut R) -> MajoranaCode {
    assert!(nstab >= 1 && nstab <= nmaj / 2);
    let parity = low_ones(nmaj);
    let mut stored: Vec<u64> = Vec::new();
    while stored.len() + 1 < nstab {
        let mut group: Vec<u64> = stored.clone();
        group.push(parity);
        let span: EchelonBasis = group.iter().copied().collect();
        let comp = orthogonal_complement(&group, nmaj);
        let v = comp
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .fold(0u64, |acc, &c| acc ^ c);
        if !span.contains(v) {
            stored.push(v);
        }
    }
    let text: Vec<_> = stored
        .iter()
        .map(|&b| majorana_codes::MajoranaOperator::from_bits(nmaj, b).unwrap())
        .collect();
    MajoranaCode::checked(nmaj, text).expect("generator yields valid codes")
}
