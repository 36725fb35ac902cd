//! Majorana stabilizer codes: validation, syndromes, degeneracy and logical operators.
//!
//! A code is a self-orthogonal subspace of F₂^nmaj that always contains the
//! fermion parity vector. Only the remaining generators are stored; parity is
//! an implicit extra generator and is counted in `N_stab`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::{low_ones, orthogonal_complement, overlap_bit, EchelonBasis, MajoranaOperator};

/// Default bound on `N_stab` for full group enumeration (2^20 elements).
pub const DEFAULT_GROUP_CAP_BITS: usize = 20;

/// One reason a list of generators fails to define a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    OddModeCount(usize),
    ZeroGenerator { index: usize },
    OddWeight { index: usize, weight: u32 },
    AnticommutingPair { first: usize, second: usize },
    DependentGenerator { index: usize },
    ParityInSpan { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OddModeCount(n) => write!(f, "odd number of modes ({n})"),
            Violation::ZeroGenerator { index } => write!(f, "generator {index} is the identity"),
            Violation::OddWeight { index, weight } => {
                write!(f, "generator {index} has odd weight {weight}")
            }
            Violation::AnticommutingPair { first, second } => {
                write!(f, "generators {first} and {second} anticommute")
            }
            Violation::DependentGenerator { index } => {
                write!(f, "generator {index} is a product of earlier generators")
            }
            Violation::ParityInSpan { index } => write!(
                f,
                "generator {index} completes fermion parity from earlier generators"
            ),
        }
    }
}

/// Size parameters of a valid code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub nmaj: usize,
    pub nstab: usize,
    pub k: usize,
}

/// A Majorana stabilizer code given by its stored generator list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MajoranaCode {
    nmaj: usize,
    stored: Vec<MajoranaOperator>,
}

impl MajoranaCode {
    /// Builds a code without checking the group conditions; only lengths are checked.
    /// Call [`MajoranaCode::validate`] before relying on the code invariants.
    pub fn new(nmaj: usize, stored: Vec<MajoranaOperator>) -> Result<Self> {
        MajoranaOperator::identity(nmaj)?;
        for g in &stored {
            if g.nmaj() != nmaj {
                return Err(Error::LengthMismatch {
                    left: nmaj,
                    right: g.nmaj(),
                });
            }
        }
        Ok(Self { nmaj, stored })
    }

    /// Builds a code and rejects it unless it validates.
    pub fn checked(nmaj: usize, stored: Vec<MajoranaOperator>) -> Result<Self> {
        let code = Self::new(nmaj, stored)?;
        code.validate().map_err(Error::InvalidCode)?;
        Ok(code)
    }

    /// The code whose only stabilizer is fermion parity.
    pub fn parity_only(nmaj: usize) -> Result<Self> {
        Self::checked(nmaj, Vec::new())
    }

    pub(crate) fn from_raw(nmaj: usize, stored: &[u64]) -> Self {
        let stored = stored
            .iter()
            .map(|&b| MajoranaOperator::from_bits(nmaj, b).expect("bits within nmaj"))
            .collect();
        Self { nmaj, stored }
    }

    #[inline]
    pub fn nmaj(&self) -> usize {
        self.nmaj
    }

    /// The stored generators (fermion parity excluded).
    pub fn stored(&self) -> &[MajoranaOperator] {
        &self.stored
    }

    pub fn stored_bits(&self) -> Vec<u64> {
        self.stored.iter().map(|g| g.bits()).collect()
    }

    pub fn parity(&self) -> MajoranaOperator {
        MajoranaOperator::parity(self.nmaj).expect("nmaj already checked")
    }

    /// Stored generators followed by fermion parity.
    pub fn generators(&self) -> Vec<MajoranaOperator> {
        let mut g = self.stored.clone();
        g.push(self.parity());
        g
    }

    pub fn nstab(&self) -> usize {
        self.stored.len() + 1
    }

    /// Number of logical qubits, `nmaj/2 − N_stab`; negative values clamp to zero.
    pub fn num_logical_qubits(&self) -> usize {
        (self.nmaj / 2).saturating_sub(self.nstab())
    }

    pub fn params(&self) -> CodeParams {
        CodeParams {
            nmaj: self.nmaj,
            nstab: self.nstab(),
            k: self.num_logical_qubits(),
        }
    }

    /// Checks every group condition, collecting all violations found.
    pub fn validate(&self) -> std::result::Result<CodeParams, Vec<Violation>> {
        let mut out = Vec::new();
        if self.nmaj == 0 || self.nmaj % 2 == 1 {
            out.push(Violation::OddModeCount(self.nmaj));
        }
        for (index, g) in self.stored.iter().enumerate() {
            if g.bits() == 0 {
                out.push(Violation::ZeroGenerator { index });
            } else if g.weight() % 2 == 1 {
                out.push(Violation::OddWeight {
                    index,
                    weight: g.weight(),
                });
            }
        }
        for i in 0..self.stored.len() {
            for j in i + 1..self.stored.len() {
                if overlap_bit(self.stored[i].bits(), self.stored[j].bits()) {
                    out.push(Violation::AnticommutingPair {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let parity = low_ones(self.nmaj);
        let mut basis = EchelonBasis::new();
        for (index, g) in self.stored.iter().enumerate() {
            if g.bits() == 0 {
                continue;
            }
            if !basis.insert(g.bits()) {
                out.push(Violation::DependentGenerator { index });
            } else if basis.contains(parity) {
                out.push(Violation::ParityInSpan { index });
            }
        }
        if out.is_empty() && self.nstab() > self.nmaj / 2 {
            // unreachable for a self-orthogonal space containing parity,
            // kept so a negative K can never be reported as valid
            out.push(Violation::DependentGenerator {
                index: self.stored.len() - 1,
            });
        }
        if out.is_empty() {
            Ok(self.params())
        } else {
            Err(out)
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Echelon basis of the whole stabilizer group (stored generators and parity).
    pub fn stabilizer_basis(&self) -> EchelonBasis {
        self.stored
            .iter()
            .map(|g| g.bits())
            .chain(std::iter::once(low_ones(self.nmaj)))
            .collect()
    }

    /// Whether `op` is (up to sign) an element of the stabilizer group.
    pub fn is_stabilizer(&self, op: &MajoranaOperator) -> bool {
        self.stabilizer_basis().contains(op.bits())
    }

    /// Bit per generator, stored-list order then parity, set where `e` anticommutes.
    pub fn syndrome(&self, e: &MajoranaOperator) -> Result<Syndrome> {
        if e.nmaj() != self.nmaj {
            return Err(Error::LengthMismatch {
                left: self.nmaj,
                right: e.nmaj(),
            });
        }
        let mut bits = 0u64;
        for (t, g) in self.generators().iter().enumerate() {
            if crate::f2::anticommutes(e, g)? {
                bits |= 1 << t;
            }
        }
        Ok(Syndrome {
            len: self.nstab(),
            bits,
        })
    }

    /// Whether all single-mode errors γ_a produce pairwise distinct syndromes.
    pub fn single_mode_syndromes_distinct(&self) -> bool {
        let mut seen: Vec<u64> = (0..self.nmaj)
            .map(|a| {
                let e = MajoranaOperator::single_mode(self.nmaj, a).expect("mode in range");
                self.syndrome(&e).expect("same length").bits
            })
            .collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Visits every element of the stabilizer group except the identity.
    pub fn for_each_stabilizer(&self, cap_bits: usize, mut f: impl FnMut(u64)) -> Result<()> {
        let gens: Vec<u64> = self
            .stored
            .iter()
            .map(|g| g.bits())
            .chain(std::iter::once(low_ones(self.nmaj)))
            .collect();
        if gens.len() > cap_bits {
            return Err(Error::CapExceeded {
                requested: 1u128 << gens.len(),
                cap: 1u128 << cap_bits,
            });
        }
        // Gray-code walk: one XOR per element
        let mut cur = 0u64;
        for i in 1u64..(1u64 << gens.len()) {
            cur ^= gens[i.trailing_zeros() as usize];
            f(cur);
        }
        Ok(())
    }

    /// Minimum weight over the nontrivial stabilizer group elements.
    pub fn min_stabilizer_weight(&self) -> Result<u32> {
        self.min_stabilizer_weight_with_cap(DEFAULT_GROUP_CAP_BITS)
    }

    pub fn min_stabilizer_weight_with_cap(&self, cap_bits: usize) -> Result<u32> {
        let mut best = u32::MAX;
        self.for_each_stabilizer(cap_bits, |v| best = best.min(v.count_ones()))?;
        Ok(best)
    }

    /// Whether some nontrivial stabilizer has weight below `d`.
    pub fn is_degenerate(&self, d: u32) -> Result<bool> {
        Ok(self.min_stabilizer_weight()? < d)
    }

    /// A symplectic basis of logical operators.
    ///
    /// The normalizer (vectors orthogonal to every generator) is split into the
    /// stabilizer group plus a complement, and the complement is paired up by
    /// symplectic Gram–Schmidt. The result depends only on the stored list.
    pub fn logical_basis(&self) -> LogicalBasis {
        let gens: Vec<u64> = self
            .stored
            .iter()
            .map(|g| g.bits())
            .chain(std::iter::once(low_ones(self.nmaj)))
            .collect();
        let normalizer = orthogonal_complement(&gens, self.nmaj);
        let mut span = self.stabilizer_basis();
        let mut pool: Vec<u64> = normalizer.into_iter().filter(|&v| span.insert(v)).collect();

        let mut x_ops = Vec::new();
        let mut z_ops = Vec::new();
        while let Some(x) = pool.first().copied() {
            pool.remove(0);
            let Some(pos) = pool.iter().position(|&v| overlap_bit(x, v)) else {
                // x would lie in the radical, i.e. in the stabilizer group
                unreachable!("normalizer form is nondegenerate modulo the stabilizers");
            };
            let z = pool.remove(pos);
            for w in &mut pool {
                let mut next = *w;
                if overlap_bit(*w, z) {
                    next ^= x;
                }
                if overlap_bit(*w, x) {
                    next ^= z;
                }
                *w = next;
            }
            x_ops.push(self.op(x));
            z_ops.push(self.op(z));
        }
        LogicalBasis { x_ops, z_ops }
    }

    fn op(&self, bits: u64) -> MajoranaOperator {
        MajoranaOperator::from_bits(self.nmaj, bits).expect("bits within nmaj")
    }

    /// Same group with each stored generator replaced by the lighter of `g`
    /// and `g·parity` (ties go to the lexicographically smaller bit string).
    pub fn canonicalized(&self) -> Self {
        let parity = low_ones(self.nmaj);
        let stored = self
            .stored
            .iter()
            .map(|g| {
                let alt = self.op(g.bits() ^ parity);
                match g.weight().cmp(&alt.weight()) {
                    std::cmp::Ordering::Less => *g,
                    std::cmp::Ordering::Greater => alt,
                    std::cmp::Ordering::Equal => {
                        if g.to_string() <= alt.to_string() {
                            *g
                        } else {
                            alt
                        }
                    }
                }
            })
            .collect();
        Self {
            nmaj: self.nmaj,
            stored,
        }
    }

    /// Whether two codes on the same modes have the same stabilizer group.
    pub fn same_group(&self, other: &Self) -> bool {
        if self.nmaj != other.nmaj || self.nstab() != other.nstab() {
            return false;
        }
        let mine = self.stabilizer_basis();
        let theirs = other.stabilizer_basis();
        mine.rank() == theirs.rank() && other.stored.iter().all(|g| mine.contains(g.bits()))
    }
}

/// Free-function form of [`MajoranaCode::validate`].
pub fn validate(c: &MajoranaCode) -> std::result::Result<CodeParams, Vec<Violation>> {
    c.validate()
}

/// Free-function form of [`MajoranaCode::num_logical_qubits`].
pub fn num_logical_qubits(c: &MajoranaCode) -> usize {
    c.num_logical_qubits()
}

/// Which generators an error anticommutes with; the parity bit comes last.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Syndrome {
    len: usize,
    bits: u64,
}

impl Syndrome {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, t: usize) -> bool {
        t < self.len && (self.bits >> t) & 1 == 1
    }

    pub fn parity_bit(&self) -> bool {
        self.get(self.len - 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.bits == 0
    }
}

impl std::ops::BitXor for Syndrome {
    type Output = Syndrome;

    fn bitxor(self, rhs: Self) -> Self {
        assert_eq!(self.len, rhs.len, "syndromes of different codes");
        Syndrome {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in 0..self.len {
            f.write_str(if self.get(t) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Paired logical operators: `x_ops[i]` anticommutes exactly with `z_ops[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LogicalBasis {
    pub x_ops: Vec<MajoranaOperator>,
    pub z_ops: Vec<MajoranaOperator>,
}

impl LogicalBasis {
    pub fn len(&self) -> usize {
        self.x_ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x_ops.is_empty()
    }

    /// All 2K operators, X block first.
    pub fn operators(&self) -> Vec<MajoranaOperator> {
        self.x_ops.iter().chain(&self.z_ops).copied().collect()
    }

    pub fn bits(&self) -> Vec<u64> {
        self.operators().iter().map(|o| o.bits()).collect()
    }

    /// Lists every broken [`LogicalBasis`] invariant relative to `code`.
    pub fn check(&self, code: &MajoranaCode) -> Vec<String> {
        let mut problems = Vec::new();
        let k = code.num_logical_qubits();
        if self.x_ops.len() != k || self.z_ops.len() != k {
            problems.push(format!(
                "expected {k} pairs, got {}x/{}z",
                self.x_ops.len(),
                self.z_ops.len()
            ));
        }
        let gens = code.generators();
        let stab = code.stabilizer_basis();
        let ops = self.operators();
        for (i, o) in ops.iter().enumerate() {
            if gens.iter().any(|g| overlap_bit(o.bits(), g.bits())) {
                problems.push(format!("logical {i} anticommutes with a generator"));
            }
            if o.weight() % 2 == 1 {
                problems.push(format!("logical {i} has odd weight"));
            }
        }
        // independence modulo the stabilizer group
        let mut span = stab;
        for (i, o) in ops.iter().enumerate() {
            if !span.insert(o.bits()) {
                problems.push(format!(
                    "logical {i} is dependent on stabilizers/earlier logicals"
                ));
            }
        }
        for i in 0..self.x_ops.len().min(self.z_ops.len()) {
            for j in 0..self.x_ops.len().min(self.z_ops.len()) {
                let xz = overlap_bit(self.x_ops[i].bits(), self.z_ops[j].bits());
                if xz != (i == j) {
                    problems.push(format!("x{i}/z{j} pairing wrong"));
                }
                if i != j {
                    if overlap_bit(self.x_ops[i].bits(), self.x_ops[j].bits()) {
                        problems.push(format!("x{i}/x{j} anticommute"));
                    }
                    if overlap_bit(self.z_ops[i].bits(), self.z_ops[j].bits()) {
                        problems.push(format!("z{i}/z{j} anticommute"));
                    }
                }
            }
        }
        problems
    }
}
