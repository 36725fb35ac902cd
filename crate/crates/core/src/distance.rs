//! Distance checks.
//!
//! Two families live here. The mask checks test every weight-2 (and weight-4)
//! operator against the generators one popcount at a time, exactly as the
//! walk describes them. The column checks reach the same verdict from the
//! per-mode syndrome columns and are what the walk runs in its hot loop.
//! [`brute_force_distance`] is the independent oracle for both.

use serde::{Deserialize, Serialize};

use crate::code::MajoranaCode;
use crate::error::{Error, Result};
use crate::f2::{overlap_bit, weight_masks, MajoranaOperator};

/// Default bound on the number of candidate operators the oracle may visit.
pub const DEFAULT_CANDIDATE_CAP: u128 = 2_000_000_000;

/// Outcome of a distance computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DistanceResult {
    /// A weight-d logical exists and none lighter does.
    Exact(u32),
    /// No logical of weight below the given value.
    AtLeast(u32),
    /// The code has K = 0.
    NoLogicals,
}

impl std::fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistanceResult::Exact(d) => write!(f, "{d}"),
            DistanceResult::AtLeast(w) => write!(f, ">={w}"),
            DistanceResult::NoLogicals => f.write_str("none(K=0)"),
        }
    }
}

/// Revolving-door (minimal change) enumeration of `t`-subsets of `0..n` as bit masks.
///
/// Consecutive masks differ by exactly one element leaving and one entering,
/// so anything additive over the support can be updated with two XORs.
#[derive(Clone, Debug)]
pub struct RevolvingDoor {
    n: usize,
    t: usize,
    // c[1..=t] hold the combination, c[t+1] = n is a sentinel
    c: Vec<usize>,
    state: DoorState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DoorState {
    Fresh,
    Running,
    Done,
}

impl RevolvingDoor {
    pub fn new(n: usize, t: usize) -> Self {
        let mut c: Vec<usize> = (0..t + 2).map(|j| j.saturating_sub(1)).collect();
        c[t + 1] = n;
        let state = if t > n || n > 64 {
            DoorState::Done
        } else {
            DoorState::Fresh
        };
        Self { n, t, c, state }
    }

    fn mask(&self) -> u64 {
        self.c[1..=self.t].iter().fold(0, |acc, &a| acc | (1 << a))
    }

    fn advance(&mut self) -> bool {
        let t = self.t;
        let c = &mut self.c;
        if t == 0 || t == self.n {
            return false;
        }
        let mut j;
        let mut increase;
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return true;
            }
            j = 2;
            increase = false;
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                return true;
            }
            j = 2;
            increase = true;
        }
        loop {
            if j > t {
                return false;
            }
            if !increase {
                // try to decrease c[j]
                if c[j] >= j {
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return true;
                }
                j += 1;
                increase = true;
            } else {
                // try to increase c[j]
                if c[j] + 1 < c[j + 1] {
                    c[j - 1] = c[j];
                    c[j] += 1;
                    return true;
                }
                j += 1;
                increase = false;
            }
        }
    }
}

impl Iterator for RevolvingDoor {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        match self.state {
            DoorState::Done => None,
            DoorState::Fresh => {
                self.state = DoorState::Running;
                Some(self.mask())
            }
            DoorState::Running => {
                if self.advance() {
                    Some(self.mask())
                } else {
                    self.state = DoorState::Done;
                    None
                }
            }
        }
    }
}

/// Binomial coefficient as u128.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Per-mode syndrome columns: bit t of `cols[a]` is bit a of `rows[t]`.
#[inline]
pub fn syndrome_columns(rows: &[u64]) -> [u64; 64] {
    let mut cols = [0u64; 64];
    for (t, &row) in rows.iter().enumerate() {
        let mut r = row;
        while r != 0 {
            let a = r.trailing_zeros() as usize;
            cols[a] |= 1 << t;
            r &= r - 1;
        }
    }
    cols
}

/// Weight-2 check by masks: every γ_iγ_j anticommutes with some stored generator.
pub fn passes_d4_check(stored: &[MajoranaOperator]) -> bool {
    let Some(first) = stored.first() else {
        return false;
    };
    let bits: Vec<u64> = stored.iter().map(|g| g.bits()).collect();
    D4MaskCheck::new(first.nmaj()).passes(&bits)
}

/// The weight-2 check with its `C(nmaj, 2)` masks precomputed.
#[derive(Clone, Debug)]
pub struct D4MaskCheck {
    pair_masks: Vec<u64>,
}

impl D4MaskCheck {
    pub fn new(nmaj: usize) -> Self {
        Self {
            pair_masks: weight_masks(nmaj, 2),
        }
    }

    pub fn passes(&self, stored: &[u64]) -> bool {
        self.pair_masks
            .iter()
            .all(|&m| stored.iter().any(|&g| overlap_bit(g, m)))
    }
}

/// Weight-2 check via columns: γ_iγ_j commutes with every stored generator
/// exactly when modes i and j have the same syndrome column.
#[inline]
pub fn columns_distinct(nmaj: usize, stored: &[u64]) -> bool {
    let r = stored.len();
    if r < 64 && (1u128 << r) < nmaj as u128 {
        return false;
    }
    let cols = syndrome_columns(stored);
    if r <= 12 {
        let mut seen = [0u64; 64];
        for &c in &cols[..nmaj] {
            let (w, b) = ((c >> 6) as usize, c & 63);
            if seen[w] >> b & 1 == 1 {
                return false;
            }
            seen[w] |= 1 << b;
        }
        true
    } else {
        let mut sorted = cols;
        let s = &mut sorted[..nmaj];
        s.sort_unstable();
        s.windows(2).all(|w| w[0] != w[1])
    }
}

/// Weight-2 and weight-4 check by masks against tracked logicals.
///
/// Fails when some such operator commutes with every stored generator but
/// anticommutes with at least one logical.
pub fn passes_d6_check(stored: &[MajoranaOperator], logicals: &[MajoranaOperator]) -> bool {
    let Some(nmaj) = stored.first().or(logicals.first()).map(|o| o.nmaj()) else {
        return true;
    };
    let s: Vec<u64> = stored.iter().map(|g| g.bits()).collect();
    let l: Vec<u64> = logicals.iter().map(|g| g.bits()).collect();
    D6MaskCheck::new(nmaj).passes(&s, &l)
}

#[derive(Clone, Debug)]
pub struct D6MaskCheck {
    masks: Vec<u64>,
}

impl D6MaskCheck {
    pub fn new(nmaj: usize) -> Self {
        let mut masks = weight_masks(nmaj, 2);
        masks.extend(weight_masks(nmaj, 4));
        Self { masks }
    }

    pub fn passes(&self, stored: &[u64], logicals: &[u64]) -> bool {
        !self.masks.iter().any(|&m| {
            stored.iter().all(|&g| !overlap_bit(g, m))
                && logicals.iter().any(|&x| overlap_bit(x, m))
        })
    }
}

/// Column form of the weight-2/4 check.
///
/// With stored-syndrome columns `s_a` and logical columns `l_a`, an operator
/// on modes T is a dangerous logical iff ⊕s = 0 and ⊕l ≠ 0. Grouping pairs
/// by their s-sum, the check passes iff every group carries a single l-sum
/// and the group with s-sum 0 carries l-sum 0.
#[derive(Clone, Debug, Default)]
pub struct D6ColumnCheck {
    pairs: Vec<(u64, u64)>,
}

impl D6ColumnCheck {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passes(&mut self, nmaj: usize, stored: &[u64], logicals: &[u64]) -> bool {
        let s = syndrome_columns(stored);
        let l = syndrome_columns(logicals);
        for a in 0..nmaj {
            for b in a + 1..nmaj {
                if s[a] == s[b] && l[a] != l[b] {
                    return false;
                }
            }
        }
        self.pairs.clear();
        for a in 0..nmaj {
            for b in a + 1..nmaj {
                self.pairs.push((s[a] ^ s[b], l[a] ^ l[b]));
            }
        }
        self.pairs.sort_unstable();
        self.pairs
            .windows(2)
            .all(|w| w[0].0 != w[1].0 || w[0].1 == w[1].1)
    }
}

/// Lightest logical operator of weight at most `wmax`, by exhaustive enumeration.
///
/// Candidates are visited weight by weight (2, 4, …) in revolving-door order;
/// the first one that commutes with all generators and lies outside the
/// stabilizer group is returned.
pub fn lightest_logical(
    c: &MajoranaCode,
    wmax: u32,
    cap: u128,
) -> Result<Option<MajoranaOperator>> {
    let n = c.nmaj();
    let wmax = (wmax as usize).min(n);
    let requested: u128 = (2..=wmax).step_by(2).map(|w| binomial(n, w)).sum();
    if requested > cap {
        return Err(Error::CapExceeded { requested, cap });
    }
    let stored = c.stored_bits();
    let cols = syndrome_columns(&stored);
    let stab = c.stabilizer_basis();
    for w in (2..=wmax).step_by(2) {
        let mut prev = 0u64;
        let mut syn = 0u64;
        for mask in RevolvingDoor::new(n, w) {
            let mut diff = prev ^ mask;
            while diff != 0 {
                syn ^= cols[diff.trailing_zeros() as usize];
                diff &= diff - 1;
            }
            prev = mask;
            if syn == 0 && !stab.contains(mask) {
                return Ok(Some(MajoranaOperator::from_bits(n, mask)?));
            }
        }
    }
    Ok(None)
}

/// Exact distance if some logical has weight ≤ `wmax`, else a lower bound.
pub fn brute_force_distance(c: &MajoranaCode, wmax: u32) -> Result<DistanceResult> {
    brute_force_distance_with_cap(c, wmax, DEFAULT_CANDIDATE_CAP)
}

pub fn brute_force_distance_with_cap(
    c: &MajoranaCode,
    wmax: u32,
    cap: u128,
) -> Result<DistanceResult> {
    if c.num_logical_qubits() == 0 {
        return Ok(DistanceResult::NoLogicals);
    }
    let wmax = wmax & !1;
    Ok(match lightest_logical(c, wmax, cap)? {
        Some(op) => DistanceResult::Exact(op.weight()),
        None => DistanceResult::AtLeast(wmax + 2),
    })
}
