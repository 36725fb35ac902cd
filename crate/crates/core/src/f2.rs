//! Bit vectors over F₂ representing products of Majorana operators.
//!
//! An operator on `nmaj` modes is stored in a single `u64`: bit `a` is set when
//! the product contains γ_{a+1}. Signs and phases are never tracked. Textual
//! bit strings are written with γ_1 as the leftmost character.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest number of modes an operator can act on.
pub const MAX_MODES: usize = 64;

/// Mask with the low `n` bits set.
#[inline]
pub fn low_ones(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Parity of the overlap of two raw bit vectors.
#[inline(always)]
pub fn overlap_bit(a: u64, b: u64) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// The walk update on a raw word: XOR in `mask` when the overlap is odd.
#[inline(always)]
pub fn replace_bits(v: u64, mask: u64) -> u64 {
    // branch-free: the overlap parity selects between 0 and mask
    let odd = ((v & mask).count_ones() & 1) as u64;
    v ^ (mask & odd.wrapping_neg())
}

/// A product of Majorana operators, up to sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MajoranaOperator {
    nmaj: usize,
    bits: u64,
}

impl MajoranaOperator {
    /// The identity on `nmaj` modes.
    pub fn identity(nmaj: usize) -> Result<Self> {
        Self::from_bits(nmaj, 0)
    }

    pub fn from_bits(nmaj: usize, bits: u64) -> Result<Self> {
        if nmaj > MAX_MODES {
            return Err(Error::TooManyModes(nmaj));
        }
        if bits & !low_ones(nmaj) != 0 {
            let index = 63 - bits.leading_zeros() as usize;
            return Err(Error::ModeOutOfRange { index, nmaj });
        }
        Ok(Self { nmaj, bits })
    }

    /// Product of the listed modes (0-based; repeated modes cancel).
    pub fn from_modes(nmaj: usize, modes: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &a in modes {
            if a >= nmaj {
                return Err(Error::ModeOutOfRange { index: a, nmaj });
            }
            bits ^= 1 << a;
        }
        Self::from_bits(nmaj, bits)
    }

    /// The single mode γ_{a+1}.
    pub fn single_mode(nmaj: usize, a: usize) -> Result<Self> {
        Self::from_modes(nmaj, &[a])
    }

    /// Fermion parity γ_1 γ_2 ⋯ γ_nmaj.
    pub fn parity(nmaj: usize) -> Result<Self> {
        Self::from_bits(nmaj, low_ones(nmaj))
    }

    #[inline]
    pub fn nmaj(&self) -> usize {
        self.nmaj
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        a < self.nmaj && (self.bits >> a) & 1 == 1
    }

    /// Supported modes in increasing order (0-based).
    pub fn modes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nmaj).filter(move |&a| self.contains(a))
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.nmaj != other.nmaj {
            Err(Error::LengthMismatch {
                left: self.nmaj,
                right: other.nmaj,
            })
        } else {
            Ok(())
        }
    }

    /// Product of two operators (sum of bit vectors).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self {
            nmaj: self.nmaj,
            bits: self.bits ^ other.bits,
        })
    }

    /// Removes the modes set in `drop`, shifting the remaining modes down.
    pub fn remove_modes(&self, drop: u64) -> Self {
        let mut bits = 0u64;
        let mut out = 0;
        for a in 0..self.nmaj {
            if (drop >> a) & 1 == 1 {
                continue;
            }
            bits |= ((self.bits >> a) & 1) << out;
            out += 1;
        }
        Self { nmaj: out, bits }
    }

    /// Pads the operator with `extra` unused modes at the end.
    pub fn pad(&self, extra: usize) -> Result<Self> {
        Self::from_bits(self.nmaj + extra, self.bits)
    }
}

impl fmt::Display for MajoranaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.nmaj {
            f.write_str(if self.contains(a) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for MajoranaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MajoranaOperator({self})")
    }
}

impl FromStr for MajoranaOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_MODES {
            return Err(Error::TooManyModes(s.len()));
        }
        let mut bits = 0u64;
        for (a, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << a,
                _ => return Err(Error::BadBitString(s.to_string())),
            }
        }
        Self::from_bits(s.len(), bits)
    }
}

/// A weight-four mask selecting modes i < j < k < l for the walk update.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ReplacementMask {
    nmaj: usize,
    bits: u64,
}

impl ReplacementMask {
    /// Mask on four distinct 0-based modes.
    pub fn new(nmaj: usize, modes: [usize; 4]) -> Result<Self> {
        let op = MajoranaOperator::from_modes(nmaj, &modes)?;
        if op.weight() != 4 {
            return Err(Error::BadMask(modes));
        }
        Ok(Self {
            nmaj,
            bits: op.bits,
        })
    }

    pub fn from_bits(nmaj: usize, bits: u64) -> Result<Self> {
        let op = MajoranaOperator::from_bits(nmaj, bits)?;
        if op.weight() != 4 {
            let modes: Vec<usize> = op.modes().collect();
            let mut m = [usize::MAX; 4];
            for (slot, a) in m.iter_mut().zip(modes) {
                *slot = a;
            }
            return Err(Error::BadMask(m));
        }
        Ok(Self { nmaj, bits })
    }

    #[inline]
    pub fn nmaj(&self) -> usize {
        self.nmaj
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn as_operator(&self) -> MajoranaOperator {
        MajoranaOperator {
            nmaj: self.nmaj,
            bits: self.bits,
        }
    }
}

/// Hamming weight.
#[inline]
pub fn weight(v: &MajoranaOperator) -> u32 {
    v.weight()
}

/// Parity of the number of modes shared by `a` and `b`.
pub fn overlap_parity(a: &MajoranaOperator, b: &MajoranaOperator) -> Result<bool> {
    a.check_len(b)?;
    Ok(overlap_bit(a.bits, b.bits))
}

/// Whether two Majorana products anticommute.
///
/// Moving each of the `|b|` factors of `b` through `a` picks up `|a|` signs,
/// less one for every shared mode, so the products anticommute exactly when
/// `|a|·|b| + |a ∧ b|` is odd.
pub fn anticommutes(a: &MajoranaOperator, b: &MajoranaOperator) -> Result<bool> {
    a.check_len(b)?;
    let cross = (a.weight() & 1) & (b.weight() & 1);
    Ok((cross ^ ((a.bits & b.bits).count_ones() & 1)) == 1)
}

/// Applies the walk update: `v ↦ v + ⟨v, m⟩·m`.
pub fn apply_replacement(v: &MajoranaOperator, m: &ReplacementMask) -> Result<MajoranaOperator> {
    if v.nmaj != m.nmaj {
        return Err(Error::LengthMismatch {
            left: v.nmaj,
            right: m.nmaj,
        });
    }
    Ok(MajoranaOperator {
        nmaj: v.nmaj,
        bits: replace_bits(v.bits, m.bits),
    })
}

/// Rank over F₂ of a list of operators.
pub fn f2_rank(vs: &[MajoranaOperator]) -> usize {
    let mut basis = EchelonBasis::new();
    vs.iter().filter(|v| basis.insert(v.bits)).count()
}

/// Whether `v` lies in the F₂ span of `vs`.
pub fn in_span(v: &MajoranaOperator, vs: &[MajoranaOperator]) -> bool {
    let basis: EchelonBasis = vs.iter().map(|x| x.bits).collect();
    basis.contains(v.bits)
}

/// Incrementally built row-echelon basis of a subspace of F₂^64.
///
/// Each stored row has a distinct pivot (its lowest set bit) which is clear
/// in every other row, so reduction is a single pass over the rows.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<u64>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Reduces `v` modulo the subspace; zero iff `v` is in the span.
    #[inline]
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            let pivot = r & r.wrapping_neg();
            if v & pivot != 0 {
                v ^= r;
            }
        }
        v
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v`; returns false (and leaves the basis untouched) if dependent.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let pivot = v & v.wrapping_neg();
        for r in &mut self.rows {
            if *r & pivot != 0 {
                *r ^= v;
            }
        }
        self.rows.push(v);
        true
    }
}

impl FromIterator<u64> for EchelonBasis {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut basis = EchelonBasis::new();
        for v in iter {
            basis.insert(v);
        }
        basis
    }
}

/// Basis of `{v ∈ F₂^nmaj : ⟨v, r⟩ = 0 for every r in rows}`.
pub fn orthogonal_complement(rows: &[u64], nmaj: usize) -> Vec<u64> {
    let mut m: Vec<u64> = rows.iter().map(|r| r & low_ones(nmaj)).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..nmaj {
        let bit = 1u64 << col;
        let Some(found) = (rank..m.len()).find(|&i| m[i] & bit != 0) else {
            continue;
        };
        m.swap(rank, found);
        let pivot_row = m[rank];
        for (i, r) in m.iter_mut().enumerate() {
            if i != rank && *r & bit != 0 {
                *r ^= pivot_row;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let pivot_mask: u64 = pivots.iter().fold(0, |acc, &p| acc | (1 << p));
    (0..nmaj)
        .filter(|f| pivot_mask & (1 << f) == 0)
        .map(|f| {
            let mut v = 1u64 << f;
            for (row, &p) in m[..rank].iter().zip(&pivots) {
                if (row >> f) & 1 == 1 {
                    v |= 1 << p;
                }
            }
            v
        })
        .collect()
}

/// All `C(nmaj, w)` weight-`w` masks in lexicographic order of their mode lists.
pub fn weight_masks(nmaj: usize, w: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..w).collect();
    if w > nmaj {
        return out;
    }
    loop {
        out.push(idx.iter().fold(0u64, |acc, &a| acc | (1 << a)));
        // advance to the next combination
        let mut i = w;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + nmaj - w {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..w {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> MajoranaOperator {
        s.parse().unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&op("110000")), 2);
        assert_eq!(weight(&op("000000")), 0);
    }

    #[test]
    fn overlap_examples() {
        assert!(overlap_parity(&op("1100"), &op("1010")).unwrap());
        assert!(!overlap_parity(&op("1111"), &op("1100")).unwrap());
        let v = op("110110");
        assert!(!overlap_parity(&v, &v).unwrap());
        assert!(matches!(
            overlap_parity(&op("11"), &op("1100")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn anticommutation_examples() {
        assert!(anticommutes(&op("100000"), &op("111111")).unwrap());
        assert!(anticommutes(&op("1100"), &op("1010")).unwrap());
        assert!(!anticommutes(&op("1111"), &op("1100")).unwrap());
        // two distinct single modes anticommute, a mode commutes with itself
        assert!(anticommutes(&op("1000"), &op("0100")).unwrap());
        assert!(!anticommutes(&op("1000"), &op("1000")).unwrap());
        assert!(anticommutes(&op("11"), &op("1100")).is_err());
    }

    #[test]
    fn rank_and_span_examples() {
        let vs = [op("1100"), op("0011"), op("1111")];
        assert_eq!(f2_rank(&vs), 2);
        assert_eq!(f2_rank(&[]), 0);
        assert!(in_span(&op("1111"), &vs[..2]));
        assert!(!in_span(&op("1000"), &vs[..2]));
        // input untouched
        assert_eq!(vs[2], op("1111"));
    }

    #[test]
    fn replacement_examples() {
        let m = ReplacementMask::new(5, [0, 1, 2, 3]).unwrap();
        assert_eq!(apply_replacement(&op("10000"), &m).unwrap(), op("01110"));
        assert_eq!(apply_replacement(&op("11000"), &m).unwrap(), op("11000"));
        let once = apply_replacement(&op("10110"), &m).unwrap();
        assert_eq!(apply_replacement(&once, &m).unwrap(), op("10110"));
    }

    #[test]
    fn mask_rejects_repeated_modes() {
        assert!(matches!(
            ReplacementMask::new(8, [0, 1, 1, 3]),
            Err(Error::BadMask(_))
        ));
        assert!(ReplacementMask::new(4, [0, 1, 2, 4]).is_err());
        assert!(ReplacementMask::from_bits(8, 0b111).is_err());
    }

    #[test]
    fn parse_and_display() {
        let v = op("0100110");
        assert_eq!(v.nmaj(), 7);
        assert_eq!(v.to_string(), "0100110");
        assert_eq!(v.modes().collect::<Vec<_>>(), vec![1, 4, 5]);
        assert!("01x0".parse::<MajoranaOperator>().is_err());
        assert!("0".repeat(65).parse::<MajoranaOperator>().is_err());
        assert!(MajoranaOperator::from_bits(4, 0b10000).is_err());
    }

    #[test]
    fn remove_and_pad() {
        let v = op("110101");
        assert_eq!(v.remove_modes(0b000011), op("0101"));
        assert_eq!(v.remove_modes(0b100100), op("1110"));
        assert_eq!(op("11").pad(2).unwrap(), op("1100"));
    }

    #[test]
    fn complement_is_orthogonal_and_full() {
        let rows = [0b1100_0011u64, 0b0011_1100, 0b1111_1111];
        let comp = orthogonal_complement(&rows, 8);
        assert_eq!(comp.len(), 8 - 2);
        for c in &comp {
            for r in &rows {
                assert!(!overlap_bit(*c, *r));
            }
        }
        let basis: EchelonBasis = comp.iter().copied().collect();
        assert_eq!(basis.rank(), comp.len());
    }

    #[test]
    fn weight_masks_counts() {
        assert_eq!(weight_masks(6, 2).len(), 15);
        assert_eq!(weight_masks(30, 4).len(), 27405);
        assert_eq!(weight_masks(4, 4), vec![0b1111]);
        assert_eq!(weight_masks(3, 0), vec![0]);
        assert!(weight_masks(3, 4).is_empty());
        let m = weight_masks(5, 2);
        assert_eq!(m[0], 0b11);
        assert_eq!(m[1], 0b101);
        assert_eq!(*m.last().unwrap(), 0b11000);
    }
}
