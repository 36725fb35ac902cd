//! Deterministic code constructions.

use std::fmt;
use std::str::FromStr;

use crate::code::MajoranaCode;
use crate::error::{Error, Result};
use crate::f2::{low_ones, EchelonBasis, MajoranaOperator, MAX_MODES};

/// Hamming Majorana code on `2^m` modes.
///
/// Generator `S_t` (t = 1..m) contains γ_a exactly when bit t of `a − 1`,
/// counted from the least significant bit, is set.
pub fn hamming_majorana(m: u32) -> Result<MajoranaCode> {
    if !(3..=6).contains(&m) {
        return Err(Error::HammingOrder(m));
    }
    let nmaj = 1usize << m;
    let stored = (0..m)
        .map(|t| {
            let bits = (0..nmaj as u64)
                .filter(|a| (a >> t) & 1 == 1)
                .fold(0u64, |acc, a| acc | (1 << a));
            MajoranaOperator::from_bits(nmaj, bits)
        })
        .collect::<Result<Vec<_>>>()?;
    MajoranaCode::checked(nmaj, stored)
}

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn xz(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }
}

/// A tensor product of single-qubit Paulis, up to phase.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct QubitPauliOperator {
    letters: Vec<Pauli>,
}

impl QubitPauliOperator {
    pub fn nqub(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        let clashes = self
            .letters
            .iter()
            .zip(&other.letters)
            .filter(|(a, b)| {
                let (ax, az) = a.xz();
                let (bx, bz) = b.xz();
                (ax & bz) ^ (az & bx)
            })
            .count();
        clashes % 2 == 0
    }
}

impl FromStr for QubitPauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                _ => Err(Error::BadPauli(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::BadPauli(s.to_string()));
        }
        Ok(Self { letters })
    }
}

impl fmt::Display for QubitPauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.letters {
            f.write_str(match p {
                Pauli::I => "I",
                Pauli::X => "X",
                Pauli::Y => "Y",
                Pauli::Z => "Z",
            })?;
        }
        Ok(())
    }
}

/// Parses the qubit stabilizer file format: one Pauli string per line,
/// `#` starts a comment, blank lines are skipped.
pub fn parse_pauli_file(text: &str) -> Result<Vec<QubitPauliOperator>> {
    let mut out: Vec<QubitPauliOperator> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let op: QubitPauliOperator = line.parse().map_err(|_| Error::Parse {
            line: i + 1,
            msg: format!("not a Pauli string: {line:?}"),
        })?;
        if let Some(first) = out.first() {
            if first.nqub() != op.nqub() {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected {} qubits, got {}", first.nqub(), op.nqub()),
                });
            }
        }
        out.push(op);
    }
    Ok(out)
}

/// Image of a qubit Pauli under the four-Majoranas-per-qubit map.
///
/// Qubit `i` owns modes `4i..4i+4`; X ↦ γ(i,1)γ(i,2), Z ↦ γ(i,1)γ(i,3) and
/// Y ↦ γ(i,2)γ(i,3).
pub fn map_pauli(p: &QubitPauliOperator) -> Result<MajoranaOperator> {
    let nmaj = 4 * p.nqub();
    let mut bits = 0u64;
    for (i, letter) in p.letters.iter().enumerate() {
        let base = 4 * i;
        bits ^= match letter {
            Pauli::I => 0,
            Pauli::X => 0b0011 << base,
            Pauli::Z => 0b0101 << base,
            Pauli::Y => 0b0110 << base,
        };
    }
    MajoranaOperator::from_bits(nmaj, bits)
}

/// Majorana code obtained from a qubit stabilizer code on `nqub` qubits.
///
/// Per-qubit quartic stabilizers come first, then the mapped qubit
/// stabilizers; anything dependent on earlier generators or on fermion
/// parity is dropped, which always removes at least the last quartic.
pub fn map_qubit_code(nqub: usize, stabilizers: &[QubitPauliOperator]) -> Result<MajoranaCode> {
    let nmaj = 4 * nqub;
    if nmaj == 0 || nmaj > MAX_MODES {
        return Err(Error::TooManyModes(nmaj));
    }
    for (i, s) in stabilizers.iter().enumerate() {
        if s.nqub() != nqub {
            return Err(Error::BadPauli(s.to_string()));
        }
        for (j, t) in stabilizers.iter().enumerate().skip(i + 1) {
            if !s.commutes_with(t) {
                return Err(Error::AnticommutingQubitStabilizers(i, j));
            }
        }
    }
    let quartics = (0..nqub).map(|i| MajoranaOperator::from_bits(nmaj, 0b1111 << (4 * i)));
    let mapped = stabilizers.iter().map(map_pauli);
    let mut span: EchelonBasis = std::iter::once(low_ones(nmaj)).collect();
    let mut stored = Vec::new();
    for g in quartics.chain(mapped) {
        let g = g?;
        if span.insert(g.bits()) {
            stored.push(g);
        }
    }
    MajoranaCode::checked(nmaj, stored)
}

/// Adds two modes and the stabilizer γ_{n+1}γ_{n+2}; K and distance are unchanged.
pub fn extend_by_pair(c: &MajoranaCode) -> Result<MajoranaCode> {
    let nmaj = c.nmaj() + 2;
    let mut stored = c
        .stored()
        .iter()
        .map(|g| g.pad(2))
        .collect::<Result<Vec<_>>>()?;
    stored.push(MajoranaOperator::from_modes(nmaj, &[nmaj - 2, nmaj - 1])?);
    MajoranaCode::checked(nmaj, stored)
}

/// Repeatedly removes a pair of modes whose product is a stabilizer.
///
/// Every element of the group commutes with such a γ_aγ_b, so bits a and b
/// agree on the whole group; deleting them is a quotient by {1, γ_aγ_b}.
/// Parity itself is never stripped, so the fixed point keeps at least two
/// modes. The lexicographically first pair is removed at each round.
pub fn strip_weight2_pairs(c: &MajoranaCode) -> Result<MajoranaCode> {
    let mut code = c.clone();
    while let Some(pair) = first_weight2_stabilizer(&code) {
        code = remove_pair(&code, pair)?;
    }
    Ok(code)
}

fn first_weight2_stabilizer(c: &MajoranaCode) -> Option<u64> {
    let n = c.nmaj();
    let stab = c.stabilizer_basis();
    let parity = low_ones(n);
    for a in 0..n {
        for b in a + 1..n {
            let v = (1u64 << a) | (1u64 << b);
            if v != parity && stab.contains(v) {
                return Some(v);
            }
        }
    }
    None
}

fn remove_pair(c: &MajoranaCode, pair: u64) -> Result<MajoranaCode> {
    let nmaj = c.nmaj() - 2;
    let mut span: EchelonBasis = std::iter::once(low_ones(nmaj)).collect();
    let mut stored = Vec::new();
    for g in c.stored() {
        let r = g.remove_modes(pair);
        if span.insert(r.bits()) {
            stored.push(r);
        }
    }
    MajoranaCode::checked(nmaj, stored)
}
