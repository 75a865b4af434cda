//! Pauli operators and stabilizer codes over GF(2), with exact
//! bounded-weight distance search.
//!
//! Operators are bit-packed pairs of X/Z vectors; phases are deliberately
//! untracked (generators are independent and taken with positive sign, so
//! −1 never enters the stabilizer group). The distance search enumerates
//! candidate supports in ascending weight with a meet-in-the-middle split
//! keyed on the stabilizer syndrome, which is exact: every weight-w Pauli
//! factors uniquely into its first ⌈w/2⌉ and last ⌊w/2⌋ support positions.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PauliError {
    #[error("invalid Pauli character `{0}` (expected I, X, Y or Z)")]
    BadCharacter(char),
    #[error("operator length {found} does not match qubit count {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("stabilizer generators do not pairwise commute: rows {0} and {1}")]
    NonCommuting(usize, usize),
    #[error("generator row {0} is dependent on earlier rows")]
    DependentGenerator(usize),
    #[error("malformed check-matrix section header `{0}`")]
    BadSection(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliLetter {
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }
}

/// An n-qubit Pauli operator, phase ignored. Qubit `i` carries X when
/// `x_bits[i]`, Z when `z_bits[i]`, Y when both.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliOperator {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

fn parity(words: impl Iterator<Item = u64>) -> bool {
    words.fold(0u32, |acc, w| acc ^ w.count_ones()) & 1 == 1
}

impl PauliOperator {
    pub fn identity(n: usize) -> PauliOperator {
        let w = words_for(n);
        PauliOperator {
            n,
            x: vec![0; w],
            z: vec![0; w],
        }
    }

    pub fn from_str(s: &str) -> Result<PauliOperator, PauliError> {
        let mut op = PauliOperator::identity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                'I' => {}
                'X' => op.set(i, PauliLetter::X),
                'Y' => op.set(i, PauliLetter::Y),
                'Z' => op.set(i, PauliLetter::Z),
                other => return Err(PauliError::BadCharacter(other)),
            }
        }
        Ok(op)
    }

    /// Build from a support and a basis letter shared by all its qubits.
    pub fn uniform(n: usize, support: &[usize], letter: PauliLetter) -> PauliOperator {
        let mut op = PauliOperator::identity(n);
        for &q in support {
            op.set(q, letter);
        }
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, qubit: usize, letter: PauliLetter) {
        assert!(qubit < self.n);
        let (xb, zb) = letter.bits();
        let (w, b) = (qubit / 64, qubit % 64);
        if xb {
            self.x[w] |= 1 << b;
        } else {
            self.x[w] &= !(1 << b);
        }
        if zb {
            self.z[w] |= 1 << b;
        } else {
            self.z[w] &= !(1 << b);
        }
    }

    pub fn letter(&self, qubit: usize) -> Option<PauliLetter> {
        let (w, b) = (qubit / 64, qubit % 64);
        match ((self.x[w] >> b) & 1, (self.z[w] >> b) & 1) {
            (1, 0) => Some(PauliLetter::X),
            (1, 1) => Some(PauliLetter::Y),
            (0, 1) => Some(PauliLetter::Z),
            _ => None,
        }
    }

    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().all(|&w| w == 0) && self.z.iter().all(|&w| w == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.letter(q).is_some()).collect()
    }

    /// Product of two operators (XOR of bit vectors; phase discarded).
    pub fn mul(&self, other: &PauliOperator) -> PauliOperator {
        assert_eq!(self.n, other.n);
        PauliOperator {
            n: self.n,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// Symplectic commutation test: true iff the operators commute.
    pub fn commutes(&self, other: &PauliOperator) -> bool {
        assert_eq!(self.n, other.n, "operator length mismatch");
        let a = parity(self.x.iter().zip(&other.z).map(|(p, q)| p & q));
        let b = parity(self.z.iter().zip(&other.x).map(|(p, q)| p & q));
        !(a ^ b)
    }

    /// The operator as a 2n-bit symplectic row (x block, then z block).
    pub(crate) fn to_row(&self) -> Vec<u64> {
        let mut row = Vec::with_capacity(2 * self.x.len());
        row.extend_from_slice(&self.x);
        row.extend_from_slice(&self.z);
        row
    }

    fn from_row(n: usize, row: &[u64]) -> PauliOperator {
        let w = words_for(n);
        PauliOperator {
            n,
            x: row[..w].to_vec(),
            z: row[w..].to_vec(),
        }
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pauli_string(self))
    }
}

/// GF(2) row basis in reduced echelon form; supports membership testing and
/// rank queries over symplectic rows.
#[derive(Debug, Clone, Default)]
pub(crate) struct RowBasis {
    rows: Vec<Vec<u64>>,
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl RowBasis {
    fn reduce(&self, row: &mut Vec<u64>) {
        for r in &self.rows {
            let lead = leading_bit(r).unwrap();
            if (row[lead / 64] >> (lead % 64)) & 1 == 1 {
                xor_into(row, r);
            }
        }
    }

    /// Insert after reduction; returns false if the row was dependent.
    pub(crate) fn insert(&mut self, mut row: Vec<u64>) -> bool {
        self.reduce(&mut row);
        let lead = match leading_bit(&row) {
            Some(l) => l,
            None => return false,
        };
        for r in self.rows.iter_mut() {
            if (r[lead / 64] >> (lead % 64)) & 1 == 1 {
                xor_into(r, &row);
            }
        }
        let pos = self
            .rows
            .partition_point(|r| leading_bit(r).unwrap() < lead);
        self.rows.insert(pos, row);
        true
    }

    fn contains(&self, row: &[u64]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        leading_bit(&r).is_none()
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// GF(2) rank of a list of operators viewed as symplectic rows.
pub fn operator_rank(ops: &[PauliOperator]) -> usize {
    let mut basis = RowBasis::default();
    for op in ops {
        basis.insert(op.to_row());
    }
    basis.rank()
}

/// Whether `p` is a product of the given generators (phases ignored).
pub fn in_group(p: &PauliOperator, generators: &[PauliOperator]) -> bool {
    let mut basis = RowBasis::default();
    for g in generators {
        basis.insert(g.to_row());
    }
    basis.contains(&p.to_row())
}

/// Code construction parameters carried along for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CodeMetadata {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
}

/// A stabilizer (or subsystem) code: commuting, independent stabilizer
/// generators plus optional gauge generators.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    pub n: usize,
    pub generators: Vec<PauliOperator>,
    pub gauge_generators: Vec<PauliOperator>,
    pub metadata: CodeMetadata,
}

/// Outcome of the bounded-weight distance search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistanceResult {
    Found { weight: usize, witness: PauliOperator },
    ExceedsBudget { w_max: usize },
}

impl DistanceResult {
    pub fn weight(&self) -> Option<usize> {
        match self {
            DistanceResult::Found { weight, .. } => Some(*weight),
            DistanceResult::ExceedsBudget { .. } => None,
        }
    }
}

impl StabilizerCode {
    pub fn new(
        n: usize,
        generators: Vec<PauliOperator>,
        gauge_generators: Vec<PauliOperator>,
        metadata: CodeMetadata,
    ) -> Result<StabilizerCode, PauliError> {
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(PauliError::LengthMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
            for (j, h) in generators.iter().enumerate().skip(i + 1) {
                if !g.commutes(h) {
                    return Err(PauliError::NonCommuting(i, j));
                }
            }
            for gg in &gauge_generators {
                if !g.commutes(gg) {
                    return Err(PauliError::NonCommuting(i, usize::MAX));
                }
            }
        }
        let mut basis = RowBasis::default();
        for (i, g) in generators.iter().enumerate() {
            if !basis.insert(g.to_row()) {
                return Err(PauliError::DependentGenerator(i));
            }
        }
        Ok(StabilizerCode {
            n,
            generators,
            gauge_generators,
            metadata,
        })
    }

    /// Number of encoded qubits before any gauge designation:
    /// k = n − rank(stabilizer generators).
    pub fn k_total(&self) -> usize {
        self.n - operator_rank(&self.generators)
    }

    /// Encoded qubits left after subtracting the declared gauge pairs.
    pub fn k_logical(&self) -> usize {
        let stab_rank = operator_rank(&self.generators);
        let all: Vec<PauliOperator> = self
            .generators
            .iter()
            .chain(&self.gauge_generators)
            .cloned()
            .collect();
        let gauge_pairs = (operator_rank(&all) - stab_rank).div_ceil(2);
        self.k_total() - gauge_pairs
    }

    /// Largest stabilizer generator weight. Gauge generators are excluded:
    /// they wrap punctures rather than being measured as plaquettes.
    pub fn max_weight(&self) -> usize {
        self.generators
            .iter()
            .map(PauliOperator::weight)
            .max()
            .unwrap_or(0)
    }

    pub fn is_css(&self) -> bool {
        self.generators.iter().all(|g| {
            let support = g.support();
            let letters: Vec<_> = support.iter().filter_map(|&q| g.letter(q)).collect();
            letters.iter().all(|&l| l == PauliLetter::X) || letters.iter().all(|&l| l == PauliLetter::Z)
        })
    }

    /// A symplectic basis of bare logical operators: `k_logical` pairs
    /// (X̄ᵢ, Z̄ᵢ) commuting with all stabilizer and gauge generators, with
    /// X̄ᵢ anticommuting with Z̄ⱼ exactly when i = j. Deterministic given the
    /// generator order.
    pub fn logical_basis(&self) -> Vec<(PauliOperator, PauliOperator)> {
        let words = words_for(self.n);
        let all_gens: Vec<&PauliOperator> =
            self.generators.iter().chain(&self.gauge_generators).collect();

        // normalizer of the stabilizer+gauge set: kernel of the symplectic
        // constraint matrix (rows are the generators with x/z halves swapped)
        let mut constraint: Vec<Vec<u64>> = all_gens
            .iter()
            .map(|g| {
                let mut row = Vec::with_capacity(2 * words);
                row.extend_from_slice(&g.z);
                row.extend_from_slice(&g.x);
                row
            })
            .collect();
        let cols = 2 * self.n;
        // row-reduce, tracking pivot columns
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            let col_word = if col < self.n { col / 64 } else { words + (col - self.n) / 64 };
            let col_bit = if col < self.n { col % 64 } else { (col - self.n) % 64 };
            let pivot_row = (rank..constraint.len())
                .find(|&r| (constraint[r][col_word] >> col_bit) & 1 == 1);
            if let Some(p) = pivot_row {
                constraint.swap(rank, p);
                for r in 0..constraint.len() {
                    if r != rank && (constraint[r][col_word] >> col_bit) & 1 == 1 {
                        let (head, tail) = constraint.split_at_mut(rank.max(r));
                        let (a, b) = if r < rank {
                            (&mut head[r], &tail[0])
                        } else {
                            (&mut tail[0], &head[rank])
                        };
                        xor_into(a, b);
                    }
                }
                pivots.push(col);
                rank += 1;
            }
        }
        // kernel basis: one vector per free column
        let bit_at = |row: &[u64], col: usize| {
            let (w, b) = if col < self.n {
                (col / 64, col % 64)
            } else {
                (words + (col - self.n) / 64, (col - self.n) % 64)
            };
            (row[w] >> b) & 1 == 1
        };
        let set_bit = |row: &mut [u64], col: usize| {
            let (w, b) = if col < self.n {
                (col / 64, col % 64)
            } else {
                (words + (col - self.n) / 64, (col - self.n) % 64)
            };
            row[w] |= 1 << b;
        };
        let mut kernel: Vec<Vec<u64>> = Vec::new();
        for free in 0..cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; 2 * words];
            set_bit(&mut v, free);
            for (r, &p) in pivots.iter().enumerate() {
                if bit_at(&constraint[r], free) {
                    set_bit(&mut v, p);
                }
            }
            kernel.push(v);
        }

        // quotient by the stabilizer group only: gauge generators lie outside
        // the normalizer, so reducing by them would break commutation
        let mut group = RowBasis::default();
        for g in &self.generators {
            group.insert(g.to_row());
        }
        let mut reps: Vec<Vec<u64>> = Vec::new();
        let mut span = group.clone();
        for v in kernel {
            let mut r = v.clone();
            span.reduce(&mut r);
            if leading_bit(&r).is_none() {
                continue;
            }
            span.insert(r);
            let mut canon = v;
            group.reduce(&mut canon);
            reps.push(canon);
        }

        // symplectic Gram-Schmidt over the representatives
        let sympl = |a: &[u64], b: &[u64]| {
            let pa = parity(a[..words].iter().zip(&b[words..]).map(|(p, q)| p & q));
            let pb = parity(a[words..].iter().zip(&b[..words]).map(|(p, q)| p & q));
            pa ^ pb
        };
        let mut pairs = Vec::new();
        let mut pool = reps;
        while let Some(a) = pool.iter().position(|v| leading_bit(v).is_some()) {
            let a_vec = pool.remove(a);
            let partner = pool.iter().position(|v| sympl(&a_vec, v));
            let b_vec = match partner {
                Some(p) => pool.remove(p),
                None => continue, // commutes with everything left: gauge residue
            };
            for v in pool.iter_mut() {
                if sympl(v, &b_vec) {
                    xor_into(v, &a_vec);
                }
                if sympl(v, &a_vec) {
                    xor_into(v, &b_vec);
                }
            }
            pairs.push((
                PauliOperator::from_row(self.n, &a_vec),
                PauliOperator::from_row(self.n, &b_vec),
            ));
        }
        pairs
    }

    /// Exact minimal logical weight up to `w_max`.
    ///
    /// A candidate must commute with every stabilizer generator and lie
    /// outside the stabilizer group — extended by the gauge generators when
    /// `dressed` (a dressed logical may differ from a bare one by gauge
    /// operators, which therefore don't count as logical). With
    /// `dressed = false` the gauge pair itself counts as logical, so e.g. a
    /// puncture-wrapping gauge operator is reported.
    pub fn distance_exact(&self, w_max: usize, dressed: bool) -> DistanceResult {
        self.distance_search(w_max, dressed, &PauliLetter::ALL)
    }

    /// Same search restricted to an alphabet of single-qubit letters
    /// (used for the CSS X-only/Z-only cross-check).
    pub fn distance_exact_restricted(
        &self,
        w_max: usize,
        dressed: bool,
        letters: &[PauliLetter],
    ) -> DistanceResult {
        self.distance_search(w_max, dressed, letters)
    }

    fn distance_search(
        &self,
        w_max: usize,
        dressed: bool,
        letters: &[PauliLetter],
    ) -> DistanceResult {
        let m = self.generators.len();
        assert!(m <= 128, "syndrome packing supports at most 128 generators");
        let mut exclusion = RowBasis::default();
        for g in &self.generators {
            exclusion.insert(g.to_row());
        }
        if dressed {
            for g in &self.gauge_generators {
                exclusion.insert(g.to_row());
            }
        }

        // per-(qubit, letter) syndromes; a candidate's syndrome is the XOR
        // over its support since commutation is linear in the candidate
        let single = |q: usize, l: PauliLetter| -> u128 {
            let mut op = PauliOperator::identity(self.n);
            op.set(q, l);
            let mut s = 0u128;
            for (i, g) in self.generators.iter().enumerate() {
                if !op.commutes(g) {
                    s |= 1 << i;
                }
            }
            s
        };
        let table: Vec<Vec<u128>> = (0..self.n)
            .map(|q| letters.iter().map(|&l| single(q, l)).collect())
            .collect();

        for w in 1..=w_max {
            let wa = w - w / 2;
            let wb = w / 2;
            // map syndrome -> suffix operators of weight wb (support strictly
            // above any prefix support we later match against)
            let mut suffixes: HashMap<u128, Vec<(usize, Vec<(usize, usize)>)>> = HashMap::new();
            if wb == 0 {
                suffixes.insert(0, vec![(self.n, Vec::new())]);
            } else {
                for support in (0..self.n).combinations(wb) {
                    let mut assignment = vec![0usize; wb];
                    loop {
                        let syndrome = support
                            .iter()
                            .zip(&assignment)
                            .fold(0u128, |acc, (&q, &l)| acc ^ table[q][l]);
                        let entry: Vec<(usize, usize)> =
                            support.iter().copied().zip(assignment.iter().copied()).collect();
                        suffixes
                            .entry(syndrome)
                            .or_default()
                            .push((support[0], entry));
                        // next letter assignment
                        let mut i = 0;
                        loop {
                            if i == wb {
                                break;
                            }
                            assignment[i] += 1;
                            if assignment[i] < letters.len() {
                                break;
                            }
                            assignment[i] = 0;
                            i += 1;
                        }
                        if i == wb {
                            break;
                        }
                    }
                }
            }
            for support in (0..self.n).combinations(wa) {
                let max_q = *support.last().unwrap();
                let mut assignment = vec![0usize; wa];
                loop {
                    let syndrome = support
                        .iter()
                        .zip(&assignment)
                        .fold(0u128, |acc, (&q, &l)| acc ^ table[q][l]);
                    if let Some(matches) = suffixes.get(&syndrome) {
                        for (min_q, suffix) in matches {
                            if *min_q <= max_q {
                                continue;
                            }
                            let mut op = PauliOperator::identity(self.n);
                            for (&q, &l) in support.iter().zip(&assignment) {
                                op.set(q, letters[l]);
                            }
                            for &(q, l) in suffix {
                                op.set(q, letters[l]);
                            }
                            if !exclusion.contains(&op.to_row()) {
                                return DistanceResult::Found { weight: w, witness: op };
                            }
                        }
                    }
                    let mut i = 0;
                    loop {
                        if i == wa {
                            break;
                        }
                        assignment[i] += 1;
                        if assignment[i] < letters.len() {
                            break;
                        }
                        assignment[i] = 0;
                        i += 1;
                    }
                    if i == wa {
                        break;
                    }
                }
            }
        }
        DistanceResult::ExceedsBudget { w_max }
    }

    /// Serialize to the plain-text check-matrix format: one Pauli string per
    /// line, then optional `#gauge` and `#logical` sections.
    pub fn to_check_matrix(&self, logicals: &[PauliOperator]) -> String {
        let mut out = String::new();
        for g in &self.generators {
            out.push_str(&pauli_string(g));
            out.push('\n');
        }
        if !self.gauge_generators.is_empty() {
            out.push_str("#gauge\n");
            for g in &self.gauge_generators {
                out.push_str(&pauli_string(g));
                out.push('\n');
            }
        }
        if !logicals.is_empty() {
            out.push_str("#logical\n");
            for l in logicals {
                out.push_str(&pauli_string(l));
                out.push('\n');
            }
        }
        out
    }

    /// Parse the check-matrix format; returns the code and any `#logical`
    /// section entries.
    pub fn from_check_matrix(
        text: &str,
        metadata: CodeMetadata,
    ) -> Result<(StabilizerCode, Vec<PauliOperator>), PauliError> {
        let mut sections = vec![Vec::new()];
        let mut names = vec!["stabilizer".to_string()];
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('#') {
                match name {
                    "gauge" | "logical" => {
                        names.push(name.to_string());
                        sections.push(Vec::new());
                    }
                    other => return Err(PauliError::BadSection(other.to_string())),
                }
                continue;
            }
            sections.last_mut().unwrap().push(PauliOperator::from_str(line)?);
        }
        let n = sections[0]
            .first()
            .map(|p: &PauliOperator| p.n())
            .unwrap_or(0);
        let mut gauge = Vec::new();
        let mut logicals = Vec::new();
        for (name, ops) in names.iter().zip(sections.iter()).skip(1) {
            match name.as_str() {
                "gauge" => gauge = ops.clone(),
                _ => logicals = ops.clone(),
            }
        }
        let code = StabilizerCode::new(n, sections[0].clone(), gauge, metadata)?;
        Ok((code, logicals))
    }
}

pub fn pauli_string(op: &PauliOperator) -> String {
    (0..op.n())
        .map(|q| match op.letter(q) {
            None => 'I',
            Some(PauliLetter::X) => 'X',
            Some(PauliLetter::Y) => 'Y',
            Some(PauliLetter::Z) => 'Z',
        })
        .collect()
}
