//! Finite abelian anyon models over GF(2) with spin and monodromy data.
//!
//! A model is a group `GF(2)^rank` of charges together with a quadratic
//! spin form and a symmetric bilinear monodromy form, both valued in signs.
//! The built-in instances are the color code (CC, rank 4), the toric code
//! (TC, rank 2) and the three-fermion model (3F, rank 2), plus direct
//! products of the latter two used by the unfolding maps.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A charge of an abelian anyon model: a GF(2) vector packed into the low
/// bits of a byte (bit `i` is the coefficient of basis vector `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(pub u8);

impl Charge {
    pub const IDENTITY: Charge = Charge(0);

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

/// A topological phase. Every spin and monodromy in the models treated here
/// is a sign; complex phases never occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Plus,
    Minus,
}

impl Phase {
    pub fn from_exponent(e: bool) -> Phase {
        if e {
            Phase::Minus
        } else {
            Phase::Plus
        }
    }

    pub fn exponent(self) -> bool {
        matches!(self, Phase::Minus)
    }

    pub fn sign(self) -> i8 {
        match self {
            Phase::Plus => 1,
            Phase::Minus => -1,
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase::from_exponent(self.exponent() ^ rhs.exponent())
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::Plus => write!(f, "+1"),
            Phase::Minus => write!(f, "-1"),
        }
    }
}

/// Identifier of a built-in model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelName {
    /// Color code: rank 4, nine bosons and six fermions.
    ColorCode,
    /// Toric code: charges 1, e, m, eps.
    ToricCode,
    /// Three-fermion model: charges 1, f1, f2, f3, all nontrivial ones fermions.
    ThreeFermion,
}

impl ModelName {
    pub fn parse(s: &str) -> Result<ModelName, AnyonError> {
        match s.to_ascii_lowercase().as_str() {
            "cc" | "color" | "colorcode" => Ok(ModelName::ColorCode),
            "tc" | "toric" | "toriccode" => Ok(ModelName::ToricCode),
            "3f" | "threefermion" => Ok(ModelName::ThreeFermion),
            other => Err(AnyonError::UnknownModel(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnyonError {
    #[error("unknown anyon model `{0}` (expected cc, tc or 3f)")]
    UnknownModel(String),
    #[error("unknown charge label `{0}`")]
    UnknownLabel(String),
    #[error("charge {0:#06b} is not a charge of this model")]
    ForeignCharge(u8),
    #[error("charge `{0}` is not a fermion")]
    NotAFermion(String),
}

/// An abelian anyon model: group rank, spin form, monodromy form and a
/// naming table for the charges.
///
/// The spin form is stored as an exponent table over all `2^rank` charges;
/// the monodromy form as a GF(2) bilinear-form matrix. The two are kept
/// independent so that [`AnyonModel::verify`] can detect inconsistent data.
#[derive(Debug, Clone)]
pub struct AnyonModel {
    id: String,
    rank: usize,
    /// Exponent of the spin: `true` means spin -1 (fermion).
    spin_exp: Vec<bool>,
    /// Rows of the bilinear monodromy form matrix: exponent of `M(a, b)` is
    /// `a^T B b` over GF(2).
    mono_rows: Vec<u8>,
    labels: Vec<String>,
}

impl AnyonModel {
    /// The requested built-in model with its full charge data.
    pub fn builtin(name: ModelName) -> AnyonModel {
        match name {
            ModelName::ColorCode => Self::color_code(),
            ModelName::ToricCode => Self::toric_code(),
            ModelName::ThreeFermion => Self::three_fermion(),
        }
    }

    /// Color code model in the ordered basis (rx, rz, bx, bz).
    ///
    /// Spin exponent a1*a4 + a2*a3 and monodromy exponent
    /// a1*b4 + a4*b1 + a2*b3 + a3*b2, which make rx/bz and rz/bx the two
    /// symplectic pairs fixed by the unfolding identification
    /// rx↔e-, rz↔m+, bx↔e+, bz↔m-.
    pub fn color_code() -> AnyonModel {
        let rank = 4;
        let spin_exp = (0u8..16)
            .map(|a| {
                let b = |i: usize| (a >> i) & 1 == 1;
                (b(0) & b(3)) ^ (b(1) & b(2))
            })
            .collect();
        // rows of B: row i has bits of the partner of basis vector i
        let mono_rows = vec![0b1000, 0b0100, 0b0010, 0b0001u8];
        let mut labels = vec![String::new(); 16];
        for (vec, label) in CC_LABELS {
            labels[*vec as usize] = (*label).to_string();
        }
        AnyonModel {
            id: "cc".into(),
            rank,
            spin_exp,
            mono_rows,
            labels,
        }
    }

    /// Toric code in the basis (e, m): spin exponent a1*a2.
    pub fn toric_code() -> AnyonModel {
        AnyonModel {
            id: "tc".into(),
            rank: 2,
            spin_exp: vec![false, false, false, true],
            mono_rows: vec![0b10, 0b01],
            labels: vec!["1".into(), "e".into(), "m".into(), "eps".into()],
        }
    }

    /// Three-fermion model in the basis (f1, f2): every nontrivial charge is
    /// a fermion, monodromy is the toric-code symplectic form.
    pub fn three_fermion() -> AnyonModel {
        AnyonModel {
            id: "3f".into(),
            rank: 2,
            spin_exp: vec![false, true, true, true],
            mono_rows: vec![0b10, 0b01],
            labels: vec!["1".into(), "f1".into(), "f2".into(), "f3".into()],
        }
    }

    /// Direct product of two models (used for the two-layer unfolding
    /// targets). Layer `-` occupies the low bits, layer `+` the high bits.
    pub fn product(minus: &AnyonModel, plus: &AnyonModel) -> AnyonModel {
        let rank = minus.rank + plus.rank;
        let size = 1usize << rank;
        let lo_mask = (1u8 << minus.rank) - 1;
        let mut spin_exp = Vec::with_capacity(size);
        let mut labels = Vec::with_capacity(size);
        for a in 0..size as u8 {
            let lo = a & lo_mask;
            let hi = a >> minus.rank;
            spin_exp.push(minus.spin_exp[lo as usize] ^ plus.spin_exp[hi as usize]);
            let mut label = String::new();
            if lo != 0 {
                label.push_str(&format!("{}-", minus.labels[lo as usize]));
            }
            if hi != 0 {
                label.push_str(&format!("{}+", plus.labels[hi as usize]));
            }
            if label.is_empty() {
                label.push('1');
            }
            labels.push(label);
        }
        let mut mono_rows = Vec::with_capacity(rank);
        for i in 0..minus.rank {
            mono_rows.push(minus.mono_rows[i]);
        }
        for i in 0..plus.rank {
            mono_rows.push(plus.mono_rows[i] << minus.rank);
        }
        AnyonModel {
            id: format!("{}x{}", minus.id, plus.id),
            rank,
            spin_exp,
            mono_rows,
            labels,
        }
    }

    /// A copy of this model with one spin entry flipped. Used to exercise the
    /// consistency checks; the result is deliberately inconsistent.
    pub fn with_flipped_spin(&self, a: Charge) -> AnyonModel {
        let mut m = self.clone();
        m.spin_exp[a.0 as usize] = !m.spin_exp[a.0 as usize];
        m.id = format!("{}-tampered", m.id);
        m
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_charges(&self) -> usize {
        1 << self.rank
    }

    pub fn charges(&self) -> impl Iterator<Item = Charge> {
        (0..self.num_charges() as u8).map(Charge)
    }

    pub fn contains(&self, a: Charge) -> bool {
        (a.0 as usize) < self.num_charges()
    }

    pub fn label(&self, a: Charge) -> &str {
        &self.labels[a.0 as usize]
    }

    pub fn charge(&self, label: &str) -> Result<Charge, AnyonError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| Charge(i as u8))
            .ok_or_else(|| AnyonError::UnknownLabel(label.to_string()))
    }

    /// Fusion: the GF(2) sum of the charge vectors.
    pub fn fuse(&self, a: Charge, b: Charge) -> Charge {
        debug_assert!(self.contains(a) && self.contains(b));
        Charge(a.0 ^ b.0)
    }

    pub fn spin(&self, a: Charge) -> Phase {
        Phase::from_exponent(self.spin_exp[a.0 as usize])
    }

    pub fn monodromy(&self, a: Charge, b: Charge) -> Phase {
        let mut acc = 0u8;
        for i in 0..self.rank {
            if (a.0 >> i) & 1 == 1 {
                acc ^= self.mono_rows[i];
            }
        }
        Phase::from_exponent(((acc & b.0).count_ones() & 1) == 1)
    }

    pub fn is_boson(&self, a: Charge) -> bool {
        !a.is_identity() && self.spin(a) == Phase::Plus
    }

    pub fn is_fermion(&self, a: Charge) -> bool {
        self.spin(a) == Phase::Minus
    }

    pub fn bosons(&self) -> Vec<Charge> {
        self.charges().filter(|&a| self.is_boson(a)).collect()
    }

    pub fn fermions(&self) -> Vec<Charge> {
        self.charges().filter(|&a| self.is_fermion(a)).collect()
    }

    /// All unordered pairs of nontrivial bosons fusing to the fermion `f`,
    /// found by brute force over the boson grid.
    pub fn fermion_decompositions(
        &self,
        f: Charge,
    ) -> Result<BTreeSet<(Charge, Charge)>, AnyonError> {
        if !self.contains(f) {
            return Err(AnyonError::ForeignCharge(f.0));
        }
        if !self.is_fermion(f) {
            return Err(AnyonError::NotAFermion(self.label(f).to_string()));
        }
        let bosons = self.bosons();
        let mut pairs = BTreeSet::new();
        for &a in &bosons {
            for &b in &bosons {
                if a < b && self.fuse(a, b) == f {
                    pairs.insert((a, b));
                }
            }
        }
        Ok(pairs)
    }

    /// Exhaustive consistency report over all charges: self-inverse fusion,
    /// symmetry and bilinearity of the monodromy, the composite spin and
    /// braiding laws, normalization of both forms, and quantum dimension 1
    /// for every charge (abelian models).
    pub fn verify(&self) -> ModelReport {
        let mut report = ModelReport::new(self.id.clone());
        let charges: Vec<Charge> = self.charges().collect();

        report.check("spin(1) = +1", self.spin(Charge::IDENTITY) == Phase::Plus, || {
            "spin of the vacuum is -1".to_string()
        });
        report.check(
            "monodromy(a, 1) = +1 for all a",
            charges
                .iter()
                .all(|&a| self.monodromy(a, Charge::IDENTITY) == Phase::Plus),
            || "some charge braids nontrivially with the vacuum".to_string(),
        );
        report.check(
            "a x a = 1 for all a (self-inverse)",
            charges.iter().all(|&a| self.fuse(a, a).is_identity()),
            || "some charge is not its own antiparticle".to_string(),
        );

        let mut sym_witness = None;
        'sym: for &a in &charges {
            for &b in &charges {
                if self.monodromy(a, b) != self.monodromy(b, a) {
                    sym_witness = Some((a, b));
                    break 'sym;
                }
            }
        }
        report.check("monodromy symmetric", sym_witness.is_none(), || {
            let (a, b) = sym_witness.unwrap();
            format!("M({}, {}) != M({}, {})", self.label(a), self.label(b), self.label(b), self.label(a))
        });

        let mut bil_witness = None;
        'bil: for &a in &charges {
            for &b in &charges {
                for &d in &charges {
                    let lhs = self.monodromy(self.fuse(a, b), d);
                    let rhs = self.monodromy(a, d) * self.monodromy(b, d);
                    if lhs != rhs {
                        bil_witness = Some((a, b, d));
                        break 'bil;
                    }
                }
            }
        }
        report.check(
            "monodromy bilinear: M(a x b, d) = M(a, d) M(b, d)",
            bil_witness.is_none(),
            || {
                let (a, b, d) = bil_witness.unwrap();
                format!(
                    "witness a={}, b={}, d={}",
                    self.label(a),
                    self.label(b),
                    self.label(d)
                )
            },
        );

        let mut spin_witness = None;
        'spin: for &a in &charges {
            for &b in &charges {
                let lhs = self.spin(self.fuse(a, b));
                let rhs = self.spin(a) * self.spin(b) * self.monodromy(a, b);
                if lhs != rhs {
                    spin_witness = Some((a, b));
                    break 'spin;
                }
            }
        }
        report.check(
            "composite spin: spin(a x b) = spin(a) spin(b) M(a, b)",
            spin_witness.is_none(),
            || {
                let (a, b) = spin_witness.unwrap();
                format!("witness ({}, {})", self.label(a), self.label(b))
            },
        );

        // Abelian fusion is deterministic, so N_{a,c}^a = 1 exactly for c = 1
        // and d_a^2 = sum_c d_c N_{a,c}^a = 1 for every charge.
        report.check(
            "quantum dimension 1 for every charge",
            charges
                .iter()
                .all(|&a| charges.iter().filter(|&&c| self.fuse(a, c) == a).count() == 1),
            || "fusion with some nonvacuum charge fixes a".to_string(),
        );

        report
    }
}

/// Result of [`AnyonModel::verify`]: one entry per law, with a witness on
/// failure.
#[derive(Debug, Clone)]
pub struct ModelReport {
    pub model: String,
    pub entries: Vec<LawCheck>,
}

#[derive(Debug, Clone)]
pub struct LawCheck {
    pub law: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl ModelReport {
    fn new(model: String) -> ModelReport {
        ModelReport {
            model,
            entries: Vec::new(),
        }
    }

    fn check(&mut self, law: &str, pass: bool, witness: impl FnOnce() -> String) {
        self.entries.push(LawCheck {
            law: law.to_string(),
            pass,
            witness: if pass { None } else { Some(witness()) },
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Canonical labels of the sixteen color-code charges in the
/// (rx, rz, bx, bz) basis. Green labels and the y row are fusion products;
/// fermions are numbered f1..f6 starting from f1 = rz x bx.
const CC_LABELS: &[(u8, &str)] = &[
    (0b0000, "1"),
    (0b0001, "rx"),
    (0b0010, "rz"),
    (0b0011, "ry"),
    (0b0100, "bx"),
    (0b0101, "gx"),
    (0b0110, "f1"),
    (0b0111, "f2"),
    (0b1000, "bz"),
    (0b1001, "f6"),
    (0b1010, "gz"),
    (0b1011, "f3"),
    (0b1100, "by"),
    (0b1101, "f5"),
    (0b1110, "f4"),
    (0b1111, "gy"),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn cc() -> AnyonModel {
        AnyonModel::color_code()
    }

    #[test]
    fn label_table_is_a_bijection() {
        let m = cc();
        let mut seen = std::collections::HashSet::new();
        for a in m.charges() {
            assert!(seen.insert(m.label(a).to_string()), "duplicate {}", m.label(a));
            assert_eq!(m.charge(m.label(a)).unwrap(), a);
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn cc_has_sixteen_charges_nine_bosons_six_fermions() {
        let m = cc();
        assert_eq!(m.rank(), 4);
        assert_eq!(m.num_charges(), 16);
        assert_eq!(m.bosons().len(), 9);
        assert_eq!(m.fermions().len(), 6);
    }

    #[test]
    fn derived_labels_match_fusion_rules() {
        let m = cc();
        let c = |l: &str| m.charge(l).unwrap();
        // gP = rP x bP, Cy = Cx x Cz
        for p in ["x", "y", "z"] {
            assert_eq!(
                m.fuse(c(&format!("r{p}")), c(&format!("b{p}"))),
                c(&format!("g{p}"))
            );
        }
        for col in ["r", "g", "b"] {
            assert_eq!(
                m.fuse(c(&format!("{col}x")), c(&format!("{col}z"))),
                c(&format!("{col}y"))
            );
        }
        assert_eq!(m.fuse(c("rz"), c("bx")), c("f1"));
        assert_eq!(m.fuse(c("rx"), c("bz")), c("f6"));
    }

    #[test]
    fn cc_boson_monodromy_is_grid_rule() {
        // -1 exactly when both the color and the Pauli label differ
        let m = cc();
        let colors = ["r", "g", "b"];
        let paulis = ["x", "y", "z"];
        for (ci, cl) in colors.iter().enumerate() {
            for (pi, pl) in paulis.iter().enumerate() {
                for (cj, cl2) in colors.iter().enumerate() {
                    for (pj, pl2) in paulis.iter().enumerate() {
                        let a = m.charge(&format!("{cl}{pl}")).unwrap();
                        let b = m.charge(&format!("{cl2}{pl2}")).unwrap();
                        let expect = ci != cj && pi != pj;
                        assert_eq!(
                            m.monodromy(a, b).exponent(),
                            expect,
                            "M({cl}{pl}, {cl2}{pl2})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cc_fermion_monodromy_follows_parity_rule() {
        // M(f_i, f_j) = (-1)^{delta(i != j)} (-1)^{i - j}
        let m = cc();
        for i in 1..=6u32 {
            for j in 1..=6u32 {
                let a = m.charge(&format!("f{i}")).unwrap();
                let b = m.charge(&format!("f{j}")).unwrap();
                let expect = if i == j { false } else { (i + j + 1) % 2 == 1 };
                assert_eq!(m.monodromy(a, b).exponent(), expect, "M(f{i}, f{j})");
            }
        }
    }

    #[test]
    fn fermion_decompositions_enumerate_boson_pairs() {
        let m = cc();
        let pair = |a: &str, b: &str| {
            let (a, b) = (m.charge(a).unwrap(), m.charge(b).unwrap());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        let f1 = m.fermion_decompositions(m.charge("f1").unwrap()).unwrap();
        assert_eq!(
            f1,
            [pair("rz", "bx"), pair("gz", "by"), pair("ry", "gx")].into()
        );
        let f6 = m.fermion_decompositions(m.charge("f6").unwrap()).unwrap();
        assert_eq!(
            f6,
            [pair("rx", "bz"), pair("ry", "gz"), pair("gx", "by")].into()
        );
        for i in 1..=6 {
            let f = m.charge(&format!("f{i}")).unwrap();
            assert_eq!(m.fermion_decompositions(f).unwrap().len(), 3, "f{i}");
        }
        assert!(m.fermion_decompositions(m.charge("rx").unwrap()).is_err());
    }

    #[test]
    fn builtin_models_verify() {
        for name in [ModelName::ColorCode, ModelName::ToricCode, ModelName::ThreeFermion] {
            let m = AnyonModel::builtin(name);
            let report = m.verify();
            assert!(report.all_pass(), "{}: {:?}", m.id(), report.entries);
        }
        let tc = AnyonModel::toric_code();
        assert_eq!(tc.fermions().len(), 1);
        let tf = AnyonModel::three_fermion();
        assert_eq!(tf.fermions().len(), 3);
        assert_eq!(
            tf.monodromy(Charge(0b01), Charge(0b10)),
            Phase::Minus
        );
        assert_eq!(tf.monodromy(Charge(0b01), Charge(0b01)), Phase::Plus);
    }

    #[test]
    fn tampered_spin_is_caught_with_witness() {
        let m = cc();
        let gy = m.charge("gy").unwrap();
        let bad = m.with_flipped_spin(gy);
        let report = bad.verify();
        assert!(!report.all_pass());
        let failing: Vec<_> = report.entries.iter().filter(|e| !e.pass).collect();
        assert!(failing.iter().any(|e| e.law.contains("composite spin")));
    }

    #[test]
    fn product_model_layers_compose() {
        let tc2 = AnyonModel::product(&AnyonModel::toric_code(), &AnyonModel::toric_code());
        assert_eq!(tc2.rank(), 4);
        assert!(tc2.verify().all_pass());
        assert_eq!(tc2.fermions().len(), 6);
        let em = tc2.charge("e-m+").unwrap_or_else(|_| panic!("label table: {:?}", tc2.labels));
        assert_eq!(tc2.spin(em), Phase::Plus);
    }
}
