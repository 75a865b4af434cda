//! Gapped boundaries as Lagrangian subgroups, the action of symmetries on
//! them, and the construction of color-code boundaries by folding the
//! three-fermion bilayer.

use std::collections::BTreeSet;

use crate::anyon::{AnyonModel, Charge, Phase};
use crate::symmetry::{Automorphism, SymmetryGroup};

/// A Lagrangian subgroup of an anyon model: a maximal set of mutually
/// transparent bosons closed under fusion. Condensing it gaps out a
/// boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LagrangianSubgroup {
    pub elements: BTreeSet<Charge>,
    /// Canonical boundary name for the color code (a color for the rows of
    /// the boson grid sharing a color, a Pauli letter for the columns).
    pub name: Option<String>,
}

/// Why a charge subset fails to be Lagrangian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LagrangianViolation {
    /// Not closed under fusion (or missing the identity); carries a witness
    /// pair whose product escapes the set.
    NotClosed(Charge, Charge),
    /// Contains a fermion.
    Spin(Charge),
    /// Two members braid nontrivially.
    Braiding(Charge, Charge),
    /// Not maximal: the witness charge braids trivially with every member
    /// but is excluded.
    NotMaximal(Charge),
}

impl LagrangianViolation {
    pub fn condition(&self) -> &'static str {
        match self {
            LagrangianViolation::NotClosed(..) => "I",
            LagrangianViolation::Spin(_) => "II-spin",
            LagrangianViolation::Braiding(..) => "II-braid",
            LagrangianViolation::NotMaximal(_) => "III",
        }
    }
}

/// Check conditions I (closure), II (bosonic and mutually transparent) and
/// III (maximal) for a charge subset, reporting the first violation found.
pub fn is_lagrangian(
    model: &AnyonModel,
    subset: &BTreeSet<Charge>,
) -> Result<(), LagrangianViolation> {
    if !subset.contains(&Charge::IDENTITY) {
        return Err(LagrangianViolation::NotClosed(
            Charge::IDENTITY,
            Charge::IDENTITY,
        ));
    }
    for &a in subset {
        for &b in subset {
            if !subset.contains(&model.fuse(a, b)) {
                return Err(LagrangianViolation::NotClosed(a, b));
            }
        }
    }
    for &a in subset {
        if model.is_fermion(a) {
            return Err(LagrangianViolation::Spin(a));
        }
        for &b in subset {
            if model.monodromy(a, b) == Phase::Minus {
                return Err(LagrangianViolation::Braiding(a, b));
            }
        }
    }
    for c in model.charges() {
        if subset.contains(&c) {
            continue;
        }
        if subset.iter().all(|&a| model.monodromy(c, a) == Phase::Plus) {
            return Err(LagrangianViolation::NotMaximal(c));
        }
    }
    Ok(())
}

/// Canonical boundary name for a color-code Lagrangian subgroup: the shared
/// color or Pauli letter of its nontrivial members.
fn cc_boundary_name(model: &AnyonModel, elements: &BTreeSet<Charge>) -> Option<String> {
    let labels: Vec<&str> = elements
        .iter()
        .filter(|a| !a.is_identity())
        .map(|&a| model.label(a))
        .collect();
    if labels.is_empty() || labels.iter().any(|l| l.len() != 2) {
        return None;
    }
    let colors: BTreeSet<u8> = labels.iter().map(|l| l.as_bytes()[0]).collect();
    let paulis: BTreeSet<u8> = labels.iter().map(|l| l.as_bytes()[1]).collect();
    if colors.len() == 1 {
        return Some(
            match colors.iter().next().unwrap() {
                b'r' => "red",
                b'g' => "green",
                _ => "blue",
            }
            .to_string(),
        );
    }
    if paulis.len() == 1 {
        return Some((*paulis.iter().next().unwrap() as char).to_string());
    }
    None
}

/// All Lagrangian subgroups of a model, found by spanning every pair/tuple of
/// generators exhaustively. Deterministic order (by element sets).
pub fn enumerate_lagrangian_subgroups(model: &AnyonModel) -> Vec<LagrangianSubgroup> {
    let n = model.num_charges();
    let mut found: BTreeSet<BTreeSet<Charge>> = BTreeSet::new();
    // every subgroup is the span of at most `rank` generators; rank ≤ 4 keeps
    // this loop tiny
    let mut gens = vec![0u8; model.rank()];
    let total = n.pow(model.rank() as u32);
    for idx in 0..total {
        let mut t = idx;
        for g in gens.iter_mut() {
            *g = (t % n) as u8;
            t /= n;
        }
        let mut span = BTreeSet::from([Charge::IDENTITY]);
        for &g in &gens {
            let new: Vec<Charge> = span.iter().map(|&a| model.fuse(a, Charge(g))).collect();
            span.extend(new);
        }
        if is_lagrangian(model, &span).is_ok() {
            found.insert(span);
        }
    }
    found
        .into_iter()
        .map(|elements| {
            let name = cc_boundary_name(model, &elements);
            LagrangianSubgroup { elements, name }
        })
        .collect()
}

/// The named color-code boundary.
pub fn cc_boundary(model: &AnyonModel, name: &str) -> Option<LagrangianSubgroup> {
    enumerate_lagrangian_subgroups(model)
        .into_iter()
        .find(|m| m.name.as_deref() == Some(name))
}

/// Elementwise image of a boundary under a symmetry; always again Lagrangian.
pub fn act_on_boundary(
    model: &AnyonModel,
    phi: &Automorphism,
    m: &LagrangianSubgroup,
) -> LagrangianSubgroup {
    let elements: BTreeSet<Charge> = m.elements.iter().map(|&a| phi.apply(a)).collect();
    debug_assert!(is_lagrangian(model, &elements).is_ok());
    let name = cc_boundary_name(model, &elements);
    LagrangianSubgroup { elements, name }
}

/// The twists that can condense at (be absorbed by) a boundary: the
/// stabilizer of the boundary under the symmetry action.
pub fn condensable_twists(
    model: &AnyonModel,
    group: &SymmetryGroup,
    m: &LagrangianSubgroup,
) -> Vec<Automorphism> {
    group
        .elements()
        .iter()
        .filter(|phi| act_on_boundary(model, phi, m).elements == m.elements)
        .cloned()
        .collect()
}

/// The symmetries interpreting a corner between two boundaries: all φ with
/// φ(M1) = M2, a coset of `condensable_twists(M1)`.
pub fn corner_twist_candidates(
    model: &AnyonModel,
    group: &SymmetryGroup,
    m1: &LagrangianSubgroup,
    m2: &LagrangianSubgroup,
) -> Vec<Automorphism> {
    group
        .elements()
        .iter()
        .filter(|phi| act_on_boundary(model, phi, m1).elements == m2.elements)
        .cloned()
        .collect()
}

/// Relabeling of color-code charges as a toric-code bilayer, in the product
/// basis (e⁻, m⁻, e⁺, m⁺): rx and bz are the layer-local e⁻ and m⁻, bx and
/// rz the layer-local e⁺ and m⁺.
pub fn unfold_cc_to_two_tc() -> Automorphism {
    Automorphism::from_columns(vec![0b0001, 0b1000, 0b0100, 0b0010])
}

/// Relabeling of color-code charges as a three-fermion bilayer, in the
/// product basis (f1⁻, f2⁻, f1⁺, f2⁺).
pub fn unfold_cc_to_two_3f() -> Automorphism {
    Automorphism::from_columns(vec![0b0101, 0b1011, 0b1111, 0b0110])
}

/// A failed law of [`verify_iso`], with a witness pair.
#[derive(Debug, Clone)]
pub struct IsoViolation {
    pub law: &'static str,
    pub witness: (Charge, Charge),
}

/// Check a proposed charge relabeling `map : src → dst` for being a group
/// isomorphism preserving spin and monodromy, over all pairs.
pub fn verify_iso(
    map: &Automorphism,
    src: &AnyonModel,
    dst: &AnyonModel,
) -> Result<(), Vec<IsoViolation>> {
    let mut violations = Vec::new();
    if !map.is_invertible() {
        violations.push(IsoViolation {
            law: "bijective",
            witness: (Charge::IDENTITY, Charge::IDENTITY),
        });
    }
    for a in src.charges() {
        if dst.spin(map.apply(a)) != src.spin(a) {
            violations.push(IsoViolation {
                law: "spin preserved",
                witness: (a, a),
            });
        }
        for b in src.charges() {
            if map.apply(src.fuse(a, b)) != dst.fuse(map.apply(a), map.apply(b)) {
                violations.push(IsoViolation {
                    law: "fusion homomorphism",
                    witness: (a, b),
                });
            }
            if dst.monodromy(map.apply(a), map.apply(b)) != src.monodromy(a, b) {
                violations.push(IsoViolation {
                    law: "monodromy preserved",
                    witness: (a, b),
                });
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Fold the three-fermion bilayer along a transparent domain wall `w` of the
/// single layer: the condensed charges {(w(b), b)} of the bilayer, read back
/// as a color-code boundary through the unfolding relabeling. The six walls
/// of the three-fermion model yield the six color-code boundaries.
pub fn fold_boundary(wall: &Automorphism) -> LagrangianSubgroup {
    assert_eq!(wall.rank(), 2);
    let cc = AnyonModel::color_code();
    let embed = unfold_cc_to_two_3f();
    let fold = embed.inverse();
    let elements: BTreeSet<Charge> = (0u8..4)
        .map(|b| {
            let pair = Charge(b | (wall.apply(Charge(b)).0 << 2));
            fold.apply(pair)
        })
        .collect();
    debug_assert!(is_lagrangian(&cc, &elements).is_ok());
    let name = cc_boundary_name(&cc, &elements);
    LagrangianSubgroup { elements, name }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::CcGenerator;

    fn cc() -> AnyonModel {
        AnyonModel::color_code()
    }

    fn set(model: &AnyonModel, labels: &[&str]) -> BTreeSet<Charge> {
        labels.iter().map(|l| model.charge(l).unwrap()).collect()
    }

    #[test]
    fn cc_has_six_boundaries_named_by_the_grid() {
        let m = cc();
        let subs = enumerate_lagrangian_subgroups(&m);
        assert_eq!(subs.len(), 6);
        let names: BTreeSet<_> = subs.iter().map(|s| s.name.clone().unwrap()).collect();
        assert_eq!(
            names,
            ["red", "green", "blue", "x", "y", "z"]
                .map(String::from)
                .into()
        );
        let blue = cc_boundary(&m, "blue").unwrap();
        assert_eq!(blue.elements, set(&m, &["1", "bx", "by", "bz"]));
        let x = cc_boundary(&m, "x").unwrap();
        assert_eq!(x.elements, set(&m, &["1", "rx", "gx", "bx"]));
        for s in &subs {
            assert_eq!(s.elements.len(), 4);
        }
    }

    #[test]
    fn tc_has_two_boundaries_and_3f_none() {
        let tc = AnyonModel::toric_code();
        let subs = enumerate_lagrangian_subgroups(&tc);
        let sets: Vec<_> = subs.iter().map(|s| s.elements.clone()).collect();
        assert_eq!(sets, vec![set(&tc, &["1", "e"]), set(&tc, &["1", "m"])]);
        assert!(enumerate_lagrangian_subgroups(&AnyonModel::three_fermion()).is_empty());
    }

    #[test]
    fn violations_are_reported_with_condition_and_witness() {
        let m = cc();
        assert!(is_lagrangian(&m, &set(&m, &["1", "rx", "ry", "rz"])).is_ok());
        match is_lagrangian(&m, &set(&m, &["1", "f1"])) {
            Err(v @ LagrangianViolation::Spin(a)) => {
                assert_eq!(v.condition(), "II-spin");
                assert_eq!(m.label(a), "f1");
            }
            other => panic!("{other:?}"),
        }
        match is_lagrangian(&m, &set(&m, &["1", "rx"])) {
            Err(v @ LagrangianViolation::NotMaximal(_)) => assert_eq!(v.condition(), "III"),
            other => panic!("{other:?}"),
        }
        match is_lagrangian(&m, &set(&m, &["1", "rx", "gz"])) {
            Err(v) => assert!(matches!(
                v,
                LagrangianViolation::NotClosed(..) | LagrangianViolation::Braiding(..)
            )),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn symmetries_act_transitively_on_boundaries() {
        let m = cc();
        let group = SymmetryGroup::enumerate(&m);
        let subs = enumerate_lagrangian_subgroups(&m);
        let red = cc_boundary(&m, "red").unwrap();
        let g = CcGenerator::G.automorphism(&m);
        assert_eq!(act_on_boundary(&m, &g, &red).name.as_deref(), Some("blue"));
        let d = CcGenerator::D.automorphism(&m);
        assert_eq!(act_on_boundary(&m, &d, &red).name.as_deref(), Some("x"));
        for m1 in &subs {
            for m2 in &subs {
                let candidates = corner_twist_candidates(&m, &group, m1, m2);
                assert_eq!(candidates.len(), 12, "{:?} -> {:?}", m1.name, m2.name);
            }
        }
    }

    #[test]
    fn boundary_stabilizers_contain_the_expected_twists() {
        let m = cc();
        let group = SymmetryGroup::enumerate(&m);
        let red = cc_boundary(&m, "red").unwrap();
        let x = cc_boundary(&m, "x").unwrap();
        let stab_red = condensable_twists(&m, &group, &red);
        assert_eq!(stab_red.len(), 12);
        assert!(stab_red.contains(&CcGenerator::R.automorphism(&m)));
        // every pure Pauli permutation fixes every color boundary
        for g in [
            CcGenerator::X,
            CcGenerator::Y,
            CcGenerator::Z,
            CcGenerator::Xz,
            CcGenerator::Zx,
        ] {
            assert!(stab_red.contains(&g.automorphism(&m)), "{}", g.name());
        }
        let stab_x = condensable_twists(&m, &group, &x);
        assert!(stab_x.contains(&CcGenerator::X.automorphism(&m)));
        // corner candidates between red and blue include both G and RB
        let blue = cc_boundary(&m, "blue").unwrap();
        let candidates = corner_twist_candidates(&m, &group, &red, &blue);
        assert!(candidates.contains(&CcGenerator::G.automorphism(&m)));
        assert!(candidates.contains(&CcGenerator::Rb.automorphism(&m)));
    }

    #[test]
    fn action_is_compatible_with_composition() {
        let m = cc();
        let red = cc_boundary(&m, "red").unwrap();
        let g = CcGenerator::G.automorphism(&m);
        let d = CcGenerator::D.automorphism(&m);
        assert_eq!(
            act_on_boundary(&m, &d, &act_on_boundary(&m, &g, &red)),
            act_on_boundary(&m, &d.compose(&g), &red)
        );
    }

    #[test]
    fn unfold_maps_are_isomorphisms_with_frozen_images() {
        let cc = cc();
        let two_tc = AnyonModel::product(&AnyonModel::toric_code(), &AnyonModel::toric_code());
        let two_3f = AnyonModel::product(&AnyonModel::three_fermion(), &AnyonModel::three_fermion());
        let to_tc = unfold_cc_to_two_tc();
        let to_3f = unfold_cc_to_two_3f();
        verify_iso(&to_tc, &cc, &two_tc).unwrap();
        verify_iso(&to_3f, &cc, &two_3f).unwrap();
        let img_tc = |l: &str| two_tc.label(to_tc.apply(cc.charge(l).unwrap())).to_string();
        assert_eq!(img_tc("ry"), "e-m+");
        assert_eq!(img_tc("gy"), "eps-eps+");
        let img_3f = |l: &str| two_3f.label(to_3f.apply(cc.charge(l).unwrap())).to_string();
        assert_eq!(img_3f("rx"), "f1-f1+");
        assert_eq!(img_3f("bz"), "f2-f1+");
        // a tampered map is rejected with witnesses
        let bad = Automorphism::from_columns(vec![0b0001, 0b1000, 0b0100, 0b0001]);
        assert!(verify_iso(&bad, &cc, &two_tc).is_err());
    }

    #[test]
    fn folding_3f_walls_yields_all_six_boundaries() {
        let tf = AnyonModel::three_fermion();
        let walls = SymmetryGroup::enumerate(&tf);
        assert_eq!(walls.order(), 6);
        let mut names = BTreeSet::new();
        for w in walls.elements() {
            let b = fold_boundary(w);
            assert!(is_lagrangian(&cc(), &b.elements).is_ok());
            names.insert(b.name.clone().unwrap());
        }
        assert_eq!(names.len(), 6);
        // the direct fold gives the x Pauli boundary
        let direct = fold_boundary(&Automorphism::identity(2));
        assert_eq!(direct.name.as_deref(), Some("x"));
        // the f2 <-> f3 exchange wall gives the red color boundary
        let f2f3 = Automorphism::from_columns(vec![0b01, 0b11]);
        assert_eq!(fold_boundary(&f2f3).name.as_deref(), Some("red"));
        // the two cyclic walls give the y and z Pauli boundaries
        let cyc = Automorphism::from_columns(vec![0b10, 0b11]);
        let cyc2 = cyc.compose(&cyc);
        let mut cyc_names = BTreeSet::new();
        cyc_names.insert(fold_boundary(&cyc).name.clone().unwrap());
        cyc_names.insert(fold_boundary(&cyc2).name.clone().unwrap());
        assert_eq!(cyc_names, ["y", "z"].map(String::from).into());
    }
}
