//! Pointwise conditions on a relation that classify its rough-set algebra.
//!
//! Each check returns the first witness (in scan order) when it fails, so a
//! violated condition always comes with a concrete counterexample. All
//! element indices in witnesses are zero-based.

use crate::approx::upper;
use crate::families::{FamilyKind, SetFamily};
use crate::relation::{BinaryRelation, Subset};
use crate::{Caps, Result};
use serde::Serialize;

/// Counterexample for a failed condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConditionWitness {
    /// `{x}` and `{y}` have upper approximations inside the target of `p`
    /// but no row fits under both.
    MeetlessTriple { x: usize, y: usize, p: usize },
    /// The target of `p` includes `count` atoms instead of exactly one.
    AtomCount { p: usize, count: usize },
    /// The upper approximation of `{x}` is not an atom of the upper family.
    RowNotAtom { x: usize },
    /// The core of the inverse row of `x` is empty.
    EmptyCore { x: usize },
    /// The inverse rows do not cover this element.
    Uncovered { element: usize },
    /// The inverse row of `x` lies inside the union of the other rows.
    RedundantRow { x: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ConditionWitness>,
}

impl ConditionReport {
    fn ok(name: &'static str) -> Self {
        ConditionReport {
            name,
            holds: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: ConditionWitness) -> Self {
        ConditionReport {
            name,
            holds: false,
            witness: Some(witness),
        }
    }
}

fn inverse_rows(r: &BinaryRelation) -> Vec<Subset> {
    let inv = r.inverse();
    (0..r.n()).map(|x| inv.succ(x)).collect()
}

/// Scans a target set for two singleton upper approximations inside it with
/// no row under their intersection.
fn meetless_pair(rows: &[Subset], target: Subset) -> Option<(usize, usize)> {
    let inside: Vec<usize> = (0..rows.len())
        .filter(|&x| rows[x].is_subset(target))
        .collect();
    for (i, &x) in inside.iter().enumerate() {
        for &y in &inside[i..] {
            let cap = rows[x].inter(rows[y]);
            if !rows.iter().any(|&rz| rz.is_subset(cap)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Whenever two singleton upper approximations fit inside a third one, some
/// singleton upper approximation fits under both.
pub fn check_st1(r: &BinaryRelation) -> Result<ConditionReport> {
    let rows = inverse_rows(r);
    for (p, &target) in rows.iter().enumerate() {
        if let Some((x, y)) = meetless_pair(&rows, target) {
            return Ok(ConditionReport::fail(
                "St1",
                ConditionWitness::MeetlessTriple { x, y, p },
            ));
        }
    }
    Ok(ConditionReport::ok("St1"))
}

/// Like St1, but the bounding sets are the upper approximations of the rows
/// that generate join-irreducible members of the inverse upper family.
pub fn check_st2(r: &BinaryRelation, caps: &Caps) -> Result<ConditionReport> {
    let rows = inverse_rows(r);
    let inv_upper = SetFamily::build(r, FamilyKind::InvUpper, caps)?;
    for p in 0..r.n() {
        if !inv_upper.is_cji(r.succ(p))? {
            continue;
        }
        let target = upper(r, r.succ(p));
        if let Some((x, y)) = meetless_pair(&rows, target) {
            return Ok(ConditionReport::fail(
                "St2",
                ConditionWitness::MeetlessTriple { x, y, p },
            ));
        }
    }
    Ok(ConditionReport::ok("St2"))
}

fn atom_count(atoms: &[Subset], target: Subset) -> usize {
    atoms.iter().filter(|a| a.is_subset(target)).count()
}

/// Every singleton upper approximation includes exactly one atom of the
/// upper family.
pub fn check_st1_atomic(r: &BinaryRelation, caps: &Caps) -> Result<ConditionReport> {
    let upper_family = SetFamily::build(r, FamilyKind::Upper, caps)?;
    let atoms = upper_family.atom_members();
    let rows = inverse_rows(r);
    for (p, &target) in rows.iter().enumerate() {
        let count = atom_count(&atoms, target);
        if count != 1 {
            return Ok(ConditionReport::fail(
                "St1\u{b0}",
                ConditionWitness::AtomCount { p, count },
            ));
        }
    }
    Ok(ConditionReport::ok("St1\u{b0}"))
}

/// Like the atomic form of St1, but over the targets of St2.
pub fn check_st2_atomic(r: &BinaryRelation, caps: &Caps) -> Result<ConditionReport> {
    let upper_family = SetFamily::build(r, FamilyKind::Upper, caps)?;
    let inv_upper = SetFamily::build(r, FamilyKind::InvUpper, caps)?;
    let atoms = upper_family.atom_members();
    for p in 0..r.n() {
        if !inv_upper.is_cji(r.succ(p))? {
            continue;
        }
        let target = upper(r, r.succ(p));
        let count = atom_count(&atoms, target);
        if count != 1 {
            return Ok(ConditionReport::fail(
                "St2\u{b0}",
                ConditionWitness::AtomCount { p, count },
            ));
        }
    }
    Ok(ConditionReport::ok("St2\u{b0}"))
}

/// Every singleton upper approximation is an atom of the upper family and
/// every inverse row has a nonempty core.
pub fn check_rst(r: &BinaryRelation, caps: &Caps) -> Result<ConditionReport> {
    let upper_family = SetFamily::build(r, FamilyKind::Upper, caps)?;
    let inv = r.inverse();
    for x in 0..r.n() {
        if !upper_family.is_atom(inv.succ(x))? {
            return Ok(ConditionReport::fail(
                "rSt",
                ConditionWitness::RowNotAtom { x },
            ));
        }
        if inv.core(x).is_empty() {
            return Ok(ConditionReport::fail(
                "rSt",
                ConditionWitness::EmptyCore { x },
            ));
        }
    }
    Ok(ConditionReport::ok("rSt"))
}

/// The distinct inverse rows form an irredundant covering of the universe.
pub fn check_clinker(r: &BinaryRelation) -> Result<ConditionReport> {
    let n = r.n();
    let rows = inverse_rows(r);
    let mut distinct: Vec<Subset> = Vec::new();
    for &row in &rows {
        if !distinct.contains(&row) {
            distinct.push(row);
        }
    }
    let mut union = Subset::empty(n);
    for &d in &distinct {
        union = union.union(d);
    }
    if let Some(element) = union.complement().iter().next() {
        return Ok(ConditionReport::fail(
            "clinker",
            ConditionWitness::Uncovered { element },
        ));
    }
    for &d in &distinct {
        let mut rest = Subset::empty(n);
        for &other in &distinct {
            if other != d {
                rest = rest.union(other);
            }
        }
        if d.is_subset(rest) {
            let x = rows.iter().position(|&row| row == d).expect("row present");
            return Ok(ConditionReport::fail(
                "clinker",
                ConditionWitness::RedundantRow { x },
            ));
        }
    }
    Ok(ConditionReport::ok("clinker"))
}

/// All six condition checks, in a fixed order.
pub fn check_all(r: &BinaryRelation, caps: &Caps) -> Result<Vec<ConditionReport>> {
    Ok(vec![
        check_st1(r)?,
        check_st2(r, caps)?,
        check_st1_atomic(r, caps)?,
        check_st2_atomic(r, caps)?,
        check_rst(r, caps)?,
        check_clinker(r)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::tests::{atom4, cov4, ker4};
    use crate::Caps;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn the_kernel_example_fails_both_meet_conditions_at_the_same_triple() {
        let r = ker4();
        let st1 = check_st1(&r).unwrap();
        assert!(!st1.holds);
        assert_eq!(
            st1.witness,
            Some(ConditionWitness::MeetlessTriple { x: 1, y: 3, p: 0 })
        );
        let st2 = check_st2(&r, &caps()).unwrap();
        assert!(!st2.holds);
        assert_eq!(
            st2.witness,
            Some(ConditionWitness::MeetlessTriple { x: 1, y: 3, p: 0 })
        );
    }

    #[test]
    fn the_kernel_example_includes_two_atoms_in_one_row() {
        let r = ker4();
        let st1a = check_st1_atomic(&r, &caps()).unwrap();
        assert!(!st1a.holds);
        assert_eq!(
            st1a.witness,
            Some(ConditionWitness::AtomCount { p: 0, count: 2 })
        );
    }

    #[test]
    fn the_covering_example_satisfies_every_condition() {
        let r = cov4();
        for report in check_all(&r, &caps()).unwrap() {
            assert!(report.holds, "{} should hold", report.name);
        }
    }

    #[test]
    fn the_single_atom_example_satisfies_only_the_meet_conditions() {
        let r = atom4();
        let reports = check_all(&r, &caps()).unwrap();
        let by_name = |name: &str| reports.iter().find(|c| c.name == name).unwrap();
        assert!(by_name("St1").holds);
        assert!(by_name("St2").holds);
        assert!(by_name("St1\u{b0}").holds);
        assert!(by_name("St2\u{b0}").holds);
        let rst = by_name("rSt");
        assert!(!rst.holds);
        assert_eq!(rst.witness, Some(ConditionWitness::RowNotAtom { x: 1 }));
        let clinker = by_name("clinker");
        assert!(!clinker.holds);
        assert_eq!(clinker.witness, Some(ConditionWitness::RedundantRow { x: 0 }));
    }
}
