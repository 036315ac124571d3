//! The four families of approximations: images of the power set under the
//! upper, lower, inverse-upper, and inverse-lower operators.
//!
//! The upper families are closed under arbitrary unions, the lower families
//! under arbitrary intersections, and all four are complete lattices whose
//! missing operation is supplied by a closure formula (for instance, the meet
//! in the upper family is the inverse-lower-then-upper closure of the
//! intersection). The lower family is the elementwise complement of the upper
//! family, and likewise for the inverse pair.

use crate::approx::{lower, upper};
use crate::lattice::FiniteLattice;
use crate::relation::{BinaryRelation, Subset};
use crate::{Caps, Error, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::OnceLock;

/// Which of the four approximation images a family holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    /// Images of the upper approximation; generated by unions of the rows of
    /// the inverse relation.
    Upper,
    /// Images of the lower approximation; complements of `Upper`.
    Lower,
    /// Images of the inverse upper approximation; generated by unions of the
    /// rows of the relation itself.
    InvUpper,
    /// Images of the inverse lower approximation; complements of `InvUpper`.
    InvLower,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Upper,
        FamilyKind::Lower,
        FamilyKind::InvUpper,
        FamilyKind::InvLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Upper => "upper-approximation family",
            FamilyKind::Lower => "lower-approximation family",
            FamilyKind::InvUpper => "inverse-upper-approximation family",
            FamilyKind::InvLower => "inverse-lower-approximation family",
        }
    }

    /// Union-closed families collect their joins by plain union.
    pub fn is_union_closed(self) -> bool {
        matches!(self, FamilyKind::Upper | FamilyKind::InvUpper)
    }
}

/// Renders a subset for labels and witnesses, 1-based by default so values
/// line up with how worked examples are usually written.
pub fn format_set(s: Subset, one_based: bool) -> String {
    if s.is_empty() {
        return "∅".to_string();
    }
    let shift = usize::from(one_based);
    let parts: Vec<String> = s.iter().map(|i| (i + shift).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// One approximation family, sorted by (cardinality, bitmask) with an index
/// for membership queries, carrying the relation so the closure formulas for
/// its lattice operations can be evaluated.
pub struct SetFamily {
    kind: FamilyKind,
    n: usize,
    members: Vec<Subset>,
    index: HashMap<u64, usize>,
    relation: BinaryRelation,
    inverse: BinaryRelation,
    distributive: OnceLock<bool>,
}

impl SetFamily {
    /// Builds the family of all images of the requested operator.
    pub fn build(r: &BinaryRelation, kind: FamilyKind, caps: &Caps) -> Result<SetFamily> {
        let inverse = r.inverse();
        let generator_relation = match kind {
            FamilyKind::Upper | FamilyKind::Lower => &inverse,
            FamilyKind::InvUpper | FamilyKind::InvLower => r,
        };
        let mut rows: Vec<Subset> = (0..r.n()).map(|x| generator_relation.succ(x)).collect();
        rows.sort_by_key(|s| s.sort_key());
        rows.dedup();

        // Union closure of the generator rows, starting from the empty union.
        let mut seen: HashMap<u64, usize> = HashMap::new();
        let mut members = vec![Subset::empty(r.n())];
        seen.insert(0, 0);
        let mut frontier = vec![Subset::empty(r.n())];
        while let Some(m) = frontier.pop() {
            for &g in &rows {
                let u = m.union(g);
                if seen.contains_key(&u.bits()) {
                    continue;
                }
                if members.len() >= caps.family_members {
                    return Err(Error::CapExceeded {
                        what: "the generated set family",
                        size: members.len() + 1,
                        cap: caps.family_members,
                    });
                }
                seen.insert(u.bits(), members.len());
                members.push(u);
                frontier.push(u);
            }
        }

        let complemented = matches!(kind, FamilyKind::Lower | FamilyKind::InvLower);
        if complemented {
            for m in &mut members {
                *m = m.complement();
            }
        }
        members.sort_by_key(|s| s.sort_key());
        let index = members.iter().enumerate().map(|(i, m)| (m.bits(), i)).collect();

        Ok(SetFamily {
            kind,
            n: r.n(),
            members,
            index,
            relation: r.clone(),
            inverse,
            distributive: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index.contains_key(&s.bits())
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.index.get(&s.bits()).copied()
    }

    /// Index of `s`, or [`Error::NotAMember`] naming the family.
    pub fn require(&self, s: Subset) -> Result<usize> {
        self.index_of(s)
            .ok_or_else(|| Error::NotAMember(format_set(s, true), self.kind.name()))
    }

    /// Least member (the meet of the whole family).
    pub fn bottom(&self) -> Subset {
        self.members[0]
    }

    /// Greatest member (the join of the whole family).
    pub fn top(&self) -> Subset {
        *self.members.last().expect("families are never empty")
    }

    /// Meet of arbitrarily many members: plain intersection for the
    /// intersection-closed kinds, and the matching interior closure of the
    /// intersection otherwise.
    pub fn meet_all(&self, xs: &[Subset]) -> Result<Subset> {
        let mut acc = Subset::full(self.n);
        for &x in xs {
            self.require(x)?;
            acc = acc.inter(x);
        }
        let result = match self.kind {
            FamilyKind::Upper => upper(&self.relation, lower(&self.inverse, acc)),
            FamilyKind::InvUpper => upper(&self.inverse, lower(&self.relation, acc)),
            FamilyKind::Lower | FamilyKind::InvLower => acc,
        };
        debug_assert!(self.contains(result));
        Ok(result)
    }

    /// Join of arbitrarily many members: plain union for the union-closed
    /// kinds, and the matching closure of the union otherwise.
    pub fn join_all(&self, xs: &[Subset]) -> Result<Subset> {
        let mut acc = Subset::empty(self.n);
        for &x in xs {
            self.require(x)?;
            acc = acc.union(x);
        }
        let result = match self.kind {
            FamilyKind::Upper | FamilyKind::InvUpper => acc,
            FamilyKind::Lower => lower(&self.relation, upper(&self.inverse, acc)),
            FamilyKind::InvLower => lower(&self.inverse, upper(&self.relation, acc)),
        };
        debug_assert!(self.contains(result));
        Ok(result)
    }

    pub fn meet(&self, a: Subset, b: Subset) -> Result<Subset> {
        self.meet_all(&[a, b])
    }

    pub fn join(&self, a: Subset, b: Subset) -> Result<Subset> {
        self.join_all(&[a, b])
    }

    /// The family as an explicit lattice under inclusion, labelled with
    /// 1-based set notation.
    pub fn to_lattice(&self, caps: &Caps) -> Result<FiniteLattice> {
        let members = &self.members;
        let lattice = FiniteLattice::from_poset(
            members.len(),
            |a, b| members[a].is_subset(members[b]),
            caps,
        )?;
        lattice.with_labels(members.iter().map(|&m| format_set(m, true)).collect())
    }

    /// Whether the family is a distributive lattice (cached).
    pub fn is_distributive(&self, caps: &Caps) -> Result<bool> {
        if let Some(&v) = self.distributive.get() {
            return Ok(v);
        }
        let v = self.to_lattice(caps)?.is_distributive();
        Ok(*self.distributive.get_or_init(|| v))
    }

    /// Whether `m` is completely join-irreducible, decided by the direct
    /// criterion for union-closed families: `m` must differ from the union
    /// of its strict subsets in the family.
    pub fn is_cji(&self, m: Subset) -> Result<bool> {
        if !self.kind.is_union_closed() {
            return Err(Error::Invalid(format!(
                "direct join-irreducibility test only applies to union-closed families, not the {}",
                self.kind.name()
            )));
        }
        self.require(m)?;
        let mut acc = Subset::empty(self.n);
        for &x in &self.members {
            if x != m && x.is_subset(m) {
                acc = acc.union(x);
            }
        }
        Ok(acc != m)
    }

    /// All completely join-irreducible members (union-closed kinds only).
    pub fn cji_members(&self) -> Result<Vec<Subset>> {
        let mut out = Vec::new();
        for &m in &self.members {
            if self.is_cji(m)? {
                out.push(m);
            }
        }
        Ok(out)
    }

    /// Whether `m` is an atom: a member whose only strict subset in the
    /// family is the bottom member.
    pub fn is_atom(&self, m: Subset) -> Result<bool> {
        self.require(m)?;
        if m == self.bottom() {
            return Ok(false);
        }
        Ok(self
            .members
            .iter()
            .all(|&x| !(x != m && x != self.bottom() && x.is_subset(m))))
    }

    /// All atoms of the family.
    pub fn atom_members(&self) -> Vec<Subset> {
        self.members
            .iter()
            .copied()
            .filter(|&m| self.is_atom(m).unwrap_or(false))
            .collect()
    }

    /// Whether the family is a Boolean lattice: distributive with every
    /// member complemented *in the lattice sense*. (A family can be Boolean
    /// without being closed under set complement.)
    pub fn is_boolean(&self, caps: &Caps) -> Result<bool> {
        if !self.is_distributive(caps)? {
            return Ok(false);
        }
        let bottom = self.bottom();
        let top = self.top();
        for &a in &self.members {
            let complemented = self
                .members
                .iter()
                .any(|&b| {
                    self.meet(a, b).map(|m| m == bottom).unwrap_or(false)
                        && self.join(a, b).map(|j| j == top).unwrap_or(false)
                });
            if !complemented {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pseudocomplement in the upper family, via the kernel construction.
    ///
    /// Requires the family to be distributive (at finite scale this is
    /// exactly the complete distributivity the construction assumes);
    /// otherwise [`Error::Hypothesis`] is returned.
    pub fn pseudocomplement(&self, b: Subset, caps: &Caps) -> Result<Subset> {
        if self.kind != FamilyKind::Upper {
            return Err(Error::Invalid(format!(
                "the kernel pseudocomplement lives in the upper-approximation family, not the {}",
                self.kind.name()
            )));
        }
        self.require(b)?;
        if !self.is_distributive(caps)? {
            return Err(Error::Hypothesis(
                "the upper-approximation family is not distributive".into(),
            ));
        }
        let k = kernel(&self.relation, b);
        // Kernel, inverse-upper, complement, upper: the largest member
        // disjoint (in the lattice sense) from b.
        Ok(upper(&self.relation, upper(&self.inverse, k).complement()))
    }

    /// Dual pseudocomplement in the lower family: complement of the
    /// pseudocomplement of the complement.
    pub fn dual_pseudocomplement(&self, a: Subset, caps: &Caps) -> Result<Subset> {
        if self.kind != FamilyKind::Lower {
            return Err(Error::Invalid(format!(
                "the dual pseudocomplement lives in the lower-approximation family, not the {}",
                self.kind.name()
            )));
        }
        self.require(a)?;
        if !self.is_distributive(caps)? {
            return Err(Error::Hypothesis(
                "the lower-approximation family is not distributive".into(),
            ));
        }
        let b = a.complement();
        let k = kernel(&self.relation, b);
        let b_star = upper(&self.relation, upper(&self.inverse, k).complement());
        Ok(b_star.complement())
    }

    /// Largest member whose meet with `b` is the bottom member, found by a
    /// direct scan; `None` if no largest one exists.
    pub fn brute_force_pseudocomplement(&self, b: Subset) -> Result<Option<Subset>> {
        self.require(b)?;
        let bottom = self.bottom();
        let mut cand: Option<Subset> = None;
        for &m in &self.members {
            if self.meet(m, b)? == bottom {
                cand = match cand {
                    None => Some(m),
                    Some(c) if c.is_subset(m) => Some(m),
                    keep => keep,
                };
            }
        }
        let c = cand.expect("the bottom member always qualifies");
        for &m in &self.members {
            if self.meet(m, b)? == bottom && !m.is_subset(c) {
                return Ok(None);
            }
        }
        Ok(Some(c))
    }

    /// Least member whose join with `b` is the top member, by direct scan.
    pub fn brute_force_dual_pseudocomplement(&self, b: Subset) -> Result<Option<Subset>> {
        self.require(b)?;
        let top = self.top();
        let mut cand: Option<Subset> = None;
        for &m in &self.members {
            if self.join(m, b)? == top {
                cand = match cand {
                    None => Some(m),
                    Some(c) if m.is_subset(c) => Some(m),
                    keep => keep,
                };
            }
        }
        let c = cand.expect("the top member always qualifies");
        for &m in &self.members {
            if self.join(m, b)? == top && !c.is_subset(m) {
                return Ok(None);
            }
        }
        Ok(Some(c))
    }

}

/// The kernel of `b`: the union of the cores of the inverse rows contained
/// in `b`.
pub fn kernel(r: &BinaryRelation, b: Subset) -> Subset {
    let inverse = r.inverse();
    let mut acc = Subset::empty(r.n());
    for x in 0..r.n() {
        if inverse.succ(x).is_subset(b) {
            acc = acc.union(inverse.core(x));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::tests::{atom4, cov4, dir3, ker4, rel, sub};

    fn caps() -> Caps {
        Caps::default()
    }

    fn family(r: &BinaryRelation, kind: FamilyKind) -> SetFamily {
        SetFamily::build(r, kind, &caps()).unwrap()
    }

    fn bits_of(f: &SetFamily) -> Vec<Vec<usize>> {
        f.members()
            .iter()
            .map(|m| m.iter().map(|i| i + 1).collect())
            .collect()
    }

    #[test]
    fn upper_family_of_the_kernel_example_matches_hand_computation() {
        let f = family(&ker4(), FamilyKind::Upper);
        assert_eq!(
            bits_of(&f),
            vec![
                vec![],
                vec![4],
                vec![1, 2],
                vec![1, 2, 4],
                vec![2, 3, 4],
                vec![1, 2, 3, 4],
            ]
        );
        // The meet of {1,2,4} and {2,3,4} collapses past their intersection.
        let m = f.meet(sub(4, &[1, 2, 4]), sub(4, &[2, 3, 4])).unwrap();
        assert_eq!(m, sub(4, &[4]));
        // Join is plain union.
        let j = f.join(sub(4, &[4]), sub(4, &[1, 2])).unwrap();
        assert_eq!(j, sub(4, &[1, 2, 4]));
    }

    #[test]
    fn lower_families_are_elementwise_complements() {
        for r in [dir3(), ker4(), atom4(), cov4()] {
            let up = family(&r, FamilyKind::Upper);
            let lo = family(&r, FamilyKind::Lower);
            let mut complements: Vec<Subset> =
                up.members().iter().map(|m| m.complement()).collect();
            complements.sort_by_key(|s| s.sort_key());
            assert_eq!(lo.members(), &complements[..]);

            let inv_up = family(&r, FamilyKind::InvUpper);
            let inv_lo = family(&r, FamilyKind::InvLower);
            let mut complements: Vec<Subset> =
                inv_up.members().iter().map(|m| m.complement()).collect();
            complements.sort_by_key(|s| s.sort_key());
            assert_eq!(inv_lo.members(), &complements[..]);
        }
    }

    #[test]
    fn kernel_and_pseudocomplement_of_the_worked_example() {
        let r = ker4();
        let b = sub(4, &[2, 3, 4]);
        assert_eq!(kernel(&r, b), sub(4, &[3, 4]));

        let f = family(&r, FamilyKind::Upper);
        let b_star = f.pseudocomplement(b, &caps()).unwrap();
        assert_eq!(b_star, sub(4, &[1, 2]));
        assert_eq!(f.brute_force_pseudocomplement(b).unwrap(), Some(b_star));

        // The set complement is the wrong starting point: the largest member
        // inside it is empty, which is not the pseudocomplement.
        let inside_complement = f
            .members()
            .iter()
            .copied()
            .filter(|m| m.is_subset(b.complement()))
            .max_by_key(|m| m.card())
            .unwrap();
        assert_eq!(inside_complement, Subset::empty(4));

        // Singleton-image form of the same pseudocomplement.
        let mut union = Subset::empty(4);
        for y in 0..4 {
            let row = f.inverse.succ(y);
            if f.meet(row, b).unwrap() == f.bottom() {
                union = union.union(row);
            }
        }
        assert_eq!(union, b_star);
    }

    #[test]
    fn quasiorder_families_collapse_the_kernel() {
        let q = rel(3, &[&[1, 2], &[2], &[2, 3]]);
        assert!(q.classify().is_quasiorder());
        let f = family(&q, FamilyKind::Upper);
        for &b in f.members() {
            assert_eq!(kernel(&q, b), b, "kernels are trivial for quasiorders");
            let direct = upper(&q.inverse(), b).complement();
            assert_eq!(
                f.pseudocomplement(b, &caps()).unwrap(),
                direct,
                "quasiorder pseudocomplement reduces to one inverse-upper step"
            );
        }
    }

    #[test]
    fn boolean_family_need_not_be_complement_closed() {
        let f = family(&cov4(), FamilyKind::Upper);
        assert!(f.is_boolean(&caps()).unwrap());
        let member = sub(4, &[1, 2]);
        assert!(f.contains(member));
        assert!(
            !f.contains(member.complement()),
            "{:?} is complemented in the lattice but its set complement is outside",
            member
        );
        // Boolean with atoms equal to the join-irreducible members.
        let atoms = f.atom_members();
        let cji: Vec<Subset> = f
            .members()
            .iter()
            .copied()
            .filter(|&m| f.is_cji(m).unwrap())
            .collect();
        assert_eq!(atoms, cji);
    }

    #[test]
    fn atoms_and_irreducibles_of_the_single_atom_example() {
        let f = family(&atom4(), FamilyKind::Upper);
        assert_eq!(bits_of(&f), vec![
            vec![],
            vec![1],
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![1, 2, 3, 4],
        ]);
        assert_eq!(f.atom_members(), vec![sub(4, &[1])]);
        assert!(f.is_cji(sub(4, &[1, 2, 3])).unwrap());
        assert!(f.is_cji(sub(4, &[1, 3, 4])).unwrap());
        assert!(!f.is_cji(Subset::full(4)).unwrap());
        assert!(!f.is_atom(sub(4, &[1, 2, 3])).unwrap());
        assert!(!f.is_boolean(&caps()).unwrap());
    }

    #[test]
    fn family_operations_agree_with_the_lattice_tables() {
        for r in [dir3(), ker4(), atom4()] {
            for kind in FamilyKind::ALL {
                let f = family(&r, kind);
                let lattice = f.to_lattice(&caps()).unwrap();
                lattice.validate().unwrap();
                for (i, &a) in f.members().iter().enumerate() {
                    for (k, &b) in f.members().iter().enumerate() {
                        let m = f.meet(a, b).unwrap();
                        let j = f.join(a, b).unwrap();
                        assert_eq!(f.index_of(m).unwrap(), lattice.meet(i, k));
                        assert_eq!(f.index_of(j).unwrap(), lattice.join(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn dual_pseudocomplement_matches_the_worked_pair_component()
    {
        let f = family(&ker4(), FamilyKind::Lower);
        let a = sub(4, &[1]);
        let plus = f.dual_pseudocomplement(a, &caps()).unwrap();
        assert_eq!(plus, sub(4, &[3, 4]));
        assert_eq!(f.brute_force_dual_pseudocomplement(a).unwrap(), Some(plus));
    }

    #[test]
    fn membership_is_enforced() {
        let f = family(&dir3(), FamilyKind::Upper);
        assert!(matches!(
            f.require(sub(3, &[2, 3])),
            Err(Error::NotAMember(_, _))
        ));
        assert!(f.meet(sub(3, &[2, 3]), Subset::empty(3)).is_err());
        assert!(f.pseudocomplement(sub(3, &[2, 3]), &caps()).is_err());
    }

    #[test]
    fn upper_family_of_the_two_by_three_example() {
        let f = family(&dir3(), FamilyKind::Upper);
        assert_eq!(
            bits_of(&f),
            vec![vec![], vec![1, 2], vec![1, 3], vec![1, 2, 3]]
        );
        let g = family(&dir3(), FamilyKind::InvUpper);
        assert_eq!(
            bits_of(&g),
            vec![vec![], vec![2], vec![1, 3], vec![1, 2, 3]]
        );
    }
}
