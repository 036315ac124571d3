//! Rough pairs, the rough-set poset, and its completion.
//!
//! A rough pair is `(lower approximation, upper approximation)` of some
//! subset. The set of all rough pairs under the coordinatewise inclusion
//! order need not be a lattice; its Dedekind-MacNeille completion is realised
//! here concretely, as the pairs `(A, B)` from the lower and upper families
//! with `A` inverse-upper-then-upper inside `B` that agree on the elements
//! whose row is a singleton. Meets, joins, the Kleene negation, and both
//! pseudocomplements all have closed forms on that carrier; every closed form
//! is cross-checked against the order-theoretic tables.

use crate::approx::{lower, upper};
use crate::families::{format_set, FamilyKind, SetFamily};
use crate::lattice::FiniteLattice;
use crate::relation::{BinaryRelation, Subset};
use crate::{Caps, Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{HashMap, HashSet};

/// A pair of approximations of one and the same set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RoughPair {
    pub lower: Subset,
    pub upper: Subset,
}

impl RoughPair {
    pub fn new(lower: Subset, upper: Subset) -> Self {
        RoughPair { lower, upper }
    }

    pub fn sort_key(self) -> ((usize, u64), (usize, u64)) {
        (self.lower.sort_key(), self.upper.sort_key())
    }

    /// Coordinatewise inclusion.
    pub fn leq(self, other: RoughPair) -> bool {
        self.lower.is_subset(other.lower) && self.upper.is_subset(other.upper)
    }

    pub fn format(self, one_based: bool) -> String {
        format!(
            "({},{})",
            format_set(self.lower, one_based),
            format_set(self.upper, one_based)
        )
    }
}

/// All distinct rough pairs of `r`, sorted. Exponential in the universe
/// size, so it is gated by [`Caps::rs_exponent`].
pub fn enumerate_rs(r: &BinaryRelation, caps: &Caps) -> Result<Vec<RoughPair>> {
    if r.n() > caps.rs_exponent {
        return Err(Error::CapExceeded {
            what: "rough-set enumeration exponent",
            size: r.n(),
            cap: caps.rs_exponent,
        });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for bits in 0..(1u64 << r.n()) {
        let x = Subset::from_bits(r.n(), bits);
        let pair = RoughPair::new(lower(r, x), upper(r, x));
        if seen.insert((pair.lower.bits(), pair.upper.bits())) {
            out.push(pair);
        }
    }
    out.sort_by_key(|p| p.sort_key());
    Ok(out)
}

/// The rough-set system of one reflexive relation: the four families, the
/// rough pairs, and the completion with its lattice structure.
pub struct RoughSetSystem {
    relation: BinaryRelation,
    inverse: BinaryRelation,
    singletons: Subset,
    upper_family: SetFamily,
    lower_family: SetFamily,
    inv_upper_family: SetFamily,
    inv_lower_family: SetFamily,
    rs: Option<Vec<RoughPair>>,
    dm_pairs: Vec<RoughPair>,
    dm_index: HashMap<(u64, u64), usize>,
    dm: FiniteLattice,
}

impl RoughSetSystem {
    pub fn build(r: &BinaryRelation, caps: &Caps) -> Result<RoughSetSystem> {
        if let Some(x) = (0..r.n()).find(|&x| !r.contains(x, x)) {
            return Err(Error::NotReflexive(x));
        }
        let inverse = r.inverse();
        let singletons = r.singletons();
        let upper_family = SetFamily::build(r, FamilyKind::Upper, caps)?;
        let lower_family = SetFamily::build(r, FamilyKind::Lower, caps)?;
        let inv_upper_family = SetFamily::build(r, FamilyKind::InvUpper, caps)?;
        let inv_lower_family = SetFamily::build(r, FamilyKind::InvLower, caps)?;

        let rs = if r.n() <= caps.rs_exponent {
            Some(enumerate_rs(r, caps)?)
        } else {
            None
        };

        let candidates = lower_family.len() * upper_family.len();
        if candidates > caps.dm_candidates {
            return Err(Error::CapExceeded {
                what: "completion candidate pairs",
                size: candidates,
                cap: caps.dm_candidates,
            });
        }
        let mut dm_pairs = Vec::new();
        for &a in lower_family.members() {
            let closure = upper(r, upper(&inverse, a));
            let a_single = a.inter(singletons);
            for &b in upper_family.members() {
                if closure.is_subset(b) && a_single == b.inter(singletons) {
                    dm_pairs.push(RoughPair::new(a, b));
                }
            }
        }
        dm_pairs.sort_by_key(|p| p.sort_key());
        let dm_index: HashMap<(u64, u64), usize> = dm_pairs
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.lower.bits(), p.upper.bits()), i))
            .collect();

        if let Some(rs_pairs) = &rs {
            for p in rs_pairs {
                if !dm_index.contains_key(&(p.lower.bits(), p.upper.bits())) {
                    return Err(Error::Internal(format!(
                        "rough pair {} is missing from its own completion",
                        p.format(true)
                    )));
                }
            }
        }

        let dm = FiniteLattice::from_poset(
            dm_pairs.len(),
            |i, k| dm_pairs[i].leq(dm_pairs[k]),
            caps,
        )
        .map_err(|e| match e {
            Error::CapExceeded { .. } => e,
            other => Error::Internal(format!("completion is not a lattice: {other}")),
        })?;
        let dm = dm.with_labels(dm_pairs.iter().map(|p| p.format(true)).collect())?;

        // The candidate Kleene negation swaps and complements the
        // coordinates. Attach it whenever it maps the carrier to itself.
        let neg: Option<Vec<u32>> = dm_pairs
            .iter()
            .map(|p| {
                dm_index
                    .get(&(p.upper.complement().bits(), p.lower.complement().bits()))
                    .map(|&i| i as u32)
            })
            .collect();
        let dm = match neg {
            Some(table) => dm.with_negation(table)?,
            None => dm,
        };

        let system = RoughSetSystem {
            relation: r.clone(),
            inverse,
            singletons,
            upper_family,
            lower_family,
            inv_upper_family,
            inv_lower_family,
            rs,
            dm_pairs,
            dm_index,
            dm,
        };
        system.spot_check_tables()?;
        Ok(system)
    }

    /// Compares the closed-form meet and join against the order-theoretic
    /// tables, exhaustively for small completions and on a seeded sample of
    /// pairs otherwise.
    fn spot_check_tables(&self) -> Result<()> {
        let size = self.dm_pairs.len();
        let check = |i: usize, k: usize| -> Result<()> {
            let m = self.formula_meet(&[self.dm_pairs[i], self.dm_pairs[k]])?;
            let j = self.formula_join(&[self.dm_pairs[i], self.dm_pairs[k]])?;
            if self.dm_index_of(m) != Some(self.dm.meet(i, k))
                || self.dm_index_of(j) != Some(self.dm.join(i, k))
            {
                return Err(Error::Internal(format!(
                    "closed-form operations disagree with the order tables at {} and {}",
                    self.dm_pairs[i].format(true),
                    self.dm_pairs[k].format(true)
                )));
            }
            Ok(())
        };
        if size <= 256 {
            for i in 0..size {
                for k in i..size {
                    check(i, k)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x00c0_ffee);
            for _ in 0..4096 {
                check(rng.gen_range(0..size), rng.gen_range(0..size))?;
            }
        }
        Ok(())
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.relation
    }

    pub fn inverse(&self) -> &BinaryRelation {
        &self.inverse
    }

    /// Elements whose row is a singleton (for a reflexive relation, exactly
    /// the elements related only to themselves).
    pub fn singletons(&self) -> Subset {
        self.singletons
    }

    pub fn family(&self, kind: FamilyKind) -> &SetFamily {
        match kind {
            FamilyKind::Upper => &self.upper_family,
            FamilyKind::Lower => &self.lower_family,
            FamilyKind::InvUpper => &self.inv_upper_family,
            FamilyKind::InvLower => &self.inv_lower_family,
        }
    }

    /// The rough pairs themselves, if the universe was small enough to
    /// enumerate the power set.
    pub fn rs_pairs(&self) -> Option<&[RoughPair]> {
        self.rs.as_deref()
    }

    /// Carrier of the completion, sorted coordinatewise.
    pub fn dm_pairs(&self) -> &[RoughPair] {
        &self.dm_pairs
    }

    pub fn dm_lattice(&self) -> &FiniteLattice {
        &self.dm
    }

    pub fn dm_index_of(&self, p: RoughPair) -> Option<usize> {
        self.dm_index
            .get(&(p.lower.bits(), p.upper.bits()))
            .copied()
    }

    pub fn dm_contains(&self, p: RoughPair) -> bool {
        self.dm_index_of(p).is_some()
    }

    fn require_dm(&self, p: RoughPair) -> Result<usize> {
        self.dm_index_of(p)
            .ok_or_else(|| Error::NotAMember(p.format(true), "completion of the rough-set poset"))
    }

    /// Whether the rough pairs already form the whole completion.
    pub fn rs_is_complete(&self) -> Option<bool> {
        self.rs.as_ref().map(|rs| rs.len() == self.dm_pairs.len())
    }

    /// Closed-form meet: intersect coordinatewise, then close the upper
    /// coordinate from inside.
    pub fn formula_meet(&self, ps: &[RoughPair]) -> Result<RoughPair> {
        let n = self.relation.n();
        let mut a = Subset::full(n);
        let mut b = Subset::full(n);
        for p in ps {
            self.require_dm(*p)?;
            a = a.inter(p.lower);
            b = b.inter(p.upper);
        }
        let b = upper(&self.relation, lower(&self.inverse, b));
        Ok(RoughPair::new(a, b))
    }

    /// Closed-form join: unite coordinatewise, then close the lower
    /// coordinate from inside.
    pub fn formula_join(&self, ps: &[RoughPair]) -> Result<RoughPair> {
        let n = self.relation.n();
        let mut a = Subset::empty(n);
        let mut b = Subset::empty(n);
        for p in ps {
            self.require_dm(*p)?;
            a = a.union(p.lower);
            b = b.union(p.upper);
        }
        let a = lower(&self.relation, upper(&self.inverse, a));
        Ok(RoughPair::new(a, b))
    }

    /// The member `(B
    /// inverse-lower-then-lower, B)` witnessing that every upper-family
    /// member appears as an upper coordinate.
    pub fn pair_for_upper(&self, b: Subset) -> Result<RoughPair> {
        self.family(FamilyKind::Upper).require(b)?;
        let pair = RoughPair::new(lower(&self.relation, lower(&self.inverse, b)), b);
        self.require_dm(pair).map_err(|_| {
            Error::Internal(format!(
                "{} is not in the completion although its upper coordinate is a member",
                pair.format(true)
            ))
        })?;
        Ok(pair)
    }

    /// The member `(A, A inverse-upper-then-upper)` for a lower-family
    /// member `A`.
    pub fn pair_for_lower(&self, a: Subset) -> Result<RoughPair> {
        self.family(FamilyKind::Lower).require(a)?;
        let pair = RoughPair::new(a, upper(&self.relation, upper(&self.inverse, a)));
        self.require_dm(pair).map_err(|_| {
            Error::Internal(format!(
                "{} is not in the completion although its lower coordinate is a member",
                pair.format(true)
            ))
        })?;
        Ok(pair)
    }

    /// Pseudocomplement of a completion member by the coordinate formula:
    /// take the pseudocomplement of the upper coordinate in the upper
    /// family and close it down into the lower family.
    ///
    /// Requires the upper family to be pseudocomplemented; when it is also
    /// distributive the kernel construction is cross-checked on the fly.
    pub fn pair_pseudocomplement(&self, p: RoughPair, caps: &Caps) -> Result<RoughPair> {
        self.require_dm(p)?;
        let b_star = self
            .upper_family
            .brute_force_pseudocomplement(p.upper)?
            .ok_or_else(|| {
                Error::Hypothesis(format!(
                    "the upper-approximation family has no pseudocomplement for {}",
                    format_set(p.upper, true)
                ))
            })?;
        if self.upper_family.is_distributive(caps)? {
            let kernel_form = self.upper_family.pseudocomplement(p.upper, caps)?;
            if kernel_form != b_star {
                return Err(Error::Internal(format!(
                    "kernel pseudocomplement {} disagrees with the scan {}",
                    format_set(kernel_form, true),
                    format_set(b_star, true)
                )));
            }
        }
        let pair = RoughPair::new(lower(&self.relation, lower(&self.inverse, b_star)), b_star);
        self.require_dm(pair).map_err(|_| {
            Error::Internal(format!(
                "pseudocomplement {} left the completion",
                pair.format(true)
            ))
        })?;
        Ok(pair)
    }

    /// Dual pseudocomplement by the coordinate formula: dual
    /// pseudocomplement of the lower coordinate in the lower family, closed
    /// up into the upper family.
    pub fn pair_dual_pseudocomplement(&self, p: RoughPair, caps: &Caps) -> Result<RoughPair> {
        self.require_dm(p)?;
        let a_plus = self
            .lower_family
            .brute_force_dual_pseudocomplement(p.lower)?
            .ok_or_else(|| {
                Error::Hypothesis(format!(
                    "the lower-approximation family has no dual pseudocomplement for {}",
                    format_set(p.lower, true)
                ))
            })?;
        if self.lower_family.is_distributive(caps)? {
            let kernel_form = self.lower_family.dual_pseudocomplement(p.lower, caps)?;
            if kernel_form != a_plus {
                return Err(Error::Internal(format!(
                    "kernel dual pseudocomplement {} disagrees with the scan {}",
                    format_set(kernel_form, true),
                    format_set(a_plus, true)
                )));
            }
        }
        let pair = RoughPair::new(a_plus, upper(&self.relation, upper(&self.inverse, a_plus)));
        self.require_dm(pair).map_err(|_| {
            Error::Internal(format!(
                "dual pseudocomplement {} left the completion",
                pair.format(true)
            ))
        })?;
        Ok(pair)
    }

    /// Join-irreducible completion members predicted by the two closed
    /// families: inverse-row images of elements whose inverse-upper row is
    /// join-irreducible, plus plain rows of non-singleton elements whose row
    /// is join-irreducible.
    pub fn dm_irreducibles_by_formula(&self) -> Result<Vec<usize>> {
        let n = self.relation.n();
        let mut out = HashSet::new();
        for x in 0..n {
            let row = self.relation.succ(x);
            if self.inv_upper_family.is_cji(row)? {
                let pair = RoughPair::new(
                    lower(&self.relation, row),
                    upper(&self.relation, row),
                );
                out.insert(self.require_dm(pair).map_err(|_| {
                    Error::Internal(format!(
                        "predicted irreducible {} is not a completion member",
                        pair.format(true)
                    ))
                })?);
            }
            if !self.singletons.contains(x) {
                let inv_row = self.inverse.succ(x);
                if self.upper_family.is_cji(inv_row)? {
                    let pair =
                        RoughPair::new(lower(&self.relation, Subset::singleton(n, x)), inv_row);
                    out.insert(self.require_dm(pair).map_err(|_| {
                        Error::Internal(format!(
                            "predicted irreducible {} is not a completion member",
                            pair.format(true)
                        ))
                    })?);
                }
            }
        }
        let mut out: Vec<usize> = out.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Atoms of the completion predicted by the upper family: pairs
    /// `({x} lower, {x} upper)` whose row is an atom.
    pub fn dm_atoms_by_formula(&self) -> Result<Vec<usize>> {
        let n = self.relation.n();
        let mut out = HashSet::new();
        for x in 0..n {
            let inv_row = self.inverse.succ(x);
            if self.upper_family.is_atom(inv_row)? {
                let pair = RoughPair::new(lower(&self.relation, Subset::singleton(n, x)), inv_row);
                out.insert(self.require_dm(pair).map_err(|_| {
                    Error::Internal(format!(
                        "predicted atom {} is not a completion member",
                        pair.format(true)
                    ))
                })?);
            }
        }
        let mut out: Vec<usize> = out.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// The reflection `g` on join-irreducible completion members (least
    /// element not below the negation), with the three blocks it induces.
    ///
    /// Requires the completion to be distributive and to carry its Kleene
    /// negation.
    pub fn g_partition(&self) -> Result<GPartition> {
        if self.dm.negation().is_none() {
            return Err(Error::Hypothesis(
                "the completion does not carry the swap-and-complement negation".into(),
            ));
        }
        if !self.dm.is_distributive() {
            return Err(Error::Hypothesis("the completion is not distributive".into()));
        }
        let ji = self.dm.join_irreducibles();
        let ji_set: HashSet<usize> = ji.iter().copied().collect();
        let mut g = Vec::with_capacity(ji.len());
        for &j in &ji {
            let nj = self.dm.neg_of(j).expect("negation attached");
            let mut acc = self.dm.top();
            for x in 0..self.dm.size() {
                if !self.dm.leq(x, nj) {
                    acc = self.dm.meet(acc, x);
                }
            }
            if self.dm.leq(acc, nj) || !ji_set.contains(&acc) {
                return Err(Error::Internal(format!(
                    "reflection of {} is not a join-irreducible element off the negation",
                    self.dm.label(j)
                )));
            }
            g.push(acc);
        }
        let mut minus = Vec::new();
        let mut circ = Vec::new();
        let mut plus = Vec::new();
        for (k, &j) in ji.iter().enumerate() {
            if j == g[k] {
                circ.push(j);
            } else if self.dm.lt(j, g[k]) {
                minus.push(j);
            } else if self.dm.lt(g[k], j) {
                plus.push(j);
            } else {
                return Err(Error::Internal(format!(
                    "join-irreducible {} is incomparable with its reflection",
                    self.dm.label(j)
                )));
            }
        }
        Ok(GPartition {
            ji,
            g,
            minus,
            circ,
            plus,
        })
    }
}

/// The reflection on join-irreducible elements and the blocks it induces.
#[derive(Clone, Debug, Serialize)]
pub struct GPartition {
    /// Join-irreducible elements, as completion indices.
    pub ji: Vec<usize>,
    /// Reflection image of each entry of `ji`, parallel to it.
    pub g: Vec<usize>,
    /// Elements strictly below their reflection.
    pub minus: Vec<usize>,
    /// Self-reflective elements.
    pub circ: Vec<usize>,
    /// Elements strictly above their reflection.
    pub plus: Vec<usize>,
}
