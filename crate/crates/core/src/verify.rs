//! Verification campaigns.
//!
//! Every closed form and every classification theorem in this crate is also
//! checkable by brute force. A campaign enumerates all reflexive relations
//! on up to three elements, samples seeded random relations from several
//! generator classes on larger universes, and checks each named statement
//! on each relation. Failures carry the offending relation, and a failing
//! relation can be shrunk to a minimal witness.

use crate::approx::{lower, subset_sample, upper};
use crate::conditions;
use crate::families::{format_set, kernel, FamilyKind};
use crate::lattice::{dedekind_macneille, AlgebraReport, FiniteLattice};
use crate::relation::{
    random_covering, random_irredundant_covering, random_partition, BinaryRelation, Subset,
};
use crate::roughset::{RoughPair, RoughSetSystem};
use crate::{Caps, Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::time::Instant;

/// The statements a campaign can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::T10 => "T10",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T1 => {
                "on a distributive completion, regularity with Kleene pseudocomplementation, \
                 a two-level irreducible structure, and an atomistic Boolean upper family coincide"
            }
            TheoremId::T2 => {
                "on a distributive completion, St1, St2, their atomic forms, and the Stone \
                 property coincide"
            }
            TheoremId::T3 => {
                "the completion is a regular double Stone algebra on a distributive lattice \
                 exactly when rSt holds"
            }
            TheoremId::T4 => {
                "the distinct singleton upper approximations form an irredundant covering \
                 exactly when rSt holds"
            }
            TheoremId::T5 => {
                "on a distributive completion, the reflection partitions the join-irreducibles \
                 into three blocks with closed-form descriptions"
            }
            TheoremId::T6 => {
                "the completion is isomorphic to the cut completion of the rough-set poset"
            }
            TheoremId::T7 => {
                "closed-form pseudocomplements agree with brute-force scans on both coordinates"
            }
            TheoremId::T8 => {
                "on a distributive completion, regularity is equivalent to the two-level \
                 property of the join-irreducibles"
            }
            TheoremId::T9 => {
                "quasiorders collapse the operator compositions and admit short \
                 pseudocomplement formulas"
            }
            TheoremId::T10 => {
                "classical identities of pseudocomplemented, Stone, and Boolean lattices hold \
                 on the computed algebras"
            }
        }
    }

    /// Parses a comma-separated list such as `T1,T3` (or `all`).
    pub fn parse_list(text: &str) -> Result<Vec<TheoremId>> {
        if text.trim().eq_ignore_ascii_case("all") {
            return Ok(TheoremId::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let id = TheoremId::ALL
                .iter()
                .find(|t| t.code().eq_ignore_ascii_case(part))
                .copied()
                .ok_or_else(|| Error::Invalid(format!("unknown statement id {part:?}")))?;
            if !out.contains(&id) {
                out.push(id);
            }
        }
        if out.is_empty() {
            return Err(Error::Invalid("empty statement list".into()));
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Holds,
    HypothesisNotMet,
    Fails,
}

/// Result of checking one statement on one relation.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckOutcome {
    fn holds() -> Self {
        CheckOutcome {
            status: CheckStatus::Holds,
            detail: None,
            notes: Vec::new(),
        }
    }

    fn unmet() -> Self {
        CheckOutcome {
            status: CheckStatus::HypothesisNotMet,
            detail: None,
            notes: Vec::new(),
        }
    }

    fn fails(detail: String) -> Self {
        CheckOutcome {
            status: CheckStatus::Fails,
            detail: Some(detail),
            notes: Vec::new(),
        }
    }

    fn note(mut self, tag: &str, on: bool) -> Self {
        if on {
            self.notes.push(tag.to_string());
        }
        self
    }
}

/// Everything the statement checks share for one relation.
struct Workbench<'a> {
    r: &'a BinaryRelation,
    caps: &'a Caps,
    system: RoughSetSystem,
    dm_report: AlgebraReport,
    up_report: AlgebraReport,
}

impl<'a> Workbench<'a> {
    fn new(r: &'a BinaryRelation, caps: &'a Caps) -> Result<Workbench<'a>> {
        let system = RoughSetSystem::build(r, caps)?;
        let dm_report = system.dm_lattice().classify();
        let up_lattice = system.family(FamilyKind::Upper).to_lattice(caps)?;
        let up_report = up_lattice.classify();
        Ok(Workbench {
            r,
            caps,
            system,
            dm_report,
            up_report,
        })
    }

    fn dm(&self) -> &FiniteLattice {
        self.system.dm_lattice()
    }

    fn kleene_holds(&self) -> bool {
        self.dm_report.kleene.as_ref().is_some_and(|f| f.holds)
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

// --- the individual statement checks ---------------------------------------

fn t1(w: &Workbench) -> Result<CheckOutcome> {
    if !w.dm_report.distributive.holds {
        return Ok(CheckOutcome::unmet());
    }
    let regular_kleene = w.dm_report.regular.holds
        && w.dm_report.pseudocomplemented.holds
        && w.kleene_holds();
    let two_levels = w.dm_report.two_levels.holds;
    let boolean_upper = w.up_report.boolean.holds && w.up_report.atomistic.holds;
    if regular_kleene != two_levels || two_levels != boolean_upper {
        return Ok(CheckOutcome::fails(format!(
            "regular Kleene: {regular_kleene}, two levels: {two_levels}, \
             atomistic Boolean upper family: {boolean_upper}"
        )));
    }
    Ok(CheckOutcome::holds())
}

fn t2(w: &Workbench) -> Result<CheckOutcome> {
    let st1 = conditions::check_st1(w.r)?.holds;
    let st1_atomic = conditions::check_st1_atomic(w.r, w.caps)?.holds;
    let st2 = conditions::check_st2(w.r, w.caps)?.holds;
    let st2_atomic = conditions::check_st2_atomic(w.r, w.caps)?.holds;
    // The atomic reformulations hold with no distributivity hypothesis:
    // every finite lattice is atomic.
    if st1 != st1_atomic || st2 != st2_atomic {
        return Ok(CheckOutcome::fails(format!(
            "St1: {st1}, atomic form: {st1_atomic}; St2: {st2}, atomic form: {st2_atomic}"
        )));
    }
    if !w.dm_report.distributive.holds {
        return Ok(CheckOutcome::unmet());
    }
    let stone = w.dm_report.stone.holds;
    if st1 != st2 || st2 != stone {
        return Ok(CheckOutcome::fails(format!(
            "St1: {st1}, St2: {st2}, Stone completion: {stone}"
        )));
    }
    Ok(CheckOutcome::holds())
}

fn t3(w: &Workbench) -> Result<CheckOutcome> {
    let rst = conditions::check_rst(w.r, w.caps)?.holds;
    let lhs = w.dm_report.distributive.holds
        && w.dm_report.double_stone.holds
        && w.dm_report.regular.holds;
    if rst != lhs {
        return Ok(CheckOutcome::fails(format!(
            "rSt: {rst}, regular double Stone distributive completion: {lhs}"
        )));
    }
    Ok(CheckOutcome::holds())
}

fn t4(w: &Workbench) -> Result<CheckOutcome> {
    let rst = conditions::check_rst(w.r, w.caps)?.holds;
    let clinker = conditions::check_clinker(w.r)?.holds;
    if rst != clinker {
        return Ok(CheckOutcome::fails(format!(
            "rSt: {rst}, irredundant covering by rows: {clinker}"
        )));
    }
    Ok(CheckOutcome::holds())
}

fn t5(w: &Workbench) -> Result<CheckOutcome> {
    if !w.dm_report.distributive.holds {
        return Ok(CheckOutcome::unmet());
    }
    let dm = w.dm();
    if dm.negation().is_none() {
        return Ok(CheckOutcome::fails(
            "swap-and-complement negation does not map the completion to itself".into(),
        ));
    }
    if !w.kleene_holds() {
        return Ok(CheckOutcome::fails(format!(
            "completion is not a Kleene algebra: {:?}",
            w.dm_report.kleene.as_ref().and_then(|f| f.witness.clone())
        )));
    }
    let gp = match w.system.g_partition() {
        Ok(gp) => gp,
        Err(e) => return Ok(CheckOutcome::fails(format!("reflection breaks down: {e}"))),
    };
    let pos = |j: usize| gp.ji.iter().position(|&x| x == j).expect("j is irreducible");
    // Antitone, involutive, and comparable.
    for (k1, &j1) in gp.ji.iter().enumerate() {
        if gp.g[pos(gp.g[k1])] != j1 {
            return Ok(CheckOutcome::fails(format!(
                "reflection is not an involution at {}",
                dm.label(j1)
            )));
        }
        if !dm.leq(j1, gp.g[k1]) && !dm.leq(gp.g[k1], j1) {
            return Ok(CheckOutcome::fails(format!(
                "{} is incomparable with its reflection",
                dm.label(j1)
            )));
        }
        for (k2, &j2) in gp.ji.iter().enumerate() {
            if dm.leq(j1, j2) && !dm.leq(gp.g[k2], gp.g[k1]) {
                return Ok(CheckOutcome::fails(format!(
                    "reflection is not antitone between {} and {}",
                    dm.label(j1),
                    dm.label(j2)
                )));
            }
        }
    }
    // The lower block is exactly the irreducibles below their negation.
    let below_neg: Vec<usize> = gp
        .ji
        .iter()
        .copied()
        .filter(|&j| dm.leq(j, dm.neg_of(j).expect("negation attached")))
        .collect();
    if sorted(below_neg) != sorted(gp.minus.clone()) {
        return Ok(CheckOutcome::fails(
            "lower block differs from the irreducibles below their negation".into(),
        ));
    }
    // Self-reflective irreducibles form an antichain: j1 < j2 would force
    // j1 = g(j1) >= g(j2) = j2 by antitonicity.
    for &j in &gp.circ {
        for &k in &gp.circ {
            if k != j && (dm.leq(j, k) || dm.leq(k, j)) {
                return Ok(CheckOutcome::fails(format!(
                    "self-reflective {} is comparable with self-reflective {}",
                    dm.label(j),
                    dm.label(k)
                )));
            }
        }
    }
    // The reflection swaps the outer blocks.
    let image_of_minus: Vec<usize> = gp.minus.iter().map(|&j| gp.g[pos(j)]).collect();
    if sorted(image_of_minus) != sorted(gp.plus.clone()) {
        return Ok(CheckOutcome::fails(
            "reflection does not map the lower block onto the upper block".into(),
        ));
    }

    // Closed forms of the three blocks.
    let r = w.r;
    let inv = w.system.inverse();
    let n = r.n();
    let singles = w.system.singletons();
    let up_family = w.system.family(FamilyKind::Upper);
    let inv_up_family = w.system.family(FamilyKind::InvUpper);
    let member = |p: RoughPair| -> Result<usize> {
        w.system
            .dm_index_of(p)
            .ok_or_else(|| Error::Internal(format!("{} should be in the completion", p.format(true))))
    };

    let mut minus_form = Vec::new();
    let mut circ_form = Vec::new();
    let mut plus_form = Vec::new();
    for x in 0..n {
        let row = inv.succ(x);
        if singles.contains(x) {
            circ_form.push(member(RoughPair::new(Subset::singleton(n, x), row))?);
            continue;
        }
        if up_family.is_cji(row)? {
            minus_form.push(member(RoughPair::new(lower(r, Subset::singleton(n, x)), row))?);
        }
        let image = r.succ(x);
        if inv_up_family.is_cji(image)? {
            plus_form.push(member(RoughPair::new(lower(r, image), upper(r, image)))?);
        }
    }
    minus_form.sort_unstable();
    minus_form.dedup();
    circ_form.sort_unstable();
    circ_form.dedup();
    plus_form.sort_unstable();
    plus_form.dedup();
    if minus_form != sorted(gp.minus.clone())
        || circ_form != sorted(gp.circ.clone())
        || plus_form != sorted(gp.plus.clone())
    {
        return Ok(CheckOutcome::fails(
            "closed-form block descriptions do not match the reflection blocks".into(),
        ));
    }

    // The reflection of a lower-block element is computable from any core
    // element of the generating row.
    for x in 0..n {
        if singles.contains(x) {
            continue;
        }
        let row = inv.succ(x);
        if !up_family.is_cji(row)? {
            continue;
        }
        let j = member(RoughPair::new(lower(r, Subset::singleton(n, x)), row))?;
        let core = inv.core(x);
        if core.is_empty() {
            return Ok(CheckOutcome::fails(format!(
                "element {x} generates a lower-block irreducible but has an empty inverse core"
            )));
        }
        for z in core.iter() {
            if singles.contains(z) {
                return Ok(CheckOutcome::fails(format!(
                    "core element {z} of {x} has a singleton row"
                )));
            }
            let image = r.succ(z);
            if !inv_up_family.is_cji(image)? {
                return Ok(CheckOutcome::fails(format!(
                    "core element {z} of {x} does not generate an irreducible inverse member"
                )));
            }
            let candidate = member(RoughPair::new(lower(r, image), upper(r, image)))?;
            if gp.g[pos(j)] != candidate {
                return Ok(CheckOutcome::fails(format!(
                    "reflection of {} is not the member generated by core element {z}",
                    dm.label(j)
                )));
            }
        }
    }
    Ok(CheckOutcome::holds())
}

fn t6(w: &Workbench) -> Result<CheckOutcome> {
    let rs = match w.system.rs_pairs() {
        Some(rs) => rs,
        None => return Ok(CheckOutcome::unmet()),
    };
    let (cut_lattice, cut_members) = dedekind_macneille(rs.len(), |i, k| rs[i].leq(rs[k]), w.caps)?;
    let dm = w.dm();
    if cut_lattice.size() != dm.size() {
        return Ok(CheckOutcome::fails(format!(
            "cut completion has {} elements, the pair completion {}",
            cut_lattice.size(),
            dm.size()
        )));
    }
    // Canonical map: each cut goes to the join of its rough pairs.
    let mut image = Vec::with_capacity(cut_lattice.size());
    for members in &cut_members {
        let pairs: Vec<RoughPair> = members.iter().map(|&i| rs[i]).collect();
        let joined = w.system.formula_join(&pairs)?;
        match w.system.dm_index_of(joined) {
            Some(ix) => image.push(ix),
            None => {
                return Ok(CheckOutcome::fails(format!(
                    "join {} of a cut is not a completion member",
                    joined.format(true)
                )))
            }
        }
    }
    let mut distinct = image.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != dm.size() {
        return Ok(CheckOutcome::fails(
            "canonical map from cuts to pairs is not a bijection".into(),
        ));
    }
    for i in 0..image.len() {
        for k in 0..image.len() {
            if cut_lattice.leq(i, k) != dm.leq(image[i], image[k]) {
                return Ok(CheckOutcome::fails(format!(
                    "canonical map does not preserve order between cuts {i} and {k}"
                )));
            }
        }
    }
    Ok(CheckOutcome::holds())
}

fn t7(w: &Workbench) -> Result<CheckOutcome> {
    let sys = &w.system;
    let up = sys.family(FamilyKind::Upper);
    let lo = sys.family(FamilyKind::Lower);
    let brute_up: Vec<Option<Subset>> = up
        .members()
        .iter()
        .map(|&b| up.brute_force_pseudocomplement(b))
        .collect::<Result<_>>()?;
    let pseudocomplemented = brute_up.iter().all(Option::is_some);
    let distributive = up.is_distributive(w.caps)?;
    let mut out = CheckOutcome::holds()
        .note("upper-family-pseudocomplemented", pseudocomplemented)
        .note("upper-family-distributive", distributive);

    if distributive {
        let inv = sys.inverse();
        for (&b, brute) in up.members().iter().zip(&brute_up) {
            let brute = brute.expect("distributive implies pseudocomplemented");
            let through_kernel = up.pseudocomplement(b, w.caps)?;
            if through_kernel != brute {
                return Ok(CheckOutcome::fails(format!(
                    "kernel pseudocomplement disagrees with the scan at {}",
                    format_set(b, true)
                )));
            }
            // Union of the singleton rows meeting b trivially.
            let mut union = Subset::empty(up.n());
            for y in 0..up.n() {
                let row = inv.succ(y);
                if up.meet(row, b)?.is_empty() {
                    union = union.union(row);
                }
            }
            if union != brute {
                return Ok(CheckOutcome::fails(format!(
                    "row-union pseudocomplement disagrees with the scan at {}",
                    format_set(b, true)
                )));
            }
        }
    }
    if !pseudocomplemented {
        out.status = CheckStatus::HypothesisNotMet;
        return Ok(out);
    }

    // The completion inherits both pseudocomplements, given coordinatewise.
    let dm = w.dm();
    let table = match dm.pseudocomplement_table() {
        Ok(t) => t,
        Err((a, c1, c2)) => {
            return Ok(CheckOutcome::fails(format!(
                "completion lacks a pseudocomplement at {} ({} and {} are maximal disjoint)",
                dm.label(a),
                dm.label(c1),
                dm.label(c2)
            )))
        }
    };
    let dual_table = match dm.dual_pseudocomplement_table() {
        Ok(t) => t,
        Err((a, c1, c2)) => {
            return Ok(CheckOutcome::fails(format!(
                "completion lacks a dual pseudocomplement at {} ({} and {} are minimal covers)",
                dm.label(a),
                dm.label(c1),
                dm.label(c2)
            )))
        }
    };
    for (i, &p) in sys.dm_pairs().iter().enumerate() {
        let star = sys.pair_pseudocomplement(p, w.caps)?;
        if sys.dm_index_of(star) != Some(table[i] as usize) {
            return Ok(CheckOutcome::fails(format!(
                "coordinate pseudocomplement of {} disagrees with the table",
                p.format(true)
            )));
        }
        let plus = sys.pair_dual_pseudocomplement(p, w.caps)?;
        if sys.dm_index_of(plus) != Some(dual_table[i] as usize) {
            return Ok(CheckOutcome::fails(format!(
                "coordinate dual pseudocomplement of {} disagrees with the table",
                p.format(true)
            )));
        }
    }

    // Lower-family dual pseudocomplements via complementation.
    for &a in lo.members() {
        let direct = match lo.brute_force_dual_pseudocomplement(a)? {
            Some(d) => d,
            None => {
                return Ok(CheckOutcome::fails(format!(
                    "lower family lacks a dual pseudocomplement at {}",
                    format_set(a, true)
                )))
            }
        };
        let through_complement = up
            .brute_force_pseudocomplement(a.complement())?
            .expect("upper family is pseudocomplemented")
            .complement();
        if direct != through_complement {
            return Ok(CheckOutcome::fails(format!(
                "complement route to the dual pseudocomplement fails at {}",
                format_set(a, true)
            )));
        }
    }

    // Negation route: the dual pseudocomplement is the negated
    // pseudocomplement of the negation.
    if dm.negation().is_some() {
        out = out.note("negation-closed", true);
        for i in 0..dm.size() {
            let ni = dm.neg_of(i).expect("negation attached");
            let star_of_neg = table[ni] as usize;
            let via_negation = dm.neg_of(star_of_neg).expect("negation attached");
            if via_negation != dual_table[i] as usize {
                return Ok(CheckOutcome::fails(format!(
                    "negation route to the dual pseudocomplement fails at {}",
                    dm.label(i)
                )));
            }
        }
    }
    Ok(out)
}

fn t8(w: &Workbench) -> Result<CheckOutcome> {
    if !w.dm_report.distributive.holds {
        return Ok(CheckOutcome::unmet());
    }
    let regular = w.dm_report.regular.holds;
    let two_levels = w.dm_report.two_levels.holds;
    if regular != two_levels {
        return Ok(CheckOutcome::fails(format!(
            "regular: {regular}, two levels: {two_levels}"
        )));
    }
    Ok(CheckOutcome::holds())
}

fn t9(w: &Workbench) -> Result<CheckOutcome> {
    if !w.r.classify().is_quasiorder() {
        return Ok(CheckOutcome::unmet());
    }
    let r = w.r;
    let inv = w.system.inverse();
    let (samples, exhaustive) = subset_sample(r);
    let mut out = CheckOutcome::holds().note("subsets-exhaustive", exhaustive);
    for &x in &samples {
        let pairs = [
            ("two upward closures", upper(r, upper(r, x)), upper(r, x)),
            ("inverse lower after upper", lower(inv, upper(r, x)), upper(r, x)),
            ("lower after inverse upper", lower(r, upper(inv, x)), upper(inv, x)),
            ("inverse upper after lower", upper(inv, lower(r, x)), lower(r, x)),
            ("upper after inverse lower", upper(r, lower(inv, x)), lower(inv, x)),
            ("two inverse upward closures", upper(inv, upper(inv, x)), upper(inv, x)),
        ];
        for (name, got, want) in pairs {
            if got != want {
                return Ok(CheckOutcome::fails(format!(
                    "{name} differ at {}",
                    format_set(x, true)
                )));
            }
        }
    }
    let up = w.system.family(FamilyKind::Upper);
    // Fixed points of the upper operator are exactly the family members.
    if exhaustive {
        for bits in 0..(1u64 << r.n()) {
            let x = Subset::from_bits(r.n(), bits);
            if (upper(r, x) == x) != up.contains(x) {
                return Ok(CheckOutcome::fails(format!(
                    "fixed-point characterisation fails at {}",
                    format_set(x, true)
                )));
            }
        }
    }
    for &b in up.members() {
        if upper(r, b) != b {
            return Ok(CheckOutcome::fails(format!(
                "member {} is not fixed by the upper operator",
                format_set(b, true)
            )));
        }
        for x in 0..r.n() {
            if b.contains(x) != inv.succ(x).is_subset(b) {
                return Ok(CheckOutcome::fails(format!(
                    "row characterisation of membership fails at element {x} in {}",
                    format_set(b, true)
                )));
            }
        }
        if kernel(r, b) != b {
            return Ok(CheckOutcome::fails(format!(
                "kernel moves the member {}",
                format_set(b, true)
            )));
        }
        let brute = up.brute_force_pseudocomplement(b)?;
        let short = upper(inv, b).complement();
        if brute != Some(short) {
            return Ok(CheckOutcome::fails(format!(
                "short pseudocomplement formula fails at {}",
                format_set(b, true)
            )));
        }
    }
    for x in 0..r.n() {
        if !r.core(x).contains(x) || !inv.core(x).contains(x) {
            return Ok(CheckOutcome::fails(format!(
                "element {x} is missing from its own core"
            )));
        }
    }
    // Pair pseudocomplements collapse to one coordinate formula.
    for &p in w.system.dm_pairs() {
        let star = w.system.pair_pseudocomplement(p, w.caps)?;
        let b = p.upper;
        let expected = RoughPair::new(
            upper(r, upper(inv, b)).complement(),
            upper(inv, b).complement(),
        );
        if star != expected {
            return Ok(CheckOutcome::fails(format!(
                "short pair pseudocomplement fails at {}",
                p.format(true)
            )));
        }
    }
    // For a quasiorder, St1 is conjectured to pin down when the overlap
    // compositions of the relation with its inverse are transitive.
    let st1 = conditions::check_st1(r)?.holds;
    let image_overlap = r.compose(inv)?;
    let preimage_overlap = inv.compose(r)?;
    let image_matches = image_overlap.classify().is_equivalence() == st1;
    let preimage_matches = preimage_overlap.classify().is_equivalence() == st1;
    out = out
        .note("image-overlap-composition-matches-St1", image_matches)
        .note("preimage-overlap-composition-matches-St1", preimage_matches);
    if !image_matches && !preimage_matches {
        return Ok(CheckOutcome::fails(format!(
            "St1 is {st1} but neither overlap composition agrees"
        )));
    }
    Ok(out)
}

fn t10(w: &Workbench) -> Result<CheckOutcome> {
    let dm = w.dm();
    let rep = &w.dm_report;
    let n = dm.size();
    let pc_table = dm.pseudocomplement_table().ok();
    let dual_pc_table = dm.dual_pseudocomplement_table().ok();

    if let Some(table) = &pc_table {
        let star = |a: usize| table[a] as usize;
        for a in 0..n {
            if star(star(star(a))) != star(a) {
                return Ok(CheckOutcome::fails(format!(
                    "triple pseudocomplement differs from single at {}",
                    dm.label(a)
                )));
            }
            if !dm.leq(a, star(star(a))) {
                return Ok(CheckOutcome::fails(format!(
                    "{} is not below its double pseudocomplement",
                    dm.label(a)
                )));
            }
            for b in 0..n {
                if dm.leq(a, b) && !dm.leq(star(b), star(a)) {
                    return Ok(CheckOutcome::fails(format!(
                        "pseudocomplementation is not antitone between {} and {}",
                        dm.label(a),
                        dm.label(b)
                    )));
                }
                if star(dm.join(a, b)) != dm.meet(star(a), star(b)) {
                    return Ok(CheckOutcome::fails(format!(
                        "join law for pseudocomplements fails at {} and {}",
                        dm.label(a),
                        dm.label(b)
                    )));
                }
                if !dm.leq(dm.join(star(a), star(b)), star(dm.meet(a, b))) {
                    return Ok(CheckOutcome::fails(format!(
                        "meet inequality for pseudocomplements fails at {} and {}",
                        dm.label(a),
                        dm.label(b)
                    )));
                }
            }
        }
        // Skeleton is the set of closed elements.
        let mut skeleton_dedup = sorted((0..n).map(star).collect());
        skeleton_dedup.dedup();
        let closed: Vec<usize> = (0..n).filter(|&a| star(star(a)) == a).collect();
        if skeleton_dedup != closed {
            return Ok(CheckOutcome::fails(
                "skeleton differs from the closed elements".into(),
            ));
        }

        if rep.distributive.holds {
            // Three equivalent forms of the Stone property.
            let identity = (0..n).all(|a| {
                (0..n).all(|b| star(dm.meet(a, b)) == dm.join(star(a), star(b)))
            });
            let join_closed = skeleton_dedup.iter().all(|&a| {
                skeleton_dedup
                    .iter()
                    .all(|&b| skeleton_dedup.binary_search(&dm.join(a, b)).is_ok())
            });
            let stone = rep.stone.holds;
            if identity != stone || join_closed != stone {
                return Ok(CheckOutcome::fails(format!(
                    "Stone forms disagree: flag {stone}, meet identity {identity}, \
                     join-closed skeleton {join_closed}"
                )));
            }
            if stone {
                // The skeleton is the centre and is Boolean inside it.
                let centre = sorted(dm.center());
                if centre != skeleton_dedup {
                    return Ok(CheckOutcome::fails(
                        "skeleton of a Stone algebra differs from the centre".into(),
                    ));
                }
                for &s in &skeleton_dedup {
                    if dm.meet(s, star(s)) != dm.bottom() || dm.join(s, star(s)) != dm.top() {
                        return Ok(CheckOutcome::fails(format!(
                            "{} lacks its complement in the skeleton",
                            dm.label(s)
                        )));
                    }
                }
            }
        }
    }

    if let (Some(table), Some(dual)) = (&pc_table, &dual_pc_table) {
        if rep.double_stone.holds {
            for a in 0..n {
                if !dm.leq(table[a] as usize, dual[a] as usize) {
                    return Ok(CheckOutcome::fails(format!(
                        "pseudocomplement exceeds the dual pseudocomplement at {}",
                        dm.label(a)
                    )));
                }
            }
        }
    }

    if rep.distributive.holds {
        if let Some(table) = &pc_table {
            // Complemented elements of a distributive pseudocomplemented
            // lattice are those whose pseudocomplement is a complement.
            let centre = sorted(dm.center());
            let by_join: Vec<usize> = (0..n)
                .filter(|&a| dm.join(a, table[a] as usize) == dm.top())
                .collect();
            if centre != by_join {
                return Ok(CheckOutcome::fails(
                    "centre differs from the join characterisation".into(),
                ));
            }
        }
        // Boolean means atoms and join-irreducibles coincide.
        let atoms = dm.atoms();
        let ji = dm.join_irreducibles();
        if rep.boolean.holds != (atoms == ji) {
            return Ok(CheckOutcome::fails(format!(
                "Boolean flag {} disagrees with atoms-equal-irreducibles {}",
                rep.boolean.holds,
                atoms == ji
            )));
        }
        if rep.boolean.holds && n != (1usize << atoms.len()) {
            return Ok(CheckOutcome::fails(format!(
                "Boolean lattice of {} atoms has size {}",
                atoms.len(),
                n
            )));
        }
        // Pairwise-meeting characterisation of the Stone property.
        let pairwise = ji.iter().all(|&j| {
            let under: Vec<usize> = (0..n)
                .filter(|&x| x != dm.bottom() && dm.leq(x, j))
                .collect();
            under
                .iter()
                .all(|&x| under.iter().all(|&y| dm.meet(x, y) != dm.bottom()))
        });
        if pc_table.is_some() && rep.stone.holds != pairwise {
            return Ok(CheckOutcome::fails(format!(
                "Stone flag {} disagrees with the pairwise-meeting criterion {}",
                rep.stone.holds, pairwise
            )));
        }
        // Two levels means no three-chain of join-irreducibles.
        let three_chain = ji.iter().any(|&a| {
            ji.iter().any(|&b| {
                dm.lt(a, b) && ji.iter().any(|&c| dm.lt(b, c))
            })
        });
        if rep.two_levels.holds != !three_chain {
            return Ok(CheckOutcome::fails(format!(
                "two-level flag {} disagrees with the chain scan {}",
                rep.two_levels.holds, !three_chain
            )));
        }
        // Birkhoff: the lattice has as many elements as the irreducible
        // poset has down-sets.
        if ji.len() <= 24 {
            let count = count_downsets(dm, &ji, n);
            if count != n {
                return Ok(CheckOutcome::fails(format!(
                    "{count} down-sets of the irreducible poset against {n} elements"
                )));
            }
        }
    } else {
        // Non-distributive lattices contain a pentagon or a diamond.
        if dm.find_n5().is_none() && dm.find_m3().is_none() {
            return Ok(CheckOutcome::fails(
                "no pentagon or diamond in a non-distributive completion".into(),
            ));
        }
    }

    // Membership characterisations of the cores.
    let r = w.r;
    let inv = w.system.inverse();
    for p in 0..r.n() {
        for q in 0..r.n() {
            if r.core(p).contains(q) != inv.core(q).contains(p) {
                return Ok(CheckOutcome::fails(format!(
                    "core symmetry fails between {p} and {q}"
                )));
            }
        }
    }
    let up = w.system.family(FamilyKind::Upper);
    if up.is_distributive(w.caps)? {
        // Nonempty inverse cores are exactly the join-prime rows.
        for x in 0..r.n() {
            let row = inv.succ(x);
            let rest = up
                .members()
                .iter()
                .filter(|&&m| !row.is_subset(m))
                .fold(Subset::empty(r.n()), |acc, &m| acc.union(m));
            let join_prime = !row.is_subset(rest);
            if inv.core(x).is_empty() == join_prime {
                return Ok(CheckOutcome::fails(format!(
                    "core of the row of {x} disagrees with join-primeness"
                )));
            }
            if up.is_cji(row)? != join_prime {
                return Ok(CheckOutcome::fails(format!(
                    "join-irreducibility and join-primeness split at the row of {x}"
                )));
            }
        }
    }
    let inv_up = w.system.family(FamilyKind::InvUpper);
    if inv_up.is_distributive(w.caps)? {
        for p in 0..r.n() {
            if inv_up.is_cji(r.succ(p))? && r.core(p).is_empty() {
                return Ok(CheckOutcome::fails(format!(
                    "irreducible image of {p} with an empty core"
                )));
            }
        }
    }

    // Upper-family Stone property follows from the completion's.
    if rep.stone.holds && w.up_report.pseudocomplemented.holds {
        if !w.up_report.stone.holds {
            return Ok(CheckOutcome::fails(
                "Stone completion over a non-Stone upper family".into(),
            ));
        }
        for &b in up.members() {
            let b_star = up
                .brute_force_pseudocomplement(b)?
                .expect("upper family is pseudocomplemented");
            let b_star_star = up
                .brute_force_pseudocomplement(b_star)?
                .expect("upper family is pseudocomplemented");
            if lower(inv, b_star).union(lower(inv, b_star_star)) != Subset::full(r.n()) {
                return Ok(CheckOutcome::fails(format!(
                    "inverse-lower images of {} and its double pseudocomplement do not cover",
                    format_set(b, true)
                )));
            }
        }
    }
    Ok(CheckOutcome::holds())
}

/// Number of down-sets of the poset induced on `ji`, stopping early (with a
/// value exceeding `limit`) once the count cannot possibly equal it anymore.
fn count_downsets(dm: &FiniteLattice, ji: &[usize], limit: usize) -> usize {
    let k = ji.len();
    let below: Vec<u32> = (0..k)
        .map(|i| {
            let mut mask = 0u32;
            for (j, &other) in ji.iter().enumerate() {
                if dm.leq(other, ji[i]) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![0u32];
    seen.insert(0u32);
    while let Some(set) = frontier.pop() {
        for i in 0..k {
            if set & (1 << i) == 0 && ((below[i] & !(1 << i)) & !set) == 0 {
                let next = set | (1 << i);
                if seen.insert(next) {
                    if seen.len() > limit {
                        return seen.len();
                    }
                    frontier.push(next);
                }
            }
        }
    }
    seen.len()
}

fn check_with_workbench(w: &Workbench, id: TheoremId) -> CheckOutcome {
    let result = match id {
        TheoremId::T1 => t1(w),
        TheoremId::T2 => t2(w),
        TheoremId::T3 => t3(w),
        TheoremId::T4 => t4(w),
        TheoremId::T5 => t5(w),
        TheoremId::T6 => t6(w),
        TheoremId::T7 => t7(w),
        TheoremId::T8 => t8(w),
        TheoremId::T9 => t9(w),
        TheoremId::T10 => t10(w),
    };
    result.unwrap_or_else(|e| CheckOutcome::fails(format!("check aborted: {e}")))
}

/// Checks the given statements on one relation.
pub fn check_relation(
    r: &BinaryRelation,
    theorems: &[TheoremId],
    caps: &Caps,
) -> Vec<(TheoremId, CheckOutcome)> {
    match Workbench::new(r, caps) {
        Ok(w) => theorems
            .iter()
            .map(|&id| (id, check_with_workbench(&w, id)))
            .collect(),
        Err(e) => theorems
            .iter()
            .map(|&id| (id, CheckOutcome::fails(format!("system build failed: {e}"))))
            .collect(),
    }
}

/// Checks one statement on one relation.
pub fn check_one(r: &BinaryRelation, theorem: TheoremId, caps: &Caps) -> CheckOutcome {
    check_relation(r, &[theorem], caps)
        .pop()
        .expect("one theorem in, one outcome out")
        .1
}

// --- campaign driver --------------------------------------------------------

/// What a campaign runs.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignConfig {
    /// Largest universe size.
    pub n_max: usize,
    /// Random relations per universe size beyond the exhaustive range.
    pub samples_per_n: usize,
    pub seed: u64,
    pub theorems: Vec<TheoremId>,
    /// Worker threads; `None` leaves the choice to the runtime.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            n_max: 6,
            samples_per_n: 200,
            seed: 2024,
            theorems: TheoremId::ALL.to_vec(),
            jobs: None,
        }
    }
}

/// Universe sizes checked exhaustively.
pub const EXHAUSTIVE_MAX: usize = 3;

#[derive(Clone, Copy)]
enum WorkItem {
    Exhaustive { n: usize, bits: u64 },
    Sampled { n: usize, index: usize },
}

fn exhaustive_relation(n: usize, bits: u64) -> Result<BinaryRelation> {
    let mut succ = vec![Subset::empty(n); n];
    let mut k = 0;
    for x in 0..n {
        for y in 0..n {
            if x == y {
                succ[x] = succ[x].insert(y);
            } else {
                if bits >> k & 1 == 1 {
                    succ[x] = succ[x].insert(y);
                }
                k += 1;
            }
        }
    }
    BinaryRelation::new(n, succ)
}

fn sampled_relation(n: usize, index: usize, seed: u64) -> Result<BinaryRelation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 40) ^ index as u64);
    match index % 8 {
        0 => BinaryRelation::random_reflexive(n, 0.2, &mut rng),
        1 => BinaryRelation::random_reflexive(n, 0.5, &mut rng),
        2 => BinaryRelation::random_reflexive(n, 0.8, &mut rng),
        3 => BinaryRelation::random_quasiorder(n, 0.3, &mut rng),
        4 => BinaryRelation::random_quasiorder(n, 0.7, &mut rng),
        5 => {
            let blocks = random_covering(n, &mut rng);
            BinaryRelation::tolerance_from_covering(n, &blocks)
        }
        6 => {
            let blocks = random_partition(n, &mut rng);
            BinaryRelation::equivalence_from_partition(n, &blocks)
        }
        _ => {
            let (blocks, assignment) = random_irredundant_covering(n, &mut rng);
            BinaryRelation::from_irredundant_covering(n, &blocks, &assignment)
        }
    }
}

fn item_relation(item: WorkItem, seed: u64) -> Result<BinaryRelation> {
    match item {
        WorkItem::Exhaustive { n, bits } => exhaustive_relation(n, bits),
        WorkItem::Sampled { n, index } => sampled_relation(n, index, seed),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    /// JSON document of the offending relation.
    pub relation: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremStats {
    pub theorem: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    pub hypothesis_met: usize,
    pub failures_total: usize,
    /// At most [`MAX_STORED_FAILURES`] concrete failures, in scan order.
    pub failures: Vec<FailureRecord>,
    pub notes: BTreeMap<String, usize>,
}

pub const MAX_STORED_FAILURES: usize = 16;

#[derive(Clone, Debug, Serialize)]
pub struct CampaignResult {
    pub seed: u64,
    pub n_max: usize,
    pub samples_per_n: usize,
    pub exhaustive_max: usize,
    pub total_relations: usize,
    pub theorems: Vec<TheoremStats>,
    pub all_hold: bool,
    /// Hash of everything above, for reproducibility comparisons.
    pub digest: String,
    /// Wall-clock duration; not part of the digest.
    pub duration_ms: u128,
}

/// Runs the campaign. The result is a pure function of the configuration
/// and the caps; thread count only affects the duration.
pub fn run_campaign(cfg: &CampaignConfig, caps: &Caps) -> Result<CampaignResult> {
    let start = Instant::now();
    let mut items = Vec::new();
    for n in 1..=cfg.n_max.min(EXHAUSTIVE_MAX) {
        let cells = n * n - n;
        for bits in 0..(1u64 << cells) {
            items.push(WorkItem::Exhaustive { n, bits });
        }
    }
    for n in (EXHAUSTIVE_MAX + 1)..=cfg.n_max {
        for index in 0..cfg.samples_per_n {
            items.push(WorkItem::Sampled { n, index });
        }
    }

    let theorems = cfg.theorems.clone();
    let seed = cfg.seed;
    let caps = *caps;
    let run = || -> Result<Vec<Vec<(TheoremId, CheckOutcome)>>> {
        items
            .par_iter()
            .map(|&item| {
                let r = item_relation(item, seed)?;
                Ok(check_relation(&r, &theorems, &caps))
            })
            .collect()
    };
    let results = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("cannot build thread pool: {e}")))?
            .install(run),
        None => run(),
    }?;

    let mut stats: Vec<TheoremStats> = cfg
        .theorems
        .iter()
        .map(|t| TheoremStats {
            theorem: t.code(),
            statement: t.statement(),
            checked: 0,
            hypothesis_met: 0,
            failures_total: 0,
            failures: Vec::new(),
            notes: BTreeMap::new(),
        })
        .collect();
    for (item, outcomes) in items.iter().zip(&results) {
        for (pos, (_, outcome)) in outcomes.iter().enumerate() {
            let s = &mut stats[pos];
            s.checked += 1;
            if outcome.status != CheckStatus::HypothesisNotMet {
                s.hypothesis_met += 1;
            }
            if outcome.status == CheckStatus::Fails {
                s.failures_total += 1;
                if s.failures.len() < MAX_STORED_FAILURES {
                    let r = item_relation(*item, seed)?;
                    s.failures.push(FailureRecord {
                        relation: r.to_json(),
                        detail: outcome.detail.clone().unwrap_or_default(),
                    });
                }
            }
            for note in &outcome.notes {
                *s.notes.entry(note.clone()).or_insert(0) += 1;
            }
        }
    }
    let all_hold = stats.iter().all(|s| s.failures_total == 0);

    let mut result = CampaignResult {
        seed: cfg.seed,
        n_max: cfg.n_max,
        samples_per_n: cfg.samples_per_n,
        exhaustive_max: EXHAUSTIVE_MAX,
        total_relations: items.len(),
        theorems: stats,
        all_hold,
        digest: String::new(),
        duration_ms: 0,
    };
    let canonical = serde_json::to_string(&result)?;
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    result.digest = format!("{:x}", hasher.finalize());
    result.duration_ms = start.elapsed().as_millis();
    Ok(result)
}

// --- witness minimisation ---------------------------------------------------

fn remove_pair(r: &BinaryRelation, x: usize, y: usize) -> BinaryRelation {
    let succ: Vec<Subset> = (0..r.n())
        .map(|a| {
            if a == x {
                r.succ(a).diff(Subset::singleton(r.n(), y))
            } else {
                r.succ(a)
            }
        })
        .collect();
    BinaryRelation::new(r.n(), succ).expect("removing a pair keeps the relation well-formed")
}

fn remove_element(r: &BinaryRelation, victim: usize) -> BinaryRelation {
    let n = r.n() - 1;
    let old_of = |new: usize| if new < victim { new } else { new + 1 };
    let succ: Vec<Subset> = (0..n)
        .map(|a| {
            let mut row = Subset::empty(n);
            for b in 0..n {
                if r.contains(old_of(a), old_of(b)) {
                    row = row.insert(b);
                }
            }
            row
        })
        .collect();
    BinaryRelation::new(n, succ).expect("removing an element keeps the relation well-formed")
}

pub(crate) fn minimize_with<F>(r: &BinaryRelation, mut still_failing: F) -> BinaryRelation
where
    F: FnMut(&BinaryRelation) -> bool,
{
    let mut current = r.clone();
    loop {
        let before = (current.n(), current.pair_count());
        // Drop whole elements first: that shrinks fastest.
        while current.n() > 1 {
            let found = (0..current.n())
                .map(|x| remove_element(&current, x))
                .find(|cand| still_failing(cand));
            match found {
                Some(cand) => current = cand,
                None => break,
            }
        }
        // Then drop single off-diagonal pairs.
        'pairs: loop {
            for x in 0..current.n() {
                for y in 0..current.n() {
                    if x != y && current.contains(x, y) {
                        let cand = remove_pair(&current, x, y);
                        if still_failing(&cand) {
                            current = cand;
                            continue 'pairs;
                        }
                    }
                }
            }
            break;
        }
        if (current.n(), current.pair_count()) == before {
            return current;
        }
    }
}

/// Shrinks a relation on which `theorem` fails to a smaller one on which it
/// still fails, by greedily removing elements and pairs.
pub fn minimize_witness(
    r: &BinaryRelation,
    theorem: TheoremId,
    caps: &Caps,
) -> Result<BinaryRelation> {
    let fails = |cand: &BinaryRelation| check_one(cand, theorem, caps).status == CheckStatus::Fails;
    if !fails(r) {
        return Err(Error::NotFailing(theorem.code().to_string()));
    }
    Ok(minimize_with(r, fails))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::tests::{atom4, cov4, dir3, ker4};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn every_statement_holds_on_the_worked_examples() {
        for r in [dir3(), ker4(), atom4(), cov4()] {
            for (id, outcome) in check_relation(&r, &TheoremId::ALL, &caps()) {
                assert_ne!(
                    outcome.status,
                    CheckStatus::Fails,
                    "{} fails on {}: {:?}",
                    id.code(),
                    r.to_json(),
                    outcome.detail
                );
            }
        }
    }

    #[test]
    fn exhaustive_three_element_relations_satisfy_every_statement() {
        let cfg = CampaignConfig {
            n_max: 3,
            samples_per_n: 0,
            seed: 7,
            theorems: TheoremId::ALL.to_vec(),
            jobs: None,
        };
        let result = run_campaign(&cfg, &caps()).unwrap();
        assert_eq!(result.total_relations, 1 + 4 + 64);
        assert!(result.all_hold, "{:#?}", result.theorems);
        // The hypotheses are actually exercised.
        let by_code = |code: &str| result.theorems.iter().find(|t| t.theorem == code).unwrap();
        assert!(by_code("T1").hypothesis_met > 0);
        assert!(by_code("T9").hypothesis_met > 0);
        assert!(by_code("T9").hypothesis_met < by_code("T3").hypothesis_met);
    }

    #[test]
    fn campaigns_are_reproducible_and_seed_sensitive() {
        let cfg = CampaignConfig {
            n_max: 4,
            samples_per_n: 24,
            seed: 11,
            theorems: vec![TheoremId::T3, TheoremId::T4, TheoremId::T7],
            jobs: None,
        };
        let a = run_campaign(&cfg, &caps()).unwrap();
        let b = run_campaign(&cfg, &caps()).unwrap();
        assert_eq!(a.digest, b.digest);
        assert!(a.all_hold);
        let jobs_one = CampaignConfig {
            jobs: Some(1),
            ..cfg.clone()
        };
        let c = run_campaign(&jobs_one, &caps()).unwrap();
        assert_eq!(a.digest, c.digest);
        let reseeded = CampaignConfig {
            seed: 12,
            ..cfg.clone()
        };
        let d = run_campaign(&reseeded, &caps()).unwrap();
        assert_ne!(a.digest, d.digest);
    }

    #[test]
    fn minimisation_reaches_a_local_minimum_of_an_injected_predicate() {
        // Pretend the failure is "the relation still has an off-diagonal
        // pair somewhere in the first two rows". The smallest failing shape
        // then has two elements and one off-diagonal pair.
        let fails = |r: &BinaryRelation| (0..r.n().min(2)).any(|x| r.succ(x).card() > 1);
        let r = ker4();
        assert!(fails(&r));
        let small = minimize_with(&r, fails);
        assert!(fails(&small));
        assert_eq!(small.n(), 2);
        assert_eq!(small.pair_count(), 3);
    }

    #[test]
    fn minimize_witness_requires_a_failing_relation() {
        match minimize_witness(&cov4(), TheoremId::T4, &caps()) {
            Err(Error::NotFailing(_)) => {}
            other => panic!("expected a not-failing error, got {other:?}"),
        }
    }

    #[test]
    fn statement_lists_parse() {
        assert_eq!(TheoremId::parse_list("all").unwrap(), TheoremId::ALL.to_vec());
        assert_eq!(
            TheoremId::parse_list("t3, T7").unwrap(),
            vec![TheoremId::T3, TheoremId::T7]
        );
        assert!(TheoremId::parse_list("T11").is_err());
        assert!(TheoremId::parse_list("").is_err());
    }
}
