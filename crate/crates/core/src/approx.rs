//! The four rough approximation operators and their law suite.
//!
//! For a relation `R` with rows `R(x)` and inverse rows `inv(x)`:
//!
//! * `lower(R, X)     = {x | R(x) is a subset of X}`
//! * `upper(R, X)     = {x | R(x) meets X}`
//! * `inv_lower(R, X)` and `inv_upper(R, X)` are the same with the inverse
//!   relation's rows.
//!
//! `(upper, inv_lower)` and `(inv_upper, lower)` form Galois connections on
//! the powerset; [`law_suite`] checks the connection laws (and the extra laws
//! holding for reflexive relations) on an exhaustive or deterministic sample
//! of subsets, reporting a witness for every violated law.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::families::{FamilyKind, SetFamily};
use crate::relation::{BinaryRelation, Subset};
use crate::Caps;

/// Largest universe for which the law suite enumerates all subsets.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;
/// Sample size used beyond [`EXHAUSTIVE_SUBSET_LIMIT`].
pub const SUBSET_SAMPLE_SIZE: usize = 512;
/// Fixed seed for the deterministic subset sample.
const SAMPLE_SEED: u64 = 0x5eed_0fa9_905b_1a7e;

/// One of the four approximation operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    /// `{x | R(x) subset of X}`
    Lower,
    /// `{x | R(x) meets X}`
    Upper,
    /// `{x | inv(x) subset of X}`
    InvLower,
    /// `{x | inv(x) meets X}`
    InvUpper,
}

impl Operator {
    pub const ALL: [Operator; 4] = [
        Operator::Lower,
        Operator::Upper,
        Operator::InvLower,
        Operator::InvUpper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operator::Lower => "lower",
            Operator::Upper => "upper",
            Operator::InvLower => "inv_lower",
            Operator::InvUpper => "inv_upper",
        }
    }
}

/// Lower approximation by the rows of `r`: `{x | r(x) subset of set}`.
pub fn lower(r: &BinaryRelation, set: Subset) -> Subset {
    let mut out = Subset::empty(r.n());
    for x in 0..r.n() {
        if r.succ(x).is_subset(set) {
            out = out.insert(x);
        }
    }
    out
}

/// Upper approximation by the rows of `r`: `{x | r(x) meets set}`.
pub fn upper(r: &BinaryRelation, set: Subset) -> Subset {
    let mut out = Subset::empty(r.n());
    for x in 0..r.n() {
        if r.succ(x).intersects(set) {
            out = out.insert(x);
        }
    }
    out
}

/// Apply one of the four operators. The inverse relation is recomputed on
/// demand; hot paths should hold the inverse and call [`lower`]/[`upper`]
/// directly.
pub fn approximate(r: &BinaryRelation, set: Subset, op: Operator) -> Subset {
    match op {
        Operator::Lower => lower(r, set),
        Operator::Upper => upper(r, set),
        Operator::InvLower => lower(&r.inverse(), set),
        Operator::InvUpper => upper(&r.inverse(), set),
    }
}

/// Outcome of one law on one relation.
#[derive(Clone, Debug, Serialize)]
pub struct LawOutcome {
    pub id: String,
    pub description: String,
    pub holds: bool,
    /// Human-readable counterexample, present iff the law fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Result of running [`law_suite`] on a relation.
#[derive(Clone, Debug, Serialize)]
pub struct LawSuiteReport {
    pub n: usize,
    pub reflexive: bool,
    /// True when every subset of the universe was checked.
    pub exhaustive: bool,
    pub sample_size: usize,
    pub laws: Vec<LawOutcome>,
}

impl LawSuiteReport {
    pub fn all_hold(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }

    pub fn violations(&self) -> Vec<&LawOutcome> {
        self.laws.iter().filter(|l| !l.holds).collect()
    }
}

/// The deterministic subset sample for a universe of size `n`: every subset
/// when `n <= EXHAUSTIVE_SUBSET_LIMIT`, otherwise the structured sets
/// (empty, full, singletons, rows and inverse rows and their complements)
/// plus seeded random bitsets. Returns the sample and whether it was
/// exhaustive.
pub fn subset_sample(r: &BinaryRelation) -> (Vec<Subset>, bool) {
    let n = r.n();
    if n <= EXHAUSTIVE_SUBSET_LIMIT {
        let all: Vec<Subset> = (0u64..1u64 << n).map(|b| Subset::from_bits(n, b)).collect();
        return (all, true);
    }
    let inv = r.inverse();
    let mut sample = vec![Subset::empty(n), Subset::full(n)];
    for x in 0..n {
        sample.push(Subset::singleton(n, x));
        sample.push(r.succ(x));
        sample.push(r.succ(x).complement());
        sample.push(inv.succ(x));
        sample.push(inv.succ(x).complement());
    }
    sample.sort_by_key(|s| s.sort_key());
    sample.dedup();
    // Top up with random bitsets, counting distinct subsets only; width is
    // above the exhaustive limit, so there are plenty to draw from.
    let mut seen: std::collections::HashSet<u64> = sample.iter().map(|s| s.bits()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    while sample.len() < SUBSET_SAMPLE_SIZE {
        let s = Subset::from_bits(n, rng.gen::<u64>());
        if seen.insert(s.bits()) {
            sample.push(s);
        }
    }
    sample.sort_by_key(|s| s.sort_key());
    (sample, false)
}

struct LawChecker {
    laws: Vec<LawOutcome>,
}

impl LawChecker {
    fn record(&mut self, id: &str, description: &str, witness: Option<String>) {
        self.laws.push(LawOutcome {
            id: id.to_string(),
            description: description.to_string(),
            holds: witness.is_none(),
            witness,
        });
    }
}

/// Evaluate the Galois-connection laws, the duality equations, the image
/// family isomorphisms, and (for reflexive input) the interior/closure
/// bounds, over the subset sample of the relation.
pub fn law_suite(r: &BinaryRelation) -> LawSuiteReport {
    let n = r.n();
    let inv = r.inverse();
    let (sample, exhaustive) = subset_sample(r);
    let lo: Vec<Subset> = sample.iter().map(|&x| lower(r, x)).collect();
    let up: Vec<Subset> = sample.iter().map(|&x| upper(r, x)).collect();
    let ilo: Vec<Subset> = sample.iter().map(|&x| lower(&inv, x)).collect();
    let iup: Vec<Subset> = sample.iter().map(|&x| upper(&inv, x)).collect();
    let mut chk = LawChecker { laws: Vec::new() };

    // GC1: empty set is closed from above, full set from below.
    let empty = Subset::empty(n);
    let full = Subset::full(n);
    let gc1 = if upper(r, empty) != empty
        || upper(&inv, empty) != empty
        || lower(r, full) != full
        || lower(&inv, full) != full
    {
        Some("constant laws on the empty/full set fail".to_string())
    } else {
        None
    };
    chk.record("GC1", "upper of empty is empty; lower of full is full", gc1);

    // GC2: interior/closure bounds from the two connections.
    let mut gc2 = None;
    for (i, &x) in sample.iter().enumerate() {
        if !upper(r, ilo[i]).is_subset(x)
            || !x.is_subset(lower(&inv, up[i]))
            || !upper(&inv, lo[i]).is_subset(x)
            || !x.is_subset(lower(r, iup[i]))
        {
            gc2 = Some(format!("bound fails for X = {x:?}"));
            break;
        }
    }
    chk.record(
        "GC2",
        "closure of interior shrinks, interior of closure grows",
        gc2,
    );

    // GC3: all four operators are monotone. Compare X with X union Y.
    let mut gc3 = None;
    'gc3: for (i, &x) in sample.iter().enumerate() {
        for &y in sample.iter() {
            let z = x.union(y);
            let zl = lower(r, z);
            let zu = upper(r, z);
            let zil = lower(&inv, z);
            let ziu = upper(&inv, z);
            if !lo[i].is_subset(zl)
                || !up[i].is_subset(zu)
                || !ilo[i].is_subset(zil)
                || !iup[i].is_subset(ziu)
            {
                gc3 = Some(format!("monotonicity fails for X = {x:?}, Y = {z:?}"));
                break 'gc3;
            }
        }
    }
    chk.record("GC3", "all four operators are monotone", gc3);

    // GC4 and GC5: upper operators distribute over unions, lower operators
    // over intersections, over sampled collections of sampled subsets.
    let collections = sample_collections(&sample, n);
    let mut gc4 = None;
    let mut gc5 = None;
    for coll in &collections {
        let union = coll.iter().fold(empty, |a, &b| a.union(b));
        let inter = coll.iter().fold(full, |a, &b| a.inter(b));
        let up_union = coll.iter().fold(empty, |a, &b| a.union(upper(r, b)));
        let iup_union = coll.iter().fold(empty, |a, &b| a.union(upper(&inv, b)));
        if gc4.is_none() && (upper(r, union) != up_union || upper(&inv, union) != iup_union) {
            gc4 = Some(format!("distribution over union fails for {coll:?}"));
        }
        let lo_inter = coll.iter().fold(full, |a, &b| a.inter(lower(r, b)));
        let ilo_inter = coll.iter().fold(full, |a, &b| a.inter(lower(&inv, b)));
        if gc5.is_none() && (lower(r, inter) != lo_inter || lower(&inv, inter) != ilo_inter) {
            gc5 = Some(format!("distribution over intersection fails for {coll:?}"));
        }
    }
    chk.record("GC4", "upper operators distribute over unions", gc4);
    chk.record("GC5", "lower operators distribute over intersections", gc5);

    // GC6: the triple compositions collapse.
    let mut gc6 = None;
    for (i, &x) in sample.iter().enumerate() {
        if upper(r, lower(&inv, up[i])) != up[i]
            || upper(&inv, lower(r, iup[i])) != iup[i]
            || lower(r, upper(&inv, lo[i])) != lo[i]
            || lower(&inv, upper(r, ilo[i])) != ilo[i]
        {
            gc6 = Some(format!("triple composition fails for X = {x:?}"));
            break;
        }
    }
    chk.record("GC6", "triple compositions collapse to single operators", gc6);

    // GC7 plus the complement isomorphisms between the image families.
    chk.record(
        "GC7",
        "image families are isomorphic via the connection and complement maps",
        family_isomorphism_witness(r, &inv),
    );

    // Adjunction: upper(X) below Y iff X below inv_lower(Y), and the twin.
    let mut adj = None;
    'adj: for (i, &x) in sample.iter().enumerate() {
        for (j, &y) in sample.iter().enumerate() {
            if (up[i].is_subset(y) != x.is_subset(ilo[j]))
                || (iup[i].is_subset(y) != x.is_subset(lo[j]))
            {
                adj = Some(format!("adjunction fails for X = {x:?}, Y = {y:?}"));
                break 'adj;
            }
        }
    }
    chk.record("ADJ", "the two operator pairs are Galois connections", adj);

    // Duality: each operator is the complement-conjugate of its partner.
    let mut dual = None;
    for (i, &x) in sample.iter().enumerate() {
        let xc = x.complement();
        if upper(r, xc) != lo[i].complement()
            || lower(r, xc) != up[i].complement()
            || upper(&inv, xc) != ilo[i].complement()
            || lower(&inv, xc) != iup[i].complement()
        {
            dual = Some(format!("duality fails for X = {x:?}"));
            break;
        }
    }
    chk.record("DUAL", "operators are mutually dual under complement", dual);

    let reflexive = r.is_reflexive();
    if reflexive {
        let ref1 = if !lower(r, empty).is_empty()
            || !lower(&inv, empty).is_empty()
            || upper(r, full) != full
            || upper(&inv, full) != full
        {
            Some("constant laws for reflexive relations fail".to_string())
        } else {
            None
        };
        chk.record("REF1", "lower of empty is empty; upper of full is full", ref1);

        let mut ref2 = None;
        for (i, &x) in sample.iter().enumerate() {
            if !lo[i].is_subset(x)
                || !x.is_subset(up[i])
                || !ilo[i].is_subset(x)
                || !x.is_subset(iup[i])
            {
                ref2 = Some(format!("sandwich bound fails for X = {x:?}"));
                break;
            }
        }
        chk.record("REF2", "lower within X within upper", ref2);
    }

    LawSuiteReport {
        n,
        reflexive,
        exhaustive,
        sample_size: sample.len(),
        laws: chk.laws,
    }
}

/// Deterministic collections of subsets used for the union/intersection laws.
fn sample_collections(sample: &[Subset], n: usize) -> Vec<Vec<Subset>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 1);
    let mut out = vec![Vec::new()];
    for size in 1..=4usize {
        for _ in 0..16 {
            let coll: Vec<Subset> = (0..size)
                .map(|_| sample[rng.gen_range(0..sample.len())])
                .collect();
            out.push(coll);
        }
    }
    // Structured collections: all singletons, all rows of width-n sample
    // prefixes.
    out.push((0..n).map(|i| Subset::singleton(n, i)).collect());
    out
}

/// Check the bijections between the four image families; `None` means they
/// all hold.
fn family_isomorphism_witness(r: &BinaryRelation, inv: &BinaryRelation) -> Option<String> {
    let caps = Caps::default();
    let fam_up = SetFamily::build(r, FamilyKind::Upper, &caps).ok()?;
    let fam_lo = SetFamily::build(r, FamilyKind::Lower, &caps).ok()?;
    let fam_iup = SetFamily::build(r, FamilyKind::InvUpper, &caps).ok()?;
    let fam_ilo = SetFamily::build(r, FamilyKind::InvLower, &caps).ok()?;

    // Complements: upper <-> lower and inv_upper <-> inv_lower (antitone).
    for &b in fam_up.members() {
        if !fam_lo.contains(b.complement()) {
            return Some(format!(
                "complement of upper-family member {b:?} is not a lower-family member"
            ));
        }
    }
    for &b in fam_iup.members() {
        if !fam_ilo.contains(b.complement()) {
            return Some(format!(
                "complement of inv-upper member {b:?} is not an inv-lower member"
            ));
        }
    }
    if fam_up.len() != fam_lo.len() || fam_iup.len() != fam_ilo.len() {
        return Some("family sizes disagree under complement".to_string());
    }

    // Galois maps: inv_lower is a monotone bijection from the upper family
    // to the inv-lower family, with upper as its inverse; dually for the
    // other connection.
    for &b in fam_up.members() {
        let image = lower(inv, b);
        if !fam_ilo.contains(image) || upper(r, image) != b {
            return Some(format!(
                "connection map does not restrict to a bijection at {b:?}"
            ));
        }
    }
    for &b in fam_iup.members() {
        let image = lower(r, b);
        if !fam_lo.contains(image) || upper(inv, image) != b {
            return Some(format!(
                "twin connection map does not restrict to a bijection at {b:?}"
            ));
        }
    }
    if fam_up.len() != fam_ilo.len() || fam_iup.len() != fam_lo.len() {
        return Some("family sizes disagree under the connection maps".to_string());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rel(n: usize, rows: &[&[usize]]) -> BinaryRelation {
        let lists: Vec<Vec<usize>> = rows
            .iter()
            .map(|r| r.iter().map(|&i| i - 1).collect())
            .collect();
        BinaryRelation::from_neighborhood_lists(n, &lists).unwrap()
    }

    fn sub(n: usize, elems: &[usize]) -> Subset {
        let zero: Vec<usize> = elems.iter().map(|&i| i - 1).collect();
        Subset::from_indices(n, &zero).unwrap()
    }

    #[test]
    fn approximations_match_hand_computation() {
        // Rows: 1 -> 12, 2 -> 123, 3 -> 3, 4 -> 134.
        let r = rel(4, &[&[1, 2], &[1, 2, 3], &[3], &[1, 3, 4]]);
        let x = sub(4, &[2, 3, 4]);
        assert_eq!(lower(&r, x), sub(4, &[3]));
        assert_eq!(upper(&r, x), Subset::full(4));
        let inv = r.inverse();
        // Inverse rows: 1 -> 124, 2 -> 12, 3 -> 234, 4 -> 4.
        assert_eq!(lower(&inv, x), sub(4, &[3, 4]));
        assert_eq!(upper(&inv, sub(4, &[1])), sub(4, &[1, 2]));
        // Singleton images are the rows of the inverse and direct relation.
        for p in 0..4 {
            assert_eq!(upper(&inv, Subset::singleton(4, p)), r.succ(p));
            assert_eq!(upper(&r, Subset::singleton(4, p)), inv.succ(p));
        }
    }

    #[test]
    fn operator_dispatch_matches_direct_calls() {
        let r = rel(3, &[&[1, 2, 3], &[2], &[1, 3]]);
        let inv = r.inverse();
        for bits in 0u64..8 {
            let x = Subset::from_bits(3, bits);
            assert_eq!(approximate(&r, x, Operator::Lower), lower(&r, x));
            assert_eq!(approximate(&r, x, Operator::Upper), upper(&r, x));
            assert_eq!(approximate(&r, x, Operator::InvLower), lower(&inv, x));
            assert_eq!(approximate(&r, x, Operator::InvUpper), upper(&inv, x));
        }
    }

    #[test]
    fn law_suite_passes_on_arbitrary_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in 1..=6 {
            for _ in 0..20 {
                let mut succ = Vec::new();
                for _ in 0..n {
                    succ.push(Subset::from_bits(n, rng.gen::<u64>()));
                }
                let r = BinaryRelation::new(n, succ).unwrap();
                let report = law_suite(&r);
                assert!(report.exhaustive);
                assert!(
                    report.all_hold(),
                    "violations: {:?} on {:?}",
                    report.violations(),
                    r
                );
            }
        }
    }

    #[test]
    fn law_suite_samples_beyond_the_exhaustive_limit() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let r = BinaryRelation::random_reflexive(16, 0.2, &mut rng).unwrap();
        let report = law_suite(&r);
        assert!(!report.exhaustive);
        assert!(report.sample_size >= SUBSET_SAMPLE_SIZE);
        assert!(report.all_hold(), "violations: {:?}", report.violations());
        assert!(report.laws.iter().any(|l| l.id == "REF2"));
    }

    #[test]
    fn reflexive_laws_absent_for_non_reflexive_input() {
        let r = BinaryRelation::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        let report = law_suite(&r);
        assert!(!report.reflexive);
        assert!(report.laws.iter().all(|l| l.id != "REF1"));
        assert!(report.all_hold());
    }

    proptest! {
        #[test]
        fn prop_galois_adjunction(n in 1usize..=7, seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut succ = Vec::new();
            for _ in 0..n {
                succ.push(Subset::from_bits(n, rng.gen::<u64>()));
            }
            let r = BinaryRelation::new(n, succ).unwrap();
            let inv = r.inverse();
            let x = Subset::from_bits(n, rng.gen::<u64>());
            let y = Subset::from_bits(n, rng.gen::<u64>());
            prop_assert_eq!(upper(&r, x).is_subset(y), x.is_subset(lower(&inv, y)));
            prop_assert_eq!(upper(&inv, x).is_subset(y), x.is_subset(lower(&r, y)));
        }

        #[test]
        fn prop_duality(n in 1usize..=7, seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = BinaryRelation::random_reflexive(n, 0.5, &mut rng).unwrap();
            let x = Subset::from_bits(n, rng.gen::<u64>());
            prop_assert_eq!(upper(&r, x.complement()), lower(&r, x).complement());
            prop_assert_eq!(lower(&r, x.complement()), upper(&r, x).complement());
        }
    }
}
