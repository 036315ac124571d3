//! End-to-end checklist. Each criterion prints a single pass/fail line, so a
//! run with `--nocapture` reads as a short report; the test fails if any
//! criterion does.

use std::cell::RefCell;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rough_lattice::approx::{law_suite, upper};
use rough_lattice::conditions;
use rough_lattice::families::FamilyKind;
use rough_lattice::relation::{BinaryRelation, Subset};
use rough_lattice::roughset::{RoughPair, RoughSetSystem};
use rough_lattice::verify::{self, CampaignConfig, CampaignResult, CheckStatus, TheoremId};
use rough_lattice::Caps;

fn rel(n: usize, rows: &[&[usize]]) -> BinaryRelation {
    let lists: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x - 1).collect())
        .collect();
    BinaryRelation::from_neighborhood_lists(n, &lists).unwrap()
}

fn set(n: usize, xs: &[usize]) -> Subset {
    Subset::from_indices(n, &xs.iter().map(|&x| x - 1).collect::<Vec<_>>()).unwrap()
}

fn pair(n: usize, lo: &[usize], up: &[usize]) -> RoughPair {
    RoughPair::new(set(n, lo), set(n, up))
}

fn condition(r: &BinaryRelation, name: &str) -> bool {
    conditions::check_all(r, &Caps::default())
        .unwrap()
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no condition named {name}"))
        .holds
}

/// All reflexive relations on `n` elements, by off-diagonal bit pattern.
fn all_reflexive(n: usize) -> Vec<BinaryRelation> {
    let off = n * (n - 1);
    (0u64..1 << off)
        .map(|bits| {
            let mut k = 0;
            let mut lists = vec![Vec::new(); n];
            for (x, list) in lists.iter_mut().enumerate() {
                for y in 0..n {
                    if x == y {
                        list.push(y);
                    } else {
                        if bits >> k & 1 == 1 {
                            list.push(y);
                        }
                        k += 1;
                    }
                }
            }
            BinaryRelation::from_neighborhood_lists(n, &lists).unwrap()
        })
        .collect()
}

fn within(start: Instant, budget: Duration) {
    let spent = start.elapsed();
    assert!(spent <= budget, "took {spent:?}, budget {budget:?}");
}

fn directed_three() -> BinaryRelation {
    rel(3, &[&[1, 2, 3], &[2], &[1, 3]])
}

fn kernel_four() -> BinaryRelation {
    rel(4, &[&[1, 2], &[1, 2, 3], &[3], &[1, 3, 4]])
}

fn single_atom_four() -> BinaryRelation {
    rel(4, &[&[1, 2, 3, 4], &[2, 3], &[2, 3, 4], &[3, 4]])
}

fn covering_four() -> BinaryRelation {
    rel(4, &[&[1, 2, 3, 4], &[1, 2], &[3], &[4]])
}

fn criterion_1_directed_example() {
    let start = Instant::now();
    let caps = Caps::default();
    let r = directed_three();
    let system = RoughSetSystem::build(&r, &caps).unwrap();
    assert_eq!(system.rs_pairs().unwrap().len(), 6);
    assert_eq!(system.dm_pairs().len(), 6);
    assert_eq!(system.rs_is_complete(), Some(true));
    assert!(condition(&r, "clinker"));
    let rep = system.dm_lattice().classify();
    assert!(rep.distributive.holds);
    assert!(rep.regular.holds);
    assert!(rep.double_stone.holds);
    assert_eq!(
        system.dm_lattice().as_chain_product(&caps),
        Some(vec![2, 3])
    );
    within(start, Duration::from_secs(1));
}

fn criterion_2_kernel_example() {
    let start = Instant::now();
    let caps = Caps::default();
    let r = kernel_four();
    let system = RoughSetSystem::build(&r, &caps).unwrap();
    let b = set(4, &[2, 3, 4]);
    assert_eq!(rough_lattice::families::kernel(&r, b), set(4, &[3, 4]));
    let up = system.family(FamilyKind::Upper);
    assert_eq!(up.pseudocomplement(b, &caps).unwrap(), set(4, &[1, 2]));
    assert_eq!(
        system
            .pair_pseudocomplement(pair(4, &[3], &[2, 3, 4]), &caps)
            .unwrap(),
        pair(4, &[], &[1, 2])
    );
    assert_eq!(
        system
            .pair_dual_pseudocomplement(pair(4, &[1], &[1, 2, 4]), &caps)
            .unwrap(),
        pair(4, &[3, 4], &[1, 2, 3, 4])
    );
    within(start, Duration::from_secs(1));
}

fn criterion_3_single_atom_example() {
    let start = Instant::now();
    let caps = Caps::default();
    let r = single_atom_four();
    let system = RoughSetSystem::build(&r, &caps).unwrap();
    assert_eq!(
        system.family(FamilyKind::Upper).atom_members(),
        vec![set(4, &[1])]
    );
    let rep = system.dm_lattice().classify();
    assert!(rep.stone.holds);
    assert!(!rep.regular.holds);
    assert!(!rep.two_levels.holds);
    within(start, Duration::from_secs(1));
}

fn criterion_4_covering_example() {
    let start = Instant::now();
    let caps = Caps::default();
    let r = covering_four();
    let system = RoughSetSystem::build(&r, &caps).unwrap();
    assert_eq!(system.rs_pairs().unwrap().len(), 12);
    assert_eq!(system.rs_is_complete(), Some(true));
    assert_eq!(
        system.dm_lattice().as_chain_product(&caps),
        Some(vec![2, 2, 3])
    );
    assert!(condition(&r, "rSt"));
    assert!(condition(&r, "clinker"));
    let rep = system.dm_lattice().classify();
    assert!(rep.distributive.holds);
    assert!(rep.regular.holds);
    assert!(rep.double_stone.holds);
    within(start, Duration::from_secs(1));
}

fn criterion_5_theorem_gate(slot: &RefCell<Option<CampaignResult>>) {
    let start = Instant::now();
    let cfg = CampaignConfig {
        n_max: 6,
        samples_per_n: 1000,
        seed: 2024,
        theorems: TheoremId::ALL.to_vec(),
        jobs: None,
    };
    let result = verify::run_campaign(&cfg, &Caps::default()).unwrap();
    assert_eq!(result.total_relations, 1 + 4 + 64 + 3 * 1000);
    for t in &result.theorems {
        assert_eq!(t.failures_total, 0, "{} fails: {:?}", t.theorem, t.failures);
        assert!(t.checked == result.total_relations);
    }
    assert!(result.all_hold);
    *slot.borrow_mut() = Some(result);
    within(start, Duration::from_secs(300));
}

fn criterion_6_oracle_equivalence(slot: &RefCell<Option<CampaignResult>>) {
    let borrowed = slot.borrow();
    let result = borrowed.as_ref().expect("theorem gate ran first");
    for code in ["T6", "T7"] {
        let stats = result
            .theorems
            .iter()
            .find(|t| t.theorem == code)
            .unwrap();
        assert_eq!(stats.failures_total, 0);
        assert_eq!(stats.checked, result.total_relations);
        assert!(stats.hypothesis_met > 0);
    }
}

fn criterion_7_law_suite() {
    for n in 1..=3 {
        for r in all_reflexive(n) {
            let report = law_suite(&r);
            assert!(report.exhaustive);
            assert_eq!(report.sample_size, 1 << n);
            assert!(report.all_hold(), "violations: {:?}", report.violations());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for (n, density) in [(8, 0.3), (12, 0.25), (13, 0.2), (16, 0.5)] {
        let r = BinaryRelation::random_reflexive(n, density, &mut rng).unwrap();
        let report = law_suite(&r);
        assert_eq!(report.exhaustive, n <= 12);
        if report.exhaustive {
            assert_eq!(report.sample_size, 1 << n);
        } else {
            assert!(report.sample_size >= 512);
        }
        assert!(report.all_hold(), "violations: {:?}", report.violations());
    }
}

fn criterion_8_quasiorder_identities() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..204usize {
        let n = 2 + i % 6;
        let density = [0.2, 0.45, 0.7][i % 3];
        let q = BinaryRelation::random_quasiorder(n, density, &mut rng).unwrap();
        let inv = q.inverse();
        let system = RoughSetSystem::build(&q, &caps).unwrap();
        let up = system.family(FamilyKind::Upper);
        for &b in up.members() {
            assert_eq!(
                up.pseudocomplement(b, &caps).unwrap(),
                upper(&inv, b).complement()
            );
        }
        for &p in system.dm_pairs() {
            let bu = upper(&inv, p.upper);
            assert_eq!(
                system.pair_pseudocomplement(p, &caps).unwrap(),
                RoughPair::new(upper(&q, bu).complement(), bu.complement())
            );
        }
        let outcome = verify::check_one(&q, TheoremId::T9, &caps);
        assert_eq!(outcome.status, CheckStatus::Holds, "{:?}", outcome.detail);
    }
}

fn criterion_9_reproducibility() {
    let cfg = CampaignConfig {
        n_max: 4,
        samples_per_n: 150,
        seed: 424242,
        theorems: TheoremId::ALL.to_vec(),
        jobs: None,
    };
    let caps = Caps::default();
    let a = verify::run_campaign(&cfg, &caps).unwrap();
    let b = verify::run_campaign(&cfg, &caps).unwrap();
    let single = CampaignConfig {
        jobs: Some(1),
        ..cfg
    };
    let c = verify::run_campaign(&single, &caps).unwrap();
    assert!(a.all_hold);
    assert_eq!(a.digest, b.digest);
    assert_eq!(a.digest, c.digest);
}

type Criterion<'a> = (&'a str, Box<dyn Fn() + 'a>);

#[test]
fn acceptance() {
    let campaign: RefCell<Option<CampaignResult>> = RefCell::new(None);
    let criteria: Vec<Criterion> = vec![
        (
            "directed 3-element example: six rough pairs forming the 2 x 3 grid, clinker, regular double Stone",
            Box::new(criterion_1_directed_example),
        ),
        (
            "kernel example: kernel {3,4}, pseudocomplement {1,2}, both coordinate operations",
            Box::new(criterion_2_kernel_example),
        ),
        (
            "single-atom example: Stone but not regular, irreducibles not two-level",
            Box::new(criterion_3_single_atom_example),
        ),
        (
            "covering example: twelve rough pairs forming 2 x 2 x 3, rSt and clinker",
            Box::new(criterion_4_covering_example),
        ),
        (
            "theorem gate: T1-T10, exhaustive through size 3 plus 1000 samples each for sizes 4-6",
            Box::new(|| criterion_5_theorem_gate(&campaign)),
        ),
        (
            "oracle equivalence: completion and pseudocomplement formulas match brute force everywhere",
            Box::new(|| criterion_6_oracle_equivalence(&campaign)),
        ),
        (
            "law suite: zero violations, exhaustive through 12-element universes",
            Box::new(criterion_7_law_suite),
        ),
        (
            "quasiorder identities: short pseudocomplement forms on 204 random quasiorders up to size 7",
            Box::new(criterion_8_quasiorder_identities),
        ),
        (
            "reproducibility: seeded campaigns give identical digests across runs and thread counts",
            Box::new(criterion_9_reproducibility),
        ),
    ];

    let mut failed = Vec::new();
    for (i, (what, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(run)).is_ok();
        println!(
            "criterion {} {} [{} ms] {}",
            i + 1,
            if ok { "pass" } else { "FAIL" },
            start.elapsed().as_millis(),
            what
        );
        if !ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
