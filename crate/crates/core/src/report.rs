//! Full analysis of one relation, plus text and DOT renderings.

use crate::approx::{law_suite, LawSuiteReport};
use crate::conditions::{self, ConditionReport, ConditionWitness};
use crate::families::{format_set, FamilyKind};
use crate::lattice::{AlgebraReport, Flag};
use crate::relation::{BinaryRelation, RelationClassification, RelationDoc, Subset};
use crate::roughset::RoughSetSystem;
use crate::verify::CampaignResult;
use crate::{Caps, Result};
use serde::Serialize;
use std::fmt::Write as _;

/// Summary of one generated set family.
#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub kind: &'static str,
    pub size: usize,
    pub distributive: bool,
    /// All members, formatted one-based; omitted for large families.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<String>>,
    pub atoms: Vec<String>,
    pub join_irreducibles: Vec<String>,
}

/// Everything the analyzer computes for one relation.
#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub relation: RelationDoc,
    pub class: RelationClassification,
    pub class_name: &'static str,
    /// Elements related only to themselves (zero-based).
    pub singleton_rows: Vec<usize>,
    pub laws: LawSuiteReport,
    pub families: Vec<FamilySummary>,
    /// Number of distinct rough pairs, when the power set was enumerable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rough_pairs: Option<usize>,
    pub completion_size: usize,
    /// Whether the rough pairs already form the whole completion.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rough_pairs_complete: Option<bool>,
    pub completion: AlgebraReport,
    /// Chain decomposition of the completion, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completion_chain_product: Option<Vec<usize>>,
    pub conditions: Vec<ConditionReport>,
}

const MAX_LISTED_MEMBERS: usize = 64;

fn family_summary(system: &RoughSetSystem, kind: FamilyKind, caps: &Caps) -> Result<FamilySummary> {
    let family = system.family(kind);
    let members = if family.len() <= MAX_LISTED_MEMBERS {
        Some(
            family
                .members()
                .iter()
                .map(|&m| format_set(m, true))
                .collect(),
        )
    } else {
        None
    };
    let irreducibles = if family.kind().is_union_closed() {
        family
            .cji_members()?
            .iter()
            .map(|&m| format_set(m, true))
            .collect()
    } else {
        // Meet-irreducibles of an intersection-closed family are the
        // complements of the dual family's join-irreducibles; listing the
        // join-irreducible members would be meaningless here.
        Vec::new()
    };
    let atoms = if family.kind().is_union_closed() {
        family
            .atom_members()
            .iter()
            .map(|&m| format_set(m, true))
            .collect()
    } else {
        Vec::new()
    };
    Ok(FamilySummary {
        kind: family.kind().name(),
        size: family.len(),
        distributive: family.is_distributive(caps)?,
        members,
        atoms,
        join_irreducibles: irreducibles,
    })
}

/// Analyzes a reflexive relation, returning the report together with the
/// underlying system (for DOT output or further queries).
pub fn analyze_with_system(
    r: &BinaryRelation,
    caps: &Caps,
) -> Result<(AnalysisReport, RoughSetSystem)> {
    let system = RoughSetSystem::build(r, caps)?;
    let class = r.classify();
    let class_name = class.class_name();
    let families = vec![
        family_summary(&system, FamilyKind::Upper, caps)?,
        family_summary(&system, FamilyKind::Lower, caps)?,
        family_summary(&system, FamilyKind::InvUpper, caps)?,
        family_summary(&system, FamilyKind::InvLower, caps)?,
    ];
    let completion = system.dm_lattice().classify();
    let report = AnalysisReport {
        relation: RelationDoc::from_relation(r),
        class,
        class_name,
        singleton_rows: system.singletons().indices(),
        laws: law_suite(r),
        families,
        rough_pairs: system.rs_pairs().map(|rs| rs.len()),
        completion_size: system.dm_pairs().len(),
        rough_pairs_complete: system.rs_is_complete(),
        completion,
        completion_chain_product: system.dm_lattice().as_chain_product(caps),
        conditions: conditions::check_all(r, caps)?,
    };
    Ok((report, system))
}

/// Analyzes a reflexive relation.
pub fn analyze(r: &BinaryRelation, caps: &Caps) -> Result<AnalysisReport> {
    analyze_with_system(r, caps).map(|(report, _)| report)
}

fn flag_text(f: &Flag) -> String {
    if f.holds {
        "yes".to_string()
    } else {
        match &f.witness {
            Some(w) => format!("no ({w})"),
            None => "no".to_string(),
        }
    }
}

fn witness_text(w: &ConditionWitness) -> String {
    match *w {
        ConditionWitness::MeetlessTriple { x, y, p } => {
            format!("x={}, y={}, p={}", x + 1, y + 1, p + 1)
        }
        ConditionWitness::AtomCount { p, count } => {
            format!("p={} includes {} atoms", p + 1, count)
        }
        ConditionWitness::RowNotAtom { x } => format!("row of {} is not an atom", x + 1),
        ConditionWitness::EmptyCore { x } => format!("inverse core of {} is empty", x + 1),
        ConditionWitness::Uncovered { element } => format!("{} is not covered", element + 1),
        ConditionWitness::RedundantRow { x } => format!("row of {} is redundant", x + 1),
    }
}

/// Plain-text rendering of an analysis report. Sets and elements are
/// one-based here; the JSON form stays zero-based.
pub fn render_text(rep: &AnalysisReport) -> String {
    let mut s = String::new();
    let pairs: usize = rep.relation.neighborhoods.iter().map(Vec::len).sum();
    let _ = writeln!(s, "universe size        {}", rep.relation.universe_size);
    let _ = writeln!(s, "relation class       {}", rep.class_name);
    let _ = writeln!(s, "pairs                {pairs}");
    if !rep.singleton_rows.is_empty() {
        let list: Vec<String> = rep.singleton_rows.iter().map(|x| (x + 1).to_string()).collect();
        let _ = writeln!(s, "singleton rows       {}", list.join(", "));
    }
    let law_line = if rep.laws.all_hold() {
        format!(
            "all hold over {} subsets{}",
            rep.laws.sample_size,
            if rep.laws.exhaustive { " (exhaustive)" } else { "" }
        )
    } else {
        let ids: Vec<&str> = rep.laws.violations().iter().map(|l| l.id.as_str()).collect();
        format!("VIOLATED: {}", ids.join(", "))
    };
    let _ = writeln!(s, "approximation laws   {law_line}");

    for fam in &rep.families {
        let _ = writeln!(
            s,
            "{:32} {} members, {}",
            fam.kind,
            fam.size,
            if fam.distributive { "distributive" } else { "not distributive" }
        );
        if let Some(members) = &fam.members {
            let _ = writeln!(s, "    members          {}", members.join(" "));
        }
        if !fam.atoms.is_empty() {
            let _ = writeln!(s, "    atoms            {}", fam.atoms.join(" "));
        }
        if !fam.join_irreducibles.is_empty() {
            let _ = writeln!(s, "    irreducibles     {}", fam.join_irreducibles.join(" "));
        }
    }

    if let Some(rs) = rep.rough_pairs {
        let _ = writeln!(s, "rough pairs          {rs}");
    }
    let _ = writeln!(s, "completion size      {}", rep.completion_size);
    match rep.rough_pairs_complete {
        Some(true) => {
            let _ = writeln!(s, "                     the rough pairs already form the completion");
        }
        Some(false) => {
            let _ = writeln!(
                s,
                "                     the completion adds {} elements",
                rep.completion_size - rep.rough_pairs.unwrap_or(0)
            );
        }
        None => {}
    }

    let c = &rep.completion;
    let _ = writeln!(s, "completion algebra   height {}", c.height);
    let rows = [
        ("distributive", &c.distributive),
        ("pseudocomplemented", &c.pseudocomplemented),
        ("dual pseudocomplemented", &c.dual_pseudocomplemented),
        ("Stone", &c.stone),
        ("dual Stone", &c.dual_stone),
        ("double Stone", &c.double_stone),
        ("regular", &c.regular),
        ("Boolean", &c.boolean),
        ("atomistic", &c.atomistic),
        ("two-level irreducibles", &c.two_levels),
    ];
    for (name, flag) in rows {
        let _ = writeln!(s, "    {:24} {}", name, flag_text(flag));
    }
    if let Some(dm) = &c.de_morgan {
        let _ = writeln!(s, "    {:24} {}", "De Morgan", flag_text(dm));
    }
    if let Some(k) = &c.kleene {
        let _ = writeln!(s, "    {:24} {}", "Kleene", flag_text(k));
    }
    let _ = writeln!(s, "    {:24} {}", "atoms", c.atoms.join(" "));
    let _ = writeln!(s, "    {:24} {}", "join-irreducibles", c.join_irreducibles.join(" "));
    if let Some(dims) = &rep.completion_chain_product {
        let dims: Vec<String> = dims.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "    {:24} {}", "product of chains", dims.join(" x "));
    }

    let _ = writeln!(s, "conditions");
    for cond in &rep.conditions {
        match &cond.witness {
            None => {
                let _ = writeln!(s, "    {:8} holds", cond.name);
            }
            Some(w) => {
                let _ = writeln!(s, "    {:8} fails ({})", cond.name, witness_text(w));
            }
        }
    }
    s
}

/// A set as a compact element sequence: `13` for `{1,3}`, `∅` when empty.
/// Elements of two or more digits are separated by commas to stay readable.
fn compact_set(s: Subset, one_based: bool) -> String {
    if s.is_empty() {
        return "∅".to_string();
    }
    let shift = usize::from(one_based);
    let parts: Vec<String> = s.iter().map(|x| (x + shift).to_string()).collect();
    if parts.iter().all(|p| p.len() == 1) {
        parts.concat()
    } else {
        parts.join(",")
    }
}

/// Graphviz rendering of the completion's cover relation, bottom at the
/// bottom. Nodes are labeled `(A,B)` with each set written as a compact
/// element sequence.
pub fn render_dot(system: &RoughSetSystem, one_based: bool) -> String {
    let dm = system.dm_lattice();
    let mut s = String::new();
    s.push_str("digraph completion {\n");
    s.push_str("  rankdir=BT;\n");
    s.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
    for (i, p) in system.dm_pairs().iter().enumerate() {
        let _ = writeln!(
            s,
            "  n{} [label=\"({},{})\"];",
            i,
            compact_set(p.lower, one_based),
            compact_set(p.upper, one_based)
        );
    }
    for (a, b) in dm.covers_list() {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}

/// Plain-text rendering of a campaign result.
pub fn render_campaign(c: &CampaignResult) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "checked {} relations: exhaustive through size {}, {} samples per size up to {}, seed {}",
        c.total_relations, c.exhaustive_max, c.samples_per_n, c.n_max, c.seed
    );
    for t in &c.theorems {
        let _ = writeln!(
            s,
            "{:4} checked {:6}   hypothesis met {:6}   failures {:4}   {}",
            t.theorem, t.checked, t.hypothesis_met, t.failures_total, t.statement
        );
        for (note, count) in &t.notes {
            let _ = writeln!(s, "         note: {note} ({count})");
        }
        for f in t.failures.iter().take(3) {
            let _ = writeln!(s, "         failure: {} on {}", f.detail, f.relation);
        }
    }
    let _ = writeln!(s, "digest {}", c.digest);
    let _ = writeln!(s, "duration {} ms", c.duration_ms);
    let _ = writeln!(
        s,
        "{}",
        if c.all_hold {
            "all statements hold"
        } else {
            "FAILURES PRESENT"
        }
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::tests::{cov4, ker4};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn the_covering_example_report_renders_all_sections() {
        let (rep, system) = analyze_with_system(&cov4(), &caps()).unwrap();
        let text = render_text(&rep);
        assert!(text.contains("relation class       reflexive"));
        assert!(text.contains("rough pairs          12"));
        assert!(text.contains("the rough pairs already form the completion"));
        assert!(text.contains("product of chains        2 x 2 x 3"));
        assert!(text.contains("rSt      holds"));
        assert!(text.contains("singleton rows       3, 4"));

        let dot = render_dot(&system, true);
        assert!(dot.starts_with("digraph completion {"));
        assert!(dot.contains("label=\"(∅,∅)\""));
        assert!(dot.contains("label=\"(1234,1234)\""));
        assert!(dot.matches(" -> ").count() >= rep.completion_size - 1);

        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"completion_chain_product\":[2,2,3]"));
        assert!(json.contains("\"class_name\":\"reflexive\""));
    }

    #[test]
    fn compact_labels_concatenate_digits_and_separate_wide_elements() {
        let s = Subset::from_bits(4, 0b0101);
        assert_eq!(compact_set(s, true), "13");
        assert_eq!(compact_set(s, false), "02");
        assert_eq!(compact_set(Subset::empty(4), true), "∅");
        let wide = Subset::from_bits(12, (1 << 0) | (1 << 9));
        assert_eq!(compact_set(wide, true), "1,10");
    }

    #[test]
    fn failing_conditions_render_one_based_witnesses() {
        let rep = analyze(&ker4(), &caps()).unwrap();
        let text = render_text(&rep);
        assert!(text.contains("St1      fails (x=2, y=4, p=1)"));
        assert!(text.contains("St1\u{b0}     fails (p=1 includes 2 atoms)"));
        assert!(rep.laws.all_hold());
    }
}
