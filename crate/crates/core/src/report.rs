//! Human-readable and JSON renderings of analysis results.

use serde::Serialize;

use crate::analysis::{AnalysisReport, ChainSummary, SubgroupSummary};
use crate::chartab::CharTable;
use crate::group::GroupTable;

/// Formats a subgroup as `order k ⟨gens⟩`, using element names when the
/// group carries them.
fn subgroup_text(s: &SubgroupSummary, group: Option<&GroupTable>) -> String {
    if s.generators.is_empty() {
        return format!("order {} (trivial)", s.order);
    }
    let gens: Vec<String> = s
        .generators
        .iter()
        .map(|&g| match group {
            Some(gt) if gt.has_element_names() => format!("{g}:{}", gt.element_name(g)),
            _ => g.to_string(),
        })
        .collect();
    format!("order {} ⟨{}⟩", s.order, gens.join(", "))
}

fn chain_text(c: &ChainSummary, group: Option<&GroupTable>) -> String {
    if c.is_chain {
        let parts: Vec<String> =
            c.chain.iter().map(|s| subgroup_text(s, group)).collect();
        parts.join("  >  ")
    } else if let Some([a, b]) = &c.witness {
        format!(
            "not a chain; incomparable pair: {} | {}",
            subgroup_text(a, group),
            subgroup_text(b, group)
        )
    } else {
        "not a chain".to_string()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Renders an [`AnalysisReport`] as a human-readable summary. The group is
/// optional and only supplies element names for witnesses.
pub fn render_analysis_text(report: &AnalysisReport, group: Option<&GroupTable>) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    if !report.group.is_empty() {
        line(format!("group: {}", report.group));
    }
    line(format!("order: {}", report.order));
    line(format!("abelian: {}{}", yes_no(report.is_abelian),
        if report.is_abelian { " (theorem checks hold vacuously)" } else { "" }));
    line(format!("character degrees: {:?}", report.character_degrees));
    line(format!(
        "nested via characters: {}",
        yes_no(report.nested_via_characters.holds)
    ));
    line(format!(
        "nested via classes:    {}",
        yes_no(report.nested_via_classes.holds)
    ));
    line(format!(
        "GVZ via degrees:       {}{}",
        yes_no(report.gvz_via_degrees.holds),
        report
            .gvz_via_degrees
            .witness
            .as_ref()
            .map(|w| format!(
                "  (witness: character #{} of degree {}, center order {})",
                w.char_index, w.degree, w.center_order
            ))
            .unwrap_or_default()
    ));
    line(format!(
        "GVZ via gamma sets:    {}{}",
        yes_no(report.gvz_via_gamma_subgroup.holds),
        report
            .gvz_via_gamma_subgroup
            .witness
            .map(|g| format!("  (witness: element {g})"))
            .unwrap_or_default()
    ));
    line(format!(
        "nested GVZ (containment): {}{}",
        yes_no(report.nested_gvz_via_containment.holds),
        report
            .nested_gvz_via_containment
            .witness
            .map(|[g, h]| format!("  (witness: elements {g}, {h})"))
            .unwrap_or_default()
    ));
    line(format!(
        "chain of centers:  {}",
        chain_text(&report.chain_of_centers, group)
    ));
    line(format!(
        "commutator chain:  {}",
        chain_text(&report.commutator_chain, group)
    ));
    if report.layer_checks.applicable {
        line(format!(
            "layer identities:  {} ({} layer{})",
            if report.layer_checks.passed { "pass" } else { "FAIL" },
            report.layer_checks.layers.len(),
            if report.layer_checks.layers.len() == 1 { "" } else { "s" }
        ));
    } else {
        line("layer identities:  not applicable (not nested)".to_string());
    }
    if report.zn_realization.applicable {
        line(format!(
            "Z_N realization:   {} ({} normal subgroups checked)",
            if report.zn_realization.passed { "pass" } else { "FAIL" },
            report.zn_realization.normals_checked
        ));
    } else {
        line("Z_N realization:   not applicable (not nested)".to_string());
    }
    line(format!("cross-check: {}", report.cross_check));
    out
}

/// Character-table dump: degrees, class data, and per-character `[re, im]`
/// pairs rounded to 10 decimal places.
#[derive(Debug, Clone, Serialize)]
pub struct CharTableDump {
    pub order: usize,
    pub num_classes: usize,
    pub class_sizes: Vec<usize>,
    pub class_reps: Vec<usize>,
    pub degrees: Vec<usize>,
    pub characters: Vec<Vec<[f64; 2]>>,
}

fn round10(x: f64) -> f64 {
    let r = (x * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0 // normalize -0.0
    } else {
        r
    }
}

pub fn chartable_dump(table: &CharTable) -> CharTableDump {
    CharTableDump {
        order: table.group_order(),
        num_classes: table.classes().count(),
        class_sizes: table.classes().sizes().to_vec(),
        class_reps: table.classes().reps().to_vec(),
        degrees: table.degrees(),
        characters: table
            .chars()
            .iter()
            .map(|c| c.values().iter().map(|v| [round10(v.re), round10(v.im)]).collect())
            .collect(),
    }
}

/// Plain-text character table with one row per character.
pub fn render_chartable_text(table: &CharTable) -> String {
    let dump = chartable_dump(table);
    let mut out = String::new();
    out.push_str(&format!(
        "order {}, {} conjugacy classes\n",
        dump.order, dump.num_classes
    ));
    out.push_str(&format!("class sizes: {:?}\n", dump.class_sizes));
    out.push_str(&format!("class reps:  {:?}\n", dump.class_reps));
    for (i, (deg, values)) in dump.degrees.iter().zip(&dump.characters).enumerate() {
        let cells: Vec<String> = values.iter().map(|[re, im]| fmt_complex(*re, *im)).collect();
        out.push_str(&format!("chi_{i} (degree {deg}): {}\n", cells.join("  ")));
    }
    out
}

fn fmt_complex(re: f64, im: f64) -> String {
    let fmt = |x: f64| {
        let s = format!("{x:.6}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s.is_empty() || s == "-" {
            "0".to_string()
        } else {
            s.to_string()
        }
    };
    if im.abs() < 5e-7 {
        fmt(re)
    } else if re.abs() < 5e-7 {
        format!("{}i", fmt(im))
    } else if im > 0.0 {
        format!("{}+{}i", fmt(re), fmt(im))
    } else {
        format!("{}-{}i", fmt(re), fmt(-im))
    }
}
