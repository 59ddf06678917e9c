//! Nested / GVZ classification by independent routes, with cross-checks.
//!
//! A group is *nested* when the centers Z(χ) of its irreducible characters
//! form a chain under inclusion, and a *GVZ-group* when
//! χ(1)² = |G : Z(χ)| for every irreducible χ. Each property is decided
//! twice:
//!
//! * nested — via the character centers, and via the chain condition on the
//!   commutator subgroups {[g,G]};
//! * GVZ — via the degree identity, and via closure of every commutator set
//!   γ_G(g);
//! * nested GVZ — via pairwise containment of the γ_G(g) sets, against the
//!   conjunction of the two verdicts above.
//!
//! The routes are theorems for nonabelian groups; [`analyze`] evaluates all
//! of them, the layer identities `[g,G] = [X_i,G]` (and, for nested
//! GVZ-groups, `cl_G(x) = x·[X_i,G]`), and the realization of every natural
//! `Z_N` as some `Z_g`. Any disagreement is surfaced in `cross_check` as a
//! distinguished failure, never swallowed.

use serde::Serialize;

use crate::chartab::{self, CharTable, CharTableOptions};
use crate::commutator::{self, compute_zg, compute_zn, gamma_set};
use crate::conjugacy::{conjugacy_classes, ConjClasses};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::group::{GroupTable, DEFAULT_SEED};
use crate::subgroup::Subgroup;

/// Chain verdict over a family of subgroups.
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub is_chain: bool,
    /// Distinct subgroups in strictly decreasing inclusion order (when
    /// `is_chain`).
    pub chain: Vec<Subgroup>,
    /// The smallest incomparable pair in sorted order (when not a chain).
    pub witness: Option<(Subgroup, Subgroup)>,
}

/// Deduplicates, sorts by descending order, and verifies that the subgroups
/// are totally ordered by inclusion.
pub fn check_chain(subs: &[Subgroup]) -> ChainReport {
    assert!(!subs.is_empty(), "check_chain needs at least one subgroup");
    let mut distinct: Vec<&Subgroup> = subs.iter().collect();
    distinct.sort_by(|a, b| {
        b.order().cmp(&a.order()).then_with(|| a.members().cmp(b.members()))
    });
    distinct.dedup_by(|a, b| a.members() == b.members());

    let is_chain = distinct.windows(2).all(|w| w[1].is_subset_of(w[0]));
    if is_chain {
        ChainReport {
            is_chain: true,
            chain: distinct.into_iter().cloned().collect(),
            witness: None,
        }
    } else {
        let witness = distinct
            .iter()
            .enumerate()
            .flat_map(|(i, a)| distinct[i + 1..].iter().map(move |b| (a, b)))
            .find(|(a, b)| !a.is_subset_of(b) && !b.is_subset_of(a))
            .map(|(a, b)| ((*a).clone(), (*b).clone()));
        ChainReport { is_chain: false, chain: Vec::new(), witness }
    }
}

/// Nested test through the character table: do the centers Z(χ) form a
/// chain? The chain returned is the chain of centers `G = X_0 > … > X_n`.
pub fn nested_via_characters(
    group: &GroupTable,
    table: &CharTable,
    tolerance: f64,
) -> Result<(bool, ChainReport)> {
    let egs = egs_by_class(group, table.classes())?;
    let centers = character_centers(group, table, tolerance, &egs)?;
    let report = check_chain(&centers);
    Ok((report.is_chain, report))
}

/// Nested test through conjugacy classes only: do the subgroups `[g,G]`
/// form a chain? The character table is never consulted.
///
/// Central elements contribute the trivial subgroup, which is comparable to
/// everything, so quantifying over all of `G` agrees with quantifying over
/// the noncentral elements.
pub fn nested_via_classes(group: &GroupTable) -> Result<(bool, ChainReport)> {
    let classes = conjugacy_classes(group);
    let egs = egs_by_class(group, &classes)?;
    let report = check_chain(&egs);
    Ok((report.is_chain, report))
}

/// GVZ test through the degree identity `χ(1)² = |G : Z(χ)|`, exact in
/// integers. Returns the lowest-index failing character as witness.
pub fn gvz_via_degrees(
    group: &GroupTable,
    table: &CharTable,
    tolerance: f64,
) -> Result<(bool, Option<DegreeWitness>)> {
    let egs = egs_by_class(group, table.classes())?;
    let centers = character_centers(group, table, tolerance, &egs)?;
    Ok(gvz_via_degrees_with(group, table, &centers))
}

fn gvz_via_degrees_with(
    group: &GroupTable,
    table: &CharTable,
    centers: &[Subgroup],
) -> (bool, Option<DegreeWitness>) {
    for (i, (chi, z)) in table.chars().iter().zip(centers).enumerate() {
        let d = chi.degree();
        if d * d * z.order() != group.order() {
            return (
                false,
                Some(DegreeWitness {
                    char_index: i,
                    degree: d,
                    center_order: z.order(),
                }),
            );
        }
    }
    (true, None)
}

/// GVZ test through commutator sets only: is every `γ_G(g)` closed under
/// the group product? Closure is invariant under conjugating `g`, so one
/// representative per class is checked; the witness is the smallest element
/// of any failing class.
pub fn gvz_via_gamma(group: &GroupTable) -> (bool, Option<usize>) {
    let classes = conjugacy_classes(group);
    let mut witness: Option<usize> = None;
    for &rep in classes.reps() {
        let gamma = gamma_set(group, rep);
        if !gamma.is_closed(group) {
            witness = Some(witness.map_or(rep, |w| w.min(rep)));
        }
    }
    (witness.is_none(), witness)
}

/// Nested-GVZ test in one step: are the sets `γ_G(g)` totally ordered by
/// inclusion over all pairs of elements? No closure is taken and the
/// character table is not consulted. The witness is the lexicographically
/// smallest incomparable element pair.
pub fn nested_gvz_via_containment(group: &GroupTable) -> (bool, Option<(usize, usize)>) {
    let n = group.order();
    let gammas: Vec<ElemSet> =
        (0..n).map(|g| gamma_set(group, g).members().clone()).collect();

    // Fast path: sort the distinct sets by size; distinct sets of equal size
    // are incomparable, and otherwise a chain is equivalent to consecutive
    // containment.
    let mut distinct: Vec<&ElemSet> = gammas.iter().collect();
    distinct.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    distinct.dedup();
    let chain = distinct.windows(2).all(|w| w[0].len() < w[1].len() && w[0].is_subset(w[1]));
    if chain {
        return (true, None);
    }
    for g in 0..n {
        for h in g + 1..n {
            if !gammas[g].is_subset(&gammas[h]) && !gammas[h].is_subset(&gammas[g]) {
                return (false, Some((g, h)));
            }
        }
    }
    unreachable!("containment failed without an incomparable pair");
}

/// Witness for a failed GVZ degree identity.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeWitness {
    pub char_index: usize,
    pub degree: usize,
    pub center_order: usize,
}

/// Per-layer outcome of the chain identities.
#[derive(Clone, Debug, Serialize)]
pub struct LayerDetail {
    pub index: usize,
    /// |X_i|
    pub center_order: usize,
    /// |[X_i,G]|
    pub commutator_order: usize,
    pub elements_checked: usize,
    /// `[g,G] = [X_i,G]` for every g in the layer.
    pub commutator_identity_ok: bool,
    /// `cl_G(x) = x·[X_i,G]` for every x in the layer; only checked for
    /// nested GVZ-groups.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_coset_ok: Option<bool>,
}

/// Outcome of [`verify_layer_identities`].
#[derive(Clone, Debug, Serialize)]
pub struct LayerChecks {
    pub applicable: bool,
    pub passed: bool,
    pub layers: Vec<LayerDetail>,
}

/// Verifies the layer identities along the chain of centers
/// `G = X_0 > … > X_n` (with the convention `X_{n+1} = 1`):
///
/// * for nested groups, `[g,G] = [X_i,G]` for every `g ∈ X_i ∖ X_{i+1}` and
///   `0 ≤ i ≤ n−1`;
/// * for nested GVZ-groups additionally `cl_G(x) = x·[X_i,G]` (and the
///   commutator identity) for every `0 ≤ i ≤ n`.
pub fn verify_layer_identities(
    group: &GroupTable,
    chain_of_centers: &ChainReport,
    nested_gvz: bool,
) -> Result<LayerChecks> {
    if !chain_of_centers.is_chain {
        return Ok(LayerChecks { applicable: false, passed: true, layers: Vec::new() });
    }
    let classes = conjugacy_classes(group);
    let egs = egs_by_class(group, &classes)?;
    let chain = &chain_of_centers.chain;
    let n_layers = if nested_gvz { chain.len() } else { chain.len().saturating_sub(1) };

    let trivial = Subgroup::trivial(group);
    let mut layers = Vec::new();
    let mut passed = true;
    for i in 0..n_layers {
        let xi = &chain[i];
        let next = chain.get(i + 1).unwrap_or(&trivial);
        let xi_commutator = commutator::subgroup_commutator(group, xi);
        let mut commutator_ok = true;
        let mut coset_ok = nested_gvz.then_some(true);
        let mut checked = 0;
        for g in xi.iter().filter(|&g| !next.contains(g)) {
            checked += 1;
            if egs[classes.class_of(g)].members() != xi_commutator.members() {
                commutator_ok = false;
            }
            if nested_gvz {
                let class = ElemSet::from_indices(
                    group.order(),
                    classes.class_members(classes.class_of(g)),
                );
                let coset = ElemSet::from_indices(
                    group.order(),
                    xi_commutator.iter().map(|h| group.mul(g, h)),
                );
                if class != coset {
                    coset_ok = Some(false);
                }
            }
        }
        passed &= commutator_ok && coset_ok.unwrap_or(true);
        layers.push(LayerDetail {
            index: i,
            center_order: xi.order(),
            commutator_order: xi_commutator.order(),
            elements_checked: checked,
            commutator_identity_ok: commutator_ok,
            class_coset_ok: coset_ok,
        });
    }
    Ok(LayerChecks { applicable: true, passed, layers })
}

/// Outcome of [`verify_zn_realized`].
#[derive(Clone, Debug, Serialize)]
pub struct ZnRealization {
    pub applicable: bool,
    pub passed: bool,
    /// Number of distinct normal subgroups N that were tested.
    pub normals_checked: usize,
    /// Whether the subgroups {Z_g} form a chain.
    pub zg_chain_ok: bool,
    /// Whether some element h has Z_h = G.
    pub full_group_realized: bool,
}

/// For a group whose `{[g,G]}` form a chain, verifies that every naturally
/// arising normal subgroup N — each `[g,G]`, each `ker(χ)`, plus any caller
/// supplied extras — satisfies `Z_N = Z_g` for some `g`, that `{Z_g}` is a
/// chain, and that some `Z_h` is the whole group.
pub fn verify_zn_realized(
    group: &GroupTable,
    table: &CharTable,
    tolerance: f64,
    extra_normals: &[Subgroup],
) -> Result<ZnRealization> {
    let classes = conjugacy_classes(group);
    let egs = egs_by_class(group, &classes)?;
    if !check_chain(&egs).is_chain {
        return Ok(ZnRealization {
            applicable: false,
            passed: true,
            normals_checked: 0,
            zg_chain_ok: true,
            full_group_realized: false,
        });
    }

    // Z_g only depends on the class of g.
    let zgs: Vec<Subgroup> = classes
        .reps()
        .iter()
        .map(|&rep| compute_zg(group, rep))
        .collect::<Result<_>>()?;
    let zg_chain_ok = check_chain(&zgs).is_chain;
    let full_group_realized = zgs.iter().any(|z| z.order() == group.order());

    let mut normals: Vec<Subgroup> = egs.clone();
    for chi in table.chars() {
        normals.push(chartab::char_kernel(group, table, chi, tolerance)?);
    }
    normals.extend(extra_normals.iter().cloned());
    normals.sort_by(|a, b| a.members().cmp(b.members()));
    normals.dedup_by(|a, b| a.members() == b.members());

    let mut passed = zg_chain_ok && full_group_realized;
    for n in &normals {
        let zn = compute_zn(group, n)?;
        if !zgs.iter().any(|zg| zg.members() == zn.members()) {
            passed = false;
        }
    }
    Ok(ZnRealization {
        applicable: true,
        passed,
        normals_checked: normals.len(),
        zg_chain_ok,
        full_group_realized,
    })
}

/// `[g,G]` for one representative of every conjugacy class ([g,G] only
/// depends on the class of g).
fn egs_by_class(group: &GroupTable, classes: &ConjClasses) -> Result<Vec<Subgroup>> {
    classes
        .reps()
        .iter()
        .map(|&rep| commutator::element_commutator_subgroup(group, rep))
        .collect()
}

/// Z(χ) for every character, in table order. Each computation internally
/// cross-checks the modulus route against the exact commutator route.
fn character_centers(
    group: &GroupTable,
    table: &CharTable,
    tolerance: f64,
    egs: &[Subgroup],
) -> Result<Vec<Subgroup>> {
    table
        .chars()
        .iter()
        .map(|chi| chartab::char_center_with_egs(group, table, chi, tolerance, egs))
        .collect()
}

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

/// Options for [`analyze`].
#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub tolerance: f64,
    /// Include full membership lists in subgroup summaries.
    pub verbose: bool,
    /// Label echoed into the report (group expression or input path).
    pub label: String,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            seed: DEFAULT_SEED,
            tolerance: 1e-6,
            verbose: false,
            label: String::new(),
        }
    }
}

/// A subgroup rendered for reports: order and generator witnesses, plus the
/// full member list when verbose output is requested.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupSummary {
    pub order: usize,
    pub generators: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<usize>>,
}

impl SubgroupSummary {
    fn new(sub: &Subgroup, verbose: bool) -> Self {
        SubgroupSummary {
            order: sub.order(),
            generators: sub.generators().to_vec(),
            members: verbose.then(|| sub.members().to_vec()),
        }
    }
}

/// Serialized form of a [`ChainReport`].
#[derive(Clone, Debug, Serialize)]
pub struct ChainSummary {
    pub is_chain: bool,
    pub chain: Vec<SubgroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[SubgroupSummary; 2]>,
}

impl ChainSummary {
    fn new(report: &ChainReport, verbose: bool) -> Self {
        ChainSummary {
            is_chain: report.is_chain,
            chain: report.chain.iter().map(|s| SubgroupSummary::new(s, verbose)).collect(),
            witness: report.witness.as_ref().map(|(a, b)| {
                [SubgroupSummary::new(a, verbose), SubgroupSummary::new(b, verbose)]
            }),
        }
    }
}

/// A verdict whose witness is a pair of subgroups.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupPairVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[SubgroupSummary; 2]>,
}

/// A verdict whose witness is a character.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DegreeWitness>,
}

/// A verdict whose witness is a single element.
#[derive(Clone, Debug, Serialize)]
pub struct ElementVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

/// A verdict whose witness is a pair of elements.
#[derive(Clone, Debug, Serialize)]
pub struct ElementPairVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 2]>,
}

/// Everything [`analyze`] decides about one group.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: usize,
    pub is_abelian: bool,
    pub character_degrees: Vec<usize>,
    pub nested_via_characters: SubgroupPairVerdict,
    pub nested_via_classes: SubgroupPairVerdict,
    pub gvz_via_degrees: DegreeVerdict,
    pub gvz_via_gamma_subgroup: ElementVerdict,
    pub nested_gvz_via_containment: ElementPairVerdict,
    pub chain_of_centers: ChainSummary,
    pub commutator_chain: ChainSummary,
    pub layer_checks: LayerChecks,
    pub zn_realization: ZnRealization,
    /// "OK", or a description of which routes disagreed.
    pub cross_check: String,
}

impl AnalysisReport {
    pub fn is_nested(&self) -> bool {
        self.nested_via_characters.holds
    }

    pub fn is_gvz(&self) -> bool {
        self.gvz_via_degrees.holds
    }

    pub fn is_nested_gvz(&self) -> bool {
        self.nested_gvz_via_containment.holds
    }

    pub fn cross_check_ok(&self) -> bool {
        self.cross_check == "OK"
    }
}

/// Runs every classification route and consistency check on one group.
///
/// The cross-check demands: the two nested routes agree, the two GVZ routes
/// agree, the containment route equals (nested AND GVZ), the layer
/// identities hold, and every natural Z_N is realized as some Z_g. For
/// abelian groups every verdict holds vacuously and `is_abelian` flags that
/// the theorems' nonabelian hypothesis is not met.
pub fn analyze(group: &GroupTable, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let classes = conjugacy_classes(group);
    let is_abelian = group.is_abelian();

    let char_opts = CharTableOptions {
        seed: opts.seed,
        tolerance: opts.tolerance,
        ..CharTableOptions::default()
    };
    let table = chartab::character_table_for(group, classes.clone(), &char_opts)?;

    let egs = egs_by_class(group, &classes)?;
    let centers = character_centers(group, &table, opts.tolerance, &egs)?;

    let centers_chain = check_chain(&centers);
    let nested_chars = centers_chain.is_chain;

    let egs_chain = check_chain(&egs);
    let nested_classes = egs_chain.is_chain;

    let (gvz_degrees, degree_witness) = gvz_via_degrees_with(group, &table, &centers);
    let (gvz_gamma, gamma_witness) = gvz_via_gamma(group);
    let (ngvz, containment_witness) = nested_gvz_via_containment(group);

    let layer_checks = verify_layer_identities(group, &centers_chain, ngvz)?;
    let zn_realization = verify_zn_realized(group, &table, opts.tolerance, &[])?;

    let mut mismatches: Vec<String> = Vec::new();
    if nested_chars != nested_classes {
        mismatches.push(format!(
            "nested routes disagree: characters say {nested_chars}, classes say {nested_classes}"
        ));
    }
    if gvz_degrees != gvz_gamma {
        mismatches.push(format!(
            "GVZ routes disagree: degrees say {gvz_degrees}, gamma sets say {gvz_gamma}"
        ));
    }
    if ngvz != (nested_chars && gvz_degrees) {
        mismatches.push(format!(
            "containment route says nested GVZ = {ngvz}, \
             conjunction of verdicts says {}",
            nested_chars && gvz_degrees
        ));
    }
    if layer_checks.applicable && !layer_checks.passed {
        mismatches.push("layer identities failed".into());
    }
    if zn_realization.applicable && !zn_realization.passed {
        mismatches.push("Z_N realization failed".into());
    }
    let cross_check = if mismatches.is_empty() {
        "OK".to_string()
    } else {
        format!("mismatch: {}", mismatches.join("; "))
    };

    let v = opts.verbose;
    Ok(AnalysisReport {
        group: opts.label.clone(),
        order: group.order(),
        is_abelian,
        character_degrees: table.degrees(),
        nested_via_characters: SubgroupPairVerdict {
            holds: nested_chars,
            witness: centers_chain.witness.as_ref().map(|(a, b)| {
                [SubgroupSummary::new(a, v), SubgroupSummary::new(b, v)]
            }),
        },
        nested_via_classes: SubgroupPairVerdict {
            holds: nested_classes,
            witness: egs_chain.witness.as_ref().map(|(a, b)| {
                [SubgroupSummary::new(a, v), SubgroupSummary::new(b, v)]
            }),
        },
        gvz_via_degrees: DegreeVerdict { holds: gvz_degrees, witness: degree_witness },
        gvz_via_gamma_subgroup: ElementVerdict { holds: gvz_gamma, witness: gamma_witness },
        nested_gvz_via_containment: ElementPairVerdict {
            holds: ngvz,
            witness: containment_witness.map(|(a, b)| [a, b]),
        },
        chain_of_centers: ChainSummary::new(&centers_chain, v),
        commutator_chain: ChainSummary::new(&egs_chain, v),
        layer_checks,
        zn_realization,
        cross_check,
    })
}

/// Convenience: analyze with a label and otherwise default options.
pub fn analyze_labeled(group: &GroupTable, label: &str) -> Result<AnalysisReport> {
    analyze(group, &AnalyzeOptions { label: label.to_string(), ..Default::default() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup;
    use crate::testutil::{d8, heisenberg_oracle, q8, s3, s4};

    fn product(a: &GroupTable, b: &GroupTable) -> GroupTable {
        let (na, nb) = (a.order(), b.order());
        GroupTable::from_fn_trusted(
            na * nb,
            |x, y| {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                a.mul(xa, ya) * nb + b.mul(xb, yb)
            },
            None,
        )
    }

    #[test]
    fn chain_of_center_and_group() {
        let g = q8();
        let report = check_chain(&[Subgroup::whole(&g), subgroup::center(&g)]);
        assert!(report.is_chain);
        assert_eq!(report.chain.len(), 2);
        assert_eq!(report.chain[0].order(), 8);
        assert_eq!(report.chain[1].order(), 2);
    }

    #[test]
    fn chain_detects_incomparable_pair() {
        let ss = product(&s3(), &s3());
        // A3 x 1 and 1 x A3 inside S3 x S3
        let a3_left = subgroup::subgroup_closure(&ss, &[1 * 6]);
        let a3_right = subgroup::subgroup_closure(&ss, &[1]);
        assert_eq!(a3_left.order(), 3);
        assert_eq!(a3_right.order(), 3);
        let report = check_chain(&[a3_left, a3_right]);
        assert!(!report.is_chain);
        let (a, b) = report.witness.as_ref().unwrap();
        assert!(!a.is_subset_of(b) && !b.is_subset_of(a));
    }

    #[test]
    fn s3_is_nested_with_chain_g_1() {
        let g = s3();
        let report = analyze_labeled(&g, "S3").unwrap();
        assert!(report.is_nested());
        assert!(!report.is_gvz());
        assert!(!report.is_nested_gvz());
        assert!(report.cross_check_ok());
        let orders: Vec<usize> =
            report.chain_of_centers.chain.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![6, 1]);
    }

    #[test]
    fn s4_chain_is_g_v4_1() {
        let report = analyze_labeled(&s4(), "S4").unwrap();
        assert!(report.is_nested() && !report.is_gvz());
        assert!(report.cross_check_ok());
        let orders: Vec<usize> =
            report.chain_of_centers.chain.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![24, 4, 1]);
        // commutator chain A4 > V4 > 1
        let corders: Vec<usize> =
            report.commutator_chain.chain.iter().map(|s| s.order).collect();
        assert_eq!(corders, vec![12, 4, 1]);
    }

    #[test]
    fn d8_and_q8_are_nested_gvz() {
        for (g, name) in [(d8(), "D8"), (q8(), "Q8")] {
            let report = analyze_labeled(&g, name).unwrap();
            assert!(report.is_nested(), "{name} nested");
            assert!(report.is_gvz(), "{name} gvz");
            assert!(report.is_nested_gvz(), "{name} nested gvz");
            assert!(report.cross_check_ok(), "{name} cross check");
            assert!(report.layer_checks.applicable && report.layer_checks.passed);
        }
    }

    #[test]
    fn heisenberg_27_is_nested_gvz() {
        let report = analyze_labeled(&heisenberg_oracle(3), "Heis3").unwrap();
        assert!(report.is_nested_gvz());
        assert!(report.cross_check_ok());
        // noncentral classes have size 3 = |G'| and cl(x) = x G'
        assert!(report.layer_checks.passed);
    }

    #[test]
    fn s3_times_s3_is_not_nested() {
        let ss = product(&s3(), &s3());
        let report = analyze_labeled(&ss, "S3xS3").unwrap();
        assert!(!report.is_nested());
        assert!(!report.nested_via_classes.holds);
        assert!(!report.is_nested_gvz());
        assert!(report.cross_check_ok());
        assert!(report.nested_via_characters.witness.is_some());
        assert!(!report.chain_of_centers.is_chain);
    }

    #[test]
    fn abelian_group_is_vacuously_everything() {
        let c12 = GroupTable::from_fn_trusted(12, |a, b| (a + b) % 12, None);
        let report = analyze_labeled(&c12, "C12").unwrap();
        assert!(report.is_abelian);
        assert!(report.is_nested() && report.is_gvz() && report.is_nested_gvz());
        assert!(report.cross_check_ok());
    }

    #[test]
    fn gvz_gamma_witness_on_s3() {
        let (holds, witness) = gvz_via_gamma(&s3());
        assert!(!holds);
        // the smallest failing element is the first 3-cycle
        let w = witness.unwrap();
        assert_eq!(s3().element_order(w), 3);
    }

    #[test]
    fn containment_witness_on_s3() {
        let (holds, witness) = nested_gvz_via_containment(&s3());
        assert!(!holds);
        let (g, h) = witness.unwrap();
        assert!(g < h);
        let gg = gamma_set(&s3(), g);
        let gh = gamma_set(&s3(), h);
        assert!(!gg.members().is_subset(gh.members()));
        assert!(!gh.members().is_subset(gg.members()));
    }

    #[test]
    fn q8_containment_holds() {
        let (holds, _) = nested_gvz_via_containment(&q8());
        assert!(holds);
        let (holds, _) = nested_gvz_via_containment(&heisenberg_oracle(3));
        assert!(holds);
    }

    #[test]
    fn layer_identities_on_s4() {
        let g = s4();
        let t = chartab::character_table(&g).unwrap();
        let (nested, chain) = nested_via_characters(&g, &t, 1e-6).unwrap();
        assert!(nested);
        let checks = verify_layer_identities(&g, &chain, false).unwrap();
        assert!(checks.applicable && checks.passed);
        // two layers checked (i = 0 and i = 1), each with the commutator identity
        assert_eq!(checks.layers.len(), 2);
        assert_eq!(checks.layers[0].commutator_order, 12); // [S4,S4] = A4
        assert_eq!(checks.layers[1].commutator_order, 4); // [V4,S4] = V4
    }

    #[test]
    fn zn_realization_on_nested_groups() {
        for g in [s3(), s4(), d8(), q8(), heisenberg_oracle(3)] {
            let t = chartab::character_table(&g).unwrap();
            let z = verify_zn_realized(&g, &t, 1e-6, &[]).unwrap();
            assert!(z.applicable);
            assert!(z.passed, "Z_N realization failed on order {}", g.order());
            assert!(z.full_group_realized);
            assert!(z.zg_chain_ok);
        }
    }

    #[test]
    fn zn_realization_accepts_extra_normals() {
        let g = q8();
        let t = chartab::character_table(&g).unwrap();
        let extra = vec![Subgroup::whole(&g), Subgroup::trivial(&g)];
        let z = verify_zn_realized(&g, &t, 1e-6, &extra).unwrap();
        assert!(z.passed);
    }

    #[test]
    fn product_of_nonabelian_groups_is_never_nested() {
        let dq = product(&d8(), &q8());
        let report = analyze_labeled(&dq, "D8xQ8").unwrap();
        assert_eq!(report.order, 64);
        assert!(!report.is_nested());
        assert!(report.cross_check_ok());
    }
}
