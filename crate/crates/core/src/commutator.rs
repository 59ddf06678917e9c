//! Commutator sets and subgroups: `γ_G(g)`, `[g,G]`, `[H,G]`, `G'`, and the
//! quotient-center subgroups `Z_g` and `Z_N`.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroup::{self, closure, Subgroup};

/// The set `γ_G(g) = {[g,x] : x ∈ G}`. Contains the identity (take `x = g`)
/// but is not a subgroup in general.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSet {
    base: usize,
    members: ElemSet,
}

impl GammaSet {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains the identity
    }

    /// True iff the set is closed under the group product, i.e. iff it is
    /// already the subgroup `[g,G]`.
    pub fn is_closed(&self, group: &GroupTable) -> bool {
        let elems: Vec<usize> = self.members.iter().collect();
        elems.iter().all(|&x| elems.iter().all(|&y| self.members.contains(group.mul(x, y))))
    }
}

/// Enumerates `γ_G(g) = {g⁻¹x⁻¹gx : x ∈ G}`.
pub fn gamma_set(group: &GroupTable, g: usize) -> GammaSet {
    let n = group.order();
    let mut members = ElemSet::empty(n);
    for x in 0..n {
        members.insert(group.commutator(g, x));
    }
    GammaSet { base: g, members }
}

/// The subgroup `[g,G]` generated by `γ_G(g)`.
///
/// `[g,G]` is always normal; that is re-verified here and a failure reports
/// an internal error since it can only mean an engine bug.
pub fn element_commutator_subgroup(group: &GroupTable, g: usize) -> Result<Subgroup> {
    let gamma = gamma_set(group, g);
    let members = closure(group, gamma.members.iter());
    let sub = Subgroup::from_members(group, members);
    if !subgroup::is_normal(group, &sub) {
        return Err(Error::Internal(format!("[g,G] for g = {g} is not normal")));
    }
    Ok(sub)
}

/// The subgroup `[H,G]` generated by all `[h,x]` with `h ∈ H`, `x ∈ G`.
pub fn subgroup_commutator(group: &GroupTable, sub: &Subgroup) -> Subgroup {
    let n = group.order();
    let mut seed = ElemSet::empty(n);
    for h in sub.iter() {
        for x in 0..n {
            seed.insert(group.commutator(h, x));
        }
    }
    Subgroup::from_members(group, closure(group, seed.iter()))
}

/// The derived subgroup `G' = [G,G]`, cross-checked against the closure of
/// the union of the `[g,G]` over class representatives.
pub fn derived_subgroup(group: &GroupTable) -> Subgroup {
    let n = group.order();
    let mut seed = ElemSet::empty(n);
    for g in 0..n {
        for x in 0..n {
            seed.insert(group.commutator(g, x));
        }
    }
    let derived = Subgroup::from_members(group, closure(group, seed.iter()));

    // G' is generated by the subgroups [g,G]; since [g,G] only depends on the
    // class of g it suffices to union over class representatives.
    let classes = crate::conjugacy::conjugacy_classes(group);
    let mut union = ElemSet::empty(n);
    for &rep in classes.reps() {
        let egs = element_commutator_subgroup(group, rep)
            .expect("[g,G] normality is structural");
        union.union_with(egs.members());
    }
    let via_union = closure(group, union.iter());
    assert!(
        via_union == *derived.members(),
        "derived subgroup disagrees with the union of element commutator subgroups"
    );
    derived
}

/// `Z_g`: the preimage in `G` of the center of `G/[g,G]`.
///
/// Computed twice — once through the quotient and once as
/// `{z : [z,G] ⊆ [g,G]}` — and the two routes must agree.
pub fn compute_zg(group: &GroupTable, g: usize) -> Result<Subgroup> {
    let ncg = element_commutator_subgroup(group, g)?;
    let via_quotient = compute_zn(group, &ncg)?;

    let n = group.order();
    let mut members = ElemSet::empty(n);
    for z in 0..n {
        if gamma_set(group, z).members().is_subset(ncg.members()) {
            members.insert(z);
        }
    }
    if members != *via_quotient.members() {
        return Err(Error::Internal(format!(
            "Z_g routes disagree for g = {g}: quotient preimage has order {}, \
             commutator containment has order {}",
            via_quotient.order(),
            members.len()
        )));
    }
    Ok(via_quotient)
}

/// `Z_N`: the preimage in `G` of the center of `G/N` for a normal `N`.
pub fn compute_zn(group: &GroupTable, normal: &Subgroup) -> Result<Subgroup> {
    let (q, proj) = subgroup::quotient(group, normal)?;
    let zq = subgroup::center(&q);
    let members = ElemSet::from_indices(
        group.order(),
        (0..group.order()).filter(|&x| zq.contains(proj[x])),
    );
    Ok(Subgroup::from_members(group, members))
}
