//! Subgroups as membership bitsets with generator witnesses.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A subgroup of a [`GroupTable`], stored as the set of member indices plus a
/// list of generators whose closure is exactly that set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    members: ElemSet,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(group: &GroupTable) -> Self {
        Subgroup {
            members: ElemSet::from_indices(group.order(), [0]),
            generators: Vec::new(),
        }
    }

    pub fn whole(group: &GroupTable) -> Self {
        let members = ElemSet::full(group.order());
        let generators = reduce_generators(group, &members);
        Subgroup { members, generators }
    }

    /// Wraps a membership set that is already known to be closed, deriving a
    /// small generator witness list. Panics if the set is not a subgroup.
    pub fn from_members(group: &GroupTable, members: ElemSet) -> Self {
        assert!(members.contains(0), "a subgroup must contain the identity");
        let generators = reduce_generators(group, &members);
        let check = closure(group, generators.iter().copied());
        assert!(check == members, "membership set is not closed");
        Subgroup { members, generators }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

/// Closure of a set of elements under multiplication: the smallest subgroup
/// containing them. In a finite group closure under products already yields
/// inverses.
pub fn closure(group: &GroupTable, seed: impl IntoIterator<Item = usize>) -> ElemSet {
    let n = group.order();
    let mut members = ElemSet::empty(n);
    members.insert(0);
    let mut elems: Vec<usize> = vec![0];
    let mut queue: Vec<usize> = Vec::new();
    for s in seed {
        if !members.contains(s) {
            members.insert(s);
            elems.push(s);
            queue.push(s);
        }
    }
    while let Some(x) = queue.pop() {
        // Products with everything currently present, both sides.
        for i in 0..elems.len() {
            let y = elems[i];
            for p in [group.mul(x, y), group.mul(y, x)] {
                if !members.contains(p) {
                    members.insert(p);
                    elems.push(p);
                    queue.push(p);
                }
            }
        }
    }
    members
}

/// Smallest subgroup of `group` containing `seed`; the seed is recorded as
/// the generator witness list.
pub fn subgroup_closure(group: &GroupTable, seed: &[usize]) -> Subgroup {
    let members = closure(group, seed.iter().copied());
    Subgroup { members, generators: seed.to_vec() }
}

/// Greedy generator witnesses for a membership set: repeatedly adjoin the
/// smallest member not yet generated. Deterministic and small.
fn reduce_generators(group: &GroupTable, members: &ElemSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut cl = ElemSet::empty(group.order());
    cl.insert(0);
    for x in members.iter() {
        if !cl.contains(x) {
            gens.push(x);
            cl = closure(group, gens.iter().copied());
            if &cl == members {
                break;
            }
        }
    }
    gens
}

/// The center `Z(G) = {z : zg = gz for all g}`.
pub fn center(group: &GroupTable) -> Subgroup {
    let n = group.order();
    let members = ElemSet::from_indices(
        n,
        (0..n).filter(|&z| (0..n).all(|g| group.mul(z, g) == group.mul(g, z))),
    );
    Subgroup::from_members(group, members)
}

/// True iff `x⁻¹ H x = H` for every `x`.
pub fn is_normal(group: &GroupTable, sub: &Subgroup) -> bool {
    (0..group.order())
        .all(|x| sub.iter().all(|h| sub.contains(group.conj(h, x))))
}

/// The quotient `G/N` with its coset projection map.
///
/// Cosets are labeled in order of their smallest member, so the identity
/// coset `N` gets index 0. The projection is verified to be a homomorphism on
/// every pair of elements.
pub fn quotient(group: &GroupTable, normal: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
    if !is_normal(group, normal) {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    let mut proj = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if proj[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for h in normal.iter() {
            proj[group.mul(x, h)] = idx;
        }
    }
    debug_assert_eq!(reps.len() * normal.order(), n);

    let q = GroupTable::from_fn_trusted(
        reps.len(),
        |a, b| proj[group.mul(reps[a], reps[b])],
        None,
    );
    for x in 0..n {
        for y in 0..n {
            if proj[group.mul(x, y)] != q.mul(proj[x], proj[y]) {
                return Err(Error::Internal(format!(
                    "quotient projection is not a homomorphism at ({x}, {y})"
                )));
            }
        }
    }
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{q8, s3, s4};

    #[test]
    fn closure_of_three_cycle_in_s3_is_a3() {
        let g = s3();
        // element 1 is the 3-cycle generator (BFS order: e, r, t, ...)
        let h = subgroup_closure(&g, &[1]);
        assert_eq!(h.order(), 3);
        assert_eq!(h.generators(), &[1]);
    }

    #[test]
    fn closure_of_empty_set_is_trivial() {
        let g = s3();
        let h = subgroup_closure(&g, &[]);
        assert_eq!(h.order(), 1);
        assert!(h.contains(0));
    }

    #[test]
    fn center_of_abelian_group_is_everything() {
        let c4 = GroupTable::from_fn_trusted(4, |a, b| (a + b) % 4, None);
        assert_eq!(center(&c4).order(), 4);
    }

    #[test]
    fn center_of_q8_is_order_two() {
        let g = q8();
        let z = center(&g);
        assert_eq!(z.order(), 2);
        assert!(z.contains(0) && z.contains(1));
    }

    #[test]
    fn center_of_s4_is_trivial() {
        assert!(center(&s4()).is_trivial());
    }

    #[test]
    fn transposition_subgroup_of_s3_is_not_normal() {
        let g = s3();
        // element 2 is the transposition generator
        let h = subgroup_closure(&g, &[2]);
        assert_eq!(h.order(), 2);
        assert!(!is_normal(&g, &h));
        assert!(is_normal(&g, &subgroup_closure(&g, &[1])));
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s3();
        let (q, proj) = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        assert!(proj.iter().all(|&c| c == 0));
    }

    #[test]
    fn quotient_of_q8_by_center_is_abelian_of_order_four() {
        let g = q8();
        let (q, proj) = quotient(&g, &center(&g)).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert_eq!(proj[0], 0);
        assert_eq!(proj[1], 0);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s3();
        let h = subgroup_closure(&g, &[2]);
        assert!(matches!(quotient(&g, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn lagrange_on_quotient() {
        let g = s4();
        // find V4 as the unique normal subgroup of order 4 generated by an
        // order-2 element and its conjugates
        let v4 = (0..24)
            .filter(|&x| g.element_order(x) == 2)
            .map(|x| {
                let conjs: Vec<usize> = (0..24).map(|y| g.conj(x, y)).collect();
                subgroup_closure(&g, &conjs)
            })
            .find(|h| h.order() == 4)
            .expect("V4 exists");
        assert!(is_normal(&g, &v4));
        let (q, _) = quotient(&g, &v4).unwrap();
        assert_eq!(q.order() * v4.order(), g.order());
        assert_eq!(q.order(), 6);
    }
}
