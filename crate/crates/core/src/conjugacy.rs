//! Conjugacy classes via orbits of the conjugation action.

use crate::group::GroupTable;

/// The partition of a group into conjugacy classes.
///
/// Classes are numbered in order of their smallest member, so the identity
/// class is always class 0 and each representative is the minimal element
/// index in its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClasses {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
}

/// Orbits of the conjugation action `g ↦ y⁻¹ g y`.
pub fn conjugacy_classes(group: &GroupTable) -> ConjClasses {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for g in 0..n {
        if class_of[g] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(g);
        let mut size = 0;
        for y in 0..n {
            let c = group.conj(g, y);
            if class_of[c] == usize::MAX {
                class_of[c] = idx;
                size += 1;
            }
        }
        sizes.push(size);
    }
    ConjClasses { class_of, reps, sizes }
}

impl ConjClasses {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn rep(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Members of a class in ascending element order.
    pub fn class_members(&self, class: usize) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&g| self.class_of[g] == class).collect()
    }
}
