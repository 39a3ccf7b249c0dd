//! Conjugacy classes.

use super::finite::FiniteGroup;

/// Partition of a group into conjugacy classes. Class 0 is `{e}`; the
/// remaining classes are numbered by their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    inverse_class: Vec<usize>,
}

impl ClassData {
    #[inline]
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    #[inline]
    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// `i*` with `C_{i*} = C_i^{-1}`.
    #[inline]
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    #[inline]
    pub fn representative(&self, i: usize) -> usize {
        self.classes[i][0]
    }
}

/// Conjugation orbits, found by closing each unassigned element under
/// conjugation by the stored generators.
pub fn conjugacy_classes(group: &FiniteGroup) -> ClassData {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in group.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        class_of[x] = idx;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &g in group.generators() {
                let z = group.conjugate(g, y);
                if class_of[z] == usize::MAX {
                    class_of[z] = idx;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    let inverse_class = classes.iter().map(|c| class_of[group.inv(c[0])]).collect();
    ClassData {
        class_of,
        classes,
        inverse_class,
    }
}
