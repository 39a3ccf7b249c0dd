use super::automorphism::Automorphism;
use super::finite::{closure, greedy_generators_of, FiniteGroup, GroupId};
use crate::error::GroupError;

/// A subgroup of a [`FiniteGroup`], stored as a sorted element list plus a
/// membership table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: GroupId,
    elements: Vec<usize>,
    member: Vec<bool>,
    generators: Vec<usize>,
}

impl Subgroup {
    /// Smallest subgroup containing `gens`.
    pub fn from_generators(group: &FiniteGroup, gens: &[usize]) -> Result<Self, GroupError> {
        for &g in gens {
            group.check_index(g)?;
        }
        let (member, mut elements) = closure(group, gens);
        elements.sort_unstable();
        Ok(Self {
            group: group.id(),
            elements,
            member,
            generators: gens.to_vec(),
        })
    }

    /// Validates an explicit element set as a subgroup.
    pub fn from_elements(group: &FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let mut member = vec![false; group.order()];
        for &x in elements {
            group.check_index(x)?;
            member[x] = true;
        }
        if !member[0] {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        let mut sorted: Vec<usize> = group.elements().filter(|&x| member[x]).collect();
        sorted.dedup();
        for &a in &sorted {
            if !member[group.inv(a)] {
                return Err(GroupError::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &sorted {
                if !member[group.mul(a, b)] {
                    return Err(GroupError::NotASubgroup(format!("product {a}*{b} missing")));
                }
            }
        }
        let generators = greedy_generators_of(group, &sorted);
        Ok(Self {
            group: group.id(),
            elements: sorted,
            member,
            generators,
        })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::from_generators(group, &[]).expect("empty generating set")
    }

    pub fn full(group: &FiniteGroup) -> Self {
        Self::from_generators(group, group.generators()).expect("stored generators are valid")
    }

    #[inline]
    pub fn group_id(&self) -> GroupId {
        self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.member[a]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `theta(self)`.
    pub fn image(&self, theta: &Automorphism) -> Self {
        assert_eq!(
            self.group,
            theta.group_id(),
            "automorphism of another group"
        );
        let mut member = vec![false; self.member.len()];
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&x| {
                let y = theta.apply(x);
                member[y] = true;
                y
            })
            .collect();
        elements.sort_unstable();
        Self {
            group: self.group,
            elements,
            member,
            generators: self.generators.iter().map(|&g| theta.apply(g)).collect(),
        }
    }

    /// `g self g^-1`.
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Self {
        let mut member = vec![false; self.member.len()];
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&x| {
                let y = group.conjugate(g, x);
                member[y] = true;
                y
            })
            .collect();
        elements.sort_unstable();
        Self {
            group: self.group,
            elements,
            member,
            generators: self
                .generators
                .iter()
                .map(|&x| group.conjugate(g, x))
                .collect(),
        }
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.elements.iter().filter(|&&x| other.contains(x)).count()
    }

    /// Same element set.
    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.group == other.group && self.elements == other.elements
    }

    pub fn is_theta_stable(&self, theta: &Automorphism) -> bool {
        self.elements.iter().all(|&x| self.contains(theta.apply(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::finite::{group_from_permutations, DEFAULT_MAX_ORDER};

    fn s3() -> FiniteGroup {
        group_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn s3_subgroups() {
        let g = s3();
        assert_eq!(Subgroup::from_generators(&g, &[]).unwrap().order(), 1);
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let c = g.index_of_permutation(&[1, 2, 0]).unwrap();
        assert_eq!(Subgroup::from_generators(&g, &[t]).unwrap().order(), 2);
        assert_eq!(Subgroup::from_generators(&g, &[c]).unwrap().order(), 3);
        assert_eq!(Subgroup::from_generators(&g, &[c, t]).unwrap().order(), 6);
    }

    #[test]
    fn out_of_range_generator() {
        let g = s3();
        assert_eq!(
            Subgroup::from_generators(&g, &[6]).unwrap_err(),
            GroupError::IndexOutOfRange { index: 6, order: 6 }
        );
    }

    #[test]
    fn from_elements_validates() {
        let g = s3();
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let c = g.index_of_permutation(&[1, 2, 0]).unwrap();
        assert!(Subgroup::from_elements(&g, &[0, t]).is_ok());
        assert!(Subgroup::from_elements(&g, &[0, c]).is_err());
        assert!(Subgroup::from_elements(&g, &[t]).is_err());
        let h = Subgroup::from_elements(&g, &[0, c, g.inv(c)]).unwrap();
        assert_eq!(h.generators().len(), 1);
    }
}
