use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::finite::{FiniteGroup, GroupId};
use crate::error::GroupError;

/// How an involutive automorphism is specified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThetaSpec {
    Identity,
    /// `a -> a^-1`; valid only for abelian groups.
    Inversion,
    /// `a -> g a g^-1`.
    Conjugation(usize),
    /// Images of the group's stored generators, in order.
    GeneratorImages(Vec<usize>),
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaSpec::Identity => write!(f, "identity"),
            ThetaSpec::Inversion => write!(f, "inversion"),
            ThetaSpec::Conjugation(g) => write!(f, "conjugation({g})"),
            ThetaSpec::GeneratorImages(images) => write!(f, "generator_images({images:?})"),
        }
    }
}

/// A validated involutive automorphism `theta` of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    group: GroupId,
    map: Vec<usize>,
}

impl Automorphism {
    pub fn identity(group: &FiniteGroup) -> Self {
        Self {
            group: group.id(),
            map: group.elements().collect(),
        }
    }

    /// Validates an explicit element map: bijection, homomorphism, involution.
    pub fn from_map(group: &FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        let n = group.order();
        if map.len() != n {
            return Err(GroupError::WrongImageCount {
                expected: n,
                got: map.len(),
            });
        }
        let mut hit = vec![false; n];
        for &y in &map {
            group.check_index(y)?;
            if std::mem::replace(&mut hit[y], true) {
                return Err(GroupError::NotABijection(y));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if map[group.mul(a, b)] != group.mul(map[a], map[b]) {
                    return Err(GroupError::NotAHomomorphism { a, b });
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| map[map[a]] != a) {
            return Err(GroupError::NotAnInvolution(a));
        }
        Ok(Self {
            group: group.id(),
            map,
        })
    }

    #[inline]
    pub fn group_id(&self) -> GroupId {
        self.group
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `sigma(a) = theta(a^-1)`.
    #[inline]
    pub fn sigma(&self, group: &FiniteGroup, a: usize) -> usize {
        self.map[group.inv(a)]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(a, &b)| a == b)
    }

    /// Number of `g` with `theta(g) = g^-1`.
    pub fn twisted_involution_count(&self, group: &FiniteGroup) -> usize {
        group
            .elements()
            .filter(|&g| self.map[g] == group.inv(g))
            .count()
    }
}

/// Builds and validates the automorphism described by `spec`.
pub fn automorphism_from_spec(
    group: &FiniteGroup,
    spec: &ThetaSpec,
) -> Result<Automorphism, GroupError> {
    match spec {
        ThetaSpec::Identity => Ok(Automorphism::identity(group)),
        ThetaSpec::Inversion => {
            if let Some((a, b)) = group.commutation_witness() {
                return Err(GroupError::InversionRequiresAbelian(a, b));
            }
            let images: Vec<usize> = group.generators().iter().map(|&g| group.inv(g)).collect();
            extend_generator_images(group, &images)
        }
        ThetaSpec::Conjugation(g) => {
            let g = *g;
            group.check_index(g)?;
            if !group.is_central(group.mul(g, g)) {
                let witness = group
                    .elements()
                    .find(|&a| group.conjugate(g, group.conjugate(g, a)) != a)
                    .expect("non-central g^2 moves some element");
                return Err(GroupError::NotAnInvolution(witness));
            }
            let map = group.elements().map(|a| group.conjugate(g, a)).collect();
            Automorphism::from_map(group, map)
        }
        ThetaSpec::GeneratorImages(images) => extend_generator_images(group, images),
    }
}

/// Extends generator images to the whole group by breadth-first
/// multiplication, rejecting any element reached with two different images.
fn extend_generator_images(
    group: &FiniteGroup,
    images: &[usize],
) -> Result<Automorphism, GroupError> {
    let gens = group.generators();
    if images.len() != gens.len() {
        return Err(GroupError::WrongImageCount {
            expected: gens.len(),
            got: images.len(),
        });
    }
    for &y in images {
        group.check_index(y)?;
    }
    let n = group.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let fy = group.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return Err(GroupError::InconsistentImages(y));
            }
        }
    }
    if let Some(x) = map.iter().position(|&y| y == usize::MAX) {
        // stored generators always generate the group
        return Err(GroupError::InconsistentImages(x));
    }
    Automorphism::from_map(group, map)
}
