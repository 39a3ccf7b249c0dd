//! Double cosets, the action of `sigma(g) = theta(g^-1)` on them, and the
//! character-free oracles built on top (Hecke-algebra commutativity and a
//! linear-algebra count of sigma-anti-invariant bi-invariant functions).

use serde::Serialize;

use crate::error::CosetError;
use crate::field::{next_prime_above, PrimeField, RankAccumulator};
use crate::group::{Automorphism, ClassData, FiniteGroup, Subgroup};

/// Partition of `G` into double cosets `A x B`.
#[derive(Debug, Clone)]
pub struct DoubleCosetDecomposition {
    left: Subgroup,
    right: Subgroup,
    coset_of: Vec<usize>,
    cosets: Vec<Vec<usize>>,
}

impl DoubleCosetDecomposition {
    pub fn left(&self) -> &Subgroup {
        &self.left
    }

    pub fn right(&self) -> &Subgroup {
        &self.right
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.cosets.len()
    }

    #[inline]
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn coset(&self, i: usize) -> &[usize] {
        &self.cosets[i]
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Least element of coset `i`, which is also the element it was
    /// discovered from.
    #[inline]
    pub fn representative(&self, i: usize) -> usize {
        self.cosets[i][0]
    }

    pub fn representatives(&self) -> impl Iterator<Item = usize> + '_ {
        self.cosets.iter().map(|c| c[0])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cosets.iter().map(Vec::len).collect()
    }
}

/// Double cosets `A\G/B`. Cosets are numbered in order of their least
/// element.
pub fn double_cosets(
    group: &FiniteGroup,
    left: &Subgroup,
    right: &Subgroup,
) -> Result<DoubleCosetDecomposition, CosetError> {
    if left.group_id() != group.id() || right.group_id() != group.id() {
        return Err(CosetError::MismatchedParents);
    }
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets = Vec::new();
    for x in group.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = cosets.len();
        let mut members = Vec::new();
        for &a in left.elements() {
            let ax = group.mul(a, x);
            for &b in right.elements() {
                let y = group.mul(ax, b);
                if coset_of[y] == usize::MAX {
                    coset_of[y] = idx;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        cosets.push(members);
    }
    Ok(DoubleCosetDecomposition {
        left: left.clone(),
        right: right.clone(),
        coset_of,
        cosets,
    })
}

/// Action of `sigma` on `H\G/theta(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetInvolution {
    pub mapping: Vec<usize>,
    pub fixed_count: usize,
    pub unstable_count: usize,
}

pub fn sigma_on_cosets(
    group: &FiniteGroup,
    dc: &DoubleCosetDecomposition,
    theta: &Automorphism,
) -> Result<CosetInvolution, CosetError> {
    if !dc.right.same_elements(&dc.left.image(theta)) {
        return Err(CosetError::RightSubgroupNotThetaOfLeft);
    }
    let mapping: Vec<usize> = (0..dc.count())
        .map(|i| dc.coset_of(theta.sigma(group, dc.representative(i))))
        .collect();
    for (i, coset) in dc.cosets.iter().enumerate() {
        if let Some(&other) = coset.get(1) {
            if dc.coset_of(theta.sigma(group, other)) != mapping[i] {
                return Err(CosetError::SigmaNotWellDefined(i));
            }
        }
        if mapping[mapping[i]] != i {
            return Err(CosetError::SigmaNotWellDefined(i));
        }
    }
    let fixed_count = mapping.iter().enumerate().filter(|(i, &m)| *i == m).count();
    Ok(CosetInvolution {
        unstable_count: mapping.len() - fixed_count,
        mapping,
        fixed_count,
    })
}

/// Which reading of the double-coset condition to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GkVariant {
    /// `theta(x) in H x^-1 H` for every representative of `H\G/H`;
    /// requires `theta(H) = H`.
    Stable,
    /// `theta(g) in H g^-1 theta(H)` for every `g`.
    General,
}

pub fn gk_condition(
    group: &FiniteGroup,
    subgroup: &Subgroup,
    theta: &Automorphism,
    variant: GkVariant,
) -> Result<bool, CosetError> {
    match variant {
        GkVariant::Stable => {
            if !subgroup.is_theta_stable(theta) {
                return Err(CosetError::SubgroupNotThetaStable);
            }
            let dc = double_cosets(group, subgroup, subgroup)?;
            let holds = dc
                .representatives()
                .all(|x| dc.coset_of(theta.apply(x)) == dc.coset_of(group.inv(x)));
            Ok(holds)
        }
        GkVariant::General => {
            let theta_h = subgroup.image(theta);
            let dc = double_cosets(group, subgroup, &theta_h)?;
            let by_sigma = sigma_on_cosets(group, &dc, theta)?.unstable_count == 0;
            let by_membership = group
                .elements()
                .all(|g| dc.coset_of(theta.apply(g)) == dc.coset_of(group.inv(g)));
            if by_sigma != by_membership {
                return Err(CosetError::OracleMismatch {
                    what: "general condition (sigma-fixed cosets vs membership)",
                    lhs: by_sigma as i64,
                    rhs: by_membership as i64,
                });
            }
            Ok(by_sigma)
        }
    }
}

/// Every `x` has some `g` with `g x^-1 g^-1 = theta(x)`, i.e. `theta` maps
/// each conjugacy class to its inverse class.
pub fn theta_real_hypothesis(classes: &ClassData, theta: &Automorphism) -> bool {
    (0..classes.class_count()).all(|i| {
        classes.class_of(theta.apply(classes.representative(i))) == classes.inverse_class(i)
    })
}

/// Commutativity of the convolution algebra spanned by the indicator
/// functions of `H\G/H`, checked pair by pair with exact integer
/// convolutions over all of `G`.
pub fn hecke_commutative(group: &FiniteGroup, subgroup: &Subgroup) -> Result<bool, CosetError> {
    let dc = double_cosets(group, subgroup, subgroup)?;
    let n = group.order();
    let convolve = |f: &[usize], g: &[usize]| {
        // (1_F * 1_G)(x) = #{(y, z) in F x G : y z = x}
        let mut out = vec![0i64; n];
        for &y in f {
            for &z in g {
                out[group.mul(y, z)] += 1;
            }
        }
        out
    };
    for i in 0..dc.count() {
        for j in i + 1..dc.count() {
            let (a, b) = (dc.coset(i), dc.coset(j));
            if convolve(a, b) != convolve(b, a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dimension of the space of functions on `G` that are left `H`-invariant,
/// right `theta(H)`-invariant and change sign under `sigma`, computed two
/// ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimVOracle {
    /// Half the number of sigma-unstable double cosets.
    pub via_cosets: usize,
    /// `|G|` minus the rank of the constraint system over GF(q).
    pub via_rank: usize,
    pub modulus: u64,
}

impl DimVOracle {
    pub fn agree(&self) -> bool {
        self.via_cosets == self.via_rank
    }
}

pub fn dim_v_bruteforce(
    group: &FiniteGroup,
    subgroup: &Subgroup,
    theta: &Automorphism,
) -> Result<DimVOracle, CosetError> {
    let theta_h = subgroup.image(theta);
    let dc = double_cosets(group, subgroup, &theta_h)?;
    let inv = sigma_on_cosets(group, &dc, theta)?;
    let via_rank = dim_v_by_rank(group, subgroup, &theta_h, theta);
    Ok(DimVOracle {
        via_cosets: inv.unstable_count / 2,
        via_rank: via_rank.0,
        modulus: via_rank.1,
    })
}

fn dim_v_by_rank(
    group: &FiniteGroup,
    left: &Subgroup,
    right: &Subgroup,
    theta: &Automorphism,
) -> (usize, u64) {
    let n = group.order();
    let q = next_prime_above(2 * n as u64);
    let mut acc = RankAccumulator::new(PrimeField::new(q), n);
    for g in group.elements() {
        // f(sigma g) + f(g) = 0
        acc.push_sparse(&[(theta.sigma(group, g), 1), (g, 1)]);
        for &h in left.generators() {
            // f(h g) - f(g) = 0
            acc.push_sparse(&[(group.mul(h, g), 1), (g, -1)]);
        }
        for &h in right.generators() {
            // f(g h) - f(g) = 0
            acc.push_sparse(&[(group.mul(g, h), 1), (g, -1)]);
        }
    }
    (n - acc.rank(), q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        automorphism_from_spec, catalog_group, conjugacy_classes, CatalogSpec, ThetaSpec,
    };

    fn entry(s: &str) -> crate::group::CatalogEntry {
        catalog_group(&s.parse().unwrap()).unwrap()
    }

    fn identity(g: &FiniteGroup) -> Automorphism {
        Automorphism::identity(g)
    }

    #[test]
    fn s3_point_stabilizer_double_cosets() {
        let e = entry("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let dc = double_cosets(&e.group, h, h).unwrap();
        let mut sizes = dc.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        for i in 0..dc.count() {
            assert_eq!(dc.coset_of(dc.representative(i)), i);
        }
    }

    #[test]
    fn trivial_and_full_double_cosets() {
        let e = entry("quaternion8");
        let g = &e.group;
        let t = Subgroup::trivial(g);
        let full = Subgroup::full(g);
        assert_eq!(double_cosets(g, &t, &t).unwrap().count(), 8);
        let dc = double_cosets(g, &full, &full).unwrap();
        assert_eq!(dc.count(), 1);
        assert_eq!(dc.sizes(), vec![8]);
    }

    #[test]
    fn mismatched_parents() {
        let a = entry("cyclic(3)");
        let b = entry("cyclic(3)");
        let h = Subgroup::trivial(&b.group);
        assert_eq!(
            double_cosets(&a.group, &h, &h).unwrap_err(),
            CosetError::MismatchedParents
        );
    }

    #[test]
    fn sigma_examples() {
        // Q8, trivial H: only e and -1 are their own inverses
        let e = entry("quaternion8");
        let t = Subgroup::trivial(&e.group);
        let dc = double_cosets(&e.group, &t, &t).unwrap();
        let inv = sigma_on_cosets(&e.group, &dc, &identity(&e.group)).unwrap();
        assert_eq!((inv.fixed_count, inv.unstable_count), (2, 6));

        let e = entry("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let dc = double_cosets(&e.group, h, h).unwrap();
        let inv = sigma_on_cosets(&e.group, &dc, &identity(&e.group)).unwrap();
        assert_eq!(inv.unstable_count, 0);

        let e = entry("cyclic(3)");
        let t = Subgroup::trivial(&e.group);
        let dc = double_cosets(&e.group, &t, &t).unwrap();
        let inv = sigma_on_cosets(&e.group, &dc, &identity(&e.group)).unwrap();
        assert_eq!((inv.fixed_count, inv.unstable_count), (1, 2));
    }

    #[test]
    fn sigma_requires_theta_image() {
        let e = entry("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let t = e.group.index_of_permutation(&[0, 2, 1]).unwrap();
        let theta = automorphism_from_spec(&e.group, &ThetaSpec::Conjugation(t)).unwrap();
        let dc = double_cosets(&e.group, h, h).unwrap();
        assert_eq!(
            sigma_on_cosets(&e.group, &dc, &theta).unwrap_err(),
            CosetError::RightSubgroupNotThetaOfLeft
        );
    }

    /// Exhaustive search for h1, h2 with h1 g^-1 h2' = theta(g).
    fn brute_condition(g: &FiniteGroup, h: &Subgroup, theta: &Automorphism) -> bool {
        let th = h.image(theta);
        g.elements().all(|x| {
            h.elements().iter().any(|&h1| {
                th.elements()
                    .iter()
                    .any(|&h2| g.mul(g.mul(h1, g.inv(x)), h2) == theta.apply(x))
            })
        })
    }

    #[test]
    fn gk_condition_examples() {
        let e = entry("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let id = identity(&e.group);
        assert!(brute_condition(&e.group, h, &id));
        assert!(gk_condition(&e.group, h, &id, GkVariant::Stable).unwrap());

        let e = entry("quaternion8");
        let t = Subgroup::trivial(&e.group);
        let id = identity(&e.group);
        assert!(!brute_condition(&e.group, &t, &id));
        assert!(!gk_condition(&e.group, &t, &id, GkVariant::General).unwrap());

        let e = entry("cyclic(4)");
        let t = Subgroup::trivial(&e.group);
        let inv = automorphism_from_spec(&e.group, &ThetaSpec::Inversion).unwrap();
        assert!(gk_condition(&e.group, &t, &inv, GkVariant::General).unwrap());
    }

    #[test]
    fn stable_variant_rejects_unstable_subgroup() {
        let e = entry("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let t = e.group.index_of_permutation(&[0, 2, 1]).unwrap();
        let theta = automorphism_from_spec(&e.group, &ThetaSpec::Conjugation(t)).unwrap();
        assert_eq!(
            gk_condition(&e.group, h, &theta, GkVariant::Stable).unwrap_err(),
            CosetError::SubgroupNotThetaStable
        );
        // the general reading agrees with exhaustive search
        let general = gk_condition(&e.group, h, &theta, GkVariant::General).unwrap();
        assert_eq!(general, brute_condition(&e.group, h, &theta));
    }

    #[test]
    fn hypothesis_examples() {
        let e = entry("symmetric(3)");
        assert!(theta_real_hypothesis(
            &conjugacy_classes(&e.group),
            &identity(&e.group)
        ));
        let e = entry("cyclic(3)");
        let cl = conjugacy_classes(&e.group);
        assert!(!theta_real_hypothesis(&cl, &identity(&e.group)));
        let inv = automorphism_from_spec(&e.group, &ThetaSpec::Inversion).unwrap();
        assert!(theta_real_hypothesis(&cl, &inv));
    }

    #[test]
    fn hecke_examples() {
        let e = entry("symmetric(3)");
        assert!(hecke_commutative(&e.group, e.subgroup("point-stabilizer").unwrap()).unwrap());
        let e = entry("quaternion8");
        assert!(!hecke_commutative(&e.group, &Subgroup::trivial(&e.group)).unwrap());
        let e = entry("cyclic(3)");
        assert!(hecke_commutative(&e.group, &Subgroup::trivial(&e.group)).unwrap());
    }

    #[test]
    fn dim_v_examples() {
        let cases = [
            ("quaternion8", None, 3),
            ("symmetric(3)", Some("point-stabilizer"), 0),
            ("cyclic(3)", None, 1),
        ];
        for (name, sub, expected) in cases {
            let e = entry(name);
            let h = sub
                .map(|s| e.subgroup(s).unwrap().clone())
                .unwrap_or_else(|| Subgroup::trivial(&e.group));
            let d = dim_v_bruteforce(&e.group, &h, &identity(&e.group)).unwrap();
            assert_eq!(d.via_cosets, expected, "{name}");
            assert_eq!(d.via_rank, expected, "{name}");
        }
    }

    #[test]
    fn whole_group_as_subgroup() {
        let e = catalog_group(&CatalogSpec::Dihedral(5)).unwrap();
        let g = &e.group;
        let full = Subgroup::full(g);
        let id = identity(g);
        assert_eq!(double_cosets(g, &full, &full).unwrap().count(), 1);
        assert!(gk_condition(g, &full, &id, GkVariant::Stable).unwrap());
        assert!(gk_condition(g, &full, &id, GkVariant::General).unwrap());
        assert_eq!(dim_v_bruteforce(g, &full, &id).unwrap().via_rank, 0);
    }
}
