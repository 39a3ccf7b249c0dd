//! Both sides of the Gelfand-Kazhdan type equivalences, evaluated through
//! independent routes: the representation-theoretic side from the character
//! table, the double-coset side from the group law alone.

pub mod corpus;

use std::fmt;

use serde::Serialize;

use crate::chartab::{character_table, CharacterTable};
use crate::cosets::{
    dim_v_bruteforce, double_cosets, gk_condition, hecke_commutative, sigma_on_cosets,
    theta_real_hypothesis, DimVOracle, GkVariant,
};
use crate::error::Error;
use crate::group::{conjugacy_classes, Automorphism, ClassData, FiniteGroup, Subgroup};

/// A group together with its classes and character table, shared by every
/// triple analyzed over it.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub label: String,
    pub group: FiniteGroup,
    pub classes: ClassData,
    pub table: CharacterTable,
}

impl GroupData {
    pub fn new(label: impl Into<String>, group: FiniteGroup) -> Result<Self, Error> {
        let classes = conjugacy_classes(&group);
        let table = character_table(&group, &classes)?;
        Ok(Self {
            label: label.into(),
            group,
            classes,
            table,
        })
    }
}

/// Per-irrep data for a triple `(G, H, theta)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepProfile {
    pub irrep: usize,
    pub degree: usize,
    /// `dim pi^H`
    pub dim_h: usize,
    /// `dim pi^{theta(H)}`
    pub dim_theta_h: usize,
    pub epsilon: i8,
    /// Index of `pi^* o theta`.
    pub partner: usize,
    pub distinguished: bool,
}

impl IrrepProfile {
    /// Violated profile invariants, if any.
    fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.dim_h > self.degree || self.dim_theta_h > self.degree {
            v.push(format!(
                "irrep {}: fixed dimension exceeds degree",
                self.irrep
            ));
        }
        if (self.epsilon != 0) != (self.partner == self.irrep) {
            v.push(format!(
                "irrep {}: epsilon {} but partner {}",
                self.irrep, self.epsilon, self.partner
            ));
        }
        if self.epsilon != 0 && self.dim_h != self.dim_theta_h {
            v.push(format!(
                "irrep {}: epsilon {} with dim_h {} != dim_theta_h {}",
                self.irrep, self.epsilon, self.dim_h, self.dim_theta_h
            ));
        }
        v
    }
}

/// An integer identity `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub ok: bool,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Self {
            name: name.into(),
            lhs,
            rhs,
            ok: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    GK1,
    GK2,
    GK3,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Both conditions of one equivalence. When `applicable` is false the
/// condition fields still hold whatever could be evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub which: Theorem,
    pub applicable: bool,
    pub hypothesis_detail: String,
    pub cond1: bool,
    pub cond2: bool,
    pub equivalent: bool,
}

impl TheoremCheck {
    /// An applicable theorem whose two sides disagree.
    pub fn failed(&self) -> bool {
        self.applicable && !self.equivalent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Run the GF(q) rank oracle for dim V only up to this group order.
    pub rank_oracle_max_order: usize,
    /// Run the Hecke convolution oracle only up to this group order.
    pub hecke_max_order: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            rank_oracle_max_order: usize::MAX,
            hecke_max_order: usize::MAX,
        }
    }
}

/// Everything computed once per triple; the public check functions read
/// from it.
struct Facts {
    profiles: Vec<IrrepProfile>,
    gelfand: bool,
    theta_stable: bool,
    hypothesis: bool,
    coset_count: usize,
    coset_sizes: Vec<usize>,
    hh_coset_count: usize,
    fixed: usize,
    unstable: usize,
    /// Literal reading of `theta(g) in H g^-1 H` over all `g`.
    stable_condition: bool,
    general_condition: bool,
    twisted_involutions: usize,
}

fn facts(data: &GroupData, h: &Subgroup, theta: &Automorphism) -> Result<Facts, Error> {
    let g = &data.group;
    let profiles = irrep_profiles(data, h, theta)?;
    let gelfand = profiles.iter().all(|p| p.dim_h <= 1);
    let theta_stable = h.is_theta_stable(theta);
    let hypothesis = theta_real_hypothesis(&data.classes, theta);

    let theta_h = h.image(theta);
    let dc = double_cosets(g, h, &theta_h)?;
    let inv = sigma_on_cosets(g, &dc, theta)?;
    let hh = double_cosets(g, h, h)?;
    let stable_condition = if theta_stable {
        gk_condition(g, h, theta, GkVariant::Stable)?
    } else {
        g.elements()
            .all(|x| hh.coset_of(theta.apply(x)) == hh.coset_of(g.inv(x)))
    };
    let general_condition = gk_condition(g, h, theta, GkVariant::General)?;

    Ok(Facts {
        gelfand,
        theta_stable,
        hypothesis,
        coset_count: dc.count(),
        coset_sizes: dc.sizes(),
        hh_coset_count: hh.count(),
        fixed: inv.fixed_count,
        unstable: inv.unstable_count,
        stable_condition,
        general_condition,
        twisted_involutions: theta.twisted_involution_count(g),
        profiles,
    })
}

/// Degree, fixed dimensions, indicator and partner of every irrep.
pub fn irrep_profiles(
    data: &GroupData,
    h: &Subgroup,
    theta: &Automorphism,
) -> Result<Vec<IrrepProfile>, Error> {
    let t = &data.table;
    let dims = t.invariant_dims(h)?;
    let dims_theta = t.invariant_dims(&h.image(theta))?;
    let eps = t.twisted_indicators(&data.group, theta)?;
    let partners = t.dual_twist_partner(&data.group, theta)?;
    Ok((0..t.irrep_count())
        .map(|pi| IrrepProfile {
            irrep: pi,
            degree: t.degree(pi),
            dim_h: dims[pi],
            dim_theta_h: dims_theta[pi],
            epsilon: eps[pi],
            partner: partners[pi],
            distinguished: dims[pi] > 0,
        })
        .collect())
}

fn corollary_check(f: &Facts) -> IdentityCheck {
    let rhs = f
        .profiles
        .iter()
        .map(|p| p.dim_h as i64 * (p.dim_theta_h as i64 - p.epsilon as i64))
        .sum();
    IdentityCheck::new("corollary", f.unstable as i64, rhs)
}

/// Twice the dimension predicted by the decomposition: the `epsilon = 0`
/// irreps contribute `m m'` (each partner pair counted twice), the
/// `epsilon = 1` ones `m (m - 1)` and the `epsilon = -1` ones `m (m + 1)`.
fn proposition_rhs_doubled(profiles: &[IrrepProfile]) -> i64 {
    profiles
        .iter()
        .map(|p| {
            let (m, m2) = (p.dim_h as i64, p.dim_theta_h as i64);
            match p.epsilon {
                0 => m * m2,
                1 => m * (m - 1),
                _ => m * (m + 1),
            }
        })
        .sum()
}

fn proposition_check(f: &Facts) -> IdentityCheck {
    let doubled = proposition_rhs_doubled(&f.profiles);
    let mut check = IdentityCheck::new("proposition", (f.unstable / 2) as i64, doubled / 2);
    check.ok &= doubled % 2 == 0;
    check
}

/// `#{O in H\G/theta(H) : sigma(O) != O}` against
/// `sum_pi dim pi^H (dim pi^{theta(H)} - epsilon(pi))`.
pub fn check_corollary(
    data: &GroupData,
    h: &Subgroup,
    theta: &Automorphism,
) -> Result<IdentityCheck, Error> {
    Ok(corollary_check(&facts(data, h, theta)?))
}

/// Dimension of the sigma-anti-invariant bi-invariant functions against the
/// sum over irreps of the sign-isotypic, exterior-square and
/// symmetric-square multiplicity contributions.
pub fn check_proposition(
    data: &GroupData,
    h: &Subgroup,
    theta: &Automorphism,
) -> Result<IdentityCheck, Error> {
    Ok(proposition_check(&facts(data, h, theta)?))
}

fn theorem_check(f: &Facts, which: Theorem) -> TheoremCheck {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let all_distinguished = |pred: &dyn Fn(&IrrepProfile) -> bool| {
        f.profiles.iter().filter(|p| p.distinguished).all(pred)
    };
    let (applicable, hypothesis_detail, cond1, cond2) = match which {
        Theorem::GK1 => (
            f.theta_stable && f.hypothesis,
            format!(
                "theta(H) = H: {}; every x has g with g x^-1 g^-1 = theta(x): {}",
                yes_no(f.theta_stable),
                yes_no(f.hypothesis)
            ),
            f.gelfand,
            f.stable_condition,
        ),
        Theorem::GK2 => (
            f.theta_stable,
            format!("theta(H) = H: {}", yes_no(f.theta_stable)),
            f.gelfand && all_distinguished(&|p| p.partner == p.irrep),
            f.stable_condition,
        ),
        Theorem::GK3 => (
            true,
            "no hypothesis".to_string(),
            f.gelfand && all_distinguished(&|p| p.epsilon == 1),
            f.general_condition,
        ),
    };
    TheoremCheck {
        which,
        applicable,
        hypothesis_detail,
        cond1,
        cond2,
        equivalent: cond1 == cond2,
    }
}

pub fn check_theorem(
    data: &GroupData,
    h: &Subgroup,
    theta: &Automorphism,
    which: Theorem,
) -> Result<TheoremCheck, Error> {
    Ok(theorem_check(&facts(data, h, theta)?, which))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub label: String,
    pub order: usize,
    pub exponent: usize,
    pub prime: u64,
    pub class_count: usize,
    pub class_sizes: Vec<usize>,
    pub degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupSummary {
    pub label: String,
    pub order: usize,
    pub theta_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaSummary {
    pub label: String,
    pub is_identity: bool,
    pub fixed_points: usize,
    /// `#{g : theta(g) = g^-1}`
    pub twisted_involutions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetSummary {
    /// `|H\G/theta(H)|`
    pub count: usize,
    pub sizes: Vec<usize>,
    pub sigma_fixed: usize,
    pub sigma_unstable: usize,
    /// `|H\G/H|`
    pub hecke_dimension: usize,
}

/// Full verdict for one triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub group: GroupSummary,
    pub subgroup: SubgroupSummary,
    pub theta: ThetaSummary,
    pub gelfand: bool,
    pub profiles: Vec<IrrepProfile>,
    pub cosets: CosetSummary,
    pub corollary: IdentityCheck,
    pub proposition: IdentityCheck,
    pub checks: Vec<IdentityCheck>,
    pub theorems: Vec<TheoremCheck>,
    pub dim_v_oracle: Option<DimVOracle>,
}

impl AnalysisReport {
    /// Failed identities and non-equivalent applicable theorems.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.ok)
            .map(|c| format!("{}: {} != {}", c.name, c.lhs, c.rhs))
            .collect();
        out.extend(
            self.theorems
                .iter()
                .filter(|t| t.failed())
                .map(|t| format!("{}: cond1 {} but cond2 {}", t.which, t.cond1, t.cond2)),
        );
        out
    }

    pub fn ok(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn theorem(&self, which: Theorem) -> &TheoremCheck {
        self.theorems
            .iter()
            .find(|t| t.which == which)
            .expect("all theorems are checked")
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn epsilons(&self) -> Vec<i8> {
        self.profiles.iter().map(|p| p.epsilon).collect()
    }
}

pub fn analyze(
    data: &GroupData,
    h: &Subgroup,
    h_label: &str,
    theta: &Automorphism,
    theta_label: &str,
) -> Result<AnalysisReport, Error> {
    analyze_with(
        data,
        h,
        h_label,
        theta,
        theta_label,
        AnalysisOptions::default(),
    )
}

pub fn analyze_with(
    data: &GroupData,
    h: &Subgroup,
    h_label: &str,
    theta: &Automorphism,
    theta_label: &str,
    options: AnalysisOptions,
) -> Result<AnalysisReport, Error> {
    let g = &data.group;
    let f = facts(data, h, theta)?;
    let corollary = corollary_check(&f);
    let proposition = proposition_check(&f);
    let theorems: Vec<TheoremCheck> = [Theorem::GK1, Theorem::GK2, Theorem::GK3]
        .into_iter()
        .map(|w| theorem_check(&f, w))
        .collect();

    let sum = |term: &dyn Fn(&IrrepProfile) -> i64| f.profiles.iter().map(term).sum::<i64>();
    let mut checks = vec![
        corollary.clone(),
        proposition.clone(),
        IdentityCheck::new("unstable_pairing", f.unstable as i64, 2 * proposition.lhs),
        IdentityCheck::new(
            "corollary_negative_terms",
            f.profiles
                .iter()
                .filter(|p| (p.dim_h as i64) * (p.dim_theta_h as i64 - p.epsilon as i64) < 0)
                .count() as i64,
            0,
        ),
        IdentityCheck::new(
            "permutation_module",
            sum(&|p| (p.degree * p.dim_h) as i64),
            (g.order() / h.order()) as i64,
        ),
        IdentityCheck::new(
            "double_coset_count",
            sum(&|p| (p.dim_h * p.dim_theta_h) as i64),
            f.coset_count as i64,
        ),
        IdentityCheck::new(
            "hecke_dimension",
            sum(&|p| (p.dim_h * p.dim_h) as i64),
            f.hh_coset_count as i64,
        ),
        IdentityCheck::new(
            "twisted_involutions",
            sum(&|p| p.epsilon as i64 * p.degree as i64),
            f.twisted_involutions as i64,
        ),
        // V = 0 exactly when every term of the corollary sum vanishes
        IdentityCheck::new(
            "gk3_refined",
            i64::from(f.general_condition),
            i64::from(
                f.profiles
                    .iter()
                    .all(|p| p.dim_h == 0 || p.dim_theta_h as i64 == p.epsilon as i64),
            ),
        ),
        IdentityCheck::new(
            "profile_invariants",
            f.profiles.iter().map(|p| p.violations().len() as i64).sum(),
            0,
        ),
    ];

    if g.order() <= options.hecke_max_order {
        let hecke = hecke_commutative(g, h)?;
        checks.push(IdentityCheck::new(
            "gelfand_oracle",
            i64::from(f.gelfand),
            i64::from(hecke),
        ));
    }
    let dim_v_oracle = if g.order() <= options.rank_oracle_max_order {
        let d = dim_v_bruteforce(g, h, theta)?;
        checks.push(IdentityCheck::new(
            "dim_v_rank",
            d.via_cosets as i64,
            d.via_rank as i64,
        ));
        Some(d)
    } else {
        None
    };

    // cross-theorem consistency
    let [gk1, gk2, gk3] = [&theorems[0], &theorems[1], &theorems[2]];
    if gk1.applicable {
        checks.push(IdentityCheck::new(
            "gk1_gk2_cond1",
            i64::from(gk1.cond1),
            i64::from(gk2.cond1),
        ));
    }
    if f.theta_stable {
        checks.push(IdentityCheck::new(
            "gk2_gk3_cond2",
            i64::from(gk2.cond2),
            i64::from(gk3.cond2),
        ));
    }

    let t = &data.table;
    Ok(AnalysisReport {
        group: GroupSummary {
            label: data.label.clone(),
            order: g.order(),
            exponent: t.exponent(),
            prime: t.prime(),
            class_count: data.classes.class_count(),
            class_sizes: data.classes.sizes(),
            degrees: t.degrees().to_vec(),
        },
        subgroup: SubgroupSummary {
            label: h_label.to_string(),
            order: h.order(),
            theta_stable: f.theta_stable,
        },
        theta: ThetaSummary {
            label: theta_label.to_string(),
            is_identity: theta.is_identity(),
            fixed_points: g.elements().filter(|&a| theta.apply(a) == a).count(),
            twisted_involutions: f.twisted_involutions,
        },
        gelfand: f.gelfand,
        profiles: f.profiles.clone(),
        cosets: CosetSummary {
            count: f.coset_count,
            sizes: f.coset_sizes.clone(),
            sigma_fixed: f.fixed,
            sigma_unstable: f.unstable,
            hecke_dimension: f.hh_coset_count,
        },
        corollary,
        proposition,
        checks,
        theorems,
        dim_v_oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{automorphism_from_spec, catalog_group, ThetaSpec};

    fn data(s: &str) -> (GroupData, crate::group::CatalogEntry) {
        let e = catalog_group(&s.parse().unwrap()).unwrap();
        (GroupData::new(s, e.group.clone()).unwrap(), e)
    }

    #[test]
    fn s3_profiles() {
        let (d, e) = data("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let id = Automorphism::identity(&d.group);
        let p = irrep_profiles(&d, h, &id).unwrap();
        let summary: Vec<_> = p.iter().map(|p| (p.degree, p.dim_h, p.epsilon)).collect();
        assert_eq!(summary, vec![(1, 1, 1), (1, 0, 1), (2, 1, 1)]);
    }

    #[test]
    fn q8_profiles() {
        let (d, _) = data("quaternion8");
        let t = Subgroup::trivial(&d.group);
        let id = Automorphism::identity(&d.group);
        let p = irrep_profiles(&d, &t, &id).unwrap();
        let summary: Vec<_> = p.iter().map(|p| (p.degree, p.dim_h, p.epsilon)).collect();
        assert_eq!(
            summary,
            vec![(1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (2, 2, -1)]
        );
    }

    #[test]
    fn c3_profiles() {
        let (d, _) = data("cyclic(3)");
        let t = Subgroup::trivial(&d.group);
        let id = Automorphism::identity(&d.group);
        let p = irrep_profiles(&d, &t, &id).unwrap();
        assert_eq!(
            p.iter().map(|p| p.epsilon).collect::<Vec<_>>(),
            vec![1, 0, 0]
        );
        assert_eq!(p[1].partner, 2);
        assert_eq!(p[2].partner, 1);
        assert!(p.iter().all(|p| p.dim_h == 1));
    }

    #[test]
    fn corollary_and_proposition_examples() {
        let cases = [
            ("symmetric(3)", Some("point-stabilizer"), 0, 0),
            ("quaternion8", None, 6, 3),
            ("cyclic(3)", None, 2, 1),
            ("symmetric(3)", None, 2, 1),
        ];
        for (name, sub, cor, prop) in cases {
            let (d, e) = data(name);
            let h = sub
                .map(|s| e.subgroup(s).unwrap().clone())
                .unwrap_or_else(|| Subgroup::trivial(&d.group));
            let id = Automorphism::identity(&d.group);
            let c = check_corollary(&d, &h, &id).unwrap();
            assert_eq!((c.lhs, c.rhs, c.ok), (cor, cor, true), "{name}");
            let p = check_proposition(&d, &h, &id).unwrap();
            assert_eq!((p.lhs, p.rhs, p.ok), (prop, prop, true), "{name}");
        }
    }

    #[test]
    fn theorem_examples() {
        let (d, e) = data("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let id = Automorphism::identity(&d.group);
        let t = check_theorem(&d, h, &id, Theorem::GK1).unwrap();
        assert!(t.applicable && t.cond1 && t.cond2 && t.equivalent);

        let (d, _) = data("quaternion8");
        let triv = Subgroup::trivial(&d.group);
        let id = Automorphism::identity(&d.group);
        let t = check_theorem(&d, &triv, &id, Theorem::GK3).unwrap();
        assert!(t.applicable && !t.cond1 && !t.cond2 && t.equivalent);

        let (d, _) = data("cyclic(4)");
        let triv = Subgroup::trivial(&d.group);
        let inv = automorphism_from_spec(&d.group, &ThetaSpec::Inversion).unwrap();
        let t = check_theorem(&d, &triv, &inv, Theorem::GK3).unwrap();
        assert!(t.applicable && t.cond1 && t.cond2);
    }

    #[test]
    fn trivial_group_report() {
        let (d, _) = data("cyclic(1)");
        let full = Subgroup::full(&d.group);
        let id = Automorphism::identity(&d.group);
        let r = analyze(&d, &full, "full", &id, "identity").unwrap();
        assert!(r.gelfand && r.ok());
        assert_eq!((r.corollary.lhs, r.corollary.rhs), (0, 0));
        assert_eq!((r.proposition.lhs, r.proposition.rhs), (0, 0));
    }

    #[test]
    fn non_stable_subgroup_report() {
        let (d, e) = data("symmetric(3)");
        let h = e.subgroup("point-stabilizer").unwrap();
        let t = d.group.index_of_permutation(&[0, 2, 1]).unwrap();
        let theta = automorphism_from_spec(&d.group, &ThetaSpec::Conjugation(t)).unwrap();
        let r = analyze(&d, h, "point-stabilizer", &theta, "conj").unwrap();
        assert!(!r.subgroup.theta_stable);
        assert!(!r.theorem(Theorem::GK1).applicable);
        assert!(!r.theorem(Theorem::GK2).applicable);
        assert!(r.theorem(Theorem::GK3).equivalent);
        assert!(r.ok(), "{:?}", r.failures());
    }
}
