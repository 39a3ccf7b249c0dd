//! Built-in sweeps over catalog groups, subgroups and involutions.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{analyze_with, AnalysisOptions, AnalysisReport, GroupData, Theorem};
use crate::error::Error;
use crate::group::{
    automorphism_from_spec, catalog_group, Automorphism, CatalogSpec, Subgroup, ThetaSpec,
};

pub const SUITES: &[&str] = &[
    "smoke",
    "symmetric-pairs",
    "full",
    "slow",
    "all",
    "outer",
    "empty",
];

/// Which triples a suite sweeps for one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sweep {
    /// Trivial, full, named and small cyclic subgroups against every theta.
    Everything,
    /// Only the last-point stabilizer with theta = identity.
    PointStabilizer,
    /// Every subgroup against the named involutions that are not inner.
    Outer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteGroup {
    pub spec: CatalogSpec,
    pub slow: bool,
    sweep: Sweep,
}

fn every(spec: CatalogSpec) -> SuiteGroup {
    SuiteGroup {
        spec,
        slow: false,
        sweep: Sweep::Everything,
    }
}

fn small_groups() -> Vec<CatalogSpec> {
    use CatalogSpec::*;
    let mut v: Vec<CatalogSpec> = (1..=12).map(Cyclic).collect();
    v.extend([Cyclic(16), Cyclic(24)]);
    v.extend((3..=8).map(Dihedral));
    v.extend([Dihedral(12), Dihedral(24)]);
    v.extend((2..=4).map(Symmetric));
    v.extend([Alternating(3), Alternating(4), Quaternion8]);
    let p = CatalogSpec::product;
    v.extend([
        p(Cyclic(2), Cyclic(2)),
        p(Cyclic(2), Cyclic(4)),
        p(Cyclic(3), Cyclic(3)),
        p(Cyclic(2), Quaternion8),
        p(Cyclic(2), Dihedral(4)),
        p(Cyclic(2), Symmetric(3)),
        p(Cyclic(3), Symmetric(3)),
        p(Cyclic(2), Alternating(4)),
        p(Symmetric(3), Symmetric(3)),
        p(Cyclic(2), Symmetric(4)),
    ]);
    v
}

/// Groups of a built-in suite, or `None` for an unknown name.
pub fn suite_groups(suite: &str) -> Option<Vec<SuiteGroup>> {
    use CatalogSpec::*;
    let slow = || {
        [Symmetric(5), Symmetric(6)].map(|spec| SuiteGroup {
            spec,
            slow: true,
            sweep: Sweep::Everything,
        })
    };
    Some(match suite {
        "smoke" => [Symmetric(3), Cyclic(3), Cyclic(4), Quaternion8]
            .into_iter()
            .map(every)
            .collect(),
        "symmetric-pairs" => (3..=6)
            .map(|n| SuiteGroup {
                spec: Symmetric(n),
                slow: n >= 5,
                sweep: Sweep::PointStabilizer,
            })
            .collect(),
        "full" => small_groups().into_iter().map(every).collect(),
        "slow" => slow().to_vec(),
        "all" => {
            let mut v: Vec<SuiteGroup> = small_groups().into_iter().map(every).collect();
            v.extend(slow());
            v
        }
        "outer" => {
            let p = CatalogSpec::product;
            [
                Quaternion8,
                p(Cyclic(2), Cyclic(2)),
                p(Cyclic(3), Cyclic(3)),
                p(Cyclic(4), Cyclic(4)),
                p(Symmetric(3), Symmetric(3)),
            ]
            .into_iter()
            .map(|spec| SuiteGroup {
                spec,
                slow: false,
                sweep: Sweep::Outer,
            })
            .collect()
        }
        "empty" => Vec::new(),
        _ => return None,
    })
}

/// One row of a corpus report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub group: String,
    pub order: usize,
    pub slow: bool,
    pub subgroup: String,
    pub subgroup_order: usize,
    pub theta: String,
    pub theta_stable: bool,
    pub gelfand: bool,
    pub double_cosets: usize,
    pub sigma_unstable: usize,
    pub gk1_applicable: bool,
    pub gk1_equivalent: bool,
    pub gk2_applicable: bool,
    pub gk2_equivalent: bool,
    pub gk3_equivalent: bool,
    pub hecke_checked: bool,
    pub rank_oracle_checked: bool,
    pub failures: Vec<String>,
}

impl CorpusEntry {
    fn from_report(r: &AnalysisReport, slow: bool) -> Self {
        let t = |w| r.theorem(w);
        Self {
            group: r.group.label.clone(),
            order: r.group.order,
            slow,
            subgroup: r.subgroup.label.clone(),
            subgroup_order: r.subgroup.order,
            theta: r.theta.label.clone(),
            theta_stable: r.subgroup.theta_stable,
            gelfand: r.gelfand,
            double_cosets: r.cosets.count,
            sigma_unstable: r.cosets.sigma_unstable,
            gk1_applicable: t(Theorem::GK1).applicable,
            gk1_equivalent: t(Theorem::GK1).equivalent,
            gk2_applicable: t(Theorem::GK2).applicable,
            gk2_equivalent: t(Theorem::GK2).equivalent,
            gk3_equivalent: t(Theorem::GK3).equivalent,
            hecke_checked: r.check("gelfand_oracle").is_some(),
            rank_oracle_checked: r.check("dim_v_rank").is_some(),
            failures: r.failures(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn triple(&self) -> String {
        format!("({}, {}, {})", self.group, self.subgroup, self.theta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub suite: String,
    pub groups: usize,
    pub triples: usize,
    pub failures: usize,
    pub entries: Vec<CorpusEntry>,
}

impl CorpusReport {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    pub fn failed_entries(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter().filter(|e| !e.ok())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CorpusOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub analysis: AnalysisOptions,
}

/// A subgroup or involution with its report label.
pub type Labeled<T> = (String, T);

fn elem_set(h: &Subgroup) -> Vec<usize> {
    h.elements().to_vec()
}

/// Trivial, full and named subgroups, then cyclic subgroups up to
/// conjugacy when `|G| <= 24`, without repeated element sets.
pub fn corpus_subgroups(data: &GroupData, named: &[Labeled<Subgroup>]) -> Vec<Labeled<Subgroup>> {
    let g = &data.group;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let mut push = |label: String, h: Subgroup, out: &mut Vec<Labeled<Subgroup>>| {
        if seen.insert(elem_set(&h)) {
            out.push((label, h));
        }
    };
    push("trivial".into(), Subgroup::trivial(g), &mut out);
    push("full".into(), Subgroup::full(g), &mut out);
    for (name, h) in named {
        push(name.clone(), h.clone(), &mut out);
    }
    if g.order() <= 24 {
        let mut classes: HashSet<Vec<usize>> = HashSet::new();
        for a in g.elements().skip(1) {
            let h = Subgroup::from_generators(g, &[a]).expect("element lies in the group");
            if classes.contains(&elem_set(&h)) {
                continue;
            }
            for x in g.elements() {
                classes.insert(elem_set(&h.conjugate(g, x)));
            }
            push(format!("cyclic<{}>", g.element_label(a)), h, &mut out);
        }
    }
    out
}

fn inner_involutions(data: &GroupData) -> Vec<Labeled<Automorphism>> {
    let g = &data.group;
    g.elements()
        .filter(|&a| g.is_central(g.mul(a, a)))
        .map(|a| {
            let t = automorphism_from_spec(g, &ThetaSpec::Conjugation(a))
                .expect("g^2 central gives an involution");
            (format!("conj({})", g.element_label(a)), t)
        })
        .collect()
}

/// Identity, inversion when abelian and every involutive inner
/// automorphism, without repeated maps.
pub fn corpus_thetas(data: &GroupData) -> Vec<Labeled<Automorphism>> {
    let g = &data.group;
    let mut candidates = vec![("identity".to_string(), Automorphism::identity(g))];
    if g.is_abelian() {
        let inv = automorphism_from_spec(g, &ThetaSpec::Inversion).expect("abelian");
        candidates.push(("inversion".to_string(), inv));
    }
    candidates.extend(inner_involutions(data));
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    candidates
        .into_iter()
        .filter(|(_, t)| seen.insert(t.map().to_vec()))
        .collect()
}

/// Named involutions that are neither inner nor inversion.
pub fn outer_thetas(
    data: &GroupData,
    named: &[Labeled<Automorphism>],
) -> Vec<Labeled<Automorphism>> {
    let mut seen: HashSet<Vec<usize>> = corpus_thetas(data)
        .into_iter()
        .map(|(_, t)| t.map().to_vec())
        .collect();
    named
        .iter()
        .filter(|(_, t)| seen.insert(t.map().to_vec()))
        .cloned()
        .collect()
}

type Triples = (
    GroupData,
    Vec<Labeled<Subgroup>>,
    Vec<Labeled<Automorphism>>,
);

fn group_triples(sg: &SuiteGroup) -> Result<Triples, Error> {
    let entry = catalog_group(&sg.spec)?;
    let data = GroupData::new(sg.spec.to_string(), entry.group.clone())?;
    match sg.sweep {
        Sweep::PointStabilizer => {
            let h = entry
                .subgroup("point-stabilizer")
                .cloned()
                .unwrap_or_else(|| Subgroup::trivial(&data.group));
            let id = Automorphism::identity(&data.group);
            Ok((
                data,
                vec![("point-stabilizer".into(), h)],
                vec![("identity".into(), id)],
            ))
        }
        Sweep::Everything | Sweep::Outer => {
            let named_thetas: Vec<Labeled<Automorphism>> = entry
                .thetas
                .iter()
                .map(|(n, s)| automorphism_from_spec(&data.group, s).map(|t| (n.clone(), t)))
                .collect::<Result<_, _>>()?;
            let subs = corpus_subgroups(&data, &entry.subgroups);
            let thetas = if sg.sweep == Sweep::Outer {
                outer_thetas(&data, &named_thetas)
            } else {
                corpus_thetas(&data)
            };
            Ok((data, subs, thetas))
        }
    }
}

fn run_groups(
    suite: &str,
    groups: &[SuiteGroup],
    options: CorpusOptions,
) -> Result<CorpusReport, Error> {
    let per_group: Vec<Vec<CorpusEntry>> = groups
        .par_iter()
        .map(|sg| -> Result<Vec<CorpusEntry>, Error> {
            let (data, subs, thetas) = group_triples(sg)?;
            let pairs: Vec<(&Labeled<Subgroup>, &Labeled<Automorphism>)> = subs
                .iter()
                .flat_map(|s| thetas.iter().map(move |t| (s, t)))
                .collect();
            pairs
                .par_iter()
                .map(|((hl, h), (tl, t))| {
                    analyze_with(&data, h, hl, t, tl, options.analysis)
                        .map(|r| CorpusEntry::from_report(&r, sg.slow))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let entries: Vec<CorpusEntry> = per_group.into_iter().flatten().collect();
    Ok(CorpusReport {
        suite: suite.to_string(),
        groups: groups.len(),
        triples: entries.len(),
        failures: entries.iter().filter(|e| !e.ok()).count(),
        entries,
    })
}

/// Runs a built-in suite. `Ok(None)` means the suite name is unknown.
pub fn run_corpus(suite: &str) -> Result<Option<CorpusReport>, Error> {
    run_corpus_with(suite, CorpusOptions::default())
}

pub fn run_corpus_with(suite: &str, options: CorpusOptions) -> Result<Option<CorpusReport>, Error> {
    let Some(groups) = suite_groups(suite) else {
        return Ok(None);
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| run_groups(suite, &groups, options))
        .map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite() {
        let r = run_corpus("empty").unwrap().unwrap();
        assert_eq!((r.triples, r.failures), (0, 0));
        assert!(run_corpus("nope").unwrap().is_none());
    }

    #[test]
    fn smoke_suite() {
        let r = run_corpus("smoke").unwrap().unwrap();
        assert!(r.triples > 0);
        let bad: Vec<_> = r
            .failed_entries()
            .map(|e| format!("{} {:?}", e.triple(), e.failures))
            .collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn outer_suite_only_breaks_gk3_off_stable_subgroups() {
        let r = run_corpus("outer").unwrap().unwrap();
        assert!(r.failures > 0);
        for e in r.failed_entries() {
            assert!(!e.theta_stable, "{}", e.triple());
            assert_eq!(e.failures.len(), 1, "{} {:?}", e.triple(), e.failures);
            assert!(
                e.failures[0].starts_with("GK3: cond1 false"),
                "{:?}",
                e.failures
            );
        }
        assert!(r
            .failed_entries()
            .any(|e| e.group == "quaternion8" && e.subgroup == "i" && e.theta == "swap_ij"));
    }

    #[test]
    fn s4_sweep_sets() {
        let sg = every(CatalogSpec::Symmetric(4));
        let (_, subs, thetas) = group_triples(&sg).unwrap();
        // trivial, full, point stabilizer S3, A4, cyclic of orders 2 (two
        // classes), 3 and 4
        assert_eq!(
            subs.len(),
            8,
            "{:?}",
            subs.iter().map(|s| &s.0).collect::<Vec<_>>()
        );
        // identity plus conjugation by the 9 non-identity involutions
        assert_eq!(thetas.len(), 10);
    }
}
