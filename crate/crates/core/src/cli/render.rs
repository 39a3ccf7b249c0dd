//! Text and JSON renderings of reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::criteria::corpus::CorpusReport;
use crate::criteria::AnalysisReport;

/// Pretty JSON with object keys sorted (serde_json's default map is ordered
/// by key).
pub fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "  {}", line(header.to_vec())).unwrap();
    for r in rows {
        writeln!(out, "  {}", line(r.iter().map(String::as_str).collect())).unwrap();
    }
}

pub fn analysis_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let g = &r.group;
    writeln!(
        out,
        "group     {}  order {}  exponent {}  classes {}  prime {}",
        g.label, g.order, g.exponent, g.class_count, g.prime
    )
    .unwrap();
    writeln!(out, "          class sizes {}", join(&g.class_sizes, " ")).unwrap();
    writeln!(
        out,
        "subgroup  {}  order {}  theta-stable {}",
        r.subgroup.label,
        r.subgroup.order,
        yes_no(r.subgroup.theta_stable)
    )
    .unwrap();
    writeln!(
        out,
        "theta     {}  fixed points {}  theta(g) = g^-1 for {} elements",
        r.theta.label, r.theta.fixed_points, r.theta.twisted_involutions
    )
    .unwrap();
    writeln!(out, "gelfand   {}", yes_no(r.gelfand)).unwrap();

    writeln!(out, "\nirreducible characters").unwrap();
    let rows: Vec<Vec<String>> = r
        .profiles
        .iter()
        .map(|p| {
            vec![
                p.irrep.to_string(),
                p.degree.to_string(),
                p.dim_h.to_string(),
                p.dim_theta_h.to_string(),
                p.epsilon.to_string(),
                p.partner.to_string(),
                yes_no(p.distinguished).to_string(),
            ]
        })
        .collect();
    table(
        &mut out,
        &[
            "irrep",
            "degree",
            "dim_H",
            "dim_thetaH",
            "epsilon",
            "partner",
            "distinguished",
        ],
        &rows,
    );

    let c = &r.cosets;
    writeln!(out, "\ndouble cosets H\\G/theta(H)").unwrap();
    writeln!(out, "  count {}  sizes {}", c.count, join(&c.sizes, " ")).unwrap();
    writeln!(
        out,
        "  sigma-fixed {}  sigma-unstable {}  |H\\G/H| {}",
        c.sigma_fixed, c.sigma_unstable, c.hecke_dimension
    )
    .unwrap();

    writeln!(out, "\nidentities").unwrap();
    let rows: Vec<Vec<String>> = r
        .checks
        .iter()
        .map(|c| {
            vec![
                if c.ok { "ok" } else { "FAIL" }.to_string(),
                c.name.clone(),
                format!("{} = {}", c.lhs, c.rhs),
            ]
        })
        .collect();
    table(&mut out, &["status", "name", "lhs = rhs"], &rows);

    writeln!(out, "\ntheorems").unwrap();
    let rows: Vec<Vec<String>> = r
        .theorems
        .iter()
        .map(|t| {
            let status = match (t.applicable, t.equivalent) {
                (true, true) => "equivalent",
                (true, false) => "FAIL",
                (false, _) => "not applicable",
            };
            vec![
                t.which.to_string(),
                status.to_string(),
                t.cond1.to_string(),
                t.cond2.to_string(),
                t.hypothesis_detail.clone(),
            ]
        })
        .collect();
    table(
        &mut out,
        &["which", "status", "cond1", "cond2", "hypothesis"],
        &rows,
    );

    let failures = r.failures();
    if failures.is_empty() {
        writeln!(out, "\nverdict   ok").unwrap();
    } else {
        writeln!(out, "\nverdict   {} failure(s)", failures.len()).unwrap();
        for f in failures {
            writeln!(out, "  {f}").unwrap();
        }
    }
    out
}

fn verdict(applicable: bool, equivalent: bool) -> &'static str {
    match (applicable, equivalent) {
        (false, _) => "-",
        (true, true) => "eq",
        (true, false) => "NEQ",
    }
}

pub fn corpus_text(r: &CorpusReport) -> String {
    let mut out = String::new();
    for e in &r.entries {
        writeln!(
            out,
            "{:<4} {}  gelfand {}  GK1 {}  GK2 {}  GK3 {}{}",
            if e.ok() { "ok" } else { "FAIL" },
            e.triple(),
            yes_no(e.gelfand),
            verdict(e.gk1_applicable, e.gk1_equivalent),
            verdict(e.gk2_applicable, e.gk2_equivalent),
            verdict(true, e.gk3_equivalent),
            if e.slow { "  [slow]" } else { "" },
        )
        .unwrap();
    }
    let failed: Vec<_> = r.failed_entries().collect();
    if !failed.is_empty() {
        writeln!(out, "\nfailures").unwrap();
        for e in failed {
            writeln!(out, "  {}", e.triple()).unwrap();
            for f in &e.failures {
                writeln!(out, "    {f}").unwrap();
            }
        }
    }
    writeln!(
        out,
        "\nsuite {}: {} groups, {} triples, {} failures",
        r.suite, r.groups, r.triples, r.failures
    )
    .unwrap();
    out
}
