//! Command-line front end: `analyze`, `corpus` and `catalog`.
//!
//! Exit status 0 means every check passed, 1 means a check failed and 2
//! means the input could not be used.

pub mod input;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::criteria::corpus::{run_corpus_with, CorpusOptions, SUITES};
use crate::criteria::{analyze, GroupData};
use crate::group::{
    catalog_families, catalog_group_with_guard, conjugacy_classes, CatalogSpec, DEFAULT_MAX_ORDER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "gelfand",
    version,
    about = "Check Gelfand-Kazhdan type criteria on finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one (G, H, theta) triple read from a JSON file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Refuse groups larger than this.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Run a built-in corpus of triples.
    Corpus {
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Inspect the group catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List catalog families and the built-in suites.
    List,
    /// Show order, exponent, classes, named subgroups and involutions.
    Describe {
        name: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    execute(cli.command, out, err)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match command {
        Command::Analyze {
            input,
            format,
            max_order,
        } => command_analyze(&input, format, max_order, out, err),
        Command::Corpus {
            suite,
            format,
            jobs,
        } => command_corpus(&suite, format, jobs, out, err),
        Command::Catalog { action } => command_catalog(action, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn command_analyze(
    path: &std::path::Path,
    format: Format,
    max_order: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let parsed = match input::parse_input(path, max_order) {
        Ok(p) => p,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_INPUT_ERROR);
        }
    };
    let report = GroupData::new(parsed.group_label.clone(), parsed.group.clone()).and_then(|d| {
        analyze(
            &d,
            &parsed.subgroup,
            &parsed.subgroup_label,
            &parsed.theta,
            &parsed.theta_label,
        )
    });
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            // an internal oracle disagreed: a failed check, not bad input
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_CHECK_FAILED);
        }
    };
    match format {
        Format::Json => out.write_all(render::json(&report).as_bytes())?,
        Format::Text => out.write_all(render::analysis_text(&report).as_bytes())?,
    }
    Ok(if report.ok() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn command_corpus(
    suite: &str,
    format: Format,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let options = CorpusOptions {
        jobs,
        ..CorpusOptions::default()
    };
    let report = match run_corpus_with(suite, options) {
        Ok(Some(r)) => r,
        Ok(None) => {
            writeln!(
                err,
                "error: unknown suite `{suite}` (known: {})",
                SUITES.join(", ")
            )?;
            return Ok(EXIT_INPUT_ERROR);
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_CHECK_FAILED);
        }
    };
    match format {
        Format::Json => out.write_all(render::json(&report).as_bytes())?,
        Format::Text => out.write_all(render::corpus_text(&report).as_bytes())?,
    }
    Ok(if report.ok() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn command_catalog(
    action: CatalogAction,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    match action {
        CatalogAction::List => {
            writeln!(out, "families")?;
            for (name, about) in catalog_families() {
                writeln!(out, "  {name:<22} {about}")?;
            }
            writeln!(out, "suites")?;
            writeln!(out, "  {}", SUITES.join(" "))?;
            Ok(EXIT_OK)
        }
        CatalogAction::Describe { name, max_order } => {
            let entry = name
                .parse::<CatalogSpec>()
                .and_then(|spec| catalog_group_with_guard(&spec, max_order));
            let entry = match entry {
                Ok(e) => e,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT_ERROR);
                }
            };
            let g = &entry.group;
            let classes = conjugacy_classes(g);
            writeln!(out, "name       {}", entry.spec)?;
            writeln!(out, "order      {}", g.order())?;
            writeln!(out, "exponent   {}", g.exponent())?;
            writeln!(
                out,
                "abelian    {}",
                if g.is_abelian() { "yes" } else { "no" }
            )?;
            writeln!(out, "degree     {}", g.degree().unwrap_or(0))?;
            writeln!(out, "classes    {}", classes.class_count())?;
            let gens: Vec<String> = g.generators().iter().map(|&a| g.element_label(a)).collect();
            writeln!(out, "generators {}", gens.join(" "))?;
            writeln!(out, "subgroups")?;
            for (n, h) in &entry.subgroups {
                let gens: Vec<String> =
                    h.generators().iter().map(|&a| g.element_label(a)).collect();
                writeln!(
                    out,
                    "  {n:<18} order {:<4} generated by {}",
                    h.order(),
                    gens.join(" ")
                )?;
            }
            writeln!(out, "thetas")?;
            for (n, t) in &entry.thetas {
                writeln!(out, "  {n:<18} {t}")?;
            }
            Ok(EXIT_OK)
        }
    }
}
