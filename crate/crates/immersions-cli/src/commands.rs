//! Subcommand implementations and the usage/runtime error split that the
//! process exit code reports (0 ok, 1 failure, 2 usage).

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use immersions_core::census::verify::{run_check, CheckStatus, CHECK_NAMES};
use immersions_core::census::{count_classes, CensusError, ColourMode, Method};
use immersions_core::encodings::{diagram_from_z, ZCode};
use immersions_core::{perm_rank, Perm};

use crate::cache::Cache;
use crate::catalog::{assemble, raw_records, route_for_kind, CatalogRecord, Route};
use crate::opts::{Cli, Command, CountArgs, ExportArgs, Format, ListArgs, VerifyArgs};

/// An error caused by the invocation, not the computation; exits with
/// code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

/// Envelope and routing refusals reflect a bad request; everything else is
/// a runtime failure.
fn classify(err: CensusError) -> anyhow::Error {
    match err {
        CensusError::OutOfEnvelope { .. } | CensusError::Unsupported(_) => {
            usage(err.to_string())
        }
        other => anyhow::Error::new(other),
    }
}

fn writer_to(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        None => Box::new(std::io::stdout().lock()),
        Some(path) => Box::new(BufWriter::new(
            fs::File::create(path)
                .with_context(|| format!("creating output file {}", path.display()))?,
        )),
    })
}

pub fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::List(args) => cmd_list(args),
        Command::Verify(args) => cmd_verify(args),
        Command::ExportDiagrams(args) => cmd_export(args),
    }
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

fn cmd_count(args: CountArgs) -> Result<u8> {
    if args.n.lo == 0 {
        return Err(usage("crossing counts start at 1"));
    }
    let cfg = args.engine.census_config();
    let mut rows: Vec<(String, usize, Option<usize>, String)> = Vec::new();
    for n in args.n.iter() {
        let table = count_classes(args.kind, n, args.g, args.frobenius, args.filter(), &cfg)
            .map_err(classify)?;
        for row in &table.rows {
            rows.push((
                args.kind.to_string_code(),
                n,
                row.genus,
                row.count.to_string(),
            ));
        }
    }

    let mut w = writer_to(args.out.as_deref())?;
    match args.format {
        Format::Text => {
            let count_width = rows.iter().map(|r| r.3.len()).max().unwrap_or(5).max(5);
            writeln!(w, "{:<5} {:>3} {:>5} {:>count_width$}", "kind", "n", "genus", "count")?;
            for (kind, n, genus, count) in &rows {
                let genus = genus.map_or("all".to_string(), |g| g.to_string());
                writeln!(w, "{kind:<5} {n:>3} {genus:>5} {count:>count_width$}")?;
            }
        }
        Format::Csv => {
            writeln!(w, "kind,n,g,count")?;
            for (kind, n, genus, count) in &rows {
                let genus = genus.map_or(String::new(), |g| g.to_string());
                writeln!(w, "{kind},{n},{genus},{count}")?;
            }
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|(kind, n, genus, count)| {
                    serde_json::json!({"kind": kind, "n": n, "g": genus, "count": count})
                })
                .collect();
            serde_json::to_writer_pretty(&mut w, &objects)?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

fn cmd_list(args: ListArgs) -> Result<u8> {
    if args.n.lo == 0 {
        return Err(usage("crossing counts start at 1"));
    }
    let route_of = |n_genus: Option<usize>| -> Result<Route> {
        match (args.method, args.kind) {
            (Some(method), None) => Ok(Route {
                method,
                quotient: &[],
            }),
            (None, Some(kind)) => Ok(route_for_kind(kind, n_genus)),
            _ => Err(usage("pass exactly one of --kind or --method")),
        }
    };
    let cfg = args.engine.census_config();
    let cache = match &args.cache_dir {
        Some(dir) => Some(Cache::new(dir)?),
        None => None,
    };

    let mut records: Vec<CatalogRecord> = Vec::new();
    for n in args.n.iter() {
        let route = route_of(args.g)?;
        let raws = match cache.as_ref().and_then(|c| c.load(route.method, n)) {
            Some(raws) => raws,
            None => {
                let raws = raw_records(route.method, n, &cfg).map_err(classify)?;
                if let Some(c) = &cache {
                    c.store(route.method, n, &raws)?;
                }
                raws
            }
        };
        records.extend(assemble(route, n, &raws, args.g, args.filter()).map_err(classify)?);
    }

    let mut w = writer_to(args.out.as_deref())?;
    for record in &records {
        serde_json::to_writer(&mut w, record)?;
        writeln!(w)?;
    }
    w.flush()?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let mut w = writer_to(args.out.as_deref())?;
    if args.list_checks {
        for name in CHECK_NAMES {
            writeln!(w, "{name}")?;
        }
        w.flush()?;
        return Ok(0);
    }

    let mut selected: Vec<&str> = Vec::new();
    if args.theorem4 {
        selected.extend(["coloured-rotation-halving", "parity-identities"]);
    }
    if args.sumrules {
        selected.extend(["totals-match-orbit-sums", "universe-partition"]);
    }
    for name in &args.check {
        if !CHECK_NAMES.contains(&name.as_str()) {
            return Err(usage(format!(
                "unknown check `{name}`; run `immersions verify --list-checks`"
            )));
        }
        selected.push(name.as_str());
    }
    let run_all = selected.is_empty();

    let cfg = args.engine.census_config();
    let max_n = args.n.hi;
    let mut failed = 0usize;
    let mut outcomes = Vec::new();
    for name in CHECK_NAMES {
        if !run_all && !selected.contains(&name) {
            continue;
        }
        let outcome = run_check(name, max_n, &cfg).expect("listed check name");
        if outcome.status == CheckStatus::Failed {
            failed += 1;
        }
        outcomes.push(outcome);
    }

    match args.format {
        Format::Text => {
            for o in &outcomes {
                let tag = match o.status {
                    CheckStatus::Passed => "PASS",
                    CheckStatus::Failed => "FAIL",
                    CheckStatus::Skipped => "SKIP",
                };
                writeln!(w, "[{tag}] {} — {}", o.name, o.detail)?;
            }
            let status = if failed == 0 { "ok" } else { "FAILED" };
            writeln!(
                w,
                "verify {status}: {} checks, {} failed (n up to {max_n})",
                outcomes.len(),
                failed
            )?;
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "name": o.name,
                        "status": match o.status {
                            CheckStatus::Passed => "passed",
                            CheckStatus::Failed => "failed",
                            CheckStatus::Skipped => "skipped",
                        },
                        "detail": o.detail,
                    })
                })
                .collect();
            serde_json::to_writer_pretty(&mut w, &objects)?;
            writeln!(w)?;
        }
        Format::Csv => {
            return Err(usage("verify reports as text or json, not csv"));
        }
    }
    w.flush()?;
    Ok(if failed == 0 { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// export-diagrams
// ---------------------------------------------------------------------------

fn cmd_export(args: ExportArgs) -> Result<u8> {
    if args.n.lo == 0 {
        return Err(usage("crossing counts start at 1"));
    }
    if args.kind.colour != ColourMode::Plain {
        return Err(usage(
            "diagrams are exported for the plain kinds (oo, uo, ou, uu)",
        ));
    }
    let cfg = args.engine.census_config();
    fs::create_dir_all(&args.out)
        .with_context(|| format!("creating output directory {}", args.out.display()))?;

    let mut written = 0usize;
    for n in args.n.iter() {
        // Diagrams are derived from visit-order codes, so the listing is
        // routed through the visit-order engine for every genus.
        let route = route_for_kind(args.kind, None);
        debug_assert_eq!(route.method, Method::Z);
        let raws = raw_records(route.method, n, &cfg).map_err(classify)?;
        let records = assemble(route, n, &raws, args.g, None).map_err(classify)?;
        for record in &records {
            let pi = Perm::from_one_line(&record.rep).expect("catalog reps are permutations");
            let rank = perm_rank(&pi);
            let code = ZCode::new(n, pi).expect("visit-order reps are valid codes");
            let diagram = diagram_from_z(&code);
            let name = format!(
                "{}_n{}_g{}_r{}.json",
                args.kind.to_string_code(),
                n,
                record.g,
                rank
            );
            let path = args.out.join(&name);
            let mut payload = serde_json::to_string_pretty(&diagram)?;
            payload.push('\n');
            fs::write(&path, payload)
                .with_context(|| format!("writing {}", path.display()))?;
            written += 1;
        }
    }
    println!("wrote {written} diagram files to {}", args.out.display());
    Ok(0)
}
