//! The `weylkit` command line.
//!
//! Exit codes: 0 on success, 1 when a scheme fails validation or a verdict
//! is negative or inconclusive, 2 on usage errors.

pub mod dot;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylkit::classify::{
    appendix_table, classify, decide, Caps, ClassificationRecord, Decision, Infinite, SearchOptions,
    SearchSpace,
};
use weylkit::coxeter::identify_coxeter_type;
use weylkit::groupoid::{generate_groupoid, DEFAULT_HOM_CAP};
use weylkit::io::{parse_raw_scheme, parse_scheme, scheme_to_json, scheme_to_value};
use weylkit::roots::DEFAULT_ROOT_CAP;
use weylkit::scheme::{format_partition, schemes_equivalent};
use weylkit::CartanScheme;

pub use dot::emit_dot;

#[derive(Debug, Parser)]
#[command(name = "weylkit", version, about = "Cartan schemes, Weyl groupoids and finite root systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Cartan scheme axioms.
    Validate { file: PathBuf },
    /// Compute the real-root closure and decide finiteness.
    Roots {
        file: PathBuf,
        /// Positive roots per object before giving up.
        #[arg(long, env = "WEYLKIT_CAP")]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Generate the Weyl groupoid.
    Groupoid {
        file: PathBuf,
        /// Morphisms per hom-set before giving up.
        #[arg(long, env = "WEYLKIT_CAP")]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print the object change diagram.
    Diagram {
        file: PathBuf,
        /// Write Graphviz output to this path (`-` for standard output).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Restrict to a subset of the indices (1-based) and print the scheme.
    Restrict {
        file: PathBuf,
        #[arg(required = true)]
        indices: Vec<usize>,
    },
    /// Print the finest decomposition of the index set.
    Decompose { file: PathBuf },
    /// Exhaustive bounded search for finite Weyl groupoids.
    Classify {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        objects: usize,
        /// Off-diagonal entries range over 0, -1, ..., -bound.
        #[arg(long, default_value_t = 8)]
        bound: i64,
        /// For two objects, the number of reflections swapping them.
        #[arg(long)]
        kappa: Option<usize>,
        /// Worker threads (0 for one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Keep records with decomposable Cartan matrices.
        #[arg(long)]
        keep: bool,
        /// Positive roots per object before a candidate counts as inconclusive.
        #[arg(long, env = "WEYLKIT_CAP")]
        cap: Option<usize>,
    },
    /// Print the table of non-standard finite Weyl groupoids on at most
    /// three objects.
    Table,
    /// Decide whether two schemes are equivalent.
    Equiv { first: PathBuf, second: PathBuf },
}

/// A failed command: exit code and message.
struct Failure(i32, String);

type Outcome = Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(1, msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<CartanScheme, Failure> {
    parse_scheme(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

/// Parses `args` (program name first) and runs the command, writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let stream: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(stream, "{text}");
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure(1, format!("write failed: {e}")))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Roots { file, cap, format } => roots(&file, cap.unwrap_or(DEFAULT_ROOT_CAP), format, out),
        Command::Groupoid { file, cap, format } => {
            groupoid(&file, cap.unwrap_or(DEFAULT_HOM_CAP), format, out)
        }
        Command::Diagram { file, dot } => diagram(&file, dot.as_deref(), out),
        Command::Restrict { file, indices } => {
            let s = load(&file)?;
            if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > s.rank()) {
                return Err(usage(format!("index {bad} is not in 1..={}", s.rank())));
            }
            let zero_based: Vec<usize> = indices.iter().map(|i| i - 1).collect();
            let r = s.restrict(&zero_based).map_err(|e| usage(e.to_string()))?;
            write_out(out, &scheme_to_json(&r))?;
            Ok(0)
        }
        Command::Decompose { file } => {
            let s = load(&file)?;
            write_out(out, &format!("{}\n", format_partition(&s.decompose())))?;
            Ok(0)
        }
        Command::Classify { rank, objects, bound, kappa, jobs, format, keep, cap } => {
            if rank == 0 || objects == 0 || bound < 0 {
                return Err(usage("rank and objects must be positive and bound non-negative"));
            }
            if kappa.is_some_and(|k| objects != 2 || k == 0 || k > rank) {
                return Err(usage("--kappa needs --objects 2 and 1 <= kappa <= rank"));
            }
            let mut space = SearchSpace::new(rank, objects, bound);
            space.kappa = kappa;
            let caps = Caps { roots: cap.unwrap_or(DEFAULT_ROOT_CAP), ..Caps::default() };
            let options = SearchOptions { caps, jobs, keep_reducible: keep, reverse: false };
            let report = classify(&space, &options);
            match format {
                TableFormat::Csv => write_out(out, &report.to_string())?,
                TableFormat::Json => {
                    let records: Vec<Value> = report.records.iter().map(record_json).collect();
                    let value = json!({
                        "cells": report.cells(),
                        "inconclusive": report.inconclusive(),
                        "raw_count": report.raw_count(),
                        "records": records,
                    });
                    write_out(out, &format!("{}\n", serde_json::to_string_pretty(&value).unwrap()))?;
                }
            }
            let _ = writeln!(
                err,
                "{} records from {} finite candidates in {} cells; {} inconclusive",
                report.records.len(),
                report.raw_count(),
                report.cells(),
                report.inconclusive()
            );
            Ok(if report.inconclusive() == 0 { 0 } else { 1 })
        }
        Command::Table => {
            let rows = appendix_table().map_err(|e| invalid(e.to_string()))?;
            let mut text = String::from("scheme\t|A|\t|I|\t|W|\t|R+|\tHom(a)\n");
            for row in rows {
                text.push_str(&format!("{row}\n"));
            }
            write_out(out, &text)?;
            Ok(0)
        }
        Command::Equiv { first, second } => {
            let s = load(&first)?;
            let t = load(&second)?;
            match schemes_equivalent(&s, &t) {
                Ok(Some(w)) => {
                    let indices: Vec<String> = w
                        .index_map
                        .iter()
                        .enumerate()
                        .map(|(i, j)| format!("{}->{}", i + 1, j + 1))
                        .collect();
                    let objects: Vec<String> = w
                        .object_map
                        .iter()
                        .enumerate()
                        .map(|(a, &b)| format!("{}->{}", s.object_name(a), t.object_name(b)))
                        .collect();
                    write_out(
                        out,
                        &format!(
                            "equivalent: indices {}; objects {}\n",
                            indices.join(" "),
                            objects.join(" ")
                        ),
                    )?;
                    Ok(0)
                }
                Ok(None) => {
                    write_out(out, "not equivalent\n")?;
                    Ok(1)
                }
                Err(e) => {
                    write_out(out, &format!("not equivalent: {e}\n"))?;
                    Ok(1)
                }
            }
        }
    }
}

fn validate(file: &Path, out: &mut dyn Write) -> Outcome {
    let raw = parse_raw_scheme(&read(file)?).map_err(|e| invalid(format!("{}: {e}", file.display())))?;
    match raw.validate() {
        Ok(s) => {
            let k = s.object_count();
            let line = format!(
                "ok: {}, {}, rank {}, {k} object{}\n",
                if s.is_connected() { "connected" } else { "not connected" },
                if s.is_standard() { "standard" } else { "non-standard" },
                s.rank(),
                if k == 1 { "" } else { "s" }
            );
            write_out(out, &line)?;
            Ok(0)
        }
        Err(e) => {
            write_out(out, &format!("invalid: {e}\n"))?;
            Ok(1)
        }
    }
}

fn roots(file: &Path, cap: usize, format: TextFormat, out: &mut dyn Write) -> Outcome {
    let s = load(file)?;
    let caps = Caps { roots: cap, ..Caps::default() };
    let decision = decide(&s, &caps);
    let (verdict, detail) = match &decision {
        Decision::Finite(_) => ("finite", None),
        Decision::NotFinite(Infinite::Witness(w)) => ("not finite", Some(w.to_string())),
        Decision::NotFinite(Infinite::Loop(l)) => {
            let word: Vec<String> = l.word.iter().map(|i| (i + 1).to_string()).collect();
            let detail = format!(
                "the loop [{}] at object {} has infinite order",
                word.join(","),
                s.object_name(l.object)
            );
            ("not finite", Some(detail))
        }
        Decision::Inconclusive => ("inconclusive", Some(format!("more than {cap} positive roots"))),
    };
    match format {
        TextFormat::Text => {
            let mut text = format!("{verdict}\n");
            if let Some(d) = &detail {
                text.push_str(&format!("{d}\n"));
            }
            if let Decision::Finite(r) = &decision {
                for a in 0..s.object_count() {
                    text.push_str(&format!(
                        "{} ({}): {}\n",
                        s.object_name(a),
                        r.positive_count(a),
                        r.formatted_positive(a).join(", ")
                    ));
                }
            }
            write_out(out, &text)?;
        }
        TextFormat::Json => {
            let mut value = json!({ "verdict": verdict });
            if let Some(d) = &detail {
                value["witness"] = json!(d);
            }
            if let Decision::Finite(r) = &decision {
                let mut objects = serde_json::Map::new();
                for a in 0..s.object_count() {
                    objects.insert(s.object_name(a).to_string(), json!(r.positive_roots(a)));
                }
                value["positive_roots"] = Value::Object(objects);
            }
            write_out(out, &format!("{}\n", serde_json::to_string_pretty(&value).unwrap()))?;
        }
    }
    Ok(if matches!(decision, Decision::Finite(_)) { 0 } else { 1 })
}

fn groupoid(file: &Path, cap: usize, format: TextFormat, out: &mut dyn Write) -> Outcome {
    let s = load(file)?;
    let w = generate_groupoid(&s, cap);
    let k = s.object_count();
    if !w.is_finite() {
        let text = match format {
            TextFormat::Text => {
                format!("status: cap exceeded (more than {cap} morphisms in a hom-set)\n")
            }
            TextFormat::Json => {
                format!("{}\n", serde_json::to_string_pretty(&json!({"status": "cap-exceeded"})).unwrap())
            }
        };
        write_out(out, &text)?;
        return Ok(1);
    }
    let name = |a: usize| s.object_name(a).to_string();
    let total = w.total_size().ok();
    match format {
        TextFormat::Text => {
            let mut text = String::from("status: finite\n");
            for a in 0..k {
                for b in 0..k {
                    text.push_str(&format!(
                        "|Hom({}, {})| = {}\n",
                        name(a),
                        name(b),
                        w.hom_size(a, b).unwrap()
                    ));
                }
            }
            match total {
                Some(t) => text.push_str(&format!("total: {t}\n")),
                None => text.push_str("total: not connected\n"),
            }
            for a in 0..k {
                let g = w.stabilizer(a).unwrap();
                text.push_str(&format!(
                    "Hom({}): order {}, type {}, max length {}\n",
                    name(a),
                    g.order(),
                    identify_coxeter_type(&g).label(),
                    w.max_length_from(a).unwrap()
                ));
            }
            write_out(out, &text)?;
        }
        TextFormat::Json => {
            let mut hom = serde_json::Map::new();
            let mut stabilizers = serde_json::Map::new();
            for a in 0..k {
                let row: serde_json::Map<String, Value> =
                    (0..k).map(|b| (name(b), json!(w.hom_size(a, b).unwrap()))).collect();
                hom.insert(name(a), Value::Object(row));
                let g = w.stabilizer(a).unwrap();
                stabilizers.insert(
                    name(a),
                    json!({
                        "order": g.order(),
                        "type": identify_coxeter_type(&g).label(),
                        "max_length": w.max_length_from(a).unwrap(),
                    }),
                );
            }
            let value = json!({
                "status": "finite",
                "hom": hom,
                "total": total,
                "stabilizers": stabilizers,
            });
            write_out(out, &format!("{}\n", serde_json::to_string_pretty(&value).unwrap()))?;
        }
    }
    Ok(0)
}

fn diagram(file: &Path, dot: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let s = load(file)?;
    let d = s.object_change_diagram();
    match dot {
        None => write_out(out, &format!("{}\n", d.signature()))?,
        Some(p) if p == Path::new("-") => write_out(out, &emit_dot(&d))?,
        Some(p) => {
            fs::write(p, emit_dot(&d)).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?
        }
    }
    Ok(0)
}

fn record_json(r: &ClassificationRecord) -> Value {
    json!({
        "objects": r.objects,
        "rank": r.rank,
        "groupoid_size": r.groupoid_size,
        "positive_roots": r.positive_roots,
        "stabilizer": r.stabilizer_type,
        "stabilizer_order": r.stabilizer_order,
        "standard": r.standard,
        "diagram": r.diagram,
        "source_cell": r.source_cell,
        "scheme": scheme_to_value(&r.scheme),
    })
}
