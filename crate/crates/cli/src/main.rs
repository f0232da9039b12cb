//! Command-line surface for exact expansion analysis in non-integer bases:
//! expansion generation, cardinality classification, identity verification,
//! parameter sweeps, and branching-tree export.

mod spec;

use std::fmt::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use beta_branch::branching::{
    build_state_graph, classify_paths, export_tree, graph_json, tree_to_dot, Answer, Cardinality,
    Membership, TreeMode,
};
use beta_branch::constants;
use beta_branch::expansions::{greedy_lazy, is_unique, Base, Mode, Uniqueness};
use beta_branch::{Error, Result};

const DEFAULT_MAX_STATES: usize = 20_000;
const ENV_MAX_STATES: &str = "BETA_BRANCH_MAX_STATES";

#[derive(Parser)]
#[command(
    name = "beta-branch",
    version,
    about = "Exact analysis of binary expansions in non-integer bases q in (1,2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandMode {
    Greedy,
    Lazy,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeModeArg {
    Full,
    Infinite,
    Continuum,
}

#[derive(Subcommand)]
enum Command {
    /// List the named algebraic bases with their defining relations
    Constants {
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Print greedy or lazy expansion digits of a point
    Expand {
        #[arg(long)]
        base: String,
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value = "greedy")]
        mode: ExpandMode,
        #[arg(long, default_value_t = 32)]
        digits: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Classify the number of expansions of a point
    Classify {
        #[arg(long)]
        base: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        max_states: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Decide whether a point has a unique expansion
    Unique {
        #[arg(long)]
        base: String,
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Export the branching tree (DOT) or the orbit graph (JSON)
    Tree {
        #[arg(long)]
        base: String,
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value = "full")]
        mode: TreeModeArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long)]
        max_states: Option<usize>,
        #[arg(long, value_enum, default_value = "dot")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Re-derive the identities and inequality windows
    Verify {
        /// Item id: Prop3.2, Lemma3.3, Prop3.4, Prop3.5, or Alpha
        #[arg(long, conflicts_with = "all")]
        item: Option<String>,
        /// Run the whole default suite
        #[arg(long)]
        all: bool,
        /// Base for the base-parameterized items
        #[arg(long)]
        base: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Detect q null infinite points
    NullInfinite {
        #[arg(long)]
        base: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        max_states: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Decide membership in the countably-infinite base set
    Membership {
        #[arg(long)]
        base: String,
        #[arg(long)]
        max_states: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<String>,
    },
    /// Classify every (base, point) pair and emit CSV
    Sweep {
        /// Base spec; repeat the flag for several bases
        #[arg(long = "base", required = true)]
        bases: Vec<String>,
        /// Point spec; repeat the flag for several points
        #[arg(long = "x", required = true)]
        points: Vec<String>,
        #[arg(long)]
        max_states: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
}

fn max_states_or_default(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(ENV_MAX_STATES)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_MAX_STATES)
}

/// Command output plus process exit status (0 definite, 3 unknown).
struct CommandOutput {
    text: String,
    destination: Option<String>,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            let mut payload = output.text;
            if !payload.ends_with('\n') {
                payload.push('\n');
            }
            match &output.destination {
                None => print!("{payload}"),
                Some(path) => {
                    if let Err(e) = std::fs::write(path, payload) {
                        eprintln!("error: cannot write {path}: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            ExitCode::from(output.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<CommandOutput> {
    match command {
        Command::Constants { format, out } => cmd_constants(format, out),
        Command::Expand {
            base,
            x,
            mode,
            digits,
            format,
            out,
        } => cmd_expand(&base, &x, mode, digits, format, out),
        Command::Classify {
            base,
            x,
            max_states,
            format,
            out,
        } => cmd_classify(&base, &x, max_states_or_default(max_states), format, out),
        Command::Unique {
            base,
            x,
            max_steps,
            format,
            out,
        } => cmd_unique(&base, &x, max_steps, format, out),
        Command::Tree {
            base,
            x,
            mode,
            depth,
            max_states,
            format,
            out,
        } => cmd_tree(
            &base,
            &x,
            mode,
            depth,
            max_states_or_default(max_states),
            format,
            out,
        ),
        Command::Verify {
            item,
            all,
            base,
            format,
            out,
        } => cmd_verify(item.as_deref(), all, base.as_deref(), format, out),
        Command::NullInfinite {
            base,
            x,
            max_states,
            format,
            out,
        } => cmd_null_infinite(&base, &x, max_states_or_default(max_states), format, out),
        Command::Membership {
            base,
            max_states,
            format,
            out,
        } => cmd_membership(&base, max_states_or_default(max_states), format, out),
        Command::Sweep {
            bases,
            points,
            max_states,
            out,
        } => cmd_sweep(&bases, &points, max_states_or_default(max_states), out),
    }
}

fn cmd_constants(format: OutputFormat, out: Option<String>) -> Result<CommandOutput> {
    let text = match format {
        OutputFormat::Json => {
            let items: Vec<serde_json::Value> = constants::registry()
                .iter()
                .map(|b| {
                    json!({
                        "name": b.name,
                        "relation": b.defining_relation,
                        "approx": b.approx,
                        "minpoly": b.minpoly.to_string(),
                        "decimal": b.value.to_decimal(10),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({ "constants": items })).unwrap()
        }
        _ => {
            let mut s = String::new();
            for b in constants::registry() {
                let _ = writeln!(
                    s,
                    "{:<9} {}  {}  [{}]",
                    b.name, b.approx, b.defining_relation, b.minpoly
                );
            }
            s
        }
    };
    Ok(CommandOutput {
        text,
        destination: out,
        code: 0,
    })
}

fn cmd_expand(
    base_spec: &str,
    point_spec: &str,
    mode: ExpandMode,
    digits: usize,
    format: OutputFormat,
    out: Option<String>,
) -> Result<CommandOutput> {
    let base = spec::parse_base(base_spec)?;
    let x = spec::parse_point(&base, point_spec)?;
    let mode = match mode {
        ExpandMode::Greedy => Mode::Greedy,
        ExpandMode::Lazy => Mode::Lazy,
    };
    let word = greedy_lazy(&base, &x, digits, mode)?;
    let text = match format {
        OutputFormat::Json => serde_json::to_string(&json!({"digits": word.to_string()})).unwrap(),
        _ => word.to_string(),
    };
    Ok(CommandOutput {
        text,
        destination: out,
        code: 0,
    })
}

fn cmd_classify(
    base_spec: &str,
    point_spec: &str,
    max_states: usize,
    format: OutputFormat,
    out: Option<String>,
) -> Result<CommandOutput> {
    let base = spec::parse_base(base_spec)?;
    let x = spec::parse_point(&base, point_spec)?;
    let graph = build_state_graph(&base, &x, max_states)?;
    let classification = classify_paths(&graph);
    let code = if classification.is_definite() { 0 } else { 3 };
    let text = match format {
        OutputFormat::Text => format!(
            "{classification} ({} states, complete={})",
            graph.state_count(),
            graph.is_complete()
        ),
        _ => {
            let mut obj = json!({
                "classification": classification.tag(),
                "states": graph.state_count(),
                "complete": graph.is_complete(),
            });
            if let Cardinality::Finite(k) = &classification {
                obj["k"] = json!(k.to_string());
            }
            if let Cardinality::Unknown(reason) = &classification {
                obj["reason"] = json!(reason);
            }
            serde_json::to_string(&obj).unwrap()
        }
    };
    Ok(CommandOutput {
        text,
        destination: out,
        code,
    })
}

fn cmd_unique(
    base_spec: &str,
    point_spec: &str,
    max_steps: usize,
    format: OutputFormat,
    out: Option<String>,
) -> Result<CommandOutput> {
    let base = spec::parse_base(base_spec)?;
    let x = spec::parse_point(&base, point_spec)?;
    let answer = is_unique(&base, &x, max_steps)?;
    let (text, code) = match format {
        OutputFormat::Json => {
            let obj = match &answer {
                Uniqueness::Unique => json!({"unique": true}),
                Uniqueness::NotUnique(w) => json!({"unique": false, "witness": w.to_string()}),
                Uniqueness::Unknown => json!({"unique": null}),
            };
            (
                serde_json::to_string(&obj).unwrap(),
                if answer == Uniqueness::Unknown { 3 } else { 0 },
            )
        }
        _ => match &answer {
            Uniqueness::Unique => ("Unique".to_string(), 0),
            Uniqueness::NotUnique(w) => (format!("NotUnique witness={w}"), 0),
            Uniqueness::Unknown => ("Unknown".to_string(), 3),
        },
    };
    Ok(CommandOutput {
        text,
        destination: out,
        code,
    })
}

fn cmd_tree(
    base_spec: &str,
    point_spec: &str,
    mode: TreeModeArg,
    depth: usize,
    max_states: usize,
    format: OutputFormat,
    out: Option<String>,
) -> Result<CommandOutput> {
    let base = spec::parse_base(base_spec)?;
    let x = spec::parse_point(&base, point_spec)?;
    let text = match format {
        OutputFormat::Json => {
            let graph = build_state_graph(&base, &x, max_states)?;
            serde_json::to_string_pretty(&graph_json(&base, &graph)).unwrap()
        }
        _ => {
            let mode = match mode {
                TreeModeArg::Full => TreeMode::Full,
                TreeModeArg::Infinite => TreeMode::Infinite,
                TreeModeArg::Continuum => TreeMode::Continuum,
            };
            let tree = export_tree(&base, &x, mode, depth, max_states)?;
            tree_to_dot(&tree)
        }
    };
    Ok(CommandOutput {
        text,
        destination: out,
        code: 0,
    })
}

fn cmd_verify(
    item: Option<&str>,
    all: bool,
    base_spec: Option<&str>,
    format: OutputFormat,
    out: Option<String>,
) -> Result<CommandOutput> {
    use beta_branch::constants::{
        verify_alpha_properties, verify_lemma_sequence_bounds, verify_prop_branching_points,
        verify_prop_first_half, verify_prop_second_half,
    };
    let mut reports = Vec::new();
    let with_base =
        |spec: Option<&str>| -> Result<Base> { spec::parse_base(spec.unwrap_or("q_aleph0")) };
    if all {
        let sample = "20x^2-20x-21"; // ~1.64017, inside (golden, q_aleph0)
        for b in [sample, "q_aleph0", "r4"] {
            reports.extend(verify_prop_branching_points(&spec::parse_base(b)?)?);
        }
        for b in ["q_aleph0", "r1", "q_2"] {
            reports.extend(verify_lemma_sequence_bounds(&spec::parse_base(b)?)?);
        }
        for b in [sample, "q_aleph0", "r4", "q_2"] {
            reports.extend(verify_prop_first_half(&spec::parse_base(b)?, 10)?);
        }
        reports.extend(verify_prop_second_half());
        reports.extend(verify_alpha_properties(8));
    } else {
        let id = item.ok_or_else(|| Error::Parse("pass --item ID or --all".into()))?;
        match id.to_ascii_lowercase().as_str() {
            "prop3.2" => reports.extend(verify_prop_branching_points(&with_base(base_spec)?)?),
            "lemma3.3" => reports.extend(verify_lemma_sequence_bounds(&with_base(base_spec)?)?),
            "prop3.4" => reports.extend(verify_prop_first_half(&with_base(base_spec)?, 10)?),
            "prop3.5" => reports.extend(verify_prop_second_half()),
            "alpha" => reports.extend(verify_alpha_properties(8)),
            other => {
                return Err(Error::Parse(format!(
                    "unknown item `{other}` (use Prop3.2, Lemma3.3, Prop3.4, Prop3.5, Alpha)"
                )))
            }
        }
    }
    let transcript = {
        let items: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "base": r.base,
                    "outcome": r.outcome.to_string(),
                    "details": r.details,
                })
            })
            .collect();
        serde_json::to_string_pretty(&json!({ "reports": items })).unwrap()
    };
    let lines = {
        let mut s = String::new();
        for r in &reports {
            let _ = writeln!(s, "{}", r.line());
        }
        s
    };
    // report lines go to stdout; --out captures the JSON transcript artifact
    if let Some(path) = &out {
        std::fs::write(path, transcript.clone() + "\n")
            .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
        return Ok(CommandOutput {
            text: lines,
            destination: None,
            code: 0,
        });
    }
    Ok(CommandOutput {
        text: if format == OutputFormat::Json {
            transcript
        } else {
            lines
        },
        destination: None,
        code: 0,
    })
}

fn cmd_null_infinite(
    base_spec: &str,
    point_spec: &str,
    max_states: usize,
    format: OutputFormat,
    out: Option<String>,
) -> Result<CommandOutput> {
    let base = spec::parse_base(base_spec)?;
    let x = spec::parse_point(&base, point_spec)?;
    let answer = beta_branch::branching::is_null_infinite(&base, &x, max_states)?;
    let code = if answer == Answer::Unknown { 3 } else { 0 };
    let text = match format {
        OutputFormat::Json => {
            serde_json::to_string(&json!({"null_infinite": answer.to_string()})).unwrap()
        }
        _ => answer.to_string(),
    };
    Ok(CommandOutput {
        text,
        destination: out,
        code,
    })
}

fn cmd_membership(
    base_spec: &str,
    max_states: usize,
    format: OutputFormat,
    out: Option<String>,
) -> Result<CommandOutput> {
    let base = spec::parse_base(base_spec)?;
    let verdict = beta_branch::branching::b_aleph0_membership(&base, max_states)?;
    let code = if verdict == Membership::Unknown { 3 } else { 0 };
    let text = match format {
        OutputFormat::Json => {
            let obj = match &verdict {
                Membership::In(w) => json!({"membership": "In", "witness": w.to_string()}),
                Membership::NotIn => json!({"membership": "NotIn"}),
                Membership::Unknown => json!({"membership": "Unknown"}),
            };
            serde_json::to_string(&obj).unwrap()
        }
        _ => match &verdict {
            Membership::In(w) => format!("In witness={w}"),
            Membership::NotIn => "NotIn".to_string(),
            Membership::Unknown => "Unknown".to_string(),
        },
    };
    Ok(CommandOutput {
        text,
        destination: out,
        code,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_sweep(
    bases: &[String],
    points: &[String],
    max_states: usize,
    out: Option<String>,
) -> Result<CommandOutput> {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "base,approx,point,classification,k,null_infinite,states,complete,error"
    );
    for base_spec in bases {
        let parsed = spec::parse_base(base_spec);
        for point_spec in points {
            let row = sweep_row(&parsed, base_spec, point_spec, max_states);
            let _ = writeln!(s, "{}", row.join(","));
        }
    }
    Ok(CommandOutput {
        text: s,
        destination: out,
        code: 0,
    })
}

fn sweep_row(
    parsed_base: &Result<Base>,
    base_spec: &str,
    point_spec: &str,
    max_states: usize,
) -> Vec<String> {
    let mut row = vec![csv_field(base_spec), String::new(), csv_field(point_spec)];
    match parsed_base {
        Err(e) => {
            row.extend(["", "", "", "", ""].map(String::from));
            row.push(csv_field(&e.to_string()));
        }
        Ok(base) => {
            row[1] = base.generator().to_decimal(6);
            match spec::parse_point(base, point_spec)
                .and_then(|x| build_state_graph(base, &x, max_states))
            {
                Err(e) => {
                    row.extend(["", "", "", "", ""].map(String::from));
                    row.push(csv_field(&e.to_string()));
                }
                Ok(graph) => {
                    let classification = classify_paths(&graph);
                    let null = beta_branch::branching::null_infinite_on_graph(&graph);
                    row.push(classification.tag().to_string());
                    row.push(match &classification {
                        Cardinality::Finite(k) => k.to_string(),
                        _ => String::new(),
                    });
                    row.push(null.to_string());
                    row.push(graph.state_count().to_string());
                    row.push(graph.is_complete().to_string());
                    row.push(String::new());
                }
            }
        }
    }
    row
}
