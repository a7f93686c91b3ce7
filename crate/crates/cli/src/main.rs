use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use updown::normal_form::normalization_params;
use updown::semantics::{distinguishing_partition, oracle_profiles, SparseVec};
use updown::subalgebra::{chain_annihilates, chain_apply, step_graph, t_stats, ChainState};
use updown::{
    apply_word, certify_equivalence, fingerprint, normalize_with_trace, parse_word, verify_trace,
    Partition, Trace, Word,
};

/// Up- and down-operators on Young's lattice.
#[derive(Parser)]
#[command(name = "updown", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a word to a partition.
    Act {
        #[arg(long)]
        word: String,
        #[arg(long)]
        partition: String,
    },
    /// Weight and α vectors of a word.
    Fingerprint {
        #[arg(long)]
        word: String,
    },
    /// Decide whether two words act identically.
    Equiv {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Canonical word, optionally with a certificate.
    Normalize {
        #[arg(long)]
        word: String,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Write a certificate that x and y act identically.
    Certify {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        trace: PathBuf,
    },
    /// Check a certificate file.
    VerifyTrace {
        #[arg(long)]
        file: PathBuf,
    },
    /// Act on the chain with rho + 1 elements.
    Chain {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        rho: u32,
        #[arg(long)]
        word: String,
        #[arg(long, required_unless_present = "annihilates")]
        pos: Option<u32>,
        /// Report whether the word kills every chain state.
        #[arg(long)]
        annihilates: bool,
    },
    /// Lattice path of a word in t and t̄.
    Graph {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        word: String,
    },
    /// Compare two words on every partition of the complete test set.
    OracleCheck {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

/// An answer to print and the exit code that goes with it.
struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            code: 0,
        }
    }

    fn answer(yes: bool, text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            code: if yes { 0 } else { 1 },
        }
    }
}

/// Exit code 2 for input the tool could not make sense of.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn word(text: &str) -> Result<Word, UsageError> {
    Ok(parse_word(text)?)
}

fn vec_json(v: &SparseVec) -> Value {
    let map = v.iter().map(|(i, x)| (i.to_string(), json!(x))).collect();
    Value::Object(map)
}

fn write_trace(path: &Path, t: &Trace) -> Result<(), UsageError> {
    fs::write(path, t.to_json() + "\n")
        .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))
}

fn run(cmd: Command) -> Result<Outcome, UsageError> {
    let out = match cmd {
        Command::Act { word: w, partition } => {
            let x = word(&w)?;
            let p: Partition = partition.parse()?;
            match apply_word(&p, &x) {
                Some(q) => Outcome::ok(q.to_string(), json!({ "result": q.to_string() })),
                None => Outcome::ok("0", json!({ "result": null })),
            }
        }
        Command::Fingerprint { word: w } => {
            let fp = fingerprint(&word(&w)?);
            Outcome::ok(
                fp.to_string(),
                json!({ "weight": vec_json(&fp.weight), "alpha": vec_json(&fp.alpha) }),
            )
        }
        Command::Equiv { x, y } => {
            let same = fingerprint(&word(&x)?) == fingerprint(&word(&y)?);
            let text = if same { "equivalent" } else { "not-equivalent" };
            Outcome::answer(same, text, json!({ "equivalent": same }))
        }
        Command::Normalize { word: w, trace } => {
            let x = word(&w)?;
            let (m, n) = normalization_params(&x);
            let (c, t) = normalize_with_trace(&x);
            if let Some(path) = trace {
                write_trace(&path, &t)?;
            }
            Outcome::ok(
                c.to_string(),
                json!({ "canonical": c.to_string(), "m": m, "n": n, "steps": t.len() }),
            )
        }
        Command::Certify { x, y, trace } => {
            let (x, y) = (word(&x)?, word(&y)?);
            match certify_equivalence(&x, &y) {
                Some(t) => {
                    verify_trace(&t).map_err(|e| UsageError(format!("internal: {e}")))?;
                    write_trace(&trace, &t)?;
                    Outcome::ok(
                        format!("certified in {} steps", t.len()),
                        json!({ "certified": true, "steps": t.len() }),
                    )
                }
                None => Outcome::answer(false, "not-equivalent", json!({ "certified": false })),
            }
        }
        Command::VerifyTrace { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", file.display())))?;
            let t = Trace::from_json(&text)?;
            match verify_trace(&t) {
                Ok(()) => Outcome::ok(
                    format!("ok: {} steps", t.len()),
                    json!({ "ok": true, "steps": t.len() }),
                ),
                Err(e) => Outcome::answer(
                    false,
                    format!("rejected: {e}"),
                    json!({ "ok": false, "error": e.to_string() }),
                ),
            }
        }
        Command::Chain {
            t,
            rho,
            word: w,
            pos,
            annihilates,
        } => {
            let x = word(&w)?;
            if annihilates {
                let yes = chain_annihilates(&x, t, rho)?;
                Outcome::answer(
                    yes,
                    if yes { "yes" } else { "no" },
                    json!({ "annihilates": yes }),
                )
            } else {
                let pos = pos.expect("clap requires --pos here");
                let s = ChainState::new(rho, pos)
                    .ok_or_else(|| UsageError(format!("--pos {pos} exceeds --rho {rho}")))?;
                match chain_apply(s, &x, t)? {
                    Some(r) => Outcome::ok(format!("pos={}", r.pos), json!({ "pos": r.pos })),
                    None => Outcome::ok("0", json!({ "pos": null })),
                }
            }
        }
        Command::Graph { t, word: w } => {
            let x = word(&w)?;
            let g = step_graph(&x, t)?;
            let s = t_stats(&x, t)?;
            let mut text: Vec<String> = g
                .points
                .iter()
                .map(|(a, b)| format!("({a}, {b})"))
                .collect();
            text.push(s.to_string());
            Outcome::ok(
                text.join("\n"),
                json!({
                    "points": g.points,
                    "peak": s.peak,
                    "valley": s.valley,
                    "endpoint": s.endpoint,
                }),
            )
        }
        Command::OracleCheck { x, y } => {
            let (x, y) = (word(&x)?, word(&y)?);
            let checked = oracle_profiles(&x, &y).len();
            match distinguishing_partition(&x, &y) {
                None => Outcome::ok(
                    format!("equal on {checked} partitions"),
                    json!({ "equal": true, "checked": checked }),
                ),
                Some(p) => Outcome::answer(
                    false,
                    format!("differ at {}", describe(&p)),
                    json!({ "equal": false, "witness": p.to_string() }),
                ),
            }
        }
    };
    Ok(out)
}

fn describe(p: &Partition) -> String {
    if p.is_empty() {
        "the empty partition".to_string()
    } else {
        p.to_string()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
