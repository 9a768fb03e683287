use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use kocay::colored::ColoredGraph;
use kocay::counting::{self, Deck, Mode};
use kocay::covering::{cover_count, kocay_check, CoverSequence, CoveringSystem, KocayReport};
use kocay::format::{parse_any, parse_deck_lines, parse_pairs, serialize_colored, serialize_graph6, AnyGraph};
use kocay::reconstruct::{edge_identity_check, reconstruct_path_count, tree_descent_with, TreeDescentOptions};
use kocay::sweep::{self, Suite};
use kocay::{two_form, Error, Execution, Graph, Pair, ReconstructionReport};

#[derive(Parser)]
#[command(name = "kocay", version, about = "Covering counts, Kocay identities and deck reconstruction for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report with keys inputs, values, status, ledger, timing.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time in the report (otherwise timing is null).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count copies of a pattern in a host.
    Count {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: String,
        /// Count induced copies (vertex subsets) instead of subgraphs.
        #[arg(long)]
        induced: bool,
    },
    /// List the deck of a graph.
    Deck {
        #[arg(long)]
        graph: String,
        /// Deck of the two-form (edges red, non-edges blue).
        #[arg(long)]
        colored: bool,
        /// Print one card per line, repeated by multiplicity (a deck file).
        #[arg(long)]
        lines: bool,
    },
    /// Covering count c(F, X).
    Cover {
        #[arg(long)]
        target: String,
        #[command(flatten)]
        seq: SeqArg,
    },
    /// Check the Kocay identity for a graph and a sequence.
    Kocay {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        seq: SeqArg,
    },
    /// Reconstruct the number of Hamiltonian paths from a deck file.
    Path {
        #[arg(long)]
        deck: String,
    },
    /// Blue-edge descent for a tree count from a deck file.
    Tree {
        #[arg(long)]
        deck: String,
        #[arg(long)]
        tree: String,
        /// Edge ordering, e.g. "0-1,1-2,2-3".
        #[arg(long)]
        ordering: Option<String>,
        /// Skip the complement rerun.
        #[arg(long)]
        no_complement: bool,
    },
    /// Run a verification suite over every graph on n vertices.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        suite: String,
        /// Disable worker threads.
        #[arg(long)]
        sequential: bool,
    },
    /// Check the single-pair recoloring identity for one pattern and pair.
    Identity {
        /// Plain graph (its two-form is used) or colored record.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        pair: String,
    },
}

#[derive(Args)]
struct SeqArg {
    /// Comma-separated graph6 records, or '|'-separated colored records.
    #[arg(long)]
    seq: String,
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(arg: &str, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: format!("{arg}: {e}"),
    }
}

fn lib_error(arg: &str, e: Error) -> Failure {
    match e {
        Error::Inconsistent(_) => Failure {
            code: 1,
            message: format!("{arg}: {e}"),
        },
        _ => input_error(arg, e),
    }
}

#[derive(Default)]
struct Report {
    inputs: Map<String, Value>,
    values: Map<String, Value>,
    status: String,
    ledger: Vec<Value>,
    exit: u8,
    raw: Option<String>,
}

impl Report {
    fn input(&mut self, k: &str, v: impl Into<Value>) {
        self.inputs.insert(k.into(), v.into());
    }

    fn value(&mut self, k: &str, v: impl Into<Value>) {
        self.values.insert(k.into(), v.into());
    }

    fn note(&mut self, k: impl Into<String>, v: impl Into<String>) {
        self.ledger.push(json!({ "entry": k.into(), "value": v.into() }));
    }
}

fn graph_arg(arg: &str, s: &str) -> Result<AnyGraph, Failure> {
    parse_any(s).map_err(|e| input_error(arg, e))
}

fn seq_arg(s: &str) -> Result<Vec<AnyGraph>, Failure> {
    let parts: Vec<&str> = if s.contains("n=") { s.split('|').collect() } else { s.split(',').collect() };
    parts.iter().map(|p| graph_arg("--seq", p.trim())).collect()
}

fn plain_seq(items: &[AnyGraph]) -> Option<Vec<Graph>> {
    items
        .iter()
        .map(|g| match g {
            AnyGraph::Plain(g) => Some(*g),
            AnyGraph::Colored(_) => None,
        })
        .collect()
}

fn colored_seq(items: &[AnyGraph]) -> Option<Vec<ColoredGraph>> {
    items
        .iter()
        .map(|g| match g {
            AnyGraph::Colored(g) => Some(*g),
            AnyGraph::Plain(_) => None,
        })
        .collect()
}

fn kind_mismatch(arg: &str) -> Failure {
    input_error(arg, "mixes plain (graph6) and colored records")
}

fn kocay_values<S: CoveringSystem>(r: &mut Report, rep: &KocayReport<S::Class>) {
    r.value("LHS", rep.lhs.to_string());
    r.value("RHS", rep.rhs.to_string());
    r.value("equal", rep.holds());
    for t in &rep.terms {
        let x = S::representative(&t.class);
        r.note(format!("term {x:?}"), format!("c={} count={}", t.cover_count, t.count));
    }
    if !rep.holds() {
        r.exit = 1;
    }
}

fn read_deck(path: &str) -> Result<Vec<AnyGraph>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error("--deck", e))?;
    parse_deck_lines(&text).map_err(|e| input_error("--deck", e))
}

fn reconstruction(r: &mut Report, rep: &ReconstructionReport) {
    r.value("target", rep.target.clone());
    for (k, v) in &rep.values {
        r.value(k, v.to_string());
    }
    if let Some((a, b)) = &rep.coefficients {
        r.value("a", a.to_string());
        r.value("b", b.to_string());
    }
    for (k, v) in &rep.constants {
        r.value(k, v.to_string());
    }
    if !rep.ordering.is_empty() {
        let o: Vec<String> = rep.ordering.iter().map(|p| p.to_string()).collect();
        r.value("ordering", o.join(","));
    }
    for (k, v) in &rep.ledger {
        r.note(k.clone(), v.clone());
    }
    r.status = rep.status.to_string();
}

fn execute(cmd: &Command) -> Result<Report, Failure> {
    let mut r = Report {
        status: "ok".into(),
        ..Report::default()
    };
    match cmd {
        Command::Count { host, pattern, induced } => {
            let mode = if *induced { Mode::Induced } else { Mode::Subgraph };
            r.input("host", host.as_str());
            r.input("pattern", pattern.as_str());
            r.input("induced", *induced);
            let value = match (graph_arg("--host", host)?, graph_arg("--pattern", pattern)?) {
                (AnyGraph::Plain(g), AnyGraph::Plain(h)) => counting::count(&g, &h, mode),
                (AnyGraph::Colored(g), AnyGraph::Colored(h)) => counting::count(&g, &h, mode),
                _ => return Err(input_error("--pattern", "host and pattern must both be plain or both colored")),
            };
            r.value("count", value);
        }
        Command::Deck { graph, colored, lines } => {
            r.input("graph", graph.as_str());
            r.input("colored", *colored);
            let cards: Vec<(String, usize)> = match graph_arg("--graph", graph)? {
                AnyGraph::Plain(g) if !colored => {
                    let d = Deck::of(&g).map_err(|e| input_error("--graph", e))?;
                    d.cards().map(|(c, m)| (serialize_graph6(&c.to_graph()), m)).collect()
                }
                AnyGraph::Plain(g) => deck_listing(&two_form(&g))?,
                AnyGraph::Colored(g) => deck_listing(&g)?,
            };
            if *lines {
                let mut out = String::new();
                for (c, m) in &cards {
                    for _ in 0..*m {
                        out.push_str(c);
                        out.push('\n');
                    }
                }
                r.raw = Some(out);
            }
            let listing: Vec<Value> = cards.iter().map(|(c, m)| json!({ "card": c, "multiplicity": m })).collect();
            r.value("cards", listing);
        }
        Command::Cover { target, seq } => {
            r.input("target", target.as_str());
            r.input("seq", seq.seq.as_str());
            let items = seq_arg(&seq.seq)?;
            let value = match graph_arg("--target", target)? {
                AnyGraph::Plain(x) => {
                    let s = CoverSequence::new(plain_seq(&items).ok_or_else(|| kind_mismatch("--seq"))?)
                        .map_err(|e| input_error("--seq", e))?;
                    cover_count(&s, &x)
                }
                AnyGraph::Colored(x) => {
                    let s = CoverSequence::new(colored_seq(&items).ok_or_else(|| kind_mismatch("--seq"))?)
                        .map_err(|e| input_error("--seq", e))?;
                    cover_count(&s, &x)
                }
            };
            r.value("cover_count", value.to_string());
        }
        Command::Kocay { graph, seq } => {
            r.input("graph", graph.as_str());
            r.input("seq", seq.seq.as_str());
            let items = seq_arg(&seq.seq)?;
            match graph_arg("--graph", graph)? {
                AnyGraph::Plain(g) => {
                    let s = CoverSequence::new(plain_seq(&items).ok_or_else(|| kind_mismatch("--seq"))?)
                        .map_err(|e| input_error("--seq", e))?;
                    kocay_values::<Graph>(&mut r, &kocay_check(&g, &s));
                }
                AnyGraph::Colored(g) => {
                    let s = CoverSequence::new(colored_seq(&items).ok_or_else(|| kind_mismatch("--seq"))?)
                        .map_err(|e| input_error("--seq", e))?;
                    kocay_values::<ColoredGraph>(&mut r, &kocay_check(&g, &s));
                }
            }
            if r.exit != 0 {
                r.status = "mismatch".into();
            }
        }
        Command::Path { deck } => {
            r.input("deck", deck.as_str());
            let cards = plain_seq(&read_deck(deck)?).ok_or_else(|| input_error("--deck", "cards must be graph6"))?;
            r.input("cards", cards.iter().map(serialize_graph6).collect::<Vec<_>>());
            let d = Deck::from_cards(&cards).map_err(|e| input_error("--deck", e))?;
            let rep = reconstruct_path_count(&d, d.order()).map_err(|e| lib_error("--deck", e))?;
            reconstruction(&mut r, &rep);
            if let Some((_, v)) = rep.values.first() {
                r.value("value", v.to_string());
            }
        }
        Command::Tree {
            deck,
            tree,
            ordering,
            no_complement,
        } => {
            r.input("deck", deck.as_str());
            r.input("tree", tree.as_str());
            let lines = read_deck(deck)?;
            let cards: Vec<ColoredGraph> = if let Some(plain) = plain_seq(&lines) {
                plain.iter().map(two_form).collect()
            } else {
                colored_seq(&lines).ok_or_else(|| kind_mismatch("--deck"))?
            };
            r.input("cards", cards.iter().map(serialize_colored).collect::<Vec<_>>());
            let d = Deck::from_cards(&cards).map_err(|e| input_error("--deck", e))?;
            let t = match graph_arg("--tree", tree)? {
                AnyGraph::Plain(t) => t,
                AnyGraph::Colored(_) => return Err(input_error("--tree", "expected a graph6 tree")),
            };
            let ordering: Option<Vec<Pair>> = match ordering {
                Some(o) => {
                    r.input("ordering", o.as_str());
                    Some(parse_pairs(o).map_err(|e| input_error("--ordering", e))?)
                }
                None => None,
            };
            let opts = TreeDescentOptions {
                ordering,
                no_complement: *no_complement,
            };
            r.input("no_complement", *no_complement);
            let rep = tree_descent_with(&d, &t, &opts).map_err(|e| lib_error("--tree", e))?;
            reconstruction(&mut r, &rep);
        }
        Command::Sweep { n, suite, sequential } => {
            r.input("n", *n);
            r.input("suite", suite.as_str());
            let suite: Suite = suite.parse().map_err(|e| input_error("--suite", e))?;
            let exec = if *sequential { Execution::Sequential } else { Execution::default() };
            let rep = sweep::run(suite, *n, exec).map_err(|e| input_error("--n", e))?;
            r.value("cases", rep.cases);
            r.value("passed", rep.passed());
            r.value("failed", rep.failed);
            r.value("first_counterexample", rep.first_counterexample.clone());
            for (k, v) in &rep.statuses {
                r.note(format!("status {k}"), v.to_string());
            }
            if !rep.ok() {
                r.status = "failed".into();
                r.exit = 1;
            }
        }
        Command::Identity { graph, pattern, pair } => {
            r.input("graph", graph.as_str());
            r.input("pattern", pattern.as_str());
            r.input("pair", pair.as_str());
            let gp = match graph_arg("--graph", graph)? {
                AnyGraph::Plain(g) => two_form(&g),
                AnyGraph::Colored(g) => g,
            };
            let h = match graph_arg("--pattern", pattern)? {
                AnyGraph::Colored(h) => h,
                AnyGraph::Plain(_) => return Err(input_error("--pattern", "expected a colored record")),
            };
            let e = match parse_pairs(pair).map_err(|e| input_error("--pair", e))?.as_slice() {
                [e] => *e,
                _ => return Err(input_error("--pair", "expected exactly one pair u-v")),
            };
            let rep = edge_identity_check(&gp, &h, e).map_err(|e| input_error("--pair", e))?;
            r.value("LHS", rep.lhs().to_string());
            r.value("RHS", rep.rhs().to_string());
            r.value("equal", rep.holds());
            r.note("count minus", rep.count_minus.to_string());
            r.note("orbit", rep.orbit.to_string());
            r.note("blue", format!("count={} factor={}", rep.count_blue, rep.factor_blue));
            r.note("red", format!("count={} factor={}", rep.count_red, rep.factor_red));
            if !rep.holds() {
                r.status = "mismatch".into();
                r.exit = 1;
            }
        }
    }
    Ok(r)
}

fn deck_listing(g: &ColoredGraph) -> Result<Vec<(String, usize)>, Failure> {
    let d = Deck::of(g).map_err(|e| input_error("--graph", e))?;
    Ok(d.cards().map(|(c, m)| (serialize_colored(&c.to_graph()), m)).collect())
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Object(o) => {
                    let parts: Vec<String> = o.iter().map(|(k, v)| format!("{k}:{}", text_value(v))).collect();
                    parts.join(" ")
                }
                other => text_value(other),
            })
            .collect::<Vec<_>>()
            .join("; "),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let timing = if cli.timing {
        json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 })
    } else {
        Value::Null
    };
    if let Some(raw) = &report.raw {
        print!("{raw}");
    } else if cli.json {
        let mut out = Map::new();
        out.insert("inputs".into(), Value::Object(report.inputs));
        out.insert("values".into(), Value::Object(report.values));
        out.insert("status".into(), Value::String(report.status));
        out.insert("ledger".into(), Value::Array(report.ledger));
        out.insert("timing".into(), timing);
        println!("{}", serde_json::to_string_pretty(&Value::Object(out)).expect("serializable"));
    } else {
        for (k, v) in &report.values {
            println!("{k}={}", text_value(v));
        }
        println!("status={}", report.status);
        for entry in &report.ledger {
            println!("ledger: {} = {}", text_value(&entry["entry"]), text_value(&entry["value"]));
        }
        if let Value::Object(t) = &timing {
            println!("elapsed_ms={}", text_value(&t["elapsed_ms"]));
        }
    }
    ExitCode::from(report.exit)
}
