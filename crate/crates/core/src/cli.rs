//! Command-line front end. `run` returns the exit code and both output
//! streams so it can be driven in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use crate::alexander::alexander;
use crate::bracket::{bracket, jones};
use crate::catalog::{catalog_get, identify, names, pseudodiagrams};
use crate::diagram::Pseudodiagram;
use crate::moves::{fuzz, FuzzConfig, MoveKind, Recipe};
use crate::pseudo::{
    hat_invariant, pseudo_invariant, relation_sum, were_set_weighted, BaseInvariant, TangleSet,
};

#[derive(Debug, Parser)]
#[command(name = "pseudoknot", about = "Pseudoknot invariants from rational tangle substitution", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kauffman bracket.
    Bracket { diagram: String },
    /// Jones polynomial in A.
    Jones { diagram: String },
    /// Alexander polynomial of a knot.
    Alexander { diagram: String },
    /// Pseudoknot invariant of a recipe.
    Invariant {
        diagram: String,
        #[arg(long, value_parser = parse_base)]
        base: BaseInvariant,
        #[arg(long)]
        tangles: String,
        /// Skip the coefficient relation check.
        #[arg(long)]
        hat: bool,
    },
    /// Weighted set of resolution knot types.
    Wereset {
        diagram: String,
        /// Attach catalog names to known fingerprints.
        #[arg(long)]
        identify: bool,
        #[arg(long, value_delimiter = ',', default_value = "jones,alexander", value_parser = parse_base)]
        basis: Vec<BaseInvariant>,
        /// Probability of resolving a precrossing positively.
        #[arg(long, default_value = "1/2", value_parser = parse_probability)]
        p_plus: BigRational,
    },
    /// Checks the coefficient relation of a recipe.
    Relation {
        #[arg(long, value_parser = parse_base)]
        base: BaseInvariant,
        #[arg(long)]
        tangles: String,
    },
    /// Random move sequences checking invariance.
    Fuzz {
        /// Diagrams to fuzz; all catalog pseudodiagrams when omitted.
        diagrams: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "r1,r2,r3,pr1,pr2,pr3", value_parser = parse_move)]
        moves: Vec<MoveKind>,
        #[arg(long, default_value_t = 200)]
        iterations: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 14)]
        max_crossings: usize,
        /// Longest move sequence.
        #[arg(long, default_value_t = 6)]
        length: usize,
        /// Recipe under test instead of the two defaults.
        #[arg(long, requires = "base")]
        tangles: Option<String>,
        #[arg(long, value_parser = parse_base)]
        base: Option<BaseInvariant>,
        /// Evaluate the recipe without the relation gate.
        #[arg(long)]
        hat: bool,
    },
    /// Lists catalog names, or prints one entry.
    Catalog { name: Option<String> },
}

fn parse_base(s: &str) -> Result<BaseInvariant, String> {
    BaseInvariant::parse(s).map_err(|e| e.to_string())
}

fn parse_move(s: &str) -> Result<MoveKind, String> {
    MoveKind::parse(s).ok_or_else(|| format!("unknown move {s:?} (expected r1, r2, r3, pr1, pr2 or pr3)"))
}

fn parse_probability(s: &str) -> Result<BigRational, String> {
    let r: BigRational = s.trim().parse().map_err(|_| format!("bad probability {s:?}"))?;
    if r < BigRational::from_integer(0.into()) || r > BigRational::from_integer(1.into()) {
        return Err(format!("probability {s} outside [0, 1]"));
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, msg: impl std::fmt::Display) -> Self {
        Self { code, stdout, stderr: format!("error: {}\n", one_line(&msg.to_string())) }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Loads a diagram from a file path or `catalog:<name>`.
pub fn load_diagram(arg: &str) -> Result<Pseudodiagram, String> {
    if let Some(name) = arg.strip_prefix("catalog:") {
        return catalog_get(name).map(|e| e.diagram.clone()).map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
    Pseudodiagram::parse(&text).map_err(|e| format!("{arg}: {e}"))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => return Outcome::ok(e.render().to_string()),
        Err(e) => {
            let text = e.render().to_string();
            let body: Vec<&str> = text.lines().take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information")).collect();
            let msg = body.join(" ");
            return Outcome::fail(2, String::new(), msg.strip_prefix("error: ").unwrap_or(&msg));
        }
    };
    match execute(cli.command) {
        Ok(o) => o,
        Err(msg) => Outcome::fail(1, String::new(), msg),
    }
}

fn execute(cmd: Command) -> Result<Outcome, String> {
    let line = |s: String| Ok(Outcome::ok(s + "\n"));
    match cmd {
        Command::Bracket { diagram } => line(bracket(&load_diagram(&diagram)?).map_err(|e| e.to_string())?.to_string()),
        Command::Jones { diagram } => line(jones(&load_diagram(&diagram)?).map_err(|e| e.to_string())?.to_string()),
        Command::Alexander { diagram } => {
            line(alexander(&load_diagram(&diagram)?).map_err(|e| e.to_string())?.to_string())
        }
        Command::Invariant { diagram, base, tangles, hat } => {
            let d = load_diagram(&diagram)?;
            let ts = TangleSet::parse(&tangles, base.var()).map_err(|e| e.to_string())?;
            let v = if hat { hat_invariant(&d, &ts, base) } else { pseudo_invariant(&d, &ts, base) };
            line(v.map_err(|e| e.to_string())?.to_string())
        }
        Command::Wereset { diagram, identify: named, basis, p_plus } => {
            let d = load_diagram(&diagram)?;
            let mut ws = were_set_weighted(&d, &basis, &p_plus).map_err(|e| e.to_string())?;
            if named {
                ws = ws.identify(identify);
            }
            Ok(Outcome::ok(ws.to_string()))
        }
        Command::Relation { base, tangles } => {
            let ts = TangleSet::parse(&tangles, base.var()).map_err(|e| e.to_string())?;
            let sum = relation_sum(&ts, base).map_err(|e| e.to_string())?;
            if sum.is_one() {
                line(format!("relation holds: sum = {sum}"))
            } else {
                Ok(Outcome { code: 1, stdout: format!("relation FAILED: sum = {sum}\n"), stderr: String::new() })
            }
        }
        Command::Fuzz { diagrams, moves, iterations, seed, max_crossings, length, tangles, base, hat } => {
            let recipes = match (tangles, base) {
                (Some(t), Some(b)) => {
                    vec![Recipe::new(TangleSet::parse(&t, b.var()).map_err(|e| e.to_string())?, b, !hat)]
                }
                _ => vec![
                    Recipe::new(TangleSet::uniform(), BaseInvariant::Jones, !hat),
                    Recipe::new(TangleSet::smoothing(), BaseInvariant::Jones, !hat),
                ],
            };
            let targets: Vec<(String, Pseudodiagram)> = if diagrams.is_empty() {
                pseudodiagrams().map(|e| (e.name.to_string(), e.diagram.clone())).collect()
            } else {
                diagrams.iter().map(|a| load_diagram(a).map(|d| (a.clone(), d))).collect::<Result<_, _>>()?
            };
            let cfg = FuzzConfig { kinds: moves, iterations, seed, max_sites: max_crossings, max_length: length };
            let mut out = String::new();
            let mut all = true;
            for (name, d) in &targets {
                if d.num_sites() > max_crossings {
                    return Err(format!("{name} has {} sites, above --max-crossings {max_crossings}", d.num_sites()));
                }
                for c in fuzz(d, &cfg, &recipes) {
                    all &= c.passed();
                    writeln!(out, "{name}\t{c}").expect("write to string");
                }
            }
            writeln!(out, "fuzz {}", if all { "PASSED" } else { "FAILED" }).expect("write to string");
            Ok(Outcome { code: if all { 0 } else { 1 }, stdout: out, stderr: String::new() })
        }
        Command::Catalog { name: None } => line(names().join("\n")),
        Command::Catalog { name: Some(n) } => {
            Ok(Outcome::ok(catalog_get(&n).map_err(|e| e.to_string())?.diagram.to_text()))
        }
    }
}
