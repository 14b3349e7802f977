//! Command-line surface for the signed-permutation combinatorics library.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coxstan::involution::{
    atoms, count_involution_words, involution_words, underline_count, Twist, UnderlineMode,
};
use coxstan::matchings::{alpha_words, enumerate_ncsp};
use coxstan::perm::{count_reduced_words, embed_a_in_c};
use coxstan::symfunc::{stanley_monomials, to_schur_basis, QExpansion, SchurExpansion};
use coxstan::transition::{
    build_full_graph, build_layer_graph, g_expansion_with_budget, hat_g_expansion_with_budget,
    TransitionGraph, DEFAULT_G_BUDGET,
};
use coxstan::verify::{run_suite, Suite, VerifyParams, VerifyReport};
use coxstan::{Error, Family, SignedPermutation};

#[derive(Parser)]
#[command(name = "coxstan", about = "Signed permutations, involution words, and Schur Q-expansions", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetKind {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "hatG", alias = "hatg")]
    HatG,
    #[value(name = "F-oracle", alias = "f-oracle")]
    FOracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Layer,
    Full,
}

#[derive(Args)]
struct CommonFlags {
    /// Coxeter family of the input element.
    #[arg(long, value_enum, default_value = "C")]
    family: FamilyArg,
    /// Use the diagram twist (family D only).
    #[arg(long)]
    twisted: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Step budget override (also via COXSTAN_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a Stanley symmetric function in the Schur Q (or Schur) basis.
    Expand {
        #[command(flatten)]
        common: CommonFlags,
        /// Expansion target.
        #[arg(long, value_enum, default_value = "G")]
        target: TargetKind,
        /// One-line notation, e.g. "-3 2 -1"; empty for the identity.
        element: String,
    },
    /// List the atoms of a (twisted) involution.
    Atoms {
        #[command(flatten)]
        common: CommonFlags,
        element: String,
    },
    /// List the involution words of a (twisted) involution.
    Invwords {
        #[command(flatten)]
        common: CommonFlags,
        element: String,
    },
    /// Count reduced words, involution words, or underlined projections.
    Count {
        #[command(flatten)]
        common: CommonFlags,
        /// Count involution words instead of reduced words.
        #[arg(long)]
        involution: bool,
        /// Count distinct underline projections (family D).
        #[arg(long)]
        underline: bool,
        element: String,
    },
    /// List the noncrossing symmetric perfect matchings of a rank.
    Ncsp {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit a transition graph.
    Graph {
        #[arg(value_enum)]
        kind: GraphKind,
        n: usize,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        /// all, counts, main, transition, graphs, or typeD.
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        long: bool,
        #[arg(long)]
        huge: bool,
        #[arg(long)]
        json: bool,
    },
}

fn budget_from(common: &CommonFlags) -> u64 {
    common
        .budget
        .or_else(|| std::env::var("COXSTAN_BUDGET").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_G_BUDGET)
}

fn twist_for(common: &CommonFlags) -> Twist {
    if common.twisted {
        Twist::StarD
    } else {
        Twist::Identity
    }
}

fn q_expansion_json(q: &QExpansion) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = q
        .terms
        .iter()
        .map(|(shape, c)| serde_json::json!({"shape": shape, "coeff": c.to_string()}))
        .collect();
    serde_json::json!({"basis": "Q", "terms": terms})
}

fn schur_expansion_json(q: &SchurExpansion) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = q
        .terms
        .iter()
        .map(|(shape, c)| serde_json::json!({"shape": shape, "coeff": c.to_string()}))
        .collect();
    serde_json::json!({"basis": "s", "terms": terms})
}

fn graph_json(g: &TransitionGraph) -> serde_json::Value {
    serde_json::to_value(g).expect("graph serialization cannot fail")
}

fn print_report(report: &VerifyReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serialization"));
        return;
    }
    println!("suite: {}", report.suite);
    for check in &report.checks {
        let mark = if check.pass { "PASS" } else { "FAIL" };
        if check.pass {
            println!("  [{mark}] {} = {}", check.description, check.actual);
        } else {
            println!(
                "  [{mark}] {} — expected {}, got {}",
                check.description, check.expected, check.actual
            );
        }
    }
    println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
}

fn run(cli: Cli) -> coxstan::Result<bool> {
    match cli.command {
        Command::Expand { common, target, element } => {
            let w = SignedPermutation::parse(&element)?;
            let family: Family = common.family.into();
            let budget = budget_from(&common);
            match target {
                TargetKind::G => {
                    let w = if family == Family::A { embed_a_in_c(&w)? } else { w };
                    w.require_family(Family::C)?;
                    let q = g_expansion_with_budget(&w, budget)?;
                    if common.json {
                        println!("{}", q_expansion_json(&q));
                    } else {
                        println!("{q}");
                    }
                }
                TargetKind::HatG => {
                    let w = if family == Family::A { embed_a_in_c(&w)? } else { w };
                    w.require_family(Family::C)?;
                    let q = hat_g_expansion_with_budget(&w, budget)?;
                    if common.json {
                        println!("{}", q_expansion_json(&q));
                    } else {
                        println!("{q}");
                    }
                }
                TargetKind::FOracle => {
                    w.require_family(Family::A)?;
                    let n = w.length(Family::A)?.max(1);
                    let f = to_schur_basis(&stanley_monomials(&w, Family::A, n)?)?;
                    if common.json {
                        println!("{}", schur_expansion_json(&f));
                    } else {
                        println!("{f}");
                    }
                }
            }
        }
        Command::Atoms { common, element } => {
            let y = SignedPermutation::parse(&element)?;
            let family: Family = common.family.into();
            let list = atoms(&y, family, twist_for(&common))?;
            if common.json {
                let words: Vec<String> = list.iter().map(|w| w.to_string()).collect();
                println!("{}", serde_json::json!(words));
            } else {
                for w in list {
                    println!("{}", if w.is_identity() { "1".to_string() } else { w.to_string() });
                }
            }
        }
        Command::Invwords { common, element } => {
            let y = SignedPermutation::parse(&element)?;
            let family: Family = common.family.into();
            let list = involution_words(&y, family, twist_for(&common))?;
            if common.json {
                let words: Vec<String> = list.iter().map(|w| w.to_string()).collect();
                println!("{}", serde_json::json!(words));
            } else {
                for w in list {
                    println!("{w}");
                }
            }
        }
        Command::Count { common, involution, underline, element } => {
            let y = SignedPermutation::parse(&element)?;
            let family: Family = common.family.into();
            let budget = common
                .budget
                .or_else(|| std::env::var("COXSTAN_BUDGET").ok().and_then(|v| v.parse().ok()));
            let count = if underline {
                let mode = if involution { UnderlineMode::Involution } else { UnderlineMode::Reduced };
                underline_count(&y, twist_for(&common), mode, budget)?
            } else if involution {
                count_involution_words(&y, family, twist_for(&common))?
            } else {
                count_reduced_words(&y, family)?
            };
            println!("{count}");
        }
        Command::Ncsp { n, json } => {
            let matchings = enumerate_ncsp(n);
            if json {
                let items: Vec<serde_json::Value> = matchings
                    .iter()
                    .map(|m| {
                        let (lo, hi) = alpha_words(m).expect("noncrossing matchings have words");
                        serde_json::json!({
                            "matching": m.to_string(),
                            "alpha_min": lo,
                            "alpha_max": hi,
                        })
                    })
                    .collect();
                println!("{}", serde_json::json!(items));
            } else {
                for m in matchings {
                    println!("{m}");
                }
            }
        }
        Command::Graph { kind, n, dot, json } => {
            let g = match kind {
                GraphKind::Layer => build_layer_graph(n)?,
                GraphKind::Full => build_full_graph(n)?,
            };
            if dot {
                print!("{}", g.to_dot());
            } else if json {
                println!("{}", graph_json(&g));
            } else {
                println!("vertices: {}", g.vertices.len());
                println!("edges: {}", g.edges.len());
                for e in &g.edges {
                    let arrow = if e.bridge { "=>" } else { "->" };
                    let from: Vec<String> =
                        g.vertices[e.from].word.iter().map(|x| x.to_string()).collect();
                    let to: Vec<String> =
                        g.vertices[e.to].word.iter().map(|x| x.to_string()).collect();
                    println!("{} {arrow} {}", from.join(" "), to.join(" "));
                }
            }
        }
        Command::Verify { suite, max_n, long, huge, json } => {
            let suite: Suite = suite.parse()?;
            let params = VerifyParams { max_n, long, huge };
            let report = run_suite(suite, &params)?;
            print_report(&report, json);
            return Ok(report.pass);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::ParseError(_) => 2,
                Error::BudgetExceeded(_) => 4,
                _ => 3,
            };
            ExitCode::from(code)
        }
    }
}
