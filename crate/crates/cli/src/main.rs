//! `dismatch`: matching numbers, equality deciders, reduction gadgets and
//! sequence graphs from the command line.
//!
//! Results go to stdout as JSON, diagnostics to stderr. Exit status 0 means
//! success or a positive answer, 1 a well-formed negative answer, 2 an error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use dismatch_core::census::{generate, GenOptions};
use dismatch_core::deciders::{
    decide_nu_eq_nudj_small_diameter, decide_nu_eq_nus, decide_nud_eq_nus_bounded_degree,
    recognize_cameron_walker, verify_disequality_certificate,
};
use dismatch_core::io::{
    json_error, read_dimacs, read_graph_json, read_matching_json, write_dimacs,
};
use dismatch_core::matching::matching_number;
use dismatch_core::reductions::{
    build_conp_reduction, build_reduction_diam4, build_reduction_nu_nudi,
    build_reduction_nudi_nudj, build_subcubic_f, solve_x3c, witness_matching_diam4,
    witness_matching_f, ReductionArtifact, X3CInstance,
};
use dismatch_core::restricted::{
    disconnected_matching_number, induced_matching_number, oracle_enumerate,
};
use dismatch_core::sequence::{construct_sequence_graph, verify_sequence_graph, SequenceSpec};
use dismatch_core::{full_profile, Budget, Graph, Matching, MatchingNumbers};

#[derive(Parser)]
#[command(
    name = "dismatch",
    version,
    about = "Induced and disconnected matching toolkit"
)]
struct Cli {
    /// Graph file format; sniffed from the extension (.json or DIMACS) when omitted
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dimacs,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Nu,
    #[value(name = "nu_s")]
    NuS,
    #[value(name = "nu_d")]
    NuD,
    Chain,
    Profile,
}

#[derive(Clone, Copy, ValueEnum)]
enum Question {
    /// nu = nu_{d,j} on graphs of diameter at most 3
    NuNudj,
    /// nu_d = nu_s, routed through the bounded-degree argument
    NudNusBounded,
    /// nu = nu_s
    NuNus,
    /// Cameron-Walker recognition with a decomposition as witness
    Cw,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// nu = nu_d, diameter 4 with the apex
    Diam4,
    /// nu = nu_{d,i}
    Nudi,
    /// nu_{d,i} = nu_{d,j}, diameter 3
    Nuij,
    /// maximum degree 3
    Subcubic,
    /// nu_d(g) >= k to nu_s != nu_d
    Conp,
}

#[derive(Subcommand)]
enum Command {
    /// Compute matching numbers of a graph
    Compute {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "profile")]
        what: Quantity,
        /// Branch-and-bound node budget
        #[arg(long)]
        budget: Option<u64>,
        /// Enumerate every matching instead of branching
        #[arg(long)]
        oracle: bool,
    },
    /// Decide an equality between matching numbers
    Decide {
        graph: PathBuf,
        #[arg(long, value_enum)]
        question: Question,
        #[arg(long, default_value_t = 2)]
        j: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Build a reduction gadget from an exact cover instance or a base graph
    Reduce {
        /// Exact cover instance in JSON; not used by the conp target
        instance: Option<PathBuf>,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Bipartite base graph for the conp target
        #[arg(long)]
        base: Option<PathBuf>,
        /// Solve the instance and attach the witness matching of a cover
        #[arg(long)]
        witness: bool,
        /// Build the diam4 target without its apex vertex
        #[arg(long)]
        no_apex: bool,
    },
    /// Build a graph realizing a sequence of c-disconnected matching numbers
    ConstructSequence {
        spec: PathBuf,
        /// Recompute the numbers of the result and compare
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a matching against a graph
    Verify {
        graph: PathBuf,
        /// JSON array of vertex pairs
        #[arg(long)]
        matching: PathBuf,
        /// Require at least this many components in the induced subgraph
        #[arg(long)]
        c: Option<usize>,
        /// Require the matching to certify nu_d != nu_s
        #[arg(long)]
        certificate: bool,
    },
    /// Generate a random graph
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Write here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure(String);

impl From<dismatch_core::Error> for Failure {
    fn from(e: dismatch_core::Error) -> Self {
        Failure(e.to_string())
    }
}

type Run = Result<Answer, Failure>;

/// A payload and whether it is a positive answer.
struct Answer {
    payload: String,
    positive: bool,
}

impl Answer {
    fn yes(v: impl Serialize) -> Self {
        Answer::new(v, true)
    }

    fn new(v: impl Serialize, positive: bool) -> Self {
        Answer {
            payload: serde_json::to_string(&v).expect("payload serializes"),
            positive,
        }
    }

    fn raw(text: String) -> Self {
        Answer {
            payload: text,
            positive: true,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path, format: Option<Format>) -> Result<Graph, Failure> {
    let text = read(path)?;
    let sniffed = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        _ => Format::Dimacs,
    };
    let parsed = match format.unwrap_or(sniffed) {
        Format::Json => read_graph_json(&text),
        Format::Dimacs => read_dimacs(&text),
    };
    parsed.map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Failure(format!("{}: {}", path.display(), json_error(e))))
}

fn budget(nodes: Option<u64>) -> Budget {
    nodes.map_or_else(Budget::default, Budget::new)
}

fn compute(g: &Graph, what: Quantity, nodes: Option<u64>, oracle: bool) -> Run {
    let b = budget(nodes);
    let profile = |g: &Graph| -> Result<MatchingNumbers, Failure> {
        Ok(if oracle {
            oracle_enumerate(g)?
        } else {
            full_profile(g, b)?
        })
    };
    let v = match what {
        Quantity::Nu if oracle => json!({ "nu": profile(g)?.nu }),
        Quantity::Nu => json!({ "nu": matching_number(g) }),
        Quantity::NuS if oracle => json!({ "nu_s": profile(g)?.nu_s }),
        Quantity::NuS => json!({ "nu_s": induced_matching_number(g, b)? }),
        Quantity::NuD if oracle => json!({ "nu_d": profile(g)?.nu_d }),
        Quantity::NuD => json!({ "nu_d": disconnected_matching_number(g, b)? }),
        Quantity::Chain => json!({ "chain": profile(g)?.chain }),
        Quantity::Profile => serde_json::to_value(profile(g)?).expect("profile serializes"),
    };
    Ok(Answer::yes(v))
}

fn decide(g: &Graph, question: Question, j: usize, nodes: Option<u64>) -> Run {
    Ok(match question {
        Question::NuNudj => {
            let d = decide_nu_eq_nudj_small_diameter(g, j)?;
            let equal = d.equal;
            Answer::new(d, equal)
        }
        Question::NudNusBounded => {
            let d = decide_nud_eq_nus_bounded_degree(g, budget(nodes))?;
            let equal = d.equal;
            Answer::new(d, equal)
        }
        Question::NuNus => {
            let equal = decide_nu_eq_nus(g);
            Answer::new(json!({ "equal": equal }), equal)
        }
        Question::Cw => match recognize_cameron_walker(g)? {
            Some(d) => Answer::yes(json!({ "cameron_walker": true, "decomposition": d })),
            None => Answer::new(json!({ "cameron_walker": false }), false),
        },
    })
}

fn matching_report(g: &Graph, m: &Matching, predicted: usize) -> Value {
    let a = m.analyze(g);
    json!({
        "edges": m.edges(),
        "size": a.size,
        "components": a.induced_components,
        "disconnected": a.is_disconnected,
        "maximum": a.size == predicted,
    })
}

#[allow(clippy::too_many_arguments)]
fn reduce(
    instance: Option<&Path>,
    target: Target,
    i: Option<usize>,
    j: Option<usize>,
    k: Option<usize>,
    base: Option<&Path>,
    witness: bool,
    no_apex: bool,
    format: Option<Format>,
) -> Run {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure(format!("--{flag} is required for this target")))
    };
    if target == Target::Conp {
        let base = base.ok_or_else(|| Failure("--base is required for the conp target".into()))?;
        if witness {
            return Err(Failure(
                "the conp target has no constructive witness".into(),
            ));
        }
        let g = load_graph(base, format)?;
        return Ok(Answer::yes(build_conp_reduction(&g, need(k, "k")?)?));
    }

    let path =
        instance.ok_or_else(|| Failure("an exact cover instance file is required".into()))?;
    let inst: X3CInstance = load_json(path)?;
    inst.validate()?;
    let art: ReductionArtifact = match target {
        Target::Diam4 => build_reduction_diam4(&inst, !no_apex)?,
        Target::Nudi => build_reduction_nu_nudi(&inst, need(i, "i")?)?,
        Target::Nuij => build_reduction_nudi_nudj(&inst, need(i, "i")?, need(j, "j")?)?,
        Target::Subcubic => build_subcubic_f(&inst)?,
        Target::Conp => unreachable!("handled above"),
    };
    if !witness {
        return Ok(Answer::yes(art));
    }
    let Some(cover) = solve_x3c(&inst)? else {
        return Ok(Answer::new(
            json!({ "artifact": art, "cover": null, "witness": null }),
            false,
        ));
    };
    let m = match target {
        Target::Subcubic => witness_matching_f(&art, &inst, &cover)?,
        _ => witness_matching_diam4(&art, &inst, &cover)?,
    };
    let report = matching_report(&art.graph, &m, art.predicted_nu);
    Ok(Answer::yes(
        json!({ "artifact": art, "cover": cover, "witness": report }),
    ))
}

fn construct_sequence(path: &Path, verify: bool, nodes: Option<u64>) -> Run {
    let spec: SequenceSpec = load_json(path)?;
    let g = construct_sequence_graph(&spec)?;
    if !verify {
        return Ok(Answer::yes(g));
    }
    let ok = verify_sequence_graph(&g, &spec, budget(nodes))?;
    Ok(Answer::new(json!({ "graph": g, "verified": ok }), ok))
}

fn verify(g: &Graph, matching: &Path, c: Option<usize>, certificate: bool) -> Run {
    let pairs = read_matching_json(&read(matching)?)?;
    let m = Matching::new(g, &pairs)?;
    let a = m.analyze(g);
    let mut report = json!({
        "size": a.size,
        "components": a.induced_components,
        "induced": a.is_induced,
        "disconnected": a.is_disconnected,
        "maximal": m.is_maximal(g),
    });
    let mut positive = true;
    if let Some(c) = c {
        let ok = a.is_c_disconnected(c);
        report["c_disconnected"] = json!(ok);
        positive &= ok;
    }
    if certificate {
        let ok = verify_disequality_certificate(g, &pairs)?;
        report["certificate"] = json!(ok);
        positive &= ok;
    }
    Ok(Answer::new(report, positive))
}

fn run(cli: Cli) -> Run {
    let format = cli.format;
    match cli.command {
        Command::Compute {
            graph,
            what,
            budget,
            oracle,
        } => compute(&load_graph(&graph, format)?, what, budget, oracle),
        Command::Decide {
            graph,
            question,
            j,
            budget,
        } => decide(&load_graph(&graph, format)?, question, j, budget),
        Command::Reduce {
            instance,
            target,
            i,
            j,
            k,
            base,
            witness,
            no_apex,
        } => reduce(
            instance.as_deref(),
            target,
            i,
            j,
            k,
            base.as_deref(),
            witness,
            no_apex,
            format,
        ),
        Command::ConstructSequence {
            spec,
            verify,
            budget,
        } => construct_sequence(&spec, verify, budget),
        Command::Verify {
            graph,
            matching,
            c,
            certificate,
        } => verify(&load_graph(&graph, format)?, &matching, c, certificate),
        Command::Gen {
            n,
            m,
            seed,
            connected,
            bipartite,
            max_degree,
            output,
        } => {
            let opts = GenOptions {
                n,
                m,
                connected,
                bipartite,
                max_degree,
            };
            let g = generate(opts, seed)?;
            let text = match format {
                Some(Format::Json) => serde_json::to_string(&g).expect("graph serializes") + "\n",
                _ => write_dimacs(&g),
            };
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Answer::yes(json!({ "written": path })))
                }
                None => Ok(Answer::raw(text)),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(answer) => {
            let text = answer.payload;
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            ExitCode::from(if answer.positive { 0 } else { 1 })
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
