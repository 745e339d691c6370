use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use brauer_cover::brauer::{validate, BrauerData};
use brauer_cover::covering::{check_covering, cross_validate_theorem, smash_quiver, CoveringQuiver};
use brauer_cover::dot::{covering_dot, graph_dot, quiver_dot};
use brauer_cover::fixtures::{self, Expected};
use brauer_cover::quiver::{BoundQuiver, QuiverData};
use brauer_cover::random;
use brauer_cover::smash::{smash_brauer, WindowedBrauerPermutation};
use brauer_cover::weights::WeightData;
use brauer_cover::{graph_iso, ribbon_iso, BrauerPermutation, DeletionKind, Error, GWeight, GroupElement};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Galois coverings of Brauer graph algebras from group weights.
///
/// Every INPUT may be a JSON file or the id of a bundled fixture.
#[derive(Parser)]
#[command(name = "brauer-cover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a Brauer permutation; lists every violation.
    Validate { input: String },
    /// Print the Brauer graph and its classification.
    Graph {
        input: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the bound Brauer quiver.
    Quiver {
        input: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        relations: Option<PathBuf>,
    },
    /// Build the covering Brauer permutation B_W.
    Smash {
        input: String,
        /// Weight file or fixture id; defaults to the input fixture's weight.
        #[arg(long)]
        weight: Option<String>,
        /// Window depth, required for infinite groups.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build the covering quiver of a bound quiver.
    SmashQuiver {
        input: String,
        #[arg(long)]
        weight: Option<String>,
        /// Comma-separated group elements, e.g. "a^-1,1,a".
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print a deletion plan; with --apply also build B_W.
    Delete {
        kind: DeletionKind,
        input: String,
        #[arg(long)]
        apply: bool,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smash, check the covering properties and compare both constructions.
    CheckCovering {
        input: String,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        window: Option<String>,
    },
    /// Decide whether two Brauer permutations are isomorphic.
    Iso {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = IsoMode::Ribbon)]
        mode: IsoMode,
    },
    /// Bundled fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Sample a Brauer permutation and weight (seed from BRAUER_COVER_SEED).
    Random {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = random::MAX_HALF_EDGES)]
        max_half_edges: usize,
        /// One of C2, C3, C2xC2, C6, S3; random if unset.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        admissible: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoMode {
    Ribbon,
    Graph,
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Show { id: String },
}

/// A failed command: either a library error or a failed check.
enum Failure {
    Core(Error),
    Check { error: &'static str, witness: Value },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(), Failure>;

fn malformed(msg: impl Into<String>) -> Failure {
    Failure::Core(Error::Malformed(msg.into()))
}

/// The pieces a file or fixture may carry.
#[derive(Default)]
struct Loaded {
    brauer: Option<Value>,
    quiver: Option<Value>,
    weight: Option<Value>,
    expected: Option<Expected>,
}

fn load(arg: &str) -> Result<Loaded, Failure> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| malformed(format!("{arg}: {e}")))?
    } else if let Some(src) = fixtures::source(arg) {
        src.to_owned()
    } else {
        return Err(malformed(format!("`{arg}` is neither a file nor a fixture id")));
    };
    let v: Value = serde_json::from_str(&text).map_err(Error::from)?;
    let Some(obj) = v.as_object() else { return Err(malformed(format!("{arg}: expected a JSON object"))) };
    if obj.contains_key("expected") {
        let expected: Expected = serde_json::from_value(obj["expected"].clone()).map_err(Error::from)?;
        return Ok(Loaded {
            brauer: obj.get("brauer").cloned(),
            quiver: obj.get("quiver").cloned(),
            weight: obj.get("weight").cloned(),
            expected: Some(expected),
        });
    }
    if obj.contains_key("arrows") {
        Ok(Loaded { quiver: Some(v), ..Loaded::default() })
    } else if obj.contains_key("group") {
        Ok(Loaded { weight: Some(v), ..Loaded::default() })
    } else {
        Ok(Loaded { brauer: Some(v), ..Loaded::default() })
    }
}

impl Loaded {
    fn brauer_data(&self, arg: &str) -> Result<BrauerData, Failure> {
        let v = self.brauer.as_ref().ok_or_else(|| malformed(format!("{arg} has no Brauer permutation")))?;
        Ok(serde_json::from_value(v.clone()).map_err(Error::from)?)
    }

    fn brauer(&self, arg: &str) -> Result<BrauerPermutation, Failure> {
        Ok(BrauerPermutation::from_data(&self.brauer_data(arg)?)?)
    }

    fn quiver(&self, arg: &str) -> Result<Option<BoundQuiver>, Failure> {
        let Some(v) = &self.quiver else { return Ok(None) };
        let data: QuiverData = serde_json::from_value(v.clone()).map_err(Error::from)?;
        Ok(Some(BoundQuiver::from_data(&data).map_err(|e| match e {
            Error::Malformed(m) => Error::Malformed(format!("{arg}: {m}")),
            e => e,
        })?))
    }

    /// The fixture's window, used for infinite groups only.
    fn default_window(&self, w: &GWeight) -> Result<Option<Vec<GroupElement>>, Failure> {
        match self.expected.as_ref().and_then(|e| e.window.as_ref()) {
            Some(words) if !w.group().is_finite() => Ok(Some(parse_window(w, &words.join(","))?)),
            _ => Ok(None),
        }
    }

    fn own_weight(&self) -> Result<Option<GWeight>, Failure> {
        let Some(v) = &self.weight else { return Ok(None) };
        let data: WeightData = serde_json::from_value(v.clone()).map_err(Error::from)?;
        Ok(Some(GWeight::from_data(&data)?))
    }
}

/// `--weight`, or the weight carried by the input itself.
fn weight_for(input: &Loaded, flag: Option<&str>) -> Result<GWeight, Failure> {
    match flag {
        Some(arg) => load(arg)?.own_weight()?.ok_or_else(|| malformed(format!("{arg} has no weight"))),
        None => input.own_weight()?.ok_or_else(|| malformed("no weight given; use --weight")),
    }
}

fn parse_window(w: &GWeight, text: &str) -> Result<Vec<GroupElement>, Failure> {
    Ok(text
        .split(',')
        .map(|s| w.group().parse_word(s.trim()))
        .collect::<Result<Vec<_>, _>>()?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn print_json(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

/// `B_W` as a Brauer permutation file when complete, else with its frontier.
fn covering_json(bw: &WindowedBrauerPermutation) -> Result<Value, Failure> {
    let v = if bw.is_complete() {
        serde_json::to_value(bw.to_brauer()?.to_data())
    } else {
        serde_json::to_value(bw.to_data())
    };
    Ok(v.expect("covering serializes"))
}

fn word(w: &GWeight, g: &GroupElement) -> String {
    w.group().format_word(g).unwrap_or_else(|_| format!("{g:?}"))
}

fn covering_quiver_json(cov: &CoveringQuiver, w: &GWeight) -> Value {
    let boundary: Vec<Value> = cov
        .boundary
        .iter()
        .map(|b| {
            let source = cov.base.arrows[b.lift.base].source + b.lift.layer * cov.base.vertices.len();
            json!({
                "name": b.name,
                "source": cov.quiver.vertices[source],
                "target_layer": word(w, &b.target_element),
            })
        })
        .collect();
    json!({
        "group": w.group(),
        "layers": cov.layers.iter().map(|g| word(w, g)).collect::<Vec<_>>(),
        "complete": cov.complete,
        "quiver": cov.quiver.to_data(),
        "boundary": boundary,
    })
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Validate { input } => {
            let data = load(&input)?.brauer_data(&input)?;
            let violations = validate(&data);
            if !violations.is_empty() {
                return Err(Error::InvalidBrauer(violations).into());
            }
            let b = BrauerPermutation::from_data(&data)?;
            print_json(&json!({"valid": true, "half_edges": b.len(), "vertices": b.orbit_count()}));
        }
        Command::Graph { input, dot } => {
            let b = load(&input)?.brauer(&input)?;
            let g = b.brauer_graph();
            if let Some(path) = dot {
                write_file(&path, &graph_dot(&g))?;
            }
            print_json(&json!({"graph": g, "classification": g.classify()}));
        }
        Command::Quiver { input, dot, relations } => {
            let loaded = load(&input)?;
            let q = match loaded.quiver(&input)? {
                Some(q) => q,
                None => loaded.brauer(&input)?.bound_quiver(),
            };
            if let Some(path) = dot {
                write_file(&path, &quiver_dot(&q))?;
            }
            if let Some(path) = relations {
                write_file(&path, &q.relations_text())?;
            }
            print_json(&serde_json::to_value(q.to_data()).expect("quiver serializes"));
        }
        Command::Smash { input, weight, depth, out, dot } => {
            let loaded = load(&input)?;
            let b = loaded.brauer(&input)?;
            let w = weight_for(&loaded, weight.as_deref())?;
            let depth = depth.or(loaded.expected.as_ref().and_then(|e| e.depth));
            let bw = smash_brauer(&b, &w, depth)?;
            let v = covering_json(&bw)?;
            if let Some(path) = dot {
                write_file(&path, &graph_dot(&bw.graph()))?;
            }
            match out {
                Some(path) => {
                    write_file(&path, &serde_json::to_string_pretty(&v).expect("serializes"))?;
                    let g = bw.graph();
                    print_json(&json!({
                        "half_edges": bw.len(),
                        "vertices": g.vertices.len(),
                        "edges": g.edges.len(),
                        "complete": bw.is_complete(),
                        "out": path,
                    }));
                }
                None => print_json(&v),
            }
        }
        Command::SmashQuiver { input, weight, window, dot } => {
            let loaded = load(&input)?;
            let (q, w) = match loaded.quiver(&input)? {
                Some(q) => (q, weight_for(&loaded, weight.as_deref())?),
                None => {
                    let b = loaded.brauer(&input)?;
                    (b.bound_quiver(), weight_for(&loaded, weight.as_deref())?.to_arrow_weight())
                }
            };
            let window = match window {
                Some(text) => Some(parse_window(&w, &text)?),
                None => loaded.default_window(&w)?,
            };
            let cov = smash_quiver(&q, &w, window.as_deref())?;
            if let Some(path) = dot {
                write_file(&path, &covering_dot(&cov))?;
            }
            print_json(&covering_quiver_json(&cov, &w));
        }
        Command::Delete { kind, input, apply, depth, out } => {
            let b = load(&input)?.brauer(&input)?;
            let plan = kind.plan(&b)?;
            let mut report = json!({ "plan": plan });
            if apply {
                let verification = plan.verify(&b, depth)?;
                let bw = smash_brauer(&b, &plan.weight, Some(depth.unwrap_or(3)))?;
                let v = covering_json(&bw)?;
                report["verification"] = serde_json::to_value(&verification).expect("serializes");
                match &out {
                    Some(path) => {
                        write_file(path, &serde_json::to_string_pretty(&v).expect("serializes"))?;
                        report["out"] = json!(path);
                    }
                    None => report["covering"] = v,
                }
                print_json(&report);
                if !verification.passed() {
                    return Err(Failure::Check { error: "DeletionFailed", witness: json!(verification.problems) });
                }
                return Ok(());
            }
            print_json(&report);
        }
        Command::CheckCovering { input, weight, depth, window } => {
            let loaded = load(&input)?;
            if let Some(q) = loaded.quiver(&input)? {
                let w = weight_for(&loaded, weight.as_deref())?;
                let window = match window {
                    Some(text) => Some(parse_window(&w, &text)?),
                    None => loaded.default_window(&w)?,
                };
                let report = check_covering(&smash_quiver(&q, &w, window.as_deref())?);
                print_json(&json!({ "covering": report }));
                if let Some(f) = report.failures.first() {
                    return Err(Failure::Check { error: "CoveringCheckFailed", witness: json!(f) });
                }
                return Ok(());
            }
            let b = loaded.brauer(&input)?;
            let w = weight_for(&loaded, weight.as_deref())?;
            let depth = depth.or(loaded.expected.as_ref().and_then(|e| e.depth));
            let bw = smash_brauer(&b, &w, depth)?;
            let layers = (!(bw.is_complete() && w.group().is_finite())).then(|| bw.full_layers(&b));
            let cov = smash_quiver(&b.bound_quiver(), &w.to_arrow_weight(), layers.as_deref())?;
            let report = check_covering(&cov);
            let theorem = cross_validate_theorem(&b, &w, depth)?;
            print_json(&json!({ "covering": report, "theorem": theorem }));
            if let Some(f) = report.failures.first() {
                return Err(Failure::Check { error: "CoveringCheckFailed", witness: json!(f) });
            }
            if let Some(m) = theorem.mismatches.first() {
                return Err(Failure::Check { error: "TheoremMismatch", witness: json!(m) });
            }
        }
        Command::Iso { left, right, mode } => {
            let b1 = load(&left)?.brauer(&left)?;
            let b2 = load(&right)?.brauer(&right)?;
            let found = match mode {
                IsoMode::Ribbon => ribbon_iso(&b1, &b2).map(|iso| {
                    json!(iso
                        .named_pairs(&b1, &b2)
                        .into_iter()
                        .collect::<std::collections::BTreeMap<_, _>>())
                }),
                IsoMode::Graph => {
                    let (g1, g2) = (b1.brauer_graph(), b2.brauer_graph());
                    graph_iso(&g1.to_multigraph(), &g2.to_multigraph())?.map(|map| {
                        json!(map
                            .iter()
                            .enumerate()
                            .map(|(i, &j)| (g1.vertices[i].name.clone(), g2.vertices[j].name.clone()))
                            .collect::<std::collections::BTreeMap<_, _>>())
                    })
                }
            };
            print_json(&json!({ "isomorphic": found.is_some(), "map": found }));
            if found.is_none() {
                let summary = |b: &BrauerPermutation| {
                    json!({"half_edges": b.len(), "vertices": b.orbit_count()})
                };
                return Err(Failure::Check {
                    error: "NotIsomorphic",
                    witness: json!({ "left": summary(&b1), "right": summary(&b2) }),
                });
            }
        }
        Command::Fixtures { action } => match action {
            FixtureAction::List => {
                for f in fixtures::all() {
                    println!("{}\t{}", f.id, f.description);
                }
            }
            FixtureAction::Show { id } => {
                let src = fixtures::source(&id).ok_or_else(|| malformed(format!("unknown fixture `{id}`")))?;
                print!("{src}");
            }
        },
        Command::Random { seed, max_half_edges, group, admissible } => {
            let mut rng = random::rng(seed.unwrap_or_else(random::seed_from_env));
            let g = match group {
                Some(name) => random::small_group(&name).ok_or_else(|| {
                    malformed(format!("unknown group `{name}`; one of {}", random::SMALL_GROUP_NAMES.join(", ")))
                })?,
                None => random::random_small_group(&mut rng),
            };
            let b = random::random_brauer(&mut rng, max_half_edges);
            let w = if admissible {
                random::random_admissible_weight(&mut rng, &b, &g)
            } else {
                random::random_weight(&mut rng, &b, &g)
            };
            print_json(&json!({ "brauer": b, "weight": w }));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Core(e)) => {
            let witness = match e.witness() {
                Value::Null => json!(e.to_string()),
                w => w,
            };
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string(), "witness": witness }));
            ExitCode::from(if e.is_malformed_input() { 2 } else { 1 })
        }
        Err(Failure::Check { error, witness }) => {
            eprintln!("{}", json!({ "error": error, "witness": witness }));
            ExitCode::FAILURE
        }
    }
}
