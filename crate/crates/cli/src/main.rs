use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prdf_core::family::{
    enumerate_family, random_family_tree, recognize, replay_certificate, FamilyError, PeelCertificate, Recognition,
};
use prdf_core::graph::{canonical_form, emit_graph6, parse_edge_list, parse_graph6, Forest, Graph, Tree};
use prdf_core::solver::{optimal_assignment, prdf_number, w_set};
use prdf_core::stability::stability_report;
use prdf_core::verify::{self, Counterexample, OBSERVATION_MAX_ORDER, THEOREM_MAX_ORDER};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const EXIT_PROPERTY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SIZE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Largest input for the linear-time commands.
const MAX_LINEAR_ORDER: usize = 5_000_000;
/// Largest input for commands that solve one DP per vertex.
const MAX_QUADRATIC_ORDER: usize = 5_000;
/// Largest `generate --steps`; each step recomputes the forced-zero set.
const MAX_GENERATE_STEPS: usize = 300;

#[derive(Parser)]
#[command(name = "prdf", version, about = "Perfect Roman domination on trees: solve, test stability, recognize and generate stable trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum weight of a perfect Roman dominating function.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Include a minimum-weight function.
        #[arg(long)]
        witness: bool,
        /// Include the vertices valued 0 by every minimum-weight function.
        #[arg(long)]
        wset: bool,
    },
    /// Change of the minimum weight under each single-vertex deletion.
    Stable {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide membership in the stable-tree family, with a certificate.
    Recognize {
        #[command(flatten)]
        input: InputArgs,
        /// Write the construction certificate to this file when accepted.
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Print family members as graph6 lines.
    Generate {
        /// Random construction steps from P3.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        steps: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Every member of this order, sorted by canonical form.
        #[arg(long)]
        all: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run exhaustive property sweeps, or replay a certificate.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Defaults to `all` unless a certificate is given.
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        /// Certificate file to replay; compared against --input when present.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Report destination; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem,
    Lemmas,
    Observation,
    All,
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> CliError {
    CliError { code, message: message.into() }
}

#[derive(Serialize)]
struct Report {
    command: Vec<String>,
    version: &'static str,
    input_digest: Option<String>,
    results: Value,
    timing_ms: f64,
}

/// What a command produced, before timing is attached.
struct Outcome {
    digest: Option<String>,
    results: Value,
    passed: bool,
}

fn read_input(path: Option<&PathBuf>) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    match path {
        Some(p) => buf = fs::read(p).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", p.display())))?,
        None => {
            io::stdin().read_to_end(&mut buf).map_err(|e| fail(EXIT_PARSE, format!("stdin: {e}")))?;
        }
    }
    Ok(buf)
}

fn load_graph(path: Option<&PathBuf>, format: Format) -> Result<Graph, CliError> {
    let bytes = read_input(path)?;
    let parsed = match format {
        Format::Edgelist => parse_edge_list(&bytes),
        Format::Graph6 => parse_graph6(&bytes),
    };
    parsed.map_err(|e| fail(EXIT_PARSE, e.to_string()))
}

fn load_forest(input: &InputArgs, max: usize) -> Result<Forest, CliError> {
    let g = load_graph(input.input.as_ref(), input.format)?;
    check_size(g.n(), max)?;
    Forest::new(g).map_err(|e| fail(EXIT_PARSE, format!("input is not a forest: {e}")))
}

fn load_tree(path: Option<&PathBuf>, format: Format, max: usize) -> Result<Tree, CliError> {
    let g = load_graph(path, format)?;
    check_size(g.n(), max)?;
    Tree::new(g).map_err(|e| fail(EXIT_PARSE, format!("input is not a tree: {e}")))
}

fn check_size(n: usize, max: usize) -> Result<(), CliError> {
    if n > max {
        Err(fail(EXIT_SIZE, format!("{n} vertices exceeds the limit of {max} for this command")))
    } else {
        Ok(())
    }
}

fn digest_tree(t: &Tree) -> String {
    hex::encode(Sha256::digest(canonical_form(t).as_bytes()))
}

/// Hash of the sorted component forms, so relabelings digest alike.
fn digest_forest(f: &Forest) -> String {
    let mut forms: Vec<Vec<u8>> = f.components().iter().map(|(t, _)| canonical_form(t).as_bytes().to_vec()).collect();
    forms.sort();
    hex::encode(Sha256::digest(forms.join(&b'|')))
}

fn solve(input: &InputArgs, witness: bool, wset: bool) -> Result<Outcome, CliError> {
    let limit = if wset { MAX_QUADRATIC_ORDER } else { MAX_LINEAR_ORDER };
    let forest = load_forest(input, limit)?;
    let mut results = json!({
        "n": forest.n(),
        "components": forest.component_count(),
        "gamma": prdf_number(&forest),
    });
    if witness {
        results["witness"] = json!(optimal_assignment(&forest).values());
    }
    if wset {
        let mut members = Vec::new();
        for (tree, labels) in forest.components() {
            members.extend(w_set(&tree).vertices().iter().map(|&v| labels[v]));
        }
        members.sort_unstable();
        results["wset"] = json!(members);
    }
    Ok(Outcome { digest: Some(digest_forest(&forest)), results, passed: true })
}

fn stable(input: &InputArgs) -> Result<Outcome, CliError> {
    let t = load_tree(input.input.as_ref(), input.format, MAX_QUADRATIC_ORDER)?;
    let report = stability_report(&t);
    let results = json!({
        "n": t.n(),
        "base": report.base,
        "deltas": report.deltas,
        "stable": report.stable,
        "unstable_vertices": report.unstable_vertices(),
    });
    Ok(Outcome { digest: Some(digest_tree(&t)), results, passed: true })
}

fn recognize_cmd(input: &InputArgs, emit: Option<&PathBuf>) -> Result<Outcome, CliError> {
    let t = load_tree(input.input.as_ref(), input.format, MAX_QUADRATIC_ORDER)?;
    let results = match recognize(&t) {
        Recognition::Accepted { certificate, relabeling } => {
            if let Some(path) = emit {
                fs::write(path, certificate.to_string())
                    .map_err(|e| fail(EXIT_INTERNAL, format!("{}: {e}", path.display())))?;
            }
            json!({
                "n": t.n(),
                "accepted": true,
                "steps": certificate.steps().len(),
                "certificate": certificate.to_string(),
                "relabeling": relabeling,
            })
        }
        Recognition::Rejected { reason, at_order } => json!({
            "n": t.n(),
            "accepted": false,
            "reason": format!("{reason:?}"),
            "at_order": at_order,
        }),
    };
    Ok(Outcome { digest: Some(digest_tree(&t)), results, passed: true })
}

fn generate(steps: Option<usize>, seed: u64, all: Option<usize>) -> Result<String, CliError> {
    let mut out = String::new();
    if let Some(n) = all {
        let family = enumerate_family(n).map_err(|e| match e {
            FamilyError::OrderTooLarge { .. } => fail(EXIT_SIZE, e.to_string()),
            _ => fail(EXIT_PARSE, e.to_string()),
        })?;
        for (_, member) in family.iter() {
            out.push_str(&emit_graph6(member.tree.graph()));
            out.push('\n');
        }
        return Ok(out);
    }
    let steps = steps.expect("clap requires --steps or --all");
    check_size(steps, MAX_GENERATE_STEPS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (tree, _) = random_family_tree(steps, &mut rng).map_err(|e| fail(EXIT_INTERNAL, e.to_string()))?;
    out.push_str(&emit_graph6(tree.graph()));
    out.push('\n');
    Ok(out)
}

fn counterexamples(list: &[Counterexample]) -> Value {
    list.iter().map(|c| json!({ "graph6": c.graph6, "detail": c.detail })).collect()
}

fn run_suites(suite: Suite, max_n: usize) -> Result<(Value, bool), CliError> {
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let limit = if wants(Suite::Observation) { OBSERVATION_MAX_ORDER } else { THEOREM_MAX_ORDER };
    check_size(max_n, limit)?;
    let size_error = |e: verify::SweepLimit| fail(EXIT_SIZE, e.to_string());

    let mut results = serde_json::Map::new();
    let mut passed = true;
    if wants(Suite::Theorem) {
        let s = verify::theorem_sweep(max_n).map_err(size_error)?;
        passed &= s.passed();
        let rows: Vec<Value> = s
            .rows
            .iter()
            .map(|r| json!({ "n": r.n, "trees": r.trees, "stable": r.stable, "recognized": r.recognized, "family": r.family }))
            .collect();
        results.insert(
            "theorem".into(),
            json!({
                "passed": s.passed(),
                "orders": rows,
                "discrepancies": counterexamples(&s.discrepancies),
                "certificate_failures": counterexamples(&s.certificate_failures),
                "corollary_failures": counterexamples(&s.corollary_failures),
                "structural_rejections": counterexamples(&s.structural_rejections),
            }),
        );
    }
    if wants(Suite::Lemmas) {
        let s = verify::lemma_sweep(max_n).map_err(size_error)?;
        passed &= s.passed();
        results.insert(
            "lemmas".into(),
            json!({
                "passed": s.passed(),
                "stable_trees": s.stable_trees,
                "checks": s.checks,
                "violations": counterexamples(&s.violations),
            }),
        );
    }
    if wants(Suite::Observation) {
        let s = verify::observation_sweep(max_n).map_err(size_error)?;
        passed &= s.passed();
        results.insert(
            "observation".into(),
            json!({
                "passed": s.passed(),
                "stable_trees": s.stable_trees,
                "optima": s.optima,
                "stars": s.stars,
                "violations": counterexamples(&s.violations),
            }),
        );
    }
    Ok((Value::Object(results), passed))
}

fn check_certificate(path: &PathBuf, input: Option<&PathBuf>, format: Format) -> Result<(Value, bool, Option<String>), CliError> {
    let text = fs::read_to_string(path).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let certificate = PeelCertificate::parse(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let expected = input.map(|p| load_tree(Some(p), format, MAX_QUADRATIC_ORDER)).transpose()?;
    let digest = expected.as_ref().map(digest_tree);
    let mut result = json!({ "steps": certificate.steps().len(), "order": certificate.order() });
    let passed = match replay_certificate(&certificate) {
        Ok(tree) => {
            result["valid"] = json!(true);
            result["graph6"] = json!(emit_graph6(tree.graph()));
            match &expected {
                Some(t) => {
                    let same = canonical_form(t) == canonical_form(&tree);
                    result["matches_input"] = json!(same);
                    same
                }
                None => true,
            }
        }
        Err(e) => {
            result["valid"] = json!(false);
            result["error"] = json!(e.to_string());
            false
        }
    };
    Ok((result, passed, digest))
}

fn verify_cmd(
    max_n: usize,
    suite: Option<Suite>,
    certificate: Option<&PathBuf>,
    input: Option<&PathBuf>,
    format: Format,
) -> Result<Outcome, CliError> {
    let mut results = serde_json::Map::new();
    let mut passed = true;
    let mut digest = None;
    if let Some(path) = certificate {
        let (value, ok, d) = check_certificate(path, input, format)?;
        results.insert("certificate".into(), value);
        passed &= ok;
        digest = d;
    }
    let suite = suite.or(certificate.is_none().then_some(Suite::All));
    if let Some(suite) = suite {
        let (value, ok) = run_suites(suite, max_n)?;
        if let Value::Object(map) = value {
            results.extend(map);
        }
        passed &= ok;
    }
    results.insert("passed".into(), json!(passed));
    Ok(Outcome { digest, results: Value::Object(results), passed })
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| fail(EXIT_INTERNAL, format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| fail(EXIT_INTERNAL, e.to_string())),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let start = Instant::now();
    let (outcome, output) = match &cli.command {
        Command::Solve { input, witness, wset } => (solve(input, *witness, *wset)?, input.output.as_ref()),
        Command::Stable { input } => (stable(input)?, input.output.as_ref()),
        Command::Recognize { input, emit_certificate } => {
            (recognize_cmd(input, emit_certificate.as_ref())?, input.output.as_ref())
        }
        Command::Generate { steps, seed, all, output } => {
            let lines = generate(*steps, *seed, *all)?;
            write_output(output.as_ref(), &lines)?;
            return Ok(0);
        }
        Command::Verify { max_n, suite, certificate, input, format, output } => {
            (verify_cmd(*max_n, *suite, certificate.as_ref(), input.as_ref(), *format)?, output.as_ref())
        }
    };
    let report = Report {
        command: std::env::args().skip(1).collect(),
        version: env!("CARGO_PKG_VERSION"),
        input_digest: outcome.digest,
        results: outcome.results,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    let mut text = serde_json::to_string_pretty(&report).map_err(|e| fail(EXIT_INTERNAL, e.to_string()))?;
    text.push('\n');
    write_output(output, &text)?;
    Ok(if outcome.passed { 0 } else { EXIT_PROPERTY })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
