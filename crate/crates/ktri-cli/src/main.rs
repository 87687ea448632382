//! `ktri`: count, enumerate, map, and verify k-triangulations of a
//! convex n-gon.
//!
//! Exit codes: 0 on success, 1 when a `verify` check fails, 2 on usage
//! errors (bad parameters, unparsable input, exceeded enumeration
//! guards).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use ktri::counting::{count_determinant, count_product};
use ktri::pipedream::{box_diagonal, position_box};
use ktri::polygon::enumerate_triangulations_bounded;
use ktri::subword::VertexId;
use ktri::{
    dream_from_triangulation, k_stars, relevant_word, target_permutation, triangulation_from_dream,
    Diagonal, Permutation, PipeDream, SubwordComplex, Topology, Triangulation,
};

const DEFAULT_LIMIT: usize = 12;

#[derive(Parser)]
#[command(
    name = "ktri",
    version,
    about = "Exact combinatorics of k-triangulations of a convex n-gon"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the k-triangulations of the n-gon
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// How to compute the count; all methods agree
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        /// Override the guard on n for enumeration-based methods
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// List every k-triangulation, one per line in text mode
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Map a triangulation to its pipe dream, reduced word, and permutation
    Map {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated diagonals, e.g. "2-5,2-6,2-7,3-6,3-8,5-8";
        /// pass "" for the empty triangulation
        #[arg(value_name = "TRIANGULATION")]
        triangulation: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Print a Schubert polynomial and its value at 1
    Schubert {
        /// Use the triangulation target permutation for these parameters
        #[arg(long, requires = "k")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
        /// Explicit one-line permutation, e.g. "1,4,3,2"
        #[arg(long, conflicts_with = "n")]
        perm: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run consistency checks and report pass/fail per check
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated subset of
        /// counts,bijection,dimension,stars,sphere,decomposable or "all"
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Det,
    Product,
    Schubert,
    Enumerate,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Product => "product",
            Method::Schubert => "schubert",
            Method::Enumerate => "enumerate",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    /// Bad input, bad parameters, exceeded guards: exit 2.
    Usage(String),
    /// One or more verify checks failed: exit 1.
    ChecksFailed,
}

impl From<ktri::Error> for Failure {
    fn from(e: ktri::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Count {
            n,
            k,
            method,
            limit,
            output,
        } => cmd_count(n, k, method, limit.unwrap_or(DEFAULT_LIMIT), &output),
        Command::Enumerate {
            n,
            k,
            limit,
            output,
        } => cmd_enumerate(n, k, limit.unwrap_or(DEFAULT_LIMIT), &output),
        Command::Map {
            n,
            k,
            triangulation,
            output,
        } => cmd_map(n, k, &triangulation, &output),
        Command::Schubert {
            n,
            k,
            perm,
            limit,
            output,
        } => cmd_schubert(
            n,
            k,
            perm.as_deref(),
            limit.unwrap_or(DEFAULT_LIMIT),
            &output,
        ),
        Command::Verify {
            n,
            k,
            checks,
            limit,
            output,
        } => cmd_verify(n, k, &checks, limit.unwrap_or(DEFAULT_LIMIT), &output),
    }
}

fn emit(output: &OutputOpts, text: String) -> Result<(), Failure> {
    let mut body = text;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &output.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

#[derive(Serialize)]
struct CountOutput {
    n: usize,
    k: usize,
    method: &'static str,
    count: String,
}

fn compute_count(n: usize, k: usize, method: Method, limit: usize) -> Result<BigInt, Failure> {
    let count = match method {
        Method::Det => count_determinant(n, k)?,
        Method::Product => count_product(n, k)?,
        Method::Enumerate => BigInt::from(enumerate_triangulations_bounded(n, k, limit)?.len()),
        Method::Schubert => {
            let target = target_permutation(n, k)?;
            schubert_bounded(&target, limit)?.evaluate_ones()
        }
    };
    Ok(count)
}

fn schubert_bounded(p: &Permutation, limit: usize) -> Result<ktri::SchubertPolynomial, Failure> {
    Ok(ktri::pipedream::schubert_polynomial_bounded(p, limit)?)
}

fn cmd_count(
    n: usize,
    k: usize,
    method: Method,
    limit: usize,
    output: &OutputOpts,
) -> Result<(), Failure> {
    let count = compute_count(n, k, method, limit)?;
    match output.format {
        Format::Text => emit(output, count.to_string()),
        Format::Json => emit(
            output,
            to_json(&CountOutput {
                n,
                k,
                method: method.name(),
                count: count.to_string(),
            }),
        ),
    }
}

#[derive(Serialize)]
struct EnumerateOutput {
    n: usize,
    k: usize,
    count: usize,
    triangulations: Vec<Vec<Diagonal>>,
}

fn cmd_enumerate(n: usize, k: usize, limit: usize, output: &OutputOpts) -> Result<(), Failure> {
    let all = enumerate_triangulations_bounded(n, k, limit)?;
    match output.format {
        Format::Text => {
            let lines: Vec<String> = all.iter().map(|t| t.to_string()).collect();
            emit(output, lines.join("\n"))
        }
        Format::Json => emit(
            output,
            to_json(&EnumerateOutput {
                n,
                k,
                count: all.len(),
                triangulations: all
                    .iter()
                    .map(|t| t.diagonals().iter().copied().collect())
                    .collect(),
            }),
        ),
    }
}

#[derive(Serialize)]
struct MapOutput {
    n: usize,
    k: usize,
    triangulation: Triangulation,
    pipe_dream: PipeDream,
    word: Vec<usize>,
    permutation: Vec<usize>,
}

fn cmd_map(n: usize, k: usize, text: &str, output: &OutputOpts) -> Result<(), Failure> {
    let t = Triangulation::parse(n, k, text)?;
    let dream = dream_from_triangulation(&t);
    let word = dream.word();
    let permutation = dream.permutation();
    match output.format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "triangulation: {t}").unwrap();
            writeln!(s, "pipe dream: {}", dream.to_text()).unwrap();
            writeln!(s, "word: {word}").unwrap();
            write!(s, "permutation: {permutation}").unwrap();
            emit(output, s)
        }
        Format::Json => emit(
            output,
            to_json(&MapOutput {
                n,
                k,
                triangulation: t,
                word: word.indices().collect(),
                permutation: permutation.oneline().to_vec(),
                pipe_dream: dream,
            }),
        ),
    }
}

#[derive(Serialize)]
struct SchubertTerm {
    exponents: Vec<u32>,
    coefficient: String,
}

#[derive(Serialize)]
struct SchubertOutput {
    permutation: Vec<usize>,
    terms: Vec<SchubertTerm>,
    value_at_ones: String,
}

fn cmd_schubert(
    n: Option<usize>,
    k: Option<usize>,
    perm: Option<&str>,
    limit: usize,
    output: &OutputOpts,
) -> Result<(), Failure> {
    let p = match (perm, n, k) {
        (Some(text), _, _) => text.parse::<Permutation>()?,
        (None, Some(n), Some(k)) => target_permutation(n, k)?,
        _ => {
            return Err(Failure::Usage(
                "pass either --perm or both --n and --k".into(),
            ))
        }
    };
    let poly = schubert_bounded(&p, limit)?;
    match output.format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "permutation: {p}").unwrap();
            writeln!(s, "polynomial: {poly}").unwrap();
            write!(s, "value at 1: {}", poly.evaluate_ones()).unwrap();
            emit(output, s)
        }
        Format::Json => emit(
            output,
            to_json(&SchubertOutput {
                permutation: p.oneline().to_vec(),
                terms: poly
                    .terms()
                    .iter()
                    .map(|(exponents, coefficient)| SchubertTerm {
                        exponents: exponents.clone(),
                        coefficient: coefficient.to_string(),
                    })
                    .collect(),
                value_at_ones: poly.evaluate_ones().to_string(),
            }),
        ),
    }
}

#[derive(Serialize)]
struct CheckOutput {
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyOutput {
    n: usize,
    k: usize,
    checks: Vec<CheckOutput>,
    pass: bool,
}

const ALL_CHECKS: [&str; 6] = [
    "counts",
    "bijection",
    "dimension",
    "stars",
    "sphere",
    "decomposable",
];

fn cmd_verify(
    n: usize,
    k: usize,
    checks: &str,
    limit: usize,
    output: &OutputOpts,
) -> Result<(), Failure> {
    ktri::polygon::validate_parameters(n, k)?;
    let selected: Vec<&str> = if checks == "all" {
        ALL_CHECKS.to_vec()
    } else {
        let parts: Vec<&str> = checks.split(',').map(str::trim).collect();
        for p in &parts {
            if !ALL_CHECKS.contains(p) {
                return Err(Failure::Usage(format!(
                    "unknown check {p:?}; available: {} or all",
                    ALL_CHECKS.join(",")
                )));
            }
        }
        parts
    };

    let mut results = Vec::new();
    for name in selected {
        let verdict = match name {
            "counts" => check_counts(n, k, limit)?,
            "bijection" => check_bijection(n, k, limit)?,
            "dimension" => check_dimension(n, k, limit)?,
            "stars" => check_stars(n, k, limit)?,
            "sphere" => check_sphere(n, k)?,
            "decomposable" => check_decomposable(n, k)?,
            _ => unreachable!(),
        };
        results.push(CheckOutput {
            name: ALL_CHECKS
                .iter()
                .find(|&&c| c == name)
                .expect("check names are validated"),
            pass: verdict.pass,
            detail: verdict.detail,
        });
    }
    render_verify(n, k, results, output)
}

fn render_verify(
    n: usize,
    k: usize,
    results: Vec<CheckOutput>,
    output: &OutputOpts,
) -> Result<(), Failure> {
    let all_pass = results.iter().all(|r| r.pass);
    match output.format {
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                writeln!(
                    s,
                    "check {}: {} ({})",
                    r.name,
                    if r.pass { "pass" } else { "FAIL" },
                    r.detail
                )
                .unwrap();
            }
            write!(s, "result: {}", if all_pass { "pass" } else { "FAIL" }).unwrap();
            emit(output, s)?;
        }
        Format::Json => {
            emit(
                output,
                to_json(&VerifyOutput {
                    n,
                    k,
                    checks: results,
                    pass: all_pass,
                }),
            )?;
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn pass(detail: String) -> Result<Self, Failure> {
        Ok(Verdict { pass: true, detail })
    }

    fn fail(detail: String) -> Result<Self, Failure> {
        Ok(Verdict {
            pass: false,
            detail,
        })
    }
}

// Checks report their outcome in the Verdict; Err is reserved for guard
// and parameter problems, which abort the whole run as usage errors.

fn check_counts(n: usize, k: usize, limit: usize) -> Result<Verdict, Failure> {
    let enumerated = enumerate_triangulations_bounded(n, k, limit)?.len();
    let facets = subword_complex(n, k)?.facets().len();
    let schubert = schubert_bounded(&target_permutation(n, k)?, limit)?.evaluate_ones();
    let det = count_determinant(n, k)?;
    let product = count_product(n, k)?;
    let agree = BigInt::from(enumerated) == det
        && det == product
        && BigInt::from(facets) == det
        && schubert == det;
    let detail = format!(
        "enumerate={enumerated} facets={facets} schubert={schubert} det={det} product={product}"
    );
    if agree {
        Verdict::pass(detail)
    } else {
        Verdict::fail(detail)
    }
}

fn check_bijection(n: usize, k: usize, limit: usize) -> Result<Verdict, Failure> {
    let enumerated: BTreeSet<Triangulation> = enumerate_triangulations_bounded(n, k, limit)?
        .into_iter()
        .collect();
    let sc = subword_complex(n, k)?;
    let mut mapped = BTreeSet::new();
    for facet in sc.facets() {
        let diagonals: BTreeSet<Diagonal> = facet
            .into_iter()
            .map(|pos: VertexId| {
                let (r, c) = position_box(pos, n - k)?;
                box_diagonal(r, c, n)
            })
            .collect::<Result<_, _>>()?;
        mapped.insert(Triangulation::new(n, k, diagonals)?);
    }
    let round_trips = enumerated
        .iter()
        .all(|t| triangulation_from_dream(&dream_from_triangulation(t), n, k).as_ref() == Ok(t));
    let detail = format!(
        "{} facets against {} triangulations, round-trips {}",
        mapped.len(),
        enumerated.len(),
        if round_trips { "ok" } else { "broken" }
    );
    if mapped == enumerated && round_trips {
        Verdict::pass(detail)
    } else {
        Verdict::fail(detail)
    }
}

fn check_dimension(n: usize, k: usize, limit: usize) -> Result<Verdict, Failure> {
    let expected = Triangulation::expected_size(n, k);
    let sc = subword_complex(n, k)?;
    let facets_ok = sc.facets().iter().all(|f| f.len() == expected);
    let enum_ok = enumerate_triangulations_bounded(n, k, limit)?
        .iter()
        .all(|t| t.diagonals().len() == expected);
    let detail = format!("every facet has {expected} vertices");
    if facets_ok && enum_ok {
        Verdict::pass(detail)
    } else {
        Verdict::fail(detail)
    }
}

fn check_stars(n: usize, k: usize, limit: usize) -> Result<Verdict, Failure> {
    let mut checked = 0usize;
    for t in enumerate_triangulations_bounded(n, k, limit)? {
        let stars = k_stars(&t);
        if stars.stars().len() != n - 2 * k {
            return Verdict::fail(format!(
                "{t}: expected {} stars, found {}",
                n - 2 * k,
                stars.stars().len()
            ));
        }
        let incidence = stars.incidence();
        for d in t.diagonals() {
            if incidence.get(d) != Some(&2) {
                return Verdict::fail(format!("{t}: diagonal {d} not in exactly 2 stars"));
            }
        }
        for (e, count) in &incidence {
            if !t.contains(e) && *count != 1 {
                return Verdict::fail(format!("{t}: boundary edge {e} in {count} stars"));
            }
        }
        checked += 1;
    }
    Verdict::pass(format!(
        "{} stars with correct incidences on each of {checked} triangulations",
        n - 2 * k
    ))
}

fn check_sphere(n: usize, k: usize) -> Result<Verdict, Failure> {
    let word = relevant_word(n, k)?;
    let target = target_permutation(n, k)?;
    let demazure_ok = word.demazure_product() == target;
    let sc = SubwordComplex::new(word, target)?;
    let classified = sc.classify()?;
    let d = Triangulation::expected_size(n, k);
    let expected_chi: i64 = if d.is_multiple_of(2) { 0 } else { 2 };
    let chi = sc.complex().euler_characteristic()?;
    let detail = format!(
        "demazure {} target, classified as {classified}, chi={chi} (expected {expected_chi})",
        if demazure_ok {
            "equals"
        } else {
            "differs from"
        },
    );
    if demazure_ok && classified == Topology::Sphere && chi == expected_chi {
        Verdict::pass(detail)
    } else {
        Verdict::fail(detail)
    }
}

fn check_decomposable(n: usize, k: usize) -> Result<Verdict, Failure> {
    let complex = subword_complex(n, k)?.complex();
    match complex.vertex_decomposition_min_pivot() {
        Ok(tree) if tree.certifies(&complex) => Verdict::pass(format!(
            "first-letter decomposition of depth {}",
            tree.depth()
        )),
        Ok(_) => Verdict::fail("decomposition tree does not certify".into()),
        Err(e) => Verdict::fail(format!("not decomposable: {e}")),
    }
}

fn subword_complex(n: usize, k: usize) -> Result<SubwordComplex, Failure> {
    Ok(SubwordComplex::new(
        relevant_word(n, k)?,
        target_permutation(n, k)?,
    )?)
}
