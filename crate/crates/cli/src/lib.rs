//! `blinv`: invariants of Booth-Lueker edge ideals from the command line.
//!
//! Subcommands: `bl` (the construction itself), `betti`, `bs`, `alhc` (the
//! three invariants, each with independent computation routes), `compare`
//! (signature comparison of two graphs), and `verify` (the oracle-vs-closed
//! cross-check suite on all small graphs).
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 applicability
//! error (a closed-form hypothesis failed; the message says which), 4
//! internal verification mismatch.

pub mod graph_file;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bl_invariants::alhc::{alhc_bl_closed, alhc_blcomp_closed, alhc_from_betti, Alhc};
use bl_invariants::betti::{betti_bl_of_graph, betti_blcomp_closed, betti_oracle, BettiVector};
use bl_invariants::boij_soderberg::{
    coeffs_bl_closed, coeffs_blcomp_closed, coeffs_from_betti, CoefficientVector,
};
use bl_invariants::booth_lueker::{bl, bl_complement, bl_complement_multi, bl_multi};
use bl_invariants::graph::all_graphs;
use bl_invariants::invariant::{compare as compare_graphs, signature};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use graph_file::{parse_graph_file, render_graph_file, ParsedGraph};
use report::{
    coeff_lines, fmt_int_vec, tsv_row, CompareReport, Format, GraphReport, SignatureReport,
    VerifyReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

/// Largest `--max-n` accepted by `verify`; the oracle side doubles its work
/// per extra vertex and per extra edge.
pub const VERIFY_MAX_N: usize = 6;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Guard(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Guard(_) => EXIT_GUARD,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Guard(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<bl_invariants::Error> for Failure {
    fn from(e: bl_invariants::Error) -> Self {
        Failure::Guard(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "blinv",
    version,
    about = "Invariants of Booth-Lueker edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output rendering
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BettiMethod {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvMethod {
    Closed,
    Matrix,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Booth-Lueker graph (or its complement) in graph-file format
    Bl {
        file: PathBuf,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        multigraph: bool,
    },
    /// Betti vector of the edge ideal of BL(G), or of its complement
    Betti {
        file: PathBuf,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        multigraph: bool,
        #[arg(long, value_enum, default_value = "closed")]
        method: BettiMethod,
    },
    /// Boij-Söderberg coefficients, as exact fractions
    Bs {
        file: PathBuf,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        multigraph: bool,
        #[arg(long, value_enum, default_value = "closed")]
        method: ConvMethod,
    },
    /// Anti-lecture-hall composition
    Alhc {
        file: PathBuf,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        multigraph: bool,
        #[arg(long, value_enum, default_value = "closed")]
        method: ConvMethod,
    },
    /// Compare two graphs by their Booth-Lueker Betti signatures
    Compare { file1: PathBuf, file2: PathBuf },
    /// Cross-check closed forms against the oracle on all small graphs
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };

    match dispatch(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Bl {
            file,
            complement,
            multigraph,
        } => cmd_bl(file, *complement, *multigraph, format, out),
        Command::Betti {
            file,
            complement,
            multigraph,
            method,
        } => cmd_betti(file, *complement, *multigraph, *method, format, out, err),
        Command::Bs {
            file,
            complement,
            multigraph,
            method,
        } => cmd_bs(file, *complement, *multigraph, *method, format, out, err),
        Command::Alhc {
            file,
            complement,
            multigraph,
            method,
        } => cmd_alhc(file, *complement, *multigraph, *method, format, out, err),
        Command::Compare { file1, file2 } => cmd_compare(file1, file2, format, out),
        Command::Verify { max_n } => cmd_verify(*max_n, format, out),
    }
}

fn load(path: &Path, multigraph: bool) -> Result<ParsedGraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    if !text.is_ascii() {
        return Err(Failure::Parse(format!(
            "{}: input is not ASCII",
            path.display()
        )));
    }
    parse_graph_file(&text, multigraph)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_simple(path: &Path) -> Result<bl_invariants::graph::Graph, Failure> {
    match load(path, false)? {
        ParsedGraph::Simple(g) => Ok(g),
        ParsedGraph::Multi(_) => unreachable!("simple parse requested"),
    }
}

/// Betti vector by closed form; the BL side of a multigraph has no degree
/// vector of the right shape, so only the oracle can serve it.
fn omega_closed(parsed: &ParsedGraph, complement: bool) -> Result<BettiVector, Failure> {
    match (parsed, complement) {
        (ParsedGraph::Simple(g), false) => Ok(betti_bl_of_graph(g)),
        (ParsedGraph::Multi(_), false) => Err(Failure::Guard(
            "the closed Betti form is stated for simple graphs; use --method oracle".into(),
        )),
        (p, true) => Ok(betti_blcomp_closed(p.vertex_count(), p.edge_count())),
    }
}

fn omega_oracle(parsed: &ParsedGraph, complement: bool) -> Result<BettiVector, Failure> {
    let h = match (parsed, complement) {
        (ParsedGraph::Simple(g), false) => bl(g).into_graph(),
        (ParsedGraph::Multi(g), false) => bl_multi(g).into_graph(),
        (ParsedGraph::Simple(g), true) => bl_complement(g),
        (ParsedGraph::Multi(g), true) => bl_complement_multi(g),
    };
    betti_oracle(&h).map_err(Failure::from)
}

/// Betti vector feeding the matrix conversions: the exact closed form where
/// available, the oracle for the one case without one.
fn omega_for_matrix(parsed: &ParsedGraph, complement: bool) -> Result<BettiVector, Failure> {
    match (parsed, complement) {
        (ParsedGraph::Multi(_), false) => omega_oracle(parsed, false),
        _ => omega_closed(parsed, complement),
    }
}

fn cmd_bl(
    path: &Path,
    complement: bool,
    multigraph: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let parsed = load(path, multigraph)?;
    let g = match (&parsed, complement) {
        (ParsedGraph::Simple(g), false) => bl(g).into_graph(),
        (ParsedGraph::Multi(g), false) => bl_multi(g).into_graph(),
        (ParsedGraph::Simple(g), true) => bl_complement(g),
        (ParsedGraph::Multi(g), true) => bl_complement_multi(g),
    };
    let edges = g.edges();
    match format {
        Format::Pretty | Format::Tsv => {
            write!(out, "{}", render_graph_file(g.vertex_count(), &edges)).ok();
        }
        Format::Json => {
            let rep = GraphReport {
                n: g.vertex_count().to_string(),
                m: edges.len().to_string(),
                edges: edges
                    .iter()
                    .map(|&(u, v)| [u.to_string(), v.to_string()])
                    .collect(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&rep).expect("serializable")
            )
            .ok();
        }
    }
    Ok(())
}

fn cmd_betti(
    path: &Path,
    complement: bool,
    multigraph: bool,
    method: BettiMethod,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let parsed = load(path, multigraph)?;
    let (n, m) = (parsed.vertex_count(), parsed.edge_count());

    let pair = match method {
        BettiMethod::Closed => (Some(omega_closed(&parsed, complement)?), None),
        BettiMethod::Oracle => (None, Some(omega_oracle(&parsed, complement)?)),
        BettiMethod::Both => (
            Some(omega_closed(&parsed, complement)?),
            Some(omega_oracle(&parsed, complement)?),
        ),
    };

    if let (Some(a), Some(b)) = (&pair.0, &pair.1) {
        if a != b {
            writeln!(err, "closed: {}", fmt_int_vec(a.entries())).ok();
            writeln!(err, "oracle: {}", fmt_int_vec(b.entries())).ok();
            writeln!(out, "MISMATCH").ok();
            return Err(Failure::Mismatch(
                "closed form and oracle disagree on the Betti vector".into(),
            ));
        }
    }
    let omega = pair.0.as_ref().or(pair.1.as_ref()).expect("one method ran");
    let both = matches!(method, BettiMethod::Both);

    match format {
        Format::Pretty => {
            if both {
                writeln!(out, "omega[closed] = {}", fmt_int_vec(omega.entries())).ok();
                writeln!(out, "omega[oracle] = {}", fmt_int_vec(omega.entries())).ok();
                writeln!(out, "MATCH").ok();
            } else {
                writeln!(out, "omega = {}", fmt_int_vec(omega.entries())).ok();
            }
        }
        Format::Json => {
            let rep = SignatureReport::new(n, m).with_omega(omega.entries());
            writeln!(
                out,
                "{}",
                serde_json::to_string(&rep).expect("serializable")
            )
            .ok();
            if both {
                writeln!(err, "MATCH").ok();
            }
        }
        Format::Tsv => {
            writeln!(
                out,
                "{}",
                tsv_row("omega", omega.entries().iter().map(|b| b.to_string()))
            )
            .ok();
            if both {
                writeln!(err, "MATCH").ok();
            }
        }
    }
    Ok(())
}

fn coeffs_closed_route(
    parsed: &ParsedGraph,
    complement: bool,
    err: &mut dyn Write,
) -> Result<CoefficientVector, Failure> {
    match (parsed, complement) {
        (ParsedGraph::Simple(g), false) => {
            let (n, m) = (g.vertex_count(), g.edge_count());
            let c = coeffs_bl_closed(&g.degree_vector(), m)?;
            if m + 1 == n {
                writeln!(
                    err,
                    "note: m = n-1 is outside the stated closed-form hypothesis m >= n; \
                     the value agrees with the matrix method"
                )
                .ok();
            }
            Ok(c)
        }
        (ParsedGraph::Multi(_), false) => Err(Failure::Guard(
            "the closed coefficient formula is stated for simple graphs; use --method matrix"
                .into(),
        )),
        (p, true) => coeffs_blcomp_closed(p.vertex_count(), p.edge_count()).map_err(Failure::from),
    }
}

fn alhc_closed_route(parsed: &ParsedGraph, complement: bool) -> Result<Alhc, Failure> {
    match (parsed, complement) {
        (ParsedGraph::Simple(g), false) => {
            alhc_bl_closed(&g.degree_vector(), g.edge_count()).map_err(Failure::from)
        }
        (ParsedGraph::Multi(_), false) => Err(Failure::Guard(
            "the closed composition formula is stated for simple graphs; use --method matrix"
                .into(),
        )),
        (p, true) => Ok(alhc_blcomp_closed(p.vertex_count(), p.edge_count())),
    }
}

fn cmd_bs(
    path: &Path,
    complement: bool,
    multigraph: bool,
    method: ConvMethod,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let parsed = load(path, multigraph)?;
    let (n, m) = (parsed.vertex_count(), parsed.edge_count());

    let matrix_route = || -> Result<CoefficientVector, Failure> {
        let omega = omega_for_matrix(&parsed, complement)?;
        coeffs_from_betti(&omega).map_err(Failure::from)
    };
    let coeffs = match method {
        ConvMethod::Closed => coeffs_closed_route(&parsed, complement, err)?,
        ConvMethod::Matrix => matrix_route()?,
        ConvMethod::Both => {
            let closed = coeffs_closed_route(&parsed, complement, err)?;
            let matrix = matrix_route()?;
            if closed != matrix {
                writeln!(out, "MISMATCH").ok();
                return Err(Failure::Mismatch(
                    "closed form and matrix method disagree on the coefficients".into(),
                ));
            }
            closed
        }
    };
    let both = matches!(method, ConvMethod::Both);

    match format {
        Format::Pretty => {
            for line in coeff_lines(&coeffs) {
                writeln!(out, "{line}").ok();
            }
            if both {
                writeln!(out, "MATCH").ok();
            }
        }
        Format::Json => {
            let rep = SignatureReport::new(n, m).with_coeffs(&coeffs);
            writeln!(
                out,
                "{}",
                serde_json::to_string(&rep).expect("serializable")
            )
            .ok();
            if both {
                writeln!(err, "MATCH").ok();
            }
        }
        Format::Tsv => {
            for (j, c) in coeffs.nonzero() {
                writeln!(
                    out,
                    "{}",
                    tsv_row(
                        &format!("c_{j}"),
                        [c.numer().to_string(), c.denom().to_string()]
                    )
                )
                .ok();
            }
            if both {
                writeln!(err, "MATCH").ok();
            }
        }
    }
    Ok(())
}

fn cmd_alhc(
    path: &Path,
    complement: bool,
    multigraph: bool,
    method: ConvMethod,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let parsed = load(path, multigraph)?;
    let (n, m) = (parsed.vertex_count(), parsed.edge_count());

    let matrix_route = || -> Result<Alhc, Failure> {
        let omega = omega_for_matrix(&parsed, complement)?;
        alhc_from_betti(&omega).map_err(Failure::from)
    };
    let lambda = match method {
        ConvMethod::Closed => alhc_closed_route(&parsed, complement)?,
        ConvMethod::Matrix => matrix_route()?,
        ConvMethod::Both => {
            let closed = alhc_closed_route(&parsed, complement)?;
            let matrix = matrix_route()?;
            if closed != matrix {
                writeln!(out, "MISMATCH").ok();
                return Err(Failure::Mismatch(
                    "closed form and matrix method disagree on the composition".into(),
                ));
            }
            closed
        }
    };
    let both = matches!(method, ConvMethod::Both);

    match format {
        Format::Pretty => {
            writeln!(out, "lambda = {}", fmt_int_vec(lambda.entries())).ok();
            if both {
                writeln!(out, "MATCH").ok();
            }
        }
        Format::Json => {
            let rep = SignatureReport::new(n, m).with_lambda(lambda.entries());
            writeln!(
                out,
                "{}",
                serde_json::to_string(&rep).expect("serializable")
            )
            .ok();
            if both {
                writeln!(err, "MATCH").ok();
            }
        }
        Format::Tsv => {
            writeln!(
                out,
                "{}",
                tsv_row("lambda", lambda.entries().iter().map(|x| x.to_string()))
            )
            .ok();
            if both {
                writeln!(err, "MATCH").ok();
            }
        }
    }
    Ok(())
}

fn cmd_compare(
    path1: &Path,
    path2: &Path,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let g1 = load_simple(path1)?;
    let g2 = load_simple(path2)?;
    let verdict = compare_graphs(&g1, &g2);
    let sig1 = signature(&g1);
    let sig2 = signature(&g2);

    match format {
        Format::Pretty => {
            writeln!(out, "{verdict}").ok();
            for (label, sig) in [("left", &sig1), ("right", &sig2)] {
                writeln!(out, "{label}: n = {}, m = {}", sig.n, sig.m).ok();
                writeln!(out, "  omega  = {}", fmt_int_vec(sig.omega.entries())).ok();
                writeln!(out, "  coeffs = ({})", coeff_lines(&sig.coeffs).join(", ")).ok();
                writeln!(out, "  lambda = {}", fmt_int_vec(sig.lambda.entries())).ok();
            }
        }
        Format::Json => {
            let rep = CompareReport {
                verdict: verdict.to_string(),
                left: SignatureReport::from_signature(&sig1),
                right: SignatureReport::from_signature(&sig2),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&rep).expect("serializable")
            )
            .ok();
        }
        Format::Tsv => {
            writeln!(out, "{}", tsv_row("verdict", [verdict.to_string()])).ok();
            for (label, sig) in [("left", &sig1), ("right", &sig2)] {
                writeln!(
                    out,
                    "{}",
                    tsv_row(
                        &format!("{label}.omega"),
                        sig.omega.entries().iter().map(|b| b.to_string())
                    )
                )
                .ok();
                for (j, c) in sig.coeffs.nonzero() {
                    writeln!(
                        out,
                        "{}",
                        tsv_row(
                            &format!("{label}.c_{j}"),
                            [c.numer().to_string(), c.denom().to_string()]
                        )
                    )
                    .ok();
                }
                writeln!(
                    out,
                    "{}",
                    tsv_row(
                        &format!("{label}.lambda"),
                        sig.lambda.entries().iter().map(|x| x.to_string())
                    )
                )
                .ok();
            }
        }
    }
    Ok(())
}

fn cmd_verify(max_n: usize, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    if max_n > VERIFY_MAX_N {
        return Err(Failure::Usage(format!(
            "--max-n is capped at {VERIFY_MAX_N}: the enumeration oracle doubles its work \
             with every extra vertex and edge"
        )));
    }

    let mut graphs = 0u64;
    let mut checks = 0u64;
    let mut mismatches: Vec<String> = Vec::new();
    let mut per_n: Vec<(usize, u64, u64)> = Vec::new();
    let mut seen_degree_vectors = std::collections::BTreeSet::new();
    let mut seen_sizes = std::collections::BTreeSet::new();

    for n in 0..=max_n {
        let checks_before = checks;
        let mut graphs_n = 0u64;
        for g in all_graphs(n) {
            graphs += 1;
            graphs_n += 1;
            let m = g.edge_count();
            let d = g.degree_vector();

            let closed = betti_bl_of_graph(&g);
            let oracle = betti_oracle(bl(&g).graph()).map_err(Failure::from)?;
            checks += 1;
            if closed != oracle {
                mismatches.push(format!("BL Betti mismatch on {:?} (n = {n})", g.edges()));
            }

            let comp_closed = betti_blcomp_closed(n, m);
            let comp_oracle = betti_oracle(&bl_complement(&g)).map_err(Failure::from)?;
            checks += 1;
            if comp_closed != comp_oracle {
                mismatches.push(format!(
                    "complement Betti mismatch on {:?} (n = {n})",
                    g.edges()
                ));
            }

            // Conversion routes depend only on the degree vector / on (n, m).
            if seen_degree_vectors.insert(d.counts().to_vec()) && m + 1 >= n {
                let closed_coeffs = coeffs_bl_closed(&d, m).map_err(Failure::from)?;
                let matrix_coeffs = coeffs_from_betti(&closed).map_err(Failure::from)?;
                checks += 1;
                if closed_coeffs != matrix_coeffs {
                    mismatches.push(format!("coefficient mismatch for d = {:?}", d.counts()));
                }
                let closed_lambda = alhc_bl_closed(&d, m).map_err(Failure::from)?;
                let matrix_lambda = alhc_from_betti(&closed).map_err(Failure::from)?;
                checks += 1;
                if closed_lambda != matrix_lambda {
                    mismatches.push(format!("composition mismatch for d = {:?}", d.counts()));
                }
            }
            if seen_sizes.insert((n, m)) && n >= 3 {
                let matrix_lambda = alhc_from_betti(&comp_closed).map_err(Failure::from)?;
                checks += 1;
                if alhc_blcomp_closed(n, m) != matrix_lambda {
                    mismatches.push(format!(
                        "complement composition mismatch at (n, m) = ({n}, {m})"
                    ));
                }
                if m >= 1 {
                    let closed_coeffs = coeffs_blcomp_closed(n, m).map_err(Failure::from)?;
                    let matrix_coeffs = coeffs_from_betti(&comp_closed).map_err(Failure::from)?;
                    checks += 1;
                    if closed_coeffs != matrix_coeffs {
                        mismatches.push(format!(
                            "complement coefficient mismatch at (n, m) = ({n}, {m})"
                        ));
                    }
                }
            }
        }
        per_n.push((n, graphs_n, checks - checks_before));
    }

    match format {
        Format::Pretty => {
            for (n, graphs_n, checks_n) in &per_n {
                writeln!(out, "n = {n}: {graphs_n} graphs, {checks_n} checks").ok();
            }
            if mismatches.is_empty() {
                writeln!(
                    out,
                    "verify: PASS ({graphs} graphs, {checks} checks, 0 mismatches)"
                )
                .ok();
            } else {
                for m in &mismatches {
                    writeln!(out, "mismatch: {m}").ok();
                }
                writeln!(
                    out,
                    "verify: FAIL ({graphs} graphs, {checks} checks, {} mismatches)",
                    mismatches.len()
                )
                .ok();
            }
        }
        Format::Json => {
            let rep = VerifyReport {
                max_n: max_n.to_string(),
                graphs: graphs.to_string(),
                checks: checks.to_string(),
                mismatches: mismatches.len().to_string(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&rep).expect("serializable")
            )
            .ok();
        }
        Format::Tsv => {
            writeln!(out, "{}", tsv_row("graphs", [graphs.to_string()])).ok();
            writeln!(out, "{}", tsv_row("checks", [checks.to_string()])).ok();
            writeln!(
                out,
                "{}",
                tsv_row("mismatches", [mismatches.len().to_string()])
            )
            .ok();
            writeln!(
                out,
                "{}",
                tsv_row(
                    "result",
                    [if mismatches.is_empty() {
                        "PASS"
                    } else {
                        "FAIL"
                    }
                    .to_string()]
                )
            )
            .ok();
        }
    }

    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{} verification mismatches",
            mismatches.len()
        )))
    }
}
