//! The `boxlab` command line.
//!
//! Machine artifacts (graphs, covers, reports, sweep tables) go to stdout
//! or the `-o` file; summaries and diagnostics go to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::circular::{build_circular_clique, chi_cover, CircularParams};
use crate::graph::io::{parse_any, to_json};
use crate::graph::Graph;
use crate::interval::{
    boxicity_exact, is_interval_graph, verify_cover, BoxResult, Budget, CoverJson, IntervalCover,
};
use crate::join_cover::{cover_skipping_parts, reduced_cover, JoinCoverPlan};
use crate::zdg::{
    boolean_zdg, compressed_zn, divisor_box_bound, factor, is_box_one, omega_chi_compressed,
    zdg_zn, zn_class_cover, zn_report,
};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    InputError = 2,
    ResourceExceeded = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

impl From<&Error> for ExitStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Input(_) => ExitStatus::InputError,
            Error::Resource(_) => ExitStatus::ResourceExceeded,
            Error::ConstructionDefect(_) => ExitStatus::VerificationFailed,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "boxlab",
    about = "Boxicity certificates: interval covers, verification and ℤ_N reports"
)]
struct Cli {
    /// Write the artifact to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a graph as JSON.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Emit a verified interval cover as JSON.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Check a cover against a graph (exit 1 on failure).
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Exact boxicity of a small graph.
    Box {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        max: usize,
    },
    /// Reports on Γ(ℤ_N).
    #[command(subcommand)]
    Zdg(ZdgCmd),
    /// Batch checks with one line per case.
    #[command(subcommand)]
    Sweep(SweepCmd),
}

#[derive(Args, Debug)]
struct CircularArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    /// Circular clique G^d_k.
    Circular(CircularArgs),
    /// Γ(ℤ_N), or Γ_E(ℤ_N) with --compressed.
    Zdg {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        compressed: bool,
    },
    /// Γ(ℤ_2^k).
    Boolean {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    /// ⌈k/d⌉-rep cover of G^d_k.
    Circular(CircularArgs),
    /// Cover of Γ(ℤ_N) skipping the complete classes N | d².
    Zdg {
        #[arg(long)]
        n: u64,
    },
    /// Cover of a generalized join from per-part covers.
    Join {
        /// Outer graph file.
        #[arg(long)]
        outer: PathBuf,
        /// Part graph files in outer-vertex order.
        #[arg(long = "part", required = true)]
        parts: Vec<PathBuf>,
        /// Complete parts on a clique of the outer graph to leave out.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<usize>,
    },
    /// Cover with one rep per neighborhood class.
    Reduced {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ZdgCmd {
    Report {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand, Debug)]
enum SweepCmd {
    /// χ-covers of G^d_k for 1 ≤ d ≤ dmax, 2d ≤ k ≤ kmax.
    Circular {
        #[arg(long)]
        dmax: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long, default_value_t = 1)]
        dmin: usize,
    },
    /// Formula checks for composite 4 ≤ N ≤ nmax.
    Zdg {
        #[arg(long)]
        nmax: u64,
    },
}

/// Outcome of a command: the artifact and whether its checks passed.
struct Outcome {
    artifact: String,
    summary: String,
    status: ExitStatus,
}

impl Outcome {
    fn ok(artifact: String, summary: String) -> Outcome {
        Outcome {
            artifact,
            summary,
            status: ExitStatus::Success,
        }
    }
}

/// Runs `boxlab` with `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    ExitStatus::Success
                }
                _ => ExitStatus::InputError,
            };
        }
    };
    let outcome = match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return ExitStatus::from(&e);
        }
    };
    if !outcome.summary.is_empty() {
        let _ = writeln!(err, "{}", outcome.summary);
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.artifact).map_err(|e| e.to_string()),
        None => out
            .write_all(outcome.artifact.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return ExitStatus::InputError;
    }
    outcome.status
}

fn read(path: &Path) -> crate::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> crate::Result<Graph> {
    parse_any(&read(path)?)
}

fn line(s: String) -> String {
    s + "\n"
}

fn cover_artifact(cover: &IntervalCover) -> String {
    line(cover.to_json())
}

fn dispatch(cmd: Command) -> crate::Result<Outcome> {
    match cmd {
        Command::Gen(g) => gen(g),
        Command::Cover(c) => cover(c),
        Command::Verify { graph, cover } => verify(&graph, &cover),
        Command::Box { graph, max } => box_cmd(&graph, max),
        Command::Zdg(ZdgCmd::Report { n }) => {
            let r = zn_report(n)?;
            let json = serde_json::to_string(&r).expect("report serializes");
            Ok(Outcome::ok(
                line(json),
                format!("N = {n}: ω = χ = {}, box ≤ {}", r.omega_chi, r.box_upper),
            ))
        }
        Command::Sweep(SweepCmd::Circular { dmin, dmax, kmax }) => sweep_circular(dmin, dmax, kmax),
        Command::Sweep(SweepCmd::Zdg { nmax }) => sweep_zdg(nmax),
    }
}

fn gen(cmd: GenCmd) -> crate::Result<Outcome> {
    let (g, summary) = match cmd {
        GenCmd::Circular(a) => {
            let g = build_circular_clique(a.k, a.d)?;
            (g, format!("G^{}_{}", a.d, a.k))
        }
        GenCmd::Zdg {
            n,
            compressed: false,
        } => {
            let z = zdg_zn(n)?;
            let s = format!("Γ(ℤ_{n}) vertex labels: {:?}", z.labels);
            (z.graph, s)
        }
        GenCmd::Zdg {
            n,
            compressed: true,
        } => {
            let c = compressed_zn(n)?;
            let s = format!("Γ_E(ℤ_{n}) vertex labels: {:?}", c.divisors);
            (c.graph, s)
        }
        GenCmd::Boolean { k } => {
            let b = boolean_zdg(k)?;
            let s = format!("Γ(ℤ_2^{k}) vertex supports: {:?}", b.masks);
            (b.graph, s)
        }
    };
    let summary = format!("{summary}; n = {}, m = {}", g.n(), g.edge_count());
    Ok(Outcome::ok(line(to_json(&g)), summary))
}

fn cover(cmd: CoverCmd) -> crate::Result<Outcome> {
    let cover = match cmd {
        CoverCmd::Circular(a) => chi_cover(a.k, a.d)?,
        CoverCmd::Zdg { n } => zn_class_cover(&compressed_zn(n)?)?,
        CoverCmd::Join { outer, parts, skip } => {
            let outer = read_graph(&outer)?;
            let parts = parts
                .iter()
                .map(|p| read_graph(p))
                .collect::<crate::Result<Vec<_>>>()?;
            let plan = JoinCoverPlan::for_parts(outer, &parts, skip, &Budget::from_env()?)?;
            cover_skipping_parts(&plan)?
        }
        CoverCmd::Reduced { graph } => reduced_cover(&read_graph(&graph)?)?,
    };
    let summary = format!(
        "cover with {} reps on {} vertices, verified",
        cover.len(),
        cover.graph.n()
    );
    Ok(Outcome::ok(cover_artifact(&cover), summary))
}

fn verify(graph: &Path, cover: &Path) -> crate::Result<Outcome> {
    let g = read_graph(graph)?;
    let raw = read(cover)?;
    let parsed: CoverJson =
        serde_json::from_str(&raw).map_err(|e| Error::Input(format!("bad cover JSON: {e}")))?;
    let mut c = IntervalCover::try_from(&parsed)?;
    let mut problems = Vec::new();
    if c.graph != g {
        problems.push("cover's graph differs from --graph".to_string());
        c.graph = g;
    }
    problems.extend(verify_cover(&c).violations.iter().map(|v| v.to_string()));
    #[derive(Serialize)]
    struct VerifyJson {
        ok: bool,
        violations: Vec<String>,
    }
    let ok = problems.is_empty();
    let summary = if ok {
        format!("cover verified: {} reps", c.len())
    } else {
        format!("cover rejected: {}", problems.join("; "))
    };
    let artifact = serde_json::to_string(&VerifyJson {
        ok,
        violations: problems,
    })
    .expect("serializes");
    Ok(Outcome {
        artifact: line(artifact),
        summary,
        status: if ok {
            ExitStatus::Success
        } else {
            ExitStatus::VerificationFailed
        },
    })
}

fn box_cmd(graph: &Path, max: usize) -> crate::Result<Outcome> {
    let g = read_graph(graph)?;
    let budget = Budget::from_env()?;
    let rec = is_interval_graph(&g);
    let obstruction = rec
        .obstruction()
        .map(|o| format!("{} {:?}", o.kind(), o.witness()));
    #[derive(Serialize)]
    struct BoxJson {
        boxicity: Option<usize>,
        max: usize,
        cover: Option<CoverJson>,
    }
    let (j, summary) = match boxicity_exact(&g, max, &budget)? {
        BoxResult::Exact { boxicity, cover } => (
            BoxJson {
                boxicity: Some(boxicity),
                max,
                cover: Some(CoverJson::from(&cover)),
            },
            format!("box = {boxicity}"),
        ),
        BoxResult::Exceeded { max_l } => (
            BoxJson {
                boxicity: None,
                max,
                cover: None,
            },
            format!("box > {max_l}"),
        ),
    };
    let summary = match obstruction {
        Some(o) => format!("{summary}; not interval: {o}"),
        None => summary,
    };
    Ok(Outcome::ok(
        line(serde_json::to_string(&j).expect("serializes")),
        summary,
    ))
}

fn sweep_circular(dmin: usize, dmax: usize, kmax: usize) -> crate::Result<Outcome> {
    let mut table = String::from("k\td\tchi\treps\tstatus\n");
    let (mut pass, mut fail) = (0, 0);
    for d in dmin.max(1)..=dmax {
        for k in 2 * d..=kmax {
            let chi = CircularParams::new(k, d)?.chi();
            let (reps, ok) = match chi_cover(k, d) {
                Ok(c) => {
                    let ok = c.len() == chi
                        && verify_cover(&c).ok()
                        && c.reps
                            .iter()
                            .all(|r| is_interval_graph(&r.graph()).is_interval());
                    (c.len().to_string(), ok)
                }
                Err(Error::Resource(e)) => return Err(Error::Resource(e)),
                Err(_) => ("-".into(), false),
            };
            if ok {
                pass += 1;
            } else {
                fail += 1;
            }
            table += &format!(
                "{k}\t{d}\t{chi}\t{reps}\t{}\n",
                if ok { "pass" } else { "FAIL" }
            );
        }
    }
    let status = if fail == 0 {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailed
    };
    Ok(Outcome {
        artifact: table,
        summary: format!("{pass} passed, {fail} failed"),
        status,
    })
}

fn sweep_zdg(nmax: u64) -> crate::Result<Outcome> {
    if nmax > 100_000 {
        return Err(Error::Resource(format!("nmax = {nmax} exceeds 100000")));
    }
    let mut table = String::from("N\tomega_chi\tbox_upper\tcover\tbox_one\tinterval\tstatus\n");
    let (mut pass, mut fail) = (0, 0);
    for n in 4..=nmax {
        let f = factor(n)?;
        if f.is_prime() {
            continue;
        }
        let oc = omega_chi_compressed(&f);
        let bound = divisor_box_bound(&f);
        let box_one = is_box_one(n)?;
        let prime_power = f.prime_powers().len() == 1;
        let cover = if prime_power {
            None
        } else {
            Some(zn_class_cover(&compressed_zn(n)?))
        };
        // recognition on the full graph is only run where it is cheap
        let interval = if n <= 2000 {
            Some(is_interval_graph(&zdg_zn(n)?.graph).is_interval())
        } else {
            None
        };
        let mut ok = oc.is_ok() && bound.is_ok();
        if let (Some(Ok(c)), Ok(b)) = (&cover, &bound) {
            ok &= c.len() as u64 <= *b;
        }
        ok &= !matches!(cover, Some(Err(_)));
        if let Some(i) = interval {
            ok &= i == box_one;
        }
        if ok {
            pass += 1;
        } else {
            fail += 1;
        }
        let show = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        table += &format!(
            "{n}\t{}\t{}\t{}\t{box_one}\t{}\t{}\n",
            show(oc.as_ref().ok().map(|o| o.value.to_string())),
            show(bound.as_ref().ok().map(|b| b.to_string())),
            show(cover.and_then(|c| c.ok()).map(|c| c.len().to_string())),
            show(interval.map(|i| i.to_string())),
            if ok { "pass" } else { "FAIL" }
        );
    }
    let status = if fail == 0 {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailed
    };
    Ok(Outcome {
        artifact: table,
        summary: format!("{pass} passed, {fail} failed"),
        status,
    })
}
