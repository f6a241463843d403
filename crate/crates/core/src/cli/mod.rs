//! Command-line front end. Every subcommand prints one JSON (or flattened
//! CSV) report; exit status 0 means success, 1 means a checked statement is
//! false, 2 means a usage, parse or budget error.

mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::blowup::{optimize_weights, OptimizerConfig};
use crate::bounds::{
    edge_bound_check, final_inequality_forms, optimal_delta_fraction, solve_theorem2_params,
    theorem2_end_to_end, thm1_chain_check, thm1_coefficient, thm1_hypothesis, thm1_sweep,
    Inequality, Theorem2Config,
};
use crate::embeddings::{count_automorphisms, count_copies, h_degrees};
use crate::error::{Error, Result};
use crate::graph::builders::{build_blowup, build_gps_example1, build_theorem2_h, build_turan2};
use crate::graph::io::{parse_graph, write_graph};
use crate::graph::Graph;
use crate::matchings::{check_theorem1_hypothesis, HypothesisVerdict};
use crate::oracle::{
    enumerate_triangle_free, find_maximizers, SearchConfig, DEFAULT_MAX_N, OVERRIDE_MAX_N,
};
use crate::rational::{big_string, parse_ratio, ratio_string};

pub use output::{to_csv, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "extremal-count",
    version,
    about = "Exact embedding counts, blow-up coefficients and certificates"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Worker threads; 0 uses one per core.
    #[arg(
        long,
        env = "EXTREMAL_COUNT_WORKERS",
        default_value_t = 0,
        global = true
    )]
    pub workers: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Embeddings, automorphisms, copies and H-degrees of a pattern in a host.
    Count { pattern: PathBuf, host: PathBuf },
    /// Check one of the exact inequality certificates.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Blob weights maximising the leading coefficient of a pattern.
    Optimize(OptimizeArgs),
    /// Exact maximisers of the copy count over triangle-free hosts.
    Search(SearchArgs),
    /// Write a named construction in the graph text format.
    Gen {
        #[command(subcommand)]
        which: Gen,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// `|E| <= Delta (n - Delta)` on one graph or on every triangle-free
    /// graph of a given order.
    Lemma2 {
        #[arg(long, conflicts_with = "n")]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        budget_n: usize,
    },
    /// The minimum-degree coefficient at one `(x, d)`, or a sweep.
    Thm1Coeff {
        #[arg(long, requires = "d")]
        x: Option<u64>,
        #[arg(long, requires = "x")]
        d: Option<u64>,
        /// Sweep every admissible pair with `x <= SWEEP`.
        #[arg(long, default_value_t = 300)]
        sweep: u64,
    },
    /// Every link of the estimate chain at `(x, d)`.
    Thm1Chain {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        d: u64,
    },
    /// Blob weights and threshold for the five-cycle construction.
    Thm2Params(LambdaArgs),
    /// Leading-coefficient comparison on `H(d, x)`.
    Thm2E2e {
        #[command(flatten)]
        lambda: LambdaArgs,
        /// Defaults to the first admissible value at or above the threshold.
        #[arg(long)]
        x: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    /// `2d / x`, as `p/q`, an integer or a decimal.
    #[arg(long)]
    pub lambda: String,
    #[arg(long, default_value_t = 1024)]
    pub scan_denominator: u64,
    #[arg(long, default_value_t = 60)]
    pub halving_depth: u32,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    pub pattern: PathBuf,
    /// `k2`, `c5`, or a graph file.
    #[arg(long, default_value = "k2")]
    pub blowup: String,
    #[arg(long, default_value_t = 50)]
    pub grid: usize,
    #[arg(long, default_value_t = 200)]
    pub max_iter: usize,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 4)]
    pub seeds: usize,
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    pub pattern: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// Largest host order allowed; 9 is accepted with a warning.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub budget_n: usize,
    #[arg(long)]
    pub time_limit: Option<u64>,
    /// Directory receiving one graph file per witness.
    #[arg(long)]
    pub witness_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Gen {
    /// Balanced complete bipartite graph.
    Turan2 {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    Petersen,
    /// Blow-up of a pattern file with the given blob sizes.
    Blowup {
        pattern: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Double star with centres of `k - 2` leaves joined through a path.
    GpsExample1 {
        k: usize,
    },
    /// The pattern `H(d, x)` of the five-cycle construction.
    Theorem2H {
        d: usize,
        x: usize,
    },
}

/// Parses `args` (program name first), runs the command and writes the
/// report. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_ERROR;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    let format = cli.format;
    let out = cli.out.clone();
    if let Command::Search(args) = &cli.command {
        if args.budget_n == OVERRIDE_MAX_N {
            let _ = writeln!(
                stderr,
                "warning: enumerating at n = 9 takes several seconds per pattern"
            );
        }
    }
    let outcome = crate::run_with_workers(cli.workers, || execute(&cli.command, format));
    match outcome {
        Ok((text, ok)) => {
            let written = match &out {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_ERROR;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
}

fn execute(command: &Command, format: Format) -> Result<(String, bool)> {
    match command {
        Command::Count { pattern, host } => {
            let report = cmd_count(&read_graph(pattern)?, &read_graph(host)?)?;
            Ok((output::render(format, "count", true, &report)?, true))
        }
        Command::Verify { which } => cmd_verify(which, format),
        Command::Optimize(args) => {
            let report = cmd_optimize(args)?;
            Ok((output::render(format, "optimize", true, &report)?, true))
        }
        Command::Search(args) => {
            let report = cmd_search(args)?;
            Ok((output::render(format, "search", true, &report)?, true))
        }
        Command::Gen { which } => Ok((write_graph(&cmd_gen(which)?), true)),
    }
}

#[derive(Debug, Serialize)]
pub struct CountReport {
    pub pattern_vertices: usize,
    pub host_vertices: usize,
    pub embeddings: String,
    pub automorphisms: String,
    pub copies: String,
    pub h_degrees: Vec<String>,
    /// Present when the pattern is bipartite.
    pub matching: Option<HypothesisVerdict>,
}

pub fn cmd_count(pattern: &Graph, host: &Graph) -> Result<CountReport> {
    let h = h_degrees(pattern, host);
    Ok(CountReport {
        pattern_vertices: pattern.n(),
        host_vertices: host.n(),
        embeddings: big_string(h.total()),
        automorphisms: big_string(&count_automorphisms(pattern)),
        copies: big_string(&count_copies(pattern, host)),
        h_degrees: h.values().iter().map(big_string).collect(),
        matching: check_theorem1_hypothesis(pattern).ok(),
    })
}

#[derive(Debug, Serialize)]
struct Lemma2Sweep {
    n: usize,
    graphs: usize,
    all_hold: bool,
    equality_iff_complete_bipartite: bool,
    tight_graphs: usize,
    failures: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Serialize)]
struct CoefficientReport {
    x: u64,
    d: u64,
    value: String,
    value_approx: f64,
    exceeds_two_fifths: bool,
    hypothesis: bool,
    optimal_delta_fraction: String,
}

#[derive(Debug, Serialize)]
struct ParamsReport {
    params: crate::bounds::Theorem2Params,
    written_form_at_x_min: Inequality,
    vertex_form_at_x_min: Inequality,
}

fn theorem2_config(args: &LambdaArgs) -> Result<(num_rational::BigRational, Theorem2Config)> {
    let lambda = parse_ratio(&args.lambda)?;
    Ok((
        lambda,
        Theorem2Config {
            scan_denominator: args.scan_denominator,
            halving_depth: args.halving_depth,
        },
    ))
}

fn cmd_verify(which: &Verify, format: Format) -> Result<(String, bool)> {
    let (ok, text) = match which {
        Verify::Lemma2 {
            graph: Some(path), ..
        } => {
            let r = edge_bound_check(&read_graph(path)?)?;
            let ok = r.holds && r.equality == r.equality_is_complete_bipartite;
            (ok, output::render(format, "verify lemma2", ok, &r)?)
        }
        Verify::Lemma2 {
            graph: None,
            n,
            budget_n,
        } => {
            if *n > *budget_n {
                return Err(Error::BudgetExceeded(format!(
                    "n = {n} exceeds --budget-n {budget_n}"
                )));
            }
            let graphs = enumerate_triangle_free(*n, *budget_n >= OVERRIDE_MAX_N)?;
            let mut sweep = Lemma2Sweep {
                n: *n,
                graphs: graphs.len(),
                all_hold: true,
                equality_iff_complete_bipartite: true,
                tight_graphs: 0,
                failures: Vec::new(),
            };
            for g in &graphs {
                let r = edge_bound_check(g)?;
                sweep.tight_graphs += usize::from(r.equality);
                let iff = r.equality == r.complete_bipartite
                    && r.equality == r.equality_is_complete_bipartite;
                sweep.all_hold &= r.holds;
                sweep.equality_iff_complete_bipartite &= iff;
                if !r.holds || !iff {
                    sweep.failures.push(g.edges());
                }
            }
            let ok = sweep.all_hold && sweep.equality_iff_complete_bipartite;
            (ok, output::render(format, "verify lemma2", ok, &sweep)?)
        }
        Verify::Thm1Coeff {
            x: Some(x),
            d: Some(d),
            ..
        } => {
            let c = thm1_coefficient(*x, *d)?;
            let report = CoefficientReport {
                x: *x,
                d: *d,
                value: ratio_string(&c.value),
                value_approx: crate::rational::to_f64(&c.value),
                exceeds_two_fifths: c.exceeds_two_fifths(),
                hypothesis: thm1_hypothesis(*x, *d),
                optimal_delta_fraction: ratio_string(&optimal_delta_fraction(*x, *d)?),
            };
            let ok = report.exceeds_two_fifths;
            (
                ok,
                output::render(format, "verify thm1-coeff", ok, &report)?,
            )
        }
        Verify::Thm1Coeff { sweep, .. } => {
            let r = thm1_sweep(*sweep)?;
            (
                r.holds,
                output::render(format, "verify thm1-coeff", r.holds, &r)?,
            )
        }
        Verify::Thm1Chain { x, d } => {
            let r = thm1_chain_check(*x, *d)?;
            (
                r.holds,
                output::render(format, "verify thm1-chain", r.holds, &r)?,
            )
        }
        Verify::Thm2Params(args) => {
            let (lambda, config) = theorem2_config(args)?;
            let params = solve_theorem2_params(&lambda, &config)?;
            let (written, vertex) = final_inequality_forms(&params, params.x_min);
            let ok = params.holds() && vertex.holds;
            let report = ParamsReport {
                params,
                written_form_at_x_min: written,
                vertex_form_at_x_min: vertex,
            };
            (
                ok,
                output::render(format, "verify thm2-params", ok, &report)?,
            )
        }
        Verify::Thm2E2e { lambda, x } => {
            let (lambda, config) = theorem2_config(lambda)?;
            let cert = theorem2_end_to_end(&lambda, *x, &config)?;
            (
                cert.holds,
                output::render(format, "verify thm2-e2e", cert.holds, &cert)?,
            )
        }
    };
    Ok((text, ok))
}

pub fn cmd_optimize(args: &OptimizeArgs) -> Result<crate::blowup::optimize::OptimizeSummary> {
    let h = read_graph(&args.pattern)?;
    let p = match args.blowup.as_str() {
        "k2" => Graph::complete(2),
        "c5" => Graph::cycle(5),
        path => read_graph(Path::new(path))?,
    };
    let config = OptimizerConfig {
        grid: args.grid,
        max_iter: args.max_iter,
        tol: args.tol,
        seeds: args.seeds,
        trace: args.trace,
        ..OptimizerConfig::default()
    };
    if config.grid == 0 || config.seeds == 0 || !config.tol.is_finite() || config.tol <= 0.0 {
        return Err(Error::InvalidParameter(
            "grid, seeds and tol must be positive".into(),
        ));
    }
    Ok(optimize_weights(&h, &p, &config)?.summary())
}

pub fn cmd_search(args: &SearchArgs) -> Result<crate::oracle::MaximizerSummary> {
    if args.budget_n > OVERRIDE_MAX_N {
        return Err(Error::BudgetExceeded(format!(
            "--budget-n is at most {OVERRIDE_MAX_N}"
        )));
    }
    if args.n > args.budget_n {
        return Err(Error::BudgetExceeded(format!(
            "n = {} exceeds --budget-n {}",
            args.n, args.budget_n
        )));
    }
    let pattern = read_graph(&args.pattern)?;
    let config = SearchConfig {
        allow_nine: args.budget_n >= OVERRIDE_MAX_N,
        deadline: args
            .time_limit
            .map(|s| Instant::now() + Duration::from_secs(s)),
    };
    let report = find_maximizers(&pattern, args.n, &config)?;
    if let Some(dir) = &args.witness_dir {
        std::fs::create_dir_all(dir).map_err(|e| {
            Error::InvalidParameter(format!("cannot create {}: {e}", dir.display()))
        })?;
        for (i, w) in report.witnesses.iter().enumerate() {
            let path = dir.join(format!("witness-{i}.txt"));
            std::fs::write(&path, write_graph(w)).map_err(|e| {
                Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
            })?;
        }
    }
    Ok(report.summary())
}

pub fn cmd_gen(which: &Gen) -> Result<Graph> {
    Ok(match which {
        Gen::Turan2 { n } => build_turan2(*n)?,
        Gen::CompleteBipartite { a, b } => Graph::complete_bipartite(*a, *b),
        Gen::Cycle { n } => {
            if *n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "a cycle needs at least 3 vertices, got {n}"
                )));
            }
            Graph::cycle(*n)
        }
        Gen::Path { n } => Graph::path(*n),
        Gen::Star { leaves } => Graph::star(*leaves),
        Gen::Petersen => Graph::petersen(),
        Gen::Blowup { pattern, sizes } => build_blowup(&read_graph(pattern)?, sizes)?,
        Gen::GpsExample1 { k } => build_gps_example1(*k)?,
        Gen::Theorem2H { d, x } => build_theorem2_h(*d, *x)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("extremal-count").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_ERROR);
        assert_eq!(
            run_args(&["verify", "thm1-chain", "--x", "5"]).0,
            EXIT_ERROR
        );
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn chain_probe_exits_one() {
        let (code, out, _) = run_args(&["verify", "thm1-chain", "--x", "5", "--d", "3"]);
        assert_eq!(code, EXIT_FALSE);
        assert!(out.contains("\"ok\": false"));
    }

    #[test]
    fn gen_writes_graph_text() {
        let (code, out, _) = run_args(&["gen", "complete-bipartite", "2", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(parse_graph(&out).unwrap().edge_count(), 4);
        assert_eq!(run_args(&["gen", "cycle", "2"]).0, EXIT_ERROR);
    }

    #[test]
    fn coefficient_pair_and_csv() {
        let (code, out, _) = run_args(&[
            "--format",
            "csv",
            "verify",
            "thm1-coeff",
            "--x",
            "2",
            "--d",
            "0",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("path,value\n"));
        assert!(out.contains("report.value,1/2\n"));
    }
}
