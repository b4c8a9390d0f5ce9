//! Command-line front end for `grothroot-core`: argument parsing, reports, JSON and SVG.

pub mod commands;
pub mod formats;
pub mod report;
pub mod svg;

use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use grothroot_core::pipedream::SearchLimit;

use crate::commands::{GrothMode, Settings, Suite};
use crate::report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "grothroot", version, about = "Pipe dreams, Grothendieck polynomials and root polytope triangulations")]
pub struct Cli {
    /// Emit the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest rank accepted by exhaustive enumerations.
    #[arg(long, global = true)]
    pub limit_n: Option<usize>,
    /// Pair choice for reductions: lex, rlex, random or script:<triples>.
    #[arg(long, global = true, default_value = "lex")]
    pub strategy: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Grothendieck polynomial of a permutation.
    #[command(group(ArgGroup::new("mode").args(["beta_only", "double", "qt"])))]
    Groth {
        w: String,
        /// G_w(b) with all x = 1 and y = 0.
        #[arg(long)]
        beta_only: bool,
        /// Double Grothendieck polynomial (b = -1).
        #[arg(long)]
        double: bool,
        /// Specialisation x = q, y = t.
        #[arg(long)]
        qt: bool,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        w: Option<String>,
    },
    /// Reduced form of the monomial of a graph, e.g. 12,23,34.
    Reduce {
        edges: String,
        /// Print the unmerged reduction tree.
        #[arg(long)]
        tree: bool,
    },
    /// Dissect the root polytope of an acyclic graph by reductions.
    Dissect {
        edges: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Noncrossing alternating spanning trees of K_n.
    Trees {
        #[arg(long)]
        n: usize,
    },
    /// The pipe dream complex of a permutation.
    Pdc {
        w: String,
        /// Print only the h-polynomial.
        #[arg(long)]
        h: bool,
    },
    /// Place PD(1 n n-1 ... 2) on the canonical triangulation of the vertex figure.
    Realize {
        #[arg(long)]
        n: usize,
        /// Write an SVG drawing (n = 4 only).
        #[arg(long)]
        emit_svg: Option<PathBuf>,
    },
    /// List the pipe dreams of a permutation.
    Pipes { w: String },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SuiteArg {
    GrothH,
    Kirillov,
    Bijection,
    Realize,
    Narayana,
    Strategies,
    Projection,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::GrothH => Suite::GrothH,
            SuiteArg::Kirillov => Suite::Kirillov,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Realize => Suite::Realize,
            SuiteArg::Narayana => Suite::Narayana,
            SuiteArg::Strategies => Suite::Strategies,
            SuiteArg::Projection => Suite::Projection,
            SuiteArg::All => Suite::All,
        }
    }
}

pub fn execute(cli: &Cli) -> anyhow::Result<RunReport> {
    let settings = Settings {
        seed: cli.seed,
        limit: cli.limit_n.map(SearchLimit).unwrap_or_default(),
        strategy: cli.strategy.clone(),
    };
    let s = &settings;
    match &cli.command {
        Command::Groth { w, beta_only, double, qt } => {
            let mode = match (beta_only, double, qt) {
                (true, _, _) => GrothMode::BetaOnly,
                (_, true, _) => GrothMode::Double,
                (_, _, true) => GrothMode::Qt,
                _ => GrothMode::Full,
            };
            commands::groth(w, mode, s)
        }
        Command::Verify { suite, n, w } => commands::verify((*suite).into(), *n, w.as_deref(), s),
        Command::Reduce { edges, tree } => commands::reduce(edges, *tree, s),
        Command::Dissect { edges, n } => commands::dissect_cmd(edges, *n, s),
        Command::Trees { n } => commands::trees(*n, s),
        Command::Pdc { w, h } => commands::pdc(w, *h, s),
        Command::Realize { n, emit_svg } => commands::realize_cmd(*n, emit_svg.as_deref(), s),
        Command::Pipes { w } => commands::pipes(w, s),
    }
}

/// Parses `args` (including the program name) and runs the command. Returns the exit code
/// and the text for stdout and stderr: 0 on success, 1 when a check fails, 2 on bad input.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let out = if cli.json { report.render_json() } else { report.render_text() };
            (if report.passed() { 0 } else { 1 }, out, String::new())
        }
        Err(e) => (2, String::new(), format!("error: {:#}\n", e)),
    }
}
