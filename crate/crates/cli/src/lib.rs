//! The `argfacets` command line.
//!
//! Exit codes: 0 on success, 1 on a usage error, 2 when an input cannot be
//! read, parsed or interpreted.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use argfacets::facets::sort_entries;
use argfacets::{
    facet_report, parse_framework, significance_table, ArgumentSet, ArgumentationFramework, Budget,
    Constraints, Format, Semantics,
};

pub mod bench;
pub mod gen;

#[derive(Debug, Parser)]
#[command(
    name = "argfacets",
    version,
    about = "Facet reasoning for abstract argumentation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Framework file (apx, tgf or iccma23 `.af`).
    pub file: PathBuf,
    /// Input format; guessed from the extension when absent.
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long, short)]
    pub semantics: Semantics,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the extensions.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_models: Option<usize>,
        /// Seconds; 0 disables the limit.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
    },
    /// Credulous, skeptical and facet sets, optionally after approvals.
    Facets {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        approve: Vec<String>,
        #[arg(long)]
        disapprove: Vec<String>,
    },
    /// Significance of every facet literal.
    Significance {
        #[command(flatten)]
        input: Input,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file; standard output when absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Time enumeration against facet computation on a directory.
    Bench {
        dir: PathBuf,
        /// Comma-separated list.
        #[arg(long, value_delimiter = ',', default_value = "stab")]
        semantics: Vec<Semantics>,
        /// Seconds per phase; 0 disables the limit.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
        #[arg(long)]
        max_models: Option<usize>,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Frameworks in this directory are loaded at startup.
        #[arg(long)]
        example_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Standard translation of a DIMACS formula.
    StdTranslation {
        #[arg(long)]
        dimacs: PathBuf,
    },
    /// Add a mutually attacking twin of an argument.
    Duplicate {
        #[arg(long)]
        af: PathBuf,
        #[arg(long)]
        arg: String,
    },
    /// Replace an argument by `n` non-attacking copies.
    Copies {
        #[arg(long)]
        af: PathBuf,
        #[arg(long)]
        arg: String,
        #[arg(long)]
        n: usize,
    },
    /// SAT-UNSAT pair of DIMACS formulas.
    Satunsat {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        psi: PathBuf,
    },
    /// Forall-exists QDIMACS formula, guarded.
    Qbf {
        #[arg(long)]
        qdimacs: PathBuf,
    },
    /// Random framework, self-attacks included.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// `k` disjoint mutually attacking pairs.
    Pairs {
        #[arg(long)]
        k: usize,
    },
}

/// Reads and parses a framework, guessing the format from the extension
/// unless one is given.
pub fn load_framework(path: &Path, format: Option<Format>) -> Result<ArgumentationFramework> {
    let format = match format.or_else(|| Format::from_path(path)) {
        Some(f) => f,
        None => bail!(
            "cannot tell the format of {}; pass --format",
            path.display()
        ),
    };
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_framework(&text, format).with_context(|| format!("parsing {}", path.display()))
}

fn timeout(seconds: u64) -> Option<Duration> {
    (seconds > 0).then(|| Duration::from_secs(seconds))
}

pub fn braces(af: &ArgumentationFramework, set: &ArgumentSet) -> String {
    format!("{{{}}}", af.sorted_names_of(set).join(", "))
}

pub fn solve(
    out: &mut dyn Write,
    af: &ArgumentationFramework,
    semantics: Semantics,
    max_models: Option<usize>,
    timeout_secs: u64,
) -> Result<()> {
    let budget = Budget {
        max_models,
        timeout: timeout(timeout_secs),
    };
    let result = argfacets::enumerate(af, semantics, &Constraints::none(), &budget);
    let mut lines: Vec<Vec<&str>> = result
        .extensions
        .iter()
        .map(|e| af.sorted_names_of(e))
        .collect();
    lines.sort();
    for names in &lines {
        writeln!(out, "{{{}}}", names.join(", "))?;
    }
    let n = lines.len();
    let noun = if n == 1 { "extension" } else { "extensions" };
    let state = if result.exhausted {
        "exhausted"
    } else {
        "not exhausted"
    };
    writeln!(out, "{n} {noun} ({state})")?;
    if result.timed_out {
        eprintln!("stopped after {timeout_secs} s");
    }
    Ok(())
}

pub fn constraints_from_names(
    af: &ArgumentationFramework,
    approve: &[String],
    disapprove: &[String],
) -> Result<Constraints> {
    let mut c = Constraints::none();
    for (names, keep) in [(approve, true), (disapprove, false)] {
        for name in names {
            let a = af
                .index_of(name)
                .with_context(|| format!("no argument named {name}"))?;
            c = c
                .with(a, keep)
                .with_context(|| format!("{name} is both approved and disapproved"))?;
        }
    }
    Ok(c)
}

pub fn facets(
    out: &mut dyn Write,
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
) -> Result<()> {
    let report = facet_report(af, semantics, c);
    writeln!(out, "cred: {}", braces(af, &report.cred))?;
    writeln!(out, "skep: {}", braces(af, &report.skep))?;
    writeln!(out, "facets: {}", braces(af, &report.facets))?;
    writeln!(out, "count: {}", report.facets.len())?;
    Ok(())
}

pub fn significance(
    out: &mut dyn Write,
    af: &ArgumentationFramework,
    semantics: Semantics,
) -> Result<()> {
    let mut table = significance_table(af, semantics);
    sort_entries(&mut table);
    let labels: Vec<String> = table
        .iter()
        .map(|e| e.literal.display(af).to_string())
        .collect();
    let width = labels.iter().map(String::len).max().unwrap_or(0);
    for (label, e) in labels.iter().zip(&table) {
        writeln!(
            out,
            "{label:<width$}  {:>3}  {}",
            e.remaining_facets, e.score
        )?;
    }
    Ok(())
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn generate(kind: &GenKind) -> Result<gen::Generated> {
    match kind {
        GenKind::StdTranslation { dimacs } => gen::std_translation(dimacs),
        GenKind::Duplicate { af, arg } => gen::duplicate(af, arg),
        GenKind::Copies { af, arg, n } => gen::copies(af, arg, *n),
        GenKind::Satunsat { phi, psi } => gen::satunsat(phi, psi),
        GenKind::Qbf { qdimacs } => gen::qbf(qdimacs),
        GenKind::Random { n, p, seed } => gen::random(*n, *p, *seed),
        GenKind::Pairs { k } => gen::mutual_pairs(*k),
    }
}

async fn serve(port: u16, example_dir: Option<&Path>) -> Result<()> {
    use argfacets_service::{AppState, ServiceConfig};
    let state = AppState::new(ServiceConfig::default());
    if let Some(dir) = example_dir {
        let failures = state
            .store
            .load_dir(dir)
            .with_context(|| format!("reading {}", dir.display()))?;
        for (name, err) in failures {
            eprintln!("skipping {name}: {err}");
        }
    }
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port))
        .await
        .with_context(|| format!("binding port {port}"))?;
    let addr = listener.local_addr()?;
    println!("listening on http://{addr}");
    std::io::stdout().flush()?;
    argfacets_service::serve(listener, state, argfacets_service::ctrl_c()).await?;
    Ok(())
}

pub fn run(cli: Cli) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Solve {
            input,
            max_models,
            timeout,
        } => {
            let af = load_framework(&input.file, input.format)?;
            solve(&mut out, &af, input.semantics, max_models, timeout)
        }
        Command::Facets {
            input,
            approve,
            disapprove,
        } => {
            let af = load_framework(&input.file, input.format)?;
            let c = constraints_from_names(&af, &approve, &disapprove)?;
            facets(&mut out, &af, input.semantics, &c)
        }
        Command::Significance { input } => {
            let af = load_framework(&input.file, input.format)?;
            significance(&mut out, &af, input.semantics)
        }
        Command::Gen { kind, out: path } => {
            let g = generate(&kind)?;
            write_output(path.as_deref(), &g.render())?;
            if path.is_some() {
                writeln!(out, "{}", g.manifest)?;
            }
            Ok(())
        }
        Command::Bench {
            dir,
            semantics,
            timeout: secs,
            max_models,
            csv,
        } => {
            let config = bench::BenchConfig {
                semantics,
                timeout: timeout(secs),
                max_models,
            };
            let rows =
                bench::run(&dir, &config).with_context(|| format!("reading {}", dir.display()))?;
            match csv {
                Some(p) => {
                    let f = std::fs::File::create(&p)
                        .with_context(|| format!("creating {}", p.display()))?;
                    bench::write_csv(f, &rows)?;
                }
                None => bench::write_csv(&mut out, &rows)?,
            }
            Ok(())
        }
        Command::Serve { port, example_dir } => {
            drop(out);
            tokio::runtime::Runtime::new()?.block_on(serve(port, example_dir.as_deref()))
        }
    }
}
