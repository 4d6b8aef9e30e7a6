//! Command-line interface.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::axioms::suite::{run_suite, Fixtures, Suite};
use crate::axioms::{AnyIndex, AxiomError};
use crate::games::{Coalition, VotingGame, WeightedMajorityGame};
use crate::indices::{IndexError, IndexKind};
use crate::io::{
    ecuador, parse_game, render_table, DocumentError, NamedGame, OutputFormat, RenderOptions,
};
use crate::merging::{check_wm_mergeability, MergeError};

#[derive(Debug, Parser)]
#[command(
    name = "wmpower",
    version,
    about = "Exact power indices for weighted majority games"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute power indices of a game document.
    Power {
        #[arg(long, value_name = "FILE")]
        game: PathBuf,
        #[command(flatten)]
        table: TableArgs,
    },
    /// List the minimal winning coalitions of a game document.
    Mwc {
        #[arg(long, value_name = "FILE")]
        game: PathBuf,
    },
    /// Check WM-mergeability of two or more games and print their WM-union.
    Merge {
        #[arg(required = true, num_args = 2.., value_name = "FILE")]
        games: Vec<PathBuf>,
        /// Print the four conditions only.
        #[arg(long)]
        check_only: bool,
    },
    /// Run an axiom suite against an index.
    Axioms {
        /// A power index (ss, bz, dp, pg, cm, hcm) or an independence
        /// witness (scaled_cm, scaled_hcm, np_patch_cm, np_patch_hcm,
        /// symw_patch_hcm).
        #[arg(long)]
        index: AnyIndex,
        #[arg(long)]
        suite: Suite,
        /// Directory of game documents, or `builtin`.
        #[arg(long, default_value = "builtin", value_name = "DIR|builtin")]
        games: String,
        /// Additional seeded random fixtures.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reproduce the bundled dataset tables.
    Demo {
        #[command(subcommand)]
        dataset: Dataset,
    },
}

#[derive(Debug, Subcommand)]
enum Dataset {
    /// National Assembly of Ecuador, 2021.
    Ecuador {
        /// One of may21, jun21, jul21, oct12, oct26, dec21, or `all`.
        #[arg(long, default_value = "all")]
        period: String,
        #[command(flatten)]
        table: TableArgs,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Comma-separated indices, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_index_list)]
    index: IndexList,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=40))]
    digits: u8,
    /// Also print exact rationals.
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value = "table")]
    format: OutputFormat,
}

#[derive(Debug, Clone)]
struct IndexList(Vec<IndexKind>);

fn parse_index_list(s: &str) -> Result<IndexList, IndexError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(IndexList(IndexKind::ALL.to_vec()));
    }
    s.split(',')
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map(IndexList)
}

impl TableArgs {
    fn options(&self) -> RenderOptions {
        RenderOptions {
            digits: self.digits.into(),
            exact: self.exact,
            format: self.format,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Document {
        path: PathBuf,
        source: DocumentError,
    },
    #[error(transparent)]
    Merge(#[from] MergeError),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error("{0}")]
    Invalid(String),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Output(_) | CliError::Axiom(_) => 1,
            CliError::Document { .. } | CliError::Merge(_) | CliError::Invalid(_) => 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status: 0 on success, 2 on invalid input or a
/// failed check, 1 on any other error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load(path: &Path) -> Result<NamedGame, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_game(&text).map_err(|source| CliError::Document {
        path: path.to_path_buf(),
        source,
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Power { game, table } => {
            let g = load(&game)?;
            write_table(out, g.label(), &g, &table)?;
            Ok(0)
        }
        Command::Mwc { game } => {
            let g = load(&game)?;
            write_mwc(out, &g)?;
            Ok(0)
        }
        Command::Merge { games, check_only } => merge(out, &games, check_only),
        Command::Axioms {
            index,
            suite,
            games,
            samples,
            seed,
        } => {
            let mut fixtures = if games == "builtin" {
                Fixtures::builtin()
            } else {
                Fixtures::from_games(load_dir(Path::new(&games))?)
            };
            if samples > 0 {
                fixtures.extend(Fixtures::random(seed, samples));
            }
            let report = run_suite(&index, suite, &fixtures)?;
            write!(out, "{report}")?;
            Ok(if report.failed().is_empty() { 0 } else { 2 })
        }
        Command::Demo {
            dataset: Dataset::Ecuador { period, table },
        } => {
            let periods: Vec<(&str, NamedGame)> = if period == "all" {
                ecuador::all()
            } else {
                let g = ecuador::period(&period).ok_or_else(|| {
                    CliError::Invalid(format!(
                        "unknown period {period:?} (expected one of {} or all)",
                        ecuador::PERIODS.join(", ")
                    ))
                })?;
                vec![(ecuador::PERIODS.iter().find(|p| **p == period).unwrap(), g)]
            };
            for (k, (_, g)) in periods.iter().enumerate() {
                if k > 0 && table.format == OutputFormat::Table {
                    writeln!(out)?;
                }
                write_table(out, g.label(), g, &table)?;
            }
            Ok(0)
        }
    }
}

fn load_dir(dir: &Path) -> Result<Vec<WeightedMajorityGame>, CliError> {
    let read_err = |source| CliError::Read {
        path: dir.to_path_buf(),
        source,
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(read_err)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Invalid(format!(
            "{}: no .json game documents",
            dir.display()
        )));
    }
    paths.iter().map(|p| load(p).map(|g| g.game)).collect()
}

fn write_table(
    out: &mut dyn Write,
    title: Option<&str>,
    g: &NamedGame,
    args: &TableArgs,
) -> Result<(), CliError> {
    let vectors: Vec<_> = args.index.0.iter().map(|k| k.compute(&g.game)).collect();
    let text = render_table(title, &g.names, &vectors, &args.options());
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn named(c: Coalition, names: &[String]) -> String {
    let members: Vec<&str> = c.members().map(|i| names[i].as_str()).collect();
    format!("{{{}}}", members.join(", "))
}

fn write_mwc(out: &mut dyn Write, g: &NamedGame) -> Result<(), CliError> {
    let mwc = g.game.minimal_winning_coalitions().mwc();
    let noun = if mwc.len() == 1 {
        "coalition"
    } else {
        "coalitions"
    };
    writeln!(out, "{} ({} minimal winning {noun})", g.game, mwc.len())?;
    for &c in mwc {
        let weight = g.game.coalition_weight(c).expect("coalition in range");
        writeln!(out, "{}  weight {weight}", named(c, &g.names))?;
    }
    let nulls = g.game.null_players();
    if !nulls.is_empty() {
        let names: Vec<&str> = nulls.iter().map(|&i| g.names[i].as_str()).collect();
        writeln!(out, "null players: {}", names.join(", "))?;
    }
    Ok(())
}

fn merge(out: &mut dyn Write, paths: &[PathBuf], check_only: bool) -> Result<i32, CliError> {
    let docs = paths
        .iter()
        .map(|p| load(p))
        .collect::<Result<Vec<_>, _>>()?;
    let games: Vec<WeightedMajorityGame> = docs.iter().map(|d| d.game.clone()).collect();
    let report = check_wm_mergeability(&games)?;
    let mark = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "equal quotas: {}", mark(report.quotas_equal()))?;
    write!(
        out,
        "compatible weights: {}",
        mark(report.weights_compatible())
    )?;
    if !report.weights_compatible() {
        let players: Vec<String> = report
            .weight_conflicts
            .iter()
            .map(|p| (p + 1).to_string())
            .collect();
        write!(out, " (players {})", players.join(","))?;
    }
    writeln!(out)?;
    write!(
        out,
        "losing coalitions stay losing: {}",
        mark(report.losing_preserved())
    )?;
    if let Some(c) = report.losing_counterexample {
        write!(out, " ({c} wins in the union)")?;
    }
    writeln!(out)?;
    writeln!(
        out,
        "minimal winning coalitions: {} in the union, {} in the games ({})",
        report.union_mwc_count,
        report.component_mwc_total,
        mark(report.mwc_count_matches())
    )?;
    writeln!(out, "WM-mergeable: {}", mark(report.is_mergeable()))?;
    if report.is_mergeable() && !check_only {
        let names = if docs.iter().all(|d| d.names == docs[0].names) {
            docs[0].names.clone()
        } else {
            (1..=games[0].n_players()).map(|i| i.to_string()).collect()
        };
        let union = NamedGame {
            game: report.union.clone(),
            names,
            metadata: None,
        };
        writeln!(out, "union: {}", union.game)?;
        write_mwc(out, &union)?;
    }
    Ok(if report.is_mergeable() { 0 } else { 2 })
}
