use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use klr_cluster::cluster::{matrix_to_quiver, ExchangeMatrix};
use klr_cluster::hl::{build_c1_seed, verify_hl_compat, Coloring};
use klr_cluster::klr_seed::InitialSeed;
use klr_cluster::laurent::{f_and_g, SymbolicSeed};
use klr_cluster::mutation::{check_compatible, corollary_crosscheck, explore, hat_mu, ParamSeed};
use klr_cluster::shuffle::{delta_character, odot_oracle};
use klr_cluster::words::{RootOrder, Word};
use klr_cluster::Error;

const EXPLORE_RANK_CAP: usize = 6;

#[derive(Parser)]
#[command(name = "klr-cluster", version, about = "Dominant words, seed mutation and compatibility checks in type A_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the initial seed of rank N.
    Seed {
        #[arg(long)]
        rank: usize,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Mutate the initial seed along a sequence of directions.
    Mutate(SequenceArgs),
    /// Breadth-first exploration; one JSON object per seed.
    Explore {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        depth: usize,
        /// Allow ranks above 6.
        #[arg(long)]
        force: bool,
    },
    /// Compatibility verdict for a seed stored as JSON.
    CheckCompat {
        #[arg(long)]
        seed: PathBuf,
    },
    /// Compare vector addition with the maximal shuffle of two dominant words.
    Oracle {
        /// Two words separated by a comma, e.g. 12,21.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        words: Vec<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Laurent expansions, F-polynomials and g-vectors after a mutation sequence.
    Laurent(SequenceArgs),
    /// Check the parameter formula for every sequence up to a given length.
    Crosscheck {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        depth: usize,
    },
    /// Check the ŷ identity of the bipartite C_1 seed.
    HlCheck {
        #[arg(long)]
        rank: usize,
    },
    /// Character of the standard module of a dominant word.
    Char {
        #[arg(long)]
        word: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SequenceArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long, value_delimiter = ',', default_value = "")]
    sequence: Vec<String>,
}

impl SequenceArgs {
    fn directions(&self) -> Result<Vec<usize>, Failure> {
        self.sequence
            .iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse().map_err(|_| Failure::Domain(format!("bad direction {s:?}"))))
            .collect()
    }
}

enum Failure {
    Domain(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn render_matrix(b: &ExchangeMatrix) -> String {
    let width = b.rows().iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in b.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out
}

fn word_label(w: &Option<Word>) -> String {
    w.as_ref().map_or("?".into(), |w| format!("L({w})"))
}

fn seed(rank: usize, json: bool, dot: bool) -> Outcome {
    let seed = InitialSeed::new(rank)?;
    if json {
        return Ok(format!("{}\n", ParamSeed::initial(rank)?.to_json()));
    }
    if dot {
        return Ok(matrix_to_quiver(&seed.matrix).to_dot(seed.matrix.n()));
    }
    let mut out = String::new();
    for (i, w) in seed.words.iter().enumerate() {
        let frozen = if i >= seed.matrix.n() { " (frozen)" } else { "" };
        let _ = writeln!(out, "x{} = L({w}){frozen}", i + 1);
    }
    out.push_str("B =\n");
    out.push_str(&render_matrix(&seed.matrix));
    Ok(out)
}

fn mutate(args: &SequenceArgs) -> Outcome {
    let mut seed = ParamSeed::initial(args.rank)?;
    let mut out = String::new();
    for k in args.directions()? {
        seed = seed.mutate(k)?;
        let _ = writeln!(out, "x{k} -> {}", word_label(&seed.words()[k - 1]));
    }
    out.push_str("words:");
    for w in seed.words() {
        let _ = write!(out, " {}", w.map_or("?".into(), |w| w.to_string()));
    }
    out.push_str("\nB =\n");
    out.push_str(&render_matrix(&seed.matrix));
    Ok(out)
}

fn explore_cmd(rank: usize, depth: usize, force: bool) -> Outcome {
    if rank > EXPLORE_RANK_CAP && !force {
        return Err(Failure::Domain(format!(
            "refusing to explore rank {rank} > {EXPLORE_RANK_CAP}; pass --force to override"
        )));
    }
    let mut out = String::new();
    for e in explore(&ParamSeed::initial(rank)?, depth)? {
        let _ = writeln!(out, "{}", e.to_json());
    }
    Ok(out)
}

fn check_compat(path: &PathBuf) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let seed = ParamSeed::from_json(&value)?;
    let mut out = format!("{}\n", check_compatible(&seed)?);
    for j in 1..=seed.matrix.n() {
        let _ = writeln!(out, "hat_mu_{j} = {}", hat_mu(&seed, j)?);
    }
    Ok(out)
}

fn parse_word(text: &str, rank: Option<usize>) -> Result<Word, Error> {
    match rank {
        Some(r) => Word::parse(r, text),
        None => Word::parse_auto(text),
    }
}

fn oracle(words: &[String], rank: Option<usize>) -> Outcome {
    let [a, b] = words else {
        return Err(Failure::Domain("--words needs exactly two words, e.g. 12,21".into()));
    };
    let rank = match rank {
        Some(r) => r,
        None => parse_word(a, None)?.rank().max(parse_word(b, None)?.rank()),
    };
    let (a, b) = (Word::parse(rank, a)?, Word::parse(rank, b)?);
    let order = RootOrder::new(rank)?;
    let by_vector = order.vector_to_word(&order.word_to_vector(&a)?.add(&order.word_to_vector(&b)?)?)?;
    let by_shuffle = odot_oracle(&a, &b)?;
    if by_vector == by_shuffle {
        Ok(format!("{by_vector} / {by_shuffle} AGREE\n"))
    } else {
        Err(Failure::Verification(format!("{by_vector} / {by_shuffle} DISAGREE")))
    }
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn laurent(args: &SequenceArgs) -> Outcome {
    let sequence = args.directions()?;
    let matrix = InitialSeed::new(args.rank)?.matrix;
    let seed = SymbolicSeed::initial(&matrix).mutate_along(&sequence)?;
    let data = f_and_g(&matrix, &sequence)?;
    let mut out = String::new();
    for (l, d) in data.iter().enumerate() {
        let _ = writeln!(out, "x{} = {}", l + 1, seed.vars[l]);
        let _ = writeln!(out, "  F = {}", d.f.render("X"));
        let _ = writeln!(out, "  g = {}  a = {}  c = {}", tuple(&d.g), tuple(&d.a), tuple(&d.c));
    }
    Ok(out)
}

fn crosscheck(rank: usize, depth: usize) -> Outcome {
    let seed = ParamSeed::initial(rank)?;
    let n = seed.matrix.n();
    let mut sequences = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..depth {
        layer = layer
            .iter()
            .flat_map(|s| (1..=n).filter(move |k| s.last() != Some(k)).map(move |k| [s.clone(), vec![k]].concat()))
            .collect();
        sequences.extend(layer.iter().cloned());
    }
    let mut checked = 0;
    for seq in &sequences {
        for l in 1..=n {
            let report = corollary_crosscheck(&seed, seq, l)?;
            if !report.holds() {
                return Err(Failure::Verification(format!(
                    "sequence {seq:?}, variable {l}: mutated {} but formula gives {} (a={}, g={}, c={})",
                    report.mutated,
                    report.predicted,
                    tuple(&report.a),
                    tuple(&report.g),
                    tuple(&report.c)
                )));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} checks passed over {} sequences\n", sequences.len()))
}

fn hl_check(rank: usize) -> Outcome {
    let mut out = String::new();
    let mut failures = Vec::new();
    for coloring in Coloring::BOTH {
        let seed = build_c1_seed(rank, coloring)?;
        for check in verify_hl_compat(&seed)? {
            let status = if check.holds() { "ok" } else { "MISMATCH" };
            let line = format!(
                "xi_1={} j={}: yhat = {}  expected {}  {status}",
                coloring.first, check.node, check.yhat, check.expected
            );
            if !check.holds() {
                failures.push(line.clone());
            }
            let _ = writeln!(out, "{line}");
        }
    }
    if failures.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Verification(failures.join("\n")))
    }
}

fn char_cmd(word: &str, rank: Option<usize>, json: bool) -> Outcome {
    let series = delta_character(&parse_word(word, rank)?)?;
    Ok(if json { format!("{}\n", series.to_json()) } else { format!("{series}\n") })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Seed { rank, json, dot } => seed(rank, json, dot),
        Command::Mutate(args) => mutate(&args),
        Command::Explore { rank, depth, force } => explore_cmd(rank, depth, force),
        Command::CheckCompat { seed } => check_compat(&seed),
        Command::Oracle { words, rank } => oracle(&words, rank),
        Command::Laurent(args) => laurent(&args),
        Command::Crosscheck { rank, depth } => crosscheck(rank, depth),
        Command::HlCheck { rank } => hl_check(rank),
        Command::Char { word, rank, json } => char_cmd(&word, rank, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            println!("{msg}");
            eprintln!("verification failed");
            ExitCode::from(2)
        }
    }
}
