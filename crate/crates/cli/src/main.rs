//! `tdc`: command-line access to tandem-duplication roots, confusability,
//! labels, code constructions, bounds and exact optimal code sizes.

/// Writes to stdout; a closed pipe ends the process quietly.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if std::io::stdout().lock().write_fmt(format_args!($($t)*)).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! outln {
    ($($t:tt)*) => { out!("{}\n", format_args!($($t)*)) };
}

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tdcode::{
    assemble_lower_bound, compute_label, confuse, construct_irreducible_code, construct_one_region_code,
    construct_pair_code, construct_recursive, constr1_size, descendant_cone_with_budget, enumerate_irreducible,
    eq1_upper, irreducible_counts, oracle_confusable_with_budget, prop4_upper, root_exact_k, root_le_k,
    t_of_n, t_of_root_code, tandem_duplicate, u_bound, validate_code, Code, DuplicationStep, OracleOutcome,
    RootMode, TCache, Validation, Word, DEFAULT_STATE_BUDGET,
};

#[derive(Parser, Debug)]
#[command(name = "tdc", version, about = "Tandem-duplication words, <=3-confusability and codes")]
struct Cli {
    /// Alphabet size.
    #[arg(short, long, global = true, default_value_t = 3)]
    q: u8,

    #[arg(short, long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on explored states for enumeration-heavy commands.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_BUDGET)]
    budget_states: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Duplication root of a word.
    Root {
        word: String,
        /// Largest duplication length removed.
        #[arg(short, default_value_t = 3)]
        k: usize,
        /// Remove only duplications of length exactly k.
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether two words share a descendant.
    Confuse { x: String, y: String },
    /// Label of a word: its root and per-region counts and signs.
    Label { word: String },
    /// Duplicate the factor of length k starting at index i.
    Dup { word: String, i: usize, k: usize },
    /// Irreducible words of length n.
    Irr {
        n: usize,
        #[arg(short, default_value_t = 3)]
        k: usize,
        /// Print only the number of words.
        #[arg(long)]
        count: bool,
    },
    /// Descendants of a word up to a length.
    Cone {
        word: String,
        #[arg(long)]
        max_len: usize,
        /// Keep only descendants of exactly this length.
        #[arg(long)]
        length: Option<usize>,
    },
    /// Brute-force search for a common descendant.
    Oracle {
        x: String,
        y: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Build a code.
    Code {
        #[command(subcommand)]
        kind: CodeKind,
        /// Skip the pairwise check of the output.
        #[arg(long, global = true)]
        no_validate: bool,
    },
    /// Size bounds for length n.
    Bounds {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        u: UArgs,
    },
    /// Exact optimal code size for one root, or for all roots.
    Optimal {
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        n: usize,
        /// Also print a witness code.
        #[arg(long)]
        words: bool,
    },
    /// Table of constructions and bounds, one row per length.
    Table {
        #[arg(long)]
        n_max: usize,
        /// Compute exact optima up to this length.
        #[arg(long, default_value_t = 12)]
        exact_max: usize,
    },
    /// Check the golden fixtures.
    Verify {
        #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))]
        fixtures: PathBuf,
        /// Compare exact optima up to this length.
        #[arg(long, default_value_t = 10)]
        exact_max: usize,
        /// Stored per-root optima, used when the file exists.
        #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/tcache.tsv"))]
        stored: PathBuf,
    },
}

#[derive(Args, Debug)]
struct UArgs {
    /// Root length for the U count.
    #[arg(long, requires = "m")]
    i: Option<usize>,
    /// Number of regions for the U count.
    #[arg(long, requires = "i")]
    m: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum CodeKind {
    /// All words of length n whose <=k-root is irreducible (one per root).
    Irr {
        #[arg(long)]
        n: usize,
        #[arg(short, default_value_t = 3)]
        k: usize,
    },
    /// Two non-confusable words over a root of length at least 4.
    Pair { root: String },
    /// Closed-form code for a root with exactly one region.
    OneRegion {
        root: String,
        #[arg(long)]
        n: usize,
    },
    /// Recursive code built from shorter roots.
    Recursive {
        root: String,
        #[arg(long)]
        n: usize,
    },
}

/// Failures carry the exit status.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Resource(String),
}

impl From<tdcode::Error> for Failure {
    fn from(e: tdcode::Error) -> Self {
        match e {
            tdcode::Error::Resource(_) => Failure::Resource(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

type Res<T> = Result<T, Failure>;

fn parse(text: &str, q: u8) -> Res<Word> {
    Ok(Word::parse(text, q)?)
}

fn mode(k: usize) -> Res<RootMode> {
    RootMode::from_k(k).ok_or_else(|| Failure::Invalid(format!("k must be 1, 2 or 3, got {k}")))
}

fn ternary_only(q: u8, what: &str) -> Res<()> {
    if q == 3 {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("{what} is implemented for q = 3 only")))
    }
}

fn print_json(v: &impl Serialize) {
    outln!("{}", serde_json::to_string_pretty(v).expect("serializable output"));
}

fn emit(fmt: Format, text: &str, tsv: &str, json: serde_json::Value) {
    match fmt {
        Format::Text => outln!("{text}"),
        Format::Tsv => outln!("{tsv}"),
        Format::Json => print_json(&json),
    }
}

fn emit_code(fmt: Format, code: &Code, check: bool) -> Res<()> {
    if check {
        if let v @ (Validation::WrongLength(_) | Validation::Confusable(..)) = validate_code(code) {
            return Err(Failure::Invalid(format!("{} failed validation: {v:?}", code.provenance)));
        }
    }
    match fmt {
        Format::Text => out!("{}", code.to_text()),
        Format::Tsv => code.words.iter().for_each(|w| outln!("{w}")),
        Format::Json => print_json(code),
    }
    Ok(())
}

fn run(cli: Cli) -> Res<()> {
    let (q, fmt, budget) = (cli.q, cli.format, cli.budget_states);
    match cli.command {
        Command::Root { word, k, exact } => {
            let x = parse(&word, q)?;
            let r = if exact { root_exact_k(&x, k) } else { root_le_k(&x, mode(k)?) };
            emit(
                fmt,
                &r.to_string(),
                &format!("{x}\t{k}\t{r}"),
                json!({ "word": x.to_string(), "k": k, "exact": exact, "root": r.to_string() }),
            );
        }
        Command::Confuse { x, y } => {
            let (x, y) = (parse(&x, q)?, parse(&y, q)?);
            let c = confuse(&x, &y);
            let verdict = if c { "confusable" } else { "not-confusable" };
            emit(
                fmt,
                verdict,
                &format!("{x}\t{y}\t{verdict}"),
                json!({ "x": x.to_string(), "y": y.to_string(), "confusable": c }),
            );
        }
        Command::Label { word } => {
            let x = parse(&word, q)?;
            let l = compute_label(&x);
            match fmt {
                Format::Json => print_json(&l),
                Format::Tsv => outln!("{x}\t{l}"),
                Format::Text => outln!("{l}"),
            }
        }
        Command::Dup { word, i, k } => {
            let x = parse(&word, q)?;
            let y = tandem_duplicate(&x, DuplicationStep::new(i, k))?;
            emit(
                fmt,
                &y.to_string(),
                &format!("{x}\t{i}\t{k}\t{y}"),
                json!({ "word": x.to_string(), "i": i, "k": k, "result": y.to_string() }),
            );
        }
        Command::Irr { n, k, count } => {
            let m = mode(k)?;
            if n == 0 {
                return Err(Failure::Invalid("length must be positive".into()));
            }
            // at most q (q-1)^(n-1) words survive the length-1 filter
            let states = (q as f64) * ((q - 1) as f64).powi(n as i32 - 1);
            if states > budget as f64 {
                return Err(Failure::Resource(format!("about {states:.0} states exceed the budget of {budget}")));
            }
            if count {
                let c = irreducible_counts(n, q, m)[n - 1];
                emit(fmt, &c.to_string(), &format!("{n}\t{k}\t{c}"), json!({ "n": n, "k": k, "count": c }));
            } else {
                let words = enumerate_irreducible(n, q, m);
                match fmt {
                    Format::Json => print_json(&words.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
                    _ => words.iter().for_each(|w| outln!("{w}")),
                }
            }
        }
        Command::Cone { word, max_len, length } => {
            let x = parse(&word, q)?;
            let cone = descendant_cone_with_budget(&x, max_len, budget)?;
            let members: Vec<&Word> = cone.members.iter().filter(|w| length.map_or(true, |n| w.len() == n)).collect();
            match fmt {
                Format::Json => print_json(&json!({
                    "origin": x.to_string(),
                    "max_len": max_len,
                    "members": members.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                })),
                Format::Tsv => members.iter().for_each(|w| outln!("{}\t{w}", w.len())),
                Format::Text => members.iter().for_each(|w| outln!("{w}")),
            }
        }
        Command::Oracle { x, y, max_len } => {
            let (x, y) = (parse(&x, q)?, parse(&y, q)?);
            let out = oracle_confusable_with_budget(&x, &y, max_len, budget)?;
            let (verdict, witness) = match &out {
                OracleOutcome::Confusable(w) => ("confusable", Some(w.to_string())),
                OracleOutcome::NoWitnessUpToBound => ("no-witness", None),
            };
            let text = match &witness {
                Some(w) => format!("confusable {w}"),
                None => format!("no common descendant up to length {max_len}"),
            };
            emit(
                fmt,
                &text,
                &format!("{x}\t{y}\t{verdict}\t{}", witness.as_deref().unwrap_or("-")),
                json!({ "x": x.to_string(), "y": y.to_string(), "max_len": max_len, "confusable": witness.is_some(), "witness": witness }),
            );
        }
        Command::Code { kind, no_validate } => {
            let (code, check) = match kind {
                CodeKind::Irr { n, k } => {
                    mode(k)?;
                    // pairwise checks are for duplications of length up to 3
                    (construct_irreducible_code(n, k, q)?, k == 3)
                }
                CodeKind::Pair { root } => (construct_pair_code(&parse(&root, q)?)?, true),
                CodeKind::OneRegion { root, n } => (construct_one_region_code(&parse(&root, q)?, n)?, true),
                CodeKind::Recursive { root, n } => (construct_recursive(&parse(&root, q)?, n)?, true),
            };
            emit_code(fmt, &code, check && !no_validate)?;
        }
        Command::Bounds { n, u } => {
            ternary_only(q, "bounds")?;
            if n == 0 {
                return Err(Failure::Invalid("length must be positive".into()));
            }
            let lower = assemble_lower_bound(n, None, false, false)?.size;
            let (c1, eq1, p4) = (constr1_size(n), eq1_upper(n), prop4_upper(n));
            let uv = u.i.zip(u.m).map(|(i, m)| u_bound(n, i, m));
            let mut text = format!("n\t{n}\nconstr1\t{c1}\nlower\t{lower}\neq1\t{eq1}\nprop4\t{p4}");
            if let Some(v) = uv {
                text.push_str(&format!("\nU\t{v}"));
            }
            let mut j = json!({ "n": n, "constr1": c1, "lower": lower, "eq1": eq1.to_string(), "prop4": p4 });
            if let Some(v) = uv {
                j["u"] = json!(v.to_string());
            }
            emit(fmt, &text, &format!("{n}\t{c1}\t{lower}\t{eq1}\t{p4}"), j);
        }
        Command::Optimal { root, n, words } => {
            ternary_only(q, "exact search")?;
            let cache = TCache::from_env()?;
            match root {
                Some(r) => {
                    let r = parse(&r, q)?;
                    let (t, code) = t_of_root_code(&r, n, &cache, budget)?;
                    match fmt {
                        Format::Json => print_json(&json!({
                            "root": r.to_string(),
                            "n": n,
                            "t": t,
                            "code": words.then_some(&code),
                        })),
                        Format::Tsv => outln!("{r}\t{n}\t{t}"),
                        Format::Text => outln!("T({n}, {r}) = {t}"),
                    }
                    if words && fmt != Format::Json {
                        code.words.iter().for_each(|w| outln!("{w}"));
                    }
                }
                None => {
                    let tn = t_of_n(n, &cache, budget)?;
                    match fmt {
                        Format::Json => print_json(&tn),
                        _ => {
                            for (r, (orbit, t)) in &tn.per_root {
                                outln!("{r}\t{orbit}\t{t}");
                            }
                            outln!("total\t-\t{}", tn.total);
                        }
                    }
                }
            }
        }
        Command::Table { n_max, exact_max } => {
            ternary_only(q, "table")?;
            let cache = TCache::from_env()?;
            let mut rows = Vec::new();
            for n in 1..=n_max {
                let optimal = if n <= exact_max { Some(t_of_n(n, &cache, budget)?.total) } else { None };
                let lower = assemble_lower_bound(n, Some(&cache), false, false)?.size;
                rows.push((n, constr1_size(n), lower, eq1_upper(n), prop4_upper(n), optimal));
            }
            match fmt {
                Format::Json => print_json(
                    &rows
                        .iter()
                        .map(|&(n, c1, lower, eq1, p4, opt)| {
                            json!({ "n": n, "constr1": c1, "lower": lower, "eq1": eq1.to_string(), "prop4": p4, "optimal": opt })
                        })
                        .collect::<Vec<_>>(),
                ),
                _ => {
                    outln!("n\tconstr1\tlower\teq1\tprop4\toptimal");
                    for (n, c1, lower, eq1, p4, opt) in rows {
                        let opt = opt.map_or("-".to_string(), |v| v.to_string());
                        outln!("{n}\t{c1}\t{lower}\t{eq1}\t{p4}\t{opt}");
                    }
                }
            }
        }
        Command::Verify { fixtures, exact_max, stored } => {
            let report = verify::run(&fixtures, exact_max, budget, &stored)?;
            for line in &report.lines {
                outln!("{line}");
            }
            outln!("{} passed, {} failed", report.passed, report.failed);
            if report.failed > 0 {
                return Err(Failure::Invalid(format!("{} fixture checks failed", report.failed)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Invalid(m) | Failure::Resource(m)) = &f;
            eprintln!("error: {m}");
            ExitCode::from(f.code())
        }
    }
}
