use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use circbundle::endo::BundleEndo;
use circbundle::fixtures;
use circbundle::{
    Alphabet, BundleContext, Error, FreeWord, PushTable, Statement, Verifier, VerifyConfig,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CONTEXT: u8 = 3;

/// Word problem, automorphisms and point-pushing checks for circle bundles over surfaces.
#[derive(Parser)]
#[command(name = "circbundle", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ContextArgs {
    /// Genus of the base surface.
    #[arg(short = 'g', long = "genus", default_value_t = 2)]
    g: usize,
    /// Euler number of the bundle.
    #[arg(
        short = 'k',
        long = "euler",
        default_value_t = 1,
        allow_negative_numbers = true
    )]
    k: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word is trivial and print its z-exponent.
    Reduce {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Word literal, e.g. "a1 b1 ~a1 ~b1 z".
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite.
    Verify {
        /// splitting, kernel-tau, prop-3-3, cor-3-4, theorem-A, k-linearity or word-problem-oracle.
        statement: String,
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_word_len: usize,
        #[arg(long, default_value_t = 6)]
        oracle_depth: usize,
        /// Print the JSON report instead of the summary.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print facts about the bundle group.
    Info {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print the point-pushing automorphism of a word as an endomorphism literal.
    Push {
        #[arg(short = 'g', long = "genus", default_value_t = 2)]
        g: usize,
        word: String,
        /// Print the inverse as well.
        #[arg(long)]
        inverse: bool,
    },
    /// Apply an endomorphism literal (JSON file) to a word.
    Apply {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Path to a JSON object {"a1": "...", "b1": "...", ..., "z": "z"}.
        #[arg(long)]
        endo: PathBuf,
        word: String,
    },
    /// Regenerate or check the frozen fixture corpus.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        dir: PathBuf,
        /// Compare against the files on disk instead of writing them.
        #[arg(long)]
        check: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::UnsupportedContext(_) | Error::ContextMismatch { .. } => EXIT_CONTEXT,
            Error::ResourceLimit { .. } | Error::Precondition(_) | Error::NotInCenter { .. } => {
                EXIT_FAILED
            }
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

fn context(args: &ContextArgs) -> Result<BundleContext, Failure> {
    BundleContext::new(args.g, args.k).map_err(|e| Failure::new(EXIT_CONTEXT, e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Reduce { ctx, word, json } => reduce(&ctx, &word, json),
        Command::Verify {
            statement,
            ctx,
            seed,
            trials,
            max_word_len,
            oracle_depth,
            json,
            out,
        } => {
            let statement: Statement = statement
                .parse()
                .map_err(|e: Error| Failure::new(EXIT_USAGE, e.to_string()))?;
            context(&ctx)?;
            let config = VerifyConfig {
                genus: ctx.g,
                euler: ctx.k,
                seed,
                trials,
                max_word_len,
                oracle_depth,
            };
            let verifier = Verifier::new(config)?;
            let report = verifier.run(statement);
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            if let Some(path) = out {
                fs::write(&path, format!("{text}\n")).map_err(|e| {
                    Failure::new(EXIT_USAGE, format!("writing {}: {e}", path.display()))
                })?;
            }
            if json {
                println!("{text}");
            } else {
                print!("{}", report.summary());
            }
            Ok(if report.ok() { 0 } else { EXIT_FAILED })
        }
        Command::Info { ctx, json } => info(&ctx, json),
        Command::Push { g, word, inverse } => {
            let table = PushTable::standard(g)?;
            let t = FreeWord::parse(&word, g)?;
            let mut out = json!({ "word": t.to_literal(Alphabet::Surface), "push": table.push(&t)?.to_json() });
            if inverse {
                out["inverse"] = table.push(&t.inverse())?.to_json();
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializes")
            );
            Ok(0)
        }
        Command::Apply { ctx, endo, word } => {
            let bundle = context(&ctx)?;
            let text = fs::read_to_string(&endo).map_err(|e| {
                Failure::new(EXIT_USAGE, format!("reading {}: {e}", endo.display()))
            })?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Failure::new(EXIT_USAGE, format!("bad JSON: {e}")))?;
            let e = BundleEndo::from_json(ctx.g, &value)?;
            let x = bundle.parse(&word)?;
            println!("{}", e.apply(&x).to_literal());
            Ok(0)
        }
        Command::Fixtures { dir, check } => {
            let mut stale = 0;
            for (name, contents) in fixtures::all_fixtures()? {
                let path = dir.join(&name);
                if check {
                    let on_disk = fs::read_to_string(&path).unwrap_or_default();
                    if on_disk != contents {
                        println!("stale: {}", path.display());
                        stale += 1;
                    }
                } else {
                    fs::create_dir_all(&dir).map_err(|e| {
                        Failure::new(EXIT_USAGE, format!("creating {}: {e}", dir.display()))
                    })?;
                    fs::write(&path, contents).map_err(|e| {
                        Failure::new(EXIT_USAGE, format!("writing {}: {e}", path.display()))
                    })?;
                    println!("wrote {}", path.display());
                }
            }
            Ok(if stale == 0 { 0 } else { EXIT_FAILED })
        }
    }
}

fn reduce(args: &ContextArgs, word: &str, json: bool) -> Result<u8, Failure> {
    let ctx = context(args)?;
    let x = ctx.parse(word)?;
    let (z, residual) = match ctx.z_exponent(&x) {
        Ok(m) => (Some(m), None),
        Err(Error::NotInCenter { residual }) => (None, Some(residual)),
        Err(e) => return Err(e.into()),
    };
    if json {
        let out = json!({
            "input": x.to_literal(),
            "g": args.g,
            "k": args.k,
            "trivial": z.is_some(),
            "z_exponent": z,
            "residual": residual,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        );
    } else {
        match (z, residual) {
            (Some(m), _) => println!("trivial; z^{m}"),
            (None, Some(r)) => {
                println!("nontrivial");
                println!("residual: {r}");
            }
            (None, None) => unreachable!("either central or not"),
        }
    }
    Ok(0)
}

fn info(args: &ContextArgs, json: bool) -> Result<u8, Failure> {
    let ctx = context(args)?;
    let (g, k) = (args.g, args.k);
    let relator = ctx.relator_element();
    let commutators: String = (1..=g).map(|i| format!("[A{i},B{i}]")).collect();
    let d = 2 * g as i64 - 2;
    let (splits, verdict) = if g == 1 {
        (
            true,
            format!("genus 1: the mapping class extension splits for every k (here k = {k})"),
        )
    } else if k % d == 0 {
        (
            true,
            format!("2g-2 = {d} divides k = {k}: the mapping class extension splits"),
        )
    } else {
        (
            false,
            format!("2g-2 = {d} does not divide {k}: no splitting"),
        )
    };
    let center = "<z>, infinite cyclic and central";
    if json {
        let out = json!({
            "g": g,
            "k": k,
            "relator": relator.to_literal(),
            "relation": format!("{commutators} = z^{k}"),
            "center": center,
            "two_g_minus_two": d,
            "splits": splits,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        );
    } else {
        println!("genus {g}, Euler number {k}");
        println!("relation: {commutators} = z^{k}");
        println!("relator word: {}", relator.to_literal());
        println!("center: {center}");
        println!("{verdict}");
    }
    Ok(0)
}
