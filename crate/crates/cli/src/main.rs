use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reeskit::frontend::{execute, parse_with, render, value_text, ExecOptions, Feed, Format, ParseOptions, Session};
use reeskit::{Limits, MonomialOrder};

#[derive(Parser, Debug)]
#[command(name = "reeskit", version, about = "Blowups, Rees algebras and degenerate fibers over Q")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Execute a script file.
    Run {
        script: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Interactive session; statements run as soon as they end with `;`.
    Repl {
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
}

#[derive(Args, Debug)]
struct Opts {
    /// Print the structured (JSON) document instead of text.
    #[arg(long)]
    json: bool,
    /// Order for rings declared without an `order` clause.
    #[arg(long, value_enum, default_value = "grevlex")]
    order: Order,
    /// Degree cap for S-pairs; overrides REESKIT_MAX_DEGREE.
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    sat_bound: Option<usize>,
    /// Highest degree in graded-piece tables.
    #[arg(long)]
    smax: Option<usize>,
    /// Stop at the first failing command.
    #[arg(long)]
    fail_fast: bool,
    /// Recorded in the output for reproducibility.
    #[arg(long)]
    seed: Option<u64>,
}

impl Opts {
    fn exec_options(&self) -> Result<ExecOptions, String> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var("REESKIT_MAX_DEGREE") {
            limits.max_degree = v
                .trim()
                .parse()
                .map_err(|_| format!("REESKIT_MAX_DEGREE must be a nonnegative integer, got `{v}`"))?;
        }
        if let Some(d) = self.max_degree {
            limits.max_degree = d;
        }
        if let Some(s) = self.sat_bound {
            limits.sat_bound = s;
        }
        if let Some(s) = self.smax {
            limits.s_max = s;
        }
        Ok(ExecOptions {
            limits,
            fail_fast: self.fail_fast,
            seed: self.seed,
            default_order: match self.order {
                Order::Lex => MonomialOrder::Lex,
                Order::Grevlex => MonomialOrder::GrevLex,
            },
        })
    }

    fn format(&self) -> Format {
        if self.json {
            Format::Structured
        } else {
            Format::Text
        }
    }
}

fn run(script: &PathBuf, opts: &Opts) -> Result<ExitCode, String> {
    let options = opts.exec_options()?;
    let text = std::fs::read_to_string(script).map_err(|e| format!("{}: {e}", script.display()))?;
    let parsed = match parse_with(
        &text,
        ParseOptions {
            default_order: options.default_order.clone(),
        },
    ) {
        Ok(s) => s,
        Err(d) => {
            eprintln!("{}:{d}", script.display());
            return Ok(ExitCode::from(2));
        }
    };
    let doc = execute(&parsed, &options);
    io::stdout().write_all(&render(&doc, opts.format())).map_err(|e| e.to_string())?;
    Ok(if doc.has_errors() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn repl(opts: &Opts) -> Result<ExitCode, String> {
    let options = opts.exec_options()?;
    let mut session = Session::new(options);
    let stdin = io::stdin();
    let mut out = io::stdout();
    let mut failed = false;
    loop {
        let prompt = if session.is_pending() { "... " } else { "> " };
        let _ = write!(out, "{prompt}");
        let _ = out.flush();
        let mut line = String::new();
        if stdin.lock().read_line(&mut line).map_err(|e| e.to_string())? == 0 {
            let _ = writeln!(out);
            break;
        }
        match session.feed(line.trim_end_matches(['\n', '\r'])) {
            Feed::Incomplete => {}
            Feed::Error(d) => {
                failed = true;
                let _ = writeln!(out, "{d}");
            }
            Feed::Parsed(doc) => {
                if opts.json {
                    let _ = out.write_all(&render(&doc, Format::Structured));
                    continue;
                }
                for e in &doc.entries {
                    let bind = e.binding.as_ref().map_or(String::new(), |b| format!(" -> {b}"));
                    let _ = writeln!(out, "[{}]{bind}", e.key);
                    match &e.outcome {
                        Ok(v) => {
                            let _ = write!(out, "{}", value_text(v, "  "));
                        }
                        Err(msg) => {
                            failed = true;
                            let _ = writeln!(out, "  error: {msg}");
                        }
                    }
                }
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Cmd::Run { script, opts } => run(script, opts),
        Cmd::Repl { opts } => repl(opts),
    };
    res.unwrap_or_else(|msg| {
        eprintln!("reeskit: {msg}");
        ExitCode::from(2)
    })
}
