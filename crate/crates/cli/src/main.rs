use std::fs;
use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand};
use hfset::kernel::{DEFAULT_MAX_RANK, DEFAULT_MAX_SIZE};
use hfset::lang::{LangError, Session, SessionConfig};
use hfset::suites::{run_suite, SUITES};
use hfset::Limits;

const SUITE_FAILED: u8 = 1;
const USAGE: u8 = 2;

// Deep sets recurse when printed and dropped.
const STACK_BYTES: usize = 512 << 20;

#[derive(Parser, Debug)]
#[command(
    name = "hfs",
    version,
    about = "Hereditarily finite sets: evaluator, REPL and property suites"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug)]
struct Global {
    /// Largest set any operation may build
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SIZE)]
    max_size: usize,
    /// Largest rank allowed for set literals, numerals, powersets and chains
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RANK)]
    max_rank: usize,
    /// Chain length used by `chain` when none is given
    #[arg(long, global = true, default_value_t = 16)]
    fuel: usize,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Interactive session
    Repl,
    /// Evaluate one expression or command and print the result
    Eval {
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// Run a batch file, one command per line (`-` reads standard input)
    Run { file: PathBuf },
    /// Run a property suite
    Check {
        /// Suite name, or `all`
        #[arg(long)]
        suite: String,
        /// Random cases per property
        #[arg(long, default_value_t = 100)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn session(global: &Global) -> Session {
    let limits = Limits {
        max_size: global.max_size,
        max_rank: global.max_rank,
    };
    limits.install();
    Session::new(SessionConfig {
        limits,
        fuel: global.fuel,
        ..SessionConfig::default()
    })
}

fn report(err: &LangError) {
    eprintln!("error: {err}");
}

fn eval_one(global: &Global, line: &str) -> u8 {
    match session(global).execute(line) {
        Ok(Some(out)) => {
            println!("{out}");
            0
        }
        Ok(None) => 0,
        Err(e) => {
            report(&e);
            USAGE
        }
    }
}

fn run_file(global: &Global, file: &PathBuf) -> u8 {
    let text = if file.as_os_str() == "-" {
        io::read_to_string(io::stdin())
    } else {
        fs::read_to_string(file)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return USAGE;
        }
    };
    let mut s = session(global);
    let mut stdout = io::stdout().lock();
    for (n, line) in text.lines().enumerate() {
        match s.execute(line) {
            Ok(Some(out)) => {
                let _ = writeln!(stdout, "{out}");
            }
            Ok(None) => {}
            Err(e) => {
                let _ = stdout.flush();
                eprintln!("{}:{}: {e}", file.display(), n + 1);
                return USAGE;
            }
        }
    }
    0
}

fn repl(global: &Global) -> u8 {
    let mut s = session(global);
    let interactive = io::stdin().is_terminal();
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    loop {
        if interactive {
            eprint!("hfs> ");
            let _ = io::stderr().flush();
        }
        let Some(Ok(line)) = lines.next() else {
            return 0;
        };
        if matches!(line.trim(), ":q" | ":quit") {
            return 0;
        }
        match s.execute(&line) {
            Ok(Some(out)) => println!("{out}"),
            Ok(None) => {}
            Err(e) => report(&e),
        }
    }
}

fn check(global: &Global, suite: &str, size: usize, seed: u64) -> u8 {
    session(global);
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut failed = false;
    for name in names {
        match run_suite(name, size, seed) {
            Ok(r) => {
                println!("{r}");
                failed |= !r.passed();
            }
            Err(e) => {
                eprintln!("error: {e}");
                return USAGE;
            }
        }
    }
    if failed {
        SUITE_FAILED
    } else {
        0
    }
}

fn dispatch(cli: Cli) -> u8 {
    let g = &cli.global;
    match &cli.command {
        Cmd::Repl => repl(g),
        Cmd::Eval { expr } => eval_one(g, expr),
        Cmd::Run { file } => run_file(g, file),
        Cmd::Check { suite, size, seed } => check(g, suite, *size, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let worker = thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || dispatch(cli))
        .expect("spawn worker thread");
    ExitCode::from(worker.join().unwrap_or(101))
}
