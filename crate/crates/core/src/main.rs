use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use inireg::cli::{self, error_exit_code, fixture, fixture_names, parse_order_spec, Command, Options};
use inireg::sequences::{PipelineConfig, Strategy};
use inireg::Error;

/// Certified lower bounds for the depth of R/I via initially regular sequences.
#[derive(Parser, Debug)]
#[command(name = "inireg", version)]
struct Args {
    /// initial | bound | verify | oracle-depth | polarize | report
    command: String,

    /// Problem file (`-` or omitted: stdin).
    file: Option<PathBuf>,

    /// Load a shipped example instead of a file (`--fixture list` to list them).
    #[arg(long)]
    fixture: Option<String>,

    /// Override the problem's term order, e.g. "lex c > a > b".
    #[arg(long)]
    order: Option<String>,

    #[arg(long, default_value = "greedy")]
    strategy: String,

    #[arg(long, default_value_t = 8)]
    restarts: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Allow tail variables of degree other than 1, one fixed power each.
    #[arg(long)]
    relaxed_degrees: bool,

    /// Bound through the polarization (monomial input only).
    #[arg(long)]
    polarize: bool,

    /// Also compute the oracle depth.
    #[arg(long)]
    oracle: bool,

    #[arg(long)]
    json: bool,

    /// Lift the oracle's size guard.
    #[arg(long)]
    force: bool,
}

fn execute(args: &Args) -> Result<i32, Error> {
    let command: Command = args.command.parse()?;
    let text = match (&args.fixture, &args.file) {
        (Some(name), _) if name == "list" => {
            for n in fixture_names() {
                println!("{n}");
            }
            return Ok(0);
        }
        (Some(name), _) => fixture(name)
            .ok_or_else(|| Error::Usage(format!("unknown fixture `{name}` (try --fixture list)")))?
            .to_string(),
        (None, Some(path)) if path.as_os_str() != "-" => std::fs::read_to_string(path)?,
        (None, _) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let mut problem = cli::parse_problem(&text)?;
    if let Some(spec) = &args.order {
        problem.order = parse_order_spec(spec, &problem.ring)?;
    }
    let options = Options {
        pipeline: PipelineConfig {
            strategy: args.strategy.parse::<Strategy>()?,
            restarts: args.restarts,
            seed: args.seed,
            relaxed_degrees: args.relaxed_degrees,
        },
        polarize: args.polarize,
        oracle: args.oracle,
        force: args.force,
    };
    let report = cli::run(command, &problem, &options, args.fixture.as_deref())?;
    if args.json {
        println!("{}", report.to_json()?);
    } else {
        print!("{}", report.render_text());
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(error_exit_code(&err) as u8)
        }
    }
}
