use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qtjordan::{execute, parse_rational, parse_roots, render_error, CliError, Command, Format, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "qtjordan", version, about = "Exact checks on standard modules of U_q(Lsl2)")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Drinfeld roots as comma-separated a:multiplicity, e.g. 1:2,4/3:1
    #[arg(long, global = true, allow_hyphen_values = true)]
    roots: Option<String>,

    /// Deformation parameter, a rational other than 0 and ±1
    #[arg(long, global = true, default_value = "2", allow_hyphen_values = true)]
    q: String,

    /// Perturbation directions are alpha_i = i + seed
    #[arg(long = "alpha-seed", global = true, default_value = "0", allow_hyphen_values = true)]
    alpha_seed: String,

    /// Truncation order of the u-series (default 2 deg P + 2)
    #[arg(long, global = true)]
    truncation: Option<usize>,

    /// Mode window for the relation and limit checks
    #[arg(long, global = true, default_value_t = 2)]
    window: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Cap on deg P
    #[arg(long = "max-degree", global = true, default_value_t = qtjordan_core::vmodule::DEFAULT_MAX_DEGREE)]
    max_degree: usize,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Check the defining relations on the V-basis module
    Relations,
    /// List the q-character
    Qchar,
    /// List the q,t-character
    Qtchar,
    /// Jordan type of psi+_1 on every l-weight space
    Jordan,
    /// Run every stage and summarize
    Verify,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
}

fn build(cli: &Cli, command: Command) -> Result<RunConfig, CliError> {
    let roots = match &cli.roots {
        Some(s) => parse_roots(s)?,
        None => return Err(CliError::Config("--roots is required".into())),
    };
    let mut run = RunConfig::new(command, roots);
    run.q = parse_rational("--q", &cli.q)?;
    run.alpha_seed = parse_rational("--alpha-seed", &cli.alpha_seed)?;
    run.truncation = cli.truncation;
    run.window = cli.window;
    run.max_degree = cli.max_degree;
    run.format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    Ok(run)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Relations => Command::Relations,
        Cmd::Qchar => Command::Qchar,
        Cmd::Qtchar => Command::Qtchar,
        Cmd::Jordan => Command::Jordan,
        Cmd::Verify => Command::Verify,
    };
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let (out, code) = match build(&cli, command) {
        Ok(run) => execute(&run),
        Err(e) => (render_error(command, &e, format), e.exit_code()),
    };
    // diagnostics go to stderr in text mode; JSON always goes to stdout
    if code == 2 && format == Format::Text {
        eprint!("{out}");
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
