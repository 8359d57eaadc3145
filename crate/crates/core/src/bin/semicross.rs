use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use semicross::cli::{self, Action, Options, Report, EXIT_ERROR};
use semicross::presentation::Side;
use semicross::tensorspace::DEFAULT_CAP;
use semicross::Error;

/// Homological checks for N-homogeneous algebras and their semi-cross products.
#[derive(Parser, Debug)]
#[command(name = "semicross", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Presentation file.
    file: PathBuf,
    /// Truncation degree.
    #[arg(long, default_value_t = 8)]
    max_degree: usize,
    /// Largest ambient dimension of a tensor power.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Coefficient field, `Q` or `F <p>`; overrides the file.
    #[arg(long, num_args = 1..=2, value_names = ["FIELD", "P"])]
    field: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology of the contracted Koszul complex.
    Koszul(Common),
    /// Global dimension from the vanishing of the dual components.
    Gldim(Common),
    /// Dimensions of the graded components.
    Hilbert(Common),
    /// Hilbert series identity with the dual polynomial.
    Poincare(Common),
    /// Relations of the semi-cross product by the file's automorphism.
    Semicross {
        #[command(flatten)]
        common: Common,
        /// Write the new presentation here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Isomorphism of Koszul complexes induced by the twist.
    TwistIso(Common),
    /// Cohomology of the dual complex and the Gorenstein verdict.
    Gorenstein(Common),
    /// Regularity of a degree-one element.
    Regular {
        #[command(flatten)]
        common: Common,
        /// Linear combination of generators, e.g. `x` or `x + 2*y`.
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
}

fn split(cmd: Command) -> (Action, Common) {
    match cmd {
        Command::Koszul(c) => (Action::Koszul, c),
        Command::Gldim(c) => (Action::Gldim, c),
        Command::Hilbert(c) => (Action::Hilbert, c),
        Command::Poincare(c) => (Action::Poincare, c),
        Command::Semicross { common, out } => (Action::Semicross { out }, common),
        Command::TwistIso(c) => (Action::TwistIso, c),
        Command::Gorenstein(c) => (Action::Gorenstein, c),
        Command::Regular { common, element, side } => (
            Action::Regular {
                element,
                side: match side {
                    SideArg::Left => Side::Left,
                    SideArg::Right => Side::Right,
                },
            },
            common,
        ),
    }
}

fn echo(action: &Action, c: &Common) -> String {
    let mut parts = vec![action.name().to_string()];
    match action {
        Action::Gldim | Action::Semicross { .. } => {}
        _ => parts.push(format!("--max-degree {}", c.max_degree)),
    }
    if let Action::Semicross { out: Some(out) } = action {
        parts.push(format!("--out {}", out.display()));
    }
    if let Action::Regular { element, side } = action {
        parts.push(format!("--element {element:?}"));
        if *side == Side::Left {
            parts.push("--side left".into());
        }
    }
    if let Some(f) = &c.field {
        parts.push(format!("--field {}", f.join(" ")));
    }
    parts.push(c.file.display().to_string());
    parts.join(" ")
}

fn execute(action: &Action, c: &Common, command_line: &str) -> Result<cli::Outcome, Error> {
    let source = read(&c.file)?;
    let opts = Options {
        max_degree: c.max_degree,
        cap: c.cap,
        field: c.field.as_deref().map(cli::parse_field_flag).transpose()?,
    };
    let outcome = cli::run(action, command_line, &source, &opts)?;
    if let (Action::Semicross { out: Some(path) }, Some(text)) = (action, &outcome.presentation_out) {
        std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(outcome)
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (action, common) = split(args.command);
    let command_line = echo(&action, &common);
    match execute(&action, &common, &command_line) {
        Ok(outcome) => {
            if common.json {
                println!("{}", outcome.report.to_json());
            } else if let (Action::Semicross { out: None }, Some(text)) = (&action, &outcome.presentation_out) {
                print!("{text}");
            } else {
                print!("{}", outcome.report.to_text());
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(err) => {
            let report = Report::failure(&command_line, &err);
            if common.json {
                println!("{}", report.to_json());
            }
            eprintln!("error[{}]: {err}", err.code());
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
