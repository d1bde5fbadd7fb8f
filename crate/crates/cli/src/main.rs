use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ibx_cli::{cmd_check, cmd_classify, cmd_construct, cmd_solve_wayb, CmdError, OutputFormat};

/// Exact-arithmetic workbench for weighted infinitesimal bialgebras.
#[derive(Parser)]
#[command(name = "ibx", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check profile against a structure file.
    Check {
        file: PathBuf,
        /// Check suite to run; defaults to the kind's standard profile.
        #[arg(long)]
        profile: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a product structure from a structure file.
    Construct {
        file: PathBuf,
        /// One of: biproduct, bicrossed, double-cross, cocycle-bicross,
        /// unified-a1, unified-a2, unified-c1, unified-c2, unified-I,
        /// unified-II, special.
        #[arg(long)]
        product: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate Yang-Baxter solutions over a finite coefficient grid.
    SolveWayb {
        file: PathBuf,
        /// Weight, as p/q; defaults to the weight stored in the file.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Comma-separated coefficient set, e.g. -1,0,1.
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        coeffs: String,
        /// Comma-separated entry positions i:j allowed to be nonzero.
        #[arg(long)]
        support_mask: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify extensions of the base structure up to equivalence.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        v_dim: usize,
        /// Comma-separated coefficient grid, e.g. 0,1.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        grid: String,
        /// algebra | coalgebra | bialgebra; defaults to the file's kind.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run() -> Result<bool, CmdError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            file,
            profile,
            format,
        } => {
            let fmt = match format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            };
            let (rendered, ok) = cmd_check(&file, profile.as_deref(), fmt)?;
            println!("{rendered}");
            Ok(ok)
        }
        Command::Construct { file, product, out } => {
            let (rendered, _ok) = cmd_construct(&file, &product, out.as_deref())?;
            println!("{rendered}");
            // constructing from invalid data still succeeds as a command
            Ok(true)
        }
        Command::SolveWayb {
            file,
            lambda,
            coeffs,
            support_mask,
            out,
        } => {
            let rendered = cmd_solve_wayb(
                &file,
                lambda.as_deref(),
                &coeffs,
                support_mask.as_deref(),
                out.as_deref(),
            )?;
            println!("{rendered}");
            Ok(true)
        }
        Command::Classify {
            file,
            v_dim,
            grid,
            kind,
            out,
        } => {
            let rendered = cmd_classify(&file, v_dim, &grid, kind.as_deref(), out.as_deref())?;
            println!("{rendered}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("ibx: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
