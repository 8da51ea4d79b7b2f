use clap::{Parser, Subcommand};
use sasaki_cli::{analyze_file, bp_orders, parse_params, render_table, reproduce_tables, CliError};
use sasaki_core::linkgeom::catalog;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact obstruction checks for extremal Sasaki metrics on links of
/// weighted homogeneous hypersurface singularities.
#[derive(Parser)]
#[command(name = "sasaki", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the link described by a TOML spec.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Reproduce a table of obstructed families.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Number of smallest admissible values per parameter.
        #[arg(long)]
        max_param: Option<i64>,
    },
    /// Orders of the groups bP_{4m} for m = 2..=max.
    Bp {
        #[arg(long)]
        max: u32,
    },
    /// Show one catalog family member and an equivalent explicit spec.
    Catalog {
        #[arg(long)]
        family: String,
        /// Comma-separated k=v pairs.
        #[arg(long, default_value = "")]
        params: String,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            input,
            output,
            json,
        } => {
            let report = analyze_file(&input)?;
            let text = if json {
                report.to_json()
            } else {
                report.to_text()
            };
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?
                }
                None => print!("{text}"),
            }
        }
        Command::Tables { which, max_param } => {
            print!("{}", render_table(&reproduce_tables(which, max_param)?));
        }
        Command::Bp { max } => {
            for (m, order) in bp_orders(max) {
                println!("|bP_{}| = {order}", 4 * m);
            }
        }
        Command::Catalog { family, params } => {
            let params = parse_params(&params)?;
            let e = catalog(&family, &params).map_err(|e| CliError::Validation(e.to_string()))?;
            let l = &e.link;
            println!("family: {}", e.family);
            println!("polynomial: {}", e.polynomial);
            println!("labels: {}", e.labels.join(" | "));
            println!(
                "quasi-regular weights: {:?}, degree {}",
                l.quasi_regular_weights(),
                l.degree()
            );
            println!(
                "Sasaki cone dimension: {} (listed {})",
                l.cone_dimension(),
                e.expected_dim
            );
            if let Some(n) = &e.note {
                println!("note: {n}");
            }
            println!();
            println!("name = \"{} {}\"", e.family, params_text(&e.params));
            println!("comment = \"{}\"", e.polynomial);
            println!("inner_weights = {:?}", l.input_weights());
            println!("inner_degree = {}", l.input_degree());
            println!("tail = {}", l.tail_len());
        }
    }
    Ok(())
}

fn params_text(params: &[(String, i64)]) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
