//! `nodal-hodge`: exact Hodge–Poincaré polynomials, mixed weight tables and
//! verification checks for moduli of rank-2 sheaves on one-nodal curves.
//!
//! Exit codes: 0 success, 2 usage error, 3 internal invariant violation.

use clap::{Args, Parser, Subcommand, ValueEnum};

use nodal_hodge::closed_forms;
use nodal_hodge::degeneration::{gieseker_mixed_table, limit_mixed_table, simpson_mixed_table};
use nodal_hodge::verify::{self, CheckStatus, VerifyConfig};

mod render;

const EXIT_USAGE: i32 = 2;
const EXIT_INVARIANT: i32 = 3;

/// Default refusal threshold: exterior brute force grows with the middle
/// binomial coefficient, so larger genera need an explicit opt-in.
const GENUS_CAP: u32 = 8;

#[derive(Parser)]
#[command(
    name = "nodal-hodge",
    version,
    about = "Exact cohomological invariants of rank-2 moduli spaces over nodal curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Hodge-Poincaré polynomial and its diagonal specialization
    Hpoly(HpolyArgs),
    /// Emit the mixed (n, w, p, q) dimension table of a singular or limit space
    Table(TableArgs),
    /// Run the verification suite: every cross-check at the given genus
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolySpace {
    /// Moduli space over a smooth curve of the given genus
    Smooth,
    /// Moduli space over the normalization (genus - 1)
    Base,
    /// Central fiber of the Gieseker degeneration
    Gieseker,
    /// Simpson moduli space of the nodal curve
    Simpson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableSpace {
    /// Nearby fiber with its limit mixed structure
    Limit,
    Gieseker,
    Simpson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Args)]
struct HpolyArgs {
    #[arg(long, value_enum)]
    space: PolySpace,
    #[arg(long)]
    genus: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Allow genus beyond the default cap of 8
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    space: TableSpace,
    #[arg(long)]
    genus: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    genus: u32,
    /// Cap degree-indexed computations; checks needing more are skipped
    #[arg(long)]
    max_degree_override: Option<u32>,
    /// Seed for the randomized property checks
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    force: bool,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Hpoly(args) => cmd_hpoly(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Honor `NODAL_HODGE_THREADS`: a cap on worker parallelism, 0 meaning
/// fully sequential.
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("NODAL_HODGE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("NODAL_HODGE_THREADS must be a nonnegative integer, got {raw:?}"))?;
    let threads = if n == 0 { 1 } else { n };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| format!("failed to configure thread pool: {e}"))
}

fn check_genus(genus: u32, force: bool) -> Result<(), String> {
    if genus < 2 {
        return Err(format!("genus must be at least 2, got {genus}"));
    }
    if genus > GENUS_CAP && !force {
        return Err(format!(
            "genus {genus} exceeds the default cap of {GENUS_CAP}; pass --force to proceed"
        ));
    }
    Ok(())
}

fn cmd_hpoly(args: HpolyArgs) -> i32 {
    if let Err(msg) = check_genus(args.genus, args.force) {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    let (space, result) = match args.space {
        PolySpace::Smooth => ("smooth", closed_forms::smooth_hp(args.genus)),
        PolySpace::Base => ("base", closed_forms::base_hp(args.genus)),
        PolySpace::Gieseker => ("gieseker", closed_forms::gieseker_hp(args.genus)),
        PolySpace::Simpson => ("simpson", closed_forms::simpson_hp(args.genus)),
    };
    let poly = match result {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: internal invariant violation: {e}");
            return EXIT_INVARIANT;
        }
    };
    let rendered = match args.format {
        Format::Text => render::hpoly_text(space, args.genus, &poly),
        Format::Json => render::hpoly_json(space, args.genus, &poly),
        Format::Csv => render::hpoly_csv(&poly),
        Format::Markdown => render::hpoly_markdown(space, args.genus, &poly),
    };
    print!("{rendered}");
    0
}

fn cmd_table(args: TableArgs) -> i32 {
    if let Err(msg) = check_genus(args.genus, args.force) {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    let result = match args.space {
        TableSpace::Limit => limit_mixed_table(args.genus),
        TableSpace::Gieseker => gieseker_mixed_table(args.genus),
        TableSpace::Simpson => simpson_mixed_table(args.genus),
    };
    let table = match result {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: internal invariant violation: {e}");
            return EXIT_INVARIANT;
        }
    };
    let rendered = match args.format {
        Format::Text => render::table_text(&table),
        Format::Json => {
            let mut s = table.to_json_string();
            s.push('\n');
            s
        }
        Format::Csv => table.to_csv_string(),
        Format::Markdown => render::table_markdown(&table),
    };
    print!("{rendered}");
    0
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if let Err(msg) = check_genus(args.genus, args.force) {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    let cfg = VerifyConfig {
        genus: args.genus,
        max_degree_override: args.max_degree_override,
        seed: args.seed.unwrap_or(verify::DEFAULT_SEED),
    };
    println!("verification suite: genus {} (seed {})", cfg.genus, cfg.seed);
    let results = verify::run_suite(&cfg);
    let mut passed = 0;
    let mut failed = 0;
    let mut skipped = 0;
    for r in &results {
        let tag = match r.status {
            CheckStatus::Pass => {
                passed += 1;
                "PASS"
            }
            CheckStatus::Fail => {
                failed += 1;
                "FAIL"
            }
            CheckStatus::Skipped => {
                skipped += 1;
                "SKIP"
            }
        };
        println!("{tag} {}: {}", r.name, r.detail);
    }
    println!("result: {passed} passed, {failed} failed, {skipped} skipped");
    if failed > 0 {
        EXIT_INVARIANT
    } else {
        0
    }
}
