//! Command-line interface: exact λ₁, Einstein constants, and conformal
//! stability for the catalog of standard Einstein manifolds.
//!
//! Exit codes: 0 success, 1 mismatch against expectations, 2 input error.

use clap::{Parser, Subcommand};
use lie_spectra::casimir::{enumerate_dominant_below, regenerate_small_table, render_small_table};
use lie_spectra::catalog::{load_catalog, Catalog, CatalogEntry};
use lie_spectra::error::Error;
use lie_spectra::expr::Params;
use lie_spectra::lattice::{lattice_of, GroupForm};
use lie_spectra::rat::{parse_rat, rint, Rat};
use lie_spectra::rep::{decompose, restrict, weight_system};
use lie_spectra::report::{
    diff_against_expectation, has_mismatch, render_records, render_text, run_report,
    ReportFormat, ReportOptions,
};
use lie_spectra::root_system::{build_root_system, SimpleLieType};
use lie_spectra::spectrum::{classify_conformal, fast_lower_bound, lambda1, Lambda1};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lie-spectra",
    about = "Laplace eigenvalues and conformal stability of standard Einstein manifolds, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate the table of irreducible representations with Casimir
    /// eigenvalue at most 1, per simple type up to a rank cap.
    Table2 {
        #[arg(long, default_value_t = 8)]
        rank_cap: usize,
    },
    /// Enumerate all nonzero dominant lattice weights with eigenvalue
    /// below a bound (complete).
    Enumerate {
        /// Simple family A|B|C|D|E6|E7|E8|F4|G2, or a full type like B3
        #[arg(long = "type")]
        lie_type: String,
        /// Rank (for the classical families when --type is a bare letter)
        #[arg(long)]
        rank: Option<usize>,
        /// Group form: sc, su/<d>, sp-z2, so, so-z2, spin+, spin-, e6-z3, e7-z2
        #[arg(long, default_value = "sc")]
        form: String,
        /// Bound as a rational p/q
        #[arg(long)]
        bound: String,
        /// Strict inequality (< instead of <=)
        #[arg(long)]
        strict: bool,
    },
    /// Decompose an irreducible representation of G along a catalog space's
    /// embedding.
    Branch {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        space: String,
        /// Comma-separated parameters for family entries, e.g. n=1,k=3
        #[arg(long)]
        params: Option<String>,
        /// Bourbaki coefficients a1,...,an of the highest weight
        #[arg(long)]
        weight: String,
    },
    /// Smallest positive Laplace eigenvalue of a catalog space.
    Lambda1 {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        space: String,
        #[arg(long)]
        params: Option<String>,
        /// Search cap as a rational (default 2)
        #[arg(long)]
        cap: Option<String>,
    },
    /// Conformal ν-classification of one space or of every entry.
    Classify {
        #[arg(long)]
        catalog: PathBuf,
        /// Entry id (family or isolated)
        #[arg(long, alias = "family")]
        space: Option<String>,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Full catalog report with per-row diffs against expected values.
    Report {
        #[arg(long)]
        catalog: PathBuf,
        /// Expectation file (records format) to diff against
        #[arg(long)]
        expect: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn parse_params(s: &Option<String>) -> Result<Params, Error> {
    let mut params = Params::new();
    if let Some(s) = s {
        for item in s.split(',') {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("bad parameter '{item}'")))?;
            let v: i64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad parameter value '{item}'")))?;
            params.insert(k.trim().to_string(), v);
        }
    }
    Ok(params)
}

fn parse_rat_arg(s: &str) -> Result<Rat, Error> {
    parse_rat(s).ok_or_else(|| Error::Input(format!("bad rational '{s}'")))
}

fn find_entry<'a>(catalog: &'a Catalog, id: &str) -> Result<&'a CatalogEntry, Error> {
    catalog
        .find(id)
        .ok_or_else(|| Error::Input(format!("no catalog entry with id '{id}'")))
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Table2 { rank_cap } => {
            let rows = regenerate_small_table(rank_cap);
            print!("{}", render_small_table(&rows));
            Ok(false)
        }
        Command::Enumerate {
            lie_type,
            rank,
            form,
            bound,
            strict,
        } => {
            let t = match rank {
                Some(r) => SimpleLieType::parse(&format!("{lie_type}{r}"))
                    .or_else(|_| SimpleLieType::parse(&lie_type))?,
                None => SimpleLieType::parse(&lie_type)?,
            };
            let form = GroupForm::parse(&form)?;
            let bound = parse_rat_arg(&bound)?;
            let rs = build_root_system(t);
            let lat = lattice_of(&rs, form)?;
            for rec in enumerate_dominant_below(&rs, &lat, &bound, strict) {
                let coeffs: Vec<String> = rec.coeffs.iter().map(|c| c.to_string()).collect();
                let dim = rs.weyl_dim(&rec.highest_weight)?;
                println!(
                    "a=({}) lambda={} dim={}",
                    coeffs.join(","),
                    rec.eigenvalue,
                    dim
                );
            }
            Ok(false)
        }
        Command::Branch {
            catalog,
            space,
            params,
            weight,
        } => {
            let cat = load_catalog(&catalog)?;
            let entry = find_entry(&cat, &space)?;
            let params = parse_params(&params)?;
            let spec = entry.instantiate(&params)?;
            let coeffs: Result<Vec<i64>, _> = weight
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect();
            let coeffs =
                coeffs.map_err(|_| Error::Input(format!("bad weight coefficients '{weight}'")))?;
            let rs = spec.root_system();
            let lambda = rs.weight_from_coeffs(&coeffs)?;
            let ws = weight_system(rs, &lambda)?;
            let restricted = restrict(&ws, &spec.f)?;
            let dec = decompose(&spec.h, &restricted)?;
            println!(
                "pi[{weight}] of {} (dim {}) restricted to {}:",
                spec.g_type, ws.total_dim, spec.h
            );
            for (irr, mult) in &dec.entries {
                let parts: Vec<String> = irr
                    .per_ideal
                    .iter()
                    .enumerate()
                    .map(|(i, z)| {
                        let cs: Vec<String> = spec
                            .h
                            .root_system(i)
                            .coeffs_of(z)
                            .iter()
                            .map(|c| c.to_string())
                            .collect();
                        format!("({})", cs.join(","))
                    })
                    .collect();
                let charges: Vec<String> = irr.charges.iter().map(|c| c.to_string()).collect();
                let charge_str = if charges.is_empty() {
                    String::new()
                } else {
                    format!(" @ {}", charges.join(","))
                };
                let body = if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join(" * ")
                };
                println!("  {mult} x {body}{charge_str}");
            }
            println!("trivial multiplicity: {}", dec.trivial_multiplicity());
            Ok(false)
        }
        Command::Lambda1 {
            catalog,
            space,
            params,
            cap,
        } => {
            let cat = load_catalog(&catalog)?;
            let entry = find_entry(&cat, &space)?;
            let params = parse_params(&params)?;
            let spec = entry.instantiate(&params)?;
            let cap = match cap {
                Some(c) => parse_rat_arg(&c)?,
                None => rint(2),
            };
            match lambda1(&spec, &cap)? {
                Lambda1::Value {
                    eigenvalue,
                    witness,
                    witness_coeffs,
                } => {
                    let coeffs: Vec<String> =
                        witness_coeffs.iter().map(|c| c.to_string()).collect();
                    println!(
                        "lambda1({}) = {}  witness a=({}) eps={}  2E = {}",
                        spec.label,
                        eigenvalue,
                        coeffs.join(","),
                        witness,
                        spec.two_e
                    );
                }
                Lambda1::GreaterThan(cap) => {
                    println!("lambda1({}) > {}  2E = {}", spec.label, cap, spec.two_e);
                }
            }
            Ok(false)
        }
        Command::Classify {
            catalog,
            space,
            params,
            all,
        } => {
            let cat = load_catalog(&catalog)?;
            let options = ReportOptions::default();
            if all {
                let rows = run_report(&cat, &options)?;
                print!("{}", render_text(&rows));
                return Ok(has_mismatch(&rows));
            }
            let id = space.ok_or_else(|| Error::Input("need --space or --all".into()))?;
            let entry = find_entry(&cat, &id)?;
            let params = parse_params(&params)?;
            let spec = entry.instantiate(&params)?;
            let cert = fast_lower_bound(&spec)?;
            let l1 = match &cert {
                Some(c) if spec.two_e < rint(1) => {
                    println!("certificate: {c}");
                    Lambda1::GreaterThan(rint(1))
                }
                _ => lambda1(&spec, &rint(2))?,
            };
            let class = classify_conformal(&spec, &l1);
            println!(
                "{}: lambda1 {} vs 2E = {} -> {}",
                spec.label, l1, spec.two_e, class
            );
            Ok(false)
        }
        Command::Report {
            catalog,
            expect,
            format,
        } => {
            let cat = load_catalog(&catalog)?;
            let format = match format.as_str() {
                "text" => ReportFormat::Text,
                "records" => ReportFormat::Records,
                other => return Err(Error::Input(format!("unknown format '{other}'"))),
            };
            let rows = run_report(&cat, &ReportOptions::default())?;
            let records = render_records(&rows);
            match format {
                ReportFormat::Text => print!("{}", render_text(&rows)),
                ReportFormat::Records => print!("{records}"),
            }
            let mut mismatch = has_mismatch(&rows);
            if let Some(expect) = expect {
                let expected = std::fs::read_to_string(&expect)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", expect.display())))?;
                let diffs = diff_against_expectation(&records, &expected);
                if !diffs.is_empty() {
                    eprintln!("expectation diffs:");
                    for d in &diffs {
                        eprintln!("  {d}");
                    }
                    mismatch = true;
                }
            }
            Ok(mismatch)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
