//! Thin command-line front end; all work happens in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use k3code::census::{order_edges, run_census};
use k3code::error::Error;
use k3code::report::{self, AnalyzeReport, CensusExport};
use k3code::{gf2, hexagon, lattice};

#[derive(Parser)]
#[command(name = "k3code", about = "Splitting curves and codes of purely inseparable sextic double planes", version)]
struct Cli {
    /// Size of the worker pool for the subset scans.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct PolyInput {
    /// Polynomial text, e.g. "X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4".
    #[arg(long)]
    poly: Option<String>,
    /// File containing the polynomial text.
    #[arg(long)]
    poly_file: Option<PathBuf>,
    /// Modulus of the coefficient field, e.g. "t^2+t+1" (default F₂).
    #[arg(long)]
    field_poly: Option<String>,
}

impl PolyInput {
    fn text(&self) -> Result<String, Error> {
        match (&self.poly, &self.poly_file) {
            (Some(t), None) => Ok(t.clone()),
            (None, Some(p)) => Ok(std::fs::read_to_string(p)?),
            _ => Err(Error::Parse(
                "provide exactly one of --poly / --poly-file".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the locus, the splitting curves, the code and the Artin
    /// invariant of a degree-6 form.
    Analyze {
        #[command(flatten)]
        input: PolyInput,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Census JSON (from `census --out`) to identify the class.
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Enumerate the Sₙ-equivalence classes of admissible codes.
    Census {
        #[arg(long, default_value_t = 21)]
        n: usize,
        /// Comma-separated admissible weights.
        #[arg(long, value_delimiter = ',', default_values_t = [0u32, 5, 8, 9, 12, 13, 16, 21])]
        weights: Vec<u32>,
        #[arg(long, default_value_t = 10)]
        max_dim: usize,
        /// Output JSON path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identify the class of an analyze report inside a census file.
    Match {
        /// JSON report from `analyze --json`.
        #[arg(long)]
        report: PathBuf,
        /// JSON census from `census --out`.
        #[arg(long)]
        census: PathBuf,
    },
    /// Print the Néron–Severi Gram matrix and discriminant data.
    Lattice {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Analyze the sextic of a hexagon inscribed in the conic X0² = X1·X2.
    Hexagon {
        /// Degree of the parameter field.
        #[arg(long, default_value_t = 5)]
        field_degree: u32,
        /// Six comma-separated parameters ("a^3+a", …); deterministic
        /// generator powers when omitted.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<String>>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::NotInU(_) => 2,
                Error::InternalInconsistency(_) | Error::WeightViolation(_) => 4,
                _ => 3,
            })
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Error> {
    match cmd {
        Cmd::Analyze {
            input,
            json,
            census,
        } => {
            let g = report::parse_input_poly(&input.text()?, input.field_poly.as_deref())?;
            let mut outcome = report::analyze(&g)?;
            if let Some(path) = census {
                let census: CensusExport = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                let hit = census
                    .all_classes()
                    .filter(|c| c.invariants == outcome.report.invariants)
                    .collect::<Vec<_>>();
                outcome.report.matched_class = match hit.as_slice() {
                    [] => return Err(Error::NoMatch),
                    [c] => Some(c.id.clone()),
                    _ => return Err(Error::AmbiguousMatch),
                };
            }
            report::print_report(&outcome.report);
            if let Some(path) = json {
                std::fs::write(path, serde_json::to_string_pretty(&outcome.report)?)?;
            }
            Ok(())
        }
        Cmd::Census {
            n,
            weights,
            max_dim,
            out,
        } => {
            let census = run_census(n, &weights, max_dim)?;
            let edges = order_edges(&census);
            let export = report::export_census(&census, &edges);
            println!("classes by dimension: {:?}", export.counts_by_dim);
            if n == 21 {
                let by_sigma: Vec<(u32, usize)> = export
                    .counts_by_dim
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| (11 - (k as u32 + 1), c))
                    .collect();
                println!("classes by Artin invariant: {by_sigma:?}");
            }
            println!("total: {}", export.all_classes().count());
            if let Some(path) = out {
                std::fs::write(path, serde_json::to_string_pretty(&export)?)?;
            }
            Ok(())
        }
        Cmd::Match { report, census } => {
            let rep: AnalyzeReport = serde_json::from_str(&std::fs::read_to_string(report)?)?;
            let census: CensusExport = serde_json::from_str(&std::fs::read_to_string(census)?)?;
            let hits: Vec<_> = census
                .all_classes()
                .filter(|c| c.invariants == rep.invariants)
                .collect();
            match hits.as_slice() {
                [] => Err(Error::NoMatch),
                [c] => {
                    println!("{}", c.id);
                    Ok(())
                }
                _ => Err(Error::AmbiguousMatch),
            }
        }
        Cmd::Lattice { input, json } => {
            let g = report::parse_input_poly(&input.text()?, input.field_poly.as_deref())?;
            let outcome = report::analyze(&g)?;
            let export = lattice::export(&outcome.lattice);
            println!(
                "rank {}, det {}, sigma {}, even {}, type I {}",
                export.rank, export.determinant, export.sigma, export.even, export.type_i
            );
            for row in &export.gram {
                println!("{row:?}");
            }
            if let Some(path) = json {
                std::fs::write(path, serde_json::to_string_pretty(&export)?)?;
            }
            Ok(())
        }
        Cmd::Hexagon {
            field_degree,
            params,
            json,
        } => {
            let k = gf2::canonical_field(field_degree)?;
            let params = match params {
                Some(texts) => {
                    if texts.len() != 6 {
                        return Err(Error::Parse("six parameters required".into()));
                    }
                    let mut out = [gf2::FFElem::ZERO; 6];
                    for (slot, t) in out.iter_mut().zip(&texts) {
                        *slot = k.parse_elem(t)?;
                    }
                    out
                }
                None => {
                    // First non-degenerate tuple of consecutive powers.
                    (0..)
                        .map(|off| hexagon::deterministic_params(&k, off))
                        .find(|p| hexagon::hexagon(&k, *p).is_ok())
                        .expect("some tuple of consecutive powers is non-degenerate")
                }
            };
            let hx = hexagon::analyze_hexagon(&k, params)?;
            println!(
                "hexagon over F_2^{}: sextic {}",
                field_degree, hx.hexagon.poly
            );
            println!(
                "splitting: {} lines (6 sides + Pascal line among them), {} conics, {} pencils",
                hx.analysis.split.lines.len(),
                hx.analysis.split.conics.len(),
                hx.analysis.split.pencils.len()
            );
            println!("sigma: {}", hx.analysis.code.sigma());
            if let Some(path) = json {
                let g = hx.hexagon.poly.clone();
                let outcome = report::analyze(&g)?;
                std::fs::write(path, serde_json::to_string_pretty(&outcome.report)?)?;
            }
            Ok(())
        }
    }
}
