//! Command-line surface over the lefschetz-lab library.
//!
//! Every command emits one JSON report on stdout with a fixed shape:
//! `{"command", "inputs", "results", "status"}`. Keys are sorted, floats are
//! rounded to 12 significant digits, so identical inputs produce
//! byte-identical output. Exit codes: 0 ok, 1 a verification verdict failed,
//! 2 input error, 3 numerical failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use lefschetz_lab::complex::SimplicialComplex;
use lefschetz_lab::curvature::{
    catalog, check_configuration, enumerate_configurations, grove_searle_classify, hopf_gap_report,
    EnumerationOptions, DEFAULT_MAX_COMPONENTS,
};
use lefschetz_lab::error::Error;
use lefschetz_lab::hodge::{betti, heat_supertrace, spectrum, supersymmetry_check};
use lefschetz_lab::io::{
    read_json, write_json, AutomorphismJson, ComplexJson, ConfigurationJson, GraphJson,
    LefschetzReportJson, PointCloudJson,
};
use lefschetz_lab::lefschetz::{
    automorphism_group, verify_lefschetz, Automorphism, DEFAULT_TOL, DEFAULT_T_GRID,
    DEFAULT_VERTEX_CAP,
};
use lefschetz_lab::sample::icosphere;

/// Environment variable overriding the enumeration work budget.
const BUDGET_ENV: &str = "LEFSCHETZ_LAB_BUDGET";

#[derive(Parser)]
#[command(
    name = "lefschetz-lab",
    about = "Discrete Hodge theory, Lefschetz fixed-point checks, and \
             positive-curvature fixed-point-set enumeration",
    version
)]
struct Cli {
    /// Pretty-print the JSON report
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic of a complex
    Euler { complex_file: PathBuf },
    /// Betti numbers by exact rational ranks
    Betti { complex_file: PathBuf },
    /// Eigenvalues of one Hodge Laplacian block
    Spectrum {
        complex_file: PathBuf,
        /// Form degree k
        #[arg(long, short = 'k')]
        degree: usize,
    },
    /// Lefschetz number, fixed-point indices, and heat interpolation for one
    /// automorphism or the whole automorphism group
    Lefschetz {
        complex_file: PathBuf,
        /// JSON file with {"perm": [...]}
        #[arg(long, conflicts_with = "all_automorphisms")]
        automorphism: Option<PathBuf>,
        /// Verify every automorphism found by exhaustive search
        #[arg(long)]
        all_automorphisms: bool,
        #[command(flatten)]
        grid: GridArgs,
        /// Vertex cap for the exhaustive search
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
    },
    /// Heat super trace str(exp(-tH)) across a t-grid against the Euler
    /// characteristic
    MckeanSinger {
        complex_file: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Match positive even-degree spectrum against odd-degree spectrum
    Supersymmetry {
        complex_file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Enumerate admissible fixed-point-set configurations
    Enumerate {
        /// Ambient manifold dimension (even)
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_COMPONENTS)]
        max_components: usize,
    },
    /// Grove-Searle classification of a configuration file
    Classify { config_file: PathBuf },
    /// Component dimensions whose Euler positivity no rule forces
    Gap {
        #[arg(long)]
        dim: usize,
    },
    /// Sample a subdivided icosahedral sphere and run the graph-to-complex
    /// pipeline on it
    SampleSphere {
        #[arg(long, default_value_t = 0)]
        subdivisions: usize,
        /// Neighborhood graph distance threshold
        #[arg(long)]
        h: f64,
        /// Where to write the point cloud JSON
        #[arg(long)]
        out: PathBuf,
        /// Optional path for the induced graph JSON
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Optional path for the Whitney complex JSON (as facets)
        #[arg(long)]
        complex_out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GridArgs {
    /// Comma-separated heat times
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_T_GRID)]
    t_grid: Vec<f64>,
    /// Agreement tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Violation,
    NumericalFailure,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::NumericalFailure => "numerical_failure",
        }
    }

    fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::NumericalFailure => 3,
        }
    }
}

struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    status: Status,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli.command) {
        Ok(report) => {
            emit(&report, cli.pretty);
            ExitCode::from(report.status.exit_code())
        }
        Err(err) => {
            let code = exit_code_for(&err);
            if code == 3 {
                let report = Report {
                    command: name,
                    inputs: Value::Object(Map::new()),
                    results: json!({ "failed_operation": err.to_string() }),
                    status: Status::NumericalFailure,
                };
                emit(&report, cli.pretty);
            } else {
                eprintln!("{}", json!({ "command": name, "error": err.to_string() }));
            }
            ExitCode::from(code)
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Euler { .. } => "euler",
        Command::Betti { .. } => "betti",
        Command::Spectrum { .. } => "spectrum",
        Command::Lefschetz { .. } => "lefschetz",
        Command::MckeanSinger { .. } => "mckean-singer",
        Command::Supersymmetry { .. } => "supersymmetry",
        Command::Enumerate { .. } => "enumerate",
        Command::Classify { .. } => "classify",
        Command::Gap { .. } => "gap",
        Command::SampleSphere { .. } => "sample-sphere",
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::EigensolverFailure(_) | Error::NonIntegerTrace(..) => 3,
        _ => 2,
    }
}

fn emit(report: &Report, pretty: bool) {
    let mut value = json!({
        "command": report.command,
        "inputs": report.inputs,
        "results": report.results,
        "status": report.status.as_str(),
    });
    round_floats(&mut value);
    let text = if pretty {
        serde_json::to_string_pretty(&value).expect("report serializes")
    } else {
        serde_json::to_string(&value).expect("report serializes")
    };
    println!("{text}");
}

/// Rounds every float in the tree to 12 significant digits so reports are
/// byte-stable without masking 1e-8 scale deviations.
fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if n.is_f64() {
                let f = n.as_f64().unwrap();
                let rounded = round_sig(f);
                if let Some(num) = serde_json::Number::from_f64(rounded) {
                    *n = num;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Error> {
    read_json::<ComplexJson>(path)?.to_complex()
}

fn run(cmd: &Command) -> Result<Report, Error> {
    match cmd {
        Command::Euler { complex_file } => {
            let k = load_complex(complex_file)?;
            Ok(Report {
                command: "euler",
                inputs: json!({ "complex_file": complex_file }),
                results: json!({
                    "euler": k.euler_characteristic(),
                    "f_vector": k.f_vector(),
                }),
                status: Status::Ok,
            })
        }
        Command::Betti { complex_file } => {
            let k = load_complex(complex_file)?;
            let b = betti(&k);
            Ok(Report {
                command: "betti",
                inputs: json!({ "complex_file": complex_file }),
                results: json!({
                    "betti": b.b,
                    "euler": b.euler_characteristic(),
                }),
                status: Status::Ok,
            })
        }
        Command::Spectrum {
            complex_file,
            degree,
        } => {
            let k = load_complex(complex_file)?;
            let s = spectrum(&k, *degree)?;
            Ok(Report {
                command: "spectrum",
                inputs: json!({ "complex_file": complex_file, "degree": degree }),
                results: json!({
                    "degree": s.degree,
                    "eigenvalues": s.eigenvalues,
                    "kernel_dim": s.kernel_dim,
                }),
                status: Status::Ok,
            })
        }
        Command::Lefschetz {
            complex_file,
            automorphism,
            all_automorphisms,
            grid,
            vertex_cap,
        } => {
            let k = load_complex(complex_file)?;
            let maps: Vec<Automorphism> = if *all_automorphisms {
                automorphism_group(&k, *vertex_cap)?
            } else if let Some(path) = automorphism {
                vec![read_json::<AutomorphismJson>(path)?.to_automorphism(&k)?]
            } else {
                vec![Automorphism::identity(&k)]
            };
            let mut reports = Vec::with_capacity(maps.len());
            let mut all_true = true;
            for t in &maps {
                let report = verify_lefschetz(&k, t, &grid.t_grid, grid.tol)?;
                all_true &= report.verdict;
                reports.push(json!({
                    "perm": t.vertex_map(),
                    "report": LefschetzReportJson::from_report(&report),
                }));
            }
            Ok(Report {
                command: "lefschetz",
                inputs: json!({
                    "complex_file": complex_file,
                    "automorphism_file": automorphism,
                    "all_automorphisms": all_automorphisms,
                    "t_grid": grid.t_grid,
                    "tol": grid.tol,
                }),
                results: json!({
                    "count": reports.len(),
                    "reports": reports,
                    "all_verdicts_true": all_true,
                }),
                status: if all_true {
                    Status::Ok
                } else {
                    Status::Violation
                },
            })
        }
        Command::MckeanSinger { complex_file, grid } => {
            let k = load_complex(complex_file)?;
            let chi = k.euler_characteristic() as f64;
            let mut values = Vec::new();
            let mut max_deviation = 0.0f64;
            for &t in &grid.t_grid {
                let v = heat_supertrace(&k, t)?;
                max_deviation = max_deviation.max((v - chi).abs());
                values.push(json!([t, v]));
            }
            let ok = max_deviation < grid.tol;
            Ok(Report {
                command: "mckean-singer",
                inputs: json!({
                    "complex_file": complex_file,
                    "t_grid": grid.t_grid,
                    "tol": grid.tol,
                }),
                results: json!({
                    "euler": k.euler_characteristic(),
                    "values": values,
                    "max_deviation": max_deviation,
                }),
                status: if ok { Status::Ok } else { Status::Violation },
            })
        }
        Command::Supersymmetry { complex_file, tol } => {
            let k = load_complex(complex_file)?;
            let report = supersymmetry_check(&k, *tol)?;
            let matched = report.matched;
            Ok(Report {
                command: "supersymmetry",
                inputs: json!({ "complex_file": complex_file, "tol": tol }),
                results: serde_json::to_value(&report)?,
                status: if matched {
                    Status::Ok
                } else {
                    Status::Violation
                },
            })
        }
        Command::Enumerate {
            dim,
            max_components,
        } => {
            let options = EnumerationOptions {
                max_components: *max_components,
                budget: budget_from_env()?,
            };
            let cat = catalog(*dim);
            let entries = enumerate_configurations(*dim, &cat, &options)?;
            let admissible = entries.iter().filter(|e| e.admissible).count();
            Ok(Report {
                command: "enumerate",
                inputs: json!({ "dim": dim, "max_components": max_components }),
                results: json!({
                    "ambient_dim": dim,
                    "total": entries.len(),
                    "admissible_count": admissible,
                    "entries": entries,
                }),
                status: Status::Ok,
            })
        }
        Command::Classify { config_file } => {
            let cfg = read_json::<ConfigurationJson>(config_file)?.to_configuration()?;
            let classification = grove_searle_classify(&cfg);
            let constraints = check_configuration(&cfg);
            Ok(Report {
                command: "classify",
                inputs: json!({ "config_file": config_file }),
                results: json!({
                    "outcome": classification.outcome,
                    "reason": classification.reason,
                    "constraints": constraints,
                }),
                status: Status::Ok,
            })
        }
        Command::Gap { dim } => {
            let gap = hopf_gap_report(*dim)?;
            Ok(Report {
                command: "gap",
                inputs: json!({ "dim": dim }),
                results: json!({
                    "ambient_dim": gap.ambient_dim,
                    "empty": gap.is_empty(),
                    "entries": gap.entries,
                }),
                status: Status::Ok,
            })
        }
        Command::SampleSphere {
            subdivisions,
            h,
            out,
            graph_out,
            complex_out,
        } => {
            let mesh = icosphere(*subdivisions);
            let pc = mesh.point_cloud()?;
            let graph = pc.epsilon_graph(*h)?;
            let k = graph.whitney_complex(None);
            write_json(out, &PointCloudJson::from_point_cloud(&pc))?;
            if let Some(path) = graph_out {
                write_json(path, &GraphJson::from_graph(&graph))?;
            }
            if let Some(path) = complex_out {
                write_json(path, &ComplexJson::from_complex(&k))?;
            }
            let (max_edge, min_non_edge) = mesh.distance_window();
            Ok(Report {
                command: "sample-sphere",
                inputs: json!({ "subdivisions": subdivisions, "h": h, "out": out }),
                results: json!({
                    "n_points": pc.len(),
                    "n_edges": graph.edge_count(),
                    "f_vector": k.f_vector(),
                    "euler": k.euler_characteristic(),
                    "mesh_edge_max": max_edge,
                    "non_edge_min": min_non_edge,
                    "files": {
                        "points": out,
                        "graph": graph_out,
                        "complex": complex_out,
                    },
                }),
                status: Status::Ok,
            })
        }
    }
}

fn budget_from_env() -> Result<u64, Error> {
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text.parse().map_err(|_| {
            Error::InvalidInput(format!("{BUDGET_ENV} must be an integer, got {text:?}"))
        }),
        Err(_) => Ok(lefschetz_lab::curvature::DEFAULT_ENUMERATION_BUDGET),
    }
}
