//! Command-line front end.
//!
//! `run` is the whole program minus process plumbing: it takes argv and a
//! stdin reader and returns the exit code and both output streams, so tests
//! can drive it without spawning processes.
//!
//! Exit codes: 0 success, 2 usage or unreadable input, 3 domain error. Errors
//! are reported on stderr as one JSON line `{"error": kind, "message": text}`.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::algebra::Matrix2C;
use crate::extremal::{
    counterexample_sweep, evaluate_theorem, lemma3_bound, lemma3_find_m, theorem2_proof_constants, Bound, Constants,
    TheoremOptions, B_LOW, DEFAULT_LEMMA3_CAP,
};
use crate::json::{self, MatrixJson, PairJson, ParamsJson};
use crate::moebius::{beta_of_power, classify, translation_data};
use crate::pair::{axis_geometry, group_from_parameters, pair_parameters};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "loxodrome",
    version,
    about = "Trace parameters and axis geometry of two-generator Moebius groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Inline JSON input.
    #[arg(long = "in", value_name = "JSON")]
    inline: Option<String>,
    /// Read JSON input from a file.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Read JSON input from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Matrix JSON for f (use together with --g instead of a pair document).
    #[arg(long, value_name = "JSON", requires = "g")]
    f: Option<String>,
    /// Matrix JSON for g.
    #[arg(long, value_name = "JSON", requires = "f")]
    g: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify one matrix and report β, μ, t and θ.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// The parameter triple (β(f), β(g), γ(f,g)).
    Params {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Parameters plus distance and angle between the axes.
    PairGeometry {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Evaluate one inequality (T1..T5, A, B, or lemma L1, L2, L4).
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_name = "ID")]
        theorem: Bound,
        /// Constant b for T3 and B.
        #[arg(long, default_value_t = B_LOW)]
        b: f64,
        /// Elliptic order for T5 / L4.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// The extremal constants.
    Constants {
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Counterexample family at fixed μ over a list of λ.
    Sweep {
        #[arg(long)]
        mu: f64,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        lambda: Vec<f64>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Build a normalized generator pair from a parameter triple.
    FromParams {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Least power m with |β(f^m)| ≤ (4π/√3) sinh t(f).
    Lemma3 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_LEMMA3_CAP)]
        cap: u64,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn error_line(kind: &str, message: &str) -> String {
    let mut s = json!({ "error": kind, "message": message }).to_string();
    s.push('\n');
    s
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: error_line("Usage", &msg),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: error_line(e.kind(), &e.to_string()),
        },
    }
}

fn read_source(input: &InputArgs, stdin: &mut dyn Read) -> Result<Option<String>, Failure> {
    let given = input.inline.is_some() as u8 + input.file.is_some() as u8 + input.stdin as u8;
    if given > 1 {
        return Err(Failure::Usage("give exactly one of --in, --file, --stdin".into()));
    }
    if let Some(s) = &input.inline {
        return Ok(Some(s.clone()));
    }
    if let Some(path) = &input.file {
        return fs::read_to_string(path)
            .map(Some)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())));
    }
    if input.stdin {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(Some(s));
    }
    Ok(None)
}

fn parse<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid {what} JSON: {e}")))
}

fn single_matrix(input: &InputArgs, stdin: &mut dyn Read) -> Result<Matrix2C, Failure> {
    let text = read_source(input, stdin)?
        .ok_or_else(|| Failure::Usage("missing input: use --in, --file or --stdin".into()))?;
    Ok(parse::<MatrixJson>(&text, "matrix")?.to_matrix()?)
}

fn matrix_pair(pair: &PairArgs, stdin: &mut dyn Read) -> Result<(Matrix2C, Matrix2C), Failure> {
    let doc = read_source(&pair.input, stdin)?;
    match (doc, &pair.f, &pair.g) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => Err(Failure::Usage(
            "give either --f/--g or one pair document, not both".into(),
        )),
        (Some(text), None, None) => {
            let p: PairJson = parse(&text, "pair")?;
            Ok((p.f.to_matrix()?, p.g.to_matrix()?))
        }
        (None, Some(f), Some(g)) => {
            let f: MatrixJson = parse(f, "matrix")?;
            let g: MatrixJson = parse(g, "matrix")?;
            Ok((f.to_matrix()?, g.to_matrix()?))
        }
        _ => Err(Failure::Usage(
            "missing input: use --f and --g, --in, --file or --stdin".into(),
        )),
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<String, Failure> {
    match command {
        Command::Classify { input, out } => {
            let m = single_matrix(&input, stdin)?;
            let class = classify(&m);
            let td = translation_data(&m).ok();
            Ok(emit(&json::classification(&class, td.as_ref()), out))
        }
        Command::Params { pair, out } => {
            let (f, g) = matrix_pair(&pair, stdin)?;
            Ok(emit(&json::params(&pair_parameters(&f, &g)), out))
        }
        Command::PairGeometry { pair, out } => {
            let (f, g) = matrix_pair(&pair, stdin)?;
            let geom = axis_geometry(&f, &g)?;
            Ok(emit(&json::pair_geometry(&pair_parameters(&f, &g), &geom), out))
        }
        Command::Verify {
            pair,
            theorem,
            b,
            order,
            out,
        } => {
            if !b.is_finite() {
                return Err(Failure::Usage("--b must be finite".into()));
            }
            let (f, g) = matrix_pair(&pair, stdin)?;
            let report = evaluate_theorem(theorem, &f, &g, &TheoremOptions { b, order });
            Ok(emit(&json::report(&report), out))
        }
        Command::Constants { out } => {
            let k = Constants::new();
            let (sixteen_dc, u_star) = theorem2_proof_constants();
            let v = json!({
                "c": json::num(k.c),
                "d": json::num(k.d),
                "lambda_A": json::num(k.lambda_a),
                "b_low": json::num(k.b_low),
                "b_high": json::num(k.b_high),
                "four_d": json::num(4.0 * k.d),
                "sixteen_dc": json::num(sixteen_dc),
                "u_star": json::num(u_star),
            });
            Ok(emit(&v, out))
        }
        Command::Sweep { mu, lambda, out } => {
            let points = counterexample_sweep(mu, &lambda)?;
            let rows: Vec<Value> = points.iter().map(json::counterexample).collect();
            Ok(match out.unwrap_or(OutFormat::Csv) {
                OutFormat::Csv => csv_table(&rows),
                OutFormat::Json => json_line(&Value::Array(rows)),
            })
        }
        Command::FromParams { input, out } => {
            let text = read_source(&input, stdin)?
                .ok_or_else(|| Failure::Usage("missing input: use --in, --file or --stdin".into()))?;
            let p = parse::<ParamsJson>(&text, "parameter")?.to_params()?;
            let (f, g) = group_from_parameters(p.beta_f, p.beta_g, p.gamma)?;
            Ok(emit(&json!({ "f": json::matrix(&f), "g": json::matrix(&g) }), out))
        }
        Command::Lemma3 { input, cap, out } => {
            if cap == 0 {
                return Err(Failure::Usage("--cap must be at least 1".into()));
            }
            let f = single_matrix(&input, stdin)?;
            let m = lemma3_find_m(&f, cap)?;
            let t = translation_data(&f)?.t;
            let bp = beta_of_power(&f, m)?;
            let v = json!({
                "m": m,
                "beta_power": json::complex(bp),
                "abs_beta_power": json::num(bp.norm()),
                "bound": json::num(lemma3_bound(t)),
            });
            Ok(emit(&v, out))
        }
    }
}

fn json_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn emit(v: &Value, out: Option<OutFormat>) -> String {
    match out.unwrap_or(OutFormat::Json) {
        OutFormat::Json => json_line(v),
        OutFormat::Csv => csv_table(std::slice::from_ref(v)),
    }
}

/// Flattens nested objects and `[re, im]` pairs into `key_sub` columns.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}_{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.len() == 2 && items.iter().all(|x| x.is_number() || x.is_null()) => {
            flatten(&join("re"), &items[0], out);
            flatten(&join("im"), &items[1], out);
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), csv_field(s))),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_table(rows: &[Value]) -> String {
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            let mut cells = Vec::new();
            flatten("", r, &mut cells);
            cells
        })
        .collect();
    let header: Vec<String> = match flat.first() {
        Some(cells) => cells.iter().map(|(k, _)| k.clone()).collect(),
        None => return String::new(),
    };
    let mut s = header.join(",");
    s.push('\n');
    for cells in &flat {
        let line: Vec<&str> = cells.iter().map(|(_, v)| v.as_str()).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}
