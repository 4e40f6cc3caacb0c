//! Command-line front end. Every subcommand prints one report:
//! `{status, payload, warnings, error?}` with sorted keys.

use std::cmp::Ordering;
use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bridge::{self, BridgeTrisection};
use crate::decomp::{self, DecompositionProfile};
use crate::error::Error;
use crate::kirby::{self, IntegerMatrix, KirbyDiagram};
use crate::trisect::{self, TrisectionDiagram};
use crate::widthset::WidthMultiset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "thinpos", version, about = "Width, Kirby, trisection and bridge-trisection bookkeeping")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Width multisets and decomposition profiles
    #[command(subcommand)]
    Width(WidthCmd),
    /// Algebraic Kirby diagrams
    #[command(subcommand)]
    Kirby(KirbyCmd),
    /// Homology-level trisection diagrams
    #[command(subcommand)]
    Tri(TriCmd),
    /// Bridge-trisection quotient data
    #[command(subcommand)]
    Bridge(BridgeCmd),
}

#[derive(Debug, Subcommand)]
enum WidthCmd {
    /// Compare two width multisets
    Compare { a: String, b: String },
    /// Level complexities and width of a profile
    Compute { profile: String },
    /// Turn a profile upside down
    Reverse { profile: String },
    /// Glue a profile to another one turned upside down
    Concat { m: String, n: String },
}

#[derive(Debug, Subcommand)]
enum KirbyCmd {
    /// Generate a diagram
    #[command(subcommand)]
    Gen(KirbyGen),
    /// Double a diagram
    Double { input: String },
    /// Homology, intersection form and Euler characteristic
    Invariants { input: String },
}

#[derive(Debug, Subcommand)]
enum KirbyGen {
    /// Linear plumbing of unknots
    Plumbing {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        framings: Vec<i64>,
    },
    /// Disk bundle over a closed surface
    Bundle {
        #[arg(long)]
        g: u32,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        nonorientable: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TriFamily {
    S4,
    S1xs3,
    Cp2,
    Cp2bar,
    BundleDouble,
}

#[derive(Debug, Subcommand)]
enum TriCmd {
    /// Generate a diagram
    Gen {
        #[arg(value_enum)]
        family: TriFamily,
        #[arg(long, default_value_t = 1)]
        g: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        nonorientable: bool,
    },
    /// Validate a diagram and compute (g; k1, k2, k3) and χ
    Verify { input: String },
    /// Check necessary conditions for a periodic symmetry
    Symmetry {
        input: String,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        p: u32,
    },
}

#[derive(Debug, Subcommand)]
enum BridgeCmd {
    /// Extract the banded link
    Band { input: String },
    /// Branch surface and branched cover Euler characteristics
    Euler {
        input: String,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        chi_base: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Invalid,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Invalid => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub status: Status,
    pub payload: Value,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    fn ok(payload: Value) -> Self {
        Self { status: Status::Ok, payload, warnings: Vec::new(), error: None }
    }

    fn failure(status: Status, message: impl Into<String>) -> Self {
        Self { status, payload: Value::Null, warnings: Vec::new(), error: Some(message.into()) }
    }

    fn warn(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = serde_json::to_value(self).expect("report serializes");
                serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
            }
            Format::Text => {
                let mut out = format!("status: {}\n", json!(self.status).as_str().unwrap_or(""));
                if let Value::Object(map) = &self.payload {
                    for (k, v) in map {
                        out.push_str(&format!("{k}: {v}\n"));
                    }
                } else if !self.payload.is_null() {
                    out.push_str(&format!("payload: {}\n", self.payload));
                }
                for w in &self.warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
                if let Some(e) = &self.error {
                    out.push_str(&format!("error: {e}\n"));
                }
                out
            }
        }
    }
}

/// Failures before a domain computation runs (bad JSON, missing file)
/// versus failures the computation itself reports.
enum Failure {
    Malformed(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<Report, Failure>;

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn raw(&mut self, arg: &str) -> std::result::Result<String, Failure> {
        let trimmed = arg.trim_start();
        if arg == "-" {
            if self.stdin_used {
                return Err(Failure::Malformed("standard input can be read only once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Malformed(format!("reading standard input: {e}")))?;
            Ok(s)
        } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
            Ok(arg.to_string())
        } else {
            fs::read_to_string(arg).map_err(|e| Failure::Malformed(format!("{arg}: {e}")))
        }
    }

    /// Parses JSON, unwrapping the payload of a report piped in from an
    /// earlier invocation.
    fn load<T: DeserializeOwned>(&mut self, arg: &str) -> std::result::Result<T, Failure> {
        let text = self.raw(arg)?;
        let mut value: Value =
            serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{arg}: {e}")))?;
        if let Value::Object(map) = &mut value {
            if map.contains_key("status") && map.contains_key("payload") {
                value = map.remove("payload").unwrap_or(Value::Null);
            }
        }
        serde_json::from_value(value).map_err(|e| Failure::Malformed(format!("{arg}: {e}")))
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("domain types serialize")
}

fn lint_even(w: &WidthMultiset, report: Report) -> Report {
    w.even_entries()
        .into_iter()
        .fold(report, |r, e| r.warn(format!("width entry {e} is even; level complexities are odd or zero")))
}

fn width_payload(p: &DecompositionProfile) -> Report {
    let w = p.width();
    let report = Report::ok(json!({
        "profile": to_value(p),
        "level_complexities": p.level_complexities(),
        "width": to_value(&w),
    }));
    lint_even(&w, report)
}

fn width(cmd: WidthCmd, inputs: &mut Inputs) -> Outcome {
    match cmd {
        WidthCmd::Compare { a, b } => {
            let x: WidthMultiset = inputs.load(&a)?;
            let y: WidthMultiset = inputs.load(&b)?;
            let result = match x.compare(&y) {
                Ordering::Less => "less",
                Ordering::Equal => "equal",
                Ordering::Greater => "greater",
            };
            Ok(Report::ok(json!({ "a": to_value(&x), "b": to_value(&y), "result": result })))
        }
        WidthCmd::Compute { profile } => Ok(width_payload(&inputs.load(&profile)?)),
        WidthCmd::Reverse { profile } => {
            let p: DecompositionProfile = inputs.load(&profile)?;
            Ok(width_payload(&decomp::reverse(&p)))
        }
        WidthCmd::Concat { m, n } => {
            let pm: DecompositionProfile = inputs.load(&m)?;
            let pn: DecompositionProfile = inputs.load(&n)?;
            Ok(width_payload(&decomp::concat_with_reversed(&pm, &pn)))
        }
    }
}

fn kirby_invariants(d: &KirbyDiagram) -> Report {
    let mut payload = serde_json::Map::new();
    let mut warnings = Vec::new();
    payload.insert("euler".into(), json!(kirby::euler_characteristic(d)));
    payload.insert("handle_counts".into(), json!([
        d.zero_handles(),
        d.one_handles().len(),
        d.two_handles().len(),
        d.three_handles(),
        d.four_handles()
    ]));
    payload.insert("linking_matrix".into(), to_value(&kirby::linking_matrix(d)));
    match kirby::homology_of_2handlebody(d) {
        Ok(h) => {
            payload.insert("homology".into(), json!({
                "h0": h.h0.to_string(),
                "h1": h.h1.to_string(),
                "h2": h.h2.to_string(),
            }));
        }
        Err(e) => warnings.push(format!("homology skipped: {e}")),
    }
    match kirby::boundary_first_homology(d) {
        Ok(h) => {
            payload.insert("boundary_h1".into(), json!(h.to_string()));
        }
        Err(e) => warnings.push(format!("boundary homology skipped: {e}")),
    }
    match kirby::intersection_form(d) {
        Ok(q) => {
            payload.insert("intersection_form".into(), json!({
                "signature": q.signature,
                "determinant": q.determinant.to_string(),
                "even_basis": q.even,
                "unimodular": q.determinant.magnitude() == &1u32.into(),
            }));
        }
        Err(e) => warnings.push(format!("intersection form skipped: {e}")),
    }
    Report { warnings, ..Report::ok(Value::Object(payload)) }
}

fn kirby(cmd: KirbyCmd, inputs: &mut Inputs) -> Outcome {
    match cmd {
        KirbyCmd::Gen(KirbyGen::Plumbing { framings }) => Ok(Report::ok(to_value(&kirby::linear_plumbing(&framings)))),
        KirbyCmd::Gen(KirbyGen::Bundle { g, n, nonorientable }) => {
            Ok(Report::ok(to_value(&kirby::disk_bundle(!nonorientable, g, n)?)))
        }
        KirbyCmd::Double { input } => {
            let d: KirbyDiagram = inputs.load(&input)?;
            Ok(Report::ok(to_value(&kirby::double(&d)?)))
        }
        KirbyCmd::Invariants { input } => Ok(kirby_invariants(&inputs.load(&input)?)),
    }
}

fn tri(cmd: TriCmd, inputs: &mut Inputs) -> Outcome {
    match cmd {
        TriCmd::Gen { family, g, n, nonorientable } => {
            let d = match family {
                TriFamily::S4 => trisect::s4(),
                TriFamily::S1xs3 => trisect::s1xs3(),
                TriFamily::Cp2 => trisect::cp2(true),
                TriFamily::Cp2bar => trisect::cp2(false),
                TriFamily::BundleDouble => trisect::sphere_bundle_double_diagram(!nonorientable, g, n)?,
            };
            Ok(Report::ok(to_value(&d)))
        }
        TriCmd::Verify { input } => {
            let d: TrisectionDiagram = inputs.load(&input)?;
            let r = trisect::validate_trisection(&d);
            let mut payload = to_value(&r);
            if let Value::Object(map) = &mut payload {
                map.remove("caveat");
                map.insert("k".into(), to_value(&r.k()));
                if r.is_ok() {
                    map.insert("h1".into(), json!(trisect::first_homology(&d).to_string()));
                }
            }
            let status = if r.is_ok() { Status::Ok } else { Status::Invalid };
            Ok(Report { status, payload, warnings: vec![r.caveat.to_string()], error: None })
        }
        TriCmd::Symmetry { input, matrix, p } => {
            let d: TrisectionDiagram = inputs.load(&input)?;
            let rows: Vec<Vec<i64>> = inputs.load(&matrix)?;
            let m = IntegerMatrix::from_i64_rows(&rows).map_err(|e| Failure::Malformed(e.to_string()))?;
            let r = trisect::check_symmetry_action(&d, &m, p)?;
            let status = if r.is_ok() { Status::Ok } else { Status::Invalid };
            Ok(Report {
                status,
                payload: to_value(&r),
                warnings: vec!["necessary conditions only: the action is not checked on curves up to isotopy".into()],
                error: None,
            })
        }
    }
}

fn bridge(cmd: BridgeCmd, inputs: &mut Inputs) -> Outcome {
    match cmd {
        BridgeCmd::Band { input } => {
            let bt: BridgeTrisection = inputs.load(&input)?;
            Ok(Report::ok(to_value(&bridge::banded_link(&bt)?)))
        }
        BridgeCmd::Euler { input, p, chi_base } => {
            let bt: BridgeTrisection = inputs.load(&input)?;
            let chi = bridge::branch_surface_euler(&bt)?;
            let mut payload = json!({
                "branch_surface_euler": chi,
                "boundary_links": to_value(&bridge::boundary_links(&bt)?),
            });
            if let Some(p) = p {
                payload["cover_euler"] = json!(bridge::branched_cover_euler(p, chi_base, chi)?);
                payload["p"] = json!(p);
                payload["chi_base"] = json!(chi_base);
            }
            Ok(Report::ok(payload))
        }
    }
}

/// Runs one command line (including the program name) and returns the
/// exit code and the text for standard output.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let mut inputs = Inputs { stdin, stdin_used: false };
    let outcome = match cli.command {
        Command::Width(c) => width(c, &mut inputs),
        Command::Kirby(c) => kirby(c, &mut inputs),
        Command::Tri(c) => tri(c, &mut inputs),
        Command::Bridge(c) => bridge(c, &mut inputs),
    };
    let report = match outcome {
        Ok(r) => r,
        Err(Failure::Malformed(m)) => Report::failure(Status::Error, m),
        Err(Failure::Domain(e)) => Report::failure(Status::Invalid, e.to_string()),
    };
    (report.status.exit_code(), report.render(cli.format))
}
