//! Problem files, fixtures and the commands behind the `inireg` binary.

mod fixtures;
mod problem;

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, PolyIdeal};
use crate::monomial_ideal::MonomialIdeal;
use crate::oracle::oracle_depth;
use crate::sequences::{
    depth_lower_bound, polarized_bound, verify_initially_regular, CertificateJson, DepthReport, OrderJson,
    PipelineConfig, PolarizationAdjustment,
};

pub use fixtures::{fixture, fixture_names, FIXTURES};
pub use problem::{parse_order_spec, parse_problem, ProblemFile};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Initial,
    Bound,
    Verify,
    OracleDepth,
    Polarize,
    Report,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Initial => "initial",
            Command::Bound => "bound",
            Command::Verify => "verify",
            Command::OracleDepth => "oracle-depth",
            Command::Polarize => "polarize",
            Command::Report => "report",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "initial" => Command::Initial,
            "bound" => Command::Bound,
            "verify" => Command::Verify,
            "oracle-depth" => Command::OracleDepth,
            "polarize" => Command::Polarize,
            "report" => Command::Report,
            _ => {
                return Err(Error::Usage(format!(
                    "unknown command `{s}` (expected initial, bound, verify, oracle-depth, polarize or report)"
                )))
            }
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Options {
    pub pipeline: PipelineConfig,
    pub polarize: bool,
    pub oracle: bool,
    pub force: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub order: OrderJson,
    pub options: Options,
}

/// Everything a command produced. Fields a command does not touch stay empty.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: Command,
    pub fixture: Option<String>,
    pub config: ConfigEcho,
    pub elapsed_micros: u64,
    pub ring: Vec<String>,
    pub ideal: Vec<String>,
    pub initial_ideal: Option<Vec<String>>,
    pub bound: Option<usize>,
    pub certificate: Option<CertificateJson>,
    pub oracle_depth: Option<usize>,
    pub squarefree_equality: Option<bool>,
    pub polarization: Option<PolarizationAdjustment>,
    pub polarized_ring: Option<Vec<String>>,
    pub polarized_ideal: Option<Vec<String>>,
    pub verified: Option<bool>,
    pub notes: Vec<String>,
}

impl Report {
    /// Process exit status: 3 when a verification did not go through.
    pub fn exit_code(&self) -> i32 {
        if self.verified == Some(false) {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.fixture {
            let _ = writeln!(out, "fixture: {name}");
        }
        let _ = writeln!(out, "ring: {}", self.ring.join(" "));
        let _ = writeln!(
            out,
            "order: {} {}",
            self.config.order.kind,
            self.config.order.priority.join(" > ")
        );
        if let Some(ini) = &self.initial_ideal {
            let _ = writeln!(out, "initial ideal: ({})", ini.join(", "));
        }
        if let (Some(ring), Some(ideal)) = (&self.polarized_ring, &self.polarized_ideal) {
            let _ = writeln!(out, "polarized ring: {}", ring.join(" "));
            let _ = writeln!(out, "polarized ideal: ({})", ideal.join(", "));
        }
        if let Some(cert) = &self.certificate {
            let status = if cert.verified { "verified" } else { "NOT verified" };
            let _ = writeln!(out, "certificate ({status}, q = {}):", cert.q);
            for (i, step) in cert.steps.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {}. {}  [{}; {} {}]",
                    i + 1,
                    step.form,
                    step.provenance.as_str(),
                    step.order.kind,
                    step.order.priority.join(" > ")
                );
            }
            if let Some(fail) = &cert.failure {
                let _ = writeln!(out, "  step {} fails: {}", fail.index + 1, fail.reason);
            }
        }
        if let Some(adj) = &self.polarization {
            let _ = writeln!(
                out,
                "polarized bound: {} ({} new variables, bound on R/I: {})",
                adj.bound_polarized, adj.new_variables, adj.bound_original
            );
        }
        if let Some(b) = self.bound {
            let _ = writeln!(out, "depth lower bound: {b}");
        }
        if let Some(d) = self.oracle_depth {
            let _ = writeln!(out, "oracle depth: {d}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

fn sorted_strings(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.sorted_generator_strings()
}

fn require_monomial(ideal: &PolyIdeal, what: &str) -> Result<MonomialIdeal> {
    ideal
        .as_monomial_ideal()
        .ok_or_else(|| Error::Usage(format!("{what} needs a monomial ideal")))?
}

fn oracle_of(ideal: &MonomialIdeal, options: &Options, notes: &mut Vec<String>) -> Result<usize> {
    let d = oracle_depth(ideal, options.force)?;
    notes.push("oracle homology computed over the rationals (characteristic 0)".to_string());
    Ok(d)
}

/// Runs `command` on `problem`. Verification failures are reported, not
/// raised; a certified bound exceeding the oracle depth is a defect.
pub fn run(command: Command, problem: &ProblemFile, options: &Options, fixture: Option<&str>) -> Result<Report> {
    let start = Instant::now();
    let ring = &problem.ring;
    let order = &problem.order;
    let ideal = PolyIdeal::new(ring, problem.ideal.clone())?;
    let mut report = Report {
        schema: SCHEMA_VERSION,
        command,
        fixture: fixture.map(str::to_string),
        config: ConfigEcho {
            order: OrderJson::new(order, ring),
            options: options.clone(),
        },
        elapsed_micros: 0,
        ring: ring.names().to_vec(),
        ideal: problem
            .ideal
            .iter()
            .map(|g| g.fmt_with(ring, Some(order)))
            .collect(),
        initial_ideal: None,
        bound: None,
        certificate: None,
        oracle_depth: None,
        squarefree_equality: None,
        polarization: None,
        polarized_ring: None,
        polarized_ideal: None,
        verified: None,
        notes: Vec::new(),
    };

    match command {
        Command::Initial => {
            let ini = initial_ideal(&ideal, order)?;
            if ini.generators().iter().any(|g| g.is_one()) {
                return Err(Error::UnitIdeal);
            }
            report.initial_ideal = Some(sorted_strings(&ini));
        }
        Command::Bound | Command::Report => {
            let dr = bound_report(&ideal, problem, options)?;
            apply_depth_report(&mut report, &dr);
            if command == Command::Report || options.oracle {
                let target = oracle_target(&ideal, problem, &mut report.notes)?;
                let d = oracle_of(&target, options, &mut report.notes)?;
                report.oracle_depth = Some(d);
                if dr.lower_bound > d {
                    return Err(Error::Defect(format!(
                        "certified bound {} exceeds oracle depth {d}",
                        dr.lower_bound
                    )));
                }
            }
        }
        Command::Verify => {
            if problem.steps.is_empty() {
                return Err(Error::Usage("`verify` needs a `steps:` section".into()));
            }
            let cert = verify_initially_regular(&ideal, order, &problem.steps)?;
            report.initial_ideal = Some(sorted_strings(&cert.initial_ideal));
            report.verified = Some(cert.verified);
            if cert.verified {
                report.bound = Some(cert.len());
            }
            report.certificate = Some(cert.to_json());
            if options.oracle {
                let ini = initial_ideal(&ideal, order)?;
                report.oracle_depth = Some(oracle_of(&ini, options, &mut report.notes)?);
            }
        }
        Command::OracleDepth => {
            let target = oracle_target(&ideal, problem, &mut report.notes)?;
            report.initial_ideal = Some(sorted_strings(&target));
            report.oracle_depth = Some(oracle_of(&target, options, &mut report.notes)?);
        }
        Command::Polarize => {
            let ini = initial_ideal(&ideal, order)?;
            if !ideal.is_monomial() {
                report.notes.push("input is not monomial: polarizing ini(I)".to_string());
            }
            let (pol, map) = ini.polarize()?;
            report.initial_ideal = Some(sorted_strings(&ini));
            report.polarized_ring = Some(pol.ring().names().to_vec());
            report.polarized_ideal = Some(sorted_strings(&pol));
            report.notes.push(format!("{} new variables", map.new_variables));
        }
    }
    report.elapsed_micros = u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX);
    Ok(report)
}

fn bound_report(ideal: &PolyIdeal, problem: &ProblemFile, options: &Options) -> Result<DepthReport> {
    if options.polarize {
        let mono = require_monomial(ideal, "--polarize")?;
        polarized_bound(&mono, &problem.order, &options.pipeline)
    } else {
        depth_lower_bound(ideal, &problem.order, &options.pipeline)
    }
}

/// The monomial ideal whose depth the oracle computes: `I` itself when
/// monomial, `ini(I)` otherwise (whose depth is a lower bound for `R/I`).
fn oracle_target(ideal: &PolyIdeal, problem: &ProblemFile, notes: &mut Vec<String>) -> Result<MonomialIdeal> {
    match ideal.as_monomial_ideal() {
        Some(m) => m,
        None => {
            notes.push("input is not monomial: oracle depth is that of R/ini(I)".to_string());
            initial_ideal(ideal, &problem.order)
        }
    }
}

fn apply_depth_report(report: &mut Report, dr: &DepthReport) {
    report.initial_ideal = Some(sorted_strings(&dr.certificate.initial_ideal));
    report.bound = Some(dr.lower_bound);
    report.certificate = Some(dr.certificate.to_json());
    report.squarefree_equality = Some(dr.squarefree_equality);
    report.polarization = dr.polarization.clone();
    if dr.polarization.is_some() {
        report.polarized_ring = Some(dr.certificate.ring().names().to_vec());
    }
    report.notes.extend(dr.notes.iter().cloned());
}

/// Maps an error to the process exit status.
pub fn error_exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => 2,
        Error::SizeGuard { .. } => 4,
        _ => 1,
    }
}
