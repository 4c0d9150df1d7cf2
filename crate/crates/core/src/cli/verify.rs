use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value as Json};

use super::{json_strings, Outcome, EXIT_FAIL, EXIT_OK};
use crate::lacunary::Value;
use crate::verify::{verify_all, verify_identity, Mode, RangeSpec, Report};

/// Identities whose failure is expected and reported without gating `--all`.
const INFORMATIONAL: &[&str] = &["thm32_printed"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Points,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["identity", "all"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub identity: Option<String>,
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 0)]
    pub n_from: usize,
    /// Defaults to each identity's own upper end.
    #[arg(long)]
    pub n_to: Option<usize>,
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    pub mode: ModeArg,
    #[arg(long)]
    pub json: bool,
}

fn value_json(v: &Value) -> Json {
    match v {
        Value::Poly(p) => json_strings(p.coeffs()),
        other => Json::String(other.to_string()),
    }
}

fn report_json(r: &Report, informational: bool) -> Json {
    let mut params = Map::new();
    params.insert("mode".into(), json!(r.mode.name()));
    params.insert("n_from".into(), json!(r.n_from));
    params.insert("n_to".into(), json!(r.n_to));
    if let Some(m) = r.m_max {
        params.insert("m_max".into(), json!(m));
    }
    let counterexample = r.first_counterexample.as_ref().map(|c| {
        let p: Map<String, Json> = c.params.fields().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "params": p,
            "residual": value_json(&c.residual),
            "point": c.point.as_ref().map(|x| x.to_string()),
        })
    });
    let mut out = json!({
        "identity": r.identity,
        "params": params,
        "pass": r.ok(),
        "counterexample": counterexample,
        "elapsed_us": r.elapsed.as_micros() as u64,
        "tried": r.tried,
        "passed": r.passed,
        "failed": r.failed,
        "touched": r.touches.distinct_read,
    });
    if informational {
        out["informational"] = json!(true);
    }
    out
}

fn report_line(r: &Report, informational: bool) -> String {
    let status = match (r.ok(), informational) {
        (_, _) if r.tried == 0 => "SKIP",
        (true, _) => "PASS",
        (false, true) => "INFO",
        (false, false) => "FAIL",
    };
    let m = r.m_max.map(|m| format!(" m<={m}")).unwrap_or_default();
    let mut line = format!(
        "{status} {} n={}..{}{m} {} tried={} passed={} failed={} {}us",
        r.identity,
        r.n_from,
        r.n_to,
        r.mode.name(),
        r.tried,
        r.passed,
        r.failed,
        r.elapsed.as_micros()
    );
    if let Some(c) = &r.first_counterexample {
        line += &format!("\n  counterexample: {} residual={}", c.params, c.residual);
        if let Some(x) = &c.point {
            line += &format!(" (at x={x})");
        }
    }
    line + "\n"
}

pub fn run_verify(a: &VerifyArgs) -> Outcome {
    let mode = match a.mode {
        ModeArg::Symbolic => Mode::Symbolic,
        ModeArg::Points => Mode::Points,
    };
    let range = RangeSpec { n_from: a.n_from, n_to: a.n_to, m_max: a.m_max, n_list: None };
    let reports = match &a.identity {
        Some(name) => verify_identity(name, &range, mode).map(|r| vec![r]),
        None => verify_all(&range, mode),
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let informational = |r: &Report| a.all && INFORMATIONAL.contains(&r.identity.as_str());
    let gated_ok = reports.iter().filter(|r| !informational(r)).all(Report::ok);
    let stdout = if a.json {
        let items: Vec<Json> = reports.iter().map(|r| report_json(r, informational(r))).collect();
        let doc = if a.all { Json::Array(items) } else { items.into_iter().next().unwrap_or(Json::Null) };
        format!("{doc}\n")
    } else {
        reports.iter().map(|r| report_line(r, informational(r))).collect()
    };
    Outcome { code: if gated_ok { EXIT_OK } else { EXIT_FAIL }, stdout, stderr: String::new() }
}
