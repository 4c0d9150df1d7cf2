use std::time::Instant;

use clap::{Args, ValueEnum};
use serde_json::json;

use super::{Format, Outcome};
use crate::lacunary::{solve_bernoulli_gap6, solve_euler_gap4, solve_euler_gap6};
use crate::seqcore::{SequenceCache, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchTarget {
    Bernoulli,
    Euler,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub target: BenchTarget,
    /// Largest even `n` timed; every even `n` from 2 up is run.
    #[arg(long)]
    pub n_to: usize,
    /// Comma-separated; defaults to every method of the target.
    #[arg(long, value_delimiter = ',')]
    pub methods: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// One cold-cache computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub method: String,
    pub n: usize,
    pub micros: u128,
    /// Distinct lower indices of the target table read.
    pub touched: usize,
    pub mults: u64,
}

fn methods_for(target: BenchTarget) -> &'static [&'static str] {
    match target {
        BenchTarget::Bernoulli => &["classic", "gap6"],
        BenchTarget::Euler => &["classic", "gap4", "gap6"],
    }
}

fn measure(target: BenchTarget, method: &str, n: usize) -> BenchRecord {
    let mut cache = SequenceCache::new();
    let start = Instant::now();
    let table = match target {
        BenchTarget::Bernoulli => {
            match method {
                "classic" => drop(cache.bernoulli_number(n)),
                _ => drop(solve_bernoulli_gap6(&mut cache, n).expect("even n")),
            }
            Table::BernoulliNumber
        }
        BenchTarget::Euler => {
            match method {
                "classic" => drop(cache.euler_number(n)),
                "gap4" => drop(solve_euler_gap4(&mut cache, n)),
                _ => drop(solve_euler_gap6(&mut cache, n).expect("even n")),
            }
            Table::EulerNumber
        }
    };
    let micros = start.elapsed().as_micros();
    let touched = cache.indices_read(table).range(..n).count();
    BenchRecord { method: method.to_string(), n, micros, touched, mults: cache.mults() }
}

pub fn run_bench(a: &BenchArgs) -> Outcome {
    let known = methods_for(a.target);
    let methods: Vec<&str> = if a.methods.is_empty() {
        known.to_vec()
    } else {
        let mut out = Vec::new();
        for m in &a.methods {
            match known.iter().find(|k| **k == m.as_str()) {
                Some(k) => out.push(*k),
                None => return Outcome::usage(format!("unknown method {m:?}; expected one of {}", known.join(","))),
            }
        }
        out
    };
    let mut records = Vec::new();
    for n in (2..=a.n_to).step_by(2) {
        for m in &methods {
            records.push(measure(a.target, m, n));
        }
    }
    let stdout = match a.format {
        super::Format::Csv => {
            let mut s = String::from("method,n,micros,touched,mults\n");
            for r in &records {
                s += &format!("{},{},{},{},{}\n", r.method, r.n, r.micros, r.touched, r.mults);
            }
            s
        }
        super::Format::Json => {
            let items: Vec<_> = records
                .iter()
                .map(|r| json!({"method": r.method, "n": r.n, "micros": r.micros as u64, "touched": r.touched, "mults": r.mults}))
                .collect();
            format!("{}\n", serde_json::Value::Array(items))
        }
        super::Format::Text => {
            let mut s = format!("{:<8} {:>5} {:>10} {:>8} {:>10}\n", "method", "n", "micros", "touched", "mults");
            for r in &records {
                s += &format!("{:<8} {:>5} {:>10} {:>8} {:>10}\n", r.method, r.n, r.micros, r.touched, r.mults);
            }
            s
        }
    };
    Outcome::ok(stdout)
}
