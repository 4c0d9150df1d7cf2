use clap::{Args, ValueEnum};

use super::{json_strings, Outcome};
use crate::lacunary::{solve_bernoulli_gap6, solve_euler_gap4, solve_euler_gap6};
use crate::lucas::{lucas_closed, LucasKind, LucasParams};
use crate::{parse_rational, RatPoly, Result, SequenceCache};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Bernoulli,
    Euler,
    BernoulliPoly,
    EulerPoly,
    Lucas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Classic,
    Gap4,
    Gap6,
    /// Lucas terms by the two-term recurrence.
    Recurrence,
    /// Lucas terms by the closed form over a quadratic field.
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    U,
    V,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub target: Target,
    #[arg(long)]
    pub n: usize,
    /// classic|gap6 for bernoulli, classic|gap4|gap6 for euler,
    /// recurrence|closed for lucas.
    #[arg(long)]
    pub method: Option<Method>,
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

fn poly_json(p: &RatPoly) -> String {
    json_strings(p.coeffs()).to_string()
}

fn compute(a: &ComputeArgs) -> std::result::Result<String, String> {
    use Method::*;
    let mut cache = SequenceCache::new();
    let n = a.n;
    let err = |e: crate::Error| e.to_string();
    if a.target != Target::Lucas && (a.kind.is_some() || a.b.is_some() || a.c.is_some()) {
        return Err("--kind, --b and --c only apply to lucas".into());
    }
    let bad_method = |m: Method| Err(format!("method {m:?} does not apply to {:?}", a.target).to_lowercase());
    let out = match a.target {
        Target::Bernoulli => match a.method.unwrap_or(Classic) {
            Classic => cache.bernoulli_number(n).to_string(),
            Gap6 => solve_bernoulli_gap6(&mut cache, n).map_err(err)?.to_string(),
            m => return bad_method(m),
        },
        Target::Euler => match a.method.unwrap_or(Classic) {
            Classic => cache.euler_number(n).to_string(),
            Gap4 => solve_euler_gap4(&mut cache, n).to_string(),
            Gap6 => solve_euler_gap6(&mut cache, n).map_err(err)?.to_string(),
            m => return bad_method(m),
        },
        Target::BernoulliPoly | Target::EulerPoly => match a.method.unwrap_or(Classic) {
            Classic if a.target == Target::BernoulliPoly => poly_json(&cache.bernoulli_poly(n)),
            Classic => poly_json(&cache.euler_poly(n)),
            m => return bad_method(m),
        },
        Target::Lucas => {
            let kind = match a.kind.ok_or("lucas needs --kind u|v")? {
                Kind::U => LucasKind::U,
                Kind::V => LucasKind::V,
            };
            let b = parse_rational(a.b.as_deref().ok_or("lucas needs --b")?).map_err(err)?;
            let c = parse_rational(a.c.as_deref().ok_or("lucas needs --c")?).map_err(err)?;
            let params = LucasParams::new(b, c);
            let v: Result<_> = match a.method.unwrap_or(Recurrence) {
                Recurrence => Ok(params.term(kind, n)),
                Closed => lucas_closed(&params, n, kind),
                m => return bad_method(m),
            };
            v.map_err(err)?.to_string()
        }
    };
    Ok(out)
}

pub fn run_compute(a: &ComputeArgs) -> Outcome {
    match compute(a) {
        Ok(s) => Outcome::ok(s + "\n"),
        Err(e) => Outcome::usage(e),
    }
}
