use std::time::Instant;

use super::registry::{lookup, registry, Extra, IdentityEntry, MSpec};
use super::report::{Counterexample, Report};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat};
use crate::lacunary::{IdentityInstance, Params, Value, ZPoint};
use crate::seqcore::SequenceCache;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Compare full coefficient vectors.
    Symbolic,
    /// Compare values at each point of [`sample_points`].
    Points,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Points => "points",
        }
    }
}

/// Which parameters to run. `n` values outside an entry's domain are
/// skipped, except when listed explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RangeSpec {
    pub n_from: usize,
    /// `None` uses each entry's default upper end.
    pub n_to: Option<usize>,
    pub m_max: Option<usize>,
    pub n_list: Option<Vec<usize>>,
}

impl RangeSpec {
    pub fn new(n_from: usize, n_to: usize) -> Self {
        Self { n_from, n_to: Some(n_to), ..Self::default() }
    }

    /// Each entry's default range.
    pub fn defaults() -> Self {
        Self::default()
    }

    pub fn up_to(n_to: usize) -> Self {
        Self::new(0, n_to)
    }

    pub fn only(ns: impl IntoIterator<Item = usize>) -> Self {
        Self { n_list: Some(ns.into_iter().collect()), ..Self::default() }
    }

    pub fn with_m_max(mut self, m_max: usize) -> Self {
        self.m_max = Some(m_max);
        self
    }
}

/// `{0, 1, −1, 1/2, −1/3, 2/5, 7/3}`.
pub fn sample_points() -> Vec<Rational> {
    vec![int(0), int(1), int(-1), rat(1, 2), rat(-1, 3), rat(2, 5), rat(7, 3)]
}

/// Shifts used for the translation identity: `{−2, −1, −1/2, 1/3, 1, 2}`.
pub fn sample_y() -> Vec<Rational> {
    vec![int(-2), int(-1), rat(-1, 2), rat(1, 3), int(1), int(2)]
}

struct Plan {
    ns: Vec<usize>,
    n_to: usize,
    ms: Vec<Option<usize>>,
    m_max: Option<usize>,
}

fn plan(entry: &IdentityEntry, range: &RangeSpec) -> Result<Plan> {
    let ns: Vec<usize> = match &range.n_list {
        Some(list) => {
            if let Some(&bad) = list.iter().find(|&&n| !entry.admits(n)) {
                return Err(Error::DomainViolation(format!(
                    "{}: n={bad} outside {}",
                    entry.name, entry.param_domain
                )));
            }
            list.clone()
        }
        None => {
            let to = range.n_to.unwrap_or(entry.default_n_to);
            (range.n_from..=to).filter(|&n| entry.admits(n)).collect()
        }
    };
    let n_to = ns.iter().copied().max().unwrap_or(range.n_to.unwrap_or(entry.default_n_to));
    let (ms, m_max) = match entry.m {
        MSpec::None => (vec![None], None),
        MSpec::Fixed(m) => (vec![Some(m)], Some(m)),
        MSpec::Range(default) => {
            let top = range.m_max.unwrap_or(default);
            if top == 0 {
                return Err(Error::DomainViolation(format!("{}: m_max must be at least 1", entry.name)));
            }
            ((1..=top).map(Some).collect(), Some(top))
        }
    };
    Ok(Plan { ns, n_to, ms, m_max })
}

fn expand(entry: &IdentityEntry, n: usize, m: Option<usize>) -> Vec<Params> {
    let base = Params { m, ..Params::n(n) };
    match entry.extra {
        Extra::None => vec![base],
        Extra::Lemma => {
            let mut out = Vec::new();
            for x0 in sample_points() {
                for z in ZPoint::standard_set() {
                    out.push(Params { x0: Some(x0.clone()), z: Some(z), ..base.clone() });
                }
            }
            out
        }
        Extra::Translate => {
            let mut out: Vec<Params> = sample_y()
                .into_iter()
                .map(|y| Params { y: Some(y), variant: Some("translate"), ..base.clone() })
                .collect();
            out.push(Params { variant: Some("difference"), ..base });
            out
        }
        Extra::Variants(vs) => vs.iter().map(|&v| Params { variant: Some(v), ..base.clone() }).collect(),
    }
}

/// `None` when the instance holds, otherwise the residual and the sample
/// point that exposed it.
fn check(inst: &IdentityInstance, mode: Mode) -> Option<(Value, Option<Rational>)> {
    match (mode, &inst.residual) {
        (Mode::Points, Value::Poly(_)) => sample_points().into_iter().find_map(|x| {
            let r = inst.residual.at(&x);
            (!r.is_zero()).then(|| (inst.residual.clone(), Some(x)))
        }),
        _ => (!inst.holds()).then(|| (inst.residual.clone(), None)),
    }
}

fn run(
    entry: &IdentityEntry,
    range: &RangeSpec,
    mode: Mode,
    map: &dyn Fn(IdentityInstance) -> IdentityInstance,
) -> Result<Report> {
    let plan = plan(entry, range)?;
    let start = Instant::now();
    let mut cache = SequenceCache::new();
    let mut report = Report {
        identity: entry.name.to_string(),
        mode,
        n_from: plan.ns.first().copied().unwrap_or(range.n_from),
        n_to: plan.n_to,
        m_max: plan.m_max,
        tried: 0,
        passed: 0,
        failed: 0,
        first_counterexample: None,
        elapsed: Default::default(),
        touches: Default::default(),
    };
    for &n in &plan.ns {
        for &m in &plan.ms {
            for params in expand(entry, n, m) {
                let inst = map(entry.evaluate(&mut cache, &params)?);
                let seq = report.tried;
                report.tried += 1;
                match check(&inst, mode) {
                    None => report.passed += 1,
                    Some((residual, point)) => {
                        report.failed += 1;
                        if report.first_counterexample.is_none() {
                            report.first_counterexample =
                                Some(Counterexample { seq, params: inst.params, residual, point });
                        }
                    }
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    report.touches = cache.stats();
    Ok(report)
}

/// Verifies one registered identity over `range`.
///
/// Errors with `UnknownIdentity` for an unregistered name and with
/// `DomainViolation` when the range holds no admissible `n` or lists an
/// inadmissible one.
pub fn verify_identity(name: &str, range: &RangeSpec, mode: Mode) -> Result<Report> {
    verify_identity_mapped(name, range, mode, |i| i)
}

/// As [`verify_identity`], passing every instance through `f` before it is
/// checked. Used to confirm that a tampered right-hand side is caught.
pub fn verify_identity_mapped(
    name: &str,
    range: &RangeSpec,
    mode: Mode,
    f: impl Fn(IdentityInstance) -> IdentityInstance,
) -> Result<Report> {
    let entry = lookup(name)?;
    let report = run(&entry, range, mode, &f)?;
    if report.tried == 0 {
        return Err(Error::DomainViolation(format!(
            "{}: no admissible parameters in the requested range ({})",
            entry.name, entry.param_domain
        )));
    }
    Ok(report)
}

/// Every registered identity over `range`, sorted by name. Entries whose
/// domain misses the range entirely come back with `tried = 0`.
pub fn verify_all(range: &RangeSpec, mode: Mode) -> Result<Vec<Report>> {
    registry().iter().map(|e| run(e, range, mode, &|i| i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq15_points() {
        let r = verify_identity("eq15", &RangeSpec::new(3, 101), Mode::Points).unwrap();
        assert_eq!(r.tried, 50);
        assert_eq!(r.failed, 0);
        assert!(r.first_counterexample.is_none());
    }

    #[test]
    fn thm32_printed_fails_from_zero() {
        let r = verify_identity("thm32_printed", &RangeSpec::new(0, 10), Mode::Symbolic).unwrap();
        assert!(r.failed >= 2);
        assert_eq!(r.first_counterexample.unwrap().params.n, 0);
    }

    #[test]
    fn thm21_symbolic() {
        let r = verify_identity("thm21", &RangeSpec::new(1, 50), Mode::Symbolic).unwrap();
        assert_eq!((r.tried, r.failed), (50, 0));
    }

    #[test]
    fn errors() {
        let range = RangeSpec::new(0, 10);
        assert!(matches!(verify_identity("nope", &range, Mode::Symbolic), Err(Error::UnknownIdentity(_))));
        assert!(matches!(
            verify_identity("eq15", &RangeSpec::only([4]), Mode::Symbolic),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            verify_identity("eq15", &RangeSpec::new(4, 4), Mode::Symbolic),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            verify_identity("thm22", &RangeSpec::new(3, 5).with_m_max(0), Mode::Symbolic),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn tampering_is_caught() {
        let r = verify_identity_mapped("cor31", &RangeSpec::new(2, 20), Mode::Symbolic, |i| {
            let flipped = i.rhs.negated();
            i.with_rhs(flipped)
        })
        .unwrap();
        assert_eq!(r.failed, r.tried);
    }
}
