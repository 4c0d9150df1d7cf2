use crate::error::{Error, Result};
use crate::exactnum::int;
use crate::lacunary::{self, IdentityInstance, Lemma, Params, Thm32Variant};
use crate::seqcore::{self, SequenceCache};
use crate::{RatPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    pub fn admits(self, n: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => n % 2 == 1,
            Parity::Even => n % 2 == 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeSupport {
    Symbolic,
    Pointwise,
    Both,
}

/// How the second parameter `m` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MSpec {
    None,
    Fixed(usize),
    /// `1..=m_max`, with this default `m_max`.
    Range(usize),
}

/// Extra parameter axes swept for every `(n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Extra {
    None,
    /// `x0` over the sample points and `z` over `{0, −1, 1/2, ω, i}`.
    Lemma,
    /// `y` over the translation set, plus the forward-difference check.
    Translate,
    Variants(&'static [&'static str]),
}

type Evaluator = fn(&mut SequenceCache, &Params) -> Result<IdentityInstance>;

/// One verifiable identity.
#[derive(Clone)]
pub struct IdentityEntry {
    pub name: &'static str,
    /// What the identity states, in words.
    pub statement: &'static str,
    /// Human-readable parameter domain.
    pub param_domain: &'static str,
    pub mode_support: ModeSupport,
    pub parity: Parity,
    pub min_n: usize,
    /// Upper end of `n` when a run does not give one.
    pub default_n_to: usize,
    pub(crate) m: MSpec,
    pub(crate) extra: Extra,
    pub(crate) eval: Evaluator,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("name", &self.name)
            .field("param_domain", &self.param_domain)
            .finish_non_exhaustive()
    }
}

impl IdentityEntry {
    pub fn evaluate(&self, cache: &mut SequenceCache, params: &Params) -> Result<IdentityInstance> {
        (self.eval)(cache, params)
    }

    pub fn admits(&self, n: usize) -> bool {
        n >= self.min_n && self.parity.admits(n)
    }

    pub fn default_m_max(&self) -> Option<usize> {
        match self.m {
            MSpec::Range(d) => Some(d),
            MSpec::Fixed(m) => Some(m),
            MSpec::None => None,
        }
    }
}

fn m_of(p: &Params) -> usize {
    p.m.expect("entry sweeps m")
}

fn variant(p: &Params) -> &'static str {
    p.variant.expect("entry sweeps variants")
}

fn eq12(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let n = p.n;
    let consts = seqcore::euler_constants(cache, n);
    let mut lhs = seqcore::euler_poly_from_constants(cache, &consts, n);
    for r in 0..=n {
        let c = Rational::from_integer(cache.binom(n, r));
        lhs = lhs + seqcore::euler_poly_from_constants(cache, &consts, r).scale(&c);
    }
    let rhs = RatPoly::monomial(int(2), n);
    Ok(IdentityInstance::new("eq12", p.clone(), lhs, rhs))
}

fn eq13(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let (numbers, duplication, halves) = seqcore::euler_poly_via_bernoulli(cache, p.n);
    let rhs = match variant(p) {
        "numbers" => numbers,
        "duplication" => duplication,
        _ => halves,
    };
    Ok(IdentityInstance::new("eq13", p.clone(), cache.euler_poly(p.n), rhs))
}

fn eq14(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let (e, at_half, at_zero, via_b) = seqcore::euler_number_identities(cache, p.n);
    let (l, r) = match variant(p) {
        "half" => (e, at_half),
        _ => (at_zero, via_b),
    };
    Ok(IdentityInstance::new("eq14", p.clone(), l, r))
}

fn eq21(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let (l, r) = match &p.y {
        Some(y) => seqcore::bernoulli_translate(cache, p.n, y),
        None => seqcore::bernoulli_forward_difference(cache, p.n),
    };
    Ok(IdentityInstance::new("eq21", p.clone(), l, r))
}

fn raabe(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let (l, r) = seqcore::raabe_sum(cache, p.n, m_of(p));
    Ok(IdentityInstance::new("raabe", p.clone(), l, r))
}

fn lemma(which: Lemma) -> impl Fn(&mut SequenceCache, &Params) -> Result<IdentityInstance> {
    move |cache, p| {
        let x0 = p.x0.as_ref().expect("lemma sweeps x0");
        let z = p.z.as_ref().expect("lemma sweeps z");
        lacunary::lemma_pair(cache, which, p.n, x0, z)
    }
}

fn solver_b_gap6(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let gap = lacunary::solve_bernoulli_gap6(&mut SequenceCache::new(), p.n)?;
    Ok(IdentityInstance::new("solver_b_gap6", p.clone(), gap, cache.bernoulli_number(p.n)))
}

fn solver_e_gap4(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let gap = lacunary::solve_euler_gap4(&mut SequenceCache::new(), p.n);
    Ok(IdentityInstance::new("solver_e_gap4", p.clone(), gap, cache.euler_number(p.n)))
}

fn solver_e_gap6(cache: &mut SequenceCache, p: &Params) -> Result<IdentityInstance> {
    let gap = lacunary::solve_euler_gap6(&mut SequenceCache::new(), p.n)?;
    Ok(IdentityInstance::new("solver_e_gap6", p.clone(), gap, cache.euler_number(p.n)))
}

struct Spec {
    name: &'static str,
    statement: &'static str,
    param_domain: &'static str,
    mode_support: ModeSupport,
    parity: Parity,
    min_n: usize,
    default_n_to: usize,
    m: MSpec,
    extra: Extra,
    eval: Evaluator,
}

impl From<Spec> for IdentityEntry {
    fn from(s: Spec) -> Self {
        IdentityEntry {
            name: s.name,
            statement: s.statement,
            param_domain: s.param_domain,
            mode_support: s.mode_support,
            parity: s.parity,
            min_n: s.min_n,
            default_n_to: s.default_n_to,
            m: s.m,
            extra: s.extra,
            eval: s.eval,
        }
    }
}

const POLY: ModeSupport = ModeSupport::Both;
const NUM: ModeSupport = ModeSupport::Both;

/// Every registered identity, sorted by name.
pub fn registry() -> Vec<IdentityEntry> {
    use Extra as X;
    use MSpec as M;
    use Parity::*;
    let s = |name, statement, param_domain, mode_support, parity, min_n, default_n_to, m, extra, eval: Evaluator| {
        IdentityEntry::from(Spec { name, statement, param_domain, mode_support, parity, min_n, default_n_to, m, extra, eval })
    };
    let mut out = vec![
        s("eq12", "E_n(x) + sum C(n,r) E_r(x) = 2x^n", "n >= 0", POLY, Any, 0, 100, M::None, X::None, eq12),
        s("eq13", "three classical expressions for E_n(x) agree with the recurrence", "n >= 0; variant numbers|duplication|halves", POLY, Any, 0, 60, M::None,
            X::Variants(&["numbers", "duplication", "halves"]), eq13),
        s("eq14", "E_n = 2^n E_n(1/2) and E_n(0) = 2(1-2^(n+1)) B_(n+1)/(n+1)", "n >= 0; variant half|zero", NUM, Any, 0, 100, M::None,
            X::Variants(&["half", "zero"]), eq14),
        s("eq15", "Ramanujan: sum over k = 3 mod 6 of C(n,k) B_(n-k)", "odd n >= 3", NUM, Odd, 3, 300, M::None, X::None,
            |c, p| lacunary::eq15_pair(c, p.n)),
        s("eq16", "Lehmer: gap-6 recurrence for Euler numbers", "even n >= 2", NUM, Even, 2, 300, M::None, X::None,
            |c, p| lacunary::eq16_pair(c, p.n)),
        s("eq21", "B_n(x+y) expansion and B_n(x+1) - B_n(x) = n x^(n-1)", "n >= 0; y in {-2,-1,-1/2,1/3,1,2} or difference", POLY, Any, 0, 60,
            M::None, X::Translate, eq21),
        s("raabe", "multiplication theorem: sum_r B_n(r/m) = m^(1-n) B_n", "n >= 0; 1 <= m <= m_max", NUM, Any, 0, 60, M::Range(8), X::None, raabe),
        s("lemma21", "Bernoulli lemma: sum C(n,k) B_k(x)((1+z)^(n-k) - z^(n-k)) = n(x+z)^(n-1)", "n >= 1; x0 sample set; z in {0,-1,1/2,w,i}",
            ModeSupport::Pointwise, Any, 1, 40, M::None, X::Lemma, |c, p| lemma(Lemma::L21)(c, p)),
        s("lemma31", "Euler lemma: sum C(n,k) E_k(x)(z^(n-k) + (1+z)^(n-k)) = 2(x+z)^n", "n >= 0; x0 sample set; z in {0,-1,1/2,w,i}",
            ModeSupport::Pointwise, Any, 0, 40, M::None, X::Lemma, |c, p| lemma(Lemma::L31)(c, p)),
        s("thm21", "gap-6 Bernoulli polynomial sum via x+w, x+w^2", "n >= 1", POLY, Any, 1, 100, M::None, X::None,
            |c, p| lacunary::thm21_pair(c, p.n)),
        s("thm22", "scaled gap-6 Bernoulli sum for any m, with delta(m,n)", "odd n >= 3; 1 <= m <= m_max", NUM, Odd, 3, 99, M::Range(8), X::None,
            |c, p| lacunary::thm22_pair(c, m_of(p), p.n)),
        s("cor21", "scaled gap-6 sum, m = 2", "odd n >= 3", NUM, Odd, 3, 199, M::Fixed(2), X::None,
            |c, p| lacunary::gap6_corollary_pair(c, 2, p.n)),
        s("cor22", "scaled gap-6 sum, m = 3, via V_(n-1)(1,7)", "odd n >= 3", NUM, Odd, 3, 199, M::Fixed(3), X::None,
            |c, p| lacunary::gap6_corollary_pair(c, 3, p.n)),
        s("cor23", "scaled gap-6 sum, m = 4, via V_(n-1)(2,13)", "odd n >= 3", NUM, Odd, 3, 199, M::Fixed(4), X::None,
            |c, p| lacunary::gap6_corollary_pair(c, 4, p.n)),
        s("thm23", "gap-4 Bernoulli polynomial sum via 2x-1 +- i", "n >= 1", POLY, Any, 1, 100, M::None, X::None,
            |c, p| lacunary::thm23_pair(c, p.n)),
        s("thm24", "scaled gap-4 Bernoulli sum for any m", "even n >= 2; 1 <= m <= m_max", NUM, Even, 2, 100, M::Range(6), X::None,
            |c, p| lacunary::thm24_pair(c, m_of(p), p.n)),
        s("cor24", "scaled gap-4 sum, m = 1 (Ramanujan)", "even n >= 2", NUM, Even, 2, 200, M::Fixed(1), X::None,
            |c, p| lacunary::gap4_corollary_pair(c, 1, p.n)),
        s("cor25", "scaled gap-4 sum, m = 2", "even n >= 2", NUM, Even, 2, 200, M::Fixed(2), X::None,
            |c, p| lacunary::gap4_corollary_pair(c, 2, p.n)),
        s("cor26", "scaled gap-4 sum, m = 4, via U_(n-1)(2,5)", "even n >= 2", NUM, Even, 2, 200, M::Fixed(4), X::None,
            |c, p| lacunary::gap4_corollary_pair(c, 4, p.n)),
        s("cor27", "scaled gap-4 sum, m = 3, via U_(n-1)(2,10)", "even n >= 2", NUM, Even, 2, 200, M::Fixed(3), X::None,
            |c, p| lacunary::gap4_corollary_pair(c, 3, p.n)),
        s("thm25", "weighted 4 | k Bernoulli polynomial sum via x +- i", "n >= 1", POLY, Any, 1, 100, M::None, X::None,
            |c, p| lacunary::thm25_pair(c, p.n)),
        s("cor28", "weighted 4 | k Bernoulli number sum", "even n >= 2", NUM, Even, 2, 300, M::None, X::None,
            |c, p| lacunary::cor28_pair(c, p.n)),
        s("thm31", "4 | k Euler polynomial sum via x - 1/2 +- i/2", "n >= 0", POLY, Any, 0, 100, M::None, X::None,
            |c, p| lacunary::thm31_pair(c, p.n)),
        s("cor31", "Lehmer: gap-4 recurrence for Euler numbers", "even n >= 2", NUM, Even, 2, 300, M::None, X::None,
            |c, p| lacunary::cor31_pair(c, p.n)),
        s("cor32", "4 | k Bernoulli number sum from the Euler identity at x = 0", "even n >= 2", NUM, Even, 2, 300, M::None, X::None,
            |c, p| lacunary::cor32_pair(c, p.n)),
        s("thm32_printed", "weighted 4 | k Euler polynomial sum, right side as printed (fails)", "n >= 0", POLY, Any, 0, 100, M::None, X::None,
            |c, p| lacunary::thm32_pair(c, p.n, Thm32Variant::Printed)),
        s("thm32_corrected", "weighted 4 | k Euler polynomial sum with the -2E_n(x) term restored", "n >= 0", POLY, Any, 0, 100, M::None,
            X::None, |c, p| lacunary::thm32_pair(c, p.n, Thm32Variant::Corrected)),
        s("thm33", "gap-6 Euler polynomial recurrence via V_n(1-2x, x^2-x+1)", "n >= 0", POLY, Any, 0, 100, M::None, X::None,
            |c, p| lacunary::thm33_pair(c, p.n)),
        s("solver_b_gap6", "gap-6 solver for B_n equals the classic recurrence", "even n >= 0", NUM, Even, 0, 300, M::None, X::None,
            solver_b_gap6),
        s("solver_e_gap4", "gap-4 solver for E_n equals the classic recurrence", "even n >= 0", NUM, Even, 0, 300, M::None, X::None,
            solver_e_gap4),
        s("solver_e_gap6", "gap-6 solver for E_n equals the classic recurrence", "even n >= 0", NUM, Even, 0, 300, M::None, X::None,
            solver_e_gap6),
    ];
    out.sort_by_key(|e| e.name);
    out
}

pub fn lookup(name: &str) -> Result<IdentityEntry> {
    registry()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn registry_is_complete_and_unique() {
        let names: Vec<_> = registry().iter().map(|e| e.name).collect();
        assert_eq!(names.len(), 31);
        let set: BTreeSet<_> = names.iter().copied().collect();
        assert_eq!(set.len(), 31);
        for n in ["eq15", "thm32_printed", "thm32_corrected", "solver_e_gap6", "raabe", "lemma31"] {
            assert!(set.contains(n), "{n} missing");
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(lookup("thm99").unwrap_err(), Error::UnknownIdentity("thm99".into()));
    }

}
