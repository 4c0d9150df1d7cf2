use std::fmt;

use num_traits::Zero;

use crate::{EisensteinRational, GaussianRational, RatPoly, Rational};

/// One side of an identity. Both sides of an instance share a variant.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Number(Rational),
    Poly(RatPoly),
    Gaussian(GaussianRational),
    Eisenstein(EisensteinRational),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Number(q) => q.is_zero(),
            Value::Poly(p) => p.is_zero(),
            Value::Gaussian(z) => z.is_zero(),
            Value::Eisenstein(z) => z.is_zero(),
        }
    }

    /// `self − other`. Panics when the variants differ.
    pub fn minus(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Number(a), Value::Number(b)) => Value::Number(a - b),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.clone() - b.clone()),
            (Value::Gaussian(a), Value::Gaussian(b)) => Value::Gaussian(a.clone() - b.clone()),
            (Value::Eisenstein(a), Value::Eisenstein(b)) => Value::Eisenstein(a.clone() - b.clone()),
            (a, b) => panic!("cannot subtract {b:?} from {a:?}"),
        }
    }

    pub fn negated(&self) -> Value {
        match self {
            Value::Number(a) => Value::Number(-a),
            Value::Poly(p) => Value::Poly(-p.clone()),
            Value::Gaussian(z) => Value::Gaussian(-z.clone()),
            Value::Eisenstein(z) => Value::Eisenstein(-z.clone()),
        }
    }

    /// Polynomials evaluated at `x`; every other value is returned as is.
    pub fn at(&self, x: &Rational) -> Value {
        match self {
            Value::Poly(p) => Value::Number(p.eval(x)),
            other => other.clone(),
        }
    }

    pub fn as_number(&self) -> Option<&Rational> {
        match self {
            Value::Number(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&RatPoly> {
        match self {
            Value::Poly(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(q) => write!(f, "{q}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Gaussian(z) => write!(f, "{z}"),
            Value::Eisenstein(z) => write!(f, "{z}"),
        }
    }
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Number(q)
    }
}

impl From<RatPoly> for Value {
    fn from(p: RatPoly) -> Self {
        Value::Poly(p)
    }
}

impl From<GaussianRational> for Value {
    fn from(z: GaussianRational) -> Self {
        Value::Gaussian(z)
    }
}

impl From<EisensteinRational> for Value {
    fn from(z: EisensteinRational) -> Self {
        Value::Eisenstein(z)
    }
}

/// The `z` argument of the two lemmas, in whichever field it lives.
#[derive(Debug, Clone, PartialEq)]
pub enum ZPoint {
    Rational(Rational),
    Gaussian(GaussianRational),
    Eisenstein(EisensteinRational),
}

impl ZPoint {
    /// `{0, −1, 1/2, ω, i}`.
    pub fn standard_set() -> Vec<ZPoint> {
        use crate::exactnum::{int, rat};
        vec![
            ZPoint::Rational(int(0)),
            ZPoint::Rational(int(-1)),
            ZPoint::Rational(rat(1, 2)),
            ZPoint::Eisenstein(EisensteinRational::omega()),
            ZPoint::Gaussian(GaussianRational::i()),
        ]
    }
}

impl fmt::Display for ZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZPoint::Rational(q) => write!(f, "{q}"),
            ZPoint::Gaussian(z) => write!(f, "{z}"),
            ZPoint::Eisenstein(z) => write!(f, "{z}"),
        }
    }
}

/// Parameters of one identity instance. Unused fields stay `None`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params {
    pub n: usize,
    pub m: Option<usize>,
    pub x0: Option<Rational>,
    pub y: Option<Rational>,
    pub z: Option<ZPoint>,
    pub variant: Option<&'static str>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Self { n, ..Self::default() }
    }

    pub fn nm(n: usize, m: usize) -> Self {
        Self { n, m: Some(m), ..Self::default() }
    }

    /// `(key, value)` pairs for the fields that are set, in a fixed order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("n", self.n.to_string())];
        if let Some(m) = self.m {
            out.push(("m", m.to_string()));
        }
        if let Some(x) = &self.x0 {
            out.push(("x0", x.to_string()));
        }
        if let Some(y) = &self.y {
            out.push(("y", y.to_string()));
        }
        if let Some(z) = &self.z {
            out.push(("z", z.to_string()));
        }
        if let Some(v) = self.variant {
            out.push(("variant", v.to_string()));
        }
        out
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fields().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Both sides of one identity at fixed parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityInstance {
    pub name: &'static str,
    pub params: Params,
    pub lhs: Value,
    pub rhs: Value,
    /// Side quantity reported with the instance (`δ(m,n)` for the general
    /// gap-6 theorem).
    pub rhs_aux: Option<Rational>,
    /// `lhs − rhs`; zero exactly when the identity holds here.
    pub residual: Value,
}

impl IdentityInstance {
    pub fn new(name: &'static str, params: Params, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let residual = lhs.minus(&rhs);
        Self { name, params, lhs, rhs, rhs_aux: None, residual }
    }

    pub fn with_aux(mut self, aux: Rational) -> Self {
        self.rhs_aux = Some(aux);
        self
    }

    /// Replaces the right-hand side and recomputes the residual.
    pub fn with_rhs(mut self, rhs: Value) -> Self {
        self.residual = self.lhs.minus(&rhs);
        self.rhs = rhs;
        self
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}
