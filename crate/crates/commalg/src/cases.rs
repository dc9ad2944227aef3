//! Local models of the integrable map near a fixed point of `Hilb^1` or `Hilb^2`.

use std::fmt;
use std::str::FromStr;

use hilbfix_core::exactalg::{ratio, Rational};
use hilbfix_core::partitions::{Multipartition, Partition};
use hilbfix_core::surfaces::{FixedPointRecord, SurfaceModel};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mpoly::{Exp, MPoly, MAX_VARS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CaseError {
    #[error("weights violate -a*l + b*w = e: a={a} b={b} l={l} w={w} e={e}")]
    WeightBalance { a: u32, b: u32, l: u32, w: u32, e: u32 },
    #[error("local equation needs b >= 1")]
    NoPositiveExponent,
    #[error("chart image has an odd power of the antisymmetric coordinate")]
    OddResidue,
    #[error("cannot parse case descriptor: {0}")]
    Parse(String),
    #[error("fixed point {0} has no local equation")]
    NotIsolated(String),
}

/// Local equation `x^a y^b` with `wt x = -l`, `wt y = w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalPoint {
    pub a: u32,
    pub b: u32,
    pub l: u32,
    pub w: u32,
}

impl LocalPoint {
    pub fn new(a: u32, b: u32, l: u32, w: u32) -> Self {
        Self { a, b, l, w }
    }

    pub fn from_record(rec: &FixedPointRecord) -> Result<Self, CaseError> {
        let (a, b) = rec.local_eq.ok_or_else(|| CaseError::NotIsolated(rec.label.clone()))?;
        Ok(Self { a, b, l: rec.neg_weight, w: rec.pos_weight })
    }

    /// `-a l + b w`.
    pub fn base_weight(&self) -> i64 {
        -(self.a as i64) * self.l as i64 + self.b as i64 * self.w as i64
    }

    fn check(&self, e: u32) -> Result<(), CaseError> {
        if self.b == 0 {
            return Err(CaseError::NoPositiveExponent);
        }
        if self.base_weight() != e as i64 {
            let Self { a, b, l, w } = *self;
            return Err(CaseError::WeightBalance { a, b, l, w, e });
        }
        Ok(())
    }

    pub fn equation(&self) -> String {
        let part = |v: &str, k: u32| match k {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{k}"),
        };
        format!("{}{}", part("x", self.a), part("y", self.b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chart {
    /// Neighbourhood of `I^{(1^2)}`.
    U1,
    /// Neighbourhood of `I^{(2)}`.
    U2,
}

/// Which fixed point of which Hilbert scheme the local computation describes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum CaseSpec {
    /// A single isolated point of the surface itself.
    Single { point: LocalPoint, e: u32 },
    /// `I_p ∩ I_q` for two distinct isolated points.
    Separated { p: LocalPoint, q: LocalPoint, e: u32 },
    /// `I_p^{(1^2)}` (chart U1) or `I_p^{(2)}` (chart U2).
    Punctual { chart: Chart, point: LocalPoint, e: u32 },
}

/// Polynomials `f, g` in a ring whose first `ny` variables have positive weight
/// and whose remaining `nx` variables have negative weight.
#[derive(Clone, Debug)]
pub struct ThetaIdeal {
    pub names: Vec<&'static str>,
    pub weights: Vec<i64>,
    pub ny: usize,
    pub nx: usize,
    pub f: MPoly,
    pub g: Option<MPoly>,
}

impl ThetaIdeal {
    pub fn nvars(&self) -> usize {
        self.ny + self.nx
    }

    pub fn y_vars(&self) -> Vec<usize> {
        (0..self.ny).collect()
    }

    pub fn x_weights(&self) -> Vec<i64> {
        self.weights[self.ny..].to_vec()
    }

    pub fn y_weights(&self) -> Vec<i64> {
        self.weights[..self.ny].to_vec()
    }

    pub fn generators(&self) -> Vec<MPoly> {
        std::iter::once(self.f.clone()).chain(self.g.clone()).collect()
    }

    pub fn names_ref(&self) -> &[&'static str] {
        &self.names
    }
}

impl CaseSpec {
    pub fn validate(&self) -> Result<(), CaseError> {
        match self {
            CaseSpec::Single { point, e } => point.check(*e),
            CaseSpec::Separated { p, q, e } => {
                p.check(*e)?;
                q.check(*e)
            }
            CaseSpec::Punctual { point, e, .. } => point.check(*e),
        }
    }

    /// Separated case for two distinct isolated points of a surface.
    pub fn separated(surface: &SurfaceModel, p: usize, q: usize) -> Result<Self, CaseError> {
        Ok(CaseSpec::Separated {
            p: LocalPoint::from_record(&surface.components[p])?,
            q: LocalPoint::from_record(&surface.components[q])?,
            e: surface.e,
        })
    }

    pub fn punctual(surface: &SurfaceModel, p: usize, chart: Chart) -> Result<Self, CaseError> {
        Ok(CaseSpec::Punctual { chart, point: LocalPoint::from_record(&surface.components[p])?, e: surface.e })
    }

    pub fn single(surface: &SurfaceModel, p: usize) -> Result<Self, CaseError> {
        Ok(CaseSpec::Single { point: LocalPoint::from_record(&surface.components[p])?, e: surface.e })
    }

    /// Upper bound on the y-degrees the multiplicity computation may visit.
    pub fn degree_cap(&self) -> u32 {
        match self {
            CaseSpec::Single { point, .. } => 4 * (point.b + 2),
            CaseSpec::Separated { p, q, .. } => 4 * (p.b + q.b + 2),
            CaseSpec::Punctual { point, .. } => 4 * (2 * point.b + 2),
        }
    }

    /// Non-equivariant multiplicity the result must specialize to.
    pub fn expected_rank(&self) -> u64 {
        match self {
            CaseSpec::Single { point, .. } => point.b as u64,
            CaseSpec::Separated { p, q, .. } => 2 * p.b as u64 * q.b as u64,
            CaseSpec::Punctual { chart: Chart::U1, point, .. } => (point.b as u64).pow(2),
            CaseSpec::Punctual { chart: Chart::U2, point, .. } => 2 * (point.b as u64).pow(2),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CaseSpec::Single { point, e } => format!("single {} -{}|{} e={e}", point.equation(), point.l, point.w),
            CaseSpec::Separated { p, q, e } => format!(
                "separated {} -{}|{} + {} -{}|{} e={e}",
                p.equation(),
                p.l,
                p.w,
                q.equation(),
                q.l,
                q.w
            ),
            CaseSpec::Punctual { chart, point, e } => {
                format!("punctual {chart:?} {} -{}|{} e={e}", point.equation(), point.l, point.w)
            }
        }
    }
}

/// Local case of a torus-fixed point of `Hilb^n`, `n <= 2`, supported on isolated points.
///
/// `I_p^{(1^2)}` is the partition `(1, 1)` and lives in chart U1; `I_p^{(2)}` is `(2)` in U2.
pub fn case_for_multipartition(surface: &SurfaceModel, mp: &Multipartition) -> Option<CaseSpec> {
    let support: Vec<(usize, &Partition)> = mp.support().map(|(i, p)| (i, p)).collect();
    if support.iter().any(|(i, _)| !surface.components[*i].is_isolated()) {
        return None;
    }
    match (mp.size(), support.as_slice()) {
        (1, [(p, _)]) => CaseSpec::single(surface, *p).ok(),
        (2, [(p, _), (q, _)]) => CaseSpec::separated(surface, *p, *q).ok(),
        (2, [(p, part)]) => {
            let chart = if part.parts() == [1, 1] { Chart::U1 } else { Chart::U2 };
            CaseSpec::punctual(surface, *p, chart).ok()
        }
        _ => None,
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Parses `a,b,l,w`.
fn parse_point(s: &str) -> Result<LocalPoint, CaseError> {
    let v: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| CaseError::Parse(s.to_string())))
        .collect::<Result<_, _>>()?;
    match v.as_slice() {
        [a, b, l, w] => Ok(LocalPoint::new(*a, *b, *l, *w)),
        _ => Err(CaseError::Parse(s.to_string())),
    }
}

/// Compact descriptors: `single:a,b,l,w:e`, `separated:a,b,l,w:a,b,l,w:e`,
/// `u1:a,b,l,w:e`, `u2:a,b,l,w:e`. JSON objects are accepted as well.
impl FromStr for CaseSpec {
    type Err = CaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('{') {
            let spec: CaseSpec = serde_json::from_str(s).map_err(|e| CaseError::Parse(e.to_string()))?;
            spec.validate()?;
            return Ok(spec);
        }
        let parts: Vec<&str> = s.split(':').collect();
        let e = |x: &str| x.trim().parse::<u32>().map_err(|_| CaseError::Parse(s.to_string()));
        let spec = match parts.as_slice() {
            [k, p, ev] if k.eq_ignore_ascii_case("single") => CaseSpec::Single { point: parse_point(p)?, e: e(ev)? },
            [k, p, q, ev] if k.eq_ignore_ascii_case("separated") => {
                CaseSpec::Separated { p: parse_point(p)?, q: parse_point(q)?, e: e(ev)? }
            }
            [k, p, ev] if k.eq_ignore_ascii_case("u1") => {
                CaseSpec::Punctual { chart: Chart::U1, point: parse_point(p)?, e: e(ev)? }
            }
            [k, p, ev] if k.eq_ignore_ascii_case("u2") => {
                CaseSpec::Punctual { chart: Chart::U2, point: parse_point(p)?, e: e(ev)? }
            }
            _ => return Err(CaseError::Parse(s.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn exp4(a: u16, b: u16, c: u16, d: u16) -> Exp {
    let mut e = [0; MAX_VARS];
    e[0] = a;
    e[1] = b;
    e[2] = c;
    e[3] = d;
    e
}

/// `f`, `g` for the case, in variables ordered positive-weight first.
pub fn build_theta_ideal(spec: &CaseSpec) -> Result<ThetaIdeal, CaseError> {
    spec.validate()?;
    match spec {
        CaseSpec::Single { point, .. } => {
            let y = MPoly::var(2, 0);
            let x = MPoly::var(2, 1);
            Ok(ThetaIdeal {
                names: vec!["y", "x"],
                weights: vec![point.w as i64, -(point.l as i64)],
                ny: 1,
                nx: 1,
                f: &x.pow(point.a) * &y.pow(point.b),
                g: None,
            })
        }
        CaseSpec::Separated { p, q, .. } => {
            let v = |i| MPoly::var(4, i);
            let m1 = &v(2).pow(p.a) * &v(0).pow(p.b);
            let m2 = &v(3).pow(q.a) * &v(1).pow(q.b);
            Ok(ThetaIdeal {
                names: vec!["y1", "y2", "x1", "x2"],
                weights: vec![p.w as i64, q.w as i64, -(p.l as i64), -(q.l as i64)],
                ny: 2,
                nx: 2,
                f: &m1 + &m2,
                g: Some(&m1 * &m2),
            })
        }
        CaseSpec::Punctual { chart, point, .. } => punctual_ideal(*chart, point),
    }
}

fn punctual_ideal(chart: Chart, p: &LocalPoint) -> Result<ThetaIdeal, CaseError> {
    // Symmetric coordinates s, eps, t, delta with x_{1,2} = (s ± eps)/2, y_{1,2} = (t ± delta)/2.
    let v = |i| MPoly::var(4, i);
    let half = ratio(1, 2);
    let x1 = (&v(0) + &v(1)).scale(&half);
    let x2 = (&v(0) - &v(1)).scale(&half);
    let y1 = (&v(2) + &v(3)).scale(&half);
    let y2 = (&v(2) - &v(3)).scale(&half);
    let m1 = &x1.pow(p.a) * &y1.pow(p.b);
    let m2 = &x2.pow(p.a) * &y2.pow(p.b);
    let h1 = &m1 + &m2;
    let h2 = &m1 * &m2;
    let (l, w) = (p.l as i64, p.w as i64);
    let (names, weights) = match chart {
        Chart::U2 => (vec!["t", "xi", "s", "u0"], vec![w, w + l, -l, -2 * l]),
        Chart::U1 => (vec!["t", "w0", "s", "eta"], vec![w, 2 * w, -l, -l - w]),
    };
    let to_chart = |h: &MPoly| -> Result<MPoly, CaseError> {
        let mut out = MPoly::zero(4);
        for (e, c) in h.terms() {
            let (s, eps, t, delta) = (e[0], e[1], e[2], e[3]);
            if (eps + delta) % 2 != 0 {
                return Err(CaseError::OddResidue);
            }
            let half_sum = (eps + delta) / 2;
            let exp = match chart {
                // delta = xi * eps, eps^2 = u0.
                Chart::U2 => exp4(t, delta, s, half_sum),
                // eps = eta * delta, delta^2 = w0.
                Chart::U1 => exp4(t, half_sum, s, eps),
            };
            out.add_term(exp, c.clone());
        }
        Ok(out)
    };
    let f = primitive(&to_chart(&h1)?);
    let g = primitive(&to_chart(&h2)?);
    Ok(ThetaIdeal { names, weights, ny: 2, nx: 2, f, g: Some(g) })
}

/// Rescales so that the coefficients are coprime integers with positive leading entry.
fn primitive(p: &MPoly) -> MPoly {
    use num_integer::Integer;
    if p.is_zero() {
        return p.clone();
    }
    let mut den = num_bigint::BigInt::from(1);
    let mut num = num_bigint::BigInt::from(0);
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    let mut scale = Rational::new(den.clone(), num_bigint::BigInt::from(1));
    let scaled = p.scale(&scale);
    let mut g = num_bigint::BigInt::from(0);
    for (_, c) in scaled.terms() {
        g = g.gcd(c.numer());
    }
    scale /= Rational::from_integer(g);
    let out = p.scale(&scale);
    let lead_negative = out.terms().last().map(|(_, c)| c < &Rational::zero()).unwrap_or(false);
    if lead_negative {
        out.scale(&-Rational::from_integer(1.into()))
    } else {
        out
    }
}
