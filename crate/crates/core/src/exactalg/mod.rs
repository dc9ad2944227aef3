//! Exact scalar and univariate polynomial arithmetic over the rationals.

mod laurent;
mod quantum;
mod series;

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

pub use laurent::LaurentPoly;
pub use quantum::{
    gaussian_binomial, plethystic_power, qp_eval_at_one, qp_to_poly, quantum_int, quantum_multinomial, AtOne,
    NotPolynomial, QuantumProduct,
};
pub use series::{series_expand_p, series_expand_p_with_cap, BiSeries, P_SERIES_CAP};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The shared sample set used for "for all t > 1" comparisons.
pub fn default_samples() -> Vec<Rational> {
    vec![ratio(3, 2), rat(2), rat(3)]
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("quantum integer needs n >= 1 and a >= 1 (got n={n}, a={a})")]
    QuantumIntArgs { n: u64, a: u64 },
    #[error("multinomial parts sum to {sum}, expected {n}")]
    MultinomialParts { n: u64, sum: u64 },
    #[error("series expansion order {n_max} exceeds cap {cap}")]
    SeriesCap { n_max: u32, cap: u32 },
}

/// Anything that can be evaluated at a rational point `t > 1`.
pub trait RayFunction {
    fn value_at(&self, t: &Rational) -> Rational;
}

impl RayFunction for LaurentPoly {
    fn value_at(&self, t: &Rational) -> Rational {
        self.eval(t)
    }
}

impl RayFunction for QuantumProduct {
    fn value_at(&self, t: &Rational) -> Rational {
        self.eval(t).expect("quantum product evaluated at a pole")
    }
}

impl RayFunction for Rational {
    fn value_at(&self, _t: &Rational) -> Rational {
        self.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RayVerdict {
    /// Equal at every sample.
    Equal,
    /// Strictly less at every sample.
    Less,
    /// Less or equal at every sample, with at least one strict and one equal.
    LessOrEqual,
    Greater,
    GreaterOrEqual,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaySample {
    #[serde(serialize_with = "ser_rat")]
    pub t: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub left: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub right: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayComparison {
    pub verdict: RayVerdict,
    pub samples: Vec<RaySample>,
    /// Always `true`: the verdict only covers the sample points.
    pub sample_based: bool,
}

impl RayComparison {
    /// Less-or-equal at every sample (including all-equal).
    pub fn is_le(&self) -> bool {
        matches!(self.verdict, RayVerdict::Equal | RayVerdict::Less | RayVerdict::LessOrEqual)
    }
}

pub fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Compares `p` and `q` at each sample point `t > 1`.
pub fn poly_compare_on_ray<P: RayFunction + ?Sized, Q: RayFunction + ?Sized>(
    p: &P,
    q: &Q,
    samples: &[Rational],
) -> RayComparison {
    assert!(!samples.is_empty(), "at least one sample point is required");
    let (mut lt, mut eq, mut gt) = (false, false, false);
    let samples: Vec<RaySample> = samples
        .iter()
        .map(|t| {
            let left = p.value_at(t);
            let right = q.value_at(t);
            match left.cmp(&right) {
                Ordering::Less => lt = true,
                Ordering::Equal => eq = true,
                Ordering::Greater => gt = true,
            }
            RaySample { t: t.clone(), left, right }
        })
        .collect();
    let verdict = match (lt, eq, gt) {
        (false, true, false) => RayVerdict::Equal,
        (true, false, false) => RayVerdict::Less,
        (true, true, false) => RayVerdict::LessOrEqual,
        (false, false, true) => RayVerdict::Greater,
        (false, true, true) => RayVerdict::GreaterOrEqual,
        _ => RayVerdict::Mixed,
    };
    RayComparison { verdict, samples, sample_based: true }
}
