use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rat, Rational};

/// Sparse Laurent polynomial in one variable `t` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    /// `c * t^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// `t^e` with coefficient one.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &rat(c));
        }
        p
    }

    /// Integer coefficient list starting at exponent 0: `[c0, c1, ...]`.
    pub fn from_coeff_slice(cs: &[i64]) -> Self {
        Self::from_terms(cs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    pub fn add_term(&mut self, e: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// True when all exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `coeff(a + b - k) = coeff(k)` where `a`, `b` are the extreme exponents.
    /// The zero polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        let (Some(a), Some(b)) = (self.min_exp(), self.max_exp()) else {
            return true;
        };
        self.coeffs.iter().all(|(e, c)| self.coeffs.get(&(a + b - e)) == Some(c))
    }

    /// Substitutes `t -> t^a`.
    pub fn subs_power(&self, a: i64) -> Self {
        assert!(a != 0, "substitution t -> t^0 is not allowed");
        let mut p = Self::zero();
        for (e, c) in &self.coeffs {
            p.add_term(e * a, c);
        }
        p
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        assert!(
            !t.is_zero() || self.is_polynomial(),
            "evaluating a Laurent polynomial with negative exponents at t = 0"
        );
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            acc += c * rat_pow(t, *e);
        }
        acc
    }

    /// Value at `t = 1`, i.e. the sum of coefficients.
    pub fn at_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Exact division with remainder by a nonzero Laurent polynomial.
    ///
    /// Both operands are normalised to start at exponent 0, ordinary long
    /// division is performed, and the quotient is shifted back. The returned
    /// remainder is zero exactly when `other` divides `self` in `Q[t, t^-1]`.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let so = self.min_exp().unwrap();
        let oo = other.min_exp().unwrap();
        let mut rem = self.shift(-so);
        let den = other.shift(-oo);
        let dd = den.max_exp().unwrap();
        let lc = den.leading_coeff().unwrap().clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.max_exp() {
            if rd < dd {
                break;
            }
            let c = rem.coeff(rd) / &lc;
            let k = rd - dd;
            quot.add_term(k, &c);
            for (e, x) in den.terms() {
                rem.add_term(e + k, &(-(x * &c)));
            }
        }
        (quot.shift(so - oo), rem.shift(so))
    }

    /// Quotient when `other` divides `self` exactly, otherwise `None`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }

    /// Coefficients as `i64` when they are all small integers.
    pub fn integer_coeffs(&self) -> Option<BTreeMap<i64, i64>> {
        self.coeffs
            .iter()
            .map(|(e, c)| {
                if c.is_integer() {
                    c.to_integer().to_i64().map(|v| (*e, v))
                } else {
                    None
                }
            })
            .collect()
    }
}

pub(crate) fn rat_pow(t: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(t.clone(), e as usize)
    } else {
        num_traits::pow(t.recip(), (-e) as usize)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match *e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        // Keys are emitted in numeric exponent order.
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (k, v) in m {
            let e: i64 = k.parse().map_err(serde::de::Error::custom)?;
            let c: Rational = v.parse().map_err(serde::de::Error::custom)?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(Rational::from_integer(c))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, &(-c));
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}
