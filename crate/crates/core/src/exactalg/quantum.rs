use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::laurent::rat_pow;
use super::{rat, ExactError, LaurentPoly, Rational};

/// `prefactor * prod (1 - t^n_i) / prod (1 - t^d_j)` kept in factored form.
///
/// Identical exponents in numerator and denominator are cancelled on
/// construction; both multisets are stored sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuantumProduct {
    coeff: Rational,
    shift: i64,
    num: Vec<u64>,
    den: Vec<u64>,
}

/// Value of a [`QuantumProduct`] at `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtOne {
    Value(Rational),
    Pole,
}

/// Returned by [`qp_to_poly`] when the denominator does not divide the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotPolynomial {
    pub remainder: LaurentPoly,
}

impl QuantumProduct {
    pub fn new(coeff: Rational, shift: i64, mut num: Vec<u64>, mut den: Vec<u64>) -> Self {
        assert!(
            num.iter().chain(den.iter()).all(|&x| x > 0),
            "factor exponents must be positive"
        );
        num.sort_unstable();
        den.sort_unstable();
        // Multiset difference of two sorted vectors.
        let (mut n2, mut d2) = (Vec::with_capacity(num.len()), Vec::with_capacity(den.len()));
        let (mut i, mut j) = (0, 0);
        while i < num.len() && j < den.len() {
            match num[i].cmp(&den[j]) {
                std::cmp::Ordering::Less => {
                    n2.push(num[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    d2.push(den[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        n2.extend_from_slice(&num[i..]);
        d2.extend_from_slice(&den[j..]);
        if coeff.is_zero() {
            return Self::zero();
        }
        Self { coeff, shift, num: n2, den: d2 }
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), 0, vec![], vec![])
    }

    pub fn zero() -> Self {
        Self { coeff: Rational::zero(), shift: 0, num: vec![], den: vec![] }
    }

    pub fn monomial(coeff: Rational, shift: i64) -> Self {
        Self::new(coeff, shift, vec![], vec![])
    }

    /// `prod (1 - t^n_i) / prod (1 - t^d_j)`.
    pub fn ratio(num: Vec<u64>, den: Vec<u64>) -> Self {
        Self::new(Rational::one(), 0, num, den)
    }

    /// `[n]_{t^a} = (1 - t^{na}) / (1 - t^a)`.
    pub fn qint(n: u64, a: u64) -> Self {
        assert!(n >= 1 && a >= 1);
        Self::ratio(vec![n * a], vec![a])
    }

    /// `[n]!_{t^a}`.
    pub fn qfactorial(n: u64, a: u64) -> Self {
        Self::ratio((1..=n).map(|i| i * a).collect(), vec![a; n as usize])
    }

    /// Quantum multinomial `[n; parts]_{t^a}` in factored form; `parts` must sum to `n`.
    pub fn qmultinomial(n: u64, parts: &[u64], a: u64) -> Self {
        assert_eq!(parts.iter().sum::<u64>(), n, "multinomial parts must sum to n");
        let mut q = Self::qfactorial(n, a);
        for &p in parts {
            q = q.div(&Self::qfactorial(p, a));
        }
        q
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator_exponents(&self) -> &[u64] {
        &self.num
    }

    pub fn denominator_exponents(&self) -> &[u64] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut num = self.num.clone();
        num.extend_from_slice(&other.num);
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        Self::new(&self.coeff * &other.coeff, self.shift + other.shift, num, den)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self::new(self.coeff.recip(), -self.shift, self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    /// `q(t)^{(b)} = prod_{i=1..b} q(t^i)`.
    pub fn plethystic_power(&self, b: u64) -> Self {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for i in 1..=b {
            num.extend(self.num.iter().map(|x| x * i));
            den.extend(self.den.iter().map(|x| x * i));
        }
        let tri = (b * (b + 1) / 2) as i64;
        Self::new(num_traits::pow(self.coeff.clone(), b as usize), self.shift * tri, num, den)
    }

    /// Substitutes `t -> t^a`.
    pub fn subs_power(&self, a: u64) -> Self {
        Self::new(
            self.coeff.clone(),
            self.shift * a as i64,
            self.num.iter().map(|x| x * a).collect(),
            self.den.iter().map(|x| x * a).collect(),
        )
    }

    pub fn numerator_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::monomial(self.coeff.clone(), self.shift);
        for &n in &self.num {
            p = &p * &one_minus_t_pow(n);
        }
        p
    }

    pub fn denominator_poly(&self) -> LaurentPoly {
        self.den.iter().map(|&d| one_minus_t_pow(d)).product()
    }

    pub fn to_poly(&self) -> Result<LaurentPoly, NotPolynomial> {
        qp_to_poly(self)
    }

    pub fn at_one(&self) -> AtOne {
        qp_eval_at_one(self)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let mut den = Rational::one();
        for &d in &self.den {
            den *= Rational::one() - rat_pow(t, d as i64);
        }
        if den.is_zero() {
            return None;
        }
        let mut num = &self.coeff * rat_pow(t, self.shift);
        for &n in &self.num {
            num *= Rational::one() - rat_pow(t, n as i64);
        }
        Some(num / den)
    }

    /// Equality as rational functions (cross-multiplied).
    pub fn value_eq(&self, other: &Self) -> bool {
        self.numerator_poly() * other.denominator_poly() == other.numerator_poly() * self.denominator_poly()
    }

    /// Equality with a Laurent polynomial as rational functions.
    pub fn value_eq_poly(&self, p: &LaurentPoly) -> bool {
        self.numerator_poly() == p * &self.denominator_poly()
    }
}

fn one_minus_t_pow(n: u64) -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (n as i64, -1)])
}

impl fmt::Display for QuantumProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", LaurentPoly::monomial(self.coeff.clone(), self.shift))?;
        for n in &self.num {
            write!(f, "(1-t^{n})")?;
        }
        if !self.den.is_empty() {
            write!(f, " / ")?;
            for d in &self.den {
                write!(f, "(1-t^{d})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QuantumProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for QuantumProduct {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            coeff: String,
            shift: i64,
            numerator: &'a [u64],
            denominator: &'a [u64],
        }
        Repr {
            coeff: self.coeff.to_string(),
            shift: self.shift,
            numerator: &self.num,
            denominator: &self.den,
        }
        .serialize(s)
    }
}

/// `[n]_{t^a} = 1 + t^a + ... + t^{a(n-1)}`.
pub fn quantum_int(n: u64, a: u64) -> Result<LaurentPoly, ExactError> {
    if n == 0 || a == 0 {
        return Err(ExactError::QuantumIntArgs { n, a });
    }
    Ok(LaurentPoly::from_terms((0..n).map(|i| ((i * a) as i64, 1))))
}

/// Gaussian binomial `[n choose k]_t` by the Pascal recurrence.
pub fn gaussian_binomial(n: u64, k: u64) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k) as usize;
    // row[j] = [m choose j]_t for the current m.
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for m in 1..=n as usize {
        let mut next = vec![LaurentPoly::zero(); (m.min(k)) + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            // [m, j] = [m-1, j-1] + t^j [m-1, j]
            if j >= 1 {
                if let Some(p) = row.get(j - 1) {
                    *slot += p;
                }
            }
            if j <= m - 1 {
                if let Some(p) = row.get(j) {
                    *slot += &p.shift(j as i64);
                }
            }
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `[n choose parts]_{t^a}`; the parts (zeros allowed) must sum to `n`.
pub fn quantum_multinomial(n: u64, parts: &[u64], a: u64) -> Result<LaurentPoly, ExactError> {
    let total: u64 = parts.iter().sum();
    if total != n {
        return Err(ExactError::MultinomialParts { n, sum: total });
    }
    if a == 0 {
        return Err(ExactError::QuantumIntArgs { n, a });
    }
    let mut acc = LaurentPoly::one();
    let mut remaining = n;
    for &p in parts {
        if p == 0 {
            continue;
        }
        acc = &acc * &gaussian_binomial(remaining, p);
        remaining -= p;
    }
    Ok(acc.subs_power(a as i64))
}

pub fn qp_to_poly(q: &QuantumProduct) -> Result<LaurentPoly, NotPolynomial> {
    let (quot, rem) = q.numerator_poly().div_rem(&q.denominator_poly());
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(NotPolynomial { remainder: rem })
    }
}

pub fn qp_eval_at_one(q: &QuantumProduct) -> AtOne {
    use std::cmp::Ordering::*;
    match q.num.len().cmp(&q.den.len()) {
        Greater => AtOne::Value(Rational::zero()),
        Less => AtOne::Pole,
        Equal => {
            let mut v = q.coeff.clone();
            for &n in &q.num {
                v *= rat(n as i64);
            }
            for &d in &q.den {
                v /= rat(d as i64);
            }
            AtOne::Value(v)
        }
    }
}

/// `p(t)^{(b)} = prod_{i=1..b} p(t^i)`.
pub fn plethystic_power(p: &LaurentPoly, b: u64) -> LaurentPoly {
    (1..=b as i64).map(|i| p.subs_power(i)).product()
}
