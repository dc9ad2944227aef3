//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use hilbfix_core::exactalg::{rat, Rational};
use num_traits::{One, Zero};

/// Most variables any ring in this crate uses (4 chart variables plus two auxiliaries).
pub const MAX_VARS: usize = 8;

pub type Exp = [u16; MAX_VARS];

pub fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o += x;
    }
    out
}

pub fn exp_divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `b / a`, assuming `a | b`.
pub fn exp_sub(b: &Exp, a: &Exp) -> Exp {
    let mut out = *b;
    for (o, x) in out.iter_mut().zip(a) {
        *o -= x;
    }
    out
}

pub fn exp_lcm(a: &Exp, b: &Exp) -> Exp {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o = (*o).max(*x);
    }
    out
}

pub fn exp_coprime(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn exp_degree(a: &Exp) -> u32 {
    a.iter().map(|&x| x as u32).sum()
}

/// Unit exponent vector for variable `i`.
pub fn var_exp(i: usize) -> Exp {
    let mut e = [0; MAX_VARS];
    e[i] = 1;
    e
}

/// A polynomial in `nvars` variables. Term order plays no role here; the
/// Gröbner engine imposes one when it converts to its own representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exp, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, [0; MAX_VARS], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::monomial(nvars, var_exp(i), Rational::one())
    }

    pub fn monomial(nvars: usize, exp: Exp, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, Rational)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exp: Exp, c: Rational) {
        debug_assert!(exp[self.nvars..].iter().all(|&x| x == 0));
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &Exp) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&[0; MAX_VARS])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(exp_degree).max()
    }

    pub fn degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| vars.iter().map(|&v| e[v] as u32).sum()).max()
    }

    pub fn min_degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| vars.iter().map(|&v| e[v] as u32).sum()).min()
    }

    /// Weighted degree of every term, if they all agree.
    pub fn homogeneous_weight(&self, weights: &[i64]) -> Option<i64> {
        let mut it = self.terms.keys().map(|e| weight_of(e, weights));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Sum of the terms of the given degree in `vars`.
    pub fn part_of_degree(&self, vars: &[usize], d: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(e, _)| vars.iter().map(|&v| e[v] as u32).sum::<u32>() == d)
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn mul_monomial(&self, exp: &Exp, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (exp_add(e, exp), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes each variable `i` by `images[i]` (all in a ring with `target_nvars` variables).
    pub fn substitute(&self, images: &[MPoly]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, MPoly::nvars);
        let mut cache: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(p.nvars())]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e[..self.nvars].iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                term = &term * &cache[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates every variable at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (i, x) in point.iter().enumerate() {
                    for _ in 0..e[i] {
                        v *= x;
                    }
                }
                v
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Sets variable `i` to zero.
    pub fn set_zero(&self, i: usize) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().filter(|(e, _)| e[i] == 0).map(|(e, c)| (*e, c.clone())))
    }

    /// Largest power of variable `i` dividing every term.
    pub fn var_content(&self, i: usize) -> u16 {
        self.terms.keys().map(|e| e[i]).min().unwrap_or(0)
    }

    /// Divides by `x_i^k`, which must divide every term.
    pub fn div_var_power(&self, i: usize, k: u16) -> Self {
        let mut d = [0; MAX_VARS];
        d[i] = k;
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (exp_sub(e, &d), c.clone())))
    }

    /// Re-embeds into a ring with a different variable layout: variable `i` goes to `map[i]`.
    pub fn relabel(&self, target_nvars: usize, map: &[usize]) -> Self {
        Self::from_terms(
            target_nvars,
            self.terms.iter().map(|(e, c)| {
                let mut out = [0; MAX_VARS];
                for (i, &j) in map.iter().enumerate() {
                    out[j] += e[i];
                }
                (out, c.clone())
            }),
        )
    }

    /// Divides by the leading coefficient in the exponent-lexicographic sense.
    pub fn monic(&self) -> Self {
        match self.terms.iter().next_back() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dl, dc) = d.terms.iter().next_back().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if !exp_divides(&dl, &e) {
                return None;
            }
            let m = exp_sub(&e, &dl);
            let coef = c / &dc;
            rem = &rem - &d.mul_monomial(&m, &coef);
            q.add_term(m, coef);
        }
        Some(q)
    }

    pub fn format_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = (0..self.nvars)
                .filter(|&i| e[i] > 0)
                .map(|i| if e[i] == 1 { names[i].to_string() } else { format!("{}^{}", names[i], e[i]) })
                .collect();
            let body = mono.join("*");
            let s = match (body.is_empty(), c == &rat(1), c == &rat(-1)) {
                (true, _, _) => c.to_string(),
                (false, true, _) => body,
                (false, _, true) => format!("-{body}"),
                _ => format!("{c}*{body}"),
            };
            parts.push(s);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

pub fn weight_of(e: &Exp, weights: &[i64]) -> i64 {
    weights.iter().zip(e).map(|(w, &x)| w * x as i64).sum()
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.format_with(&refs))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&rat(-1))
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(exp_add(e1, e2), c1 * c2);
            }
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}
