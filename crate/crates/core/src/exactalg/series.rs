use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{ExactError, LaurentPoly, Rational};

/// Default largest `n` accepted by [`series_expand_p`].
pub const P_SERIES_CAP: u32 = 12;

/// Power series in `s` and `q` truncated below `(s_order, q_order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    s_order: u32,
    q_order: u32,
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BiSeries {
    pub fn one(s_order: u32, q_order: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if s_order > 0 && q_order > 0 {
            coeffs.insert((0, 0), Rational::one());
        }
        Self { s_order, q_order, coeffs }
    }

    pub fn orders(&self) -> (u32, u32) {
        (self.s_order, self.q_order)
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if i >= self.s_order || j >= self.q_order || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.orders(), other.orders(), "truncation orders differ");
        let mut out = Self { s_order: self.s_order, q_order: self.q_order, coeffs: BTreeMap::new() };
        for (&(i1, j1), c1) in &self.coeffs {
            for (&(i2, j2), c2) in &other.coeffs {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// Truncated `1 / (1 - s^a q^b)` for `a >= 1`.
    pub fn geometric(a: u32, b: u32, s_order: u32, q_order: u32) -> Self {
        assert!(a >= 1);
        let mut out = Self { s_order, q_order, coeffs: BTreeMap::new() };
        let mut k = 0;
        while k * a < s_order {
            out.add_term(k * a, k * b, Rational::one());
            k += 1;
        }
        out
    }

    /// Coefficient of `s^i` as a polynomial in `q`.
    pub fn s_coefficient(&self, i: u32) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(a, b), c) in self.coeffs.range((i, 0)..=(i, u32::MAX)) {
            debug_assert_eq!(a, i);
            p.add_term(b as i64, c);
        }
        p
    }
}

/// Coefficients `P_0(q), ..., P_{n_max}(q)` of
/// `prod_{m >= 1} 1 / ((1 - s^m q^m)^r (1 - s^m q^{m+1}))`.
pub fn series_expand_p(r: u32, n_max: u32) -> Result<Vec<LaurentPoly>, ExactError> {
    series_expand_p_with_cap(r, n_max, P_SERIES_CAP)
}

pub fn series_expand_p_with_cap(r: u32, n_max: u32, cap: u32) -> Result<Vec<LaurentPoly>, ExactError> {
    if n_max > cap {
        return Err(ExactError::SeriesCap { n_max, cap });
    }
    let s_order = n_max + 1;
    // Each s^m carries at most q^{m+1} <= q^{2m}.
    let q_order = 2 * n_max + 1;
    let mut acc = BiSeries::one(s_order, q_order);
    for m in 1..=n_max {
        for _ in 0..r {
            acc = acc.mul(&BiSeries::geometric(m, m, s_order, q_order));
        }
        acc = acc.mul(&BiSeries::geometric(m, m + 1, s_order, q_order));
    }
    Ok((0..=n_max).map(|i| acc.s_coefficient(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_for_four_points() {
        let ps = series_expand_p(4, 1).unwrap();
        assert_eq!(ps[0], LaurentPoly::one());
        assert_eq!(ps[1], LaurentPoly::from_terms([(1, 4), (2, 1)]));
    }

    #[test]
    fn p0_is_one() {
        for r in 0..5 {
            assert_eq!(series_expand_p(r, 0).unwrap(), vec![LaurentPoly::one()]);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(series_expand_p(1, 13).is_err());
        assert!(series_expand_p_with_cap(1, 13, 13).is_ok());
    }

    // Independent oracle: P_n(q) counts multipartitions of n on one curve
    // component and r points, weighted by q^{n + lambda(C)_1}.
    fn brute_p(r: usize, n: usize) -> LaurentPoly {
        fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=n.min(max)).rev() {
                for mut rest in partitions(n - first, first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        fn go(colors: usize, n: usize, acc_exp: i64, out: &mut LaurentPoly, first: bool) {
            if colors == 0 {
                if n == 0 {
                    out.add_term(acc_exp, &Rational::one());
                }
                return;
            }
            for k in 0..=n {
                for lam in partitions(k, k) {
                    let extra = if first { lam.first().copied().unwrap_or(0) as i64 } else { 0 };
                    go(colors - 1, n - k, acc_exp + extra, out, false);
                }
            }
        }
        let mut out = LaurentPoly::zero();
        go(r + 1, n, 0, &mut out, true);
        out.shift(n as i64)
    }

    #[test]
    fn matches_multipartition_count() {
        for r in 0..5 {
            let ps = series_expand_p(r as u32, 5).unwrap();
            for (n, p) in ps.iter().enumerate() {
                assert_eq!(*p, brute_p(r, n), "r={r} n={n}");
            }
        }
        // One point: P_2 = 2q^2 + 2q^3 + q^4.
        assert_eq!(series_expand_p(1, 2).unwrap()[2], LaurentPoly::from_terms([(2, 2), (3, 2), (4, 1)]));
    }
}
