//! Independent dimension counts by dense row reduction over Q.
//!
//! For every T-weight in a window the dimension of a graded piece is computed
//! twice: once from a Gröbner basis by counting standard monomials, once by
//! reducing explicit spanning sets of monomial multiples of `f` and `g`.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::cases::ThetaIdeal;
use crate::graded::{leading_ideals, monomials_of_degree, GradedModule, TorsionFree};
use crate::linalg::{self, SparseRow};
use crate::mpoly::{exp_add, exp_divides, weight_of, Exp, MAX_VARS};

/// Dimension disagreement at one weight: `(weight, groebner, dense)`.
pub type Mismatch = (i64, usize, usize);

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub degree: u32,
    pub truncation: u32,
    pub weights_checked: usize,
    pub graded_mismatches: Vec<Mismatch>,
    pub torsion_free_mismatches: Vec<Mismatch>,
    /// `N ⊆ N'` and `minor · N' ⊆ N`.
    pub saturation_consistent: bool,
    pub passed: bool,
}

/// Monomials in variables with the given (negative) weights whose weight is exactly `target`.
pub fn monomials_of_weight(weights: &[i64], target: i64) -> Vec<Exp> {
    fn rec(weights: &[i64], i: usize, left: i64, cur: &mut Exp, out: &mut Vec<Exp>) {
        if i == weights.len() {
            if left == 0 {
                out.push(*cur);
            }
            return;
        }
        let w = weights[i];
        debug_assert!(w < 0);
        let mut k = 0;
        let mut rest = left;
        while rest <= 0 {
            cur[i] = k;
            rec(weights, i + 1, rest, cur, out);
            k += 1;
            rest -= w;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if target <= 0 {
        rec(weights, 0, target, &mut [0; MAX_VARS], &mut out);
    }
    out
}

/// Weights `w_i - c` for generator weights `w_i` and `0 <= c <= truncation * min|x weight|`.
fn weight_window(m: &GradedModule, truncation: u32) -> BTreeSet<i64> {
    let step = m.x_weights.iter().map(|w| w.abs()).min().unwrap_or(1);
    let depth = truncation as i64 * step;
    m.gen_weights.iter().flat_map(|&w| (0..=depth).map(move |c| w - c)).collect()
}

/// `dim (R^G / N)_W` by counting monomials outside the leading-term ideals.
fn standard_count(m: &GradedModule, leads: &[Vec<Exp>], w: i64) -> usize {
    m.gen_weights
        .iter()
        .zip(leads)
        .map(|(&gw, lt)| {
            monomials_of_weight(&m.x_weights, w - gw)
                .iter()
                .filter(|b| !lt.iter().any(|l| exp_divides(l, b)))
                .count()
        })
        .sum()
}

fn free_count(m: &GradedModule, w: i64) -> usize {
    m.gen_weights.iter().map(|&gw| monomials_of_weight(&m.x_weights, w - gw).len()).sum()
}

/// `dim (gr^d)_W` straight from `f` and `g`.
pub fn dense_graded_dim(th: &ThetaIdeal, d: u32, w: i64) -> usize {
    let (ny, nx) = (th.ny, th.nx);
    let yw = th.y_weights();
    let xw = th.x_weights();
    let ys = th.y_vars();
    // Coordinates: y^a x^b with |a| <= d and total weight w.
    let mut coords: HashMap<Exp, usize> = HashMap::new();
    let mut top = 0;
    for k in 0..=d {
        for a in monomials_of_degree(ny, k) {
            for b in monomials_of_weight(&xw, w - weight_of(&a, &yw)) {
                let mut e = a;
                e[ny..ny + nx].copy_from_slice(&b[..nx]);
                let n = coords.len();
                coords.insert(e, n);
                if k == d {
                    top += 1;
                }
            }
        }
    }
    let is_top = |e: &Exp| e[..ny].iter().map(|&v| v as u32).sum::<u32>() == d;
    let mut rows: Vec<SparseRow> = Vec::new();
    for h in th.generators() {
        let wh = h.homogeneous_weight(&th.weights).expect("homogeneous generator");
        let ord = h.min_degree_in(&ys).unwrap_or(0);
        if ord > d {
            continue;
        }
        for k in 0..=(d - ord) {
            for a in monomials_of_degree(ny, k) {
                for b in monomials_of_weight(&xw, w - wh - weight_of(&a, &yw)) {
                    let mut mult = a;
                    mult[ny..ny + nx].copy_from_slice(&b[..nx]);
                    let mut row = SparseRow::new();
                    for (e, c) in h.terms() {
                        let p = exp_add(e, &mult);
                        if let Some(&idx) = coords.get(&p) {
                            row.insert(idx, c.clone());
                        }
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let full = linalg::rank(rows.iter().cloned());
    let low_cols: BTreeSet<usize> = coords.iter().filter(|(e, _)| !is_top(e)).map(|(_, i)| *i).collect();
    let low = linalg::rank(rows.iter().map(|r| r.iter().filter(|(c, _)| low_cols.contains(c)).map(|(c, v)| (*c, v.clone())).collect()));
    top - (full - low)
}

/// `dim N'_W` by reducing the monomial multiples of the given generators.
fn dense_submodule_dim(m: &GradedModule, w: i64) -> usize {
    let ring = m.ring();
    let g = m.num_generators();
    let mut coords: HashMap<(usize, Exp), usize> = HashMap::new();
    for (i, &gw) in m.gen_weights.iter().enumerate() {
        for b in monomials_of_weight(&m.x_weights, w - gw) {
            let n = coords.len();
            coords.insert((i, b), n);
        }
    }
    let mut rows = Vec::new();
    for v in &m.relations {
        let Some(vw) = v.weight(&m.x_weights, &m.gen_weights) else { continue };
        let entries = ring.entries(v, g);
        for b in monomials_of_weight(&m.x_weights, w - vw) {
            let mut row = SparseRow::new();
            for (i, p) in entries.iter().enumerate() {
                for (e, c) in p.terms() {
                    let idx = coords[&(i, exp_add(e, &b))];
                    row.insert(idx, c.clone());
                }
            }
            row.retain(|_, c| !c.is_zero());
            rows.push(row);
        }
    }
    linalg::rank(rows)
}

/// Compares Gröbner-side and dense dimension counts for one degree.
pub fn check_degree(th: &ThetaIdeal, piece: &GradedModule, tf: &TorsionFree, truncation: u32) -> OracleReport {
    let weights = weight_window(piece, truncation);
    let basis_module = GradedModule { relations: tf.relation_basis.clone(), ..piece.clone() };
    let piece_leads = leading_ideals(&basis_module);
    let tf_leads = leading_ideals(&tf.module);
    let mut graded_mismatches = Vec::new();
    let mut torsion_free_mismatches = Vec::new();
    for &w in &weights {
        let gb = standard_count(&basis_module, &piece_leads, w);
        let dense = dense_graded_dim(th, piece.degree, w);
        if gb != dense {
            graded_mismatches.push((w, gb, dense));
        }
        let gb_sub = free_count(&tf.module, w) - standard_count(&tf.module, &tf_leads, w);
        let dense_sub = dense_submodule_dim(&tf.module, w);
        if gb_sub != dense_sub {
            torsion_free_mismatches.push((w, gb_sub, dense_sub));
        }
    }
    let ring = piece.ring();
    let scaled: Vec<_> = tf.module.relations.iter().map(|v| ring.mul_poly(&tf.minor, v)).collect();
    let saturation_consistent = ring.contains_all(&tf.module.relations, &tf.relation_basis)
        && (tf.relation_rank == piece.num_generators() || ring.contains_all(&tf.relation_basis, &scaled));
    let passed = graded_mismatches.is_empty() && torsion_free_mismatches.is_empty() && saturation_consistent;
    OracleReport {
        degree: piece.degree,
        truncation,
        weights_checked: weights.len(),
        graded_mismatches,
        torsion_free_mismatches,
        saturation_consistent,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_enumeration() {
        // x1 of weight -1, x2 of weight -2: weight -4 has x1^4, x1^2 x2, x2^2.
        assert_eq!(monomials_of_weight(&[-1, -2], -4).len(), 3);
        assert_eq!(monomials_of_weight(&[-2, -2], -3).len(), 0);
        assert_eq!(monomials_of_weight(&[-3], 0).len(), 1);
        assert!(monomials_of_weight(&[-3], 2).is_empty());
    }
}
