//! Associated graded pieces of `A/J` over the coefficient ring `R`, their
//! torsion-free quotients, and graded K-classes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use hilbfix_core::exactalg::{rat, LaurentPoly, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cases::{build_theta_ideal, CaseError, CaseSpec, ThetaIdeal};
use crate::groebner::{ModuleRing, Position, TermOrder, Vector};
use crate::linalg::{self, SparseRow};
use crate::mpoly::{exp_divides, exp_lcm, weight_of, Exp, MPoly, MAX_VARS};
use crate::oracle::{self, OracleReport};

/// Seed of the specialization points used to certify ranks.
const RANK_SEED: u64 = 0x5eed_2b17;
const RANK_ATTEMPTS: usize = 8;
const RANK_AGREEMENTS: usize = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error(transparent)]
    Case(#[from] CaseError),
    #[error("degree {degree}: specialized rank {specialized} exceeds symbolic rank {symbolic}")]
    RankInconsistent { degree: u32, symbolic: usize, specialized: usize },
    #[error("degree {degree}: rank {symbolic} not confirmed by specialization")]
    RankUncertified { degree: u32, symbolic: usize },
    #[error("degree {degree}: colon generator not divisible by the minor")]
    ColonNotDivisible { degree: u32 },
    #[error("degree {degree}: free resolution longer than two steps")]
    ResolutionTooLong { degree: u32 },
    #[error("degree {degree}: resolution class {resolution} differs from leading-term class {leading}")]
    RoutesDisagree { degree: u32, resolution: String, leading: String },
    #[error("degree {degree}: relation is not homogeneous")]
    Inhomogeneous { degree: u32 },
    #[error("no termination below the degree cap {cap}")]
    CapReached { cap: u32 },
    #[error("torsion-free part reappears in degree {degree} after vanishing")]
    Reappeared { degree: u32 },
}

/// Generators of the initial ideal of `(f, g)` with respect to the y-adic filtration.
///
/// The lift `h(Ty)/T^{ord h}` is saturated by `T` through elimination of `Z` in
/// `(lifts, ZT - 1)`; setting `T = 0` in the Z-free part of the basis gives the forms.
pub fn initial_form_ideal(th: &ThetaIdeal) -> Vec<MPoly> {
    let (ny, nx) = (th.ny, th.nx);
    let base = ny + nx;
    let (zi, ti) = (base, base + 1);
    let nv = base + 2;
    let ys = th.y_vars();
    let lift = |h: &MPoly| {
        let ord = h.min_degree_in(&ys).unwrap_or(0) as u16;
        MPoly::from_terms(
            nv,
            h.terms().map(|(e, c)| {
                let mut out = *e;
                let yd: u16 = e[..ny].iter().sum();
                out[ti] = yd - ord;
                (out, c.clone())
            }),
        )
    };
    let mut zt = [0; MAX_VARS];
    zt[zi] = 1;
    zt[ti] = 1;
    let unit = &MPoly::monomial(nv, zt, rat(1)) - &MPoly::one(nv);
    let rest: Vec<usize> = (0..base).chain([ti]).collect();
    let ring = ModuleRing::new(nv, TermOrder::block_grevlex(&[&[zi], &rest]), Position::Pot);
    let gens: Vec<Vector> = th.generators().iter().map(lift).chain([unit]).map(|p| ring.poly_vector(&p)).collect();
    let gb = ring.groebner(&gens);
    let map: Vec<usize> = (0..base).collect();
    let forms: Vec<MPoly> = gb
        .iter()
        .map(|v| ring.entries(v, 1).remove(0))
        .filter(|p| p.degree_in(&[zi]) == Some(0))
        .map(|p| p.set_zero(ti).relabel(base, &map))
        .filter(|p| !p.is_zero())
        .collect();
    y_first_basis(th, &forms)
}

/// Reduced basis of the ideal generated by `forms` under the y-first block order.
fn y_first_basis(th: &ThetaIdeal, forms: &[MPoly]) -> Vec<MPoly> {
    let ys: Vec<usize> = th.y_vars();
    let xs: Vec<usize> = (th.ny..th.nvars()).collect();
    let ring = ModuleRing::new(th.nvars(), TermOrder::block_grevlex(&[&ys, &xs]), Position::Pot);
    let gens: Vec<Vector> = forms.iter().map(|p| ring.poly_vector(p)).collect();
    let mut out: Vec<MPoly> = ring.groebner(&gens).iter().map(|v| ring.entries(v, 1).remove(0)).collect();
    for p in &out {
        debug_assert_eq!(p.degree_in(&ys), p.min_degree_in(&ys), "initial form is not y-homogeneous");
    }
    out.sort_by_key(|p| (p.degree_in(&ys), p.num_terms()));
    out
}

/// A graded `R`-module `R^G / N` with homogeneous generators.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub degree: u32,
    pub x_weights: Vec<i64>,
    pub gen_weights: Vec<i64>,
    pub gen_labels: Vec<String>,
    pub relations: Vec<Vector>,
}

impl GradedModule {
    pub fn nx(&self) -> usize {
        self.x_weights.len()
    }

    pub fn num_generators(&self) -> usize {
        self.gen_weights.len()
    }

    pub fn ring(&self) -> ModuleRing {
        coefficient_ring(self.nx())
    }

    /// Relation columns as per-generator polynomials.
    pub fn relation_matrix(&self) -> Vec<Vec<MPoly>> {
        let ring = self.ring();
        self.relations.iter().map(|v| ring.entries(v, self.num_generators())).collect()
    }

    fn check_homogeneous(&self) -> Result<(), GradedError> {
        for v in &self.relations {
            if !v.is_zero() && v.weight(&self.x_weights, &self.gen_weights).is_none() {
                return Err(GradedError::Inhomogeneous { degree: self.degree });
            }
        }
        Ok(())
    }
}

pub fn coefficient_ring(nx: usize) -> ModuleRing {
    ModuleRing::new(nx, TermOrder::grevlex(nx), Position::Pot)
}

/// Exponent vectors of the monomials of degree `d` in `n` variables, first variable descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exp> {
    let mut out = Vec::new();
    fn rec(n: usize, i: usize, left: u32, cur: &mut Exp, out: &mut Vec<Exp>) {
        if i + 1 == n {
            cur[i] = left as u16;
            out.push(*cur);
            cur[i] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k as u16;
            rec(n, i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push([0; MAX_VARS]);
        }
        return out;
    }
    rec(n, 0, d, &mut [0; MAX_VARS], &mut out);
    out
}

fn split(e: &Exp, ny: usize, nx: usize) -> (Exp, Exp) {
    let mut y = [0; MAX_VARS];
    let mut x = [0; MAX_VARS];
    y[..ny].copy_from_slice(&e[..ny]);
    x[..nx].copy_from_slice(&e[ny..ny + nx]);
    (y, x)
}

fn monomial_label(names: &[&str], e: &Exp) -> String {
    let parts: Vec<String> = names
        .iter()
        .enumerate()
        .filter(|(i, _)| e[*i] > 0)
        .map(|(i, n)| if e[i] == 1 { n.to_string() } else { format!("{n}^{}", e[i]) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Presentation of the y-degree `d` piece of `A / in(J)`.
pub fn graded_piece(th: &ThetaIdeal, forms: &[MPoly], d: u32) -> GradedModule {
    let (ny, nx) = (th.ny, th.nx);
    let ys = th.y_vars();
    let gens = monomials_of_degree(ny, d);
    let index: HashMap<Exp, usize> = gens.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let yw = th.y_weights();
    let ring = coefficient_ring(nx);
    let mut relations = Vec::new();
    for phi in forms {
        let Some(e) = phi.degree_in(&ys) else { continue };
        if e > d {
            continue;
        }
        for mu in monomials_of_degree(ny, d - e) {
            let mut cols: BTreeMap<usize, MPoly> = BTreeMap::new();
            for (exp, c) in phi.terms() {
                let (y, x) = split(exp, ny, nx);
                let mut yy = y;
                for i in 0..ny {
                    yy[i] += mu[i];
                }
                let comp = index[&yy];
                cols.entry(comp).or_insert_with(|| MPoly::zero(nx)).add_term(x, c.clone());
            }
            let entries: Vec<(usize, &MPoly)> = cols.iter().map(|(k, p)| (*k, p)).collect();
            let v = ring.vector(&entries);
            if !v.is_zero() {
                relations.push(v);
            }
        }
    }
    GradedModule {
        degree: d,
        x_weights: th.x_weights(),
        gen_weights: gens.iter().map(|e| weight_of(e, &yw)).collect(),
        gen_labels: gens.iter().map(|e| monomial_label(&th.names[..ny], e)).collect(),
        relations,
    }
}

/// Torsion-free quotient `R^G / N'` together with how it was obtained.
#[derive(Clone, Debug)]
pub struct TorsionFree {
    /// Presentation whose relations are the reduced basis of `N'`.
    pub module: GradedModule,
    /// Basis of the original relation module `N`.
    pub relation_basis: Vec<Vector>,
    /// Rank of `N` over the fraction field.
    pub relation_rank: usize,
    /// Maximal minor used for the saturation.
    pub minor: MPoly,
    /// Colon steps until the module stopped growing.
    pub colon_steps: usize,
    /// Specialization points that confirmed the rank.
    pub certified_by: usize,
}

impl TorsionFree {
    /// Rank of the quotient module.
    pub fn rank(&self) -> usize {
        self.module.num_generators() - self.relation_rank
    }
}

fn pivot_components(gb: &[Vector]) -> BTreeSet<u32> {
    gb.iter().map(|v| v.lead().comp).collect()
}

fn specialization_point(rng: &mut ChaCha8Rng, nx: usize) -> Vec<Rational> {
    (0..nx)
        .map(|_| {
            let mut p: i64 = rng.gen_range(-20..=20);
            if p == 0 {
                p = 21;
            }
            let q: i64 = rng.gen_range(1..=7);
            Rational::new(p.into(), q.into())
        })
        .collect()
}

/// Rank of the relation matrix with the coefficient variables specialized to `point`.
fn specialized_rank(m: &GradedModule, point: &[Rational]) -> usize {
    let cols = m.relation_matrix();
    linalg::rank(cols.iter().map(|col| -> SparseRow {
        col.iter().enumerate().map(|(i, p)| (i, p.eval(point))).filter(|(_, v)| !v.is_zero()).collect()
    }))
}

/// Certifies the symbolic rank by specializations; returns how many points agreed.
fn certify_rank(m: &GradedModule, symbolic: usize) -> Result<usize, GradedError> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANK_SEED ^ m.degree as u64);
    let mut agreed = 0;
    for _ in 0..RANK_ATTEMPTS {
        let r = specialized_rank(m, &specialization_point(&mut rng, m.nx()));
        if r > symbolic {
            return Err(GradedError::RankInconsistent { degree: m.degree, symbolic, specialized: r });
        }
        if r == symbolic {
            agreed += 1;
            if agreed == RANK_AGREEMENTS {
                return Ok(agreed);
            }
        }
    }
    Err(GradedError::RankUncertified { degree: m.degree, symbolic })
}

/// `N : h` for a submodule `N ⊂ R^G` given by a basis, via `N ∩ hR^G`.
fn colon(ring: &ModuleRing, basis: &[Vector], h: &MPoly, g: usize, degree: u32) -> Result<Vec<Vector>, GradedError> {
    let shift = g as u32;
    let mut gens: Vec<Vector> = basis.iter().map(|v| ring.add(v, &ring.remap(v, |c| c + shift))).collect();
    for i in 0..g {
        gens.push(ring.vector(&[(i, h)]));
    }
    let gb = ring.groebner(&gens);
    let mut out = Vec::new();
    for v in gb.iter().filter(|v| v.min_comp().is_some_and(|c| c >= shift)) {
        let entries = ring.entries(&ring.remap(v, |c| c - shift), g);
        let mut quot = Vec::with_capacity(g);
        for p in &entries {
            if p.is_zero() {
                quot.push(p.clone());
                continue;
            }
            quot.push(p.div_exact(h).ok_or(GradedError::ColonNotDivisible { degree })?);
        }
        let pairs: Vec<(usize, &MPoly)> = quot.iter().enumerate().filter(|(_, p)| !p.is_zero()).collect();
        out.push(ring.vector(&pairs));
    }
    Ok(ring.groebner(&out))
}

/// Quotient of `m` by its torsion submodule.
pub fn torsion_free_quotient(m: &GradedModule) -> Result<TorsionFree, GradedError> {
    m.check_homogeneous()?;
    let ring = m.ring();
    let g = m.num_generators();
    let basis = ring.groebner(&m.relations);
    let pivots = pivot_components(&basis);
    let r = pivots.len();
    let certified_by = certify_rank(m, r)?;
    // Diagonal entries of a triangular r×r minor.
    let mut minor = MPoly::one(m.nx());
    for &p in &pivots {
        let col = basis.iter().find(|v| v.lead().comp == p).expect("pivot column");
        minor = &minor * &ring.entries(col, g)[p as usize];
    }
    let mut current = basis.clone();
    let mut steps = 0;
    if r > 0 && r < g && !minor.is_one_like() {
        loop {
            let next = colon(&ring, &current, &minor, g, m.degree)?;
            steps += 1;
            if next == current {
                break;
            }
            current = next;
        }
    }
    if r == g {
        // Full rank: the quotient is torsion and N' is everything.
        current = (0..g).map(|i| ring.vector(&[(i, &MPoly::one(m.nx()))])).collect();
    }
    let module = GradedModule {
        degree: m.degree,
        x_weights: m.x_weights.clone(),
        gen_weights: m.gen_weights.clone(),
        gen_labels: m.gen_labels.clone(),
        relations: current,
    };
    Ok(TorsionFree { module, relation_basis: basis, relation_rank: r, minor, colon_steps: steps, certified_by })
}

trait OneLike {
    fn is_one_like(&self) -> bool;
}

impl OneLike for MPoly {
    /// A nonzero constant: the colon by it changes nothing.
    fn is_one_like(&self) -> bool {
        self.num_terms() == 1 && self.total_degree() == Some(0)
    }
}

fn weight_class(weights: &[i64], sign: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for &w in weights {
        out.add_term(w, &rat(sign));
    }
    out
}

/// Weights of a minimal homogeneous generating set of the span of `gens`.
fn minimal_generators(ring: &ModuleRing, gens: &[Vector], var_w: &[i64], comp_w: &[i64]) -> Vec<(Vector, i64)> {
    let mut items: Vec<(Vector, i64)> = gens
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| (v.clone(), v.weight(var_w, comp_w).expect("homogeneous generator")))
        .collect();
    // Coefficient variables have negative weight, so heavier elements come first.
    items.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.num_terms().cmp(&b.0.num_terms())));
    let mut kept: Vec<(Vector, i64)> = Vec::new();
    let mut basis: Vec<Vector> = Vec::new();
    for (v, w) in items {
        if !ring.normal_form(&v, &basis).is_zero() {
            kept.push((v, w));
            let vs: Vec<Vector> = kept.iter().map(|(v, _)| v.clone()).collect();
            basis = ring.groebner(&vs);
        }
    }
    kept
}

/// Generators of the syzygies of `gens` in `R^{gens.len()}`.
fn syzygies(ring: &ModuleRing, gens: &[Vector], rank: usize) -> Vec<Vector> {
    let shift = rank as u32;
    let lifted: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(j, v)| ring.add(v, &ring.vector(&[(rank + j, &MPoly::one(ring.nvars))])))
        .collect();
    ring.groebner(&lifted)
        .iter()
        .filter(|v| v.min_comp().is_some_and(|c| c >= shift))
        .map(|v| ring.remap(v, |c| c - shift))
        .collect()
}

/// Class from a graded free resolution `0 -> F2 -> F1 -> F0`.
pub fn class_by_resolution(m: &GradedModule) -> Result<LaurentPoly, GradedError> {
    let ring = m.ring();
    let xw = &m.x_weights;
    let f1 = minimal_generators(&ring, &m.relations, xw, &m.gen_weights);
    let f1_vecs: Vec<Vector> = f1.iter().map(|(v, _)| v.clone()).collect();
    let f1_w: Vec<i64> = f1.iter().map(|(_, w)| *w).collect();
    let syz1 = syzygies(&ring, &f1_vecs, m.num_generators());
    let f2 = minimal_generators(&ring, &syz1, xw, &f1_w);
    let f2_vecs: Vec<Vector> = f2.iter().map(|(v, _)| v.clone()).collect();
    if !syzygies(&ring, &f2_vecs, f1.len()).is_empty() {
        return Err(GradedError::ResolutionTooLong { degree: m.degree });
    }
    let mut class = weight_class(&m.gen_weights, 1);
    class -= &weight_class(&f1_w, 1);
    class += &weight_class(&f2.iter().map(|(_, w)| *w).collect::<Vec<_>>(), 1);
    Ok(class)
}

/// Minimal generators of the leading-term ideal of each component, sorted by the first exponent.
pub fn leading_ideals(m: &GradedModule) -> Vec<Vec<Exp>> {
    let g = m.num_generators();
    let mut per: Vec<Vec<Exp>> = vec![Vec::new(); g];
    for v in &m.relations {
        let t = v.lead();
        per[t.comp as usize].push(t.exp);
    }
    for list in per.iter_mut() {
        let all = list.clone();
        list.retain(|e| !all.iter().any(|o| o != e && exp_divides(o, e)));
        list.sort();
        list.dedup();
    }
    per
}

/// Class from the leading terms of a Gröbner basis of the relations (at most two variables).
pub fn class_by_leading_terms(m: &GradedModule) -> LaurentPoly {
    assert!(m.nx() <= 2, "staircase formula needs at most two coefficient variables");
    let xw = &m.x_weights;
    let mut class = LaurentPoly::zero();
    for (i, gens) in leading_ideals(m).iter().enumerate() {
        let w = m.gen_weights[i];
        let mut part = LaurentPoly::t_pow(0);
        for e in gens {
            part.add_term(weight_of(e, xw), &rat(-1));
        }
        for pair in gens.windows(2) {
            part.add_term(weight_of(&exp_lcm(&pair[0], &pair[1]), xw), &rat(1));
        }
        class += &part.shift(w);
    }
    class
}

/// Whether a torsion-free quotient is free: its minimal number of generators equals its rank.
pub fn is_free(tf: &TorsionFree) -> bool {
    let m = &tf.module;
    let zero = vec![Rational::zero(); m.nx()];
    let fibre_rank = linalg::rank(m.relation_matrix().iter().map(|col| -> SparseRow {
        col.iter().enumerate().map(|(i, p)| (i, p.eval(&zero))).filter(|(_, v)| !v.is_zero()).collect()
    }));
    fibre_rank == tf.relation_rank
}

/// Graded class of a torsion-free module, computed by both routes.
pub fn graded_class(m: &GradedModule) -> Result<LaurentPoly, GradedError> {
    let resolution = class_by_resolution(m)?;
    let leading = class_by_leading_terms(m);
    if resolution != leading {
        return Err(GradedError::RoutesDisagree {
            degree: m.degree,
            resolution: resolution.to_string(),
            leading: leading.to_string(),
        });
    }
    Ok(resolution)
}

/// One nonzero torsion-free piece.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeSummary {
    pub degree: u32,
    pub generators: usize,
    pub relations: usize,
    pub rank: usize,
    pub class: LaurentPoly,
    pub free: bool,
    pub colon_steps: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Hilb2Result {
    pub case: CaseSpec,
    pub polynomial: LaurentPoly,
    pub per_degree_classes: Vec<LaurentPoly>,
    pub freeness_flags: Vec<bool>,
    pub oracle_checked: bool,
    pub initial_forms: Vec<String>,
    pub degrees: Vec<DegreeSummary>,
    pub last_degree: u32,
    #[serde(serialize_with = "hilbfix_core::exactalg::ser_rat")]
    pub rank_at_one: Rational,
    pub expected_rank: u64,
    pub constant_term_one: bool,
    pub palindromic: bool,
    pub all_free: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<OracleReport>,
}

impl Hilb2Result {
    pub fn specializes_correctly(&self) -> bool {
        self.rank_at_one == Rational::from_integer(self.expected_rank.into())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Hilb2Options {
    /// Run the dense oracle up to this x-degree.
    pub oracle_truncation: Option<u32>,
}

impl Default for Hilb2Options {
    fn default() -> Self {
        Self { oracle_truncation: None }
    }
}

/// Rank of `m` without saturating.
fn quotient_rank(m: &GradedModule) -> usize {
    let ring = m.ring();
    m.num_generators() - pivot_components(&ring.groebner(&m.relations)).len()
}

/// Sum over y-degrees of the classes of the torsion-free graded pieces.
pub fn equivariant_mult_with(spec: &CaseSpec, opts: Hilb2Options) -> Result<Hilb2Result, GradedError> {
    let th = build_theta_ideal(spec)?;
    let forms = initial_form_ideal(&th);
    let cap = spec.degree_cap();
    let mut degrees = Vec::new();
    let mut oracle_reports = Vec::new();
    let mut polynomial = LaurentPoly::zero();
    let mut d = 0;
    let last = loop {
        if d > cap {
            return Err(GradedError::CapReached { cap });
        }
        let piece = graded_piece(&th, &forms, d);
        let tf = torsion_free_quotient(&piece)?;
        if let Some(trunc) = opts.oracle_truncation {
            oracle_reports.push(oracle::check_degree(&th, &piece, &tf, trunc));
        }
        if tf.rank() == 0 {
            let next = graded_piece(&th, &forms, d + 1);
            if quotient_rank(&next) != 0 {
                return Err(GradedError::Reappeared { degree: d + 1 });
            }
            break d;
        }
        let class = graded_class(&tf.module)?;
        polynomial += &class;
        degrees.push(DegreeSummary {
            degree: d,
            generators: piece.num_generators(),
            relations: piece.relations.len(),
            rank: tf.rank(),
            class,
            free: is_free(&tf),
            colon_steps: tf.colon_steps,
        });
        d += 1;
    };
    let all_free = degrees.iter().all(|s| s.free);
    Ok(Hilb2Result {
        case: spec.clone(),
        rank_at_one: polynomial.at_one(),
        expected_rank: spec.expected_rank(),
        constant_term_one: polynomial.coeff(0).is_one(),
        palindromic: polynomial.is_palindromic(),
        all_free,
        per_degree_classes: degrees.iter().map(|s| s.class.clone()).collect(),
        freeness_flags: degrees.iter().map(|s| s.free).collect(),
        oracle_checked: opts.oracle_truncation.is_some() && oracle_reports.iter().all(|r| r.passed),
        initial_forms: forms.iter().map(|p| p.format_with(&th.names)).collect(),
        degrees,
        last_degree: last,
        polynomial,
        oracle: oracle_reports,
    })
}

/// Equivariant multiplicity of the fixed point described by `spec`.
pub fn equivariant_mult_hilb2(spec: &CaseSpec) -> Result<LaurentPoly, GradedError> {
    Ok(equivariant_mult_with(spec, Hilb2Options::default())?.polynomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::{Chart, LocalPoint};
    use hilbfix_core::exactalg::quantum_int;

    fn q(n: u64, a: u64) -> LaurentPoly {
        quantum_int(n, a).unwrap()
    }

    #[test]
    fn monomial_lists() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(1, 4).len(), 1);
        assert_eq!(monomials_of_degree(2, 0), vec![[0; MAX_VARS]]);
    }

    #[test]
    fn single_point_gives_quantum_integer() {
        let spec = CaseSpec::Single { point: LocalPoint::new(1, 2, 1, 2), e: 3 };
        assert_eq!(equivariant_mult_hilb2(&spec).unwrap(), q(2, 2));
    }

    #[test]
    fn punctual_y_rows() {
        // Equation y with l = 1, w = 2.
        let p = LocalPoint::new(0, 1, 1, 2);
        let u2 = CaseSpec::Punctual { chart: Chart::U2, point: p, e: 2 };
        assert_eq!(equivariant_mult_hilb2(&u2).unwrap(), q(2, 3));
        let u1 = CaseSpec::Punctual { chart: Chart::U1, point: p, e: 2 };
        assert_eq!(equivariant_mult_hilb2(&u1).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn separated_unequal_orders() {
        let spec = CaseSpec::Separated { p: LocalPoint::new(0, 1, 1, 2), q: LocalPoint::new(1, 2, 1, 2), e: 2 + 1 };
        assert!(spec.validate().is_err());
        let spec = CaseSpec::Separated { p: LocalPoint::new(0, 1, 1, 3), q: LocalPoint::new(1, 2, 1, 2), e: 3 };
        assert_eq!(equivariant_mult_hilb2(&spec).unwrap(), &q(1, 3) * &q(4, 2));
    }

    #[test]
    fn xy2_degree_four_piece_saturates_to_one_generator() {
        let spec = CaseSpec::Punctual { chart: Chart::U2, point: LocalPoint::new(1, 2, 1, 2), e: 3 };
        let th = build_theta_ideal(&spec).unwrap();
        let forms = initial_form_ideal(&th);
        let tf = torsion_free_quotient(&graded_piece(&th, &forms, 4)).unwrap();
        assert_eq!(tf.rank(), 1);
        assert_eq!(graded_class(&tf.module).unwrap(), LaurentPoly::t_pow(4 * 3));
    }

    #[test]
    fn free_module_classes() {
        let m = GradedModule {
            degree: 0,
            x_weights: vec![-1, -2],
            gen_weights: vec![0, 5],
            gen_labels: vec!["a".into(), "b".into()],
            relations: Vec::new(),
        };
        assert_eq!(graded_class(&m).unwrap(), LaurentPoly::from_terms([(0, 1), (5, 1)]));
    }
}
