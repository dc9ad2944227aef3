//! Fiber characters of Procesque bundles, the pairing symmetry between very
//! stable ideals, and the fiber `chi_I(t)` at the identity point.

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    default_samples, plethystic_power, poly_compare_on_ray, quantum_int, quantum_multinomial, LaurentPoly,
    QuantumProduct, Rational, RayComparison, RayVerdict,
};
use crate::hilb::{is_very_stable, very_stable_mult, virtual_mult, weight_gap, HitchinBase};
use crate::partitions::{theta_matrices, weak_compositions, Composition, Multipartition, Partition};
use crate::surfaces::SurfaceModel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MirrorError {
    #[error("component {0} is not a very stable point")]
    NotVeryStable(String),
    #[error("points of an ideal must be distinct")]
    RepeatedPoint,
    #[error("no fiber data for the bundle of {bundle} at {point}")]
    MissingFiber { bundle: String, point: String },
    #[error("ideals have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("no identity-point data on {0}")]
    NoIdentityData(&'static str),
    #[error("equivariant multiplicity of {0} is not available")]
    MultiplicityUnavailable(String),
    #[error("fiber character {0} has non-integer or negative coefficients")]
    BadCharacter(String),
}

/// `sum over weak compositions lambda of n with c parts of t^{sum a_i lambda_i} [n; lambda]_{t^b}`,
/// where `a` lists the weights of a representation with `c = |a|`.
pub fn renorm_character(a: &[u64], n: usize, b: u64) -> LaurentPoly {
    assert!(!a.is_empty(), "the representation must be nonzero");
    let mut out = LaurentPoly::zero();
    for comp in weak_compositions(n, a.len()) {
        let shift: u64 = a.iter().zip(&comp.parts).map(|(ai, li)| ai * *li as u64).sum();
        let parts: Vec<u64> = comp.parts.iter().map(|&x| x as u64).collect();
        let q = quantum_multinomial(n as u64, &parts, b).expect("composition sums to n");
        out += &q.shift(shift as i64);
    }
    out
}

/// `G_{n,c}(t) = sum over weak compositions lambda of n with c parts of [n; lambda]_t`.
pub fn g_poly(n: usize, c: usize) -> LaurentPoly {
    renorm_character(&vec![0; c], n, 1)
}

/// Weights of a character with nonnegative integer coefficients, with multiplicity.
pub fn character_exponents(v: &LaurentPoly) -> Result<Vec<u64>, MirrorError> {
    let ints = v.integer_coeffs().ok_or_else(|| MirrorError::BadCharacter(v.to_string()))?;
    let mut out = Vec::new();
    for (e, c) in ints {
        if e < 0 || c < 0 {
            return Err(MirrorError::BadCharacter(v.to_string()));
        }
        out.extend(std::iter::repeat(e as u64).take(c as usize));
    }
    Ok(out)
}

/// `I = cap_i I_{p_i}^{(1^{lambda_i})}` for distinct very stable points `p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeryStableIdeal {
    pub points: Vec<usize>,
    pub exponents: Vec<usize>,
}

impl VeryStableIdeal {
    pub fn new(surface: &SurfaceModel, items: &[(usize, usize)]) -> Result<Self, MirrorError> {
        let mut points = Vec::new();
        let mut exponents = Vec::new();
        for &(p, k) in items {
            let rec = surface
                .components
                .get(p)
                .ok_or_else(|| MirrorError::NotVeryStable(format!("#{p}")))?;
            if !rec.very_stable || rec.point_type.is_none() {
                return Err(MirrorError::NotVeryStable(rec.label.clone()));
            }
            if points.contains(&p) {
                return Err(MirrorError::RepeatedPoint);
            }
            if k > 0 {
                points.push(p);
                exponents.push(k);
            }
        }
        Ok(Self { points, exponents })
    }

    pub fn n(&self) -> usize {
        self.exponents.iter().sum()
    }

    pub fn composition(&self) -> Composition {
        Composition::new(self.exponents.clone())
    }

    pub fn involves_curve(&self, surface: &SurfaceModel) -> bool {
        self.points.iter().any(|&p| surface.components[p].is_curve())
    }

    pub fn multipartition(&self) -> Multipartition {
        Multipartition::new(self.points.iter().zip(&self.exponents).map(|(&p, &k)| (p, Partition::column(k))))
    }

    pub fn describe(&self, surface: &SurfaceModel) -> String {
        self.multipartition().describe(surface)
    }
}

/// All very stable ideals of length `n` on a surface, in a fixed order.
pub fn very_stable_ideals(surface: &SurfaceModel, n: usize, include_curve: bool) -> Vec<VeryStableIdeal> {
    let pts: Vec<usize> = surface
        .components
        .iter()
        .filter(|c| c.very_stable && c.point_type.is_some() && (include_curve || c.is_isolated()))
        .map(|c| c.id)
        .collect();
    if pts.is_empty() {
        return Vec::new();
    }
    weak_compositions(n, pts.len())
        .into_iter()
        .map(|comp| {
            let items: Vec<(usize, usize)> = pts.iter().copied().zip(comp.parts).collect();
            VeryStableIdeal::new(surface, &items).expect("points are very stable and distinct")
        })
        .collect()
}

fn fiber_character(surface: &SurfaceModel, bundle: usize, point: usize) -> Result<(crate::surfaces::FiberEntry, u32), MirrorError> {
    let entry = surface.fiber(bundle, point).ok_or_else(|| MirrorError::MissingFiber {
        bundle: surface.components[bundle].label.clone(),
        point: surface.components[point].label.clone(),
    })?;
    Ok((entry, surface.components[point].pos_weight))
}

/// One summand of the Θ-matrix expansion.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaTerm {
    pub matrix: Vec<Vec<usize>>,
    pub summand: LaurentPoly,
}

/// `chi_t(P_I|_J)` together with its Θ-matrix summands.
pub fn procesque_fiber_terms(
    surface: &SurfaceModel,
    i: &VeryStableIdeal,
    j: &VeryStableIdeal,
) -> Result<(LaurentPoly, Vec<ThetaTerm>), MirrorError> {
    if i.n() != j.n() {
        return Err(MirrorError::LengthMismatch(i.n(), j.n()));
    }
    let mut total = LaurentPoly::zero();
    let mut terms = Vec::new();
    for a in theta_matrices(&i.composition(), &j.composition()).expect("totals agree") {
        let mut summand = LaurentPoly::one();
        for (col, &q) in j.points.iter().enumerate() {
            let w = surface.components[q].pos_weight as u64;
            let a_col: Vec<u64> = a.entries.iter().map(|row| row[col] as u64).collect();
            summand = &summand * &quantum_multinomial(j.exponents[col] as u64, &a_col, w).expect("column sums");
        }
        for (row, &p) in i.points.iter().enumerate() {
            for (col, &q) in j.points.iter().enumerate() {
                let aij = a.entries[row][col];
                if aij == 0 {
                    continue;
                }
                let (entry, w) = fiber_character(surface, p, q)?;
                let v = entry.character(w);
                summand = &summand * &renorm_character(&character_exponents(&v)?, aij, w as u64);
            }
        }
        total += &summand;
        terms.push(ThetaTerm { matrix: a.entries, summand });
    }
    Ok((total, terms))
}

pub fn procesque_fiber(surface: &SurfaceModel, i: &VeryStableIdeal, j: &VeryStableIdeal) -> Result<LaurentPoly, MirrorError> {
    Ok(procesque_fiber_terms(surface, i, j)?.0)
}

/// `m_J(t) = [n; mu]_{t^e} prod_j ([e / w_j]_{t^{w_j}})^{(mu_j)}`.
pub fn very_stable_ideal_mult(surface: &SurfaceModel, j: &VeryStableIdeal) -> LaurentPoly {
    let e = surface.e as u64;
    let mu: Vec<u64> = j.exponents.iter().map(|&k| k as u64).collect();
    let mut q = QuantumProduct::qmultinomial(j.n() as u64, &mu, e);
    for (&p, &k) in j.points.iter().zip(&j.exponents) {
        let w = surface.components[p].pos_weight as u64;
        q = q.mul(&QuantumProduct::qint(e / w, w).plethystic_power(k as u64));
    }
    q.to_poly().expect("multiplicity of a very stable ideal is a polynomial")
}

/// The closed symmetric form
/// `sum_A [n; A]_{t^e} prod_{ij} ([e b_ij / w_j]_{t^{w_j/b_ij}})^{(a_ij)} G_{a_ij, c_ij}(t^{w_j/b_ij})`,
/// which equals `chi_t(P_I|_J) m_J(t)`.
pub fn symmetric_pairing_expression(
    surface: &SurfaceModel,
    i: &VeryStableIdeal,
    j: &VeryStableIdeal,
) -> Result<LaurentPoly, MirrorError> {
    if i.n() != j.n() {
        return Err(MirrorError::LengthMismatch(i.n(), j.n()));
    }
    let e = surface.e as u64;
    let n = i.n() as u64;
    let mut total = LaurentPoly::zero();
    for a in theta_matrices(&i.composition(), &j.composition()).expect("totals agree") {
        let flat: Vec<u64> = a.entries.iter().flatten().map(|&x| x as u64).collect();
        let mut summand = quantum_multinomial(n, &flat, e).expect("entries sum to n");
        for (row, &p) in i.points.iter().enumerate() {
            for (col, &q) in j.points.iter().enumerate() {
                let aij = a.entries[row][col];
                if aij == 0 {
                    continue;
                }
                let (entry, w) = fiber_character(surface, p, q)?;
                let step = (w / entry.b) as u64;
                let base = quantum_int(e * entry.b as u64 / w as u64, step).expect("positive");
                summand = &summand * &plethystic_power(&base, aij as u64);
                summand = &summand * &g_poly(aij, entry.c as usize).subs_power(step as i64);
            }
        }
        total += &summand;
    }
    Ok(total)
}

/// `sum_{A in Theta(lambda, mu)} [n; A]_t`, the value of `chi_t(P_I|_J) m_J(t)` on `T*E`
/// for ideals supported at distinct points of the curve.
pub fn te_pairing_value(lambda: &Composition, mu: &Composition) -> Result<LaurentPoly, MirrorError> {
    if lambda.total() != mu.total() {
        return Err(MirrorError::LengthMismatch(lambda.total(), mu.total()));
    }
    let n = lambda.total() as u64;
    Ok(theta_matrices(lambda, mu)
        .expect("totals agree")
        .into_iter()
        .map(|a| {
            let flat: Vec<u64> = a.entries.iter().flatten().map(|&x| x as u64).collect();
            quantum_multinomial(n, &flat, 1).expect("entries sum to n")
        })
        .sum())
}

/// `poly * factor`, with the factor kept in factored form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredValue {
    pub poly: LaurentPoly,
    pub factor: QuantumProduct,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairingReport {
    pub i: String,
    pub j: String,
    /// `chi_t(P_I|_J)`.
    pub fiber_at_j: LaurentPoly,
    /// `chi_t(P_J|_I)`.
    pub fiber_at_i: LaurentPoly,
    pub m_i: LaurentPoly,
    pub m_j: LaurentPoly,
    /// `chi_t(P_J|_I) m_I(t) chi_t(Sym A)`.
    pub left_side: FactoredValue,
    /// `chi_t(P_I|_J) m_J(t) chi_t(Sym A)`.
    pub right_side: FactoredValue,
    /// Closed symmetric form for `(I, J)`.
    pub symmetric_value: LaurentPoly,
    pub equal: bool,
    pub symmetric_agrees: bool,
    /// Set when a curve point takes part; the symmetry is only proved for isolated points.
    pub involves_curve: bool,
    pub theta_terms: Vec<ThetaTerm>,
}

impl PairingReport {
    pub fn passed(&self) -> bool {
        self.equal && self.symmetric_agrees
    }
}

pub fn pairing_check(surface: &SurfaceModel, i: &VeryStableIdeal, j: &VeryStableIdeal) -> Result<PairingReport, MirrorError> {
    let (fiber_at_j, theta_terms) = procesque_fiber_terms(surface, i, j)?;
    let fiber_at_i = procesque_fiber(surface, j, i)?;
    let m_i = very_stable_ideal_mult(surface, i);
    let m_j = very_stable_ideal_mult(surface, j);
    let sym_a = HitchinBase::hilb(surface.e as u64, i.n() as u64).sym_inverse().recip();
    let left_side = FactoredValue { poly: &fiber_at_i * &m_i, factor: sym_a.clone() };
    let right_side = FactoredValue { poly: &fiber_at_j * &m_j, factor: sym_a };
    let symmetric_value = symmetric_pairing_expression(surface, i, j)?;
    let symmetric_swapped = symmetric_pairing_expression(surface, j, i)?;
    Ok(PairingReport {
        i: i.describe(surface),
        j: j.describe(surface),
        equal: left_side == right_side,
        symmetric_agrees: symmetric_value == right_side.poly && symmetric_swapped == left_side.poly,
        involves_curve: i.involves_curve(surface) || j.involves_curve(surface),
        fiber_at_j,
        fiber_at_i,
        m_i,
        m_j,
        left_side,
        right_side,
        symmetric_value,
        theta_terms,
    })
}

/// `chi_I(t) = [n; {lambda(p)'}]_{t^e} prod_{p, l} G_{lambda(p)'_l, V_p|_e}(t)`, where
/// `G_{n,V}` is [`renorm_character`] with base `e`.
pub fn chi_i(surface: &SurfaceModel, mp: &Multipartition) -> Result<LaurentPoly, MirrorError> {
    let e = surface.e as u64;
    let cols: Vec<u64> = mp.all_columns().into_iter().map(|c| c as u64).collect();
    let mut out = quantum_multinomial(mp.size() as u64, &cols, e).expect("columns sum to n");
    for (id, lam) in mp.support() {
        let rec = &surface.components[id];
        let v = rec.procesque_at_e.as_ref().ok_or(MirrorError::NoIdentityData(surface.name))?;
        let exps = character_exponents(v)?;
        for c in lam.transpose().parts() {
            out = &out * &renorm_character(&exps, *c, e);
        }
    }
    Ok(out)
}

/// Closed-form `m_I(t)` where one is known without the Gröbner engine:
/// very stable components and single points.
pub fn closed_form_mult(surface: &SurfaceModel, mp: &Multipartition) -> Option<LaurentPoly> {
    if !weight_gap(surface, mp) {
        return None;
    }
    if is_very_stable(surface, mp) {
        return very_stable_mult(surface, mp).ok();
    }
    if mp.size() == 1 {
        let (id, _) = mp.support().next()?;
        return surface.mult_poly(id).ok();
    }
    None
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SandwichReport {
    pub label: String,
    pub very_stable: bool,
    pub mu: QuantumProduct,
    pub chi: LaurentPoly,
    pub m: LaurentPoly,
    pub mu_vs_chi: RayComparison,
    pub chi_vs_m: RayComparison,
    /// Both inequalities hold at every sample.
    pub inequalities_hold: bool,
    /// Both sides are equalities at every sample.
    pub all_equal: bool,
    /// Inequalities hold, and equalities occur exactly for very stable components.
    pub passed: bool,
}

/// Checks `mu_I(t) <= chi_I(t) <= m_I(t)` at the sample points. `m` overrides the
/// closed-form multiplicity, which is only known for very stable components and `n = 1`.
pub fn sandwich_check(
    surface: &SurfaceModel,
    mp: &Multipartition,
    m: Option<&LaurentPoly>,
    samples: Option<&[Rational]>,
) -> Result<SandwichReport, MirrorError> {
    let m = match m {
        Some(m) => m.clone(),
        None => closed_form_mult(surface, mp).ok_or_else(|| MirrorError::MultiplicityUnavailable(mp.describe(surface)))?,
    };
    let defaults = default_samples();
    let samples = samples.unwrap_or(&defaults);
    let mu = virtual_mult(surface, mp);
    let chi = chi_i(surface, mp)?;
    let mu_vs_chi = poly_compare_on_ray(&mu, &chi, samples);
    let chi_vs_m = poly_compare_on_ray(&chi, &m, samples);
    let very_stable = is_very_stable(surface, mp);
    let inequalities_hold = mu_vs_chi.is_le() && chi_vs_m.is_le();
    let all_equal = mu_vs_chi.verdict == RayVerdict::Equal && chi_vs_m.verdict == RayVerdict::Equal;
    Ok(SandwichReport {
        label: mp.describe(surface),
        very_stable,
        passed: inequalities_hold && (all_equal == very_stable),
        mu,
        chi,
        m,
        mu_vs_chi,
        chi_vs_m,
        inequalities_hold,
        all_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};
    use crate::surfaces::{surface, SurfaceId};

    fn poly(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeff_slice(cs)
    }

    #[test]
    fn renorm_examples() {
        assert_eq!(renorm_character(&[0, 2, 5], 1, 3), LaurentPoly::from_terms([(0, 1), (2, 1), (5, 1)]));
        for n in 0..5 {
            assert_eq!(renorm_character(&[0, 0, 0], n, 2), g_poly(n, 3).subs_power(2));
        }
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_poly(1, 2), LaurentPoly::from_int(2));
        for n in 0..6 {
            assert_eq!(g_poly(n, 1), LaurentPoly::one());
        }
        assert_eq!(g_poly(2, 2), poly(&[3, 1]));
    }

    #[test]
    fn renorm_closed_form() {
        // chi(V) = c [b]_{t^a} with base ab.
        for (a, b, c) in [(1u64, 2u64, 1usize), (2, 3, 1), (1, 6, 1), (3, 2, 2), (1, 1, 3), (2, 2, 2)] {
            let v = quantum_int(b, a).unwrap().scale(&rat(c as i64));
            let exps = character_exponents(&v).unwrap();
            for n in 0..=5usize {
                let lhs = renorm_character(&exps, n, a * b);
                let rhs = &plethystic_power(&quantum_int(b, a).unwrap(), n as u64) * &g_poly(n, c).subs_power(a as i64);
                assert_eq!(lhs, rhs, "a={a} b={b} c={c} n={n}");
            }
        }
    }

    #[test]
    fn fiber_single_point_trivial() {
        let s = surface(SurfaceId::SZ3);
        let q = s.identity_point.unwrap();
        let i = VeryStableIdeal::new(s, &[(q, 1)]).unwrap();
        assert_eq!(procesque_fiber(s, &i, &i).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn fiber_sz2_curve_bundle_at_point() {
        let s = surface(SurfaceId::SZ2);
        let i = VeryStableIdeal::new(s, &[(0, 1)]).unwrap();
        let j = VeryStableIdeal::new(s, &[(1, 1)]).unwrap();
        assert_eq!(procesque_fiber(s, &i, &j).unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn te_fiber_times_m_is_theta_sum() {
        let s = surface(SurfaceId::TE);
        for (lam, mu) in [(2usize, 2usize), (3, 3)] {
            let i = VeryStableIdeal::new(s, &[(0, lam)]).unwrap();
            let j = VeryStableIdeal::new(s, &[(0, mu)]).unwrap();
            let lhs = &procesque_fiber(s, &i, &j).unwrap() * &very_stable_ideal_mult(s, &j);
            assert_eq!(lhs, LaurentPoly::one());
        }
    }

    #[test]
    fn sz6_pairing() {
        let s = surface(SurfaceId::SZ6);
        let y2 = s.isolated_points().find(|p| p.local_eq == Some((0, 2))).unwrap().id;
        let i = VeryStableIdeal::new(s, &[(0, 2)]).unwrap();
        let j = VeryStableIdeal::new(s, &[(y2, 2)]).unwrap();
        let r = pairing_check(s, &i, &j).unwrap();
        assert!(r.passed());
        assert!(r.involves_curve);
    }

    #[test]
    fn chi_examples() {
        let s = surface(SurfaceId::SZ6);
        let x2y4 = s.isolated_points().find(|p| p.local_eq == Some((2, 4))).unwrap().id;
        assert_eq!(chi_i(s, &Multipartition::single(x2y4, Partition::column(1))).unwrap(), poly(&[1, 1, 0, 1, 1]));
        let s3 = surface(SurfaceId::SZ3);
        let wob = s3.isolated_points().find(|p| !p.very_stable).unwrap().id;
        assert_eq!(chi_i(s3, &Multipartition::single(wob, Partition::column(1))).unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn chi_matches_very_stable_mult() {
        for id in [SurfaceId::SZ2, SurfaceId::SZ3, SurfaceId::SZ4, SurfaceId::SZ6] {
            let s = surface(id);
            for n in 1..=3 {
                for mp in crate::partitions::enumerate_multipartitions(s, n).unwrap() {
                    if is_very_stable(s, &mp) {
                        assert_eq!(chi_i(s, &mp).unwrap(), very_stable_mult(s, &mp).unwrap(), "{}", mp.describe(s));
                    }
                }
            }
        }
    }

    #[test]
    fn sandwich_single_wobbly_point() {
        let s3 = surface(SurfaceId::SZ3);
        let wob = s3.isolated_points().find(|p| !p.very_stable).unwrap().id;
        let r = sandwich_check(s3, &Multipartition::single(wob, Partition::column(1)), None, Some(&[rat(2)])).unwrap();
        assert_eq!(r.mu_vs_chi.samples[0].left, ratio(7, 3));
        assert_eq!(r.chi_vs_m.samples[0].left, rat(3));
        assert_eq!(r.chi_vs_m.samples[0].right, rat(5));
        assert!(r.passed);
    }

    #[test]
    fn te_remark() {
        let c = Composition::new(vec![1, 2]);
        let v = te_pairing_value(&c, &c).unwrap();
        let q3 = quantum_int(3, 1).unwrap();
        assert_eq!(v, &q3 * &(LaurentPoly::one() + quantum_int(2, 1).unwrap()));
        assert_ne!(v, &q3 * &q3);
        // At t = 1 the sum counts pairs of multinomials.
        let lam = Composition::new(vec![2, 1, 1]);
        let mu = Composition::new(vec![3, 1]);
        assert_eq!(te_pairing_value(&lam, &mu).unwrap().at_one(), rat(12 * 4));
    }

    #[test]
    fn pairings_symmetric_on_all_parabolic_surfaces() {
        for id in [SurfaceId::SZ2, SurfaceId::SZ3, SurfaceId::SZ4, SurfaceId::SZ6] {
            let s = surface(id);
            for n in 1..=2 {
                let ideals = very_stable_ideals(s, n, true);
                for i in &ideals {
                    for j in &ideals {
                        let r = pairing_check(s, i, j).unwrap();
                        assert!(r.passed(), "{} {} {}", s.name, r.i, r.j);
                    }
                }
            }
        }
    }

    #[test]
    fn sandwich_for_single_points() {
        for id in [SurfaceId::SZ2, SurfaceId::SZ3, SurfaceId::SZ4, SurfaceId::SZ6] {
            let s = surface(id);
            for p in s.isolated_points() {
                let mp = Multipartition::single(p.id, Partition::column(1));
                let r = sandwich_check(s, &mp, None, None).unwrap();
                assert!(r.passed, "{} {}", s.name, p.label);
                assert_eq!(r.chi.at_one(), r.m.at_one());
            }
        }
    }
}
