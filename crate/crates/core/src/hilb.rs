//! Fixed components of `Hilb^n S`: tangent characters, virtual and genuine
//! multiplicities in closed form, very stable classification, flow order,
//! tidality and generating functions.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{plethystic_power, quantum_int, quantum_multinomial, LaurentPoly, QuantumProduct};
use crate::partitions::{dominates, enumerate_multipartitions, moves_closure, Multipartition, PartitionError};
use crate::surfaces::{FixedPointRecord, SurfaceModel};

/// Largest `n` accepted by [`tidality_report`].
pub const TIDALITY_CAP: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbError {
    #[error("component {0} is not very stable")]
    NotVeryStable(String),
    #[error("component {0} does not satisfy the weight gap condition")]
    NotWeightGap(String),
    #[error("{0} has no curve component; the flow order description only covers such surfaces")]
    FlowScope(&'static str),
    #[error("n = {n} exceeds the cap {cap}")]
    Cap { n: usize, cap: usize },
    #[error("component {0} of the surface is not an isolated point")]
    NotIsolated(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Tangent weights at a point of a fixed component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentCharacter {
    /// Positive weights, sorted.
    pub positive: Vec<i64>,
    /// Negative weights, sorted.
    pub non_positive: Vec<i64>,
    /// Weights equal to zero (tangent to the fixed component).
    pub zero_count: usize,
}

impl TangentCharacter {
    pub fn total(&self) -> usize {
        self.positive.len() + self.non_positive.len() + self.zero_count
    }
}

/// For each box `s` of `lambda(p)` the two weights
/// `alpha (l(s)+1) - beta a(s)` and `-alpha l(s) + beta (a(s)+1)`,
/// where `(alpha, beta)` are the tangent weights of `p`.
pub fn tangent_character(surface: &SurfaceModel, mp: &Multipartition) -> TangentCharacter {
    let mut positive = Vec::new();
    let mut non_positive = Vec::new();
    let mut zero_count = 0;
    for (id, lam) in mp.support() {
        let (alpha, beta) = surface.components[id].tangent_weights;
        for (a, l) in lam.arm_legs() {
            let (a, l) = (a as i64, l as i64);
            for wt in [alpha * (l + 1) - beta * a, -alpha * l + beta * (a + 1)] {
                match wt.signum() {
                    1 => positive.push(wt),
                    -1 => non_positive.push(wt),
                    _ => zero_count += 1,
                }
            }
        }
    }
    positive.sort_unstable();
    non_positive.sort_unstable();
    TangentCharacter { positive, non_positive, zero_count }
}

/// Weights `e, 2e, ..., ne` of the base of `Hilb^n S`, or any other weighted base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HitchinBase {
    pub weights: Vec<u64>,
}

impl HitchinBase {
    pub fn new(mut weights: Vec<u64>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "base weights must be positive");
        weights.sort_unstable();
        Self { weights }
    }

    pub fn hilb(e: u64, n: u64) -> Self {
        Self::new((1..=n).map(|i| i * e).collect())
    }

    /// `chi_t(Sym A)^{-1} = prod (1 - t^{e_i})`.
    pub fn sym_inverse(&self) -> QuantumProduct {
        QuantumProduct::ratio(self.weights.clone(), vec![])
    }
}

/// `prod (1 - t^{e'_i}) / prod (1 - t^{e_i})` for a cover `A -> A'`.
pub fn delta_pi(a: &HitchinBase, a_prime: &HitchinBase) -> Result<QuantumProduct, HilbError> {
    if a.weights.len() != a_prime.weights.len() {
        return Err(HilbError::Cap { n: a_prime.weights.len(), cap: a.weights.len() });
    }
    Ok(QuantumProduct::ratio(a_prime.weights.clone(), a.weights.clone()))
}

/// True when every supported component satisfies the weight gap, i.e. a Painlevé
/// bottom point carries the empty partition.
pub fn weight_gap(surface: &SurfaceModel, mp: &Multipartition) -> bool {
    mp.support().all(|(id, _)| surface.components[id].weight_gap)
}

pub fn is_very_stable(surface: &SurfaceModel, mp: &Multipartition) -> bool {
    mp.support().all(|(id, lam)| {
        let rec = &surface.components[id];
        if rec.is_curve() {
            true
        } else {
            rec.weight_gap && rec.very_stable && lam.is_column()
        }
    })
}

/// `prod_{i<=n} (1 - t^{ie}) / prod_{w in T+} (1 - t^w)`.
pub fn virtual_mult(surface: &SurfaceModel, mp: &Multipartition) -> QuantumProduct {
    let n = mp.size() as u64;
    let tc = tangent_character(surface, mp);
    let den = tc.positive.iter().map(|&w| w as u64).collect();
    QuantumProduct::ratio((1..=n).map(|i| i * surface.e as u64).collect(), den)
}

fn multiplicity_weight(rec: &FixedPointRecord) -> u64 {
    rec.pos_weight as u64
}

/// Equivariant multiplicity of a very stable component:
/// `[n; |lambda(p)|...]_{t^e} prod_p [|lambda(p)|; lambda(p)']_{t^{w_p}} m_p(t)^{(|lambda(p)|)}`.
pub fn very_stable_mult(surface: &SurfaceModel, mp: &Multipartition) -> Result<LaurentPoly, HilbError> {
    if !is_very_stable(surface, mp) {
        return Err(HilbError::NotVeryStable(mp.describe(surface)));
    }
    let n = mp.size() as u64;
    let sizes: Vec<u64> = mp.support().map(|(_, l)| l.size() as u64).collect();
    let mut m = quantum_multinomial(n, &sizes, surface.e as u64).expect("sizes sum to n");
    for (id, lam) in mp.support() {
        let rec = &surface.components[id];
        let size = lam.size() as u64;
        let cols: Vec<u64> = lam.transpose().parts().iter().map(|&c| c as u64).collect();
        m = &m * &quantum_multinomial(size, &cols, multiplicity_weight(rec)).expect("columns sum to size");
        let mp_t = surface.mult_poly(id).expect("very stable components have polynomial multiplicity");
        m = &m * &plethystic_power(&mp_t, size);
    }
    Ok(m)
}

fn multinomial_int(n: usize, parts: &[usize]) -> BigInt {
    let fact = |k: usize| -> BigInt { (1..=k).fold(BigInt::one(), |a, i| a * i) };
    parts.iter().fold(fact(n), |acc, &p| acc / fact(p))
}

/// Non-equivariant multiplicity `binom(n; lambda') prod_p m_p^{|lambda(p)|}` of a
/// weight-gap component.
pub fn noneq_mult(surface: &SurfaceModel, mp: &Multipartition) -> Result<BigInt, HilbError> {
    if !weight_gap(surface, mp) {
        return Err(HilbError::NotWeightGap(mp.describe(surface)));
    }
    let mut m = multinomial_int(mp.size(), &mp.all_columns());
    for (id, lam) in mp.support() {
        let mp_val = surface.components[id].core_mult;
        m *= num_traits::pow(BigInt::from(mp_val), lam.size());
    }
    Ok(m)
}

/// Dimension `lambda(C)_1` of the fixed component.
pub fn dimension(surface: &SurfaceModel, mp: &Multipartition) -> usize {
    surface.curve().map_or(0, |c| mp.get(c).first())
}

/// `F_a <= F_b` in the flow order: `b` is reached from `a` by a chain of
/// T-curves, each realizing one elementary move.
pub fn flow_leq(surface: &SurfaceModel, a: &Multipartition, b: &Multipartition) -> Result<bool, HilbError> {
    if !surface.has_curve() {
        return Err(HilbError::FlowScope(surface.name));
    }
    if a.size() != b.size() {
        return Err(PartitionError::SizeMismatch(a.size(), b.size()).into());
    }
    Ok(moves_closure(a, surface).contains(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TidalFunction {
    /// Non-equivariant multiplicity on weight-gap components.
    Multiplicity,
    /// Dimension of the fixed component.
    Dimension,
    /// Multiplicity restricted to very stable components.
    StableMultiplicity,
}

#[derive(Clone, Debug, Serialize)]
pub struct TidalWitness {
    /// The dominating multipartition (lower in the flow order).
    pub lower: Multipartition,
    pub upper: Multipartition,
    pub lower_label: String,
    pub upper_label: String,
    pub lower_value: String,
    pub upper_value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TidalityReport {
    pub n: usize,
    pub function: TidalFunction,
    pub tidal: bool,
    pub comparable_pairs: usize,
    pub witness: Option<TidalWitness>,
}

fn tidal_value(surface: &SurfaceModel, mp: &Multipartition, f: TidalFunction) -> Option<BigInt> {
    match f {
        TidalFunction::Dimension => Some(BigInt::from(dimension(surface, mp))),
        TidalFunction::Multiplicity => noneq_mult(surface, mp).ok(),
        TidalFunction::StableMultiplicity => {
            if is_very_stable(surface, mp) {
                noneq_mult(surface, mp).ok()
            } else {
                None
            }
        }
    }
}

/// Checks `f(F) >= f(F')` for every comparable pair `F <= F'` on which `f` is defined.
pub fn tidality_report(surface: &SurfaceModel, n: usize, f: TidalFunction) -> Result<TidalityReport, HilbError> {
    if n > TIDALITY_CAP {
        return Err(HilbError::Cap { n, cap: TIDALITY_CAP });
    }
    let comps: Vec<(Multipartition, BigInt)> = enumerate_multipartitions(surface, n)?
        .into_iter()
        .filter_map(|mp| tidal_value(surface, &mp, f).map(|v| (mp, v)))
        .collect();
    let mut pairs = 0;
    let mut witness = None;
    for (a, va) in &comps {
        for (b, vb) in &comps {
            if a == b || !dominates(a, b, surface)? {
                continue;
            }
            pairs += 1;
            if va < vb && witness.is_none() {
                witness = Some(TidalWitness {
                    lower: a.clone(),
                    upper: b.clone(),
                    lower_label: a.describe(surface),
                    upper_label: b.describe(surface),
                    lower_value: va.to_string(),
                    upper_value: vb.to_string(),
                });
            }
        }
    }
    Ok(TidalityReport { n, function: f, tidal: witness.is_none(), comparable_pairs: pairs, witness })
}

/// `D_n(q) = sum q^{lambda(C)_1}` over all multipartitions of `n`.
pub fn dn_poly(surface: &SurfaceModel, n: usize) -> Result<LaurentPoly, HilbError> {
    if !surface.has_curve() {
        return Err(HilbError::FlowScope(surface.name));
    }
    let mut d = LaurentPoly::zero();
    for mp in enumerate_multipartitions(surface, n)? {
        d.add_term(dimension(surface, &mp) as i64, &crate::exactalg::rat(1));
    }
    Ok(d)
}

/// Correction `[d]_{t^{w b}}` for a degree-`d` cover of the base at an isolated point
/// with `m_p(t) = [b]_{t^w}`.
pub fn cover_correction_2d(point: &FixedPointRecord, d: u64) -> Result<LaurentPoly, HilbError> {
    let Some((_, b)) = point.local_eq.filter(|_| point.is_isolated() && point.weight_gap) else {
        return Err(HilbError::NotIsolated(point.label.clone()));
    };
    Ok(quantum_int(d, point.pos_weight as u64 * b as u64).expect("d >= 1"))
}

/// One row of the fixed-locus table.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentReport {
    pub multipartition: Multipartition,
    pub label: String,
    pub weight_gap: bool,
    pub very_stable: bool,
    pub mu: QuantumProduct,
    pub m_poly: Option<LaurentPoly>,
    pub m_non_eq: Option<String>,
    pub dimension: usize,
}

/// Closed-form report; `m_poly` is filled for very stable components and for
/// single points (`n = 1`) of the surface.
pub fn component_report(surface: &SurfaceModel, mp: &Multipartition) -> ComponentReport {
    let very_stable = is_very_stable(surface, mp) && weight_gap(surface, mp);
    let m_poly = if very_stable {
        very_stable_mult(surface, mp).ok()
    } else if mp.size() == 1 {
        let (id, _) = mp.support().next().unwrap();
        surface.mult_poly(id).ok()
    } else {
        None
    };
    ComponentReport {
        multipartition: mp.clone(),
        label: mp.describe(surface),
        weight_gap: weight_gap(surface, mp),
        very_stable,
        mu: virtual_mult(surface, mp),
        m_poly,
        m_non_eq: noneq_mult(surface, mp).ok().map(|m| m.to_string()),
        dimension: dimension(surface, mp),
    }
}

pub fn fixed_table(surface: &SurfaceModel, n: usize) -> Result<Vec<ComponentReport>, HilbError> {
    Ok(enumerate_multipartitions(surface, n)?
        .iter()
        .map(|mp| component_report(surface, mp))
        .collect())
}

/// CSV rendering of a fixed-locus table.
pub fn reports_to_csv(rows: &[ComponentReport]) -> String {
    let mut out = String::from("multipartition,weightGap,veryStable,mu,mPoly,mNonEq,dimension\n");
    for r in rows {
        let m_poly = r.m_poly.as_ref().map(|p| p.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "\"{}\",{},{},\"{}\",\"{}\",{},{}\n",
            r.label,
            r.weight_gap,
            r.very_stable,
            r.mu,
            m_poly,
            r.m_non_eq.clone().unwrap_or_default(),
            r.dimension
        ));
    }
    out
}

/// Checks a report's internal invariants; returns a description of the first breach.
pub fn check_report(r: &ComponentReport) -> Result<(), String> {
    if r.very_stable && !r.weight_gap {
        return Err(format!("{}: very stable without weight gap", r.label));
    }
    if r.very_stable {
        let p = r.m_poly.as_ref().ok_or_else(|| format!("{}: missing multiplicity", r.label))?;
        if !r.mu.value_eq_poly(p) {
            return Err(format!("{}: virtual and genuine multiplicities differ", r.label));
        }
    }
    if let (Some(p), Some(m)) = (&r.m_poly, &r.m_non_eq) {
        let at_one = p.at_one();
        if at_one.to_integer().to_string() != *m || !at_one.is_integer() {
            return Err(format!("{}: m(1) = {at_one} but m = {m}", r.label));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{qp_to_poly, rat, AtOne};
    use crate::partitions::Partition;
    use crate::surfaces::{surface, SurfaceId};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn poly(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeff_slice(cs)
    }

    #[test]
    fn single_box_at_isolated_point() {
        let s = surface(SurfaceId::SZ3);
        for q in s.isolated_points() {
            let tc = tangent_character(s, &Multipartition::single(q.id, p(&[1])));
            assert_eq!(tc.positive, vec![q.pos_weight as i64]);
            assert_eq!(tc.non_positive, vec![-(q.neg_weight as i64)]);
            assert_eq!(tc.zero_count, 0);
        }
    }

    #[test]
    fn column_on_te_curve() {
        let s = surface(SurfaceId::TE);
        let tc = tangent_character(s, &Multipartition::single(0, p(&[1, 1])));
        assert_eq!(tc.positive, vec![1, 2]);
        assert_eq!(tc.non_positive, vec![-1]);
        assert_eq!(tc.zero_count, 1);
        for lam in crate::partitions::partitions_of(5) {
            let tc = tangent_character(s, &Multipartition::single(0, lam.clone()));
            assert_eq!(tc.total(), 10);
            assert_eq!(tc.zero_count, lam.first());
        }
    }

    #[test]
    fn row_and_column_at_isolated_point() {
        // Weights (-l, w) = (-1, 2).
        let s = surface(SurfaceId::SZ3);
        let q = s.isolated_points().find(|q| !q.very_stable).unwrap().id;
        let row = tangent_character(s, &Multipartition::single(q, p(&[2])));
        assert_eq!(row.positive, vec![2, 3]);
        assert_eq!(row.non_positive, vec![-2, -1]);
        let col = tangent_character(s, &Multipartition::single(q, p(&[1, 1])));
        assert_eq!(col.positive, vec![2, 4]);
        assert_eq!(col.non_positive, vec![-3, -1]);
    }

    #[test]
    fn weight_gap_examples() {
        let s2 = surface(SurfaceId::SII);
        assert!(!weight_gap(s2, &Multipartition::single(0, p(&[1]))));
        let s1 = surface(SurfaceId::SI);
        assert!(weight_gap(s1, &Multipartition::single(1, p(&[2]))));
        let s = surface(SurfaceId::SZ6);
        for mp in enumerate_multipartitions(s, 2).unwrap() {
            assert!(weight_gap(s, &mp));
        }
    }

    #[test]
    fn very_stable_examples() {
        let te = surface(SurfaceId::TE);
        for mp in enumerate_multipartitions(te, 4).unwrap() {
            assert!(is_very_stable(te, &mp));
        }
        let s2 = surface(SurfaceId::SZ2);
        assert!(!is_very_stable(s2, &Multipartition::single(1, p(&[2]))));
        let s3 = surface(SurfaceId::SZ3);
        let wob = s3.isolated_points().find(|q| !q.very_stable).unwrap().id;
        assert!(!is_very_stable(s3, &Multipartition::single(wob, p(&[1]))));
    }

    #[test]
    fn virtual_mult_examples() {
        let s3 = surface(SurfaceId::SZ3);
        let wob = s3.isolated_points().find(|q| !q.very_stable).unwrap().id;
        let mu = virtual_mult(s3, &Multipartition::single(wob, p(&[1])));
        assert_eq!(mu, QuantumProduct::ratio(vec![3], vec![2]));
        let s2 = surface(SurfaceId::SZ2);
        let mu = virtual_mult(s2, &Multipartition::single(0, p(&[1])));
        assert_eq!(qp_to_poly(&mu).unwrap(), poly(&[1, 1]));
        // T*E, lambda = (2): T+ weights {1, 1}, so mu = (1-t)(1-t^2)/(1-t)^2 = [2]_t.
        let te = surface(SurfaceId::TE);
        let mu = virtual_mult(te, &Multipartition::single(0, p(&[2])));
        assert_eq!(qp_to_poly(&mu).unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn very_stable_mult_examples() {
        let te = surface(SurfaceId::TE);
        for lam in crate::partitions::partitions_of(4) {
            let m = very_stable_mult(te, &Multipartition::single(0, lam.clone())).unwrap();
            let cols: Vec<u64> = lam.transpose().parts().iter().map(|&c| c as u64).collect();
            assert_eq!(m, quantum_multinomial(4, &cols, 1).unwrap());
        }
        let s1 = surface(SurfaceId::SII);
        let mp = Multipartition::new([(1, p(&[1])), (2, p(&[1, 1]))]);
        assert_eq!(very_stable_mult(s1, &mp).unwrap(), quantum_multinomial(3, &[1, 2], 4).unwrap());
        // S_{Z/2}, one box on C and one at a point of weight 2:
        // [2]_{t^2} [2]_t [1]_{t^2}, i.e. (1 + t^2)(1 + t).
        let s2 = surface(SurfaceId::SZ2);
        let mp = Multipartition::new([(0, p(&[1])), (1, p(&[1]))]);
        assert_eq!(very_stable_mult(s2, &mp).unwrap(), poly(&[1, 1, 1, 1]));
        assert!(very_stable_mult(s2, &Multipartition::single(1, p(&[2]))).is_err());
    }

    #[test]
    fn noneq_examples() {
        let s3 = surface(SurfaceId::SZ3);
        let wob: Vec<usize> = s3.isolated_points().filter(|q| !q.very_stable).map(|q| q.id).collect();
        let mp = Multipartition::new([(wob[0], p(&[1])), (wob[1], p(&[1]))]);
        assert_eq!(noneq_mult(s3, &mp).unwrap(), BigInt::from(8));
        let te = surface(SurfaceId::TE);
        assert_eq!(noneq_mult(te, &Multipartition::single(0, p(&[4]))).unwrap(), BigInt::from(24));
        assert_eq!(noneq_mult(te, &Multipartition::single(0, p(&[1, 1, 1, 1]))).unwrap(), BigInt::from(1));
        let s2 = surface(SurfaceId::SZ2);
        assert_eq!(noneq_mult(s2, &Multipartition::single(0, p(&[2]))).unwrap(), BigInt::from(8));
        assert!(noneq_mult(surface(SurfaceId::SI), &Multipartition::single(0, p(&[1]))).is_err());
    }

    #[test]
    fn flow_examples() {
        let te = surface(SurfaceId::TE);
        let a = Multipartition::single(0, p(&[2]));
        let b = Multipartition::single(0, p(&[1, 1]));
        assert!(flow_leq(te, &a, &b).unwrap());
        let l = Multipartition::single(0, p(&[5, 1, 1, 1]));
        let m = Multipartition::single(0, p(&[4, 4]));
        assert!(!flow_leq(te, &l, &m).unwrap() && !flow_leq(te, &m, &l).unwrap());
        assert!(flow_leq(surface(SurfaceId::SI), &a, &a).is_err());
    }

    #[test]
    fn tidality_examples() {
        let r = tidality_report(surface(SurfaceId::SZ3), 2, TidalFunction::Multiplicity).unwrap();
        assert!(!r.tidal);
        assert!(tidality_report(surface(SurfaceId::TE), 4, TidalFunction::Multiplicity).unwrap().tidal);
        assert!(tidality_report(surface(SurfaceId::SZ2), 2, TidalFunction::Multiplicity).unwrap().tidal);
        assert!(tidality_report(surface(SurfaceId::SZ2), 3, TidalFunction::Dimension).unwrap().tidal);
    }

    #[test]
    fn dn_examples() {
        assert_eq!(dn_poly(surface(SurfaceId::SZ2), 1).unwrap(), LaurentPoly::from_terms([(0, 4), (1, 1)]));
        assert_eq!(dn_poly(surface(SurfaceId::SZ3), 0).unwrap(), LaurentPoly::one());
        assert_eq!(dn_poly(surface(SurfaceId::TE), 2).unwrap(), LaurentPoly::from_terms([(1, 1), (2, 1)]));
    }

    #[test]
    fn delta_pi_examples() {
        let d = delta_pi(&HitchinBase::new(vec![3]), &HitchinBase::new(vec![6])).unwrap();
        assert_eq!(qp_to_poly(&d).unwrap(), quantum_int(2, 3).unwrap());
        let a = HitchinBase::hilb(2, 3);
        assert_eq!(delta_pi(&a, &a).unwrap(), QuantumProduct::one());
        let d = delta_pi(&HitchinBase::new(vec![1, 2]), &HitchinBase::new(vec![2, 4])).unwrap();
        assert_eq!(qp_to_poly(&d).unwrap(), &quantum_int(2, 1).unwrap() * &quantum_int(2, 2).unwrap());
        assert!(delta_pi(&HitchinBase::new(vec![1]), &HitchinBase::new(vec![1, 2])).is_err());
    }

    #[test]
    fn cover_correction_examples() {
        let s3 = surface(SurfaceId::SZ3);
        let wob = s3.isolated_points().find(|q| !q.very_stable).unwrap();
        assert_eq!(cover_correction_2d(wob, 2).unwrap(), quantum_int(2, 4).unwrap());
        assert_eq!(cover_correction_2d(wob, 1).unwrap(), LaurentPoly::one());
        let s6 = surface(SurfaceId::SZ6);
        let x2y3 = s6.isolated_points().find(|q| q.local_eq == Some((2, 3))).unwrap();
        assert_eq!(s6.mult_poly(x2y3.id).unwrap(), quantum_int(3, 4).unwrap());
        assert_eq!(cover_correction_2d(x2y3, 2).unwrap(), quantum_int(2, 12).unwrap());
        assert!(cover_correction_2d(&s6.components[0], 2).is_err());
    }

    #[test]
    fn reports_are_consistent() {
        for id in SurfaceId::ALL {
            let s = surface(id);
            for r in fixed_table(s, 2).unwrap() {
                check_report(&r).unwrap();
                if let Some(AtOne::Value(v)) = Some(r.mu.at_one()) {
                    if let Some(m) = &r.m_non_eq {
                        assert!(v <= rat(m.parse::<i64>().unwrap()), "{}", r.label);
                    }
                }
            }
        }
        assert_eq!(fixed_table(surface(SurfaceId::SZ2), 1).unwrap().len(), 5);
        let csv = reports_to_csv(&fixed_table(surface(SurfaceId::TE), 2).unwrap());
        assert_eq!(csv.lines().count(), 3);
    }
}
