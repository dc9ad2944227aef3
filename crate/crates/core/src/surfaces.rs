//! Catalog of the nine 2-dimensional integrable systems and their torus-fixed data.
//!
//! Component 0 of a parabolic surface is the 1-dimensional core component `C`;
//! component 0 of a Painlevé surface with `k > 1` is the isolated bottom point.
//! The remaining components are listed leg by leg, ordered away from component 0.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::exactalg::{quantum_int, LaurentPoly, QuantumProduct};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SurfaceId {
    TE,
    SZ2,
    SZ3,
    SZ4,
    SZ6,
    SVI,
    SIV,
    SII,
    SI,
}

impl SurfaceId {
    pub const ALL: [SurfaceId; 9] = [
        SurfaceId::TE,
        SurfaceId::SZ2,
        SurfaceId::SZ3,
        SurfaceId::SZ4,
        SurfaceId::SZ6,
        SurfaceId::SVI,
        SurfaceId::SIV,
        SurfaceId::SII,
        SurfaceId::SI,
    ];

    pub const PARABOLIC: [SurfaceId; 5] =
        [SurfaceId::TE, SurfaceId::SZ2, SurfaceId::SZ3, SurfaceId::SZ4, SurfaceId::SZ6];

    /// Short selector used on the command line.
    pub fn key(self) -> &'static str {
        match self {
            SurfaceId::TE => "TE",
            SurfaceId::SZ2 => "SZ2",
            SurfaceId::SZ3 => "SZ3",
            SurfaceId::SZ4 => "SZ4",
            SurfaceId::SZ6 => "SZ6",
            SurfaceId::SVI => "SVI",
            SurfaceId::SIV => "SIV",
            SurfaceId::SII => "SII",
            SurfaceId::SI => "SI",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            SurfaceId::TE => "T*E",
            SurfaceId::SZ2 => "S_{Z/2}",
            SurfaceId::SZ3 => "S_{Z/3}",
            SurfaceId::SZ4 => "S_{Z/4}",
            SurfaceId::SZ6 => "S_{Z/6}",
            SurfaceId::SVI => "S^VI",
            SurfaceId::SIV => "S^IV",
            SurfaceId::SII => "S^II",
            SurfaceId::SI => "S^I",
        }
    }
}

impl fmt::Display for SurfaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("unknown surface '{0}' (expected one of TE, SZ2, SZ3, SZ4, SZ6, SVI, SIV, SII, SI)")]
    UnknownSurface(String),
    #[error("surface {surface} has no component {id}")]
    UnknownComponent { surface: SurfaceId, id: usize },
    #[error("component {id} of {surface} is not an isolated point")]
    NotIsolated { surface: SurfaceId, id: usize },
}

impl FromStr for SurfaceId {
    type Err = SurfaceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SurfaceId::ALL
            .into_iter()
            .find(|id| id.key().eq_ignore_ascii_case(s))
            .ok_or_else(|| SurfaceError::UnknownSurface(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Parabolic,
    Painleve,
}

/// Fiber character `c * [b]_{t^{w/b}}` of a tautological bundle at a very stable point
/// of weight `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiberEntry {
    pub c: u32,
    pub b: u32,
}

impl FiberEntry {
    /// The character at a point whose positive weight is `w`.
    pub fn character(&self, w: u32) -> LaurentPoly {
        assert!(w % self.b == 0, "fiber entry b={} does not divide w={w}", self.b);
        quantum_int(self.b as u64, (w / self.b) as u64)
            .unwrap()
            .scale(&crate::exactalg::rat(self.c as i64))
    }

    /// Exponents of the character as a multiset (each weight repeated `c` times).
    pub fn exponents(&self, w: u32) -> Vec<u64> {
        let step = (w / self.b) as u64;
        let mut out = Vec::new();
        for i in 0..self.b as u64 {
            for _ in 0..self.c {
                out.push(i * step);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointRecord {
    pub id: usize,
    pub label: String,
    pub dimension: u8,
    /// `l`: minus the non-positive tangent weight (0 on the curve component).
    pub neg_weight: u32,
    /// `w = k + l` for isolated points and curve points.
    pub pos_weight: u32,
    /// Tangent weights `(x-direction, y-direction)`.
    pub tangent_weights: (i64, i64),
    /// Local equation `x^a y^b` of the core at an isolated point.
    pub local_eq: Option<(u32, u32)>,
    pub core_mult: u32,
    pub very_stable: bool,
    /// `false` only for a Painlevé bottom point.
    pub weight_gap: bool,
    /// For very stable components: the index `i` of the point type `q_i`.
    pub point_type: Option<u32>,
    /// Fiber data of the tautological bundle of each very stable component, restricted here.
    pub fiber_row: BTreeMap<usize, FiberEntry>,
    /// Character of the tautological bundle of this component at the identity point.
    pub procesque_at_e: Option<LaurentPoly>,
}

impl FixedPointRecord {
    pub fn is_isolated(&self) -> bool {
        self.dimension == 0
    }

    pub fn is_curve(&self) -> bool {
        self.dimension == 1
    }

    /// `m_p(t) = [b]_{t^w}` for isolated weight-gap points, `[e]_t` on the curve.
    fn mult_poly(&self, e: u32) -> Option<LaurentPoly> {
        if self.is_curve() {
            return Some(quantum_int(e as u64, 1).unwrap());
        }
        let (_, b) = self.local_eq?;
        self.weight_gap
            .then(|| quantum_int(b as u64, self.pos_weight as u64).unwrap())
    }
}

/// Multiplicity of a fixed component of the surface itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SurfaceMult {
    Poly(LaurentPoly),
    /// Virtual multiplicity of a component without the weight gap.
    NonWg(QuantumProduct),
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceModel {
    pub id: SurfaceId,
    pub name: &'static str,
    pub family: Family,
    /// Weight of the base.
    pub e: u32,
    /// Weight of the symplectic form.
    pub k: u32,
    pub components: Vec<FixedPointRecord>,
    /// T-curves `(from, to)`, oriented away from component 0.
    pub edges: Vec<(usize, usize)>,
    /// The fixed point standing for the identity of the elliptic curve, where defined.
    pub identity_point: Option<usize>,
    #[serde(skip)]
    below: Vec<Vec<bool>>,
    #[serde(skip)]
    down_sets: Vec<Vec<usize>>,
}

impl SurfaceModel {
    pub fn component(&self, id: usize) -> Result<&FixedPointRecord, SurfaceError> {
        self.components
            .get(id)
            .ok_or(SurfaceError::UnknownComponent { surface: self.id, id })
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn curve(&self) -> Option<usize> {
        self.components.iter().position(|c| c.is_curve())
    }

    pub fn has_curve(&self) -> bool {
        self.curve().is_some()
    }

    /// Painlevé bottom point (the unique component without the weight gap).
    pub fn bottom(&self) -> Option<usize> {
        self.components.iter().position(|c| !c.weight_gap)
    }

    pub fn is_parabolic(&self) -> bool {
        self.family == Family::Parabolic
    }

    pub fn isolated_points(&self) -> impl Iterator<Item = &FixedPointRecord> {
        self.components.iter().filter(|c| c.is_isolated())
    }

    /// Number of isolated fixed points.
    pub fn r(&self) -> usize {
        self.isolated_points().count()
    }

    /// Strict flow order on components: a directed path of T-curves from `a` to `b`.
    pub fn strictly_below(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    /// Sets of components closed under going down the flow order, empty set included.
    pub fn down_sets(&self) -> &[Vec<usize>] {
        &self.down_sets
    }

    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |(f, _)| *f == a).map(|(_, g)| *g)
    }

    pub fn very_stable_ids(&self) -> Vec<usize> {
        self.components.iter().filter(|c| c.very_stable).map(|c| c.id).collect()
    }

    /// Fiber of the tautological bundle of very stable `bundle` at very stable `point`.
    pub fn fiber(&self, bundle: usize, point: usize) -> Option<FiberEntry> {
        self.components.get(point)?.fiber_row.get(&bundle).copied()
    }

    pub fn surface_mult(&self, id: usize) -> Result<SurfaceMult, SurfaceError> {
        let rec = self.component(id)?;
        if let Some(p) = rec.mult_poly(self.e) {
            return Ok(SurfaceMult::Poly(p));
        }
        let (a1, a2) = rec.tangent_weights;
        Ok(SurfaceMult::NonWg(QuantumProduct::ratio(
            vec![self.e as u64],
            vec![a1 as u64, a2 as u64],
        )))
    }

    /// `m_p(t)` for weight-gap components.
    pub fn mult_poly(&self, id: usize) -> Result<LaurentPoly, SurfaceError> {
        match self.surface_mult(id)? {
            SurfaceMult::Poly(p) => Ok(p),
            SurfaceMult::NonWg(_) => Err(SurfaceError::NotIsolated { surface: self.id, id }),
        }
    }
}

pub fn surface(id: SurfaceId) -> &'static SurfaceModel {
    catalog().iter().find(|s| s.id == id).expect("catalog covers every surface id")
}

/// All nine surfaces, built once.
pub fn catalog() -> &'static [SurfaceModel] {
    static CATALOG: OnceLock<Vec<SurfaceModel>> = OnceLock::new();
    CATALOG.get_or_init(|| SurfaceId::ALL.into_iter().map(build).collect())
}

/// Canonical JSON export of the catalog.
pub fn catalog_json() -> serde_json::Value {
    serde_json::json!({
        "schema": "hilbfix.catalog/1",
        "checksum": catalog_checksum(),
        "surfaces": catalog(),
    })
}

/// SHA-256 of the canonical JSON serialization of all surfaces.
pub fn catalog_checksum() -> String {
    let bytes = serde_json::to_vec(catalog()).expect("catalog serializes");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

// Leg point data `(a, b, l)`: local equation x^a y^b and negative weight -l.
type Leg = &'static [(u32, u32, u32)];

struct ParabolicData {
    e: u32,
    legs: &'static [Leg],
    /// Point types `q_i` in the order of the fiber table.
    types: &'static [u32],
    /// `fiber[row][col]` is `(c, b)` for the bundle of type `types[col]` at type `types[row]`.
    fiber: &'static [&'static [(u32, u32)]],
}

const SZ2_DATA: ParabolicData = ParabolicData {
    e: 2,
    legs: &[&[(0, 1, 1)], &[(0, 1, 1)], &[(0, 1, 1)], &[(0, 1, 1)]],
    types: &[2, 1],
    fiber: &[&[(2, 1), (1, 1)], &[(1, 2), (1, 1)]],
};

const SZ3_DATA: ParabolicData = ParabolicData {
    e: 3,
    legs: &[&[(1, 2, 1), (0, 1, 2)], &[(1, 2, 1), (0, 1, 2)], &[(1, 2, 1), (0, 1, 2)]],
    types: &[3, 1],
    fiber: &[&[(3, 1), (1, 1)], &[(1, 3), (1, 1)]],
};

const SZ4_DATA: ParabolicData = ParabolicData {
    e: 4,
    legs: &[
        &[(2, 3, 1), (1, 2, 2), (0, 1, 3)],
        &[(2, 3, 1), (1, 2, 2), (0, 1, 3)],
        &[(0, 2, 1)],
    ],
    types: &[4, 2, 1],
    fiber: &[&[(4, 1), (2, 1), (1, 1)], &[(2, 2), (2, 1), (1, 1)], &[(1, 4), (1, 2), (1, 1)]],
};

const SZ6_DATA: ParabolicData = ParabolicData {
    e: 6,
    legs: &[
        &[(4, 5, 1), (3, 4, 2), (2, 3, 3), (1, 2, 4), (0, 1, 5)],
        &[(2, 4, 1), (0, 2, 2)],
        &[(0, 3, 1)],
    ],
    types: &[6, 3, 2, 1],
    fiber: &[
        &[(6, 1), (3, 1), (2, 1), (1, 1)],
        &[(3, 2), (3, 1), (1, 2), (1, 1)],
        &[(2, 3), (1, 3), (2, 1), (1, 1)],
        &[(1, 6), (1, 3), (1, 2), (1, 1)],
    ],
};

const TE_DATA: ParabolicData = ParabolicData { e: 1, legs: &[], types: &[1], fiber: &[&[(1, 1)]] };

/// Painlevé data: `(e, bottom weights, number of top points)`.
fn painleve_data(id: SurfaceId) -> (u32, (u32, u32), usize) {
    match id {
        SurfaceId::SI => (6, (2, 3), 1),
        SurfaceId::SII => (4, (1, 2), 2),
        SurfaceId::SIV => (3, (1, 1), 3),
        _ => unreachable!(),
    }
}

/// Exceptional identity-point character of the `x^2 y^4` point of `S_{Z/6}`.
fn exceptional_at_e() -> LaurentPoly {
    LaurentPoly::from_coeff_slice(&[1, 1, 0, 1, 1])
}

fn build(id: SurfaceId) -> SurfaceModel {
    let mut model = match id {
        SurfaceId::TE => build_parabolic(id, Family::Parabolic, &TE_DATA),
        SurfaceId::SZ2 => build_parabolic(id, Family::Parabolic, &SZ2_DATA),
        SurfaceId::SZ3 => build_parabolic(id, Family::Parabolic, &SZ3_DATA),
        SurfaceId::SZ4 => build_parabolic(id, Family::Parabolic, &SZ4_DATA),
        SurfaceId::SZ6 => build_parabolic(id, Family::Parabolic, &SZ6_DATA),
        // Same fixed-point data as S_{Z/2}.
        SurfaceId::SVI => build_parabolic(id, Family::Painleve, &SZ2_DATA),
        SurfaceId::SIV | SurfaceId::SII | SurfaceId::SI => build_painleve(id),
    };
    model.below = transitive_closure(model.components.len(), &model.edges);
    model.down_sets = down_sets(&model.below);
    model
}

fn build_parabolic(id: SurfaceId, family: Family, data: &ParabolicData) -> SurfaceModel {
    let e = data.e;
    let k = 1;
    let mut components = vec![FixedPointRecord {
        id: 0,
        label: "C".into(),
        dimension: 1,
        neg_weight: 0,
        pos_weight: k,
        tangent_weights: (0, k as i64),
        local_eq: None,
        core_mult: e,
        very_stable: true,
        weight_gap: true,
        point_type: Some(e),
        fiber_row: BTreeMap::new(),
        procesque_at_e: None,
    }];
    let mut edges = Vec::new();
    for (li, leg) in data.legs.iter().enumerate() {
        let mut prev = 0;
        for (pi, &(a, b, l)) in leg.iter().enumerate() {
            let idx = components.len();
            let w = k + l;
            components.push(FixedPointRecord {
                id: idx,
                label: format!("L{}.{}", li + 1, pi + 1),
                dimension: 0,
                neg_weight: l,
                pos_weight: w,
                tangent_weights: (-(l as i64), w as i64),
                local_eq: Some((a, b)),
                core_mult: b,
                very_stable: a == 0,
                weight_gap: true,
                point_type: (a == 0).then_some(b),
                fiber_row: BTreeMap::new(),
                procesque_at_e: None,
            });
            edges.push((prev, idx));
            prev = idx;
        }
    }
    // The identity point: the end of the first leg (the curve itself on T*E).
    let identity_point = Some(data.legs.first().map_or(0, |leg| leg.len()));

    let type_pos = |q: u32| data.types.iter().position(|&x| x == q).expect("type listed in fiber table");
    let vs: Vec<(usize, u32)> = components
        .iter()
        .filter_map(|c| c.point_type.map(|q| (c.id, q)))
        .collect();
    for &(row_id, row_type) in &vs {
        for &(col_id, col_type) in &vs {
            let (c, b) = data.fiber[type_pos(row_type)][type_pos(col_type)];
            components[row_id].fiber_row.insert(col_id, FiberEntry { c, b });
        }
    }
    let id_type = components[identity_point.unwrap()].point_type.unwrap();
    for rec in components.iter_mut() {
        rec.procesque_at_e = Some(match rec.point_type {
            Some(q) => {
                let (c, b) = data.fiber[type_pos(id_type)][type_pos(q)];
                FiberEntry { c, b }.character(e / id_type)
            }
            None if id == SurfaceId::SZ6 && rec.local_eq == Some((2, 4)) => exceptional_at_e(),
            None => quantum_int(rec.core_mult as u64, 1).unwrap(),
        });
    }
    SurfaceModel {
        id,
        name: id.display_name(),
        family,
        e,
        k,
        components,
        edges,
        identity_point,
        below: Vec::new(),
        down_sets: Vec::new(),
    }
}

fn build_painleve(id: SurfaceId) -> SurfaceModel {
    let (e, (a1, a2), tops) = painleve_data(id);
    let k = e - 1;
    let mut components = vec![FixedPointRecord {
        id: 0,
        label: "b".into(),
        dimension: 0,
        neg_weight: 0,
        pos_weight: a1 + a2,
        tangent_weights: (a1 as i64, a2 as i64),
        local_eq: None,
        core_mult: 1,
        very_stable: false,
        weight_gap: false,
        point_type: None,
        fiber_row: BTreeMap::new(),
        procesque_at_e: None,
    }];
    let mut edges = Vec::new();
    for i in 0..tops {
        let idx = components.len();
        components.push(FixedPointRecord {
            id: idx,
            label: format!("T{}", i + 1),
            dimension: 0,
            neg_weight: 1,
            pos_weight: k + 1,
            tangent_weights: (-1, (k + 1) as i64),
            local_eq: Some((0, 1)),
            core_mult: 1,
            very_stable: true,
            weight_gap: true,
            point_type: Some(1),
            fiber_row: BTreeMap::new(),
            procesque_at_e: None,
        });
        edges.push((0, idx));
    }
    SurfaceModel {
        id,
        name: id.display_name(),
        family: Family::Painleve,
        e,
        k,
        components,
        edges,
        identity_point: None,
        below: Vec::new(),
        down_sets: Vec::new(),
    }
}

fn down_sets(below: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = below.len();
    assert!(n < 20, "too many components to enumerate down-sets");
    (0u32..1 << n)
        .filter(|mask| {
            (0..n).all(|g| mask & (1 << g) == 0 || (0..n).all(|h| !below[h][g] || mask & (1 << h) != 0))
        })
        .map(|mask| (0..n).filter(|g| mask & (1 << g) != 0).collect())
        .collect()
}

fn transitive_closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut below = vec![vec![false; n]; n];
    for &(a, b) in edges {
        below[a][b] = true;
    }
    for m in 0..n {
        for a in 0..n {
            if below[a][m] {
                for b in 0..n {
                    if below[m][b] {
                        below[a][b] = true;
                    }
                }
            }
        }
    }
    below
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::QuantumProduct;

    fn poly(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeff_slice(cs)
    }

    #[test]
    fn nine_surfaces() {
        assert_eq!(catalog().len(), 9);
        for id in SurfaceId::ALL {
            assert_eq!(id.key().parse::<SurfaceId>().unwrap(), id);
        }
        assert!("S7".parse::<SurfaceId>().is_err());
    }

    #[test]
    fn sz3_layout() {
        let s = surface(SurfaceId::SZ3);
        assert_eq!(s.num_components(), 7);
        assert_eq!(s.mult_poly(0).unwrap(), poly(&[1, 1, 1]));
        let wobbly: Vec<_> = s.isolated_points().filter(|p| !p.very_stable).collect();
        assert_eq!(wobbly.len(), 3);
        for p in wobbly {
            assert_eq!(p.local_eq, Some((1, 2)));
            assert_eq!(p.tangent_weights, (-1, 2));
            assert_eq!(s.mult_poly(p.id).unwrap(), poly(&[1, 0, 1]));
        }
        for p in s.isolated_points().filter(|p| p.very_stable) {
            assert_eq!(p.tangent_weights, (-2, 3));
            assert_eq!(s.mult_poly(p.id).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn painleve_examples() {
        let s = surface(SurfaceId::SI);
        assert_eq!((s.e, s.k, s.num_components()), (6, 5, 2));
        assert_eq!(s.components[0].tangent_weights, (2, 3));
        assert_eq!(s.components[1].tangent_weights, (-1, 6));
        let s4 = surface(SurfaceId::SIV);
        match s4.surface_mult(0).unwrap() {
            SurfaceMult::NonWg(q) => {
                assert_eq!(q, QuantumProduct::ratio(vec![3], vec![1, 1]));
                // (1 + t + t^2) / (1 - t)
                assert!(q.value_eq(&QuantumProduct::qint(3, 1).div(&QuantumProduct::ratio(vec![1], vec![]))));
            }
            other => panic!("expected a non-WG multiplicity, got {other:?}"),
        }
        assert_eq!([SurfaceId::SI, SurfaceId::SII, SurfaceId::SIV].map(|i| surface(i).e), [6, 4, 3]);
    }

    #[test]
    fn te_has_only_curve() {
        let s = surface(SurfaceId::TE);
        assert_eq!(s.num_components(), 1);
        assert_eq!(s.e, 1);
        assert_eq!(s.r(), 0);
    }

    #[test]
    fn blue_labels() {
        let s = surface(SurfaceId::SZ6);
        assert_eq!(s.mult_poly(0).unwrap(), quantum_int(6, 1).unwrap());
        let s4 = surface(SurfaceId::SZ4);
        let x2y3 = s4.isolated_points().find(|p| p.local_eq == Some((2, 3))).unwrap();
        assert_eq!(s4.mult_poly(x2y3.id).unwrap(), quantum_int(3, 2).unwrap());
        let xy2 = s4.isolated_points().find(|p| p.local_eq == Some((1, 2))).unwrap();
        assert_eq!(s4.mult_poly(xy2.id).unwrap(), quantum_int(2, 3).unwrap());
    }

    #[test]
    fn weight_balance_and_edge_exponents() {
        for s in catalog() {
            for p in s.isolated_points().filter(|p| p.weight_gap) {
                let (a, b) = p.local_eq.unwrap();
                let lhs = -(a as i64) * p.neg_weight as i64 + b as i64 * p.pos_weight as i64;
                assert_eq!(lhs, s.e as i64, "{} {}", s.name, p.label);
                assert_eq!(p.pos_weight, s.k + p.neg_weight);
                assert_eq!(p.very_stable, a == 0);
                assert_eq!(p.core_mult, b);
            }
            for &(f, g) in &s.edges {
                let (pf, pg) = (&s.components[f], &s.components[g]);
                if let (Some((a, _)), Some((_, b))) = (pf.local_eq, pg.local_eq) {
                    assert_eq!(a, b, "{}: {} -> {}", s.name, pf.label, pg.label);
                }
            }
        }
    }

    #[test]
    fn fiber_symmetry() {
        for s in catalog() {
            for i in s.very_stable_ids() {
                for j in s.very_stable_ids() {
                    let (Some(ij), Some(ji)) = (s.fiber(i, j), s.fiber(j, i)) else {
                        continue;
                    };
                    let (wi, wj) = (s.components[i].pos_weight, s.components[j].pos_weight);
                    assert_eq!(wj % ij.b, 0);
                    assert_eq!(ij.b * wi, ji.b * wj, "{} {i} {j}", s.name);
                    assert_eq!(ij.c, ji.c);
                    // Rank of the bundle of point type q is q.
                    assert_eq!(ij.c * ij.b, s.components[i].point_type.unwrap());
                }
            }
        }
    }

    #[test]
    fn identity_point_characters() {
        let s = surface(SurfaceId::SZ6);
        let x2y4 = s.isolated_points().find(|p| p.local_eq == Some((2, 4))).unwrap();
        assert_eq!(x2y4.procesque_at_e.as_ref().unwrap(), &poly(&[1, 1, 0, 1, 1]));
        let y3 = s.isolated_points().find(|p| p.local_eq == Some((0, 3))).unwrap();
        assert_eq!(y3.procesque_at_e.as_ref().unwrap(), &quantum_int(3, 2).unwrap());
        assert_eq!(s.components[0].procesque_at_e.as_ref().unwrap(), &quantum_int(6, 1).unwrap());
        let x4y5 = s.isolated_points().find(|p| p.local_eq == Some((4, 5))).unwrap();
        assert_eq!(x4y5.procesque_at_e.as_ref().unwrap(), &quantum_int(5, 1).unwrap());
        // The identity point is a very stable point of multiplicity one.
        for s in catalog().iter().filter(|s| s.has_curve()) {
            let id = s.identity_point.unwrap();
            assert!(s.components[id].very_stable);
            assert_eq!(s.components[id].point_type, Some(1));
        }
    }

    #[test]
    fn checksum_is_stable() {
        assert_eq!(catalog_checksum(), catalog_checksum());
        assert_eq!(catalog_checksum().len(), 64);
        let js = catalog_json();
        assert_eq!(js["surfaces"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn flow_order_on_legs() {
        let s = surface(SurfaceId::SZ4);
        for p in s.isolated_points() {
            assert!(s.strictly_below(0, p.id));
            assert!(!s.strictly_below(p.id, 0));
        }
        // Points on different legs are incomparable.
        assert!(!s.strictly_below(1, 4) && !s.strictly_below(4, 1));
        assert!(s.strictly_below(1, 3));
    }
}
