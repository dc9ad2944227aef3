//! Partitions, colored multipartitions, weak compositions, dominance orders and
//! contingency matrices.
//!
//! Young diagrams use French notation: the box `s = (i, j)` sits in column `i`
//! and row `j` (both starting at 1), row 1 being the longest.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::surfaces::SurfaceModel;

/// Largest `n` accepted by [`enumerate_multipartitions`].
pub const MULTIPARTITION_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    Cap { n: usize, cap: usize },
    #[error("multipartitions have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("compositions have different totals ({0} vs {1})")]
    TotalMismatch(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts decreasingly and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_j` with `j` starting at 1; zero past the last row.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// First part `lambda_1` (0 for the empty partition).
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn transpose(&self) -> Self {
        let first = self.first();
        let parts = (1..=first).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect();
        Self { parts }
    }

    /// True when all parts equal 1.
    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Boxes `(i, j)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (1..=len).map(move |i| (i, j + 1)))
    }

    /// Arm `a(s) = lambda'_i - j`: boxes above `s`.
    pub fn arm(&self, (i, j): (usize, usize)) -> usize {
        self.transpose().part(i) - j
    }

    /// Leg `l(s) = lambda_j - i`: boxes to the right of `s`.
    pub fn leg(&self, (i, j): (usize, usize)) -> usize {
        self.part(j) - i
    }

    /// `(arm, leg)` of every box, computed with a single transpose.
    pub fn arm_legs(&self) -> Vec<(usize, usize)> {
        let tr = self.transpose();
        self.boxes().map(|(i, j)| (tr.part(i) - j, self.part(j) - i)).collect()
    }

    pub fn hook(&self, s: (usize, usize)) -> usize {
        self.arm(s) + self.leg(s) + 1
    }

    /// Classical dominance for partitions of the same size.
    pub fn dominates(&self, other: &Self) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for j in 1..=len {
            a += self.part(j);
            b += other.part(j);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// All partitions of `n`, reverse-lexicographic (largest first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A partition attached to each fixed component; empty components are not stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multipartition {
    assignment: BTreeMap<usize, Partition>,
}

impl Multipartition {
    pub fn new<I: IntoIterator<Item = (usize, Partition)>>(items: I) -> Self {
        let mut assignment = BTreeMap::new();
        for (id, p) in items {
            if !p.is_empty() {
                assert!(assignment.insert(id, p).is_none(), "component {id} assigned twice");
            }
        }
        Self { assignment }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(id: usize, p: Partition) -> Self {
        Self::new([(id, p)])
    }

    pub fn get(&self, id: usize) -> Partition {
        self.assignment.get(&id).cloned().unwrap_or_default()
    }

    pub fn part_ref(&self, id: usize) -> Option<&Partition> {
        self.assignment.get(&id)
    }

    pub fn size(&self) -> usize {
        self.assignment.values().map(Partition::size).sum()
    }

    /// Components with a nonempty partition, with their partitions.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.assignment.iter().map(|(k, v)| (*k, v))
    }

    pub fn support_ids(&self) -> Vec<usize> {
        self.assignment.keys().copied().collect()
    }

    fn set(&mut self, id: usize, p: Partition) {
        if p.is_empty() {
            self.assignment.remove(&id);
        } else {
            self.assignment.insert(id, p);
        }
    }

    /// All columns `lambda(p)'_l` over all components, concatenated.
    pub fn all_columns(&self) -> Vec<usize> {
        self.assignment.values().flat_map(|p| p.transpose().parts).collect()
    }

    /// Human-readable form using the surface's component labels.
    pub fn describe(&self, surface: &SurfaceModel) -> String {
        if self.assignment.is_empty() {
            return "{}".into();
        }
        let items: Vec<String> = self
            .assignment
            .iter()
            .map(|(id, p)| format!("{}:{}", surface.components[*id].label, p))
            .collect();
        format!("{{{}}}", items.join(" "))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.assignment.iter()).finish()
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, &Partition> = self.assignment.iter().map(|(k, v)| (k.to_string(), v)).collect();
        m.serialize(s)
    }
}

/// Every multipartition of `n` over the surface's components, exactly once.
///
/// The order is lexicographic in the component ids, with the partitions of
/// each component in reverse-lexicographic order and larger sizes first.
pub fn enumerate_multipartitions(surface: &SurfaceModel, n: usize) -> Result<Vec<Multipartition>, PartitionError> {
    if n > MULTIPARTITION_CAP {
        return Err(PartitionError::Cap { n, cap: MULTIPARTITION_CAP });
    }
    let comps = surface.num_components();
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    fn go(
        c: usize,
        comps: usize,
        left: usize,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<(usize, Partition)>,
        out: &mut Vec<Multipartition>,
    ) {
        if c == comps {
            if left == 0 {
                out.push(Multipartition::new(cur.iter().cloned()));
            }
            return;
        }
        for k in (0..=left).rev() {
            if c + 1 == comps && k != left {
                continue;
            }
            for p in &by_size[k] {
                cur.push((c, p.clone()));
                go(c + 1, comps, left - k, by_size, cur, out);
                cur.pop();
            }
        }
    }
    go(0, comps, n, &by_size, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The multipartition order: for every down-set `D` of the flow order on the
/// surface, every component `F` outside `D` all of whose predecessors lie in `D`,
/// and every `i <= n`,
/// `sum_{F' in D} |a(F')| + sum_{j <= i} a(F)_j >= ` the same quantity for `b`.
///
/// On a chain of components the only such `D` is `{F' < F}`; on surfaces with
/// several legs the extra down-sets keep boxes from changing legs.
pub fn dominates(a: &Multipartition, b: &Multipartition, surface: &SurfaceModel) -> Result<bool, PartitionError> {
    let n = check_sizes(a, b)?;
    let (sizes_a, sizes_b) = (component_sizes(a, surface), component_sizes(b, surface));
    for d in surface.down_sets() {
        let sa: usize = d.iter().map(|&g| sizes_a[g]).sum();
        let sb: usize = d.iter().map(|&g| sizes_b[g]).sum();
        if sa < sb {
            return Ok(false);
        }
        let frontier = (0..surface.num_components())
            .filter(|f| !d.contains(f) && (0..surface.num_components()).all(|g| !surface.strictly_below(g, *f) || d.contains(&g)));
        for f in frontier {
            if !row_sums_dominate(sa, sb, &a.get(f), &b.get(f), n) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The inequalities with `D = {F' < F}` only. This is strictly weaker than
/// [`dominates`] once the surface has two legs.
pub fn dominates_below_only(a: &Multipartition, b: &Multipartition, surface: &SurfaceModel) -> Result<bool, PartitionError> {
    let n = check_sizes(a, b)?;
    let (sizes_a, sizes_b) = (component_sizes(a, surface), component_sizes(b, surface));
    for f in 0..surface.num_components() {
        let below = |sizes: &[usize]| -> usize {
            (0..surface.num_components()).filter(|&g| surface.strictly_below(g, f)).map(|g| sizes[g]).sum()
        };
        if !row_sums_dominate(below(&sizes_a), below(&sizes_b), &a.get(f), &b.get(f), n) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_sizes(a: &Multipartition, b: &Multipartition) -> Result<usize, PartitionError> {
    if a.size() != b.size() {
        return Err(PartitionError::SizeMismatch(a.size(), b.size()));
    }
    Ok(a.size())
}

fn component_sizes(m: &Multipartition, surface: &SurfaceModel) -> Vec<usize> {
    (0..surface.num_components()).map(|c| m.part_ref(c).map_or(0, Partition::size)).collect()
}

fn row_sums_dominate(base_a: usize, base_b: usize, pa: &Partition, pb: &Partition, n: usize) -> bool {
    let (mut sa, mut sb) = (base_a, base_b);
    for i in 1..=n.max(1) {
        sa += pa.part(i);
        sb += pb.part(i);
        if sa < sb {
            return false;
        }
    }
    true
}

/// Single moves lowering the multipartition order.
///
/// Move (i) takes one box from a row and puts it on a strictly higher row
/// (possibly a new one) of the same component. Move (ii) removes the top box
/// of the first column of `a(F)`, when that box ends its row, and appends a
/// box to the first row of `a(G)` for a T-curve `F -> G`.
pub fn dominance_moves(a: &Multipartition, surface: &SurfaceModel) -> Vec<Multipartition> {
    let mut out = BTreeSet::new();
    for (f, p) in a.support() {
        let parts = p.parts();
        for j1 in 0..parts.len() {
            for j2 in (j1 + 1)..=parts.len() {
                let mut q = parts.to_vec();
                q[j1] -= 1;
                if j2 == parts.len() {
                    q.push(1);
                } else {
                    q[j2] += 1;
                }
                // Valid only if the sequence stays weakly decreasing.
                if is_sorted_desc(&q) {
                    let mut m = a.clone();
                    m.set(f, Partition::new(q));
                    out.insert(m);
                }
            }
        }
        if parts.last() == Some(&1) {
            let mut reduced = parts.to_vec();
            reduced.pop();
            for g in surface.successors(f) {
                let mut m = a.clone();
                m.set(f, Partition::new(reduced.clone()));
                let mut pg = m.get(g).parts().to_vec();
                if pg.is_empty() {
                    pg.push(1);
                } else {
                    pg[0] += 1;
                }
                m.set(g, Partition::new(pg));
                out.insert(m);
            }
        }
    }
    out.into_iter().collect()
}

fn is_sorted_desc(q: &[usize]) -> bool {
    q.windows(2).all(|w| w[0] >= w[1])
}

/// Reflexive-transitive closure of [`dominance_moves`] starting at `a`.
pub fn moves_closure(a: &Multipartition, surface: &SurfaceModel) -> BTreeSet<Multipartition> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![a.clone()];
    while let Some(m) = stack.pop() {
        if seen.insert(m.clone()) {
            for next in dominance_moves(&m, surface) {
                if !seen.contains(&next) {
                    stack.push(next);
                }
            }
        }
    }
    seen
}

/// Ordered sequence of nonnegative integers (a weak composition).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// All length-`c` sequences of nonnegative integers summing to `n`,
/// lexicographically decreasing.
pub fn weak_compositions(n: usize, c: usize) -> Vec<Composition> {
    assert!(c >= 1, "compositions need at least one part");
    let mut out = Vec::new();
    fn go(n: usize, c: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if c == 1 {
            cur.push(n);
            out.push(Composition::new(cur.clone()));
            cur.pop();
            return;
        }
        for k in (0..=n).rev() {
            cur.push(k);
            go(n - k, c - 1, cur, out);
            cur.pop();
        }
    }
    go(n, c, &mut Vec::new(), &mut out);
    out
}

/// Nonnegative integer matrix with prescribed row and column sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaMatrix {
    pub entries: Vec<Vec<usize>>,
}

impl ThetaMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn transpose(&self) -> Self {
        let (r, c) = (self.rows(), self.cols());
        Self { entries: (0..c).map(|j| (0..r).map(|i| self.entries[i][j]).collect()).collect() }
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        self.transpose().row_sums()
    }
}

/// All matrices with row sums `lambda` and column sums `mu`.
pub fn theta_matrices(lambda: &Composition, mu: &Composition) -> Result<Vec<ThetaMatrix>, PartitionError> {
    if lambda.total() != mu.total() {
        return Err(PartitionError::TotalMismatch(lambda.total(), mu.total()));
    }
    let mut out = Vec::new();
    fn go(row: usize, lambda: &[usize], cols_left: &mut Vec<usize>, cur: &mut Vec<Vec<usize>>, out: &mut Vec<ThetaMatrix>) {
        if row == lambda.len() {
            if cols_left.iter().all(|&x| x == 0) {
                out.push(ThetaMatrix { entries: cur.clone() });
            }
            return;
        }
        // Distribute lambda[row] over the columns within the remaining capacity.
        let mut choices = Vec::new();
        fill(0, lambda[row], cols_left, &mut Vec::new(), &mut choices);
        for choice in choices {
            for (c, x) in cols_left.iter_mut().zip(&choice) {
                *c -= x;
            }
            cur.push(choice.clone());
            go(row + 1, lambda, cols_left, cur, out);
            cur.pop();
            for (c, x) in cols_left.iter_mut().zip(&choice) {
                *c += x;
            }
        }
    }
    fn fill(j: usize, left: usize, caps: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = caps[j + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for x in (lo..=left.min(caps[j])).rev() {
            cur.push(x);
            fill(j + 1, left - x, caps, cur, out);
            cur.pop();
        }
    }
    go(0, &lambda.parts, &mut mu.parts.clone(), &mut Vec::new(), &mut out);
    Ok(out)
}
