//! Buchberger's algorithm for submodules of free modules over `Q[x_1..x_n]`.
//!
//! Ideals are rank-one modules. Pairs are selected by sugar degree and pruned
//! with the Gebauer–Möller criteria; the coprime-leading-term criterion is only
//! applied in rank one, where it is valid.

use std::cmp::Ordering;
use std::collections::HashMap;

use hilbfix_core::exactalg::Rational;
use num_traits::{One, Zero};

use crate::mpoly::{exp_add, exp_coprime, exp_degree, exp_divides, exp_lcm, exp_sub, Exp, MPoly, MAX_VARS};

const KEY_LEN: usize = MAX_VARS + 1;

/// A matrix term order: exponents are compared by the dot products with each row in turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    rows: Vec<[i64; MAX_VARS]>,
}

impl TermOrder {
    /// Graded reverse lexicographic order on `vars` (first listed is largest).
    fn grevlex_rows(vars: &[usize]) -> Vec<[i64; MAX_VARS]> {
        let mut rows = Vec::new();
        let mut total = [0; MAX_VARS];
        for &v in vars {
            total[v] = 1;
        }
        rows.push(total);
        for &v in vars.iter().skip(1).rev() {
            let mut r = [0; MAX_VARS];
            r[v] = -1;
            rows.push(r);
        }
        rows
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::block_grevlex(&[&(0..nvars).collect::<Vec<_>>()])
    }

    /// Block order: earlier blocks dominate, each block ordered by grevlex.
    pub fn block_grevlex(blocks: &[&[usize]]) -> Self {
        let mut rows = Vec::new();
        for b in blocks {
            rows.extend(Self::grevlex_rows(b));
        }
        assert!(rows.len() <= MAX_VARS, "too many order rows");
        Self { rows }
    }

    /// Weighted order refined by a tie-break order.
    pub fn weighted(weights: &[i64], tie: &TermOrder) -> Self {
        let mut w = [0; MAX_VARS];
        w[..weights.len()].copy_from_slice(weights);
        let mut rows = vec![w];
        rows.extend(tie.rows.iter().copied());
        rows.truncate(MAX_VARS);
        Self { rows }
    }

    fn key(&self, e: &Exp) -> [i64; MAX_VARS] {
        let mut k = [0; MAX_VARS];
        for (r, row) in self.rows.iter().enumerate() {
            k[r] = row.iter().zip(e).map(|(a, &b)| a * b as i64).sum();
        }
        k
    }

    pub fn cmp(&self, a: &Exp, b: &Exp) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// How components are ranked against terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    /// Position over term; component 0 is the largest.
    Pot,
    /// Term over position.
    Top,
}

#[derive(Clone, Debug)]
pub struct ModuleRing {
    pub nvars: usize,
    pub order: TermOrder,
    pub position: Position,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    key: [i64; KEY_LEN],
    pub comp: u32,
    pub exp: Exp,
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

/// Element of a free module, terms stored in increasing order (leading term last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    terms: Vec<(Term, Rational)>,
}

impl ModuleRing {
    pub fn new(nvars: usize, order: TermOrder, position: Position) -> Self {
        Self { nvars, order, position }
    }

    pub fn term(&self, comp: u32, exp: Exp) -> Term {
        let k = self.order.key(&exp);
        let mut key = [0; KEY_LEN];
        match self.position {
            Position::Pot => {
                key[0] = -(comp as i64);
                key[1..].copy_from_slice(&k);
            }
            Position::Top => {
                key[..MAX_VARS].copy_from_slice(&k);
                key[MAX_VARS] = -(comp as i64);
            }
        }
        Term { key, comp, exp }
    }

    fn shift(&self, t: &Term, m: &Exp) -> Term {
        self.term(t.comp, exp_add(&t.exp, m))
    }

    /// Builds a vector from per-component polynomials.
    pub fn vector(&self, entries: &[(usize, &MPoly)]) -> Vector {
        let mut terms = Vec::new();
        for (comp, p) in entries {
            assert_eq!(p.nvars(), self.nvars);
            for (e, c) in p.terms() {
                terms.push((self.term(*comp as u32, *e), c.clone()));
            }
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut v = Vector { terms: Vec::with_capacity(terms.len()) };
        for (t, c) in terms {
            match v.terms.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += c,
                _ => v.terms.push((t, c)),
            }
        }
        v.terms.retain(|(_, c)| !c.is_zero());
        v
    }

    pub fn poly_vector(&self, p: &MPoly) -> Vector {
        self.vector(&[(0, p)])
    }

    /// Per-component polynomials of a vector of the given rank.
    pub fn entries(&self, v: &Vector, rank: usize) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(self.nvars); rank];
        for (t, c) in &v.terms {
            out[t.comp as usize].add_term(t.exp, c.clone());
        }
        out
    }

    /// Same vector with components renumbered by `f`; the caller keeps `f` injective.
    pub fn remap(&self, v: &Vector, f: impl Fn(u32) -> u32) -> Vector {
        let mut terms: Vec<(Term, Rational)> =
            v.terms.iter().map(|(t, c)| (self.term(f(t.comp), t.exp), c.clone())).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Vector { terms }
    }

    /// `a - c * x^m * b`.
    fn sub_mul(&self, a: &Vector, c: &Rational, m: &Exp, b: &Vector) -> Vector {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut ia = a.terms.iter().peekable();
        let mut ib = b.terms.iter().map(|(t, v)| (self.shift(t, m), v * c)).peekable();
        loop {
            match (ia.peek(), ib.peek()) {
                (Some((ta, _)), Some((tb, _))) => match ta.cmp(tb) {
                    Ordering::Less => out.push(ia.next().unwrap().clone()),
                    Ordering::Greater => {
                        let (t, v) = ib.next().unwrap();
                        out.push((t, -v));
                    }
                    Ordering::Equal => {
                        let (t, va) = ia.next().unwrap().clone();
                        let (_, vb) = ib.next().unwrap();
                        let s = va - vb;
                        if !s.is_zero() {
                            out.push((t, s));
                        }
                    }
                },
                (Some(_), None) => out.push(ia.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (t, v) = ib.next().unwrap();
                    out.push((t, -v));
                }
                (None, None) => break,
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, a: &Vector, b: &Vector) -> Vector {
        self.sub_mul(a, &-Rational::one(), &[0; MAX_VARS], b)
    }

    pub fn sub(&self, a: &Vector, b: &Vector) -> Vector {
        self.sub_mul(a, &Rational::one(), &[0; MAX_VARS], b)
    }

    pub fn scale_mono(&self, v: &Vector, c: &Rational, m: &Exp) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector { terms: v.terms.iter().map(|(t, x)| (self.shift(t, m), x * c)).collect() }
    }

    /// `p * v` for a polynomial `p`.
    pub fn mul_poly(&self, p: &MPoly, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (e, c) in p.terms() {
            out = self.add(&out, &self.scale_mono(v, c, e));
        }
        out
    }

    /// Full normal form of `v` with respect to `basis`.
    pub fn normal_form(&self, v: &Vector, basis: &[Vector]) -> Vector {
        let index = ReducerIndex::new(basis);
        self.reduce_with(v, basis, &index)
    }

    fn reduce_with(&self, v: &Vector, basis: &[Vector], index: &ReducerIndex) -> Vector {
        let mut rest = v.clone();
        let mut done: Vec<(Term, Rational)> = Vec::new();
        while let Some((t, c)) = rest.terms.last().cloned() {
            match index.find(basis, &t) {
                Some(g) => {
                    let gl = basis[g].lead();
                    let m = exp_sub(&t.exp, &gl.exp);
                    let coef = c / basis[g].lead_coeff();
                    rest = self.sub_mul(&rest, &coef, &m, &basis[g]);
                }
                None => {
                    rest.terms.pop();
                    done.push((t, c));
                }
            }
        }
        done.reverse();
        Vector { terms: done }
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, each element monic.
    pub fn groebner(&self, gens: &[Vector]) -> Vec<Vector> {
        Buchberger::new(self).run(gens)
    }

    /// Whether every element of `gens` reduces to zero modulo `gb`.
    pub fn contains_all(&self, gb: &[Vector], gens: &[Vector]) -> bool {
        let index = ReducerIndex::new(gb);
        gens.iter().all(|g| self.reduce_with(g, gb, &index).is_zero())
    }

    /// Checks that all S-vectors of `gb` reduce to zero.
    pub fn audit(&self, gb: &[Vector]) -> bool {
        let index = ReducerIndex::new(gb);
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                if let Some(s) = self.s_vector(&gb[i], &gb[j]) {
                    if !self.reduce_with(&s, gb, &index).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn s_vector(&self, a: &Vector, b: &Vector) -> Option<Vector> {
        let (la, lb) = (a.lead(), b.lead());
        if la.comp != lb.comp {
            return None;
        }
        let l = exp_lcm(&la.exp, &lb.exp);
        let ma = exp_sub(&l, &la.exp);
        let mb = exp_sub(&l, &lb.exp);
        let sa = self.scale_mono(a, &a.lead_coeff().recip(), &ma);
        Some(self.sub_mul(&sa, &b.lead_coeff().recip(), &mb, b))
    }
}

impl Vector {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Term {
        self.terms.last().expect("zero vector has no leading term").0
    }

    pub fn lead_coeff(&self) -> &Rational {
        &self.terms.last().expect("zero vector has no leading term").1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter().map(|(t, c)| (t, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead_coeff().recip();
        Self { terms: self.terms.iter().map(|(t, c)| (*t, c * &inv)).collect() }
    }

    /// Smallest component index with a nonzero entry.
    pub fn min_comp(&self) -> Option<u32> {
        self.terms.iter().map(|(t, _)| t.comp).min()
    }

    pub fn components(&self) -> std::collections::BTreeSet<u32> {
        self.terms.iter().map(|(t, _)| t.comp).collect()
    }

    /// Weight of a homogeneous vector under variable and component weights.
    pub fn weight(&self, var_weights: &[i64], comp_weights: &[i64]) -> Option<i64> {
        let mut it = self
            .terms
            .iter()
            .map(|(t, _)| crate::mpoly::weight_of(&t.exp, var_weights) + comp_weights[t.comp as usize]);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

/// Looks up reducers by component.
struct ReducerIndex {
    by_comp: HashMap<u32, Vec<usize>>,
}

impl ReducerIndex {
    fn new(basis: &[Vector]) -> Self {
        let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, g) in basis.iter().enumerate() {
            by_comp.entry(g.lead().comp).or_default().push(i);
        }
        // Prefer reducers with fewer terms.
        for v in by_comp.values_mut() {
            v.sort_by_key(|&i| basis[i].num_terms());
        }
        Self { by_comp }
    }

    fn push(&mut self, basis: &[Vector], i: usize) {
        self.by_comp.entry(basis[i].lead().comp).or_default().push(i);
    }

    fn find(&self, basis: &[Vector], t: &Term) -> Option<usize> {
        self.by_comp.get(&t.comp)?.iter().copied().find(|&i| exp_divides(&basis[i].lead().exp, &t.exp))
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    sugar: u32,
}

struct Buchberger<'a> {
    ring: &'a ModuleRing,
    basis: Vec<Vector>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    index: ReducerIndex,
    rank_one: bool,
}

fn vector_degree(v: &Vector) -> u32 {
    v.terms.iter().map(|(t, _)| exp_degree(&t.exp)).max().unwrap_or(0)
}

impl<'a> Buchberger<'a> {
    fn new(ring: &'a ModuleRing) -> Self {
        Self {
            ring,
            basis: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            index: ReducerIndex { by_comp: HashMap::new() },
            rank_one: true,
        }
    }

    fn run(mut self, gens: &[Vector]) -> Vec<Vector> {
        self.rank_one = gens.iter().all(|g| g.terms.iter().all(|(t, _)| t.comp == 0));
        let mut sorted: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
        sorted.sort_by_key(|g| g.lead());
        for g in sorted {
            let r = self.ring.reduce_with(g, &self.basis, &self.index);
            if !r.is_zero() {
                let s = vector_degree(g);
                self.insert(r.monic(), s);
            }
        }
        while let Some(p) = self.next_pair() {
            let Some(s) = self.ring.s_vector(&self.basis[p.i], &self.basis[p.j]) else {
                continue;
            };
            let r = self.ring.reduce_with(&s, &self.basis, &self.index);
            if !r.is_zero() {
                self.insert(r.monic(), p.sugar);
            }
        }
        self.reduced()
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| {
                let ta = self.ring.term(0, a.lcm);
                let tb = self.ring.term(0, b.lcm);
                ta.cmp(&tb)
            }))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Exp) -> u32 {
        let li = self.basis[i].lead().exp;
        let lj = self.basis[j].lead().exp;
        (self.sugar[i] + exp_degree(lcm) - exp_degree(&li)).max(self.sugar[j] + exp_degree(lcm) - exp_degree(&lj))
    }

    fn insert(&mut self, h: Vector, sugar: u32) {
        let k = self.basis.len();
        let lk = h.lead();
        self.basis.push(h);
        self.sugar.push(sugar.max(vector_degree(&self.basis[k])));
        self.active.push(true);
        self.index.push(&self.basis, k);

        // Chain criterion on existing pairs.
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if basis[p.i].lead().comp != lk.comp || !exp_divides(&lk.exp, &p.lcm) {
                return true;
            }
            let lik = exp_lcm(&basis[p.i].lead().exp, &lk.exp);
            let ljk = exp_lcm(&basis[p.j].lead().exp, &lk.exp);
            lik == p.lcm || ljk == p.lcm
        });

        // New pairs with the M and F criteria.
        let mut fresh: Vec<(usize, Exp, bool)> = (0..k)
            .filter(|&i| self.active[i] && self.basis[i].lead().comp == lk.comp)
            .map(|i| {
                let li = self.basis[i].lead().exp;
                (i, exp_lcm(&li, &lk.exp), self.rank_one && exp_coprime(&li, &lk.exp))
            })
            .collect();
        let lcms: Vec<Exp> = fresh.iter().map(|f| f.1).collect();
        fresh.retain(|(_, l, _)| !lcms.iter().any(|m| m != l && exp_divides(m, l)));
        let mut by_lcm: HashMap<Exp, Vec<(usize, bool)>> = HashMap::new();
        for (i, l, coprime) in fresh {
            by_lcm.entry(l).or_default().push((i, coprime));
        }
        let mut groups: Vec<(Exp, Vec<(usize, bool)>)> = by_lcm.into_iter().collect();
        groups.sort_by_key(|(l, _)| *l);
        for (l, group) in groups {
            if group.iter().any(|(_, c)| *c) {
                continue;
            }
            let i = group[0].0;
            let sugar = self.pair_sugar(i, k, &l);
            self.pairs.push(Pair { i, j: k, lcm: l, sugar });
        }

        for i in 0..k {
            if self.active[i] && self.basis[i].lead().comp == lk.comp && exp_divides(&lk.exp, &self.basis[i].lead().exp) {
                self.active[i] = false;
            }
        }
    }

    fn reduced(self) -> Vec<Vector> {
        let ring = self.ring;
        let mut minimal: Vec<Vector> = Vec::new();
        let mut cands: Vec<Vector> = self.basis;
        cands.sort_by_key(|g| g.lead());
        for g in cands {
            let l = g.lead();
            if minimal.iter().any(|m| m.lead().comp == l.comp && exp_divides(&m.lead().exp, &l.exp)) {
                continue;
            }
            minimal.retain(|m| !(m.lead().comp == l.comp && exp_divides(&l.exp, &m.lead().exp)));
            minimal.push(g);
        }
        let mut out = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Vector> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
            let lead = minimal[i].terms.last().cloned().unwrap();
            let tail = Vector { terms: minimal[i].terms[..minimal[i].terms.len() - 1].to_vec() };
            let mut r = ring.normal_form(&tail, &others);
            r.terms.push(lead);
            out.push(r.monic());
        }
        out.sort_by_key(|g| g.lead());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MPoly {
        MPoly::var(3, i)
    }

    #[test]
    fn grevlex_orders_by_degree_then_reverse_lex() {
        let o = TermOrder::grevlex(3);
        let e = |a, b, c| {
            let mut x = [0; MAX_VARS];
            x[0] = a;
            x[1] = b;
            x[2] = c;
            x
        };
        assert_eq!(o.cmp(&e(0, 0, 2), &e(1, 0, 0)), Ordering::Greater);
        // x1^2 > x0 x2 in grevlex with x0 > x1 > x2.
        assert_eq!(o.cmp(&e(0, 2, 0), &e(1, 0, 1)), Ordering::Greater);
        assert_eq!(o.cmp(&e(1, 0, 0), &e(0, 1, 0)), Ordering::Greater);
    }

    #[test]
    fn twisted_cubic() {
        // (x1^2 - x0 x2, x1 x2 - x0 ..) style: the ideal of (t, t^2, t^3) in affine coordinates.
        let ring = ModuleRing::new(3, TermOrder::grevlex(3), Position::Pot);
        let f1 = &x(1) - &x(0).pow(2);
        let f2 = &x(2) - &x(0).pow(3);
        let gb = ring.groebner(&[ring.poly_vector(&f1), ring.poly_vector(&f2)]);
        assert!(ring.audit(&gb));
        assert!(ring.contains_all(&gb, &[ring.poly_vector(&(&x(2) - &(&x(0) * &x(1))))]));
        assert!(!ring.contains_all(&gb, &[ring.poly_vector(&x(0))]));
    }

    #[test]
    fn elimination() {
        // Eliminating x0 from (x1 - x0^2, x2 - x0^3) gives x1^3 - x2^2.
        let ring = ModuleRing::new(3, TermOrder::block_grevlex(&[&[0], &[1, 2]]), Position::Pot);
        let f1 = &x(1) - &x(0).pow(2);
        let f2 = &x(2) - &x(0).pow(3);
        let gb = ring.groebner(&[ring.poly_vector(&f1), ring.poly_vector(&f2)]);
        let free: Vec<&Vector> = gb.iter().filter(|g| g.terms().all(|(t, _)| t.exp[0] == 0)).collect();
        assert_eq!(free.len(), 1);
        let p = &ring.entries(free[0], 1)[0];
        let expected = &x(1).pow(3) - &x(2).pow(2);
        assert!(p == &expected || p == &(-&expected));
    }

    #[test]
    fn module_groebner() {
        // Rows (x, y) and (y, x) over Q[x, y] in R^2.
        let ring = ModuleRing::new(2, TermOrder::grevlex(2), Position::Pot);
        let (a, b) = (MPoly::var(2, 0), MPoly::var(2, 1));
        let v1 = ring.vector(&[(0, &a), (1, &b)]);
        let v2 = ring.vector(&[(0, &b), (1, &a)]);
        let gb = ring.groebner(&[v1.clone(), v2.clone()]);
        assert!(ring.audit(&gb));
        assert!(ring.contains_all(&gb, &[v1, v2]));
        // (0, y^2 - x^2) lies in the module.
        let diff = &b.pow(2) - &a.pow(2);
        assert!(ring.contains_all(&gb, &[ring.vector(&[(1, &diff)])]));
        assert!(!ring.contains_all(&gb, &[ring.vector(&[(1, &a)])]));
    }
}
