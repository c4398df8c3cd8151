//! The truncated base ring R_N = Q(ζ)[u,v]/(u,v)^N and finite-colength ideals of it.
//!
//! Monomials are ordered by total degree, then by the power of `v`, so the
//! order starts `1, u, v, u^2, uv, v^2, ...`. Subspaces of R_N use this order
//! for their canonical bases, which makes the pivot of every row its
//! lowest-degree term.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{CycField, CycScalar, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, kernel, SparseVec, Subspace};
use crate::notation::{format_monomial, format_terms, ExprRing};

const NONE: u32 = u32::MAX;

pub fn monomial_count(n: usize) -> usize {
    n * (n + 1) / 2
}

pub fn monomial_index(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

pub fn monomial_at(idx: usize) -> (usize, usize) {
    let mut d = 0;
    while (d + 1) * (d + 2) / 2 <= idx {
        d += 1;
    }
    let j = idx - d * (d + 1) / 2;
    (d - j, j)
}

/// Index tables for the monomials of R_N.
#[derive(Clone, Debug)]
pub struct Monomials {
    n: usize,
    exps: Vec<(u32, u32)>,
    times_u: Vec<u32>,
    times_v: Vec<u32>,
}

impl Monomials {
    pub fn new(n: usize) -> Self {
        let count = monomial_count(n);
        let exps: Vec<(u32, u32)> = (0..count).map(|k| {
            let (i, j) = monomial_at(k);
            (i as u32, j as u32)
        }).collect();
        let shift = |di: usize, dj: usize| -> Vec<u32> {
            exps.iter()
                .map(|&(i, j)| {
                    let (i, j) = (i as usize + di, j as usize + dj);
                    if i + j < n { monomial_index(i, j) as u32 } else { NONE }
                })
                .collect()
        };
        let times_u = shift(1, 0);
        let times_v = shift(0, 1);
        Monomials { n, exps, times_u, times_v }
    }

    pub fn trunc(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self, idx: usize) -> (u32, u32) {
        self.exps[idx]
    }

    pub fn degree(&self, idx: usize) -> usize {
        let (i, j) = self.exps[idx];
        (i + j) as usize
    }

    /// Index of `mono * u^du * v^dv`, if still below the truncation.
    pub fn shift(&self, idx: usize, du: u32, dv: u32) -> Option<usize> {
        let (i, j) = self.exps[idx];
        let (i, j) = ((i + du) as usize, (j + dv) as usize);
        (i + j < self.n).then(|| monomial_index(i, j))
    }

    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        let (i, j) = self.exps[b];
        self.shift(a, i, j)
    }

    pub fn times_u(&self, idx: usize) -> Option<usize> {
        let t = self.times_u[idx];
        (t != NONE).then_some(t as usize)
    }

    pub fn times_v(&self, idx: usize) -> Option<usize> {
        let t = self.times_v[idx];
        (t != NONE).then_some(t as usize)
    }

    /// First index of the monomials of total degree `d`.
    pub fn degree_start(d: usize) -> usize {
        d * (d + 1) / 2
    }

    pub fn label(&self, idx: usize) -> String {
        let (i, j) = self.exps[idx];
        format_monomial(&[("u", i), ("v", j)])
    }
}

/// An element of R_N in canonical sparse form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    n: usize,
    order: u32,
    terms: SparseVec,
}

impl TruncSeries {
    pub fn zero(n: usize, field: &CycField) -> Self {
        TruncSeries { n, order: field.order(), terms: Vec::new() }
    }

    pub fn constant(n: usize, c: CycScalar) -> Self {
        let order = c.order();
        let terms = if c.is_zero() { Vec::new() } else { vec![(0, c)] };
        TruncSeries { n, order, terms }
    }

    pub fn one(n: usize, field: &CycField) -> Self {
        Self::constant(n, field.one())
    }

    pub fn monomial(n: usize, i: usize, j: usize, c: CycScalar) -> Self {
        let order = c.order();
        let terms = if i + j < n && !c.is_zero() { vec![(monomial_index(i, j), c)] } else { Vec::new() };
        TruncSeries { n, order, terms }
    }

    pub fn u(n: usize, field: &CycField) -> Self {
        Self::monomial(n, 1, 0, field.one())
    }

    pub fn v(n: usize, field: &CycField) -> Self {
        Self::monomial(n, 0, 1, field.one())
    }

    /// Build from sorted (monomial index, coefficient) pairs; indices past the truncation are dropped.
    pub fn from_terms(n: usize, field: &CycField, terms: SparseVec) -> Self {
        let count = monomial_count(n);
        let terms = terms.into_iter().filter(|(i, c)| *i < count && !c.is_zero()).collect();
        TruncSeries { n, order: field.order(), terms }
    }

    pub fn trunc(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &SparseVec {
        &self.terms
    }

    pub fn into_terms(self) -> SparseVec {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<&CycScalar> {
        let idx = monomial_index(i, j);
        self.terms.iter().find(|(k, _)| *k == idx).map(|(_, c)| c)
    }

    /// Lowest total degree with a nonzero coefficient.
    pub fn order_of_vanishing(&self) -> Option<usize> {
        self.terms.first().map(|(k, _)| {
            let (i, j) = monomial_at(*k);
            i + j
        })
    }

    /// Same series viewed in R_{n2}: truncated further, or lifted with zero tail.
    pub fn with_trunc(&self, n2: usize) -> Self {
        let count = monomial_count(n2);
        TruncSeries { n: n2, order: self.order, terms: self.terms.iter().filter(|(k, _)| *k < count).cloned().collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::TruncMismatch { left: self.n, right: other.n });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let field = CycField::new(self.order);
        Ok(TruncSeries { n: self.n, order: self.order, terms: linalg::add_vec(&field, &self.terms, &other.terms) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let field = CycField::new(self.order);
        Ok(TruncSeries { n: self.n, order: self.order, terms: linalg::sub_vec(&field, &self.terms, &other.terms) })
    }

    pub fn neg(&self) -> Self {
        TruncSeries { n: self.n, order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn scale(&self, c: &CycScalar) -> Result<Self> {
        if c.order() != self.order {
            return Err(Error::OrderMismatch { left: self.order, right: c.order() });
        }
        let field = CycField::new(self.order);
        Ok(TruncSeries { n: self.n, order: self.order, terms: linalg::scale_vec(&field, c, &self.terms) })
    }

    /// Product in R_N; monomials of total degree ≥ N are discarded.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let field = CycField::new(self.order);
        let monos = Monomials::new(self.n);
        Ok(TruncSeries { n: self.n, order: self.order, terms: series_mul(&field, &monos, &self.terms, &other.terms) })
    }
}

pub(crate) fn series_mul(field: &CycField, monos: &Monomials, a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = Vec::new();
    for (i, x) in a {
        for (j, y) in b {
            if let Some(k) = monos.product(*i, *j) {
                out.push((k, field.mul(x, y)));
            }
        }
    }
    linalg::collect_terms(out)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_terms(self.terms.iter().map(|(k, c)| {
            let (i, j) = monomial_at(*k);
            (c.clone(), format_monomial(&[("u", i as u32), ("v", j as u32)]))
        }));
        f.write_str(&s)
    }
}

/// Expression context for parsing series in `u`, `v` (and `z` for ζ).
#[derive(Clone, Debug)]
pub struct SeriesRing {
    field: CycField,
    monos: Monomials,
}

impl SeriesRing {
    pub fn new(n: usize, field: CycField) -> Self {
        SeriesRing { field, monos: Monomials::new(n) }
    }

    pub fn trunc(&self) -> usize {
        self.monos.trunc()
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn parse(&self, s: &str) -> Result<TruncSeries> {
        crate::notation::parse_expr(self, s)
    }
}

impl ExprRing for SeriesRing {
    type Elem = TruncSeries;
    fn constant(&self, q: Rational) -> TruncSeries {
        TruncSeries::constant(self.trunc(), self.field.from_rational(q))
    }
    fn variable(&self, name: char) -> Option<TruncSeries> {
        let n = self.trunc();
        match name {
            'u' => Some(TruncSeries::u(n, &self.field)),
            'v' => Some(TruncSeries::v(n, &self.field)),
            'z' => Some(TruncSeries::constant(n, self.field.zeta())),
            _ => None,
        }
    }
    fn add(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        TruncSeries { n: a.n, order: a.order, terms: linalg::add_vec(&self.field, &a.terms, &b.terms) }
    }
    fn mul(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        TruncSeries { n: a.n, order: a.order, terms: series_mul(&self.field, &self.monos, &a.terms, &b.terms) }
    }
    fn neg(&self, a: &TruncSeries) -> TruncSeries {
        a.neg()
    }
}

fn shift_vec(monos: &Monomials, v: &SparseVec, by_u: bool) -> SparseVec {
    v.iter()
        .filter_map(|(k, c)| {
            let t = if by_u { monos.times_u(*k) } else { monos.times_v(*k) };
            t.map(|t| (t, c.clone()))
        })
        .collect()
}

/// Closure of `seeds` under multiplication by `u` and `v`.
fn close_ideal(field: &CycField, monos: &Monomials, base: Subspace, seeds: Vec<SparseVec>) -> Subspace {
    let mut sub = base;
    let mut queue: VecDeque<SparseVec> = seeds.into();
    while let Some(v) = queue.pop_front() {
        if let Some(row) = sub.insert(field, v) {
            let row = row.clone();
            queue.push_back(shift_vec(monos, &row, true));
            queue.push_back(shift_vec(monos, &row, false));
        }
    }
    sub.canonicalize(field);
    sub
}

/// Smallest degree d such that every monomial of degree ≥ d lies in the subspace.
fn saturation_degree(field: &CycField, monos: &Monomials, basis: &Subspace) -> Option<usize> {
    let n = monos.trunc();
    let mut d = n;
    while d > 0 {
        let deg = d - 1;
        let all = (Monomials::degree_start(deg)..Monomials::degree_start(deg + 1)).all(|k| basis.contains_unit(field, k));
        if !all {
            break;
        }
        d -= 1;
    }
    (d < n).then_some(d)
}

/// A finite-colength ideal of R, held as a canonical subspace of R_N.
#[derive(Clone, Debug)]
pub struct CommIdeal {
    field: CycField,
    monos: Monomials,
    basis: Subspace,
    saturation: Option<usize>,
}

impl PartialEq for CommIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.trunc() == other.trunc() && self.field == other.field && self.basis == other.basis
    }
}

impl Eq for CommIdeal {}

impl CommIdeal {
    fn from_basis(field: &CycField, monos: Monomials, basis: Subspace) -> Self {
        let saturation = saturation_degree(field, &monos, &basis);
        CommIdeal { field: field.clone(), monos, basis, saturation }
    }

    /// The ideal generated by `gens` inside R_N. Generators from a different
    /// truncation are cut or lifted to N.
    pub fn from_generators(gens: &[TruncSeries], n: usize, field: &CycField) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(alloc::format!("truncation N = {n} must be at least 2")));
        }
        for g in gens {
            if g.order() != field.order() {
                return Err(Error::OrderMismatch { left: field.order(), right: g.order() });
            }
        }
        let monos = Monomials::new(n);
        let seeds = gens.iter().map(|g| g.with_trunc(n).into_terms()).collect();
        let basis = close_ideal(field, &monos, Subspace::zero(monos.len()), seeds);
        Ok(Self::from_basis(field, monos, basis))
    }

    /// Wrap a subspace after checking it is closed under `u` and `v`.
    pub fn from_subspace(field: &CycField, n: usize, basis: Subspace) -> Result<Self> {
        let monos = Monomials::new(n);
        if basis.ambient() != monos.len() {
            return Err(Error::TruncMismatch { left: monos.len(), right: basis.ambient() });
        }
        for r in basis.rows() {
            if !basis.contains(field, &shift_vec(&monos, r, true)) || !basis.contains(field, &shift_vec(&monos, r, false)) {
                return Err(Error::NotLeftIdeal);
            }
        }
        Ok(Self::from_basis(field, monos, basis))
    }

    pub fn unit(n: usize, field: &CycField) -> Self {
        Self::maximal_power(0, n, field)
    }

    pub fn maximal(n: usize, field: &CycField) -> Self {
        Self::maximal_power(1, n, field)
    }

    /// 𝔪^k, spanned by all monomials of degree ≥ k.
    pub fn maximal_power(k: usize, n: usize, field: &CycField) -> Self {
        let monos = Monomials::new(n);
        let start = Monomials::degree_start(k.min(n));
        let basis = Subspace::spanned_by_units(field, monos.len(), start..monos.len());
        Self::from_basis(field, monos, basis)
    }

    /// The monomial ideal whose quotient is spanned by the first `l` monomials
    /// in the graded order (the lexicographically smallest staircase of size `l`).
    pub fn staircase(l: usize, n: usize, field: &CycField) -> Self {
        let monos = Monomials::new(n);
        let basis = Subspace::spanned_by_units(field, monos.len(), l.min(monos.len())..monos.len());
        Self::from_basis(field, monos, basis)
    }

    pub fn trunc(&self) -> usize {
        self.monos.trunc()
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn basis_series(&self) -> Vec<TruncSeries> {
        let n = self.trunc();
        self.basis.rows().iter().map(|r| TruncSeries { n, order: self.field.order(), terms: r.clone() }).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation.is_some()
    }

    /// Smallest d with 𝔪^d contained in the ideal, when certified.
    pub fn saturation_degree(&self) -> Option<usize> {
        self.saturation
    }

    /// How many further orders of truncation the ideal can afford to lose.
    pub fn precision_budget(&self) -> Option<usize> {
        self.saturation.map(|d| self.trunc() - 1 - d)
    }

    pub fn colength(&self) -> Result<usize> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        Ok(self.basis.codim())
    }

    pub fn is_unit(&self) -> bool {
        self.basis.contains_unit(&self.field, 0)
    }

    pub fn contains(&self, s: &TruncSeries) -> bool {
        self.basis.contains(&self.field, s.terms())
    }

    pub fn is_subideal_of(&self, other: &CommIdeal) -> bool {
        self.basis.is_subspace_of(&self.field, &other.basis)
    }

    pub fn sum(&self, other: &CommIdeal) -> CommIdeal {
        Self::from_basis(&self.field, self.monos.clone(), self.basis.sum(&self.field, &other.basis))
    }

    pub fn intersection(&self, other: &CommIdeal) -> CommIdeal {
        Self::from_basis(&self.field, self.monos.clone(), self.basis.intersection(&self.field, &other.basis))
    }

    /// u·J.
    pub fn times_u(&self) -> CommIdeal {
        let rows = self.basis.rows().iter().map(|r| shift_vec(&self.monos, r, true));
        Self::from_basis(&self.field, self.monos.clone(), Subspace::from_vectors(&self.field, self.monos.len(), rows))
    }

    /// 𝔪·J.
    pub fn times_maximal(&self) -> CommIdeal {
        let rows = self
            .basis
            .rows()
            .iter()
            .flat_map(|r| [shift_vec(&self.monos, r, true), shift_vec(&self.monos, r, false)]);
        Self::from_basis(&self.field, self.monos.clone(), Subspace::from_vectors(&self.field, self.monos.len(), rows))
    }

    /// (J : 𝔪) = {x : u x ∈ J and v x ∈ J}.
    pub fn colon_maximal(&self) -> CommIdeal {
        let count = self.monos.len();
        let images: Vec<SparseVec> = (0..count)
            .map(|k| {
                let mut img = Vec::new();
                if let Some(t) = self.monos.times_u(k) {
                    img.extend(self.basis.reduce(&self.field, vec![(t, self.field.one())]));
                }
                if let Some(t) = self.monos.times_v(k) {
                    img.extend(
                        self.basis.reduce(&self.field, vec![(t, self.field.one())]).into_iter().map(|(i, c)| (i + count, c)),
                    );
                }
                img
            })
            .collect();
        let ker = kernel(&self.field, &images, 2 * count);
        Self::from_basis(&self.field, self.monos.clone(), ker)
    }

    /// The same ideal of R viewed at truncation `n2`. Exact when the ideal is saturated.
    pub fn with_trunc(&self, n2: usize) -> Result<CommIdeal> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        CommIdeal::from_generators(&self.basis_series(), n2, &self.field)
    }

    fn require_budget(&self, required: usize) -> Result<()> {
        let budget = self.precision_budget().ok_or(Error::NotSaturated)?;
        if budget < required {
            return Err(Error::PrecisionExhausted { budget, required });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &CommIdeal) -> Result<()> {
        if self.trunc() != other.trunc() {
            return Err(Error::TruncMismatch { left: self.trunc(), right: other.trunc() });
        }
        if self.field != other.field {
            return Err(Error::OrderMismatch { left: self.field.order(), right: other.field.order() });
        }
        Ok(())
    }

    /// Codimension-one ideal of `self` containing `floor`, dropping the
    /// quotient direction with the smallest pivot. Requires `floor ⊊ self`
    /// with `𝔪·self ⊆ floor`.
    fn drop_first_direction(&self, floor: &CommIdeal) -> CommIdeal {
        let mut reps = self.basis.quotient_reps(&self.field, &floor.basis);
        debug_assert!(!reps.is_empty());
        reps.remove(0);
        let mut basis = floor.basis.clone();
        for r in reps {
            basis.insert(&self.field, r);
        }
        basis.canonicalize(&self.field);
        Self::from_basis(&self.field, self.monos.clone(), basis)
    }

    fn add_vector(&self, v: SparseVec) -> CommIdeal {
        let mut basis = self.basis.clone();
        basis.insert(&self.field, v);
        basis.canonicalize(&self.field);
        Self::from_basis(&self.field, self.monos.clone(), basis)
    }
}

/// For `inner ⊊ outer`, returns `(smaller, larger)` with
/// `outer/smaller ≅ R/𝔪 ≅ larger/inner`, `inner ⊆ smaller ⊆ outer` and
/// `inner ⊆ larger ⊆ outer`.
///
/// `smaller` keeps the last quotient direction of `outer / (𝔪·outer + inner)`;
/// `larger` adds the first socle direction of `outer / inner`.
pub fn socle_and_cosocle_picks(inner: &CommIdeal, outer: &CommIdeal) -> Result<(CommIdeal, CommIdeal)> {
    inner.check_compatible(outer)?;
    if !inner.is_saturated() || !outer.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if !inner.is_subideal_of(outer) {
        return Err(Error::NotNested);
    }
    if inner == outer {
        return Err(Error::EqualIdeals);
    }
    outer.require_budget(1)?;
    let floor = outer.times_maximal().sum(inner);
    let smaller = outer.drop_first_direction(&floor);
    let soc = inner.colon_maximal().intersection(outer);
    let reps = soc.basis.quotient_reps(&inner.field, &inner.basis);
    let larger = inner.add_vector(reps.into_iter().next().expect("nonzero socle"));
    Ok((smaller, larger))
}

/// An ideal `J' ⊆ J` with `J/J' ≅ R/𝔪` containing 𝔪·J; the last direction of
/// `J/𝔪J` is kept.
pub fn nakayama_corank1_pick(j: &CommIdeal) -> Result<CommIdeal> {
    j.require_budget(1)?;
    let floor = j.times_maximal();
    Ok(j.drop_first_direction(&floor))
}

/// An ideal `J' ⊇ J` with `J'/J ≅ R/𝔪`, adding the last socle vector of `R/J`.
pub fn socle_pick(j: &CommIdeal) -> Result<CommIdeal> {
    if !j.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if j.is_unit() {
        return Err(Error::IdealIsUnitIdeal);
    }
    let soc = j.colon_maximal();
    let reps = soc.basis.quotient_reps(&j.field, &j.basis);
    Ok(j.add_vector(reps.into_iter().last().expect("nonzero socle")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CycField {
        CycField::new(1)
    }

    fn ideal(gens: &[&str], n: usize) -> CommIdeal {
        let ring = SeriesRing::new(n, q());
        let gens: Vec<TruncSeries> = gens.iter().map(|g| ring.parse(g).unwrap()).collect();
        CommIdeal::from_generators(&gens, n, &q()).unwrap()
    }

    #[test]
    fn monomial_order() {
        let m = Monomials::new(4);
        let labels: Vec<String> = (0..m.len()).map(|k| m.label(k)).collect();
        assert_eq!(labels, ["", "u", "v", "u^2", "u*v", "v^2", "u^3", "u^2*v", "u*v^2", "v^3"]);
        for k in 0..m.len() {
            let (i, j) = monomial_at(k);
            assert_eq!(monomial_index(i, j), k);
        }
    }

    #[test]
    fn series_arithmetic() {
        let r2 = SeriesRing::new(2, q());
        let s = r2.parse("u+v").unwrap();
        assert!(s.mul(&s).unwrap().is_zero());
        let r3 = SeriesRing::new(3, q());
        assert_eq!(r3.parse("u").unwrap().mul(&r3.parse("v").unwrap()).unwrap(), r3.parse("u*v").unwrap());
        let a = r3.parse("1+u").unwrap();
        let b = r3.parse("1-u+u^2").unwrap();
        assert_eq!(a.mul(&b).unwrap(), TruncSeries::one(3, &q()));
        assert_eq!(
            r3.parse("u").unwrap().add(&SeriesRing::new(4, q()).parse("u").unwrap()),
            Err(Error::TruncMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn colength_examples() {
        let m = ideal(&["u", "v"], 3);
        assert_eq!(m, CommIdeal::maximal(3, &q()));
        assert_eq!(m.colength(), Ok(1));
        assert_eq!(ideal(&["u^2", "v"], 4).colength(), Ok(2));
        for n in 2..7 {
            assert_eq!(CommIdeal::maximal(n, &q()).colength(), Ok(1));
        }
        assert_eq!(CommIdeal::maximal_power(2, 5, &q()).colength(), Ok(3));
        assert_eq!(ideal(&["u^2", "u*v", "v^3"], 5).colength(), Ok(4));
    }

    #[test]
    fn principal_ideal_never_saturates() {
        for n in 3..7 {
            let j = ideal(&["u+v^2"], n);
            assert!(!j.is_saturated(), "N = {n}");
            assert_eq!(j.colength(), Err(Error::NotSaturated));
        }
    }

    #[test]
    fn picks_on_maximal_ideal() {
        let n = 5;
        let m = CommIdeal::maximal(n, &q());
        let m2 = CommIdeal::maximal_power(2, n, &q());
        let m2v = ideal(&["v", "u^2"], n);
        let m2u = ideal(&["u", "v^2"], n);
        let (smaller, larger) = socle_and_cosocle_picks(&m2, &m).unwrap();
        assert_eq!(smaller, m2v);
        assert_eq!(larger, m2u);
        assert_eq!(nakayama_corank1_pick(&m).unwrap(), m2v);
        assert_eq!(nakayama_corank1_pick(&CommIdeal::unit(n, &q())).unwrap(), m);
        assert_eq!(socle_pick(&m).unwrap(), CommIdeal::unit(n, &q()));
        assert_eq!(socle_pick(&m2).unwrap(), m2v);
        assert_eq!(socle_pick(&m2v).unwrap(), m);
        assert_eq!(socle_pick(&CommIdeal::unit(n, &q())), Err(Error::IdealIsUnitIdeal));
        assert_eq!(socle_and_cosocle_picks(&m, &m), Err(Error::EqualIdeals));
    }

    #[test]
    fn picks_on_nested_pair() {
        let n = 5;
        let inner = ideal(&["u^2", "v"], n);
        let m = CommIdeal::maximal(n, &q());
        let (smaller, larger) = socle_and_cosocle_picks(&inner, &m).unwrap();
        assert_eq!(smaller, inner);
        assert_eq!(larger, m);
    }

    #[test]
    fn nakayama_pick_on_principal_u() {
        // (u) has infinite colength; (u) + 𝔪^k does not, so use (u, v^2).
        let n = 5;
        let j = ideal(&["u", "v^2"], n);
        let p = nakayama_corank1_pick(&j).unwrap();
        assert_eq!(p.colength().unwrap(), j.colength().unwrap() + 1);
        assert!(j.times_maximal().is_subideal_of(&p));
        assert!(p.is_subideal_of(&j));
    }
}
