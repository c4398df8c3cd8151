//! Finite-colength left ideals of the truncated model algebras.
//!
//! A left ideal is stored as a canonical subspace of `A / 𝔪^N A`. Closures
//! are computed by a worklist over a small generating set of the algebra, and
//! the saturation degree (the least `d` with `𝔪^d A ⊆ I`) certifies that the
//! truncated subspace determines the ideal of `A`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{CycField, CycScalar, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, kernel, SparseVec, Subspace};
use crate::orders::{Algebra, AlgebraElement, AlgebraKind, AlgebraSpec, BasisLabel};
use crate::power_series::{CommIdeal, Monomials};

/// Elements generating the algebra under multiplication (the identity aside).
pub fn closure_generators(alg: &Algebra) -> Vec<AlgebraElement> {
    let spec = alg.spec();
    let (f, m) = (spec.f as usize, spec.m() as usize);
    let mut gens = Vec::new();
    for p in 0..f.saturating_sub(1) {
        gens.push(alg.outer_unit(p, p + 1));
        gens.push(alg.outer_unit(p + 1, p));
    }
    if m > 1 {
        for i in 0..m {
            gens.push(alg.inner_unit(i, i));
        }
        for i in 0..m - 1 {
            gens.push(alg.inner_unit(i, i + 1));
        }
        gens.push(alg.inner_unit(m - 1, 0));
    }
    gens.push(alg.x());
    gens.push(alg.y());
    gens
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Closes `base + span(seeds)` under multiplication by the generators on the given side.
fn close(alg: &Algebra, base: Subspace, seeds: Vec<SparseVec>, sides: &[Side]) -> Subspace {
    let field = alg.field();
    let gens: Vec<SparseVec> = closure_generators(alg).into_iter().map(AlgebraElement::into_coords).collect();
    let mut sub = base;
    let mut queue: VecDeque<SparseVec> = seeds.into();
    // rows already in `base` must be pushed through the generators too
    let existing: Vec<SparseVec> = sub.rows().to_vec();
    let mut pending: VecDeque<SparseVec> = existing.into();
    loop {
        let row = if let Some(r) = pending.pop_front() {
            r
        } else if let Some(v) = queue.pop_front() {
            match sub.insert(field, v) {
                Some(r) => r.clone(),
                None => continue,
            }
        } else {
            break;
        };
        for side in sides {
            for g in &gens {
                let w = match side {
                    Side::Left => alg.mul_vec(g, &row),
                    Side::Right => alg.mul_vec(&row, g),
                };
                if !w.is_empty() {
                    queue.push_back(w);
                }
            }
        }
    }
    sub.canonicalize(field);
    sub
}

/// Least `d` such that every coordinate of degree `≥ d` lies in the subspace.
fn saturation_of(alg: &Algebra, basis: &Subspace) -> Option<usize> {
    let n = alg.trunc();
    let field = alg.field();
    let mut d = n;
    while d > 0 {
        let full = (alg.degree_start(d - 1)..alg.degree_start(d)).all(|c| basis.contains_unit(field, c));
        if !full {
            break;
        }
        d -= 1;
    }
    (d < n).then_some(d)
}

/// A left ideal of a truncated model algebra.
#[derive(Clone, Debug)]
pub struct LeftIdeal {
    alg: Algebra,
    basis: Subspace,
    saturation: Option<usize>,
}

impl PartialEq for LeftIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && self.basis == other.basis
    }
}

impl Eq for LeftIdeal {}

impl PartialOrd for LeftIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LeftIdeal {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.alg.spec(), self.basis.rows()).cmp(&(other.alg.spec(), other.basis.rows()))
    }
}

impl LeftIdeal {
    fn from_basis(alg: &Algebra, basis: Subspace) -> Self {
        let saturation = saturation_of(alg, &basis);
        LeftIdeal { alg: alg.clone(), basis, saturation }
    }

    /// The left ideal generated by `gens`.
    pub fn generated_by(alg: &Algebra, gens: &[AlgebraElement]) -> Result<Self> {
        let mut seeds = Vec::with_capacity(gens.len());
        for g in gens {
            if g.algebra() != alg {
                return Err(Error::SpecMismatch);
            }
            seeds.push(g.coords().clone());
        }
        Ok(Self::from_vectors(alg, seeds))
    }

    /// The left ideal generated by coordinate vectors.
    pub fn from_vectors(alg: &Algebra, seeds: Vec<SparseVec>) -> Self {
        let basis = close(alg, Subspace::zero(alg.dim()), seeds, &[Side::Left]);
        Self::from_basis(alg, basis)
    }

    /// The two-sided ideal generated by coordinate vectors.
    pub fn two_sided_from_vectors(alg: &Algebra, seeds: Vec<SparseVec>) -> Self {
        let basis = close(alg, Subspace::zero(alg.dim()), seeds, &[Side::Left, Side::Right]);
        Self::from_basis(alg, basis)
    }

    /// Wraps a subspace after checking it is a left ideal.
    pub fn from_subspace(alg: &Algebra, basis: Subspace) -> Result<Self> {
        if basis.ambient() != alg.dim() {
            return Err(Error::TruncMismatch { left: alg.dim(), right: basis.ambient() });
        }
        let mut basis = basis;
        basis.canonicalize(alg.field());
        let ideal = Self::from_basis(alg, basis);
        if !ideal.is_left_ideal() {
            return Err(Error::NotLeftIdeal);
        }
        Ok(ideal)
    }

    pub fn whole(alg: &Algebra) -> Self {
        Self::from_basis(alg, Subspace::full(alg.field(), alg.dim()))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.alg.spec()
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        self.basis.rows().iter().map(|r| self.alg.element(r.clone())).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation.is_some()
    }

    pub fn saturation_degree(&self) -> Option<usize> {
        self.saturation
    }

    pub fn precision_budget(&self) -> Option<usize> {
        self.saturation.map(|d| self.alg.trunc() - 1 - d)
    }

    pub fn require_budget(&self, required: usize) -> Result<()> {
        let budget = self.precision_budget().ok_or(Error::NotSaturated)?;
        if budget < required {
            return Err(Error::PrecisionExhausted { budget, required });
        }
        Ok(())
    }

    /// Dimension of `A / I` over the scalar field.
    pub fn colength(&self) -> Result<usize> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        Ok(self.basis.codim())
    }

    pub fn is_whole(&self) -> bool {
        self.basis.codim() == 0
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        self.basis.contains(self.alg.field(), x.coords())
    }

    pub fn contains_vec(&self, v: &[(usize, CycScalar)]) -> bool {
        self.basis.contains(self.alg.field(), v)
    }

    pub fn is_subideal_of(&self, other: &LeftIdeal) -> bool {
        self.alg == other.alg && self.basis.is_subspace_of(self.alg.field(), &other.basis)
    }

    pub fn intersection(&self, other: &LeftIdeal) -> Result<LeftIdeal> {
        self.check_same(other)?;
        Ok(Self::from_basis(&self.alg, self.basis.intersection(self.alg.field(), &other.basis)))
    }

    pub fn sum(&self, other: &LeftIdeal) -> Result<LeftIdeal> {
        self.check_same(other)?;
        Ok(Self::from_basis(&self.alg, self.basis.sum(self.alg.field(), &other.basis)))
    }

    fn check_same(&self, other: &LeftIdeal) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else if self.spec().with_trunc(other.spec().n) == *other.spec() {
            Err(Error::TruncMismatch { left: self.spec().n, right: other.spec().n })
        } else {
            Err(Error::SpecMismatch)
        }
    }

    fn product_escaping(&self, side: Side) -> Option<AlgebraElement> {
        let field = self.alg.field();
        for g in closure_generators(&self.alg) {
            for r in self.basis.rows() {
                let w = match side {
                    Side::Left => self.alg.mul_vec(g.coords(), r),
                    Side::Right => self.alg.mul_vec(r, g.coords()),
                };
                if !self.basis.contains(field, &w) {
                    return Some(self.alg.element(w));
                }
            }
        }
        None
    }

    /// Closure check under left multiplication by the generators.
    pub fn is_left_ideal(&self) -> bool {
        self.product_escaping(Side::Left).is_none()
    }

    /// A product `r·g` (basis row times generator) leaving the ideal, if any.
    pub fn two_sided_witness(&self) -> Result<Option<AlgebraElement>> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        Ok(self.product_escaping(Side::Right))
    }

    pub fn is_two_sided(&self) -> Result<bool> {
        Ok(self.two_sided_witness()?.is_none())
    }

    /// `I·A`, the two-sided ideal generated by `I`.
    pub fn right_closure(&self) -> LeftIdeal {
        Self::from_basis(&self.alg, close(&self.alg, self.basis.clone(), Vec::new(), &[Side::Right]))
    }

    /// The same ideal at another truncation, regenerated from its basis.
    /// Exact when the ideal is saturated.
    pub fn with_trunc(&self, n: usize) -> Result<LeftIdeal> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        let alg = self.alg.with_trunc(n)?;
        let seeds = self.basis.rows().iter().map(|r| alg.transfer(&self.alg, r)).collect();
        Ok(Self::from_vectors(&alg, seeds))
    }

    pub(crate) fn from_raw(alg: &Algebra, basis: Subspace) -> LeftIdeal {
        Self::from_basis(alg, basis)
    }
}

/// Result of the dual containment test `I·A* ⊆ A*·I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualContainment {
    pub holds: bool,
    /// An element of `u·I·A*` outside `u·A*·I` when containment fails.
    pub witness: Option<AlgebraElement>,
}

/// Decides `I·A* ⊆ A*·I`. Both sides are multiplied by the central `u`, so the
/// test reads `(I·A)·c ⊆ A·c·I` with `c` the dual shift element.
pub fn dual_containment(ideal: &LeftIdeal) -> Result<DualContainment> {
    let alg = ideal.algebra();
    alg.require_kind(&[AlgebraKind::Unramified, AlgebraKind::SmoothRam])?;
    if !ideal.is_saturated() {
        return Err(Error::NotSaturated);
    }
    ideal.require_budget(1)?;
    let c = alg.dual_shift_element()?;
    if alg.kind() == AlgebraKind::Unramified || c == alg.one() {
        let witness = ideal.two_sided_witness()?;
        return Ok(DualContainment { holds: witness.is_none(), witness });
    }
    let field = alg.field();
    let seeds = ideal.basis().rows().iter().map(|r| alg.mul_vec(c.coords(), r)).collect();
    let rhs = LeftIdeal::from_vectors(alg, seeds);
    let lhs = ideal.right_closure();
    for r in lhs.basis().rows() {
        let w = alg.mul_vec(r, c.coords());
        if !rhs.basis().contains(field, &w) {
            return Ok(DualContainment { holds: false, witness: Some(alg.element(w)) });
        }
    }
    Ok(DualContainment { holds: true, witness: None })
}

pub fn check_dual_containment(ideal: &LeftIdeal) -> Result<bool> {
    Ok(dual_containment(ideal)?.holds)
}

/// The chain `R ⊇ J_1 ⊇ … ⊇ J_e ⊇ u·J_1` describing a two-sided ideal of the hereditary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealChain {
    entries: Vec<CommIdeal>,
}

impl IdealChain {
    pub fn new(entries: Vec<CommIdeal>) -> Result<Self> {
        let chain = IdealChain { entries };
        chain.validate()?;
        Ok(chain)
    }

    pub fn entries(&self) -> &[CommIdeal] {
        &self.entries
    }

    /// `J_i`, 1-based.
    pub fn get(&self, i: usize) -> &CommIdeal {
        &self.entries[i - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trunc(&self) -> usize {
        self.entries[0].trunc()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: alloc::string::String| Err(Error::ChainInvariantViolated(s));
        let Some(first) = self.entries.first() else { return bad("empty chain".into()) };
        for (k, j) in self.entries.iter().enumerate() {
            if j.trunc() != first.trunc() {
                return Err(Error::TruncMismatch { left: first.trunc(), right: j.trunc() });
            }
            if j.field() != first.field() {
                return Err(Error::OrderMismatch { left: first.field().order(), right: j.field().order() });
            }
            if !j.is_saturated() {
                return Err(Error::NotSaturated);
            }
            if k > 0 && !j.is_subideal_of(&self.entries[k - 1]) {
                return bad(format!("J_{} is not contained in J_{}", k + 1, k));
            }
        }
        let last = self.entries.last().expect("nonempty");
        if !first.times_u().is_subideal_of(last) {
            return bad(format!("u*J_1 is not contained in J_{}", self.entries.len()));
        }
        Ok(())
    }

    /// `Σ colength(J_k)`.
    pub fn total_colength(&self) -> Result<usize> {
        self.entries.iter().map(|j| j.colength()).sum()
    }

    /// Entry ideal at an inner position (0-based): `J_{e-(c-r)}` on and above
    /// the diagonal, and below it the ideal `J_{r-c}` whose multiple by `u` is the entry.
    pub fn entry_at(&self, r: usize, c: usize) -> &CommIdeal {
        let e = self.entries.len();
        if c >= r {
            &self.entries[e - (c - r) - 1]
        } else {
            &self.entries[r - c - 1]
        }
    }
}

fn require_smooth(alg: &Algebra) -> Result<()> {
    alg.require_kind(&[AlgebraKind::SmoothRam])
}

/// The algebra with the same spec but `f = 1`.
pub fn base_algebra(alg: &Algebra) -> Result<Algebra> {
    Algebra::new(AlgebraSpec { f: 1, ..*alg.spec() })
}

/// `M_f(J)` for a left ideal `J` of the `f = 1` algebra.
pub fn block_lift(alg: &Algebra, j: &LeftIdeal) -> Result<LeftIdeal> {
    let base = j.algebra();
    if *base.spec() != (AlgebraSpec { f: 1, ..*alg.spec() }) {
        return Err(Error::SpecMismatch);
    }
    let f = alg.spec().f as usize;
    let mut rows = Vec::with_capacity(j.dim() * f * f);
    for r in j.basis().rows() {
        for p in 0..f {
            for q in 0..f {
                let v = r
                    .iter()
                    .map(|(c, x)| {
                        let (mono, k) = base.split(*c);
                        let l = base.label(k);
                        (alg.coord(mono, alg.basis_index(BasisLabel { p, q, ..l })), x.clone())
                    })
                    .collect::<SparseVec>();
                rows.push(v);
            }
        }
    }
    let basis = Subspace::from_vectors(alg.field(), alg.dim(), rows);
    Ok(LeftIdeal::from_raw(alg, basis))
}

/// Recovers `J` from `I = M_f(J)`, failing with `NotBlockConstant` otherwise.
pub fn block_reduce(ideal: &LeftIdeal) -> Result<LeftIdeal> {
    let alg = ideal.algebra();
    let base = base_algebra(alg)?;
    let rows = ideal.basis().rows().iter().map(|r| {
        r.iter()
            .filter_map(|(c, x)| {
                let (mono, k) = alg.split(*c);
                let l = alg.label(k);
                (l.p == 0 && l.q == 0).then(|| (base.coord(mono, base.basis_index(BasisLabel { p: 0, q: 0, ..l })), x.clone()))
            })
            .collect::<SparseVec>()
    });
    let j = LeftIdeal::from_raw(&base, Subspace::from_vectors(base.field(), base.dim(), rows));
    if block_lift(alg, &j)? != *ideal {
        return Err(Error::NotBlockConstant);
    }
    Ok(j)
}

/// The `R`-module of coefficients at one basis position of the ideal.
fn entry_module(ideal: &LeftIdeal, k: usize) -> Result<CommIdeal> {
    let alg = ideal.algebra();
    let n = alg.trunc();
    let rows = ideal.basis().rows().iter().map(|r| {
        r.iter()
            .filter_map(|(c, x)| {
                let (mono, kb) = alg.split(*c);
                (kb == k).then(|| (mono, x.clone()))
            })
            .collect::<SparseVec>()
    });
    let sub = Subspace::from_vectors(alg.field(), Monomials::new(n).len(), rows);
    CommIdeal::from_subspace(alg.field(), n, sub)
}

/// Reads off the chain of a two-sided ideal satisfying dual containment.
pub fn chain_decompose(ideal: &LeftIdeal) -> Result<IdealChain> {
    let alg = ideal.algebra();
    require_smooth(alg)?;
    if !check_dual_containment(ideal)? {
        return Err(Error::DualContainmentFails);
    }
    chain_shape(ideal)
}

/// Matches the ideal against the circulant chain pattern without assuming dual
/// containment. Succeeds exactly when the ideal is `chain_compose` of some chain.
pub fn chain_shape(ideal: &LeftIdeal) -> Result<IdealChain> {
    let alg = ideal.algebra();
    require_smooth(alg)?;
    if alg.spec().f > 1 {
        return chain_shape(&block_reduce(ideal)?);
    }
    let e = alg.spec().e as usize;
    let mut grid = Vec::with_capacity(e * e);
    for r in 0..e {
        for c in 0..e {
            let k = alg.basis_index(BasisLabel { p: 0, q: 0, i: r, j: c, a: 0, b: 0 });
            grid.push(entry_module(ideal, k)?);
        }
    }
    let at = |r: usize, c: usize| &grid[r * e + c];
    // J_i sits at (i, e) in 1-based positions
    let defining = |r: usize, c: usize| if c >= r { (e - (c - r) - 1, e - 1) } else { (r - c - 1, e - 1) };
    for r in 0..e {
        for c in 0..e {
            let (dr, dc) = defining(r, c);
            if at(r, c) != at(dr, dc) {
                return Err(Error::NotCirculant { first: (dr + 1, dc + 1), second: (r + 1, c + 1) });
            }
        }
    }
    let chain = IdealChain::new((0..e).map(|i| at(i, e - 1).clone()).collect())?;
    if chain_compose(&chain, alg)? != *ideal {
        return Err(Error::ChainInvariantViolated("ideal is not the sum of its entries".into()));
    }
    Ok(chain)
}

/// Assembles the two-sided ideal of the hereditary order with the given chain
/// (tensored with `M_f` when `f > 1`).
pub fn chain_compose(chain: &IdealChain, alg: &Algebra) -> Result<LeftIdeal> {
    require_smooth(alg)?;
    chain.validate()?;
    let e = alg.spec().e as usize;
    if chain.len() != e {
        return Err(Error::ChainInvariantViolated(format!("chain has {} entries, expected e = {e}", chain.len())));
    }
    if chain.trunc() != alg.trunc() {
        return Err(Error::TruncMismatch { left: alg.trunc(), right: chain.trunc() });
    }
    if chain.entries()[0].field() != alg.field() {
        return Err(Error::OrderMismatch { left: alg.field().order(), right: chain.entries()[0].field().order() });
    }
    let f = alg.spec().f as usize;
    let mut rows = Vec::new();
    for r in 0..e {
        for c in 0..e {
            let j = chain.entry_at(r, c);
            for p in 0..f {
                for q in 0..f {
                    let k = alg.basis_index(BasisLabel { p, q, i: r, j: c, a: 0, b: 0 });
                    for row in j.basis().rows() {
                        rows.push(row.iter().map(|(mono, x)| (alg.coord(*mono, k), x.clone())).collect());
                    }
                }
            }
        }
    }
    // entries occupy disjoint coordinates, so the rows are already reduced
    let basis = Subspace::from_vectors(alg.field(), alg.dim(), rows);
    Ok(LeftIdeal::from_raw(alg, basis))
}

/// A submodule of `R^f`, stored on coordinates `mono * f + q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowModule {
    n: usize,
    f: usize,
    field: CycField,
    basis: Subspace,
}

impl RowModule {
    pub fn direct_sum(summands: &[CommIdeal]) -> Result<Self> {
        let Some(first) = summands.first() else { return Err(Error::SpecMismatch) };
        let (n, f) = (first.trunc(), summands.len());
        let mut rows = Vec::new();
        for (q, j) in summands.iter().enumerate() {
            if j.trunc() != n {
                return Err(Error::TruncMismatch { left: n, right: j.trunc() });
            }
            for r in j.basis().rows() {
                rows.push(r.iter().map(|(mono, x)| (mono * f + q, x.clone())).collect());
            }
        }
        let basis = Subspace::from_vectors(first.field(), Monomials::new(n).len() * f, rows);
        Ok(RowModule { n, f, field: first.field().clone(), basis })
    }

    pub fn rank(&self) -> usize {
        self.f
    }

    pub fn trunc(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn is_saturated(&self) -> bool {
        let start = Monomials::degree_start(self.n - 1) * self.f;
        (start..self.basis.ambient()).all(|c| self.basis.contains_unit(&self.field, c))
    }

    pub fn colength(&self) -> Result<usize> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        Ok(self.basis.codim())
    }

    /// The summands when the module is a direct sum of coordinate ideals.
    pub fn summands(&self) -> Result<Vec<CommIdeal>> {
        let count = Monomials::new(self.n).len();
        let parts: Vec<CommIdeal> = (0..self.f)
            .map(|q| {
                let rows = self.basis.rows().iter().map(|r| {
                    r.iter().filter(|(c, _)| c % self.f == q).map(|(c, x)| (c / self.f, x.clone())).collect::<SparseVec>()
                });
                CommIdeal::from_subspace(&self.field, self.n, Subspace::from_vectors(&self.field, count, rows))
            })
            .collect::<Result<_>>()?;
        if RowModule::direct_sum(&parts)? != *self {
            return Err(Error::NotBlockConstant);
        }
        Ok(parts)
    }
}

/// The left ideal `{X : every row of X lies in M}` of `M_f(R)`.
pub fn morita_lift(alg: &Algebra, module: &RowModule) -> Result<LeftIdeal> {
    alg.require_kind(&[AlgebraKind::Unramified])?;
    let f = alg.spec().f as usize;
    if module.rank() != f || module.trunc() != alg.trunc() || module.field != *alg.field() {
        return Err(Error::SpecMismatch);
    }
    let mut rows = Vec::with_capacity(module.basis.dim() * f);
    for r in module.basis.rows() {
        for p in 0..f {
            rows.push(
                r.iter()
                    .map(|(c, x)| {
                        let (mono, q) = (c / f, c % f);
                        (alg.coord(mono, alg.basis_index(BasisLabel { p, q, i: 0, j: 0, a: 0, b: 0 })), x.clone())
                    })
                    .collect(),
            );
        }
    }
    let basis = Subspace::from_vectors(alg.field(), alg.dim(), rows);
    Ok(LeftIdeal::from_raw(alg, basis))
}

/// The row module `E_11·I ⊂ R^f` of a left ideal of `M_f(R)`.
pub fn morita_drop(ideal: &LeftIdeal) -> Result<RowModule> {
    let alg = ideal.algebra();
    alg.require_kind(&[AlgebraKind::Unramified])?;
    let f = alg.spec().f as usize;
    let e11 = alg.outer_unit(0, 0);
    let rows = ideal.basis().rows().iter().map(|r| {
        alg.mul_vec(e11.coords(), r)
            .into_iter()
            .map(|(c, x)| {
                let (mono, k) = alg.split(c);
                (mono * f + alg.label(k).q, x)
            })
            .collect::<SparseVec>()
    });
    let n = alg.trunc();
    let basis = Subspace::from_vectors(alg.field(), Monomials::new(n).len() * f, rows);
    Ok(RowModule { n, f, field: alg.field().clone(), basis })
}

/// Rational roots of a polynomial with rational coefficients (constant term first).
fn rational_roots(poly: &[Rational]) -> Option<Vec<Rational>> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, ToPrimitive, Zero};

    let mut p: Vec<Rational> = poly.to_vec();
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        if !roots.contains(&Rational::zero()) {
            roots.push(Rational::zero());
        }
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let divisors = |n: &BigInt| -> Option<Vec<i64>> {
        let n = n.abs().to_i64()?;
        if n > 1_000_000 {
            return None;
        }
        Some((1..=n).filter(|d| n % d == 0).collect())
    };
    let num = divisors(&ints[0])?;
    let den = divisors(ints.last().expect("nonconstant"))?;
    let eval = |x: &Rational| p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c);
    let mut degree_left = p.len() - 1;
    for a in &num {
        for b in &den {
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(s * a), BigInt::from(*b));
                if !roots.contains(&r) && eval(&r).is_zero() {
                    roots.push(r);
                    degree_left -= 1;
                }
            }
        }
    }
    let _ = degree_left;
    Some(roots)
}

/// Minimal polynomial of `g` acting on the `K`-dimensional reduction `A/𝔪A`,
/// as rational coefficients; `None` if a coefficient is irrational.
fn min_poly_on_reduction(alg: &Algebra, g: &SparseVec) -> Result<Vec<Rational>> {
    let field = alg.field();
    let k = alg.rank();
    let reduce = |v: SparseVec| v.into_iter().filter(|(c, _)| *c < k).collect::<SparseVec>();
    let g = reduce(g.clone());
    let one = reduce(alg.one().into_coords());
    let mut powers: Vec<SparseVec> = vec![one];
    loop {
        let images: Vec<SparseVec> = powers.clone();
        let next = reduce(alg.mul_vec(&g, powers.last().expect("nonempty")));
        // is `next` a combination of the earlier powers?
        let mut all = images;
        all.push(next.clone());
        let ker = kernel(field, &all, k);
        if let Some(rel) = ker.rows().iter().find(|r| r.iter().any(|(i, _)| *i == all.len() - 1)) {
            let lead = rel.iter().find(|(i, _)| *i == all.len() - 1).expect("present").1.clone();
            let inv = field.inv(&lead)?;
            let mut poly = vec![Rational::from_integer(0.into()); all.len()];
            for (i, c) in rel {
                let c = field.mul(c, &inv);
                poly[*i] = c.as_rational().cloned().ok_or(Error::UnsupportedSplitting)?;
            }
            return Ok(poly);
        }
        powers.push(next);
    }
}

/// All left ideals of colength one. They contain `𝔪A`, so they correspond to
/// one-dimensional quotients of `A/𝔪A`: common eigenvectors of the transposed
/// left multiplications by the generators.
pub fn find_codim_one_quotients(alg: &Algebra, max_dim: usize) -> Result<Vec<LeftIdeal>> {
    if alg.dim() > max_dim {
        return Err(Error::DimensionBound { dim: alg.dim(), bound: max_dim });
    }
    let field = alg.field();
    let k = alg.rank();
    let gens: Vec<SparseVec> = closure_generators(alg).into_iter().map(AlgebraElement::into_coords).collect();
    // left multiplication by g on A/𝔪A, column by column
    let lmul = |g: &SparseVec, b: usize| -> SparseVec {
        alg.mul_vec(g, &[(b, field.one())]).into_iter().filter(|(c, _)| *c < k).collect()
    };
    let mut spaces = vec![Subspace::full(field, k)];
    for g in &gens {
        let poly = min_poly_on_reduction(alg, g)?;
        let roots = rational_roots(&poly).ok_or(Error::UnsupportedSplitting)?;
        let mut rest = poly.clone();
        for r in &roots {
            rest = divide_root(&rest, r);
            while evaluate(&rest, r) == Rational::from_integer(0.into()) && rest.len() > 1 {
                rest = divide_root(&rest, r);
            }
        }
        if rest.len() > 1 {
            return Err(Error::UnsupportedSplitting);
        }
        // columns of L_g^T: entry i of column j is the b_j-coefficient of g·b_i
        let cols: Vec<Vec<(usize, CycScalar)>> = (0..k).map(|i| lmul(g, i)).collect();
        let mut next = Vec::new();
        for lambda in &roots {
            let lam = field.from_rational(lambda.clone());
            let mut images: Vec<SparseVec> = vec![Vec::new(); k];
            for (i, col) in cols.iter().enumerate() {
                for (j, x) in col {
                    images[*j].push((i, x.clone()));
                }
            }
            for (j, img) in images.iter_mut().enumerate() {
                img.push((j, -&lam));
                *img = linalg::collect_terms(core::mem::take(img));
            }
            let eig = kernel(field, &images, k);
            for s in &spaces {
                let both = s.intersection(field, &eig);
                if both.dim() > 0 {
                    next.push(both);
                }
            }
        }
        spaces = next;
        if spaces.is_empty() {
            break;
        }
    }
    let mut out = Vec::new();
    for s in spaces {
        if s.dim() > 1 {
            return Err(Error::NonIsolatedQuotient(s.dim()));
        }
        let phi = &s.rows()[0];
        let images: Vec<SparseVec> = (0..k)
            .map(|i| phi.iter().filter(|(j, _)| *j == i).map(|(_, x)| (0, x.clone())).collect())
            .collect();
        let ker = kernel(field, &images, 1);
        let mut rows: Vec<SparseVec> = ker.into_rows();
        rows.extend((k..alg.dim()).map(|c| vec![(c, field.one())]));
        out.push(LeftIdeal::from_raw(alg, Subspace::from_vectors(field, alg.dim(), rows)));
    }
    out.sort();
    Ok(out)
}

fn evaluate(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::from_integer(0.into()), |acc, c| acc * x + c)
}

/// Synthetic division by `(t - r)`, dropping the remainder.
fn divide_root(p: &[Rational], r: &Rational) -> Vec<Rational> {
    if p.len() <= 1 {
        return p.to_vec();
    }
    let d = p.len() - 1;
    let mut q = vec![Rational::from_integer(0.into()); d];
    let mut carry = Rational::from_integer(0.into());
    for i in (0..d).rev() {
        carry = &p[i + 1] + carry * r;
        q[i] = carry.clone();
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::power_series::SeriesRing;

    fn smooth(e: u32, f: u32, n: usize) -> Algebra {
        Algebra::new(AlgebraSpec::smooth_ram(e, f, n)).unwrap()
    }

    fn comm(gens: &[&str], n: usize) -> CommIdeal {
        let field = CycField::new(1);
        let ring = SeriesRing::new(n, field.clone());
        let g: Vec<_> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        CommIdeal::from_generators(&g, n, &field).unwrap()
    }

    fn maximal(alg: &Algebra, i: usize) -> LeftIdeal {
        LeftIdeal::generated_by(alg, &alg.maximal_ideal(i).unwrap()).unwrap()
    }

    #[test]
    fn closures_and_colengths() {
        let a = smooth(2, 1, 4);
        assert_eq!(LeftIdeal::generated_by(&a, &[a.one()]).unwrap().colength(), Ok(0));
        let gens = [
            a.u().mul(&a.standard_basis(1, 1).unwrap()).unwrap(),
            a.standard_basis(1, 2).unwrap(),
            a.standard_basis(2, 1).unwrap(),
            a.standard_basis(2, 2).unwrap(),
        ];
        // without v*b_11 the (1,1) entry is only uR
        assert_eq!(LeftIdeal::generated_by(&a, &gens).unwrap().colength(), Err(Error::NotSaturated));
        let mut gens = gens.to_vec();
        gens.push(a.v().mul(&a.standard_basis(1, 1).unwrap()).unwrap());
        let m1 = LeftIdeal::generated_by(&a, &gens).unwrap();
        assert_eq!(m1.colength(), Ok(1));
        assert_eq!(m1, maximal(&a, 1));
        let m2 = maximal(&a, 2);
        assert_eq!(m1.intersection(&m2).unwrap().colength(), Ok(2));
        assert!(m1.is_two_sided().unwrap());

        let s = Algebra::new(AlgebraSpec::singular_ram(2, 1, 4)).unwrap();
        assert_eq!(LeftIdeal::generated_by(&s, &[s.x(), s.y()]).unwrap().colength(), Ok(1));
    }

    #[test]
    fn dual_containment_examples() {
        let a = smooth(2, 1, 4);
        let n = 4;
        let rad = chain_compose(&IdealChain::new(vec![CommIdeal::unit(n, a.field()), comm(&["u", "v"], n)]).unwrap(), &a).unwrap();
        assert_eq!(rad.colength(), Ok(2));
        assert!(check_dual_containment(&rad).unwrap());
        assert!(!check_dual_containment(&maximal(&a, 1)).unwrap());

        let u2 = Algebra::new(AlgebraSpec::unramified(2, 4)).unwrap();
        let m = RowModule::direct_sum(&[comm(&["u", "v"], 4), CommIdeal::unit(4, u2.field())]).unwrap();
        let i = morita_lift(&u2, &m).unwrap();
        assert_eq!(i.colength(), Ok(2));
        assert!(!i.is_two_sided().unwrap());
        assert!(!check_dual_containment(&i).unwrap());
        assert_eq!(morita_drop(&i).unwrap(), m);
    }

    #[test]
    fn chain_examples() {
        let n = 4;
        let a = smooth(2, 1, n);
        let field = a.field().clone();
        let r = CommIdeal::unit(n, &field);
        let m = comm(&["u", "v"], n);
        let rad = chain_compose(&IdealChain::new(vec![r.clone(), m.clone()]).unwrap(), &a).unwrap();
        assert_eq!(chain_decompose(&rad).unwrap().entries(), [r.clone(), m.clone()]);
        let mm = chain_compose(&IdealChain::new(vec![m.clone(), m.clone()]).unwrap(), &a).unwrap();
        assert_eq!(mm.colength(), Ok(4));
        assert!(mm.is_left_ideal());
        assert_eq!(chain_decompose(&mm).unwrap().entries(), [m.clone(), m.clone()]);
        let whole = chain_compose(&IdealChain::new(vec![r.clone(), r.clone()]).unwrap(), &a).unwrap();
        assert_eq!(whole, LeftIdeal::whole(&a));
        assert_eq!(chain_decompose(&whole).unwrap().entries(), [r.clone(), r.clone()]);
        assert!(matches!(IdealChain::new(vec![m.clone(), r.clone()]), Err(Error::ChainInvariantViolated(_))));
        assert_eq!(chain_decompose(&maximal(&a, 1)), Err(Error::DualContainmentFails));

        let a2 = smooth(2, 2, n);
        let big = chain_compose(&IdealChain::new(vec![r.clone(), m.clone()]).unwrap(), &a2).unwrap();
        assert_eq!(big.colength(), Ok(8));
        assert!(big.is_left_ideal());
        assert_eq!(chain_decompose(&big).unwrap().entries(), [r, m]);
    }

    #[test]
    fn simple_quotients() {
        let a = smooth(2, 1, 3);
        let found = find_codim_one_quotients(&a, 10_000).unwrap();
        let mut expected = vec![maximal(&a, 1), maximal(&a, 2)];
        expected.sort();
        assert_eq!(found, expected);
        let s = Algebra::new(AlgebraSpec::singular_ram(2, 1, 3)).unwrap();
        assert_eq!(find_codim_one_quotients(&s, 10_000).unwrap(), [maximal(&s, 1)]);
        let u2 = Algebra::new(AlgebraSpec::unramified(2, 3)).unwrap();
        assert!(find_codim_one_quotients(&u2, 10_000).unwrap().is_empty());
        assert!(find_codim_one_quotients(&smooth(2, 2, 3), 10_000).unwrap().is_empty());
        assert!(matches!(find_codim_one_quotients(&a, 5), Err(Error::DimensionBound { .. })));
    }
}
