//! The local model algebras `A = M_f(B)` and their truncated arithmetic.
//!
//! `S = R<x,y>` with `x^e' = u`, `y^e' = v`, `yx = ζxy`, and `B ⊂ M_m(S)`
//! (`m = e/e'`) is the subring whose entries strictly below the diagonal lie
//! in `xS`. The kinds of the local classification are the special cases
//! `e = e' = 1` (`M_f(R)`), `e' = 1` (`B` hereditary in `M_e(R)`) and `e = e'`
//! (`B = S`).
//!
//! Elements are coordinate vectors over `R_N` relative to the free `R`-basis
//! `E_pq ⊗ E_ij ⊗ x^(a + [i > j]) y^b` with `p, q < f`, `i, j < m`,
//! `a, b < e'`, where `x^e'` is folded to `u`. Coordinate `mono * K + k` holds
//! the coefficient of `u^s v^t · basis_k` for the monomial with index `mono`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{CycField, CycScalar, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::notation::{format_monomial, format_terms, parse_expr, ExprRing};
use crate::power_series::{Monomials, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    /// `M_f(R)`.
    Unramified,
    /// `M_f(B)` with `B ⊂ M_e(R)` hereditary.
    SmoothRam,
    /// `M_f(S)`.
    SingularRam,
    /// `e > e' > 1`; arithmetic only.
    Mixed,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Unramified => "Unramified",
            AlgebraKind::SmoothRam => "SmoothRam",
            AlgebraKind::SingularRam => "SingularRam",
            AlgebraKind::Mixed => "Mixed",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [AlgebraKind::Unramified, AlgebraKind::SmoothRam, AlgebraKind::SingularRam, AlgebraKind::Mixed]
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSpec {
    pub kind: AlgebraKind,
    pub e: u32,
    pub e_prime: u32,
    pub f: u32,
    /// Truncation order N: computations happen in `A / 𝔪^N A`.
    pub n: usize,
}

impl AlgebraSpec {
    pub fn unramified(f: u32, n: usize) -> Self {
        AlgebraSpec { kind: AlgebraKind::Unramified, e: 1, e_prime: 1, f, n }
    }

    pub fn smooth_ram(e: u32, f: u32, n: usize) -> Self {
        AlgebraSpec { kind: AlgebraKind::SmoothRam, e, e_prime: 1, f, n }
    }

    pub fn singular_ram(e: u32, f: u32, n: usize) -> Self {
        AlgebraSpec { kind: AlgebraKind::SingularRam, e, e_prime: e, f, n }
    }

    pub fn mixed(e: u32, e_prime: u32, f: u32, n: usize) -> Self {
        AlgebraSpec { kind: AlgebraKind::Mixed, e, e_prime, f, n }
    }

    pub fn of_kind(kind: AlgebraKind, e: u32, f: u32, n: usize) -> Self {
        match kind {
            AlgebraKind::Unramified => Self::unramified(f, n),
            AlgebraKind::SmoothRam => Self::smooth_ram(e, f, n),
            AlgebraKind::SingularRam | AlgebraKind::Mixed => Self::singular_ram(e, f, n),
        }
    }

    pub fn with_trunc(self, n: usize) -> Self {
        AlgebraSpec { n, ..self }
    }

    /// Size of the inner matrices: `e / e'`.
    pub fn m(&self) -> u32 {
        self.e / self.e_prime.max(1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSpec(msg.into()));
        if self.e == 0 || self.e_prime == 0 || self.f == 0 {
            return bad("e, e' and f must be positive");
        }
        if self.n < 2 {
            return bad("truncation N must be at least 2");
        }
        if !self.e.is_multiple_of(self.e_prime) {
            return bad("e' must divide e");
        }
        let ok = match self.kind {
            AlgebraKind::Unramified => self.e == 1 && self.e_prime == 1,
            AlgebraKind::SmoothRam => self.e_prime == 1,
            AlgebraKind::SingularRam => self.e_prime == self.e,
            AlgebraKind::Mixed => self.e_prime > 1 && self.e_prime < self.e,
        };
        if !ok {
            return Err(Error::InvalidSpec(alloc::format!(
                "kind {} is inconsistent with e = {}, e' = {}",
                self.kind.name(),
                self.e,
                self.e_prime
            )));
        }
        let k = (self.f * self.e) as u64;
        if k * k > 4096 {
            return bad("f * e too large");
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(e={}, e'={}, f={}, N={})", self.kind.name(), self.e, self.e_prime, self.f, self.n)
    }
}

/// Position of a structural basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub p: usize,
    pub q: usize,
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
}

impl BasisLabel {
    /// Power of `x` carried by the element, before folding `x^e'` into `u`.
    pub fn x_power(&self) -> usize {
        self.a + usize::from(self.i > self.j)
    }
}

#[derive(Clone, Copy, Debug)]
struct Product {
    target: u32,
    zeta: u32,
    du: u32,
    dv: u32,
}

#[derive(Debug)]
struct AlgebraInner {
    spec: AlgebraSpec,
    field: CycField,
    monos: Monomials,
    k: usize,
    labels: Vec<BasisLabel>,
    table: Vec<Option<Product>>,
    zeta_powers: Vec<CycScalar>,
}

/// A truncated model algebra with its precomputed structure constants.
/// Cheap to clone.
#[derive(Clone, Debug)]
pub struct Algebra(Arc<AlgebraInner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        spec.validate()?;
        let field = CycField::new(spec.e_prime);
        let monos = Monomials::new(spec.n);
        let (f, m, ep) = (spec.f as usize, spec.m() as usize, spec.e_prime as usize);
        let k = f * f * m * m * ep * ep;
        let mut labels = Vec::with_capacity(k);
        for p in 0..f {
            for q in 0..f {
                for i in 0..m {
                    for j in 0..m {
                        for a in 0..ep {
                            for b in 0..ep {
                                labels.push(BasisLabel { p, q, i, j, a, b });
                            }
                        }
                    }
                }
            }
        }
        let index = |l: &BasisLabel| ((((l.p * f + l.q) * m + l.i) * m + l.j) * ep + l.a) * ep + l.b;
        let mut table = vec![None; k * k];
        for (k1, l1) in labels.iter().enumerate() {
            for (k2, l2) in labels.iter().enumerate() {
                if l1.q != l2.p || l1.j != l2.i {
                    continue;
                }
                let (alpha, gamma) = (l1.x_power(), l2.x_power());
                let delta = usize::from(l1.i > l2.j);
                let xs = alpha + gamma - delta;
                let ys = l1.b + l2.b;
                let t = BasisLabel { p: l1.p, q: l2.q, i: l1.i, j: l2.j, a: xs % ep, b: ys % ep };
                table[k1 * k + k2] = Some(Product {
                    target: index(&t) as u32,
                    zeta: ((l1.b * gamma) % ep) as u32,
                    du: (xs / ep) as u32,
                    dv: (ys / ep) as u32,
                });
            }
        }
        let zeta_powers = (0..ep as u64).map(|z| field.zeta_pow(z)).collect();
        Ok(Algebra(Arc::new(AlgebraInner { spec, field, monos, k, labels, table, zeta_powers })))
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.0.spec
    }

    pub fn kind(&self) -> AlgebraKind {
        self.0.spec.kind
    }

    pub fn field(&self) -> &CycField {
        &self.0.field
    }

    pub fn monos(&self) -> &Monomials {
        &self.0.monos
    }

    pub fn trunc(&self) -> usize {
        self.0.spec.n
    }

    /// Rank of the algebra over R.
    pub fn rank(&self) -> usize {
        self.0.k
    }

    /// Dimension of the truncated algebra over the scalar field.
    pub fn dim(&self) -> usize {
        self.0.k * self.0.monos.len()
    }

    pub fn label(&self, k: usize) -> BasisLabel {
        self.0.labels[k]
    }

    pub fn basis_index(&self, l: BasisLabel) -> usize {
        let s = &self.0.spec;
        let (f, m, ep) = (s.f as usize, s.m() as usize, s.e_prime as usize);
        ((((l.p * f + l.q) * m + l.i) * m + l.j) * ep + l.a) * ep + l.b
    }

    /// Split a coordinate into (monomial index, basis index).
    pub fn split(&self, coord: usize) -> (usize, usize) {
        (coord / self.0.k, coord % self.0.k)
    }

    pub fn coord(&self, mono: usize, k: usize) -> usize {
        mono * self.0.k + k
    }

    /// Total `(u, v)`-degree of a coordinate's monomial.
    pub fn degree(&self, coord: usize) -> usize {
        self.0.monos.degree(coord / self.0.k)
    }

    /// First coordinate whose monomial has total degree `d`.
    pub fn degree_start(&self, d: usize) -> usize {
        Monomials::degree_start(d) * self.0.k
    }

    /// Product of coordinate vectors.
    pub fn mul_vec(&self, a: &[(usize, CycScalar)], b: &[(usize, CycScalar)]) -> SparseVec {
        let inner = &*self.0;
        let k = inner.k;
        let mut out = Vec::new();
        for (ca, xa) in a {
            let (ma, ka) = (ca / k, ca % k);
            let row = &inner.table[ka * k..(ka + 1) * k];
            for (cb, xb) in b {
                let (mb, kb) = (cb / k, cb % k);
                let Some(p) = row[kb] else { continue };
                let (i2, j2) = inner.monos.exps(mb);
                let Some(mono) = inner.monos.shift(ma, i2 + p.du, j2 + p.dv) else { continue };
                let mut c = inner.field.mul(xa, xb);
                if p.zeta != 0 {
                    c = inner.field.mul(&c, &inner.zeta_powers[p.zeta as usize]);
                }
                out.push((mono * k + p.target as usize, c));
            }
        }
        linalg::collect_terms(out)
    }

    pub fn element(&self, coords: SparseVec) -> AlgebraElement {
        let dim = self.dim();
        let coords = coords.into_iter().filter(|(c, x)| *c < dim && !x.is_zero()).collect();
        AlgebraElement { alg: self.clone(), coords }
    }

    pub fn zero(&self) -> AlgebraElement {
        self.element(Vec::new())
    }

    /// `s · 1` for a series `s`; extra precision in `s` is dropped.
    pub fn scalar_series(&self, s: &TruncSeries) -> Result<AlgebraElement> {
        if s.order() != self.field().order() {
            return Err(Error::OrderMismatch { left: self.field().order(), right: s.order() });
        }
        let s = s.with_trunc(self.trunc());
        let spec = self.spec();
        let mut coords = Vec::new();
        for &(mono, ref c) in s.terms() {
            for p in 0..spec.f as usize {
                for i in 0..spec.m() as usize {
                    let k = self.basis_index(BasisLabel { p, q: p, i, j: i, a: 0, b: 0 });
                    coords.push((self.coord(mono, k), c.clone()));
                }
            }
        }
        Ok(self.element(linalg::collect_terms(coords)))
    }

    pub fn scalar(&self, c: &CycScalar) -> AlgebraElement {
        self.scalar_series(&TruncSeries::constant(self.trunc(), c.clone())).expect("same field")
    }

    pub fn one(&self) -> AlgebraElement {
        self.scalar(&self.field().one())
    }

    pub fn u(&self) -> AlgebraElement {
        self.scalar_series(&TruncSeries::u(self.trunc(), self.field())).expect("same field")
    }

    pub fn v(&self) -> AlgebraElement {
        self.scalar_series(&TruncSeries::v(self.trunc(), self.field())).expect("same field")
    }

    fn diagonal_power(&self, xpow: usize, ypow: usize) -> AlgebraElement {
        let spec = self.spec();
        let ep = spec.e_prime as usize;
        let (du, a) = (xpow / ep, xpow % ep);
        let (dv, b) = (ypow / ep, ypow % ep);
        let Some(mono) = self.monos().shift(0, du as u32, dv as u32) else { return self.zero() };
        let mut coords = Vec::new();
        for p in 0..spec.f as usize {
            for i in 0..spec.m() as usize {
                let k = self.basis_index(BasisLabel { p, q: p, i, j: i, a, b });
                coords.push((self.coord(mono, k), self.field().one()));
            }
        }
        self.element(linalg::collect_terms(coords))
    }

    /// `x · 1` (equal to `u · 1` when `e' = 1`).
    pub fn x(&self) -> AlgebraElement {
        self.diagonal_power(1, 0)
    }

    /// `y · 1` (equal to `v · 1` when `e' = 1`).
    pub fn y(&self) -> AlgebraElement {
        self.diagonal_power(0, 1)
    }

    /// The structural basis element with the given label, as an element.
    pub fn basis_element(&self, l: BasisLabel) -> AlgebraElement {
        let k = self.basis_index(l);
        self.element(vec![(k, self.field().one())])
    }

    /// `1_f ⊗ E_ij ⊗ x^[i > j]` for 0-based inner indices: the matrix unit of
    /// `B` scaled into the pattern.
    pub fn inner_unit(&self, i: usize, j: usize) -> AlgebraElement {
        let coords = (0..self.spec().f as usize)
            .map(|p| (self.basis_index(BasisLabel { p, q: p, i, j, a: 0, b: 0 }), self.field().one()));
        self.element(linalg::collect_terms(coords))
    }

    /// `E_pq ⊗ 1_B` for 0-based outer indices.
    pub fn outer_unit(&self, p: usize, q: usize) -> AlgebraElement {
        let coords = (0..self.spec().m() as usize)
            .map(|i| (self.basis_index(BasisLabel { p, q, i, j: i, a: 0, b: 0 }), self.field().one()));
        self.element(linalg::collect_terms(coords))
    }

    /// The basis element `b_{i,j}` of the hereditary order (1-based), tensored with `1_f`.
    pub fn standard_basis(&self, i: usize, j: usize) -> Result<AlgebraElement> {
        self.require_kind(&[AlgebraKind::SmoothRam])?;
        let e = self.spec().e as usize;
        if i == 0 || j == 0 || i > e || j > e {
            return Err(Error::OutOfRange(alloc::format!("b_({i},{j}) with e = {e}")));
        }
        Ok(self.inner_unit(i - 1, j - 1))
    }

    /// The `u`-cleared dual shift: `c = u·b*`, so that `u·B* = cB = Bc`.
    /// For `M_f(R)` the dual is identified with the algebra by the trace form and `c = 1`.
    pub fn dual_shift_element(&self) -> Result<AlgebraElement> {
        match self.kind() {
            AlgebraKind::Unramified => Ok(self.one()),
            AlgebraKind::SmoothRam => {
                let e = self.spec().e as usize;
                if e == 1 {
                    return Ok(self.one());
                }
                let mut c = self.inner_unit(e - 1, 0);
                for i in 0..e - 1 {
                    c = c.add(&self.inner_unit(i, i + 1))?;
                }
                Ok(c)
            }
            k => Err(Error::UnsupportedKind { expected: "Unramified or SmoothRam", found: k.name() }),
        }
    }

    /// Generators of the left ideal `M_f(𝔪_i)`, where `𝔪_i ⊂ B` replaces the
    /// diagonal entry `(i, i)` by its maximal ideal (1-based `i`). With `m = 1`
    /// this is the unique maximal ideal generated by `x` and `y`, and `i` is ignored.
    pub fn maximal_ideal(&self, i: usize) -> Result<Vec<AlgebraElement>> {
        let m = self.spec().m() as usize;
        if m == 1 {
            return Ok(vec![self.x(), self.y()]);
        }
        if i == 0 || i > m {
            return Err(Error::OutOfRange(alloc::format!("maximal ideal index {i} with {m} diagonal entries")));
        }
        let i = i - 1;
        let mut gens = Vec::new();
        for r in 0..m {
            for c in 0..m {
                if (r, c) != (i, i) {
                    gens.push(self.inner_unit(r, c));
                }
            }
        }
        let eii = self.inner_unit(i, i);
        gens.push(eii.mul(&self.x())?);
        gens.push(eii.mul(&self.y())?);
        Ok(gens)
    }

    pub fn require_kind(&self, allowed: &[AlgebraKind]) -> Result<()> {
        if allowed.contains(&self.kind()) {
            return Ok(());
        }
        let expected = match allowed {
            [AlgebraKind::SmoothRam] => "SmoothRam",
            [AlgebraKind::Unramified] => "Unramified",
            _ => "Unramified or SmoothRam",
        };
        Err(Error::UnsupportedKind { expected, found: self.kind().name() })
    }

    /// The same algebra at another truncation order.
    pub fn with_trunc(&self, n: usize) -> Result<Algebra> {
        Algebra::new(self.spec().with_trunc(n))
    }

    /// Re-express coordinates from another truncation of the same algebra.
    pub fn transfer(&self, from: &Algebra, coords: &[(usize, CycScalar)]) -> SparseVec {
        let k = self.rank();
        let out = coords.iter().filter_map(|(c, x)| {
            let (mono, kb) = from.split(*c);
            let (i, j) = from.monos().exps(mono);
            self.monos().shift(0, i, j).map(|m| (m * k + kb, x.clone()))
        });
        linalg::collect_terms(out)
    }

    /// The algebra `S` (or `R` when `e' = 1`) used to read matrix entries, one
    /// order finer so entries below the diagonal keep full precision after
    /// dividing out `x`.
    fn entry_ring(&self) -> Result<Algebra> {
        let ep = self.spec().e_prime;
        let spec = if ep == 1 {
            AlgebraSpec::unramified(1, self.trunc() + 1)
        } else {
            AlgebraSpec::singular_ram(ep, 1, self.trunc() + 1)
        };
        Algebra::new(spec)
    }

    /// Build an element from its `fm × fm` matrix of entries in `S`.
    pub fn from_entries(&self, entries: &[Vec<String>]) -> Result<AlgebraElement> {
        let spec = *self.spec();
        let (f, m, ep) = (spec.f as usize, spec.m() as usize, spec.e_prime as usize);
        let size = f * m;
        if entries.len() != size || entries.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidSpec(alloc::format!("expected a {size} x {size} matrix of entries")));
        }
        let ring = self.entry_ring()?;
        let mut coords = Vec::new();
        for (row, cells) in entries.iter().enumerate() {
            for (col, cell) in cells.iter().enumerate() {
                let s = ring.parse(cell)?;
                let (p, i) = (row / m, row % m);
                let (q, j) = (col / m, col % m);
                let lower = i > j;
                for (c, x) in &s.coords {
                    let (mono, k) = ring.split(*c);
                    let (a, b) = (k / ep, k % ep);
                    let (mut du, dv) = ring.monos().exps(mono);
                    let mut abase = a;
                    if lower {
                        if a >= 1 {
                            abase = a - 1;
                        } else if du >= 1 {
                            du -= 1;
                            abase = ep - 1;
                        } else {
                            return Err(Error::PatternViolation { row: row + 1, col: col + 1 });
                        }
                    }
                    let Some(target) = self.monos().shift(0, du, dv) else { continue };
                    let k = self.basis_index(BasisLabel { p, q, i, j, a: abase, b });
                    coords.push((self.coord(target, k), x.clone()));
                }
            }
        }
        Ok(self.element(linalg::collect_terms(coords)))
    }

    /// Parse an expression in `u, v, x, y, z` as an element of the algebra.
    pub fn parse(&self, s: &str) -> Result<AlgebraElement> {
        parse_expr(self, s)
    }

    /// Matrix of entries in `S`, written as polynomials in `u, v, x, y, z`.
    pub fn entries(&self, coords: &[(usize, CycScalar)]) -> Vec<Vec<String>> {
        let spec = self.spec();
        let (m, ep) = (spec.m() as usize, spec.e_prime as usize);
        let size = spec.f as usize * m;
        // per cell: (u, v, x, y) exponents with their coefficient
        type Cell = Vec<((u32, u32, u32, u32), CycScalar)>;
        let mut cells: Vec<Vec<Cell>> = vec![vec![Vec::new(); size]; size];
        for (c, x) in coords {
            let (mono, k) = self.split(*c);
            let l = self.label(k);
            let (mut du, dv) = self.monos().exps(mono);
            let mut xp = l.x_power();
            if xp == ep {
                xp = 0;
                du += 1;
            }
            cells[l.p * m + l.i][l.q * m + l.j].push(((du, dv, xp as u32, l.b as u32), x.clone()));
        }
        cells
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|mut terms| {
                        terms.sort_by_key(|((du, dv, a, b), _)| (du + dv, *dv, *a, *b));
                        format_terms(terms.into_iter().map(|((du, dv, a, b), c)| {
                            (c, format_monomial(&[("u", du), ("v", dv), ("x", a), ("y", b)]))
                        }))
                    })
                    .collect()
            })
            .collect()
    }
}

impl ExprRing for Algebra {
    type Elem = AlgebraElement;
    fn constant(&self, q: Rational) -> AlgebraElement {
        self.scalar(&self.field().from_rational(q))
    }
    fn variable(&self, name: char) -> Option<AlgebraElement> {
        match name {
            'u' => Some(self.u()),
            'v' => Some(self.v()),
            'x' => Some(self.x()),
            'y' => Some(self.y()),
            'z' => Some(self.scalar(&self.field().zeta())),
            _ => None,
        }
    }
    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.element(linalg::add_vec(self.field(), &a.coords, &b.coords))
    }
    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.element(self.mul_vec(&a.coords, &b.coords))
    }
    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        a.neg()
    }
}

/// An element of a truncated model algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    alg: Algebra,
    coords: SparseVec,
}

impl AlgebraElement {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.alg.spec()
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn into_coords(self) -> SparseVec {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        let (a, b) = (self.spec(), other.spec());
        if a == b {
            return Ok(());
        }
        if a.with_trunc(b.n) == *b {
            return Err(Error::TruncMismatch { left: a.n, right: b.n });
        }
        Err(Error::SpecMismatch)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.alg.element(linalg::add_vec(self.alg.field(), &self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.alg.element(linalg::sub_vec(self.alg.field(), &self.coords, &other.coords)))
    }

    pub fn neg(&self) -> Self {
        self.alg.element(self.coords.iter().map(|(c, x)| (*c, -x)).collect())
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        self.alg.element(linalg::scale_vec(self.alg.field(), c, &self.coords))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.alg.element(self.alg.mul_vec(&self.coords, &other.coords)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.alg.one();
        for _ in 0..k {
            acc = self.alg.element(self.alg.mul_vec(&acc.coords, &self.coords));
        }
        acc
    }

    pub fn entries(&self) -> Vec<Vec<String>> {
        self.alg.entries(&self.coords)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.entries();
        f.write_str("[")?;
        for (r, row) in rows.iter().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}
