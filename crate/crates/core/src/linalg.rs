//! Sparse vectors and canonical subspaces over Q(ζ).
//!
//! A [`Subspace`] is kept in echelon form with the pivot of each row at its
//! smallest nonzero coordinate, normalized to 1. After [`Subspace::canonicalize`]
//! the rows are fully reduced and sorted by pivot, so two subspaces are equal
//! exactly when their canonical rows are equal.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{CycField, CycScalar};

/// Sorted `(coordinate, value)` pairs with no stored zeros.
pub type SparseVec = Vec<(usize, CycScalar)>;

const NONE: u32 = u32::MAX;

pub fn scale_vec(field: &CycField, c: &CycScalar, v: &[(usize, CycScalar)]) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, a)| (*i, field.mul(c, a))).collect()
}

/// `a + c * b`.
pub fn axpy(field: &CycField, a: &[(usize, CycScalar)], c: &CycScalar, b: &[(usize, CycScalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let t = field.mul(c, &b[j].1);
            if !t.is_zero() {
                out.push((b[j].0, t));
            }
            j += 1;
        } else {
            let s = &a[i].1 + &field.mul(c, &b[j].1);
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn add_vec(field: &CycField, a: &[(usize, CycScalar)], b: &[(usize, CycScalar)]) -> SparseVec {
    axpy(field, a, &field.one(), b)
}

pub fn sub_vec(field: &CycField, a: &[(usize, CycScalar)], b: &[(usize, CycScalar)]) -> SparseVec {
    axpy(field, a, &-field.one(), b)
}

/// Collect unsorted terms with possible repeats into a [`SparseVec`].
pub fn collect_terms(terms: impl IntoIterator<Item = (usize, CycScalar)>) -> SparseVec {
    let mut map: BTreeMap<usize, CycScalar> = BTreeMap::new();
    for (i, c) in terms {
        match map.entry(i) {
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                *o.get_mut() = s;
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
    canonical: bool,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.canonical && other.canonical);
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivot_row: vec![NONE; ambient], canonical: true }
    }

    pub fn full(field: &CycField, ambient: usize) -> Self {
        Self::spanned_by_units(field, ambient, 0..ambient)
    }

    /// Span of the given coordinate unit vectors.
    pub fn spanned_by_units(field: &CycField, ambient: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::zero(ambient);
        for c in coords {
            s.insert(field, vec![(c, field.one())]);
        }
        s.canonicalize(field);
        s
    }

    pub fn from_vectors(field: &CycField, ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(field, v);
        }
        s.canonicalize(field);
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn is_pivot(&self, coord: usize) -> bool {
        self.pivot_row[coord] != NONE
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// True when the unit vector at `coord` lies in the subspace.
    pub fn contains_unit(&self, field: &CycField, coord: usize) -> bool {
        if self.canonical {
            let r = self.pivot_row[coord];
            r != NONE && self.rows[r as usize].len() == 1
        } else {
            self.reduce(field, vec![(coord, field.one())]).is_empty()
        }
    }

    /// Normal form of `v` modulo the subspace: the unique representative
    /// supported off the pivot columns.
    pub fn reduce(&self, field: &CycField, v: SparseVec) -> SparseVec {
        if v.iter().all(|(i, _)| self.pivot_row[*i] == NONE) {
            return v;
        }
        let mut work: BTreeMap<usize, CycScalar> = v.into_iter().collect();
        let mut out = SparseVec::new();
        while let Some((idx, c)) = work.pop_first() {
            let r = self.pivot_row[idx];
            if r == NONE {
                out.push((idx, c));
                continue;
            }
            for (j, a) in &self.rows[r as usize][1..] {
                let t = field.mul(&c, a);
                match work.entry(*j) {
                    Entry::Occupied(mut o) => {
                        let s = o.get() - &t;
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                    Entry::Vacant(slot) => {
                        slot.insert(-t);
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, field: &CycField, v: &[(usize, CycScalar)]) -> bool {
        self.reduce(field, v.to_vec()).is_empty()
    }

    /// Adds `v` to the span. Returns the new (normalized) row when `v` was not
    /// already contained.
    pub fn insert(&mut self, field: &CycField, v: SparseVec) -> Option<&SparseVec> {
        let r = self.reduce(field, v);
        if r.is_empty() {
            return None;
        }
        let lead = field.inv(&r[0].1).expect("nonzero leading coefficient");
        let row: SparseVec = if r[0].1.is_one() { r } else { scale_vec(field, &lead, &r) };
        let p = row[0].0;
        self.pivot_row[p] = self.rows.len() as u32;
        self.rows.push(row);
        self.canonical = false;
        self.rows.last()
    }

    /// Fully reduce and sort rows into canonical form.
    pub fn canonicalize(&mut self, field: &CycField) {
        if self.canonical {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| core::cmp::Reverse(self.rows[k][0].0));
        for k in order {
            let row = core::mem::take(&mut self.rows[k]);
            let head = row[0].clone();
            let tail = self.reduce(field, row[1..].to_vec());
            let mut new_row = Vec::with_capacity(tail.len() + 1);
            new_row.push(head);
            new_row.extend(tail);
            self.rows[k] = new_row;
        }
        self.rows.sort_by_key(|r| r[0].0);
        for (k, r) in self.rows.iter().enumerate() {
            self.pivot_row[r[0].0] = k as u32;
        }
        self.canonical = true;
    }

    pub fn is_subspace_of(&self, field: &CycField, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.rows.iter().all(|r| other.contains(field, r))
    }

    pub fn sum(&self, field: &CycField, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(field, r.clone());
        }
        s.canonicalize(field);
        s
    }

    /// Zassenhaus intersection.
    pub fn intersection(&self, field: &CycField, other: &Subspace) -> Subspace {
        let n = self.ambient;
        let mut big = Subspace::zero(2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend(r.iter().map(|(i, c)| (i + n, c.clone())));
            big.insert(field, v);
        }
        for r in &other.rows {
            big.insert(field, r.clone());
        }
        let rows = big.rows.iter().filter(|r| r[0].0 >= n).map(|r| r.iter().map(|(i, c)| (i - n, c.clone())).collect());
        Subspace::from_vectors(field, n, rows)
    }

    /// Canonical representatives of `self / sub`; requires `sub ⊆ self`.
    pub fn quotient_reps(&self, field: &CycField, sub: &Subspace) -> Vec<SparseVec> {
        let reduced = self.rows.iter().map(|r| sub.reduce(field, r.clone()));
        Subspace::from_vectors(field, self.ambient, reduced).into_rows()
    }

    /// Image of the subspace under a linear map given on its rows.
    pub fn image(&self, field: &CycField, target_dim: usize, map: impl Fn(&SparseVec) -> SparseVec) -> Subspace {
        Subspace::from_vectors(field, target_dim, self.rows.iter().map(map))
    }
}

/// Kernel of the linear map sending the j-th unit vector of a `domain`-dimensional
/// space to `images[j]` (vectors in a `target`-dimensional space).
pub fn kernel(field: &CycField, images: &[SparseVec], target: usize) -> Subspace {
    let domain = images.len();
    let mut big = Subspace::zero(target + domain);
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.push((target + j, field.one()));
        big.insert(field, v);
    }
    let rows = big.rows.iter().filter(|r| r[0].0 >= target).map(|r| r.iter().map(|(i, c)| (i - target, c.clone())).collect());
    Subspace::from_vectors(field, domain, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycField;

    fn v(field: &CycField, entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, c)| (i, field.from_int(c))).collect()
    }

    #[test]
    fn canonical_form_is_independent_of_input_order() {
        let f = CycField::new(1);
        let a = v(&f, &[(0, 1), (2, 3)]);
        let b = v(&f, &[(0, 2), (1, 1), (3, 1)]);
        let c = v(&f, &[(1, 1), (2, -6), (3, 1)]);
        let s1 = Subspace::from_vectors(&f, 4, [a.clone(), b.clone(), c.clone()]);
        let s2 = Subspace::from_vectors(&f, 4, [c, b, a]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        for r in s1.rows() {
            assert!(r[0].1.is_one());
            assert!(r[1..].iter().all(|(i, _)| !s1.is_pivot(*i)));
        }
    }

    #[test]
    fn intersection_and_sum_dimensions() {
        let f = CycField::new(1);
        let s = Subspace::from_vectors(&f, 4, [v(&f, &[(0, 1)]), v(&f, &[(1, 1), (2, 1)])]);
        let t = Subspace::from_vectors(&f, 4, [v(&f, &[(1, 1), (2, 1)]), v(&f, &[(3, 1)])]);
        let i = s.intersection(&f, &t);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&f, &v(&f, &[(1, 2), (2, 2)])));
        assert_eq!(s.sum(&f, &t).dim(), 3);
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let f = CycField::new(1);
        // x0 + 2 x1 - x2
        let images = vec![v(&f, &[(0, 1)]), v(&f, &[(0, 2)]), v(&f, &[(0, -1)])];
        let k = kernel(&f, &images, 1);
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&f, &v(&f, &[(0, 1), (2, 1)])));
        assert!(k.contains(&f, &v(&f, &[(1, 1), (2, 2)])));
    }
}
