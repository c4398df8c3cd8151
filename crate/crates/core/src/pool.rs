//! Seeded sampling of ideals for property checks.
//!
//! Left ideals are closures of a few random low-degree elements, usually
//! together with a power of `𝔪` so that the result is saturated. The pool
//! also mixes in two-sided closures and ideals built from chains, which are
//! the ones where dual containment can hold.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::{CycField, CycScalar};
use crate::linalg::SparseVec;
use crate::orders::{Algebra, AlgebraKind, AlgebraSpec};
use crate::power_series::{CommIdeal, Monomials, TruncSeries};
use crate::submodules::{block_lift, chain_compose, morita_lift, IdealChain, LeftIdeal, RowModule};

/// Lines `αu + βv` used to build colength-two ideals `𝔪² + (αu + βv)`.
const LINES: [(i64, i64); 10] = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (1, 3), (3, 1), (2, 3)];

fn series(n: usize, field: &CycField, terms: &[(usize, usize, i64)]) -> TruncSeries {
    let mut s = TruncSeries::zero(n, field);
    for &(i, j, c) in terms {
        s = s.add(&TruncSeries::monomial(n, i, j, field.from_int(c))).expect("same ring");
    }
    s
}

/// Ideals of `R` of colength at most `max_colength`, each saturated at `n`.
pub fn comm_catalog(n: usize, field: &CycField, max_colength: usize) -> Vec<CommIdeal> {
    let gen = |gens: &[TruncSeries]| CommIdeal::from_generators(gens, n, field).expect("valid truncation");
    let s = |terms: &[(usize, usize, i64)]| series(n, field, terms);
    let mut out = vec![CommIdeal::unit(n, field), CommIdeal::maximal(n, field), CommIdeal::maximal_power(2, n, field)];
    for k in 2..=4 {
        out.push(gen(&[s(&[(1, 0, 1)]), s(&[(0, k, 1)])]));
        out.push(gen(&[s(&[(0, 1, 1)]), s(&[(k, 0, 1)])]));
    }
    let m2 = CommIdeal::maximal_power(2, n, field);
    for (a, b) in LINES {
        out.push(m2.sum(&gen(&[s(&[(1, 0, a), (0, 1, b)])])));
    }
    out.push(gen(&[s(&[(2, 0, 1)]), s(&[(1, 1, 1)]), s(&[(0, 3, 1)])]));
    out.push(gen(&[s(&[(0, 2, 1)]), s(&[(1, 1, 1)]), s(&[(3, 0, 1)])]));
    out.push(gen(&[s(&[(1, 0, 1), (0, 2, 1)]), s(&[(0, 3, 1)])]));
    let mut seen = BTreeSet::new();
    out.retain(|j| {
        j.is_saturated()
            && j.colength().is_ok_and(|c| c <= max_colength)
            && seen.insert(j.basis().rows().to_vec())
    });
    out
}

/// All chains `J_1 ⊇ … ⊇ J_e ⊇ u·J_1` from the catalog with
/// `e · Σ colength(J_k) ≤ max_colength`, excluding the all-`R` chain.
pub fn chain_catalog(e: usize, n: usize, field: &CycField, max_colength: usize) -> Vec<IdealChain> {
    let cat = comm_catalog(n, field, max_colength / e.max(1));
    let col: Vec<usize> = cat.iter().map(|j| j.colength().expect("saturated")).collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        e: usize,
        cat: &[CommIdeal],
        col: &[usize],
        budget: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<IdealChain>,
    ) {
        if stack.len() == e {
            let entries: Vec<CommIdeal> = stack.iter().map(|&i| cat[i].clone()).collect();
            if entries.iter().all(|j| j.is_unit()) {
                return;
            }
            if let Ok(ch) = IdealChain::new(entries) {
                out.push(ch);
            }
            return;
        }
        for i in 0..cat.len() {
            if col[i] > budget {
                continue;
            }
            if let Some(&prev) = stack.last() {
                if !cat[i].is_subideal_of(&cat[prev]) {
                    continue;
                }
            }
            stack.push(i);
            rec(e, cat, col, budget - col[i], stack, out);
            stack.pop();
        }
    }
    rec(e, &cat, &col, max_colength / e.max(1), &mut stack, &mut out);
    out
}

/// Two-sided ideals of `M_f(B)` (hereditary `B`, `e ∈ {2, 3}`, `f ∈ {1, 2}`)
/// from chains, with colength at most `max_colength`, each at truncation
/// `colength + 2`.
pub fn deformation_pool(max_colength: usize) -> Vec<LeftIdeal> {
    let field = CycField::new(1);
    let big_n = max_colength + 2;
    let mut out = Vec::new();
    for e in [2u32, 3] {
        for f in [1u32, 2] {
            let scale = (e * f * f) as usize;
            for chain in chain_catalog(e as usize, big_n, &field, max_colength * e as usize / scale) {
                let colength = scale * chain.total_colength().expect("saturated");
                if colength == 0 || colength > max_colength {
                    continue;
                }
                let n = colength + 2;
                let entries = chain.entries().iter().map(|j| j.with_trunc(n).expect("saturated")).collect();
                let chain = IdealChain::new(entries).expect("still a chain");
                let alg = Algebra::new(AlgebraSpec::smooth_ram(e, f, n)).expect("valid spec");
                out.push(chain_compose(&chain, &alg).expect("valid chain"));
            }
        }
    }
    out
}

fn random_scalar(rng: &mut ChaCha8Rng, field: &CycField) -> CycScalar {
    let n = [-3i64, -2, -1, 1, 2, 3][rng.random_range(0..6)];
    let s = field.from_rational(crate::cyclotomic::rat_frac(n, rng.random_range(1..=3)));
    if field.order() > 2 && rng.random_bool(0.25) {
        return &s + &field.zeta();
    }
    s
}

/// A random element supported in `(u, v)`-degree at most `max_degree`.
pub fn random_element(rng: &mut ChaCha8Rng, alg: &Algebra, max_degree: usize) -> SparseVec {
    let monos = Monomials::degree_start(max_degree.min(alg.trunc() - 1) + 1);
    let terms = rng.random_range(1..=4);
    let v = (0..terms)
        .map(|_| {
            let c = alg.coord(rng.random_range(0..monos), rng.random_range(0..alg.rank()));
            (c, random_scalar(rng, alg.field()))
        })
        .collect::<Vec<_>>();
    crate::linalg::collect_terms(v)
}

/// Seeds spanning `𝔪^d · A` as a left ideal.
fn maximal_power_seeds(alg: &Algebra, d: usize) -> Vec<SparseVec> {
    (0..=d)
        .map(|i| {
            let s = TruncSeries::monomial(alg.trunc(), i, d - i, alg.field().one());
            alg.scalar_series(&s).expect("same field").into_coords()
        })
        .collect()
}

/// Up to `count` distinct saturated proper left ideals with precision budget at least one.
pub fn left_ideal_pool(alg: &Algebra, seed: u64, count: usize) -> Vec<LeftIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.trunc();
    let field = alg.field().clone();
    let chains = if alg.kind() == AlgebraKind::SmoothRam && alg.spec().e >= 2 {
        chain_catalog(alg.spec().e as usize, n, &field, usize::MAX / 4)
            .into_iter()
            .filter(|c| c.entries().iter().all(|j| j.precision_budget().is_some_and(|b| b >= 1)))
            .collect()
    } else {
        Vec::new()
    };
    let cat: Vec<CommIdeal> =
        comm_catalog(n, &field, usize::MAX / 4).into_iter().filter(|j| j.precision_budget().is_some_and(|b| b >= 1)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 40 * count {
        attempts += 1;
        let roll = rng.random_range(0..10);
        let ideal = if roll < 2 {
            structured_ideal(&mut rng, alg, &chains, &cat)
        } else {
            let k = rng.random_range(1..=3);
            let mut seeds: Vec<SparseVec> = (0..k).map(|_| random_element(&mut rng, alg, 2)).collect();
            if roll < 9 && n >= 3 {
                let d = rng.random_range(1..=n - 2);
                seeds.extend(maximal_power_seeds(alg, d));
            }
            if roll < 5 {
                Some(LeftIdeal::from_vectors(alg, seeds))
            } else {
                Some(LeftIdeal::two_sided_from_vectors(alg, seeds))
            }
        };
        let Some(ideal) = ideal else { continue };
        if ideal.is_whole() || ideal.precision_budget().is_none_or(|b| b < 1) {
            continue;
        }
        if seen.insert(ideal.basis().rows().to_vec()) {
            out.push(ideal);
        }
    }
    out
}

fn structured_ideal(rng: &mut ChaCha8Rng, alg: &Algebra, chains: &[IdealChain], cat: &[CommIdeal]) -> Option<LeftIdeal> {
    let f = alg.spec().f as usize;
    match alg.kind() {
        AlgebraKind::SmoothRam if !chains.is_empty() => {
            let chain = &chains[rng.random_range(0..chains.len())];
            chain_compose(chain, alg).ok()
        }
        AlgebraKind::Unramified => {
            let summands: Vec<CommIdeal> = if rng.random_bool(0.5) {
                let j = cat[rng.random_range(0..cat.len())].clone();
                vec![j; f]
            } else {
                (0..f).map(|_| cat[rng.random_range(0..cat.len())].clone()).collect()
            };
            morita_lift(alg, &RowModule::direct_sum(&summands).ok()?).ok()
        }
        _ => {
            let j = cat[rng.random_range(0..cat.len())].clone();
            let base = crate::submodules::base_algebra(alg).ok()?;
            let seeds = j.basis_series().iter().map(|s| base.scalar_series(s).map(|x| x.into_coords())).collect::<Result<Vec<_>, _>>().ok()?;
            let two_sided = LeftIdeal::two_sided_from_vectors(&base, seeds);
            block_lift(alg, &two_sided).ok()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogs() {
        let field = CycField::new(1);
        let cat = comm_catalog(7, &field, 4);
        assert!(cat.len() >= 15);
        let e3 = chain_catalog(3, 7, &field, 8);
        assert_eq!(e3.len(), 3);
        let e2 = chain_catalog(2, 7, &field, 8);
        assert!(e2.len() >= 25);
    }

    #[test]
    fn pools_are_deterministic() {
        let alg = Algebra::new(AlgebraSpec::smooth_ram(2, 1, 4)).unwrap();
        let a = left_ideal_pool(&alg, 7, 20);
        let b = left_ideal_pool(&alg, 7, 20);
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|i| i.colength().is_ok() && i.is_left_ideal()));
    }
}
