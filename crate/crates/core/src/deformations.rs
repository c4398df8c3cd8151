//! Deforming a left ideal off the dual containment locus, the projective line
//! of ideals joining the two ends, and the divisibility probe for colengths.

use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{rat_frac, CycScalar};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec, Subspace};
use crate::orders::{Algebra, AlgebraKind, AlgebraSpec, BasisLabel};
use crate::power_series::{nakayama_corank1_pick, socle_and_cosocle_picks, socle_pick, CommIdeal};
use crate::submodules::{
    base_algebra, block_lift, block_reduce, chain_decompose, chain_shape, check_dual_containment, closure_generators,
    find_codim_one_quotients, morita_lift, IdealChain, LeftIdeal, RowModule,
};

/// Which case of the construction produced the deformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Dual containment already failed; the input is returned unchanged.
    NoOp,
    /// `M_f(R)`: the module is replaced by `J ⊕ R^(f-1)`.
    Unramified,
    /// All chain entries equal.
    AllEqual,
    /// First index `m` (1-based) with `J_m ≠ J_(m+1)`.
    Step(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySample {
    pub point: (CycScalar, CycScalar),
    pub fiber: LeftIdeal,
    pub colength: usize,
}

#[derive(Clone, Debug)]
pub struct DeformationCertificate {
    pub before: LeftIdeal,
    pub after: LeftIdeal,
    pub colength: usize,
    pub branch: Branch,
    pub dual_containment_before: bool,
    pub dual_containment_after: bool,
    /// Fibers of the family joining `before` (at `[1:0]`) and `after` (at `[0:1]`).
    /// Empty when only the endpoints are certified.
    pub family_samples: Vec<FamilySample>,
}

impl DeformationCertificate {
    pub fn endpoint_only(&self) -> bool {
        self.family_samples.is_empty()
    }
}

/// Points of the projective line used to sample families; the two endpoints come first.
pub fn sample_points(field: &crate::cyclotomic::CycField) -> Vec<(CycScalar, CycScalar)> {
    let q = |n: i64, d: i64| field.from_rational(rat_frac(n, d));
    vec![
        (q(1, 1), q(0, 1)),
        (q(0, 1), q(1, 1)),
        (q(1, 1), q(1, 1)),
        (q(1, 1), q(-1, 1)),
        (q(1, 1), q(2, 1)),
        (q(2, 1), q(1, 1)),
        (q(1, 1), q(1, 2)),
        (q(1, 1), q(-2, 1)),
        (q(3, 1), q(1, 1)),
        (q(1, 1), q(3, 1)),
        (q(2, 1), q(-1, 1)),
        (q(1, 1), q(-1, 3)),
    ]
}

/// Replaces a submodule `M ⊂ R^f` of colength `l` by `J ⊕ R^(f-1)`, with `J`
/// the monomial ideal whose quotient is spanned by the first `l` monomials.
pub fn deform_unramified(alg: &Algebra, module: &RowModule) -> Result<DeformationCertificate> {
    alg.require_kind(&[AlgebraKind::Unramified])?;
    let f = alg.spec().f as usize;
    if f < 2 {
        return Err(Error::RequiresFGreaterOne);
    }
    let l = module.colength()?;
    if l == 0 {
        return Err(Error::ImproperIdeal);
    }
    let before = morita_lift(alg, module)?;
    let n = alg.trunc();
    let j = CommIdeal::staircase(l, n, alg.field());
    if !j.is_saturated() {
        return Err(Error::PrecisionExhausted { budget: 0, required: 1 });
    }
    let mut summands = vec![j];
    summands.extend((1..f).map(|_| CommIdeal::unit(n, alg.field())));
    let after = morita_lift(alg, &RowModule::direct_sum(&summands)?)?;
    let colength = before.colength()?;
    if after.colength()? != colength {
        return Err(Error::ChainInvariantViolated("colength changed".into()));
    }
    Ok(DeformationCertificate {
        dual_containment_before: check_dual_containment(&before)?,
        dual_containment_after: check_dual_containment(&after)?,
        before,
        after,
        colength,
        branch: Branch::Unramified,
        family_samples: Vec::new(),
    })
}

/// Assembles the ideal whose first row holds `first_row` (entries for columns
/// `1..e`, i.e. `J'_e, …, J'_1`) and whose other rows follow the chain pattern.
fn assemble_first_row(alg: &Algebra, chain: &IdealChain, first_row: &[CommIdeal]) -> Result<LeftIdeal> {
    let e = alg.spec().e as usize;
    let mut rows: Vec<SparseVec> = Vec::new();
    for r in 0..e {
        for c in 0..e {
            let j = if r == 0 { &first_row[c] } else { chain.entry_at(r, c) };
            let k = alg.basis_index(BasisLabel { p: 0, q: 0, i: r, j: c, a: 0, b: 0 });
            for row in j.basis().rows() {
                rows.push(row.iter().map(|(mono, x)| (alg.coord(*mono, k), x.clone())).collect());
            }
        }
    }
    LeftIdeal::from_subspace(alg, Subspace::from_vectors(alg.field(), alg.dim(), rows))
}

/// Left multiplication by every `b_ij`, `u` and `v` keeps the ideal.
fn closed_under_standard_basis(ideal: &LeftIdeal) -> Result<bool> {
    let alg = ideal.algebra();
    let e = alg.spec().e as usize;
    let mut gens = vec![alg.u(), alg.v()];
    for i in 1..=e {
        for j in 1..=e {
            gens.push(alg.standard_basis(i, j)?);
        }
    }
    Ok(gens.iter().all(|g| ideal.basis().rows().iter().all(|r| ideal.contains_vec(&alg.mul_vec(g.coords(), r)))))
}

fn no_op(ideal: &LeftIdeal) -> Result<DeformationCertificate> {
    Ok(DeformationCertificate {
        before: ideal.clone(),
        after: ideal.clone(),
        colength: ideal.colength()?,
        branch: Branch::NoOp,
        dual_containment_before: false,
        dual_containment_after: false,
        family_samples: Vec::new(),
    })
}

/// Deforms a two-sided ideal `J` of the hereditary order (given by its chain)
/// to a left ideal `J'` of the same colength failing dual containment,
/// changing only the first row of the chain pattern.
pub fn deform_smooth_ram(ideal: &LeftIdeal) -> Result<DeformationCertificate> {
    let alg = ideal.algebra();
    alg.require_kind(&[AlgebraKind::SmoothRam])?;
    if !ideal.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if ideal.is_whole() {
        return Err(Error::ImproperIdeal);
    }
    if alg.spec().e < 2 {
        return Err(Error::InvalidSpec("the construction needs e >= 2".into()));
    }
    if !check_dual_containment(ideal)? {
        return no_op(ideal);
    }
    if alg.spec().f > 1 {
        let base = deform_smooth_ram(&block_reduce(ideal)?)?;
        let lift = |i: &LeftIdeal| block_lift(alg, i);
        let family_samples = base
            .family_samples
            .iter()
            .map(|s| {
                let fiber = lift(&s.fiber)?;
                let colength = fiber.colength()?;
                Ok(FamilySample { point: s.point.clone(), fiber, colength })
            })
            .collect::<Result<Vec<_>>>()?;
        let after = lift(&base.after)?;
        return Ok(DeformationCertificate {
            before: ideal.clone(),
            colength: ideal.colength()?,
            dual_containment_before: true,
            dual_containment_after: check_dual_containment(&after)?,
            after,
            branch: base.branch,
            family_samples,
        });
    }

    let chain = chain_decompose(ideal)?;
    let e = chain.len();
    let mut primed: Vec<CommIdeal> = chain.entries().to_vec();
    let first_unequal = (1..e).find(|&m| chain.get(m) != chain.get(m + 1));
    let branch = match first_unequal {
        None => {
            primed[e - 1] = nakayama_corank1_pick(chain.get(e))?;
            primed[0] = socle_pick(chain.get(1))?;
            Branch::AllEqual
        }
        Some(m) => {
            let (smaller, larger) = socle_and_cosocle_picks(chain.get(m + 1), chain.get(m))?;
            primed[m - 1] = smaller;
            primed[m] = larger;
            Branch::Step(m)
        }
    };
    // first row reads J'_e, J'_(e-1), …, J'_1
    let first_row: Vec<CommIdeal> = (0..e).map(|c| primed[e - 1 - c].clone()).collect();
    let after = assemble_first_row(alg, &chain, &first_row)?;

    let colength = ideal.colength()?;
    if !closed_under_standard_basis(&after)? {
        return Err(Error::NotLeftIdeal);
    }
    if after.colength()? != colength {
        return Err(Error::ChainInvariantViolated("colength changed".into()));
    }
    let dual_after = check_dual_containment(&after)?;
    if dual_after || chain_shape(&after).is_ok() {
        return Err(Error::ChainInvariantViolated("deformed ideal still has chain shape".into()));
    }

    let family_samples = sample_points(alg.field())
        .into_iter()
        .map(|point| {
            let fiber = family_fiber(ideal, &after, &point)?;
            let colength = fiber.colength()?;
            Ok(FamilySample { point, fiber, colength })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(DeformationCertificate {
        before: ideal.clone(),
        after,
        colength,
        branch,
        dual_containment_before: true,
        dual_containment_after: dual_after,
        family_samples,
    })
}

/// Scalar by which every generator acts on the one-dimensional quotient
/// `span(w)`, modulo `sub`.
fn character(alg: &Algebra, sub: &Subspace, w: &SparseVec) -> Result<Vec<CycScalar>> {
    let field = alg.field();
    let pivot = w[0].0;
    closure_generators(alg)
        .iter()
        .map(|g| {
            let nf = sub.reduce(field, alg.mul_vec(g.coords(), w));
            let lambda = nf.iter().find(|(i, _)| *i == pivot).map_or_else(|| field.zero(), |(_, c)| c.clone());
            if linalg::sub_vec(field, &nf, &linalg::scale_vec(field, &lambda, w)).is_empty() {
                Ok(lambda)
            } else {
                Err(Error::NotCosimple)
            }
        })
        .collect()
}

/// The fiber over `[a:b]` of the family joining `j` (at `[1:0]`) and `j2`
/// (at `[0:1]`): `(j ∩ j2) + span(a·w + b·w')` for the canonical coset
/// representatives `w`, `w'`. The two quotients must be one-dimensional with
/// the algebra acting by the same character.
pub fn family_fiber(j: &LeftIdeal, j2: &LeftIdeal, point: &(CycScalar, CycScalar)) -> Result<LeftIdeal> {
    let alg = j.algebra();
    if j2.algebra() != alg {
        return Err(Error::SpecMismatch);
    }
    let (a, b) = point;
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPoint);
    }
    if alg.spec().f > 1 && alg.kind() != AlgebraKind::Unramified {
        if let (Ok(r1), Ok(r2)) = (block_reduce(j), block_reduce(j2)) {
            return block_lift(alg, &family_fiber(&r1, &r2, point)?);
        }
    }
    let field = alg.field();
    let meet = j.intersection(j2)?;
    let w = j.basis().quotient_reps(field, meet.basis());
    let w2 = j2.basis().quotient_reps(field, meet.basis());
    if w.len() != 1 || w2.len() != 1 {
        return Err(Error::NotCosimple);
    }
    if character(alg, meet.basis(), &w[0])? != character(alg, meet.basis(), &w2[0])? {
        return Err(Error::NotCosimple);
    }
    let v = linalg::add_vec(field, &linalg::scale_vec(field, a, &w[0]), &linalg::scale_vec(field, b, &w2[0]));
    let mut basis = meet.basis().clone();
    basis.insert(field, v);
    basis.canonicalize(field);
    Ok(LeftIdeal::from_raw(alg, basis))
}

#[derive(Clone, Debug)]
pub struct DivisibilityReport {
    pub exists: bool,
    /// Number of simple modules of the `f = 1` algebra.
    pub simple_count: usize,
    pub witness: Option<LeftIdeal>,
}

/// Rank of the trace form `(a, b) ↦ tr(L_ab)` on `A/𝔪A`, which in
/// characteristic zero is the dimension of the semisimple quotient.
fn semisimple_dimension(alg: &Algebra) -> usize {
    let field = alg.field();
    let k = alg.rank();
    let unit = |i: usize| vec![(i, field.one())];
    let reduce = |v: SparseVec| v.into_iter().filter(|(c, _)| *c < k).collect::<SparseVec>();
    let trace = |x: &SparseVec| {
        let mut t = field.zero();
        for i in 0..k {
            let col = reduce(alg.mul_vec(x, &unit(i)));
            if let Some((_, c)) = col.iter().find(|(j, _)| *j == i) {
                t = &t + c;
            }
        }
        t
    };
    let rows = (0..k).map(|i| {
        let v: SparseVec = (0..k)
            .filter_map(|j| {
                let t = trace(&reduce(alg.mul_vec(&unit(i), &unit(j))));
                (!t.is_zero()).then_some((j, t))
            })
            .collect();
        v
    });
    Subspace::from_vectors(field, k, rows).dim()
}

/// One step down a composition series: a left ideal `J' ⊂ J` with `J/J'`
/// the one-dimensional module of the given character, if such a quotient exists.
fn simple_step(alg: &Algebra, j: &LeftIdeal, chi: &[CycScalar]) -> Option<LeftIdeal> {
    let field = alg.field();
    let gens = closure_generators(alg);
    let mut seeds = Vec::new();
    for r in j.basis().rows() {
        for (g, lambda) in gens.iter().zip(chi) {
            let gr = alg.mul_vec(g.coords(), r);
            seeds.push(linalg::sub_vec(field, &gr, &linalg::scale_vec(field, lambda, r)));
        }
    }
    let floor = LeftIdeal::from_vectors(alg, seeds);
    let mut reps = j.basis().quotient_reps(field, floor.basis());
    if reps.is_empty() {
        return None;
    }
    reps.remove(0);
    let mut basis = floor.basis().clone();
    for r in reps {
        basis.insert(field, r);
    }
    basis.canonicalize(field);
    Some(LeftIdeal::from_raw(alg, basis))
}

/// Whether the algebra has a left ideal of colength `l`. Every simple module
/// has dimension `f`, so this holds exactly when `f | l`; in that case a
/// witness is built from a composition series of the `f = 1` algebra.
pub fn divisibility_probe(spec: &AlgebraSpec, l: usize, max_dim: usize) -> Result<DivisibilityReport> {
    let alg = Algebra::new(*spec)?;
    let base = base_algebra(&alg)?;
    let simples = find_codim_one_quotients(&base, max_dim)?;
    if semisimple_dimension(&base) != simples.len() {
        return Err(Error::UnsupportedSplitting);
    }
    let f = spec.f as usize;
    if !l.is_multiple_of(f) {
        return Ok(DivisibilityReport { exists: false, simple_count: simples.len(), witness: None });
    }
    let steps = l / f;
    if spec.n < steps + 1 {
        return Err(Error::PrecisionExhausted { budget: spec.n.saturating_sub(1), required: steps });
    }
    let field = base.field();
    let chars: Vec<Vec<CycScalar>> = simples
        .iter()
        .map(|s| {
            let w = s.algebra().one().into_coords();
            let reduced = s.basis().reduce(field, w);
            character(&base, s.basis(), &reduced)
        })
        .collect::<Result<_>>()?;
    let mut j = LeftIdeal::whole(&base);
    for _ in 0..steps {
        j = chars
            .iter()
            .find_map(|chi| simple_step(&base, &j, chi))
            .ok_or(Error::ChainInvariantViolated("no simple quotient".into()))?;
    }
    // {X : first column in J}, colength f * colength(J)
    let mut rows: Vec<SparseVec> = Vec::new();
    for p in 0..f {
        for r in j.basis().rows() {
            rows.push(
                r.iter()
                    .map(|(c, x)| {
                        let (mono, k) = base.split(*c);
                        let lab = base.label(k);
                        (alg.coord(mono, alg.basis_index(BasisLabel { p, q: 0, ..lab })), x.clone())
                    })
                    .collect(),
            );
        }
        for q in 1..f {
            for c in 0..base.dim() {
                let (mono, k) = base.split(c);
                let lab = base.label(k);
                rows.push(vec![(alg.coord(mono, alg.basis_index(BasisLabel { p, q, ..lab })), field.one())]);
            }
        }
    }
    let witness = LeftIdeal::from_subspace(&alg, Subspace::from_vectors(field, alg.dim(), rows))?;
    if witness.colength()? != l {
        return Err(Error::ChainInvariantViolated("witness has the wrong colength".into()));
    }
    Ok(DivisibilityReport { exists: true, simple_count: simples.len(), witness: Some(witness) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycField;
    use crate::power_series::SeriesRing;

    fn comm(gens: &[&str], n: usize) -> CommIdeal {
        let field = CycField::new(1);
        let ring = SeriesRing::new(n, field.clone());
        let g: Vec<_> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        CommIdeal::from_generators(&g, n, &field).unwrap()
    }

    fn chain_ideal(alg: &Algebra, entries: Vec<CommIdeal>) -> LeftIdeal {
        crate::submodules::chain_compose(&IdealChain::new(entries).unwrap(), alg).unwrap()
    }

    #[test]
    fn all_equal_branch() {
        let n = 5;
        let a = Algebra::new(AlgebraSpec::smooth_ram(2, 1, n)).unwrap();
        let m = comm(&["u", "v"], n);
        let j = chain_ideal(&a, vec![m.clone(), m.clone()]);
        let cert = deform_smooth_ram(&j).unwrap();
        assert_eq!(cert.branch, Branch::AllEqual);
        assert_eq!(cert.colength, 4);
        assert_eq!(cert.after.colength(), Ok(4));
        assert!(!cert.dual_containment_after);
        // first row (m^2 + v, R), second row (u m, m)
        let m2v = comm(&["u^2", "v"], n);
        let r = CommIdeal::unit(n, a.field());
        let expected = assemble_first_row(&a, &IdealChain::new(vec![m.clone(), m.clone()]).unwrap(), &[m2v, r]).unwrap();
        assert_eq!(cert.after, expected);
        assert_eq!(cert.family_samples.len(), 12);
        assert_eq!(cert.family_samples[0].fiber, j);
        assert_eq!(cert.family_samples[1].fiber, cert.after);
        let mid = &cert.family_samples[2].fiber;
        assert!(mid.is_left_ideal());
        assert_ne!(*mid, j);
        assert_ne!(*mid, cert.after);
        assert!(cert.family_samples.iter().all(|s| s.colength == 4));
    }

    #[test]
    fn step_branch_and_no_op() {
        let n = 4;
        let a = Algebra::new(AlgebraSpec::smooth_ram(2, 1, n)).unwrap();
        let r = CommIdeal::unit(n, a.field());
        let m = comm(&["u", "v"], n);
        let rad = chain_ideal(&a, vec![r.clone(), m.clone()]);
        let cert = deform_smooth_ram(&rad).unwrap();
        assert_eq!(cert.branch, Branch::Step(1));
        assert_eq!(cert.after.colength(), Ok(2));
        let expected = assemble_first_row(&a, &IdealChain::new(vec![r.clone(), m.clone()]).unwrap(), &[r, m]).unwrap();
        assert_eq!(cert.after, expected);

        let m1 = LeftIdeal::generated_by(&a, &a.maximal_ideal(1).unwrap()).unwrap();
        let noop = deform_smooth_ram(&m1).unwrap();
        assert_eq!(noop.branch, Branch::NoOp);
        assert_eq!(noop.after, m1);
    }

    #[test]
    fn unramified_examples() {
        let n = 5;
        let a = Algebra::new(AlgebraSpec::unramified(2, n)).unwrap();
        let field = a.field().clone();
        let m = comm(&["u", "v"], n);
        let cert = deform_unramified(&a, &RowModule::direct_sum(&[CommIdeal::unit(n, &field), m.clone()]).unwrap()).unwrap();
        assert_eq!(cert.after, morita_lift(&a, &RowModule::direct_sum(&[m.clone(), CommIdeal::unit(n, &field)]).unwrap()).unwrap());
        assert!(!cert.dual_containment_after);
        let m2 = CommIdeal::maximal_power(2, n, &field);
        let cert3 = deform_unramified(&a, &RowModule::direct_sum(&[m2.clone(), CommIdeal::unit(n, &field)]).unwrap()).unwrap();
        assert_eq!(cert3.after, morita_lift(&a, &RowModule::direct_sum(&[m2, CommIdeal::unit(n, &field)]).unwrap()).unwrap());
        let a3 = Algebra::new(AlgebraSpec::unramified(3, n)).unwrap();
        let r = CommIdeal::unit(n, &field);
        let cert = deform_unramified(&a3, &RowModule::direct_sum(&[r.clone(), m, r.clone()]).unwrap()).unwrap();
        assert_eq!(cert.colength, 3);
        let a1 = Algebra::new(AlgebraSpec::unramified(1, n)).unwrap();
        assert!(matches!(deform_unramified(&a1, &RowModule::direct_sum(std::slice::from_ref(&r)).unwrap()), Err(Error::RequiresFGreaterOne)));
        assert!(matches!(deform_unramified(&a, &RowModule::direct_sum(&[r.clone(), r]).unwrap()), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn family_rejects_bad_input() {
        let n = 4;
        let a = Algebra::new(AlgebraSpec::smooth_ram(2, 1, n)).unwrap();
        let m1 = LeftIdeal::generated_by(&a, &a.maximal_ideal(1).unwrap()).unwrap();
        let m2 = LeftIdeal::generated_by(&a, &a.maximal_ideal(2).unwrap()).unwrap();
        let zero = (a.field().zero(), a.field().zero());
        assert!(matches!(family_fiber(&m1, &m2, &zero), Err(Error::ZeroPoint)));
        let one = (a.field().one(), a.field().one());
        // B/m_1 and B/m_2 are different simple modules
        let rad = m1.intersection(&m2).unwrap();
        assert!(matches!(family_fiber(&m1, &m2, &one), Err(Error::NotCosimple)));
        assert!(family_fiber(&m1, &rad, &one).is_err());
    }

    #[test]
    fn divisibility() {
        let r = divisibility_probe(&AlgebraSpec::singular_ram(2, 2, 3), 1, 100_000).unwrap();
        assert!(!r.exists);
        let r = divisibility_probe(&AlgebraSpec::singular_ram(2, 1, 5), 3, 100_000).unwrap();
        assert!(r.exists);
        assert_eq!(r.witness.unwrap().colength(), Ok(3));
        let r = divisibility_probe(&AlgebraSpec::smooth_ram(2, 2, 3), 2, 100_000).unwrap();
        assert_eq!(r.simple_count, 2);
        assert_eq!(r.witness.unwrap().colength(), Ok(2));
    }
}
