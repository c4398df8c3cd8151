use proptest::prelude::*;

use ordeform_core::orders::{Algebra, AlgebraElement, AlgebraSpec};
use ordeform_core::power_series::{nakayama_corank1_pick, socle_and_cosocle_picks, socle_pick};
use ordeform_core::pool::comm_catalog;
use ordeform_core::submodules::{morita_lift, LeftIdeal, RowModule};
use ordeform_core::{CommIdeal, CycField, CycScalar, TruncSeries};

fn scalar_in(order: u32) -> impl Strategy<Value = CycScalar> {
    let field = CycField::new(order);
    prop::collection::vec((-4i64..=4, 1i64..=3), field.degree()).prop_map(move |cs| {
        let mut s = field.zero();
        for (k, (n, d)) in cs.into_iter().enumerate() {
            let q = ordeform_core::cyclotomic::rat_frac(n, d);
            s = &s + &field.mul(&field.from_rational(q), &field.zeta_pow(k as u64));
        }
        s
    })
}

fn triple(order: u32) -> impl Strategy<Value = (CycScalar, CycScalar, CycScalar)> {
    (scalar_in(order), scalar_in(order), scalar_in(order))
}

fn series(n: usize) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec((0usize..n, 0usize..n, -3i64..=3), 0..6).prop_map(move |terms| {
        let field = CycField::new(1);
        let mut s = TruncSeries::zero(n, &field);
        for (i, j, c) in terms {
            if i + j < n {
                s = s.add(&TruncSeries::monomial(n, i, j, field.from_int(c))).unwrap();
            }
        }
        s
    })
}

fn spec_strategy() -> impl Strategy<Value = AlgebraSpec> {
    prop_oneof![
        (1u32..=2).prop_map(|f| AlgebraSpec::unramified(f, 3)),
        (2u32..=3).prop_map(|e| AlgebraSpec::smooth_ram(e, 1, 3)),
        Just(AlgebraSpec::smooth_ram(2, 2, 3)),
        (2u32..=3).prop_map(|e| AlgebraSpec::singular_ram(e, 1, 3)),
        Just(AlgebraSpec::mixed(4, 2, 1, 3)),
    ]
}

/// A random element of `alg` with small integer coefficients.
fn element(alg: &Algebra, picks: &[(usize, i64)]) -> AlgebraElement {
    let field = alg.field();
    let mut x = alg.zero();
    for &(k, c) in picks {
        let coord = k % alg.dim();
        let mut v = alg.zero().into_coords();
        v.push((coord, field.from_int(c)));
        x = x.add(&alg.element(v)).unwrap();
    }
    x
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..100_000, -2i64..=2), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((order, (a, b, c)) in prop::sample::select(vec![1u32, 2, 4, 5, 6]).prop_flat_map(|o| (Just(o), triple(o)))) {
        let field = CycField::new(order);
        prop_assert_eq!(field.mul(&a, &field.mul(&b, &c)), field.mul(&field.mul(&a, &b), &c));
        prop_assert_eq!(field.mul(&a, &(&b + &c)), &field.mul(&a, &b) + &field.mul(&a, &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!(field.mul(&a, &field.inv(&a).unwrap()).is_one());
        }
    }

    #[test]
    fn field_ops_random(a in scalar_in(3), b in scalar_in(3), c in scalar_in(3)) {
        let field = CycField::new(3);
        prop_assert_eq!(field.mul(&a, &b), field.mul(&b, &a));
        prop_assert_eq!(field.mul(&a, &field.mul(&b, &c)), field.mul(&field.mul(&a, &b), &c));
        prop_assert_eq!(field.mul(&a, &(&b + &c)), &field.mul(&a, &b) + &field.mul(&a, &c));
        if !b.is_zero() {
            prop_assert_eq!(field.mul(&field.div(&a, &b).unwrap(), &b), a);
        }
    }

    #[test]
    fn zeta_is_primitive(order in 1u32..=8) {
        let field = CycField::new(order);
        let z = field.zeta();
        prop_assert!(field.pow(&z, order as u64).is_one());
        for k in 1..order {
            prop_assert!(!field.pow(&z, k as u64).is_one());
        }
        // roots of unity sum to zero for order > 1
        let mut s = field.zero();
        for k in 0..order {
            s = &s + &field.zeta_pow(k as u64);
        }
        prop_assert_eq!(s.is_zero(), order > 1);
    }

    #[test]
    fn series_ring_laws(a in series(5), b in series(5), c in series(5)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.mul(&c).unwrap()).unwrap(), a.mul(&b).unwrap().mul(&c).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn series_truncation_commutes(a in series(6), b in series(6)) {
        let lhs = a.mul(&b).unwrap().with_trunc(4);
        let rhs = a.with_trunc(4).mul(&b.with_trunc(4)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn algebra_is_associative(spec in spec_strategy(), a in picks(), b in picks(), c in picks()) {
        let alg = Algebra::new(spec).unwrap();
        let (a, b, c) = (element(&alg, &a), element(&alg, &b), element(&alg, &c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(alg.one().mul(&a).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&alg.one()).unwrap(), a);
    }

    #[test]
    fn u_and_v_are_central(spec in spec_strategy(), a in picks()) {
        let alg = Algebra::new(spec).unwrap();
        let a = element(&alg, &a);
        for z in [alg.u(), alg.v()] {
            prop_assert_eq!(z.mul(&a).unwrap(), a.mul(&z).unwrap());
        }
    }

    #[test]
    fn generators_obey_relations(spec in spec_strategy()) {
        let alg = Algebra::new(spec).unwrap();
        let ep = spec.e_prime;
        prop_assert_eq!(alg.x().pow(ep), alg.u());
        prop_assert_eq!(alg.y().pow(ep), alg.v());
        let zeta = alg.scalar(&alg.field().zeta());
        let yx = alg.y().mul(&alg.x()).unwrap();
        let zxy = zeta.mul(&alg.x().mul(&alg.y()).unwrap()).unwrap();
        prop_assert_eq!(yx, zxy);
    }

    #[test]
    fn entries_round_trip(spec in spec_strategy(), a in picks()) {
        let alg = Algebra::new(spec).unwrap();
        let a = element(&alg, &a);
        prop_assert_eq!(alg.from_entries(&a.entries()).unwrap(), a);
    }

    #[test]
    fn closure_is_a_fixpoint(spec in spec_strategy(), a in picks(), d in 1usize..=2) {
        let alg = Algebra::new(spec.with_trunc(4)).unwrap();
        let mut gens = vec![element(&alg, &a)];
        for i in 0..=d {
            gens.push(alg.scalar_series(&TruncSeries::monomial(4, i, d - i, alg.field().one())).unwrap());
        }
        let ideal = LeftIdeal::generated_by(&alg, &gens).unwrap();
        prop_assert!(ideal.is_left_ideal());
        let again = LeftIdeal::generated_by(&alg, &ideal.basis_elements()).unwrap();
        prop_assert_eq!(&again, &ideal);
        for g in &gens {
            prop_assert!(ideal.contains(g));
        }
        // pattern: every element of the ideal is a valid matrix of the order
        for b in ideal.basis_elements().iter().take(8) {
            prop_assert_eq!(alg.from_entries(&b.entries()).unwrap(), b.clone());
        }
    }

    #[test]
    fn two_sided_closure_is_two_sided(spec in spec_strategy(), a in picks()) {
        let alg = Algebra::new(spec.with_trunc(4)).unwrap();
        let mut seeds = vec![element(&alg, &a).into_coords()];
        seeds.push(alg.scalar_series(&TruncSeries::monomial(4, 2, 0, alg.field().one())).unwrap().into_coords());
        seeds.push(alg.scalar_series(&TruncSeries::monomial(4, 0, 2, alg.field().one())).unwrap().into_coords());
        let ideal = LeftIdeal::two_sided_from_vectors(&alg, seeds);
        prop_assert!(ideal.is_two_sided().unwrap());
    }
}

fn catalog_ideal() -> impl Strategy<Value = CommIdeal> {
    let cat = comm_catalog(7, &CycField::new(1), 4);
    prop::sample::select(cat)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn maximal_power_colength(k in 0usize..=5) {
        let j = CommIdeal::maximal_power(k, k + 2, &CycField::new(1));
        prop_assert_eq!(j.colength().unwrap(), k * (k + 1) / 2);
    }

    #[test]
    fn picks_move_colength_by_one(j in catalog_ideal()) {
        let c = j.colength().unwrap();
        if !j.is_unit() {
            let up = socle_pick(&j).unwrap();
            prop_assert!(j.is_subideal_of(&up));
            prop_assert_eq!(up.colength().unwrap() + 1, c);
        }
        let down = nakayama_corank1_pick(&j).unwrap();
        prop_assert!(down.is_subideal_of(&j));
        prop_assert!(j.times_maximal().is_subideal_of(&down));
        prop_assert_eq!(down.colength().unwrap(), c + 1);
    }

    #[test]
    fn socle_and_cosocle_bracket(a in catalog_ideal(), b in catalog_ideal()) {
        let (inner, outer) = if a.is_subideal_of(&b) { (a, b) } else if b.is_subideal_of(&a) { (b, a) } else { return Ok(()) };
        if inner == outer {
            prop_assert!(socle_and_cosocle_picks(&inner, &outer).is_err());
            return Ok(());
        }
        let (small, large) = socle_and_cosocle_picks(&inner, &outer).unwrap();
        let (ci, co) = (inner.colength().unwrap(), outer.colength().unwrap());
        prop_assert!(inner.is_subideal_of(&small) && small.is_subideal_of(&outer));
        prop_assert!(inner.is_subideal_of(&large) && large.is_subideal_of(&outer));
        prop_assert_eq!(small.colength().unwrap(), co + 1);
        prop_assert_eq!(large.colength().unwrap() + 1, ci);
    }

    #[test]
    fn ideal_lattice_colengths(a in catalog_ideal(), b in catalog_ideal()) {
        // colength(a) + colength(b) = colength(a + b) + colength(a ∩ b)
        let s = a.sum(&b).colength().unwrap();
        let i = a.intersection(&b).colength().unwrap();
        prop_assert_eq!(a.colength().unwrap() + b.colength().unwrap(), s + i);
    }

    #[test]
    fn truncation_is_stable(j in catalog_ideal()) {
        let up = j.with_trunc(8).unwrap();
        prop_assert_eq!(up.colength().unwrap(), j.colength().unwrap());
        prop_assert_eq!(up.with_trunc(7).unwrap(), j);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn morita_colength(js in prop::collection::vec(catalog_ideal(), 2)) {
        let js: Vec<CommIdeal> = js.into_iter().map(|j| j.with_trunc(5).unwrap()).filter(|j| j.precision_budget().is_some()).collect();
        prop_assume!(js.len() == 2);
        let alg = Algebra::new(AlgebraSpec::unramified(2, 5)).unwrap();
        let m = RowModule::direct_sum(&js).unwrap();
        let ideal = morita_lift(&alg, &m).unwrap();
        prop_assert!(ideal.is_left_ideal());
        prop_assert_eq!(ideal.colength().unwrap(), 2 * m.colength().unwrap());
        prop_assert_eq!(ordeform_core::submodules::morita_drop(&ideal).unwrap(), m);
    }
}
