//! Built-in invariant suites at fixed seeds.
//!
//! The report holds no timings so that it is reproducible and can itself be
//! certified.

use ordeform_core::deformations::{deform_smooth_ram, divisibility_probe, family_fiber, Branch};
use ordeform_core::pool::{chain_catalog, deformation_pool, left_ideal_pool};
use ordeform_core::submodules::{chain_compose, chain_decompose, check_dual_containment, find_codim_one_quotients};
use ordeform_core::{Algebra, AlgebraSpec, CommIdeal, CycField, IdealChain, LeftIdeal, Subspace};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

type Suite = Result<String, String>;

const MAX_DIM: usize = 1_000_000;

fn conjugation(es: &[u32], n: usize) -> Suite {
    let mut count = 0;
    for &e in es {
        let alg = Algebra::new(AlgebraSpec::smooth_ram(e, 1, n)).map_err(|x| x.to_string())?;
        let c = alg.dual_shift_element().map_err(|x| x.to_string())?;
        let image = |i: &LeftIdeal, left: bool| -> Subspace {
            i.basis().image(alg.field(), alg.dim(), |r| if left { alg.mul_vec(c.coords(), r) } else { alg.mul_vec(r, c.coords()) })
        };
        for i in 1..=e as usize {
            let prev = if i == 1 { e as usize } else { i - 1 };
            let mi = LeftIdeal::generated_by(&alg, &alg.maximal_ideal(i).unwrap()).map_err(|x| x.to_string())?;
            let mp = LeftIdeal::generated_by(&alg, &alg.maximal_ideal(prev).unwrap()).map_err(|x| x.to_string())?;
            if image(&mi, true) != image(&mp, false) {
                return Err(format!("e={e}: c*m_{i} != m_{prev}*c"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} relations hold at N={n}"))
}

fn examples() -> Suite {
    let field = CycField::new(1);
    let alg = Algebra::new(AlgebraSpec::smooth_ram(2, 1, 4)).unwrap();
    let mut gens = alg.maximal_ideal(1).unwrap();
    gens.push(alg.parse("v").unwrap());
    let m1 = LeftIdeal::generated_by(&alg, &gens).map_err(|e| e.to_string())?;
    if m1.colength() != Ok(1) {
        return Err("the first maximal ideal does not have colength 1".into());
    }
    let alg5 = Algebra::new(AlgebraSpec::smooth_ram(2, 1, 5)).unwrap();
    let m = CommIdeal::maximal(5, &field);
    let j = chain_compose(&IdealChain::new(vec![m.clone(), m]).unwrap(), &alg5).map_err(|e| e.to_string())?;
    let cert = deform_smooth_ram(&j).map_err(|e| e.to_string())?;
    if cert.colength != 4 || cert.dual_containment_after || cert.branch != Branch::AllEqual {
        return Err("deforming the chain (m, m) gave an unexpected certificate".into());
    }
    let mid = family_fiber(&cert.before, &cert.after, &(field.one(), field.one())).map_err(|e| e.to_string())?;
    if mid.colength() != Ok(4) || mid == cert.before || mid == cert.after {
        return Err("the fiber over [1:1] is not a new ideal of colength 4".into());
    }
    Ok("maximal ideal, (m, m) deformation and its midpoint fiber".into())
}

fn dual_containment_implies_two_sided(seed: u64, count: usize) -> Suite {
    let mut specs = vec![AlgebraSpec::unramified(1, 5), AlgebraSpec::unramified(2, 4)];
    for e in [2, 3] {
        for f in [1, 2] {
            specs.push(AlgebraSpec::smooth_ram(e, f, 4));
        }
    }
    let mut checked = 0;
    let mut holding = 0;
    for spec in specs {
        let alg = Algebra::new(spec).unwrap();
        for ideal in left_ideal_pool(&alg, seed, count) {
            let holds = check_dual_containment(&ideal).map_err(|e| format!("{spec}: {e}"))?;
            if holds {
                holding += 1;
                if !ideal.is_two_sided().map_err(|e| e.to_string())? {
                    return Err(format!("{spec}: dual containment holds for an ideal that is not two-sided"));
                }
                if spec.e > 1 {
                    let chain = chain_decompose(&ideal).map_err(|e| format!("{spec}: {e}"))?;
                    if chain_compose(&chain, &alg).as_ref() != Ok(&ideal) {
                        return Err(format!("{spec}: chain round trip failed"));
                    }
                    let scale = (spec.e * spec.f * spec.f) as usize;
                    if ideal.colength() != Ok(scale * chain.total_colength().unwrap()) {
                        return Err(format!("{spec}: colength formula failed"));
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} pooled ideals, {holding} with dual containment, all two-sided"))
}

fn chains(max_colength: usize) -> Suite {
    let field = CycField::new(1);
    let mut count = 0;
    for e in [2usize, 3] {
        let alg = Algebra::new(AlgebraSpec::smooth_ram(e as u32, 1, 6)).unwrap();
        for chain in chain_catalog(e, 6, &field, max_colength) {
            let ideal = chain_compose(&chain, &alg).map_err(|x| x.to_string())?;
            if ideal.colength() != Ok(e * chain.total_colength().unwrap()) {
                return Err(format!("e={e}: colength formula failed"));
            }
            if ideal.precision_budget().is_some_and(|b| b >= 1) && chain_decompose(&ideal).as_ref() != Ok(&chain) {
                return Err(format!("e={e}: decompose(compose(chain)) differs"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} catalog chains round-trip"))
}

fn deformations(max_colength: usize) -> Suite {
    let (mut all_equal, mut step, mut fibers) = (0, 0, 0);
    let pool = deformation_pool(max_colength);
    for j in &pool {
        let cert = deform_smooth_ram(j).map_err(|e| format!("{}: {e}", j.spec()))?;
        if cert.after.colength() != j.colength() || cert.dual_containment_after || !cert.after.is_left_ideal() {
            return Err(format!("{}: deformation checks failed", j.spec()));
        }
        match cert.branch {
            Branch::AllEqual => all_equal += 1,
            Branch::Step(_) => step += 1,
            b => return Err(format!("{}: unexpected branch {b:?}", j.spec())),
        }
        for s in &cert.family_samples {
            let fiber = family_fiber(&cert.before, &cert.after, &s.point).map_err(|e| e.to_string())?;
            if fiber != s.fiber || fiber.colength() != Ok(cert.colength) {
                return Err(format!("{}: fiber mismatch", j.spec()));
            }
            fibers += 1;
        }
        if cert.family_samples[0].fiber != cert.before || cert.family_samples[1].fiber != cert.after {
            return Err(format!("{}: family endpoints are wrong", j.spec()));
        }
    }
    Ok(format!("{} deformations ({all_equal} all-equal, {step} step), {fibers} fibers", pool.len()))
}

fn divisibility(es: &[u32]) -> Suite {
    use ordeform_core::AlgebraKind::*;
    let mut count = 0;
    for kind in [Unramified, SmoothRam, SingularRam] {
        for &e in es {
            if kind == Unramified && e != 1 {
                continue;
            }
            for f in [1u32, 2] {
                for l in 1..=2 * f as usize {
                    let spec = AlgebraSpec::of_kind(kind, e, f, l / f as usize + 2);
                    let r = divisibility_probe(&spec, l, MAX_DIM).map_err(|x| format!("{spec} l={l}: {x}"))?;
                    if r.exists != (l % f as usize == 0) || r.witness.as_ref().is_some_and(|w| w.colength() != Ok(l)) {
                        return Err(format!("{spec} l={l}: probe disagrees with f | l"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} probes agree with f | l"))
}

fn simple_counts() -> Suite {
    let mut count = 0;
    for e in [1u32, 2, 3] {
        for (spec, want) in [
            (AlgebraSpec::smooth_ram(e, 1, 3), e as usize),
            (AlgebraSpec::singular_ram(e, 1, 3), 1),
            (AlgebraSpec::smooth_ram(e, 2, 3), 0),
        ] {
            let alg = Algebra::new(spec).unwrap();
            let found = find_codim_one_quotients(&alg, MAX_DIM).map_err(|x| format!("{spec}: {x}"))?;
            if found.len() != want {
                return Err(format!("{spec}: {} simple quotients, expected {want}", found.len()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} algebras have the expected number of simple quotients"))
}

pub fn run(level: Level, seed: u64) -> Value {
    let mut suites: Vec<(&str, Suite)> = Vec::new();
    match level {
        Level::Quick => {
            suites.push(("conjugation", conjugation(&[2, 3], 5)));
            suites.push(("examples", examples()));
            suites.push(("two-sided", dual_containment_implies_two_sided(seed, 15)));
            suites.push(("chains", chains(6)));
            suites.push(("divisibility", divisibility(&[1, 2])));
            suites.push(("simple-quotients", simple_counts()));
        }
        Level::Full => {
            suites.push(("conjugation", conjugation(&[2, 3, 4], 5)));
            suites.push(("examples", examples()));
            suites.push(("two-sided", dual_containment_implies_two_sided(seed, 200)));
            suites.push(("chains", chains(12)));
            suites.push(("deformations", deformations(8)));
            suites.push(("divisibility", divisibility(&[1, 2, 3])));
            suites.push(("simple-quotients", simple_counts()));
        }
    }
    let passed = suites.iter().all(|(_, r)| r.is_ok());
    let suites: Vec<Value> = suites
        .into_iter()
        .map(|(name, r)| {
            let (ok, detail) = match r {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            json!({"detail": detail, "name": name, "passed": ok})
        })
        .collect();
    json!({
        "level": match level { Level::Quick => "quick", Level::Full => "full" },
        "passed": passed,
        "seed": seed,
        "suites": suites,
    })
}
