//! Acceptance checks. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line.

use std::collections::BTreeSet;
use std::process::ExitCode;

use tope_cycles::arrangements::{moment_curve, rank2_fan, TopeSet};
use tope_cycles::complexes::{delta_faces, lambda_facets, long_f_vector, LongFVector};
use tope_cycles::cycles::{canonical_hypercube_cycle, find_symmetric_cycle, SymmetricCycle};
use tope_cycles::decomposition::{brute_force_decompose, decompose};
use tope_cycles::dehn_sommerville::{binomial, check_alternating_sum, check_ds, check_recurrence, special_cases};
use tope_cycles::oracles::{census, check_halfplane_condition, expected_hypercube_histogram, nu_counts};
use tope_cycles::sign::{sum_topes, SignVector};

type Check = Result<(), String>;
type Criterion<'a> = (&'a str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set<T: Ord + Clone>(items: &[T]) -> BTreeSet<T> {
    items.iter().cloned().collect()
}

struct Instance {
    name: String,
    topes: TopeSet,
    cycle: SymmetricCycle,
}

fn found_cycles(name: &str, topes: &TopeSet, seeds: u64) -> Vec<Instance> {
    let starts = [topes.topes()[0], topes.topes()[topes.len() / 3]];
    let mut out = Vec::new();
    for start in starts {
        for seed in 0..seeds {
            let cycle = find_symmetric_cycle(topes, Some(start), seed)
                .expect("closed tope set")
                .unwrap_or_else(|| panic!("{name}: no symmetric cycle from {start}"));
            out.push(Instance { name: format!("{name} start {start} seed {seed}"), topes: topes.clone(), cycle });
        }
    }
    out
}

/// Hypercubes of side 5..8 and moment-curve arrangements in rank 3, each
/// with several symmetric cycles.
fn instance_set() -> Vec<Instance> {
    let mut out = Vec::new();
    for t in 5..=8 {
        let cube = TopeSet::hypercube(t).unwrap();
        out.push(Instance {
            name: format!("hypercube({t}) canonical"),
            topes: cube.clone(),
            cycle: canonical_hypercube_cycle(t).unwrap(),
        });
        out.extend(found_cycles(&format!("hypercube({t})"), &cube, 2));
        let mc = moment_curve(t, 3).unwrap().enumerate_topes().unwrap();
        out.extend(found_cycles(&format!("moment_curve({t},3)"), &mc, 3));
    }
    out
}

fn lambda_f(tope: &SignVector, cycle: &SymmetricCycle) -> Result<LongFVector, String> {
    lambda_facets(tope, cycle).and_then(|l| l.f_vector()).map_err(|e| format!("{tope}: {e}"))
}

fn hypercube_census() -> Check {
    for t in 2..=8 {
        let c = census(&TopeSet::hypercube(t).unwrap(), &canonical_hypercube_cycle(t).unwrap(), 1, false)
            .map_err(|e| e.to_string())?;
        let expected = expected_hypercube_histogram(t);
        ensure(c.histogram == expected, || format!("t={t}: {:?} != {expected:?}", c.histogram))?;
    }
    Ok(())
}

fn sized_topes(t: usize, sizes: &[usize]) -> Result<Vec<(SignVector, SymmetricCycle)>, String> {
    let cycle = canonical_hypercube_cycle(t).unwrap();
    let mut out = Vec::new();
    for tope in TopeSet::hypercube(t).unwrap().iter() {
        let d = decompose(tope, &cycle).map_err(|e| e.to_string())?;
        if sizes.contains(&d.len()) {
            out.push((*tope, cycle.clone()));
        }
    }
    Ok(out)
}

fn t5_bullet() -> Check {
    let topes = sized_topes(5, &[5])?;
    ensure(topes.len() == 2, || format!("{} topes with |Q| = 5", topes.len()))?;
    ensure(topes.iter().any(|(t, _)| t.to_string() == "+-+-+"), || "+-+-+ missing".into())?;
    for (tope, cycle) in &topes {
        let f = lambda_f(tope, cycle)?;
        ensure(f.f == [1, 5, 10, 5, 0, 0], || format!("{tope}: {:?}", f.f))?;
    }
    Ok(())
}

fn t6_bullet() -> Check {
    let topes = sized_topes(6, &[5])?;
    ensure(topes.len() == 12, || format!("{} topes with |Q| = 5", topes.len()))?;
    for (tope, cycle) in &topes {
        let f = lambda_f(tope, cycle)?;
        ensure(f.get(3) == 12 && f.get(4) == 3, || format!("{tope}: {:?}", f.f))?;
    }
    Ok(())
}

fn t7_bullet() -> Check {
    let topes = sized_topes(7, &[5, 7])?;
    ensure(topes.len() == 2 * (binomial(7, 5) + binomial(7, 7)) as usize, || format!("{} topes", topes.len()))?;
    for (tope, cycle) in &topes {
        let f = lambda_f(tope, cycle)?;
        let v = |j| f.get(j) as i64;
        ensure(v(4) == 2 * v(3) - 35 && v(5) == v(3) - 21 && v(4) == 2 * v(5) + 7 && v(4) % 2 == 1, || {
            format!("{tope}: {:?}", f.f)
        })?;
        ensure(special_cases(&f).iter().all(|n| n.holds), || format!("{tope}: special-case notes"))?;
    }
    Ok(())
}

fn full_ds(instances: &[Instance]) -> Check {
    let mut checked = 0;
    for inst in instances {
        for tope in inst.topes.iter() {
            let d = decompose(tope, &inst.cycle).map_err(|e| format!("{}: {e}", inst.name))?;
            if d.len() < 5 {
                continue;
            }
            let f = lambda_f(tope, &inst.cycle)?;
            let report = check_ds(&f);
            ensure(report.passed && report.residual_is_zero(), || format!("{} {tope}: {report:?}", inst.name))?;
            ensure(check_recurrence(&f).iter().all(|r| r.holds), || format!("{} {tope}: recurrence", inst.name))?;
            ensure(check_alternating_sum(&f) == 0, || format!("{} {tope}: alternating sum", inst.name))?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no tope with |Q| >= 5".into())
}

fn lambda_equals_delta(instances: &[Instance]) -> Check {
    for inst in instances {
        for tope in inst.topes.iter() {
            let lambda = lambda_facets(tope, &inst.cycle).and_then(|l| l.faces()).map_err(|e| e.to_string())?;
            let delta = delta_faces(tope, &inst.cycle).map_err(|e| e.to_string())?;
            ensure(lambda == delta, || format!("{} {tope}: complexes differ", inst.name))?;
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut cases: Vec<Instance> = Vec::new();
    for t in 2..=7 {
        let cube = TopeSet::hypercube(t).unwrap();
        cases.push(Instance {
            name: format!("hypercube({t})"),
            topes: cube.clone(),
            cycle: canonical_hypercube_cycle(t).unwrap(),
        });
        if t >= 3 {
            cases.extend(found_cycles(&format!("hypercube({t})"), &cube, 1));
        }
        let fan = rank2_fan(t).unwrap().enumerate_topes().unwrap();
        cases.extend(found_cycles(&format!("rank2_fan({t})"), &fan, 1));
        if t >= 3 {
            let mc = moment_curve(t, 3).unwrap().enumerate_topes().unwrap();
            cases.extend(found_cycles(&format!("moment_curve({t},3)"), &mc, 1));
        }
        if t >= 4 {
            let mc = moment_curve(t, 4).unwrap().enumerate_topes().unwrap();
            cases.extend(found_cycles(&format!("moment_curve({t},4)"), &mc, 1));
        }
    }
    for inst in &cases {
        for tope in inst.topes.iter() {
            let d = decompose(tope, &inst.cycle).map_err(|e| format!("{} {tope}: {e}", inst.name))?;
            let sols = brute_force_decompose(tope, &inst.cycle, 7).map_err(|e| e.to_string())?;
            let minimal: Vec<_> = sols.iter().filter(|s| s.minimal).collect();
            ensure(minimal.len() == 1, || format!("{} {tope}: {} minimal subsets", inst.name, minimal.len()))?;
            ensure(set(&minimal[0].members) == set(&d.members), || format!("{} {tope}: oracle disagrees", inst.name))?;
            let sum = sum_topes(d.members.iter()).map_err(|e| e.to_string())?;
            ensure(sum.as_tope() == Some(*tope), || format!("{} {tope}: sum {:?}", inst.name, sum.0))?;
            ensure(d.len() % 2 == 1, || format!("{} {tope}: even size", inst.name))?;
        }
    }
    Ok(())
}

fn maxpos_identity() -> Check {
    let mut cases: Vec<Instance> = Vec::new();
    for t in 2..=9 {
        let fan = rank2_fan(t).unwrap().enumerate_topes().unwrap();
        cases.extend(found_cycles(&format!("rank2_fan({t})"), &fan, 2));
    }
    let mut avoiding = 0;
    for t in 3..=8 {
        let plus = SignVector::all_plus(t);
        let cube = TopeSet::hypercube(t).unwrap();
        let mc = moment_curve(t, 3).unwrap().enumerate_topes().unwrap();
        for (name, topes) in [(format!("hypercube({t})"), cube), (format!("moment_curve({t},3)"), mc)] {
            for inst in found_cycles(&name, &topes, 4) {
                if !inst.cycle.contains(&plus) {
                    avoiding += 1;
                    cases.push(inst);
                }
            }
        }
    }
    ensure(avoiding > 0, || "no cycle avoids the positive tope".into())?;
    for inst in &cases {
        let plus = SignVector::all_plus(inst.cycle.t());
        let d = decompose(&plus, &inst.cycle).map_err(|e| format!("{}: {e}", inst.name))?;
        let maxpos = inst.cycle.maxpos_vertices();
        ensure(set(&d.members) == set(&maxpos), || format!("{}: {:?} vs {maxpos:?}", inst.name, d.members))?;
    }
    Ok(())
}

fn geometry_cross_check(instances: &[Instance]) -> Check {
    let mut compared = 0;
    for inst in instances {
        let realization = inst.cycle.rank2_realization();
        for tope in inst.topes.iter() {
            let d = decompose(tope, &inst.cycle).map_err(|e| e.to_string())?;
            let vectors = realization.reoriented(tope).map_err(|e| e.to_string())?;
            let condition = check_halfplane_condition(vectors.normals()).map_err(|e| e.to_string())?;
            if d.len() >= 5 {
                ensure(condition.holds, || format!("{} {tope}: half-plane condition fails", inst.name))?;
            }
            if !condition.holds {
                continue;
            }
            let t = inst.cycle.t();
            let nu = nu_counts(vectors.normals()).map_err(|e| format!("{} {tope}: {e}", inst.name))?;
            let f = long_f_vector(&delta_faces(tope, &inst.cycle).map_err(|e| e.to_string())?, t);
            ensure(nu == f.f, || format!("{} {tope}: nu {nu:?} vs f {:?}", inst.name, f.f))?;
            let low = [1, t as u64, binomial(t, 2) as u64];
            ensure(nu[..3] == low && nu[t - 1] == 0 && nu[t] == 0, || format!("{} {tope}: nu {nu:?}", inst.name))?;
            compared += 1;
        }
    }
    ensure(compared > 0, || "no realization satisfied the half-plane condition".into())
}

fn negative_controls(instances: &[Instance]) -> Check {
    let mut passing: Vec<LongFVector> = Vec::new();
    for t in 5..=8 {
        let inst = instances.iter().find(|i| i.cycle.t() == t).unwrap();
        let tope = inst
            .topes
            .iter()
            .find(|tope| decompose(tope, &inst.cycle).map(|d| d.len() >= 5).unwrap_or(false))
            .ok_or_else(|| format!("t={t}: no tope with |Q| >= 5"))?;
        let f = lambda_f(tope, &inst.cycle)?;
        ensure(check_ds(&f).passed, || format!("t={t}: baseline fails"))?;
        passing.push(f);
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("f.json");
    let verify = |f: &LongFVector| -> Result<i32, String> {
        std::fs::write(&path, serde_json::to_string(f).unwrap()).map_err(|e| e.to_string())?;
        let (mut out, mut err) = (Vec::new(), Vec::new());
        Ok(tope_cycles::cli::run(["tope-cycles", "verify-ds", "--fvector", path.to_str().unwrap()], &mut out, &mut err))
    };
    for base in &passing {
        ensure(verify(base)? == 0, || format!("t={}: baseline exit code", base.t))?;
        for j in 0..=base.t {
            for delta in [1i64, -1] {
                let Some(v) = base.f[j].checked_add_signed(delta) else { continue };
                let mut f = base.clone();
                f.f[j] = v;
                let detected = !check_ds(&f).passed || check_alternating_sum(&f) != 0;
                ensure(detected, || format!("t={} f_{j}{delta:+} undetected", base.t))?;
                let code = verify(&f)?;
                ensure(code == 3, || format!("t={} f_{j}{delta:+}: exit code {code}", base.t))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let instances = instance_set();
    let criteria: Vec<Criterion> = vec![
        ("hypercube census", Box::new(hypercube_census)),
        ("t=5 f-vector", Box::new(t5_bullet)),
        ("t=6 f-vector", Box::new(t6_bullet)),
        ("t=7 relations", Box::new(t7_bullet)),
        ("full relation system", Box::new(|| full_ds(&instances))),
        ("lambda equals delta", Box::new(|| lambda_equals_delta(&instances))),
        ("decomposition oracle", Box::new(oracle_equivalence)),
        ("maxpos identity", Box::new(maxpos_identity)),
        ("geometry cross-check", Box::new(|| geometry_cross_check(&instances))),
        ("negative controls", Box::new(|| negative_controls(&instances))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} {name}: PASS", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({msg})", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
