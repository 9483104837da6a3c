//! Acceptance run: one PASS/FAIL line per criterion, then a nonzero exit if
//! any criterion failed. Set `PENTAGON_ACCEPT_N8=1` to include order 8 in
//! the finite-shadow scan.

use num_bigint::BigInt;
use pentagon_core::certificate::{
    class_infos, mapping, tight_set_characterization, verify_k3, verify_main, K3_REMOVED, TIGHT_INDICES,
};
use pentagon_core::counts::{
    claim_3_10_expansion, claim_4_5_check, claim_4_7_check, compositions, move_gain_exhaustive,
    multipartite_c5_count, prop_3_1,
};
use pentagon_core::flags::checks::{chain_identity, pair_defect_decay};
use pentagon_core::graph::{canonical_form, count_c5, enumerate_graphs, Graph, PartSizes};
use pentagon_core::oracle::{max_c5, verify_density_bound};
use pentagon_core::report::CertificateReport;
use pentagon_core::Exec;
use std::time::{Duration, Instant};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn failing(r: &CertificateReport, ids: &[&str]) -> Vec<String> {
    ids.iter()
        .filter(|id| !r.claim(id).is_some_and(|c| c.passed()))
        .map(|id| {
            let w = r
                .claim(id)
                .map(|c| c.witnesses.iter().map(|w| format!("{} = {}", w.label, w.value)).collect::<Vec<_>>().join("; "))
                .unwrap_or_else(|| "missing".into());
            format!("{id} [{w}]")
        })
        .collect()
}

fn enumeration() -> Outcome {
    let g = enumerate_graphs(5).unwrap();
    let mut c5: Vec<u64> = g.iter().map(count_c5).filter(|&c| c > 0).collect();
    c5.sort_unstable();
    outcome(g.len() == 34 && c5 == [1, 1, 1, 2, 2, 4, 6, 12], format!("{} classes, nonzero pentagon counts {c5:?}", g.len()))
}

fn mapping_reconstruction() -> Outcome {
    let r = mapping().unwrap();
    let m = r.primary();
    let k5 = m.classes[33] == canonical_form(&Graph::complete(5)).unwrap().key();
    let tight = TIGHT_INDICES.iter().all(|&i| m.info(i).multipartite)
        && class_infos().iter().filter(|c| c.multipartite).count() == TIGHT_INDICES.len();
    let k4 = K3_REMOVED.iter().all(|&i| m.info(i).has_k4) && class_infos().iter().filter(|c| c.has_k4).count() == 5;
    let strict = r.strict_solutions();
    let mut detail = format!(
        "solutions under all of (a)-(e): {strict}; index 33 = K5: {k5}; tight = multipartite: {tight}; K4 set: {k4}"
    );
    if strict == 0 {
        detail += &format!(
            "; no square of the stated shape reproduces P{:?} (nearest differs at indices {:?}); {} bijections satisfy the rest",
            r.unmatched,
            r.nearest.values().map(|(_, bad)| bad.clone()).collect::<Vec<_>>(),
            r.relaxed_solutions()
        );
    }
    outcome(strict >= 1 && k5 && tight && k4, detail)
}

fn main_certificate() -> Outcome {
    let r = verify_main(1000, Exec::default()).unwrap();
    let bad = failing(&r, &["main.coefficients", "main.opt", "main.dominance", "main.multipliers", "main.zykov"]);
    let opt = r.claim("main.opt").map(|c| c.summary.clone()).unwrap_or_default();
    outcome(bad.is_empty(), if bad.is_empty() { opt } else { format!("{opt}; failing: {}", bad.join(", ")) })
}

fn k3_certificate() -> Outcome {
    let r = verify_k3().unwrap();
    let bad = failing(&r, &["k3.listed", "k3.max", "k3.attainment"]);
    outcome(bad.is_empty(), format!("{}; failing: {bad:?}", r.claim("k3.max").unwrap().summary))
}

fn tight_set() -> Outcome {
    let r = tight_set_characterization().unwrap();
    let bad = failing(&r, &["tight.sets", "tight.t3"]);
    outcome(bad.is_empty(), format!("{}; failing: {bad:?}", r.claim("tight.sets").unwrap().summary))
}

fn counting_oracles() -> Outcome {
    // brute force first, then the formula
    let t3 = count_c5(PartSizes::new(vec![2, 2, 2]).unwrap().graph().unwrap());
    let t4 = count_c5(PartSizes::new(vec![2, 2, 2, 2]).unwrap().graph().unwrap());
    let all = compositions(10, 1);
    let bad: Vec<String> = all
        .iter()
        .filter(|p| multipartite_c5_count(p) != BigInt::from(count_c5(p.graph().unwrap())))
        .map(|p| p.to_string())
        .collect();
    let f3 = multipartite_c5_count(&PartSizes::new(vec![2, 2, 2]).unwrap());
    let f4 = multipartite_c5_count(&PartSizes::new(vec![2, 2, 2, 2]).unwrap());
    outcome(
        bad.is_empty() && t3 == 24 && t4 == 288 && f3 == 24.into() && f4 == 288.into(),
        format!("{} compositions, mismatches {bad:?}; T3(6) = {t3}, T4(8) = {t4}", all.len()),
    )
}

fn moves() -> Outcome {
    let (n, bad) = move_gain_exhaustive(12, Exec::default());
    let prop = prop_3_1(50);
    outcome(
        bad.is_none() && prop.is_ok(),
        format!("{n} moves, first nonpositive {bad:?}; inequality pairs {prop:?}"),
    )
}

fn claim_3_10() -> Outcome {
    let r = claim_3_10_expansion(1000, Exec::default());
    let bad = failing(&r, &["claim-3.10.expansion", "claim-3.10.inner-minimum"]);
    outcome(bad.is_empty(), format!("{}; failing: {bad:?}", r.claims[1].summary))
}

fn claims_4() -> Outcome {
    let mut bad = Vec::new();
    for r in [claim_4_5_check(1000, Exec::default()), claim_4_7_check(1000, Exec::default())] {
        let ids: Vec<String> = r.claims.iter().map(|c| c.claim_id.clone()).collect();
        let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
        bad.extend(failing(&r, &ids));
    }
    outcome(bad.is_empty(), if bad.is_empty() { "both bounds re-derived; margins hold".into() } else { format!("failing: {}", bad.join(", ")) })
}

fn finite_shadow() -> Outcome {
    let max_n = if std::env::var_os("PENTAGON_ACCEPT_N8").is_some() { 8 } else { 7 };
    let mut ok = true;
    let mut notes = Vec::new();
    for k in 3..=5u64 {
        for n in 1..=max_n {
            let v = verify_density_bound(k, n, Exec::default()).unwrap();
            ok &= v.holds && v.turan_formula_agrees;
            if !v.holds {
                notes.push(format!("k={k} n={n} counterexample {:?}", v.counterexample));
            }
        }
        let r = max_c5(max_n, k as usize + 1, Exec::default()).unwrap();
        notes.push(format!(
            "k={k} n={max_n}: max {} (Turan {}), Turan among maximizers {}, unique {}",
            r.max_count, r.turan_count, r.is_turan_among_argmax, r.turan_unique
        ));
    }
    outcome(ok, format!("n <= {max_n}; {}", notes.join("; ")))
}

fn flag_calculus() -> Outcome {
    let chain = chain_identity(3, 4, 6, Exec::default()).unwrap();
    let decay = pair_defect_decay(3, &[6, 9, 12, 15], 4, Exec::default()).unwrap();
    let within = decay.rows.iter().all(|r| r.within_bound);
    let rows: Vec<String> = decay.rows.iter().map(|r| format!("n={}: {} <= {}", r.n, r.max_gap, r.bound)).collect();
    outcome(
        chain.passed() && within,
        format!(
            "{} identities on {} hosts, {} failures; decay {} (gaps nonincreasing in n: {})",
            chain.identities,
            chain.hosts,
            chain.failure_count,
            rows.join(", "),
            decay.monotone
        ),
    )
}

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check, u64); 11] = [
        ("enumeration", enumeration, 1),
        ("mapping reconstruction", mapping_reconstruction, 30),
        ("main certificate", main_certificate, 120),
        ("k = 3 certificate", k3_certificate, 10),
        ("tight-set characterization", tight_set, 60),
        ("counting oracles", counting_oracles, 60),
        ("vertex moves and part inequalities", moves, 60),
        ("epsilon expansion", claim_3_10, 10),
        ("vertex-count bounds", claims_4, 30),
        ("finite shadow", finite_shadow, 600),
        ("flag calculus", flag_calculus, 300),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*budget);
        let ok = o.ok && in_time;
        failed += !ok as usize;
        println!(
            "criterion {:>2} {}: {name} ({:.2} s, budget {budget} s) - {}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            o.detail
        );
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
