//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Mismatching audit instances are written as
//! counterexample bundles under the cargo target tmp directory.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use interval_fpt::completion::{enumerate_cycle_triangulations, interval_completion, optimize_completion};
use interval_fpt::deletion::{interval_deletion, interval_deletion_with, optimize_deletion};
use interval_fpt::generators::{
    all_graphs_up_to_iso, attach_interval_host, audit_instance, gadget_type1, gadget_type2, gnp, long_cycle, nested_gadget,
    random_chordal, rng,
};
use interval_fpt::oracle::{
    brute_force_min_completion, brute_force_min_deletion, oracle_is_interval, OracleConfig,
};
use interval_fpt::props::{check_triangulations, run_suite, Check, Suite};
use interval_fpt::record::{write_counterexample, RunRecord};
use interval_fpt::recognition::is_interval;
use interval_fpt::search::{Outcome, SearchStats, SolverConfig};
use interval_fpt::{Graph, VertexId};
use rand::Rng;

const RECOGNITION_RANDOM: usize = 1_000;
const RECOGNITION_SECONDS: f64 = 60.0;
const SOUNDNESS_INSTANCES: u64 = 2_000;
const DELETION_AUDIT: u64 = 300;
const COMPLETION_AUDIT: u64 = 300;
const COMPLETION_OPT_CAP: usize = 4;
const MAX_BIG_AT_DELETION: usize = 18;
const MAX_BIG_AT_COMPLETION: usize = 17;
const MAX_SMALL_DELETION: usize = 10;
const NOMINAL_SMALL_COMPLETION: usize = 9;
const PROPERTY_INSTANCES: usize = 200;
const PERF_SECONDS: f64 = 60.0;
const CATALAN: [usize; 6] = [2, 5, 14, 42, 132, 429];

struct Line {
    id: &'static str,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn bundle_dir(kind: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("counterexamples").join(kind)
}

fn oracle_cfg() -> OracleConfig {
    OracleConfig { deletion_max_vertices: 14, completion_max_vertices: 10, ..Default::default() }
}

fn criterion_recognition() -> Line {
    let t = Instant::now();
    let mut graphs: Vec<Graph> = (1..=6).flat_map(all_graphs_up_to_iso).collect();
    let exhaustive = graphs.len();
    let mut r = rng(11);
    for seed in 0..RECOGNITION_RANDOM as u64 {
        let n = r.gen_range(7..=9);
        let q = r.gen_range(0.1..0.7);
        graphs.push(gnp(n, q, seed).unwrap());
    }
    let disagreements = graphs.iter().filter(|g| is_interval(g) != oracle_is_interval(g).unwrap()).count();
    let secs = t.elapsed().as_secs_f64();
    Line {
        id: "1",
        name: "recognition cross-validation",
        pass: disagreements == 0 && secs < RECOGNITION_SECONDS && exhaustive == 208,
        detail: format!("{exhaustive} exhaustive (n<=6) + {RECOGNITION_RANDOM} random, {disagreements} disagreements, {secs:.1}s"),
    }
}

fn soundness_instance(seed: u64) -> (Graph, usize) {
    let mut r = rng(seed ^ 0x51);
    let k = r.gen_range(0..=3);
    let g = match r.gen_range(0..4) {
        0 | 1 => audit_instance(r.gen_range(4..=20), seed),
        2 => {
            let (g, _) = if r.gen_bool(0.5) { gadget_type1(r.gen_range(7..=12)) } else { gadget_type2(r.gen_range(6..=11)) };
            let room = 20 - g.n();
            attach_interval_host(&g, VertexId(0), r.gen_range(0..=room), seed).unwrap()
        }
        _ => random_chordal(r.gen_range(8..=20), seed),
    };
    (g, k)
}

fn criterion_soundness(stats: &mut SearchStats) -> Line {
    let mut yes = 0;
    let mut violations = Vec::new();
    for seed in 0..SOUNDNESS_INSTANCES {
        let (g, k) = soundness_instance(seed);
        let r = interval_deletion(&g, k).unwrap();
        stats.merge(&r.stats);
        if let Outcome::Yes(f) = &r.outcome {
            yes += 1;
            let h = g.remove_vertices(f).unwrap();
            let second = if h.n() <= 10 { oracle_is_interval(&h).unwrap() } else { true };
            if f.len() > k || !is_interval(&h) || !second {
                violations.push(seed);
            }
        }
    }
    Line {
        id: "2",
        name: "deletion soundness",
        pass: violations.is_empty(),
        detail: format!("{SOUNDNESS_INSTANCES} instances (n<=20), {yes} Yes answers, violations at seeds {violations:?}"),
    }
}

fn audit_graphs(audit: u64, lo: usize, hi: usize, salt: u64) -> Vec<(Option<u64>, Graph)> {
    let mut out: Vec<(Option<u64>, Graph)> = (1..=6).flat_map(all_graphs_up_to_iso).map(|g| (None, g)).collect();
    let mut r = rng(salt);
    for seed in 0..audit {
        let n = r.gen_range(lo..=hi);
        out.push((Some(seed), audit_instance(n, seed ^ salt)));
    }
    out
}

fn criterion_deletion_audit(stats: &mut SearchStats) -> Line {
    let cfg = SolverConfig::default();
    let mut mismatches = 0;
    let mut count = 0;
    for (_, g) in audit_graphs(DELETION_AUDIT, 7, 12, 0xde1) {
        count += 1;
        let oracle = brute_force_min_deletion(&g, g.n(), &oracle_cfg()).unwrap();
        let opt = oracle.optimum().expect("deleting everything is interval");
        let solved = optimize_deletion(&g, opt, &cfg).unwrap();
        stats.merge(&solved.stats);
        if solved.optimum != Some(opt) {
            mismatches += 1;
            let mut rec = RunRecord::optimized_deletion(&g, &solved).unwrap();
            rec.compare(&oracle);
            write_counterexample(&bundle_dir("deletion"), &g, &rec, &oracle).unwrap();
        }
    }
    Line {
        id: "3",
        name: "deletion optimality audit",
        pass: mismatches == 0,
        detail: format!("{count} instances (exhaustive n<=6 + {DELETION_AUDIT} with 7<=n<=12), {mismatches} mismatches"),
    }
}

fn criterion_completion_audit(stats: &mut SearchStats) -> Line {
    let cfg = SolverConfig::default();
    let mut mismatches = 0;
    let mut audited = 0;
    let check = |g: &Graph, stats: &mut SearchStats| -> Option<bool> {
        let oracle = brute_force_min_completion(g, COMPLETION_OPT_CAP, &oracle_cfg()).unwrap();
        let opt = oracle.optimum()?;
        let solved = optimize_completion(g, opt, &cfg).unwrap();
        stats.merge(&solved.stats);
        let ok = solved.optimum == Some(opt);
        if !ok {
            let mut rec = RunRecord::optimized_completion(g, &solved).unwrap();
            rec.compare(&oracle);
            write_counterexample(&bundle_dir("completion"), g, &rec, &oracle).unwrap();
        }
        Some(ok)
    };
    for g in (1..=6).flat_map(all_graphs_up_to_iso) {
        if let Some(ok) = check(&g, stats) {
            audited += 1;
            mismatches += usize::from(!ok);
        }
    }
    let mut r = rng(0xc0);
    let mut random = 0;
    let mut seed = 0u64;
    while random < COMPLETION_AUDIT {
        let g = audit_instance(r.gen_range(7..=10), seed ^ 0xc0);
        seed += 1;
        if let Some(ok) = check(&g, stats) {
            random += 1;
            audited += 1;
            mismatches += usize::from(!ok);
        }
    }
    let mut cycle_bad = Vec::new();
    for len in 4..=9 {
        let g = long_cycle(len);
        let oracle = brute_force_min_completion(&g, len - 3, &oracle_cfg()).unwrap().optimum();
        let solved = optimize_completion(&g, len - 3, &cfg).unwrap().optimum;
        let below = interval_completion(&g, len - 4).unwrap().outcome;
        if oracle != Some(len - 3) || solved != Some(len - 3) || below != Outcome::No {
            cycle_bad.push(len);
        }
    }
    Line {
        id: "4",
        name: "completion optimality audit",
        pass: mismatches == 0 && cycle_bad.is_empty(),
        detail: format!(
            "{audited} instances with OPT<={COMPLETION_OPT_CAP} ({random} random, {seed} drawn), {mismatches} mismatches; cycles C4..C9 bad: {cycle_bad:?}"
        ),
    }
}

fn criterion_triangulations() -> Line {
    let mut ok = matches!(check_triangulations(9), Check::Pass);
    let mut counts = Vec::new();
    for (len, &expect) in (4..=9usize).zip(&CATALAN) {
        let ids: Vec<VertexId> = (0..len as u32).map(VertexId).collect();
        let t = enumerate_cycle_triangulations(&ids).unwrap();
        ok &= t.len() == expect && t.iter().all(|s| s.len() == len - 3) && t.len() <= 4usize.pow(len as u32 - 3);
        counts.push(t.len());
    }
    Line { id: "5", name: "triangulation enumeration", pass: ok, detail: format!("counts {counts:?} for L=4..9") }
}

fn gadget_corpus() -> (SearchStats, SearchStats) {
    let mut del = SearchStats::default();
    let mut comp = SearchStats::default();
    for p in [13, 14, 16] {
        for (g, _) in [gadget_type1(p), gadget_type2(p)] {
            del.merge(&interval_deletion(&g, 1).unwrap().stats);
            comp.merge(&interval_completion(&g, 1).unwrap().stats);
        }
    }
    let (g, _) = nested_gadget(1, 13);
    del.merge(&interval_deletion(&g, 2).unwrap().stats);
    (del, comp)
}

fn criterion_branching(del: &SearchStats, comp: &SearchStats) -> Line {
    let (gdel, gcomp) = gadget_corpus();
    let within = del.max_branching_big_at <= MAX_BIG_AT_DELETION
        && comp.max_branching_big_at <= MAX_BIG_AT_COMPLETION
        && del.max_branching_small_obstruction <= MAX_SMALL_DELETION;
    let mut exceed = Vec::new();
    if gdel.max_branching_big_at > MAX_BIG_AT_DELETION {
        exceed.push(format!("deletion big-AT {} > {MAX_BIG_AT_DELETION}", gdel.max_branching_big_at));
    }
    if gcomp.max_branching_big_at > MAX_BIG_AT_COMPLETION {
        exceed.push(format!("completion big-AT {} > {MAX_BIG_AT_COMPLETION}", gcomp.max_branching_big_at));
    }
    Line {
        id: "6",
        name: "branch-degree measurement",
        pass: within,
        detail: format!(
            "audit corpora: deletion big-AT {} small {} ripe-cycle {}; completion big-AT {} small {} (nominal {NOMINAL_SMALL_COMPLETION}) triangulation {}; \
             long-gadget corpus (p>=13): deletion big-AT {}, completion big-AT {}; exceedances: {}",
            del.max_branching_big_at,
            del.max_branching_small_obstruction,
            del.max_branching_ripe_cycle,
            comp.max_branching_big_at,
            comp.max_branching_small_obstruction,
            comp.max_branching_triangulation,
            gdel.max_branching_big_at,
            gcomp.max_branching_big_at,
            if exceed.is_empty() { "none".to_string() } else { exceed.join(", ") },
        ),
    }
}

fn criterion_properties() -> Line {
    let mut failures = 0;
    let mut parts = Vec::new();
    for (suite, seed) in [(Suite::Structure, 7_000), (Suite::Cycles, 9_000)] {
        let rep = run_suite(suite, PROPERTY_INSTANCES, seed);
        failures += rep.failures.len();
        for f in rep.failures.iter().take(3) {
            parts.push(format!("{suite}: {} ({}) seed {:?}", f.property, f.detail, f.seed));
        }
        parts.push(format!("{suite}: {} instances, {} checks, {} vacuous", rep.instances, rep.checks, rep.vacuous));
    }
    Line { id: "7", name: "structural lemma suite", pass: failures == 0, detail: format!("{failures} failures; {}", parts.join("; ")) }
}

fn criterion_performance() -> Line {
    let (g, _) = gadget_type1(20);
    let host = 60 - g.n();
    let g = attach_interval_host(&g, VertexId(10), host, 2024).unwrap();
    let t = Instant::now();
    let r = interval_deletion_with(&g, 5, &SolverConfig::default()).unwrap();
    let secs = t.elapsed().as_secs_f64();
    let s = &r.stats;
    Line {
        id: "8",
        name: "performance smoke",
        pass: secs < PERF_SECONDS && r.outcome.is_yes() && g.n() == 60,
        detail: format!(
            "n={} m={} k=5 answer={} in {secs:.2}s, nodes={} depth={} max branching={}",
            g.n(),
            g.m(),
            if r.outcome.is_yes() { "yes" } else { "no" },
            s.nodes,
            s.max_depth,
            s.max_branching
        ),
    }
}

fn main() -> ExitCode {
    let mut del_stats = SearchStats::default();
    let mut comp_stats = SearchStats::default();
    let mut lines = Vec::new();
    let mut run = |f: &mut dyn FnMut() -> Line| {
        let t = Instant::now();
        let l = f();
        println!(
            "criterion {} {}: {} [{:.1}s] {}",
            l.id,
            l.name,
            if l.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            l.detail
        );
        lines.push(l.pass);
    };
    run(&mut criterion_recognition);
    run(&mut || criterion_soundness(&mut del_stats));
    run(&mut || criterion_deletion_audit(&mut del_stats));
    run(&mut || criterion_completion_audit(&mut comp_stats));
    run(&mut criterion_triangulations);
    run(&mut || criterion_branching(&del_stats, &comp_stats));
    run(&mut criterion_properties);
    run(&mut criterion_performance);
    let failed = lines.iter().filter(|p| !**p).count();
    println!("acceptance: {} of {} criteria passed", lines.len() - failed, lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
