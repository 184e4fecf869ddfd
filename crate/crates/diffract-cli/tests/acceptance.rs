//! Acceptance gate: ten criteria, one test and one printed verdict line
//! each. Run with `cargo test --test acceptance -- --nocapture` to see
//! every line; a failing criterion prints its FAIL line before panicking.

use std::collections::HashSet;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use diffract::{
    io, run_laws, CosetDecomposition, FiniteGroup, LawInstance, LawSelection, Subgroup,
    Transversal, TransversalStrategy,
};

const BIN: &str = env!("CARGO_BIN_EXE_diffract");

/// Wall-clock budget for the full shelled corpus sweep.
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
/// Wall-clock budget for the large bench run.
const BENCH_BUDGET: Duration = Duration::from_secs(10);
/// Bench sample size.
const BENCH_REPS: &str = "100000";

fn report(name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {name}: {verdict} ({detail})");
    assert!(ok, "acceptance criterion {name} failed: {detail}");
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().expect("spawn diffract");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

const BUILTIN_CORPUS: [&str; 17] = [
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:7",
    "cyclic:8",
    "cyclic:9",
    "cyclic:10",
    "cyclic:11",
    "cyclic:12",
    "klein4",
    "symmetric:3",
    "symmetric:4",
    "dihedral:4",
    "quaternion",
];

/// Corpus entry: how to name the group on the command line, and the group
/// itself for in-process enumeration.
struct CorpusGroup {
    source_flag: &'static str,
    source_value: String,
    group: Arc<FiniteGroup>,
}

fn corpus() -> Vec<CorpusGroup> {
    let mut v: Vec<CorpusGroup> = BUILTIN_CORPUS
        .iter()
        .map(|spec| CorpusGroup {
            source_flag: "--builtin",
            source_value: spec.to_string(),
            group: Arc::new(FiniteGroup::builtin(spec).unwrap()),
        })
        .collect();
    let gens_path = fixture("a4.gens");
    let text = std::fs::read_to_string(&gens_path).unwrap();
    v.push(CorpusGroup {
        source_flag: "--gens",
        source_value: gens_path,
        group: Arc::new(io::parse_gens(&text, diffract::DEFAULT_CLOSURE_CAP).unwrap()),
    });
    v
}

/// Deduplicated subgroup generator sets: the trivial subgroup, every
/// single-element closure, and every pair closure on groups of order at
/// most twelve.
fn subgroup_gen_sets(group: &Arc<FiniteGroup>) -> Vec<Vec<usize>> {
    let n = group.order();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut candidates: Vec<Vec<usize>> = vec![vec![]];
    candidates.extend((0..n).map(|a| vec![a]));
    if n <= 12 {
        for a in 0..n {
            for b in (a + 1)..n {
                candidates.push(vec![a, b]);
            }
        }
    }
    for gens in candidates {
        let h = Subgroup::generate(group.clone(), &gens).unwrap();
        if seen.insert(h.members().to_vec()) {
            out.push(gens);
        }
    }
    out
}

fn strategies() -> Vec<TransversalStrategy> {
    vec![
        TransversalStrategy::MinIndex,
        TransversalStrategy::Random(1),
        TransversalStrategy::Random(2),
        TransversalStrategy::Random(3),
    ]
}

fn transversal_instances() -> Vec<LawInstance> {
    let mut out = Vec::new();
    for cg in corpus() {
        for gens in subgroup_gen_sets(&cg.group) {
            let h = Arc::new(Subgroup::generate(cg.group.clone(), &gens).unwrap());
            let d = Arc::new(CosetDecomposition::left_cosets(h));
            for strat in strategies() {
                let t = Arc::new(Transversal::choose(d.clone(), &strat, false).unwrap());
                out.push(LawInstance::assemble(t).unwrap());
            }
        }
    }
    out
}

/// Instances over representative systems that are deliberately not
/// transversals: the identity coset's representative is swapped for
/// another subgroup member wherever one exists.
fn non_transversal_instances() -> Vec<LawInstance> {
    let mut out = Vec::new();
    for cg in corpus() {
        for gens in subgroup_gen_sets(&cg.group) {
            let h = Arc::new(Subgroup::generate(cg.group.clone(), &gens).unwrap());
            if h.order() < 2 {
                continue;
            }
            let d = Arc::new(CosetDecomposition::left_cosets(h.clone()));
            let min =
                Transversal::choose(d.clone(), &TransversalStrategy::MinIndex, false).unwrap();
            let mut reps = min.reps().to_vec();
            reps[0] = h.member_at(1);
            let t = Arc::new(
                Transversal::choose(d, &TransversalStrategy::Explicit(reps), true).unwrap(),
            );
            out.push(LawInstance::assemble(t).unwrap());
        }
    }
    out
}

#[test]
fn acceptance_01_corpus_sweep_all_laws_via_binary() {
    let start = Instant::now();
    let mut invocations = 0u32;
    for cg in corpus() {
        for gens in subgroup_gen_sets(&cg.group) {
            let gens_str = gens
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(",");
            for strat in ["min", "random:1", "random:2", "random:3"] {
                let (code, out, err) = run_bin(&[
                    "--json",
                    "verify",
                    cg.source_flag,
                    &cg.source_value,
                    "--subgroup-gens",
                    &gens_str,
                    "--strategy",
                    strat,
                    "--laws",
                    "all",
                ]);
                invocations += 1;
                if code != 0 {
                    report(
                        "01-corpus-sweep",
                        false,
                        &format!(
                            "{} {} gens=[{gens_str}] strategy={strat} exited {code}: {err}{out}",
                            cg.source_flag, cg.source_value
                        ),
                    );
                }
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        "01-corpus-sweep",
        elapsed < SWEEP_BUDGET,
        &format!("{invocations} verify runs, all exit 0, in {elapsed:.2?}"),
    );
}

#[test]
fn acceptance_02_pair_table_is_relabeled_parent_table() {
    let mut instances = 0u32;
    let mut products = 0u64;
    for i in transversal_instances() {
        let g = i.group().clone();
        let f = i.fibration();
        let d = match i.diffracted() {
            Some(Ok(d)) => d,
            other => {
                report(
                    "02-relabeling",
                    false,
                    &format!("{} pair group missing: {other:?}", g.name()),
                );
                return;
            }
        };
        let idx: Vec<usize> = (0..g.order())
            .map(|x| f.nabla_index(x).unwrap())
            .collect();
        for a in 0..g.order() {
            for b in 0..g.order() {
                products += 1;
                if d.mul(idx[a], idx[b]) != idx[g.mul(a, b)] {
                    report(
                        "02-relabeling",
                        false,
                        &format!("{}: pair product disagrees at ({a}, {b})", g.name()),
                    );
                }
            }
        }
        instances += 1;
    }
    report(
        "02-relabeling",
        true,
        &format!("{products} products across {instances} instances"),
    );
}

#[test]
fn acceptance_03_cocycle_holds_with_exact_check_count() {
    let selection = LawSelection::parse("fibration-cocycle").unwrap();
    let mut instances = 0u32;
    let mut checks = 0u64;
    let mut all = transversal_instances();
    all.extend(non_transversal_instances());
    for i in all {
        let n = i.group().order() as u64;
        let k = i.fibration().t_size() as u64;
        let report_res = run_laws(&i, &selection).unwrap();
        let r = &report_res.results[0];
        if !r.is_pass() || r.checks_run != n * n * k {
            report(
                "03-cocycle",
                false,
                &format!(
                    "{}: status {:?}, {} checks (expected {})",
                    i.group().name(),
                    r.status,
                    r.checks_run,
                    n * n * k
                ),
            );
        }
        instances += 1;
        checks += r.checks_run;
    }
    report(
        "03-cocycle",
        true,
        &format!("{checks} cocycle checks across {instances} instances incl. non-transversal"),
    );
}

#[test]
fn acceptance_04_pair_action_is_faithful_homomorphism() {
    let selection = LawSelection::parse("diffraction-faithful").unwrap();
    let mut instances = 0u32;
    let mut all = transversal_instances();
    all.extend(non_transversal_instances());
    for i in all {
        let r = run_laws(&i, &selection).unwrap();
        let r = &r.results[0];
        let n = i.group().order() as u64;
        if !r.is_pass() || r.checks_run != n * n + n + 1 {
            report(
                "04-faithful-action",
                false,
                &format!("{}: {r:?}", i.group().name()),
            );
        }
        instances += 1;
    }
    report(
        "04-faithful-action",
        true,
        &format!("injective homomorphism on {instances} instances incl. non-transversal"),
    );
}

#[test]
fn acceptance_05_factoring_commutes_with_the_action() {
    let mut instances = 0u32;
    let mut squares = 0u64;
    for i in transversal_instances() {
        let g = i.group().clone();
        let f = i.fibration();
        let idx: Vec<usize> = (0..g.order())
            .map(|x| f.nabla_index(x).unwrap())
            .collect();
        for g_el in 0..g.order() {
            let alpha = f.alpha(g_el);
            for x in 0..g.order() {
                squares += 1;
                if idx[g.mul(g_el, x)] != alpha.apply(idx[x]) {
                    report(
                        "05-equivariance",
                        false,
                        &format!("{}: square breaks at ({g_el}, {x})", g.name()),
                    );
                }
            }
        }
        instances += 1;
    }
    report(
        "05-equivariance",
        true,
        &format!("{squares} squares across {instances} instances"),
    );
}

#[test]
fn acceptance_06_factoring_round_trips() {
    let mut instances = 0u32;
    let mut trips = 0u64;
    for i in transversal_instances() {
        let g = i.group().clone();
        let f = i.fibration();
        for x in 0..g.order() {
            trips += 1;
            let s = f.nabla(x).unwrap();
            if f.nabla_inv(s).unwrap() != x || g.mul(s.t, s.h) != x {
                report("06-round-trip", false, &format!("{}: element {x}", g.name()));
            }
        }
        for idx in 0..f.t_size() * f.h_size() {
            trips += 1;
            let s = f.spectrum_at(idx);
            let back = f.nabla(f.nabla_inv(s).unwrap()).unwrap();
            if back != s {
                report("06-round-trip", false, &format!("{}: pair {idx}", g.name()));
            }
        }
        instances += 1;
    }
    report(
        "06-round-trip",
        true,
        &format!("{trips} round trips across {instances} instances"),
    );
}

#[test]
fn acceptance_07_rewrite_traces_reassemble() {
    let mut instances = 0u32;
    let mut traces = 0u64;
    for i in transversal_instances() {
        let g = i.group().clone();
        let h = i.subgroup().clone();
        let t = i.transversal().clone();
        let f = i.fibration();
        for g1 in 0..g.order() {
            for g2 in 0..g.order() {
                traces += 1;
                let tr = diffract::rewrite_product(f, g1, g2).unwrap();
                let ok = tr.result == g.mul(g1, g2)
                    && g.mul(g.mul(tr.rep_part, tr.fib_part), tr.h_tail) == tr.result
                    && t.rep_position(tr.rep_part).is_some()
                    && h.contains(tr.fib_part)
                    && h.contains(tr.h_tail);
                if !ok {
                    report(
                        "07-rewrite",
                        false,
                        &format!("{}: trace broken at ({g1}, {g2})", g.name()),
                    );
                }
            }
        }
        instances += 1;
    }
    report(
        "07-rewrite",
        true,
        &format!("{traces} traces across {instances} instances"),
    );
}

#[test]
fn acceptance_08_single_entry_corruption_is_always_caught() {
    // Base instance: S3 with a transposition subgroup, min representatives.
    let g = Arc::new(FiniteGroup::builtin("symmetric:3").unwrap());
    let h = Arc::new(Subgroup::generate(g.clone(), &[1]).unwrap());
    let d = Arc::new(CosetDecomposition::left_cosets(h.clone()));
    let t = Arc::new(Transversal::choose(d.clone(), &TransversalStrategy::MinIndex, false).unwrap());
    let base = LawInstance::assemble(t.clone()).unwrap();
    let fib = base.fibration().clone();
    let diff = match base.diffracted() {
        Some(Ok(d)) => d.clone(),
        other => panic!("expected pair group, got {other:?}"),
    };

    let caught_with_witness = |i: &LawInstance| -> bool {
        let report = run_laws(i, &LawSelection::All).unwrap();
        !report.overall()
            && report
                .results
                .iter()
                .any(|r| r.is_fail() && r.counterexample.is_some())
    };

    let mut mutations = 0u32;

    // Every fiber table entry, every wrong subgroup position.
    for g_el in 0..g.order() {
        for t_pos in 0..fib.t_size() {
            let good = h.position(fib.delta_by_pos(g_el, t_pos)).unwrap();
            for wrong in (0..h.order()).filter(|&p| p != good) {
                mutations += 1;
                let bad = Arc::new(fib.with_mutated_entry(g_el, t_pos, wrong));
                if !caught_with_witness(&LawInstance::from_fibration(bad)) {
                    report(
                        "08-mutation-detection",
                        false,
                        &format!("fiber entry ({g_el}, {t_pos}) -> {wrong} slipped through"),
                    );
                }
            }
        }
    }

    // Every representative table entry, every wrong representative. A
    // corrupted bar can surface either as a tabulation error or as a law
    // failure; both count as caught.
    for g_el in 0..g.order() {
        let good = t.bar(g_el);
        for &wrong in t.reps().iter().filter(|&&r| r != good) {
            mutations += 1;
            let bad_t = Arc::new(t.with_mutated_bar(g_el, wrong));
            match diffract::Fibration::tabulate(bad_t) {
                Err(_) => {}
                Ok(f) => {
                    if !caught_with_witness(&LawInstance::from_fibration(Arc::new(f))) {
                        report(
                            "08-mutation-detection",
                            false,
                            &format!("bar entry {g_el} -> {wrong} slipped through"),
                        );
                    }
                }
            }
        }
    }

    // Every pair table cell, every wrong value.
    for a in 0..diff.order() {
        for b in 0..diff.order() {
            let good = diff.mul(a, b);
            for wrong in (0..diff.order()).filter(|&v| v != good) {
                mutations += 1;
                let bad = diff.with_mutated_entry(a, b, wrong);
                let instance = LawInstance::assemble(t.clone()).unwrap().with_diffracted(bad);
                if !caught_with_witness(&instance) {
                    report(
                        "08-mutation-detection",
                        false,
                        &format!("pair table cell ({a}, {b}) -> {wrong} slipped through"),
                    );
                }
            }
        }
    }

    report(
        "08-mutation-detection",
        true,
        &format!("{mutations} single-entry mutations, each flagged with a counterexample"),
    );
}

#[test]
fn acceptance_09_json_surfaces_are_byte_deterministic() {
    let golden = "{\"order\":4,\"t_size\":2,\"h_size\":2,\"pairs\":[[0,0],[0,2],[1,0],[1,2]],\
                  \"table\":[[0,1,2,3],[1,0,3,2],[2,3,1,0],[3,2,0,1]],\"identity\":0}\n";
    let diffract_args = [
        "--json",
        "diffract",
        "--builtin",
        "cyclic:4",
        "--subgroup-gens",
        "2",
    ];
    let (code, out1, _) = run_bin(&diffract_args);
    let (_, out2, _) = run_bin(&diffract_args);
    if code != 0 || out1 != golden || out1 != out2 {
        report(
            "09-determinism",
            false,
            &format!("diffract output drifted: {out1:?} vs {out2:?}"),
        );
    }

    let verify_args = [
        "--json",
        "verify",
        "--builtin",
        "dihedral:4",
        "--subgroup-gens",
        "4",
        "--strategy",
        "random:9",
    ];
    let (c1, v1, _) = run_bin(&verify_args);
    let (c2, v2, _) = run_bin(&verify_args);
    if c1 != 0 || c2 != 0 || v1 != v2 {
        report("09-determinism", false, "verify over random:9 drifted between runs");
    }

    let tv_args = [
        "--json",
        "transversal",
        "--builtin",
        "symmetric:4",
        "--subgroup-gens",
        "1",
        "--strategy",
        "random:9",
    ];
    let (c1, t1, _) = run_bin(&tv_args);
    let (c2, t2, _) = run_bin(&tv_args);
    if c1 != 0 || c2 != 0 || t1 != t2 {
        report("09-determinism", false, "random:9 transversal drifted between runs");
    }

    report(
        "09-determinism",
        true,
        "diffract golden bytes, verify and random transversal stable across runs",
    );
}

#[test]
fn acceptance_10_bench_cross_checks_quickly() {
    let start = Instant::now();
    let (code, out, err) = run_bin(&[
        "--json",
        "bench",
        "--builtin",
        "symmetric:4",
        "--subgroup-gens",
        "(0 1 2),(1 2 3)",
        "--reps",
        BENCH_REPS,
        "--seed",
        "7",
    ]);
    let elapsed = start.elapsed();
    let ok = code == 0
        && out.contains("\"agreements\":100000,\"disagreements\":0")
        && elapsed < BENCH_BUDGET;
    report(
        "10-bench",
        ok,
        &format!("exit {code}, {elapsed:.2?}, stdout {out:?} stderr {err:?}"),
    );
}
