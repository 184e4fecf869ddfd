//! One function per subcommand. Each returns the process exit code; hard
//! errors bubble up as `diffract::Error` and are mapped in `main`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use diffract::laws::LawStatus;
use diffract::{
    bequeath_product, io, rewrite_product, run_laws, DiffractedGroup, Error, Fibration,
    FiniteGroup, LawInstance, LawSelection, Lcg, Result, Subgroup, Transversal,
};

use crate::out::*;
use crate::source::{build_subgroup, build_transversal, load_group, resolve_element};
use crate::{SourceArgs, SubgroupArgs, TransversalArgs};

fn show(g: &FiniteGroup, x: usize) -> String {
    match g.labels() {
        Some(_) => format!("{} \"{}\"", x, g.label(x)),
        None => x.to_string(),
    }
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output structs serialize")
    );
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

struct Assembled {
    group: Arc<FiniteGroup>,
    subgroup: Arc<Subgroup>,
    transversal: Arc<Transversal>,
}

fn assemble(
    source: &SourceArgs,
    subgroup: &SubgroupArgs,
    tv: &TransversalArgs,
    cap: usize,
) -> Result<Assembled> {
    let group = load_group(source, cap)?;
    let subgroup = build_subgroup(&group, &subgroup.subgroup_gens)?;
    let transversal = build_transversal(subgroup.clone(), &tv.strategy, tv.allow_non_transversal)?;
    Ok(Assembled {
        group,
        subgroup,
        transversal,
    })
}

pub fn load(source: &SourceArgs, emit: Option<&Path>, json: bool, cap: usize) -> Result<i32> {
    let g = load_group(source, cap)?;
    if let Some(path) = emit {
        write_file(path, &io::render_gtab(&g))?;
    }
    if json {
        emit_json(&LoadOut {
            name: g.name(),
            order: g.order(),
            abelian: g.is_abelian(),
            labeled: g.labels().is_some(),
        });
    } else {
        println!("group: {}", g.name());
        println!("order: {}", g.order());
        println!("abelian: {}", g.is_abelian());
    }
    Ok(0)
}

pub fn info(source: &SourceArgs, element: Option<&str>, json: bool, cap: usize) -> Result<i32> {
    let g = load_group(source, cap)?;
    if let Some(spec) = element {
        let idx = resolve_element(&g, spec)?;
        let inv = g.inv(idx);
        if json {
            emit_json(&ElementOut {
                index: idx,
                label: g.label(idx),
                order: g.element_order(idx),
                inverse: inv,
                inverse_label: g.label(inv),
            });
        } else {
            println!("element: {}", show(&g, idx));
            println!("order: {}", g.element_order(idx));
            println!("inverse: {}", show(&g, inv));
        }
        return Ok(0);
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for x in 0..g.order() {
        *counts.entry(g.element_order(x)).or_insert(0) += 1;
    }
    let element_order_counts: Vec<(usize, usize)> = counts.into_iter().collect();
    if json {
        emit_json(&InfoOut {
            name: g.name(),
            order: g.order(),
            abelian: g.is_abelian(),
            element_order_counts,
        });
    } else {
        println!("group: {}", g.name());
        println!("order: {}", g.order());
        println!("abelian: {}", g.is_abelian());
        for (ord, count) in element_order_counts {
            println!("elements of order {ord}: {count}");
        }
    }
    Ok(0)
}

pub fn subgroup(source: &SourceArgs, sub: &SubgroupArgs, json: bool, cap: usize) -> Result<i32> {
    let g = load_group(source, cap)?;
    let h = build_subgroup(&g, &sub.subgroup_gens)?;
    if json {
        emit_json(&SubgroupOut {
            order: h.order(),
            index: h.index(),
            members: h.members().to_vec(),
        });
    } else {
        println!("subgroup order: {}", h.order());
        println!("index: {}", h.index());
        let members: Vec<String> = h.members().iter().map(|&m| show(&g, m)).collect();
        println!("members: {}", members.join(", "));
    }
    Ok(0)
}

pub fn cosets(source: &SourceArgs, sub: &SubgroupArgs, json: bool, cap: usize) -> Result<i32> {
    let g = load_group(source, cap)?;
    let h = build_subgroup(&g, &sub.subgroup_gens)?;
    let d = diffract::CosetDecomposition::left_cosets(h);
    if json {
        emit_json(&CosetsOut {
            count: d.coset_count(),
            cosets: d.cosets().to_vec(),
        });
    } else {
        println!("cosets: {}", d.coset_count());
        for (id, coset) in d.cosets().iter().enumerate() {
            let members: Vec<String> = coset.iter().map(|&m| show(&g, m)).collect();
            println!("coset {id}: {}", members.join(", "));
        }
    }
    Ok(0)
}

pub fn transversal(
    source: &SourceArgs,
    sub: &SubgroupArgs,
    tv: &TransversalArgs,
    json: bool,
    cap: usize,
) -> Result<i32> {
    let a = assemble(source, sub, tv, cap)?;
    let t = &a.transversal;
    if json {
        emit_json(&TransversalOut {
            reps: t.reps().to_vec(),
            is_transversal: t.is_transversal(),
            strategy: t.strategy().to_string(),
        });
    } else {
        println!("strategy: {}", t.strategy());
        println!("transversal: {}", t.is_transversal());
        for (c, &rep) in t.reps().iter().enumerate() {
            println!("coset {c} rep: {}", show(&a.group, rep));
        }
    }
    Ok(0)
}

pub fn diffract_cmd(
    source: &SourceArgs,
    sub: &SubgroupArgs,
    tv: &TransversalArgs,
    emit: Option<&Path>,
    json: bool,
    cap: usize,
) -> Result<i32> {
    let a = assemble(source, sub, tv, cap)?;
    let f = Arc::new(Fibration::tabulate(a.transversal.clone())?);
    let d = DiffractedGroup::build(f)?;
    let emission = d.emission();
    let text = serde_json::to_string(&emission).expect("emission serializes");
    if let Some(path) = emit {
        write_file(path, &format!("{text}\n"))?;
    }
    if json {
        println!("{text}");
    } else {
        println!("pair group order: {}", emission.order);
        println!("representatives: {}", emission.t_size);
        println!("fiber size: {}", emission.h_size);
        println!("identity pair index: {}", emission.identity);
    }
    Ok(0)
}

pub fn verify(
    source: &SourceArgs,
    sub: &SubgroupArgs,
    tv: &TransversalArgs,
    laws: &str,
    json: bool,
    cap: usize,
) -> Result<i32> {
    let a = assemble(source, sub, tv, cap)?;
    let selection = LawSelection::parse(laws)?;
    let instance = LawInstance::assemble(a.transversal.clone())?;
    let report = run_laws(&instance, &selection)?;
    if json {
        print!("{}", report.to_json_lines());
    } else {
        println!(
            "instance: {} / H of order {} / strategy {}",
            report.instance.group,
            a.subgroup.order(),
            report.instance.strategy
        );
        for r in &report.results {
            match r.status {
                LawStatus::Pass => println!("PASS {} ({} checks)", r.law_id, r.checks_run),
                LawStatus::Skipped => println!(
                    "SKIP {} ({})",
                    r.law_id,
                    r.reason.as_deref().unwrap_or("skipped")
                ),
                LawStatus::Fail => {
                    let ce = r.counterexample.as_ref();
                    let what = ce.map(|c| c.description.as_str()).unwrap_or("failed");
                    let elems = ce
                        .map(|c| {
                            c.elements
                                .iter()
                                .map(|&e| show(&a.group, e))
                                .collect::<Vec<_>>()
                                .join(", ")
                        })
                        .unwrap_or_default();
                    println!(
                        "FAIL {} ({} checks): {what} [{elems}]",
                        r.law_id, r.checks_run
                    );
                }
            }
            if let Some(note) = &r.note {
                println!("  note: {note}");
            }
        }
        println!("overall: {}", if report.overall() { "PASS" } else { "FAIL" });
    }
    Ok(if report.overall() { 0 } else { 1 })
}

pub fn rewrite(
    source: &SourceArgs,
    sub: &SubgroupArgs,
    tv: &TransversalArgs,
    g1: &str,
    g2: &str,
    json: bool,
    cap: usize,
) -> Result<i32> {
    let a = assemble(source, sub, tv, cap)?;
    let x = resolve_element(&a.group, g1)?;
    let y = resolve_element(&a.group, g2)?;
    let f = Fibration::tabulate(a.transversal.clone())?;
    let trace = rewrite_product(&f, x, y)?;
    if json {
        emit_json(&trace);
    } else {
        let g = &a.group;
        println!(
            "{} * {} = {}",
            g.label(trace.g1),
            g.label(trace.g2),
            g.label(trace.result)
        );
        println!(
            "factored: {} = <{}, {}>, {} = <{}, {}>",
            g.label(trace.g1),
            g.label(trace.t1),
            g.label(trace.h1),
            g.label(trace.g2),
            g.label(trace.t2),
            g.label(trace.h2)
        );
        println!(
            "rewritten: {} * {} * {}",
            g.label(trace.rep_part),
            g.label(trace.fib_part),
            g.label(trace.h_tail)
        );
    }
    Ok(0)
}

pub fn bench(
    source: &SourceArgs,
    sub: &SubgroupArgs,
    tv: &TransversalArgs,
    reps: u64,
    seed: u64,
    json: bool,
    cap: usize,
) -> Result<i32> {
    let a = assemble(source, sub, tv, cap)?;
    let g = &a.group;
    let n = g.order();
    let f = Arc::new(Fibration::tabulate(a.transversal.clone())?);
    let d = DiffractedGroup::build(f.clone())?;

    let mut rng = Lcg::new(seed);
    let pairs: Vec<(usize, usize)> = (0..reps).map(|_| (rng.pick(n), rng.pick(n))).collect();

    let start = Instant::now();
    let direct: Vec<usize> = pairs.iter().map(|&(x, y)| g.mul(x, y)).collect();
    let t_direct = start.elapsed();

    let start = Instant::now();
    let mut rewritten = Vec::with_capacity(pairs.len());
    for &(x, y) in &pairs {
        let s = bequeath_product(&f, &f.nabla(x)?, &f.nabla(y)?)?;
        rewritten.push(f.nabla_inv(s)?);
    }
    let t_rewrite = start.elapsed();

    // Pure table lookups after precomputing both index maps.
    let to_pair: Vec<usize> = (0..n)
        .map(|x| f.nabla_index(x))
        .collect::<Result<Vec<usize>>>()?;
    let from_pair: Vec<usize> = d
        .pairs()
        .iter()
        .map(|&s| f.nabla_inv(s))
        .collect::<Result<Vec<usize>>>()?;
    let start = Instant::now();
    let tabled: Vec<usize> = pairs
        .iter()
        .map(|&(x, y)| from_pair[d.mul(to_pair[x], to_pair[y])])
        .collect();
    let t_table = start.elapsed();

    let mut agreements = 0u64;
    let mut disagreements = 0u64;
    for i in 0..pairs.len() {
        if direct[i] == rewritten[i] && direct[i] == tabled[i] {
            agreements += 1;
        } else {
            disagreements += 1;
        }
    }

    let ns_per = |elapsed: std::time::Duration| -> f64 {
        if reps == 0 {
            0.0
        } else {
            elapsed.as_nanos() as f64 / reps as f64
        }
    };
    let timings = format!(
        "direct-table: {:.1} ns/op\nrewrite-path: {:.1} ns/op\npair-table: {:.1} ns/op",
        ns_per(t_direct),
        ns_per(t_rewrite),
        ns_per(t_table)
    );
    if json {
        // Timings go to stderr so stdout stays byte-deterministic.
        emit_json(&BenchOut {
            reps,
            seed,
            agreements,
            disagreements,
        });
        eprintln!("{timings}");
    } else {
        println!("reps: {reps}");
        println!("seed: {seed}");
        println!("{timings}");
        println!("agreements: {agreements}");
        println!("disagreements: {disagreements}");
    }
    Ok(if disagreements == 0 { 0 } else { 1 })
}
