//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use raag_out::analysis::{
    finite_index_report, legal_transvections, support_graph, theta_graph, WitnessCell,
};
use raag_out::census::{canonical_forms, classify, coverage_check, to_json_lines};
use raag_out::construct::{appendix_graph, build_gamma, build_gamma_prime};
use raag_out::symmetry::automorphism_group;
use raag_out::verify::{explicit_theta_map, sample_lambdas, verify_construction};
use raag_out::{parse_graph6, write_graph6, BigCount, Graph};

const SAMPLE_SEED: u64 = 20_240_917;
const SAMPLE_COUNT: usize = 100;
const ORACLE_SEED: u64 = 5;
const ORACLE_SAMPLE: usize = 500;
const FUZZ_SEED: u64 = 63;
const FUZZ_COUNT: usize = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lambdas() -> Vec<Graph> {
    sample_lambdas(SAMPLE_SEED, SAMPLE_COUNT, 3, 8)
}

fn gamma_suite() -> Outcome {
    let mut passed = 0;
    for lambda in lambdas() {
        let gamma = build_gamma(&lambda).map_err(|e| e.to_string())?;
        let r = verify_construction(&lambda, &gamma, false);
        let theta = theta_graph(&gamma).map_err(|e| e.to_string())?;
        let explicit = explicit_theta_map(&lambda, &theta)
            .is_some_and(|p| p.is_isomorphism(&lambda, &theta.graph));
        check(
            r.theta_iso_ok && r.forests_ok && r.finite_index_ok && explicit,
            || format!("failed on {}: {r:?}", write_graph6(&lambda)),
        )?;
        passed += 1;
    }
    Ok(format!("{passed}/{SAMPLE_COUNT} samples"))
}

fn gamma_prime_suite() -> Outcome {
    let mut passed = 0;
    for lambda in lambdas() {
        let gamma = build_gamma_prime(&lambda).map_err(|e| e.to_string())?;
        let r = verify_construction(&lambda, &gamma, true);
        let n = lambda.order();
        check(
            r.passed()
                && r.aut_trivial_ok == Some(true)
                && r.quotient_order == Some(BigCount::pow2(2 * n + 9))
                && gamma.order() == 2 * n + 9,
            || format!("failed on {}: {r:?}", write_graph6(&lambda)),
        )?;
        passed += 1;
    }
    Ok(format!("{passed}/{SAMPLE_COUNT} samples"))
}

fn appendix_graphs() -> Outcome {
    // (which, Θ vertices, Θ edges)
    let expected = [(1, 1, 0), (2, 2, 0), (3, 2, 1)];
    for (which, vertices, edges) in expected {
        let g = appendix_graph(which).map_err(|e| e.to_string())?;
        let theta = theta_graph(&g).map_err(|e| e.to_string())?;
        check(
            theta.graph.order() == vertices && theta.graph.size() == edges,
            || {
                format!(
                    "Θ(Γ{which}) has {} vertices, {} edges",
                    theta.graph.order(),
                    theta.graph.size()
                )
            },
        )?;
        check(finite_index_report(&g).finite_index, || {
            format!("Γ{which} fails finite index")
        })?;
        let aut = automorphism_group(&g).order;
        let brute = brute_aut_count(&matrix(&g));
        check(aut == 1u32.into() && brute == 1, || {
            format!("|Aut(Γ{which})| = {aut}, brute force {brute}")
        })?;
    }
    Ok("Γ1, Γ2, Γ3 exact".into())
}

fn witness_table_of_lambda0() -> Outcome {
    let lambda0 = Graph::from_edges(["v1", "v2", "v3"], Vec::<(&str, &str)>::new()).unwrap();
    let g = build_gamma(&lambda0).unwrap();
    let table = finite_index_report(&g).witness_table;
    for (i, row) in table.cells.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let contained = *cell == WitnessCell::Contained;
            check(contained == (i == j), || {
                format!("cell ({}, {}) is {cell:?}", table.rows[i], table.columns[j])
            })?;
        }
    }
    // (u, w, listed element of lk(u) \ st(w))
    let spots = [
        ("a1", "a2", "b1"),
        ("a1", "b1", "a2"),
        ("a1", "b2", "b1"),
        ("a1", "v1", "a2"),
        ("a2", "a1", "b2"),
        ("a2", "b1", "b2"),
        ("a2", "b2", "a1"),
        ("b1", "a1", "d1"),
        ("b1", "b2", "d1"),
        ("b1", "v1", "a1"),
        ("b2", "a1", "d2"),
        ("b2", "b1", "d2"),
        ("v1", "a1", "b2"),
        ("v1", "a2", "b1"),
        ("v1", "v2", "d1"),
        ("v1", "c1", "b1"),
        ("v1", "d1", "b2"),
        ("v1", "d2", "b1"),
        ("v2", "v1", "d2"),
        ("v3", "b1", "b2"),
        ("v2", "c2", "b1"),
        ("c1", "a1", "d1"),
        ("c1", "b1", "d2"),
        ("c2", "v1", "d2"),
        ("c3", "d1", "d2"),
        ("c1", "d2", "d1"),
        ("d1", "a1", "c1"),
        ("d1", "v1", "c2"),
        ("d1", "c1", "b1"),
        ("d1", "d2", "v1"),
        ("d2", "a2", "c1"),
        ("d2", "v1", "c2"),
        ("d2", "c3", "b2"),
        ("d2", "d1", "v2"),
    ];
    for (u, w, listed) in spots {
        let lk = g.link(u).unwrap();
        let st = g.star(w).unwrap();
        check(lk.contains(listed) && !st.contains(listed), || {
            format!("{listed} is not in lk({u}) \\ st({w})")
        })?;
        check(
            matches!(table.cell(u, w), Some(WitnessCell::Witness(_))),
            || format!("({u}, {w}) not marked as a non-containment"),
        )?;
    }
    check(
        table.cell("a1", "a2") == Some(&WitnessCell::Witness("b1".into()))
            && table.cell("c1", "c2") == Some(&WitnessCell::Witness("v1".into())),
        || "exact witnesses differ".into(),
    )?;
    Ok(format!("diagonal only, {} cells spot-checked", spots.len()))
}

/// Seeded graphs on 1..=8 vertices followed by every labeled graph on at
/// most 5 vertices.
fn oracle_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut out: Vec<Graph> = (0..ORACLE_SAMPLE)
        .map(|_| {
            let n = rng.random_range(1..=8);
            random_graph(&mut rng, n)
        })
        .collect();
    for n in 1..=5 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            out.push(mask_graph(n, mask));
        }
    }
    out
}

fn automorphism_oracle() -> Outcome {
    let graphs = oracle_graphs();
    for g in &graphs {
        let ours = automorphism_group(g).order;
        let brute = brute_aut_count(&matrix(g));
        check(ours == brute.into(), || {
            format!("{}: search {ours}, brute force {brute}", write_graph6(g))
        })?;
    }
    Ok(format!("{} graphs, 0 discrepancies", graphs.len()))
}

fn support_graph_oracle() -> Outcome {
    let graphs = oracle_graphs();
    let mut checked = 0;
    for g in &graphs {
        let a = matrix(g);
        for v in 0..g.order() {
            let sg = support_graph(g, g.label(v)).map_err(|e| e.to_string())?;
            let to_set = |s: &raag_out::VertexSet| -> Set {
                s.iter().map(|x| g.index_of(x).unwrap()).collect()
            };
            let nodes: BTreeSet<Set> = sg.nodes.iter().map(to_set).collect();
            let edges: BTreeSet<(Set, Set)> = sg
                .edges
                .iter()
                .map(|&(i, j)| {
                    let (p, q) = (to_set(&sg.nodes[i]), to_set(&sg.nodes[j]));
                    if p < q {
                        (p, q)
                    } else {
                        (q, p)
                    }
                })
                .collect();
            let (brute_nodes, brute_edges) = brute_support_graph(&a, v);
            let brute_nodes: BTreeSet<Set> = brute_nodes.into_iter().collect();
            check(nodes == brute_nodes && edges == brute_edges, || {
                format!("{} at vertex {v}", write_graph6(g))
            })?;
            check(
                sg.is_forest() == is_acyclic(sg.nodes.len(), &sg.edges),
                || format!("{} forest verdict at vertex {v}", write_graph6(g)),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} support graphs, 0 discrepancies"))
}

fn finite_index_paths() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = mask_graph(n, mask);
            let table = finite_index_report(&g).finite_index;
            let scan = legal_transvections(&g);
            let brute = brute_transvections(&matrix(&g));
            check(
                table == scan.is_empty() && scan.len() == brute.len(),
                || {
                    format!(
                        "{}: table {table}, scan {}, brute {}",
                        write_graph6(&g),
                        scan.len(),
                        brute.len()
                    )
                },
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} labeled graphs on <= 6 vertices, 0 discrepancies"
    ))
}

fn census_counts() -> Outcome {
    let mut counts = Vec::new();
    for k in 1..=7 {
        let ours = canonical_forms(k).map_err(|e| e.to_string())?.len();
        let oracle = orbit_class_count(k);
        check(ours == oracle, || {
            format!("k = {k}: {ours} classes, oracle {oracle}")
        })?;
        counts.push(ours.to_string());
    }
    let r = coverage_check(4).map_err(|e| e.to_string())?;
    let four = r.entries.iter().filter(|e| e.n == 4).count();
    check(
        r.all_covered && four == 11 && r.classes_per_size.get(&4) == Some(&11),
        || {
            format!(
                "coverage(4): all_covered {}, {four} four-vertex classes",
                r.all_covered
            )
        },
    )?;
    Ok(format!("counts {}, coverage(4) 11/11", counts.join(",")))
}

fn full_run() -> Vec<u8> {
    let mut out = Vec::new();
    for k in 1..=7 {
        out.extend(to_json_lines(&classify(k).unwrap()).into_bytes());
    }
    for lambda in lambdas() {
        let built = [
            (build_gamma(&lambda).unwrap(), false),
            (build_gamma_prime(&lambda).unwrap(), true),
        ];
        for (gamma, rigid) in built {
            let r = verify_construction(&lambda, &gamma, rigid);
            out.extend(serde_json::to_vec(&r).unwrap());
            out.push(b'\n');
        }
    }
    out
}

fn determinism() -> Outcome {
    let first = full_run();
    let second = full_run();
    check(first == second, || "runs differ".into())?;
    Ok(format!("{} bytes identical", first.len()))
}

fn graph6_fuzz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(FUZZ_SEED);
    for _ in 0..FUZZ_COUNT {
        let n = if rng.random_bool(0.1) {
            rng.random_range(63..=90)
        } else {
            rng.random_range(0..=62)
        };
        let p: f64 = rng.random();
        let mut edges = BTreeSet::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(p) {
                    edges.insert((i, j));
                }
            }
        }
        let text = oracle_graph6(n, &edges);
        let g = parse_graph6(&text).map_err(|e| format!("{text}: {e}"))?;
        check(g.order() == n && edge_set(&g) == edges, || {
            format!("{text} decoded wrongly")
        })?;
        check(write_graph6(&g) == text, || {
            format!("{text} re-encoded differently")
        })?;
    }
    Ok(format!("{FUZZ_COUNT}/{FUZZ_COUNT} strings"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 Γ(Λ) realizes A_Λ with finite index", gamma_suite),
        ("2 Γ′(Λ) rigid with quotient 2^(2n+9)", gamma_prime_suite),
        ("3 appendix graphs", appendix_graphs),
        ("4 witness table for Γ(Λ0)", witness_table_of_lambda0),
        ("5 automorphism orders vs brute force", automorphism_oracle),
        (
            "6 support-graph edge rule vs brute force",
            support_graph_oracle,
        ),
        ("7 witness table vs transvection scan", finite_index_paths),
        ("8 census counts and coverage", census_counts),
        ("9 determinism", determinism),
        ("10 graph6 round trip", graph6_fuzz),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
