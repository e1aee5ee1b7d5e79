//! Acceptance suite: every verifiable claim the library must reproduce,
//! one test per criterion, each with its wall-clock ceiling pinned. All
//! values are exact; there are no tolerances.

mod common;

use std::time::{Duration, Instant};

use common::oracle_sbk;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sbk_core::{
    enumerate_labeled_graphs, random_connected_graph, run_suite, sb2_path_formula, sb_k, sb_table,
    sbk_path_formula, search_sync_advantage, to_graph6, Budget, Error, FamilySpec, Graph, Meter,
    SuiteName, SuiteParams, SuiteReport, DEFAULT_ENUMERATION_CAP,
};

fn finish(criterion: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < limit,
        "criterion '{criterion}' exceeded its time budget: {elapsed:.1?} >= {limit:?}"
    );
    println!("[PASS] {criterion} ({elapsed:.1?})");
}

fn assert_clean(report: &SuiteReport) {
    assert!(
        report.all_passed(),
        "suite {} reported failures: {:#?}",
        report.suite,
        report.failures
    );
    assert_eq!(
        report.cases_passed + report.failures.len(),
        report.cases_run
    );
    assert!(report.cases_run > 0, "suite {} ran no cases", report.suite);
}

#[test]
fn criterion_01_path_formulas_match_brute_force() {
    let started = Instant::now();
    let report = run_suite(
        SuiteName::Paths,
        &SuiteParams {
            max_n: Some(12),
            max_k: Some(3),
            ..SuiteParams::default()
        },
    )
    .unwrap();
    assert_clean(&report);
    finish(
        "criterion 1: path values match brute force for n <= 12, k <= 3",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_02_sb2_of_paths() {
    let started = Instant::now();
    for n in 4..=12 {
        let g = FamilySpec::Path(n).generate().unwrap();
        let brute = sb_k(&g, 2, &mut Meter::with_defaults()).unwrap().size;
        assert_eq!(sb2_path_formula(n).unwrap(), brute, "two-step formula, n={n}");
        assert_eq!(
            sbk_path_formula(n, 2).unwrap(),
            brute,
            "general formula at k=2, n={n}"
        );
    }
    finish(
        "criterion 2: two-step path values agree with brute force and the general formula",
        started,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_03_cycle_formulas_match_brute_force() {
    let started = Instant::now();
    let report = run_suite(
        SuiteName::Cycles,
        &SuiteParams {
            max_n: Some(12),
            max_k: Some(3),
            ..SuiteParams::default()
        },
    )
    .unwrap();
    assert_clean(&report);
    finish(
        "criterion 3: cycle values match brute force for n <= 12, k <= 3",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_04_complete_graph_formula() {
    let started = Instant::now();
    // Defaults: every feasible k for n <= 6, and k <= 2 at n = 7.
    let report = run_suite(SuiteName::Complete, &SuiteParams::default()).unwrap();
    assert_clean(&report);
    assert!(report.cases_run >= 17, "expected all feasible k cases");
    finish(
        "criterion 4: complete-graph values match brute force (n <= 6 all k; n = 7, k <= 2)",
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_05_stepwise_theorem() {
    let started = Instant::now();
    let report = run_suite(
        SuiteName::Stepwise,
        &SuiteParams {
            max_n: Some(5),
            samples: Some(1000),
            ..SuiteParams::default()
        },
    )
    .unwrap();
    assert_clean(&report);
    // Every connected graph of order 4..5 feasible for k=2 contributes at
    // least the upper-bound case, plus 1000 sampled graphs at order 6.
    assert!(report.cases_run > 1000);
    finish(
        "criterion 5: Sb2 = b + b(MBG) whenever b(MBG) <= 2, and Sb2 <= b + b(MBG) always",
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_06_degree_sum_bounds() {
    let started = Instant::now();
    let report = run_suite(
        SuiteName::Bounds,
        &SuiteParams {
            max_n: Some(6),
            ..SuiteParams::default()
        },
    )
    .unwrap();
    assert_clean(&report);
    finish(
        "criterion 6: Sb2 respects both degree-sum bounds on connected graphs up to order 6",
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_07_vizing_bound_and_extremal_graphs() {
    let started = Instant::now();
    let report = run_suite(
        SuiteName::Vizing,
        &SuiteParams {
            max_n: Some(6),
            ..SuiteParams::default()
        },
    )
    .unwrap();
    assert_clean(&report);
    finish(
        "criterion 7: max edge count per domination number matches the bound and is attained",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_08_tree_sharpness_and_window() {
    let started = Instant::now();
    // Figure value: the k = 2 spider needs exactly 4 removals.
    let spider2 = FamilySpec::Spider(2).generate().unwrap();
    assert_eq!(sb_k(&spider2, 2, &mut Meter::with_defaults()).unwrap().size, 4);
    for k in 1..=4 {
        let star = FamilySpec::Star(k).generate().unwrap();
        assert_eq!(
            sb_k(&star, k, &mut Meter::with_defaults()).unwrap().size,
            k,
            "star lower bound, k={k}"
        );
        let spider = FamilySpec::Spider(k).generate().unwrap();
        assert_eq!(
            sb_k(&spider, k, &mut Meter::with_defaults()).unwrap().size,
            2 * k,
            "spider upper bound, k={k}"
        );
    }
    // Random trees stay inside [k, 2k] for every feasible k <= 3.
    let report = run_suite(SuiteName::Trees, &SuiteParams::default()).unwrap();
    assert_clean(&report);
    finish(
        "criterion 8: star/spider sharpness at k <= 4 and the [k, 2k] window on random trees",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_09_pendant_structure() {
    let started = Instant::now();
    let report = run_suite(
        SuiteName::Pendant,
        &SuiteParams {
            max_n: Some(6),
            ..SuiteParams::default()
        },
    )
    .unwrap();
    assert_clean(&report);
    finish(
        "criterion 9: forced vertices, unit bondage, and the pendant-surplus value up to order 6",
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_10_lower_bound_and_monotone_step() {
    let started = Instant::now();
    let mut checked = 0usize;
    for n in 1..=5 {
        for g in enumerate_labeled_graphs(n, false, DEFAULT_ENUMERATION_CAP).unwrap() {
            // Values for k = 1..=4 cover the monotone pairs up to k = 3.
            let table = sb_table(&g, 4, &mut Meter::with_defaults()).unwrap();
            for k in 1..=3usize {
                if let Some(size) = table[k - 1] {
                    assert!(size >= k, "Sb_{k} >= {k} failed on {}", to_graph6(&g));
                    checked += 1;
                }
                if let (Some(a), Some(b)) = (table[k - 1], table[k]) {
                    assert!(
                        b > a,
                        "monotone step failed on {} at k={k}: {a} then {b}",
                        to_graph6(&g)
                    );
                }
            }
        }
    }
    assert!(checked > 500, "expected many feasible cases, got {checked}");
    finish(
        "criterion 10: Sb_k >= k and Sb_(k+1) >= Sb_k + 1 on all graphs up to order 5",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_11_disjoint_composition() {
    let started = Instant::now();
    let report = run_suite(
        SuiteName::Compose,
        &SuiteParams {
            samples: Some(100),
            max_k: Some(3),
            ..SuiteParams::default()
        },
    )
    .unwrap();
    assert_clean(&report);
    assert!(report.cases_run >= 100);
    finish(
        "criterion 11: composition over components matches direct values on 100 random pairs",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_12_sync_advantage_soundness() {
    let started = Instant::now();
    let mut stream: Vec<Graph> = Vec::new();
    for n in 1..=5 {
        stream.extend(enumerate_labeled_graphs(n, true, DEFAULT_ENUMERATION_CAP).unwrap());
    }
    let exhaustive = stream.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0xF1);
    stream.extend((0..150).map(|_| random_connected_graph(6, &mut rng)));

    // The scan asserts Sb2 <= b + b(MBG) internally on every feasible graph.
    let scan = search_sync_advantage(stream.clone(), &Budget::default()).unwrap();
    assert_eq!(scan.scanned, exhaustive + 150);
    assert_eq!(scan.budget_errors, 0);
    // Reported findings must be exactly the strict cases; re-derive each.
    for f in &scan.findings {
        assert!(f.sb2 < f.b_plus_bmbg(), "finding must be strict");
        let again = sbk_core::stepwise_check(&f.graph, &mut Meter::with_defaults()).unwrap();
        assert_eq!(again.sb2, f.sb2);
        assert_eq!(again.b + again.b_mbg, f.b_plus_bmbg());
    }
    // Strictness is impossible wherever the cheap-second-move condition
    // holds, so a finding can only come from a b(MBG) >= 3 graph.
    for f in &scan.findings {
        assert!(f.b_mbg >= 3, "strict case with b_mbg <= 2 on {}", to_graph6(&f.graph));
    }
    println!(
        "sync-advantage scan: {} graphs, {} skipped as infeasible, {} strict findings",
        scan.scanned,
        scan.skipped_infeasible,
        scan.findings.len()
    );
    finish(
        "criterion 12: sync-advantage scan sound on every tested graph, strict cases reported",
        started,
        Duration::from_secs(600),
    );
}

/// Frozen oracle spot-checks for the values quoted throughout the suites.
#[test]
fn derived_value_spot_checks() {
    let started = Instant::now();
    let k4 = FamilySpec::Complete(4).generate().unwrap();
    assert_eq!(oracle_sbk(&k4, 2), Some(5));

    let spider2 = FamilySpec::Spider(2).generate().unwrap();
    assert_eq!(oracle_sbk(&spider2, 2), Some(4));

    let p9 = FamilySpec::Path(9).generate().unwrap();
    assert_eq!(oracle_sbk(&p9, 3), Some(4));

    let c4 = FamilySpec::Cycle(4).generate().unwrap();
    assert_eq!(oracle_sbk(&c4, 1), Some(3));
    let c5 = FamilySpec::Cycle(5).generate().unwrap();
    assert_eq!(oracle_sbk(&c5, 1), Some(2));
    let c6 = FamilySpec::Cycle(6).generate().unwrap();
    assert_eq!(oracle_sbk(&c6, 1), Some(2));

    // Double star: Sb_2 = 2 via the pendant surplus.
    let ds = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
    assert_eq!(oracle_sbk(&ds, 2), Some(2));

    // P6 + P6 composes to 2.
    let p6 = FamilySpec::Path(6).generate().unwrap();
    let two = p6.disjoint_union(&p6).unwrap();
    assert_eq!(sb_k(&two, 2, &mut Meter::with_defaults()).unwrap().size, 2);

    // Infeasible increase surfaces as the dedicated error.
    let k2 = FamilySpec::Complete(2).generate().unwrap();
    assert!(matches!(
        sb_k(&k2, 2, &mut Meter::with_defaults()),
        Err(Error::InfeasibleIncrease { .. })
    ));
    finish(
        "spot checks: independently derived values frozen against the oracle",
        started,
        Duration::from_secs(120),
    );
}
