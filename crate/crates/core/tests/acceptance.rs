//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p mincover --test acceptance`. Every solution
//! emitted by any enumerator here goes through [`common::Checker`]; the last
//! criterion reports what those inline checks found.

mod common;

use std::ops::ControlFlow;
use std::process::ExitCode;
use std::time::Instant;

use common::{
    all_hypergraphs, brute_assignment_exists, connected_graph_classes, labeled_connected_graphs, random_bipartite,
    random_bounded_degree_graph, random_capacity, random_connected_graph, random_hypergraph, run_checked, Checker,
};
use mincover::capacitated::{
    cap_feasible, enumerate_capacitated_with, enumerate_connected_capacitated_vc, is_cap_feasible, search_bound,
    CapKind, SearchStrategy,
};
use mincover::connected_ds::enumerate_cds;
use mincover::connected_vc::{enumerate_cvc, valid_augmentations, AugmentationBudget};
use mincover::graph::families::petersen;
use mincover::graph::{
    check_basic_property, component_count, induced_components, is_dominating, is_induced_connected, BasicKind,
    CapacityFn, Graph, VertexSet,
};
use mincover::min_valid_aug::{enumerate_cvc_quasipoly, min_valid_aug};
use mincover::oracle::{brute_min_valid_aug, brute_minimal};
use mincover::reductions::{verify_reduction, ReductionKind};
use mincover::subsets::for_each_subset;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

struct Corpus {
    graphs: Vec<Graph>,
    classes: Vec<Graph>,
}

fn corpus() -> Corpus {
    let mut graphs = labeled_connected_graphs(6);
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(7..=8);
        let p = rng.gen_range(0.1..0.6);
        graphs.push(random_connected_graph(&mut rng, n, p));
    }
    Corpus {
        graphs,
        classes: connected_graph_classes(6),
    }
}

fn prop(g: &Graph, kind: BasicKind) -> impl Fn(&VertexSet) -> bool + '_ {
    move |x| check_basic_property(g, x, kind)
}

fn no_witness(_: &VertexSet) -> Result<(), String> {
    Ok(())
}

fn cvc_family(checker: &mut Checker, g: &Graph) -> Vec<VertexSet> {
    run_checked(
        checker,
        |sink| {
            enumerate_cvc(g, AugmentationBudget::bounded_degree(g), sink).unwrap();
        },
        prop(g, BasicKind::ConnectedVertexCover),
        Some(g),
        no_witness,
    )
}

fn first_mismatch(label: &str, g: &Graph, got: &[VertexSet], want: &[VertexSet]) -> Outcome {
    if got == want {
        Ok(String::new())
    } else {
        Err(format!("{label} mismatch on graph n={} edges={:?}: got {got:?}, want {want:?}", g.n(), g.edges().collect::<Vec<_>>()))
    }
}

fn criterion1(checker: &mut Checker, c: &Corpus, families: &mut Vec<Vec<VertexSet>>) -> Outcome {
    for g in &c.graphs {
        let got = cvc_family(checker, g);
        let want = brute_minimal(g.n(), prop(g, BasicKind::ConnectedVertexCover)).unwrap();
        first_mismatch("cvc", g, &got, &want)?;
        families.push(got);
    }
    Ok(format!("{} graphs", c.graphs.len()))
}

fn criterion2(checker: &mut Checker, c: &Corpus, families: &[Vec<VertexSet>]) -> Outcome {
    let quasi = |checker: &mut Checker, g: &Graph| {
        run_checked(
            checker,
            |sink| {
                enumerate_cvc_quasipoly(g, sink).unwrap();
            },
            prop(g, BasicKind::ConnectedVertexCover),
            Some(g),
            no_witness,
        )
    };
    for (g, want) in c.graphs.iter().zip(families) {
        first_mismatch("quasipoly", g, &quasi(checker, g), want)?;
    }
    let p = petersen();
    let want = cvc_family(checker, &p);
    first_mismatch("petersen", &p, &quasi(checker, &p), &want)?;

    let mut rng = StdRng::seed_from_u64(11);
    for i in 0..500 {
        let h = random_bipartite(&mut rng, 12);
        let got = min_valid_aug(&h).unwrap();
        let want = brute_min_valid_aug(&h).unwrap();
        if got != want {
            return Err(format!("bipartite instance {i} {h:?}: got {got:?}, want {want:?}"));
        }
    }
    Ok(format!("{} graphs + Petersen ({} solutions), 500 bipartite instances", c.graphs.len(), want.len()))
}

fn criterion3(checker: &mut Checker, c: &Corpus) -> Outcome {
    for g in &c.graphs {
        let got = run_checked(
            checker,
            |sink| {
                enumerate_cds(g, sink).unwrap();
            },
            prop(g, BasicKind::ConnectedDominatingSet),
            Some(g),
            no_witness,
        );
        let want = brute_minimal(g.n(), prop(g, BasicKind::ConnectedDominatingSet)).unwrap();
        first_mismatch("cds", g, &got, &want)?;
    }
    Ok(format!("{} graphs", c.graphs.len()))
}

fn capacitated_family(
    checker: &mut Checker,
    g: &Graph,
    c: &CapacityFn,
    kind: CapKind,
    strategy: SearchStrategy,
) -> Vec<VertexSet> {
    run_checked(
        checker,
        |sink| {
            enumerate_capacitated_with(g, c, kind, strategy, sink).unwrap();
        },
        |x| is_cap_feasible(g, c, x, kind),
        None,
        |x| match cap_feasible(g, c, x, kind) {
            Some(a) => a.validate(g, c, x).map_err(|e| e.to_string()),
            None => Err(format!("{x} has no witness")),
        },
    )
}

fn criterion4(checker: &mut Checker, c: &Corpus) -> Outcome {
    let mut rng = StdRng::seed_from_u64(13);
    let (mut instances, mut assignment_checks) = (0, 0u64);
    for g in &c.classes {
        for _ in 0..50 {
            let cap = random_capacity(&mut rng, g);
            for kind in [CapKind::VertexCover, CapKind::DominatingSet] {
                instances += 1;
                let want = brute_minimal(g.n(), |x| is_cap_feasible(g, &cap, x, kind)).unwrap();
                for strategy in [SearchStrategy::Scan, SearchStrategy::Alternating] {
                    let got = capacitated_family(checker, g, &cap, kind, strategy);
                    if got != want {
                        return Err(format!(
                            "{kind} {strategy:?} on n={} edges={:?} c={:?}: got {got:?}, want {want:?}",
                            g.n(),
                            g.edges().collect::<Vec<_>>(),
                            cap.as_slice()
                        ));
                    }
                }
                if g.m() <= 10 {
                    for mask in 0u32..1 << g.n() {
                        let x = VertexSet::from_members(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1));
                        assignment_checks += 1;
                        if is_cap_feasible(g, &cap, &x, kind) != brute_assignment_exists(g, &cap, &x, kind) {
                            return Err(format!("feasibility of {x} disagrees with assignment search, c={:?}", cap.as_slice()));
                        }
                    }
                }
            }
        }
    }
    let classes = instances;
    let labeled: Vec<&Graph> = c.graphs.iter().filter(|g| g.n() <= 6).collect();
    for g in &labeled {
        let cap = random_capacity(&mut rng, g);
        for kind in [CapKind::VertexCover, CapKind::DominatingSet] {
            instances += 1;
            let want = brute_minimal(g.n(), |x| is_cap_feasible(g, &cap, x, kind)).unwrap();
            let got = capacitated_family(checker, g, &cap, kind, SearchStrategy::Scan);
            if got != want {
                return Err(format!(
                    "{kind} on n={} edges={:?} c={:?}: got {got:?}, want {want:?}",
                    g.n(),
                    g.edges().collect::<Vec<_>>(),
                    cap.as_slice()
                ));
            }
        }
    }
    Ok(format!(
        "{} graph classes x 50 capacity functions x 2 kinds = {classes} instances with both strategies, plus {} labeled graphs x 1 capacity function x 2 kinds ({instances} instances total); {assignment_checks} feasibility checks vs assignment search",
        c.classes.len(),
        labeled.len()
    ))
}

fn criterion5(checker: &mut Checker, c: &Corpus) -> Outcome {
    let mut rng = StdRng::seed_from_u64(17);
    let small: Vec<&Graph> = c.graphs.iter().filter(|g| g.n() <= 6).collect();
    for g in &small {
        let cap = random_capacity(&mut rng, g);
        let holds = |x: &VertexSet| is_induced_connected(g, x) && is_cap_feasible(g, &cap, x, CapKind::VertexCover);
        let got = run_checked(
            checker,
            |sink| {
                enumerate_connected_capacitated_vc(g, &cap, sink).unwrap();
            },
            holds,
            Some(g),
            |x| match cap_feasible(g, &cap, x, CapKind::VertexCover) {
                Some(a) => a.validate(g, &cap, x).map_err(|e| e.to_string()),
                None => Err(format!("{x} has no witness")),
            },
        );
        let want = brute_minimal(g.n(), holds).unwrap();
        if got != want {
            return Err(format!(
                "n={} edges={:?} c={:?}: got {got:?}, want {want:?}",
                g.n(),
                g.edges().collect::<Vec<_>>(),
                cap.as_slice()
            ));
        }
    }
    Ok(format!("{} labeled graphs, one random capacity function each", small.len()))
}

fn criterion6() -> Outcome {
    let exhaustive = all_hypergraphs(4, 3);
    let mut rng = StdRng::seed_from_u64(19);
    let random: Vec<_> = (0..100).map(|_| random_hypergraph(&mut rng, 8, 6)).collect();
    let mut runs = 0;
    for h in exhaustive.iter().chain(&random) {
        for kind in ReductionKind::ALL {
            if kind == ReductionKind::CdsCobip && h.edges().is_empty() {
                continue;
            }
            let report = verify_reduction(h, kind).map_err(|e| format!("{kind} on {h:?}: {e}"))?;
            if !report.passed() {
                return Err(format!("{h:?}\n{report}"));
            }
            runs += 1;
        }
    }
    Ok(format!(
        "{} exhaustive + 100 random hypergraphs, {runs} gadget verifications",
        exhaustive.len()
    ))
}

/// Whether some `W ⊆ pool` with `|W| <= k` satisfies `ok(base ∪ W)`.
fn exists_subset(pool: &VertexSet, base: &VertexSet, k: usize, ok: impl Fn(&VertexSet) -> bool) -> Option<VertexSet> {
    let items: Vec<usize> = pool.iter().filter(|&u| !base.contains(u)).collect();
    let mut found = None;
    let _ = for_each_subset(&items, k, |w| {
        let mut trial = base.clone();
        w.iter().for_each(|&u| trial.insert(u));
        if ok(&trial) {
            found = Some(trial);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

fn triples(family: &[VertexSet]) -> impl Iterator<Item = (&VertexSet, &VertexSet, usize)> {
    family.iter().flat_map(move |x| {
        family
            .iter()
            .filter(move |y| *y != x)
            .flat_map(move |y| x.difference(y).to_vec().into_iter().map(move |v| (x, y, v)))
    })
}

fn criterion7(c: &Corpus) -> Outcome {
    let mut counts = [0u64; 5];
    for g in c.graphs.iter().filter(|g| g.n() <= 6) {
        let delta = g.max_degree();
        let cvc = brute_minimal(g.n(), prop(g, BasicKind::ConnectedVertexCover)).unwrap();
        for (x, y, v) in triples(&cvc) {
            let mut s = x.without(v);
            g.neighbors(v).iter().for_each(|&w| s.insert(w));
            let q = component_count(g, &s);
            if induced_components(g, &s).iter().any(|comp| comp.is_disjoint(y)) {
                return Err(format!("a component of {s} misses {y}"));
            }
            if exists_subset(y, &s, q.saturating_sub(1), |t| is_induced_connected(g, t)).is_none()
                || valid_augmentations(g, &s, q.saturating_sub(1)).unwrap().is_empty()
            {
                return Err(format!("no augmentation of size {} for {s} inside {y}", q - 1));
            }
            counts[0] += 1;
        }

        let cds = brute_minimal(g.n(), prop(g, BasicKind::ConnectedDominatingSet)).unwrap();
        for (x, y, v) in triples(&cds) {
            let rest = x.without(v);
            let Some(s) = exists_subset(y, &rest, delta, |t| is_dominating(g, t) && component_count(g, t) <= delta) else {
                return Err(format!("no dominating W of size <= {delta} for {x} - {v} inside {y}"));
            };
            counts[1] += 1;
            let q = component_count(g, &s);
            if exists_subset(y, &s, (2 * q).saturating_sub(2), |t| is_induced_connected(g, t)).is_none() {
                return Err(format!("no connector of size <= {} for {s} inside {y}", 2 * q - 2));
            }
            counts[2] += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(23);
    for g in &c.classes {
        for _ in 0..10 {
            let cap = random_capacity(&mut rng, g);
            for (slot, kind) in [(3, CapKind::VertexCover), (4, CapKind::DominatingSet)] {
                let bound = search_bound(g, &cap, kind);
                let family = brute_minimal(g.n(), |x| is_cap_feasible(g, &cap, x, kind)).unwrap();
                for (x, y, v) in triples(&family) {
                    if exists_subset(y, &x.without(v), bound, |t| is_cap_feasible(g, &cap, t, kind)).is_none() {
                        return Err(format!("{kind}: no W of size <= {bound} for {x} - {v} inside {y}"));
                    }
                    counts[slot] += 1;
                }
            }
        }
    }
    Ok(format!(
        "triples checked: augmentation {}, domination {}, connectors {}, capacitated cover {}, capacitated domination {}",
        counts[0], counts[1], counts[2], counts[3], counts[4]
    ))
}

fn criterion8(checker: &mut Checker) -> Outcome {
    const SEEDS: u64 = 5;
    const PREFIX: u64 = 100;
    let sizes = [20usize, 40, 80];
    let mut medians = Vec::new();
    for &n in &sizes {
        let mut gaps = Vec::new();
        for seed in 0..SEEDS {
            let mut rng = StdRng::seed_from_u64(1000 + seed * 31 + n as u64);
            let g = random_bounded_degree_graph(&mut rng, n, 3, n / 4);
            let holds = prop(&g, BasicKind::ConnectedVertexCover);
            let mut seen = std::collections::HashSet::new();
            let mut emitted = 0;
            let stats = enumerate_cvc(&g, AugmentationBudget::bounded_degree(&g), |x| {
                checker.check(x, &mut seen, &holds, Some(&g), no_witness);
                emitted += 1;
                if emitted >= PREFIX {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })
            .unwrap();
            gaps.push(stats.max_gap.as_secs_f64());
        }
        gaps.sort_by(|a, b| a.partial_cmp(b).unwrap());
        medians.push(gaps[gaps.len() / 2]);
    }
    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = medians.iter().map(|g| g.ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 3.0, ys.iter().sum::<f64>() / 3.0);
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    let detail = format!(
        "median max gap {} for n = 20, 40, 80; log-log slope {slope:.2} (limit 4.5)",
        medians.iter().map(|g| format!("{:.2e}s", g)).collect::<Vec<_>>().join(", ")
    );
    if slope <= 4.5 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let corpus = corpus();
    println!(
        "corpus: {} graphs ({} labeled on <= 6 vertices), {} classes on <= 6 vertices",
        corpus.graphs.len(),
        corpus.graphs.iter().filter(|g| g.n() <= 6).count(),
        corpus.classes.len()
    );
    let mut checker = Checker::default();
    let mut cvc_families = Vec::new();
    let mut lines: Vec<(u32, &str, Outcome, f64)> = Vec::new();
    let mut record = |id, name, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {id} [{status}] {name}: {detail} ({secs:.1}s)");
        lines.push((id, name, outcome, secs));
    };
    record(1, "connected vertex cover vs oracle", &mut || criterion1(&mut checker, &corpus, &mut cvc_families));
    record(2, "quasi-polynomial enumerator and augmentations", &mut || {
        criterion2(&mut checker, &corpus, &cvc_families)
    });
    record(3, "connected dominating set vs oracle", &mut || criterion3(&mut checker, &corpus));
    record(4, "capacitated cover/domination vs oracle", &mut || criterion4(&mut checker, &corpus));
    record(5, "connected capacitated cover vs oracle", &mut || criterion5(&mut checker, &corpus));
    record(6, "reduction gadgets", &mut criterion6);
    record(7, "neighborhood exchange witnesses", &mut || criterion7(&corpus));
    record(8, "empirical delay growth", &mut || criterion8(&mut checker));
    let violations = checker.violations.clone();
    let solutions = checker.solutions;
    record(9, "per-solution invariants", &mut || {
        if violations.is_empty() && solutions > 0 {
            Ok(format!("{solutions} emitted solutions checked, no violations"))
        } else {
            Err(format!("{} violations, first: {:?}", violations.len(), violations.first()))
        }
    });
    let failed: Vec<u32> = lines.iter().filter(|l| l.2.is_err()).map(|l| l.0).collect();
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        lines.len() - failed.len(),
        lines.len(),
        started.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
