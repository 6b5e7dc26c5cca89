//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::time::{Duration, Instant};

use partial_domination::audit::{
    check_big_gamma, check_ceiling_bound, check_half_bound, check_monotonicity,
    check_nordhaus_gaddum, sample_connected_coconnected, Check,
};
use partial_domination::closed_forms::{gamma_half_grid, gamma_half_torus, grid_ratio_report};
use partial_domination::engine::{
    big_gamma_p_exact, coverage, gamma_exact, gamma_p_binary_search, gamma_p_exact,
    is_minimal_p_dominating, is_p_dominating, oracle_gamma_p, t_dom_decision, ORACLE_MAX_VERTICES,
};
use partial_domination::{FamilySpec, Graph, Proportion, VertexSet};

const CYCLE_BUDGET: Duration = Duration::from_secs(10);
const BOUNDS_BUDGET: Duration = Duration::from_secs(120);
const SAMPLE_COUNT: u64 = 200;
const DECISION_SAMPLES: usize = 50;
const RATIO_TOLERANCE: f64 = 0.02;

type Outcome = Result<String, String>;

fn ps() -> Vec<Proportion> {
    ["1/4", "1/3", "1/2", "2/3", "3/4", "1/1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

fn build(spec: FamilySpec) -> Graph {
    spec.build().unwrap()
}

/// Oracle at desk scale, branch-and-bound above it.
fn solve(g: &Graph, p: Proportion) -> usize {
    if g.n() <= ORACLE_MAX_VERTICES {
        oracle_gamma_p(g, p).unwrap().cardinality
    } else {
        gamma_p_exact(g, p).cardinality
    }
}

fn expect_eq(what: String, got: usize, want: usize, errs: &mut Vec<String>) {
    if got != want {
        errs.push(format!("{what}: solver {got}, formula {want}"));
    }
}

fn finish(errs: Vec<String>, ok: String) -> Outcome {
    if errs.is_empty() {
        Ok(ok)
    } else {
        Err(errs.join("; "))
    }
}

struct Corpus {
    /// Every graph touched by criteria 1-7 together with the proportions used on it.
    graphs: Vec<(String, Graph, Vec<Proportion>)>,
    samples: Vec<Graph>,
}

fn cycles(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let mut errs = Vec::new();
    for n in 3..=60 {
        let g = build(FamilySpec::Cycle(n));
        let got = if n <= 24 {
            oracle_gamma_p(&g, Proportion::HALF).unwrap().cardinality
        } else {
            gamma_p_exact(&g, Proportion::HALF).cardinality
        };
        expect_eq(format!("C_{n}"), got, n.div_ceil(6), &mut errs);
        corpus
            .graphs
            .push((format!("cycle:{n}"), g, vec![Proportion::HALF]));
    }
    let elapsed = start.elapsed();
    if elapsed > CYCLE_BUDGET {
        errs.push(format!("took {elapsed:?}, budget {CYCLE_BUDGET:?}"));
    }
    finish(errs, format!("n in [3,60], {elapsed:.2?}"))
}

fn paths(corpus: &mut Corpus) -> Outcome {
    let mut errs = Vec::new();
    for n in 1..=60 {
        let g = build(FamilySpec::Path(n));
        let got = if n <= 24 {
            oracle_gamma_p(&g, Proportion::HALF).unwrap().cardinality
        } else {
            gamma_p_exact(&g, Proportion::HALF).cardinality
        };
        expect_eq(format!("P_{n}"), got, n.div_ceil(6), &mut errs);
        corpus
            .graphs
            .push((format!("path:{n}"), g, vec![Proportion::HALF]));
    }
    finish(errs, "n in [1,60]".into())
}

fn grids(corpus: &mut Corpus) -> Outcome {
    let mut errs = Vec::new();
    let cases = (2..=12)
        .map(|n| (2, n))
        .chain((3..=8).map(|n| (3, n)))
        .chain((4..=6).map(|n| (4, n)));
    let mut count = 0;
    for (m, n) in cases {
        let g = build(FamilySpec::Grid(m, n));
        let formula = if m == 2 {
            n.div_ceil(4)
        } else {
            (m * n).div_ceil(10)
        };
        expect_eq(
            format!("P_{m} x P_{n} (possible erratum)"),
            solve(&g, Proportion::HALF),
            formula,
            &mut errs,
        );
        expect_eq(
            format!("gamma_half_grid({m},{n})"),
            gamma_half_grid(m, n).unwrap().value,
            formula,
            &mut errs,
        );
        corpus
            .graphs
            .push((format!("grid:{m},{n}"), g, vec![Proportion::HALF]));
        count += 1;
    }
    finish(errs, format!("{count} grids"))
}

fn tori(corpus: &mut Corpus) -> Outcome {
    let mut errs = Vec::new();
    for n in 3..=7 {
        let g = build(FamilySpec::Torus(3, n));
        let formula = (3 * n).div_ceil(10);
        expect_eq(
            format!("C_3 x C_{n}"),
            solve(&g, Proportion::HALF),
            formula,
            &mut errs,
        );
        expect_eq(
            format!("gamma_half_torus(3,{n})"),
            gamma_half_torus(3, n).unwrap().value,
            formula,
            &mut errs,
        );
        corpus
            .graphs
            .push((format!("torus:3,{n}"), g, vec![Proportion::HALF]));
    }
    finish(errs, "m = 3, n in [3,7]".into())
}

/// All ordered part-size tuples with at least two parts and total at most `max`.
fn compositions(max: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, remaining: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        for part in 1..=remaining {
            prefix.push(part);
            extend(prefix, remaining - part, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max, &mut out);
    out
}

fn multipartite(corpus: &mut Corpus) -> Outcome {
    let mut errs = Vec::new();
    let tuples = compositions(16);
    for parts in &tuples {
        let g = build(FamilySpec::CompleteMultipartite(parts.clone()));
        let got = gamma_p_exact(&g, Proportion::HALF).cardinality;
        if got != 1 {
            errs.push(format!("K_{parts:?}: {got}"));
        }
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            corpus
                .graphs
                .push((format!("multipartite:{parts:?}"), g, vec![Proportion::HALF]));
        }
    }
    let k35 = build(FamilySpec::CompleteMultipartite(vec![3, 5]));
    let w = gamma_p_exact(&k35, Proportion::HALF).witness;
    let cov = coverage(&k35, &w);
    if !(w.len() == 1 && w.iter().all(|v| v < 3) && cov == 6 && k35.n() == 8) {
        errs.push(format!("K_3,5 witness {w} covers {cov} of {}", k35.n()));
    }
    finish(
        errs,
        format!("{} part tuples, K_3,5 witness covers 6/8", tuples.len()),
    )
}

fn spider(corpus: &mut Corpus) -> Outcome {
    let g = build(FamilySpec::Spider(8));
    let mut errs = Vec::new();
    let half = gamma_p_exact(&g, Proportion::HALF);
    if half.cardinality != 1 || half.witness.to_vec() != vec![0] {
        errs.push(format!(
            "gamma_1/2 = {} with witness {}",
            half.cardinality, half.witness
        ));
    }
    let full = gamma_exact(&g);
    let oracle = oracle_gamma_p(&g, Proportion::ONE).unwrap().cardinality;
    if full.cardinality != 8 || oracle != 8 {
        errs.push(format!("gamma = {} (oracle {oracle})", full.cardinality));
    }
    let middles = VertexSet::from_vertices(17, 1..=8);
    if full.witness != middles {
        errs.push(format!(
            "canonical gamma-set {} is not the middle vertices",
            full.witness
        ));
    }
    if !full.witness.is_disjoint(&half.witness) {
        errs.push("gamma_1/2-set meets the gamma-set".into());
    }
    corpus.graphs.push((
        "spider:8".into(),
        g,
        vec![Proportion::HALF, Proportion::ONE],
    ));
    finish(
        errs,
        "gamma_1/2 = 1 via {0}, gamma = 8 via middles, disjoint".into(),
    )
}

fn violations(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| c.is_violation() || !c.hypothesis_met)
        .map(|c| {
            format!(
                "{} {} lhs={} rhs={} hyp={}",
                c.tag, c.params, c.lhs, c.rhs, c.hypothesis_met
            )
        })
        .collect()
}

fn bounds(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let mut errs = Vec::new();
    let mut checked = 0;
    for seed in 0..SAMPLE_COUNT {
        let n = 5 + (seed % 10) as usize;
        let g = sample_connected_coconnected(n, Proportion::HALF, seed).unwrap();
        let mut checks = check_monotonicity(&g, &ps());
        for p in ps() {
            checks.push(check_ceiling_bound(&g, p));
            checks.extend(check_nordhaus_gaddum(&g, p));
        }
        checks.push(check_half_bound(&g));
        checked += checks.len();
        errs.extend(
            violations(&checks)
                .into_iter()
                .map(|v| format!("seed {seed}: {v}")),
        );
        corpus.samples.push(g.clone());
        corpus.graphs.push((format!("sample-{seed}"), g, ps()));
    }
    let elapsed = start.elapsed();
    if elapsed > BOUNDS_BUDGET {
        errs.push(format!("took {elapsed:?}, budget {BOUNDS_BUDGET:?}"));
    }
    finish(
        errs,
        format!("{SAMPLE_COUNT} samples, {checked} checks, 0 violations, {elapsed:.2?}"),
    )
}

fn complete_graphs() -> Outcome {
    let mut errs = Vec::new();
    for n in 1..=12 {
        let g = Graph::complete(n);
        let half = gamma_p_exact(&g, Proportion::HALF).cardinality;
        let gamma = gamma_exact(&g).cardinality;
        let ceiled = gamma.div_ceil(2);
        if !(half == 1 && gamma == 1 && half <= ceiled && 2 * half > gamma) {
            errs.push(format!("K_{n}: gamma_1/2={half} gamma={gamma}"));
        }
    }
    finish(
        errs,
        "n in [1,12]: gamma_1/2 = 1 = ceil(gamma/2) and 2 * gamma_1/2 > gamma".into(),
    )
}

/// Largest minimal p-dominating set by enumerating every subset.
fn upper_by_enumeration(g: &Graph, p: Proportion) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .map(|m| VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1)))
        .filter(|s| is_minimal_p_dominating(g, s, p))
        .map(|s| s.len())
        .max()
        .unwrap()
}

fn upper_domination(corpus: &Corpus) -> Outcome {
    let mut errs = Vec::new();
    let p6 = build(FamilySpec::Path(6));
    let searched = big_gamma_p_exact(&p6, Proportion::HALF)
        .unwrap()
        .cardinality;
    let enumerated = upper_by_enumeration(&p6, Proportion::HALF);
    let leaves = VertexSet::from_vertices(6, [0, 5]);
    if searched != enumerated {
        errs.push(format!(
            "Gamma_1/2(P_6): search {searched}, enumeration {enumerated}"
        ));
    }
    if !(is_p_dominating(&p6, &leaves, Proportion::HALF)
        && is_minimal_p_dominating(&p6, &leaves, Proportion::HALF))
    {
        errs.push("two leaves are not a minimal 1/2-dominating set".into());
    }
    if searched < 2 {
        errs.push(format!("Gamma_1/2(P_6) = {searched} < 2"));
    }
    let mut graphs = 0;
    for g in corpus.samples.iter().filter(|g| g.n() <= 14) {
        graphs += 1;
        for p in ps() {
            let c = check_big_gamma(g, p).unwrap();
            if c.is_violation() {
                errs.push(format!(
                    "n={} p={p}: gamma_p={} > Gamma_p={}",
                    g.n(),
                    c.lhs,
                    c.rhs
                ));
            }
        }
    }
    finish(
        errs,
        format!("Gamma_1/2(P_6) = {searched}; gamma_p <= Gamma_p on {graphs} samples"),
    )
}

fn binary_search(corpus: &Corpus) -> Outcome {
    let mut errs = Vec::new();
    let mut solves = 0;
    for (label, g, ps) in &corpus.graphs {
        for &p in ps {
            let a = gamma_p_exact(g, p).cardinality;
            let b = gamma_p_binary_search(g, p).cardinality;
            solves += 1;
            if a != b {
                errs.push(format!("{label} p={p}: exact {a}, binary search {b}"));
            }
        }
    }
    let small: Vec<&Graph> = corpus
        .samples
        .iter()
        .filter(|g| g.n() <= 12)
        .take(DECISION_SAMPLES)
        .collect();
    if small.len() < DECISION_SAMPLES {
        errs.push(format!("only {} samples with n <= 12", small.len()));
    }
    for g in &small {
        for p in ps() {
            let t = p.threshold(g.n());
            let feasible: Vec<bool> = (0..=g.n())
                .map(|k| t_dom_decision(g, t, k).is_some())
                .collect();
            if feasible.windows(2).any(|w| w[0] && !w[1]) {
                errs.push(format!(
                    "decision not monotone in k: n={} t={t} {feasible:?}",
                    g.n()
                ));
            }
        }
    }
    finish(
        errs,
        format!(
            "{solves} solves agree; monotone in k on {} samples",
            small.len()
        ),
    )
}

fn ratio() -> Outcome {
    let mut errs = Vec::new();
    let r16 = grid_ratio_report(16, 16).unwrap();
    if (r16.half_domination, r16.domination) != (26, 60) || !r16.below_half() {
        errs.push(format!("(16,16) ratio {r16}"));
    }
    let r1000 = grid_ratio_report(1000, 1000).unwrap();
    if (r1000.as_f64() - 0.5).abs() > RATIO_TOLERANCE {
        errs.push(format!("(1000,1000) ratio {r1000} = {}", r1000.as_f64()));
    }
    finish(
        errs,
        format!(
            "(16,16) = {r16}; (1000,1000) = {r1000} = {:.4}",
            r1000.as_f64()
        ),
    )
}

fn main() {
    let mut corpus = Corpus {
        graphs: Vec::new(),
        samples: Vec::new(),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("1 cycle formula", cycles(&mut corpus)),
        ("2 path formula", paths(&mut corpus)),
        ("3 grid formulas", grids(&mut corpus)),
        ("4 torus formula", tori(&mut corpus)),
        ("5 complete multipartite", multipartite(&mut corpus)),
        ("6 spider disjointness", spider(&mut corpus)),
        ("7 bounds on samples", bounds(&mut corpus)),
        ("8 complete graph ceiling", complete_graphs()),
        ("9 upper p-domination", upper_domination(&corpus)),
        ("10 binary search", binary_search(&corpus)),
        ("11 grid ratio", ratio()),
    ];

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
