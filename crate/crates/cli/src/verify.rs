//! Named verification suites. Each suite is a list of checks; a check runs
//! over many cases in parallel and records the cases that fail.

use clap::ValueEnum;
use greedy_mis::chordal::{is_chordal, leafage_small, maximal_cliques};
use greedy_mis::families::{generate, random_chordal, random_interval, Family};
use greedy_mis::greedy::{adversarial_value, benevolent_value, greedy_run, TieBreakPolicy};
use greedy_mis::ledger::{
    all_moves, check_charging_bound, check_component_floor, check_disconnection, check_identity, classify,
    classify_interval, leafage_ratio_bound, min_charging_margin, min_m01_over_executions, ratio_bound_from_counts,
};
use greedy_mis::mis::{maximum_independent_sets, mis_bruteforce, mis_chordal, mis_exact};
use greedy_mis::{Graph, Rational, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::SCHEMA_VERSION;

/// Failures kept per check in the report.
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Expected greedy and optimum sizes for every structured family.
    TightFamilies,
    /// Move identity and the chordal move-count checks on random graphs.
    LedgerFuzz,
    /// Exact solvers and exhaustive search against brute force.
    Oracle,
    /// Adversarial ratio floors on random chordal and interval graphs.
    RatioFloors,
    /// No j-move with j >= 3 on interval graphs.
    IntervalCutoff,
    /// Adversarial ratio against the leafage bound.
    Leafage,
    /// Greedy is optimal when the maximum degree is at most two.
    DegreeTwo,
    /// Simplicial-first greedy on interval graphs of maximum degree three.
    SimplicialFirst,
    /// Every suite above.
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Self::TightFamilies => "tight-families",
            Self::LedgerFuzz => "ledger-fuzz",
            Self::Oracle => "oracle",
            Self::RatioFloors => "ratio-floors",
            Self::IntervalCutoff => "interval-cutoff",
            Self::Leafage => "leafage",
            Self::DegreeTwo => "degree-two",
            Self::SimplicialFirst => "simplicial-first",
            Self::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyOptions {
    /// Largest family parameter for `tight-families`.
    pub kmax: usize,
    /// Largest random graph size.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Vertex cap for exhaustive search.
    pub limit: usize,
    /// Vertex cap for brute force and branch and bound.
    pub exact_limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub failed: usize,
    /// Up to twenty failing cases.
    pub failures: Vec<String>,
}

impl SuiteCheck {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub options: VerifyOptions,
    pub checks: Vec<SuiteCheck>,
    pub passed: bool,
}

type CaseResult = Result<(), String>;

/// Runs `case` on every item in parallel; results are gathered in order.
fn over<T: Send>(
    suite: &'static str,
    name: &'static str,
    items: Vec<T>,
    case: impl Fn(T) -> CaseResult + Send + Sync,
) -> SuiteCheck {
    let cases = items.len();
    let errors: Vec<String> =
        items.into_par_iter().map(case).collect::<Vec<_>>().into_iter().filter_map(Result::err).collect();
    SuiteCheck {
        suite,
        name,
        cases,
        failed: errors.len(),
        failures: errors.into_iter().take(MAX_LISTED_FAILURES).collect(),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> CaseResult {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: greedy_mis::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den.max(1) as i64)
}

/// Sizes `1..=n` cycling with the seed, so every size is covered.
fn size_for(seed: u64, n: usize) -> usize {
    1 + (seed as usize % n.max(1))
}

fn seeds(o: &VerifyOptions) -> Vec<u64> {
    (0..o.trials as u64).map(|t| o.seed.wrapping_add(t)).collect()
}

fn random_independent_set(g: &Graph, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut order = g.present().to_vec();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut i = VertexSet::new();
    for v in order {
        if rng.gen_bool(0.7) && g.raw_neighbors(v).is_disjoint(&i) {
            i.insert(v);
        }
    }
    i
}

fn tight_families(o: &VerifyOptions) -> Vec<SuiteCheck> {
    const S: &str = "tight-families";
    let mut cases = Vec::new();
    for family in [Family::IntervalTight, Family::ChordalTight, Family::Permutation, Family::TwoTrack] {
        for k in family.min_parameter()..=o.kmax.max(family.min_parameter()) {
            cases.push((family, k));
        }
    }
    let limit = o.limit;
    let exact_limit = o.exact_limit;
    let run = |(family, k): (Family, usize)| -> CaseResult {
        let inst = lift(generate(family, k, None), "generate")?;
        let g = &inst.graph;
        let tag = format!("{family} k={k}");
        let script = TieBreakPolicy::Scripted(inst.adversarial_script.clone().unwrap_or_default());
        let t = lift(greedy_run(g, &script), &tag)?;
        let opt = if is_chordal(g) { lift(mis_chordal(g), &tag)? } else { lift(mis_exact(g, exact_limit), &tag)? };
        let (want_greedy, want_opt) = match family {
            Family::IntervalTight => (2 * k + 1, 3 * k + 1),
            Family::ChordalTight => (k + 1, 2 * k),
            _ => (2, k),
        };
        ensure(t.len() == want_greedy, || format!("{tag}: scripted greedy {} != {want_greedy}", t.len()))?;
        ensure(opt.size == want_opt, || format!("{tag}: optimum {} != {want_opt}", opt.size))?;
        let cert = inst.optimum_certificate.clone().unwrap_or_default();
        ensure(cert.len() == want_opt && lift(g.is_independent_set(&cert), &tag)?, || {
            format!("{tag}: certificate is not an optimum")
        })?;
        let l = lift(classify(g, &t, &cert), &tag)?;
        ensure(check_identity(&l), || format!("{tag}: identity fails"))?;
        match family {
            Family::IntervalTight => {
                ensure(l.m(2) == k && l.m01() == k + 1, || format!("{tag}: counts {:?}", l.counts))?;
                ensure(g.max_degree().ok() == Some(3), || format!("{tag}: max degree is not 3"))?;
            }
            Family::ChordalTight => {
                ensure(l.records[0].j == k, || format!("{tag}: first pick is a {}-move", l.records[0].j))?;
            }
            _ => {
                ensure(g.max_degree().ok() == Some(2 * k - 2), || format!("{tag}: max degree is not 2k-2"))?;
            }
        }
        if g.order() <= limit {
            let worst = lift(adversarial_value(g, limit), &tag)?.0;
            ensure(worst == want_greedy, || format!("{tag}: adversarial value {worst} != {want_greedy}"))?;
        }
        Ok(())
    };
    vec![over(S, "family_expectations", cases, run)]
}

fn ledger_fuzz(o: &VerifyOptions) -> Vec<SuiteCheck> {
    const S: &str = "ledger-fuzz";
    let (n, limit) = (o.n, o.limit);
    let identity = over(S, "move_identity", seeds(o), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = size_for(seed, n);
        let g = match seed % 3 {
            0 => lift(random_chordal(size, seed), "generate")?.graph,
            1 => lift(random_interval(size, seed), "generate")?.graph,
            _ => {
                let p = rng.gen_range(0.05..0.6);
                let edges: Vec<(usize, usize)> =
                    (0..size).flat_map(|u| (u + 1..size).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
                lift(Graph::from_edges(size, edges), "graph")?
            }
        };
        let t = lift(greedy_run(&g, &TieBreakPolicy::SeededRandom(rng.gen())), "greedy")?;
        let i = random_independent_set(&g, &mut rng);
        let l = lift(classify(&g, &t, &i), "classify")?;
        ensure(check_identity(&l), || format!("seed {seed}: identity fails"))
    });
    let chordal = over(S, "chordal_move_checks", seeds(o), |seed| {
        let g = lift(random_chordal(size_for(seed, n), seed), "generate")?.graph;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let opt = lift(mis_chordal(&g), "mis")?.set;
        let arbitrary = random_independent_set(&g, &mut rng);
        let mut traces = vec![lift(greedy_run(&g, &TieBreakPolicy::SeededRandom(seed)), "greedy")?];
        if g.order() <= limit {
            traces.push(lift(adversarial_value(&g, limit), "adversarial")?.1);
        }
        for (which, i) in [("maximum", &opt), ("arbitrary", &arbitrary)] {
            for t in &traces {
                let l = lift(classify(&g, t, i), "classify")?;
                let tag = format!("seed {seed}, {which} set, trace {:?}", t.vertices());
                ensure(lift(check_disconnection(&g, &l), &tag)?, || format!("{tag}: disconnection"))?;
                ensure(check_component_floor(&g, &l), || format!("{tag}: component floor"))?;
                ensure(lift(check_charging_bound(&g, &l), &tag)?, || format!("{tag}: charging bound"))?;
                if which == "maximum" {
                    let r = ratio(t.len(), i.len());
                    let b = ratio_bound_from_counts(&l.counts);
                    ensure(r >= b, || format!("{tag}: ratio {r} below move bound {b}"))?;
                }
            }
            if g.order() <= limit {
                let margin = lift(min_charging_margin(&g, i, limit), "margin")?;
                let floor = lift(min_m01_over_executions(&g, i, limit), "floor")?;
                ensure(margin >= 1, || {
                    format!("seed {seed}, {which} set: some execution has charging margin {margin}")
                })?;
                ensure(floor >= 1, || format!("seed {seed}, {which} set: some execution has m0+m1 = {floor}"))?;
                for m in lift(all_moves(&g, i, limit), "moves")? {
                    ensure(m.j < 2 || m.components_after + 1 >= m.components_before + m.j, || {
                        format!("seed {seed}, {which} set: {}-move at {} splits too little", m.j, m.vertex)
                    })?;
                }
            }
        }
        Ok(())
    });
    vec![identity, chordal]
}

fn oracle(o: &VerifyOptions) -> Vec<SuiteCheck> {
    const S: &str = "oracle";
    let (n, limit, exact_limit) = (o.n, o.limit, o.exact_limit);
    let mis = over(S, "chordal_mis_vs_brute_force", seeds(o), |seed| {
        let g = lift(random_chordal(size_for(seed, n), seed), "generate")?.graph;
        let fast = lift(mis_chordal(&g), "mis_chordal")?;
        let slow = lift(mis_bruteforce(&g, exact_limit), "mis_bruteforce")?;
        ensure(lift(g.is_independent_set(&fast.set), "independence")?, || format!("seed {seed}: dependent output"))?;
        ensure(fast.size == slow.size, || format!("seed {seed}: {} vs {}", fast.size, slow.size))
    });
    let sandwich = over(S, "greedy_sandwich", seeds(o), |seed| {
        let g = lift(random_interval(size_for(seed, n.min(limit)), seed), "generate")?.graph;
        let worst = lift(adversarial_value(&g, limit), "adversarial")?.0;
        let best = lift(benevolent_value(&g, limit), "benevolent")?.0;
        let some = lift(greedy_run(&g, &TieBreakPolicy::SeededRandom(seed)), "greedy")?.len();
        let alpha = lift(mis_bruteforce(&g, exact_limit), "mis")?.size;
        ensure(worst <= some && some <= best && best <= alpha, || {
            format!("seed {seed}: {worst} <= {some} <= {best} <= {alpha} fails")
        })
    });
    vec![mis, sandwich]
}

fn ratio_floors(o: &VerifyOptions) -> Vec<SuiteCheck> {
    const S: &str = "ratio-floors";
    let (n, limit) = (o.n.min(o.limit), o.limit);
    let chordal = over(S, "chordal_above_half", seeds(o), |seed| {
        let g = lift(random_chordal(size_for(seed, n), seed), "generate")?.graph;
        let r = ratio(lift(adversarial_value(&g, limit), "adversarial")?.0, lift(mis_chordal(&g), "mis")?.size);
        ensure(r > Rational::new(1, 2), || format!("seed {seed}: ratio {r}"))
    });
    let interval = over(S, "interval_at_least_two_thirds", seeds(o), |seed| {
        let g = lift(random_interval(size_for(seed, n), seed), "generate")?.graph;
        let r = ratio(lift(adversarial_value(&g, limit), "adversarial")?.0, lift(mis_chordal(&g), "mis")?.size);
        ensure(r >= Rational::new(2, 3), || format!("seed {seed}: ratio {r}"))
    });
    vec![chordal, interval]
}

fn interval_cutoff(o: &VerifyOptions) -> Vec<SuiteCheck> {
    let (n, limit, exact_limit) = (o.n.min(o.limit), o.limit, o.exact_limit);
    vec![over("interval-cutoff", "no_three_moves", seeds(o), |seed| {
        let inst = lift(random_interval(size_for(seed, n), seed), "generate")?;
        let rep = inst.interval_representation().ok_or("missing intervals")?;
        let g = &inst.graph;
        let t = lift(adversarial_value(g, limit), "adversarial")?.1;
        for i in lift(maximum_independent_sets(g, exact_limit), "maximum sets")? {
            lift(classify_interval(g, rep, &t, &i), &format!("seed {seed}"))?;
            let j = lift(all_moves(g, &i, limit), "moves")?.iter().map(|m| m.j).max().unwrap_or(0);
            ensure(j <= 2, || format!("seed {seed}: some execution makes a {j}-move"))?;
        }
        Ok(())
    })]
}

fn leafage(o: &VerifyOptions) -> Vec<SuiteCheck> {
    let (n, limit) = (o.n.min(o.limit), o.limit);
    let kept: Vec<(u64, Graph)> = seeds(o)
        .into_iter()
        .filter_map(|seed| {
            let g = random_chordal(size_for(seed, n), seed).ok()?.graph;
            (maximal_cliques(&g).ok()?.len() <= 10).then_some((seed, g))
        })
        .collect();
    vec![over("leafage", "ratio_above_leafage_bound", kept, |(seed, g)| {
        let l = lift(leafage_small(&g, 10), "leafage")?;
        let b = lift(leafage_ratio_bound(l), "bound")?;
        let r = ratio(lift(adversarial_value(&g, limit), "adversarial")?.0, lift(mis_chordal(&g), "mis")?.size);
        ensure(r >= b, || format!("seed {seed}: leafage {l}, ratio {r} below {b}"))
    })]
}

fn degree_two(o: &VerifyOptions) -> Vec<SuiteCheck> {
    let (n, limit, exact_limit) = (o.n.min(o.limit), o.limit, o.exact_limit);
    vec![over("degree-two", "paths_and_cycles_optimal", seeds(o), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total = rng.gen_range(1..=n.max(1));
        let mut edges = Vec::new();
        let mut base = 0;
        while base < total {
            let len = rng.gen_range(1..=total - base);
            edges.extend((1..len).map(|i| (base + i - 1, base + i)));
            if len >= 3 && rng.gen_bool(0.5) {
                edges.push((base, base + len - 1));
            }
            base += len;
        }
        let g = lift(Graph::from_edges(total, edges), "graph")?;
        let worst = lift(adversarial_value(&g, limit), "adversarial")?.0;
        let alpha = lift(mis_bruteforce(&g, exact_limit), "mis")?.size;
        ensure(worst == alpha, || format!("seed {seed}: adversarial {worst}, optimum {alpha}"))
    })]
}

fn simplicial_first(o: &VerifyOptions) -> Vec<SuiteCheck> {
    let n = o.n.max(4);
    let mut kept = Vec::new();
    let mut seed = o.seed;
    while kept.len() < o.trials && seed.wrapping_sub(o.seed) < 1000 * o.trials as u64 + 1000 {
        if let Ok(inst) = random_interval(size_for(seed, n), seed) {
            if inst.graph.max_degree().is_ok_and(|d| d <= 3) {
                kept.push((seed, inst.graph));
            }
        }
        seed = seed.wrapping_add(1);
    }
    vec![over("simplicial-first", "optimal_at_degree_three", kept, |(seed, g)| {
        let t = lift(greedy_run(&g, &TieBreakPolicy::SimplicialFirst), "greedy")?;
        let opt = lift(mis_chordal(&g), "mis")?.size;
        ensure(t.len() == opt, || format!("seed {seed}: simplicial-first {}, optimum {opt}", t.len()))
    })]
}

pub fn verify(suite: Suite, options: VerifyOptions) -> VerifyReport {
    let suites = match suite {
        Suite::All => Suite::value_variants().iter().copied().filter(|s| *s != Suite::All).collect(),
        one => vec![one],
    };
    let mut checks = Vec::new();
    for s in suites {
        checks.extend(match s {
            Suite::TightFamilies => tight_families(&options),
            Suite::LedgerFuzz => ledger_fuzz(&options),
            Suite::Oracle => oracle(&options),
            Suite::RatioFloors => ratio_floors(&options),
            Suite::IntervalCutoff => interval_cutoff(&options),
            Suite::Leafage => leafage(&options),
            Suite::DegreeTwo => degree_two(&options),
            Suite::SimplicialFirst => simplicial_first(&options),
            Suite::All => unreachable!(),
        });
    }
    let passed = checks.iter().all(SuiteCheck::passed);
    VerifyReport { schema_version: SCHEMA_VERSION, suite, options, checks, passed }
}
