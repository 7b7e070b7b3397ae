//! The `run` report: one greedy execution on one instance, classified
//! against a maximum independent set, with every applicable check.

use std::collections::BTreeMap;

use clap::ValueEnum;
use greedy_mis::chordal::{is_chordal, leafage_small, DEFAULT_LEAFAGE_LIMIT};
use greedy_mis::greedy::{
    adversarial_value, benevolent_value, greedy_run_with_limit, validate_trace, GreedyTrace, TieBreakPolicy,
};
use greedy_mis::ledger::{
    check_charging_bound, check_charging_bound_componentwise, check_component_floor, check_disconnection,
    check_identity, classify, leafage_ratio_bound, max_j_observed, ratio_bound_from_counts, MoveLedger,
};
use greedy_mis::mis::{mis_exact, MisResult};
use greedy_mis::{Error, Rational};
use serde::Serialize;

use crate::fraction::Fraction;
use crate::instance::{Instance, Meta};
use crate::{CliError, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyTag {
    #[value(name = "first_label", alias = "first-label")]
    FirstLabel,
    Scripted,
    #[value(name = "seeded_random", alias = "seeded-random")]
    SeededRandom,
    #[value(name = "simplicial_first", alias = "simplicial-first")]
    SimplicialFirst,
    #[value(alias = "adversarial_exhaustive")]
    Adversarial,
    #[value(alias = "benevolent_exhaustive")]
    Benevolent,
}

impl PolicyTag {
    pub fn name(self) -> &'static str {
        match self {
            Self::FirstLabel => "first_label",
            Self::Scripted => "scripted",
            Self::SeededRandom => "seeded_random",
            Self::SimplicialFirst => "simplicial_first",
            Self::Adversarial => "adversarial",
            Self::Benevolent => "benevolent",
        }
    }

    /// The library policy, reading the script from `inst` when needed.
    pub fn resolve(self, inst: &Instance, seed: u64) -> Result<TieBreakPolicy, CliError> {
        Ok(match self {
            Self::FirstLabel => TieBreakPolicy::FirstLabel,
            Self::Scripted => TieBreakPolicy::Scripted(
                inst.script.clone().ok_or_else(|| CliError::usage("instance has no script.txt"))?,
            ),
            Self::SeededRandom => TieBreakPolicy::SeededRandom(seed),
            Self::SimplicialFirst => TieBreakPolicy::SimplicialFirst,
            Self::Adversarial => TieBreakPolicy::AdversarialExhaustive,
            Self::Benevolent => TieBreakPolicy::BenevolentExhaustive,
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub policy: PolicyTag,
    pub seed: u64,
    /// Vertex cap for exhaustive search.
    pub limit: usize,
    /// Vertex cap for the exact solver on non-chordal graphs.
    pub exact_limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `1 - sum (j-1) m_j / (1 + sum (2j-1) m_j)` from the ledger.
    pub move_count: Fraction,
    pub leafage: Option<usize>,
    pub leafage_bound: Option<Fraction>,
    pub max_degree: Option<usize>,
    /// `4 / (max_degree + 2)`.
    pub degree_bound: Option<Fraction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub instance: Meta,
    pub policy: PolicyTag,
    pub seed: u64,
    pub chordal: bool,
    pub connected: bool,
    pub trace: GreedyTrace,
    /// Solution sizes under every policy that applies to this instance.
    pub greedy_sizes: BTreeMap<&'static str, usize>,
    pub optimum: MisResult,
    /// Whether the ledger reference set is the instance certificate or the
    /// solver's optimum.
    pub reference: &'static str,
    pub ratio: Option<Fraction>,
    pub ledger: MoveLedger,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

fn check(checks: &mut Vec<CheckResult>, name: &'static str, passed: bool, detail: String) {
    checks.push(CheckResult { name, passed, detail });
}

/// Runs greedy under `opts.policy` and assembles the full report.
pub fn run(inst: &Instance, opts: RunOptions) -> Result<RunReport, CliError> {
    let g = &inst.graph;
    let policy = opts.policy.resolve(inst, opts.seed)?;
    let trace = greedy_run_with_limit(g, &policy, opts.limit)?;
    let optimum = mis_exact(g, opts.exact_limit)?;
    let chordal = is_chordal(g);
    let connected = g.is_connected();

    let mut greedy_sizes = BTreeMap::new();
    for tag in PolicyTag::value_variants() {
        let size = match tag {
            PolicyTag::Scripted if inst.script.is_none() => continue,
            PolicyTag::Adversarial if g.order() <= opts.limit => adversarial_value(g, opts.limit)?.0,
            PolicyTag::Benevolent if g.order() <= opts.limit => benevolent_value(g, opts.limit)?.0,
            PolicyTag::Adversarial | PolicyTag::Benevolent => continue,
            _ => greedy_run_with_limit(g, &tag.resolve(inst, opts.seed)?, opts.limit)?.len(),
        };
        greedy_sizes.insert(tag.name(), size);
    }

    let (reference, set) = match &inst.certificate {
        Some(c) if c.len() == optimum.size => ("certificate", c.clone()),
        _ => ("solver", optimum.set.clone()),
    };
    let ledger = classify(g, &trace, &set)?;
    let ratio = (optimum.size > 0).then(|| Rational::new(trace.len() as i64, optimum.size as i64));
    let move_bound = ratio_bound_from_counts(&ledger.counts);

    let leafage = if chordal && connected && !g.is_empty() {
        match leafage_small(g, DEFAULT_LEAFAGE_LIMIT) {
            Ok(l) => Some(l),
            Err(Error::SizeLimit { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let leafage_bound = leafage.map(leafage_ratio_bound).transpose()?;
    let max_degree = g.max_degree().ok();
    let degree_bound = max_degree.map(|d| Rational::new(4, d as i64 + 2));

    let mut checks = Vec::new();
    check(&mut checks, "trace_valid", validate_trace(g, &trace), format!("{} picks", trace.len()));
    check(
        &mut checks,
        "solution_independent",
        g.is_independent_set(&trace.solution)?,
        format!("{} vertices", trace.solution.len()),
    );
    let weighted: usize = ledger.records.iter().map(|r| r.j).sum();
    check(
        &mut checks,
        "move_identity",
        check_identity(&ledger),
        format!("sum of j over picks is {weighted}, reference set has {}", set.len()),
    );
    check(
        &mut checks,
        "component_floor",
        check_component_floor(g, &ledger),
        format!("m0+m1 = {}, components = {}", ledger.m01(), g.component_count()),
    );
    if chordal {
        check(
            &mut checks,
            "disconnection",
            check_disconnection(g, &ledger)?,
            "every j-move with j>=2 splits off j-1 components".into(),
        );
        let (passed, scope) = if connected {
            (check_charging_bound(g, &ledger)?, "whole graph")
        } else {
            (check_charging_bound_componentwise(g, &ledger), "per component")
        };
        check(&mut checks, "charging_bound", passed, format!("m0+m1 >= 1 + sum (j-1) m_j, {scope}"));
        if let Some(r) = ratio {
            check(&mut checks, "ratio_above_move_bound", r >= move_bound, format!("{r} >= {move_bound}"));
            if connected {
                let half = Rational::new(1, 2);
                check(&mut checks, "chordal_ratio_floor", r > half, format!("{r} > 1/2"));
            }
            if let Some(b) = leafage_bound {
                check(&mut checks, "leafage_ratio_bound", r >= b, format!("{r} >= {b}"));
            }
        }
    }
    if inst.intervals.is_some() {
        let j = max_j_observed(&ledger);
        check(&mut checks, "interval_move_cutoff", j <= 2, format!("largest j is {j}"));
        if let Some(r) = ratio {
            let floor = Rational::new(2, 3);
            check(&mut checks, "interval_ratio_floor", r >= floor, format!("{r} >= 2/3"));
        }
    }
    if max_degree.is_some_and(|d| d <= 2) {
        check(
            &mut checks,
            "degree_two_optimal",
            trace.len() == optimum.size,
            format!("greedy {}, optimum {}", trace.len(), optimum.size),
        );
    }
    if let Some(expected) = inst.meta.expected_opt {
        check(
            &mut checks,
            "expected_optimum",
            optimum.size == expected,
            format!("optimum {}, expected {expected}", optimum.size),
        );
    }
    if let (Some(expected), PolicyTag::Scripted | PolicyTag::Adversarial) = (inst.meta.expected_greedy, opts.policy) {
        check(
            &mut checks,
            "expected_greedy",
            trace.len() == expected,
            format!("greedy {}, expected {expected}", trace.len()),
        );
    }
    let passed = checks.iter().all(|c| c.passed);

    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        instance: inst.meta.clone(),
        policy: opts.policy,
        seed: opts.seed,
        chordal,
        connected,
        trace,
        greedy_sizes,
        optimum,
        reference,
        ratio: ratio.map(Fraction::from),
        ledger,
        bounds: Bounds {
            move_count: move_bound.into(),
            leafage,
            leafage_bound: leafage_bound.map(Fraction::from),
            max_degree,
            degree_bound: degree_bound.map(Fraction::from),
        },
        checks,
        passed,
    })
}
