//! Ratio tables over a parameter range.

use std::io::Write;

use greedy_mis::families::{generate, Family};
use greedy_mis::greedy::{adversarial_value, greedy_run, GreedyTrace, TieBreakPolicy};
use greedy_mis::ledger::{classify, ratio_bound_from_counts};
use greedy_mis::mis::mis_exact;
use greedy_mis::Rational;
use rayon::prelude::*;
use serde::Serialize;

use crate::fraction::{decimal, slash};
use crate::report::PolicyTag;
use crate::CliError;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub family: Family,
    pub kmin: usize,
    pub kmax: usize,
    /// `Scripted` or `Adversarial`; random families always use the latter.
    pub policy: PolicyTag,
    /// Random families: seeds `seed..seed + trials` per size, keeping the
    /// worst ratio.
    pub seed: u64,
    pub trials: usize,
    pub limit: usize,
    pub exact_limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub k: usize,
    pub greedy: usize,
    pub opt: usize,
    pub ratio_num: i64,
    pub ratio_den: i64,
    pub ratio_decimal: String,
    /// Move-count bound of the row's run, as `num/den`.
    pub bound: String,
    pub max_degree: usize,
    /// `4 / (max_degree + 2)`, as `num/den`.
    pub degree_bound: String,
}

struct Sample {
    greedy: usize,
    opt: usize,
    bound: Rational,
    max_degree: usize,
}

fn sample(opts: &SweepOptions, k: usize, seed: Option<u64>) -> Result<Sample, CliError> {
    let inst = generate(opts.family, k, seed)?;
    let g = &inst.graph;
    let trace: GreedyTrace = match (opts.policy, &inst.adversarial_script) {
        (PolicyTag::Scripted, Some(script)) if !opts.family.is_random() => {
            greedy_run(g, &TieBreakPolicy::Scripted(script.clone()))?
        }
        (PolicyTag::Scripted | PolicyTag::Adversarial, _) => adversarial_value(g, opts.limit)?.1,
        (other, _) => {
            return Err(CliError::usage(format!(
                "sweep supports the scripted and adversarial policies, not {}",
                other.name()
            )))
        }
    };
    let optimum = mis_exact(g, opts.exact_limit)?;
    let reference = match &inst.optimum_certificate {
        Some(c) if c.len() == optimum.size => c.clone(),
        _ => optimum.set.clone(),
    };
    let ledger = classify(g, &trace, &reference)?;
    Ok(Sample {
        greedy: trace.len(),
        opt: optimum.size,
        bound: ratio_bound_from_counts(&ledger.counts),
        max_degree: g.max_degree().unwrap_or(0),
    })
}

fn row(k: usize, s: Sample) -> SweepRow {
    let r = if s.opt == 0 { Rational::from_integer(1) } else { Rational::new(s.greedy as i64, s.opt as i64) };
    SweepRow {
        k,
        greedy: s.greedy,
        opt: s.opt,
        ratio_num: *r.numer(),
        ratio_den: *r.denom(),
        ratio_decimal: decimal(r, 6),
        bound: slash(s.bound),
        max_degree: s.max_degree,
        degree_bound: slash(Rational::new(4, s.max_degree as i64 + 2)),
    }
}

/// One row per parameter value, computed in parallel and returned in order.
pub fn sweep(opts: &SweepOptions) -> Result<Vec<SweepRow>, CliError> {
    if opts.kmin > opts.kmax {
        return Err(CliError::usage(format!("empty range {}..={}", opts.kmin, opts.kmax)));
    }
    if opts.kmin < opts.family.min_parameter() {
        return Err(CliError::usage(format!(
            "{} needs a parameter of at least {}",
            opts.family,
            opts.family.min_parameter()
        )));
    }
    if opts.family.is_random() && opts.trials == 0 {
        return Err(CliError::usage("random families need --trials of at least 1"));
    }
    (opts.kmin..=opts.kmax)
        .into_par_iter()
        .map(|k| {
            if !opts.family.is_random() {
                return Ok(row(k, sample(opts, k, None)?));
            }
            let mut worst: Option<Sample> = None;
            for t in 0..opts.trials as u64 {
                let s = sample(opts, k, Some(opts.seed.wrapping_add(t)))?;
                let worse = worst.as_ref().is_none_or(|w| s.greedy * w.opt < w.greedy * s.opt);
                if worse {
                    worst = Some(s);
                }
            }
            Ok(row(k, worst.expect("at least one trial")))
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
