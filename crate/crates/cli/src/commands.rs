//! The work behind each CLI verb, separated from argument parsing and
//! printing so tests can drive it directly.

use std::fmt::Write as _;

use mmnfa_core::{
    exact_mmn, generate, mmnfa, mmnfa_trace, verify_network, Coord, ExactError, GenError, GenSpec,
    SolveTrace, VerifyError,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::report::{
    BenchReport, BenchRow, BenchSummary, CompareReport, CompareRow, CoverageProbe, ExactRecord,
    SolveRecord, Spread,
};
use crate::svg::Figure;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Usage(String),
}

pub fn solve_record(trace: &SolveTrace) -> SolveRecord {
    SolveRecord {
        stats: trace.graph.stats,
        total_length: trace.network.total_length,
        duplicates_merged: trace.duplicates_merged,
        network: trace.network.clone(),
    }
}

pub fn solve_text(rec: &SolveRecord) -> String {
    format!(
        "n={} n_total={} n_edges={} total_length={}\n",
        rec.stats.n_main, rec.stats.n_total, rec.stats.n_edges, rec.total_length
    )
}

pub fn solve_svg(trace: &SolveTrace) -> String {
    let kept = trace
        .network
        .edges
        .iter()
        .map(|e| (trace.network.nodes[e.u], trace.network.nodes[e.v]))
        .collect();
    Figure {
        nodes: &trace.graph.nodes,
        graph_edges: &trace.graph.edges,
        kept,
    }
    .render()
}

pub fn exact_record(points: &[Coord], budget: u64) -> Result<ExactRecord, CommandError> {
    let s = exact_mmn(points, budget)?;
    Ok(ExactRecord {
        length: s.length,
        expansions: s.expansions,
        network: s.network,
    })
}

pub fn verify_text(r: &mmnfa_core::VerifyReport) -> String {
    let worst = match r.worst_ratio {
        Some(w) => format!("{:.4} ({w})", w.to_f64()),
        None => "inf".to_string(),
    };
    format!(
        "pairs={} satisfied={} coverage={:.3} worst_ratio={} connected={}\n",
        r.pairs_total,
        r.pairs_satisfied,
        r.coverage.to_f64(),
        worst,
        r.connected
    )
}

/// Mean coverage of heuristic networks over `instances` random `n`-point
/// instances.
pub fn coverage_probe(
    instances: usize,
    n: usize,
    coord_max: i64,
    seed: u64,
) -> Result<CoverageProbe, CommandError> {
    let mut sum = 0.0;
    let mut min: f64 = 1.0;
    let mut all_connected = true;
    for i in 0..instances {
        let pts = generate(GenSpec::new(n, coord_max, seed.wrapping_add(i as u64)))?;
        let net = mmnfa(&pts).network;
        let v = verify_network(&net, &pts)?;
        let c = v.coverage.to_f64();
        sum += c;
        min = min.min(c);
        all_connected &= v.connected;
    }
    Ok(CoverageProbe {
        instances,
        n,
        coord_max,
        mean_coverage: if instances == 0 {
            1.0
        } else {
            sum / instances as f64
        },
        min_coverage: min,
        all_connected,
    })
}

pub const PROBE_INSTANCES: usize = 50;
pub const PROBE_N: usize = 10;
const PROBE_SEED_OFFSET: u64 = 1 << 32;

/// Runs `trials` solves at `n` points, trial `i` seeded with `seed + i`.
/// Trials run one after another so their timings do not interfere.
pub fn bench(
    n: usize,
    trials: usize,
    seed: u64,
    coord_max: i64,
) -> Result<BenchReport, CommandError> {
    if trials == 0 {
        return Err(CommandError::Usage("trials must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(trials);
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(trial as u64);
        let pts = generate(GenSpec::new(n, coord_max, trial_seed))?;
        let r = mmnfa(&pts);
        rows.push(BenchRow {
            trial,
            seed: trial_seed,
            n_total: r.stats.n_total,
            n_edges: r.stats.n_edges,
            depth: r.stats.depth,
            total_length: r.network.total_length,
            elapsed_us: r.elapsed.as_micros() as u64,
        });
    }
    let spread =
        |f: fn(&BenchRow) -> u64| Spread::of(rows.iter().map(f)).expect("at least one trial");
    let summary = BenchSummary {
        n_total: spread(|r| r.n_total as u64),
        n_edges: spread(|r| r.n_edges as u64),
        total_length: spread(|r| r.total_length),
        elapsed_us: spread(|r| r.elapsed_us),
    };
    let probe_max = coord_max.max(PROBE_N as i64);
    let coverage_probe = coverage_probe(
        PROBE_INSTANCES,
        PROBE_N,
        probe_max,
        seed.wrapping_add(PROBE_SEED_OFFSET),
    )?;
    Ok(BenchReport {
        n,
        coord_max,
        seed,
        rows,
        summary,
        coverage_probe,
    })
}

pub fn bench_text(b: &BenchReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:>5} {:>10} {:>8} {:>8} {:>6} {:>12} {:>11}",
        "trial", "seed", "n_total", "n_edges", "depth", "length", "elapsed_us"
    )
    .unwrap();
    for r in &b.rows {
        writeln!(
            s,
            "{:>5} {:>10} {:>8} {:>8} {:>6} {:>12} {:>11}",
            r.trial, r.seed, r.n_total, r.n_edges, r.depth, r.total_length, r.elapsed_us
        )
        .unwrap();
    }
    let line = |name: &str, sp: &Spread| {
        format!(
            "{name:>12}: min {} median {} max {}\n",
            sp.min, sp.median, sp.max
        )
    };
    s.push_str(&line("n_total", &b.summary.n_total));
    s.push_str(&line("n_edges", &b.summary.n_edges));
    s.push_str(&line("length", &b.summary.total_length));
    s.push_str(&line("elapsed_us", &b.summary.elapsed_us));
    let p = &b.coverage_probe;
    writeln!(
        s,
        "coverage over {} random n={} instances: mean {:.3} min {:.3} connected {}",
        p.instances, p.n, p.mean_coverage, p.min_coverage, p.all_connected
    )
    .unwrap();
    s
}

#[derive(Debug, Clone, Copy)]
pub struct CompareSpec {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub coord_max: i64,
    pub seed: u64,
    pub budget: u64,
}

impl CompareSpec {
    /// Instance `i`: size cycles through `n_min..=n_max`, seed `seed + i`.
    pub fn instance(&self, i: usize) -> (usize, u64) {
        let sizes = self.n_max - self.n_min + 1;
        (self.n_min + i % sizes, self.seed.wrapping_add(i as u64))
    }
}

/// Heuristic versus exact length on fresh random instances. Rows come back
/// in index order whatever order they finish in.
pub fn compare(spec: CompareSpec) -> Result<CompareReport, CommandError> {
    if spec.n_min < 2 || spec.n_max > mmnfa_core::exact::MAX_TERMINALS || spec.n_min > spec.n_max {
        return Err(CommandError::Usage(format!(
            "n range must lie within [2, {}], got [{}, {}]",
            mmnfa_core::exact::MAX_TERMINALS,
            spec.n_min,
            spec.n_max
        )));
    }
    let rows = (0..spec.count)
        .into_par_iter()
        .map(|index| -> Result<CompareRow, CommandError> {
            let (n, seed) = spec.instance(index);
            let pts = generate(GenSpec::new(n, spec.coord_max, seed))?;
            let net = mmnfa(&pts).network;
            let coverage = verify_network(&net, &pts)?.coverage.to_f64();
            let exact = match exact_mmn(&pts, spec.budget) {
                Ok(s) => Some(s.length),
                Err(ExactError::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            Ok(CompareRow {
                index,
                seed,
                n,
                mmnfa_length: net.total_length,
                exact_length: exact,
                difference: exact.map(|e| net.total_length as i64 - e as i64),
                ratio: exact.map(|e| net.total_length as f64 / e as f64),
                mmnfa_coverage: coverage,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let zero_differences = rows.iter().filter(|r| r.difference == Some(0)).count();
    let negative_differences = rows
        .iter()
        .filter(|r| r.difference.is_some_and(|d| d < 0))
        .count();
    let budget_exceeded = rows.iter().filter(|r| r.exact_length.is_none()).count();
    let max_ratio = rows.iter().filter_map(|r| r.ratio).reduce(f64::max);
    let over_two = rows
        .iter()
        .filter(|r| r.ratio.is_some_and(|x| x > 2.0))
        .map(|r| r.index)
        .collect();
    Ok(CompareReport {
        count: spec.count,
        n_min: spec.n_min,
        n_max: spec.n_max,
        coord_max: spec.coord_max,
        seed: spec.seed,
        rows,
        zero_differences,
        negative_differences,
        budget_exceeded,
        max_ratio,
        over_two,
    })
}

pub fn compare_text(c: &CompareReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:>5} {:>3} {:>6} {:>6} {:>5} {:>6} {:>8}",
        "index", "n", "mmnfa", "exact", "diff", "ratio", "coverage"
    )
    .unwrap();
    for r in &c.rows {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "budget".into());
        writeln!(
            s,
            "{:>5} {:>3} {:>6} {:>6} {:>5} {:>6} {:>8.3}",
            r.index,
            r.n,
            r.mmnfa_length,
            opt(r.exact_length.map(|v| v.to_string())),
            opt(r.difference.map(|v| v.to_string())),
            opt(r.ratio.map(|v| format!("{v:.3}"))),
            r.mmnfa_coverage
        )
        .unwrap();
    }
    writeln!(
        s,
        "zero differences: {}/{}  heuristic shorter than optimum: {}  budget exceeded: {}",
        c.zero_differences, c.count, c.negative_differences, c.budget_exceeded
    )
    .unwrap();
    match c.max_ratio {
        Some(m) => writeln!(s, "max ratio: {m:.3}").unwrap(),
        None => writeln!(s, "max ratio: n/a").unwrap(),
    }
    if !c.over_two.is_empty() {
        writeln!(s, "ratio above 2 on instances {:?}", c.over_two).unwrap();
    }
    s
}

/// Full solve from points, for callers that want the trace as well.
pub fn solve(points: &[Coord]) -> (SolveTrace, SolveRecord) {
    let trace = mmnfa_trace(points);
    let rec = solve_record(&trace);
    (trace, rec)
}
