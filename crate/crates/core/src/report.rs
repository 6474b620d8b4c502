//! Cross-checked curve-count reports and the instance sweep behind `check`.
//!
//! A report runs every method that fits its budgets and records which values
//! came back. Methods skipped for cost (enumeration too wide, too many edges
//! for the polynomial) are absent rather than failed; `agree` is the verdict
//! over the values that exist.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::flat_trace::mu_trace;
use crate::laplacian_coloring::{mu_coloring, mu_nullity, mu_regions, ColoringError};
use crate::plane_graph::{generate, Family, PgError, PlaneGraph};
use crate::tutte::{mu_tutte, TutteError};

/// Most colorings a report is willing to materialize before declaring the
/// census method out of reach for the instance.
pub const DEFAULT_COLORING_CAP: usize = 1 << 12;

/// Wall-clock milliseconds per method. Present only when asked for:
/// anything meant to be byte-stable across runs must leave these out.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub trace: f64,
    pub nullity: f64,
    pub regions: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coloring: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tutte: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuReport {
    pub instance: String,
    pub vertices: usize,
    pub edges: usize,
    pub mu_trace: usize,
    pub mu_nullity: usize,
    pub mu_regions: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu_coloring: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu_tutte: Option<usize>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<Timings>,
}

impl MuReport {
    /// Every value present equals every other. The stored `agree` flag is
    /// this plus "no method reported an impossible value".
    pub fn consistent(&self) -> bool {
        let mut values = vec![self.mu_trace, self.mu_nullity, self.mu_regions];
        values.extend(self.mu_coloring);
        values.extend(self.mu_tutte);
        values.iter().all(|&v| v == values[0])
    }

    /// How many methods produced a value.
    pub fn methods_run(&self) -> usize {
        3 + self.mu_coloring.iter().count() + self.mu_tutte.iter().count()
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_secs_f64() * 1e3)
}

/// Run all methods on one graph and cross-check them.
///
/// `tutte_budget` caps the edge count fed to the exponential evaluation;
/// over budget, the polynomial value is simply omitted. Likewise the
/// coloring census is omitted when the solution space is too large to walk.
pub fn mu_report(
    g: &PlaneGraph,
    instance: &str,
    tutte_budget: usize,
    with_timings: bool,
) -> Result<MuReport, PgError> {
    let (trace, t_trace) = timed(|| mu_trace(g));
    let trace = trace?;
    let (nullity, t_nullity) = timed(|| mu_nullity(g));
    let nullity = nullity?;
    let (regions, t_regions) = timed(|| mu_regions(g));
    let regions = regions?;
    let (coloring, t_coloring) = timed(|| mu_coloring(g, DEFAULT_COLORING_CAP));
    let coloring = match coloring {
        Ok(v) => Some(v),
        Err(ColoringError::TooMany { .. }) => None,
        Err(ColoringError::Graph(e)) => return Err(e),
        Err(e @ ColoringError::NotConservative(_)) => {
            unreachable!("census checks membership, not extensions: {e}")
        }
    };
    let (tutte, t_tutte) = timed(|| mu_tutte(g, tutte_budget));
    let (tutte, tutte_sound) = match tutte {
        Ok(v) => (Some(v), true),
        Err(TutteError::EdgeBudgetExceeded { .. }) => (None, true),
        // A polynomial value no curve count explains is a disagreement,
        // not a skip: surface it through the verdict.
        Err(TutteError::InconsistentTutte { .. }) => (None, false),
        Err(TutteError::Graph(e)) => return Err(e),
    };
    let mut report = MuReport {
        instance: instance.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        mu_trace: trace,
        mu_nullity: nullity,
        mu_regions: regions,
        mu_coloring: coloring,
        mu_tutte: tutte,
        agree: false,
        timings_ms: with_timings.then(|| Timings {
            trace: t_trace,
            nullity: t_nullity,
            regions: t_regions,
            coloring: coloring.map(|_| t_coloring),
            tutte: tutte.map(|_| t_tutte),
        }),
    };
    report.agree = tutte_sound && report.consistent();
    Ok(report)
}

/// Instance suite exercised by default: every small family, each size.
pub const DEFAULT_SUITE: &str =
    "cycles:2..12,paths:2..10,grids:2x2..5x5,wheels:4..8,theta:2..6,bouquets:1..3,complete4,empty,isolated";

fn bad_suite(entry: &str) -> PgError {
    PgError::InvalidFamily(format!("suite entry `{entry}`"))
}

fn parse_range(entry: &str, text: &str) -> Result<(usize, usize), PgError> {
    let (lo, hi) = text.split_once("..").ok_or_else(|| bad_suite(entry))?;
    let lo = lo.parse().map_err(|_| bad_suite(entry))?;
    let hi = hi.parse().map_err(|_| bad_suite(entry))?;
    if lo > hi {
        return Err(bad_suite(entry));
    }
    Ok((lo, hi))
}

fn parse_dims(entry: &str, text: &str) -> Result<(usize, usize), PgError> {
    let (r, c) = text.split_once('x').ok_or_else(|| bad_suite(entry))?;
    Ok((
        r.parse().map_err(|_| bad_suite(entry))?,
        c.parse().map_err(|_| bad_suite(entry))?,
    ))
}

/// Expand a comma-separated suite description into named instances.
///
/// Ranged families take `name:lo..hi` (inclusive); grids range over both
/// dimensions as `grids:2x2..4x5`. Bare words name one-off instances.
pub fn parse_suite(spec: &str) -> Result<Vec<(String, PlaneGraph)>, PgError> {
    let mut out = Vec::new();
    for entry in spec.split(',').filter(|s| !s.is_empty()) {
        match entry.split_once(':') {
            Some(("cycles", range)) => {
                let (lo, hi) = parse_range(entry, range)?;
                for n in lo..=hi {
                    out.push((format!("cycle:{n}"), generate(Family::Cycle(n))?));
                }
            }
            Some(("paths", range)) => {
                let (lo, hi) = parse_range(entry, range)?;
                for n in lo..=hi {
                    out.push((format!("path:{n}"), generate(Family::Path(n))?));
                }
            }
            Some(("grids", range)) => {
                let (lo, hi) = range.split_once("..").ok_or_else(|| bad_suite(entry))?;
                let (r0, c0) = parse_dims(entry, lo)?;
                let (r1, c1) = parse_dims(entry, hi)?;
                if r0 > r1 || c0 > c1 {
                    return Err(bad_suite(entry));
                }
                for r in r0..=r1 {
                    for c in c0..=c1 {
                        out.push((format!("grid:{r}x{c}"), generate(Family::Grid(r, c))?));
                    }
                }
            }
            Some(("wheels", range)) => {
                let (lo, hi) = parse_range(entry, range)?;
                for n in lo..=hi {
                    out.push((format!("wheel:{n}"), generate(Family::Wheel(n))?));
                }
            }
            Some(("theta", range)) => {
                let (lo, hi) = parse_range(entry, range)?;
                for k in lo..=hi {
                    out.push((format!("theta:{k}"), generate(Family::Theta(k))?));
                }
            }
            Some(("bouquets", range)) => {
                let (lo, hi) = parse_range(entry, range)?;
                for k in lo..=hi {
                    out.push((format!("bouquet:{k}"), generate(Family::LoopBouquetNested(k))?));
                }
            }
            None if entry == "complete4" => {
                out.push(("complete4".into(), generate(Family::Complete4)?));
            }
            None if entry == "empty" => out.push(("empty".into(), PlaneGraph::empty())),
            None if entry == "isolated" => {
                out.push(("isolated".into(), generate(Family::Path(1))?));
            }
            _ => return Err(bad_suite(entry)),
        }
    }
    Ok(out)
}

/// Seeded random grid subgraphs to pad a sweep with irregular instances.
pub fn random_instances(count: usize, seed: u64) -> Vec<(String, PlaneGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let rows = rng.random_range(2..=4);
            let cols = rng.random_range(2..=4);
            let sub_seed = rng.random::<u64>();
            let g = generate(Family::RandomGridSubgraph {
                rows,
                cols,
                seed: sub_seed,
            })
            .expect("grid subgraphs are planar by construction");
            (format!("random:{rows}x{cols}:{i}"), g)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepOutcome {
    pub lines: Vec<String>,
    pub instances: usize,
    pub mismatches: usize,
}

impl SweepOutcome {
    pub fn all_agree(&self) -> bool {
        self.mismatches == 0
    }
}

fn sweep_line(report: &MuReport) -> String {
    if report.agree {
        format!(
            "ok {} V={} E={} mu={} methods={}",
            report.instance,
            report.vertices,
            report.edges,
            report.mu_trace,
            report.methods_run()
        )
    } else {
        let opt = |v: Option<usize>| v.map_or("-".into(), |v| v.to_string());
        format!(
            "MISMATCH {} V={} E={} trace={} nullity={} regions={} coloring={} tutte={}",
            report.instance,
            report.vertices,
            report.edges,
            report.mu_trace,
            report.mu_nullity,
            report.mu_regions,
            opt(report.mu_coloring),
            opt(report.mu_tutte),
        )
    }
}

/// Run the full cross-check over a suite, each instance followed by its
/// mirror image (same abstract graph, reflected embedding), plus `random`
/// seeded irregular instances. Output is timing-free and byte-stable.
pub fn check_sweep(
    suite: &str,
    random: usize,
    seed: u64,
    tutte_budget: usize,
) -> Result<SweepOutcome, PgError> {
    let mut instances = Vec::new();
    for (name, g) in parse_suite(suite)? {
        let mirrored = (g.edge_count() > 0).then(|| (format!("mirror({name})"), g.mirror()));
        instances.push((name, g));
        instances.extend(mirrored);
    }
    instances.extend(random_instances(random, seed));

    let mut lines = Vec::new();
    let mut mismatches = 0;
    let total = instances.len();
    for (name, g) in &instances {
        let report = mu_report(g, name, tutte_budget, false)?;
        if !report.agree {
            mismatches += 1;
        }
        lines.push(sweep_line(&report));
    }
    Ok(SweepOutcome {
        lines,
        instances: total,
        mismatches,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchLine {
    pub instance: String,
    pub vertices: usize,
    pub edges: usize,
    pub mu_trace: usize,
    pub mu_nullity: usize,
    pub trace_ms: f64,
    pub nullity_ms: f64,
}

/// Time the two scalable methods on square grids.
pub fn bench_grids(sides: &[usize]) -> Result<Vec<BenchLine>, PgError> {
    sides
        .iter()
        .map(|&side| {
            let g = generate(Family::Grid(side, side))?;
            let (trace, trace_ms) = timed(|| mu_trace(&g));
            let (nullity, nullity_ms) = timed(|| mu_nullity(&g));
            Ok(BenchLine {
                instance: format!("grid:{side}x{side}"),
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                mu_trace: trace?,
                mu_nullity: nullity?,
                trace_ms,
                nullity_ms,
            })
        })
        .collect()
}
