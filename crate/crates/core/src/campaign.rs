//! Verification campaigns: run a claim over a stream of instances and
//! aggregate the outcome into a report.
//!
//! Instances come from exhaustive enumeration of edge subsets (optionally
//! one per isomorphism class) or from seeded random edge deletion starting at
//! the complete `r`-graph. Instances below the degree bound are filtered out
//! before anything else; instances that are not 2-connected, or whose exact
//! search runs out of budget, are skipped. Only a measured violation is a
//! failure, and every failure carries its hypergraph as a certificate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{is_two_connected, vertex_connectivity};
use crate::constructions::{binomial, complete_runiform, h1, h2, h3};
use crate::enumerate::{Canonizer, EdgeUniverse, EnumerateError};
use crate::hypergraph::Hypergraph;
use crate::io::{content_hash, to_text};
use crate::lollipop::grow_long_cycle;
use crate::search::{
    codiameter_with, longest_berge_cycle, validate_cycle, SearchError, SearchOptions,
};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub const SAMPLING_MODEL: &str = "start from the complete r-graph; delete uniformly random edges while the \
     degree bound and 2-connectivity still hold; stop at a uniformly chosen edge count or when no edge can go";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CampaignError {
    #[error("bad campaign: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// Degree bound forces a cycle of length `min(2k, n)`.
    #[serde(rename = "theorem_1_6")]
    LongCycle,
    /// 2-connected `r`-graphs have a cycle of length `min(4, n, |E|)`.
    #[serde(rename = "proposition_1_7")]
    ShortCycle,
    /// Degree bound forces codiameter `k`.
    #[serde(rename = "corollary_1_9")]
    Codiameter,
    /// The extremal families sit exactly one below the bound.
    #[serde(rename = "sharpness")]
    Sharpness,
}

impl Claim {
    pub const ALL: [Claim; 4] = [
        Claim::LongCycle,
        Claim::ShortCycle,
        Claim::Codiameter,
        Claim::Sharpness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::LongCycle => "theorem_1_6",
            Claim::ShortCycle => "proposition_1_7",
            Claim::Codiameter => "corollary_1_9",
            Claim::Sharpness => "sharpness",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = CampaignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CampaignError::BadSpec(format!("unknown claim `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sample,
}

impl FromStr for Mode {
    type Err = CampaignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "sample" => Ok(Mode::Sample),
            _ => Err(CampaignError::BadSpec(format!("unknown mode `{s}`"))),
        }
    }
}

/// Inclusive integer range written `a` or `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn single(x: usize) -> Self {
        Span { lo: x, hi: x }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for Span {
    type Err = CampaignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CampaignError::BadSpec(format!("bad range `{s}`, expected `a` or `a..b`"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => {
                let x = s.trim().parse().map_err(|_| bad())?;
                (x, x)
            }
        };
        if lo > hi {
            return Err(bad());
        }
        Ok(Span { lo, hi })
    }
}

impl TryFrom<String> for Span {
    type Error = CampaignError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Span> for String {
    fn from(s: Span) -> String {
        s.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSpec {
    pub claim: Claim,
    pub r: Span,
    pub k: Span,
    pub n: Span,
    pub mode: Mode,
    /// Instances per parameter combination in sample mode.
    pub samples: usize,
    pub seed: u64,
    /// Search nodes per exact computation.
    pub budget: u64,
    /// Isomorphism dedup; defaults to on for exhaustive runs, off otherwise.
    pub dedup: Option<bool>,
}

impl CampaignSpec {
    pub fn new(claim: Claim, r: Span, k: Span, n: Span, mode: Mode) -> Self {
        Self {
            claim,
            r,
            k,
            n,
            mode,
            samples: 100,
            seed: 0,
            budget: DEFAULT_BUDGET,
            dedup: None,
        }
    }

    pub fn dedup_enabled(&self) -> bool {
        self.dedup.unwrap_or(self.mode == Mode::Exhaustive)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    pub r: usize,
    pub k: usize,
    pub n: usize,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={}, k={}, n={}", self.r, self.k, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtLeast,
    Exactly,
}

impl Relation {
    fn holds(self, measured: usize, required: usize) -> bool {
        match self {
            Relation::AtLeast => measured >= required,
            Relation::Exactly => measured == required,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// SHA-256 of the certificate's unlabelled text.
    pub hash: String,
    pub label: String,
    pub params: Params,
    pub property: String,
    pub measured: usize,
    pub relation: Relation,
    pub required: usize,
    /// The hypergraph in file format; loads back into the instance.
    pub certificate: String,
}

/// Heuristic cycle lengths against exact circumferences.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeuristicStats {
    pub runs: usize,
    /// Runs compared against an exactly known circumference.
    pub compared: usize,
    /// `exact - heuristic` → count.
    pub gaps: BTreeMap<usize, usize>,
    /// Heuristic longer than the exact value, invalid output or no fixpoint.
    pub violations: usize,
    pub max_moves: usize,
}

impl HeuristicStats {
    fn merge(&mut self, other: &HeuristicStats) {
        self.runs += other.runs;
        self.compared += other.compared;
        for (g, c) in &other.gaps {
            *self.gaps.entry(*g).or_default() += c;
        }
        self.violations += other.violations;
        self.max_moves = self.max_moves.max(other.max_moves);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: CampaignSpec,
    pub sampling_model: Option<String>,
    pub instances_checked: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub skipped: usize,
    pub skip_reasons: BTreeMap<String, usize>,
    /// Subsets dropped by the degree filter.
    pub filtered: u64,
    /// Subsets dropped as isomorphic to an earlier representative.
    pub duplicates: u64,
    pub parameter_sets: Vec<Params>,
    pub notes: Vec<String>,
    pub heuristic: HeuristicStats,
    pub wall_time_secs: f64,
}

impl VerificationReport {
    fn empty(spec: &CampaignSpec) -> Self {
        Self {
            spec: spec.clone(),
            sampling_model: (spec.mode == Mode::Sample && spec.claim != Claim::Sharpness)
                .then(|| SAMPLING_MODEL.to_string()),
            instances_checked: 0,
            passes: 0,
            failures: Vec::new(),
            skipped: 0,
            skip_reasons: BTreeMap::new(),
            filtered: 0,
            duplicates: 0,
            parameter_sets: Vec::new(),
            notes: Vec::new(),
            heuristic: HeuristicStats::default(),
            wall_time_secs: 0.0,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, outcome: Outcome) {
        self.instances_checked += 1;
        self.heuristic.merge(&outcome.heuristic);
        match outcome.verdict {
            Verdict::Pass => self.passes += 1,
            Verdict::Fail(f) => self.failures.push(*f),
            Verdict::Skip(reason) => {
                self.skipped += 1;
                *self.skip_reasons.entry(reason).or_default() += 1;
            }
        }
    }

    fn finish(&mut self) {
        self.failures
            .sort_by(|a, b| (&a.hash, &a.property).cmp(&(&b.hash, &b.property)));
        debug_assert_eq!(
            self.passes + self.failures.len() + self.skipped,
            self.instances_checked
        );
    }
}

#[derive(Debug, Clone)]
enum Verdict {
    Pass,
    Fail(Box<Failure>),
    Skip(String),
}

#[derive(Debug, Clone)]
struct Outcome {
    verdict: Verdict,
    heuristic: HeuristicStats,
}

/// A named instance with the properties to check on it.
struct Instance {
    label: String,
    params: Params,
    h: Hypergraph,
}

fn fail(
    inst: &Instance,
    property: &str,
    measured: usize,
    relation: Relation,
    required: usize,
) -> Verdict {
    Verdict::Fail(Box::new(Failure {
        hash: content_hash(&inst.h),
        label: inst.label.clone(),
        params: inst.params,
        property: property.to_string(),
        measured,
        relation,
        required,
        certificate: to_text(&inst.h, None),
    }))
}

const BUDGET_REASON: &str = "search budget exhausted";
const NOT_2_CONNECTED: &str = "not 2-connected";

/// Exact circumference, or the incumbent and `false` when the budget ran out.
fn measure_circumference(h: &Hypergraph, budget: u64) -> (usize, bool) {
    match longest_berge_cycle(h, SearchOptions::with_budget(budget)) {
        Ok(c) => (c.map_or(0, |c| c.len()), true),
        Err(SearchError::BudgetExhausted { incumbent, .. }) => {
            (incumbent.map_or(0, |c| c.len()), false)
        }
        Err(e) => panic!("circumference search failed: {e}"),
    }
}

/// Runs the lollipop heuristic and compares it with the exact value if known.
fn heuristic(h: &Hypergraph, exact: Option<usize>) -> HeuristicStats {
    let mut stats = HeuristicStats {
        runs: 1,
        ..Default::default()
    };
    match grow_long_cycle(h, None) {
        Ok(out) => {
            stats.max_moves = out.trace.len();
            let len = out.cycle.len();
            if validate_cycle(h, &out.cycle).is_err() {
                stats.violations += 1;
            } else if let Some(exact) = exact {
                stats.compared = 1;
                if len > exact {
                    stats.violations += 1;
                } else {
                    stats.gaps.insert(exact - len, 1);
                }
            }
        }
        Err(e) => {
            log::warn!("heuristic failed: {e}");
            stats.violations += 1;
        }
    }
    stats
}

/// Circumference at least `required`.
fn check_cycle_bound(inst: &Instance, required: usize, budget: u64) -> Outcome {
    if !is_two_connected(&inst.h) {
        return Outcome {
            verdict: Verdict::Skip(NOT_2_CONNECTED.into()),
            heuristic: HeuristicStats::default(),
        };
    }
    let (measured, exact) = measure_circumference(&inst.h, budget);
    let stats = heuristic(&inst.h, exact.then_some(measured));
    let verdict = if measured >= required {
        Verdict::Pass
    } else if !exact {
        Verdict::Skip(BUDGET_REASON.into())
    } else {
        fail(inst, "circumference", measured, Relation::AtLeast, required)
    };
    Outcome {
        verdict,
        heuristic: stats,
    }
}

fn check_codiameter(inst: &Instance, required: usize, budget: u64) -> Outcome {
    let skip = |reason: &str| Outcome {
        verdict: Verdict::Skip(reason.into()),
        heuristic: HeuristicStats::default(),
    };
    if !is_two_connected(&inst.h) {
        return skip(NOT_2_CONNECTED);
    }
    let opts = SearchOptions {
        node_budget: Some(budget),
        target: Some(required),
    };
    match codiameter_with(&inst.h, opts) {
        Ok(c) if c.value >= required => Outcome {
            verdict: Verdict::Pass,
            heuristic: HeuristicStats::default(),
        },
        Ok(c) => Outcome {
            verdict: fail(inst, "codiameter", c.value, Relation::AtLeast, required),
            heuristic: HeuristicStats::default(),
        },
        Err(_) => skip(BUDGET_REASON),
    }
}

/// Ordered `(property, measured, relation, required, exact)` checks; the
/// first violated one is the failure. An inexact measurement is only a lower
/// bound.
type PropertyCheck = (&'static str, usize, Relation, usize, bool);

fn check_properties(inst: &Instance, checks: &[PropertyCheck], stats: HeuristicStats) -> Outcome {
    let mut verdict = Verdict::Pass;
    for &(property, measured, relation, required, exact) in checks {
        let settled = exact || measured > required;
        if settled && relation.holds(measured, required)
            || !exact && relation == Relation::AtLeast && measured >= required
        {
            continue;
        }
        verdict = if settled {
            fail(inst, property, measured, relation, required)
        } else {
            Verdict::Skip(BUDGET_REASON.into())
        };
        break;
    }
    Outcome {
        verdict,
        heuristic: stats,
    }
}

fn degree_bound(k: usize, r: usize) -> usize {
    binomial(k - 1, r - 1) + 1
}

/// Parameter sets of the spec that satisfy the claim's hypotheses; the rest
/// are noted.
fn parameter_sets(spec: &CampaignSpec, notes: &mut Vec<String>) -> Vec<Params> {
    let mut out = Vec::new();
    for r in spec.r.iter() {
        for k in spec.k.iter() {
            for n in spec.n.iter() {
                let p = Params { r, k, n };
                let ok = match spec.claim {
                    Claim::LongCycle => r >= 3 && k >= r + 2 && n >= k,
                    Claim::ShortCycle => r >= 3 && r < n,
                    Claim::Codiameter => r >= 3 && k >= r + 2 && n >= 2 * k,
                    Claim::Sharpness => r >= 3 && k >= r + 2,
                };
                if ok {
                    out.push(p);
                } else {
                    notes.push(format!("{p}: outside the claim's hypotheses, not run"));
                }
            }
        }
    }
    // k is irrelevant for the short-cycle claim, n for sharpness
    out.sort();
    out.dedup_by(|a, b| match spec.claim {
        Claim::ShortCycle => (a.r, a.n) == (b.r, b.n),
        Claim::Sharpness => (a.r, a.k) == (b.r, b.k),
        _ => false,
    });
    out
}

/// Degree filter for the claim; `None` means only connectivity matters.
fn claim_degree_bound(claim: Claim, p: Params) -> Option<usize> {
    match claim {
        Claim::LongCycle | Claim::Codiameter => Some(degree_bound(p.k, p.r)),
        Claim::ShortCycle | Claim::Sharpness => None,
    }
}

fn check_instance(claim: Claim, inst: &Instance, budget: u64) -> Outcome {
    let p = inst.params;
    match claim {
        Claim::LongCycle => check_cycle_bound(inst, (2 * p.k).min(p.n), budget),
        Claim::ShortCycle => check_cycle_bound(inst, 4.min(p.n).min(inst.h.num_edges()), budget),
        Claim::Codiameter => check_codiameter(inst, p.k, budget),
        Claim::Sharpness => unreachable!("sharpness runs on fixed families"),
    }
}

/// Exhaustive stream: every subset passing the degree filter, one per
/// isomorphism class when `dedup` is set.
fn exhaustive_instances(
    p: Params,
    bound: Option<usize>,
    dedup: bool,
    report: &mut VerificationReport,
) -> Result<Vec<Instance>, CampaignError> {
    let u = EdgeUniverse::new(p.n, p.r)?;
    let canon = if dedup {
        Some(Canonizer::new(&u)?)
    } else {
        None
    };
    let min_deg = bound.unwrap_or(0);
    let passing: Vec<u64> = (0..u.subsets())
        .into_par_iter()
        .filter(|&m| u.min_degree(m) >= min_deg)
        .collect();
    report.filtered += u.subsets() - passing.len() as u64;
    let masks: Vec<u64> = match &canon {
        Some(c) => {
            let reps: BTreeSet<u64> = passing.par_iter().map(|&m| c.canonical(m)).collect();
            report.duplicates += (passing.len() - reps.len()) as u64;
            reps.into_iter().collect()
        }
        None => passing,
    };
    Ok(masks
        .into_iter()
        .map(|m| Instance {
            label: format!("subset {m:#x}"),
            params: p,
            h: u.hypergraph(m),
        })
        .collect())
}

/// One sampled instance; `None` if the complete graph itself fails the
/// constraints.
pub fn sample_instance(
    n: usize,
    r: usize,
    min_degree: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Hypergraph> {
    let full = complete_runiform(n, r).ok()?;
    let min_degree = min_degree.max(2);
    if full.min_degree() < min_degree || !is_two_connected(&full) {
        return None;
    }
    let total = full.num_edges();
    let lo = (n * min_degree).div_ceil(r).min(total);
    let target = rng.gen_range(lo..=total);
    let mut present = vec![true; total];
    let mut degree = full.degrees();
    let mut count = total;
    while count > target {
        let mut candidates: Vec<usize> = (0..total)
            .filter(|&e| present[e] && full.edge(e).iter().all(|&v| degree[v] > min_degree))
            .collect();
        candidates.shuffle(rng);
        let mut removed = false;
        for e in candidates {
            present[e] = false;
            let trial = Hypergraph::new(
                n,
                r,
                (0..total)
                    .filter(|&i| present[i])
                    .map(|i| full.edge(i).to_vec()),
            )
            .expect("subset of a valid hypergraph");
            if is_two_connected(&trial) {
                for &v in full.edge(e) {
                    degree[v] -= 1;
                }
                count -= 1;
                removed = true;
                break;
            }
            present[e] = true;
        }
        if !removed {
            break;
        }
    }
    let edges = (0..total)
        .filter(|&i| present[i])
        .map(|i| full.edge(i).to_vec());
    Some(Hypergraph::new(n, r, edges).expect("subset of a valid hypergraph"))
}

fn sample_rng(seed: u64, p: Params, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(
        ((p.r as u64) << 48) ^ ((p.k as u64) << 32) ^ ((p.n as u64) << 16) ^ index as u64,
    );
    rng
}

fn sampled_instances(spec: &CampaignSpec, p: Params, bound: Option<usize>) -> Vec<Instance> {
    (0..spec.samples)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = sample_rng(spec.seed, p, i);
            sample_instance(p.n, p.r, bound.unwrap_or(0), &mut rng).map(|h| Instance {
                label: format!("sample {i}"),
                params: p,
                h,
            })
        })
        .collect()
}

/// Fixed family members checked alongside a claim.
fn family_instances(claim: Claim, p: Params) -> Vec<Instance> {
    let mut out = Vec::new();
    match claim {
        Claim::ShortCycle => {
            for s in 2..=4 {
                if let Ok(h) = h3(p.r, s) {
                    out.push(Instance {
                        label: format!("h3({},{s})", p.r),
                        params: Params { n: h.n(), ..p },
                        h,
                    });
                }
            }
        }
        Claim::Codiameter if p.k > 2 && (p.n - 2).is_multiple_of(p.k - 2) => {
            let q = (p.n - 2) / (p.k - 2);
            if let Ok(h) = h1(p.k, p.r, q) {
                out.push(Instance {
                    label: format!("h1({},{},{q})", p.k, p.r),
                    params: p,
                    h,
                });
            }
        }
        _ => {}
    }
    out
}

fn check_family(claim: Claim, inst: &Instance, budget: u64) -> Outcome {
    match claim {
        Claim::ShortCycle => {
            let (c, exact) = measure_circumference(&inst.h, budget);
            let conn = is_two_connected(&inst.h) as usize;
            let stats = heuristic(&inst.h, exact.then_some(c));
            check_properties(
                inst,
                &[
                    ("2-connected", conn, Relation::Exactly, 1, true),
                    ("circumference", c, Relation::Exactly, 4, exact),
                ],
                stats,
            )
        }
        Claim::Codiameter => {
            let k = inst.params.k;
            match codiameter_with(&inst.h, SearchOptions::with_budget(budget)) {
                Ok(c) => check_properties(
                    inst,
                    &[("codiameter", c.value, Relation::Exactly, k - 1, true)],
                    HeuristicStats::default(),
                ),
                Err(_) => Outcome {
                    verdict: Verdict::Skip(BUDGET_REASON.into()),
                    heuristic: HeuristicStats::default(),
                },
            }
        }
        _ => unreachable!(),
    }
}

fn run_instances(
    report: &mut VerificationReport,
    instances: &[Instance],
    check: impl Fn(&Instance) -> Outcome + Sync + Send,
) {
    let outcomes: Vec<Outcome> = instances.par_iter().map(check).collect();
    for o in outcomes {
        report.record(o);
    }
}

fn run_claim(spec: &CampaignSpec) -> Result<VerificationReport, CampaignError> {
    let start = Instant::now();
    let mut report = VerificationReport::empty(spec);
    let params = parameter_sets(spec, &mut report.notes);
    if params.is_empty() {
        return Err(CampaignError::BadSpec(format!(
            "no parameter set satisfies the hypotheses of {}",
            spec.claim
        )));
    }
    for &p in &params {
        report.parameter_sets.push(p);
        let bound = claim_degree_bound(spec.claim, p);
        if let Some(b) = bound {
            let cap = binomial(p.n - 1, p.r - 1);
            if cap < b {
                report.notes.push(format!(
                    "{p}: vacuous, maximum degree {cap} is below the bound {b}; 0 instances"
                ));
                continue;
            }
        }
        let instances = match spec.mode {
            Mode::Exhaustive => exhaustive_instances(p, bound, spec.dedup_enabled(), &mut report)?,
            Mode::Sample => sampled_instances(spec, p, bound),
        };
        log::info!("{}: {p}: {} instances", spec.claim, instances.len());
        run_instances(&mut report, &instances, |inst| {
            check_instance(spec.claim, inst, spec.budget)
        });
        let family = family_instances(spec.claim, p);
        run_instances(&mut report, &family, |inst| {
            check_family(spec.claim, inst, spec.budget)
        });
    }
    report.wall_time_secs = start.elapsed().as_secs_f64();
    report.finish();
    Ok(report)
}

fn expect_claim(spec: &CampaignSpec, claim: Claim) -> Result<(), CampaignError> {
    if spec.claim == claim {
        Ok(())
    } else {
        Err(CampaignError::BadSpec(format!(
            "expected claim {claim}, got {}",
            spec.claim
        )))
    }
}

pub fn verify_theorem(spec: &CampaignSpec) -> Result<VerificationReport, CampaignError> {
    expect_claim(spec, Claim::LongCycle)?;
    run_claim(spec)
}

pub fn verify_proposition(spec: &CampaignSpec) -> Result<VerificationReport, CampaignError> {
    expect_claim(spec, Claim::ShortCycle)?;
    run_claim(spec)
}

pub fn verify_codiameter(spec: &CampaignSpec) -> Result<VerificationReport, CampaignError> {
    expect_claim(spec, Claim::Codiameter)?;
    run_claim(spec)
}

/// Both extremal families for one `(k, r)`: minimum degree exactly
/// `C(k-1, r-1)`, circumference exactly `2k - 2`, below `min(2k, n)`, and
/// incidence connectivity at least `k - 1` for the second family.
fn sharpness_instances(k: usize, r: usize) -> Result<Vec<Instance>, CampaignError> {
    let bad = |e: crate::constructions::ConstructionError| CampaignError::BadSpec(e.to_string());
    let a = h1(k, r, 3).map_err(bad)?;
    let b = h2(k, r, 2 * k - 1).map_err(bad)?;
    Ok(vec![
        Instance {
            label: format!("h1({k},{r},3)"),
            params: Params { r, k, n: a.n() },
            h: a,
        },
        Instance {
            label: format!("h2({k},{r},{})", 2 * k - 1),
            params: Params { r, k, n: b.n() },
            h: b,
        },
    ])
}

fn check_sharpness(inst: &Instance, budget: u64, with_connectivity: bool) -> Outcome {
    let Params { r, k, n } = inst.params;
    let bound = binomial(k - 1, r - 1);
    let (c, exact) = measure_circumference(&inst.h, budget);
    let stats = heuristic(&inst.h, exact.then_some(c));
    let below = (2 * k).min(n) - 1;
    let mut checks: Vec<PropertyCheck> = vec![
        (
            "minimum degree",
            inst.h.min_degree(),
            Relation::Exactly,
            bound,
            true,
        ),
        ("circumference", c, Relation::Exactly, 2 * k - 2, exact),
        (
            "2k-2 below min(2k, n)",
            below,
            Relation::AtLeast,
            2 * k - 2,
            true,
        ),
    ];
    if with_connectivity {
        let kappa = vertex_connectivity(&inst.h.incidence_graph()).unwrap_or(0);
        checks.push((
            "incidence connectivity",
            kappa,
            Relation::AtLeast,
            k - 1,
            true,
        ));
    }
    check_properties(inst, &checks, stats)
}

pub fn verify_sharpness(
    k: usize,
    r: usize,
    budget: u64,
) -> Result<VerificationReport, CampaignError> {
    let mut spec = CampaignSpec::new(
        Claim::Sharpness,
        Span::single(r),
        Span::single(k),
        Span::single(2 * k - 1),
        Mode::Exhaustive,
    );
    spec.budget = budget;
    run_sharpness(&spec)
}

fn run_sharpness(spec: &CampaignSpec) -> Result<VerificationReport, CampaignError> {
    let start = Instant::now();
    let mut report = VerificationReport::empty(spec);
    let params = parameter_sets(spec, &mut report.notes);
    if params.is_empty() {
        return Err(CampaignError::BadSpec(
            "sharpness needs k >= r + 2 >= 5".into(),
        ));
    }
    for p in params {
        report.parameter_sets.push(p);
        let instances = sharpness_instances(p.k, p.r)?;
        let outcomes: Vec<Outcome> = instances
            .par_iter()
            .enumerate()
            .map(|(i, inst)| check_sharpness(inst, spec.budget, i == 1))
            .collect();
        for o in outcomes {
            report.record(o);
        }
    }
    report.wall_time_secs = start.elapsed().as_secs_f64();
    report.finish();
    Ok(report)
}

/// Dispatches on the spec's claim.
pub fn run_campaign(spec: &CampaignSpec) -> Result<VerificationReport, CampaignError> {
    match spec.claim {
        Claim::LongCycle => verify_theorem(spec),
        Claim::ShortCycle => verify_proposition(spec),
        Claim::Codiameter => verify_codiameter(spec),
        Claim::Sharpness => run_sharpness(spec),
    }
}
