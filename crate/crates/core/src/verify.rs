//! Checks every closed-form result against the BFS oracle.
//!
//! Each [`TheoremId`] pairs one evaluator from [`crate::closed_forms`] with
//! a recipe that builds the corresponding graph and measures its index by
//! brute force. Inputs are drawn either from seeded random samples or from
//! exhaustive enumeration of small labeled graphs:
//!
//! * single-graph results (`THM1_DOUBLE`, `THM2_EDC`) enumerate every
//!   connected labeled graph on `2..=n` vertices;
//! * two-factor results (`THM3_JOIN`, `THM5_SYMDIFF`, `THM6_DISJUNCTION`)
//!   take all ordered pairs of connected graphs without well-connected
//!   vertices on at most `min(n, 5)` vertices; `THM4_JOINN` takes ordered
//!   triples on at most 4 vertices; `COR1_NCOPIES` takes 2 and 3 copies of
//!   each graph on at most `min(n, 5)` vertices;
//! * splice results take all pairs of connected graphs on at most
//!   `min(n, 4)` vertices with every choice of anchors;
//! * `COR2_*` enumerate every part vector with 2 to 4 parts of size 2 to 4;
//! * family results sweep fixed parameter ranges in either mode.
//!
//! Every trial owns a generator stream derived from `(seed, theorem,
//! trial_index)`, so results do not depend on how trials are scheduled.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::closed_forms as cf;
use crate::constructions::{self, SpliceSpec};
use crate::generators::{self, FamilySpec, RNG_NAME};
use crate::graph::Graph;
use crate::index::{connective_eccentric_index, count_well_connected};
use crate::io::encode_graph6;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    Regular,
    Thm1Double,
    Thm2Edc,
    Thm3Join,
    Thm4Joinn,
    Cor1Ncopies,
    Cor2Multipartite,
    Cor2Printed,
    Thm5Symdiff,
    Thm6Disjunction,
    SpliceEcc,
    SpliceCei,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::Prop1,
        TheoremId::Prop2,
        TheoremId::Prop3,
        TheoremId::Prop4,
        TheoremId::Prop5,
        TheoremId::Regular,
        TheoremId::Thm1Double,
        TheoremId::Thm2Edc,
        TheoremId::Thm3Join,
        TheoremId::Thm4Joinn,
        TheoremId::Cor1Ncopies,
        TheoremId::Cor2Multipartite,
        TheoremId::Cor2Printed,
        TheoremId::Thm5Symdiff,
        TheoremId::Thm6Disjunction,
        TheoremId::SpliceEcc,
        TheoremId::SpliceCei,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Prop1 => "PROP1",
            TheoremId::Prop2 => "PROP2",
            TheoremId::Prop3 => "PROP3",
            TheoremId::Prop4 => "PROP4",
            TheoremId::Prop5 => "PROP5",
            TheoremId::Regular => "REGULAR",
            TheoremId::Thm1Double => "THM1_DOUBLE",
            TheoremId::Thm2Edc => "THM2_EDC",
            TheoremId::Thm3Join => "THM3_JOIN",
            TheoremId::Thm4Joinn => "THM4_JOINN",
            TheoremId::Cor1Ncopies => "COR1_NCOPIES",
            TheoremId::Cor2Multipartite => "COR2_MULTIPARTITE",
            TheoremId::Cor2Printed => "COR2_PRINTED",
            TheoremId::Thm5Symdiff => "THM5_SYMDIFF",
            TheoremId::Thm6Disjunction => "THM6_DISJUNCTION",
            TheoremId::SpliceEcc => "SPLICE_ECC",
            TheoremId::SpliceCei => "SPLICE_CEI",
        }
    }

    pub fn claim_kind(self) -> ClaimKind {
        match self {
            TheoremId::Thm2Edc => ClaimKind::UpperBound,
            _ => ClaimKind::Equality,
        }
    }

    /// Violations of these claims are the expected outcome and do not fail a run.
    pub fn violations_expected(self) -> bool {
        matches!(self, TheoremId::Thm2Edc | TheoremId::Cor2Printed)
    }

    fn tag(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Equality,
    UpperBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    LhsLess,
    LhsGreater,
}

impl Relation {
    pub fn of(lhs: &Rational, rhs: &Rational) -> Self {
        match lhs.cmp(rhs) {
            Ordering::Less => Relation::LhsLess,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::LhsGreater,
        }
    }
}

impl ClaimKind {
    pub fn is_violation(self, relation: Relation) -> bool {
        match self {
            ClaimKind::Equality => relation != Relation::Equal,
            ClaimKind::UpperBound => relation == Relation::LhsGreater,
        }
    }
}

/// One evaluated input: `lhs` is measured on the constructed graph, `rhs`
/// comes from the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial_index: usize,
    pub input: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
    pub precondition_met: bool,
}

impl TrialRecord {
    fn new(trial_index: usize, input: String, lhs: Rational, rhs: Rational) -> Self {
        let relation = Relation::of(&lhs, &rhs);
        TrialRecord {
            trial_index,
            input,
            lhs,
            rhs,
            relation,
            precondition_met: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Random,
    Exhaustive,
}

/// Counts restricted to trials whose input satisfies an extra hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetTally {
    pub hypothesis: &'static str,
    pub trials: usize,
    pub violation_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub claim_kind: ClaimKind,
    pub mode: Mode,
    /// Candidate inputs examined, including those skipped.
    pub scanned: usize,
    /// Inputs evaluated; `equal_count + strict_count + violation_count`.
    pub trials: usize,
    pub equal_count: usize,
    /// Upper-bound trials where the bound held strictly.
    pub strict_count: usize,
    pub violation_count: usize,
    /// Candidates dropped: disconnected masks, or samples that exhausted
    /// the retry cap.
    pub skipped: usize,
    /// Random samples discarded for failing a precondition.
    pub rejections: u64,
    pub seed: u64,
    pub rng: String,
    pub first_violation: Option<TrialRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<SubsetTally>,
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TheoremReport {
    /// True when an equality claim was contradicted or the run failed.
    pub fn failed(&self) -> bool {
        self.error.is_some() || (self.violation_count > 0 && !self.theorem.violations_expected())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("configuration: {0}")]
    Config(String),
    #[error("trial {index}: {message}")]
    Trial { index: usize, message: String },
}

/// Vertex-count limits for randomly sampled inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeBounds {
    pub min_n: usize,
    /// Single-graph samples.
    pub max_n: usize,
    /// Each factor of a product or join.
    pub max_factor_n: usize,
    /// Each side of a splice.
    pub max_splice_n: usize,
}

impl Default for SizeBounds {
    fn default() -> Self {
        SizeBounds {
            min_n: 3,
            max_n: 40,
            max_factor_n: 12,
            max_splice_n: 15,
        }
    }
}

impl SizeBounds {
    /// Default bounds with every upper limit clamped to `max_n`.
    pub fn capped(max_n: usize) -> Self {
        let d = SizeBounds::default();
        SizeBounds {
            min_n: d.min_n.min(max_n),
            max_n,
            max_factor_n: d.max_factor_n.min(max_n),
            max_splice_n: d.max_splice_n.min(max_n),
        }
    }
}

/// Largest single-graph order accepted by the harness.
pub const MAX_SAMPLE_ORDER: usize = 10_000;
/// Largest factor order; keeps product graphs at or below 10^6 vertices.
pub const MAX_FACTOR_ORDER: usize = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Random { trials: usize },
    Exhaustive { max_n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub sampling: Sampling,
    pub seed: u64,
    pub bounds: SizeBounds,
    /// Precondition rejections allowed per trial before it is skipped.
    pub retry_cap: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            sampling: Sampling::Random { trials: 100 },
            seed: 0,
            bounds: SizeBounds::default(),
            retry_cap: 100,
        }
    }
}

impl VerifyConfig {
    pub fn random(trials: usize, seed: u64) -> Self {
        VerifyConfig {
            sampling: Sampling::Random { trials },
            seed,
            ..Default::default()
        }
    }

    pub fn exhaustive(max_n: usize) -> Self {
        VerifyConfig {
            sampling: Sampling::Exhaustive { max_n },
            ..Default::default()
        }
    }

    fn mode(&self) -> Mode {
        match self.sampling {
            Sampling::Random { .. } => Mode::Random,
            Sampling::Exhaustive { .. } => Mode::Exhaustive,
        }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        let b = &self.bounds;
        match self.sampling {
            Sampling::Random { trials: 0 } => return config_err("trials must be at least 1"),
            Sampling::Exhaustive { max_n } if !(1..=generators::MAX_ENUMERATION_ORDER).contains(&max_n) => {
                return config_err(format!("exhaustive order {max_n} outside 1..=7"))
            }
            _ => {}
        }
        if self.retry_cap == 0 {
            return config_err("retry cap must be at least 1");
        }
        if b.max_n > MAX_SAMPLE_ORDER {
            return config_err(format!("max_n {} above {MAX_SAMPLE_ORDER}", b.max_n));
        }
        if b.max_factor_n > MAX_FACTOR_ORDER || b.max_splice_n > MAX_SAMPLE_ORDER {
            return config_err("factor bounds above the product size cap");
        }
        Ok(())
    }

    fn rng_description(&self, theorem: TheoremId) -> String {
        format!(
            "{RNG_NAME}::seed_from_u64(mix(seed={}, theorem={})), stream = trial_index",
            self.seed,
            theorem.tag()
        )
    }
}

fn config_err<T>(msg: impl Into<String>) -> Result<T, VerifyError> {
    Err(VerifyError::Config(msg.into()))
}

/// SplitMix64 finaliser over `(seed, tag)`.
fn mix(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn trial_rng(seed: u64, theorem: TheoremId, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, theorem.tag()));
    rng.set_stream(index as u64);
    rng
}

enum Outcome {
    Trial {
        record: TrialRecord,
        rejections: u64,
        subset: Option<bool>,
    },
    Skip {
        rejections: u64,
    },
}

impl Outcome {
    fn trial(record: TrialRecord) -> Self {
        Outcome::Trial {
            record,
            rejections: 0,
            subset: None,
        }
    }
}

type TrialFn = dyn Fn(usize) -> Result<Outcome, VerifyError> + Send + Sync;

struct CaseSource {
    count: usize,
    run: Box<TrialFn>,
    subset_label: Option<&'static str>,
}

#[derive(Default)]
struct Tally {
    trials: usize,
    equal: usize,
    strict: usize,
    violations: usize,
    skipped: usize,
    rejections: u64,
    subset_trials: usize,
    subset_violations: usize,
    first_violation: Option<TrialRecord>,
    first_error: Option<VerifyError>,
}

fn earliest<T>(a: Option<T>, b: Option<T>, key: impl Fn(&T) -> usize) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if key(&y) < key(&x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

fn error_index(e: &VerifyError) -> usize {
    match e {
        VerifyError::Trial { index, .. } => *index,
        _ => 0,
    }
}

impl Tally {
    fn single(kind: ClaimKind, index: usize, outcome: Result<Outcome, VerifyError>) -> Self {
        let mut t = Tally::default();
        match outcome {
            Err(e) => {
                t.first_error = Some(match e {
                    VerifyError::Trial { .. } => e,
                    other => VerifyError::Trial {
                        index,
                        message: other.to_string(),
                    },
                })
            }
            Ok(Outcome::Skip { rejections }) => {
                t.skipped = 1;
                t.rejections = rejections;
            }
            Ok(Outcome::Trial {
                record,
                rejections,
                subset,
            }) => {
                t.trials = 1;
                t.rejections = rejections;
                let violated = kind.is_violation(record.relation);
                if subset == Some(true) {
                    t.subset_trials = 1;
                    t.subset_violations = violated as usize;
                }
                if violated {
                    t.violations = 1;
                    t.first_violation = Some(record);
                } else if record.relation == Relation::Equal {
                    t.equal = 1;
                } else {
                    t.strict = 1;
                }
            }
        }
        t
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            trials: self.trials + other.trials,
            equal: self.equal + other.equal,
            strict: self.strict + other.strict,
            violations: self.violations + other.violations,
            skipped: self.skipped + other.skipped,
            rejections: self.rejections + other.rejections,
            subset_trials: self.subset_trials + other.subset_trials,
            subset_violations: self.subset_violations + other.subset_violations,
            first_violation: earliest(self.first_violation, other.first_violation, |r| r.trial_index),
            first_error: earliest(self.first_error, other.first_error, error_index),
        }
    }
}

/// Runs one theorem under `config`. Configuration problems surface as `Err`;
/// a failing trial is recorded in the report's `error` field.
pub fn verify(theorem: TheoremId, config: &VerifyConfig) -> Result<TheoremReport, VerifyError> {
    let start = Instant::now();
    config.validate()?;
    let source = case_source(theorem, config)?;
    let kind = theorem.claim_kind();
    let tally = (0..source.count)
        .into_par_iter()
        .map(|i| Tally::single(kind, i, (source.run)(i)))
        .reduce(Tally::default, Tally::merge);
    Ok(TheoremReport {
        theorem,
        claim_kind: kind,
        mode: config.mode(),
        scanned: source.count,
        trials: tally.trials,
        equal_count: tally.equal,
        strict_count: tally.strict,
        violation_count: tally.violations,
        skipped: tally.skipped,
        rejections: tally.rejections,
        seed: config.seed,
        rng: config.rng_description(theorem),
        first_violation: tally.first_violation,
        subset: source.subset_label.map(|hypothesis| SubsetTally {
            hypothesis,
            trials: tally.subset_trials,
            violation_count: tally.subset_violations,
        }),
        error: tally.first_error.map(|e| e.to_string()),
        elapsed: start.elapsed(),
    })
}

/// Runs every theorem in [`TheoremId::ALL`] order. A configuration error
/// for one theorem is recorded in its report and does not stop the others.
pub fn verify_all(config: &VerifyConfig) -> Vec<TheoremReport> {
    TheoremId::ALL
        .into_iter()
        .map(|theorem| {
            verify(theorem, config).unwrap_or_else(|e| TheoremReport {
                theorem,
                claim_kind: theorem.claim_kind(),
                mode: config.mode(),
                scanned: 0,
                trials: 0,
                equal_count: 0,
                strict_count: 0,
                violation_count: 0,
                skipped: 0,
                rejections: 0,
                seed: config.seed,
                rng: config.rng_description(theorem),
                first_violation: None,
                subset: None,
                error: Some(e.to_string()),
                elapsed: Duration::ZERO,
            })
        })
        .collect()
}

/// First violating trial in scan order within the budget `config`
/// describes, stopping as soon as one is found.
pub fn counterexample_search(theorem: TheoremId, config: &VerifyConfig) -> Result<Option<TrialRecord>, VerifyError> {
    config.validate()?;
    let source = case_source(theorem, config)?;
    let kind = theorem.claim_kind();
    const CHUNK: usize = 4096;
    for start in (0..source.count).step_by(CHUNK) {
        let end = (start + CHUNK).min(source.count);
        let tally = (start..end)
            .into_par_iter()
            .map(|i| Tally::single(kind, i, (source.run)(i)))
            .reduce(Tally::default, Tally::merge);
        if let Some(e) = tally.first_error {
            return Err(e);
        }
        if tally.first_violation.is_some() {
            return Ok(tally.first_violation);
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Case sources

fn case_source(theorem: TheoremId, config: &VerifyConfig) -> Result<CaseSource, VerifyError> {
    use TheoremId::*;
    let cfg = *config;
    match theorem {
        Prop1 => Ok(family_sweep(2..=12, FamilySpec::Complete, cf::cei_complete)),
        Prop2 => Ok(family_sweep(3..=20, FamilySpec::Cycle, cf::cei_cycle)),
        Prop3 => Ok(family_sweep(1..=10, FamilySpec::Hypercube, cf::cei_hypercube)),
        Prop4 => Ok(family_sweep(3..=15, FamilySpec::Prism, cf::cei_prism)),
        Prop5 => Ok(family_sweep(3..=15, FamilySpec::Antiprism, cf::cei_antiprism)),
        Regular => Ok(regular_source()),
        Thm1Double | Thm2Edc => single_graph_source(theorem, cfg),
        Thm3Join | Thm5Symdiff | Thm6Disjunction => pair_source(theorem, cfg),
        Thm4Joinn => join_n_source(cfg),
        Cor1Ncopies => copies_source(cfg),
        Cor2Multipartite | Cor2Printed => multipartite_source(theorem, cfg),
        SpliceEcc | SpliceCei => splice_source(theorem, cfg),
    }
}

fn trial_err(index: usize, e: impl fmt::Display) -> VerifyError {
    VerifyError::Trial {
        index,
        message: e.to_string(),
    }
}

fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

fn oracle(index: usize, g: &Graph) -> Result<Rational, VerifyError> {
    connective_eccentric_index(g).map_err(|e| trial_err(index, e))
}

fn family_sweep(
    params: std::ops::RangeInclusive<usize>,
    family: fn(usize) -> FamilySpec,
    formula: fn(usize) -> Result<Rational, crate::error::FormulaError>,
) -> CaseSource {
    let first = *params.start();
    let count = params.end() + 1 - first;
    CaseSource {
        count,
        subset_label: None,
        run: Box::new(move |i| {
            let spec = family(first + i);
            let g = spec.generate().map_err(|e| trial_err(i, e))?;
            let lhs = oracle(i, &g)?;
            let rhs = formula(first + i).map_err(|e| trial_err(i, e))?;
            Ok(Outcome::trial(TrialRecord::new(i, spec.to_string(), lhs, rhs)))
        }),
    }
}

/// Regular graphs from several families, including products of cycles.
fn regular_cases() -> Vec<(String, Graph)> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend((2..=12).map(FamilySpec::Complete));
    specs.extend((3..=20).map(FamilySpec::Cycle));
    specs.extend((1..=8).map(FamilySpec::Hypercube));
    specs.extend((3..=15).map(FamilySpec::Prism));
    specs.extend((3..=15).map(FamilySpec::Antiprism));
    specs.extend((2..=6).map(|k| FamilySpec::CompleteMultipartite(vec![k, k])));
    specs.extend((3..=5).map(|k| FamilySpec::CompleteMultipartite(vec![2; k])));
    let mut cases: Vec<(String, Graph)> = specs
        .into_iter()
        .map(|s| {
            let g = s.generate().expect("fixed regular family parameters are in range");
            (s.to_string(), g)
        })
        .collect();
    for a in 4..=6 {
        for b in 4..=6 {
            let (ca, cb) = (FamilySpec::Cycle(a), FamilySpec::Cycle(b));
            let (ga, gb) = (ca.generate().unwrap(), cb.generate().unwrap());
            cases.push((
                format!("symdiff({ca}, {cb})"),
                constructions::symmetric_difference(&ga, &gb).unwrap(),
            ));
            cases.push((
                format!("disjunction({ca}, {cb})"),
                constructions::disjunction(&ga, &gb).unwrap(),
            ));
        }
    }
    cases
}

fn regular_source() -> CaseSource {
    let cases = Arc::new(regular_cases());
    CaseSource {
        count: cases.len(),
        subset_label: None,
        run: Box::new(move |i| {
            let (name, g) = &cases[i];
            let Some(delta) = g.is_regular() else {
                return Err(trial_err(i, format!("{name} is not regular")));
            };
            let ecc = g.all_eccentricities().map_err(|e| trial_err(i, e))?;
            let radius = *ecc.iter().min().expect("nonempty");
            let lhs = oracle(i, g)?;
            let rhs = cf::cei_regular(g.order(), delta, radius).map_err(|e| trial_err(i, e))?;
            Ok(Outcome::trial(TrialRecord::new(
                i,
                format!("{name} (n={}, degree={delta}, radius={radius})", g.order()),
                lhs,
                rhs,
            )))
        }),
    }
}

fn random_graph_spec<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> FamilySpec {
    FamilySpec::RandomConnected {
        n: rng.gen_range(lo..=hi),
        p_num: rng.gen_range(0..=5),
        p_den: 10,
        seed: rng.gen(),
    }
}

fn sample_connected<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> (String, Graph) {
    let spec = random_graph_spec(rng, lo, hi);
    let g = spec.generate().expect("sampling bounds validated");
    (spec.to_string(), g)
}

/// Random connected graph without well-connected vertices, by rejection.
fn sample_wc_free<R: Rng>(rng: &mut R, lo: usize, hi: usize, cap: u32, rejections: &mut u64) -> Option<(String, Graph)> {
    for _ in 0..cap {
        let (name, g) = sample_connected(rng, lo, hi);
        if count_well_connected(&g) == 0 {
            return Some((name, g));
        }
        *rejections += 1;
    }
    None
}

fn range_check(lo: usize, hi: usize, what: &str) -> Result<(), VerifyError> {
    if lo > hi {
        config_err(format!("{what}: empty order range {lo}..={hi}"))
    } else {
        Ok(())
    }
}

/// Connected labeled graphs of order `lo..=hi`, addressed by a flat index
/// over all edge masks of each order.
struct MaskSpace {
    orders: Vec<(usize, usize)>, // (n, first flat index)
    total: usize,
}

impl MaskSpace {
    fn new(lo: usize, hi: usize) -> Self {
        let mut orders = Vec::new();
        let mut total = 0;
        for n in lo..=hi {
            orders.push((n, total));
            total += 1usize << generators::pair_count(n);
        }
        MaskSpace { orders, total }
    }

    fn connected(&self, index: usize) -> Option<Graph> {
        let &(n, base) = self.orders.iter().rev().find(|&&(_, base)| base <= index)?;
        let g = generators::graph_from_mask(n, (index - base) as u64);
        g.is_connected().then_some(g)
    }
}

/// All connected labeled graphs on `lo..=hi` vertices that satisfy `keep`.
fn enumerate_filtered(lo: usize, hi: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| generators::enumerate_labeled_connected(n).expect("order within enumeration cap"))
        .filter(|g| keep(g))
        .collect()
}

fn wc_free(g: &Graph) -> bool {
    count_well_connected(g) == 0
}

fn single_graph_source(theorem: TheoremId, cfg: VerifyConfig) -> Result<CaseSource, VerifyError> {
    let evaluate = move |i: usize, input: String, g: &Graph| -> Result<Outcome, VerifyError> {
        let summary = crate::index::index_summary(g).map_err(|e| trial_err(i, e))?;
        let (n, wc) = (summary.n, summary.well_connected_count);
        let (lhs, rhs, subset) = if theorem == TheoremId::Thm1Double {
            let d = constructions::double_graph(g).map_err(|e| trial_err(i, e))?;
            (oracle(i, &d)?, cf::thm1_double(&summary.cei, n, wc), None)
        } else {
            let d = constructions::extended_double_cover(g).map_err(|e| trial_err(i, e))?;
            let ecc = g.all_eccentricities().map_err(|e| trial_err(i, e))?;
            let hypothesis = ecc.iter().enumerate().all(|(v, &e)| e <= g.degree(v));
            (oracle(i, &d)?, cf::thm2_edc_bound(&summary.cei, n, wc), Some(hypothesis))
        };
        Ok(Outcome::Trial {
            record: TrialRecord::new(i, input, lhs, rhs),
            rejections: 0,
            subset,
        })
    };
    let subset_label = (theorem == TheoremId::Thm2Edc).then_some("ecc(v) <= deg(v) for every vertex");
    match cfg.sampling {
        Sampling::Exhaustive { max_n } => {
            let space = MaskSpace::new(2, max_n.max(1));
            let count = if max_n >= 2 { space.total } else { 0 };
            Ok(CaseSource {
                count,
                subset_label,
                run: Box::new(move |i| match space.connected(i) {
                    Some(g) => evaluate(i, format!("g6:{}", g6(&g)), &g),
                    None => Ok(Outcome::Skip { rejections: 0 }),
                }),
            })
        }
        Sampling::Random { trials } => {
            let lo = cfg.bounds.min_n.max(2);
            range_check(lo, cfg.bounds.max_n, theorem.name())?;
            Ok(CaseSource {
                count: trials,
                subset_label,
                run: Box::new(move |i| {
                    let mut rng = trial_rng(cfg.seed, theorem, i);
                    let (name, g) = sample_connected(&mut rng, lo, cfg.bounds.max_n);
                    evaluate(i, name, &g)
                }),
            })
        }
    }
}

/// Smallest order of a connected graph with no well-connected vertex.
const WC_FREE_MIN_ORDER: usize = 4;

fn factor_range(cfg: &VerifyConfig, what: &str) -> Result<(usize, usize), VerifyError> {
    let lo = cfg.bounds.min_n.max(WC_FREE_MIN_ORDER);
    let hi = cfg.bounds.max_factor_n;
    if hi < WC_FREE_MIN_ORDER {
        return config_err(format!(
            "{what}: factors need at least {WC_FREE_MIN_ORDER} vertices to avoid well-connected vertices, bound is {hi}"
        ));
    }
    range_check(lo, hi, what)?;
    Ok((lo, hi))
}

fn evaluate_pair(theorem: TheoremId, i: usize, input: String, g1: &Graph, g2: &Graph) -> Result<Outcome, VerifyError> {
    let (m1, m2, n1, n2) = (g1.size(), g2.size(), g1.order(), g2.order());
    let (built, rhs) = match theorem {
        TheoremId::Thm3Join => (constructions::join(g1, g2), cf::thm3_join(m1, m2, n1, n2)),
        TheoremId::Thm5Symdiff => (constructions::symmetric_difference(g1, g2), cf::thm5_symdiff(m1, m2, n1, n2)),
        TheoremId::Thm6Disjunction => (constructions::disjunction(g1, g2), cf::thm6_disjunction(m1, m2, n1, n2)),
        _ => unreachable!("pair theorems only"),
    };
    let built = built.map_err(|e| trial_err(i, e))?;
    let mut record = TrialRecord::new(i, input, oracle(i, &built)?, rhs);
    record.precondition_met = wc_free(g1) && wc_free(g2);
    Ok(Outcome::trial(record))
}

fn pair_source(theorem: TheoremId, cfg: VerifyConfig) -> Result<CaseSource, VerifyError> {
    match cfg.sampling {
        Sampling::Exhaustive { max_n } => {
            let pool = Arc::new(enumerate_filtered(WC_FREE_MIN_ORDER, max_n.min(5), wc_free));
            if pool.is_empty() {
                return config_err(format!("{theorem}: exhaustive order must be at least {WC_FREE_MIN_ORDER}"));
            }
            let k = pool.len();
            Ok(CaseSource {
                count: k * k,
                subset_label: None,
                run: Box::new(move |i| {
                    let (g1, g2) = (&pool[i / k], &pool[i % k]);
                    evaluate_pair(theorem, i, format!("g6:{} , g6:{}", g6(g1), g6(g2)), g1, g2)
                }),
            })
        }
        Sampling::Random { trials } => {
            let (lo, hi) = factor_range(&cfg, theorem.name())?;
            Ok(CaseSource {
                count: trials,
                subset_label: None,
                run: Box::new(move |i| {
                    let mut rng = trial_rng(cfg.seed, theorem, i);
                    let mut rejections = 0;
                    let a = sample_wc_free(&mut rng, lo, hi, cfg.retry_cap, &mut rejections);
                    let b = a
                        .as_ref()
                        .and_then(|_| sample_wc_free(&mut rng, lo, hi, cfg.retry_cap, &mut rejections));
                    let (Some((s1, g1)), Some((s2, g2))) = (a, b) else {
                        return Ok(Outcome::Skip { rejections });
                    };
                    match evaluate_pair(theorem, i, format!("{s1} , {s2}"), &g1, &g2)? {
                        Outcome::Trial { record, subset, .. } => Ok(Outcome::Trial {
                            record,
                            rejections,
                            subset,
                        }),
                        skip => Ok(skip),
                    }
                }),
            })
        }
    }
}

fn evaluate_join_n(i: usize, input: String, parts: &[Graph]) -> Result<Outcome, VerifyError> {
    let joined = constructions::join_n(parts).map_err(|e| trial_err(i, e))?;
    let m: Vec<_> = parts.iter().map(Graph::size).collect();
    let n: Vec<_> = parts.iter().map(Graph::order).collect();
    let rhs = cf::thm4_join_n(&m, &n).map_err(|e| trial_err(i, e))?;
    let mut record = TrialRecord::new(i, input, oracle(i, &joined)?, rhs);
    record.precondition_met = parts.iter().all(wc_free);
    Ok(Outcome::trial(record))
}

fn join_n_source(cfg: VerifyConfig) -> Result<CaseSource, VerifyError> {
    let theorem = TheoremId::Thm4Joinn;
    match cfg.sampling {
        Sampling::Exhaustive { max_n } => {
            let pool = Arc::new(enumerate_filtered(WC_FREE_MIN_ORDER, max_n.min(4), wc_free));
            if pool.is_empty() {
                return config_err(format!("{theorem}: exhaustive order must be at least {WC_FREE_MIN_ORDER}"));
            }
            let k = pool.len();
            Ok(CaseSource {
                count: k * k * k,
                subset_label: None,
                run: Box::new(move |i| {
                    let parts = [pool[i / (k * k)].clone(), pool[i / k % k].clone(), pool[i % k].clone()];
                    let input = parts.iter().map(|g| format!("g6:{}", g6(g))).collect::<Vec<_>>().join(" , ");
                    evaluate_join_n(i, input, &parts)
                }),
            })
        }
        Sampling::Random { trials } => {
            let (lo, hi) = factor_range(&cfg, theorem.name())?;
            Ok(CaseSource {
                count: trials,
                subset_label: None,
                run: Box::new(move |i| {
                    let mut rng = trial_rng(cfg.seed, theorem, i);
                    let k = rng.gen_range(2..=4);
                    let mut rejections = 0;
                    let mut names = Vec::with_capacity(k);
                    let mut parts = Vec::with_capacity(k);
                    for _ in 0..k {
                        match sample_wc_free(&mut rng, lo, hi, cfg.retry_cap, &mut rejections) {
                            Some((s, g)) => {
                                names.push(s);
                                parts.push(g);
                            }
                            None => return Ok(Outcome::Skip { rejections }),
                        }
                    }
                    let Outcome::Trial { record, .. } = evaluate_join_n(i, names.join(" , "), &parts)? else {
                        unreachable!()
                    };
                    Ok(Outcome::Trial {
                        record,
                        rejections,
                        subset: None,
                    })
                }),
            })
        }
    }
}

fn evaluate_copies(i: usize, input: String, copies: usize, g: &Graph) -> Result<Outcome, VerifyError> {
    let parts = vec![g.clone(); copies];
    let joined = constructions::join_n(&parts).map_err(|e| trial_err(i, e))?;
    let rhs = cf::cor1_ncopies(copies, g.size(), g.order()).map_err(|e| trial_err(i, e))?;
    let mut record = TrialRecord::new(i, format!("{copies} x {input}"), oracle(i, &joined)?, rhs);
    record.precondition_met = wc_free(g);
    Ok(Outcome::trial(record))
}

fn copies_source(cfg: VerifyConfig) -> Result<CaseSource, VerifyError> {
    let theorem = TheoremId::Cor1Ncopies;
    match cfg.sampling {
        Sampling::Exhaustive { max_n } => {
            let pool = Arc::new(enumerate_filtered(WC_FREE_MIN_ORDER, max_n.min(5), wc_free));
            if pool.is_empty() {
                return config_err(format!("{theorem}: exhaustive order must be at least {WC_FREE_MIN_ORDER}"));
            }
            Ok(CaseSource {
                count: 2 * pool.len(),
                subset_label: None,
                run: Box::new(move |i| {
                    let g = &pool[i / 2];
                    evaluate_copies(i, format!("g6:{}", g6(g)), 2 + i % 2, g)
                }),
            })
        }
        Sampling::Random { trials } => {
            let (lo, hi) = factor_range(&cfg, theorem.name())?;
            Ok(CaseSource {
                count: trials,
                subset_label: None,
                run: Box::new(move |i| {
                    let mut rng = trial_rng(cfg.seed, theorem, i);
                    let copies = rng.gen_range(2..=4);
                    let mut rejections = 0;
                    let Some((name, g)) = sample_wc_free(&mut rng, lo, hi, cfg.retry_cap, &mut rejections) else {
                        return Ok(Outcome::Skip { rejections });
                    };
                    let Outcome::Trial { record, .. } = evaluate_copies(i, name, copies, &g)? else {
                        unreachable!()
                    };
                    Ok(Outcome::Trial {
                        record,
                        rejections,
                        subset: None,
                    })
                }),
            })
        }
    }
}

/// Every part vector with 2..=4 parts, each of size 2..=4, in
/// lexicographic order by length then entries.
pub fn small_part_vectors() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 2..=4u32 {
        for code in 0..3usize.pow(k) {
            let mut c = code;
            let mut parts = vec![0; k as usize];
            for slot in parts.iter_mut().rev() {
                *slot = 2 + c % 3;
                c /= 3;
            }
            out.push(parts);
        }
    }
    out
}

fn multipartite_source(theorem: TheoremId, cfg: VerifyConfig) -> Result<CaseSource, VerifyError> {
    let formula = if theorem == TheoremId::Cor2Printed {
        cf::cor2_multipartite_printed
    } else {
        cf::cor2_multipartite
    };
    let evaluate = move |i: usize, parts: Vec<usize>| -> Result<Outcome, VerifyError> {
        let spec = FamilySpec::CompleteMultipartite(parts);
        let FamilySpec::CompleteMultipartite(parts) = &spec else { unreachable!() };
        let g = spec.generate().map_err(|e| trial_err(i, e))?;
        let rhs = formula(parts).map_err(|e| trial_err(i, e))?;
        Ok(Outcome::trial(TrialRecord::new(i, spec.to_string(), oracle(i, &g)?, rhs)))
    };
    match cfg.sampling {
        Sampling::Exhaustive { .. } => {
            let vectors = Arc::new(small_part_vectors());
            Ok(CaseSource {
                count: vectors.len(),
                subset_label: None,
                run: Box::new(move |i| evaluate(i, vectors[i].clone())),
            })
        }
        Sampling::Random { trials } => {
            let max_total = cfg.bounds.max_n;
            if max_total < 4 {
                return config_err(format!(
                    "{theorem}: needs at least two parts of size 2 (4 vertices), bound is {max_total}"
                ));
            }
            Ok(CaseSource {
                count: trials,
                subset_label: None,
                run: Box::new(move |i| {
                    let mut rng = trial_rng(cfg.seed, theorem, i);
                    let mut rejections = 0;
                    for _ in 0..cfg.retry_cap {
                        let k = rng.gen_range(2..=4);
                        let parts: Vec<usize> = (0..k).map(|_| rng.gen_range(2..=4)).collect();
                        if parts.iter().sum::<usize>() <= max_total {
                            return match evaluate(i, parts)? {
                                Outcome::Trial { record, subset, .. } => Ok(Outcome::Trial {
                                    record,
                                    rejections,
                                    subset,
                                }),
                                skip => Ok(skip),
                            };
                        }
                        rejections += 1;
                    }
                    Ok(Outcome::Skip { rejections })
                }),
            })
        }
    }
}

fn evaluate_splice(theorem: TheoremId, i: usize, input: String, spec: &SpliceSpec<'_>) -> Result<Outcome, VerifyError> {
    let s = constructions::splice(spec).map_err(|e| trial_err(i, e))?;
    let record = if theorem == TheoremId::SpliceEcc {
        let measured = s.all_eccentricities().map_err(|e| trial_err(i, e))?;
        let predicted = cf::splice_eccentricities(spec).map_err(|e| trial_err(i, e))?;
        match (0..measured.len()).find(|&x| measured[x] != predicted[x]) {
            Some(x) => TrialRecord::new(
                i,
                format!("{input}; vertex {x}"),
                Rational::from(measured[x]),
                Rational::from(predicted[x]),
            ),
            None => TrialRecord::new(
                i,
                format!("{input}; all {} vertices (sum of eccentricities)", measured.len()),
                Rational::from(measured.iter().sum::<usize>()),
                Rational::from(predicted.iter().sum::<usize>()),
            ),
        }
    } else {
        let lhs = oracle(i, &s)?;
        let rhs = cf::splice_cei_formula(spec).map_err(|e| trial_err(i, e))?;
        TrialRecord::new(i, input, lhs, rhs)
    };
    Ok(Outcome::trial(record))
}

fn splice_source(theorem: TheoremId, cfg: VerifyConfig) -> Result<CaseSource, VerifyError> {
    match cfg.sampling {
        Sampling::Exhaustive { max_n } => {
            let pool = enumerate_filtered(1, max_n.min(4), |_| true);
            // Every (g1, g2, v1, v2) with at least two vertices after splicing.
            let mut cases = Vec::new();
            for a in 0..pool.len() {
                for b in 0..pool.len() {
                    if pool[a].order() + pool[b].order() < 3 {
                        continue;
                    }
                    for v1 in 0..pool[a].order() {
                        for v2 in 0..pool[b].order() {
                            cases.push((a, b, v1, v2));
                        }
                    }
                }
            }
            let pool = Arc::new(pool);
            Ok(CaseSource {
                count: cases.len(),
                subset_label: None,
                run: Box::new(move |i| {
                    let (a, b, v1, v2) = cases[i];
                    let spec = SpliceSpec {
                        g1: &pool[a],
                        g2: &pool[b],
                        v1,
                        v2,
                    };
                    let input = format!("g6:{} at {v1} , g6:{} at {v2}", g6(spec.g1), g6(spec.g2));
                    evaluate_splice(theorem, i, input, &spec)
                }),
            })
        }
        Sampling::Random { trials } => {
            let lo = cfg.bounds.min_n.clamp(2, cfg.bounds.max_splice_n.max(2));
            range_check(lo, cfg.bounds.max_splice_n, theorem.name())?;
            Ok(CaseSource {
                count: trials,
                subset_label: None,
                run: Box::new(move |i| {
                    let mut rng = trial_rng(cfg.seed, theorem, i);
                    let (s1, g1) = sample_connected(&mut rng, lo, cfg.bounds.max_splice_n);
                    let (s2, g2) = sample_connected(&mut rng, lo, cfg.bounds.max_splice_n);
                    let v1 = rng.gen_range(0..g1.order());
                    let v2 = rng.gen_range(0..g2.order());
                    let spec = SpliceSpec {
                        g1: &g1,
                        g2: &g2,
                        v1,
                        v2,
                    };
                    evaluate_splice(theorem, i, format!("{s1} at {v1} , {s2} at {v2}"), &spec)
                }),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Rendering

/// Plain-text table, one line per report. `timing` adds elapsed times.
pub fn render_table(reports: &[TheoremReport], timing: bool) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<18} {:<11} {:<10} {:>8} {:>8} {:>8} {:>9} {:>8}  status",
        "theorem", "claim", "mode", "trials", "equal", "strict", "violation", "skipped"
    );
    for r in reports {
        let claim = match r.claim_kind {
            ClaimKind::Equality => "equality",
            ClaimKind::UpperBound => "upper_bound",
        };
        let mode = match r.mode {
            Mode::Random => "random",
            Mode::Exhaustive => "exhaustive",
        };
        let status = if let Some(e) = &r.error {
            format!("ERROR {e}")
        } else if r.violation_count == 0 {
            "ok".to_string()
        } else if r.theorem.violations_expected() {
            "VIOLATED (expected)".to_string()
        } else {
            "VIOLATED".to_string()
        };
        let _ = write!(
            out,
            "{:<18} {:<11} {:<10} {:>8} {:>8} {:>8} {:>9} {:>8}  {status}",
            r.theorem.name(),
            claim,
            mode,
            r.trials,
            r.equal_count,
            r.strict_count,
            r.violation_count,
            r.skipped
        );
        if timing {
            let _ = write!(out, "  [{:.3}s]", r.elapsed.as_secs_f64());
        }
        out.push('\n');
        if let Some(v) = &r.first_violation {
            let _ = writeln!(
                out,
                "    first violation #{}: {}  lhs={} rhs={} ({:?})",
                v.trial_index, v.input, v.lhs, v.rhs, v.relation
            );
        }
        if let Some(s) = &r.subset {
            let _ = writeln!(
                out,
                "    restricted to {}: {} trials, {} violations",
                s.hypothesis, s.trials, s.violation_count
            );
        }
    }
    out
}

/// JSON array of reports. `timing` adds an `elapsed_ms` field to each.
pub fn render_json(reports: &[TheoremReport], timing: bool) -> String {
    let values: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("reports serialize");
            if timing {
                v["elapsed_ms"] = serde_json::Value::from(r.elapsed.as_millis() as u64);
            }
            v
        })
        .collect();
    serde_json::to_string_pretty(&values).expect("reports serialize")
}
