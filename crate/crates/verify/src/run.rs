//! Per-graph evaluation of the selected checks and deterministic aggregation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use inertia_core::generator::Residue;
use inertia_core::inertia::{adjacency_matrix, inertia_charpoly_oracle, inertia_congruence};
use inertia_core::lemmas::lemma_suite;
use inertia_core::matching::{matching_bruteforce, matching_number};
use inertia_core::theorems::{
    check_deletion_corollaries, check_difference_bounds, Index, Side, TheoremReport,
};
use inertia_core::{Error as CoreError, Graph};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{Corpus, CorpusEntry};
use crate::format::encode_graph6;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "INERTIA_WORKERS";

/// Largest order for the characteristic-polynomial inertia oracle.
pub const CHARPOLY_MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Bounds,
    Classifiers,
    Unicyclic,
    Corollaries,
    Lemmas,
    Difference,
    Generator,
    Oracles,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Bounds,
        Check::Classifiers,
        Check::Unicyclic,
        Check::Corollaries,
        Check::Lemmas,
        Check::Difference,
        Check::Generator,
        Check::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bounds => "bounds",
            Check::Classifiers => "classifiers",
            Check::Unicyclic => "unicyclic",
            Check::Corollaries => "corollaries",
            Check::Lemmas => "lemmas",
            Check::Difference => "difference",
            Check::Generator => "generator",
            Check::Oracles => "oracles",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<BTreeSet<Check>, RunError> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.insert(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(RunError::UnknownCheck(s.to_string()));
        }
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| RunError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("unknown check {0:?}; expected a comma-separated subset of bounds, classifiers, unicyclic, corollaries, lemmas, difference, generator, oracles, or all")]
    UnknownCheck(String),
    #[error("{WORKERS_ENV}={0:?} is not a positive integer")]
    InvalidWorkersEnv(String),
    #[error("worker count must be at least 1")]
    ZeroWorkers,
    #[error("cannot start worker pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
    #[serde(rename = "n/a (budget)")]
    Budget,
}

/// Status of the conjectural difference bound; never a failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjecture {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "n/a (budget)")]
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub checks: BTreeSet<Check>,
    /// `None` reads [`WORKERS_ENV`], falling back to the available parallelism.
    pub workers: Option<usize>,
    /// Treat budget skips as failures.
    pub strict: bool,
}

impl RunConfig {
    pub fn new(checks: impl IntoIterator<Item = Check>) -> Self {
        RunConfig {
            checks: checks.into_iter().collect(),
            workers: None,
            strict: false,
        }
    }

    pub fn all() -> Self {
        RunConfig::new(Check::ALL)
    }

    pub fn resolved_workers(&self) -> Result<usize, RunError> {
        let n = match self.workers {
            Some(n) => n,
            None => match std::env::var(WORKERS_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or(RunError::InvalidWorkersEnv(v))?,
                Err(_) => std::thread::available_parallelism().map_or(1, usize::from),
            },
        };
        if n == 0 {
            return Err(RunError::ZeroWorkers);
        }
        Ok(n)
    }
}

/// One report row. Field order is the column order of both report formats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub graph_id: String,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub p: usize,
    pub n: usize,
    pub eta: usize,
    pub m: usize,
    pub c: usize,
    pub disjoint_cycles: bool,
    /// Cycle lengths mod 4, space-separated; empty without disjoint cycles.
    pub residues: String,
    pub p_upper_attained: bool,
    pub p_upper_forest_form: bool,
    pub p_upper_matching_form: bool,
    pub n_upper_attained: bool,
    pub n_upper_forest_form: bool,
    pub n_upper_matching_form: bool,
    pub p_lower_attained: bool,
    pub p_lower_conditions: bool,
    pub n_lower_attained: bool,
    pub n_lower_conditions: bool,
    pub unicyclic_predicted_n: Option<usize>,
    pub unicyclic_predicted_p: Option<usize>,
    pub bounds: Option<Status>,
    pub classifiers: Option<Status>,
    pub unicyclic: Option<Status>,
    pub corollaries: Option<Status>,
    pub lemmas: Option<Status>,
    pub difference: Option<Status>,
    pub conjecture: Option<Conjecture>,
    pub generator: Option<Status>,
    pub oracles: Option<Status>,
    /// `;`-separated diagnostics for failures and budget skips.
    pub notes: String,
}

/// Column names in [`Row`] field order.
pub const COLUMNS: [&str; 33] = [
    "graph_id",
    "graph6",
    "order",
    "size",
    "p",
    "n",
    "eta",
    "m",
    "c",
    "disjoint_cycles",
    "residues",
    "p_upper_attained",
    "p_upper_forest_form",
    "p_upper_matching_form",
    "n_upper_attained",
    "n_upper_forest_form",
    "n_upper_matching_form",
    "p_lower_attained",
    "p_lower_conditions",
    "n_lower_attained",
    "n_lower_conditions",
    "unicyclic_predicted_n",
    "unicyclic_predicted_p",
    "bounds",
    "classifiers",
    "unicyclic",
    "corollaries",
    "lemmas",
    "difference",
    "conjecture",
    "generator",
    "oracles",
    "notes",
];

impl Row {
    pub fn status(&self, check: Check) -> Option<Status> {
        match check {
            Check::Bounds => self.bounds,
            Check::Classifiers => self.classifiers,
            Check::Unicyclic => self.unicyclic,
            Check::Corollaries => self.corollaries,
            Check::Lemmas => self.lemmas,
            Check::Difference => self.difference,
            Check::Generator => self.generator,
            Check::Oracles => self.oracles,
        }
    }

    fn status_mut(&mut self, check: Check) -> &mut Option<Status> {
        match check {
            Check::Bounds => &mut self.bounds,
            Check::Classifiers => &mut self.classifiers,
            Check::Unicyclic => &mut self.unicyclic,
            Check::Corollaries => &mut self.corollaries,
            Check::Lemmas => &mut self.lemmas,
            Check::Difference => &mut self.difference,
            Check::Generator => &mut self.generator,
            Check::Oracles => &mut self.oracles,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph_id: String,
    pub graph6: String,
    pub check: Check,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub check: String,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub budget: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureCounts {
    pub holds: usize,
    pub violated: usize,
    pub budget: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub checks: Vec<CheckCounts>,
    /// Present when the difference check ran.
    pub conjecture: Option<ConjectureCounts>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub rows: Vec<Row>,
    pub summary: Summary,
    /// Wall-clock time; kept out of report files so they stay reproducible.
    pub elapsed: Duration,
}

impl RunReport {
    pub fn has_counterexamples(&self) -> bool {
        !self.summary.counterexamples.is_empty()
    }
}

struct Evaluation {
    row: Row,
    counterexamples: Vec<Counterexample>,
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn base_row(entry: &CorpusEntry, r: &TheoremReport) -> Row {
    let g = &entry.graph;
    let i = &r.facts.inertia;
    Row {
        graph_id: entry.id.clone(),
        graph6: encode_graph6(g),
        order: g.order(),
        size: g.size(),
        p: i.positive,
        n: i.negative,
        eta: i.nullity,
        m: r.facts.matching,
        c: r.facts.cyclomatic,
        disjoint_cycles: r.conditions.disjoint_cycles,
        residues: joined(&r.conditions.residues, " "),
        p_upper_attained: r.p_upper.attained,
        p_upper_forest_form: r.p_upper.forest_form,
        p_upper_matching_form: r.p_upper.matching_form,
        n_upper_attained: r.n_upper.attained,
        n_upper_forest_form: r.n_upper.forest_form,
        n_upper_matching_form: r.n_upper.matching_form,
        p_lower_attained: r.p_lower.attained,
        p_lower_conditions: r.p_lower.conditions,
        n_lower_attained: r.n_lower.attained,
        n_lower_conditions: r.n_lower.conditions,
        unicyclic_predicted_n: r.unicyclic_prediction.map(|(n, _)| n),
        unicyclic_predicted_p: r.unicyclic_prediction.map(|(_, p)| p),
        bounds: None,
        classifiers: None,
        unicyclic: None,
        corollaries: None,
        lemmas: None,
        difference: None,
        conjecture: None,
        generator: None,
        oracles: None,
        notes: String::new(),
    }
}

/// Outcome of one check before strict-mode handling.
enum Outcome {
    Pass,
    Fail(String),
    NotApplicable,
    Budget(String),
}

impl Outcome {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }

    /// Precondition errors mean the check does not apply; budget errors are
    /// skips; anything else is a bug reported as a failure.
    fn from_core_error(e: CoreError) -> Self {
        match e {
            CoreError::Precondition(_) => Outcome::NotApplicable,
            CoreError::BudgetExceeded { .. } => Outcome::Budget(e.to_string()),
            other => Outcome::Fail(format!("internal error: {other}")),
        }
    }
}

fn generator_outcome(r: &TheoremReport, residue: Residue) -> Outcome {
    let mut missing = Vec::new();
    for &(index, side) in residue.attained_bounds() {
        let label = match (index, side) {
            (Index::Positive, Side::Upper) => "p_upper",
            (Index::Negative, Side::Upper) => "n_upper",
            (Index::Positive, Side::Lower) => "p_lower",
            (Index::Negative, Side::Lower) => "n_lower",
        };
        let ok = match (index, side) {
            (Index::Positive, Side::Upper) => {
                r.p_upper.attained && r.p_upper.forest_form && r.p_upper.matching_form
            }
            (Index::Negative, Side::Upper) => {
                r.n_upper.attained && r.n_upper.forest_form && r.n_upper.matching_form
            }
            (Index::Positive, Side::Lower) => r.p_lower.attained && r.p_lower.conditions,
            (Index::Negative, Side::Lower) => r.n_lower.attained && r.n_lower.conditions,
        };
        if !ok {
            missing.push(label);
        }
    }
    Outcome::from_bool(missing.is_empty(), || {
        format!(
            "residue {} output misses {}",
            residue.value(),
            missing.join(", ")
        )
    })
}

fn oracle_outcome(g: &Graph, r: &TheoremReport) -> Outcome {
    let mut problems = Vec::new();
    let mut skipped = Vec::new();
    if g.order() > CHARPOLY_MAX_ORDER {
        skipped.push(format!(
            "charpoly oracle needs order <= {CHARPOLY_MAX_ORDER}"
        ));
    } else {
        let a = adjacency_matrix(g);
        match (inertia_congruence(&a), inertia_charpoly_oracle(&a)) {
            (Ok(x), Ok(y)) if x == y && x == r.facts.inertia => {}
            (Ok(x), Ok(y)) => problems.push(format!("inertia congruence {x} vs charpoly {y}")),
            (Err(e), _) | (_, Err(e)) => problems.push(format!("inertia oracle error: {e}")),
        }
    }
    match matching_bruteforce(g) {
        Ok(m) if m == matching_number(g) => {}
        Ok(m) => problems.push(format!("blossom {} vs brute force {m}", matching_number(g))),
        Err(CoreError::BudgetExceeded { what, detail }) => {
            skipped.push(format!("{what}: {detail}"))
        }
        Err(e) => problems.push(format!("matching oracle error: {e}")),
    }
    if !problems.is_empty() {
        Outcome::Fail(problems.join(", "))
    } else if !skipped.is_empty() {
        Outcome::Budget(skipped.join(", "))
    } else {
        Outcome::Pass
    }
}

fn evaluate(entry: &CorpusEntry, config: &RunConfig) -> Evaluation {
    let g = &entry.graph;
    let r = TheoremReport::of(g);
    let mut row = base_row(entry, &r);
    let mut counterexamples = Vec::new();
    let mut notes: Vec<String> = Vec::new();

    for &check in &config.checks {
        let outcome = match check {
            Check::Bounds => Outcome::from_bool(r.bounds_ok, || {
                format!(
                    "m - c <= p, n <= m + c violated (p={}, n={}, m={}, c={})",
                    row.p, row.n, row.m, row.c
                )
            }),
            Check::Classifiers => Outcome::from_bool(r.classifiers_consistent(), || {
                "an attained flag disagrees with its conditions".into()
            }),
            Check::Unicyclic => match r.unicyclic_consistent() {
                None => Outcome::NotApplicable,
                Some(ok) => Outcome::from_bool(ok, || {
                    let (pn, pp) = r
                        .unicyclic_prediction
                        .expect("consistency implies a prediction");
                    format!(
                        "predicted (n, p) = ({pn}, {pp}), computed ({}, {})",
                        row.n, row.p
                    )
                }),
            },
            Check::Corollaries => match check_deletion_corollaries(g) {
                Ok(ok) => {
                    Outcome::from_bool(ok, || "deleting a cycle vertex breaks a consequence".into())
                }
                Err(e) => Outcome::from_core_error(e),
            },
            Check::Lemmas => {
                let outcomes = lemma_suite(g, &r.facts);
                if outcomes.is_empty() {
                    Outcome::NotApplicable
                } else {
                    let failed: Vec<_> = outcomes
                        .iter()
                        .filter(|o| !o.holds)
                        .map(|o| o.name)
                        .collect();
                    Outcome::from_bool(failed.is_empty(), || {
                        format!("failed: {}", failed.join(", "))
                    })
                }
            }
            Check::Difference => match check_difference_bounds(g) {
                Ok(d) => {
                    row.conjecture = Some(if d.conjecture_ok {
                        Conjecture::Holds
                    } else {
                        Conjecture::Violated
                    });
                    Outcome::from_bool(d.odd_cycles_ok, || {
                        "|p - n| exceeds the number of odd cycles".into()
                    })
                }
                Err(e) => {
                    let o = Outcome::from_core_error(e);
                    if matches!(o, Outcome::Budget(_)) {
                        row.conjecture = Some(Conjecture::Budget);
                    }
                    o
                }
            },
            Check::Generator => match entry.residue {
                None => Outcome::NotApplicable,
                Some(residue) => generator_outcome(&r, residue),
            },
            Check::Oracles => oracle_outcome(g, &r),
        };

        let failure = match outcome {
            Outcome::Pass => {
                *row.status_mut(check) = Some(Status::Pass);
                continue;
            }
            Outcome::NotApplicable => {
                *row.status_mut(check) = Some(Status::NotApplicable);
                continue;
            }
            Outcome::Budget(why) if !config.strict => {
                notes.push(format!("{check}: skipped, {why}"));
                *row.status_mut(check) = Some(Status::Budget);
                continue;
            }
            Outcome::Budget(why) => format!("budget exceeded in strict mode, {why}"),
            Outcome::Fail(why) => why,
        };
        notes.push(format!("{check}: {failure}"));
        counterexamples.push(Counterexample {
            graph_id: row.graph_id.clone(),
            graph6: row.graph6.clone(),
            check,
            detail: failure,
        });
        let status = Status::Fail;
        *row.status_mut(check) = Some(status);
    }
    row.notes = notes.join("; ");
    Evaluation {
        row,
        counterexamples,
    }
}

/// Evaluates every selected check on every graph. Rows come back in corpus
/// order whatever the worker count.
pub fn run_verification(corpus: &Corpus, config: &RunConfig) -> Result<RunReport, RunError> {
    let start = Instant::now();
    let workers = config.resolved_workers()?;
    let evaluations: Vec<Evaluation> = if workers == 1 {
        corpus.entries.iter().map(|e| evaluate(e, config)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()?;
        pool.install(|| {
            corpus
                .entries
                .par_iter()
                .map(|e| evaluate(e, config))
                .collect()
        })
    };

    let mut summary = Summary {
        graphs: evaluations.len(),
        checks: config
            .checks
            .iter()
            .map(|c| CheckCounts {
                check: c.name().to_string(),
                ..CheckCounts::default()
            })
            .collect(),
        conjecture: config
            .checks
            .contains(&Check::Difference)
            .then(ConjectureCounts::default),
        counterexamples: Vec::new(),
    };
    let mut rows = Vec::with_capacity(evaluations.len());
    for ev in evaluations {
        for (counts, &check) in summary.checks.iter_mut().zip(&config.checks) {
            match ev.row.status(check) {
                Some(Status::Pass) => counts.pass += 1,
                Some(Status::Fail) => counts.fail += 1,
                Some(Status::NotApplicable) => counts.not_applicable += 1,
                Some(Status::Budget) => counts.budget += 1,
                None => {}
            }
        }
        if let Some(cc) = summary.conjecture.as_mut() {
            match ev.row.conjecture {
                Some(Conjecture::Holds) => cc.holds += 1,
                Some(Conjecture::Violated) => cc.violated += 1,
                Some(Conjecture::Budget) => cc.budget += 1,
                None => {}
            }
        }
        summary.counterexamples.extend(ev.counterexamples);
        rows.push(ev.row);
    }
    Ok(RunReport {
        rows,
        summary,
        elapsed: start.elapsed(),
    })
}
