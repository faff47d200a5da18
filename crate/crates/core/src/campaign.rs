//! Campaigns: a family, a size range and a set of checks, evaluated on a
//! worker pool and emitted in deterministic `(family, n)` order.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    self, csv_error, BoundCheck, Facts, Ledger, LedgerFormat, Quantity, Relation, Summary,
    KN_STRUCTURE_RANGE,
};
use crate::error::{Error, Result};
use crate::families::{predict_tdc_of_middle, Family, FamilySpec, PredictedValue};
use crate::graph::Graph;
use crate::middle::middle_graph;
use crate::solve::Budget;

/// Default per-solve node limit.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "MIDTDC_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Formula,
    GeneralBounds,
    MiddleBounds,
    TreeTheorems,
    KnStructure,
    /// Structural statements on the optimal middle-graph certificate.
    CertificateLemmas,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Formula,
        Check::GeneralBounds,
        Check::MiddleBounds,
        Check::TreeTheorems,
        Check::KnStructure,
        Check::CertificateLemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Formula => "formula",
            Check::GeneralBounds => "general_bounds",
            Check::MiddleBounds => "middle_bounds",
            Check::TreeTheorems => "tree_theorems",
            Check::KnStructure => "kn_structure",
            Check::CertificateLemmas => "certificate_lemmas",
        }
    }

    /// The checks meaningful for a family.
    pub fn defaults_for(family: Family) -> Vec<Check> {
        Check::ALL
            .into_iter()
            .filter(|c| match c {
                Check::Formula => !family.is_tree_family(),
                Check::TreeTheorems => {
                    family.is_tree_family()
                        || matches!(family, Family::Path | Family::Star | Family::DoubleStar)
                }
                Check::KnStructure => family == Family::Complete,
                _ => true,
            })
            .collect()
    }

    /// Parses a comma-separated list such as `formula,tree_theorems`.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut checks: Vec<Check> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        checks.sort();
        checks.dedup();
        Ok(checks)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.replace('-', "_");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

/// Inclusive size range, written `3..10`, `3..=10` or `5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SizeRange {
    pub lo: usize,
    pub hi: usize,
}

impl SizeRange {
    pub fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub fn single(n: usize) -> Self {
        Self { lo: n, hi: n }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for SizeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for SizeRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad =
            || Error::InvalidParameter(format!("invalid size range `{s}` (expected N or LO..HI)"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let range = match s.split_once("..") {
            Some((lo, hi)) => Self::new(num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
            None => Self::single(num(s)?),
        };
        if range.lo > range.hi {
            return Err(bad());
        }
        Ok(range)
    }
}

impl TryFrom<String> for SizeRange {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SizeRange> for String {
    fn from(r: SizeRange) -> String {
        r.to_string()
    }
}

/// Per-solve limits. A time limit makes results depend on machine speed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetSpec {
    #[serde(default = "default_nodes")]
    pub max_nodes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_time_ms: Option<u64>,
}

fn default_nodes() -> u64 {
    DEFAULT_NODE_BUDGET
}

impl Default for BudgetSpec {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_NODE_BUDGET,
            max_time_ms: None,
        }
    }
}

impl BudgetSpec {
    pub fn budget(self) -> Budget {
        Budget {
            max_nodes: Some(self.max_nodes),
            max_time: self.max_time_ms.map(Duration::from_millis),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputSpec {
    pub path: PathBuf,
    #[serde(default = "default_format")]
    pub format: LedgerFormat,
}

fn default_format() -> LedgerFormat {
    LedgerFormat::Csv
}

/// One campaign, also the schema of the JSON config file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSpec {
    pub family: Family,
    pub n_range: SizeRange,
    /// Defaults to every check meaningful for the family.
    #[serde(default)]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub budget: BudgetSpec,
    /// Seed for `tree_random`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputSpec>,
}

impl CampaignSpec {
    pub fn new(family: Family, n_range: SizeRange) -> Self {
        Self {
            family,
            n_range,
            checks: Vec::new(),
            budget: BudgetSpec::default(),
            seed: None,
            output: None,
        }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn with_budget(mut self, max_nodes: u64) -> Self {
        self.budget.max_nodes = max_nodes;
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    /// Requested checks, or the family defaults when none were given.
    pub fn effective_checks(&self) -> Vec<Check> {
        if self.checks.is_empty() {
            Check::defaults_for(self.family)
        } else {
            let mut c = self.checks.clone();
            c.sort();
            c.dedup();
            c
        }
    }

    pub fn validate(&self) -> Result<()> {
        let f = self.family;
        for n in [self.n_range.lo, self.n_range.hi] {
            FamilySpec::new(f, n).validate()?;
        }
        if self.budget.max_nodes == 0 || self.budget.max_time_ms == Some(0) {
            return Err(Error::InvalidParameter("budget must be positive".into()));
        }
        if self.effective_checks().contains(&Check::KnStructure) {
            if f != Family::Complete {
                return Err(Error::InvalidParameter(format!(
                    "kn_structure applies to the complete family, not {f}"
                )));
            }
            if !KN_STRUCTURE_RANGE.contains(&self.n_range.lo)
                || !KN_STRUCTURE_RANGE.contains(&self.n_range.hi)
            {
                return Err(Error::InvalidParameter(format!(
                    "kn_structure supports n in 2..=6, got {}",
                    self.n_range
                )));
            }
        }
        Ok(())
    }

    fn family_spec(&self, n: usize) -> FamilySpec {
        FamilySpec {
            family: self.family,
            n,
            seed: match self.family {
                Family::TreeRandom => Some(self.seed.unwrap_or(0)),
                _ => None,
            },
        }
    }
}

/// Outcome for one graph of a campaign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceResult {
    pub family: Family,
    pub n: usize,
    pub instance: String,
    pub predicted: Option<PredictedValue>,
    /// `χ_d^t(M(G))`.
    pub solved: Quantity,
    pub rows: Vec<BoundCheck>,
}

impl InstanceResult {
    /// `yes`/`no` when decidable, `unknown` when the solve was cut short,
    /// empty without a prediction.
    pub fn matches(&self) -> &'static str {
        let Some(p) = self.predicted else { return "" };
        let (lo, hi) = match p {
            PredictedValue::Exact { value } => (value, value),
            PredictedValue::Interval { lo, hi } => (lo, hi),
        };
        let s = self.solved;
        if s.lo >= lo && s.hi.is_some_and(|h| h <= hi) {
            "yes"
        } else if s.hi.is_some_and(|h| h < lo) || s.lo > hi {
            "no"
        } else {
            "unknown"
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: String,
    pub n: usize,
    pub predicted: String,
    pub solved: String,
    #[serde(rename = "match")]
    pub matched: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignResult {
    pub instances: Vec<InstanceResult>,
}

impl CampaignResult {
    pub fn ledger(&self) -> Ledger {
        self.instances
            .iter()
            .flat_map(|i| i.rows.iter().cloned())
            .collect()
    }

    pub fn summary(&self) -> Summary {
        self.ledger().summary()
    }

    pub fn table(&self) -> Vec<TableRow> {
        self.instances
            .iter()
            .map(|i| TableRow {
                family: i.family.name().to_string(),
                n: i.n,
                predicted: i.predicted.map_or(String::new(), |p| p.to_string()),
                solved: i.solved.to_string(),
                matched: i.matches().to_string(),
            })
            .collect()
    }

    pub fn table_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in self.table() {
            w.serialize(row).map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Worker count from the environment, or rayon's default.
pub fn worker_count() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(Error::InvalidParameter(format!(
                "{WORKERS_ENV} must be a positive integer, got `{v}`"
            ))),
        },
        Err(_) => Ok(None),
    }
}

struct Job {
    family_spec: FamilySpec,
    instance: String,
    graph: Graph,
    checks: Vec<Check>,
    budget: Budget,
}

fn jobs(spec: &CampaignSpec) -> Result<Vec<Job>> {
    spec.validate()?;
    let checks = spec.effective_checks();
    let mut out = Vec::new();
    for n in spec.n_range.iter() {
        let fs = spec.family_spec(n);
        let graphs = fs.instances()?;
        let many = graphs.len() > 1 || spec.family == Family::TreeExhaustive;
        for (k, graph) in graphs.into_iter().enumerate() {
            out.push(Job {
                family_spec: fs,
                instance: if many {
                    format!("{}#{k}", fs.tag())
                } else {
                    fs.tag()
                },
                graph,
                checks: checks.clone(),
                budget: spec.budget.budget(),
            });
        }
    }
    Ok(out)
}

fn evaluate(job: &Job) -> Result<InstanceResult> {
    let g = &job.graph;
    let tag = &job.instance;
    let mname = format!("M({tag})");
    let mf = Facts::middle(&mname, middle_graph(g)?, job.budget);
    let connected = g.order() >= 2 && g.is_connected();
    let mut rows = Vec::new();
    for &check in &job.checks {
        match check {
            Check::Formula => rows.extend(bounds::check_formula(&job.family_spec, &mf)?),
            Check::GeneralBounds => {
                if connected {
                    let base = Facts::plain(tag.as_str(), g.clone(), job.budget);
                    rows.extend(bounds::check_general_bounds(&base)?);
                    rows.extend(bounds::check_general_bounds(&mf)?);
                } else {
                    for name in [tag.as_str(), mname.as_str()] {
                        rows.push(BoundCheck::skipped(
                            "general",
                            name,
                            Relation::Le,
                            "needs a connected graph of order at least 2",
                        ));
                    }
                }
            }
            Check::MiddleBounds => rows.extend(bounds::check_middle_bounds(&mf)?),
            Check::TreeTheorems => {
                if g.is_tree() && g.order() >= 2 {
                    rows.extend(bounds::check_tree_theorems(&mf)?);
                } else {
                    rows.push(BoundCheck::skipped(
                        "tree",
                        &mname,
                        Relation::Le,
                        "base graph is not a tree",
                    ));
                }
            }
            Check::KnStructure => {
                rows.extend(bounds::check_kn_structure(job.family_spec.n, job.budget)?)
            }
            Check::CertificateLemmas => {
                if let Some(cert) = mf.tdc_report()?.tdc_certificate() {
                    let mg = mf.middle_graph().expect("middle subject");
                    rows.extend(bounds::check_middle_certificate(mg, cert, &mname)?);
                }
            }
        }
    }
    Ok(InstanceResult {
        family: job.family_spec.family,
        n: job.family_spec.n,
        instance: tag.clone(),
        predicted: predict_tdc_of_middle(&job.family_spec)?.map(|p| p.value),
        solved: mf.tdc()?,
        rows,
    })
}

/// Runs several campaigns on one worker pool; results keep campaign order,
/// then size order, then enumeration order.
pub fn run_campaigns(specs: &[CampaignSpec]) -> Result<CampaignResult> {
    let mut all = Vec::new();
    for spec in specs {
        all.extend(jobs(spec)?);
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = worker_count()? {
        builder = builder.num_threads(k);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    let instances = pool.install(|| all.par_iter().map(evaluate).collect::<Result<Vec<_>>>())?;
    Ok(CampaignResult { instances })
}

pub fn run_campaign(spec: &CampaignSpec) -> Result<CampaignResult> {
    run_campaigns(std::slice::from_ref(spec))
}

/// The campaigns covering the closed forms, the complete-graph structure
/// and every tree up to order 8.
pub fn standard_campaigns(max_nodes: u64) -> Vec<CampaignSpec> {
    let r = SizeRange::new;
    [
        (Family::Path, r(3, 12)),
        (Family::Cycle, r(3, 10)),
        (Family::Star, r(3, 8)),
        (Family::DoubleStar, r(1, 4)),
        (Family::Wheel, r(4, 7)),
        (Family::Friendship, r(2, 3)),
        (Family::Complete, r(2, 6)),
        (Family::TreeExhaustive, r(2, 8)),
    ]
    .into_iter()
    .map(|(f, range)| CampaignSpec::new(f, range).with_budget(max_nodes))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::CheckStatus;

    #[test]
    fn size_ranges() {
        assert_eq!("3..10".parse::<SizeRange>().unwrap(), SizeRange::new(3, 10));
        assert_eq!(
            "3..=10".parse::<SizeRange>().unwrap(),
            SizeRange::new(3, 10)
        );
        assert_eq!("8".parse::<SizeRange>().unwrap(), SizeRange::single(8));
        assert!("9..3".parse::<SizeRange>().is_err());
        assert!("a..3".parse::<SizeRange>().is_err());
    }

    #[test]
    fn config_round_trip() {
        let text = r#"{"family": "path", "n_range": "3..5", "checks": ["formula"],
                       "output": {"path": "ledger.json", "format": "json"}}"#;
        let spec = CampaignSpec::from_json(text).unwrap();
        assert_eq!(spec.budget.max_nodes, DEFAULT_NODE_BUDGET);
        assert_eq!(spec.output.as_ref().unwrap().format, LedgerFormat::Json);
        let again: CampaignSpec =
            serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(again, spec);
        assert!(CampaignSpec::from_json(r#"{"family": "wheel", "n_range": "3..5"}"#).is_err());
        assert!(CampaignSpec::from_json(
            r#"{"family": "path", "n_range": "3..5", "checks": ["kn_structure"]}"#
        )
        .is_err());
        assert!(CampaignSpec::from_json(
            r#"{"family": "complete", "n_range": "2..7", "checks": ["kn_structure"]}"#
        )
        .is_err());
    }

    #[test]
    fn path_formula_rows() {
        let spec = CampaignSpec::new(Family::Path, SizeRange::new(3, 10))
            .with_checks(vec![Check::Formula]);
        let result = run_campaign(&spec).unwrap();
        let ledger = result.ledger();
        assert_eq!(ledger.len(), 8);
        assert_eq!(result.summary().line(), "PASS 8/8");
    }

    #[test]
    fn tables() {
        let table = |f, lo, hi| {
            let spec =
                CampaignSpec::new(f, SizeRange::new(lo, hi)).with_checks(vec![Check::Formula]);
            run_campaign(&spec).unwrap().table()
        };
        let predicted =
            |rows: Vec<TableRow>| rows.into_iter().map(|r| r.predicted).collect::<Vec<_>>();
        assert_eq!(
            predicted(table(Family::Cycle, 3, 8)),
            ["4", "4", "5", "6", "7", "8"]
        );
        assert_eq!(predicted(table(Family::Star, 3, 6)), ["4", "5", "6", "7"]);
        assert_eq!(predicted(table(Family::DoubleStar, 1, 3)), ["3", "5", "7"]);
        let rows = table(Family::Complete, 3, 4);
        assert_eq!(
            (rows[0].predicted.as_str(), rows[0].matched.as_str()),
            ("4..4", "yes")
        );
    }

    #[test]
    fn trees_and_complete() {
        let spec = CampaignSpec::new(Family::TreeExhaustive, SizeRange::single(8))
            .with_checks(vec![Check::TreeTheorems]);
        let result = run_campaign(&spec).unwrap();
        assert_eq!(result.instances.len(), 23);
        assert!(result.summary().all_passed());
        let spec = CampaignSpec::new(Family::Complete, SizeRange::new(2, 5))
            .with_checks(vec![Check::KnStructure]);
        assert!(run_campaign(&spec).unwrap().summary().all_passed());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let spec = CampaignSpec::new(Family::Path, SizeRange::single(10))
            .with_checks(vec![Check::Formula])
            .with_budget(3);
        let result = run_campaign(&spec).unwrap();
        assert_eq!(result.instances[0].matches(), "unknown");
        assert_eq!(result.ledger().rows()[0].status, CheckStatus::Inconclusive);
        assert_eq!(result.summary().exit_code(), 2);
    }
}
