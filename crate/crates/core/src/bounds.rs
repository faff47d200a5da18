//! Mechanical checks of the published bounds against exact solver output.
//!
//! Every check compares two [`Quantity`] values. A quantity is an exact
//! integer when the underlying solve was proven optimal, and an interval
//! otherwise, so a budget-limited solve yields an `inconclusive` row instead
//! of a guessed verdict. Unmet hypotheses yield `skipped` rows.

use std::cell::OnceCell;
use std::fmt;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{self, ceil_two_thirds, ClosedFormPrediction, FamilySpec, PredictedValue};
use crate::graph::{Graph, VertexId};
use crate::middle::{line_graph, middle_graph, MiddleGraph, MiddleVertexLabel};
use crate::solve::{
    chromatic_number, common_neighborhood, edge_chromatic_number, independence_number,
    is_total_dominating, min_tds_enumeration, tdc_number, tdc_number_of_middle,
    total_domination_number, Budget, SolveReport, TdcCertificate,
};

/// An integer known exactly, or only up to an interval `[lo, hi]`
/// (`hi = None` means unbounded).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quantity {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl Quantity {
    pub const fn exact(v: usize) -> Self {
        Self { lo: v, hi: Some(v) }
    }

    pub const fn at_least(lo: usize) -> Self {
        Self { lo, hi: None }
    }

    pub fn between(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi: Some(hi) }
    }

    /// The proven optimum, or the report's lower/upper bounds.
    pub fn from_report(r: &SolveReport) -> Self {
        match r.optimum {
            Some(v) => Self::exact(v),
            None => Self {
                lo: r.lower_bound,
                hi: r.upper_bound,
            },
        }
    }

    pub fn from_bool(b: bool) -> Self {
        Self::exact(b as usize)
    }

    pub fn value(self) -> Option<usize> {
        (self.hi == Some(self.lo)).then_some(self.lo)
    }

    pub fn is_exact(self) -> bool {
        self.value().is_some()
    }

    pub fn plus(self, k: usize) -> Self {
        self + Self::exact(k)
    }

    pub fn min(self, other: Self) -> Self {
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Self {
            lo: self.lo.min(other.lo),
            hi,
        }
    }

    pub fn max(self, other: Self) -> Self {
        Self {
            lo: self.lo.max(other.lo),
            hi: self.hi.zip(other.hi).map(|(a, b)| a.max(b)),
        }
    }

    /// Indicator of `self == k`: exact when decidable from the interval.
    pub fn equals_indicator(self, k: usize) -> Self {
        if let Some(v) = self.value() {
            Self::from_bool(v == k)
        } else if self.lo > k || self.hi.is_some_and(|h| h < k) {
            Self::exact(0)
        } else {
            Self::between(0, 1)
        }
    }
}

impl std::ops::Add for Quantity {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        Self {
            lo: self.lo + other.lo,
            hi: self.hi.zip(other.hi).map(|(a, b)| a + b),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value(), self.hi) {
            (Some(v), _) => write!(f, "{v}"),
            (None, Some(h)) => write!(f, "{}..{}", self.lo, h),
            (None, None) => write!(f, "{}..", self.lo),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.value() {
            Some(v) => s.serialize_u64(v as u64),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }

    /// `Some(true)` if the relation provably holds for every value in the
    /// intervals, `Some(false)` if it provably fails, `None` otherwise.
    pub fn decide(self, a: Quantity, b: Quantity) -> Option<bool> {
        match self {
            Relation::Le => {
                if a.hi.is_some_and(|h| h <= b.lo) {
                    Some(true)
                } else if b.hi.is_some_and(|h| a.lo > h) {
                    Some(false)
                } else {
                    None
                }
            }
            Relation::Ge => Relation::Le.decide(b, a),
            Relation::Eq => match (a.value(), b.value()) {
                (Some(x), Some(y)) => Some(x == y),
                _ if b.hi.is_some_and(|h| a.lo > h) || a.hi.is_some_and(|h| b.lo > h) => {
                    Some(false)
                }
                _ => None,
            },
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed,
    /// A hypothesis of the statement does not hold for this instance.
    Skipped,
    /// A solve ran out of budget before the relation could be decided.
    Inconclusive,
    /// Observation only (e.g. an instance attaining a bound with equality).
    Info,
}

impl CheckStatus {
    pub fn name(self) -> &'static str {
        match self {
            CheckStatus::Passed => "passed",
            CheckStatus::Failed => "failed",
            CheckStatus::Skipped => "skipped",
            CheckStatus::Inconclusive => "inconclusive",
            CheckStatus::Info => "info",
        }
    }
}

/// One ledger row: `lhs relation rhs` for a named statement on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub theorem: String,
    pub instance: String,
    pub lhs: Option<Quantity>,
    pub relation: Relation,
    pub rhs: Option<Quantity>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundCheck {
    pub fn compare(
        theorem: &str,
        instance: &str,
        lhs: Quantity,
        relation: Relation,
        rhs: Quantity,
    ) -> Self {
        let status = match relation.decide(lhs, rhs) {
            Some(true) => CheckStatus::Passed,
            Some(false) => CheckStatus::Failed,
            None => CheckStatus::Inconclusive,
        };
        Self {
            theorem: theorem.to_string(),
            instance: instance.to_string(),
            lhs: Some(lhs),
            relation,
            rhs: Some(rhs),
            status,
            note: None,
        }
    }

    pub fn skipped(
        theorem: &str,
        instance: &str,
        relation: Relation,
        reason: impl Into<String>,
    ) -> Self {
        Self {
            theorem: theorem.to_string(),
            instance: instance.to_string(),
            lhs: None,
            relation,
            rhs: None,
            status: CheckStatus::Skipped,
            note: Some(reason.into()),
        }
    }

    pub fn info(
        theorem: &str,
        instance: &str,
        lhs: Quantity,
        relation: Relation,
        rhs: Quantity,
    ) -> Self {
        Self {
            status: CheckStatus::Info,
            ..Self::compare(theorem, instance, lhs, relation, rhs)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Passed
    }

    /// Whether the row counts towards the pass/fail tally.
    pub fn is_decisive(&self) -> bool {
        matches!(
            self.status,
            CheckStatus::Passed | CheckStatus::Failed | CheckStatus::Inconclusive
        )
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |q: Option<Quantity>| q.map_or("-".to_string(), |q| q.to_string());
        write!(
            f,
            "{} on {}: {} {} {} [{}]",
            self.theorem,
            self.instance,
            side(self.lhs),
            self.relation,
            side(self.rhs),
            self.status.name()
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LedgerFormat {
    Csv,
    Json,
}

impl std::str::FromStr for LedgerFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(LedgerFormat::Csv),
            "json" => Ok(LedgerFormat::Json),
            other => Err(Error::InvalidParameter(format!(
                "unknown ledger format `{other}`"
            ))),
        }
    }
}

/// Ordered collection of check rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Ledger {
    rows: Vec<BoundCheck>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    theorem: &'a str,
    instance: &'a str,
    lhs: String,
    relation: &'static str,
    rhs: String,
    status: &'static str,
}

impl Ledger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, row: BoundCheck) {
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[BoundCheck] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for row in &self.rows {
            match row.status {
                CheckStatus::Passed => s.passed += 1,
                CheckStatus::Failed => s.failed += 1,
                CheckStatus::Skipped => s.skipped += 1,
                CheckStatus::Inconclusive => s.inconclusive += 1,
                CheckStatus::Info => s.info += 1,
            }
            if s.first_failure.is_none() && row.status == CheckStatus::Failed {
                s.first_failure = Some(row.clone());
            }
            if s.first_inconclusive.is_none() && row.status == CheckStatus::Inconclusive {
                s.first_inconclusive = Some(row.clone());
            }
        }
        s
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let side = |q: Option<Quantity>| q.map_or(String::new(), |q| q.to_string());
        for row in &self.rows {
            w.serialize(CsvRow {
                theorem: &row.theorem,
                instance: &row.instance,
                lhs: side(row.lhs),
                relation: row.relation.symbol(),
                rhs: side(row.rhs),
                status: row.status.name(),
            })
            .map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn render(&self, format: LedgerFormat) -> Result<String> {
        match format {
            LedgerFormat::Csv => self.to_csv(),
            LedgerFormat::Json => self.to_json(),
        }
    }

    pub fn write_to(&self, path: &Path, format: LedgerFormat) -> Result<()> {
        let mut file = std::fs::File::create(path)?;
        file.write_all(self.render(format)?.as_bytes())?;
        Ok(())
    }
}

impl Extend<BoundCheck> for Ledger {
    fn extend<I: IntoIterator<Item = BoundCheck>>(&mut self, iter: I) {
        self.rows.extend(iter);
    }
}

impl FromIterator<BoundCheck> for Ledger {
    fn from_iter<I: IntoIterator<Item = BoundCheck>>(iter: I) -> Self {
        Self {
            rows: iter.into_iter().collect(),
        }
    }
}

pub(crate) fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::InvalidParameter(format!("csv: {other:?}")),
    }
}

/// Tally of a ledger.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub inconclusive: usize,
    pub info: usize,
    pub first_failure: Option<BoundCheck>,
    pub first_inconclusive: Option<BoundCheck>,
}

impl Summary {
    pub fn decisive(&self) -> usize {
        self.passed + self.failed + self.inconclusive
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.inconclusive == 0
    }

    /// `PASS k/k`, or `FAIL` / `INCONCLUSIVE` with the first offending row.
    pub fn line(&self) -> String {
        let k = self.decisive();
        if let Some(row) = &self.first_failure {
            format!("FAIL {}/{k}: first failure {row}", self.passed)
        } else if let Some(row) = &self.first_inconclusive {
            format!("INCONCLUSIVE {}/{k}: first undecided {row}", self.passed)
        } else {
            format!("PASS {}/{k}", self.passed)
        }
    }

    /// 0 when everything passed, 3 on any failure, 2 on budget exhaustion.
    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            3
        } else if self.inconclusive > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Debug)]
enum Subject {
    Plain(Graph),
    Middle(MiddleGraph),
}

/// A named instance together with lazily solved invariants, so that
/// several checks share one solve per problem.
#[derive(Debug)]
pub struct Facts {
    name: String,
    subject: Subject,
    budget: Budget,
    tdc: OnceCell<SolveReport>,
    chromatic: OnceCell<SolveReport>,
    total_domination: OnceCell<SolveReport>,
    independence: OnceCell<SolveReport>,
    line_tdc: OnceCell<SolveReport>,
    residual: OnceCell<Quantity>,
}

fn cached(
    cell: &OnceCell<SolveReport>,
    solve: impl FnOnce() -> Result<SolveReport>,
) -> Result<&SolveReport> {
    if let Some(r) = cell.get() {
        return Ok(r);
    }
    let r = solve()?;
    Ok(cell.get_or_init(|| r))
}

impl Facts {
    fn with_subject(name: impl Into<String>, subject: Subject, budget: Budget) -> Self {
        Self {
            name: name.into(),
            subject,
            budget,
            tdc: OnceCell::new(),
            chromatic: OnceCell::new(),
            total_domination: OnceCell::new(),
            independence: OnceCell::new(),
            line_tdc: OnceCell::new(),
            residual: OnceCell::new(),
        }
    }

    pub fn plain(name: impl Into<String>, g: Graph, budget: Budget) -> Self {
        Self::with_subject(name, Subject::Plain(g), budget)
    }

    /// Facts about `M(base)`; the TDC solve uses the middle-graph bounds.
    pub fn middle(name: impl Into<String>, mg: MiddleGraph, budget: Budget) -> Self {
        Self::with_subject(name, Subject::Middle(mg), budget)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        match &self.subject {
            Subject::Plain(g) => g,
            Subject::Middle(mg) => mg.graph(),
        }
    }

    pub fn middle_graph(&self) -> Option<&MiddleGraph> {
        match &self.subject {
            Subject::Plain(_) => None,
            Subject::Middle(mg) => Some(mg),
        }
    }

    pub fn tdc_report(&self) -> Result<&SolveReport> {
        cached(&self.tdc, || match &self.subject {
            Subject::Plain(g) => tdc_number(g, self.budget),
            Subject::Middle(mg) => tdc_number_of_middle(mg, self.budget),
        })
    }

    pub fn tdc(&self) -> Result<Quantity> {
        Ok(Quantity::from_report(self.tdc_report()?))
    }

    pub fn chromatic(&self) -> Result<Quantity> {
        let r = cached(&self.chromatic, || {
            chromatic_number(self.graph(), self.budget)
        })?;
        Ok(Quantity::from_report(r))
    }

    pub fn total_domination(&self) -> Result<Quantity> {
        let r = cached(&self.total_domination, || {
            total_domination_number(self.graph(), self.budget)
        })?;
        Ok(Quantity::from_report(r))
    }

    pub fn independence(&self) -> Result<Quantity> {
        let r = cached(&self.independence, || {
            independence_number(self.graph(), self.budget)
        })?;
        Ok(Quantity::from_report(r))
    }

    /// `χ_d^t(L(base))` for a middle subject.
    pub fn line_tdc(&self) -> Result<Quantity> {
        let mg = self.middle_graph().ok_or_else(|| {
            Error::InvalidParameter("line graph needs a middle-graph subject".into())
        })?;
        let r = cached(&self.line_tdc, || {
            let lg = line_graph(mg.base())?;
            tdc_number(lg.graph(), self.budget)
        })?;
        Ok(Quantity::from_report(r))
    }

    /// `min χ(G[V∖S])` over every minimum total dominating set `S`.
    pub fn min_residual_chromatic(&self) -> Result<Quantity> {
        if let Some(q) = self.residual.get() {
            return Ok(*q);
        }
        let q = residual_chromatic(self.graph(), self.budget)?;
        Ok(*self.residual.get_or_init(|| q))
    }
}

fn residual_chromatic(g: &Graph, budget: Budget) -> Result<Quantity> {
    let sets = match min_tds_enumeration(g, budget) {
        Ok(sets) => sets,
        Err(Error::BudgetExhausted { .. }) => return Ok(Quantity::at_least(0)),
        Err(e) => return Err(e),
    };
    let mut best: Option<Quantity> = None;
    for s in &sets {
        let rest: Vec<VertexId> = g.vertices().filter(|v| !s.set.contains(v)).collect();
        let q = if rest.is_empty() {
            Quantity::exact(0)
        } else {
            let sub = g.induced_subgraph(&rest)?;
            Quantity::from_report(&chromatic_number(&sub.graph, budget)?)
        };
        best = Some(best.map_or(q, |b| b.min(q)));
    }
    best.ok_or_else(|| Error::InvalidParameter("graph has no total dominating set".into()))
}

fn require_connected_positive(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    g.require_positive_min_degree()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Lower/upper chains for `χ_d^t` of a connected graph without isolated
/// vertices, the min-TDS residual bound and the two equality cases.
pub fn check_general_bounds(f: &Facts) -> Result<Vec<BoundCheck>> {
    let g = f.graph();
    require_connected_positive(g)?;
    let name = f.name();
    let n = g.order();
    let tdc = f.tdc()?;
    let chi = f.chromatic()?;
    let gamma = f.total_domination()?;
    let residual = f.min_residual_chromatic()?;
    Ok(vec![
        BoundCheck::compare("general.chromatic-lower", name, chi, Relation::Le, tdc),
        BoundCheck::compare(
            "general.total-domination-lower",
            name,
            gamma,
            Relation::Le,
            tdc,
        ),
        BoundCheck::compare(
            "general.two-lower",
            name,
            Quantity::exact(2),
            Relation::Le,
            tdc,
        ),
        BoundCheck::compare(
            "general.order-upper",
            name,
            tdc,
            Relation::Le,
            Quantity::exact(n),
        ),
        BoundCheck::compare(
            "general.two-iff-complete-bipartite",
            name,
            tdc.equals_indicator(2),
            Relation::Eq,
            Quantity::from_bool(g.is_complete_bipartite()),
        ),
        BoundCheck::compare(
            "general.order-iff-complete",
            name,
            tdc.equals_indicator(n),
            Relation::Eq,
            Quantity::from_bool(g.is_complete()),
        ),
        BoundCheck::compare(
            "general.residual-chromatic-upper",
            name,
            tdc,
            Relation::Le,
            gamma + residual,
        ),
        BoundCheck::compare(
            "general.domination-plus-chromatic-upper",
            name,
            tdc,
            Relation::Le,
            gamma + chi,
        ),
    ])
}

/// Middle-graph bounds: the order/size window, the two-thirds bounds on
/// `γ_t(M(G))` and `χ_d^t(M(G))`, `α(M(G)) = n` and the line-graph
/// comparison. Unmet hypotheses produce `skipped` rows.
pub fn check_middle_bounds(f: &Facts) -> Result<Vec<BoundCheck>> {
    let mg = f.middle_graph().ok_or_else(|| {
        Error::InvalidParameter("middle bounds need a middle-graph subject".into())
    })?;
    let name = f.name();
    let base = mg.base();
    let (n, m) = (base.order(), base.size());
    let connected = n >= 2 && base.is_connected();
    let mut rows = Vec::new();

    let window = [
        ("middle.chromatic-lower", Relation::Le),
        ("middle.total-domination-lower", Relation::Le),
        ("middle.order-size-upper", Relation::Le),
        ("middle.independence", Relation::Eq),
    ];
    if connected {
        let tdc = f.tdc()?;
        rows.push(BoundCheck::compare(
            window[0].0,
            name,
            f.chromatic()?,
            Relation::Le,
            tdc,
        ));
        rows.push(BoundCheck::compare(
            window[1].0,
            name,
            f.total_domination()?,
            Relation::Le,
            tdc,
        ));
        rows.push(BoundCheck::compare(
            window[2].0,
            name,
            tdc,
            Relation::Le,
            Quantity::exact(n + m - 1),
        ));
        rows.push(BoundCheck::compare(
            window[3].0,
            name,
            f.independence()?,
            Relation::Eq,
            Quantity::exact(n),
        ));
    } else {
        let reason = if n < 2 {
            "base order below 2"
        } else {
            "base graph is disconnected"
        };
        rows.extend(
            window
                .iter()
                .map(|&(t, r)| BoundCheck::skipped(t, name, r, reason)),
        );
    }

    let thirds = [
        ("middle.total-domination-two-thirds", Relation::Le),
        ("middle.total-domination-upper", Relation::Le),
        ("middle.tdc-two-thirds", Relation::Le),
    ];
    if connected && n >= 3 {
        let (gamma, tdc) = (f.total_domination()?, f.tdc()?);
        let floor = Quantity::exact(ceil_two_thirds(n));
        rows.push(BoundCheck::compare(
            thirds[0].0,
            name,
            floor,
            Relation::Le,
            gamma,
        ));
        rows.push(BoundCheck::compare(
            thirds[1].0,
            name,
            gamma,
            Relation::Le,
            Quantity::exact(n - 1),
        ));
        rows.push(BoundCheck::compare(
            thirds[2].0,
            name,
            floor,
            Relation::Le,
            tdc,
        ));
        if tdc.value() == floor.value() {
            rows.push(BoundCheck::info(
                "info.two-thirds-equality",
                name,
                tdc,
                Relation::Eq,
                floor,
            ));
        }
    } else {
        let reason = if connected {
            "base order below 3"
        } else {
            "base graph is disconnected"
        };
        rows.extend(
            thirds
                .iter()
                .map(|&(t, r)| BoundCheck::skipped(t, name, r, reason)),
        );
    }

    const LINE: &str = "middle.line-graph-lower";
    if connected && m >= 2 {
        let (tdc, line) = (f.tdc()?, f.line_tdc()?);
        rows.push(BoundCheck::compare(LINE, name, tdc, Relation::Ge, line));
        if tdc.is_exact() && tdc == line {
            rows.push(BoundCheck::info(
                "info.line-graph-equality",
                name,
                tdc,
                Relation::Eq,
                line,
            ));
        }
    } else {
        let reason = if connected {
            "base size below 2"
        } else {
            "base graph is disconnected"
        };
        rows.push(BoundCheck::skipped(LINE, name, Relation::Ge, reason));
    }
    Ok(rows)
}

/// `max_i χ_d^t(M(G_i)) + 2w − 2 ≤ χ_d^t(M(G)) ≤ Σ_i χ_d^t(M(G_i))` for a
/// graph with `w ≥ 2` components and no isolated vertex.
pub fn check_disjoint_union(g: &Graph, instance: &str, budget: Budget) -> Result<Vec<BoundCheck>> {
    let components = g.connected_components();
    if components.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "disjoint-union check needs at least two components, found {}",
            components.len()
        )));
    }
    g.require_positive_min_degree()?;
    let w = components.len();
    let mut largest = Quantity::exact(0);
    let mut total = Quantity::exact(0);
    for comp in &components {
        let sub = g.induced_subgraph(comp)?;
        let q = Quantity::from_report(&tdc_number_of_middle(&middle_graph(&sub.graph)?, budget)?);
        largest = largest.max(q);
        total = total + q;
    }
    let whole = Quantity::from_report(&tdc_number_of_middle(&middle_graph(g)?, budget)?);
    Ok(vec![
        BoundCheck::compare(
            "union.lower",
            instance,
            largest.plus(2 * w - 2),
            Relation::Le,
            whole,
        ),
        BoundCheck::compare("union.upper", instance, whole, Relation::Le, total),
    ])
}

/// Tree statements: `χ_d^t(M(T)) ≤ n`, the leaf lower bound, equality for
/// diameter at most 3, and an informational row when equality holds at a
/// larger diameter.
pub fn check_tree_theorems(f: &Facts) -> Result<Vec<BoundCheck>> {
    let mg = f
        .middle_graph()
        .ok_or_else(|| Error::InvalidParameter("tree checks need a middle-graph subject".into()))?;
    let t = mg.base();
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < 2 {
        return Err(Error::InvalidParameter(
            "tree checks need order at least 2".into(),
        ));
    }
    let name = f.name();
    let n = t.order();
    let tdc = f.tdc()?;
    let diam = t.diameter()?.expect("trees are connected");
    let mut rows = vec![BoundCheck::compare(
        "tree.order-upper",
        name,
        tdc,
        Relation::Le,
        Quantity::exact(n),
    )];
    if n >= 3 {
        let leaf = families::leaves(t).len();
        rows.push(BoundCheck::compare(
            "tree.leaf-lower",
            name,
            tdc,
            Relation::Ge,
            Quantity::exact(leaf + 1),
        ));
    } else {
        rows.push(BoundCheck::skipped(
            "tree.leaf-lower",
            name,
            Relation::Ge,
            "tree order below 3",
        ));
    }
    if diam <= 3 {
        rows.push(BoundCheck::compare(
            "tree.small-diameter-equality",
            name,
            tdc,
            Relation::Eq,
            Quantity::exact(n),
        ));
    } else {
        rows.push(BoundCheck::skipped(
            "tree.small-diameter-equality",
            name,
            Relation::Eq,
            format!("diameter {diam} exceeds 3"),
        ));
        if tdc.value() == Some(n) {
            rows.push(
                BoundCheck::info(
                    "info.tree-equality-large-diameter",
                    name,
                    tdc,
                    Relation::Eq,
                    Quantity::exact(n),
                )
                .with_note(format!("diameter {diam}")),
            );
        }
    }
    Ok(rows)
}

/// The explicit minimum total dominating sets of `M(K_n)` as base edges
/// (0-indexed), chosen by the residue of `n` mod 3. `None` for `n < 3`,
/// where the construction refers to vertices that do not exist.
pub fn complete_middle_tds_edges(n: usize) -> Option<Vec<(VertexId, VertexId)>> {
    if n < 3 {
        return None;
    }
    let mut edges = Vec::new();
    for i in 0..n / 3 {
        edges.push((3 * i, 3 * i + 1));
        edges.push((3 * i + 1, 3 * i + 2));
    }
    match n % 3 {
        1 => edges.push((n - 2, n - 1)),
        2 => {
            edges.push((n - 3, n - 2));
            edges.push((n - 2, n - 1));
        }
        _ => {}
    }
    Some(edges)
}

/// `χ'(K_n)` is `n − 1` for even `n` and `n` for odd `n`.
pub fn check_edge_chromatic_complete(n: usize, budget: Budget) -> Result<BoundCheck> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "K_n edge colouring needs n >= 2".into(),
        ));
    }
    let q = Quantity::from_report(&edge_chromatic_number(&families::complete(n), budget)?);
    let expected = if n.is_multiple_of(2) { n - 1 } else { n };
    Ok(BoundCheck::compare(
        "complete.edge-chromatic",
        &format!("complete({n})"),
        q,
        Relation::Eq,
        Quantity::exact(expected),
    ))
}

pub const KN_STRUCTURE_RANGE: std::ops::RangeInclusive<usize> = 2..=6;

/// Structure of `M(K_n)`: `χ(M(K_n)) = n`, `χ'(K_n)` by parity, the
/// explicit minimum TDS, `χ(M(K_n) − S) = n − 1` and the two-sided TDC
/// bound (tight at `n = 3`).
pub fn check_kn_structure(n: usize, budget: Budget) -> Result<Vec<BoundCheck>> {
    if !KN_STRUCTURE_RANGE.contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "K_n structure check supports n in 2..=6, got {n}"
        )));
    }
    let name = format!("complete({n})");
    let f = Facts::middle(&name, middle_graph(&families::complete(n))?, budget);
    let mg = f.middle_graph().expect("middle subject");
    let mut rows = vec![
        BoundCheck::compare(
            "complete.chromatic",
            &name,
            f.chromatic()?,
            Relation::Eq,
            Quantity::exact(n),
        ),
        check_edge_chromatic_complete(n, budget)?,
    ];
    let Some(edges) = complete_middle_tds_edges(n) else {
        let reason = "set construction and two-sided bound need n >= 3";
        for (t, r) in [
            ("complete.tds-valid", Relation::Eq),
            ("complete.tds-size", Relation::Eq),
            ("complete.tds-minimum", Relation::Eq),
            ("complete.residual-chromatic", Relation::Eq),
            ("complete.tdc-lower", Relation::Le),
            ("complete.tdc-upper", Relation::Le),
        ] {
            rows.push(BoundCheck::skipped(t, &name, r, reason));
        }
        rows.push(
            BoundCheck::info(
                "info.complete-base-case",
                &name,
                f.tdc()?,
                Relation::Eq,
                Quantity::exact(2),
            )
            .with_note("M(K_2) is P_3"),
        );
        return Ok(rows);
    };
    let s: Vec<VertexId> = edges
        .iter()
        .map(|&(i, j)| mg.edge_vertex(i, j).expect("K_n has every edge"))
        .collect();
    let g = mg.graph();
    let size = Quantity::exact(s.len());
    rows.push(BoundCheck::compare(
        "complete.tds-valid",
        &name,
        Quantity::from_bool(is_total_dominating(g, &s)),
        Relation::Eq,
        Quantity::exact(1),
    ));
    rows.push(BoundCheck::compare(
        "complete.tds-size",
        &name,
        size,
        Relation::Eq,
        Quantity::exact(ceil_two_thirds(n)),
    ));
    rows.push(BoundCheck::compare(
        "complete.tds-minimum",
        &name,
        size,
        Relation::Eq,
        f.total_domination()?,
    ));
    let rest: Vec<VertexId> = g.vertices().filter(|v| !s.contains(v)).collect();
    let residual = chromatic_number(&g.induced_subgraph(&rest)?.graph, budget)?;
    rows.push(BoundCheck::compare(
        "complete.residual-chromatic",
        &name,
        Quantity::from_report(&residual),
        Relation::Eq,
        Quantity::exact(n - 1),
    ));
    let tdc = f.tdc()?;
    let (lo, hi) = (n + 1, n + ceil_two_thirds(n) - 1);
    rows.push(BoundCheck::compare(
        "complete.tdc-lower",
        &name,
        Quantity::exact(lo),
        Relation::Le,
        tdc,
    ));
    rows.push(BoundCheck::compare(
        "complete.tdc-upper",
        &name,
        tdc,
        Relation::Le,
        Quantity::exact(hi),
    ));
    if n == 3 {
        rows.push(BoundCheck::compare(
            "complete.tdc-tight-lower",
            &name,
            tdc,
            Relation::Eq,
            Quantity::exact(lo),
        ));
        rows.push(BoundCheck::compare(
            "complete.tdc-tight-upper",
            &name,
            tdc,
            Relation::Eq,
            Quantity::exact(hi),
        ));
    }
    Ok(rows)
}

/// Closed-form value of `χ_d^t(M(G))` for the family against the solve.
/// Families without a closed form (trees) yield no rows.
pub fn check_formula(spec: &FamilySpec, f: &Facts) -> Result<Vec<BoundCheck>> {
    let Some(ClosedFormPrediction { value, source }) = families::predict_tdc_of_middle(spec)?
    else {
        return Ok(Vec::new());
    };
    let tdc = f.tdc()?;
    let name = f.name();
    Ok(match value {
        PredictedValue::Exact { value } => vec![BoundCheck::compare(
            &format!("formula.{source}"),
            name,
            tdc,
            Relation::Eq,
            Quantity::exact(value),
        )],
        PredictedValue::Interval { lo, hi } => vec![
            BoundCheck::compare(
                &format!("formula.{source}.lower"),
                name,
                Quantity::exact(lo),
                Relation::Le,
                tdc,
            ),
            BoundCheck::compare(
                &format!("formula.{source}.upper"),
                name,
                tdc,
                Relation::Le,
                Quantity::exact(hi),
            ),
        ],
    })
}

/// Structural statements that every TDC of a middle graph satisfies,
/// checked on one certificate.
pub fn check_middle_certificate(
    mg: &MiddleGraph,
    cert: &TdcCertificate,
    instance: &str,
) -> Result<Vec<BoundCheck>> {
    let g = mg.graph();
    let n = mg.base().order();
    let classes = cert.coloring.classes();
    let cns: Vec<Vec<VertexId>> = classes
        .iter()
        .map(|c| common_neighborhood(g, c))
        .collect::<Result<_>>()?;
    let is_edge = |v: VertexId| matches!(mg.label(v), MiddleVertexLabel::EdgeVertex { .. });

    let mut bad_original = 0;
    let mut bad_edge = 0;
    let mut large_cn = 0;
    let mut covered = vec![false; g.order()];
    for (class, cn) in classes.iter().zip(&cns) {
        if class.len() >= 3 {
            large_cn += cn.len();
        } else {
            for &v in cn {
                covered[v] = true;
            }
        }
        for &v in cn {
            if is_edge(v) {
                bad_edge += (class.len() > 2) as usize;
            } else {
                bad_original += !(class.len() == 1 && is_edge(class[0])) as usize;
            }
        }
    }
    let singletons = classes.iter().filter(|c| c.len() == 1).count();
    let pairs = classes.iter().filter(|c| c.len() == 2).count();
    let largest = classes.iter().map(Vec::len).max().unwrap_or(0);
    let zero = Quantity::exact(0);
    let exact = Quantity::exact;
    Ok(vec![
        BoundCheck::compare(
            "lemma.certificate-valid",
            instance,
            Quantity::from_bool(cert.validates(g)),
            Relation::Eq,
            exact(1),
        ),
        BoundCheck::compare(
            "lemma.original-witness-singleton",
            instance,
            exact(bad_original),
            Relation::Eq,
            zero,
        ),
        BoundCheck::compare(
            "lemma.edge-witness-size",
            instance,
            exact(bad_edge),
            Relation::Eq,
            zero,
        ),
        BoundCheck::compare(
            "lemma.class-size",
            instance,
            exact(largest),
            Relation::Le,
            exact(n),
        ),
        BoundCheck::compare(
            "lemma.large-class-empty-cn",
            instance,
            exact(large_cn),
            Relation::Eq,
            zero,
        ),
        BoundCheck::compare(
            "lemma.small-classes-cover",
            instance,
            exact(covered.iter().filter(|&&c| c).count()),
            Relation::Eq,
            exact(g.order()),
        ),
        BoundCheck::compare(
            "lemma.singleton-count",
            instance,
            exact(singletons),
            Relation::Ge,
            exact(n.div_ceil(2)),
        ),
        BoundCheck::compare(
            "lemma.small-class-count",
            instance,
            exact(singletons + pairs),
            Relation::Le,
            exact(classes.len()),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, double_star, path, star, Family};
    use crate::graph::Graph;

    fn row<'a>(rows: &'a [BoundCheck], theorem: &str) -> &'a BoundCheck {
        rows.iter()
            .find(|r| r.theorem == theorem)
            .unwrap_or_else(|| panic!("no row {theorem}"))
    }

    fn plain(name: &str, g: Graph) -> Facts {
        Facts::plain(name, g, Budget::UNLIMITED)
    }

    fn middle(name: &str, g: &Graph) -> Facts {
        Facts::middle(name, middle_graph(g).unwrap(), Budget::UNLIMITED)
    }

    #[test]
    fn interval_relations() {
        let q = Quantity::between(3, 5);
        assert_eq!(Relation::Le.decide(q, Quantity::exact(5)), Some(true));
        assert_eq!(Relation::Le.decide(q, Quantity::exact(4)), None);
        assert_eq!(Relation::Le.decide(q, Quantity::exact(2)), Some(false));
        assert_eq!(Relation::Ge.decide(q, Quantity::exact(3)), Some(true));
        assert_eq!(Relation::Eq.decide(q, Quantity::exact(4)), None);
        assert_eq!(Relation::Eq.decide(q, Quantity::exact(6)), Some(false));
        assert_eq!(
            Relation::Le.decide(Quantity::at_least(2), Quantity::exact(9)),
            None
        );
        assert_eq!(q.to_string(), "3..5");
        assert_eq!(
            Quantity::between(3, 5).equals_indicator(9),
            Quantity::exact(0)
        );
        assert_eq!(
            Quantity::between(3, 5).equals_indicator(4),
            Quantity::between(0, 1)
        );
    }

    #[test]
    fn residual_minimum_on_p6() {
        assert_eq!(
            plain("P6", path(6)).min_residual_chromatic().unwrap(),
            Quantity::exact(1)
        );
    }

    #[test]
    fn general_equality_branches() {
        let kb = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let rows = check_general_bounds(&plain("K33", kb)).unwrap();
        assert!(rows.iter().all(BoundCheck::passed), "{rows:?}");
        assert_eq!(
            row(&rows, "general.two-iff-complete-bipartite").lhs,
            Some(Quantity::exact(1))
        );
        let rows = check_general_bounds(&plain("K4", complete(4))).unwrap();
        assert!(rows.iter().all(BoundCheck::passed));
        assert_eq!(
            row(&rows, "general.order-iff-complete").rhs,
            Some(Quantity::exact(1))
        );
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            check_general_bounds(&plain("2K2", two)),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            check_general_bounds(&plain("K1", Graph::empty(1))),
            Err(Error::IsolatedVertex(0))
        ));
    }

    #[test]
    fn middle_examples() {
        let rows = check_middle_bounds(&middle("C5", &cycle(5))).unwrap();
        assert!(rows
            .iter()
            .filter(|r| r.is_decisive())
            .all(BoundCheck::passed));
        let r = row(&rows, "middle.total-domination-upper");
        assert_eq!(r.lhs, Some(Quantity::exact(4)));
        let rows = check_middle_bounds(&middle("P4", &path(4))).unwrap();
        assert_eq!(
            row(&rows, "middle.independence").lhs,
            Some(Quantity::exact(4))
        );
        let rows = check_middle_bounds(&middle("C4", &cycle(4))).unwrap();
        let r = row(&rows, "middle.line-graph-lower");
        assert_eq!(
            (r.lhs, r.rhs, r.status),
            (
                Some(Quantity::exact(4)),
                Some(Quantity::exact(2)),
                CheckStatus::Passed
            )
        );
    }

    #[test]
    fn unmet_hypotheses_are_skipped() {
        let rows = check_middle_bounds(&middle("K2", &complete(2))).unwrap();
        assert_eq!(
            row(&rows, "middle.tdc-two-thirds").status,
            CheckStatus::Skipped
        );
        assert_eq!(
            row(&rows, "middle.line-graph-lower").status,
            CheckStatus::Skipped
        );
        assert_eq!(
            row(&rows, "middle.independence").status,
            CheckStatus::Passed
        );
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let rows = check_middle_bounds(&middle("2K2", &two)).unwrap();
        assert!(rows.iter().all(|r| r.status == CheckStatus::Skipped));
    }

    #[test]
    fn disjoint_unions() {
        let p3 = path(3);
        let rows = check_disjoint_union(&p3.disjoint_union(&p3), "2P3", Budget::UNLIMITED).unwrap();
        assert_eq!(rows[0].lhs, Some(Quantity::exact(5)));
        assert_eq!(rows[1].rhs, Some(Quantity::exact(6)));
        assert!(rows.iter().all(BoundCheck::passed));
        let k2 = complete(2);
        let rows = check_disjoint_union(&k2.disjoint_union(&k2), "2K2", Budget::UNLIMITED).unwrap();
        assert_eq!(rows[0].rhs, Some(Quantity::exact(4)));
        assert!(rows.iter().all(BoundCheck::passed));
        assert!(check_disjoint_union(&p3, "P3", Budget::UNLIMITED).is_err());
        let iso = p3.disjoint_union(&Graph::empty(1));
        assert!(matches!(
            check_disjoint_union(&iso, "P3+K1", Budget::UNLIMITED),
            Err(Error::IsolatedVertex(3))
        ));
    }

    #[test]
    fn tree_examples() {
        let rows = check_tree_theorems(&middle("K15", &star(5))).unwrap();
        let r = row(&rows, "tree.small-diameter-equality");
        assert_eq!(
            (r.lhs, r.status),
            (Some(Quantity::exact(6)), CheckStatus::Passed)
        );
        let rows = check_tree_theorems(&middle("S122", &double_star(2))).unwrap();
        assert_eq!(
            row(&rows, "info.tree-equality-large-diameter").lhs,
            Some(Quantity::exact(5))
        );
        let rows = check_tree_theorems(&middle("P9", &path(9))).unwrap();
        assert_eq!(row(&rows, "tree.order-upper").lhs, Some(Quantity::exact(8)));
        assert_eq!(row(&rows, "tree.leaf-lower").rhs, Some(Quantity::exact(3)));
        assert!(matches!(
            check_tree_theorems(&middle("C4", &cycle(4))),
            Err(Error::NotATree)
        ));
    }

    #[test]
    fn complete_structure() {
        assert_eq!(complete_middle_tds_edges(3).unwrap(), vec![(0, 1), (1, 2)]);
        assert_eq!(complete_middle_tds_edges(5).unwrap().len(), 4);
        for n in 3..=5 {
            let rows = check_kn_structure(n, Budget::UNLIMITED).unwrap();
            assert!(rows.iter().all(BoundCheck::passed), "{rows:?}");
        }
        let rows = check_kn_structure(3, Budget::UNLIMITED).unwrap();
        assert_eq!(
            row(&rows, "complete.tdc-tight-upper").lhs,
            Some(Quantity::exact(4))
        );
        let rows = check_kn_structure(2, Budget::UNLIMITED).unwrap();
        assert_eq!(row(&rows, "complete.chromatic").status, CheckStatus::Passed);
        assert_eq!(
            row(&rows, "complete.tdc-lower").status,
            CheckStatus::Skipped
        );
        assert!(check_kn_structure(7, Budget::UNLIMITED).is_err());
    }

    #[test]
    fn formula_and_certificate_rows() {
        let spec = FamilySpec::new(Family::Cycle, 8);
        let f = middle("cycle(8)", &cycle(8));
        assert!(check_formula(&spec, &f)
            .unwrap()
            .iter()
            .all(BoundCheck::passed));
        let mg = f.middle_graph().unwrap();
        let cert = f.tdc_report().unwrap().tdc_certificate().unwrap().clone();
        let rows = check_middle_certificate(mg, &cert, "cycle(8)").unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(BoundCheck::passed), "{rows:?}");
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let f = Facts::middle("P10", middle_graph(&path(10)).unwrap(), Budget::nodes(3));
        let rows = check_formula(&FamilySpec::new(Family::Path, 10), &f).unwrap();
        assert!(
            rows.iter().any(|r| r.status == CheckStatus::Inconclusive),
            "{rows:?}"
        );
        let ledger: Ledger = rows.into_iter().collect();
        assert_eq!(ledger.summary().exit_code(), 2);
    }

    #[test]
    fn ledger_formats() {
        let mut ledger = Ledger::new();
        ledger.push(BoundCheck::compare(
            "t",
            "x",
            Quantity::exact(1),
            Relation::Le,
            Quantity::between(2, 3),
        ));
        ledger.push(BoundCheck::skipped("s", "x", Relation::Eq, "n < 3"));
        let csv = ledger.to_csv().unwrap();
        assert_eq!(
            csv,
            "theorem,instance,lhs,relation,rhs,status\nt,x,1,<=,2..3,passed\ns,x,,=,,skipped\n"
        );
        let json: serde_json::Value = serde_json::from_str(&ledger.to_json().unwrap()).unwrap();
        assert_eq!(json[0]["rhs"], "2..3");
        assert_eq!(json[1]["note"], "n < 3");
        assert_eq!(ledger.summary().line(), "PASS 1/1");
    }
}
