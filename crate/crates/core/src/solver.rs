//! The pivoting loop and the six-way classification of its terminal tableau.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp_model::{map_back, CanonicalLp, CanonicalSolution, OriginalSolution, TransformRecord};
use crate::pivot_select::{select_pivot, PivotScheme, SchemeOrder, SchemeSet};
use crate::tableau::{Label, Tableau, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOptions {
    /// Pivot budget; `None` means `50 * (m + n)`.
    pub max_iterations: Option<usize>,
    pub tol: f64,
    pub order: SchemeOrder,
    /// After reaching an optimum, walk zero-indicator pivots to list
    /// alternative optimal bases.
    pub enumerate_alternatives: bool,
    /// Keep a text snapshot of the tableau before every pivot.
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_iterations: None,
            tol: DEFAULT_TOL,
            order: SchemeOrder::default(),
            enumerate_alternatives: false,
            trace: false,
        }
    }
}

impl SolveOptions {
    pub fn iteration_limit(&self, m: usize, n: usize) -> usize {
        self.max_iterations.unwrap_or(50 * (m + n)).max(1)
    }
}

/// `F` basic feasible and finite, `∞` unbounded, `Φ` infeasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Finite,
    Unbounded,
    Infeasible,
}

impl Status {
    /// ASCII code used in reports.
    pub fn code(self) -> &'static str {
        match self {
            Status::Finite => "F",
            Status::Unbounded => "Inf",
            Status::Infeasible => "Phi",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Status::Finite => "F",
            Status::Unbounded => "∞",
            Status::Infeasible => "Φ",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TerminalClass {
    pub primal: Status,
    pub dual: Status,
}

impl TerminalClass {
    pub const OPTIMAL: TerminalClass = TerminalClass::new(Status::Finite, Status::Finite);
    pub const DUAL_RAY: TerminalClass = TerminalClass::new(Status::Finite, Status::Unbounded);
    pub const PRIMAL_RAY: TerminalClass = TerminalClass::new(Status::Unbounded, Status::Finite);
    pub const UNBOUNDED: TerminalClass = TerminalClass::new(Status::Unbounded, Status::Infeasible);
    pub const INFEASIBLE: TerminalClass = TerminalClass::new(Status::Infeasible, Status::Unbounded);
    pub const BOTH_INFEASIBLE: TerminalClass = TerminalClass::new(Status::Infeasible, Status::Infeasible);

    pub const fn new(primal: Status, dual: Status) -> Self {
        TerminalClass { primal, dual }
    }

    pub fn all() -> [TerminalClass; 6] {
        [
            Self::OPTIMAL,
            Self::DUAL_RAY,
            Self::PRIMAL_RAY,
            Self::UNBOUNDED,
            Self::INFEASIBLE,
            Self::BOTH_INFEASIBLE,
        ]
    }
}

impl fmt::Display for TerminalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.primal.symbol(), self.dual.symbol())
    }
}

/// A ray read off a terminal tableau, in canonical coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Certificate {
    /// Column whose `gamma >= 0` sits over an all-nonpositive `alpha` column.
    /// `direction` is the change of `x` per unit of the entering label.
    PrimalRay {
        column: usize,
        label: Label,
        direction: Vec<f64>,
    },
    /// Row whose `beta <= 0` sits beside an all-nonnegative `alpha` row.
    /// `direction` is the change of the row duals `v` per unit step.
    DualRay {
        row: usize,
        label: Label,
        direction: Vec<f64>,
    },
}

impl Certificate {
    /// Checks the ray against the canonical data: a primal ray must keep
    /// `x >= 0` and `A x <= b` and strictly raise `c·x`; a dual ray must keep
    /// `v >= 0` and `v A >= 0` and strictly lower `v·b`.
    pub fn verify(&self, p: &CanonicalLp, tol: f64) -> bool {
        match self {
            Certificate::PrimalRay { direction: d, .. } => {
                d.len() == p.n()
                    && d.iter().all(|&x| x >= -tol)
                    && p.a.iter().all(|row| dot(row, d) <= tol)
                    && dot(&p.c, d) > tol
            }
            Certificate::DualRay { direction: d, .. } => {
                d.len() == p.m()
                    && d.iter().all(|&v| v >= -tol)
                    && (0..p.n()).all(|j| p.a.iter().zip(d).map(|(r, v)| r[j] * v).sum::<f64>() >= -tol)
                    && dot(&p.b, d) < -tol
            }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primal_ray(t: &Tableau, col: usize) -> Certificate {
    let mut direction = vec![0.0; t.n()];
    if let Label::Column(k) = t.col_labels()[col] {
        direction[k] = 1.0;
    }
    for (i, label) in t.row_labels().iter().enumerate() {
        if let Label::Column(k) = *label {
            direction[k] = -t.alpha(i, col);
        }
    }
    Certificate::PrimalRay {
        column: col,
        label: t.col_labels()[col],
        direction,
    }
}

fn dual_ray(t: &Tableau, row: usize) -> Certificate {
    let mut direction = vec![0.0; t.m()];
    if let Label::Row(r) = t.row_labels()[row] {
        direction[r] = 1.0;
    }
    for (j, label) in t.col_labels().iter().enumerate() {
        if let Label::Row(r) = *label {
            direction[r] = t.alpha(row, j);
        }
    }
    Certificate::DualRay {
        row,
        label: t.row_labels()[row],
        direction,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub class: TerminalClass,
    pub certificates: Vec<Certificate>,
}

struct Shape {
    primal_feasible: bool,
    dual_feasible: bool,
    primal_ray: Option<usize>,
    dual_ray: Option<usize>,
    primal_deg_rays: Vec<usize>,
    dual_deg_rays: Vec<usize>,
}

fn shape(t: &Tableau) -> Shape {
    let tol = t.tol();
    let (beta, gamma) = (t.beta(), t.gamma());
    let col_nonpos = |j: usize| (0..t.m()).all(|i| t.alpha(i, j) <= tol);
    let row_nonneg = |i: usize| t.alpha_row(i).iter().all(|&a| a >= -tol);
    // zero-indicator rays need a strictly signed line, as in the worked examples
    let col_negative = |j: usize| (0..t.m()).all(|i| t.alpha(i, j) < -tol);
    let row_positive = |i: usize| t.alpha_row(i).iter().all(|&a| a > tol);
    Shape {
        primal_feasible: beta.iter().all(|&b| b >= -tol),
        dual_feasible: gamma.iter().all(|&g| g <= tol),
        primal_ray: (0..t.n()).find(|&j| gamma[j] > tol && col_nonpos(j)),
        dual_ray: (0..t.m()).find(|&i| beta[i] < -tol && row_nonneg(i)),
        primal_deg_rays: (0..t.n())
            .filter(|&j| gamma[j].abs() <= tol && col_negative(j))
            .collect(),
        dual_deg_rays: (0..t.m())
            .filter(|&i| beta[i].abs() <= tol && row_positive(i))
            .collect(),
    }
}

/// Whether a direction has any component that is not rounding noise.
fn nonzero(d: &[f64]) -> bool {
    let scale = d.iter().fold(1.0_f64, |a, x| a.max(x.abs()));
    d.iter().any(|x| x.abs() > 1e-7 * scale)
}

fn survives(c: &Certificate, transform: Option<&TransformRecord>) -> bool {
    match (c, transform) {
        (_, None) => true,
        (Certificate::PrimalRay { direction, .. }, Some(tr)) => nonzero(&tr.primal_direction(direction)),
        (Certificate::DualRay { direction, .. }, Some(tr)) => {
            let (rows, bounds) = tr.recombine_duals(direction);
            nonzero(&rows) || nonzero(&bounds)
        }
    }
}

/// Six-way classification of a tableau that admits no standard or tricky pivot.
pub fn classify_terminal(t: &Tableau) -> Result<Classification> {
    classify_terminal_in(t, None)
}

/// [`classify_terminal`] for a tableau of a canonicalized problem. A ray at a
/// zero indicator only refines the class if it is still a ray after mapping
/// back through `transform`; the shared free-variable shift and the
/// aggregated equality row always contribute rays that cancel there.
pub fn classify_terminal_in(t: &Tableau, transform: Option<&TransformRecord>) -> Result<Classification> {
    if let Some(c) = select_pivot(t, &SchemeOrder::default(), SchemeSet::Primary) {
        return Err(Error::NotTerminal {
            scheme: c.scheme.name(),
            row: c.row,
            col: c.col,
        });
    }
    let s = shape(t);
    let mut certificates = Vec::new();
    let class = match (s.primal_feasible, s.dual_feasible) {
        (true, true) => {
            let primal = s
                .primal_deg_rays
                .iter()
                .map(|&j| primal_ray(t, j))
                .find(|c| survives(c, transform));
            let dual = || {
                s.dual_deg_rays
                    .iter()
                    .map(|&i| dual_ray(t, i))
                    .find(|c| survives(c, transform))
            };
            if let Some(c) = primal {
                certificates.push(c);
                TerminalClass::PRIMAL_RAY
            } else if let Some(c) = dual() {
                certificates.push(c);
                TerminalClass::DUAL_RAY
            } else {
                TerminalClass::OPTIMAL
            }
        }
        _ => return Ok(best_effort(t, &s)),
    };
    Ok(Classification { class, certificates })
}

fn best_effort(t: &Tableau, s: &Shape) -> Classification {
    let mut certificates = Vec::new();
    if let Some(j) = s.primal_ray {
        certificates.push(primal_ray(t, j));
    }
    if let Some(i) = s.dual_ray {
        certificates.push(dual_ray(t, i));
    }
    let class = match (s.primal_feasible, s.dual_feasible) {
        (true, true) => TerminalClass::OPTIMAL,
        (true, false) => TerminalClass::UNBOUNDED,
        (false, true) => TerminalClass::INFEASIBLE,
        (false, false) => TerminalClass::BOTH_INFEASIBLE,
    };
    Classification { class, certificates }
}

/// Classification of an arbitrary tableau from its feasibility pattern alone,
/// used when a run stops on a cycle or the iteration limit.
pub fn classify_best_effort(t: &Tableau) -> Classification {
    best_effort(t, &shape(t))
}

pub fn detect_cycle(history: &HashSet<String>, signature: &str) -> bool {
    history.contains(signature)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    /// 1-based.
    pub iteration: usize,
    pub scheme: PivotScheme,
    pub row: usize,
    pub col: usize,
    pub entering: Label,
    pub leaving: Label,
    pub delta_ii: i64,
    pub lem: f64,
    /// Infeasibility index after the pivot.
    pub infeasibility_index: usize,
    /// `delta` after the pivot.
    pub delta: f64,
    /// Signature before the pivot.
    pub signature: String,
    /// Whether `delta` moved in the direction the scheme promises.
    pub monotone: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub m: usize,
    pub n: usize,
    pub class: TerminalClass,
    pub iterations: usize,
    /// `f = -delta`, present when both sides are feasible.
    pub objective: Option<f64>,
    /// `g = -delta`, present when both sides are feasible.
    pub dual_objective: Option<f64>,
    pub solution: CanonicalSolution,
    /// Solution in the coordinates of the problem passed to [`solve`].
    pub original: Option<OriginalSolution>,
    pub records: Vec<IterationRecord>,
    pub certificates: Vec<Certificate>,
    pub cycle_flag: bool,
    pub iteration_limit_hit: bool,
    /// Zero entries of `beta` and `gamma` in the final tableau.
    pub degeneracy: usize,
    /// Whether a zero-indicator pivot is available at an optimum.
    pub has_alternatives: bool,
    /// Signatures of alternative optimal bases visited.
    pub alternatives: Vec<String>,
    pub signatures_seen: usize,
    pub terminal: Tableau,
    /// Tableau snapshots before each pivot, when tracing.
    pub trace: Vec<String>,
}

impl SolveReport {
    pub fn iterations_per_size(&self) -> f64 {
        self.iterations as f64 / (self.m + self.n).max(1) as f64
    }
}

/// Pivots between recomputations of the tableau from the starting data.
pub const REFACTOR_EVERY: usize = 50;

fn refresh(t: &mut Tableau, base: Option<&Tableau>) -> Result<()> {
    match base {
        Some(b) => t.refactor(b),
        None => Ok(()),
    }
}

enum Stop {
    Terminal,
    Cycle,
    Limit,
}

/// Solves `maximize c·x, A x <= b, x >= 0` starting from the all-slack basis.
pub fn solve(p: &CanonicalLp, o: &SolveOptions) -> Result<SolveReport> {
    let t = Tableau::initial_with_tol(p, o.tol);
    let attach = |mut r: SolveReport| -> Result<SolveReport> {
        r.original = Some(map_back(&r.solution, &p.transform)?);
        Ok(r)
    };
    match run(t, o, Some(&p.transform)) {
        Ok(r) => attach(r),
        Err(Error::IterationLimit { limit, partial }) => Err(Error::IterationLimit {
            limit,
            partial: Box::new(attach(*partial)?),
        }),
        Err(e) => Err(e),
    }
}

/// Runs the pivoting loop from an arbitrary starting tableau.
pub fn solve_tableau(t: Tableau, o: &SolveOptions) -> Result<SolveReport> {
    run(t, o, None)
}

fn run(mut t: Tableau, o: &SolveOptions, transform: Option<&TransformRecord>) -> Result<SolveReport> {
    let (m, n) = (t.m(), t.n());
    let limit = o.iteration_limit(m, n);
    let mut seen: HashSet<String> = HashSet::new();
    let mut records = Vec::new();
    let mut trace = Vec::new();
    let base = t.has_initial_labels().then(|| t.clone());
    let mut since_refactor = 0;

    let stop = loop {
        if since_refactor >= REFACTOR_EVERY {
            refresh(&mut t, base.as_ref())?;
            since_refactor = 0;
        }
        let signature = t.signature();
        if detect_cycle(&seen, &signature) {
            break Stop::Cycle;
        }
        seen.insert(signature.clone());
        let next = if t.infeasibility_index() == 0 {
            None
        } else {
            select_pivot(&t, &o.order, SchemeSet::Primary)
        };
        let Some(c) = next else {
            // confirm the stop on freshly computed entries
            if since_refactor > 0 && base.is_some() {
                refresh(&mut t, base.as_ref())?;
                since_refactor = 0;
                seen.remove(&signature);
                continue;
            }
            break Stop::Terminal;
        };
        if records.len() >= limit {
            break Stop::Limit;
        }
        if o.trace {
            trace.push(t.to_grid_text());
        }
        let before = t.delta();
        let (entering, leaving) = (t.col_labels()[c.col], t.row_labels()[c.row]);
        t.pivot_in_place(c.row, c.col)?;
        since_refactor += 1;
        let slack = 1e-9 * (1.0 + before.abs());
        let monotone = match c.scheme {
            PivotScheme::PSPPI | PivotScheme::PTPPI => t.delta() <= before + slack,
            PivotScheme::DSPNI | PivotScheme::DTPNI => t.delta() >= before - slack,
            PivotScheme::DSPZI | PivotScheme::PSPZI => (t.delta() - before).abs() <= slack,
        };
        records.push(IterationRecord {
            iteration: records.len() + 1,
            scheme: c.scheme,
            row: c.row,
            col: c.col,
            entering,
            leaving,
            delta_ii: c.delta_ii,
            lem: c.lem,
            infeasibility_index: t.infeasibility_index(),
            delta: t.delta(),
            signature,
            monotone,
        });
    };

    let classification = match stop {
        Stop::Terminal => classify_terminal_in(&t, transform)?,
        Stop::Cycle | Stop::Limit => classify_best_effort(&t),
    };
    let optimal = t.infeasibility_index() == 0;
    let has_alternatives = optimal && select_pivot(&t, &o.order, SchemeSet::ZeroIndicator).is_some();
    let alternatives = if optimal && o.enumerate_alternatives {
        explore_alternatives(&t, o, limit.saturating_sub(records.len()))?
    } else {
        Vec::new()
    };

    let tol = t.tol();
    let degeneracy = t.beta().iter().chain(t.gamma()).filter(|v| v.abs() <= tol).count();
    let class = classification.class;
    let f = -t.delta();
    // a ray at a zero indicator leaves the optimal value finite
    let bounded = class.primal != Status::Infeasible && class.dual != Status::Infeasible;
    let report = SolveReport {
        m,
        n,
        class,
        iterations: records.len(),
        objective: bounded.then_some(f),
        dual_objective: bounded.then_some(f),
        solution: t.basic_solution(),
        original: None,
        records,
        certificates: classification.certificates,
        cycle_flag: matches!(stop, Stop::Cycle),
        iteration_limit_hit: matches!(stop, Stop::Limit),
        degeneracy,
        has_alternatives,
        alternatives,
        signatures_seen: seen.len(),
        terminal: t,
        trace,
    };
    match stop {
        Stop::Limit => Err(Error::IterationLimit {
            limit,
            partial: Box::new(report),
        }),
        _ => Ok(report),
    }
}

/// Zero-indicator walk from an optimal tableau; stops when no such pivot
/// exists, a basis repeats, or the budget runs out.
fn explore_alternatives(start: &Tableau, o: &SolveOptions, budget: usize) -> Result<Vec<String>> {
    let mut t = start.clone();
    let mut seen = HashSet::from([t.signature()]);
    let mut found = Vec::new();
    while found.len() < budget {
        let Some(c) = select_pivot(&t, &o.order, SchemeSet::ZeroIndicator) else {
            break;
        };
        t.pivot_in_place(c.row, c.col)?;
        let signature = t.signature();
        if detect_cycle(&seen, &signature) {
            break;
        }
        seen.insert(signature.clone());
        found.push(signature);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(alpha: Vec<Vec<f64>>, beta: Vec<f64>, gamma: Vec<f64>) -> Tableau {
        Tableau::from_parts(alpha, beta, gamma, 0.0).unwrap()
    }

    #[test]
    fn example1_solves_in_one_pivot() {
        let p = CanonicalLp::new(vec![vec![2.0, 1.0], vec![1.0, 1.0]], vec![16.0, 10.0], vec![6.0, 3.0]).unwrap();
        let r = solve(&p, &SolveOptions::default()).unwrap();
        assert_eq!(r.iterations, 1);
        assert_eq!(r.records[0].scheme, PivotScheme::PSPPI);
        assert_eq!(r.class, TerminalClass::OPTIMAL);
        assert_eq!(r.objective, Some(48.0));
        assert_eq!(r.dual_objective, Some(48.0));
        assert!(r.has_alternatives);
        assert!(!r.cycle_flag);
    }

    #[test]
    fn alternatives_are_opt_in() {
        let p = CanonicalLp::new(vec![vec![2.0, 1.0], vec![1.0, 1.0]], vec![16.0, 10.0], vec![6.0, 3.0]).unwrap();
        let o = SolveOptions {
            enumerate_alternatives: true,
            ..SolveOptions::default()
        };
        let r = solve(&p, &o).unwrap();
        assert!(!r.alternatives.is_empty());
        assert_eq!(r.objective, Some(48.0));
    }

    #[test]
    fn classify_examples() {
        let ex2 = tab(vec![vec![0.25, 0.5], vec![3.0, 4.0]], vec![0.25, 0.0], vec![-2.0, -4.0]);
        assert_eq!(classify_terminal(&ex2).unwrap().class, TerminalClass::DUAL_RAY);
        let ex3 = tab(
            vec![vec![-0.75, 0.5], vec![-0.25, 0.5]],
            vec![1.0, 1.0],
            vec![0.0, -0.25],
        );
        assert_eq!(classify_terminal(&ex3).unwrap().class, TerminalClass::PRIMAL_RAY);
        let ex6 = tab(vec![vec![1.0, -1.0], vec![1.0, 0.0]], vec![1.0, -1.0], vec![-2.0, 1.0]);
        let c = classify_terminal(&ex6).unwrap();
        assert_eq!(c.class, TerminalClass::BOTH_INFEASIBLE);
        assert_eq!(c.certificates.len(), 2);
    }

    #[test]
    fn classify_rejects_non_terminal() {
        let t = tab(vec![vec![2.0, 1.0], vec![1.0, 1.0]], vec![16.0, 10.0], vec![6.0, 3.0]);
        assert!(matches!(
            classify_terminal(&t),
            Err(Error::NotTerminal { scheme: "PSPPI", .. })
        ));
    }

    #[test]
    fn cycle_detection() {
        let history = HashSet::from(["ppPP".to_string()]);
        assert!(detect_cycle(&history, "ppPP"));
        assert!(!detect_cycle(&history, "PznP"));
        assert!(!detect_cycle(&HashSet::new(), "ppPP"));
    }

    #[test]
    fn unbounded_problem_yields_valid_ray() {
        // max x1 s.t. -x1 + x2 <= 1
        let p = CanonicalLp::new(vec![vec![-1.0, 1.0]], vec![1.0], vec![1.0, 0.0]).unwrap();
        let r = solve(&p, &SolveOptions::default()).unwrap();
        assert_eq!(r.class, TerminalClass::UNBOUNDED);
        assert!(r.certificates[0].verify(&p, 1e-9));
        assert_eq!(r.objective, None);
    }

    #[test]
    fn infeasible_problem_yields_valid_dual_ray() {
        // x1 <= -1
        let p = CanonicalLp::new(vec![vec![1.0]], vec![-1.0], vec![-1.0]).unwrap();
        let r = solve(&p, &SolveOptions::default()).unwrap();
        assert_eq!(r.class, TerminalClass::INFEASIBLE);
        assert!(r.certificates[0].verify(&p, 1e-9));
    }

    #[test]
    fn iteration_limit_returns_partial_report() {
        let p = CanonicalLp::new(vec![vec![2.0, 1.0], vec![1.0, 1.0]], vec![16.0, 10.0], vec![6.0, 3.0]).unwrap();
        let o = SolveOptions {
            max_iterations: Some(1),
            ..SolveOptions::default()
        };
        assert!(solve(&p, &o).is_ok());
        let p = CanonicalLp::new(vec![vec![1.0, 1.0], vec![1.0, 3.0]], vec![4.0, 6.0], vec![1.0, 2.0]).unwrap();
        match solve(&p, &o) {
            Err(Error::IterationLimit { limit: 1, partial }) => {
                assert!(partial.iteration_limit_hit);
                assert_eq!(partial.iterations, 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn class_display() {
        assert_eq!(TerminalClass::UNBOUNDED.to_string(), "(∞,Φ)");
        assert_eq!(TerminalClass::OPTIMAL.to_string(), "(F,F)");
    }
}
