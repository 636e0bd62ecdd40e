//! General linear programs and their reduction to the symmetric canonical form
//! `maximize c·x  s.t.  A·x ≤ b, x ≥ 0`.
//!
//! The reduction keeps the problem small: all free variables share a single
//! extra shift variable `t` (each free `x = x' - t`), and all equality rows
//! share a single extra reverse inequality (the negated sum of the equality
//! rows). No artificial variables are introduced, so the implied initial
//! basic solution may be infeasible.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub name: String,
    pub relation: Relation,
    /// Variable index to coefficient.
    pub coeffs: BTreeMap<usize, f64>,
    pub rhs: f64,
    /// MPS-style range. Turns the row into a two-sided interval, see [`Row::interval`].
    pub range: Option<f64>,
}

impl Row {
    pub fn new(name: impl Into<String>, relation: Relation, rhs: f64) -> Self {
        Row {
            name: name.into(),
            relation,
            coeffs: BTreeMap::new(),
            rhs,
            range: None,
        }
    }

    pub fn with_coeffs(mut self, coeffs: impl IntoIterator<Item = (usize, f64)>) -> Self {
        self.coeffs.extend(coeffs);
        self
    }

    /// The feasible interval `[lo, hi]` of the row activity `a·x`.
    pub fn interval(&self) -> (f64, f64) {
        let b = self.rhs;
        match (self.relation, self.range) {
            (Relation::Le, None) => (f64::NEG_INFINITY, b),
            (Relation::Ge, None) => (b, f64::INFINITY),
            (Relation::Eq, None) => (b, b),
            (Relation::Le, Some(r)) => (b - r.abs(), b),
            (Relation::Ge, Some(r)) => (b, b + r.abs()),
            (Relation::Eq, Some(r)) if r >= 0.0 => (b, b + r),
            (Relation::Eq, Some(r)) => (b + r, b),
        }
    }

    pub fn activity(&self, x: &[f64]) -> f64 {
        self.coeffs.iter().map(|(&j, &a)| a * x[j]).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bound {
    pub lower: f64,
    pub upper: f64,
}

impl Default for Bound {
    fn default() -> Self {
        Bound {
            lower: 0.0,
            upper: f64::INFINITY,
        }
    }
}

impl Bound {
    pub fn new(lower: f64, upper: f64) -> Self {
        Bound { lower, upper }
    }

    pub fn free() -> Self {
        Bound::new(f64::NEG_INFINITY, f64::INFINITY)
    }
}

/// A user-level linear program with arbitrary row senses and variable bounds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralLp {
    pub name: String,
    pub sense: Sense,
    pub var_names: Vec<String>,
    pub objective: BTreeMap<usize, f64>,
    /// Constant added to `c·x`.
    pub objective_offset: f64,
    pub rows: Vec<Row>,
    pub bounds: Vec<Bound>,
}

impl GeneralLp {
    pub fn new(name: impl Into<String>, sense: Sense) -> Self {
        GeneralLp {
            name: name.into(),
            sense,
            var_names: Vec::new(),
            objective: BTreeMap::new(),
            objective_offset: 0.0,
            rows: Vec::new(),
            bounds: Vec::new(),
        }
    }

    /// Declares a variable with the default bounds `[0, +inf)` and returns its index.
    pub fn add_var(&mut self, name: impl Into<String>, cost: f64) -> usize {
        let j = self.var_names.len();
        self.var_names.push(name.into());
        self.bounds.push(Bound::default());
        if cost != 0.0 {
            self.objective.insert(j, cost);
        }
        j
    }

    pub fn add_row(&mut self, row: Row) -> usize {
        self.rows.push(row);
        self.rows.len() - 1
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn row_names(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.name.clone()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.bounds.len() != n {
            return Err(Error::Shape {
                what: "bounds",
                expected: n,
                found: self.bounds.len(),
            });
        }
        if let Some(&j) = self.objective.keys().find(|&&j| j >= n) {
            return Err(Error::UndeclaredVariable {
                row: "<objective>".into(),
                var: j,
            });
        }
        for row in &self.rows {
            if let Some(&j) = row.coeffs.keys().find(|&&j| j >= n) {
                return Err(Error::UndeclaredVariable {
                    row: row.name.clone(),
                    var: j,
                });
            }
        }
        for (j, b) in self.bounds.iter().enumerate() {
            if b.lower > b.upper || b.lower == f64::INFINITY || b.upper == f64::NEG_INFINITY {
                return Err(Error::InfeasibleBounds {
                    name: self.var_names[j].clone(),
                    lower: b.lower,
                    upper: b.upper,
                });
            }
        }
        Ok(())
    }

    pub fn objective_value(&self, x: &[f64]) -> f64 {
        self.objective_offset + self.objective.iter().map(|(&j, &c)| c * x[j]).sum::<f64>()
    }

    /// Largest violation of any row interval or variable bound at `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let rows = self.rows.iter().map(|row| {
            let (lo, hi) = row.interval();
            let ax = row.activity(x);
            (lo - ax).max(ax - hi).max(0.0)
        });
        let bounds = self
            .bounds
            .iter()
            .zip(x)
            .map(|(b, &xj)| (b.lower - xj).max(xj - b.upper).max(0.0));
        rows.chain(bounds).fold(0.0, f64::max)
    }
}

/// How an original variable is expressed through canonical columns.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum VarTransform {
    /// `x = x'`.
    Direct { col: usize },
    /// `x = x' + by`.
    Shifted { col: usize, by: f64 },
    /// `x = x' - t`, with `t` the shared free-shift column.
    FreeSplit { col: usize },
}

impl VarTransform {
    pub fn col(&self) -> usize {
        match *self {
            VarTransform::Direct { col } | VarTransform::Shifted { col, .. } | VarTransform::FreeSplit { col } => col,
        }
    }
}

/// Where a canonical row comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowOrigin {
    /// Original `≤` row.
    Direct { row: usize },
    /// Original `≥` row, negated.
    Negated { row: usize },
    /// Upper side of a ranged row.
    RangeUpper { row: usize },
    /// Lower side of a ranged row, negated.
    RangeLower { row: usize },
    /// `a·x ≤ b` half of an original equality.
    EqualityHalf { row: usize },
    /// `x' ≤ 0` pin of a fixed variable; counted as an equality.
    Pin { var: usize },
    /// Negated sum of every equality half and pin.
    Aggregate,
    /// `x' ≤ u - l` (or `x' - t ≤ u` for free variables).
    UpperBound { var: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformRecord {
    pub objective_sign_flip: bool,
    /// Constant to add to the canonical objective, in canonical (maximize) sense.
    pub objective_constant: f64,
    pub vars: Vec<VarTransform>,
    pub free_shift_col: Option<usize>,
    pub rows: Vec<RowOrigin>,
    pub var_names: Vec<String>,
    pub row_names: Vec<String>,
}

impl TransformRecord {
    pub fn identity(n: usize, m: usize) -> Self {
        TransformRecord {
            objective_sign_flip: false,
            objective_constant: 0.0,
            vars: (0..n).map(|col| VarTransform::Direct { col }).collect(),
            free_shift_col: None,
            rows: (0..m).map(|row| RowOrigin::Direct { row }).collect(),
            var_names: (1..=n).map(|j| format!("x{j}")).collect(),
            row_names: (1..=m).map(|i| format!("r{i}")).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.objective_sign_flip
            && self.objective_constant == 0.0
            && self.free_shift_col.is_none()
            && self
                .vars
                .iter()
                .enumerate()
                .all(|(j, v)| *v == VarTransform::Direct { col: j })
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| *r == RowOrigin::Direct { row: i })
    }

    /// Canonical row duals `v` recombined per original row, plus the implied
    /// multiplier of each variable's upper bound or pin, in canonical sense.
    pub fn recombine_duals(&self, v: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let mut rows = vec![0.0; self.row_names.len()];
        let mut bounds = vec![0.0; self.var_names.len()];
        let aggregate = self
            .rows
            .iter()
            .position(|o| *o == RowOrigin::Aggregate)
            .map_or(0.0, |i| v[i]);
        for (i, origin) in self.rows.iter().enumerate() {
            match *origin {
                RowOrigin::Direct { row } | RowOrigin::RangeUpper { row } => rows[row] += v[i],
                RowOrigin::Negated { row } | RowOrigin::RangeLower { row } => rows[row] -= v[i],
                RowOrigin::EqualityHalf { row } => rows[row] += v[i] - aggregate,
                RowOrigin::Pin { var } => bounds[var] += v[i] - aggregate,
                RowOrigin::UpperBound { var } => bounds[var] += v[i],
                RowOrigin::Aggregate => {}
            }
        }
        (rows, bounds)
    }

    /// A canonical `x` direction expressed in the original variables.
    pub fn primal_direction(&self, d: &[f64]) -> Vec<f64> {
        let shift = self.free_shift_col.map_or(0.0, |c| d[c]);
        self.vars
            .iter()
            .map(|v| match *v {
                VarTransform::Direct { col } | VarTransform::Shifted { col, .. } => d[col],
                VarTransform::FreeSplit { col } => d[col] - shift,
            })
            .collect()
    }

    pub fn canonical_column_name(&self, col: usize) -> String {
        if Some(col) == self.free_shift_col {
            return "__free_shift".into();
        }
        self.vars
            .iter()
            .position(|v| v.col() == col)
            .map(|j| self.var_names[j].clone())
            .unwrap_or_else(|| format!("c{}", col + 1))
    }

    pub fn canonical_row_name(&self, i: usize) -> String {
        match self.rows[i] {
            RowOrigin::Direct { row } | RowOrigin::Negated { row } | RowOrigin::EqualityHalf { row } => {
                self.row_names[row].clone()
            }
            RowOrigin::RangeUpper { row } => format!("{}__hi", self.row_names[row]),
            RowOrigin::RangeLower { row } => format!("{}__lo", self.row_names[row]),
            RowOrigin::Pin { var } => format!("{}__pin", self.var_names[var]),
            RowOrigin::UpperBound { var } => format!("{}__ub", self.var_names[var]),
            RowOrigin::Aggregate => "__equality_sum".into(),
        }
    }
}

/// `maximize c·x  s.t.  A·x ≤ b, x ≥ 0`, plus the record needed to map
/// solutions back to the problem it was derived from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalLp {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
    pub transform: TransformRecord,
}

impl CanonicalLp {
    /// Builds a canonical problem directly, with an identity transform.
    pub fn new(a: Vec<Vec<f64>>, b: Vec<f64>, c: Vec<f64>) -> Result<Self> {
        let (m, n) = (b.len(), c.len());
        if a.len() != m {
            return Err(Error::Shape {
                what: "constraint rows",
                expected: m,
                found: a.len(),
            });
        }
        if let Some(row) = a.iter().find(|row| row.len() != n) {
            return Err(Error::Shape {
                what: "constraint columns",
                expected: n,
                found: row.len(),
            });
        }
        Ok(CanonicalLp {
            transform: TransformRecord::identity(n, m),
            a,
            b,
            c,
        })
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn objective(&self, x: &[f64]) -> f64 {
        self.c.iter().zip(x).map(|(c, x)| c * x).sum()
    }
}

/// Basic solution of the canonical pair, indexed by original canonical
/// positions: `x`/`u` by column, `y`/`v` by row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalSolution {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub v: Vec<f64>,
    pub u: Vec<f64>,
    pub f: f64,
    pub g: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OriginalSolution {
    pub x: Vec<f64>,
    /// One multiplier per original row, in the original objective sense:
    /// `c - Σ y_r a_r` are the reduced costs of the original problem.
    pub row_duals: Vec<f64>,
    pub objective: f64,
    /// Canonical dual objective mapped the same way as `objective`.
    pub dual_objective: f64,
}

pub fn canonicalize(p: &GeneralLp) -> Result<CanonicalLp> {
    p.validate()?;
    let sign = match p.sense {
        Sense::Maximize => 1.0,
        Sense::Minimize => -1.0,
    };

    let mut vars = Vec::with_capacity(p.num_vars());
    let mut ncols = 0;
    let mut has_free = false;
    for b in &p.bounds {
        let col = ncols;
        ncols += 1;
        vars.push(if b.lower == f64::NEG_INFINITY {
            has_free = true;
            VarTransform::FreeSplit { col }
        } else if b.lower != 0.0 {
            VarTransform::Shifted { col, by: b.lower }
        } else {
            VarTransform::Direct { col }
        });
    }
    let free_shift_col = has_free.then(|| {
        ncols += 1;
        ncols - 1
    });

    // Original cost coefficients into canonical columns.
    let mut c = vec![0.0; ncols];
    let mut objective_constant = sign * p.objective_offset;
    for (&j, &cj) in &p.objective {
        let cj = sign * cj;
        match vars[j] {
            VarTransform::Direct { col } => c[col] += cj,
            VarTransform::Shifted { col, by } => {
                c[col] += cj;
                objective_constant += cj * by;
            }
            VarTransform::FreeSplit { col } => {
                c[col] += cj;
                c[free_shift_col.unwrap()] -= cj;
            }
        }
    }

    // Expands a sparse original row into a canonical dense row and shifted rhs.
    let expand = |coeffs: &BTreeMap<usize, f64>, rhs: f64| -> (Vec<f64>, f64) {
        let mut row = vec![0.0; ncols];
        let mut rhs = rhs;
        for (&j, &a) in coeffs {
            match vars[j] {
                VarTransform::Direct { col } => row[col] += a,
                VarTransform::Shifted { col, by } => {
                    row[col] += a;
                    rhs -= a * by;
                }
                VarTransform::FreeSplit { col } => {
                    row[col] += a;
                    row[free_shift_col.unwrap()] -= a;
                }
            }
        }
        (row, rhs)
    };
    let negate = |(row, rhs): (Vec<f64>, f64)| -> (Vec<f64>, f64) { (row.into_iter().map(|a| -a).collect(), -rhs) };

    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut origins = Vec::new();
    let mut push = |(row, rhs): (Vec<f64>, f64), origin: RowOrigin| {
        a.push(row);
        b.push(rhs);
        origins.push(origin);
    };

    let mut eq_sum_row = vec![0.0; ncols];
    let mut eq_sum_rhs = 0.0;
    let mut n_equalities = 0;

    for (r, row) in p.rows.iter().enumerate() {
        match (row.relation, row.range) {
            (Relation::Le, None) => push(expand(&row.coeffs, row.rhs), RowOrigin::Direct { row: r }),
            (Relation::Ge, None) => push(negate(expand(&row.coeffs, row.rhs)), RowOrigin::Negated { row: r }),
            (Relation::Eq, None) => {
                let (dense, rhs) = expand(&row.coeffs, row.rhs);
                for (s, v) in eq_sum_row.iter_mut().zip(&dense) {
                    *s += v;
                }
                eq_sum_rhs += rhs;
                n_equalities += 1;
                push((dense, rhs), RowOrigin::EqualityHalf { row: r });
            }
            (_, Some(_)) => {
                let (lo, hi) = row.interval();
                push(expand(&row.coeffs, hi), RowOrigin::RangeUpper { row: r });
                push(negate(expand(&row.coeffs, lo)), RowOrigin::RangeLower { row: r });
            }
        }
    }

    for (j, bound) in p.bounds.iter().enumerate() {
        if !bound.upper.is_finite() {
            continue;
        }
        let col = vars[j].col();
        let mut dense = vec![0.0; ncols];
        dense[col] = 1.0;
        match vars[j] {
            VarTransform::FreeSplit { .. } => {
                dense[free_shift_col.unwrap()] = -1.0;
                push((dense, bound.upper), RowOrigin::UpperBound { var: j });
            }
            _ if bound.upper == bound.lower => {
                eq_sum_row[col] += 1.0;
                n_equalities += 1;
                push((dense, 0.0), RowOrigin::Pin { var: j });
            }
            _ => {
                push((dense, bound.upper - bound.lower), RowOrigin::UpperBound { var: j });
            }
        }
    }

    if n_equalities > 0 {
        push(negate((eq_sum_row, eq_sum_rhs)), RowOrigin::Aggregate);
    }

    Ok(CanonicalLp {
        a,
        b,
        c,
        transform: TransformRecord {
            objective_sign_flip: p.sense == Sense::Minimize,
            objective_constant,
            vars,
            free_shift_col,
            rows: origins,
            var_names: p.var_names.clone(),
            row_names: p.row_names(),
        },
    })
}

fn shape(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Shape { what, expected, found })
    }
}

/// Maps a canonical primal-dual solution back to the original variables and rows.
pub fn map_back(sol: &CanonicalSolution, t: &TransformRecord) -> Result<OriginalSolution> {
    let ncols = t
        .vars
        .iter()
        .map(|v| v.col() + 1)
        .chain(t.free_shift_col.map(|c| c + 1))
        .max()
        .unwrap_or(0);
    shape("canonical primal x", ncols, sol.x.len())?;
    shape("canonical dual v", t.rows.len(), sol.v.len())?;

    let shift = t.free_shift_col.map_or(0.0, |c| sol.x[c]);
    let x = t
        .vars
        .iter()
        .map(|v| match *v {
            VarTransform::Direct { col } => sol.x[col],
            VarTransform::Shifted { col, by } => sol.x[col] + by,
            VarTransform::FreeSplit { col } => sol.x[col] - shift,
        })
        .collect();

    let (duals, _) = t.recombine_duals(&sol.v);
    let sign = if t.objective_sign_flip { -1.0 } else { 1.0 };
    Ok(OriginalSolution {
        x,
        row_duals: duals.into_iter().map(|y| sign * y).collect(),
        objective: sign * (sol.f + t.objective_constant),
        dual_objective: sign * (sol.g + t.objective_constant),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn standard_form() -> GeneralLp {
        let mut p = GeneralLp::new("std", Sense::Maximize);
        let x1 = p.add_var("x1", 6.0);
        let x2 = p.add_var("x2", 3.0);
        p.add_row(Row::new("r1", Relation::Le, 16.0).with_coeffs([(x1, 2.0), (x2, 1.0)]));
        p.add_row(Row::new("r2", Relation::Le, 10.0).with_coeffs([(x1, 1.0), (x2, 1.0)]));
        p
    }

    #[test]
    fn standard_form_is_identity() {
        let c = canonicalize(&standard_form()).unwrap();
        assert_eq!(c.a, vec![vec![2.0, 1.0], vec![1.0, 1.0]]);
        assert_eq!(c.b, vec![16.0, 10.0]);
        assert_eq!(c.c, vec![6.0, 3.0]);
        assert!(c.transform.is_identity());
    }

    #[test]
    fn one_equality_becomes_two_rows() {
        let mut p = GeneralLp::new("eq", Sense::Maximize);
        let x1 = p.add_var("x1", 1.0);
        let x2 = p.add_var("x2", 1.0);
        p.add_row(Row::new("e", Relation::Eq, 3.0).with_coeffs([(x1, 1.0), (x2, 2.0)]));
        let c = canonicalize(&p).unwrap();
        assert_eq!(c.a, vec![vec![1.0, 2.0], vec![-1.0, -2.0]]);
        assert_eq!(c.b, vec![3.0, -3.0]);
        assert_eq!(
            c.transform.rows,
            vec![RowOrigin::EqualityHalf { row: 0 }, RowOrigin::Aggregate]
        );
    }

    #[test]
    fn equalities_share_one_aggregate_row() {
        let mut p = GeneralLp::new("eqs", Sense::Maximize);
        let x = p.add_var("x", 1.0);
        let y = p.add_var("y", 1.0);
        p.add_row(Row::new("e1", Relation::Eq, 1.0).with_coeffs([(x, 1.0)]));
        p.add_row(Row::new("e2", Relation::Eq, 2.0).with_coeffs([(y, 1.0)]));
        p.add_row(Row::new("e3", Relation::Eq, 4.0).with_coeffs([(x, 1.0), (y, 1.0)]));
        let c = canonicalize(&p).unwrap();
        assert_eq!(c.m(), 4);
        assert_eq!(c.a[3], vec![-2.0, -2.0]);
        assert_eq!(c.b[3], -7.0);
    }

    #[test]
    fn free_variables_share_one_shift() {
        let mut p = GeneralLp::new("free", Sense::Maximize);
        let x1 = p.add_var("x1", 1.0);
        let x2 = p.add_var("x2", 1.0);
        p.bounds[x1] = Bound::free();
        p.bounds[x2] = Bound::free();
        p.add_row(Row::new("r", Relation::Le, 4.0).with_coeffs([(x1, 1.0), (x2, 1.0)]));
        let c = canonicalize(&p).unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.transform.free_shift_col, Some(2));
        assert_eq!(c.a, vec![vec![1.0, 1.0, -2.0]]);
        assert_eq!(c.c, vec![1.0, 1.0, -2.0]);
    }

    #[test]
    fn shifted_and_bounded_variables() {
        let mut p = GeneralLp::new("shift", Sense::Minimize);
        let x = p.add_var("x", 2.0);
        p.bounds[x] = Bound::new(1.0, 5.0);
        p.add_row(Row::new("r", Relation::Ge, 3.0).with_coeffs([(x, 1.0)]));
        let c = canonicalize(&p).unwrap();
        // -x' <= -(3 - 1) and x' <= 4
        assert_eq!(c.a, vec![vec![-1.0], vec![1.0]]);
        assert_eq!(c.b, vec![-2.0, 4.0]);
        assert_eq!(c.c, vec![-2.0]);
        assert_eq!(c.transform.objective_constant, -2.0);
        assert!(c.transform.objective_sign_flip);
    }

    #[test]
    fn fixed_variable_is_pinned_as_equality() {
        let mut p = GeneralLp::new("fx", Sense::Maximize);
        let x = p.add_var("x", 1.0);
        let y = p.add_var("y", 1.0);
        p.bounds[x] = Bound::new(2.0, 2.0);
        p.add_row(Row::new("r", Relation::Le, 5.0).with_coeffs([(x, 1.0), (y, 1.0)]));
        let c = canonicalize(&p).unwrap();
        assert_eq!(
            c.transform.rows,
            vec![
                RowOrigin::Direct { row: 0 },
                RowOrigin::Pin { var: 0 },
                RowOrigin::Aggregate
            ]
        );
        assert_eq!(c.b, vec![3.0, 0.0, 0.0]);
        assert_eq!(c.a[2], vec![-1.0, 0.0]);
    }

    #[test]
    fn inconsistent_bounds_are_rejected() {
        let mut p = GeneralLp::new("bad", Sense::Maximize);
        let x = p.add_var("x", 1.0);
        p.bounds[x] = Bound::new(3.0, 1.0);
        assert!(matches!(canonicalize(&p), Err(Error::InfeasibleBounds { .. })));
    }

    #[test]
    fn undeclared_variable_is_rejected() {
        let mut p = GeneralLp::new("bad", Sense::Maximize);
        p.add_var("x", 1.0);
        p.add_row(Row::new("r", Relation::Le, 1.0).with_coeffs([(3, 1.0)]));
        assert!(matches!(
            canonicalize(&p),
            Err(Error::UndeclaredVariable { var: 3, .. })
        ));
    }

    #[test]
    fn ranged_rows() {
        let le = Row {
            range: Some(-2.0),
            ..Row::new("l", Relation::Le, 5.0)
        };
        assert_eq!(le.interval(), (3.0, 5.0));
        let ge = Row {
            range: Some(-2.0),
            ..Row::new("g", Relation::Ge, 5.0)
        };
        assert_eq!(ge.interval(), (5.0, 7.0));
        let eq_pos = Row {
            range: Some(2.0),
            ..Row::new("e", Relation::Eq, 5.0)
        };
        assert_eq!(eq_pos.interval(), (5.0, 7.0));
        let eq_neg = Row {
            range: Some(-2.0),
            ..Row::new("e", Relation::Eq, 5.0)
        };
        assert_eq!(eq_neg.interval(), (3.0, 5.0));
    }

    #[test]
    fn map_back_identity() {
        let c = canonicalize(&standard_form()).unwrap();
        let sol = CanonicalSolution {
            x: vec![8.0, 0.0],
            y: vec![0.0, 2.0],
            v: vec![3.0, 0.0],
            u: vec![0.0, 0.0],
            f: 48.0,
            g: 48.0,
        };
        let back = map_back(&sol, &c.transform).unwrap();
        assert_eq!(back.x, vec![8.0, 0.0]);
        assert_eq!(back.objective, 48.0);
        assert_eq!(back.row_duals, vec![3.0, 0.0]);
    }

    #[test]
    fn map_back_sign_flip() {
        let mut t = TransformRecord::identity(1, 1);
        t.objective_sign_flip = true;
        let sol = CanonicalSolution {
            x: vec![1.0],
            y: vec![0.0],
            v: vec![0.0],
            u: vec![0.0],
            f: 464.75314285714273,
            g: 464.75314285714273,
        };
        let back = map_back(&sol, &t).unwrap();
        assert_eq!(back.objective, -464.75314285714273);
    }

    #[test]
    fn map_back_free_split() {
        let mut p = GeneralLp::new("free", Sense::Maximize);
        let x = p.add_var("x", 1.0);
        p.bounds[x] = Bound::free();
        p.add_row(Row::new("r", Relation::Le, 3.0).with_coeffs([(x, 1.0)]));
        let c = canonicalize(&p).unwrap();
        let sol = CanonicalSolution {
            x: vec![5.0, 2.0],
            y: vec![0.0],
            v: vec![1.0],
            u: vec![0.0, 0.0],
            f: 3.0,
            g: 3.0,
        };
        assert_eq!(map_back(&sol, &c.transform).unwrap().x, vec![3.0]);
    }

    #[test]
    fn map_back_shape_error() {
        let t = TransformRecord::identity(2, 1);
        let sol = CanonicalSolution {
            x: vec![0.0],
            y: vec![0.0],
            v: vec![0.0],
            u: vec![0.0],
            f: 0.0,
            g: 0.0,
        };
        assert!(matches!(map_back(&sol, &t), Err(Error::Shape { .. })));
    }
}
