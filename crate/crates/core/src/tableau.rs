//! Tucker's compact symmetric tableau.
//!
//! ```text
//!              z_j^N        -1
//!   w_i^N  [  alpha_ij  |  beta_i ]  = -z_i^B
//!     -1   [  gamma_j   |  delta  ]  =  f
//!             = w_j^B      = g
//! ```
//!
//! Row `i` reads `z_i^B = beta_i - Σ_j alpha_ij z_j^N` for the primal and column
//! `j` reads `w_j^B = -gamma_j + Σ_i w_i^N alpha_ij` for the dual. At the basic
//! point both objectives equal `-delta`.
//!
//! Every original variable keeps its label for life: `x_j` (paired with the dual
//! surplus `u_j`) starts on column `j`, and the slack `y_i` (paired with `v_i`)
//! starts on row `i`. A pivot swaps the labels of its row and column.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp_model::{CanonicalLp, CanonicalSolution};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Permanent identity of a primal-dual variable pair, by its initial position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    /// `x_j` / `u_j`, initially on column `j`.
    Column(usize),
    /// `y_i` / `v_i`, initially on row `i`.
    Row(usize),
}

impl Label {
    /// Fixed position of this label in the signature (columns first, then rows).
    pub fn slot(self, n: usize) -> usize {
        match self {
            Label::Column(j) => j,
            Label::Row(i) => n + i,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Column(j) => write!(f, "x{}", j + 1),
            Label::Row(i) => write!(f, "y{}", i + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(value: f64, tol: f64) -> Sign {
        if value > tol {
            Sign::Pos
        } else if value < -tol {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    /// Lowercase code used for `gamma` (`n`, `z`, `p`).
    pub fn lower(self) -> char {
        match self {
            Sign::Neg => 'n',
            Sign::Zero => 'z',
            Sign::Pos => 'p',
        }
    }

    /// Uppercase code used for `beta` (`N`, `Z`, `P`).
    pub fn upper(self) -> char {
        self.lower().to_ascii_uppercase()
    }
}

/// Sign pattern of a cell: `0**` when `alpha` is zero, otherwise the triple
/// (sign of alpha, sign of beta, sign of gamma), e.g. `+Pp` or `-Nz`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellType {
    Inactive,
    Active { alpha: Sign, beta: Sign, gamma: Sign },
}

impl CellType {
    /// All 19 cell types; 18 active triples followed by `0**`.
    pub fn all() -> Vec<CellType> {
        let signs = [Sign::Pos, Sign::Zero, Sign::Neg];
        let mut all = Vec::with_capacity(19);
        for alpha in [Sign::Pos, Sign::Neg] {
            for beta in signs {
                for gamma in signs {
                    all.push(CellType::Active { alpha, beta, gamma });
                }
            }
        }
        all.push(CellType::Inactive);
        all
    }

    pub fn code(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CellType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CellType::Inactive => f.write_str("0**"),
            CellType::Active { alpha, beta, gamma } => {
                let a = if alpha == Sign::Pos { '+' } else { '-' };
                write!(f, "{a}{}{}", beta.upper(), gamma.lower())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tableau {
    m: usize,
    n: usize,
    /// Row-major `m × n`.
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    delta: f64,
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    tol: f64,
}

/// Entry update shared by [`Tableau::pivot_in_place`] and the look-ahead used
/// for infeasibility-index prediction, so both see bit-identical values.
#[inline(always)]
pub(crate) fn exchange_update(entry: f64, in_pivot_col: f64, scaled_pivot_row: f64) -> f64 {
    entry - in_pivot_col * scaled_pivot_row
}

/// Solves `lhs · X = rhs` in place (the result replaces `rhs`) by Gaussian
/// elimination with partial pivoting. `None` if `lhs` is numerically singular.
fn gauss_solve(lhs: &mut [Vec<f64>], rhs: &mut [Vec<f64>]) -> Option<()> {
    let k = lhs.len();
    for c in 0..k {
        let p = (c..k).max_by(|&x, &y| lhs[x][c].abs().total_cmp(&lhs[y][c].abs()))?;
        if lhs[p][c].abs() < 1e-12 {
            return None;
        }
        lhs.swap(c, p);
        rhs.swap(c, p);
        let (top, bottom) = lhs.split_at_mut(c + 1);
        let (rtop, rbottom) = rhs.split_at_mut(c + 1);
        let (prow, prhs) = (&top[c], &rtop[c]);
        for (row, rrow) in bottom.iter_mut().zip(rbottom.iter_mut()) {
            let f = row[c] / prow[c];
            if f != 0.0 {
                for (a, b) in row[c..].iter_mut().zip(&prow[c..]) {
                    *a -= f * b;
                }
                for (a, b) in rrow.iter_mut().zip(prhs) {
                    *a -= f * b;
                }
            }
        }
    }
    for c in (0..k).rev() {
        let (head, tail) = rhs.split_at_mut(c + 1);
        let row = &mut head[c];
        for (q, other) in tail.iter().enumerate() {
            let f = lhs[c][c + 1 + q];
            if f != 0.0 {
                for (a, b) in row.iter_mut().zip(other) {
                    *a -= f * b;
                }
            }
        }
        let d = lhs[c][c];
        for a in row.iter_mut() {
            *a /= d;
        }
    }
    Some(())
}

impl Tableau {
    pub fn initial(p: &CanonicalLp) -> Tableau {
        Self::initial_with_tol(p, DEFAULT_TOL)
    }

    pub fn initial_with_tol(p: &CanonicalLp, tol: f64) -> Tableau {
        let (m, n) = (p.m(), p.n());
        Tableau {
            m,
            n,
            alpha: p.a.iter().flatten().copied().collect(),
            beta: p.b.clone(),
            gamma: p.c.clone(),
            delta: 0.0,
            row_labels: (0..m).map(Label::Row).collect(),
            col_labels: (0..n).map(Label::Column).collect(),
            tol,
        }
    }

    /// Builds a tableau from raw parts with the initial label assignment.
    pub fn from_parts(alpha: Vec<Vec<f64>>, beta: Vec<f64>, gamma: Vec<f64>, delta: f64) -> Result<Tableau> {
        let p = CanonicalLp::new(alpha, beta, gamma)?;
        let mut t = Tableau::initial(&p);
        t.delta = delta;
        Ok(t)
    }

    pub fn with_tol(mut self, tol: f64) -> Tableau {
        self.tol = tol;
        self
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    #[inline]
    pub fn alpha(&self, i: usize, j: usize) -> f64 {
        self.alpha[i * self.n + j]
    }

    pub fn alpha_row(&self, i: usize) -> &[f64] {
        &self.alpha[i * self.n..(i + 1) * self.n]
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn alpha_rows(&self) -> Vec<Vec<f64>> {
        (0..self.m).map(|i| self.alpha_row(i).to_vec()).collect()
    }

    pub fn beta_sign(&self, i: usize) -> Sign {
        Sign::of(self.beta[i], self.tol)
    }

    pub fn gamma_sign(&self, j: usize) -> Sign {
        Sign::of(self.gamma[j], self.tol)
    }

    pub fn pivot(&self, row: usize, col: usize) -> Result<Tableau> {
        let mut next = self.clone();
        next.pivot_in_place(row, col)?;
        Ok(next)
    }

    /// Tucker exchange at `(row, col)`, then swap the two labels.
    pub fn pivot_in_place(&mut self, row: usize, col: usize) -> Result<()> {
        let n = self.n;
        let p = self.alpha(row, col);
        if p.abs() <= self.tol || !p.is_finite() {
            return Err(Error::ZeroPivot { row, col, value: p });
        }

        // Scaled pivot row (including beta) excluding the pivot itself.
        let mut scaled: Vec<f64> = self.alpha_row(row).iter().map(|a| a / p).collect();
        let scaled_beta = self.beta[row] / p;
        scaled[col] = 0.0;

        for i in (0..self.m).filter(|&i| i != row) {
            let a_ic = self.alpha[i * n + col];
            if a_ic != 0.0 {
                let r = &mut self.alpha[i * n..(i + 1) * n];
                for (j, s) in scaled.iter().enumerate() {
                    if j != col {
                        r[j] = exchange_update(r[j], a_ic, *s);
                    }
                }
                self.beta[i] = exchange_update(self.beta[i], a_ic, scaled_beta);
            }
            self.alpha[i * n + col] = -a_ic / p;
        }

        let g_c = self.gamma[col];
        if g_c != 0.0 {
            for (j, s) in scaled.iter().enumerate() {
                if j != col {
                    self.gamma[j] = exchange_update(self.gamma[j], g_c, *s);
                }
            }
            self.delta = exchange_update(self.delta, g_c, scaled_beta);
        }
        self.gamma[col] = -g_c / p;

        let r = &mut self.alpha[row * n..(row + 1) * n];
        for (j, s) in scaled.iter().enumerate() {
            if j != col {
                r[j] = *s;
            }
        }
        r[col] = 1.0 / p;
        self.beta[row] = scaled_beta;

        std::mem::swap(&mut self.row_labels[row], &mut self.col_labels[col]);
        Ok(())
    }

    /// Whether every label still sits where it started.
    pub fn has_initial_labels(&self) -> bool {
        self.row_labels.iter().enumerate().all(|(i, l)| *l == Label::Row(i))
            && self.col_labels.iter().enumerate().all(|(j, l)| *l == Label::Column(j))
    }

    /// Recomputes every entry from `initial` (a tableau with initial labels)
    /// for the current label assignment, discarding rounding error that
    /// accumulated over many exchanges. The current basis is reached from
    /// `initial` by one block pivot on the rows `R` whose labels are now on
    /// columns and the columns `C` whose labels are now on rows.
    pub fn refactor(&mut self, initial: &Tableau) -> Result<()> {
        if !initial.has_initial_labels() || !self.same_shape(initial) {
            return Err(Error::Shape {
                what: "refactor reference",
                expected: self.m + self.n,
                found: initial.m + initial.n,
            });
        }
        let (m, n) = (self.m, self.n);
        // position of each original row in R and column in C
        let mut r_pos = vec![usize::MAX; m];
        let mut c_pos = vec![usize::MAX; n];
        let mut rs = Vec::new();
        let mut cs = Vec::new();
        for l in &self.col_labels {
            if let Label::Row(r) = *l {
                r_pos[r] = rs.len();
                rs.push(r);
            }
        }
        for l in &self.row_labels {
            if let Label::Column(c) = *l {
                c_pos[c] = cs.len();
                cs.push(c);
            }
        }
        let k = rs.len();
        let a0 = |i: usize, j: usize| initial.alpha(i, j);

        // X = P^-1 [A_R,all | b_R | I], P = A_RC; rows of X follow C.
        let width = n + 1 + k;
        let mut lhs: Vec<Vec<f64>> = rs.iter().map(|&r| cs.iter().map(|&c| a0(r, c)).collect()).collect();
        let mut rhs: Vec<Vec<f64>> = rs
            .iter()
            .enumerate()
            .map(|(q, &r)| {
                let mut row = Vec::with_capacity(width);
                row.extend((0..n).map(|j| a0(r, j)));
                row.push(initial.beta[r]);
                row.extend((0..k).map(|e| if e == q { 1.0 } else { 0.0 }));
                row
            })
            .collect();
        gauss_solve(&mut lhs, &mut rhs).ok_or(Error::ZeroPivot {
            row: 0,
            col: 0,
            value: 0.0,
        })?;
        let x = rhs;
        let x_beta = n;
        let x_inv = n + 1;

        let mut alpha = vec![0.0; m * n];
        let mut beta = vec![0.0; m];
        let mut gamma = vec![0.0; n];
        for (i, rl) in self.row_labels.iter().enumerate() {
            for (j, cl) in self.col_labels.iter().enumerate() {
                alpha[i * n + j] = match (*rl, *cl) {
                    (Label::Column(c), Label::Row(r)) => x[c_pos[c]][x_inv + r_pos[r]],
                    (Label::Column(c), Label::Column(cc)) => x[c_pos[c]][cc],
                    (Label::Row(r), Label::Row(rr)) => -cs
                        .iter()
                        .enumerate()
                        .map(|(p, &c)| a0(r, c) * x[p][x_inv + r_pos[rr]])
                        .sum::<f64>(),
                    (Label::Row(r), Label::Column(cc)) => {
                        a0(r, cc) - cs.iter().enumerate().map(|(p, &c)| a0(r, c) * x[p][cc]).sum::<f64>()
                    }
                };
            }
            beta[i] = match *rl {
                Label::Column(c) => x[c_pos[c]][x_beta],
                Label::Row(r) => {
                    initial.beta[r]
                        - cs.iter()
                            .enumerate()
                            .map(|(p, &c)| a0(r, c) * x[p][x_beta])
                            .sum::<f64>()
                }
            };
        }
        let c0 = &initial.gamma;
        for (j, cl) in self.col_labels.iter().enumerate() {
            gamma[j] = match *cl {
                Label::Row(rr) => -cs
                    .iter()
                    .enumerate()
                    .map(|(p, &c)| c0[c] * x[p][x_inv + r_pos[rr]])
                    .sum::<f64>(),
                Label::Column(cc) => c0[cc] - cs.iter().enumerate().map(|(p, &c)| c0[c] * x[p][cc]).sum::<f64>(),
            };
        }
        let delta = initial.delta - cs.iter().enumerate().map(|(p, &c)| c0[c] * x[p][x_beta]).sum::<f64>();

        self.alpha = alpha;
        self.beta = beta;
        self.gamma = gamma;
        self.delta = delta;
        Ok(())
    }

    /// Rows with `beta < 0` plus columns with `gamma > 0`.
    pub fn infeasibility_index(&self) -> usize {
        self.primal_infeasible_count() + self.dual_infeasible_count()
    }

    pub fn primal_infeasible_count(&self) -> usize {
        self.beta.iter().filter(|&&b| b < -self.tol).count()
    }

    pub fn dual_infeasible_count(&self) -> usize {
        self.gamma.iter().filter(|&&g| g > self.tol).count()
    }

    pub fn cell_type(&self, i: usize, j: usize) -> CellType {
        let a = self.alpha(i, j);
        if a.abs() <= self.tol {
            return CellType::Inactive;
        }
        CellType::Active {
            alpha: if a > 0.0 { Sign::Pos } else { Sign::Neg },
            beta: self.beta_sign(i),
            gamma: self.gamma_sign(j),
        }
    }

    /// Sign string of length `n + m` keyed to the initial label positions:
    /// a label currently on a column contributes the lowercase sign of its
    /// `gamma`, a label on a row the uppercase sign of its `beta`.
    pub fn signature(&self) -> String {
        let mut slots = vec![' '; self.n + self.m];
        for (j, label) in self.col_labels.iter().enumerate() {
            slots[label.slot(self.n)] = self.gamma_sign(j).lower();
        }
        for (i, label) in self.row_labels.iter().enumerate() {
            slots[label.slot(self.n)] = self.beta_sign(i).upper();
        }
        slots.into_iter().collect()
    }

    /// Basic solution of both problems, routed to the original `x, y, v, u` slots.
    pub fn basic_solution(&self) -> CanonicalSolution {
        let mut x = vec![0.0; self.n];
        let mut y = vec![0.0; self.m];
        let mut v = vec![0.0; self.m];
        let mut u = vec![0.0; self.n];
        for (i, label) in self.row_labels.iter().enumerate() {
            match *label {
                Label::Column(j) => x[j] = self.beta[i],
                Label::Row(r) => y[r] = self.beta[i],
            }
        }
        for (j, label) in self.col_labels.iter().enumerate() {
            match *label {
                Label::Column(c) => u[c] = -self.gamma[j],
                Label::Row(r) => v[r] = -self.gamma[j],
            }
        }
        CanonicalSolution {
            x,
            y,
            v,
            u,
            f: -self.delta,
            g: -self.delta,
        }
    }

    /// Plain-text grid `alpha | beta` over `gamma | delta` with 17 significant digits.
    pub fn to_grid_text(&self) -> String {
        let mut out = String::new();
        let num = |x: f64| format!("{:>24.16e}", x);
        for i in 0..self.m {
            for j in 0..self.n {
                out.push_str(&num(self.alpha(i, j)));
            }
            let _ = writeln!(out, " |{}", num(self.beta[i]));
        }
        let width = 24 * self.n + 26;
        let _ = writeln!(out, "{}", "-".repeat(width));
        for j in 0..self.n {
            out.push_str(&num(self.gamma[j]));
        }
        let _ = writeln!(out, " |{}", num(self.delta));
        out
    }

    /// Largest componentwise difference in `alpha`, `beta`, `gamma` and `delta`.
    pub fn max_abs_diff(&self, other: &Tableau) -> f64 {
        let pairs = self
            .alpha
            .iter()
            .zip(&other.alpha)
            .chain(self.beta.iter().zip(&other.beta))
            .chain(self.gamma.iter().zip(&other.gamma))
            .chain(std::iter::once((&self.delta, &other.delta)));
        pairs.map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn same_shape(&self, other: &Tableau) -> bool {
        self.m == other.m && self.n == other.n
    }
}
